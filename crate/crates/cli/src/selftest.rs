//! Randomised comparison of the enumerators and cut code with the
//! exhaustive references.

use std::collections::HashSet;

use connenum::brute::{brute_components, brute_mu, brute_solutions, membership};
use connenum::random::{item_sets, mixed_graph};
use connenum::systems::{edge_induced_system, global_weights, induced_weights};
use connenum::{
    build_system, enumerate_components, enumerate_solutions, CoreGuard, ElementSet, Instance, MixedGraph,
    MetaWeightSystem, Result, SolutionRecord, SystemMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Tally {
    pub solutions: (usize, usize),
    pub components: (usize, usize),
    pub cuts: (usize, usize),
}

impl Tally {
    pub fn passed(&self) -> bool {
        [self.solutions, self.components, self.cuts].iter().all(|(ok, all)| ok == all)
    }
}

fn random_graph(rng: &mut ChaCha8Rng, mode: SystemMode) -> MixedGraph {
    if mode.edge_ground() {
        let (n, m) = (rng.gen_range(2..=6), rng.gen_range(1..=8));
        mixed_graph(rng, n, m, 0.3)
    } else {
        let (n, m) = (rng.gen_range(1..=7), rng.gen_range(0..=12));
        mixed_graph(rng, n, m, 0.3)
    }
}

fn ground_size(g: &MixedGraph, mode: SystemMode) -> usize {
    if mode.edge_ground() {
        g.m()
    } else {
        g.n()
    }
}

fn weights(g: &MixedGraph, mode: SystemMode, k: u64) -> Result<MetaWeightSystem> {
    let vertex = mode.vertex_connectivity();
    match mode {
        SystemMode::Connected | SystemMode::InducedEdge | SystemMode::InducedVertex => induced_weights(g, k, vertex),
        SystemMode::GlobalEdge | SystemMode::GlobalVertex => global_weights(g, k, vertex),
        SystemMode::EdgeInducedEdge | SystemMode::EdgeInducedVertex => edge_induced_system(g, k, vertex),
    }
}

fn solutions_agree(g: &MixedGraph, mode: SystemMode, k: u64, rng: &mut ChaCha8Rng) -> Result<bool> {
    let n = ground_size(g, mode);
    let q = rng.gen_range(1..=4);
    let sigma = item_sets(rng, n, q, 0.6);
    let inst = Instance::new(build_system(g, mode, k, CoreGuard::default())?, q, sigma.clone())?;
    let mut got: Vec<SolutionRecord> = enumerate_solutions(&inst).collect();
    let mut want = brute_solutions(&sigma, q, membership(g, mode, k)?)?;
    let distinct: HashSet<&ElementSet> = got.iter().map(|r| &r.elements).collect();
    if distinct.len() != got.len() {
        return Ok(false);
    }
    got.sort_by(|a, b| a.elements.cmp(&b.elements));
    want.sort_by(|a, b| a.elements.cmp(&b.elements));
    Ok(got == want)
}

fn components_agree(g: &MixedGraph, mode: SystemMode, k: u64) -> Result<bool> {
    let size = ground_size(g, mode);
    let mut got: Vec<ElementSet> = enumerate_components(build_system(g, mode, k, CoreGuard::default())?, None)?.collect();
    let count = got.len();
    got.sort();
    got.dedup();
    Ok(got.len() == count && got == brute_components(membership(g, mode, k)?, size)?)
}

fn cuts_agree(g: &MixedGraph, mode: SystemMode, k: u64, rng: &mut ChaCha8Rng) -> Result<bool> {
    let sys = weights(g, mode, k)?;
    let size = sys.ground_size();
    let x = ElementSet::from_indices(size, (0..size).filter(|_| rng.gen_bool(0.6)));
    for s in 0..g.n() {
        for t in 0..g.n() {
            if s != t {
                let flow = sys.min_cut_value(s, t, &x)?;
                let cut = num_rational::Ratio::new(brute_mu(&sys, s, t, &x)?, sys.scale());
                if flow != cut {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Runs `trials` random cases of each suite for `mode`.
pub fn run(seed: u64, trials: usize, mode: SystemMode, k: u64) -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for _ in 0..trials {
        let g = random_graph(&mut rng, mode);
        if ground_size(&g, mode) == 0 {
            continue;
        }
        let bump = |slot: &mut (usize, usize), ok: bool| {
            slot.1 += 1;
            slot.0 += usize::from(ok);
        };
        bump(&mut tally.solutions, solutions_agree(&g, mode, k, &mut rng)?);
        bump(&mut tally.components, components_agree(&g, mode, k)?);
        bump(&mut tally.cuts, cuts_agree(&g, mode, k, &mut rng)?);
    }
    Ok(tally)
}
