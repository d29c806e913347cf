//! Oracle behaviour of the graph systems against exhaustive membership.

use std::sync::Arc;

use connenum::brute::{brute_components, membership};
use connenum::random::{mixed_graph, undirected_graph};
use connenum::systems::{binomial, GlobalSystem};
use connenum::{build_system, enumerate_components, CoreGuard, ElementSet, MixedGraph, SystemMode, TransitiveSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, mode: SystemMode) -> MixedGraph {
    if mode.edge_ground() {
        let (n, m) = (rng.gen_range(2..=6), rng.gen_range(1..=8));
        mixed_graph(rng, n, m, 0.3)
    } else {
        let (n, m) = (rng.gen_range(1..=6), rng.gen_range(0..=10));
        mixed_graph(rng, n, m, 0.3)
    }
}

fn ground(g: &MixedGraph, mode: SystemMode) -> usize {
    if mode.edge_ground() {
        g.m()
    } else {
        g.n()
    }
}

fn maximal_inside(members: &[ElementSet], y: &ElementSet) -> Vec<ElementSet> {
    let inside: Vec<&ElementSet> = members.iter().filter(|c| c.is_subset(y)).collect();
    let mut out: Vec<ElementSet> = inside
        .iter()
        .filter(|c| !inside.iter().any(|d| d.is_proper_superset(c)))
        .map(|c| (*c).clone())
        .collect();
    out.sort();
    out
}

#[test]
fn oracles_match_exhaustive_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for mode in SystemMode::ALL {
        for _ in 0..25 {
            let g = random_graph(&mut rng, mode);
            let size = ground(&g, mode);
            if size == 0 {
                continue;
            }
            let k = rng.gen_range(0..=3);
            let sys = build_system(&g, mode, k, CoreGuard::default()).unwrap();
            let members = brute_components(membership(&g, mode, k).unwrap(), size).unwrap();
            for _ in 0..6 {
                let y = ElementSet::from_indices(size, (0..size).filter(|_| rng.gen_bool(0.7)));
                let want = maximal_inside(&members, &y);
                assert_eq!(sys.maximal_components(&y), want, "{mode} k={k} l2({y:?}) on {g:?}");
                assert!(want.len() <= sys.size_hint(&y));
                // l1 on component seeds and on arbitrary subsets of y.
                for x in members.iter().filter(|c| c.is_subset(&y)) {
                    let expect = want.iter().find(|c| x.is_subset(c)).cloned();
                    assert_eq!(sys.maximal_containing(x, &y), expect, "{mode} k={k} l1({x:?},{y:?})");
                }
            }
        }
    }
}

#[test]
fn size_hints_follow_the_core_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for mode in SystemMode::ALL {
        let g = random_graph(&mut rng, mode);
        let size = ground(&g, mode);
        if size == 0 {
            continue;
        }
        let k = 2;
        let sys = build_system(&g, mode, k, CoreGuard::default()).unwrap();
        let mut y = ElementSet::full(size);
        let mut last = sys.size_hint(&y);
        let bound = if mode.vertex_connectivity() {
            binomial(size as u64, k) as usize
        } else {
            size
        };
        assert!(last <= bound.max(size));
        while let Some(v) = y.first() {
            y.remove(v);
            let hint = sys.size_hint(&y);
            assert!(hint <= last, "size hint grew for {mode}");
            last = hint;
        }
    }
}

#[test]
fn union_closure_of_sampled_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut checked = 0;
    for mode in SystemMode::ALL {
        for _ in 0..10 {
            let g = random_graph(&mut rng, mode);
            let size = ground(&g, mode);
            if size == 0 {
                continue;
            }
            let k = rng.gen_range(0..=3);
            let pred = membership(&g, mode, k).unwrap();
            let members = brute_components(&pred, size).unwrap();
            for _ in 0..40 {
                if members.len() < 2 {
                    break;
                }
                let a = &members[rng.gen_range(0..members.len())];
                let b = &members[rng.gen_range(0..members.len())];
                let meet = a.intersection(b);
                let shared = members.iter().any(|z| !z.is_empty() && z.is_subset(&meet));
                if shared {
                    checked += 1;
                    assert!(pred(&a.union(b)), "{mode} k={k}: {a:?} ∪ {b:?} on {g:?}");
                }
            }
        }
    }
    assert!(checked > 200);
}

#[test]
fn auxiliary_edge_graph_is_a_union_of_cliques() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..50 {
        let (n, m) = (rng.gen_range(2..=7), rng.gen_range(0..=14));
        let g = mixed_graph(&mut rng, n, m, 0.3);
        let sys = GlobalSystem::new(&g, rng.gen_range(1..=3), false, CoreGuard::default()).unwrap();
        let aux = sys.auxiliary();
        for u in 0..n {
            for v in aux[u].iter() {
                for w in aux[v].iter() {
                    assert!(w == u || aux[u].contains(w));
                }
            }
        }
    }
}

#[test]
fn one_edge_connected_induced_sets_are_connected_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..40 {
        let (n, m) = (rng.gen_range(1..=7), rng.gen_range(0..=12));
        let g = undirected_graph(&mut rng, n, m);
        let collect = |mode| {
            let sys = build_system(&g, mode, 1, CoreGuard::default()).unwrap();
            let mut v: Vec<ElementSet> = enumerate_components(sys, None).unwrap().collect();
            v.sort();
            v
        };
        assert_eq!(collect(SystemMode::InducedEdge), collect(SystemMode::Connected));
    }
}

#[test]
fn vertex_modes_respect_the_guard() {
    let g = connenum::fixtures::complete(6);
    let tight = CoreGuard { max_k: 3, max_cores: 10 };
    assert!(build_system(&g, SystemMode::InducedVertex, 4, CoreGuard::default()).is_err());
    assert!(build_system(&g, SystemMode::InducedVertex, 3, tight).is_err());
    assert!(build_system(&g, SystemMode::InducedVertex, 3, CoreGuard::unlimited()).is_ok());
    let sys: Arc<dyn TransitiveSystem> = build_system(&g, SystemMode::InducedEdge, 9, CoreGuard::default()).unwrap();
    assert_eq!(sys.ground_size(), 6);
}
