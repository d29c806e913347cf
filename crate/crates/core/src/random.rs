//! Seeded random instances for property tests and the self-test harness.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::flow::{EdgeCoefficients, GroundElement, MetaWeightSystem};
use crate::graph::MixedGraph;
use crate::system::ItemSet;

/// `m` random edges on `n` vertices; each is an arc with probability
/// `arc_prob`. Parallel edges are allowed, self-loops are not.
pub fn mixed_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, arc_prob: f64) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    if n < 2 {
        return g;
    }
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        if rng.gen_bool(arc_prob) {
            g.add_arc(u, v).expect("distinct endpoints");
        } else {
            g.add_edge(u, v).expect("distinct endpoints");
        }
    }
    g
}

pub fn undirected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> MixedGraph {
    mixed_graph(rng, n, m, 0.0)
}

/// Each vertex receives each of the `q` items independently with
/// probability `density`.
pub fn item_sets<R: Rng + ?Sized>(rng: &mut R, n: usize, q: usize, density: f64) -> Vec<ItemSet> {
    (0..n)
        .map(|_| {
            let mut s = ItemSet::empty(q);
            for i in 1..=q {
                if rng.gen_bool(density) {
                    s.insert(i);
                }
            }
            s
        })
        .collect()
}

/// A random monotone meta-weight system: weights in `0..=3`, coefficients
/// in `{0, 1/2, 1}` ordered as the monotonicity conditions require, a random
/// ground set mixing vertices and edges, and `k` in `0..=4`.
pub fn monotone_system<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> MetaWeightSystem {
    let graph = mixed_graph(rng, n, m, 0.4);
    let (n, m) = (graph.n(), graph.m());
    let half = |i: u64| Ratio::new(i, 2);
    let vertex_weight = (0..n).map(|_| rng.gen_range(0..=3)).collect();
    let vertex_beta = (0..n).map(|_| half(rng.gen_range(0..=2))).collect();
    let edge_weight = (0..m).map(|_| rng.gen_range(0..=3)).collect();
    let coefficients = (0..m)
        .map(|_| {
            let beta = rng.gen_range(0..=2);
            let alpha = rng.gen_range(beta..=2);
            EdgeCoefficients {
                alpha: half(alpha),
                alpha_bar: half(rng.gen_range(beta..=alpha)),
                alpha_plus: half(rng.gen_range(beta..=alpha)),
                alpha_minus: half(rng.gen_range(beta..=alpha)),
                beta: half(beta),
            }
        })
        .collect();
    let mut ground: Vec<GroundElement> = (0..n)
        .map(GroundElement::Vertex)
        .chain((0..m).map(GroundElement::Edge))
        .filter(|_| rng.gen_bool(0.7))
        .collect();
    if ground.is_empty() {
        ground.push(GroundElement::Vertex(0));
    }
    ground.shuffle(rng);
    let k = rng.gen_range(0..=4);
    MetaWeightSystem::new(graph, vertex_weight, vertex_beta, edge_weight, coefficients, k, ground)
        .expect("coefficients are monotone by construction")
}
