//! Small hand-made instances used by tests, the self-test and the
//! acceptance suite.

use crate::graph::MixedGraph;

/// The four-vertex example: a triangle `v1 v2 v3` with a pendant `v4`
/// attached to `v3`. Vertex `v_i` has index `i - 1`.
pub fn example_graph() -> MixedGraph {
    MixedGraph::undirected(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid edges")
}

/// Items of the four-vertex example, over `q = 3`.
pub fn example_items() -> Vec<Vec<usize>> {
    vec![vec![1, 2, 3], vec![1, 3], vec![1, 2], vec![3]]
}

/// `copies` disjoint copies of the example. Copy `c` uses vertices
/// `4c..4c+4` and its own block of three items, so `q = 3 * copies`.
pub fn example_copies(copies: usize) -> (MixedGraph, Vec<Vec<usize>>, usize) {
    let mut g = MixedGraph::new(4 * copies);
    let mut items = Vec::with_capacity(4 * copies);
    for c in 0..copies {
        let base = 4 * c;
        for (u, v) in [(0, 1), (0, 2), (1, 2), (2, 3)] {
            g.add_edge(base + u, base + v).expect("valid edge");
        }
        items.extend(
            example_items()
                .into_iter()
                .map(|list| list.into_iter().map(|i| i + 3 * c).collect::<Vec<_>>()),
        );
    }
    (g, items, 3 * copies)
}

pub fn path(n: usize) -> MixedGraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    MixedGraph::undirected(n, &edges).expect("valid edges")
}

pub fn cycle(n: usize) -> MixedGraph {
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    MixedGraph::undirected(n, &edges).expect("valid edges")
}

pub fn complete(n: usize) -> MixedGraph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    MixedGraph::undirected(n, &edges).expect("valid edges")
}
