//! Exhaustive reference implementations. Everything here is exponential
//! and guarded by hard size limits; none of it shares code with the
//! oracles it is used to check.

use itertools::Itertools;

use crate::enumerate::SolutionRecord;
use crate::error::{Error, Result};
use crate::flow::MetaWeightSystem;
use crate::graph::MixedGraph;
use crate::system::{ElementSet, ItemSet};
use crate::systems::SystemMode;

pub const MAX_COMPONENT_GROUND: usize = 20;
pub const MAX_SOLUTION_GROUND: usize = 12;
pub const MAX_CUT_VERTICES: usize = 9;
pub const MAX_GRAPH_VERTICES: usize = 8;

fn guard(what: &str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::Guard(format!("{what}: size {size} exceeds limit {limit}")));
    }
    Ok(())
}

/// Every non-empty subset of `0..ground` accepted by `pred`, canonically
/// sorted.
pub fn brute_components<P>(pred: P, ground: usize) -> Result<Vec<ElementSet>>
where
    P: Fn(&ElementSet) -> bool,
{
    guard("brute_components", ground, MAX_COMPONENT_GROUND)?;
    let mut out: Vec<ElementSet> = (1u64..1 << ground)
        .map(|mask| ElementSet::from_indices(ground, (0..ground).filter(|&i| mask >> i & 1 == 1)))
        .filter(|x| pred(x))
        .collect();
    out.sort();
    Ok(out)
}

/// Components `X` such that every component strictly containing `X` has a
/// strictly smaller common item set.
pub fn brute_solutions<P>(sigma: &[ItemSet], q: usize, pred: P) -> Result<Vec<SolutionRecord>>
where
    P: Fn(&ElementSet) -> bool,
{
    let n = sigma.len();
    guard("brute_solutions", n, MAX_SOLUTION_GROUND)?;
    let common = |x: &ElementSet| {
        let mut acc = ItemSet::full(q);
        for v in x.iter() {
            acc.intersect_with(&sigma[v]);
        }
        acc
    };
    let comps: Vec<(ElementSet, ItemSet)> = brute_components(pred, n)?
        .into_iter()
        .map(|c| {
            let items = common(&c);
            (c, items)
        })
        .collect();
    Ok(comps
        .iter()
        .filter(|(x, ix)| {
            comps
                .iter()
                .all(|(y, iy)| !(y.is_proper_superset(x) && iy == ix))
        })
        .map(|(x, ix)| SolutionRecord {
            elements: x.clone(),
            items: ix.clone(),
            k: ix.min_item(),
        })
        .collect())
}

/// Whether `t` is reachable from `s` using live vertices and live edges,
/// arcs only forwards.
fn reachable(g: &MixedGraph, live_v: &[bool], live_e: &[bool], s: usize, t: usize) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(v) = stack.pop() {
        if v == t {
            return true;
        }
        for &id in g.incident(v) {
            if !live_e[id] {
                continue;
            }
            let e = g.edge(id);
            if e.directed && e.u != v {
                continue;
            }
            let w = e.other(v);
            if live_v[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Smallest number of removable items (edges, and vertices other than
/// `s`, `t` when `with_vertices`) whose removal leaves no `s -> t` path,
/// restricted to the subgraph on `vertices`/`edges`.
fn min_separator(
    g: &MixedGraph,
    vertices: &ElementSet,
    edges: &ElementSet,
    s: usize,
    t: usize,
    with_vertices: bool,
) -> u64 {
    let mut live_v: Vec<bool> = (0..g.n()).map(|v| vertices.contains(v)).collect();
    let mut live_e: Vec<bool> = (0..g.m())
        .map(|e| {
            let ed = g.edge(e);
            edges.contains(e) && vertices.contains(ed.u) && vertices.contains(ed.v)
        })
        .collect();
    // Removable items: edges as `Ok(id)`, vertices as `Err(v)`.
    let mut pool: Vec<std::result::Result<usize, usize>> =
        (0..g.m()).filter(|&e| live_e[e]).map(Ok).collect();
    if with_vertices {
        pool.extend(vertices.iter().filter(|&v| v != s && v != t).map(Err));
    }
    for size in 0..=pool.len() {
        for combo in pool.iter().combinations(size) {
            for item in &combo {
                match **item {
                    Ok(e) => live_e[e] = false,
                    Err(v) => live_v[v] = false,
                }
            }
            let cut = !reachable(g, &live_v, &live_e, s, t);
            for item in &combo {
                match **item {
                    Ok(e) => live_e[e] = true,
                    Err(v) => live_v[v] = true,
                }
            }
            if cut {
                return size as u64;
            }
        }
    }
    unreachable!("removing every edge disconnects distinct vertices")
}

fn check_pair(g: &MixedGraph, s: usize, t: usize) -> Result<()> {
    guard("brute connectivity", g.n(), MAX_GRAPH_VERTICES)?;
    if s >= g.n() || t >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: s.max(t),
            n: g.n(),
        });
    }
    if s == t {
        return Err(Error::SameTerminals(s));
    }
    Ok(())
}

/// `λ(s,t;G)` by searching edge subsets in order of size.
pub fn brute_lambda(g: &MixedGraph, s: usize, t: usize) -> Result<u64> {
    check_pair(g, s, t)?;
    Ok(min_separator(g, &ElementSet::full(g.n()), &ElementSet::full(g.m()), s, t, false))
}

/// `κ(s,t;G)`: edges and inner vertices may both be removed.
pub fn brute_kappa(g: &MixedGraph, s: usize, t: usize) -> Result<u64> {
    check_pair(g, s, t)?;
    Ok(min_separator(g, &ElementSet::full(g.n()), &ElementSet::full(g.m()), s, t, true))
}

/// `λ` inside the subgraph spanned by `vertices` and the `edges` among them.
pub fn brute_lambda_in(g: &MixedGraph, vertices: &ElementSet, edges: &ElementSet, s: usize, t: usize) -> Result<u64> {
    check_pair(g, s, t)?;
    Ok(min_separator(g, vertices, edges, s, t, false))
}

/// `κ` inside the subgraph spanned by `vertices` and the `edges` among them.
pub fn brute_kappa_in(g: &MixedGraph, vertices: &ElementSet, edges: &ElementSet, s: usize, t: usize) -> Result<u64> {
    check_pair(g, s, t)?;
    Ok(min_separator(g, vertices, edges, s, t, true))
}

/// `μ(s,t;X)` in scaled units, as the minimum of `ω_X(ε(S,T))` over every
/// assignment of the other vertices to `S`, `T` or `R`.
pub fn brute_mu(sys: &MetaWeightSystem, s: usize, t: usize, x: &ElementSet) -> Result<u64> {
    let n = sys.graph().n();
    guard("brute_mu", n, MAX_CUT_VERTICES)?;
    if s == t {
        return Err(Error::SameTerminals(s));
    }
    let span = sys.span(x);
    let others: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
    let mut best = u64::MAX;
    let total = 3usize.pow(others.len() as u32);
    for code in 0..total {
        let (mut src, mut snk, mut byp) = (vec![s], vec![t], Vec::new());
        let mut c = code;
        for &v in &others {
            match c % 3 {
                0 => src.push(v),
                1 => snk.push(v),
                _ => byp.push(v),
            }
            c /= 3;
        }
        best = best.min(sys.cut_weight_scaled(&span, &src, &snk, &byp));
    }
    Ok(best)
}

/// A predicate on element sets.
pub type Membership = Box<dyn Fn(&ElementSet) -> bool>;

/// Membership test for `mode` written directly in terms of `λ`/`κ` of the
/// relevant (sub)graph.
pub fn membership(g: &MixedGraph, mode: SystemMode, k: u64) -> Result<Membership> {
    guard("membership", g.n(), MAX_GRAPH_VERTICES)?;
    let g = g.clone();
    let all_v = ElementSet::full(g.n());
    let all_e = ElementSet::full(g.m());
    let pairwise = move |g: &MixedGraph, vs: &ElementSet, es: &ElementSet, vertex: bool| {
        let list = vs.to_vec();
        list.iter().all(|&u| {
            list.iter().all(|&v| {
                u == v || {
                    let c = if vertex {
                        brute_kappa_in(g, vs, es, u, v)
                    } else {
                        brute_lambda_in(g, vs, es, u, v)
                    };
                    c.expect("guarded") >= k
                }
            })
        })
    };
    Ok(match mode {
        SystemMode::Connected => Box::new(move |x: &ElementSet| {
            let Some(start) = x.first() else { return false };
            let mut seen = ElementSet::singleton(g.n(), start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for e in g.edges() {
                    let w = if e.u == v {
                        e.v
                    } else if e.v == v {
                        e.u
                    } else {
                        continue;
                    };
                    if x.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen == *x
        }),
        SystemMode::GlobalEdge | SystemMode::GlobalVertex => {
            let vertex = mode == SystemMode::GlobalVertex;
            let n = g.n();
            let table: Vec<Vec<u64>> = (0..n)
                .map(|u| {
                    (0..n)
                        .map(|v| if u == v { 0 } else { min_separator(&g, &all_v, &all_e, u, v, vertex) })
                        .collect()
                })
                .collect();
            Box::new(move |x: &ElementSet| {
                let size = x.len() as u64;
                if size == 0 || (vertex && size < k) {
                    return false;
                }
                x.iter().all(|u| x.iter().all(|v| u == v || table[u][v] >= k))
            })
        }
        SystemMode::InducedEdge | SystemMode::InducedVertex => {
            let vertex = mode == SystemMode::InducedVertex;
            Box::new(move |x: &ElementSet| {
                let size = x.len() as u64;
                if size == 0 || (vertex && size < k) {
                    return false;
                }
                pairwise(&g, x, &all_e, vertex)
            })
        }
        SystemMode::EdgeInducedEdge | SystemMode::EdgeInducedVertex => {
            let vertex = mode == SystemMode::EdgeInducedVertex;
            Box::new(move |f: &ElementSet| {
                if f.is_empty() {
                    return false;
                }
                let vs = g.edge_vertices(f);
                if vertex && (vs.len() as u64) < k {
                    return false;
                }
                pairwise(&g, &vs, f, vertex)
            })
        }
    })
}
