//! Concrete transitive systems on graphs.
//!
//! | mode                   | ground set | component                                    |
//! |------------------------|------------|----------------------------------------------|
//! | `connected`            | vertices   | `G[X]` connected (arcs read as edges)        |
//! | `global-k-edge`        | vertices   | pairwise `λ(u,v;G) ≥ k`                      |
//! | `global-k-vertex`      | vertices   | `|X| ≥ k`, pairwise `κ(u,v;G) ≥ k`           |
//! | `induced-k-edge`       | vertices   | `G[X]` k-edge-connected                      |
//! | `induced-k-vertex`     | vertices   | `|X| ≥ k`, pairwise `κ(u,v;G[X]) ≥ k`        |
//! | `edge-induced-k-edge`  | edges      | `G[F]` k-edge-connected                      |
//! | `edge-induced-k-vertex`| edges      | `|V(F)| ≥ k`, pairwise `κ(u,v;G[F]) ≥ k`     |
//!
//! All but `connected` are realised as meta-weight systems; the global modes
//! additionally precompute an auxiliary graph joining every pair that is
//! `k`-connected in both directions.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::flow::{EdgeCoefficients, MetaWeightSystem};
use crate::graph::MixedGraph;
use crate::system::{ElementSet, TransitiveSystem, VolumeFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemMode {
    Connected,
    GlobalEdge,
    GlobalVertex,
    InducedEdge,
    InducedVertex,
    EdgeInducedEdge,
    EdgeInducedVertex,
}

impl SystemMode {
    pub const ALL: [SystemMode; 7] = [
        SystemMode::Connected,
        SystemMode::GlobalEdge,
        SystemMode::GlobalVertex,
        SystemMode::InducedEdge,
        SystemMode::InducedVertex,
        SystemMode::EdgeInducedEdge,
        SystemMode::EdgeInducedVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SystemMode::Connected => "connected",
            SystemMode::GlobalEdge => "global-k-edge",
            SystemMode::GlobalVertex => "global-k-vertex",
            SystemMode::InducedEdge => "induced-k-edge",
            SystemMode::InducedVertex => "induced-k-vertex",
            SystemMode::EdgeInducedEdge => "edge-induced-k-edge",
            SystemMode::EdgeInducedVertex => "edge-induced-k-vertex",
        }
    }

    /// Whether components are edge sets rather than vertex sets.
    pub fn edge_ground(self) -> bool {
        matches!(self, SystemMode::EdgeInducedEdge | SystemMode::EdgeInducedVertex)
    }

    pub fn vertex_connectivity(self) -> bool {
        matches!(
            self,
            SystemMode::GlobalVertex | SystemMode::InducedVertex | SystemMode::EdgeInducedVertex
        )
    }
}

impl fmt::Display for SystemMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SystemMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown mode `{s}`")))
    }
}

/// Limits on the exponential parts of the k-vertex modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoreGuard {
    pub max_k: u64,
    pub max_cores: u64,
}

impl Default for CoreGuard {
    fn default() -> Self {
        CoreGuard {
            max_k: 3,
            max_cores: 1_000_000,
        }
    }
}

impl CoreGuard {
    pub fn unlimited() -> Self {
        CoreGuard {
            max_k: u64::MAX,
            max_cores: u64::MAX,
        }
    }

    fn check(&self, k: u64, ground: usize) -> Result<()> {
        if k > self.max_k {
            return Err(Error::Guard(format!(
                "k = {k} exceeds the k-vertex limit {}",
                self.max_k
            )));
        }
        let cores = binomial(ground as u64, k.max(1));
        if cores > self.max_cores {
            return Err(Error::Guard(format!(
                "{cores} candidate cores exceed the budget {}",
                self.max_cores
            )));
        }
        Ok(())
    }
}

/// `C(n, r)`, saturating.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Connected induced subgraphs, answered by graph search.
#[derive(Debug, Clone)]
pub struct CisSystem {
    neighbors: Vec<ElementSet>,
}

impl CisSystem {
    pub fn new(graph: &MixedGraph) -> Self {
        CisSystem {
            neighbors: graph.undirected_neighbors(),
        }
    }

    fn reach(&self, start: usize, within: &ElementSet) -> ElementSet {
        let mut seen = ElementSet::singleton(within.capacity(), start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.neighbors[v].intersection(within).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }
}

impl TransitiveSystem for CisSystem {
    fn ground_size(&self) -> usize {
        self.neighbors.len()
    }

    fn maximal_containing(&self, x: &ElementSet, within: &ElementSet) -> Option<ElementSet> {
        let start = x.first()?;
        if !x.is_subset(within) {
            return None;
        }
        let comp = self.reach(start, within);
        x.is_subset(&comp).then_some(comp)
    }

    fn maximal_components(&self, within: &ElementSet) -> Vec<ElementSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach(v, within);
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    fn size_hint(&self, within: &ElementSet) -> usize {
        within.len()
    }
}

/// Vertex sets that are pairwise `k`-edge- or `k`-vertex-connected in the
/// whole graph, answered from a precomputed auxiliary graph.
#[derive(Debug, Clone)]
pub struct GlobalSystem {
    aux: Vec<ElementSet>,
    vertex: bool,
    k: u64,
}

impl GlobalSystem {
    pub fn new(graph: &MixedGraph, k: u64, vertex: bool, guard: CoreGuard) -> Result<Self> {
        if vertex {
            guard.check(k, graph.n())?;
        }
        let sys = global_weights(graph, k, vertex)?;
        let n = graph.n();
        let all = ElementSet::full(n);
        let span = sys.span(&all);
        let mut aux = vec![ElementSet::empty(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if sys.mu_reaches_k(&span, u, v) && sys.mu_reaches_k(&span, v, u) {
                    aux[u].insert(v);
                    aux[v].insert(u);
                }
            }
        }
        Ok(GlobalSystem { aux, vertex, k })
    }

    /// Adjacency rows of the auxiliary graph.
    pub fn auxiliary(&self) -> &[ElementSet] {
        &self.aux
    }

    fn is_clique(&self, x: &ElementSet) -> bool {
        x.iter().all(|u| {
            let mut rest = x.clone();
            rest.remove(u);
            rest.is_subset(&self.aux[u])
        })
    }

    fn min_core(&self) -> usize {
        (self.k as usize).max(1)
    }

    fn grow_clique(&self, x: &ElementSet, within: &ElementSet) -> ElementSet {
        let mut z = x.clone();
        let mut common = within.clone();
        for u in x.iter() {
            common.intersect_with(&self.aux[u]);
        }
        while let Some(v) = common.first() {
            z.insert(v);
            common.intersect_with(&self.aux[v]);
        }
        z
    }

    fn clique_class(&self, v: usize, within: &ElementSet) -> ElementSet {
        let mut c = self.aux[v].intersection(within);
        c.insert(v);
        c
    }
}

impl TransitiveSystem for GlobalSystem {
    fn ground_size(&self) -> usize {
        self.aux.len()
    }

    fn maximal_containing(&self, x: &ElementSet, within: &ElementSet) -> Option<ElementSet> {
        if x.is_empty() || !x.is_subset(within) || !self.is_clique(x) {
            return None;
        }
        if self.vertex {
            if x.len() < self.k as usize {
                return None;
            }
            Some(self.grow_clique(x, within))
        } else {
            Some(self.clique_class(x.first()?, within))
        }
    }

    fn maximal_components(&self, within: &ElementSet) -> Vec<ElementSet> {
        if !self.vertex {
            let mut left = within.clone();
            let mut out = Vec::new();
            while let Some(v) = left.first() {
                let c = self.clique_class(v, within);
                left.difference_with(&c);
                out.push(c);
            }
            return out;
        }
        let members = within.to_vec();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for seed in members.into_iter().combinations(self.min_core()) {
            let z = ElementSet::from_indices(within.capacity(), seed);
            if !self.is_clique(&z) {
                continue;
            }
            let c = self.grow_clique(&z, within);
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        out.sort();
        out
    }

    fn size_hint(&self, within: &ElementSet) -> usize {
        if self.vertex {
            binomial(within.len() as u64, self.min_core() as u64) as usize
        } else {
            within.len()
        }
    }
}

/// Every coefficient 1; `w(v) = k` for edge connectivity, `1` for vertex
/// connectivity. `μ` then measures connectivity in the whole graph.
pub fn global_weights(graph: &MixedGraph, k: u64, vertex: bool) -> Result<MetaWeightSystem> {
    let w = if vertex { 1 } else { k };
    MetaWeightSystem::uniform(
        graph.clone(),
        w,
        1,
        EdgeCoefficients::uniform(1),
        k,
        MetaWeightSystem::vertex_ground(graph.n()),
    )
}

/// `α = 1`, all other coefficients 0, over `Λ = V`: `μ` measures
/// connectivity inside `G[X]`.
pub fn induced_weights(graph: &MixedGraph, k: u64, vertex: bool) -> Result<MetaWeightSystem> {
    let w = if vertex { 1 } else { k };
    MetaWeightSystem::uniform(
        graph.clone(),
        w,
        0,
        EdgeCoefficients::inside_only(),
        k,
        MetaWeightSystem::vertex_ground(graph.n()),
    )
}

/// All coefficients 0 over `Λ = E`: `μ` measures connectivity inside the
/// subgraph formed by the chosen edges.
pub fn edge_induced_system(graph: &MixedGraph, k: u64, vertex: bool) -> Result<MetaWeightSystem> {
    let w = if vertex { 1 } else { k };
    MetaWeightSystem::uniform(
        graph.clone(),
        w,
        0,
        EdgeCoefficients::uniform(0),
        k,
        MetaWeightSystem::edge_ground(graph.m()),
    )
}

/// `C_k(X;Y)`: the unique maximal component `Z` with `X ⊆ Z ⊆ Y`, found by
/// repeatedly discarding everything attached to a vertex that some vertex
/// of `V(X)` cannot reach with connectivity `k`.
///
/// Requires `∅ ≠ X ⊆ Y` and `ω_X(V(X)) ≥ k`.
pub fn maximal_in(sys: &MetaWeightSystem, x: &ElementSet, y: &ElementSet) -> Option<ElementSet> {
    debug_assert!(!x.is_empty() && x.is_subset(y));
    debug_assert!(sys.vertex_mass_scaled(x) >= sys.k_scaled());
    let graph = sys.graph();
    let x_vertices = sys.vertices_of(x);
    let seeds = x_vertices.to_vec();
    let pairs_hold = |span: &crate::flow::Span| {
        seeds.iter().all(|&u| {
            seeds
                .iter()
                .all(|&v| u == v || sys.mu_reaches_k(span, u, v))
        })
    };
    if !pairs_hold(&sys.span(y)) {
        return None;
    }
    let mut current = y.clone();
    loop {
        let span = sys.span(&current);
        let weak: Vec<usize> = span
            .vertices
            .difference(&x_vertices)
            .iter()
            .filter(|&t| {
                sys.weak_vertex_scaled(&x_vertices, t, &span, sys.k_scaled(), false)
                    || sys.weak_vertex_scaled(&x_vertices, t, &span, sys.k_scaled(), true)
            })
            .collect();
        if weak.is_empty() {
            break;
        }
        for t in weak {
            if let Some(i) = sys.ground_index(crate::flow::GroundElement::Vertex(t)) {
                if !x.contains(i) {
                    current.remove(i);
                }
            }
            for &e in graph.incident(t) {
                if let Some(i) = sys.ground_index(crate::flow::GroundElement::Edge(e)) {
                    if !x.contains(i) {
                        current.remove(i);
                    }
                }
            }
        }
    }
    pairs_hold(&sys.span(&current)).then_some(current)
}

/// How candidate cores are generated for a meta-weight system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreFamily {
    /// Every single ground element.
    Singletons,
    /// Every subset of the given size.
    Subsets(usize),
}

impl CoreFamily {
    fn for_mode(mode: SystemMode, k: u64) -> CoreFamily {
        if mode.vertex_connectivity() && k >= 2 {
            CoreFamily::Subsets(k as usize)
        } else {
            CoreFamily::Singletons
        }
    }

    fn seeds(self, within: &ElementSet) -> Box<dyn Iterator<Item = ElementSet> + '_> {
        let cap = within.capacity();
        match self {
            CoreFamily::Singletons => Box::new(within.iter().map(move |i| ElementSet::singleton(cap, i))),
            CoreFamily::Subsets(r) => Box::new(
                within
                    .to_vec()
                    .into_iter()
                    .combinations(r)
                    .map(move |c| ElementSet::from_indices(cap, c)),
            ),
        }
    }

    fn count(self, size: usize) -> u64 {
        match self {
            CoreFamily::Singletons => size as u64,
            CoreFamily::Subsets(r) => binomial(size as u64, r as u64),
        }
    }
}

/// Candidate cores of `Y` for `mode`.
pub fn k_cores(mode: SystemMode, k: u64, y: &ElementSet, guard: CoreGuard) -> Result<Vec<ElementSet>> {
    if y.is_empty() {
        return Err(Error::EmptySet);
    }
    let family = CoreFamily::for_mode(mode, k);
    if mode.vertex_connectivity() {
        guard.check(k, y.len())?;
    }
    Ok(family.seeds(y).collect())
}

/// `𝒞_max(Y)` as the distinct non-empty `C_k(Z;Y)` over cores `Z` with
/// `ω_Z(V(Z)) ≥ k`, canonically sorted.
pub fn core_l2(sys: &MetaWeightSystem, family: CoreFamily, y: &ElementSet) -> Vec<ElementSet> {
    let mut seen = HashSet::with_capacity(family.count(y.len()).min(1 << 16) as usize);
    let mut out = Vec::new();
    for z in family.seeds(y) {
        if sys.vertex_mass_scaled(&z) < sys.k_scaled() {
            continue;
        }
        if let Some(c) = maximal_in(sys, &z, y) {
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
    }
    out.sort();
    out
}

/// Oracles for a meta-weight system with a fixed core family.
#[derive(Debug, Clone)]
pub struct MetaSystem {
    sys: MetaWeightSystem,
    cores: CoreFamily,
}

impl MetaSystem {
    pub fn new(sys: MetaWeightSystem, cores: CoreFamily) -> Self {
        MetaSystem { sys, cores }
    }

    pub fn weights(&self) -> &MetaWeightSystem {
        &self.sys
    }
}

impl TransitiveSystem for MetaSystem {
    fn ground_size(&self) -> usize {
        self.sys.ground_size()
    }

    fn maximal_containing(&self, x: &ElementSet, within: &ElementSet) -> Option<ElementSet> {
        if x.is_empty() || !x.is_subset(within) || self.sys.vertex_mass_scaled(x) < self.sys.k_scaled() {
            return None;
        }
        maximal_in(&self.sys, x, within)
    }

    fn maximal_components(&self, within: &ElementSet) -> Vec<ElementSet> {
        if within.is_empty() {
            return Vec::new();
        }
        core_l2(&self.sys, self.cores, within)
    }

    fn size_hint(&self, within: &ElementSet) -> usize {
        self.cores.count(within.len()) as usize
    }
}

/// Oracles for `mode` on `graph`.
pub fn build_system(
    graph: &MixedGraph,
    mode: SystemMode,
    k: u64,
    guard: CoreGuard,
) -> Result<Arc<dyn TransitiveSystem>> {
    let vertex = mode.vertex_connectivity();
    let ground = if mode.edge_ground() { graph.m() } else { graph.n() };
    if ground == 0 {
        return Err(Error::Invalid(format!("mode {mode} needs a non-empty ground set")));
    }
    if vertex {
        guard.check(k, ground)?;
    }
    Ok(match mode {
        SystemMode::Connected => Arc::new(CisSystem::new(graph)),
        SystemMode::GlobalEdge | SystemMode::GlobalVertex => {
            Arc::new(GlobalSystem::new(graph, k, vertex, guard)?)
        }
        SystemMode::InducedEdge | SystemMode::InducedVertex => Arc::new(MetaSystem::new(
            induced_weights(graph, k, vertex)?,
            CoreFamily::for_mode(mode, k),
        )),
        SystemMode::EdgeInducedEdge | SystemMode::EdgeInducedVertex => Arc::new(MetaSystem::new(
            edge_induced_system(graph, k, vertex)?,
            CoreFamily::for_mode(mode, k),
        )),
    })
}

/// Positive exactly on edge sets touching every vertex of the graph.
#[derive(Debug, Clone)]
pub struct SpanningVolume {
    graph: MixedGraph,
}

pub fn spanning_volume(graph: &MixedGraph) -> SpanningVolume {
    SpanningVolume {
        graph: graph.clone(),
    }
}

impl VolumeFunction for SpanningVolume {
    fn eval_positive(&self, x: &ElementSet) -> bool {
        // |V(X)| - |V(G)| + 1 > 0
        self.graph.edge_vertices(x).len() == self.graph.n()
    }
}
