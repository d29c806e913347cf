//! Meta-weighted mixed graphs and their cut function.
//!
//! A [`MetaWeightSystem`] assigns every vertex and edge a weight that depends
//! on a subset `X` of the ground set `Λ`: elements of `X`, or touching
//! `V(X)`, keep more of their base weight than elements far from it. The cut
//! value `μ(s,t;X)` charges the edges from the source side to the sink side
//! plus every vertex left out of both sides, and is computed as a maximum
//! flow on a vertex-split network.
//!
//! Coefficients are rationals; at construction every weight is multiplied by
//! the common denominator so all flow arithmetic is on `u64`.

use std::collections::VecDeque;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;
use crate::system::ElementSet;

pub type Coefficient = Ratio<u64>;

/// Coefficients `(α, ᾱ, α⁺, α⁻, β)` of one edge. `ᾱ` only matters for
/// undirected edges, `α⁺`/`α⁻` only for arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeCoefficients {
    pub alpha: Coefficient,
    pub alpha_bar: Coefficient,
    pub alpha_plus: Coefficient,
    pub alpha_minus: Coefficient,
    pub beta: Coefficient,
}

impl EdgeCoefficients {
    pub fn uniform(c: u64) -> Self {
        let c = Ratio::from_integer(c);
        EdgeCoefficients {
            alpha: c,
            alpha_bar: c,
            alpha_plus: c,
            alpha_minus: c,
            beta: c,
        }
    }

    /// `α = 1`, everything else `0`: only edges with both ends in `V(X)`
    /// keep their weight.
    pub fn inside_only() -> Self {
        EdgeCoefficients {
            alpha: Ratio::from_integer(1),
            ..Self::uniform(0)
        }
    }
}

/// One member of the ground set `Λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroundElement {
    Vertex(usize),
    Edge(usize),
}

/// Either kind of graph element, as an argument to [`MetaWeightSystem::induced_weight`].
pub type Element = GroundElement;

#[derive(Debug, Clone, Copy)]
struct ScaledEdge {
    full: u64,
    alpha: u64,
    alpha_bar: u64,
    alpha_plus: u64,
    alpha_minus: u64,
    beta: u64,
}

/// `(M, w, γ, k, Λ)`.
#[derive(Debug, Clone)]
pub struct MetaWeightSystem {
    graph: MixedGraph,
    ground: Vec<GroundElement>,
    vertex_slot: Vec<Option<usize>>,
    edge_slot: Vec<Option<usize>>,
    k: u64,
    scale: u64,
    k_scaled: u64,
    vertex_full: Vec<u64>,
    vertex_beta: Vec<u64>,
    edges: Vec<ScaledEdge>,
    infinity: u64,
}

/// `V(X)` and `X ∩ E(M)` for a subset `X ⊆ Λ`.
#[derive(Debug, Clone)]
pub(crate) struct Span {
    pub vertices: ElementSet,
    pub edges: ElementSet,
}

fn check_unit(c: Coefficient, what: &str) -> Result<()> {
    if c > Ratio::from_integer(1) {
        return Err(Error::NonMonotoneCoefficients(format!("{what} exceeds 1")));
    }
    Ok(())
}

impl MetaWeightSystem {
    /// Builds a system, rejecting coefficient tuples that are not monotone.
    pub fn new(
        graph: MixedGraph,
        vertex_weight: Vec<u64>,
        vertex_beta: Vec<Coefficient>,
        edge_weight: Vec<u64>,
        edge_coefficients: Vec<EdgeCoefficients>,
        k: u64,
        ground: Vec<GroundElement>,
    ) -> Result<Self> {
        let n = graph.n();
        let m = graph.m();
        if vertex_weight.len() != n || vertex_beta.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: vertex_weight.len().min(vertex_beta.len()),
            });
        }
        if edge_weight.len() != m || edge_coefficients.len() != m {
            return Err(Error::SizeMismatch {
                expected: m,
                got: edge_weight.len().min(edge_coefficients.len()),
            });
        }
        for (v, &b) in vertex_beta.iter().enumerate() {
            check_unit(b, &format!("vertex {v}"))?;
        }
        for (id, c) in edge_coefficients.iter().enumerate() {
            let what = format!("edge {id}");
            check_unit(c.alpha, &what)?;
            let side = if graph.edge(id).directed {
                [c.alpha_plus, c.alpha_minus]
            } else {
                [c.alpha_bar, c.alpha_bar]
            };
            for s in side {
                if !(c.alpha >= s && s >= c.beta) {
                    return Err(Error::NonMonotoneCoefficients(what));
                }
            }
        }

        let mut scale = 1u64;
        let denominators = vertex_beta.iter().map(|c| *c.denom()).chain(
            edge_coefficients.iter().flat_map(|c| {
                [c.alpha, c.alpha_bar, c.alpha_plus, c.alpha_minus, c.beta].map(|r| *r.denom())
            }),
        );
        for d in denominators {
            scale = scale.lcm(&d);
        }
        let apply = |c: Coefficient, w: u64| -> u64 { (c * Ratio::from_integer(w * scale)).to_integer() };

        let vertex_full: Vec<u64> = vertex_weight.iter().map(|&w| w * scale).collect();
        let vertex_beta_scaled: Vec<u64> = vertex_beta
            .iter()
            .zip(&vertex_weight)
            .map(|(&b, &w)| apply(b, w))
            .collect();
        let edges: Vec<ScaledEdge> = edge_coefficients
            .iter()
            .zip(&edge_weight)
            .map(|(c, &w)| ScaledEdge {
                full: w * scale,
                alpha: apply(c.alpha, w),
                alpha_bar: apply(c.alpha_bar, w),
                alpha_plus: apply(c.alpha_plus, w),
                alpha_minus: apply(c.alpha_minus, w),
                beta: apply(c.beta, w),
            })
            .collect();

        let mut vertex_slot = vec![None; n];
        let mut edge_slot = vec![None; m];
        for (i, g) in ground.iter().enumerate() {
            let slot = match *g {
                GroundElement::Vertex(v) if v < n => &mut vertex_slot[v],
                GroundElement::Edge(e) if e < m => &mut edge_slot[e],
                _ => return Err(Error::Invalid(format!("ground element {g:?} not in graph"))),
            };
            if slot.is_some() {
                return Err(Error::Invalid(format!("ground element {g:?} listed twice")));
            }
            *slot = Some(i);
        }

        let k_scaled = k * scale;
        let total: u64 = vertex_full.iter().sum::<u64>()
            + edges.iter().map(|e| e.full).sum::<u64>()
            + k_scaled * n as u64;
        Ok(MetaWeightSystem {
            graph,
            ground,
            vertex_slot,
            edge_slot,
            k,
            scale,
            k_scaled,
            vertex_full,
            vertex_beta: vertex_beta_scaled,
            edges,
            infinity: total + 1,
        })
    }

    /// Same coefficients on every edge, `β(v) = vertex_beta` for every vertex.
    pub fn uniform(
        graph: MixedGraph,
        vertex_weight: u64,
        vertex_beta: u64,
        edge_coefficients: EdgeCoefficients,
        k: u64,
        ground: Vec<GroundElement>,
    ) -> Result<Self> {
        let n = graph.n();
        let m = graph.m();
        Self::new(
            graph,
            vec![vertex_weight; n],
            vec![Ratio::from_integer(vertex_beta); n],
            vec![1; m],
            vec![edge_coefficients; m],
            k,
            ground,
        )
    }

    pub fn vertex_ground(n: usize) -> Vec<GroundElement> {
        (0..n).map(GroundElement::Vertex).collect()
    }

    pub fn edge_ground(m: usize) -> Vec<GroundElement> {
        (0..m).map(GroundElement::Edge).collect()
    }

    pub fn graph(&self) -> &MixedGraph {
        &self.graph
    }

    pub fn ground(&self) -> &[GroundElement] {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Common denominator all weights were multiplied by.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub(crate) fn k_scaled(&self) -> u64 {
        self.k_scaled
    }

    /// Position of a graph element in `Λ`, if it belongs to it.
    pub fn ground_index(&self, a: GroundElement) -> Option<usize> {
        match a {
            GroundElement::Vertex(v) => self.vertex_slot.get(v).copied().flatten(),
            GroundElement::Edge(e) => self.edge_slot.get(e).copied().flatten(),
        }
    }

    pub(crate) fn span(&self, x: &ElementSet) -> Span {
        let mut vertices = ElementSet::empty(self.graph.n());
        let mut edges = ElementSet::empty(self.graph.m());
        for i in x.iter() {
            match self.ground[i] {
                GroundElement::Vertex(v) => vertices.insert(v),
                GroundElement::Edge(e) => {
                    edges.insert(e);
                    let ed = self.graph.edge(e);
                    vertices.insert(ed.u);
                    vertices.insert(ed.v);
                }
            }
        }
        Span { vertices, edges }
    }

    /// `V(X)` as a vertex set.
    pub fn vertices_of(&self, x: &ElementSet) -> ElementSet {
        self.span(x).vertices
    }

    fn vertex_weight_in(&self, span: &Span, v: usize) -> u64 {
        if span.vertices.contains(v) {
            self.vertex_full[v]
        } else {
            self.vertex_beta[v]
        }
    }

    fn edge_weight_in(&self, span: &Span, e: usize) -> u64 {
        let c = &self.edges[e];
        if span.edges.contains(e) {
            return c.full;
        }
        let ed = self.graph.edge(e);
        match (span.vertices.contains(ed.u), span.vertices.contains(ed.v)) {
            (true, true) => c.alpha,
            (false, false) => c.beta,
            _ if !ed.directed => c.alpha_bar,
            (true, false) => c.alpha_plus,
            (false, true) => c.alpha_minus,
        }
    }

    pub(crate) fn weight_in(&self, span: &Span, a: Element) -> u64 {
        match a {
            GroundElement::Vertex(v) => self.vertex_weight_in(span, v),
            GroundElement::Edge(e) => self.edge_weight_in(span, e),
        }
    }

    /// `ω_X(a)`.
    pub fn induced_weight(&self, x: &ElementSet, a: Element) -> Coefficient {
        Ratio::new(self.weight_in(&self.span(x), a), self.scale)
    }

    pub(crate) fn vertex_mass_scaled(&self, x: &ElementSet) -> u64 {
        let span = self.span(x);
        span.vertices.iter().map(|v| self.vertex_full[v]).sum()
    }

    /// `ω_X(V(X))`.
    pub fn vertex_mass(&self, x: &ElementSet) -> Coefficient {
        Ratio::new(self.vertex_mass_scaled(x), self.scale)
    }

    /// Split network of `ω_X`: vertex `v` becomes `2v -> 2v+1`; the
    /// terminals in `unsplit` get an unbounded internal arc.
    fn network(&self, span: &Span, unsplit: &[usize], extra_nodes: usize) -> Dinic {
        let n = self.graph.n();
        let mut net = Dinic::new(2 * n + extra_nodes);
        for v in 0..n {
            let cap = if unsplit.contains(&v) {
                self.infinity
            } else {
                self.vertex_weight_in(span, v)
            };
            net.add_arc(2 * v, 2 * v + 1, cap);
        }
        for (id, ed) in self.graph.edges().iter().enumerate() {
            let cap = self.edge_weight_in(span, id);
            if cap == 0 {
                continue;
            }
            net.add_arc(2 * ed.u + 1, 2 * ed.v, cap);
            if !ed.directed {
                net.add_arc(2 * ed.v + 1, 2 * ed.u, cap);
            }
        }
        net
    }

    fn check_terminals(&self, s: usize, t: usize) -> Result<()> {
        let n = self.graph.n();
        for x in [s, t] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if s == t {
            return Err(Error::SameTerminals(s));
        }
        Ok(())
    }

    /// `min(μ(s,t;X), limit)` in scaled units.
    pub(crate) fn mu_scaled(&self, span: &Span, s: usize, t: usize, limit: u64) -> u64 {
        let mut net = self.network(span, &[s, t], 0);
        net.max_flow(2 * s, 2 * t + 1, limit)
    }

    /// `μ(s,t;X) ≥ k` for the system threshold `k`.
    pub(crate) fn mu_reaches_k(&self, span: &Span, s: usize, t: usize) -> bool {
        self.k_scaled == 0 || self.mu_scaled(span, s, t, self.k_scaled) >= self.k_scaled
    }

    /// `μ(s,t;X)`.
    pub fn min_cut_value(&self, s: usize, t: usize, x: &ElementSet) -> Result<Coefficient> {
        self.check_terminals(s, t)?;
        let v = self.mu_scaled(&self.span(x), s, t, u64::MAX);
        Ok(Ratio::new(v, self.scale))
    }

    /// A minimum `s,t`-cut together with its value.
    pub fn min_cut(&self, s: usize, t: usize, x: &ElementSet) -> Result<CutCertificate> {
        self.check_terminals(s, t)?;
        let span = self.span(x);
        let n = self.graph.n();
        let mut net = self.network(&span, &[s, t], 0);
        let flow = net.max_flow(2 * s, 2 * t + 1, u64::MAX);
        let reach = net.reachable_from(2 * s);
        let mut cut = CutCertificate {
            source_side: Vec::new(),
            sink_side: Vec::new(),
            bypassed: Vec::new(),
            value: Ratio::from_integer(0),
        };
        for v in 0..n {
            match (reach[2 * v], reach[2 * v + 1]) {
                (true, true) => cut.source_side.push(v),
                (true, false) => cut.bypassed.push(v),
                _ => cut.sink_side.push(v),
            }
        }
        let value = self.cut_weight_scaled(&span, &cut.source_side, &cut.sink_side, &cut.bypassed);
        debug_assert_eq!(value, flow);
        cut.value = Ratio::new(value, self.scale);
        Ok(cut)
    }

    /// `ω_X(E(S,T)) + ω_X(R)` in scaled units.
    pub(crate) fn cut_weight_scaled(&self, span: &Span, source: &[usize], sink: &[usize], bypassed: &[usize]) -> u64 {
        let n = self.graph.n();
        let mut side = vec![0u8; n];
        for &v in source {
            side[v] = 1;
        }
        for &v in sink {
            side[v] = 2;
        }
        let mut total: u64 = bypassed.iter().map(|&v| self.vertex_weight_in(span, v)).sum();
        for (id, ed) in self.graph.edges().iter().enumerate() {
            let crosses = (side[ed.u] == 1 && side[ed.v] == 2)
                || (!ed.directed && side[ed.u] == 2 && side[ed.v] == 1);
            if crosses {
                total += self.edge_weight_in(span, id);
            }
        }
        total
    }

    /// Whether some `u ∈ V(X)` has `μ(u,t;Y) < k`, decided with one flow
    /// from a super-source feeding every vertex of `V(X)` with capacity `k`.
    ///
    /// Exact when `ω_X(V(X)) ≥ k` and all pairs inside `V(X)` reach `k`
    /// within `Y`; otherwise a `true` answer is still sound.
    pub fn exists_weak_vertex(&self, x: &ElementSet, t: usize, y: &ElementSet, k: u64) -> bool {
        self.weak_vertex_scaled(&self.span(x).vertices, t, &self.span(y), k * self.scale, false)
    }

    /// The mirror test: whether some `u ∈ V(X)` has `μ(t,u;Y) < k`, using a
    /// super-sink fed by every vertex of `V(X)`.
    pub fn exists_weak_vertex_reverse(&self, x: &ElementSet, t: usize, y: &ElementSet, k: u64) -> bool {
        self.weak_vertex_scaled(&self.span(x).vertices, t, &self.span(y), k * self.scale, true)
    }

    pub(crate) fn weak_vertex_scaled(
        &self,
        x_vertices: &ElementSet,
        t: usize,
        y: &Span,
        k_scaled: u64,
        reverse: bool,
    ) -> bool {
        if k_scaled == 0 {
            return false;
        }
        debug_assert!(!x_vertices.contains(t));
        let n = self.graph.n();
        let hub = 2 * n;
        let mut net = self.network(y, &[t], 1);
        if reverse {
            for u in x_vertices.iter() {
                net.add_arc(2 * u + 1, hub, k_scaled);
            }
            net.max_flow(2 * t, hub, k_scaled) < k_scaled
        } else {
            for u in x_vertices.iter() {
                net.add_arc(hub, 2 * u, k_scaled);
            }
            net.max_flow(hub, 2 * t + 1, k_scaled) < k_scaled
        }
    }

    pub fn is_k_connected(&self, x: &ElementSet) -> bool {
        let span = self.span(x);
        let vs = span.vertices.to_vec();
        if vs.len() <= 1 {
            return true;
        }
        vs.iter().all(|&u| {
            vs.iter()
                .all(|&v| u == v || self.mu_reaches_k(&span, u, v))
        })
    }

    /// `X ∈ 𝒞(M, w, γ, k, Λ)`.
    pub fn is_component(&self, x: &ElementSet) -> bool {
        !x.is_empty() && self.vertex_mass_scaled(x) >= self.k_scaled && self.is_k_connected(x)
    }
}

/// `(S, T)` with the bypassed vertices `R = V ∖ (S ∪ T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub source_side: Vec<usize>,
    pub sink_side: Vec<usize>,
    pub bypassed: Vec<usize>,
    pub value: Coefficient,
}

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
    rev: usize,
}

/// Blocking-flow max-flow on integer capacities.
#[derive(Debug, Clone)]
struct Dinic {
    adj: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(nodes: usize) -> Self {
        Dinic {
            adj: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            iter: vec![0; nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        let rev_from = self.adj[to].len();
        let rev_to = self.adj[from].len();
        self.adj[from].push(Arc { to, cap, rev: rev_from });
        self.adj[to].push(Arc { to: from, cap: 0, rev: rev_to });
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for a in &self.adj[v] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: u64) -> u64 {
        if v == t {
            return pushed;
        }
        while self.iter[v] < self.adj[v].len() {
            let i = self.iter[v];
            let Arc { to, cap, rev } = self.adj[v][i];
            if cap > 0 && self.level[v] < self.level[to] {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.adj[v][i].cap -= d;
                    self.adj[to][rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    /// Pushes flow until none is left or at least `limit` has been sent.
    fn max_flow(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        let mut flow = 0u64;
        while flow < limit {
            self.bfs(s);
            if self.level[t] < 0 {
                break;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, limit - flow);
                if f == 0 {
                    break;
                }
                flow += f;
                if flow >= limit {
                    return flow;
                }
            }
        }
        flow
    }

    fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for a in &self.adj[v] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}
