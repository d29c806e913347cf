use crate::error::{Error, Result};
use crate::system::ElementSet;

/// An undirected edge or an arc `u -> v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub directed: bool,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A mixed multigraph without self-loops. Edge ids are positions in
/// insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
}

impl MixedGraph {
    pub fn new(n: usize) -> Self {
        MixedGraph {
            n,
            edges: Vec::new(),
            incident: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    fn push(&mut self, u: usize, v: usize, directed: bool) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, directed });
        self.incident[u].push(id);
        self.incident[v].push(id);
        Ok(id)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        self.push(u, v, false)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<usize> {
        self.push(u, v, true)
    }

    /// Undirected graph from an edge list.
    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Ids of the edges and arcs touching `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    /// Vertices covered by a set of edge ids.
    pub fn edge_vertices(&self, edges: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.n);
        for e in edges.iter() {
            out.insert(self.edges[e].u);
            out.insert(self.edges[e].v);
        }
        out
    }

    /// Neighbour rows of the underlying undirected simple graph.
    pub fn undirected_neighbors(&self) -> Vec<ElementSet> {
        let mut rows = vec![ElementSet::empty(self.n); self.n];
        for e in &self.edges {
            rows[e.u].insert(e.v);
            rows[e.v].insert(e.u);
        }
        rows
    }
}
