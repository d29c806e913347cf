//! The plain-text graph format.
//!
//! ```text
//! # comment
//! v 1 1,2,3     vertex 1 with items 1, 2 and 3
//! v 4           vertex without items
//! e 1 4         undirected edge
//! a 4 1         arc from 4 to 1
//! ```
//!
//! Vertex ids are arbitrary non-negative integers and must be declared
//! before use. Items are positive integers; they are renumbered densely
//! (keeping their order) and mapped back on output. Edges are numbered
//! from 0 in file order.

use std::collections::{BTreeSet, HashMap};

use connenum::MixedGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: MixedGraph,
    /// Original id of each vertex, by dense index.
    pub vertex_ids: Vec<u64>,
    /// Dense items (`1..=q`) of each vertex.
    pub items: Vec<Vec<usize>>,
    /// Original label of dense item `i` at position `i - 1`.
    pub item_labels: Vec<u64>,
}

impl GraphFile {
    pub fn q(&self) -> usize {
        self.item_labels.len()
    }
}

fn number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T, ParseError> {
    token.parse().map_err(|_| ParseError {
        line,
        message: format!("invalid {what} `{token}`"),
    })
}

pub fn parse(text: &str) -> Result<GraphFile, ParseError> {
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut vertex_ids = Vec::new();
    let mut raw_items: Vec<Vec<u64>> = Vec::new();
    let mut edges: Vec<(usize, usize, bool, usize)> = Vec::new();

    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let kind = tokens.next().expect("non-empty line");
        let err = |message: String| ParseError { line, message };
        match kind {
            "v" => {
                let id: u64 = number(tokens.next().ok_or_else(|| err("missing vertex id".into()))?, line, "vertex id")?;
                if index.contains_key(&id) {
                    return Err(err(format!("vertex {id} declared twice")));
                }
                let mut list = Vec::new();
                for tok in tokens {
                    for part in tok.split(',').filter(|p| !p.is_empty()) {
                        let item: u64 = number(part, line, "item")?;
                        if item == 0 {
                            return Err(err("items must be positive".into()));
                        }
                        list.push(item);
                    }
                }
                index.insert(id, vertex_ids.len());
                vertex_ids.push(id);
                raw_items.push(list);
            }
            "e" | "a" => {
                let mut end = |name: &str| -> Result<usize, ParseError> {
                    let tok = tokens.next().ok_or_else(|| err(format!("missing {name} endpoint")))?;
                    let id: u64 = number(tok, line, "vertex id")?;
                    index
                        .get(&id)
                        .copied()
                        .ok_or_else(|| err(format!("vertex {id} used before declaration")))
                };
                let u = end("first")?;
                let v = end("second")?;
                if tokens.next().is_some() {
                    return Err(err("trailing tokens after edge".into()));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {}", vertex_ids[u])));
                }
                edges.push((u, v, kind == "a", line));
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }

    let labels: Vec<u64> = raw_items.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let rank: HashMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i + 1)).collect();
    let items = raw_items
        .iter()
        .map(|list| {
            let dense: BTreeSet<usize> = list.iter().map(|l| rank[l]).collect();
            dense.into_iter().collect()
        })
        .collect();

    let mut graph = MixedGraph::new(vertex_ids.len());
    for (u, v, directed, line) in edges {
        let added = if directed { graph.add_arc(u, v) } else { graph.add_edge(u, v) };
        added.map_err(|e| ParseError {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(GraphFile {
        graph,
        vertex_ids,
        items,
        item_labels: labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_basic_records() {
        let f = parse("# demo\nv 10 3,7\nv 20 7\nv 30\ne 10 20\na 20 30 # trailing\n").unwrap();
        assert_eq!(f.vertex_ids, vec![10, 20, 30]);
        assert_eq!(f.item_labels, vec![3, 7]);
        assert_eq!(f.items, vec![vec![1, 2], vec![2], vec![]]);
        assert_eq!(f.graph.m(), 2);
        assert!(f.graph.edge(1).directed);
    }

    #[test]
    fn space_separated_items_are_accepted() {
        let f = parse("v 1 2 5\n").unwrap();
        assert_eq!(f.items, vec![vec![1, 2]]);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse("v 1\n\ne 1 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("before declaration"));
        assert_eq!(parse("v 1\ne 1 1\n").unwrap_err().line, 2);
        assert_eq!(parse("v 1 0\n").unwrap_err().line, 1);
        assert_eq!(parse("v 1\nv 1\n").unwrap_err().line, 2);
        assert_eq!(parse("x 1\n").unwrap_err().line, 1);
        assert_eq!(parse("v one\n").unwrap_err().line, 1);
    }
}
