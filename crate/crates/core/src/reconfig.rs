//! IR-graphs under the slide model: two IR-sets are adjacent when one is
//! obtained from the other by swapping a member for an adjacent non-member.

use std::collections::VecDeque;
use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::emit::dot_escape;
use crate::error::Result;
use crate::graph::{Distance, Graph};
use crate::graph6::emit_graph6;
use crate::irredundance::upper_irredundance_capped;
use crate::vertex_set::{Vertex, VertexSet};

/// Default bound on the number of IR-sets an IR-graph may have.
pub const DEFAULT_MAX_IR_SETS: usize = 20_000;

/// The swap pair `(u, v)` with `D' = (D − {u}) ∪ {v}` and `uv ∈ E(G)`, if any.
pub fn token_slide_adjacent(g: &Graph, d: VertexSet, d2: VertexSet) -> Option<(Vertex, Vertex)> {
    let out = d.difference(d2);
    let into = d2.difference(d);
    if out.len() != 1 || into.len() != 1 {
        return None;
    }
    let (u, v) = (out.first()?, into.first()?);
    g.has_edge(u, v).then_some((u, v))
}

/// Directed half of an IR-graph edge: node `from` becomes node `to` by
/// swapping `out` for `into`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Swap {
    pub from: usize,
    pub to: usize,
    pub out: Vertex,
    #[serde(rename = "in")]
    pub into: Vertex,
}

#[derive(Clone, Debug)]
pub struct IrGraph {
    source: Graph,
    ir_value: usize,
    nodes: Vec<VertexSet>,
    /// Both orientations of every edge, sorted by `(from, to)`.
    swaps: Vec<Swap>,
    adjacency: Vec<Vec<usize>>,
}

impl IrGraph {
    pub fn build(g: &Graph) -> Result<IrGraph> {
        IrGraph::build_capped(g, DEFAULT_MAX_IR_SETS)
    }

    /// Refuses sources with more than `max_sets` IR-sets.
    pub fn build_capped(g: &Graph, max_sets: usize) -> Result<IrGraph> {
        let (ir_value, nodes) = upper_irredundance_capped(g, max_sets)?;
        Ok(IrGraph::from_sets(g, ir_value, nodes))
    }

    /// Builds the slide graph on the given IR-sets of `g`, assumed to be the
    /// canonically ordered output of the enumerator.
    pub fn from_sets(g: &Graph, ir_value: usize, nodes: Vec<VertexSet>) -> IrGraph {
        // Pair scan; the popcount test rejects almost every pair before
        // the adjacency lookup. Indexing by `D − {u}` signatures would make
        // this subquadratic.
        let half: Vec<Swap> = (0..nodes.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let nodes = &nodes;
                ((i + 1)..nodes.len()).filter_map(move |j| {
                    if nodes[i].symmetric_difference(nodes[j]).len() != 2 {
                        return None;
                    }
                    token_slide_adjacent(g, nodes[i], nodes[j]).map(|(u, v)| Swap {
                        from: i,
                        to: j,
                        out: u,
                        into: v,
                    })
                })
            })
            .collect();
        let mut swaps: Vec<Swap> = half
            .iter()
            .flat_map(|s| {
                [
                    *s,
                    Swap {
                        from: s.to,
                        to: s.from,
                        out: s.into,
                        into: s.out,
                    },
                ]
            })
            .collect();
        swaps.sort();
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for s in &swaps {
            adjacency[s.from].push(s.to);
        }
        IrGraph {
            source: g.clone(),
            ir_value,
            nodes,
            swaps,
            adjacency,
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    /// `IR` of the source graph.
    pub fn ir_value(&self) -> usize {
        self.ir_value
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn index_of(&self, set: VertexSet) -> Option<usize> {
        self.nodes.binary_search(&set).ok()
    }

    pub fn swaps(&self) -> &[Swap] {
        &self.swaps
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.swaps
            .iter()
            .filter(|s| s.from < s.to)
            .map(|s| (s.from, s.to))
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.nodes.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Distance::Finite(0);
        while let Some(i) = queue.pop_front() {
            let Distance::Finite(d) = dist[i] else { unreachable!() };
            for &j in &self.adjacency[i] {
                if dist[j] == Distance::Infinite {
                    dist[j] = Distance::Finite(d + 1);
                    queue.push_back(j);
                }
            }
        }
        dist
    }

    /// 0 for at most one node; `Infinite` when disconnected.
    pub fn diameter(&self) -> Distance {
        (0..self.nodes.len())
            .flat_map(|i| self.distances_from(i))
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// The graph on no nodes counts as connected.
    pub fn is_connected(&self) -> bool {
        self.nodes.is_empty() || self.distances_from(0).iter().all(|d| d.finite().is_some())
    }

    pub fn is_complete(&self) -> bool {
        self.adjacency.iter().all(|a| a.len() + 1 == self.nodes.len())
    }

    /// Nodes adjacent to every other node.
    pub fn universal_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.adjacency[i].len() + 1 == self.nodes.len())
            .collect()
    }

    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        self.edges().find_map(|(i, j)| {
            self.adjacency[i]
                .iter()
                .find(|&&k| k > j && self.has_edge(j, k))
                .map(|&k| [i, j, k])
        })
    }

    /// An induced 4-cycle `[a, b, c, d]` of the IR-graph with `a = i`.
    pub fn induced_c4_through(&self, i: usize) -> Option<[usize; 4]> {
        let nbrs = &self.adjacency[i];
        nbrs.iter().enumerate().find_map(|(p, &b)| {
            nbrs[p + 1..]
                .iter()
                .filter(|&&d| !self.has_edge(b, d))
                .find_map(|&d| {
                    self.adjacency[b]
                        .iter()
                        .find(|&&c| c != i && self.has_edge(c, d) && !self.has_edge(c, i))
                        .map(|&c| [i, b, c, d])
                })
        })
    }

    pub fn find_induced_c4(&self) -> Option<[usize; 4]> {
        (0..self.nodes.len()).find_map(|i| self.induced_c4_through(i))
    }

    /// The IR-graph as a plain [`Graph`]; fails above 128 nodes.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.nodes.len(), self.edges())
    }

    fn set_name(&self, set: VertexSet) -> String {
        let names: Vec<String> = set.iter().map(|v| self.source.display_name(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Nodes are labeled with their member lists and edges with `u→v`,
    /// read from the lower-numbered node to the higher.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph \"IR\" {\n");
        for (i, &set) in self.nodes.iter().enumerate() {
            writeln!(out, "  {i} [label=\"{}\"];", dot_escape(&self.set_name(set))).unwrap();
        }
        for s in self.swaps.iter().filter(|s| s.from < s.to) {
            let label = format!(
                "{}→{}",
                self.source.display_name(s.out),
                self.source.display_name(s.into)
            );
            writeln!(out, "  {} -- {} [label=\"{}\"];", s.from, s.to, dot_escape(&label)).unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> IrGraphJson {
        IrGraphJson {
            source: emit_graph6(&self.source),
            ir_value: self.ir_value,
            n: self.nodes.len(),
            nodes: self.nodes.clone(),
            edges: self.edges().collect(),
            swaps: self.swaps.iter().filter(|s| s.from < s.to).copied().collect(),
        }
    }
}

/// JSON adjacency form of an IR-graph. `n` and `edges` follow the
/// [`EdgeList`](crate::emit::EdgeList) layout, so the output reads back as
/// a plain graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrGraphJson {
    pub source: String,
    #[serde(rename = "IR")]
    pub ir_value: usize,
    pub n: usize,
    pub nodes: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
    pub swaps: Vec<Swap>,
}

/// `build_ir_graph` with the default cap.
pub fn build_ir_graph(g: &Graph) -> Result<IrGraph> {
    IrGraph::build(g)
}

/// Fails with [`Error::TooManyIrSets`](crate::Error::TooManyIrSets) when `max_sets` is exceeded.
pub fn build_ir_graph_capped(g: &Graph, max_sets: usize) -> Result<IrGraph> {
    IrGraph::build_capped(g, max_sets)
}
