//! Test support: census loading and a deliberately naive oracle that shares
//! no code with the library beyond reading adjacency.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use irgraph::graph6::{read_graph6_stream, StreamEntry};
use irgraph::{Graph, VertexSet};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// All non-isomorphic graphs of order `n` (1..=7), as stream entries.
pub fn census_entries(n: usize) -> Vec<StreamEntry> {
    let file = File::open(data_path(&format!("graphs{n}.g6"))).expect("census file");
    read_graph6_stream(BufReader::new(file))
        .map(|e| e.expect("readable line"))
        .collect()
}

pub fn census(n: usize) -> Vec<Graph> {
    census_entries(n)
        .into_iter()
        .map(|e| e.graph.expect("census line decodes"))
        .collect()
}

/// Every graph of order 1..=`n_max`, in order.
pub fn census_up_to_entries(n_max: usize) -> Vec<StreamEntry> {
    (1..=n_max).flat_map(census_entries).collect()
}

pub fn census_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(census).collect()
}

pub type Set = BTreeSet<usize>;

/// Adjacency read out pairwise through `has_edge` only.
pub struct Naive {
    n: usize,
    adj: Vec<Set>,
}

impl Naive {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).collect())
            .collect();
        Naive { n, adj }
    }

    pub fn closed(&self, v: usize) -> Set {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn pn(&self, d: &Set, v: usize) -> Set {
        let mut s = self.closed(v);
        for &u in d {
            if u != v {
                for w in self.closed(u) {
                    s.remove(&w);
                }
            }
        }
        s
    }

    pub fn epn(&self, d: &Set, v: usize) -> Set {
        let mut s = self.pn(d, v);
        s.remove(&v);
        s
    }

    pub fn irredundant(&self, d: &Set) -> bool {
        d.iter().all(|&v| !self.pn(d, v).is_empty())
    }

    pub fn dominating(&self, d: &Set) -> bool {
        (0..self.n).all(|v| d.contains(&v) || self.adj[v].iter().any(|u| d.contains(u)))
    }

    pub fn independent(&self, d: &Set) -> bool {
        d.iter().all(|&u| d.iter().all(|v| !self.adj[u].contains(v)))
    }

    pub fn subsets(&self) -> Vec<Set> {
        (0u32..1 << self.n)
            .map(|m| (0..self.n).filter(|&i| m >> i & 1 == 1).collect())
            .collect()
    }

    /// No proper superset is irredundant (checked against every superset).
    pub fn maximal_irredundant(&self, d: &Set, all: &[Set]) -> bool {
        self.irredundant(d) && !all.iter().any(|s| s.len() > d.len() && d.is_subset(s) && self.irredundant(s))
    }

    /// `(ir, IR, IR-sets)` by exhausting every subset.
    pub fn irredundance(&self) -> (usize, usize, Vec<Set>) {
        let all = self.subsets();
        let irr: Vec<&Set> = all.iter().filter(|s| self.irredundant(s)).collect();
        let upper = irr.iter().map(|s| s.len()).max().unwrap_or(0);
        let lower = irr
            .iter()
            .filter(|s| self.maximal_irredundant(s, &all))
            .map(|s| s.len())
            .min()
            .unwrap_or(0);
        let mut sets: Vec<Set> = irr.into_iter().filter(|s| s.len() == upper).cloned().collect();
        sets.sort();
        (lower, upper, sets)
    }
}

pub fn to_set(v: VertexSet) -> Set {
    v.iter().collect()
}

pub fn to_vs(s: &Set) -> VertexSet {
    s.iter().copied().collect()
}

/// Isomorphism by trying every bijection.
pub fn naive_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Naive, h: &Naive, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = map.len();
        if k == g.n {
            return true;
        }
        for t in 0..h.n {
            if used[t] {
                continue;
            }
            if (0..k).all(|i| g.adj[k].contains(&i) == h.adj[t].contains(&map[i])) {
                map.push(t);
                used[t] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                used[t] = false;
                map.pop();
            }
        }
        false
    }
    let (a, b) = (Naive::new(g), Naive::new(h));
    a.n == b.n && extend(&a, &b, &mut Vec::new(), &mut vec![false; b.n])
}

/// Edges of a random graph on `n` vertices from a bit pattern.
pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> (k % 64) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
