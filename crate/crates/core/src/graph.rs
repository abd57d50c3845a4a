use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{Vertex, VertexSet, MAX_VERTICES};

/// A simple undirected graph on the vertices `0..n`, `n <= 128`.
///
/// Rows of the adjacency matrix are [`VertexSet`]s. Vertices may carry
/// optional names, used by the fixture graphs. Equality compares the
/// vertex count, the edges and the labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Shortest-path length; `Infinite` for vertices in different components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_at_least(self, k: usize) -> bool {
        match self {
            Distance::Finite(d) => d >= k,
            Distance::Infinite => true,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    /// Attaches vertex names; `labels.len()` must equal the order.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                got: labels.len(),
                n: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::SetOutOfRange {
                set: set.to_string(),
                n: self.n,
            })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().and_then(|l| l.get(v)).map(String::as_str)
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Label if present, index otherwise.
    pub fn display_name(&self, v: Vertex) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    /// `N(v)`.
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`.
    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N(D)`, the union of the open neighbourhoods of the members.
    pub fn set_neighbors(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// `N[D] = N(D) ∪ D`.
    pub fn set_closed_neighbors(&self, set: VertexSet) -> VertexSet {
        self.set_neighbors(set).union(set)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Members of `set` having at least one neighbour inside `set`.
    pub fn non_isolated_in(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .filter(|&v| !self.adj[v].is_disjoint(set))
            .collect()
    }

    /// Subgraph induced by `set`, renumbered in ascending order. Labels are kept.
    pub fn induced(&self, set: VertexSet) -> Result<Graph> {
        self.check_set(set)?;
        let keep = set.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len())?;
        for (i, &v) in keep.iter().enumerate() {
            g.adj[i] = self.adj[v].intersection(set).iter().map(|w| index[w]).collect();
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced(self.vertices().without(v))
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            self.check_vertex(p)?;
            seen.insert(p);
        }
        if perm.len() != self.n || seen.len() != self.n {
            return Err(Error::NotAPermutation);
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// BFS distances from `source`.
    pub fn distances_from(&self, source: Vertex) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = dist[u] else { unreachable!() };
            for w in self.adj[u] {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Largest distance over all pairs; 0 for graphs with at most one vertex.
    pub fn diameter(&self) -> Distance {
        (0..self.n)
            .flat_map(|v| self.distances_from(v))
            .max()
            .unwrap_or(Distance::Finite(0))
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut comps = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                frontier = self.set_neighbors(frontier).difference(comp);
                comp = comp.union(frontier);
            }
            left = left.difference(comp);
            comps.push(comp);
        }
        comps
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) + 1 == self.n).collect()
    }

    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        self.edges().find_map(|(u, v)| {
            self.adj[u]
                .intersection(self.adj[v])
                .first()
                .map(|w| [u, v, w])
        })
    }

    pub fn has_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    /// An induced 4-cycle `[a, b, c, d]` (edges ab, bc, cd, da; chords ac, bd absent)
    /// with `a = v`.
    pub fn induced_c4_through(&self, v: Vertex) -> Option<[Vertex; 4]> {
        let far = self.vertices().difference(self.closed_neighbors(v));
        far.iter().find_map(|c| {
            let common = self.adj[v].intersection(self.adj[c]);
            common.iter().find_map(|b| {
                common
                    .difference(self.closed_neighbors(b))
                    .first()
                    .map(|d| [v, b, c, d])
            })
        })
    }

    pub fn find_induced_c4(&self) -> Option<[Vertex; 4]> {
        (0..self.n).find_map(|v| self.induced_c4_through(v))
    }

    pub fn has_induced_c4(&self) -> bool {
        self.find_induced_c4().is_some()
    }

    /// `G + H`; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        let offset = self.n;
        g.adj[..offset].copy_from_slice(&self.adj);
        for (v, row) in other.adj.iter().enumerate() {
            g.adj[offset + v] = VertexSet::from_bits(row.bits() << offset);
        }
        Ok(g)
    }

    /// `G □ H`; vertex `(i, j)` is numbered `i * |V(H)| + j`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let n = self.n * other.n;
        let mut g = Graph::new(n)?;
        let m = other.n;
        for i in 0..self.n {
            for j in 0..m {
                let v = i * m + j;
                for j2 in other.adj[j] {
                    g.adj[v].insert(i * m + j2);
                }
                for i2 in self.adj[i] {
                    g.adj[v].insert(i2 * m + j);
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}-{}", self.display_name(u), self.display_name(v))?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert!(matches!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Graph::new(129).unwrap_err(), Error::TooManyVertices(129));
    }

    #[test]
    fn distances_and_diameter() {
        let p = path(5);
        assert_eq!(p.distance(0, 4).unwrap(), Distance::Finite(4));
        assert_eq!(p.diameter(), Distance::Finite(4));
        let two = path(2).disjoint_union(&path(2)).unwrap();
        assert_eq!(two.distance(0, 3).unwrap(), Distance::Infinite);
        assert_eq!(two.diameter(), Distance::Infinite);
        assert!(!two.is_connected());
        assert_eq!(Graph::new(1).unwrap().diameter(), Distance::Finite(0));
        assert!(Graph::new(0).unwrap().is_connected());
    }

    #[test]
    fn induced_c4_detection() {
        assert!(cycle(4).has_induced_c4());
        assert!(!Graph::complete(4).unwrap().has_induced_c4());
        assert!(!cycle(5).has_induced_c4());
        // K_{2,3} has induced C4s through every vertex.
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        for v in 0..5 {
            let [a, b, c, d] = k23.induced_c4_through(v).unwrap();
            assert_eq!(a, v);
            assert!(k23.has_edge(a, b) && k23.has_edge(b, c) && k23.has_edge(c, d) && k23.has_edge(d, a));
            assert!(!k23.has_edge(a, c) && !k23.has_edge(b, d));
        }
        // The pendant vertex of a C4 with a tail lies on no C4.
        let tail = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert!(tail.induced_c4_through(4).is_none());
    }

    #[test]
    fn universal_and_complete() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.universal_vertices(), VertexSet::from([0]));
        assert!(!star.is_complete());
        assert!(Graph::complete(5).unwrap().is_complete());
        assert_eq!(Graph::complete(3).unwrap().universal_vertices(), VertexSet::full(3));
    }

    #[test]
    fn products_and_unions() {
        let k2 = Graph::complete(2).unwrap();
        let sq = k2.cartesian_product(&k2).unwrap();
        assert_eq!(sq.edge_count(), 4);
        assert_eq!(sq.degree_sequence(), vec![2, 2, 2, 2]);
        let g = path(3);
        assert_eq!(g.disjoint_union(&Graph::new(0).unwrap()).unwrap(), g);
        assert_eq!(Graph::new(1).unwrap().cartesian_product(&g).unwrap(), g);
        let big = Graph::new(100).unwrap();
        assert_eq!(
            big.disjoint_union(&Graph::new(29).unwrap()).unwrap_err(),
            Error::TooManyVertices(129)
        );
        assert_eq!(
            Graph::new(12).unwrap().cartesian_product(&Graph::new(11).unwrap()).unwrap_err(),
            Error::TooManyVertices(132)
        );
    }

    #[test]
    fn induced_keeps_labels() {
        let g = path(4).with_labels(["a", "b", "c", "d"]).unwrap();
        let h = g.remove_vertex(1).unwrap();
        assert_eq!(h.labels().unwrap(), ["a", "c", "d"]);
        assert_eq!(h.edge_count(), 1);
        assert!(h.has_edge(1, 2));
    }

    #[test]
    fn independence_and_triangles() {
        let c5 = cycle(5);
        assert!(c5.is_independent(VertexSet::from([0, 2])));
        assert!(!c5.is_independent(VertexSet::from([0, 1])));
        assert!(!c5.has_triangle());
        assert_eq!(Graph::complete(3).unwrap().find_triangle(), Some([0, 1, 2]));
        assert_eq!(path(3).non_isolated_in(VertexSet::from([0, 1, 2])), VertexSet::full(3));
    }
}
