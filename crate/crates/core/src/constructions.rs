//! Source graphs whose IR-graphs are prescribed: the construction for
//! disconnected targets, and the small labeled fixture graphs.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{Vertex, VertexSet, MAX_VERTICES};

/// Input to [`build_disconnected_source`].
#[derive(Clone, Debug)]
pub struct DisconnectedSourceSpec {
    /// Disconnected target graph `H`.
    pub target: Graph,
    /// Index into `target.components()` (ordered by smallest vertex) of the
    /// component used as `H1`; the remaining components form `H2`.
    pub component: usize,
    /// Size of each of the cliques `X` and `Y`; at least `|V(H)|`.
    pub clique_size: usize,
}

impl DisconnectedSourceSpec {
    /// Component 0 and the smallest legal clique size `|V(H)|`.
    pub fn new(target: Graph) -> Self {
        let clique_size = target.order();
        DisconnectedSourceSpec {
            target,
            component: 0,
            clique_size,
        }
    }

    pub fn with_clique_size(mut self, clique_size: usize) -> Self {
        self.clique_size = clique_size;
        self
    }

    pub fn with_component(mut self, component: usize) -> Self {
        self.component = component;
        self
    }
}

/// The built source graph with the roles of its vertices.
///
/// Numbering: the vertices of `H` keep their indices `0..n`, then come
/// `x_1..x_N` and then `y_1..y_N`.
#[derive(Clone, Debug, Serialize)]
pub struct DisconnectedSource {
    #[serde(skip)]
    pub graph: Graph,
    pub h1: VertexSet,
    pub h2: VertexSet,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
}

impl DisconnectedSource {
    /// `N + 1`.
    pub fn expected_ir_value(&self) -> usize {
        self.x.len() + 1
    }

    /// The sets `{u} ∪ X` for `u ∈ V(H1)` and `{v} ∪ Y` for `v ∈ V(H2)`,
    /// sorted canonically.
    pub fn expected_ir_sets(&self) -> Vec<VertexSet> {
        let xs: VertexSet = self.x.iter().copied().collect();
        let ys: VertexSet = self.y.iter().copied().collect();
        let mut sets: Vec<VertexSet> = self
            .h1
            .iter()
            .map(|u| xs.with(u))
            .chain(self.h2.iter().map(|v| ys.with(v)))
            .collect();
        sets.sort();
        sets
    }
}

/// Builds `G ⊇ H` with `G[X] ≅ G[Y] ≅ K_N`, `X ∪ {y_1}` joined to all of
/// `H1`, `Y ∪ {x_1}` joined to all of `H2`, and `x_i ∼ y_i` for `i >= 2`.
pub fn build_disconnected_source(spec: &DisconnectedSourceSpec) -> Result<DisconnectedSource> {
    let h = &spec.target;
    let n = h.order();
    let comps = h.components();
    if comps.len() < 2 {
        return Err(Error::Construction("target graph must be disconnected".into()));
    }
    let Some(&h1) = comps.get(spec.component) else {
        return Err(Error::Construction(format!(
            "component index {} out of range; the target has {} components",
            spec.component,
            comps.len()
        )));
    };
    let big_n = spec.clique_size;
    if big_n < n {
        return Err(Error::Construction(format!(
            "clique size {big_n} is smaller than the target order {n}"
        )));
    }
    let total = n + 2 * big_n;
    if total > MAX_VERTICES {
        return Err(Error::TooManyVertices(total));
    }
    let h2 = h.vertices().difference(h1);
    let x: Vec<Vertex> = (n..n + big_n).collect();
    let y: Vec<Vertex> = (n + big_n..total).collect();

    let mut g = Graph::new(total)?;
    for (u, v) in h.edges() {
        g.add_edge(u, v)?;
    }
    for clique in [&x, &y] {
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                g.add_edge(a, b)?;
            }
        }
    }
    for u in h1 {
        for &a in x.iter().chain([&y[0]]) {
            g.add_edge(a, u)?;
        }
    }
    for v in h2 {
        for &b in y.iter().chain([&x[0]]) {
            g.add_edge(b, v)?;
        }
    }
    for i in 1..big_n {
        g.add_edge(x[i], y[i])?;
    }

    let labels = (0..n)
        .map(|v| h.display_name(v))
        .chain((1..=big_n).map(|i| format!("x{i}")))
        .chain((1..=big_n).map(|i| format!("y{i}")));
    let graph = g.with_labels(labels)?;
    Ok(DisconnectedSource { graph, h1, h2, x, y })
}

/// The small labeled graphs used as fixtures.
///
/// The edge lists are reconstructions; the fixture tests check each one
/// against every property it is meant to exhibit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fixture {
    /// Six vertices `a..f` with IR-sets `{a,b,c}` and `{b,c,d}` and the
    /// private neighbourhoods quoted for them.
    Fig1G,
    /// Source graph whose IR-graph is the double star `S(2,2)`.
    Fig3G,
    /// `Fig3G` plus a vertex `d` joined to `a, b, c, f`; its IR-graph is the
    /// double spider `Sp(1,1;1,2)`.
    Fig4F,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::Fig1G, Fixture::Fig3G, Fixture::Fig4F];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Fig1G => "fig1-G",
            Fixture::Fig3G => "fig3-G",
            Fixture::Fig4F => "fig4-F",
        }
    }

    fn data(self) -> (&'static [&'static str], &'static [(&'static str, &'static str)]) {
        const FIG3_EDGES: [(&str, &str); 7] = [
            ("a", "b"),
            ("a", "c"),
            ("a", "e"),
            ("b", "f"),
            ("c", "g"),
            ("e", "g"),
            ("f", "g"),
        ];
        match self {
            // Reproduces PN(a,A) = {d}, PN(b,A) = {e}, PN(c,A) = {f} for
            // A = {a,b,c}, and PN(b,B) = {b,e}, PN(c,B) = {c}, PN(d,B) = {d}
            // for B = {b,c,d}.
            Fixture::Fig1G => (
                &["a", "b", "c", "d", "e", "f"],
                &[("a", "b"), ("a", "c"), ("a", "d"), ("b", "e"), ("c", "f"), ("d", "f")],
            ),
            // `Fig4F` with `d` deleted.
            Fixture::Fig3G => (&["a", "b", "c", "e", "f", "g"], &FIG3_EDGES),
            // Edges of d forced by the relations in the diameter-four case
            // analysis under a→b, x1→g, x2→e, x3→f, x1'→c, x2'→a, x3'→d.
            Fixture::Fig4F => (
                &["a", "b", "c", "d", "e", "f", "g"],
                &[
                    ("a", "b"),
                    ("a", "c"),
                    ("a", "e"),
                    ("b", "f"),
                    ("c", "g"),
                    ("e", "g"),
                    ("f", "g"),
                    ("d", "a"),
                    ("d", "b"),
                    ("d", "c"),
                    ("d", "f"),
                ],
            ),
        }
    }

    pub fn graph(self) -> Graph {
        let (labels, edges) = self.data();
        let index = |l: &str| labels.iter().position(|&x| x == l).expect("fixture label");
        Graph::from_edges(labels.len(), edges.iter().map(|&(u, v)| (index(u), index(v))))
            .and_then(|g| g.with_labels(labels.iter().copied()))
            .expect("fixture data is valid")
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFixture(s.to_owned()))
    }
}

/// Fixture graph by name (`fig1-G`, `fig3-G`, `fig4-F`).
pub fn fixture(name: &str) -> Result<Graph> {
    Ok(name.parse::<Fixture>()?.graph())
}
