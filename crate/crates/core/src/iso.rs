//! Exact isomorphism testing by colour refinement plus individualisation
//! backtracking.
//!
//! Both graphs are refined together so that colour ids mean the same thing
//! on either side; a mismatch in colour-class sizes prunes the branch. When
//! the partition becomes discrete the induced bijection is checked edge by
//! edge, so a `Some` result is always a verified isomorphism.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::Vertex;

/// Default largest order accepted for exact matching.
pub const DEFAULT_ISO_LIMIT: usize = 32;

/// `true` iff `g` and `h` are isomorphic. Refuses graphs above
/// [`DEFAULT_ISO_LIMIT`] vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    are_isomorphic_with_limit(g, h, DEFAULT_ISO_LIMIT)
}

pub fn are_isomorphic_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    Ok(find_isomorphism(g, h, limit)?.is_some())
}

/// A bijection `map` with `uv ∈ E(g) ⇔ map[u]map[v] ∈ E(h)`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph, limit: usize) -> Result<Option<Vec<Vertex>>> {
    for n in [g.order(), h.order()] {
        if n > limit {
            return Err(Error::IsomorphismLimit { n, limit });
        }
    }
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let n = g.order();
    let mut cg = vec![0u32; n];
    let mut ch = vec![0u32; n];
    if !refine(g, h, &mut cg, &mut ch) {
        return Ok(None);
    }
    Ok(search(g, h, cg, ch))
}

fn class_count(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Refines both colourings to the coarsest common equitable partition.
/// Returns `false` as soon as the colour histograms differ.
fn refine(g: &Graph, h: &Graph, cg: &mut [u32], ch: &mut [u32]) -> bool {
    let signature = |graph: &Graph, colors: &[u32], v: Vertex| {
        let mut nb: Vec<u32> = graph.neighbors(v).iter().map(|w| colors[w]).collect();
        nb.sort_unstable();
        (colors[v], nb)
    };
    let mut classes = class_count(cg);
    loop {
        let sg: Vec<_> = (0..g.order()).map(|v| signature(g, cg, v)).collect();
        let sh: Vec<_> = (0..h.order()).map(|v| signature(h, ch, v)).collect();
        let mut ids: BTreeMap<&(u32, Vec<u32>), (u32, usize, usize)> = BTreeMap::new();
        for s in &sg {
            ids.entry(s).or_default().1 += 1;
        }
        for s in &sh {
            ids.entry(s).or_default().2 += 1;
        }
        if ids.values().any(|&(_, a, b)| a != b) {
            return false;
        }
        for (i, entry) in ids.values_mut().enumerate() {
            entry.0 = i as u32;
        }
        for (c, s) in cg.iter_mut().zip(&sg) {
            *c = ids[s].0;
        }
        for (c, s) in ch.iter_mut().zip(&sh) {
            *c = ids[s].0;
        }
        let next = ids.len();
        if next == classes {
            return true;
        }
        classes = next;
    }
}

fn search(g: &Graph, h: &Graph, cg: Vec<u32>, ch: Vec<u32>) -> Option<Vec<Vertex>> {
    let n = g.order();
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &cg {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .filter(|&(_, &s)| s > 1)
        .min_by_key(|&(_, &s)| s)
        .map(|(&c, _)| c);

    let Some(color) = target else {
        let mut by_color = vec![usize::MAX; n];
        for (w, &c) in ch.iter().enumerate() {
            by_color[c as usize] = w;
        }
        let map: Vec<Vertex> = cg.iter().map(|&c| by_color[c as usize]).collect();
        let ok = g.edges().all(|(u, v)| h.has_edge(map[u], map[v]));
        return ok.then_some(map);
    };

    let fresh = sizes.len() as u32;
    let v = cg.iter().position(|&c| c == color).expect("class is non-empty");
    for w in (0..n).filter(|&w| ch[w] == color) {
        let mut cg2 = cg.clone();
        let mut ch2 = ch.clone();
        cg2[v] = fresh;
        ch2[w] = fresh;
        if refine(g, h, &mut cg2, &mut ch2) {
            if let Some(map) = search(g, h, cg2, ch2) {
                return Some(map);
            }
        }
    }
    None
}
