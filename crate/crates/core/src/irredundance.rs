//! Private neighbourhoods, irredundance and domination predicates, exact
//! `ir`/`IR` with full IR-set enumeration, and flip-sets.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{Vertex, VertexSet};

/// Default bound on the number of flip-sets returned by [`enumerate_flip_sets`].
pub const DEFAULT_FLIP_CAP: usize = 4096;

/// Vertices dominated exactly once, and at least twice, by a set.
#[derive(Clone, Copy, Default)]
struct Cover {
    once: VertexSet,
    many: VertexSet,
}

impl Cover {
    fn of(g: &Graph, set: VertexSet) -> Cover {
        set.iter().fold(Cover::default(), |c, v| c.add(g, v))
    }

    fn add(self, g: &Graph, v: Vertex) -> Cover {
        let nv = g.closed_neighbors(v);
        Cover {
            once: self.once.difference(nv).union(nv.difference(self.once).difference(self.many)),
            many: self.many.union(self.once.intersection(nv)),
        }
    }

    /// `PN(v, D)` for a member `v` of the covering set `D`.
    fn private(&self, g: &Graph, v: Vertex) -> VertexSet {
        g.closed_neighbors(v).intersection(self.once)
    }

    fn all_private(&self, g: &Graph, set: VertexSet) -> bool {
        set.iter().all(|v| !self.private(g, v).is_empty())
    }
}

/// `PN(v, D) = N[v] − N[D − {v}]`.
pub fn private_neighbors(g: &Graph, d: VertexSet, v: Vertex) -> Result<VertexSet> {
    g.check_set(d)?;
    if !d.contains(v) {
        return Err(Error::NotInSet(v));
    }
    let others = g.set_closed_neighbors(d.without(v));
    Ok(g.closed_neighbors(v).difference(others))
}

/// `EPN(v, D) = PN(v, D) − {v}`.
pub fn external_private_neighbors(g: &Graph, d: VertexSet, v: Vertex) -> Result<VertexSet> {
    Ok(private_neighbors(g, d, v)?.without(v))
}

/// Every member has a private neighbour. The empty set is irredundant.
pub fn is_irredundant(g: &Graph, d: VertexSet) -> bool {
    d.is_subset(g.vertices()) && Cover::of(g, d).all_private(g, d)
}

/// Irredundant, and no single vertex can be added. Irredundance is
/// closed under subsets, so this rules out every proper superset.
pub fn is_maximal_irredundant(g: &Graph, d: VertexSet) -> bool {
    if !is_irredundant(g, d) {
        return false;
    }
    let cover = Cover::of(g, d);
    g.vertices().difference(d).iter().all(|w| {
        let bigger = d.with(w);
        !cover.add(g, w).all_private(g, bigger)
    })
}

pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    d.is_subset(g.vertices()) && g.set_closed_neighbors(d) == g.vertices()
}

/// Dominating, and no proper subset dominates. Supersets of dominating
/// sets dominate, so only the sets `D − {v}` need to be tried.
pub fn is_minimal_dominating(g: &Graph, d: VertexSet) -> bool {
    is_dominating(g, d) && d.iter().all(|v| !is_dominating(g, d.without(v)))
}

fn max_irredundant_size(g: &Graph, next: Vertex, d: VertexSet, cover: Cover, best: &mut usize) {
    let n = g.order();
    *best = (*best).max(d.len());
    for v in next..n {
        if d.len() + (n - v) <= *best {
            break;
        }
        let c = cover.add(g, v);
        let d2 = d.with(v);
        if c.all_private(g, d2) {
            max_irredundant_size(g, v + 1, d2, c, best);
        }
    }
}

/// `IR(G)` without collecting the sets.
pub fn upper_irredundance_number(g: &Graph) -> usize {
    let mut best = 0;
    max_irredundant_size(g, 0, VertexSet::EMPTY, Cover::default(), &mut best);
    best
}

/// Calls `visit` on every irredundant set of exactly `size` vertices, in
/// lexicographic order. Stops early when `visit` returns `false`.
fn for_each_irredundant_of_size<F>(g: &Graph, size: usize, visit: &mut F) -> bool
where
    F: FnMut(VertexSet) -> bool,
{
    fn go<F: FnMut(VertexSet) -> bool>(
        g: &Graph,
        size: usize,
        next: Vertex,
        d: VertexSet,
        cover: Cover,
        visit: &mut F,
    ) -> bool {
        if d.len() == size {
            return visit(d);
        }
        let n = g.order();
        for v in next..n {
            if d.len() + (n - v) < size {
                break;
            }
            let c = cover.add(g, v);
            let d2 = d.with(v);
            if c.all_private(g, d2) && !go(g, size, v + 1, d2, c, visit) {
                return false;
            }
        }
        true
    }
    go(g, size, 0, VertexSet::EMPTY, Cover::default(), visit)
}

/// `IR(G)` and every IR-set, in lexicographic order of the sorted member
/// lists.
///
/// Irredundance is closed under taking subsets, so a depth-first search
/// that only extends irredundant sets reaches all of them. The first pass
/// finds the value with the bound `|D| + remaining <= best`; the second
/// collects every irredundant set of that size.
pub fn upper_irredundance(g: &Graph) -> (usize, Vec<VertexSet>) {
    upper_irredundance_capped(g, usize::MAX).expect("uncapped enumeration cannot overflow")
}

/// As [`upper_irredundance`], refusing once more than `cap` IR-sets exist.
pub fn upper_irredundance_capped(g: &Graph, cap: usize) -> Result<(usize, Vec<VertexSet>)> {
    let value = upper_irredundance_number(g);
    let mut sets = Vec::new();
    let mut overflow = false;
    for_each_irredundant_of_size(g, value, &mut |d| {
        if sets.len() == cap {
            overflow = true;
            return false;
        }
        sets.push(d);
        true
    });
    if overflow {
        return Err(Error::TooManyIrSets { cap });
    }
    debug_assert!(sets.windows(2).all(|w| w[0] < w[1]));
    Ok((value, sets))
}

/// `ir(G)` with the lexicographically first maximal irredundant set of that
/// size, trying sizes `0, 1, 2, ...`.
pub fn lower_irredundance(g: &Graph) -> (usize, VertexSet) {
    for k in 0..=g.order() {
        let mut found = None;
        for_each_irredundant_of_size(g, k, &mut |d| {
            if is_maximal_irredundant(g, d) {
                found = Some(d);
                false
            } else {
                true
            }
        });
        if let Some(d) = found {
            return (k, d);
        }
    }
    unreachable!("some irredundant set is maximal")
}

/// Checks that `x` is irredundant of size `IR(G)`.
pub fn is_ir_set(g: &Graph, x: VertexSet) -> bool {
    is_irredundant(g, x) && x.len() == upper_irredundance_number(g)
}

/// Members of `x` with a non-empty external private neighbourhood.
pub fn epn_bearing(g: &Graph, x: VertexSet) -> VertexSet {
    let cover = Cover::of(g, x);
    x.iter()
        .filter(|&v| !cover.private(g, v).without(v).is_empty())
        .collect()
}

/// Which members of `X` to flip, and the external private neighbour each
/// one is replaced by.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FlipChoice {
    pub flipped: VertexSet,
    pub selector: BTreeMap<Vertex, Vertex>,
}

impl FlipChoice {
    pub fn new(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let selector: BTreeMap<_, _> = pairs.into_iter().collect();
        FlipChoice {
            flipped: selector.keys().copied().collect(),
            selector,
        }
    }

    fn validate(&self, g: &Graph, x: VertexSet) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidFlip(msg));
        if !self.flipped.is_subset(x) {
            return invalid(format!("{} is not a subset of {x}", self.flipped));
        }
        let keys: VertexSet = self.selector.keys().copied().collect();
        if keys != self.flipped || keys.len() != self.selector.len() {
            return invalid("selector keys must be exactly the flipped vertices".into());
        }
        let stay = x.difference(self.flipped);
        if let Some(z) = g.non_isolated_in(x).intersection(stay).first() {
            return invalid(format!("vertex {z} is not isolated in G[X] but is not flipped"));
        }
        let cover = Cover::of(g, x);
        for (&y, &y2) in &self.selector {
            if y2 == y || !cover.private(g, y).contains(y2) {
                return invalid(format!("{y2} is not an external private neighbour of {y}"));
            }
        }
        Ok(())
    }
}

/// `X' = (X − Y) ∪ Y'` for an irredundant `X`. The result is irredundant
/// of the same size.
pub fn flip_irredundant(g: &Graph, x: VertexSet, choice: &FlipChoice) -> Result<VertexSet> {
    g.check_set(x)?;
    if !is_irredundant(g, x) {
        return Err(Error::NotIrSet(x.to_string()));
    }
    choice.validate(g, x)?;
    let image: VertexSet = choice.selector.values().copied().collect();
    let result = x.difference(choice.flipped).union(image);
    debug_assert!(is_irredundant(g, result) && result.len() == x.len());
    Ok(result)
}

/// The flip-set of the IR-set `x` using `choice`.
pub fn flip_set(g: &Graph, x: VertexSet, choice: &FlipChoice) -> Result<VertexSet> {
    if !is_ir_set(g, x) {
        return Err(Error::NotIrSet(x.to_string()));
    }
    flip_irredundant(g, x, choice)
}

/// Flip-sets found by [`enumerate_flip_sets`], sorted; `truncated` is set
/// when more existed than the cap allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipSets {
    pub sets: Vec<VertexSet>,
    pub truncated: bool,
}

/// Every flip-set of the irredundant set `x`: vertices of positive degree in
/// `G[X]` are always flipped, isolated vertices with external private
/// neighbours may go either way, and each flipped vertex may take any of
/// its external private neighbours. `x` itself is included (nothing flipped)
/// whenever `G[X]` is edgeless.
pub fn enumerate_flips_of_irredundant(g: &Graph, x: VertexSet, cap: usize) -> Result<FlipSets> {
    g.check_set(x)?;
    if !is_irredundant(g, x) {
        return Err(Error::NotIrSet(x.to_string()));
    }
    let cover = Cover::of(g, x);
    let forced = g.non_isolated_in(x);
    let optional = epn_bearing(g, x).difference(forced).to_vec();
    let epn = |v: Vertex| cover.private(g, v).without(v).to_vec();

    let mut found = BTreeSet::new();
    let mut truncated = false;
    let masks = 1u128.checked_shl(optional.len() as u32).unwrap_or(u128::MAX);
    'subsets: for mask in 0..masks {
        let mut flipped = forced;
        for (i, &v) in optional.iter().enumerate() {
            if mask >> i & 1 == 1 {
                flipped.insert(v);
            }
        }
        let ys = flipped.to_vec();
        let choices: Vec<Vec<Vertex>> = ys.iter().map(|&y| epn(y)).collect();
        let base = x.difference(flipped);
        let mut idx = vec![0usize; ys.len()];
        loop {
            let image: VertexSet = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            let candidate = base.union(image);
            debug_assert!(is_irredundant(g, candidate));
            if !found.contains(&candidate) {
                if found.len() == cap {
                    truncated = true;
                    break 'subsets;
                }
                found.insert(candidate);
            }
            // Odometer over the selector choices.
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(FlipSets {
        sets: found.into_iter().collect(),
        truncated,
    })
}

/// [`enumerate_flips_of_irredundant`] for an IR-set.
pub fn enumerate_flip_sets(g: &Graph, x: VertexSet, cap: usize) -> Result<FlipSets> {
    if !is_ir_set(g, x) {
        return Err(Error::NotIrSet(x.to_string()));
    }
    enumerate_flips_of_irredundant(g, x, cap)
}

/// External private neighbourhood of one member of an IR-set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexEpn {
    pub vertex: Vertex,
    pub epn: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrSetInfo {
    pub set: VertexSet,
    pub independent: bool,
    /// Members with positive degree in `G[X]`.
    pub positive_degree: usize,
    pub epn: Vec<VertexEpn>,
}

impl IrSetInfo {
    pub fn describe(g: &Graph, set: VertexSet) -> Self {
        let cover = Cover::of(g, set);
        IrSetInfo {
            set,
            independent: g.is_independent(set),
            positive_degree: g.non_isolated_in(set).len(),
            epn: set
                .iter()
                .map(|v| VertexEpn {
                    vertex: v,
                    epn: cover.private(g, v).without(v),
                })
                .collect(),
        }
    }

    /// Number of members with a non-empty EPN.
    pub fn epn_bearing(&self) -> usize {
        self.epn.iter().filter(|e| !e.epn.is_empty()).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrredundanceReport {
    pub n: usize,
    pub ir: usize,
    pub ir_witness: VertexSet,
    #[serde(rename = "IR")]
    pub upper_ir: usize,
    pub ir_sets: Vec<IrSetInfo>,
}

impl IrredundanceReport {
    pub fn compute(g: &Graph) -> Self {
        let (upper_ir, sets) = upper_irredundance(g);
        Self::from_parts(g, upper_ir, &sets)
    }

    pub fn compute_capped(g: &Graph, cap: usize) -> Result<Self> {
        let (upper_ir, sets) = upper_irredundance_capped(g, cap)?;
        Ok(Self::from_parts(g, upper_ir, &sets))
    }

    fn from_parts(g: &Graph, upper_ir: usize, sets: &[VertexSet]) -> Self {
        let (ir, ir_witness) = lower_irredundance(g);
        IrredundanceReport {
            n: g.order(),
            ir,
            ir_witness,
            upper_ir,
            ir_sets: sets.iter().map(|&s| IrSetInfo::describe(g, s)).collect(),
        }
    }

    /// `ir=1 IR=1 sets=[{0},{1}]`.
    pub fn summary(&self) -> String {
        let sets: Vec<String> = self.ir_sets.iter().map(|s| s.set.to_string()).collect();
        format!("ir={} IR={} sets=[{}]", self.ir, self.upper_ir, sets.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn fam(s: &str) -> Graph {
        FamilySpec::parse(s).unwrap().build().unwrap()
    }

    #[test]
    fn pn_basics() {
        let e = Graph::new(3).unwrap();
        assert_eq!(private_neighbors(&e, VertexSet::from([1]), 1).unwrap(), VertexSet::from([1]));
        assert_eq!(
            private_neighbors(&e, VertexSet::from([1]), 0).unwrap_err(),
            Error::NotInSet(0)
        );
        let p3 = fam("path3");
        let d = VertexSet::from([0, 1]);
        assert_eq!(private_neighbors(&p3, d, 0).unwrap(), VertexSet::EMPTY);
        assert_eq!(private_neighbors(&p3, d, 1).unwrap(), VertexSet::from([2]));
        assert_eq!(external_private_neighbors(&p3, d, 1).unwrap(), VertexSet::from([2]));
    }

    #[test]
    fn predicates() {
        let k3 = fam("k3");
        assert!(!is_irredundant(&k3, VertexSet::from([0, 1])));
        let p3 = fam("path3");
        let d = VertexSet::from([0, 2]);
        assert!(is_irredundant(&p3, d));
        assert!(is_dominating(&p3, d));
        assert!(is_minimal_dominating(&p3, d));
        assert!(is_maximal_irredundant(&p3, d));
        assert!(is_irredundant(&p3, VertexSet::EMPTY));
        assert!(!is_maximal_irredundant(&p3, VertexSet::EMPTY));
        assert!(is_maximal_irredundant(&Graph::new(0).unwrap(), VertexSet::EMPTY));
        assert!(!is_dominating(&p3, VertexSet::EMPTY));
        assert!(is_dominating(&Graph::new(0).unwrap(), VertexSet::EMPTY));
        assert!(!is_minimal_dominating(&p3, VertexSet::from([0, 1, 2])));
    }

    #[test]
    fn complete_graphs_have_ir_one() {
        for n in 1..=5 {
            let (value, sets) = upper_irredundance(&Graph::complete(n).unwrap());
            assert_eq!(value, 1);
            assert_eq!(sets, (0..n).map(VertexSet::singleton).collect::<Vec<_>>());
            assert_eq!(lower_irredundance(&Graph::complete(n).unwrap()).0, 1);
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(upper_irredundance(&fam("star3")), (3, vec![VertexSet::from([1, 2, 3])]));
        assert_eq!(lower_irredundance(&fam("path3")), (1, VertexSet::from([1])));
        assert_eq!(lower_irredundance(&fam("cycle4")).0, 2);
        assert_eq!(upper_irredundance(&Graph::new(0).unwrap()), (0, vec![VertexSet::EMPTY]));
        assert_eq!(lower_irredundance(&Graph::new(0).unwrap()), (0, VertexSet::EMPTY));
    }

    #[test]
    fn capped_enumeration_refuses() {
        // 4K2 has 16 IR-sets.
        let g = fam("4k2");
        assert_eq!(upper_irredundance_capped(&g, 16).unwrap().1.len(), 16);
        assert_eq!(
            upper_irredundance_capped(&g, 15).unwrap_err(),
            Error::TooManyIrSets { cap: 15 }
        );
    }

    #[test]
    fn flip_choice_validation() {
        let p4 = fam("path4");
        // {1,2} is an IR-set of P4 with EPN(1) = {0}, EPN(2) = {3}.
        let x = VertexSet::from([1, 2]);
        assert!(is_ir_set(&p4, x));
        let ok = FlipChoice::new([(1, 0), (2, 3)]);
        assert_eq!(flip_set(&p4, x, &ok).unwrap(), VertexSet::from([0, 3]));
        let partial = FlipChoice::new([(1, 0)]);
        assert!(matches!(flip_set(&p4, x, &partial), Err(Error::InvalidFlip(_))));
        let wrong = FlipChoice::new([(1, 3), (2, 0)]);
        assert!(matches!(flip_set(&p4, x, &wrong), Err(Error::InvalidFlip(_))));
        assert!(matches!(
            flip_set(&p4, VertexSet::from([0]), &FlipChoice::default()),
            Err(Error::NotIrSet(_))
        ));
    }

    #[test]
    fn flip_enumeration_truncates() {
        // In the star K_{1,5} with X = {0}: EPN(0) = the five leaves.
        let g = fam("star5");
        let x = VertexSet::from([0]);
        let all = enumerate_flips_of_irredundant(&g, x, 100).unwrap();
        assert_eq!(all.sets.len(), 6);
        assert!(!all.truncated);
        let few = enumerate_flips_of_irredundant(&g, x, 4).unwrap();
        assert_eq!(few.sets.len(), 4);
        assert!(few.truncated);
    }

    #[test]
    fn independent_without_epn_flips_to_itself() {
        let g = fam("star3");
        let x = VertexSet::from([1, 2, 3]);
        let flips = enumerate_flip_sets(&g, x, DEFAULT_FLIP_CAP).unwrap();
        assert_eq!(flips.sets, vec![x]);
    }

    #[test]
    fn report_summary_and_json() {
        let r = IrredundanceReport::compute(&Graph::complete(2).unwrap());
        assert_eq!(r.summary(), "ir=1 IR=1 sets=[{0},{1}]");
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["IR"], 1);
        assert_eq!(v["ir_sets"][1]["set"], serde_json::json!([1]));
        assert_eq!(v["ir_sets"][0]["independent"], true);
    }
}
