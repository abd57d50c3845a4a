use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

/// Maximum number of vertices a [`Graph`](crate::Graph) may have.
pub const MAX_VERTICES: usize = 128;

/// Vertex index into a graph.
pub type Vertex = usize;

/// A set of vertices of some graph, stored as a 128-bit mask.
///
/// The set does not remember which graph it belongs to; operations that take
/// a graph and a set check that the set fits inside the graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < MAX_VERTICES && self.0 & (1u128 << v) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v < MAX_VERTICES);
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < MAX_VERTICES {
            self.0 &= !(1u128 << v);
        }
    }

    #[must_use]
    pub fn with(mut self, v: Vertex) -> Self {
        self.insert(v);
        self
    }

    #[must_use]
    pub fn without(mut self, v: Vertex) -> Self {
        self.remove(v);
        self
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Vertex)
    }

    /// Ascending iterator over the members.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending member lists, so `{0,1} < {0,2} < {1}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as Vertex;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formats as `{0,2,5}`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Serialized as a sorted array of vertex indices.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let vs = Vec::<Vertex>::deserialize(deserializer)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_bounds() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(VertexSet::full(128).len(), 128);
        assert!(VertexSet::full(128).contains(127));
        assert!(!VertexSet::full(128).contains(128));
    }

    #[test]
    fn lexicographic_order() {
        let mut sets = vec![
            VertexSet::from([1]),
            VertexSet::from([0, 2]),
            VertexSet::from([0, 1]),
            VertexSet::from([0, 1, 5]),
        ];
        sets.sort();
        assert_eq!(
            sets,
            vec![
                VertexSet::from([0, 1]),
                VertexSet::from([0, 1, 5]),
                VertexSet::from([0, 2]),
                VertexSet::from([1]),
            ]
        );
    }

    #[test]
    fn display_and_json() {
        let s = VertexSet::from([4, 0, 127]);
        assert_eq!(s.to_string(), "{0,4,127}");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[0,4,127]");
        let back: VertexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[128]").is_err());
    }
}
