//! Labeled presentation graphs and the elementary queries every other module
//! builds on.
//!
//! A [`PresentationGraph`] stores its vertex names in lexicographic order and
//! a symmetric label matrix. A missing pair is the label `∞`; present pairs
//! carry an integer `m >= 2`. Subsets of vertices are [`VertexSet`] bitmasks
//! indexed by position in that order, which caps graphs at
//! [`MAX_VERTICES`] vertices.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use thiserror::Error;

/// Largest supported vertex count (one bit per vertex in a [`VertexSet`]).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex name `{0}` (names must be non-empty and free of whitespace, `,` and `#`)")]
    InvalidVertexName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-edge on vertex `{0}`")]
    SelfEdge(String),
    #[error("label {label} on pair {u} {v} is below 2")]
    LabelTooSmall { u: String, v: String, label: u64 },
    #[error("pair {0} {1} is given more than once")]
    DuplicateEdge(String, String),
    #[error("{0} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex set is not contained in the graph")]
    NotASubset,
}

/// Coxeter label of a vertex pair. `Infinity` is the absent edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// A subset of the vertices of some graph, as a bitmask over vertex indices.
///
/// Ordering is lexicographic on the ascending index lists, which coincides
/// with lexicographic order on sorted vertex names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VERTICES && self.0 & (1u64 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1u64 << i))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Re-index a subset of `within` into the index space of the induced
    /// subgraph on `within` (the k-th element of `within` becomes index k).
    pub fn compress(self, within: VertexSet) -> VertexSet {
        debug_assert!(self.is_subset(within));
        let mut out = 0u64;
        for (k, i) in within.iter().enumerate() {
            if self.contains(i) {
                out |= 1u64 << k;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`VertexSet::compress`].
    pub fn expand(self, within: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (k, i) in within.iter().enumerate() {
            if self.contains(k) {
                out |= 1u64 << i;
            }
        }
        VertexSet(out)
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VertexSet(cur))
        })
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.iter(), other.iter());
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

#[derive(Debug, Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Connected components of the graph given by `adjacency`, restricted to
/// `within`, ordered by smallest member.
pub fn connected_components(adjacency: &[VertexSet], within: VertexSet) -> Vec<VertexSet> {
    let mut remaining = within;
    let mut out = Vec::new();
    while let Some(start) = remaining.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | adjacency[v];
            }
            frontier = (next & within) - comp;
            comp = comp | frontier;
        }
        remaining = remaining - comp;
        out.push(comp);
    }
    out
}

pub(crate) fn valid_vertex_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == ',' || c == '#')
}

/// Incremental construction with per-step validation; used by the parsers so
/// that each error can be tied to its source line.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: BTreeMap<String, ()>,
    labels: BTreeMap<(String, String), Label>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<(), GraphError> {
        if !valid_vertex_name(name) {
            return Err(GraphError::InvalidVertexName(name.to_string()));
        }
        if self.vertices.insert(name.to_string(), ()).is_some() {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        if self.vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.vertices.len()));
        }
        Ok(())
    }

    /// Record the label of pair `{u, v}`. `Label::Infinity` is accepted and
    /// still counts as a declaration of the pair.
    pub fn set_label(&mut self, u: &str, v: &str, label: Label) -> Result<(), GraphError> {
        for name in [u, v] {
            if !self.vertices.contains_key(name) {
                return Err(GraphError::UnknownVertex(name.to_string()));
            }
        }
        if u == v {
            return Err(GraphError::SelfEdge(u.to_string()));
        }
        if let Label::Finite(m) = label {
            if m < 2 {
                return Err(GraphError::LabelTooSmall {
                    u: u.to_string(),
                    v: v.to_string(),
                    label: m.into(),
                });
            }
        }
        let key = if u < v {
            (u.to_string(), v.to_string())
        } else {
            (v.to_string(), u.to_string())
        };
        if self.labels.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        self.labels.insert(key, label);
        Ok(())
    }

    pub fn build(self) -> PresentationGraph {
        let names: Vec<String> = self.vertices.into_keys().collect();
        let n = names.len();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut labels = vec![None; n * n];
        for ((u, v), label) in &self.labels {
            if let Label::Finite(m) = label {
                let (i, j) = (index[u.as_str()], index[v.as_str()]);
                labels[i * n + j] = Some(*m);
                labels[j * n + i] = Some(*m);
            }
        }
        PresentationGraph::from_matrix(names, labels)
    }
}

/// An Artin group presentation graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PresentationGraph {
    names: Vec<String>,
    labels: Vec<Option<u32>>,
    adjacency: Vec<VertexSet>,
}

/// A pair of non-adjacent vertices at distance two, with all their common
/// neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distance2Pair {
    pub u: usize,
    pub w: usize,
    pub common: VertexSet,
}

impl PresentationGraph {
    /// Build a graph from vertex names and finite-labeled pairs.
    pub fn new<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S, u32)],
    ) -> Result<Self, GraphError> {
        let mut builder = GraphBuilder::new();
        for v in vertices {
            builder.add_vertex(v.as_ref())?;
        }
        for (u, v, m) in edges {
            builder.set_label(u.as_ref(), v.as_ref(), Label::Finite(*m))?;
        }
        Ok(builder.build())
    }

    pub fn empty() -> Self {
        Self::from_matrix(Vec::new(), Vec::new())
    }

    fn from_matrix(names: Vec<String>, labels: Vec<Option<u32>>) -> Self {
        let n = names.len();
        let adjacency = (0..n)
            .map(|i| (0..n).filter(|&j| labels[i * n + j].is_some()).collect())
            .collect();
        PresentationGraph {
            names,
            labels,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names
            .binary_search_by(|probe| probe.as_str().cmp(name))
            .ok()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        match self.labels[i * self.vertex_count() + j] {
            Some(m) => Label::Finite(m),
            None => Label::Infinity,
        }
    }

    /// Finite label of `{i, j}`, `None` for `∞` (and for `i == j`).
    pub fn finite_label(&self, i: usize, j: usize) -> Option<u32> {
        self.labels[i * self.vertex_count() + j]
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    /// Neighbours of `i` in the adjacency graph (pairs with finite labels).
    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adjacency[i]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adjacency
    }

    /// Finite-labeled pairs `(i, j, m)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| self.finite_label(i, j).map(|m| (i, j, m)))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn check_subset(&self, set: VertexSet) -> Result<(), GraphError> {
        if set.is_subset(self.all()) {
            Ok(())
        } else {
            Err(GraphError::NotASubset)
        }
    }

    /// Resolve vertex names into a [`VertexSet`].
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet, GraphError> {
        names
            .iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| GraphError::UnknownVertex(s.as_ref().to_string()))
            })
            .collect()
    }

    pub fn set_names(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    /// `{a,b,c}` rendering of a vertex set.
    pub fn format_set(&self, set: VertexSet) -> String {
        format!("{{{}}}", self.set_names(set).join(","))
    }

    /// The full subgraph on `set`. Vertex `k` of the result is the k-th
    /// element of `set`.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<PresentationGraph, GraphError> {
        self.check_subset(set)?;
        let idx: Vec<usize> = set.iter().collect();
        let n = self.vertex_count();
        let names = idx.iter().map(|&i| self.names[i].clone()).collect();
        let labels = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.labels[i * n + j])
            .collect();
        Ok(PresentationGraph::from_matrix(names, labels))
    }

    pub fn dynkin_view(&self) -> DynkinView {
        let n = self.vertex_count();
        let adjacency = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && self.finite_label(i, j) != Some(2))
                    .collect()
            })
            .collect();
        DynkinView { adjacency }
    }

    /// True iff every pair inside `set` carries a finite label.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        debug_assert!(set.is_subset(self.all()));
        set.iter().all(|i| (set.without(i)).is_subset(self.adjacency[i]))
    }

    /// Pairs of `set` at distance exactly two in the adjacency graph, each
    /// with its full set of common neighbours in the whole graph.
    pub fn distance2_pairs(&self, set: VertexSet) -> Result<Vec<Distance2Pair>, GraphError> {
        self.check_subset(set)?;
        let mut out = Vec::new();
        for u in set {
            for w in set.iter().filter(|&w| w > u) {
                if self.is_edge(u, w) {
                    continue;
                }
                let common = self.adjacency[u] & self.adjacency[w];
                if !common.is_empty() {
                    out.push(Distance2Pair { u, w, common });
                }
            }
        }
        Ok(out)
    }

    /// Connected components of the adjacency graph restricted to `within`.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        connected_components(&self.adjacency, within)
    }
}

/// The Dynkin-diagram convention: an edge wherever the label is not 2,
/// including `∞` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinView {
    adjacency: Vec<VertexSet>,
}

impl DynkinView {
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> VertexSet {
        self.adjacency[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        connected_components(&self.adjacency, within)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3(a: u32, b: u32, c: u32) -> PresentationGraph {
        PresentationGraph::new(&["a", "b", "c"], &[("a", "b", a), ("b", "c", b), ("a", "c", c)])
            .unwrap()
    }

    fn c4(m: u32) -> PresentationGraph {
        PresentationGraph::new(
            &["a", "b", "c", "d"],
            &[("a", "b", m), ("b", "c", m), ("c", "d", m), ("a", "d", m)],
        )
        .unwrap()
    }

    #[test]
    fn vertex_set_order_is_lexicographic_on_members() {
        let a = VertexSet::from_iter([0, 3]);
        let b = VertexSet::from_iter([0, 1, 5]);
        let c = VertexSet::from_iter([0]);
        assert!(b < a);
        assert!(c < b);
        assert!(VertexSet::EMPTY < c);
    }

    #[test]
    fn compress_expand_round_trip() {
        let within = VertexSet::from_iter([1, 4, 6, 9]);
        let s = VertexSet::from_iter([4, 9]);
        assert_eq!(s.compress(within), VertexSet::from_iter([1, 3]));
        assert_eq!(s.compress(within).expand(within), s);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = VertexSet::from_iter([0, 2, 5]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = k3(3, 3, 3);
        let ab = g.vertex_set(&["a", "b"]).unwrap();
        let h = g.induced_subgraph(ab).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1, 3)]);
        assert_eq!(g.induced_subgraph(g.all()).unwrap(), g);
        assert!(g.induced_subgraph(VertexSet::EMPTY).unwrap().is_empty());
        assert_eq!(
            g.induced_subgraph(VertexSet::singleton(7)),
            Err(GraphError::NotASubset)
        );
    }

    #[test]
    fn dynkin_view_cases() {
        // C4 with all labels 2: only the diagonals remain.
        let d = c4(2).dynkin_view();
        assert_eq!(d.edge_count(), 2);
        assert!(d.has_edge(0, 2) && d.has_edge(1, 3));

        // K3(2,3,3) is a path.
        let d = k3(2, 3, 3).dynkin_view();
        assert_eq!(d.edge_count(), 2);
        assert!(!d.has_edge(0, 1));

        let free = PresentationGraph::new::<&str>(&["a", "b", "c", "d"], &[]).unwrap();
        assert_eq!(free.dynkin_view().edge_count(), 6);
    }

    #[test]
    fn clique_cases() {
        let g = k3(2, 3, 3);
        assert!(g.is_clique(g.all()));
        assert!(!c4(5).is_clique(VertexSet::full(4)));
        assert!(c4(5).is_clique(VertexSet::singleton(2)));
        assert!(c4(5).is_clique(VertexSet::EMPTY));
    }

    #[test]
    fn distance2_on_path_and_clique() {
        let p = PresentationGraph::new(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 4)]).unwrap();
        let ac = p.vertex_set(&["a", "c"]).unwrap();
        let pairs = p.distance2_pairs(ac).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].common, VertexSet::singleton(1));

        let g = k3(3, 3, 3);
        assert!(g.distance2_pairs(g.all()).unwrap().is_empty());
    }

    #[test]
    fn builder_rejects_bad_input() {
        let mut b = GraphBuilder::new();
        b.add_vertex("a").unwrap();
        assert_eq!(b.add_vertex("a"), Err(GraphError::DuplicateVertex("a".into())));
        assert!(matches!(b.add_vertex("x y"), Err(GraphError::InvalidVertexName(_))));
        assert_eq!(
            b.set_label("a", "a", Label::Finite(3)),
            Err(GraphError::SelfEdge("a".into()))
        );
        b.add_vertex("b").unwrap();
        assert!(matches!(
            b.set_label("a", "b", Label::Finite(1)),
            Err(GraphError::LabelTooSmall { .. })
        ));
        b.set_label("b", "a", Label::Finite(3)).unwrap();
        assert!(matches!(
            b.set_label("a", "b", Label::Finite(3)),
            Err(GraphError::DuplicateEdge(..))
        ));
        assert_eq!(
            b.set_label("a", "z", Label::Finite(3)),
            Err(GraphError::UnknownVertex("z".into()))
        );
    }

    #[test]
    fn components_of_disconnected_graph() {
        let g = PresentationGraph::new(&["a", "b", "c", "d"], &[("a", "c", 3)]).unwrap();
        let comps = g.components(g.all());
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], VertexSet::from_iter([0, 2]));
    }
}
