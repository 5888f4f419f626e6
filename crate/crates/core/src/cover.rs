//! Complete covers of a presentation graph, their link complexes `L_U`, and
//! the flag test.
//!
//! The two constructive cover kinds are kept as membership predicates; only
//! the 1-skeleton of `L_U` is ever materialized. Flagness is decided on the
//! maximal cliques of the 1-skeleton, which suffices because a cover is
//! closed under taking subsets.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cliques::maximal_cliques;
use crate::graph::{GraphError, PresentationGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverKind {
    /// All cliques of the graph.
    CliquesOnly,
    /// All cliques plus every subset of `Ω`.
    CliquesPlusSubgraphsOf(VertexSet),
    /// A literal family of vertex sets.
    Explicit(BTreeSet<VertexSet>),
}

/// First violated cover axiom.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverViolation {
    #[error("the empty subgraph is missing")]
    MissingEmpty,
    #[error("edge {0:?} of the graph is not covered")]
    MissingEdge((usize, usize)),
    #[error("member {member:?} has a subset {missing:?} outside the cover")]
    NotHereditary { member: VertexSet, missing: VertexSet },
    #[error("member {0:?} is not a vertex set of the graph")]
    NotASubset(VertexSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("invalid cover: {0}")]
    Invalid(#[from] CoverViolation),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct CompleteCover<'g> {
    graph: &'g PresentationGraph,
    kind: CoverKind,
}

impl<'g> CompleteCover<'g> {
    pub fn cliques(graph: &'g PresentationGraph) -> Self {
        CompleteCover {
            graph,
            kind: CoverKind::CliquesOnly,
        }
    }

    pub fn cliques_plus_subgraphs_of(
        graph: &'g PresentationGraph,
        omega: VertexSet,
    ) -> Result<Self, GraphError> {
        graph.check_subset(omega)?;
        Ok(CompleteCover {
            graph,
            kind: CoverKind::CliquesPlusSubgraphsOf(omega),
        })
    }

    /// A literal family. Nothing is added; run [`CompleteCover::validate`].
    pub fn explicit(graph: &'g PresentationGraph, members: impl IntoIterator<Item = VertexSet>) -> Self {
        CompleteCover {
            graph,
            kind: CoverKind::Explicit(members.into_iter().collect()),
        }
    }

    /// The downward closure of `generators` together with every edge.
    pub fn explicit_closure(
        graph: &'g PresentationGraph,
        generators: impl IntoIterator<Item = VertexSet>,
    ) -> Self {
        let mut members = BTreeSet::new();
        let edges = graph
            .edges()
            .map(|(i, j, _)| VertexSet::singleton(i).with(j));
        for g in generators.into_iter().chain(edges).chain([VertexSet::EMPTY]) {
            for s in g.subsets() {
                members.insert(s);
            }
        }
        Self::explicit(graph, members)
    }

    /// Empty set, singletons and edges only: `L_U` is the graph itself as a
    /// 1-dimensional complex.
    pub fn hollow(graph: &'g PresentationGraph) -> Self {
        let singletons = graph.all().iter().map(VertexSet::singleton);
        Self::explicit_closure(graph, singletons)
    }

    /// Resolve lists of vertex names (as in the JSON `cover` key).
    pub fn from_names<S: AsRef<str>>(
        graph: &'g PresentationGraph,
        members: &[Vec<S>],
    ) -> Result<Self, GraphError> {
        let sets = members
            .iter()
            .map(|m| graph.vertex_set(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::explicit(graph, sets))
    }

    pub fn graph(&self) -> &'g PresentationGraph {
        self.graph
    }

    pub fn kind(&self) -> &CoverKind {
        &self.kind
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        match &self.kind {
            CoverKind::CliquesOnly => self.graph.is_clique(set),
            CoverKind::CliquesPlusSubgraphsOf(omega) => {
                set.is_subset(*omega) || self.graph.is_clique(set)
            }
            CoverKind::Explicit(members) => members.contains(&set),
        }
    }

    /// Check both axioms. The constructive kinds hold by construction; the
    /// explicit kind is checked exhaustively (one-smaller subsets suffice).
    pub fn validate(&self) -> Result<(), CoverViolation> {
        let CoverKind::Explicit(members) = &self.kind else {
            return Ok(());
        };
        if let Some(bad) = members.iter().find(|m| !m.is_subset(self.graph.all())) {
            return Err(CoverViolation::NotASubset(*bad));
        }
        if !members.contains(&VertexSet::EMPTY) {
            return Err(CoverViolation::MissingEmpty);
        }
        if let Some((i, j, _)) = self
            .graph
            .edges()
            .find(|&(i, j, _)| !members.contains(&VertexSet::singleton(i).with(j)))
        {
            return Err(CoverViolation::MissingEdge((i, j)));
        }
        for &member in members {
            for v in member {
                if !members.contains(&member.without(v)) {
                    return Err(CoverViolation::NotHereditary {
                        member,
                        missing: member.without(v),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn link_complex(&self) -> Result<LinkComplex<'_, 'g>, CoverViolation> {
        self.validate()?;
        let n = self.graph.vertex_count();
        let skeleton = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| v != u && self.contains(VertexSet::singleton(u).with(v)))
                    .collect()
            })
            .collect();
        Ok(LinkComplex {
            cover: self,
            skeleton,
        })
    }
}

/// `L_U`: vertices of the graph; a vertex set spans a simplex iff it is a
/// member of the cover.
#[derive(Debug, Clone)]
pub struct LinkComplex<'c, 'g> {
    cover: &'c CompleteCover<'g>,
    skeleton: Vec<VertexSet>,
}

/// Outcome of the flag test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagReport {
    Flag,
    /// A clique of the 1-skeleton outside the cover, all of whose proper
    /// subsets are in the cover.
    NotFlag { witness: VertexSet },
}

impl FlagReport {
    pub fn is_flag(&self) -> bool {
        matches!(self, FlagReport::Flag)
    }
}

impl LinkComplex<'_, '_> {
    pub fn vertex_count(&self) -> usize {
        self.skeleton.len()
    }

    pub fn is_simplex(&self, set: VertexSet) -> bool {
        self.cover.contains(set)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.skeleton[u].contains(v)
    }

    pub fn skeleton(&self) -> &[VertexSet] {
        &self.skeleton
    }

    pub fn is_flag(&self) -> FlagReport {
        let all = VertexSet::full(self.vertex_count());
        for clique in maximal_cliques(&self.skeleton, all) {
            if !self.is_simplex(clique) {
                return FlagReport::NotFlag {
                    witness: self.shrink(clique),
                };
            }
        }
        FlagReport::Flag
    }

    fn shrink(&self, mut clique: VertexSet) -> VertexSet {
        'outer: loop {
            for v in clique {
                let smaller = clique.without(v);
                if !self.is_simplex(smaller) {
                    clique = smaller;
                    continue 'outer;
                }
            }
            return clique;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> PresentationGraph {
        PresentationGraph::new(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)]).unwrap()
    }

    #[test]
    fn cliques_cover_is_valid_and_flag() {
        let g = k3();
        let cover = CompleteCover::cliques(&g);
        assert!(cover.validate().is_ok());
        assert!(cover.link_complex().unwrap().is_flag().is_flag());
    }

    #[test]
    fn hollow_triangle() {
        let g = k3();
        let cover = CompleteCover::hollow(&g);
        assert!(cover.validate().is_ok());
        let link = cover.link_complex().unwrap();
        assert!(link.has_edge(0, 1) && link.has_edge(1, 2) && link.has_edge(0, 2));
        assert!(!link.is_simplex(g.all()));
        assert_eq!(link.is_flag(), FlagReport::NotFlag { witness: g.all() });
    }

    #[test]
    fn explicit_missing_edge_is_reported() {
        let g = k3();
        let members = [
            VertexSet::EMPTY,
            VertexSet::singleton(0),
            VertexSet::singleton(1),
            VertexSet::singleton(2),
            VertexSet::from_iter([0, 1]),
            VertexSet::from_iter([1, 2]),
        ];
        let cover = CompleteCover::explicit(&g, members);
        assert_eq!(cover.validate(), Err(CoverViolation::MissingEdge((0, 2))));
        assert!(cover.link_complex().is_err());
    }

    #[test]
    fn explicit_not_hereditary() {
        let g = k3();
        let mut cover = CompleteCover::hollow(&g);
        if let CoverKind::Explicit(m) = &mut cover.kind {
            m.remove(&VertexSet::singleton(2));
        }
        assert!(matches!(cover.validate(), Err(CoverViolation::NotHereditary { .. })));
        let cover = CompleteCover::explicit(&g, [VertexSet::singleton(0)]);
        assert_eq!(cover.validate(), Err(CoverViolation::MissingEmpty));
    }

    #[test]
    fn omega_cover_adds_diagonal() {
        // Square a-b-c-d with Ω = {a, b, c}: adds the a–c diagonal.
        let g = PresentationGraph::new(
            &["a", "b", "c", "d"],
            &[("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
        )
        .unwrap();
        let omega = g.vertex_set(&["a", "b", "c"]).unwrap();
        let cover = CompleteCover::cliques_plus_subgraphs_of(&g, omega).unwrap();
        let link = cover.link_complex().unwrap();
        assert!(link.has_edge(0, 2));
        assert!(link.is_simplex(omega));
        // a, c, d pairwise adjacent in L_U but {a, c, d} is neither a clique
        // of Γ nor inside Ω: Ω is not 2-convex here.
        let witness = g.vertex_set(&["a", "c", "d"]).unwrap();
        assert_eq!(link.is_flag(), FlagReport::NotFlag { witness });
    }
}
