//! Direct-factor decomposition, joins, visual splittings and 2-convexity.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{connected_components, GraphError, PresentationGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("the empty graph has no factor decomposition")]
    EmptyGraph,
    #[error("join detection needs at least two vertices")]
    TooFewVertices,
    #[error("exhaustive splitting enumeration is capped at {cap} vertices (graph has {actual})")]
    SizeCapExceeded { cap: usize, actual: usize },
    #[error("invalid splitting: {0}")]
    InvalidSplitting(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The irreducible factors: connected components of the Dynkin view,
/// ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorDecomposition {
    factors: Vec<VertexSet>,
}

impl FactorDecomposition {
    pub fn factors(&self) -> &[VertexSet] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }
}

pub fn irreducible_factors(graph: &PresentationGraph) -> Result<FactorDecomposition, StructureError> {
    if graph.is_empty() {
        return Err(StructureError::EmptyGraph);
    }
    Ok(FactorDecomposition {
        factors: graph.dynkin_view().components(graph.all()),
    })
}

pub fn is_irreducible(graph: &PresentationGraph) -> bool {
    irreducible_factors(graph).is_ok_and(|f| f.is_irreducible())
}

/// Vertex sets of the normal standard parabolic subgroups: every union of
/// irreducible factors, including `∅` and the whole vertex set. The i-th
/// entry takes the factors selected by the bits of `i`.
pub fn normal_standard_parabolics(graph: &PresentationGraph) -> Vec<VertexSet> {
    let factors = match irreducible_factors(graph) {
        Ok(f) => f.factors,
        Err(_) => return vec![VertexSet::EMPTY],
    };
    (0u64..1 << factors.len())
        .map(|pick| {
            factors
                .iter()
                .enumerate()
                .filter(|(k, _)| pick & (1 << k) != 0)
                .fold(VertexSet::EMPTY, |acc, (_, f)| acc | *f)
        })
        .collect()
}

/// True iff some irreducible factor lies inside `set`.
pub fn contains_direct_factor(graph: &PresentationGraph, set: VertexSet) -> Result<bool, StructureError> {
    graph.check_subset(set)?;
    if graph.is_empty() {
        return Ok(false);
    }
    Ok(irreducible_factors(graph)?
        .factors
        .iter()
        .any(|f| f.is_subset(set)))
}

/// A partition `(V1, V2)` with every cross pair finitely labeled, if one
/// exists. `V1` is the smallest component of the `∞`-pair graph (ties broken
/// lexicographically) and `V2` the rest.
pub fn is_join(graph: &PresentationGraph) -> Result<Option<(VertexSet, VertexSet)>, StructureError> {
    if graph.vertex_count() < 2 {
        return Err(StructureError::TooFewVertices);
    }
    let all = graph.all();
    let infinity_pairs: Vec<VertexSet> = (0..graph.vertex_count())
        .map(|v| all - graph.neighbors(v) - VertexSet::singleton(v))
        .collect();
    let comps = connected_components(&infinity_pairs, all);
    if comps.len() < 2 {
        return Ok(None);
    }
    let smallest = *comps
        .iter()
        .min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)))
        .expect("at least two components");
    Ok(Some((smallest, all - smallest)))
}

/// A visual splitting `Γ = Γ1 ∪ Γ2` with `Ω = Γ1 ∩ Γ2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Splitting {
    omega: VertexSet,
    gamma1: VertexSet,
    gamma2: VertexSet,
}

impl Splitting {
    /// Validate and build. The cover, intersection, edge and non-triviality
    /// conditions are all checked.
    pub fn new(
        graph: &PresentationGraph,
        gamma1: VertexSet,
        gamma2: VertexSet,
    ) -> Result<Self, StructureError> {
        graph.check_subset(gamma1 | gamma2)?;
        if gamma1 | gamma2 != graph.all() {
            return Err(StructureError::InvalidSplitting("Γ1 ∪ Γ2 must cover every vertex"));
        }
        let omega = gamma1 & gamma2;
        if omega == gamma1 || omega == gamma2 {
            return Err(StructureError::InvalidSplitting("Ω must differ from Γ1 and Γ2"));
        }
        let (only1, only2) = (gamma1 - omega, gamma2 - omega);
        if only1.iter().any(|v| graph.neighbors(v).intersects(only2)) {
            return Err(StructureError::InvalidSplitting(
                "an edge joins Γ1 ∖ Ω to Γ2 ∖ Ω",
            ));
        }
        Ok(Splitting {
            omega,
            gamma1,
            gamma2,
        })
    }

    pub fn from_names<S: AsRef<str>>(
        graph: &PresentationGraph,
        gamma1: &[S],
        gamma2: &[S],
    ) -> Result<Self, StructureError> {
        Splitting::new(graph, graph.vertex_set(gamma1)?, graph.vertex_set(gamma2)?)
    }

    pub fn gamma1(&self) -> VertexSet {
        self.gamma1
    }

    pub fn gamma2(&self) -> VertexSet {
        self.gamma2
    }

    pub fn omega(&self) -> VertexSet {
        self.omega
    }

    /// The same splitting with the two sides exchanged.
    pub fn swapped(&self) -> Splitting {
        Splitting {
            omega: self.omega,
            gamma1: self.gamma2,
            gamma2: self.gamma1,
        }
    }

    /// Orient so that `Γ1 ∖ Ω` holds the smallest vertex outside `Ω`.
    fn oriented(self) -> Splitting {
        let outside = (self.gamma1 | self.gamma2) - self.omega;
        match outside.first() {
            Some(v) if !self.gamma1.contains(v) => self.swapped(),
            _ => self,
        }
    }
}

/// How to enumerate visual splittings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplittingMode {
    /// `Γ − {s}`, `Γ − {t}` for every non-adjacent pair `s, t`.
    NonadjacentPairs,
    /// Every minimal vertex separator with every bipartition of the
    /// components it leaves.
    MinimalSeparators,
    /// Every separating vertex set (exponential; size-capped).
    All,
}

/// Bipartitions enumerated per separator before falling back to the
/// one-versus-rest bipartitions.
pub const MAX_BIPARTITIONS: usize = 1 << 12;

/// Largest graph accepted by [`SplittingMode::All`].
pub const MAX_VERTICES_ALL_MODE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplittingList {
    pub splittings: Vec<Splitting>,
    /// Some separator left too many components for a full bipartition sweep.
    pub coarsened: bool,
    /// Enumeration stopped at the requested limit.
    pub truncated: bool,
}

/// Enumerate visual splittings, sorted by `|Ω|`, then `Ω`, then `Γ1`
/// lexicographically. `limit` bounds the number returned.
pub fn enumerate_visual_splittings(
    graph: &PresentationGraph,
    mode: SplittingMode,
    limit: Option<usize>,
) -> Result<SplittingList, StructureError> {
    let all = graph.all();
    let mut list = SplittingList::default();
    let mut found: BTreeSet<(usize, Splitting)> = BTreeSet::new();
    match mode {
        SplittingMode::NonadjacentPairs => {
            for s in all {
                for t in (all - graph.neighbors(s)).iter().filter(|&t| t > s) {
                    let sp = Splitting {
                        omega: all.without(s).without(t),
                        gamma1: all.without(t),
                        gamma2: all.without(s),
                    };
                    found.insert((sp.omega.len(), sp));
                }
            }
        }
        SplittingMode::MinimalSeparators => {
            for sep in minimal_separators(graph) {
                splittings_over(graph, sep, &mut found, &mut list.coarsened);
            }
        }
        SplittingMode::All => {
            if graph.vertex_count() > MAX_VERTICES_ALL_MODE {
                return Err(StructureError::SizeCapExceeded {
                    cap: MAX_VERTICES_ALL_MODE,
                    actual: graph.vertex_count(),
                });
            }
            for omega in all.subsets() {
                if graph.components(all - omega).len() >= 2 {
                    splittings_over(graph, omega, &mut found, &mut list.coarsened);
                }
            }
        }
    }
    list.splittings = found.into_iter().map(|(_, sp)| sp).collect();
    if let Some(limit) = limit {
        if list.splittings.len() > limit {
            list.splittings.truncate(limit);
            list.truncated = true;
        }
    }
    Ok(list)
}

/// Convenience wrapper without a limit.
pub fn visual_splittings(
    graph: &PresentationGraph,
    mode: SplittingMode,
) -> Result<Vec<Splitting>, StructureError> {
    enumerate_visual_splittings(graph, mode, None).map(|l| l.splittings)
}

fn splittings_over(
    graph: &PresentationGraph,
    omega: VertexSet,
    found: &mut BTreeSet<(usize, Splitting)>,
    coarsened: &mut bool,
) {
    let comps = graph.components(graph.all() - omega);
    let k = comps.len();
    if k < 2 {
        return;
    }
    let mut push = |side: VertexSet| {
        let sp = Splitting {
            omega,
            gamma1: omega | side,
            gamma2: graph.all() - side,
        }
        .oriented();
        found.insert((omega.len(), sp));
    };
    let full_sweep = k <= 63 && (1usize << (k - 1)) - 1 <= MAX_BIPARTITIONS;
    if full_sweep {
        // Component 0 always stays on the first side.
        for pick in 1u64..(1 << (k - 1)) {
            let side: VertexSet = comps[1..]
                .iter()
                .enumerate()
                .filter(|(b, _)| pick & (1 << b) != 0)
                .fold(VertexSet::EMPTY, |acc, (_, c)| acc | *c);
            push(side);
        }
    } else {
        *coarsened = true;
        for c in &comps {
            push(*c);
        }
    }
}

/// Minimal vertex separators of the adjacency graph, via the close-separator
/// generation scheme: seed with `N(C)` for components `C` of `G − N[v]`, then
/// close under `S ↦ N(C)` for components `C` of `G − (S ∪ N(x))`, `x ∈ S`.
pub fn minimal_separators(graph: &PresentationGraph) -> Vec<VertexSet> {
    let all = graph.all();
    let neighbourhood = |set: VertexSet| -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc | graph.neighbors(v)) - set
    };
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue: Vec<VertexSet> = Vec::new();
    let offer = |removed: VertexSet, seen: &mut BTreeSet<VertexSet>, queue: &mut Vec<VertexSet>| {
        for comp in graph.components(all - removed) {
            let sep = neighbourhood(comp);
            // A separator needs a second full component on its far side.
            if graph.components(all - sep).len() >= 2 && seen.insert(sep) {
                queue.push(sep);
            }
        }
    };
    for v in all {
        offer(graph.neighbors(v).with(v), &mut seen, &mut queue);
    }
    while let Some(sep) = queue.pop() {
        for x in sep {
            offer(sep | graph.neighbors(x), &mut seen, &mut queue);
        }
    }
    seen.into_iter()
        .filter(|&sep| is_minimal_separator(graph, sep))
        .collect()
}

/// `sep` is a minimal separator iff at least two components of `G − sep`
/// are full (adjacent to every vertex of `sep`).
pub fn is_minimal_separator(graph: &PresentationGraph, sep: VertexSet) -> bool {
    let full = graph
        .components(graph.all() - sep)
        .into_iter()
        .filter(|comp| {
            sep.iter()
                .all(|s| graph.neighbors(s).intersects(*comp))
        })
        .count();
    full >= 2
}

/// True iff every pair of `set` at distance two has all its common
/// neighbours inside `set`.
pub fn is_2convex(graph: &PresentationGraph, set: VertexSet) -> Result<bool, StructureError> {
    Ok(graph
        .distance2_pairs(set)?
        .iter()
        .all(|p| p.common.is_subset(set)))
}
