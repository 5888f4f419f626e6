//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting) over
//! bitmask adjacency.

use crate::graph::VertexSet;

/// All maximal cliques of the graph `adjacency` restricted to `within`,
/// sorted lexicographically. The empty vertex set has the single maximal
/// clique `∅`.
pub fn maximal_cliques(adjacency: &[VertexSet], within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    expand(adjacency, within, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut out);
    out.sort();
    out
}

fn expand(
    adjacency: &[VertexSet],
    within: VertexSet,
    clique: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(clique);
        }
        return;
    }
    let pivot = (candidates | excluded)
        .iter()
        .max_by_key(|&u| ((candidates & adjacency[u]).len(), std::cmp::Reverse(u)))
        .expect("candidates is non-empty");
    for v in candidates - adjacency[pivot] {
        let nbrs = adjacency[v] & within;
        expand(
            adjacency,
            within,
            clique.with(v),
            candidates & nbrs,
            excluded & nbrs,
            out,
        );
        candidates = candidates.without(v);
        excluded = excluded.with(v);
    }
}
