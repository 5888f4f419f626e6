//! Brute-force oracles and random generators shared by the integration
//! tests. Nothing here calls the library's own algorithms for the thing it
//! checks.

#![allow(dead_code)]

use std::f64::consts::PI;

use artin_core::graph::{GraphBuilder, Label, PresentationGraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Graph on `v0..v{n-1}` with one entry of `labels` per pair `i < j`
/// (row-major); `None` is `∞`.
pub fn graph_from_pairs(n: usize, labels: &[Option<u32>]) -> PresentationGraph {
    let mut b = GraphBuilder::new();
    for i in 0..n {
        b.add_vertex(&format!("v{i}")).unwrap();
    }
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = labels[k] {
                b.set_label(&format!("v{i}"), &format!("v{j}"), Label::Finite(m))
                    .unwrap();
            }
            k += 1;
        }
    }
    b.build()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, choices: &[Option<u32>]) -> PresentationGraph {
    let labels: Vec<Option<u32>> = (0..n * (n - 1) / 2)
        .map(|_| choices[rng.random_range(0..choices.len())])
        .collect();
    graph_from_pairs(n, &labels)
}

pub const LABELS_2_TO_6_INF: &[Option<u32>] = &[Some(2), Some(3), Some(4), Some(5), Some(6), None];
pub const LABELS_2_3_INF: &[Option<u32>] = &[Some(2), Some(3), None];

/// Every labeled graph on `n` vertices over `choices`.
pub fn all_graphs(n: usize, choices: &[Option<u32>]) -> Vec<PresentationGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let total = choices.len().pow(pairs as u32);
    (0..total)
        .map(|mut code| {
            let labels: Vec<Option<u32>> = (0..pairs)
                .map(|_| {
                    let l = choices[code % choices.len()];
                    code /= choices.len();
                    l
                })
                .collect();
            graph_from_pairs(n, &labels)
        })
        .collect()
}

/// Cosine matrix entries straight from the labels.
pub fn cosine_matrix(g: &PresentationGraph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        1.0
                    } else {
                        match g.label(i, j) {
                            Label::Finite(m) => -(PI / f64::from(m)).cos(),
                            Label::Infinity => -1.0,
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// Positive definiteness by Cholesky factorization.
pub fn cholesky_positive_definite(a: &[Vec<f64>], tol: f64) -> bool {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = a[i][i] - s;
                if d <= tol {
                    return false;
                }
                l[i][i] = d.sqrt();
            } else {
                l[i][j] = (a[i][j] - s) / l[j][j];
            }
        }
    }
    true
}

pub fn adjacent(g: &PresentationGraph, u: usize, v: usize) -> bool {
    u != v && g.label(u, v).is_finite()
}

/// Connected components of `within` under `edge`, by flood fill.
pub fn components_by(n: usize, within: VertexSet, edge: impl Fn(usize, usize) -> bool) -> Vec<VertexSet> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in within.iter() {
        if seen[start] {
            continue;
        }
        let mut comp = VertexSet::EMPTY;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for v in within.iter() {
                if !seen[v] && edge(u, v) {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Irreducible factors: components under "label is not 2".
pub fn factors_oracle(g: &PresentationGraph) -> Vec<VertexSet> {
    let mut f = components_by(g.vertex_count(), g.all(), |u, v| {
        u != v && g.label(u, v) != Label::Finite(2)
    });
    f.sort_by_key(|s| s.first());
    f
}

/// BFS distances from `s` in the presentation graph (`usize::MAX` if
/// unreachable).
pub fn bfs(g: &PresentationGraph, s: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if adjacent(g, u, v) && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// 2-convexity from the definition: every geodesic of length two between
/// vertices of `set` has its midpoint in `set`.
pub fn two_convex_oracle(g: &PresentationGraph, set: VertexSet) -> bool {
    let n = g.vertex_count();
    for u in set.iter() {
        let d = bfs(g, u);
        for w in set.iter() {
            if d[w] != 2 {
                continue;
            }
            for m in 0..n {
                if adjacent(g, u, m) && adjacent(g, m, w) && !set.contains(m) {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimal separators by definition: `S` such that `G − S` has at least two
/// components each adjacent to every vertex of `S`.
pub fn minimal_separators_oracle(g: &PresentationGraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut out: Vec<VertexSet> = g
        .all()
        .subsets()
        .filter(|&s| {
            let comps = components_by(n, g.all() - s, |u, v| adjacent(g, u, v));
            let full = comps
                .iter()
                .filter(|c| s.iter().all(|x| c.iter().any(|y| adjacent(g, x, y))))
                .count();
            full >= 2
        })
        .collect();
    out.sort();
    out
}

/// Every visual splitting by definition, as `(Γ1, Γ2)` with `Γ1 ∖ Ω`
/// holding the smallest vertex outside `Ω`.
pub fn splittings_oracle(g: &PresentationGraph) -> Vec<(VertexSet, VertexSet)> {
    let all = g.all();
    let mut out = Vec::new();
    for g1 in all.subsets() {
        for g2 in all.subsets() {
            if g1 | g2 != all {
                continue;
            }
            let omega = g1 & g2;
            if omega == g1 || omega == g2 {
                continue;
            }
            let (a, b) = (g1 - omega, g2 - omega);
            if a.iter().any(|u| b.iter().any(|v| adjacent(g, u, v))) {
                continue;
            }
            let smallest = (all - omega).first().unwrap();
            if g1.contains(smallest) {
                out.push((g1, g2));
            }
        }
    }
    out.sort();
    out
}

/// Some partition `V1 ⊔ V2` (both non-empty) with every cross pair
/// joined by an edge.
pub fn join_oracle(g: &PresentationGraph) -> bool {
    let all = g.all();
    all.subsets().any(|v1| {
        let v2 = all - v1;
        !v1.is_empty()
            && !v2.is_empty()
            && v1.iter().all(|u| v2.iter().all(|v| adjacent(g, u, v)))
    })
}

pub fn is_clique_oracle(g: &PresentationGraph, set: VertexSet) -> bool {
    set.iter().all(|u| set.iter().all(|v| u == v || adjacent(g, u, v)))
}

/// Flagness by enumerating every vertex subset: returns a pairwise-joined
/// subset outside the family, if any.
pub fn flag_oracle(n: usize, member: impl Fn(VertexSet) -> bool) -> Option<VertexSet> {
    VertexSet::full(n).subsets().find(|&t| {
        let pairwise = t.iter().all(|u| {
            t.iter()
                .all(|v| u >= v || member(VertexSet::singleton(u).with(v)))
        });
        pairwise && !member(t)
    })
}

/// Wheel with hub `h`, rim `v1..vn` and explicit labels.
pub fn wheel(n: usize, rim: impl Fn(usize) -> u32, spoke: impl Fn(usize) -> u32) -> PresentationGraph {
    let mut b = GraphBuilder::new();
    b.add_vertex("h").unwrap();
    for i in 1..=n {
        b.add_vertex(&format!("v{i}")).unwrap();
    }
    for i in 1..=n {
        let j = i % n + 1;
        b.set_label(&format!("v{i}"), &format!("v{j}"), Label::Finite(rim(i)))
            .unwrap();
        b.set_label("h", &format!("v{i}"), Label::Finite(spoke(i)))
            .unwrap();
    }
    b.build()
}
