//! Coxeter type recognition and the class predicates of a presentation graph.
//!
//! Finiteness is decided exactly, by matching each connected component of
//! the Dynkin view against the classical catalogs of finite and affine
//! Coxeter diagrams. [`cosine_signature`] is an independent numeric route
//! (signature of the cosine matrix) used to cross-check the catalog.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;
use thiserror::Error;

use crate::cliques::maximal_cliques;
use crate::graph::{Label, PresentationGraph, VertexSet};

/// Irreducible Coxeter types. Affine types are indexed the usual way:
/// `AffineA(n)` has `n + 1` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    AffineA(usize),
    AffineB(usize),
    AffineC(usize),
    AffineD(usize),
    AffineE6,
    AffineE7,
    AffineE8,
    AffineF4,
    AffineG2,
    /// Neither finite nor affine; carries the vertex count.
    Infinite(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown Coxeter type `{0}`")]
pub struct UnknownType(pub String);

impl CoxeterType {
    pub fn is_finite(self) -> bool {
        use CoxeterType::*;
        matches!(self, A(_) | B(_) | D(_) | E6 | E7 | E8 | F4 | H3 | H4 | I2(_))
    }

    pub fn is_affine(self) -> bool {
        !self.is_finite() && !matches!(self, CoxeterType::Infinite(_))
    }

    /// Number of diagram vertices.
    pub fn vertex_count(self) -> usize {
        use CoxeterType::*;
        match self {
            A(n) | B(n) | D(n) | Infinite(n) => n,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            F4 | H4 => 4,
            H3 => 3,
            I2(_) => 2,
            AffineA(n) | AffineB(n) | AffineC(n) | AffineD(n) => n + 1,
            AffineE6 => 7,
            AffineE7 => 8,
            AffineE8 => 9,
            AffineF4 => 5,
            AffineG2 => 3,
        }
    }

    /// Collapse names of identical diagrams: `I2(3) = A2`, `I2(4) = B2`.
    pub fn canonical(self) -> Self {
        match self {
            CoxeterType::I2(3) => CoxeterType::A(2),
            CoxeterType::I2(4) => CoxeterType::B(2),
            other => other,
        }
    }

    fn check_rank(self) -> Option<Self> {
        use CoxeterType::*;
        let ok = match self {
            A(n) => n >= 1,
            B(n) => n >= 2,
            D(n) => n >= 4,
            I2(m) => m >= 3,
            AffineA(n) => n >= 1,
            AffineB(n) => n >= 3,
            AffineC(n) => n >= 2,
            AffineD(n) => n >= 4,
            Infinite(n) => n >= 1,
            _ => true,
        };
        ok.then_some(self)
    }

    /// Diagram edges `(i, j, label)` on vertices `0..vertex_count()`:
    /// every pair not listed has label 2. `∞` appears only in `~A1`.
    pub fn diagram(self) -> Option<Vec<(usize, usize, Label)>> {
        use CoxeterType::*;
        let f = Label::Finite;
        let path = |labels: &[u32]| -> Vec<(usize, usize, Label)> {
            labels.iter().enumerate().map(|(i, &m)| (i, i + 1, f(m))).collect()
        };
        let chain = |n: usize, first: u32, last: u32| -> Vec<u32> {
            let mut labels = vec![3; n - 1];
            labels[0] = first;
            labels[n - 2] = last;
            labels
        };
        // Centre 0 with arms of the given lengths, all labels 3.
        let star = |arms: &[usize]| -> Vec<(usize, usize, Label)> {
            let mut edges = Vec::new();
            let mut next = 1;
            for &len in arms {
                let mut prev = 0;
                for _ in 0..len {
                    edges.push((prev, next, f(3)));
                    prev = next;
                    next += 1;
                }
            }
            edges
        };
        let edges = match self {
            A(n) => path(&vec![3; n - 1]),
            B(n) => path(&chain(n, 4, if n == 2 { 4 } else { 3 })),
            D(n) => star(&[1, 1, n - 3]),
            E6 => star(&[1, 2, 2]),
            E7 => star(&[1, 2, 3]),
            E8 => star(&[1, 2, 4]),
            F4 => path(&[3, 4, 3]),
            H3 => path(&[5, 3]),
            H4 => path(&[5, 3, 3]),
            I2(m) => path(&[m]),
            AffineA(1) => vec![(0, 1, Label::Infinity)],
            AffineA(n) => {
                let mut e = path(&vec![3; n]);
                e.push((0, n, f(3)));
                e
            }
            AffineB(n) => {
                // Fork at the centre, chain ending in a 4.
                let mut e = star(&[1, 1, n - 2]);
                let last = e.len() - 1;
                e[last].2 = f(4);
                e
            }
            AffineC(n) => path(&chain(n + 1, 4, 4)),
            AffineD(4) => star(&[1, 1, 1, 1]),
            AffineD(n) => {
                // Spine of n - 3 vertices with two leaves at each end.
                let spine = n - 3;
                let mut e = path(&vec![3; spine - 1]);
                e.push((0, spine, f(3)));
                e.push((0, spine + 1, f(3)));
                e.push((spine - 1, spine + 2, f(3)));
                e.push((spine - 1, spine + 3, f(3)));
                e
            }
            AffineE6 => star(&[2, 2, 2]),
            AffineE7 => star(&[1, 3, 3]),
            AffineE8 => star(&[1, 2, 5]),
            AffineF4 => path(&[3, 3, 4, 3]),
            AffineG2 => path(&[6, 3]),
            Infinite(_) => return None,
        };
        Some(edges)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoxeterType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E6 => f.write_str("E6"),
            E7 => f.write_str("E7"),
            E8 => f.write_str("E8"),
            F4 => f.write_str("F4"),
            H3 => f.write_str("H3"),
            H4 => f.write_str("H4"),
            I2(m) => write!(f, "I2({m})"),
            AffineA(n) => write!(f, "~A{n}"),
            AffineB(n) => write!(f, "~B{n}"),
            AffineC(n) => write!(f, "~C{n}"),
            AffineD(n) => write!(f, "~D{n}"),
            AffineE6 => f.write_str("~E6"),
            AffineE7 => f.write_str("~E7"),
            AffineE8 => f.write_str("~E8"),
            AffineF4 => f.write_str("~F4"),
            AffineG2 => f.write_str("~G2"),
            Infinite(n) => write!(f, "Infinite({n})"),
        }
    }
}

impl Serialize for CoxeterType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for CoxeterType {
    type Err = UnknownType;

    /// Accepts the [`Display`](fmt::Display) forms plus `G2` and a leading
    /// `Ã`/`C̃`-style tilde written as `~`.
    fn from_str(s: &str) -> Result<Self, UnknownType> {
        use CoxeterType::*;
        let err = || UnknownType(s.to_string());
        let (affine, body) = match s.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let parsed = match (affine, body) {
            (false, "E6") => E6,
            (false, "E7") => E7,
            (false, "E8") => E8,
            (false, "F4") => F4,
            (false, "H3") => H3,
            (false, "H4") => H4,
            (false, "G2") => I2(6),
            (true, "E6") => AffineE6,
            (true, "E7") => AffineE7,
            (true, "E8") => AffineE8,
            (true, "F4") => AffineF4,
            (true, "G2") => AffineG2,
            (false, b) if b.starts_with("I2(") && b.ends_with(')') => {
                I2(b[3..b.len() - 1].parse().map_err(|_| err())?)
            }
            (false, b) if b.starts_with("Infinite(") && b.ends_with(')') => {
                Infinite(b[9..b.len() - 1].parse().map_err(|_| err())?)
            }
            (_, b) if b.len() >= 2 => {
                let n: usize = b[1..].parse().map_err(|_| err())?;
                match (affine, &b[..1]) {
                    (false, "A") => A(n),
                    (false, "B") | (false, "C") => B(n),
                    (false, "D") => D(n),
                    (true, "A") => AffineA(n),
                    (true, "B") => AffineB(n),
                    (true, "C") => AffineC(n),
                    (true, "D") => AffineD(n),
                    _ => return Err(err()),
                }
            }
            _ => return Err(err()),
        };
        parsed.check_rank().ok_or_else(err)
    }
}

/// Signature of the cosine matrix `B_st = -cos(π / m_st)` (`-1` for `∞`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "signature", rename_all = "snake_case")]
pub enum Signature {
    PositiveDefinite,
    /// Positive semidefinite with `nullity` zero eigenvalues.
    PositiveSemidefinite { nullity: usize },
    Indefinite,
}

/// Numeric signature of the cosine matrix of the subgraph on `set`.
/// Eigenvalues within `tol` of zero count as zero.
pub fn cosine_signature_of(graph: &PresentationGraph, set: VertexSet, tol: f64) -> Signature {
    assert!(tol > 0.0, "tolerance must be positive");
    let idx: Vec<usize> = set.iter().collect();
    let n = idx.len();
    if n == 0 {
        return Signature::PositiveDefinite;
    }
    let matrix = DMatrix::from_fn(n, n, |r, c| {
        if r == c {
            1.0
        } else {
            match graph.label(idx[r], idx[c]) {
                Label::Finite(m) => -(std::f64::consts::PI / f64::from(m)).cos(),
                Label::Infinity => -1.0,
            }
        }
    });
    let eigen = SymmetricEigen::new(matrix);
    let negative = eigen.eigenvalues.iter().filter(|&&x| x < -tol).count();
    let zero = eigen.eigenvalues.iter().filter(|&&x| x.abs() <= tol).count();
    match (negative, zero) {
        (0, 0) => Signature::PositiveDefinite,
        (0, nullity) => Signature::PositiveSemidefinite { nullity },
        _ => Signature::Indefinite,
    }
}

pub fn cosine_signature(graph: &PresentationGraph, tol: f64) -> Signature {
    cosine_signature_of(graph, graph.all(), tol)
}

/// One irreducible piece of the Coxeter diagram and its type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramComponent {
    pub vertices: VertexSet,
    pub kind: CoxeterType,
}

/// Components of the Dynkin view on `set` with their Coxeter types.
pub fn decompose(graph: &PresentationGraph, set: VertexSet) -> Vec<DiagramComponent> {
    graph
        .dynkin_view()
        .components(set)
        .into_iter()
        .map(|vertices| DiagramComponent {
            vertices,
            kind: classify_component(graph, vertices),
        })
        .collect()
}

pub fn spherical_decomposition(graph: &PresentationGraph) -> Vec<DiagramComponent> {
    decompose(graph, graph.all())
}

/// True iff the Coxeter group generated by `set` is finite.
pub fn is_spherical_set(graph: &PresentationGraph, set: VertexSet) -> bool {
    // Any ∞ pair inside `set` already rules out finiteness.
    graph.is_clique(set) && decompose(graph, set).iter().all(|c| c.kind.is_finite())
}

pub fn is_spherical(graph: &PresentationGraph) -> bool {
    is_spherical_set(graph, graph.all())
}

/// The type of the whole graph when it is a single affine component.
pub fn affine_type(graph: &PresentationGraph) -> Option<CoxeterType> {
    match spherical_decomposition(graph).as_slice() {
        [only] if only.kind.is_affine() => Some(only.kind),
        _ => None,
    }
}

/// Classify one Dynkin-connected vertex set.
pub fn classify_component(graph: &PresentationGraph, comp: VertexSet) -> CoxeterType {
    let verts: Vec<usize> = comp.iter().collect();
    let n = verts.len();
    let has_infinity = verts
        .iter()
        .enumerate()
        .any(|(k, &i)| verts[k + 1..].iter().any(|&j| !graph.is_edge(i, j)));
    if has_infinity {
        return if n == 2 {
            CoxeterType::AffineA(1)
        } else {
            CoxeterType::Infinite(n)
        };
    }
    match n {
        0 => return CoxeterType::Infinite(0),
        1 => return CoxeterType::A(1),
        2 => {
            return match graph.finite_label(verts[0], verts[1]) {
                Some(3) => CoxeterType::A(2),
                Some(4) => CoxeterType::B(2),
                Some(m) => CoxeterType::I2(m),
                None => unreachable!("∞ pairs handled above"),
            }
        }
        _ => {}
    }

    let label = |i: usize, j: usize| graph.finite_label(i, j).unwrap_or(0);
    let diagram_nbrs = |i: usize| -> VertexSet {
        (comp.without(i))
            .iter()
            .filter(|&j| label(i, j) >= 3)
            .collect()
    };
    let nbrs: Vec<(usize, VertexSet)> = verts.iter().map(|&i| (i, diagram_nbrs(i))).collect();
    let degree = |i: usize| nbrs.iter().find(|(v, _)| *v == i).map_or(0, |(_, s)| s.len());
    let edge_count: usize = nbrs.iter().map(|(_, s)| s.len()).sum::<usize>() / 2;
    let labels: Vec<u32> = verts
        .iter()
        .flat_map(|&i| diagram_nbrs(i).iter().filter(move |&j| j > i).map(move |j| label(i, j)))
        .collect();
    let all_three = labels.iter().all(|&m| m == 3);

    if edge_count == n {
        let is_cycle = verts.iter().all(|&i| degree(i) == 2);
        return if is_cycle && all_three {
            CoxeterType::AffineA(n - 1)
        } else {
            CoxeterType::Infinite(n)
        };
    }
    if edge_count != n - 1 {
        return CoxeterType::Infinite(n);
    }

    // Tree from here on.
    let walk = |from: usize, first: usize| -> Vec<u32> {
        let mut seq = vec![label(from, first)];
        let (mut prev, mut cur) = (from, first);
        loop {
            let next = diagram_nbrs(cur).without(prev);
            match next.first() {
                Some(nx) if next.len() == 1 => {
                    seq.push(label(cur, nx));
                    prev = cur;
                    cur = nx;
                }
                _ => return seq,
            }
        }
    };
    let branch: Vec<usize> = verts.iter().copied().filter(|&i| degree(i) >= 3).collect();
    match branch.as_slice() {
        [] => {
            let end = *verts.iter().find(|&&i| degree(i) == 1).expect("paths have ends");
            let first = diagram_nbrs(end).first().expect("connected");
            classify_path(&walk(end, first))
        }
        [centre] if degree(*centre) == 3 => {
            let arms: Vec<Vec<u32>> = diagram_nbrs(*centre).iter().map(|nb| walk(*centre, nb)).collect();
            classify_star(&arms)
        }
        [centre] if degree(*centre) == 4 && n == 5 && all_three => CoxeterType::AffineD(4),
        [x, y] if n >= 6 && all_three && degree(*x) == 3 && degree(*y) == 3 => {
            let leaves = |c: usize| diagram_nbrs(c).iter().filter(|&l| degree(l) == 1).count();
            if leaves(*x) == 2 && leaves(*y) == 2 {
                CoxeterType::AffineD(n - 1)
            } else {
                CoxeterType::Infinite(n)
            }
        }
        _ => CoxeterType::Infinite(n),
    }
}

/// Path diagrams, given the label sequence along the path.
fn classify_path(seq: &[u32]) -> CoxeterType {
    let n = seq.len() + 1;
    if seq.iter().all(|&m| m == 3) {
        return CoxeterType::A(n);
    }
    let mut reversed = seq.to_vec();
    reversed.reverse();
    for s in [seq, reversed.as_slice()] {
        let inner_three = |r: &[u32]| r.iter().all(|&m| m == 3);
        match s {
            [4, rest @ ..] if inner_three(rest) => return CoxeterType::B(n),
            [3, 4, 3] => return CoxeterType::F4,
            [5, 3] => return CoxeterType::H3,
            [5, 3, 3] => return CoxeterType::H4,
            [4, mid @ .., 4] if inner_three(mid) => return CoxeterType::AffineC(n - 1),
            [6, 3] => return CoxeterType::AffineG2,
            [3, 3, 4, 3] => return CoxeterType::AffineF4,
            _ => {}
        }
    }
    CoxeterType::Infinite(n)
}

/// Trees with one vertex of degree three, given label sequences along each
/// arm (outward from the centre).
fn classify_star(arms: &[Vec<u32>]) -> CoxeterType {
    let n = 1 + arms.iter().map(Vec::len).sum::<usize>();
    let mut lengths: Vec<usize> = arms.iter().map(Vec::len).collect();
    lengths.sort_unstable();
    if arms.iter().flatten().all(|&m| m == 3) {
        return match lengths.as_slice() {
            [1, 1, r] => CoxeterType::D(r + 3),
            [1, 2, 2] => CoxeterType::E6,
            [1, 2, 3] => CoxeterType::E7,
            [1, 2, 4] => CoxeterType::E8,
            [2, 2, 2] => CoxeterType::AffineE6,
            [1, 3, 3] => CoxeterType::AffineE7,
            [1, 2, 5] => CoxeterType::AffineE8,
            _ => CoxeterType::Infinite(n),
        };
    }
    // ~B: a fork of two 3-leaves at the centre and one chain ending in a 4.
    let special: Vec<&Vec<u32>> = arms.iter().filter(|a| a.iter().any(|&m| m != 3)).collect();
    if let [chain] = special.as_slice() {
        let (last, body) = chain.split_last().expect("arms are non-empty");
        let others_are_leaves = arms.iter().filter(|a| a.iter().all(|&m| m == 3)).all(|a| a.len() == 1);
        if *last == 4 && body.iter().all(|&m| m == 3) && others_are_leaves {
            return CoxeterType::AffineB(chain.len() + 2);
        }
    }
    CoxeterType::Infinite(n)
}

/// Class predicates and dimension of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassProfile {
    pub spherical: bool,
    /// The whole graph is one affine (Euclidean) diagram.
    pub affine: bool,
    pub fc: bool,
    pub even: bool,
    pub two_dimensional: bool,
    pub large: bool,
    pub xl: bool,
    pub xxl: bool,
    pub raag: bool,
    pub free: bool,
    /// Two-dimensional with no two edges labeled 2 sharing a vertex.
    pub two_two_free_2dim: bool,
    pub dimension: usize,
}

impl ClassProfile {
    /// Compact `spherical,fc,...` listing of the flags that hold.
    pub fn flag_names(&self) -> Vec<&'static str> {
        let flags = [
            (self.spherical, "spherical"),
            (self.affine, "affine"),
            (self.fc, "fc"),
            (self.even, "even"),
            (self.two_dimensional, "2dim"),
            (self.two_two_free_2dim, "(2,2)-free"),
            (self.large, "large"),
            (self.xl, "xl"),
            (self.xxl, "xxl"),
            (self.raag, "raag"),
            (self.free, "free"),
        ];
        flags.iter().filter(|(on, _)| *on).map(|(_, name)| *name).collect()
    }
}

pub fn is_two_dimensional(graph: &PresentationGraph) -> bool {
    if graph.edge_count() == 0 {
        return false;
    }
    let n = graph.vertex_count();
    for a in 0..n {
        for b in graph.neighbors(a).iter().filter(|&b| b > a) {
            for c in (graph.neighbors(a) & graph.neighbors(b)).iter().filter(|&c| c > b) {
                let (x, y, z) = (
                    u64::from(graph.finite_label(a, b).unwrap()),
                    u64::from(graph.finite_label(b, c).unwrap()),
                    u64::from(graph.finite_label(a, c).unwrap()),
                );
                // 1/x + 1/y + 1/z <= 1
                if y * z + x * z + x * y > x * y * z {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_fc(graph: &PresentationGraph) -> bool {
    maximal_cliques(graph.adjacency(), graph.all())
        .into_iter()
        .all(|c| is_spherical_set(graph, c))
}

/// Largest vertex count of a spherical subgraph. Spherical subgraphs are
/// cliques, so only subsets of maximal cliques are searched.
pub fn dimension(graph: &PresentationGraph) -> usize {
    let mut best = 0;
    let mut cliques = maximal_cliques(graph.adjacency(), graph.all());
    cliques.sort_by_key(|c| std::cmp::Reverse(c.len()));
    for clique in cliques {
        if clique.len() <= best {
            break;
        }
        if is_spherical_set(graph, clique) {
            best = clique.len();
            continue;
        }
        let verts: Vec<usize> = clique.iter().collect();
        largest_spherical(graph, &verts, 0, VertexSet::EMPTY, &mut best);
    }
    best
}

fn largest_spherical(
    graph: &PresentationGraph,
    verts: &[usize],
    from: usize,
    current: VertexSet,
    best: &mut usize,
) {
    *best = (*best).max(current.len());
    for k in from..verts.len() {
        if current.len() + (verts.len() - k) <= *best {
            return;
        }
        let next = current.with(verts[k]);
        if is_spherical_set(graph, next) {
            largest_spherical(graph, verts, k + 1, next, best);
        }
    }
}

pub fn class_profile(graph: &PresentationGraph) -> ClassProfile {
    let labels: Vec<u32> = graph.edges().map(|(_, _, m)| m).collect();
    let two_dimensional = is_two_dimensional(graph);
    let consecutive_twos = (0..graph.vertex_count()).any(|v| {
        graph
            .neighbors(v)
            .iter()
            .filter(|&u| graph.finite_label(u, v) == Some(2))
            .count()
            >= 2
    });
    let spherical = is_spherical(graph);
    ClassProfile {
        spherical,
        affine: affine_type(graph).is_some(),
        fc: spherical || is_fc(graph),
        even: labels.iter().all(|m| m % 2 == 0),
        two_dimensional,
        large: labels.iter().all(|&m| m >= 3),
        xl: labels.iter().all(|&m| m >= 4),
        xxl: labels.iter().all(|&m| m >= 5),
        raag: labels.iter().all(|&m| m == 2),
        free: labels.is_empty(),
        two_two_free_2dim: two_dimensional && !consecutive_twos,
        dimension: dimension(graph),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[u32]) -> PresentationGraph {
        let names: Vec<String> = (0..=labels.len()).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                let m = if j == i + 1 { labels[i] } else { 2 };
                edges.push((names[i].clone(), names[j].clone(), m));
            }
        }
        PresentationGraph::new(&names, &edges).unwrap()
    }

    fn types(g: &PresentationGraph) -> Vec<CoxeterType> {
        spherical_decomposition(g).iter().map(|c| c.kind).collect()
    }

    #[test]
    fn b3_path() {
        let g = path(&[3, 4]);
        assert_eq!(types(&g), vec![CoxeterType::B(3)]);
        assert!(is_spherical(&g));
    }

    #[test]
    fn triangle_of_threes_is_affine_a2() {
        let g = PresentationGraph::new(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
            .unwrap();
        assert_eq!(types(&g), vec![CoxeterType::AffineA(2)]);
        assert!(!is_spherical(&g));
        assert_eq!(
            cosine_signature(&g, 1e-9),
            Signature::PositiveSemidefinite { nullity: 1 }
        );
    }

    #[test]
    fn free_pair_is_affine_a1() {
        let g = PresentationGraph::new::<&str>(&["a", "b"], &[]).unwrap();
        assert_eq!(types(&g), vec![CoxeterType::AffineA(1)]);
        assert_eq!(
            cosine_signature(&g, 1e-9),
            Signature::PositiveSemidefinite { nullity: 1 }
        );
    }

    #[test]
    fn single_edge_signature() {
        let g = PresentationGraph::new(&["a", "b"], &[("a", "b", 4)]).unwrap();
        assert_eq!(cosine_signature(&g, 1e-9), Signature::PositiveDefinite);
    }

    #[test]
    fn h5_is_not_a_coxeter_type() {
        let g = path(&[5, 3, 3, 3]);
        assert_eq!(types(&g), vec![CoxeterType::Infinite(5)]);
        assert_eq!(cosine_signature(&g, 1e-9), Signature::Indefinite);
    }

    #[test]
    fn type_names_round_trip() {
        for s in ["A1", "B5", "D4", "E8", "F4", "H3", "I2(7)", "~A1", "~A4", "~B3", "~C2", "~D5", "~E7", "~F4", "~G2"] {
            let t: CoxeterType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!("G2".parse::<CoxeterType>(), Ok(CoxeterType::I2(6)));
        assert_eq!("C3".parse::<CoxeterType>(), Ok(CoxeterType::B(3)));
        for bad in ["D3", "B1", "~B2", "I2(2)", "X4", "A", "~H3"] {
            assert!(bad.parse::<CoxeterType>().is_err(), "{bad}");
        }
        assert_eq!(CoxeterType::I2(3).canonical(), CoxeterType::A(2));
    }

    #[test]
    fn profile_of_k3_233() {
        let g = PresentationGraph::new(&["a", "b", "c"], &[("a", "b", 2), ("b", "c", 3), ("a", "c", 3)])
            .unwrap();
        let p = class_profile(&g);
        assert!(p.spherical && p.fc && !p.even && !p.two_dimensional);
        assert_eq!(p.dimension, 3);
        assert_eq!(types(&g), vec![CoxeterType::A(3)]);
    }

    #[test]
    fn profile_of_path_44() {
        let g = PresentationGraph::new(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 4)]).unwrap();
        let p = class_profile(&g);
        assert!(p.even && p.fc && !p.spherical && p.two_dimensional);
        assert_eq!(p.dimension, 2);
    }

    #[test]
    fn profile_of_c5() {
        let names = ["a", "b", "c", "d", "e"];
        let edges: Vec<_> = (0..5).map(|i| (names[i], names[(i + 1) % 5], 3)).collect();
        let g = PresentationGraph::new(&names, &edges).unwrap();
        let p = class_profile(&g);
        assert!(p.large && p.two_dimensional && !p.xl);
        assert_eq!(p.dimension, 2);
    }

    #[test]
    fn dimension_looks_inside_non_spherical_cliques() {
        // K4 with all labels 3 is not spherical, but contains A3 (via a 2).
        let g = PresentationGraph::new(
            &["a", "b", "c", "d"],
            &[("a", "b", 3), ("a", "c", 3), ("a", "d", 3), ("b", "c", 3), ("b", "d", 3), ("c", "d", 3)],
        )
        .unwrap();
        assert_eq!(dimension(&g), 2);
        let g = PresentationGraph::new(
            &["a", "b", "c", "d"],
            &[("a", "b", 3), ("a", "c", 2), ("a", "d", 3), ("b", "c", 3), ("b", "d", 3), ("c", "d", 3)],
        )
        .unwrap();
        assert_eq!(dimension(&g), 3);
    }

    #[test]
    fn empty_and_single_vertex() {
        let g = PresentationGraph::empty();
        assert_eq!(dimension(&g), 0);
        assert!(is_spherical(&g));
        let g = PresentationGraph::new::<&str>(&["a"], &[]).unwrap();
        let p = class_profile(&g);
        assert!(p.spherical && p.free && p.raag && !p.two_dimensional);
        assert_eq!(p.dimension, 1);
    }
}
