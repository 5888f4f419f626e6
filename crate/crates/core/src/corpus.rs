//! Named graph families and graph-file reading.
//!
//! Naming: paths, cycles, complete graphs and random graphs use `v1..vn`;
//! wheels use hub `h` and rim `v1..vn` (rim `vi` adjacent to `v(i+1)`, `vn`
//! to `v1`); catalog graphs use `s1..sn` in diagram order. Catalog output is
//! a presentation graph: pairs that are not joined in the Coxeter diagram get
//! label 2, and `∞` diagram edges become absent pairs.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coxeter::CoxeterType;
use crate::format::{parse_document, parse_graph, GraphDocument, ParseError};
use crate::graph::{GraphBuilder, GraphError, Label, PresentationGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Rim size; the graph has one more vertex.
    Wheel(usize),
    /// Every pair labeled independently.
    Random(usize),
    Catalog(CoxeterType),
}

/// How labels are assigned to the edges (or, for `Random`, to all pairs) of
/// a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelRule {
    Constant(u32),
    /// Wheels only.
    RimSpoke { rim: u32, spoke: u32 },
    /// Uniform draw per pair; `∞` leaves the pair unjoined. Needs a seed.
    Uniform(Vec<Label>),
}

impl FromStr for LabelRule {
    type Err = CorpusError;

    /// `3` for a constant label, `2,3,inf` for a uniform draw.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| -> Result<Label, CorpusError> {
            let t = t.trim();
            if t.eq_ignore_ascii_case("inf") {
                return Ok(Label::Infinity);
            }
            match t.parse::<u32>() {
                Ok(m) if m >= 2 => Ok(Label::Finite(m)),
                _ => Err(CorpusError::Invalid(format!("bad label `{t}`"))),
            }
        };
        if s.contains(',') {
            Ok(LabelRule::Uniform(s.split(',').map(parse).collect::<Result<_, _>>()?))
        } else {
            match parse(s)? {
                Label::Finite(m) => Ok(LabelRule::Constant(m)),
                Label::Infinity => Ok(LabelRule::Uniform(vec![Label::Infinity])),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedFamily {
    pub family: Family,
    pub labels: LabelRule,
    pub seed: Option<u64>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("a random label rule needs an explicit seed")]
    MissingSeed,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}: unsupported extension (expected .artin or .json)")]
    Extension(String),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path{n}"),
            Family::Cycle(n) => write!(f, "cycle{n}"),
            Family::Complete(n) => write!(f, "complete{n}"),
            Family::Wheel(n) => write!(f, "wheel{n}"),
            Family::Random(n) => write!(f, "random{n}"),
            Family::Catalog(t) => write!(f, "catalog-{t}"),
        }
    }
}

impl NamedFamily {
    pub fn new(family: Family, labels: LabelRule) -> Self {
        NamedFamily {
            family,
            labels,
            seed: None,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn wheel(rim_size: usize, rim: u32, spoke: u32) -> Self {
        Self::new(Family::Wheel(rim_size), LabelRule::RimSpoke { rim, spoke })
    }

    pub fn catalog(kind: CoxeterType) -> Self {
        Self::new(Family::Catalog(kind), LabelRule::Constant(3))
    }

    pub fn generate(&self) -> Result<PresentationGraph, CorpusError> {
        let mut rng = match (&self.labels, self.seed) {
            (LabelRule::Uniform(_), None) => return Err(CorpusError::MissingSeed),
            (_, seed) => ChaCha8Rng::seed_from_u64(seed.unwrap_or(0)),
        };
        if let LabelRule::Uniform(choices) = &self.labels {
            if choices.is_empty() {
                return Err(CorpusError::Invalid("empty label choice list".into()));
            }
        }
        if let LabelRule::Constant(m) | LabelRule::RimSpoke { rim: m, .. } = self.labels {
            check_label(m)?;
        }
        if let LabelRule::RimSpoke { spoke, .. } = self.labels {
            check_label(spoke)?;
            if !matches!(self.family, Family::Wheel(_)) {
                return Err(CorpusError::Invalid("rim/spoke labels apply to wheels only".into()));
            }
        }
        let v = |i: usize| format!("v{i}");
        let mut builder = GraphBuilder::new();
        let label = |rng: &mut ChaCha8Rng, spoke: bool| -> Label {
            match &self.labels {
                LabelRule::Constant(m) => Label::Finite(*m),
                LabelRule::RimSpoke { rim, spoke: s } => Label::Finite(if spoke { *s } else { *rim }),
                LabelRule::Uniform(choices) => choices[rng.random_range(0..choices.len())],
            }
        };
        match self.family {
            Family::Path(n) => {
                at_least(n, 1, "path")?;
                (1..=n).try_for_each(|i| builder.add_vertex(&v(i)))?;
                for i in 1..n {
                    builder.set_label(&v(i), &v(i + 1), label(&mut rng, false))?;
                }
            }
            Family::Cycle(n) => {
                at_least(n, 3, "cycle")?;
                (1..=n).try_for_each(|i| builder.add_vertex(&v(i)))?;
                for i in 1..=n {
                    builder.set_label(&v(i), &v(i % n + 1), label(&mut rng, false))?;
                }
            }
            Family::Complete(n) | Family::Random(n) => {
                at_least(n, 1, "complete or random graph")?;
                (1..=n).try_for_each(|i| builder.add_vertex(&v(i)))?;
                for i in 1..=n {
                    for j in i + 1..=n {
                        builder.set_label(&v(i), &v(j), label(&mut rng, false))?;
                    }
                }
            }
            Family::Wheel(n) => {
                at_least(n, 3, "wheel rim")?;
                builder.add_vertex("h")?;
                (1..=n).try_for_each(|i| builder.add_vertex(&v(i)))?;
                for i in 1..=n {
                    builder.set_label(&v(i), &v(i % n + 1), label(&mut rng, false))?;
                    builder.set_label("h", &v(i), label(&mut rng, true))?;
                }
            }
            Family::Catalog(kind) => return catalog_graph(kind),
        }
        Ok(builder.build())
    }
}

fn check_label(m: u32) -> Result<(), CorpusError> {
    if m < 2 {
        return Err(CorpusError::Invalid(format!("label {m} is below 2")));
    }
    Ok(())
}

fn at_least(n: usize, min: usize, what: &str) -> Result<(), CorpusError> {
    if n < min {
        return Err(CorpusError::Invalid(format!("{what} needs at least {min} vertices")));
    }
    Ok(())
}

/// The presentation graph whose Coxeter diagram is `kind`.
pub fn catalog_graph(kind: CoxeterType) -> Result<PresentationGraph, CorpusError> {
    let diagram = kind
        .diagram()
        .ok_or_else(|| CorpusError::Invalid(format!("{kind} is not a catalog type")))?;
    let n = kind.vertex_count();
    let s = |i: usize| format!("s{}", i + 1);
    let mut builder = GraphBuilder::new();
    (0..n).try_for_each(|i| builder.add_vertex(&s(i)))?;
    let mut joined = vec![false; n * n];
    for &(i, j, m) in &diagram {
        builder.set_label(&s(i), &s(j), m)?;
        joined[i * n + j] = true;
        joined[j * n + i] = true;
    }
    for i in 0..n {
        for j in i + 1..n {
            if !joined[i * n + j] {
                builder.set_label(&s(i), &s(j), Label::Finite(2))?;
            }
        }
    }
    Ok(builder.build())
}

/// Read a `.artin` or `.json` graph file.
pub fn read_graph_file(path: &Path) -> Result<GraphDocument, CorpusError> {
    let shown = path.display().to_string();
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    if ext != "artin" && ext != "json" {
        return Err(CorpusError::Extension(shown));
    }
    let source = fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: shown.clone(),
        source,
    })?;
    let parsed = if ext == "artin" {
        parse_graph(&source).map(|graph| GraphDocument { graph, cover: None })
    } else {
        parse_document(&source)
    };
    parsed.map_err(|source| CorpusError::Parse { path: shown, source })
}
