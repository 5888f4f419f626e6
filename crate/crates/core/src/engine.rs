//! Rule engine: certificates for acylindrical hyperbolicity (AH), the Weak
//! Malnormality Conjecture (WM) and the Intersection Conjecture (IC).
//!
//! Every public entry point is a pure function of the graph and a
//! [`RuleConfig`]. Rules are tried in a fixed order and the first hit wins;
//! the rules evaluated on the way are recorded in the certificate. Verdicts
//! are three-valued: `Unknown` never means the claim fails.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cliques::maximal_cliques;
use crate::cover::CompleteCover;
use crate::coxeter::{
    affine_type, classify_component, decompose, is_fc, is_spherical, is_spherical_set,
    is_two_dimensional, CoxeterType,
};
use crate::format::{to_text, GraphDoc, ParseError};
use crate::graph::{GraphError, PresentationGraph, VertexSet};
use crate::structure::{
    contains_direct_factor, enumerate_visual_splittings, irreducible_factors, is_2convex, is_join,
    Splitting, SplittingMode, StructureError,
};
use Verdict::{Proven, Refuted};

pub const SCHEMA_VERSION: u32 = 1;

/// Candidate splittings examined per search before giving up.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Anchor used by nodes that record a check performed by this crate.
pub const COMPUTATION: &str = "computation";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("the empty graph has no Artin group to certify")]
    EmptyGraph,
    #[error("subgroup {0} is not a proper subset of the vertices")]
    NotProperSubset(String),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("proof order must be a permutation of the AH proof rules")]
    BadProofOrder,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Proven,
    Refuted,
    Unknown,
}

impl Verdict {
    /// CLI exit status for this verdict.
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Proven => 0,
            Verdict::Refuted => 1,
            Verdict::Unknown => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Proven => "Proven",
            Verdict::Refuted => "Refuted",
            Verdict::Unknown => "Unknown",
        })
    }
}

/// A splitting written with vertex names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingDoc {
    pub gamma1: Vec<String>,
    pub gamma2: Vec<String>,
    pub omega: Vec<String>,
}

impl SplittingDoc {
    fn new(graph: &PresentationGraph, sp: &Splitting) -> Self {
        SplittingDoc {
            gamma1: graph.set_names(sp.gamma1()),
            gamma2: graph.set_names(sp.gamma2()),
            omega: graph.set_names(sp.omega()),
        }
    }
}

/// What a certificate node asserts. `vertices` names the full subgraph the
/// claim is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claim {
    Ah {
        vertices: Vec<String>,
    },
    WmConjecture {
        vertices: Vec<String>,
    },
    WmSubgroup {
        vertices: Vec<String>,
        subgroup: Vec<String>,
    },
    Ic {
        vertices: Vec<String>,
    },
    EdgeIntersectionsParabolic {
        vertices: Vec<String>,
        splitting: SplittingDoc,
    },
    /// A finite check carried out on the graph.
    Check {
        vertices: Vec<String>,
        statement: String,
    },
}

impl Claim {
    pub fn vertices(&self) -> &[String] {
        match self {
            Claim::Ah { vertices }
            | Claim::WmConjecture { vertices }
            | Claim::WmSubgroup { vertices, .. }
            | Claim::Ic { vertices }
            | Claim::EdgeIntersectionsParabolic { vertices, .. }
            | Claim::Check { vertices, .. } => vertices,
        }
    }
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(","))
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Ah { vertices } => write!(f, "AH {}", braces(vertices)),
            Claim::WmConjecture { vertices } => write!(f, "WM-conjecture {}", braces(vertices)),
            Claim::WmSubgroup { vertices, subgroup } => write!(
                f,
                "WM-subgroup {} in {}",
                braces(subgroup),
                braces(vertices)
            ),
            Claim::Ic { vertices } => write!(f, "IC {}", braces(vertices)),
            Claim::EdgeIntersectionsParabolic { vertices, splitting } => write!(
                f,
                "edge-intersections-parabolic {} over Ω={} (Γ1={}, Γ2={})",
                braces(vertices),
                braces(&splitting.omega),
                braces(&splitting.gamma1),
                braces(&splitting.gamma2)
            ),
            Claim::Check {
                vertices,
                statement,
            } => write!(f, "check {}: {statement}", braces(vertices)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Citation {
    pub anchor: String,
    pub quote: String,
}

/// Data supporting a node, re-checkable against the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Splitting(SplittingDoc),
    /// The irreducible factors of the subject graph.
    Factors { factors: Vec<Vec<String>> },
    /// A distinguished vertex set, e.g. a direct factor or a join side.
    VertexSet { role: String, vertices: Vec<String> },
    /// A Dynkin component and its Coxeter type.
    CoxeterType { vertices: Vec<String>, name: String },
    /// A clique of a link complex that does not span a simplex.
    Clique { vertices: Vec<String> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Splitting(sp) => write!(
                f,
                "splitting Γ1={} Γ2={} Ω={}",
                braces(&sp.gamma1),
                braces(&sp.gamma2),
                braces(&sp.omega)
            ),
            Witness::Factors { factors } => {
                let parts: Vec<String> = factors.iter().map(|f| braces(f)).collect();
                write!(f, "factors {}", parts.join(" "))
            }
            Witness::VertexSet { role, vertices } => write!(f, "{role} {}", braces(vertices)),
            Witness::CoxeterType { vertices, name } => {
                write!(f, "type {name} on {}", braces(vertices))
            }
            Witness::Clique { vertices } => write!(f, "non-spanning clique {}", braces(vertices)),
        }
    }
}

/// One node of a certificate tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: Claim,
    pub verdict: Verdict,
    pub rule: String,
    pub citation: Citation,
    pub witnesses: Vec<Witness>,
    pub premises: Vec<Certificate>,
    pub notes: Vec<String>,
    /// Rules evaluated at this node, in order, ending with the winner.
    pub attempted: Vec<String>,
}

impl Certificate {
    fn new(claim: Claim, verdict: Verdict, rule: &str) -> Self {
        let info = rule_info(rule).expect("rule is in the catalog");
        Certificate {
            claim,
            verdict,
            rule: rule.to_string(),
            citation: Citation {
                anchor: info.anchor.to_string(),
                quote: info.quote.to_string(),
            },
            witnesses: Vec::new(),
            premises: Vec::new(),
            notes: Vec::new(),
            attempted: Vec::new(),
        }
    }

    fn witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    fn premise(mut self, c: Certificate) -> Self {
        self.premises.push(c);
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    fn attempted(mut self, rules: &[&str]) -> Self {
        self.attempted = rules.iter().map(|r| r.to_string()).collect();
        self
    }

    pub fn is_computation(&self) -> bool {
        self.citation.anchor == COMPUTATION
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Certificate::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(Certificate::depth).max().unwrap_or(0)
    }

    /// Every node: a known rule, a non-empty citation, and premises with
    /// verdicts consistent with the node's own.
    pub fn check_well_formed(&self) -> Result<(), String> {
        let info = rule_info(&self.rule).ok_or_else(|| format!("unknown rule `{}`", self.rule))?;
        if self.citation.anchor != info.anchor || self.citation.quote.trim().is_empty() {
            return Err(format!("node `{}` has a mismatched citation", self.rule));
        }
        if self.rule != UNKNOWN_RULE && info.verdict != self.verdict {
            return Err(format!(
                "rule `{}` cannot yield {}",
                self.rule, self.verdict
            ));
        }
        if self.verdict == Verdict::Proven
            && self.premises.iter().any(|p| p.verdict != Verdict::Proven)
        {
            return Err(format!("proof by `{}` rests on an unproven premise", self.rule));
        }
        self.premises.iter().try_for_each(Certificate::check_well_formed)
    }

    /// Re-validate every witness in the tree against `graph`.
    pub fn check_witnesses(&self, graph: &PresentationGraph) -> Result<(), String> {
        let subject_set = graph
            .vertex_set(self.claim.vertices())
            .map_err(|e| format!("claim subject: {e}"))?;
        let subject = graph
            .induced_subgraph(subject_set)
            .map_err(|e| e.to_string())?;
        if let Claim::EdgeIntersectionsParabolic { splitting, .. } = &self.claim {
            check_splitting(&subject, splitting)?;
        }
        if let Claim::WmSubgroup { subgroup, .. } = &self.claim {
            subject.vertex_set(subgroup).map_err(|e| e.to_string())?;
        }
        for w in &self.witnesses {
            match w {
                Witness::Splitting(sp) => check_splitting(&subject, sp)?,
                Witness::Factors { factors } => {
                    let expected: Vec<Vec<String>> = irreducible_factors(&subject)
                        .map_err(|e| e.to_string())?
                        .factors()
                        .iter()
                        .map(|f| subject.set_names(*f))
                        .collect();
                    if &expected != factors {
                        return Err(format!("factor witness {factors:?} does not match"));
                    }
                }
                Witness::VertexSet { vertices, .. } => {
                    subject.vertex_set(vertices).map_err(|e| e.to_string())?;
                }
                Witness::CoxeterType { vertices, name } => {
                    let set = subject.vertex_set(vertices).map_err(|e| e.to_string())?;
                    let actual = classify_component(&subject, set).canonical();
                    let claimed: CoxeterType = name.parse().map_err(|e| format!("{e}"))?;
                    if actual != claimed.canonical() {
                        return Err(format!("{} is {actual}, not {name}", braces(vertices)));
                    }
                }
                Witness::Clique { vertices } => {
                    subject.vertex_set(vertices).map_err(|e| e.to_string())?;
                }
            }
        }
        self.premises
            .iter()
            .try_for_each(|p| p.check_witnesses(graph))
    }

    /// Indented human-readable rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let _ = writeln!(out, "{pad}{}: {}", self.verdict, self.claim);
        let _ = writeln!(out, "{pad}  rule: {}", self.rule);
        let _ = writeln!(
            out,
            "{pad}  cite: [{}] {}",
            self.citation.anchor, self.citation.quote
        );
        for w in &self.witnesses {
            let _ = writeln!(out, "{pad}  witness: {w}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "{pad}  note: {n}");
        }
        if !self.attempted.is_empty() {
            let _ = writeln!(out, "{pad}  attempted: {}", self.attempted.join(", "));
        }
        for p in &self.premises {
            p.render_into(out, depth + 1);
        }
    }
}

fn check_splitting(subject: &PresentationGraph, sp: &SplittingDoc) -> Result<(), String> {
    let built = Splitting::from_names(subject, &sp.gamma1, &sp.gamma2).map_err(|e| e.to_string())?;
    if subject.set_names(built.omega()) != sp.omega {
        return Err(format!("Ω {} is not Γ1 ∩ Γ2", braces(&sp.omega)));
    }
    Ok(())
}

/// Root document: the graph the certificate speaks about plus the tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub schema_version: u32,
    pub graph: GraphDoc,
    pub certificate: Certificate,
}

impl CertificateDocument {
    pub fn new(graph: &PresentationGraph, certificate: Certificate) -> Self {
        CertificateDocument {
            schema_version: SCHEMA_VERSION,
            graph: GraphDoc::from_graph(graph, None),
            certificate,
        }
    }

    /// Pretty JSON with a trailing newline; byte-stable for equal input.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("certificates always serialize");
        out.push('\n');
        out
    }

    pub fn from_json(source: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(source)
    }

    pub fn graph(&self) -> Result<PresentationGraph, ParseError> {
        self.graph.clone().into_document().map(|d| d.graph)
    }

    /// Schema version, well-formedness and every witness.
    pub fn validate(&self) -> Result<(), String> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema version {}", self.schema_version));
        }
        let graph = self.graph().map_err(|e| e.to_string())?;
        self.certificate.check_well_formed()?;
        self.certificate.check_witnesses(&graph)
    }
}

/// Catalog entry for a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleInfo {
    pub name: &'static str,
    pub anchor: &'static str,
    pub quote: &'static str,
    /// The verdict a hit produces.
    pub verdict: Verdict,
}

const fn rule(name: &'static str, anchor: &'static str, quote: &'static str, verdict: Verdict) -> RuleInfo {
    RuleInfo {
        name,
        anchor,
        quote,
        verdict,
    }
}

pub const UNKNOWN_RULE: &str = "none";

/// Every rule the engine can apply, with its citation.
pub const RULES: &[RuleInfo] = &[
    rule("ic.at-most-3-generators", "lemma:ic-three-generators",
        "Artin groups on at most three standard generators satisfy the Intersection Conjecture.", Proven),
    rule("ic.spherical", "known:ic-spherical",
        "Spherical-type Artin groups satisfy the Intersection Conjecture (Cumplido, Gebhardt, Gonzalez-Meneses, Wiest 2017).", Proven),
    rule("ic.raag", "known:ic-right-angled",
        "Right-angled Artin groups satisfy the Intersection Conjecture (Antolin, Minasyan 2015).", Proven),
    rule("ic.large", "known:ic-large-type",
        "Large-type Artin groups, all labels at least 3, satisfy the Intersection Conjecture (parabolic subgroups of large-type Artin groups, 2020).", Proven),
    rule("ic.two-two-free-2dim", "known:ic-22-free-two-dimensional",
        "Two-dimensional Artin groups without two adjacent edges labeled 2 satisfy the Intersection Conjecture (Blufstein 2022).", Proven),
    rule("ic.affine-a-c", "known:ic-euclidean-a-c",
        "Euclidean-type Artin groups of type ~A_n and ~C_n satisfy the Intersection Conjecture (Haettel 2023).", Proven),
    rule("ic.even-fc", "known:ic-even-fc",
        "Even FC-type Artin groups satisfy the Intersection Conjecture (Antolin, Foniqi 2023).", Proven),
    rule("ic.reducible-product", "lemma:ic-direct-product",
        "If every direct factor of a reducible Artin group satisfies the Intersection Conjecture, the group does too.", Proven),
    rule("edge.trivial", "fact:trivial-edge-group",
        "A splitting over the empty subgraph has trivial edge group; conjugates of the trivial group meet in the trivial parabolic subgroup.", Proven),
    rule("edge.ambient-ic", "fact:ambient-ic",
        "If the whole group satisfies the Intersection Conjecture, any two conjugates of the edge group meet in a parabolic subgroup.", Proven),
    rule("edge.vertex-groups-ic", "theorem:edge-condition-from-vertex-groups",
        "If both vertex groups of a visual splitting satisfy the Intersection Conjecture, any two conjugates of the edge group meet in a parabolic subgroup.", Proven),
    rule("edge.two-convex", "corollary:edge-condition-two-convex",
        "For a 2-convex edge subgraph whose Artin group and all clique subgroups satisfy the Intersection Conjecture, the cover by cliques and subgraphs of the edge subgraph has a flag link (Godelle, Paris 2012), so conjugates of the edge group meet in parabolic subgroups.", Proven),
    rule("ah.single-generator", "fact:infinite-cyclic",
        "The Artin group on one generator is infinite cyclic, hence virtually cyclic and not acylindrically hyperbolic.", Refuted),
    rule("ah.reducible", "fact:direct-product",
        "A reducible Artin group is a direct product of infinite groups, and such products are not acylindrically hyperbolic.", Refuted),
    rule("ah.spherical-irreducible", "fact:spherical-center",
        "An irreducible spherical-type Artin group has infinite cyclic center, so it is not acylindrically hyperbolic; its central quotient is (Calvez, Wiest 2017).", Refuted),
    rule("ah.raag", "known:ah-right-angled",
        "Irreducible right-angled Artin groups on at least two generators are acylindrically hyperbolic (Osin 2016).", Proven),
    rule("ah.two-dimensional", "known:ah-two-dimensional",
        "Irreducible two-dimensional Artin groups are acylindrically hyperbolic (Vaskou 2022).", Proven),
    rule("ah.euclidean", "known:ah-euclidean",
        "Irreducible Euclidean-type Artin groups are acylindrically hyperbolic (Calvez 2022).", Proven),
    rule("ah.not-join", "known:ah-not-join",
        "Artin groups on at least two generators whose presentation graph is not a join are acylindrically hyperbolic (Artin groups of infinite type with non-join graphs, 2019).", Proven),
    rule("ah.even-fc", "theorem:ah-even-fc",
        "Irreducible even FC-type Artin groups of infinite type are acylindrically hyperbolic.", Proven),
    rule("ah.fc-spherical-edge", "theorem:ah-fc-spherical-edge-group",
        "An irreducible FC-type Artin group with a visual splitting over a spherical-type standard parabolic subgroup is acylindrically hyperbolic.", Proven),
    rule("ah.splitting-edge-intersections", "theorem:ah-splitting-edge-intersections",
        "If an irreducible Artin group splits visually and any two conjugates of the edge group meet in a parabolic subgroup, the edge group is weakly malnormal and the group is acylindrically hyperbolic (via Minasyan, Osin 2015).", Proven),
    rule("ah.vertex-group-wm", "corollary:ah-vertex-group-wm",
        "If a visual splitting has a vertex group satisfying the Weak Malnormality Conjecture and the edge group contains none of its direct factors, the edge group is weakly malnormal and the group is acylindrically hyperbolic (via Minasyan, Osin 2015).", Proven),
    rule("wm.spherical", "lemma:wm-spherical",
        "Spherical-type Artin groups satisfy the Weak Malnormality Conjecture.", Proven),
    rule("wm.two-dimensional", "corollary:wm-two-dimensional",
        "Two-dimensional Artin groups satisfy the Weak Malnormality Conjecture.", Proven),
    rule("wm.ic-implies-wm", "corollary:wm-from-ic",
        "An irreducible Artin group whose graph is not a clique and which satisfies the Intersection Conjecture satisfies the Weak Malnormality Conjecture.", Proven),
    rule("wm.splitting", "lemma:wm-from-edge-condition",
        "If an irreducible Artin group has a visual splitting whose edge group has parabolic conjugate intersections, its proper parabolic subgroups without direct factors are weakly malnormal.", Proven),
    rule("wm.product", "lemma:wm-direct-product",
        "A direct product of Artin groups satisfying the Weak Malnormality Conjecture satisfies it.", Proven),
    rule("wms.contains-factor", "fact:contains-normal-factor",
        "A standard parabolic subgroup containing a direct factor contains an infinite normal subgroup, so it meets every conjugate in an infinite set and is not weakly malnormal.", Refuted),
    rule("wms.from-conjecture", "conjecture-instance:wm",
        "When the group satisfies the Weak Malnormality Conjecture, each proper standard parabolic subgroup containing no direct factor is weakly malnormal.", Proven),
    rule("computation.not-virtually-cyclic", COMPUTATION,
        "Two standard generators span a parabolic subgroup that is free of rank two or contains Z^2, so the group is not virtually cyclic.", Proven),
    rule("computation.two-convex", COMPUTATION,
        "Every pair of edge-subgraph vertices at distance two has all common neighbours inside the edge subgraph.", Proven),
    rule("computation.flag-link", COMPUTATION,
        "Every maximal clique of the 1-skeleton of the link complex spans a simplex.", Proven),
    rule("computation.no-direct-factor", COMPUTATION,
        "No irreducible factor of the ambient graph lies inside the given vertex set.", Proven),
    rule(UNKNOWN_RULE, COMPUTATION,
        "No rule in the fixed order applied; this does not mean the claim fails.", Verdict::Unknown),
];

pub fn rule_info(name: &str) -> Option<&'static RuleInfo> {
    RULES.iter().find(|r| r.name == name)
}

pub const IC_ORDER: &[&str] = &[
    "ic.at-most-3-generators",
    "ic.spherical",
    "ic.raag",
    "ic.large",
    "ic.two-two-free-2dim",
    "ic.affine-a-c",
    "ic.even-fc",
    "ic.reducible-product",
];

pub const EDGE_ORDER: &[&str] = &[
    "edge.trivial",
    "edge.ambient-ic",
    "edge.vertex-groups-ic",
    "edge.two-convex",
];

pub const AH_REFUTATION_ORDER: &[&str] = &[
    "ah.single-generator",
    "ah.reducible",
    "ah.spherical-irreducible",
];

pub const AH_PROOF_ORDER: &[&str] = &[
    "ah.raag",
    "ah.two-dimensional",
    "ah.euclidean",
    "ah.not-join",
    "ah.even-fc",
    "ah.fc-spherical-edge",
    "ah.splitting-edge-intersections",
    "ah.vertex-group-wm",
];

pub const WM_ORDER: &[&str] = &[
    "wm.spherical",
    "wm.two-dimensional",
    "wm.ic-implies-wm",
    "wm.splitting",
    "wm.product",
];

/// Rule selection and search limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleConfig {
    disabled: BTreeSet<String>,
    budget: usize,
    ah_proof_order: Vec<&'static str>,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig {
            disabled: BTreeSet::new(),
            budget: DEFAULT_BUDGET,
            ah_proof_order: AH_PROOF_ORDER.to_vec(),
        }
    }
}

impl RuleConfig {
    pub fn disable(mut self, name: &str) -> Result<Self, EngineError> {
        if rule_info(name).is_none() || name == UNKNOWN_RULE {
            return Err(EngineError::UnknownRule(name.to_string()));
        }
        self.disabled.insert(name.to_string());
        Ok(self)
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    /// Reorder the AH proof rules. Refutations always run first.
    pub fn with_ah_proof_order(mut self, order: &[&str]) -> Result<Self, EngineError> {
        let mut given: Vec<&str> = order.to_vec();
        let mut expected = AH_PROOF_ORDER.to_vec();
        given.sort_unstable();
        expected.sort_unstable();
        if given != expected {
            return Err(EngineError::BadProofOrder);
        }
        self.ah_proof_order = order
            .iter()
            .map(|name| *AH_PROOF_ORDER.iter().find(|r| *r == name).expect("checked above"))
            .collect();
        Ok(self)
    }

    pub fn is_enabled(&self, name: &str) -> bool {
        !self.disabled.contains(name)
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn disabled(&self) -> impl Iterator<Item = &str> {
        self.disabled.iter().map(String::as_str)
    }
}

/// Knowledge-base IC certificate for `graph`, if any rule fires.
pub fn knows_ic(graph: &PresentationGraph, config: &RuleConfig) -> Option<Certificate> {
    Engine::new(config).knows_ic(graph)
}

/// Certificate that any two conjugates of the edge group of `splitting`
/// meet in a parabolic subgroup, if one of the routes applies.
pub fn certify_edge_condition(
    graph: &PresentationGraph,
    splitting: &Splitting,
    config: &RuleConfig,
) -> Result<Option<Certificate>, EngineError> {
    // Re-validate: the caller may have built the splitting for another graph.
    let sp = Splitting::new(graph, splitting.gamma1(), splitting.gamma2())?;
    Ok(Engine::new(config).edge_condition(graph, &sp))
}

pub fn certify_ah(graph: &PresentationGraph, config: &RuleConfig) -> Result<Certificate, EngineError> {
    non_empty(graph)?;
    let engine = Engine::new(config);
    Ok(engine.finish(engine.ah(graph)))
}

pub fn certify_wm_conjecture(
    graph: &PresentationGraph,
    config: &RuleConfig,
) -> Result<Certificate, EngineError> {
    non_empty(graph)?;
    let engine = Engine::new(config);
    Ok(engine.finish(engine.wm_conjecture(graph)))
}

pub fn certify_wm_subgroup(
    graph: &PresentationGraph,
    subgroup: VertexSet,
    config: &RuleConfig,
) -> Result<Certificate, EngineError> {
    non_empty(graph)?;
    graph.check_subset(subgroup)?;
    if subgroup == graph.all() {
        return Err(EngineError::NotProperSubset(graph.format_set(subgroup)));
    }
    let engine = Engine::new(config);
    Ok(engine.finish(engine.wm_subgroup(graph, subgroup)))
}

pub fn certify_ic(graph: &PresentationGraph, config: &RuleConfig) -> Result<Certificate, EngineError> {
    non_empty(graph)?;
    let engine = Engine::new(config);
    let claim = Claim::Ic {
        vertices: graph.names().to_vec(),
    };
    Ok(engine.knows_ic(graph).unwrap_or_else(|| {
        Certificate::new(claim, Verdict::Unknown, UNKNOWN_RULE).attempted(&enabled(config, IC_ORDER))
    }))
}

fn non_empty(graph: &PresentationGraph) -> Result<(), EngineError> {
    if graph.is_empty() {
        Err(EngineError::EmptyGraph)
    } else {
        Ok(())
    }
}

fn enabled<'a>(config: &RuleConfig, order: &[&'a str]) -> Vec<&'a str> {
    order.iter().copied().filter(|r| config.is_enabled(r)).collect()
}

enum Search<T> {
    Found(Splitting, T),
    NotFound,
    Exhausted,
}

struct Engine<'c> {
    config: &'c RuleConfig,
    ic_memo: RefCell<BTreeMap<String, Option<Certificate>>>,
    wm_memo: RefCell<BTreeMap<String, Certificate>>,
    budget_hit: RefCell<bool>,
}

fn sub(graph: &PresentationGraph, set: VertexSet) -> PresentationGraph {
    graph
        .induced_subgraph(set)
        .expect("engine only takes subsets of its own vertices")
}

fn names(graph: &PresentationGraph) -> Vec<String> {
    graph.names().to_vec()
}

fn type_witnesses(graph: &PresentationGraph, set: VertexSet) -> impl Iterator<Item = Witness> + '_ {
    decompose(graph, set)
        .into_iter()
        .map(move |c| Witness::CoxeterType {
            vertices: graph.set_names(c.vertices),
            name: c.kind.canonical().to_string(),
        })
}

fn factors_witness(graph: &PresentationGraph, factors: &[VertexSet]) -> Witness {
    Witness::Factors {
        factors: factors.iter().map(|f| graph.set_names(*f)).collect(),
    }
}

impl<'c> Engine<'c> {
    fn new(config: &'c RuleConfig) -> Self {
        Engine {
            config,
            ic_memo: RefCell::new(BTreeMap::new()),
            wm_memo: RefCell::new(BTreeMap::new()),
            budget_hit: RefCell::new(false),
        }
    }

    fn finish(&self, cert: Certificate) -> Certificate {
        if cert.verdict == Verdict::Unknown && *self.budget_hit.borrow() {
            cert.note(format!(
                "splitting search stopped after {} candidates; raising the budget may help",
                self.config.budget
            ))
        } else {
            cert
        }
    }

    fn unknown(&self, claim: Claim, attempted: &[&str]) -> Certificate {
        Certificate::new(claim, Verdict::Unknown, UNKNOWN_RULE).attempted(attempted)
    }

    /// Visit candidate splittings (pair splittings, then minimal-separator
    /// splittings) until `f` accepts one or the budget runs out.
    fn search<T>(
        &self,
        graph: &PresentationGraph,
        mut f: impl FnMut(&Splitting) -> Option<T>,
    ) -> Search<T> {
        let budget = self.config.budget;
        let mut seen = BTreeSet::new();
        let mut examined = 0usize;
        for mode in [SplittingMode::NonadjacentPairs, SplittingMode::MinimalSeparators] {
            let list = enumerate_visual_splittings(graph, mode, None)
                .expect("pair and separator modes have no size cap");
            for sp in list.splittings {
                if !seen.insert(sp) {
                    continue;
                }
                if examined == budget {
                    *self.budget_hit.borrow_mut() = true;
                    return Search::Exhausted;
                }
                examined += 1;
                if let Some(t) = f(&sp) {
                    return Search::Found(sp, t);
                }
            }
        }
        Search::NotFound
    }

    fn knows_ic(&self, graph: &PresentationGraph) -> Option<Certificate> {
        let key = to_text(graph);
        if let Some(hit) = self.ic_memo.borrow().get(&key) {
            return hit.clone();
        }
        let result = self.knows_ic_uncached(graph);
        self.ic_memo.borrow_mut().insert(key, result.clone());
        result
    }

    fn knows_ic_uncached(&self, graph: &PresentationGraph) -> Option<Certificate> {
        let n = graph.vertex_count();
        let labels: Vec<u32> = graph.edges().map(|(_, _, m)| m).collect();
        let claim = || Claim::Ic {
            vertices: names(graph),
        };
        let mut attempted = Vec::new();
        for &rule in IC_ORDER {
            if !self.config.is_enabled(rule) {
                continue;
            }
            attempted.push(rule);
            let base = || Certificate::new(claim(), Proven, rule);
            let hit = match rule {
                "ic.at-most-3-generators" => (n <= 3).then(base),
                "ic.spherical" => is_spherical(graph)
                    .then(|| type_witnesses(graph, graph.all()).fold(base(), Certificate::witness)),
                "ic.raag" => labels.iter().all(|&m| m == 2).then(base),
                "ic.large" => labels.iter().all(|&m| m >= 3).then(base),
                "ic.two-two-free-2dim" => {
                    let consecutive_twos = (0..n).any(|v| {
                        graph
                            .neighbors(v)
                            .iter()
                            .filter(|&u| graph.finite_label(u, v) == Some(2))
                            .count()
                            >= 2
                    });
                    (!consecutive_twos && is_two_dimensional(graph)).then(base)
                }
                "ic.affine-a-c" => match affine_type(graph) {
                    Some(t @ (CoxeterType::AffineA(_) | CoxeterType::AffineC(_))) => {
                        Some(base().witness(Witness::CoxeterType {
                            vertices: names(graph),
                            name: t.to_string(),
                        }))
                    }
                    _ => None,
                },
                "ic.even-fc" => (labels.iter().all(|m| m % 2 == 0) && is_fc(graph)).then(base),
                "ic.reducible-product" => self.ic_product(graph, base()),
                _ => unreachable!("IC_ORDER lists IC rules only"),
            };
            if let Some(cert) = hit {
                return Some(cert.attempted(&attempted));
            }
        }
        None
    }

    fn ic_product(&self, graph: &PresentationGraph, base: Certificate) -> Option<Certificate> {
        let factors = irreducible_factors(graph).ok()?;
        if factors.len() < 2 {
            return None;
        }
        let mut cert = base.witness(factors_witness(graph, factors.factors()));
        for f in factors.factors() {
            cert = cert.premise(self.knows_ic(&sub(graph, *f))?);
        }
        Some(cert)
    }

    fn edge_condition(&self, graph: &PresentationGraph, sp: &Splitting) -> Option<Certificate> {
        let claim = || Claim::EdgeIntersectionsParabolic {
            vertices: names(graph),
            splitting: SplittingDoc::new(graph, sp),
        };
        let mut attempted = Vec::new();
        for &rule in EDGE_ORDER {
            if !self.config.is_enabled(rule) {
                continue;
            }
            attempted.push(rule);
            let base = || {
                Certificate::new(claim(), Proven, rule)
                    .witness(Witness::Splitting(SplittingDoc::new(graph, sp)))
            };
            let hit = match rule {
                "edge.trivial" => sp.omega().is_empty().then(base),
                "edge.ambient-ic" => self.knows_ic(graph).map(|ic| base().premise(ic)),
                "edge.vertex-groups-ic" => self
                    .knows_ic(&sub(graph, sp.gamma1()))
                    .and_then(|a| Some((a, self.knows_ic(&sub(graph, sp.gamma2()))?)))
                    .map(|(a, b)| base().premise(a).premise(b)),
                "edge.two-convex" => self.two_convex_route(graph, sp.omega(), base()),
                _ => unreachable!("EDGE_ORDER lists edge rules only"),
            };
            if let Some(cert) = hit {
                return Some(cert.attempted(&attempted));
            }
        }
        None
    }

    fn two_convex_route(
        &self,
        graph: &PresentationGraph,
        omega: VertexSet,
        base: Certificate,
    ) -> Option<Certificate> {
        if !is_2convex(graph, omega).ok()? {
            return None;
        }
        let omega_ic = self.knows_ic(&sub(graph, omega))?;
        let mut clique_ics = Vec::new();
        for clique in maximal_cliques(graph.adjacency(), graph.all()) {
            clique_ics.push(self.knows_ic(&sub(graph, clique))?);
        }
        let cover = CompleteCover::cliques_plus_subgraphs_of(graph, omega).ok()?;
        let link = cover.link_complex().ok()?;
        let flag = link.is_flag();
        let omega_names = graph.set_names(omega);
        let check = |rule: &str, statement: String| {
            Certificate::new(
                Claim::Check {
                    vertices: names(graph),
                    statement,
                },
                Proven,
                rule,
            )
            .witness(Witness::VertexSet {
                role: "omega".into(),
                vertices: omega_names.clone(),
            })
        };
        if !flag.is_flag() {
            // Cannot happen for 2-convex Ω; refuse the route rather than
            // certify through a failed check.
            return None;
        }
        let mut cert = base
            .premise(check(
                "computation.two-convex",
                format!("{} is 2-convex", graph.format_set(omega)),
            ))
            .premise(check(
                "computation.flag-link",
                format!(
                    "the link of the cover by cliques and subsets of {} is flag",
                    graph.format_set(omega)
                ),
            ))
            .premise(omega_ic);
        for c in clique_ics {
            cert = cert.premise(c);
        }
        Some(cert)
    }

    fn not_virtually_cyclic(&self, graph: &PresentationGraph) -> Certificate {
        let pair: Vec<String> = graph.names().iter().take(2).cloned().collect();
        Certificate::new(
            Claim::Check {
                vertices: names(graph),
                statement: "the Artin group is not virtually cyclic".into(),
            },
            Proven,
            "computation.not-virtually-cyclic",
        )
        .witness(Witness::VertexSet {
            role: "generator pair".into(),
            vertices: pair,
        })
    }

    fn ah(&self, graph: &PresentationGraph) -> Certificate {
        let claim = || Claim::Ah {
            vertices: names(graph),
        };
        let n = graph.vertex_count();
        let factors = irreducible_factors(graph).expect("graph is non-empty");
        let spherical = is_spherical(graph);
        let mut attempted = Vec::new();
        for &rule in AH_REFUTATION_ORDER {
            if !self.config.is_enabled(rule) {
                continue;
            }
            attempted.push(rule);
            let base = || Certificate::new(claim(), Refuted, rule);
            let hit = match rule {
                "ah.single-generator" => (n == 1).then(base),
                "ah.reducible" => (factors.len() >= 2)
                    .then(|| base().witness(factors_witness(graph, factors.factors()))),
                "ah.spherical-irreducible" => (spherical && factors.is_irreducible()).then(|| {
                    type_witnesses(graph, graph.all())
                        .fold(base(), Certificate::witness)
                        .note("the central quotient A_Γ/Z(A_Γ) is acylindrically hyperbolic")
                }),
                _ => unreachable!(),
            };
            if let Some(cert) = hit {
                return cert.attempted(&attempted);
            }
        }
        // The proof rules assume an irreducible, non-spherical graph on at
        // least two vertices; with refutations disabled that is checked here.
        if n < 2 || !factors.is_irreducible() || spherical {
            return self.unknown(claim(), &attempted);
        }
        let labels: Vec<u32> = graph.edges().map(|(_, _, m)| m).collect();
        let fc = is_fc(graph);
        for &rule in &self.config.ah_proof_order {
            if !self.config.is_enabled(rule) {
                continue;
            }
            attempted.push(rule);
            let base = || Certificate::new(claim(), Proven, rule);
            let hit = match rule {
                "ah.raag" => labels.iter().all(|&m| m == 2).then(base),
                "ah.two-dimensional" => is_two_dimensional(graph).then(base),
                "ah.euclidean" => affine_type(graph).map(|t| {
                    base().witness(Witness::CoxeterType {
                        vertices: names(graph),
                        name: t.to_string(),
                    })
                }),
                "ah.not-join" => is_join(graph)
                    .expect("at least two vertices")
                    .is_none()
                    .then(base),
                "ah.even-fc" => (fc && labels.iter().all(|m| m % 2 == 0)).then(base),
                "ah.fc-spherical-edge" => {
                    if fc {
                        self.found(
                            graph,
                            self.search(graph, |sp| is_spherical_set(graph, sp.omega()).then_some(())),
                            |sp, ()| {
                                type_witnesses(graph, sp.omega()).fold(base(), Certificate::witness)
                            },
                        )
                    } else {
                        None
                    }
                }
                "ah.splitting-edge-intersections" => self.found(
                    graph,
                    self.search(graph, |sp| self.edge_condition(graph, sp)),
                    |_, edge| base().premise(edge),
                ),
                "ah.vertex-group-wm" => self.vertex_group_wm(graph, base()),
                _ => unreachable!(),
            };
            if let Some(cert) = hit {
                return cert.attempted(&attempted);
            }
        }
        self.unknown(claim(), &attempted)
    }

    /// Turn a successful search into a certificate carrying the splitting
    /// and the non-virtually-cyclic check.
    fn found<T>(
        &self,
        graph: &PresentationGraph,
        search: Search<T>,
        build: impl FnOnce(&Splitting, T) -> Certificate,
    ) -> Option<Certificate> {
        match search {
            Search::Found(sp, t) => {
                let mut cert = build(&sp, t);
                cert.witnesses
                    .insert(0, Witness::Splitting(SplittingDoc::new(graph, &sp)));
                Some(cert.premise(self.not_virtually_cyclic(graph)))
            }
            Search::NotFound | Search::Exhausted => None,
        }
    }

    fn vertex_group_wm(&self, graph: &PresentationGraph, base: Certificate) -> Option<Certificate> {
        let search = self.search(graph, |sp| {
            [*sp, sp.swapped()].into_iter().find_map(|oriented| {
                let side = sub(graph, oriented.gamma1());
                let omega = oriented.omega().compress(oriented.gamma1());
                if contains_direct_factor(&side, omega).ok()? {
                    return None;
                }
                let wm = self.wm_conjecture(&side);
                (wm.verdict == Proven).then_some((oriented, side, omega, wm))
            })
        });
        match search {
            Search::Found(_, (oriented, side, omega, wm)) => {
                let check = Certificate::new(
                    Claim::Check {
                        vertices: names(&side),
                        statement: format!(
                            "{} contains no direct factor of the vertex group",
                            side.format_set(omega)
                        ),
                    },
                    Proven,
                    "computation.no-direct-factor",
                )
                .witness(factors_witness(
                    &side,
                    irreducible_factors(&side).expect("non-empty side").factors(),
                ));
                Some(
                    base.witness(Witness::Splitting(SplittingDoc::new(graph, &oriented)))
                        .premise(wm)
                        .premise(check)
                        .premise(self.not_virtually_cyclic(graph)),
                )
            }
            Search::NotFound | Search::Exhausted => None,
        }
    }

    fn wm_conjecture(&self, graph: &PresentationGraph) -> Certificate {
        let key = to_text(graph);
        if let Some(hit) = self.wm_memo.borrow().get(&key) {
            return hit.clone();
        }
        let result = self.wm_uncached(graph);
        self.wm_memo.borrow_mut().insert(key, result.clone());
        result
    }

    fn wm_uncached(&self, graph: &PresentationGraph) -> Certificate {
        let claim = || Claim::WmConjecture {
            vertices: names(graph),
        };
        let factors = irreducible_factors(graph).expect("graph is non-empty");
        let splits = factors.is_irreducible() && !graph.is_clique(graph.all());
        let mut attempted = Vec::new();
        for &rule in WM_ORDER {
            if !self.config.is_enabled(rule) {
                continue;
            }
            attempted.push(rule);
            let base = || Certificate::new(claim(), Proven, rule);
            let hit = match rule {
                "wm.spherical" => is_spherical(graph)
                    .then(|| type_witnesses(graph, graph.all()).fold(base(), Certificate::witness)),
                "wm.two-dimensional" => is_two_dimensional(graph).then(base),
                "wm.ic-implies-wm" if splits => self.knows_ic(graph).map(|ic| base().premise(ic)),
                "wm.splitting" if splits => {
                    match self.search(graph, |sp| self.edge_condition(graph, sp)) {
                        Search::Found(sp, edge) => Some(
                            base()
                                .witness(Witness::Splitting(SplittingDoc::new(graph, &sp)))
                                .premise(edge),
                        ),
                        Search::NotFound | Search::Exhausted => None,
                    }
                }
                "wm.product" if factors.len() >= 2 => {
                    let mut cert = base().witness(factors_witness(graph, factors.factors()));
                    let mut all = true;
                    for f in factors.factors() {
                        let c = self.wm_conjecture(&sub(graph, *f));
                        all &= c.verdict == Proven;
                        cert = cert.premise(c);
                    }
                    all.then_some(cert)
                }
                _ => None,
            };
            if let Some(cert) = hit {
                return cert.attempted(&attempted);
            }
        }
        self.unknown(claim(), &attempted)
    }

    fn wm_subgroup(&self, graph: &PresentationGraph, subgroup: VertexSet) -> Certificate {
        let claim = || Claim::WmSubgroup {
            vertices: names(graph),
            subgroup: graph.set_names(subgroup),
        };
        let factors = irreducible_factors(graph).expect("graph is non-empty");
        let inside = factors.factors().iter().find(|f| f.is_subset(subgroup));
        let mut attempted = Vec::new();
        let refute = "wms.contains-factor";
        if self.config.is_enabled(refute) {
            attempted.push(refute);
            if let Some(f) = inside {
                return Certificate::new(claim(), Refuted, refute)
                    .witness(Witness::VertexSet {
                        role: "direct factor".into(),
                        vertices: graph.set_names(*f),
                    })
                    .witness(factors_witness(graph, factors.factors()))
                    .attempted(&attempted);
            }
        }
        let prove = "wms.from-conjecture";
        if !self.config.is_enabled(prove) || inside.is_some() {
            return self.unknown(claim(), &attempted);
        }
        attempted.push(prove);
        let wm = self.wm_conjecture(graph);
        if wm.verdict != Proven {
            return self.unknown(claim(), &attempted).premise(wm);
        }
        let check = Certificate::new(
            Claim::Check {
                vertices: names(graph),
                statement: format!(
                    "{} contains no direct factor",
                    graph.format_set(subgroup)
                ),
            },
            Proven,
            "computation.no-direct-factor",
        )
        .witness(factors_witness(graph, factors.factors()));
        Certificate::new(claim(), Proven, prove)
            .premise(wm)
            .premise(check)
            .attempted(&attempted)
    }
}
