//! Presentation graphs of Artin groups, their Coxeter-type classification,
//! visual splittings, link complexes of complete covers, and a rule engine
//! producing certificates for acylindrical hyperbolicity, weak malnormality
//! and the intersection property.

pub mod batch;
pub mod cliques;
pub mod corpus;
pub mod cover;
pub mod coxeter;
pub mod engine;
pub mod format;
pub mod graph;
pub mod par;
pub mod structure;

pub use engine::{Certificate, CertificateDocument, RuleConfig, Verdict};
pub use graph::{Label, PresentationGraph, VertexSet};
