//! Batch certification of a directory of graph files.
//!
//! Every `.artin` / `.json` file (certificate files excepted) is certified
//! independently; `<file>.<claim>.cert.json` is written next to it. Rows are
//! sorted by file name, so the report does not depend on scheduling.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::corpus::{read_graph_file, CorpusError};
use crate::coxeter::class_profile;
use crate::engine::{
    certify_ah, certify_ic, certify_wm_conjecture, Certificate, CertificateDocument, EngineError,
    RuleConfig, Verdict,
};
use crate::graph::PresentationGraph;
use crate::par::{map, Execution};

pub const CERT_SUFFIX: &str = ".cert.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Ah,
    Wm,
    Ic,
}

impl ClaimKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::Ah => "ah",
            ClaimKind::Wm => "wm",
            ClaimKind::Ic => "ic",
        }
    }
}

impl FromStr for ClaimKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ah" => Ok(ClaimKind::Ah),
            "wm" => Ok(ClaimKind::Wm),
            "ic" => Ok(ClaimKind::Ic),
            other => Err(format!("unknown claim `{other}` (expected ah, wm or ic)")),
        }
    }
}

pub fn certify(
    graph: &PresentationGraph,
    kind: ClaimKind,
    config: &RuleConfig,
) -> Result<Certificate, EngineError> {
    match kind {
        ClaimKind::Ah => certify_ah(graph, config),
        ClaimKind::Wm => certify_wm_conjecture(graph, config),
        ClaimKind::Ic => certify_ic(graph, config),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchRow {
    pub file: String,
    pub vertices: Option<usize>,
    pub flags: String,
    pub verdict: Option<Verdict>,
    pub rule: Option<String>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchReport {
    pub claim: ClaimKind,
    pub rows: Vec<BatchRow>,
}

impl BatchReport {
    /// Aligned text table.
    pub fn to_text(&self) -> String {
        let header = ["file", "|V|", "flags", "verdict", "rule"].map(String::from);
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.file.clone(),
                    r.vertices.map(|n| n.to_string()).unwrap_or_else(|| "-".into()),
                    if r.flags.is_empty() { "-".into() } else { r.flags.clone() },
                    r.verdict
                        .map(|v| v.to_string())
                        .unwrap_or_else(|| "error".into()),
                    r.rule
                        .clone()
                        .or_else(|| r.error.clone())
                        .unwrap_or_default(),
                ]
            })
            .collect();
        let mut widths = header.clone().map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&cells) {
            let mut line = String::new();
            for (k, (c, w)) in row.iter().zip(widths).enumerate() {
                if k + 1 == row.len() {
                    line.push_str(c);
                } else {
                    let _ = write!(line, "{c:<w$}  ");
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports always serialize");
        out.push('\n');
        out
    }
}

/// Graph files directly inside `dir`, sorted by file name.
pub fn graph_files(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        if path.is_file() && (ext == "artin" || ext == "json") && !name.ends_with(CERT_SUFFIX) {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files)
}

pub fn certificate_path(file: &Path, kind: ClaimKind) -> PathBuf {
    let mut name = file.file_name().unwrap_or_default().to_os_string();
    name.push(format!(".{}{CERT_SUFFIX}", kind.as_str()));
    file.with_file_name(name)
}

/// Certify every graph file in `dir`. An unreadable or invalid file yields
/// an error row; the batch carries on.
pub fn batch_certify(
    dir: &Path,
    kind: ClaimKind,
    config: &RuleConfig,
    execution: Execution,
) -> io::Result<BatchReport> {
    let files = graph_files(dir)?;
    let rows = map(&files, execution, |path| certify_file(path, kind, config));
    Ok(BatchReport { claim: kind, rows })
}

fn certify_file(path: &Path, kind: ClaimKind, config: &RuleConfig) -> BatchRow {
    let mut row = BatchRow {
        file: path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default(),
        vertices: None,
        flags: String::new(),
        verdict: None,
        rule: None,
        error: None,
    };
    let graph = match read_graph_file(path) {
        Ok(doc) => doc.graph,
        Err(e) => {
            // The file column already names the file; keep rows path-free.
            row.error = Some(match e {
                CorpusError::Parse { source, .. } => source.to_string(),
                CorpusError::Io { source, .. } => source.to_string(),
                other => other.to_string(),
            });
            return row;
        }
    };
    row.vertices = Some(graph.vertex_count());
    row.flags = class_profile(&graph).flag_names().join(",");
    let cert = match certify(&graph, kind, config) {
        Ok(c) => c,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.verdict = Some(cert.verdict);
    row.rule = Some(cert.rule.clone());
    let doc = CertificateDocument::new(&graph, cert);
    if let Err(e) = fs::write(certificate_path(path, kind), doc.to_json()) {
        row.error = Some(format!("writing certificate: {e}"));
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_directory_gives_empty_table() {
        let dir = tempfile::tempdir().unwrap();
        let report =
            batch_certify(dir.path(), ClaimKind::Ah, &RuleConfig::default(), Execution::Parallel)
                .unwrap();
        assert!(report.rows.is_empty());
        assert_eq!(report.to_text(), "file  |V|  flags  verdict  rule\n");
    }

    #[test]
    fn bad_file_is_an_error_row() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("a.artin"), "vertices: a b\nedge a b 3\n").unwrap();
        fs::write(dir.path().join("b.artin"), "vertices: a a\n").unwrap();
        fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
        let report =
            batch_certify(dir.path(), ClaimKind::Ah, &RuleConfig::default(), Execution::Sequential)
                .unwrap();
        assert_eq!(report.rows.len(), 2);
        assert_eq!(report.rows[0].verdict, Some(Verdict::Refuted));
        assert!(report.rows[1].error.is_some());
        assert!(dir.path().join("a.artin.ah.cert.json").exists());
        // Certificates are not picked up as inputs on a second run.
        let again =
            batch_certify(dir.path(), ClaimKind::Ah, &RuleConfig::default(), Execution::Sequential)
                .unwrap();
        assert_eq!(again, report);
    }
}
