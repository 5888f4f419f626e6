use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use artin_core::engine::CertificateDocument;
use artin_core::format::parse_graph;
use artin_core::Verdict;

const P1_TO_P6: &[&str] = &[
    "ah.raag",
    "ah.two-dimensional",
    "ah.euclidean",
    "ah.not-join",
    "ah.even-fc",
    "ah.fc-spherical-edge",
];

fn artin(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn workspace() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        ("c4-all2.artin", "vertices: a b c d\nedge a b 2\nedge b c 2\nedge c d 2\nedge a d 2\n"),
        ("k3.artin", "vertices: a b c\nedge a b 3\nedge b c 3\nedge a c 3\n"),
        ("k3-233.artin", "vertices: a b c\nedge a b 2\nedge b c 3\nedge a c 3\n"),
        ("square.artin", "vertices: a b c d\nedge a b 3\nedge b c 3\nedge c d 3\nedge a d 3\n"),
        ("bad.artin", "vertices: a b\nedge a z 3\n"),
    ];
    for (name, body) in files {
        fs::write(dir.path().join(name), body).unwrap();
    }
    let out = artin(dir.path(), &["gen", "wheel", "6", "-o", "wheel6.artin"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    dir
}

#[test]
fn wheel_is_proven() {
    let dir = workspace();
    let out = artin(dir.path(), &["certify", "ah", "wheel6.artin"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("Proven: AH"), "{text}");
    assert!(text.contains("rule: ah.two-dimensional"), "{text}");

    let mut args = vec!["certify", "ah", "wheel6.artin"];
    for rule in P1_TO_P6 {
        args.extend(["--disable-rule", rule]);
    }
    let out = artin(dir.path(), &args);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("rule: ah.splitting-edge-intersections"));
}

#[test]
fn square_of_twos_is_refuted_with_factors() {
    let dir = workspace();
    let out = artin(dir.path(), &["certify", "ah", "c4-all2.artin"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("rule: ah.reducible"), "{text}");
    assert!(text.contains("witness: factors {a,c} {b,d}"), "{text}");
}

#[test]
fn hollow_triangle_is_not_flag() {
    let dir = workspace();
    let out = artin(dir.path(), &["cover", "check", "k3.artin", "--explicit", "hollow"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "not flag, witness {a,b,c}");
    let out = artin(dir.path(), &["cover", "check", "k3.artin"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn exit_code_matches_emitted_verdict() {
    let dir = workspace();
    let cases: &[&[&str]] = &[
        &["certify", "ah", "wheel6.artin"],
        &["certify", "ah", "c4-all2.artin"],
        &["certify", "ah", "k3-233.artin"],
        &["certify", "wm", "square.artin"],
        &["certify", "ic", "k3.artin"],
        &["certify", "wm", "wheel6.artin", "--subset", "h,v1"],
        &[
            "certify", "ah", "wheel6.artin",
            "--disable-rule", "ah.raag", "--disable-rule", "ah.two-dimensional",
            "--disable-rule", "ah.euclidean", "--disable-rule", "ah.not-join",
            "--disable-rule", "ah.even-fc", "--disable-rule", "ah.fc-spherical-edge",
            "--disable-rule", "ah.splitting-edge-intersections",
            "--disable-rule", "ah.vertex-group-wm",
        ],
    ];
    let mut seen = Vec::new();
    for args in cases {
        let mut args = args.to_vec();
        args.extend(["--format", "json"]);
        let out = artin(dir.path(), &args);
        let doc = CertificateDocument::from_json(&stdout(&out)).unwrap();
        doc.validate().unwrap();
        assert_eq!(code(&out), i32::from(doc.certificate.verdict.exit_code()), "{args:?}");
        seen.push(doc.certificate.verdict);
    }
    for v in [Verdict::Proven, Verdict::Refuted, Verdict::Unknown] {
        assert!(seen.contains(&v), "no {v} case");
    }
}

#[test]
fn spherical_triangle_carries_note() {
    let dir = workspace();
    let out = artin(dir.path(), &["certify", "ah", "k3-233.artin"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("central quotient"));
}

#[test]
fn usage_errors_exit_64() {
    let dir = workspace();
    let cases: &[&[&str]] = &[
        &["frobnicate"],
        &["certify", "ah", "wheel6.artin", "--disable-rule", "no.such-rule"],
        &["certify", "ah", "wheel6.artin", "--subset", "h"],
        &["gen", "wheel", "2"],
        &["gen", "random", "5", "--labels", "2,3,inf"],
        &["gen", "catalog:Z9"],
        &["splittings", "square.artin", "--mode", "sideways"],
    ];
    for args in cases {
        let out = artin(dir.path(), args);
        assert_eq!(code(&out), 64, "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty());
    }
    assert_eq!(code(&artin(dir.path(), &["--help"])), 0);
    assert_eq!(code(&artin(dir.path(), &["--version"])), 0);
}

#[test]
fn input_errors_exit_65() {
    let dir = workspace();
    let cases: &[&[&str]] = &[
        &["classify", "missing.artin"],
        &["classify", "bad.artin"],
        &["convex", "square.artin", "--omega", "a,zz"],
        &["certify", "wm", "k3.artin", "--subset", "a,b,c"],
        &["batch", "no-such-dir"],
    ];
    for args in cases {
        let out = artin(dir.path(), args);
        assert_eq!(code(&out), 65, "{args:?}: {}", stderr(&out));
        assert!(stderr(&out).starts_with("artin: "));
    }
    fs::write(dir.path().join("graph.txt"), "vertices: a\n").unwrap();
    assert_eq!(code(&artin(dir.path(), &["classify", "graph.txt"])), 65);
}

#[test]
fn convex_and_splittings() {
    let dir = workspace();
    let out = artin(dir.path(), &["convex", "wheel6.artin", "--omega", "h,v1,v4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "{h,v1,v4} is 2-convex");
    let out = artin(dir.path(), &["convex", "wheel6.artin", "--omega", "h,v1,v3"]);
    assert_eq!(code(&out), 1);

    let out = artin(dir.path(), &["splittings", "k3.artin", "--mode", "all"]);
    assert_eq!(code(&out), 0);
    let square = artin(dir.path(), &["splittings", "square.artin", "--mode", "min-sep", "--format", "json"]);
    assert_eq!(code(&square), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&square)).unwrap();
    assert!(json.is_object() || json.is_array());
    assert_ne!(stdout(&out), stdout(&square));
}

#[test]
fn classify_reports_type() {
    let dir = workspace();
    let out = artin(dir.path(), &["gen", "catalog:E8", "-o", "e8.artin"]);
    assert_eq!(code(&out), 0);
    let out = artin(dir.path(), &["classify", "e8.artin"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("E8"), "{}", stdout(&out));
}

#[test]
fn generators_round_trip() {
    let dir = workspace();
    let runs: &[&[&str]] = &[
        &["gen", "path", "5"],
        &["gen", "cycle", "6", "--labels", "4"],
        &["gen", "complete", "4"],
        &["gen", "wheel", "7", "--rim", "2", "--spoke", "3"],
        &["gen", "random", "6", "--labels", "2,3,inf", "--seed", "42"],
        &["gen", "catalog:~A3"],
    ];
    for args in runs {
        let a = stdout(&artin(dir.path(), args));
        let b = stdout(&artin(dir.path(), args));
        assert_eq!(a, b, "{args:?} is not deterministic");
        let g = parse_graph(&a).unwrap();
        assert_eq!(artin_core::format::to_text(&g), a);

        let mut json = args.to_vec();
        json.extend(["--format", "json"]);
        let doc = artin_core::format::parse_document(&stdout(&artin(dir.path(), &json))).unwrap();
        assert_eq!(doc.graph, g);
    }
    let w = parse_graph(&stdout(&artin(dir.path(), &["gen", "wheel", "6"]))).unwrap();
    assert_eq!((w.vertex_count(), w.edge_count()), (7, 12));
}

#[test]
fn batch_of_wheels() {
    let dir = tempfile::tempdir().unwrap();
    for n in 6..=10 {
        let name = format!("wheel{n:02}.artin");
        let out = artin(dir.path(), &["gen", "wheel", &n.to_string(), "-o", &name]);
        assert_eq!(code(&out), 0);
    }
    let out = artin(dir.path(), &["batch", "."]);
    assert_eq!(code(&out), 0);
    let table = stdout(&out);
    let rows: Vec<&str> = table.lines().skip(1).collect();
    assert_eq!(rows.len(), 5, "{table}");
    assert!(rows.iter().all(|r| r.contains("Proven")), "{table}");
    assert!(dir.path().join("wheel06.artin.ah.cert.json").exists());

    // Deterministic, and unaffected by the certificates now present.
    let again = artin(dir.path(), &["batch", ".", "--sequential"]);
    assert_eq!(stdout(&again), table);
    let json = stdout(&artin(dir.path(), &["batch", ".", "--format", "json"]));
    let json2 = stdout(&artin(dir.path(), &["batch", ".", "--format", "json"]));
    assert_eq!(json, json2);
}

#[test]
fn batch_of_spherical_catalog_graphs() {
    let dir = tempfile::tempdir().unwrap();
    for kind in ["A3", "B4", "D5", "E6", "F4", "H3", "I2(5)"] {
        let name = format!("{}.artin", kind.replace(['(', ')'], "_"));
        let out = artin(dir.path(), &["gen", &format!("catalog:{kind}"), "-o", &name]);
        assert_eq!(code(&out), 0, "{kind}: {}", stderr(&out));
    }
    let out = artin(dir.path(), &["batch", "."]);
    assert_eq!(code(&out), 0);
    let table = stdout(&out);
    assert_eq!(table.lines().count(), 8);
    assert!(table.lines().skip(1).all(|r| r.contains("Refuted")), "{table}");
    for entry in fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        if path.to_string_lossy().ends_with(".cert.json") {
            let doc = CertificateDocument::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
            assert!(doc.certificate.notes.iter().any(|n| n.contains("central quotient")));
        }
    }
}

#[test]
fn batch_empty_directory_and_bad_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = artin(dir.path(), &["batch", "."]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "file  |V|  flags  verdict  rule\n");

    fs::write(dir.path().join("broken.artin"), "vertices: a a\n").unwrap();
    fs::write(dir.path().join("ok.artin"), "vertices: a b\nedge a b 3\n").unwrap();
    let out = artin(dir.path(), &["batch", ".", "--claim", "wm"]);
    assert_eq!(code(&out), 0);
    let table = stdout(&out);
    assert!(table.lines().nth(1).unwrap().starts_with("broken.artin"));
    assert!(table.lines().nth(1).unwrap().contains("error"));
    assert!(dir.path().join("ok.artin.wm.cert.json").exists());
}

#[test]
fn json_cover_key() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"{"vertices": ["a", "b", "c"], "edges": [["a", "b", 3], ["b", "c", 3], ["a", "c", 3]],
        "cover": [["a", "b"], ["b", "c"], ["a", "c"]]}"#;
    fs::write(dir.path().join("k3.json"), body).unwrap();
    let out = artin(dir.path(), &["cover", "check", "k3.json"]);
    assert_eq!(code(&out), 65);
    assert!(stderr(&out).contains("invalid cover"), "{}", stderr(&out));
    let out = artin(dir.path(), &["cover", "check", "k3.json", "--close"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "not flag, witness {a,b,c}");

    let body = body.replace(r#"["a", "c"]]"#, r#"["a", "c"], ["a", "b", "c"]]"#);
    fs::write(dir.path().join("full.json"), body).unwrap();
    let out = artin(dir.path(), &["cover", "check", "full.json", "--close"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "flag");
}
