use std::path::{Path, PathBuf};
use std::process::Command;

use proptest::prelude::*;

use dyer_cli::report::ClassificationReport;
use dyer_cli::{emit_report, gen_random, parse_dyg, print_dyg, DygDocument, GenOptions};
use dyer_core::VertexOrder;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn dyer(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dyer")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_str().unwrap().to_owned()
}

#[test]
fn fixtures_reclassify_to_their_pinned_reports() {
    let mut checked = 0;
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("dyg") {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let pinned = path.with_extension("report.json");
        if path.file_stem().unwrap().to_str().unwrap().starts_with("invalid") {
            assert!(parse_dyg(&text).is_err(), "{}", path.display());
            continue;
        }
        let graph = parse_dyg(&text).unwrap();
        let report = emit_report(&graph, true);
        let expected = std::fs::read_to_string(&pinned).unwrap_or_else(|_| panic!("missing {}", pinned.display()));
        assert_eq!(report.to_json(), expected, "{}", path.display());
        checked += 1;
    }
    assert!(checked >= 5);
}

#[test]
fn generator_fixture_is_reproducible() {
    let golden = std::fs::read_to_string(fixtures().join("gen_n4_seed7.dyg")).unwrap();
    assert_eq!(gen_random(&GenOptions::new(4, 7)).to_string(), golden);
    let (code, out, _) = dyer(&["gen", "--vertices", "4", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden);
}

#[test]
fn classify_final_figure() {
    let (code, out, _) = dyer(&["classify", &fixture("final_figure.dyg"), "--json"]);
    assert_eq!(code, 0);
    let report: ClassificationReport = serde_json::from_str(&out).unwrap();
    assert!(report.quasi_perfect.result);
    assert!(report.virtually_free.result);
    assert_eq!(report.schema, 1);
    assert!(out.contains("\"inf\""));
}

#[test]
fn quotient_to_stdout_and_file() {
    let expected = "vertex a 2\nvertex c 3\nvertex e inf\nedge a c 2\nedge a e 2\nedge c e 2\n";
    let (code, out, _) = dyer(&["quotient", &fixture("final_figure.dyg")]);
    assert_eq!((code, out.as_str()), (0, expected));
    let target = std::env::temp_dir().join(format!("dyer-quotient-{}.dyg", std::process::id()));
    let (code, _, _) = dyer(&["quotient", &fixture("final_figure.dyg"), "-o", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&target).unwrap(), expected);
    std::fs::remove_file(target).unwrap();
}

#[test]
fn exit_codes() {
    let (code, _, err) = dyer(&["validate", &fixture("invalid_dyer_condition.dyg")]);
    assert_eq!(code, 1);
    assert!(err.contains("edge {a,b} has label 3"));
    assert_eq!(dyer(&["validate", &fixture("s3.dyg")]).0, 0);
    assert_eq!(dyer(&["frobnicate"]).0, 2);
    assert_eq!(dyer(&["classify"]).0, 2);
    assert_eq!(dyer(&["validate", "/nonexistent/graph.dyg"]).0, 2);
    assert_eq!(dyer(&["gen", "--vertices", "3", "--seed", "1", "--m-pool", "1"]).0, 2);
    // Verdicts never change the exit code.
    assert_eq!(dyer(&["classify", &fixture("infinite_dihedral.dyg")]).0, 0);
}

#[test]
fn witness_and_oracle_commands() {
    let (_, out, _) = dyer(&["witness", &fixture("final_figure.dyg")]);
    assert_eq!(out, "join\nfactor a b c e\nfactor d\n");
    let (code, out, _) = dyer(&["oracle", &fixture("h3.dyg")]);
    assert_eq!(code, 0);
    assert!(out.contains("coxeter type: H3"));
    assert!(out.contains("cosets: 120"));
    assert!(out.contains("derived length: 1"));
    let (_, out, _) = dyer(&["oracle", &fixture("infinite_dihedral.dyg"), "--max-cosets", "50"]);
    assert!(out.contains("exceeded 50 cosets"));
}

#[test]
fn reports_are_stable_across_runs() {
    let a = dyer(&["classify", &fixture("gcd_two.dyg"), "--json", "--oracle"]).1;
    let b = dyer(&["classify", &fixture("gcd_two.dyg"), "--json", "--oracle"]).1;
    assert_eq!(a, b);
}

fn gen_options() -> impl Strategy<Value = GenOptions> {
    (1usize..=7, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| {
        let mut o = GenOptions::new(n, seed);
        o.edge_prob = p;
        o
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_print_round_trips(opts in gen_options()) {
        let doc = gen_random(&opts);
        let text = doc.to_string();
        let parsed = DygDocument::parse(&text).unwrap();
        prop_assert_eq!(&parsed.graph, &doc.graph);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn report_witnesses_recheck_against_the_echo(opts in gen_options()) {
        let doc = gen_random(&opts);
        let json = emit_report(&doc.graph, false).to_json();
        let report: ClassificationReport = serde_json::from_str(&json).unwrap();
        let echoed = parse_dyg(&report.graph).unwrap();
        prop_assert_eq!(&echoed, &doc.graph);
        prop_assert_eq!(print_dyg(&echoed, &[]), report.graph.clone());
        if let Some(w) = &report.quasi_perfect.failure {
            prop_assert!(w.to_failure().unwrap().verify(&echoed));
        }
        if let Some(w) = &report.virtually_free.failure {
            prop_assert!(w.to_failure().unwrap().verify(&echoed));
        }
        prop_assert_eq!(report.quasi_perfect.result, report.quasi_perfect.failure.is_none());
        let quotient = parse_dyg(&report.even_quotient).unwrap();
        prop_assert!(dyer_core::is_even(&quotient));
    }

    #[test]
    fn generated_orders_come_from_the_pool(opts in gen_options()) {
        let doc = gen_random(&opts);
        prop_assert!(doc.graph.orders().iter().all(|f| opts.f_pool.contains(f) || *f == VertexOrder::Finite(2)));
        prop_assert!(doc.graph.edges().all(|(_, _, m)| opts.m_pool.contains(&m.get())));
    }
}
