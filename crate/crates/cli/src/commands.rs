//! Subcommand bodies. Each returns the text to print and how to exit.

use std::fmt::Write as _;
use std::path::Path;

use dyer_core::oracle::{abelianize_snf, build_presentation, derived_length_finite, derived_subgroup, finite_group_table, todd_coxeter};
use dyer_core::{even_quotient, recognize_finite_coxeter, DyerGraph, VertexOrder};
use dyer_core::graph::{find_indecomposable_witness, join_decompose, WitnessKind};

use crate::dyg::{print_dyg, DygDocument, DygError};
use crate::generate::{gen_random, GenOptions};
use crate::report::{emit_report, format_invariants, Invariants};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Exit 0 after printing the text to standard output.
    Ok(String),
    /// Exit 1: the input is not a valid Dyer graph.
    Invalid(String),
    /// Exit 2: bad arguments or an unusable file.
    Usage(String),
}

fn load(path: &Path) -> Result<DygDocument, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Outcome::Usage(format!("cannot read {}: {e}", path.display())))?;
    DygDocument::parse(&text).map_err(|e| match e {
        DygError::Parse { .. } => Outcome::Invalid(format!("{}: {e}", path.display())),
        DygError::Validation(v) => {
            let mut out = format!("{}: invalid Dyer graph", path.display());
            for violation in &v.0 {
                let _ = write!(out, "\n  {violation}");
            }
            Outcome::Invalid(out)
        }
    })
}

fn with_graph(path: &Path, body: impl FnOnce(&DyerGraph) -> Outcome) -> Outcome {
    match load(path) {
        Ok(doc) => body(&doc.graph),
        Err(outcome) => outcome,
    }
}

pub fn validate(path: &Path) -> Outcome {
    with_graph(path, |g| Outcome::Ok(format!("valid: {} vertices, {} edges\n", g.len(), g.edge_count())))
}

pub fn classify(path: &Path, json: bool, oracle: bool) -> Outcome {
    with_graph(path, |g| {
        let report = emit_report(g, oracle);
        Outcome::Ok(if json { report.to_json() } else { report.to_text() })
    })
}

pub fn quotient(path: &Path, output: Option<&Path>) -> Outcome {
    with_graph(path, |g| {
        let text = print_dyg(&even_quotient(g).graph, &[]);
        match output {
            None => Outcome::Ok(text),
            Some(out) => match std::fs::write(out, text) {
                Ok(()) => Outcome::Ok(String::new()),
                Err(e) => Outcome::Usage(format!("cannot write {}: {e}", out.display())),
            },
        }
    })
}

pub fn witness(path: &Path) -> Outcome {
    with_graph(path, |g| {
        let decomposition = join_decompose(g);
        if decomposition.is_indecomposable() && g.len() >= 3 {
            let w = find_indecomposable_witness(g).expect("indecomposable graph with 3 or more vertices");
            let kind = match w.kind {
                WitnessKind::Gamma1 => "gamma1",
                WitnessKind::Gamma2 => "gamma2",
            };
            let [x, y, z] = &w.vertices;
            return Outcome::Ok(format!("indecomposable\nwitness {kind} {x} {y} {z}\n"));
        }
        let mut out = String::from(if decomposition.is_indecomposable() { "indecomposable\n" } else { "join\n" });
        for factor in &decomposition.factors {
            let names: Vec<String> = g.names_of(factor).iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "factor {}", names.join(" "));
        }
        Outcome::Ok(out)
    })
}

pub fn oracle(path: &Path, max_cosets: usize) -> Outcome {
    with_graph(path, |g| {
        let p = build_presentation(g);
        let mut out = String::new();
        let _ = writeln!(out, "presentation: {p}");
        let _ = writeln!(out, "abelianization: {}", format_invariants(&Invariants::from(&abelianize_snf(&p))));
        match derived_subgroup(&p) {
            Ok(d) => {
                let _ = writeln!(
                    out,
                    "derived subgroup: index {}, {} generators, {} relators, abelianization {}",
                    d.index,
                    d.presentation.generator_count(),
                    d.presentation.relators.len(),
                    format_invariants(&Invariants::from(&d.abelianization))
                );
                let _ = writeln!(out, "quasi-perfect: {}", if d.abelianization.is_trivial() { "yes" } else { "no" });
            }
            Err(e) => {
                let _ = writeln!(out, "derived subgroup: inapplicable: {e}");
            }
        }
        if g.orders().iter().all(|f| f.is_two()) && g.is_complete() {
            let name = recognize_finite_coxeter(g).map(|t| t.name()).unwrap_or_else(|e| e.to_string());
            let _ = writeln!(out, "coxeter type: {name}");
        }
        match todd_coxeter(&p, max_cosets) {
            Ok(table) => {
                let _ = writeln!(out, "cosets: {}", table.len());
                match finite_group_table(&table) {
                    Ok(gt) => {
                        let series: Vec<String> = gt.derived_series().iter().map(ToString::to_string).collect();
                        let _ = writeln!(out, "derived series: {}", series.join(" -> "));
                        let _ = writeln!(out, "derived length: {}", derived_length_finite(&gt));
                    }
                    Err(e) => {
                        let _ = writeln!(out, "derived series: {e}");
                    }
                }
            }
            Err(e) => {
                let _ = writeln!(out, "cosets: {e}");
            }
        }
        Outcome::Ok(out)
    })
}

fn parse_list<T>(list: &str, what: &str, item: impl Fn(&str) -> Option<T>) -> Result<Vec<T>, Outcome> {
    let items: Option<Vec<T>> = list.split(',').map(|s| item(s.trim())).collect();
    match items {
        Some(v) if !v.is_empty() => Ok(v),
        _ => Err(Outcome::Usage(format!("invalid {what} {list:?}"))),
    }
}

pub fn gen(vertices: usize, seed: u64, edge_prob: f64, f_pool: &str, m_pool: &str) -> Outcome {
    if vertices == 0 {
        return Outcome::Usage("--vertices must be at least 1".to_owned());
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Outcome::Usage("--edge-prob must lie in [0, 1]".to_owned());
    }
    let f_pool = match parse_list(f_pool, "--f-pool", |s| s.parse::<VertexOrder>().ok()) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let m_pool = match parse_list(m_pool, "--m-pool", |s| s.parse::<u64>().ok().filter(|&m| m >= 2)) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let opts = GenOptions { vertices, seed, f_pool, m_pool, edge_prob };
    Outcome::Ok(gen_random(&opts).to_string())
}
