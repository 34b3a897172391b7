//! Classification reports in text and JSON form.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use dyer_core::classify::invariant_factors;
use dyer_core::oracle::{abelianize_snf, build_presentation, derived_subgroup};
use dyer_core::{
    abelianization_invariants, even_quotient, graph_product_derived_length, is_even, is_quasi_perfect,
    is_virtually_free, AbelianInvariants, DyerGraph, GraphError, OracleError, QuasiPerfectFailure, VertexId,
    VertexOrder, VirtuallyFreeFailure,
};

use crate::dyg::print_dyg;

pub const SCHEMA_VERSION: u32 = 1;

/// A vertex order in JSON: a number, or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JsonOrder(pub VertexOrder);

impl Serialize for JsonOrder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            VertexOrder::Finite(n) => s.serialize_u64(n),
            VertexOrder::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for JsonOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u64),
            Text(String),
        }
        let order = match Raw::deserialize(d)? {
            Raw::Number(n) => VertexOrder::finite(n),
            Raw::Text(t) => t.parse(),
        };
        order.map(JsonOrder).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl From<&AbelianInvariants> for Invariants {
    fn from(a: &AbelianInvariants) -> Self {
        Invariants { torsion: a.torsion.clone(), free_rank: a.free_rank }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuasiPerfectWitness {
    Prime { part: usize, prime: u64, pieces: Vec<Vec<String>> },
    Pair { first: usize, second: usize, first_part: Vec<String>, second_part: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VirtuallyFreeWitness {
    InfiniteOrderEdge { vertices: Vec<String> },
    /// `vertices[0]` has infinite order; the other two are its non-adjacent
    /// finite-order neighbours.
    MissingTriangle { vertices: Vec<String> },
    NotChordal { cycle: Vec<String> },
    InfiniteCoxeterClique { clique: Vec<String> },
}

fn strings(vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|v| v.to_string()).collect()
}

fn ids(vs: &[String]) -> Result<Vec<VertexId>, GraphError> {
    vs.iter().map(|v| VertexId::new(v.as_str())).collect()
}

fn fixed<const N: usize>(vs: &[String]) -> Result<[VertexId; N], GraphError> {
    ids(vs)?.try_into().map_err(|_| GraphError::PreconditionViolated("wrong number of witness vertices"))
}

impl QuasiPerfectWitness {
    pub fn from_failure(f: &QuasiPerfectFailure) -> Self {
        match f {
            QuasiPerfectFailure::Prime { part, prime, pieces } => QuasiPerfectWitness::Prime {
                part: *part,
                prime: *prime,
                pieces: pieces.iter().map(|p| strings(p)).collect(),
            },
            QuasiPerfectFailure::Pair { first, second, first_part, second_part } => QuasiPerfectWitness::Pair {
                first: *first,
                second: *second,
                first_part: strings(first_part),
                second_part: strings(second_part),
            },
        }
    }

    pub fn to_failure(&self) -> Result<QuasiPerfectFailure, GraphError> {
        Ok(match self {
            QuasiPerfectWitness::Prime { part, prime, pieces } => QuasiPerfectFailure::Prime {
                part: *part,
                prime: *prime,
                pieces: pieces.iter().map(|p| ids(p)).collect::<Result<_, _>>()?,
            },
            QuasiPerfectWitness::Pair { first, second, first_part, second_part } => QuasiPerfectFailure::Pair {
                first: *first,
                second: *second,
                first_part: ids(first_part)?,
                second_part: ids(second_part)?,
            },
        })
    }
}

impl VirtuallyFreeWitness {
    pub fn from_failure(f: &VirtuallyFreeFailure) -> Self {
        match f {
            VirtuallyFreeFailure::InfiniteOrderEdge(u, v) => {
                VirtuallyFreeWitness::InfiniteOrderEdge { vertices: strings(&[u.clone(), v.clone()]) }
            }
            VirtuallyFreeFailure::MissingTriangle(u, v, w) => {
                VirtuallyFreeWitness::MissingTriangle { vertices: strings(&[u.clone(), v.clone(), w.clone()]) }
            }
            VirtuallyFreeFailure::NotChordal(c) => VirtuallyFreeWitness::NotChordal { cycle: strings(c) },
            VirtuallyFreeFailure::InfiniteCoxeterClique(c) => {
                VirtuallyFreeWitness::InfiniteCoxeterClique { clique: strings(c) }
            }
        }
    }

    pub fn to_failure(&self) -> Result<VirtuallyFreeFailure, GraphError> {
        Ok(match self {
            VirtuallyFreeWitness::InfiniteOrderEdge { vertices } => {
                let [u, v] = fixed(vertices)?;
                VirtuallyFreeFailure::InfiniteOrderEdge(u, v)
            }
            VirtuallyFreeWitness::MissingTriangle { vertices } => {
                let [u, v, w] = fixed(vertices)?;
                VirtuallyFreeFailure::MissingTriangle(u, v, w)
            }
            VirtuallyFreeWitness::NotChordal { cycle } => VirtuallyFreeFailure::NotChordal(ids(cycle)?),
            VirtuallyFreeWitness::InfiniteCoxeterClique { clique } => {
                VirtuallyFreeFailure::InfiniteCoxeterClique(ids(clique)?)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiPerfectSection {
    pub result: bool,
    pub failure: Option<QuasiPerfectWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtuallyFreeSection {
    pub result: bool,
    pub failure: Option<VirtuallyFreeWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationSection {
    /// `f(wᵢ)` for each `Γ²` component.
    pub factors: Vec<JsonOrder>,
    pub invariants: Invariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedSubgroupSection {
    /// Number of cosets of `G′`, i.e. `|G/G′|`.
    pub cosets: usize,
    pub generators: usize,
    pub relators: usize,
    pub abelianization: Invariants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    /// `"ok"`, or `"inapplicable: <reason>"`.
    pub status: String,
    pub abelianization: Invariants,
    pub abelianization_agrees: bool,
    pub derived_subgroup: Option<DerivedSubgroupSection>,
    pub quasi_perfect: Option<bool>,
    pub agreement: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema: u32,
    /// Canonical `.dyg` text of the classified graph.
    pub graph: String,
    pub even: bool,
    pub quasi_perfect: QuasiPerfectSection,
    pub virtually_free: VirtuallyFreeSection,
    pub abelianization: AbelianizationSection,
    /// `"1"`, `"2"` or `"inf"`; only for graphs with every label 2.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_product_dl: Option<String>,
    /// Canonical `.dyg` text of the even quotient.
    pub even_quotient: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
}

fn oracle_section(g: &DyerGraph, classified: bool, closed_form: &AbelianInvariants) -> OracleSection {
    let p = build_presentation(g);
    let snf = abelianize_snf(&p);
    let mut section = OracleSection {
        status: "ok".to_owned(),
        abelianization: Invariants::from(&snf),
        abelianization_agrees: &snf == closed_form,
        derived_subgroup: None,
        quasi_perfect: None,
        agreement: None,
    };
    if g.orders().iter().any(|f| !f.is_finite()) {
        section.status = format!("inapplicable: {}", OracleError::InfiniteAbelianization);
        return section;
    }
    match derived_subgroup(&p) {
        Ok(d) => {
            let qp = d.abelianization.is_trivial();
            section.derived_subgroup = Some(DerivedSubgroupSection {
                cosets: d.index,
                generators: d.presentation.generator_count(),
                relators: d.presentation.relators.len(),
                abelianization: Invariants::from(&d.abelianization),
            });
            section.quasi_perfect = Some(qp);
            section.agreement = Some(qp == classified);
        }
        Err(e) => section.status = format!("inapplicable: {e}"),
    }
    section
}

/// Runs every classifier on `g`, and the oracle when `with_oracle` is set.
pub fn emit_report(g: &DyerGraph, with_oracle: bool) -> ClassificationReport {
    let qp = is_quasi_perfect(g);
    let vf = is_virtually_free(g);
    let factors = abelianization_invariants(g);
    let closed_form = invariant_factors(&factors);
    let quotient = even_quotient(g);
    ClassificationReport {
        schema: SCHEMA_VERSION,
        graph: print_dyg(g, &[]),
        even: is_even(g),
        quasi_perfect: QuasiPerfectSection {
            result: qp.result,
            failure: qp.failure.as_ref().map(QuasiPerfectWitness::from_failure),
        },
        virtually_free: VirtuallyFreeSection {
            result: vf.result,
            failure: vf.failure.as_ref().map(VirtuallyFreeWitness::from_failure),
        },
        abelianization: AbelianizationSection {
            factors: factors.iter().copied().map(JsonOrder).collect(),
            invariants: Invariants::from(&closed_form),
        },
        graph_product_dl: graph_product_derived_length(g).ok().map(|c| c.to_string()),
        even_quotient: print_dyg(&quotient.graph, &[]),
        oracle: with_oracle.then(|| oracle_section(g, qp.result, &closed_form)),
    }
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let yes = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "graph:");
        for line in self.graph.lines() {
            let _ = writeln!(out, "  {line}");
        }
        let _ = writeln!(out, "even: {}", yes(self.even));
        let _ = writeln!(out, "quasi-perfect: {}", yes(self.quasi_perfect.result));
        if let Some(w) = &self.quasi_perfect.failure {
            let _ = writeln!(out, "  witness: {}", describe_qp(w));
        }
        let _ = writeln!(out, "virtually free: {}", yes(self.virtually_free.result));
        if let Some(w) = &self.virtually_free.failure {
            let _ = writeln!(out, "  witness: {}", describe_vf(w));
        }
        let factors: Vec<String> = self.abelianization.factors.iter().map(|f| f.0.to_string()).collect();
        let _ = writeln!(
            out,
            "abelianization: product of Z/f over [{}] = {}",
            factors.join(", "),
            format_invariants(&self.abelianization.invariants)
        );
        if let Some(dl) = &self.graph_product_dl {
            let _ = writeln!(out, "graph product derived length: {dl}");
        }
        let _ = writeln!(out, "even quotient:");
        for line in self.even_quotient.lines() {
            let _ = writeln!(out, "  {line}");
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(out, "oracle: {}", o.status);
            let _ = writeln!(
                out,
                "  abelianization (SNF): {} ({})",
                format_invariants(&o.abelianization),
                if o.abelianization_agrees { "matches" } else { "MISMATCH" }
            );
            if let Some(d) = &o.derived_subgroup {
                let _ = writeln!(
                    out,
                    "  derived subgroup: index {}, {} generators, {} relators, abelianization {}",
                    d.cosets,
                    d.generators,
                    d.relators,
                    format_invariants(&d.abelianization)
                );
            }
            if let (Some(qp), Some(agree)) = (o.quasi_perfect, o.agreement) {
                let _ = writeln!(out, "  quasi-perfect: {} ({})", yes(qp), if agree { "agrees" } else { "DISAGREES" });
            }
        }
        out
    }
}

pub fn format_invariants(i: &Invariants) -> String {
    let mut parts: Vec<String> = i.torsion.iter().map(|t| format!("Z/{t}")).collect();
    parts.extend(std::iter::repeat_n("Z".to_owned(), i.free_rank));
    if parts.is_empty() {
        "1".to_owned()
    } else {
        parts.join(" x ")
    }
}

fn describe_qp(w: &QuasiPerfectWitness) -> String {
    match w {
        QuasiPerfectWitness::Prime { part, prime, pieces } => {
            let pieces: Vec<String> = pieces.iter().map(|p| format!("{{{}}}", p.join(", "))).collect();
            format!("part {part} splits into {} after removing labels divisible by {prime}", pieces.join(" "))
        }
        QuasiPerfectWitness::Pair { first_part, second_part, .. } => format!(
            "cross labels between {{{}}} and {{{}}} do not have gcd 2",
            first_part.join(", "),
            second_part.join(", ")
        ),
    }
}

fn describe_vf(w: &VirtuallyFreeWitness) -> String {
    match w {
        VirtuallyFreeWitness::InfiniteOrderEdge { vertices } => {
            format!("edge {} joins two infinite-order vertices", vertices.join(" "))
        }
        VirtuallyFreeWitness::MissingTriangle { vertices } => format!(
            "{} has infinite order and non-adjacent finite-order neighbours {} and {}",
            vertices[0], vertices[1], vertices[2]
        ),
        VirtuallyFreeWitness::NotChordal { cycle } => format!("chordless cycle {}", cycle.join(" ")),
        VirtuallyFreeWitness::InfiniteCoxeterClique { clique } => {
            format!("clique {{{}}} generates an infinite Coxeter group", clique.join(", "))
        }
    }
}
