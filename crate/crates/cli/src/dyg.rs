//! The `.dyg` text format.
//!
//! ```text
//! # comment
//! vertex a 2
//! vertex e inf
//! edge a e 2
//! ```
//!
//! The canonical form lists comments first, then vertices sorted by name,
//! then edges sorted by their (smaller, larger) endpoint names.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use dyer_core::{validate_dyer, DyerGraph, EdgeLabel, VertexId, VertexOrder, Violations};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DygError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid Dyer graph: {0}")]
    Validation(Violations),
}

/// A parsed document: its comment lines (without the leading `#`) and graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DygDocument {
    pub comments: Vec<String>,
    pub graph: DyerGraph,
}

impl DygDocument {
    pub fn new(graph: DyerGraph) -> Self {
        DygDocument { comments: Vec::new(), graph }
    }

    pub fn parse(text: &str) -> Result<Self, DygError> {
        let mut comments = Vec::new();
        let mut vertices: BTreeMap<String, (usize, VertexOrder)> = BTreeMap::new();
        let mut vertex_list = Vec::new();
        let mut edge_list = Vec::new();
        let mut seen_edges: BTreeSet<(String, String)> = BTreeSet::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let err = |reason: String| DygError::Parse { line, reason };
            let trimmed = raw.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                comments.push(comment.strip_prefix(' ').unwrap_or(comment).to_owned());
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                ["vertex", name, order] => {
                    let id = VertexId::new(*name).map_err(|e| err(e.to_string()))?;
                    let order: VertexOrder =
                        order.parse().map_err(|_| err(format!("order must be an integer >= 2 or inf, got {order:?}")))?;
                    if let Some((first, _)) = vertices.insert(name.to_string(), (line, order)) {
                        return Err(err(format!("vertex {name} already declared on line {first}")));
                    }
                    vertex_list.push((id, order));
                }
                ["edge", u, v, m] => {
                    let u_id = VertexId::new(*u).map_err(|e| err(e.to_string()))?;
                    let v_id = VertexId::new(*v).map_err(|e| err(e.to_string()))?;
                    let m: u64 = m.parse().map_err(|_| err(format!("label must be an integer >= 2, got {m:?}")))?;
                    let label = EdgeLabel::new(m).map_err(|e| err(e.to_string()))?;
                    let key = if u <= v { (u.to_string(), v.to_string()) } else { (v.to_string(), u.to_string()) };
                    if u != v && !seen_edges.insert(key) {
                        return Err(err(format!("edge {u} {v} already declared")));
                    }
                    edge_list.push((u_id, v_id, label));
                }
                [keyword, ..] if *keyword == "vertex" || *keyword == "edge" => {
                    return Err(err(format!("wrong number of fields for {keyword}")));
                }
                [keyword, ..] => return Err(err(format!("unknown declaration {keyword:?}"))),
            }
        }
        let graph = validate_dyer(vertex_list, edge_list).map_err(DygError::Validation)?;
        Ok(DygDocument { comments, graph })
    }
}

impl std::fmt::Display for DygDocument {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_dyg(&self.graph, &self.comments))
    }
}

pub fn parse_dyg(text: &str) -> Result<DyerGraph, DygError> {
    DygDocument::parse(text).map(|d| d.graph)
}

/// Canonical text of a graph, preceded by the given comment lines.
pub fn print_dyg(g: &DyerGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        if c.is_empty() {
            out.push_str("#\n");
        } else {
            let _ = writeln!(out, "# {c}");
        }
    }
    for (v, f) in g.vertex_list() {
        let _ = writeln!(out, "vertex {v} {f}");
    }
    for (u, v, m) in g.edge_list() {
        let _ = writeln!(out, "edge {u} {v} {m}");
    }
    out
}

#[cfg(test)]
mod tests {
    use dyer_core::Violation;

    use super::*;

    #[test]
    fn parses_a_dihedral_edge() {
        let g = parse_dyg("vertex a 2\nvertex b 2\nedge a b 5\n").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.label(0, 1).map(EdgeLabel::get), Some(5));
    }

    #[test]
    fn dyer_condition_is_enforced() {
        let err = parse_dyg("vertex a 2\nvertex b 3\nedge a b 3\n").unwrap_err();
        let DygError::Validation(v) = err else { panic!("expected a validation error") };
        assert!(matches!(v.0.as_slice(), [Violation::DyerConditionViolated(_, _, _)]));
    }

    #[test]
    fn syntax_errors_name_the_line() {
        let cases = [
            ("vertex a 2\nvertex a 3\n", 2),
            ("vertex a 1\n", 1),
            ("vertex a 2\nvertex b 2\nedge a b 1\n", 3),
            ("vertex a 2\nvertex b 2\nedge a b 2\nedge b a 2\n", 4),
            ("# ok\nnode a 2\n", 2),
            ("vertex a\n", 1),
            ("vertex a-b 2\n", 1),
        ];
        for (text, line) in cases {
            match parse_dyg(text) {
                Err(DygError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn structural_errors_are_collected() {
        let err = parse_dyg("edge a a 2\n").unwrap_err();
        let DygError::Validation(v) = err else { panic!("expected a validation error") };
        assert!(v.0.contains(&Violation::EmptyVertexSet));
        assert!(v.0.len() >= 2);
    }

    #[test]
    fn canonical_form_sorts_and_round_trips() {
        let text = "# title\n\nedge b a 2\nvertex b inf\n  vertex a 3\n";
        let doc = DygDocument::parse(text).unwrap();
        let canonical = doc.to_string();
        assert_eq!(canonical, "# title\nvertex a 3\nvertex b inf\nedge a b 2\n");
        assert_eq!(DygDocument::parse(&canonical).unwrap().to_string(), canonical);
    }
}
