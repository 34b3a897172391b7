use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::ClassifyError;
use crate::graph::{DyerGraph, VertexId};

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterTag {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u64),
}

impl CoxeterTag {
    pub fn rank(self) -> usize {
        match self {
            CoxeterTag::A(n) | CoxeterTag::B(n) | CoxeterTag::D(n) => n,
            CoxeterTag::E6 => 6,
            CoxeterTag::E7 => 7,
            CoxeterTag::E8 => 8,
            CoxeterTag::F4 | CoxeterTag::H4 => 4,
            CoxeterTag::H3 => 3,
            CoxeterTag::I2(_) => 2,
        }
    }

    /// Order of the Coxeter group of this type.
    pub fn group_order(self) -> BigUint {
        let factorial = |n: usize| (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
        match self {
            CoxeterTag::A(n) => factorial(n + 1),
            CoxeterTag::B(n) => (BigUint::one() << n) * factorial(n),
            CoxeterTag::D(n) => (BigUint::one() << (n - 1)) * factorial(n),
            CoxeterTag::E6 => BigUint::from(51_840u32),
            CoxeterTag::E7 => BigUint::from(2_903_040u32),
            CoxeterTag::E8 => BigUint::from(696_729_600u32),
            CoxeterTag::F4 => BigUint::from(1_152u32),
            CoxeterTag::H3 => BigUint::from(120u32),
            CoxeterTag::H4 => BigUint::from(14_400u32),
            CoxeterTag::I2(m) => BigUint::from(2 * m),
        }
    }
}

impl fmt::Display for CoxeterTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterTag::A(n) => write!(f, "A{n}"),
            CoxeterTag::B(n) => write!(f, "B{n}"),
            CoxeterTag::D(n) => write!(f, "D{n}"),
            CoxeterTag::E6 => f.write_str("E6"),
            CoxeterTag::E7 => f.write_str("E7"),
            CoxeterTag::E8 => f.write_str("E8"),
            CoxeterTag::F4 => f.write_str("F4"),
            CoxeterTag::H3 => f.write_str("H3"),
            CoxeterTag::H4 => f.write_str("H4"),
            CoxeterTag::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// One irreducible component of a Coxeter diagram. Vertices of linear
/// diagrams are listed from one end; the special bond (4 or 5) comes first
/// for `B` and `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterComponent {
    pub tag: CoxeterTag,
    pub vertices: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteCoxeterType {
    Finite(Vec<CoxeterComponent>),
    NotFinite { reason: String },
}

impl FiniteCoxeterType {
    pub fn is_finite(&self) -> bool {
        matches!(self, FiniteCoxeterType::Finite(_))
    }

    /// Product of the component orders, when finite.
    pub fn group_order(&self) -> Option<BigUint> {
        match self {
            FiniteCoxeterType::Finite(parts) => {
                Some(parts.iter().fold(BigUint::one(), |acc, c| acc * c.tag.group_order()))
            }
            FiniteCoxeterType::NotFinite { .. } => None,
        }
    }

    /// `A1 x H3` style name.
    pub fn name(&self) -> String {
        match self {
            FiniteCoxeterType::Finite(parts) => {
                parts.iter().map(|c| c.tag.to_string()).collect::<Vec<_>>().join(" x ")
            }
            FiniteCoxeterType::NotFinite { .. } => "not finite".to_owned(),
        }
    }
}

/// Classifies the Coxeter group of a complete Dyer graph with all vertex
/// orders 2.
///
/// Pairs labelled 2 commute and become non-edges of the Coxeter diagram; each
/// connected diagram component is matched against the finite catalogue.
pub fn recognize_finite_coxeter(g: &DyerGraph) -> Result<FiniteCoxeterType, ClassifyError> {
    if !g.orders().iter().all(|f| f.is_two()) {
        return Err(ClassifyError::NotCoxeter);
    }
    if !g.is_complete() {
        return Err(ClassifyError::NotComplete);
    }
    let diagram = g.filter_edges(|m| m.get() >= 3);
    let mut parts = Vec::new();
    for component in diagram.connected_components() {
        match classify_component(&diagram, &component) {
            Ok((tag, order)) => parts.push(CoxeterComponent { tag, vertices: g.names_of(&order) }),
            Err(reason) => return Ok(FiniteCoxeterType::NotFinite { reason }),
        }
    }
    Ok(FiniteCoxeterType::Finite(parts))
}

fn classify_component(diagram: &DyerGraph, vertices: &[usize]) -> Result<(CoxeterTag, Vec<usize>), String> {
    let n = vertices.len();
    let label = |u: usize, v: usize| diagram.label(u, v).map(|m| m.get()).unwrap_or(2);
    match vertices {
        [v] => return Ok((CoxeterTag::A(1), vec![*v])),
        [u, v] => {
            let tag = match label(*u, *v) {
                3 => CoxeterTag::A(2),
                4 => CoxeterTag::B(2),
                m => CoxeterTag::I2(m),
            };
            return Ok((tag, vec![*u, *v]));
        }
        _ => {}
    }
    let edge_count = vertices.iter().map(|&v| diagram.degree(v)).sum::<usize>() / 2;
    if edge_count != n - 1 {
        return Err("diagram contains a cycle".to_owned());
    }
    let labels: Vec<u64> = vertices
        .iter()
        .flat_map(|&u| diagram.neighbors(u).iter().filter(move |(w, _)| *w > u).map(|(_, m)| m.get()))
        .collect();
    if let Some(m) = labels.iter().find(|&&m| m >= 6) {
        return Err(format!("label {m} in a diagram component of rank {n}"));
    }
    let branch: Vec<usize> = vertices.iter().copied().filter(|&v| diagram.degree(v) >= 3).collect();
    if let Some(&center) = branch.first() {
        if branch.len() > 1 || diagram.degree(center) > 3 {
            return Err("diagram has more than one branch point".to_owned());
        }
        if labels.iter().any(|&m| m != 3) {
            return Err("branched diagram with a label other than 3".to_owned());
        }
        let mut arms: Vec<Vec<usize>> = diagram
            .neighbors(center)
            .iter()
            .map(|&(start, _)| walk(diagram, center, start))
            .collect();
        arms.sort_by_key(Vec::len);
        let lengths: Vec<usize> = arms.iter().map(Vec::len).collect();
        let tag = match lengths.as_slice() {
            [1, 1, _] => CoxeterTag::D(n),
            [1, 2, 2] => CoxeterTag::E6,
            [1, 2, 3] => CoxeterTag::E7,
            [1, 2, 4] => CoxeterTag::E8,
            _ => return Err(format!("branched diagram with arms {lengths:?}")),
        };
        // Long arm, centre, then the two short arms.
        let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
        order.push(center);
        order.extend(arms[0].iter().copied());
        order.extend(arms[1].iter().copied());
        return Ok((tag, order));
    }

    // A tree without branch points is a path.
    let end = *vertices.iter().find(|&&v| diagram.degree(v) == 1).expect("path has an end");
    let mut path = vec![end];
    path.extend(walk(diagram, usize::MAX, end).into_iter().skip(1));
    let mut bonds: Vec<u64> = path.windows(2).map(|w| label(w[0], w[1])).collect();
    let specials: Vec<usize> = (0..bonds.len()).filter(|&i| bonds[i] != 3).collect();
    if specials.len() > 1 {
        return Err("linear diagram with more than one bond other than 3".to_owned());
    }
    let Some(&first) = specials.first() else {
        return Ok((CoxeterTag::A(n), path));
    };
    // Orient the path so the special bond sits in the first half.
    let at = if 2 * first >= bonds.len() {
        path.reverse();
        bonds.reverse();
        bonds.len() - 1 - first
    } else {
        first
    };
    match (bonds[at], at, n) {
        (4, 0, _) => Ok((CoxeterTag::B(n), path)),
        (4, 1, 4) => Ok((CoxeterTag::F4, path)),
        (5, 0, 3) => Ok((CoxeterTag::H3, path)),
        (5, 0, 4) => Ok((CoxeterTag::H4, path)),
        (m, _, _) => Err(format!("bond {m} at position {at} in a linear diagram of rank {n}")),
    }
}

/// Follows a path from `start` away from `from` until it ends or branches.
fn walk(diagram: &DyerGraph, from: usize, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    loop {
        let next: Vec<usize> =
            diagram.neighbors(cur).iter().map(|&(w, _)| w).filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] if diagram.degree(cur) <= 2 => {
                out.push(*w);
                prev = cur;
                cur = *w;
            }
            _ => return out,
        }
    }
}
