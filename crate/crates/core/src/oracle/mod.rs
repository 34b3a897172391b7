//! Literal group computation on presentations of Dyer groups.
//!
//! Used to cross-check the classifiers: the abelianization by Smith normal
//! form, the commutator subgroup by Reidemeister–Schreier rewriting over the
//! abelianization's coset table, and finite groups by Todd–Coxeter
//! enumeration followed by an explicit derived series.

mod coset;
mod finite;
mod presentation;
mod schreier;
mod snf;
mod tietze;
mod todd_coxeter;

pub use coset::{derived_subgroup_coset_table, CosetTable, MAX_DERIVED_INDEX};
pub use finite::{derived_length_finite, finite_group_table, FiniteGroupTable, MAX_TABLE_ORDER};
pub use presentation::{
    alternating_word, build_presentation, cyclic_reduce, free_reduce, inverse_word, GroupPresentation, Letter, Word,
};
pub use schreier::reidemeister_schreier;
pub use snf::{abelianize_snf, relation_matrix, smith_diagonal, triangular_basis, AbelianInvariants, IntMatrix};
pub use tietze::{is_evidently_abelian, simplify};
pub use todd_coxeter::{todd_coxeter, DEFAULT_MAX_COSETS};

use crate::error::OracleError;
use crate::graph::DyerGraph;

/// The commutator subgroup of a group with finite abelianization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSubgroup {
    /// Index `|G : G′|`, the order of the abelianization.
    pub index: usize,
    pub presentation: GroupPresentation,
    pub abelianization: AbelianInvariants,
}

/// Presents `G′` by rewriting over the abelianization's coset table.
pub fn derived_subgroup(p: &GroupPresentation) -> Result<DerivedSubgroup, OracleError> {
    let table = derived_subgroup_coset_table(p)?;
    let presentation = reidemeister_schreier(p, &table)?;
    let abelianization = abelianize_snf(&presentation);
    Ok(DerivedSubgroup { index: table.len(), presentation, abelianization })
}

/// Decides quasi-perfectness literally: `D_Γ` is quasi-perfect iff `G′` is
/// perfect, i.e. iff the abelianization of `G′` is trivial.
pub fn oracle_quasi_perfect(g: &DyerGraph) -> Result<bool, OracleError> {
    if g.orders().iter().any(|f| !f.is_finite()) {
        return Err(OracleError::InfiniteAbelianization);
    }
    Ok(derived_subgroup(&build_presentation(g))?.abelianization.is_trivial())
}

/// Enumerates `D_Γ` and returns its multiplication table.
pub fn finite_group(g: &DyerGraph, max_cosets: usize) -> Result<FiniteGroupTable, OracleError> {
    finite_group_table(&todd_coxeter(&build_presentation(g), max_cosets)?)
}
