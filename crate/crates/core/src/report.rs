//! Structured report types with a stable serialization schema.
//!
//! All rationals serialize as exact `"p/q"` strings, weights as arrays of
//! such strings, and dimensions as decimal strings; a report parses back
//! into a value equal to the original.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::sympair::SymmetricPair;
use crate::weights::{serde_integer, Integer, WeightVector};

/// One spinor K-type row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KTypeRow {
    pub word: Vec<usize>,
    pub sign: i64,
    pub highest_weight: WeightVector,
    #[serde(with = "serde_integer")]
    pub dim: Integer,
}

/// The spinor decomposition of a pair, with the dimension identity data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KTypesReport {
    pub space: String,
    pub noncompact_positive_count: usize,
    #[serde(with = "serde_integer")]
    pub total_dim: Integer,
    #[serde(with = "serde_integer")]
    pub expected_total: Integer,
    pub ktypes: Vec<KTypeRow>,
}

/// Computes the spinor K-type report for a pair.
pub fn ktypes_report(sp: &SymmetricPair) -> Result<KTypesReport> {
    let decomposition = sp.spinor_decomposition()?;
    let rows: Vec<KTypeRow> = decomposition
        .into_iter()
        .map(|kt| KTypeRow {
            word: kt.w.word().to_vec(),
            sign: kt.sign,
            highest_weight: kt.highest_weight,
            dim: kt.dim,
        })
        .collect();
    let total: Integer = rows.iter().map(|r| r.dim.clone()).sum();
    let expected = Integer::one() << sp.p_positive().len();
    Ok(KTypesReport {
        space: sp.meta().name.clone(),
        noncompact_positive_count: sp.p_positive().len(),
        total_dim: total,
        expected_total: expected,
        ktypes: rows,
    })
}

/// One row of `catalog list`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogRow {
    pub name: String,
    pub family: crate::sympair::Family,
    pub parameters: Vec<i64>,
    pub description: String,
    pub rank_g: usize,
    pub rank_k: usize,
    pub dim_m: usize,
    pub equal_rank: bool,
    pub hermitian: bool,
    pub dual_spin: bool,
}

pub fn catalog_rows(catalog: &crate::catalog::Catalog) -> Vec<CatalogRow> {
    catalog
        .entries()
        .iter()
        .map(|e| {
            let (hermitian, dual_spin, equal_rank) = match &e.kind {
                crate::catalog::EntryKind::Pair(p) => {
                    (p.meta().hermitian, p.meta().dual_is_spin, true)
                }
                crate::catalog::EntryKind::Stub(s) => (s.hermitian, s.dual_is_spin, false),
            };
            CatalogRow {
                name: e.name.clone(),
                family: e.family,
                parameters: e.parameters.clone(),
                description: e.describe(),
                rank_g: e.rank_g,
                rank_k: e.rank_k,
                dim_m: e.dim_m,
                equal_rank,
                hermitian,
                dual_spin,
            }
        })
        .collect()
}
