//! Whole-family counting, generation and queries over a [`RowFamily`].
//!
//! Final rows are pairwise disjoint, so counts add up row by row and
//! per-row generation never produces duplicates.

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::engine::RowFamily;
use crate::vertex_set::{Vertex, VertexSet};
use crate::BigCount;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalyticsError {
    #[error("family was pruned to transversals of size >= {min_card}; cannot answer for size {requested}")]
    Pruned { min_card: usize, requested: usize },
    #[error("the hypergraph has no transversals")]
    Infeasible,
    #[error("vertex {0} is both required and forbidden")]
    RequireForbidOverlap(Vertex),
    #[error("vertex {vertex} outside 1..={w}")]
    VertexOutOfRange { vertex: Vertex, w: usize },
}

/// Transversal counts by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// `counts[k]` is `τ_k` for `k = 0..=w`.
    pub counts: Vec<BigCount>,
    pub total: BigCount,
}

fn check_floor(family: &RowFamily, k: usize) -> Result<(), AnalyticsError> {
    match family.min_card {
        Some(min_card) if k < min_card => Err(AnalyticsError::Pruned { min_card, requested: k }),
        _ => Ok(()),
    }
}

/// `N`, the number of transversals.
pub fn count_total(family: &RowFamily) -> Result<BigCount, AnalyticsError> {
    check_floor(family, 0)?;
    Ok(family.rows.iter().map(|r| r.size()).sum())
}

/// `τ_k` for every `k`.
pub fn spectrum(family: &RowFamily) -> Result<Spectrum, AnalyticsError> {
    check_floor(family, 0)?;
    let mut counts = vec![BigUint::zero(); family.w + 1];
    for row in &family.rows {
        for (slot, c) in counts.iter_mut().zip(row.card_counts(family.w)) {
            *slot += c;
        }
    }
    let total = counts.iter().sum();
    Ok(Spectrum { counts, total })
}

/// Number of transversals with at least `k` elements.
pub fn count_at_least(family: &RowFamily, k: usize) -> Result<BigCount, AnalyticsError> {
    check_floor(family, k)?;
    if k > family.w {
        return Ok(BigUint::zero());
    }
    let mut total = BigUint::zero();
    for row in &family.rows {
        let mut n = row.size();
        if k > 0 {
            for c in row.card_counts(k - 1) {
                n -= c;
            }
        }
        total += n;
    }
    Ok(total)
}

/// `(k_min, τ_min)`: the least transversal size and the number of
/// transversals of that size.
pub fn transversal_number(family: &RowFamily) -> Result<(usize, BigCount), AnalyticsError> {
    check_floor(family, 0)?;
    let k_min = family.rows.iter().map(|r| r.c_min()).min().ok_or(AnalyticsError::Infeasible)?;
    let tau_min: BigCount = family
        .rows
        .iter()
        .filter(|r| r.c_min() == k_min)
        .map(|r| {
            let n = r.min_size_count();
            debug_assert_eq!(n, r.card(k_min));
            n
        })
        .sum();
    Ok((k_min, tau_min))
}

/// All `k`-element transversals, row by row.
pub fn generate_all_k(
    family: &RowFamily,
    k: usize,
) -> Result<impl Iterator<Item = VertexSet> + '_, AnalyticsError> {
    check_floor(family, k)?;
    Ok(family.rows.iter().flat_map(move |r| r.k_subsets(k)))
}

/// Restricts every row to members containing `require` and avoiding `forbid`.
/// Rows left empty are dropped.
pub fn filter_family(
    family: &RowFamily,
    require: &VertexSet,
    forbid: &VertexSet,
) -> Result<RowFamily, AnalyticsError> {
    if let Some(v) = require.intersection(forbid).first() {
        return Err(AnalyticsError::RequireForbidOverlap(v));
    }
    if let Some(vertex) = require.union(forbid).iter().find(|&v| v == 0 || v > family.w) {
        return Err(AnalyticsError::VertexOutOfRange { vertex, w: family.w });
    }
    let rows = family
        .rows
        .iter()
        .filter_map(|row| {
            let row = forbid.iter().try_fold(row.clone(), |r, v| r.forbid_vertex(v))?;
            require.iter().try_fold(row, |r, v| r.require_vertex(v))
        })
        .collect();
    Ok(RowFamily { w: family.w, rows, min_card: family.min_card, stats: family.stats })
}
