//! Per-cardinality counting inside a single row.
//!
//! Counts are built block by block. Ones shift every cardinality by `β`,
//! the twos block convolves with `C(γ, j)` for `j ≥ 0`, and each bubble of
//! size `ε` extends a segment's counts `c` to
//!
//! ```text
//! c'_k = C(ε,1) c_{k-1} + C(ε,2) c_{k-2} + ... + C(ε,ε) c_{k-ε}
//! ```
//!
//! with `c_i = 0` for `i < 0`. Everything is exact integer arithmetic.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::BigCount;

/// `[C(n,0), C(n,1), ..., C(n,n)]`, by the running product
/// `C(n, j+1) = C(n, j) · (n − j) / (j + 1)`, multiplying before dividing.
pub fn binomial_row(n: usize) -> Vec<BigCount> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigUint::one();
    row.push(c.clone());
    for j in 0..n {
        c *= n - j;
        c /= j + 1;
        row.push(c.clone());
    }
    row
}

/// Convolves `counts` with `coeffs[lower..]` (coefficient `j` shifts by `j`),
/// truncated to the length of `counts`.
fn extend(counts: &[BigCount], coeffs: &[BigCount], lower: usize) -> Vec<BigCount> {
    let mut out = vec![BigUint::zero(); counts.len()];
    for (k, slot) in out.iter_mut().enumerate() {
        for j in lower..coeffs.len().min(k + 1) {
            let prev = &counts[k - j];
            if !prev.is_zero() {
                *slot += &coeffs[j] * prev;
            }
        }
    }
    out
}

fn extend_bubble(counts: &[BigCount], size: usize) -> Vec<BigCount> {
    extend(counts, &binomial_row(size), 1)
}

/// Counts for the bubble-only prefixes `(eb_1)`, `(eb_1, eb_2)`, ...
///
/// Entry `s` holds the number of `k`-element sets of the first `s + 1`
/// bubbles for `k = 0..=max_k`.
pub fn bubble_segment_counts(sizes: &[usize], max_k: usize) -> Vec<Vec<BigCount>> {
    let mut counts = vec![BigUint::zero(); max_k + 1];
    counts[0] = BigUint::one();
    sizes
        .iter()
        .map(|&size| {
            counts = extend_bubble(&counts, size);
            counts.clone()
        })
        .collect()
}

/// `Card(r, k)` for `k = 0..=max_k`, for a row with `ones` ones, `twos`
/// twos and the given bubble sizes.
pub(crate) fn card_counts(ones: usize, twos: usize, sizes: &[usize], max_k: usize) -> Vec<BigCount> {
    let mut counts = vec![BigUint::zero(); max_k + 1];
    if ones > max_k {
        return counts;
    }
    counts[ones] = BigUint::one();
    if twos > 0 {
        counts = extend(&counts, &binomial_row(twos), 0);
    }
    for &size in sizes {
        counts = extend_bubble(&counts, size);
    }
    counts
}
