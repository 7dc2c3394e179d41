//! Independent ground truth: power-set sweep, inclusion-exclusion counts,
//! and the census of rows of a given length.
//!
//! None of these touch the engine or the row counting code.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::row::Row;
use crate::vertex_set::VertexSet;
use crate::BigCount;

/// Largest `w` accepted by [`brute_transversals`].
pub const BRUTE_MAX_W: usize = 24;
/// Largest `h` accepted by [`inclusion_exclusion_count`].
pub const INCLUSION_EXCLUSION_MAX_H: usize = 20;
/// Largest `w` accepted by [`row_census_brute`].
pub const CENSUS_BRUTE_MAX_W: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} = {value} exceeds the oracle limit {limit}")]
    TooLarge { what: &'static str, value: usize, limit: usize },
}

fn guard(what: &'static str, value: usize, limit: usize) -> Result<(), OracleError> {
    if value > limit {
        Err(OracleError::TooLarge { what, value, limit })
    } else {
        Ok(())
    }
}

fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    h.edges().iter().map(|e| e.to_mask().expect("w <= 64")).collect()
}

/// Every transversal, sorted lexicographically by ascending member list.
pub fn brute_transversals(h: &Hypergraph) -> Result<Vec<VertexSet>, OracleError> {
    guard("w", h.w(), BRUTE_MAX_W)?;
    let masks = edge_masks(h);
    let mut out: Vec<VertexSet> = (0..1u64 << h.w())
        .filter(|x| masks.iter().all(|m| m & x != 0))
        .map(VertexSet::from_mask)
        .collect();
    out.sort();
    Ok(out)
}

/// Number of transversals (or of `k`-element ones), as
/// `Σ_{S ⊆ edges} (−1)^|S| · #{X avoiding ∪S}`.
///
/// Subsets are visited in Gray-code order; per-vertex coverage counters
/// keep `|∪S|` current with `O(w)` work per step.
pub fn inclusion_exclusion_count(h: &Hypergraph, k: Option<usize>) -> Result<BigCount, OracleError> {
    guard("h", h.h(), INCLUSION_EXCLUSION_MAX_H)?;
    let w = h.w();
    // avoiding[u] = number of admissible X inside a free set of size u
    let avoiding: Vec<BigInt> = (0..=w)
        .map(|u| match k {
            None => BigInt::one() << u,
            Some(k) => BigInt::from(binomial(u, k)),
        })
        .collect();
    let edges: Vec<Vec<usize>> = h.edges().iter().map(VertexSet::to_vec).collect();

    let mut coverage = vec![0u32; w + 1];
    let mut covered = 0usize;
    let mut negative = false;
    let mut sum = avoiding[w].clone();
    for step in 1u64..1 << h.h() {
        let flip = step.trailing_zeros() as usize;
        let gray = step ^ (step >> 1);
        let adding = gray & (1 << flip) != 0;
        for &v in &edges[flip] {
            if adding {
                coverage[v] += 1;
                if coverage[v] == 1 {
                    covered += 1;
                }
            } else {
                coverage[v] -= 1;
                if coverage[v] == 0 {
                    covered -= 1;
                }
            }
        }
        negative = !negative;
        let term = &avoiding[w - covered];
        if negative {
            sum -= term;
        } else {
            sum += term;
        }
    }
    Ok(sum.to_biguint().expect("count is non-negative"))
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Bell numbers `Bell(0), ..., Bell(n)` from the Bell triangle.
#[derive(Clone, Debug)]
pub struct BellTable {
    pub values: Vec<BigCount>,
}

impl BellTable {
    pub fn new(n: usize) -> BellTable {
        let mut values = vec![BigUint::one()];
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(row.len() + 1);
            next.push(row.last().expect("nonempty").clone());
            for x in &row {
                let v = next.last().expect("nonempty") + x;
                next.push(v);
            }
            values.push(next[0].clone());
            row = next;
        }
        BellTable { values }
    }

    pub fn get(&self, n: usize) -> &BigCount {
        &self.values[n]
    }
}

/// Number of `{0,1,2,e}`-valued rows of length `w`: `Bell(w+2) − Bell(w+1)`.
pub fn row_census(w: usize) -> BigCount {
    let bell = BellTable::new(w + 2);
    bell.get(w + 2) - bell.get(w + 1)
}

/// Counts rows of length `w` by building each one explicitly: every vertex
/// gets a label 0, 1, 2 or a bubble index (in first-use order), and
/// labellings whose bubbles all have size at least 2 are kept.
pub fn row_census_brute(w: usize) -> Result<BigCount, OracleError> {
    guard("w", w, CENSUS_BRUTE_MAX_W)?;
    let mut rows = HashSet::new();
    let mut labels = Vec::with_capacity(w);
    label_rows(w, &mut labels, 0, &mut rows);
    Ok(BigUint::from(rows.len()))
}

// labels: 0, 1, 2 for the fixed values, 3 + i for bubble i
fn label_rows(w: usize, labels: &mut Vec<usize>, bubbles: usize, out: &mut HashSet<Row>) {
    if labels.len() == w {
        let part = |l: usize| -> VertexSet {
            labels.iter().enumerate().filter(|(_, &x)| x == l).map(|(i, _)| i + 1).collect()
        };
        let bubble_sets: Vec<VertexSet> = (0..bubbles).map(|i| part(3 + i)).collect();
        if let Ok(row) = Row::new(w, part(0), part(1), part(2), bubble_sets) {
            out.insert(row);
        }
        return;
    }
    for label in 0..3 + bubbles + 1 {
        labels.push(label);
        let opened = usize::from(label == 3 + bubbles);
        label_rows(w, labels, bubbles + opened, out);
        labels.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Hypergraph {
        Hypergraph::parse("14 6\n3 4 9\n5 10\n6 7 11 12\n8 13 14\n1 2 3 4 5 6 7 8\n3 4 5 8 12 13\n").unwrap()
    }

    #[test]
    fn brute_force() {
        assert_eq!(brute_transversals(&example()).unwrap().len(), 8784);
        assert_eq!(brute_transversals(&Hypergraph::parse("2 0\n").unwrap()).unwrap().len(), 4);
        assert_eq!(
            brute_transversals(&Hypergraph::from_edges(1, [vec![1]])).unwrap(),
            vec![VertexSet::from([1])]
        );
        let sets = brute_transversals(&Hypergraph::from_edges(3, [vec![1, 3]])).unwrap();
        let lists: Vec<Vec<usize>> = sets.iter().map(VertexSet::to_vec).collect();
        assert_eq!(lists, vec![vec![1], vec![1, 2], vec![1, 2, 3], vec![1, 3], vec![2, 3], vec![3]]);
        let wide = Hypergraph::from_edges(25, [vec![1]]);
        assert!(matches!(brute_transversals(&wide), Err(OracleError::TooLarge { .. })));
    }

    #[test]
    fn inclusion_exclusion() {
        let h = example();
        assert_eq!(inclusion_exclusion_count(&h, None).unwrap(), BigUint::from(8784u32));
        assert_eq!(inclusion_exclusion_count(&h, Some(4)).unwrap(), BigUint::from(66u32));
        assert_eq!(inclusion_exclusion_count(&h, Some(3)).unwrap(), BigUint::zero());
        let empty = Hypergraph::parse("5 0\n").unwrap();
        assert_eq!(inclusion_exclusion_count(&empty, None).unwrap(), BigUint::from(32u32));
        assert_eq!(inclusion_exclusion_count(&empty, Some(2)).unwrap(), BigUint::from(10u32));
        let many = Hypergraph::from_edges(3, vec![vec![1]; 21]);
        assert!(inclusion_exclusion_count(&many, None).is_err());
    }

    #[test]
    fn inclusion_exclusion_matches_brute_per_size() {
        let h = example();
        let sets = brute_transversals(&h).unwrap();
        for k in 0..=14 {
            let brute = sets.iter().filter(|s| s.len() == k).count();
            assert_eq!(inclusion_exclusion_count(&h, Some(k)).unwrap(), BigUint::from(brute), "k = {k}");
        }
    }

    #[test]
    fn bell_numbers() {
        let bell = BellTable::new(7);
        let expected = [1u32, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell.get(n), &BigUint::from(b));
        }
    }

    #[test]
    fn census() {
        assert_eq!(row_census(3), BigUint::from(37u32));
        assert_eq!(row_census(1), BigUint::from(3u32));
        assert_eq!(row_census(0), BigUint::one());
        assert_eq!(row_census(4), BigUint::from(151u32));
        for w in 0..=5 {
            assert_eq!(row_census_brute(w).unwrap(), row_census(w), "w = {w}");
        }
        assert!(row_census_brute(6).is_err());
    }
}
