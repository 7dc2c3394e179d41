//! `{0,1,2,e}`-valued rows.
//!
//! A row on `[w]` partitions the vertices into zeros, ones, twos and
//! e-bubbles `eb_1, ..., eb_t` (each of size at least 2). It denotes the
//! family of all `X ⊆ [w]` that avoid the zeros, contain the ones, and meet
//! every bubble.

mod counting;
mod generate;

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::vertex_set::{Vertex, VertexSet};
use crate::BigCount;

pub use counting::{binomial_row, bubble_segment_counts};
pub use generate::KSets;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RowError {
    #[error("vertex {vertex} is assigned twice")]
    Overlap { vertex: Vertex },
    #[error("vertex {vertex} lies outside 1..={w}")]
    OutOfRange { vertex: Vertex, w: usize },
    #[error("vertex {vertex} is not assigned")]
    Unassigned { vertex: Vertex },
    #[error("bubble {index} has {size} element(s); bubbles need at least 2")]
    BubbleTooSmall { index: usize, size: usize },
    #[error("invalid row token {0:?}")]
    BadToken(String),
}

/// A `{0,1,2,e}`-valued row of length `w`.
///
/// Bubbles are kept in a definite order, which [`Row::k_subsets`] follows.
/// Rows produced by [`Row::new`] and by every surgery keep bubbles sorted
/// by least element; [`Row::from_tokens`] keeps the order of the labels.
/// Equality and hashing ignore bubble order.
#[derive(Clone)]
pub struct Row {
    w: usize,
    zeros: VertexSet,
    ones: VertexSet,
    twos: VertexSet,
    bubbles: Vec<VertexSet>,
}

impl Row {
    /// Validates the partition and sorts bubbles by least element.
    pub fn new(
        w: usize,
        zeros: VertexSet,
        ones: VertexSet,
        twos: VertexSet,
        bubbles: Vec<VertexSet>,
    ) -> Result<Self, RowError> {
        let mut row = Row::with_bubble_order(w, zeros, ones, twos, bubbles)?;
        row.canonicalize();
        Ok(row)
    }

    /// Like [`Row::new`] but keeps `bubbles` in the given order.
    pub fn with_bubble_order(
        w: usize,
        zeros: VertexSet,
        ones: VertexSet,
        twos: VertexSet,
        bubbles: Vec<VertexSet>,
    ) -> Result<Self, RowError> {
        for (index, b) in bubbles.iter().enumerate() {
            if b.len() < 2 {
                return Err(RowError::BubbleTooSmall { index, size: b.len() });
            }
        }
        let mut seen = VertexSet::new();
        for part in [&zeros, &ones, &twos].into_iter().chain(&bubbles) {
            if let Some(vertex) = part.iter().find(|&v| v == 0 || v > w) {
                return Err(RowError::OutOfRange { vertex, w });
            }
            if let Some(vertex) = part.intersection(&seen).first() {
                return Err(RowError::Overlap { vertex });
            }
            seen.union_with(part);
        }
        if let Some(vertex) = (1..=w).find(|&v| !seen.contains(v)) {
            return Err(RowError::Unassigned { vertex });
        }
        Ok(Row { w, zeros, ones, twos, bubbles })
    }

    /// The all-twos row, i.e. the power set of `[w]`.
    pub fn full(w: usize) -> Self {
        Row {
            w,
            zeros: VertexSet::new(),
            ones: VertexSet::new(),
            twos: VertexSet::full(w),
            bubbles: Vec::new(),
        }
    }

    /// Parses `w` whitespace-separated tokens from `{0, 1, 2, e, e1, e2, ...}`.
    ///
    /// A bare `e` is its own bubble label. Bubbles are ordered by label:
    /// `e1` before `e2`, and bare `e` after all numbered ones.
    pub fn from_tokens(text: &str) -> Result<Self, RowError> {
        let mut zeros = VertexSet::new();
        let mut ones = VertexSet::new();
        let mut twos = VertexSet::new();
        let mut labelled: Vec<(usize, VertexSet)> = Vec::new();
        let mut w = 0;
        for (i, token) in text.split_whitespace().enumerate() {
            let v = i + 1;
            w = v;
            match token {
                "0" => {
                    zeros.insert(v);
                }
                "1" => {
                    ones.insert(v);
                }
                "2" => {
                    twos.insert(v);
                }
                _ => {
                    let label = match token.strip_prefix('e') {
                        Some("") => usize::MAX,
                        Some(n) => n
                            .parse::<usize>()
                            .map_err(|_| RowError::BadToken(token.to_string()))?,
                        None => return Err(RowError::BadToken(token.to_string())),
                    };
                    match labelled.iter_mut().find(|(l, _)| *l == label) {
                        Some((_, b)) => {
                            b.insert(v);
                        }
                        None => labelled.push((label, VertexSet::from([v]))),
                    }
                }
            }
        }
        labelled.sort_by_key(|(l, _)| *l);
        let bubbles = labelled.into_iter().map(|(_, b)| b).collect();
        Row::with_bubble_order(w, zeros, ones, twos, bubbles)
    }

    /// Tokens `0`, `1`, `2`, `e1`, ... with bubbles numbered by least element.
    pub fn render(&self) -> String {
        let mut order: Vec<&VertexSet> = self.bubbles.iter().collect();
        order.sort_by_key(|b| b.first());
        (1..=self.w)
            .map(|v| {
                if self.zeros.contains(v) {
                    "0".to_string()
                } else if self.ones.contains(v) {
                    "1".to_string()
                } else if self.twos.contains(v) {
                    "2".to_string()
                } else {
                    let i = order.iter().position(|b| b.contains(v)).expect("partition");
                    format!("e{}", i + 1)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn canonicalize(&mut self) {
        self.bubbles.sort_by_key(|b| b.first());
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn zeros(&self) -> &VertexSet {
        &self.zeros
    }

    pub fn ones(&self) -> &VertexSet {
        &self.ones
    }

    pub fn twos(&self) -> &VertexSet {
        &self.twos
    }

    pub fn bubbles(&self) -> &[VertexSet] {
        &self.bubbles
    }

    /// Bubble sizes `ε_1, ..., ε_t` in stored order.
    pub fn bubble_sizes(&self) -> Vec<usize> {
        self.bubbles.iter().map(VertexSet::len).collect()
    }

    /// Membership test: `X ∩ zeros = ∅`, `ones ⊆ X`, and `X` meets every bubble.
    pub fn contains(&self, x: &VertexSet) -> bool {
        x.is_disjoint(&self.zeros)
            && self.ones.is_subset(x)
            && self.bubbles.iter().all(|b| b.intersects(x))
    }

    /// `|r| = 2^γ · Π (2^ε_i − 1)`.
    pub fn size(&self) -> BigCount {
        let mut size = BigUint::one() << self.twos.len();
        for b in &self.bubbles {
            size *= (BigUint::one() << b.len()) - 1u32;
        }
        size
    }

    /// Least cardinality of a member: `β + t`.
    pub fn c_min(&self) -> usize {
        self.ones.len() + self.bubbles.len()
    }

    /// Greatest cardinality of a member: `w − α`.
    pub fn c_max(&self) -> usize {
        self.w - self.zeros.len()
    }

    /// `[w] \ zeros`, the largest member.
    pub fn max_member(&self) -> VertexSet {
        self.ones
            .union(&self.twos)
            .union(&self.bubbles.iter().fold(VertexSet::new(), |acc, b| acc.union(b)))
    }

    /// Number of members of size `c_min`: one pick from each bubble, no twos.
    pub fn min_size_count(&self) -> BigCount {
        self.bubbles.iter().map(|b| BigUint::from(b.len())).product()
    }

    /// `{X ∈ r : v ∈ X}`, or `None` if that family is empty.
    pub fn require_vertex(&self, v: Vertex) -> Option<Row> {
        assert!(v >= 1 && v <= self.w, "vertex {v} outside 1..={}", self.w);
        if self.zeros.contains(v) {
            return None;
        }
        if self.ones.contains(v) {
            return Some(self.clone());
        }
        let mut row = self.clone();
        if row.twos.remove(v) {
            row.ones.insert(v);
            return Some(row);
        }
        let i = row.bubble_of(v);
        let mut bubble = row.bubbles.remove(i);
        bubble.remove(v);
        row.ones.insert(v);
        row.twos.union_with(&bubble);
        Some(row)
    }

    /// `{X ∈ r : v ∉ X}`, or `None` if that family is empty.
    pub fn forbid_vertex(&self, v: Vertex) -> Option<Row> {
        assert!(v >= 1 && v <= self.w, "vertex {v} outside 1..={}", self.w);
        if self.ones.contains(v) {
            return None;
        }
        if self.zeros.contains(v) {
            return Some(self.clone());
        }
        let mut row = self.clone();
        if row.twos.remove(v) {
            row.zeros.insert(v);
            return Some(row);
        }
        let i = row.bubble_of(v);
        row.zero_in_bubble(i, &VertexSet::from([v]));
        row.canonicalize();
        Some(row)
    }

    fn bubble_of(&self, v: Vertex) -> usize {
        self.bubbles.iter().position(|b| b.contains(v)).expect("vertex lies in a bubble")
    }

    /// Moves `part ⊊ eb_i` to zeros. A singleton remainder becomes a one; the
    /// bubble at index `i` is then removed, otherwise it shrinks in place.
    /// Returns true if the bubble was removed.
    pub(crate) fn zero_in_bubble(&mut self, i: usize, part: &VertexSet) -> bool {
        debug_assert!(part.is_subset(&self.bubbles[i]) && part.len() < self.bubbles[i].len());
        self.zeros.union_with(part);
        self.bubbles[i].difference_with(part);
        if self.bubbles[i].len() == 1 {
            let rest = self.bubbles.remove(i);
            self.ones.union_with(&rest);
            true
        } else {
            false
        }
    }

    /// Adds the constraint "at least one of `part`" where `part` currently
    /// consists of free positions: a singleton becomes a one, else a bubble.
    pub(crate) fn push_bubble(&mut self, part: VertexSet) {
        if part.len() == 1 {
            self.ones.union_with(&part);
        } else {
            self.bubbles.push(part);
        }
    }

    pub(crate) fn into_canonical(mut self) -> Row {
        self.canonicalize();
        self
    }

    pub(crate) fn parts_mut(
        &mut self,
    ) -> (&mut VertexSet, &mut VertexSet, &mut VertexSet, &mut Vec<VertexSet>) {
        (&mut self.zeros, &mut self.ones, &mut self.twos, &mut self.bubbles)
    }

    /// Exact counts `Card(r, k)` for `k = 0..=max_k`.
    pub fn card_counts(&self, max_k: usize) -> Vec<BigCount> {
        counting::card_counts(self.ones.len(), self.twos.len(), &self.bubble_sizes(), max_k)
    }

    /// `Card(r, k)`, the number of `k`-element members.
    pub fn card(&self, k: usize) -> BigCount {
        if k < self.c_min() || k > self.c_max() {
            return BigUint::default();
        }
        self.card_counts(k).pop().unwrap_or_default()
    }

    /// All `k`-element members, generated with a LIFO stack (twos block
    /// first, then bubbles in stored order).
    pub fn k_subsets(&self, k: usize) -> KSets {
        KSets::new(self, k)
    }

    /// Every member, by ascending cardinality.
    pub fn members(&self) -> impl Iterator<Item = VertexSet> + '_ {
        (self.c_min()..=self.c_max()).flat_map(move |k| self.k_subsets(k))
    }

    fn sorted_bubbles(&self) -> Vec<&VertexSet> {
        let mut bubbles: Vec<&VertexSet> = self.bubbles.iter().collect();
        bubbles.sort_by_key(|b| b.first());
        bubbles
    }
}

impl PartialEq for Row {
    fn eq(&self, other: &Self) -> bool {
        self.w == other.w
            && self.zeros == other.zeros
            && self.ones == other.ones
            && self.twos == other.twos
            && self.sorted_bubbles() == other.sorted_bubbles()
    }
}

impl Eq for Row {}

impl Hash for Row {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.w.hash(state);
        self.zeros.hash(state);
        self.ones.hash(state);
        self.twos.hash(state);
        self.sorted_bubbles().hash(state);
    }
}

impl fmt::Debug for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Row({})", self.render())
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // final rows r1, r3, r5 of the worked (14,6) example
    const R1: &str = "2 2 e1 e1 e2 e3 e3 e4 2 e2 e3 e3 e4 e4";
    const R3: &str = "2 2 0 0 0 e1 e1 e2 1 1 2 2 e2 2";
    const R5: &str = "2 2 0 0 0 0 0 1 1 1 e1 e1 2 2";
    const R7: &str = "e1 e1 0 0 0 0 0 0 1 1 1 0 1 2";

    fn row(tokens: &str) -> Row {
        Row::from_tokens(tokens).unwrap()
    }

    #[test]
    fn tokens_round_trip_canonically() {
        assert_eq!(row(R1).render(), R1);
        let fig = row("2 e2 e1 2 1 e2 e1 0 e2");
        assert_eq!(fig.bubbles()[0], VertexSet::from([3, 7]));
        assert_eq!(fig.render(), "2 e1 e2 2 1 e1 e2 0 e1");
        assert_eq!(row("e e 2").render(), "e1 e1 2");
        assert_eq!(Row::full(3).render(), "2 2 2");
    }

    #[test]
    fn equality_ignores_bubble_order() {
        assert_eq!(row("e2 e2 e1 e1"), row("e1 e1 e2 e2"));
        assert_ne!(row("e1 e1 2 2"), row("e1 e1 e2 e2"));
    }

    #[test]
    fn rejects_invalid_rows() {
        assert_eq!(row_err("e1 2 2"), RowError::BubbleTooSmall { index: 0, size: 1 });
        assert_eq!(row_err("3 2"), RowError::BadToken("3".into()));
        assert_eq!(row_err("ex 2"), RowError::BadToken("ex".into()));
        let overlap = Row::new(2, VertexSet::from([1]), VertexSet::from([1, 2]), VertexSet::new(), vec![]);
        assert_eq!(overlap.unwrap_err(), RowError::Overlap { vertex: 1 });
        let missing = Row::new(2, VertexSet::from([1]), VertexSet::new(), VertexSet::new(), vec![]);
        assert_eq!(missing.unwrap_err(), RowError::Unassigned { vertex: 2 });
        let outside = Row::new(1, VertexSet::from([1, 2]), VertexSet::new(), VertexSet::new(), vec![]);
        assert_eq!(outside.unwrap_err(), RowError::OutOfRange { vertex: 2, w: 1 });
    }

    fn row_err(tokens: &str) -> RowError {
        Row::from_tokens(tokens).unwrap_err()
    }

    #[test]
    fn membership() {
        assert!(Row::full(4).contains(&VertexSet::new()));
        assert!(Row::full(4).contains(&VertexSet::from([1, 4])));
        assert!(row(R1).contains(&VertexSet::from([3, 5, 6, 8])));
        assert!(!row(R1).contains(&VertexSet::from([3, 5, 6])));
        assert!(!row(R5).contains(&VertexSet::from([3, 8, 9, 10, 11])));
    }

    #[test]
    fn sizes() {
        assert_eq!(Row::full(14).size(), BigUint::from(16384u32));
        assert_eq!(row(R1).size(), BigUint::from(7560u32));
        assert_eq!(row("e1 e1").size(), BigUint::from(3u32));
        assert_eq!(Row::full(200).size(), BigUint::one() << 200);
    }

    #[test]
    fn cardinality_bounds() {
        assert_eq!((row(R5).c_min(), row(R5).c_max()), (4, 9));
        assert_eq!((row(R1).c_min(), row(R1).c_max()), (4, 14));
        assert_eq!((Row::full(7).c_min(), Row::full(7).c_max()), (0, 7));
        assert_eq!(row(R7).max_member(), VertexSet::from([1, 2, 9, 10, 11, 13, 14]));
    }

    #[test]
    fn surgery_reproduces_query_rows() {
        let filter = |r: &Row| r.forbid_vertex(7)?.require_vertex(8)?.require_vertex(9);
        assert_eq!(filter(&row(R1)).unwrap(), row("2 2 e e e2 e3 0 1 1 e2 e3 e3 2 2"));
        assert_eq!(filter(&row(R3)).unwrap(), row("2 2 0 0 0 1 0 1 1 1 2 2 2 2"));
        assert_eq!(filter(&row(R5)).unwrap(), row(R5));
        assert!(filter(&row(R7)).is_none());
    }

    #[test]
    fn surgery_edge_cases() {
        let r = row("0 1 2 e1 e1");
        assert!(r.require_vertex(1).is_none());
        assert_eq!(r.require_vertex(2).unwrap(), r);
        assert_eq!(r.require_vertex(3).unwrap(), row("0 1 1 e1 e1"));
        assert_eq!(r.require_vertex(4).unwrap(), row("0 1 2 1 2"));
        assert!(r.forbid_vertex(2).is_none());
        assert_eq!(r.forbid_vertex(1).unwrap(), r);
        assert_eq!(r.forbid_vertex(4).unwrap(), row("0 1 2 0 1"));
        assert_eq!(row("e e e").forbid_vertex(2).unwrap(), row("e 0 e"));
    }

    #[test]
    fn min_size_count_is_product_of_bubble_sizes() {
        assert_eq!(row("e1 e1 e2 e2 e2 e3 e3 e3 e4 e4 e4 e4").min_size_count(), BigUint::from(72u32));
        assert_eq!(row(R5).min_size_count(), BigUint::from(2u32));
        assert_eq!(Row::full(3).min_size_count(), BigUint::one());
    }
}
