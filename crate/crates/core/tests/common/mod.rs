#![allow(dead_code)]

use std::collections::BTreeSet;

use etrans::{Hypergraph, Row, VertexSet};
use proptest::prelude::*;
use rand::Rng;

pub const EXAMPLE_TEXT: &str = "14 6\n3 4 9\n5 10\n6 7 11 12\n8 13 14\n1 2 3 4 5 6 7 8\n3 4 5 8 12 13\n";

pub fn example() -> Hypergraph {
    Hypergraph::parse(EXAMPLE_TEXT).unwrap()
}

/// Builds a row from per-vertex labels: 0, 1, 2, or 3 + bubble index.
/// Bubbles that end up with a single vertex become ones.
pub fn row_from_labels(labels: &[usize]) -> Row {
    let w = labels.len();
    let part = |l: usize| -> VertexSet {
        labels.iter().enumerate().filter(|(_, &x)| x == l).map(|(i, _)| i + 1).collect()
    };
    let mut ones = part(1);
    let mut bubbles = Vec::new();
    for l in 3..=labels.iter().copied().max().unwrap_or(0).max(3) {
        let b = part(l);
        match b.len() {
            0 => {}
            1 => ones.union_with(&b),
            _ => bubbles.push(b),
        }
    }
    Row::new(w, part(0), ones, part(2), bubbles).unwrap()
}

pub fn row_strategy(max_w: usize) -> impl Strategy<Value = Row> {
    (0..=max_w)
        .prop_flat_map(|w| prop::collection::vec(0usize..7, w))
        .prop_map(|labels| row_from_labels(&labels))
}

pub fn hypergraph_strategy(max_w: usize, max_h: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_w).prop_flat_map(move |w| {
        let edge = prop::collection::btree_set(1..=w, 1..=w);
        prop::collection::vec(edge, 0..=max_h).prop_map(move |edges| Hypergraph::from_edges(w, edges))
    })
}

/// Random hypergraph with `w <= max_w`, `h <= max_h` and edge sizes in `1..=w`.
pub fn random_hypergraph(rng: &mut impl Rng, max_w: usize, max_h: usize) -> Hypergraph {
    let w = rng.gen_range(1..=max_w);
    let h = rng.gen_range(0..=max_h);
    let edges: Vec<Vec<usize>> = (0..h)
        .map(|_| {
            let size = rng.gen_range(1..=w);
            let mut pool: Vec<usize> = (1..=w).collect();
            for i in 0..size {
                let j = rng.gen_range(i..w);
                pool.swap(i, j);
            }
            pool.truncate(size);
            pool
        })
        .collect();
    Hypergraph::from_edges(w, edges)
}

/// All members of `row`, found by testing every subset of `[w]`.
pub fn brute_members(row: &Row) -> BTreeSet<VertexSet> {
    assert!(row.w() <= 20);
    (0..1u64 << row.w()).map(VertexSet::from_mask).filter(|x| row.contains(x)).collect()
}

pub fn brute_family(rows: &[Row]) -> BTreeSet<VertexSet> {
    rows.iter().flat_map(brute_members).collect()
}
