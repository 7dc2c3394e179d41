use std::collections::VecDeque;

use super::Row;
use crate::vertex_set::{Vertex, VertexSet};

struct Block {
    elems: Vec<Vertex>,
    /// Least number of picks: 0 for the twos block, 1 for a bubble.
    lower: usize,
}

/// Pending work: extend `acc` by `lo..=hi` elements of block `block`.
struct Item {
    acc: VertexSet,
    block: usize,
    lo: usize,
    hi: usize,
}

/// Iterator over the `k`-element members of a row.
///
/// The root item holds the ones and the twos block. Popping an item
/// `(A, B, [i, j])` yields one son `A ∪ B'` per subset `B' ⊆ B` with
/// `i ≤ |B'| ≤ j`, taken by ascending size and lexicographically within a
/// size. Sons are pushed in that order, so the last one is treated first.
/// At the final block the sons are emitted directly, in that order. A son
/// is pushed only when its pick interval for the next block is nonempty,
/// so every pushed item leads to at least one output.
pub struct KSets {
    k: usize,
    blocks: Vec<Block>,
    /// `capacity[b]`: total size of blocks `b..`.
    capacity: Vec<usize>,
    /// `forced[b]`: number of bubbles among blocks `b..`.
    forced: Vec<usize>,
    stack: Vec<Item>,
    ready: VecDeque<VertexSet>,
    max_stack: usize,
}

impl KSets {
    pub(super) fn new(row: &Row, k: usize) -> KSets {
        let mut blocks = Vec::with_capacity(row.bubbles.len() + 1);
        if !row.twos.is_empty() {
            blocks.push(Block { elems: row.twos.to_vec(), lower: 0 });
        }
        blocks.extend(row.bubbles.iter().map(|b| Block { elems: b.to_vec(), lower: 1 }));

        let mut capacity = vec![0; blocks.len() + 1];
        let mut forced = vec![0; blocks.len() + 1];
        for b in (0..blocks.len()).rev() {
            capacity[b] = capacity[b + 1] + blocks[b].elems.len();
            forced[b] = forced[b + 1] + blocks[b].lower;
        }

        let mut gen = KSets {
            k,
            blocks,
            capacity,
            forced,
            stack: Vec::new(),
            ready: VecDeque::new(),
            max_stack: 0,
        };
        if gen.blocks.is_empty() {
            if row.ones.len() == k {
                gen.ready.push_back(row.ones.clone());
            }
        } else if let Some((lo, hi)) = gen.interval(0, row.ones.len()) {
            gen.push(Item { acc: row.ones.clone(), block: 0, lo, hi });
        }
        gen
    }

    /// Admissible pick counts for `block` when `taken` elements are chosen.
    fn interval(&self, block: usize, taken: usize) -> Option<(usize, usize)> {
        let delta = self.k.checked_sub(taken)?;
        let size = self.blocks[block].elems.len();
        let lo = self.blocks[block].lower.max(delta.saturating_sub(self.capacity[block + 1]));
        let hi = size.min(delta.checked_sub(self.forced[block + 1])?);
        (lo <= hi).then_some((lo, hi))
    }

    fn push(&mut self, item: Item) {
        self.stack.push(item);
        self.max_stack = self.max_stack.max(self.stack.len());
    }

    /// Largest stack height reached so far.
    pub fn max_stack(&self) -> usize {
        self.max_stack
    }

    fn split(&mut self, item: Item) {
        let last = item.block + 1 == self.blocks.len();
        let elems = std::mem::take(&mut self.blocks[item.block].elems);
        for size in item.lo..=item.hi {
            for_each_combination(elems.len(), size, |picks| {
                let mut son = item.acc.clone();
                son.extend(picks.iter().map(|&i| elems[i]));
                if last {
                    self.ready.push_back(son);
                } else if let Some((lo, hi)) = self.interval(item.block + 1, son.len()) {
                    self.push(Item { acc: son, block: item.block + 1, lo, hi });
                }
            });
        }
        self.blocks[item.block].elems = elems;
    }
}

impl Iterator for KSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(set) = self.ready.pop_front() {
                return Some(set);
            }
            let item = self.stack.pop()?;
            self.split(item);
        }
    }
}

/// Calls `f` with every `r`-subset of `0..n` as ascending indices, in
/// lexicographic order.
fn for_each_combination(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        f(&idx);
        let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
