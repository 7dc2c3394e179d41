//! The transversal e-algorithm.
//!
//! Starting from the all-twos row, hyperedges are imposed one at a time.
//! Imposing `H` on a row splits it into pairwise disjoint sons whose union is
//! exactly the members hitting `H`. Sons that cannot contain a model of the
//! pending edges are dropped before they are pushed, so every row on the
//! work stack leads to at least one final row.

use rayon::prelude::*;

use crate::hypergraph::Hypergraph;
use crate::row::Row;
use crate::vertex_set::VertexSet;

/// A row together with its pending-constraint index.
///
/// `pc` is 0-based here: `pc == j` means edges `0..j` are already satisfied
/// by every member of `row` and edge `j` is imposed next.
#[derive(Clone, Debug)]
pub struct WorkItem {
    pub row: Row,
    pub pc: usize,
}

/// Order in which edges are imposed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeOrder {
    /// As given in the hypergraph.
    #[default]
    Input,
    /// Stably sorted by ascending edge size.
    SizeAscending,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Keep only rows that contain a transversal of at least this size.
    pub min_card: Option<usize>,
    pub order: EdgeOrder,
    /// Process independent branches on the rayon pool. Final row order is
    /// then unspecified.
    pub parallel: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Number of rows an edge was imposed on.
    pub impositions: usize,
    /// Most candidate sons produced by a single imposition.
    pub max_candidates: usize,
    /// Most surviving sons of a single imposition (`s_max`).
    pub max_sons: usize,
    /// Highest work stack (sequential) or recursion depth (parallel).
    pub max_stack: usize,
}

impl RunStats {
    fn merge(self, other: RunStats) -> RunStats {
        RunStats {
            impositions: self.impositions + other.impositions,
            max_candidates: self.max_candidates.max(other.max_candidates),
            max_sons: self.max_sons.max(other.max_sons),
            max_stack: self.max_stack.max(other.max_stack),
        }
    }
}

/// Pairwise disjoint rows on `[w]`, typically the final rows of a run.
#[derive(Clone, Debug)]
pub struct RowFamily {
    pub w: usize,
    pub rows: Vec<Row>,
    /// Set when rows were pruned by extra-feasibility; members smaller than
    /// this may be missing.
    pub min_card: Option<usize>,
    pub stats: RunStats,
}

impl RowFamily {
    /// Number of rows `R`.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Splits `row` into disjoint rows whose union is `{X ∈ row : X ∩ edge ≠ ∅}`.
///
/// Returns `[row]` when every member already hits `edge` and `[]` when none
/// does. Otherwise let `B_1, ..., B_m` be the nonempty intersections of
/// `edge` with the bubbles it cuts and `T = edge ∩ twos`. Son `s` zeroes
/// `B_1, ..., B_{s-1}`, turns `B_s` into a bubble and releases the rest of
/// its bubble to twos; the last son zeroes every `B_i` and turns `T` into a
/// bubble, and exists only if `T` is nonempty.
pub fn impose(row: &Row, edge: &VertexSet) -> Vec<Row> {
    if row.ones().intersects(edge) || row.bubbles().iter().any(|b| b.is_subset(edge)) {
        return vec![row.clone()];
    }
    let cut: Vec<VertexSet> = row.bubbles().iter().map(|b| b.intersection(edge)).collect();
    let hit = edge.intersection(row.twos());
    if hit.is_empty() && cut.iter().all(VertexSet::is_empty) {
        return Vec::new();
    }

    let mut sons = Vec::new();
    // `base` has B_1..B_{s-1} zeroed; `index` maps original bubble positions
    // to positions in `base`, which shift when a remainder is promoted.
    let mut base = row.clone();
    let mut index: Vec<Option<usize>> = (0..cut.len()).map(Some).collect();
    for (i, part) in cut.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        let pos = index[i].expect("bubble still present");

        let mut son = base.clone();
        let (_, _, twos, bubbles) = son.parts_mut();
        let bubble = bubbles.remove(pos);
        twos.union_with(&bubble.difference(part));
        son.push_bubble(part.clone());
        sons.push(son.into_canonical());

        if base.zero_in_bubble(pos, part) {
            index[i] = None;
            for slot in index.iter_mut().skip(i + 1).flatten() {
                *slot -= 1;
            }
        }
    }
    if !hit.is_empty() {
        let (_, _, twos, _) = base.parts_mut();
        twos.difference_with(&hit);
        base.push_bubble(hit);
        sons.push(base.into_canonical());
    }
    sons
}

/// True iff no pending edge lies inside `zeros(row)`, i.e. `[w] \ zeros`
/// is a model of the pending edges.
pub fn is_feasible<'a>(row: &Row, pending: impl IntoIterator<Item = &'a VertexSet>) -> bool {
    pending.into_iter().all(|e| !e.is_subset(row.zeros()))
}

/// Feasible and containing a model with at least `k` elements.
pub fn is_extra_feasible<'a>(
    row: &Row,
    pending: impl IntoIterator<Item = &'a VertexSet>,
    k: usize,
) -> bool {
    row.c_max() >= k && is_feasible(row, pending)
}

fn survives(row: &Row, pending: &[VertexSet], min_card: Option<usize>) -> bool {
    match min_card {
        Some(k) => is_extra_feasible(row, pending, k),
        None => is_feasible(row, pending),
    }
}

/// Runs the e-algorithm and returns the final rows, whose disjoint union is
/// `Tr(H)`. With `min_card = Some(k)` every transversal of size at least `k`
/// lies in exactly one final row; smaller ones may be missing.
pub fn run(hypergraph: &Hypergraph, options: RunOptions) -> RowFamily {
    let ordered;
    let h = match options.order {
        EdgeOrder::Input => hypergraph,
        EdgeOrder::SizeAscending => {
            ordered = hypergraph.sorted_by_size();
            &ordered
        }
    };
    let edges = h.edges();
    let root = Row::full(h.w());

    let (rows, stats) = if !survives(&root, edges, options.min_card) {
        (Vec::new(), RunStats::default())
    } else if options.parallel {
        run_parallel(WorkItem { row: root, pc: 0 }, edges, options.min_card, 1)
    } else {
        run_sequential(root, edges, options.min_card)
    };
    RowFamily { w: h.w(), rows, min_card: options.min_card, stats }
}

fn run_sequential(root: Row, edges: &[VertexSet], min_card: Option<usize>) -> (Vec<Row>, RunStats) {
    let mut stats = RunStats::default();
    let mut finals = Vec::new();
    let mut stack = vec![WorkItem { row: root, pc: 0 }];
    stats.max_stack = 1;
    while let Some(WorkItem { row, pc }) = stack.pop() {
        if pc == edges.len() {
            finals.push(row);
            continue;
        }
        let candidates = impose(&row, &edges[pc]);
        stats.impositions += 1;
        stats.max_candidates = stats.max_candidates.max(candidates.len());
        let pending = &edges[pc + 1..];
        let sons: Vec<Row> = candidates.into_iter().filter(|r| survives(r, pending, min_card)).collect();
        stats.max_sons = stats.max_sons.max(sons.len());
        // reversed, so the first son is treated first
        stack.extend(sons.into_iter().rev().map(|row| WorkItem { row, pc: pc + 1 }));
        stats.max_stack = stats.max_stack.max(stack.len());
    }
    (finals, stats)
}

fn run_parallel(
    item: WorkItem,
    edges: &[VertexSet],
    min_card: Option<usize>,
    depth: usize,
) -> (Vec<Row>, RunStats) {
    let mut stats = RunStats { max_stack: depth, ..RunStats::default() };
    if item.pc == edges.len() {
        return (vec![item.row], stats);
    }
    let candidates = impose(&item.row, &edges[item.pc]);
    stats.impositions = 1;
    stats.max_candidates = candidates.len();
    let pending = &edges[item.pc + 1..];
    let sons: Vec<Row> = candidates.into_iter().filter(|r| survives(r, pending, min_card)).collect();
    stats.max_sons = sons.len();
    let (rows, below) = sons
        .into_par_iter()
        .map(|row| run_parallel(WorkItem { row, pc: item.pc + 1 }, edges, min_card, depth + 1))
        .reduce(
            || (Vec::new(), RunStats::default()),
            |(mut rows, a), (more, b)| {
                rows.extend(more);
                (rows, a.merge(b))
            },
        );
    (rows, stats.merge(below))
}
