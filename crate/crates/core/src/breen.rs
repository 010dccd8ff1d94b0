//! Backtracking enumeration of matrices in Breen form.
//!
//! A matrix is in Breen form when it is reduced, its zero rows are at the
//! top and zero columns at the left, its non-zero rows and columns are
//! strictly increasing as binary numbers, the ones of the first non-zero row
//! are right-justified and those of the first non-zero column bottom-
//! justified, and no row has fewer ones than the first non-zero row. Every
//! J-class of the full boolean matrix monoid contains such a matrix, so
//! enumerating the trim ones and deduplicating by canonical form yields a
//! superset of the prime J-class representatives without touching all 2^(n²)
//! matrices.

use crate::boolmat::{is_col_reduced, is_col_trim, is_reduced, BoolMat};
use crate::canonical::min_image_similarity;
use rayon::prelude::*;
use std::collections::HashSet;

/// Which matrices the backtracker visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Variant {
    /// Only trim matrices; new rows may not contain an existing non-zero row.
    Trim,
    /// All reduced matrices; new rows may not be unions of existing rows.
    Reduced,
}

/// A partially built matrix: `m ≤ n` rows appended so far, rows below the
/// leading zero block non-zero and strictly increasing.
#[derive(Debug, Clone)]
pub struct BreenNode {
    rows: Vec<u64>,
    n: usize,
    /// Index of the first non-zero row.
    first_nonzero: usize,
}

impl BreenNode {
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// The seven Breen-form conditions.
pub fn is_breen_form(a: &BoolMat) -> bool {
    if !a.is_square() || !is_reduced(a) {
        return false;
    }
    let rows = a.rows_bits();
    let f = match rows.iter().position(|&r| r != 0) {
        Some(f) => f,
        None => return true, // zero matrix: remaining conditions are vacuous
    };
    // non-zero rows at the bottom, strictly increasing
    if rows[..f].iter().any(|&r| r != 0) {
        return false;
    }
    if rows[f..].windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    // all ones of the first non-zero row on the right
    let k = rows[f].count_ones();
    if rows[f] != (1 << k) - 1 {
        return false;
    }
    // no row has fewer ones than the first non-zero row
    if rows[f..].iter().any(|&r| r.count_ones() < k) {
        return false;
    }
    // columns: zero columns at the left, non-zero strictly increasing,
    // first non-zero column bottom-justified
    let t = a.transpose();
    let cols = t.rows_bits();
    let g = match cols.iter().position(|&c| c != 0) {
        Some(g) => g,
        None => return true,
    };
    if cols[..g].iter().any(|&c| c != 0) {
        return false;
    }
    if cols[g..].windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    let kc = cols[g].count_ones();
    cols[g] == (1 << kc) - 1
}

/// The root nodes: for every row count `m` and every `k ≥ 1`, the `m × n`
/// matrix of `m - 1` zero rows followed by one row of `k` right-justified
/// ones.
fn roots(n: usize) -> Vec<BreenNode> {
    let mut out = Vec::new();
    for m in 1..=n {
        for k in 1..=n {
            let mut rows = vec![0u64; m - 1];
            rows.push((1 << k) - 1);
            out.push(BreenNode {
                rows,
                n,
                first_nonzero: m - 1,
            });
        }
    }
    out
}

/// Expand `root` depth-first with an explicit stack, calling `visit` for
/// every accepted `n × n` leaf.
fn visit_subtree<F: FnMut(&BoolMat)>(root: &BreenNode, variant: Variant, visit: &mut F) {
    let n = root.n;
    let mut rows = root.rows.clone();
    if rows.len() == n {
        try_leaf(&rows, n, variant, visit);
        return;
    }
    let min_ones = rows[root.first_nonzero].count_ones();
    let limit = 1u64 << n;
    // one frame per appended row: the next candidate value to try there
    let mut next: Vec<u64> = vec![*rows.last().unwrap() + 1];
    while let Some(x) = next.last_mut() {
        let mut chosen = None;
        while *x < limit {
            let cand = *x;
            *x += 1;
            if admissible(&rows, cand, min_ones, variant, n) {
                chosen = Some(cand);
                break;
            }
        }
        match chosen {
            None => {
                next.pop();
                rows.pop();
            }
            Some(cand) => {
                rows.push(cand);
                if rows.len() == n {
                    try_leaf(&rows, n, variant, visit);
                    rows.pop();
                } else {
                    next.push(cand + 1);
                }
            }
        }
    }
}

/// The expansion conditions for appending `vec(x)` below the current rows,
/// with the containment rule specialized per variant.
fn admissible(rows: &[u64], x: u64, min_ones: u32, variant: Variant, n: usize) -> bool {
    if x.count_ones() < min_ones {
        return false;
    }
    match variant {
        Variant::Trim => {
            // no existing non-zero row may be contained in the new row
            if rows.iter().any(|&r| r != 0 && r & x == r) {
                return false;
            }
        }
        Variant::Reduced => {
            // the new row may not be a union of existing rows
            let mut below = 0u64;
            for &r in rows {
                if r & x == r {
                    below |= r;
                }
            }
            if below == x {
                return false;
            }
        }
    }
    // if two column prefixes are equal, a 1 in the left column of the new
    // row forces a 1 in the right one; this keeps columns sorted
    let m = rows.len();
    for i in 0..n - 1 {
        if x >> (n - 1 - i) & 1 == 0 {
            continue;
        }
        for j in i + 1..n {
            if x >> (n - 1 - j) & 1 == 1 {
                continue;
            }
            let equal = (0..m)
                .all(|r| rows[r] >> (n - 1 - i) & 1 == rows[r] >> (n - 1 - j) & 1);
            if equal {
                return false;
            }
        }
    }
    true
}

fn try_leaf<F: FnMut(&BoolMat)>(rows: &[u64], n: usize, variant: Variant, visit: &mut F) {
    let a = BoolMat::from_row_bits(rows.to_vec(), n);
    // non-zero columns strictly increasing, plus the column-side rule
    let t = a.transpose();
    let nz: Vec<u64> = t.rows_bits().iter().copied().filter(|&c| c != 0).collect();
    if nz.windows(2).any(|w| w[0] >= w[1]) {
        return;
    }
    let ok = match variant {
        Variant::Trim => is_col_trim(&a),
        Variant::Reduced => is_col_reduced(&a),
    };
    if ok {
        debug_assert!(is_breen_form(&a), "leaf not in Breen form: {a}");
        visit(&a);
    }
}

/// Visit every trim matrix in Breen form of dimension `n`, in depth-first
/// order with candidate rows ascending.
pub fn visit_trim_breen<F: FnMut(&BoolMat)>(n: usize, mut visit: F) {
    assert!((1..=8).contains(&n), "enumeration is desk-scale, n in 1..=8");
    for root in roots(n) {
        visit_subtree(&root, Variant::Trim, &mut visit);
    }
    // the zero matrix is trim and in Breen form but unreachable from the
    // non-zero roots
    visit(&BoolMat::zero(n));
}

/// Visit every matrix in Breen form (reduced, not necessarily trim).
pub fn visit_breen<F: FnMut(&BoolMat)>(n: usize, mut visit: F) {
    assert!((1..=8).contains(&n));
    for root in roots(n) {
        visit_subtree(&root, Variant::Reduced, &mut visit);
    }
    visit(&BoolMat::zero(n));
}

/// All trim matrices in Breen form, materialized. Fine for `n ≤ 6`.
pub fn enumerate_trim_breen(n: usize) -> Vec<BoolMat> {
    let mut out = Vec::new();
    visit_trim_breen(n, |a| out.push(a.clone()));
    out
}

/// Number of matrices in Breen form (trim or not), without materializing.
pub fn count_breen(n: usize) -> usize {
    let mut count = 0usize;
    visit_breen(n, |_| count += 1);
    count
}

/// The deduplicated canonical forms of all trim matrices in Breen form,
/// sorted: one representative per J-class containing a trim matrix. The
/// permutation-class representative is still present (its class is the
/// group of units); the prime-filter drivers remove it, not this function.
///
/// Root subtrees run in parallel and merge by set union, so the result is
/// independent of scheduling.
pub fn canonical_superset(n: usize) -> Vec<BoolMat> {
    assert!((1..=8).contains(&n));
    // enumerate per subtree in parallel, then canonicalize the leaves in
    // evenly sized chunks: canonicalization dominates and subtree sizes
    // are badly skewed
    let leaves: Vec<BoolMat> = roots(n)
        .par_iter()
        .map(|root| {
            let mut local = Vec::new();
            visit_subtree(root, Variant::Trim, &mut |a| local.push(a.clone()));
            local
        })
        .reduce(Vec::new, |mut acc, mut local| {
            acc.append(&mut local);
            acc
        });
    let mut set: HashSet<BoolMat> = leaves
        .par_chunks(256)
        .map(|chunk| chunk.iter().map(min_image_similarity).collect::<HashSet<_>>())
        .reduce(HashSet::new, |mut acc, mut local| {
            if acc.len() < local.len() {
                std::mem::swap(&mut acc, &mut local);
            }
            acc.extend(local);
            acc
        });
    set.insert(BoolMat::zero(n));
    let mut out: Vec<BoolMat> = set.into_iter().collect();
    out.sort_unstable();
    out
}

/// Trim reflexive matrices in reflexive Breen form: ones of the first row
/// left-justified, no row with fewer ones than the first, and every used
/// column prefix-covered (a 1 in column j of row i forces, for each l ≤ j,
/// a 1 in some column l of rows 1..=i). Deduplication by conjugation happens
/// downstream.
pub fn enumerate_reflexive_breen(n: usize) -> Vec<BoolMat> {
    assert!((1..=8).contains(&n));
    let mut out = Vec::new();
    for k in 1..=n {
        // left-justified k ones; position 0 is the diagonal 1 of row 0
        let first: u64 = ((1 << k) - 1) << (n - k);
        let mut rows = vec![first];
        reflexive_search(&mut rows, n, k as u32, &mut out);
    }
    out
}

fn reflexive_search(rows: &mut Vec<u64>, n: usize, min_ones: u32, out: &mut Vec<BoolMat>) {
    let i = rows.len();
    if i == n {
        let a = BoolMat::from_row_bits(rows.clone(), n);
        if is_col_trim(&a) {
            out.push(a);
        }
        return;
    }
    let used: u64 = rows.iter().fold(0, |acc, &r| acc | r);
    let diag: u64 = 1 << (n - 1 - i);
    for x in 0..(1u64 << n) {
        if x & diag == 0 || x.count_ones() < min_ones {
            continue;
        }
        // row-trim against every previous row (all rows here are non-zero)
        if rows.iter().any(|&r| r & x == r || r & x == x) {
            continue;
        }
        // prefix coverage: with the new row, the used columns must form a
        // left-justified block at least as wide as the new row demands
        let all = used | x;
        let rightmost = n - 1 - all.trailing_zeros().min(n as u32 - 1) as usize;
        let width = rightmost + 1;
        let needed: u64 = ((1 << width) - 1) << (n - width);
        if all & needed != needed {
            continue;
        }
        rows.push(x);
        reflexive_search(rows, n, min_ones, out);
        rows.pop();
    }
}
