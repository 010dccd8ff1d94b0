//! Canonical forms under the two equivalences used for boolean matrices:
//! similarity (independent row and column permutations) and conjugation
//! (the same permutation applied to rows and columns).
//!
//! Both are computed by a minimum-image backtracking search, so equal
//! canonical forms characterize equivalent matrices with no external
//! canonicalizer involved. The colored graph encodings of the two relations
//! are also constructed here; they are kept off the hot path and serve as
//! brute-force cross-checks in tests.

use crate::bitgrid::BitGrid;
use crate::boolmat::{is_reduced, BoolMat};
use crate::perm;
use crate::{Error, Result};

/// Stable on-disk form of a canonical matrix: row-major bits packed into
/// bytes, first bit in the most significant position of byte 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    bytes: Vec<u8>,
}

impl CanonicalKey {
    pub fn from_matrix(a: &BoolMat) -> CanonicalKey {
        let n = a.ncols();
        let total = a.nrows() * n;
        let mut bytes = vec![0u8; total.div_ceil(8)];
        let mut pos = 0;
        for i in 0..a.nrows() {
            for j in 0..n {
                if a.get(i, j) {
                    bytes[pos / 8] |= 0x80 >> (pos % 8);
                }
                pos += 1;
            }
        }
        CanonicalKey { bytes }
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// Canonical form for similarity: the minimum, in row-major order with rows
/// compared as binary numbers, over all row and column permutations of `a`.
///
/// Only defined on reduced matrices, where equal outputs characterize
/// J-equivalence in the full boolean matrix monoid; non-reduced input is
/// rejected rather than silently canonicalized.
pub fn canonical_similarity(a: &BoolMat) -> Result<BoolMat> {
    if !is_reduced(a) {
        return Err(Error::NotReduced);
    }
    Ok(min_image_similarity(a))
}

/// The raw minimum-image search, without the reducedness guard. Used
/// internally where inputs are trim by construction.
pub(crate) fn min_image_similarity(a: &BoolMat) -> BoolMat {
    let n = a.ncols();
    assert!(a.is_square());
    if n == 1 {
        return a.clone();
    }

    // Initial candidate: identity column order, rows sorted.
    let mut best: Vec<u64> = a.rows_bits().to_vec();
    best.sort_unstable();

    // Depth-first over which source column lands in each image position,
    // leftmost first. At depth d the high d bits of every row are decided.
    // `prefix[i]` accumulates the image bits of source row i; the rows of an
    // image may be reordered freely, so comparisons against `best` always go
    // through a sorted copy of the prefixes.
    let mut used = vec![false; n];
    let prefix = vec![0u64; a.nrows()];
    search_columns(a, 0, &mut used, &prefix, &mut best);
    BoolMat::from_row_bits(best, n)
}

fn search_columns(a: &BoolMat, depth: usize, used: &mut [bool], prefix: &[u64], best: &mut Vec<u64>) {
    let n = a.ncols();
    if depth == n {
        let mut cand = prefix.to_vec();
        cand.sort_unstable();
        if cand < *best {
            *best = cand;
        }
        return;
    }
    let rem = n - depth - 1;

    // Candidate source columns, most promising (smallest sorted prefix) first.
    let mut cands: Vec<(Vec<u64>, Vec<u64>, usize)> = (0..n)
        .filter(|&c| !used[c])
        .map(|c| {
            let next: Vec<u64> = (0..a.nrows())
                .map(|i| prefix[i] << 1 | u64::from(a.get(i, c)))
                .collect();
            let mut sorted = next.clone();
            sorted.sort_unstable();
            (sorted, next, c)
        })
        .collect();
    cands.sort_unstable();

    for (sorted, next, c) in cands {
        if prune_against_best(&sorted, best, rem) {
            continue;
        }
        used[c] = true;
        search_columns(a, depth + 1, used, &next, best);
        used[c] = false;
    }
}

/// True iff no completion of the branch with sorted prefixes `q` (each row
/// still missing `rem` low bits) can beat `best`. The least completion of
/// row k is `q[k] << rem`; compare that tuple with `best` lexicographically.
fn prune_against_best(q: &[u64], best: &[u64], rem: usize) -> bool {
    for (qk, &bk) in q.iter().zip(best.iter()) {
        let lower = qk << rem;
        if lower > bk {
            return true;
        }
        if lower < bk {
            return false;
        }
    }
    false // lower bound equals best; completions may tie
}

/// Canonical form for conjugation: the minimum of `P^{-1} A P` over all
/// permutation matrices `P`, in row-major order.
pub fn canonical_conjugation(a: &BoolMat) -> BoolMat {
    assert!(a.is_square());
    let n = a.ncols();
    let mut best = a.rows_bits().to_vec();
    for p in perm::all(n) {
        let cand = perm::conjugate(a, &p);
        if cand.rows_bits() < best.as_slice() {
            best = cand.rows_bits().to_vec();
        }
    }
    BoolMat::from_row_bits(best, n)
}

/// A vertex-colored directed graph on at most a few hundred vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    colors: Vec<u8>,
    adj: BitGrid,
}

impl ColoredDigraph {
    pub fn new(colors: Vec<u8>) -> ColoredDigraph {
        let n = colors.len();
        ColoredDigraph {
            colors,
            adj: BitGrid::new(n, n),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn add_edge(&mut self, from: usize, to: usize) {
        self.adj.set(from, to, true);
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.adj.get(from, to)
    }

    pub fn edge_count(&self) -> usize {
        let n = self.vertex_count();
        (0..n)
            .map(|i| (0..n).filter(|&j| self.has_edge(i, j)).count())
            .sum()
    }

    /// Brute-force color-preserving isomorphism test. Exponential; a test
    /// oracle for the canonical forms, not a production path.
    pub fn is_isomorphic_bruteforce(&self, other: &ColoredDigraph) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() {
            return false;
        }
        let mut self_colors = self.colors.clone();
        let mut other_colors = other.colors.clone();
        self_colors.sort_unstable();
        other_colors.sort_unstable();
        if self_colors != other_colors {
            return false;
        }
        'perms: for p in perm::all(n) {
            for v in 0..n {
                if self.colors[v] != other.colors[p[v]] {
                    continue 'perms;
                }
            }
            for u in 0..n {
                for v in 0..n {
                    if self.has_edge(u, v) != other.has_edge(p[u], p[v]) {
                        continue 'perms;
                    }
                }
            }
            return true;
        }
        false
    }
}

/// The two-colored bipartite encoding of a square boolean matrix: vertices
/// `0..n` are rows (color 0), `n..2n` are columns (color 1), with an edge
/// `i -> j + n` exactly when `A_ij = 1`.
pub fn bipartite_graph(a: &BoolMat) -> ColoredDigraph {
    assert!(a.is_square());
    let n = a.ncols();
    let mut colors = vec![0u8; n];
    colors.extend(std::iter::repeat(1u8).take(n));
    let mut g = ColoredDigraph::new(colors);
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) {
                g.add_edge(i, j + n);
            }
        }
    }
    g
}

/// The three-colored encoding for conjugation, defined on reflexive
/// matrices: the bipartite graph plus pendant vertices `2n..3n` of color 2,
/// vertex `i + 2n` pointing at both row `i` and column `i + n`. The pendants
/// force any isomorphism to permute rows and columns identically.
pub fn tripartite_graph(a: &BoolMat) -> Result<ColoredDigraph> {
    if !a.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let n = a.ncols();
    let mut colors = vec![0u8; n];
    colors.extend(std::iter::repeat(1u8).take(n));
    colors.extend(std::iter::repeat(2u8).take(n));
    let mut g = ColoredDigraph::new(colors);
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) {
                g.add_edge(i, j + n);
            }
        }
        g.add_edge(i + 2 * n, i);
        g.add_edge(i + 2 * n, i + n);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolmat::is_trim;

    fn m(text: &str) -> BoolMat {
        BoolMat::parse(text).unwrap()
    }

    fn all_3x3() -> impl Iterator<Item = BoolMat> {
        (0..512u64).map(|bits| {
            BoolMat::from_row_bits(vec![bits >> 6 & 7, bits >> 3 & 7, bits & 7], 3)
        })
    }

    #[test]
    fn similar_standard_form_pair_has_equal_keys() {
        // two 5x5 trim matrices related by swapping rows 1,2 and columns 3,4
        let a = m("00011\n00101\n01100\n10010\n11001");
        let b = m("00011\n00101\n01010\n10100\n11001");
        assert!(is_trim(&a) && is_trim(&b));
        assert_eq!(
            canonical_similarity(&a).unwrap(),
            canonical_similarity(&b).unwrap()
        );
    }

    #[test]
    fn similarity_rejects_non_reduced() {
        // first row is the union of the other two
        assert_eq!(
            canonical_similarity(&m("110\n100\n010")),
            Err(Error::NotReduced)
        );
    }

    #[test]
    fn similarity_is_idempotent_and_invariant() {
        let a = m("1101\n0110\n1011\n0001");
        assert!(is_reduced(&a));
        let key = canonical_similarity(&a).unwrap();
        assert_eq!(canonical_similarity(&key).unwrap(), key);
        for p in perm::all(4) {
            let moved = perm::permute_cols(&perm::permute_rows(&a, &p), &p);
            assert_eq!(canonical_similarity(&moved).unwrap(), key);
        }
    }

    #[test]
    fn identity_minimum_image_is_fixed() {
        for n in 1..=5 {
            let i = BoolMat::identity(n);
            let key = canonical_similarity(&i).unwrap();
            assert_eq!(canonical_similarity(&key).unwrap(), key);
            assert!(key.is_permutation());
            // rows come out ascending as binary numbers
            let rows: Vec<u64> = key.rows_bits().to_vec();
            assert!(rows.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn minimum_image_agrees_with_exhaustive_search() {
        for a in all_3x3().filter(is_reduced) {
            let fast = canonical_similarity(&a).unwrap();
            let mut best: Option<Vec<u64>> = None;
            for pr in perm::all(3) {
                let ra = perm::permute_rows(&a, &pr);
                for pc in perm::all(3) {
                    let cand = perm::permute_cols(&ra, &pc);
                    let rows = cand.rows_bits().to_vec();
                    if best.as_ref().is_none_or(|b| rows < *b) {
                        best = Some(rows);
                    }
                }
            }
            assert_eq!(fast.rows_bits(), best.unwrap().as_slice(), "matrix {a}");
        }
    }

    #[test]
    fn conjugation_identity_and_orbit_invariance() {
        let i = BoolMat::identity(4);
        assert_eq!(canonical_conjugation(&i), i);
        let a = m("10001\n01010\n00111\n10110\n01101");
        let key = canonical_conjugation(&a);
        for p in perm::all(5).into_iter().step_by(7) {
            assert_eq!(canonical_conjugation(&perm::conjugate(&a, &p)), key);
        }
    }

    #[test]
    fn conjugation_separates_column_swapped_pair() {
        // B is A with columns 3 and 5 exchanged; they are similar but not
        // conjugate, so the conjugation keys must differ.
        let a = m("10001\n01010\n00111\n10110\n01101");
        let b = m("10100\n01010\n00111\n10011\n01101");
        assert_ne!(canonical_conjugation(&a), canonical_conjugation(&b));
    }

    #[test]
    fn bipartite_graph_shape() {
        let g = bipartite_graph(&BoolMat::identity(2));
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.colors(), &[0, 0, 1, 1]);
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(1, 3));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn tripartite_graph_shape() {
        let g = tripartite_graph(&BoolMat::identity(2)).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.colors(), &[0, 0, 1, 1, 2, 2]);
        assert!(g.has_edge(4, 0) && g.has_edge(4, 2));
        assert!(g.has_edge(5, 1) && g.has_edge(5, 3));
        assert_eq!(g.edge_count(), 6);
        assert!(tripartite_graph(&m("01\n10")).is_err());
    }

    #[test]
    fn graph_isomorphism_matches_similarity_keys_on_3x3() {
        // sample pairs of reduced 3x3 matrices; the full cross product is too slow
        let reduced: Vec<BoolMat> = all_3x3().filter(is_reduced).collect();
        for (idx, a) in reduced.iter().enumerate().step_by(17) {
            for b in reduced.iter().skip(idx % 5).step_by(23) {
                let same_key =
                    canonical_similarity(a).unwrap() == canonical_similarity(b).unwrap();
                let iso = bipartite_graph(a).is_isomorphic_bruteforce(&bipartite_graph(b));
                assert_eq!(same_key, iso, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn conjugation_keys_match_tripartite_isomorphism() {
        let reflexive: Vec<BoolMat> = all_3x3().filter(|a| a.is_reflexive()).collect();
        assert_eq!(reflexive.len(), 64);
        for a in reflexive.iter().step_by(5) {
            for b in reflexive.iter().step_by(7) {
                let same_key = canonical_conjugation(a) == canonical_conjugation(b);
                let iso = tripartite_graph(a)
                    .unwrap()
                    .is_isomorphic_bruteforce(&tripartite_graph(b).unwrap());
                assert_eq!(same_key, iso, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn key_serialization_packs_big_endian() {
        let a = m("01\n11"); // bits 0111 -> byte 0111_0000
        let key = CanonicalKey::from_matrix(&a);
        assert_eq!(key.bytes(), &[0b0111_0000]);
        let b = m("110\n011\n101"); // 110011101 -> 11001110 1_0000000
        let key = CanonicalKey::from_matrix(&b);
        assert_eq!(key.bytes(), &[0b1100_1110, 0b1000_0000]);
    }
}
