//! Identifying the prime J-class representatives inside a canonical
//! superset, by row-space maximality or by augmented-graph embeddings, plus
//! the J-order test via row space embeddings.
//!
//! A non-unit matrix is prime when every factorization has a unit factor;
//! the primes sit immediately below the group of units together with the
//! elementary class, and are exactly the non-elementary matrices whose row
//! space is maximal among non-unit row spaces. Both filters compute that
//! maximality, one by materializing all permuted row spaces and one by a
//! guided search for a coordinate embedding.

use crate::boolmat::{is_hall, row_space, subset_sorted, BoolMat, RowSpace};
use crate::canonical::ColoredDigraph;
use crate::perm;
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::HashMap;

/// The elementary matrix with its extra 1 in position (2, 1).
pub fn elementary(n: usize) -> BoolMat {
    assert!(n >= 2);
    let mut e = BoolMat::identity(n);
    e.set(1, 0, true);
    e
}

/// Any matrix similar to the elementary matrix: a permutation matrix plus
/// one extra 1, equivalently n+1 ones and Hall.
pub fn is_elementary(a: &BoolMat) -> bool {
    a.is_square() && a.count_ones() as usize == a.ncols() + 1 && is_hall(a)
}

/// The row space of `a` together with the coordinate vertices `c_1..c_n`:
/// space vertices carry color 0 and are joined along containment (loops
/// included), each space vertex points at the coordinates it covers, and
/// the c-vertices (color 1) have no out-edges.
#[derive(Debug, Clone)]
pub struct AugmentedGraph {
    n: usize,
    /// Sorted space elements, including the zero vector.
    vectors: Vec<u64>,
    base: ColoredDigraph,
    vector_index: HashMap<u64, usize>,
}

impl AugmentedGraph {
    pub fn new(a: &BoolMat) -> AugmentedGraph {
        Self::from_space(&row_space(a), a.ncols())
    }

    pub fn from_space(space: &RowSpace, n: usize) -> AugmentedGraph {
        let vectors = space.elements().to_vec();
        let m = vectors.len();
        let mut colors = vec![0u8; m];
        colors.extend(std::iter::repeat(1u8).take(n));
        let mut base = ColoredDigraph::new(colors);
        for (i, &v) in vectors.iter().enumerate() {
            for (j, &w) in vectors.iter().enumerate() {
                if v & w == v {
                    base.add_edge(i, j);
                }
            }
            for c in 0..n {
                if v >> (n - 1 - c) & 1 == 1 {
                    base.add_edge(i, m + c);
                }
            }
        }
        let vector_index = vectors.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        AugmentedGraph {
            n,
            vectors,
            base,
            vector_index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[u64] {
        &self.vectors
    }

    pub fn base(&self) -> &ColoredDigraph {
        &self.base
    }

    pub fn vertex_of(&self, bits: u64) -> Option<usize> {
        self.vector_index.get(&bits).copied()
    }

    fn popcount_histogram(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.n + 1];
        for &v in &self.vectors {
            h[v.count_ones() as usize] += 1;
        }
        h
    }
}

/// True iff an injection of `k`'s space vertices into `l`'s exists that
/// preserves edges and non-edges and permutes the coordinate vertices —
/// equivalently, iff some column permutation carries every element of
/// `k`'s space into `l`'s space.
///
/// The search assigns images to the union-irreducible basis of `k` in
/// decreasing popcount order (an embedding preserves the number of ones),
/// narrowing a column-compatibility relation as it goes; a full assignment
/// is accepted if every forced union lands in `l`'s space and the relation
/// still admits a perfect matching.
pub fn embedding_exists(k: &AugmentedGraph, l: &AugmentedGraph) -> bool {
    if k.n != l.n {
        return false;
    }
    let n = k.n;
    if k.vectors.len() > l.vectors.len() {
        return false;
    }
    let (hk, hl) = (k.popcount_histogram(), l.popcount_histogram());
    if hk.iter().zip(&hl).any(|(a, b)| a > b) {
        return false;
    }

    // basis of k's space, largest popcount first
    let mut basis: Vec<u64> = RowSpace::span(&k.vectors, n).basis().to_vec();
    basis.sort_by_key(|v| std::cmp::Reverse(v.count_ones()));
    if basis.is_empty() {
        return true; // zero space embeds anywhere
    }

    // candidates per basis vector: same popcount
    let candidates: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            l.vectors
                .iter()
                .copied()
                .filter(|w| w.count_ones() == b.count_ones())
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return false;
    }

    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let mut allowed = vec![full; n];
    let mut images = Vec::with_capacity(basis.len());
    assign(k, l, &basis, &candidates, 0, &mut allowed, &mut images)
}

fn assign(
    k: &AugmentedGraph,
    l: &AugmentedGraph,
    basis: &[u64],
    candidates: &[Vec<u64>],
    depth: usize,
    allowed: &mut Vec<u64>,
    images: &mut Vec<u64>,
) -> bool {
    let n = k.n;
    if depth == basis.len() {
        // forced images of every space element must land in l's space
        for &v in &k.vectors {
            let mut image = 0u64;
            for (b, w) in basis.iter().zip(images.iter()) {
                if b & v == *b {
                    image |= w;
                }
            }
            if l.vertex_of(image).is_none() {
                return false;
            }
        }
        return has_perfect_matching(allowed, n);
    }
    let b = basis[depth];
    for &w in &candidates[depth] {
        let saved = allowed.clone();
        let mut ok = true;
        for (c, slot) in allowed.iter_mut().enumerate() {
            let in_b = b >> (n - 1 - c) & 1 == 1;
            let next = if in_b { *slot & w } else { *slot & !w };
            if next == 0 {
                ok = false;
                break;
            }
            *slot = next;
        }
        if ok {
            images.push(w);
            if assign(k, l, basis, candidates, depth + 1, allowed, images) {
                return true;
            }
            images.pop();
        }
        *allowed = saved;
    }
    false
}

/// Kuhn's augmenting paths over the column-compatibility masks.
fn has_perfect_matching(allowed: &[u64], n: usize) -> bool {
    let mut matched: Vec<Option<usize>> = vec![None; n];

    fn augment(
        allowed: &[u64],
        n: usize,
        row: usize,
        visited: &mut [bool],
        matched: &mut [Option<usize>],
    ) -> bool {
        for col in 0..n {
            if allowed[row] >> (n - 1 - col) & 1 == 1 && !visited[col] {
                visited[col] = true;
                match matched[col] {
                    None => {
                        matched[col] = Some(row);
                        return true;
                    }
                    Some(other) => {
                        if augment(allowed, n, other, visited, matched) {
                            matched[col] = Some(row);
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    for row in 0..n {
        let mut visited = vec![false; n];
        if !augment(allowed, n, row, &mut visited, &mut matched) {
            return false;
        }
    }
    true
}

/// Statistics from the row-space filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowSpaceFilterStats {
    /// Row spaces computed while building X (one per input matrix and
    /// column permutation).
    pub spaces_computed: usize,
    /// Distinct row spaces in X after deduplication.
    pub distinct_spaces: usize,
}

/// Filter a canonical superset down to the prime representatives by row
/// space maximality: A survives iff no other input's (or the elementary
/// matrix's) permuted row space properly contains Λ(A).
///
/// `q` must consist of canonical representatives of distinct J-classes and
/// contain no permutation matrices.
pub fn filter_by_row_spaces(
    q: &[BoolMat],
    n: usize,
) -> Result<(Vec<BoolMat>, RowSpaceFilterStats)> {
    if q.iter().any(|a| a.is_permutation()) {
        return Err(Error::PermutationInFilterInput);
    }
    let mut sources: Vec<BoolMat> = q.to_vec();
    if n >= 2 {
        sources.push(elementary(n));
    }
    let perms = perm::all(n);

    // X: every permuted row space, tagged with its source index
    let per_source: Vec<Vec<Vec<u64>>> = sources
        .par_iter()
        .map(|a| {
            perms
                .iter()
                .map(|p| row_space(&perm::permute_cols(a, p)).elements().to_vec())
                .collect()
        })
        .collect();
    let spaces_computed = sources.len() * perms.len();
    let mut x: HashMap<Vec<u64>, usize> = HashMap::new();
    for (src, spaces) in per_source.into_iter().enumerate() {
        for s in spaces {
            x.entry(s).or_insert(src);
        }
    }
    let stats = RowSpaceFilterStats {
        spaces_computed,
        distinct_spaces: x.len(),
    };

    // bucket X by cardinality so each A only scans strictly larger spaces
    let mut by_len: Vec<(&Vec<u64>, usize)> = x.iter().map(|(s, &src)| (s, src)).collect();
    by_len.sort_by_key(|(s, _)| s.len());

    let survivors: Vec<BoolMat> = q
        .par_iter()
        .enumerate()
        .filter(|(idx, a)| {
            let mine = row_space(a).elements().to_vec();
            let start = by_len.partition_point(|(s, _)| s.len() <= mine.len());
            !by_len[start..]
                .iter()
                .any(|(s, src)| *src != *idx && subset_sorted(&mine, s))
        })
        .map(|(_, a)| a.clone())
        .filter(|a| !is_elementary(a))
        .collect();
    Ok((survivors, stats))
}

/// Filter a canonical superset down to the prime representatives by
/// augmented-graph embeddings; must return the same set as
/// [`filter_by_row_spaces`].
pub fn filter_by_embeddings(q: &[BoolMat], n: usize) -> Result<Vec<BoolMat>> {
    if q.iter().any(|a| a.is_permutation()) {
        return Err(Error::PermutationInFilterInput);
    }
    let mut sources: Vec<BoolMat> = q.to_vec();
    if n >= 2 {
        sources.push(elementary(n));
    }
    let graphs: Vec<AugmentedGraph> = sources.par_iter().map(AugmentedGraph::new).collect();
    // a dominating space is strictly larger: an equal-size embedding would
    // force space equality up to permutation, impossible between distinct
    // canonical representatives
    let survivors: Vec<BoolMat> = q
        .par_iter()
        .enumerate()
        .filter(|(idx, _)| {
            let mine = graphs[*idx].vectors().len();
            !graphs
                .iter()
                .enumerate()
                .any(|(other, l)| {
                    other != *idx
                        && l.vectors().len() > mine
                        && embedding_exists(&graphs[*idx], l)
                })
        })
        .map(|(_, a)| a.clone())
        .filter(|a| !is_elementary(a))
        .collect();
    Ok(survivors)
}

/// Embed a prime of dimension n-1 into dimension n: zero row at the bottom,
/// zero column at the right, then a 1 in the new corner. The result is
/// prime in the larger monoid.
pub fn extend_prime(a: &BoolMat) -> BoolMat {
    let n = a.ncols() + 1;
    let mut rows: Vec<u64> = a.rows_bits().iter().map(|&r| r << 1).collect();
    rows.push(1);
    BoolMat::from_row_bits(rows, n)
}

/// J-order test: `J_A ≤ J_B` iff an injection Λ(A) → Λ(B) exists that
/// respects containment and non-containment (no coordinate constraint).
pub fn j_leq(a: &BoolMat, b: &BoolMat) -> bool {
    let sa = row_space(a);
    let sb = row_space(b);
    if sa.len() > sb.len() {
        return false;
    }
    // the inclusion map witnesses set containment directly
    if sa.subset_of(&sb) {
        return true;
    }
    order_embedding_exists(sa.elements(), sb.elements())
}

/// Backtracking search for an order embedding between two union-closed
/// vector sets, with down-set/up-set cardinality pruning.
fn order_embedding_exists(small: &[u64], large: &[u64]) -> bool {
    let nl = large.len();
    let downs_small: Vec<usize> = small
        .iter()
        .map(|&v| small.iter().filter(|&&w| w & v == w).count())
        .collect();
    let ups_small: Vec<usize> = small
        .iter()
        .map(|&v| small.iter().filter(|&&w| v & w == v).count())
        .collect();
    let downs_large: Vec<usize> = large
        .iter()
        .map(|&v| large.iter().filter(|&&w| w & v == w).count())
        .collect();
    let ups_large: Vec<usize> = large
        .iter()
        .map(|&v| large.iter().filter(|&&w| v & w == v).count())
        .collect();

    fn rec(
        small: &[u64],
        large: &[u64],
        downs_small: &[usize],
        ups_small: &[usize],
        downs_large: &[usize],
        ups_large: &[usize],
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let depth = image.len();
        if depth == small.len() {
            return true;
        }
        let v = small[depth];
        for cand in 0..large.len() {
            if used[cand]
                || downs_large[cand] < downs_small[depth]
                || ups_large[cand] < ups_small[depth]
            {
                continue;
            }
            let w = large[cand];
            let consistent = (0..depth).all(|j| {
                let u = small[j];
                let fu = large[image[j]];
                (u & v == u) == (fu & w == fu) && (v & u == v) == (w & fu == w)
            });
            if !consistent {
                continue;
            }
            image.push(cand);
            used[cand] = true;
            if rec(
                small, large, downs_small, ups_small, downs_large, ups_large, image, used,
            ) {
                return true;
            }
            used[cand] = false;
            image.pop();
        }
        false
    }

    let mut image: Vec<usize> = Vec::with_capacity(small.len());
    let mut used = vec![false; nl];
    rec(
        small,
        large,
        &downs_small,
        &ups_small,
        &downs_large,
        &ups_large,
        &mut image,
        &mut used,
    )
}

/// Which filter implementation to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterMethod {
    RowSpaces,
    Embeddings,
}

/// Prefilter settings: discard candidates dominated by extended primes
/// before the main filter. Affects runtime only, never the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefilterConfig {
    /// How many extended primes to use, picked by largest row space.
    pub extended: usize,
}

impl Default for PrefilterConfig {
    fn default() -> Self {
        PrefilterConfig { extended: 13 }
    }
}

/// Outcome of the full prime-representative pipeline.
#[derive(Debug, Clone)]
pub struct PrimeOutcome {
    pub primes: Vec<BoolMat>,
    pub superset_size: usize,
    pub stats: Option<RowSpaceFilterStats>,
}

/// The full pipeline: enumerate the canonical superset, drop the
/// permutation-class representative, optionally prefilter by extended
/// primes, and run the chosen filter.
pub fn prime_representatives(
    n: usize,
    method: FilterMethod,
    prefilter: Option<PrefilterConfig>,
) -> Result<PrimeOutcome> {
    assert!((2..=8).contains(&n));
    let superset = crate::breen::canonical_superset(n);
    let superset_size = superset.len();
    let mut q: Vec<BoolMat> = superset
        .into_iter()
        .filter(|a| !a.is_permutation())
        .collect();

    if let Some(cfg) = prefilter {
        if n >= 3 && cfg.extended > 0 {
            let smaller = prime_representatives(n - 1, FilterMethod::Embeddings, None)?;
            let mut extended: Vec<BoolMat> = smaller.primes.iter().map(extend_prime).collect();
            extended.sort_by_key(|e| std::cmp::Reverse(row_space(e).len()));
            extended.truncate(cfg.extended);
            let ext_graphs: Vec<(usize, AugmentedGraph)> = extended
                .iter()
                .map(|e| (row_space(e).len(), AugmentedGraph::new(e)))
                .collect();
            q.retain(|a| {
                let ka = AugmentedGraph::new(a);
                // a proper containment needs a strictly smaller space; an
                // equal-size embedding would mean J-equivalence, and the
                // extended prime's own representative must survive
                !ext_graphs
                    .iter()
                    .any(|(len, l)| ka.vectors().len() < *len && embedding_exists(&ka, l))
            });
        }
    }

    match method {
        FilterMethod::RowSpaces => {
            let (primes, stats) = filter_by_row_spaces(&q, n)?;
            Ok(PrimeOutcome {
                primes,
                superset_size,
                stats: Some(stats),
            })
        }
        FilterMethod::Embeddings => Ok(PrimeOutcome {
            primes: filter_by_embeddings(&q, n)?,
            superset_size,
            stats: None,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolmat::is_trim;

    fn m(text: &str) -> BoolMat {
        BoolMat::parse(text).unwrap()
    }

    fn all_3x3() -> impl Iterator<Item = BoolMat> {
        (0..512u64)
            .map(|bits| BoolMat::from_row_bits(vec![bits >> 6 & 7, bits >> 3 & 7, bits & 7], 3))
    }

    #[test]
    fn elementary_recognition() {
        assert!(is_elementary(&elementary(3)));
        assert!(is_elementary(&m("011\n010\n100"))); // permutation plus one
        assert!(!is_elementary(&BoolMat::identity(3)));
        assert!(!is_elementary(&m("110\n110\n001"))); // n+1 ones but not Hall
    }

    #[test]
    fn augmented_graph_shapes() {
        let g = AugmentedGraph::new(&BoolMat::zero(3));
        assert_eq!(g.vectors(), &[0]);
        assert_eq!(g.base().vertex_count(), 1 + 3);
        // zero vector: loop only, no coordinate edges
        assert_eq!(g.base().edge_count(), 1);

        let g = AugmentedGraph::new(&BoolMat::identity(3));
        assert_eq!(g.base().vertex_count(), 8 + 3);
        // edge count matches a direct reconstruction from the space
        let vs = g.vectors().to_vec();
        let mut edges = 0;
        for &v in &vs {
            for &w in &vs {
                if v & w == v {
                    edges += 1;
                }
            }
            edges += v.count_ones() as usize;
        }
        assert_eq!(g.base().edge_count(), edges);
    }

    #[test]
    fn embedding_matches_permuted_containment_on_3x3() {
        let a = m("110\n101\n011");
        let g = AugmentedGraph::new(&a);
        assert!(embedding_exists(&g, &g));

        let mats: Vec<BoolMat> = all_3x3().step_by(7).collect();
        let perms = perm::all(3);
        for a in &mats {
            let ka = AugmentedGraph::new(a);
            let sa = row_space(a);
            for b in &mats {
                let lb = AugmentedGraph::new(b);
                let brute = perms.iter().any(|p| {
                    let bp = perm::permute_cols(b, p);
                    sa.subset_of(&row_space(&bp))
                });
                assert_eq!(embedding_exists(&ka, &lb), brute, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn filters_reject_permutations() {
        let q = vec![BoolMat::identity(3)];
        assert!(matches!(
            filter_by_row_spaces(&q, 3),
            Err(Error::PermutationInFilterInput)
        ));
        assert!(matches!(
            filter_by_embeddings(&q, 3),
            Err(Error::PermutationInFilterInput)
        ));
    }

    #[test]
    fn prime_counts_small() {
        // rank(M_n(B)) - 4 primes: 1, 3, 9 for n = 3, 4, 5
        for (n, expected) in [(3usize, 1usize), (4, 3), (5, 9)] {
            let rs = prime_representatives(n, FilterMethod::RowSpaces, None).unwrap();
            assert_eq!(rs.primes.len(), expected, "row-space filter at n={n}");
            let em = prime_representatives(n, FilterMethod::Embeddings, None).unwrap();
            let mut a = rs.primes.clone();
            let mut b = em.primes.clone();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b, "filters disagree at n={n}");
        }
    }

    #[test]
    fn no_primes_below_three() {
        let out = prime_representatives(2, FilterMethod::RowSpaces, None).unwrap();
        assert!(out.primes.is_empty());
    }

    #[test]
    fn every_prime_is_trim_and_hall() {
        for n in 3..=5 {
            let out = prime_representatives(n, FilterMethod::Embeddings, None).unwrap();
            for p in &out.primes {
                assert!(is_trim(p), "prime not trim: {p}");
                assert!(is_hall(p), "prime not Hall: {p}");
                assert!(!is_elementary(p));
            }
        }
    }

    #[test]
    fn primes_mutually_non_embeddable() {
        let out = prime_representatives(5, FilterMethod::Embeddings, None).unwrap();
        let graphs: Vec<AugmentedGraph> = out.primes.iter().map(AugmentedGraph::new).collect();
        for (i, k) in graphs.iter().enumerate() {
            for (j, l) in graphs.iter().enumerate() {
                if i != j {
                    assert!(!embedding_exists(k, l));
                }
            }
        }
    }

    #[test]
    fn extend_prime_block_structure_and_survival() {
        let out3 = prime_representatives(3, FilterMethod::RowSpaces, None).unwrap();
        assert_eq!(out3.primes.len(), 1);
        let ext = extend_prime(&out3.primes[0]);
        assert_eq!(ext.ncols(), 4);
        assert_eq!(ext.row_bits(3), 1); // last row = e_n
        assert_eq!(ext.col(3).bits(), 1); // last column = e_n
        // the extension is J-equivalent to one of the n=4 primes
        let out4 = prime_representatives(4, FilterMethod::RowSpaces, None).unwrap();
        let key = crate::canonical::canonical_similarity(&ext).unwrap();
        assert!(out4
            .primes
            .iter()
            .any(|p| crate::canonical::canonical_similarity(p).unwrap() == key));
    }

    #[test]
    fn prefilter_never_changes_output() {
        for n in 3..=5 {
            for method in [FilterMethod::RowSpaces, FilterMethod::Embeddings] {
                let plain = prime_representatives(n, method, None).unwrap();
                let pre =
                    prime_representatives(n, method, Some(PrefilterConfig::default())).unwrap();
                let mut a = plain.primes.clone();
                let mut b = pre.primes.clone();
                a.sort_unstable();
                b.sort_unstable();
                assert_eq!(a, b, "prefilter changed output at n={n}");
            }
        }
    }

    #[test]
    fn j_leq_identity_is_top() {
        let i = BoolMat::identity(3);
        for a in all_3x3().step_by(11) {
            assert!(j_leq(&a, &i), "everything sits below the units: {a}");
        }
    }

    #[test]
    fn j_leq_agrees_with_ideal_oracle_on_2x2() {
        let all2: Vec<BoolMat> = (0..16u64)
            .map(|bits| BoolMat::from_row_bits(vec![bits >> 2 & 3, bits & 3], 2))
            .collect();
        for a in &all2 {
            for b in &all2 {
                // J_a <= J_b iff a lies in the two-sided ideal S^1 b S^1
                let mut in_ideal = a == b;
                'outer: for x in &all2 {
                    let xb = crate::boolmat::mat_mul(x, b).unwrap();
                    if &xb == a {
                        in_ideal = true;
                        break;
                    }
                    for y in &all2 {
                        if &crate::boolmat::mat_mul(&xb, y).unwrap() == a
                            || &crate::boolmat::mat_mul(b, y).unwrap() == a
                        {
                            in_ideal = true;
                            break 'outer;
                        }
                    }
                }
                assert_eq!(j_leq(a, b), in_ideal, "a={a} b={b}");
            }
        }
    }
}
