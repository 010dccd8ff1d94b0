//! Permutations of `{0, .., n-1}` and their action on boolean matrices.

use crate::boolmat::BoolMat;

/// All permutations of `0..n` in lexicographic order.
///
/// Materialized; intended for the desk scales this crate targets (n ≤ 8,
/// so at most 40 320 entries).
pub fn all(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 10, "permutation enumeration capped at n = 10");
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        if !next_perm(&mut cur) {
            return out;
        }
    }
}

fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Rows permuted: row `i` of the result is row `perm[i]` of `a`.
pub fn permute_rows(a: &BoolMat, perm: &[usize]) -> BoolMat {
    let rows: Vec<u64> = perm.iter().map(|&i| a.row_bits(i)).collect();
    BoolMat::from_row_bits(rows, a.ncols())
}

/// Columns permuted: entry `(i, j)` of the result is entry `(i, perm[j])` of `a`.
pub fn permute_cols(a: &BoolMat, perm: &[usize]) -> BoolMat {
    let n = a.ncols();
    let rows: Vec<u64> = (0..a.nrows())
        .map(|i| {
            let mut bits = 0u64;
            for (j, &pj) in perm.iter().enumerate() {
                if a.get(i, pj) {
                    bits |= 1 << (n - 1 - j);
                }
            }
            bits
        })
        .collect();
    BoolMat::from_row_bits(rows, n)
}

/// Simultaneous row/column permutation: entry `(i, j)` of the result is
/// entry `(perm[i], perm[j])` of `a`. Ranging `perm` over all of `S_n`
/// produces the whole conjugation orbit of `a`.
pub fn conjugate(a: &BoolMat, perm: &[usize]) -> BoolMat {
    permute_cols(&permute_rows(a, perm), perm)
}

/// Permute the coordinates of a single row word: bit (position `j`) of the
/// result is bit (position `perm[j]`) of `bits`.
pub fn permute_vec(bits: u64, perm: &[usize], n: usize) -> u64 {
    let mut out = 0u64;
    for (j, &pj) in perm.iter().enumerate() {
        if bits >> (n - 1 - pj) & 1 == 1 {
            out |= 1 << (n - 1 - j);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_factorial() {
        assert_eq!(all(0).len(), 1);
        assert_eq!(all(1).len(), 1);
        assert_eq!(all(4).len(), 24);
        assert_eq!(all(6).len(), 720);
    }

    #[test]
    fn conjugation_is_simultaneous() {
        // directed 3-cycle plus loops, relabelled by the transposition (0 1):
        // edges {0->1, 1->2, 2->0} become {1->0, 0->2, 2->1}
        let a = BoolMat::parse("110\n011\n101").unwrap();
        let b = conjugate(&a, &[1, 0, 2]);
        let expected = BoolMat::parse("101\n110\n011").unwrap();
        assert_eq!(b, expected);
    }

    #[test]
    fn permute_vec_matches_matrix_action() {
        let a = BoolMat::from_row_bits(vec![0b10110], 5);
        for p in all(5) {
            let m = permute_cols(&a, &p);
            assert_eq!(m.row_bits(0), permute_vec(a.row_bits(0), &p, 5));
        }
    }
}
