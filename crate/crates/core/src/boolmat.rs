//! Boolean vectors, boolean matrices, and their row spaces.
//!
//! Rows are stored as 64-bit words. Position `j` (0-indexed, left to right)
//! of a length-`n` vector lives at machine bit `n - 1 - j`, so the leftmost
//! position is the most significant bit and `num(v)` is just the stored word.
//! Under this convention "the rows read as binary numbers" compare as plain
//! integers.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest supported dimension. A row must fit in one machine word.
pub const MAX_DIM: usize = 64;

/// A boolean vector of length `n ≤ 64`, bits above position `n` zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolVec {
    bits: u64,
    len: usize,
}

impl BoolVec {
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len >= 1 && len <= MAX_DIM, "vector length out of range");
        assert!(len == 64 || bits >> len == 0, "bits above position n must be zero");
        BoolVec { bits, len }
    }

    /// Standard basis vector with a single 1 in position `i` (0-indexed).
    pub fn unit(i: usize, len: usize) -> Self {
        assert!(i < len);
        BoolVec::new(1 << (len - 1 - i), len)
    }

    pub fn zero(len: usize) -> Self {
        BoolVec::new(0, len)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, j: usize) -> bool {
        assert!(j < self.len);
        self.bits >> (self.len - 1 - j) & 1 == 1
    }

    pub fn count_ones(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Componentwise containment `self ≤ other`.
    pub fn le(&self, other: &BoolVec) -> bool {
        assert_eq!(self.len, other.len);
        self.bits & other.bits == self.bits
    }

    pub fn union(&self, other: &BoolVec) -> BoolVec {
        assert_eq!(self.len, other.len);
        BoolVec::new(self.bits | other.bits, self.len)
    }
}

/// The number represented by `v` in binary, leftmost position most significant.
pub fn num(v: &BoolVec) -> u64 {
    v.bits()
}

/// Inverse of [`num`]: the length-`n` vector whose binary value is `x`.
pub fn vec(x: u64, n: usize) -> Result<BoolVec> {
    if n < 1 || n > MAX_DIM {
        return Err(Error::DimensionOutOfRange(n, MAX_DIM));
    }
    if n < 64 && x >> n != 0 {
        return Err(Error::ValueOutOfRange(x, n));
    }
    Ok(BoolVec::new(x, n))
}

/// An `m × n` boolean matrix, `m ≤ n ≤ 64`. Square in all monoid contexts;
/// rectangular (fewer rows) only during Breen-form enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolMat {
    rows: Vec<u64>,
    ncols: usize,
}

impl BoolMat {
    pub fn from_row_bits(rows: Vec<u64>, ncols: usize) -> Self {
        assert!(ncols >= 1 && ncols <= MAX_DIM);
        assert!(ncols == 64 || rows.iter().all(|r| r >> ncols == 0));
        BoolMat { rows, ncols }
    }

    pub fn from_rows(rows: Vec<BoolVec>) -> Self {
        let ncols = rows.first().expect("at least one row").len();
        assert!(rows.iter().all(|r| r.len() == ncols), "rows of unequal length");
        BoolMat {
            rows: rows.iter().map(|r| r.bits()).collect(),
            ncols,
        }
    }

    pub fn zero(n: usize) -> Self {
        BoolMat::from_row_bits(vec![0; n], n)
    }

    pub fn identity(n: usize) -> Self {
        BoolMat::from_row_bits((0..n).map(|i| 1 << (n - 1 - i)).collect(), n)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(j < self.ncols);
        self.rows[i] >> (self.ncols - 1 - j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(j < self.ncols);
        let bit = 1 << (self.ncols - 1 - j);
        if value {
            self.rows[i] |= bit;
        } else {
            self.rows[i] &= !bit;
        }
    }

    pub fn row(&self, i: usize) -> BoolVec {
        BoolVec::new(self.rows[i], self.ncols)
    }

    pub fn row_bits(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn rows_bits(&self) -> &[u64] {
        &self.rows
    }

    pub fn col(&self, j: usize) -> BoolVec {
        assert!(j < self.ncols);
        let m = self.rows.len();
        let mut bits = 0u64;
        for (i, &r) in self.rows.iter().enumerate() {
            if r >> (self.ncols - 1 - j) & 1 == 1 {
                bits |= 1 << (m - 1 - i);
            }
        }
        BoolVec::new(bits, m)
    }

    pub fn transpose(&self) -> BoolMat {
        let m = self.rows.len();
        let mut out = vec![0u64; self.ncols];
        for (i, &r) in self.rows.iter().enumerate() {
            let mut bits = r;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out[self.ncols - 1 - b] |= 1 << (m - 1 - i);
                bits &= bits - 1;
            }
        }
        BoolMat::from_row_bits(out, m)
    }

    pub fn count_ones(&self) -> u32 {
        self.rows.iter().map(|r| r.count_ones()).sum()
    }

    /// Exactly one 1 per row and per column.
    pub fn is_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut seen = 0u64;
        for &r in &self.rows {
            if r.count_ones() != 1 || seen & r != 0 {
                return false;
            }
            seen |= r;
        }
        true
    }

    /// Contains the identity: every diagonal entry is 1.
    pub fn is_reflexive(&self) -> bool {
        self.is_square() && (0..self.ncols).all(|i| self.get(i, i))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, &r)| i == 0 || r >> (self.ncols - i) == 0)
    }

    /// Row-major bit string, e.g. `"0111"` for `[[0,1],[1,1]]`.
    pub fn to_bit_string(&self) -> String {
        let mut s = String::with_capacity(self.rows.len() * self.ncols);
        for i in 0..self.rows.len() {
            for j in 0..self.ncols {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
        }
        s
    }

    /// Parse the text matrix format: `n` lines of `n` characters from `{0,1}`,
    /// or a single row-major bit string of length `n²`.
    pub fn parse(text: &str) -> Result<BoolMat> {
        let lines: Vec<&str> = text.split_whitespace().filter(|l| !l.is_empty()).collect();
        if lines.is_empty() {
            return Err(Error::Parse("empty matrix text".into()));
        }
        let (rows, ncols) = if lines.len() == 1 {
            let flat = lines[0];
            let len = flat.len();
            let n = (1..=MAX_DIM)
                .find(|n| n * n == len)
                .ok_or_else(|| Error::Parse(format!("bit string length {len} is not a square")))?;
            (
                (0..n).map(|i| &flat[i * n..(i + 1) * n]).collect::<Vec<_>>(),
                n,
            )
        } else {
            (lines.clone(), lines[0].len())
        };
        if ncols == 0 || ncols > MAX_DIM {
            return Err(Error::DimensionOutOfRange(ncols, MAX_DIM));
        }
        let mut out = Vec::with_capacity(rows.len());
        for line in rows {
            if line.len() != ncols {
                return Err(Error::Parse(format!(
                    "row {line:?} has length {} but expected {ncols}",
                    line.len()
                )));
            }
            let mut bits = 0u64;
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '1' => bits |= 1 << (ncols - 1 - j),
                    '0' => {}
                    other => return Err(Error::Parse(format!("bad character {other:?}"))),
                }
            }
            out.push(bits);
        }
        Ok(BoolMat::from_row_bits(out, ncols))
    }
}

impl fmt::Display for BoolMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows.len() {
            for j in 0..self.ncols {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            if i + 1 < self.rows.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl Serialize for BoolMat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bit_string())
    }
}

impl<'de> Deserialize<'de> for BoolMat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        BoolMat::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Boolean matrix product: row `i` of `AB` is the union of the rows `B_k`
/// with `A_ik = 1`.
pub fn mat_mul(a: &BoolMat, b: &BoolMat) -> Result<BoolMat> {
    if a.ncols() != b.nrows() || !b.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} * {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    let n = a.ncols();
    let rows = a
        .rows
        .iter()
        .map(|&ar| {
            let mut acc = 0u64;
            let mut bits = ar;
            while bits != 0 {
                let b_idx = n - 1 - bits.trailing_zeros() as usize;
                acc |= b.rows[b_idx];
                bits &= bits - 1;
            }
            acc
        })
        .collect();
    Ok(BoolMat::from_row_bits(rows, b.ncols()))
}

/// `B` is contained in `A`: every 1 of `B` is a 1 of `A`.
pub fn contains(a: &BoolMat, b: &BoolMat) -> Result<bool> {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    Ok(a.rows.iter().zip(&b.rows).all(|(&ar, &br)| br & ar == br))
}

/// The set of all unions of rows (the empty union giving the zero vector),
/// together with its unique union-irreducible basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowSpace {
    n: usize,
    /// All elements, sorted ascending; always contains 0.
    elements: Vec<u64>,
    /// Union-irreducible non-zero elements, sorted ascending.
    basis: Vec<u64>,
}

impl RowSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains_vec(&self, bits: u64) -> bool {
        self.elements.binary_search(&bits).is_ok()
    }

    /// Set containment `self ⊆ other` by merge over the sorted element lists.
    pub fn subset_of(&self, other: &RowSpace) -> bool {
        subset_sorted(&self.elements, &other.elements)
    }

    /// Build a space directly from generating vectors (zero vector implied).
    pub fn span(gens: &[u64], n: usize) -> RowSpace {
        let mut elements = vec![0u64];
        for &g in gens {
            if g == 0 {
                continue;
            }
            let mut next: Vec<u64> = elements.iter().map(|&e| e | g).collect();
            next.sort_unstable();
            next.dedup();
            elements = merge_sorted(&elements, &next);
        }
        let basis = basis_of_elements(&elements);
        RowSpace { n, elements, basis }
    }
}

pub(crate) fn subset_sorted(small: &[u64], large: &[u64]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut it = large.iter();
    'outer: for &x in small {
        for &y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

fn merge_sorted(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn basis_of_elements(elements: &[u64]) -> Vec<u64> {
    // v is union-irreducible iff it differs from the union of the elements
    // strictly below it.
    elements
        .iter()
        .filter(|&&v| v != 0)
        .filter(|&&v| {
            let mut below = 0u64;
            for &w in elements {
                if w != v && w & v == w {
                    below |= w;
                }
            }
            below != v
        })
        .copied()
        .collect()
}

/// The row space Λ(A).
pub fn row_space(a: &BoolMat) -> RowSpace {
    RowSpace::span(&a.rows, a.ncols())
}

/// The unique union-irreducible basis λ(A) of the row space.
///
/// Equals the set of non-zero rows that are not unions of other rows;
/// computed that way rather than through the full space.
pub fn row_basis(a: &BoolMat) -> Vec<BoolVec> {
    let mut out: Vec<u64> = a
        .rows
        .iter()
        .filter(|&&r| r != 0)
        .filter(|&&r| {
            let mut below = 0u64;
            for &s in &a.rows {
                if s != r && s & r == s {
                    below |= s;
                }
            }
            below != r
        })
        .copied()
        .collect();
    out.sort_unstable();
    out.dedup();
    out.into_iter().map(|b| BoolVec::new(b, a.ncols())).collect()
}

/// Column space and basis via the transpose.
pub fn col_space(a: &BoolMat) -> RowSpace {
    row_space(&a.transpose())
}

pub fn col_basis(a: &BoolMat) -> Vec<BoolVec> {
    row_basis(&a.transpose())
}

/// No non-zero row is contained in a different row.
pub fn is_row_trim(a: &BoolMat) -> bool {
    let m = a.rows.len();
    for i in 0..m {
        if a.rows[i] == 0 {
            continue;
        }
        for j in 0..m {
            if i != j && a.rows[i] & a.rows[j] == a.rows[i] {
                return false;
            }
        }
    }
    true
}

pub fn is_col_trim(a: &BoolMat) -> bool {
    is_row_trim(&a.transpose())
}

pub fn is_trim(a: &BoolMat) -> bool {
    is_row_trim(a) && is_col_trim(a)
}

/// No non-zero row is a union of other rows. Zero rows are ignored: a union
/// of rows here always means a union of non-zero rows.
pub fn is_row_reduced(a: &BoolMat) -> bool {
    let m = a.rows.len();
    for i in 0..m {
        let r = a.rows[i];
        if r == 0 {
            continue;
        }
        let mut below = 0u64;
        for j in 0..m {
            if j != i && a.rows[j] & r == a.rows[j] {
                below |= a.rows[j];
            }
        }
        if below == r {
            return false;
        }
    }
    true
}

pub fn is_col_reduced(a: &BoolMat) -> bool {
    is_row_reduced(&a.transpose())
}

pub fn is_reduced(a: &BoolMat) -> bool {
    is_row_reduced(a) && is_col_reduced(a)
}

/// The greedy left multiplier of the pair: the containment-maximal `C` with
/// `C·B = A` whenever `Λ(A) ⊆ Λ(B)`. `C_ij = 1` iff row `j` of `B` is
/// contained in row `i` of `A`. The caller checks `C·B == A`.
pub fn greedy_left_multiplier(a: &BoolMat, b: &BoolMat) -> Result<BoolMat> {
    if a.ncols() != b.ncols() || a.nrows() != b.nrows() || !a.is_square() {
        return Err(Error::DimensionMismatch(
            "greedy multiplier needs equal square dimensions".into(),
        ));
    }
    let n = a.ncols();
    let rows = a
        .rows
        .iter()
        .map(|&ar| {
            let mut bits = 0u64;
            for (j, &br) in b.rows.iter().enumerate() {
                if br & ar == br {
                    bits |= 1 << (n - 1 - j);
                }
            }
            bits
        })
        .collect();
    Ok(BoolMat::from_row_bits(rows, n))
}

/// Dual of [`greedy_left_multiplier`]: the maximal `D` with `B·D = A`
/// whenever `P(A) ⊆ P(B)`.
pub fn greedy_right_multiplier(a: &BoolMat, b: &BoolMat) -> Result<BoolMat> {
    Ok(greedy_left_multiplier(&a.transpose(), &b.transpose())?.transpose())
}

/// Hall's condition via maximum bipartite matching: true iff `A` contains a
/// permutation matrix.
pub fn is_hall(a: &BoolMat) -> bool {
    if !a.is_square() {
        return false;
    }
    let n = a.ncols();
    let mut matched_col: Vec<Option<usize>> = vec![None; n];
    let mut visited = vec![false; n];

    fn augment(
        a: &BoolMat,
        row: usize,
        visited: &mut [bool],
        matched_col: &mut [Option<usize>],
    ) -> bool {
        let n = a.ncols();
        for j in 0..n {
            if a.get(row, j) && !visited[j] {
                visited[j] = true;
                match matched_col[j] {
                    None => {
                        matched_col[j] = Some(row);
                        return true;
                    }
                    Some(other) => {
                        if augment(a, other, visited, matched_col) {
                            matched_col[j] = Some(row);
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    for i in 0..n {
        visited.iter_mut().for_each(|v| *v = false);
        if !augment(a, i, &mut visited, &mut matched_col) {
            return false;
        }
    }
    true
}

/// The core: the rows of `A` containing at least two 1s, in order.
pub fn core(a: &BoolMat) -> Vec<BoolVec> {
    a.rows
        .iter()
        .filter(|r| r.count_ones() >= 2)
        .map(|&r| BoolVec::new(r, a.ncols()))
        .collect()
}

/// The largest cardinality of a subset of core rows violating the Hall
/// condition (union of k rows with fewer than k ones); 0 if the core
/// satisfies the Hall condition. Requires a row-trim input.
pub fn deficiency(a: &BoolMat) -> Result<usize> {
    if !is_row_trim(a) {
        return Err(Error::NotRowTrim);
    }
    let core_rows = core(a);
    let k = core_rows.len();
    let mut best = 0usize;
    for mask in 1u64..(1 << k) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut union = 0u64;
        let mut m = mask;
        while m != 0 {
            union |= core_rows[m.trailing_zeros() as usize].bits();
            m &= m - 1;
        }
        if (union.count_ones() as usize) < size {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;

    fn m(text: &str) -> BoolMat {
        BoolMat::parse(text).unwrap()
    }

    #[test]
    fn num_vec_roundtrip() {
        for n in 1..=8usize {
            for x in 0..(1u64 << n) {
                let v = vec(x, n).unwrap();
                assert_eq!(num(&v), x);
            }
        }
        assert_eq!(vec(0, 5).unwrap(), BoolVec::zero(5));
        assert!(vec(4, 2).is_err());
    }

    #[test]
    fn bit_order_leftmost_most_significant() {
        let v = vec(0b100, 3).unwrap();
        assert_eq!(num(&v), 4);
        assert!(v.get(0) && !v.get(1) && !v.get(2));
        let w = vec(0b001, 3).unwrap();
        assert_eq!(num(&w), 1);
        assert!(!w.get(0) && !w.get(1) && w.get(2));
    }

    #[test]
    fn mat_mul_identity_and_example() {
        let a = m("1101\n0110\n1010\n0001");
        let i = BoolMat::identity(4);
        assert_eq!(mat_mul(&i, &a).unwrap(), a);
        assert_eq!(mat_mul(&a, &i).unwrap(), a);

        // [[1,1],[0,1]] * [[1,0],[1,1]] = [[1,1],[1,1]]: bitwise OR of selected rows
        let p = mat_mul(&m("11\n01"), &m("10\n11")).unwrap();
        assert_eq!(p, m("11\n11"));
    }

    #[test]
    fn mat_mul_dimension_mismatch() {
        let a = m("11\n01");
        let b = m("111\n010\n001");
        assert!(mat_mul(&a, &b).is_err());
    }

    #[test]
    fn row_space_cardinalities() {
        // the 2x2 matrix with row space cardinality 3
        assert_eq!(row_space(&m("01\n11")).len(), 3);
        for n in 1..=5 {
            assert_eq!(row_space(&BoolMat::identity(n)).len(), 1 << n);
        }
        assert_eq!(row_space(&BoolMat::zero(3)).len(), 1);
        assert_eq!(row_space(&BoolMat::zero(3)).elements(), &[0]);
    }

    #[test]
    fn row_basis_union_irreducible() {
        let basis = row_basis(&BoolMat::identity(4));
        assert_eq!(basis.len(), 4);
        for (i, b) in basis.iter().enumerate() {
            assert_eq!(*b, BoolVec::unit(3 - i, 4)); // ascending num order
        }
        // [[0,1],[1,1]] has basis {(0,1),(1,1)}: both rows are irreducible even
        // though (0,1) <= (1,1). "<=-minimal rows" would wrongly drop (1,1).
        let basis = row_basis(&m("01\n11"));
        assert_eq!(
            basis,
            vec![BoolVec::new(0b01, 2), BoolVec::new(0b11, 2)]
        );
        // basis read off the rows agrees with union-irreducibles of the space
        for bits in 0..512u64 {
            let a = BoolMat::from_row_bits(
                vec![bits >> 6 & 7, bits >> 3 & 7, bits & 7],
                3,
            );
            let from_rows: Vec<u64> = row_basis(&a).iter().map(|v| v.bits()).collect();
            assert_eq!(from_rows, row_space(&a).basis(), "matrix {a}");
        }
    }

    #[test]
    fn contains_direction() {
        let e12 = m("11\n01");
        let i = BoolMat::identity(2);
        assert!(contains(&e12, &e12).unwrap());
        assert!(contains(&e12, &i).unwrap());
        assert!(!contains(&i, &e12).unwrap());
    }

    #[test]
    fn trim_and_reduced() {
        // elementary matrix: identity row contained in the doubled row
        let e = m("110\n010\n001");
        assert!(!is_row_trim(&e));
        assert!(!is_trim(&e));
        for p in perm::all(4) {
            let pm = perm::permute_rows(&BoolMat::identity(4), &p);
            assert!(is_trim(&pm));
        }
        // the 5x5 standard-form example matrix is trim
        let a = m("00011\n00101\n01100\n10010\n11001");
        assert!(is_trim(&a));
        assert!(is_reduced(&a));

        // row 1 = row 2 union row 3 after padding to 3x3
        let r = m("111\n110\n001");
        assert!(!is_row_reduced(&r));
        assert!(is_reduced(&BoolMat::identity(5)));
        // trim implies reduced, exhaustively for 3x3
        for bits in 0..512u64 {
            let a = BoolMat::from_row_bits(
                vec![bits >> 6 & 7, bits >> 3 & 7, bits & 7],
                3,
            );
            if is_trim(&a) {
                assert!(is_reduced(&a), "trim but not reduced: {a}");
            }
        }
    }

    #[test]
    fn greedy_multiplier_contract() {
        let i = BoolMat::identity(4);
        assert_eq!(greedy_left_multiplier(&i, &i).unwrap(), i);
        let a = m("1101\n0110\n1010\n0001");
        assert_eq!(greedy_left_multiplier(&a, &i).unwrap(), a);
        assert_eq!(
            mat_mul(&greedy_left_multiplier(&a, &i).unwrap(), &i).unwrap(),
            a
        );
        // dual: B*D = A with B = I
        let d = greedy_right_multiplier(&a, &i).unwrap();
        assert_eq!(mat_mul(&i, &d).unwrap(), a);
    }

    #[test]
    fn hall_examples() {
        for p in perm::all(4) {
            assert!(is_hall(&perm::permute_rows(&BoolMat::identity(4), &p)));
        }
        let f = m("000\n010\n001");
        assert!(!is_hall(&f));
        assert!(is_hall(&m("110\n101\n011")));
        // against the brute-force permutation search, all 2^9 3x3 matrices
        for bits in 0..512u64 {
            let a = BoolMat::from_row_bits(
                vec![bits >> 6 & 7, bits >> 3 & 7, bits & 7],
                3,
            );
            let brute = perm::all(3).into_iter().any(|p| {
                let pm = perm::permute_rows(&BoolMat::identity(3), &p);
                contains(&a, &pm).unwrap()
            });
            assert_eq!(is_hall(&a), brute, "matrix {a}");
        }
    }

    #[test]
    fn core_and_deficiency() {
        let f = m("000\n010\n001");
        assert!(core(&f).is_empty());
        assert_eq!(deficiency(&f).unwrap(), 0);
        assert!(!is_hall(&f));

        let a = m("110\n101\n011");
        assert_eq!(core(&a).len(), 3);
        assert_eq!(deficiency(&a).unwrap(), 0);

        let b = m("1100\n1100\n0010\n0001");
        assert!(deficiency(&b).is_err()); // not row-trim (equal rows)

        // five 2-subsets of a 4-set: the whole core is a violator of size 5
        let d = m("11000\n10100\n10010\n01100\n01010");
        assert!(is_row_trim(&d));
        assert_eq!(deficiency(&d).unwrap(), 5);
        assert!(!is_hall(&d));
    }

    #[test]
    fn strictly_increasing_rows_of_example() {
        let a = m("00011\n00101\n01100\n10010\n11001");
        let nums: Vec<u64> = (0..5).map(|i| num(&a.row(i))).collect();
        assert!(nums.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn transpose_antiautomorphism() {
        let a = m("1101\n0110\n1010\n0001");
        let b = m("0011\n1110\n0101\n1000");
        let ab_t = mat_mul(&a, &b).unwrap().transpose();
        let bt_at = mat_mul(&b.transpose(), &a.transpose()).unwrap();
        assert_eq!(ab_t, bt_at);
        assert_eq!(is_row_trim(&a), is_col_trim(&a.transpose()));
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let a = m("01\n11");
        assert_eq!(a.to_bit_string(), "0111");
        assert_eq!(BoolMat::parse("0111").unwrap(), a);
        assert_eq!(BoolMat::parse(&a.to_string()).unwrap(), a);
        assert!(BoolMat::parse("012").is_err());
        assert!(BoolMat::parse("011").is_err());
    }
}
