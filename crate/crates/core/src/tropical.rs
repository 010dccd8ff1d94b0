//! Thresholded min-plus and max-plus arithmetic and the 2×2 matrix
//! generator families, with the row-basis computation used to separate
//! max-plus generators.
//!
//! Scalars live in {0, .., t} plus an absorbing bottom (∞ for min-plus,
//! -∞ for max-plus); addition is min or max, multiplication is addition
//! saturated at t. The threshold-t semirings are finite quotients of the
//! corresponding infinite semirings.

use crate::engine::Element;
use crate::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Sentinel for the absorbing element (∞ or -∞ depending on flavor).
pub const BOT: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Addition is min; the absorbing bottom is +∞ (largest).
    MinPlus,
    /// Addition is max; the absorbing bottom is -∞ (smallest).
    MaxPlus,
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" | "minplus" | "min-plus" => Ok(Flavor::MinPlus),
            "max" | "maxplus" | "max-plus" => Ok(Flavor::MaxPlus),
            other => Err(Error::Parse(format!("unknown flavor {other:?}"))),
        }
    }
}

/// A thresholded tropical semiring: the scalar domain {BOT, 0, 1, .., t}
/// with precomputed addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semiring {
    flavor: Flavor,
    t: u8,
    add_table: Vec<u8>,
    mul_table: Vec<u8>,
}

impl Semiring {
    /// `t = 0` is allowed for the scalar arithmetic (the two-element
    /// semiring); the generator families require `t ≥ 1`.
    pub fn new(flavor: Flavor, t: u8) -> Semiring {
        let k = t as usize + 2; // codes 0..=t plus BOT mapped to index t+1
        let code = |idx: usize| if idx == k - 1 { BOT } else { idx as u8 };
        let mut add_table = vec![0u8; k * k];
        let mut mul_table = vec![0u8; k * k];
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (code(i), code(j));
                add_table[i * k + j] = match (flavor, a, b) {
                    (Flavor::MinPlus, BOT, x) | (Flavor::MinPlus, x, BOT) => x,
                    (Flavor::MinPlus, x, y) => x.min(y),
                    (Flavor::MaxPlus, BOT, x) | (Flavor::MaxPlus, x, BOT) => x,
                    (Flavor::MaxPlus, x, y) => x.max(y),
                };
                mul_table[i * k + j] = match (a, b) {
                    (BOT, _) | (_, BOT) => BOT,
                    (x, y) => (x + y).min(t),
                };
            }
        }
        Semiring {
            flavor,
            t,
            add_table,
            mul_table,
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn threshold(&self) -> u8 {
        self.t
    }

    /// All scalars: BOT then 0..=t.
    pub fn scalars(&self) -> Vec<u8> {
        let mut out = vec![BOT];
        out.extend(0..=self.t);
        out
    }

    #[inline]
    fn idx(&self, a: u8) -> usize {
        if a == BOT {
            self.t as usize + 1
        } else {
            debug_assert!(a <= self.t);
            a as usize
        }
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        let k = self.t as usize + 2;
        self.add_table[self.idx(a) * k + self.idx(b)]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        let k = self.t as usize + 2;
        self.mul_table[self.idx(a) * k + self.idx(b)]
    }

    /// Semiring zero (the additive identity): BOT in both flavors.
    pub fn zero(&self) -> u8 {
        BOT
    }

    /// Semiring one (the multiplicative identity).
    pub fn one(&self) -> u8 {
        0
    }
}

/// A single scalar tagged with its semiring parameters, the exchange type
/// at API boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TropScalar {
    pub value: u8,
    pub t: u8,
    pub flavor: Flavor,
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value == BOT {
            match self.flavor {
                Flavor::MinPlus => write!(f, "inf"),
                Flavor::MaxPlus => write!(f, "-inf"),
            }
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A 2×2 matrix over a thresholded tropical semiring; all entries share the
/// flavor and threshold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropMat {
    flavor: Flavor,
    t: u8,
    entries: [u8; 4],
}

impl TropMat {
    pub fn new(flavor: Flavor, t: u8, entries: [u8; 4]) -> TropMat {
        assert!(
            entries.iter().all(|&e| e == BOT || e <= t),
            "entry out of range"
        );
        TropMat { flavor, t, entries }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn threshold(&self) -> u8 {
        self.t
    }

    pub fn entries(&self) -> [u8; 4] {
        self.entries
    }

    pub fn identity(flavor: Flavor, t: u8) -> TropMat {
        TropMat::new(flavor, t, [0, BOT, BOT, 0])
    }

    pub fn rows(&self) -> [[u8; 2]; 2] {
        [
            [self.entries[0], self.entries[1]],
            [self.entries[2], self.entries[3]],
        ]
    }
}

impl fmt::Display for TropMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |v: u8| TropScalar {
            value: v,
            t: self.t,
            flavor: self.flavor,
        };
        write!(
            f,
            "{} {} {} {}",
            s(self.entries[0]),
            s(self.entries[1]),
            s(self.entries[2]),
            s(self.entries[3])
        )
    }
}

/// Matrix product over the shared semiring.
pub fn trop_mul(a: &TropMat, b: &TropMat) -> Result<TropMat> {
    if a.flavor != b.flavor || a.t != b.t {
        return Err(Error::SemiringMismatch(format!(
            "{:?}/t={} vs {:?}/t={}",
            a.flavor, a.t, b.flavor, b.t
        )));
    }
    let ring = Semiring::new(a.flavor, a.t);
    let e = |m: &TropMat, i: usize, j: usize| m.entries[2 * i + j];
    let mut out = [BOT; 4];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = ring.zero();
            for k in 0..2 {
                acc = ring.add(acc, ring.mul(e(a, i, k), e(b, k, j)));
            }
            out[2 * i + j] = acc;
        }
    }
    Ok(TropMat::new(a.flavor, a.t, out))
}

impl Element for TropMat {
    fn product(&self, other: &Self) -> Self {
        trop_mul(self, other).expect("semiring mismatch in closure")
    }
}

/// The t+4 generators of the threshold-t min-plus monoid: the diagonal
/// family over every scalar plus the two named matrices.
pub fn minplus_generators(t: u8) -> Result<Vec<TropMat>> {
    if t == 0 {
        return Err(Error::ThresholdZero);
    }
    let f = Flavor::MinPlus;
    let mut gens = Vec::new();
    let ring = Semiring::new(f, t);
    for i in ring.scalars() {
        gens.push(TropMat::new(f, t, [i, 0, 0, BOT]));
    }
    gens.push(TropMat::new(f, t, [1, BOT, BOT, 0]));
    gens.push(TropMat::new(f, t, [BOT, BOT, BOT, 0]));
    Ok(gens)
}

/// The (t²+3t+8)/2 generators of the threshold-t max-plus monoid: the
/// diagonal family, two named matrices, and the off-diagonal family over
/// ordered pairs.
pub fn maxplus_generators(t: u8) -> Result<Vec<TropMat>> {
    if t == 0 {
        return Err(Error::ThresholdZero);
    }
    let f = Flavor::MaxPlus;
    let mut gens = Vec::new();
    let ring = Semiring::new(f, t);
    for i in ring.scalars() {
        gens.push(TropMat::new(f, t, [i, 0, 0, BOT]));
    }
    gens.push(TropMat::new(f, t, [1, BOT, BOT, 0]));
    gens.push(TropMat::new(f, t, [BOT, BOT, BOT, 0]));
    for j in 1..=t {
        for k in j..=t {
            gens.push(TropMat::new(f, t, [0, j, k, 0]));
        }
    }
    Ok(gens)
}

/// All (t+2)^4 matrices of the threshold-t monoid, for exhaustive checks.
pub fn all_matrices(flavor: Flavor, t: u8) -> Vec<TropMat> {
    let ring = Semiring::new(flavor, t);
    let scalars = ring.scalars();
    let mut out = Vec::with_capacity(scalars.len().pow(4));
    for &a in &scalars {
        for &b in &scalars {
            for &c in &scalars {
                for &d in &scalars {
                    out.push(TropMat::new(flavor, t, [a, b, c, d]));
                }
            }
        }
    }
    out
}

/// A row over a max-plus semiring, any width.
pub type TropRow = Vec<u8>;

/// The unique row basis of a list of max-plus rows: the rows not
/// expressible as a linear combination of the other rows. Expressibility
/// is decided by the principal solution: take every other row at its
/// largest admissible scale and check whether the sum reaches the target.
pub fn maxplus_row_basis(rows: &[TropRow], t: u8) -> Vec<TropRow> {
    rows.iter()
        .enumerate()
        .filter(|(i, row)| {
            let others: Vec<&TropRow> = rows
                .iter()
                .enumerate()
                .filter(|(j, other)| j != i && other != row)
                .map(|(_, r)| r)
                .collect();
            !maxplus_expressible(row, &others, t)
        })
        .map(|(_, r)| r.clone())
        .collect()
}

fn maxplus_expressible(target: &TropRow, others: &[&TropRow], t: u8) -> bool {
    let ring = Semiring::new(Flavor::MaxPlus, t);
    let width = target.len();
    let mut acc: TropRow = vec![BOT; width];
    for r in others {
        // largest scalar a with a*r <= target componentwise
        let mut best: Option<u8> = Some(t);
        for c in 0..width {
            if r[c] == BOT {
                continue;
            }
            if target[c] == BOT {
                best = None; // only the zero scalar works
                break;
            }
            if target[c] == t {
                continue; // saturation absorbs any scale
            }
            let room = target[c].saturating_sub(r[c]);
            if target[c] < r[c] {
                best = None;
                break;
            }
            best = Some(best.unwrap_or(t).min(room));
        }
        let a = match best {
            Some(a) => a,
            None => BOT,
        };
        for c in 0..width {
            acc[c] = ring.add(acc[c], ring.mul(a, r[c]));
        }
    }
    acc == *target
}

/// Number of distinct scalar multiples of a max-plus row over the
/// threshold-t scalar domain (the zero scalar included).
pub fn scalar_multiple_count(row: &TropRow, t: u8) -> usize {
    let ring = Semiring::new(Flavor::MaxPlus, t);
    let mut seen = std::collections::HashSet::new();
    for a in ring.scalars() {
        let scaled: TropRow = row.iter().map(|&x| ring.mul(a, x)).collect();
        seen.insert(scaled);
    }
    seen.len()
}

/// Generator constructors over the unbounded semirings, provided for
/// completeness; the infinite monoids are not finitely generated and no
/// closure is attempted over them. `None` encodes the absorbing bottom.
pub mod unbounded {
    pub type Entry = Option<u64>;

    pub fn minplus_a(i: Entry) -> [Entry; 4] {
        [i, Some(0), Some(0), None]
    }

    pub fn minplus_b() -> [Entry; 4] {
        [Some(1), None, None, Some(0)]
    }

    pub fn minplus_c() -> [Entry; 4] {
        [None, None, None, Some(0)]
    }

    pub fn maxplus_x(i: Entry) -> [Entry; 4] {
        [i, Some(0), Some(0), None]
    }

    pub fn maxplus_y() -> [Entry; 4] {
        [Some(1), None, None, Some(0)]
    }

    pub fn maxplus_z() -> [Entry; 4] {
        [None, None, None, Some(0)]
    }

    pub fn maxplus_w(j: u64, k: u64) -> [Entry; 4] {
        assert!(1 <= j && j <= k);
        [Some(0), Some(j), Some(k), Some(0)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::closure;

    #[test]
    fn semiring_laws_exhaustive_small_t() {
        for flavor in [Flavor::MinPlus, Flavor::MaxPlus] {
            for t in 0..=3u8 {
                let ring = Semiring::new(flavor, t);
                let s = ring.scalars();
                for &a in &s {
                    assert_eq!(ring.add(a, ring.zero()), a);
                    assert_eq!(ring.mul(a, ring.one()), a);
                    assert_eq!(ring.mul(a, ring.zero()), ring.zero());
                    for &b in &s {
                        assert_eq!(ring.add(a, b), ring.add(b, a));
                        assert_eq!(ring.mul(a, b), ring.mul(b, a));
                        for &c in &s {
                            assert_eq!(
                                ring.add(ring.add(a, b), c),
                                ring.add(a, ring.add(b, c))
                            );
                            assert_eq!(
                                ring.mul(ring.mul(a, b), c),
                                ring.mul(a, ring.mul(b, c))
                            );
                            assert_eq!(
                                ring.mul(a, ring.add(b, c)),
                                ring.add(ring.mul(a, b), ring.mul(a, c))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn identity_multiplication() {
        let t = 2;
        for flavor in [Flavor::MinPlus, Flavor::MaxPlus] {
            let i = TropMat::identity(flavor, t);
            for a in all_matrices(flavor, t).into_iter().step_by(17) {
                assert_eq!(trop_mul(&i, &a).unwrap(), a);
                assert_eq!(trop_mul(&a, &i).unwrap(), a);
            }
        }
    }

    #[test]
    fn minplus_diagonal_family_square() {
        // entrywise evaluation: the i=1 family member squared
        let a1 = TropMat::new(Flavor::MinPlus, 1, [1, 0, 0, BOT]);
        let sq = trop_mul(&a1, &a1).unwrap();
        assert_eq!(sq.entries(), [0, 1, 1, 0]);
    }

    #[test]
    fn maxplus_z_idempotent() {
        let z = TropMat::new(Flavor::MaxPlus, 2, [BOT, BOT, BOT, 0]);
        assert_eq!(trop_mul(&z, &z).unwrap(), z);
    }

    #[test]
    fn mismatch_rejected() {
        let a = TropMat::identity(Flavor::MinPlus, 1);
        let b = TropMat::identity(Flavor::MaxPlus, 1);
        assert!(trop_mul(&a, &b).is_err());
        let c = TropMat::identity(Flavor::MinPlus, 2);
        assert!(trop_mul(&a, &c).is_err());
    }

    #[test]
    fn generator_counts() {
        for t in 1..=10u8 {
            assert_eq!(minplus_generators(t).unwrap().len(), t as usize + 4);
            assert_eq!(
                maxplus_generators(t).unwrap().len(),
                (t as usize * t as usize + 3 * t as usize + 8) / 2
            );
        }
        assert!(minplus_generators(0).is_err());
        assert!(maxplus_generators(0).is_err());
    }

    #[test]
    fn closures_fill_the_monoid() {
        for t in 1..=2u8 {
            let gens = minplus_generators(t).unwrap();
            let c = closure(&gens, 1 << 16).unwrap();
            assert_eq!(c.len(), (t as usize + 2).pow(4), "min-plus t={t}");
            let gens = maxplus_generators(t).unwrap();
            let c = closure(&gens, 1 << 16).unwrap();
            assert_eq!(c.len(), (t as usize + 2).pow(4), "max-plus t={t}");
        }
    }

    #[test]
    fn removing_z_loses_double_bottom_rows() {
        // without the all-bottom-row generator no element with such a row
        // is reachable
        let t = 1;
        let gens: Vec<TropMat> = maxplus_generators(t)
            .unwrap()
            .into_iter()
            .filter(|g| g.entries() != [BOT, BOT, BOT, 0])
            .collect();
        let c = closure(&gens, 1 << 16).unwrap();
        assert!(c.elements.iter().all(|m| {
            let e = m.entries();
            !(e[0] == BOT && e[1] == BOT) && !(e[2] == BOT && e[3] == BOT)
        }));
    }

    #[test]
    fn maxplus_row_bases_of_named_generators() {
        let t = 3;
        // all-bottom-row generator: basis is the single non-bottom row
        assert_eq!(
            maxplus_row_basis(&[vec![BOT, BOT], vec![BOT, 0]], t),
            vec![vec![BOT, 0]]
        );
        // the 1/bottom diagonal: both rows are needed
        assert_eq!(
            maxplus_row_basis(&[vec![1, BOT], vec![BOT, 0]], t),
            vec![vec![1, BOT], vec![BOT, 0]]
        );
        // the off-diagonal family member (j, k) = (1, 2)
        assert_eq!(
            maxplus_row_basis(&[vec![0, 1], vec![2, 0]], t),
            vec![vec![0, 1], vec![2, 0]]
        );
    }

    #[test]
    fn scalar_multiple_counts() {
        for t in 1..=5u8 {
            assert_eq!(scalar_multiple_count(&vec![1, BOT], t), t as usize + 1);
            assert_eq!(scalar_multiple_count(&vec![BOT, 0], t), t as usize + 2);
            for j in 1..=t {
                assert_eq!(scalar_multiple_count(&vec![0, j], t), t as usize + 2);
            }
        }
    }

    #[test]
    fn threshold_zero_minplus_matches_boolean_monoid() {
        // the two-scalar min-plus semiring: bottom acts like boolean 0 and
        // the one like boolean 1
        let t = 0;
        let to_bool = |m: &TropMat| -> BoolMatPair {
            let e = m.entries();
            BoolMatPair([
                e[0] != BOT,
                e[1] != BOT,
                e[2] != BOT,
                e[3] != BOT,
            ])
        };
        #[derive(PartialEq, Debug)]
        struct BoolMatPair([bool; 4]);
        let all = all_matrices(Flavor::MinPlus, t);
        let mut state = 0x12345u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % all.len() as u64) as usize
        };
        for _ in 0..200 {
            let (a, b) = (&all[next()], &all[next()]);
            let p = trop_mul(a, b).unwrap();
            // boolean product: or over and
            let (ba, bb) = (to_bool(a), to_bool(b));
            let expected = BoolMatPair([
                ba.0[0] && bb.0[0] || ba.0[1] && bb.0[2],
                ba.0[0] && bb.0[1] || ba.0[1] && bb.0[3],
                ba.0[2] && bb.0[0] || ba.0[3] && bb.0[2],
                ba.0[2] && bb.0[1] || ba.0[3] && bb.0[3],
            ]);
            assert_eq!(to_bool(&p), expected);
        }
    }
}
