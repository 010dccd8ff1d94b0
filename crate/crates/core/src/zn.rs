//! Matrices over Z/nZ: the unit-scaling lemma, standard diagonal form via
//! unimodular row and column operations, the one-per-prime generator family
//! relative to the group of units, and unit enumeration.

use crate::engine::Element;
use crate::{Error, Result};
use std::fmt;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Distinct prime divisors by trial division.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// The relative rank of the full matrix monoid over its group of units:
/// the number of distinct prime divisors of the modulus.
pub fn relative_rank(n: u64) -> usize {
    prime_divisors(n).len()
}

/// A unit b with `a·b ≡ gcd(a, n) (mod n)`.
///
/// Construction: Bezout gives `(a/d)x + (n/d)y = 1`; shifting x by the
/// right multiple of n/d makes it coprime to n. For a coprime to n this is
/// the inverse; for a = 0 the convention is b = 1 (gcd(0, n) = n ≡ 0).
pub fn coprime_scaler(a: u64, n: u64) -> u64 {
    assert!(n >= 2);
    let a = a % n;
    if a == 0 {
        return 1;
    }
    let d = gcd(a, n);
    // extended euclid on (a/d, n/d)
    let (mut r0, mut r1) = ((a / d) as i128, (n / d) as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
    }
    debug_assert_eq!(r0, 1);
    let x = x0.rem_euclid(n as i128) as u64;
    // multiply in the primes of n dividing neither x nor n/d
    let nd = n / d;
    let mut k = 1u64;
    for p in prime_divisors(n) {
        if x % p != 0 && nd % p != 0 {
            k = k.wrapping_mul(p) % n;
        }
    }
    let b = (x + k % n * (nd % n)) % n;
    debug_assert_eq!(gcd(b, n), 1, "scaler not a unit: a={a} n={n} b={b}");
    debug_assert_eq!(a * b % n, d % n, "scaler misses the gcd: a={a} n={n} b={b}");
    b
}

/// Modular inverse of a unit.
pub fn inverse(a: u64, n: u64) -> u64 {
    debug_assert_eq!(gcd(a % n, n), 1);
    let b = coprime_scaler(a, n);
    debug_assert_eq!(a % n * b % n, 1 % n);
    b
}

/// A k×k matrix over Z/nZ, the modulus carried alongside.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZnMat {
    modulus: u64,
    k: usize,
    e: Vec<u64>,
}

impl ZnMat {
    pub fn new(modulus: u64, k: usize, entries: Vec<u64>) -> ZnMat {
        assert!(modulus >= 1 && k >= 1 && entries.len() == k * k);
        let e = entries.into_iter().map(|x| x % modulus).collect();
        ZnMat { modulus, k, e }
    }

    pub fn identity(modulus: u64, k: usize) -> ZnMat {
        let mut e = vec![0u64; k * k];
        for i in 0..k {
            e[i * k + i] = 1 % modulus;
        }
        ZnMat { modulus, k, e }
    }

    pub fn diagonal(modulus: u64, diag: &[u64]) -> ZnMat {
        let k = diag.len();
        let mut m = ZnMat::new(modulus, k, vec![0; k * k]);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.e[i * self.k + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.e[i * self.k + j] = v % self.modulus;
    }

    pub fn entries(&self) -> &[u64] {
        &self.e
    }

    /// Determinant by cofactor expansion; supports k ≤ 3, the desk scale.
    pub fn det(&self) -> u64 {
        let n = self.modulus as i128;
        let g = |i: usize, j: usize| self.get(i, j) as i128;
        let d: i128 = match self.k {
            1 => g(0, 0),
            2 => g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0),
            3 => {
                g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1))
                    - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
                    + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
            }
            _ => panic!("determinant implemented for k <= 3"),
        };
        d.rem_euclid(n) as u64
    }

    pub fn is_unit(&self) -> bool {
        gcd(self.det(), self.modulus) == 1
    }
}

impl fmt::Display for ZnMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.k {
            for j in 0..self.k {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            if i + 1 < self.k {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Matrix product modulo the shared modulus.
pub fn zn_mul(a: &ZnMat, b: &ZnMat) -> Result<ZnMat> {
    if a.modulus != b.modulus || a.k != b.k {
        return Err(Error::DimensionMismatch(format!(
            "Z_{} {}x{} vs Z_{} {}x{}",
            a.modulus, a.k, a.k, b.modulus, b.k, b.k
        )));
    }
    let (n, k) = (a.modulus, a.k);
    let mut e = vec![0u64; k * k];
    for i in 0..k {
        for j in 0..k {
            let mut acc: u128 = 0;
            for l in 0..k {
                acc += a.get(i, l) as u128 * b.get(l, j) as u128;
            }
            e[i * k + j] = (acc % n as u128) as u64;
        }
    }
    Ok(ZnMat { modulus: n, k, e })
}

impl Element for ZnMat {
    fn product(&self, other: &Self) -> Self {
        zn_mul(self, other).expect("modulus mismatch in closure")
    }
}

/// Standard diagonal form with unit witnesses: `input = left · diag · right`
/// where the diagonal has leading zeros, then entries dividing the modulus
/// in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    pub diag: Vec<u64>,
    pub left: ZnMat,
    pub right: ZnMat,
}

/// Gaussian-style diagonalization over Z/nZ: gcd-chasing by repeated
/// quotient subtraction (never division), each pivot finally scaled by a
/// unit to its gcd with the modulus, then a simultaneous permutation to
/// the sorted shape.
pub fn standard_diagonal_form(a: &ZnMat) -> Result<DiagonalForm> {
    if a.modulus < 2 {
        return Err(Error::ModulusTooSmall);
    }
    let n = a.modulus;
    let k = a.k;
    let mut w = a.clone();
    let mut left = ZnMat::identity(n, k);
    let mut right = ZnMat::identity(n, k);

    // row op: w.row_i += c * w.row_j, with the inverse accumulated on left
    let add_row = |w: &mut ZnMat, left: &mut ZnMat, i: usize, j: usize, c: u64| {
        for col in 0..k {
            let v = (w.get(i, col) + c * w.get(j, col)) % n;
            w.set(i, col, v);
        }
        let cinv = (n - c % n) % n;
        for row in 0..k {
            let v = (left.get(row, j) + cinv * left.get(row, i)) % n;
            left.set(row, j, v);
        }
    };
    let add_col = |w: &mut ZnMat, right: &mut ZnMat, j: usize, i: usize, c: u64| {
        for row in 0..k {
            let v = (w.get(row, j) + c * w.get(row, i)) % n;
            w.set(row, j, v);
        }
        let cinv = (n - c % n) % n;
        for col in 0..k {
            let v = (right.get(i, col) + cinv * right.get(j, col)) % n;
            right.set(i, col, v);
        }
    };
    let swap_rows = |w: &mut ZnMat, left: &mut ZnMat, i: usize, j: usize| {
        for col in 0..k {
            let (x, y) = (w.get(i, col), w.get(j, col));
            w.set(i, col, y);
            w.set(j, col, x);
        }
        for row in 0..k {
            let (x, y) = (left.get(row, i), left.get(row, j));
            left.set(row, i, y);
            left.set(row, j, x);
        }
    };
    let swap_cols = |w: &mut ZnMat, right: &mut ZnMat, i: usize, j: usize| {
        for row in 0..k {
            let (x, y) = (w.get(row, i), w.get(row, j));
            w.set(row, i, y);
            w.set(row, j, x);
        }
        for col in 0..k {
            let (x, y) = (right.get(i, col), right.get(j, col));
            right.set(i, col, y);
            right.set(j, col, x);
        }
    };
    let scale_row = |w: &mut ZnMat, left: &mut ZnMat, i: usize, u: u64| {
        let uinv = inverse(u, n);
        for col in 0..k {
            w.set(i, col, w.get(i, col) * u % n);
        }
        for row in 0..k {
            left.set(row, i, left.get(row, i) * uinv % n);
        }
    };

    for p in 0..k {
        // bring a nonzero entry of the remaining block to the pivot
        let mut pivot_at = None;
        'find: for i in p..k {
            for j in p..k {
                if w.get(i, j) != 0 {
                    pivot_at = Some((i, j));
                    break 'find;
                }
            }
        }
        let (pi, pj) = match pivot_at {
            None => break,
            Some(x) => x,
        };
        if pi != p {
            swap_rows(&mut w, &mut left, p, pi);
        }
        if pj != p {
            swap_cols(&mut w, &mut right, p, pj);
        }
        // clear row p and column p, gcd-chasing through the pivot; row
        // swaps during the column phase dirty row p, so repeat until clean
        loop {
            // row phase: euclidean steps through columns > p
            loop {
                let mut progressed = false;
                for q in p + 1..k {
                    while w.get(p, q) != 0 {
                        if w.get(p, p) == 0 {
                            swap_cols(&mut w, &mut right, p, q);
                            progressed = true;
                            continue;
                        }
                        let c = w.get(p, q) / w.get(p, p);
                        if c > 0 {
                            add_col(&mut w, &mut right, q, p, n - c);
                        }
                        if w.get(p, q) != 0 {
                            swap_cols(&mut w, &mut right, p, q);
                        }
                        progressed = true;
                    }
                }
                if !progressed {
                    break;
                }
            }
            // column phase through rows > p
            let mut dirtied = false;
            for q in p + 1..k {
                while w.get(q, p) != 0 {
                    if w.get(p, p) == 0 {
                        swap_rows(&mut w, &mut left, p, q);
                        dirtied = true;
                        continue;
                    }
                    let c = w.get(q, p) / w.get(p, p);
                    if c > 0 {
                        add_row(&mut w, &mut left, q, p, n - c);
                    }
                    if w.get(q, p) != 0 {
                        swap_rows(&mut w, &mut left, p, q);
                        dirtied = true;
                    }
                }
            }
            let row_clean = (p + 1..k).all(|q| w.get(p, q) == 0);
            if row_clean && !dirtied {
                break;
            }
        }
        // pivot to its gcd with the modulus
        let d = w.get(p, p);
        if d != 0 {
            let g = gcd(d, n);
            if d != g {
                scale_row(&mut w, &mut left, p, coprime_scaler(d, n));
            }
        }
    }

    // simultaneous permutation: zeros first, then weakly decreasing
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| {
        let d = w.get(i, i);
        if d == 0 {
            (0, 0)
        } else {
            (1, u64::MAX - d)
        }
    });
    let mut sorted = ZnMat::new(n, k, vec![0; k * k]);
    for (new, &old) in order.iter().enumerate() {
        sorted.set(new, new, w.get(old, old));
    }
    // permutation matrices: sorted = P w P^T with P row perm
    let mut pmat = ZnMat::new(n, k, vec![0; k * k]);
    for (new, &old) in order.iter().enumerate() {
        pmat.set(new, old, 1);
    }
    let mut pt = ZnMat::new(n, k, vec![0; k * k]);
    for (new, &old) in order.iter().enumerate() {
        pt.set(old, new, 1);
    }
    let left = zn_mul(&left, &pt)?;
    let right = zn_mul(&pmat, &right)?;
    let diag: Vec<u64> = (0..k).map(|i| sorted.get(i, i)).collect();

    debug_assert!(diag.iter().all(|&d| d == 0 || n % d == 0));
    debug_assert_eq!(zn_mul(&zn_mul(&left, &sorted)?, &right)?, *a);
    Ok(DiagonalForm { diag, left, right })
}

/// The generator family relative to the units: one diagonal matrix per
/// distinct prime divisor of the modulus, with `p mod n` in the corner.
pub fn xp_generators(n: u64, k: usize) -> Result<Vec<ZnMat>> {
    if n < 2 {
        return Err(Error::ModulusTooSmall);
    }
    Ok(prime_divisors(n)
        .into_iter()
        .map(|p| {
            let mut diag = vec![1u64; k];
            diag[0] = p % n;
            ZnMat::diagonal(n, &diag)
        })
        .collect())
}

/// All invertible k×k matrices over Z/nZ; errors when the full scan of
/// n^(k²) candidates would exceed `cap`.
pub fn enumerate_units(n: u64, k: usize, cap: usize) -> Result<Vec<ZnMat>> {
    let total = (n as u128).checked_pow((k * k) as u32).ok_or(Error::CapExceeded(cap))?;
    if total > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let mut out = Vec::new();
    let mut entries = vec![0u64; k * k];
    loop {
        let m = ZnMat::new(n, k, entries.clone());
        if m.is_unit() {
            out.push(m);
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == entries.len() {
                return Ok(out);
            }
            entries[pos] += 1;
            if entries[pos] < n {
                break;
            }
            entries[pos] = 0;
            pos += 1;
        }
    }
}

/// All n^(k²) matrices, for exhaustive checks at tiny scale.
pub fn all_matrices(n: u64, k: usize, cap: usize) -> Result<Vec<ZnMat>> {
    let total = (n as u128).checked_pow((k * k) as u32).ok_or(Error::CapExceeded(cap))?;
    if total > cap as u128 {
        return Err(Error::CapExceeded(cap));
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut entries = vec![0u64; k * k];
    loop {
        out.push(ZnMat::new(n, k, entries.clone()));
        let mut pos = 0;
        loop {
            if pos == entries.len() {
                return Ok(out);
            }
            entries[pos] += 1;
            if entries[pos] < n {
                break;
            }
            entries[pos] = 0;
            pos += 1;
        }
    }
}
