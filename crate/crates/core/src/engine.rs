//! Generic finite-monoid closure and verification: the brute-force oracle
//! layer behind every certification in this crate.
//!
//! The closure is a plain breadth-first pair closure (frontier × generators)
//! rather than a word-graph enumeration; the oracle role values simplicity
//! and auditability over speed.

use crate::boolmat::{row_space, BoolMat};
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::{HashMap, HashSet};
use std::hash::Hash;

/// Element of a finite monoid: an associative product plus value semantics.
pub trait Element: Clone + Eq + Hash + Send + Sync {
    fn product(&self, other: &Self) -> Self;
}

impl Element for BoolMat {
    fn product(&self, other: &Self) -> Self {
        crate::boolmat::mat_mul(self, other).expect("dimension mismatch in closure")
    }
}

/// Default element cap for closures.
pub const DEFAULT_CAP: usize = 50_000_000;

/// Frontier sizes below this expand serially; larger ones fan out per chunk.
const PARALLEL_THRESHOLD: usize = 1 << 14;

/// Result of a closure computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult<E> {
    /// All elements, in first-discovery (BFS) order.
    pub elements: Vec<E>,
    /// Shortest generator word per element, when tracking was requested:
    /// indices into the generator list.
    pub words: Option<Vec<Vec<usize>>>,
}

impl<E> ClosureResult<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The smallest product-closed superset of `gens`, capped at `cap` elements.
pub fn closure<E: Element>(gens: &[E], cap: usize) -> Result<ClosureResult<E>> {
    closure_impl(gens, cap, false)
}

/// Closure with shortest-word tracking. Deterministic: word assignment runs
/// in single-threaded breadth-first discovery order.
pub fn closure_with_words<E: Element>(gens: &[E], cap: usize) -> Result<ClosureResult<E>> {
    closure_impl(gens, cap, true)
}

fn closure_impl<E: Element>(gens: &[E], cap: usize, track_words: bool) -> Result<ClosureResult<E>> {
    assert!(!gens.is_empty(), "closure of an empty generating set");
    let mut index: HashMap<E, usize> = HashMap::new();
    let mut elements: Vec<E> = Vec::new();
    let mut words: Vec<Vec<usize>> = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
            if track_words {
                words.push(vec![gi]);
            }
        }
    }
    let mut frontier: Vec<usize> = (0..elements.len()).collect();
    while !frontier.is_empty() {
        if elements.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        // every word of length k+1 is (word of length k) * generator, so
        // right multiplication by generators reaches everything
        let products: Vec<(usize, usize, E)> =
            if !track_words && frontier.len() * gens.len() > PARALLEL_THRESHOLD {
                frontier
                    .par_iter()
                    .flat_map_iter(|&fi| {
                        let f = &elements[fi];
                        gens.iter()
                            .enumerate()
                            .map(move |(gi, g)| (fi, gi, f.product(g)))
                    })
                    .collect()
            } else {
                frontier
                    .iter()
                    .flat_map(|&fi| {
                        let f = &elements[fi];
                        gens.iter()
                            .enumerate()
                            .map(move |(gi, g)| (fi, gi, f.product(g)))
                    })
                    .collect()
            };
        let mut next = Vec::new();
        for (fi, gi, p) in products {
            if !index.contains_key(&p) {
                let id = elements.len();
                index.insert(p.clone(), id);
                elements.push(p);
                if track_words {
                    let mut w = words[fi].clone();
                    w.push(gi);
                    words.push(w);
                }
                next.push(id);
            }
        }
        if elements.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        frontier = next;
    }
    Ok(ClosureResult {
        elements,
        words: track_words.then_some(words),
    })
}

/// True iff removing any single generator strictly shrinks the closure.
/// Returns a redundant generator's index as witness otherwise.
pub fn is_irredundant<E: Element>(gens: &[E], cap: usize) -> Result<(bool, Option<usize>)> {
    let full = closure(gens, cap)?.len();
    for skip in 0..gens.len() {
        let rest: Vec<E> = gens
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, g)| g.clone())
            .collect();
        if rest.is_empty() {
            continue; // a single generator is trivially irredundant
        }
        if closure(&rest, cap)?.len() == full {
            return Ok((false, Some(skip)));
        }
    }
    Ok((true, None))
}

/// Probabilistic associativity spot-check on sampled triples; the closure
/// assumes associativity, so this is a cheap guard for foreign element types.
pub fn spot_check_associativity<E: Element>(elements: &[E], samples: usize, seed: u64) -> bool {
    if elements.is_empty() {
        return true;
    }
    // xorshift; no RNG dependency needed for a smoke test
    let mut state = seed | 1;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state as usize % elements.len()
    };
    for _ in 0..samples {
        let (a, b, c) = (&elements[next()], &elements[next()], &elements[next()]);
        if a.product(b).product(c) != a.product(&b.product(c)) {
            return false;
        }
    }
    true
}

/// Number of distinct row spaces over all of `M_n(B)` (the L-class count),
/// streamed via spans of row subsets instead of materializing the monoid:
/// every row space is spanned by at most `n` non-zero vectors, and every
/// such span occurs.
pub fn count_lclasses(n: usize) -> usize {
    assert!((1..=6).contains(&n), "L-class counting is desk-scale");
    let vectors: Vec<u64> = (1..(1u64 << n)).collect();
    // subsets of size 1..=n over the 2^n - 1 vectors; keyed by unique basis
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut stack: Vec<(usize, Vec<u64>)> = vec![(0, Vec::new())];
    while let Some((start, chosen)) = stack.pop() {
        if !chosen.is_empty() {
            let space = crate::boolmat::RowSpace::span(&chosen, n);
            seen.insert(space.basis().to_vec());
        }
        if chosen.len() == n {
            continue;
        }
        for (offset, &v) in vectors[start..].iter().enumerate() {
            let mut next = chosen.clone();
            next.push(v);
            stack.push((start + offset + 1, next));
        }
    }
    seen.len() + 1 // the zero space
}

/// Green's relations over an explicit element list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreensRelation {
    L,
    R,
    J,
    H,
}

impl std::str::FromStr for GreensRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(GreensRelation::L),
            "R" | "r" => Ok(GreensRelation::R),
            "J" | "j" => Ok(GreensRelation::J),
            "H" | "h" => Ok(GreensRelation::H),
            other => Err(Error::Parse(format!("unknown Green's relation {other:?}"))),
        }
    }
}

/// Partition `elements` by principal-ideal equality under the chosen
/// relation. Quadratic to cubic in the monoid size; strictly an oracle.
/// `elements` must be product-closed.
pub fn greens_classes<E: Element>(elements: &[E], relation: GreensRelation) -> Vec<Vec<usize>> {
    let index: HashMap<&E, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elements.len();
    let left_ideal = |i: usize| -> Vec<usize> {
        let mut ideal: Vec<bool> = vec![false; n];
        ideal[i] = true;
        for x in elements {
            ideal[index[&x.product(&elements[i])]] = true;
        }
        ideal
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j)
            .collect()
    };
    let right_ideal = |i: usize| -> Vec<usize> {
        let mut ideal: Vec<bool> = vec![false; n];
        ideal[i] = true;
        for x in elements {
            ideal[index[&elements[i].product(x)]] = true;
        }
        ideal
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j)
            .collect()
    };
    let two_sided = |i: usize| -> Vec<usize> {
        let mut ideal: Vec<bool> = vec![false; n];
        ideal[i] = true;
        for a in elements {
            let ax = a.product(&elements[i]);
            ideal[index[&ax]] = true;
            for b in elements {
                ideal[index[&ax.product(b)]] = true;
            }
            ideal[index[&elements[i].product(a)]] = true;
        }
        ideal
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j)
            .collect()
    };

    let keys: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| match relation {
            GreensRelation::L => left_ideal(i),
            GreensRelation::R => right_ideal(i),
            GreensRelation::J => two_sided(i),
            GreensRelation::H => {
                let mut k = left_ideal(i);
                k.push(usize::MAX); // separator between the two ideal keys
                k.extend(right_ideal(i));
                k
            }
        })
        .collect();

    let mut classes: HashMap<&Vec<usize>, Vec<usize>> = HashMap::new();
    for (i, key) in keys.iter().enumerate() {
        classes.entry(key).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}

/// J-class count of `M_n(B)` via canonical keys: reduce each matrix inside
/// its J-class and take the canonical similarity form. Avoids the quadratic
/// ideal computation; usable up to n = 4.
pub fn count_jclasses_via_keys(n: usize) -> usize {
    assert!((1..=4).contains(&n));
    let mut keys: HashSet<BoolMat> = HashSet::new();
    for bits in 0..(1u64 << (n * n)) {
        let rows: Vec<u64> = (0..n)
            .map(|i| bits >> (n * (n - 1 - i)) & ((1 << n) - 1))
            .collect();
        let a = BoolMat::from_row_bits(rows, n);
        keys.insert(crate::canonical::min_image_similarity(&reduce_in_jclass(&a)));
    }
    keys.len()
}

/// A reduced matrix J-equivalent to `a`: replace rows by the row basis
/// (padding with zero rows), then columns likewise, repeating until stable.
/// Each effective step removes at least one 1, so this terminates.
pub fn reduce_in_jclass(a: &BoolMat) -> BoolMat {
    let mut cur = a.clone();
    loop {
        let mut changed = false;
        let next = row_basis_pad(&cur);
        if next != cur {
            cur = next;
            changed = true;
        }
        let next = row_basis_pad(&cur.transpose()).transpose();
        if next != cur {
            cur = next;
            changed = true;
        }
        if !changed {
            debug_assert!(crate::boolmat::is_reduced(&cur));
            return cur;
        }
    }
}

fn row_basis_pad(a: &BoolMat) -> BoolMat {
    let n = a.ncols();
    let mut rows: Vec<u64> = crate::boolmat::row_basis(a)
        .iter()
        .map(|v| v.bits())
        .collect();
    let mut padded = vec![0u64; a.nrows() - rows.len().min(a.nrows())];
    padded.append(&mut rows);
    BoolMat::from_row_bits(padded, n)
}

/// L-class partition of a boolean-matrix set by ideals must agree with the
/// row-basis partition; exposed for cross-validation.
pub fn lclasses_agree_with_row_basis(elements: &[BoolMat]) -> bool {
    let by_ideal = greens_classes(elements, GreensRelation::L);
    let mut by_basis: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for (i, a) in elements.iter().enumerate() {
        let basis: Vec<u64> = crate::boolmat::row_basis(a).iter().map(|v| v.bits()).collect();
        by_basis.entry(basis).or_default().push(i);
    }
    let mut a: Vec<Vec<usize>> = by_ideal;
    let mut b: Vec<Vec<usize>> = by_basis.into_values().collect();
    for c in a.iter_mut().chain(b.iter_mut()) {
        c.sort_unstable();
    }
    a.sort();
    b.sort();
    a == b
}

/// The full row space of a matrix as a plain sorted vector, a convenience
/// for tests comparing spaces.
pub fn space_of(a: &BoolMat) -> Vec<u64> {
    row_space(a).elements().to_vec()
}
