//! Bruhat order, weak orders, lower intervals, covers, and Poincare
//! polynomials.
//!
//! Bruhat comparison uses the descent recursion (pick a left descent `s` of
//! `w`; then `x <= w` iff `sx <= sw` when `sx < x`, else `x <= sw`), memoized
//! per top-level call. Interval enumeration walks Bruhat covers downward,
//! realizing covers as length-dropping products with root reflections, so no
//! ambient group enumeration is needed.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::Mat;
use crate::weyl::{SimpleSet, WeylElement, WeylGroup};

/// Default cap on interval enumerations.
pub const DEFAULT_INTERVAL_CAP: usize = 10_000_000;

/// Rank generating function of a lower Bruhat interval; `coeffs[k]` counts the
/// elements of length `k` below the element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincarePolynomial {
    pub coeffs: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    pub fn mul(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PoincarePolynomial { coeffs }
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        )
    }
}

/// Memo table for Bruhat queries within one computation.
#[derive(Default)]
pub struct BruhatMemo {
    memo: HashMap<(Mat, Mat), bool>,
}

impl BruhatMemo {
    pub fn new() -> BruhatMemo {
        BruhatMemo::default()
    }

    pub fn leq(&mut self, x: &WeylElement, w: &WeylElement) -> Result<bool> {
        if x.ctype() != w.ctype() {
            return Err(Error::SystemMismatch(x.ctype(), w.ctype()));
        }
        Ok(self.leq_inner(x, w))
    }

    fn leq_inner(&mut self, x: &WeylElement, w: &WeylElement) -> bool {
        if x.is_identity() {
            return true;
        }
        if x.length() > w.length() {
            return false;
        }
        if x.length() == w.length() {
            return x == w;
        }
        let key = (*x.action(), *w.action());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let i = w.left_descents().iter().next().expect("w is not the identity");
        let sw = w.simple_times(i);
        let sx = x.simple_times(i);
        let out = if sx.length() < x.length() {
            self.leq_inner(&sx, &sw)
        } else {
            self.leq_inner(x, &sw)
        };
        self.memo.insert(key, out);
        out
    }
}

/// Bruhat-Chevalley order with a fresh memo.
pub fn bruhat_leq(x: &WeylElement, w: &WeylElement) -> Result<bool> {
    BruhatMemo::new().leq(x, w)
}

/// Right weak order: inclusion of left inversion sets.
pub fn weak_leq_right(x: &WeylElement, w: &WeylElement) -> Result<bool> {
    if x.ctype() != w.ctype() {
        return Err(Error::SystemMismatch(x.ctype(), w.ctype()));
    }
    Ok(x.n_mask() & !w.n_mask() == 0)
}

/// Left weak order: inclusion of right inversion sets.
pub fn weak_leq_left(x: &WeylElement, w: &WeylElement) -> Result<bool> {
    if x.ctype() != w.ctype() {
        return Err(Error::SystemMismatch(x.ctype(), w.ctype()));
    }
    Ok(x.i_mask() & !w.i_mask() == 0)
}

/// Elements covered by `w` in Bruhat order: products with reflections that
/// drop the length by exactly one.
pub fn covers_bruhat(w: &WeylElement) -> Vec<WeylElement> {
    let sys = w.system();
    let target = w.length().wrapping_sub(1);
    let mut out = Vec::new();
    for b in 0..sys.num_positive() {
        let x = w.times_reflection(b);
        if x.length() == target {
            out.push(x);
        }
    }
    out
}

/// Elements covered by `w` in the right weak order: `w s` for right descents.
pub fn covers_weak_right(w: &WeylElement) -> Vec<WeylElement> {
    w.right_descents().iter().map(|i| w.times_simple(i)).collect()
}

/// Elements covered by `w` in the left weak order.
pub fn covers_weak_left(w: &WeylElement) -> Vec<WeylElement> {
    w.left_descents().iter().map(|i| w.simple_times(i)).collect()
}

/// The full lower Bruhat interval `[id, w]`, enumerated by walking covers
/// downward. Errors when the interval grows past `cap`.
pub fn lower_interval_bruhat(w: &WeylElement, cap: usize) -> Result<Vec<WeylElement>> {
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(*w.action());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        out.push(x.clone());
        if out.len() > cap {
            return Err(Error::ResourceCap { cap });
        }
        for c in covers_bruhat(&x) {
            if seen.insert(*c.action()) {
                queue.push_back(c);
            }
        }
    }
    Ok(out)
}

/// Poincare polynomial of `[id, w]`.
pub fn poincare(w: &WeylElement, cap: usize) -> Result<PoincarePolynomial> {
    let interval = lower_interval_bruhat(w, cap)?;
    let mut coeffs = vec![0u64; w.length() + 1];
    for x in &interval {
        coeffs[x.length()] += 1;
    }
    Ok(PoincarePolynomial { coeffs })
}

/// The set `{x in W^J : x <= v}` for `v in W^J`, obtained by projecting the
/// lower interval of `v` to minimal coset representatives.
pub fn quotient_interval(v: &WeylElement, j: SimpleSet, cap: usize) -> Result<Vec<WeylElement>> {
    let interval = lower_interval_bruhat(v, cap)?;
    let mut seen: HashSet<Mat> = HashSet::new();
    let mut out = Vec::new();
    for x in interval {
        let rep = x.min_coset_rep(j);
        if seen.insert(*rep.action()) {
            out.push(rep);
        }
    }
    Ok(out)
}

/// Poincare polynomial of the quotient interval, graded by length.
pub fn quotient_poincare(v: &WeylElement, j: SimpleSet, cap: usize) -> Result<PoincarePolynomial> {
    let set = quotient_interval(v, j, cap)?;
    let mut coeffs = vec![0u64; v.length() + 1];
    for x in &set {
        coeffs[x.length()] += 1;
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    Ok(PoincarePolynomial { coeffs })
}

/// Is `[id, v] meet W^J` totally ordered under the Bruhat order on `W^J`?
///
/// Errors when `v` is not a minimal-length coset representative.
pub fn is_chain_in_quotient(v: &WeylElement, j: SimpleSet, cap: usize) -> Result<bool> {
    if !v.is_min_coset_rep(j) {
        return Err(Error::NotMinimalCosetRep);
    }
    let set = quotient_interval(v, j, cap)?;
    let mut memo = BruhatMemo::new();
    for (a, x) in set.iter().enumerate() {
        for y in set.iter().skip(a + 1) {
            if !(memo.leq(x, y)? || memo.leq(y, x)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Whole-group order tables
// ---------------------------------------------------------------------------

/// Dense boolean matrix over group element indices.
pub struct OrderTable {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl OrderTable {
    fn new(n: usize) -> OrderTable {
        let words = n.div_ceil(64);
        OrderTable {
            n,
            words,
            bits: vec![0u64; n * words],
        }
    }

    fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1 << (col % 64);
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    fn or_row_into(&mut self, src: usize, dst: usize) {
        let (a, b) = (src * self.words, dst * self.words);
        for k in 0..self.words {
            let v = self.bits[a + k];
            self.bits[b + k] |= v;
        }
    }

    pub fn row_count(&self, row: usize) -> usize {
        (0..self.words)
            .map(|k| self.bits[row * self.words + k].count_ones() as usize)
            .sum()
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// Downset table for the Bruhat order on an enumerated group:
/// `table.get(w, x)` holds exactly when `x <= w`.
pub fn bruhat_downsets(group: &WeylGroup) -> OrderTable {
    let n = group.order();
    let mut table = OrderTable::new(n);
    // Elements are sorted by length, so covers are already processed.
    for k in 0..n {
        let w = group.get(k);
        table.set(k, k);
        for c in covers_bruhat(w) {
            let ci = group.index_of(&c);
            table.or_row_into(ci, k);
        }
    }
    table
}

/// Reachability table for the right weak order (cover steps `w -> w s`).
pub fn weak_right_downsets(group: &WeylGroup) -> OrderTable {
    let n = group.order();
    let mut table = OrderTable::new(n);
    for k in 0..n {
        let w = group.get(k);
        table.set(k, k);
        for c in covers_weak_right(w) {
            let ci = group.index_of(&c);
            table.or_row_into(ci, k);
        }
    }
    table
}

/// Number of maximal chains of the right weak order (paths from the identity
/// to the longest element through weak covers).
pub fn weak_maximal_chain_count(group: &WeylGroup) -> u64 {
    let n = group.order();
    let mut paths = vec![0u64; n];
    paths[0] = 1; // identity sorts first
    for k in 1..n {
        let w = group.get(k);
        let mut total = 0;
        for c in covers_weak_right(w) {
            total += paths[group.index_of(&c)];
        }
        paths[k] = total;
    }
    paths[n - 1]
}
