//! Canonical Weyl group elements.
//!
//! An element is stored as the integer matrix of its action on the simple-root
//! basis, so equality, multiplication, and inversion are word-free. Both
//! inversion masks (left `N(w)` and right `I(w)`) are computed once at
//! construction from a single scan of the positive roots: a positive root sent
//! negative contributes its index to `I(w)` and the index of its (negated)
//! image to `N(w)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{mat_apply, mat_apply_n, mat_identity, mat_mul_n, CartanType, Family, Mat, Root, RootSystem, MAX_RANK};

/// A subset of the simple roots, as a bit mask over simple indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SimpleSet(u16);

impl SimpleSet {
    pub fn empty() -> SimpleSet {
        SimpleSet(0)
    }

    pub fn all(rank: usize) -> SimpleSet {
        SimpleSet(((1u32 << rank) - 1) as u16)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> SimpleSet {
        let mut s = 0u16;
        for i in it {
            assert!(i < MAX_RANK);
            s |= 1 << i;
        }
        SimpleSet(s)
    }

    pub fn from_mask(mask: u16) -> SimpleSet {
        SimpleSet(mask)
    }

    pub fn mask(&self) -> u16 {
        self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&self, i: usize) -> SimpleSet {
        SimpleSet(self.0 & !(1 << i))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: SimpleSet) -> SimpleSet {
        SimpleSet(self.0 | other.0)
    }

    pub fn intersect(&self, other: SimpleSet) -> SimpleSet {
        SimpleSet(self.0 & other.0)
    }

    pub fn minus(&self, other: SimpleSet) -> SimpleSet {
        SimpleSet(self.0 & !other.0)
    }

    pub fn complement(&self, rank: usize) -> SimpleSet {
        SimpleSet(!self.0 & SimpleSet::all(rank).0)
    }

    pub fn is_subset_of(&self, other: &SimpleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_RANK).filter(move |i| self.contains(*i))
    }

    /// Names like `["s1", "s3"]`, sorted.
    pub fn names(&self) -> Vec<String> {
        self.iter().map(|i| format!("s{}", i + 1)).collect()
    }
}

impl fmt::Display for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

impl Serialize for SimpleSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let names = self.names();
        let mut seq = s.serialize_seq(Some(names.len()))?;
        for n in names {
            seq.serialize_element(&n)?;
        }
        seq.end()
    }
}

/// A Weyl group element: its action matrix on the simple-root basis plus the
/// two cached inversion masks.
#[derive(Clone)]
pub struct WeylElement {
    sys: Arc<RootSystem>,
    action: Mat,
    /// N(w) = positive roots sent negative by w^{-1}.
    n_mask: u128,
    /// I(w) = positive roots sent negative by w.
    i_mask: u128,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.sys.ctype() == other.sys.ctype() && self.action == other.action
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({self})")
    }
}

impl WeylElement {
    pub(crate) fn from_action(sys: Arc<RootSystem>, action: Mat) -> WeylElement {
        let m = sys.num_positive();
        let rank = sys.rank();
        let mut n_mask = 0u128;
        let mut i_mask = 0u128;
        for b in 0..m {
            let img = mat_apply_n(&action, sys.root(b).raw(), rank);
            let img = Root::from_coords(img, sys.rank());
            if img.is_negative() {
                i_mask |= 1 << b;
                let idx = sys
                    .index_of(&img.negated())
                    .expect("action matrix does not permute the roots");
                n_mask |= 1 << idx;
            } else {
                debug_assert!(
                    sys.index_of(&img).is_some(),
                    "action matrix does not permute the roots"
                );
            }
        }
        debug_assert_eq!(n_mask.count_ones(), i_mask.count_ones());
        WeylElement {
            sys,
            action,
            n_mask,
            i_mask,
        }
    }

    pub fn identity(sys: &Arc<RootSystem>) -> WeylElement {
        WeylElement::from_action(Arc::clone(sys), mat_identity())
    }

    pub fn simple_reflection(sys: &Arc<RootSystem>, i: usize) -> Result<WeylElement> {
        if i >= sys.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: sys.rank(),
            });
        }
        let mut mat = mat_identity();
        for j in 0..sys.rank() {
            mat[i * 8 + j] -= sys.cartan(i, j);
        }
        Ok(WeylElement::from_action(Arc::clone(sys), mat))
    }

    /// Product of simple reflections in word order; non-reduced words are
    /// fine, cancellation is handled by the matrix product.
    pub fn from_word(sys: &Arc<RootSystem>, word: &[usize]) -> Result<WeylElement> {
        let mut acc = mat_identity();
        for &i in word {
            if i >= sys.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: sys.rank(),
                });
            }
            let mut s = mat_identity();
            for j in 0..sys.rank() {
                s[i * 8 + j] -= sys.cartan(i, j);
            }
            acc = mat_mul_n(&acc, &s, sys.rank());
        }
        Ok(WeylElement::from_action(Arc::clone(sys), acc))
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.sys
    }

    pub fn ctype(&self) -> CartanType {
        self.sys.ctype()
    }

    pub(crate) fn action(&self) -> &Mat {
        &self.action
    }

    pub fn is_identity(&self) -> bool {
        self.action == mat_identity()
    }

    pub fn length(&self) -> usize {
        self.n_mask.count_ones() as usize
    }

    /// Mask of N(w) over positive-root indices.
    pub fn n_mask(&self) -> u128 {
        self.n_mask
    }

    /// Mask of I(w) over positive-root indices.
    pub fn i_mask(&self) -> u128 {
        self.i_mask
    }

    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.sys.ctype() != other.sys.ctype() {
            return Err(Error::SystemMismatch(self.sys.ctype(), other.sys.ctype()));
        }
        Ok(WeylElement::from_action(
            Arc::clone(&self.sys),
            mat_mul_n(&self.action, &other.action, self.sys.rank()),
        ))
    }

    /// Right-multiplies by `s_i`.
    pub fn times_simple(&self, i: usize) -> WeylElement {
        let mut s = mat_identity();
        for j in 0..self.sys.rank() {
            s[i * 8 + j] -= self.sys.cartan(i, j);
        }
        WeylElement::from_action(Arc::clone(&self.sys), mat_mul_n(&self.action, &s, self.sys.rank()))
    }

    /// Left-multiplies by `s_i`.
    pub fn simple_times(&self, i: usize) -> WeylElement {
        let mut s = mat_identity();
        for j in 0..self.sys.rank() {
            s[i * 8 + j] -= self.sys.cartan(i, j);
        }
        WeylElement::from_action(Arc::clone(&self.sys), mat_mul_n(&s, &self.action, self.sys.rank()))
    }

    /// Right-multiplies by the reflection through the positive root at `index`.
    pub fn times_reflection(&self, index: usize) -> WeylElement {
        let t = self.sys.reflection_matrix(index);
        WeylElement::from_action(Arc::clone(&self.sys), mat_mul_n(&self.action, t, self.sys.rank()))
    }

    pub fn inverse(&self) -> WeylElement {
        // w permutes the roots; read the inverse off the signed permutation of
        // the positive roots instead of inverting the matrix numerically.
        let m = self.sys.num_positive();
        let n = self.sys.rank();
        let mut pre: Vec<(usize, i32)> = vec![(0, 0); m];
        for b in 0..m {
            let img = mat_apply_n(&self.action, self.sys.root(b).raw(), n);
            let img = Root::from_coords(img, n);
            if img.is_positive() {
                let c = self.sys.index_of(&img).expect("not a root permutation");
                pre[c] = (b, 1);
            } else {
                let c = self.sys.index_of(&img.negated()).expect("not a root permutation");
                pre[c] = (b, -1);
            }
        }
        let mut inv = [0i32; 64];
        for j in 0..n {
            let (b, sign) = pre[j];
            let coords = self.sys.root(b).raw();
            for r in 0..n {
                inv[r * 8 + j] = sign * coords[r];
            }
        }
        for j in n..8 {
            inv[j * 8 + j] = 1;
        }
        WeylElement::from_action(Arc::clone(&self.sys), inv)
    }

    /// Applies the element to an arbitrary root.
    pub fn apply(&self, r: &Root) -> Result<Root> {
        if !self.sys.is_root(r) {
            return Err(Error::NotARoot(r.coords().iter().map(|&c| c as i64).collect()));
        }
        Ok(Root::from_coords(mat_apply(&self.action, r.raw()), self.sys.rank()))
    }

    /// Image of the positive root at `index`, as (table index, stayed positive).
    pub fn apply_positive(&self, index: usize) -> (usize, bool) {
        let img = mat_apply_n(&self.action, self.sys.root(index).raw(), self.sys.rank());
        let img = Root::from_coords(img, self.sys.rank());
        if img.is_positive() {
            (self.sys.index_of(&img).expect("not a root permutation"), true)
        } else {
            (
                self.sys.index_of(&img.negated()).expect("not a root permutation"),
                false,
            )
        }
    }

    /// Left descents: simple roots in N(w).
    pub fn left_descents(&self) -> SimpleSet {
        SimpleSet((self.n_mask & 0xff) as u16 & SimpleSet::all(self.sys.rank()).0)
    }

    /// Right descents: simple roots in I(w).
    pub fn right_descents(&self) -> SimpleSet {
        SimpleSet((self.i_mask & 0xff) as u16 & SimpleSet::all(self.sys.rank()).0)
    }

    /// Support: the simple letters used by any reduced word, recovered by
    /// greedily stripping left descents down to the identity.
    pub fn support(&self) -> SimpleSet {
        let mut out = SimpleSet::empty();
        let mut w = self.clone();
        while !w.is_identity() {
            let i = w
                .left_descents()
                .iter()
                .next()
                .expect("non-identity element with no descent");
            out.insert(i);
            w = w.simple_times(i);
        }
        out
    }

    /// Minimal-length representative of the coset `w W_J`, reached by
    /// stripping right descents inside `J`. The result `v` satisfies
    /// `v(Phi_J^+) > 0` and `w = v u` with `u` in `W_J`, lengths additive.
    pub fn min_coset_rep(&self, j: SimpleSet) -> WeylElement {
        let mut v = self.clone();
        loop {
            let d = v.right_descents().intersect(j);
            match d.iter().next() {
                Some(i) => v = v.times_simple(i),
                None => return v,
            }
        }
    }

    /// Splits `w = v u` with `v` in `W^J` and `u` in `W_J`.
    pub fn decompose_right(&self, j: SimpleSet) -> (WeylElement, WeylElement) {
        let v = self.min_coset_rep(j);
        let u = v.inverse().multiply(self).expect("same system");
        debug_assert_eq!(self.length(), v.length() + u.length());
        (v, u)
    }

    /// True when `w(Phi_J^+) > 0`, i.e. `w` is the minimal representative of
    /// its coset modulo `W_J`.
    pub fn is_min_coset_rep(&self, j: SimpleSet) -> bool {
        self.right_descents().intersect(j).is_empty()
    }

    /// Lexicographically minimal reduced word.
    pub fn lex_min_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while !w.is_identity() {
            let i = w.left_descents().iter().next().expect("descent exists");
            word.push(i);
            w = w.simple_times(i);
        }
        word
    }

    /// One-line permutation of {1..n+1} for type A elements.
    pub fn to_permutation(&self) -> Result<Vec<usize>> {
        if self.sys.ctype().family() != Family::A {
            return Err(Error::Precondition(
                "a type A system for one-line permutation form".into(),
            ));
        }
        let r = self.sys.rank();
        let n = r + 1;
        // w(alpha_j) = e_{w(j)} - e_{w(j+1)}; read the permutation off the
        // +1/-1 positions of the images in the e-basis.
        let mut perm = vec![0usize; n];
        let mut prev_minus = 0usize;
        for j in 0..r {
            let img = mat_apply(&self.action, self.sys.root(j).raw());
            let mut plus = None;
            let mut minus = None;
            let mut carry = 0i32;
            for (k, e) in (0..n).map(|k| {
                let c = if k < r { img[k] } else { 0 };
                let val = c - carry;
                carry = c;
                (k, val)
            }) {
                match e {
                    1 => plus = Some(k + 1),
                    -1 => minus = Some(k + 1),
                    0 => {}
                    _ => unreachable!("image of a simple root is not e_a - e_b"),
                }
            }
            let (a, b) = (plus.unwrap(), minus.unwrap());
            if j > 0 {
                debug_assert_eq!(a, prev_minus);
            }
            perm[j] = a;
            prev_minus = b;
        }
        perm[r] = prev_minus;
        if r == 0 {
            perm[0] = 1;
        }
        Ok(perm)
    }

    /// Builds the element whose one-line form is `perm` (type A only), with
    /// `s_i` the adjacent transposition (i, i+1).
    pub fn from_permutation(sys: &Arc<RootSystem>, perm: &[usize]) -> Result<WeylElement> {
        if sys.ctype().family() != Family::A {
            return Err(Error::Precondition(
                "a type A system for one-line permutation form".into(),
            ));
        }
        let n = sys.rank() + 1;
        let mut seen = vec![false; n + 1];
        if perm.len() != n {
            return Err(Error::NotAPermutation(perm.to_vec(), n));
        }
        for &p in perm {
            if p == 0 || p > n || seen[p] {
                return Err(Error::NotAPermutation(perm.to_vec(), n));
            }
            seen[p] = true;
        }
        // column j = e_{perm(j)} - e_{perm(j+1)} in root coordinates:
        // e_a - e_b = sum of alpha_k for k in [a, b) (or negated).
        let mut mat = mat_identity();
        for j in 0..sys.rank() {
            let (a, b) = (perm[j], perm[j + 1]);
            for r in 0..sys.rank() {
                mat[r * 8 + j] = 0;
            }
            let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
            for k in lo..hi {
                mat[(k - 1) * 8 + j] = sign;
            }
        }
        Ok(WeylElement::from_action(Arc::clone(sys), mat))
    }

    /// Canonical printable form: one-line digits for type A (comma-separated
    /// past 9 letters), otherwise the lexicographically minimal reduced word.
    pub fn canonical_string(&self) -> String {
        if self.sys.ctype().family() == Family::A {
            let p = self.to_permutation().expect("type A");
            if p.len() <= 9 {
                p.iter().map(|d| d.to_string()).collect()
            } else {
                p.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            }
        } else if self.is_identity() {
            "e".to_string()
        } else {
            self.lex_min_word()
                .iter()
                .map(|i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.canonical_string())
    }
}

/// Longest element of the standard parabolic subgroup `W_J`: the unique
/// element of `W_J` whose inversion set is all of `Phi_J^+`.
pub fn longest_element(sys: &Arc<RootSystem>, j: SimpleSet) -> WeylElement {
    let mut w = WeylElement::identity(sys);
    loop {
        // any J-ascent extends the element inside W_J
        let asc = j.minus(w.right_descents());
        match asc.iter().next() {
            Some(i) => w = w.times_simple(i),
            None => return w,
        }
    }
}

/// A fully enumerated Weyl group, elements sorted by (length, canonical form).
pub struct WeylGroup {
    sys: Arc<RootSystem>,
    elements: Vec<WeylElement>,
    index: HashMap<Mat, usize>,
}

impl WeylGroup {
    /// Breadth-first enumeration from the identity. Errors when |W| (known in
    /// advance from the type) exceeds `cap`.
    pub fn enumerate(sys: &Arc<RootSystem>, cap: usize) -> Result<WeylGroup> {
        if sys.ctype().weyl_order() > cap as u128 {
            return Err(Error::ResourceCap { cap });
        }
        let mut elements = vec![WeylElement::identity(sys)];
        let mut seen: HashMap<Mat, ()> = HashMap::new();
        seen.insert(*elements[0].action(), ());
        let mut frontier = elements.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..sys.rank() {
                    let x = w.times_simple(i);
                    if !seen.contains_key(x.action()) {
                        seen.insert(*x.action(), ());
                        next.push(x.clone());
                        elements.push(x);
                    }
                }
            }
            frontier = next;
        }
        elements.sort_by(|a, b| {
            a.length()
                .cmp(&b.length())
                .then_with(|| a.canonical_string().cmp(&b.canonical_string()))
        });
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (*w.action(), k))
            .collect();
        Ok(WeylGroup {
            sys: Arc::clone(sys),
            elements,
            index,
        })
    }

    pub fn system(&self) -> &Arc<RootSystem> {
        &self.sys
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[w.action()]
    }

    pub fn get(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }
}
