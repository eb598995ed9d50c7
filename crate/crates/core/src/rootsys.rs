//! Finite crystallographic root systems.
//!
//! A [`RootSystem`] is immutable Cartan datum: the Cartan matrix, the table of
//! positive roots in simple-root coordinates, and reflection tables. All
//! downstream combinatorics (Weyl elements, inversion sets, orders) index
//! positive roots by their position in the canonical table, so the table
//! order is part of the contract: simple roots first (by index), then
//! increasing height, ties broken lexicographically on coordinates.
//!
//! Subsets of the positive roots are fixed-width bit masks ([`RootSubset`]).
//! Closure is tested with integer root combinations, convexity with exact
//! rational cone membership; no floating point is used anywhere.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard upper bound on the rank (E8).
pub const MAX_RANK: usize = 8;
/// Hard upper bound on the number of positive roots (E8).
pub const MAX_POSITIVE_ROOTS: usize = 120;

/// Simple Lie type families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A Cartan type: family plus rank, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    /// Rank constraints: A requires n >= 1, B and C require n >= 2,
    /// D requires n >= 4, E requires n in {6,7,8}, F requires 4, G requires 2.
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        let within = rank <= MAX_RANK;
        if ok && within {
            Ok(CartanType { family, rank })
        } else {
            let constraint = match family {
                Family::A => "A requires 1 <= n <= 8",
                Family::B => "B requires 2 <= n <= 8",
                Family::C => "C requires 2 <= n <= 8",
                Family::D => "D requires 4 <= n <= 8",
                Family::E => "E requires n in {6, 7, 8}",
                Family::F => "F requires n = 4",
                Family::G => "G requires n = 2",
            };
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                constraint,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// |W| for this type, computed from the classification formulas.
    pub fn weyl_order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        let n = self.rank;
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// |Phi^+| for this type.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// 8x8 integer matrix acting on the simple-root basis, identity-padded beyond
/// the rank so whole-array comparison and hashing are rank-independent.
/// Entry `m[r * 8 + c]` is the coefficient of `alpha_r` in the image of
/// `alpha_c`.
pub(crate) type Mat = [i32; 64];

pub(crate) fn mat_identity() -> Mat {
    let mut m = [0i32; 64];
    for i in 0..8 {
        m[i * 8 + i] = 1;
    }
    m
}

pub(crate) fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    mat_mul_n(a, b, 8)
}

/// Product of two identity-padded matrices, touching only the leading
/// `n x n` block (the rest stays identity).
pub(crate) fn mat_mul_n(a: &Mat, b: &Mat, n: usize) -> Mat {
    let mut out = [0i32; 64];
    for i in n..8 {
        out[i * 8 + i] = 1;
    }
    for r in 0..n {
        for k in 0..n {
            let av = a[r * 8 + k];
            if av == 0 {
                continue;
            }
            for c in 0..n {
                out[r * 8 + c] += av * b[k * 8 + c];
            }
        }
    }
    out
}

pub(crate) fn mat_apply(m: &Mat, v: &[i32; MAX_RANK]) -> [i32; MAX_RANK] {
    mat_apply_n(m, v, 8)
}

pub(crate) fn mat_apply_n(m: &Mat, v: &[i32; MAX_RANK], n: usize) -> [i32; MAX_RANK] {
    let mut out = [0i32; MAX_RANK];
    for r in 0..n {
        let mut acc = 0i32;
        for c in 0..n {
            acc += m[r * 8 + c] * v[c];
        }
        out[r] = acc;
    }
    out
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    coords: [i32; MAX_RANK],
    rank: u8,
}

impl Root {
    pub(crate) fn from_coords(coords: [i32; MAX_RANK], rank: usize) -> Root {
        Root {
            coords,
            rank: rank as u8,
        }
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.rank as usize]
    }

    pub(crate) fn raw(&self) -> &[i32; MAX_RANK] {
        &self.coords
    }

    /// All coordinates >= 0 and not all zero.
    pub fn is_positive(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0) && self.coords().iter().any(|&c| c != 0)
    }

    /// All coordinates <= 0 and not all zero.
    pub fn is_negative(&self) -> bool {
        self.coords().iter().all(|&c| c <= 0) && self.coords().iter().any(|&c| c != 0)
    }

    pub fn height(&self) -> i32 {
        self.coords().iter().sum()
    }

    pub fn negated(&self) -> Root {
        let mut coords = self.coords;
        for c in &mut coords {
            *c = -*c;
        }
        Root {
            coords,
            rank: self.rank,
        }
    }

    /// Simple indices with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords().iter().enumerate().filter_map(|(i, &c)| (c != 0).then_some(i))
    }
}

impl fmt::Display for Root {
    /// Additive notation over the simple roots, e.g. `a1+2a2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords().iter().all(|&c| c == 0) {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coords().iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rank as usize))?;
        for c in self.coords() {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// Cartan matrix with the convention `C[i][j] = <alpha_j, alpha_i^v>`, so that
/// `s_i(alpha_j) = alpha_j - C[i][j] alpha_i`.
///
/// Node numbering is Bourbaki for A/B/C/F, and for D and E it follows the
/// diagrams used throughout this crate: D_n has fork leaves 1, 2 joined to
/// node 3 and then a chain 3-4-...-n; E_n has a chain 2-3-...-n with node 1
/// attached to node 4. G2 takes alpha_1 long.
pub(crate) fn cartan_matrix(ctype: CartanType) -> [[i32; MAX_RANK]; MAX_RANK] {
    let n = ctype.rank();
    let mut c = [[0i32; MAX_RANK]; MAX_RANK];
    for i in 0..n {
        c[i][i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match ctype.family() {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            // alpha_n short: <alpha_{n-1}, alpha_n^v> = -2.
            c[n - 1][n - 2] = -2;
        }
        Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            // alpha_n long: <alpha_n, alpha_{n-1}^v> = -2.
            c[n - 2][n - 1] = -2;
        }
        Family::D => {
            link(0, 2);
            link(1, 2);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::E => {
            link(0, 3);
            for i in 1..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
            c[2][1] = -2;
        }
        Family::G => {
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    c
}

/// Entry of the simple-reflection table: the image of a positive root under a
/// simple reflection, which is either another positive root or the negated
/// simple root itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reflected {
    Positive(usize),
    NegatedSimple,
}

/// Immutable Cartan datum for one finite crystallographic root system.
#[derive(Debug)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: [[i32; MAX_RANK]; MAX_RANK],
    roots: Vec<Root>,
    index: HashMap<[i32; MAX_RANK], u16>,
    /// `refl[b][i]` is the positive-root table position of `s_i(beta_b)`.
    refl: Vec<[Reflected; MAX_RANK]>,
    reflection_mats: OnceLock<Vec<Mat>>,
    combo_table: OnceLock<Vec<u128>>,
}

/// Builds the root system for `ctype` by closing the simple roots under the
/// simple reflections.
pub fn build_root_system(ctype: CartanType) -> Arc<RootSystem> {
    Arc::new(RootSystem::build(ctype))
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Arc<RootSystem>> {
        Ok(build_root_system(CartanType::new(family, rank)?))
    }

    fn build(ctype: CartanType) -> RootSystem {
        let n = ctype.rank();
        let cartan = cartan_matrix(ctype);

        // Closure of the simple roots under all s_i, keeping positive vectors.
        let mut seen: HashMap<[i32; MAX_RANK], ()> = HashMap::new();
        let mut queue: Vec<[i32; MAX_RANK]> = Vec::new();
        for i in 0..n {
            let mut v = [0i32; MAX_RANK];
            v[i] = 1;
            seen.insert(v, ());
            queue.push(v);
        }
        let reflect_vec = |v: &[i32; MAX_RANK], i: usize| -> [i32; MAX_RANK] {
            let pairing: i32 = (0..n).map(|j| cartan[i][j] * v[j]).sum();
            let mut out = *v;
            out[i] -= pairing;
            out
        };
        while let Some(v) = queue.pop() {
            for i in 0..n {
                let w = reflect_vec(&v, i);
                if w.iter().all(|&c| c >= 0) && !seen.contains_key(&w) {
                    seen.insert(w, ());
                    queue.push(w);
                }
            }
        }

        // Canonical order: simples by index, then height, ties lexicographic.
        let mut roots: Vec<Root> = seen.keys().map(|v| Root::from_coords(*v, n)).collect();
        roots.sort_by(|a, b| {
            let (ha, hb) = (a.height(), b.height());
            if ha == 1 && hb == 1 {
                let ia = a.coords().iter().position(|&c| c == 1).unwrap();
                let ib = b.coords().iter().position(|&c| c == 1).unwrap();
                return ia.cmp(&ib);
            }
            ha.cmp(&hb).then_with(|| a.coords().cmp(b.coords()))
        });
        assert_eq!(
            roots.len(),
            ctype.positive_root_count(),
            "closure generated the wrong number of positive roots for {ctype}"
        );

        let index: HashMap<[i32; MAX_RANK], u16> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (*r.raw(), k as u16))
            .collect();

        let mut refl = Vec::with_capacity(roots.len());
        for (b, r) in roots.iter().enumerate() {
            let mut row = [Reflected::NegatedSimple; MAX_RANK];
            for (i, entry) in row.iter_mut().enumerate().take(n) {
                let img = reflect_vec(r.raw(), i);
                if img.iter().all(|&c| c >= 0) {
                    *entry = Reflected::Positive(index[&img] as usize);
                } else {
                    // s_i sends exactly alpha_i to a negative root.
                    assert_eq!(b, i, "simple reflection failed to permute the other positive roots");
                }
            }
            refl.push(row);
        }

        RootSystem {
            ctype,
            cartan,
            roots,
            index,
            refl,
            reflection_mats: OnceLock::new(),
            combo_table: OnceLock::new(),
        }
    }

    pub fn ctype(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        self.cartan[i][j]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    /// Table position of a positive root, if the vector is one.
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r.raw()).map(|&k| k as usize)
    }

    pub fn reflect_index(&self, i: usize, b: usize) -> Reflected {
        self.refl[b][i]
    }

    /// Applies `s_i` to an arbitrary root of the system.
    pub fn reflect(&self, i: usize, r: &Root) -> Result<Root> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        if !self.is_root(r) {
            return Err(Error::NotARoot(r.coords().iter().map(|&c| c as i64).collect()));
        }
        let pairing: i32 = (0..self.rank()).map(|j| self.cartan[i][j] * r.raw()[j]).sum();
        let mut out = *r.raw();
        out[i] -= pairing;
        Ok(Root::from_coords(out, self.rank()))
    }

    pub fn is_root(&self, r: &Root) -> bool {
        if r.is_positive() {
            self.index.contains_key(r.raw())
        } else if r.is_negative() {
            self.index.contains_key(r.negated().raw())
        } else {
            false
        }
    }

    /// Matrix of the reflection through the positive root at `index`,
    /// obtained by conjugating a simple reflection along the closure tree.
    pub(crate) fn reflection_matrix(&self, index: usize) -> &Mat {
        &self.reflection_matrices()[index]
    }

    pub(crate) fn reflection_matrices(&self) -> &Vec<Mat> {
        self.reflection_mats.get_or_init(|| {
            let n = self.rank();
            let m = self.num_positive();
            // column j of s_i is alpha_j - C[i][j] alpha_i
            let simple: Vec<Mat> = (0..n)
                .map(|i| {
                    let mut mat = mat_identity();
                    for j in 0..n {
                        mat[i * 8 + j] -= self.cartan[i][j];
                    }
                    mat
                })
                .collect();
            let mut mats: Vec<Option<Mat>> = vec![None; m];
            for i in 0..n {
                mats[i] = Some(simple[i]);
            }
            // Height induction: every non-simple positive root has a simple
            // reflection lowering it.
            let mut order: Vec<usize> = (0..m).collect();
            order.sort_by_key(|&b| self.roots[b].height());
            for &b in &order {
                if mats[b].is_some() {
                    continue;
                }
                let mut found = None;
                for i in 0..n {
                    if let Reflected::Positive(c) = self.refl[b][i] {
                        if self.roots[c].height() < self.roots[b].height() {
                            found = Some((i, c));
                            break;
                        }
                    }
                }
                let (i, c) = found.expect("non-simple root with no lowering reflection");
                let inner = mats[c].expect("lower root computed first");
                mats[b] = Some(mat_mul(&simple[i], &mat_mul(&inner, &simple[i])));
            }
            mats.into_iter().map(|m| m.unwrap()).collect()
        })
    }

    /// `combo[a * m + b]` is the mask of positive roots expressible as
    /// `x * beta_a + y * beta_b` with integers x, y >= 1.
    fn combo_table(&self) -> &Vec<u128> {
        self.combo_table.get_or_init(|| {
            let m = self.num_positive();
            let n = self.rank();
            let mut table = vec![0u128; m * m];
            for a in 0..m {
                for b in (a + 1)..m {
                    let ra = self.roots[a].raw();
                    let rb = self.roots[b].raw();
                    let mut mask = 0u128;
                    for (g, rg) in self.roots.iter().enumerate() {
                        let target = rg.raw();
                        let max_x = rg.height() / self.roots[a].height();
                        'xs: for x in 1..=max_x.max(0) {
                            let mut rem = [0i32; MAX_RANK];
                            for k in 0..n {
                                rem[k] = target[k] - x * ra[k];
                            }
                            // rem must be y * rb for an integer y >= 1
                            let pivot = (0..n).find(|&k| rb[k] != 0).unwrap();
                            if rem[pivot] % rb[pivot] != 0 {
                                continue;
                            }
                            let y = rem[pivot] / rb[pivot];
                            if y < 1 {
                                continue;
                            }
                            if (0..n).all(|k| rem[k] == y * rb[k]) {
                                mask |= 1u128 << g;
                                break 'xs;
                            }
                        }
                    }
                    table[a * m + b] = mask;
                    table[b * m + a] = mask;
                }
            }
            table
        })
    }
}

// ---------------------------------------------------------------------------
// Root subsets
// ---------------------------------------------------------------------------

/// A subset of the positive roots of one system, as a fixed-width bit mask
/// over table positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSubset {
    mask: u128,
    width: u8,
}

impl RootSubset {
    pub fn empty(sys: &RootSystem) -> RootSubset {
        RootSubset {
            mask: 0,
            width: sys.num_positive() as u8,
        }
    }

    pub fn full(sys: &RootSystem) -> RootSubset {
        let w = sys.num_positive();
        RootSubset {
            mask: full_mask(w),
            width: w as u8,
        }
    }

    pub fn from_mask(sys: &RootSystem, mask: u128) -> RootSubset {
        let w = sys.num_positive();
        assert_eq!(mask & !full_mask(w), 0, "mask wider than the positive-root table");
        RootSubset {
            mask,
            width: w as u8,
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(sys: &RootSystem, it: I) -> RootSubset {
        let mut mask = 0u128;
        for i in it {
            assert!(i < sys.num_positive());
            mask |= 1u128 << i;
        }
        RootSubset {
            mask,
            width: sys.num_positive() as u8,
        }
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        self.mask >> index & 1 == 1
    }

    pub fn complement(&self) -> RootSubset {
        RootSubset {
            mask: !self.mask & full_mask(self.width as usize),
            width: self.width,
        }
    }

    pub fn is_subset_of(&self, other: &RootSubset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let w = self.width as usize;
        (0..w).filter(move |&i| self.contains(i))
    }

    /// Human-readable additive notation, e.g. `{a1, a1+a2}`.
    pub fn display(&self, sys: &RootSystem) -> String {
        let parts: Vec<String> = self.indices().map(|i| sys.root(i).to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl Serialize for RootSubset {
    /// Serializes as the sorted list of positive-root indices.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for i in self.indices() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

pub(crate) fn full_mask(width: usize) -> u128 {
    if width >= 128 {
        u128::MAX
    } else {
        (1u128 << width) - 1
    }
}

impl RootSystem {
    /// Positive roots supported on the simple indices in `I` (the positive
    /// half of the standard subsystem generated by `I`).
    pub fn sub_positive_mask(&self, simples: crate::weyl::SimpleSet) -> u128 {
        let mut mask = 0u128;
        for (b, r) in self.roots.iter().enumerate() {
            if r.support().all(|i| simples.contains(i)) {
                mask |= 1u128 << b;
            }
        }
        mask
    }

    pub fn sub_root_subset(&self, simples: crate::weyl::SimpleSet) -> RootSubset {
        RootSubset {
            mask: self.sub_positive_mask(simples),
            width: self.num_positive() as u8,
        }
    }

    /// Closed: for every pair in the set, all positive roots that are
    /// positive-integer combinations of the pair stay in the set.
    pub fn is_closed(&self, set: &RootSubset) -> bool {
        self.closure_violation(set.mask).is_none()
    }

    pub fn is_coclosed(&self, set: &RootSubset) -> bool {
        self.is_closed(&set.complement())
    }

    pub fn is_biclosed(&self, set: &RootSubset) -> bool {
        self.is_closed(set) && self.is_coclosed(set)
    }

    /// Fast-path biclosed test on a raw mask.
    pub fn is_biclosed_mask(&self, mask: u128) -> bool {
        self.closure_violation(mask).is_none()
            && self.closure_violation(!mask & full_mask(self.num_positive())).is_none()
    }

    /// First pair (a, b) in the set whose integer span escapes the set.
    pub(crate) fn closure_violation(&self, mask: u128) -> Option<(usize, usize)> {
        let m = self.num_positive();
        let table = self.combo_table();
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut rest2 = rest;
            while rest2 != 0 {
                let b = rest2.trailing_zeros() as usize;
                rest2 &= rest2 - 1;
                if table[a * m + b] & !mask != 0 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Convex: the rational cone generated by the set meets the root system in
    /// exactly the set. Only positive roots can lie in such a cone, so this
    /// checks that no outside positive root is a nonnegative rational
    /// combination of the set.
    pub fn is_convex(&self, set: &RootSubset) -> bool {
        let gens: Vec<&Root> = set.indices().map(|i| self.root(i)).collect();
        for g in 0..self.num_positive() {
            if set.contains(g) {
                continue;
            }
            if in_rational_cone(self.rank(), &gens, self.root(g)) {
                return false;
            }
        }
        true
    }

    pub fn is_coconvex(&self, set: &RootSubset) -> bool {
        self.is_convex(&set.complement())
    }

    pub fn is_biconvex(&self, set: &RootSubset) -> bool {
        self.is_convex(set) && self.is_coconvex(set)
    }
}

/// Exact feasibility of `target = sum lambda_k gens_k` with `lambda_k >= 0`,
/// by phase-one simplex over arbitrary-precision rationals. Bland's rule
/// (smallest-index entering column, smallest-index tie-break on leaving)
/// guarantees termination.
fn in_rational_cone(dim: usize, gens: &[&Root], target: &Root) -> bool {
    if gens.is_empty() {
        return target.coords().iter().all(|&c| c == 0);
    }
    let k = gens.len();
    // Tableau rows: dim constraints; columns: k real vars, dim artificials
    // (cost 1 each), rhs. Rows are sign-normalized so the rhs starts >= 0.
    let cols = k + dim + 1;
    let mut t: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols]; dim];
    for r in 0..dim {
        let sign = if target.raw()[r] >= 0 { 1 } else { -1 };
        for (c, g) in gens.iter().enumerate() {
            t[r][c] = BigRational::from_integer((sign * g.raw()[r]).into());
        }
        t[r][k + r] = BigRational::one();
        t[r][cols - 1] = BigRational::from_integer((sign * target.raw()[r]).into());
    }
    let mut basis: Vec<usize> = (k..k + dim).collect();
    let cost = |col: usize| col >= k; // artificial columns cost 1
    loop {
        // reduced cost of column j: c_j - sum over rows with an artificial
        // basic variable of t[r][j]
        let mut entering = None;
        for j in 0..cols - 1 {
            if basis.contains(&j) {
                continue;
            }
            let mut rc = if cost(j) { BigRational::one() } else { BigRational::zero() };
            for r in 0..dim {
                if cost(basis[r]) {
                    rc -= &t[r][j];
                }
            }
            if rc < BigRational::zero() {
                entering = Some(j);
                break; // Bland: smallest index
            }
        }
        let Some(j) = entering else { break };
        let mut leaving: Option<(usize, BigRational)> = None;
        for r in 0..dim {
            if t[r][j] > BigRational::zero() {
                let ratio = &t[r][cols - 1] / &t[r][j];
                match &leaving {
                    None => leaving = Some((r, ratio)),
                    Some((lr, lratio)) => {
                        if ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr]) {
                            leaving = Some((r, ratio));
                        }
                    }
                }
            }
        }
        let Some((r, _)) = leaving else {
            // phase-one objective is bounded below by zero, so an unbounded
            // ray cannot occur with a negative reduced cost
            unreachable!("unbounded phase-one simplex");
        };
        let piv = t[r][j].clone();
        for c in 0..cols {
            t[r][c] = &t[r][c] / &piv;
        }
        for rr in 0..dim {
            if rr == r {
                continue;
            }
            let f = t[rr][j].clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..cols {
                let delta = &f * &t[r][c];
                t[rr][c] = &t[rr][c] - delta;
            }
        }
        basis[r] = j;
    }
    // feasible iff the remaining artificial values vanish
    (0..dim)
        .filter(|&r| cost(basis[r]))
        .all(|r| t[r][cols - 1].is_zero())
}
