//! Inversion sets and the biclosed-set bijection.
//!
//! `N(w)` is the set of positive roots sent negative by `w^{-1}`, `I(w)` the
//! set sent negative by `w`; both are cached on the element. The map
//! `w -> N(w)` is an order isomorphism from the right weak order onto the
//! poset of biclosed subsets; `element_from_biclosed` is its inverse, by
//! greedy peeling of a simple root.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSubset, RootSystem};
use crate::weyl::{SimpleSet, WeylElement};

/// Which inversion set a [`InversionSet`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InversionSide {
    /// N(w) = Phi^+ meet w(Phi^-)
    Left,
    /// I(w) = Phi^+ meet w^{-1}(Phi^-)
    Right,
}

/// A tagged inversion set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InversionSet {
    pub side: InversionSide,
    pub roots: RootSubset,
}

impl WeylElement {
    /// N(w); its size is the length of `w`.
    pub fn inversions_left(&self) -> InversionSet {
        InversionSet {
            side: InversionSide::Left,
            roots: RootSubset::from_mask(self.system(), self.n_mask()),
        }
    }

    /// I(w) = N(w^{-1}).
    pub fn inversions_right(&self) -> InversionSet {
        InversionSet {
            side: InversionSide::Right,
            roots: RootSubset::from_mask(self.system(), self.i_mask()),
        }
    }

    /// Simple roots inside N(w); equals the left descent set.
    pub fn simple_inversions(&self) -> SimpleSet {
        self.left_descents()
    }
}

/// Reconstructs the unique element with `N(w) = set`.
///
/// Peels a simple root `alpha` out of the set and replaces the set by
/// `s_alpha(set minus alpha)`; a nonempty biclosed set always contains a
/// simple root, so failure to find one is reported as not-biclosed.
pub fn element_from_biclosed(sys: &Arc<RootSystem>, set: &RootSubset) -> Result<WeylElement> {
    if let Some(pair) = biclosed_violation(sys, set) {
        return Err(Error::NotBiclosed(pair));
    }
    let rank = sys.rank();
    let mut mask = set.mask();
    let mut word = Vec::with_capacity(set.len());
    while mask != 0 {
        let Some(i) = (0..rank).find(|&i| mask >> i & 1 == 1) else {
            return Err(Error::NotBiclosed(
                "nonempty set contains no simple root".to_string(),
            ));
        };
        word.push(i);
        let mut next = 0u128;
        let mut rest = mask & !(1u128 << i);
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            match sys.reflect_index(i, b) {
                crate::rootsys::Reflected::Positive(c) => next |= 1 << c,
                crate::rootsys::Reflected::NegatedSimple => {
                    return Err(Error::NotBiclosed(
                        "set is not an inversion set".to_string(),
                    ))
                }
            }
        }
        mask = next;
    }
    let w = WeylElement::from_word(sys, &word)?;
    assert_eq!(w.n_mask(), set.mask(), "peeling failed to invert N on a biclosed set");
    Ok(w)
}

/// Human-readable witness when `set` is not biclosed.
fn biclosed_violation(sys: &RootSystem, set: &RootSubset) -> Option<String> {
    if let Some((a, b)) = sys.closure_violation(set.mask()) {
        return Some(format!(
            "roots {} and {} generate a positive combination outside the set",
            sys.root(a),
            sys.root(b)
        ));
    }
    let co = set.complement();
    if let Some((a, b)) = sys.closure_violation(co.mask()) {
        return Some(format!(
            "complement roots {} and {} generate a positive combination inside the set",
            sys.root(a),
            sys.root(b)
        ));
    }
    None
}

/// Validates the concatenation identity for a factorization `w = v u`:
/// lengths are additive exactly when `N(w)` is the disjoint union of `N(v)`
/// and `v(N(u))`. Returns that shared truth value.
pub fn check_concat(w: &WeylElement, v: &WeylElement, u: &WeylElement) -> Result<bool> {
    let prod = v.multiply(u)?;
    if &prod != w {
        return Err(Error::FactorizationMismatch);
    }
    let additive = w.length() == v.length() + u.length();

    let sys = w.system();
    let mut shifted = 0u128;
    let mut stays_positive = true;
    for b in 0..sys.num_positive() {
        if u.n_mask() >> b & 1 == 1 {
            let (idx, pos) = v.apply_positive(b);
            if pos {
                shifted |= 1 << idx;
            } else {
                stays_positive = false;
                break;
            }
        }
    }
    let identity_holds = stays_positive
        && v.n_mask() & shifted == 0
        && (v.n_mask() | shifted) == w.n_mask();
    assert_eq!(
        additive, identity_holds,
        "length additivity and the inversion-set identity must coincide"
    );
    Ok(additive)
}
