//! Stabilizer parabolic and Levi support of a Schubert variety.
//!
//! The stabilizer of the Schubert variety indexed by `w` is the standard
//! parabolic generated by the Borel and the simple reflections in `N(w)`; its
//! standard Levi is determined by the same simple set. Everything here is
//! therefore a computation with simple-root supports.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::covers_weak_right;
use crate::weyl::{SimpleSet, WeylElement};

/// The simple-root support of the standard Levi subgroup acting on a Schubert
/// variety.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeviSupport {
    pub simples: SimpleSet,
}

impl std::fmt::Display for LeviSupport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.simples)
    }
}

/// Levi support of the stabilizer of the Schubert variety of `w`: the simple
/// inversions of `w`.
pub fn levi_support(w: &WeylElement) -> LeviSupport {
    LeviSupport {
        simples: w.simple_inversions(),
    }
}

/// Independent recomputation of the Levi support: the union of the simple
/// inversions over the right-weak covers (with the length <= 1 base cases).
pub fn levi_support_via_covers(w: &WeylElement) -> LeviSupport {
    let simples = match w.length() {
        0 => SimpleSet::empty(),
        1 => w.left_descents(),
        _ => covers_weak_right(w)
            .iter()
            .fold(SimpleSet::empty(), |acc, v| acc.union(v.simple_inversions())),
    };
    LeviSupport { simples }
}

/// Simple-root support of the stabilizer of the coset Schubert variety
/// indexed by `v` in the partial flag variety of the parabolic `K`:
/// the simple roots that `v^{-1}` carries into the negatives or into the
/// subsystem generated by `K`.
pub fn coset_stabilizer_support(v: &WeylElement, k: SimpleSet) -> Result<SimpleSet> {
    if !v.is_min_coset_rep(k) {
        return Err(Error::NotMinimalCosetRep);
    }
    let sys = v.system();
    let vinv = v.inverse();
    let mut out = SimpleSet::empty();
    for j in 0..sys.rank() {
        let img = vinv.apply(sys.simple_root(j)).expect("simple root");
        if img.is_negative() || img.support().all(|i| k.contains(i)) {
            out.insert(j);
        }
    }
    Ok(out)
}

/// For `v <=_R w` with `w = v u`, the Levi support of `v` is contained in that
/// of `w`; the inclusion is strict exactly when some root of `N(u)` is carried
/// by `v` onto a simple root. Returns whether the inclusion is strict after
/// checking that equivalence.
pub fn check_stab_monotone(v: &WeylElement, w: &WeylElement) -> Result<bool> {
    if v.n_mask() & !w.n_mask() != 0 {
        return Err(Error::Precondition("v <=_R w in the right weak order".into()));
    }
    let u = v.inverse().multiply(w)?;
    let sys = w.system();
    assert!(
        levi_support(v).simples.is_subset_of(&levi_support(w).simples),
        "Levi support must be monotone along the weak order"
    );
    let strict = levi_support(v).simples != levi_support(w).simples;
    let witness = (0..sys.num_positive())
        .filter(|&b| u.n_mask() >> b & 1 == 1)
        .any(|b| {
            let (idx, pos) = v.apply_positive(b);
            pos && idx < sys.rank()
        });
    assert_eq!(
        strict, witness,
        "strict Levi growth must coincide with a simple-image witness in N(u)"
    );
    Ok(strict)
}
