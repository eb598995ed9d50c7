//! Parabolic and Billey-Postnikov decompositions.
//!
//! A right parabolic decomposition splits `w = v u` with `v` minimal in its
//! coset modulo `W_J` and `u` in `W_J`; it is a BP decomposition when the
//! three equivalent conditions hold: `u` is the Bruhat maximum of
//! `[id, w] meet W_J`, the Poincare polynomial factors through the quotient,
//! and every support letter of `v` inside `J` is a left descent of `u`. Only
//! the descent condition is evaluated on the fast path; the other two are
//! recomputed in checked mode and any disagreement is a bug, not an input
//! error.
//!
//! Left decompositions are right decompositions of the inverse throughout.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{
    is_chain_in_quotient, lower_interval_bruhat, poincare, quotient_poincare, BruhatMemo,
    PoincarePolynomial,
};
use crate::rootsys::{CartanType, Family, RootSystem};
use crate::weyl::{longest_element, SimpleSet, WeylElement};

/// Which side a decomposition was taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Right,
    Left,
}

/// A parabolic decomposition of `w` across `J`, with its BP flags.
///
/// For `side == Right` this is `w = v u`; for `side == Left` it is `w = u v`,
/// where in both cases `u` lies in `W_J` and `v` is the minimal representative
/// of its coset. Lengths are additive by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BPDecomposition {
    pub j: SimpleSet,
    pub v: WeylElement,
    pub u: WeylElement,
    pub side: Side,
    pub is_bp: bool,
    pub is_chain: bool,
    pub is_grassmannian: bool,
}

/// The unique parabolic decomposition of `w` across `J` on the given side,
/// with the BP flags left unset.
pub fn parabolic_decompose(w: &WeylElement, j: SimpleSet, side: Side) -> BPDecomposition {
    let (v, u) = match side {
        Side::Right => w.decompose_right(j),
        Side::Left => {
            let (v, u) = w.inverse().decompose_right(j);
            (v.inverse(), u.inverse())
        }
    };
    BPDecomposition {
        j,
        v,
        u,
        side,
        is_bp: false,
        is_chain: false,
        is_grassmannian: false,
    }
}

/// Condition (support of v inside J descends u): the fast BP test.
fn bp_descent_condition(v: &WeylElement, u: &WeylElement, j: SimpleSet) -> bool {
    v.support().intersect(j).is_subset_of(&u.left_descents())
}

/// Is `w = v u` across `J` a BP decomposition? Fast path: descent condition
/// only.
pub fn is_bp(w: &WeylElement, j: SimpleSet, side: Side) -> bool {
    let d = parabolic_decompose(w, j, side);
    match side {
        Side::Right => bp_descent_condition(&d.v, &d.u, j),
        Side::Left => bp_descent_condition(&d.v.inverse(), &d.u.inverse(), j),
    }
}

/// All three BP conditions, as (maximum-of-interval, Poincare-factorization,
/// descent-condition). They are equivalent; computing all three is the
/// consistency check used by tests and checked mode.
pub fn bp_conditions(w: &WeylElement, j: SimpleSet, side: Side, cap: usize) -> Result<(bool, bool, bool)> {
    let (w, j) = match side {
        Side::Right => (w.clone(), j),
        Side::Left => (w.inverse(), j),
    };
    let (v, u) = w.decompose_right(j);

    // one interval enumeration serves both condition (1) and the left side of
    // condition (2)
    let interval = lower_interval_bruhat(&w, cap)?;

    // (1) u is the Bruhat maximum of [id, w] meet W_J
    let in_parabolic: Vec<&WeylElement> = interval
        .iter()
        .filter(|x| x.support().is_subset_of(&j))
        .collect();
    let mut memo = BruhatMemo::new();
    let mut cond1 = true;
    for x in &in_parabolic {
        if !memo.leq(x, &u)? {
            cond1 = false;
            break;
        }
    }

    // (2) Poincare polynomial factors through the quotient
    let mut coeffs = vec![0u64; w.length() + 1];
    for x in &interval {
        coeffs[x.length()] += 1;
    }
    let pw = PoincarePolynomial { coeffs };
    let cond2 = pw == quotient_poincare(&v, j, cap)?.mul(&poincare(&u, cap)?);

    // (3) descent condition
    let cond3 = bp_descent_condition(&v, &u, j);

    Ok((cond1, cond2, cond3))
}

/// Checked BP test: evaluates all three conditions and panics on any
/// disagreement (which would be an implementation bug).
pub fn is_bp_checked(w: &WeylElement, j: SimpleSet, side: Side, cap: usize) -> Result<bool> {
    let (c1, c2, c3) = bp_conditions(w, j, side, cap)?;
    assert!(
        c1 == c2 && c2 == c3,
        "BP conditions disagree for {w} across {j}: ({c1}, {c2}, {c3})"
    );
    Ok(c3)
}

/// BP decomposition with the chain condition: the quotient interval below `v`
/// is totally ordered.
pub fn is_chain_bp(w: &WeylElement, j: SimpleSet, side: Side, cap: usize) -> Result<bool> {
    if !is_bp(w, j, side) {
        return Ok(false);
    }
    let v = match side {
        Side::Right => parabolic_decompose(w, j, side).v,
        Side::Left => parabolic_decompose(w, j, side).v.inverse(),
    };
    is_chain_in_quotient(&v, j, cap)
}

/// BP decomposition growing the support by exactly one letter.
pub fn is_grassmannian_bp(w: &WeylElement, j: SimpleSet, cap: usize) -> Result<bool> {
    let _ = cap;
    if !is_bp(w, j, Side::Right) {
        return Ok(false);
    }
    let d = parabolic_decompose(w, j, Side::Right);
    Ok(w.support().len() == d.v.support().len() + 1)
}

/// Fills all flags of a parabolic decomposition.
pub fn bp_decomposition(w: &WeylElement, j: SimpleSet, side: Side, cap: usize) -> Result<BPDecomposition> {
    let mut d = parabolic_decompose(w, j, side);
    d.is_bp = is_bp(w, j, side);
    d.is_chain = if d.is_bp { is_chain_bp(w, j, side, cap)? } else { false };
    d.is_grassmannian = match side {
        Side::Right => d.is_bp && is_grassmannian_bp(w, j, cap)?,
        Side::Left => d.is_bp && w.support().len() == d.v.support().len() + 1,
    };
    Ok(d)
}

/// Leaves (degree <= 1 nodes) of the Dynkin diagram restricted to `set`.
pub fn support_leaves(sys: &RootSystem, set: SimpleSet) -> Vec<usize> {
    set.iter()
        .filter(|&i| {
            set.iter()
                .filter(|&k| k != i && sys.cartan(i, k) != 0)
                .count()
                <= 1
        })
        .collect()
}

/// All chain BP decompositions of `w` across leaf complements of its support,
/// right side first, leaves in ascending order.
pub fn chain_bp_candidates(w: &WeylElement, cap: usize) -> Result<Vec<BPDecomposition>> {
    let sys = w.system();
    let support = w.support();
    let mut out = Vec::new();
    for side in [Side::Right, Side::Left] {
        for leaf in support_leaves(sys, support) {
            let j = support.remove(leaf);
            let d = bp_decomposition(w, j, side, cap)?;
            if d.is_bp && d.is_chain {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// First chain BP decomposition of `w` in the deterministic search order, if
/// any exists.
pub fn find_chain_bp(w: &WeylElement, cap: usize) -> Result<Option<BPDecomposition>> {
    Ok(chain_bp_candidates(w, cap)?.into_iter().next())
}

// ---------------------------------------------------------------------------
// The exceptional catalogue
// ---------------------------------------------------------------------------

/// Index into the catalogue of non-maximal smooth elements of the E-type
/// groups: `5 <= l < k <= 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ECatalogueIndex {
    pub k: u8,
    pub l: u8,
}

impl ECatalogueIndex {
    pub fn new(k: u8, l: u8) -> Result<ECatalogueIndex> {
        if (5..8).contains(&l) && l < k && k <= 8 {
            Ok(ECatalogueIndex { k, l })
        } else {
            Err(Error::Precondition("catalogue indices with 5 <= l < k <= 8".into()))
        }
    }
}

/// Initial segments of the node labels: `S_k = {s_1, ..., s_k}` and
/// `J_k = S_k` minus the branch node `s_2`.
pub fn e_initial_segment(k: u8) -> SimpleSet {
    SimpleSet::from_indices(0..k as usize)
}

pub fn e_branchless_segment(k: u8) -> SimpleSet {
    e_initial_segment(k).remove(1)
}

/// The catalogue element: the maximal element of the `J_l`-quotient of
/// `W_{S_l}` times the longest element of `W_{J_k}`. The factors meet
/// length-additively, and since every reduced word of the quotient piece ends
/// in the branch-removed node, the support is all of `S_k`.
pub fn e_catalogue_element(sys: &Arc<RootSystem>, idx: ECatalogueIndex) -> Result<WeylElement> {
    if sys.ctype().family() != Family::E {
        return Err(Error::Precondition("a type E system".into()));
    }
    if (idx.k as usize) > sys.rank() {
        return Err(Error::Precondition(format!(
            "rank >= {} for catalogue index ({}, {})",
            idx.k, idx.k, idx.l
        )));
    }
    let u_k = longest_element(sys, e_branchless_segment(idx.k));
    let top_l = longest_element(sys, e_initial_segment(idx.l));
    let v_l = top_l.min_coset_rep(e_branchless_segment(idx.l));
    v_l.multiply(&u_k)
}

/// The full catalogue for the given E-type system, lazily computed and cached
/// per Cartan type for the lifetime of the process.
pub fn e_catalogue(sys: &Arc<RootSystem>) -> Result<Arc<Vec<(ECatalogueIndex, WeylElement)>>> {
    if sys.ctype().family() != Family::E {
        return Err(Error::Precondition("a type E system".into()));
    }
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<Vec<(ECatalogueIndex, WeylElement)>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("catalogue cache poisoned");
    if let Some(hit) = guard.get(&sys.ctype()) {
        return Ok(Arc::clone(hit));
    }
    let mut items = Vec::new();
    for k in 6..=(sys.rank() as u8) {
        for l in 5..k {
            let idx = ECatalogueIndex::new(k, l)?;
            items.push((idx, e_catalogue_element(sys, idx)?));
        }
    }
    let items = Arc::new(items);
    guard.insert(sys.ctype(), Arc::clone(&items));
    Ok(items)
}

/// Looks `w` (or its inverse) up in the catalogue of its E-type system.
pub fn e_catalogue_match(w: &WeylElement) -> Result<Option<ECatalogueIndex>> {
    let items = e_catalogue(w.system())?;
    let winv = w.inverse();
    for (idx, elt) in items.iter() {
        if elt == w || elt == &winv {
            return Ok(Some(*idx));
        }
    }
    Ok(None)
}
