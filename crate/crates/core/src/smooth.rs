//! Smoothness and rational smoothness of Schubert varieties.
//!
//! Type A uses the Lakshmibai-Sandhya pattern criterion (avoid 4231 and
//! 3412), cross-checked against palindromicity of the Poincare polynomial
//! when the interval is small enough to enumerate cheaply. Simply laced
//! types D and E decide smoothness by palindromicity, which there coincides
//! with smoothness (Peterson). For B, C, F, and G only rational smoothness
//! is reported; the smoothness verdict is `Unsupported`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{covers_bruhat, poincare, DEFAULT_INTERVAL_CAP};
use crate::rootsys::Family;
use crate::weyl::WeylElement;

/// Interval size up to which the type A pattern verdict is cross-checked
/// against palindromicity.
const CROSS_CHECK_CAP: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoothVerdict {
    Smooth,
    NotSmooth,
    Unsupported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SmoothMethod {
    PatternAvoidance,
    Palindromic,
    PetersonTransfer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub rationally_smooth: bool,
    pub smooth: SmoothVerdict,
    pub method: SmoothMethod,
}

impl SmoothnessReport {
    pub fn is_smooth(&self) -> bool {
        self.smooth == SmoothVerdict::Smooth
    }
}

/// Does the permutation `p` avoid the pattern `q`? Brute-force scan over all
/// index subsequences.
pub fn avoids_pattern(p: &[usize], q: &[usize]) -> Result<bool> {
    validate_permutation(q).map_err(|_| Error::InvalidPattern(q.to_vec()))?;
    validate_permutation(p)?;
    let k = q.len();
    if k > p.len() {
        return Ok(true);
    }
    let mut picked = vec![0usize; k];
    Ok(!contains_rec(p, q, &mut picked, 0, 0))
}

fn validate_permutation(p: &[usize]) -> Result<()> {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    for &x in p {
        if x == 0 || x > n || seen[x] {
            return Err(Error::NotAPermutation(p.to_vec(), n));
        }
        seen[x] = true;
    }
    Ok(())
}

fn contains_rec(p: &[usize], q: &[usize], picked: &mut [usize], depth: usize, start: usize) -> bool {
    if depth == q.len() {
        return order_isomorphic(p, q, picked);
    }
    for idx in start..=(p.len() - (q.len() - depth)) {
        picked[depth] = idx;
        if contains_rec(p, q, picked, depth + 1, idx + 1) {
            return true;
        }
    }
    false
}

fn order_isomorphic(p: &[usize], q: &[usize], picked: &[usize]) -> bool {
    let k = q.len();
    for a in 0..k {
        for b in (a + 1)..k {
            if (p[picked[a]] < p[picked[b]]) != (q[a] < q[b]) {
                return false;
            }
        }
    }
    true
}

/// Rational smoothness as palindromicity of the Poincare polynomial of the
/// lower Bruhat interval.
pub fn is_rationally_smooth(w: &WeylElement, cap: usize) -> Result<bool> {
    Ok(poincare(w, cap)?.is_palindromic())
}

/// Full smoothness report for `w`, dispatching on the ambient family.
pub fn is_smooth(w: &WeylElement, cap: usize) -> Result<SmoothnessReport> {
    match w.ctype().family() {
        Family::A => {
            let p = w.to_permutation()?;
            let smooth =
                avoids_pattern(&p, &[4, 2, 3, 1])? && avoids_pattern(&p, &[3, 4, 1, 2])?;
            // when affordable, cross-check against palindromicity
            if let Ok(rs) = is_rationally_smooth(w, CROSS_CHECK_CAP.min(cap)) {
                assert_eq!(
                    rs, smooth,
                    "pattern and palindromicity verdicts disagree for {w}"
                );
            }
            Ok(SmoothnessReport {
                rationally_smooth: smooth,
                smooth: if smooth { SmoothVerdict::Smooth } else { SmoothVerdict::NotSmooth },
                method: SmoothMethod::PatternAvoidance,
            })
        }
        Family::D | Family::E => {
            let rs = is_rationally_smooth(w, cap)?;
            Ok(SmoothnessReport {
                rationally_smooth: rs,
                smooth: if rs { SmoothVerdict::Smooth } else { SmoothVerdict::NotSmooth },
                method: SmoothMethod::PetersonTransfer,
            })
        }
        _ => Ok(SmoothnessReport {
            rationally_smooth: is_rationally_smooth(w, cap)?,
            smooth: SmoothVerdict::Unsupported,
            method: SmoothMethod::Palindromic,
        }),
    }
}

/// All smooth Schubert divisors of the (smooth) Schubert variety of `w`:
/// Bruhat covers below `w` that are themselves smooth.
pub fn smooth_divisors(w: &WeylElement, cap: usize) -> Result<Vec<WeylElement>> {
    let family = w.ctype().family();
    if !matches!(family, Family::A | Family::D | Family::E) {
        return Err(Error::UnsupportedSmoothness(family.letter()));
    }
    if !is_smooth(w, cap)?.is_smooth() {
        return Err(Error::Precondition("a smooth element".into()));
    }
    let mut out: Vec<WeylElement> = covers_bruhat(w)
        .into_iter()
        .filter(|x| is_smooth(x, cap).map(|r| r.is_smooth()).unwrap_or(false))
        .collect();
    out.sort_by_key(|x| x.canonical_string());
    Ok(out)
}

/// Convenience wrappers at the default cap.
pub fn is_smooth_default(w: &WeylElement) -> Result<SmoothnessReport> {
    is_smooth(w, DEFAULT_INTERVAL_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use crate::bp::find_chain_bp;
    use crate::rootsys::RootSystem;
    use crate::weyl::{longest_element, WeylGroup};

    fn a3() -> Arc<RootSystem> {
        RootSystem::new(Family::A, 3).unwrap()
    }

    fn perm(sys: &Arc<RootSystem>, p: &[usize]) -> WeylElement {
        WeylElement::from_permutation(sys, p).unwrap()
    }

    #[test]
    fn pattern_examples() {
        assert!(avoids_pattern(&[1, 2, 3, 4], &[4, 2, 3, 1]).unwrap());
        assert!(!avoids_pattern(&[4, 2, 3, 1], &[4, 2, 3, 1]).unwrap());
        assert!(!avoids_pattern(&[4, 5, 3, 1, 2], &[3, 4, 1, 2]).unwrap());
        // 45123 contains 3412 at positions (1, 2, 3, 4)
        assert!(!avoids_pattern(&[4, 5, 1, 2, 3], &[3, 4, 1, 2]).unwrap());
        assert!(avoids_pattern(&[4, 5, 3, 2, 1], &[3, 4, 1, 2]).unwrap());
        assert!(avoids_pattern(&[4, 5, 3, 2, 1], &[4, 2, 3, 1]).unwrap());
        assert!(avoids_pattern(&[2, 1], &[4, 2, 3, 1]).unwrap());
        assert!(!avoids_pattern(&[1], &[1]).unwrap());
        assert!(avoids_pattern(&[1, 2], &[2, 1, 3]).unwrap());
        assert!(matches!(
            avoids_pattern(&[1, 2, 3], &[1, 1]),
            Err(Error::InvalidPattern(_))
        ));
    }

    #[test]
    fn s4_smoothness() {
        let s = a3();
        let g = WeylGroup::enumerate(&s, 1 << 20).unwrap();
        let mut not_smooth = Vec::new();
        for w in g.elements() {
            let report = is_smooth(w, 10_000).unwrap();
            assert_eq!(report.method, SmoothMethod::PatternAvoidance);
            assert_eq!(report.rationally_smooth, report.is_smooth());
            if !report.is_smooth() {
                not_smooth.push(w.to_string());
            }
        }
        not_smooth.sort();
        assert_eq!(not_smooth, vec!["3412", "4231"]);
    }

    #[test]
    fn identity_is_rationally_smooth() {
        let s = a3();
        assert!(is_rationally_smooth(&WeylElement::identity(&s), 10).unwrap());
    }

    #[test]
    fn a4_smooth_witness_and_counterexample() {
        let s = RootSystem::new(Family::A, 4).unwrap();
        let report = is_smooth(&perm(&s, &[4, 5, 3, 2, 1]), 100_000).unwrap();
        assert!(report.is_smooth());
        // 45123 contains 3412, so its Schubert variety is singular
        let report = is_smooth(&perm(&s, &[4, 5, 1, 2, 3]), 100_000).unwrap();
        assert!(!report.is_smooth());
    }

    #[test]
    fn unsupported_types_report_rational_smoothness_only() {
        let g2 = RootSystem::new(Family::G, 2).unwrap();
        let g = WeylGroup::enumerate(&g2, 1 << 20).unwrap();
        for w in g.elements() {
            let report = is_smooth(w, 10_000).unwrap();
            assert_eq!(report.smooth, SmoothVerdict::Unsupported);
            assert_eq!(report.method, SmoothMethod::Palindromic);
        }
    }

    #[test]
    fn divisor_examples() {
        let s = a3();
        let simple = WeylElement::from_word(&s, &[0]).unwrap();
        let divs = smooth_divisors(&simple, 1000).unwrap();
        assert_eq!(divs.len(), 1);
        assert!(divs[0].is_identity());

        let w0 = perm(&s, &[4, 3, 2, 1]);
        let covers: Vec<String> = covers_bruhat(&w0).iter().map(|x| x.to_string()).collect();
        let mut sorted = covers.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["3421", "4231", "4312"]);
        let divs: Vec<String> = smooth_divisors(&w0, 1000).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(divs, vec!["3421", "4312"]);

        // non-smooth input is rejected
        assert!(smooth_divisors(&perm(&s, &[4, 2, 3, 1]), 1000).is_err());
        // unsupported family is rejected
        let g2 = RootSystem::new(Family::G, 2).unwrap();
        assert!(smooth_divisors(&WeylElement::identity(&g2), 1000).is_err());
    }

    #[test]
    fn d4_rationally_smooth_is_maximal_or_chain_decomposable() {
        // One direction of the classification: every rationally smooth element
        // is parabolic-maximal or admits a chain decomposition. The converse
        // fails (a chain over a singular fiber), so only this direction is
        // asserted.
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        let g = WeylGroup::enumerate(&d4, 1 << 20).unwrap();
        for w in g.elements() {
            if !is_rationally_smooth(w, 100_000).unwrap() {
                continue;
            }
            let maximal = longest_element(&d4, w.support()) == *w;
            let chain = find_chain_bp(w, 100_000).unwrap().is_some();
            assert!(maximal || chain, "{w} is rationally smooth but has neither form");
        }
    }
}
