//! Acceptance suite: one test per numbered criterion. Every test prints a
//! single `criterion NN: PASS` line (visible with `--nocapture`) or fails
//! with a `criterion NN: FAIL` message naming the witness.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schubert::*;

fn sys(f: Family, n: usize) -> Arc<RootSystem> {
    RootSystem::new(f, n).unwrap()
}

fn perm(s: &Arc<RootSystem>, p: &[usize]) -> WeylElement {
    WeylElement::from_permutation(s, p).unwrap()
}

fn group(s: &Arc<RootSystem>) -> WeylGroup {
    WeylGroup::enumerate(s, 1 << 24).unwrap()
}

fn pass(n: u32, start: Instant, detail: &str) {
    println!(
        "criterion {n:02}: PASS ({:.2?}) - {detail}",
        start.elapsed()
    );
}

/// Pattern-test smoothness for type A elements (the authoritative test).
fn pattern_smooth(w: &WeylElement) -> bool {
    let p = w.to_permutation().unwrap();
    avoids_pattern(&p, &[4, 2, 3, 1]).unwrap() && avoids_pattern(&p, &[3, 4, 1, 2]).unwrap()
}

/// Poincare coefficients of `[id, w]` read off a precomputed downset table.
fn poincare_from_table(g: &WeylGroup, table: &OrderTable, k: usize) -> Vec<u64> {
    let w = g.get(k);
    let mut coeffs = vec![0u64; w.length() + 1];
    for x in 0..g.order() {
        if table.get(k, x) {
            coeffs[g.get(x).length()] += 1;
        }
    }
    coeffs
}

fn palindromic(coeffs: &[u64]) -> bool {
    (0..coeffs.len() / 2).all(|i| coeffs[i] == coeffs[coeffs.len() - 1 - i])
}

#[test]
fn criterion_01_inversion_set_golden_value() {
    let t = Instant::now();
    let s = sys(Family::A, 3);
    let w = perm(&s, &[4, 2, 3, 1]);
    let n = w.inversions_left().roots;
    let expect = ["a1", "a3", "a2+a3", "a1+a2", "a1+a2+a3"];
    let got: Vec<String> = n.indices().map(|i| s.root(i).to_string()).collect();
    assert_eq!(got, expect, "criterion 01: FAIL - N(4231) mismatch");
    let co: Vec<String> = n.complement().indices().map(|i| s.root(i).to_string()).collect();
    assert_eq!(co, ["a2"], "criterion 01: FAIL - complement mismatch");
    pass(1, t, "N(4231) and its complement match the golden value");
}

/// Right-weak-order diagram of S4: the simple-inversion label of every node
/// and all 36 cover edges.
const S4_LABELS: [(&str, &[usize]); 24] = [
    ("1234", &[]),
    ("1243", &[2]),
    ("1324", &[1]),
    ("2134", &[0]),
    ("1423", &[2]),
    ("1342", &[1]),
    ("2143", &[0, 2]),
    ("3124", &[1]),
    ("2314", &[0]),
    ("1432", &[1, 2]),
    ("4123", &[2]),
    ("2413", &[0, 2]),
    ("3142", &[1]),
    ("3214", &[0, 1]),
    ("2341", &[0]),
    ("4132", &[1, 2]),
    ("4213", &[0, 2]),
    ("3412", &[1]),
    ("2431", &[0, 2]),
    ("3241", &[0, 1]),
    ("4312", &[1, 2]),
    ("4231", &[0, 2]),
    ("3421", &[0, 1]),
    ("4321", &[0, 1, 2]),
];

const S4_WEAK_EDGES: [(&str, &str); 36] = [
    ("1234", "1243"),
    ("1234", "1324"),
    ("1234", "2134"),
    ("1243", "1423"),
    ("1243", "2143"),
    ("1324", "1342"),
    ("1324", "3124"),
    ("2134", "2143"),
    ("2134", "2314"),
    ("1423", "1432"),
    ("1423", "4123"),
    ("1342", "1432"),
    ("1342", "3142"),
    ("2143", "2413"),
    ("3124", "3142"),
    ("3124", "3214"),
    ("2314", "3214"),
    ("2314", "2341"),
    ("1432", "4132"),
    ("4123", "4132"),
    ("4123", "4213"),
    ("2413", "4213"),
    ("2413", "2431"),
    ("3142", "3412"),
    ("3214", "3241"),
    ("2341", "2431"),
    ("2341", "3241"),
    ("4132", "4312"),
    ("4213", "4231"),
    ("3412", "4312"),
    ("3412", "3421"),
    ("2431", "4231"),
    ("3241", "3421"),
    ("4312", "4321"),
    ("4231", "4321"),
    ("3421", "4321"),
];

#[test]
fn criterion_02_s4_weak_order_diagram() {
    let t = Instant::now();
    let s = sys(Family::A, 3);
    let g = group(&s);
    for (word, labels) in S4_LABELS {
        let digits: Vec<usize> = word.bytes().map(|b| (b - b'0') as usize).collect();
        let w = perm(&s, &digits);
        let expect = SimpleSet::from_indices(labels.iter().copied());
        assert_eq!(
            w.simple_inversions(),
            expect,
            "criterion 02: FAIL - simple inversions of {word}"
        );
    }
    let mut edges: HashSet<(String, String)> = HashSet::new();
    for w in g.elements() {
        for below in covers_weak_right(w) {
            edges.insert((below.to_string(), w.to_string()));
        }
    }
    let expect: HashSet<(String, String)> = S4_WEAK_EDGES
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    assert_eq!(edges, expect, "criterion 02: FAIL - weak-order edge set");
    pass(2, t, "all 24 labels and all 36 weak cover edges match");
}

#[test]
fn criterion_03_toral_cell_list() {
    let t = Instant::now();
    let s = sys(Family::A, 3);
    let g = group(&s);
    let got: HashSet<String> = g
        .elements()
        .iter()
        .filter(|w| toral_cell_test(w))
        .map(|w| w.to_string())
        .collect();
    let expect: HashSet<String> = ["1234", "2134", "1324", "1243", "1432", "2143", "3214", "4321"]
        .into_iter()
        .map(String::from)
        .collect();
    assert_eq!(got, expect, "criterion 03: FAIL - toral-cell set");
    pass(3, t, "exactly the 8 listed elements satisfy the cell criterion");
}

#[test]
fn criterion_04_smoothness_tests_agree() {
    let t = Instant::now();
    // S4: exactly 4231 and 3412 are singular
    let s = sys(Family::A, 3);
    let g = group(&s);
    let mut bad: Vec<String> = g
        .elements()
        .iter()
        .filter(|w| !is_smooth(w, 10_000).unwrap().is_smooth())
        .map(|w| w.to_string())
        .collect();
    bad.sort();
    assert_eq!(bad, ["3412", "4231"], "criterion 04: FAIL - singular set in S4");
    // pattern test and palindromicity agree on all of S_n for n <= 6
    for rank in 1..=5 {
        let s = sys(Family::A, rank);
        let g = group(&s);
        let table = bruhat_downsets(&g);
        for k in 0..g.order() {
            let w = g.get(k);
            let by_pattern = pattern_smooth(w);
            let by_palindrome = palindromic(&poincare_from_table(&g, &table, k));
            assert_eq!(
                by_pattern, by_palindrome,
                "criterion 04: FAIL - verdicts disagree for {w} in A{rank}"
            );
        }
    }
    pass(4, t, "pattern and palindromicity verdicts agree on S_n for n <= 6");
}

#[test]
fn criterion_05_biclosed_bijection() {
    let t = Instant::now();
    for (f, n) in [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::G, 2),
    ] {
        let s = sys(f, n);
        let g = group(&s);
        let m = s.num_positive();
        let count = (0u128..1 << m).filter(|&mask| s.is_biclosed_mask(mask)).count();
        assert_eq!(
            count,
            g.order(),
            "criterion 05: FAIL - biclosed count in {f}{n}"
        );
        // the inversion map is a bijection onto biclosed sets
        for w in g.elements() {
            let back = element_from_biclosed(&s, &w.inversions_left().roots).unwrap();
            assert_eq!(&back, w, "criterion 05: FAIL - roundtrip of {w} in {f}{n}");
        }
        // mask inclusion is exactly weak-order reachability
        let weak = weak_right_downsets(&g);
        for a in 0..g.order() {
            for b in 0..g.order() {
                let incl = g.get(b).n_mask() & !g.get(a).n_mask() == 0;
                assert_eq!(
                    weak.get(a, b),
                    incl,
                    "criterion 05: FAIL - order isomorphism in {f}{n}"
                );
            }
        }
    }
    pass(5, t, "biclosed counts, the bijection, and the order isomorphism hold");
}

#[test]
fn criterion_06_involutions_have_symmetric_inversions() {
    let t = Instant::now();
    for (f, n) in [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::A, 5),
        (Family::B, 3),
        (Family::D, 4),
        (Family::G, 2),
    ] {
        let s = sys(f, n);
        let g = group(&s);
        for w in g.elements() {
            let involution = w.multiply(w).unwrap().is_identity();
            assert_eq!(
                w.n_mask() == w.i_mask(),
                involution,
                "criterion 06: FAIL - {w} in {f}{n}"
            );
        }
    }
    pass(6, t, "N(w) = I(w) exactly at involutions across all listed types");
}

#[test]
fn criterion_07_concatenation_identity_s5() {
    let t = Instant::now();
    let s = sys(Family::A, 4);
    let g = group(&s);
    let mut additive = 0u32;
    for v in g.elements() {
        for u in g.elements() {
            let w = v.multiply(u).unwrap();
            let holds = check_concat(&w, v, u).unwrap();
            assert_eq!(
                holds,
                w.length() == v.length() + u.length(),
                "criterion 07: FAIL - pair ({v}, {u})"
            );
            if holds {
                additive += 1;
            }
        }
    }
    assert!(additive > 0);
    pass(
        7,
        t,
        &format!("inversion sets concatenate on all {additive} length-additive pairs of S5"),
    );
}

#[test]
fn criterion_08_bp_conditions_consistent() {
    let t = Instant::now();
    // exhaustive on the small groups
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
        let s = sys(f, n);
        let g = group(&s);
        for w in g.elements() {
            for jm in 0..(1u16 << n) {
                let j = SimpleSet::from_mask(jm);
                let (c1, c2, c3) = bp_conditions(w, j, Side::Right, 1 << 20).unwrap();
                assert!(
                    c1 == c2 && c2 == c3,
                    "criterion 08: FAIL - ({w}, {j}) in {f}{n}: ({c1}, {c2}, {c3})"
                );
            }
        }
    }
    // 1000 random pairs each in A5 and D4, fixed seed
    for (f, n) in [(Family::A, 5), (Family::D, 4)] {
        let s = sys(f, n);
        let g = group(&s);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
        for _ in 0..1000 {
            let w = g.get(rng.gen_range(0..g.order()));
            let j = SimpleSet::from_mask(rng.gen_range(0..(1u16 << n)));
            let (c1, c2, c3) = bp_conditions(w, j, Side::Right, 1 << 20).unwrap();
            assert!(
                c1 == c2 && c2 == c3,
                "criterion 08: FAIL - ({w}, {j}) in {f}{n}: ({c1}, {c2}, {c3})"
            );
        }
    }
    pass(8, t, "the three BP conditions agree exhaustively and on 2000 random pairs");
}

#[test]
fn criterion_09_smooth_divisors_exist() {
    let t = Instant::now();
    // type A ranks 1..4 (S_2..S_5)
    for rank in 1..=4 {
        let s = sys(Family::A, rank);
        let g = group(&s);
        for w in g.elements() {
            if !pattern_smooth(w) || longest_element(&s, w.support()) == *w {
                continue;
            }
            let divisors = smooth_divisors(w, 1 << 20).unwrap();
            assert!(
                !divisors.is_empty(),
                "criterion 09: FAIL - {w} in A{rank} has no smooth divisor"
            );
            let has_one_sided = w
                .left_descents()
                .iter()
                .map(|i| w.simple_times(i))
                .chain(w.right_descents().iter().map(|i| w.times_simple(i)))
                .any(|x| divisors.contains(&x));
            assert!(
                has_one_sided,
                "criterion 09: FAIL - no one-sided smooth divisor below {w} in A{rank}"
            );
        }
    }
    // D4 via palindromic smoothness
    let s = sys(Family::D, 4);
    let g = group(&s);
    let table = bruhat_downsets(&g);
    for k in 0..g.order() {
        let w = g.get(k);
        if !palindromic(&poincare_from_table(&g, &table, k)) || longest_element(&s, w.support()) == *w
        {
            continue;
        }
        let divisors = smooth_divisors(w, 1 << 20).unwrap();
        assert!(
            !divisors.is_empty(),
            "criterion 09: FAIL - {w} in D4 has no smooth divisor"
        );
        let has_one_sided = w
            .left_descents()
            .iter()
            .map(|i| w.simple_times(i))
            .chain(w.right_descents().iter().map(|i| w.times_simple(i)))
            .any(|x| divisors.contains(&x));
        assert!(
            has_one_sided,
            "criterion 09: FAIL - no one-sided smooth divisor below {w} in D4"
        );
    }
    pass(9, t, "every smooth non-maximal element has a one-sided smooth divisor");
}

#[test]
fn criterion_10_main_theorem_never_unknown() {
    let t = Instant::now();
    let mut decided = 0u32;
    for rank in 1..=5 {
        let s = sys(Family::A, rank);
        let g = group(&s);
        for w in g.elements() {
            if !pattern_smooth(w) {
                continue;
            }
            let cert = decide_spherical(w).unwrap();
            assert_eq!(
                cert.verdict,
                Verdict::Spherical,
                "criterion 10: FAIL - smooth {w} in A{rank} got {:?}",
                cert.verdict
            );
            verify_certificate(w, &cert)
                .unwrap_or_else(|e| panic!("criterion 10: FAIL - certificate of {w}: {e}"));
            decided += 1;
        }
    }
    let s = sys(Family::D, 4);
    let g = group(&s);
    let table = bruhat_downsets(&g);
    for k in 0..g.order() {
        let w = g.get(k);
        if !palindromic(&poincare_from_table(&g, &table, k)) {
            continue;
        }
        let cert = decide_spherical(w).unwrap();
        assert_eq!(
            cert.verdict,
            Verdict::Spherical,
            "criterion 10: FAIL - smooth {w} in D4 got {:?}",
            cert.verdict
        );
        verify_certificate(w, &cert)
            .unwrap_or_else(|e| panic!("criterion 10: FAIL - certificate of {w}: {e}"));
        decided += 1;
    }
    pass(
        10,
        t,
        &format!("all {decided} smooth elements of A1..A5 and D4 certified spherical"),
    );
}

#[test]
fn criterion_11_gl4_all_spherical() {
    let t = Instant::now();
    let s = sys(Family::A, 3);
    let g = group(&s);
    for w in g.elements() {
        let cert = decide_spherical(w).unwrap();
        assert_eq!(
            cert.verdict,
            Verdict::Spherical,
            "criterion 11: FAIL - {w} got {:?}",
            cert.verdict
        );
        verify_certificate(w, &cert)
            .unwrap_or_else(|e| panic!("criterion 11: FAIL - certificate of {w}: {e}"));
    }
    // 4231: a transfer chain ending in a pair-table check
    let cert = decide_spherical(&perm(&s, &[4, 2, 3, 1])).unwrap();
    assert!(
        matches!(cert.reason, Reason::KempfTransfer { .. }),
        "criterion 11: FAIL - 4231 not certified by transfer"
    );
    match &cert.leaf().reason {
        Reason::ChainBpFibration { table_case, .. } => assert!(
            table_case.contains("mwz"),
            "criterion 11: FAIL - 4231 chain does not end in a type A pair check ({table_case})"
        ),
        other => panic!("criterion 11: FAIL - 4231 chain ends in {other:?}"),
    }
    // 3412: transferred from 3142
    let cert = decide_spherical(&perm(&s, &[3, 4, 1, 2])).unwrap();
    match &cert.reason {
        Reason::KempfTransfer { alpha, inner } => {
            assert_eq!(*alpha, 1, "criterion 11: FAIL - 3412 transfers along s{}", alpha + 1);
            let below = perm(&s, &[3, 4, 1, 2]).times_simple(*alpha);
            assert_eq!(below, perm(&s, &[3, 1, 4, 2]), "criterion 11: FAIL - transfer target");
            assert!(
                matches!(inner.reason, Reason::ChainBpFibration { .. }),
                "criterion 11: FAIL - 3142 not certified by a fibration"
            );
        }
        other => panic!("criterion 11: FAIL - 3412 certified by {other:?}"),
    }
    pass(11, t, "all 24 elements spherical; 4231 and 3412 use the required transfers");
}

#[test]
fn criterion_12_g2_theorem() {
    let t = Instant::now();
    let s = sys(Family::G, 2);
    let g = group(&s);
    for w in g.elements() {
        let cert = decide_spherical(w).unwrap();
        assert_eq!(
            cert.verdict,
            Verdict::Spherical,
            "criterion 12: FAIL - {w} got {:?}",
            cert.verdict
        );
        verify_certificate(w, &cert)
            .unwrap_or_else(|e| panic!("criterion 12: FAIL - certificate of {w}: {e}"));
    }
    assert_eq!(
        weak_maximal_chain_count(&g),
        2,
        "criterion 12: FAIL - maximal chain count"
    );
    // walk both maximal chains and check the stabilizer is constant on the
    // interior
    let w0 = longest_element(&s, SimpleSet::all(2));
    let mut chains: Vec<Vec<WeylElement>> = Vec::new();
    let mut stack = vec![vec![WeylElement::identity(&s)]];
    while let Some(chain) = stack.pop() {
        let last = chain.last().unwrap();
        if last == &w0 {
            chains.push(chain);
            continue;
        }
        for i in 0..2 {
            let up = last.times_simple(i);
            if up.length() == last.length() + 1 {
                let mut next = chain.clone();
                next.push(up);
                stack.push(next);
            }
        }
    }
    assert_eq!(chains.len(), 2, "criterion 12: FAIL - chain walk");
    for chain in &chains {
        let interior = &chain[1..chain.len() - 1];
        let levi = interior[0].simple_inversions();
        assert!(
            interior.iter().all(|w| w.simple_inversions() == levi),
            "criterion 12: FAIL - stabilizer varies along a chain interior"
        );
    }
    pass(12, t, "all 12 elements spherical; two maximal chains with constant interior Levi");
}

#[test]
fn criterion_13_negative_classification() {
    let t = Instant::now();
    for n in [5usize, 6] {
        let rank = n - 1;
        let s = sys(Family::A, rank);
        let w0 = longest_element(&s, SimpleSet::all(rank));
        for i in 2..=(n - 2) {
            let w = w0.times_simple(i - 1);
            let cert = decide_spherical(&w).unwrap();
            assert_eq!(
                cert.verdict,
                Verdict::NotSpherical,
                "criterion 13: FAIL - w0 s{i} in GL{n} got {:?}",
                cert.verdict
            );
            let Reason::NegativeClassification { node } = cert.reason else {
                panic!("criterion 13: FAIL - wrong reason for w0 s{i} in GL{n}");
            };
            verify_certificate(&w, &cert)
                .unwrap_or_else(|e| panic!("criterion 13: FAIL - certificate: {e}"));
            // the embedded pair query rejects with a large parabolic complement
            let ic = SimpleSet::all(rank).minus(w.simple_inversions());
            let jc = SimpleSet::all(rank).remove(node);
            assert!(jc.len() >= 3, "criterion 13: FAIL - |Jc| = {} < 3", jc.len());
            assert!(
                !mwz_type_a_pair(rank, ic, jc),
                "criterion 13: FAIL - pair table accepts w0 s{i} in GL{n}"
            );
        }
    }
    pass(13, t, "every interior cut below the longest element of GL5 and GL6 is rejected");
}

#[test]
fn criterion_14_e6_catalogue_sanity() {
    let t = Instant::now();
    let e6 = sys(Family::E, 6);
    let j6 = SimpleSet::all(6).remove(1);
    let s5 = SimpleSet::from_indices(0..5);
    let j5 = s5.remove(1);
    let v5 = longest_element(&e6, s5).min_coset_rep(j5);
    let u6 = longest_element(&e6, j6);
    let w65 = e_catalogue_element(&e6, ECatalogueIndex::new(6, 5).unwrap()).unwrap();
    assert_eq!(
        w65,
        v5.multiply(&u6).unwrap(),
        "criterion 14: FAIL - catalogue construction"
    );
    assert_eq!(
        w65.length(),
        v5.length() + u6.length(),
        "criterion 14: FAIL - length additivity"
    );
    let rs = is_rationally_smooth(&w65, DEFAULT_INTERVAL_CAP).unwrap();
    assert!(rs, "criterion 14: FAIL - w_65 is not palindromic");
    // The support clause contradicts the length clause: the quotient factor
    // v_5 ends in the removed node s2, so s2 lies in the support, and indeed
    // l(w_65) = 28 exceeds the 20 positive roots of the J_6 subsystem. The
    // check is asserted as stated and fails; see the decisions ledger.
    assert!(
        w65.support().is_subset_of(&j6),
        "criterion 14: FAIL - support(w_65) = {} is not contained in J_6 = {} \
         (unsatisfiable together with l(w_65) = l(v_5) + l(u_6) = {}, since a \
         J_6-supported element has length at most {})",
        w65.support(),
        j6,
        w65.length(),
        e6.sub_positive_mask(j6).count_ones()
    );
    pass(14, t, "catalogue lengths, palindromicity, and support all hold");
}
