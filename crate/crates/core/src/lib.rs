//! Combinatorics of Schubert varieties: root systems, Weyl groups, inversion
//! sets, Bruhat and weak orders, Billey-Postnikov decompositions, smoothness
//! tests, and an executable decision procedure that emits verifiable
//! sphericity certificates for the standard Levi action on a Schubert
//! variety.
//!
//! Everything is exact integer or rational arithmetic over fixed-width bit
//! masks; all types are immutable after construction and safe to share across
//! threads.

pub mod bp;
pub mod diagram;
mod error;
pub mod inversion;
pub mod order;
pub mod parastab;
pub mod rootsys;
pub mod smooth;
pub mod spherical;
pub mod weyl;

pub use bp::{
    bp_conditions, bp_decomposition, chain_bp_candidates, e_catalogue, e_catalogue_element,
    e_catalogue_match, find_chain_bp, is_bp, is_bp_checked, is_chain_bp, is_grassmannian_bp,
    parabolic_decompose, BPDecomposition, ECatalogueIndex, Side,
};
pub use diagram::{components, components_of_type, DiagramComponent};
pub use error::{Error, Result};
pub use inversion::{check_concat, element_from_biclosed, InversionSet, InversionSide};
pub use order::{
    bruhat_downsets, bruhat_leq, covers_bruhat, covers_weak_left, covers_weak_right,
    is_chain_in_quotient, lower_interval_bruhat, poincare, quotient_interval, quotient_poincare,
    weak_leq_left, weak_leq_right, weak_maximal_chain_count, weak_right_downsets, BruhatMemo,
    OrderTable, PoincarePolynomial, DEFAULT_INTERVAL_CAP,
};
pub use parastab::{
    check_stab_monotone, coset_stabilizer_support, levi_support, levi_support_via_covers,
    LeviSupport,
};
pub use rootsys::{
    build_root_system, CartanType, Family, Root, RootSubset, RootSystem, MAX_POSITIVE_ROOTS,
    MAX_RANK,
};
pub use smooth::{
    avoids_pattern, is_rationally_smooth, is_smooth, is_smooth_default, smooth_divisors,
    SmoothMethod, SmoothVerdict, SmoothnessReport,
};
pub use spherical::{
    brundan_spherical_levi, decide_spherical, decide_spherical_with, mwz_type_a_case,
    mwz_type_a_pair, stembridge_type_d_case, stembridge_type_d_pair, toral_cell_test,
    verify_certificate, DecideOptions, PairCase, PairTableQuery, Reason, SphericalCertificate,
    Verdict,
};
pub use weyl::{longest_element, SimpleSet, WeylElement, WeylGroup};
