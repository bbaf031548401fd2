//! Exact Heegaard Floer correction terms and reducible-surgery obstructions.
//!
//! Everything is computed in exact rational arithmetic; the crate contains
//! no floating point. The main pipelines:
//!
//! * [`lens`] — d-invariants of lens spaces by the Ozsváth–Szabó recursion,
//!   with memoization;
//! * [`knot`] — the L-space-knot model: torsion coefficients / `V_i`,
//!   `nu_plus`, staircase gradings and knot thickness, torus-knot
//!   Alexander polynomials;
//! * [`surgery`] — the Ni–Wu formula for surgery d-invariants,
//!   connected-sum multisets, and the Moser identity
//!   `S^3_{pq}(T(p,q)) = L(p,q) # L(q,p)` as an end-to-end cross-check;
//! * [`reducibility`] — the sum-identity obstructions to reducible
//!   surgeries, slice-knot consequences, and slope filters;
//! * [`lspace`] — thickness bounds for L-space knots with reducible
//!   surgeries and the complete `p - q = 2` reconstruction.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and safe to use from concurrent batch scans. The one piece
//! of mutable state, the lens-space memo in [`lens::LensCalculator`], is
//! confined to whichever worker owns it.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alexander;
pub mod error;
pub mod knot;
pub mod lens;
pub mod lspace;
pub mod rational;
pub mod reducibility;
pub mod surgery;

pub use alexander::{validate_lspace, AlexanderPoly};
pub use error::{Error, Result};
pub use knot::{
    check_v4ball_bound, staircase, thickness, torsion_coeffs, torus_alex, v4ball_first_violation,
    vi_from_alex, Staircase, StaircaseGenerator, ViSequence,
};
pub use lens::{conjugate_spinc_lens, d_lens, d_lens_table, LensCalculator, LensSpace};
pub use lspace::{
    block_decomposition, block_decomposition_for_slope, cross_check_pq2, cross_check_pq2_detail,
    gen_alex_pq2, reconstruct_vi_pq2, smallthick_detail, smallthick_obstruction,
    thickness_lower_bound, thickness_upper_bound, BlockDecomposition, Pq2CrossCheck,
    SmallThickDetail, SmallThickVerdict,
};
pub use rational::Rational;
pub use reducibility::{
    alpha, check_reducible_constraints, consecutive_slope_filter, fibered_slope_filter,
    slice_genus_bound, slice_lens_params, slice_reducible_verdict, slice_slope_candidates,
    sum_identity_lhs, Evidence, ObstructionReport, ReducibleHypothesis, Verdict,
};
pub use surgery::{
    d_connected_sum_multiset, d_surgery, d_surgery_table, moser_check, DInvariantTable,
    SurgeryDescription,
};
