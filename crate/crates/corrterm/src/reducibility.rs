//! Obstructions to reducible surgeries built on the V-sequence sum identity.
//!
//! If `pq`-surgery on a knot splits as a connected sum of pieces whose
//! second cohomologies have orders `p` and `q`, then for every
//! `0 <= l <= (p-1)(q-1)/2` the V-sequence must satisfy
//!
//! ```text
//! sum_{i=0}^{q-1} ( V_{l+i} - V_{alpha(l+i+p)} ) = (p-1)(q-1)/2 - l,
//! alpha(j) = min(j, pq - j).
//! ```
//!
//! A knot whose V-sequence violates any instance cannot admit a reducible
//! surgery of that shape. Specializing to `V = 0` (slice knots) forces
//! `q = 1`, lens parameter `a = 1`, and a complementary summand with
//! vanishing d-invariant.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::knot::ViSequence;
use crate::rational::Rational;

/// A hypothesized splitting of `pq`-surgery, with summand orders `p > q >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReducibleHypothesis {
    p: i64,
    q: i64,
}

impl ReducibleHypothesis {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 1 || p <= q {
            return Err(Error::InvalidHypothesis { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(ReducibleHypothesis { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn slope(&self) -> i64 {
        self.p * self.q
    }

    /// Largest admissible `l`: `(p-1)(q-1)/2`.
    pub fn ell_max(&self) -> i64 {
        (self.p - 1) * (self.q - 1) / 2
    }
}

/// `alpha(j) = min(j, pq - j)` for `0 <= j <= pq`.
pub fn alpha(j: i64, pq: i64) -> Result<i64> {
    if j < 0 || j > pq {
        return Err(Error::AlphaOutOfRange { j, pq });
    }
    Ok(j.min(pq - j))
}

/// Left-hand side of the sum identity at `l`, evaluated through the
/// symmetric index extension of the V-sequence.
pub fn sum_identity_lhs(v: &ViSequence, p: i64, q: i64, ell: i64) -> Result<i64> {
    let h = ReducibleHypothesis::new(p, q)?;
    if ell < 0 || ell > h.ell_max() {
        return Err(Error::EllOutOfRange { ell, max: h.ell_max() });
    }
    Ok(sum_lhs_unchecked(v, &h, ell))
}

/// No range validation; indices `l + i + p` stay within `0..=pq` whenever
/// `0 <= l <= (p-1)(q-1)/2`.
fn sum_lhs_unchecked(v: &ViSequence, h: &ReducibleHypothesis, ell: i64) -> i64 {
    let pq = h.slope();
    (0..h.q())
        .map(|i| {
            let j = ell + i + h.p();
            v.at(ell + i) - v.at(j.min(pq - j))
        })
        .sum()
}

/// Outcome of an obstruction check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Contradiction,
}

/// One item of the evidence trail backing a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// An instance of the sum identity: holds iff `lhs == rhs`.
    SumIdentity { ell: i64, lhs: i64, rhs: i64 },
    /// The conclusion forced on a slice knot when `q = 1`: the lens summand
    /// is `L(p, 1)` and the other summand has `d = 0`.
    ForcedConclusion { lens_param: i64, summand_d: Rational },
    /// A case tag for branches that are not numeric identities.
    Note(String),
}

impl Evidence {
    pub fn is_failing_sum(&self) -> bool {
        matches!(self, Evidence::SumIdentity { lhs, rhs, .. } if lhs != rhs)
    }
}

/// Structured verdict plus the per-`l` or per-case evidence trail.
///
/// On a pass the evidence lists every checked identity; on a contradiction
/// it lists exactly the failing ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
}

impl ObstructionReport {
    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failing_ells(&self) -> Vec<i64> {
        self.evidence
            .iter()
            .filter_map(|e| match e {
                Evidence::SumIdentity { ell, lhs, rhs } if lhs != rhs => Some(*ell),
                _ => None,
            })
            .collect()
    }
}

/// Checks every instance of the sum identity for the hypothesis `(p, q)`.
///
/// A contradiction means no surgery at slope `pq` on a knot with this
/// V-sequence can split off summands of orders `p` and `q`.
pub fn check_reducible_constraints(v: &ViSequence, p: i64, q: i64) -> Result<ObstructionReport> {
    let h = ReducibleHypothesis::new(p, q)?;
    let mut rows = Vec::new();
    let mut failing = Vec::new();
    for ell in 0..=h.ell_max() {
        let lhs = sum_lhs_unchecked(v, &h, ell);
        let rhs = h.ell_max() - ell;
        let row = Evidence::SumIdentity { ell, lhs, rhs };
        if lhs != rhs {
            failing.push(row.clone());
        }
        rows.push(row);
    }
    Ok(if failing.is_empty() {
        ObstructionReport { verdict: Verdict::Pass, evidence: rows }
    } else {
        ObstructionReport { verdict: Verdict::Contradiction, evidence: failing }
    })
}

/// Lens parameters `a` compatible with a reducible surgery on a slice knot:
/// coprime `a` with `1 <= a < p` such that some integer `s` in `0..=p`
/// solves `s(p - s) = p - a`.
///
/// The companion case `s(p - s) = -a` has no solution since the left side
/// is non-negative. Since `s(p - s) >= p - 1` for `0 < s < p`, the returned
/// set is `{1}` for every `p > 1`.
pub fn slice_lens_params(p: i64) -> BTreeSet<i64> {
    assert!(p > 1, "lens order must exceed 1");
    let mut out = BTreeSet::new();
    for s in 0..=p {
        let a = p as i128 - s as i128 * (p - s) as i128;
        if a < 1 || a >= p as i128 {
            continue;
        }
        let a = a as i64;
        if p.gcd(&a) == 1 {
            out.insert(a);
        }
    }
    out
}

/// The slice-knot verdict for a hypothesized splitting into summands of
/// orders `p` (lens) and `q`.
///
/// With `V = 0` the sum identity forces `(p-1)(q-1) = 0`; a splitting with
/// `q > 1` is contradicted, and `q = 1` forces `L(p, 1)` with a
/// d-invariant-zero complementary summand.
pub fn slice_reducible_verdict(p: i64, q: i64) -> Result<ObstructionReport> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidHypothesis { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    if q == 1 {
        let mut evidence = Vec::new();
        if p == 1 {
            evidence.push(Evidence::Note(String::from("trivial: p = q = 1")));
        }
        evidence.push(Evidence::ForcedConclusion {
            lens_param: 1,
            summand_d: Rational::zero(),
        });
        return Ok(ObstructionReport { verdict: Verdict::Pass, evidence });
    }
    if p == 1 {
        // lens summand trivial: the remaining summand alone cannot make the
        // surgery reducible
        return Ok(ObstructionReport {
            verdict: Verdict::Contradiction,
            evidence: alloc::vec![Evidence::Note(String::from(
                "p = 1: splitting reduces to a single irreducible summand",
            ))],
        });
    }
    let (hi, lo) = if p > q { (p, q) } else { (q, p) };
    check_reducible_constraints(&ViSequence::zero(), hi, lo)
}

/// Slice-genus lower bound `(p-1)(q-1)/2` for a knot admitting a reducible
/// surgery with summand orders `p > q > 1`; the identity at `l = 0` keeps
/// `V_i` positive below that index, so `nu_plus` is at least the bound.
pub fn slice_genus_bound(p: i64, q: i64) -> Result<i64> {
    if q <= 1 || p <= q {
        return Err(Error::InvalidHypothesis { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok((p - 1) * (q - 1) / 2)
}

/// All slopes `pq` with `p > q > 1` coprime and `(p-1)(q-1)/2 <= gs`,
/// as `(slope, p, q)` sorted by slope. These are the only slopes at which
/// a knot of slice genus `gs` could split off two summands with
/// non-trivial homology.
pub fn slice_slope_candidates(gs: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    if gs <= 0 {
        return out;
    }
    let mut q = 2;
    while (q - 1) * (q - 1) < 2 * gs {
        let mut p = q + 1;
        while (p - 1) * (q - 1) <= 2 * gs {
            if p.gcd(&q) == 1 {
                out.push((p * q, p, q));
            }
            p += 1;
        }
        q += 1;
    }
    out.sort();
    out
}

/// Upper bound on reducing slopes for fibered knots whose surgery splits
/// off a homology sphere: slope `r` is impossible when `r > g`.
pub fn fibered_slope_filter(r: i64, g: i64) -> bool {
    r > g
}

/// Consecutive reducing slopes `r` and `r + 1`, both splitting off integer
/// homology sphere summands, are impossible for a knot with `nu < g` when
/// `r + 1 > g`.
pub fn consecutive_slope_filter(r: i64, g: i64, nu_less_than_g: bool) -> bool {
    nu_less_than_g && r + 1 > g
}
