//! Reducible-surgery analysis for L-space knots.
//!
//! An L-space knot of genus `g` can only have `2g - 1` as a reducing slope.
//! If `2g - 1 = pq` with `p > q > 1` coprime (both odd), the sum identity
//! pins down long runs of equal `V_i`, which translates into knot-thickness
//! bounds `q - 1 <= th <= (p + q)/2`. When additionally `p - q = 2`, the
//! whole V-sequence (hence the Alexander polynomial) is determined; this
//! module implements both the sequencing reconstruction and the closed-form
//! polynomial, and cross-checks one against the other.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::alexander::AlexanderPoly;
use crate::error::{Error, Result};
use crate::knot::{thickness, vi_from_alex, ViSequence};
use crate::reducibility::{check_reducible_constraints, ReducibleHypothesis};

fn validate_odd_pair(p: i64, q: i64) -> Result<i64> {
    if q <= 1 || p <= q {
        return Err(Error::InvalidHypothesis { p, q });
    }
    if p % 2 == 0 || q % 2 == 0 {
        return Err(Error::ParityViolation { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok((p - q) / 2)
}

/// Lower bound on the thickness of an L-space knot with a reducible surgery
/// at slope `pq = 2g - 1`, by the length of a forced run of equal `V_i`:
/// with `m = (p - q)/2`,
///
/// * `m = 1` gives `q - 1`,
/// * `1 < m < q + 2` gives `q + m - 2`,
/// * `m >= q + 2` gives `2(q - 1)`.
pub fn thickness_lower_bound(p: i64, q: i64) -> Result<i64> {
    let m = validate_odd_pair(p, q)?;
    Ok(if m == 1 {
        q - 1
    } else if m < q + 2 {
        q + m - 2
    } else {
        2 * (q - 1)
    })
}

/// Upper bound `q + m = (p + q)/2` on the thickness under the same
/// hypothesis.
pub fn thickness_upper_bound(p: i64, q: i64) -> Result<i64> {
    validate_odd_pair(p, q)?;
    Ok((p + q) / 2)
}

fn smallest_odd_prime_factor(n: i64) -> i64 {
    debug_assert!(n >= 1 && n % 2 == 1);
    let mut f = 3;
    while f * f <= n {
        if n % f == 0 {
            return f;
        }
        f += 2;
    }
    n
}

/// Branch taken by the small-thickness test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallThickVerdict {
    /// `2g - 1 = 1`, never a reducing slope.
    SlopeTooSmall,
    /// `2g - 1` prime: any splitting would need a trivial lens summand,
    /// impossible for a fibered knot.
    PrimeSlope,
    /// `th < t - 1` for the smallest prime factor `t` of `2g - 1`, so the
    /// thickness lower bound fails for every factorization.
    ThicknessBelowBound,
    /// The test does not exclude a reducing slope.
    NotExcluded,
}

/// Outcome of the small-thickness test with the numbers behind it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallThickDetail {
    pub g: i64,
    pub th: i64,
    /// The only candidate slope, `2g - 1`.
    pub slope: i64,
    pub smallest_prime_factor: i64,
    pub verdict: SmallThickVerdict,
}

impl SmallThickDetail {
    pub fn excluded(&self) -> bool {
        self.verdict != SmallThickVerdict::NotExcluded
    }
}

/// Runs the small-thickness test for a hyperbolic L-space knot of genus
/// `g` and thickness `th`; see [`SmallThickVerdict`] for the branches.
/// Thin knots (`th = 0`) are always excluded.
pub fn smallthick_detail(g: i64, th: i64) -> SmallThickDetail {
    assert!(g >= 1, "genus must be at least 1");
    assert!(th >= 0, "thickness is non-negative");
    let slope = 2 * g - 1;
    let t = smallest_odd_prime_factor(slope);
    let verdict = if slope == 1 {
        SmallThickVerdict::SlopeTooSmall
    } else if t == slope {
        SmallThickVerdict::PrimeSlope
    } else if th < t - 1 {
        SmallThickVerdict::ThicknessBelowBound
    } else {
        SmallThickVerdict::NotExcluded
    };
    SmallThickDetail { g, th, slope, smallest_prime_factor: t, verdict }
}

/// Whether a hyperbolic L-space knot of genus `g` and thickness `th` is
/// barred from having a reducing slope.
pub fn smallthick_obstruction(g: i64, th: i64) -> bool {
    smallthick_detail(g, th).excluded()
}

/// Run-length view of `V_0 ... V_{g-1}`: maximal blocks of equal values.
///
/// Adjacent runs always differ by exactly 1 (the V-step property), so the
/// run values strictly decrease.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    runs: Vec<(i64, i64)>,
    central_block: Option<usize>,
}

impl BlockDecomposition {
    /// `(value, length)` pairs in index order.
    pub fn runs(&self) -> &[(i64, i64)] {
        &self.runs
    }

    /// Index into [`runs`](Self::runs) of the run containing the central
    /// q-block, when located under a slope hypothesis.
    pub fn central_block(&self) -> Option<usize> {
        self.central_block
    }

    pub fn longest_run(&self) -> i64 {
        self.runs.iter().map(|&(_, len)| len).max().unwrap_or(0)
    }
}

/// Run-length encodes `V_0 ... V_{g-1}` (the final `V_g = 0` is excluded).
pub fn block_decomposition(v: &ViSequence) -> BlockDecomposition {
    let vals = &v.values()[..v.values().len() - 1];
    let mut runs: Vec<(i64, i64)> = Vec::new();
    for &x in vals {
        match runs.last_mut() {
            Some((value, len)) if *value == x => *len += 1,
            _ => runs.push((x, 1)),
        }
    }
    BlockDecomposition { runs, central_block: None }
}

/// Like [`block_decomposition`], additionally locating the run that
/// contains the central q-block `V_{k+1} ... V_{k+q}`,
/// `k = (p-1)(q-1)/2 - 1`, under the hypothesis that `pq` is a reducing
/// slope with summand orders `(p, q)`. `central_block` stays `None` when
/// those indices are not covered by a single run.
pub fn block_decomposition_for_slope(v: &ViSequence, p: i64, q: i64) -> Result<BlockDecomposition> {
    let h = ReducibleHypothesis::new(p, q)?;
    let mut dec = block_decomposition(v);
    let k = h.ell_max() - 1;
    let (lo, hi) = (k + 1, k + h.q());
    let mut start = 0i64;
    for (idx, &(_, len)) in dec.runs.iter().enumerate() {
        if start <= lo && hi < start + len {
            dec.central_block = Some(idx);
            break;
        }
        start += len;
    }
    Ok(dec)
}

/// The V-sequence forced on an L-space knot with a reducible surgery at
/// slope `pq = 2g - 1` when `p = q + 2` (so `g = (q+1)^2 / 2`), for odd
/// `q >= 3`.
///
/// Everything from the central q-block up is pinned
/// (`V_{k+1} = ... = V_{g-1} = 1`, zero beyond), and each sum-identity
/// instance at `l = k, k-1, ..., 0` then determines `V_l` from the
/// already-known higher-index values.
pub fn reconstruct_vi_pq2(q: i64) -> Result<ViSequence> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::InvalidReconstructionParam { q });
    }
    let p = q + 2;
    let pq = p * q;
    let g = (pq + 1) / 2;
    let k = (p - 1) * (q - 1) / 2 - 1;
    let mut values = alloc::vec![0i64; g as usize + 1];
    for j in (k + 1)..g {
        values[j as usize] = 1;
    }
    // indices above g read as 0; everything needed at step l is above l
    let read = |values: &[i64], j: i64| -> i64 {
        debug_assert!(j > 0);
        if j >= g {
            0
        } else {
            values[j as usize]
        }
    };
    for ell in (0..=k).rev() {
        let rhs = k + 1 - ell;
        let mut known = 0i64;
        for i in 0..q {
            if i > 0 {
                known += read(&values, ell + i);
            }
            let j = ell + i + p;
            known -= read(&values, j.min(pq - j));
        }
        values[ell as usize] = rhs - known;
    }
    ViSequence::new(values)
}

/// The closed-form non-negative half of the Alexander polynomial forced in
/// the `p - q = 2` case, symmetrized. The shape depends on `p` mod 4.
pub fn gen_alex_pq2(q: i64) -> Result<AlexanderPoly> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::InvalidReconstructionParam { q });
    }
    let p = q + 2;
    let g = (p * q + 1) / 2;
    let mut half: Vec<(i64, i64)> = Vec::new();
    half.push((g, 1));
    half.push((g - 1, -1));
    if p % 4 == 3 {
        half.push((0, 1));
        for j in 1..=(p - 3) / 4 {
            half.push((2 * j, 1));
            half.push((2 * j - 1, -1));
        }
    } else {
        for j in 1..=(p - 1) / 4 {
            half.push((2 * j - 1, 1));
            half.push((2 * (j - 1), -1));
        }
    }
    for i in 1..=(q - 1) / 2 {
        for j in 1..=i {
            half.push((g - i * p + 2 * j - 1, 1));
            half.push((g - i * p + 2 * j - 2, -1));
        }
    }
    let poly = AlexanderPoly::from_half(&half)?;
    debug_assert_eq!(poly.genus(), g);
    debug_assert!(poly.is_lspace_form());
    Ok(poly)
}

/// Detailed outcome of the two-route `p - q = 2` consistency check.
#[derive(Clone, Debug)]
pub struct Pq2CrossCheck {
    pub q: i64,
    pub p: i64,
    pub genus: i64,
    /// V-sequence from the sequencing reconstruction.
    pub reconstructed: ViSequence,
    /// Torsion coefficients of the closed-form polynomial agree with the
    /// reconstruction.
    pub vi_match: bool,
    /// The reconstruction satisfies every sum-identity instance.
    pub constraints_pass: bool,
    pub thickness: i64,
    pub thickness_lower: i64,
    pub thickness_upper: i64,
    /// Longest run of equal `V_i`, and the largest length any valid
    /// reconstruction could exhibit, `(p+q)/2 + 2`.
    pub longest_run: i64,
    pub run_bound: i64,
}

impl Pq2CrossCheck {
    pub fn ok(&self) -> bool {
        self.vi_match
            && self.constraints_pass
            && self.thickness_lower <= self.thickness
            && self.thickness <= self.thickness_upper
    }
}

/// Runs both derivations of the forced knot Floer data and compares them;
/// see [`Pq2CrossCheck`].
pub fn cross_check_pq2_detail(q: i64) -> Result<Pq2CrossCheck> {
    let reconstructed = reconstruct_vi_pq2(q)?;
    let poly = gen_alex_pq2(q)?;
    let from_poly = vi_from_alex(&poly)?;
    let p = q + 2;
    let th = thickness(&poly)?;
    Ok(Pq2CrossCheck {
        q,
        p,
        genus: poly.genus(),
        vi_match: from_poly == reconstructed,
        constraints_pass: check_reducible_constraints(&reconstructed, p, q)?.is_pass(),
        thickness: th,
        thickness_lower: thickness_lower_bound(p, q)?,
        thickness_upper: thickness_upper_bound(p, q)?,
        longest_run: block_decomposition(&reconstructed).longest_run(),
        run_bound: (p + q) / 2 + 2,
        reconstructed,
    })
}

/// True iff the sequencing reconstruction matches the closed-form
/// polynomial's torsion coefficients and the thickness lands inside
/// `[q - 1, (p + q)/2]`.
pub fn cross_check_pq2(q: i64) -> Result<bool> {
    Ok(cross_check_pq2_detail(q)?.ok())
}
