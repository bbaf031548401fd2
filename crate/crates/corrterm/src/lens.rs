//! d-invariants (correction terms) of lens spaces.
//!
//! `d(L(p, q), i)` is computed by the Ozsváth–Szabó recursion
//!
//! ```text
//! d(L(p,q), i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(L(q, p mod q), i mod q)
//! ```
//!
//! with base case `d(S^3) = 0` (any `L(1, *)`). The recursion strictly
//! reduces the first parameter, so it terminates like the Euclidean
//! algorithm. Spin^c structures are labelled by residues `i` mod `p`; the
//! labelling is only canonical up to an affine offset, so cross-manifold
//! comparisons elsewhere in the crate go through unordered multisets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::surgery::DInvariantTable;

/// A lens space `L(p, q)` with `q` normalized into `[0, p)`.
///
/// `L(1, 0)` is the 3-sphere. Callers may pass any `q` (for example a
/// surgery coefficient numerator larger than `p`); it is reduced mod `p`
/// on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidOrder { p });
        }
        let qn = q.rem_euclid(p);
        if p > 1 && p.gcd(&qn) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(LensSpace { p, q: qn })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Normalized second parameter, in `[0, p)`.
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_sphere(&self) -> bool {
        self.p == 1
    }
}

/// Memoized evaluator for lens-space d-invariants.
///
/// Batch scans hit the same small lens spaces over and over, so results are
/// cached on the normalized `(p, q, i)` triple. The cache only ever grows;
/// for concurrent sweeps, give each worker its own calculator.
#[derive(Default)]
pub struct LensCalculator {
    memo: BTreeMap<(i64, i64, i64), Rational>,
}

impl LensCalculator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `d(L(p, q), i)` for `0 <= i <= p - 1`.
    pub fn d_lens(&mut self, p: i64, q: i64, i: i64) -> Result<Rational> {
        let lens = LensSpace::new(p, q)?;
        if i < 0 || i >= lens.p() {
            return Err(Error::SpincOutOfRange { i, p: lens.p() });
        }
        Ok(self.eval(lens.p(), lens.q(), i))
    }

    /// All `p` d-invariants of `L(p, q)`, indexed by spin^c residue.
    pub fn d_lens_table(&mut self, p: i64, q: i64) -> Result<DInvariantTable> {
        let lens = LensSpace::new(p, q)?;
        let values: Vec<Rational> = (0..lens.p())
            .map(|i| self.eval(lens.p(), lens.q(), i))
            .collect();
        Ok(DInvariantTable::from_values(values))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Invariants here: `p >= 1`, `0 <= q < p`, `gcd(p, q) = 1`, `0 <= i < p`.
    fn eval(&mut self, p: i64, q: i64, i: i64) -> Rational {
        if p == 1 {
            return Rational::zero();
        }
        if let Some(v) = self.memo.get(&(p, q, i)) {
            return v.clone();
        }
        // the quadratic term, in BigInt so huge p cannot overflow
        let t = BigInt::from(2) * i + 1 - p - q;
        let num = &t * &t - BigInt::from(p) * q;
        let den = BigInt::from(4) * p * q;
        let term = Rational::from_big(num, den);
        let tail = self.eval(q, p % q, i % q);
        let value = term - tail;
        self.memo.insert((p, q, i), value.clone());
        value
    }
}

/// One-shot `d(L(p, q), i)` without a shared cache.
pub fn d_lens(p: i64, q: i64, i: i64) -> Result<Rational> {
    LensCalculator::new().d_lens(p, q, i)
}

/// One-shot table of all `p` values of `d(L(p, q), ·)`.
pub fn d_lens_table(p: i64, q: i64) -> Result<DInvariantTable> {
    LensCalculator::new().d_lens_table(p, q)
}

/// Index of the conjugate spin^c structure: `i -> (p + q - 1 - i) mod p`.
///
/// d-invariants are conjugation-invariant, so `d(L(p,q), i)` equals
/// `d(L(p,q), conjugate_spinc_lens(p, q, i))`.
pub fn conjugate_spinc_lens(p: i64, q: i64, i: i64) -> i64 {
    debug_assert!(p >= 1);
    (p + q - 1 - i).rem_euclid(p)
}
