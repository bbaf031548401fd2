//! d-invariants of surgeries on knots, via the Ni–Wu formula
//!
//! ```text
//! d(S^3_{p/q}(K), i) = d(L(p,q), i) - 2 max{ V_{floor(i/q)}, V_{floor((p+q-1-i)/q)} }
//! ```
//!
//! for `0 <= i <= p - 1`, together with connected-sum multisets and the
//! Moser identity `S^3_{pq}(T(p,q)) = L(p,q) # L(q,p)` as an end-to-end
//! cross-check of every convention in the crate.
//!
//! Only positive slopes are accepted; mirror the knot for negative ones.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::knot::{torus_alex, vi_from_alex, ViSequence};
use crate::lens::LensCalculator;
use crate::rational::Rational;

/// d-invariants of one manifold, indexed by spin^c residue `0..p`.
///
/// Spin^c labels are only canonical up to an affine offset, so comparisons
/// between different manifolds should use [`DInvariantTable::multiset`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DInvariantTable {
    values: Vec<Rational>,
}

impl DInvariantTable {
    pub(crate) fn from_values(values: Vec<Rational>) -> Self {
        DInvariantTable { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: i64) -> Option<&Rational> {
        usize::try_from(i).ok().and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.values.iter().enumerate().map(|(i, d)| (i as i64, d))
    }

    /// The unordered view: values sorted ascending, with multiplicity.
    pub fn multiset(&self) -> Vec<Rational> {
        let mut m = self.values.clone();
        m.sort();
        m
    }
}

/// A positive surgery `p/q` on a knot with the given V-sequence.
#[derive(Clone, Debug)]
pub struct SurgeryDescription {
    p: i64,
    q: i64,
    v: ViSequence,
}

impl SurgeryDescription {
    pub fn new(p: i64, q: i64, v: ViSequence) -> Result<Self> {
        if p <= 0 || q <= 0 {
            return Err(Error::NonPositiveSlope { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(SurgeryDescription { p, q, v })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn v(&self) -> &ViSequence {
        &self.v
    }
}

impl LensCalculator {
    /// `d(S^3_{p/q}(K), i)` from the knot's V-sequence.
    pub fn d_surgery(&mut self, p: i64, q: i64, v: &ViSequence, i: i64) -> Result<Rational> {
        if p <= 0 || q <= 0 {
            return Err(Error::NonPositiveSlope { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        if i < 0 || i >= p {
            return Err(Error::SpincOutOfRange { i, p });
        }
        let lens = self.d_lens(p, q, i)?;
        let correction = v.at(i / q).max(v.at((p + q - 1 - i) / q));
        Ok(lens - Rational::from_int(2 * correction))
    }

    /// Full table of `d(S^3_{p/q}(K), ·)` over all `p` spin^c structures.
    pub fn d_surgery_table(&mut self, p: i64, q: i64, v: &ViSequence) -> Result<DInvariantTable> {
        let desc = SurgeryDescription::new(p, q, v.clone())?;
        let values: Result<Vec<Rational>> = (0..desc.p())
            .map(|i| self.d_surgery(desc.p(), desc.q(), desc.v(), i))
            .collect();
        Ok(DInvariantTable::from_values(values?))
    }

    /// Checks the Moser identity for the torus knot `T(p, q)`: the
    /// d-invariant multiset of `pq`-surgery on `T(p,q)` must equal that of
    /// `L(p,q) # L(q, p mod q)`. Requires `2 <= q < p` coprime.
    ///
    /// Passing for all small `(p, q)` transitively certifies the lens
    /// recursion, the surgery formula, the torsion-coefficient extraction,
    /// and all sign conventions at once.
    pub fn moser_check(&mut self, p: i64, q: i64) -> Result<bool> {
        if q < 2 || p <= q {
            return Err(Error::InvalidTorusParams { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        let v = vi_from_alex(&torus_alex(p, q)?)?;
        let surgery = self.d_surgery_table(p * q, 1, &v)?;
        let lens_p = self.d_lens_table(p, q)?;
        let lens_q = self.d_lens_table(q, p % q)?;
        let sum = d_connected_sum_multiset(&lens_p, &lens_q);
        Ok(surgery.multiset() == sum)
    }
}

/// One-shot surgery d-invariant without a shared cache.
pub fn d_surgery(p: i64, q: i64, v: &ViSequence, i: i64) -> Result<Rational> {
    LensCalculator::new().d_surgery(p, q, v, i)
}

/// One-shot surgery table without a shared cache.
pub fn d_surgery_table(p: i64, q: i64, v: &ViSequence) -> Result<DInvariantTable> {
    LensCalculator::new().d_surgery_table(p, q, v)
}

/// The sorted multiset `{ a + b : a in A, b in B }` given by d-invariant
/// additivity under connected sum.
pub fn d_connected_sum_multiset(a: &DInvariantTable, b: &DInvariantTable) -> Vec<Rational> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.values() {
        for y in b.values() {
            out.push(x + y);
        }
    }
    out.sort();
    out
}

/// One-shot Moser identity check; see [`LensCalculator::moser_check`].
pub fn moser_check(p: i64, q: i64) -> Result<bool> {
    LensCalculator::new().moser_check(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::AlexanderPoly;
    use crate::lens::d_lens_table;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn trefoil_v() -> ViSequence {
        vi_from_alex(&AlexanderPoly::parse("1:1,0:-1").unwrap()).unwrap()
    }

    #[test]
    fn unknot_surgery_is_lens() {
        let v = ViSequence::zero();
        assert_eq!(
            d_surgery_table(5, 3, &v).unwrap(),
            d_lens_table(5, 3).unwrap()
        );
        assert_eq!(
            d_surgery_table(6, 1, &v).unwrap(),
            d_lens_table(6, 1).unwrap()
        );
    }

    #[test]
    fn poincare_sphere() {
        // +1 surgery on the trefoil
        assert_eq!(d_surgery(1, 1, &trefoil_v(), 0).unwrap(), r(-2, 1));
    }

    #[test]
    fn trefoil_six_surgery() {
        let t = d_surgery_table(6, 1, &trefoil_v()).unwrap();
        assert_eq!(
            t.values(),
            &[r(-3, 4), r(5, 12), r(-1, 12), r(-1, 4), r(-1, 12), r(5, 12)]
        );
    }

    #[test]
    fn connected_sum_examples() {
        let l21 = d_lens_table(2, 1).unwrap();
        let l32 = d_lens_table(3, 2).unwrap();
        assert_eq!(
            d_connected_sum_multiset(&l21, &l32),
            alloc::vec![r(-3, 4), r(-1, 4), r(-1, 12), r(-1, 12), r(5, 12), r(5, 12)]
        );

        // summing with S^3 is the identity
        let sphere = d_lens_table(1, 0).unwrap();
        assert_eq!(d_connected_sum_multiset(&l32, &sphere), l32.multiset());

        let pairwise = d_connected_sum_multiset(&l21, &l21);
        assert_eq!(pairwise, alloc::vec![r(-1, 2), r(0, 1), r(0, 1), r(1, 2)]);
    }

    #[test]
    fn moser_hand_verified_case() {
        // both pipelines give {-3/4, -1/4, -1/12, -1/12, 5/12, 5/12}
        assert!(moser_check(3, 2).unwrap());
        let v = trefoil_v();
        let surgery = d_surgery_table(6, 1, &v).unwrap();
        assert_eq!(
            surgery.multiset(),
            alloc::vec![r(-3, 4), r(-1, 4), r(-1, 12), r(-1, 12), r(5, 12), r(5, 12)]
        );
    }

    #[test]
    fn moser_five_two() {
        assert!(moser_check(5, 2).unwrap());
    }

    #[test]
    fn moser_rejects_invalid() {
        assert_eq!(moser_check(4, 2), Err(Error::NotCoprime { p: 4, q: 2 }));
        assert!(moser_check(2, 2).is_err());
        assert!(moser_check(2, 3).is_err());
    }

    #[test]
    fn surgery_table_conjugation_pairing() {
        let v = trefoil_v();
        for (p, q) in [(6i64, 1i64), (7, 2), (5, 3)] {
            let t = d_surgery_table(p, q, &v).unwrap();
            for i in 0..p {
                let j = (p + q - 1 - i).rem_euclid(p);
                assert_eq!(t.get(i), t.get(j), "p={p} q={q} i={i}");
            }
        }
    }

    #[test]
    fn surgery_rejects_bad_input() {
        let v = ViSequence::zero();
        assert!(d_surgery(0, 1, &v, 0).is_err());
        assert!(d_surgery(3, -1, &v, 0).is_err());
        assert!(d_surgery(4, 2, &v, 0).is_err());
        assert!(d_surgery(5, 2, &v, 5).is_err());
    }
}
