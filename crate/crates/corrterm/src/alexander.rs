//! Symmetric Alexander polynomials.
//!
//! An [`AlexanderPoly`] is a symmetric integer Laurent polynomial normalized
//! so that it evaluates to 1 at t = 1. Only the nonzero coefficients are
//! stored; the genus is the top exponent.
//!
//! The text format accepted by [`AlexanderPoly::parse`] lists the
//! non-negative-exponent half as comma-separated `exponent:coefficient`
//! pairs, e.g. `"1:1,0:-1"` for the trefoil `t - 1 + t^-1`. The negative
//! half is filled in by symmetry.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};

/// A symmetric, normalized integer Laurent polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct AlexanderPoly {
    /// exponent -> nonzero coefficient, for every nonzero term (both halves)
    coeffs: BTreeMap<i64, i64>,
    /// top exponent; 0 for the constant polynomial 1
    genus: i64,
}

impl AlexanderPoly {
    /// The unknot polynomial, constant 1.
    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(0, 1);
        AlexanderPoly { coeffs, genus: 0 }
    }

    /// Builds a polynomial from its non-negative-exponent half, mirroring
    /// every positive exponent to the corresponding negative one.
    ///
    /// Rejects negative exponents, zero coefficients and anything that does
    /// not evaluate to 1 at t = 1 after symmetrization.
    pub fn from_half(half: &[(i64, i64)]) -> Result<Self> {
        let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
        for &(exp, c) in half {
            if exp < 0 {
                return Err(Error::NegativeExponent { exponent: exp });
            }
            if c == 0 {
                return Err(Error::ZeroCoefficient { exponent: exp });
            }
            if coeffs.insert(exp, c).is_some() {
                return Err(Error::DuplicateExponent { exponent: exp });
            }
        }
        // mirror the strictly positive half
        let positive: alloc::vec::Vec<(i64, i64)> = coeffs
            .iter()
            .filter(|&(&e, _)| e > 0)
            .map(|(&e, &c)| (e, c))
            .collect();
        for (e, c) in positive {
            coeffs.insert(-e, c);
        }
        let at_one: i64 = coeffs.values().sum();
        if at_one != 1 {
            return Err(Error::NotNormalized { value_at_one: at_one });
        }
        let genus = coeffs.keys().next_back().copied().unwrap_or(0);
        Ok(AlexanderPoly { coeffs, genus })
    }

    /// Parses the `exponent:coefficient` pair format, e.g. `"1:1,0:-1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut half = alloc::vec::Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::MalformedCoeffPair);
            }
            let (e, c) = token.split_once(':').ok_or(Error::MalformedCoeffPair)?;
            let exp: i64 = e.trim().parse().map_err(|_| Error::MalformedCoeffPair)?;
            let coeff: i64 = c.trim().parse().map_err(|_| Error::MalformedCoeffPair)?;
            half.push((exp, coeff));
        }
        Self::from_half(&half)
    }

    /// Top exponent (the Seifert genus for the knots this crate models).
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Coefficient at `exponent` (0 when absent).
    pub fn coeff(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Exponents of the nonzero terms in decreasing order.
    pub fn support_desc(&self) -> alloc::vec::Vec<i64> {
        self.coeffs.keys().rev().copied().collect()
    }

    /// The non-negative half in the `exponent:coefficient` input format,
    /// top exponent first. Feeding this back to [`AlexanderPoly::parse`]
    /// reproduces the polynomial.
    pub fn pair_string(&self) -> String {
        let mut out = String::new();
        for (&e, &c) in self.coeffs.iter().rev().filter(|&(&e, _)| e >= 0) {
            if !out.is_empty() {
                out.push(',');
            }
            out.push_str(&alloc::format!("{e}:{c}"));
        }
        out
    }

    /// True iff the nonzero coefficients, read from the top exponent down,
    /// are exactly +1, -1, +1, -1, ...
    ///
    /// This is the coefficient pattern forced on the Alexander polynomial of
    /// an L-space knot.
    pub fn is_lspace_form(&self) -> bool {
        let mut expected = 1i64;
        for (_, &c) in self.coeffs.iter().rev() {
            if c != expected {
                return false;
            }
            expected = -expected;
        }
        true
    }
}

impl fmt::Display for AlexanderPoly {
    /// Human form, top exponent first: `t^4 - t^3 + t - 1 + t^-1 - t^-3 + t^-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&e, &c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Predicate form of [`AlexanderPoly::is_lspace_form`].
pub fn validate_lspace(poly: &AlexanderPoly) -> bool {
    poly.is_lspace_form()
}
