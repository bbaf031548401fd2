//! The L-space-knot model: V-sequences, torsion coefficients, staircase
//! gradings, and torus-knot Alexander polynomials.
//!
//! For an L-space knot the concordance invariants `V_i` coincide with the
//! torsion coefficients `t_i = sum_{k > i} (k - i) a_k` of the Alexander
//! polynomial, and the full knot Floer complex is a staircase whose
//! generators sit at the exponents of the polynomial.

use alloc::vec::Vec;

use num_integer::Integer;

use crate::alexander::AlexanderPoly;
use crate::error::{Error, Result};

/// The non-increasing sequence `V_0, V_1, ..., V_g = 0`, extended to all
/// integer indices by `V_{-i} = V_i + i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ViSequence {
    values: Vec<i64>,
}

impl ViSequence {
    /// Validates that the sequence is non-empty, ends in 0, and each step
    /// `V_i - V_{i+1}` is 0 or 1 (which forces non-negativity).
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() || *values.last().unwrap() != 0 {
            return Err(Error::InvalidViSequence);
        }
        for w in values.windows(2) {
            let step = w[0] - w[1];
            if step != 0 && step != 1 {
                return Err(Error::InvalidViSequence);
            }
        }
        Ok(ViSequence { values })
    }

    /// The identically-zero sequence `(0)`, e.g. for a slice knot.
    pub fn zero() -> Self {
        ViSequence { values: alloc::vec![0] }
    }

    /// Parses a comma-separated list such as `"2,1,1,1,0"`.
    pub fn parse(text: &str) -> Result<Self> {
        let values: Result<Vec<i64>> = text
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::InvalidViSequence))
            .collect();
        ViSequence::new(values?)
    }

    /// Index of the last stored entry; the Seifert genus when the sequence
    /// came from an Alexander polynomial.
    pub fn genus(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `V_i` for any integer `i`: the stored value in `0..=g`, zero above
    /// `g`, and `V_i + |i|` at negative indices.
    pub fn at(&self, i: i64) -> i64 {
        if i < 0 {
            self.at(-i) - i
        } else if i >= self.values.len() as i64 {
            0
        } else {
            self.values[i as usize]
        }
    }

    /// Smallest `k >= 0` with `V_k = 0`; a slice-genus lower bound.
    pub fn nu_plus(&self) -> i64 {
        self.values
            .iter()
            .position(|&v| v == 0)
            .expect("sequence ends in 0") as i64
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// Torsion coefficients `t_0, ..., t_g` with `t_i = sum_{k > i} (k - i) a_k`.
///
/// `t_g` is always 0, and the second differences recover the polynomial:
/// `t_{i-1} - 2 t_i + t_{i+1} = a_i`.
pub fn torsion_coeffs(poly: &AlexanderPoly) -> Vec<i64> {
    let g = poly.genus();
    (0..=g)
        .map(|i| {
            poly.terms()
                .filter(|&(e, _)| e > i)
                .map(|(e, c)| (e - i) * c)
                .sum()
        })
        .collect()
}

/// `V_i` of an L-space knot, read off as the torsion coefficients of its
/// Alexander polynomial. Rejects polynomials that are not in L-space form.
pub fn vi_from_alex(poly: &AlexanderPoly) -> Result<ViSequence> {
    if !poly.is_lspace_form() {
        return Err(Error::NotLSpaceForm);
    }
    ViSequence::new(torsion_coeffs(poly))
}

/// The symmetrized Alexander polynomial of the torus knot `T(p, q)`,
///
/// ```text
/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))
/// ```
///
/// shifted so the exponents run from `-g` to `g` with
/// `g = (p - 1)(q - 1) / 2`. The parameters may be given in either order.
pub fn torus_alex(p: i64, q: i64) -> Result<AlexanderPoly> {
    let (p, q) = if p >= q { (p, q) } else { (q, p) };
    if q < 2 || p == q {
        return Err(Error::InvalidTorusParams { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let num = poly_mul(&cyclo_like(p * q), &cyclo_like(1));
    let den = poly_mul(&cyclo_like(p), &cyclo_like(q));
    let quotient = poly_div_exact(num, &den);
    let genus = (p - 1) * (q - 1) / 2;
    debug_assert_eq!(quotient.len() as i64 - 1, 2 * genus);
    let half: Vec<(i64, i64)> = quotient
        .iter()
        .enumerate()
        .map(|(k, &c)| (k as i64 - genus, c))
        .filter(|&(e, c)| e >= 0 && c != 0)
        .collect();
    AlexanderPoly::from_half(&half)
}

/// `t^n - 1` as a dense coefficient vector.
fn cyclo_like(n: i64) -> Vec<i64> {
    let mut v = alloc::vec![0i64; n as usize + 1];
    v[0] = -1;
    v[n as usize] = 1;
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = alloc::vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Long division by a monic divisor; panics on a nonzero remainder.
fn poly_div_exact(mut num: Vec<i64>, den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let nd = num.len() - 1;
    assert!(nd >= dd);
    let den_terms: Vec<(usize, i64)> = den
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d != 0)
        .map(|(j, &d)| (j, d))
        .collect();
    let mut quot = alloc::vec![0i64; nd - dd + 1];
    for k in (0..quot.len()).rev() {
        let c = num[k + dd];
        if c == 0 {
            continue;
        }
        quot[k] = c;
        for &(j, d) in &den_terms {
            num[k + j] -= c * d;
        }
    }
    assert!(num.iter().all(|&c| c == 0), "division left a remainder");
    quot
}

/// One generator of an L-space-knot staircase complex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StaircaseGenerator {
    /// Alexander grading; an exponent of the Alexander polynomial.
    pub alexander: i64,
    /// Maslov grading, normalized so the top generator has M = 0.
    pub maslov: i64,
}

impl StaircaseGenerator {
    /// delta-grading `A - M`.
    pub fn delta(&self) -> i64 {
        self.alexander - self.maslov
    }
}

/// The staircase complex of an L-space knot: one generator per nonzero
/// coefficient of the Alexander polynomial, in decreasing Alexander grading.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Staircase {
    generators: Vec<StaircaseGenerator>,
}

impl Staircase {
    pub fn generators(&self) -> &[StaircaseGenerator] {
        &self.generators
    }

    pub fn delta_values(&self) -> Vec<i64> {
        self.generators.iter().map(|g| g.delta()).collect()
    }

    /// Width of the delta-grading: `max delta - min delta`. Zero exactly
    /// for thin knots.
    pub fn thickness(&self) -> i64 {
        let deltas = self.delta_values();
        let max = deltas.iter().max().expect("staircase is non-empty");
        let min = deltas.iter().min().expect("staircase is non-empty");
        max - min
    }
}

/// Builds the staircase of an L-space-knot Alexander polynomial.
///
/// Maslov gradings are produced by the alternating walk from `M = 0` at the
/// top generator: a step from an odd-position generator drops M by 1, a
/// step onto an even-position generator drops it by `2*gap - 1` where `gap`
/// is the Alexander-grading difference. The mirror symmetry
/// `M(-a) = M(a) - 2a` is checked, not assumed.
pub fn staircase(poly: &AlexanderPoly) -> Result<Staircase> {
    if !poly.is_lspace_form() {
        return Err(Error::NotLSpaceForm);
    }
    let exps = poly.support_desc();
    let mut generators = Vec::with_capacity(exps.len());
    let mut m = 0i64;
    for (j, &a) in exps.iter().enumerate() {
        if j > 0 {
            if j % 2 == 1 {
                m -= 1;
            } else {
                let gap = exps[j - 1] - a;
                m -= 2 * gap - 1;
            }
        }
        generators.push(StaircaseGenerator { alexander: a, maslov: m });
    }
    // symmetric support: generator at -a is the mirror of the one at a
    let n = generators.len();
    for j in 0..n {
        let (ga, gb) = (&generators[j], &generators[n - 1 - j]);
        assert_eq!(gb.alexander, -ga.alexander, "support is symmetric");
        assert_eq!(
            gb.maslov,
            ga.maslov - 2 * ga.alexander,
            "staircase mirror symmetry failed at A = {}",
            ga.alexander
        );
    }
    Ok(Staircase { generators })
}

/// `max delta - min delta` over the staircase generators.
pub fn thickness(poly: &AlexanderPoly) -> Result<i64> {
    Ok(staircase(poly)?.thickness())
}

/// First index where the slice-genus bound `V_i <= max(ceil((g4 - i)/2), 0)`
/// fails, as `(i, V_i, bound)`; `None` when the bound holds for all
/// `0 <= i <= g`. Indices above `g4` degrade to the forced check `V_i = 0`.
pub fn v4ball_first_violation(v: &ViSequence, g4: i64) -> Option<(i64, i64, i64)> {
    assert!(g4 >= 0, "slice genus must be non-negative");
    for i in 0..=v.genus() {
        let bound = ((g4 - i + 1).div_euclid(2)).max(0);
        if v.at(i) > bound {
            return Some((i, v.at(i), bound));
        }
    }
    None
}

/// True iff the 4-ball genus bound holds for every index.
pub fn check_v4ball_bound(v: &ViSequence, g4: i64) -> bool {
    v4ball_first_violation(v, g4).is_none()
}
