//! Library-level invariants: identities that must hold exactly across
//! parameter sweeps, plus randomized properties.

use num_integer::Integer;
use proptest::prelude::*;

use corrterm::*;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// All coprime pairs `2 <= q < p` with `pq <= max`.
fn torus_pairs(max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for q in 2..max {
        for p in (q + 1)..=(max / q) {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn random_vi() -> impl Strategy<Value = ViSequence> {
    // build from the genus end: V_g = 0, each earlier entry adds a step of 0 or 1
    prop::collection::vec(0i64..=1, 0..40).prop_map(|steps| {
        let mut values = vec![0i64];
        for s in steps {
            let next = values.last().unwrap() + s;
            values.push(next);
        }
        values.reverse();
        ViSequence::new(values).expect("constructed stepwise")
    })
}

#[test]
fn lens_conjugation_symmetry_sweep() {
    for p in 1..=200i64 {
        let mut calc = LensCalculator::new();
        for q in 1..p.max(2) {
            if p.gcd(&q) != 1 {
                continue;
            }
            let table = calc.d_lens_table(p, q).unwrap();
            for i in 0..p {
                let j = conjugate_spinc_lens(p, q, i);
                assert_eq!(
                    table.get(i),
                    table.get(j),
                    "conjugation symmetry failed for L({p},{q}) at i={i}"
                );
            }
        }
    }
}

#[test]
fn lens_orientation_reversal() {
    // L(p, p-1) is L(p, 1) with reversed orientation, so the d-invariant
    // multisets are negatives of each other
    for p in 2..=50i64 {
        let mut calc = LensCalculator::new();
        let a = calc.d_lens_table(p, 1).unwrap().multiset();
        let mut b: Vec<Rational> = calc
            .d_lens_table(p, p - 1)
            .unwrap()
            .multiset()
            .into_iter()
            .map(|d| -d)
            .collect();
        b.sort();
        assert_eq!(a, b, "multiset of d(L({p},{}) ) != -d(L({p},1))", p - 1);
    }
    // the hand-computed instance
    assert_eq!(
        d_lens_table(3, 2).unwrap().multiset(),
        vec![r(-1, 2), r(1, 6), r(1, 6)]
    );
    assert_eq!(
        d_lens_table(3, 1).unwrap().multiset(),
        vec![r(-1, 6), r(-1, 6), r(1, 2)]
    );
}

#[test]
fn second_differences_recover_the_polynomial() {
    // t_{i-1} - 2 t_i + t_{i+1} = a_i, using the symmetric extension for
    // indices outside 0..=g
    let mut polys: Vec<AlexanderPoly> = torus_pairs(200)
        .iter()
        .map(|&(p, q)| torus_alex(p, q).unwrap())
        .collect();
    for q in (3..=31i64).step_by(2) {
        polys.push(gen_alex_pq2(q).unwrap());
    }
    for poly in &polys {
        let v = vi_from_alex(poly).unwrap();
        let g = poly.genus();
        for i in -(g + 2)..=(g + 2) {
            let a = v.at(i - 1) - 2 * v.at(i) + v.at(i + 1);
            assert_eq!(a, poly.coeff(i), "second difference at {i} for {poly}");
        }
    }
}

#[test]
fn zero_v_surgery_equals_lens() {
    let v = ViSequence::zero();
    let mut calc = LensCalculator::new();
    for p in 1..=30i64 {
        for q in 1..=30i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            assert_eq!(
                calc.d_surgery_table(p, q, &v).unwrap(),
                calc.d_lens_table(p, q).unwrap(),
                "unknot {p}/{q}-surgery"
            );
        }
    }
}

#[test]
fn sum_identity_q1_is_trivial() {
    // with q = 1 the only in-range instance is l = 0 and it reads
    // V_0 - V_{alpha(p)} = V_0 - V_0
    for p in 2..=40i64 {
        for v in [ViSequence::zero(), reconstruct_vi_pq2(5).unwrap()] {
            assert_eq!(sum_identity_lhs(&v, p, 1, 0).unwrap(), 0);
        }
    }
}

#[test]
fn thickness_bounds_ordered_sweep() {
    for q in (3..1000i64).step_by(2) {
        for p in ((q + 2)..=(1000 / q)).step_by(2) {
            if p.gcd(&q) != 1 {
                continue;
            }
            let lo = thickness_lower_bound(p, q).unwrap();
            let hi = thickness_upper_bound(p, q).unwrap();
            assert!(lo <= hi, "bounds out of order for ({p},{q}): {lo} > {hi}");
        }
    }
}

#[test]
fn pq2_vi_agreement_for_all_q() {
    // the substance of the p - q = 2 cross-check: the sequencing
    // reconstruction and the closed-form polynomial determine the same V,
    // and that V satisfies every sum-identity instance
    for q in (3..=31i64).step_by(2) {
        let detail = cross_check_pq2_detail(q).unwrap();
        assert!(detail.vi_match, "V derivations disagree at q = {q}");
        assert!(detail.constraints_pass, "sum identity fails at q = {q}");
        assert!(
            detail.longest_run <= detail.run_bound,
            "run of {} exceeds {} at q = {q}",
            detail.longest_run,
            detail.run_bound
        );
    }
}

#[test]
fn gen_alex_pq2_always_lspace_form() {
    for q in (3..=31i64).step_by(2) {
        let poly = gen_alex_pq2(q).unwrap();
        let g = poly.genus();
        assert!(poly.is_lspace_form(), "q = {q}");
        assert_eq!(poly.coeff(g), 1);
        assert_eq!(poly.coeff(g - 1), -1);
        assert_eq!(g, ((q + 2) * q + 1) / 2);
    }
}

/// Expected run lengths of the reconstructed V for `p = q + 2`, in
/// decreasing index order: the first column of the block array is the
/// merged `(q+1)`-run of 1s, each full column is a `q - 2(i-2)`-block
/// followed by `i - 1` two-blocks, and the final column starts with a
/// 3-block whose tail depends on `p` mod 4.
fn expected_block_lengths_desc(q: i64) -> Vec<i64> {
    let p = q + 2;
    let cols = (q + 1) / 2;
    let mut out = vec![q + 1];
    for i in 2..=cols {
        if i < cols {
            out.push(q - 2 * (i - 2));
            out.extend(std::iter::repeat_n(2, (i - 1) as usize));
        } else {
            out.push(3);
            if p % 4 == 3 {
                out.extend(std::iter::repeat_n(2, ((p - 3) / 4) as usize));
            } else {
                out.extend(std::iter::repeat_n(2, ((p - 5) / 4) as usize));
                out.push(1);
            }
        }
    }
    out
}

#[test]
fn pq2_block_array_structure() {
    for q in (3..=31i64).step_by(2) {
        let v = reconstruct_vi_pq2(q).unwrap();
        let dec = block_decomposition(&v);
        let n = dec.runs().len() as i64;
        // values count down from the number of runs to 1
        for (j, &(value, _)) in dec.runs().iter().enumerate() {
            assert_eq!(value, n - j as i64, "run value at q = {q}");
        }
        let mut lengths: Vec<i64> = dec.runs().iter().map(|&(_, len)| len).collect();
        lengths.reverse();
        assert_eq!(lengths, expected_block_lengths_desc(q), "run lengths at q = {q}");
        // the central q-block is a genuine single run
        let dec = block_decomposition_for_slope(&v, q + 2, q).unwrap();
        assert!(dec.central_block().is_some(), "central block missing at q = {q}");
    }
}

proptest! {
    #[test]
    fn parsed_polynomials_are_symmetric_and_normalized(
        coeffs in prop::collection::vec((1i64..30, -5i64..5), 0..8),
    ) {
        // pick arbitrary nonzero coefficients on positive exponents and a
        // constant term that forces evaluation 1 at t = 1
        let mut half: Vec<(i64, i64)> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for (e, c) in coeffs {
            if c != 0 && seen.insert(e) {
                half.push((e, c));
            }
        }
        let positive_sum: i64 = half.iter().map(|&(_, c)| c).sum();
        half.push((0, 1 - 2 * positive_sum));
        if 1 - 2 * positive_sum == 0 {
            return Ok(()); // zero constant coefficient is rejected by parse
        }
        let text = half
            .iter()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(",");
        let poly = AlexanderPoly::parse(&text).expect("normalized by construction");
        let mut at_one = 0;
        for (e, c) in poly.terms() {
            prop_assert_eq!(c, poly.coeff(-e), "symmetry at {}", e);
            at_one += c;
        }
        prop_assert_eq!(at_one, 1);
        prop_assert_eq!(poly.genus(), poly.support_desc().first().copied().unwrap_or(0));
    }

    #[test]
    fn rational_roundtrip_exact(a in -10_000i64..10_000, b in 1i64..10_000,
                                c in -10_000i64..10_000, d in 1i64..10_000) {
        let x = Rational::new(a, b);
        let y = Rational::new(c, d);
        let back = &(&x + &y) - &y;
        prop_assert_eq!(back, x);
    }

    #[test]
    fn vi_negative_extension(v in random_vi(), i in 0i64..100) {
        prop_assert_eq!(v.at(-i) - v.at(i), i);
    }

    #[test]
    fn sum_identity_q1_all_ell_via_extension(v in random_vi(), p in 2i64..60, ell in 0i64..60) {
        // the q = 1 degenerate instance evaluated through the raw alpha
        // expression: alpha(l + p) = min(l + p, -l) = -l for l >= 1, so the
        // row collapses to V_l - V_{-l} = -l for every l, not just l = 0
        let j = ell + p;
        let lhs = v.at(ell) - v.at(j.min(p - j));
        prop_assert_eq!(lhs, -ell);
    }

    #[test]
    fn nu_plus_at_most_genus(v in random_vi()) {
        prop_assert!(v.nu_plus() <= v.genus());
    }
}
