//! Invariants that need no reference numbers: recurrences, monotonicity, linearity,
//! exact rational identities and limiting trends.

use proptest::prelude::*;
use rug::float::Constant;
use rug::{Float, Rational};
use stieltjes::precision::{arctan_ratio, principal_log, ExtComplex};
use stieltjes::quadrature::{integrate_bose, integrate_laplace, Integrand1D};
use stieltjes::series::{bernoulli_number, binomial, hasse};
use stieltjes::special::*;
use stieltjes::PrecisionContext;

fn gap(a: &Float, b: &Float) -> f64 {
    Float::with_val(a.prec(), a - b).abs().to_f64()
}

/// Tolerance at target − 2 digits, as the route-agreement invariant states it.
fn tol(c: &PrecisionContext) -> f64 {
    10f64.powi(-(c.target_digits() as i32 - 2))
}

fn sample_u(c: &PrecisionContext) -> Vec<Float> {
    let e = Float::with_val(c.prec(), 1).exp();
    vec![c.real(0.25f64), c.real(0.5f64), c.real(1), e, c.real(10)]
}

#[test]
fn bernoulli_recurrence_is_exact() {
    for n in 2..=60u32 {
        let mut s = Rational::new();
        for k in 0..n {
            s += Rational::from(binomial(n, k)) * bernoulli_number(k);
        }
        assert_eq!(s, 0, "n = {n}");
    }
}

#[test]
fn recurrences_in_u() {
    let c = PrecisionContext::default();
    let t = tol(&c);
    for u in sample_u(&c) {
        let u1 = Float::with_val(c.prec(), &u + 1u32);
        let recip = Float::with_val(c.prec(), u.recip_ref());
        let psi = digamma(&u, &c).unwrap().value;
        let psi1 = digamma(&u1, &c).unwrap().value;
        assert!(gap(&psi1, &(psi + &recip)) < t, "ψ at {u}");

        let lg = log_gamma(&u, LogGammaRoute::Binet2, &c).unwrap().value;
        let lg1 = log_gamma(&u1, LogGammaRoute::Binet2, &c).unwrap().value;
        let lu = Float::with_val(c.prec(), u.ln_ref());
        assert!(gap(&lg1, &(lg + &lu)) < t, "log Γ at {u}");

        for s in ["2", "0.5", "-1.5"] {
            let s = c.parse(s).unwrap();
            let z = hurwitz_zeta(&s, &u, &c).unwrap().value;
            let z1 = hurwitz_zeta(&s, &u1, &c).unwrap().value;
            let pow = (Float::with_val(c.prec(), &s * &lu)).exp().recip();
            assert!(gap(&(z - z1), &pow) < t * 10.0, "ζ({s}, {u})");
        }
    }
}

#[test]
fn barnes_and_stieltjes_recurrences() {
    let c = PrecisionContext::default();
    let t = tol(&c);
    for u in [c.real(0.5f64), c.real(2)] {
        let u1 = Float::with_val(c.prec(), &u + 1u32);
        // log G(2+u) − log G(1+u) = log Γ(1+u)
        let g = barnes_g_log(&u, BarnesRoute::Weierstrass, &c).unwrap().value;
        let g1 = barnes_g_log(&u1, BarnesRoute::Weierstrass, &c).unwrap().value;
        let lg = Float::with_val(c.prec(), u1.ln_gamma_ref());
        assert!(gap(&(g1 - g), &lg) < t, "Barnes G at {u}");
        // γₙ(u) − γₙ(u+1) = logⁿu/u
        let lu = Float::with_val(c.prec(), u.ln_ref());
        for n in 0..=3u32 {
            let a = stieltjes(n, &u, StieltjesMethod::HasseSum, &c).unwrap().value;
            let b = stieltjes(n, &u1, StieltjesMethod::HasseSum, &c).unwrap().value;
            let want = Float::with_val(c.prec(), rug::ops::Pow::pow(&lu, n)) / &u;
            assert!(gap(&(a - b), &want) < t, "γ_{n} at {u}");
        }
    }
}

#[test]
fn lerch_identity() {
    let c = PrecisionContext::default();
    for u in ["0.25", "0.5", "1", "2", "5"] {
        let u = c.parse(u).unwrap();
        let d = hurwitz_zeta_sderiv(1, &c.real(0), &u, &c).unwrap().value;
        let lg = log_gamma(&u, LogGammaRoute::Binet2, &c).unwrap().value;
        assert!(gap(&lg, &(d + c.log_2pi() / 2u32)) < tol(&c), "u = {u}");
    }
}

#[test]
fn digamma_asymptotic_trend() {
    let c = PrecisionContext::for_target(20);
    let mut prev_gap = f64::INFINITY;
    let mut prev_scaled = f64::NEG_INFINITY;
    for u in [10u32, 100, 1000] {
        let u = c.real(u);
        let d = digamma(&u, &c).unwrap().value - Float::with_val(c.prec(), u.ln_ref());
        let g = d.to_f64().abs();
        let scaled = Float::with_val(c.prec(), &d * &u).to_f64();
        assert!(g < prev_gap && scaled > prev_scaled && scaled < -0.5, "u = {u}: {g} {scaled}");
        prev_gap = g;
        prev_scaled = scaled;
    }
    assert!((prev_scaled + 0.5).abs() < 1e-4);
}

#[test]
fn stieltjes_one_against_half_log_square() {
    // γ₁(u) + ½log²u shrinks as u grows.
    let c = PrecisionContext::for_target(20);
    let mut prev = f64::INFINITY;
    for u in [10u32, 100, 1000] {
        let u = c.real(u);
        let l = Float::with_val(c.prec(), u.ln_ref());
        let v = stieltjes(1, &u, StieltjesMethod::HasseSum, &c).unwrap().value + Float::with_val(c.prec(), l.square_ref()) / 2u32;
        let a = v.to_f64().abs();
        assert!(a < prev, "u = {u}: {a}");
        prev = a;
    }
}

#[test]
fn hasse_cancellation_report_is_honest() {
    let c = PrecisionContext::default();
    // The diagnostics describe the Hasse sum itself, so evaluate where no shift is added.
    for (n, u) in [(0u32, 1.0f64), (3, 1.0), (2, 0.5), (5, 2.0)] {
        let m = hasse::hasse_shift(u, n, c.target_digits() + 3, hasse::HASSE_CAP);
        let u = u + f64::from(m);
        assert_eq!(hasse::hasse_shift(u, n, c.target_digits() + 3, hasse::HASSE_CAP), 0);
        let (v, d) = hasse::hasse_stieltjes(n, &c.real(u), &c).unwrap();
        let observed = (d.max_term_magnitude.to_f64() / v.to_f64().abs()).log10().max(0.0);
        assert!((observed - f64::from(d.cancellation_digits_lost)).abs() <= 2.0, "n={n} u={u}: {observed} vs {d:?}");
    }
}

#[test]
fn laplace_of_one_is_reciprocal() {
    let c = PrecisionContext::default();
    let one = Integrand1D::new(|x: &Float| Ok(Float::with_val(x.prec(), 1)));
    for u in ["0.5", "1", "2", "10"] {
        let u = c.parse(u).unwrap();
        let v = integrate_laplace(&one, &u, &c).unwrap().value;
        assert!(gap(&v, &Float::with_val(c.prec(), u.recip_ref())) < c.tolerance().to_f64());
    }
}

fn low() -> PrecisionContext {
    PrecisionContext::for_target(15)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn log_then_exp_round_trips(re in -50.0f64..50.0, im in -50.0f64..50.0) {
        prop_assume!(re != 0.0 || im != 0.0);
        let c = low();
        let z = ExtComplex::new(c.real(re), c.real(im));
        let w = principal_log(&z).unwrap().exp();
        let ulp = 4.0 * f64::EPSILON.powf(f64::from(c.prec()) / 53.0) * z.abs().to_f64();
        prop_assert!(gap(&w.re, &z.re) <= ulp.max(1e-300) * 2.0 + 1e-40);
        prop_assert!(gap(&w.im, &z.im) <= ulp.max(1e-300) * 2.0 + 1e-40);
    }

    #[test]
    fn arctan_ratio_nondecreasing(u in 0.01f64..20.0, x in 0.0f64..50.0, dx in 0.0f64..5.0) {
        let c = low();
        let u = c.real(u);
        let a = arctan_ratio(&c.real(x), &u).unwrap();
        let b = arctan_ratio(&c.real(x + dx), &u).unwrap();
        prop_assert!(b >= a);
    }

    #[test]
    fn digamma_increases_and_trigamma_decreases(u in 0.05f64..30.0, du in 0.01f64..3.0) {
        let c = low();
        let (a, b) = (c.real(u), c.real(u + du));
        prop_assert!(digamma_route(&a, DigammaRoute::Asymptotic, &c).unwrap().value
            < digamma_route(&b, DigammaRoute::Asymptotic, &c).unwrap().value);
        prop_assert!(trigamma_route(&a, TrigammaRoute::Asymptotic, &c).unwrap().value
            > trigamma_route(&b, TrigammaRoute::Asymptotic, &c).unwrap().value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, ..ProptestConfig::default() })]

    #[test]
    fn bose_integral_is_linear(a in -5.0f64..5.0, b in -5.0f64..5.0, y in 0.1f64..4.0) {
        let c = low();
        let p = c.prec();
        let (fa, fb, fy) = (c.real(a), c.real(b), c.real(y));
        let g1 = |x: &Float| Ok(Float::with_val(x.prec(), x.atan_ref()) * x);
        let g2 = |x: &Float| Ok(Float::with_val(x.prec(), x * &fy).sin());
        let i1 = integrate_bose(&Integrand1D::new(g1), &c).unwrap().value;
        let i2 = integrate_bose(&Integrand1D::new(g2), &c).unwrap().value;
        let both = integrate_bose(&Integrand1D::new(|x: &Float| Ok(g1(x)? * &fa + g2(x)? * &fb)), &c).unwrap().value;
        let want = Float::with_val(p, &i1 * &fa) + Float::with_val(p, &i2 * &fb);
        prop_assert!(gap(&both, &want) <= 4.0 * c.tolerance().to_f64());
    }
}

#[test]
fn euler_constant_sanity() {
    let c = PrecisionContext::default();
    let g = Float::with_val(c.prec(), Constant::Euler);
    assert!(gap(&-digamma(&c.real(1), &c).unwrap().value, &g) < tol(&c));
}
