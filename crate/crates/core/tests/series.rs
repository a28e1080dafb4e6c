use rug::float::Constant;
use rug::Float;
use stieltjes::series::{altzeta, constants, hasse, oracle, sums};
use stieltjes::PrecisionContext;

const GAMMA: [&str; 6] = [
    "0.577215664901532860606512090082402431042159336",
    "-0.0728158454836767248605863758749013191377363383",
    "-0.0096903631928723184845303860352125293590658061",
    "0.00205383442030334586616004654275338428571580445",
    "0.00232537006546730005746817017752606800090446941",
    "0.000793323817301062701753334877444444830731539405",
];

fn close(a: &Float, b: &Float, tol: f64) -> bool {
    let d = Float::with_val(a.prec(), a - b).abs();
    d.to_f64() < tol
}

fn ctx() -> PrecisionContext {
    PrecisionContext::default()
}

#[test]
fn oracle_matches_reference_gammas() {
    let c = ctx();
    let v = oracle::limit_stieltjes_oracle_all(5, &c.real(1), &c).unwrap();
    for (g, s) in v.iter().zip(GAMMA) {
        assert!(close(g, &c.parse(s).unwrap(), 1e-34), "{g} vs {s}");
    }
    let euler = c.real(Constant::Euler);
    assert!(close(&v[0], &euler, 1e-34));
}

#[test]
fn oracle_at_other_arguments() {
    let c = ctx();
    let g = oracle::limit_stieltjes_oracle(1, &c.parse("0.5").unwrap(), &c).unwrap();
    assert!(close(&g, &c.parse("-1.35345968080494151770868716917806440359128629").unwrap(), 1e-35));
    let z = oracle::oracle_zeta(&c.real(2), &c.parse("0.3").unwrap(), 1, &c).unwrap();
    assert!(close(&z, &c.parse("12.3419306888852199269492932375553771725128846").unwrap(), 1e-33));
    let z = oracle::oracle_zeta(&c.parse("0.5").unwrap(), &c.real(2), 2, &c).unwrap();
    assert!(close(&z, &c.parse("-16.0083570139286614226913065059449627851855936").unwrap(), 1e-33));
}

#[test]
fn hasse_route_reaches_target() {
    let c = ctx();
    for (n, s) in GAMMA.iter().enumerate() {
        let (g, diag) = hasse::hasse_stieltjes(n as u32, &c.real(1), &c).unwrap();
        assert!(close(&g, &c.parse(s).unwrap(), 1e-30), "n={n}: {g}");
        assert!(diag.cancellation_digits_lost <= c.guard_digits());
    }
}

#[test]
fn altzeta_inversion_reaches_target() {
    let c = ctx();
    for (n, s) in GAMMA.iter().enumerate() {
        let g = altzeta::stieltjes_from_altzeta(n as u32, &c).unwrap();
        assert!(close(&g, &c.parse(s).unwrap(), 1e-30), "n={n}: {g}");
    }
}

#[test]
fn briggs_chowla_uses_true_derivatives() {
    let c = ctx();
    let gammas: Vec<Float> = GAMMA.iter().map(|s| c.parse(s).unwrap()).collect();
    for k in 0..4u32 {
        let s = hasse::alt_zeta_log_moment(k, &c).unwrap().0;
        let d = if k % 2 == 1 { -s } else { s };
        let bc = altzeta::briggs_chowla(k, &gammas, &c);
        assert!(close(&d, &bc, 1e-30), "k={k}: {d} vs {bc}");
    }
}

#[test]
fn binomial_log_gamma_matches_mpfr() {
    let c = ctx();
    for u in ["0.5", "1", "2.5", "7"] {
        let x = c.parse(u).unwrap();
        let (lg, _) = hasse::binomial_log_gamma(&x, &c).unwrap();
        let want = Float::with_val(c.prec(), x.ln_gamma_ref());
        assert!(close(&lg, &want, 1e-30), "u={u}: {lg} vs {want}");
    }
}

#[test]
fn kronecker_degenerate_sum_is_one() {
    assert_eq!(hasse::kronecker_degenerate_sum(40), 1);
}

#[test]
fn sums_against_closed_forms() {
    let c = ctx();
    let z3 = c.real(3u32).zeta();
    // Σ Hₙ/n² = 2ζ(3)
    let h2 = sums::harmonic_dirichlet(2, &c).unwrap();
    assert!(close(&h2, &(z3.clone() * 2u32), 1e-35), "{h2}");
    assert!(close(&sums::plouffe_zeta3(&c), &z3, 1e-40));
    // Σ Hₙ/(n(n+1)) = ζ(2)
    let z2 = c.real(2u32).zeta();
    assert!(close(&sums::kanemitsu_companion(&c).unwrap(), &z2, 1e-35));
    let dz = constants::zeta_deriv(0, 1, &c).unwrap();
    assert!(close(&dz, &(-c.log_2pi() / 2u32), 1e-40));
}
