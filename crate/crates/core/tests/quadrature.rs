use std::time::Instant;

use rug::Float;
use stieltjes::precision::ExtComplex;
use stieltjes::quadrature::{
    abel_plana_sum, integrate_bose, integrate_bose_kernel, integrate_laplace, integrate_unit_square, kernels,
    AbelPlana, Integrand1D, Integrand2D, PlanaIntegral,
};
use stieltjes::series::{bernoulli::bernoulli_number, constants};
use stieltjes::PrecisionContext;

fn ctx() -> PrecisionContext {
    PrecisionContext::default()
}

fn assert_close(a: &Float, b: &Float, tol: f64, what: &str) {
    let d = Float::with_val(a.prec(), a - b).abs().to_f64();
    assert!(d < tol, "{what}: {a} vs {b} (gap {d:e})");
}

#[test]
fn bose_examples() {
    let c = ctx();
    let t = Instant::now();
    let r = integrate_bose(&Integrand1D::new(|x| Ok(x.clone())), &c).unwrap();
    assert_close(&r.value, &(c.real(1) / 24u32), 1e-30, "x");
    eprintln!("x: {:?} nodes {}", t.elapsed(), r.nodes_used);
    let r = integrate_bose(&Integrand1D::new(|x| Ok(Float::with_val(x.prec(), x * x) * x)), &c).unwrap();
    assert_close(&r.value, &(c.real(1) / 240u32), 1e-30, "x^3");
    let r = integrate_bose(&Integrand1D::new(|x| Ok(Float::new(x.prec()))), &c).unwrap();
    assert!(r.value.is_zero());
    let r = integrate_bose(&Integrand1D::new(|x| Ok(Float::with_val(x.prec(), x.ln_ref()) * x)), &c).unwrap();
    let want = constants::zeta_deriv(-1, 1, &c).unwrap() / 2u32;
    assert_close(&r.value, &want, 1e-30, "x log x");
    eprintln!("total {:?}", t.elapsed());
}

#[test]
fn moment_ladder() {
    let c = ctx();
    for n in 1..=4u32 {
        let r = integrate_bose(&Integrand1D::new(move |x| Ok(Float::with_val(x.prec(), rug::ops::Pow::pow(x, 2 * n - 1)))), &c).unwrap();
        let mut want = c.rational(&bernoulli_number(2 * n)) / (4 * n);
        if n % 2 == 0 {
            want = -want;
        }
        assert_close(&r.value, &want, 1e-30, "moment");
    }
}

#[test]
fn legendre_relation_kernel_route() {
    let c = ctx();
    for y0 in ["0.1", "1", "5"] {
        let y = c.parse(y0).unwrap();
        let yy = y.clone();
        let g = Integrand1D::new(move |x| Ok(Float::with_val(x.prec(), x * &yy).sin()));
        let r = integrate_bose_kernel(&g, &c).unwrap();
        let want = kernels::bose_bracket(&y);
        assert_close(&(r.value * 2u32), &want, 1e-29, y0);
    }
}

#[test]
fn laplace_examples() {
    let c = ctx();
    for u in ["0.5", "1", "2", "10"] {
        let uu = c.parse(u).unwrap();
        let r = integrate_laplace(&Integrand1D::new(|x| Ok(Float::with_val(x.prec(), 1))), &uu, &c).unwrap();
        assert_close(&r.value, &(Float::with_val(c.prec(), 1) / &uu), 1e-30, u);
    }
    let r = integrate_laplace(&Integrand1D::new(|x| Ok(Float::with_val(x.prec(), x.sin_ref()))), &c.real(1), &c).unwrap();
    assert_close(&r.value, &c.real(0.5), 1e-30, "sin");
    let binet = Integrand1D::removable(
        |t| Ok(kernels::binet_kernel(t)),
        kernels::SERIES_CUTOFF,
        |t| Ok(kernels::binet_kernel(t)),
    );
    let r = integrate_laplace(&binet, &c.real(1), &c).unwrap();
    assert_close(&r.value, &(c.real(1) - c.log_2pi() / 2u32), 1e-30, "binet");
    assert!(integrate_laplace(&binet, &c.real(0), &c).is_err());
}

#[test]
fn unit_square_examples() {
    let c = PrecisionContext::for_target(12);
    let r = integrate_unit_square(&Integrand2D::new(|p| Ok(Float::with_val(p.x.prec(), 1))), &c).unwrap();
    assert_close(&r.value, &c.real(1), 1e-12, "one");
    let t = Instant::now();
    let gs = Integrand2D::new(|p| Ok(-p.one_minus_x.clone() / (p.one_minus_xy() * p.ln_xy())));
    let r = integrate_unit_square(&gs, &c).unwrap();
    let g = c.real(rug::float::Constant::Euler);
    assert_close(&r.value, &g, 1e-10, "guillera-sondow");
    eprintln!("GS {:?} nodes {}", t.elapsed(), r.nodes_used);
}

#[test]
fn abel_plana_examples() {
    let c = ctx();
    let p = c.prec();
    // (k+1)^{-2}
    let f = AbelPlana {
        f: Box::new(move |z: &ExtComplex| {
            let w = ExtComplex::new(Float::with_val(p, &z.re + 1u32), z.im.clone());
            Ok(ExtComplex::from_real(Float::with_val(p, 1)).div(&w.powi(2)))
        }),
        integral: PlanaIntegral::Numeric { scale: c.real(1) },
        both_routes: true,
    };
    let s = abel_plana_sum(&f, &c).unwrap();
    let pi = c.pi();
    assert_close(&s, &(Float::with_val(p, &pi * &pi) / 6u32), 1e-29, "zeta(2)");
    let f = AbelPlana {
        f: Box::new(move |z: &ExtComplex| Ok(ExtComplex::new(-z.re.clone(), -z.im.clone()).exp())),
        integral: PlanaIntegral::Closed(c.real(1)),
        both_routes: false,
    };
    let s = abel_plana_sum(&f, &c).unwrap();
    let e1 = Float::with_val(p, -1).exp();
    assert_close(&s, &(Float::with_val(p, 1) / (1 - e1)), 1e-29, "geometric");
}
