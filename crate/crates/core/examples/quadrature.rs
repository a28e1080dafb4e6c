//! The three integration engines on integrands with known values.

use rug::Float;
use stieltjes::precision::sci;
use stieltjes::quadrature::{integrate_bose, integrate_laplace, integrate_unit_square, Integrand1D, Integrand2D};
use stieltjes::PrecisionContext;

fn main() -> stieltjes::Result<()> {
    let ctx = PrecisionContext::default();
    let p = ctx.prec();

    // ∫ x/(e^{2πx}−1) dx = 1/24
    let q = integrate_bose(&Integrand1D::new(|x: &Float| Ok(x.clone())), &ctx)?;
    let want = Float::with_val(p, 1) / 24u32;
    println!("Bose ∫x:          {}  err {}  ({} nodes)", sci(&q.value, 30), sci(&(q.value - want).abs(), 2), q.nodes_used);

    // ∫ e^{−2t} t² dt = 1/4
    let two = ctx.real(2);
    let q = integrate_laplace(&Integrand1D::new(|t: &Float| Ok(Float::with_val(t.prec(), t.square_ref()))), &two, &ctx)?;
    println!("Laplace t² at 2:  {}  err {}", sci(&q.value, 30), sci(&(q.value - 0.25f64).abs(), 2));

    // ∫∫ −log(xy)/(1−xy) = 2ζ(3); the log and the denominator are taken cancellation-free.
    let f = Integrand2D::new(|pt| Ok(-pt.ln_xy() / pt.one_minus_xy()));
    let q = integrate_unit_square(&f, &ctx)?;
    let want = Float::with_val(p, Float::zeta_u(3)) * 2u32;
    println!("unit square:      {}  err {}", sci(&q.value, 30), sci(&(q.value - want).abs(), 2));
    Ok(())
}
