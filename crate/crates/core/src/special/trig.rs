//! Sine and cosine integrals and the auxiliary functions
//! f(x) = ∫₀^∞ e^{−xu}/(1+u²)du = Ci(x)sin x − si(x)cos x and
//! g(x) = ∫₀^∞ u·e^{−xu}/(1+u²)du = −Ci(x)cos x − si(x)sin x.

use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{pow10, FloatExt, PrecisionContext};
use crate::quadrature::{integrate_laplace, Integrand1D};
use crate::series::bernoulli::factorial;
use crate::series::oracle::em_hurwitz;

/// Power series below this argument, auxiliary-function integrals above.
const SERIES_LIMIT: f64 = 8.0;

/// Si(x), si(x) = Si(x) − π/2 and Ci(x).
#[derive(Debug, Clone, PartialEq)]
pub struct SinCos {
    pub si_big: Float,
    pub si: Float,
    pub ci: Float,
}

/// Si and Ci by their power series; loses about x/ln 10 digits to cancellation,
/// covered by the guard digits for x ≤ 8.
fn series(x: &Float, ctx: &PrecisionContext) -> (Float, Float) {
    let g = ctx.guarded();
    let p = g.prec();
    let x = Float::with_val(p, x);
    let eps = pow10(p, -(g.working_digits() as i32));
    let mut si = Float::new(p);
    let mut ci = Float::with_val(p, Constant::Euler) + Float::with_val(p, x.ln_ref());
    // t = (−1)^k x^{2k+1}/(2k+1)!
    let mut t = x.clone();
    let mut k = 0u32;
    loop {
        si += Float::with_val(p, &t / (2 * k + 1));
        // (−1)^{k+1} x^{2k+2}/(2k+2)!
        let c = Float::with_val(p, &t * &x) / (2 * k + 2);
        let c = -c;
        ci += Float::with_val(p, &c / (2 * k + 2));
        t = Float::with_val(p, &c * &x) / (2 * k + 3);
        k += 1;
        if Float::with_val(p, t.abs_ref()) < eps && k > 2 {
            break;
        }
    }
    (ctx.real(si), ctx.real(ci))
}

/// Si(x), si(x), Ci(x) for x > 0.
pub fn sin_cos_integrals(x: &Float, ctx: &PrecisionContext) -> Result<SinCos> {
    if *x <= 0 {
        return Err(Error::domain("sine and cosine integrals need x > 0"));
    }
    let p = ctx.prec();
    let half_pi = ctx.pi() / 2u32;
    if *x <= SERIES_LIMIT {
        let (si_big, ci) = series(x, ctx);
        let si = Float::with_val(p, &si_big - &half_pi);
        return Ok(SinCos { si_big, si, ci });
    }
    let (f, g) = aux_fg(x, ctx)?;
    let (s, c) = ctx.real(x).sin_cos(Float::new(p));
    let si = -(Float::with_val(p, &f * &c) + Float::with_val(p, &g * &s));
    let ci = Float::with_val(p, &f * &s) - Float::with_val(p, &g * &c);
    Ok(SinCos { si_big: Float::with_val(p, &si + &half_pi), si, ci })
}

/// (f(x), g(x)) for x > 0: from Si/Ci for x ≤ 8, else by Laplace quadrature.
pub fn aux_fg(x: &Float, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    if *x <= 0 {
        return Err(Error::domain("auxiliary functions need x > 0"));
    }
    let p = ctx.prec();
    if *x <= SERIES_LIMIT {
        let sc = sin_cos_integrals(x, ctx)?;
        let (s, c) = ctx.real(x).sin_cos(Float::new(p));
        let f = Float::with_val(p, &sc.ci * &s) - Float::with_val(p, &sc.si * &c);
        let g = -(Float::with_val(p, &sc.ci * &c) + Float::with_val(p, &sc.si * &s));
        return Ok((f, g));
    }
    let one = |u: &Float| Ok(Float::with_val(u.prec(), 1) / (Float::with_val(u.prec(), u.square_ref()) + 1u32));
    let f = integrate_laplace(&Integrand1D::new(one), x, ctx)?.value;
    let g = integrate_laplace(&Integrand1D::new(move |u: &Float| Ok(one(u)? * u)), x, ctx)?.value;
    Ok((f, g))
}

/// Asymptotic (f, g) ~ (Σ(−1)ᵏ(2k)!/x^{2k+1}, Σ(−1)ᵏ(2k+1)!/x^{2k+2}), or None when
/// the smallest term is still above the working precision.
pub fn aux_fg_asymptotic(x: &Float, ctx: &PrecisionContext) -> Option<(Float, Float)> {
    let p = ctx.prec();
    let eps = pow10(p, -(ctx.working_digits() as i32 + 2));
    let x = ctx.real(x);
    let inv = Float::with_val(p, 1) / &x;
    let mut t = inv.clone();
    let mut f = Float::new(p);
    let mut g = Float::new(p);
    for m in 0..1000u32 {
        // t = (−1)^{⌊m/2⌋}·m!/x^{m+1}
        if m % 2 == 0 {
            f += &t;
        } else {
            g += &t;
        }
        let next = Float::with_val(p, &t * &inv) * (m + 1);
        let next = if m % 2 == 1 { -next } else { next };
        if Float::with_val(p, next.abs_ref()) < eps {
            return Some((f, g));
        }
        if Float::with_val(p, next.abs_ref()) > Float::with_val(p, t.abs_ref()) {
            return None;
        }
        t = next;
    }
    None
}

/// Which auxiliary function a lattice sum uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Aux {
    F,
    G,
}

/// Σ_{n≥1} aux(n·y₀)/n^p. Terms with n·y₀ beyond (working_digits+5)·ln 10 are summed
/// through the asymptotic expansion, each power as a Hurwitz tail ζ(q, N+1).
/// Returns the value and the explicit term count.
pub(crate) fn aux_lattice_sum(which: Aux, y0: &Float, p_pow: u32, ctx: &PrecisionContext) -> Result<(Float, u32)> {
    let prec = ctx.prec();
    let thresh = f64::from(ctx.working_digits() + 5) * std::f64::consts::LN_10;
    let n_max = (thresh / y0.to_f64()).ceil().max(1.0) as u32;
    let mut acc = Float::new(prec);
    for n in 1..=n_max {
        let (f, g) = aux_fg(&Float::with_val(prec, y0 * n), ctx)?;
        let v = if which == Aux::F { f } else { g };
        acc += v / Float::with_val(prec, n).powi(p_pow);
    }
    let eps = pow10(prec, -(ctx.working_digits() as i32 + 2));
    let a = ctx.real(n_max + 1);
    let start = if which == Aux::F { 0 } else { 1 };
    for k in 0..200u32 {
        let m = 2 * k + start;
        // (−1)^k m!/y₀^{m+1}·ζ(m+1+p, N+1)
        let c = Float::with_val(prec, &factorial(m)) / Float::with_val(prec, y0).powi(m + 1);
        let z = em_hurwitz(&ctx.real(m + 1 + p_pow), &a, 0, ctx)?.remove(0);
        let t = c * z;
        let small = Float::with_val(prec, t.abs_ref()) < eps;
        if k % 2 == 1 {
            acc -= t;
        } else {
            acc += t;
        }
        if small {
            return Ok((acc, n_max));
        }
    }
    Err(Error::no_convergence("asymptotic tail of an auxiliary-function sum", &eps))
}
