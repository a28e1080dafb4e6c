//! Numerical helpers shared by the catalog entries.

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{pow10, sci, PrecisionContext};
use crate::quadrature::rules::{tanh_sinh_levels, Abscissa};
use crate::quadrature::{integrate_bose, integrate_laplace, integrate_semi_infinite, Integrand1D};
use crate::series::bernoulli::{bernoulli_number, factorial};

/// ∫₀^∞ g(x)/(e^{2πx}−1)dx by both Bose routes, after checking integrability at 0.
pub(crate) fn bose_both(g: impl Fn(&Float) -> Result<Float> + Send + Sync, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.prec();
    let two_pi = Float::with_val(p, ctx.pi() * 2u32);
    require_integrable_at_zero(|x| Ok(g(x)? / Float::with_val(p, x * &two_pi).exp_m1()), ctx, "Bose integrand")?;
    Ok(integrate_bose(&Integrand1D::new(g), ctx)?.value)
}

/// Fails when x·f(x) does not tend to 0, which makes ∫₀ f diverge.
pub(crate) fn require_integrable_at_zero(
    f: impl Fn(&Float) -> Result<Float>,
    ctx: &PrecisionContext,
    what: &str,
) -> Result<()> {
    let p = ctx.prec();
    let d = ctx.working_digits() as i32;
    let near = pow10(p, -(d / 2));
    let nearer = pow10(p, -d);
    let a = Float::with_val(p, &near * f(&near)?).abs();
    let b = Float::with_val(p, &nearer * f(&nearer)?).abs();
    let floor = pow10(p, -3);
    if a > floor && b >= Float::with_val(p, &a / 2u32) {
        return Err(Error::Domain(format!(
            "{what} diverges at 0: x·f(x) = {} at x = 1e-{}, {} at x = 1e-{}",
            sci(&a, 4),
            d / 2,
            sci(&b, 4),
            d
        )));
    }
    Ok(())
}

/// f′(t) by central differences at h and h/2 combined by Richardson extrapolation,
/// h = 10^{−(target/3)}. f is evaluated with enough extra digits that the rounding
/// error divided by h stays below the context tolerance.
pub(crate) fn richardson_derivative(
    f: impl Fn(&Float, &PrecisionContext) -> Result<Float>,
    t: &Float,
    ctx: &PrecisionContext,
) -> Result<Float> {
    let k = ctx.target_digits() / 3;
    let fine = PrecisionContext::for_target(ctx.target_digits() + k + 5);
    let p = fine.prec();
    let h = pow10(p, -(k as i32));
    let central = |h: &Float| -> Result<Float> {
        let up = f(&Float::with_val(p, t + h), &fine)?;
        let down = f(&Float::with_val(p, t - h), &fine)?;
        Ok((up - down) / Float::with_val(p, h * 2u32))
    };
    let d1 = central(&h)?;
    let d2 = central(&Float::with_val(p, &h / 2u32))?;
    Ok(ctx.real((d2 * 4u32 - d1) / 3u32))
}

/// e^y/(e^y−1)² − 1/y² + 1/12 = −Σ_{k≥2} B_{2k}(2k−1)y^{2k−2}/(2k)!, used below y = ¼.
pub(crate) fn regularized_bose_derivative(y: &Float) -> Float {
    let p = y.prec();
    if *y < 0.25 {
        let y2 = Float::with_val(p, y.square_ref());
        let eps = pow10(p, -(p as i32 / 3));
        let mut acc = Float::new(p);
        let mut pw = y2.clone();
        for k in 2..200u32 {
            let c = Float::with_val(p, &bernoulli_number(2 * k)) * (2 * k - 1) / Float::with_val(p, &factorial(2 * k));
            let t = c * &pw;
            let small = Float::with_val(p, t.abs_ref()) < Float::with_val(p, &eps * &pw);
            acc -= t;
            if small {
                break;
            }
            pw *= &y2;
        }
        return acc;
    }
    printed_bose_derivative(y) + Float::with_val(p, 1) / 12u32
}

/// e^y/(e^y−1)² − 1/y², which tends to −1/12 at 0.
pub(crate) fn printed_bose_derivative(y: &Float) -> Float {
    let p = y.prec();
    let em1 = Float::with_val(p, y.exp_m1_ref());
    let e = Float::with_val(p, &em1 + 1u32);
    e / Float::with_val(p, em1.square_ref()) - Float::with_val(p, y.square_ref()).recip()
}

/// ∫₀^∞ e^{−uy}h(y)dy with a series evaluator below ¼, after an integrability check.
pub(crate) fn laplace_checked(
    h: impl Fn(&Float) -> Result<Float> + Send + Sync,
    series: impl Fn(&Float) -> Result<Float> + Send + Sync,
    u: &Float,
    ctx: &PrecisionContext,
) -> Result<Float> {
    require_integrable_at_zero(&series, ctx, "Laplace integrand")?;
    let f = Integrand1D::removable(h, 0.25, series);
    Ok(integrate_laplace(&f, u, ctx)?.value)
}

/// ∫₀^∞ f with a series evaluator below ¼.
pub(crate) fn semi_infinite(
    f: impl Fn(&Float) -> Result<Float> + Send + Sync,
    series: impl Fn(&Float) -> Result<Float> + Send + Sync,
    ctx: &PrecisionContext,
) -> Result<Float> {
    let g = Integrand1D::removable(f, 0.25, series);
    Ok(integrate_semi_infinite(&g, &ctx.real(1), ctx)?.value)
}

/// ∫₀^b f by tanh-sinh at the context's rule tolerance.
pub(crate) fn finite(f: impl Fn(&Abscissa) -> Result<Float>, a: &Float, b: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.prec();
    let tol = pow10(p, -(ctx.target_digits() as i32 + 2));
    Ok(tanh_sinh_levels(f, a, b, ctx.working_digits(), &tol, p, 12)?.value)
}

/// ln x from an abscissa, using 1 − x near the right end.
pub(crate) fn ln_abscissa(a: &Abscissa) -> Float {
    let p = a.x.prec();
    if a.x < 0.5 {
        Float::with_val(p, a.x.ln_ref())
    } else {
        Float::with_val(p, -&a.to_right).ln_1p()
    }
}

/// 1 + w/ln(1−w), with ln(1−w) + w summed as a series for small w.
fn kanemitsu_numerator(w: &Float, digits: u32) -> Float {
    let p = w.prec();
    let l = Float::with_val(p, -w).ln_1p();
    if *w >= 1e-3 {
        return Float::with_val(p, w / &l) + 1u32;
    }
    let eps = pow10(p, -(digits as i32 + 5));
    let mut acc = Float::new(p);
    let mut wk = Float::with_val(p, w.square_ref());
    let mut k = 2u32;
    loop {
        let t = Float::with_val(p, &wk / k);
        let small = t < Float::with_val(p, w.square_ref()) * &eps;
        acc -= t;
        if small {
            break;
        }
        wk *= w;
        k += 1;
    }
    acc / l
}

/// ∫₀¹ ln x·[∫₀¹ (1−y)/((1−(1−x)y)² ln y) dy + s/x] dx, with the inner integral taken
/// first. With s = +1 the integrand is integrable; s = −1 is rejected as divergent.
///
/// The inner integral is rewritten with w = 1 − y and the exact
/// ∫₀¹ dw/(x+w(1−x))² = 1/x, giving ∫₀¹ [1 + w/ln(1−w)]/(x+w(1−x))² dw, which stays of
/// size log(1/x). Its peak of width x is resolved by splitting at w = x and then
/// geometrically with ratio 1000.
pub(crate) fn kanemitsu_double_integral(sign: i32, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.prec();
    let digits = ctx.working_digits();
    let tol = pow10(p, -(ctx.target_digits() as i32 + 1));
    let itol = pow10(p, -(ctx.target_digits() as i32 + 3));
    let zero = Float::new(p);
    let one = Float::with_val(p, 1);
    let inner = |x: &Float, one_minus_x: &Float| -> Result<Float> {
        let h = |aw: &Abscissa| {
            let w = &aw.x;
            let den = Float::with_val(p, w * one_minus_x) + x;
            Ok(kanemitsu_numerator(w, digits) / Float::with_val(p, den.square_ref()))
        };
        let mut acc = tanh_sinh_levels(h, &zero, x, digits, &itol, p, 10)?.value;
        let mut lo = x.clone();
        while lo < 1 {
            let mut hi = Float::with_val(p, &lo * 1000u32);
            if hi > 0.5 {
                hi = one.clone();
            }
            acc += tanh_sinh_levels(h, &lo, &hi, digits, &itol, p, 10)?.value;
            lo = hi;
        }
        Ok(acc)
    };
    if sign < 0 {
        // J(x) − 1/x = (J + 1/x) − 2/x, so the outer integrand gains −2·ln x/x.
        require_integrable_at_zero(
            |x| {
                let l = Float::with_val(p, x.ln_ref());
                Ok(Float::with_val(p, &l * inner(x, &Float::with_val(p, 1 - x))?) - l * 2u32 / x)
            },
            ctx,
            "outer integrand",
        )?;
    }
    let outer = |ax: &Abscissa| Ok(ln_abscissa(ax) * inner(&ax.x, &ax.to_right)?);
    Ok(tanh_sinh_levels(outer, &zero, &one, digits, &tol, p, 10)?.value)
}
