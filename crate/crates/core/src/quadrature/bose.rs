//! Bose-kernel and Laplace integrals.

use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{pow10, sci, PrecisionContext};
use crate::quadrature::kernels::{bose, bose_laurent};
use crate::quadrature::rules::{exp_sinh, tanh_sinh};
use crate::quadrature::{Integrand1D, QuadratureResult};

/// Accepted level difference for one quadrature: two digits past the target.
fn rule_tol(ctx: &PrecisionContext) -> Float {
    pow10(ctx.prec(), -(ctx.target_digits() as i32 + 2))
}

/// Direct route: tanh-sinh on [0, X] with X = (working_digits+5)·ln10/(2π), where the
/// kernel has fallen below 10^{−(working_digits+5)}.
pub fn integrate_bose_direct(g: &Integrand1D, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let p = ctx.prec();
    let wd = ctx.working_digits();
    let x_max = Float::with_val(p, 10u32).ln() * (wd + 5) / (Float::with_val(p, Constant::Pi) * 2u32);
    tanh_sinh(|a| Ok(g.eval(&a.x)? * bose(&a.x)), &Float::new(p), &x_max, wd, &rule_tol(ctx), p)
}

/// Kernel-expansion route: Σ_{n≤N} ∫g·e^{−2πnx} by exp-sinh, plus the remainder
/// ∫g·e^{−2πNx}/(e^{2πx}−1) with the kernel replaced by its Laurent expansion. The
/// factor e^{−2πNx} confines the remainder to x ≪ 1, where the expansion converges.
pub fn integrate_bose_kernel(g: &Integrand1D, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let p = ctx.prec();
    let wd = ctx.working_digits();
    let n_terms = (2 * wd) / 5 + 5;
    let k_max = wd / 2 + 5;
    let tol = rule_tol(ctx) / 100u32;
    let two_pi = Float::with_val(p, Constant::Pi) * 2u32;
    let zero = Float::new(p);
    let mut total = Float::new(p);
    let mut err = Float::new(p);
    let mut nodes = 0u64;
    for n in 1..=n_terms {
        let rate = Float::with_val(p, &two_pi * n);
        let scale = Float::with_val(p, 1) / &rate;
        let r = exp_sinh(
            |a| {
                let damp = Float::with_val(p, &rate * &a.x);
                Ok(g.eval(&a.x)? * (-damp).exp())
            },
            &zero,
            &scale,
            wd,
            &tol,
            p,
        )?;
        total += r.value;
        err += r.error_estimate;
        nodes += r.nodes_used;
    }
    let rate = Float::with_val(p, &two_pi * n_terms);
    let scale = Float::with_val(p, 1) / &rate;
    let r = exp_sinh(
        |a| {
            let damp = Float::with_val(p, &rate * &a.x);
            Ok(g.eval(&a.x)? * (-damp).exp() * bose_laurent(&a.x, k_max))
        },
        &zero,
        &scale,
        wd,
        &tol,
        p,
    )?;
    total += r.value;
    err += r.error_estimate;
    nodes += r.nodes_used;
    Ok(QuadratureResult { value: total, error_estimate: err, nodes_used: nodes })
}

/// ∫₀^∞ g(x)/(e^{2πx}−1)dx by both routes; they must agree within 10·tolerance.
pub fn integrate_bose(g: &Integrand1D, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let direct = integrate_bose_direct(g, ctx)?;
    let kernel = integrate_bose_kernel(g, ctx)?;
    let gap = Float::with_val(ctx.prec(), &direct.value - &kernel.value).abs();
    let allowed = ctx.tolerance() * 10u32;
    if gap > allowed {
        return Err(Error::Disagreement {
            what: "Bose integral, direct vs kernel expansion".into(),
            gap: sci(&gap, 4),
            allowed: sci(&allowed, 2),
        });
    }
    let error_estimate = direct.error_estimate.max(&gap);
    Ok(QuadratureResult { value: direct.value, error_estimate, nodes_used: direct.nodes_used + kernel.nodes_used })
}

/// ∫₀^∞ f by exp-sinh; `scale` is the decay length of f.
pub fn integrate_semi_infinite(f: &Integrand1D, scale: &Float, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let p = ctx.prec();
    exp_sinh(|a| f.eval(&a.x), &Float::new(p), scale, ctx.working_digits(), &rule_tol(ctx), p)
}

/// ∫₀^∞ e^{−ut}h(t)dt for u > 0.
pub fn integrate_laplace(h: &Integrand1D, u: &Float, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    if *u <= 0 {
        return Err(Error::domain("Laplace integral needs u > 0"));
    }
    let p = ctx.prec();
    let u = Float::with_val(p, u);
    let scale = Float::with_val(p, 1) / &u;
    exp_sinh(
        |a| {
            let damp = Float::with_val(p, &u * &a.x);
            Ok(h.eval(&a.x)? * (-damp).exp())
        },
        &Float::new(p),
        &scale,
        ctx.working_digits(),
        &rule_tol(ctx),
        p,
    )
}
