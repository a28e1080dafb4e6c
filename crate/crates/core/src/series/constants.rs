//! Cached reference constants, all taken from the Euler–Maclaurin oracle.
//!
//! Constants are computed at a context whose target covers the caller's working
//! precision, rounded up to a multiple of 25 digits so that nearby contexts share one
//! cached evaluation.

use rug::Float;

use crate::error::Result;
use crate::precision::PrecisionContext;
use crate::series::oracle::{limit_stieltjes_oracle_all, oracle_zeta_derivs};

fn reference_ctx(ctx: &PrecisionContext) -> PrecisionContext {
    let need = ctx.working_digits() + 5;
    PrecisionContext::for_target(need.div_ceil(25) * 25)
}

/// Stieltjes constant γₙ = γₙ(1).
pub fn stieltjes_gamma(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    let r = reference_ctx(ctx);
    let v = limit_stieltjes_oracle_all(n.max(2), &r.real(1), &r)?;
    Ok(ctx.real(&v[n as usize]))
}

/// Euler's constant γ.
pub fn euler_gamma(ctx: &PrecisionContext) -> Result<Float> {
    stieltjes_gamma(0, ctx)
}

/// ζ^{(order)}(s) at an integer s ≠ 1.
pub fn zeta_deriv(s: i32, order: usize, ctx: &PrecisionContext) -> Result<Float> {
    let r = reference_ctx(ctx);
    let v = oracle_zeta_derivs(&r.real(s), &r.real(1), order.max(1), &r)?;
    Ok(ctx.real(&v[order]))
}

/// ζ(s) at an integer s ≠ 1.
pub fn zeta(s: i32, ctx: &PrecisionContext) -> Result<Float> {
    zeta_deriv(s, 0, ctx)
}
