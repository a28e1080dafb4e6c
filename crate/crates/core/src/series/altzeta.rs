//! Relations between the alternating-zeta log moments S_k and the Stieltjes
//! constants: the forward relation, its triangular inversion, and the
//! Briggs–Chowla closed form.
//!
//! Conventions: S_k = Σ (−1)^{m−1} logᵏm/m and D_k = (−1)ᵏ S_k is the true k-th
//! derivative of ζ_a(s) at s = 1.

use rug::Float;

use crate::error::Result;
use crate::precision::PrecisionContext;
use crate::series::bernoulli::{binomial, factorial};
use crate::series::hasse::alt_zeta_log_moment;

fn pow(x: &Float, n: u32) -> Float {
    use rug::ops::Pow;
    Float::with_val(x.prec(), x.pow(n))
}

/// Forward relation: −S_n = Σ_{k<n} C(n,k)γ_k logⁿ⁻ᵏ2 − logⁿ⁺¹2/(n+1). Returns S_n
/// predicted from γ₀..γ_{n−1}.
pub fn dilcher_forward(n: u32, gammas: &[Float], ctx: &PrecisionContext) -> Float {
    let l = ctx.ln2();
    let mut acc = Float::new(ctx.prec());
    for (k, g) in gammas.iter().enumerate().take(n as usize) {
        let k = k as u32;
        acc += Float::with_val(ctx.prec(), &binomial(n, k)) * g * pow(&l, n - k);
    }
    acc -= pow(&l, n + 1) / (n + 1);
    -acc
}

/// γ₀..γₙ from S₁..S_{n+1} by solving the forward relation, which is triangular
/// with diagonal (m+1)·log 2.
pub fn stieltjes_from_moments(n: u32, moments: &[Float], ctx: &PrecisionContext) -> Vec<Float> {
    let p = ctx.prec();
    let l = ctx.ln2();
    let mut gammas: Vec<Float> = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        let mut rhs = -Float::with_val(p, &moments[m as usize + 1]) + pow(&l, m + 2) / (m + 2);
        for (k, g) in gammas.iter().enumerate() {
            let k = k as u32;
            rhs -= Float::with_val(p, &binomial(m + 1, k)) * g * pow(&l, m + 1 - k);
        }
        gammas.push(rhs / (Float::with_val(p, &l) * (m + 1)));
    }
    gammas
}

/// γₙ by the alternating-zeta route: S₁..S_{n+1} from the Hasse-type series, then the
/// triangular inversion.
pub fn stieltjes_from_altzeta(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    let wide = ctx.widened(5);
    let mut moments = Vec::with_capacity(n as usize + 2);
    for k in 0..=n + 1 {
        moments.push(alt_zeta_log_moment(k, &wide)?.0);
    }
    let g = stieltjes_from_moments(n, &moments, &wide);
    Ok(Float::with_val(ctx.prec(), &g[n as usize]))
}

/// Printed Briggs–Chowla form k!·Σ_{r=1}^{k+1}(−1)^{r+1} log^r 2/r!·A_{k−r} with
/// A_m = (−1)^m γ_m/m! and A_{−1} = 1. Compare with D_k = (−1)ᵏ S_k.
pub fn briggs_chowla(k: u32, gammas: &[Float], ctx: &PrecisionContext) -> Float {
    let p = ctx.prec();
    let l = ctx.ln2();
    let mut acc = Float::new(p);
    for r in 1..=k + 1 {
        let a = if r == k + 1 {
            Float::with_val(p, 1)
        } else {
            let m = k - r;
            let mut a = Float::with_val(p, &gammas[m as usize]) / Float::with_val(p, &factorial(m));
            if m % 2 == 1 {
                a = -a;
            }
            a
        };
        let mut t = pow(&l, r) / Float::with_val(p, &factorial(r)) * a;
        if r % 2 == 0 {
            t = -t;
        }
        acc += t;
    }
    acc * Float::with_val(p, &factorial(k))
}

/// Right side of the printed inversion
/// γₙ = (−1)ⁿ Σ_k C(n,k)(−1)ᵏ logⁿ⁻ᵏ2·[(−1)^{k+1}D_k + log^{k+1}2/(k+1) + γ_k].
pub fn printed_inversion(n: u32, moments: &[Float], gammas: &[Float], ctx: &PrecisionContext) -> Float {
    let p = ctx.prec();
    let l = ctx.ln2();
    let mut acc = Float::new(p);
    for k in 0..=n {
        // (−1)^{k+1} D_k = (−1)^{k+1}(−1)^k S_k = −S_k
        let bracket = -Float::with_val(p, &moments[k as usize]) + pow(&l, k + 1) / (k + 1) + &gammas[k as usize];
        let mut t = Float::with_val(p, &binomial(n, k)) * pow(&l, n - k) * bracket;
        if k % 2 == 1 {
            t = -t;
        }
        acc += t;
    }
    if n % 2 == 1 {
        acc = -acc;
    }
    acc
}
