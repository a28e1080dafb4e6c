//! Harmonic-number sums and the Plouffe series.
//!
//! Slowly convergent sums are split at N: the head is summed exactly, the tail
//! uses the asymptotic expansion of Hₙ or ψ(n) with each power summed as a Hurwitz
//! zeta tail ζ(m, N+1) and the logarithm as −ζ′(m, N+1).

use rug::Float;

use crate::precision::FloatExt;

use crate::error::Result;
use crate::precision::{pow10, PrecisionContext};
use crate::series::bernoulli::{bernoulli_number, harmonic};
use crate::series::constants;
use crate::series::oracle::em_hurwitz;

const SPLIT: u32 = 40;

/// Σ_{n>N} Lₙ·n^{−m} for the asymptotic expansions
/// Hₙ ≈ log n + γ + 1/(2n) − Σ B_{2k}/(2k·n^{2k}) (`harmonic = true`) and
/// ψ(n) ≈ log n − 1/(2n) − Σ B_{2k}/(2k·n^{2k}) (`harmonic = false`).
fn asymptotic_tail(m: u32, n_split: u32, harmonic_tail: bool, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.prec();
    let a = ctx.real(n_split + 1);
    let tol = pow10(p, -(ctx.working_digits() as i32 + 2));
    let zm = em_hurwitz(&ctx.real(m), &a, 1, ctx)?;
    let mut acc = -zm[1].clone();
    let half = em_hurwitz(&ctx.real(m + 1), &a, 0, ctx)?.remove(0) / 2;
    if harmonic_tail {
        acc += constants::euler_gamma(ctx)? * &zm[0];
        acc += half;
    } else {
        acc -= half;
    }
    for k in 1..=40u32 {
        let b = ctx.rational(&bernoulli_number(2 * k)) / (2 * k);
        let z = em_hurwitz(&ctx.real(m + 2 * k), &a, 0, ctx)?.remove(0);
        let t = b * z;
        let small = Float::with_val(p, t.abs_ref()) < tol;
        acc -= t;
        if small {
            break;
        }
    }
    Ok(acc)
}

/// Σ_{n>N} Hₙ·n^{−m}.
pub fn harmonic_power_tail(m: u32, n_split: u32, ctx: &PrecisionContext) -> Result<Float> {
    asymptotic_tail(m, n_split, true, ctx)
}

/// Σ_{n≥1} Hₙ/n^m for m ≥ 2.
pub fn harmonic_dirichlet(m: u32, ctx: &PrecisionContext) -> Result<Float> {
    let g = ctx.guarded();
    let mut head = Float::new(g.prec());
    for n in 1..=SPLIT {
        head += g.rational(&harmonic(n)) / g.real(n).powi(m);
    }
    Ok(ctx.real(head + harmonic_power_tail(m, SPLIT, &g)?))
}

/// Σ_{n≥1} ψ(n)/n^m for m ≥ 2, with ψ(n) = H_{n−1} − γ exactly in the head.
pub fn digamma_dirichlet(m: u32, ctx: &PrecisionContext) -> Result<Float> {
    let g = ctx.guarded();
    let gamma = constants::euler_gamma(&g)?;
    let mut head = Float::new(g.prec());
    for n in 1..=SPLIT {
        let psi = g.rational(&harmonic(n - 1)) - &gamma;
        head += psi / g.real(n).powi(m);
    }
    Ok(ctx.real(head + asymptotic_tail(m, SPLIT, false, &g)?))
}

/// S = Σ Hₙ(log((n+1)/n) − 1/n). The tail expands log(1+1/n) − 1/n in powers of 1/n.
pub fn kanemitsu_sum(ctx: &PrecisionContext) -> Result<Float> {
    let g = ctx.guarded();
    let p = g.prec();
    let mut acc = Float::new(p);
    for n in 1..=SPLIT {
        let inv = Float::with_val(p, 1) / n;
        let t = Float::with_val(p, inv.ln_1p_ref()) - &inv;
        acc += g.rational(&harmonic(n)) * t;
    }
    acc += kanemitsu_tail(&g)?;
    Ok(ctx.real(acc))
}

/// Σ_{n>N} Hₙ·Σ_{m≥2}(−1)^{m+1} n^{−m}/m.
fn kanemitsu_tail(g: &PrecisionContext) -> Result<Float> {
    let p = g.prec();
    let tol = pow10(p, -(g.working_digits() as i32));
    let mut acc = Float::new(p);
    for m in 2..200u32 {
        let t = harmonic_power_tail(m, SPLIT, g)? / m;
        let small = Float::with_val(p, t.abs_ref()) < tol;
        if m % 2 == 1 {
            acc += t;
        } else {
            acc -= t;
        }
        if small {
            break;
        }
    }
    Ok(acc)
}

/// Partial sums Σ_{n≤N} Hₙ(log((n+1)/n) − 1/n).
pub fn kanemitsu_partial(n_max: u32, ctx: &PrecisionContext) -> Float {
    let p = ctx.prec();
    let mut acc = Float::new(p);
    for n in 1..=n_max {
        let inv = Float::with_val(p, 1) / n;
        let t = Float::with_val(p, inv.ln_1p_ref()) - &inv;
        acc += ctx.rational(&harmonic(n)) * t;
    }
    acc
}

/// Σ Hₙ(1/n − 1/(n+1)), using 1/(n(n+1)) = Σ_{m≥2}(−1)^m n^{−m} in the tail.
pub fn kanemitsu_companion(ctx: &PrecisionContext) -> Result<Float> {
    let g = ctx.guarded();
    let p = g.prec();
    let mut acc = Float::new(p);
    for n in 1..=SPLIT {
        acc += g.rational(&harmonic(n)) / (u64::from(n) * u64::from(n + 1));
    }
    let tol = pow10(p, -(g.working_digits() as i32));
    for m in 2..200u32 {
        let t = harmonic_power_tail(m, SPLIT, &g)?;
        let small = Float::with_val(p, t.abs_ref()) < tol;
        if m % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
        if small {
            break;
        }
    }
    Ok(ctx.real(acc))
}

/// ζ(3) = 7π³/180 − 2Σ 1/(n³(e^{2πn}−1)).
pub fn plouffe_zeta3(ctx: &PrecisionContext) -> Float {
    plouffe_zeta3_terms(u32::MAX, ctx)
}

/// Plouffe's series truncated after `terms` terms or at tolerance, whichever first.
pub fn plouffe_zeta3_terms(terms: u32, ctx: &PrecisionContext) -> Float {
    let g = ctx.guarded();
    let p = g.prec();
    let pi = g.pi();
    let tol = pow10(p, -(g.working_digits() as i32));
    let mut acc = Float::new(p);
    let mut n = 1u32;
    while n <= terms {
        let e = Float::with_val(p, &pi * (2 * n)).exp_m1();
        let t = Float::with_val(p, 1) / (e * u64::from(n).pow(3));
        let small = t < tol;
        acc += t;
        if small {
            break;
        }
        n += 1;
    }
    let lead = Float::with_val(p, pi.powi(3)) * 7 / 180;
    ctx.real(lead - acc * 2)
}

/// n·(Hₙ − log n − γ), which tends to ½.
pub fn harmonic_excess(n: u32, ctx: &PrecisionContext) -> Result<Float> {
    let g = ctx.guarded();
    let h = g.rational(&harmonic(n)) - g.real(n).ln() - constants::euler_gamma(&g)?;
    Ok(ctx.real(h * n))
}

