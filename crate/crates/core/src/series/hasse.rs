//! Binomial double sums: the Hasse series for γₙ(u), the alternating-zeta series
//! and its logarithmic moments, and the binomial log-gamma series.
//!
//! The unshifted Hasse series converges only like 1/(i² log i) at u = 1. Every
//! series here is therefore evaluated at a shifted argument U = u + M, where the
//! outer terms decay like i!·Γ(U)/Γ(U+i+1), and the exact recurrence in u supplies
//! the first M terms. The inner alternating sums lose about i·log₁₀2 digits, which
//! the guard digits absorb; the loss is measured and reported.

use rug::Float;

use crate::precision::FloatExt;

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;
use crate::series::bernoulli::binomial;

/// Default cap on the outer index of the Hasse series.
pub const HASSE_CAP: u32 = 64;

/// Term count and cancellation measured while summing a series.
#[derive(Debug, Clone, PartialEq)]
pub struct SumDiagnostics {
    pub terms_used: u32,
    pub max_term_magnitude: Float,
    pub cancellation_digits_lost: u32,
}

impl SumDiagnostics {
    pub(crate) fn new(terms_used: u32, max_term: Float, result: &Float) -> Self {
        let lost = digits_lost(&max_term, result);
        SumDiagnostics { terms_used, max_term_magnitude: max_term, cancellation_digits_lost: lost }
    }
}

pub(crate) fn digits_lost(max_term: &Float, result: &Float) -> u32 {
    if max_term.is_zero() {
        return 0;
    }
    if result.is_zero() {
        return u32::MAX / 2;
    }
    let r = Float::with_val(max_term.prec(), max_term / Float::with_val(max_term.prec(), result.abs_ref()));
    let d = r.log10().to_f64();
    if d <= 0.0 {
        0
    } else {
        d.ceil() as u32
    }
}

/// log₁₀ of the outer-term bound i!·Γ(U)/Γ(U+i+1)·(n+1)·2ⁿ·lnⁿ(U+i).
fn log10_term_bound(i: u32, big_u: f64, n: u32) -> f64 {
    let mut s = -big_u.log10();
    for k in 1..=i {
        s += (f64::from(k) / (big_u + f64::from(k))).log10();
    }
    s + f64::from(n + 1).log10() + f64::from(n) * (2.0 * (big_u + f64::from(i)).ln()).log10()
}

/// Smallest shift M making the outer-term bound at three quarters of the cap fall
/// below 10^(−digits).
pub fn hasse_shift(u: f64, n: u32, digits: u32, cap: u32) -> u32 {
    let at = cap * 3 / 4;
    let mut m = 0u32;
    while log10_term_bound(at, u + f64::from(m), n) > -f64::from(digits) {
        m += 1;
        if m > 100_000 {
            break;
        }
    }
    m
}

/// Σᵢ w(i)·Σⱼ C(i,j)(−1)ʲ f[j], stopping after three consecutive outer terms below
/// `tol`. `f` must hold at least cap+1 values.
fn binomial_double_sum(
    f: &[Float],
    weight: impl Fn(u32, u32) -> Float,
    cap: u32,
    tol: &Float,
    prec: u32,
    what: &str,
) -> Result<(Float, SumDiagnostics)> {
    let mut total = Float::new(prec);
    let mut max_term = Float::new(prec);
    let mut small_run = 0;
    for i in 0..=cap {
        let w = weight(i, prec);
        let w_abs = Float::with_val(prec, w.abs_ref());
        let mut inner = Float::new(prec);
        for j in 0..=i {
            let c = Float::with_val(prec, &binomial(i, j));
            let mut t = c * &f[j as usize];
            if j % 2 == 1 {
                t = -t;
            }
            let mag = Float::with_val(prec, t.abs_ref()) * &w_abs;
            if mag > max_term {
                max_term = mag;
            }
            inner += t;
        }
        let term = inner * &w;
        let small = Float::with_val(prec, term.abs_ref()) < *tol;
        total += &term;
        small_run = if small { small_run + 1 } else { 0 };
        if small_run >= 3 {
            let diag = SumDiagnostics::new(i + 1, max_term, &total);
            return Ok((total, diag));
        }
        if i == cap {
            return Err(Error::no_convergence(what, &term));
        }
    }
    unreachable!()
}

fn check_loss(diag: &SumDiagnostics, ctx: &PrecisionContext, what: &str) -> Result<()> {
    if diag.cancellation_digits_lost > ctx.guard_digits() {
        return Err(Error::PrecisionExhausted {
            what: what.to_string(),
            lost: diag.cancellation_digits_lost,
            available: ctx.guard_digits(),
        });
    }
    Ok(())
}

/// γₙ(u) by the Hasse series evaluated at u + M with the recurrence
/// γₙ(u) = Σ_{k<M} logⁿ(u+k)/(u+k) + γₙ(u+M). `shift = None` picks M from the
/// context; `Some(0)` gives the literal unshifted series.
pub fn hasse_stieltjes_with(
    n: u32,
    u: &Float,
    shift: Option<u32>,
    cap: u32,
    ctx: &PrecisionContext,
) -> Result<(Float, SumDiagnostics)> {
    if *u <= 0 {
        return Err(Error::domain("hasse_stieltjes needs u > 0"));
    }
    let inner_ctx = ctx.guarded();
    let p = inner_ctx.prec();
    let u = Float::with_val(p, u);
    let m = shift.unwrap_or_else(|| hasse_shift(u.to_f64(), n, ctx.target_digits() + 3, cap));
    let big_u = Float::with_val(p, &u + m);
    let f: Vec<Float> = (0..=cap)
        .map(|j| {
            let l = Float::with_val(p, &big_u + j).ln();
            l.powi(n + 1)
        })
        .collect();
    let tol = crate::precision::pow10(p, -(ctx.target_digits() as i32 + 3)) * (n + 1);
    let (s, mut diag) =
        binomial_double_sum(&f, |i, p| Float::with_val(p, 1) / (i + 1), cap, &tol, p, "Hasse series for γₙ(u)")?;
    let hasse_part = -s / (n + 1);
    diag = SumDiagnostics::new(diag.terms_used, diag.max_term_magnitude / (n + 1), &hasse_part);
    check_loss(&diag, ctx, "Hasse series for γₙ(u)")?;
    let mut finite = Float::new(p);
    for k in 0..m {
        let x = Float::with_val(p, &u + k);
        let l = Float::with_val(p, x.ln_ref());
        finite += l.powi(n) / x;
    }
    Ok((Float::with_val(ctx.prec(), finite + hasse_part), diag))
}

/// γₙ(u) by the shifted Hasse series with the default cap.
pub fn hasse_stieltjes(n: u32, u: &Float, ctx: &PrecisionContext) -> Result<(Float, SumDiagnostics)> {
    hasse_stieltjes_with(n, u, None, HASSE_CAP, ctx)
}

/// Outer cap for the 2^{−(i+1)}-weighted series: enough halvings to pass the
/// working precision.
fn alt_cap(ctx: &PrecisionContext) -> u32 {
    ((f64::from(ctx.working_digits() + 5)) * std::f64::consts::LOG2_10).ceil() as u32 + 10
}

fn alt_series(f: Vec<Float>, ctx: &PrecisionContext, cap: u32, what: &str) -> Result<(Float, SumDiagnostics)> {
    let inner_ctx = ctx.guarded();
    let p = inner_ctx.prec();
    let tol = crate::precision::pow10(p, -(ctx.working_digits() as i32));
    let (s, diag) = binomial_double_sum(
        &f,
        |i, p| {
            let mut w = Float::with_val(p, 1);
            w >>= i + 1;
            w
        },
        cap,
        &tol,
        p,
        what,
    )?;
    check_loss(&diag, ctx, what)?;
    Ok((Float::with_val(ctx.prec(), s), diag))
}

/// ζ_a(s,u) = Σᵢ 2^{−(i+1)} Σⱼ C(i,j)(−1)ʲ(u+j)^{−s}.
pub fn alt_zeta_hasse(s: &Float, u: &Float, ctx: &PrecisionContext) -> Result<(Float, SumDiagnostics)> {
    if *u <= 0 {
        return Err(Error::domain("alt_zeta_hasse needs u > 0"));
    }
    let p = ctx.guarded().prec();
    let cap = alt_cap(ctx);
    let neg_s = Float::with_val(p, -s);
    let f = (0..=cap)
        .map(|j| {
            let x = Float::with_val(p, u + j);
            x.ln() * &neg_s
        })
        .map(|l| l.exp())
        .collect();
    alt_series(f, ctx, cap, "alternating zeta series")
}

/// S_k = Σᵢ 2^{−(i+1)} Σⱼ C(i,j)(−1)ʲ logᵏ(1+j)/(1+j) = Σ_{m≥1} (−1)^{m−1} logᵏm/m.
/// The true k-th derivative of ζ_a at 1 is D_k = (−1)ᵏ S_k.
pub fn alt_zeta_log_moment(k: u32, ctx: &PrecisionContext) -> Result<(Float, SumDiagnostics)> {
    let p = ctx.guarded().prec();
    let cap = alt_cap(ctx);
    let f = (0..=cap)
        .map(|j| {
            let x = Float::with_val(p, 1 + j);
            let l = Float::with_val(p, x.ln_ref());
            l.powi(k) / x
        })
        .collect();
    alt_series(f, ctx, cap, "alternating zeta log moment")
}

/// log Γ(u) from the binomial series
/// Σₙ 1/(n+1) Σ_k C(n,k)(−1)ᵏ(u+k)log(u+k) + ½ − u + ½log 2π, evaluated at u + M with
/// log Γ(u) = log Γ(u+M) − Σ_{k<M} log(u+k).
pub fn binomial_log_gamma(u: &Float, ctx: &PrecisionContext) -> Result<(Float, SumDiagnostics)> {
    if *u <= 0 {
        return Err(Error::domain("log-gamma needs u > 0"));
    }
    let p = ctx.guarded().prec();
    let cap = HASSE_CAP;
    let u = Float::with_val(p, u);
    // Δⁱ of x·log x decays one power of U slower than Δⁱ log x.
    let m = hasse_shift(u.to_f64(), 2, ctx.target_digits() + 6, cap);
    let big_u = Float::with_val(p, &u + m);
    let f: Vec<Float> = (0..=cap)
        .map(|j| {
            let x = Float::with_val(p, &big_u + j);
            let l = Float::with_val(p, x.ln_ref());
            x * l
        })
        .collect();
    let tol = crate::precision::pow10(p, -(ctx.target_digits() as i32 + 3));
    let (s, diag) =
        binomial_double_sum(&f, |i, p| Float::with_val(p, 1) / (i + 1), cap, &tol, p, "binomial log-gamma series")?;
    let ctxg = ctx.guarded();
    let mut lg = s + Float::with_val(p, 0.5) - &big_u + ctxg.log_2pi() / 2;
    let diag = SumDiagnostics::new(diag.terms_used, diag.max_term_magnitude, &lg);
    check_loss(&diag, ctx, "binomial log-gamma series")?;
    for k in 0..m {
        lg -= Float::with_val(p, &u + k).ln();
    }
    Ok((Float::with_val(ctx.prec(), lg), diag))
}

/// Σᵢ 1/(i+1)·Σⱼ C(i,j)(−1)ʲ over i ≤ cap, computed exactly.
pub fn kronecker_degenerate_sum(cap: u32) -> crate::precision::Rational {
    let mut total = crate::precision::Rational::new();
    for i in 0..=cap {
        let mut inner = rug::Integer::new();
        for j in 0..=i {
            let c = binomial(i, j);
            if j % 2 == 1 {
                inner -= c;
            } else {
                inner += c;
            }
        }
        total += crate::precision::Rational::from((inner, rug::Integer::from(i + 1)));
    }
    total
}

