//! Digamma, trigamma and log-gamma.

use std::str::FromStr;

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{arctan_ratio, pow10, FloatExt, PrecisionContext};
use crate::quadrature::{integrate_laplace, kernels, Integrand1D};
use crate::series::bernoulli::bernoulli_number;
use crate::series::hasse;
use crate::special::trig::{aux_fg, aux_lattice_sum, Aux};
use crate::special::{bose, shift_to, Diagnostics, FunctionValue};

/// Argument above which the Bernoulli asymptotic series reaches working precision.
fn asymptotic_floor(ctx: &PrecisionContext) -> f64 {
    0.4 * f64::from(ctx.working_digits()) + 5.0
}

/// Σ_{k≥1} B_{2k}·c(k)/z^{2k+offset} until terms fall below the working precision.
fn bernoulli_asymptotic(z: &Float, offset: i32, coeff: impl Fn(u32) -> u32, ctx: &PrecisionContext) -> Float {
    let p = ctx.prec();
    let eps = pow10(p, -(ctx.working_digits() as i32 + 2));
    let inv2 = Float::with_val(p, 1) / Float::with_val(p, z.square_ref());
    let mut pw = if offset >= 0 { Float::with_val(p, 1) / z.powi(offset as u32) } else { z.powi((-offset) as u32) };
    let mut acc = Float::new(p);
    for k in 1..300u32 {
        pw *= &inv2;
        let t = ctx.rational(&bernoulli_number(2 * k)) / coeff(k) * &pw;
        let small = Float::with_val(p, t.abs_ref()) < eps;
        acc += t;
        if small {
            break;
        }
    }
    acc
}

/// ψ(u) from ψ(z) ~ log z − 1/(2z) − Σ B_{2k}/(2k·z^{2k}) at z = u + M and
/// ψ(u) = ψ(u+M) − Σ_{k<M} 1/(u+k). Fast; used inside integrands.
pub fn digamma_asymptotic(u: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if *u <= 0 {
        return Err(Error::domain("ψ(u) needs u > 0"));
    }
    let p = ctx.prec();
    let m = shift_to(u, asymptotic_floor(ctx));
    let z = Float::with_val(p, u + m);
    let mut v = Float::with_val(p, z.ln_ref()) - Float::with_val(p, 0.5) / &z;
    v -= bernoulli_asymptotic(&z, 0, |k| 2 * k, ctx);
    for k in 0..m {
        v -= Float::with_val(p, 1) / Float::with_val(p, u + k);
    }
    Ok(v)
}

/// ψ′(u) from ψ′(z) ~ 1/z + 1/(2z²) + Σ B_{2k}/z^{2k+1} with the same shift.
pub fn trigamma_asymptotic(u: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if *u <= 0 {
        return Err(Error::domain("ψ′(u) needs u > 0"));
    }
    let p = ctx.prec();
    let m = shift_to(u, asymptotic_floor(ctx));
    let z = Float::with_val(p, u + m);
    let inv = Float::with_val(p, 1) / &z;
    let mut v = Float::with_val(p, &inv * &inv) / 2u32 + &inv;
    v += bernoulli_asymptotic(&z, 1, |_| 1, ctx);
    for k in 0..m {
        let x = Float::with_val(p, u + k);
        v += Float::with_val(p, 1) / x.square();
    }
    Ok(v)
}

/// Route for ψ(u).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigammaRoute {
    /// −1/(2u) + log u − 2∫x/((u²+x²)(e^{2πx}−1))dx.
    Bose,
    /// log u − 1/(2u) − ∫e^{−uy}[1/(e^y−1) − 1/y + ½]dy.
    Laplace,
    /// Bernoulli asymptotic series with the recurrence shift.
    Asymptotic,
}

impl DigammaRoute {
    pub fn label(self) -> &'static str {
        match self {
            DigammaRoute::Bose => "bose",
            DigammaRoute::Laplace => "laplace",
            DigammaRoute::Asymptotic => "asymptotic",
        }
    }
}

impl FromStr for DigammaRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bose" => Ok(DigammaRoute::Bose),
            "laplace" => Ok(DigammaRoute::Laplace),
            "asymptotic" => Ok(DigammaRoute::Asymptotic),
            _ => Err(Error::InvalidMethod(format!("unknown digamma route {s:?}"))),
        }
    }
}

/// ψ(u) by the Bose integral.
pub fn digamma(u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    digamma_route(u, DigammaRoute::Bose, ctx)
}

pub fn digamma_route(u: &Float, route: DigammaRoute, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *u <= 0 {
        return Err(Error::domain("ψ(u) needs u > 0"));
    }
    let p = ctx.prec();
    let u = ctx.real(u);
    let base = Float::with_val(p, u.ln_ref()) - Float::with_val(p, 0.5) / &u;
    match route {
        DigammaRoute::Bose => {
            let u2 = Float::with_val(p, u.square_ref());
            let q = bose(|x| Ok(Float::with_val(p, x / (Float::with_val(p, x.square_ref()) + &u2))), ctx)?;
            let v = base - Float::with_val(p, &q.value * 2u32);
            Ok(FunctionValue::new(v, route.label(), Diagnostics::Quadrature(q)))
        }
        DigammaRoute::Laplace => {
            let h = Integrand1D::removable(
                |t| Ok(kernels::bose_bracket(t)),
                kernels::SERIES_CUTOFF,
                |t| Ok(kernels::bose_bracket_series(t)),
            );
            let q = integrate_laplace(&h, &u, ctx)?;
            let v = base - &q.value;
            Ok(FunctionValue::new(v, route.label(), Diagnostics::Quadrature(q)))
        }
        DigammaRoute::Asymptotic => {
            let m = shift_to(&u, asymptotic_floor(ctx));
            Ok(FunctionValue::new(digamma_asymptotic(&u, ctx)?, route.label(), Diagnostics::Asymptotic { terms: m }))
        }
    }
}

/// ψ(a) = log a − 1/(2a) − 2Σ g(2nπa), with g the auxiliary cosine-integral function.
pub fn norlund_digamma(a: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *a <= 0 {
        return Err(Error::domain("ψ(a) needs a > 0"));
    }
    let p = ctx.prec();
    let a = ctx.real(a);
    let y0 = ctx.pi() * &a * 2u32;
    let (s, n) = aux_lattice_sum(Aux::G, &y0, 0, ctx)?;
    let v = Float::with_val(p, a.ln_ref()) - Float::with_val(p, 0.5) / &a - s * 2u32;
    Ok(FunctionValue::new(v, "norlund", Diagnostics::Asymptotic { terms: n }))
}

/// Route for ψ′(u).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigammaRoute {
    /// 1/(2u²) + 1/u + 4u∫x/((u²+x²)²(e^{2πx}−1))dx.
    Bose,
    Asymptotic,
}

pub fn trigamma(u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    trigamma_route(u, TrigammaRoute::Bose, ctx)
}

pub fn trigamma_route(u: &Float, route: TrigammaRoute, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *u <= 0 {
        return Err(Error::domain("ψ′(u) needs u > 0"));
    }
    let p = ctx.prec();
    let u = ctx.real(u);
    match route {
        TrigammaRoute::Bose => {
            let u2 = Float::with_val(p, u.square_ref());
            let q = bose(
                |x| {
                    let d = Float::with_val(p, x.square_ref()) + &u2;
                    Ok(Float::with_val(p, x / d.square()))
                },
                ctx,
            )?;
            let inv = Float::with_val(p, 1) / &u;
            let v = Float::with_val(p, &inv * &inv) / 2u32 + &inv + q.value.clone() * &u * 4u32;
            Ok(FunctionValue::new(v, "bose", Diagnostics::Quadrature(q)))
        }
        TrigammaRoute::Asymptotic => {
            let m = shift_to(&u, asymptotic_floor(ctx));
            Ok(FunctionValue::new(trigamma_asymptotic(&u, ctx)?, "asymptotic", Diagnostics::Asymptotic { terms: m }))
        }
    }
}

/// Route for log Γ(u).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogGammaRoute {
    /// Binet's second formula: Bose integral of 2·tan⁻¹(x/u).
    Binet2,
    /// Binet's first formula: Laplace integral of the Binet kernel.
    Binet1,
    /// Bourguet's Ci/si series with an asymptotic tail.
    Bourguet,
    /// Shifted binomial double sum.
    BinomialSeries,
    /// Stirling series with the recurrence shift.
    Stirling,
}

impl LogGammaRoute {
    pub fn label(self) -> &'static str {
        match self {
            LogGammaRoute::Binet2 => "binet2",
            LogGammaRoute::Binet1 => "binet1",
            LogGammaRoute::Bourguet => "bourguet",
            LogGammaRoute::BinomialSeries => "binomial_series",
            LogGammaRoute::Stirling => "stirling",
        }
    }
}

impl FromStr for LogGammaRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binet2" => Ok(LogGammaRoute::Binet2),
            "binet1" => Ok(LogGammaRoute::Binet1),
            "bourguet" => Ok(LogGammaRoute::Bourguet),
            "binomial" | "binomial_series" => Ok(LogGammaRoute::BinomialSeries),
            "stirling" => Ok(LogGammaRoute::Stirling),
            _ => Err(Error::InvalidMethod(format!("unknown log-gamma route {s:?}"))),
        }
    }
}

/// (u−½)log u − u + ½log 2π.
fn stirling_main(u: &Float, ctx: &PrecisionContext) -> Float {
    let p = ctx.prec();
    let l = Float::with_val(p, u.ln_ref());
    Float::with_val(p, u - 0.5) * l - u + ctx.log_2pi() / 2u32
}

/// log Γ(u) for u > 0.
pub fn log_gamma(u: &Float, route: LogGammaRoute, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *u <= 0 {
        return Err(Error::domain("log Γ(u) needs u > 0"));
    }
    let p = ctx.prec();
    let u = ctx.real(u);
    let label = route.label();
    match route {
        LogGammaRoute::Binet2 => {
            let q = bose(|x| arctan_ratio(x, &u), ctx)?;
            let v = stirling_main(&u, ctx) + Float::with_val(p, &q.value * 2u32);
            Ok(FunctionValue::new(v, label, Diagnostics::Quadrature(q)))
        }
        LogGammaRoute::Binet1 => {
            let h = Integrand1D::removable(
                |t| Ok(kernels::binet_kernel(t)),
                kernels::SERIES_CUTOFF,
                |t| Ok(kernels::binet_kernel_series(t)),
            );
            let q = integrate_laplace(&h, &u, ctx)?;
            let v = stirling_main(&u, ctx) + &q.value;
            Ok(FunctionValue::new(v, label, Diagnostics::Quadrature(q)))
        }
        LogGammaRoute::Bourguet => {
            let y0 = ctx.pi() * &u * 2u32;
            let (s, n) = aux_lattice_sum(Aux::F, &y0, 1, ctx)?;
            let v = stirling_main(&u, ctx) + s / ctx.pi();
            Ok(FunctionValue::new(v, label, Diagnostics::Asymptotic { terms: n }))
        }
        LogGammaRoute::BinomialSeries => {
            let (v, d) = hasse::binomial_log_gamma(&u, ctx)?;
            Ok(FunctionValue::new(v, label, Diagnostics::Series(d)))
        }
        LogGammaRoute::Stirling => {
            let m = shift_to(&u, asymptotic_floor(ctx));
            let z = Float::with_val(p, &u + m);
            let mut v = stirling_main(&z, ctx);
            v += bernoulli_asymptotic(&z, -1, |k| 2 * k * (2 * k - 1), ctx);
            let mut prod = Float::with_val(p, 1);
            for k in 0..m {
                prod *= Float::with_val(p, &u + k);
            }
            v -= prod.ln();
            Ok(FunctionValue::new(v, label, Diagnostics::Asymptotic { terms: m }))
        }
    }
}

/// (1/π)Σ_{n≤N}(1/n)[sin(2nπu)Ci(2nπu) − cos(2nπu)si(2nπu)], the partial Bourguet
/// correction. The bracket equals f(2nπu), so terms are positive and decay like 1/n².
pub fn log_gamma_bourguet_terms(u: &Float, n_terms: u32, ctx: &PrecisionContext) -> Result<Float> {
    if *u <= 0 {
        return Err(Error::domain("Bourguet series needs u > 0"));
    }
    let p = ctx.prec();
    let y0 = ctx.pi() * u * 2u32;
    let mut acc = Float::new(p);
    for n in 1..=n_terms {
        let (f, _) = aux_fg(&Float::with_val(p, &y0 * n), ctx)?;
        acc += f / n;
    }
    Ok(acc / ctx.pi())
}
