//! Hurwitz zeta, its s-derivatives and the Bose-integral forms at s = 0, −1, −2.

use std::str::FromStr;

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{arctan_ratio, log_power, principal_log, ExtComplex, FloatExt, PrecisionContext};
use crate::series::bernoulli::{bernoulli_poly, binomial, factorial};
use crate::series::oracle;
use crate::special::trig::{aux_lattice_sum, Aux};
use crate::special::{bose, Diagnostics, FunctionValue};

/// Route for ζ(s,u) and its s-derivatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaRoute {
    /// Abel–Plana: Hermite's integral and its s-derivatives.
    AbelPlana,
    /// Euler–Maclaurin oracle.
    Oracle,
}

impl ZetaRoute {
    pub fn label(self) -> &'static str {
        match self {
            ZetaRoute::AbelPlana => "abel_plana",
            ZetaRoute::Oracle => "oracle",
        }
    }
}

impl FromStr for ZetaRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abel_plana" | "hermite" => Ok(ZetaRoute::AbelPlana),
            "oracle" | "euler_maclaurin" => Ok(ZetaRoute::Oracle),
            _ => Err(Error::InvalidMethod(format!("unknown zeta route {s:?}"))),
        }
    }
}

fn check(s: &Float, u: &Float) -> Result<()> {
    if *u <= 0 {
        return Err(Error::domain("ζ(s,u) needs u > 0"));
    }
    if *s == 1 {
        return Err(Error::Pole("ζ(s,u) at s = 1".into()));
    }
    Ok(())
}

/// ζ(s,u) by Hermite's integral.
pub fn hurwitz_zeta(s: &Float, u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    hurwitz_zeta_route(s, u, ZetaRoute::AbelPlana, ctx)
}

pub fn hurwitz_zeta_route(s: &Float, u: &Float, route: ZetaRoute, ctx: &PrecisionContext) -> Result<FunctionValue> {
    hurwitz_zeta_sderiv_route(0, s, u, route, ctx)
}

/// ∂ʳζ(s,u)/∂sʳ by the differentiated Abel–Plana integrand; at s = 0, r = 2 the
/// closed real form is used instead.
pub fn hurwitz_zeta_sderiv(order: u32, s: &Float, u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    hurwitz_zeta_sderiv_route(order, s, u, ZetaRoute::AbelPlana, ctx)
}

pub fn hurwitz_zeta_sderiv_route(
    order: u32,
    s: &Float,
    u: &Float,
    route: ZetaRoute,
    ctx: &PrecisionContext,
) -> Result<FunctionValue> {
    check(s, u)?;
    match route {
        ZetaRoute::Oracle => {
            let v = oracle::oracle_zeta(s, u, order as usize, ctx)?;
            Ok(FunctionValue::new(v, route.label(), Diagnostics::Oracle))
        }
        ZetaRoute::AbelPlana if order == 2 && s.is_zero() => zeta_second_deriv_at_zero(u, ctx),
        ZetaRoute::AbelPlana => abel_plana_deriv(order, s, u, ctx),
    }
}

/// ζ^{(r)}(s,u) = ½u^{−s}(−log u)^r + h^{(r)}(s) + (−1)^{r+1}·2∫Im[(u+ix)^{−s}log^r(u+ix)]/(e^{2πx}−1)dx
/// with h(s) = u^{1−s}/(s−1).
fn abel_plana_deriv(r: u32, s: &Float, u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    let p = ctx.prec();
    let s = ctx.real(s);
    let u = ctx.real(u);
    let neg_s = Float::with_val(p, -&s);
    let q = bose(
        |x| {
            let z = ExtComplex::new(u.clone(), x.clone());
            let l = principal_log(&z)?;
            let w = l.scale(&neg_s).exp().mul(&log_power(&z, r)?);
            Ok(w.im)
        },
        ctx,
    )?;
    let la = Float::with_val(p, u.ln_ref());
    let neg_la = Float::with_val(p, -&la);
    let u_neg_s = Float::with_val(p, &la * &neg_s).exp();
    let mut v = Float::with_val(p, &u_neg_s * neg_la.powi(r)) / 2u32;
    let u1s = Float::with_val(p, &u_neg_s * &u);
    let sm1 = Float::with_val(p, &s - 1u32);
    let mut h = Float::new(p);
    for k in 0..=r {
        let mut t = Float::with_val(p, &binomial(r, k)) * neg_la.powi(r - k) * Float::with_val(p, &factorial(k));
        t /= sm1.powi(k + 1);
        if k % 2 == 1 {
            t = -t;
        }
        h += t;
    }
    v += h * u1s;
    let integral = Float::with_val(p, &q.value * 2u32);
    if r % 2 == 1 {
        v += integral;
    } else {
        v -= integral;
    }
    Ok(FunctionValue::new(v, "abel_plana", Diagnostics::Quadrature(q)))
}

/// ζ″(0,u) = (½−u)log²u + 2u·log u − 2u − 2∫log(u²+x²)tan⁻¹(x/u)/(e^{2πx}−1)dx.
pub fn zeta_second_deriv_at_zero(u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *u <= 0 {
        return Err(Error::domain("ζ″(0,u) needs u > 0"));
    }
    let p = ctx.prec();
    let u = ctx.real(u);
    let u2 = Float::with_val(p, u.square_ref());
    let q = bose(|x| Ok((Float::with_val(p, x.square_ref()) + &u2).ln() * arctan_ratio(x, &u)?), ctx)?;
    let l = Float::with_val(p, u.ln_ref());
    let v = Float::with_val(p, 0.5 - &u) * l.powi(2) + Float::with_val(p, &u * &l) * 2u32 - Float::with_val(p, &u * 2u32)
        - Float::with_val(p, &q.value * 2u32);
    Ok(FunctionValue::new(v, "real_form_s0", Diagnostics::Quadrature(q)))
}

/// ζ′(−1,t) = ½t(t−1)log t − ¼t² + ∫[2t·tan⁻¹(x/t) + x·log(t²+x²)]/(e^{2πx}−1)dx.
pub fn zeta_deriv_neg1_integral(t: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *t <= 0 {
        return Err(Error::domain("ζ′(−1,t) integral form needs t > 0"));
    }
    let p = ctx.prec();
    let t = ctx.real(t);
    let t2 = Float::with_val(p, t.square_ref());
    let two_t = Float::with_val(p, &t * 2u32);
    let q = bose(
        |x| {
            let a = arctan_ratio(x, &t)? * &two_t;
            let b = (Float::with_val(p, x.square_ref()) + &t2).ln() * x;
            Ok(a + b)
        },
        ctx,
    )?;
    let l = Float::with_val(p, t.ln_ref());
    let v = Float::with_val(p, &t * Float::with_val(p, &t - 1u32)) * l / 2u32 - Float::with_val(p, &t2 / 4u32) + &q.value;
    Ok(FunctionValue::new(v, "real_form_s_minus1", Diagnostics::Quadrature(q)))
}

/// ζ′(−2,u) = −½u²log u − (1/9)u³(1 − 3log u) + 2∫[(u²−x²)tan⁻¹(x/u) + ux·log(u²+x²)]/(e^{2πx}−1)dx.
pub fn zeta_deriv_neg2_integral(u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *u <= 0 {
        return Err(Error::domain("ζ′(−2,u) integral form needs u > 0"));
    }
    let p = ctx.prec();
    let u = ctx.real(u);
    let u2 = Float::with_val(p, u.square_ref());
    let q = bose(
        |x| {
            let x2 = Float::with_val(p, x.square_ref());
            let a = Float::with_val(p, &u2 - &x2) * arctan_ratio(x, &u)?;
            let b = Float::with_val(p, &u * x) * (x2 + &u2).ln();
            Ok(a + b)
        },
        ctx,
    )?;
    let l = Float::with_val(p, u.ln_ref());
    let u3 = Float::with_val(p, &u2 * &u);
    let v = -(Float::with_val(p, &u2 * &l) / 2u32) - u3 * (1 - Float::with_val(p, &l * 3u32)) / 9u32
        + Float::with_val(p, &q.value * 2u32);
    Ok(FunctionValue::new(v, "real_form_s_minus2", Diagnostics::Quadrature(q)))
}

/// ζ′(−1,x) = −ζ(−1,x)log x − x²/4 + 1/12 + (1/(2π²))Σ g(2nπx)/n², with
/// ζ(−1,x) = −B₂(x)/2 and g the auxiliary cosine-integral function.
pub fn elizalde_zeta_deriv_neg1(x: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *x <= 0 {
        return Err(Error::domain("Elizalde series needs x > 0"));
    }
    let p = ctx.prec();
    let x = ctx.real(x);
    let pi = ctx.pi();
    let y0 = Float::with_val(p, &pi * &x) * 2u32;
    let (s, n) = aux_lattice_sum(Aux::G, &y0, 2, ctx)?;
    let zeta_m1 = -bernoulli_poly(2, &x) / 2u32;
    let v = -(zeta_m1 * Float::with_val(p, x.ln_ref())) - Float::with_val(p, x.square_ref()) / 4u32
        + Float::with_val(p, 1) / 12u32
        + s / (Float::with_val(p, pi.square_ref()) * 2u32);
    Ok(FunctionValue::new(v, "elizalde", Diagnostics::Asymptotic { terms: n }))
}

/// ∫₀^∞ x^{s−1}/(e^{2πx}−1)dx = ζ(s)Γ(s)/(2π)^s for s > 1.
pub fn polylog_bose(s: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *s <= 1 {
        return Err(Error::domain("polylog_bose needs s > 1"));
    }
    let p = ctx.prec();
    let e = ctx.real(s) - 1u32;
    let q = bose(|x| Ok((Float::with_val(p, x.ln_ref()) * &e).exp()), ctx)?;
    Ok(FunctionValue::new(q.value.clone(), "bose", Diagnostics::Quadrature(q)))
}
