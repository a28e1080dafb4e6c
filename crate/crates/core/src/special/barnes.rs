//! log G(1+t) for the Barnes double gamma function.

use std::str::FromStr;

use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{pow10, FloatExt, PrecisionContext};
use crate::series::{constants, oracle};
use crate::special::gamma::{log_gamma, LogGammaRoute};
use crate::special::{bose, Diagnostics, FunctionValue};

/// Explicit factors of the Weierstrass product before the tail.
const PRODUCT_TERMS: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarnesRoute {
    /// ½t²(log t − 3/2) + ½t·log 2π + ζ′(−1) − ∫x·log(t²+x²)/(e^{2πx}−1)dx.
    Integral,
    /// Logarithm of the Weierstrass product with a Hurwitz-zeta tail.
    Weierstrass,
    /// t·log Γ(t) + ζ′(−1) − ζ′(−1,t).
    GosperVardi,
}

impl BarnesRoute {
    pub fn label(self) -> &'static str {
        match self {
            BarnesRoute::Integral => "integral",
            BarnesRoute::Weierstrass => "weierstrass",
            BarnesRoute::GosperVardi => "gosper_vardi",
        }
    }
}

impl FromStr for BarnesRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integral" => Ok(BarnesRoute::Integral),
            "weierstrass" | "product" => Ok(BarnesRoute::Weierstrass),
            "gosper_vardi" => Ok(BarnesRoute::GosperVardi),
            _ => Err(Error::InvalidMethod(format!("unknown Barnes G route {s:?}"))),
        }
    }
}

/// log G(1+t): t ≥ 0 for the integral route, t > 0 for Gosper–Vardi, t > −1 for the product.
pub fn barnes_g_log(t: &Float, route: BarnesRoute, ctx: &PrecisionContext) -> Result<FunctionValue> {
    let p = ctx.prec();
    let t = ctx.real(t);
    let label = route.label();
    match route {
        BarnesRoute::Integral => {
            if t < 0 {
                return Err(Error::domain("integral route for log G(1+t) needs t ≥ 0"));
            }
            let t2 = Float::with_val(p, t.square_ref());
            let q = bose(|x| Ok((Float::with_val(p, x.square_ref()) + &t2).ln() * x), ctx)?;
            let mut v = constants::zeta_deriv(-1, 1, ctx)? - &q.value;
            if !t.is_zero() {
                v += Float::with_val(p, &t2 * (Float::with_val(p, t.ln_ref()) - 1.5)) / 2u32;
                v += Float::with_val(p, &t * ctx.log_2pi()) / 2u32;
            }
            Ok(FunctionValue::new(v, label, Diagnostics::Quadrature(q)))
        }
        BarnesRoute::Weierstrass => {
            if t <= -1 {
                return Err(Error::domain("product route for log G(1+t) needs t > −1"));
            }
            weierstrass(&t, ctx)
        }
        BarnesRoute::GosperVardi => {
            if t <= 0 {
                return Err(Error::domain("Gosper–Vardi route for log G(1+t) needs t > 0"));
            }
            let lg = log_gamma(&t, LogGammaRoute::Stirling, ctx)?.value;
            let zt = oracle::oracle_zeta(&ctx.real(-1), &t, 1, ctx)?;
            let v = Float::with_val(p, &t * lg) + constants::zeta_deriv(-1, 1, ctx)? - zt;
            Ok(FunctionValue::new(v, label, Diagnostics::Oracle))
        }
    }
}

/// log G(1+x) = ½x·log 2π − ½(γx² + x² + x) + Σ_k [k·log(1+x/k) + x²/(2k) − x]. After K
/// factors the remainder is Σ_{m≥3}(−1)^{m+1}xᵐ/m·ζ(m−1, K+1).
fn weierstrass(x: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    let g = ctx.guarded();
    let p = g.prec();
    let x = g.real(x);
    let x2 = Float::with_val(p, x.square_ref());
    let mut acc = Float::with_val(p, &x * g.log_2pi()) / 2u32;
    let euler = Float::with_val(p, Constant::Euler);
    acc -= (Float::with_val(p, &euler * &x2) + &x2 + &x) / 2u32;
    for k in 1..=PRODUCT_TERMS {
        let r = Float::with_val(p, &x / k);
        acc += Float::with_val(p, r.ln_1p_ref()) * k + Float::with_val(p, &x2 / (2 * k)) - &x;
    }
    let a = g.real(PRODUCT_TERMS + 1);
    let eps = pow10(p, -(ctx.working_digits() as i32 + 2));
    let mut converged = false;
    for m in 3..400u32 {
        let z = oracle::em_hurwitz(&g.real(m - 1), &a, 0, &g)?.remove(0);
        let t = x.powi(m) / m * z;
        let small = Float::with_val(p, t.abs_ref()) < eps;
        if m % 2 == 1 {
            acc += t;
        } else {
            acc -= t;
        }
        if small {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::PrecisionExhausted {
            what: "Weierstrass product tail".into(),
            lost: ctx.target_digits(),
            available: 0,
        });
    }
    Ok(FunctionValue::new(ctx.real(acc), "weierstrass", Diagnostics::Asymptotic { terms: PRODUCT_TERMS }))
}
