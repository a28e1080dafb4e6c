//! γₙ(u) by four routes.

use std::fmt;
use std::str::FromStr;

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{log_power, ExtComplex, FloatExt, PrecisionContext};
use crate::series::{altzeta, hasse, oracle};
use crate::special::{bose, Diagnostics, FunctionValue};

/// Route for γₙ(u).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StieltjesMethod {
    /// Bose integral of Re[i·logⁿ(u−ix)/(u−ix)].
    CoffeyIntegral,
    /// Shifted Hasse binomial double sum.
    HasseSum,
    /// Euler–Maclaurin evaluation of the limit definition (the oracle).
    LimitEulerMaclaurin,
    /// Alternating-zeta log moments and triangular inversion; u = 1 only.
    AltZetaRecursion,
}

impl StieltjesMethod {
    pub const ALL: [StieltjesMethod; 4] = [
        StieltjesMethod::CoffeyIntegral,
        StieltjesMethod::HasseSum,
        StieltjesMethod::LimitEulerMaclaurin,
        StieltjesMethod::AltZetaRecursion,
    ];

    pub fn label(self) -> &'static str {
        match self {
            StieltjesMethod::CoffeyIntegral => "coffey",
            StieltjesMethod::HasseSum => "hasse",
            StieltjesMethod::LimitEulerMaclaurin => "limit",
            StieltjesMethod::AltZetaRecursion => "altzeta",
        }
    }
}

impl fmt::Display for StieltjesMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for StieltjesMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coffey" | "coffey_integral" => Ok(StieltjesMethod::CoffeyIntegral),
            "hasse" | "hasse_sum" => Ok(StieltjesMethod::HasseSum),
            "limit" | "oracle" | "limit_euler_maclaurin" => Ok(StieltjesMethod::LimitEulerMaclaurin),
            "altzeta" | "alt_zeta_recursion" => Ok(StieltjesMethod::AltZetaRecursion),
            _ => Err(Error::InvalidMethod(format!("unknown Stieltjes method {s:?}"))),
        }
    }
}

/// γₙ(u) by the requested route.
pub fn stieltjes(n: u32, u: &Float, method: StieltjesMethod, ctx: &PrecisionContext) -> Result<FunctionValue> {
    if *u <= 0 {
        return Err(Error::domain("γₙ(u) needs u > 0"));
    }
    let route = method.label();
    match method {
        StieltjesMethod::CoffeyIntegral => coffey(n, u, ctx),
        StieltjesMethod::HasseSum => {
            let (v, d) = hasse::hasse_stieltjes(n, u, ctx)?;
            Ok(FunctionValue::new(v, route, Diagnostics::Series(d)))
        }
        StieltjesMethod::LimitEulerMaclaurin => {
            let v = oracle::limit_stieltjes_oracle(n, u, ctx)?;
            Ok(FunctionValue::new(v, route, Diagnostics::Oracle))
        }
        StieltjesMethod::AltZetaRecursion => {
            if *u != 1 {
                return Err(Error::InvalidMethod("alt-zeta recursion is valid only at u = 1".into()));
            }
            let wide = ctx.widened(5);
            let mut moments = Vec::with_capacity(n as usize + 2);
            let mut worst: Option<hasse::SumDiagnostics> = None;
            for k in 0..=n + 1 {
                let (m, d) = hasse::alt_zeta_log_moment(k, &wide)?;
                moments.push(m);
                if worst.as_ref().map_or(true, |w| d.cancellation_digits_lost > w.cancellation_digits_lost) {
                    worst = Some(d);
                }
            }
            let g = altzeta::stieltjes_from_moments(n, &moments, &wide);
            let v = ctx.real(&g[n as usize]);
            Ok(FunctionValue::new(v, route, Diagnostics::Series(worst.expect("at least one moment"))))
        }
    }
}

/// γₙ(u) with the cheapest route: the Hasse sum.
pub fn stieltjes_default(n: u32, u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    stieltjes(n, u, StieltjesMethod::HasseSum, ctx)
}

/// γₙ(u) = logⁿu/(2u) − log^{n+1}u/(n+1) − 2∫Re[i·logⁿ(u−ix)/(u−ix)]/(e^{2πx}−1)dx,
/// using i(u+ix)/(u²+x²) = i/(u−ix).
fn coffey(n: u32, u: &Float, ctx: &PrecisionContext) -> Result<FunctionValue> {
    let p = ctx.prec();
    let u = ctx.real(u);
    let q = bose(
        |x| {
            let z = ExtComplex::new(u.clone(), -x.clone());
            let w = log_power(&z, n)?.div(&z);
            // Re(i·w) = −Im w
            Ok(-w.im)
        },
        ctx,
    )?;
    let l = Float::with_val(p, u.ln_ref());
    let v = l.powi(n) / Float::with_val(p, &u * 2u32) - l.powi(n + 1) / (n + 1) - Float::with_val(p, &q.value * 2u32);
    Ok(FunctionValue::new(v, "coffey", Diagnostics::Quadrature(q)))
}
