//! Named functions of the engine, each with at least two independent routes.
//!
//! Bose-kernel integrals inside these routes use the direct quadrature route only;
//! the kernel-expansion cross-check is exercised by the quadrature tests and the
//! identity catalog. Complex integrands are reduced to real ones before quadrature.

mod barnes;
mod gamma;
mod stieltjes;
mod trig;
mod zeta;

use std::fmt;

use rug::Float;

use crate::error::Result;
use crate::precision::{sci, PrecisionContext};
use crate::quadrature::{integrate_bose_direct, Integrand1D, QuadratureResult};
use crate::series::hasse::SumDiagnostics;

pub use barnes::{barnes_g_log, BarnesRoute};
pub use gamma::{
    digamma, digamma_asymptotic, digamma_route, log_gamma, log_gamma_bourguet_terms, norlund_digamma,
    trigamma, trigamma_asymptotic, trigamma_route, DigammaRoute, LogGammaRoute, TrigammaRoute,
};
pub use stieltjes::{stieltjes, stieltjes_default, StieltjesMethod};
pub use trig::{aux_fg, aux_fg_asymptotic, sin_cos_integrals, SinCos};
pub(crate) use trig::{aux_lattice_sum, Aux};
pub use zeta::{
    elizalde_zeta_deriv_neg1, hurwitz_zeta, hurwitz_zeta_route, hurwitz_zeta_sderiv, hurwitz_zeta_sderiv_route,
    polylog_bose, zeta_deriv_neg1_integral, zeta_deriv_neg2_integral, zeta_second_deriv_at_zero, ZetaRoute,
};

/// How a value was obtained.
#[derive(Debug, Clone, PartialEq)]
pub enum Diagnostics {
    Series(SumDiagnostics),
    Quadrature(QuadratureResult),
    /// Euler–Maclaurin oracle value, accepted after N vs 2N agreement.
    Oracle,
    /// Finite sum plus asymptotic tail with `terms` explicit terms.
    Asymptotic { terms: u32 },
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostics::Series(d) => write!(
                f,
                "series: {} terms, max term {}, {} digits cancelled",
                d.terms_used,
                sci(&d.max_term_magnitude, 3),
                d.cancellation_digits_lost
            ),
            Diagnostics::Quadrature(q) => {
                write!(f, "quadrature: {} nodes, level difference {}", q.nodes_used, sci(&q.error_estimate, 3))
            }
            Diagnostics::Oracle => write!(f, "oracle: Euler–Maclaurin, N and 2N agree"),
            Diagnostics::Asymptotic { terms } => write!(f, "asymptotic: {terms} explicit terms plus tail"),
        }
    }
}

/// A computed value, the route that produced it and its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionValue {
    pub value: Float,
    pub route: &'static str,
    pub diagnostics: Diagnostics,
}

impl FunctionValue {
    pub(crate) fn new(value: Float, route: &'static str, diagnostics: Diagnostics) -> Self {
        FunctionValue { value, route, diagnostics }
    }
}

/// ∫₀^∞ g(x)/(e^{2πx}−1)dx by the direct route.
pub(crate) fn bose(g: impl Fn(&Float) -> Result<Float> + Send + Sync, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    integrate_bose_direct(&Integrand1D::new(g), ctx)
}

/// Shift making u + M at least `min`, for recurrences in u.
pub(crate) fn shift_to(u: &Float, min: f64) -> u32 {
    let v = u.to_f64();
    if v >= min {
        0
    } else {
        (min - v).ceil() as u32
    }
}
