//! Quadrature for the three integral families in scope: Bose-kernel integrals
//! ∫₀^∞ g(x)/(e^{2πx}−1)dx, Laplace integrals ∫₀^∞ e^{−ut}h(t)dt, unit-square double
//! integrals, plus an Abel–Plana summator built on them.
//!
//! Every `error_estimate` is the difference between the last two refinement
//! levels. It is not a rigorous bound.

mod abel_plana;
mod bose;
pub mod kernels;
pub mod rules;
mod square;

use rug::Float;

use crate::error::Result;

pub use abel_plana::{abel_plana_sum, AbelPlana, PlanaIntegral};
pub use bose::{integrate_bose, integrate_bose_direct, integrate_bose_kernel, integrate_laplace, integrate_semi_infinite};
pub use rules::Abscissa;
pub use square::{integrate_unit_square, integrate_unit_square_iterated, Integrand2D, UnitPoint};

/// Quadrature value with its a posteriori error estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: Float,
    pub error_estimate: Float,
    pub nodes_used: u64,
}

impl QuadratureResult {
    pub(crate) fn zero(prec: u32) -> Self {
        QuadratureResult { value: Float::new(prec), error_estimate: Float::new(prec), nodes_used: 0 }
    }
}

/// Behaviour of a one-dimensional integrand at the ends of (0, ∞).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Singularity {
    RegularAt0,
    /// Finite limit at 0 reached through cancellation; a series evaluator is required.
    RemovableAt0,
    LogGrowthAtInfinity,
}

type RealFn<'a> = Box<dyn Fn(&Float) -> Result<Float> + Send + Sync + 'a>;

/// Real integrand on (0, ∞), optionally with a series evaluator used below a cutoff.
pub struct Integrand1D<'a> {
    eval: RealFn<'a>,
    note: Singularity,
    near_zero: Option<(f64, RealFn<'a>)>,
}

impl<'a> Integrand1D<'a> {
    pub fn new(f: impl Fn(&Float) -> Result<Float> + Send + Sync + 'a) -> Self {
        Integrand1D { eval: Box::new(f), note: Singularity::RegularAt0, near_zero: None }
    }

    /// Integrand whose direct formula cancels near 0; `series` is used for x < `cutoff`.
    pub fn removable(
        f: impl Fn(&Float) -> Result<Float> + Send + Sync + 'a,
        cutoff: f64,
        series: impl Fn(&Float) -> Result<Float> + Send + Sync + 'a,
    ) -> Self {
        Integrand1D { eval: Box::new(f), note: Singularity::RemovableAt0, near_zero: Some((cutoff, Box::new(series))) }
    }

    /// Marks logarithmic growth at infinity; evaluation is unchanged.
    pub fn with_log_growth(mut self) -> Self {
        if self.note == Singularity::RegularAt0 {
            self.note = Singularity::LogGrowthAtInfinity;
        }
        self
    }

    pub fn singularity(&self) -> Singularity {
        self.note
    }

    pub fn eval(&self, x: &Float) -> Result<Float> {
        if let Some((cut, series)) = &self.near_zero {
            if *x < *cut {
                return series(x);
            }
        }
        (self.eval)(x)
    }
}
