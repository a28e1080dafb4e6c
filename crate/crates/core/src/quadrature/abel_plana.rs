//! Abel–Plana summation Σ_{k≥0} f(k) = ½f(0) + ∫₀^∞ f + i∫₀^∞ [f(ix) − f(−ix)]/(e^{2πx}−1)dx.
//!
//! Caller contract, not checkable here: f is analytic for Re z ≥ 0 and
//! e^{−2π|y|}|f(x+iy)| → 0 uniformly as |y| → ∞.

use rug::Float;

use crate::error::Result;
use crate::precision::{ExtComplex, PrecisionContext};
use crate::quadrature::{integrate_bose, integrate_bose_direct, integrate_semi_infinite, Integrand1D};

/// How to obtain ∫₀^∞ f(x)dx.
pub enum PlanaIntegral {
    /// Closed form, possibly by analytic continuation in a parameter.
    Closed(Float),
    /// exp-sinh on Re f along the real axis with the given decay length.
    Numeric { scale: Float },
}

/// Analytic summand for `abel_plana_sum`.
pub struct AbelPlana<'a> {
    pub f: Box<dyn Fn(&ExtComplex) -> Result<ExtComplex> + Send + Sync + 'a>,
    pub integral: PlanaIntegral,
    /// Cross-check the Bose integral by the kernel-expansion route as well.
    pub both_routes: bool,
}

/// Σ_{k≥0} f(k) by the Abel–Plana formula. With f real on the real axis the
/// correction is −2∫Im f(ix)/(e^{2πx}−1); the general form is used here.
pub fn abel_plana_sum(desc: &AbelPlana, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.prec();
    let zero = ExtComplex::from_real(Float::new(p));
    let half_f0 = (desc.f)(&zero)?.re / 2u32;
    let integral = match &desc.integral {
        PlanaIntegral::Closed(v) => Float::with_val(p, v),
        PlanaIntegral::Numeric { scale } => {
            let g = Integrand1D::new(|x: &Float| Ok((desc.f)(&ExtComplex::from_real(x.clone()))?.re));
            integrate_semi_infinite(&g, scale, ctx)?.value
        }
    };
    let corr = Integrand1D::new(|x: &Float| {
        let up = (desc.f)(&ExtComplex::new(Float::new(p), x.clone()))?;
        let down = (desc.f)(&ExtComplex::new(Float::new(p), -x.clone()))?;
        // Re(i·(up − down)) = −Im(up − down)
        Ok(Float::with_val(p, &down.im - &up.im))
    });
    let c = if desc.both_routes { integrate_bose(&corr, ctx)? } else { integrate_bose_direct(&corr, ctx)? };
    Ok(half_f0 + integral + c.value)
}
