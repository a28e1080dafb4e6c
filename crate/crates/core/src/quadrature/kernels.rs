//! Kernels shared by the Bose and Laplace integrals, with series evaluation where
//! the direct formula cancels.

use rug::float::Constant;
use rug::Float;

use crate::precision::pow10;
use crate::series::bernoulli::{bernoulli_number, factorial};

/// Below this argument the bracket kernels switch to their Bernoulli series.
pub const SERIES_CUTOFF: f64 = 0.25;

/// 1/(e^{2πx} − 1).
pub fn bose(x: &Float) -> Float {
    let p = x.prec();
    let two_pi_x = Float::with_val(p, Constant::Pi) * x * 2u32;
    Float::with_val(p, 1) / two_pi_x.exp_m1()
}

/// Σ_{k≥1} B_{2k}·t^{2k−1+shift}/(2k)!, summed until terms drop below 2^{−prec}.
fn bernoulli_tail(t: &Float, shift: i32) -> Float {
    let p = t.prec();
    let eps = pow10(p, -((f64::from(p) * std::f64::consts::LOG10_2) as i32 + 2));
    let t2 = Float::with_val(p, t * t);
    let mut pw = if shift == 0 { t.clone() } else { Float::with_val(p, 1) };
    let mut acc = Float::new(p);
    for k in 1..200u32 {
        let c = Float::with_val(p, &bernoulli_number(2 * k)) / Float::with_val(p, &factorial(2 * k));
        let term = c * &pw;
        let small = Float::with_val(p, term.abs_ref()) < eps;
        acc += term;
        if small && k > 1 {
            break;
        }
        pw *= &t2;
    }
    acc
}

/// 1/(e^t − 1) − 1/t + ½, finite at t = 0.
pub fn bose_bracket(t: &Float) -> Float {
    if *t < SERIES_CUTOFF {
        return bernoulli_tail(t, 0);
    }
    let p = t.prec();
    Float::with_val(p, 1) / Float::with_val(p, t.exp_m1_ref()) - Float::with_val(p, 1) / t + Float::with_val(p, 0.5)
}

/// Σ B_{2k}t^{2k−1}/(2k)!, the series of `bose_bracket`; converges for |t| < 2π.
pub fn bose_bracket_series(t: &Float) -> Float {
    bernoulli_tail(t, 0)
}

/// Σ B_{2k}t^{2k−2}/(2k)!, the series of `binet_kernel`.
pub fn binet_kernel_series(t: &Float) -> Float {
    bernoulli_tail(t, -1)
}

/// [1/(e^t − 1) − 1/t + ½]/t, which tends to 1/12 at 0.
pub fn binet_kernel(t: &Float) -> Float {
    if *t < SERIES_CUTOFF {
        return bernoulli_tail(t, -1);
    }
    bose_bracket(t) / t
}

/// 1/(2πx) − ½ + Σ_{k≤K} B_{2k}(2πx)^{2k−1}/(2k)!, the expansion of 1/(e^{2πx}−1)
/// truncated after K terms. Accurate only well inside x < 1.
pub fn bose_laurent(x: &Float, k_max: u32) -> Float {
    let p = x.prec();
    let y = Float::with_val(p, Constant::Pi) * x * 2u32;
    let y2 = Float::with_val(p, &y * &y);
    let mut acc = Float::with_val(p, 1) / &y - Float::with_val(p, 0.5);
    let mut pw = y;
    for k in 1..=k_max {
        let c = Float::with_val(p, &bernoulli_number(2 * k)) / Float::with_val(p, &factorial(2 * k));
        acc += c * &pw;
        pw *= &y2;
    }
    acc
}
