//! Double-exponential rules: tanh-sinh on finite intervals and exp-sinh on [a, ∞).
//!
//! Level k uses step h = 2^{−k}; level 0 holds every integer t, later levels only
//! the odd multiples of h, so each level reuses all earlier evaluations. Nodes carry
//! their distances to both endpoints, computed without cancellation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureResult;

/// Default deepest refinement level for one-dimensional rules.
pub const MAX_LEVEL: u32 = 12;

/// A quadrature node as seen by an integrand.
#[derive(Debug, Clone)]
pub struct Abscissa {
    pub x: Float,
    /// x − a, exact even when x rounds to a.
    pub from_left: Float,
    /// b − x; +∞ on semi-infinite intervals.
    pub to_right: Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    TanhSinh,
    ExpSinhNeg,
    ExpSinhPos,
}

/// (t, fraction, weight factor) per node with t ≥ 0 on the given half line.
/// tanh-sinh: fraction = 1/(1+e^{2v}), weight = 2π·cosh t·s(1−s).
/// exp-sinh: fraction = e^{±v}, weight = (π/2)·cosh t·e^{±v}.
type NodeList = Arc<Vec<(f64, Float, Float)>>;

fn node_cache() -> &'static Mutex<HashMap<(Kind, u32, u32, u32), NodeList>> {
    static C: OnceLock<Mutex<HashMap<(Kind, u32, u32, u32), NodeList>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// t beyond which the weights fall below 10^{−2·digits}.
fn t_max(kind: Kind, digits: u32) -> f64 {
    let target = 2.0 * f64::from(digits + 5) * std::f64::consts::LN_10;
    match kind {
        Kind::TanhSinh => (target / std::f64::consts::PI).asinh(),
        Kind::ExpSinhNeg => (2.0 * target / std::f64::consts::PI).asinh(),
        // x = e^{(π/2)sinh t} already exceeds e^{170} here; integrands must decay first.
        Kind::ExpSinhPos => 4.5,
    }
}

fn level_nodes(kind: Kind, level: u32, prec: u32, digits: u32) -> NodeList {
    let key = (kind, level, prec, digits);
    if let Some(v) = node_cache().lock().expect("node cache poisoned").get(&key) {
        return v.clone();
    }
    let tm = t_max(kind, digits);
    let h = 0.5f64.powi(level as i32);
    let pi = Float::with_val(prec, Constant::Pi);
    let mut out = Vec::new();
    let mut j = 0u64;
    loop {
        if level > 0 && j % 2 == 0 {
            j += 1;
            continue;
        }
        let t = j as f64 * h;
        if t > tm {
            break;
        }
        let tf = Float::with_val(prec, t);
        let ch = Float::with_val(prec, tf.cosh_ref());
        let v = Float::with_val(prec, tf.sinh_ref()) * &pi / 2u32;
        let node = match kind {
            Kind::TanhSinh => {
                let e2v = Float::with_val(prec, &v * 2u32).exp();
                let s = Float::with_val(prec, 1) / (e2v + 1u32);
                let one_minus = Float::with_val(prec, 1 - &s);
                let w = Float::with_val(prec, &pi * 2u32) * ch * &s * one_minus;
                (t, s, w)
            }
            Kind::ExpSinhPos | Kind::ExpSinhNeg => {
                let e = if kind == Kind::ExpSinhPos { v.exp() } else { (-v).exp() };
                let w = Float::with_val(prec, &pi / 2u32) * ch * &e;
                (t, e, w)
            }
        };
        out.push(node);
        j += 1;
    }
    let out = Arc::new(out);
    node_cache().lock().expect("node cache poisoned").insert(key, out.clone());
    out
}

/// Accumulates Σ w·f over one half line, cutting off once terms become negligible.
struct HalfLine {
    t_cut: f64,
    small_run: u32,
}

impl HalfLine {
    fn new() -> Self {
        HalfLine { t_cut: f64::INFINITY, small_run: 0 }
    }
}

/// Shared driver: `pair(level)` returns the weighted sum of the new nodes at that
/// level and the number of evaluations; the caller scales by h.
fn refine<F>(tol: &Float, max_level: u32, what: &str, prec: u32, mut level_sum: F) -> Result<QuadratureResult>
where
    F: FnMut(u32) -> Result<(Float, u64)>,
{
    let mut raw = Float::new(prec);
    let mut prev: Option<Float> = None;
    let mut nodes = 0u64;
    let mut last_diff = Float::with_val(prec, f64::INFINITY);
    for level in 0..=max_level {
        let (s, n) = level_sum(level)?;
        raw += s;
        nodes += n;
        let mut h = Float::with_val(prec, 1);
        h >>= level;
        let est = Float::with_val(prec, &raw * &h);
        if let Some(p) = &prev {
            let diff = Float::with_val(prec, &est - p).abs();
            let scale = Float::with_val(prec, est.abs_ref()).max(&Float::with_val(prec, 1));
            if level >= 2 && diff <= Float::with_val(prec, tol * &scale) {
                return Ok(QuadratureResult { value: est, error_estimate: diff, nodes_used: nodes });
            }
            last_diff = diff;
        }
        prev = Some(est);
    }
    Err(Error::no_convergence(what, &last_diff))
}

fn tiny_term(term: &Float, max_term: &mut Float, eps: &Float, side: &mut HalfLine, t: f64, level: u32) -> bool {
    let a = Float::with_val(term.prec(), term.abs_ref());
    if a > *max_term {
        *max_term = a.clone();
    }
    if level == 0 && !max_term.is_zero() {
        if a <= Float::with_val(term.prec(), &*max_term * eps) {
            side.small_run += 1;
            if side.small_run >= 2 {
                side.t_cut = t;
                return true;
            }
        } else {
            side.small_run = 0;
        }
    }
    false
}

/// ∫_a^b f by tanh-sinh. `digits` sizes the node range; `tol` is the accepted
/// level difference (relative above magnitude one).
pub fn tanh_sinh<F>(f: F, a: &Float, b: &Float, digits: u32, tol: &Float, prec: u32) -> Result<QuadratureResult>
where
    F: Fn(&Abscissa) -> Result<Float>,
{
    tanh_sinh_levels(f, a, b, digits, tol, prec, MAX_LEVEL)
}

/// `tanh_sinh` with an explicit deepest level.
pub fn tanh_sinh_levels<F>(
    f: F,
    a: &Float,
    b: &Float,
    digits: u32,
    tol: &Float,
    prec: u32,
    max_level: u32,
) -> Result<QuadratureResult>
where
    F: Fn(&Abscissa) -> Result<Float>,
{
    let len = Float::with_val(prec, b - a);
    if len < 0 {
        return Err(Error::domain("tanh_sinh needs a ≤ b"));
    }
    if len == 0 {
        return Ok(QuadratureResult::zero(prec));
    }
    let half = Float::with_val(prec, &len / 2u32);
    let eps = crate::precision::pow10(prec, -(digits as i32 + 5));
    let mut left = HalfLine::new();
    let mut right = HalfLine::new();
    let mut max_term = Float::new(prec);
    let res = refine(tol, max_level, "tanh-sinh quadrature", prec, |level| {
        let nodes = level_nodes(Kind::TanhSinh, level, prec, digits);
        let mut s = Float::new(prec);
        let mut count = 0u64;
        for (t, frac, w) in nodes.iter() {
            let near = Float::with_val(prec, &len * frac);
            let far = Float::with_val(prec, &len - &near);
            if *t == 0.0 {
                let p = Abscissa { x: Float::with_val(prec, a + &half), from_left: half.clone(), to_right: half.clone() };
                s += f(&p)? * w;
                count += 1;
                continue;
            }
            // t > 0: node near b.
            if *t <= right.t_cut {
                let p = Abscissa { x: Float::with_val(prec, b - &near), from_left: far.clone(), to_right: near.clone() };
                let term = f(&p)? * w;
                count += 1;
                let stop = tiny_term(&term, &mut max_term, &eps, &mut right, *t, level);
                s += term;
                if stop {
                    right.small_run = 0;
                }
            }
            // −t: node near a.
            if *t <= left.t_cut {
                let p = Abscissa { x: Float::with_val(prec, a + &near), from_left: near, to_right: far };
                let term = f(&p)? * w;
                count += 1;
                let stop = tiny_term(&term, &mut max_term, &eps, &mut left, *t, level);
                s += term;
                if stop {
                    left.small_run = 0;
                }
            }
        }
        Ok((s * &half, count))
    })?;
    Ok(res)
}

/// ∫_a^∞ f by exp-sinh with x = a + scale·e^{(π/2)sinh t}. `scale` should match the
/// decay length of f.
pub fn exp_sinh<F>(f: F, a: &Float, scale: &Float, digits: u32, tol: &Float, prec: u32) -> Result<QuadratureResult>
where
    F: Fn(&Abscissa) -> Result<Float>,
{
    if *scale <= 0 {
        return Err(Error::domain("exp_sinh needs a positive scale"));
    }
    let eps = crate::precision::pow10(prec, -(digits as i32 + 5));
    let inf = Float::with_val(prec, f64::INFINITY);
    let mut left = HalfLine::new();
    let mut right = HalfLine::new();
    let mut max_term = Float::new(prec);
    let eval = |e: &Float, w: &Float, side: &mut HalfLine, t: f64, level: u32, max_term: &mut Float| {
        let d = Float::with_val(prec, scale * e);
        let p = Abscissa { x: Float::with_val(prec, a + &d), from_left: d, to_right: inf.clone() };
        let term = f(&p)? * w;
        if tiny_term(&term, max_term, &eps, side, t, level) {
            side.small_run = 0;
        }
        Ok::<Float, Error>(term)
    };
    refine(tol, MAX_LEVEL, "exp-sinh quadrature", prec, |level| {
        let mut s = Float::new(prec);
        let mut count = 0u64;
        let pos = level_nodes(Kind::ExpSinhPos, level, prec, digits);
        for (t, e, w) in pos.iter() {
            if *t > right.t_cut {
                break;
            }
            s += eval(e, w, &mut right, *t, level, &mut max_term)?;
            count += 1;
        }
        let neg = level_nodes(Kind::ExpSinhNeg, level, prec, digits);
        for (t, e, w) in neg.iter() {
            if *t == 0.0 {
                continue;
            }
            if *t > left.t_cut {
                break;
            }
            s += eval(e, w, &mut left, *t, level, &mut max_term)?;
            count += 1;
        }
        Ok((s * scale, count))
    })
}

/// New nodes of one tanh-sinh level on (0,1) as (x, 1−x, w) with h·Σ w·f ≈ ∫₀¹ f.
pub(crate) fn unit_level(level: u32, prec: u32, digits: u32) -> Vec<(Float, Float, Float)> {
    let nodes = level_nodes(Kind::TanhSinh, level, prec, digits);
    let mut out = Vec::with_capacity(2 * nodes.len());
    for (t, frac, w) in nodes.iter() {
        let w = Float::with_val(prec, w / 2u32);
        let other = Float::with_val(prec, 1 - frac);
        if *t == 0.0 {
            out.push((frac.clone(), other, w));
        } else {
            out.push((frac.clone(), other.clone(), w.clone()));
            out.push((other, frac.clone(), w));
        }
    }
    out
}
