//! Double integrals over the open unit square.

use rayon::prelude::*;
use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{pow10, PrecisionContext};
use crate::quadrature::rules::{tanh_sinh_levels, unit_level, Abscissa};
use crate::quadrature::QuadratureResult;

/// Deepest tensor level; level k has about (2·t_max·2ᵏ)² points.
pub const MAX_SQUARE_LEVEL: u32 = 7;

/// A point of (0,1)² with both complements carried exactly.
#[derive(Debug, Clone)]
pub struct UnitPoint {
    pub x: Float,
    pub y: Float,
    pub one_minus_x: Float,
    pub one_minus_y: Float,
}

impl UnitPoint {
    /// 1 − xy = (1−x) + x(1−y), free of cancellation near (1,1).
    pub fn one_minus_xy(&self) -> Float {
        let p = self.x.prec();
        Float::with_val(p, &self.x * &self.one_minus_y) + &self.one_minus_x
    }

    pub fn ln_x(&self) -> Float {
        ln_from(&self.x, &self.one_minus_x)
    }

    pub fn ln_y(&self) -> Float {
        ln_from(&self.y, &self.one_minus_y)
    }

    /// log(xy), accurate near (1,1).
    pub fn ln_xy(&self) -> Float {
        self.ln_x() + self.ln_y()
    }
}

fn ln_from(v: &Float, complement: &Float) -> Float {
    let p = v.prec();
    if *v < 0.5 {
        Float::with_val(p, v.ln_ref())
    } else {
        Float::with_val(p, -complement).ln_1p()
    }
}

/// Integrand on (0,1)². Only the combined expression needs to be finite.
pub struct Integrand2D<'a> {
    eval: Box<dyn Fn(&UnitPoint) -> Result<Float> + Send + Sync + 'a>,
}

impl<'a> Integrand2D<'a> {
    pub fn new(f: impl Fn(&UnitPoint) -> Result<Float> + Send + Sync + 'a) -> Self {
        Integrand2D { eval: Box::new(f) }
    }

    pub fn eval(&self, p: &UnitPoint) -> Result<Float> {
        (self.eval)(p)
    }
}

type Nodes = Vec<(Float, Float, Float)>;

fn row_sum(f: &Integrand2D, xi: &(Float, Float, Float), ys: &[&Nodes], p: u32) -> Result<Float> {
    let mut acc = Float::new(p);
    for set in ys {
        for (y, cy, wy) in set.iter() {
            let pt = UnitPoint { x: xi.0.clone(), y: y.clone(), one_minus_x: xi.1.clone(), one_minus_y: cy.clone() };
            acc += f.eval(&pt)? * wy;
        }
    }
    Ok(acc * &xi.2)
}

/// ∫₀¹∫₀¹ F by a tensor tanh-sinh rule refined level by level; nodes cluster toward
/// all four edges. Rows are evaluated in parallel.
pub fn integrate_unit_square(f: &Integrand2D, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let p = ctx.prec();
    let digits = ctx.working_digits();
    let tol = pow10(p, -(ctx.target_digits() as i32 + 1));
    let mut levels: Vec<Nodes> = Vec::new();
    let mut raw = Float::new(p);
    let mut prev: Option<Float> = None;
    let mut nodes = 0u64;
    let mut last = Float::with_val(p, f64::INFINITY);
    for k in 0..=MAX_SQUARE_LEVEL {
        let new = unit_level(k, p, digits);
        let old: Vec<&Nodes> = levels.iter().collect();
        let mut all: Vec<&Nodes> = old.clone();
        all.push(&new);
        // New points: new × all, plus old × new.
        let mut rows: Vec<(&(Float, Float, Float), Vec<&Nodes>)> = new.iter().map(|x| (x, all.clone())).collect();
        for set in &old {
            for x in set.iter() {
                rows.push((x, vec![&new]));
            }
        }
        nodes += rows.iter().map(|(_, ys)| ys.iter().map(|s| s.len() as u64).sum::<u64>()).sum::<u64>();
        let parts: Result<Vec<Float>> = rows.par_iter().map(|(x, ys)| row_sum(f, x, ys, p)).collect();
        for part in parts? {
            raw += part;
        }
        levels.push(new);
        let mut h2 = Float::with_val(p, 1);
        h2 >>= 2 * k;
        let est = Float::with_val(p, &raw * &h2);
        if let Some(pv) = &prev {
            let diff = Float::with_val(p, &est - pv).abs();
            let scale = Float::with_val(p, est.abs_ref()).max(&Float::with_val(p, 1));
            if k >= 2 && diff <= Float::with_val(p, &tol * &scale) {
                return Ok(QuadratureResult { value: est, error_estimate: diff, nodes_used: nodes });
            }
            last = diff;
        }
        prev = Some(est);
    }
    Err(Error::no_convergence("unit-square quadrature", &last))
}

/// ∫₀¹[∫₀¹ F dy]dx with an independently refined inner rule for every outer node.
/// Handles integrands whose difficulty moves with x.
pub fn integrate_unit_square_iterated(f: &Integrand2D, ctx: &PrecisionContext) -> Result<QuadratureResult> {
    let p = ctx.prec();
    let digits = ctx.working_digits();
    let tol = pow10(p, -(ctx.target_digits() as i32 + 1));
    let inner_tol = Float::with_val(p, &tol / 10u32);
    let zero = Float::new(p);
    let one = Float::with_val(p, 1);
    let counter = std::sync::atomic::AtomicU64::new(0);
    let outer = |ax: &Abscissa| -> Result<Float> {
        let inner = tanh_sinh_levels(
            |ay: &Abscissa| {
                let pt = UnitPoint {
                    x: ax.x.clone(),
                    y: ay.x.clone(),
                    one_minus_x: ax.to_right.clone(),
                    one_minus_y: ay.to_right.clone(),
                };
                f.eval(&pt)
            },
            &zero,
            &one,
            digits,
            &inner_tol,
            p,
            10,
        )?;
        counter.fetch_add(inner.nodes_used, std::sync::atomic::Ordering::Relaxed);
        Ok(inner.value)
    };
    let mut r = tanh_sinh_levels(outer, &zero, &one, digits, &tol, p, 10)?;
    r.nodes_used = counter.load(std::sync::atomic::Ordering::Relaxed);
    Ok(r)
}
