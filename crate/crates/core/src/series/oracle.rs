//! Euler–Maclaurin evaluation of Hurwitz-zeta derivatives and of the limit definition
//! of γₙ(u). This is the reference ORACLE: every derived ground-truth value in the
//! test suites and in the identity catalog comes from here.
//!
//! Policy: at least 10⁴ explicit terms and Bernoulli corrections through at least B₆;
//! more corrections are taken while the first omitted correction exceeds the
//! tolerance and the corrections still decrease, otherwise N doubles. A value is
//! accepted only when the runs at N and 2N agree to the tolerance.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::precision::{pow10, FloatExt, PrecisionContext};
use crate::series::bernoulli::{bernoulli_number, binomial, factorial};

/// Minimum explicit terms for oracle runs.
pub const ORACLE_MIN_TERMS: u64 = 10_000;
const MIN_CORRECTIONS: u32 = 3;
const MAX_CORRECTIONS: u32 = 60;
const MAX_TERMS: u64 = 1 << 24;

fn cache() -> &'static Mutex<HashMap<String, Vec<Float>>> {
    static C: OnceLock<Mutex<HashMap<String, Vec<Float>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn key(kind: &str, parts: &[&Float], extra: u32, ctx: &PrecisionContext) -> String {
    let mut k = format!("{kind}|{extra}|{}|{}", ctx.working_digits(), ctx.target_digits());
    for p in parts {
        k.push('|');
        k.push_str(&p.to_string_radix(16, None));
    }
    k
}

/// B_{2j}/(2j)! at precision `p`.
fn bernoulli_weight(j: u32, p: u32) -> Float {
    let b = bernoulli_number(2 * j) / crate::precision::Rational::from(factorial(2 * j));
    Float::with_val(p, &b)
}

/// Truncated power series in ε (jets) for s = s₀ + ε.
fn jet_mul(a: &[Float], b: &[Float], p: u32) -> Vec<Float> {
    let n = a.len();
    let mut out = vec![Float::new(p); n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += Float::with_val(p, &a[i] * &b[j]);
        }
    }
    out
}

/// Jet of a^{−s−q}: coefficients e^{−(s₀+q)·L}·(−L)^m/m!.
fn power_jet(log_a: &Float, s0: &Float, q: u32, order: usize, p: u32) -> Vec<Float> {
    let base = (Float::with_val(p, s0 + q) * log_a).neg_exp();
    let mut out = Vec::with_capacity(order + 1);
    let mut c = base;
    for m in 0..=order {
        out.push(c.clone());
        c = c * log_a / (m as u32 + 1);
        c = -c;
    }
    out
}

trait NegExp {
    fn neg_exp(self) -> Float;
}

impl NegExp for Float {
    fn neg_exp(self) -> Float {
        (-self).exp()
    }
}

/// j-th Euler–Maclaurin correction for ζ^{(m)}(s, ·) at a, for m = 0..=order:
/// B_{2j}/(2j)!·∂ₛᵐ[(s)_{2j−1}·a^{−s−2j+1}].
fn zeta_correction(j: u32, s0: &Float, log_a: &Float, order: usize, p: u32) -> Vec<Float> {
    let q = 2 * j - 1;
    let mut poch = vec![Float::new(p); order + 1];
    poch[0] = Float::with_val(p, 1);
    for i in 0..q {
        let mut lin = vec![Float::new(p); order + 1];
        lin[0] = Float::with_val(p, s0 + i);
        if order >= 1 {
            lin[1] = Float::with_val(p, 1);
        }
        poch = jet_mul(&poch, &lin, p);
    }
    let pj = power_jet(log_a, s0, q, order, p);
    let prod = jet_mul(&poch, &pj, p);
    let w = bernoulli_weight(j, p);
    prod.into_iter()
        .enumerate()
        .map(|(m, c)| c * &w * Float::with_val(p, &factorial(m as u32)))
        .collect()
}

fn max_abs(v: &[Float]) -> Float {
    let mut m = Float::new(v[0].prec());
    for x in v {
        let a = Float::with_val(x.prec(), x.abs_ref());
        if a > m {
            m = a;
        }
    }
    m
}

/// Choose (N, J) so the first omitted correction is below `tol`, with N ≥ `min_n`.
fn plan<F>(min_n: u64, tol: &Float, mut correction: F) -> Result<(u64, u32)>
where
    F: FnMut(u64, u32) -> Float,
{
    let mut n = min_n.max(1);
    loop {
        let mut prev: Option<Float> = None;
        for j in 1..=MAX_CORRECTIONS {
            let c = correction(n, j + 1);
            if j >= MIN_CORRECTIONS && c < *tol {
                return Ok((n, j));
            }
            if let Some(pv) = &prev {
                if j >= MIN_CORRECTIONS && c > *pv {
                    break;
                }
            }
            prev = Some(c);
        }
        n *= 2;
        if n > MAX_TERMS {
            return Err(Error::no_convergence("Euler–Maclaurin planning", &correction(n / 2, MIN_CORRECTIONS + 1)));
        }
    }
}

/// ζ^{(m)}(s,u) for m = 0..=order from N explicit terms and J corrections.
fn em_zeta_run(s0: &Float, u: &Float, order: usize, n: u64, j_max: u32, p: u32) -> Vec<Float> {
    let mut acc = vec![Float::new(p); order + 1];
    let neg_s = Float::with_val(p, -s0);
    for k in 0..n {
        let x = Float::with_val(p, u + k);
        let l = x.ln();
        let mut t = Float::with_val(p, &l * &neg_s).exp();
        for item in acc.iter_mut() {
            *item += &t;
            t *= &l;
            t = -t;
        }
    }
    let a = Float::with_val(p, u + n);
    let la = Float::with_val(p, a.ln_ref());
    // ∫_a^∞ x^{−s}: h(s) = a^{1−s}/(s−1), differentiated by Leibniz.
    let sm1 = Float::with_val(p, s0 - 1);
    let a1s = Float::with_val(p, Float::with_val(p, 1 - s0) * &la).exp();
    for (m, item) in acc.iter_mut().enumerate() {
        let mut h = Float::new(p);
        for k in 0..=m {
            let c = Float::with_val(p, &binomial(m as u32, k as u32));
            let mut term = c * Float::with_val(p, -&la).powi((m - k) as u32);
            term *= Float::with_val(p, &factorial(k as u32));
            term /= Float::with_val(p, &sm1).powi(k as u32 + 1);
            if k % 2 == 1 {
                term = -term;
            }
            h += term;
        }
        *item += h * &a1s;
    }
    let half = power_jet(&la, s0, 0, order, p);
    for (m, item) in acc.iter_mut().enumerate() {
        *item += Float::with_val(p, &half[m] * &factorial(m as u32)) / 2;
    }
    for j in 1..=j_max {
        let c = zeta_correction(j, s0, &la, order, p);
        for (item, cj) in acc.iter_mut().zip(c) {
            *item += cj;
        }
    }
    acc
}


fn em_zeta_planned(
    s: &Float,
    u: &Float,
    order: usize,
    min_n: u64,
    tol: &Float,
    p: u32,
) -> Result<(u64, u32, Vec<Float>)> {
    if *u <= 0 {
        return Err(Error::domain("Hurwitz zeta needs u > 0"));
    }
    if *s == 1 {
        return Err(Error::Pole("ζ(s,u) at s = 1".into()));
    }
    let s0 = Float::with_val(p, s);
    let u = Float::with_val(p, u);
    let (n, j) = plan(min_n, tol, |n, j| {
        let a = Float::with_val(p, &u + n);
        max_abs(&zeta_correction(j, &s0, &a.ln(), order, p))
    })?;
    Ok((n, j, em_zeta_run(&s0, &u, order, n, j, p)))
}

/// Fast Euler–Maclaurin evaluation of ζ^{(m)}(s,u), m = 0..=order, without the oracle's
/// N-doubling check. Used for tails and auxiliary sums inside other routes.
pub fn em_hurwitz(s: &Float, u: &Float, order: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    let g = ctx.guarded();
    let p = g.prec();
    let tol = pow10(p, -(ctx.working_digits() as i32));
    let min_n = u64::from(ctx.working_digits() / 2 + 10);
    let (_, _, v) = em_zeta_planned(s, u, order, min_n, &tol, p)?;
    Ok(v.into_iter().map(|x| Float::with_val(ctx.prec(), x)).collect())
}

/// Oracle tolerance: five digits beyond the target.
fn oracle_tol(ctx: &PrecisionContext, p: u32) -> Float {
    pow10(p, -(ctx.target_digits() as i32 + 5))
}

fn agree_or_double<F>(what: &str, tol: &Float, mut run: F) -> Result<Vec<Float>>
where
    F: FnMut(u64) -> Result<(u64, Vec<Float>)>,
{
    let (mut n, mut v) = run(ORACLE_MIN_TERMS)?;
    loop {
        let (n2, v2) = run(2 * n)?;
        let gap = v.iter().zip(&v2).map(|(a, b)| Float::with_val(a.prec(), a - b).abs()).fold(
            Float::new(v[0].prec()),
            |m, d| if d > m { d } else { m },
        );
        if gap <= *tol {
            return Ok(v2);
        }
        if n2 > MAX_TERMS {
            return Err(Error::no_convergence(what, &gap));
        }
        n = n2;
        v = v2;
    }
}

/// Oracle values ζ^{(m)}(s,u) for m = 0..=order.
pub fn oracle_zeta_derivs(s: &Float, u: &Float, order: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    let k = key("zeta", &[s, u], order as u32, ctx);
    if let Some(v) = cache().lock().expect("oracle cache poisoned").get(&k) {
        return Ok(v.clone());
    }
    let p = ctx.guarded().prec();
    let tol = oracle_tol(ctx, p);
    let v = agree_or_double("Euler–Maclaurin zeta oracle", &tol, |min_n| {
        let (n, _, v) = em_zeta_planned(s, u, order, min_n, &tol, p)?;
        Ok((n, v))
    })?;
    let v: Vec<Float> = v.into_iter().map(|x| Float::with_val(ctx.prec(), x)).collect();
    cache().lock().expect("oracle cache poisoned").insert(k, v.clone());
    Ok(v)
}

/// Oracle value of ζ^{(order)}(s,u).
pub fn oracle_zeta(s: &Float, u: &Float, order: usize, ctx: &PrecisionContext) -> Result<Float> {
    Ok(oracle_zeta_derivs(s, u, order, ctx)?.pop().expect("nonempty"))
}

/// Coefficients (in L = log x) of x^{1+m}·dᵐ/dxᵐ[Lⁿ/x].
fn stieltjes_deriv_poly(n: u32, m: u32) -> Vec<Integer> {
    let mut poly = vec![Integer::new(); n as usize + 1];
    poly[n as usize] = Integer::from(1);
    for step in 0..m {
        let mut next = vec![Integer::new(); n as usize + 1];
        for k in 0..=n as usize {
            next[k] -= Integer::from(&poly[k] * (step + 1));
            if k + 1 <= n as usize {
                next[k] += Integer::from(&poly[k + 1] * (k as u32 + 1));
            }
        }
        poly = next;
    }
    poly
}

fn eval_poly(poly: &[Integer], l: &Float, p: u32) -> Float {
    let mut acc = Float::new(p);
    for c in poly.iter().rev() {
        acc *= l;
        acc += Float::with_val(p, c);
    }
    acc
}

/// j-th correction for γₙ(u): B_{2j}/(2j)!·f^{(2j−1)}(a), f = Lⁿ/x.
fn stieltjes_correction(n: u32, j: u32, a: &Float, la: &Float, p: u32) -> Float {
    let q = 2 * j - 1;
    let poly = stieltjes_deriv_poly(n, q);
    let val = eval_poly(&poly, la, p) / Float::with_val(p, a.powi(q + 1));
    val * bernoulli_weight(j, p)
}


/// γ₀(u)..γ_{n_max}(u) from N explicit terms and J corrections.
fn stieltjes_run(n_max: u32, u: &Float, n: u64, j_max: &[u32], p: u32) -> Vec<Float> {
    let mut acc = vec![Float::new(p); n_max as usize + 1];
    for k in 0..n {
        let x = Float::with_val(p, u + k);
        let l = Float::with_val(p, x.ln_ref());
        let mut t = Float::with_val(p, 1) / x;
        for item in acc.iter_mut() {
            *item += &t;
            t *= &l;
        }
    }
    let a = Float::with_val(p, u + n);
    let la = Float::with_val(p, a.ln_ref());
    for (idx, item) in acc.iter_mut().enumerate() {
        let nn = idx as u32;
        *item -= la.powi(nn + 1) / (nn + 1);
        *item += la.powi(nn) / Float::with_val(p, &a) / 2;
        for j in 1..=j_max[idx] {
            *item -= stieltjes_correction(nn, j, &a, &la, p);
        }
    }
    acc
}

/// Oracle values γ₀(u)..γ_{n_max}(u) from the limit definition.
pub fn limit_stieltjes_oracle_all(n_max: u32, u: &Float, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    if *u <= 0 {
        return Err(Error::domain("γₙ(u) needs u > 0"));
    }
    let k = key("gamma", &[u], n_max, ctx);
    if let Some(v) = cache().lock().expect("oracle cache poisoned").get(&k) {
        return Ok(v.clone());
    }
    let p = ctx.guarded().prec();
    let tol = oracle_tol(ctx, p);
    let uu = Float::with_val(p, u);
    let v = agree_or_double("Euler–Maclaurin Stieltjes oracle", &tol, |min_n| {
        let mut n_used = min_n;
        let mut js = Vec::new();
        for nn in 0..=n_max {
            let (nk, jk) = plan(n_used, &tol, |n, j| {
                let a = Float::with_val(p, &uu + n);
                let la = Float::with_val(p, a.ln_ref());
                stieltjes_correction(nn, j, &a, &la, p).abs()
            })?;
            n_used = n_used.max(nk);
            js.push(jk);
        }
        // A larger N only shrinks every correction, so the per-n J remain valid.
        Ok((n_used, stieltjes_run(n_max, &uu, n_used, &js, p)))
    })?;
    let v: Vec<Float> = v.into_iter().map(|x| Float::with_val(ctx.prec(), x)).collect();
    cache().lock().expect("oracle cache poisoned").insert(k, v.clone());
    Ok(v)
}

/// Oracle value of γₙ(u).
pub fn limit_stieltjes_oracle(n: u32, u: &Float, ctx: &PrecisionContext) -> Result<Float> {
    Ok(limit_stieltjes_oracle_all(n, u, ctx)?.pop().expect("nonempty"))
}
