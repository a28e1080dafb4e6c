//! Precision context, extended-precision scalars and the few elementary complex
//! operations the integrands need.
//!
//! `ExtReal` is an MPFR float, so every arithmetic operation and elementary
//! function is correctly rounded at the precision of its destination. Values carry
//! their own precision; the context decides which precision new values get.

use rug::float::Constant;
use rug::{Assign, Float};

use crate::error::{Error, Result};

/// Extended-precision real scalar.
pub type ExtReal = Float;

/// Exact rational in lowest terms with a positive denominator.
pub type Rational = rug::Rational;

const BITS_PER_DIGIT: f64 = std::f64::consts::LOG2_10;

/// Mantissa bits needed to hold `digits` decimal digits, plus a small pad.
pub fn digits_to_bits(digits: u32) -> u32 {
    (f64::from(digits) * BITS_PER_DIGIT).ceil() as u32 + 8
}

/// Working, target and guard digit counts, threaded through every computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    working_digits: u32,
    target_digits: u32,
    guard_digits: u32,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext { working_digits: 50, target_digits: 30, guard_digits: 20 }
    }
}

impl PrecisionContext {
    pub fn new(working_digits: u32, target_digits: u32, guard_digits: u32) -> Result<Self> {
        if target_digits == 0 {
            return Err(Error::domain("target_digits must be positive"));
        }
        if working_digits < target_digits + guard_digits {
            return Err(Error::domain(format!(
                "working_digits {working_digits} < target {target_digits} + guard {guard_digits}"
            )));
        }
        Ok(PrecisionContext { working_digits, target_digits, guard_digits })
    }

    /// Context certifying `target_digits` with the default 20 guard digits.
    pub fn for_target(target_digits: u32) -> Self {
        let target_digits = target_digits.max(1);
        PrecisionContext { working_digits: target_digits + 20, target_digits, guard_digits: 20 }
    }

    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    /// Mantissa bits at working precision.
    pub fn prec(&self) -> u32 {
        digits_to_bits(self.working_digits)
    }

    /// The same context with `extra` more working digits.
    pub fn widened(&self, extra: u32) -> Self {
        PrecisionContext { working_digits: self.working_digits + extra, ..*self }
    }

    /// Working precision raised by the guard digits, for cancellation-prone sums.
    pub fn guarded(&self) -> Self {
        self.widened(self.guard_digits)
    }

    /// 10^(-target_digits): the accuracy quadratures and series aim for.
    pub fn tolerance(&self) -> Float {
        pow10(self.prec(), -(self.target_digits as i32))
    }

    /// 10^(-(target_digits - 5)): the default identity-catalog tolerance.
    pub fn identity_tolerance(&self) -> Float {
        pow10(self.prec(), -(self.target_digits as i32 - 5))
    }

    pub fn real<T>(&self, v: T) -> Float
    where
        Float: Assign<T>,
    {
        Float::with_val(self.prec(), v)
    }

    /// Parse a decimal literal at working precision.
    pub fn parse(&self, s: &str) -> Result<Float> {
        let p = Float::parse(s.trim()).map_err(|e| Error::domain(format!("cannot parse {s:?}: {e}")))?;
        Ok(Float::with_val(self.prec(), p))
    }

    pub fn rational(&self, r: &Rational) -> Float {
        Float::with_val(self.prec(), r)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.prec(), Constant::Pi)
    }

    pub fn ln2(&self) -> Float {
        Float::with_val(self.prec(), Constant::Log2)
    }

    /// log(2π).
    pub fn log_2pi(&self) -> Float {
        let mut p = self.pi();
        p *= 2;
        p.ln()
    }
}

/// Integer powers on `ExtReal`.
pub trait FloatExt {
    /// xⁿ at the precision of x.
    fn powi(&self, n: u32) -> Float;
}

impl FloatExt for Float {
    fn powi(&self, n: u32) -> Float {
        use rug::ops::Pow;
        Float::with_val(self.prec(), self.pow(n))
    }
}

/// 10^e at `prec` bits.
pub fn pow10(prec: u32, e: i32) -> Float {
    let mut t = Float::with_val(prec, 10);
    t.pow_assign(e);
    t
}

use rug::ops::PowAssign;

/// `x` rounded to `digits` significant digits as a plain decimal string. Uses
/// positional notation for moderate exponents and `d.ddde±k` otherwise.
pub fn fixed(x: &Float, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let (neg, s, exp) = x.to_sign_string_exp(10, Some(digits));
    let exp = exp.unwrap_or(0);
    let sign = if neg { "-" } else { "" };
    let body = if (-8..=30).contains(&exp) {
        if exp <= 0 {
            format!("0.{}{}", "0".repeat((-exp) as usize), s)
        } else {
            let e = exp as usize;
            if s.len() <= e {
                format!("{}{}", s, "0".repeat(e - s.len()))
            } else {
                format!("{}.{}", &s[..e], &s[e..])
            }
        }
    } else {
        format!("{}.{}e{}", &s[..1], &s[1..], exp - 1)
    };
    format!("{sign}{body}")
}

/// Scientific notation with `digits` significant digits.
pub fn sci(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let (neg, s, exp) = x.to_sign_string_exp(10, Some(digits.max(1)));
    let exp = exp.unwrap_or(0);
    let sign = if neg { "-" } else { "" };
    if s.len() > 1 {
        format!("{sign}{}.{}e{}", &s[..1], &s[1..], exp - 1)
    } else {
        format!("{sign}{s}e{}", exp - 1)
    }
}

/// Number of leading decimal digits on which `a` and `b` agree: absolute for values
/// below one in magnitude, relative above. Capped at `cap` for exact agreement.
pub fn agreed_digits(a: &Float, b: &Float, cap: u32) -> u32 {
    let prec = a.prec().max(b.prec());
    let diff = Float::with_val(prec, a - b).abs();
    if diff.is_zero() {
        return cap;
    }
    let scale = Float::with_val(prec, a.abs_ref()).max(&Float::with_val(prec, 1));
    let rel = diff / scale;
    let d = -rel.log10().to_f64();
    if d <= 0.0 {
        0
    } else {
        (d.floor() as u32).min(cap)
    }
}

/// Complex scalar built from two `ExtReal`s.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtComplex {
    pub re: Float,
    pub im: Float,
}

impl ExtComplex {
    pub fn new(re: Float, im: Float) -> Self {
        ExtComplex { re, im }
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        ExtComplex { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExtComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec();
        ExtComplex { re: Float::with_val(p, &self.re + &o.re), im: Float::with_val(p, &self.im + &o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec();
        ExtComplex { re: Float::with_val(p, &self.re - &o.re), im: Float::with_val(p, &self.im - &o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        ExtComplex { re, im }
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        ExtComplex { re: Float::with_val(p, &self.re * k), im: Float::with_val(p, &self.im * k) }
    }

    pub fn div(&self, o: &Self) -> Self {
        let p = self.prec();
        let den = Float::with_val(p, o.re.square_ref()) + Float::with_val(p, o.im.square_ref());
        let re = Float::with_val(p, &self.re * &o.re) + Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.im * &o.re) - Float::with_val(p, &self.re * &o.im);
        ExtComplex { re: re / &den, im: im / den }
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// Principal argument in (−π, π].
    pub fn arg(&self) -> Float {
        let p = self.prec();
        let a = Float::with_val(p, self.im.atan2_ref(&self.re));
        let pi = Float::with_val(p, Constant::Pi);
        if a == Float::with_val(p, -&pi) {
            pi
        } else {
            a
        }
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let m = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        ExtComplex { re: Float::with_val(p, &m * &c), im: m * s }
    }

    /// z^s = exp(s·log z) for real s, principal branch.
    pub fn pow_real(&self, s: &Float) -> Result<Self> {
        Ok(principal_log(self)?.scale(s).exp())
    }

    pub fn powi(&self, n: u32) -> Self {
        let p = self.prec();
        let mut acc = ExtComplex::from_real(Float::with_val(p, 1));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Principal logarithm: Im ∈ (−π, π].
pub fn principal_log(z: &ExtComplex) -> Result<ExtComplex> {
    if z.is_zero() {
        return Err(Error::domain("log of zero"));
    }
    let p = z.prec();
    let re = z.abs().ln();
    Ok(ExtComplex { re: Float::with_val(p, re), im: z.arg() })
}

/// tan⁻¹(x/u) for u > 0, x ≥ 0, in [0, π/2).
pub fn arctan_ratio(x: &Float, u: &Float) -> Result<Float> {
    if *u <= 0 {
        return Err(Error::domain("arctan_ratio needs u > 0"));
    }
    if *x < 0 {
        return Err(Error::domain("arctan_ratio needs x >= 0"));
    }
    let p = x.prec().max(u.prec());
    Ok(Float::with_val(p, x.atan2_ref(u)))
}

/// (principal_log z)ⁿ with log⁰ ≡ 1 for every z, including zero.
pub fn log_power(z: &ExtComplex, n: u32) -> Result<ExtComplex> {
    if n == 0 {
        return Ok(ExtComplex::from_real(Float::with_val(z.prec(), 1)));
    }
    Ok(principal_log(z)?.powi(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(ctx: &PrecisionContext, re: f64, im: f64) -> ExtComplex {
        ExtComplex::new(ctx.real(re), ctx.real(im))
    }

    #[test]
    fn log_of_one_is_zero() {
        let ctx = PrecisionContext::default();
        let l = principal_log(&c(&ctx, 1.0, 0.0)).unwrap();
        assert!(l.re.is_zero() && l.im.is_zero());
    }

    #[test]
    fn log_one_minus_i() {
        let ctx = PrecisionContext::default();
        let l = principal_log(&c(&ctx, 1.0, -1.0)).unwrap();
        let half_ln2 = ctx.ln2() / 2u32;
        let quarter_pi = -(ctx.pi() / 4u32);
        assert!(Float::with_val(ctx.prec(), &l.re - &half_ln2).abs() < ctx.tolerance());
        assert!(Float::with_val(ctx.prec(), &l.im - &quarter_pi).abs() < ctx.tolerance());
    }

    #[test]
    fn negative_real_axis_is_plus_pi() {
        let ctx = PrecisionContext::default();
        let z = ExtComplex::new(ctx.real(-2), -Float::new(ctx.prec()));
        assert_eq!(principal_log(&z).unwrap().im, ctx.pi());
    }

    #[test]
    fn log_zero_is_domain_error() {
        let ctx = PrecisionContext::default();
        assert!(principal_log(&c(&ctx, 0.0, 0.0)).is_err());
        assert!(log_power(&c(&ctx, 0.0, 0.0), 2).is_err());
        assert_eq!(log_power(&c(&ctx, 0.0, 0.0), 0).unwrap().re, 1);
    }

    #[test]
    fn context_invariant_enforced() {
        assert!(PrecisionContext::new(40, 30, 20).is_err());
        assert!(PrecisionContext::new(50, 30, 20).is_ok());
    }

    #[test]
    fn fixed_formatting() {
        let ctx = PrecisionContext::default();
        assert_eq!(fixed(&ctx.real(0.5), 3), "0.500");
        assert_eq!(fixed(&ctx.real(-1234.5), 6), "-1234.50");
        assert_eq!(fixed(&ctx.real(0.00125), 2), "0.0013");
        assert_eq!(fixed(&ctx.real(1e-40), 2), "1.0e-40");
    }
}
