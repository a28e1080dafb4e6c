use std::sync::{OnceLock, RwLock};

use rug::{Float, Integer};

use crate::precision::Rational;

fn cache() -> &'static RwLock<Vec<Rational>> {
    static CACHE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Rational::from(1)]))
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n, k))
}

/// Exact Bₙ with B₁ = −½. The cache only ever grows, and readers always see a
/// consistent prefix because extension happens under the write lock.
pub fn bernoulli_number(n: u32) -> Rational {
    let n = n as usize;
    {
        let read = cache().read().expect("bernoulli cache poisoned");
        if n < read.len() {
            return read[n].clone();
        }
    }
    let mut write = cache().write().expect("bernoulli cache poisoned");
    while write.len() <= n {
        let m = write.len() as u32;
        // Σ_{k<m} C(m+1,k)·B_k = −(m+1)·B_m
        let mut acc = Rational::new();
        for (k, b) in write.iter().enumerate() {
            acc += Rational::from(binomial(m + 1, k as u32)) * b;
        }
        let bm = -acc / Rational::from(m + 1);
        write.push(bm);
    }
    write[n].clone()
}

/// Bₙ(u) = Σ C(n,k)·B_k·u^{n−k}, evaluated by Horner in u with exact coefficients.
pub fn bernoulli_poly(n: u32, u: &Float) -> Float {
    let p = u.prec();
    let mut acc = Float::new(p);
    for k in 0..=n {
        let c = Rational::from(binomial(n, k)) * bernoulli_number(k);
        acc *= u;
        acc += Float::with_val(p, &c);
    }
    acc
}

/// Exact harmonic number Hₙ.
pub fn harmonic(n: u32) -> Rational {
    let mut h = Rational::new();
    for k in 1..=n {
        h += Rational::from((1, k));
    }
    h
}

/// k! as an exact integer.
pub fn factorial(k: u32) -> Integer {
    Integer::from(Integer::factorial(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number(0), 1);
        assert_eq!(bernoulli_number(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli_number(2), Rational::from((1, 6)));
        assert_eq!(bernoulli_number(3), 0);
        assert_eq!(bernoulli_number(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli_number(12), Rational::from((-691, 2730)));
    }

    #[test]
    fn defining_recurrence_is_exact() {
        for n in 2..=60u32 {
            let mut s = Rational::new();
            for k in 0..n {
                s += Rational::from(binomial(n, k)) * bernoulli_number(k);
            }
            assert_eq!(s, 0, "n = {n}");
        }
        for k in 1..30 {
            assert_eq!(bernoulli_number(2 * k + 1), 0);
        }
    }

    #[test]
    fn polynomials() {
        let half = Float::with_val(100, 0.5);
        assert!(bernoulli_poly(1, &half).is_zero());
        assert!(bernoulli_poly(3, &half).is_zero());
        let one = Float::with_val(100, 1);
        assert_eq!(bernoulli_poly(2, &one), Float::with_val(100, &Rational::from((1, 6))));
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(1), 1);
        assert_eq!(harmonic(4), Rational::from((25, 12)));
    }
}
