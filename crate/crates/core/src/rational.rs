//! Exact rational scalars and small combinatorial helpers.
//!
//! Everything downstream works over arbitrary-precision rationals; no floating
//! point appears anywhere in the engine. Values serialize as `p/q` (or `p` when
//! the denominator is 1) with the denominator always positive.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational (`d != 0`).
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `n!` for nonnegative `n`.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient for nonnegative `n`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(n - j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

/// Generalized binomial `e (e-1) ... (e-m+1) / m!` for any integer `e`
/// (the coefficient of `u^m` in `(1+u)^e`, including negative exponents).
pub fn gen_binomial(e: i64, m: usize) -> Rational {
    Rational::new(falling(e, m), factorial(m))
}

/// Falling factorial `e (e-1) ... (e-j+1)` for any integer `e`.
pub fn falling(e: i64, j: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 0..j as i64 {
        acc *= BigInt::from(e - k);
    }
    acc
}

/// Double factorial of an odd number: `n (n-2) (n-4) ... 1`.
pub fn double_factorial_odd(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n as i64;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}

/// Canonical text form: `p/q` with positive `q`, or just `p` when `q == 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// `base^exp` for a rational base and integer exponent (negative allowed for
/// nonzero base).
pub fn rational_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num::pow::pow(base.clone(), exp as usize)
    } else {
        num::pow::pow(base.recip(), (-exp) as usize)
    }
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}
