//! Truncated formal power series over the rationals.
//!
//! A `Series` stores exact coefficients `c_0 .. c_N` for a fixed truncation
//! order `N`; every coefficient up to and including `s^N` is exact. Binary
//! operations on operands of different truncation orders propagate the smaller
//! order, so a coefficient is never silently wrong.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, frac, rat, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    /// `coeffs[n]` is the coefficient of `s^n`; length is `order + 1`.
    coeffs: Vec<Rational>,
}

impl Series {
    /// The zero series at truncation order `order`.
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rational::zero(); order + 1] }
    }

    /// Constant series `c` at truncation order `order`.
    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity series `s` (zero constant term) at truncation order `order >= 1`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[1] = Rational::one();
        s
    }

    /// Build from explicit coefficients `c_0 ..`; truncation order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    /// Convenience: build from small integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `s^n`; `n` must be within the truncation order.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: Rational) {
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Restrict to a smaller (or equal) truncation order.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by `s^k`, dropping coefficients past the truncation order.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Termwise derivative `d/ds`; the result is exact to order `N - 1`.
    pub fn derivative(&self) -> Series {
        let n = self.order();
        assert!(n >= 1, "cannot differentiate an order-0 truncation");
        let mut out = Series::zero(n - 1);
        for i in 1..=n {
            out.coeffs[i - 1] = &self.coeffs[i] * rat(i as i64);
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Series> {
        if self.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "series inverse requires a nonzero constant term".into(),
            ));
        }
        let n = self.order();
        let mut inv = Series::zero(n);
        let c0 = self.coeffs[0].recip();
        inv.coeffs[0] = c0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv.coeffs[k - j];
            }
            inv.coeffs[k] = -acc * &c0;
        }
        Ok(inv)
    }

    /// `self / other`; requires `other` to have a nonzero constant term.
    pub fn div(&self, other: &Series) -> Result<Series> {
        Ok(self * &other.inverse()?)
    }

    /// Integer power, including negative exponents (which require an
    /// invertible constant term).
    pub fn pow(&self, exp: i64) -> Result<Series> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Series::constant(Rational::one(), self.order());
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Formal logarithm; requires constant term 1.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition(
                "series log requires constant term 1".into(),
            ));
        }
        // log(1+u) = sum_{m>=1} (-1)^{m+1} u^m / m with u = self - 1.
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = Rational::zero();
        let mut acc = Series::zero(n);
        let mut upow = Series::constant(Rational::one(), n);
        for m in 1..=n {
            upow = &upow * &u;
            let sign = if m % 2 == 1 { 1 } else { -1 };
            acc = &acc + &upow.scale(&frac(sign, m as i64));
        }
        Ok(acc)
    }

    /// Formal exponential; requires constant term 0.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "series exp requires constant term 0".into(),
            ));
        }
        let n = self.order();
        let mut acc = Series::constant(Rational::one(), n);
        let mut term = Series::constant(Rational::one(), n);
        for m in 1..=n {
            term = &(&term * self) * &Series::constant(frac(1, m as i64), n);
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Composition `self(inner)`; requires `inner` to have constant term 0.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "series composition requires an inner series with constant term 0".into(),
            ));
        }
        let n = self.order().min(inner.order());
        let mut acc = Series::constant(self.coeffs[0].clone(), n);
        let inner = inner.truncate(n);
        let mut ipow = Series::constant(Rational::one(), n);
        for m in 1..=n.min(self.order()) {
            ipow = &ipow * &inner;
            acc = &acc + &ipow.scale(&self.coeffs[m]);
        }
        Ok(acc)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = Series::zero(n);
        for i in 0..=n {
            out.coeffs[i] = &self.coeffs[i] + &rhs.coeffs[i];
        }
        out
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = Series::zero(n);
        for i in 0..=n {
            out.coeffs[i] = &self.coeffs[i] - &rhs.coeffs[i];
        }
        out
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = Series::zero(n);
        for i in 0..=n.min(self.order()) {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i).min(rhs.order()) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        out
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| format!("{} s^{}", format_rational(c), n))
            .collect();
        if terms.is_empty() {
            write!(f, "0 + O(s^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(s^{})", terms.join(" + "), self.order() + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schoolbook_square() {
        let a = Series::from_ints(&[1, 12, 288]);
        let sq = &a * &a;
        assert_eq!(sq, Series::from_ints(&[1, 24, 720]));
    }

    #[test]
    fn geometric_inverse() {
        let a = Series::from_ints(&[1, -1, 0, 0]);
        assert_eq!(a.inverse().unwrap(), Series::from_ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn negative_power() {
        let a = Series::from_ints(&[1, 1, 0]);
        assert_eq!(a.pow(-2).unwrap(), Series::from_ints(&[1, -2, 3]));
    }

    #[test]
    fn log_of_linear() {
        let a = Series::from_ints(&[1, -12, 0]);
        assert_eq!(a.log().unwrap(), Series::from_ints(&[0, -12, -72]));
    }

    #[test]
    fn compose_log_with_shift() {
        // log(1+u) with u = s + s^2 at order 2 gives s + s^2/2.
        let log1p = Series::from_coeffs(vec![rat(0), rat(1), frac(-1, 2)]);
        let u = Series::from_ints(&[0, 1, 1]);
        let c = log1p.compose(&u).unwrap();
        assert_eq!(c, Series::from_coeffs(vec![rat(0), rat(1), frac(1, 2)]));
    }

    #[test]
    fn exp_log_round_trip() {
        let a = Series::from_ints(&[1, 3, -5, 7, 11]);
        assert_eq!(a.log().unwrap().exp().unwrap(), a);
    }

    #[test]
    fn mixed_order_propagates_minimum() {
        let a = Series::from_ints(&[1, 2, 3, 4]);
        let b = Series::from_ints(&[1, 1]);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn derivative_drops_one_order() {
        let a = Series::from_ints(&[5, 1, 2, 3]);
        let d = a.derivative();
        assert_eq!(d, Series::from_ints(&[1, 4, 9]));
        assert_eq!(d.order(), 2);
    }

    #[test]
    fn preconditions_are_reported() {
        assert!(Series::from_ints(&[0, 1]).inverse().is_err());
        assert!(Series::from_ints(&[2, 1]).log().is_err());
        assert!(Series::from_ints(&[1, 1]).exp().is_err());
        let outer = Series::from_ints(&[1, 1]);
        assert!(outer.compose(&Series::from_ints(&[1, 1])).is_err());
    }
}
