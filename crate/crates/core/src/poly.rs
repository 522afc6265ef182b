//! Dense univariate polynomials over the rationals and reduced rational
//! functions. Used as the target representation when closed forms in the
//! genus-0 interface value are reconstructed from truncated series data.

use std::fmt;

use num::{One, Signed, Zero};

use crate::rational::{format_rational, Rational};
use crate::series::Series;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    /// Ascending coefficients; invariant: no trailing zeros (zero poly = empty).
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience: build from small integer coefficients (ascending).
    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&x| crate::rational::rat(x)).collect())
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn pow(&self, exp: usize) -> Poly {
        let mut acc = Poly::constant(Rational::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division: `(quotient, remainder)` with `rhs` nonzero.
    pub fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let d = rhs.degree().unwrap();
        let lead = rhs.coeffs[d].clone();
        let mut rem = self.clone();
        let mut quo = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let factor = &rem.coeffs[rd] / &lead;
            quo[rd - d] = factor.clone();
            rem = rem.sub(&rhs.mul(&Poly::monomial(factor, rd - d)));
        }
        (Poly::from_coeffs(quo), rem)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let lead = a.coeffs[d].clone();
            a = a.scale(&lead.recip());
        }
        a
    }

    /// Evaluate at a truncated series argument (no constant-term restriction).
    pub fn eval_series(&self, x: &Series) -> Series {
        let mut acc = Series::zero(x.order());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Series::constant(c.clone(), x.order());
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| format!("{} z^{}", format_rational(c), n))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A reduced rational function `num/den` in the genus-0 interface value.
/// Canonical form: gcd(num, den) = 1 and the leading coefficient of the
/// denominator has positive sign with the lowest-degree nonzero denominator
/// coefficient normalized only through the gcd (equality checks should use
/// `equivalent`, which cross-multiplies).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.reduce();
        rf
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::constant(Rational::one());
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        // normalize: denominator leading coefficient positive
        let d = self.den.degree().unwrap();
        let lead = self.den.coeffs[d].clone();
        if lead.is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    /// Structural equality up to a common scalar factor.
    pub fn equivalent(&self, other: &RationalFunction) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Evaluate at a series argument whose denominator image is invertible.
    pub fn eval_series(&self, x: &Series) -> crate::error::Result<Series> {
        self.num.eval_series(x).div(&self.den.eval_series(x))
    }
}
