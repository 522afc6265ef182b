//! Series with tracked `w`-monomials and genus weights.
//!
//! Terms have the shape `c * s^n * w^e * k^{-2g}` with integer `e` (negative
//! exponents allowed — they arise from `w^{1-2g}` prefactors). The structure
//! supports exact products, repeated `d/dw`, and evaluation at `w = 1`, which
//! is how the interface-function combinations entering the hierarchy forcings
//! are assembled.

use std::collections::BTreeMap;

use num::Zero;

use crate::graded::GradedExpansion;
use crate::rational::{falling, Rational};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSeries {
    order: usize,
    genus: usize,
    /// (s power, w exponent, genus weight) -> coefficient.
    terms: BTreeMap<(usize, i64, usize), Rational>,
}

impl MonomialSeries {
    pub fn zero(order: usize, genus: usize) -> Self {
        MonomialSeries { order, genus, terms: BTreeMap::new() }
    }

    pub fn one(order: usize, genus: usize) -> Self {
        let mut m = Self::zero(order, genus);
        m.push(0, 0, 0, Rational::from_integer(1.into()));
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, i64, usize), &Rational)> {
        self.terms.iter()
    }

    /// Add `c * s^n * w^e * k^{-2g}`, dropping anything past the truncations.
    pub fn push(&mut self, n: usize, e: i64, g: usize, c: Rational) {
        if n > self.order || g > self.genus || c.is_zero() {
            return;
        }
        let slot = self.terms.entry((n, e, g)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(n, e, g));
        }
    }

    /// Build `w^{base_w} * h(w^{lambda} s)` at genus weight `g`: the `s^n`
    /// coefficient of `h` acquires `w`-exponent `lambda * n + base_w`.
    pub fn from_series(h: &Series, lambda: i64, base_w: i64, g: usize, order: usize, genus: usize) -> Self {
        let mut m = Self::zero(order, genus);
        for n in 0..=h.order().min(order) {
            m.push(n, lambda * n as i64 + base_w, g, h.coeff(n).clone());
        }
        m
    }

    pub fn add(&self, rhs: &MonomialSeries) -> MonomialSeries {
        let order = self.order.min(rhs.order);
        let genus = self.genus.min(rhs.genus);
        let mut out = MonomialSeries::zero(order, genus);
        for (&(n, e, g), c) in self.terms.iter().chain(rhs.terms.iter()) {
            out.push(n, e, g, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MonomialSeries {
        let mut out = MonomialSeries::zero(self.order, self.genus);
        for (&(n, e, g), a) in &self.terms {
            out.push(n, e, g, a * c);
        }
        out
    }

    pub fn mul(&self, rhs: &MonomialSeries) -> MonomialSeries {
        let order = self.order.min(rhs.order);
        let genus = self.genus.min(rhs.genus);
        let mut out = MonomialSeries::zero(order, genus);
        for (&(n1, e1, g1), c1) in &self.terms {
            if n1 > order || g1 > genus {
                continue;
            }
            for (&(n2, e2, g2), c2) in &rhs.terms {
                if n1 + n2 > order || g1 + g2 > genus {
                    continue;
                }
                out.push(n1 + n2, e1 + e2, g1 + g2, c1 * c2);
            }
        }
        out
    }

    /// Nonnegative integer power.
    pub fn pow(&self, exp: usize) -> MonomialSeries {
        let mut acc = MonomialSeries::one(self.order, self.genus);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// `j` applications of `d/dw`: each term picks up the falling factorial
    /// `e (e-1) ... (e-j+1)` and drops its exponent by `j`.
    pub fn w_derivative(&self, j: usize) -> MonomialSeries {
        let mut out = MonomialSeries::zero(self.order, self.genus);
        for (&(n, e, g), c) in &self.terms {
            out.push(n, e - j as i64, g, c * Rational::from_integer(falling(e, j)));
        }
        out
    }

    /// Evaluate at `w = 1`, collecting into a genus-graded expansion.
    pub fn eval_w1(&self) -> GradedExpansion {
        let mut slots = vec![Series::zero(self.order); self.genus + 1];
        for (&(n, _e, g), c) in &self.terms {
            let cur = slots[g].coeff(n) + c;
            slots[g].set_coeff(n, cur);
        }
        GradedExpansion::new(slots)
    }

    /// Genus slot of the `w = 1` evaluation.
    pub fn genus_slot_at_w1(&self, g: usize) -> Series {
        let mut out = Series::zero(self.order);
        for (&(n, _e, gg), c) in &self.terms {
            if gg == g {
                out.set_coeff(n, out.coeff(n) + c);
            }
        }
        out
    }
}
