//! Genus-graded expansions: a finite list of series, one per genus slot,
//! representing `A = sum_{g=0}^{G} A_g(s) k^{-2g}` truncated at genus `G`.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{frac, Rational};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedExpansion {
    /// `slots[g]` is the series multiplying `k^{-2g}`.
    slots: Vec<Series>,
}

impl GradedExpansion {
    pub fn new(slots: Vec<Series>) -> Self {
        assert!(!slots.is_empty());
        GradedExpansion { slots }
    }

    pub fn zero(genus: usize, order: usize) -> Self {
        GradedExpansion { slots: vec![Series::zero(order); genus + 1] }
    }

    pub fn genus(&self) -> usize {
        self.slots.len() - 1
    }

    pub fn order(&self) -> usize {
        self.slots.iter().map(|s| s.order()).min().unwrap()
    }

    pub fn slot(&self, g: usize) -> &Series {
        &self.slots[g]
    }

    pub fn slots(&self) -> &[Series] {
        &self.slots
    }

    pub fn add(&self, rhs: &GradedExpansion) -> GradedExpansion {
        let gmax = self.genus().min(rhs.genus());
        GradedExpansion {
            slots: (0..=gmax).map(|g| &self.slots[g] + &rhs.slots[g]).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> GradedExpansion {
        GradedExpansion { slots: self.slots.iter().map(|s| s.scale(c)).collect() }
    }

    /// Product with convolution over the genus grading; truncates at the
    /// smaller genus of the two operands.
    pub fn mul(&self, rhs: &GradedExpansion) -> GradedExpansion {
        let gmax = self.genus().min(rhs.genus());
        let order = self.order().min(rhs.order());
        let mut out = GradedExpansion::zero(gmax, order);
        for a in 0..=gmax {
            if self.slots[a].is_zero() {
                continue;
            }
            for b in 0..=(gmax - a) {
                let prod = &self.slots[a] * &rhs.slots[b];
                out.slots[a + b] = &out.slots[a + b] + &prod;
            }
        }
        out
    }

    /// Graded logarithm. Requires the genus-0 slot to have constant term 1
    /// (so the whole expansion is log-able in the graded sense).
    pub fn log(&self) -> Result<GradedExpansion> {
        if !self.slots[0].coeff(0).is_one() {
            return Err(Error::Precondition(
                "graded log requires genus-0 constant term 1".into(),
            ));
        }
        let gmax = self.genus();
        let order = self.order();
        // Split A = A_0 (1 + u) with u carrying only genus >= 1 slots.
        let inv0 = self.slots[0].inverse()?;
        let mut u = GradedExpansion::zero(gmax, order);
        for g in 1..=gmax {
            u.slots[g] = &self.slots[g] * &inv0;
        }
        let mut acc = GradedExpansion::zero(gmax, order);
        acc.slots[0] = self.slots[0].log()?;
        // u has no genus-0 part, so powers beyond gmax vanish in the grading.
        let mut upow = u.clone();
        for m in 1..=gmax {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&upow.scale(&frac(sign, m as i64)));
            if m < gmax {
                upow = upow.mul(&u);
            }
        }
        Ok(acc)
    }

    /// Graded exponential. Requires the genus-0 slot to have constant term 0.
    pub fn exp(&self) -> Result<GradedExpansion> {
        if !self.slots[0].coeff(0).is_zero() {
            return Err(Error::Precondition(
                "graded exp requires genus-0 constant term 0".into(),
            ));
        }
        let gmax = self.genus();
        let order = self.order();
        let e0 = self.slots[0].exp()?;
        // exp(A) = exp(A_0) * exp(u), u = genus >= 1 part; the second factor
        // is a finite sum in the grading.
        let mut u = self.clone();
        u.slots[0] = Series::zero(order);
        let mut tail = GradedExpansion::zero(gmax, order);
        tail.slots[0] = Series::constant(Rational::one(), order);
        let mut term = tail.clone();
        for m in 1..=gmax {
            term = term.mul(&u).scale(&frac(1, m as i64));
            tail = tail.add(&term);
        }
        for g in 0..=gmax {
            tail.slots[g] = &tail.slots[g] * &e0;
        }
        Ok(tail)
    }
}
