//! The continuum Toda hierarchy for the even-valence one-matrix model:
//! the genus-0 interface value `z_0` (higher Catalan generating function),
//! higher-genus corrections `z_g` solved from a linear first-order ODE whose
//! forcing is assembled by two independent routes (a direct lattice-walk
//! expansion and a partition-indexed combinatorial formula), closed-form
//! reconstruction of `z_g` as a rational function of `z_0`, and the two-time
//! generalization of the `z_0` constraint.

use num::bigint::BigInt;
use num::{One, Zero};

use itertools::Itertools;

use crate::equilibrium::c_nu;
use crate::error::{Error, Result};
use crate::monomial::MonomialSeries;
use crate::poly::{Poly, RationalFunction};
use crate::rational::{factorial, frac, gen_binomial, rat, Rational};
use crate::series::Series;

/// A lattice walk of length `2ν` from `+1` to `−1`, encoded by the positions
/// of its `ν+1` downturns among steps `1..=2ν`; `ell[m]` is the lattice height
/// after the `m`-th downturn (1-based: `ℓ_m = j_m − 2m + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub downturns: Vec<usize>,
    pub ell: Vec<i64>,
}

/// All `binom(2ν, ν+1)` walks in lexicographic order of downturn positions.
pub fn enumerate_walks(nu: usize) -> Vec<Walk> {
    (1..=2 * nu)
        .combinations(nu + 1)
        .map(|downturns| {
            let ell = downturns
                .iter()
                .enumerate()
                .map(|(idx, &j)| j as i64 - 2 * (idx as i64 + 1) + 1)
                .collect();
            Walk { downturns, ell }
        })
        .collect()
}

/// `z_0(s)`: the branch of `1 = z_0 − c_ν s z_0^ν` with `z_0(0) = 1`, by
/// fixed-point iteration (one exact order per sweep).
pub fn z0_series(nu: usize, order: usize) -> Series {
    let c = Rational::from_integer(c_nu(nu));
    let one = Series::constant(Rational::one(), order);
    let mut z = one.clone();
    for _ in 0..=order {
        z = &one + &z.pow(nu as i64).unwrap().shift(1).scale(&c);
    }
    z
}

/// A partition of `2g+1` indexing a forcing term; parts stored descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionV {
    pub parts: Vec<usize>,
}

impl PartitionV {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        assert!(parts.iter().all(|&p| p > 0));
        PartitionV { parts }
    }

    pub fn rho(&self) -> usize {
        self.parts.len()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Multiplicity of part size `j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Distinct part sizes, descending.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s = self.parts.clone();
        s.dedup();
        s
    }
}

/// All partitions of `m`, parts descending, in no particular order guarantee
/// beyond determinism.
pub fn partitions(m: usize) -> Vec<PartitionV> {
    fn rec(remaining: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<PartitionV>) {
        if remaining == 0 {
            out.push(PartitionV { parts: acc.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            acc.push(p);
            rec(remaining - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// The combinatorial coefficient `d_V^{(ν,g)}` multiplying
/// `f^{ν−ρ+1} Π_j f_{w^{(j)}}^{r_j}` in the forcing functional `F_g^{(ν)}`.
///
/// Computed from the walk pre-image sum
/// `Σ_{σ∈Sym(ρ)} Σ_{i_1<…<i_ρ} Σ_{m_1<…<m_ρ} [Π(i_j−2m_j+2)^{|V_{σ(j)}|} −
/// Π(i_j−2m_j+1)^{|V_{σ(j)}|}] · binom(i_1−1, m_1−1) binom(i_2−i_1−1,
/// m_2−m_1−1) ⋯ binom(2ν−i_ρ, ν+1−m_ρ)`, then normalized by
/// `Π_j r_j! (j!)^{r_j}`. With this normalization the coefficient already
/// carries the overall `c_ν` factor, matching the printed `F_g` displays
/// directly (e.g. `d_{{3}} = c_ν ν/6`).
pub fn d_v_coefficient(nu: usize, v: &PartitionV) -> Rational {
    let rho = v.rho();
    if rho > nu + 1 {
        return Rational::zero();
    }
    // summing over distinct arrangements of the parts multiset is the
    // permutation sum with the r_j! normalization already divided out
    let arrangements: Vec<Vec<usize>> = v
        .parts
        .iter()
        .copied()
        .permutations(rho)
        .unique()
        .collect();
    let two_nu = 2 * nu;
    let mut raw = BigInt::zero();
    for i_pos in (1..=two_nu).combinations(rho) {
        for m_pos in (1..=nu + 1).combinations(rho) {
            // binomial chain over the gaps between chosen downturns
            let mut weight = crate::rational::binomial(
                i_pos[0] as i64 - 1,
                m_pos[0] as i64 - 1,
            );
            if weight.is_zero() {
                continue;
            }
            for t in 1..rho {
                weight *= crate::rational::binomial(
                    i_pos[t] as i64 - i_pos[t - 1] as i64 - 1,
                    m_pos[t] as i64 - m_pos[t - 1] as i64 - 1,
                );
                if weight.is_zero() {
                    break;
                }
            }
            if weight.is_zero() {
                continue;
            }
            weight *= crate::rational::binomial(
                (two_nu - i_pos[rho - 1]) as i64,
                (nu + 1 - m_pos[rho - 1]) as i64,
            );
            if weight.is_zero() {
                continue;
            }
            let mut bracket = BigInt::zero();
            for arr in &arrangements {
                let mut up = BigInt::one();
                let mut down = BigInt::one();
                for j in 0..rho {
                    let e = i_pos[j] as i64 - 2 * m_pos[j] as i64;
                    let pow = arr[j] as u32;
                    up *= BigInt::from(e + 2).pow(pow);
                    down *= BigInt::from(e + 1).pow(pow);
                }
                bracket += up - down;
            }
            raw += weight * bracket;
        }
    }
    let mut norm = BigInt::one();
    for j in v.sizes() {
        let r = v.multiplicity(j);
        norm *= factorial(j).pow(r as u32);
    }
    Rational::new(raw, norm)
}

/// Solved hierarchy data: `z[g]` for `g = 0..=genus`, all at s-order `order`.
#[derive(Clone, Debug)]
pub struct HierarchyState {
    pub nu: usize,
    pub order: usize,
    pub genus: usize,
    pub z: Vec<Series>,
}

/// Which of the two independent forcing constructions to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForcingRoute {
    WalkSum,
    DV,
}

impl HierarchyState {
    /// Solve `z_0..z_G` at s-order `order` (forcing via the partition route;
    /// the walk route is available through `forcing_series` for cross-checks).
    pub fn solve(nu: usize, order: usize, genus: usize) -> Result<Self> {
        let mut state = HierarchyState { nu, order, genus, z: vec![z0_series(nu, order)] };
        for g in 1..=genus {
            let forcing = forcing_dv(nu, &state.z, g, order);
            let zg = solve_zg_ode(nu, &state.z, g, &forcing)?;
            state.z.push(zg);
        }
        Ok(state)
    }

    /// The combined interface function `f = Σ_{h≤cap} w^{1−2h} z_h(w^{ν−1}s)`
    /// as a monomial series with genus truncation `genus_cap`.
    pub fn f_monomial(z: &[Series], nu: usize, order: usize, genus_cap: usize) -> MonomialSeries {
        let mut f = MonomialSeries::zero(order, genus_cap);
        for (h, zh) in z.iter().enumerate() {
            if h > genus_cap {
                break;
            }
            f = f.add(&MonomialSeries::from_series(
                zh,
                nu as i64 - 1,
                1 - 2 * h as i64,
                h,
                order,
                genus_cap,
            ));
        }
        f
    }
}

/// One factor of the walk product: `f(s, 1+ℓ/k)` expanded in powers of `1/k`
/// (index of the outer Vec), each slot a series in `s`.
fn walk_factor(z: &[Series], nu: usize, ell: i64, shift: i64, kmax: usize, order: usize) -> Vec<Series> {
    let l = BigInt::from(ell + shift);
    let mut slots = vec![Series::zero(order); kmax + 1];
    for (g, zg) in z.iter().enumerate() {
        if 2 * g > kmax {
            break;
        }
        for n in 0..=order.min(zg.order()) {
            let c = zg.coeff(n);
            if c.is_zero() {
                continue;
            }
            let e = (nu as i64 - 1) * n as i64 + 1 - 2 * g as i64;
            let mut lpow = BigInt::one();
            for p in 0..=(kmax - 2 * g) {
                let term = c * gen_binomial(e, p) * Rational::from_integer(lpow.clone());
                let slot = &mut slots[2 * g + p];
                slot.set_coeff(n, slot.coeff(n) + term);
                lpow *= &l;
            }
        }
    }
    slots
}

fn kexp_mul(a: &[Series], b: &[Series], kmax: usize, order: usize) -> Vec<Series> {
    let mut out = vec![Series::zero(order); kmax + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > kmax {
                break;
            }
            let prod = ai * bj;
            out[i + j] = &out[i + j] + &prod;
        }
    }
    out
}

/// The full right-hand side of the hierarchy equation at genus `g_target`:
/// the `k^{−2g}` slot of `k · Σ_walks [Π_m f(s, 1+(ℓ_m+1)/k) − Π_m f(s,
/// 1+ℓ_m/k)]`. At `g_target = 0` this is `z_0'(s)`.
pub fn walk_sum_rhs(z: &[Series], nu: usize, g_target: usize, order: usize) -> Series {
    let kmax = 2 * g_target + 1;
    let mut total = Series::zero(order);
    for walk in enumerate_walks(nu) {
        for shift in [1i64, 0] {
            let mut prod = vec![Series::zero(order); kmax + 1];
            prod[0] = Series::constant(Rational::one(), order);
            for &ell in &walk.ell {
                let factor = walk_factor(z, nu, ell, shift, kmax, order);
                prod = kexp_mul(&prod, &factor, kmax, order);
            }
            // the overall k prefactor sends slot 2g+1 to k^{-2g}
            if shift == 1 {
                total = &total + &prod[kmax];
            } else {
                total = &total - &prod[kmax];
            }
        }
    }
    total
}

/// The forcing functional `F_ℓ^{(ν)} = Σ_{V ⊢ 2ℓ+1} d_V f^{ν−ρ+1}
/// Π_j f_{w^{(j)}}^{r_j}` as a monomial series (genus slots still expanded).
pub fn forcing_functional(nu: usize, f: &MonomialSeries, ell: usize) -> MonomialSeries {
    let order = f.order();
    let genus = f.genus();
    let mut derivs: Vec<MonomialSeries> = Vec::with_capacity(2 * ell + 2);
    derivs.push(f.clone());
    for j in 1..=2 * ell + 1 {
        derivs.push(derivs[j - 1].w_derivative(1));
    }
    let mut total = MonomialSeries::zero(order, genus);
    for v in partitions(2 * ell + 1) {
        let rho = v.rho();
        if rho > nu + 1 {
            continue;
        }
        let d = d_v_coefficient(nu, &v);
        if d.is_zero() {
            continue;
        }
        let mut term = f.pow(nu + 1 - rho);
        for &p in &v.parts {
            term = term.mul(&derivs[p]);
        }
        total = total.add(&term.scale(&d));
    }
    total
}

/// `Forcing_g` via the partition route:
/// `(c_ν/(ν+1)) ∂_w [f^{ν+1}]_{genus g} + Σ_{ℓ=1}^{g} [F_ℓ^{(ν)}]_{genus g−ℓ}`,
/// everything at `w = 1`, with `f` built from the already-solved `z_0..z_{g−1}`.
pub fn forcing_dv(nu: usize, z_below: &[Series], g: usize, order: usize) -> Series {
    let f = HierarchyState::f_monomial(&z_below[..g.min(z_below.len())], nu, order, g);
    let c = Rational::from_integer(c_nu(nu));
    let lead = f
        .pow(nu + 1)
        .w_derivative(1)
        .genus_slot_at_w1(g)
        .scale(&(c / rat(nu as i64 + 1)));
    let mut total = lead;
    for ell in 1..=g {
        let fl = forcing_functional(nu, &f, ell);
        total = &total + &fl.genus_slot_at_w1(g - ell);
    }
    total
}

/// `Forcing_g` via the walk route: the full genus-`g` right-hand side with
/// `z_g` set to zero, which removes exactly the terms linear in `z_g`.
pub fn forcing_walk(nu: usize, z_below: &[Series], g: usize, order: usize) -> Series {
    let mut z_ext: Vec<Series> = z_below[..g.min(z_below.len())].to_vec();
    z_ext.push(Series::zero(order));
    walk_sum_rhs(&z_ext, nu, g, order)
}

/// Forcing with an explicit route choice; see `forcing_dv`/`forcing_walk`.
pub fn forcing_series(nu: usize, z_below: &[Series], g: usize, order: usize, route: ForcingRoute) -> Series {
    match route {
        ForcingRoute::DV => forcing_dv(nu, z_below, g, order),
        ForcingRoute::WalkSum => forcing_walk(nu, z_below, g, order),
    }
}

/// Solve the linear ODE
/// `(1 − c_ν(ν−1)s z_0^ν) z_g' = c_ν((ν+1−2g)z_0^ν + ν(ν−1)s z_0^{ν−1} z_0') z_g + Forcing_g`
/// coefficient-by-coefficient with `z_g(0) = 0`.
pub fn solve_zg_ode(nu: usize, z_below: &[Series], g: usize, forcing: &Series) -> Result<Series> {
    let z0 = &z_below[0];
    let order = z0.order();
    let c = Rational::from_integer(c_nu(nu));
    let n_i = nu as i64;
    let z0nu = z0.pow(n_i)?;
    let a = &Series::constant(Rational::one(), order)
        - &z0nu.shift(1).scale(&(&c * rat(n_i - 1)));
    let z0p = z0.derivative();
    let b_part1 = z0nu.scale(&(&c * rat(n_i + 1 - 2 * g as i64)));
    let b_part2 = (&z0.pow(n_i - 1)?.truncate(order - 1) * &z0p)
        .shift(1)
        .scale(&(&c * rat(n_i * (n_i - 1))));
    let b = &b_part1.truncate(order - 1) + &b_part2;

    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in 0..order {
        let mut rhs = forcing.coeff(n).clone();
        for k in 0..=n {
            rhs += b.coeff(k) * &coeffs[n - k];
        }
        for k in 1..=n {
            // known part of the LHS convolution A * z_g'
            rhs -= a.coeff(k) * rat((n + 1 - k) as i64) * &coeffs[n + 1 - k];
        }
        coeffs[n + 1] = rhs / rat(n as i64 + 1);
    }
    Ok(Series::from_coeffs(coeffs))
}

/// Fit `z_g = P(z_0) / (ν−(ν−1)z_0)^{5g−1}` with `deg P ≤ 5g−1+ν` from the
/// series data and verify every remaining series coefficient.
pub fn reconstruct_zg(state: &HierarchyState, g: usize) -> Result<RationalFunction> {
    assert!(g >= 1 && g <= state.genus);
    let exp = 5 * g - 1;
    let degree = exp + state.nu;
    if state.order < degree + 2 {
        return Err(Error::Reconstruction(format!(
            "series order {} too small for ansatz degree {} (need margin)",
            state.order, degree
        )));
    }
    let den = denominator_poly(state.nu, exp);
    fit_polynomial_numerator(&state.z[0], &state.z[g], &den, degree).map(|num| RationalFunction::new(num, den))
}

/// `(ν − (ν−1) z)^exp` as a polynomial.
pub fn denominator_poly(nu: usize, exp: usize) -> Poly {
    Poly::from_coeffs(vec![rat(nu as i64), rat(-(nu as i64 - 1))]).pow(exp)
}

/// Solve `target = P(z_0)/den(z_0)` for polynomial `P` of degree ≤ `degree`,
/// using every available series coefficient as an equation.
pub fn fit_polynomial_numerator(z0: &Series, target: &Series, den: &Poly, degree: usize) -> Result<Poly> {
    let order = z0.order().min(target.order());
    let rhs_series = target * &den.eval_series(z0);
    let mut powers: Vec<Series> = Vec::with_capacity(degree + 1);
    powers.push(Series::constant(Rational::one(), order));
    for j in 1..=degree {
        powers.push(&powers[j - 1] * z0);
    }
    let rows: Vec<Vec<Rational>> = (0..=order)
        .map(|n| (0..=degree).map(|j| powers[j].coeff(n).clone()).collect())
        .collect();
    let rhs: Vec<Rational> = (0..=order).map(|n| rhs_series.coeff(n).clone()).collect();
    match crate::linalg::solve(&rows, &rhs) {
        Some(coeffs) => Ok(Poly::from_coeffs(coeffs)),
        None => Err(Error::Reconstruction(
            "no polynomial numerator fits the series within the degree bound".into(),
        )),
    }
}

/// The printed closed form for `z_1`:
/// `(ν−1)ν(z_0−1)z_0(−ν² + (ν²+ν−2)z_0)/(12(ν−(ν−1)z_0)⁴)`.
pub fn z1_closed_form(nu: usize) -> RationalFunction {
    let n = nu as i64;
    let num = Poly::from_ints(&[0, 1])
        .mul(&Poly::from_ints(&[-1, 1]))
        .mul(&Poly::from_coeffs(vec![rat(-n * n), rat(n * n + n - 2)]))
        .scale(&frac((n - 1) * n, 12));
    RationalFunction::new(num, denominator_poly(nu, 4))
}

/// Bivariate truncated series in `(s_1, s_2)`, rectangular truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bivariate {
    /// `coeffs[i][j]` is the coefficient of `s_1^i s_2^j`.
    pub coeffs: Vec<Vec<Rational>>,
}

impl Bivariate {
    pub fn zero(order: usize) -> Self {
        Bivariate { coeffs: vec![vec![Rational::zero(); order + 1]; order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[i][j]
    }

    fn constant(c: Rational, order: usize) -> Self {
        let mut b = Self::zero(order);
        b.coeffs[0][0] = c;
        b
    }

    fn add(&self, rhs: &Bivariate) -> Bivariate {
        let order = self.order();
        let mut out = Bivariate::zero(order);
        for i in 0..=order {
            for j in 0..=order {
                out.coeffs[i][j] = &self.coeffs[i][j] + &rhs.coeffs[i][j];
            }
        }
        out
    }

    fn mul(&self, rhs: &Bivariate) -> Bivariate {
        let order = self.order();
        let mut out = Bivariate::zero(order);
        for i1 in 0..=order {
            for j1 in 0..=order {
                if self.coeffs[i1][j1].is_zero() {
                    continue;
                }
                for i2 in 0..=(order - i1) {
                    for j2 in 0..=(order - j1) {
                        if rhs.coeffs[i2][j2].is_zero() {
                            continue;
                        }
                        let prod = &self.coeffs[i1][j1] * &rhs.coeffs[i2][j2];
                        out.coeffs[i1 + i2][j1 + j2] += prod;
                    }
                }
            }
        }
        out
    }

    fn pow(&self, exp: usize) -> Bivariate {
        let mut acc = Bivariate::constant(Rational::one(), self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    fn shift(&self, var: usize) -> Bivariate {
        let order = self.order();
        let mut out = Bivariate::zero(order);
        for i in 0..=order {
            for j in 0..=order {
                let (ti, tj) = if var == 0 { (i + 1, j) } else { (i, j + 1) };
                if ti <= order && tj <= order {
                    out.coeffs[ti][tj] = self.coeffs[i][j].clone();
                }
            }
        }
        out
    }

    fn scale(&self, c: &Rational) -> Bivariate {
        let order = self.order();
        let mut out = Bivariate::zero(order);
        for i in 0..=order {
            for j in 0..=order {
                out.coeffs[i][j] = &self.coeffs[i][j] * c;
            }
        }
        out
    }

    /// Restriction to `s_2 = 0` (or `s_1 = 0` for `var = 1`).
    pub fn slice(&self, var: usize) -> Series {
        let order = self.order();
        Series::from_coeffs(
            (0..=order)
                .map(|i| if var == 0 { self.coeffs[i][0].clone() } else { self.coeffs[0][i].clone() })
                .collect(),
        )
    }

    pub fn swap_vars(&self) -> Bivariate {
        let order = self.order();
        let mut out = Bivariate::zero(order);
        for i in 0..=order {
            for j in 0..=order {
                out.coeffs[j][i] = self.coeffs[i][j].clone();
            }
        }
        out
    }
}

/// The two-time interface constraint `1 = z_0 − c_{ν1}s_1 z_0^{ν1} −
/// c_{ν2}s_2 z_0^{ν2}`, solved by bivariate fixed-point iteration for the
/// branch with `z_0(0,0) = 1`.
pub fn two_time_z0(nu1: usize, nu2: usize, order: usize) -> Bivariate {
    let c1 = Rational::from_integer(c_nu(nu1));
    let c2 = Rational::from_integer(c_nu(nu2));
    let one = Bivariate::constant(Rational::one(), order);
    let mut z = one.clone();
    for _ in 0..=2 * order {
        z = one
            .add(&z.pow(nu1).shift(0).scale(&c1))
            .add(&z.pow(nu2).shift(1).scale(&c2));
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::big;

    #[test]
    fn z0_values() {
        assert_eq!(z0_series(2, 3), Series::from_ints(&[1, 12, 288, 8640]));
        assert_eq!(z0_series(3, 2).coeff(2), &rat(10800));
        assert_eq!(z0_series(4, 0), Series::from_ints(&[1]));
    }

    #[test]
    fn z0_constraint_residual() {
        for nu in 2..=5 {
            let z = z0_series(nu, 8);
            let c = Rational::from_integer(c_nu(nu));
            let res = &(&z - &z.pow(nu as i64).unwrap().shift(1).scale(&c))
                - &Series::constant(Rational::one(), 8);
            assert!(res.is_zero(), "nu={nu}");
        }
    }

    #[test]
    fn walks() {
        let w = enumerate_walks(2);
        assert_eq!(w.len(), 4);
        assert_eq!(w[0].downturns, vec![1, 2, 3]);
        assert_eq!(w[0].ell, vec![0, -1, -2]);
        assert_eq!(enumerate_walks(3).len(), 15);
    }

    #[test]
    fn walk_sum_recovers_z0_derivative() {
        for nu in 2..=3 {
            let z0 = z0_series(nu, 6);
            let rhs = walk_sum_rhs(&[z0.clone()], nu, 0, 6);
            let d = z0.derivative();
            assert_eq!(rhs.truncate(5), d, "nu={nu}");
        }
    }

    #[test]
    fn d_v_printed_g1_pattern() {
        // F_1 = c_ν[(ν/6) f^ν f_www + (ν(ν−1)/3) f^{ν−1} f_w f_ww
        //        + (ν(ν−1)(ν−2)/12) f^{ν−2} f_w³]
        for nu in 2..=5usize {
            let n = nu as i64;
            let c = Rational::from_integer(c_nu(nu));
            assert_eq!(
                d_v_coefficient(nu, &PartitionV::new(vec![3])),
                &c * frac(n, 6),
                "nu={nu} V={{3}}"
            );
            assert_eq!(
                d_v_coefficient(nu, &PartitionV::new(vec![2, 1])),
                &c * frac(n * (n - 1), 3),
                "nu={nu} V={{2,1}}"
            );
            assert_eq!(
                d_v_coefficient(nu, &PartitionV::new(vec![1, 1, 1])),
                &c * frac(n * (n - 1) * (n - 2), 12),
                "nu={nu} V={{1,1,1}}"
            );
        }
    }

    #[test]
    fn d_v_spec_values() {
        assert_eq!(d_v_coefficient(2, &PartitionV::new(vec![3])), rat(4));
        assert_eq!(d_v_coefficient(2, &PartitionV::new(vec![1, 1, 1])), rat(0));
        // too many parts for the downturn slots
        assert_eq!(
            d_v_coefficient(2, &PartitionV::new(vec![1, 1, 1, 1, 1])),
            rat(0)
        );
    }

    #[test]
    fn forcing_routes_agree_g1() {
        for nu in 2..=3 {
            let z0 = z0_series(nu, 8);
            let a = forcing_dv(nu, &[z0.clone()], 1, 8);
            let b = forcing_walk(nu, &[z0], 1, 8);
            assert_eq!(a, b, "nu={nu}");
        }
    }

    #[test]
    fn z1_series_nu2() {
        let state = HierarchyState::solve(2, 4, 1).unwrap();
        let z1 = &state.z[1];
        assert_eq!(z1.coeff(0), &rat(0));
        assert_eq!(z1.coeff(1), &rat(0));
        assert_eq!(z1.coeff(2), &rat(96));
        assert_eq!(z1.coeff(3), &rat(10368));
    }

    #[test]
    fn z1_reconstruction_matches_closed_form() {
        for nu in 2..=4 {
            let state = HierarchyState::solve(nu, 14, 1).unwrap();
            let rf = reconstruct_zg(&state, 1).unwrap();
            assert!(rf.equivalent(&z1_closed_form(nu)), "nu={nu}");
        }
    }

    #[test]
    fn reconstruction_round_trip_g1() {
        let state = HierarchyState::solve(3, 12, 1).unwrap();
        let rf = reconstruct_zg(&state, 1).unwrap();
        let back = rf.eval_series(&state.z[0]).unwrap();
        assert_eq!(back, state.z[1]);
    }

    #[test]
    fn two_time_values() {
        let b = two_time_z0(2, 3, 3);
        assert_eq!(b.coeff(0, 0), &rat(1));
        assert_eq!(b.coeff(1, 1), &rat(3600));
        assert_eq!(b.slice(0), z0_series(2, 3));
        assert_eq!(b.slice(1), z0_series(3, 3));
        assert_eq!(two_time_z0(3, 2, 3), b.swap_vars());
    }

    #[test]
    fn partitions_of_five() {
        let ps = partitions(5);
        assert_eq!(ps.len(), 7);
        assert!(ps.iter().all(|p| p.sum() == 5));
    }

    #[test]
    fn kappa0_matches_hierarchy_two_leg_structure() {
        // n!·[s^n] z_0 are the two-leg planar counts: 12, 288·2, ...
        let z0 = z0_series(2, 2);
        assert_eq!(z0.coeff(1) * rat(1), rat(12));
        assert_eq!(z0.coeff(2) * rat(2), rat(576));
        let _ = big(0);
    }
}
