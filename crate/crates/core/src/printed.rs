//! Reference closed forms and coefficient families, frozen as data.
//!
//! These are the published displays the engine's own computations are compared
//! against: the closed forms of `z_2`, `z_3` and the rational part of `e_2`,
//! the forcing-coefficient families `F_2^{(ν)}[0]` and `F_3^{(ν)}[0]`, and the
//! loop-integral Taylor-coefficient formulas `ζ_j^{(1)}`, `ζ_j^{(2)}`. One of
//! the reference displays carries a typo in a single numerator coefficient
//! (see `printed_z2`); comparisons against it are expected to isolate exactly
//! that discrepancy, which is itself a useful cross-check.

use num::One;

use crate::equilibrium::c_nu;
use crate::poly::{Poly, RationalFunction};
use crate::rational::{binomial, frac, rat, rational_pow, Rational};
use crate::series::Series;
use crate::toda::{denominator_poly, PartitionV};

/// `Σ c_i ν^i` evaluated exactly.
fn nu_poly(nu: i64, c: &[i64]) -> Rational {
    let mut acc = Rational::from_integer(0.into());
    let mut p = Rational::one();
    let base = rat(nu);
    for &ci in c {
        acc += rat(ci) * &p;
        p *= &base;
    }
    acc
}

/// The published closed form of `z_2`:
/// `(1/1440)(ν−1)ν(z_0−1)z_0 [c_0 + c_1 z_0 + … + c_4 z_0^4] (ν−(ν−1)z_0)^{−9}`.
///
/// The `z_0^2` bracket coefficient is printed as `… + 25551ν^4 + …`, which
/// disagrees with the recomputed closed form in exactly that slot (the
/// surrounding loop-coefficient display `ζ_j^{(2)}` is consistent with the
/// recomputation, not with this bracket).
pub fn printed_z2(nu: usize) -> RationalFunction {
    let n = nu as i64;
    let brackets = [
        nu_poly(n, &[0, 0, 0, 0, 0, 0, 2, -14, 24]),
        nu_poly(n, &[0, 0, 0, -12, 148, -546, 758, -252, -96]),
        nu_poly(n, &[0, 0, 264, -1510, 25551, -500, -1789, 840, 144]),
        nu_poly(n, &[0, -536, 1396, 912, -4596, 2492, 1296, -868, -96]),
        nu_poly(n, &[168, 234, -1467, 558, 1902, -1446, -267, 294, 24]),
    ];
    let bracket = Poly::from_coeffs(brackets.to_vec());
    let num = Poly::from_ints(&[0, -1, 1])
        .mul(&bracket)
        .scale(&frac((n - 1) * n, 1440));
    RationalFunction::new(num, denominator_poly(nu, 9))
}

/// The published closed form of `z_3`:
/// `(ν(ν−1)/362880) z_0(z_0−1)(ν−(ν−1)z_0)^{−14} Σ_{i=0}^{7} A_i (z_0−1)^i`.
pub fn printed_z3(nu: usize) -> RationalFunction {
    let n = nu as i64;
    let d = |k: i64| rat(n - k);
    let a: [Rational; 8] = [
        d(2) * d(3) * d(4) * d(5) * d(6) * nu_poly(n, &[124, -147, 35]),
        d(3) * d(2) * d(1) * nu_poly(n, &[104_160, 47_584, -332_550, 270_697, -83_226, 8_923]),
        rat(3)
            * rational_pow(&d(1), 2)
            * d(2)
            * nu_poly(n, &[312_480, 744_980, -1_245_750, 373_091, 1_085_920, -485_414, 67_225]),
        d(2)
            * rational_pow(&d(1), 3)
            * nu_poly(n, &[-1_562_400, -7_251_840, 290_690, 11_468_057, -2_824_078, -3_154_302, 1_078_663]),
        d(2)
            * rational_pow(&d(1), 4)
            * nu_poly(n, &[1_562_400, 10_781_280, 12_588_010, -10_677_353, -11_255_921, 3_006_363, 1_779_986]),
        rat(3)
            * rational_pow(&d(1), 5)
            * nu_poly(n, &[624_960, 5_411_808, 10_100_796, -1_315_908, -9_371_695, -973_573, 1_835_799, 308_858]),
        rational_pow(&d(1), 6)
            * nu_poly(n, &[-624_960, -6_823_584, -20_098_900, -16_851_720, 3_867_117, 8_356_442, 2_223_760, 119_824]),
        rat(5)
            * rational_pow(&d(1), 7)
            * nu_poly(n, &[17_856, 235_296, 939_236, 1_505_064, 1_032_603, 285_860, 24_472, 64]),
    ];
    let shifted = Poly::from_ints(&[-1, 1]); // z - 1
    let mut bracket = Poly::zero();
    for (i, ai) in a.iter().enumerate() {
        bracket = bracket.add(&shifted.pow(i).scale(ai));
    }
    let num = Poly::from_ints(&[0, -1, 1])
        .mul(&bracket)
        .scale(&frac(n * (n - 1), 362_880));
    RationalFunction::new(num, denominator_poly(nu, 14))
}

/// The rational-in-`z_0` part of the published `e_2` closed form:
/// `(1/2880)(ν−1)(z_0−1)(ν−(ν−1)z_0)^{−5}[b_0 + … + b_4 z_0^4]`. The full
/// display adds `K_1 s^{2/(ν−1)} + K_2 s^{3/(ν−1)}`, which are nonzero only
/// when those exponents are positive integers.
pub fn printed_e2_rational(nu: usize) -> RationalFunction {
    let n = nu as i64;
    let brackets = [
        nu_poly(n, &[0, 0, 0, -1, 5, 8]),
        nu_poly(n, &[0, 0, -1, 41, -24, -16]),
        nu_poly(n, &[0, 44, -89, 54, -17, 8]),
        nu_poly(n, &[-12, -12, 108, -132, 48]),
        nu_poly(n, &[-12, 48, -72, 48, -12]),
    ];
    let bracket = Poly::from_coeffs(brackets.to_vec());
    let num = Poly::from_ints(&[-1, 1])
        .mul(&bracket)
        .scale(&frac(n - 1, 2880));
    RationalFunction::new(num, denominator_poly(nu, 5))
}

/// The published `F_2^{(ν)}[0]` coefficient family as `(partition of 5,
/// coefficient)` pairs; the coefficient multiplies
/// `f^{ν+1−ρ} Π_j f_{w^{(j)}}` and includes the overall `c_ν`.
pub fn f2_zero_family(nu: usize) -> Vec<(PartitionV, Rational)> {
    let n = nu as i64;
    let c = Rational::from_integer(c_nu(nu));
    let d = |k: i64| rat(n - k);
    vec![
        (PartitionV::new(vec![5]), &c * d(0) * nu_poly(n, &[-1, 2]) / rat(120)),
        (PartitionV::new(vec![4, 1]), &c * d(0) * d(1) * nu_poly(n, &[-11, 18]) / rat(360)),
        (PartitionV::new(vec![3, 2]), &c * d(0) * d(1) * nu_poly(n, &[-5, 6]) / rat(72)),
        (
            PartitionV::new(vec![3, 1, 1]),
            &c * d(0) * d(1) * d(2) * nu_poly(n, &[-20, 23]) / rat(360),
        ),
        (
            PartitionV::new(vec![2, 2, 1]),
            &c * d(0) * d(1) * d(2) * nu_poly(n, &[-65, 62]) / rat(720),
        ),
        (
            PartitionV::new(vec![2, 1, 1, 1]),
            &c * d(0) * d(1) * d(2) * d(3) * nu_poly(n, &[-19, 16]) / rat(360),
        ),
        (
            PartitionV::new(vec![1, 1, 1, 1, 1]),
            &c * d(0) * d(1) * d(2) * d(3) * d(4) * nu_poly(n, &[-7, 5]) / rat(1440),
        ),
    ]
}

/// The published `F_3^{(ν)}[0]` coefficient family over the partitions of 7.
pub fn f3_zero_family(nu: usize) -> Vec<(PartitionV, Rational)> {
    let n = nu as i64;
    let c = Rational::from_integer(c_nu(nu));
    let d = |k: i64| rat(n - k);
    let sevenf = rat(5040);
    let base = |parts: Vec<usize>, falling_len: i64, poly: &[i64], extra_den: i64| {
        let mut coeff = c.clone();
        for k in 0..falling_len {
            coeff *= d(k);
        }
        coeff *= nu_poly(n, poly);
        coeff /= &sevenf * rat(extra_den);
        (PartitionV::new(parts), coeff)
    };
    vec![
        base(vec![7], 1, &[3, -8, 6], 1),
        base(vec![6, 1], 2, &[47, -108, 72], 3),
        base(vec![5, 2], 2, &[105, -210, 112], 2),
        base(vec![4, 3], 2, &[539, -1050, 504], 6),
        base(vec![5, 1, 1], 3, &[86, -163, 86], 2),
        base(vec![4, 2, 1], 3, &[1387, -2416, 1044], 6),
        base(vec![3, 3, 1], 3, &[467, -803, 327], 3),
        base(vec![3, 2, 2], 3, &[1456, -2359, 882], 6),
        base(vec![4, 1, 1, 1], 4, &[410, -665, 270], 6),
        base(vec![3, 2, 1, 1], 4, &[857, -1309, 458], 2),
        base(vec![2, 2, 2, 1], 4, &[1327, -1932, 620], 6),
        base(vec![3, 1, 1, 1, 1], 5, &[788, -1121, 359], 12),
        base(vec![2, 2, 1, 1, 1], 5, &[2431, -3315, 974], 12),
        base(vec![2, 1, 1, 1, 1, 1], 6, &[228, -290, 77], 6),
        base(vec![1, 1, 1, 1, 1, 1, 1], 7, &[124, -147, 35], 72),
    ]
}

/// `[w^m]` of `P(w)(w+1)^a (1−(ν−1)w)^{−b}`, computed by exact series
/// expansion.
fn loop_coefficient(p: &Poly, a: usize, nu: usize, b: i64, m: usize) -> Rational {
    let mut bin = Series::zero(m);
    for i in 0..=m {
        bin.set_coeff(i, Rational::from_integer(binomial(a as i64, i as i64)));
    }
    let lin = Series::from_coeffs(
        (0..=m)
            .map(|i| if i == 0 { Rational::one() } else if i == 1 { rat(-(nu as i64 - 1)) } else { rat(0) })
            .collect(),
    );
    let den = lin.pow(-b).expect("constant term 1 is invertible");
    let w = Series::identity(m.max(1)).truncate(m);
    let series = &(&p.eval_series(&w) * &bin) * &den;
    series.coeff(m).clone()
}

/// Taylor coefficients of `z_1` from the loop-integral representation:
/// `ζ_j^{(1)} = c_ν^j (ν(ν−1)/12) [w^{j−1}] (ν−2 + (ν²+ν−2)w)(w+1)^{νj}
/// (1−(ν−1)w)^{−3}`. This is `[s^j] z_1` directly.
pub fn zeta1_loop(nu: usize, j: usize) -> Rational {
    assert!(j >= 1);
    let n = nu as i64;
    let p = Poly::from_coeffs(vec![rat(n - 2), rat(n * n + n - 2)]);
    rational_pow(&Rational::from_integer(c_nu(nu)), j as i64)
        * frac(n * (n - 1), 12)
        * loop_coefficient(&p, nu * j, nu, 3, j - 1)
}

/// The boxed prefactor variant printed alongside `zeta1_loop`:
/// `ν c_ν^j [w^{j−1}] ((ν−1)(ν−2) + (ν+2)w)(w+1)^{νj}(1−(ν−1)w)^{−3}`.
/// It disagrees with the loop integral it is derived from (a dropped `1/12`
/// and a misplaced `ν−1`); kept for explicit comparison.
pub fn zeta1_boxed(nu: usize, j: usize) -> Rational {
    assert!(j >= 1);
    let n = nu as i64;
    let p = Poly::from_coeffs(vec![rat((n - 1) * (n - 2)), rat(n + 2)]);
    rational_pow(&Rational::from_integer(c_nu(nu)), j as i64)
        * rat(n)
        * loop_coefficient(&p, nu * j, nu, 3, j - 1)
}

/// Taylor coefficients of `z_2` from the published loop display `r_2(w)`:
/// `ζ_j^{(2)} = c_ν^j (ν(ν−1)/1440) [w^{j−1}] (w+1)^{νj} B(w)(1−(ν−1)w)^{−8}`.
pub fn zeta2_loop(nu: usize, j: usize) -> Rational {
    assert!(j >= 1);
    let n = nu as i64;
    let d = |k: i64| rat(n - k);
    let b = [
        d(2) * d(3) * d(4) * nu_poly(n, &[-7, 5]),
        rat(2) * d(1) * d(2) * nu_poly(n, &[168, 84, -246, 73]),
        rational_pow(&d(1), 2) * d(2) * nu_poly(n, &[-504, -1158, 288, 497]),
        rat(4) * rational_pow(&d(1), 3) * nu_poly(n, &[-168, -604, -190, 288, 77]),
        rat(3) * rational_pow(&d(1), 4) * nu_poly(n, &[56, 302, 383, 130, 8]),
    ];
    let p = Poly::from_coeffs(b.to_vec());
    rational_pow(&Rational::from_integer(c_nu(nu)), j as i64)
        * frac(n * (n - 1), 1440)
        * loop_coefficient(&p, nu * j, nu, 8, j - 1)
}
