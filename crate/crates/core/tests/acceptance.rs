//! The acceptance gate: one test per criterion, every comparison exact
//! (tolerance zero, rational arithmetic throughout). Each test prints a
//! single pass line on success; criterion 2 is the extended-scale census
//! and stays behind `--ignored`.

use num::{One, Zero};

use todamap_core::eg::{drivers, resonant_orders, EgState, ResonancePolicy};
use todamap_core::equilibrium::{self, c_nu};
use todamap_core::oracle::{map_census, two_leg_census};
use todamap_core::printed;
use todamap_core::rational::{factorial, format_rational, frac, rat, rational_pow, Rational};
use todamap_core::toda::{
    d_v_coefficient, forcing_dv, forcing_walk, reconstruct_zg, two_time_z0, z0_series,
    z1_closed_form, HierarchyState, PartitionV,
};
use todamap_core::Series;

fn pass(n: usize, what: &str) {
    println!("criterion {n}: PASS - {what}");
}

#[test]
fn criterion_01_census_table_cheap_rows() {
    let rows: &[(usize, usize, usize, u64)] = &[
        (1, 2, 1, 1),
        (2, 2, 2, 0),
        (2, 2, 3, 1440),
        (2, 3, 1, 0),
        (2, 4, 1, 21),
        (3, 3, 2, 0),
        (3, 5, 1, 0),
        (3, 6, 1, 1485),
        (3, 2, 4, 0),
    ];
    for &(g, nu, n, expect) in rows {
        let c = map_census(nu, n, 1, false).unwrap();
        assert_eq!(c.genus_count(g), expect, "g={g} nu={nu} n={n}");
    }
    pass(1, "census reproduces all nine cheap map-count table rows exactly");
}

#[test]
#[ignore = "extended: ~6.5e8 matchings, minutes-scale parallel run"]
fn criterion_02_census_table_extended_row() {
    let c = map_census(2, 5, 8, true).unwrap();
    assert_eq!(c.genus_count(3), 58_060_800);
    pass(2, "extended census row (g=3, 2nu=4, n=5) = 58060800");
}

#[test]
fn criterion_03_kappa0_three_way_agreement() {
    for nu in [2usize, 3] {
        let h = HierarchyState::solve(nu, 4, 0).unwrap();
        let e = EgState::solve(&h, &ResonancePolicy::table_only()).unwrap();
        let oracle_max = if nu == 2 { 4 } else { 2 };
        for n in 1..=4usize {
            let closed = equilibrium::kappa0(nu, n);
            assert_eq!(e.kappa(0, n).unwrap(), closed, "hierarchy nu={nu} n={n}");
            if n <= oracle_max {
                let c = map_census(nu, n, 4, false).unwrap();
                assert_eq!(
                    num::bigint::BigInt::from(c.genus_count(0)),
                    closed,
                    "census nu={nu} n={n}"
                );
            }
        }
    }
    let expect: Vec<num::bigint::BigInt> = [2, 36, 1728, 145_152]
        .iter()
        .map(|&v| num::bigint::BigInt::from(v))
        .collect();
    let got: Vec<_> = (1..=4).map(|n| equilibrium::kappa0(2, n)).collect();
    assert_eq!(got, expect);
    pass(3, "kappa_0 closed form = hierarchy = census (incl. 2, 36, 1728, 145152)");
}

#[test]
fn criterion_04_e1_closed_form() {
    for nu in 2..=5usize {
        let h = HierarchyState::solve(nu, 12, 1).unwrap();
        let e = EgState::solve(&h, &ResonancePolicy::table_only()).unwrap();
        let lin = &Series::constant(rat(nu as i64), 12) - &h.z[0].scale(&rat(nu as i64 - 1));
        let expect = lin.log().unwrap().scale(&frac(-1, 12));
        assert_eq!(e.e_hat[1], expect, "nu={nu}");
        if nu == 2 {
            // the resonant coefficient is fixed to 1 by the table, which is
            // exactly the value the logarithm produces: K_2 = 0
            assert_eq!(e.e_hat[1].coeff(1), &Rational::one());
        }
    }
    pass(4, "e_1 = -(1/12)log(nu-(nu-1)z_0) to order 12 for nu=2..5 (K_2 = 0)");
}

#[test]
fn criterion_05_z1_closed_form() {
    for nu in 2..=5usize {
        let h = HierarchyState::solve(nu, nu + 7, 1).unwrap();
        let rf = reconstruct_zg(&h, 1).unwrap();
        assert!(rf.equivalent(&z1_closed_form(nu)), "nu={nu}");
    }
    pass(5, "reconstructed z_1 equals the closed form for nu=2..5");
}

#[test]
fn criterion_06_z2_z3_reconstruction() {
    for nu in 2..=4usize {
        let order = 5 * 3 - 1 + nu + 6;
        let h = HierarchyState::solve(nu, order, 3).unwrap();
        for g in [2usize, 3] {
            let rf = reconstruct_zg(&h, g).unwrap();
            let back = rf.eval_series(&h.z[0]).unwrap();
            assert_eq!(
                back.truncate(12),
                h.z[g].truncate(12),
                "round trip nu={nu} g={g}"
            );
            // comparison against the published displays: informational only
            let reference = if g == 2 {
                printed::printed_z2(nu)
            } else {
                printed::printed_z3(nu)
            };
            if rf.equivalent(&reference) {
                println!("criterion 6: note - published z_{g} display matches (nu={nu})");
            } else {
                let ref_series = reference.eval_series(&h.z[0]).unwrap();
                let mismatches: Vec<usize> = (0..=12)
                    .filter(|&k| ref_series.coeff(k) != back.coeff(k))
                    .collect();
                println!(
                    "criterion 6: note - published z_{g} display differs from the \
                     reconstruction at s-orders {mismatches:?} (nu={nu}); probable \
                     typo in the published display, reconstruction verified by \
                     round trip"
                );
            }
        }
    }
    pass(6, "z_2/z_3 reconstruction round-trips exactly to order 12 for nu=2..4");
}

#[test]
fn criterion_07_forcing_route_equivalence() {
    for nu in 2..=4usize {
        let h = HierarchyState::solve(nu, 10, 3).unwrap();
        for g in 1..=3usize {
            let a = forcing_dv(nu, &h.z[..g], g, 10);
            let b = forcing_walk(nu, &h.z[..g], g, 10);
            assert_eq!(a, b, "nu={nu} g={g}");
        }
    }
    // printed coefficient families
    for nu in 2..=5usize {
        let n = nu as i64;
        let c = Rational::from_integer(c_nu(nu));
        assert_eq!(d_v_coefficient(nu, &PartitionV::new(vec![3])), &c * frac(n, 6));
        assert_eq!(
            d_v_coefficient(nu, &PartitionV::new(vec![2, 1])),
            &c * frac(n * (n - 1), 3)
        );
        assert_eq!(
            d_v_coefficient(nu, &PartitionV::new(vec![1, 1, 1])),
            &c * frac(n * (n - 1) * (n - 2), 12)
        );
        for (v, coeff) in printed::f2_zero_family(nu) {
            assert_eq!(d_v_coefficient(nu, &v), coeff, "F2[0] nu={nu} V={:?}", v.parts);
        }
        for (v, coeff) in printed::f3_zero_family(nu) {
            assert_eq!(d_v_coefficient(nu, &v), coeff, "F3[0] nu={nu} V={:?}", v.parts);
        }
    }
    pass(7, "walk-sum and d_V forcings agree (g<=3, nu<=4, order 10); printed F_1, F_2[0], F_3[0] families reproduced");
}

#[test]
fn criterion_08_e0_assembly() {
    let grid = [frac(1, 4), frac(1, 2), frac(3, 4), rat(1), frac(9, 8)];
    for nu in 2..=6usize {
        for z in &grid {
            assert!(
                equilibrium::e0_assembly_check(nu, &Rational::one(), z).unwrap(),
                "nu={nu} z={}",
                format_rational(z)
            );
        }
    }
    pass(8, "e_0 closed form equals the piecewise assembly on a 5-point grid for nu=2..6");
}

#[test]
fn criterion_09_e2_against_printed_closed_form() {
    for nu in 2..=4usize {
        let h = HierarchyState::solve(nu, 8, 2).unwrap();
        let e = EgState::solve(&h, &ResonancePolicy::table_only()).unwrap();
        let rational_part = printed::printed_e2_rational(nu)
            .eval_series(&h.z[0])
            .unwrap();
        let diff = &e.e_hat[2] - &rational_part;
        // the printed form adds K_1 s^{2/(nu-1)} + K_2 s^{3/(nu-1)}; the
        // difference may be supported only on those resonant exponents
        let allowed = resonant_orders(nu, 2, 8);
        for k in 0..=8usize {
            if allowed.contains(&k) {
                continue;
            }
            assert!(
                diff.coeff(k).is_zero(),
                "nu={nu}: unexpected difference at s^{k}: {}",
                format_rational(diff.coeff(k))
            );
        }
        for &k in &allowed {
            println!(
                "criterion 9: note - integration constant at s^{k} (nu={nu}): {}",
                format_rational(diff.coeff(k))
            );
        }
    }
    pass(9, "e_2 series matches the published closed form up to resonant integration constants, order 8, nu=2..4");
}

#[test]
fn criterion_10_two_leg_identity() {
    let h = HierarchyState::solve(2, 3, 1).unwrap();
    for g in 0..=1usize {
        for n in 1..=3usize {
            let c = two_leg_census(2, n, 2, false).unwrap();
            let expect = h.z[g].coeff(n) * Rational::from_integer(factorial(n));
            assert_eq!(
                Rational::from_integer(c.genus_count(g).into()),
                expect,
                "g={g} n={n}"
            );
        }
    }
    let c1 = two_leg_census(2, 1, 1, false).unwrap();
    assert_eq!(c1.genus_count(0), 12);
    let c2 = two_leg_census(2, 2, 1, false).unwrap();
    assert_eq!(c2.genus_count(1), 192);
    pass(10, "two-leg census equals n!.[s^n] z_g for 2nu=4, g<=1, n<=3 (incl. 12 and 192)");
}

#[test]
fn criterion_11_two_time_constraint() {
    let b = two_time_z0(2, 3, 4);
    assert_eq!(b.slice(0), z0_series(2, 4));
    assert_eq!(b.slice(1), z0_series(3, 4));
    assert_eq!(two_time_z0(3, 2, 4), b.swap_vars());
    assert_eq!(b.coeff(1, 1), &rat(3600));
    pass(11, "two-time z_0: single-time reductions, valence swap symmetry, s_1 s_2 coefficient 3600");
}

#[test]
fn criterion_12_appendix_moment_recursion() {
    let samples = [
        (rat(3), rat(4)),
        (frac(7, 2), frac(5, 4)),
        (frac(5, 3), frac(9, 7)),
    ];
    for (lambda, beta_sq) in &samples {
        assert!(
            equilibrium::appendix_s_check(6, lambda, beta_sq),
            "lambda={} beta^2={}",
            format_rational(lambda),
            format_rational(beta_sq)
        );
    }
    pass(12, "moment-integral basis recursion holds for j<=6 at three sample points");
}

#[test]
fn criterion_13_property_battery() {
    // integrality and nonnegativity of every kappa_g(n), g<=3, nu<=6, n<=8,
    // and exact vanishing of the driver at every resonant order
    for nu in 2..=6usize {
        let h = HierarchyState::solve(nu, 8, 3).unwrap();
        let e = EgState::solve(&h, &ResonancePolicy::table_only()).unwrap();
        for g in 0..=3usize {
            let d = drivers(nu, g, &e.e_hat[..g], &h.z, 8).unwrap();
            for n in resonant_orders(nu, g, 8) {
                assert!(d.coeff(n).is_zero(), "driver nonzero: nu={nu} g={g} n={n}");
            }
            for n in 0..=8usize {
                e.kappa(g, n).unwrap();
            }
        }
    }
    // lambda factorization identity
    for g in 0..=5i64 {
        for nu in 2..=8i64 {
            for n in 0..20i64 {
                let lhs = (2 - 2 * g) * (1 - 2 * g)
                    + (nu - 1) * (nu + 2 - 4 * g) * n
                    + (nu - 1) * (nu - 1) * n * (n - 1);
                let e = (nu - 1) * n + 2 - 2 * g;
                assert_eq!(lhs, e * (e - 1));
            }
        }
    }
    // higher Catalan closed form vs series solve
    for nu in 2..=6usize {
        let z0 = z0_series(nu, 20);
        let c = Rational::from_integer(c_nu(nu));
        for j in 1..=20usize {
            let expect = equilibrium::zeta_j(nu, j) * rational_pow(&c, j as i64);
            assert_eq!(z0.coeff(j), &expect, "nu={nu} j={j}");
        }
    }
    pass(13, "kappa integrality/nonnegativity (g<=3, nu<=6, n<=8), resonance solvability, lambda factorization, zeta_j closed form");
}
