use std::sync::OnceLock;

use critline::blaschke::{blaschke_b, c_product, SyntheticZeroSet, ZeroRelocation};
use critline::cli::parse_complex;
use critline::line_integrals::{n1, HalfLine, QuadratureSpec};
use critline::prime_side::{build_mangoldt, f_star, f_star_by_quadrature, pi_star, psi, MangoldtTable};
use critline::report::format_short;
use critline::special_fn::{ei0, theta_asymptotic, theta_exact};
use critline::zeros::{count_n, scan_zeros, ZeroTable, DEFAULT_REFINE_TOL, DEFAULT_STEP};
use critline::zeta_engine::{hardy_z, xi, zeta};
use critline::Complex64;
use proptest::prelude::*;

fn zeros() -> &'static ZeroTable {
    static T: OnceLock<ZeroTable> = OnceLock::new();
    T.get_or_init(|| scan_zeros(200.0, DEFAULT_STEP, DEFAULT_REFINE_TOL).unwrap())
}

fn primes() -> &'static MangoldtTable {
    static P: OnceLock<MangoldtTable> = OnceLock::new();
    P.get_or_init(|| build_mangoldt(100_000).unwrap())
}

fn synthetic() -> impl Strategy<Value = SyntheticZeroSet> {
    prop::collection::vec((0.51f64..=1.0, 10.0f64..150.0), 1..4).prop_map(|v| {
        SyntheticZeroSet::new(v.into_iter().map(|(s, t)| Complex64::new(s, t)).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_is_odd_and_matches_its_expansion(t in 7.0f64..5000.0) {
        prop_assert_eq!(theta_exact(-t), -theta_exact(t));
        // the three-term form omits 1/(48t) + O(t⁻³)
        let gap = theta_exact(t) - theta_asymptotic(t).unwrap() - 1.0 / (48.0 * t);
        prop_assert!(gap.abs() < 1e-2 / t.powi(3) + 1e-12 * t * t.ln());
    }

    #[test]
    fn n1_is_odd(t in 0.1f64..500.0) {
        prop_assert!((n1(-t) + n1(t)).abs() < 1e-12 * (1.0 + n1(t).abs()));
    }

    #[test]
    fn hardy_z_has_the_modulus_of_zeta(t in 0.5f64..300.0) {
        let z = zeta(Complex64::new(0.5, t)).unwrap().norm();
        prop_assert!((hardy_z(t).unwrap().abs() - z).abs() < 1e-10 * (1.0 + z));
    }

    #[test]
    fn zeta_commutes_with_conjugation(re in 0.1f64..4.0, im in -60.0f64..60.0) {
        prop_assume!((re - 1.0).abs() > 1e-3 || im.abs() > 1e-3);
        let s = Complex64::new(re, im);
        let d = zeta(s.conj()).unwrap() - zeta(s).unwrap().conj();
        prop_assert!(d.norm() < 1e-12 * (1.0 + zeta(s).unwrap().norm()));
    }

    #[test]
    fn xi_is_symmetric_under_reflection(re in 0.05f64..0.95, im in 0.5f64..40.0) {
        let s = Complex64::new(re, im);
        let a = xi(s).unwrap();
        let b = xi(1.0 - s).unwrap();
        prop_assert!((a - b).norm() < 1e-9 * (1.0 + a.norm()));
    }

    #[test]
    fn ei0_commutes_with_conjugation(re in -40.0f64..40.0, im in -40.0f64..40.0) {
        let z = Complex64::new(re, im);
        let d = ei0(z.conj()) - ei0(z).conj();
        prop_assert!(d.norm() <= 1e-14 * (1.0 + ei0(z).norm()));
    }

    #[test]
    fn zero_count_is_a_nondecreasing_integer(a in 0.0f64..200.0, b in 0.0f64..200.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(count_n(lo, zeros()).unwrap() <= count_n(hi, zeros()).unwrap());
    }

    #[test]
    fn blaschke_is_unimodular_on_the_line_and_contracts_off_it(
        zs in synthetic(), u in -200.0f64..200.0, sigma in 0.55f64..5.0,
    ) {
        let on = blaschke_b(Complex64::new(0.5, u), &zs).unwrap().norm();
        prop_assert!((on - 1.0).abs() < 1e-10);
        let off = blaschke_b(Complex64::new(sigma, u), &zs).unwrap().norm();
        prop_assert!(off < 1.0 + 1e-12);
    }

    #[test]
    fn b_and_c_are_real_on_the_real_axis(zs in synthetic(), s in 0.6f64..6.0) {
        let one = Complex64::new(s, 0.0);
        prop_assert!(blaschke_b(one, &zs).unwrap().im.abs() < 1e-12);
        prop_assert!(c_product(one, &zs).unwrap().im.abs() < 1e-12);
    }

    #[test]
    fn relocation_line_data_is_even_and_count_change_odd(zs in synthetic(), u in 0.0f64..190.0) {
        let reloc = ZeroRelocation::new(&zs, zeros()).unwrap();
        prop_assert_eq!(reloc.count_change(-u), -reloc.count_change(u));
        let direct: f64 = reloc.added().iter().map(|a| (Complex64::new(0.5, u) - a).norm().ln()).sum::<f64>()
            - reloc.removed_points().iter().map(|b| (Complex64::new(0.5, u) - b).norm().ln()).sum::<f64>();
        prop_assert!((reloc.log_abs_q(u) - direct).abs() < 1e-9);
    }

    #[test]
    fn prime_power_weighting_dominates_psi(x in 2.0f64..100_000.0) {
        // Λ(n)/log n · log x ≥ Λ(n) for n ≤ x
        let v = pi_star(x, primes()).unwrap() * x.ln() - psi(x, primes()).unwrap();
        prop_assert!(v >= -1e-9);
    }

    #[test]
    fn f_star_agrees_with_its_quadrature(x in 1.5f64..200.0) {
        let a = f_star(x, primes()).unwrap();
        let b = f_star_by_quadrature(x, primes()).unwrap();
        prop_assert!((a - b).abs() < 1e-9 * (1.0 + a.abs()));
    }

    #[test]
    fn quadrature_is_exact_for_cubics(c in prop::array::uniform4(-5.0f64..5.0), a in 0.0f64..3.0, w in 0.1f64..20.0) {
        let b = a + w;
        let f = |u: f64| ((c[3] * u + c[2]) * u + c[1]) * u + c[0];
        let prim = |u: f64| (((c[3] / 4.0 * u + c[2] / 3.0) * u + c[1] / 2.0) * u + c[0]) * u;
        let est = HalfLine::new(a, b).integrate(&QuadratureSpec::default(), f).unwrap();
        let exact = prim(b) - prim(a);
        prop_assert!((est.value - exact).abs() < 1e-10 * (1.0 + exact.abs()));
    }

    #[test]
    fn complex_formatting_parses_back(re in -50i32..50, im in -50i32..50, k in 0u32..3) {
        let z = Complex64::new(re as f64 / 2f64.powi(k as i32), im as f64 / 4.0);
        prop_assert_eq!(parse_complex(&format_short(z)).unwrap(), z);
    }
}
