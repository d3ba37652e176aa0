mod common;

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use speiser_core::{
    chordal_distance, extend_tree, integrate, real_zeros, skeleton_tree, solution_basis,
    stokes_directions, validate_axioms, ExtendedComplex, InitialData, Mobius, RealPolynomial,
};

fn leading_poly(degree: usize, lead: f64) -> RealPolynomial {
    let mut c = vec![0.5; degree];
    c.push(lead);
    RealPolynomial::new(c).unwrap()
}

/// Distance between two angles on the circle.
fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stokes_rays_count_and_spacing(degree in 0usize..9, lead in prop_oneof![-5.0..-0.1f64, 0.1..5.0f64]) {
        let angles = stokes_directions(&leading_poly(degree, lead)).unwrap();
        prop_assert_eq!(angles.len(), degree + 2);
        let step = 2.0 * PI / (degree + 2) as f64;
        for w in angles.windows(2) {
            prop_assert!((w[1] - w[0] - step).abs() < 1e-12);
        }
        prop_assert!(angles.iter().all(|&a| (0.0..2.0 * PI).contains(&a)));
    }

    #[test]
    fn flipping_the_leading_sign_rotates_by_half_a_sector(degree in 0usize..9, lead in 0.1..5.0f64) {
        let up = stokes_directions(&leading_poly(degree, lead)).unwrap();
        let down = stokes_directions(&leading_poly(degree, -lead)).unwrap();
        let shift = PI / (degree + 2) as f64;
        for a in &up {
            prop_assert!(down.iter().any(|b| angle_gap(a - shift, *b) < 1e-12));
        }
    }

    #[test]
    fn shifted_sine_zeros(phase in 0.0..PI, omega in 0.5..2.0f64) {
        // w = sin(omega x + phase), P = omega^2
        let p = RealPolynomial::new(vec![omega * omega]).unwrap();
        let init = InitialData::real(0.0, phase.sin(), omega * phase.cos()).unwrap();
        let found = real_zeros(&p, init, (-6.0, 6.0), 1e-12).unwrap().zeros;
        let expected: Vec<f64> = (-10..10)
            .map(|k| (k as f64 * PI - phase) / omega)
            .filter(|x| (-6.0..=6.0).contains(x))
            .collect();
        prop_assert_eq!(found.len(), expected.len());
        for (a, b) in found.iter().zip(&expected) {
            prop_assert!((a - b).abs() < 1e-9, "{} vs {}", a, b);
        }
    }

    #[test]
    fn sturm_zeros_interlace(c in prop::collection::vec(-1.0..1.0f64, 1..3), shift in 2.0..6.0f64) {
        // P = shift + small terms keeps both solutions oscillating on [-3, 3]
        let mut coeffs = c.clone();
        coeffs[0] += shift;
        let p = RealPolynomial::new(coeffs).unwrap();
        let z1 = real_zeros(&p, InitialData::real(0.0, 1.0, 0.0).unwrap(), (-3.0, 3.0), 1e-12).unwrap().zeros;
        let z2 = real_zeros(&p, InitialData::real(0.0, 0.0, 1.0).unwrap(), (-3.0, 3.0), 1e-12).unwrap().zeros;
        let mut all: Vec<(f64, u8)> = z1.iter().map(|&x| (x, 1)).chain(z2.iter().map(|&x| (x, 2))).collect();
        all.sort_by(|a, b| a.0.total_cmp(&b.0));
        for w in all.windows(2) {
            prop_assert!(w[0].1 != w[1].1, "{:?}", all);
        }
    }

    #[test]
    fn solutions_are_linear_in_initial_data(a in -2.0..2.0f64, b in -2.0..2.0f64, x in 0.5..3.0f64, y in -1.0..1.0f64) {
        let p = RealPolynomial::new(vec![1.0, -0.5, 0.25]).unwrap();
        let path = [Complex64::new(x, y)];
        let end = |w0: f64, dw0: f64| {
            integrate(&p, InitialData::real(0.0, w0, dw0).unwrap(), &path, 1e-12).unwrap().last().w
        };
        let combined = end(a, b);
        let separate = end(1.0, 0.0) * a + end(0.0, 1.0) * b;
        prop_assert!((combined - separate).norm() < 1e-9 * (1.0 + combined.norm()));
    }

    #[test]
    fn basis_wronskian_stays_one_on_short_paths(x in -3.0..3.0f64, y in -2.0..2.0f64) {
        let p = RealPolynomial::new(vec![0.0, -1.0]).unwrap();
        let basis = solution_basis(&p, Complex64::new(0.0, 0.0), 1e-12).unwrap();
        let w = basis.at(Complex64::new(x, y)).unwrap().wronskian();
        prop_assert!((w - 1.0).norm() < 1e-9);
    }

    #[test]
    fn mobius_maps_its_three_points(
        pts in prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 6),
        infinite in 0usize..4,
    ) {
        let f = |(x, y): (f64, f64)| ExtendedComplex::Finite(Complex64::new(x, y));
        let mut from = [f(pts[0]), f(pts[1]), f(pts[2])];
        let to = [f(pts[3]), f(pts[4]), f(pts[5])];
        if infinite < 3 {
            from[infinite] = ExtendedComplex::Infinity;
        }
        let distinct = |s: &[ExtendedComplex; 3]| {
            (0..3).all(|i| (i + 1..3).all(|j| chordal_distance(s[i], s[j]) > 1e-3))
        };
        prop_assume!(distinct(&from) && distinct(&to));
        let m = Mobius::through(from, to).unwrap();
        for (a, b) in from.iter().zip(to) {
            prop_assert!(chordal_distance(m.apply(*a), b) < 1e-9);
        }
    }

    #[test]
    fn random_catalog_extensions_validate(index in 0usize..23, depth in 1usize..7) {
        let ((d, v), tree) = common::catalog_trees().swap_remove(index);
        let g = extend_tree(&tree, depth).unwrap();
        prop_assert!(validate_axioms(&g).all_pass(), "catalog({}, {:?}) at depth {}", d, v, depth);
        prop_assert_eq!(skeleton_tree(&g).unwrap(), tree);
    }
}
