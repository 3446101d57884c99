#![allow(clippy::excessive_precision)]

use dimreg::specfun::{besselk, besselk_integral_rep, besselk_small_z, gamma, BesselOrder};
use proptest::prelude::*;

fn k(nu: f64, z: f64) -> f64 {
    besselk(BesselOrder::new(nu).unwrap(), z).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn reference_points() {
    let cases = [
        (0.45, 0.3, 1.6295526538110486),
        (0.45, 1.0, 0.45321419739673887),
        (0.55, 0.5, 1.1091498801908734),
        (0.25, 1e-8, 215.5594459838469),
        (0.75, 30.0, 2.1522377447115052e-14),
        (1.3, 2.0, 0.16082436361104642),
        (0.999, 0.01, 99.502964083460141),
        (0.5, 1.0, 0.46106850444789456),
        (0.5, 2.0, 0.11993777196806146),
    ];
    for (nu, z, want) in cases {
        assert!(rel(k(nu, z), want) < 1e-12, "K_{nu}({z})");
    }
    assert!(rel(k(1.95, 700.0), 4.6824680398089243e-306) < 1e-11);
}

#[test]
fn integral_representation_as_oracle() {
    for (nu, z) in [(0.45, 0.3), (0.45, 1.0), (0.55, 0.5), (0.3, 5.0)] {
        let o = BesselOrder::new(nu).unwrap();
        assert!(rel(besselk_integral_rep(o, z).unwrap(), k(nu, z)) < 1e-8);
    }
    let half = BesselOrder::new(0.5).unwrap();
    assert!(rel(besselk_integral_rep(half, 1.0).unwrap(), 0.4610685044478946) < 1e-8);
}

#[test]
fn small_z_leading_term() {
    let s = |nu: f64, z: f64| besselk_small_z(BesselOrder::new(nu).unwrap(), z).unwrap();
    assert!(rel(s(0.5, 0.01), 12.533141373155003) < 1e-13);
    assert!(rel(s(0.55, 0.01), 14.893996721296967) < 1e-13);
    let mut prev = f64::INFINITY;
    for z in [1e-2, 1e-3, 1e-4, 1e-5] {
        let dev = (k(0.45, z) / s(0.45, z) - 1.0).abs();
        assert!(dev < prev);
        prev = dev;
    }
    assert!(prev < 1e-3);
}

#[test]
fn gamma_reference() {
    assert_eq!(gamma(1.0).unwrap(), 1.0);
    assert!(rel(gamma(0.5).unwrap(), std::f64::consts::PI.sqrt()) < 1e-15);
    assert!(rel(gamma(-0.05).unwrap(), -20.629066342580644) < 1e-13);
    assert!(gamma(-2.0).is_err());
}

#[test]
fn half_order_closed_form() {
    let mut z: f64 = 0.01;
    while z <= 100.0 {
        let v = k(0.5, z) * (2.0 * z / std::f64::consts::PI).sqrt() * z.exp();
        assert!((v - 1.0).abs() < 1e-12, "z = {z}");
        z *= 1.3;
    }
}

// K_ν for ν ∈ (-1, 0) through evenness in the order
fn k_signed(nu: f64, z: f64) -> f64 {
    k(nu.abs(), z)
}

proptest! {
    #[test]
    fn recurrence(nu in 0.1f64..0.9, z in 0.1f64..20.0) {
        let lhs = k(nu + 1.0, z);
        let rhs = k_signed(nu - 1.0, z) + 2.0 * nu / z * k(nu, z);
        prop_assert!(rel(lhs, rhs) < 1e-10);
    }

    #[test]
    fn positive_and_decreasing(nu in 0.01f64..1.99, z in 1e-8f64..600.0) {
        let a = k(nu, z);
        let b = k(nu, z * 1.01);
        prop_assert!(a > 0.0 && b > 0.0 && b < a);
    }
}

#[test]
fn derivative_identity() {
    // d/dz [z^μ K_μ] = -z^μ K_{1-μ} with μ = 1 - D/2
    let d = 0.9;
    let mu = 1.0 - d / 2.0;
    let f = |z: f64| z.powf(mu) * k(mu, z);
    for z in [0.5, 1.0, 2.0, 5.0] {
        let h = 1e-5 * z;
        let fd = (f(z + h) - f(z - h)) / (2.0 * h);
        let want = -z.powf(mu) * k(d / 2.0, z);
        assert!(rel(fd, want) < 1e-6, "z = {z}");
    }
}
