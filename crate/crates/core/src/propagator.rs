//! The correlation function `Δ(x)` in `D = 1 - ε` dimensions,
//!
//! `Δ(x) = c_D z^{1-D/2} K_{1-D/2}(z)`, `z = m|x|`,
//!
//! its gradient and second-derivative tensor off the origin, and the scheme
//! constants `c_D`, `S_D`. Contact terms `δ^{(D)}(x)` never appear here; they
//! are handled as reduction rules in [`crate::integrals`].

use crate::error::{Error, Result};
use crate::specfun::{gamma, zpow_besselk};
use std::f64::consts::PI;

/// Value of `δ^{(D)}(x)` at the origin in dimensional regularization.
pub const DIRAC_AT_ORIGIN: f64 = 0.0;

/// Regularization point: mass `m` and `D = 1 - ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegScheme {
    m: f64,
    eps: f64,
}

impl RegScheme {
    /// `m > 0`, `0 < ε ≤ 0.5`.
    pub fn new(m: f64, eps: f64) -> Result<Self> {
        check_mass(m)?;
        if !(eps > 0.0 && eps <= 0.5) {
            return Err(Error::domain("eps", eps, "(0, 0.5]"));
        }
        Ok(RegScheme { m, eps })
    }

    /// The unregularized line `D = 1`. Only closed forms that are finite at
    /// `ε = 0` accept this scheme.
    pub fn one_dimensional(m: f64) -> Result<Self> {
        check_mass(m)?;
        Ok(RegScheme { m, eps: 0.0 })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn dim(&self) -> f64 {
        1.0 - self.eps
    }

    pub fn is_one_dimensional(&self) -> bool {
        self.eps == 0.0
    }

    /// Same `ε`, mass `m`.
    pub fn with_mass(&self, m: f64) -> Result<Self> {
        check_mass(m)?;
        Ok(RegScheme { m, eps: self.eps })
    }

    /// `c_D = m^{D-2} / (2π)^{D/2}`.
    pub fn c_d(&self) -> f64 {
        let d = self.dim();
        self.m.powf(d - 2.0) / (2.0 * PI).powf(0.5 * d)
    }

    /// `S_D = 2 π^{D/2} / Γ(D/2)`.
    pub fn s_d(&self) -> f64 {
        let d = self.dim();
        2.0 * PI.powf(0.5 * d) / gamma(0.5 * d).expect("D/2 > 0")
    }

    /// Order `1 - D/2` of the propagator's Bessel function.
    pub fn nu_delta(&self) -> f64 {
        0.5 + 0.5 * self.eps
    }

    /// Order `D/2` of the gradient's Bessel function.
    pub fn nu_grad(&self) -> f64 {
        0.5 - 0.5 * self.eps
    }

    /// `S_D m^{-D}`: converts `∫ d^D x` of a radial function into `∫ z^{D-1} dz`.
    pub fn radial_measure(&self) -> f64 {
        self.s_d() * self.m.powf(-self.dim())
    }
}

fn check_mass(m: f64) -> Result<()> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::domain("m", m, "(0, ∞)"));
    }
    Ok(())
}

/// A point at euclidean distance `r` from the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPoint {
    r: f64,
}

impl RadialPoint {
    pub fn new(r: f64) -> Result<Self> {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(Error::domain("r", r, "[0, ∞)"));
        }
        Ok(RadialPoint { r })
    }

    pub fn origin() -> Self {
        RadialPoint { r: 0.0 }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Reduced length `z = m r`.
    pub fn z(&self, scheme: &RegScheme) -> f64 {
        scheme.m * self.r
    }
}

fn off_origin(p: &RadialPoint) -> Result<f64> {
    if p.r > 0.0 {
        Ok(p.r)
    } else {
        Err(Error::domain("r", p.r, "(0, ∞) off the origin"))
    }
}

/// `Δ(x)` for `r > 0`.
pub fn delta(scheme: &RegScheme, p: &RadialPoint) -> Result<f64> {
    off_origin(p)?;
    Ok(scheme.c_d() * zpow_besselk(scheme.nu_delta(), p.z(scheme)))
}

/// `Δ(0) = m^{D-2} Γ(1 - D/2) / (4π)^{D/2}`.
pub fn delta_at_zero(scheme: &RegScheme) -> f64 {
    let d = scheme.dim();
    scheme.m.powf(d - 2.0) * gamma(1.0 - 0.5 * d).expect("1 - D/2 > 0") / (4.0 * PI).powf(0.5 * d)
}

/// Radial profile `g` of `Δ_μ(x) = g(r) x̂_μ`, `g = -m c_D z^{1-D/2} K_{D/2}(z)`.
/// At the origin `Δ_μ(0) = 0` by antisymmetry; see [`delta_grad_at_zero`].
pub fn delta_grad_radial(scheme: &RegScheme, p: &RadialPoint) -> Result<f64> {
    off_origin(p)?;
    let z = p.z(scheme);
    let nu = scheme.nu_grad();
    // z^{1-D/2} K_{D/2} = z^{1-D} · z^{D/2} K_{D/2}
    Ok(-scheme.m * scheme.c_d() * z.powf(1.0 - scheme.dim()) * zpow_besselk(nu, z))
}

pub fn delta_grad_at_zero(_scheme: &RegScheme) -> f64 {
    0.0
}

/// Regular part `m² Δ(x)` of `Δ_μμ(x) = m² Δ(x) - δ^{(D)}(x)`, for `r > 0`.
pub fn delta_lap_regular(scheme: &RegScheme, p: &RadialPoint) -> Result<f64> {
    Ok(scheme.m * scheme.m * delta(scheme, p)?)
}

/// `Δ_μμ(0) = m² Δ(0) - δ^{(D)}(0) = m² Δ(0)`.
pub fn delta_lap_at_zero(scheme: &RegScheme) -> f64 {
    scheme.m * scheme.m * delta_at_zero(scheme) - DIRAC_AT_ORIGIN
}

/// `Δ_μν(x) = a x̂_μ x̂_ν + b (δ_μν - D x̂_μ x̂_ν)` off the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hessian {
    pub a: f64,
    pub b: f64,
    pub dim: f64,
}

impl Hessian {
    /// `Δ_μμ = a`.
    pub fn trace(&self) -> f64 {
        self.a
    }

    /// Radial-radial component `a - (D-1) b`.
    pub fn radial(&self) -> f64 {
        self.a - (self.dim - 1.0) * self.b
    }

    /// Each of the `D - 1` transverse eigenvalues.
    pub fn transverse(&self) -> f64 {
        self.b
    }

    /// `Δ_μν Δ_μν`.
    pub fn contraction(&self) -> f64 {
        let rr = self.radial();
        rr * rr + (self.dim - 1.0) * self.b * self.b
    }
}

/// `a = m² Δ(x)`, `b = -c_D m^{2-D} r^{-D} z^{D/2} K_{D/2}(z) = g(r)/r`.
pub fn hessian_invariants(scheme: &RegScheme, p: &RadialPoint) -> Result<Hessian> {
    let r = off_origin(p)?;
    let d = scheme.dim();
    let a = delta_lap_regular(scheme, p)?;
    let b = -scheme.c_d()
        * scheme.m.powf(2.0 - d)
        * r.powf(-d)
        * zpow_besselk(scheme.nu_grad(), p.z(scheme));
    Ok(Hessian { a, b, dim: d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn at(r: f64) -> RadialPoint {
        RadialPoint::new(r).unwrap()
    }

    #[test]
    fn scheme_validation() {
        assert!(RegScheme::new(1.0, 0.0).is_err());
        assert!(RegScheme::new(1.0, 0.6).is_err());
        assert!(RegScheme::new(0.0, 0.1).is_err());
        assert!(RegScheme::new(-1.0, 0.1).is_err());
        assert!(RegScheme::new(1.0, 0.5).is_ok());
        assert_eq!(RegScheme::new(1.0, 0.1).unwrap().dim(), 1.0 - 0.1);
        assert!(RadialPoint::new(-1.0).is_err());
    }

    #[test]
    fn one_dimensional_forms() {
        let s = RegScheme::one_dimensional(1.0).unwrap();
        assert!(rel(delta(&s, &at(0.7)).unwrap(), 0.5 * (-0.7f64).exp()) < 1e-13);
        assert!(
            rel(
                delta_grad_radial(&s, &at(0.7)).unwrap(),
                -0.5 * (-0.7f64).exp()
            ) < 1e-13
        );
        assert!(rel(delta_at_zero(&s), 0.5) < 1e-14);
        let s2 = RegScheme::one_dimensional(2.0).unwrap();
        assert!(rel(delta_at_zero(&s2), 0.25) < 1e-14);
        let s3 = RegScheme::one_dimensional(3.0).unwrap();
        assert!(rel(delta_lap_at_zero(&s3), 1.5) < 1e-14);
        let h = hessian_invariants(&s, &at(0.4)).unwrap();
        assert!(rel(h.radial(), h.trace()) < 1e-14);
        assert!(rel(h.contraction(), h.trace() * h.trace()) < 1e-13);
    }

    #[test]
    fn origin_is_rejected() {
        let s = RegScheme::new(1.0, 0.1).unwrap();
        let o = RadialPoint::origin();
        assert!(delta(&s, &o).is_err());
        assert!(delta_grad_radial(&s, &o).is_err());
        assert!(delta_lap_regular(&s, &o).is_err());
        assert!(hessian_invariants(&s, &o).is_err());
        assert_eq!(delta_grad_at_zero(&s), 0.0);
    }

    #[test]
    fn trace_matches_laplacian() {
        let s = RegScheme::new(1.0, 0.1).unwrap();
        let p = at(1.0);
        let h = hessian_invariants(&s, &p).unwrap();
        let lap = delta_lap_regular(&s, &p).unwrap();
        // radial + (D-1) transverse
        let tr = h.radial() + (h.dim - 1.0) * h.transverse();
        assert!(rel(tr, lap) < 1e-10);
        assert!(rel(h.trace(), lap) < 1e-10);
    }

    #[test]
    fn transverse_is_gradient_over_r() {
        let s = RegScheme::new(1.3, 0.2).unwrap();
        for r in [0.1, 0.7, 3.0] {
            let h = hessian_invariants(&s, &at(r)).unwrap();
            let g = delta_grad_radial(&s, &at(r)).unwrap();
            assert!(rel(h.b, g / r) < 1e-13);
        }
    }

    #[test]
    fn continuity_at_origin() {
        for eps in [0.2, 0.1] {
            let s = RegScheme::new(1.0, eps).unwrap();
            let d0 = delta_at_zero(&s);
            let mut prev = f64::INFINITY;
            for k in 3..=6 {
                let r = 10f64.powi(-k);
                let dev = (delta(&s, &at(r)).unwrap() - d0).abs() / d0;
                // subleading term of z^ν K_ν is z^{2ν} = z^{1+ε}
                let rate = r.powf(1.0 + eps);
                assert!(dev < 2.0 * rate, "eps {eps} r {r}: {dev}");
                assert!(dev < prev);
                prev = dev;
            }
        }
    }

    #[test]
    fn field_equation_off_origin() {
        // Δ'' + (D-1)/r Δ' = m² Δ
        for (m, eps) in [(1.0, 0.1), (2.0, 0.2), (0.5, 0.05)] {
            let s = RegScheme::new(m, eps).unwrap();
            let d = s.dim();
            let f = |r: f64| delta(&s, &at(r)).unwrap();
            for r in [0.3, 1.0, 2.5] {
                let h = 1e-4;
                let second = (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h);
                let first = (f(r + h) - f(r - h)) / (2.0 * h);
                let lap = second + (d - 1.0) / r * first;
                let want = delta_lap_regular(&s, &at(r)).unwrap();
                assert!(rel(lap, want) < 1e-5, "m {m} eps {eps} r {r}");
                assert!(rel(first, delta_grad_radial(&s, &at(r)).unwrap()) < 1e-7);
            }
        }
    }

    #[test]
    fn mass_scaling() {
        let s = RegScheme::new(1.3, 0.1).unwrap();
        for lambda in [0.5, 2.0] {
            let t = s.with_mass(lambda * s.m()).unwrap();
            for r in [0.2, 1.0, 4.0] {
                let lhs = delta(&t, &at(r / lambda)).unwrap();
                let rhs = lambda.powf(s.dim() - 2.0) * delta(&s, &at(r)).unwrap();
                assert!(rel(lhs, rhs) < 1e-12);
            }
        }
    }

    #[test]
    fn signs_and_monotonicity() {
        let s = RegScheme::new(1.0, 0.3).unwrap();
        let mut prev = delta_at_zero(&s);
        for k in 1..200 {
            let r = 0.05 * k as f64;
            let v = delta(&s, &at(r)).unwrap();
            assert!(v > 0.0 && v < prev);
            assert!(delta_grad_radial(&s, &at(r)).unwrap() < 0.0);
            prev = v;
        }
    }
}
