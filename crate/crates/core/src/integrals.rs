//! The catalogue of two- and four-propagator integrals over `d^D x`.
//!
//! Every entry has an analytic path (Gamma-function closed form, a
//! leading-order form exact at `D = 1`, or a reduction onto those) and a
//! quadrature path (direct integration of the reduced Bessel integrand, or
//! the same reduction applied to quadrature ingredients). Contact terms
//! `δ^{(D)}(x)` are removed algebraically before anything is integrated.
//!
//! Notation: `ν = 1 - D/2` is the propagator order and `μ = D/2` the
//! gradient order; `Δ₀ = Δ(0)`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::propagator::{delta_at_zero, RegScheme};
use crate::quadrature::{
    integrate_continued, integrate_with, IntegralResult, QuadOptions, RadialIntegrand,
};
use crate::specfun::gamma;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntegralName {
    /// `∫ Δ²`
    DeltaSq,
    /// `∫ Δ_μ²`
    GradSq,
    /// `∫ Δ_μμ²`
    LapSq,
    /// `∫ Δ⁴`
    Delta4,
    /// `∫ Δ² Δ_μ²`
    DsqGradsq,
    /// `I_D`, the singular four-propagator integral.
    ISingular,
    /// `∫ Δ Δ_μ Δ_ν Δ_μν`
    MixedDgdgHess,
    /// `∫ Δ_μ² Δ_ν²`
    GradsqGradsq,
    /// `∫ Δ² Δ_μμ²` at `D = 1`
    DsqLapsq,
    /// `∫ Δ² Δ_μν²`
    DsqHesssq,
    /// Bessel bracket dropped from `∫ Δ_μν²`, vanishing at `D = 1`.
    OmittedTerm,
    /// `m⁴ ∫Δ² + 2m² ∫Δ_μ² + ∫Δ_μμ²`, the integrated square of `δ^{(D)}`.
    DeltaSqSumRule,
}

impl IntegralName {
    pub const ALL: [IntegralName; 12] = [
        IntegralName::DeltaSq,
        IntegralName::GradSq,
        IntegralName::LapSq,
        IntegralName::Delta4,
        IntegralName::DsqGradsq,
        IntegralName::ISingular,
        IntegralName::MixedDgdgHess,
        IntegralName::GradsqGradsq,
        IntegralName::DsqLapsq,
        IntegralName::DsqHesssq,
        IntegralName::OmittedTerm,
        IntegralName::DeltaSqSumRule,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IntegralName::DeltaSq => "delta_sq",
            IntegralName::GradSq => "grad_sq",
            IntegralName::LapSq => "lap_sq",
            IntegralName::Delta4 => "delta_4",
            IntegralName::DsqGradsq => "dsq_gradsq",
            IntegralName::ISingular => "i_singular",
            IntegralName::MixedDgdgHess => "mixed_dgdg_hess",
            IntegralName::GradsqGradsq => "gradsq_gradsq",
            IntegralName::DsqLapsq => "dsq_lapsq",
            IntegralName::DsqHesssq => "dsq_hesssq",
            IntegralName::OmittedTerm => "omitted_term",
            IntegralName::DeltaSqSumRule => "delta_sq_sum_rule",
        }
    }

    /// Value at `D = 1`.
    pub fn limit(self, m: f64) -> f64 {
        match self {
            IntegralName::DeltaSq => 1.0 / (4.0 * m.powi(3)),
            IntegralName::GradSq => 1.0 / (4.0 * m),
            IntegralName::LapSq => -0.75 * m,
            IntegralName::Delta4 => 1.0 / (32.0 * m.powi(5)),
            IntegralName::DsqGradsq => 1.0 / (32.0 * m.powi(3)),
            IntegralName::ISingular => -1.0 / (16.0 * m),
            IntegralName::MixedDgdgHess => -1.0 / (32.0 * m),
            IntegralName::GradsqGradsq => 1.0 / (32.0 * m),
            IntegralName::DsqLapsq => -7.0 / (32.0 * m),
            IntegralName::DsqHesssq => -3.0 / (32.0 * m),
            IntegralName::OmittedTerm => 0.0,
            IntegralName::DeltaSqSumRule => 0.0,
        }
    }

    /// Exponent `k(D)` in `value ∝ m^{k(D)}`. For `dsq_hesssq` the `D = 1`
    /// piece scales as `m^{-1}` and only the `I_D` piece follows `k(D)`.
    pub fn mass_dimension(self, d: f64) -> f64 {
        match self {
            IntegralName::DeltaSq => d - 4.0,
            IntegralName::GradSq => d - 2.0,
            IntegralName::LapSq | IntegralName::DeltaSqSumRule => d,
            IntegralName::Delta4 => 3.0 * d - 8.0,
            IntegralName::DsqGradsq => 3.0 * d - 6.0,
            IntegralName::ISingular
            | IntegralName::MixedDgdgHess
            | IntegralName::GradsqGradsq
            | IntegralName::DsqHesssq => 3.0 * d - 4.0,
            IntegralName::DsqLapsq => -1.0,
            IntegralName::OmittedTerm => 0.0,
        }
    }

    /// Whether the quadrature path needs `ε > 0`.
    pub fn needs_regulator(self) -> bool {
        matches!(
            self,
            IntegralName::ISingular
                | IntegralName::MixedDgdgHess
                | IntegralName::GradsqGradsq
                | IntegralName::DsqHesssq
                | IntegralName::OmittedTerm
        )
    }

    fn valid_tags() -> String {
        IntegralName::ALL
            .iter()
            .map(|n| n.tag())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for IntegralName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IntegralName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IntegralName::ALL
            .iter()
            .copied()
            .find(|n| n.tag() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "integral",
                name: s.to_string(),
                valid: IntegralName::valid_tags(),
            })
    }
}

/// Both evaluation paths of one catalogue entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualResult {
    pub analytic: IntegralResult,
    pub quadrature: Option<IntegralResult>,
}

impl DualResult {
    /// `|analytic - quadrature| / |analytic|`.
    pub fn discrepancy(&self) -> Option<f64> {
        self.quadrature
            .map(|q| ((q.value - self.analytic.value) / self.analytic.value).abs())
    }
}

fn g(x: f64) -> f64 {
    gamma(x).expect("argument away from poles")
}

/// Closed forms and leading-order forms. All are finite at `ε = 0`.
pub mod analytic {
    use super::*;

    /// `(2 - D)/(2m²) Δ₀`.
    pub fn delta_sq(s: &RegScheme) -> f64 {
        let d = s.dim();
        (2.0 - d) / (2.0 * s.m() * s.m()) * delta_at_zero(s)
    }

    /// `(D/2) Δ₀`.
    pub fn grad_sq(s: &RegScheme) -> f64 {
        0.5 * s.dim() * delta_at_zero(s)
    }

    /// `-(1 + D/2) m² Δ₀`.
    pub fn lap_sq(s: &RegScheme) -> f64 {
        -(1.0 + 0.5 * s.dim()) * s.m() * s.m() * delta_at_zero(s)
    }

    /// The three terms `m⁴∫Δ²`, `2m²∫Δ_μ²`, `∫Δ_μμ²` of the sum rule.
    pub fn sum_rule_terms(s: &RegScheme) -> [f64; 3] {
        let m2 = s.m() * s.m();
        [m2 * m2 * delta_sq(s), 2.0 * m2 * grad_sq(s), lap_sq(s)]
    }

    /// `m^{3D-8} (c₁⁴ S₁)|_{m=1} (π²/2⁴) Γ⁴(3/2 - D/2) Γ(D)`, exact at `D = 1`.
    pub fn delta_4(s: &RegScheme) -> f64 {
        let d = s.dim();
        let c1_s1 = 2.0 / (4.0 * PI * PI);
        s.m().powf(3.0 * d - 8.0) * c1_s1 * PI * PI / 16.0 * g(1.5 - 0.5 * d).powi(4) * g(d)
    }

    /// `(1/3)[Δ₀³ - m² ∫Δ⁴]`.
    pub fn dsq_gradsq(s: &RegScheme) -> f64 {
        (delta_at_zero(s).powi(3) - s.m() * s.m() * delta_4(s)) / 3.0
    }

    /// `-m^{4-D} c_D⁴ S_D (π²/4) Γ(1+ε/2) Γ³(1-ε/2) 2^{-5ε} εΓ(2ε)`.
    pub fn i_singular(s: &RegScheme) -> f64 {
        let d = s.dim();
        let e = s.eps();
        let pre = s.m().powf(4.0 - d) * s.c_d().powi(4) * s.s_d();
        // εΓ(2ε) = Γ(1+2ε)/2 stays finite at ε = 0
        let eps_gamma = 0.5 * g(1.0 + 2.0 * e);
        -pre * PI * PI / 4.0
            * g(1.0 + 0.5 * e)
            * g(1.0 - 0.5 * e).powi(3)
            * 2f64.powf(-5.0 * e)
            * eps_gamma
    }

    /// `m² ∫Δ²Δ_μ² + I_D`.
    pub fn mixed(s: &RegScheme) -> f64 {
        s.m() * s.m() * dsq_gradsq(s) + i_singular(s)
    }

    /// `-3m² ∫Δ²Δ_μ² - 2 I_D`.
    pub fn gradsq_gradsq(s: &RegScheme) -> f64 {
        -3.0 * s.m() * s.m() * dsq_gradsq(s) - 2.0 * i_singular(s)
    }

    /// `-2m²Δ₀³ + m⁴∫Δ⁴` at `D = 1`, that is `-7/(32m)`. Only `m` is used.
    pub fn dsq_lapsq(s: &RegScheme) -> f64 {
        let one = RegScheme::one_dimensional(s.m()).expect("valid mass");
        let m2 = s.m() * s.m();
        -2.0 * m2 * delta_at_zero(&one).powi(3) + m2 * m2 * delta_4(&one)
    }

    /// `∫Δ²Δ_μμ²|_{D=1} - 2 I_D`.
    pub fn dsq_hesssq(s: &RegScheme) -> f64 {
        dsq_lapsq(s) - 2.0 * i_singular(s)
    }

    /// `-(π/4) Γ(1-ε/2) [Γ(ε/2) + Γ(-ε/2)] ε² Γ(ε)`.
    pub fn omitted_term_gamma_form(s: &RegScheme) -> f64 {
        let e = s.eps();
        if e == 0.0 {
            return 0.0;
        }
        -PI / 4.0 * g(1.0 - 0.5 * e) * (g(0.5 * e) + g(-0.5 * e)) * e * g(1.0 + e)
    }

    pub fn sum_rule(s: &RegScheme) -> f64 {
        sum_rule_terms(s).iter().sum()
    }

    pub fn value(name: IntegralName, s: &RegScheme) -> f64 {
        match name {
            IntegralName::DeltaSq => delta_sq(s),
            IntegralName::GradSq => grad_sq(s),
            IntegralName::LapSq => lap_sq(s),
            IntegralName::Delta4 => delta_4(s),
            IntegralName::DsqGradsq => dsq_gradsq(s),
            IntegralName::ISingular => i_singular(s),
            IntegralName::MixedDgdgHess => mixed(s),
            IntegralName::GradsqGradsq => gradsq_gradsq(s),
            IntegralName::DsqLapsq => dsq_lapsq(s),
            IntegralName::DsqHesssq => dsq_hesssq(s),
            IntegralName::OmittedTerm => omitted_term_gamma_form(s),
            IntegralName::DeltaSqSumRule => sum_rule(s),
        }
    }
}

/// Terms of the integration-by-parts identity
/// `∫ (z^ν K_ν)² (K_μ²)' dz + B = 2 ∫ z^{2-D} K_ν K_μ³ dz`, where the
/// left side is continued from its power divergence at the origin and `B` is
/// the constant that the boundary term leaves behind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialIntegration {
    pub lhs: IntegralResult,
    pub boundary: f64,
    pub rhs: IntegralResult,
}

impl PartialIntegration {
    pub fn residual(&self) -> f64 {
        ((self.lhs.value + self.boundary - self.rhs.value) / self.rhs.value).abs()
    }
}

type Cached = OnceLock<Result<IntegralResult>>;

/// The integral catalogue at one regularization point. Base quadratures are
/// computed once and shared by every composed entry.
#[derive(Debug)]
pub struct Catalogue {
    scheme: RegScheme,
    quad: QuadOptions,
    delta_sq: Cached,
    grad_sq: Cached,
    delta_4: Cached,
    dsq_gradsq: Cached,
    i_raw: Cached,
    delta_4_one: Cached,
    omitted: Cached,
}

impl Catalogue {
    pub fn new(scheme: RegScheme, rel_tol: f64) -> Self {
        Catalogue::with_options(scheme, QuadOptions::with_rel_tol(rel_tol))
    }

    pub fn with_options(scheme: RegScheme, quad: QuadOptions) -> Self {
        Catalogue {
            scheme,
            quad,
            delta_sq: OnceLock::new(),
            grad_sq: OnceLock::new(),
            delta_4: OnceLock::new(),
            dsq_gradsq: OnceLock::new(),
            i_raw: OnceLock::new(),
            delta_4_one: OnceLock::new(),
            omitted: OnceLock::new(),
        }
    }

    pub fn scheme(&self) -> &RegScheme {
        &self.scheme
    }

    pub fn options(&self) -> &QuadOptions {
        &self.quad
    }

    fn cached(
        &self,
        cell: &Cached,
        f: impl FnOnce() -> Result<IntegralResult>,
    ) -> Result<IntegralResult> {
        cell.get_or_init(f).clone()
    }

    fn quad(&self, amplitude: f64, alpha: f64, factors: &[(f64, u32)]) -> Result<IntegralResult> {
        let f = RadialIntegrand::new(amplitude, alpha, factors)?;
        integrate_with(&f, &self.quad)
    }

    fn require_regulator(&self, what: &'static str) -> Result<()> {
        if self.scheme.is_one_dimensional() {
            return Err(Error::domain(what, 0.0, "eps > 0"));
        }
        Ok(())
    }

    fn s(&self) -> &RegScheme {
        &self.scheme
    }

    fn m2(&self) -> f64 {
        self.scheme.m() * self.scheme.m()
    }

    /// `m^{-D} c_D² S_D ∫ z K_ν²`.
    pub fn delta_sq_quadrature(&self) -> Result<IntegralResult> {
        self.cached(&self.delta_sq, || {
            let s = self.s();
            let pre = s.c_d().powi(2) * s.radial_measure();
            self.quad(pre, 1.0, &[(s.nu_delta(), 2)])
        })
    }

    /// `m^{2-D} c_D² S_D ∫ z K_μ²`.
    pub fn grad_sq_quadrature(&self) -> Result<IntegralResult> {
        self.cached(&self.grad_sq, || {
            let s = self.s();
            let pre = self.m2() * s.c_d().powi(2) * s.radial_measure();
            self.quad(pre, 1.0, &[(s.nu_grad(), 2)])
        })
    }

    /// `m⁴ ∫Δ²|_quad - 2m² Δ₀`.
    pub fn lap_sq_quadrature(&self) -> Result<IntegralResult> {
        let m2 = self.m2();
        Ok(IntegralResult::linear(
            -2.0 * m2 * delta_at_zero(self.s()),
            &[(m2 * m2, self.delta_sq_quadrature()?)],
        ))
    }

    /// `m^{-D} c_D⁴ S_D ∫ z^{3-D} K_ν⁴`.
    pub fn delta_4_quadrature(&self) -> Result<IntegralResult> {
        self.cached(&self.delta_4, || {
            let s = self.s();
            let pre = s.c_d().powi(4) * s.radial_measure();
            self.quad(pre, 3.0 - s.dim(), &[(s.nu_delta(), 4)])
        })
    }

    /// `m^{2-D} c_D⁴ S_D ∫ z^{3-D} K_ν² K_μ²`.
    pub fn dsq_gradsq_quadrature(&self) -> Result<IntegralResult> {
        self.cached(&self.dsq_gradsq, || {
            let s = self.s();
            let pre = self.m2() * s.c_d().powi(4) * s.radial_measure();
            self.quad(pre, 3.0 - s.dim(), &[(s.nu_delta(), 2), (s.nu_grad(), 2)])
        })
    }

    /// `(1/3)[Δ₀³ - m² ∫Δ⁴|_quad]`, the reduction applied to quadrature input.
    pub fn dsq_gradsq_reduction(&self) -> Result<IntegralResult> {
        let d0 = delta_at_zero(self.s());
        Ok(IntegralResult::linear(
            d0.powi(3) / 3.0,
            &[(-self.m2() / 3.0, self.delta_4_quadrature()?)],
        ))
    }

    /// `∫ z^{2-D} K_ν K_μ³`, the bare integral inside `I_D`. Its origin
    /// exponent is `-1 + 2ε`.
    pub fn i_singular_bare(&self) -> Result<IntegralResult> {
        self.cached(&self.i_raw, || {
            self.require_regulator("i_singular quadrature")?;
            let s = self.s();
            self.quad(1.0, 2.0 - s.dim(), &[(s.nu_delta(), 1), (s.nu_grad(), 3)])
        })
    }

    /// `(D-1) m^{4-D} c_D⁴ S_D ∫ z^{2-D} K_ν K_μ³`.
    pub fn i_singular_quadrature(&self) -> Result<IntegralResult> {
        let s = self.s();
        let pre = (s.dim() - 1.0) * self.m2() * self.m2() * s.c_d().powi(4) * s.radial_measure();
        Ok(self.i_singular_bare()?.scaled(pre))
    }

    pub fn mixed_quadrature(&self) -> Result<IntegralResult> {
        Ok(IntegralResult::linear(
            0.0,
            &[
                (self.m2(), self.dsq_gradsq_quadrature()?),
                (1.0, self.i_singular_quadrature()?),
            ],
        ))
    }

    pub fn gradsq_gradsq_quadrature(&self) -> Result<IntegralResult> {
        Ok(IntegralResult::linear(
            0.0,
            &[
                (-3.0 * self.m2(), self.dsq_gradsq_quadrature()?),
                (-2.0, self.i_singular_quadrature()?),
            ],
        ))
    }

    /// `-2m²Δ₀³ + m⁴∫Δ⁴` with both evaluated at `D = 1`.
    pub fn dsq_lapsq_quadrature(&self) -> Result<IntegralResult> {
        let m = self.scheme.m();
        let one = RegScheme::one_dimensional(m)?;
        let d4 = self.cached(&self.delta_4_one, || {
            let pre = one.c_d().powi(4) * one.radial_measure();
            let f = RadialIntegrand::new(pre, 2.0, &[(0.5, 4)])?;
            integrate_with(&f, &self.quad)
        })?;
        let m2 = self.m2();
        Ok(IntegralResult::linear(
            -2.0 * m2 * delta_at_zero(&one).powi(3),
            &[(m2 * m2, d4)],
        ))
    }

    pub fn dsq_hesssq_quadrature(&self) -> Result<IntegralResult> {
        Ok(IntegralResult::linear(
            0.0,
            &[
                (1.0, self.dsq_lapsq_quadrature()?),
                (-2.0, self.i_singular_quadrature()?),
            ],
        ))
    }

    /// `(D-1)[∫ K_μ K_ν dz + μ ∫ z^{-1} K_μ² dz]`. The two integrals diverge
    /// separately at the origin; their logarithmic parts cancel and the
    /// remaining power divergences are continued analytically.
    pub fn omitted_term(&self) -> Result<IntegralResult> {
        self.cached(&self.omitted, || {
            let s = self.s();
            if !(s.eps() > 0.0 && s.eps() <= 0.2) {
                return Err(Error::domain("omitted_term eps", s.eps(), "(0, 0.2]"));
            }
            let pre = s.dim() - 1.0;
            let (nu, mu) = (s.nu_delta(), s.nu_grad());
            let terms = [
                RadialIntegrand::new(pre, 0.0, &[(mu, 1), (nu, 1)])?,
                RadialIntegrand::new(pre * mu, -1.0, &[(mu, 2)])?,
            ];
            integrate_continued(&terms, self.quad.rel_tol)
        })
    }

    /// `m⁴∫Δ² + 2m²∫Δ_μ² + ∫Δ_μμ²` from quadrature values.
    pub fn sum_rule_quadrature(&self) -> Result<IntegralResult> {
        let m2 = self.m2();
        let lap = self.lap_sq_quadrature()?;
        Ok(IntegralResult::linear(
            0.0,
            &[
                (m2 * m2, self.delta_sq_quadrature()?),
                (2.0 * m2, self.grad_sq_quadrature()?),
                (1.0, lap),
            ],
        ))
    }

    /// `Δ₀ - m²∫Δ² - ∫Δ_μ²` from quadrature values, relative to `Δ₀`.
    pub fn grad_sq_identity_residual(&self) -> Result<f64> {
        let d0 = delta_at_zero(self.s());
        let r =
            d0 - self.m2() * self.delta_sq_quadrature()?.value - self.grad_sq_quadrature()?.value;
        Ok((r / d0).abs())
    }

    /// Relative gap between `∫Δ²Δ_μ²` by direct quadrature and by reduction.
    pub fn dsq_gradsq_reduction_residual(&self) -> Result<f64> {
        let direct = self.dsq_gradsq_quadrature()?.value;
        let reduced = self.dsq_gradsq_reduction()?.value;
        Ok(((direct - reduced) / direct).abs())
    }

    /// Integration by parts of the bare `I_D` integrand.
    pub fn partial_integration(&self) -> Result<PartialIntegration> {
        self.require_regulator("partial integration")?;
        let s = self.s();
        let (nu, mu, d) = (s.nu_delta(), s.nu_grad(), s.dim());
        // (K_μ²)' = -2 K_μ K_ν - (2μ/z) K_μ², using K_{μ-1} = K_ν
        let terms = [
            RadialIntegrand::new(-2.0, 2.0 - d, &[(nu, 3), (mu, 1)])?,
            RadialIntegrand::new(-2.0 * mu, 1.0 - d, &[(nu, 2), (mu, 2)])?,
        ];
        let lhs = integrate_continued(&terms, self.quad.rel_tol)?;
        let f0 = 2f64.powf(nu - 1.0) * g(nu);
        let boundary = f0 * f0 * 0.5 * g(mu) * g(-mu);
        let rhs = self.i_singular_bare()?.scaled(2.0);
        Ok(PartialIntegration { lhs, boundary, rhs })
    }

    pub fn quadrature(&self, name: IntegralName) -> Result<IntegralResult> {
        match name {
            IntegralName::DeltaSq => self.delta_sq_quadrature(),
            IntegralName::GradSq => self.grad_sq_quadrature(),
            IntegralName::LapSq => self.lap_sq_quadrature(),
            IntegralName::Delta4 => self.delta_4_quadrature(),
            IntegralName::DsqGradsq => self.dsq_gradsq_quadrature(),
            IntegralName::ISingular => self.i_singular_quadrature(),
            IntegralName::MixedDgdgHess => self.mixed_quadrature(),
            IntegralName::GradsqGradsq => self.gradsq_gradsq_quadrature(),
            IntegralName::DsqLapsq => self.dsq_lapsq_quadrature(),
            IntegralName::DsqHesssq => self.dsq_hesssq_quadrature(),
            IntegralName::OmittedTerm => self.omitted_term(),
            IntegralName::DeltaSqSumRule => self.sum_rule_quadrature(),
        }
    }

    pub fn analytic(&self, name: IntegralName) -> IntegralResult {
        IntegralResult::analytic(analytic::value(name, &self.scheme))
    }

    pub fn dual(&self, name: IntegralName) -> Result<DualResult> {
        let quadrature = if self.scheme.is_one_dimensional() && name.needs_regulator() {
            None
        } else {
            Some(self.quadrature(name)?)
        };
        Ok(DualResult {
            analytic: self.analytic(name),
            quadrature,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Law = fn(f64) -> f64;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn scheme(m: f64, eps: f64) -> RegScheme {
        RegScheme::new(m, eps).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for n in IntegralName::ALL {
            assert_eq!(n.tag().parse::<IntegralName>().unwrap(), n);
        }
        match "bogus".parse::<IntegralName>() {
            Err(Error::UnknownName { valid, .. }) => assert!(valid.contains("i_singular")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn one_dimensional_limits() {
        for m in [0.5, 1.0, 2.0, 7.0] {
            let s = RegScheme::one_dimensional(m).unwrap();
            for n in IntegralName::ALL {
                let want = n.limit(m);
                let got = analytic::value(n, &s);
                let scale = want.abs().max(m.powi(2) * analytic::delta_sq(&s));
                assert!(
                    (got - want).abs() <= 1e-13 * scale,
                    "{n} m={m}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn dsq_lapsq_arithmetic() {
        let m: f64 = 1.0;
        let v = -2.0 * m * m / (8.0 * m.powi(3)) + m.powi(4) / (32.0 * m.powi(5));
        assert_eq!(v, -7.0 / 32.0);
        let s = scheme(7.0, 0.1);
        assert!(rel(analytic::dsq_lapsq(&s), -1.0 / 32.0) < 1e-14);
    }

    #[test]
    fn sum_rule_cancels_analytically() {
        for eps in [0.2, 0.1, 0.05, 0.025] {
            for m in [1.0, 2.0] {
                let s = scheme(m, eps);
                let t = analytic::sum_rule_terms(&s);
                let big = t.iter().fold(0.0f64, |a, x| a.max(x.abs()));
                assert!(analytic::sum_rule(&s).abs() <= 1e-12 * big);
            }
        }
    }

    #[test]
    fn cross_closure_analytic() {
        for eps in [0.2, 0.1, 0.05] {
            let s = scheme(1.5, eps);
            let v = analytic::gradsq_gradsq(&s)
                + 3.0 * s.m() * s.m() * analytic::dsq_gradsq(&s)
                + 2.0 * analytic::i_singular(&s);
            assert!(v.abs() <= 1e-12 * analytic::gradsq_gradsq(&s).abs());
        }
    }

    #[test]
    fn mass_scaling_of_analytic_paths() {
        let laws: [(IntegralName, Law); 5] = [
            (IntegralName::DeltaSq, |d| d - 4.0),
            (IntegralName::GradSq, |d| d - 2.0),
            (IntegralName::LapSq, |d| d),
            (IntegralName::Delta4, |d| 3.0 * d - 8.0),
            (IntegralName::ISingular, |d| 3.0 * d - 4.0),
        ];
        let lambda: f64 = 2.0;
        for eps in [0.2, 0.05] {
            let s = scheme(0.8, eps);
            let t = scheme(0.8 * lambda, eps);
            for (n, law) in laws {
                let want = lambda.powf(law(s.dim())) * analytic::value(n, &s);
                assert!(rel(analytic::value(n, &t), want) < 1e-10, "{n}");
            }
        }
    }

    #[test]
    fn omitted_gamma_form_vanishes_linearly() {
        let a = analytic::omitted_term_gamma_form(&scheme(1.0, 0.1));
        let b = analytic::omitted_term_gamma_form(&scheme(1.0, 0.05));
        assert!(rel(a, 0.089321593083975015) < 1e-12);
        assert!(rel(a / b, 2.0) < 0.25);
    }
}
