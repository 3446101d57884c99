//! The eight three-loop vacuum diagrams and the ground-state energy
//! `E = m/2 + g e₁ + g² e₂`.
//!
//! | tag                    | value                       | weight   |
//! |------------------------|-----------------------------|----------|
//! | `d6_local`             | `-Δ₀ Δ_μμ(0)`               | `-g`     |
//! | `d7_local`             | `-Δ₀² Δ_μμ(0)`              | `9/2 g²` |
//! | `d8_chain_d0`          | `-Δ₀ Δ_μμ(0) ∫Δ_μ²`         | `-2 g²`  |
//! | `d9_chain_hh`          | `Δ₀² ∫Δ_μμ²`                | `-g²`    |
//! | `d10_chain_00`         | `Δ_μμ(0)² ∫Δ²`              | `-g²`    |
//! | `d11_watermelon_hess`  | `∫Δ² Δ_μν²`                 | `-2 g²`  |
//! | `d12_watermelon_mixed` | `∫Δ Δ_μ Δ_ν Δ_μν`           | `-8 g²`  |
//! | `d13_watermelon_grad`  | `∫Δ_μ² Δ_ν²`                | `-2 g²`  |
//!
//! No diagram carries `δ^{(D)}(0)`: those vanish in dimensional
//! regularization, together with the Jacobian diagrams that would cancel them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::extrapolate::{reduce_mass, richardson, EpsSeries, Extrapolation};
use crate::integrals::{analytic, Catalogue};
use crate::propagator::{delta_at_zero, delta_lap_at_zero, RegScheme};
use crate::quadrature::IntegralResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramId {
    D6Local,
    D7Local,
    D8ChainD0,
    D9ChainHh,
    D10Chain00,
    D11WatermelonHess,
    D12WatermelonMixed,
    D13WatermelonGrad,
}

impl DiagramId {
    pub const ALL: [DiagramId; 8] = [
        DiagramId::D6Local,
        DiagramId::D7Local,
        DiagramId::D8ChainD0,
        DiagramId::D9ChainHh,
        DiagramId::D10Chain00,
        DiagramId::D11WatermelonHess,
        DiagramId::D12WatermelonMixed,
        DiagramId::D13WatermelonGrad,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            DiagramId::D6Local => "d6_local",
            DiagramId::D7Local => "d7_local",
            DiagramId::D8ChainD0 => "d8_chain_d0",
            DiagramId::D9ChainHh => "d9_chain_hh",
            DiagramId::D10Chain00 => "d10_chain_00",
            DiagramId::D11WatermelonHess => "d11_watermelon_hess",
            DiagramId::D12WatermelonMixed => "d12_watermelon_mixed",
            DiagramId::D13WatermelonGrad => "d13_watermelon_grad",
        }
    }

    /// Power of `g` the diagram contributes to.
    pub fn order(self) -> u32 {
        match self {
            DiagramId::D6Local => 1,
            _ => 2,
        }
    }

    /// Coefficient of `g^order · value` in the energy.
    pub fn weight(self) -> f64 {
        match self {
            DiagramId::D6Local => -1.0,
            DiagramId::D7Local => 4.5,
            DiagramId::D8ChainD0 => -2.0,
            DiagramId::D9ChainHh => -1.0,
            DiagramId::D10Chain00 => -1.0,
            DiagramId::D11WatermelonHess => -2.0,
            DiagramId::D12WatermelonMixed => -8.0,
            DiagramId::D13WatermelonGrad => -2.0,
        }
    }

    /// Exponent `k(D)` in `value ∝ m^{k(D)}`.
    pub fn mass_dimension(self, d: f64) -> f64 {
        match self {
            DiagramId::D6Local => 2.0 * d - 2.0,
            _ => 3.0 * d - 4.0,
        }
    }

    /// Value at `D = 1`.
    pub fn exact_limit(self, m: f64) -> f64 {
        match self {
            DiagramId::D6Local => -0.25,
            DiagramId::D7Local => -1.0 / (8.0 * m),
            DiagramId::D8ChainD0 => -1.0 / (16.0 * m),
            DiagramId::D9ChainHh => -3.0 / (16.0 * m),
            DiagramId::D10Chain00 => 1.0 / (16.0 * m),
            DiagramId::D11WatermelonHess => -3.0 / (32.0 * m),
            DiagramId::D12WatermelonMixed => -1.0 / (32.0 * m),
            DiagramId::D13WatermelonGrad => 1.0 / (32.0 * m),
        }
    }
}

impl fmt::Display for DiagramId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for DiagramId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DiagramId::ALL
            .iter()
            .copied()
            .find(|d| d.tag() == s)
            .ok_or_else(|| Error::UnknownName {
                kind: "diagram",
                name: s.to_string(),
                valid: DiagramId::ALL.map(|d| d.tag()).join(", "),
            })
    }
}

/// Diagram value from closed forms only; exact at `D = 1`.
pub fn analytic_value(id: DiagramId, s: &RegScheme) -> f64 {
    let d0 = delta_at_zero(s);
    let l0 = delta_lap_at_zero(s);
    match id {
        DiagramId::D6Local => -d0 * l0,
        DiagramId::D7Local => -d0 * d0 * l0,
        DiagramId::D8ChainD0 => -d0 * l0 * analytic::grad_sq(s),
        DiagramId::D9ChainHh => d0 * d0 * analytic::lap_sq(s),
        DiagramId::D10Chain00 => l0 * l0 * analytic::delta_sq(s),
        DiagramId::D11WatermelonHess => analytic::dsq_hesssq(s),
        DiagramId::D12WatermelonMixed => analytic::mixed(s),
        DiagramId::D13WatermelonGrad => analytic::gradsq_gradsq(s),
    }
}

/// Diagram value with every integral taken from its quadrature path.
pub fn quadrature_value(id: DiagramId, cat: &Catalogue) -> Result<IntegralResult> {
    let s = cat.scheme();
    let d0 = delta_at_zero(s);
    let l0 = delta_lap_at_zero(s);
    Ok(match id {
        DiagramId::D6Local => IntegralResult::analytic(-d0 * l0),
        DiagramId::D7Local => IntegralResult::analytic(-d0 * d0 * l0),
        DiagramId::D8ChainD0 => cat.grad_sq_quadrature()?.scaled(-d0 * l0),
        DiagramId::D9ChainHh => cat.lap_sq_quadrature()?.scaled(d0 * d0),
        DiagramId::D10Chain00 => cat.delta_sq_quadrature()?.scaled(l0 * l0),
        DiagramId::D11WatermelonHess => cat.dsq_hesssq_quadrature()?,
        DiagramId::D12WatermelonMixed => cat.mixed_quadrature()?,
        DiagramId::D13WatermelonGrad => cat.gradsq_gradsq_quadrature()?,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagramReport {
    pub id: DiagramId,
    /// Analytic value at `D = 1`.
    pub analytic_limit: f64,
    pub eps_samples: EpsSeries,
    pub extrapolation: Extrapolation,
    pub value_limit: f64,
    pub exact_limit: f64,
    pub rel_err: f64,
}

impl DiagramReport {
    /// Samples the quadrature path on each catalogue's `ε` and extrapolates.
    ///
    /// Each sample is multiplied by `m^{k(1) - k(D)}` before fitting, which
    /// removes the `ε`-dependence of the overall mass dimension and leaves the
    /// limit unchanged. `eps_samples` holds the unscaled values.
    pub fn build(id: DiagramId, cats: &[Catalogue], degree: usize) -> Result<Self> {
        let m = cats
            .first()
            .ok_or_else(|| Error::InvalidSeries("no catalogue points".into()))?
            .scheme()
            .m();
        let samples = cats
            .iter()
            .map(|c| Ok((c.scheme().eps(), quadrature_value(id, c)?.value)))
            .collect::<Result<Vec<_>>>()?;
        let reduced = reduce_mass(&samples, m, |d| id.mass_dimension(d));
        let eps_samples = EpsSeries::new(samples)?;
        let extrapolation = richardson(&EpsSeries::new(reduced)?, degree)?;
        let exact_limit = id.exact_limit(m);
        let value_limit = extrapolation.limit;
        Ok(DiagramReport {
            id,
            analytic_limit: analytic_value(id, &RegScheme::one_dimensional(m)?),
            eps_samples,
            extrapolation,
            value_limit,
            exact_limit,
            rel_err: ((value_limit - exact_limit) / exact_limit).abs(),
        })
    }
}

/// `E(g) = e0 + g e1 + g² e2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyExpansion {
    pub e0: f64,
    pub e1: f64,
    pub e2: f64,
}

impl EnergyExpansion {
    /// Weighted sum of diagram values; `value` must be defined for all ids.
    pub fn from_diagrams(m: f64, mut value: impl FnMut(DiagramId) -> f64) -> Self {
        let mut e = EnergyExpansion {
            e0: 0.5 * m,
            e1: 0.0,
            e2: 0.0,
        };
        for id in DiagramId::ALL {
            let c = id.weight() * value(id);
            match id.order() {
                1 => e.e1 += c,
                _ => e.e2 += c,
            }
        }
        e
    }

    /// Contributions `[e0, g e1, g² e2]` truncated at `order`.
    pub fn terms(&self, g: f64, order: u32) -> [f64; 3] {
        let t = [self.e0, g * self.e1, g * g * self.e2];
        let mut out = [0.0; 3];
        for (i, v) in t.iter().enumerate().take(order as usize + 1) {
            out[i] = *v;
        }
        out
    }

    pub fn total(&self, g: f64, order: u32) -> f64 {
        self.terms(g, order).iter().sum()
    }
}

/// The expansion from analytic diagram values at `D = 1`.
pub fn energy_expansion(m: f64) -> Result<EnergyExpansion> {
    let s = RegScheme::one_dimensional(m)?;
    Ok(EnergyExpansion::from_diagrams(m, |id| {
        analytic_value(id, &s)
    }))
}

/// Ground-state energy through `g^order`.
pub fn energy(g: f64, m: f64, order: u32) -> Result<f64> {
    if !(g >= 0.0 && g.is_finite()) {
        return Err(Error::domain("g", g, "[0, ∞)"));
    }
    if order > 2 {
        return Err(Error::domain("order", order as f64, "{0, 1, 2}"));
    }
    Ok(energy_expansion(m)?.total(g, order))
}
