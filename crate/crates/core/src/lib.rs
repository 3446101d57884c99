//! Dimensionally regularized configuration-space integrals over products of
//! distributions.
//!
//! The massive propagator of `-∂² + m²` in `D = 1 - ε` dimensions is written
//! in terms of modified Bessel functions `K_ν`. Integrals over products of the
//! propagator and its derivatives reduce to one-dimensional radial integrals of
//! Bessel products, which are evaluated both in closed form and by quadrature
//! at finite `ε`, then extrapolated to `ε → 0`.
//!
//! Module layout:
//!
//! - [`specfun`]: Gamma function and `K_ν` for fractional order.
//! - [`propagator`]: the regularization point [`RegScheme`] and the pointwise
//!   propagator, gradient and Hessian profiles.
//! - [`quadrature`]: adaptive radial integration with graded endpoint handling.
//! - [`integrals`]: the catalogue of two- and four-propagator integrals.
//! - [`diagrams`]: the eight three-loop diagrams and the energy expansion.
//! - [`extrapolate`]: polynomial (Richardson) extrapolation in `ε`.

#![allow(clippy::excessive_precision)]

pub mod diagrams;
pub mod error;
pub mod extrapolate;
pub mod integrals;
pub mod propagator;
pub mod quadrature;
pub mod specfun;

pub use diagrams::{DiagramId, DiagramReport, EnergyExpansion};
pub use error::{Error, Result};
pub use extrapolate::{EpsSeries, Extrapolation};
pub use integrals::{Catalogue, DualResult, IntegralName};
pub use propagator::{RadialPoint, RegScheme};
pub use quadrature::{IntegralResult, Method, QuadOptions, RadialIntegrand};
pub use specfun::BesselOrder;
