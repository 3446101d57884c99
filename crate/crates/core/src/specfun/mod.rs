//! Special functions: the real Gamma function and the modified Bessel function
//! of the second kind `K_ν(z)` for fractional order `0 < ν < 2`.
//!
//! All functions are pure and reentrant.

mod bessel;
mod gamma;

pub use bessel::{besselk, besselk_integral_rep, besselk_small_z, BesselOrder};
pub use gamma::gamma;

pub(crate) use bessel::{besselk_series_terms, zpow_besselk};
