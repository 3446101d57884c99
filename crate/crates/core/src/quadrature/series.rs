//! Analytic continuation of power divergences at the origin.
//!
//! On `[0, 1]` every Bessel factor is replaced by its generalized power
//! series and the monomials are integrated exactly, with
//! `∫₀¹ z^e dz = 1/(e+1)` taken for all `e ≠ -1`. The outer panel
//! `[1, ∞)` is ordinary quadrature.

use super::{integrate_tail, IntegralResult, QuadOptions, RadialIntegrand, PANEL_SPLIT};
use crate::error::{Error, Result};
use crate::specfun::besselk_series_terms;

const SERIES_TERMS: usize = 20;
/// Monomials more than this far above the leading exponent are dropped.
const EXPONENT_WINDOW: f64 = 36.0;
const MERGE_TOL: f64 = 1e-9;

type Series = Vec<(f64, f64)>;

fn merge(mut s: Series) -> Series {
    s.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Series = Vec::with_capacity(s.len());
    for (e, c) in s {
        match out.last_mut() {
            Some(last) if (last.0 - e).abs() < MERGE_TOL => last.1 += c,
            _ => out.push((e, c)),
        }
    }
    out
}

fn multiply(a: &Series, b: &Series, cap: f64) -> Series {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &(ea, ca) in a {
        for &(eb, cb) in b {
            if ea + eb <= cap {
                out.push((ea + eb, ca * cb));
            }
        }
    }
    merge(out)
}

/// Monomial expansion of one integrand on `[0, 1]`.
fn expand(f: &RadialIntegrand) -> Result<Series> {
    let lead = f.origin_exponent();
    let cap = lead + EXPONENT_WINDOW;
    let mut acc: Series = vec![(f.alpha(), f.amplitude())];
    for factor in f.factors() {
        let k = besselk_series_terms(factor.order.value(), SERIES_TERMS)?;
        for _ in 0..factor.power {
            acc = multiply(&acc, &k, cap);
        }
    }
    Ok(acc)
}

/// `Σ_j ∫₀^∞ f_j(z) dz` with power divergences at the origin continued
/// analytically. All Bessel orders must lie in `(0, 1)`.
///
/// Monomials `z^{-1}` must cancel across the terms; a surviving coefficient
/// is a logarithmic divergence and is reported as [`Error::LogDivergence`].
pub fn integrate_continued(terms: &[RadialIntegrand], rel_tol: f64) -> Result<IntegralResult> {
    let opts = QuadOptions::with_rel_tol(rel_tol);
    opts.validate()?;
    let mut all = Vec::new();
    for f in terms {
        all.extend(expand(f)?);
    }
    let series = merge(all);
    let scale = series.iter().map(|t| t.1.abs()).fold(0.0, f64::max);
    let mut inner = 0.0;
    let mut magnitude = 0.0;
    for &(e, c) in &series {
        if (e + 1.0).abs() < MERGE_TOL {
            if c.abs() > 1e-10 * scale {
                return Err(Error::LogDivergence { coefficient: c });
            }
            continue;
        }
        let t = c / (e + 1.0) * PANEL_SPLIT.powf(e + 1.0);
        inner += t;
        magnitude += t.abs();
    }
    let mut outer = IntegralResult::quadrature(0.0, 0.0);
    for f in terms {
        let t = integrate_tail(f, PANEL_SPLIT, &opts)?;
        outer = IntegralResult::linear(0.0, &[(1.0, outer), (1.0, t)]);
    }
    let value = inner + outer.value;
    let error = outer.abs_error + 64.0 * f64::EPSILON * magnitude;
    Ok(IntegralResult::quadrature(value, error))
}
