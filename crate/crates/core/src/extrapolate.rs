//! Polynomial extrapolation of `ε`-sampled values to `ε = 0`.

use crate::error::{Error, Result};

/// Default sampling grid.
pub const DEFAULT_GRID: [f64; 4] = [0.2, 0.1, 0.05, 0.025];

/// Default fit degree: a cubic through all four default samples.
pub const DEFAULT_DEGREE: usize = 3;

const MIN_SAMPLES: usize = 3;
const MIN_RATIO: f64 = 1.5;
const MAX_RATIO: f64 = 4.0;

/// Samples `(ε_k, value_k)` with strictly decreasing `ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsSeries {
    samples: Vec<(f64, f64)>,
}

impl EpsSeries {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        if samples.len() < MIN_SAMPLES {
            return Err(Error::InvalidSeries(format!(
                "{} samples given, at least {MIN_SAMPLES} required",
                samples.len()
            )));
        }
        validate_grid(&samples.iter().map(|s| s.0).collect::<Vec<_>>())?;
        if let Some(s) = samples.iter().find(|s| !s.1.is_finite()) {
            return Err(Error::InvalidSeries(format!(
                "non-finite value at eps = {}",
                s.0
            )));
        }
        Ok(EpsSeries { samples })
    }

    pub fn from_fn(grid: &[f64], f: impl FnMut(f64) -> f64) -> Result<Self> {
        let mut f = f;
        EpsSeries::new(grid.iter().map(|&e| (e, f(e))).collect())
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Checks that a grid is usable for extrapolation: positive, strictly
/// decreasing, neighbor ratios within `[1.5, 4]`.
pub fn validate_grid(eps: &[f64]) -> Result<()> {
    if let Some(e) = eps.iter().find(|e| !(**e > 0.0 && e.is_finite())) {
        return Err(Error::DegenerateGrid(format!("eps = {e} is not positive")));
    }
    for w in eps.windows(2) {
        if w[1] == w[0] {
            return Err(Error::DegenerateGrid(format!(
                "eps = {} appears twice",
                w[0]
            )));
        }
        if w[1] > w[0] {
            return Err(Error::DegenerateGrid(format!(
                "eps must decrease strictly: {} follows {}",
                w[1], w[0]
            )));
        }
        let ratio = w[0] / w[1];
        if !(MIN_RATIO..=MAX_RATIO).contains(&ratio) {
            return Err(Error::DegenerateGrid(format!(
                "neighbor ratio {} / {} = {ratio} outside [{MIN_RATIO}, {MAX_RATIO}]",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}

/// Multiplies each sample by `m^{k(1) - k(D)}`, `D = 1 - ε`, for a quantity
/// scaling as `m^{k(D)}`. The result has the `ε`-dependence of the `m = 1`
/// series and the same limit.
pub fn reduce_mass(samples: &[(f64, f64)], m: f64, k: impl Fn(f64) -> f64) -> Vec<(f64, f64)> {
    let k1 = k(1.0);
    samples
        .iter()
        .map(|&(e, v)| (e, v * m.powf(k1 - k(1.0 - e))))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolation {
    pub limit: f64,
    pub error: f64,
    pub degree: usize,
}

/// Value at `ε = 0` of the interpolating polynomial through `points`.
fn neville_at_zero(points: &[(f64, f64)]) -> f64 {
    let mut p: Vec<f64> = points.iter().map(|s| s.1).collect();
    let n = p.len();
    for k in 1..n {
        for i in 0..n - k {
            let (xi, xk) = (points[i].0, points[i + k].0);
            p[i] = (xi * p[i + 1] - xk * p[i]) / (xi - xk);
        }
    }
    p[0]
}

/// Fits a polynomial of `degree` through the last `degree + 1` samples and
/// returns its constant term. The error is the change against `degree - 1`.
pub fn richardson(series: &EpsSeries, degree: usize) -> Result<Extrapolation> {
    let n = series.len();
    if degree < 1 || degree + 1 > n {
        return Err(Error::InvalidSeries(format!(
            "degree {degree} needs between 2 and {n} samples"
        )));
    }
    let s = series.samples();
    let limit = neville_at_zero(&s[n - degree - 1..]);
    let lower = neville_at_zero(&s[n - degree..]);
    Ok(Extrapolation {
        limit,
        error: (limit - lower).abs(),
        degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_quadratic() {
        let s = EpsSeries::from_fn(&[0.2, 0.1, 0.05], |e| 0.5 - 0.3 * e + 0.1 * e * e).unwrap();
        let r = richardson(&s, 2).unwrap();
        assert!((r.limit - 0.5).abs() < 1e-15);
    }

    #[test]
    fn constant_series() {
        let s = EpsSeries::from_fn(&DEFAULT_GRID, |_| -0.25).unwrap();
        for d in 1..=3 {
            let r = richardson(&s, d).unwrap();
            assert_eq!(r.limit, -0.25);
            assert_eq!(r.error, 0.0);
        }
    }

    #[test]
    fn grid_validation() {
        let bad: [&[f64]; 5] = [
            &[0.2, 0.2, 0.1],
            &[0.1, 0.2, 0.05],
            &[0.2, 0.1, 0.01],
            &[0.2, 0.15, 0.1],
            &[0.2, 0.1, 0.0],
        ];
        for g in bad {
            assert!(matches!(
                EpsSeries::from_fn(g, |e| e),
                Err(Error::DegenerateGrid(_))
            ));
        }
        assert!(matches!(
            EpsSeries::from_fn(&[0.2, 0.1], |e| e),
            Err(Error::InvalidSeries(_))
        ));
        assert!(EpsSeries::new(vec![(0.2, 1.0), (0.1, f64::NAN), (0.05, 1.0)]).is_err());
    }

    #[test]
    fn degree_bounds() {
        let s = EpsSeries::from_fn(&[0.2, 0.1, 0.05], |e| e).unwrap();
        assert!(richardson(&s, 0).is_err());
        assert!(richardson(&s, 3).is_err());
        assert!(richardson(&s, 2).is_ok());
    }
}
