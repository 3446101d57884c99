use std::f64::consts::PI;

use super::gamma::{gamma, rgamma1p, RGAMMA};
use crate::error::{Error, Result};
use crate::quadrature::rule;

/// Order `ν` of a modified Bessel function, restricted to `0 < ν < 2`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if nu > 0.0 && nu < 2.0 {
            Ok(BesselOrder(nu))
        } else {
            Err(Error::domain("bessel order", nu, "(0, 2)"))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

pub const Z_MIN: f64 = 1e-8;
pub const Z_MAX: f64 = 700.0;

/// Switch between the Temme series and Steed's continued fraction.
pub(crate) const SEAM: f64 = 2.0;

/// Below this `z^ν K_ν(z)` equals its origin value to double precision for
/// the orders used by the propagators (`ν ≥ 1/4`).
const Z_TINY: f64 = 1e-30;

const MAX_ITER: usize = 10_000;

/// `K_ν(z)` for `0 < ν < 2`, `z ∈ [1e-8, 700]`.
pub fn besselk(order: BesselOrder, z: f64) -> Result<f64> {
    if !(Z_MIN..=Z_MAX).contains(&z) {
        return Err(Error::domain("z", z, "[1e-8, 700]"));
    }
    Ok(k_unchecked(order.0, z))
}

/// Leading small-argument form `Γ(ν)/2 · (z/2)^(-ν)`.
pub fn besselk_small_z(order: BesselOrder, z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 0.1) {
        return Err(Error::domain("z", z, "(0, 0.1)"));
    }
    let nu = order.0;
    Ok(0.5 * gamma(nu)? * (0.5 * z).powf(-nu))
}

/// `K_ν(z)` from the cosine integral representation
///
/// `K_ν(z) = π^(-1/2) (z/2)^(-ν) Γ(ν + 1/2) ∫₀^∞ cosh(t)^(-2ν) cos(z sinh t) dt`.
///
/// The `t` axis is cut at the zeros of `cos(z sinh t)`, each lobe is integrated
/// adaptively and the alternating series of lobes is summed with Wynn's epsilon
/// algorithm. Independent of the series/continued-fraction path used by
/// [`besselk`], so it serves as a cross-check.
///
/// For large `z` the lobes cancel down to `O(e^-z)`; once the rounding floor
/// exceeds the target accuracy a [`Error::NonConvergence`] is returned. In
/// practice this limits the useful range to `z ≲ 15`.
pub fn besselk_integral_rep(order: BesselOrder, z: f64) -> Result<f64> {
    const TARGET: f64 = 1e-9;
    const LOBES: usize = 64;

    let nu = order.0;
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::domain("bessel order", nu, "(0, 1)"));
    }
    if !(1e-6..=50.0).contains(&z) {
        return Err(Error::domain("z", z, "[1e-6, 50]"));
    }

    let integrand = |t: f64| t.cosh().powf(-2.0 * nu) * (z * t.sinh()).cos();
    let mut partial = Vec::with_capacity(LOBES);
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut quad_err = 0.0;
    let mut lo = 0.0;
    for k in 0..LOBES {
        let hi = (((k as f64) + 0.5) * PI / z).asinh();
        let lobe = rule::adaptive(&integrand, lo, hi, 1e-15, 1e-14, 200);
        sum += lobe.value;
        abs_sum += lobe.value.abs();
        quad_err += lobe.error;
        partial.push(sum);
        lo = hi;
    }
    let (value, tail_err) = wynn_epsilon(&partial);
    let err = tail_err + quad_err + 64.0 * f64::EPSILON * abs_sum;
    let prefactor = PI.powf(-0.5) * (0.5 * z).powf(-nu) * gamma(nu + 0.5)?;
    let result = prefactor * value;
    if err.is_nan() || err > TARGET * value.abs() {
        return Err(Error::NonConvergence {
            partial: result,
            achieved: err / value.abs(),
            requested: TARGET,
        });
    }
    Ok(result)
}

/// Wynn's epsilon algorithm on a sequence of partial sums. Returns the last
/// even-column estimate and the difference to the previous one.
fn wynn_epsilon(s: &[f64]) -> (f64, f64) {
    let n = s.len();
    let mut prev = vec![0.0; n + 1];
    let mut cur: Vec<f64> = s.to_vec();
    let mut best = *s.last().unwrap();
    let mut best_err = (s[n - 1] - s[n - 2]).abs();
    let mut col = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for j in 0..cur.len() - 1 {
            let diff = cur[j + 1] - cur[j];
            if diff == 0.0 {
                return (best, best_err);
            }
            next.push(prev[j + 1] + 1.0 / diff);
        }
        col += 1;
        if col % 2 == 0 && next.len() >= 2 {
            let last = next[next.len() - 1];
            let err = (last - next[next.len() - 2]).abs();
            if err <= best_err {
                best = last;
                best_err = err;
            }
        }
        prev = cur;
        cur = next;
    }
    (best, best_err)
}

/// `K_ν(x)` without domain checks; `x > 0`. Underflows to zero for `x ≳ 745`.
pub(crate) fn k_unchecked(nu: f64, x: f64) -> f64 {
    let shifts = (nu + 0.5).floor();
    let mu = nu - shifts;
    let (mut k_mu, mut k_mu1) = if x < SEAM {
        temme_pair(mu, x)
    } else {
        steed_pair(mu, x)
    };
    // upward recurrence K_{μ+1} = K_{μ-1} + 2μ/x K_μ is stable for K
    for i in 1..=(shifts as usize) {
        let next = 2.0 * (mu + i as f64) / x * k_mu1 + k_mu;
        k_mu = k_mu1;
        k_mu1 = next;
    }
    k_mu
}

/// `z^ν K_ν(z)` on `z ≥ 0`, finite at the origin for `ν > 0`.
pub(crate) fn zpow_besselk(nu: f64, z: f64) -> f64 {
    if z < Z_TINY {
        return zpow_besselk_limit(nu);
    }
    z.powf(nu) * k_unchecked(nu, z)
}

/// `lim_{z→0} z^ν K_ν(z) = 2^(ν-1) Γ(ν)`.
pub(crate) fn zpow_besselk_limit(nu: f64) -> f64 {
    let g = gamma(nu).expect("positive order");
    2f64.powf(nu - 1.0) * g
}

/// `(gam1, gam2, 1/Γ(1+μ), 1/Γ(1-μ))` for `|μ| ≤ 1/2`, with
/// `gam1 = (1/Γ(1-μ) - 1/Γ(1+μ)) / 2μ` and `gam2 = (1/Γ(1-μ) + 1/Γ(1+μ)) / 2`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mu2 = mu * mu;
    // even-index coefficients build gam1, odd-index ones build gam2
    let mut gam1 = 0.0;
    let mut gam2 = 0.0;
    for k in (1..RGAMMA.len()).rev() {
        if k % 2 == 0 {
            gam1 = gam1 * mu2 - RGAMMA[k];
        } else {
            gam2 = gam2 * mu2 + RGAMMA[k];
        }
    }
    (gam1, gam2, rgamma1p(mu), rgamma1p(-mu))
}

/// Temme's series for `(K_μ(x), K_{μ+1}(x))`, `|μ| ≤ 1/2`, small `x`.
pub(crate) fn temme_pair(mu: f64, x: f64) -> (f64, f64) {
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < 1e-16 {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < 1e-16 { 1.0 } else { e.sinh() / e };
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let ee = e.exp();
    let mut p = 0.5 * ee / gampl;
    let mut q = 0.5 / (ee * gammi);
    let mut c = 1.0;
    let dd = x2 * x2;
    let mut sum1 = p;
    let mu2 = mu * mu;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        sum1 += c * (p - fi * ff);
        if del.abs() < sum.abs() * 1e-17 {
            break;
        }
    }
    (sum, sum1 * 2.0 / x)
}

/// Steed's continued fraction (CF2) for `(K_μ(x), K_{μ+1}(x))`, `x ≳ 1`.
pub(crate) fn steed_pair(mu: f64, x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu * mu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    let h = a1 * h;
    let k_mu = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
    (k_mu, k_mu1)
}

/// Generalized power series of `K_ν(z)` for `0 < ν < 1`:
///
/// `K_ν(z) = Σ_k Γ(ν)/2 (z/2)^(2k-ν) / (k! (1-ν)_k) + Γ(-ν)/2 (z/2)^(2k+ν) / (k! (1+ν)_k)`.
///
/// Returns `(exponent, coefficient)` pairs in powers of `z` for `k < terms`.
pub(crate) fn besselk_series_terms(nu: f64, terms: usize) -> Result<Vec<(f64, f64)>> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::domain("series order", nu, "(0, 1)"));
    }
    let mut out = Vec::with_capacity(2 * terms);
    let mut a = 0.5 * gamma(nu)? * 2f64.powf(nu);
    let mut b = 0.5 * gamma(-nu)? * 2f64.powf(-nu);
    for k in 0..terms {
        let fk = k as f64;
        if k > 0 {
            a /= 4.0 * fk * (fk - nu);
            b /= 4.0 * fk * (fk + nu);
        }
        out.push((2.0 * fk - nu, a));
        out.push((2.0 * fk + nu, b));
    }
    Ok(out)
}
