//! Evaluation of the catalogue, diagrams and energy on an `ε` grid.

use rayon::prelude::*;

use dimreg::diagrams::{
    analytic_value, quadrature_value, DiagramId, DiagramReport, EnergyExpansion,
};
use dimreg::extrapolate::{reduce_mass, richardson, validate_grid, EpsSeries};
use dimreg::integrals::{analytic, Catalogue, IntegralName};
use dimreg::propagator::RegScheme;
use dimreg::quadrature::IntegralResult;
use dimreg::Result;

use crate::report::{Entry, ErrorKind, Num, ReportDocument, Sample, SchemeInfo};

/// Agreement required between the analytic-reduction path and the exact limits.
pub const ANALYTIC_LIMIT_TOL: f64 = 1e-10;
/// Residual allowed for the analytic sum rule, relative to its largest term.
pub const SUM_RULE_ANALYTIC_TOL: f64 = 1e-12;
/// Sum rule after extrapolation, in units of `m`.
pub const SUM_RULE_LIMIT_TOL: f64 = 1e-6;
/// Integration-by-parts residual.
pub const PARTIAL_INTEGRATION_TOL: f64 = 1e-6;

/// Integrals whose closed form is exact at every `ε`.
const EXACT_FORMS: [IntegralName; 3] = [
    IntegralName::DeltaSq,
    IntegralName::GradSq,
    IntegralName::LapSq,
];

#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub m: f64,
    pub eps: Vec<f64>,
    pub tol_quadrature: f64,
    pub tol_limit: f64,
    pub degree: usize,
}

impl Settings {
    pub fn validate(&self) -> Result<()> {
        RegScheme::new(self.m, 0.1)?;
        EpsSeries::new(self.eps.iter().map(|&e| (e, 0.0)).collect())?;
        validate_grid(&self.eps)?;
        for &e in &self.eps {
            RegScheme::new(self.m, e)?;
        }
        if !(1e-12..=1e-4).contains(&self.tol_quadrature) {
            return Err(dimreg::Error::Domain {
                what: "tol-quadrature",
                value: self.tol_quadrature,
                domain: "[1e-12, 1e-4]",
            });
        }
        if self.tol_limit.is_nan() || self.tol_limit <= 0.0 {
            return Err(dimreg::Error::Domain {
                what: "tol-limit",
                value: self.tol_limit,
                domain: "(0, ∞)",
            });
        }
        if self.degree < 1 || self.degree >= self.eps.len() {
            return Err(dimreg::Error::InvalidSeries(format!(
                "degree {} needs between 2 and {} grid points",
                self.degree,
                self.eps.len()
            )));
        }
        Ok(())
    }

    fn info(&self) -> SchemeInfo {
        SchemeInfo {
            m: Num(self.m),
            eps: self.eps.iter().map(|&e| Num(e)).collect(),
            tol_quadrature: Num(self.tol_quadrature),
            tol_limit: Num(self.tol_limit),
            degree: self.degree,
        }
    }
}

/// Catalogues on the grid, with the shared base quadratures already computed
/// in parallel. Failures are cached and reported per entry.
pub fn catalogues(s: &Settings) -> Result<Vec<Catalogue>> {
    let cats = s
        .eps
        .iter()
        .map(|&e| Ok(Catalogue::new(RegScheme::new(s.m, e)?, s.tol_quadrature)))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, u8)> = (0..cats.len())
        .flat_map(|i| (0..7).map(move |j| (i, j)))
        .collect();
    jobs.par_iter().for_each(|&(i, j)| {
        let c = &cats[i];
        let _ = match j {
            0 => c.delta_sq_quadrature(),
            1 => c.grad_sq_quadrature(),
            2 => c.delta_4_quadrature(),
            3 => c.dsq_gradsq_quadrature(),
            4 => c.i_singular_bare(),
            5 => c.dsq_lapsq_quadrature(),
            _ => c.omitted_term(),
        };
    });
    Ok(cats)
}

fn rel_err(value: f64, want: f64) -> (f64, ErrorKind) {
    if want == 0.0 {
        (value.abs(), ErrorKind::Absolute)
    } else {
        (((value - want) / want).abs(), ErrorKind::Relative)
    }
}

fn samples<'a>(
    cats: impl IntoIterator<Item = &'a Catalogue>,
    mut f: impl FnMut(&Catalogue) -> Result<(IntegralResult, f64)>,
) -> Result<Vec<Sample>> {
    cats.into_iter()
        .map(|c| {
            let (q, a) = f(c)?;
            Ok(Sample {
                eps: Num(c.scheme().eps()),
                value: Num(q.value),
                abs_error: Num(q.abs_error),
                analytic: Num(a),
            })
        })
        .collect()
}

fn extrapolate(entry: &mut Entry, m: f64, degree: usize, k: impl Fn(f64) -> f64) -> Result<f64> {
    let raw: Vec<(f64, f64)> = entry
        .quadrature
        .iter()
        .map(|s| (s.eps.0, s.value.0))
        .collect();
    let series = EpsSeries::new(reduce_mass(&raw, m, k))?;
    let r = richardson(&series, degree)?;
    entry.extrapolated = Some(Num(r.limit));
    entry.extrapolation_error = Some(Num(r.error));
    Ok(r.limit)
}

fn integral_entry(name: IntegralName, cats: &[Catalogue], s: &Settings) -> Entry {
    let tol = if name == IntegralName::DeltaSqSumRule {
        SUM_RULE_LIMIT_TOL * s.m
    } else {
        s.tol_limit
    };
    let mut e = Entry::new("integral", name.tag(), tol);
    match fill_integral(&mut e, name, cats, s) {
        Ok(()) => e,
        Err(err) => e.failed(err),
    }
}

fn fill_integral(
    e: &mut Entry,
    name: IntegralName,
    cats: &[Catalogue],
    s: &Settings,
) -> Result<()> {
    let one = RegScheme::one_dimensional(s.m)?;
    let limit = name.limit(s.m);
    e.analytic = Some(Num(analytic::value(name, &one)));
    e.exact_limit = Some(Num(limit));
    if name == IntegralName::DsqLapsq {
        // defined at D = 1 only
        let q = Catalogue::new(one, s.tol_quadrature).dsq_lapsq_quadrature()?;
        let (err, kind) = rel_err(q.value, limit);
        e.extrapolated = Some(Num(q.value));
        e.extrapolation_error = Some(Num(q.abs_error));
        e.rel_err = Some(Num(err));
        e.error_kind = kind;
        e.tolerance = Num(s.tol_quadrature);
        e.pass = err <= s.tol_quadrature;
        return Ok(());
    }
    // the omitted bracket is only continued for ε ≤ 0.2
    let grid = cats
        .iter()
        .filter(|c| name != IntegralName::OmittedTerm || c.scheme().eps() <= 0.2);
    e.quadrature = samples(grid, |c| {
        Ok((c.quadrature(name)?, analytic::value(name, c.scheme())))
    })?;
    let degree = s.degree.min(e.quadrature.len().saturating_sub(1)).max(1);
    let value = extrapolate(e, s.m, degree, |d| name.mass_dimension(d))?;
    let (err, kind) = rel_err(value, limit);
    e.rel_err = Some(Num(err));
    e.error_kind = kind;
    let mut pass = err <= e.tolerance.0;
    if EXACT_FORMS.contains(&name) {
        pass &= e
            .quadrature
            .iter()
            .all(|x| ((x.value.0 - x.analytic.0) / x.analytic.0).abs() <= s.tol_quadrature);
    }
    e.pass = pass;
    Ok(())
}

pub fn diagram_entry(id: DiagramId, cats: &[Catalogue], s: &Settings) -> Entry {
    let mut e = Entry::new("diagram", id.tag(), s.tol_limit);
    let built = (|| -> Result<DiagramReport> {
        e.quadrature = samples(cats, |c| {
            Ok((quadrature_value(id, c)?, analytic_value(id, c.scheme())))
        })?;
        DiagramReport::build(id, cats, s.degree)
    })();
    match built {
        Ok(r) => {
            e.analytic = Some(Num(r.analytic_limit));
            e.extrapolated = Some(Num(r.value_limit));
            e.extrapolation_error = Some(Num(r.extrapolation.error));
            e.exact_limit = Some(Num(r.exact_limit));
            e.rel_err = Some(Num(r.rel_err));
            let analytic_ok =
                ((r.analytic_limit - r.exact_limit) / r.exact_limit).abs() <= ANALYTIC_LIMIT_TOL;
            e.pass = r.rel_err <= s.tol_limit && analytic_ok;
            e
        }
        Err(err) => e.failed(err),
    }
}

fn energy_entries(cats: &[Catalogue], s: &Settings) -> Vec<Entry> {
    let one = match RegScheme::one_dimensional(s.m) {
        Ok(one) => one,
        Err(err) => return vec![Entry::new("energy", "energy", s.tol_limit).failed(err)],
    };
    let exact = EnergyExpansion::from_diagrams(s.m, |id| analytic_value(id, &one));
    let mut failure = None;
    let mut limits = Vec::new();
    for id in DiagramId::ALL {
        match DiagramReport::build(id, cats, s.degree) {
            Ok(r) => limits.push(r.value_limit),
            Err(err) => {
                failure = Some(err);
                limits.push(f64::NAN);
            }
        }
    }
    let extrapolated = EnergyExpansion::from_diagrams(s.m, |id| limits[id as usize]);
    let coefficients = [
        ("energy_e0", exact.e0, extrapolated.e0, 0.5 * s.m),
        ("energy_e1", exact.e1, extrapolated.e1, 0.25),
        ("energy_e2", exact.e2, extrapolated.e2, 1.0 / (16.0 * s.m)),
    ];
    coefficients
        .iter()
        .map(|&(name, a, x, want)| {
            let mut e = Entry::new("energy", name, s.tol_limit);
            if let Some(err) = &failure {
                return e.failed(err);
            }
            e.analytic = Some(Num(a));
            e.extrapolated = Some(Num(x));
            e.exact_limit = Some(Num(want));
            let err = ((x - want) / want).abs();
            e.rel_err = Some(Num(err));
            e.pass = err <= s.tol_limit && ((a - want) / want).abs() <= SUM_RULE_ANALYTIC_TOL;
            e
        })
        .collect()
}

fn check_entries(cats: &[Catalogue]) -> Vec<Entry> {
    let mut sum = Entry::new("check", "sum_rule_analytic", SUM_RULE_ANALYTIC_TOL);
    let mut worst: f64 = 0.0;
    for c in cats {
        let t = analytic::sum_rule_terms(c.scheme());
        let big = t.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        worst = worst.max(analytic::sum_rule(c.scheme()).abs() / big);
        sum.quadrature.push(Sample {
            eps: Num(c.scheme().eps()),
            value: Num(analytic::sum_rule(c.scheme())),
            abs_error: Num(0.0),
            analytic: Num(analytic::sum_rule(c.scheme())),
        });
    }
    sum.rel_err = Some(Num(worst));
    sum.error_kind = ErrorKind::Absolute;
    sum.pass = worst <= SUM_RULE_ANALYTIC_TOL;

    let mut parts = Entry::new("check", "partial_integration", PARTIAL_INTEGRATION_TOL);
    let run = (|| -> Result<f64> {
        let mut worst: f64 = 0.0;
        for c in cats {
            let p = c.partial_integration()?;
            worst = worst.max(p.residual());
            parts.quadrature.push(Sample {
                eps: Num(c.scheme().eps()),
                value: Num(p.lhs.value + p.boundary),
                abs_error: Num(p.lhs.abs_error + p.rhs.abs_error),
                analytic: Num(p.rhs.value),
            });
        }
        Ok(worst)
    })();
    let parts = match run {
        Ok(w) => {
            parts.rel_err = Some(Num(w));
            parts.pass = w <= PARTIAL_INTEGRATION_TOL;
            parts
        }
        Err(err) => parts.failed(err),
    };
    vec![sum, parts]
}

pub fn verify(s: &Settings) -> Result<ReportDocument> {
    s.validate()?;
    let cats = catalogues(s)?;
    let mut tasks: Vec<Box<dyn Fn() -> Vec<Entry> + Sync + '_>> = Vec::new();
    for name in IntegralName::ALL {
        let cats = &cats;
        tasks.push(Box::new(move || vec![integral_entry(name, cats, s)]));
    }
    for id in DiagramId::ALL {
        let cats = &cats;
        tasks.push(Box::new(move || vec![diagram_entry(id, cats, s)]));
    }
    tasks.push(Box::new(|| energy_entries(&cats, s)));
    tasks.push(Box::new(|| check_entries(&cats)));
    let entries: Vec<Entry> = tasks.par_iter().map(|t| t()).collect::<Vec<_>>().concat();
    Ok(ReportDocument::new(s.info(), entries))
}

/// Single diagram on the grid.
pub fn diagram(id: DiagramId, s: &Settings) -> Result<ReportDocument> {
    s.validate()?;
    let cats = catalogues(s)?;
    Ok(ReportDocument::new(
        s.info(),
        vec![diagram_entry(id, &cats, s)],
    ))
}
