use dimreg::diagrams::{analytic_value, DiagramId, DiagramReport, EnergyExpansion};
use dimreg::extrapolate::{reduce_mass, richardson, EpsSeries, DEFAULT_DEGREE, DEFAULT_GRID};
use dimreg::integrals::{Catalogue, IntegralName};
use dimreg::propagator::RegScheme;

fn catalogues(m: f64) -> Vec<Catalogue> {
    DEFAULT_GRID
        .iter()
        .map(|&e| Catalogue::new(RegScheme::new(m, e).unwrap(), 1e-10))
        .collect()
}

fn series(cats: &[Catalogue], name: IntegralName) -> EpsSeries {
    let s = cats
        .iter()
        .map(|c| (c.scheme().eps(), c.quadrature(name).unwrap().value))
        .collect();
    EpsSeries::new(s).unwrap()
}

const WITH_LIMITS: [IntegralName; 9] = [
    IntegralName::DeltaSq,
    IntegralName::GradSq,
    IntegralName::LapSq,
    IntegralName::Delta4,
    IntegralName::DsqGradsq,
    IntegralName::ISingular,
    IntegralName::MixedDgdgHess,
    IntegralName::GradsqGradsq,
    IntegralName::DsqHesssq,
];

#[test]
fn i_singular_extrapolates_to_its_limit() {
    let cats = catalogues(1.0);
    let r = richardson(&series(&cats, IntegralName::ISingular), DEFAULT_DEGREE).unwrap();
    assert!(((r.limit + 0.0625) / 0.0625).abs() < 1e-3);
}

#[test]
fn higher_degree_does_not_hurt() {
    let cats = catalogues(1.0);
    for name in WITH_LIMITS {
        let s = series(&cats, name);
        let want = name.limit(1.0);
        let err = |d| ((richardson(&s, d).unwrap().limit - want) / want).abs();
        assert!(err(2) <= err(1), "{name}");
        assert!(err(3) < 1e-3, "{name}: {}", err(3));
    }
}

#[test]
fn diagram_limits() {
    for m in [0.5, 1.0, 2.0] {
        let cats = catalogues(m);
        for id in DiagramId::ALL {
            let r = DiagramReport::build(id, &cats, DEFAULT_DEGREE).unwrap();
            assert!(r.rel_err < 1e-3, "{id} m={m}: {}", r.rel_err);
            assert!(((r.analytic_limit - r.exact_limit) / r.exact_limit).abs() < 1e-10);
        }
    }
}

#[test]
fn energy_coefficient_from_extrapolation() {
    for m in [0.5, 1.0, 2.0] {
        let cats = catalogues(m);
        let e = EnergyExpansion::from_diagrams(m, |id| {
            DiagramReport::build(id, &cats, DEFAULT_DEGREE)
                .unwrap()
                .value_limit
        });
        assert!(((e.e1 - 0.25) / 0.25).abs() < 1e-3);
        let c2 = 1.0 / (16.0 * m);
        assert!(((e.e2 - c2) / c2).abs() < 1e-3, "m={m}: {}", e.e2);
    }
}

#[test]
fn diagram_mass_scaling() {
    for id in DiagramId::ALL {
        let v = |m: f64| analytic_value(id, &RegScheme::one_dimensional(m).unwrap());
        let power = if id.order() == 1 { 0 } else { -1 };
        for m in [0.5f64, 2.0] {
            let want = v(1.0) * m.powi(power);
            assert!(((v(m) - want) / want).abs() < 1e-13, "{id}");
        }
    }
}

#[test]
fn sum_rule_extrapolates_to_zero() {
    for m in [1.0, 2.0] {
        let cats = catalogues(m);
        let r = richardson(&series(&cats, IntegralName::DeltaSqSumRule), DEFAULT_DEGREE).unwrap();
        assert!(r.limit.abs() <= 1e-6 * m);
    }
}

#[test]
fn integral_limits_at_other_masses() {
    for m in [0.5, 2.0] {
        let cats = catalogues(m);
        for name in WITH_LIMITS {
            let s = series(&cats, name);
            let reduced = reduce_mass(s.samples(), m, |d| name.mass_dimension(d));
            let r = richardson(&EpsSeries::new(reduced).unwrap(), DEFAULT_DEGREE).unwrap();
            let want = name.limit(m);
            assert!(((r.limit - want) / want).abs() < 1e-3, "{name} m={m}");
        }
    }
}

#[test]
fn reduction_is_exact_scaling() {
    let eps = 0.1;
    let a = Catalogue::new(RegScheme::new(1.0, eps).unwrap(), 1e-11);
    let b = Catalogue::new(RegScheme::new(2.0, eps).unwrap(), 1e-11);
    for name in [
        IntegralName::Delta4,
        IntegralName::ISingular,
        IntegralName::DsqGradsq,
    ] {
        let va = a.quadrature(name).unwrap().value;
        let vb = b.quadrature(name).unwrap().value;
        let want = va * 2f64.powf(name.mass_dimension(1.0 - eps));
        assert!(((vb - want) / want).abs() < 1e-9, "{name}");
    }
}
