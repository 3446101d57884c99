//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dimreg::diagrams::{energy_expansion, DiagramId};
use dimreg::extrapolate::{DEFAULT_DEGREE, DEFAULT_GRID};
use dimreg::integrals::{analytic, Catalogue, IntegralName};
use dimreg::propagator::RegScheme;

use crate::report::{Entry, Num, ReportDocument, Sample, SchemeInfo};
use crate::verify::{self, Settings};

#[derive(Debug, Parser)]
#[command(
    name = "dimreg",
    version,
    about = "Dimensionally regularized diagram integrals in D = 1 - eps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the whole catalogue and all diagrams, extrapolate and compare
    /// against the exact limits.
    Verify(GridArgs),
    /// Analytic and quadrature values of one integral at one eps.
    Integral {
        name: String,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long = "tol-quadrature", default_value_t = 1e-8)]
        tol_quadrature: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// One diagram on the eps grid, extrapolated.
    Diagram {
        name: String,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Ground-state energy through order g^2.
    Energy {
        #[arg(long, default_value_t = 1.0)]
        g: f64,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 2)]
        order: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 1.0)]
    pub m: f64,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_GRID.to_vec())]
    pub eps: Vec<f64>,
    #[arg(long = "tol-quadrature", default_value_t = 1e-8)]
    pub tol_quadrature: f64,
    #[arg(long = "tol-limit", default_value_t = 1e-3)]
    pub tol_limit: f64,
    /// Polynomial degree of the extrapolation; defaults to the largest the
    /// grid allows, capped at 3.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl GridArgs {
    fn settings(&self) -> anyhow::Result<Settings> {
        if self.eps.len() < 3 {
            bail!(
                "--eps needs at least 3 values for extrapolation, got {}",
                self.eps.len()
            );
        }
        let s = Settings {
            m: self.m,
            eps: self.eps.clone(),
            tol_quadrature: self.tol_quadrature,
            tol_limit: self.tol_limit,
            degree: self
                .degree
                .unwrap_or(DEFAULT_DEGREE.min(self.eps.len() - 1)),
        };
        s.validate()?;
        Ok(s)
    }
}

#[derive(Debug, serde::Serialize)]
struct EnergyReport {
    g: Num,
    m: Num,
    order: u32,
    /// Contributions of order g^0, g^1, g^2.
    terms: [Num; 3],
    energy: Num,
}

/// Outcome of a command: rendered output and whether every check passed.
pub struct Outcome {
    pub output: String,
    pub pass: bool,
}

fn render(doc: &ReportDocument, format: Format) -> Outcome {
    let output = match format {
        Format::Json => doc.to_json() + "\n",
        Format::Csv => doc.to_csv(),
    };
    Outcome {
        output,
        pass: doc.pass,
    }
}

fn thread_pool() -> anyhow::Result<rayon::ThreadPool> {
    let threads = match std::env::var("DIMREG_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .with_context(|| format!("DIMREG_THREADS must be a non-negative integer, got {v:?}"))?,
        Err(_) => 0,
    };
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?)
}

fn integral(name: &str, m: f64, eps: f64, tol: f64, format: Format) -> anyhow::Result<Outcome> {
    let name: IntegralName = name.parse()?;
    let scheme = RegScheme::new(m, eps)?;
    let settings = Settings {
        m,
        eps: vec![eps],
        tol_quadrature: tol,
        tol_limit: f64::NAN,
        degree: 0,
    };
    let cat = Catalogue::new(scheme, tol);
    let a = analytic::value(name, &scheme);
    let mut e = Entry::new("integral", name.tag(), tol);
    e.analytic = Some(Num(analytic::value(name, &RegScheme::one_dimensional(m)?)));
    e.exact_limit = Some(Num(name.limit(m)));
    let e = match cat.quadrature(name) {
        Ok(q) => {
            e.quadrature.push(Sample {
                eps: Num(eps),
                value: Num(q.value),
                abs_error: Num(q.abs_error),
                analytic: Num(a),
            });
            e.rel_err = Some(Num(((q.value - a) / a).abs()));
            e.pass = true;
            e
        }
        Err(err) => e.failed(err),
    };
    let info = SchemeInfo {
        m: Num(m),
        eps: vec![Num(eps)],
        tol_quadrature: Num(settings.tol_quadrature),
        tol_limit: Num(settings.tol_limit),
        degree: settings.degree,
    };
    Ok(render(&ReportDocument::new(info, vec![e]), format))
}

fn energy(g: f64, m: f64, order: u32, format: Format) -> anyhow::Result<Outcome> {
    if order > 2 {
        bail!("--order must be 0, 1 or 2, got {order}");
    }
    if !(g >= 0.0 && g.is_finite()) {
        bail!("--g must be a non-negative number, got {g}");
    }
    let e = energy_expansion(m)?;
    let terms = e.terms(g, order);
    let total = e.total(g, order);
    let output = match format {
        Format::Json => {
            let r = EnergyReport {
                g: Num(g),
                m: Num(m),
                order,
                terms: terms.map(Num),
                energy: Num(total),
            };
            serde_json::to_string_pretty(&r)? + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["order", "term"])?;
            for (i, t) in terms.iter().enumerate() {
                w.write_record([i.to_string(), Num(*t).text()])?;
            }
            w.write_record(["total".to_string(), Num(total).text()])?;
            String::from_utf8(w.into_inner()?)?
        }
    };
    Ok(Outcome { output, pass: true })
}

pub fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    let pool = thread_pool()?;
    pool.install(|| match &cli.command {
        Command::Verify(grid) => {
            let s = grid.settings()?;
            Ok(render(&verify::verify(&s)?, grid.format))
        }
        Command::Integral {
            name,
            m,
            eps,
            tol_quadrature,
            format,
        } => integral(name, *m, *eps, *tol_quadrature, *format),
        Command::Diagram { name, grid } => {
            let id: DiagramId = name.parse()?;
            let s = grid.settings()?;
            Ok(render(&verify::diagram(id, &s)?, grid.format))
        }
        Command::Energy {
            g,
            m,
            order,
            format,
        } => energy(*g, *m, *order, *format),
    })
}

/// Runs the command line and returns the process exit status: 0 when every
/// check passes, 1 when a check fails, 2 on invalid input.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.output.as_bytes());
            if o.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}
