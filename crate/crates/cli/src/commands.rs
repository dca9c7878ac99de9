use std::f64::consts::PI;
use std::path::PathBuf;
use std::thread;

use clap::{Args, Parser, Subcommand};
use mathieu_core::hurwitz::dirichlet_eta;
use mathieu_core::mathieu::{
    asym_coeffs, asym_eval, growth_order_probe, mathieu_direct, mellin_closed, mellin_numeric, MathieuParams,
    MellinQuery,
};
use mathieu_core::polylog::{
    polylog, polylog_jonquiere, polylog_lindelof, polylog_neg_int, polylog_series, polylog_unit_circle,
    polylog_unit_circle_exact, PolylogQuery, RationalAngle,
};
use mathieu_core::trig::{
    general_sine_series, smallx_hartman_wintner, smallx_leading_sine, theta_exponent, zastavnyi_direct,
    zastavnyi_expansion, SeriesFamilyParams, ZastavnyiParams,
};
use mathieu_core::{Complex64, EvalOutcome};

use crate::parse;
use crate::record::{emit, Format, Record};
use crate::Failure;

#[derive(Debug, Parser)]
#[command(name = "mathieu", version, about = "Mathieu power series, polylogarithms and related identities")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Output encoding.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the records to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Args)]
struct Tol {
    /// Absolute error target.
    #[arg(long, default_value_t = 1e-10, value_parser = parse::finite)]
    tol: f64,
}

/// The argument `z`, either as a complex literal or as an angle on the unit circle.
#[derive(Debug, Clone, Copy, Args)]
#[group(required = true, multiple = false)]
struct Point {
    /// Complex literal such as -1, i or 0.3+0.4i.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    z: Option<Complex64>,
    /// Angle x, meaning z = e^{ix}.
    #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
    x: Option<f64>,
}

impl Point {
    fn z(&self) -> Complex64 {
        match (self.z, self.x) {
            (Some(z), _) => z,
            (None, Some(x)) => {
                let x = x.rem_euclid(2.0 * PI);
                if x > PI {
                    let t = 2.0 * PI - x;
                    Complex64::new(t.cos(), -t.sin())
                } else {
                    Complex64::new(x.cos(), x.sin())
                }
            }
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certified direct summation of F_mu(r, z).
    Eval {
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        r: f64,
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        output: Output,
    },
    /// Coefficients c_k of the large-r expansion.
    Expand {
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        mu: f64,
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Truncated large-r expansion (smallest-term truncation unless --kmax).
    Asym {
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        r: f64,
        #[command(flatten)]
        point: Point,
        #[arg(long)]
        kmax: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Direct sum against the expansion on an evenly spaced r grid.
    Compare {
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        mu: f64,
        #[command(flatten)]
        point: Point,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        r_min: f64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        r_max: f64,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        points: u32,
        #[arg(long)]
        kmax: Option<usize>,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form Mellin transform against quadrature.
    MellinCheck {
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        u: Complex64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        mu: f64,
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        output: Output,
    },
    /// Cross-checks between independent routes.
    Identity {
        #[command(subcommand)]
        which: Identity,
    },
    /// General sine series against its small-x prediction.
    Smallx {
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, default_value_t = 0.0, value_parser = parse::finite, allow_hyphen_values = true)]
        gamma: f64,
        #[arg(long, default_value_t = 0.0, value_parser = parse::finite, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long, default_value_t = 0.0, value_parser = parse::finite, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, default_value_t = 1.0, value_parser = parse::finite, allow_hyphen_values = true)]
        r: f64,
        /// Comma-separated angles in (0, pi).
        #[arg(long, required = true, value_delimiter = ',', value_parser = parse::finite)]
        x: Vec<f64>,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        output: Output,
    },
    /// Fitted power-law decay of |F_mu(r, z)| in r.
    ProbeOrder {
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        mu: f64,
        #[command(flatten)]
        point: Point,
        /// Comma-separated r values.
        #[arg(long, default_value = "20,30,40", value_delimiter = ',', value_parser = parse::finite)]
        r: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Subcommand)]
enum Identity {
    /// Jonquière's formula against the power series (or the Lindelöf integral off the disk).
    Jonquiere {
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        alpha: Complex64,
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        z: Complex64,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        output: Output,
    },
    /// Li_alpha(e^{i p pi / q}) by multisection against a second route.
    Multisection {
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        alpha: Complex64,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        output: Output,
    },
    /// Dirichlet eta against -Li_s(-1).
    Eta {
        #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
        s: Complex64,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        output: Output,
    },
    /// Small-y expansion of sum (nu+a)^gamma / (y (nu+a)^alpha + 1)^mu against direct summation.
    Zastavnyi {
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        gamma: f64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, value_parser = parse::finite, allow_hyphen_values = true)]
        y: f64,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[command(flatten)]
        tol: Tol,
        #[command(flatten)]
        output: Output,
    },
}

impl Cli {
    pub fn output(&self) -> &Output {
        match &self.command {
            Command::Eval { output, .. }
            | Command::Expand { output, .. }
            | Command::Asym { output, .. }
            | Command::Compare { output, .. }
            | Command::MellinCheck { output, .. }
            | Command::Smallx { output, .. }
            | Command::ProbeOrder { output, .. } => output,
            Command::Identity { which } => match which {
                Identity::Jonquiere { output, .. }
                | Identity::Multisection { output, .. }
                | Identity::Eta { output, .. }
                | Identity::Zastavnyi { output, .. } => output,
            },
        }
    }
}

pub const EVAL_COLUMNS: &[&str] = &[
    "mu", "r", "z_re", "z_im", "value_re", "value_im", "err_bound", "bound_kind", "terms", "method",
];
pub const EXPAND_COLUMNS: &[&str] = &["k", "c_re", "c_im"];
pub const COMPARE_COLUMNS: &[&str] = &[
    "r", "direct_re", "direct_im", "asym_re", "asym_im", "abs_err", "rel_err", "direct_bound", "asym_bound",
];
const MELLIN_COLUMNS: &[&str] = &[
    "u_re", "u_im", "mu", "z_re", "z_im", "closed_re", "closed_im", "numeric_re", "numeric_im",
    "numeric_bound", "abs_err", "rel_err",
];
const JONQUIERE_COLUMNS: &[&str] = &[
    "alpha_re", "alpha_im", "z_re", "z_im", "jonquiere_re", "jonquiere_im", "reference_re", "reference_im",
    "reference_method", "abs_err", "rel_err",
];
const MULTISECTION_COLUMNS: &[&str] = &[
    "alpha_re", "alpha_im", "p", "q", "multisection_re", "multisection_im", "reference_re", "reference_im",
    "reference_method", "abs_err", "rel_err", "exact_re", "exact_im",
];
const ETA_COLUMNS: &[&str] = &[
    "s_re", "s_im", "eta_re", "eta_im", "polylog_re", "polylog_im", "polylog_method", "abs_err", "rel_err",
];
const ZASTAVNYI_COLUMNS: &[&str] = &[
    "a", "gamma", "alpha", "mu", "y", "kmax", "expansion", "expansion_bound", "direct", "direct_bound",
    "leading_coefficient", "abs_err", "rel_err",
];
const SMALLX_COLUMNS: &[&str] = &[
    "x", "theta", "series", "series_bound", "prediction", "regime", "ratio",
];
const PROBE_COLUMNS: &[&str] = &["mu", "z_re", "z_im", "slope", "expected"];

fn diff(a: Complex64, b: Complex64) -> (f64, f64) {
    let abs = (a - b).norm();
    let scale = b.norm();
    (abs, if scale > 0.0 { abs / scale } else { abs })
}

/// Record for an evaluation of `F_mu(r, z)`.
pub fn outcome_record(params: &MathieuParams, out: &EvalOutcome) -> Record {
    Record::new()
        .with("mu", params.mu())
        .with("r", params.r())
        .with("z_re", params.z().re)
        .with("z_im", params.z().im)
        .with("value_re", out.value.re)
        .with("value_im", out.value.im)
        .with("err_bound", out.error_bound)
        .with("bound_kind", out.bound_kind.as_str())
        .with("terms", out.terms_used)
        .with("method", out.method.as_str())
}

/// Evenly spaced grid of `points` values from `lo` to `hi`.
pub fn r_grid(lo: f64, hi: f64, points: u32) -> Vec<f64> {
    if points == 1 {
        return vec![lo];
    }
    let step = (hi - lo) / (points - 1) as f64;
    (0..points).map(|i| if i + 1 == points { hi } else { lo + step * i as f64 }).collect()
}

/// One row of `compare`.
pub fn compare_record(params: &MathieuParams, tol: f64, kmax: Option<usize>) -> Result<Record, Failure> {
    let direct = mathieu_direct(params, tol)?;
    let asym = asym_eval(params, kmax)?;
    let (abs_err, rel_err) = diff(asym.value, direct.value);
    Ok(Record::new()
        .with("r", params.r())
        .with("direct_re", direct.value.re)
        .with("direct_im", direct.value.im)
        .with("asym_re", asym.value.re)
        .with("asym_im", asym.value.im)
        .with("abs_err", abs_err)
        .with("rel_err", rel_err)
        .with("direct_bound", direct.error_bound)
        .with("asym_bound", asym.error_bound))
}

/// Maps `f` over `items` on a small worker pool, keeping input order.
fn ordered_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(items.len()).max(1);
    if workers == 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                s.spawn(move || part.iter().map(f).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn fmt_rational(r: &num_rational::BigRational) -> String {
    r.to_string()
}

pub(crate) fn execute(cli: &Cli) -> Result<Vec<u8>, Failure> {
    let format = cli.output().format;
    let (header, records): (&[&str], Vec<Record>) = match &cli.command {
        Command::Eval { mu, r, point, tol, .. } => {
            let params = MathieuParams::new(*mu, *r, point.z())?;
            let out = mathieu_direct(&params, tol.tol)?;
            (EVAL_COLUMNS, vec![outcome_record(&params, &out)])
        }
        Command::Expand { mu, point, kmax, .. } => {
            let exp = asym_coeffs(*mu, point.z(), *kmax)?;
            let rows = exp
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| Record::new().with("k", k).with("c_re", c.re).with("c_im", c.im))
                .collect();
            (EXPAND_COLUMNS, rows)
        }
        Command::Asym { mu, r, point, kmax, .. } => {
            let params = MathieuParams::new(*mu, *r, point.z())?;
            let out = asym_eval(&params, *kmax)?;
            (EVAL_COLUMNS, vec![outcome_record(&params, &out)])
        }
        Command::Compare { mu, point, r_min, r_max, points, kmax, tol, .. } => {
            if r_min > r_max {
                return Err(Failure::Parameter(format!("r-min {r_min} exceeds r-max {r_max}")));
            }
            let base = MathieuParams::new(*mu, *r_min, point.z())?;
            let grid = r_grid(*r_min, *r_max, *points);
            let rows = ordered_map(&grid, |&r| compare_record(&base.with_r(r)?, tol.tol, *kmax));
            (COMPARE_COLUMNS, rows.into_iter().collect::<Result<_, _>>()?)
        }
        Command::MellinCheck { u, mu, point, tol, .. } => {
            let z = point.z();
            let query = MellinQuery::new(*u)?;
            let closed = mellin_closed(&query, *mu, z, tol.tol)?;
            let numeric = mellin_numeric(&query, *mu, z, tol.tol)?;
            let (abs_err, rel_err) = diff(numeric.value, closed.value);
            let rec = Record::new()
                .with("u_re", u.re)
                .with("u_im", u.im)
                .with("mu", *mu)
                .with("z_re", z.re)
                .with("z_im", z.im)
                .with("closed_re", closed.value.re)
                .with("closed_im", closed.value.im)
                .with("numeric_re", numeric.value.re)
                .with("numeric_im", numeric.value.im)
                .with("numeric_bound", numeric.error_bound)
                .with("abs_err", abs_err)
                .with("rel_err", rel_err);
            (MELLIN_COLUMNS, vec![rec])
        }
        Command::Identity { which } => identity(which)?,
        Command::Smallx { alpha, beta, gamma, delta, mu, r, x, tol, .. } => {
            let fam = SeriesFamilyParams::new(*alpha, *beta, *gamma, *delta, *mu, *r)?;
            let theta = theta_exponent(&fam);
            let mut rows = Vec::with_capacity(x.len());
            for &xi in x {
                let series = general_sine_series(&fam, xi, tol.tol)?;
                let (prediction, regime) = if theta > 2.0 {
                    (smallx_hartman_wintner(&fam, xi, tol.tol)?.value.re, "hartman_wintner")
                } else {
                    (smallx_leading_sine(&fam, xi)?, "leading")
                };
                rows.push(
                    Record::new()
                        .with("x", xi)
                        .with("theta", theta)
                        .with("series", series.value.re)
                        .with("series_bound", series.error_bound)
                        .with("prediction", prediction)
                        .with("regime", regime)
                        .with("ratio", series.value.re / prediction),
                );
            }
            (SMALLX_COLUMNS, rows)
        }
        Command::ProbeOrder { mu, point, r, .. } => {
            let z = point.z();
            let slope = growth_order_probe(*mu, z, r)?;
            let expected = if z == Complex64::new(1.0, 0.0) { -2.0 * mu } else { -2.0 * mu - 2.0 };
            let rec = Record::new()
                .with("mu", *mu)
                .with("z_re", z.re)
                .with("z_im", z.im)
                .with("slope", slope)
                .with("expected", expected);
            (PROBE_COLUMNS, vec![rec])
        }
    };
    Ok(emit(header, &records, format)?)
}

fn identity(which: &Identity) -> Result<(&'static [&'static str], Vec<Record>), Failure> {
    Ok(match which {
        Identity::Jonquiere { alpha, z, tol, .. } => {
            let query = PolylogQuery::new(*alpha, *z)?;
            let j = polylog_jonquiere(&query)?;
            let reference = if z.norm() < 1.0 {
                polylog_series(&query, tol.tol)?
            } else {
                polylog_lindelof(&query, tol.tol, None)?
            };
            let (abs_err, rel_err) = diff(j.value, reference.value);
            let rec = Record::new()
                .with("alpha_re", alpha.re)
                .with("alpha_im", alpha.im)
                .with("z_re", z.re)
                .with("z_im", z.im)
                .with("jonquiere_re", j.value.re)
                .with("jonquiere_im", j.value.im)
                .with("reference_re", reference.value.re)
                .with("reference_im", reference.value.im)
                .with("reference_method", reference.method.as_str())
                .with("abs_err", abs_err)
                .with("rel_err", rel_err);
            (JONQUIERE_COLUMNS, vec![rec])
        }
        Identity::Multisection { alpha, p, q, tol, .. } => {
            let angle = RationalAngle::new(*p, *q)?;
            let m = polylog_unit_circle(*alpha, &angle)?;
            let neg_int = (alpha.im == 0.0 && alpha.re <= 0.0 && alpha.re.fract() == 0.0)
                .then(|| (-alpha.re) as u32);
            let (reference, method) = match neg_int {
                Some(n) => (polylog_neg_int(n, angle.z())?, "neg_int_closed_form"),
                None => {
                    let out = polylog_series(&PolylogQuery::new(*alpha, angle.z())?, tol.tol)?;
                    (out.value, out.method.as_str())
                }
            };
            let (exact_re, exact_im) = match neg_int {
                Some(n) if *q <= 2 => {
                    let (re, im) = polylog_unit_circle_exact(n, &angle)?;
                    (fmt_rational(&re), fmt_rational(&im))
                }
                _ => (String::new(), String::new()),
            };
            let (abs_err, rel_err) = diff(m.value, reference);
            let rec = Record::new()
                .with("alpha_re", alpha.re)
                .with("alpha_im", alpha.im)
                .with("p", *p as u64)
                .with("q", *q as u64)
                .with("multisection_re", m.value.re)
                .with("multisection_im", m.value.im)
                .with("reference_re", reference.re)
                .with("reference_im", reference.im)
                .with("reference_method", method)
                .with("abs_err", abs_err)
                .with("rel_err", rel_err)
                .with("exact_re", exact_re)
                .with("exact_im", exact_im);
            (MULTISECTION_COLUMNS, vec![rec])
        }
        Identity::Eta { s, tol, .. } => {
            let eta = dirichlet_eta(*s)?;
            let li = polylog(&PolylogQuery::new(*s, Complex64::new(-1.0, 0.0))?, tol.tol)?;
            let (abs_err, rel_err) = diff(-li.value, eta.value);
            let rec = Record::new()
                .with("s_re", s.re)
                .with("s_im", s.im)
                .with("eta_re", eta.value.re)
                .with("eta_im", eta.value.im)
                .with("polylog_re", li.value.re)
                .with("polylog_im", li.value.im)
                .with("polylog_method", li.method.as_str())
                .with("abs_err", abs_err)
                .with("rel_err", rel_err);
            (ETA_COLUMNS, vec![rec])
        }
        Identity::Zastavnyi { a, gamma, alpha, mu, y, kmax, tol, .. } => {
            let params = ZastavnyiParams::new(*a, *gamma, *alpha, *mu, *y, *kmax)?;
            let expansion = zastavnyi_expansion(&params)?;
            let direct = zastavnyi_direct(&params, tol.tol)?;
            let (abs_err, rel_err) = diff(expansion.value, direct.value);
            let rec = Record::new()
                .with("a", *a)
                .with("gamma", *gamma)
                .with("alpha", *alpha)
                .with("mu", *mu)
                .with("y", *y)
                .with("kmax", *kmax)
                .with("expansion", expansion.value.re)
                .with("expansion_bound", expansion.error_bound)
                .with("direct", direct.value.re)
                .with("direct_bound", direct.error_bound)
                .with("leading_coefficient", params.leading_coefficient()?)
                .with("abs_err", abs_err)
                .with("rel_err", rel_err);
            (ZASTAVNYI_COLUMNS, vec![rec])
        }
    })
}
