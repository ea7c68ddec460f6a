//! Command-line front end. Every subcommand prints (or writes) one JSON
//! report; identical arguments give byte-identical output unless `--timing`
//! is passed.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{ball_measure, sphere_measure, FieldKind, FieldSpec, LocalFieldElement, DEFAULT_PRECISION};
use crate::fundsol::fundamental_solution_check;
use crate::grid::{GridFunction, GridFunctionJson};
use crate::poly::IntPolynomial;
use crate::rational::{reconstruct_from_series, RationalFunctionJson};
use crate::spectral::SpectralFunction;
use crate::upoly::fmt_rational;
use crate::vladimirov::{riesz_pairing, PseudoDiffOp};
use crate::zeta::heat::HeatKernel;
use crate::zeta::hinf::{diagonal_form, HinfMode, HinfZeta};
use crate::zeta::igusa::igusa_series;
use crate::zeta::poles::{predict_poles, GeneralizedProgression, ResolutionData};
use crate::zeta::snc::snc_form_z0;

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "ULTRAZETA_THREADS";

#[derive(Parser, Debug)]
#[command(name = "ultrazeta", version, about = "Local zeta functions and pseudodifferential operators over local fields")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include wall time in the report (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field elements and Haar measures.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Fourier transform of a grid function.
    Fourier {
        #[command(flatten)]
        grid: GridArgs,
        /// Emit every cell, including zeros.
        #[arg(long)]
        dense: bool,
    },
    /// Sobolev norms of a grid function or of the heat kernel.
    Sobolev {
        #[command(flatten)]
        grid: GridArgs,
        /// Comma-separated indices.
        #[arg(long, default_value = "0,1,2,4")]
        l: String,
        /// Use the heat kernel e^{-t‖ξ‖^α} with this t instead of a grid.
        #[arg(long)]
        heat_t: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
    },
    /// Igusa series, zeta functions of forms and pole prediction.
    #[command(subcommand)]
    Zeta(ZetaCmd),
    /// Pseudodifferential operators.
    #[command(subcommand)]
    Op(OpCmd),
    /// Fundamental solutions for monomials.
    Fundsol {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Kind::Qp)]
        kind: Kind,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Also write the report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long = "L", default_value_t = 1)]
        support: i64,
        #[arg(long = "m", default_value_t = 1)]
        resolution: i64,
    },
    /// Locate real poles numerically and compare with the predicted set.
    Poles {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 3)]
        p: u32,
        #[arg(long, default_value_t = -4.0, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
        hi: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
    },
}

#[derive(Subcommand, Debug)]
enum FieldCmd {
    /// Valuation, norm, digits and character of num/den or a JSON element.
    Element {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Kind::Qp)]
        kind: Kind,
        /// Rational `num/den` or integer.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Element as JSON `{"field":…,"val":…,"digits":[…]}`.
        #[arg(long)]
        json: Option<String>,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
    },
    /// Measure of the ball π^l R^n and of the sphere ‖x‖ = q^{-l}.
    Measure {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        l: i64,
    },
}

#[derive(Subcommand, Debug)]
enum ZetaCmd {
    /// Exact series of Z(s, f) against the indicator of R^n.
    Igusa {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Kind::Qp)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        /// Numerator and denominator degree bounds.
        #[arg(long, num_args = 2, value_names = ["DN", "DD"])]
        reconstruct: Option<Vec<usize>>,
        /// Also rebuild Z₀ for a strongly non-degenerate form.
        #[arg(long)]
        snc: bool,
    },
    /// Zeta function of a form against e^{-‖ξ‖^α}.
    Hinf {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        /// Complex point such as `0.7`, `-1.2+0.5i`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        #[arg(long, default_value_t = 3)]
        p: u32,
        /// Form to use; defaults to x1^d + … + xn^d.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Candidate poles from numerical data and progressions.
    Poles {
        /// Pairs `(N,v);(N,v)`.
        #[arg(long)]
        data: String,
        /// Progression steps `g1,g2,...`; a trailing `...` repeats the last
        /// step. One per datum, or one for all.
        #[arg(long)]
        prog: Vec<String>,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
}

#[derive(Subcommand, Debug)]
enum OpCmd {
    /// Apply ∏ |h_i|^{α_i} to a grid function.
    Apply {
        /// `poly:alpha; poly:alpha`.
        #[arg(long)]
        symbol: String,
        #[command(flatten)]
        grid: GridArgs,
        /// Sobolev indices to report.
        #[arg(long, default_value = "0,2")]
        l: String,
    },
    /// Both sides of the Riesz kernel identity.
    RieszCheck {
        /// One exponent for every coordinate, or a comma-separated list.
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Qp,
    Laurent,
}

impl Kind {
    fn field(self, p: u32) -> Result<FieldSpec> {
        let kind = match self {
            Kind::Qp => FieldKind::Qp,
            Kind::Laurent => FieldKind::LaurentFp,
        };
        FieldSpec::new(kind, p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Sphere,
    Factored,
    Both,
}

/// A grid function read from `--input` or built from flags.
#[derive(Args, Debug, Clone)]
struct GridArgs {
    /// GridFunction JSON file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long, value_enum, default_value_t = Kind::Qp)]
    kind: Kind,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long = "L", default_value_t = 1)]
    support: i64,
    #[arg(long = "m", default_value_t = 1)]
    resolution: i64,
    /// Indicator of π^K R^n.
    #[arg(long, allow_hyphen_values = true)]
    indicator: Option<i64>,
    /// Random values (from `--seed`).
    #[arg(long)]
    random: bool,
}

impl GridArgs {
    fn load(&self, seed: u64) -> Result<GridFunction> {
        if let Some(path) = &self.input {
            return read_grid(path);
        }
        let p = self
            .p
            .ok_or_else(|| Error::InvalidInput("give --input or --p with --indicator/--random".into()))?;
        let field = self.kind.field(p)?;
        match (self.indicator, self.random) {
            (Some(k), false) => GridFunction::indicator_ball(field, self.n, k, self.support, self.resolution),
            (None, true) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                GridFunction::random(field, self.n, self.support, self.resolution, &mut rng)
            }
            _ => Err(Error::InvalidInput("choose exactly one of --indicator and --random".into())),
        }
    }
}

fn read_grid(path: &Path) -> Result<GridFunction> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let bad = |e: serde_json::Error| Error::Parse(format!("{}: {e}", path.display()));
    let mut v: Value = serde_json::from_str(&text).map_err(bad)?;
    // a `fourier` report carries its grid under result.transform
    if let Some(t) = v.pointer_mut("/result/transform") {
        v = t.take();
    }
    let j: GridFunctionJson = serde_json::from_value(v).map_err(bad)?;
    GridFunction::from_json(&j)
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<f64>().map_err(|_| Error::Parse(format!("bad number '{x}'"))))
        .collect()
}

/// `a`, `bi`, `a+bi` or `a-bi`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("bad complex number '{s}'"));
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].parse::<f64>().map_err(|_| bad())?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

fn c_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn spectral_json(t: &SpectralFunction, ls: &[f64]) -> Result<Value> {
    let mut norms = BTreeMap::new();
    for &l in ls {
        let c = t.sobolev_norm(l)?;
        norms.insert(format!("{l}"), json!({ "value": c.value, "error_bound": c.error_bound }));
    }
    let origin = t.integral()?;
    Ok(json!({
        "side": "frequency",
        "base": t.base.to_json(false),
        "multipliers": t.multipliers.iter().map(|m| json!({
            "poly": m.poly.to_string(),
            "alpha": c_json(m.alpha),
        })).collect::<Vec<_>>(),
        "sobolev_norms": norms,
        "value_at_origin": { "value": c_json(origin.value), "error_bound": origin.error_bound },
    }))
}

#[derive(Serialize)]
struct Report {
    command: String,
    config: Value,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<f64>,
}

/// Result of a run: the report and whether every check inside it passed.
struct Outcome {
    result: Value,
    ok: bool,
}

fn done(result: Value) -> Result<Outcome> {
    Ok(Outcome { result, ok: true })
}

fn run_field(cmd: &FieldCmd) -> Result<Outcome> {
    match cmd {
        FieldCmd::Element { p, kind, x, json: js, precision } => {
            let field = kind.field(*p)?;
            let e = match (x, js) {
                (Some(x), None) => {
                    let (num, den) = match x.split_once('/') {
                        Some((a, b)) => (a.trim(), b.trim()),
                        None => (x.trim(), "1"),
                    };
                    let parse = |v: &str| v.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer '{v}'")));
                    LocalFieldElement::from_ratio(field, parse(num)?, parse(den)?, *precision)?
                }
                (None, Some(j)) => {
                    let e: LocalFieldElement =
                        serde_json::from_str(j).map_err(|err| Error::Parse(format!("element JSON: {err}")))?;
                    if e.field != field {
                        return Err(Error::FieldMismatch(format!("{} vs {field}", e.field)));
                    }
                    match e.val {
                        Some(v) => LocalFieldElement::new(e.field, v, e.digits)?,
                        None => e,
                    }
                }
                _ => return Err(Error::InvalidInput("give exactly one of --x and --json".into())),
            };
            let (ord, norm) = e.valuation_and_norm();
            let chi = e.char_fraction().map(|r| fmt_rational(&r)).ok();
            done(json!({
                "element": e,
                "display": e.to_string(),
                "valuation": ord,
                "norm": fmt_rational(&norm),
                "char_fraction": chi,
            }))
        }
        FieldCmd::Measure { p, n, l } => {
            let field = FieldSpec::qp(*p);
            let _ = FieldSpec::new(FieldKind::Qp, *p)?;
            done(json!({
                "q": field.q(),
                "n": n,
                "l": l,
                "ball": fmt_rational(&ball_measure(*l, *n, field.q())),
                "sphere": fmt_rational(&sphere_measure(*l, *n, field.q())),
            }))
        }
    }
}

fn run_zeta(cmd: &ZetaCmd) -> Result<Outcome> {
    match cmd {
        ZetaCmd::Igusa { p, kind, n, poly, terms, reconstruct, snc } => {
            let field = kind.field(*p)?;
            let f = IntPolynomial::parse(poly, *n)?;
            let series = igusa_series(field, &f, *terms)?;
            let mut out = json!({
                "field": field.to_string(),
                "poly": f.to_string(),
                "series": series.to_json(),
                "partial_mass": fmt_rational(&series.total_mass()),
            });
            if let Some(deg) = reconstruct {
                let r = reconstruct_from_series(field.q(), &series.coeffs, deg[0], deg[1])?;
                out["rational_function"] = serde_json::to_value(RationalFunctionJson::from(&r)).unwrap();
                out["held_out"] = json!(series.terms() - deg[0] - deg[1] - 1);
            }
            if *snc {
                let form = snc_form_z0(field, &f, &series)?;
                out["snc"] = json!({
                    "z0": RationalFunctionJson::from(&form.z0),
                    "l_poly": form.l_poly.coeffs().iter().map(fmt_rational).collect::<Vec<_>>(),
                    "zeta": RationalFunctionJson::from(&form.zeta),
                    "held_out": form.held_out,
                });
            }
            done(out)
        }
        ZetaCmd::Hinf { n, d, alpha, s, mode, p, poly } => {
            let field = FieldSpec::new(FieldKind::Qp, *p)?;
            let f = match poly {
                Some(text) => IntPolynomial::parse(text, Some(*n))?,
                None => diagonal_form(*n, *d),
            };
            let z = HinfZeta::new(field, &f, *alpha)?;
            let s = parse_complex(s)?;
            let mut skipped = None;
            let values = match mode {
                ModeArg::Sphere => vec![z.eval(s, HinfMode::SphereSeries)?],
                ModeArg::Factored => vec![z.eval(s, HinfMode::FactoredContinuation)?],
                ModeArg::Both => {
                    let cont = z.eval(s, HinfMode::FactoredContinuation)?;
                    match z.eval(s, HinfMode::SphereSeries) {
                        Ok(v) => vec![v, cont],
                        // outside the region where the sphere sums converge
                        Err(Error::InvalidInput(why)) => {
                            skipped = Some(why);
                            vec![cont]
                        }
                        Err(e) => return Err(e),
                    }
                }
            };
            let mut out = json!({
                "poly": f.to_string(),
                "q": z.q,
                "alpha": alpha,
                "s": c_json(s),
                "z0": RationalFunctionJson::from(&z.z0),
                "value": values,
            });
            if let Some(why) = skipped {
                out["sphere_series_skipped"] = json!(why);
            }
            if values.len() == 2 {
                out["agreement"] = json!((values[0].value() - values[1].value()).norm());
            }
            done(out)
        }
        ZetaCmd::Poles { data, prog, depth } => {
            let data = ResolutionData::parse(data)?;
            let progs = match prog.len() {
                0 => vec![GeneralizedProgression::trivial(); data.0.len()],
                1 => vec![GeneralizedProgression::parse(&prog[0])?; data.0.len()],
                _ => prog.iter().map(|p| GeneralizedProgression::parse(p)).collect::<Result<Vec<_>>>()?,
            };
            let pred = predict_poles(&data, &progs, *depth)?;
            done(json!({
                "data": data,
                "progressions": progs,
                "depth": depth,
                "pole_list": pred.real_parts(),
                "candidates": pred.candidates,
            }))
        }
    }
}

fn run_op(cmd: &OpCmd, seed: u64) -> Result<Outcome> {
    match cmd {
        OpCmd::Apply { symbol, grid, l } => {
            let g = grid.load(seed)?;
            let op = PseudoDiffOp::parse(g.n, symbol)?;
            let ls = parse_list(l)?;
            let pg = op.apply(&g)?;
            let mut bounds = Vec::new();
            for &li in &ls {
                let lhs = pg.sobolev_norm(li)?;
                let rhs = g.sobolev_norm(li + op.order_shift());
                bounds.push(json!({ "l": li, "norm": lhs.value, "bound": rhs, "holds": lhs.value <= rhs * (1.0 + 1e-12) }));
            }
            let ok = bounds.iter().all(|b| b["holds"] == json!(true));
            Ok(Outcome {
                result: json!({
                    "symbol": symbol,
                    "order_shift": op.order_shift(),
                    "spectral": spectral_json(&pg, &ls)?,
                    "continuity": bounds,
                }),
                ok,
            })
        }
        OpCmd::RieszCheck { alpha, grid } => {
            let g = grid.load(seed)?;
            let parts: Vec<Complex64> =
                alpha.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
            let alphas = if parts.len() == 1 { vec![parts[0]; g.n] } else { parts };
            let r = riesz_pairing(&alphas, &g)?;
            let tol = 1e-10 * r.space_side.norm().max(1.0);
            Ok(Outcome {
                result: json!({
                    "alpha": alphas.iter().map(|a| c_json(*a)).collect::<Vec<_>>(),
                    "frequency_side": c_json(r.frequency_side),
                    "space_side": c_json(r.space_side),
                    "discrepancy": r.discrepancy,
                    "error_bound": r.error_bound,
                    "tolerance": tol,
                    "holds": r.discrepancy <= tol,
                }),
                ok: r.discrepancy <= tol,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Field(cmd) => run_field(cmd),
        Command::Fourier { grid, dense } => {
            let g = grid.load(cli.seed)?;
            let gh = g.fourier();
            let back = gh.fourier();
            let refl = g.reflect();
            let involution = back.values().iter().zip(refl.values()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            let parseval = (gh.l2_norm() - g.l2_norm()).abs();
            done(json!({
                "transform": gh.to_json(*dense),
                "involution_error": involution,
                "parseval_error": parseval,
                "l2_norm": g.l2_norm(),
            }))
        }
        Command::Sobolev { grid, l, heat_t, alpha } => {
            let ls = parse_list(l)?;
            if let Some(t) = heat_t {
                let n = grid.n;
                let p = grid.p.unwrap_or(3);
                let k = HeatKernel::new(grid.kind.field(p)?.q(), n, *t, *alpha)?;
                let mut norms = Vec::new();
                for &li in &ls {
                    let c = k.sobolev_norm(li)?;
                    norms.push(json!({ "l": li, "value": c.value, "tail_bound": c.error_bound }));
                }
                let check = k.l2_check()?;
                return done(json!({ "heat_kernel": k, "norms": norms, "l2_two_way": check }));
            }
            let g = grid.load(cli.seed)?;
            let norms: Vec<Value> = ls.iter().map(|&li| json!({ "l": li, "value": g.sobolev_norm(li) })).collect();
            done(json!({ "field": g.field.to_string(), "n": g.n, "norms": norms, "l2_norm": g.l2_norm() }))
        }
        Command::Zeta(cmd) => run_zeta(cmd),
        Command::Op(cmd) => run_op(cmd, cli.seed),
        Command::Fundsol { poly, p, kind, trials, report, support, resolution } => {
            let field = kind.field(*p)?;
            let f = IntPolynomial::parse(poly, None)?;
            let r = fundamental_solution_check(field, &f, *trials, cli.seed, *support, *resolution)?;
            let ok = r.pass();
            let result = serde_json::to_value(&r).unwrap();
            if let Some(path) = report {
                write_text(path, &serde_json::to_string_pretty(&result).unwrap())?;
            }
            Ok(Outcome { result, ok })
        }
        Command::Poles { n, d, alpha, p, lo, hi, step } => {
            if step.is_nan() || *step <= 0.0 || lo >= hi {
                return Err(Error::InvalidInput("need lo < hi and step > 0".into()));
            }
            let field = FieldSpec::new(FieldKind::Qp, *p)?;
            let z = HinfZeta::new(field, &diagonal_form(*n, *d), *alpha)?;
            let located = z.locate_real_poles(*lo, *hi, *step);
            let data = ResolutionData::new(vec![(1, 1), (*d, *n as u32)])?;
            let depth = ((*d as f64 * -lo - *n as f64) / alpha).ceil().max(0.0) as usize + 1;
            let progs = [GeneralizedProgression::trivial(), GeneralizedProgression::arithmetic(*alpha)?];
            let pred = predict_poles(&data, &progs, depth)?;
            let matched: Vec<bool> = located.iter().map(|x| pred.contains(*x, 1e-4)).collect();
            let ok = matched.iter().all(|m| *m);
            Ok(Outcome {
                result: json!({
                    "n": n, "d": d, "alpha": alpha, "q": z.q,
                    "located": located,
                    "predicted": pred.real_parts(),
                    "all_located_predicted": ok,
                }),
                ok,
            })
        }
    }
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, format!("{text}\n"))
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn command_name(cli: &Cli) -> &'static str {
    match &cli.command {
        Command::Field(FieldCmd::Element { .. }) => "field element",
        Command::Field(FieldCmd::Measure { .. }) => "field measure",
        Command::Fourier { .. } => "fourier",
        Command::Sobolev { .. } => "sobolev",
        Command::Zeta(ZetaCmd::Igusa { .. }) => "zeta igusa",
        Command::Zeta(ZetaCmd::Hinf { .. }) => "zeta hinf",
        Command::Zeta(ZetaCmd::Poles { .. }) => "zeta poles",
        Command::Op(OpCmd::Apply { .. }) => "op apply",
        Command::Op(OpCmd::RieszCheck { .. }) => "op riesz-check",
        Command::Fundsol { .. } => "fundsol",
        Command::Poles { .. } => "poles",
    }
}

fn init_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 2 for invalid input, 1 for engine errors or failed
/// checks.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    init_threads();
    let start = Instant::now();
    let outcome = run(&cli);
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return if e.is_validation() { 2 } else { 1 };
        }
    };
    // where the report goes and whether it is timed do not change its content
    let mut echo = Vec::new();
    let mut words = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned());
    while let Some(a) = words.next() {
        match a.as_str() {
            "--timing" => {}
            "--out" => {
                words.next();
            }
            _ if a.starts_with("--out=") => {}
            _ => echo.push(a),
        }
    }
    let threads = std::env::var(THREADS_ENV).ok();
    let report = Report {
        command: command_name(&cli).to_string(),
        config: json!({ "args": echo, "seed": cli.seed, "threads": threads, "version": env!("CARGO_PKG_VERSION") }),
        result: outcome.result,
        wall_time_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    match &cli.out {
        Some(path) => {
            if let Err(e) = write_text(path, &text) {
                eprintln!("error: {e}");
                return 2;
            }
        }
        None => {
            use std::io::Write;
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
    }
    if outcome.ok {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("0.7").unwrap(), Complex64::new(0.7, 0.0));
        assert_eq!(parse_complex("-1.2+0.5i").unwrap(), Complex64::new(-1.2, 0.5));
        assert_eq!(parse_complex("1e-3-2i").unwrap(), Complex64::new(1e-3, -2.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("2.5i").unwrap(), Complex64::new(0.0, 2.5));
        assert!(parse_complex("x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with_args(["ultrazeta", "--help"]), 0);
        assert_eq!(main_with_args(["ultrazeta", "zeta", "igusa", "--p", "3", "--poly", "x1^^2"]), 2);
        assert_eq!(main_with_args(["ultrazeta", "zeta", "igusa", "--p", "4", "--poly", "x1"]), 2);
        assert_eq!(main_with_args(["ultrazeta", "bogus"]), 2);
    }
}
