//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 input error.

use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use plumbing_trace::coords::{self, parse_int_list, DtCoordinates};
use plumbing_trace::fuzz::{CoordSampler, FuzzConfig};
use plumbing_trace::holonomy::{evaluate_word, kra_tau, kra_tk};
use plumbing_trace::position::{compile_word, components_of};
use plumbing_trace::verify::{verify, TopTermReport};
use plumbing_trace::{HolonomyWord, PantsDecomposition};

#[derive(Parser)]
#[command(name = "plumbtrace", version, about = "Trace polynomials of simple closed curves under plumbing")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Jsonl,
}

#[derive(Args, Clone)]
struct SurfaceArg {
    /// Surface spec file, or one of the built-ins s11, s04, s12, s20.
    #[arg(long)]
    surface: String,
}

#[derive(Args, Clone, Default)]
struct CoordArgs {
    /// Comma-separated intersection numbers, one per curve.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Comma-separated twists, one per curve.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// A record `q=[..] p=[..]`.
    #[arg(long)]
    coords: Option<String>,
    /// File with one `q=[..] p=[..]` record per line.
    #[arg(long)]
    coords_file: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Canonical trace polynomial of each component.
    Trace {
        #[arg(long)]
        surface: Option<String>,
        #[command(flatten)]
        coords: CoordArgs,
        /// Evaluate a word in text form instead of a curve.
        #[arg(long, conflicts_with = "surface")]
        word: Option<String>,
        /// Also print the holonomy matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Check the top-term formula on one curve or a fuzz campaign.
    Verify {
        #[arg(long)]
        surface: Option<String>,
        #[command(flatten)]
        coords: CoordArgs,
        /// Number of random connected curves to check.
        #[arg(long)]
        fuzz: Option<usize>,
        #[arg(long, env = "PLUMBTRACE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_q: i64,
        #[arg(long, default_value_t = 6)]
        max_abs_p: i64,
        #[arg(long, default_value_t = 16)]
        max_total_q: i64,
    },
    /// Holonomy word of each component.
    Word {
        #[command(flatten)]
        surface: SurfaceArg,
        #[command(flatten)]
        coords: CoordArgs,
    },
    /// Penner twists and FLP triples from DT coordinates.
    ConvertTwist {
        #[command(flatten)]
        surface: SurfaceArg,
        #[command(flatten)]
        coords: CoordArgs,
    },
    /// Random admissible coordinates.
    Random {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long, env = "PLUMBTRACE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_q: i64,
        #[arg(long, default_value_t = 6)]
        max_abs_p: i64,
        /// Keep only connected curves.
        #[arg(long)]
        connected: bool,
    },
    /// Convert between t_K and tau.
    Kra {
        /// t_K as `re,im`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "tau")]
        tk: Option<String>,
        /// tau as `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

type CliResult = Result<(), Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure { code: 2, msg: e.to_string() }
}

fn load_surface(spec: &str) -> Result<PantsDecomposition, Failure> {
    if Path::new(spec).exists() {
        return PantsDecomposition::from_file(Path::new(spec)).map_err(|e| input(format!("{spec}: {e}")));
    }
    PantsDecomposition::builtin(spec).ok_or_else(|| input(format!("{spec}: no such file or built-in surface")))
}

fn load_coords(a: &CoordArgs) -> Result<Vec<DtCoordinates>, Failure> {
    if let Some(path) = &a.coords_file {
        let text = std::fs::read_to_string(path).map_err(|e| input(format!("{path}: {e}")))?;
        let mut out = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            out.push(body.parse().map_err(|e| input(format!("{path}:{}: {e}", n + 1)))?);
        }
        return Ok(out);
    }
    if let Some(rec) = &a.coords {
        return Ok(vec![rec.parse().map_err(input)?]);
    }
    match (&a.q, &a.p) {
        (Some(q), Some(p)) => {
            let (q, p) = (parse_int_list(q).map_err(input)?, parse_int_list(p).map_err(input)?);
            Ok(vec![DtCoordinates::new(q, p)])
        }
        _ => Err(input("coordinates required: --q and --p, --coords or --coords-file")),
    }
}

fn parse_complex(s: &str) -> Result<Complex64, Failure> {
    let (re, im) = s.split_once(',').unwrap_or((s, "0"));
    let re = re.trim().parse::<f64>().map_err(|_| input(format!("bad number `{re}`")))?;
    let im = im.trim().parse::<f64>().map_err(|_| input(format!("bad number `{im}`")))?;
    Ok(Complex64::new(re, im))
}

fn emit(out: &mut impl Write, line: impl std::fmt::Display) -> CliResult {
    writeln!(out, "{line}").map_err(|e| Failure { code: 2, msg: e.to_string() })
}

fn run(cli: Cli, out: &mut impl Write) -> CliResult {
    let jsonl = cli.format == Format::Jsonl;
    match cli.cmd {
        Cmd::Trace { surface, coords, word, matrix } => {
            if let Some(text) = word {
                let w: HolonomyWord = text.parse().map_err(input)?;
                let m = evaluate_word(&w).map_err(input)?;
                let t = m.trace().canonical_sign().map_err(input)?;
                if jsonl {
                    emit(out, json!({"word": w.to_string(), "trace": t.to_string(), "matrix": matrix.then(|| m.to_string())}))?;
                } else {
                    emit(out, &t)?;
                    if matrix {
                        emit(out, format!("matrix: {m}"))?;
                    }
                }
                return Ok(());
            }
            let s = load_surface(&surface.ok_or_else(|| input("--surface or --word required"))?)?;
            let records = load_coords(&coords)?;
            for c in &records {
                let cc = components_of(&s, c).map_err(|e| input(format!("{c}: {e}")))?;
                if !jsonl && records.len() > 1 {
                    emit(out, format!("# {c}"))?;
                }
                for (k, comp) in cc.components.iter().enumerate() {
                    let (t, m) = if comp.steps.is_empty() {
                        (plumbing_trace::GaussPoly::constant(s.xi(), 2), None)
                    } else {
                        let m = evaluate_word(&compile_word(&s, comp).map_err(input)?).map_err(input)?;
                        (m.trace().canonical_sign().map_err(input)?, Some(m))
                    };
                    if jsonl {
                        emit(
                            out,
                            json!({"coords": c.to_string(), "component": k, "q": comp.q, "p": comp.p, "p_hat": comp.p_hat,
                                   "h": comp.h, "trace": t.to_string(),
                                   "matrix": if matrix { m.as_ref().map(|m| m.to_string()) } else { None }}),
                        )?;
                    } else {
                        emit(out, &t)?;
                        if let (true, Some(m)) = (matrix, &m) {
                            emit(out, format!("matrix: {m}"))?;
                        }
                    }
                }
            }
            Ok(())
        }
        Cmd::Verify { surface, coords, fuzz, seed, max_q, max_abs_p, max_total_q } => {
            if let Some(n) = fuzz {
                return run_fuzz(surface.as_deref(), n, seed, max_q, max_abs_p, max_total_q, jsonl, out);
            }
            let s = load_surface(&surface.ok_or_else(|| input("--surface required"))?)?;
            let mut all_ok = true;
            for c in load_coords(&coords)? {
                let r = verify(&s, &c).map_err(|e| input(format!("{c}: {e}")))?;
                all_ok &= r.pass;
                write_checks(out, &c, &r, jsonl)?;
            }
            if all_ok {
                Ok(())
            } else {
                Err(Failure { code: 1, msg: "verification failed".into() })
            }
        }
        Cmd::Word { surface, coords } => {
            let s = load_surface(&surface.surface)?;
            for c in load_coords(&coords)? {
                let cc = components_of(&s, &c).map_err(|e| input(format!("{c}: {e}")))?;
                for (k, comp) in cc.components.iter().enumerate() {
                    let text = match comp.pants_curve {
                        Some(i) => format!("pants-curve {}", i + 1),
                        None => compile_word(&s, comp).map_err(input)?.to_string(),
                    };
                    if jsonl {
                        emit(out, json!({"coords": c.to_string(), "component": k, "word": text}))?;
                    } else {
                        emit(out, text)?;
                    }
                }
            }
            Ok(())
        }
        Cmd::ConvertTwist { surface, coords } => {
            let s = load_surface(&surface.surface)?;
            for c in load_coords(&coords)? {
                let ph = coords::dt_to_penner(&s, &c).map_err(|e| input(format!("{c}: {e}")))?;
                let flp: Vec<_> = c.q.iter().zip(&c.p).map(|(&q, &p)| coords::flp_from_dt(q, p).ok()).collect();
                if jsonl {
                    emit(out, json!({"coords": c.to_string(), "p_hat": ph.p_hat, "flp": flp}))?;
                } else {
                    let list = ph.p_hat.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                    emit(out, format!("p_hat=[{list}]"))?;
                    for (i, f) in flp.iter().enumerate() {
                        if let Some(f) = f {
                            emit(out, format!("flp[{}]=({},{},{})", i + 1, f.m, f.s, f.t))?;
                        }
                    }
                }
            }
            Ok(())
        }
        Cmd::Random { surface, seed, count, max_q, max_abs_p, connected } => {
            let s = load_surface(&surface.surface)?;
            let mut cfg = FuzzConfig::new(s, seed, max_q, count).map_err(input)?;
            cfg.max_abs_p = max_abs_p;
            cfg.connected_only = connected;
            cfg.min_total_q = 0;
            for c in CoordSampler::new(cfg).map_err(input)? {
                if jsonl {
                    emit(out, json!({"q": c.q, "p": c.p}))?;
                } else {
                    emit(out, &c)?;
                }
            }
            Ok(())
        }
        Cmd::Kra { tk, tau } => {
            let fmt = |z: Complex64| format!("{:.15},{:.15}", z.re, z.im);
            match (tk, tau) {
                (Some(t), _) => {
                    let z = kra_tau(parse_complex(&t)?).map_err(input)?;
                    if jsonl {
                        emit(out, json!({"tau": [z.re, z.im]}))
                    } else {
                        emit(out, format!("tau={}", fmt(z)))
                    }
                }
                (None, Some(t)) => {
                    let z = kra_tk(parse_complex(&t)?);
                    if jsonl {
                        emit(out, json!({"tk": [z.re, z.im]}))
                    } else {
                        emit(out, format!("tk={}", fmt(z)))
                    }
                }
                (None, None) => Err(input("--tk or --tau required")),
            }
        }
    }
}

fn write_checks(out: &mut impl Write, c: &DtCoordinates, r: &TopTermReport, jsonl: bool) -> CliResult {
    let mut rows = vec![
        ("leading", r.leading_ok, r.leading_coefficient.clone(), r.predicted_leading.clone()),
        ("unit", r.unit_ok, r.observed_unit.map(|u| format!("i^{u}")).unwrap_or_default(), format!("+-i^{}", r.q.iter().sum::<i64>())),
        ("top-terms", r.top_terms_ok, String::new(), String::new()),
    ];
    for s in &r.subleading {
        rows.push(("subleading", s.ok, s.observed.clone(), s.predicted.clone()));
    }
    rows.push(("remainder-degree", r.remainder_degree_ok, String::new(), String::new()));
    rows.push(("per-variable-degree", r.per_variable_degree_ok, String::new(), String::new()));
    if let Some(ok) = r.pstar_ok {
        rows.push(("pstar", ok, String::new(), String::new()));
    }
    let mut sub = r.subleading.iter();
    for (name, ok, observed, expected) in rows {
        let curve = if name == "subleading" { sub.next().map(|s| s.curve) } else { None };
        if jsonl {
            emit(out, json!({"coords": c.to_string(), "check": name, "curve": curve, "ok": ok, "observed": observed, "expected": expected}))?;
        } else {
            let label = curve.map(|k| format!("{name}[{k}]")).unwrap_or_else(|| name.to_string());
            emit(out, format!("{} {label} {observed} {expected}", if ok { "ok  " } else { "FAIL" }).trim_end())?;
        }
    }
    if jsonl {
        emit(out, json!({"coords": c.to_string(), "check": "verdict", "ok": r.pass, "trace": r.trace}))
    } else {
        emit(out, format!("{} {c} trace={}", if r.pass { "pass" } else { "fail" }, r.trace))
    }
}

#[allow(clippy::too_many_arguments)]
fn run_fuzz(
    surface: Option<&str>,
    n: usize,
    seed: u64,
    max_q: i64,
    max_abs_p: i64,
    max_total_q: i64,
    jsonl: bool,
    out: &mut impl Write,
) -> CliResult {
    let surfaces: Vec<(String, PantsDecomposition)> = match surface {
        Some(sp) => vec![(sp.to_string(), load_surface(sp)?)],
        None => ["s11", "s04", "s12", "s20"].iter().map(|k| (k.to_string(), PantsDecomposition::builtin(k).unwrap())).collect(),
    };
    let per = n.div_ceil(surfaces.len());
    let mut samplers = Vec::new();
    for (k, (name, s)) in surfaces.iter().enumerate() {
        let mut cfg = FuzzConfig::new(s.clone(), seed.wrapping_add(k as u64), max_q, per).map_err(input)?;
        cfg.max_abs_p = max_abs_p;
        cfg.max_total_q = Some(max_total_q);
        samplers.push((name.clone(), s.clone(), CoordSampler::new(cfg).map_err(input)?));
    }
    let (mut done, mut failed) = (0, 0);
    'outer: loop {
        let mut progressed = false;
        for (name, s, sampler) in samplers.iter_mut() {
            if done == n {
                break 'outer;
            }
            let Some(c) = sampler.next() else { continue };
            progressed = true;
            done += 1;
            let r = verify(s, &c).map_err(|e| input(format!("{c}: {e}")))?;
            if !r.pass {
                failed += 1;
            }
            if jsonl {
                emit(out, json!({"surface": name, "coords": c.to_string(), "pass": r.pass, "failures": r.failures(), "h": r.h, "trace": r.trace}))?;
            } else {
                emit(out, format!("{} {name} {c}{}", if r.pass { "pass" } else { "fail" }, if r.pass { String::new() } else { format!(" [{}]", r.failures().join(",")) }))?;
            }
        }
        if !progressed {
            break;
        }
    }
    eprintln!("{done} curves, {failed} failed");
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure { code: 1, msg: format!("{failed} of {done} curves failed") })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let res = run(cli, &mut out);
    let _ = out.flush();
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("plumbtrace: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
