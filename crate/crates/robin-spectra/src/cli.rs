//! Command-line frontend: solvers, optimizers, the transition solver,
//! verification suites, and closed-form bounds, with JSON/CSV output and
//! a keyed result cache for the heavy operations.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 suite
//! failures. Diagnostics are single lines on stderr.

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::cache::{canonical_key, Cache};
use crate::error::{domain, usage, Error, Result};
use crate::interval::{
    interval_eigenvalue_with_tol, BoundaryParam, IntervalSpec, DEFAULT_REL_TOL,
};
use crate::optimize::{
    optimal_sum_probe_with, optimize_rectangle_with, optimize_union_with, solve_transition,
    RectOptConfig, UnionOptConfig,
};
use crate::spectrum::{RectSpec, RectSpectrum, UnionSpec, UnionSpectrum};
use crate::verify::{report_to_csv, report_to_json, run_suite, SuiteConfig};

fn parse_alpha(s: &str) -> std::result::Result<BoundaryParam, String> {
    s.parse::<BoundaryParam>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "robin-spectra",
    version,
    about = "Robin Laplacian spectra on intervals, rectangles and unions of rectangles"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: CommonOpts,
}

#[derive(Debug, Args)]
struct CommonOpts {
    /// Total area A of the domain
    #[arg(short = 'A', long = "area", global = true, default_value_t = 1.0)]
    area: f64,

    /// Robin coefficient (a nonnegative float) or the literal `dirichlet`
    #[arg(long, global = true, default_value = "1", value_parser = parse_alpha)]
    alpha: BoundaryParam,

    /// Eigenvalue index (1-based)
    #[arg(long, global = true, default_value_t = 1)]
    k: usize,

    /// Rectangle aspect ratio a >= 1; for `eig interval`, the interval length
    #[arg(long, global = true, default_value_t = 1.0)]
    aspect: f64,

    /// Relative solver/search tolerance override
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Output encoding
    #[arg(long, global = true, value_parser = ["json", "csv"], default_value = "json")]
    format: String,

    /// Output path (default stdout)
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized suite grids
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cache directory (defaults to the user cache dir)
    #[arg(long, global = true, env = "ROBIN_SPECTRA_CACHE")]
    cache_dir: Option<PathBuf>,

    /// Bypass the cache for both reads and writes
    #[arg(long, global = true)]
    no_cache: bool,

    /// Timing and cache diagnostics on stderr
    #[arg(long, global = true)]
    verbose: bool,

    /// Domain spec file (UnionSpec JSON: {"components":[{"area":..,"aspect":..},..]})
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Eigenvalues of intervals, rectangles and unions
    Eig {
        #[command(subcommand)]
        target: EigTarget,
    },
    /// Minimize the k-th eigenvalue over a domain family
    Optimize {
        #[command(subcommand)]
        target: OptimizeTarget,
    },
    /// Solve the 3-to-1 transition system
    Transition,
    /// Exact rectangle eigenvalue counting below a threshold
    Count {
        /// Counting threshold λ
        #[arg(long)]
        lambda: f64,
        /// Inline spec, e.g. rect:A=1,a=2
        inline: Option<String>,
    },
    /// Equal-squares and per-index-optimal eigenvalue sums
    Sum,
    /// Run a named verification suite
    Verify {
        /// One of: appendix-bounds, isoperimetric, k1-mode, counting,
        /// k-squares, transition, rectangles-23, union-12,
        /// dirichlet-limit, sums
        suite: String,
        /// Override the suite's sample count
        #[arg(long)]
        samples: Option<usize>,
        /// Override the suite's union-depth / index cap
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Evaluate a named closed-form bound, series or constant
    Bounds {
        /// One of: eig1-simple, eig1, eig2, eig1-series-a,
        /// eig1-series-alpha, eig2-series-a, eig2-series-alpha, tan, gap,
        /// union-squares, counting, thresholds, envelope, union-series
        name: String,
        /// Abscissa for `tan`, interval length for `gap`
        #[arg(long)]
        x: Option<f64>,
        /// Dimension for `envelope`
        #[arg(long)]
        dim: Option<usize>,
        /// Retained terms for the series bounds
        #[arg(long)]
        order: Option<usize>,
        /// Counting threshold for `counting`
        #[arg(long)]
        lambda: Option<f64>,
    },
}

#[derive(Debug, Subcommand)]
enum EigTarget {
    /// k-th eigenvalue of an interval (--aspect is the length)
    Interval,
    /// k-th eigenvalue of a rectangle
    Rect {
        /// Inline spec, e.g. rect:A=1,a=2
        inline: Option<String>,
    },
    /// k-th eigenvalue of a disjoint union (--spec file or inline)
    Union {
        /// Inline spec, e.g. rect:A=1,a=2;rect:A=0.5,a=1
        inline: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum OptimizeTarget {
    /// Minimize over rectangles of fixed area
    Rect {
        /// Coarse grid size for the aspect search
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Minimize over disjoint unions of rectangles of fixed total area
    Union,
}

/// Parses `rect:A=1,a=2` (optionally several, separated by `;`), or a
/// literal UnionSpec JSON object.
fn parse_inline_spec(text: &str) -> Result<UnionSpec> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed)
            .map_err(|e| usage(format!("bad inline JSON spec: {e}")));
    }
    let mut components = Vec::new();
    for part in trimmed.split(';') {
        let body = part
            .trim()
            .strip_prefix("rect:")
            .ok_or_else(|| usage(format!("inline spec component `{part}` must start with `rect:`")))?;
        let mut area = None;
        let mut aspect = None;
        for kv in body.split(',') {
            let (key, value) = kv
                .split_once('=')
                .ok_or_else(|| usage(format!("bad `key=value` pair `{kv}` in inline spec")))?;
            let parsed: f64 = value
                .trim()
                .parse()
                .map_err(|_| usage(format!("bad number `{value}` in inline spec")))?;
            match key.trim() {
                "A" | "area" => area = Some(parsed),
                "a" | "aspect" => aspect = Some(parsed),
                other => return Err(usage(format!("unknown inline spec key `{other}`"))),
            }
        }
        let area = area.ok_or_else(|| usage("inline spec component is missing `A=`"))?;
        components.push(RectSpec::new(area, aspect.unwrap_or(1.0))?);
    }
    UnionSpec::new(components)
}

fn load_spec(opts: &CommonOpts, inline: Option<&str>) -> Result<Option<UnionSpec>> {
    if let Some(text) = inline {
        return parse_inline_spec(text).map(Some);
    }
    if let Some(path) = &opts.spec {
        let bytes = std::fs::read(path)
            .map_err(|e| usage(format!("cannot read spec file {}: {e}", path.display())))?;
        let spec: UnionSpec = serde_json::from_slice(&bytes)
            .map_err(|e| usage(format!("bad spec file {}: {e}", path.display())))?;
        return Ok(Some(spec));
    }
    Ok(None)
}

fn single_rect(opts: &CommonOpts, inline: Option<&str>) -> Result<RectSpec> {
    match load_spec(opts, inline)? {
        Some(spec) => {
            if spec.components().len() != 1 {
                return Err(usage("this operation expects a spec with exactly one rectangle"));
            }
            Ok(spec.components()[0])
        }
        None => RectSpec::new(opts.area, opts.aspect),
    }
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Ok(dir) = std::env::var("XDG_CACHE_HOME") {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir).join("robin-spectra"));
        }
    }
    if let Ok(home) = std::env::var("HOME") {
        if !home.is_empty() {
            return Some(PathBuf::from(home).join(".cache").join("robin-spectra"));
        }
    }
    Some(std::env::temp_dir().join("robin-spectra-cache"))
}

fn cache_for(opts: &CommonOpts) -> Cache {
    if opts.no_cache {
        return Cache::disabled();
    }
    let dir = opts.cache_dir.clone().or_else(default_cache_dir);
    Cache::new(dir, opts.verbose)
}

fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Computes through the cache: look up, else run and store.
fn cached<F>(cache: &Cache, key: &str, verbose: bool, compute: F) -> Result<Value>
where
    F: FnOnce() -> Result<Value>,
{
    let started = Instant::now();
    if let Some(hit) = cache.lookup(key) {
        if verbose {
            eprintln!("{key}: cache hit in {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
        }
        return Ok(hit);
    }
    let value = compute()?;
    cache.store(key, &value);
    if verbose {
        eprintln!("{key}: computed in {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
    }
    Ok(value)
}

/// Flattens a JSON value into `(path, scalar)` rows for CSV output.
fn flatten_json(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (key, sub) in map {
                let path = if prefix.is_empty() { key.clone() } else { format!("{prefix}.{key}") };
                flatten_json(&path, sub, rows);
            }
        }
        Value::Array(items) => {
            for (idx, sub) in items.iter().enumerate() {
                flatten_json(&format!("{prefix}[{idx}]"), sub, rows);
            }
        }
        scalar => rows.push((
            if prefix.is_empty() { "value".to_string() } else { prefix.to_string() },
            match scalar {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            },
        )),
    }
}

fn value_to_csv(value: &Value) -> Result<String> {
    let mut rows = Vec::new();
    flatten_json("", value, &mut rows);
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["key", "value"])?;
    for (key, val) in rows {
        writer.write_record([key.as_str(), val.as_str()])?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn emit(opts: &CommonOpts, text: &str) -> Result<()> {
    match &opts.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            file.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                file.write_all(b"\n")?;
            }
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn twin_path(path: &Path, format: &str) -> PathBuf {
    let twin_ext = if format == "csv" { "json" } else { "csv" };
    path.with_extension(twin_ext)
}

fn execute(cli: &Cli) -> Result<i32> {
    let opts = &cli.opts;
    let cache = cache_for(opts);
    let tol = opts.tol.unwrap_or(DEFAULT_REL_TOL);
    let alpha_str = opts.alpha.to_string();

    let value: Value = match &cli.command {
        Command::Eig { target } => match target {
            EigTarget::Interval => {
                let iv = IntervalSpec::new(opts.aspect)?;
                let lambda = interval_eigenvalue_with_tol(iv, opts.alpha, opts.k, tol)?;
                serde_json::json!({
                    "length": opts.aspect, "alpha": opts.alpha, "k": opts.k, "lambda": lambda,
                })
            }
            EigTarget::Rect { inline } => {
                let rect = single_rect(opts, inline.as_deref())?;
                let eig = RectSpectrum::with_tol(rect, opts.alpha, tol)?.eigenvalue(opts.k)?;
                serde_json::json!({
                    "area": rect.area(), "aspect": rect.aspect(), "alpha": opts.alpha,
                    "k": opts.k, "lambda": eig.value, "mode": [eig.mode.i, eig.mode.j],
                })
            }
            EigTarget::Union { inline } => {
                let spec = load_spec(opts, inline.as_deref())?
                    .ok_or_else(|| usage("eig union needs --spec FILE or an inline spec"))?;
                let eig = UnionSpectrum::with_tol(&spec, opts.alpha, tol)?.eigenvalue(opts.k)?;
                serde_json::json!({
                    "alpha": opts.alpha, "k": opts.k, "lambda": eig.value,
                    "component": eig.component, "index": eig.index, "spec": spec,
                })
            }
        },
        Command::Optimize { target } => match target {
            OptimizeTarget::Rect { grid } => {
                let key = canonical_key(
                    "optimize-rect",
                    &params_of(&[
                        ("k", opts.k.to_string()),
                        ("area", opts.area.to_string()),
                        ("alpha", alpha_str.clone()),
                        ("tol", opts.tol.unwrap_or(1e-8).to_string()),
                        ("grid", grid.unwrap_or(512).to_string()),
                    ]),
                );
                cached(&cache, &key, opts.verbose, || {
                    let config = RectOptConfig {
                        grid_points: grid.unwrap_or(512),
                        rel_tol: opts.tol.unwrap_or(1e-8),
                        ..RectOptConfig::default()
                    };
                    let r = optimize_rectangle_with(opts.k, opts.area, opts.alpha, &config)?;
                    Ok(serde_json::to_value(r)?)
                })?
            }
            OptimizeTarget::Union => {
                let key = canonical_key(
                    "optimize-union",
                    &params_of(&[
                        ("k", opts.k.to_string()),
                        ("area", opts.area.to_string()),
                        ("alpha", alpha_str.clone()),
                        ("tol", opts.tol.unwrap_or(1e-9).to_string()),
                    ]),
                );
                cached(&cache, &key, opts.verbose, || {
                    let config = UnionOptConfig {
                        value_rel_tol: opts.tol.unwrap_or(1e-9),
                        ..UnionOptConfig::default()
                    };
                    let r = optimize_union_with(opts.k, opts.area, opts.alpha, &config)?;
                    Ok(serde_json::to_value(r)?)
                })?
            }
        },
        Command::Transition => {
            let key = canonical_key("transition", &BTreeMap::new());
            cached(&cache, &key, opts.verbose, || {
                Ok(serde_json::to_value(solve_transition())?)
            })?
        }
        Command::Count { lambda, inline } => {
            let rect = single_rect(opts, inline.as_deref())?;
            let count = crate::spectrum::rect_counting(rect, opts.alpha, *lambda)?;
            let bound = match opts.alpha {
                BoundaryParam::Robin(_) | BoundaryParam::Dirichlet => {
                    crate::bounds::counting_upper_bound(rect.aspect(), rect.area(), *lambda).ok()
                }
            };
            serde_json::json!({
                "area": rect.area(), "aspect": rect.aspect(), "alpha": opts.alpha,
                "lambda": lambda, "count": count, "lattice_upper_bound": bound,
            })
        }
        Command::Sum => {
            let alpha = opts
                .alpha
                .alpha()
                .ok_or_else(|| domain("the sum probe needs a finite alpha"))?;
            let key = canonical_key(
                "sum",
                &params_of(&[
                    ("k", opts.k.to_string()),
                    ("area", opts.area.to_string()),
                    ("alpha", alpha_str.clone()),
                ]),
            );
            cached(&cache, &key, opts.verbose, || {
                let probe = optimal_sum_probe_with(opts.k, opts.area, alpha, &UnionOptConfig::default())?;
                Ok(serde_json::to_value(probe)?)
            })?
        }
        Command::Verify { suite, samples, max_k } => {
            let config = SuiteConfig {
                seed: opts.seed,
                samples: *samples,
                max_k: *max_k,
                ..Default::default()
            };
            let report = run_suite(suite, &config)?;
            let (primary, twin) = if opts.format == "csv" {
                (report_to_csv(&report)?, report_to_json(&report)?)
            } else {
                (report_to_json(&report)?, report_to_csv(&report)?)
            };
            emit(opts, &primary)?;
            if let Some(path) = &opts.out {
                let twin_file = twin_path(path, &opts.format);
                std::fs::write(&twin_file, twin)?;
                if opts.verbose {
                    eprintln!("twin report: {}", twin_file.display());
                }
            }
            eprintln!(
                "suite {suite}: {} passed, {} failed in {:.1} ms",
                report.passed, report.failed, report.wall_ms
            );
            return Ok(if report.failed > 0 { 3 } else { 0 });
        }
        Command::Bounds { name, x, dim, order, lambda } => {
            bounds_command(opts, name, *x, *dim, *order, *lambda)?
        }
    };

    let text = if opts.format == "csv" {
        value_to_csv(&value)?
    } else {
        serde_json::to_string_pretty(&value)?
    };
    emit(opts, &text)?;
    Ok(0)
}

fn need_alpha(opts: &CommonOpts) -> Result<f64> {
    opts.alpha
        .alpha()
        .ok_or_else(|| domain("this bound needs a finite alpha"))
}

fn bounds_command(
    opts: &CommonOpts,
    name: &str,
    x: Option<f64>,
    dim: Option<usize>,
    order: Option<usize>,
    lambda: Option<f64>,
) -> Result<Value> {
    use crate::bounds::*;
    let a = opts.aspect;
    let value = match name {
        "eig1-simple" => serde_json::json!({
            "a": a, "alpha": need_alpha(opts)?, "upper": eig1_upper_simple(a, need_alpha(opts)?)?,
        }),
        "eig1" => serde_json::to_value(eig1_bounds(a, need_alpha(opts)?)?)?,
        "eig2" => serde_json::to_value(eig2_bounds(a, need_alpha(opts)?)?)?,
        "eig1-series-a" => {
            serde_json::to_value(eig1_series_small_a(a, need_alpha(opts)?, order.unwrap_or(5))?)?
        }
        "eig1-series-alpha" => {
            serde_json::to_value(eig1_series_large_alpha(a, need_alpha(opts)?, order.unwrap_or(4))?)?
        }
        "eig2-series-a" => {
            serde_json::to_value(eig2_series_small_a(a, need_alpha(opts)?, order.unwrap_or(5))?)?
        }
        "eig2-series-alpha" => {
            serde_json::to_value(eig2_series_large_alpha(a, need_alpha(opts)?, order.unwrap_or(5))?)?
        }
        "tan" => {
            let x = x.ok_or_else(|| usage("bounds tan needs --x"))?;
            serde_json::to_value(tan_envelope(x)?)?
        }
        "gap" => {
            let d = x.ok_or_else(|| usage("bounds gap needs --x (the interval length)"))?;
            serde_json::json!({"length": d, "gap_lower_bound": gap_lower_bound(d)?})
        }
        "union-squares" => {
            serde_json::to_value(union_squares_bounds(opts.k, opts.area, need_alpha(opts)?)?)?
        }
        "counting" => {
            let lambda = lambda.ok_or_else(|| usage("bounds counting needs --lambda"))?;
            serde_json::json!({
                "aspect": a, "area": opts.area, "lambda": lambda,
                "upper_bound": counting_upper_bound(a, opts.area, lambda)?,
            })
        }
        "thresholds" => serde_json::to_value(thresholds(opts.k, opts.area)?)?,
        "envelope" => {
            let d = dim.unwrap_or(2);
            let e = envelope_constants(d)?;
            serde_json::json!({
                "dim": d, "upper_regime": e.upper_regime, "lower_regime": e.lower_regime,
                "unit_ball_volume": unit_ball_volume(d)?,
            })
        }
        "union-series" => serde_json::to_value(optimal_union_series(
            opts.k,
            opts.area,
            need_alpha(opts)?,
            order.unwrap_or(5),
        )?)?,
        other => {
            return Err(usage(format!(
                "unknown bound `{other}`; see `robin-spectra bounds --help` for the list"
            )))
        }
    };
    Ok(value)
}

/// CLI entry point: parses `std::env::args`, runs, and maps errors to the
/// documented exit codes.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(Error::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_spec_single_rect() {
        let spec = parse_inline_spec("rect:A=1,a=2").unwrap();
        assert_eq!(spec.components().len(), 1);
        assert_eq!(spec.components()[0].area(), 1.0);
        assert_eq!(spec.components()[0].aspect(), 2.0);
    }

    #[test]
    fn inline_spec_union_and_json() {
        let spec = parse_inline_spec("rect:A=1,a=1;rect:A=0.5,a=3").unwrap();
        assert_eq!(spec.components().len(), 2);
        let spec = parse_inline_spec(r#"{"components":[{"area":2.0,"aspect":1.5}]}"#).unwrap();
        assert_eq!(spec.components()[0].aspect(), 1.5);
    }

    #[test]
    fn inline_spec_errors_are_usage() {
        assert!(matches!(parse_inline_spec("circle:r=1"), Err(Error::Usage(_))));
        assert!(matches!(parse_inline_spec("rect:A=x"), Err(Error::Usage(_))));
        assert!(matches!(parse_inline_spec("rect:b=1"), Err(Error::Usage(_))));
    }

    #[test]
    fn flatten_produces_stable_paths() {
        let value = serde_json::json!({"a": 1.5, "b": {"c": [1, 2]}, "d": "s"});
        let mut rows = Vec::new();
        flatten_json("", &value, &mut rows);
        assert_eq!(
            rows,
            vec![
                ("a".to_string(), "1.5".to_string()),
                ("b.c[0]".to_string(), "1".to_string()),
                ("b.c[1]".to_string(), "2".to_string()),
                ("d".to_string(), "s".to_string()),
            ]
        );
    }
}
