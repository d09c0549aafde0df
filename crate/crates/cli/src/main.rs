use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use mmp_core::bijections::{self, dyck_stats, tree_stats};
use mmp_core::genfun::{self, Family, FamilyId, DEFAULT_ORDER, ORDER_CAP};
use mmp_core::harness::{self, CheckReport, Params, Status};
use mmp_core::mesh::dist_poly_bounded;
use mmp_core::perm::{DEFAULT_BOUND, HARD_CAP};
use mmp_core::{Error, Permutation, QuadSpec, TSeries, XPoly};

const CONFIG_ENV: &str = "MMP_CONFIG";

#[derive(Parser, Debug)]
#[command(name = "mmp", version, about = "Quadrant marked mesh patterns in 132-avoiding permutations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Enumeration bound (at most 15). For `verify`, overrides every check's range.
    #[arg(long, global = true)]
    n_max: Option<usize>,
    /// Series truncation order (at most 64). For `verify`, overrides every check's order.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// key=value config file with nMax, order and format.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Distribution polynomial of a pattern over S_n(132).
    Poly {
        #[arg(long)]
        pattern: QuadSpec,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "enum")]
        method: PolyMethod,
    },
    /// Truncated generating function of a family.
    Series {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// all, x0, x1, ... (coefficient of x^r)
        #[arg(long, default_value = "all")]
        slice: SliceArg,
        #[arg(long, value_enum, default_value = "rec")]
        method: SeriesMethod,
    },
    /// Apply a map to a permutation.
    Biject {
        #[arg(long, value_enum)]
        map: MapArg,
        #[arg(long)]
        perm: Permutation,
    },
    /// Coefficient sequence of x^r, indexed by n.
    Sequence {
        #[arg(long, conflicts_with = "family", required_unless_present = "family")]
        pattern: Option<QuadSpec>,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long, default_value = "x0")]
        slice: SliceArg,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// First n of the sequence.
        #[arg(long, default_value_t = 0)]
        from: usize,
    },
    /// Run the verification suite.
    Verify {
        /// Tag or id fragment.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        k_max: Option<u32>,
        /// List check ids instead of running them.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyMethod {
    Enum,
    Rec,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesMethod {
    Rec,
    Closed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapArg {
    Phi,
    Theta,
    T,
    Y,
    Jointswap,
    X,
}

#[derive(Clone, Copy, Debug)]
enum SliceArg {
    All,
    X(usize),
}

impl std::str::FromStr for SliceArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(SliceArg::All);
        }
        s.strip_prefix('x')
            .and_then(|r| r.parse().ok())
            .map(SliceArg::X)
            .ok_or_else(|| format!("expected `all` or `x<r>`, got `{s}`"))
    }
}

#[derive(Debug)]
struct Config {
    n_max: usize,
    order: usize,
    format: Format,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn parse_format(s: &str) -> Result<Format, Failure> {
    Format::from_str(s, true).map_err(|_| usage(format!("unknown format `{s}`")))
}

fn load_config(cli: &Cli) -> Result<Config, Failure> {
    let mut cfg = Config { n_max: DEFAULT_BOUND, order: DEFAULT_ORDER, format: Format::Plain };
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("{}:{}: expected key=value", path.display(), lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || usage(format!("{}:{}: bad value for {key}", path.display(), lineno + 1));
            match key {
                "nMax" | "n_max" => cfg.n_max = value.parse().map_err(|_| bad())?,
                "order" => cfg.order = value.parse().map_err(|_| bad())?,
                "format" => cfg.format = parse_format(value)?,
                _ => return Err(usage(format!("{}:{}: unknown key {key}", path.display(), lineno + 1))),
            }
        }
    }
    if let Some(n) = cli.n_max {
        cfg.n_max = n;
    }
    if let Some(o) = cli.order {
        cfg.order = o;
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if cfg.n_max > HARD_CAP {
        return Err(Error::ResourceLimit { n: cfg.n_max, bound: HARD_CAP }.into());
    }
    if cfg.order > ORDER_CAP {
        return Err(Error::ResourceLimit { n: cfg.order, bound: ORDER_CAP }.into());
    }
    Ok(cfg)
}

fn number(c: &BigInt) -> Value {
    Value::Number(c.to_string().parse().expect("integers are valid JSON numbers"))
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn print_sequence(values: &[BigInt], first: usize, format: Format) {
    match format {
        Format::Plain => println!("{}", join(values)),
        Format::Json => println!("{}", Value::Array(values.iter().map(number).collect())),
        Format::Csv => {
            println!("n,value");
            for (i, v) in values.iter().enumerate() {
                println!("{},{v}", first + i);
            }
        }
    }
}

fn print_poly(p: &XPoly, format: Format) {
    match format {
        Format::Plain => println!("{p}"),
        Format::Json => println!("{}", serde_json::to_string(p).expect("serializable")),
        Format::Csv => {
            println!("exponent,coefficient");
            for (e, c) in p.terms() {
                println!("{e},{c}");
            }
        }
    }
}

fn print_series(s: &TSeries, format: Format) {
    match format {
        Format::Plain => println!("{}", s.render()),
        Format::Json => println!("{}", serde_json::to_string(s).expect("serializable")),
        Format::Csv => {
            println!("n,exponent,coefficient");
            for (n, p) in s.coeffs().iter().enumerate() {
                for (e, c) in p.terms() {
                    println!("{n},{e},{c}");
                }
            }
        }
    }
}

fn cmd_poly(cfg: &Config, pattern: QuadSpec, n: usize, method: PolyMethod) -> Result<(), Failure> {
    let p = match method {
        PolyMethod::Enum => dist_poly_bounded(n, pattern, cfg.n_max)?,
        PolyMethod::Rec => {
            let fam = FamilyId::from_spec(pattern)
                .ok_or_else(|| usage(format!("no recursion for pattern ({pattern})")))?;
            genfun::recursion_poly(fam, n)
        }
    };
    print_poly(&p, cfg.format);
    Ok(())
}

fn family_series(fam: FamilyId, order: usize, method: SeriesMethod) -> Result<TSeries, Failure> {
    Ok(match method {
        SeriesMethod::Rec => genfun::recursion_series(fam, order),
        SeriesMethod::Closed => genfun::closed_form_series(fam, order)?,
    })
}

fn cmd_series(cfg: &Config, family: Family, k: u32, slice: SliceArg, method: SeriesMethod) -> Result<(), Failure> {
    let fam = FamilyId::new(family, k);
    let s = family_series(fam, cfg.order, method)?;
    match slice {
        SliceArg::All => print_series(&s, cfg.format),
        SliceArg::X(r) => print_sequence(&genfun::slice_sequence(&s, r), 0, cfg.format),
    }
    Ok(())
}

fn cmd_biject(cfg: &Config, map: MapArg, perm: &Permutation) -> Result<(), Failure> {
    let (image, extra): (String, Vec<(String, Value)>) = match map {
        MapArg::Phi => {
            let d = bijections::phi(perm)?;
            let st = dyck_stats(&d);
            let extra = vec![
                ("heights".to_string(), json!(d.step_heights())),
                ("upHeights".to_string(), json!(st.up_heights)),
                ("maxInterval".to_string(), json!(st.max_interval_len)),
                ("hills".to_string(), json!(st.hills)),
            ];
            (d.to_string(), extra)
        }
        MapArg::Theta => {
            let t = bijections::theta(perm)?;
            let stats: Vec<Value> = (1..=perm.len())
                .map(|k| {
                    let s = tree_stats(&t, k);
                    json!({"k": k, "leftDepthAtLeast": s.left_depth_ge, "leftSubtreeAtLeast": s.left_subtree_ge})
                })
                .collect();
            (t.to_string(), vec![("stats".to_string(), Value::Array(stats))])
        }
        MapArg::T => (bijections::t_map(perm)?.to_string(), Vec::new()),
        MapArg::Y => (bijections::y_map(perm)?.to_string(), Vec::new()),
        MapArg::Jointswap => (bijections::joint_swap(perm)?.to_string(), Vec::new()),
        MapArg::X => (bijections::ss_x(perm)?.to_string(), Vec::new()),
    };
    match cfg.format {
        Format::Plain => {
            println!("{image}");
            for (k, v) in &extra {
                println!("{k}: {}", plain_value(v));
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("image".into(), Value::String(image));
            obj.extend(extra);
            println!("{}", Value::Object(obj));
        }
        Format::Csv => {
            println!("key,value");
            println!("image,{image}");
            for (k, v) in &extra {
                println!("{k},\"{}\"", plain_value(v));
            }
        }
    }
    Ok(())
}

fn plain_value(v: &Value) -> String {
    match v {
        Value::Array(items) => items.iter().map(plain_value).collect::<Vec<_>>().join(","),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", plain_value(v))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn cmd_sequence(
    cfg: &Config,
    pattern: Option<QuadSpec>,
    family: Option<Family>,
    k: u32,
    slice: SliceArg,
    count: usize,
    from: usize,
) -> Result<(), Failure> {
    let r = match slice {
        SliceArg::X(r) => r,
        SliceArg::All => return Err(usage("sequence needs a slice x<r>")),
    };
    let fam = match (pattern, family) {
        (_, Some(f)) => Some(FamilyId::new(f, k)),
        (Some(p), None) => FamilyId::from_spec(p),
        (None, None) => unreachable!("clap requires one of them"),
    };
    let ns = from..from + count;
    let values: Vec<BigInt> = match fam {
        Some(fam) => {
            if ns.end > ORDER_CAP + 1 {
                return Err(Error::ResourceLimit { n: ns.end - 1, bound: ORDER_CAP }.into());
            }
            ns.map(|n| genfun::recursion_poly(fam, n).coeff(r)).collect()
        }
        None => {
            let p = pattern.expect("pattern given");
            ns.map(|n| dist_poly_bounded(n, p, cfg.n_max).map(|q| q.coeff(r)))
                .collect::<Result<_, _>>()?
        }
    };
    print_sequence(&values, from, cfg.format);
    Ok(())
}

fn print_reports(reports: &[CheckReport], format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(reports).expect("serializable")),
        Format::Csv => {
            println!("id,status,cases,runtimeMillis,witness");
            for r in reports {
                let w = r.witness.as_deref().unwrap_or("").replace('"', "\"\"");
                println!("{},{},{},{},\"{w}\"", r.id, status_word(r.status), r.cases, r.runtime_millis);
            }
        }
        Format::Plain => {
            for r in reports {
                println!("{:<7} {} ({} cases, {} ms)", status_word(r.status).to_uppercase(), r.id, r.cases, r.runtime_millis);
                if let Some(w) = &r.witness {
                    println!("        witness: {w}");
                }
                if let Some(n) = &r.note {
                    println!("        note: {n}");
                }
            }
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            println!("{} checks, {failed} failed", reports.len());
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    }
}

fn cmd_verify(cli: &Cli, cfg: &Config, filter: Option<&str>, k_max: Option<u32>, list: bool) -> Result<u8, Failure> {
    if list {
        for id in harness::check_ids() {
            println!("{id}");
        }
        return Ok(0);
    }
    // Only ranges given explicitly on the command line override the
    // per-check defaults.
    let overrides = Params { n_max: cli.n_max, k_max, order: cli.order };
    let reports = harness::run_suite(filter, &overrides)?;
    print_reports(&reports, cfg.format);
    Ok(if harness::all_passed(&reports) { 0 } else { 1 })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let cfg = load_config(cli)?;
    match &cli.command {
        Command::Poly { pattern, n, method } => cmd_poly(&cfg, *pattern, *n, *method)?,
        Command::Series { family, k, slice, method } => cmd_series(&cfg, *family, *k, *slice, *method)?,
        Command::Biject { map, perm } => cmd_biject(&cfg, *map, perm)?,
        Command::Sequence { pattern, family, k, slice, count, from } => {
            cmd_sequence(&cfg, *pattern, *family, *k, *slice, *count, *from)?
        }
        Command::Verify { filter, k_max, list } => return cmd_verify(cli, &cfg, filter.as_deref(), *k_max, *list),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
