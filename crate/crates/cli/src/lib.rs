//! Command-line front end. [`run`] does all the work and returns the exit
//! code together with the text to print, so tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 an expectation or balance check failed,
//! 2 bad usage or input.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dimeq_core::catalog::{self, ExportRecord};
use dimeq_core::equation::{cfgk_coefficient_orbit, lemma71_check};
use dimeq_core::group::levi_dimension;
use dimeq_core::{
    cfgk_check, check_equation, eisenstein_dim, enumerate_partitions, functional_value, group_dimension, search,
    theta_lift_predict, unipotent_radical_dim, BalanceReport, Bindings, Filter, GroupDescriptor, IntegralDescriptor,
    LeviComposition, Orbit, Partition, SearchQuery,
};

#[derive(Parser, Debug)]
#[command(name = "dimeq", version, about = "Dimension equations for automorphic integrals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension and GK dimension of a unipotent orbit.
    OrbitDim(OrbitArgs),
    /// Weight vector and filtration dimensions of an orbit.
    Filtration(OrbitArgs),
    /// Every orbit of a group, decreasing lexicographic order.
    OrbitList {
        group: String,
        #[arg(long)]
        max_gk: Option<u64>,
    },
    /// Levi and unipotent radical dimensions of a parabolic.
    LeviDim(LeviArgs),
    /// Dimension of an Eisenstein series induced from a parabolic.
    EisensteinDim {
        #[command(flatten)]
        levi: LeviArgs,
        #[arg(long)]
        inducing_gk: u64,
    },
    /// Checks the dimension equation of an integral given as JSON.
    Check {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Runs the built-in catalog of integrals.
    Catalog(CatalogArgs),
    /// Searches for orbits with a prescribed GK dimension.
    Search(SearchArgs),
    /// Predicted GK dimension of theta lifts from Sp_2n to SO_2k.
    PredictTheta {
        #[arg(long)]
        n: u64,
        #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
        k: Option<u64>,
        /// Predict for every k in 1..=MAX.
        #[arg(long, value_name = "MAX")]
        sweep: Option<u64>,
    },
    /// Checks the orbit identity behind the lifting search.
    Lemma71 {
        #[arg(long, required_unless_present = "sweep")]
        m: Option<u64>,
        #[arg(long, required_unless_present = "sweep")]
        k: Option<u64>,
        #[arg(long, required_unless_present = "sweep")]
        r: Option<u64>,
        /// All 1 <= m,k <= MAX and 2 <= r <= MAX.
        #[arg(long, value_name = "MAX", conflicts_with_all = ["m", "k", "r"])]
        sweep: Option<u64>,
    },
    /// Checks the generalized doubling dimension equation.
    Cfgk {
        #[arg(long, required_unless_present = "sweep")]
        n: Option<u64>,
        #[arg(long, required_unless_present = "sweep")]
        k: Option<u64>,
        /// All 1 <= n,k <= MAX.
        #[arg(long, value_name = "MAX", conflicts_with_all = ["n", "k"])]
        sweep: Option<u64>,
    },
}

#[derive(Args, Debug)]
struct OrbitArgs {
    group: String,
    partition: String,
    /// Bind identifiers used in the partition, e.g. `n=2,k=3`.
    #[arg(long, value_delimiter = ',')]
    bind: Vec<String>,
}

#[derive(Args, Debug)]
struct LeviArgs {
    group: String,
    /// GL block sizes, e.g. `2,1`.
    blocks: String,
    /// The Levi keeps a classical factor of the same type.
    #[arg(long)]
    classical_factor: bool,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// Entry id or glob pattern.
    #[arg(long)]
    id: Option<String>,
    /// Parameter range `a..b` (inclusive), replacing the default 1..8.
    #[arg(long)]
    range: Option<String>,
    /// Only list entries.
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, requires = "gk", conflicts_with = "dim6")]
    group: Option<String>,
    #[arg(long, requires = "group")]
    gk: Option<u64>,
    /// `m=M,k=K,r=R`
    #[arg(long, required_unless_present = "group")]
    dim6: Option<String>,
    #[arg(long)]
    even_mult: bool,
    #[arg(long)]
    even_parts: bool,
    #[arg(long)]
    minimal_p: bool,
}

/// Error carrying the exit code it maps to.
struct Failure(i32, String);

impl From<dimeq_core::Error> for Failure {
    fn from(e: dimeq_core::Error) -> Self {
        Failure(2, format!("error: {e}"))
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, format!("error: {}", msg.into()))
}

type Out = Result<(i32, String), Failure>;

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("output types serialize")
}

fn parse_group(s: &str) -> Result<GroupDescriptor, Failure> {
    Ok(s.parse()?)
}

fn parse_bindings(items: &[String]) -> Result<Bindings, Failure> {
    let mut b = Bindings::new();
    for item in items {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("binding `{item}` is not NAME=VALUE")))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("binding `{item}` has a non-integer value")))?;
        b.insert(name.trim().to_string(), value);
    }
    Ok(b)
}

fn parse_orbit(a: &OrbitArgs) -> Result<Orbit, Failure> {
    let g = parse_group(&a.group)?;
    let p = Partition::parse_with(&a.partition, &parse_bindings(&a.bind)?)?;
    Ok(Orbit::new(g, p)?)
}

/// `a..b` or `a..=b`, both inclusive.
fn parse_range(s: &str) -> Result<RangeInclusive<u64>, Failure> {
    let bad = || usage(format!("range `{s}` is not of the form a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

/// `m=1,k=3,r=2` in any order.
fn parse_dim6(s: &str) -> Result<(u64, u64, u64), Failure> {
    let (mut m, mut k, mut r) = (None, None, None);
    for item in s.split(',') {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("dim6 item `{item}` is not NAME=VALUE")))?;
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("dim6 item `{item}` has a bad value")))?;
        match name.trim() {
            "m" => m = Some(value),
            "k" => k = Some(value),
            "r" => r = Some(value),
            other => return Err(usage(format!("unknown dim6 parameter `{other}`"))),
        }
    }
    match (m, k, r) {
        (Some(m), Some(k), Some(r)) => Ok((m, k, r)),
        _ => Err(usage("dim6 needs m, k and r")),
    }
}

#[derive(Serialize)]
struct OrbitOut {
    dim: u64,
    gk: u64,
    odd_parts: u64,
}

#[derive(Serialize)]
struct OrbitRow {
    partition: Partition,
    dim: u64,
    gk: u64,
}

#[derive(Serialize)]
struct LeviOut {
    group_dim: u64,
    levi_dim: u64,
    radical_dim: u64,
}

#[derive(Serialize)]
struct EisensteinOut {
    inducing_dim: u64,
    radical_dim: u64,
    dim: u64,
}

#[derive(Serialize)]
struct LemmaPoint {
    m: u64,
    k: u64,
    r: u64,
    lhs: i64,
    rhs: i64,
    balanced: bool,
}

#[derive(Serialize)]
struct CfgkPoint {
    n: u64,
    k: u64,
    lhs: i64,
    rhs: i64,
    balanced: bool,
    weight_one_count: u64,
}

#[derive(Serialize)]
struct Sweep<T> {
    points: usize,
    passed: usize,
    failures: Vec<T>,
}

fn report_table(r: &BalanceReport) -> String {
    format!(
        "{}: lhs {} rhs {} deficit {} {}",
        r.name,
        r.lhs_total,
        r.rhs_total,
        r.deficit,
        r.verdict()
    )
}

fn cmd_orbit_dim(a: &OrbitArgs, fmt: Format) -> Out {
    let o = parse_orbit(a)?;
    let out = OrbitOut {
        dim: o.dim(),
        gk: o.gk(),
        odd_parts: o.odd_part_count(),
    };
    Ok((
        0,
        match fmt {
            Format::Json => json(&out),
            Format::Table => format!(
                "{} on {}\ndim {}\ngk {}\nodd_parts {}",
                o.partition(),
                o.group(),
                out.dim,
                out.gk,
                out.odd_parts
            ),
        },
    ))
}

fn cmd_filtration(a: &OrbitArgs, fmt: Format) -> Out {
    let o = parse_orbit(a)?;
    let f = o.filtration();
    Ok((
        0,
        match fmt {
            Format::Json => json(&f),
            Format::Table => {
                let mut s = format!("{} on {}\n", o.partition(), o.group());
                let w: Vec<String> = f.weights.iter().map(i64::to_string).collect();
                writeln!(s, "weights {}", w.join(" ")).unwrap();
                writeln!(s, "dim N1 {}", f.dim_n1).unwrap();
                writeln!(s, "dim N2 {}", f.dim_n2).unwrap();
                writeln!(s, "gk {}", f.gk()).unwrap();
                s.push_str("weight  roots");
                for (w, c) in &f.histogram {
                    write!(s, "\n{w:>6}  {c}").unwrap();
                }
                s
            }
        },
    ))
}

fn cmd_orbit_list(group: &str, max_gk: Option<u64>, fmt: Format) -> Out {
    let g = parse_group(group)?;
    let mut rows = Vec::new();
    for p in enumerate_partitions(g.size(), g.family())? {
        let o = Orbit::new(g, p)?;
        if max_gk.is_some_and(|m| o.gk() > m) {
            continue;
        }
        rows.push(OrbitRow {
            dim: o.dim(),
            gk: o.gk(),
            partition: o.partition().clone(),
        });
    }
    Ok((
        0,
        match fmt {
            Format::Json => json(&rows),
            Format::Table => {
                let mut s = format!("{:<24} {:>8} {:>8}", "partition", "dim", "gk");
                for r in &rows {
                    write!(s, "\n{:<24} {:>8} {:>8}", r.partition.to_string(), r.dim, r.gk).unwrap();
                }
                s
            }
        },
    ))
}

fn cmd_levi(a: &LeviArgs, fmt: Format) -> Out {
    let g = parse_group(&a.group)?;
    let levi = LeviComposition::parse_blocks(&a.blocks, a.classical_factor)?;
    let out = LeviOut {
        group_dim: group_dimension(&g),
        levi_dim: levi_dimension(&g, &levi)?,
        radical_dim: unipotent_radical_dim(&g, &levi)?,
    };
    Ok((
        0,
        match fmt {
            Format::Json => json(&out),
            Format::Table => format!(
                "group {}\nlevi {}\nradical {}",
                out.group_dim, out.levi_dim, out.radical_dim
            ),
        },
    ))
}

fn cmd_eisenstein(a: &LeviArgs, inducing_gk: u64, fmt: Format) -> Out {
    let g = parse_group(&a.group)?;
    let levi = LeviComposition::parse_blocks(&a.blocks, a.classical_factor)?;
    let f = eisenstein_dim(inducing_gk, &g, &levi)?;
    let out = EisensteinOut {
        inducing_dim: inducing_gk,
        radical_dim: unipotent_radical_dim(&g, &levi)?,
        dim: functional_value(&f),
    };
    Ok((
        0,
        match fmt {
            Format::Json => json(&out),
            Format::Table => format!(
                "inducing {}\nradical {}\ndim {}",
                out.inducing_dim, out.radical_dim, out.dim
            ),
        },
    ))
}

fn cmd_check(path: &PathBuf, fmt: Format) -> Out {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let d: IntegralDescriptor = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let r = check_equation(&d)?;
    let code = match d.expected_balanced {
        Some(expected) if expected != r.balanced => 1,
        _ => 0,
    };
    Ok((
        code,
        match fmt {
            Format::Json => json(&r),
            Format::Table => {
                let mut s = report_table(&r);
                if code == 1 {
                    s.push_str(" (expectation not met)");
                }
                s
            }
        },
    ))
}

fn cmd_catalog(a: &CatalogArgs, fmt: Format) -> Out {
    if a.list {
        let entries = catalog::select(a.id.as_deref())?;
        return Ok((
            0,
            match fmt {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Row<'a> {
                        id: &'a str,
                        params: &'a [&'a str],
                        expected: bool,
                        description: &'a str,
                        reference: &'a str,
                    }
                    let rows: Vec<Row> = entries
                        .iter()
                        .map(|e| Row {
                            id: e.id,
                            params: e.params,
                            expected: e.expected_balanced,
                            description: e.description,
                            reference: e.reference,
                        })
                        .collect();
                    json(&rows)
                }
                Format::Table => entries
                    .iter()
                    .map(|e| format!("{:<24} [{}] {}", e.id, e.params.join(","), e.description))
                    .collect::<Vec<_>>()
                    .join("\n"),
            },
        ));
    }
    let range = a.range.as_deref().map(parse_range).transpose()?;
    let runs = catalog::run_catalog(a.id.as_deref(), range)?;
    let code = if runs.iter().all(|r| r.meets_expectation()) {
        0
    } else {
        1
    };
    Ok((
        code,
        match fmt {
            Format::Json => json(&runs.iter().map(ExportRecord::from).collect::<Vec<_>>()),
            Format::Table => {
                let mut lines = Vec::with_capacity(runs.len() + 1);
                for r in &runs {
                    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    lines.push(format!(
                        "{:<24} {:<10} {:>6} {:>6} {:<10} {}",
                        r.id,
                        params.join(","),
                        r.report.lhs_total,
                        r.report.rhs_total,
                        r.report.verdict(),
                        if r.meets_expectation() { "ok" } else { "UNEXPECTED" }
                    ));
                }
                let ok = runs.iter().filter(|r| r.meets_expectation()).count();
                lines.push(format!("{ok}/{} as expected", runs.len()));
                lines.join("\n")
            }
        },
    ))
}

fn cmd_search(a: &SearchArgs, fmt: Format) -> Out {
    let mut q = match (&a.group, a.gk, &a.dim6) {
        (Some(g), Some(gk), None) => SearchQuery::target_gk(parse_group(g)?, gk),
        (None, None, Some(spec)) => {
            let (m, k, r) = parse_dim6(spec)?;
            SearchQuery::dim6(m, k, r)?
        }
        _ => return Err(usage("search needs either --group and --gk, or --dim6")),
    };
    if a.even_mult {
        q = q.with_filter(Filter::AllMultiplicitiesEven);
    }
    if a.even_parts {
        q = q.with_filter(Filter::AllPartsEven);
    }
    if a.minimal_p {
        q = q.with_filter(Filter::MinimalDistinctParts);
    }
    let res = search(&q)?;
    Ok((
        0,
        match fmt {
            Format::Json => json(&res),
            Format::Table => {
                let mut s = format!(
                    "{}: gk {}, {} of {} orbits",
                    res.group,
                    res.target_gk,
                    res.solutions.len(),
                    res.total_candidates
                );
                for p in &res.solutions {
                    write!(s, "\n{p}").unwrap();
                }
                s
            }
        },
    ))
}

fn cmd_theta(n: u64, k: Option<u64>, sweep: Option<u64>, fmt: Format) -> Out {
    let ks: Vec<u64> = match (k, sweep) {
        (Some(k), None) => vec![k],
        (None, Some(max)) => (1..=max).collect(),
        _ => return Err(usage("predict-theta needs exactly one of --k and --sweep")),
    };
    let preds = ks
        .into_iter()
        .map(|k| theta_lift_predict(n, k))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((
        0,
        match fmt {
            Format::Json if sweep.is_none() => json(&preds[0]),
            Format::Json => json(&preds),
            Format::Table => {
                let mut s = format!("{:>4} {:>4} {:>8}  prediction", "n", "k", "gk");
                for p in &preds {
                    let what = if p.vanishing_predicted {
                        "vanishes"
                    } else if p.generic_compatible {
                        "generic"
                    } else {
                        "non-generic"
                    };
                    write!(s, "\n{:>4} {:>4} {:>8}  {what}", p.n, p.k, p.sigma_gk).unwrap();
                }
                s
            }
        },
    ))
}

fn sweep_out<T: Serialize>(
    points: usize,
    failures: Vec<T>,
    fmt: Format,
    what: &str,
    table: impl Fn(&T) -> String,
) -> (i32, String) {
    let code = if failures.is_empty() { 0 } else { 1 };
    let text = match fmt {
        Format::Json => json(&Sweep {
            points,
            passed: points - failures.len(),
            failures,
        }),
        Format::Table => {
            let mut s = format!("{what}: {} of {points} balanced", points - failures.len());
            for f in &failures {
                write!(s, "\n{}", table(f)).unwrap();
            }
            s
        }
    };
    (code, text)
}

fn lemma_point(m: u64, k: u64, r: u64) -> Result<LemmaPoint, Failure> {
    let rep = lemma71_check(m, k, r)?;
    Ok(LemmaPoint {
        m,
        k,
        r,
        lhs: rep.lhs_total,
        rhs: rep.rhs_total,
        balanced: rep.balanced,
    })
}

fn lemma_row(p: &LemmaPoint) -> String {
    format!(
        "m={} k={} r={}: lhs {} rhs {} {}",
        p.m,
        p.k,
        p.r,
        p.lhs,
        p.rhs,
        if p.balanced { "balanced" } else { "unbalanced" }
    )
}

fn cmd_lemma71(m: Option<u64>, k: Option<u64>, r: Option<u64>, sweep: Option<u64>, fmt: Format) -> Out {
    if let Some(max) = sweep {
        let mut points = 0;
        let mut failures = Vec::new();
        for m in 1..=max {
            for k in 1..=max {
                for r in 2..=max {
                    points += 1;
                    let p = lemma_point(m, k, r)?;
                    if !p.balanced {
                        failures.push(p);
                    }
                }
            }
        }
        return Ok(sweep_out(points, failures, fmt, "lemma71", lemma_row));
    }
    let (Some(m), Some(k), Some(r)) = (m, k, r) else {
        return Err(usage("lemma71 needs --m, --k and --r, or --sweep"));
    };
    let p = lemma_point(m, k, r)?;
    let code = if p.balanced { 0 } else { 1 };
    Ok((
        code,
        match fmt {
            Format::Json => json(&p),
            Format::Table => lemma_row(&p),
        },
    ))
}

fn cfgk_point(n: u64, k: u64) -> Result<CfgkPoint, Failure> {
    let rep = cfgk_check(n, k)?;
    let coefficient = cfgk_coefficient_orbit(n, k)?;
    Ok(CfgkPoint {
        n,
        k,
        lhs: rep.lhs_total,
        rhs: rep.rhs_total,
        balanced: rep.balanced,
        weight_one_count: coefficient.filtration().weight_one_count,
    })
}

fn cfgk_row(p: &CfgkPoint) -> String {
    format!(
        "n={} k={}: lhs {} rhs {} {} weight-one {}",
        p.n,
        p.k,
        p.lhs,
        p.rhs,
        if p.balanced { "balanced" } else { "unbalanced" },
        p.weight_one_count
    )
}

fn cmd_cfgk(n: Option<u64>, k: Option<u64>, sweep: Option<u64>, fmt: Format) -> Out {
    let ok = |p: &CfgkPoint| p.balanced && p.weight_one_count == 0;
    if let Some(max) = sweep {
        let mut points = 0;
        let mut failures = Vec::new();
        for n in 1..=max {
            for k in 1..=max {
                points += 1;
                let p = cfgk_point(n, k)?;
                if !ok(&p) {
                    failures.push(p);
                }
            }
        }
        return Ok(sweep_out(points, failures, fmt, "cfgk", cfgk_row));
    }
    let (Some(n), Some(k)) = (n, k) else {
        return Err(usage("cfgk needs --n and --k, or --sweep"));
    };
    let p = cfgk_point(n, k)?;
    let code = if ok(&p) { 0 } else { 1 };
    Ok((
        code,
        match fmt {
            Format::Json => json(&p),
            Format::Table => cfgk_row(&p),
        },
    ))
}

fn dispatch(cli: Cli) -> Out {
    let fmt = cli.format;
    match &cli.command {
        Command::OrbitDim(a) => cmd_orbit_dim(a, fmt),
        Command::Filtration(a) => cmd_filtration(a, fmt),
        Command::OrbitList { group, max_gk } => cmd_orbit_list(group, *max_gk, fmt),
        Command::LeviDim(a) => cmd_levi(a, fmt),
        Command::EisensteinDim { levi, inducing_gk } => cmd_eisenstein(levi, *inducing_gk, fmt),
        Command::Check { spec } => cmd_check(spec, fmt),
        Command::Catalog(a) => cmd_catalog(a, fmt),
        Command::Search(a) => cmd_search(a, fmt),
        Command::PredictTheta { n, k, sweep } => cmd_theta(*n, *k, *sweep, fmt),
        Command::Lemma71 { m, k, r, sweep } => cmd_lemma71(*m, *k, *r, *sweep, fmt),
        Command::Cfgk { n, k, sweep } => cmd_cfgk(*n, *k, *sweep, fmt),
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string().trim_end().to_string()),
                _ => {
                    let rendered = e.to_string();
                    let line = rendered
                        .lines()
                        .find(|l| !l.trim().is_empty())
                        .unwrap_or("error: bad usage");
                    (2, line.to_string())
                }
            };
        }
    };
    match dispatch(cli) {
        Ok(out) => out,
        Err(Failure(code, msg)) => (code, msg),
    }
}
