use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use distpoly::families::{enumerate_block_graphs, enumerate_trees, FamilyKind, FamilySpec};
use distpoly::graph::{decode_graph6, encode_graph6, Graph};
use distpoly::linalg::{char_poly, cofactor_sum, rank, Inertia, IntMatrix};
use distpoly::metric::{
    hierarchy_report, HierarchyOptions, HierarchyReport, Metric, DEFAULT_HYPER_BOUND, DEFAULT_HYPER_SEARCH_CAP,
    DEFAULT_L1_CAP,
};
use distpoly_cli::range::parse_values;
use distpoly_cli::record::{Checks, ReportRecord};
use distpoly_cli::report::{emit_report, Format};
use distpoly_cli::sweep::{family_grid, run_sweep, Instance, SweepOptions};

const EXIT_USAGE: u8 = 1;
const EXIT_FINDING: u8 = 2;

/// Exact distance characteristic polynomials of block graphs and checks of
/// their coefficient sequences and metric properties.
#[derive(Parser, Debug)]
#[command(name = "distpoly", version)]
struct Cli {
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// JSONL result cache; records found there are not recomputed.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include per-record wall-clock times in JSON reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Conjecture,
    Hierarchy,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_parser = parse_kind)]
    family: FamilyKind,
    #[arg(long)]
    t: Option<String>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    ell: Option<String>,
    #[arg(long)]
    d: Option<String>,
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    n: Option<String>,
    /// Prüfer sequence for `tree_pruefer`, comma separated.
    #[arg(long)]
    pruefer: Option<String>,
}

#[derive(Args, Debug)]
struct HierarchyArgs {
    #[arg(long, default_value_t = DEFAULT_L1_CAP)]
    l1_max_n: usize,
    #[arg(long, default_value_t = DEFAULT_HYPER_BOUND)]
    hyper_bound: u32,
    #[arg(long, default_value_t = DEFAULT_HYPER_SEARCH_CAP)]
    hyper_cap: u128,
}

impl HierarchyArgs {
    fn options(&self) -> HierarchyOptions {
        HierarchyOptions { l1_max_n: self.l1_max_n, hyper_bound: self.hyper_bound, hyper_cap: self.hyper_cap }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one family member and print it as graph6.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Print the edge-list format instead of graph6.
        #[arg(long)]
        edge_list: bool,
    },
    /// Analyse the graphs in a file (graph6, one per line; `-` for stdin).
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        /// The input is a single graph in edge-list format.
        #[arg(long)]
        edge_list: bool,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "conjecture")]
        check: Vec<Check>,
        #[command(flatten)]
        hierarchy: HierarchyArgs,
    },
    /// Analyse every member of a family over parameter ranges such as `3..30`.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "conjecture")]
        check: Vec<Check>,
        #[command(flatten)]
        hierarchy: HierarchyArgs,
    },
    /// Analyse every block graph (or tree) of the given orders up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: String,
        /// Enumerate trees instead of block graphs.
        #[arg(long)]
        trees: bool,
        #[arg(long, default_value_t = distpoly::families::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "conjecture")]
        check: Vec<Check>,
        #[command(flatten)]
        hierarchy: HierarchyArgs,
    },
    /// Place a finite metric (whitespace-separated integer matrix) on the embedding ladder.
    Metric {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        hierarchy: HierarchyArgs,
    },
    /// Exact invariants of an integer matrix. With no selection flags, all are printed.
    Matrix {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        rank: bool,
        #[arg(long)]
        charpoly: bool,
        #[arg(long)]
        det: bool,
        #[arg(long)]
        cof: bool,
        #[arg(long)]
        inertia: bool,
    },
}

fn parse_kind(text: &str) -> Result<FamilyKind, String> {
    text.parse().map_err(|e: distpoly::families::FamilyError| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let jobs = match cli.jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let sweep_options = |checks: &[Check], h: &HierarchyArgs| SweepOptions {
        jobs,
        cache: cli.cache.clone(),
        checks: Checks { hierarchy: checks.contains(&Check::Hierarchy), hierarchy_options: h.options() },
        timing: cli.timing,
    };
    match &cli.command {
        Command::Gen { family, edge_list } => {
            let specs = family_specs(family)?;
            let [spec] = specs.as_slice() else { bail!("gen takes single parameter values, not ranges") };
            let g = spec.build()?;
            let text = if *edge_list { g.to_edge_list() } else { format!("{}\n", encode_graph6(&g)) };
            write_output(cli.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Analyze { input, edge_list, check, hierarchy } => {
            let text = read_input(input)?;
            let instances = if *edge_list {
                vec![Instance::new("input", Graph::parse_edge_list(&text)?)]
            } else {
                graph6_lines(&text)?
            };
            report_sweep(&cli, instances, &sweep_options(check, hierarchy))
        }
        Command::Sweep { family, check, hierarchy } => {
            let instances = family_specs(family)?.iter().map(Instance::from_spec).collect();
            report_sweep(&cli, instances, &sweep_options(check, hierarchy))
        }
        Command::Enumerate { n, trees, cap, check, hierarchy } => {
            let mut instances = Vec::new();
            for order in parse_values(n)? {
                let graphs = if *trees { enumerate_trees(order, *cap)? } else { enumerate_block_graphs(order, *cap)? };
                let label = if *trees { "tree" } else { "block_graph" };
                instances.extend(graphs.into_iter().map(|g| Instance::new(format!("{label}(n={order})"), g)));
            }
            report_sweep(&cli, instances, &sweep_options(check, hierarchy))
        }
        Command::Metric { input, hierarchy } => {
            let m = IntMatrix::parse(&read_input(input)?)?;
            let metric = Metric::from_matrix(&m)?;
            let report = hierarchy_report(&metric, &hierarchy.options())?;
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Csv => hierarchy_csv(&report)?,
            };
            write_output(cli.out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Matrix { input, rank: want_rank, charpoly, det, cof, inertia } => {
            let m = IntMatrix::parse(&read_input(input)?)?;
            let all = !(*want_rank || *charpoly || *det || *cof || *inertia);
            let p = (all || *charpoly || *det || *inertia).then(|| char_poly(&m));
            let summary = MatrixSummary {
                order: m.order(),
                rank: (all || *want_rank).then(|| rank(&m)),
                det: (all || *det).then(|| {
                    let p0 = p.as_ref().expect("computed").coeff(0);
                    if m.order() % 2 == 0 {
                        p0
                    } else {
                        -p0
                    }
                }),
                cof: (all || *cof).then(|| cofactor_sum(&m)),
                charpoly: if all || *charpoly { p.as_ref().map(|p| p.coeffs().to_vec()) } else { None },
                inertia: if (all || *inertia) && m.is_symmetric() { Some(m.inertia()?) } else { None },
            };
            if *inertia && !m.is_symmetric() {
                bail!("inertia needs a symmetric matrix");
            }
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&summary)? + "\n",
                Format::Csv => matrix_csv(&summary)?,
            };
            write_output(cli.out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

#[derive(Serialize)]
struct MatrixSummary {
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", with = "distpoly::decimal::bigint_opt")]
    det: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none", with = "distpoly::decimal::bigint_opt")]
    cof: Option<BigInt>,
    /// Coefficients of `det(xI − M)` from the constant term up.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "charpoly_strings")]
    charpoly: Option<Vec<BigInt>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inertia: Option<Inertia>,
}

fn charpoly_strings<S: serde::Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    let strings: Option<Vec<String>> = v.as_ref().map(|c| c.iter().map(BigInt::to_string).collect());
    strings.serialize(s)
}

fn matrix_csv(s: &MatrixSummary) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["field", "value"])?;
    w.write_record(["order", &s.order.to_string()])?;
    if let Some(r) = s.rank {
        w.write_record(["rank", &r.to_string()])?;
    }
    if let Some(d) = &s.det {
        w.write_record(["det", &d.to_string()])?;
    }
    if let Some(c) = &s.cof {
        w.write_record(["cof", &c.to_string()])?;
    }
    if let Some(p) = &s.charpoly {
        let joined: Vec<String> = p.iter().map(BigInt::to_string).collect();
        w.write_record(["charpoly", &joined.join(";")])?;
    }
    if let Some(i) = s.inertia {
        w.write_record(["inertia", &format!("{};{};{}", i.positive, i.zero, i.negative)])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn hierarchy_csv(r: &HierarchyReport) -> Result<String> {
    let opt = |v: Option<bool>| v.map(|b| b.to_string()).unwrap_or_default();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "l1",
        "hypermetric_violated",
        "hyper_bound",
        "negative_type",
        "inertia_positive",
        "inertia_zero",
        "inertia_negative",
        "one_positive_eigenvalue",
    ])?;
    w.write_record([
        r.n.to_string(),
        opt(r.l1),
        opt(r.hypermetric_violated),
        r.hyper_bound.to_string(),
        r.negative_type.to_string(),
        r.inertia.positive.to_string(),
        r.inertia.zero.to_string(),
        r.inertia.negative.to_string(),
        r.one_positive_eigenvalue.to_string(),
    ])?;
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn family_specs(args: &FamilyArgs) -> Result<Vec<FamilySpec>> {
    let values = |name: &str, v: &Option<String>| -> Result<Vec<usize>> {
        v.as_deref().map_or(Ok(Vec::new()), |text| parse_values(text).with_context(|| format!("--{name}")))
    };
    let mut specs = family_grid(
        args.family,
        &[
            ("t", values("t", &args.t)?),
            ("k", values("k", &args.k)?),
            ("ell", values("ell", &args.ell)?),
            ("d", values("d", &args.d)?),
            ("q", values("q", &args.q)?),
            ("b", values("b", &args.b)?),
            ("n", values("n", &args.n)?),
        ],
    );
    if let Some(text) = &args.pruefer {
        let seq = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().with_context(|| format!("--pruefer entry `{s}`")))
            .collect::<Result<Vec<_>>>()?;
        for spec in &mut specs {
            spec.params.pruefer = Some(seq.clone());
        }
    }
    Ok(specs)
}

fn graph6_lines(text: &str) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = decode_graph6(line).with_context(|| format!("line {}", i + 1))?;
        out.push(Instance::new(format!("input(line={})", i + 1), g));
    }
    Ok(out)
}

fn report_sweep(cli: &Cli, instances: Vec<Instance>, options: &SweepOptions) -> Result<u8> {
    let outcome = run_sweep(instances, options)?;
    if outcome.discarded_bytes > 0 {
        eprintln!("warning: discarded a truncated cache record ({} bytes)", outcome.discarded_bytes);
    }
    eprintln!("{} records: {} computed, {} from cache", outcome.records.len(), outcome.computed, outcome.cached);
    let mut text = emit_report(&outcome.records, cli.format);
    if cli.format == Format::Json {
        text.push('\n');
    }
    write_output(cli.out.as_deref(), &text)?;
    Ok(exit_code(&outcome.records))
}

/// Findings take precedence over records that could not be analysed.
fn exit_code(records: &[ReportRecord]) -> u8 {
    for r in records.iter().filter(|r| r.is_finding()) {
        eprintln!("finding: {} [{}] failed {}", r.key, r.family, r.findings.join(", "));
    }
    for r in records.iter().filter(|r| r.error.is_some()) {
        eprintln!("error: {} [{}]: {}", r.key, r.family, r.error.as_deref().unwrap_or_default());
    }
    if records.iter().any(ReportRecord::is_finding) {
        EXIT_FINDING
    } else if records.iter().any(|r| r.error.is_some()) {
        EXIT_USAGE
    } else {
        0
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}
