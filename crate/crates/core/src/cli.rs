//! The `tstr` command line: `solve`, `regret`, `gen`, `export`, `bench`.
//!
//! Exit codes: 0 success, 1 other failure, 2 usage or method/structure
//! mismatch, 3 infeasible input, 4 budget exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{
    solve_colgen_traced, ColGenOptions, DEFAULT_ITERATION_CAP, DEFAULT_NODE_BUDGET,
};
use crate::error::{Error, Result};
use crate::generate;
use crate::instance::{BinaryVector, Cost, Instance};
use crate::model_io::{self, export_lp, CertificateFile};
use crate::oracle;
use crate::regret;
use crate::selection::{self, GreedyOptions, PiProfile};
use crate::shortest_path::{self, Variant};

#[derive(Debug, Parser)]
#[command(
    name = "tstr",
    version,
    about = "Two-stage minmax regret solvers under interval uncertainty"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Exact,
    Greedy,
    Midpoint,
    Colgen,
    Pn,
    FewDistinct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegretMethod {
    Fast,
    Enum,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    RandomSelection,
    RandomSp,
    PartitionTstr,
    PartitionRegret,
    HamiltonianInc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    CompactSelection,
    RegretSelection,
    Adversarial,
    PPi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Simple,
    Relaxed,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Simple => Variant::Simple,
            VariantArg::Relaxed => Variant::Relaxed,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimize the maximum regret of an instance.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        method: SolveMethod,
        /// Greedy seed size.
        #[arg(long = "L", short = 'L', default_value_t = 0)]
        seed_size: usize,
        /// Disable supermodular pruning in the greedy heuristic.
        #[arg(long)]
        no_prune: bool,
        /// Branch-and-bound node budget for column generation.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Column generation iteration cap.
        #[arg(long, default_value_t = DEFAULT_ITERATION_CAP)]
        max_iterations: usize,
        /// Distinct-value limit for `few-distinct`.
        #[arg(long, default_value_t = selection::DEFAULT_DISTINCT_LIMIT)]
        distinct: usize,
        /// Also solve by brute force and report the gap.
        #[arg(long)]
        oracle: bool,
        /// Print the column generation log (`iter LB UB pool`) to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Compute the maximum regret of a first-stage solution.
    Regret {
        instance: PathBuf,
        /// Bit string, element 0 first; defaults to the file's `x`.
        #[arg(long)]
        x: Option<String>,
        #[arg(long, value_enum, default_value = "fast")]
        method: RegretMethod,
        /// Write the certificate JSON here.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Generate an instance file.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 20)]
        max_cost: Cost,
        #[arg(long, default_value_t = 5)]
        nodes: usize,
        #[arg(long, default_value_t = 10)]
        arcs: usize,
        #[arg(long, value_enum, default_value = "simple")]
        variant: VariantArg,
        /// Partition items, comma separated.
        #[arg(long, value_delimiter = ',')]
        a: Vec<Cost>,
        /// Digraph arcs for `hamiltonian-inc`, as `i-j` pairs separated by commas.
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
        #[arg(long, default_value_t = 0)]
        v1: usize,
        #[arg(long)]
        vn: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a MIP model in LP format.
    Export {
        instance: PathBuf,
        #[arg(long, value_enum)]
        model: ModelKind,
        #[arg(long)]
        x: Option<String>,
        /// Profile `k,l` for `p-pi`.
        #[arg(long, value_delimiter = ',')]
        pi: Vec<Cost>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run methods over a directory of instances and write CSV.
    Bench {
        dir: PathBuf,
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "exact,greedy,midpoint"
        )]
        methods: Vec<SolveMethod>,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Result of one solver run, printed as JSON.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub method: String,
    /// Maximum regret of `x`.
    pub value: i64,
    pub x: BinaryVector,
    pub wall_time_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluations: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_value: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateFile>,
}

impl RunReport {
    fn new(method: &str, value: i64, x: BinaryVector, started: Instant) -> Self {
        RunReport {
            method: method.to_string(),
            value,
            x,
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
            bound: None,
            iterations: None,
            nodes: None,
            evaluations: None,
            oracle_value: None,
            gap: None,
            certificate: None,
        }
    }

    fn with_oracle(mut self, optimum: i64) -> Self {
        self.oracle_value = Some(optimum);
        self.gap = Some(self.value - optimum);
        self
    }
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Input(_) | Error::Schema { .. } | Error::Json(_) | Error::Unsupported(_) => 2,
        Error::Infeasible(_) => 3,
        Error::Budget { .. } => 4,
        _ => 1,
    }
}

fn method_name(m: SolveMethod) -> &'static str {
    match m {
        SolveMethod::Exact => "exact",
        SolveMethod::Greedy => "greedy",
        SolveMethod::Midpoint => "midpoint",
        SolveMethod::Colgen => "colgen",
        SolveMethod::Pn => "pn",
        SolveMethod::FewDistinct => "few-distinct",
    }
}

pub struct SolveSettings {
    pub greedy: GreedyOptions,
    pub colgen: ColGenOptions,
    pub distinct: usize,
    pub trace: bool,
}

impl Default for SolveSettings {
    fn default() -> Self {
        SolveSettings {
            greedy: GreedyOptions::default(),
            colgen: ColGenOptions::default(),
            distinct: selection::DEFAULT_DISTINCT_LIMIT,
            trace: false,
        }
    }
}

/// Runs one solve method and reports the true maximum regret of its answer.
pub fn run_method(
    inst: &Instance,
    method: SolveMethod,
    settings: &SolveSettings,
) -> Result<RunReport> {
    let started = Instant::now();
    let name = method_name(method);
    let report = match method {
        SolveMethod::Exact => {
            let sol = match inst.structure() {
                crate::instance::Structure::Selection(_) => {
                    let s = selection::solve_exact(inst)?;
                    (s.value, s.x)
                }
                crate::instance::Structure::ShortestPath(_) => shortest_path::solve_tstr_sp(inst)?,
            };
            RunReport::new(name, sol.0, sol.1, started)
        }
        SolveMethod::Greedy => {
            let g = selection::solve_greedy(inst, &settings.greedy)?;
            let z = regret::max_regret(inst, &g.x)?.value;
            let mut r = RunReport::new(name, z, g.x, started);
            r.bound = Some(g.value);
            r.evaluations = Some(g.evaluations);
            r
        }
        SolveMethod::Midpoint => {
            let x = regret::midpoint_heuristic(inst)?;
            let z = regret::max_regret(inst, &x)?.value;
            RunReport::new(name, z, x, started)
        }
        SolveMethod::Colgen => {
            let mut err = std::io::stderr().lock();
            let res = solve_colgen_traced(inst, &settings.colgen, |rec| {
                if settings.trace {
                    let _ = writeln!(err, "{}", rec.to_tsv());
                }
            })?;
            let mut r = RunReport::new(name, res.value, res.x, started);
            r.iterations = Some(res.state.iterations);
            r.nodes = Some(res.state.master_nodes);
            r
        }
        SolveMethod::Pn => {
            let x = selection::solve_p_equals_n(inst)?;
            let z = regret::max_regret(inst, &x)?.value;
            RunReport::new(name, z, x, started)
        }
        SolveMethod::FewDistinct => {
            let (z, x) = selection::solve_few_distinct(inst, settings.distinct)?;
            RunReport::new(name, z, x, started)
        }
    };
    Ok(report)
}

fn read_instance(path: &Path) -> Result<(Instance, Option<BinaryVector>)> {
    model_io::parse_instance_file(&fs::read_to_string(path)?)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn pick_x(arg: Option<&str>, from_file: Option<BinaryVector>) -> Result<BinaryVector> {
    match arg {
        Some(s) => BinaryVector::parse(s),
        None => {
            from_file.ok_or_else(|| Error::input("no --x given and the instance file has no x"))
        }
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_solve(
    inst_path: &Path,
    method: SolveMethod,
    settings: &SolveSettings,
    with_oracle: bool,
) -> Result<String> {
    let (inst, _) = read_instance(inst_path)?;
    let mut report = run_method(&inst, method, settings)?;
    if with_oracle {
        let (opt, _) = oracle::brute_tstr(&inst)?;
        report = report.with_oracle(opt);
    }
    Ok(json_line(&report))
}

fn cmd_regret(
    inst_path: &Path,
    x: Option<&str>,
    method: RegretMethod,
    cert_path: Option<&Path>,
) -> Result<String> {
    let (inst, file_x) = read_instance(inst_path)?;
    let x = pick_x(x, file_x)?;
    inst.check_len("x", x.len())?;
    let started = Instant::now();
    let (name, cert) = match method {
        RegretMethod::Fast => ("fast", regret::max_regret(&inst, &x)?),
        RegretMethod::Enum => (
            "enum",
            regret::max_regret_enum(&inst, &x, regret::DEFAULT_PAIR_BUDGET)?,
        ),
        RegretMethod::Oracle => ("oracle", oracle::brute_z(&inst, &x)?),
    };
    let cert_text = model_io::write_certificate(&inst, &cert);
    if let Some(path) = cert_path {
        fs::write(path, &cert_text)?;
    }
    let mut report = RunReport::new(name, cert.value, x, started);
    report.certificate = Some(serde_json::from_str(&cert_text)?);
    Ok(json_line(&report))
}

fn parse_edge(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::input(format!("edge {s:?} is not of the form i-j"));
    let (a, b) = s.trim().split_once('-').ok_or_else(bad)?;
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: Family,
    seed: u64,
    n: usize,
    p: Option<usize>,
    max_cost: Cost,
    nodes: usize,
    arcs: usize,
    variant: Variant,
    a: &[Cost],
    edges: &[String],
    v1: usize,
    vn: Option<usize>,
) -> Result<String> {
    let (inst, x) = match family {
        Family::RandomSelection => (
            generate::random_selection(n, p.unwrap_or(n.div_ceil(2)), max_cost, seed)?,
            None,
        ),
        Family::RandomSp => (
            generate::random_sp(nodes, arcs, max_cost, variant, seed)?,
            None,
        ),
        Family::PartitionTstr => (shortest_path::gen_partition_tstr(a, variant)?, None),
        Family::PartitionRegret => {
            let (inst, x) = shortest_path::gen_partition_regret(a, variant)?;
            (inst, Some(x))
        }
        Family::HamiltonianInc => {
            let list = edges
                .iter()
                .map(|e| parse_edge(e))
                .collect::<Result<Vec<_>>>()?;
            let (inst, x) = shortest_path::gen_hamiltonian_inc(
                nodes,
                &list,
                v1,
                vn.unwrap_or(nodes.saturating_sub(1)),
            )?;
            (inst, Some(x))
        }
    };
    Ok(model_io::emit_instance(&inst, x.as_ref()))
}

fn cmd_export(inst_path: &Path, model: ModelKind, x: Option<&str>, pi: &[Cost]) -> Result<String> {
    let (inst, _) = read_instance(inst_path)?;
    let need_x = |x: Option<&str>| -> Result<BinaryVector> {
        let x = x.ok_or_else(|| Error::input("this model needs --x"))?;
        let x = BinaryVector::parse(x)?;
        inst.check_len("x", x.len())?;
        Ok(x)
    };
    let m = match model {
        ModelKind::CompactSelection => selection::build_compact_mip(&inst)?,
        ModelKind::RegretSelection => selection::build_regret_mip(&inst, &need_x(x)?)?,
        ModelKind::Adversarial => {
            let x = need_x(x)?;
            regret::max_regret(&inst, &x)?;
            let rows = inst
                .oracle()
                .recourse_actions(&inst, &x, regret::DEFAULT_PAIR_BUDGET)?;
            model_io::build_adversarial_mip(&inst, &x, &rows)
        }
        ModelKind::PPi => {
            let [k, l] = pi else {
                return Err(Error::input("p-pi needs --pi k,l"));
            };
            if k > l {
                return Err(Error::input("profile needs k <= l"));
            }
            selection::selection_p(&inst)?;
            let prof = PiProfile::new(&selection::AlphaSet::new(&inst), *k, *l);
            selection::build_p_pi_mip(&inst, &selection::coefficients(&inst, &prof))?
        }
    };
    Ok(export_lp(&m))
}

#[derive(Debug, Serialize)]
struct BenchRow {
    instance: String,
    method: String,
    value: Option<i64>,
    oracle: Option<i64>,
    gap: Option<i64>,
    ratio: Option<String>,
    time_ms: String,
    status: String,
}

fn cmd_bench(dir: &Path, methods: &[SolveMethod], with_oracle: bool) -> Result<String> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Error::input(format!(
            "no instance files in {}",
            dir.display()
        )));
    }
    let settings = SolveSettings::default();
    let per_file: Vec<Option<Vec<BenchRow>>> = files
        .par_iter()
        .map(|path| {
            let name = path
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let inst = match read_instance(path) {
                Ok((inst, _)) => inst,
                Err(e) => {
                    eprintln!("warning: skipping {name}: {e}");
                    return None;
                }
            };
            let optimum = if with_oracle {
                oracle::brute_tstr(&inst).ok().map(|r| r.0)
            } else {
                None
            };
            let rows = methods
                .iter()
                .map(|&m| match run_method(&inst, m, &settings) {
                    Ok(r) => BenchRow {
                        instance: name.clone(),
                        method: r.method.clone(),
                        value: Some(r.value),
                        oracle: optimum,
                        gap: optimum.map(|o| r.value - o),
                        ratio: optimum.and_then(|o| match (o, r.value) {
                            (0, 0) => Some("1.0000".to_string()),
                            (0, _) => None,
                            (o, v) => Some(format!("{:.4}", v as f64 / o as f64)),
                        }),
                        time_ms: format!("{:.3}", r.wall_time_ms),
                        status: "ok".to_string(),
                    },
                    Err(e) => BenchRow {
                        instance: name.clone(),
                        method: method_name(m).to_string(),
                        value: None,
                        oracle: optimum,
                        gap: None,
                        ratio: None,
                        time_ms: String::new(),
                        status: format!("error: {e}"),
                    },
                })
                .collect();
            Some(rows)
        })
        .collect();
    if per_file.iter().all(Option::is_none) {
        return Err(Error::input("no instance could be read"));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in per_file.into_iter().flatten().flatten() {
        w.serialize(row)
            .map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

/// Executes a parsed command line, printing results to stdout.
pub fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve {
            instance,
            method,
            seed_size,
            no_prune,
            budget,
            max_iterations,
            distinct,
            oracle,
            trace,
        } => {
            let settings = SolveSettings {
                greedy: GreedyOptions {
                    seed_size,
                    prune: !no_prune,
                },
                colgen: ColGenOptions {
                    tol: 0,
                    max_iterations,
                    node_budget: budget,
                },
                distinct,
                trace,
            };
            print!("{}", cmd_solve(&instance, method, &settings, oracle)?);
        }
        Command::Regret {
            instance,
            x,
            method,
            certificate,
        } => {
            print!(
                "{}",
                cmd_regret(&instance, x.as_deref(), method, certificate.as_deref())?
            );
        }
        Command::Gen {
            family,
            seed,
            n,
            p,
            max_cost,
            nodes,
            arcs,
            variant,
            a,
            edges,
            v1,
            vn,
            out,
        } => {
            let text = cmd_gen(
                family,
                seed,
                n,
                p,
                max_cost,
                nodes,
                arcs,
                variant.into(),
                &a,
                &edges,
                v1,
                vn,
            )?;
            write_or_print(out.as_deref(), &text)?;
        }
        Command::Export {
            instance,
            model,
            x,
            pi,
            out,
        } => {
            let text = cmd_export(&instance, model, x.as_deref(), &pi)?;
            write_or_print(out.as_deref(), &text)?;
        }
        Command::Bench {
            dir,
            methods,
            oracle,
            out,
        } => {
            let text = cmd_bench(&dir, &methods, oracle)?;
            write_or_print(out.as_deref(), &text)?;
        }
    }
    Ok(())
}

/// Entry point for the binary: parses `std::env::args`, runs, maps errors
/// to exit codes.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
