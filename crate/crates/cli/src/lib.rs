//! The `latticemill` command line.
//!
//! Exit codes: 0 when every checked identity holds, 1 on a violation (or a
//! Hilbert method disagreement), 2 on malformed input or invalid parameters.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use latticemill::identities::{
    self, boundary_hilbert, describe_complex, describe_poset, poset_hilbert, reports_to_json, run_corpus,
    HilbertMethod,
};
use latticemill::io::{parse_complex, parse_poset, write_complex, write_poset};
use latticemill::poset::random_poset;
use latticemill::simplicial::{boundary_cross_polytope, boundary_cyclic_polytope, boundary_simplex, is_flag};
use latticemill::{CorpusSpec, Poset, SimplicialComplex, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "latticemill", version, about = "Exact checks for order-ideal lattices, clique complexes and polytope boundaries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an identity on one instance.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[command(flatten)]
        input: Input,
        /// Largest degree for the Hilbert agreement run by `all`.
        #[arg(long)]
        t_max: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate the cumulative Hilbert function by one or all methods.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t_max: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[command(flatten)]
        output: Output,
    },
    /// Write a generated poset or complex in the text format.
    Gen {
        #[arg(value_enum)]
        name: Generator,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run the verification corpus.
    Corpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Theorem1,
    AntichainExample,
    GammaDual,
    DehnSommerville,
    FlagCorollary,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    ClosedForm,
    Resolution,
    DualFormula,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Chain,
    Antichain,
    RandomPoset,
    SimplexBoundary,
    CrossPolytope,
    CyclicPolytope,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    #[arg(short = 'p')]
    pub p: Option<usize>,
    #[arg(short = 'n')]
    pub n: Option<usize>,
    #[arg(short = 'd')]
    pub d: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    #[arg(long, value_name = "PATH", conflicts_with_all = ["complex", "generator"])]
    pub poset: Option<PathBuf>,
    #[arg(long, value_name = "PATH", conflicts_with = "generator")]
    pub complex: Option<PathBuf>,
    #[arg(long = "gen", value_name = "NAME", value_enum)]
    pub generator: Option<Generator>,
    #[command(flatten)]
    pub params: Params,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long)]
    pub json: bool,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// A failure that is the caller's fault; maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(err: E) -> Self {
        InputError(err.to_string())
    }
}

pub enum Outcome {
    Pass,
    Violation,
}

impl Outcome {
    fn of(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Violation
        }
    }
}

pub fn exit_code(result: Result<Outcome, InputError>) -> ExitCode {
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(InputError(message)) => {
            eprintln!("latticemill: {message}");
            ExitCode::from(2)
        }
    }
}

/// Reads `LATTICEMILL_THREADS` and sizes the global worker pool.
pub fn configure_threads() -> Result<(), InputError> {
    let Ok(value) = std::env::var("LATTICEMILL_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| InputError(format!("LATTICEMILL_THREADS must be a positive integer, got `{value}`")))?;
    if threads == 0 {
        return Err(InputError("LATTICEMILL_THREADS must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

pub fn run(cli: Cli) -> Result<Outcome, InputError> {
    match cli.command {
        Command::Verify { identity, input, t_max, output } => cmd_verify(identity, &input, t_max, &output),
        Command::Hilbert { input, t_max, method, output } => cmd_hilbert(&input, t_max, method, &output),
        Command::Gen { name, params, out } => cmd_gen(name, &params, out.as_deref()),
        Command::Corpus { seed, output } => cmd_corpus(seed, &output),
    }
}

enum Instance {
    Poset { poset: Poset, name: String },
    Complex { complex: SimplicialComplex, name: String },
}

fn need(value: Option<usize>, flag: &str, generator: Generator) -> Result<usize, InputError> {
    value.ok_or_else(|| InputError(format!("{} needs {flag}", generator_name(generator))))
}

fn need_poset_size(value: Option<usize>, generator: Generator) -> Result<usize, InputError> {
    let p = need(value, "-p", generator)?;
    if p > MAX_POSET {
        return Err(InputError(format!("posets are limited to {MAX_POSET} elements, got {p}")));
    }
    Ok(p)
}

fn generator_name(generator: Generator) -> &'static str {
    match generator {
        Generator::Chain => "chain",
        Generator::Antichain => "antichain",
        Generator::RandomPoset => "random-poset",
        Generator::SimplexBoundary => "simplex-boundary",
        Generator::CrossPolytope => "cross-polytope",
        Generator::CyclicPolytope => "cyclic-polytope",
    }
}

fn generate(generator: Generator, params: &Params) -> Result<Instance, InputError> {
    let poset = |poset: Poset, name: String| {
        let name = format!("{name} {}", describe_poset(&poset));
        Instance::Poset { poset, name }
    };
    Ok(match generator {
        Generator::Chain => {
            let p = need_poset_size(params.p, generator)?;
            poset(Poset::chain(p), format!("chain(p={p})"))
        }
        Generator::Antichain => {
            let p = need_poset_size(params.p, generator)?;
            poset(Poset::antichain(p), format!("antichain(p={p})"))
        }
        Generator::RandomPoset => {
            let p = need_poset_size(params.p, generator)?;
            let seed = params.seed.unwrap_or(0);
            poset(random_poset(p, seed), format!("random-poset(p={p},seed={seed})"))
        }
        Generator::SimplexBoundary => {
            let d = need(params.d, "-d", generator)?;
            Instance::Complex { complex: boundary_simplex(d)?, name: format!("simplex-boundary(d={d})") }
        }
        Generator::CrossPolytope => {
            let d = need(params.d, "-d", generator)?;
            Instance::Complex { complex: boundary_cross_polytope(d)?, name: format!("cross-polytope(d={d})") }
        }
        Generator::CyclicPolytope => {
            let n = need(params.n, "-n", generator)?;
            let d = need(params.d, "-d", generator)?;
            Instance::Complex { complex: boundary_cyclic_polytope(n, d)?, name: format!("cyclic-polytope(n={n},d={d})") }
        }
    })
}

/// Posets occupy `2p` variables downstream.
const MAX_POSET: usize = latticemill::Bits::CAPACITY / 2;


fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Instance, InputError> {
    let located = |path: &Path, err: latticemill::Error| InputError(format!("{}: {err}", path.display()));
    if let Some(path) = &input.poset {
        let poset = parse_poset(&read(path)?).map_err(|e| located(path, e))?;
        if poset.len() > MAX_POSET {
            return Err(InputError(format!("{}: posets are limited to {MAX_POSET} elements", path.display())));
        }
        let name = describe_poset(&poset);
        return Ok(Instance::Poset { poset, name });
    }
    if let Some(path) = &input.complex {
        let complex = parse_complex(&read(path)?).map_err(|e| located(path, e))?;
        let name = describe_complex(&complex);
        return Ok(Instance::Complex { complex, name });
    }
    match input.generator {
        Some(generator) => generate(generator, &input.params),
        None => Err(InputError("an input is required: --poset PATH, --complex PATH or --gen NAME".into())),
    }
}

fn expect_poset(instance: Instance, identity: &str) -> Result<(Poset, String), InputError> {
    match instance {
        Instance::Poset { poset, name } => Ok((poset, name)),
        Instance::Complex { .. } => Err(InputError(format!("{identity} needs a poset input"))),
    }
}

fn expect_complex(instance: Instance, identity: &str) -> Result<(SimplicialComplex, String), InputError> {
    match instance {
        Instance::Complex { complex, name } => Ok((complex, name)),
        Instance::Poset { .. } => Err(InputError(format!("{identity} needs a complex input"))),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), InputError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_reports(reports: &[VerificationReport], output: &Output) -> Result<Outcome, InputError> {
    let text = if output.json {
        reports_to_json(reports)
    } else {
        reports.iter().map(VerificationReport::to_text).collect()
    };
    emit(&text, output.out.as_deref())?;
    Ok(Outcome::of(reports.iter().all(|r| r.pass)))
}

fn cmd_verify(
    identity: Identity,
    input: &Input,
    t_max: Option<usize>,
    output: &Output,
) -> Result<Outcome, InputError> {
    let reports = match identity {
        Identity::AntichainExample => {
            let p = match (input.params.p, &input.generator) {
                (Some(p), None | Some(Generator::Antichain)) if input.poset.is_none() && input.complex.is_none() => p,
                _ => return Err(InputError("antichain-example takes only -p".into())),
            };
            if p == 0 {
                return Err(InputError("antichain-example needs p >= 1".into()));
            }
            vec![identities::verify_antichain_example(p)]
        }
        Identity::Theorem1 => {
            let (poset, name) = expect_poset(load(input)?, "theorem1")?;
            vec![identities::verify_theorem1(&poset).with_instance(name)]
        }
        Identity::GammaDual => {
            let (poset, name) = expect_poset(load(input)?, "gamma-dual")?;
            vec![identities::verify_gamma_dual(&poset)?.with_instance(name)]
        }
        Identity::DehnSommerville => {
            let (complex, name) = expect_complex(load(input)?, "dehn-sommerville")?;
            vec![identities::verify_dehn_sommerville(&complex).with_instance(name)]
        }
        Identity::FlagCorollary => {
            let (complex, name) = expect_complex(load(input)?, "flag-corollary")?;
            vec![identities::verify_flag_corollary(&complex)?.with_instance(name)]
        }
        Identity::All => match load(input)? {
            Instance::Poset { poset, name } => {
                let mut out = vec![identities::verify_theorem1(&poset).with_instance(name.as_str())];
                if !poset.is_empty() {
                    out.push(identities::verify_gamma_dual(&poset)?.with_instance(name.as_str()));
                }
                let t = t_max.unwrap_or(2 * poset.len() + 3);
                out.push(identities::verify_hilbert_poset(&poset, t).with_instance(name));
                out
            }
            Instance::Complex { complex, name } => {
                let mut out = vec![identities::verify_dehn_sommerville(&complex).with_instance(name.as_str())];
                if is_flag(&complex) && !complex.is_full_simplex() {
                    out.push(identities::verify_flag_corollary(&complex)?.with_instance(name.as_str()));
                }
                if !complex.is_full_simplex() {
                    let t = t_max.unwrap_or(complex.ground_size() + 3);
                    out.push(identities::verify_hilbert_boundary(&complex, t)?.with_instance(name));
                }
                out
            }
        },
    };
    emit_reports(&reports, output)
}

#[derive(Serialize)]
struct HilbertRow {
    t: usize,
    values: Vec<String>,
}

#[derive(Serialize)]
struct HilbertTable {
    instance: String,
    methods: Vec<&'static str>,
    rows: Vec<HilbertRow>,
    agree: bool,
}

impl HilbertTable {
    fn to_text(&self) -> String {
        let mut header = vec!["t".to_string()];
        header.extend(self.methods.iter().map(|m| m.to_string()));
        let mut lines = vec![header];
        for row in &self.rows {
            let mut line = vec![row.t.to_string()];
            line.extend(row.values.iter().cloned());
            lines.push(line);
        }
        let widths: Vec<usize> = (0..lines[0].len())
            .map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = format!("# {}\n", self.instance);
        for line in &lines {
            let cells: Vec<String> = line.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        if self.methods.len() > 1 {
            out.push_str(if self.agree { "methods agree\n" } else { "methods DISAGREE\n" });
        }
        out
    }
}

fn cmd_hilbert(input: &Input, t_max: usize, method: Method, output: &Output) -> Result<Outcome, InputError> {
    let chosen: Vec<HilbertMethod> = match method {
        Method::Oracle => vec![HilbertMethod::Oracle],
        Method::ClosedForm => vec![HilbertMethod::ClosedForm],
        Method::Resolution => vec![HilbertMethod::Resolution],
        Method::DualFormula => vec![HilbertMethod::DualFormula],
        Method::All => HilbertMethod::ALL.to_vec(),
    };
    let (instance, columns) = match load(input)? {
        Instance::Poset { poset, name } => {
            let columns: Vec<_> = chosen.iter().map(|&m| (m, poset_hilbert(&poset, m, t_max))).collect();
            (name, columns)
        }
        Instance::Complex { complex, name } => {
            let mut columns = Vec::new();
            for &m in &chosen {
                match boundary_hilbert(&complex, m, t_max)? {
                    Some(values) => columns.push((m, values)),
                    None if method == Method::All => {}
                    None => return Err(InputError(format!("{} applies only to poset inputs", m.name()))),
                }
            }
            (name, columns)
        }
    };
    let rows: Vec<HilbertRow> = (0..=t_max)
        .map(|t| HilbertRow {
            t,
            values: columns.iter().map(|(_, s)| s.values()[t].1.to_string()).collect(),
        })
        .collect();
    let agree = rows.iter().all(|r| r.values.windows(2).all(|w| w[0] == w[1]));
    let table = HilbertTable {
        instance,
        methods: columns.iter().map(|(m, _)| m.name()).collect(),
        rows,
        agree,
    };
    let text = if output.json {
        serde_json::to_string_pretty(&table)? + "\n"
    } else {
        table.to_text()
    };
    emit(&text, output.out.as_deref())?;
    Ok(Outcome::of(agree))
}

fn cmd_gen(generator: Generator, params: &Params, out: Option<&Path>) -> Result<Outcome, InputError> {
    let text = match generate(generator, params)? {
        Instance::Poset { poset, .. } => write_poset(&poset),
        Instance::Complex { complex, .. } => write_complex(&complex),
    };
    emit(&text, out)?;
    Ok(Outcome::Pass)
}

fn cmd_corpus(seed: u64, output: &Output) -> Result<Outcome, InputError> {
    let reports = run_corpus(&CorpusSpec::default().with_seed(seed))?;
    if output.json {
        return emit_reports(&reports, output);
    }
    let mut text = String::new();
    for report in &reports {
        if report.pass {
            text.push_str(&format!("PASS {} [{}]\n", report.identity, report.instance));
        } else {
            text.push_str(&report.to_text());
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    text.push_str(&format!("{} reports, {} failed\n", reports.len(), failed));
    emit(&text, output.out.as_deref())?;
    Ok(Outcome::of(failed == 0))
}
