use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use weitz_cli::{emit, exit, run_crosscheck, run_sweep, write_crosscheck, write_sweep, CliError, OutputFormat, SweepConfig};
use weitzenbock::generators::{index_pairs, Decomposer};
use weitzenbock::{delta, kernel_basis, Error, MultiDegree, Polynomial};

/// Exact verification of the algebra of constants of δ(x_i) = 0, δ(y_i) = x_i.
#[derive(Parser)]
#[command(name = "weitz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every component up to a total degree bound.
    Verify(SweepArgs),
    /// Audit highest weight vectors in tensor space against tableau counts.
    Crosscheck(SweepArgs),
    /// Print a basis of the kernel of δ on one component.
    Kernel(KernelArgs),
    /// Write a constant as a combination of products of x_i and u_ij.
    Decompose(DecomposeArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Number of variable pairs.
    #[arg(long = "d")]
    d: usize,
    /// Bound on |n|.
    #[arg(long = "max-degree", default_value_t = 0)]
    max_degree: u32,
    /// Bound on each n_i.
    #[arg(long)]
    cap: Option<u32>,
    /// Bound on |n| for the tensor-space cross-check.
    #[arg(long, default_value_t = 0)]
    limit: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<String>,
    #[arg(long, env = "WEITZ_PARALLELISM")]
    parallelism: Option<usize>,
}

impl SweepArgs {
    fn config(&self) -> SweepConfig {
        SweepConfig {
            d: self.d,
            max_total_degree: self.max_degree,
            per_index_cap: self.cap,
            tensor_crosscheck_limit: self.limit,
            parallelism: self
                .parallelism
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
            output_path: self.out.clone(),
            output_format: self.format,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long = "d")]
    d: Option<usize>,
    /// Multidegree, comma separated.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    n: Vec<u32>,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

#[derive(Args)]
struct DecomposeArgs {
    /// File holding the polynomial; standard input when omitted or `-`.
    input: Option<String>,
    #[arg(long = "d")]
    d: Option<usize>,
    /// Decompose each multidegree component of an inhomogeneous input.
    #[arg(long)]
    split: bool,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    exit::USAGE
}

fn report_cli_error(e: CliError) -> i32 {
    eprintln!("error: {e}");
    e.exit_code()
}

fn cmd_verify(args: &SweepArgs) -> i32 {
    let config = args.config();
    let report = match run_sweep(&config) {
        Ok(r) => r,
        Err(e) => return report_cli_error(e),
    };
    if let Err(e) = emit(args.out.as_deref(), |w| write_sweep(&report, args.format, w)) {
        return report_cli_error(e);
    }
    for c in report.components.iter().filter(|c| !c.verdict) {
        eprintln!(
            "VIOLATION at n = {}: kernel {}, span {}, tableau oracle {}",
            c.n, c.dim_kernel, c.dim_span, c.dim_tableau_oracle
        );
    }
    for c in report.crosscheck.iter().filter(|c| !c.pass) {
        eprintln!("CROSSCHECK FAILURE at n = {}", c.n);
    }
    if report.aggregate.violations == 0 {
        exit::OK
    } else {
        exit::VIOLATION
    }
}

fn cmd_crosscheck(args: &SweepArgs) -> i32 {
    let config = args.config();
    let report = match run_crosscheck(&config) {
        Ok(r) => r,
        Err(e) => return report_cli_error(e),
    };
    if let Err(e) = emit(args.out.as_deref(), |w| write_crosscheck(&report, args.format, w)) {
        return report_cli_error(e);
    }
    if report.aggregate.failures == 0 {
        exit::OK
    } else {
        exit::VIOLATION
    }
}

#[derive(Serialize)]
struct KernelJson {
    n: MultiDegree,
    dimension: usize,
    by_weight: Vec<weitzenbock::kernel::WeightDimension>,
    basis: Vec<String>,
}

fn cmd_kernel(args: &KernelArgs) -> i32 {
    let d = args.d.unwrap_or(args.n.len());
    if d == 0 {
        return usage("d must be at least 1");
    }
    if args.n.len() != d {
        return usage(format!("--n has {} entries but d = {d}", args.n.len()));
    }
    let n = MultiDegree::new(args.n.clone());
    let k = kernel_basis(&n);
    match args.format {
        TextFormat::Text => {
            println!("# kernel of delta on component {n}: dimension {}", k.dimension());
            for w in &k.by_weight {
                println!("# bi-weight {}: {}", w.weight, w.dimension);
            }
            for f in &k.vectors {
                println!("{f}");
            }
        }
        TextFormat::Json => {
            let out = KernelJson {
                n: n.clone(),
                dimension: k.dimension(),
                by_weight: k.by_weight.clone(),
                basis: k.vectors.iter().map(ToString::to_string).collect(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("kernel serializes"));
        }
    }
    exit::OK
}

#[derive(Serialize)]
struct TermJson {
    coefficient: String,
    term: String,
    p: Vec<u32>,
    /// `[i, j, q_ij]` for the nonzero exponents.
    q: Vec<[u32; 3]>,
}

#[derive(Serialize)]
struct ComponentJson {
    n: MultiDegree,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct DecomposeJson {
    input: String,
    d: usize,
    components: Vec<ComponentJson>,
}

fn read_input(path: Option<&str>) -> Result<String, CliError> {
    let label = path.unwrap_or("<stdin>").to_string();
    let io = |source| CliError::Io { path: label.clone(), source };
    match path {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(io)?;
            Ok(s)
        }
        Some(p) => std::fs::read_to_string(p).map_err(io),
    }
}

fn cmd_decompose(args: &DecomposeArgs) -> i32 {
    let text = match read_input(args.input.as_deref()) {
        Ok(t) => t,
        Err(e) => return report_cli_error(e),
    };
    let text = text.trim();
    let parsed = match args.d {
        Some(0) => return usage("d must be at least 1"),
        Some(d) => Polynomial::parse_with_dim(text, d),
        None => Polynomial::parse(text),
    };
    let f = match parsed {
        Ok(f) => f,
        Err(e) => return usage(e),
    };
    let image = delta(&f);
    if !image.is_zero() {
        eprintln!("not in the kernel: δ(f) = {image}");
        return exit::USAGE;
    }
    let parts = f.split_by_multidegree();
    if parts.len() > 1 && !args.split {
        let ns: Vec<String> = parts.keys().map(ToString::to_string).collect();
        return usage(format!(
            "input is not homogeneous in the multidegree (components {}); split it or pass --split",
            ns.join(", ")
        ));
    }
    let mut components = Vec::new();
    for (n, part) in &parts {
        match Decomposer::new(n).decompose(part) {
            Ok(cert) => components.push(cert),
            Err(e @ Error::ConjectureViolation { .. }) => {
                eprintln!("{e}");
                return exit::VIOLATION;
            }
            Err(e) => return usage(e),
        }
    }
    match args.format {
        TextFormat::Text => {
            if components.is_empty() {
                println!("0");
            }
            for c in &components {
                println!("{}: {}", c.n, c);
            }
        }
        TextFormat::Json => {
            let pairs = index_pairs(f.d());
            let out = DecomposeJson {
                input: f.to_string(),
                d: f.d(),
                components: components
                    .iter()
                    .map(|c| ComponentJson {
                        n: c.n.clone(),
                        terms: c
                            .terms
                            .iter()
                            .map(|(t, coef)| TermJson {
                                coefficient: coef.to_string(),
                                term: t.to_string(),
                                p: t.p.clone(),
                                q: pairs
                                    .iter()
                                    .zip(&t.q)
                                    .filter(|(_, &e)| e > 0)
                                    .map(|(&(i, j), &e)| [i as u32, j as u32, e])
                                    .collect(),
                            })
                            .collect(),
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("certificate serializes"));
        }
    }
    exit::OK
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Crosscheck(a) => cmd_crosscheck(a),
        Command::Kernel(a) => cmd_kernel(a),
        Command::Decompose(a) => cmd_decompose(a),
    };
    ExitCode::from(code as u8)
}
