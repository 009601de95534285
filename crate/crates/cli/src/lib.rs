//! Verification sweeps and report emission behind the `weitz` binary.

use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use weitzenbock::crosscheck::{check_content, ContentCheck};
use weitzenbock::{verify_component, ComponentReport, MultiDegree};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const IO: i32 = 3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub d: usize,
    pub max_total_degree: u32,
    pub per_index_cap: Option<u32>,
    pub tensor_crosscheck_limit: u32,
    pub parallelism: usize,
    pub output_path: Option<String>,
    pub output_format: OutputFormat,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => exit::USAGE,
            CliError::Io { .. } => exit::IO,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.d == 0 {
            return Err(CliError::Config("d must be at least 1".into()));
        }
        if self.parallelism == 0 {
            return Err(CliError::Config("parallelism must be at least 1".into()));
        }
        Ok(())
    }

    /// Components of the sweep in graded lexicographic order.
    pub fn components(&self) -> Vec<MultiDegree> {
        MultiDegree::up_to(self.d, self.max_total_degree, self.per_index_cap)
    }

    /// Contents covered by the tensor cross-check.
    pub fn crosscheck_contents(&self) -> Vec<MultiDegree> {
        if self.tensor_crosscheck_limit == 0 {
            return Vec::new();
        }
        MultiDegree::up_to(self.d, self.tensor_crosscheck_limit, self.per_index_cap)
    }

    fn pool(&self) -> Result<rayon::ThreadPool, CliError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.parallelism)
            .build()
            .map_err(|e| CliError::Config(format!("cannot start worker pool: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub components_checked: usize,
    pub violations: usize,
    pub total_wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: SweepConfig,
    pub components: Vec<ComponentReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crosscheck: Vec<ContentCheck>,
    pub aggregate: Aggregate,
    /// SHA-256 over the bounds and results, timing excluded.
    pub digest: String,
}

#[derive(Serialize)]
struct DigestInput<'a> {
    schema_version: u32,
    d: usize,
    max_total_degree: u32,
    per_index_cap: Option<u32>,
    tensor_crosscheck_limit: u32,
    components: Vec<serde_json::Value>,
    crosscheck: &'a [ContentCheck],
}

fn digest(config: &SweepConfig, components: &[ComponentReport], crosscheck: &[ContentCheck]) -> String {
    let components = components
        .iter()
        .map(|c| {
            let mut v = serde_json::to_value(c).expect("report serializes");
            v.as_object_mut().expect("report is an object").remove("timing");
            v
        })
        .collect();
    let input = DigestInput {
        schema_version: SCHEMA_VERSION,
        d: config.d,
        max_total_degree: config.max_total_degree,
        per_index_cap: config.per_index_cap,
        tensor_crosscheck_limit: config.tensor_crosscheck_limit,
        components,
        crosscheck,
    };
    let bytes = serde_json::to_vec(&input).expect("digest input serializes");
    hex::encode(Sha256::digest(bytes))
}

/// Verifies every component of the sweep. Results are collected in sweep
/// order regardless of which worker finished first.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, CliError> {
    config.validate()?;
    let start = Instant::now();
    let pool = config.pool()?;
    let (components, crosscheck) = pool.install(|| {
        let components: Vec<ComponentReport> = config.components().par_iter().map(verify_component).collect();
        let crosscheck: Vec<ContentCheck> = config.crosscheck_contents().par_iter().map(check_content).collect();
        (components, crosscheck)
    });
    let violations =
        components.iter().filter(|c| !c.verdict).count() + crosscheck.iter().filter(|c| !c.pass).count();
    let digest = digest(config, &components, &crosscheck);
    Ok(SweepReport {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        config: config.clone(),
        aggregate: Aggregate { components_checked: components.len(), violations, total_wall_time: start.elapsed() },
        components,
        crosscheck,
        digest,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckAggregate {
    pub contents_checked: usize,
    pub failures: usize,
    pub total_wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: SweepConfig,
    pub contents: Vec<ContentCheck>,
    pub aggregate: CrosscheckAggregate,
}

pub fn run_crosscheck(config: &SweepConfig) -> Result<CrosscheckReport, CliError> {
    config.validate()?;
    let start = Instant::now();
    let pool = config.pool()?;
    let contents: Vec<ContentCheck> =
        pool.install(|| config.crosscheck_contents().par_iter().map(check_content).collect());
    let failures = contents.iter().filter(|c| !c.pass).count();
    Ok(CrosscheckReport {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        config: config.clone(),
        aggregate: CrosscheckAggregate { contents_checked: contents.len(), failures, total_wall_time: start.elapsed() },
        contents,
    })
}

#[derive(Serialize)]
struct ComponentRow {
    n: String,
    dim_kernel: usize,
    dim_span: usize,
    dim_tableau_oracle: usize,
    product_count: usize,
    products_constant: bool,
    verdict: bool,
    timing_us: u128,
}

#[derive(Serialize)]
struct ShapeRow {
    n: String,
    shape: String,
    hwv_dimension: usize,
    standard_tableaux: u64,
    standard_rank: usize,
    standard_constant: bool,
    spans_kernel: bool,
    equivariant: bool,
    ladders_ok: bool,
    pass: bool,
}

fn csv_error(e: csv::Error) -> std::io::Error {
    std::io::Error::other(e)
}

pub fn write_sweep<W: Write>(report: &SweepReport, format: OutputFormat, mut out: W) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for c in &report.components {
                w.serialize(ComponentRow {
                    n: c.n.to_string(),
                    dim_kernel: c.dim_kernel,
                    dim_span: c.dim_span,
                    dim_tableau_oracle: c.dim_tableau_oracle,
                    product_count: c.product_count,
                    products_constant: c.products_constant,
                    verdict: c.verdict,
                    timing_us: c.timing.as_micros(),
                })
                .map_err(csv_error)?;
            }
            w.flush()
        }
    }
}

pub fn write_crosscheck<W: Write>(report: &CrosscheckReport, format: OutputFormat, mut out: W) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for c in &report.contents {
                for s in &c.shapes {
                    w.serialize(ShapeRow {
                        n: c.n.to_string(),
                        shape: s.shape.to_string(),
                        hwv_dimension: s.hwv_dimension,
                        standard_tableaux: s.standard_tableaux,
                        standard_rank: s.standard_rank,
                        standard_constant: s.standard_constant,
                        spans_kernel: s.spans_kernel,
                        equivariant: s.equivariant,
                        ladders_ok: c.ladders_ok,
                        pass: s.pass && c.ladders_ok,
                    })
                    .map_err(csv_error)?;
                }
            }
            w.flush()
        }
    }
}

/// Writes to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&str>, write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>) -> Result<(), CliError> {
    let label = path.unwrap_or("<stdout>").to_string();
    let io = |source| CliError::Io { path: label.clone(), source };
    match path {
        Some(p) => {
            let mut f = std::io::BufWriter::new(std::fs::File::create(p).map_err(io)?);
            write(&mut f).map_err(io)?;
            f.flush().map_err(io)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock).map_err(io)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(d: usize, max: u32) -> SweepConfig {
        SweepConfig {
            d,
            max_total_degree: max,
            per_index_cap: None,
            tensor_crosscheck_limit: 0,
            parallelism: 2,
            output_path: None,
            output_format: OutputFormat::Json,
        }
    }

    #[test]
    fn invalid_configs_rejected() {
        assert!(matches!(run_sweep(&config(0, 2)), Err(CliError::Config(_))));
        let mut c = config(1, 2);
        c.parallelism = 0;
        assert_eq!(run_sweep(&c).unwrap_err().exit_code(), exit::USAGE);
    }

    #[test]
    fn one_pair_sweep() {
        let r = run_sweep(&config(1, 3)).unwrap();
        let ns: Vec<String> = r.components.iter().map(|c| c.n.to_string()).collect();
        assert_eq!(ns, ["(0)", "(1)", "(2)", "(3)"]);
        assert!(r.components.iter().all(|c| c.dim_kernel == 1 && c.dim_span == 1 && c.verdict));
        assert_eq!(r.aggregate.violations, 0);
    }

    #[test]
    fn digest_ignores_timing_and_parallelism() {
        let a = run_sweep(&config(2, 3)).unwrap();
        let mut c = config(2, 3);
        c.parallelism = 1;
        let b = run_sweep(&c).unwrap();
        assert_eq!(a.digest, b.digest);
        assert_ne!(a.digest, run_sweep(&config(2, 2)).unwrap().digest);
    }

    #[test]
    fn cap_limits_each_index() {
        let mut c = config(3, 4);
        c.per_index_cap = Some(1);
        let r = run_sweep(&c).unwrap();
        assert_eq!(r.components.len(), 8);
        assert!(r.components.iter().all(|c| c.n.as_slice().iter().all(|&k| k <= 1)));
    }

    #[test]
    fn csv_has_one_row_per_component() {
        let r = run_sweep(&config(2, 2)).unwrap();
        let mut buf = Vec::new();
        write_sweep(&r, OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 1 + r.components.len());
        assert!(lines[0].starts_with("n,dim_kernel,dim_span,dim_tableau_oracle,product_count"));
        assert!(lines[5].starts_with("\"(1,1)\",2,2,2,2,true,true,"));
    }

    #[test]
    fn zero_limit_crosscheck_is_empty() {
        let r = run_crosscheck(&config(2, 0)).unwrap();
        assert!(r.contents.is_empty());
        assert_eq!(r.aggregate.failures, 0);
    }
}
