//! The `lgforge` command-line tool.
//!
//! Every subcommand produces a [`Report`]: a JSON document and a text
//! rendering of the same data. Exit status is 0 on success, 1 when a
//! computation fails and 2 for usage or input-format errors.

mod commands;
mod input;
mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

pub use commands::execute;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "lgforge",
    version,
    about = "Super-potentials, periods and covers of Laurent polynomials"
)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A potential given inline or through a JSON file with `potential` and `vars`.
#[derive(Debug, Clone, Args)]
pub struct PolyInput {
    /// Expression, or `-` to read it from standard input.
    #[arg(long, allow_hyphen_values = true)]
    pub expr: Option<String>,
    /// Comma-separated variable names.
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// JSON file with `potential` and `vars`; takes precedence over `--expr`.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Incremental,
    Parallel,
    Split,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize a potential and optionally evaluate it at a point.
    Eval {
        #[command(flatten)]
        input: PolyInput,
        /// Comma-separated complex coordinates such as `1,-0.5+2i`.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Period sequence `c₀(f^k)` for `k ≤ K`.
    Period {
        #[command(flatten)]
        input: PolyInput,
        #[arg(short = 'K', long = "max-k", default_value_t = 10)]
        k: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Incremental)]
        strategy: StrategyArg,
    },
    /// Build the potential of a cyclic cover from a cover spec file.
    Cover {
        /// Cover spec JSON: potential, vars, functional, r, descendant.
        #[arg(long)]
        spec: PathBuf,
        /// Also report the period sequence of the quotient up to this k.
        #[arg(short = 'K', long = "max-k")]
        k: Option<usize>,
    },
    /// Rewrite an invariant potential on the sublattice `w·e ≡ 0 (mod r)`.
    Quotient {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weights: Vec<i64>,
        #[arg(short = 'r', long)]
        r: i64,
        /// Basis columns, e.g. `-1,-1;1,-1`.
        #[arg(long, allow_hyphen_values = true)]
        basis: Option<String>,
    },
    /// Numerical critical points and values.
    Crit {
        #[command(flatten)]
        input: PolyInput,
        /// Number of random Newton starts.
        #[arg(long, default_value_t = 200)]
        starts: usize,
        /// Residual bound for accepting a point.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 100)]
        max_iter: usize,
        /// Max-norm radius under which two points are merged.
        #[arg(long, default_value_t = 1e-6)]
        dedupe: f64,
        /// Starts have log-uniform modulus in `[1/R, R]`.
        #[arg(long, default_value_t = 4.0)]
        radius: f64,
    },
    /// Apply a birational substitution.
    Mutate {
        #[command(flatten)]
        input: PolyInput,
        /// JSON file `{"vars": [...], "images": [...]}`.
        #[arg(long)]
        subst: Option<PathBuf>,
        /// Images separated by `;`, in the variables of the potential.
        #[arg(long, allow_hyphen_values = true)]
        images: Option<String>,
        /// Compare period sequences of the potential and its image up to k.
        #[arg(long)]
        check_periods: Option<usize>,
    },
    /// Tangency number of a class from the coefficients of `W^r`.
    Tangency {
        #[command(flatten)]
        input: PolyInput,
        #[arg(short = 'r', long)]
        r: usize,
        /// Boundary exponent of the class.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        boundary: Vec<i64>,
        /// Contact orders with the divisor components (normal crossings).
        #[arg(long, value_delimiter = ',', conflicts_with = "smooth")]
        multiplicities: Option<Vec<u32>>,
        /// Smooth divisor; the expression is the divisor part of the potential.
        #[arg(long)]
        smooth: bool,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        descendant: String,
    },
    /// Compare period sequences of two potentials.
    Compare {
        #[command(flatten)]
        input: PolyInput,
        /// Second expression, in the same variables.
        #[arg(long, allow_hyphen_values = true)]
        with: String,
        #[arg(short = 'K', long = "max-k", default_value_t = 10)]
        k: usize,
    },
    /// Check a potential against reference period data.
    CheckWeakLg {
        #[command(flatten)]
        input: PolyInput,
        /// CSV (`k,coeff`) or JSON reference file.
        #[arg(long)]
        reference: PathBuf,
        /// Largest k to compare; defaults to the end of the reference.
        #[arg(short = 'K', long = "max-k")]
        k: Option<usize>,
        /// First k that has to match.
        #[arg(long, default_value_t = crate::periods::DEFAULT_K_MIN)]
        k_min: usize,
    },
    /// Disc-class ledger: Maslov positivity, monotonicity, lifts, connectivity.
    Ledger {
        /// JSON list of classes with `half_maslov`, `divisor_hits`, `boundary`, `area`.
        #[arg(long)]
        classes: PathBuf,
        /// Indices of `divisor_hits` that make up the divisor.
        #[arg(long, value_delimiter = ',', default_value = "0")]
        select: Vec<usize>,
        /// Cover degree; enables lifting of the classes.
        #[arg(short = 'r', long)]
        r: Option<i64>,
        /// Largest total multiplicity of lifted combinations.
        #[arg(long, default_value_t = 2)]
        max_total: usize,
        /// Linking numbers of a generating set of loops, for connectivity.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        linking: Option<Vec<i64>>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Eval { .. } => "eval",
            Command::Period { .. } => "period",
            Command::Cover { .. } => "cover",
            Command::Quotient { .. } => "quotient",
            Command::Crit { .. } => "crit",
            Command::Mutate { .. } => "mutate",
            Command::Tangency { .. } => "tangency",
            Command::Compare { .. } => "compare",
            Command::CheckWeakLg { .. } => "check-weak-lg",
            Command::Ledger { .. } => "ledger",
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input: exit 2.
    Usage(String),
    /// The computation itself failed: exit 1.
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => m,
        }
    }
}

/// Result of one subcommand.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub result: serde_json::Value,
    pub text: String,
    pub warnings: Vec<String>,
    /// Hash of every input that determines the result.
    pub input_hash: String,
}

impl Report {
    pub fn to_json(&self, seed: u64) -> serde_json::Value {
        serde_json::json!({
            "command": self.command,
            "provenance": {
                "input_sha256": self.input_hash,
                "seed": seed,
                "version": VERSION,
            },
            "result": self.result,
        })
    }

    pub fn render(&self, format: Format, seed: u64) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json(seed)).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s.push_str(&format!(
                    "-- lgforge {VERSION}, seed {seed}, input sha256 {}\n",
                    self.input_hash
                ));
                s
            }
        }
    }
}

/// Accumulates the bytes of all inputs of a command.
#[derive(Default)]
pub(crate) struct InputHasher(Sha256);

impl InputHasher {
    pub fn add(&mut self, bytes: impl AsRef<[u8]>) {
        self.0.update(bytes.as_ref());
        self.0.update([0u8]);
    }

    pub fn finish(self) -> String {
        self.0.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("LGFORGE_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // Fails only if a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Parses `args`, runs the command and writes the report. Returns the exit
/// status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    configure_threads();
    let report = match execute(&cli.command, cli.seed, &mut std::io::stdin().lock()) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            return e.exit_code();
        }
    };
    for w in &report.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    let rendered = report.render(cli.format, cli.seed);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, rendered.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(rendered.as_bytes()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot write report: {e}");
            1
        }
    }
}
