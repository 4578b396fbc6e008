//! The `ringua` command line: argument parsing, dispatch and report output.

mod algebra;
mod corpus;
mod error;
mod language;
mod matrices;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use corpus::{ingest_corpus, IngestedCorpus, IngestedRecord, SkippedLine};
pub use error::CliError;
use render::Output;

/// Default cap on the ring size for commands that enumerate ideals.
pub const DEFAULT_ENUMERATION_BUDGET: usize = ringua::ideal::DEFAULT_ENUMERATION_BUDGET;

#[derive(Debug, Parser)]
#[command(
    name = "ringua",
    version,
    about = "Finite rings, one-sided ideals, sparse matrices and sublanguage grammars"
)]
pub struct Cli {
    /// Print a short human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Largest ring size that ideal enumeration will accept.
    #[arg(long, global = true, env = "RINGUA_BUDGET", default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    pub budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check, build or divide finite rings given as JSON Cayley tables.
    #[command(subcommand)]
    Ring(RingCommand),
    /// List every left, right or two-sided ideal with maximality and primality flags.
    Ideals {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
        side: SideArg,
    },
    /// Decide whether a subset is an additive subgroup, a left, right or two-sided ideal, with witnesses.
    Classify {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        subset: SubsetArg,
    },
    /// Length of the longest strictly increasing chain of ideals.
    Chain {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
        side: SideArg,
    },
    /// Check module axioms for the ring acting on itself, on a one-sided ideal, or on a quotient by a right ideal.
    #[command(subcommand)]
    Module(ModuleCommand),
    /// Test whether a family of ideals satisfies the Oka condition and whether its maximal outsiders are prime.
    Oka {
        #[command(flatten)]
        ring: RingArg,
        /// principal, all or whole.
        #[arg(long, default_value = "principal")]
        family: String,
        /// Also report a smallest generating set for every prime ideal.
        #[arg(long)]
        cohen: bool,
    },
    /// Draw the inclusion order of the ideals as a Hasse diagram.
    Hasse {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Dot)]
        format: DiagramFormat,
    },
    /// Describe what a real 2x2 matrix does to the unit square.
    Transform {
        /// Entries a,b,c,d of [[a,b],[c,d]].
        #[arg(
            long,
            value_delimiter = ',',
            num_args = 1,
            allow_hyphen_values = true,
            required = true
        )]
        matrix: Vec<f64>,
        #[arg(long, value_enum, default_value_t = TransformFormat::Json)]
        format: TransformFormat,
    },
    /// Convert, multiply and measure matrices in compressed sparse row form.
    #[command(subcommand)]
    Sparse(SparseCommand),
    /// Parse formula notation such as "A_1^p V C_2" and check it against a sublanguage grammar.
    Parse {
        #[arg(long)]
        formula: String,
        /// Sublanguage bundle (lexicon and grammar).
        #[arg(long, value_name = "PATH")]
        spec: PathBuf,
    },
    /// Convert an infix expression to postfix with the shunting-yard method.
    Yard {
        #[arg(long)]
        infix: String,
    },
    /// Check that a grammar is an operator grammar.
    Grammar {
        /// Grammar as JSON or as lines of the form `E -> E + E | id`.
        #[arg(long, value_name = "PATH")]
        file: PathBuf,
    },
    /// Sublanguage tools: core membership, conjunction chains, closure checks and pattern drift.
    #[command(subcommand)]
    Sublang(SublangCommand),
}

#[derive(Debug, Subcommand)]
pub enum RingCommand {
    /// Check every ring axiom and report a witness for each failure.
    Verify {
        #[command(flatten)]
        ring: RingArg,
    },
    /// Build R/I for a two-sided ideal I, or show why the product is not well defined.
    Quotient {
        #[command(flatten)]
        ring: RingArg,
        #[command(flatten)]
        subset: SubsetArg,
    },
    /// Write the tables of a standard ring.
    #[command(subcommand)]
    Make(MakeCommand),
}

#[derive(Debug, Subcommand)]
pub enum MakeCommand {
    /// Integers modulo n.
    Cyclic { n: usize },
    /// Subsets of {1..n} under symmetric difference and intersection.
    Boolean { n: usize },
    /// 2x2 matrices over a ring read from a file.
    Matrix {
        #[arg(long, value_name = "PATH")]
        base: PathBuf,
    },
    /// A bundled example ring.
    Sample {
        #[arg(value_enum)]
        name: SampleName,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SampleName {
    /// 2x2 matrices over Z/2.
    MatrixZ2,
    /// [[Z/4, Z/2], [0, Z/2]] with r·m = (r mod 2)m.
    Triangular,
    /// F2[x,y]/(x,y)^2.
    Local,
}

#[derive(Debug, Subcommand)]
pub enum ModuleCommand {
    /// Verify the module axioms.
    Verify {
        #[command(flatten)]
        ring: RingArg,
        /// Which module to build: the ring itself, a one-sided ideal, or the ring modulo a right ideal.
        #[arg(long, value_enum, default_value_t = ModuleKind::Regular)]
        kind: ModuleKind,
        /// Side of the action for regular and ideal modules.
        #[arg(long, value_enum, default_value_t = ModuleSideArg::Right)]
        side: ModuleSideArg,
        /// The ideal for `--kind ideal` or `--kind quotient`.
        #[command(flatten)]
        subset: SubsetArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    Regular,
    Ideal,
    Quotient,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModuleSideArg {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum SparseCommand {
    /// Dense JSON grid to CSR.
    Encode {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
    },
    /// CSR to dense JSON grid, checking every structural invariant.
    Decode {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
    },
    /// Exact product of two CSR matrices.
    Mul {
        #[arg(long, value_name = "PATH")]
        left: PathBuf,
        #[arg(long, value_name = "PATH")]
        right: PathBuf,
    },
    /// Fraction of nonzero entries of a dense grid or CSR matrix.
    Sparsity {
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum SublangCommand {
    /// Map sentences to formulas and decide whether each is in the core.
    Check {
        #[arg(long, value_name = "PATH")]
        spec: PathBuf,
        #[arg(long)]
        sentence: Vec<String>,
        /// File with one sentence per line.
        #[arg(long, value_name = "PATH")]
        input: Option<PathBuf>,
    },
    /// Decide whether a conjunction chain belongs to the extended sublanguage.
    Chain {
        #[arg(long, value_name = "PATH")]
        spec: PathBuf,
        #[arg(long)]
        head: String,
        /// `conjunction:sentence`, repeatable.
        #[arg(long)]
        link: Vec<String>,
    },
    /// Check right absorption and left non-absorption over sentence pools.
    Closure {
        #[arg(long, value_name = "PATH")]
        spec: PathBuf,
        /// Core sentences, one per line.
        #[arg(long, value_name = "PATH")]
        core: PathBuf,
        /// Sentences outside the core, one per line.
        #[arg(long, value_name = "PATH")]
        general: Option<PathBuf>,
        /// Longest chain, in sentences, to explore.
        #[arg(long, default_value_t = ringua::sublang::DEFAULT_CLOSURE_DEPTH)]
        depth: usize,
    },
    /// Pattern counts per period and the sequence of dominant patterns.
    Drift {
        #[arg(long, value_name = "PATH")]
        spec: PathBuf,
        /// Line-delimited JSON records with `date` and `text` or `tokens`.
        #[arg(long, value_name = "PATH")]
        corpus: PathBuf,
        /// Period length in years.
        #[arg(long, default_value_t = ringua::sublang::DEFAULT_PERIOD_YEARS)]
        period: i64,
        /// Abort on the first malformed line instead of skipping it.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RingArg {
    /// Ring file: JSON with size, add, mul, zero, one and optional labels.
    #[arg(long, value_name = "PATH")]
    pub ring: PathBuf,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SubsetArg {
    /// Subset as a hexadecimal bitmask (bit i is element i).
    #[arg(long, value_name = "HEX")]
    pub subset: Option<String>,
    /// Subset as comma-separated element indices.
    #[arg(long, value_delimiter = ',', value_name = "I,J,...")]
    pub indices: Vec<usize>,
    /// Subset member given by label, repeatable.
    #[arg(long = "element", value_name = "LABEL")]
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    TwoSided,
}

impl From<SideArg> for ringua::Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Left => ringua::Side::Left,
            SideArg::Right => ringua::Side::Right,
            SideArg::TwoSided => ringua::Side::TwoSided,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DiagramFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TransformFormat {
    Json,
    Svg,
}

/// Runs the command line and returns the process exit code: 0 on success
/// (including reports that carry failure witnesses), 1 on domain errors and
/// 2 on usage errors.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = dispatch(&cli, stderr).and_then(|output| output.emit(&cli, stdout));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, stderr: &mut dyn Write) -> Result<Output, CliError> {
    match &cli.command {
        Command::Ring(cmd) => algebra::ring(cmd),
        Command::Ideals { ring, side } => algebra::ideals(ring, *side, cli.budget),
        Command::Classify { ring, subset } => algebra::classify(ring, subset),
        Command::Chain { ring, side } => algebra::chain(ring, *side, cli.budget),
        Command::Module(ModuleCommand::Verify {
            ring,
            kind,
            side,
            subset,
        }) => algebra::module(ring, *kind, *side, subset),
        Command::Oka { ring, family, cohen } => algebra::oka(ring, family, *cohen, cli.budget),
        Command::Hasse { ring, side, format } => algebra::hasse(ring, *side, *format, cli.budget),
        Command::Transform { matrix, format } => matrices::transform(matrix, *format),
        Command::Sparse(cmd) => matrices::sparse(cmd),
        Command::Parse { formula, spec } => language::parse(formula, spec),
        Command::Yard { infix } => language::yard(infix),
        Command::Grammar { file } => language::grammar(file),
        Command::Sublang(cmd) => language::sublang(cmd, stderr),
    }
}
