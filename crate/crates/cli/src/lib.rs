//! Command-line front end for `hivenet`: file formats, rendering and the
//! `hivenet` command itself.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

mod commands;
pub mod format;
pub mod render;
pub mod report;

use report::{RunReport, Verdict};

#[derive(Debug, Parser)]
#[command(name = "hivenet", version, about = "Tropical eigenvalues of weighted planar networks")]
pub struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest number of objects an enumeration may produce.
    #[arg(long, global = true, default_value_t = hivenet::multipath::DEFAULT_CAP)]
    pub cap: usize,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a network.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Build a weighting of a network.
    #[command(subcommand)]
    Weights(WeightsCmd),
    /// Evaluate maxima and tableau maps.
    #[command(subcommand)]
    Eval(EvalCmd),
    /// Cone and Horn membership.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Weightings of the staircase networks realizing a tableau.
    #[command(subcommand)]
    Invert(InvertCmd),
    /// Recombine two multipaths.
    #[command(subcommand)]
    Recombine(RecombineCmd),
    /// Canonical path decomposition of the union of two ΓΔ-paths.
    Decompose(DecomposeArgs),
    /// Eigenvalue cross-checks on real symmetric matrices.
    #[command(subcommand)]
    Spectra(SpectraCmd),
    /// Draw a network as SVG or DOT.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Output file; without it the document goes to standard output.
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenCmd {
    /// The staircase network of rank n.
    Gamma0 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// n horizontal lines.
    Delta0 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// The staircase followed by straight lines, with a middle line.
    Horn {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Concatenate two networks of equal rank.
    Concat {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// A random layered network.
    Random {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 20)]
        max_edges: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum WeightsCmd {
    /// Uniform multiples of 1/den in [lo, hi].
    Random {
        #[arg(long)]
        net: PathBuf,
        #[arg(long, default_value_t = -5, allow_negative_numbers = true)]
        lo: i64,
        #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
        hi: i64,
        #[arg(long, default_value_t = 1)]
        den: i64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Every edge weighs 0.
    Zero {
        #[arg(long)]
        net: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Args)]
pub struct NetWeights {
    #[arg(long)]
    pub net: PathBuf,
    #[arg(long)]
    pub weights: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum EvalCmd {
    /// l_k for every k, with maximizing multipaths.
    L {
        #[command(flatten)]
        input: NetWeights,
        /// Cross-check against exhaustive enumeration (bounded by --cap).
        #[arg(long)]
        brute: bool,
    },
    /// The tableau t^k_i = l_i of the level-k subnetwork, checked against C2.
    Tableau {
        #[command(flatten)]
        input: NetWeights,
        #[command(flatten)]
        out: OutArg,
    },
    /// The tableau of ΓΔ-path maxima of a concatenation, checked against C3.
    Hive {
        #[command(flatten)]
        input: NetWeights,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Args)]
pub struct TableauArg {
    #[arg(long)]
    pub tableau: PathBuf,
    /// Relaxes every inequality by this amount.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub slack: String,
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Rhombus inequalities of the first two families.
    C2(TableauArg),
    /// All three rhombus families.
    C3(TableauArg),
    /// Interlacing of the horizontal differences.
    Gz {
        #[arg(long)]
        tableau: PathBuf,
    },
    /// Whether a triple lies in the Horn cone.
    Horn(HornArgs),
}

#[derive(Debug, Args)]
pub struct HornArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "triple")]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "triple")]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "triple")]
    pub nu: Option<String>,
    /// JSON file with "lambda", "mu" and "nu" as comma-separated strings.
    #[arg(long, conflicts_with_all = ["lambda", "mu", "nu"])]
    pub triple: Option<PathBuf>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub slack: String,
    /// Largest n attempted.
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
}

#[derive(Debug, Subcommand)]
pub enum InvertCmd {
    /// A weighting of the staircase network with the given tableau.
    Gz {
        #[arg(long)]
        tableau: PathBuf,
        /// Also write the staircase network.
        #[arg(long)]
        net_out: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// A weighting of staircase-then-lines with the given hive.
    Horn {
        #[arg(long)]
        tableau: PathBuf,
        #[arg(long)]
        net_out: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Args)]
pub struct RecombineArgs {
    #[arg(long)]
    pub net: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Multipath of the level-k subnetwork.
    #[arg(long)]
    pub f: PathBuf,
    /// Multipath of the level-(k-1) subnetwork.
    #[arg(long)]
    pub g: PathBuf,
    /// Report weights of the inputs and outputs.
    #[arg(long)]
    pub weights: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum RecombineCmd {
    /// Sizes (i-1, i) to (i-1, i).
    Shift(RecombineArgs),
    /// Sizes (i+1, i-1) to (i, i).
    Balance(RecombineArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VariantArg {
    First,
    Second,
    Third,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// A concatenated network (with a middle line).
    #[arg(long)]
    pub net: PathBuf,
    #[arg(long)]
    pub alpha: PathBuf,
    #[arg(long)]
    pub beta: PathBuf,
    /// Split the union into a red ΓΔ-path of type (k, i) and a green rest.
    #[arg(long, value_parser = parse_pair)]
    pub split: Option<(usize, usize)>,
    #[arg(long, value_enum, default_value_t = VariantArg::First)]
    pub variant: VariantArg,
    /// List every alternating coloring (at most --cap of them).
    #[arg(long)]
    pub colorings: bool,
    #[arg(long)]
    pub weights: Option<PathBuf>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected k,i")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

#[derive(Debug, Subcommand)]
pub enum SpectraCmd {
    /// Random A, B and C = A + B with their spectra.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        /// Rationalize the triple and decide Horn feasibility.
        #[arg(long)]
        check: bool,
    },
    /// Partial sums of eigenvalues of the leading principal submatrices.
    Tableau {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        slack: f64,
    },
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long)]
    pub net: PathBuf,
    #[arg(long)]
    pub weights: Option<PathBuf>,
    /// Multipath file whose edges are drawn in thick red.
    #[arg(long)]
    pub highlight: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = render::Format::Svg)]
    pub format: render::Format,
    /// Label unweighted edges with their ids.
    #[arg(long)]
    pub edge_ids: bool,
    #[command(flatten)]
    pub out: OutArg,
}

/// Result of a command: the report and, for commands that produce a file
/// but were given no `-o`, the file contents.
pub struct Output {
    pub report: RunReport,
    pub document: Option<String>,
}

/// Parses `args` (program name first), runs the command, prints to
/// standard output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    let (mut report, document) = match commands::dispatch(&cli, echo.clone()) {
        Ok(Output { report, document }) => (report, document),
        Err(e) => {
            eprintln!("error: {e:#}");
            let mut r = RunReport::new(echo, Verdict::Error);
            r.error = Some(format!("{e:#}"));
            (r, None)
        }
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    match (&document, cli.json) {
        (Some(doc), false) => print!("{doc}"),
        (_, true) => print!("{}", report.to_json()),
        (None, false) if report.verdict != Verdict::Error => print!("{}", report.to_text()),
        _ => {}
    }
    report.verdict.exit_code()
}
