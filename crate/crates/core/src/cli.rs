//! The `hecolor` command line.
//!
//! Exit codes: 0 success, 1 verification failed, 2 invalid parameters or
//! input, 3 solver budget exceeded. Failures are reported as one JSON line
//! on the error stream.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::constructions::{self, ConstructionResult, Theorem, Variant};
use crate::decompositions::walecki_decompose;
use crate::dot::to_dot;
use crate::error::Error;
use crate::homogeneity::{count_monochromatic_vertices, verify, EdgeColoring};
use crate::multigraph::{self, FamilyKind, FamilySpec, Multigraph};
use crate::solver::{self, SolverConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hecolor",
    version,
    about = "Homogeneous edge-colorings of multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    Wheel,
    Tree,
}

/// Where the graph comes from: a JSON file or an inline family.
#[derive(Args, Debug)]
struct GraphSource {
    /// Graph JSON file
    #[arg(long = "in", value_name = "FILE", conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Vertex count, or the first part size for complete-bipartite
    #[arg(long)]
    n: Option<usize>,
    /// Second part size for complete-bipartite
    #[arg(long)]
    m: Option<usize>,
    /// Edge multiplicity for complete and complete-bipartite
    #[arg(long, default_value_t = 1)]
    lambda: usize,
    /// Seed for tree generation
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph family instance as graph JSON
    Generate {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a closed-form homogeneous coloring
    Color {
        #[command(flatten)]
        source: GraphSource,
        /// Result to apply; inferred from the family when omitted
        #[arg(long)]
        theorem: Option<String>,
        /// cycles, circulant or residue, where the result offers a choice
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring for homogeneity; exits 0 iff it is homogeneous
    Verify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the homogeneous chromatic index exactly
    Chi {
        #[command(flatten)]
        source: GraphSource,
        /// Search node cap
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hamiltonian decomposition of K_n for odd n
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the odd-cycle parity property over all 2-colorings of C_n
    CheckProp {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = solver::DEFAULT_EXHAUSTIVE_BOUND)]
        bound: usize,
    },
    /// Render a graph, optionally colored, as Graphviz DOT
    ExportDot {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_name = "FILE")]
        coloring: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
    Io(String),
    Failed(serde_json::Value),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Failed(_) | CliError::Core(Error::NoHomogeneousColoring { .. }) => {
                EXIT_FAILED
            }
            _ => EXIT_INVALID,
        }
    }

    fn diagnostic(&self) -> serde_json::Value {
        match self {
            CliError::Core(e) => json!({ "error": error_kind(e), "message": e.to_string() }),
            CliError::Usage(msg) => json!({ "error": "usage", "message": msg }),
            CliError::Io(msg) => json!({ "error": "io", "message": msg }),
            CliError::Failed(detail) => detail.clone(),
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidParameter(_) => "invalid-parameter",
        Error::UnknownVertex(_) => "unknown-vertex",
        Error::InvalidGraph(_) => "invalid-graph",
        Error::ColoringMismatch { .. } => "coloring-mismatch",
        Error::ColorOutOfRange { .. } => "color-out-of-range",
        Error::TooFewColors(_) => "too-few-colors",
        Error::NotACycle => "not-a-cycle",
        Error::NotATree => "not-a-tree",
        Error::NotEulerian => "not-eulerian",
        Error::NoHomogeneousColoring { .. } => "no-homogeneous-coloring",
        Error::EmptyGraph => "empty-graph",
        Error::BudgetExceeded { .. } => "budget-exceeded",
        Error::ExhaustiveBoundExceeded { .. } => "bound-exceeded",
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

impl GraphSource {
    /// The family described by the inline flags, if any. Checked before any
    /// file is read.
    fn family_spec(&self) -> CliResult<Option<FamilySpec>> {
        let Some(family) = self.family else {
            if self.input.is_none() {
                return Err(CliError::Usage("give either --in FILE or --family".into()));
            }
            return Ok(None);
        };
        let n = self
            .n
            .ok_or_else(|| CliError::Usage(format!("--family {family:?} needs --n")))?;
        let spec = match family {
            FamilyArg::Complete => FamilySpec::new(FamilyKind::Complete, vec![n, self.lambda]),
            FamilyArg::CompleteBipartite => {
                let m = self
                    .m
                    .ok_or_else(|| CliError::Usage("complete-bipartite needs --m".into()))?;
                FamilySpec::new(FamilyKind::CompleteBipartite, vec![n, m, self.lambda])
            }
            FamilyArg::Path => FamilySpec::new(FamilyKind::Path, vec![n]),
            FamilyArg::Cycle => FamilySpec::new(FamilyKind::Cycle, vec![n]),
            FamilyArg::Star => FamilySpec::new(FamilyKind::Star, vec![n]),
            FamilyArg::Wheel => FamilySpec::new(FamilyKind::Wheel, vec![n]),
            FamilyArg::Tree => FamilySpec::new(FamilyKind::Tree, vec![n, self.seed as usize]),
        };
        Ok(Some(spec))
    }

    fn load(&self) -> CliResult<Multigraph> {
        match self.family_spec()? {
            Some(spec) => Ok(spec.generate()?),
            None => read_json(self.input.as_deref().expect("checked in family_spec")),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn emit_json(out: &mut dyn Write, path: Option<&Path>, value: &impl Serialize) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    emit(out, path, &text)
}

fn parse_variant(s: Option<&str>) -> CliResult<Option<Variant>> {
    Ok(s.map(str::parse).transpose()?)
}

fn infer_theorem(g: &Multigraph) -> CliResult<Theorem> {
    let theorem = match g.family() {
        Some(f) => match (f.kind, f.params.as_slice()) {
            (FamilyKind::Complete, [n, 1]) if *n >= 4 && n % 2 == 0 => Theorem::CompleteEven,
            (FamilyKind::Complete, [n, 1]) if *n >= 5 && n % 4 == 1 => Theorem::CompleteOneModFour,
            (FamilyKind::Complete, [n, 1]) if n % 4 == 3 => Theorem::CompleteThreeModFour,
            (FamilyKind::Complete, _) => Theorem::LambdaComplete,
            (FamilyKind::CompleteBipartite, _) => Theorem::CompleteBipartite,
            (FamilyKind::Path, _) => Theorem::Path,
            (FamilyKind::Cycle, _) => Theorem::Cycle,
            (FamilyKind::Wheel, _) => Theorem::Wheel,
            (FamilyKind::Star | FamilyKind::Tree, _) => Theorem::Tree,
            (FamilyKind::Custom, _) => return infer_structural(g),
        },
        None => return infer_structural(g),
    };
    Ok(theorem)
}

fn infer_structural(g: &Multigraph) -> CliResult<Theorem> {
    if g.is_tree() {
        Ok(Theorem::Tree)
    } else if g.is_eulerian() {
        Ok(Theorem::Eulerian)
    } else {
        Err(CliError::Usage(
            "cannot infer a theorem for this graph; pass --theorem".into(),
        ))
    }
}

fn family_params(g: &Multigraph, kind: FamilyKind) -> CliResult<Vec<usize>> {
    match g.family() {
        Some(f) if f.kind == kind => Ok(f.params.clone()),
        _ => Err(CliError::Usage(format!(
            "this theorem needs a graph of family {kind:?}"
        ))),
    }
}

/// Apply `theorem` to `g`. Formula-based results are built for the graph
/// the family regenerates, which must equal `g`.
fn construct(
    g: &Multigraph,
    theorem: Theorem,
    variant: Option<Variant>,
    config: &SolverConfig,
) -> CliResult<ConstructionResult> {
    let single = |g: &Multigraph| -> CliResult<usize> {
        match family_params(g, FamilyKind::Complete)?.as_slice() {
            [n, 1] => Ok(*n),
            _ => Err(CliError::Usage("this theorem needs lambda = 1".into())),
        }
    };
    let result = match theorem {
        Theorem::CompleteEven => constructions::color_complete_even(single(g)?)?,
        Theorem::CompleteOneModFour => {
            constructions::color_complete_1mod4(single(g)?, variant.unwrap_or(Variant::Circulant))?
        }
        Theorem::CompleteThreeModFour => {
            let n = single(g)?;
            let variant = variant.unwrap_or_else(|| constructions::default_variant_3mod4(n));
            constructions::color_complete_3mod4(n, variant)?
        }
        Theorem::LambdaComplete => {
            let p = family_params(g, FamilyKind::Complete)?;
            constructions::color_lambda_complete_with(p[0], p[1], variant)?
        }
        Theorem::CompleteBipartite => {
            let p = family_params(g, FamilyKind::CompleteBipartite)?;
            constructions::color_complete_bipartite(p[0], p[1], p[2])?
        }
        Theorem::Wheel => constructions::color_wheel(family_params(g, FamilyKind::Wheel)?[0])?,
        Theorem::Path => constructions::color_path(family_params(g, FamilyKind::Path)?[0])?,
        Theorem::Cycle => constructions::color_cycle(family_params(g, FamilyKind::Cycle)?[0])?,
        Theorem::Tree => constructions::color_tree(g)?,
        Theorem::Eulerian => constructions::color_eulerian_with(g, config)?,
    };
    if !matches!(theorem, Theorem::Tree | Theorem::Eulerian) {
        let regenerated = g.family().expect("family checked above").generate()?;
        if &regenerated != g {
            return Err(CliError::Core(Error::InvalidGraph(
                "graph does not match the family it declares".into(),
            )));
        }
    }
    Ok(result)
}

fn budget_config(budget: Option<u64>) -> SolverConfig {
    budget.map(SolverConfig::with_budget).unwrap_or_default()
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Generate { source, out: path } => {
            let g = source.load()?;
            emit_json(out, path.as_deref(), &g)
        }
        Command::Color {
            source,
            theorem,
            variant,
            budget,
            out: path,
        } => {
            let theorem = theorem.as_deref().map(str::parse::<Theorem>).transpose()?;
            let variant = parse_variant(variant.as_deref())?;
            let g = source.load()?;
            let theorem = match theorem {
                Some(t) => t,
                None => infer_theorem(&g)?,
            };
            let result = construct(&g, theorem, variant, &budget_config(budget))?;
            let report = verify(&g, &result.coloring)?;
            if !report.ok {
                return Err(CliError::Failed(json!({
                    "error": "construction-not-homogeneous",
                    "violation": report.first_violation,
                })));
            }
            emit_json(out, path.as_deref(), &result)
        }
        Command::Verify {
            source,
            coloring,
            out: path,
        } => {
            source.family_spec()?;
            let g = source.load()?;
            let c: EdgeColoring = read_json(&coloring)?;
            let report = verify(&g, &c)?;
            emit_json(out, path.as_deref(), &report)?;
            match report.first_violation {
                None => Ok(()),
                Some(v) => Err(CliError::Failed(json!({
                    "error": "not-homogeneous",
                    "vertex": v.vertex,
                    "color": v.color,
                    "count": v.count,
                    "allowed": v.allowed,
                }))),
            }
        }
        Command::Chi {
            source,
            budget,
            out: path,
        } => {
            let g = source.load()?;
            let result = solver::chi_tilde_with(&g, &budget_config(budget))?;
            emit_json(out, path.as_deref(), &result)
        }
        Command::Decompose { n, out: path } => {
            let d = walecki_decompose(n)?;
            emit_json(out, path.as_deref(), &d)
        }
        Command::CheckProp { n, bound } => {
            let g = multigraph::cycle(n)?;
            let check = solver::all_colorings_property(&g, bound, |c| {
                count_monochromatic_vertices(&g, c).is_ok_and(|k| k % 2 == 1)
            })?;
            emit_json(
                out,
                None,
                &json!({
                    "n": n,
                    "holds": check.holds,
                    "colorings_checked": check.colorings_checked,
                    "counterexample": check.counterexample,
                }),
            )?;
            if check.holds {
                Ok(())
            } else {
                Err(CliError::Failed(json!({
                    "error": "property-fails",
                    "n": n,
                })))
            }
        }
        Command::ExportDot {
            source,
            coloring,
            out: path,
        } => {
            let g = source.load()?;
            let c: Option<EdgeColoring> = coloring.as_deref().map(read_json).transpose()?;
            let text = to_dot(&g, c.as_ref())?;
            emit(out, path.as_deref(), &text)
        }
    }
}

/// Run the command line with explicit output streams and return the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "{}", json!({ "error": "usage", "message": first }));
            return EXIT_INVALID;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{}", e.diagnostic());
            e.exit_code()
        }
    }
}
