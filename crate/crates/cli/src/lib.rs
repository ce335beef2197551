//! The `ubv` command line.
//!
//! [`run`] parses arguments, dispatches to `ubv-core` and reports through
//! the given writers, so tests can drive it without spawning a process.
//! Exit status 0 means success, 1 means a check ran and failed, 2 means
//! bad usage or unreadable input.

pub mod io;
pub mod svg;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use ubv_core::bipartite::{self, Method};
use ubv_core::complete;
use ubv_core::layout::{multiplicity_report, verify_representation};
use ubv_core::oracle::{brute_ub_tree, enumerate_trees, ENUMERATE_MAX_VERTICES};
use ubv_core::tree::{decomposition_layout, is_unit_rectangle_tree, unit_bar_tree};
use ubv_core::{Graph, Layout};

use crate::io::FormatError;
use crate::svg::{render_svg, RenderOptions};

#[derive(Debug, Parser)]
#[command(name = "ubv", version, about = "Unit bar visibility numbers and layouts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Unit bar visibility number of a tree, its decomposition and layout.
    Tree {
        #[command(subcommand)]
        action: TreeAction,
    },
    /// Build a layout of a complete or complete bipartite graph.
    Construct {
        #[command(subcommand)]
        family: Construct,
    },
    /// Known lower and upper bounds for a family.
    Bounds {
        #[command(subcommand)]
        family: Bounds,
    },
    /// Check that a layout represents a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        layout: PathBuf,
    },
    /// Draw a layout as SVG.
    Render {
        #[arg(long)]
        layout: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Overlay one dashed segment per visible pair of bars.
        #[arg(long)]
        sightlines: bool,
    },
    /// Cross-check fast algorithms against exhaustive search.
    Oracle {
        #[command(subcommand)]
        target: Oracle,
    },
}

#[derive(Debug, Args)]
struct TreeArgs {
    /// Graph file holding a tree.
    #[arg(long = "in")]
    input: PathBuf,
    /// Root for the decomposition; the value of `ub` does not depend on it.
    #[arg(long, default_value_t = 0)]
    root: usize,
}

#[derive(Debug, Subcommand)]
enum TreeAction {
    /// Print `ub` and which of the two possible values it takes.
    Compute(TreeArgs),
    /// Print a decomposition into unit bar visibility trees.
    Decompose(TreeArgs),
    /// Print a layout using `ub` bars for the busiest vertex.
    Layout(TreeArgs),
    /// Whether the tree is a unit rectangle visibility graph.
    UnitRectangle(TreeArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Dense,
    Sparse,
    Auto,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Dense => Method::Dense,
            MethodArg::Sparse => Method::Sparse,
            MethodArg::Auto => Method::Auto,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// `K_{m,n}` with `m >= n >= 2`.
    Kmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Write the layout here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// `K_n` with `n >= 1`.
    Kn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Bounds {
    Kmn {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    Kn {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Oracle {
    /// Compare the tree algorithm with brute force on every tree up to a size.
    Tree {
        #[arg(long)]
        max_vertices: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Core(#[from] ubv_core::Error),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

/// What a command produced: text for standard output and whether its check
/// passed.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command).and_then(|report| {
        out.write_all(report.text.as_bytes())?;
        Ok(report.ok)
    }) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: path.into(), source })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    io::parse_graph(&read(path)?).map_err(|source| CliError::Format { path: path.into(), source })
}

fn load_layout(path: &Path) -> Result<Layout, CliError> {
    io::parse_layout(&read(path)?).map_err(|source| CliError::Format { path: path.into(), source })
}

fn load_tree(args: &TreeArgs) -> Result<Graph, CliError> {
    let tree = load_graph(&args.input)?;
    if !tree.is_tree() {
        return Err(CliError::Usage(format!("{} is not a tree", args.input.display())));
    }
    if args.root >= tree.vertex_count() {
        return Err(CliError::Usage(format!(
            "root {} is out of range for a tree on {} vertices",
            args.root,
            tree.vertex_count()
        )));
    }
    Ok(tree)
}

fn dispatch(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Tree { action } => tree(action),
        Command::Construct { family } => construct(family),
        Command::Bounds { family } => bounds(family),
        Command::Verify { graph, layout } => verify(&graph, &layout),
        Command::Render { layout, out, sightlines } => {
            let svg = render_svg(&load_layout(&layout)?, RenderOptions { sightlines })?;
            write(&out, &svg)?;
            Ok(Report::ok(String::new()))
        }
        Command::Oracle { target: Oracle::Tree { max_vertices } } => oracle_tree(max_vertices),
    }
}

fn tree(action: TreeAction) -> Result<Report, CliError> {
    let mut text = String::new();
    match action {
        TreeAction::Compute(args) => {
            let tree = load_tree(&args)?;
            let res = unit_bar_tree(&tree, Some(args.root))?;
            let (third, third_plus) = (res.max_degree.div_ceil(3), (res.max_degree + 1).div_ceil(3));
            let equals = match (res.ub == third, res.ub == third_plus) {
                (true, true) => "both",
                (true, false) => "ceil(delta/3)",
                (false, true) => "ceil((delta+1)/3)",
                (false, false) => "neither",
            };
            writeln!(text, "ub={}", res.ub).unwrap();
            writeln!(text, "delta={}", res.max_degree).unwrap();
            writeln!(text, "ceil(delta/3)={third}").unwrap();
            writeln!(text, "ceil((delta+1)/3)={third_plus}").unwrap();
            writeln!(text, "equals={equals}").unwrap();
        }
        TreeAction::Decompose(args) => {
            let tree = load_tree(&args)?;
            let res = unit_bar_tree(&tree, Some(args.root))?;
            writeln!(text, "ub={}", res.ub).unwrap();
            writeln!(text, "parts={}", res.decomposition.parts.len()).unwrap();
            for (i, part) in res.decomposition.parts.iter().enumerate() {
                let edges: Vec<String> = part.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                writeln!(text, "part {i} anchor={} edges={}", part.anchor, edges.join(",")).unwrap();
            }
        }
        TreeAction::Layout(args) => {
            let tree = load_tree(&args)?;
            let res = unit_bar_tree(&tree, Some(args.root))?;
            text = io::write_layout(&decomposition_layout(&res.decomposition)?);
        }
        TreeAction::UnitRectangle(args) => {
            let tree = load_tree(&args)?;
            let ub = unit_bar_tree(&tree, Some(args.root))?.ub;
            writeln!(text, "unit_rectangle={}", is_unit_rectangle_tree(&tree)?).unwrap();
            writeln!(text, "ub={ub}").unwrap();
        }
    }
    Ok(Report::ok(text))
}

fn emit_layout(layout: &Layout, out: Option<PathBuf>) -> Result<Report, CliError> {
    let serialized = io::write_layout(layout);
    match out {
        None => Ok(Report::ok(serialized)),
        Some(path) => {
            write(&path, &serialized)?;
            let t = multiplicity_report(layout).max;
            Ok(Report::ok(format!("bars={}\nt={t}\n", layout.len())))
        }
    }
}

fn construct(family: Construct) -> Result<Report, CliError> {
    match family {
        Construct::Kmn { m, n, method, out } => {
            bipartite::BipartiteParams::new(m, n)?;
            emit_layout(&bipartite::construct_kmn(m, n, method.into())?, out)
        }
        Construct::Kn { n, out } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            emit_layout(&complete::construct_kn(n)?, out)
        }
    }
}

fn bounds(family: Bounds) -> Result<Report, CliError> {
    let (lower, upper) = match family {
        Bounds::Kmn { m, n } => {
            let b = bipartite::bounds_kmn(m, n)?;
            (b.lower, b.upper)
        }
        Bounds::Kn { n } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            complete::bounds_kn(n)?
        }
    };
    Ok(Report::ok(format!("lower={lower} upper={upper} exact={}\n", lower == upper)))
}

fn list<T>(items: &[T], show: impl Fn(&T) -> String) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.iter().map(show).collect::<Vec<_>>().join(" ")
    }
}

fn verify(graph: &Path, layout: &Path) -> Result<Report, CliError> {
    let graph = load_graph(graph)?;
    let layout = load_layout(layout)?;
    let r = verify_representation(&layout, &graph);
    let pair = |&(u, v): &(usize, usize)| format!("{u}-{v}");
    let mut text = String::new();
    writeln!(text, "represents_target: {}", r.represents_target).unwrap();
    writeln!(text, "valid_layout: {}", r.is_valid_layout).unwrap();
    writeln!(text, "vertices: {}", graph.vertex_count()).unwrap();
    writeln!(text, "edges: {}", graph.edge_count()).unwrap();
    writeln!(text, "bars: {}", layout.len()).unwrap();
    writeln!(text, "max_multiplicity: {}", r.max_multiplicity).unwrap();
    writeln!(text, "missing_edges: {}", list(&r.missing_edges, pair)).unwrap();
    writeln!(text, "forbidden_visibilities: {}", list(&r.forbidden_visibilities, pair)).unwrap();
    writeln!(text, "self_visibilities: {}", r.self_visibilities).unwrap();
    writeln!(text, "unlabeled_vertices: {}", list(&r.unlabeled_vertices, usize::to_string)).unwrap();
    writeln!(text, "out_of_range_bars: {}", list(&r.out_of_range_bars, usize::to_string)).unwrap();
    Ok(Report { text, ok: r.represents_target })
}

fn oracle_tree(max_vertices: usize) -> Result<Report, CliError> {
    if !(1..=ENUMERATE_MAX_VERTICES).contains(&max_vertices) {
        return Err(CliError::Usage(format!("--max-vertices must be between 1 and {ENUMERATE_MAX_VERTICES}")));
    }
    let mut text = String::from("vertices trees mismatches result\n");
    let (mut total, mut bad_total) = (0, 0);
    for n in 1..=max_vertices {
        let (mut trees, mut bad) = (0, 0);
        for tree in enumerate_trees(n, false)? {
            trees += 1;
            let res = unit_bar_tree(&tree, None)?;
            let valid = res.decomposition.validate(&tree).is_ok();
            if !valid || res.ub != brute_ub_tree(&tree)? {
                bad += 1;
            }
        }
        writeln!(text, "{n:>8} {trees:>5} {bad:>10} {}", if bad == 0 { "pass" } else { "FAIL" }).unwrap();
        total += trees;
        bad_total += bad;
    }
    writeln!(text, "{:>8} {total:>5} {bad_total:>10} {}", "all", if bad_total == 0 { "pass" } else { "FAIL" }).unwrap();
    Ok(Report { text, ok: bad_total == 0 })
}
