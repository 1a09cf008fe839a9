//! Command-line front end: parse a space description, print topologies,
//! families and classifications, run the law-verification suite, mine
//! witnesses, and emit the class-implication diagram.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 verification
//! failure.

mod goals;
mod output;
mod spacefile;

use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use nanotop::{
    check_all, class_closure, class_interior, enumerate_family, enumerate_spaces, is_closed,
    is_open, mine, semi_alpha_closure_formula, semi_alpha_interior_formula, ClassKind, NanoSpace,
    PartitionError, SetError, Side, Subset, Universe, VerdictReport, VerdictStatus,
};

use output::{
    family_names, report_line, subset_names, ClassRowJson, ClassifyJson, FamilyJson, MineJson,
    ReportJson, SummaryJson, TopologyJson, VerifyJson,
};
use spacefile::SpaceFile;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("SpaceFileParse: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("UnknownGoal: '{0}' is not in the goal vocabulary")]
    UnknownGoal(String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser)]
#[command(
    name = "nanotop",
    version,
    about = "Nano topologies from rough-set approximations: build, classify, verify, mine"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print approximations, the topology and its closed family
    Topology {
        /// Space file path, or - for standard input
        space: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify a subset against all five weak-open classes
    Classify {
        /// Space file path, or - for standard input
        space: String,
        /// Element names of the subset (none for φ)
        elements: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List one class family in canonical order
    Family {
        /// Space file path, or - for standard input
        space: String,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = SideArg::Open)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check every catalogued law on one space or on all small spaces
    Verify {
        /// Space file path, or - for standard input
        space: Option<String>,
        /// Check all spaces over a fresh n-element universe instead
        #[arg(long, value_name = "N")]
        all_spaces: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search all spaces of a given size for a goal witness
    Mine {
        #[arg(long)]
        size: usize,
        /// e.g. "NSaO&!NaO", "meet-escape:NSaO", "strict:T4.5iv"
        #[arg(long)]
        goal: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit the implication diagram between the five classes
    Diagram {
        /// Space file path, or - for standard input
        space: String,
        /// Emit DOT instead of the text table
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    N,
    Np,
    Ns,
    Na,
    Nsa,
}

impl From<KindArg> for ClassKind {
    fn from(value: KindArg) -> ClassKind {
        match value {
            KindArg::N => ClassKind::NOpen,
            KindArg::Np => ClassKind::NPre,
            KindArg::Ns => ClassKind::NSemi,
            KindArg::Na => ClassKind::NAlpha,
            KindArg::Nsa => ClassKind::NSemiAlpha,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Open,
    Closed,
}

impl From<SideArg> for Side {
    fn from(value: SideArg) -> Side {
        match value {
            SideArg::Open => Side::Open,
            SideArg::Closed => Side::Closed,
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) =>
        {
            let _ = err.print();
            return 0;
        }
        Err(err) => {
            let _ = err.print();
            return 1;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Topology { space, format } => cmd_topology(&space, format),
        Command::Classify { space, elements, format } => cmd_classify(&space, &elements, format),
        Command::Family { space, kind, side, format } => {
            cmd_family(&space, kind.into(), side.into(), format)
        }
        Command::Verify { space, all_spaces, format } => {
            cmd_verify(space.as_deref(), all_spaces, format)
        }
        Command::Mine { size, goal, format } => cmd_mine(size, &goal, format),
        Command::Diagram { space, dot } => cmd_diagram(&space, dot),
    }
}

fn load_space(path: &str) -> Result<NanoSpace, CliError> {
    SpaceFile::load(path)?.build()
}

/// Fresh universe with single-letter names, for --all-spaces and mine.
fn generated_universe(size: usize) -> Result<Universe, CliError> {
    if size == 0 || size > 26 {
        return Err(CliError::Usage(format!(
            "size must be between 1 and 26, got {size}"
        )));
    }
    let names: Vec<String> = (0..size)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    Ok(Universe::new(names)?)
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_topology(path: &str, format: Format) -> Result<i32, CliError> {
    let space = load_space(path)?;
    match format {
        Format::Text => {
            println!("universe: {}", space.universe().full_set());
            println!("partition: {}", space.partition());
            println!("target: {}", space.target());
            println!("lower: {}", space.lower());
            println!("upper: {}", space.upper());
            println!("boundary: {}", space.boundary());
            println!("tau: {}", space.tau());
            println!("closed: {}", space.closed_family());
        }
        Format::Json => {
            let file = SpaceFile::from_space(&space);
            print_json(&TopologyJson {
                universe: file.universe,
                partition: file.partition,
                target: file.target,
                lower: subset_names(space.lower()),
                upper: subset_names(space.upper()),
                boundary: subset_names(space.boundary()),
                tau: family_names(space.tau()),
                closed: family_names(space.closed_family()),
            })?;
        }
    }
    Ok(0)
}

fn cmd_classify(path: &str, elements: &[String], format: Format) -> Result<i32, CliError> {
    let space = load_space(path)?;
    let set = space.universe().subset_of_names(elements)?;
    let mut rows = Vec::new();
    for kind in ClassKind::ALL {
        let open = is_open(&space, kind, &set)?;
        let closed = is_closed(&space, kind, &set)?;
        // the chain formulas are the default evaluation path for NSα
        let (interior, closure) = match kind {
            ClassKind::NOpen => (space.interior(&set)?, space.closure(&set)?),
            ClassKind::NSemiAlpha => (
                semi_alpha_interior_formula(&space, &set)?,
                semi_alpha_closure_formula(&space, &set)?,
            ),
            _ => (
                class_interior(&space, kind, &set)?,
                class_closure(&space, kind, &set)?,
            ),
        };
        rows.push((kind, open, closed, interior, closure));
    }
    match format {
        Format::Text => {
            println!("set: {set}");
            println!("{:<5} {:<6} {:<7} {:<12} closure", "kind", "open", "closed", "interior");
            for (kind, open, closed, interior, closure) in rows {
                println!(
                    "{:<5} {:<6} {:<7} {:<12} {}",
                    kind.to_string(),
                    open,
                    closed,
                    interior.to_string(),
                    closure
                );
            }
        }
        Format::Json => {
            let classes = rows
                .into_iter()
                .map(|(kind, open, closed, interior, closure)| ClassRowJson {
                    kind: kind.token().to_owned(),
                    open,
                    closed,
                    interior: subset_names(&interior),
                    closure: subset_names(&closure),
                })
                .collect();
            print_json(&ClassifyJson { set: subset_names(&set), classes })?;
        }
    }
    Ok(0)
}

fn cmd_family(path: &str, kind: ClassKind, side: Side, format: Format) -> Result<i32, CliError> {
    let space = load_space(path)?;
    let family = enumerate_family(&space, kind, side)?;
    match format {
        Format::Text => {
            for member in &family {
                println!("{member}");
            }
            println!("{} sets", family.len());
        }
        Format::Json => {
            print_json(&FamilyJson {
                kind: kind.token().to_owned(),
                side: side.to_string(),
                count: family.len(),
                members: family_names(&family),
            })?;
        }
    }
    Ok(0)
}

fn summarize(reports: &[VerdictReport]) -> SummaryJson {
    let mut summary = SummaryJson::default();
    for r in reports {
        match r.status {
            VerdictStatus::Pass => summary.pass += 1,
            VerdictStatus::Fail => summary.fail += 1,
            VerdictStatus::Vacuous => summary.vacuous += 1,
            VerdictStatus::WitnessFound => summary.witness_found += 1,
            VerdictStatus::WitnessNotFound => summary.witness_not_found += 1,
        }
    }
    summary
}

fn verify_exit_code(reports: &[VerdictReport]) -> i32 {
    if reports.iter().any(|r| r.status.is_failure()) {
        2
    } else {
        0
    }
}

fn cmd_verify(path: Option<&str>, all_spaces: Option<usize>, format: Format) -> Result<i32, CliError> {
    let (spaces_checked, reports) = match (path, all_spaces) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "provide either a space file or --all-spaces, not both".to_owned(),
            ))
        }
        (None, None) => {
            return Err(CliError::Usage(
                "provide a space file (or -) or --all-spaces N".to_owned(),
            ))
        }
        (Some(path), None) => {
            let space = load_space(path)?;
            (1, check_all(&space)?)
        }
        (None, Some(n)) => {
            let universe = generated_universe(n)?;
            let mut reports = Vec::new();
            let mut count = 0;
            for space in enumerate_spaces(&universe)? {
                count += 1;
                reports.extend(check_all(&space)?);
            }
            (count, reports)
        }
    };
    let summary = summarize(&reports);
    match format {
        Format::Text => {
            for r in &reports {
                println!("{}", report_line(r));
            }
            println!(
                "spaces={} reports={} pass={} fail={} vacuous={} witness-found={} witness-not-found={}",
                spaces_checked,
                reports.len(),
                summary.pass,
                summary.fail,
                summary.vacuous,
                summary.witness_found,
                summary.witness_not_found
            );
        }
        Format::Json => {
            print_json(&VerifyJson {
                spaces: spaces_checked,
                reports: reports.iter().map(ReportJson::from_report).collect(),
                summary,
            })?;
        }
    }
    Ok(verify_exit_code(&reports))
}

fn cmd_mine(size: usize, goal_text: &str, format: Format) -> Result<i32, CliError> {
    let goal = goals::parse_goal(goal_text)?;
    let universe = generated_universe(size)?;
    let found = mine(&universe, &goal)?;
    match format {
        Format::Text => match &found {
            Some(find) => {
                println!("goal: {goal_text}");
                println!("space: {}", find.space.describe());
                let rendered: Vec<String> = find.sets.iter().map(Subset::to_string).collect();
                println!("witnesses: {}", rendered.join(" "));
            }
            None => println!("none"),
        },
        Format::Json => {
            let (space, witnesses) = match &found {
                Some(find) => (
                    Some(SpaceFile::from_space(&find.space)),
                    find.sets.iter().map(subset_names).collect(),
                ),
                None => (None, Vec::new()),
            };
            print_json(&MineJson {
                goal: goal_text.to_owned(),
                found: found.is_some(),
                space,
                witnesses,
            })?;
        }
    }
    Ok(0)
}

/// Diagram nodes in display order: (node id, display label, kind).
const DIAGRAM_NODES: [(&str, &str, ClassKind); 5] = [
    ("N", "N", ClassKind::NOpen),
    ("Na", "Nα", ClassKind::NAlpha),
    ("Ns", "Ns", ClassKind::NSemi),
    ("Np", "Np", ClassKind::NPre),
    ("NSa", "NSα", ClassKind::NSemiAlpha),
];

/// Implication edges: (from, to, empirical). The Ns → NSα edge is the
/// tested collapse rather than a catalogued implication.
const DIAGRAM_EDGES: [(ClassKind, ClassKind, bool); 6] = [
    (ClassKind::NOpen, ClassKind::NAlpha, false),
    (ClassKind::NAlpha, ClassKind::NSemi, false),
    (ClassKind::NAlpha, ClassKind::NPre, false),
    (ClassKind::NOpen, ClassKind::NSemiAlpha, false),
    (ClassKind::NAlpha, ClassKind::NSemiAlpha, false),
    (ClassKind::NSemi, ClassKind::NSemiAlpha, true),
];

fn cmd_diagram(path: &str, dot: bool) -> Result<i32, CliError> {
    let space = load_space(path)?;
    let node = |kind: ClassKind| {
        DIAGRAM_NODES
            .iter()
            .find(|(_, _, k)| *k == kind)
            .expect("all kinds are diagram nodes")
    };
    let mut sizes = Vec::new();
    let mut families = Vec::new();
    for (_, _, kind) in DIAGRAM_NODES {
        let family = enumerate_family(&space, kind, Side::Open)?;
        sizes.push(family.len());
        families.push((kind, family));
    }
    let family_of = |kind: ClassKind| &families.iter().find(|(k, _)| *k == kind).unwrap().1;
    let label = |from: ClassKind, to: ClassKind| {
        if family_of(from) == family_of(to) {
            "="
        } else {
            "strict"
        }
    };

    let mut out = String::new();
    if dot {
        writeln!(out, "digraph weak_open_classes {{").unwrap();
        for (i, (id, name, _)) in DIAGRAM_NODES.iter().enumerate() {
            writeln!(out, "  {id} [label=\"{name} ({})\"];", sizes[i]).unwrap();
        }
        for (from, to, empirical) in DIAGRAM_EDGES {
            let style = if empirical { ", style=dashed" } else { "" };
            writeln!(
                out,
                "  {} -> {} [label=\"{}\"{}];",
                node(from).0,
                node(to).0,
                label(from, to),
                style
            )
            .unwrap();
        }
        writeln!(
            out,
            "  Np -> NSa [label=\"independent\", dir=none, style=dotted];"
        )
        .unwrap();
        write!(out, "}}").unwrap();
    } else {
        writeln!(out, "classes (open-family size):").unwrap();
        for (i, (_, name, _)) in DIAGRAM_NODES.iter().enumerate() {
            writeln!(out, "  {:<4} {}", name, sizes[i]).unwrap();
        }
        writeln!(out, "edges:").unwrap();
        for (from, to, empirical) in DIAGRAM_EDGES {
            let note = if empirical { "  (empirical)" } else { "" };
            writeln!(
                out,
                "  {:<4} → {:<4} {}{}",
                node(from).1,
                node(to).1,
                label(from, to),
                note
            )
            .unwrap();
        }
        write!(out, "  {:<4} ↮ {:<4} independent", "Np", "NSα").unwrap();
    }
    println!("{out}");
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nanotop::TheoremId;

    #[test]
    fn exit_code_two_requires_a_failure() {
        let u = Universe::new(["a", "b"]).unwrap();
        let space = {
            let p = nanotop::Partition::new(&u, vec![u.full_set()]).unwrap();
            NanoSpace::build(p, u.empty_set()).unwrap()
        };
        let reports = check_all(&space).unwrap();
        assert_eq!(verify_exit_code(&reports), 0);

        let synthetic_failure = VerdictReport {
            theorem: TheoremId::P2_4,
            space: space.describe(),
            status: VerdictStatus::Fail,
            witnesses: vec![u.empty_set()],
            checked_count: 1,
            detail: None,
        };
        assert_eq!(verify_exit_code(&[synthetic_failure]), 2);
    }

    #[test]
    fn generated_universe_names_are_letters() {
        let u = generated_universe(4).unwrap();
        assert_eq!(u.names(), ["a", "b", "c", "d"]);
        assert!(generated_universe(0).is_err());
        assert!(generated_universe(27).is_err());
    }
}
