//! The `weavelab` command line.
//!
//! Exit codes: 0 when the checked property holds, 1 when it fails (a
//! `witness` line is printed), 2 for usage, parse and precondition errors,
//! 3 for internal invariant violations.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::counterexample::{
    high_girth_search, load_graph, pipeline, stratified_dot, write_edge_list, write_graph6, GirthSearch,
    Graph, GraphFormat,
};
use crate::error::{Error, Result};
use crate::order::format::{parse_poset, to_dot, write_poset};
use crate::order::{dedekind_macneille, subset_lattice, BoundKind, Lattice, Poset};
use crate::sepsys::{
    glue_universe, graph_separation_universe, is_submodular_system, parse_separation_system,
    unravel_system, write_separation_system,
};
use crate::submod::{
    format_rational, parse_rational, parse_values, perturb, tie_breaker_rho, unravel_order_induced,
    write_values, ValueTable,
};
use crate::weave::family::{format_set, parse_family};
use crate::weave::sweep::{sweep_families, verify_finding};
use crate::weave::{
    is_woven_family, is_woven_in, is_woven_poset, posets, ravel_step, unravel_poset, woven_subsets,
    EnumCaps, SearchOutcome, Strategy, UnravelTrace, Unraveller,
};
use crate::{Elem, ElemSet};

#[derive(Parser, Debug)]
#[command(name = "weavelab", version, about = "Woven sets, unravellings and their certificates")]
struct Cli {
    /// Worker threads for parallel certification (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format for exported structures.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Write the exported structure to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Dot,
}

#[derive(Args, Debug, Clone)]
struct LatticeSource {
    /// Lattice given as a `.poset` file (certified on load).
    #[arg(long, value_name = "FILE")]
    in_lattice: Option<PathBuf>,
    /// The power set of an n-point set, elements numbered by bitmask.
    #[arg(long, value_name = "N", conflicts_with = "in_lattice")]
    subsets: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct MemberArgs {
    /// Members as comma separated indices, or `all`.
    #[arg(long, value_name = "LIST")]
    members: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is the poset a lattice?
    CheckLattice { file: PathBuf },
    /// Is the poset a distributive lattice?
    CheckDistributive { file: PathBuf },
    /// Wovenness of lattice members, of a poset, or of a set family.
    CheckWoven {
        #[command(flatten)]
        lattice: LatticeSource,
        #[command(flatten)]
        members: MemberArgs,
        #[arg(long, value_name = "FILE", conflicts_with_all = ["in_lattice", "subsets", "family"])]
        poset: Option<PathBuf>,
        #[arg(long, value_name = "FILE", conflicts_with_all = ["in_lattice", "subsets"])]
        family: Option<PathBuf>,
    },
    /// Add a maximal outside element to a woven set.
    Ravel {
        #[command(flatten)]
        lattice: LatticeSource,
        #[command(flatten)]
        members: MemberArgs,
    },
    /// Delete elements one at a time, keeping every remainder woven.
    Unravel {
        #[arg(long, value_enum, default_value_t = UnravelStrategy::Backtrack)]
        strategy: UnravelStrategy,
        #[command(flatten)]
        lattice: LatticeSource,
        #[command(flatten)]
        members: MemberArgs,
        #[arg(long, value_name = "FILE")]
        poset: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        family: Option<PathBuf>,
        /// Values of a submodular function (order-induced strategy).
        #[arg(long, value_name = "FILE")]
        vals: Option<PathBuf>,
        /// Threshold: unravel `{p : f(p) < k}`.
        #[arg(long, value_name = "RATIONAL")]
        k: Option<String>,
    },
    /// The tie-breaker, and the perturbation of `--vals` if given.
    Tiebreak {
        #[command(flatten)]
        lattice: LatticeSource,
        #[arg(long, value_name = "FILE")]
        vals: Option<PathBuf>,
    },
    /// Dedekind-MacNeille completion of a poset.
    Dmc { file: PathBuf },
    /// Validate a separation system and check it is submodular.
    SepsysCheck { file: PathBuf },
    /// Delete separations in pairs `{s, inv s}`.
    SepsysUnravel { file: PathBuf },
    /// Glue a lattice to its dual along top and bottom.
    Glue {
        #[command(flatten)]
        lattice: LatticeSource,
        #[command(flatten)]
        members: MemberArgs,
    },
    /// All separations of a small graph with their orders.
    GraphUniverse { file: PathBuf },
    /// Build, certify or search inputs for the irreducible woven set.
    Counterexample {
        #[command(subcommand)]
        action: CounterexampleAction,
    },
    /// Exhaustive enumeration.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// Export a poset as DOT (`--format dot`) or `.poset` text.
    ExportDot { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum UnravelStrategy {
    Greedy,
    Backtrack,
    /// Unique-cover deletion for a woven poset.
    Proof,
    /// Tie-broken deletion of a sublevel set of a submodular function.
    OrderInduced,
}

#[derive(Subcommand, Debug)]
enum CounterexampleAction {
    /// Build the stratified order and print its summary (or DOT).
    Build {
        graph: PathBuf,
        #[arg(long, value_name = "FORMAT")]
        graph_format: Option<String>,
    },
    /// Build and certify; exit 0 only if every certificate passes.
    Verify {
        graph: PathBuf,
        #[arg(long, value_name = "FORMAT")]
        graph_format: Option<String>,
        /// Also glue to the dual and try every pair deletion.
        #[arg(long)]
        glue: bool,
        /// Print one witness line per element of P.
        #[arg(long)]
        witnesses: bool,
    },
    /// Random regular graph of large girth by edge swaps.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
}

#[derive(Subcommand, Debug)]
enum EnumerateWhat {
    /// Woven subsets of a lattice, or the family sweep over `[n]`.
    Woven {
        #[command(flatten)]
        lattice: LatticeSource,
        /// Classify all families of subsets of an n-point set.
        #[arg(long, value_name = "N", conflicts_with_all = ["in_lattice", "subsets"])]
        families: Option<usize>,
        #[arg(long)]
        list: bool,
    },
    /// Labelled posets on n elements.
    Posets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code. Reports go to stdout, errors to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // the pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let ctx = Ctx {
        format: cli.format,
        out_path: cli.out.clone(),
    };
    match execute(&ctx, cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            if let Some(export) = outcome.export {
                if let Err(e) = emit_export(&ctx, &export, out) {
                    let _ = writeln!(err, "error: {e}");
                    return 2;
                }
            }
            outcome.code
        }
        Err(e) => {
            let code = exit_code(&e);
            if code == 1 {
                let _ = writeln!(out, "{}", witness_line(&e));
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

/// 1 for errors that are themselves a failed property with a witness,
/// 3 for broken invariants, 2 for everything else.
fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotWoven(..) | Error::NotSubmodular(..) | Error::NotSymmetricFunction(..) => 1,
        Error::InvariantViolation(_) | Error::MatchingFailure => 3,
        _ => 2,
    }
}

fn witness_line(e: &Error) -> String {
    match e {
        Error::NotWoven(a, b) | Error::NotSubmodular(a, b) | Error::NotSymmetricFunction(a, b) => {
            format!("witness {a} {b}")
        }
        _ => String::new(),
    }
}

struct Ctx {
    format: OutFormat,
    out_path: Option<PathBuf>,
}

struct Outcome {
    code: i32,
    text: String,
    /// Structure written to `--out`, or appended to stdout.
    export: Option<String>,
}

impl Outcome {
    fn verdict(holds: bool, text: String) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            text,
            export: None,
        }
    }

    fn ok(text: String) -> Self {
        Self::verdict(true, text)
    }

    fn with_export(mut self, export: String) -> Self {
        self.export = Some(export);
        self
    }
}

fn emit_export(ctx: &Ctx, export: &str, out: &mut dyn Write) -> Result<()> {
    match &ctx.out_path {
        Some(path) => std::fs::write(path, export)?,
        None => out.write_all(export.as_bytes())?,
    }
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn load_poset(path: &Path) -> Result<Poset> {
    parse_poset(&read(path)?)
}

fn load_lattice(src: &LatticeSource) -> Result<Lattice> {
    match (&src.in_lattice, src.subsets) {
        (Some(path), _) => Lattice::new(load_poset(path)?),
        (None, Some(n)) => Ok(subset_lattice(n)?.into_lattice()),
        (None, None) => Err(usage("a lattice is required (--in-lattice <file> or --subsets <n>)")),
    }
}

fn usage(msg: &str) -> Error {
    Error::Unknown {
        what: "usage",
        value: msg.to_string(),
    }
}

fn parse_members(spec: Option<&str>, n: usize) -> Result<ElemSet> {
    let mut set = ElemSet::with_capacity(n);
    let spec = spec.ok_or_else(|| usage("--members is required"))?.trim();
    if spec == "all" {
        set.insert_range(..);
        return Ok(set);
    }
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let e: Elem = tok
            .parse()
            .map_err(|_| Error::parse(0, format!("member {tok:?} is not an index")))?;
        if e >= n {
            return Err(Error::OutOfRange { elem: e, n });
        }
        set.insert(e);
    }
    Ok(set)
}

fn show_set(set: &ElemSet) -> String {
    let items: Vec<String> = set.ones().map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn parse_k(k: Option<&str>) -> Result<BigRational> {
    let k = k.ok_or_else(|| usage("--k is required"))?;
    parse_rational(k).map_err(|m| Error::parse(0, m))
}

fn poset_export(ctx: &Ctx, p: &Poset) -> String {
    match ctx.format {
        OutFormat::Dot => to_dot(p, &|e| e.to_string(), &[]),
        OutFormat::Text => write_poset(p),
    }
}

fn trace_outcome(trace: &UnravelTrace) -> Outcome {
    Outcome::verdict(trace.complete, trace.to_string())
}

fn execute(ctx: &Ctx, command: Command) -> Result<Outcome> {
    match command {
        Command::CheckLattice { file } => check_lattice(&load_poset(&file)?),
        Command::CheckDistributive { file } => {
            let p = load_poset(&file)?;
            let l = match Lattice::new(p.clone()) {
                Ok(l) => l,
                Err(Error::NotLattice(_)) => return check_lattice(&p),
                Err(e) => return Err(e),
            };
            Ok(match l.is_distributive() {
                Ok(()) => Outcome::ok("distributive: yes\n".into()),
                Err((a, b, c)) => Outcome::verdict(false, format!("distributive: no\nwitness {a} {b} {c}\n")),
            })
        }
        Command::CheckWoven {
            lattice,
            members,
            poset,
            family,
        } => {
            if let Some(path) = poset {
                let p = load_poset(&path)?;
                return Ok(match is_woven_poset(&p) {
                    Ok(()) => Outcome::ok("woven: yes\n".into()),
                    Err((a, b)) => Outcome::verdict(false, format!("woven: no\nwitness {a} {b}\n")),
                });
            }
            if let Some(path) = family {
                let f = parse_family(&read(&path)?)?;
                return Ok(match is_woven_family(&f) {
                    Ok(()) => Outcome::ok("woven: yes\n".into()),
                    Err((x, y)) => Outcome::verdict(
                        false,
                        format!("woven: no\nwitness {} {}\n", format_set(x), format_set(y)),
                    ),
                });
            }
            let l = load_lattice(&lattice)?;
            let set = parse_members(members.members.as_deref(), l.len())?;
            Ok(match is_woven_in(&l, &set) {
                Ok(()) => Outcome::ok("woven: yes\n".into()),
                Err((a, b)) => Outcome::verdict(false, format!("woven: no\nwitness {a} {b}\n")),
            })
        }
        Command::Ravel { lattice, members } => {
            let l = load_lattice(&lattice)?;
            let mut set = parse_members(members.members.as_deref(), l.len())?;
            let r = ravel_step(&l, &set)?;
            set.insert(r);
            Ok(Outcome::ok(format!("add {r}\nmembers {}\n", show_set(&set))))
        }
        Command::Unravel {
            strategy,
            lattice,
            members,
            poset,
            family,
            vals,
            k,
        } => unravel(strategy, &lattice, &members, poset, family, vals, k.as_deref()),
        Command::Tiebreak { lattice, vals } => {
            let l = load_lattice(&lattice)?;
            let rho = tie_breaker_rho(&l);
            let mut text = String::from("# rho\n");
            text.push_str(&write_values(&rho));
            if let Some(path) = vals {
                let f = parse_values(&read(&path)?, l.len())?;
                let p = perturb(&l, &f, &rho)?;
                let _ = writeln!(
                    text,
                    "# epsilon {} c {}",
                    format_rational(&p.epsilon),
                    format_rational(&p.c)
                );
                text.push_str(&write_values(&p.g));
            }
            Ok(Outcome::ok(text))
        }
        Command::Dmc { file } => {
            let p = load_poset(&file)?;
            let c = dedekind_macneille(&p)?;
            let emb: Vec<String> = c.embedding.iter().map(|e| e.to_string()).collect();
            let text = format!(
                "completion: {} elements\nembedding {}\n",
                c.lattice.len(),
                emb.join(" ")
            );
            Ok(Outcome::ok(text).with_export(poset_export(ctx, c.lattice.poset())))
        }
        Command::SepsysCheck { file } => {
            let sys = parse_separation_system(&read(&file)?)?;
            Ok(match is_submodular_system(&sys) {
                Ok(()) => Outcome::ok(format!(
                    "involution: valid\nsubmodular: yes ({} separations)\n",
                    sys.pairs().len()
                )),
                Err((a, b)) => Outcome::verdict(
                    false,
                    format!("involution: valid\nsubmodular: no\nwitness {a} {b}\n"),
                ),
            })
        }
        Command::SepsysUnravel { file } => {
            let sys = parse_separation_system(&read(&file)?)?;
            let trace = unravel_system(&sys)?;
            Ok(Outcome::verdict(trace.complete, trace.to_string()))
        }
        Command::Glue { lattice, members } => {
            let l = load_lattice(&lattice)?;
            let set = parse_members(members.members.as_deref(), l.len())?;
            let g = glue_universe(&l, &set)?;
            let sys = g.universe.system();
            let text = format!(
                "universe: {} elements\nsystem {}\n",
                g.universe.len(),
                show_set(&g.system)
            );
            let export = match ctx.format {
                OutFormat::Dot => to_dot(sys.poset(), &|e| e.to_string(), &[]),
                OutFormat::Text => write_separation_system(&sys),
            };
            Ok(Outcome::ok(text).with_export(export))
        }
        Command::GraphUniverse { file } => {
            let g = load_graph(&file, GraphFormat::from_path(&file))?;
            let gu = graph_separation_universe(&g, &EnumCaps::from_env()?)?;
            let mut text = format!("separations: {}\n", gu.separations.len());
            for (e, &(a, b)) in gu.separations.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "{e} A={} B={} inv={} order={}",
                    format_set(a),
                    format_set(b),
                    gu.universe.inv(e),
                    format_rational(gu.order.get(e))
                );
            }
            let sys = gu.universe.system();
            let export = match ctx.format {
                OutFormat::Dot => to_dot(sys.poset(), &|e| e.to_string(), &[]),
                OutFormat::Text => write_separation_system(&sys),
            };
            let outcome = Outcome::ok(text);
            Ok(if ctx.out_path.is_some() || ctx.format == OutFormat::Dot {
                outcome.with_export(export)
            } else {
                outcome
            })
        }
        Command::Counterexample { action } => counterexample(ctx, action),
        Command::Enumerate { what } => enumerate(what),
        Command::ExportDot { file } => {
            let p = load_poset(&file)?;
            let export = match ctx.format {
                OutFormat::Text => write_poset(&p),
                OutFormat::Dot => to_dot(&p, &|e| e.to_string(), &[]),
            };
            Ok(Outcome::ok(String::new()).with_export(export))
        }
    }
}

fn check_lattice(p: &Poset) -> Result<Outcome> {
    Ok(match Lattice::new(p.clone()) {
        Ok(l) => Outcome::ok(format!(
            "lattice: yes ({} elements, bottom {}, top {})\n",
            l.len(),
            l.bottom(),
            l.top()
        )),
        Err(Error::NotLattice(w)) => {
            let kind = match w.kind {
                BoundKind::Join => "join",
                BoundKind::Meet => "meet",
            };
            let bounds: Vec<String> = w.bounds.iter().map(|b| b.to_string()).collect();
            Outcome::verdict(
                false,
                format!(
                    "lattice: no\nwitness {kind} {} {} bounds {}\n",
                    w.a,
                    w.b,
                    if bounds.is_empty() { "-".into() } else { bounds.join(",") }
                ),
            )
        }
        Err(e) => return Err(e),
    })
}

#[allow(clippy::too_many_arguments)]
fn unravel(
    strategy: UnravelStrategy,
    lattice: &LatticeSource,
    members: &MemberArgs,
    poset: Option<PathBuf>,
    family: Option<PathBuf>,
    vals: Option<PathBuf>,
    k: Option<&str>,
) -> Result<Outcome> {
    match strategy {
        UnravelStrategy::Proof => {
            let path = poset.ok_or_else(|| usage("--strategy proof needs --poset <file>"))?;
            Ok(trace_outcome(&unravel_poset(&load_poset(&path)?)?))
        }
        UnravelStrategy::OrderInduced => {
            let l = load_lattice(lattice)?;
            let path = vals.ok_or_else(|| usage("--strategy order-induced needs --vals <file>"))?;
            let f: ValueTable = parse_values(&read(&path)?, l.len())?;
            Ok(trace_outcome(&unravel_order_induced(&l, &f, &parse_k(k)?)?))
        }
        UnravelStrategy::Greedy | UnravelStrategy::Backtrack => {
            let strat = if strategy == UnravelStrategy::Greedy {
                Strategy::Greedy
            } else {
                Strategy::Backtracking
            };
            let outcome = if let Some(path) = family {
                let f = parse_family(&read(&path)?)?;
                let space = f.space();
                let mut all = ElemSet::with_capacity(f.len());
                all.insert_range(..);
                let label = |e: Elem| format_set(f.sets()[e]);
                let res = Unraveller::new(&space).search(&all, strat)?;
                return Ok(search_outcome(res, &label));
            } else {
                let l = load_lattice(lattice)?;
                let set = parse_members(members.members.as_deref(), l.len())?;
                Unraveller::new(&l).search(&set, strat)?
            };
            Ok(search_outcome(outcome, &|e| e.to_string()))
        }
    }
}

fn search_outcome(res: SearchOutcome, label: &dyn Fn(Elem) -> String) -> Outcome {
    match res {
        SearchOutcome::Unravelled(t) => Outcome::verdict(t.complete, t.render(label)),
        SearchOutcome::Stuck(t) => Outcome::verdict(false, t.render(label)),
        SearchOutcome::Exhausted { visited } => Outcome::verdict(
            false,
            format!("result exhausted\nwitness no-unravelling states={visited}\n"),
        ),
    }
}

fn graph_format(path: &Path, explicit: Option<&str>) -> Result<GraphFormat> {
    match explicit {
        Some(f) => f.parse(),
        None => Ok(GraphFormat::from_path(path)),
    }
}

fn counterexample(ctx: &Ctx, action: CounterexampleAction) -> Result<Outcome> {
    match action {
        CounterexampleAction::Build { graph, graph_format: fmt } => {
            let g = load_graph(&graph, graph_format(&graph, fmt.as_deref())?)?;
            let sl = crate::counterexample::construct(&g)?;
            let lattice = match sl.lattice() {
                Ok(_) => "yes".to_string(),
                Err(w) => format!("no ({} {})", sl.label(w.a), sl.label(w.b)),
            };
            let text = format!(
                "elements: {}\nP: {}\nlattice: {lattice}\n",
                sl.len(),
                sl.woven_part().count_ones(..)
            );
            let export = match ctx.format {
                OutFormat::Dot => stratified_dot(&sl),
                OutFormat::Text => write_poset(sl.poset()),
            };
            let outcome = Outcome::ok(text);
            Ok(if ctx.out_path.is_some() || ctx.format == OutFormat::Dot {
                outcome.with_export(export)
            } else {
                outcome
            })
        }
        CounterexampleAction::Verify {
            graph,
            graph_format: fmt,
            glue,
            witnesses,
        } => {
            let g = load_graph(&graph, graph_format(&graph, fmt.as_deref())?)?;
            let report = pipeline(&g, glue)?;
            let mut text = report.render(witnesses);
            let passed = report.all_passed();
            if let Some(line) = report.report.failure_witness() {
                text.push_str(&line);
                text.push('\n');
            }
            Ok(Outcome::verdict(passed, text))
        }
        CounterexampleAction::Search {
            n,
            degree,
            girth,
            seed,
            budget,
        } => {
            let res = high_girth_search(n, degree, girth, seed, budget)?;
            let g: &Graph = res.graph();
            let measured = res.girth().map_or("infinite".to_string(), |x| x.to_string());
            let text = match &res {
                GirthSearch::Reached { .. } => format!("reached: girth {measured}\n"),
                GirthSearch::BestFound { .. } => {
                    format!("best found: girth {measured} below target {girth}\nwitness girth {measured}\n")
                }
            };
            let export = match ctx.out_path.as_deref().map(GraphFormat::from_path) {
                Some(GraphFormat::EdgeList) => write_edge_list(g),
                _ => format!("{}\n", write_graph6(g)),
            };
            Ok(Outcome::verdict(res.reached(), text).with_export(export))
        }
    }
}

fn enumerate(what: EnumerateWhat) -> Result<Outcome> {
    let caps = EnumCaps::from_env()?;
    match what {
        EnumerateWhat::Woven {
            lattice,
            families,
            list,
        } => {
            if let Some(ground) = families {
                let report = sweep_families(ground)?;
                let mut text = format!(
                    "families: {}\nwoven: {}\nunravelled: {}\nfindings: {}\n",
                    report.families,
                    report.woven,
                    report.unravelled,
                    report.findings.len()
                );
                let mut consistent = true;
                for f in &report.findings {
                    let ok = verify_finding(f);
                    consistent &= ok;
                    let _ = writeln!(text, "{} verified={ok}", f.render());
                }
                if !consistent {
                    return Err(Error::InvariantViolation("a finding failed re-verification".into()));
                }
                return Ok(Outcome::ok(text));
            }
            let l = load_lattice(&lattice)?;
            let subsets = woven_subsets(&l, &caps)?;
            let mut text = format!("woven subsets: {}\n", subsets.len());
            if list {
                for s in &subsets {
                    let _ = writeln!(text, "{}", show_set(s));
                }
            }
            Ok(Outcome::ok(text))
        }
        EnumerateWhat::Posets { n, list } => {
            let mut count = 0usize;
            let mut text = String::new();
            for p in posets(n, &caps)? {
                count += 1;
                if list {
                    text.push_str(&write_poset(&p));
                }
            }
            Ok(Outcome::ok(format!("posets: {count}\n{text}")))
        }
    }
}
