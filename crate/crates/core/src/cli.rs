//! The `plesken-lab` command line: argument parsing, dispatch, and the JSON
//! report schema (see `docs/schema.md`).
//!
//! Exit codes: 0 success, 1 a law check failed, 2 usage or parse error,
//! 3 a search guard tripped.

use std::ffi::OsString;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::expr::{parse_element, ElementJson};
use crate::functor::{
    check_full, check_functor_laws, find_faithfulness_counterexample, object_map, Convention,
    FullnessReport, LawReport, ObjectRecord, SubgroupCategory,
};
use crate::group::{build_group, FiniteGroup, GroupSpec};
use crate::hom::enumerate_homs;
use crate::plesken::{canonical_basis, structure_constants};
use crate::random::ElementSampler;

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Literal,
    Pairwise,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Literal => Convention::Literal,
            ConventionArg::Pairwise => Convention::Pairwise,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "plesken-lab", version, about = "Group algebras, Plesken Lie algebras and the functor between them")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// How the functor's object map sums over group elements.
    #[arg(long, global = true, value_enum, default_value = "literal")]
    convention: ConventionArg,
    /// Seed for commands that sample random elements.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, identity, involution count and element labels.
    Group { spec: String },
    /// Basis, dimension or structure constants of the Plesken Lie algebra.
    Plesken {
        spec: String,
        #[arg(value_enum)]
        what: PleskenWhat,
    },
    /// Lie bracket xy - yx of two group-algebra elements.
    Bracket { spec: String, x: String, y: String },
    /// All group homomorphisms G -> H.
    Homs { domain: String, codomain: String },
    /// Functor checks on the subgroup category of an ambient group.
    Functor {
        #[arg(value_enum)]
        action: FunctorAction,
        #[arg(long)]
        ambient: String,
        /// Element for `object`.
        #[arg(long)]
        element: Option<String>,
    },
    /// Seeded Lie-algebra axiom sweep (Jacobi, bilinearity, alternation).
    Verify {
        spec: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PleskenWhat {
    Basis,
    Dim,
    Sc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FunctorAction {
    Check,
    Counterexample,
    Full,
    Object,
}

/// The command as echoed in every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandEcho {
    pub verb: String,
    pub args: Vec<String>,
}

/// Envelope shared by every command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report<P> {
    pub schema_version: String,
    pub command: CommandEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<P>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPayload {
    pub group: String,
    pub order: usize,
    pub identity: String,
    pub involutions: usize,
    pub abelian: bool,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScEntry {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub re: String,
    pub im: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PleskenPayload {
    pub group: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sc: Option<Vec<ScEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketPayload {
    pub x: ElementJson,
    pub y: ElementJson,
    pub bracket: ElementJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomsPayload {
    pub domain: String,
    pub codomain: String,
    pub count: usize,
    /// Image tables as codomain labels, domain elements in index order.
    pub homs: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawPayload {
    pub ambient: String,
    pub objects: Vec<ObjectRecord>,
    pub report: LawReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullPayload {
    pub ambient: String,
    pub objects: Vec<ObjectRecord>,
    pub report: FullnessReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub source: usize,
    pub target: usize,
    pub first: Vec<String>,
    pub second: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexamplePayload {
    pub ambient: String,
    pub objects: Vec<ObjectRecord>,
    pub faithful: bool,
    pub witnesses: Vec<WitnessJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectPayload {
    pub group: String,
    pub convention: Convention,
    pub input: ElementJson,
    pub image: ElementJson,
    pub basis: Vec<String>,
    pub coords: Vec<(usize, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub group: String,
    pub seed: u64,
    pub samples: usize,
    pub jacobi_failures: usize,
    pub bilinear_failures: usize,
    pub alternating_failures: usize,
    pub all_hold: bool,
}

/// What a CLI invocation printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Exit status of a command whose payload is a law verdict.
fn law_code(holds: bool) -> i32 {
    if holds {
        EXIT_OK
    } else {
        EXIT_LAW_FAILED
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SearchTooLarge(_) => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on `args` (including the program name) without touching the
/// process's stdout or exit status.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, exit_code: EXIT_USAGE }
            } else {
                Outcome { stdout: text, stderr: String::new(), exit_code: EXIT_OK }
            };
        }
    };
    let echo = echo(&cli.command);
    match dispatch(&cli) {
        Ok(done) => {
            let exit_code = done.exit_code;
            let stdout = match cli.format {
                Format::Json => done.json(echo),
                Format::Text => done.text,
            };
            Outcome { stdout, stderr: String::new(), exit_code }
        }
        Err(e) => {
            let exit_code = exit_code_for(&e);
            let stdout = match cli.format {
                Format::Json => to_json(&Report::<()> {
                    schema_version: SCHEMA_VERSION.into(),
                    command: echo,
                    payload: None,
                    error: Some(e.to_string()),
                    exit_code,
                }),
                Format::Text => String::new(),
            };
            Outcome { stdout, stderr: format!("error: {e}\n"), exit_code }
        }
    }
}

fn echo(cmd: &Command) -> CommandEcho {
    let (verb, args): (&str, Vec<String>) = match cmd {
        Command::Group { spec } => ("group", vec![spec.clone()]),
        Command::Plesken { spec, what } => ("plesken", vec![spec.clone(), format!("{what:?}").to_lowercase()]),
        Command::Bracket { spec, x, y } => ("bracket", vec![spec.clone(), x.clone(), y.clone()]),
        Command::Homs { domain, codomain } => ("homs", vec![domain.clone(), codomain.clone()]),
        Command::Functor { action, ambient, element } => {
            let mut args = vec![format!("{action:?}").to_lowercase(), ambient.clone()];
            args.extend(element.clone());
            ("functor", args)
        }
        Command::Verify { spec, samples } => ("verify", vec![spec.clone(), samples.to_string()]),
    };
    CommandEcho { verb: verb.into(), args }
}

struct Done {
    payload: serde_json::Value,
    text: String,
    exit_code: i32,
}

impl Done {
    fn new<P: Serialize>(payload: &P, text: String, exit_code: i32) -> Self {
        let payload = serde_json::to_value(payload).expect("payload serializes");
        Done { payload, text, exit_code }
    }

    fn json(self, command: CommandEcho) -> String {
        to_json(&Report {
            schema_version: SCHEMA_VERSION.into(),
            command,
            payload: Some(self.payload),
            error: None,
            exit_code: self.exit_code,
        })
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn group_of(spec: &str) -> crate::Result<(GroupSpec, Arc<FiniteGroup>)> {
    let spec: GroupSpec = spec.parse()?;
    Ok((spec, build_group(spec)?))
}

fn dispatch(cli: &Cli) -> crate::Result<Done> {
    match &cli.command {
        Command::Group { spec } => run_group(spec),
        Command::Plesken { spec, what } => run_plesken(spec, *what),
        Command::Bracket { spec, x, y } => run_bracket(spec, x, y),
        Command::Homs { domain, codomain } => run_homs(domain, codomain),
        Command::Functor { action, ambient, element } => {
            run_functor(ambient, *action, element.as_deref(), cli.convention.into())
        }
        Command::Verify { spec, samples } => run_verify(spec, *samples, cli.seed),
    }
}

fn run_group(spec: &str) -> crate::Result<Done> {
    let (spec, g) = group_of(spec)?;
    let p = GroupPayload {
        group: spec.to_string(),
        order: g.order(),
        identity: g.label(g.identity()).to_string(),
        involutions: g.involution_count(),
        abelian: g.is_abelian(),
        elements: g.labels().to_vec(),
    };
    let text = format!(
        "{}: order {}, {} involutions (identity included), {}\nelements: {}\n",
        p.group,
        p.order,
        p.involutions,
        if p.abelian { "abelian" } else { "non-abelian" },
        p.elements.join(" ")
    );
    Ok(Done::new(&p, text, EXIT_OK))
}

fn run_plesken(spec: &str, what: PleskenWhat) -> crate::Result<Done> {
    let (spec, g) = group_of(spec)?;
    let basis = canonical_basis(&g);
    let mut p = PleskenPayload { group: spec.to_string(), dim: basis.dim(), basis: None, sc: None };
    let mut text = format!("dim L({spec}) = {}\n", p.dim);
    if what != PleskenWhat::Dim {
        p.basis = Some(basis.labels());
        text.push_str(&format!("basis hats of: {}\n", basis.labels().join(" ")));
    }
    if what == PleskenWhat::Sc {
        let sc = structure_constants(&basis);
        let entries: Vec<ScEntry> = sc
            .nonzero()
            .into_iter()
            .map(|(k, l, m, c)| {
                let (re, im) = c.to_parts();
                text.push_str(&format!("[e{k}, e{l}] has {c} on e{m}\n"));
                ScEntry { k, l, m, re, im }
            })
            .collect();
        p.sc = Some(entries);
    }
    Ok(Done::new(&p, text, EXIT_OK))
}

fn run_bracket(spec: &str, x: &str, y: &str) -> crate::Result<Done> {
    let (_, g) = group_of(spec)?;
    let x = parse_element(&g, x)?;
    let y = parse_element(&g, y)?;
    let b = x.lie_bracket(&y)?;
    let text = format!("[{x}, {y}] = {b}\n");
    let p = BracketPayload {
        x: ElementJson::from_element(&x),
        y: ElementJson::from_element(&y),
        bracket: ElementJson::from_element(&b),
    };
    Ok(Done::new(&p, text, EXIT_OK))
}

fn run_homs(domain: &str, codomain: &str) -> crate::Result<Done> {
    let (ds, g) = group_of(domain)?;
    let (cs, h) = group_of(codomain)?;
    let homs = enumerate_homs(&g, &h)?;
    let tables: Vec<Vec<String>> = homs
        .iter()
        .map(|f| f.image().iter().map(|&y| h.label(y).to_string()).collect())
        .collect();
    let mut text = format!("{} homomorphisms {ds} -> {cs}\n", tables.len());
    for t in &tables {
        let pairs: Vec<String> = g.labels().iter().zip(t).map(|(a, b)| format!("{a}->{b}")).collect();
        text.push_str(&pairs.join(" "));
        text.push('\n');
    }
    let p = HomsPayload { domain: ds.to_string(), codomain: cs.to_string(), count: tables.len(), homs: tables };
    Ok(Done::new(&p, text, EXIT_OK))
}

fn object_records(c: &SubgroupCategory) -> Vec<ObjectRecord> {
    c.objects()
        .iter()
        .enumerate()
        .map(|(index, o)| ObjectRecord {
            index,
            order: o.group().order(),
            elements: o.group().labels().to_vec(),
            plesken_dim: o.basis().dim(),
            basis: o.basis().labels(),
        })
        .collect()
}

fn run_functor(
    ambient: &str,
    action: FunctorAction,
    element: Option<&str>,
    convention: Convention,
) -> crate::Result<Done> {
    let (spec, g) = group_of(ambient)?;
    if action == FunctorAction::Object {
        let text = element.ok_or_else(|| Error::Parse("functor object needs --element".into()))?;
        return run_object(spec, &g, text, convention);
    }
    let cat = SubgroupCategory::new(&g)?;
    let objects = object_records(&cat);
    let ambient = spec.to_string();
    match action {
        FunctorAction::Check => {
            let report = check_functor_laws(&cat)?;
            let checked: usize = report.composition.iter().map(|l| l.pairs_checked).sum();
            let text = format!(
                "{ambient}: {} objects, {} morphisms, {checked} composable pairs; laws {}\n",
                objects.len(),
                cat.morphism_count(),
                if report.all_hold { "hold" } else { "FAIL" }
            );
            let code = law_code(report.all_hold);
            Ok(Done::new(&LawPayload { ambient, objects, report }, text, code))
        }
        FunctorAction::Full => {
            let report = check_full(&cat)?;
            let text = format!(
                "{ambient}: {} object pairs; full = {}\n",
                report.pairs.len(),
                report.full
            );
            let code = law_code(report.full);
            Ok(Done::new(&FullPayload { ambient, objects, report }, text, code))
        }
        FunctorAction::Counterexample => {
            let found = find_faithfulness_counterexample(&cat)?;
            let labels = |obj: usize, image: &[usize]| -> Vec<String> {
                let target = cat.objects()[obj].group();
                image.iter().map(|&y| target.label(y).to_string()).collect()
            };
            let witnesses: Vec<WitnessJson> = found
                .iter()
                .map(|w| WitnessJson {
                    source: w.source,
                    target: w.target,
                    first: labels(w.target, &w.first),
                    second: labels(w.target, &w.second),
                })
                .collect();
            let mut text = format!("{ambient}: {} faithfulness counterexamples\n", witnesses.len());
            for w in &witnesses {
                text.push_str(&format!(
                    "H{} -> H{}: [{}] and [{}] have the same image\n",
                    w.source,
                    w.target,
                    w.first.join(" "),
                    w.second.join(" ")
                ));
            }
            let p = CounterexamplePayload { ambient, objects, faithful: witnesses.is_empty(), witnesses };
            Ok(Done::new(&p, text, EXIT_OK))
        }
        FunctorAction::Object => unreachable!("handled above"),
    }
}

fn run_object(spec: GroupSpec, g: &Arc<FiniteGroup>, text: &str, convention: Convention) -> crate::Result<Done> {
    let x = parse_element(g, text)?;
    let image = object_map(&x, convention);
    let basis = canonical_basis(g);
    let coords = basis
        .reduce(&image)?
        .coords()
        .map(|(k, c)| {
            let (re, im) = c.to_parts();
            (k, re, im)
        })
        .collect();
    let out = format!("T({x}) = {image}\n");
    let p = ObjectPayload {
        group: spec.to_string(),
        convention,
        input: ElementJson::from_element(&x),
        image: ElementJson::from_element(&image),
        basis: basis.labels(),
        coords,
    };
    Ok(Done::new(&p, out, EXIT_OK))
}

/// Counts failures of Jacobi, bilinearity in the first slot, and
/// alternation over `samples` seeded draws.
pub fn lie_axiom_sweep(g: &Arc<FiniteGroup>, samples: usize, seed: u64) -> crate::Result<(usize, usize, usize)> {
    let mut s = ElementSampler::new(seed);
    let (mut jac, mut bil, mut alt) = (0, 0, 0);
    for _ in 0..samples {
        let (x, y, z) = (s.element(g), s.element(g), s.element(g));
        let (a, b) = (s.scalar(), s.scalar());
        let j = x
            .lie_bracket(&y.lie_bracket(&z)?)?
            .checked_add(&y.lie_bracket(&z.lie_bracket(&x)?)?)?
            .checked_add(&z.lie_bracket(&x.lie_bracket(&y)?)?)?;
        if !j.is_zero() {
            jac += 1;
        }
        let lhs = x.scale(&a).checked_add(&y.scale(&b))?.lie_bracket(&z)?;
        let rhs = x.lie_bracket(&z)?.scale(&a).checked_add(&y.lie_bracket(&z)?.scale(&b))?;
        let lhs2 = z.lie_bracket(&x.scale(&a).checked_add(&y.scale(&b))?)?;
        let rhs2 = z.lie_bracket(&x)?.scale(&a).checked_add(&z.lie_bracket(&y)?.scale(&b))?;
        if lhs != rhs || lhs2 != rhs2 {
            bil += 1;
        }
        if !x.lie_bracket(&x)?.is_zero() {
            alt += 1;
        }
    }
    Ok((jac, bil, alt))
}

fn run_verify(spec: &str, samples: usize, seed: u64) -> crate::Result<Done> {
    let (spec, g) = group_of(spec)?;
    let (jacobi_failures, bilinear_failures, alternating_failures) = lie_axiom_sweep(&g, samples, seed)?;
    let all_hold = jacobi_failures + bilinear_failures + alternating_failures == 0;
    let p = VerifyPayload {
        group: spec.to_string(),
        seed,
        samples,
        jacobi_failures,
        bilinear_failures,
        alternating_failures,
        all_hold,
    };
    let text = format!(
        "{spec}: {samples} samples (seed {seed}); Jacobi {jacobi_failures}, bilinear {bilinear_failures}, alternating {alternating_failures} failures\n"
    );
    Ok(Done::new(&p, text, law_code(all_hold)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("plesken-lab").chain(args.iter().copied()))
    }

    #[test]
    fn group_command() {
        let out = run_args(&["group", "k4"]);
        assert_eq!(out.exit_code, 0);
        let r: Report<GroupPayload> = serde_json::from_str(&out.stdout).unwrap();
        let p = r.payload.unwrap();
        assert_eq!((p.order, p.involutions), (4, 4));
        assert_eq!(r.command.verb, "group");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["group", "H4"]).exit_code, EXIT_USAGE);
        assert_eq!(run_args(&["group"]).exit_code, EXIT_USAGE);
        assert_eq!(run_args(&["group", "C3", "--bogus"]).exit_code, EXIT_USAGE);
        assert_eq!(run_args(&["bracket", "C3", "b", "a"]).exit_code, EXIT_USAGE);
        assert_eq!(run_args(&["functor", "object", "--ambient", "C3"]).exit_code, EXIT_USAGE);
        let out = run_args(&["plesken", "X9", "dim"]);
        let r: Report<PleskenPayload> = serde_json::from_str(&out.stdout).unwrap();
        assert!(r.payload.is_none());
        assert!(r.error.is_some());
    }

    #[test]
    fn failed_verdict_exits_1() {
        assert_eq!(law_code(true), EXIT_OK);
        assert_eq!(law_code(false), EXIT_LAW_FAILED);
    }

    #[test]
    fn guard_exits_3() {
        let out = run_args(&["functor", "check", "--ambient", "S5"]);
        assert_eq!(out.exit_code, EXIT_GUARD);
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = run_args(&["--help"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("plesken"));
    }

    #[test]
    fn text_mode() {
        let out = run_args(&["--format", "text", "plesken", "S3", "basis"]);
        assert_eq!(out.stdout, "dim L(S3) = 1\nbasis hats of: (123)\n");
    }

    #[test]
    fn object_conventions() {
        let lit = run_args(&["functor", "object", "--ambient", "C3", "--element", "a"]);
        let r: Report<ObjectPayload> = serde_json::from_str(&lit.stdout).unwrap();
        assert_eq!(r.payload.unwrap().coords, vec![(0, "2".to_string(), "0".to_string())]);
        let pw = run_args(&["--convention", "pairwise", "functor", "object", "--ambient", "C3", "--element", "a"]);
        let r: Report<ObjectPayload> = serde_json::from_str(&pw.stdout).unwrap();
        assert_eq!(r.payload.unwrap().coords, vec![(0, "1".to_string(), "0".to_string())]);
    }
}
