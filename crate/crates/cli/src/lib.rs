//! The `pathtt` command line: workspace parsing, dispatch and the exit-code
//! contract (1 parse, 2 precondition, 3 verification failure).

mod format;
pub mod workspace;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pathtt::quiver::VertexSet;
use pathtt::rep::{projective_resolution, rigidity_report};
use pathtt::tstruct::{aisle_membership, check_filtration_system, filtration_from_objects, FiltrationSystem};
use pathtt::tt::{compact_support, ideal_generators, ideal_membership, spc_enumerate, QSupport};
use pathtt::verify::run_suite;
use pathtt::{
    Error, Integers, IntegersLocalized, IntegersMod, PolyOverPrimeField, PrimeField, Quiver, Rationals, Ring, RingDesc,
};
use serde_json::{json, Value};

use workspace::{RawWorkspace, Workspace};

#[derive(Debug, Parser)]
#[command(name = "pathtt", version, about = "Supports, spectra and aisles for path algebras over PIDs")]
pub struct Cli {
    /// Workspace file (YAML) with the ring, quiver and named objects.
    #[arg(short, long, global = true)]
    pub workspace: Option<PathBuf>,
    /// Print a JSON report instead of the text one.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate Spec(R) x Q_0 over the prime window.
    Spectrum {
        #[arg(long, default_value_t = 10)]
        bound: u64,
        /// Print the poset in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// Support table of a compact object.
    Support { name: String },
    /// Generators of a thick tensor-ideal and membership of workspace objects.
    Ideal(IdealArgs),
    /// Tensor-aisles: the filtration generated by objects, or membership.
    Aisle(AisleArgs),
    /// Probe-set rigidity of an object, resolving it first if needed.
    Rigidity { name: String },
    /// Check a filtration system given by comma-separated vertex lists.
    Filtsys {
        #[arg(required = true)]
        parts: Vec<String>,
    },
    /// Run the seeded invariant suite.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct IdealArgs {
    /// The ideal generated by this object.
    #[arg(long)]
    pub from: Option<String>,
    /// A named support or inline `1=all;2=[2,3]`.
    #[arg(long)]
    pub set: Option<String>,
}

#[derive(Debug, Args)]
pub struct AisleArgs {
    /// Objects generating the aisle, comma separated or repeated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["member", "filt"], required_unless_present = "member")]
    pub gen: Vec<String>,
    /// Object whose membership is tested.
    #[arg(long, requires = "filt")]
    pub member: Option<String>,
    /// A named filtration or a YAML file holding one.
    #[arg(long)]
    pub filt: Option<String>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Yaml(String),
    Core(Error),
    VerifyFailed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Io(_) => "Io",
            CliError::Yaml(_) => "Yaml",
            CliError::Core(e) => e.code(),
            CliError::VerifyFailed(_) => "VerifyFailed",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Yaml(_) => 1,
            CliError::VerifyFailed(_) => 3,
            CliError::Core(e) => match e {
                Error::NotPerfect(_)
                | Error::NotDerivable(_)
                | Error::NonRegularRing(_)
                | Error::NotAField(_)
                | Error::RingMismatch(_)
                | Error::MonotonicityViolation(_)
                | Error::UniverseNotClosed(_)
                | Error::UnsupportedQuiver(_) => 2,
                _ => 1,
            },
        }
    }

    /// The single diagnostic line, `ERR <code>: message`.
    pub fn diagnostic(&self) -> String {
        let msg = match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Yaml(m) | CliError::VerifyFailed(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        };
        format!("ERR {}: {}", self.code(), msg.replace('\n', " "))
    }
}

/// A finished command: the text report, its JSON mirror, and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub exit: i32,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, exit: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if let Command::Verify { seed, cases } = cli.command {
        return verify(seed, cases);
    }
    let path = cli.workspace.as_ref().ok_or_else(|| CliError::Usage("this command needs --workspace FILE".into()))?;
    let raw = RawWorkspace::load(path)?;
    match raw.ring_desc()? {
        RingDesc::Integers => run_typed(Integers, &raw, &cli.command),
        RingDesc::Rationals => run_typed(Rationals, &raw, &cli.command),
        RingDesc::PrimeField(p) => run_typed(PrimeField::new(p)?, &raw, &cli.command),
        RingDesc::IntegersLocalized(p) => run_typed(IntegersLocalized::new(p)?, &raw, &cli.command),
        RingDesc::IntegersMod(n) => run_typed(IntegersMod::new(n)?, &raw, &cli.command),
        RingDesc::PolyOverPrimeField(p) => run_typed(PolyOverPrimeField::new(p)?, &raw, &cli.command),
    }
}

fn run_typed<R: Ring>(ring: R, raw: &RawWorkspace, cmd: &Command) -> Result<Outcome, CliError> {
    let ws = Workspace::from_raw(ring, raw)?;
    match cmd {
        Command::Spectrum { bound, dot } => spectrum(&ws, *bound, *dot),
        Command::Support { name } => support(&ws, name),
        Command::Ideal(a) => match (&a.from, &a.set) {
            (Some(name), _) => {
                let s = compact_support(ws.object(name)?)?;
                ideal(&ws, &format!("ideal generated by {name}"), &s)
            }
            (None, Some(spec)) => ideal(&ws, &format!("ideal {spec}"), &ws.support(spec)?),
            (None, None) => Err(CliError::Usage("ideal needs --from or --set".into())),
        },
        Command::Aisle(a) => match (&a.member, &a.filt) {
            (Some(name), Some(f)) => aisle_member(&ws, name, f),
            _ => aisle_generated(&ws, &a.gen),
        },
        Command::Rigidity { name } => rigidity(&ws, name),
        Command::Filtsys { parts } => filtsys(&ws.quiver, parts),
        Command::Verify { .. } => unreachable!("handled before loading a workspace"),
    }
}

fn support_json<R: Ring>(q: &Quiver, s: &QSupport<R>) -> Value {
    let m: serde_json::Map<String, Value> =
        (0..q.vertex_count()).map(|v| (q.vertex_name(v).to_string(), json!(s.part(v).to_string()))).collect();
    Value::Object(m)
}

fn spectrum<R: Ring>(ws: &Workspace<R>, bound: u64, dot: bool) -> Result<Outcome, CliError> {
    let spc = spc_enumerate(&ws.ring, &ws.quiver, bound)?;
    let text = if dot { spc.to_dot() } else { spc.table() };
    let labels: Vec<String> = (0..spc.len()).map(|k| spc.label(k)).collect();
    let covers: Vec<Value> = spc.covers().into_iter().map(|(a, b)| json!([labels[a], labels[b]])).collect();
    let json = json!({
        "ring": ws.ring.descriptor().to_string(),
        "bound": bound,
        "points": labels,
        "covers": covers,
        "certified": spc.detecting_table_certified(),
    });
    Ok(Outcome::ok(text, json))
}

fn support<R: Ring>(ws: &Workspace<R>, name: &str) -> Result<Outcome, CliError> {
    let s = compact_support(ws.object(name)?)?;
    let text = format!("support of {name}\n{}", s.table(&ws.quiver));
    Ok(Outcome::ok(text, json!({ "object": name, "support": support_json(&ws.quiver, &s) })))
}

/// Names of the generators `ideal_generators` returns, in its order.
fn generator_names<R: Ring>(q: &Quiver, s: &QSupport<R>) -> Vec<String> {
    let mut out = Vec::new();
    for v in 0..q.vertex_count() {
        let part = s.part(v);
        match part.points() {
            None => out.push(format!("U({})", q.vertex_name(v))),
            Some(pts) => {
                for g in pts {
                    out.push(format!("K(({})) at {}", part.ring().format_elem(g), q.vertex_name(v)));
                }
            }
        }
    }
    out
}

fn ideal<R: Ring>(ws: &Workspace<R>, title: &str, s: &QSupport<R>) -> Result<Outcome, CliError> {
    let gens = ideal_generators(&ws.quiver, s)?;
    let names = generator_names(&ws.quiver, s);
    debug_assert_eq!(gens.len(), names.len());
    let mut text = format!("{title}\nsupport:\n");
    for line in s.table(&ws.quiver).lines() {
        text.push_str(&format!("  {line}\n"));
    }
    text.push_str("generators:\n");
    for n in &names {
        text.push_str(&format!("  {n}\n"));
    }
    text.push_str("members:\n");
    let mut members = serde_json::Map::new();
    for (name, x) in &ws.objects {
        let verdict = match ideal_membership(x, s) {
            Ok(true) => "yes".to_string(),
            Ok(false) => "no".to_string(),
            Err(e) => format!("n/a ({})", e.code()),
        };
        text.push_str(&format!("  {name}: {verdict}\n"));
        members.insert(name.clone(), json!(verdict));
    }
    let json = json!({
        "support": support_json(&ws.quiver, s),
        "generators": names,
        "members": members,
    });
    Ok(Outcome::ok(text, json))
}

fn filtration_json<R: Ring>(q: &Quiver, f: &pathtt::tstruct::Filtration<R>) -> Value {
    let jumps: Vec<Value> = f.jumps().iter().map(|(n, s)| json!({ "from": n, "value": support_json(q, s) })).collect();
    json!({ "below": support_json(q, f.tail_low()), "jumps": jumps })
}

fn aisle_generated<R: Ring>(ws: &Workspace<R>, names: &[String]) -> Result<Outcome, CliError> {
    let xs = names.iter().map(|n| ws.object(n).cloned()).collect::<Result<Vec<_>, _>>()?;
    let f = filtration_from_objects(&ws.ring, &ws.quiver, &xs)?;
    let text = format!("aisle generated by {}\n{}", names.join(", "), f.table(&ws.quiver));
    Ok(Outcome::ok(text, json!({ "generators": names, "filtration": filtration_json(&ws.quiver, &f) })))
}

fn aisle_member<R: Ring>(ws: &Workspace<R>, name: &str, filt: &str) -> Result<Outcome, CliError> {
    let f = ws.filtration(filt)?;
    let inside = aisle_membership(ws.object(name)?, &f)?;
    let verdict = if inside { "IN AISLE" } else { "NOT IN AISLE" };
    Ok(Outcome::ok(format!("{name}: {verdict}\n"), json!({ "object": name, "filtration": filt, "member": inside })))
}

fn rigidity<R: Ring>(ws: &Workspace<R>, name: &str) -> Result<Outcome, CliError> {
    let x = ws.object(name)?;
    let resolved = !x.is_perfect();
    let x = if resolved { projective_resolution(x)? } else { x.clone() };
    let r = rigidity_report(&x)?;
    let mut text = format!("{name}: {}\n", if r.rigid { "RIGID" } else { "NOT RIGID" });
    if resolved {
        text.push_str("(tested on a projective resolution)\n");
    }
    text.push_str("probes:\n");
    for (p, ok) in &r.probes {
        text.push_str(&format!("  {p}: {}\n", if *ok { "iso" } else { "not iso" }));
    }
    text.push_str("left chom(X, U) (x) X:\n");
    text.push_str(&format::homology_table(&r.left));
    text.push_str("right chom(X, X):\n");
    text.push_str(&format::homology_table(&r.right));
    let probes: serde_json::Map<String, Value> = r.probes.iter().map(|(p, ok)| (p.clone(), json!(ok))).collect();
    let json = json!({
        "object": name,
        "rigid": r.rigid,
        "resolved": resolved,
        "probes": probes,
        "left": format::homology_json(&r.left),
        "right": format::homology_json(&r.right),
    });
    Ok(Outcome::ok(text, json))
}

fn filtsys(q: &Quiver, parts: &[String]) -> Result<Outcome, CliError> {
    let sets = parts
        .iter()
        .map(|p| {
            let names: Vec<&str> = p.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            VertexSet::from_names(q, &names)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let c = FiltrationSystem::new(sets);
    let r = check_filtration_system(&c, q);
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let label = |k: usize| format!("{{{}}}", c.parts[k].names(q).join(","));
    let mut text = format!("filtration system: {}\n", yes_no(r.is_system));
    text.push_str(&format!("dynkin support: {}\n", yes_no(r.is_dynkin_support)));
    if let Some(ord) = &r.ordering {
        let labels: Vec<String> = ord.iter().map(|&k| label(k)).collect();
        text.push_str(&format!("ordering: {}\n", labels.join(" < ")));
    }
    for (k, d) in r.dynkin.iter().enumerate() {
        text.push_str(&format!("  part {}: dynkin {}\n", label(k), yes_no(*d)));
    }
    if let Some(f) = &r.failure {
        text.push_str(&format!("reason: {f}\n"));
    }
    let json = json!({
        "parts": (0..c.parts.len()).map(|k| c.parts[k].names(q)).collect::<Vec<_>>(),
        "is_system": r.is_system,
        "is_dynkin_support": r.is_dynkin_support,
        "ordering": r.ordering,
        "dynkin": r.dynkin,
        "failure": r.failure,
    });
    Ok(Outcome::ok(text, json))
}

fn verify(seed: u64, cases: usize) -> Result<Outcome, CliError> {
    let report = run_suite(seed, cases);
    let results: Vec<Value> = report
        .results
        .iter()
        .map(|r| json!({ "id": r.id(), "passed": r.passed(), "failure": r.failure }))
        .collect();
    let json = json!({ "seed": seed, "cases": cases, "passed": report.all_passed(), "results": results });
    let exit = if report.all_passed() { 0 } else { 3 };
    Ok(Outcome { text: report.to_text(), json, exit })
}
