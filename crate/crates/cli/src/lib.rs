//! Command-line front end for `garside-core`.
//!
//! [`run`] parses an argument vector and returns the exit status with the
//! captured output, so tests and the fixture verifier drive exactly the code
//! the binary runs.

pub mod fixtures;

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use garside_core::families::{
    check_compatibility, close_under_right_divisors, close_under_right_mcm, delta_structure, is_garside_family,
    is_solid, smallest_garside_family,
};
use garside_core::germ::{EmbeddingVerdict, GermTable};
use garside_core::normal::{canonical_length, delta_form, normal_decomposition, symmetric_normal_word, Family};
use garside_core::presentation::parse_presentation;
use garside_core::rc::RcSystem;
use garside_core::reversing::{
    cube_check, left_reverse_with, right_reverse_with, Completeness, DivergenceEvidence, ReverseOptions, Status,
};
use garside_core::{Element, Error, Monoid, MonoidOptions, Presentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "garside", version, about = "Reversing, normal forms and Garside families for presented monoids")]
pub struct Cli {
    /// Step budget for reversing
    #[arg(long, global = true, default_value_t = 10_000)]
    pub max_steps: usize,
    /// Length cap for enumerations
    #[arg(long, global = true, default_value_t = 24)]
    pub max_length: usize,
    /// Machine-readable output
    #[arg(long, global = true)]
    pub json: bool,
    /// Print reversing steps
    #[arg(long, global = true)]
    pub trace: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a presentation and print it back
    Parse { file: String },
    /// Classification flags
    Classify { file: String },
    /// Reverse a signed word
    Reverse {
        file: String,
        word: String,
        /// Left reversing instead of right reversing
        #[arg(long)]
        left: bool,
    },
    /// Syntactic right-complement table
    Theta { file: String },
    /// Cube condition on a triple, or on every generator triple
    Cube { file: String, words: Vec<String> },
    /// Completeness of right reversing
    Complete { file: String },
    /// Equality of two positive words
    Eq { file: String, u: String, v: String },
    /// Left-divisibility u ⊑ v (right-divisibility with --right)
    Div {
        file: String,
        u: String,
        v: String,
        #[arg(long)]
        right: bool,
    },
    /// Right-lcm
    Lcm { file: String, u: String, v: String },
    /// Left-gcd (right-gcd with --right)
    Gcd {
        file: String,
        u: String,
        v: String,
        #[arg(long)]
        right: bool,
    },
    /// Right-mcms
    Mcm {
        file: String,
        u: String,
        v: String,
        /// Weight bound for the search
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Atoms
    Atoms { file: String },
    /// Normal decomposition of a positive word
    Nf(FamilyWord),
    /// Symmetric normal form of a signed word
    Symnf(FamilyWord),
    /// Canonical length of a signed word with respect to Δ
    Canlen {
        file: String,
        #[arg(long)]
        delta: String,
        word: String,
    },
    /// Garside families
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Solidity of a family
    Solid {
        file: String,
        #[arg(long)]
        family: String,
    },
    /// Compatibility of a submonoid with a family
    Compat {
        file: String,
        /// Generators of the submonoid, comma-separated words
        #[arg(long)]
        sub: String,
        #[arg(long)]
        family: String,
        /// Use S♯ instead of S
        #[arg(long)]
        sharp: bool,
    },
    /// Germ tables
    #[command(subcommand)]
    Germ(GermCommand),
    /// RC-systems
    #[command(subcommand)]
    Rc(RcCommand),
    /// Embedded fixtures
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

#[derive(Debug, Args)]
pub struct FamilyWord {
    pub file: String,
    /// `auto`, `smallest`, or comma-separated words
    #[arg(long, default_value = "auto")]
    pub family: String,
    pub word: String,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Smallest Garside family
    Smallest {
        file: String,
        /// Print only the size
        #[arg(long)]
        count: bool,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Garside-family test
    Check {
        file: String,
        #[arg(long)]
        family: String,
    },
    /// Closure under right-divisors (and right-mcms with --mcm)
    Close {
        file: String,
        words: Vec<String>,
        #[arg(long)]
        mcm: bool,
    },
    /// Δ-structure: divisors, ∂ and φ
    Delta { file: String, word: String },
}

#[derive(Debug, Subcommand)]
pub enum GermCommand {
    /// Germ axioms and flags
    Check { file: String },
    /// Presentation of the monoid of the germ
    Mon {
        file: String,
        /// Also list the atoms of the monoid
        #[arg(long)]
        atoms: bool,
    },
    /// Injectivity of the germ into its monoid
    Embed {
        file: String,
        #[arg(long, default_value_t = 24)]
        bound: usize,
    },
    /// Subgerm generated by some elements
    Sub { file: String, elements: Vec<String> },
    /// Normality of a pair through the J-family
    Normal { file: String, s1: String, s2: String },
}

#[derive(Debug, Subcommand)]
pub enum RcCommand {
    /// RC law and bijectivity
    Check { file: String },
    /// Structure monoid presentation
    Mon { file: String },
    /// Δ_I for a subset I
    Delta { file: String, elements: Vec<String> },
    /// ν on an exponent vector
    Nu { file: String, exponents: Vec<usize> },
    /// Closure of a subset under ◁
    Parabolic { file: String, elements: Vec<String> },
}

#[derive(Debug, Subcommand)]
pub enum FixturesCommand {
    /// List embedded fixtures
    List,
    /// Run fixture expectations
    Verify { filter: Option<String> },
    /// Print a fixture's file
    Show { name: String },
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command line (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = String::new();
    match execute(&cli, &mut out) {
        Ok(code) => Outcome { code, stdout: out, stderr: String::new() },
        Err(e) => Outcome {
            code: e.code,
            stdout: out,
            stderr: format!("error: {}\n", e.message),
        },
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::UndeclaredGenerator(_)
            | Error::UndeclaredObject(_)
            | Error::Mismatch(_)
            | Error::Malformed(_)
            | Error::Invalid(_)
            | Error::ZeroBudget => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::fmt::Error> for Failure {
    fn from(e: std::fmt::Error) -> Self {
        Failure { code: EXIT_FAILURE, message: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: msg.into() }
}

fn failure(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_FAILURE, message: msg.into() }
}

type Res<T> = std::result::Result<T, Failure>;

/// Reads `name` from disk, or from the embedded fixtures when no such file
/// exists (a directory prefix and extension are ignored for the lookup).
pub fn load_text(name: &str) -> Result<String, String> {
    if Path::new(name).is_file() {
        return std::fs::read_to_string(name).map_err(|e| format!("{name}: {e}"));
    }
    let base = Path::new(name).file_name().and_then(|f| f.to_str()).unwrap_or(name);
    let stem = base.split('.').next().unwrap_or(base);
    fixtures::find(stem)
        .map(|f| f.text())
        .ok_or_else(|| format!("no file or fixture named `{name}`"))
}

fn read(name: &str) -> Res<String> {
    load_text(name).map_err(usage)
}

fn load_presentation(name: &str) -> Res<Presentation> {
    Ok(parse_presentation(&read(name)?)?)
}

fn load_monoid(cli: &Cli, name: &str) -> Res<Monoid> {
    Ok(Monoid::with_options(load_presentation(name)?, options(cli)))
}

fn options(cli: &Cli) -> MonoidOptions {
    MonoidOptions {
        max_steps: cli.max_steps,
        max_length: cli.max_length,
        ..Default::default()
    }
}

fn words_list(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|w| !w.is_empty()).collect()
}

fn family(m: &Monoid, spec: &str) -> Res<Family> {
    match spec.trim() {
        "auto" | "smallest" => {
            let r = smallest_garside_family(m, None)?;
            if r.bound_hit {
                return Err(failure("smallest family not closed within the bound"));
            }
            Ok(r.closed)
        }
        s => Ok(Family::parse(m, &words_list(s))?),
    }
}

fn set(m: &Monoid, xs: &[Element]) -> String {
    format!("{{{}}}", xs.iter().map(|x| m.show(x)).collect::<Vec<_>>().join(", "))
}

fn words_json(m: &Monoid, xs: &[Element]) -> Value {
    json!(xs.iter().map(|x| m.show(x)).collect::<Vec<_>>())
}

fn emit(cli: &Cli, out: &mut String, text: impl std::fmt::Display, value: Value) -> Res<()> {
    if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"))?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut String) -> Res<i32> {
    match &cli.command {
        Command::Parse { file } => {
            let p = load_presentation(file)?;
            let v = json!({
                "generators": p.gens().iter().map(|g| g.name.clone()).collect::<Vec<_>>(),
                "relations": p.relations().iter()
                    .map(|r| format!("{} = {}", p.format_word(&r.lhs), p.format_word(&r.rhs)))
                    .collect::<Vec<_>>(),
                "objects": p.objects(),
            });
            emit(cli, out, p.to_text().trim_end(), v)?;
        }
        Command::Classify { file } => {
            let p = load_presentation(file)?;
            let c = p.classification();
            let text = format!(
                "complemented: {}\nhomogeneous: {}\ntriangular: {}\nlengthReducingConfluent: {}",
                c.complemented, c.homogeneous, c.triangular, c.length_reducing_confluent
            );
            emit(cli, out, text, serde_json::to_value(c).expect("serializable"))?;
        }
        Command::Reverse { file, word, left } => {
            let p = load_presentation(file)?;
            let w = p.parse_word(word)?;
            let opts = ReverseOptions {
                trace: cli.trace,
                ..ReverseOptions::budget(cli.max_steps)
            };
            let r = if *left { left_reverse_with(&p, &w, &opts)? } else { right_reverse_with(&p, &w, &opts)? };
            if let Some(trace) = &r.trace {
                if !cli.json {
                    for (i, s) in trace.iter().enumerate() {
                        writeln!(out, "{:>4}  @{}  {} -> {}", i + 1, s.position, s.pair_reversed, s.replacement)?;
                    }
                }
            }
            let evidence = r.divergence.as_ref().map(|d| match d {
                DivergenceEvidence::Recurrence { earlier, later } => {
                    format!("configuration at step {earlier} recurs inside step {later}")
                }
                DivergenceEvidence::Pattern { relation } => format!("self-reproducing pattern from relation {}", relation + 1),
            });
            let v = json!({
                "status": r.status,
                "word": p.format_signed(&r.word),
                "steps": r.steps,
                "loopDetected": r.loop_detected(),
                "evidence": evidence,
                "trace": r.trace,
                "alternatives": r.alternatives.iter().map(|a| p.format_signed(a)).collect::<Vec<_>>(),
            });
            match r.status {
                Status::Terminated => {
                    let text = if r.alternatives.len() > 1 {
                        r.alternatives.iter().map(|a| p.format_signed(a)).collect::<Vec<_>>().join("\n")
                    } else {
                        p.format_signed(&r.word)
                    };
                    emit(cli, out, text, v)?;
                }
                Status::Stuck => {
                    emit(cli, out, format!("stuck: {}", p.format_signed(&r.word)), v)?;
                }
                Status::Diverged => {
                    let text = match &evidence {
                        Some(e) => format!("diverged after {} steps (loop detected: {e})", r.steps),
                        None => format!("diverged after {} steps (budget exhausted)", r.steps),
                    };
                    emit(cli, out, text, v)?;
                    return Ok(EXIT_FAILURE);
                }
            }
        }
        Command::Theta { file } => {
            let p = load_presentation(file)?;
            let theta = garside_core::reversing::build_theta(&p)?;
            let mut lines = Vec::new();
            let mut map = serde_json::Map::new();
            for (s, t) in theta.pairs() {
                let v = p.format_word(theta.get(s, t).expect("listed pair"));
                lines.push(format!("θ({}, {}) = {v}", p.gen_name(s), p.gen_name(t)));
                map.insert(format!("{},{}", p.gen_name(s), p.gen_name(t)), json!(v));
            }
            emit(cli, out, lines.join("\n"), Value::Object(map))?;
        }
        Command::Cube { file, words } => {
            let m = load_monoid(cli, file)?;
            let p = m.presentation();
            let triples: Vec<[Vec<usize>; 3]> = match words.len() {
                0 => {
                    let n = p.num_gens();
                    (0..n)
                        .flat_map(|r| (0..n).flat_map(move |s| (0..n).map(move |t| [vec![r], vec![s], vec![t]])))
                        .filter(|[r, s, t]| {
                            p.source_of(r[0]) == p.source_of(s[0]) && p.source_of(r[0]) == p.source_of(t[0])
                        })
                        .collect()
                }
                3 => vec![[p.positive(&words[0])?, p.positive(&words[1])?, p.positive(&words[2])?]],
                _ => return Err(usage("cube takes no word or three words")),
            };
            let mut failures = Vec::new();
            for [u, v, w] in &triples {
                let verdict = cube_check(p, u, v, w, &m, cli.max_steps)?;
                if !verdict.holds {
                    failures.push(verdict);
                }
            }
            let text = match failures.first() {
                None => format!("cube condition holds on {}/{} triples", triples.len(), triples.len()),
                Some(f) => format!(
                    "cube condition fails on {}/{} triples; first: ({}, {}, {})",
                    failures.len(),
                    triples.len(),
                    p.format_word(&f.triple.0),
                    p.format_word(&f.triple.1),
                    p.format_word(&f.triple.2)
                ),
            };
            let v = json!({ "triples": triples.len(), "failures": failures });
            emit(cli, out, text, v)?;
        }
        Command::Complete { file } => {
            let m = load_monoid(cli, file)?;
            let c = m.completeness();
            let text = match c {
                Completeness::Complete => "Complete".to_string(),
                Completeness::Incomplete(v) => format!(
                    "Incomplete: cube fails on ({}, {}, {})",
                    m.presentation().format_word(&v.triple.0),
                    m.presentation().format_word(&v.triple.1),
                    m.presentation().format_word(&v.triple.2)
                ),
                Completeness::Unknown(why) => format!("Unknown: {why}"),
            };
            emit(cli, out, text, serde_json::to_value(c).expect("serializable"))?;
            if matches!(c, Completeness::Unknown(_)) {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Eq { file, u, v } => {
            let m = load_monoid(cli, file)?;
            let r = m.equal(&m.elem(u)?, &m.elem(v)?)?;
            emit(cli, out, r, json!({ "equal": r, "backend": m.backend().name() }))?;
        }
        Command::Div { file, u, v, right } => {
            let m = load_monoid(cli, file)?;
            let (a, b) = (m.elem(u)?, m.elem(v)?);
            let q = if *right { m.right_quotient(&a, &b)? } else { m.left_quotient(&a, &b)? };
            let text = match &q {
                Some(q) => format!("true (quotient {})", m.show(q)),
                None => "false".into(),
            };
            emit(cli, out, text, json!({ "divides": q.is_some(), "quotient": q.as_ref().map(|q| m.show(q)) }))?;
        }
        Command::Lcm { file, u, v } => {
            let m = load_monoid(cli, file)?;
            let l = m.right_lcm(&m.elem(u)?, &m.elem(v)?)?;
            let text = l.as_ref().map_or("none".to_string(), |l| m.show(l));
            emit(cli, out, text, json!({ "lcm": l.as_ref().map(|l| m.show(l)) }))?;
        }
        Command::Gcd { file, u, v, right } => {
            let m = load_monoid(cli, file)?;
            let (a, b) = (m.elem(u)?, m.elem(v)?);
            let g = if *right { m.right_gcd(&a, &b)? } else { m.left_gcd(&a, &b)? };
            emit(cli, out, m.show(&g), json!({ "gcd": m.show(&g) }))?;
        }
        Command::Mcm { file, u, v, bound } => {
            let m = load_monoid(cli, file)?;
            let r = m.right_mcms(&m.elem(u)?, &m.elem(v)?, *bound)?;
            let v = json!({
                "mcms": words_json(&m, &r.elements),
                "bound": r.bound,
                "capHit": r.cap_hit,
            });
            emit(cli, out, set(&m, &r.elements), v)?;
        }
        Command::Atoms { file } => {
            let m = load_monoid(cli, file)?;
            let a = m.atoms()?;
            emit(cli, out, set(&m, &a), words_json(&m, &a))?;
        }
        Command::Nf(fw) => {
            let m = load_monoid(cli, &fw.file)?;
            let s = family(&m, &fw.family)?;
            let np = normal_decomposition(&m, &s, &m.elem(&fw.word)?)?;
            emit(cli, out, np.show(&m), np.to_json(&m))?;
        }
        Command::Symnf(fw) => {
            let m = load_monoid(cli, &fw.file)?;
            let s = family(&m, &fw.family)?;
            let w = m.presentation().parse_word(&fw.word)?;
            let sn = symmetric_normal_word(&m, &s, &w)?;
            emit(cli, out, sn.show(&m), sn.to_json(&m))?;
        }
        Command::Canlen { file, delta, word } => {
            let m = load_monoid(cli, file)?;
            let d = delta_structure(&m, &m.elem(delta)?)?;
            let w = m.presentation().parse_word(word)?;
            let n = canonical_length(&m, &d, &w)?;
            let f = delta_form(&m, &d, &w)?;
            emit(cli, out, n, json!({ "canonicalLength": n, "inf": f.inf, "rest": m.show(&f.rest) }))?;
        }
        Command::Family(fc) => return family_command(cli, fc, out),
        Command::Solid { file, family: spec } => {
            let m = load_monoid(cli, file)?;
            let s = family(&m, spec)?;
            let r = is_solid(&m, &s)?;
            emit(cli, out, r, json!({ "solid": r }))?;
        }
        Command::Compat { file, sub, family: spec, sharp } => {
            let m = load_monoid(cli, file)?;
            let mut s = family(&m, spec)?;
            if *sharp {
                s = s.sharp(&m)?;
            }
            let gens = words_list(sub).into_iter().map(|w| m.elem(w)).collect::<garside_core::Result<Vec<_>>>()?;
            let v = check_compatibility(&m, &gens, &s)?;
            let mut text = format!(
                "{}\n|S♯| = {}\n|S♯ ∩ N| = {}",
                if v.compatible { "compatible" } else { "incompatible" },
                v.sharp_size,
                v.sharp_in_sub_size
            );
            for f in &v.failures {
                write!(text, "\n  {f}")?;
            }
            let value = json!({
                "compatible": v.compatible,
                "sharpSize": v.sharp_size,
                "sharpInSubSize": v.sharp_in_sub_size,
                "subRightQuotientClosed": v.sub_right_quotient_closed,
                "subFamilyGarside": v.sub_family_garside,
                "failures": v.failures,
            });
            emit(cli, out, text, value)?;
        }
        Command::Germ(gc) => return germ_command(cli, gc, out),
        Command::Rc(rc) => return rc_command(cli, rc, out),
        Command::Fixtures(fc) => return fixtures_command(cli, fc, out),
    }
    Ok(EXIT_OK)
}

fn family_command(cli: &Cli, fc: &FamilyCommand, out: &mut String) -> Res<i32> {
    match fc {
        FamilyCommand::Smallest { file, count, bound } => {
            let m = load_monoid(cli, file)?;
            let r = smallest_garside_family(&m, *bound)?;
            let text = if *count { r.closed.len().to_string() } else { set(&m, &r.closed.elements) };
            let v = json!({
                "family": words_json(&m, &r.closed.elements),
                "size": r.closed.len(),
                "rounds": r.rounds,
                "boundHit": r.bound_hit,
            });
            emit(cli, out, text, v)?;
            if r.bound_hit {
                return Ok(EXIT_FAILURE);
            }
        }
        FamilyCommand::Check { file, family: spec } => {
            let m = load_monoid(cli, file)?;
            let s = family(&m, spec)?;
            let v = is_garside_family(&m, &s)?;
            let mut text = format!("{} ({})", if v.is_garside { "Garside" } else { "not Garside" }, v.criterion);
            for f in &v.failures {
                write!(text, "\n  {f}")?;
            }
            emit(
                cli,
                out,
                text,
                json!({ "garside": v.is_garside, "criterion": v.criterion, "failures": v.failures }),
            )?;
        }
        FamilyCommand::Close { file, words, mcm } => {
            let m = load_monoid(cli, file)?;
            let xs = words.iter().map(|w| m.elem(w)).collect::<garside_core::Result<Vec<_>>>()?;
            let r = if *mcm { close_under_right_mcm(&m, &xs, None)? } else { close_under_right_divisors(&m, &xs)? };
            let v = json!({
                "closed": words_json(&m, &r.closed.elements),
                "rounds": r.rounds,
                "boundHit": r.bound_hit,
            });
            emit(cli, out, set(&m, &r.closed.elements), v)?;
        }
        FamilyCommand::Delta { file, word } => {
            let m = load_monoid(cli, file)?;
            let d = delta_structure(&m, &m.elem(word)?)?;
            let mut text = String::new();
            for (i, s) in d.divisors.elements.iter().enumerate() {
                writeln!(
                    text,
                    "{}  ∂ = {}  φ = {}",
                    m.show(s),
                    m.show(&d.divisors.elements[d.dual[i]]),
                    m.show(&d.divisors.elements[d.phi[i]])
                )?;
            }
            emit(cli, out, text.trim_end(), d.to_json(&m))?;
        }
    }
    Ok(EXIT_OK)
}

fn load_germ(name: &str) -> Res<GermTable> {
    Ok(GermTable::parse_csv(&read(name)?)?)
}

fn germ_elements(g: &GermTable, labels: &[String]) -> Res<Vec<usize>> {
    labels
        .iter()
        .flat_map(|l| l.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect::<Vec<_>>())
        .map(|l| Ok(g.index(&l)?))
        .collect()
}

fn labels_of(g: &GermTable, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.label(x).to_string()).collect()
}

fn germ_command(cli: &Cli, gc: &GermCommand, out: &mut String) -> Res<i32> {
    match gc {
        GermCommand::Check { file } => {
            let g = load_germ(file)?;
            let f = g.flags();
            let mut text = format!(
                "isGerm: {}\nleftAssociative: {}\nrightAssociative: {}\nleftCancellative: {}\nnoetherian: {}",
                f.is_germ, f.left_associative, f.right_associative, f.left_cancellative, f.noetherian
            );
            for x in &f.failures {
                write!(text, "\n  {x}")?;
            }
            emit(cli, out, text, serde_json::to_value(&f).expect("serializable"))?;
        }
        GermCommand::Mon { file, atoms } => {
            let g = load_germ(file)?;
            let p = g.monoid_presentation()?;
            let rels: Vec<String> = p
                .relations()
                .iter()
                .map(|r| format!("{} = {}", p.format_word(&r.lhs), p.format_word(&r.rhs)))
                .collect();
            let gens: Vec<String> = p.gens().iter().map(|x| x.name.clone()).collect();
            let mut text = format!("⟨{} | {}⟩", gens.join(", "), rels.join(", "));
            let mut v = json!({ "generators": gens, "relations": rels });
            if *atoms {
                let m = Monoid::with_options(p, options(cli));
                let a = m.atoms()?;
                write!(text, "\natoms: {}", set(&m, &a))?;
                v["atoms"] = words_json(&m, &a);
            }
            emit(cli, out, text, v)?;
        }
        GermCommand::Embed { file, bound } => {
            let g = load_germ(file)?;
            match g.embedding_test(*bound)? {
                EmbeddingVerdict::Embeds { bound, exhaustive } => {
                    let text = if exhaustive {
                        "embeds".to_string()
                    } else {
                        format!("embeds (checked up to length {bound})")
                    };
                    emit(cli, out, text, json!({ "embeds": true, "bound": bound, "exhaustive": exhaustive }))?;
                }
                EmbeddingVerdict::Fails { left, right } => {
                    let (l, r) = (g.label(left), g.label(right));
                    emit(
                        cli,
                        out,
                        format!("fails: ι({l}) = ι({r})"),
                        json!({ "embeds": false, "witness": [l, r] }),
                    )?;
                }
                EmbeddingVerdict::Inconclusive(why) => return Err(failure(format!("inconclusive: {why}"))),
            }
        }
        GermCommand::Sub { file, elements } => {
            let g = load_germ(file)?;
            let xs = germ_elements(&g, elements)?;
            let closure = g.subgerm_closure(&xs);
            let witness = g.right_quotient_witness(&closure);
            let sub = g.restrict(&closure)?;
            let p = sub.monoid_presentation()?;
            let rels: Vec<String> = p
                .relations()
                .iter()
                .map(|r| format!("{} = {}", p.format_word(&r.lhs), p.format_word(&r.rhs)))
                .collect();
            let gens: Vec<String> = p.gens().iter().map(|x| x.name.clone()).collect();
            let rq = match witness {
                None => "yes".to_string(),
                Some((s, h, v)) => format!("no ({} = {} ∘ {})", g.label(v), g.label(s), g.label(h)),
            };
            let text = format!(
                "closure: {{{}}}\nright-quotient closed: {rq}\nmonoid: ⟨{} | {}⟩",
                labels_of(&g, &closure).join(", "),
                gens.join(", "),
                rels.join(", ")
            );
            let v = json!({
                "closure": labels_of(&g, &closure),
                "rightQuotientClosed": witness.is_none(),
                "witness": witness.map(|(s, h, v)| [g.label(s), g.label(h), g.label(v)]),
                "generators": gens,
                "relations": rels,
            });
            emit(cli, out, text, v)?;
        }
        GermCommand::Normal { file, s1, s2 } => {
            let g = load_germ(file)?;
            let (a, b) = (g.index(s1)?, g.index(s2)?);
            let j = g.j_family(a, b);
            let normal = g.is_normal_pair(a, b);
            let text = format!("{normal}\nJ = {{{}}}", labels_of(&g, &j).join(", "));
            emit(cli, out, text, json!({ "normal": normal, "j": labels_of(&g, &j) }))?;
        }
    }
    Ok(EXIT_OK)
}

fn load_rc(name: &str) -> Res<RcSystem> {
    Ok(RcSystem::parse_csv(&read(name)?)?)
}

fn rc_elements(x: &RcSystem, labels: &[String]) -> Res<Vec<usize>> {
    labels
        .iter()
        .flat_map(|l| l.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect::<Vec<_>>())
        .map(|l| Ok(x.index(&l)?))
        .collect()
}

fn rc_command(cli: &Cli, rc: &RcCommand, out: &mut String) -> Res<i32> {
    match rc {
        RcCommand::Check { file } => {
            let x = load_rc(file)?;
            let r = x.validate();
            let d = x.double_bijectivity();
            let mut text = format!(
                "rcLaw: {}\nleftTranslationsBijective: {}\nquasigroup: {}\ndoubleBij: {}\nDoubleBij: {}",
                r.rc_law, r.left_translations_bijective, r.quasigroup, d.small, d.big
            );
            if let Some([a, b, c]) = r.law_failure {
                let l = x.labels();
                write!(text, "\n  RC law fails on ({}, {}, {})", l[a], l[b], l[c])?;
            }
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["doubleBij"] = json!(d.small);
            v["DoubleBij"] = json!(d.big);
            emit(cli, out, text, v)?;
        }
        RcCommand::Mon { file } => {
            let x = load_rc(file)?;
            let p = x.structure_presentation()?;
            emit(cli, out, p.to_text().trim_end(), json!({ "presentation": p.to_text() }))?;
        }
        RcCommand::Delta { file, elements } => {
            let x = load_rc(file)?;
            let subset = rc_elements(&x, elements)?;
            let d = x.delta_i(&subset)?;
            let p = x.structure_presentation()?;
            let w = p.format_word(&d);
            emit(cli, out, format!("{w}\nlength {}", d.len()), json!({ "delta": w, "length": d.len() }))?;
        }
        RcCommand::Nu { file, exponents } => {
            let x = load_rc(file)?;
            let w = x.nu(exponents)?;
            let p = x.structure_presentation()?;
            let m = Monoid::with_options(p.clone(), options(cli));
            let independent = x.nu_order_independent(&m, exponents)?.is_none();
            let text = format!("{}\norder-independent: {independent}", p.format_word(&w));
            emit(cli, out, text, json!({ "nu": p.format_word(&w), "orderIndependent": independent }))?;
        }
        RcCommand::Parabolic { file, elements } => {
            let x = load_rc(file)?;
            let subset = rc_elements(&x, elements)?;
            let r = x.is_parabolic(&subset);
            emit(cli, out, r, json!({ "parabolic": r }))?;
        }
    }
    Ok(EXIT_OK)
}

fn fixtures_command(cli: &Cli, fc: &FixturesCommand, out: &mut String) -> Res<i32> {
    match fc {
        FixturesCommand::List => {
            let all = fixtures::all();
            let text = all
                .iter()
                .map(|f| format!("{:<22} {:<12} {}", f.name, f.kind.name(), f.summary))
                .collect::<Vec<_>>()
                .join("\n");
            let v = json!(all
                .iter()
                .map(|f| json!({ "name": f.name, "kind": f.kind.name(), "summary": f.summary }))
                .collect::<Vec<_>>());
            emit(cli, out, text, v)?;
        }
        FixturesCommand::Show { name } => {
            let f = fixtures::find(name).ok_or_else(|| usage(format!("no fixture `{name}`")))?;
            let text = f.text();
            emit(cli, out, text.trim_end(), json!({ "name": f.name, "text": text }))?;
        }
        FixturesCommand::Verify { filter } => {
            let report = fixtures::verify(filter.as_deref());
            let text = report
                .iter()
                .map(|r| {
                    let mut line = format!("{} {}: {}", if r.passed { "pass" } else { "FAIL" }, r.fixture, r.description);
                    if let Some(d) = &r.detail {
                        write!(line, "\n     {d}").expect("string write");
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n");
            let passed = report.iter().filter(|r| r.passed).count();
            let summary = format!("{passed}/{} expectations passed", report.len());
            let v = json!({
                "results": report.iter().map(|r| json!({
                    "fixture": r.fixture,
                    "description": r.description,
                    "passed": r.passed,
                    "detail": r.detail,
                })).collect::<Vec<_>>(),
                "passed": passed,
                "total": report.len(),
            });
            let text = if text.is_empty() { summary } else { format!("{text}\n{summary}") };
            emit(cli, out, text, v)?;
            if passed < report.len() {
                return Ok(EXIT_FAILURE);
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_names_resolve_without_directory_or_extension() {
        let a = load_text("braid3").unwrap();
        assert_eq!(load_text("somewhere/braid3.pres").unwrap(), a);
        assert!(load_text("nope").is_err());
    }

    #[test]
    fn word_lists() {
        assert_eq!(words_list(" a b, c ,, d"), ["a b", "c", "d"]);
        assert!(words_list("").is_empty());
    }

    #[test]
    fn error_codes() {
        assert_eq!(Failure::from(Error::UndeclaredGenerator("z".into())).code, EXIT_USAGE);
        assert_eq!(Failure::from(Error::Diverged(3)).code, EXIT_FAILURE);
        assert_eq!(Failure::from(Error::NotUnique(String::new())).code, EXIT_FAILURE);
    }

    #[test]
    fn json_keys_sorted() {
        let o = run(["garside", "classify", "braid3", "--json"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }
}
