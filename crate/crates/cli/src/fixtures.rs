//! Embedded fixture files and their expected outcomes.

use std::thread;

use garside_core::artin::Coxeter;
use garside_core::germ::GermTable;
use garside_core::presentation::parse_presentation;
use garside_core::Monoid;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Presentation,
    Germ,
    Rc,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Presentation => "presentation",
            Kind::Germ => "germ",
            Kind::Rc => "rc",
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Source {
    Text(&'static str),
    /// Artin–Tits presentation with every `m_{s,t}` equal to `m`.
    Artin { n: usize, m: u32 },
}

#[derive(Clone, Copy, Debug)]
pub enum Output {
    Exact(&'static str),
    Contains(&'static str),
    Any,
}

#[derive(Clone, Copy)]
pub enum Check {
    /// Arguments after the program name; `@` stands for the fixture name.
    Run {
        args: &'static [&'static str],
        code: i32,
        output: Output,
    },
    Custom(fn() -> Result<(), String>),
}

#[derive(Clone, Copy)]
pub struct Expectation {
    pub description: &'static str,
    pub check: Check,
}

#[derive(Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: Kind,
    pub summary: &'static str,
    source: Source,
    pub expectations: &'static [Expectation],
}

impl Fixture {
    pub fn text(&self) -> String {
        match self.source {
            Source::Text(t) => t.to_string(),
            Source::Artin { n, m } => {
                let p = Coxeter::uniform(n, m).presentation().expect("valid Coxeter data");
                format!("# Artin–Tits monoid, {n} generators, all m = {m}\n{}", p.to_text())
            }
        }
    }
}

const fn run(description: &'static str, args: &'static [&'static str], output: Output) -> Expectation {
    Expectation {
        description,
        check: Check::Run { args, code: 0, output },
    }
}

const fn run_code(description: &'static str, args: &'static [&'static str], code: i32, output: Output) -> Expectation {
    Expectation {
        description,
        check: Check::Run { args, code, output },
    }
}

const fn custom(description: &'static str, f: fn() -> Result<(), String>) -> Expectation {
    Expectation {
        description,
        check: Check::Custom(f),
    }
}

use Output::{Any, Contains, Exact};

macro_rules! text {
    ($file:literal) => {
        Source::Text(include_str!(concat!("../fixtures/", $file)))
    };
}

fn monoid_of(name: &str) -> Result<Monoid, String> {
    let f = find(name).ok_or_else(|| format!("missing fixture {name}"))?;
    parse_presentation(&f.text()).map(Monoid::new).map_err(|e| e.to_string())
}

fn germ_of(name: &str) -> Result<GermTable, String> {
    let f = find(name).ok_or_else(|| format!("missing fixture {name}"))?;
    GermTable::parse_csv(&f.text()).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn braid_delta_duality() -> Result<(), String> {
    let m = monoid_of("braid3")?;
    let e = |w: &str| m.elem(w).map_err(|e| e.to_string());
    let d = garside_core::families::delta_structure(&m, &e("a b a")?).map_err(|e| e.to_string())?;
    ensure(d.divisors.len() == 6, || format!("{} divisors", d.divisors.len()))?;
    ensure(d.check_duality(&m).map_err(|e| e.to_string())?, || "duality laws fail".into())
}

fn nonembedding_table() -> Result<(), String> {
    let g = germ_of("germ-nonembedding")?;
    let f = g.flags();
    ensure(f.is_germ, || format!("not a germ: {:?}", f.failures))
}

fn braid_subgerm_monoid() -> Result<(), String> {
    let g = germ_of("braid-germ")?;
    let idx = |l: &str| g.index(l).map_err(|e| e.to_string());
    let closure = g.subgerm_closure(&[idx("a")?, idx("b.a")?]);
    let sub = g.restrict(&closure).map_err(|e| e.to_string())?;
    let m = Monoid::new(sub.monoid_presentation().map_err(|e| e.to_string())?);
    let x = "a";
    let y = "b.a";
    let lhs = m.elem(&format!("{y} {y} {y}")).map_err(|e| e.to_string())?;
    let rhs = m.elem(&format!("{x} {y} {x} {y}")).map_err(|e| e.to_string())?;
    ensure(!m.equal(&lhs, &rhs).map_err(|e| e.to_string())?, || "y³ = (xy)² in the subgerm monoid".into())?;
    let b = monoid_of("braid3")?;
    let l = b.elem("b a b a b a").map_err(|e| e.to_string())?;
    let r = b.elem("a b a a b a").map_err(|e| e.to_string())?;
    ensure(b.equal(&l, &r).map_err(|e| e.to_string())?, || "(ba)³ ≠ (aba)² in the braid monoid".into())
}

fn rc_cyclic_deltas() -> Result<(), String> {
    let f = find("rc-cyclic-3").ok_or("missing fixture")?;
    let x = garside_core::rc::RcSystem::parse_csv(&f.text()).map_err(|e| e.to_string())?;
    for mask in 0u32..8 {
        let subset: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
        let d = x.delta_i(&subset).map_err(|e| e.to_string())?;
        ensure(d.len() == subset.len(), || format!("|Δ_I| = {} for I = {subset:?}", d.len()))?;
    }
    Ok(())
}

static FIXTURES: &[Fixture] = &[
    Fixture {
        name: "braid3",
        kind: Kind::Presentation,
        summary: "positive braids on three strands",
        source: text!("braid3.pres"),
        expectations: &[
            run("one reversing tile", &["reverse", "@", "a^-1 b"], Exact("b a b^-1 a^-1")),
            run("Garside family of six divisors", &["family", "smallest", "@", "--count"], Exact("6")),
            run("Δ² is (Δ, Δ)", &["nf", "@", "a b a a b a"], Exact("(a b a, a b a)")),
            run("canonical length of abab", &["canlen", "@", "--delta", "a b a", "a b a b"], Exact("1")),
            run("right reversing is complete", &["complete", "@"], Exact("Complete")),
            custom("∂ and φ satisfy the duality laws", braid_delta_duality),
        ],
    },
    Fixture {
        name: "cycle4",
        kind: Kind::Presentation,
        summary: "ab = bc = cd = da",
        source: text!("cycle4.pres"),
        expectations: &[
            run("four atoms", &["atoms", "@"], Exact("{a, b, c, d}")),
            run("lcm of a and c", &["lcm", "@", "a", "c"], Exact("a b")),
            run("chained relations leave a and c without a complement", &["reverse", "@", "a^-1 c"], Exact("stuck: a^-1 c")),
            run("reversing is incomplete", &["complete", "@"], Contains("Incomplete")),
        ],
    },
    Fixture {
        name: "two-mcms",
        kind: Kind::Presentation,
        summary: "two right-mcms, no right-lcm",
        source: text!("two-mcms.pres"),
        expectations: &[
            run("strict normal form", &["nf", "@", "a a b' a' a'"], Exact("(a b, a' b', b')")),
            run("two right-mcms", &["mcm", "@", "a", "b"], Exact("{a b, a a'}")),
            run_code("no right-lcm", &["lcm", "@", "a", "b"], 1, Any),
            run("no common multiple of a and a'", &["mcm", "@", "a", "a'"], Exact("{}")),
            run("cube condition on generators", &["cube", "@"], Contains("holds on 64/64")),
            run("right reversing is complete", &["complete", "@"], Exact("Complete")),
        ],
    },
    Fixture {
        name: "absorbing-unit",
        kind: Kind::Presentation,
        summary: "an invertible e absorbed by a",
        source: text!("absorbing-unit.pres"),
        expectations: &[run("{1, a, e} is solid", &["solid", "@", "--family", "1, a, e"], Exact("true"))],
    },
    Fixture {
        name: "commuting-unit",
        kind: Kind::Presentation,
        summary: "an invertible e commuting with a",
        source: text!("commuting-unit.pres"),
        expectations: &[run("{a, e} is not solid", &["solid", "@", "--family", "a, e"], Exact("false"))],
    },
    Fixture {
        name: "abelian-sub",
        kind: Kind::Presentation,
        summary: "submonoid of a free abelian monoid",
        source: text!("abelian-sub.pres"),
        expectations: &[run(
            "{1, x, y} is not a Garside family",
            &["family", "check", "@", "--family", "1, x, y"],
            Contains("not Garside"),
        )],
    },
    Fixture {
        name: "klein-semidirect",
        kind: Kind::Presentation,
        summary: "free monoid twisted by a Klein group",
        source: text!("klein-semidirect.pres"),
        expectations: &[
            run(
                "{a} is incompatible with the submonoid on a, e",
                &["compat", "@", "--sub", "a, e", "--family", "a"],
                Contains("incompatible"),
            ),
            run(
                "S♯ is compatible",
                &["compat", "@", "--sub", "a, e", "--family", "a", "--sharp"],
                Exact("compatible\n|S♯| = 8\n|S♯ ∩ N| = 6"),
            ),
        ],
    },
    Fixture {
        name: "free-abelian-3",
        kind: Kind::Presentation,
        summary: "free abelian monoid on three generators",
        source: text!("free-abelian-3.pres"),
        expectations: &[
            run("eight elements Δ_I", &["family", "smallest", "@", "--count"], Exact("8")),
            run(
                "divisors of ab",
                &["family", "close", "@", "a b"],
                Exact("{1, a, b, a b}"),
            ),
        ],
    },
    Fixture {
        name: "right-angled-path3",
        kind: Kind::Presentation,
        summary: "right-angled Artin–Tits monoid on a path",
        source: text!("right-angled-path3.pres"),
        expectations: &[run("six elements", &["family", "smallest", "@", "--count"], Exact("6"))],
    },
    Fixture {
        name: "att-n2-m3",
        kind: Kind::Presentation,
        summary: "Artin–Tits, n = 2, m = 3",
        source: Source::Artin { n: 2, m: 3 },
        expectations: &[run("smallest family", &["family", "smallest", "@", "--count"], Exact("6"))],
    },
    Fixture {
        name: "att-n3-m3",
        kind: Kind::Presentation,
        summary: "Artin–Tits, n = 3, m = 3",
        source: Source::Artin { n: 3, m: 3 },
        expectations: &[
            run("smallest family", &["family", "smallest", "@", "--count"], Exact("16")),
            run("right reversing is complete", &["complete", "@"], Exact("Complete")),
        ],
    },
    Fixture {
        name: "att-n3-m4",
        kind: Kind::Presentation,
        summary: "Artin–Tits, n = 3, m = 4",
        source: Source::Artin { n: 3, m: 4 },
        expectations: &[run("smallest family", &["family", "smallest", "@", "--count"], Exact("22"))],
    },
    Fixture {
        name: "att-n4-m3",
        kind: Kind::Presentation,
        summary: "Artin–Tits, n = 4, m = 3",
        source: Source::Artin { n: 4, m: 3 },
        expectations: &[run("smallest family", &["family", "smallest", "@", "--count"], Exact("35"))],
    },
    Fixture {
        name: "reversing-loop",
        kind: Kind::Presentation,
        summary: "a = bbab",
        source: text!("reversing-loop.pres"),
        expectations: &[run_code(
            "reversing of a^-1 b a does not terminate",
            &["reverse", "@", "a^-1 b a"],
            1,
            Contains("loop detected"),
        )],
    },
    Fixture {
        name: "germ-nonembedding",
        kind: Kind::Germ,
        summary: "a germ that does not embed in its monoid",
        source: text!("germ-nonembedding.germ.csv"),
        expectations: &[
            custom("the table is a germ", nonembedding_table),
            run("ι(i) = ι(n)", &["germ", "embed", "@"], Exact("fails: ι(i) = ι(n)")),
        ],
    },
    Fixture {
        name: "germ-unit-atoms",
        kind: Kind::Germ,
        summary: "a germ with an invertible element",
        source: text!("germ-unit-atoms.germ.csv"),
        expectations: &[
            run("atoms of the monoid", &["germ", "mon", "@", "--atoms"], Contains("atoms: {a, a e}")),
            run("embeds", &["germ", "embed", "@"], Exact("embeds")),
        ],
    },
    Fixture {
        name: "braid-germ",
        kind: Kind::Germ,
        summary: "divisors of Δ in the braid monoid on three strands",
        source: text!("braid-germ.germ.csv"),
        expectations: &[
            run("germ axioms", &["germ", "check", "@"], Contains("isGerm: true")),
            run(
                "subgerm generated by a and ba",
                &["germ", "sub", "@", "a", "b.a"],
                Contains("closure: {1, a, b.a, a.b.a}\nright-quotient closed: no (a.b.a = b.a ∘ b)"),
            ),
            custom("y³ ≠ (xy)² in the subgerm monoid, (ba)³ = Δ² in the braid monoid", braid_subgerm_monoid),
        ],
    },
    Fixture {
        name: "rc-cyclic-3",
        kind: Kind::Rc,
        summary: "x ◁ y = y + 1 on Z/3",
        source: text!("rc-cyclic-3.rc.csv"),
        expectations: &[
            run("RC law", &["rc", "check", "@"], Contains("rcLaw: true")),
            custom("|Δ_I| = |I| for every subset", rc_cyclic_deltas),
        ],
    },
];

pub fn all() -> &'static [Fixture] {
    FIXTURES
}

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub fixture: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

fn check_one(f: &Fixture, e: &Expectation) -> CheckResult {
    let outcome = match e.check {
        Check::Run { args, code, output } => {
            let argv: Vec<&str> = std::iter::once("garside")
                .chain(args.iter().map(|a| if *a == "@" { f.name } else { a }))
                .collect();
            let o = crate::run(argv.iter().copied());
            let got = o.stdout.trim_end();
            let ok_out = match output {
                Exact(s) => got == s,
                Contains(s) => got.contains(s),
                Any => true,
            };
            if o.code == code && ok_out {
                Ok(())
            } else {
                Err(format!(
                    "`{}` exited {} with {:?}{}",
                    argv[1..].join(" "),
                    o.code,
                    got,
                    if o.stderr.is_empty() { String::new() } else { format!(" ({})", o.stderr.trim_end()) }
                ))
            }
        }
        Check::Custom(g) => g(),
    };
    CheckResult {
        fixture: f.name,
        description: e.description,
        passed: outcome.is_ok(),
        detail: outcome.err(),
    }
}

/// Runs the expectations of every fixture whose name contains `filter`.
/// Fixtures run in parallel; results come back in corpus order.
pub fn verify(filter: Option<&str>) -> Vec<CheckResult> {
    let selected: Vec<&Fixture> = FIXTURES
        .iter()
        .filter(|f| filter.is_none_or(|s| f.name.contains(s)))
        .collect();
    thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|f| scope.spawn(move || f.expectations.iter().map(|e| check_one(f, e)).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("fixture check panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique() {
        let mut names: Vec<_> = all().iter().map(|f| f.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), all().len());
    }

    #[test]
    fn artin_text_parses() {
        let p = parse_presentation(&find("att-n3-m4").unwrap().text()).unwrap();
        assert_eq!(p.num_gens(), 3);
        assert_eq!(p.relations().len(), 3);
    }

    #[test]
    fn filter_selects_by_substring() {
        let r = verify(Some("germ"));
        assert!(!r.is_empty());
        assert!(r.iter().all(|c| c.fixture.contains("germ")));
    }
}
