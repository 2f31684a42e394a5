//! Right and left subword reversing, the syntactic right-complement θ and
//! its extension θ*, reversing grids, the cube condition and completeness.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{Letter, Presentation, SignedWord};

/// Default step budget for reversing.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Words longer than this are treated as divergent.
const MAX_WORD: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaTable {
    n: usize,
    entries: Vec<Option<Vec<usize>>>,
}

impl ThetaTable {
    /// Splits each relation `s v = t u` into θ(s,t) = v, θ(t,s) = u. Fails
    /// with the offending pair on an empty side, equal heads, or a second
    /// relation for the same pair.
    pub fn from_pairs(
        n: usize,
        pairs: impl Iterator<Item = (Vec<usize>, Vec<usize>)>,
    ) -> std::result::Result<Self, (usize, usize)> {
        let mut entries = vec![None; n * n];
        for i in 0..n {
            entries[i * n + i] = Some(Vec::new());
        }
        for (l, r) in pairs {
            let (Some(&s), Some(&t)) = (l.first(), r.first()) else {
                let g = l.first().or(r.first()).copied().unwrap_or(0);
                return Err((g, g));
            };
            if s == t || entries[s * n + t].is_some() {
                return Err((s, t));
            }
            entries[s * n + t] = Some(l[1..].to_vec());
            entries[t * n + s] = Some(r[1..].to_vec());
        }
        Ok(ThetaTable { n, entries })
    }

    pub fn get(&self, s: usize, t: usize) -> Option<&[usize]> {
        self.entries[s * self.n + t].as_deref()
    }

    /// All defined pairs with s ≠ t.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 0..self.n {
            for t in 0..self.n {
                if s != t && self.get(s, t).is_some() {
                    out.push((s, t));
                }
            }
        }
        out
    }
}

/// The right-complement of a complemented presentation.
pub fn build_theta(p: &Presentation) -> Result<ThetaTable> {
    if let Some(t) = p.theta() {
        return Ok(t.clone());
    }
    let (s, t) = p.complemented_conflict().unwrap_or((0, 0));
    Err(Error::NotComplemented(
        p.gen_name(s).to_string(),
        p.gen_name(t).to_string(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Terminated,
    Diverged,
    Stuck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceStep {
    pub position: usize,
    pub pair_reversed: String,
    pub replacement: String,
}

/// Why a reversal was declared divergent beyond running out of budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum DivergenceEvidence {
    /// The configuration at `later` contains the one at `earlier` as a
    /// factor, so the same steps can be replayed forever.
    Recurrence { earlier: usize, later: usize },
    /// The input is `s⁻¹ u s` with a relation `s = (uv)^r u s ...` where `v`
    /// is a product of words `u_k` with `u_k s` a prefix of the relation.
    Pattern { relation: usize },
}

#[derive(Clone, Debug)]
pub struct ReversalOutcome {
    pub status: Status,
    /// Terminal word when terminated, last configuration otherwise.
    pub word: SignedWord,
    pub steps: usize,
    pub trace: Option<Vec<TraceStep>>,
    pub divergence: Option<DivergenceEvidence>,
    /// Every terminal word reached (more than one only for presentations
    /// that are not complemented).
    pub alternatives: Vec<SignedWord>,
    /// Whether every branch was explored (always true when deterministic).
    pub exhaustive: bool,
}

impl ReversalOutcome {
    pub fn loop_detected(&self) -> bool {
        self.divergence.is_some()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReverseOptions {
    pub budget: usize,
    pub strategy: Strategy,
    pub trace: bool,
}

impl Default for ReverseOptions {
    fn default() -> Self {
        ReverseOptions {
            budget: DEFAULT_BUDGET,
            strategy: Strategy::Leftmost,
            trace: false,
        }
    }
}

impl ReverseOptions {
    pub fn budget(budget: usize) -> Self {
        ReverseOptions {
            budget,
            ..Default::default()
        }
    }
}

/// Relations seen in one orientation: as given, or read backwards.
struct Rules<'a> {
    p: &'a Presentation,
    mirrored: bool,
}

impl Rules<'_> {
    fn theta(&self) -> Option<&ThetaTable> {
        if self.mirrored {
            self.p.theta_left()
        } else {
            self.p.theta()
        }
    }

    fn oriented(&self, w: &[usize]) -> Vec<usize> {
        if self.mirrored {
            w.iter().rev().copied().collect()
        } else {
            w.to_vec()
        }
    }

    /// All `(v, u)` with `s v = t u` a relation, plus `(ε, ε)` when `s = t`.
    fn options(&self, s: usize, t: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        if s == t {
            out.push((Vec::new(), Vec::new()));
        }
        for r in self.p.relations() {
            let (l, rr) = (self.oriented(&r.lhs), self.oriented(&r.rhs));
            for (a, b) in [(&l, &rr), (&rr, &l)] {
                if a.first() == Some(&s) && b.first() == Some(&t) {
                    let opt = (a[1..].to_vec(), b[1..].to_vec());
                    if !out.contains(&opt) {
                        out.push(opt);
                    }
                }
            }
        }
        out
    }

    fn name(&self, l: Letter) -> String {
        let n = self.p.gen_name(l.gen);
        if l.inv {
            format!("{n}^-1")
        } else {
            n.to_string()
        }
    }
}

fn pattern_at(w: &[Letter], i: usize) -> bool {
    w[i].inv && !w[i + 1].inv
}

fn find_pattern(w: &[Letter], from: usize, strategy: Strategy) -> Option<usize> {
    if w.len() < 2 {
        return None;
    }
    match strategy {
        Strategy::Leftmost => (from.min(w.len() - 1)..w.len() - 1).find(|&i| pattern_at(w, i)),
        Strategy::Rightmost => (0..w.len() - 1).rev().find(|&i| pattern_at(w, i)),
    }
}

fn tile(v: &[usize], u: &[usize]) -> Vec<Letter> {
    v.iter()
        .map(|&g| Letter::pos(g))
        .chain(u.iter().rev().map(|&g| Letter::neg(g)))
        .collect()
}

fn contains_factor(hay: &[Letter], needle: &[Letter]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

struct Core {
    status: Status,
    word: Vec<Letter>,
    steps: usize,
    trace: Option<Vec<TraceStep>>,
    divergence: Option<DivergenceEvidence>,
    alternatives: Vec<Vec<Letter>>,
    exhaustive: bool,
}

fn deterministic(rules: &Rules, theta: &ThetaTable, start: Vec<Letter>, opts: &ReverseOptions) -> Core {
    let mut w = start;
    let mut trace = opts.trace.then(Vec::new);
    let mut checkpoints = vec![Checkpoint::new(0, &w)];
    let mut recent: VecDeque<Checkpoint> = VecDeque::new();
    let mut steps = 0;
    let mut from = 0;
    loop {
        let Some(i) = find_pattern(&w, from, opts.strategy) else {
            return Core {
                status: Status::Terminated,
                alternatives: vec![w.clone()],
                word: w,
                steps,
                trace,
                divergence: None,
                exhaustive: true,
            };
        };
        let (s, t) = (w[i].gen, w[i + 1].gen);
        let Some(v) = theta.get(s, t) else {
            return Core {
                status: Status::Stuck,
                word: w,
                steps,
                trace,
                divergence: None,
                alternatives: Vec::new(),
                exhaustive: true,
            };
        };
        if steps == opts.budget || w.len() > MAX_WORD {
            return Core {
                status: Status::Diverged,
                word: w,
                steps,
                trace,
                divergence: None,
                alternatives: Vec::new(),
                exhaustive: false,
            };
        }
        let u = theta.get(t, s).expect("θ defined symmetrically");
        let rep = tile(v, u);
        if let Some(tr) = trace.as_mut() {
            let names = |ls: &mut dyn Iterator<Item = &Letter>| {
                ls.map(|&l| rules.name(l)).collect::<Vec<_>>().join(" ")
            };
            tr.push(if rules.mirrored {
                TraceStep {
                    position: w.len() - 2 - i,
                    pair_reversed: names(&mut w[i..i + 2].iter().rev()),
                    replacement: names(&mut rep.iter().rev()),
                }
            } else {
                TraceStep {
                    position: i,
                    pair_reversed: names(&mut w[i..i + 2].iter()),
                    replacement: names(&mut rep.iter()),
                }
            });
        }
        let before = w.len();
        w.splice(i..i + 2, rep);
        steps += 1;
        from = i.saturating_sub(1);

        let check_all = steps.is_power_of_two() || steps % 32 == 0;
        let mut found = None;
        for cp in checkpoints.iter_mut().chain(recent.iter_mut()) {
            cp.lo = cp.lo.min(i);
            cp.suf = cp.suf.min(before - i - 2);
            if found.is_some() {
                continue;
            }
            let x = &cp.word[cp.lo..cp.word.len() - cp.suf];
            let y = &w[cp.lo..w.len() - cp.suf];
            if (check_all || y.len() <= 512) && !x.is_empty() && contains_factor(y, x) {
                found = Some(cp.step);
            }
        }
        if let Some(earlier) = found {
            return Core {
                status: Status::Diverged,
                word: w,
                steps,
                trace,
                divergence: Some(DivergenceEvidence::Recurrence {
                    earlier,
                    later: steps,
                }),
                alternatives: Vec::new(),
                exhaustive: false,
            };
        }
        if steps.is_power_of_two() {
            checkpoints.push(Checkpoint::new(steps, &w));
        } else if steps % 32 == 0 || steps < 64 {
            recent.push_back(Checkpoint::new(steps, &w));
            if recent.len() > 8 {
                recent.pop_front();
            }
        }
    }
}

/// A snapshot together with the factor touched since it was taken: the
/// untouched prefix and suffix lengths are common to the snapshot and the
/// current word. If the touched factor of the current word contains the
/// touched factor of the snapshot, that factor reverses forever.
struct Checkpoint {
    step: usize,
    word: Vec<Letter>,
    lo: usize,
    suf: usize,
}

impl Checkpoint {
    fn new(step: usize, w: &[Letter]) -> Self {
        Checkpoint { step, word: w.to_vec(), lo: w.len(), suf: w.len() }
    }
}

fn breadth_first(rules: &Rules, start: Vec<Letter>, opts: &ReverseOptions) -> Core {
    let mut queue = VecDeque::from([start.clone()]);
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([start.clone()]);
    let mut terminals = Vec::new();
    let mut expanded = 0;
    let mut last = start;
    while let Some(w) = queue.pop_front() {
        let Some(i) = find_pattern(&w, 0, Strategy::Leftmost) else {
            terminals.push(w);
            continue;
        };
        if expanded == opts.budget {
            queue.push_front(w);
            let status = if terminals.is_empty() {
                Status::Diverged
            } else {
                Status::Terminated
            };
            return Core {
                status,
                word: terminals.first().cloned().unwrap_or(last),
                steps: expanded,
                trace: None,
                divergence: None,
                alternatives: terminals,
                exhaustive: false,
            };
        }
        expanded += 1;
        for (v, u) in rules.options(w[i].gen, w[i + 1].gen) {
            let mut next = w.clone();
            next.splice(i..i + 2, tile(&v, &u));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        last = w;
    }
    let status = if terminals.is_empty() {
        Status::Stuck
    } else {
        Status::Terminated
    };
    Core {
        status,
        word: terminals.first().cloned().unwrap_or(last),
        steps: expanded,
        trace: None,
        divergence: None,
        alternatives: terminals,
        exhaustive: true,
    }
}

fn run(p: &Presentation, w: &SignedWord, opts: &ReverseOptions, mirrored: bool) -> Result<ReversalOutcome> {
    if opts.budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let rules = Rules { p, mirrored };
    let orient = |ls: &[Letter]| -> Vec<Letter> {
        if mirrored {
            ls.iter().rev().copied().collect()
        } else {
            ls.to_vec()
        }
    };
    let start = orient(&w.letters);
    let mut core = match rules.theta() {
        Some(theta) => deterministic(&rules, theta, start, opts),
        None => breadth_first(&rules, start, opts),
    };
    if core.status == Status::Diverged && core.divergence.is_none() && !mirrored && rules.theta().is_some() {
        if let Some(rel) = divergence_pattern(p, w) {
            core.divergence = Some(DivergenceEvidence::Pattern { relation: rel });
        }
    }
    let wrap = |ls: Vec<Letter>| SignedWord {
        letters: orient(&ls),
        source: w.source,
        target: w.target,
    };
    Ok(ReversalOutcome {
        status: core.status,
        word: wrap(core.word),
        steps: core.steps,
        trace: core.trace,
        divergence: core.divergence,
        alternatives: core.alternatives.into_iter().map(wrap).collect(),
        exhaustive: core.exhaustive,
    })
}

/// Right reversing `s⁻¹ t → θ(s,t) θ(t,s)⁻¹`, leftmost pattern first.
pub fn right_reverse(p: &Presentation, w: &SignedWord, budget: usize) -> Result<ReversalOutcome> {
    right_reverse_with(p, w, &ReverseOptions::budget(budget))
}

pub fn right_reverse_with(p: &Presentation, w: &SignedWord, opts: &ReverseOptions) -> Result<ReversalOutcome> {
    run(p, w, opts, false)
}

/// Left reversing `s t⁻¹ → x⁻¹ y` with `x s = y t`.
pub fn left_reverse(p: &Presentation, w: &SignedWord, budget: usize) -> Result<ReversalOutcome> {
    left_reverse_with(p, w, &ReverseOptions::budget(budget))
}

pub fn left_reverse_with(p: &Presentation, w: &SignedWord, opts: &ReverseOptions) -> Result<ReversalOutcome> {
    run(p, w, opts, true)
}

/// Static certificate for words `s⁻¹ u s` in a complemented presentation
/// having a relation `s = w` where `w` begins with `(uv)^r u s`, `r ≥ 1`,
/// and `v` is a product of words `u_k` such that `u_k s` is a prefix of `w`.
/// Returns the index of the relation.
pub fn divergence_pattern(p: &Presentation, w: &SignedWord) -> Option<usize> {
    let ls = &w.letters;
    if ls.len() < 3 || !ls[0].inv || ls[ls.len() - 1].inv || ls[0].gen != ls[ls.len() - 1].gen {
        return None;
    }
    let s = ls[0].gen;
    let u: Vec<usize> = ls[1..ls.len() - 1]
        .iter()
        .map(|l| (!l.inv).then_some(l.gen))
        .collect::<Option<_>>()?;
    for (idx, r) in p.relations().iter().enumerate() {
        let rhs = match (r.lhs.as_slice(), r.rhs.as_slice()) {
            ([x], w) if *x == s && w.len() > 1 => w,
            (w, [x]) if *x == s && w.len() > 1 => w,
            _ => continue,
        };
        if !rhs.starts_with(&u) {
            continue;
        }
        // v is a product of blocks b with b·s a prefix of rhs
        let block_ok = |b: &[usize]| b.len() < rhs.len() && rhs.starts_with(b) && rhs[b.len()] == s;
        let decomposable = |v: &[usize]| {
            let mut can = vec![false; v.len() + 1];
            can[0] = true;
            for j in 1..=v.len() {
                can[j] = (0..j).any(|i| can[i] && block_ok(&v[i..j]));
            }
            can[v.len()]
        };
        for lv in 0..rhs.len() {
            let period = u.len() + lv;
            if period + u.len() + 1 > rhs.len() {
                break;
            }
            let v = &rhs[u.len()..u.len() + lv];
            if !decomposable(v) {
                continue;
            }
            let unit: Vec<usize> = u.iter().chain(v.iter()).copied().collect();
            let mut r_pow = 1;
            loop {
                let need = period * r_pow + u.len() + 1;
                if need > rhs.len() {
                    break;
                }
                let mut candidate: Vec<usize> = Vec::with_capacity(need);
                for _ in 0..r_pow {
                    candidate.extend_from_slice(&unit);
                }
                candidate.extend_from_slice(&u);
                candidate.push(s);
                if rhs.starts_with(&candidate) {
                    return Some(idx);
                }
                r_pow += 1;
            }
        }
    }
    None
}

/// θ*(u, v): the positive part `v'` of the reversal `u⁻¹ v ↷ v' u'⁻¹`;
/// `None` when reversing gets stuck.
pub fn theta_star(p: &Presentation, u: &[usize], v: &[usize], budget: usize) -> Result<Option<Vec<usize>>> {
    build_theta(p)?;
    Ok(theta_pair(p, u, v, budget)?.map(|(v1, _)| v1))
}

/// Both complements `(θ*(u,v), θ*(v,u))` from a single reversal.
pub fn theta_pair(
    p: &Presentation,
    u: &[usize],
    v: &[usize],
    budget: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let letters: Vec<Letter> = u
        .iter()
        .rev()
        .map(|&g| Letter::neg(g))
        .chain(v.iter().map(|&g| Letter::pos(g)))
        .collect();
    let source = u.first().or(v.first()).map_or(0, |&g| p.source_of(g));
    let w = SignedWord {
        letters,
        source,
        target: source,
    };
    let out = right_reverse(p, &w, budget)?;
    match out.status {
        Status::Terminated => Ok(out.word.split_positive_negative()),
        Status::Stuck => Ok(None),
        Status::Diverged if out.divergence.is_some() => Ok(None),
        Status::Diverged => Err(Error::Diverged(out.steps)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridCell {
    pub top: Vec<usize>,
    pub left: Vec<usize>,
    pub bottom: Vec<usize>,
    pub right: Vec<usize>,
}

/// Reversing diagram of `u⁻¹ v`, one cell per pair of letters of `u`
/// (rows) and `v` (columns); each cell satisfies
/// `left⁻¹ top ↷ bottom right⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReversingGrid {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub cells: Vec<Vec<GridCell>>,
}

impl ReversingGrid {
    /// θ*(u, v): bottoms of the last row.
    pub fn bottom_word(&self) -> Vec<usize> {
        match self.cells.last() {
            Some(row) => row.iter().flat_map(|c| c.bottom.clone()).collect(),
            None => self.v.clone(),
        }
    }

    /// θ*(v, u): rights of the last column.
    pub fn right_word(&self) -> Vec<usize> {
        if self.v.is_empty() {
            return self.u.clone();
        }
        self.cells
            .iter()
            .filter_map(|row| row.last())
            .flat_map(|c| c.right.clone())
            .collect()
    }

    pub fn to_json(&self, p: &Presentation) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .cells
            .iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|c| {
                            serde_json::json!({
                                "bottom": p.format_word(&c.bottom),
                                "left": p.format_word(&c.left),
                                "right": p.format_word(&c.right),
                                "top": p.format_word(&c.top),
                            })
                        })
                        .collect(),
                )
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

/// Builds the grid cell by cell; `None` if some cell is stuck.
pub fn reversing_grid(p: &Presentation, u: &[usize], v: &[usize], budget: usize) -> Result<Option<ReversingGrid>> {
    build_theta(p)?;
    let mut cells: Vec<Vec<GridCell>> = Vec::with_capacity(u.len());
    for (i, &ui) in u.iter().enumerate() {
        let mut row: Vec<GridCell> = Vec::with_capacity(v.len());
        let mut left = vec![ui];
        for (j, &vj) in v.iter().enumerate() {
            let top = if i == 0 {
                vec![vj]
            } else {
                cells[i - 1][j].bottom.clone()
            };
            let Some((bottom, right)) = theta_pair(p, &left, &top, budget)? else {
                return Ok(None);
            };
            row.push(GridCell {
                top,
                left: left.clone(),
                bottom,
                right: right.clone(),
            });
            left = right;
        }
        cells.push(row);
    }
    Ok(Some(ReversingGrid {
        u: u.to_vec(),
        v: v.to_vec(),
        cells,
    }))
}

/// Equality and left-division of positive words, as needed by the cube
/// condition. Implemented by the monoid backends.
pub trait EqualityOracle {
    fn oracle_name(&self) -> &'static str;
    fn words_equal(&self, source: usize, u: &[usize], v: &[usize]) -> Result<bool>;
    /// Some `w` with `u w ≡ v`.
    fn left_quotient_word(&self, source: usize, u: &[usize], v: &[usize]) -> Result<Option<Vec<usize>>>;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CubeVerdict {
    pub triple: (Vec<usize>, Vec<usize>, Vec<usize>),
    pub holds: bool,
    /// The two words whose equivalence failed (`None` stands for undefined).
    pub witness: Option<(Option<Vec<usize>>, Option<Vec<usize>>)>,
    /// `theta` for the θ̂ comparison, `factorization` for the reversing
    /// factorization test used without a complement.
    pub method: &'static str,
    pub oracle: &'static str,
}

fn object_after(p: &Presentation, start: usize, w: &[usize]) -> usize {
    w.last().map_or(start, |&g| p.target_of(g))
}

fn source_of_triple(p: &Presentation, ws: [&[usize]; 3]) -> Result<usize> {
    let sources: Vec<usize> = ws
        .iter()
        .filter_map(|w| w.first().map(|&g| p.source_of(g)))
        .collect();
    if sources.windows(2).any(|x| x[0] != x[1]) {
        return Err(Error::Mismatch("cube triple does not share a source".into()));
    }
    Ok(sources.first().copied().unwrap_or(0))
}

/// Checks the cube condition on `(u, v, w)`.
pub fn cube_check(
    p: &Presentation,
    u: &[usize],
    v: &[usize],
    w: &[usize],
    eq: &dyn EqualityOracle,
    budget: usize,
) -> Result<CubeVerdict> {
    let x = source_of_triple(p, [u, v, w])?;
    let triple = (u.to_vec(), v.to_vec(), w.to_vec());
    if p.theta().is_some() {
        let hat = |a: &[usize], b: &[usize]| -> Result<Option<(Vec<usize>, usize)>> {
            let (Some(ab), Some(ac)) = (theta_star(p, a, b, budget)?, theta_star(p, a, w, budget)?) else {
                return Ok(None);
            };
            let obj = object_after(p, object_after(p, x, a), &ab);
            Ok(theta_star(p, &ab, &ac, budget)?.map(|h| (h, obj)))
        };
        let (h1, h2) = (hat(u, v)?, hat(v, u)?);
        let holds = match (&h1, &h2) {
            (None, None) => true,
            (Some((a, obj)), Some((b, _))) => eq.words_equal(*obj, a, b)?,
            _ => false,
        };
        return Ok(CubeVerdict {
            triple,
            holds,
            witness: (!holds).then(|| (h1.map(|h| h.0), h2.map(|h| h.0))),
            method: "theta",
            oracle: eq.oracle_name(),
        });
    }
    let letters = |neg: &[usize], pos: &[usize]| -> Vec<Letter> {
        neg.iter()
            .rev()
            .map(|&g| Letter::neg(g))
            .chain(pos.iter().map(|&g| Letter::pos(g)))
            .collect()
    };
    let mut big = letters(u, w);
    big.extend(letters(w, v));
    let opts = ReverseOptions::budget(budget);
    let sw = |ls: Vec<Letter>| SignedWord {
        letters: ls,
        source: x,
        target: x,
    };
    let outer = right_reverse_with(p, &sw(big), &opts)?;
    let inner = right_reverse_with(p, &sw(letters(u, v)), &opts)?;
    if !outer.exhaustive || !inner.exhaustive {
        return Err(Error::Diverged(outer.steps.max(inner.steps)));
    }
    let inner: Vec<(Vec<usize>, Vec<usize>)> = inner
        .alternatives
        .iter()
        .filter_map(|a| a.split_positive_negative())
        .collect();
    for alt in &outer.alternatives {
        let (vt, ut) = alt.split_positive_negative().expect("terminal shape");
        let mut factorable = false;
        for (v1, u1) in &inner {
            let obj = object_after(p, object_after(p, x, v), u1);
            if let Some(w1) = eq.left_quotient_word(obj, u1, &ut)? {
                let lhs: Vec<usize> = v1.iter().chain(w1.iter()).copied().collect();
                let obj_v = object_after(p, x, u);
                if eq.words_equal(obj_v, &lhs, &vt)? {
                    factorable = true;
                    break;
                }
            }
        }
        if !factorable {
            return Ok(CubeVerdict {
                triple,
                holds: false,
                witness: Some((Some(ut), Some(vt))),
                method: "factorization",
                oracle: eq.oracle_name(),
            });
        }
    }
    Ok(CubeVerdict {
        triple,
        holds: true,
        witness: None,
        method: "factorization",
        oracle: eq.oracle_name(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Completeness {
    Complete,
    Incomplete(CubeVerdict),
    Unknown(String),
}

/// Complete iff the cube condition holds on every generator triple, which
/// suffices once the presentation carries a Noetherianity certificate (a
/// balanced positive grading).
pub fn completeness_check(p: &Presentation, eq: &dyn EqualityOracle, budget: usize) -> Completeness {
    if crate::weights::grading(p).is_none() {
        return Completeness::Unknown("no Noetherianity certificate (no balanced grading)".into());
    }
    let n = p.num_gens();
    for r in 0..n {
        for s in 0..n {
            for t in 0..n {
                if p.source_of(r) != p.source_of(s) || p.source_of(r) != p.source_of(t) {
                    continue;
                }
                match cube_check(p, &[r], &[s], &[t], eq, budget) {
                    Ok(v) if v.holds => {}
                    Ok(v) => return Completeness::Incomplete(v),
                    Err(e) => return Completeness::Unknown(e.to_string()),
                }
            }
        }
    }
    Completeness::Complete
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid() -> Presentation {
        Presentation::monoid(&["a", "b"], &[("a b a", "b a b")]).unwrap()
    }

    #[test]
    fn theta_tables() {
        let p = braid();
        let th = build_theta(&p).unwrap();
        assert_eq!(th.get(0, 1), Some(&[1, 0][..]));
        assert_eq!(th.get(1, 0), Some(&[0, 1][..]));
        let q = Presentation::monoid(&["a", "b"], &[("a", "b b a b")]).unwrap();
        let th = build_theta(&q).unwrap();
        assert_eq!(th.get(0, 1), Some(&[][..]));
        assert_eq!(th.get(1, 0), Some(&[1, 0, 1][..]));
    }

    #[test]
    fn single_tile() {
        let p = braid();
        let out = right_reverse(&p, &p.parse_word("a^-1 b").unwrap(), 100).unwrap();
        assert_eq!(out.status, Status::Terminated);
        assert_eq!(p.format_signed(&out.word), "b a b^-1 a^-1");
        let out = right_reverse(&p, &p.parse_word("a^-1 a").unwrap(), 100).unwrap();
        assert_eq!(p.format_signed(&out.word), "1");
    }

    #[test]
    fn left_tile() {
        let p = braid();
        let out = left_reverse(&p, &p.parse_word("b a^-1").unwrap(), 100).unwrap();
        assert_eq!(out.status, Status::Terminated);
        // u'' = b a, v'' = a b: (ba)^-1 (ab)
        assert_eq!(p.format_signed(&out.word), "a^-1 b^-1 a b");
        let out = left_reverse(&p, &p.parse_word("a a^-1").unwrap(), 100).unwrap();
        assert_eq!(p.format_signed(&out.word), "1");
    }

    #[test]
    fn divergence_detected() {
        let p = Presentation::monoid(&["a", "b"], &[("a", "b b a b")]).unwrap();
        let w = p.parse_word("a^-1 b a").unwrap();
        let out = right_reverse(&p, &w, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.status, Status::Diverged);
        assert!(matches!(out.divergence, Some(DivergenceEvidence::Recurrence { earlier: 0, .. })));
        let out = right_reverse(&p, &w, 1).unwrap();
        assert_eq!(out.status, Status::Diverged);
        assert_eq!(out.divergence, Some(DivergenceEvidence::Pattern { relation: 0 }));
        assert_eq!(divergence_pattern(&p, &p.parse_word("b^-1 a b").unwrap()), None);
    }

    #[test]
    fn theta_star_values() {
        let p = braid();
        let w = |s: &str| p.positive(s).unwrap();
        assert_eq!(theta_star(&p, &w("a"), &w("b"), 100).unwrap(), Some(w("b a")));
        assert_eq!(theta_star(&p, &w("a b"), &w("a b"), 100).unwrap(), Some(vec![]));
        // a^-1 a^-1 b -> a^-1 b a b^-1 a^-1 -> b a b^-1 a^-1 a b^-1 a^-1 -> b a b^-1 b^-1 a^-1
        let grid = reversing_grid(&p, &w("a a"), &w("b"), 100).unwrap().unwrap();
        let t = theta_star(&p, &w("a a"), &w("b"), 100).unwrap().unwrap();
        assert_eq!(grid.bottom_word(), t);
        assert_eq!(t, w("b a"));
        assert_eq!(grid.right_word(), w("a b b"));
    }

    #[test]
    fn stuck_without_relation() {
        let p = Presentation::monoid(&["a", "b", "c"], &[("a b", "b a")]).unwrap();
        let out = right_reverse(&p, &p.parse_word("a^-1 c").unwrap(), 10).unwrap();
        assert_eq!(out.status, Status::Stuck);
        assert_eq!(theta_star(&p, &[0], &[2], 10).unwrap(), None);
    }

    #[test]
    fn nondeterministic_alternatives() {
        let p = Presentation::monoid(
            &["a", "b", "a'", "b'"],
            &[("a b", "b a"), ("a' b'", "b' a'"), ("a a'", "b b'"), ("a' a", "b' b")],
        )
        .unwrap();
        let out = right_reverse(&p, &p.parse_word("a^-1 b").unwrap(), 100).unwrap();
        assert_eq!(out.status, Status::Terminated);
        assert_eq!(out.alternatives.len(), 2);
        let out = right_reverse(&p, &p.parse_word("a^-1 a'").unwrap(), 100).unwrap();
        assert_eq!(out.status, Status::Stuck);
    }
}
