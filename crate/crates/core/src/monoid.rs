//! Equality backends and the divisibility lattice of a presented monoid
//! (or category): divisibility, divisor enumeration, mcms, lcms, gcds,
//! atoms and height.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::{Letter, Presentation, SignedWord};
use crate::reversing::{
    self, completeness_check, Completeness, DivergenceEvidence, EqualityOracle, Status, DEFAULT_BUDGET,
};
use crate::rewriting::{shortlex, RewritingSystem};
use crate::weights::{grading, word_weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BackendKind {
    /// `u ≡ v` iff `u⁻¹ v` right-reverses to the empty word.
    DoubleReversing,
    /// Exhaustive class exploration; classes are finite because a balanced
    /// positive grading exists and no generator is invertible.
    HomogeneousBfs,
    /// Normal forms of a confluent shortlex rewriting system.
    ConfluentRewriting,
    /// Class exploration restricted to words of bounded length; a
    /// semi-decision that reports `Inconclusive` when the bound is hit.
    BoundedBfs,
}

impl BackendKind {
    pub fn name(self) -> &'static str {
        match self {
            BackendKind::DoubleReversing => "DoubleReversing",
            BackendKind::HomogeneousBfs => "HomogeneousBFS",
            BackendKind::ConfluentRewriting => "ConfluentRewriting",
            BackendKind::BoundedBfs => "BoundedBFS",
        }
    }
}

/// An element given by a positive word; the word is the canonical
/// representative (shortest, then lexicographically least) whenever the
/// backend provides one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub word: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.source
            .cmp(&other.source)
            .then_with(|| shortlex(&self.word, &other.word))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Element {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MonoidOptions {
    /// Step budget for reversing.
    pub max_steps: usize,
    /// Length cap for bounded class exploration.
    pub max_length: usize,
    /// Cap on the number of words or elements held by one enumeration.
    pub enumeration_cap: usize,
}

impl Default for MonoidOptions {
    fn default() -> Self {
        MonoidOptions {
            max_steps: DEFAULT_BUDGET,
            max_length: 24,
            enumeration_cap: 200_000,
        }
    }
}

/// Minimal common right-multiples found within a weight bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McmSet {
    pub elements: Vec<Element>,
    /// Weight bound of the search; `None` when the set comes from reversing
    /// and is exact.
    pub bound: Option<u64>,
    pub cap_hit: bool,
}

type Class = Arc<Vec<Vec<usize>>>;

pub struct Monoid {
    p: Presentation,
    backend: BackendKind,
    rewriting: Option<RewritingSystem>,
    grading: Option<Vec<u64>>,
    opts: MonoidOptions,
    completeness: OnceLock<Completeness>,
    classes: Mutex<HashMap<Vec<usize>, Class>>,
    layers: Mutex<HashMap<(usize, u64), Arc<Vec<Element>>>>,
}

impl std::fmt::Debug for Monoid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Monoid")
            .field("backend", &self.backend)
            .field("grading", &self.grading)
            .finish()
    }
}

impl Monoid {
    /// Picks the first applicable backend among confluent rewriting,
    /// homogeneous BFS and bounded BFS.
    pub fn new(p: Presentation) -> Self {
        Self::with_options(p, MonoidOptions::default())
    }

    pub fn with_options(p: Presentation, opts: MonoidOptions) -> Self {
        let rs = RewritingSystem::shortlex(&p);
        let g = grading(&p);
        let backend = if rs.is_confluent() {
            BackendKind::ConfluentRewriting
        } else if g.is_some() && !p.has_invertibles() {
            BackendKind::HomogeneousBfs
        } else {
            BackendKind::BoundedBfs
        };
        Self::build(p, backend, rs, g, opts)
    }

    /// Forces a backend, checking its hypotheses.
    pub fn with_backend(p: Presentation, kind: BackendKind, opts: MonoidOptions) -> Result<Self> {
        let rs = RewritingSystem::shortlex(&p);
        let g = grading(&p);
        let why = match kind {
            BackendKind::ConfluentRewriting if !rs.is_confluent() => Some("rewriting system is not confluent"),
            BackendKind::HomogeneousBfs if g.is_none() || p.has_invertibles() => {
                Some("no balanced grading, or invertible generators")
            }
            BackendKind::DoubleReversing if p.theta().is_none() || p.has_invertibles() => {
                Some("presentation not complemented, or invertible generators")
            }
            _ => None,
        };
        if let Some(w) = why {
            return Err(Error::BackendInapplicable(format!("{}: {w}", kind.name())));
        }
        if kind == BackendKind::DoubleReversing {
            let helper = Monoid::with_options(p.clone(), opts);
            match helper.completeness() {
                Completeness::Complete => {}
                other => {
                    return Err(Error::BackendInapplicable(format!(
                        "DoubleReversing: reversing not known to be complete ({other:?})"
                    )))
                }
            }
            let m = Self::build(p, kind, rs, g, opts);
            let _ = m.completeness.set(Completeness::Complete);
            return Ok(m);
        }
        Ok(Self::build(p, kind, rs, g, opts))
    }

    fn build(
        p: Presentation,
        backend: BackendKind,
        rs: RewritingSystem,
        grading: Option<Vec<u64>>,
        opts: MonoidOptions,
    ) -> Self {
        let rewriting = (backend == BackendKind::ConfluentRewriting).then_some(rs);
        Monoid {
            p,
            backend,
            rewriting,
            grading,
            opts,
            completeness: OnceLock::new(),
            classes: Mutex::new(HashMap::new()),
            layers: Mutex::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.p
    }

    pub fn backend(&self) -> BackendKind {
        self.backend
    }

    pub fn options(&self) -> MonoidOptions {
        self.opts
    }

    pub fn grading(&self) -> Option<&[u64]> {
        self.grading.as_deref()
    }

    /// Whether canonical representatives are available.
    pub fn has_canonical(&self) -> bool {
        matches!(
            self.backend,
            BackendKind::ConfluentRewriting | BackendKind::HomogeneousBfs
        )
    }

    /// Completeness of right reversing, computed once with this monoid as
    /// equality oracle.
    pub fn completeness(&self) -> &Completeness {
        self.completeness
            .get_or_init(|| completeness_check(&self.p, self, self.opts.max_steps))
    }

    fn reversing_decides(&self) -> bool {
        self.p.theta().is_some()
            && !self.p.has_invertibles()
            && matches!(self.completeness(), Completeness::Complete)
    }

    fn enumerable(&self) -> bool {
        self.grading.is_some() && (self.has_canonical() || !self.p.has_invertibles())
    }

    // ---- elements --------------------------------------------------------

    pub fn identity(&self, object: usize) -> Element {
        Element {
            word: Vec::new(),
            source: object,
            target: object,
        }
    }

    fn endpoints(&self, w: &[usize]) -> Result<(usize, usize)> {
        if w.is_empty() {
            if !self.p.is_single_object() {
                return Err(Error::Invalid("empty word is ambiguous with several objects".into()));
            }
            return Ok((0, 0));
        }
        let letters: Vec<Letter> = w.iter().map(|&g| Letter::pos(g)).collect();
        self.p.endpoints(&letters)
    }

    /// Element represented by a positive word, canonicalized when possible.
    pub fn element(&self, w: Vec<usize>) -> Result<Element> {
        let (source, target) = self.endpoints(&w)?;
        self.canonical(Element {
            word: w,
            source,
            target,
        })
    }

    /// Parses a positive word.
    pub fn elem(&self, text: &str) -> Result<Element> {
        let w = self.p.parse_word(text)?;
        let gens = w
            .positive_gens()
            .ok_or_else(|| Error::Invalid(format!("`{text}` is not a positive word")))?;
        self.canonical(Element {
            word: gens,
            source: w.source,
            target: w.target,
        })
    }

    pub fn show(&self, e: &Element) -> String {
        self.p.format_word(&e.word)
    }

    pub fn show_compact(&self, e: &Element) -> String {
        if e.word.is_empty() {
            return "1".into();
        }
        e.word.iter().map(|&g| self.p.gen_name(g)).collect::<Vec<_>>().join("")
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        if a.target != b.source {
            return Err(Error::Mismatch("product does not compose".into()));
        }
        let mut w = a.word.clone();
        w.extend_from_slice(&b.word);
        self.canonical(Element {
            word: w,
            source: a.source,
            target: b.target,
        })
    }

    pub fn mul_all(&self, es: &[Element]) -> Result<Element> {
        let mut acc = match es.first() {
            Some(e) => e.clone(),
            None => self.identity(0),
        };
        for e in &es[1..es.len().max(1)] {
            acc = self.mul(&acc, e)?;
        }
        Ok(acc)
    }

    pub fn weight(&self, e: &Element) -> Option<u64> {
        self.grading.as_ref().map(|g| word_weight(g, &e.word))
    }

    fn weight_of(&self, w: &[usize]) -> u64 {
        word_weight(self.grading.as_ref().expect("graded"), w)
    }

    pub fn is_invertible(&self, e: &Element) -> bool {
        e.word.iter().all(|&g| self.p.is_invertible(g))
    }

    /// The element with its canonical word (unchanged without a canonical
    /// form).
    pub fn canonical(&self, e: Element) -> Result<Element> {
        let word = match self.backend {
            BackendKind::ConfluentRewriting => self.rewriting.as_ref().unwrap().reduce(&e.word),
            BackendKind::HomogeneousBfs => self.class_of(&e.word)?[0].clone(),
            _ => e.word,
        };
        Ok(Element { word, ..e })
    }

    // ---- equality --------------------------------------------------------

    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool> {
        if a.source != b.source || a.target != b.target {
            return Ok(false);
        }
        if a.word == b.word {
            return Ok(true);
        }
        match self.backend {
            BackendKind::ConfluentRewriting => {
                let rs = self.rewriting.as_ref().unwrap();
                Ok(rs.reduce(&a.word) == rs.reduce(&b.word))
            }
            BackendKind::HomogeneousBfs => Ok(self.class_of(&a.word)?[0] == self.class_of(&b.word)?[0]),
            BackendKind::DoubleReversing => self.equal_by_reversing(a, b),
            BackendKind::BoundedBfs => self.equal_bounded(&a.word, &b.word),
        }
    }

    fn equal_by_reversing(&self, a: &Element, b: &Element) -> Result<bool> {
        let w = neg_pos(a.source, &a.word, &b.word);
        let out = reversing::right_reverse(&self.p, &w, self.opts.max_steps)?;
        match out.status {
            Status::Terminated => Ok(out.word.is_empty()),
            Status::Stuck => Ok(false),
            Status::Diverged => Err(Error::Diverged(out.steps)),
        }
    }

    /// One-letter relation moves from `w`, both directions.
    fn neighbours(&self, w: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for r in self.p.relations() {
            for (from, to) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
                if from.is_empty() {
                    for i in 0..=w.len() {
                        let obj = if i < w.len() {
                            self.p.source_of(w[i])
                        } else if i > 0 {
                            self.p.target_of(w[i - 1])
                        } else {
                            0
                        };
                        if obj == r.source {
                            out.push([&w[..i], to.as_slice(), &w[i..]].concat());
                        }
                    }
                } else if from.len() <= w.len() {
                    for i in 0..=w.len() - from.len() {
                        if w[i..i + from.len()] == from[..] {
                            out.push([&w[..i], to.as_slice(), &w[i + from.len()..]].concat());
                        }
                    }
                }
            }
        }
        out
    }

    /// Full equivalence class of a word (graded presentations without
    /// invertible generators), sorted shortlex; memoized.
    fn class_of(&self, w: &[usize]) -> Result<Class> {
        if let Some(c) = self.classes.lock().unwrap().get(w) {
            return Ok(c.clone());
        }
        if self.grading.is_none() || self.p.has_invertibles() {
            return Err(Error::BackendInapplicable(
                "class enumeration needs a grading and no invertible generators".into(),
            ));
        }
        let mut seen: HashSet<Vec<usize>> = HashSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbours(&x) {
                if seen.insert(y.clone()) {
                    if seen.len() > self.opts.enumeration_cap {
                        return Err(Error::CapExceeded(format!(
                            "equivalence class larger than {}",
                            self.opts.enumeration_cap
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut members: Vec<Vec<usize>> = seen.into_iter().collect();
        members.sort_by(|a, b| shortlex(a, b));
        let class = Arc::new(members);
        let mut memo = self.classes.lock().unwrap();
        for m in class.iter() {
            memo.insert(m.clone(), class.clone());
        }
        Ok(class)
    }

    fn equal_bounded(&self, u: &[usize], v: &[usize]) -> Result<bool> {
        let cap = self.opts.max_length.max(u.len()).max(v.len());
        let mut seen: HashSet<Vec<usize>> = HashSet::from([u.to_vec()]);
        let mut queue = VecDeque::from([u.to_vec()]);
        let mut truncated = false;
        while let Some(x) = queue.pop_front() {
            if x == v {
                return Ok(true);
            }
            for y in self.neighbours(&x) {
                if y.len() > cap {
                    truncated = true;
                    continue;
                }
                if seen.insert(y.clone()) {
                    if seen.len() > self.opts.enumeration_cap {
                        return Err(Error::Inconclusive("bounded search exceeded its cap".into()));
                    }
                    queue.push_back(y);
                }
            }
        }
        if truncated {
            Err(Error::Inconclusive(format!(
                "no derivation within length {cap}"
            )))
        } else {
            Ok(false)
        }
    }

    /// Equality up to right-multiplication by an invertible element.
    pub fn eqir(&self, a: &Element, b: &Element) -> Result<bool> {
        if a.source != b.source {
            return Ok(false);
        }
        if !self.p.has_invertibles() {
            return self.equal(a, b);
        }
        for e in self.units(b.target)?.iter() {
            if e.target == a.target && self.equal(&self.mul(b, e)?, a)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    // ---- invertibles and graded layers -----------------------------------

    /// The invertible elements starting at `object`.
    pub fn units(&self, object: usize) -> Result<Arc<Vec<Element>>> {
        self.layer(object, 0)
    }

    /// Elements of weight exactly `k` starting at `object`.
    pub fn layer(&self, object: usize, k: u64) -> Result<Arc<Vec<Element>>> {
        if let Some(l) = self.layers.lock().unwrap().get(&(object, k)) {
            return Ok(l.clone());
        }
        let Some(g) = self.grading.clone() else {
            return Err(Error::NotNoetherian("no balanced grading".into()));
        };
        if !self.enumerable() {
            return Err(Error::BackendInapplicable(
                "enumeration needs canonical forms when generators are invertible".into(),
            ));
        }
        let result: Vec<Element> = if k == 0 {
            let mut set: BTreeSet<Element> = BTreeSet::from([self.identity(object)]);
            let mut queue = VecDeque::from([self.identity(object)]);
            while let Some(x) = queue.pop_front() {
                for s in 0..self.p.num_gens() {
                    if self.p.is_invertible(s) && self.p.source_of(s) == x.target {
                        let y = self.mul(&x, &self.gen_element(s))?;
                        if set.insert(y.clone()) {
                            if set.len() > self.opts.enumeration_cap {
                                return Err(Error::CapExceeded("unit group too large".into()));
                            }
                            queue.push_back(y);
                        }
                    }
                }
            }
            set.into_iter().collect()
        } else {
            let mut set: BTreeSet<Element> = BTreeSet::new();
            for s in 0..self.p.num_gens() {
                let ws = g[s];
                if ws == 0 || ws > k {
                    continue;
                }
                let prev = self.layer(object, k - ws)?;
                for h in prev.iter() {
                    if h.target != self.p.source_of(s) {
                        continue;
                    }
                    let hs = self.mul(h, &self.gen_element(s))?;
                    for e in self.units(hs.target)?.iter() {
                        set.insert(self.mul(&hs, e)?);
                    }
                    if set.len() > self.opts.enumeration_cap {
                        return Err(Error::CapExceeded(format!("layer {k} too large")));
                    }
                }
            }
            set.into_iter().collect()
        };
        let arc = Arc::new(result);
        self.layers.lock().unwrap().insert((object, k), arc.clone());
        Ok(arc)
    }

    fn gen_element(&self, s: usize) -> Element {
        Element {
            word: vec![s],
            source: self.p.source_of(s),
            target: self.p.target_of(s),
        }
    }

    pub fn generators(&self) -> Result<Vec<Element>> {
        (0..self.p.num_gens()).map(|s| self.element(vec![s])).collect()
    }

    // ---- divisibility ----------------------------------------------------

    /// Some `h` with `a h ≡ b`.
    pub fn left_quotient(&self, a: &Element, b: &Element) -> Result<Option<Element>> {
        if a.source != b.source {
            return Ok(None);
        }
        if self.reversing_decides() {
            let w = neg_pos(a.source, &a.word, &b.word);
            let out = reversing::right_reverse(&self.p, &w, self.opts.max_steps)?;
            return match out.status {
                Status::Terminated => {
                    let (v1, u1) = out.word.split_positive_negative().expect("terminal shape");
                    if u1.is_empty() {
                        Ok(Some(self.element_from(a.target, v1)?))
                    } else {
                        Ok(None)
                    }
                }
                Status::Stuck => Ok(None),
                Status::Diverged if out.divergence.is_some() => Ok(None),
                Status::Diverged => Err(Error::Inconclusive(format!(
                    "reversing diverged after {} steps",
                    out.steps
                ))),
            };
        }
        if self.grading.is_some() && !self.p.has_invertibles() {
            let wa = self.weight_of(&a.word);
            let ca = self.canonical(a.clone())?.word;
            for c in self.class_of(&b.word)?.iter() {
                let mut acc = 0;
                for k in 0..=c.len() {
                    if acc == wa && self.class_of(&c[..k])?[0] == ca {
                        return Ok(Some(self.element_from(a.target, c[k..].to_vec())?));
                    }
                    if k < c.len() {
                        acc += self.weight_of(&c[k..k + 1]);
                    }
                    if acc > wa {
                        break;
                    }
                }
            }
            return Ok(None);
        }
        if self.enumerable() {
            let (wa, wb) = (self.weight_of(&a.word), self.weight_of(&b.word));
            if wa > wb {
                return Ok(None);
            }
            for h in self.layer(a.target, wb - wa)?.iter() {
                if self.equal(&self.mul(a, h)?, b)? {
                    return Ok(Some(h.clone()));
                }
            }
            return Ok(None);
        }
        Err(Error::Inconclusive("no divisibility procedure applies".into()))
    }

    /// Some `h` with `h a ≡ b`.
    pub fn right_quotient(&self, a: &Element, b: &Element) -> Result<Option<Element>> {
        if a.target != b.target {
            return Ok(None);
        }
        if self.grading.is_some() && !self.p.has_invertibles() {
            let wa = self.weight_of(&a.word);
            let ca = self.canonical(a.clone())?.word;
            for c in self.class_of(&b.word)?.iter() {
                let mut acc = 0;
                for k in (0..=c.len()).rev() {
                    if acc == wa && self.class_of(&c[k..])?[0] == ca {
                        return Ok(Some(self.element_from(b.source, c[..k].to_vec())?));
                    }
                    if k > 0 {
                        acc += self.weight_of(&c[k - 1..k]);
                    }
                    if acc > wa {
                        break;
                    }
                }
            }
            return Ok(None);
        }
        if self.enumerable() {
            let (wa, wb) = (self.weight_of(&a.word), self.weight_of(&b.word));
            if wa > wb {
                return Ok(None);
            }
            for h in self.layer(b.source, wb - wa)?.iter() {
                if h.target == a.source && self.equal(&self.mul(h, a)?, b)? {
                    return Ok(Some(h.clone()));
                }
            }
            return Ok(None);
        }
        let w = pos_neg(b.source, &b.word, &a.word);
        let out = reversing::left_reverse(&self.p, &w, self.opts.max_steps)?;
        if out.status == Status::Terminated {
            let (u1, v1) = out.word.split_negative_positive().expect("terminal shape");
            if u1.is_empty() {
                return Ok(Some(self.element_from(b.source, v1)?));
            }
        }
        Err(Error::Inconclusive("no right-divisibility procedure applies".into()))
    }

    fn element_from(&self, object: usize, w: Vec<usize>) -> Result<Element> {
        if w.is_empty() {
            return Ok(self.identity(object));
        }
        self.element(w)
    }

    pub fn left_divides(&self, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.left_quotient(a, b)?.is_some())
    }

    pub fn right_divides(&self, a: &Element, b: &Element) -> Result<bool> {
        Ok(self.right_quotient(a, b)?.is_some())
    }

    /// Every ≡-class of left-divisors of `b`, sorted.
    pub fn left_divisors(&self, b: &Element) -> Result<Vec<Element>> {
        self.divisors(b, true)
    }

    /// Every ≡-class of right-divisors of `b`, sorted.
    pub fn right_divisors(&self, b: &Element) -> Result<Vec<Element>> {
        self.divisors(b, false)
    }

    fn divisors(&self, b: &Element, left: bool) -> Result<Vec<Element>> {
        if self.grading.is_none() {
            return Err(Error::NotNoetherian("divisor enumeration needs a grading".into()));
        }
        let mut set = BTreeSet::new();
        if !self.p.has_invertibles() {
            for c in self.class_of(&b.word)?.iter() {
                for k in 0..=c.len() {
                    let (w, obj) = if left {
                        (c[..k].to_vec(), b.source)
                    } else {
                        (c[k..].to_vec(), b.target)
                    };
                    set.insert(self.element_from(obj, w)?);
                }
            }
            return Ok(set.into_iter().collect());
        }
        let wb = self.weight_of(&b.word);
        for k in 0..=wb {
            let obj = if left { b.source } else { b.target };
            let candidates: Vec<Element> = if left {
                self.layer(obj, k)?.iter().cloned().collect()
            } else {
                self.all_ending_at(obj, k)?
            };
            for h in candidates {
                let ok = if left {
                    self.left_divides(&h, b)?
                } else {
                    self.right_divides(&h, b)?
                };
                if ok {
                    set.insert(h);
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    fn all_ending_at(&self, object: usize, k: u64) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for x in 0..self.p.objects().len() {
            out.extend(self.layer(x, k)?.iter().filter(|e| e.target == object).cloned());
        }
        Ok(out)
    }

    /// Keeps one representative (the least) per =̃-class.
    pub fn eqir_classes(&self, xs: &[Element]) -> Result<Vec<Element>> {
        let mut sorted: Vec<Element> = xs.to_vec();
        sorted.sort();
        let mut out: Vec<Element> = Vec::new();
        for x in sorted {
            let mut dup = false;
            for y in &out {
                if self.eqir(&x, y)? {
                    dup = true;
                    break;
                }
            }
            if !dup {
                out.push(x);
            }
        }
        Ok(out)
    }

    // ---- common multiples -----------------------------------------------

    /// Right-multiples of `a` of weight at most `bound` (graded monoids).
    pub fn right_multiples(&self, a: &Element, bound: u64) -> Result<(Vec<Element>, bool)> {
        let wa = self.weight_of(&a.word);
        let mut set = BTreeSet::new();
        let mut cap_hit = false;
        for k in 0..=bound.saturating_sub(wa) {
            if bound < wa {
                break;
            }
            match self.layer(a.target, k) {
                Ok(l) => {
                    for h in l.iter() {
                        set.insert(self.mul(a, h)?);
                    }
                }
                Err(Error::CapExceeded(_)) => {
                    cap_hit = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        Ok((set.into_iter().collect(), cap_hit))
    }

    /// Common right-multiples of `a` and `b` of weight at most `bound`.
    pub fn common_right_multiples(&self, a: &Element, b: &Element, bound: u64) -> Result<(Vec<Element>, bool)> {
        let (ms, cap_hit) = self.right_multiples(a, bound)?;
        let mut out = Vec::new();
        for m in ms {
            if self.left_divides(b, &m)? {
                out.push(m);
            }
        }
        Ok((out, cap_hit))
    }

    fn default_bound(&self, a: &Element, b: &Element) -> u64 {
        self.weight_of(&a.word) + self.weight_of(&b.word)
    }

    /// Reversing-based common multiple: `Ok(Some(Some(lcm)))`, `Ok(Some(None))`
    /// for a certified absence, `Ok(None)` when reversing decides nothing.
    fn lcm_by_reversing(&self, a: &Element, b: &Element) -> Result<Option<Option<Element>>> {
        if !self.reversing_decides() || a.source != b.source {
            return Ok(None);
        }
        let w = neg_pos(a.source, &a.word, &b.word);
        let out = reversing::right_reverse(&self.p, &w, self.opts.max_steps)?;
        Ok(match out.status {
            Status::Terminated => {
                let (v1, _) = out.word.split_positive_negative().expect("terminal shape");
                let mut w = a.word.clone();
                w.extend(v1);
                Some(Some(self.element_from(a.source, w)?))
            }
            Status::Stuck => Some(None),
            Status::Diverged => match out.divergence {
                Some(DivergenceEvidence::Recurrence { .. }) | Some(DivergenceEvidence::Pattern { .. }) => Some(None),
                None => None,
            },
        })
    }

    /// Minimal common right-multiples within `bound` (default: sum of the
    /// weights), one representative per =̃-class.
    pub fn right_mcms(&self, a: &Element, b: &Element, bound: Option<u64>) -> Result<McmSet> {
        if let Some(r) = self.lcm_by_reversing(a, b)? {
            return Ok(McmSet {
                elements: r.into_iter().collect(),
                bound: None,
                cap_hit: false,
            });
        }
        if !self.enumerable() {
            return Err(Error::Inconclusive("no mcm procedure applies".into()));
        }
        let bound = bound.unwrap_or_else(|| self.default_bound(a, b));
        let (cms, cap_hit) = self.common_right_multiples(a, b, bound)?;
        let mut minimal = Vec::new();
        for m in &cms {
            let mut is_min = true;
            for m2 in &cms {
                if m2 != m && self.left_divides(m2, m)? && !self.left_divides(m, m2)? {
                    is_min = false;
                    break;
                }
            }
            if is_min {
                minimal.push(m.clone());
            }
        }
        Ok(McmSet {
            elements: self.eqir_classes(&minimal)?,
            bound: Some(bound),
            cap_hit,
        })
    }

    /// Right-lcm; `None` when no common right-multiple exists (within the
    /// default bound for enumeration backends), `NotUnique` when several
    /// non-equivalent mcms exist.
    pub fn right_lcm(&self, a: &Element, b: &Element) -> Result<Option<Element>> {
        if let Some(r) = self.lcm_by_reversing(a, b)? {
            return Ok(r);
        }
        let mcms = self.right_mcms(a, b, None)?;
        match mcms.elements.len() {
            0 => Ok(None),
            1 => {
                let m = mcms.elements[0].clone();
                let bound = self.weight_of(&m.word) + 2;
                let (cms, _) = self.common_right_multiples(a, b, bound)?;
                for c in &cms {
                    if !self.left_divides(&m, c)? {
                        return Err(Error::NotUnique(format!(
                            "{} is a common multiple not above the mcm {}",
                            self.show(c),
                            self.show(&m)
                        )));
                    }
                }
                Ok(Some(m))
            }
            _ => Err(Error::NotUnique(format!(
                "{} right-mcms: {}",
                mcms.elements.len(),
                mcms.elements.iter().map(|e| self.show(e)).collect::<Vec<_>>().join(", ")
            ))),
        }
    }

    fn maximal(&self, xs: &[Element], left: bool) -> Result<Vec<Element>> {
        let div = |x: &Element, y: &Element| {
            if left {
                self.left_divides(x, y)
            } else {
                self.right_divides(x, y)
            }
        };
        let mut out = Vec::new();
        for x in xs {
            let mut is_max = true;
            for y in xs {
                if y != x && div(x, y)? && !div(y, x)? {
                    is_max = false;
                    break;
                }
            }
            if is_max {
                out.push(x.clone());
            }
        }
        Ok(out)
    }

    fn intersect(&self, xs: Vec<Element>, ys: &[Element]) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for x in xs {
            let mut found = false;
            for y in ys {
                if self.equal(&x, y)? {
                    found = true;
                    break;
                }
            }
            if found {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Greatest common left-divisor, unique up to =̃.
    pub fn left_gcd(&self, a: &Element, b: &Element) -> Result<Element> {
        let common = self.intersect(self.left_divisors(a)?, &self.left_divisors(b)?)?;
        let max = self.eqir_classes(&self.maximal(&common, true)?)?;
        match max.as_slice() {
            [g] => Ok(g.clone()),
            _ => Err(Error::NotUnique(format!("{} maximal common left-divisors", max.len()))),
        }
    }

    /// Greatest common right-divisor by divisor intersection.
    pub fn right_gcd(&self, a: &Element, b: &Element) -> Result<Element> {
        let common = self.intersect(self.right_divisors(a)?, &self.right_divisors(b)?)?;
        let max = self.maximal(&common, false)?;
        let mut reps: Vec<Element> = Vec::new();
        for x in max {
            let mut dup = false;
            for y in &reps {
                if self.right_divides(&x, y)? && self.right_divides(y, &x)? {
                    dup = true;
                }
            }
            if !dup {
                reps.push(x);
            }
        }
        match reps.as_slice() {
            [g] => Ok(g.clone()),
            _ => Err(Error::NotUnique(format!("{} maximal common right-divisors", reps.len()))),
        }
    }

    /// Right-gcd of `f` and `g` from a common left-multiple `f' g = g' f`:
    /// with `f' g'' = g' f''` the right-lcm of `f'` and `g'`, the element `h`
    /// such that `g = g'' h` is a right-gcd, and `f = f'' h`.
    pub fn right_gcd_via_lcm(
        &self,
        f: &Element,
        g: &Element,
        f1: &Element,
        g1: &Element,
    ) -> Result<Element> {
        if !self.equal(&self.mul(f1, g)?, &self.mul(g1, f)?)? {
            return Err(Error::NoCommonLeftMultiple);
        }
        let m = self
            .right_lcm(f1, g1)?
            .ok_or(Error::NoCommonLeftMultiple)?;
        let g2 = self.left_quotient(f1, &m)?.expect("lcm is a multiple");
        let h = self
            .left_quotient(&g2, g)?
            .ok_or_else(|| Error::Inconclusive("lcm does not divide the common multiple".into()))?;
        Ok(h)
    }

    // ---- atoms and height -----------------------------------------------

    fn counting_grading(&self) -> bool {
        self.grading.as_ref().is_some_and(|g| {
            g.iter()
                .enumerate()
                .all(|(s, &w)| w == u64::from(!self.p.is_invertible(s)))
        })
    }

    /// Non-invertible elements admitting no decomposition into two
    /// non-invertible elements.
    pub fn atoms(&self) -> Result<Vec<Element>> {
        if self.counting_grading() {
            let mut out = BTreeSet::new();
            for x in 0..self.p.objects().len() {
                out.extend(self.layer(x, 1)?.iter().cloned());
            }
            return Ok(out.into_iter().collect());
        }
        if self.grading.is_some() && !self.p.has_invertibles() {
            let mut out = BTreeSet::new();
            for s in 0..self.p.num_gens() {
                if self.class_of(&[s])?.iter().all(|w| w.len() == 1) {
                    out.insert(self.element(vec![s])?);
                }
            }
            return Ok(out.into_iter().collect());
        }
        Err(Error::NotNoetherian("atoms need a balanced grading".into()))
    }

    /// Maximal number of non-invertible factors in a decomposition.
    pub fn height(&self, e: &Element) -> Result<u64> {
        if self.counting_grading() {
            return Ok(self.weight_of(&e.word));
        }
        if self.grading.is_some() && !self.p.has_invertibles() {
            return Ok(self.class_of(&e.word)?.iter().map(|w| w.len() as u64).max().unwrap_or(0));
        }
        Err(Error::NotNoetherian("height needs a balanced grading".into()))
    }
}

fn neg_pos(object: usize, u: &[usize], v: &[usize]) -> SignedWord {
    SignedWord {
        letters: u
            .iter()
            .rev()
            .map(|&g| Letter::neg(g))
            .chain(v.iter().map(|&g| Letter::pos(g)))
            .collect(),
        source: object,
        target: object,
    }
}

fn pos_neg(object: usize, v: &[usize], u: &[usize]) -> SignedWord {
    SignedWord {
        letters: v
            .iter()
            .map(|&g| Letter::pos(g))
            .chain(u.iter().rev().map(|&g| Letter::neg(g)))
            .collect(),
        source: object,
        target: object,
    }
}

impl EqualityOracle for Monoid {
    fn oracle_name(&self) -> &'static str {
        self.backend.name()
    }

    fn words_equal(&self, source: usize, u: &[usize], v: &[usize]) -> Result<bool> {
        let a = self.element_from(source, u.to_vec())?;
        let b = self.element_from(source, v.to_vec())?;
        self.equal(&a, &b)
    }

    fn left_quotient_word(&self, source: usize, u: &[usize], v: &[usize]) -> Result<Option<Vec<usize>>> {
        let a = self.element_from(source, u.to_vec())?;
        let b = self.element_from(source, v.to_vec())?;
        Ok(self.left_quotient(&a, &b)?.map(|e| e.word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid() -> Monoid {
        Monoid::new(Presentation::monoid(&["a", "b"], &[("a b a", "b a b")]).unwrap())
    }

    fn two_mcms() -> Monoid {
        Monoid::new(
            Presentation::monoid(
                &["a", "b", "a'", "b'"],
                &[("a b", "b a"), ("a' b'", "b' a'"), ("a a'", "b b'"), ("a' a", "b' b")],
            )
            .unwrap(),
        )
    }

    fn absorbing_unit() -> Monoid {
        Monoid::new(Presentation::monoid(&["a", "e"], &[("e a", "a"), ("e e", "1")]).unwrap())
    }

    #[test]
    fn backends_selected() {
        assert_eq!(braid().backend(), BackendKind::HomogeneousBfs);
        assert_eq!(absorbing_unit().backend(), BackendKind::ConfluentRewriting);
        let p = Presentation::monoid(&["a", "b"], &[("a", "b b a b")]).unwrap();
        assert_eq!(Monoid::new(p).backend(), BackendKind::BoundedBfs);
    }

    #[test]
    fn equality_examples() {
        let m = braid();
        assert!(m.equal(&m.elem("a b a").unwrap(), &m.elem("b a b").unwrap()).unwrap());
        let m = absorbing_unit();
        assert!(m.equal(&m.elem("e a").unwrap(), &m.elem("a").unwrap()).unwrap());
        assert!(!m.equal(&m.elem("a e").unwrap(), &m.elem("a").unwrap()).unwrap());
        let m = two_mcms();
        assert!(m
            .equal(&m.elem("a a b' a' a'").unwrap(), &m.elem("a b a' b' b'").unwrap())
            .unwrap());
    }

    #[test]
    fn double_reversing_backend() {
        let p = Presentation::monoid(&["a", "b"], &[("a b a", "b a b")]).unwrap();
        let m = Monoid::with_backend(p, BackendKind::DoubleReversing, MonoidOptions::default()).unwrap();
        assert!(m.equal(&m.elem("a b a b").unwrap(), &m.elem("b a b b").unwrap()).unwrap());
        assert!(!m.equal(&m.elem("a b").unwrap(), &m.elem("b a").unwrap()).unwrap());
    }

    #[test]
    fn divisors() {
        let m = braid();
        let d = m.left_divisors(&m.elem("a b a").unwrap()).unwrap();
        let shown: Vec<String> = d.iter().map(|e| m.show_compact(e)).collect();
        assert_eq!(shown, ["1", "a", "b", "ab", "ba", "aba"]);
        assert_eq!(m.left_divisors(&m.elem("1").unwrap()).unwrap().len(), 1);
        assert!(m.left_divides(&m.elem("a").unwrap(), &m.elem("a b a").unwrap()).unwrap());
        let m10 = Monoid::new(
            Presentation::monoid(&["a", "b", "c", "d"], &[("a b", "b c"), ("b c", "c d"), ("c d", "d a")]).unwrap(),
        );
        let d = m10.left_divisors(&m10.elem("a b").unwrap()).unwrap();
        let shown: Vec<String> = d.iter().map(|e| m10.show_compact(e)).collect();
        assert_eq!(shown, ["1", "a", "b", "c", "d", "ab"]);
    }

    #[test]
    fn mcms_and_lcms() {
        let m = two_mcms();
        let e = |s: &str| m.elem(s).unwrap();
        let mcms = m.right_mcms(&e("a"), &e("b"), None).unwrap();
        let shown: Vec<String> = mcms.elements.iter().map(|x| m.show(x)).collect();
        assert_eq!(shown, ["a b", "a a'"]);
        assert!(matches!(m.right_lcm(&e("a"), &e("b")), Err(Error::NotUnique(_))));
        assert!(m.right_mcms(&e("a"), &e("a'"), None).unwrap().elements.is_empty());
        assert_eq!(m.right_mcms(&e("a"), &e("1"), None).unwrap().elements, vec![e("a")]);
        let b = braid();
        let e = |s: &str| b.elem(s).unwrap();
        assert_eq!(b.right_lcm(&e("a"), &e("b")).unwrap(), Some(e("a b a")));
        assert_eq!(b.right_lcm(&e("a b"), &e("a b")).unwrap(), Some(e("a b")));
    }

    #[test]
    fn gcds() {
        let m = braid();
        let e = |s: &str| m.elem(s).unwrap();
        assert_eq!(m.left_gcd(&e("a b"), &e("b a")).unwrap(), e("1"));
        assert_eq!(m.left_gcd(&e("a b a"), &e("a b")).unwrap(), e("a b"));
        assert_eq!(m.right_gcd(&e("a b"), &e("a a b")).unwrap(), e("a b"));
        // f' g = g' f with f = a b, g = b a: (a)(b a)... use f' = b, g' = a:
        // b · (b a)? pick f = b, g = a, f' = a b, g' = b a: a b a = b a b
        let h = m.right_gcd_via_lcm(&e("b"), &e("a"), &e("a b"), &e("b a")).unwrap();
        assert_eq!(h, m.right_gcd(&e("b"), &e("a")).unwrap());
    }

    #[test]
    fn atoms_and_height() {
        let m = braid();
        let atoms: Vec<String> = m.atoms().unwrap().iter().map(|x| m.show(x)).collect();
        assert_eq!(atoms, ["a", "b"]);
        assert_eq!(m.height(&m.elem("a b a").unwrap()).unwrap(), 3);
        let m = absorbing_unit();
        let atoms: Vec<String> = m.atoms().unwrap().iter().map(|x| m.show(x)).collect();
        assert_eq!(atoms, ["a", "a e"]);
        let germ = Monoid::new(Presentation::monoid(&["x", "y", "d"], &[("x y", "d")]).unwrap());
        let atoms: Vec<String> = germ.atoms().unwrap().iter().map(|x| germ.show(x)).collect();
        assert_eq!(atoms, ["x", "y"]);
        assert_eq!(germ.height(&germ.elem("d").unwrap()).unwrap(), 2);
    }

    #[test]
    fn units_and_eqir() {
        let m = absorbing_unit();
        assert_eq!(m.units(0).unwrap().len(), 2);
        assert!(m.eqir(&m.elem("a e").unwrap(), &m.elem("a").unwrap()).unwrap());
        assert!(!m.eqir(&m.elem("a a").unwrap(), &m.elem("a").unwrap()).unwrap());
    }

    #[test]
    fn completeness_of_fixtures() {
        assert_eq!(braid().completeness(), &Completeness::Complete);
        assert_eq!(two_mcms().completeness(), &Completeness::Complete);
        let p = Presentation::monoid(&["a", "b"], &[("a", "a b")]).unwrap();
        assert!(matches!(Monoid::new(p).completeness(), Completeness::Unknown(_)));
    }
}
