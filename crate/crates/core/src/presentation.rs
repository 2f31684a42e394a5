//! Objects, generators, signed words and presentations, with the text format
//! parser and the structural classification of relation sets.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::reversing::ThetaTable;
use crate::rewriting::RewritingSystem;

/// Name of the implicit object when no `objects:` line is given.
pub const DEFAULT_OBJECT: &str = "•";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, inv: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inv: true }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// A path of signed letters together with its endpoints, so that the empty
/// word still knows which identity it denotes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedWord {
    pub letters: Vec<Letter>,
    pub source: usize,
    pub target: usize,
}

impl SignedWord {
    pub fn empty(object: usize) -> Self {
        SignedWord {
            letters: Vec::new(),
            source: object,
            target: object,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| !l.inv)
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|l| l.inv)
    }

    /// Generators of a positive word; `None` if some letter is negative.
    pub fn positive_gens(&self) -> Option<Vec<usize>> {
        self.letters
            .iter()
            .map(|l| if l.inv { None } else { Some(l.gen) })
            .collect()
    }

    /// Splits a word of shape `p · n⁻¹` into `(p, n)`.
    pub fn split_positive_negative(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let k = self.letters.iter().position(|l| l.inv).unwrap_or(self.len());
        if self.letters[k..].iter().any(|l| !l.inv) {
            return None;
        }
        let pos = self.letters[..k].iter().map(|l| l.gen).collect();
        let neg = self.letters[k..].iter().rev().map(|l| l.gen).collect();
        Some((pos, neg))
    }

    /// Splits a word of shape `n⁻¹ · p` into `(n, p)`.
    pub fn split_negative_positive(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let k = self.letters.iter().position(|l| !l.inv).unwrap_or(self.len());
        if self.letters[k..].iter().any(|l| l.inv) {
            return None;
        }
        let neg = self.letters[..k].iter().rev().map(|l| l.gen).collect();
        let pos = self.letters[k..].iter().map(|l| l.gen).collect();
        Some((neg, pos))
    }

    /// Formal inverse of the path.
    pub fn inverse(&self) -> Self {
        SignedWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            source: self.target,
            target: self.source,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub declared_invertible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub complemented: bool,
    pub homogeneous: bool,
    pub triangular: bool,
    pub length_reducing_confluent: bool,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    objects: Vec<String>,
    gens: Vec<Generator>,
    relations: Vec<Relation>,
    invertible: Vec<bool>,
    classification: Classification,
    theta: Option<ThetaTable>,
    theta_left: Option<ThetaTable>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.gens == other.gens
            && self.relations == other.relations
    }
}

impl Presentation {
    /// Builds a presentation from already-resolved parts, checking typing and
    /// computing the classification.
    pub fn new(objects: Vec<String>, gens: Vec<Generator>, relations: Vec<Relation>) -> Result<Self> {
        let objects = if objects.is_empty() {
            vec![DEFAULT_OBJECT.to_string()]
        } else {
            objects
        };
        let mut seen = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            if seen.insert(o.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate object `{o}`")));
            }
        }
        let mut names = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if g.source >= objects.len() || g.target >= objects.len() {
                return Err(Error::UndeclaredObject(g.name.clone()));
            }
            if names.insert(g.name.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate generator `{}`", g.name)));
            }
        }
        let mut p = Presentation {
            objects,
            gens,
            relations: Vec::new(),
            invertible: Vec::new(),
            classification: Classification::default(),
            theta: None,
            theta_left: None,
        };
        let mut checked = Vec::with_capacity(relations.len());
        for r in relations {
            checked.push(p.check_relation(r.lhs, r.rhs)?);
        }
        p.relations = checked;
        p.invertible = p.compute_invertible();
        p.classification = p.compute_classification();
        let n = p.gens.len();
        if p.classification.complemented {
            p.theta = ThetaTable::from_pairs(
                n,
                p.relations.iter().map(|r| (r.lhs.clone(), r.rhs.clone())),
            )
            .ok();
        }
        p.theta_left = ThetaTable::from_pairs(
            n,
            p.relations.iter().map(|r| {
                (
                    r.lhs.iter().rev().copied().collect(),
                    r.rhs.iter().rev().copied().collect(),
                )
            }),
        )
        .ok();
        Ok(p)
    }

    /// Single-object convenience constructor: `rels` are pairs of
    /// whitespace-separated words.
    pub fn monoid(gens: &[&str], rels: &[(&str, &str)]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|n| Generator {
                name: n.to_string(),
                source: 0,
                target: 0,
                declared_invertible: false,
            })
            .collect();
        let skeleton = Presentation::new(Vec::new(), gens, Vec::new())?;
        let mut relations = Vec::new();
        for (l, r) in rels {
            relations.push(Relation {
                lhs: skeleton.positive(l)?,
                rhs: skeleton.positive(r)?,
                source: 0,
                target: 0,
            });
        }
        Presentation::new(skeleton.objects, skeleton.gens, relations)
    }

    /// Same generators, relations replaced.
    pub fn with_relations(&self, relations: Vec<Relation>) -> Result<Self> {
        Presentation::new(self.objects.clone(), self.gens.clone(), relations)
    }

    fn check_relation(&self, lhs: Vec<usize>, rhs: Vec<usize>) -> Result<Relation> {
        let show = |w: &[usize]| self.format_word(w);
        for &g in lhs.iter().chain(rhs.iter()) {
            if g >= self.gens.len() {
                return Err(Error::UndeclaredGenerator(format!("#{g}")));
            }
        }
        if lhs.is_empty() && rhs.is_empty() {
            return Err(Error::Invalid("relation with two empty sides".into()));
        }
        let ends = |w: &[usize]| -> Result<Option<(usize, usize)>> {
            if w.is_empty() {
                return Ok(None);
            }
            let letters: Vec<Letter> = w.iter().map(|&g| Letter::pos(g)).collect();
            self.endpoints(&letters).map(Some)
        };
        let (l, r) = (ends(&lhs)?, ends(&rhs)?);
        let (source, target) = match (l, r) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Mismatch(format!("{} = {}", show(&lhs), show(&rhs))));
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        if (lhs.is_empty() || rhs.is_empty()) && source != target {
            return Err(Error::Mismatch(format!(
                "{} = {} equates a non-loop with an identity",
                show(&lhs),
                show(&rhs)
            )));
        }
        Ok(Relation {
            lhs,
            rhs,
            source,
            target,
        })
    }

    /// Source and target of a nonempty signed path, or a composability error.
    pub fn endpoints(&self, letters: &[Letter]) -> Result<(usize, usize)> {
        let ends = |l: &Letter| {
            let g = &self.gens[l.gen];
            if l.inv {
                (g.target, g.source)
            } else {
                (g.source, g.target)
            }
        };
        let first = letters
            .first()
            .ok_or_else(|| Error::Invalid("empty path has no intrinsic endpoints".into()))?;
        let (source, mut target) = ends(first);
        for l in &letters[1..] {
            let (s, t) = ends(l);
            if s != target {
                return Err(Error::Mismatch(format!(
                    "letter `{}` does not compose",
                    self.gens[l.gen].name
                )));
            }
            target = t;
        }
        Ok((source, target))
    }

    fn compute_invertible(&self) -> Vec<bool> {
        let mut inv: Vec<bool> = self.gens.iter().map(|g| g.declared_invertible).collect();
        loop {
            let mut changed = false;
            for r in &self.relations {
                for (a, b) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
                    if a.iter().all(|&g| inv[g]) {
                        for &g in b.iter() {
                            if !inv[g] {
                                inv[g] = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                return inv;
            }
        }
    }

    fn compute_classification(&self) -> Classification {
        let homogeneous = self.relations.iter().all(|r| r.lhs.len() == r.rhs.len());
        let triangular = self
            .relations
            .iter()
            .all(|r| r.lhs.len() == 1 || r.rhs.len() == 1);
        let complemented = self.complemented_conflict().is_none();
        let length_reducing_confluent = self.relations.iter().all(|r| r.lhs.len() != r.rhs.len())
            && RewritingSystem::length_reducing(self)
                .map(|rs| rs.is_confluent())
                .unwrap_or(false);
        Classification {
            complemented,
            homogeneous,
            triangular,
            length_reducing_confluent,
        }
    }

    /// The first generator pair that prevents the presentation from being
    /// right-complemented, if any.
    pub fn complemented_conflict(&self) -> Option<(usize, usize)> {
        let mut heads: HashMap<(usize, usize), usize> = HashMap::new();
        for r in &self.relations {
            let (Some(&s), Some(&t)) = (r.lhs.first(), r.rhs.first()) else {
                let g = r.lhs.first().or(r.rhs.first()).copied().unwrap_or(0);
                return Some((g, g));
            };
            if s == t {
                return Some((s, t));
            }
            let key = (s.min(t), s.max(t));
            let count = heads.entry(key).or_insert(0);
            *count += 1;
            if *count > 1 {
                return Some((s, t));
            }
        }
        None
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn classification(&self) -> Classification {
        self.classification
    }

    /// Right-complement table, present iff the presentation is complemented.
    pub fn theta(&self) -> Option<&ThetaTable> {
        self.theta.as_ref()
    }

    /// Complement table of the mirrored relations (words read backwards),
    /// present iff the presentation is left-complemented.
    pub fn theta_left(&self) -> Option<&ThetaTable> {
        self.theta_left.as_ref()
    }

    pub fn is_single_object(&self) -> bool {
        self.objects.len() == 1
    }

    /// Declared invertible, or forced invertible by a relation `w = 1`
    /// (closed under relations whose one side is made of invertible letters).
    pub fn is_invertible(&self, g: usize) -> bool {
        self.invertible[g]
    }

    pub fn has_invertibles(&self) -> bool {
        self.invertible.iter().any(|&b| b)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn gen_name(&self, g: usize) -> &str {
        &self.gens[g].name
    }

    pub fn source_of(&self, g: usize) -> usize {
        self.gens[g].source
    }

    pub fn target_of(&self, g: usize) -> usize {
        self.gens[g].target
    }

    /// The presentation with every word read backwards; left reversing is
    /// right reversing in this mirror.
    pub fn reversed(&self) -> Presentation {
        let gens = self
            .gens
            .iter()
            .map(|g| Generator {
                name: g.name.clone(),
                source: g.target,
                target: g.source,
                declared_invertible: g.declared_invertible,
            })
            .collect();
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                lhs: r.lhs.iter().rev().copied().collect(),
                rhs: r.rhs.iter().rev().copied().collect(),
                source: r.target,
                target: r.source,
            })
            .collect();
        Presentation::new(self.objects.clone(), gens, relations)
            .expect("mirror of a valid presentation is valid")
    }

    /// Parses a whitespace-separated signed word such as `a b^-1 c`; `1` or
    /// the empty string denote the identity of the single object.
    pub fn parse_word(&self, text: &str) -> Result<SignedWord> {
        let mut letters = Vec::new();
        for (col, tok) in tokens(text) {
            if tok == "1" {
                continue;
            }
            let (name, inv) = match tok.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let gen = self.gen_index(name).ok_or_else(|| {
                if valid_name(name) {
                    Error::UndeclaredGenerator(name.to_string())
                } else {
                    Error::Syntax {
                        line: 1,
                        column: col,
                        message: format!("bad token `{tok}`"),
                    }
                }
            })?;
            letters.push(Letter { gen, inv });
        }
        self.signed(letters)
    }

    /// Wraps letters into a typed word; empty words live on the single object.
    pub fn signed(&self, letters: Vec<Letter>) -> Result<SignedWord> {
        if letters.is_empty() {
            if !self.is_single_object() {
                return Err(Error::Invalid(
                    "empty word is ambiguous with several objects".into(),
                ));
            }
            return Ok(SignedWord::empty(0));
        }
        let (source, target) = self.endpoints(&letters)?;
        Ok(SignedWord {
            letters,
            source,
            target,
        })
    }

    pub fn signed_positive(&self, word: &[usize]) -> Result<SignedWord> {
        self.signed(word.iter().map(|&g| Letter::pos(g)).collect())
    }

    /// Parses a positive word.
    pub fn positive(&self, text: &str) -> Result<Vec<usize>> {
        let w = self.parse_word(text)?;
        w.positive_gens()
            .ok_or_else(|| Error::Invalid(format!("`{text}` is not a positive word")))
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&g| self.gens[g].name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_signed(&self, w: &SignedWord) -> String {
        self.format_letters(&w.letters)
    }

    pub fn format_letters(&self, letters: &[Letter]) -> String {
        if letters.is_empty() {
            return "1".into();
        }
        letters
            .iter()
            .map(|l| {
                let n = &self.gens[l.gen].name;
                if l.inv {
                    format!("{n}^-1")
                } else {
                    n.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Removes `s s⁻¹` and `s⁻¹ s` factors until none is left.
    pub fn free_reduce(&self, w: &SignedWord) -> SignedWord {
        SignedWord {
            letters: free_reduce_letters(&w.letters),
            source: w.source,
            target: w.target,
        }
    }

    /// Text form in the presentation file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let multi = !(self.objects.len() == 1 && self.objects[0] == DEFAULT_OBJECT);
        if multi {
            let _ = writeln!(out, "objects: {}", self.objects.join(", "));
        }
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                if multi {
                    format!(
                        "{}: {} -> {}",
                        g.name, self.objects[g.source], self.objects[g.target]
                    )
                } else {
                    g.name.clone()
                }
            })
            .collect();
        let _ = writeln!(out, "gens: {}", gens.join(", "));
        let inv: Vec<&str> = self
            .gens
            .iter()
            .filter(|g| g.declared_invertible)
            .map(|g| g.name.as_str())
            .collect();
        if !inv.is_empty() {
            let _ = writeln!(out, "invertible: {}", inv.join(", "));
        }
        let _ = writeln!(out, "rels:");
        for r in &self.relations {
            let _ = writeln!(out, "{} = {}", self.format_word(&r.lhs), self.format_word(&r.rhs));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_presentation(text)
    }
}

pub fn free_reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "1"
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '.'))
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter().map(move |(s, t)| (text[..s].chars().count() + 1, t))
}

/// Parses the line-oriented presentation format:
///
/// ```text
/// # comment
/// objects: x, y
/// gens: a: x -> y, b: y -> x
/// invertible: e
/// rels:
/// a b = b a
/// ```
///
/// Relations may also follow `rels:` on the same line, separated by `;`, and
/// a chain `u = v = w` stands for `u = v` and `v = w`.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut objects: Vec<String> = Vec::new();
    let mut gen_specs: Vec<(String, Option<(String, String)>, usize)> = Vec::new();
    let mut invertible: Vec<(String, usize)> = Vec::new();
    let mut rel_lines: Vec<(usize, usize, String)> = Vec::new();
    let mut in_rels = false;

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let offset = |s: &str| raw.find(s).map(|i| raw[..i].chars().count() + 1).unwrap_or(1);
        let trimmed = line.trim();
        let key = trimmed
            .split_once(':')
            .map(|(k, v)| (k.trim(), v))
            .filter(|(k, _)| matches!(*k, "objects" | "gens" | "invertible" | "rels"));
        match key {
            Some(("objects", v)) => {
                in_rels = false;
                for o in v.split(',').map(str::trim).filter(|o| !o.is_empty()) {
                    if !valid_name(o) {
                        return Err(Error::Syntax {
                            line: line_no,
                            column: offset(o),
                            message: format!("bad object name `{o}`"),
                        });
                    }
                    objects.push(o.to_string());
                }
            }
            Some(("gens", v)) => {
                in_rels = false;
                for entry in v.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                    let col = offset(entry);
                    let (name, typing) = match entry.split_once(':') {
                        Some((n, ty)) => {
                            let (s, t) = ty.split_once("->").ok_or(Error::Syntax {
                                line: line_no,
                                column: col,
                                message: format!("expected `name: source -> target`, got `{entry}`"),
                            })?;
                            (n.trim(), Some((s.trim().to_string(), t.trim().to_string())))
                        }
                        None => (entry, None),
                    };
                    if !valid_name(name) {
                        return Err(Error::Syntax {
                            line: line_no,
                            column: col,
                            message: format!("bad generator name `{name}`"),
                        });
                    }
                    gen_specs.push((name.to_string(), typing, line_no));
                }
            }
            Some(("invertible", v)) => {
                in_rels = false;
                for n in v.split(',').map(str::trim).filter(|n| !n.is_empty()) {
                    invertible.push((n.to_string(), line_no));
                }
            }
            Some(("rels", v)) => {
                in_rels = true;
                let col = raw.find(':').map(|i| i + 2).unwrap_or(1);
                for part in v.split(';') {
                    if !part.trim().is_empty() {
                        rel_lines.push((line_no, col, part.to_string()));
                    }
                }
            }
            _ if in_rels => {
                for part in line.split(';') {
                    if !part.trim().is_empty() {
                        rel_lines.push((line_no, offset(part.trim()), part.to_string()));
                    }
                }
            }
            _ => {
                return Err(Error::Syntax {
                    line: line_no,
                    column: 1,
                    message: format!("unrecognized line `{trimmed}`"),
                })
            }
        }
    }

    let object_index = |name: &str| -> Result<usize> {
        if objects.is_empty() {
            return Err(Error::UndeclaredObject(name.to_string()));
        }
        objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| Error::UndeclaredObject(name.to_string()))
    };
    let mut gens = Vec::new();
    for (name, typing, _) in &gen_specs {
        let (source, target) = match typing {
            Some((s, t)) => (object_index(s)?, object_index(t)?),
            None if objects.len() > 1 => {
                return Err(Error::Invalid(format!(
                    "generator `{name}` needs a type when several objects are declared"
                )))
            }
            None => (0, 0),
        };
        gens.push(Generator {
            name: name.clone(),
            source,
            target,
            declared_invertible: false,
        });
    }
    for (n, _) in &invertible {
        let g = gens
            .iter_mut()
            .find(|g| &g.name == n)
            .ok_or_else(|| Error::UndeclaredGenerator(n.clone()))?;
        g.declared_invertible = true;
    }
    let skeleton = Presentation::new(objects.clone(), gens.clone(), Vec::new())?;
    let mut relations = Vec::new();
    for (line, col, text) in rel_lines {
        let sides: Vec<&str> = text.split('=').collect();
        if sides.len() < 2 {
            return Err(Error::Syntax {
                line,
                column: col,
                message: format!("expected `u = v`, got `{}`", text.trim()),
            });
        }
        let mut words = Vec::new();
        for side in &sides {
            if side.trim().is_empty() {
                return Err(Error::Syntax {
                    line,
                    column: col,
                    message: "empty side (write `1` for the identity)".into(),
                });
            }
            let w = skeleton.parse_word(side).map_err(|e| match e {
                Error::Syntax { column, message, .. } => Error::Syntax {
                    line,
                    column: col + column - 1,
                    message,
                },
                other => other,
            })?;
            if !w.is_positive() {
                return Err(Error::Syntax {
                    line,
                    column: col,
                    message: "relations must be positive".into(),
                });
            }
            words.push(w.positive_gens().unwrap());
        }
        for pair in words.windows(2) {
            relations.push(Relation {
                lhs: pair[0].clone(),
                rhs: pair[1].clone(),
                source: 0,
                target: 0,
            });
        }
    }
    skeleton.with_relations(relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_readback() {
        let p = parse_presentation("gens: a,b\nrels: a b a = b a b").unwrap();
        assert_eq!(p.num_gens(), 2);
        assert_eq!(p.relations().len(), 1);
        let c = p.classification();
        assert!(c.homogeneous && c.complemented);
        assert_eq!(p.format_word(&p.relations()[0].lhs), "a b a");
    }

    #[test]
    fn invertible_letters_are_inferred() {
        let p = parse_presentation("gens: a,e\nrels: e a = a; e e = 1").unwrap();
        assert!(p.is_invertible(1));
        assert!(!p.is_invertible(0));
        let c = p.classification();
        assert!(!c.homogeneous);
        assert!(c.length_reducing_confluent);
        assert!(!c.complemented);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_presentation("rels: a b = c"),
            Err(Error::UndeclaredGenerator(_))
        ));
        assert!(matches!(
            parse_presentation("gens: a\nrels: a a"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("objects: x, y\ngens: a: x -> y, b: y -> x\nrels: a = b"),
            Err(Error::Mismatch(_))
        ));
        assert!(matches!(
            parse_presentation("gens: a: x -> x"),
            Err(Error::UndeclaredObject(_))
        ));
    }

    #[test]
    fn two_mcms_not_complemented() {
        let p = parse_presentation(
            "gens: a, b, a', b'\nrels:\na b = b a\na' b' = b' a'\na a' = b b'\na' a = b' b",
        )
        .unwrap();
        let c = p.classification();
        assert!(!c.complemented && c.homogeneous);
        assert_eq!(p.complemented_conflict(), Some((0, 1)));
    }

    #[test]
    fn chains_and_categories() {
        let p = parse_presentation("gens: a, b, c, d\nrels: a b = b c = c d = d a").unwrap();
        assert_eq!(p.relations().len(), 3);
        let q = parse_presentation(
            "objects: x, y\ngens: a: x -> y, b: y -> x, c: x -> x\nrels: a b = c",
        )
        .unwrap();
        assert_eq!(q.relations()[0].source, 0);
        assert!(q.parse_word("a a").is_err());
        let w = q.parse_word("a b c^-1").unwrap();
        assert_eq!((w.source, w.target), (0, 0));
        assert_eq!(Presentation::parse(&q.to_text()).unwrap(), q);
    }

    #[test]
    fn free_reduction() {
        let p = parse_presentation("gens: a, b").unwrap();
        let r = |s: &str| p.format_signed(&p.free_reduce(&p.parse_word(s).unwrap()));
        assert_eq!(r("a^-1 a"), "1");
        assert_eq!(r("a b^-1 b a"), "a a");
        assert_eq!(r("a b a"), "a b a");
    }
}
