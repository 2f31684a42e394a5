//! RC-systems `(X, ◁)` and their structure monoids.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::monoid::Monoid;
use crate::presentation::{Generator, Presentation, Relation};

/// Finite set with a total operation; `op[a][b] = a◁b` (row ◁ column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcSystem {
    labels: Vec<String>,
    op: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RcReport {
    pub rc_law: bool,
    pub left_translations_bijective: bool,
    pub quasigroup: bool,
    /// First triple `(a, b, c)` violating `(a◁b)◁(a◁c) = (b◁a)◁(b◁c)`.
    pub law_failure: Option<[usize; 3]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleBijectivity {
    /// `a ↦ a◁a` is a bijection.
    #[serde(rename = "doubleBij")]
    pub small: bool,
    /// `(a, b) ↦ (a◁b, b◁a)` is a bijection.
    #[serde(rename = "DoubleBij")]
    pub big: bool,
}

impl RcSystem {
    pub fn new(labels: Vec<String>, op: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if op.len() != n || op.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Malformed("operation table must be a total square table on the carrier".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Malformed(format!("duplicate label `{l}`")));
            }
        }
        Ok(RcSystem { labels, op })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        RcSystem {
            labels: (0..n).map(|i| i.to_string()).collect(),
            op: (0..n).map(|a| (0..n).map(|b| f(a, b) % n).collect()).collect(),
        }
    }

    /// `Z/n` with `a◁b = b+1`.
    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |_, b| b + 1)
    }

    /// `a◁b = b`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_, b| b)
    }

    /// CSV with header row and column of labels; cell `(r, s)` is `r◁s`.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let rows: Vec<Vec<&str>> = text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|l| l.split(',').map(str::trim).collect())
            .collect();
        let Some((header, body)) = rows.split_first() else {
            return Err(Error::Malformed("empty table".into()));
        };
        let labels: Vec<String> = header[1..].iter().map(|s| s.to_string()).collect();
        if body.len() != labels.len() {
            return Err(Error::Malformed(format!("{} rows for {} labels", body.len(), labels.len())));
        }
        let idx = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::Malformed(format!("unknown entry `{s}`")))
        };
        let mut op = Vec::new();
        for (i, row) in body.iter().enumerate() {
            if row.len() != labels.len() + 1 || row[0] != labels[i] {
                return Err(Error::Malformed(format!("bad row {}", i + 1)));
            }
            op.push(row[1..].iter().map(|c| idx(c)).collect::<Result<Vec<_>>>()?);
        }
        RcSystem::new(labels, op)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("◁,{}\n", self.labels.join(","));
        for (a, row) in self.op.iter().enumerate() {
            out.push_str(&self.labels[a]);
            for &v in row {
                out.push(',');
                out.push_str(&self.labels[v]);
            }
            out.push('\n');
        }
        out
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Invalid(format!("no element `{label}`")))
    }

    /// `a◁b`.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a][b]
    }

    pub fn validate(&self) -> RcReport {
        let n = self.len();
        let mut law_failure = None;
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.op(self.op(a, b), self.op(a, c)) != self.op(self.op(b, a), self.op(b, c)) {
                        law_failure = Some([a, b, c]);
                        break 'outer;
                    }
                }
            }
        }
        let bij = self.op.iter().all(|row| is_permutation(row));
        RcReport {
            rc_law: law_failure.is_none(),
            left_translations_bijective: bij,
            quasigroup: law_failure.is_none() && bij,
            law_failure,
        }
    }

    pub fn double_bijectivity(&self) -> DoubleBijectivity {
        let n = self.len();
        let small: Vec<usize> = (0..n).map(|a| self.op(a, a)).collect();
        let mut hit = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                hit[self.op(a, b) * n + self.op(b, a)] = true;
            }
        }
        DoubleBijectivity {
            small: is_permutation(&small),
            big: hit.iter().all(|&h| h),
        }
    }

    fn generator_names(&self) -> Vec<String> {
        let valid = |s: &str| s != "1" && !s.is_empty() && s.chars().all(|c| c.is_alphabetic() || c == '_');
        if self.labels.iter().all(|l| valid(l)) {
            self.labels.clone()
        } else {
            self.labels.iter().map(|l| format!("x{l}")).collect()
        }
    }

    /// Generators `X` (labels not usable as names get an `x` prefix) and
    /// relations `r·(r◁s) = s·(s◁r)` for `r < s`.
    pub fn structure_presentation(&self) -> Result<Presentation> {
        let gens = self
            .generator_names()
            .into_iter()
            .map(|name| Generator {
                name,
                source: 0,
                target: 0,
                declared_invertible: false,
            })
            .collect();
        let mut relations = Vec::new();
        for r in 0..self.len() {
            for s in r + 1..self.len() {
                relations.push(Relation {
                    lhs: vec![r, self.op(r, s)],
                    rhs: vec![s, self.op(s, r)],
                    source: 0,
                    target: 0,
                });
            }
        }
        Presentation::new(Vec::new(), gens, relations)
    }

    /// `f\t` for a word `f` over `X`; `None` stands for `1`.
    pub fn complement(&self, f: &[usize], t: usize) -> Option<usize> {
        f.iter().try_fold(t, |acc, &s| (acc != s).then(|| self.op(s, acc)))
    }

    /// `Δ_I` built as `Δ_{J∪{s}} = Δ_J · (Δ_J\s)`. Fails if some
    /// complement is `1` for a fresh `s`, which would make `|Δ_I| < |I|`.
    pub fn delta_i(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let mut d: Vec<usize> = Vec::new();
        let mut seen: Vec<usize> = Vec::new();
        for &s in subset {
            if seen.contains(&s) {
                continue;
            }
            seen.push(s);
            match self.complement(&d, s) {
                Some(x) => d.push(x),
                None => {
                    return Err(Error::Invalid(format!(
                        "complement of Δ by {} is trivial",
                        self.labels[s]
                    )))
                }
            }
        }
        Ok(d)
    }

    /// `w ⊛ t`: `1⊛t = t`, `s⊛t = s◁t`, `(uv)⊛t = v⊛(u⊛t)`.
    pub fn star(&self, w: &[usize], t: usize) -> usize {
        w.iter().fold(t, |acc, &s| self.op(s, acc))
    }

    /// `ν(ws) = ν(w)·(ν(w)⊛s)` evaluated along `w`.
    pub fn nu_word(&self, w: &[usize]) -> Result<Vec<usize>> {
        if !self.double_bijectivity().small || !self.validate().quasigroup {
            return Err(Error::NotBijective);
        }
        let mut out = Vec::new();
        for &s in w {
            let x = self.star(&out, s);
            out.push(x);
        }
        Ok(out)
    }

    /// `ν` on an exponent vector, with the letters taken in increasing
    /// order.
    pub fn nu(&self, exponents: &[usize]) -> Result<Vec<usize>> {
        if exponents.len() != self.len() {
            return Err(Error::Invalid("exponent vector has the wrong length".into()));
        }
        let w: Vec<usize> = exponents
            .iter()
            .enumerate()
            .flat_map(|(s, &k)| std::iter::repeat_n(s, k))
            .collect();
        self.nu_word(&w)
    }

    /// Checks that every ordering of the multiset gives the same element of
    /// the structure monoid. Returns an offending pair of orderings.
    pub fn nu_order_independent(&self, m: &Monoid, exponents: &[usize]) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        let mut w: Vec<usize> = exponents
            .iter()
            .enumerate()
            .flat_map(|(s, &k)| std::iter::repeat_n(s, k))
            .collect();
        let base = m.element(self.nu_word(&w)?)?;
        let first = w.clone();
        while next_permutation(&mut w) {
            let e = m.element(self.nu_word(&w)?)?;
            if !m.equal(&base, &e)? {
                return Ok(Some((first, w)));
            }
        }
        Ok(None)
    }

    /// `I` is closed under `◁`.
    pub fn is_parabolic(&self, subset: &[usize]) -> bool {
        subset
            .iter()
            .all(|&a| subset.iter().all(|&b| subset.contains(&self.op(a, b))))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "carrier": self.labels,
            "op": self.op.iter().map(|r| r.iter().map(|&v| self.labels[v].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

fn is_permutation(xs: &[usize]) -> bool {
    let mut seen = vec![false; xs.len()];
    xs.iter().all(|&x| x < xs.len() && !std::mem::replace(&mut seen[x], true))
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).expect("pivot exists");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// All RC-quasigroups on `{0, …, n-1}`: every table whose rows are
/// permutations, filtered by the RC law.
pub fn all_quasigroups(n: usize) -> Vec<RcSystem> {
    let perms = permutations(n);
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let op: Vec<Vec<usize>> = choice.iter().map(|&c| perms[c].clone()).collect();
        let sys = RcSystem {
            labels: (0..n).map(|i| i.to_string()).collect(),
            op,
        };
        if sys.validate().rc_law {
            out.push(sys);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            choice[k] += 1;
            if choice[k] < perms.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}
