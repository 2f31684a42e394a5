//! Germs: finite partial multiplication tables, their flags, the monoid they
//! present, and subgerms.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::monoid::{Element, Monoid};
use crate::presentation::{Generator, Presentation, Relation};

/// Partial table on a finite carrier with a distinguished identity. All
/// elements share one source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermTable {
    labels: Vec<String>,
    identity: usize,
    product: Vec<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GermFlags {
    pub identity_laws: bool,
    pub is_germ: bool,
    pub left_associative: bool,
    pub right_associative: bool,
    pub left_cancellative: bool,
    pub noetherian: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingVerdict {
    /// Images of distinct elements are distinct. `exhaustive` means the
    /// equality backend decides the word problem, so the answer is a proof.
    Embeds { bound: usize, exhaustive: bool },
    Fails { left: usize, right: usize },
    Inconclusive(String),
}

impl GermTable {
    pub fn new(labels: Vec<String>, identity: usize, product: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = labels.len();
        if identity >= n {
            return Err(Error::Malformed("identity missing".into()));
        }
        if product.len() != n || product.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("table is not square".into()));
        }
        if product.iter().flatten().flatten().any(|&v| v >= n) {
            return Err(Error::Malformed("entry outside the carrier".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Malformed(format!("duplicate label `{l}`")));
            }
        }
        Ok(GermTable { labels, identity, product })
    }

    /// Carrier `1` plus `labels`; the identity laws are filled in and the
    /// listed products `(s, t, s∘t)` added.
    pub fn from_products(labels: &[&str], products: &[(&str, &str, &str)]) -> Result<Self> {
        let mut all = vec!["1".to_string()];
        all.extend(labels.iter().map(|s| s.to_string()));
        let n = all.len();
        let mut product = vec![vec![None; n]; n];
        for x in 0..n {
            product[0][x] = Some(x);
            product[x][0] = Some(x);
        }
        let idx = |s: &str| {
            all.iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::Malformed(format!("unknown element `{s}`")))
        };
        for (s, t, u) in products {
            product[idx(s)?][idx(t)?] = Some(idx(u)?);
        }
        GermTable::new(all, 0, product)
    }

    /// CSV matrix: the first row and column carry the labels, an empty cell
    /// is undefined, and the label `1` is the identity.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let rows: Vec<Vec<String>> = text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|l| l.split(',').map(|c| c.trim().to_string()).collect())
            .collect();
        let Some((header, body)) = rows.split_first() else {
            return Err(Error::Malformed("empty table".into()));
        };
        let labels: Vec<String> = header[1..].to_vec();
        let n = labels.len();
        if body.len() != n {
            return Err(Error::Malformed(format!("{} rows for {n} labels", body.len())));
        }
        let identity = labels
            .iter()
            .position(|l| l == "1")
            .ok_or_else(|| Error::Malformed("identity missing".into()))?;
        let mut product = vec![vec![None; n]; n];
        for (i, row) in body.iter().enumerate() {
            if row.first() != Some(&labels[i]) {
                return Err(Error::Malformed(format!("row {} is not labelled `{}`", i + 1, labels[i])));
            }
            if row.len() > n + 1 {
                return Err(Error::Malformed(format!("row `{}` is too long", labels[i])));
            }
            for (j, cell) in row.iter().enumerate().skip(1) {
                if !cell.is_empty() {
                    let v = labels
                        .iter()
                        .position(|l| l == cell)
                        .ok_or_else(|| Error::Malformed(format!("unknown entry `{cell}`")))?;
                    product[i][j - 1] = Some(v);
                }
            }
        }
        GermTable::new(labels, identity, product)
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("∘,{}\n", self.labels.join(","));
        for (i, row) in self.product.iter().enumerate() {
            out.push_str(&self.labels[i]);
            for v in row {
                out.push(',');
                if let Some(v) = v {
                    out.push_str(&self.labels[*v]);
                }
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

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Invalid(format!("no element `{label}`")))
    }

    pub fn get(&self, s: usize, t: usize) -> Option<usize> {
        self.product[s][t]
    }

    /// Evaluates a label expression left to right: `["a","b","c"]` is
    /// `(a∘b)∘c`.
    pub fn fold(&self, xs: &[usize]) -> Option<usize> {
        xs.iter().try_fold(self.identity, |acc, &x| self.get(acc, x))
    }

    pub fn is_invertible(&self, s: usize) -> bool {
        (0..self.len()).any(|y| self.get(s, y) == Some(self.identity) && self.get(y, s) == Some(self.identity))
    }

    /// `t ⊑ u` in the germ: `u = t∘h` for some `h`.
    pub fn left_divides(&self, t: usize, u: usize) -> bool {
        (0..self.len()).any(|h| self.get(t, h) == Some(u))
    }

    pub fn flags(&self) -> GermFlags {
        let n = self.len();
        let e = self.identity;
        let mut f = GermFlags {
            identity_laws: true,
            is_germ: true,
            left_associative: true,
            right_associative: true,
            left_cancellative: true,
            noetherian: true,
            failures: Vec::new(),
        };
        let l = |x: usize| self.labels[x].as_str();
        for x in 0..n {
            if self.get(e, x) != Some(x) || self.get(x, e) != Some(x) {
                f.identity_laws = false;
                f.failures.push(format!("identity law fails at {}", l(x)));
            }
        }
        for s in 0..n {
            for t in 0..n {
                for u in 0..n {
                    let st = self.get(s, t);
                    let tu = self.get(t, u);
                    let left = st.and_then(|st| self.get(st, u));
                    let right = tu.and_then(|tu| self.get(s, tu));
                    if st.is_some() && tu.is_some() && left != right {
                        f.is_germ = false;
                        f.failures.push(format!("association fails on ({}, {}, {})", l(s), l(t), l(u)));
                    }
                    if left.is_some() && tu.is_none() && f.left_associative {
                        f.left_associative = false;
                        f.failures.push(format!("not left-associative at ({}, {}, {})", l(s), l(t), l(u)));
                    }
                    if right.is_some() && st.is_none() && f.right_associative {
                        f.right_associative = false;
                        f.failures.push(format!("not right-associative at ({}, {}, {})", l(s), l(t), l(u)));
                    }
                }
                for t2 in t + 1..n {
                    if self.get(s, t).is_some() && self.get(s, t) == self.get(s, t2) && f.left_cancellative {
                        f.left_cancellative = false;
                        f.failures.push(format!("{}∘{} = {}∘{}", l(s), l(t), l(s), l(t2)));
                    }
                }
            }
        }
        f.is_germ &= f.identity_laws;
        // Proper divisibility `s ≺ s∘h` with `h` non-invertible must be
        // acyclic on both sides.
        let inv: Vec<bool> = (0..n).map(|x| self.is_invertible(x)).collect();
        let mut right_edges = vec![Vec::new(); n];
        let mut left_edges = vec![Vec::new(); n];
        for s in 0..n {
            for h in 0..n {
                if let Some(v) = self.get(s, h) {
                    if !inv[h] {
                        right_edges[s].push(v);
                    }
                    if !inv[s] {
                        left_edges[h].push(v);
                    }
                }
            }
        }
        for (edges, side) in [(&right_edges, "right"), (&left_edges, "left")] {
            if has_cycle(edges) {
                f.noetherian = false;
                f.failures.push(format!("{side} divisibility has a cycle"));
            }
        }
        f
    }

    /// `Mon(S)`: generators the non-identity elements, relations
    /// `s t = s∘t` for every defined product of non-identity elements.
    pub fn monoid_presentation(&self) -> Result<Presentation> {
        let names = self.generator_names();
        let gens = (0..self.len())
            .filter(|&x| x != self.identity)
            .map(|x| Generator {
                name: names[x].clone(),
                source: 0,
                target: 0,
                declared_invertible: false,
            })
            .collect();
        let g = |x: usize| if x < self.identity { x } else { x - 1 };
        let mut relations = Vec::new();
        for s in (0..self.len()).filter(|&x| x != self.identity) {
            for t in (0..self.len()).filter(|&x| x != self.identity) {
                if let Some(v) = self.get(s, t) {
                    relations.push(Relation {
                        lhs: vec![g(s), g(t)],
                        rhs: if v == self.identity { Vec::new() } else { vec![g(v)] },
                        source: 0,
                        target: 0,
                    });
                }
            }
        }
        Presentation::new(Vec::new(), gens, relations)
    }

    /// Generator names for `Mon(S)`; labels that are not valid names get an
    /// `x` prefix.
    fn generator_names(&self) -> Vec<String> {
        let valid = |s: &str| {
            !s.is_empty() && s != "1" && s.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '.'))
        };
        self.labels
            .iter()
            .map(|l| if valid(l) { l.clone() } else { format!("x{}", l.replace(|c: char| !c.is_alphanumeric(), "_")) })
            .collect()
    }

    /// The image `ι(x)` in `Mon(S)`.
    pub fn iota(&self, m: &Monoid, x: usize) -> Result<Element> {
        if x == self.identity {
            Ok(m.identity(0))
        } else {
            m.element(vec![if x < self.identity { x } else { x - 1 }])
        }
    }

    /// Compares `ι(x)` and `ι(y)` for all pairs of distinct elements.
    pub fn embedding_test(&self, bound: usize) -> Result<EmbeddingVerdict> {
        let p = self.monoid_presentation()?;
        let opts = crate::monoid::MonoidOptions {
            max_length: bound,
            ..Default::default()
        };
        let m = Monoid::with_options(p, opts);
        let exhaustive = m.has_canonical() || m.grading().is_some();
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                match m.equal(&self.iota(&m, x)?, &self.iota(&m, y)?) {
                    Ok(true) => return Ok(EmbeddingVerdict::Fails { left: x, right: y }),
                    Ok(false) => {}
                    Err(Error::Inconclusive(why)) | Err(Error::CapExceeded(why)) => {
                        return Ok(EmbeddingVerdict::Inconclusive(why))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(EmbeddingVerdict::Embeds { bound, exhaustive })
    }

    /// `J(s1, s2) = { h : s1∘h is defined and h ⊑ s2 }`.
    pub fn j_family(&self, s1: usize, s2: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&h| self.get(s1, h).is_some() && self.left_divides(h, s2))
            .collect()
    }

    /// `I(s1, s2) = { s1∘h : h ∈ J(s1, s2) }`.
    pub fn i_family(&self, s1: usize, s2: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.j_family(s1, s2).into_iter().filter_map(|h| self.get(s1, h)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The pair `(s1, s2)` is normal iff every element of `J(s1, s2)` is
    /// invertible.
    pub fn is_normal_pair(&self, s1: usize, s2: usize) -> bool {
        self.j_family(s1, s2).into_iter().all(|h| self.is_invertible(h))
    }

    /// Whether the elements of `xs` pairwise admit a common right-multiple
    /// inside the germ.
    pub fn has_common_right_multiples(&self, xs: &[usize]) -> bool {
        xs.iter().all(|&a| {
            xs.iter()
                .all(|&b| (0..self.len()).any(|c| self.left_divides(a, c) && self.left_divides(b, c)))
        })
    }

    /// Closure of `xs` under identity and defined products, sorted.
    pub fn subgerm_closure(&self, xs: &[usize]) -> Vec<usize> {
        let mut set = vec![false; self.len()];
        set[self.identity] = true;
        for &x in xs {
            set[x] = true;
        }
        loop {
            let mut grew = false;
            for s in 0..self.len() {
                for t in 0..self.len() {
                    if set[s] && set[t] {
                        if let Some(v) = self.get(s, t) {
                            if !set[v] {
                                set[v] = true;
                                grew = true;
                            }
                        }
                    }
                }
            }
            if !grew {
                return (0..self.len()).filter(|&x| set[x]).collect();
            }
        }
    }

    /// Induced table on a subset containing the identity.
    pub fn restrict(&self, xs: &[usize]) -> Result<GermTable> {
        if !xs.contains(&self.identity) {
            return Err(Error::Invalid("subgerm must contain the identity".into()));
        }
        let pos = |v: usize| xs.iter().position(|&x| x == v);
        let product = xs
            .iter()
            .map(|&s| xs.iter().map(|&t| self.get(s, t).and_then(pos)).collect())
            .collect();
        GermTable::new(
            xs.iter().map(|&x| self.labels[x].clone()).collect(),
            pos(self.identity).expect("identity present"),
            product,
        )
    }

    /// A witness `(s, h, s∘h)` with `s, s∘h` in `xs` but `h` outside, if
    /// `xs` is not closed under right-quotient.
    pub fn right_quotient_witness(&self, xs: &[usize]) -> Option<(usize, usize, usize)> {
        for &s in xs {
            for h in 0..self.len() {
                if let Some(v) = self.get(s, h) {
                    if xs.contains(&v) && !xs.contains(&h) {
                        return Some((s, h, v));
                    }
                }
            }
        }
        None
    }

    /// `xs` is closed under `s ↦ s∘e` for invertible `e`.
    pub fn is_eqir_closed(&self, xs: &[usize]) -> bool {
        xs.iter().all(|&s| {
            (0..self.len())
                .filter(|&e| self.is_invertible(e))
                .all(|e| self.get(s, e).is_none_or(|v| xs.contains(&v)))
        })
    }

    pub fn to_json(&self) -> Value {
        let products: Vec<Value> = (0..self.len())
            .flat_map(|s| (0..self.len()).map(move |t| (s, t)))
            .filter_map(|(s, t)| {
                self.get(s, t)
                    .map(|v| json!([self.labels[s], self.labels[t], self.labels[v]]))
            })
            .collect();
        json!({
            "carrier": self.labels,
            "identity": self.labels[self.identity],
            "products": products,
        })
    }
}

fn has_cycle(edges: &[Vec<usize>]) -> bool {
    // 0 unvisited, 1 on stack, 2 done
    fn visit(v: usize, edges: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &edges[v] {
            if state[w] == 1 || (state[w] == 0 && visit(w, edges, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; edges.len()];
    (0..edges.len()).any(|v| state[v] == 0 && visit(v, edges, &mut state))
}

/// The germ of divisors of `Δ`: `s∘t` is defined iff `st` divides `Δ`.
/// Labels are words with letters joined by `.`, and `1` for the identity.
pub fn divisor_germ(m: &Monoid, delta: &Element) -> Result<GermTable> {
    let divs = m.left_divisors(delta)?;
    let rights = m.right_divisors(delta)?;
    if divs.len() != rights.len() {
        return Err(Error::NotBounded("left and right divisors differ".into()));
    }
    let p = m.presentation();
    let labels: Vec<String> = divs
        .iter()
        .map(|d| {
            if d.word.is_empty() {
                "1".to_string()
            } else {
                d.word.iter().map(|&g| p.gen_name(g)).collect::<Vec<_>>().join(".")
            }
        })
        .collect();
    let identity = divs.iter().position(|d| d.word.is_empty()).expect("1 divides Δ");
    let mut product = vec![vec![None; divs.len()]; divs.len()];
    for (i, s) in divs.iter().enumerate() {
        for (j, t) in divs.iter().enumerate() {
            let st = m.mul(s, t)?;
            for (k, d) in divs.iter().enumerate() {
                if m.equal(&st, d)? {
                    product[i][j] = Some(k);
                    break;
                }
            }
        }
    }
    GermTable::new(labels, identity, product)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn nonembedding() -> GermTable {
        GermTable::from_products(
            &["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "m", "n"],
            &[
                ("a", "b", "f"),
                ("f", "c", "g"),
                ("d", "e", "h"),
                ("g", "h", "i"),
                ("c", "d", "j"),
                ("b", "j", "k"),
                ("k", "e", "m"),
                ("a", "m", "n"),
            ],
        )
        .unwrap()
    }

    fn unit_atoms() -> GermTable {
        GermTable::from_products(&["a", "e"], &[("e", "a", "a"), ("e", "e", "1")]).unwrap()
    }

    fn braid_germ() -> (Monoid, GermTable) {
        let m = Monoid::new(Presentation::monoid(&["a", "b"], &[("a b a", "b a b")]).unwrap());
        let g = divisor_germ(&m, &m.elem("a b a").unwrap()).unwrap();
        (m, g)
    }

    fn ids(g: &GermTable, xs: &[&str]) -> Vec<usize> {
        xs.iter().map(|x| g.index(x).unwrap()).collect()
    }

    #[test]
    fn nonembedding_is_germ_but_does_not_embed() {
        let g = nonembedding();
        let f = g.flags();
        assert!(f.is_germ, "{:?}", f.failures);
        let ix = |s| g.index(s).unwrap();
        let lhs = g.get(g.fold(&[ix("a"), ix("b"), ix("c")]).unwrap(), g.get(ix("d"), ix("e")).unwrap());
        let inner = g.get(ix("b"), g.get(ix("c"), ix("d")).unwrap()).unwrap();
        let rhs = g.get(ix("a"), g.get(inner, ix("e")).unwrap());
        assert_eq!(lhs, Some(ix("i")));
        assert_eq!(rhs, Some(ix("n")));
        assert_eq!(
            g.embedding_test(24).unwrap(),
            EmbeddingVerdict::Fails { left: ix("i"), right: ix("n") }
        );
    }

    #[test]
    fn unit_atoms_presentation_and_atoms() {
        let g = unit_atoms();
        let f = g.flags();
        assert!(f.is_germ && f.left_associative && !f.right_associative);
        let p = g.monoid_presentation().unwrap();
        assert_eq!(p.relations().len(), 2);
        let m = Monoid::new(p);
        let atoms: Vec<String> = m.atoms().unwrap().iter().map(|a| m.show(a)).collect();
        assert_eq!(atoms, ["a", "a e"]);
        assert!(matches!(g.embedding_test(24).unwrap(), EmbeddingVerdict::Embeds { exhaustive: true, .. }));
    }

    #[test]
    fn trivial_germs() {
        let g = GermTable::from_products(&[], &[]).unwrap();
        assert!(g.flags().is_germ);
        assert!(g.monoid_presentation().unwrap().gens().is_empty());
        assert!(matches!(g.embedding_test(8).unwrap(), EmbeddingVerdict::Embeds { .. }));
        let mut bad = unit_atoms();
        bad.product[0][1] = Some(2);
        assert!(!bad.flags().is_germ);
        assert!(GermTable::new(vec!["a".into()], 3, vec![vec![None]]).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let g = unit_atoms();
        let back = GermTable::parse_csv(&g.to_csv()).unwrap();
        assert_eq!(back, g);
        assert!(GermTable::parse_csv("x,a\na,a\n").is_err());
    }

    #[test]
    fn braid_divisor_germ() {
        let (_, g) = braid_germ();
        assert_eq!(g.len(), 6);
        let ix = |s| g.index(s).unwrap();
        assert_eq!(g.get(ix("a"), ix("b")), Some(ix("a.b")));
        assert_eq!(g.get(ix("a"), ix("a")), None);
        for s in 0..6 {
            assert_eq!(g.get(ix("a.b.a"), s).is_some(), s == g.identity());
        }
        let f = g.flags();
        assert!(f.is_germ && f.left_associative && f.right_associative && f.noetherian);
    }

    #[test]
    fn normal_pairs_via_j() {
        let (_, g) = braid_germ();
        let ix = |s| g.index(s).unwrap();
        assert!(g.is_normal_pair(ix("a.b"), ix("b")));
        assert!(!g.is_normal_pair(ix("a"), ix("b")));
        assert!(g.is_normal_pair(ix("a"), g.identity()));
        // I admits common right-multiples exactly when J does.
        for s in 0..g.len() {
            for t in 0..g.len() {
                assert_eq!(
                    g.has_common_right_multiples(&g.i_family(s, t)),
                    g.has_common_right_multiples(&g.j_family(s, t))
                );
            }
        }
    }

    #[test]
    fn braid_subgerms() {
        let (m, g) = braid_germ();
        assert_eq!(g.subgerm_closure(&ids(&g, &["a", "b"])).len(), 6);
        let sub = g.subgerm_closure(&ids(&g, &["a", "b.a"]));
        let labels: Vec<&str> = sub.iter().map(|&x| g.label(x)).collect();
        assert_eq!(labels, ["1", "a", "b.a", "a.b.a"]);
        assert_eq!(g.subgerm_closure(&[g.identity()]), [g.identity()]);
        let (s, h, v) = g.right_quotient_witness(&sub).unwrap();
        assert_eq!((g.label(s), g.label(h), g.label(v)), ("b.a", "b", "a.b.a"));

        let sg = g.restrict(&sub).unwrap();
        let p = sg.monoid_presentation().unwrap();
        assert_eq!(p.relations().len(), 1);
        let mon = Monoid::new(p);
        let y3 = mon.elem("b.a b.a b.a").unwrap();
        let xy2 = mon.elem("a b.a a b.a").unwrap();
        assert!(!mon.equal(&y3, &xy2).unwrap());
        assert!(m.equal(&m.elem("b a b a b a").unwrap(), &m.elem("a b a a b a").unwrap()).unwrap());
    }

    #[test]
    fn eqir_closed_subgerms() {
        // Divisor-style germ of ⟨a, e | ea = ae, ee = 1⟩.
        let g = GermTable::from_products(
            &["a", "e", "ae"],
            &[
                ("e", "e", "1"),
                ("e", "a", "ae"),
                ("a", "e", "ae"),
                ("e", "ae", "a"),
                ("ae", "e", "a"),
            ],
        )
        .unwrap();
        let f = g.flags();
        assert!(f.is_germ && f.left_associative && f.right_associative, "{:?}", f.failures);
        // Compare in ⟨a, e | ea = ae, ee = 1⟩, where each germ element is a word.
        let m = Monoid::new(Presentation::monoid(&["a", "e"], &[("e a", "a e"), ("e e", "")]).unwrap());
        let word = |x: usize| match g.label(x) {
            "1" => m.identity(0),
            "ae" => m.elem("a e").unwrap(),
            l => m.elem(l).unwrap(),
        };
        let units = m.units(0).unwrap();
        for gens in [vec!["a"], vec!["e"], vec!["a", "e"]] {
            let sub = g.subgerm_closure(&ids(&g, &gens));
            // Sub(S1) up to length 4, as words over S1.
            let imgs: Vec<Element> = sub.iter().map(|&x| word(x)).collect();
            let mut elems = vec![m.identity(0)];
            for _ in 0..4 {
                let next: Vec<Element> =
                    elems.iter().flat_map(|x| imgs.iter().map(|y| m.mul(x, y).unwrap())).collect();
                elems.extend(next);
                elems.sort();
                elems.dedup();
            }
            let mon_closed = elems.iter().filter(|x| x.len() <= 2).all(|x| {
                units.iter().all(|u| {
                    let xu = m.mul(x, u).unwrap();
                    elems.iter().any(|y| m.equal(y, &xu).unwrap())
                })
            });
            assert_eq!(g.is_eqir_closed(&sub), mon_closed, "{gens:?}");
        }
    }
}
