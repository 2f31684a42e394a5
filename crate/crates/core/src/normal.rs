//! Greedy normal decompositions relative to a finite family S: heads,
//! the domino rule, power regrouping, symmetric normal paths of fractions,
//! deformations and canonical length.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::DeltaStructure;
use crate::monoid::{Element, Monoid};
use crate::presentation::{Letter, SignedWord};
use crate::reversing::{self, Status};

/// Three-valued closure flag: `None` means not computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClosureFlags {
    pub right_divisor_closed: Option<bool>,
    pub right_mcm_closed: Option<bool>,
    pub right_comultiple_closed: Option<bool>,
}

/// A finite family of elements, pairwise distinct, sorted by canonical word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub elements: Vec<Element>,
    pub flags: ClosureFlags,
}

impl Family {
    pub fn new(m: &Monoid, elements: impl IntoIterator<Item = Element>) -> Result<Self> {
        let mut out: Vec<Element> = Vec::new();
        for e in elements {
            let e = m.canonical(e)?;
            let mut dup = false;
            for f in &out {
                if m.equal(&e, f)? {
                    dup = true;
                    break;
                }
            }
            if !dup {
                out.push(e);
            }
        }
        out.sort();
        Ok(Family {
            elements: out,
            flags: ClosureFlags::default(),
        })
    }

    pub fn parse(m: &Monoid, words: &[&str]) -> Result<Self> {
        let es = words.iter().map(|w| m.elem(w)).collect::<Result<Vec<_>>>()?;
        Self::new(m, es)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monoid, e: &Element) -> Result<bool> {
        for s in &self.elements {
            if m.equal(s, e)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Membership in S♯ = S·C× ∪ C×.
    pub fn contains_sharp(&self, m: &Monoid, e: &Element) -> Result<bool> {
        if m.is_invertible(e) {
            return Ok(true);
        }
        for s in &self.elements {
            if m.eqir(e, s)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Products of at most `k` elements of S♯ (identities included).
    pub fn power(&self, m: &Monoid, k: usize) -> Result<Family> {
        let mut base: Vec<Element> = self.elements.clone();
        for x in 0..m.presentation().objects().len() {
            base.extend(m.units(x)?.iter().cloned());
        }
        let mut acc = Family::new(m, base.clone())?;
        for _ in 1..k {
            let mut next = acc.elements.clone();
            for a in &acc.elements {
                for b in &base {
                    if a.target == b.source {
                        next.push(m.mul(a, b)?);
                    }
                }
            }
            acc = Family::new(m, next)?;
        }
        Ok(acc)
    }

    pub fn words(&self, m: &Monoid) -> Vec<String> {
        self.elements.iter().map(|e| m.show(e)).collect()
    }
}

/// A greedy path; `unit` carries the invertible value of a path whose
/// entries are all trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalPath {
    pub entries: Vec<Element>,
    pub strict: bool,
    pub unit: Option<Element>,
}

impl NormalPath {
    pub fn empty() -> Self {
        NormalPath {
            entries: Vec::new(),
            strict: true,
            unit: None,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn show(&self, m: &Monoid) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| m.show(e)).collect();
        format!("({})", parts.join(", "))
    }

    pub fn to_json(&self, m: &Monoid) -> Value {
        json!({
            "entries": self.entries.iter().map(|e| m.show(e)).collect::<Vec<_>>(),
            "strict": self.strict,
            "unit": self.unit.as_ref().map(|u| m.show(u)),
        })
    }

    /// Product of the entries (and unit).
    pub fn value(&self, m: &Monoid, source: usize) -> Result<Element> {
        let mut acc = m.identity(source);
        for e in self.entries.iter().chain(self.unit.iter()) {
            acc = m.mul(&acc, e)?;
        }
        Ok(acc)
    }
}

/// A fraction `ū ∥ v` = `u⁻¹ v`, both parts normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricNormalPath {
    pub negative: NormalPath,
    pub positive: NormalPath,
}

impl SymmetricNormalPath {
    pub fn show(&self, m: &Monoid) -> String {
        let mut parts: Vec<String> = self
            .negative
            .entries
            .iter()
            .rev()
            .map(|e| format!("({})^-1", m.show(e)))
            .collect();
        parts.extend(self.positive.entries.iter().map(|e| m.show(e)));
        if parts.is_empty() {
            "()".into()
        } else {
            format!("({})", parts.join(", "))
        }
    }

    pub fn to_json(&self, m: &Monoid) -> Value {
        json!({
            "negative": self.negative.to_json(m),
            "positive": self.positive.to_json(m),
        })
    }
}

/// Every `t` of S dividing `s1 s2` already divides `s1`.
pub fn is_greedy_pair(m: &Monoid, s: &Family, s1: &Element, s2: &Element) -> Result<bool> {
    if s1.target != s2.source {
        return Err(Error::Mismatch("pair does not compose".into()));
    }
    let prod = m.mul(s1, s2)?;
    for t in &s.elements {
        if t.source == s1.source && m.left_divides(t, &prod)? && !m.left_divides(t, s1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_greedy_path(m: &Monoid, s: &Family, path: &[Element]) -> Result<bool> {
    for w in path.windows(2) {
        if !is_greedy_pair(m, s, &w[0], &w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The S-head of `g`: the greatest element of `Div(g) ∩ S`.
pub fn head(m: &Monoid, s: &Family, g: &Element) -> Result<Element> {
    let mut divs = Vec::new();
    for t in &s.elements {
        if t.source == g.source && m.left_divides(t, g)? {
            divs.push(t.clone());
        }
    }
    let mut best: Option<Element> = None;
    'cand: for h in &divs {
        if m.is_invertible(h) {
            continue;
        }
        for t in &divs {
            if !m.left_divides(t, h)? {
                continue 'cand;
            }
        }
        best = match best {
            Some(b) if b <= *h => Some(b),
            _ => Some(h.clone()),
        };
    }
    best.ok_or_else(|| Error::NoHead(m.show(g)))
}

/// Strict S-normal decomposition by iterated heads; trailing invertibles are
/// folded into the last entry.
pub fn normal_decomposition(m: &Monoid, s: &Family, g: &Element) -> Result<NormalPath> {
    let mut entries: Vec<Element> = Vec::new();
    let mut rest = g.clone();
    while !m.is_invertible(&rest) {
        let h = head(m, s, &rest)?;
        rest = m
            .left_quotient(&h, &rest)?
            .expect("a head divides its element");
        entries.push(h);
    }
    let mut unit = None;
    if !rest.is_empty() {
        match entries.last_mut() {
            Some(last) => *last = m.mul(last, &rest)?,
            None => unit = Some(rest),
        }
    }
    Ok(NormalPath {
        entries,
        strict: true,
        unit,
    })
}

/// Normal decomposition of `s · g` from one of `g`, by sliding the
/// length-two renormalization along the path.
pub fn left_multiply_normal(m: &Monoid, fam: &Family, s: &Element, np: &NormalPath) -> Result<NormalPath> {
    let mut carry = s.clone();
    let mut entries = Vec::new();
    let mut tail: Vec<Element> = np.entries.clone();
    tail.extend(np.unit.iter().cloned());
    for g in &tail {
        let prod = m.mul(&carry, g)?;
        if m.is_invertible(&prod) {
            carry = prod;
            continue;
        }
        let h = head(m, fam, &prod)?;
        carry = m.left_quotient(&h, &prod)?.expect("a head divides its element");
        entries.push(h);
    }
    let mut unit = None;
    if m.is_invertible(&carry) {
        if !carry.is_empty() {
            match entries.last_mut() {
                Some(last) => *last = m.mul(last, &carry)?,
                None => unit = Some(carry),
            }
        }
    } else {
        let rest = normal_decomposition(m, fam, &carry)?;
        entries.extend(rest.entries);
        unit = rest.unit;
    }
    Ok(NormalPath {
        entries,
        strict: true,
        unit,
    })
}

/// Concatenates S-normal decompositions of the entries of an S^m-normal
/// path; the junctions are checked.
pub fn power_normal(m: &Monoid, s: &Family, pieces: &[NormalPath]) -> Result<NormalPath> {
    let mut entries = Vec::new();
    for piece in pieces {
        entries.extend(piece.entries.iter().cloned());
    }
    if !is_greedy_path(m, s, &entries)? {
        return Err(Error::Invalid("concatenated path is not greedy".into()));
    }
    Ok(NormalPath {
        entries,
        strict: true,
        unit: None,
    })
}

/// Partial products agree up to right-multiplication by invertibles.
pub fn is_deformation(m: &Monoid, p1: &[Element], p2: &[Element]) -> Result<bool> {
    let source = match (p1.first(), p2.first()) {
        (Some(a), Some(b)) if a.source != b.source => return Ok(false),
        (Some(a), _) => a.source,
        (_, Some(b)) => b.source,
        _ => return Ok(true),
    };
    let (mut a, mut b) = (m.identity(source), m.identity(source));
    for i in 0..p1.len().max(p2.len()) {
        if let Some(x) = p1.get(i) {
            a = m.mul(&a, x)?;
        }
        if let Some(y) = p2.get(i) {
            b = m.mul(&b, y)?;
        }
        if !m.eqir(&a, &b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Common left-divisors are invertible, and no `h ⊑ x f, x g` escapes `x`
/// for `x` an atom or identity.
pub fn left_disjoint(m: &Monoid, f: &Element, g: &Element) -> Result<bool> {
    if f.source != g.source {
        return Err(Error::Mismatch("left-disjointness needs a common source".into()));
    }
    let mut prefixes = vec![m.identity(f.source)];
    prefixes.extend(
        m.atoms()
            .map_err(|e| Error::Inconclusive(e.to_string()))?
            .into_iter()
            .filter(|a| a.target == f.source),
    );
    for x in &prefixes {
        let (xf, xg) = (m.mul(x, f)?, m.mul(x, g)?);
        for h in m.left_divisors(&xf)? {
            if m.left_divides(&h, &xg)? && !m.left_divides(&h, x)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Symmetric S-normal path for the signed word `w`: left-reverse it to
/// `u″⁻¹ v″`, remove a left-gcd, then normalize both parts.
pub fn symmetric_normal_word(m: &Monoid, s: &Family, w: &SignedWord) -> Result<SymmetricNormalPath> {
    let out = reversing::left_reverse(m.presentation(), w, m.options().max_steps)?;
    match out.status {
        Status::Terminated => {}
        Status::Diverged => return Err(Error::Diverged(out.steps)),
        Status::Stuck => return Err(Error::Inconclusive("left reversing got stuck".into())),
    }
    let (u2, v2) = out.word.split_negative_positive().expect("terminal shape");
    let obj = out.word.source;
    let mk = |word: Vec<usize>| -> Result<Element> {
        if word.is_empty() {
            Ok(m.identity(obj))
        } else {
            m.element(word)
        }
    };
    let (mut u, mut v) = (mk(u2)?, mk(v2)?);
    let d = m.left_gcd(&u, &v)?;
    if !m.is_invertible(&d) {
        u = m.left_quotient(&d, &u)?.expect("gcd divides");
        v = m.left_quotient(&d, &v)?.expect("gcd divides");
    }
    let negative = normal_decomposition(m, s, &u)?;
    let positive = normal_decomposition(m, s, &v)?;
    if let (Some(a), Some(b)) = (negative.entries.first(), positive.entries.first()) {
        if !left_disjoint(m, a, b)? {
            return Err(Error::NotLeftDisjoint);
        }
    }
    Ok(SymmetricNormalPath { negative, positive })
}

/// Symmetric S-normal path of `v u⁻¹`: the result `ū″ ∥ v″` satisfies
/// `u″ v ≡ v″ u`.
pub fn symmetric_normal(m: &Monoid, s: &Family, u: &Element, v: &Element) -> Result<SymmetricNormalPath> {
    if u.target != v.target {
        return Err(Error::Mismatch("fraction needs a common target".into()));
    }
    let letters: Vec<Letter> = v
        .word
        .iter()
        .map(|&g| Letter::pos(g))
        .chain(u.word.iter().rev().map(|&g| Letter::neg(g)))
        .collect();
    let w = SignedWord {
        letters,
        source: v.source,
        target: u.source,
    };
    symmetric_normal_word(m, s, &w)
}

/// `g = Δ^{-k} P` with `P` not left-divisible by Δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaForm {
    pub inf: i64,
    pub rest: Element,
}

/// Writes a signed word as a power of Δ times a positive element.
pub fn delta_form(m: &Monoid, d: &DeltaStructure, w: &SignedWord) -> Result<DeltaForm> {
    if !m.presentation().is_single_object() {
        return Err(Error::NotExpressible("Δ-forms are computed for monoids".into()));
    }
    let mut k: i64 = 0;
    let mut p = m.identity(0);
    for l in &w.letters {
        let s = m.element(vec![l.gen])?;
        if l.inv {
            // p s⁻¹ = p Δ⁻¹ x = Δ⁻¹ ψ(p) x with x s = Δ
            let x = m
                .right_quotient(&s, &d.delta)?
                .ok_or_else(|| Error::NotExpressible(format!("{} does not right-divide Δ", m.show(&s))))?;
            p = d.conjugate_back(m, &p)?;
            p = m.mul(&p, &x)?;
            k += 1;
        } else {
            p = m.mul(&p, &s)?;
        }
    }
    while !p.is_empty() && m.left_divides(&d.delta, &p)? {
        p = m.left_quotient(&d.delta, &p)?.expect("checked");
        k -= 1;
    }
    Ok(DeltaForm { inf: -k, rest: p })
}

/// Number of non-Δ entries in the Δ-normal form.
pub fn canonical_length(m: &Monoid, d: &DeltaStructure, w: &SignedWord) -> Result<usize> {
    let form = delta_form(m, d, w)?;
    Ok(normal_decomposition(m, &d.divisors, &form.rest)?.len())
}

/// `CAN(g⁻¹ g′)`.
pub fn quasi_distance(m: &Monoid, d: &DeltaStructure, g: &SignedWord, h: &SignedWord) -> Result<usize> {
    let w = SignedWord {
        letters: g.inverse().letters.into_iter().chain(h.letters.iter().copied()).collect(),
        source: g.target,
        target: h.target,
    };
    canonical_length(m, d, &w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::delta_structure;
    use crate::presentation::Presentation;

    fn braid() -> (Monoid, Family) {
        let m = Monoid::new(Presentation::monoid(&["a", "b"], &[("a b a", "b a b")]).unwrap());
        let d = m.left_divisors(&m.elem("a b a").unwrap()).unwrap();
        let f = Family::new(&m, d).unwrap();
        (m, f)
    }

    fn two_mcms() -> (Monoid, Family) {
        let m = Monoid::new(
            Presentation::monoid(
                &["a", "b", "a'", "b'"],
                &[("a b", "b a"), ("a' b'", "b' a'"), ("a a'", "b b'"), ("a' a", "b' b")],
            )
            .unwrap(),
        );
        let f = Family::parse(&m, &["a", "b", "a'", "b'", "a b", "a' b'", "a a'", "a' a"]).unwrap();
        (m, f)
    }

    #[test]
    fn greedy_pairs() {
        let (m, s) = braid();
        let e = |w: &str| m.elem(w).unwrap();
        assert!(is_greedy_pair(&m, &s, &e("a b"), &e("b")).unwrap());
        assert!(!is_greedy_pair(&m, &s, &e("a"), &e("b")).unwrap());
        assert!(is_greedy_pair(&m, &s, &e("b a"), &e("1")).unwrap());
        let (m, s) = two_mcms();
        assert!(is_greedy_pair(&m, &s, &m.elem("a b").unwrap(), &m.elem("a' b'").unwrap()).unwrap());
    }

    #[test]
    fn heads_and_decompositions() {
        let (m, s) = braid();
        let e = |w: &str| m.elem(w).unwrap();
        assert_eq!(head(&m, &s, &e("a b a b")).unwrap(), e("a b a"));
        assert_eq!(head(&m, &s, &e("b a")).unwrap(), e("b a"));
        let np = normal_decomposition(&m, &s, &e("a b a a b a")).unwrap();
        assert_eq!(np.show(&m), "(a b a, a b a)");
        assert!(normal_decomposition(&m, &s, &e("1")).unwrap().is_empty());
        let (m, s) = two_mcms();
        let g = m.elem("a a b' a' a'").unwrap();
        assert_eq!(head(&m, &s, &g).unwrap(), m.elem("a b").unwrap());
        assert_eq!(normal_decomposition(&m, &s, &g).unwrap().show(&m), "(a b, a' b', b')");
    }

    #[test]
    fn domino_left_multiplication() {
        let (m, s) = braid();
        let e = |w: &str| m.elem(w).unwrap();
        let np = normal_decomposition(&m, &s, &e("b a")).unwrap();
        assert_eq!(left_multiply_normal(&m, &s, &e("a"), &np).unwrap().show(&m), "(a b a)");
        let np = normal_decomposition(&m, &s, &e("a b a")).unwrap();
        assert_eq!(left_multiply_normal(&m, &s, &e("1"), &np).unwrap(), np);
        let np = normal_decomposition(&m, &s, &e("a b a")).unwrap();
        let direct = normal_decomposition(&m, &s, &e("b a b a")).unwrap();
        let slid = left_multiply_normal(&m, &s, &e("b"), &np).unwrap();
        assert!(is_deformation(&m, &slid.entries, &direct.entries).unwrap());
    }

    #[test]
    fn power_concatenation() {
        let (m, s) = braid();
        let e = |w: &str| m.elem(w).unwrap();
        let s2 = s.power(&m, 2).unwrap();
        assert_eq!(s2.len(), m.left_divisors(&e("a b a a b a")).unwrap().len());
        let coarse = normal_decomposition(&m, &s2, &e("a b a b b a a")).unwrap();
        assert_eq!(coarse.show(&m), "(a a b a, b a a)");
        let pieces: Vec<NormalPath> = coarse
            .entries
            .iter()
            .map(|g| normal_decomposition(&m, &s, g).unwrap())
            .collect();
        assert_eq!(power_normal(&m, &s, &pieces).unwrap().show(&m), "(a b a, b, b a, a)");
        // (abab, ab) is not S²-greedy: Δ² divides the product
        let bad = [
            normal_decomposition(&m, &s, &e("a b a b")).unwrap(),
            normal_decomposition(&m, &s, &e("a b")).unwrap(),
        ];
        assert!(power_normal(&m, &s, &bad).is_err());
        assert!(power_normal(&m, &s, &[]).unwrap().is_empty());
    }

    #[test]
    fn symmetric_paths() {
        let (m, s) = braid();
        let e = |w: &str| m.elem(w).unwrap();
        let sp = symmetric_normal(&m, &s, &e("a"), &e("a")).unwrap();
        assert!(sp.negative.is_empty() && sp.positive.is_empty());
        let sp = symmetric_normal(&m, &s, &e("a"), &e("b")).unwrap();
        assert_eq!(sp.negative.show(&m), "(b a)");
        assert_eq!(sp.positive.show(&m), "(a b)");
        for (u, v) in [("a b", "b a"), ("a", "b"), ("a a b", "b")] {
            let (u, v) = (e(u), e(v));
            let sp = symmetric_normal(&m, &s, &u, &v).unwrap();
            let u2 = sp.negative.value(&m, 0).unwrap();
            let v2 = sp.positive.value(&m, 0).unwrap();
            assert!(m.equal(&m.mul(&u2, &v).unwrap(), &m.mul(&v2, &u).unwrap()).unwrap());
        }
    }

    #[test]
    fn disjointness() {
        let (m, _) = braid();
        let e = |w: &str| m.elem(w).unwrap();
        assert!(left_disjoint(&m, &e("a"), &e("b")).unwrap());
        assert!(!left_disjoint(&m, &e("a b"), &e("a b")).unwrap());
        assert!(left_disjoint(&m, &e("a b"), &e("b")).unwrap());
    }

    #[test]
    fn deformations() {
        let m = Monoid::new(Presentation::monoid(&["a", "e"], &[("e a", "a"), ("e e", "1")]).unwrap());
        let e = |w: &str| m.elem(w).unwrap();
        assert!(is_deformation(&m, &[e("a"), e("a")], &[e("a"), e("a")]).unwrap());
        assert!(is_deformation(&m, &[e("a e"), e("a")], &[e("a"), e("e a")]).unwrap());
        assert!(!is_deformation(&m, &[e("a"), e("a")], &[e("a"), e("1")]).unwrap());
        assert!(is_deformation(&m, &[e("a e"), e("1")], &[e("a e")]).unwrap());
    }

    #[test]
    fn canonical_lengths() {
        let (m, _) = braid();
        let d = delta_structure(&m, &m.elem("a b a").unwrap()).unwrap();
        let can = |w: &str| canonical_length(&m, &d, &m.presentation().parse_word(w).unwrap()).unwrap();
        assert_eq!(can("a b a"), 0);
        assert_eq!(can("a b a a b a"), 0);
        assert_eq!(can("a"), 1);
        assert_eq!(can("a b a b"), 1);
        assert_eq!(can("a^-1"), 1);
        assert_eq!(can("a^-1 b^-1 a^-1"), 0);
        assert_eq!(can("a b^-1"), 2);
        let form = delta_form(&m, &d, &m.presentation().parse_word("a^-1").unwrap()).unwrap();
        assert_eq!(form.inf, -1);
        assert_eq!(m.show(&form.rest), "a b");
    }
}
