//! Closures, Garside-family recognition, solidity, bounded structures
//! (Δ, ∂, φ) and compatibility of submonoids with a family.

use std::collections::BTreeSet;
use std::sync::Mutex;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::monoid::{Element, Monoid};
use crate::normal::{normal_decomposition, ClosureFlags, Family};

/// Default weight cap for closures.
pub const DEFAULT_CLOSURE_BOUND: u64 = 64;

#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub input: Vec<Element>,
    pub closed: Family,
    pub rounds: usize,
    pub bound_hit: bool,
}

fn require_canonical(m: &Monoid) -> Result<()> {
    if m.has_canonical() {
        Ok(())
    } else {
        Err(Error::BackendInapplicable("closures need canonical representatives".into()))
    }
}

/// Smallest superset closed under right-divisors.
pub fn close_under_right_divisors(m: &Monoid, xs: &[Element]) -> Result<ClosureReport> {
    require_canonical(m)?;
    let mut set = BTreeSet::new();
    for x in xs {
        set.extend(m.right_divisors(x)?);
    }
    Ok(ClosureReport {
        input: xs.to_vec(),
        closed: Family::new(m, set)?,
        rounds: 1,
        bound_hit: false,
    })
}

/// Smallest superset closed under right-mcms and right-divisors; mcms of
/// weight above `bound` are dropped and reported.
pub fn close_under_right_mcm(m: &Monoid, xs: &[Element], bound: Option<u64>) -> Result<ClosureReport> {
    require_canonical(m)?;
    let bound = bound.unwrap_or(DEFAULT_CLOSURE_BOUND);
    let mut set: BTreeSet<Element> = BTreeSet::new();
    let mut frontier: Vec<Element> = Vec::new();
    let add = |e: &Element, set: &mut BTreeSet<Element>, frontier: &mut Vec<Element>| -> Result<()> {
        for d in m.right_divisors(e)? {
            if set.insert(d.clone()) {
                frontier.push(d);
            }
        }
        Ok(())
    };
    for x in xs {
        if set.insert(x.clone()) {
            frontier.push(x.clone());
        }
        add(x, &mut set, &mut frontier)?;
    }
    let mut rounds = 0;
    let mut bound_hit = false;
    while !frontier.is_empty() {
        rounds += 1;
        let current: Vec<Element> = std::mem::take(&mut frontier);
        let all: Vec<Element> = set.iter().cloned().collect();
        for x in &current {
            for y in &all {
                if x.source != y.source || x == y {
                    continue;
                }
                let mcms = match m.right_mcms(x, y, None) {
                    Ok(r) => r,
                    Err(Error::CapExceeded(_)) => {
                        bound_hit = true;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                bound_hit |= mcms.cap_hit;
                for mu in &mcms.elements {
                    if m.weight(mu).unwrap_or(0) > bound {
                        bound_hit = true;
                        continue;
                    }
                    if set.insert(mu.clone()) {
                        frontier.push(mu.clone());
                    }
                    add(mu, &mut set, &mut frontier)?;
                }
            }
        }
        if set.len() > m.options().enumeration_cap {
            return Err(Error::CapExceeded("closure too large".into()));
        }
    }
    Ok(ClosureReport {
        input: xs.to_vec(),
        closed: Family::new(m, set)?,
        rounds,
        bound_hit,
    })
}

/// Closure of the atoms and identities under right-mcm and right-divisor.
pub fn smallest_garside_family(m: &Monoid, bound: Option<u64>) -> Result<ClosureReport> {
    let mut seeds = m.atoms()?;
    for x in 0..m.presentation().objects().len() {
        seeds.push(m.identity(x));
    }
    let mut report = close_under_right_mcm(m, &seeds, bound)?;
    report.closed.flags = ClosureFlags {
        right_divisor_closed: Some(true),
        right_mcm_closed: (!report.bound_hit).then_some(true),
        right_comultiple_closed: (!report.bound_hit).then_some(true),
    };
    Ok(report)
}

/// A submonoid given by generators, or the whole monoid. Membership is
/// decided by enumerating its elements by weight.
pub struct Submonoid<'a> {
    m: &'a Monoid,
    gens: Vec<Element>,
    whole: bool,
    cache: Mutex<(Option<u64>, BTreeSet<Element>)>,
}

impl<'a> Submonoid<'a> {
    pub fn whole(m: &'a Monoid) -> Result<Self> {
        Ok(Submonoid {
            m,
            gens: m.generators()?,
            whole: true,
            cache: Mutex::new((None, BTreeSet::new())),
        })
    }

    pub fn generated_by(m: &'a Monoid, gens: Vec<Element>) -> Result<Self> {
        require_canonical(m)?;
        if !m.presentation().is_single_object() {
            return Err(Error::Invalid("submonoids are supported in monoids only".into()));
        }
        Ok(Submonoid {
            m,
            gens,
            whole: false,
            cache: Mutex::new((None, BTreeSet::new())),
        })
    }

    pub fn monoid(&self) -> &Monoid {
        self.m
    }

    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    /// Elements of weight at most `w`.
    pub fn elements_up_to(&self, w: u64) -> Result<Vec<Element>> {
        let mut cache = self.cache.lock().unwrap();
        if cache.0.is_none_or(|c| c < w) {
            let mut set = BTreeSet::from([self.m.identity(0)]);
            let mut queue = vec![self.m.identity(0)];
            while let Some(x) = queue.pop() {
                for g in &self.gens {
                    let y = self.m.mul(&x, g)?;
                    if self.m.weight(&y).unwrap_or(0) <= w && set.insert(y.clone()) {
                        if set.len() > self.m.options().enumeration_cap {
                            return Err(Error::CapExceeded("submonoid enumeration".into()));
                        }
                        queue.push(y);
                    }
                }
            }
            *cache = (Some(w), set);
        }
        Ok(cache
            .1
            .iter()
            .filter(|e| self.m.weight(e).unwrap_or(0) <= w)
            .cloned()
            .collect())
    }

    pub fn contains(&self, e: &Element) -> Result<bool> {
        if self.whole {
            return Ok(true);
        }
        let w = self
            .m
            .weight(e)
            .ok_or_else(|| Error::NotNoetherian("submonoid membership needs a grading".into()))?;
        let e = self.m.canonical(e.clone())?;
        Ok(self.elements_up_to(w)?.contains(&e))
    }

    pub fn units(&self) -> Result<Vec<Element>> {
        if self.whole {
            return Ok(self.m.units(0)?.iter().cloned().collect());
        }
        self.elements_up_to(0)
    }

    /// `h` in the submonoid with `f h = g`.
    pub fn left_quotient(&self, f: &Element, g: &Element) -> Result<Option<Element>> {
        match self.m.left_quotient(f, g)? {
            Some(h) if self.contains(&h)? => Ok(Some(h)),
            _ => Ok(None),
        }
    }

    pub fn left_divides(&self, f: &Element, g: &Element) -> Result<bool> {
        Ok(self.left_quotient(f, g)?.is_some())
    }

    /// Right-divisors `h` of `s` with `s = g h`, `g` and `h` in the submonoid.
    pub fn right_divisors(&self, s: &Element) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for h in self.m.right_divisors(s)? {
            if !self.contains(&h)? {
                continue;
            }
            if let Some(g) = self.m.right_quotient(&h, s)? {
                if self.contains(&g)? {
                    out.push(h);
                }
            }
        }
        Ok(out)
    }

    pub fn eqir(&self, a: &Element, b: &Element) -> Result<bool> {
        for u in self.units()? {
            if self.m.equal(a, &self.m.mul(b, &u)?)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Minimal common right-multiples inside the submonoid, one per
    /// =̃-class.
    pub fn right_mcms(&self, f: &Element, g: &Element) -> Result<Vec<Element>> {
        if self.whole {
            return Ok(self.m.right_mcms(f, g, None)?.elements);
        }
        let wf = self.m.weight(f).unwrap_or(0);
        let wg = self.m.weight(g).unwrap_or(0);
        let mut common = Vec::new();
        for c in self.elements_up_to(wf + wg)? {
            if self.left_divides(f, &c)? && self.left_divides(g, &c)? {
                common.push(c);
            }
        }
        let mut minimal: Vec<Element> = Vec::new();
        for c in &common {
            let mut is_min = true;
            for d in &common {
                if d != c && self.left_divides(d, c)? && !self.left_divides(c, d)? {
                    is_min = false;
                    break;
                }
            }
            if is_min && !self.contains_eqir(&minimal, c)? {
                minimal.push(c.clone());
            }
        }
        Ok(minimal)
    }

    fn contains_eqir(&self, xs: &[Element], e: &Element) -> Result<bool> {
        for x in xs {
            if self.eqir(e, x)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `S♯ = S·N× ∪ N×` as an explicit set.
    pub fn sharp(&self, s: &[Element]) -> Result<Vec<Element>> {
        let units = self.units()?;
        let mut out = BTreeSet::new();
        out.extend(units.iter().cloned());
        for x in s {
            for u in &units {
                out.insert(self.m.mul(x, u)?);
            }
        }
        Ok(out.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarsideVerdict {
    pub is_garside: bool,
    pub criterion: &'static str,
    pub failures: Vec<String>,
}

const CRITERION: &str = "generation, closure of S♯ under left-multiplication by invertibles, right-divisor and right-mcm";

fn generated_by_set(sub: &Submonoid, sharp: &[Element], g: &Element) -> Result<bool> {
    let m = sub.monoid();
    if sharp.contains(g) || g.is_empty() {
        return Ok(true);
    }
    for x in sharp {
        if m.is_invertible(x) {
            continue;
        }
        if let Some(q) = sub.left_quotient(x, g)? {
            if generated_by_set(sub, sharp, &q)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Garside-family test inside a submonoid (or the whole monoid).
pub fn garside_in(sub: &Submonoid, s: &[Element]) -> Result<GarsideVerdict> {
    let m = sub.monoid();
    let s: Vec<Element> = s.iter().map(|e| m.canonical(e.clone())).collect::<Result<_>>()?;
    let sharp = sub.sharp(&s)?;
    let mut failures = Vec::new();
    for g in sub.generators() {
        if !generated_by_set(sub, &sharp, g)? {
            failures.push(format!("{} is not generated by S♯", m.show(g)));
        }
    }
    for u in sub.units()? {
        for x in &s {
            let ux = m.mul(&u, x)?;
            if !sharp.contains(&ux) {
                failures.push(format!(
                    "{} = {}·{} lies outside S♯",
                    m.show(&ux),
                    m.show(&u),
                    m.show(x)
                ));
            }
        }
    }
    for x in &s {
        for h in sub.right_divisors(x)? {
            if !sharp.contains(&h) {
                failures.push(format!("{} right-divides {} but lies outside S♯", m.show(&h), m.show(x)));
            }
        }
    }
    for (i, x) in s.iter().enumerate() {
        for y in &s[i + 1..] {
            if x.source != y.source {
                continue;
            }
            for mu in sub.right_mcms(x, y)? {
                if !sharp.contains(&mu) {
                    failures.push(format!(
                        "{} is a right-mcm of {} and {} outside S♯",
                        m.show(&mu),
                        m.show(x),
                        m.show(y)
                    ));
                }
            }
        }
    }
    failures.dedup();
    Ok(GarsideVerdict {
        is_garside: failures.is_empty(),
        criterion: CRITERION,
        failures,
    })
}

pub fn is_garside_family(m: &Monoid, s: &Family) -> Result<GarsideVerdict> {
    if m.grading().is_none() {
        return Err(Error::Inconclusive("Garside recognition needs a Noetherian presentation".into()));
    }
    garside_in(&Submonoid::whole(m)?, &s.elements)
}

/// Closure flags of a family: right-divisor and right-mcm closure are
/// exact (members of S), right-comultiple closure is up to invertibles.
pub fn closure_flags(m: &Monoid, s: &Family) -> Result<ClosureFlags> {
    let sharp = s.sharp(m)?;
    let mut div = true;
    for x in &s.elements {
        for h in m.right_divisors(x)? {
            if !h.is_empty() && !s.contains(m, &h)? {
                div = false;
            }
        }
    }
    let (mut mcm, mut comult) = (true, true);
    for x in &s.elements {
        for y in &s.elements {
            if x.source != y.source || x == y {
                continue;
            }
            for mu in m.right_mcms(x, y, None)?.elements {
                if !s.contains(m, &mu)? {
                    mcm = false;
                }
                if !sharp.contains(m, &mu)? {
                    comult = false;
                }
            }
        }
    }
    Ok(ClosureFlags {
        right_divisor_closed: Some(div),
        right_mcm_closed: Some(mcm),
        right_comultiple_closed: Some(comult),
    })
}

impl Family {
    /// `S♯ = S·C× ∪ C×`.
    pub fn sharp(&self, m: &Monoid) -> Result<Family> {
        let mut out = Vec::new();
        for x in 0..m.presentation().objects().len() {
            out.extend(m.units(x)?.iter().cloned());
        }
        for s in &self.elements {
            for u in m.units(s.target)?.iter() {
                out.push(m.mul(s, u)?);
            }
        }
        Family::new(m, out)
    }
}

/// Contains the identities and is closed under right-quotient.
pub fn is_solid(m: &Monoid, s: &Family) -> Result<bool> {
    for x in 0..m.presentation().objects().len() {
        if !s.contains(m, &m.identity(x))? {
            return Ok(false);
        }
    }
    for x in &s.elements {
        for h in m.right_divisors(x)? {
            if !s.contains(m, &h)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A Garside element Δ with its divisors, the duality `∂s = s⁻¹Δ` and
/// `φ = ∂²`.
#[derive(Clone, Debug)]
pub struct DeltaStructure {
    pub delta: Element,
    pub divisors: Family,
    /// `dual[i]` is the index of `∂(divisors[i])`.
    pub dual: Vec<usize>,
    /// `phi[i]` is the index of `φ(divisors[i])`.
    pub phi: Vec<usize>,
    /// `Δ s Δ⁻¹` for each generator `s`.
    conj: Vec<Element>,
}

impl DeltaStructure {
    pub fn index_of(&self, m: &Monoid, s: &Element) -> Result<Option<usize>> {
        for (i, d) in self.divisors.elements.iter().enumerate() {
            if m.equal(d, s)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn dual_of(&self, m: &Monoid, s: &Element) -> Result<Element> {
        let i = self
            .index_of(m, s)?
            .ok_or_else(|| Error::Invalid(format!("{} does not divide Δ", m.show(s))))?;
        Ok(self.divisors.elements[self.dual[i]].clone())
    }

    pub fn phi_of(&self, m: &Monoid, s: &Element) -> Result<Element> {
        let i = self
            .index_of(m, s)?
            .ok_or_else(|| Error::Invalid(format!("{} does not divide Δ", m.show(s))))?;
        Ok(self.divisors.elements[self.phi[i]].clone())
    }

    /// `Δ^k`.
    pub fn delta_power(&self, m: &Monoid, k: usize) -> Result<Element> {
        let mut acc = m.identity(self.delta.source);
        for _ in 0..k {
            acc = m.mul(&acc, &self.delta)?;
        }
        Ok(acc)
    }

    /// `∂_k(g) = g⁻¹ Δ^k` for `g` dividing `Δ^k`.
    pub fn dual_power(&self, m: &Monoid, g: &Element, k: usize) -> Result<Element> {
        m.left_quotient(g, &self.delta_power(m, k)?)?
            .ok_or_else(|| Error::Invalid(format!("{} does not divide Δ^{k}", m.show(g))))
    }

    /// `Δ p Δ⁻¹`, letter by letter.
    pub fn conjugate_back(&self, m: &Monoid, p: &Element) -> Result<Element> {
        let mut acc = m.identity(p.source);
        for &g in &p.word {
            acc = m.mul(&acc, &self.conj[g])?;
        }
        Ok(acc)
    }

    /// `s ∂s ≡ Δ` for every divisor, and `s ⊑ t ⇔ ∂t` right-divides `∂s`
    /// (up to invertibles) for every pair.
    pub fn check_duality(&self, m: &Monoid) -> Result<bool> {
        let ds = &self.divisors.elements;
        for (i, s) in ds.iter().enumerate() {
            if !m.equal(&m.mul(s, &ds[self.dual[i]])?, &self.delta)? {
                return Ok(false);
            }
        }
        for (i, s) in ds.iter().enumerate() {
            for (j, t) in ds.iter().enumerate() {
                let left = m.left_divides(s, t)?;
                let right = self.right_divides_up_to_units(m, &ds[self.dual[j]], &ds[self.dual[i]])?;
                if left != right {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn right_divides_up_to_units(&self, m: &Monoid, a: &Element, b: &Element) -> Result<bool> {
        for u in m.units(a.source)?.iter() {
            if u.target == a.source && m.right_divides(&m.mul(u, a)?, b)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `φ` is injective on pairs of divisors: `φ(s)φ(t) ≡ φ(s′)φ(t′)`
    /// forces `st ≡ s′t′`.
    pub fn phi_injective_on_pairs(&self, m: &Monoid) -> Result<bool> {
        let ds = &self.divisors.elements;
        let mut seen: std::collections::HashMap<Vec<usize>, Vec<usize>> = std::collections::HashMap::new();
        for (i, s) in ds.iter().enumerate() {
            for (j, t) in ds.iter().enumerate() {
                if s.target != t.source {
                    continue;
                }
                let img = m.mul(&ds[self.phi[i]], &ds[self.phi[j]])?;
                let pre = m.mul(s, t)?;
                if let Some(prev) = seen.insert(img.word.clone(), pre.word.clone()) {
                    if prev != pre.word {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self, m: &Monoid) -> Value {
        let ds = &self.divisors.elements;
        json!({
            "delta": m.show(&self.delta),
            "divisors": self.divisors.words(m),
            "dual": ds.iter().enumerate().map(|(i, s)| json!({
                "s": m.show(s),
                "dual": m.show(&ds[self.dual[i]]),
                "phi": m.show(&ds[self.phi[i]]),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Builds the Δ-structure; `NotBounded` unless the left- and
/// right-divisors of Δ coincide and conjugation by Δ preserves them.
pub fn delta_structure(m: &Monoid, delta: &Element) -> Result<DeltaStructure> {
    let left = Family::new(m, m.left_divisors(delta)?)?;
    let right = Family::new(m, m.right_divisors(delta)?)?;
    if left.len() != right.len() {
        return Err(Error::NotBounded(format!(
            "{} left-divisors but {} right-divisors",
            left.len(),
            right.len()
        )));
    }
    for r in &right.elements {
        if !left.contains(m, r)? {
            return Err(Error::NotBounded(format!("{} right-divides Δ only", m.show(r))));
        }
    }
    let mut dual = Vec::new();
    for s in &left.elements {
        let d = m.left_quotient(s, delta)?.expect("divisor");
        let mut found = None;
        for (j, t) in left.elements.iter().enumerate() {
            if m.equal(t, &d)? {
                found = Some(j);
                break;
            }
        }
        dual.push(found.ok_or_else(|| Error::NotBounded(format!("∂{} is not a divisor", m.show(s))))?);
    }
    let phi: Vec<usize> = (0..dual.len()).map(|i| dual[dual[i]]).collect();
    let mut sorted = phi.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != phi.len() {
        return Err(Error::NotBounded("φ does not permute the divisors".into()));
    }
    let mut conj = Vec::new();
    for g in 0..m.presentation().num_gens() {
        let s = m.element(vec![g])?;
        let ds = m.mul(delta, &s)?;
        let c = m
            .right_quotient(delta, &ds)?
            .ok_or_else(|| Error::NotBounded(format!("Δ·{} is not a left-multiple of Δ", m.show(&s))))?;
        conj.push(c);
    }
    Ok(DeltaStructure {
        delta: delta.clone(),
        divisors: left,
        dual,
        phi,
        conj,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatVerdict {
    pub compatible: bool,
    /// `|S♯|` in the ambient monoid.
    pub sharp_size: usize,
    /// `|S♯ ∩ N|`.
    pub sharp_in_sub_size: usize,
    /// Whether `N` is closed under right-quotient (within the enumeration).
    pub sub_right_quotient_closed: bool,
    /// Outcome of the Garside test for `S ∩ N` inside `N`.
    pub sub_family_garside: bool,
    pub failures: Vec<String>,
}

/// Compatibility of the submonoid `N` generated by `sub_gens` with `S`,
/// with `S₁ = S ∩ N`: `S₁♯` generates `N`, and every product of two
/// elements of `S₁♯` has an S-normal decomposition (up to deformation by
/// invertibles) whose entries lie in `S₁♯`.
pub fn check_compatibility(m: &Monoid, sub_gens: &[Element], s: &Family) -> Result<CompatVerdict> {
    let sub = Submonoid::generated_by(m, sub_gens.to_vec())?;
    let sharp = s.sharp(m)?;
    let mut in_sub_sharp = 0;
    for x in &sharp.elements {
        if sub.contains(x)? {
            in_sub_sharp += 1;
        }
    }
    let mut s1 = Vec::new();
    for x in &s.elements {
        if sub.contains(x)? {
            s1.push(x.clone());
        }
    }
    let s1_sharp = sub.sharp(&s1)?;
    let mut failures = Vec::new();
    for g in sub.generators() {
        if !generated_by_set(&sub, &s1_sharp, g)? {
            failures.push(format!("{} is not generated by (S ∩ N)♯", m.show(g)));
        }
    }
    let units = m.units(0)?;
    for a in &s1_sharp {
        for b in &s1_sharp {
            let ab = m.mul(a, b)?;
            let np = normal_decomposition(m, s, &ab)?;
            if !deformable_into(m, &units, &np.entries, &s1_sharp)? {
                failures.push(format!(
                    "{}·{} = {} has no S-normal decomposition inside (S ∩ N)♯",
                    m.show(a),
                    m.show(b),
                    m.show(&ab)
                ));
            }
        }
    }
    let mut rq_closed = true;
    let bound = sub
        .generators()
        .iter()
        .map(|g| m.weight(g).unwrap_or(0))
        .max()
        .unwrap_or(0)
        * 2;
    'outer: for x in sub.elements_up_to(bound)? {
        for d in m.left_divisors(&x)? {
            if sub.contains(&d)? {
                let q = m.left_quotient(&d, &x)?.expect("divisor");
                if !sub.contains(&q)? {
                    rq_closed = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(CompatVerdict {
        compatible: failures.is_empty(),
        sharp_size: sharp.len(),
        sharp_in_sub_size: in_sub_sharp,
        sub_right_quotient_closed: rq_closed,
        sub_family_garside: garside_in(&sub, &s1)?.is_garside,
        failures,
    })
}

/// Searches invertibles `e_i` (with `e_0 = e_r = 1`) making every entry
/// `e_{i-1}⁻¹ g_i e_i` a member of `target`.
fn deformable_into(m: &Monoid, units: &[Element], path: &[Element], target: &[Element]) -> Result<bool> {
    if path.is_empty() {
        return Ok(true);
    }
    let inverse = |u: &Element| -> Result<Element> {
        for v in units {
            if m.mul(u, v)?.is_empty() {
                return Ok(v.clone());
            }
        }
        Err(Error::Invalid("unit without inverse".into()))
    };
    let mut reach: Vec<Element> = vec![m.identity(0)];
    for (i, g) in path.iter().enumerate() {
        let last = i + 1 == path.len();
        let mut next: Vec<Element> = Vec::new();
        for e_prev in &reach {
            let left = m.mul(&inverse(e_prev)?, g)?;
            for e in units {
                if last && !e.is_empty() {
                    continue;
                }
                if target.contains(&m.mul(&left, e)?) && !next.contains(e) {
                    next.push(e.clone());
                }
            }
        }
        if next.is_empty() {
            return Ok(false);
        }
        reach = next;
    }
    Ok(true)
}
