//! Artin–Tits presentations from Coxeter data, and the generating set E
//! of the smallest Garside family in large type.

use crate::error::{Error, Result};
use crate::monoid::{Element, Monoid};
use crate::presentation::Presentation;

/// Symmetric Coxeter matrix; `None` stands for ∞.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coxeter {
    pub names: Vec<String>,
    pub m: Vec<Vec<Option<u32>>>,
}

impl Coxeter {
    /// All off-diagonal entries equal to `m`.
    pub fn uniform(n: usize, m: u32) -> Self {
        Self::from_fn(n, |_, _| Some(m))
    }

    /// `m = 2` on the given commuting pairs, ∞ elsewhere.
    pub fn right_angled(n: usize, commuting: &[(usize, usize)]) -> Self {
        Self::from_fn(n, |i, j| {
            commuting
                .iter()
                .any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
                .then_some(2)
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Option<u32>) -> Self {
        let names = (0..n).map(default_name).collect();
        let m = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Some(1) } else { f(i.min(j), i.max(j)) }).collect())
            .collect();
        Coxeter { names, m }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Relations `Prod(s,t,m) = Prod(t,s,m)` for finite `m ≥ 2`.
    pub fn presentation(&self) -> Result<Presentation> {
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        let mut rels: Vec<(String, String)> = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                match self.m[i][j] {
                    Some(k) if k >= 2 => rels.push((
                        alternating(&self.names[i], &self.names[j], k as usize),
                        alternating(&self.names[j], &self.names[i], k as usize),
                    )),
                    Some(k) => return Err(Error::Invalid(format!("Coxeter entry {k} below 2"))),
                    None => {}
                }
            }
        }
        let refs: Vec<(&str, &str)> = rels.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Presentation::monoid(&names, &refs)
    }
}

fn default_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("s{}", i + 1)
    }
}

/// `s t s …` with `k` letters.
pub fn alternating(s: &str, t: &str, k: usize) -> String {
    (0..k).map(|i| if i % 2 == 0 { s } else { t }).collect::<Vec<_>>().join(" ")
}

/// `E = Σ₁ ∪ {Δ_{s,t} : (s,t) ∈ Σ₂} ∪ {r Δ_{s,t} : (r,s,t) ∈ Σ₃}` for a
/// large-type matrix (all finite entries at least 3).
pub fn large_type_e_set(m: &Monoid, cox: &Coxeter) -> Result<Vec<Element>> {
    let n = cox.len();
    let finite = |i: usize, j: usize| cox.m[i][j].is_some();
    for i in 0..n {
        for j in 0..n {
            if i != j && cox.m[i][j].is_some_and(|k| k < 3) {
                return Err(Error::Invalid("not of large type".into()));
            }
        }
    }
    let delta = |s: usize, t: usize| -> Result<Element> {
        let k = cox.m[s][t].expect("finite") as usize;
        m.elem(&alternating(&cox.names[s], &cox.names[t], k))
    };
    let mut out = Vec::new();
    for s in 0..n {
        if (0..n).all(|r| r == s || !finite(r, s)) {
            out.push(m.element(vec![s])?);
        }
    }
    for s in 0..n {
        for t in s + 1..n {
            if finite(s, t) && (0..n).all(|r| r == s || r == t || !(finite(r, s) && finite(r, t))) {
                out.push(delta(s, t)?);
            }
        }
    }
    for r in 0..n {
        for s in 0..n {
            for t in s + 1..n {
                if r != s && r != t && finite(r, s) && finite(r, t) && finite(s, t) {
                    out.push(m.mul(&m.element(vec![r])?, &delta(s, t)?)?);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_relations() {
        let p = Coxeter::uniform(3, 3).presentation().unwrap();
        assert_eq!(p.relations().len(), 3);
        assert_eq!(p.format_word(&p.relations()[0].lhs), "a b a");
        let p = Coxeter::right_angled(3, &[(0, 1)]).presentation().unwrap();
        assert_eq!(p.relations().len(), 1);
    }

    #[test]
    fn e_set_sizes() {
        for n in [3, 4] {
            let cox = Coxeter::uniform(n, 3);
            let m = Monoid::new(cox.presentation().unwrap());
            let e = large_type_e_set(&m, &cox).unwrap();
            assert_eq!(e.len(), 3 * n * (n - 1) * (n - 2) / 6);
        }
    }

    #[test]
    fn smallest_family_counts() {
        use crate::families::smallest_garside_family;
        for (n, k) in [(2usize, 3u32), (3, 3), (3, 4), (4, 3)] {
            let m = Monoid::new(Coxeter::uniform(n, k).presentation().unwrap());
            let f = smallest_garside_family(&m, None).unwrap();
            assert!(!f.bound_hit);
            let formula = (n + 2 * k as usize - 5) * n * (n - 1) / 2 + n + 1;
            assert_eq!(f.closed.len(), formula, "n={n} m={k}");
        }
    }

    #[test]
    fn closure_of_e_set() {
        use crate::families::close_under_right_divisors;
        let cox = Coxeter::uniform(3, 3);
        let m = Monoid::new(cox.presentation().unwrap());
        let e = large_type_e_set(&m, &cox).unwrap();
        let c = close_under_right_divisors(&m, &e).unwrap();
        assert_eq!(c.closed.len(), 16);
    }
}
