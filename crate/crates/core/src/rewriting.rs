//! Oriented relations as a string rewriting system, with the critical-pair
//! test for local confluence.

use std::cmp::Ordering;

use crate::presentation::Presentation;

/// Length first, then lexicographic by generator declaration order.
pub fn shortlex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug)]
pub struct RewritingSystem {
    rules: Vec<(Vec<usize>, Vec<usize>)>,
    by_last: Vec<Vec<usize>>,
}

impl RewritingSystem {
    fn from_rules(rules: Vec<(Vec<usize>, Vec<usize>)>, num_gens: usize) -> Self {
        let mut by_last = vec![Vec::new(); num_gens];
        for (i, (l, _)) in rules.iter().enumerate() {
            by_last[*l.last().expect("rule with empty left side")].push(i);
        }
        RewritingSystem { rules, by_last }
    }

    /// Every relation oriented longer → shorter; `None` when some relation
    /// has equal lengths.
    pub fn length_reducing(p: &Presentation) -> Option<Self> {
        let mut rules = Vec::new();
        for r in p.relations() {
            match r.lhs.len().cmp(&r.rhs.len()) {
                Ordering::Greater => rules.push((r.lhs.clone(), r.rhs.clone())),
                Ordering::Less => rules.push((r.rhs.clone(), r.lhs.clone())),
                Ordering::Equal => return None,
            }
        }
        Some(Self::from_rules(rules, p.num_gens()))
    }

    /// Every relation oriented towards its shortlex-smaller side.
    pub fn shortlex(p: &Presentation) -> Self {
        let mut rules = Vec::new();
        for r in p.relations() {
            match shortlex(&r.lhs, &r.rhs) {
                Ordering::Greater => rules.push((r.lhs.clone(), r.rhs.clone())),
                Ordering::Less => rules.push((r.rhs.clone(), r.lhs.clone())),
                Ordering::Equal => {}
            }
        }
        Self::from_rules(rules, p.num_gens())
    }

    pub fn rules(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.rules
    }

    /// Irreducible descendant of `w`.
    pub fn reduce(&self, w: &[usize]) -> Vec<usize> {
        let mut input: Vec<usize> = w.iter().rev().copied().collect();
        let mut out: Vec<usize> = Vec::with_capacity(w.len());
        while let Some(x) = input.pop() {
            out.push(x);
            for &i in &self.by_last[x] {
                let (l, r) = &self.rules[i];
                if out.ends_with(l) {
                    out.truncate(out.len() - l.len());
                    input.extend(r.iter().rev());
                    break;
                }
            }
        }
        out
    }

    /// A critical pair whose two reducts have distinct normal forms:
    /// `(overlap word, nf1, nf2)`.
    pub fn critical_pair_failure(&self) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
        let check = |w: Vec<usize>, a: Vec<usize>, b: Vec<usize>| {
            let (na, nb) = (self.reduce(&a), self.reduce(&b));
            (na != nb).then_some((w, na, nb))
        };
        for (i, (l1, r1)) in self.rules.iter().enumerate() {
            for (j, (l2, r2)) in self.rules.iter().enumerate() {
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let w = [l1.as_slice(), &l2[k..]].concat();
                        let a = [r1.as_slice(), &l2[k..]].concat();
                        let b = [&l1[..l1.len() - k], r2.as_slice()].concat();
                        if let Some(f) = check(w, a, b) {
                            return Some(f);
                        }
                    }
                }
                if i != j && l2.len() <= l1.len() {
                    for p in 0..=l1.len() - l2.len() {
                        if l1[p..p + l2.len()] == l2[..] {
                            let b = [&l1[..p], r2.as_slice(), &l1[p + l2.len()..]].concat();
                            if let Some(f) = check(l1.clone(), r1.clone(), b) {
                                return Some(f);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_confluent(&self) -> bool {
        self.critical_pair_failure().is_none()
    }
}
