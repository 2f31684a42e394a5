mod common;

use garside_core::artin::Coxeter;
use garside_core::presentation::Letter;
use garside_core::reversing::{
    right_reverse, right_reverse_with, theta_star, Completeness, ReverseOptions, Status, Strategy,
};
use garside_core::{Monoid, Presentation};
use proptest::prelude::*;

fn quotient(p: &Presentation, u: &[usize], v: &[usize]) -> garside_core::SignedWord {
    let mut ls: Vec<Letter> = u.iter().rev().map(|&g| Letter::neg(g)).collect();
    ls.extend(v.iter().map(|&g| Letter::pos(g)));
    p.signed(ls).unwrap()
}

fn check_soundness(m: &Monoid, u: &[usize], v: &[usize]) -> Result<(), TestCaseError> {
    let p = m.presentation();
    let out = right_reverse(p, &quotient(p, u, v), 10_000).unwrap();
    if out.status == Status::Terminated {
        let (v1, u1) = out.word.split_positive_negative().unwrap();
        let lhs = m.element([u, &v1[..]].concat()).unwrap();
        let rhs = m.element([v, &u1[..]].concat()).unwrap();
        prop_assert!(m.equal(&lhs, &rhs).unwrap());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn soundness_braid(u in common::word(2, 5), v in common::word(2, 5)) {
        check_soundness(&common::braid3(), &u, &v)?;
    }

    #[test]
    fn soundness_two_mcms(u in common::word(4, 4), v in common::word(4, 4)) {
        check_soundness(&common::two_mcms(), &u, &v)?;
    }

    #[test]
    fn soundness_artin(u in common::word(3, 4), v in common::word(3, 4)) {
        let m = Monoid::new(Coxeter::uniform(3, 3).presentation().unwrap());
        check_soundness(&m, &u, &v)?;
    }

    #[test]
    fn strategy_independent(u in common::word(2, 5), v in common::word(2, 5)) {
        let m = common::braid3();
        let p = m.presentation();
        let w = quotient(p, &u, &v);
        let a = right_reverse_with(p, &w, &ReverseOptions::budget(10_000)).unwrap();
        let b = right_reverse_with(
            p,
            &w,
            &ReverseOptions { strategy: Strategy::Rightmost, ..ReverseOptions::budget(10_000) },
        )
        .unwrap();
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.word, b.word);
    }
}

#[test]
fn grid_splitting() {
    let m = common::braid3();
    let p = m.presentation();
    let words: Vec<Vec<usize>> = (0..=3usize)
        .flat_map(|k| (0..1usize << k).map(move |bits| (0..k).map(|i| bits >> i & 1).collect()))
        .collect();
    for u1 in &words {
        for u2 in &words {
            for v in &words {
                let whole = theta_star(p, &[&u1[..], u2].concat(), v, 10_000).unwrap().unwrap();
                // u1⁻¹ v ↷ v1 w⁻¹, then u2⁻¹ v1 ↷ v2.
                let v1 = theta_star(p, u1, v, 10_000).unwrap().unwrap();
                let v2 = theta_star(p, u2, &v1, 10_000).unwrap().unwrap();
                assert_eq!(whole, v2, "{u1:?} {u2:?} {v:?}");
            }
        }
    }
}

#[test]
fn divergence_sample_budgets() {
    let p = Presentation::monoid(&["a", "b"], &[("a", "b b a b")]).unwrap();
    let w = p.parse_word("a^-1 b a").unwrap();
    for budget in [1, 2, 3, 7, 64, 1000, 10_000] {
        let out = right_reverse(&p, &w, budget).unwrap();
        assert_eq!(out.status, Status::Diverged);
        assert!(out.loop_detected(), "budget {budget}");
    }
}

#[test]
fn artin_tits_complete() {
    for (n, k) in [(3, 3), (3, 4), (4, 3)] {
        let m = Monoid::new(Coxeter::uniform(n, k).presentation().unwrap());
        assert_eq!(*m.completeness(), Completeness::Complete, "n={n} m={k}");
    }
    let m = Monoid::new(Coxeter::right_angled(3, &[(0, 1), (1, 2)]).presentation().unwrap());
    assert_eq!(*m.completeness(), Completeness::Complete);
}

#[test]
fn not_noetherian_is_unknown() {
    let m = Monoid::new(Presentation::monoid(&["a", "b"], &[("a", "a b")]).unwrap());
    assert!(matches!(m.completeness(), Completeness::Unknown(_)));
}
