mod common;

use garside_core::{BackendKind, Monoid, MonoidOptions, Presentation};
use proptest::prelude::*;

fn all_words(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max {
        frontier = frontier
            .iter()
            .flat_map(|w: &Vec<usize>| (0..n).map(move |g| [&w[..], &[g]].concat()))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

#[test]
fn backends_agree_on_braids() {
    let p = Presentation::monoid(&["a", "b"], &[("a b a", "b a b")]).unwrap();
    let bfs = Monoid::with_backend(p.clone(), BackendKind::HomogeneousBfs, MonoidOptions::default()).unwrap();
    let rev = Monoid::with_backend(p, BackendKind::DoubleReversing, MonoidOptions::default()).unwrap();
    let words = all_words(2, 5);
    for u in &words {
        for v in words.iter().filter(|v| v.len() == u.len()) {
            let x = bfs.equal(&bfs.element(u.clone()).unwrap(), &bfs.element(v.clone()).unwrap()).unwrap();
            let y = rev.equal(&rev.element(u.clone()).unwrap(), &rev.element(v.clone()).unwrap()).unwrap();
            assert_eq!(x, y, "{u:?} {v:?}");
        }
    }
}

#[test]
fn two_mcms_mcms() {
    let m = common::two_mcms();
    let e = |s| m.elem(s).unwrap();
    let r = m.right_mcms(&e("a"), &e("b"), None).unwrap();
    let words: Vec<String> = r.elements.iter().map(|x| m.show(x)).collect();
    assert_eq!(words, ["a b", "a a'"]);
    assert!(m.right_lcm(&e("a"), &e("b")).is_err());
    assert!(m.right_mcms(&e("a"), &e("a'"), None).unwrap().elements.is_empty());
}

fn check_lcm_laws(m: &Monoid, u: &[usize], v: &[usize]) -> Result<(), TestCaseError> {
    let (a, b) = (m.element(u.to_vec()).unwrap(), m.element(v.to_vec()).unwrap());
    if let Ok(Some(l)) = m.right_lcm(&a, &b) {
        prop_assert!(m.left_divides(&a, &l).unwrap());
        prop_assert!(m.left_divides(&b, &l).unwrap());
        let bound = m.weight(&l).unwrap() + 2;
        let (commons, _) = m.common_right_multiples(&a, &b, bound).unwrap();
        for c in commons {
            prop_assert!(m.left_divides(&l, &c).unwrap());
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lcm_laws_braid(u in common::word(2, 4), v in common::word(2, 4)) {
        check_lcm_laws(&common::braid3(), &u, &v)?;
    }

    #[test]
    fn lcm_laws_free_abelian(u in common::word(3, 3), v in common::word(3, 3)) {
        check_lcm_laws(&common::free_abelian3(), &u, &v)?;
    }

    /// Some right-mcm left-divides every common right-multiple.
    #[test]
    fn mcms_below_common_multiples(u in common::word(4, 2), v in common::word(4, 2)) {
        let m = common::two_mcms();
        let (a, b) = (m.element(u).unwrap(), m.element(v).unwrap());
        let mcms = m.right_mcms(&a, &b, None).unwrap();
        let bound = m.weight(&a).unwrap() + m.weight(&b).unwrap() + 1;
        let (commons, _) = m.common_right_multiples(&a, &b, bound).unwrap();
        for h in commons {
            let below = mcms.elements.iter().any(|x| m.left_divides(x, &h).unwrap());
            prop_assert!(below);
        }
    }

    #[test]
    fn unique_mcm_is_lcm(u in common::word(2, 3), v in common::word(2, 3)) {
        let m = common::braid3();
        let (a, b) = (m.element(u).unwrap(), m.element(v).unwrap());
        let mcms = m.right_mcms(&a, &b, None).unwrap();
        prop_assert_eq!(mcms.elements.len(), 1);
        let l = m.right_lcm(&a, &b).unwrap().unwrap();
        prop_assert!(m.equal(&l, &mcms.elements[0]).unwrap());
    }

    #[test]
    fn gcd_left_multiplication(f in common::word(2, 2), g1 in common::word(2, 2), g2 in common::word(2, 2)) {
        let m = common::braid3();
        let f = m.element(f).unwrap();
        let (g1, g2) = (m.element(g1).unwrap(), m.element(g2).unwrap());
        let lhs = m.left_gcd(&m.mul(&f, &g1).unwrap(), &m.mul(&f, &g2).unwrap()).unwrap();
        let rhs = m.mul(&f, &m.left_gcd(&g1, &g2).unwrap()).unwrap();
        prop_assert!(m.equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn height_additive(u in common::word(2, 4), v in common::word(2, 4)) {
        let m = common::braid3();
        let (a, b) = (m.element(u).unwrap(), m.element(v).unwrap());
        let h = m.height(&m.mul(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(h, m.height(&a).unwrap() + m.height(&b).unwrap());
    }
}

#[test]
fn absorbing_unit_divisors() {
    let m = common::absorbing_unit();
    let a = m.elem("a").unwrap();
    let divs: Vec<String> = m.left_divisors(&a).unwrap().iter().map(|x| m.show(x)).collect();
    assert!(divs.contains(&"a".to_string()));
    assert!(m.is_invertible(&m.elem("e").unwrap()));
}
