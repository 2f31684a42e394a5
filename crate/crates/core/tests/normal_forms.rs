mod common;

use garside_core::families::smallest_garside_family;
use garside_core::normal::{
    head, is_deformation, is_greedy_pair, is_greedy_path, left_disjoint, left_multiply_normal, normal_decomposition,
    power_normal, symmetric_normal, Family,
};
use garside_core::{Element, Monoid};
use proptest::prelude::*;

fn braid_family(m: &Monoid) -> Family {
    smallest_garside_family(m, None).unwrap().closed
}

fn two_mcms_family(m: &Monoid) -> Family {
    Family::parse(m, &["1", "a", "b", "a'", "b'", "a b", "a' b'", "a a'", "a' a"]).unwrap()
}

fn check_head(m: &Monoid, s: &Family, g: &Element) -> Result<(), TestCaseError> {
    if g.is_empty() {
        return Ok(());
    }
    let h = head(m, s, g).unwrap();
    prop_assert!(s.contains(m, &h).unwrap());
    prop_assert!(m.left_divides(&h, g).unwrap());
    for t in &s.elements {
        if m.left_divides(t, g).unwrap() {
            prop_assert!(m.left_divides(t, &h).unwrap());
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn head_maximal_braid(w in common::word(2, 8)) {
        let m = common::braid3();
        let s = braid_family(&m);
        check_head(&m, &s, &m.element(w).unwrap())?;
    }

    #[test]
    fn head_maximal_two_mcms(w in common::word(4, 5)) {
        let m = common::two_mcms();
        let s = two_mcms_family(&m);
        check_head(&m, &s, &m.element(w).unwrap())?;
    }

    #[test]
    fn left_multiplication_coherent(w in common::word(2, 8), x in 0usize..2) {
        let m = common::braid3();
        let s = braid_family(&m);
        let g = m.element(w).unwrap();
        let np = normal_decomposition(&m, &s, &g).unwrap();
        let x = m.element(vec![x]).unwrap();
        let via_domino = left_multiply_normal(&m, &s, &x, &np).unwrap();
        let direct = normal_decomposition(&m, &s, &m.mul(&x, &g).unwrap()).unwrap();
        prop_assert!(is_greedy_path(&m, &s, &via_domino.entries).unwrap());
        prop_assert!(is_deformation(&m, &via_domino.entries, &direct.entries).unwrap());
    }

    #[test]
    fn deformation_unique_two_mcms(w in common::word(4, 6), x in 0usize..4) {
        let m = common::two_mcms();
        let s = two_mcms_family(&m);
        let g = m.element(w).unwrap();
        let x = m.element(vec![x]).unwrap();
        let a = left_multiply_normal(&m, &s, &x, &normal_decomposition(&m, &s, &g).unwrap()).unwrap();
        let b = normal_decomposition(&m, &s, &m.mul(&x, &g).unwrap()).unwrap();
        prop_assert!(is_deformation(&m, &a.entries, &b.entries).unwrap());
        prop_assert!(m.equal(&a.value(&m, 0).unwrap(), &b.value(&m, 0).unwrap()).unwrap());
    }

    #[test]
    fn symmetric_valid(u in common::word(2, 5), v in common::word(2, 5)) {
        let m = common::braid3();
        let s = braid_family(&m);
        let (u, v) = (m.element(u).unwrap(), m.element(v).unwrap());
        let sym = symmetric_normal(&m, &s, &u, &v).unwrap();
        let u2 = sym.negative.value(&m, 0).unwrap();
        let v2 = sym.positive.value(&m, 0).unwrap();
        prop_assert!(m.equal(&m.mul(&u2, &v).unwrap(), &m.mul(&v2, &u).unwrap()).unwrap());
        prop_assert!(left_disjoint(&m, &u2, &v2).unwrap());
    }

    /// Concatenating S-normal decompositions of the entries of an
    /// S^k-normal path gives an S-normal path.
    #[test]
    fn power_concatenation(w in common::word(2, 10), k in 2usize..=3) {
        let m = common::braid3();
        let s = braid_family(&m);
        let sk = s.power(&m, k).unwrap();
        let g = m.element(w).unwrap();
        let coarse = normal_decomposition(&m, &sk, &g).unwrap();
        let pieces: Vec<_> = coarse
            .entries
            .iter()
            .map(|e| normal_decomposition(&m, &s, e).unwrap())
            .collect();
        let fine = power_normal(&m, &s, &pieces).unwrap();
        prop_assert!(m.equal(&fine.value(&m, 0).unwrap(), &g).unwrap());
    }
}

fn braid_elements(m: &Monoid, max: usize) -> Vec<Element> {
    let mut out: Vec<Element> = Vec::new();
    for k in 0..=max as u64 {
        out.extend(m.layer(0, k).unwrap().iter().cloned());
    }
    out
}

/// Grouping an S-normal path in blocks of k gives an S^k-greedy path.
#[test]
fn power_grouping() {
    let m = common::braid3();
    let s = braid_family(&m);
    for k in 1..=3 {
        let sk = s.power(&m, k).unwrap();
        for g in braid_elements(&m, 9) {
            let np = normal_decomposition(&m, &s, &g).unwrap();
            if np.entries.len() > 4 {
                continue;
            }
            let grouped: Vec<Element> = np.entries.chunks(k).map(|c| m.mul_all(c).unwrap()).collect();
            assert!(is_greedy_path(&m, &sk, &grouped).unwrap(), "{} k={k}", np.show(&m));
        }
    }
}

/// A greedy pair whose product lies in S has an invertible second entry.
#[test]
fn greedy_product_in_family() {
    for (m, s) in [
        { let m = common::braid3(); let s = braid_family(&m); (m, s) },
        { let m = common::two_mcms(); let s = two_mcms_family(&m); (m, s) },
    ] {
        for s1 in &s.elements {
            for s2 in &s.elements {
                let p = m.mul(s1, s2).unwrap();
                if is_greedy_pair(&m, &s, s1, s2).unwrap() && s.contains(&m, &p).unwrap() {
                    assert!(m.is_invertible(s2), "{} {}", m.show(s1), m.show(s2));
                }
            }
        }
    }
}

#[test]
fn two_mcms_normal_form() {
    let m = common::two_mcms();
    let s = two_mcms_family(&m);
    let g = m.elem("a a b' a' a'").unwrap();
    assert_eq!(normal_decomposition(&m, &s, &g).unwrap().show(&m), "(a b, a' b', b')");
}
