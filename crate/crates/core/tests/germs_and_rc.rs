mod common;

use garside_core::germ::{divisor_germ, GermTable};
use garside_core::rc::{all_quasigroups, RcSystem};
use garside_core::reversing::Completeness;
use garside_core::{Monoid, Presentation};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn divisor_germs_are_garside_germs() {
    let b4 = Monoid::new(
        Presentation::monoid(&["a", "b", "c"], &[("a b a", "b a b"), ("b c b", "c b c"), ("a c", "c a")]).unwrap(),
    );
    let cases = [
        (common::braid3(), "a b a", 6),
        (common::free_abelian3(), "a b c", 8),
        (b4, "a b a c b a", 24),
    ];
    for (m, delta, size) in cases {
        let g = divisor_germ(&m, &m.elem(delta).unwrap()).unwrap();
        assert_eq!(g.len(), size);
        let f = g.flags();
        assert!(f.is_germ && f.left_associative && f.left_cancellative && f.noetherian, "{delta}");
        // Mon of the germ is the ambient monoid: the germ embeds.
        assert!(matches!(
            g.embedding_test(24).unwrap(),
            garside_core::germ::EmbeddingVerdict::Embeds { .. }
        ));
    }
}

#[test]
fn germ_csv_files() {
    let text = "∘,1,a,e\n1,1,a,e\na,a,,\ne,e,a,1\n";
    let g = GermTable::parse_csv(text).unwrap();
    assert_eq!(g.len(), 3);
    assert_eq!(g.get(g.index("e").unwrap(), g.index("e").unwrap()), Some(g.identity()));
    assert!(GermTable::parse_csv("∘,a\na,a\n").is_err());
}

#[test]
fn delta_lengths_up_to_four() {
    let mut count = 0;
    for n in 1..=4 {
        for q in all_quasigroups(n) {
            assert!(q.validate().quasigroup);
            count += 1;
            for mask in 0u32..1 << n {
                let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                assert_eq!(q.delta_i(&subset).unwrap().len(), subset.len());
            }
        }
    }
    assert!(count > 0);
}

#[test]
fn double_bijectivity_random() {
    let mut pool: Vec<RcSystem> = (1..=4).flat_map(all_quasigroups).collect();
    let mut rng = StdRng::seed_from_u64(7);
    pool.shuffle(&mut rng);
    for q in pool.iter().take(50) {
        let d = q.double_bijectivity();
        assert_eq!(d.small, d.big, "{}", q.to_csv());
    }
}

#[test]
fn structure_monoids_complete() {
    for n in 1..=3 {
        for q in all_quasigroups(n) {
            let p = q.structure_presentation().unwrap();
            assert!(p.classification().complemented);
            let m = Monoid::new(p);
            assert_eq!(*m.completeness(), Completeness::Complete, "{}", q.to_csv());
        }
    }
}

#[test]
fn structure_lcms_are_deltas() {
    for q in all_quasigroups(3) {
        let m = Monoid::new(q.structure_presentation().unwrap());
        let d = m.element(q.delta_i(&[0, 1, 2]).unwrap()).unwrap();
        let mut lcm = m.identity(0);
        for s in 0..3 {
            lcm = m.right_lcm(&lcm, &m.element(vec![s]).unwrap()).unwrap().unwrap();
        }
        assert!(m.equal(&lcm, &d).unwrap());
    }
}

#[test]
fn nu_is_order_independent() {
    for n in 1..=3 {
        for q in all_quasigroups(n).into_iter().filter(|q| q.double_bijectivity().small) {
            let m = Monoid::new(q.structure_presentation().unwrap());
            let exps: Vec<Vec<usize>> = match n {
                1 => vec![vec![3]],
                2 => vec![vec![1, 1], vec![2, 1], vec![2, 2]],
                _ => vec![vec![1, 1, 1], vec![2, 1, 0], vec![1, 1, 2]],
            };
            for e in exps {
                assert_eq!(q.nu_order_independent(&m, &e).unwrap(), None, "{}", q.to_csv());
            }
        }
    }
}
