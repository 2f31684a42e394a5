mod common;

use garside_core::presentation::{parse_presentation, Letter};
use garside_core::Presentation;
use proptest::prelude::*;

const TEXTS: &[&str] = &[
    "gens: a, b\nrels: a b a = b a b\n",
    "gens: a, e\nrels: e a = a; e e = 1\n",
    "gens: a, b, a', b'\nrels:\na b = b a\na' b' = b' a'\na a' = b b'\na' a = b' b\n",
    "objects: x, y\ngens: a: x -> y, b: y -> x\nrels: a b a = a\n",
    "gens: a, e\ninvertible: e\nrels: e a = a e\n",
];

#[test]
fn round_trip() {
    for t in TEXTS {
        let p = parse_presentation(t).unwrap();
        let q = parse_presentation(&p.to_text()).unwrap();
        assert_eq!(p, q, "{t}");
        assert_eq!(p.classification(), q.classification());
    }
}

#[test]
fn classification() {
    let c = parse_presentation(TEXTS[0]).unwrap().classification();
    assert!(c.homogeneous && c.complemented);
    let c = parse_presentation(TEXTS[1]).unwrap().classification();
    assert!(!c.homogeneous && c.length_reducing_confluent);
    assert!(parse_presentation("rels: a b = c\n").is_err());
}

#[test]
fn complemented_implies_theta() {
    for t in TEXTS {
        let p = parse_presentation(t).unwrap();
        if p.classification().complemented {
            assert!(p.theta().is_some(), "{t}");
            assert!(p.complemented_conflict().is_none());
        }
    }
}

fn letters(p: &Presentation, w: &[(usize, bool)]) -> Vec<Letter> {
    let _ = p;
    w.iter().map(|&(g, pos)| if pos { Letter::pos(g) } else { Letter::neg(g) }).collect()
}

proptest! {
    #[test]
    fn free_reduce_idempotent(w in common::signed(2, 12)) {
        let p = parse_presentation(TEXTS[0]).unwrap();
        let sw = p.signed(letters(&p, &w)).unwrap();
        let r = p.free_reduce(&sw);
        prop_assert!(r.len() <= sw.len());
        prop_assert_eq!(p.free_reduce(&r), r.clone());
        prop_assert_eq!((r.source, r.target), (sw.source, sw.target));
    }
}
