#![allow(dead_code)]

use garside_core::{Monoid, Presentation};
use proptest::prelude::*;

pub fn braid3() -> Monoid {
    Monoid::new(Presentation::monoid(&["a", "b"], &[("a b a", "b a b")]).unwrap())
}

pub fn two_mcms() -> Monoid {
    Monoid::new(
        Presentation::monoid(
            &["a", "b", "a'", "b'"],
            &[("a b", "b a"), ("a' b'", "b' a'"), ("a a'", "b b'"), ("a' a", "b' b")],
        )
        .unwrap(),
    )
}

pub fn free_abelian3() -> Monoid {
    Monoid::new(Presentation::monoid(&["a", "b", "c"], &[("a b", "b a"), ("a c", "c a"), ("b c", "c b")]).unwrap())
}

pub fn absorbing_unit() -> Monoid {
    Monoid::new(Presentation::monoid(&["a", "e"], &[("e a", "a"), ("e e", "")]).unwrap())
}

/// Positive words of length `0..=max` over `n` generators.
pub fn word(n: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..=max)
}

/// Signed words as `(generator, positive)` pairs.
pub fn signed(n: usize, max: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0..n, any::<bool>()), 0..=max)
}
