//! Additive gradings: positive integer weights on the non-invertible
//! generators, zero on invertible ones, balanced by every relation. Such a
//! weight bounds every decomposition and certifies Noetherianity.

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::presentation::Presentation;

/// Weight of a positive word.
pub fn word_weight(weights: &[u64], w: &[usize]) -> u64 {
    w.iter().map(|&g| weights[g]).sum()
}

fn balanced(p: &Presentation, weights: &[u64]) -> bool {
    p.relations()
        .iter()
        .all(|r| word_weight(weights, &r.lhs) == word_weight(weights, &r.rhs))
}

/// A balanced grading, preferring "count the non-invertible letters" when
/// that works; found by an exact phase-one simplex otherwise.
pub fn grading(p: &Presentation) -> Option<Vec<u64>> {
    let count: Vec<u64> = (0..p.num_gens())
        .map(|g| u64::from(!p.is_invertible(g)))
        .collect();
    if balanced(p, &count) {
        return Some(count);
    }
    let vars: Vec<usize> = (0..p.num_gens()).filter(|&g| !p.is_invertible(g)).collect();
    let n = vars.len();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for r in p.relations() {
        let mut row = vec![BigRational::zero(); n];
        for (k, &g) in vars.iter().enumerate() {
            let c = r.lhs.iter().filter(|&&x| x == g).count() as i64
                - r.rhs.iter().filter(|&&x| x == g).count() as i64;
            row[k] = BigRational::from_integer(BigInt::from(c));
        }
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    }
    let mu = feasible_nonnegative(&rows)?;
    // lambda = mu + 1, then clear denominators.
    let lambda: Vec<BigRational> = mu.into_iter().map(|m| m + BigRational::one()).collect();
    let mut denom = BigInt::one();
    for l in &lambda {
        denom = denom.lcm(l.denom());
    }
    let mut ints: Vec<BigInt> = lambda
        .iter()
        .map(|l| (l * BigRational::from_integer(denom.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    let mut weights = vec![0u64; p.num_gens()];
    for (k, &g) in vars.iter().enumerate() {
        weights[g] = ints[k].to_u64()?;
    }
    balanced(p, &weights).then_some(weights)
}

/// Solves `A·mu = -A·1`, `mu >= 0` (so that `mu + 1` lies in the kernel of
/// `A` with all coordinates at least one). Bland's rule keeps it finite.
fn feasible_nonnegative(a: &[Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![BigRational::zero(); n]);
    }
    let cols = n + m + 1;
    let rhs = n + m;
    let mut t = vec![vec![BigRational::zero(); cols]; m];
    for i in 0..m {
        let mut b = BigRational::zero();
        for j in 0..n {
            b -= &a[i][j];
        }
        let flip = b.is_negative();
        for j in 0..n {
            t[i][j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        t[i][n + i] = BigRational::one();
        t[i][rhs] = if flip { -b } else { b };
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut z = vec![BigRational::zero(); cols];
    for j in 0..n {
        for row in &t {
            z[j] -= &row[j];
        }
    }
    for row in &t {
        z[rhs] -= &row[rhs];
    }
    loop {
        let Some(enter) = (0..n + m).find(|&j| z[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (pr, _) = leave?;
        let piv = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x = &*x / &piv;
        }
        let pivot_row = t[pr].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        let f = z[enter].clone();
        for (x, p) in z.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
        basis[pr] = enter;
    }
    if !z[rhs].is_zero() {
        return None;
    }
    let mut mu = vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            mu[b] = t[i][rhs].clone();
        }
    }
    Some(mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneous_counts_letters() {
        let p = Presentation::monoid(&["a", "b"], &[("a b a", "b a b")]).unwrap();
        assert_eq!(grading(&p), Some(vec![1, 1]));
    }

    #[test]
    fn germ_style_presentation() {
        let p = Presentation::monoid(&["x", "y", "d"], &[("x y", "d")]).unwrap();
        assert_eq!(grading(&p), Some(vec![1, 1, 2]));
    }

    #[test]
    fn invertibles_get_zero() {
        let p = Presentation::monoid(&["a", "e"], &[("e a", "a"), ("e e", "1")]).unwrap();
        assert_eq!(grading(&p), Some(vec![1, 0]));
    }

    #[test]
    fn non_noetherian_shapes_fail() {
        let p = Presentation::monoid(&["a", "b"], &[("a", "b b a b")]).unwrap();
        assert_eq!(grading(&p), None);
        let q = Presentation::monoid(&["a", "b"], &[("a", "a b")]).unwrap();
        assert_eq!(grading(&q), None);
    }

    #[test]
    fn fractional_solution_scaled() {
        // 2x = 3y forces x:y = 3:2
        let p = Presentation::monoid(&["x", "y"], &[("x x", "y y y")]).unwrap();
        assert_eq!(grading(&p), Some(vec![3, 2]));
    }
}
