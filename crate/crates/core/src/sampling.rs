//! Seeded random inputs for certificate campaigns. Trial i of a campaign
//! with seed s draws from its own stream seeded with s + i, so results do
//! not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalars::{q, BanachRing};
use crate::series::{monomials_up_to, MultiSeries, WeightTable};

pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(index))
}

/// A random two-variable polynomial of total degree exactly d (1 ≤ d ≤
/// max_degree ≤ order) vanishing on the diagonal, with coefficients in
/// [−bound, bound]. Each homogeneous slice is drawn freely except for the
/// pure z^k coefficient, which is solved for; slices whose solved coefficient
/// leaves the range are redrawn.
pub fn random_diagonal_poly<R: Rng>(rng: &mut R, ring: &BanachRing, order: u32, max_degree: u32, bound: i64) -> MultiSeries {
    let top = max_degree.min(order).max(1);
    let d = rng.gen_range(1..=top);
    let mut terms: Vec<(Vec<u32>, i64)> = Vec::new();
    for k in 1..=d {
        loop {
            let slice: Vec<i64> = (1..=k).map(|_| rng.gen_range(-bound..=bound)).collect();
            let pure = -slice.iter().sum::<i64>();
            if pure.abs() > bound || (k == d && pure == 0 && slice.iter().all(|&c| c == 0)) {
                continue;
            }
            for (i, c) in slice.iter().enumerate() {
                let i = i as u32 + 1;
                terms.push((vec![i, k - i], *c));
            }
            terms.push((vec![0, k], pure));
            break;
        }
    }
    MultiSeries::from_terms(ring, 2, order, terms.into_iter().map(|(e, c)| (e, q(c)))).expect("valid terms")
}

/// Weight table on every (i, j) with i + j ≤ order, values in 1..=max.
pub fn random_weight_table<R: Rng>(rng: &mut R, order: u32, max: u64) -> WeightTable {
    WeightTable::from_entries(monomials_up_to(2, order).into_iter().map(|e| (e.0, rng.gen_range(1..=max))))
        .expect("weights ≥ 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_vanish_on_diagonal_and_respect_bounds() {
        let ring = BanachRing::integers();
        for i in 0..200 {
            let mut rng = trial_rng(3, i);
            let f = random_diagonal_poly(&mut rng, &ring, 10, 10, 99);
            assert!(f.diagonal_restrict().unwrap().is_zero());
            assert!(f.terms().all(|(_, c)| c.numer().magnitude() <= &num_bigint::BigUint::from(99u32)));
            assert!(f.degree().unwrap() >= 1);
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let ring = BanachRing::integers();
        let a = random_diagonal_poly(&mut trial_rng(7, 2), &ring, 8, 8, 9);
        let b = random_diagonal_poly(&mut trial_rng(7, 2), &ring, 8, 8, 9);
        assert_eq!(a, b);
    }
}
