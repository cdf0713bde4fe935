//! Weak compositions bounded by a partition's multiplicities, and exact
//! multinomial coefficients.

use num_bigint::BigUint;
use num_traits::One;

use crate::partition::Partition;

/// A tuple `u = (u_1, ..., u_k)` of nonnegative integers, paired by position
/// with the distinct parts of some partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition {
    entries: Vec<usize>,
}

impl WeakComposition {
    pub fn new(entries: Vec<usize>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    /// `|u|`
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `a·u` where `a` is the vector of distinct parts of `lambda`.
    pub fn dot_values(&self, lambda: &Partition) -> u64 {
        debug_assert_eq!(self.arity(), lambda.distinct_len());
        self.entries
            .iter()
            .zip(lambda.values())
            .map(|(&u, a)| u as u64 * u64::from(a))
            .sum()
    }

    /// `(a_1^{r_1-u_1}, ..., a_k^{r_k-u_k})`.
    pub fn residual(&self, lambda: &Partition) -> Partition {
        debug_assert_eq!(self.arity(), lambda.distinct_len());
        Partition::from_exponents(
            lambda
                .parts()
                .iter()
                .zip(&self.entries)
                .map(|(&(a, r), &u)| (a, r - u)),
        )
    }

    /// Whether `0 <= u_i <= r_i` for the paired partition.
    pub fn fits(&self, lambda: &Partition) -> bool {
        self.arity() == lambda.distinct_len()
            && self
                .entries
                .iter()
                .zip(lambda.multiplicities())
                .all(|(&u, r)| u <= r)
    }

    /// `|u|! / (u_1! ... u_k!)`, built as a product of binomials
    /// `C(u_1 + ... + u_i, u_i)` so intermediates stay bounded by the result.
    pub fn multinomial(&self) -> BigUint {
        let mut acc = BigUint::one();
        let mut running = 0usize;
        for &u in &self.entries {
            for j in 1..=u {
                running += 1;
                acc *= running;
                acc /= j;
            }
        }
        acc
    }
}

/// Iterates every nonzero weak composition bounded componentwise by the
/// multiplicities of a partition, in colexicographic ascending order (the
/// first coordinate varies fastest).
#[derive(Clone, Debug)]
pub struct WeakCompositions {
    bounds: Vec<usize>,
    current: Vec<usize>,
    done: bool,
}

impl WeakCompositions {
    pub fn new(lambda: &Partition) -> Self {
        let bounds: Vec<usize> = lambda.multiplicities().collect();
        let current = vec![0; bounds.len()];
        let mut it = Self {
            bounds,
            current,
            done: false,
        };
        it.advance();
        it
    }

    fn advance(&mut self) {
        for (c, &b) in self.current.iter_mut().zip(&self.bounds) {
            if *c < b {
                *c += 1;
                return;
            }
            *c = 0;
        }
        self.done = true;
    }
}

impl Iterator for WeakCompositions {
    type Item = WeakComposition;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = WeakComposition::new(self.current.clone());
        self.advance();
        Some(out)
    }
}

pub fn enumerate_weak_compositions(lambda: &Partition) -> WeakCompositions {
    WeakCompositions::new(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(lambda: &str) -> Vec<Vec<usize>> {
        enumerate_weak_compositions(&lambda.parse().unwrap())
            .map(|u| u.entries().to_vec())
            .collect()
    }

    #[test]
    fn colex_order() {
        assert_eq!(entries("2,1"), vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(entries("3^2"), vec![vec![1], vec![2]]);
        assert_eq!(
            entries("2,1^2"),
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![0, 2], vec![1, 2]]
        );
        assert!(entries("()").is_empty());
    }

    #[test]
    fn multinomial_small_values() {
        assert_eq!(WeakComposition::new(vec![1, 1]).multinomial(), 2u32.into());
        assert_eq!(WeakComposition::new(vec![0, 0]).multinomial(), 1u32.into());
        assert_eq!(WeakComposition::new(vec![]).multinomial(), 1u32.into());
        assert_eq!(WeakComposition::new(vec![2, 2, 1]).multinomial(), 30u32.into());
    }

    #[test]
    fn residual_and_degree() {
        let lam: Partition = "3^2,1".parse().unwrap();
        let u = WeakComposition::new(vec![1, 1]);
        assert!(u.fits(&lam));
        assert_eq!(u.dot_values(&lam), 4);
        assert_eq!(u.residual(&lam), "3".parse().unwrap());
        assert!(!WeakComposition::new(vec![0, 2]).fits(&lam));
    }
}
