//! Brute-force ground truth in `n` variables.
//!
//! `m_λ` is expanded monomial by monomial from the distinct rearrangements of
//! its padded exponent tuple, and products are plain convolutions. Nothing in
//! this module calls into [`crate::pieri`] or [`crate::newton`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::expansion::MonomialExpansion;
use crate::partition::Partition;
use crate::scalar::Scalar;

/// Dense exponent tuple `(c_1, ..., c_n)`.
///
/// Ordered graded-lexicographically: total degree first, then the tuples
/// themselves lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn constant(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exchanges the exponents of variables `i` and `j`.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i, j);
        Self(v)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `x1^c1*x2^c2...`, skipping zero exponents; empty for the constant monomial.
impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}^{}", i + 1, c)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparsePoly<T: Scalar> {
    n: usize,
    terms: BTreeMap<ExponentVector, T>,
}

impl<T: Scalar> SparsePoly<T> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: T) -> Self {
        let mut out = Self::zero(n);
        out.add_term(ExponentVector::constant(n), c);
        out
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Panics if the key's arity differs from the ambient variable count.
    pub fn add_term(&mut self, key: ExponentVector, coeff: T) {
        assert_eq!(key.arity(), self.n, "exponent vector arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, key: &ExponentVector) -> T {
        self.terms.get(key).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &T)> {
        self.terms.iter()
    }

    fn check_arity(&self, found: usize) -> Result<()> {
        if self.n == found {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.n,
                found,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other.n)?;
        let mut out = self.clone();
        out.add_scaled(&T::one(), other);
        Ok(out)
    }

    fn add_scaled(&mut self, factor: &T, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), factor.clone() * c.clone());
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        let mut out = Self::zero(self.n);
        if !factor.is_zero() {
            out.add_scaled(factor, self);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        poly_mul(self, other)
    }

    /// Applies `f` to every exponent vector, merging terms that collide.
    pub fn map_keys(&self, f: impl Fn(&ExponentVector) -> ExponentVector) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// First key (in descending order) where the two polynomials disagree,
    /// with `(self coefficient, other coefficient)`.
    pub fn first_difference(&self, other: &Self) -> Option<(ExponentVector, T, T)> {
        let mut keys: Vec<&ExponentVector> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().rev().find_map(|k| {
            let (a, b) = (self.coeff(k), other.coeff(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

/// One `coeff*x1^c1*...` line per term, leading term first; `0` for the zero
/// polynomial.
impl<T: Scalar> fmt::Display for SparsePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            if k.degree() == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{k}")?;
            }
        }
        Ok(())
    }
}

/// Calls `visit` once per distinct rearrangement of `items`, in
/// lexicographic order, by stepping the next-permutation successor from the
/// sorted arrangement. Never materializes repeated rearrangements.
pub fn for_each_distinct_permutation<F: FnMut(&[u32])>(items: &[u32], mut visit: F) {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    loop {
        visit(&cur);
        let Some(pivot) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return;
        };
        let pivot = pivot - 1;
        let succ = (pivot + 1..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[pivot])
            .expect("a larger element exists right of the pivot");
        cur.swap(pivot, succ);
        cur[pivot + 1..].reverse();
    }
}

/// `m_λ` in `n` variables; the zero polynomial when `l(λ) > n`.
pub fn expand_m<T: Scalar>(lambda: &Partition, n: usize) -> SparsePoly<T> {
    let mut out = SparsePoly::zero(n);
    if lambda.length() > n {
        return out;
    }
    let mut padded = lambda.to_flat();
    padded.resize(n, 0);
    for_each_distinct_permutation(&padded, |perm| {
        out.add_term(ExponentVector::new(perm.to_vec()), T::one());
    });
    out
}

/// `p_k = x_1^k + ... + x_n^k`.
pub fn expand_p<T: Scalar>(k: u32, n: usize) -> SparsePoly<T> {
    assert!(k >= 1 && n >= 1, "expand_p needs k >= 1 and n >= 1");
    let mut out = SparsePoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k;
        out.add_term(ExponentVector::new(e), T::one());
    }
    out
}

/// `p_μ = p_{μ_1} ... p_{μ_l}` in `n` variables; the constant 1 for `μ = ∅`.
pub fn expand_p_product<T: Scalar>(mu: &Partition, n: usize) -> SparsePoly<T> {
    mu.iter_flat()
        .fold(SparsePoly::constant(n, T::one()), |acc, k| {
            poly_mul(&acc, &expand_p(k, n)).expect("same arity")
        })
}

pub fn poly_mul<T: Scalar>(f: &SparsePoly<T>, g: &SparsePoly<T>) -> Result<SparsePoly<T>> {
    f.check_arity(g.n)?;
    let mut out = SparsePoly::zero(f.n);
    for (ka, ca) in &f.terms {
        for (kb, cb) in &g.terms {
            out.add_term(ka.mul(kb), ca.clone() * cb.clone());
        }
    }
    Ok(out)
}

/// `Σ c_μ m_μ` in `n` variables.
pub fn specialize<T: Scalar>(x: &MonomialExpansion<T>, n: usize) -> SparsePoly<T> {
    let mut out = SparsePoly::zero(n);
    for (mu, c) in x.iter() {
        out.add_scaled(c, &expand_m(mu, n));
    }
    out
}

pub fn evaluate<T: Scalar>(f: &SparsePoly<T>, point: &[T]) -> Result<T> {
    f.check_arity(point.len())?;
    let mut total = T::zero();
    for (k, c) in &f.terms {
        let mut term = c.clone();
        for (x, &e) in point.iter().zip(k.exponents()) {
            term = term * num_traits::pow(x.clone(), e as usize);
        }
        total = total + term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    #[test]
    fn monomial_expansions() {
        let f = expand_m::<Q>(&part("1,1"), 2);
        assert_eq!(f.len(), 1);
        assert_eq!(f.coeff(&ev(&[1, 1])), q(1));

        let f = expand_m::<Q>(&part("2,1"), 3);
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|(_, c)| *c == q(1)));

        assert!(expand_m::<Q>(&part("1,1,1"), 2).is_zero());
        assert_eq!(expand_m::<Q>(&part("()"), 3), SparsePoly::constant(3, q(1)));
    }

    #[test]
    fn power_sums() {
        let f = expand_p::<Q>(1, 3);
        assert_eq!(f.len(), 3);
        assert_eq!(f.coeff(&ev(&[0, 1, 0])), q(1));
        assert_eq!(expand_p::<Q>(2, 1).coeff(&ev(&[2])), q(1));
        let f = expand_p::<Q>(3, 2);
        assert_eq!(f.to_string(), "1*x1^3\n1*x2^3");
    }

    #[test]
    fn products() {
        let s = expand_p::<Q>(1, 2);
        let sq = poly_mul(&s, &s).unwrap();
        assert_eq!(sq.coeff(&ev(&[2, 0])), q(1));
        assert_eq!(sq.coeff(&ev(&[1, 1])), q(2));
        assert_eq!(sq.coeff(&ev(&[0, 2])), q(1));
        assert_eq!(sq.len(), 3);

        let one = SparsePoly::constant(2, q(1));
        assert_eq!(poly_mul(&sq, &one).unwrap(), sq);

        let lhs = poly_mul(&s, &expand_m(&part("1"), 2)).unwrap();
        let rhs = expand_m(&part("2"), 2)
            .add(&expand_m::<Q>(&part("1,1"), 2).scale(&q(2)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn arity_mismatch_rejected() {
        let f = expand_p::<Q>(1, 2);
        let g = expand_p::<Q>(1, 3);
        assert_eq!(
            poly_mul(&f, &g).unwrap_err(),
            Error::ArityMismatch { expected: 2, found: 3 }
        );
        assert!(evaluate(&f, &[q(1)]).is_err());
    }

    #[test]
    fn specialization() {
        let x = MonomialExpansion::from_terms([(part("2"), q(1)), (part("1,1"), q(2))]);
        let f = specialize(&x, 2);
        assert_eq!(f, poly_mul(&expand_p(1, 2), &expand_p(1, 2)).unwrap());
        assert!(specialize::<Q>(&MonomialExpansion::zero(), 4).is_zero());
        let c = specialize(&MonomialExpansion::term(Partition::empty(), q(5)), 3);
        assert_eq!(c, SparsePoly::constant(3, q(5)));
        assert_eq!(c.to_string(), "5");
    }

    #[test]
    fn evaluation() {
        let f = expand_m::<Q>(&part("1,1"), 2);
        assert_eq!(evaluate(&f, &[q(2), q(3)]).unwrap(), q(6));
        assert_eq!(evaluate(&SparsePoly::<Q>::zero(2), &[q(7), q(9)]).unwrap(), q(0));
        let g = expand_p::<Q>(2, 2);
        assert_eq!(evaluate(&g, &[q(1), q(2)]).unwrap(), q(5));
    }

    #[test]
    fn rendering_is_leading_term_first() {
        let f = expand_m::<Q>(&part("2,1"), 2);
        assert_eq!(f.to_string(), "1*x1^2*x2^1\n1*x1^1*x2^2");
        assert_eq!(SparsePoly::<Q>::zero(3).to_string(), "0");
    }

    #[test]
    fn distinct_permutations_of_a_multiset() {
        let mut seen = Vec::new();
        for_each_distinct_permutation(&[1, 0, 1], |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let mut count = 0;
        for_each_distinct_permutation(&[], |_| count += 1);
        assert_eq!(count, 1);
    }
}
