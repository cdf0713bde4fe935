//! Finite linear combinations of symmetric-function basis elements indexed
//! by partitions.
//!
//! The ring is the abstract ring of symmetric functions: no variable count is
//! attached, so `m_λ` is never truncated here. Specialization to `n` variables
//! lives in [`crate::oracle`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use crate::partition::Partition;
use crate::scalar::Scalar;

/// Labels a basis and fixes its rendering order.
pub trait Basis: Clone + fmt::Debug + Send + Sync + 'static {
    const SYMBOL: &'static str;

    /// Order in which terms are listed when rendered.
    fn display_order(a: &Partition, b: &Partition) -> Ordering;
}

/// The monomial basis `m_λ`, with `m_∅ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial;

/// Power-sum products `p_μ = p_{μ_1} ... p_{μ_l}`, with `p_∅ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerSum;

impl Basis for Monomial {
    const SYMBOL: &'static str = "m";

    fn display_order(a: &Partition, b: &Partition) -> Ordering {
        a.cmp(b)
    }
}

impl Basis for PowerSum {
    const SYMBOL: &'static str = "p";

    // Within a weight, products with more factors come first.
    fn display_order(a: &Partition, b: &Partition) -> Ordering {
        a.weight().cmp(&b.weight()).then_with(|| a.cmp_lex(b))
    }
}

#[derive(Clone, Debug)]
pub struct Expansion<B: Basis, T: Scalar> {
    terms: BTreeMap<Partition, T>,
    basis: PhantomData<B>,
}

pub type MonomialExpansion<T> = Expansion<Monomial, T>;
pub type PowerSumExpansion<T> = Expansion<PowerSum, T>;

impl<B: Basis, T: Scalar> PartialEq for Expansion<B, T> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B: Basis, T: Scalar> Eq for Expansion<B, T> where T: Eq {}

impl<B: Basis, T: Scalar> Default for Expansion<B, T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis, T: Scalar> Expansion<B, T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::basis_element(Partition::empty())
    }

    pub fn basis_element(key: Partition) -> Self {
        Self::term(key, T::one())
    }

    pub fn term(key: Partition, coeff: T) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, T)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Adds `coeff` to the coefficient of `key`, dropping it if the sum is zero.
    pub fn add_term(&mut self, key: Partition, coeff: T) {
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

    pub fn coeff(&self, key: &Partition) -> T {
        self.terms.get(key).cloned().unwrap_or_else(T::zero)
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

    /// Terms in storage order (graded reverse-lexicographic on keys).
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &T)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl DoubleEndedIterator<Item = &Partition> {
        self.terms.keys()
    }

    /// Terms in the basis' rendering order.
    pub fn display_terms(&self) -> Vec<(&Partition, &T)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| B::display_order(a.0, b.0));
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, factor: &T, other: &Self) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), factor.clone() * c.clone());
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        let mut out = Self::zero();
        out.add_scaled(factor, self);
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-T::one(), other);
        out
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Expansion<B, U> {
        Expansion::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }
}

pub fn mexp_add<T: Scalar>(x: &MonomialExpansion<T>, y: &MonomialExpansion<T>) -> MonomialExpansion<T> {
    x.add(y)
}

pub fn mexp_scale<T: Scalar>(c: &T, x: &MonomialExpansion<T>) -> MonomialExpansion<T> {
    x.scale(c)
}

impl<T: Scalar> PowerSumExpansion<T> {
    /// Multiplies every power-sum product by `p_k`.
    pub fn mul_power(&self, k: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(mu, c)| (mu.replace_part(0, k), c.clone())),
        )
    }
}

/// Renders as e.g. `m[2,1] + 2·m[1,1,1]` or `1/2·p[1,1] − 1/2·p[2]`. The
/// zero expansion renders as `0`.
impl<B: Basis, T: Scalar> fmt::Display for Expansion<B, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.display_terms().into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("−")?,
                (0, false) => {}
                (_, true) => f.write_str(" − ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}·")?;
            }
            write!(f, "{}[{}]", B::SYMBOL, key.flat_string())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    type M = MonomialExpansion<Q>;
    type P = PowerSumExpansion<Q>;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn addition_cancels_and_merges() {
        let x = M::term(part("2"), q(1, 1));
        let y = M::term(part("2"), q(-1, 1));
        assert!(mexp_add(&x, &y).is_zero());

        let z = M::term(part("1"), q(3, 1));
        assert_eq!(mexp_add(&M::zero(), &z), z);

        let a = M::term(part("2"), q(1, 2));
        let b = M::from_terms([(part("2"), q(1, 3)), (part("1,1"), q(1, 1))]);
        let sum = mexp_add(&a, &b);
        assert_eq!(sum.coeff(&part("2")), q(5, 6));
        assert_eq!(sum.coeff(&part("1,1")), q(1, 1));
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn scaling() {
        let x = M::term(part("3"), q(7, 1));
        assert!(mexp_scale(&q(0, 1), &x).is_zero());
        assert_eq!(mexp_scale(&q(1, 1), &x), x);
        let y = M::term(part("1,1"), q(2, 1));
        assert_eq!(mexp_scale(&q(1, 2), &y), M::basis_element(part("1,1")));
    }

    #[test]
    fn rendering() {
        let m = M::from_terms([(part("1,1,1"), q(2, 1)), (part("2,1"), q(1, 1))]);
        assert_eq!(m.to_string(), "m[2,1] + 2·m[1,1,1]");
        let p = P::from_terms([(part("2"), q(-1, 2)), (part("1,1"), q(1, 2))]);
        assert_eq!(p.to_string(), "1/2·p[1,1] − 1/2·p[2]");
        let p = P::from_terms([(part("3"), q(-1, 1)), (part("2,1"), q(1, 1))]);
        assert_eq!(p.to_string(), "p[2,1] − p[3]");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(M::term(Partition::empty(), q(-5, 1)).to_string(), "−5·m[]");
    }

    #[test]
    fn power_multiplication_appends_a_factor() {
        let p = P::from_terms([(part("1,1"), q(1, 2)), (part("2"), q(-1, 2))]);
        let got = p.mul_power(1);
        assert_eq!(got.coeff(&part("1,1,1")), q(1, 2));
        assert_eq!(got.coeff(&part("2,1")), q(-1, 2));
    }
}
