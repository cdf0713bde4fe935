//! The monomial Newton–Girard identity
//!
//! ```text
//! l(λ) m_λ = Σ_u (-1)^{|u|-1} (|u|; u_1, ..., u_k) p_{a·u} m_{(a_1^{r_1-u_1}, ..., a_k^{r_k-u_k})}
//! ```
//!
//! for `λ = (a_1^{r_1}, ..., a_k^{r_k})`, summed over nonzero weak
//! compositions `u` bounded by the multiplicities. The classical recurrence
//! `k e_k = Σ_i (-1)^{i-1} p_i e_{k-i}` is the case `λ = (1^k)`.
//!
//! The identity is checked two independent ways: inside the abstract ring
//! through the `p_a · m_λ` product rule ([`formal_ring_mismatch`]), and
//! monomial by monomial through the oracle ([`verify_theorem`]).

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::{BigInt, BigUint};

use crate::composition::{enumerate_weak_compositions, WeakComposition};
use crate::error::{Error, Result};
use crate::expansion::{MonomialExpansion, PowerSumExpansion};
use crate::oracle::{expand_m, expand_p, poly_mul, ExponentVector, SparsePoly};
use crate::partition::Partition;
use crate::pieri::mexp_mul_power;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^{total - 1}`
    pub fn alternating(total: usize) -> Self {
        if total % 2 == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn apply<T: Scalar>(self, x: T) -> T {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// One summand `sign · coeff · p_{power_degree} · m_{residual}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremTerm {
    pub sign: Sign,
    pub coeff: BigUint,
    pub power_degree: u32,
    pub residual: Partition,
    pub composition: WeakComposition,
}

impl TheoremTerm {
    /// `sign · coeff` as a scalar.
    pub fn signed_coeff<T: Scalar>(&self) -> T {
        self.sign.apply(T::from_bigint(&BigInt::from(self.coeff.clone())))
    }
}

/// Summands of the right-hand side, one per nonzero weak composition, in
/// colexicographic composition order. Rejects the empty partition.
pub fn theorem_terms(lambda: &Partition) -> Result<Vec<TheoremTerm>> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(enumerate_weak_compositions(lambda)
        .map(|u| {
            let power_degree =
                u32::try_from(u.dot_values(lambda)).expect("power degree exceeds u32");
            TheoremTerm {
                sign: Sign::alternating(u.total()),
                coeff: u.multinomial(),
                power_degree,
                residual: u.residual(lambda),
                composition: u,
            }
        })
        .collect())
}

/// A monomial on which the two sides disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch<T: Scalar> {
    pub monomial: ExponentVector,
    pub lhs: T,
    pub rhs: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verification<T: Scalar> {
    pub lambda: Partition,
    pub vars: usize,
    pub mismatch: Option<Mismatch<T>>,
}

impl<T: Scalar> Verification<T> {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Both sides of the identity for `λ`, expanded in `n` variables by the oracle.
pub fn theorem_sides<T: Scalar>(lambda: &Partition, n: usize) -> Result<(SparsePoly<T>, SparsePoly<T>)> {
    let terms = theorem_terms(lambda)?;
    let lhs = expand_m::<T>(lambda, n).scale(&T::from_usize(lambda.length()));
    let mut rhs = SparsePoly::zero(n);
    for t in &terms {
        let residual = expand_m::<T>(&t.residual, n);
        if residual.is_zero() {
            continue;
        }
        let product = poly_mul(&expand_p(t.power_degree, n), &residual)?;
        rhs = rhs.add(&product.scale(&t.signed_coeff()))?;
    }
    Ok((lhs, rhs))
}

pub fn verify_theorem<T: Scalar>(lambda: &Partition, n: usize) -> Result<Verification<T>> {
    let (lhs, rhs) = theorem_sides::<T>(lambda, n)?;
    let mismatch = lhs
        .first_difference(&rhs)
        .map(|(monomial, lhs, rhs)| Mismatch { monomial, lhs, rhs });
    Ok(Verification {
        lambda: lambda.clone(),
        vars: n,
        mismatch,
    })
}

/// The identity replayed in the abstract ring using only the product rule.
/// Returns the first basis element (largest in storage order) whose
/// coefficients disagree, as `(m_μ, lhs, rhs)`.
pub fn formal_ring_mismatch<T: Scalar>(lambda: &Partition) -> Result<Option<(Partition, T, T)>> {
    let terms = theorem_terms(lambda)?;
    let lhs = MonomialExpansion::<T>::term(lambda.clone(), T::from_usize(lambda.length()));
    let mut rhs = MonomialExpansion::zero();
    for t in &terms {
        let product = mexp_mul_power(t.power_degree, &MonomialExpansion::basis_element(t.residual.clone()));
        rhs.add_scaled(&t.signed_coeff(), &product);
    }
    let diff = lhs.sub(&rhs);
    let witness = diff
        .keys()
        .next_back()
        .map(|mu| (mu.clone(), lhs.coeff(mu), rhs.coeff(mu)));
    Ok(witness)
}

/// Whether the identity at `(1^k)` is term-for-term the classical
/// recurrence: `k` terms, the `i`-th being `(-1)^{i-1} · 1 · p_i · e_{k-i}`.
pub fn matches_classical(k: usize) -> bool {
    let Ok(terms) = theorem_terms(&Partition::from_exponents([(1, k)])) else {
        return false;
    };
    terms.len() == k
        && terms.iter().enumerate().all(|(idx, t)| {
            let i = idx + 1;
            t.composition.entries() == [i]
                && t.sign == Sign::alternating(i)
                && t.coeff == BigUint::from(1u32)
                && t.power_degree as usize == i
                && t.residual == Partition::from_exponents([(1, k - i)])
        })
}

/// Memoized monomial → power-sum conversion.
///
/// The memo may be shared across threads. Two threads converting the same
/// partition both compute it; whichever insert lands first is kept and the
/// values are identical.
#[derive(Debug, Default)]
pub struct PowerSumConverter<T: Field> {
    memo: RwLock<HashMap<Partition, Arc<PowerSumExpansion<T>>>>,
}

impl<T: Field> PowerSumConverter<T> {
    pub fn new() -> Self {
        Self {
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo poisoned").len()
    }

    /// `m_λ` in the power-sum basis, by solving the identity for `m_λ` and
    /// recursing on the residuals (all strictly shorter than `λ`).
    pub fn m_to_p(&self, lambda: &Partition) -> Arc<PowerSumExpansion<T>> {
        if let Some(hit) = self.memo.read().expect("memo poisoned").get(lambda) {
            return Arc::clone(hit);
        }
        let value = if lambda.is_empty() {
            PowerSumExpansion::one()
        } else {
            let mut acc = PowerSumExpansion::zero();
            for t in theorem_terms(lambda).expect("nonempty") {
                let residual = self.m_to_p(&t.residual);
                acc.add_scaled(&t.signed_coeff(), &residual.mul_power(t.power_degree));
            }
            acc.scale(&(T::one() / T::from_usize(lambda.length())))
        };
        let mut memo = self.memo.write().expect("memo poisoned");
        Arc::clone(memo.entry(lambda.clone()).or_insert_with(|| Arc::new(value)))
    }
}

/// One-off conversion with a private memo.
pub fn m_to_p<T: Field>(lambda: &Partition) -> PowerSumExpansion<T> {
    PowerSumConverter::new().m_to_p(lambda).as_ref().clone()
}

/// `e_k` in the power-sum basis from `j e_j = Σ_{i=1}^{j} (-1)^{i-1} p_i e_{j-i}`,
/// `e_0 = 1`.
pub fn e_to_p<T: Field>(k: usize) -> PowerSumExpansion<T> {
    assert!(k >= 1, "e_to_p needs k >= 1");
    let mut table: Vec<PowerSumExpansion<T>> = vec![PowerSumExpansion::one()];
    for j in 1..=k {
        let mut acc = PowerSumExpansion::zero();
        for i in 1..=j {
            let sign = Sign::alternating(i).apply(T::one());
            acc.add_scaled(&sign, &table[j - i].mul_power(i as u32));
        }
        table.push(acc.scale(&(T::one() / T::from_usize(j))));
    }
    table.pop().expect("k >= 1")
}
