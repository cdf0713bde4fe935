//! Exact arithmetic for symmetric functions in the monomial and power-sum
//! bases.
//!
//! The centerpiece is the monomial generalization of the Newton–Girard
//! identity ([`newton`]), which rewrites `l(λ) m_λ` as an alternating
//! multinomial-weighted sum of products `p_j · m_μ` with `μ` shorter than
//! `λ`. Solving it recursively converts any `m_λ` into power sums.
//!
//! Containers are generic over an exact [`Scalar`]; the aliases below fix the
//! coefficient type to arbitrary-precision rationals.

pub mod composition;
pub mod error;
pub mod expansion;
pub mod newton;
pub mod oracle;
pub mod partition;
pub mod pieri;
pub mod scalar;
pub mod sweep;

pub use composition::{enumerate_weak_compositions, WeakComposition};
pub use error::{Error, Result};
pub use expansion::{mexp_add, mexp_scale, Basis, Expansion, Monomial, MonomialExpansion, PowerSum, PowerSumExpansion};
pub use newton::{
    e_to_p, formal_ring_mismatch, m_to_p, matches_classical, theorem_terms, verify_theorem, PowerSumConverter,
    Sign, TheoremTerm, Verification,
};
pub use oracle::{evaluate, expand_m, expand_p, poly_mul, specialize, ExponentVector, SparsePoly};
pub use partition::{partitions_up_to_weight, Partition};
pub use pieri::{mexp_mul_power, pieri_literal_four_sums, pieri_power_times_monomial};
pub use scalar::{Field, Scalar};

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

/// `m`-basis expansion with big-rational coefficients.
pub type MExpansion = MonomialExpansion<Rational>;
/// `p`-basis expansion with big-rational coefficients.
pub type PExpansion = PowerSumExpansion<Rational>;
/// Polynomial in `n` variables with big-rational coefficients.
pub type Poly = SparsePoly<Rational>;
/// Integer-coefficient polynomial, enough for every oracle expansion.
pub type IntPoly = SparsePoly<Integer>;
