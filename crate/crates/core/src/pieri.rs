//! Products `p_a · m_λ` expanded in the monomial basis.
//!
//! [`pieri_power_times_monomial`] is the production rule: multiplying by
//! `p_a` raises exactly one entry of the exponent vector by `a`, so each
//! output term comes from picking a source value `v` (a part of `λ`, or `0`
//! for a fresh part) and replacing one copy of it with `v + a`. The
//! coefficient of the result `μ` counts which of the `μ`-parts equal to
//! `v + a` could have been the raised one, i.e. its multiplicity in `μ`.
//!
//! [`pieri_literal_four_sums`] evaluates the same product as four separate
//! sums (new part, augmented part, and the two collision corrections) and
//! merges them afterwards. It exists to be checked against the first.

use crate::expansion::MonomialExpansion;
use crate::partition::Partition;
use crate::scalar::Scalar;

/// Candidate `(source value, resulting partition)` pairs for `p_a · m_λ`,
/// one per element of `{0} ∪ distinct parts of λ`.
pub fn pieri_candidates(a: u32, lambda: &Partition) -> Vec<(u32, Partition)> {
    assert!(a > 0, "power degree must be positive");
    std::iter::once(0)
        .chain(lambda.values())
        .map(|v| (v, lambda.replace_part(v, v + a)))
        .collect()
}

pub fn pieri_power_times_monomial<T: Scalar>(a: u32, lambda: &Partition) -> MonomialExpansion<T> {
    let mut out = MonomialExpansion::zero();
    for (v, mu) in pieri_candidates(a, lambda) {
        let c = mu.multiplicity_of(v + a);
        out.add_term(mu, T::from_usize(c));
    }
    out
}

pub fn pieri_literal_four_sums<T: Scalar>(a: u32, lambda: &Partition) -> MonomialExpansion<T> {
    assert!(a > 0, "power degree must be positive");
    type Edit<'a> = &'a dyn Fn(&mut Vec<(u32, usize)>);
    let parts = lambda.parts();
    let edited = |edit: Edit| {
        let mut pairs = parts.to_vec();
        edit(&mut pairs);
        Partition::from_exponents(pairs)
    };
    let mut out = MonomialExpansion::zero();

    // m_(a, b_1^{s_1}, ..., b_k^{s_k})
    out.add_term(edited(&|pairs| pairs.push((a, 1))), T::one());

    // Σ_i m_(a + b_i, ..., b_i^{s_i - 1}, ...)
    for (i, &(b, _)) in parts.iter().enumerate() {
        let mu = edited(&|pairs| {
            pairs[i].1 -= 1;
            pairs.push((a + b, 1));
        });
        out.add_term(mu, T::one());
    }

    // Σ_j δ_{a, b_j} s_j m_(..., b_j^{s_j + 1}, ...)
    for (j, &(b, s)) in parts.iter().enumerate() {
        if a == b {
            out.add_term(edited(&|pairs| pairs[j].1 += 1), T::from_usize(s));
        }
    }

    // Σ_{p,q} δ_{a + b_p, b_q} s_q m_(..., b_q^{s_q + 1}, ..., b_p^{s_p - 1}, ...)
    for (p, &(bp, _)) in parts.iter().enumerate() {
        for (q, &(bq, sq)) in parts.iter().enumerate() {
            if a + bp == bq {
                let mu = edited(&|pairs| {
                    pairs[q].1 += 1;
                    pairs[p].1 -= 1;
                });
                out.add_term(mu, T::from_usize(sq));
            }
        }
    }
    out
}

/// `p_a · x` for an arbitrary monomial expansion, by linearity.
pub fn mexp_mul_power<T: Scalar>(a: u32, x: &MonomialExpansion<T>) -> MonomialExpansion<T> {
    let mut out = MonomialExpansion::zero();
    for (mu, c) in x.iter() {
        out.add_scaled(c, &pieri_power_times_monomial(a, mu));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn m(terms: &[(&str, i64)]) -> MonomialExpansion<Q> {
        MonomialExpansion::from_terms(
            terms
                .iter()
                .map(|&(k, c)| (part(k), Q::from_integer(c.into()))),
        )
    }

    #[test]
    fn consolidated_rule_examples() {
        assert_eq!(pieri_power_times_monomial::<Q>(2, &part("()")), m(&[("2", 1)]));
        assert_eq!(
            pieri_power_times_monomial::<Q>(1, &part("1")),
            m(&[("2", 1), ("1,1", 2)])
        );
        assert_eq!(
            pieri_power_times_monomial::<Q>(1, &part("2,1")),
            m(&[("3,1", 1), ("2,2", 2), ("2,1,1", 2)])
        );
    }

    #[test]
    fn literal_rule_examples() {
        assert_eq!(
            pieri_literal_four_sums::<Q>(1, &part("1")),
            m(&[("2", 1), ("1,1", 2)])
        );
        assert_eq!(
            pieri_literal_four_sums::<Q>(1, &part("2,1")),
            m(&[("3,1", 1), ("2,2", 2), ("2,1,1", 2)])
        );
        assert_eq!(
            pieri_literal_four_sums::<Q>(3, &part("1")),
            m(&[("3,1", 1), ("4", 1)])
        );
        assert_eq!(pieri_literal_four_sums::<Q>(4, &part("()")), m(&[("4", 1)]));
    }

    #[test]
    fn linear_extension() {
        assert!(mexp_mul_power::<Q>(1, &m(&[])).is_zero());
        assert_eq!(mexp_mul_power(1, &m(&[("()", 1)])), m(&[("1", 1)]));
        assert_eq!(
            mexp_mul_power(2, &m(&[("1", 1), ("()", -1)])),
            m(&[("3", 1), ("2,1", 1), ("2", -1)])
        );
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn zero_degree_rejected() {
        let _ = pieri_power_times_monomial::<Q>(0, &part("1"));
    }
}
