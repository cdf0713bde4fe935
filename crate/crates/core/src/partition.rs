//! Integer partitions in exponent form.
//!
//! A [`Partition`] stores its distinct parts in strictly decreasing order,
//! each paired with a positive multiplicity, so `(2, 2, 1)` is held as
//! `[(2, 2), (1, 1)]`. The representation is canonical: two partitions with
//! the same parts compare equal.
//!
//! Text syntax accepts both the flat form `3,2,2,1` and the exponent form
//! `3,2^2,1`; [`Display`](fmt::Display) produces the exponent form with `^1`
//! omitted and renders the empty partition as `()`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<(u32, usize)>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Canonicalizes an arbitrary list of part values. Zeros are dropped.
    pub fn from_parts<I: IntoIterator<Item = u32>>(values: I) -> Self {
        Self::from_exponents(values.into_iter().map(|v| (v, 1)))
    }

    /// Canonicalizes `(value, multiplicity)` pairs in any order, merging
    /// repeated values and dropping zero values or zero multiplicities.
    pub fn from_exponents<I: IntoIterator<Item = (u32, usize)>>(pairs: I) -> Self {
        let mut pairs: Vec<(u32, usize)> = pairs
            .into_iter()
            .filter(|&(v, r)| v > 0 && r > 0)
            .collect();
        pairs.sort_unstable_by_key(|&(v, _)| std::cmp::Reverse(v));
        let mut parts: Vec<(u32, usize)> = Vec::with_capacity(pairs.len());
        for (v, r) in pairs {
            match parts.last_mut() {
                Some(last) if last.0 == v => last.1 += r,
                _ => parts.push((v, r)),
            }
        }
        Self { parts }
    }

    /// `(a_i, r_i)` pairs, values strictly decreasing.
    pub fn parts(&self) -> &[(u32, usize)] {
        &self.parts
    }

    pub fn values(&self) -> impl ExactSizeIterator<Item = u32> + '_ {
        self.parts.iter().map(|&(v, _)| v)
    }

    pub fn multiplicities(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.parts.iter().map(|&(_, r)| r)
    }

    /// Number of distinct part values.
    pub fn distinct_len(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts counted with multiplicity.
    pub fn length(&self) -> usize {
        self.parts.iter().map(|&(_, r)| r).sum()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&(v, r)| u64::from(v) * r as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity_of(&self, value: u32) -> usize {
        self.parts
            .binary_search_by(|&(v, _)| value.cmp(&v))
            .map(|i| self.parts[i].1)
            .unwrap_or(0)
    }

    /// Parts in non-increasing order, repeated by multiplicity.
    pub fn iter_flat(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts
            .iter()
            .flat_map(|&(v, r)| std::iter::repeat_n(v, r))
    }

    pub fn to_flat(&self) -> Vec<u32> {
        self.iter_flat().collect()
    }

    /// Replaces one part equal to `from` with a part equal to `to`. A value of
    /// zero on either side means "no part", so `from = 0` appends and
    /// `to = 0` removes.
    ///
    /// Panics if `from > 0` and the partition has no such part.
    pub fn replace_part(&self, from: u32, to: u32) -> Self {
        let mut pairs = self.parts.clone();
        if from > 0 {
            let slot = pairs
                .iter_mut()
                .find(|(v, _)| *v == from)
                .expect("replace_part: value not present");
            slot.1 -= 1;
        }
        if to > 0 {
            pairs.push((to, 1));
        }
        Self::from_exponents(pairs)
    }

    /// Comma-separated flat form, e.g. `2,1,1`; empty string for `()`.
    pub fn flat_string(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.iter_flat().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&v.to_string());
        }
        out
    }

    /// Lexicographic comparison of the flat part sequences.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.iter_flat().cmp(other.iter_flat())
    }
}

/// Graded reverse-lexicographic: weight ascending, then lexicographically
/// larger part sequences first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.cmp_lex(self))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (i, &(v, r)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if r == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{r}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut body = s.trim();
        for (open, close) in [('(', ')'), ('[', ']')] {
            if let Some(inner) = body.strip_prefix(open).and_then(|b| b.strip_suffix(close)) {
                body = inner.trim();
                break;
            }
        }
        if body.is_empty() {
            return Ok(Self::empty());
        }
        let mut pairs = Vec::new();
        for raw in body.split(',') {
            let token = raw.trim();
            let bad = || Error::ParseToken {
                token: token.to_string(),
            };
            let pair = match token.split_once('^') {
                Some((v, r)) => (
                    v.trim().parse::<u32>().map_err(|_| bad())?,
                    r.trim().parse::<usize>().map_err(|_| bad())?,
                ),
                None => (token.parse::<u32>().map_err(|_| bad())?, 1),
            };
            pairs.push(pair);
        }
        Ok(Self::from_exponents(pairs))
    }
}

/// All partitions of `weight`, lexicographically largest first.
pub fn partitions_of(weight: u32) -> Vec<Partition> {
    fn fill(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts(prefix.iter().copied()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            fill(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(weight, weight, &mut Vec::new(), &mut out);
    out
}

/// Every nonempty partition of weight at most `max_weight`, ordered by
/// weight and then reverse-lexicographically.
pub fn partitions_up_to_weight(max_weight: u32) -> Vec<Partition> {
    (1..=max_weight).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalizes_flat_lists() {
        let lam = Partition::from_parts([1, 2, 2, 0]);
        assert_eq!(lam.parts(), &[(2, 2), (1, 1)]);
        assert!(Partition::from_parts([]).is_empty());
        assert_eq!(Partition::from_parts([3, 3, 3]).parts(), &[(3, 3)]);
    }

    #[test]
    fn length_and_weight() {
        assert_eq!(p("2,1").length(), 2);
        assert_eq!(Partition::empty().length(), 0);
        assert_eq!(p("1^5").length(), 5);
        assert_eq!(p("3^2,1").weight(), 7);
    }

    #[test]
    fn parses_both_syntaxes() {
        assert_eq!(p("2^3,1^2"), p("2,2,2,1,1"));
        assert_eq!(p("3,2,2,1"), p("3,2^2,1"));
        assert_eq!(p("()"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("(2, 1)"), p("2,1"));
        assert_eq!(p("0,0"), Partition::empty());
    }

    #[test]
    fn parse_errors_name_the_token() {
        let err = "2,x,1".parse::<Partition>().unwrap_err();
        assert_eq!(err, Error::ParseToken { token: "x".into() });
        let err = "2^-1".parse::<Partition>().unwrap_err();
        assert_eq!(err, Error::ParseToken { token: "2^-1".into() });
        assert!("-3".parse::<Partition>().is_err());
        assert!("2,,1".parse::<Partition>().is_err());
    }

    #[test]
    fn display_is_exponent_form() {
        assert_eq!(p("2,2,1").to_string(), "2^2,1");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p("1,1,1").flat_string(), "1,1,1");
    }

    #[test]
    fn replace_part_moves_one_part() {
        let lam = p("2,1");
        assert_eq!(lam.replace_part(0, 1), p("2,1,1"));
        assert_eq!(lam.replace_part(1, 2), p("2,2"));
        assert_eq!(lam.replace_part(2, 0), p("1"));
        assert_eq!(lam.multiplicity_of(1), 1);
        assert_eq!(lam.multiplicity_of(5), 0);
    }

    #[test]
    fn ordering_is_graded_reverse_lex() {
        let mut v = vec![p("1,1,1"), p("3"), p("2"), p("2,1"), p("1")];
        v.sort();
        assert_eq!(v, vec![p("1"), p("2"), p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn small_weight_enumeration() {
        assert_eq!(partitions_up_to_weight(2), vec![p("1"), p("2"), p("1,1")]);
        assert_eq!(partitions_up_to_weight(5).len(), 18);
        assert_eq!(partitions_up_to_weight(10).len(), 138);
    }
}
