//! Exhaustive verification over all partitions up to a weight bound.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::newton::{e_to_p, formal_ring_mismatch, matches_classical, verify_theorem, PowerSumConverter};
use crate::oracle::ExponentVector;
use crate::partition::{partitions_up_to_weight, Partition};
use crate::Rational;

/// Which variable counts each partition is checked in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Policy {
    /// `n ∈ {l(λ), l(λ)+1}`
    Paper,
    /// Adds `n = max(1, l(λ)-1)`, where `m_λ` vanishes.
    Extended,
}

impl Policy {
    pub fn var_counts(self, length: usize) -> Vec<usize> {
        let mut set = BTreeSet::from([length, length + 1]);
        if self == Policy::Extended {
            set.insert(length.saturating_sub(1).max(1));
        }
        set.into_iter().collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Policy::Paper => "paper",
            Policy::Extended => "extended",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    /// Both sides expanded into monomials in `n` variables.
    Oracle,
    /// Both sides computed in the abstract ring through the product rule.
    FormalRing,
    /// `λ = (1^k)` against the classical recurrence.
    Classical,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Oracle => "oracle",
            CheckKind::FormalRing => "formal-ring",
            CheckKind::Classical => "classical",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Monomial(ExponentVector),
    Basis(Partition),
    /// The classical term list or `e_k` conversion disagreed as a whole.
    Structure,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepFailure {
    pub kind: CheckKind,
    pub lambda: Partition,
    pub vars: Option<usize>,
    pub witness: Witness,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub bound: u32,
    pub policy: Policy,
    pub partitions: usize,
    /// Number of `(λ, n)` oracle checks.
    pub checked: usize,
    pub ring_checked: usize,
    pub classical_checked: usize,
    /// Sorted by kind, then partition order, then variable count.
    pub failures: Vec<SweepFailure>,
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct ItemOutcome {
    checked: usize,
    ring_checked: usize,
    classical_checked: usize,
    failures: Vec<SweepFailure>,
}

fn check_partition(lambda: &Partition, policy: Policy, converter: &PowerSumConverter<Rational>) -> ItemOutcome {
    let mut out = ItemOutcome::default();
    for n in policy.var_counts(lambda.length()) {
        out.checked += 1;
        let verdict = verify_theorem::<Rational>(lambda, n).expect("nonempty partition");
        if let Some(m) = verdict.mismatch {
            out.failures.push(SweepFailure {
                kind: CheckKind::Oracle,
                lambda: lambda.clone(),
                vars: Some(n),
                witness: Witness::Monomial(m.monomial),
                lhs: m.lhs,
                rhs: m.rhs,
            });
        }
    }

    out.ring_checked += 1;
    if let Some((mu, lhs, rhs)) = formal_ring_mismatch::<Rational>(lambda).expect("nonempty partition") {
        out.failures.push(SweepFailure {
            kind: CheckKind::FormalRing,
            lambda: lambda.clone(),
            vars: None,
            witness: Witness::Basis(mu),
            lhs,
            rhs,
        });
    }

    if lambda.distinct_len() == 1 && lambda.values().next() == Some(1) {
        let k = lambda.length();
        out.classical_checked += 1;
        let same = matches_classical(k) && *converter.m_to_p(lambda) == e_to_p::<Rational>(k);
        if !same {
            out.failures.push(SweepFailure {
                kind: CheckKind::Classical,
                lambda: lambda.clone(),
                vars: None,
                witness: Witness::Structure,
                lhs: Rational::from_integer(k.into()),
                rhs: Rational::from_integer(0.into()),
            });
        }
    }
    out
}

/// Runs every check for each nonempty partition of weight `<= bound` on a
/// pool of `jobs` worker threads. The report does not depend on `jobs`.
pub fn run_sweep(bound: u32, policy: Policy, jobs: usize) -> SweepReport {
    let start = Instant::now();
    let partitions = partitions_up_to_weight(bound);
    let converter = PowerSumConverter::<Rational>::new();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("failed to build worker pool");
    let outcomes: Vec<ItemOutcome> = pool.install(|| {
        partitions
            .par_iter()
            .map(|lambda| check_partition(lambda, policy, &converter))
            .collect()
    });

    let mut report = SweepReport {
        bound,
        policy,
        partitions: partitions.len(),
        checked: 0,
        ring_checked: 0,
        classical_checked: 0,
        failures: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for o in outcomes {
        report.checked += o.checked;
        report.ring_checked += o.ring_checked;
        report.classical_checked += o.classical_checked;
        report.failures.extend(o.failures);
    }
    report
        .failures
        .sort_by(|a, b| (a.kind, &a.lambda, a.vars).cmp(&(b.kind, &b.lambda, b.vars)));
    report.wall_time = start.elapsed();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_count_policies() {
        assert_eq!(Policy::Paper.var_counts(3), vec![3, 4]);
        assert_eq!(Policy::Extended.var_counts(3), vec![2, 3, 4]);
        assert_eq!(Policy::Extended.var_counts(1), vec![1, 2]);
    }

    #[test]
    fn weight_one_sweep() {
        let r = run_sweep(1, Policy::Paper, 1);
        assert_eq!(r.partitions, 1);
        assert_eq!(r.checked, 2);
        assert_eq!(r.classical_checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn small_sweep_passes() {
        let r = run_sweep(6, Policy::Paper, 2);
        assert_eq!(r.partitions, 1 + 2 + 3 + 5 + 7 + 11);
        assert_eq!(r.checked, 2 * r.partitions);
        assert!(r.passed(), "{:?}", r.failures);
    }
}
