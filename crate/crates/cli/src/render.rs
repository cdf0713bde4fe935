//! Text and JSON renderings shared by the subcommands.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use symgirard::sweep::{SweepFailure, SweepReport, Witness};
use symgirard::{Basis, Expansion, Partition, Poly, Rational, Sign, TheoremTerm};

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn rational_json(c: &Rational) -> Value {
    json!({ "num": int_json(c.numer()), "den": int_json(c.denom()) })
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.to_flat())
}

pub fn poly_json(f: &Poly) -> Value {
    let terms: Vec<Value> = f
        .iter()
        .rev()
        .map(|(k, c)| json!({ "exponents": k.exponents(), "coeff": rational_json(c) }))
        .collect();
    json!({ "vars": f.vars(), "terms": terms })
}

pub fn expansion_json<B: Basis>(x: &Expansion<B, Rational>) -> Value {
    let terms: Vec<Value> = x
        .display_terms()
        .into_iter()
        .map(|(k, c)| json!({ "partition": partition_json(k), "coeff": rational_json(c) }))
        .collect();
    json!({ "basis": B::SYMBOL, "terms": terms, "text": x.to_string() })
}

fn signed_join<'a>(items: impl IntoIterator<Item = (bool, String)> + 'a) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in items.into_iter().enumerate() {
        out.push_str(match (i, negative) {
            (0, true) => "−",
            (0, false) => "",
            (_, true) => " − ",
            (_, false) => " + ",
        });
        out.push_str(&body);
    }
    out
}

fn coeff_prefix(t: &TheoremTerm) -> String {
    if t.coeff == 1u32.into() {
        String::new()
    } else {
        t.coeff.to_string()
    }
}

/// The identity at `λ` in current-algebra notation, with `p_j` written as
/// `(h⊗t^j)` and `m_μ` as `p(μ)`.
pub fn garland_identity(lambda: &Partition, terms: &[TheoremTerm]) -> String {
    let rhs = signed_join(terms.iter().map(|t| {
        (
            t.sign == Sign::Minus,
            format!("{}(h⊗t^{})p({})", coeff_prefix(t), t.power_degree, t.residual.flat_string()),
        )
    }));
    format!("{}·p({}) = {}", lambda.length(), lambda.flat_string(), rhs)
}

/// `kΛ_k = Σ (-1)^{i-1} (h⊗t^i) Λ_{k-i}`.
pub fn garland_classical(k: usize) -> String {
    let rhs = signed_join((1..=k).map(|i| (i % 2 == 0, format!("(h⊗t^{i})Λ_{}", k - i))));
    format!("{k}Λ_{k} = {rhs}")
}

pub fn theorem_term_json(t: &TheoremTerm) -> Value {
    json!({
        "composition": t.composition.entries(),
        "sign": if t.sign == Sign::Plus { 1 } else { -1 },
        "coeff": t.coeff.to_string(),
        "power_degree": t.power_degree,
        "residual": partition_json(&t.residual),
    })
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Monomial(e) if e.degree() == 0 => "1".to_string(),
        Witness::Monomial(e) => e.to_string(),
        Witness::Basis(mu) => format!("m[{}]", mu.flat_string()),
        Witness::Structure => "term structure".to_string(),
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Monomial(e) => json!({ "monomial": e.exponents() }),
        Witness::Basis(mu) => json!({ "basis": partition_json(mu) }),
        Witness::Structure => json!("structure"),
    }
}

fn failure_json(f: &SweepFailure) -> Value {
    json!({
        "check": f.kind.name(),
        "partition": partition_json(&f.lambda),
        "vars": f.vars,
        "witness": witness_json(&f.witness),
        "lhs": rational_json(&f.lhs),
        "rhs": rational_json(&f.rhs),
    })
}

/// Machine-readable report. Omits wall time so repeated runs are identical.
pub fn report_json(r: &SweepReport) -> Value {
    json!({
        "bound": r.bound,
        "policy": r.policy.name(),
        "partitions": r.partitions,
        "checked": r.checked,
        "ring_checked": r.ring_checked,
        "classical_checked": r.classical_checked,
        "failures": r.failures.iter().map(failure_json).collect::<Vec<_>>(),
        "passed": r.passed(),
    })
}

pub fn report_text(r: &SweepReport) -> String {
    let mut out = String::new();
    for f in &r.failures {
        let vars = f.vars.map(|n| format!(" n={n}")).unwrap_or_default();
        out.push_str(&format!(
            "FAIL {} λ={}{} at {}: lhs {} rhs {}\n",
            f.kind.name(),
            f.lambda,
            vars,
            witness_text(&f.witness),
            f.lhs,
            f.rhs
        ));
    }
    out.push_str(&format!(
        "partitions: {} (weight <= {}), policy {}\n",
        r.partitions,
        r.bound,
        r.policy.name()
    ));
    out.push_str(&format!("oracle checks: {}\n", r.checked));
    out.push_str(&format!("formal-ring checks: {}\n", r.ring_checked));
    out.push_str(&format!("classical checks: {}\n", r.classical_checked));
    out.push_str(&format!("failures: {}\n", r.failures.len()));
    out.push_str(&format!("wall time: {:.3}s\n", r.wall_time.as_secs_f64()));
    out.push_str(if r.passed() { "PASS" } else { "FAIL" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use symgirard::theorem_terms;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn garland_two_one() {
        let lam = part("2,1");
        let text = garland_identity(&lam, &theorem_terms(&lam).unwrap());
        assert_eq!(text, "2·p(2,1) = (h⊗t^2)p(1) + (h⊗t^1)p(2) − 2(h⊗t^3)p()");
    }

    #[test]
    fn garland_single_part() {
        let lam = part("3");
        let text = garland_identity(&lam, &theorem_terms(&lam).unwrap());
        assert_eq!(text, "1·p(3) = (h⊗t^3)p()");
    }

    #[test]
    fn garland_classical_form() {
        assert_eq!(garland_classical(2), "2Λ_2 = (h⊗t^1)Λ_1 − (h⊗t^2)Λ_0");
        assert_eq!(
            garland_classical(3),
            "3Λ_3 = (h⊗t^1)Λ_2 − (h⊗t^2)Λ_1 + (h⊗t^3)Λ_0"
        );
    }

    #[test]
    fn rationals_as_pairs() {
        let c = Rational::new((-1).into(), 2.into());
        assert_eq!(rational_json(&c), json!({"num": -1, "den": 2}));
    }
}
