use serde::Serialize;

use super::{check_semi_state, meet_semistates, SemiLevel, StateSet, StateVector, Tri};
use crate::algebra::{classify, QEffect};
use crate::error::{Error, Result};
use crate::rational::UnitRational;
use crate::report::Verdict;

/// `None` when for every `a ≰ b` some member has `s(a) > s(b)`; otherwise
/// the first failing pair in index order.
pub fn check_order_reflecting<A: QEffect + ?Sized>(alg: &A, states: &[StateVector]) -> Option<(usize, usize)> {
    let n = alg.size();
    for a in 0..n {
        for b in 0..n {
            if !alg.leq(a, b) && !states.iter().any(|s| s.values[a] > s.values[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnitComparison {
    /// `t <= s` pointwise.
    pub pointwise: bool,
    /// `t(x) = 1` implies `s(x) = 1`.
    pub unit_implication: bool,
}

/// Compares two q-semi-states both pointwise and by their unit sets.
pub fn compare_by_unit_sets<A: QEffect + ?Sized>(alg: &A, t: &StateVector, s: &StateVector) -> Result<UnitComparison> {
    for (label, v) in [("t", t), ("s", s)] {
        let rep = check_semi_state(alg, &v.values, SemiLevel::QSemi);
        if !rep.q_semi {
            return Err(Error::Precondition(format!("{label} is not a q-semi-state: {}", rep.violations.join("; "))));
        }
    }
    Ok(UnitComparison {
        pointwise: t.leq(s),
        unit_implication: (0..alg.size()).all(|x| !t.values[x].is_one() || s.values[x].is_one()),
    })
}

/// Every Jauch-Piron member is strong. Members that are not Jauch-Piron
/// violate the precondition.
pub fn verify_jp_implies_strong<A: QEffect + ?Sized>(alg: &A, states: &[StateVector]) -> Result<bool> {
    for (i, s) in states.iter().enumerate() {
        if check_semi_state(alg, &s.values, SemiLevel::JauchPiron).jauch_piron != Tri::Yes {
            return Err(Error::Precondition(format!("member {i} is not a Jauch-Piron q-semi-state")));
        }
    }
    Ok(states
        .iter()
        .all(|s| check_semi_state(alg, &s.values, SemiLevel::Strong).strong == Tri::Yes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub element: String,
    pub t: UnitRational,
    pub meet: UnitRational,
}

#[derive(Clone, Debug, Serialize)]
pub struct InfimumReport {
    pub verdict: Verdict,
    /// Indices of the members `s >= t`.
    pub supporting: Vec<usize>,
    pub residuals: Vec<Residual>,
}

/// Checks `t = ⋀{s ∈ states | s >= t}`, with the empty meet equal to 1.
///
/// Unmet hypotheses (states not order reflecting, `t` not Jauch-Piron) give
/// an `Inapplicable` verdict rather than a violation.
pub fn verify_infimum_decomposition<A: QEffect + ?Sized>(
    alg: &A,
    states: &StateSet,
    t: &StateVector,
) -> InfimumReport {
    let inapplicable = |reason: String| InfimumReport {
        verdict: Verdict::Inapplicable(reason),
        supporting: Vec::new(),
        residuals: Vec::new(),
    };
    if let Some((a, b)) = check_order_reflecting(alg, &states.members) {
        return inapplicable(format!(
            "state set is not order reflecting at ({}, {})",
            alg.element_name(a),
            alg.element_name(b)
        ));
    }
    let jp = check_semi_state(alg, &t.values, SemiLevel::JauchPiron);
    if jp.jauch_piron != Tri::Yes {
        return inapplicable(format!("t is not a Jauch-Piron q-semi-state: {}", jp.violations.join("; ")));
    }
    let supporting: Vec<usize> = (0..states.len()).filter(|&i| t.leq(&states.members[i])).collect();
    let chosen: Vec<StateVector> = supporting.iter().map(|&i| states.members[i].clone()).collect();
    let meet = meet_semistates(alg.size(), &chosen).vector;
    let residuals: Vec<Residual> = (0..alg.size())
        .filter(|&x| meet.values[x] != t.values[x])
        .map(|x| Residual {
            element: alg.element_name(x),
            t: t.values[x].clone(),
            meet: meet.values[x].clone(),
        })
        .collect();
    let verdict = Verdict::from_witnesses(
        residuals
            .iter()
            .map(|r| format!("{}: t = {}, meet = {}", r.element, r.t, r.meet))
            .collect(),
    );
    InfimumReport {
        verdict,
        supporting,
        residuals,
    }
}

/// `t(x) + t(y) <= t(x + y)` on every defined sum; returns the first failing
/// pair. Requires `t(0) = 0` and the Jauch-Piron property.
pub fn verify_superadditivity<A: QEffect + ?Sized>(alg: &A, t: &StateVector) -> Result<Option<(usize, usize)>> {
    if !t.values[alg.zero()].is_zero() {
        return Err(Error::Precondition("t(0) != 0".into()));
    }
    if check_semi_state(alg, &t.values, SemiLevel::JauchPiron).jauch_piron != Tri::Yes {
        return Err(Error::Precondition("t is not a Jauch-Piron q-semi-state".into()));
    }
    let n = alg.size();
    for x in 0..n {
        for y in x..n {
            if let Some(z) = alg.sum(x, y) {
                let lhs = t.values[x].as_big() + t.values[y].as_big();
                if &lhs > t.values[z].as_big() {
                    return Ok(Some((x, y)));
                }
            }
        }
    }
    Ok(None)
}

/// Whether every q-state is Jauch-Piron: certified outright on MV-algebras,
/// otherwise checked on the supplied (extreme) states only.
pub fn jp_algebra_certificate<A: QEffect + ?Sized>(alg: &A, extreme: &StateSet) -> Verdict {
    if classify(alg).is_mv {
        return Verdict::Certified;
    }
    let failing: Vec<String> = extreme
        .iter()
        .enumerate()
        .filter(|(_, s)| check_semi_state(alg, &s.values, SemiLevel::JauchPiron).jauch_piron != Tri::Yes)
        .map(|(i, _)| format!("state s{i} is not Jauch-Piron"))
        .collect();
    if failing.is_empty() {
        Verdict::Partial(format!("{} extreme q-states checked; interior states not covered", extreme.len()))
    } else {
        Verdict::Violated(failing)
    }
}
