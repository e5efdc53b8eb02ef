//! States, q-states and q-semi-states.
//!
//! A valuation is a vector of [`UnitRational`]s indexed by the carrier. The
//! checks here classify valuations; [`enumerate_extreme_q_states`] finds
//! q-states exactly; [`verify_infimum_decomposition`] and its companions
//! test the statements relating Jauch-Piron q-semi-states to q-states.

mod extreme;
pub mod polytope;
mod theorems;

use serde::Serialize;

use crate::algebra::QEffect;
use crate::rational::UnitRational;

pub use extreme::{
    enumerate_extreme_q_states, enumerate_extreme_q_states_with_cap, segment_of_q_states,
    DEFAULT_STATE_CAP,
};
pub use theorems::{
    check_order_reflecting, compare_by_unit_sets, jp_algebra_certificate, verify_infimum_decomposition,
    verify_jp_implies_strong, verify_superadditivity, InfimumReport, Residual, UnitComparison,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tri {
    Yes,
    No,
    Unchecked,
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KindFlags {
    pub state: Tri,
    pub q_state: Tri,
    pub q_semi_state: Tri,
    pub jauch_piron: Tri,
    pub strong: Tri,
}

impl Default for KindFlags {
    fn default() -> Self {
        KindFlags {
            state: Tri::Unchecked,
            q_state: Tri::Unchecked,
            q_semi_state: Tri::Unchecked,
            jauch_piron: Tri::Unchecked,
            strong: Tri::Unchecked,
        }
    }
}

/// A valuation `E → [0,1]` with its classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateVector {
    pub values: Vec<UnitRational>,
    pub flags: KindFlags,
}

impl StateVector {
    /// An unclassified valuation.
    pub fn new(values: Vec<UnitRational>) -> Self {
        StateVector {
            values,
            flags: KindFlags::default(),
        }
    }

    /// A valuation with every flag computed.
    pub fn classified<A: QEffect + ?Sized>(alg: &A, values: Vec<UnitRational>) -> Self {
        let st = check_state(alg, &values);
        let semi = check_semi_state(alg, &values, SemiLevel::Strong);
        let jp = check_semi_state(alg, &values, SemiLevel::JauchPiron);
        StateVector {
            values,
            flags: KindFlags {
                state: st.is_state.into(),
                q_state: st.is_q_state.into(),
                q_semi_state: semi.q_semi.into(),
                jauch_piron: jp.jauch_piron,
                strong: semi.strong,
            },
        }
    }

    pub fn value(&self, x: usize) -> &UnitRational {
        &self.values[x]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise `self <= other`.
    pub fn leq(&self, other: &StateVector) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Elements with value 1.
    pub fn unit_set(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&x| self.values[x].is_one()).collect()
    }

    /// `s ∘ g` for a map given as a table.
    pub fn compose(&self, g: &[usize]) -> StateVector {
        StateVector::new(g.iter().map(|&y| self.values[y].clone()).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Extreme,
    User,
    Morphisms,
}

/// A duplicate-free list of valuations on one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateSet {
    pub members: Vec<StateVector>,
    pub provenance: Provenance,
}

impl StateSet {
    /// Drops exact duplicates, keeping the first occurrence.
    pub fn new(members: Vec<StateVector>, provenance: Provenance) -> Self {
        let mut seen = std::collections::HashSet::new();
        let members = members
            .into_iter()
            .filter(|m| seen.insert(m.values.clone()))
            .collect();
        StateSet { members, provenance }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, StateVector> {
        self.members.iter()
    }

    /// One row per state, one column per element.
    pub fn to_table<A: QEffect + ?Sized>(&self, alg: &A) -> String {
        let names: Vec<String> = (0..alg.size()).map(|x| alg.element_name(x)).collect();
        let mut out = format!("state\t{}\n", names.join("\t"));
        for (i, s) in self.members.iter().enumerate() {
            let vals: Vec<String> = s.values.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("s{i}\t{}\n", vals.join("\t")));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateReport {
    pub is_state: bool,
    pub is_q_state: bool,
    pub violations: Vec<String>,
}

/// State: `s(0)=0`, `s(1)=1`, additive on defined sums. q-state: also
/// `s(q x) = s(x) ⊕ s(x)` and `s(d x) = s(x) ⊙ s(x)`.
pub fn check_state<A: QEffect + ?Sized>(alg: &A, values: &[UnitRational]) -> StateReport {
    let n = alg.size();
    let name = |x: usize| alg.element_name(x);
    let mut violations = Vec::new();
    if values.len() != n {
        return StateReport {
            is_state: false,
            is_q_state: false,
            violations: vec![format!("valuation has {} entries for {n} elements", values.len())],
        };
    }
    if !values[alg.zero()].is_zero() {
        violations.push(format!("s({}) = {} != 0", name(alg.zero()), values[alg.zero()]));
    }
    if !values[alg.one()].is_one() {
        violations.push(format!("s({}) = {} != 1", name(alg.one()), values[alg.one()]));
    }
    for x in 0..n {
        for y in x..n {
            if let Some(z) = alg.sum(x, y) {
                if values[x].checked_add(&values[y]).as_ref() != Some(&values[z]) {
                    violations.push(format!(
                        "s({}) + s({}) = {} + {} != s({}) = {}",
                        name(x),
                        name(y),
                        values[x],
                        values[y],
                        name(z),
                        values[z]
                    ));
                }
            }
        }
    }
    let is_state = violations.is_empty();
    for x in 0..n {
        let (q, d) = (alg.q(x), alg.d(x));
        if values[q] != values[x].std_q() {
            violations.push(format!("s(q({})) = {} != s ⊕ s = {}", name(x), values[q], values[x].std_q()));
        }
        if values[d] != values[x].std_d() {
            violations.push(format!("s(d({})) = {} != s ⊙ s = {}", name(x), values[d], values[x].std_d()));
        }
    }
    StateReport {
        is_state,
        is_q_state: violations.is_empty(),
        violations,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SemiLevel {
    QSemi,
    JauchPiron,
    Strong,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiStateReport {
    pub q_semi: bool,
    pub jauch_piron: Tri,
    pub strong: Tri,
    pub violations: Vec<String>,
}

/// Some pair in the unit set with no common lower bound in it, or `None`.
///
/// A finite set is downward directed iff it has a least element, so the pair
/// search only runs when the unit set has no minimum.
fn jp_witness<A: QEffect + ?Sized>(alg: &A, values: &[UnitRational]) -> Option<(usize, usize)> {
    let units: Vec<usize> = (0..alg.size()).filter(|&x| values[x].is_one()).collect();
    if units.is_empty() || units.iter().any(|&m| units.iter().all(|&u| alg.leq(m, u))) {
        return None;
    }
    for (i, &x) in units.iter().enumerate() {
        for &y in &units[i + 1..] {
            if !units.iter().any(|&z| alg.leq(z, x) && alg.leq(z, y)) {
                return Some((x, y));
            }
        }
    }
    unreachable!("a finite directed set has a least element")
}

/// Items (i)–(iv); with `JauchPiron` also (v), with `Strong` also (vi).
pub fn check_semi_state<A: QEffect + ?Sized>(alg: &A, values: &[UnitRational], level: SemiLevel) -> SemiStateReport {
    let n = alg.size();
    let name = |x: usize| alg.element_name(x);
    let mut violations = Vec::new();
    if values.len() != n {
        return SemiStateReport {
            q_semi: false,
            jauch_piron: Tri::No,
            strong: Tri::No,
            violations: vec![format!("valuation has {} entries for {n} elements", values.len())],
        };
    }
    if !values[alg.one()].is_one() {
        violations.push(format!("(i) s(1) = {}", values[alg.one()]));
    }
    'mono: for x in 0..n {
        for y in 0..n {
            if values[x] > values[y] && alg.leq(x, y) {
                violations.push(format!("(ii) {} <= {} but s = {} > {}", name(x), name(y), values[x], values[y]));
                break 'mono;
            }
        }
    }
    for x in 0..n {
        if values[alg.d(x)] != values[x].std_d() {
            violations.push(format!("(iii) s(d({})) = {} != {}", name(x), values[alg.d(x)], values[x].std_d()));
        }
        if values[alg.q(x)] != values[x].std_q() {
            violations.push(format!("(iv) s(q({})) = {} != {}", name(x), values[alg.q(x)], values[x].std_q()));
        }
    }
    let q_semi = violations.is_empty();

    let mut jauch_piron = Tri::Unchecked;
    if level == SemiLevel::JauchPiron {
        let w = jp_witness(alg, values);
        if let Some((x, y)) = w {
            violations.push(format!("(v) s({}) = s({}) = 1 with no common lower bound of value 1", name(x), name(y)));
        }
        jauch_piron = (q_semi && w.is_none()).into();
    }

    let mut strong = Tri::Unchecked;
    if level == SemiLevel::Strong {
        let units: Vec<usize> = (0..n).filter(|&x| values[x].is_one()).collect();
        let mut ok = true;
        'vi: for &x in &units {
            for &y in &units {
                if let Some(p) = alg.prod(x, y) {
                    if !values[p].is_one() {
                        violations.push(format!("(vi) s({}) = s({}) = 1 but s({}) = {}", name(x), name(y), name(p), values[p]));
                        ok = false;
                        break 'vi;
                    }
                }
            }
        }
        strong = (q_semi && ok).into();
    }
    SemiStateReport {
        q_semi,
        jauch_piron,
        strong,
        violations,
    }
}

/// Pointwise meet; the meet of no valuations is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetResult {
    pub vector: StateVector,
    pub empty_meet: bool,
}

pub fn meet_semistates(size: usize, set: &[StateVector]) -> MeetResult {
    let values = (0..size)
        .map(|x| {
            set.iter()
                .map(|s| &s.values[x])
                .min()
                .cloned()
                .unwrap_or_else(UnitRational::one)
        })
        .collect();
    MeetResult {
        vector: StateVector::new(values),
        empty_meet: set.is_empty(),
    }
}

/// Pointwise join of a nonempty set that is linearly ordered pointwise.
pub fn join_chain_semistates(set: &[StateVector]) -> crate::Result<StateVector> {
    let first = set
        .first()
        .ok_or_else(|| crate::Error::Precondition("join of an empty set".into()))?;
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            if !a.leq(b) && !b.leq(a) {
                return Err(crate::Error::Precondition("valuations are not linearly ordered".into()));
            }
        }
    }
    let values = (0..first.len())
        .map(|x| set.iter().map(|s| &s.values[x]).max().cloned().expect("nonempty"))
        .collect();
    Ok(StateVector::new(values))
}
