use std::fmt;

use serde::Serialize;

use super::table::{EffectAlgebra, QEffectAlgebra, DEFAULT_VALIDATION_CAP};
use super::{FinitePoset, QEffect};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    E1,
    E2,
    E3,
    E4,
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self:?})")
    }
}

/// One failed axiom instance together with the elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
    pub message: String,
}

impl Violation {
    pub fn new(axiom: Axiom, witness: Vec<String>, message: impl Into<String>) -> Self {
        Violation {
            axiom,
            witness,
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} at ({})",
            self.axiom,
            self.message,
            self.witness.join(", ")
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn by_axiom(&self, axiom: Axiom) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            return "pass".into();
        }
        let mut first: Vec<String> = self.violations.iter().take(5).map(|v| v.to_string()).collect();
        if self.violations.len() > 5 {
            first.push(format!("... {} more", self.violations.len() - 5));
        }
        first.join("; ")
    }
}

/// Checks (Q1)–(Q5) on any q-effect structure. Cubic in the carrier size.
pub fn check_q_axioms<A: QEffect>(alg: &A) -> ValidationReport {
    let n = alg.size();
    let name = |x: usize| alg.element_name(x);
    let mut report = ValidationReport::default();
    let (zero, _one) = (alg.zero(), alg.one());

    for x in 0..n {
        let lhs = alg.d(alg.supplement(x));
        let rhs = alg.supplement(alg.q(x));
        if lhs != rhs {
            report.push(Violation::new(
                Axiom::Q1,
                vec![name(x)],
                format!("d(x')={} but q(x)'={}", name(lhs), name(rhs)),
            ));
        }
    }

    if alg.d(zero) != zero {
        report.push(Violation::new(Axiom::Q2, vec![name(zero)], "d(0) != 0"));
    }
    if alg.q(zero) != zero {
        report.push(Violation::new(Axiom::Q2, vec![name(zero)], "q(0) != 0"));
    }

    for x in 0..n {
        for y in 0..n {
            if alg.leq(x, y) && !alg.leq(alg.d(x), alg.d(y)) {
                report.push(Violation::new(
                    Axiom::Q3,
                    vec![name(x), name(y)],
                    "x <= y but d(x) > d(y)",
                ));
            }
        }
    }

    for x in 0..n {
        if alg.leq(alg.supplement(x), x) {
            match alg.prod(x, x) {
                Some(xx) if xx == alg.d(x) => {}
                Some(xx) => report.push(Violation::new(
                    Axiom::Q4,
                    vec![name(x)],
                    format!("x·x={} but d(x)={}", name(xx), name(alg.d(x))),
                )),
                None => report.push(Violation::new(
                    Axiom::Q4,
                    vec![name(x)],
                    "x' <= x but x·x undefined",
                )),
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            if !alg.leq(alg.supplement(y), x) {
                continue;
            }
            let Some(xy) = alg.prod(x, y) else {
                report.push(Violation::new(
                    Axiom::Q5,
                    vec![name(x), name(y)],
                    "y' <= x but x·y undefined",
                ));
                continue;
            };
            for z in 0..n {
                if alg.leq(z, x) && alg.leq(z, y) && !alg.leq(alg.d(z), xy) {
                    report.push(Violation::new(
                        Axiom::Q5,
                        vec![name(z), name(x), name(y)],
                        format!("d(z)={} not below x·y={}", name(alg.d(z)), name(xy)),
                    ));
                }
            }
        }
    }
    report
}

/// Checks (Q1)–(Q5) for explicit `q`/`d` tables over a validated effect
/// algebra. Maps of the wrong length are a structural error.
pub fn validate_q_axioms(base: &EffectAlgebra, qmap: &[usize], dmap: &[usize]) -> Result<ValidationReport> {
    let n = base.size();
    if n > DEFAULT_VALIDATION_CAP {
        return Err(Error::CapExceeded {
            what: "q-axiom validation".into(),
            needed: n as u128,
            cap: DEFAULT_VALIDATION_CAP as u128,
        });
    }
    for map in [qmap, dmap] {
        if map.len() != n {
            return Err(Error::MapLength {
                expected: n,
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= n) {
            return Err(Error::Precondition(format!("map value {bad} out of range")));
        }
    }
    let candidate = QEffectAlgebra::new_unchecked(base.clone(), qmap.to_vec(), dmap.to_vec());
    Ok(check_q_axioms(&candidate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{library, EffectOps, QEffect};

    #[test]
    fn fig1_table_fails_only_at_5b() {
        let fig1 = library::fig1();
        let report = validate_q_axioms(fig1.base(), fig1.qmap(), fig1.dmap()).unwrap();
        let found: Vec<(Axiom, Vec<String>)> = report
            .violations
            .iter()
            .map(|v| (v.axiom, v.witness.clone()))
            .collect();
        let w = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(
            found,
            vec![
                (Axiom::Q3, w(&["a", "5b"])),
                (Axiom::Q3, w(&["c", "5b"])),
                (Axiom::Q5, w(&["a", "5b", "5b"])),
                (Axiom::Q5, w(&["c", "5b", "5b"])),
            ]
        );
    }

    #[test]
    fn breaking_d_of_b_is_caught() {
        let fig1 = library::fig1();
        let b = fig1.index_of("b").unwrap();
        let mut d = fig1.dmap().to_vec();
        d[b] = b;
        let report = validate_q_axioms(fig1.base(), fig1.qmap(), &d).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v.axiom, Axiom::Q1 | Axiom::Q4 | Axiom::Q3 | Axiom::Q5)));
        // d(b') = d(b+c)... (Q1) relates d at the supplement of 5b to q(5b)
        let five_b = fig1.index_of("5b").unwrap();
        assert_eq!(fig1.base().supplement(five_b), b);
        assert!(report
            .by_axiom(Axiom::Q1)
            .any(|v| v.witness == vec!["5b".to_string()]));
    }

    #[test]
    fn wrong_map_length_is_structural() {
        let l3 = library::lukasiewicz_chain(3).unwrap();
        assert!(matches!(
            validate_q_axioms(l3.base(), &[0, 2], l3.dmap()),
            Err(Error::MapLength { .. })
        ));
    }

    #[test]
    fn lattice_terms_satisfy_q_axioms() {
        for alg in [
            library::lukasiewicz_chain(6).unwrap(),
            library::boolean_cube(3).unwrap(),
            library::diamond_mo2(),
            library::product_l2_l3(),
        ] {
            let (q, d) = crate::algebra::lattice_q_maps(alg.base()).unwrap();
            assert!(validate_q_axioms(alg.base(), &q, &d).unwrap().passed());
            assert_eq!(q, alg.qmap());
            assert_eq!(d, alg.dmap());
            let _ = alg.q(0);
        }
    }
}
