use serde::Serialize;

use super::galois::{check_galois_q_connection, conjugate, GaloisPair, QConnectionReport, Scope};
use crate::algebra::{AlgebraMap, QEffect};
use crate::report::{Certificate, Verdict};

/// Tense operators `G`, `H` on one algebra with `P = '∘H∘` and `F = '∘G∘`.
#[derive(Clone, Debug, Serialize)]
pub struct TenseStructure {
    pub g: AlgebraMap,
    pub h: AlgebraMap,
    pub p: AlgebraMap,
    pub f: AlgebraMap,
    pub report: TenseReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct TenseReport {
    /// (T1)-(T5) in order.
    pub axioms: Vec<Certificate>,
    /// `(P, G)` as a Galois q-connection.
    pub pg: QConnectionReport,
    /// `(F, H)` as a Galois q-connection.
    pub fh: QConnectionReport,
    pub sampled: bool,
}

impl TenseReport {
    pub fn axioms_hold(&self) -> bool {
        self.axioms.iter().all(|c| c.verdict.is_certified())
    }

    pub fn connections_hold(&self) -> bool {
        self.pg.is_q_connection() && self.fh.is_q_connection()
    }

    /// The connections imply (T1)-(T5), so a certified pair of connections
    /// with a failing axiom signals a checker bug.
    pub fn consistent(&self) -> bool {
        !self.connections_hold() || self.axioms_hold()
    }

    pub fn verdict(&self) -> Verdict {
        let mut v = self.pg.verdict().combine(self.fh.verdict());
        for c in &self.axioms {
            v = v.combine(c.verdict.clone());
        }
        v
    }
}

fn certificate(name: &str, witnesses: Vec<String>) -> Certificate {
    Certificate {
        name: name.into(),
        verdict: Verdict::from_witnesses(witnesses),
    }
}

/// Derives `P` and `F`, certifies both q-connections and checks (T1)-(T5)
/// directly over the scope.
pub fn check_tense_operators<A: QEffect + ?Sized>(alg: &A, g: AlgebraMap, h: AlgebraMap, scope: &Scope) -> TenseStructure {
    let p = conjugate(alg, alg, &h);
    let f = conjugate(alg, alg, &g);
    let xs = scope.left(alg.size());
    let name = |x: usize| alg.element_name(x);
    let ops = [("G", &g), ("H", &h)];

    let mut t1 = Vec::new();
    for (label, m) in ops {
        if m.apply(alg.one()) != alg.one() {
            t1.push(format!("{label}(1) = {}", name(m.apply(alg.one()))));
        }
    }
    let mut t2 = Vec::new();
    for (label, m) in ops {
        'mono: for &x in &xs {
            for &y in &xs {
                if alg.leq(x, y) && !alg.leq(m.apply(x), m.apply(y)) {
                    t2.push(format!("{label} not monotone at ({}, {})", name(x), name(y)));
                    break 'mono;
                }
            }
        }
    }
    let mut t3 = Vec::new();
    for &x in &xs {
        if !alg.leq(x, g.apply(p.apply(x))) {
            t3.push(format!("{} is not below GP({})", name(x), name(x)));
        }
        if !alg.leq(x, h.apply(f.apply(x))) {
            t3.push(format!("{} is not below HF({})", name(x), name(x)));
        }
    }
    let mut t4 = Vec::new();
    let mut t5 = Vec::new();
    for (label, m) in ops {
        for &x in &xs {
            if m.apply(alg.q(x)) != alg.q(m.apply(x)) {
                t4.push(format!("{label}(q({0})) != q({label}({0}))", name(x)));
            }
            if m.apply(alg.d(x)) != alg.d(m.apply(x)) {
                t5.push(format!("{label}(d({0})) != d({label}({0}))", name(x)));
            }
        }
    }

    let mut pg = GaloisPair::new(p.clone(), g.clone());
    let pg_report = check_galois_q_connection(alg, alg, &mut pg, scope);
    let mut fh = GaloisPair::new(f.clone(), h.clone());
    let fh_report = check_galois_q_connection(alg, alg, &mut fh, scope);

    TenseStructure {
        report: TenseReport {
            axioms: vec![
                certificate("(T1) G(1) = H(1) = 1", t1),
                certificate("(T2) G, H monotone", t2),
                certificate("(T3) x <= GP(x), x <= HF(x)", t3),
                certificate("(T4) G, H commute with q", t4),
                certificate("(T5) G, H commute with d", t5),
            ],
            pg: pg_report,
            fh: fh_report,
            sampled: scope.is_sampled(),
        },
        g,
        h,
        p,
        f,
    }
}
