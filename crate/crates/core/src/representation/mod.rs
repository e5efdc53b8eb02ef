//! Frames synthesized from states, embeddings into powers of the standard
//! algebra, and exact commuting-diagram checks for the representation
//! theorems.

mod mv;

use num::BigRational;
use serde::Serialize;
use serde_json::json;

pub use mv::{enumerate_mv_morphisms, is_mv_morphism, morphisms_are_jp_q_states};

use crate::algebra::{classify, AlgebraMap, FinitePoset, QEffect, QEffectAlgebra};
use crate::error::{Error, Result};
use crate::rational::UnitRational;
use crate::report::{Certificate, Verdict, VerificationReport};
use crate::states::{
    check_order_reflecting, check_semi_state, check_state, enumerate_extreme_q_states, SemiLevel, StateSet,
    StateVector, Tri,
};
use crate::tense::{check_galois_q_connection, check_tense_operators, conjugate, Frame, GaloisPair, Scope};

/// `i(x) = (s(x))_{s ∈ S}`.
#[derive(Clone, Debug, Serialize)]
pub struct Embedding {
    pub states: StateSet,
    /// `image[x][i]` is the value of state `i` at `x`.
    pub image: Vec<Vec<UnitRational>>,
    pub order_reflecting: bool,
}

impl Embedding {
    pub fn vector(&self, x: usize) -> &[UnitRational] {
        &self.image[x]
    }

    /// `i(q(x)) = i(x) ⊕ i(x)` and `i(d(x)) = i(x) ⊙ i(x)` componentwise.
    pub fn respects_q_d<A: QEffect + ?Sized>(&self, alg: &A) -> bool {
        (0..alg.size()).all(|x| {
            self.image[x].iter().zip(&self.image[alg.q(x)]).all(|(v, w)| *w == v.std_q())
                && self.image[x].iter().zip(&self.image[alg.d(x)]).all(|(v, w)| *w == v.std_d())
        })
    }
}

pub fn build_embedding<A: QEffect + ?Sized>(alg: &A, states: &StateSet) -> Result<Embedding> {
    if states.is_empty() {
        return Err(Error::Precondition("an embedding needs at least one state".into()));
    }
    for (i, s) in states.iter().enumerate() {
        let r = check_state(alg, &s.values);
        if !r.is_q_state {
            return Err(Error::Precondition(format!("s{i} is not a q-state: {}", r.violations.join("; "))));
        }
    }
    let image = (0..alg.size())
        .map(|x| states.iter().map(|s| s.values[x].clone()).collect())
        .collect();
    Ok(Embedding {
        states: states.clone(),
        image,
        order_reflecting: check_order_reflecting(alg, &states.members).is_none(),
    })
}

/// The frame `(S, T, R_g)` with `sRt` iff `s(g(x)) <= t(x)` for every `x`.
#[derive(Clone, Debug, Serialize)]
pub struct SynthesizedFrame {
    pub frame: Frame,
    pub generator: AlgebraMap,
}

/// `s` ranges over valuations of the target of `g`, `t` over its source.
pub fn synthesize_frame(s_states: &[StateVector], t_states: &[StateVector], g: &AlgebraMap) -> Result<SynthesizedFrame> {
    let r = s_states
        .iter()
        .map(|s| {
            t_states
                .iter()
                .map(|t| (0..g.len()).all(|x| s.values[g.apply(x)] <= t.values[x]))
                .collect()
        })
        .collect();
    let names = |prefix: &str, n: usize| (0..n).map(|i| format!("{prefix}{i}")).collect();
    Ok(SynthesizedFrame {
        frame: Frame::new(names("s", s_states.len()), names("t", t_states.len()), r)?,
        generator: g.clone(),
    })
}

/// `min{t(x) | sRt}` for every `s`, empty minimum 1.
pub fn canonical_meet(frame: &Frame, t_states: &[StateVector], x: usize) -> Vec<UnitRational> {
    (0..frame.s_len())
        .map(|s| {
            (0..frame.t_len())
                .filter(|&t| frame.related(s, t))
                .map(|t| t_states[t].values[x].clone())
                .min()
                .unwrap_or_else(UnitRational::one)
        })
        .collect()
}

/// `max{s(y) | sRt}` for every `t`, empty maximum 0.
pub fn canonical_join(frame: &Frame, s_states: &[StateVector], y: usize) -> Vec<UnitRational> {
    (0..frame.t_len())
        .map(|t| {
            (0..frame.s_len())
                .filter(|&s| frame.related(s, t))
                .map(|s| s_states[s].values[y].clone())
                .max()
                .unwrap_or_else(UnitRational::zero)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualKind {
    /// The structure is certified, so the state set may be incomplete.
    /// An uncertified structure stops at the hypothesis gate instead.
    TruncationCandidate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramResidual {
    /// Which square: `g`, `f`, `G`, `H`, `P` or `F`.
    pub square: String,
    pub element: String,
    pub state: String,
    /// The state's value at the image of the element.
    pub direct: UnitRational,
    /// The canonical operator's value on the embedded element.
    pub canonical: UnitRational,
    pub kind: ResidualKind,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationOutcome {
    pub report: VerificationReport,
    pub frame: Option<SynthesizedFrame>,
    pub residuals: Vec<DiagramResidual>,
}

impl RepresentationOutcome {
    fn unmet(mut report: VerificationReport, reason: String) -> Self {
        report.verdict = Verdict::Inapplicable(format!("hypothesis unmet: {reason}"));
        RepresentationOutcome {
            report,
            frame: None,
            residuals: Vec::new(),
        }
    }

    pub fn verdict(&self) -> &Verdict {
        &self.report.verdict
    }
}

/// Records hypothesis certificates without folding them into the verdict;
/// returns the first failing name.
fn gate(report: &mut VerificationReport, checks: Vec<(String, Verdict)>) -> Option<String> {
    let mut failed = None;
    for (name, verdict) in checks {
        if !verdict.is_certified() && failed.is_none() {
            failed = Some(format!("{name}: {verdict}"));
        }
        report.certificates.push(Certificate { name, verdict });
    }
    failed
}

fn state_hypothesis<A: QEffect + ?Sized>(alg: &A, set: &StateSet, label: &str, need_jp: bool) -> Vec<(String, Verdict)> {
    let mut bad = Vec::new();
    for (i, s) in set.iter().enumerate() {
        if !check_state(alg, &s.values).is_q_state {
            bad.push(format!("{label}{i} is not a q-state"));
        } else if need_jp && check_semi_state(alg, &s.values, SemiLevel::JauchPiron).jauch_piron != Tri::Yes {
            bad.push(format!("{label}{i} is not Jauch-Piron"));
        }
    }
    let reflecting = match check_order_reflecting(alg, &set.members) {
        None => Verdict::Certified,
        Some((a, b)) => Verdict::Violated(vec![format!(
            "no state separates {} from {}",
            alg.element_name(a),
            alg.element_name(b)
        )]),
    };
    let kind = if need_jp { "Jauch-Piron q-states" } else { "q-states" };
    let nonempty = if set.is_empty() {
        Verdict::Violated(vec!["empty".into()])
    } else {
        Verdict::Certified
    };
    vec![
        (format!("{label}: non-empty"), nonempty),
        (format!("{label}: {kind}"), Verdict::from_witnesses(bad)),
        (format!("{label}: order reflecting"), reflecting),
    ]
}

fn state_rows<A: QEffect + ?Sized>(alg: &A, set: &StateSet, label: &str) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = set
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let vals: serde_json::Map<String, serde_json::Value> = (0..alg.size())
                .map(|x| (alg.element_name(x), json!(s.values[x].to_string())))
                .collect();
            json!({ "name": format!("{label}{i}"), "values": vals })
        })
        .collect();
    json!(rows)
}

fn compare_square<A: QEffect + ?Sized>(
    alg_elems: &A,
    square: &str,
    states: &[StateVector],
    label: &str,
    map: &AlgebraMap,
    canonical: impl Fn(usize) -> Vec<UnitRational>,
    out: &mut Vec<DiagramResidual>,
) {
    for x in 0..alg_elems.size() {
        let can = canonical(x);
        for (i, s) in states.iter().enumerate() {
            let direct = &s.values[map.apply(x)];
            if *direct != can[i] {
                out.push(DiagramResidual {
                    square: square.into(),
                    element: alg_elems.element_name(x),
                    state: format!("{label}{i}"),
                    direct: direct.clone(),
                    canonical: can[i].clone(),
                    kind: ResidualKind::TruncationCandidate,
                });
            }
        }
    }
}

fn residual_verdict(residuals: &[DiagramResidual], square: &str) -> Verdict {
    Verdict::from_witnesses(
        residuals
            .iter()
            .filter(|r| r.square == square)
            .map(|r| format!("{} at {}: {} vs canonical {}", r.state, r.element, r.direct, r.canonical))
            .collect(),
    )
}

fn finish(mut report: VerificationReport, frame: SynthesizedFrame, residuals: Vec<DiagramResidual>, extra: serde_json::Value) -> RepresentationOutcome {
    for line in frame.frame.matrix_lines() {
        report.line(line);
    }
    if !residuals.is_empty() {
        report.line("residuals are truncation candidates: the state set may be incomplete");
    }
    report.data = json!({
        "relation": frame.frame.pairs().iter().map(|&(s, t)| format!("{}~{}", frame.frame.s[s], frame.frame.t[t])).collect::<Vec<_>>(),
        "residuals": residuals,
        "details": extra,
    });
    RepresentationOutcome {
        report,
        frame: Some(frame),
        residuals,
    }
}

/// Checks `i(g(x)) = G*(i(x))` over the frame synthesized from `g`.
///
/// `s` are states on `E₁` (the target of `g`), `t` states on `E₂`.
pub fn verify_representation_g<A, B>(e1: &A, e2: &B, pair: &GaloisPair, s: &StateSet, t: &StateSet) -> RepresentationOutcome
where
    A: QEffect + ?Sized,
    B: QEffect + ?Sized,
{
    let mut report = VerificationReport::new("representation of g");
    let mut checked = pair.clone();
    let conn = check_galois_q_connection(e1, e2, &mut checked, &Scope::Exhaustive);
    let mut hyps = vec![("(f, g) is a Galois q-connection".to_string(), conn.verdict())];
    hyps.extend(state_hypothesis(e1, s, "s", true));
    hyps.extend(state_hypothesis(e2, t, "t", false));
    if let Some(reason) = gate(&mut report, hyps) {
        return RepresentationOutcome::unmet(report, reason);
    }

    let composed: Vec<String> = s
        .iter()
        .enumerate()
        .filter(|(_, sv)| {
            let sg = sv.compose(pair.g.table());
            check_semi_state(e2, &sg.values, SemiLevel::JauchPiron).jauch_piron != Tri::Yes
        })
        .map(|(i, _)| format!("s{i}∘g is not a Jauch-Piron q-semi-state"))
        .collect();
    report.certify("s∘g is Jauch-Piron for every s", Verdict::from_witnesses(composed));

    let frame = match synthesize_frame(&s.members, &t.members, &pair.g) {
        Ok(f) => f,
        Err(e) => return RepresentationOutcome::unmet(report, e.to_string()),
    };
    let mut residuals = Vec::new();
    compare_square(e2, "g", &s.members, "s", &pair.g, |x| canonical_meet(&frame.frame, &t.members, x), &mut residuals);
    report.certify("i(g(x)) = G*(i(x))", residual_verdict(&residuals, "g"));
    let extra = json!({ "s": state_rows(e1, s, "s"), "t": state_rows(e2, t, "t") });
    finish(report, frame, residuals, extra)
}

/// Checks both squares `i(g(x)) = G*(i(x))` and `i(f(y)) = P*(i(y))`, and
/// that the frame synthesized from `f̄` is the converse of `R_g`.
pub fn verify_representation_pair<A, B>(e1: &A, e2: &B, pair: &GaloisPair, s: &StateSet, t: &StateSet) -> RepresentationOutcome
where
    A: QEffect + ?Sized,
    B: QEffect + ?Sized,
{
    let mut report = VerificationReport::new("representation of (f, g)");
    let mut checked = pair.clone();
    let conn = check_galois_q_connection(e1, e2, &mut checked, &Scope::Exhaustive);
    let mut hyps = vec![("(f, g) is a Galois q-connection".to_string(), conn.verdict())];
    hyps.extend(state_hypothesis(e1, s, "s", true));
    hyps.extend(state_hypothesis(e2, t, "t", true));
    if let Some(reason) = gate(&mut report, hyps) {
        return RepresentationOutcome::unmet(report, reason);
    }
    let frame = match synthesize_frame(&s.members, &t.members, &pair.g) {
        Ok(f) => f,
        Err(e) => return RepresentationOutcome::unmet(report, e.to_string()),
    };
    let mut residuals = Vec::new();
    compare_square(e2, "g", &s.members, "s", &pair.g, |x| canonical_meet(&frame.frame, &t.members, x), &mut residuals);
    compare_square(e1, "f", &t.members, "t", &pair.f, |y| canonical_join(&frame.frame, &s.members, y), &mut residuals);
    report.certify("i(g(x)) = G*(i(x))", residual_verdict(&residuals, "g"));
    report.certify("i(f(y)) = P*(i(y))", residual_verdict(&residuals, "f"));

    // R_f̄ from the conjugate map, and P* recomputed as '∘H*∘' over it
    let fbar = conjugate(e1, e2, &pair.f);
    let converse = match synthesize_frame(&t.members, &s.members, &fbar) {
        Ok(f) => f,
        Err(e) => return RepresentationOutcome::unmet(report, e.to_string()),
    };
    let same = converse.frame.r == frame.frame.converse().r;
    report.certify(
        "R of f-bar is the converse of R_g",
        if same {
            Verdict::Certified
        } else {
            Verdict::Violated(vec!["relations differ".into()])
        },
    );
    let mut mismatch = Vec::new();
    for y in 0..e1.size() {
        let via_h = canonical_meet(&converse.frame, &s.members, e1.supplement(y));
        let direct = canonical_join(&frame.frame, &s.members, y);
        for (j, (h, p)) in via_h.iter().zip(&direct).enumerate() {
            if h.complement() != *p {
                mismatch.push(format!("t{j} at {}", e1.element_name(y)));
            }
        }
    }
    report.certify("P* agrees with '∘H*∘ over R of f-bar", Verdict::from_witnesses(mismatch));
    let extra = json!({ "s": state_rows(e1, s, "s"), "t": state_rows(e2, t, "t") });
    finish(report, frame, residuals, extra)
}

/// Embeds `(E, G, H)` into `(I^S, G*, H*)` over the time frame `(S, R_G)`.
///
/// Without an explicit state set, MV-algebras use their MV-morphisms and
/// other algebras their Jauch-Piron extreme q-states.
pub fn verify_tense_representation<A>(alg: &A, g: &AlgebraMap, h: &AlgebraMap, states: Option<&StateSet>) -> Result<RepresentationOutcome>
where
    A: QEffect + Sync + ?Sized,
{
    let mut report = VerificationReport::new("representation of (G, H)");
    let structure = check_tense_operators(alg, g.clone(), h.clone(), &Scope::Exhaustive);
    let tense_verdict = structure.report.verdict();

    let owned;
    let set = match states {
        Some(s) => s,
        None => {
            owned = default_states(alg)?;
            &owned
        }
    };
    let mut hyps = vec![("(G, H) are q-tense operators".to_string(), tense_verdict)];
    hyps.extend(state_hypothesis(alg, set, "s", true));
    if let Some(reason) = gate(&mut report, hyps) {
        return Ok(RepresentationOutcome::unmet(report, reason));
    }

    let members = &set.members;
    let frame = synthesize_frame(members, members, g)?;
    let conv = frame.frame.converse();
    let mut residuals = Vec::new();
    compare_square(alg, "G", members, "s", g, |x| canonical_meet(&frame.frame, members, x), &mut residuals);
    compare_square(alg, "H", members, "s", h, |x| canonical_meet(&conv, members, x), &mut residuals);
    compare_square(alg, "P", members, "s", &structure.p, |x| canonical_join(&frame.frame, members, x), &mut residuals);
    compare_square(alg, "F", members, "s", &structure.f, |x| canonical_join(&conv, members, x), &mut residuals);
    for (square, label) in [
        ("G", "i(G(x)) = G*(i(x))"),
        ("H", "i(H(x)) = H*(i(x))"),
        ("P", "i(P(x)) = P*(i(x))"),
        ("F", "i(F(x)) = F*(i(x))"),
    ] {
        report.certify(label, residual_verdict(&residuals, square));
    }
    let extra = json!({ "states": state_rows(alg, set, "s"), "provenance": set.provenance });
    Ok(finish(report, frame, residuals, extra))
}

/// MV-morphisms on MV-algebras, Jauch-Piron extreme q-states otherwise.
pub fn default_states<A: QEffect + Sync + ?Sized>(alg: &A) -> Result<StateSet> {
    if classify(alg).is_mv {
        return enumerate_mv_morphisms(alg);
    }
    let all = enumerate_extreme_q_states(alg)?;
    let jp = all
        .members
        .into_iter()
        .filter(|s| s.flags.jauch_piron == Tri::Yes)
        .collect();
    Ok(StateSet::new(jp, all.provenance))
}

/// `G` and `H` on a product of Łukasiewicz chains induced by a time frame on
/// the coordinates: `G(x)_s = min{x_t | sRt}`, `H` over the converse, empty
/// minimum 1. Fails when a minimum is not a value of the coordinate's chain.
pub fn frame_operators_on_chain_product(alg: &QEffectAlgebra, lengths: &[usize], frame: &Frame) -> Result<(AlgebraMap, AlgebraMap)> {
    let k = lengths.len();
    if !frame.is_time_frame() || frame.s_len() != k {
        return Err(Error::Precondition(format!("need a time frame on {k} coordinates")));
    }
    if lengths.iter().product::<usize>() != alg.size() {
        return Err(Error::Precondition("chain lengths do not match the algebra".into()));
    }
    let decode = |mut x: usize| {
        lengths
            .iter()
            .map(|&n| {
                let c = x % n;
                x /= n;
                BigRational::new(c.into(), (n - 1).into())
            })
            .collect::<Vec<_>>()
    };
    let encode = |vals: &[BigRational]| -> Result<usize> {
        let mut idx = 0;
        for (v, &n) in vals.iter().zip(lengths).rev() {
            let scaled = v * BigRational::from_integer((n - 1).into());
            if !scaled.is_integer() {
                return Err(Error::Precondition(format!("{v} is not a value of the chain with {n} elements")));
            }
            let c: usize = scaled.to_integer().try_into().expect("small index");
            idx = idx * n + c;
        }
        Ok(idx)
    };
    let build = |fr: &Frame| -> Result<AlgebraMap> {
        let table = (0..alg.size())
            .map(|x| {
                let v = decode(x);
                let out: Vec<BigRational> = (0..k)
                    .map(|s| {
                        (0..k)
                            .filter(|&t| fr.related(s, t))
                            .map(|t| v[t].clone())
                            .min()
                            .unwrap_or_else(|| BigRational::from_integer(1.into()))
                    })
                    .collect();
                encode(&out)
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(AlgebraMap::new(table))
    };
    Ok((build(frame)?, build(&frame.converse())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{library, EffectOps};
    use crate::states::Provenance;
    use crate::tense::{canonical_connection, CertifyOptions};

    fn u(n: i64, d: i64) -> UnitRational {
        UnitRational::new(n, d).unwrap()
    }

    #[test]
    fn embeddings_of_small_algebras() {
        let l3 = library::lukasiewicz_chain(3).unwrap();
        let e = build_embedding(&l3, &enumerate_mv_morphisms(&l3).unwrap()).unwrap();
        assert_eq!(e.image, vec![vec![u(0, 1)], vec![u(1, 2)], vec![u(1, 1)]]);
        assert!(e.order_reflecting && e.respects_q_d(&l3));

        let b2 = library::boolean_cube(2).unwrap();
        let e = build_embedding(&b2, &enumerate_mv_morphisms(&b2).unwrap()).unwrap();
        assert!(e.order_reflecting);
        assert!(e.vector(b2.one()).iter().all(|v| v.is_one()));
        let pairs: std::collections::HashSet<Vec<UnitRational>> = e.image.iter().cloned().collect();
        assert_eq!(pairs.len(), 4);
    }

    #[test]
    fn identity_generator_gives_reflexive_frame() {
        let b2 = library::boolean_cube(2).unwrap();
        let s = enumerate_mv_morphisms(&b2).unwrap();
        let f = synthesize_frame(&s.members, &s.members, &AlgebraMap::identity(4)).unwrap();
        assert!((0..2).all(|i| f.frame.related(i, i)));
    }

    #[test]
    fn constant_one_generator_on_l3() {
        // s(1) = 1 <= t(x) only when t is 1 everywhere, which no state is
        let l3 = library::lukasiewicz_chain(3).unwrap();
        let s = enumerate_mv_morphisms(&l3).unwrap();
        let f = synthesize_frame(&s.members, &s.members, &AlgebraMap::constant(3, l3.one())).unwrap();
        assert_eq!(f.frame.pairs(), vec![]);
    }

    #[test]
    fn identity_pair_represents() {
        let b2 = library::boolean_cube(2).unwrap();
        let s = enumerate_mv_morphisms(&b2).unwrap();
        let out = verify_representation_pair(&b2, &b2, &GaloisPair::identity(4), &s, &s);
        assert!(out.verdict().is_certified(), "{}", out.report.to_text());
    }

    #[test]
    fn canonical_pair_round_trip_on_l3_squared() {
        let l3 = library::lukasiewicz_chain(3).unwrap();
        let frame = Frame::from_pairs(2, 2, &[(0, 1), (1, 1)]).unwrap();
        let c = canonical_connection(&l3, &frame, &CertifyOptions::default()).unwrap();
        let (ms, mt) = (c.ms.materialize().unwrap(), c.mt.materialize().unwrap());
        let s = enumerate_mv_morphisms(&ms).unwrap();
        let t = enumerate_mv_morphisms(&mt).unwrap();
        let out = verify_representation_pair(&ms, &mt, &c.pair, &s, &t);
        assert!(out.verdict().is_certified(), "{}", out.report.to_text());
        let g_only = verify_representation_g(&ms, &mt, &c.pair, &s, &t);
        assert!(g_only.verdict().is_certified());
    }

    #[test]
    fn truncated_state_set_is_flagged() {
        let l3 = library::lukasiewicz_chain(3).unwrap();
        let frame = Frame::from_pairs(2, 2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let c = canonical_connection(&l3, &frame, &CertifyOptions::default()).unwrap();
        let (ms, mt) = (c.ms.materialize().unwrap(), c.mt.materialize().unwrap());
        let s = enumerate_mv_morphisms(&ms).unwrap();
        let t = enumerate_mv_morphisms(&mt).unwrap();
        // drop the second coordinate state on the T side; the order gate then fails
        let partial = StateSet::new(vec![t.members[0].clone()], Provenance::User);
        let out = verify_representation_g(&ms, &mt, &c.pair, &s, &partial);
        assert!(matches!(out.verdict(), Verdict::Inapplicable(_)));
    }

    #[test]
    fn boolean_cube_tense_representation() {
        let b3 = library::boolean_cube(3).unwrap();
        let frame = Frame::from_pairs(3, 3, &[(0, 1), (1, 2), (2, 2)]).unwrap();
        let (g, h) = frame_operators_on_chain_product(&b3, &[2, 2, 2], &frame).unwrap();
        let out = verify_tense_representation(&b3, &g, &h, None).unwrap();
        assert!(out.verdict().is_certified(), "{}", out.report.to_text());
        assert!(out.residuals.is_empty());
    }

    #[test]
    fn frame_operators_reject_mixed_chains() {
        let p = library::product_l2_l3();
        let frame = Frame::from_pairs(2, 2, &[(0, 1)]).unwrap();
        assert!(frame_operators_on_chain_product(&p, &[2, 3], &frame).is_err());
        let ok = Frame::from_pairs(2, 2, &[(1, 1)]).unwrap();
        assert!(frame_operators_on_chain_product(&p, &[2, 3], &ok).is_ok());
    }
}
