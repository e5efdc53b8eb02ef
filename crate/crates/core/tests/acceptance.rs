//! Acceptance criteria 1-7. Prints one PASS/FAIL line per criterion and
//! exits nonzero on any failure other than the documented criterion-1
//! (Q1)-(Q5) clause.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use clap::Parser;
use num::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qtense::algebra::{classify, library, AlgebraMap, EffectOps, FinitePoset, LatticeWitness, PowerAlgebra, QEffect, QEffectAlgebra};
use qtense::cli::{run, Cli};
use qtense::representation::{enumerate_mv_morphisms, frame_operators_on_chain_product, verify_tense_representation};
use qtense::states::{
    check_semi_state, check_state, compare_by_unit_sets, enumerate_extreme_q_states, meet_semistates,
    verify_infimum_decomposition, verify_jp_implies_strong, verify_superadditivity, Provenance, SemiLevel, StateSet,
    StateVector, Tri,
};
use qtense::tense::{
    canonical_connection, canonical_tense, check_galois_connection, powerset_galois, right_adjoint, CertifyOptions,
    Frame, PowersetPoset, Scope,
};
use qtense::rational::UnitRational;
use qtense::terms::verify_threshold;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn u(n: i64, d: i64) -> UnitRational {
    UnitRational::new(n, d).unwrap()
}

fn fig1_path() -> String {
    format!("{}/data/fig1.alg", env!("CARGO_MANIFEST_DIR"))
}

// ---------------------------------------------------------------- criterion 1

/// The (Q1)-(Q5) violations of the published table, as recorded in the
/// decisions ledger.
const FIG1_KNOWN: [&str; 4] = [
    "(Q3) x <= y but d(x) > d(y) at (a, 5b)",
    "(Q3) x <= y but d(x) > d(y) at (c, 5b)",
    "(Q5) d(z)=a not below x·y=4b at (a, 5b, 5b)",
    "(Q5) d(z)=c not below x·y=4b at (c, 5b, 5b)",
];

/// Returns (q-clause line, rest).
fn criterion_1() -> (String, Outcome) {
    let start = Instant::now();
    let cli = Cli::try_parse_from(["qtense", "validate", &fig1_path()]).unwrap();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => return ("not evaluated".into(), Err(e.to_string())),
    };
    let report = &outcome.reports[0];
    let cert = |name: &str| report.certificates.iter().find(|c| c.name == name).map(|c| c.verdict.clone());
    let q_clause = match cert("(Q1)-(Q5)") {
        Some(qtense::report::Verdict::Violated(w)) => {
            let got: BTreeSet<&str> = w.iter().map(String::as_str).collect();
            let want: BTreeSet<&str> = FIG1_KNOWN.into_iter().collect();
            if got == want {
                format!("FAIL (documented): the published q/d table violates (Q3)/(Q5) at exactly {} known witnesses", w.len())
            } else {
                return ("unexpected".into(), Err(format!("(Q1)-(Q5) witnesses differ from the documented set: {w:?}")));
            }
        }
        other => return ("unexpected".into(), Err(format!("(Q1)-(Q5) verdict {other:?}, expected the documented violations"))),
    };
    let rest = (|| {
        ensure(cert("(E1)-(E4)").is_some_and(|v| v.is_certified()), || "(E1)-(E4) not certified".into())?;
        ensure(outcome.exit_code() == 1, || "validate should exit 1".into())?;
        let alg = library::fig1();
        // columns x: q(x), d(x) transcribed from the example table
        let table = [
            ("0", "0", "0"),
            ("a", "a", "a"),
            ("b", "2b", "0"),
            ("c", "c", "c"),
            ("a+b", "a+b", "a+b"),
            ("2b", "4b", "0"),
            ("3b", "1", "0"),
            ("4b", "1", "2b"),
            ("5b", "1", "4b"),
            ("b+c", "b+c", "b+c"),
            ("1", "1", "1"),
        ];
        let parsed = qtense::io::parse_algebra(&std::fs::read_to_string(fig1_path()).unwrap())
            .and_then(|d| d.load())
            .map_err(|e| e.to_string())?
            .0;
        ensure(parsed == alg, || "data/fig1.alg differs from the library algebra".into())?;
        for (x, q, d) in table {
            let i = |s: &str| parsed.index_of(s).unwrap();
            ensure(parsed.q(i(x)) == i(q) && parsed.d(i(x)) == i(d), || format!("column {x} differs"))?;
        }
        let c = classify(&parsed);
        ensure(!c.is_lattice, || "fig1 classified as a lattice".into())?;
        ensure(c.lattice_witness == Some(LatticeWitness::NoJoin("a".into(), "b".into())), || format!("lattice witness {:?}", c.lattice_witness))?;
        let t = within(start, Duration::from_secs(1), "criterion 1")?;
        Ok(format!("(E1)-(E4) certified, 11 q/d columns match, (a, b) has no join, {t:.2?}"))
    })();
    (q_clause, rest)
}

// ---------------------------------------------------------------- criterion 2

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = verify_threshold(8).map_err(|e| e.to_string())?;
    ensure(r.pairs_checked == 255 * 257, || format!("{} pairs checked", r.pairs_checked))?;
    ensure(r.passed(), || format!("{} failures, {} proposition failures", r.failures.len(), r.proposition_failures.len()))?;
    let t = within(start, Duration::from_secs(10), "criterion 2")?;
    Ok(format!("{} (r, x) pairs, zero failures, {t:.2?}", r.pairs_checked))
}

// ---------------------------------------------------------------- criteria 3, 6

/// 50 seeded time frames on at most 4 points. Every fourth frame is closed
/// under reflexivity, symmetry or transitivity so each corollary item is hit.
fn seeded_frames() -> Vec<Frame> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..50)
        .map(|i| {
            let n = rng.gen_range(1..=4);
            let density = rng.gen_range(0.2..0.8);
            let mut r: Vec<Vec<bool>> = Frame::random_time(&mut rng, n, density).unwrap().r;
            match i % 4 {
                0 => (0..n).for_each(|s| r[s][s] = true),
                1 => {
                    for s in 0..n {
                        for t in 0..n {
                            r[s][t] |= r[t][s];
                        }
                    }
                }
                2 => {
                    for k in 0..n {
                        for s in 0..n {
                            for t in 0..n {
                                r[s][t] |= r[s][k] && r[k][t];
                            }
                        }
                    }
                }
                _ => {}
            }
            Frame::time(r).unwrap()
        })
        .collect()
}

/// `G*(p)(s) = min{p(t) | sRt}` computed on component vectors.
fn g_star_oracle(power: &PowerAlgebra, frame: &Frame, p: usize) -> usize {
    let m = power.base();
    let comps: Vec<usize> = (0..frame.s_len())
        .map(|s| {
            (0..frame.t_len())
                .filter(|&t| frame.r[s][t])
                .map(|t| power.component(p, t))
                .fold(m.one(), |acc, c| if m.leq(c, acc) { c } else { acc })
        })
        .collect();
    power.encode(&comps)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let chains = [library::lukasiewicz_chain(3).unwrap(), library::lukasiewicz_chain(5).unwrap()];
    let opts = CertifyOptions::default();
    let (mut runs, mut refl, mut sym, mut trans) = (0, 0, 0, 0);
    for (i, frame) in seeded_frames().iter().enumerate() {
        for m in &chains {
            let t = canonical_tense(m, frame, &opts).map_err(|e| e.to_string())?;
            ensure(!t.tense.sampled, || format!("frame {i}: sampled although |M|^|S| <= 2000"))?;
            ensure(t.tense.pg.is_q_connection() && t.tense.fh.is_q_connection(), || format!("frame {i}: not Galois q-connections"))?;
            ensure(t.tense.axioms_hold(), || format!("frame {i}: (T1)-(T5) fail: {:?}", t.tense.axioms))?;
            ensure(t.verdict().is_certified(), || format!("frame {i}: verdict {}", t.verdict()))?;
            ensure((0..t.power.size()).all(|p| t.g.apply(p) == g_star_oracle(&t.power, frame, p)), || format!("frame {i}: G* differs from the oracle"))?;
            let conv = frame.converse();
            ensure((0..t.power.size()).all(|p| t.h.apply(p) == g_star_oracle(&t.power, &conv, p)), || format!("frame {i}: H* differs from the oracle"))?;
            for (holds, item, count) in [
                (frame.is_reflexive(), &t.corollary.reflexive, &mut refl),
                (frame.is_symmetric(), &t.corollary.symmetric, &mut sym),
                (frame.is_transitive(), &t.corollary.transitive, &mut trans),
            ] {
                ensure(holds == item.is_some(), || format!("frame {i}: corollary item evaluated inconsistently"))?;
                if let Some(v) = item {
                    ensure(v.is_certified(), || format!("frame {i}: corollary item {v}"))?;
                    *count += 1;
                }
            }
            runs += 1;
        }
    }
    ensure(refl > 0 && sym > 0 && trans > 0, || "some corollary item never exercised".into())?;
    let t = within(start, Duration::from_secs(60), "criterion 3")?;
    Ok(format!("{runs} constructions over Ł3/Ł5 exhaustive, corollary (i) x{refl} (ii) x{sym} (iii) x{trans}, {t:.2?}"))
}

fn coordinate_states(power: &PowerAlgebra) -> StateSet {
    let scale = (power.base().size() - 1) as i64;
    let members = (0..power.arity())
        .map(|i| StateVector::new((0..power.size()).map(|x| u(power.component(x, i) as i64, scale)).collect()))
        .collect();
    StateSet::new(members, Provenance::Morphisms)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let chains = [library::lukasiewicz_chain(3).unwrap(), library::lukasiewicz_chain(5).unwrap()];
    // the coordinate states are exactly the enumerated MV-morphisms
    for m in &chains {
        for k in 1..=3 {
            let p = qtense::algebra::direct_power(m, k).unwrap();
            let listed: BTreeSet<Vec<UnitRational>> = enumerate_mv_morphisms(&p.materialize().unwrap()).unwrap().members.into_iter().map(|s| s.values).collect();
            let coords: BTreeSet<Vec<UnitRational>> = coordinate_states(&p).members.into_iter().map(|s| s.values).collect();
            ensure(listed == coords, || format!("MV-morphisms of {}^{k} are not the coordinates", m.size()))?;
        }
    }
    let (mut instances, mut constant, mut superadditive) = (0, 0, 0);
    for (i, frame) in seeded_frames().iter().enumerate() {
        for m in &chains {
            let c = canonical_connection(m, frame, &CertifyOptions::default()).map_err(|e| e.to_string())?;
            let s_states = coordinate_states(&c.ms);
            let t_states = coordinate_states(&c.mt);
            for s in s_states.iter() {
                let t = s.compose(c.pair.g.table());
                let jp = check_semi_state(&c.mt, &t.values, SemiLevel::JauchPiron);
                ensure(jp.q_semi && jp.jauch_piron == Tri::Yes, || format!("frame {i}: s∘G* not Jauch-Piron: {:?}", jp.violations))?;
                let rep = verify_infimum_decomposition(&c.mt, &t_states, &t);
                ensure(rep.verdict.is_certified(), || format!("frame {i}: t != meet S_t: {}", rep.verdict))?;
                if !t.values[c.mt.zero()].is_zero() {
                    ensure(t.values.iter().all(|v| v.is_one()), || format!("frame {i}: t(0) != 0 but t is not constant 1"))?;
                    ensure(rep.supporting.is_empty(), || format!("frame {i}: S_t nonempty for constant 1"))?;
                    constant += 1;
                } else {
                    let w = verify_superadditivity(&c.mt, &t).map_err(|e| e.to_string())?;
                    ensure(w.is_none(), || format!("frame {i}: superadditivity fails at {w:?}"))?;
                    superadditive += 1;
                }
                instances += 1;
            }
        }
    }
    ensure(constant > 0 && superadditive > 0, || "a corollary branch was never exercised".into())?;
    let t = within(start, Duration::from_secs(60), "criterion 6")?;
    Ok(format!("{instances} vectors s∘G*: all Jauch-Piron with t = meet S_t; constant-1 x{constant}, superadditive x{superadditive}, {t:.2?}"))
}

// ---------------------------------------------------------------- criterion 4

/// Which coordinate a 0/1 or chain-valued MV-morphism reads: the index `i`
/// whose unit vector (1 in slot `i`, 0 elsewhere) it sends to 1.
fn coordinate_of(alg: &QEffectAlgebra, lengths: &[usize], s: &StateVector) -> Option<usize> {
    (0..lengths.len()).find(|&i| {
        let name = format!(
            "[{}]",
            (0..lengths.len()).map(|j| if j == i { "1" } else { "0" }).collect::<Vec<_>>().join("|")
        );
        alg.index_of(&name).is_ok_and(|x| s.values[x].is_one())
    })
}

fn represent_round_trip(lengths: &[usize], frame: &Frame) -> std::result::Result<(), String> {
    let alg = library::chain_product(lengths).unwrap();
    let (g, h) = frame_operators_on_chain_product(&alg, lengths, frame).map_err(|e| e.to_string())?;
    let out = verify_tense_representation(&alg, &g, &h, None).map_err(|e| e.to_string())?;
    ensure(out.report.verdict.is_certified(), || format!("{lengths:?} {:?}: {}", frame.pairs(), out.report.to_text()))?;
    ensure(out.residuals.is_empty(), || "nonzero residual".into())?;
    let synth = out.frame.ok_or("no synthesized frame")?;
    let states = enumerate_mv_morphisms(&alg).map_err(|e| e.to_string())?;
    let coord: Vec<usize> = states
        .iter()
        .map(|s| coordinate_of(&alg, lengths, s).ok_or("state reads no coordinate"))
        .collect::<std::result::Result<_, _>>()?;
    for a in 0..states.len() {
        for b in 0..states.len() {
            ensure(synth.frame.r[a][b] == frame.r[coord[a]][coord[b]], || {
                format!("{lengths:?}: R_G differs from the generating relation at ({}, {})", coord[a], coord[b])
            })?;
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    // every relation on three coordinates
    for mask in 0u32..512 {
        let r = (0..3).map(|s| (0..3).map(|t| mask >> (3 * s + t) & 1 == 1).collect()).collect();
        represent_round_trip(&[3, 3, 3], &Frame::time(r).unwrap())?;
    }
    represent_round_trip(&[2, 3], &Frame::from_pairs(2, 2, &[(1, 1)]).unwrap())?;
    represent_round_trip(&[2, 3], &Frame::from_pairs(2, 2, &[]).unwrap())?;
    let t = within(start, Duration::from_secs(30), "criterion 4")?;
    Ok(format!("Ł3^3 under all 512 relations and Ł2×Ł3: exact squares, R_G = R0 on coordinates, {t:.2?}"))
}

// ---------------------------------------------------------------- criterion 5

const GRID: i64 = 1024;
const TOL: i64 = 2;

/// All valuations on the 1/1024 grid satisfying the state and q-state laws
/// up to `TOL` grid units, by depth-first search in index order.
fn grid_search<A: QEffect>(alg: &A) -> Vec<Vec<i64>> {
    fn consistent<A: QEffect>(alg: &A, v: &[Option<i64>], x: usize) -> bool {
        let n = alg.size();
        let get = |y: usize| v[y];
        for y in 0..n {
            if let (Some(a), Some(b)) = (get(x), get(y)) {
                if alg.leq(x, y) && a > b + TOL || alg.leq(y, x) && b > a + TOL {
                    return false;
                }
            }
            for (a, b) in [(x, y), (y, x)] {
                if let Some(z) = alg.sum(a, b) {
                    if let (Some(va), Some(vb), Some(vz)) = (get(a), get(b), get(z)) {
                        if (va + vb - vz).abs() > TOL {
                            return false;
                        }
                    }
                }
            }
        }
        for y in 0..n {
            if let Some(vy) = get(y) {
                if let Some(vq) = get(alg.q(y)) {
                    if (vq - (2 * vy).min(GRID)).abs() > TOL {
                        return false;
                    }
                }
                if let Some(vd) = get(alg.d(y)) {
                    if (vd - (2 * vy - GRID).max(0)).abs() > TOL {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go<A: QEffect>(alg: &A, v: &mut Vec<Option<i64>>, x: usize, out: &mut Vec<Vec<i64>>) {
        if x == v.len() {
            out.push(v.iter().map(|a| a.unwrap()).collect());
            return;
        }
        let s = alg.supplement(x);
        let choices: Vec<i64> = if x == alg.zero() {
            vec![0]
        } else if x == alg.one() {
            vec![GRID]
        } else if s < x {
            vec![GRID - v[s].unwrap()]
        } else {
            (0..=GRID).collect()
        };
        for c in choices {
            v[x] = Some(c);
            if consistent(alg, v, x) {
                go(alg, v, x + 1, out);
            }
        }
        v[x] = None;
    }
    let mut out = Vec::new();
    go(alg, &mut vec![None; alg.size()], 0, &mut out);
    out
}

/// The fraction with denominator at most 32 closest to `v / 1024`.
fn polish(v: i64) -> UnitRational {
    (1..=32i64)
        .map(|q| {
            let p = (v * q + GRID / 2).div_euclid(GRID).clamp(0, q);
            let err = (p * GRID - v * q).abs() as f64 / (q * GRID) as f64;
            (err, q, p)
        })
        .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)))
        .map(|(_, q, p)| UnitRational::from_big(BigRational::new(p.into(), q.into())).unwrap())
        .unwrap()
}

fn oracle_q_states<A: QEffect>(alg: &A) -> BTreeSet<Vec<UnitRational>> {
    grid_search(alg)
        .into_iter()
        .map(|v| v.into_iter().map(polish).collect::<Vec<_>>())
        .filter(|vals| check_state(alg, vals).is_q_state)
        .collect()
}

fn small_bundled() -> Vec<(String, QEffectAlgebra)> {
    library::bundled_examples().into_iter().filter(|(_, a)| a.size() <= 6).collect()
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut pools: Vec<(QEffectAlgebra, Vec<StateVector>)> = Vec::new();
    for (name, alg) in small_bundled() {
        let lp = enumerate_extreme_q_states(&alg).map_err(|e| e.to_string())?;
        let lp_set: BTreeSet<Vec<UnitRational>> = lp.iter().map(|s| s.values.clone()).collect();
        let oracle = oracle_q_states(&alg);
        // the oracle finds every q-state with denominators <= 32; equality
        // with the LP output also shows the q-state set is finite here
        ensure(oracle == lp_set, || format!("{name}: LP {lp_set:?} vs oracle {oracle:?}"))?;
        lines.push(format!("{name}:{}", lp.len()));
        if !lp.is_empty() {
            pools.push((alg, lp.members));
        }
    }

    // property cases: a random algebra, two random nonempty subsets of its
    // extreme q-states, their meets t and s
    let mut runner = TestRunner::new(Config { cases: 256, failure_persistence: None, ..Config::default() });
    let strategy = (0..pools.len(), any::<u64>(), any::<u64>());
    let result = runner.run(&strategy, |(k, m1, m2)| {
        let (alg, pool) = &pools[k];
        let pick = |mask: u64| -> Vec<StateVector> {
            let chosen: Vec<StateVector> = pool.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, s)| s.clone()).collect();
            if chosen.is_empty() { vec![pool[(mask as usize) % pool.len()].clone()] } else { chosen }
        };
        let (a, b) = (pick(m1), pick(m2));
        let t = meet_semistates(alg.size(), &a).vector;
        let s = meet_semistates(alg.size(), &b).vector;
        for v in [&t, &s] {
            let rep = check_semi_state(alg, &v.values, SemiLevel::JauchPiron);
            prop_assert!(rep.q_semi, "meet is not a q-semi-state: {:?}", rep.violations);
        }
        let c = compare_by_unit_sets(alg, &t, &s).unwrap();
        prop_assert_eq!(c.pointwise, c.unit_implication);
        let c = compare_by_unit_sets(alg, &s, &t).unwrap();
        prop_assert_eq!(c.pointwise, c.unit_implication);
        let jp: Vec<StateVector> = [t, s]
            .into_iter()
            .filter(|v| check_semi_state(alg, &v.values, SemiLevel::JauchPiron).jauch_piron == Tri::Yes)
            .collect();
        prop_assert!(verify_jp_implies_strong(alg, &jp).unwrap());
        Ok(())
    });
    result.map_err(|e| e.to_string())?;
    let t = start.elapsed();
    Ok(format!("LP = grid oracle on {} algebras ({}); 256 property cases clean, {t:.2?}", lines.len(), lines.join(" ")))
}

// ---------------------------------------------------------------- criterion 7

fn random_map(rng: &mut ChaCha8Rng, from: usize, to: usize) -> AlgebraMap {
    AlgebraMap::new((0..from).map(|_| rng.gen_range(0..to)).collect())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let posets: Vec<QEffectAlgebra> = library::bundled_examples().into_iter().map(|(_, a)| a).filter(|a| a.size() <= 16).collect();
    let (mut cases, mut yes, mut no) = (0, 0, 0);
    let mut record = |agree: bool, connection: bool, what: &str| -> std::result::Result<(), String> {
        ensure(agree, || format!("conditions disagree on {what}"))?;
        cases += 1;
        if connection { yes += 1 } else { no += 1 }
        Ok(())
    };
    for i in 0..600 {
        match i % 4 {
            // unrelated random maps
            0 => {
                let (a, b) = (&posets[rng.gen_range(0..posets.len())], &posets[rng.gen_range(0..posets.len())]);
                let (f, g) = (random_map(&mut rng, a.size(), b.size()), random_map(&mut rng, b.size(), a.size()));
                let r = check_galois_connection(a, b, &f, &g, &Scope::Exhaustive);
                record(r.agree(), r.is_connection(), "random maps")?;
            }
            // f with its right adjoint when it has one, then a one-point perturbation of g
            1 => {
                let a = &posets[rng.gen_range(0..posets.len())];
                let b = &posets[rng.gen_range(0..posets.len())];
                let f = (0..200)
                    .map(|_| random_map(&mut rng, a.size(), b.size()))
                    .find_map(|f| right_adjoint(a, b, &f).map(|g| (f, g)));
                let (f, g) = match f {
                    Some(pair) => pair,
                    None => {
                        // the constant-bottom map always has a right adjoint
                        let f = AlgebraMap::constant(a.size(), b.zero());
                        let g = right_adjoint(a, b, &f).expect("constant bottom is residuated");
                        (f, g)
                    }
                };
                let r = check_galois_connection(a, b, &f, &g, &Scope::Exhaustive);
                ensure(r.is_connection(), || "f with its right adjoint is not a connection".into())?;
                record(r.agree(), true, "adjoint pair")?;
                let mut table = g.table().to_vec();
                let y = rng.gen_range(0..table.len());
                table[y] = rng.gen_range(0..a.size());
                let r = check_galois_connection(a, b, &f, &AlgebraMap::new(table), &Scope::Exhaustive);
                record(r.agree(), r.is_connection(), "perturbed adjoint pair")?;
            }
            // powerset pairs from random relations
            2 => {
                let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
                let rel: Vec<Vec<bool>> = (0..m).map(|_| (0..n).map(|_| rng.gen_bool(0.5)).collect()).collect();
                let (pa, pb) = (PowersetPoset::with_size(m).unwrap(), PowersetPoset::with_size(n).unwrap());
                let (pair, r) = powerset_galois(&pa, &pb, &rel);
                ensure(r.is_connection(), || format!("powerset pair for {rel:?} is not a connection"))?;
                record(r.agree(), true, "powerset pair")?;
                let swapped = check_galois_connection(&pa, &pb, &pair.f, &random_map(&mut rng, pb.size(), pa.size()), &Scope::Exhaustive);
                record(swapped.agree(), swapped.is_connection(), "powerset f with random g")?;
            }
            // canonical pairs from random frames over Ł3
            _ => {
                let n = rng.gen_range(1..=3);
                let frame = Frame::random_time(&mut rng, n, 0.5).unwrap();
                let l3 = library::lukasiewicz_chain(3).unwrap();
                let c = canonical_connection(&l3, &frame, &CertifyOptions::default()).unwrap();
                let r = check_galois_connection(&c.ms, &c.mt, &c.pair.f, &c.pair.g, &Scope::Exhaustive);
                record(r.agree(), r.is_connection(), "canonical pair")?;
                let r = check_galois_connection(&c.ms, &c.mt, &c.pair.g, &c.pair.f, &Scope::Exhaustive);
                record(r.agree(), r.is_connection(), "canonical pair swapped")?;
            }
        }
    }
    ensure(cases >= 500 && yes >= 100 && no >= 100, || format!("{cases} cases, {yes} connections, {no} non-connections"))?;
    Ok(format!("{cases} pairs ({yes} connections, {no} non-connections), zero disagreements, {:.2?}", start.elapsed()))
}

fn main() {
    let mut failed = false;
    let mut print = |label: &str, outcome: Outcome| match outcome {
        Ok(msg) => println!("criterion {label}: PASS - {msg}"),
        Err(msg) => {
            failed = true;
            println!("criterion {label}: FAIL - {msg}");
        }
    };
    let (q_clause, rest) = criterion_1();
    println!("criterion 1 (Q1)-(Q5) clause: {q_clause}");
    if q_clause == "unexpected" || q_clause == "not evaluated" {
        print("1 (Q1)-(Q5) clause", Err("violations differ from the documented ones".into()));
    }
    print("1 (remaining clauses)", rest);
    print("2", criterion_2());
    print("3", criterion_3());
    print("4", criterion_4());
    print("5", criterion_5());
    print("6", criterion_6());
    print("7", criterion_7());
    if failed {
        std::process::exit(1);
    }
}
