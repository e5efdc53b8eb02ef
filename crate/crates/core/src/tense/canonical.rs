use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::frame::Frame;
use super::galois::{check_galois_q_connection, conjugate, GaloisPair, QConnectionReport, Scope};
use super::operators::{check_tense_operators, TenseReport};
use crate::algebra::{classify, AlgebraMap, EffectOps, FinitePoset, PowerAlgebra, QEffectAlgebra, DEFAULT_POWER_CAP};
use crate::error::{Error, Result};
use crate::report::Verdict;

/// How the canonical operators are certified.
#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Powers up to this size are checked exhaustively.
    pub exhaustive_limit: usize,
    /// Random vectors drawn otherwise, on top of the characteristic vectors.
    pub samples: usize,
    pub seed: u64,
    pub power_cap: u128,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            exhaustive_limit: 2000,
            samples: 1000,
            seed: 0,
            power_cap: DEFAULT_POWER_CAP,
        }
    }
}

impl CertifyOptions {
    fn sample(&self, power: &PowerAlgebra, rng: &mut ChaCha8Rng) -> Vec<usize> {
        let mut v = power.characteristic_vectors();
        v.extend((0..self.samples).map(|_| rng.gen_range(0..power.size())));
        v.sort_unstable();
        v.dedup();
        v
    }

    fn scope(&self, left: &PowerAlgebra, right: &PowerAlgebra) -> Scope {
        if left.size().max(right.size()) <= self.exhaustive_limit {
            return Scope::Exhaustive;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        Scope::Sampled {
            left: self.sample(left, &mut rng),
            right: self.sample(right, &mut rng),
        }
    }
}

/// Rejects carriers that are not chains.
pub fn require_chain(m: &QEffectAlgebra) -> Result<()> {
    if classify(m).is_linear {
        Ok(())
    } else {
        Err(Error::Precondition("the canonical construction needs a linearly ordered algebra".into()))
    }
}

fn chain_min(m: &QEffectAlgebra, a: usize, b: usize) -> usize {
    if m.leq(a, b) {
        a
    } else {
        b
    }
}

fn chain_max(m: &QEffectAlgebra, a: usize, b: usize) -> usize {
    if m.leq(a, b) {
        b
    } else {
        a
    }
}

/// `G*(p)(s) = min{p(t) | sRt}` from `M^T` to `M^S`, empty minimum 1.
pub fn g_star(ms: &PowerAlgebra, mt: &PowerAlgebra, frame: &Frame) -> AlgebraMap {
    let m = ms.base();
    AlgebraMap::from_fn(mt.size(), |p| {
        let comps: Vec<usize> = (0..frame.s_len())
            .map(|s| {
                (0..frame.t_len())
                    .filter(|&t| frame.related(s, t))
                    .fold(m.one(), |acc, t| chain_min(m, acc, mt.component(p, t)))
            })
            .collect();
        ms.encode(&comps)
    })
}

/// `P*(q)(t) = max{q(s) | sRt}` from `M^S` to `M^T`, empty maximum 0.
pub fn p_star(ms: &PowerAlgebra, mt: &PowerAlgebra, frame: &Frame) -> AlgebraMap {
    let m = ms.base();
    AlgebraMap::from_fn(ms.size(), |q| {
        let comps: Vec<usize> = (0..frame.t_len())
            .map(|t| {
                (0..frame.s_len())
                    .filter(|&s| frame.related(s, t))
                    .fold(m.zero(), |acc, s| chain_max(m, acc, ms.component(q, s)))
            })
            .collect();
        mt.encode(&comps)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalConnection {
    #[serde(skip)]
    pub ms: PowerAlgebra,
    #[serde(skip)]
    pub mt: PowerAlgebra,
    /// `f = P*: M^S → M^T`, `g = G*: M^T → M^S`.
    pub pair: GaloisPair,
    pub report: QConnectionReport,
}

/// The pair `(P*, G*)` induced by `frame` over the chain `m`, certified as a
/// Galois q-connection.
pub fn canonical_connection(m: &QEffectAlgebra, frame: &Frame, opts: &CertifyOptions) -> Result<CanonicalConnection> {
    require_chain(m)?;
    let base = Arc::new(m.clone());
    let ms = PowerAlgebra::with_cap(base.clone(), frame.s_len(), opts.power_cap)?;
    let mt = PowerAlgebra::with_cap(base, frame.t_len(), opts.power_cap)?;
    let mut pair = GaloisPair::new(p_star(&ms, &mt, frame), g_star(&ms, &mt, frame));
    let report = check_galois_q_connection(&ms, &mt, &mut pair, &opts.scope(&ms, &mt));
    Ok(CanonicalConnection { ms, mt, pair, report })
}

/// Properties (i)-(iii) for the relation classes a frame belongs to; `None`
/// when the relation lacks the property.
#[derive(Clone, Debug, Serialize)]
pub struct CorollaryReport {
    pub reflexive: Option<Verdict>,
    pub symmetric: Option<Verdict>,
    pub transitive: Option<Verdict>,
}

impl CorollaryReport {
    pub fn verdict(&self) -> Verdict {
        [&self.reflexive, &self.symmetric, &self.transitive]
            .into_iter()
            .flatten()
            .fold(Verdict::Certified, |acc, v| acc.combine(v.clone()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalTense {
    #[serde(skip)]
    pub power: PowerAlgebra,
    pub frame: Frame,
    pub g: AlgebraMap,
    pub h: AlgebraMap,
    pub p: AlgebraMap,
    pub f: AlgebraMap,
    pub tense: TenseReport,
    /// `P* = '∘H*∘` and `F* = '∘G*∘` as map equalities.
    pub duality: Verdict,
    pub corollary: CorollaryReport,
}

impl CanonicalTense {
    pub fn verdict(&self) -> Verdict {
        self.tense
            .verdict()
            .combine(self.duality.clone())
            .combine(self.corollary.verdict())
    }
}

fn ap(m: &AlgebraMap) -> impl Fn(usize) -> usize + '_ {
    move |x| m.apply(x)
}

fn pointwise_le(power: &PowerAlgebra, xs: &[usize], lhs: impl Fn(usize) -> usize, rhs: impl Fn(usize) -> usize, label: &str) -> Vec<String> {
    xs.iter()
        .filter(|&&x| !power.leq(lhs(x), rhs(x)))
        .take(8)
        .map(|&x| format!("{label} fails at {}", power.element_name(x)))
        .collect()
}

/// `G*`, `H*` over `R` and its converse, with `P*`, `F*` from the join
/// formulas, certified as a tense structure on `M^S`.
pub fn canonical_tense(m: &QEffectAlgebra, frame: &Frame, opts: &CertifyOptions) -> Result<CanonicalTense> {
    if !frame.is_time_frame() {
        return Err(Error::Precondition("canonical tense operators need a time frame".into()));
    }
    require_chain(m)?;
    let power = PowerAlgebra::with_cap(Arc::new(m.clone()), frame.s_len(), opts.power_cap)?;
    let conv = frame.converse();
    let g = g_star(&power, &power, frame);
    let h = g_star(&power, &power, &conv);
    let p = p_star(&power, &power, frame);
    let f = p_star(&power, &power, &conv);
    let scope = opts.scope(&power, &power);
    let structure = check_tense_operators(&power, g.clone(), h.clone(), &scope);

    let mut dual = Vec::new();
    if structure.p != p {
        dual.push("P* differs from '∘H*∘'".to_string());
    }
    if structure.f != f || conjugate(&power, &power, &g) != f {
        dual.push("F* differs from '∘G*∘'".to_string());
    }

    let xs = scope.left(power.size());
    let reflexive = frame.is_reflexive().then(|| {
        let mut w = pointwise_le(&power, &xs, ap(&g), |x| x, "G*(p) <= p");
        w.extend(pointwise_le(&power, &xs, ap(&h), |x| x, "H*(p) <= p"));
        w.extend(pointwise_le(&power, &xs, |x| x, ap(&p), "q <= P*(q)"));
        w.extend(pointwise_le(&power, &xs, |x| x, ap(&f), "q <= F*(q)"));
        Verdict::from_witnesses(w)
    });
    let symmetric = frame.is_symmetric().then(|| {
        let mut w = Vec::new();
        if g != h {
            w.push("G* != H*".to_string());
        }
        if p != f {
            w.push("P* != F*".to_string());
        }
        Verdict::from_witnesses(w)
    });
    let transitive = frame.is_transitive().then(|| {
        let twice = |m: &AlgebraMap| m.compose(m);
        let (gg, hh, pp, ff) = (twice(&g), twice(&h), twice(&p), twice(&f));
        let mut w = pointwise_le(&power, &xs, ap(&g), ap(&gg), "G*(p) <= G*G*(p)");
        w.extend(pointwise_le(&power, &xs, ap(&h), ap(&hh), "H*(p) <= H*H*(p)"));
        w.extend(pointwise_le(&power, &xs, ap(&pp), ap(&p), "P*P*(q) <= P*(q)"));
        w.extend(pointwise_le(&power, &xs, ap(&ff), ap(&f), "F*F*(q) <= F*(q)"));
        Verdict::from_witnesses(w)
    });

    Ok(CanonicalTense {
        power,
        frame: frame.clone(),
        g,
        h,
        p,
        f,
        tense: structure.report,
        duality: Verdict::from_witnesses(dual),
        corollary: CorollaryReport {
            reflexive,
            symmetric,
            transitive,
        },
    })
}
