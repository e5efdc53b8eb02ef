use serde::Serialize;

use super::galois::{check_q_transport, conjugate, GaloisPair, Scope};
use crate::algebra::{AlgebraMap, QEffect};
use crate::error::{Error, Result};
use crate::rational::{DyadicRational, UnitRational};
use crate::states::check_state;
use crate::terms::threshold_term;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    /// `s(g(x)) <= t(x)` for all `x ∈ E₂`.
    pub via_g: bool,
    /// `s(y) <= t(f(y))` for all `y ∈ E₁`.
    pub via_f: bool,
    /// `t(z) <= s(ḡ(z))` and `t(f̄(w)) <= s(w)`, when `s` and `t` are states.
    pub via_bars: Option<(bool, bool)>,
}

impl TransferReport {
    pub fn equivalent(&self) -> bool {
        self.via_g == self.via_f && self.via_bars.map_or(true, |(a, b)| a == self.via_g && b == self.via_g)
    }
}

/// Evaluates both sides of the transfer equivalence for valuations
/// `s: E₁ → [0,1]` and `t: E₂ → [0,1]`.
pub fn verify_rgrf_transfer<A, B>(e1: &A, e2: &B, pair: &GaloisPair, s: &[UnitRational], t: &[UnitRational]) -> Result<TransferReport>
where
    A: QEffect + ?Sized,
    B: QEffect + ?Sized,
{
    if s.len() != e1.size() || t.len() != e2.size() {
        return Err(Error::MapLength {
            expected: e1.size(),
            found: s.len(),
        });
    }
    let monotone = |alg: &dyn Fn(usize, usize) -> bool, v: &[UnitRational]| {
        (0..v.len()).all(|a| (0..v.len()).all(|b| !alg(a, b) || v[a] <= v[b]))
    };
    if !monotone(&|a, b| e1.leq(a, b), s) || !monotone(&|a, b| e2.leq(a, b), t) {
        return Err(Error::Precondition("s and t must be order preserving".into()));
    }
    let (f, g) = (&pair.f, &pair.g);
    let via_g = (0..e2.size()).all(|x| s[g.apply(x)] <= t[x]);
    let via_f = (0..e1.size()).all(|y| s[y] <= t[f.apply(y)]);
    let via_bars = (check_state(e1, s).is_state && check_state(e2, t).is_state).then(|| {
        let gbar = conjugate(e2, e1, g);
        let fbar = conjugate(e1, e2, f);
        (
            (0..e2.size()).all(|z| t[z] <= s[gbar.apply(z)]),
            (0..e1.size()).all(|w| t[fbar.apply(w)] <= s[w]),
        )
    });
    Ok(TransferReport { via_g, via_f, via_bars })
}

/// `t_r(f(x)) = f(t_r(x))` for every `x`. Requires (GQ1) for `f`.
pub fn verify_term_commutation<A, B>(e1: &A, e2: &B, f: &AlgebraMap, r: &DyadicRational) -> Result<bool>
where
    A: QEffect + ?Sized,
    B: QEffect + ?Sized,
{
    let (gq1, _) = check_q_transport(e1, e2, f, &AlgebraMap::identity(e1.size()), &Scope::Sampled {
        left: (0..e1.size()).collect(),
        right: Vec::new(),
    });
    if !gq1.is_certified() {
        return Err(Error::Precondition(format!("map does not commute with q and d: {gq1}")));
    }
    let term = threshold_term(r);
    Ok((0..e1.size()).all(|x| term.eval(e2, f.apply(x)) == f.apply(term.eval(e1, x))))
}
