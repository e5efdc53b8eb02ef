use serde::Serialize;

use super::order::{join, meet};
use super::EffectOps;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LatticeWitness {
    /// The pair has no meet.
    NoMeet(String, String),
    /// The pair has no join.
    NoJoin(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_lattice: bool,
    pub is_mv: bool,
    pub is_linear: bool,
    /// First pair, in index order, without a meet or join.
    pub lattice_witness: Option<LatticeWitness>,
    /// A pair with `x ∧ y = 0` but `x ≰ y'`.
    pub mv_witness: Option<(String, String)>,
}

/// Lattice, MV and linearity flags for an effect algebra.
pub fn classify<A: EffectOps + ?Sized>(alg: &A) -> Classification {
    let n = alg.size();
    let name = |x: usize| alg.element_name(x);
    let is_linear = (0..n).all(|x| (0..n).all(|y| alg.leq(x, y) || alg.leq(y, x)));

    let mut lattice_witness = None;
    let mut meets = vec![None; n * n];
    'outer: for x in 0..n {
        for y in x..n {
            let m = meet(alg, x, y);
            if m.is_none() {
                lattice_witness = Some(LatticeWitness::NoMeet(name(x), name(y)));
                break 'outer;
            }
            if join(alg, x, y).is_none() {
                lattice_witness = Some(LatticeWitness::NoJoin(name(x), name(y)));
                break 'outer;
            }
            meets[x * n + y] = m;
            meets[y * n + x] = m;
        }
    }
    let is_lattice = lattice_witness.is_none();

    let mut mv_witness = None;
    if is_lattice {
        'mv: for x in 0..n {
            for y in 0..n {
                if meets[x * n + y] == Some(alg.zero()) && !alg.leq(x, alg.supplement(y)) {
                    mv_witness = Some((name(x), name(y)));
                    break 'mv;
                }
            }
        }
    }
    Classification {
        is_lattice,
        is_mv: is_lattice && mv_witness.is_none(),
        is_linear,
        lattice_witness,
        mv_witness,
    }
}

/// `x ⊕ y = x + (y ∧ x')` on a lattice effect algebra.
pub fn lattice_oplus<A: EffectOps + ?Sized>(alg: &A, x: usize, y: usize) -> Option<usize> {
    let m = meet(alg, y, alg.supplement(x))?;
    alg.sum(x, m)
}

/// `q(x) = x ⊕ x` and `d(x) = (x' ⊕ x')'`; `None` when the order is not a
/// lattice.
pub fn lattice_q_maps<A: EffectOps + ?Sized>(alg: &A) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = alg.size();
    let mut q = Vec::with_capacity(n);
    let mut d = Vec::with_capacity(n);
    for x in 0..n {
        q.push(lattice_oplus(alg, x, x)?);
        let xs = alg.supplement(x);
        d.push(alg.supplement(lattice_oplus(alg, xs, xs)?));
    }
    Some((q, d))
}
