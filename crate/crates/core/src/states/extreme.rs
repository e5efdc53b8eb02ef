use num::{BigRational, One, Zero};
use rayon::prelude::*;

use super::polytope::{LinearSystem, Row, DEFAULT_BASIS_CAP};
use super::{check_state, Provenance, StateSet, StateVector};
use crate::algebra::QEffect;
use crate::error::{Error, Result};
use crate::rational::UnitRational;

/// Default carrier cap for [`enumerate_extreme_q_states`].
pub const DEFAULT_STATE_CAP: usize = 16;

/// High/low assignments: `high[x]` means `s(x) >= 1/2`, low means `s(x) <= 1/2`.
///
/// Forced: 0 low, 1 high, the high set is an up-set, one of `x, x'` is high,
/// `x` high forces `q(x)` high (value 1), `x` low forces `d(x)` low (value 0).
fn branch_signatures<A: QEffect + ?Sized>(alg: &A) -> Vec<Vec<bool>> {
    let n = alg.size();
    let mut out = Vec::new();
    let mut assign: Vec<Option<bool>> = vec![None; n];
    fn consistent<A: QEffect + ?Sized>(alg: &A, assign: &[Option<bool>], x: usize) -> bool {
        let hx = assign[x].expect("assigned");
        for y in 0..alg.size() {
            let Some(hy) = assign[y] else { continue };
            if hx && !hy && alg.leq(x, y) {
                return false;
            }
            if hy && !hx && alg.leq(y, x) {
                return false;
            }
        }
        if !hx && assign[alg.supplement(x)] == Some(false) {
            return false;
        }
        for y in 0..alg.size() {
            let Some(hy) = assign[y] else { continue };
            if hy && alg.q(y) == x && !hx {
                return false;
            }
            if !hy && alg.d(y) == x && hx {
                return false;
            }
        }
        if hx {
            if assign[alg.q(x)] == Some(false) {
                return false;
            }
        } else if assign[alg.d(x)] == Some(true) {
            return false;
        }
        true
    }
    fn go<A: QEffect + ?Sized>(alg: &A, assign: &mut Vec<Option<bool>>, x: usize, out: &mut Vec<Vec<bool>>) {
        if x == assign.len() {
            out.push(assign.iter().map(|h| h.expect("complete")).collect());
            return;
        }
        let forced = if x == alg.zero() {
            Some(false)
        } else if x == alg.one() {
            Some(true)
        } else {
            None
        };
        for h in [false, true] {
            if forced.is_some_and(|f| f != h) {
                continue;
            }
            assign[x] = Some(h);
            if consistent(alg, assign, x) {
                go(alg, assign, x + 1, out);
            }
        }
        assign[x] = None;
    }
    go(alg, &mut assign, 0, &mut out);
    out
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// The linear system of a branch: additivity, normalization, nonnegativity
/// and the linearized `q`/`d` laws.
fn branch_system<A: QEffect + ?Sized>(alg: &A, high: &[bool]) -> LinearSystem {
    let n = alg.size();
    let mut sys = LinearSystem::new(n);
    let unit = |terms: &[(usize, i64)], rhs: BigRational| {
        let mut c = vec![BigRational::zero(); n];
        for &(x, a) in terms {
            c[x] += rat(a);
        }
        Row::new(c, rhs)
    };
    sys.equalities.push(unit(&[(alg.zero(), 1)], rat(0)));
    sys.equalities.push(unit(&[(alg.one(), 1)], rat(1)));
    for x in 0..n {
        for y in x..n {
            if let Some(z) = alg.sum(x, y) {
                sys.equalities.push(unit(&[(x, 1), (y, 1), (z, -1)], rat(0)));
            }
        }
    }
    for x in 0..n {
        sys.inequalities.push(unit(&[(x, -1)], rat(0)));
        if high[x] {
            sys.inequalities.push(unit(&[(x, -1)], -half()));
            sys.equalities.push(unit(&[(alg.q(x), 1)], rat(1)));
            sys.equalities.push(unit(&[(alg.d(x), 1), (x, -2)], rat(-1)));
        } else {
            sys.inequalities.push(unit(&[(x, 1)], half()));
            sys.equalities.push(unit(&[(alg.q(x), 1), (x, -2)], rat(0)));
            sys.equalities.push(unit(&[(alg.d(x), 1)], rat(0)));
        }
    }
    sys
}

/// Whether every point of the segment `[u, v]` is a q-state.
///
/// Along the segment each `q`/`d` law is linear except where some `s(x)`
/// crosses 1/2, so checking the endpoints and those crossings suffices.
pub fn segment_of_q_states<A: QEffect + ?Sized>(alg: &A, u: &[UnitRational], v: &[UnitRational]) -> bool {
    let one = BigRational::one();
    let mut params = vec![BigRational::zero(), one.clone()];
    for x in 0..u.len() {
        let (a, b) = (u[x].as_big(), v[x].as_big());
        if a != b {
            // (1 - λ) a + λ b = 1/2
            let lambda = (half() - a) / (b - a);
            if lambda > BigRational::zero() && lambda < one {
                params.push(lambda);
            }
        }
    }
    params.iter().all(|lambda| {
        let point: Vec<UnitRational> = u
            .iter()
            .zip(v)
            .map(|(a, b)| {
                let val = (&one - lambda) * a.as_big() + lambda * b.as_big();
                UnitRational::from_big(val).expect("convex combination stays in [0,1]")
            })
            .collect();
        check_state(alg, &point).is_q_state
    })
}

/// Whether `p = (1-λ) u + λ v` for some `0 < λ < 1`.
fn strictly_between(p: &[UnitRational], u: &[UnitRational], v: &[UnitRational]) -> bool {
    let mut lambda: Option<BigRational> = None;
    for x in 0..p.len() {
        let (a, b, c) = (u[x].as_big(), v[x].as_big(), p[x].as_big());
        if a == b {
            if c != a {
                return false;
            }
            continue;
        }
        let l = (c - a) / (b - a);
        match &lambda {
            None => lambda = Some(l),
            Some(prev) if *prev != l => return false,
            _ => {}
        }
    }
    lambda.is_some_and(|l| l > BigRational::zero() && l < BigRational::one())
}

/// Extreme q-states under [`DEFAULT_STATE_CAP`].
pub fn enumerate_extreme_q_states<A: QEffect + Sync + ?Sized>(alg: &A) -> Result<StateSet> {
    enumerate_extreme_q_states_with_cap(alg, DEFAULT_STATE_CAP)
}

/// Vertices of every branch polytope that are q-states, minus those lying
/// inside a segment of q-states joining two others. Sorted by value vector.
pub fn enumerate_extreme_q_states_with_cap<A: QEffect + Sync + ?Sized>(alg: &A, cap: usize) -> Result<StateSet> {
    let n = alg.size();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "q-state enumeration carrier".into(),
            needed: n as u128,
            cap: cap as u128,
        });
    }
    let branches = branch_signatures(alg);
    let per_branch: Vec<Result<Vec<Vec<BigRational>>>> = branches
        .par_iter()
        .map(|high| branch_system(alg, high).vertices(DEFAULT_BASIS_CAP))
        .collect();
    let mut candidates: Vec<Vec<UnitRational>> = Vec::new();
    for vs in per_branch {
        for v in vs? {
            let vals: Option<Vec<UnitRational>> = v.into_iter().map(|r| UnitRational::from_big(r).ok()).collect();
            if let Some(vals) = vals {
                if check_state(alg, &vals).is_q_state {
                    candidates.push(vals);
                }
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    let keep: Vec<bool> = (0..candidates.len())
        .into_par_iter()
        .map(|i| {
            let p = &candidates[i];
            !candidates.iter().enumerate().any(|(j, u)| {
                j != i
                    && candidates.iter().enumerate().skip(j + 1).any(|(k, v)| {
                        k != i && strictly_between(p, u, v) && segment_of_q_states(alg, u, v)
                    })
            })
        })
        .collect();
    let members = candidates
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(vals, _)| StateVector::classified(alg, vals))
        .collect();
    Ok(StateSet::new(members, Provenance::Extreme))
}
