use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::table::{EffectAlgebra, QEffectAlgebra, RawEffectTable};
use super::{EffectOps, FinitePoset, QEffect};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IdealFlavor {
    Ideal,
    Filter,
}

/// A down-closed, sum-closed subset (ideal) or its order dual (filter).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IdealOrFilter {
    pub members: Vec<usize>,
    pub flavor: IdealFlavor,
}

impl IdealOrFilter {
    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Checks closure under the order and under `+` (ideal) or `·` (filter).
    pub fn is_closed<A: EffectOps>(&self, alg: &A) -> bool {
        let n = alg.size();
        if self.members.is_empty() {
            return false;
        }
        let inside = |x: usize| self.contains(x);
        self.members.iter().all(|&y| {
            (0..n).all(|x| {
                let related = match self.flavor {
                    IdealFlavor::Ideal => alg.leq(x, y),
                    IdealFlavor::Filter => alg.leq(y, x),
                };
                !related || inside(x)
            }) && self.members.iter().all(|&z| {
                let op = match self.flavor {
                    IdealFlavor::Ideal => alg.sum(y, z),
                    IdealFlavor::Filter => alg.prod(y, z),
                };
                op.map_or(true, inside)
            })
        })
    }
}

fn close<A: EffectOps>(alg: &A, seed: &[usize], flavor: IdealFlavor) -> IdealOrFilter {
    let n = alg.size();
    let mut set = vec![false; n];
    let start = match flavor {
        IdealFlavor::Ideal => alg.zero(),
        IdealFlavor::Filter => alg.one(),
    };
    set[start] = true;
    for &s in seed {
        set[s] = true;
    }
    loop {
        let mut changed = false;
        for y in 0..n {
            if !set[y] {
                continue;
            }
            for x in 0..n {
                let related = match flavor {
                    IdealFlavor::Ideal => alg.leq(x, y),
                    IdealFlavor::Filter => alg.leq(y, x),
                };
                if related && !set[x] {
                    set[x] = true;
                    changed = true;
                }
                if set[x] {
                    let op = match flavor {
                        IdealFlavor::Ideal => alg.sum(x, y),
                        IdealFlavor::Filter => alg.prod(x, y),
                    };
                    if let Some(z) = op {
                        if !set[z] {
                            set[z] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    IdealOrFilter {
        members: (0..n).filter(|&x| set[x]).collect(),
        flavor,
    }
}

/// The least ideal containing `seed`.
pub fn generated_ideal<A: EffectOps>(alg: &A, seed: &[usize]) -> IdealOrFilter {
    close(alg, seed, IdealFlavor::Ideal)
}

/// The least filter containing `seed`.
pub fn generated_filter<A: EffectOps>(alg: &A, seed: &[usize]) -> IdealOrFilter {
    close(alg, seed, IdealFlavor::Filter)
}

/// All ideals, ordered by size and then by members.
pub fn enumerate_ideals<A: EffectOps>(alg: &A) -> Vec<IdealOrFilter> {
    let n = alg.size();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    let bottom = generated_ideal(alg, &[]);
    seen.insert(bottom.members.clone());
    queue.push_back(bottom);
    let mut out = Vec::new();
    while let Some(ideal) = queue.pop_front() {
        for x in 0..n {
            if ideal.contains(x) {
                continue;
            }
            let mut seed = ideal.members.clone();
            seed.push(x);
            let next = generated_ideal(alg, &seed);
            if seen.insert(next.members.clone()) {
                queue.push_back(next);
            }
        }
        out.push(ideal);
    }
    out.sort_by(|a, b| (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RdpWitness {
    pub x: String,
    pub y1: String,
    pub y2: String,
}

/// `None` when the Riesz decomposition property holds, otherwise a triple
/// `x <= y1 + y2` admitting no decomposition `x = x1 + x2` with
/// `x1 <= y1`, `x2 <= y2`.
pub fn check_rdp<A: EffectOps>(alg: &A) -> Option<RdpWitness> {
    let n = alg.size();
    for y1 in 0..n {
        for y2 in 0..n {
            let Some(s) = alg.sum(y1, y2) else { continue };
            for x in 0..n {
                if !alg.leq(x, s) {
                    continue;
                }
                if !decomposes(alg, x, y1, y2, |_| true) {
                    return Some(RdpWitness {
                        x: alg.element_name(x),
                        y1: alg.element_name(y1),
                        y2: alg.element_name(y2),
                    });
                }
            }
        }
    }
    None
}

fn decomposes<A: EffectOps>(alg: &A, x: usize, a: usize, b: usize, allowed: impl Fn(usize) -> bool) -> bool {
    (0..alg.size()).any(|x1| {
        allowed(x1)
            && alg.leq(x1, a)
            && alg.leq(x1, x)
            && alg
                .diff(x1, x)
                .is_some_and(|x2| allowed(x2) && alg.leq(x2, b))
    })
}

/// Riesz ideal check: every `x ∈ I` below `a + b` splits as `a1 + b1` with
/// `a1, b1 ∈ I`, `a1 <= a`, `b1 <= b`.
pub fn check_riesz<A: EffectOps>(alg: &A, ideal: &IdealOrFilter) -> bool {
    let n = alg.size();
    ideal.members.iter().all(|&x| {
        (0..n).all(|a| {
            (0..n).all(|b| match alg.sum(a, b) {
                Some(s) if alg.leq(x, s) => decomposes(alg, x, a, b, |z| ideal.contains(z)),
                _ => true,
            })
        })
    })
}

/// `E/I` for an ideal of an algebra with RDP.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub algebra: EffectAlgebra,
}

impl QuotientAlgebra {
    /// Induces `q` and `d` on the classes when they are compatible with the
    /// congruence.
    pub fn q_algebra(&self, source: &QEffectAlgebra) -> Option<QEffectAlgebra> {
        let mut q = vec![usize::MAX; self.classes.len()];
        let mut d = vec![usize::MAX; self.classes.len()];
        for x in 0..source.size() {
            let c = self.class_of[x];
            for (slot, img) in [(&mut q[c], source.q(x)), (&mut d[c], source.d(x))] {
                let ic = self.class_of[img];
                if *slot != usize::MAX && *slot != ic {
                    return None;
                }
                *slot = ic;
            }
        }
        QEffectAlgebra::new(self.algebra.clone(), q, d).ok()
    }
}

/// Quotient by the congruence `a ~ b iff a - x = b - y` for some
/// `x, y ∈ I` below `a`, `b`. Refuses algebras without RDP.
pub fn quotient<A: EffectOps>(alg: &A, ideal: &IdealOrFilter) -> Result<QuotientAlgebra> {
    if ideal.flavor != IdealFlavor::Ideal || !ideal.is_closed(alg) {
        return Err(Error::Precondition("not an ideal".into()));
    }
    if let Some(w) = check_rdp(alg) {
        return Err(Error::Precondition(format!(
            "quotient requires RDP; fails at {} <= {} + {}",
            w.x, w.y1, w.y2
        )));
    }
    let n = alg.size();
    let reduced = |a: usize| -> BTreeSet<usize> {
        ideal
            .members
            .iter()
            .filter_map(|&x| if alg.leq(x, a) { alg.diff(x, a) } else { None })
            .collect()
    };
    let reductions: Vec<BTreeSet<usize>> = (0..n).map(reduced).collect();
    let related = |a: usize, b: usize| !reductions[a].is_disjoint(&reductions[b]);

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (a..n).filter(|&b| class_of[b] == usize::MAX && related(a, b)).collect();
        for &b in &members {
            class_of[b] = classes.len();
        }
        classes.push(members);
    }
    // transitivity of ~ on the computed partition
    for c in &classes {
        for &a in c {
            for &b in c {
                if !related(a, b) {
                    return Err(Error::Precondition(format!(
                        "~ is not transitive at ({}, {})",
                        alg.element_name(a),
                        alg.element_name(b)
                    )));
                }
            }
        }
    }

    let names: Vec<String> = classes
        .iter()
        .map(|c| format!("[{}]", alg.element_name(c[0])))
        .collect();
    let zero = class_of[alg.zero()];
    let one = class_of[alg.one()];
    let mut raw = RawEffectTable::new(names.clone(), &names[zero], &names[one])?;
    for a in 0..n {
        for b in 0..n {
            if let Some(s) = alg.sum(a, b) {
                raw.define(class_of[a], class_of[b], class_of[s]).map_err(|_| {
                    Error::Precondition("induced sum is not well defined".into())
                })?;
            }
        }
    }
    let algebra = EffectAlgebra::from_raw(raw)?;
    Ok(QuotientAlgebra {
        classes,
        class_of,
        algebra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_power, find_isomorphism, library};

    #[test]
    fn chains_and_boolean_square_have_rdp() {
        for n in 2..=7 {
            assert_eq!(check_rdp(&library::lukasiewicz_chain(n).unwrap()), None);
        }
        assert_eq!(check_rdp(&library::boolean_cube(2).unwrap()), None);
    }

    #[test]
    fn mo2_fails_rdp_with_witness() {
        let mo2 = library::diamond_mo2();
        let w = check_rdp(&mo2).expect("MO2 has no RDP");
        let i = |s: &str| mo2.index_of(s).unwrap();
        let s = mo2.sum(i(&w.y1), i(&w.y2)).unwrap();
        assert!(mo2.leq(i(&w.x), s));
        let ideal = generated_ideal(&mo2, &[]);
        assert!(quotient(&mo2, &ideal).is_err());
    }

    #[test]
    fn ideals_of_l3() {
        let l3 = library::lukasiewicz_chain(3).unwrap();
        let ideals = enumerate_ideals(&l3);
        let members: Vec<Vec<usize>> = ideals.iter().map(|i| i.members.clone()).collect();
        assert_eq!(members, vec![vec![0], vec![0, 1, 2]]);
        for i in &ideals {
            assert!(i.is_closed(&l3));
            assert!(check_riesz(&l3, i));
        }
    }

    #[test]
    fn filter_generated_by_one() {
        let fig1 = library::fig1();
        let f = generated_filter(&fig1, &[fig1.one()]);
        assert_eq!(f.members, vec![fig1.one()]);
        assert!(f.is_closed(&fig1));
    }

    #[test]
    fn quotient_of_boolean_square_by_a_coordinate_ideal() {
        let two = library::lukasiewicz_chain(2).unwrap();
        let sq = direct_power(&two, 2).unwrap().materialize().unwrap();
        let ideal = generated_ideal(&sq, &[sq.index_of("[0|1]").unwrap()]);
        assert_eq!(ideal.members.len(), 2);
        let quo = quotient(&sq, &ideal).unwrap();
        assert_eq!(quo.classes.len(), 2);
        assert_eq!(quo.classes[quo.class_of[sq.zero()]], ideal.members);
        let q2 = quo.q_algebra(&sq).unwrap();
        assert!(find_isomorphism(&q2, &two, true).is_some());
    }
}
