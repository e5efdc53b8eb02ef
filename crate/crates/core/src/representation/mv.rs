use num::BigRational;

use crate::algebra::{classify, lattice_oplus, meet, QEffect};
use crate::error::{Error, Result};
use crate::rational::UnitRational;
use crate::states::{check_semi_state, check_state, Provenance, SemiLevel, StateSet, StateVector, Tri};

/// Whether `values` preserves `⊕` and `'` into the standard MV-algebra.
pub fn is_mv_morphism<A: QEffect + ?Sized>(alg: &A, values: &[UnitRational]) -> bool {
    let n = alg.size();
    values[alg.zero()].is_zero()
        && (0..n).all(|x| values[alg.supplement(x)] == values[x].complement())
        && (0..n).all(|x| {
            (0..n).all(|y| lattice_oplus(alg, x, y).is_some_and(|z| values[z] == values[x].oplus(&values[y])))
        })
}

/// All MV-morphisms into `[0,1]`.
///
/// A finite MV-algebra is the product of the intervals `[0, e]` over the
/// atoms `e` of its idempotents, each a chain. Every morphism is the
/// normalized height of `x ∧ e` in one of these chains.
pub fn enumerate_mv_morphisms<A: QEffect + ?Sized>(alg: &A) -> Result<StateSet> {
    let c = classify(alg);
    if !c.is_mv {
        return Err(Error::Precondition("MV-morphisms are enumerated on MV-algebras only".into()));
    }
    let n = alg.size();
    let idempotent: Vec<usize> = (0..n)
        .filter(|&x| x != alg.zero() && lattice_oplus(alg, x, x) == Some(x))
        .collect();
    let atoms: Vec<usize> = idempotent
        .iter()
        .copied()
        .filter(|&e| !idempotent.iter().any(|&f| alg.lt(f, e)))
        .collect();
    let height = |x: usize| (0..n).filter(|&y| alg.lt(y, x)).count();
    let mut members = Vec::new();
    for e in atoms {
        let top = height(e);
        let values: Vec<UnitRational> = (0..n)
            .map(|x| {
                let m = meet(alg, x, e).expect("MV-algebras are lattices");
                UnitRational::from_big(BigRational::new(height(m).into(), top.into())).expect("height ratio in [0,1]")
            })
            .collect();
        if !is_mv_morphism(alg, &values) {
            return Err(Error::InvalidAlgebra(format!(
                "projection onto [0, {}] is not an MV-morphism",
                alg.element_name(e)
            )));
        }
        members.push(StateVector::classified(alg, values));
    }
    members.sort_by(|a, b| a.values.cmp(&b.values));
    Ok(StateSet::new(members, Provenance::Morphisms))
}

/// Each morphism is a Jauch-Piron q-state.
pub fn morphisms_are_jp_q_states<A: QEffect + ?Sized>(alg: &A, set: &StateSet) -> bool {
    set.iter().all(|s| {
        check_state(alg, &s.values).is_q_state
            && check_semi_state(alg, &s.values, SemiLevel::JauchPiron).jauch_piron == Tri::Yes
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{library, FinitePoset};

    #[test]
    fn chains_have_one_morphism() {
        for n in 2..=7 {
            let l = library::lukasiewicz_chain(n).unwrap();
            let m = enumerate_mv_morphisms(&l).unwrap();
            assert_eq!(m.len(), 1);
            let expected: Vec<UnitRational> = (0..n).map(|i| UnitRational::new(i as i64, n as i64 - 1).unwrap()).collect();
            assert_eq!(m.members[0].values, expected);
            assert!(morphisms_are_jp_q_states(&l, &m));
        }
    }

    #[test]
    fn products_have_one_per_factor() {
        let p = library::product_l2_l3();
        assert_eq!(enumerate_mv_morphisms(&p).unwrap().len(), 2);
        let b2 = library::boolean_cube(2).unwrap();
        let m = enumerate_mv_morphisms(&b2).unwrap();
        assert_eq!(m.len(), 2);
        assert!(morphisms_are_jp_q_states(&b2, &m));
        let c = library::chain_product(&[3, 3, 3]).unwrap();
        assert_eq!(enumerate_mv_morphisms(&c).unwrap().len(), 3);
    }

    #[test]
    fn brute_force_agrees_on_small_algebras() {
        // every map into the values k/12 that preserves ⊕ and '
        for alg in [library::product_l2_l3(), library::boolean_cube(2).unwrap(), library::lukasiewicz_chain(4).unwrap()] {
            let n = alg.size();
            let grid: Vec<UnitRational> = (0..=12).map(|k| UnitRational::new(k, 12).unwrap()).collect();
            let mut found = Vec::new();
            let mut idx = vec![0usize; n];
            loop {
                let vals: Vec<UnitRational> = idx.iter().map(|&i| grid[i].clone()).collect();
                if is_mv_morphism(&alg, &vals) {
                    found.push(vals);
                }
                let mut k = 0;
                while k < n && idx[k] == 12 {
                    idx[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                idx[k] += 1;
            }
            found.sort();
            let listed: Vec<Vec<UnitRational>> = enumerate_mv_morphisms(&alg).unwrap().members.into_iter().map(|s| s.values).collect();
            assert_eq!(found, listed, "{}", alg.element_name(0));
        }
    }

    #[test]
    fn non_mv_is_refused() {
        assert!(enumerate_mv_morphisms(&library::diamond_mo2()).is_err());
        assert!(enumerate_mv_morphisms(&library::fig1()).is_err());
    }
}
