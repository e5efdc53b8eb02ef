use serde::Serialize;

use super::{FinitePoset, QEffect};
use crate::error::{Error, Result};

/// A total map between finite carriers, stored as a table of indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlgebraMap {
    table: Vec<usize>,
}

impl AlgebraMap {
    pub fn new(table: Vec<usize>) -> Self {
        AlgebraMap { table }
    }

    pub fn identity(n: usize) -> Self {
        AlgebraMap {
            table: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Self {
        AlgebraMap {
            table: vec![value; n],
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Self {
        AlgebraMap {
            table: (0..n).map(f).collect(),
        }
    }

    /// Checks totality against the source size and the range against the
    /// target size.
    pub fn checked(table: Vec<usize>, source_size: usize, target_size: usize) -> Result<Self> {
        if table.len() != source_size {
            return Err(Error::MapLength {
                expected: source_size,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&y| y >= target_size) {
            return Err(Error::Precondition(format!("map value {bad} out of range")));
        }
        Ok(AlgebraMap { table })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AlgebraMap) -> AlgebraMap {
        AlgebraMap {
            table: inner.table.iter().map(|&y| self.table[y]).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MorphismKind {
    /// Order preserving.
    Poset,
    /// Preserves `+`, `0` and `1`.
    Effect,
    /// Additionally preserves `q` and `d`.
    QEffect,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub is_morphism: bool,
    pub is_order_reflecting: bool,
    /// First failing condition, when not a morphism.
    pub witness: Option<String>,
}

pub fn check_morphism<A: QEffect, B: QEffect>(
    src: &A,
    tgt: &B,
    map: &AlgebraMap,
    kind: MorphismKind,
) -> MorphismReport {
    let n = src.size();
    let f = |x: usize| map.apply(x);
    let sn = |x: usize| src.element_name(x);
    let mut witness = None;

    for x in 0..n {
        for y in 0..n {
            if src.leq(x, y) && !tgt.leq(f(x), f(y)) {
                witness.get_or_insert_with(|| format!("not monotone at ({}, {})", sn(x), sn(y)));
            }
        }
    }
    if kind != MorphismKind::Poset && witness.is_none() {
        if f(src.zero()) != tgt.zero() {
            witness = Some("0 not mapped to 0".into());
        } else if f(src.one()) != tgt.one() {
            witness = Some("1 not mapped to 1".into());
        } else {
            'sum: for x in 0..n {
                for y in 0..n {
                    if let Some(s) = src.sum(x, y) {
                        if tgt.sum(f(x), f(y)) != Some(f(s)) {
                            witness = Some(format!("+ not preserved at ({}, {})", sn(x), sn(y)));
                            break 'sum;
                        }
                    }
                }
            }
        }
    }
    if kind == MorphismKind::QEffect && witness.is_none() {
        for x in 0..n {
            if f(src.q(x)) != tgt.q(f(x)) {
                witness = Some(format!("q not preserved at {}", sn(x)));
                break;
            }
            if f(src.d(x)) != tgt.d(f(x)) {
                witness = Some(format!("d not preserved at {}", sn(x)));
                break;
            }
        }
    }
    let is_order_reflecting =
        (0..n).all(|a| (0..n).all(|b| tgt.leq(f(a), f(b)) == src.leq(a, b)));
    MorphismReport {
        is_morphism: witness.is_none(),
        is_order_reflecting,
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    /// Condition (i): pointwise dominance under every map forces order.
    pub reflecting: bool,
    /// Condition (ii): the induced product map is order reflecting.
    pub product_reflecting: bool,
    pub all_monotone: bool,
    pub empty_family: bool,
    /// A pair `(a, b)` with `h_t(a) <= h_t(b)` for all `t` yet `a ≰ b`.
    pub witness: Option<(String, String)>,
    /// `h(a) = (h_t(a))_t` for every source element.
    pub product: Vec<Vec<usize>>,
}

/// Decides whether a family of poset maps with a common source is order
/// reflecting, both directly and through the induced map into the power.
pub fn check_order_reflecting_family<P: FinitePoset, Q: FinitePoset>(
    src: &P,
    tgt: &Q,
    maps: &[AlgebraMap],
) -> FamilyReport {
    let n = src.size();
    let all_monotone = maps.iter().all(|h| {
        (0..n).all(|a| (0..n).all(|b| !src.leq(a, b) || tgt.leq(h.apply(a), h.apply(b))))
    });

    let mut witness = None;
    for a in 0..n {
        for b in 0..n {
            let dominated = maps.iter().all(|h| tgt.leq(h.apply(a), h.apply(b)));
            if dominated && !src.leq(a, b) && witness.is_none() {
                witness = Some((src.element_name(a), src.element_name(b)));
            }
        }
    }
    let reflecting = witness.is_none();

    let product: Vec<Vec<usize>> = (0..n)
        .map(|a| maps.iter().map(|h| h.apply(a)).collect())
        .collect();
    let power_leq =
        |u: &[usize], v: &[usize]| u.iter().zip(v).all(|(&x, &y)| tgt.leq(x, y));
    let product_reflecting = (0..n)
        .all(|a| (0..n).all(|b| !power_leq(&product[a], &product[b]) || src.leq(a, b)));

    FamilyReport {
        reflecting,
        product_reflecting,
        all_monotone,
        empty_family: maps.is_empty(),
        witness,
        product,
    }
}

/// Finds a bijection preserving `+`, the bounds and (optionally) `q`, `d`.
pub fn find_isomorphism<A: QEffect, B: QEffect>(a: &A, b: &B, with_q: bool) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let sig_a = |x: usize| {
        (
            (0..n).filter(|&y| a.leq(y, x)).count(),
            (0..n).filter(|&y| a.leq(x, y)).count(),
            (0..n).filter(|&y| a.sum(x, y).is_some()).count(),
        )
    };
    let sig_b = |x: usize| {
        (
            (0..n).filter(|&y| b.leq(y, x)).count(),
            (0..n).filter(|&y| b.leq(x, y)).count(),
            (0..n).filter(|&y| b.sum(x, y).is_some()).count(),
        )
    };
    let sa: Vec<_> = (0..n).map(sig_a).collect();
    let sb: Vec<_> = (0..n).map(sig_b).collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent<A: QEffect, B: QEffect>(a: &A, b: &B, map: &[usize], x: usize, with_q: bool) -> bool {
        let n = a.size();
        for u in 0..n {
            for v in 0..n {
                if map[u] != usize::MAX
                    && map[v] != usize::MAX
                    && a.sum(u, v) == Some(x)
                    && b.sum(map[u], map[v]) != Some(map[x])
                {
                    return false;
                }
            }
        }
        for y in 0..n {
            if map[y] == usize::MAX {
                continue;
            }
            for (u, v) in [(x, y), (y, x)] {
                match a.sum(u, v) {
                    Some(s) if map[s] != usize::MAX => {
                        if b.sum(map[u], map[v]) != Some(map[s]) {
                            return false;
                        }
                    }
                    Some(_) => {
                        if b.sum(map[u], map[v]).is_none() {
                            return false;
                        }
                    }
                    None => {
                        if b.sum(map[u], map[v]).is_some() {
                            return false;
                        }
                    }
                }
            }
            if with_q {
                for (img, fb) in [(a.q(y), b.q(map[y])), (a.d(y), b.d(map[y]))] {
                    if map[img] != usize::MAX && map[img] != fb {
                        return false;
                    }
                }
            }
        }
        if with_q {
            for y in 0..n {
                if map[y] == usize::MAX {
                    continue;
                }
                if a.q(y) == x && b.q(map[y]) != map[x] {
                    return false;
                }
                if a.d(y) == x && b.d(map[y]) != map[x] {
                    return false;
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn search<A: QEffect, B: QEffect>(
        a: &A,
        b: &B,
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        sa: &[(usize, usize, usize)],
        sb: &[(usize, usize, usize)],
        with_q: bool,
    ) -> bool {
        let n = a.size();
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || sa[k] != sb[cand] {
                continue;
            }
            map[k] = cand;
            used[cand] = true;
            if consistent(a, b, map, k, with_q) && search(a, b, k + 1, map, used, sa, sb, with_q) {
                return true;
            }
            used[cand] = false;
            map[k] = usize::MAX;
        }
        false
    }

    if search(a, b, 0, &mut map, &mut used, &sa, &sb, with_q)
        && map[a.zero()] == b.zero()
        && map[a.one()] == b.one()
    {
        Some(map)
    } else {
        None
    }
}
