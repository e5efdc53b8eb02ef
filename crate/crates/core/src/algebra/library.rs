//! Constructors for the bundled algebras.

use num::BigRational;

use super::table::{EffectAlgebra, QEffectAlgebra, RawEffectTable};
use crate::error::{Error, Result};
use crate::rational::UnitRational;

/// The Łukasiewicz chain `Ł_n = {0, 1/(n-1), ..., 1}` with `n >= 2`
/// elements, as a q-effect algebra with `q(x) = x ⊕ x`, `d(x) = x ⊙ x`.
pub fn lukasiewicz_chain(n: usize) -> Result<QEffectAlgebra> {
    chain_product(&[n])
}

/// The chain `{0, 1/2^k, ..., 1}` of dyadic rationals.
pub fn dyadic_chain(k: u32) -> Result<QEffectAlgebra> {
    lukasiewicz_chain((1usize << k) + 1)
}

/// The Boolean algebra `2^k` as a q-effect algebra (`q = d = id`).
pub fn boolean_cube(k: usize) -> Result<QEffectAlgebra> {
    chain_product(&vec![2; k])
}

/// `Ł_2 × Ł_3`.
pub fn product_l2_l3() -> QEffectAlgebra {
    chain_product(&[2, 3]).expect("valid product")
}

fn chain_value(n: usize, i: usize) -> UnitRational {
    UnitRational::from_big(BigRational::new(i.into(), (n - 1).into())).expect("in [0,1]")
}

/// A finite product of Łukasiewicz chains `Ł_{n_1} × ... × Ł_{n_k}` with
/// componentwise truncated sum. A single factor yields the chain itself
/// with plain rational names; products use `[v_1|...|v_k]`.
pub fn chain_product(lengths: &[usize]) -> Result<QEffectAlgebra> {
    if lengths.is_empty() || lengths.iter().any(|&n| n < 2) {
        return Err(Error::Precondition("chain lengths must be at least 2".into()));
    }
    let total: usize = lengths.iter().product();
    let decode = |mut x: usize| {
        let mut c = Vec::with_capacity(lengths.len());
        for &n in lengths {
            c.push(x % n);
            x /= n;
        }
        c
    };
    let encode = |c: &[usize]| c.iter().zip(lengths).rev().fold(0, |acc, (&v, &n)| acc * n + v);
    let names: Vec<String> = (0..total)
        .map(|x| {
            let parts: Vec<String> = decode(x)
                .into_iter()
                .zip(lengths)
                .map(|(v, &n)| chain_value(n, v).to_string())
                .collect();
            if parts.len() == 1 {
                parts[0].clone()
            } else {
                format!("[{}]", parts.join("|"))
            }
        })
        .collect();
    let top: Vec<usize> = lengths.iter().map(|&n| n - 1).collect();
    let raw = RawEffectTable::from_fn(names, 0, encode(&top), |x, y| {
        let (a, b) = (decode(x), decode(y));
        let s: Option<Vec<usize>> = a
            .iter()
            .zip(&b)
            .zip(lengths)
            .map(|((&u, &v), &n)| (u + v < n).then_some(u + v))
            .collect();
        s.map(|s| encode(&s))
    })?;
    QEffectAlgebra::from_lattice(EffectAlgebra::from_raw(raw)?)
}

/// The horizontal sum of two four-element Boolean algebras:
/// `{0, a, a', b, b', 1}` where only complementary atoms sum to 1.
pub fn diamond_mo2() -> QEffectAlgebra {
    let names: Vec<String> = ["0", "a", "a'", "b", "b'", "1"].iter().map(|s| s.to_string()).collect();
    let mut raw = RawEffectTable::new(names, "0", "1").expect("valid names");
    for x in ["0", "a", "a'", "b", "b'", "1"] {
        raw.define_named("0", x, x).expect("defined");
    }
    raw.define_named("a", "a'", "1").expect("defined");
    raw.define_named("b", "b'", "1").expect("defined");
    raw.close_commutative();
    let base = EffectAlgebra::from_raw(raw).expect("MO2 is an effect algebra");
    QEffectAlgebra::from_lattice(base).expect("MO2 is lattice ordered")
}

/// The eleven-element effect algebra that is not lattice ordered, given by
/// points of `[0,1]^2` in sixths with the partial sum of the square, together
/// with its published `q`/`d` table.
///
/// The table is kept verbatim and is not validated on construction: `d` is
/// not monotone on `a <= 5b` (nor on `c <= 5b`), so (Q3) and (Q5) fail there.
/// [`QEffectAlgebra::validate`] reports these violations.
pub fn fig1() -> QEffectAlgebra {
    const POINTS: [(&str, (u8, u8)); 11] = [
        ("0", (0, 0)),
        ("a", (5, 0)),
        ("b", (1, 1)),
        ("c", (0, 5)),
        ("a+b", (6, 1)),
        ("2b", (2, 2)),
        ("3b", (3, 3)),
        ("4b", (4, 4)),
        ("5b", (5, 5)),
        ("b+c", (1, 6)),
        ("1", (6, 6)),
    ];
    const Q: [&str; 11] = ["0", "a", "2b", "c", "a+b", "4b", "1", "1", "1", "b+c", "1"];
    const D: [&str; 11] = ["0", "a", "0", "c", "a+b", "0", "0", "2b", "4b", "b+c", "1"];

    let names: Vec<String> = POINTS.iter().map(|(n, _)| n.to_string()).collect();
    let find = |p: (u8, u8)| POINTS.iter().position(|&(_, v)| v == p);
    let raw = RawEffectTable::from_fn(names, 0, 10, |x, y| {
        let (a, b) = (POINTS[x].1, POINTS[y].1);
        find((a.0 + b.0, a.1 + b.1))
    })
    .expect("valid table");
    let base = EffectAlgebra::from_raw(raw).expect("fig1 is an effect algebra");
    let idx = |s: &str| base.index_of(s).expect("known element");
    let q = Q.iter().map(|s| idx(s)).collect();
    let d = D.iter().map(|s| idx(s)).collect();
    QEffectAlgebra::new_unchecked(base, q, d)
}

/// Every bundled algebra by name.
pub fn bundled_examples() -> Vec<(String, QEffectAlgebra)> {
    let mut out = vec![("fig1".to_string(), fig1())];
    for n in 2..=7 {
        out.push((format!("L{n}"), lukasiewicz_chain(n).expect("chain")));
    }
    for k in 1..=4 {
        out.push((format!("B{k}"), boolean_cube(k).expect("cube")));
    }
    out.push(("L2xL3".into(), product_l2_l3()));
    out.push(("MO2".into(), diamond_mo2()));
    for k in 2..=3 {
        out.push((format!("D{k}"), dyadic_chain(k).expect("dyadic chain")));
    }
    out
}

/// Looks up a bundled algebra by name; also accepts `Ln` for any `n >= 2`.
pub fn bundled(name: &str) -> Option<QEffectAlgebra> {
    if let Some((_, alg)) = bundled_examples().into_iter().find(|(n, _)| n == name) {
        return Some(alg);
    }
    let n: usize = name.strip_prefix('L')?.parse().ok()?;
    lukasiewicz_chain(n).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{EffectOps, FinitePoset, QEffect};

    #[test]
    fn fig1_q_and_d_columns() {
        let f = fig1();
        let i = |s: &str| f.index_of(s).unwrap();
        assert_eq!(f.q(i("3b")), i("1"));
        assert_eq!(f.d(i("4b")), i("2b"));
        assert_eq!(f.d(i("5b")), i("4b"));
        assert_eq!(f.supplement(i("a")), i("b+c"));
        assert_eq!(f.prod(i("a+b"), i("b+c")), Some(i("b")));
        assert_eq!(f.supplement(i("0")), i("1"));
    }

    #[test]
    fn chain_names_and_size() {
        let l5 = lukasiewicz_chain(5).unwrap();
        assert_eq!(l5.names(), &["0", "1/4", "1/2", "3/4", "1"]);
        let p = product_l2_l3();
        assert_eq!(p.size(), 6);
        assert_eq!(p.name(p.one()), "[1|1]");
    }

    #[test]
    fn every_bundled_algebra_validates() {
        for (name, alg) in bundled_examples() {
            assert_eq!(alg.validate().passed(), name != "fig1", "{name}");
            assert!(alg.base().to_raw().validate().unwrap().passed(), "{name}");
        }
        assert!(bundled("L11").is_some());
        assert!(bundled("nope").is_none());
    }
}
