//! Terms of the clone generated by `q` and `d`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::QEffect;
use crate::error::{Error, Result};
use crate::rational::{DyadicRational, UnitRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    Q,
    D,
}

/// A nonempty composition of `q` and `d`, stored outermost first: the term
/// `q∘d` is `[Q, D]`, renders as `q.d`, and applies `d` before `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CloneTerm {
    syms: Vec<Sym>,
}

impl CloneTerm {
    pub fn new(syms: Vec<Sym>) -> Result<Self> {
        if syms.is_empty() {
            return Err(Error::Precondition("terms are nonempty".into()));
        }
        Ok(CloneTerm { syms })
    }

    pub fn q() -> Self {
        CloneTerm { syms: vec![Sym::Q] }
    }

    pub fn d() -> Self {
        CloneTerm { syms: vec![Sym::D] }
    }

    pub fn syms(&self) -> &[Sym] {
        &self.syms
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &CloneTerm) -> CloneTerm {
        let mut syms = self.syms.clone();
        syms.extend_from_slice(&inner.syms);
        CloneTerm { syms }
    }

    /// Evaluates on an abstract q-effect algebra.
    pub fn eval<A: QEffect + ?Sized>(&self, alg: &A, x: usize) -> usize {
        self.syms.iter().rev().fold(x, |acc, s| match s {
            Sym::Q => alg.q(acc),
            Sym::D => alg.d(acc),
        })
    }

    /// Evaluates on the standard algebra `[0,1]`.
    pub fn eval_std(&self, x: &UnitRational) -> UnitRational {
        self.syms.iter().rev().fold(x.clone(), |acc, s| match s {
            Sym::Q => acc.std_q(),
            Sym::D => acc.std_d(),
        })
    }
}

impl fmt::Display for CloneTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.syms.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(match s {
                Sym::Q => "q",
                Sym::D => "d",
            })?;
        }
        Ok(())
    }
}

impl FromStr for CloneTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syms = s
            .split('.')
            .map(|part| match part.trim() {
                "q" => Ok(Sym::Q),
                "d" => Ok(Sym::D),
                other => Err(Error::Precondition(format!("unknown term symbol `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        CloneTerm::new(syms)
    }
}

impl Serialize for CloneTerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CloneTerm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `μ_m = d^m`.
pub fn mu(m: usize) -> Result<CloneTerm> {
    if m == 0 {
        return Err(Error::Precondition("mu(m) needs m >= 1".into()));
    }
    Ok(CloneTerm {
        syms: vec![Sym::D; m],
    })
}

/// The term `t_r` with `t_r(x) = 1` iff `r <= x` on `[0,1]`.
///
/// Built from the binary expansion of `r`: `t_{1/2} = q`, a leading 0 gives
/// `t_{2r} ∘ q` and a leading 1 gives `t_{2r-1} ∘ d`.
pub fn threshold_term(r: &DyadicRational) -> CloneTerm {
    let digits = r.binary_digits();
    // digits[..last] are consumed innermost first; the final 1 becomes q.
    let mut syms = vec![Sym::Q];
    for &bit in digits[..digits.len() - 1].iter().rev() {
        syms.push(if bit { Sym::D } else { Sym::Q });
    }
    CloneTerm { syms }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub k: u32,
    pub pairs_checked: usize,
    /// `(r, x)` where `t_r(x) = 1` disagrees with `r <= x`.
    pub failures: Vec<(UnitRational, UnitRational)>,
    /// Grid points where `x = 1` disagrees with "every `t_r(x) = 1`", or
    /// where `t_r(x) != 1` but `x >= r`.
    pub proposition_failures: Vec<UnitRational>,
}

impl ThresholdReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.proposition_failures.is_empty()
    }
}

/// Largest grid exponent accepted by [`verify_threshold`].
pub const MAX_GRID_EXPONENT: u32 = 12;

/// Checks `t_r(x) = 1 ⇔ r <= x` for every `r = i/2^k` in `(0,1)` and every
/// `x = j/2^k` in `[0,1]`. With the identity as the state on the grid chain
/// it also checks `x = 1 ⇔ ∀r t_r(x) = 1`: each `x < 1` must be separated by
/// `r = x + 2^{-(k+1)}`, and every `r` with `t_r(x) != 1` must exceed `x`.
pub fn verify_threshold(k: u32) -> Result<ThresholdReport> {
    if k == 0 || k > MAX_GRID_EXPONENT {
        return Err(Error::Precondition(format!("grid exponent must be in 1..={MAX_GRID_EXPONENT}")));
    }
    let n = 1u64 << k;
    let terms: Vec<(UnitRational, CloneTerm)> = (1..n)
        .map(|i| {
            let r = DyadicRational::from_grid(i, k).expect("inside (0,1)");
            let t = threshold_term(&r);
            (r.value().clone(), t)
        })
        .collect();
    let mut report = ThresholdReport {
        k,
        pairs_checked: 0,
        failures: Vec::new(),
        proposition_failures: Vec::new(),
    };
    for j in 0..=n {
        let x = UnitRational::dyadic(j, k)?;
        let mut all_one = true;
        let mut bound_ok = true;
        for (r, t) in &terms {
            let hit = t.eval_std(&x).is_one();
            report.pairs_checked += 1;
            if hit != (r <= &x) {
                report.failures.push((r.clone(), x.clone()));
            }
            if !hit {
                all_one = false;
                bound_ok &= &x < r;
            }
        }
        if j < n {
            let sep = DyadicRational::from_grid(2 * j + 1, k + 1)?;
            all_one &= threshold_term(&sep).eval_std(&x).is_one();
        }
        if all_one != x.is_one() || !bound_ok {
            report.proposition_failures.push(x);
        }
    }
    Ok(report)
}

/// Iterated product `h_1 · ... · h_n` padded with 1 up to `2^k` factors;
/// the padding does not change the value.
fn padded_product<A: QEffect + ?Sized>(alg: &A, hs: &[usize], k: u32) -> Result<usize> {
    let slots = 1usize << k;
    if hs.len() > slots {
        return Err(Error::Precondition(format!("at most {slots} factors allowed")));
    }
    let mut acc = alg.one();
    for &h in hs.iter().chain(std::iter::repeat(&alg.one()).take(slots - hs.len())) {
        acc = alg
            .prod(acc, h)
            .ok_or_else(|| Error::Precondition("iterated product is undefined".into()))?;
    }
    Ok(acc)
}

/// `μ_k(h) <= h_1 · ... · h_{2^k}` for `h <= h_j`.
pub fn verify_obind<A: QEffect + ?Sized>(alg: &A, h: usize, hs: &[usize], k: u32) -> Result<bool> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if let Some(&bad) = hs.iter().find(|&&hj| !alg.leq(h, hj)) {
        return Err(Error::Precondition(format!(
            "{} is not below {}",
            alg.element_name(h),
            alg.element_name(bad)
        )));
    }
    let product = padded_product(alg, hs, k)?;
    Ok(alg.leq(mu(k as usize)?.eval(alg, h), product))
}

/// Every tuple `(h, h_1, ..., h_{2^k})` with `h <= h_j` and a defined product
/// for which the bound fails. Exhaustive; `2^k` factors are enumerated.
pub fn obind_counterexamples<A: QEffect + ?Sized>(alg: &A, k: u32) -> Vec<Vec<usize>> {
    let n = alg.size();
    let slots = 1usize << k;
    let mut out = Vec::new();
    for h in 0..n {
        let above: Vec<usize> = (0..n).filter(|&y| alg.leq(h, y)).collect();
        let mut idx = vec![0usize; slots];
        loop {
            let hs: Vec<usize> = idx.iter().map(|&i| above[i]).collect();
            if let Ok(false) = verify_obind(alg, h, &hs, k) {
                let mut tuple = vec![h];
                tuple.extend(hs);
                out.push(tuple);
            }
            let mut pos = 0;
            loop {
                if pos == slots {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < above.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == slots {
                break;
            }
        }
    }
    out
}
