use std::sync::Arc;

use super::table::{EffectAlgebra, QEffectAlgebra, RawEffectTable};
use super::{EffectOps, FinitePoset, QEffect};
use crate::error::{Error, Result};

/// Default cap on the number of elements of a direct power.
pub const DEFAULT_POWER_CAP: u128 = 1_000_000;

/// Largest power turned into explicit tables by [`PowerAlgebra::materialize`].
const MATERIALIZE_CAP: usize = 1024;

/// The direct power `E^T` with componentwise operations, `o(t) = 0` and
/// `j(t) = 1`.
///
/// Element `x` encodes the vector `(c_0, ..., c_{k-1})` in mixed radix with
/// `c_0` least significant. Nothing is tabulated, so powers with up to a
/// million elements are cheap to hold.
#[derive(Clone, Debug)]
pub struct PowerAlgebra {
    base: Arc<QEffectAlgebra>,
    arity: usize,
    radix: usize,
    size: usize,
}

/// Builds `E^k` under the default size cap.
pub fn direct_power(base: &QEffectAlgebra, arity: usize) -> Result<PowerAlgebra> {
    PowerAlgebra::with_cap(Arc::new(base.clone()), arity, DEFAULT_POWER_CAP)
}

impl PowerAlgebra {
    pub fn with_cap(base: Arc<QEffectAlgebra>, arity: usize, cap: u128) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Precondition("index set must be non-empty".into()));
        }
        let radix = base.size();
        let needed = (radix as u128)
            .checked_pow(arity as u32)
            .unwrap_or(u128::MAX);
        if needed > cap {
            return Err(Error::CapExceeded {
                what: format!("direct power of {radix} elements to the {arity}"),
                needed,
                cap,
            });
        }
        Ok(PowerAlgebra {
            base,
            arity,
            radix,
            size: needed as usize,
        })
    }

    pub fn base(&self) -> &QEffectAlgebra {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<QEffectAlgebra> {
        &self.base
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn component(&self, x: usize, t: usize) -> usize {
        (x / self.radix.pow(t as u32)) % self.radix
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.arity);
        for _ in 0..self.arity {
            out.push(x % self.radix);
            x /= self.radix;
        }
        out
    }

    pub fn encode(&self, components: &[usize]) -> usize {
        debug_assert_eq!(components.len(), self.arity);
        components
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.radix + c)
    }

    fn map_components(&self, x: usize, f: impl Fn(usize) -> usize) -> usize {
        let mut acc = 0;
        let mut scale = 1;
        let mut rest = x;
        for _ in 0..self.arity {
            acc += f(rest % self.radix) * scale;
            rest /= self.radix;
            scale *= self.radix;
        }
        acc
    }

    /// Parses a name of the form `[c0|c1|...]`.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        let inner = name
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::UnknownElement(name.to_string()))?;
        let parts: Vec<&str> = inner.split('|').collect();
        if parts.len() != self.arity {
            return Err(Error::UnknownElement(name.to_string()));
        }
        let comps = parts
            .iter()
            .map(|p| self.base.index_of(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.encode(&comps))
    }

    /// Tabulates the power as an explicit q-effect algebra.
    pub fn materialize(&self) -> Result<QEffectAlgebra> {
        if self.size > MATERIALIZE_CAP {
            return Err(Error::CapExceeded {
                what: "materialized power".into(),
                needed: self.size as u128,
                cap: MATERIALIZE_CAP as u128,
            });
        }
        let names = (0..self.size).map(|x| self.element_name(x)).collect();
        let raw = RawEffectTable::from_fn(names, self.zero(), self.one(), |x, y| self.sum(x, y))?;
        let base = EffectAlgebra::from_raw_unchecked(raw);
        let q = (0..self.size).map(|x| self.q(x)).collect();
        let d = (0..self.size).map(|x| self.d(x)).collect();
        Ok(QEffectAlgebra::new_unchecked(base, q, d))
    }

    /// All vectors with entries in `{0, 1}`.
    pub fn characteristic_vectors(&self) -> Vec<usize> {
        let (z, o) = (self.base.zero(), self.base.one());
        (0..1usize << self.arity.min(20))
            .map(|mask| {
                let comps: Vec<usize> = (0..self.arity)
                    .map(|t| if mask >> t & 1 == 1 { o } else { z })
                    .collect();
                self.encode(&comps)
            })
            .collect()
    }
}

impl FinitePoset for PowerAlgebra {
    fn size(&self) -> usize {
        self.size
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (a, b);
        for _ in 0..self.arity {
            if !self.base.leq(a % self.radix, b % self.radix) {
                return false;
            }
            a /= self.radix;
            b /= self.radix;
        }
        true
    }

    fn element_name(&self, a: usize) -> String {
        let parts: Vec<&str> = self.decode(a).into_iter().map(|c| self.base.name(c)).collect();
        format!("[{}]", parts.join("|"))
    }
}

impl EffectOps for PowerAlgebra {
    fn zero(&self) -> usize {
        let z = self.base.zero();
        self.map_components(0, |_| z)
    }

    fn one(&self) -> usize {
        let o = self.base.one();
        self.map_components(0, |_| o)
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let (mut a, mut b) = (a, b);
        let mut acc = 0;
        let mut scale = 1;
        for _ in 0..self.arity {
            let s = self.base.sum(a % self.radix, b % self.radix)?;
            acc += s * scale;
            a /= self.radix;
            b /= self.radix;
            scale *= self.radix;
        }
        Some(acc)
    }

    fn supplement(&self, a: usize) -> usize {
        self.map_components(a, |c| self.base.supplement(c))
    }
}

impl QEffect for PowerAlgebra {
    fn q(&self, a: usize) -> usize {
        self.map_components(a, |c| self.base.q(c))
    }

    fn d(&self, a: usize) -> usize {
        self.map_components(a, |c| self.base.d(c))
    }
}
