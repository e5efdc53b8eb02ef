use std::collections::HashMap;
use std::fmt;

use super::validate::{check_q_axioms, Axiom, ValidationReport, Violation};
use super::{EffectOps, FinitePoset, QEffect};
use crate::error::{Error, Result};

/// Largest carrier on which the cubic axiom scans run by default.
pub const DEFAULT_VALIDATION_CAP: usize = 64;

/// An unvalidated partial sum table as read from a file or built in code.
///
/// Undefined entries are `None`. Entries are stored per ordered pair; call
/// [`close_commutative`](Self::close_commutative) to mirror pairs that were
/// listed only once.
#[derive(Clone, Debug)]
pub struct RawEffectTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
    zero: usize,
    one: usize,
    table: Vec<Option<usize>>,
}

impl RawEffectTable {
    pub fn new(names: Vec<String>, zero: &str, one: &str) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let zero = lookup(zero)?;
        let one = lookup(one)?;
        if zero == one {
            return Err(Error::ZeroEqualsOne);
        }
        let n = names.len();
        Ok(RawEffectTable {
            names,
            index,
            zero,
            one,
            table: vec![None; n * n],
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        self.table[x * self.size() + y]
    }

    /// Records `x + y = z`. Redefining an ordered pair with a different
    /// result is an error.
    pub fn define(&mut self, x: usize, y: usize, z: usize) -> Result<()> {
        let n = self.size();
        if x >= n || y >= n || z >= n {
            return Err(Error::Precondition(format!(
                "index out of range in {x}+{y}={z}"
            )));
        }
        let slot = &mut self.table[x * n + y];
        match *slot {
            Some(old) if old != z => Err(Error::Precondition(format!(
                "{}+{} defined twice ({} and {})",
                self.names[x], self.names[y], self.names[old], self.names[z]
            ))),
            _ => {
                *slot = Some(z);
                Ok(())
            }
        }
    }

    pub fn define_named(&mut self, x: &str, y: &str, z: &str) -> Result<()> {
        let (x, y, z) = (self.index_of(x)?, self.index_of(y)?, self.index_of(z)?);
        self.define(x, y, z)
    }

    /// Fills `y + x` from `x + y` wherever only one orientation was given.
    /// Pairs given in both orientations with different results are left
    /// alone so that (E1) reports them.
    pub fn close_commutative(&mut self) {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                if let Some(z) = self.table[x * n + y] {
                    if self.table[y * n + x].is_none() {
                        self.table[y * n + x] = Some(z);
                    }
                }
            }
        }
    }

    /// Checks (E1)–(E4) with the default carrier cap.
    pub fn validate(&self) -> Result<ValidationReport> {
        self.validate_with_cap(DEFAULT_VALIDATION_CAP)
    }

    pub fn validate_with_cap(&self, cap: usize) -> Result<ValidationReport> {
        let n = self.size();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "effect-axiom validation".into(),
                needed: n as u128,
                cap: cap as u128,
            });
        }
        let name = |i: usize| self.names[i].clone();
        let mut report = ValidationReport::default();

        for x in 0..n {
            for y in x..n {
                if self.get(x, y) != self.get(y, x) {
                    report.push(Violation::new(
                        Axiom::E1,
                        vec![name(x), name(y)],
                        "x+y and y+x differ",
                    ));
                }
            }
        }

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let Some(yz) = self.get(y, z) else { continue };
                    let Some(x_yz) = self.get(x, yz) else { continue };
                    match self.get(x, y).and_then(|xy| self.get(xy, z)) {
                        Some(xy_z) if xy_z == x_yz => {}
                        Some(_) => report.push(Violation::new(
                            Axiom::E2,
                            vec![name(x), name(y), name(z)],
                            "(x+y)+z differs from x+(y+z)",
                        )),
                        None => report.push(Violation::new(
                            Axiom::E2,
                            vec![name(x), name(y), name(z)],
                            "x+(y+z) defined but (x+y)+z is not",
                        )),
                    }
                }
            }
        }

        for x in 0..n {
            let supps: Vec<usize> = (0..n).filter(|&y| self.get(x, y) == Some(self.one)).collect();
            if supps.len() != 1 {
                let mut w = vec![name(x)];
                w.extend(supps.iter().map(|&s| name(s)));
                let msg = if supps.is_empty() {
                    "no supplement"
                } else {
                    "supplement not unique"
                };
                report.push(Violation::new(Axiom::E3, w, msg));
            }
        }

        for x in 0..n {
            if x != self.zero && self.get(x, self.one).is_some() {
                report.push(Violation::new(
                    Axiom::E4,
                    vec![name(x)],
                    "x+1 defined for x != 0",
                ));
            }
        }
        Ok(report)
    }

    /// Builds a raw table from a closure over indices.
    pub fn from_fn(
        names: Vec<String>,
        zero: usize,
        one: usize,
        sum: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let z = names.get(zero).cloned().ok_or(Error::EmptyCarrier)?;
        let o = names.get(one).cloned().ok_or(Error::EmptyCarrier)?;
        let mut raw = RawEffectTable::new(names, &z, &o)?;
        let n = raw.size();
        for x in 0..n {
            for y in 0..n {
                if let Some(s) = sum(x, y) {
                    raw.define(x, y, s)?;
                }
            }
        }
        Ok(raw)
    }
}

/// A validated finite effect algebra with its derived order and supplement.
#[derive(Clone)]
pub struct EffectAlgebra {
    names: Vec<String>,
    index: HashMap<String, usize>,
    zero: usize,
    one: usize,
    sum: Vec<Option<usize>>,
    supp: Vec<usize>,
    order: Vec<bool>,
}

impl EffectAlgebra {
    /// Validates `raw` and derives supplement and order.
    pub fn from_raw(raw: RawEffectTable) -> Result<Self> {
        Self::from_raw_with_cap(raw, DEFAULT_VALIDATION_CAP)
    }

    pub fn from_raw_with_cap(raw: RawEffectTable, cap: usize) -> Result<Self> {
        let report = raw.validate_with_cap(cap)?;
        if !report.passed() {
            return Err(Error::InvalidAlgebra(report.summary()));
        }
        Ok(Self::from_raw_unchecked(raw))
    }

    /// Builds from a table already known to satisfy (E1)–(E4), e.g. a
    /// componentwise power of a validated algebra.
    pub(crate) fn from_raw_unchecked(raw: RawEffectTable) -> Self {
        let n = raw.size();
        let one = raw.one;
        let supp: Vec<usize> = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| raw.table[x * n + y] == Some(one))
                    .expect("validated table has supplements")
            })
            .collect();
        let mut order = vec![false; n * n];
        for x in 0..n {
            for z in 0..n {
                if let Some(y) = raw.table[x * n + z] {
                    order[x * n + y] = true;
                }
            }
        }
        EffectAlgebra {
            names: raw.names,
            index: raw.index,
            zero: raw.zero,
            one: raw.one,
            sum: raw.table,
            supp,
            order,
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// The raw table this algebra was built from.
    pub fn to_raw(&self) -> RawEffectTable {
        RawEffectTable {
            names: self.names.clone(),
            index: self.index.clone(),
            zero: self.zero,
            one: self.one,
            table: self.sum.clone(),
        }
    }

    /// The dual effect algebra `(E; ·, 1, 0)`.
    pub fn dual(&self) -> EffectAlgebra {
        let n = self.size();
        let raw = RawEffectTable {
            names: self.names.clone(),
            index: self.index.clone(),
            zero: self.one,
            one: self.zero,
            table: (0..n * n).map(|i| self.prod(i / n, i % n)).collect(),
        };
        EffectAlgebra::from_raw_unchecked(raw)
    }

    /// All defined sums `(x, y, x+y)` with `x <= y` by index.
    pub fn sum_entries(&self) -> Vec<(usize, usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x..n {
                if let Some(z) = self.sum(x, y) {
                    out.push((x, y, z));
                }
            }
        }
        out
    }
}

impl FinitePoset for EffectAlgebra {
    fn size(&self) -> usize {
        self.names.len()
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        self.order[a * self.names.len() + b]
    }
    fn element_name(&self, a: usize) -> String {
        self.names[a].clone()
    }
}

impl EffectOps for EffectAlgebra {
    fn zero(&self) -> usize {
        self.zero
    }
    fn one(&self) -> usize {
        self.one
    }
    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sum[a * self.names.len() + b]
    }
    fn supplement(&self, a: usize) -> usize {
        self.supp[a]
    }
}

impl fmt::Debug for EffectAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EffectAlgebra")
            .field("elements", &self.names)
            .field("zero", &self.names[self.zero])
            .field("one", &self.names[self.one])
            .finish()
    }
}

impl PartialEq for EffectAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.zero == other.zero
            && self.one == other.one
            && self.sum == other.sum
    }
}

impl Eq for EffectAlgebra {}

/// A validated finite q-effect algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct QEffectAlgebra {
    base: EffectAlgebra,
    qmap: Vec<usize>,
    dmap: Vec<usize>,
}

impl QEffectAlgebra {
    /// Validates (Q1)–(Q5) and fails with the violation summary otherwise.
    pub fn new(base: EffectAlgebra, qmap: Vec<usize>, dmap: Vec<usize>) -> Result<Self> {
        let report = super::validate::validate_q_axioms(&base, &qmap, &dmap)?;
        if !report.passed() {
            return Err(Error::InvalidAlgebra(report.summary()));
        }
        Ok(QEffectAlgebra { base, qmap, dmap })
    }

    pub(crate) fn new_unchecked(base: EffectAlgebra, qmap: Vec<usize>, dmap: Vec<usize>) -> Self {
        QEffectAlgebra { base, qmap, dmap }
    }

    /// Equips a lattice effect algebra with `q(x) = x ⊕ x`, `d(x) = x ⊙ x`.
    pub fn from_lattice(base: EffectAlgebra) -> Result<Self> {
        let (q, d) = super::classify::lattice_q_maps(&base).ok_or_else(|| {
            Error::Precondition("algebra is not lattice ordered".into())
        })?;
        Self::new(base, q, d)
    }

    pub fn base(&self) -> &EffectAlgebra {
        &self.base
    }

    pub fn names(&self) -> &[String] {
        self.base.names()
    }

    pub fn name(&self, x: usize) -> &str {
        self.base.name(x)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.base.index_of(name)
    }

    pub fn qmap(&self) -> &[usize] {
        &self.qmap
    }

    pub fn dmap(&self) -> &[usize] {
        &self.dmap
    }

    /// The dual `(E; ·, d, q, 1, 0)`.
    pub fn dual(&self) -> QEffectAlgebra {
        QEffectAlgebra {
            base: self.base.dual(),
            qmap: self.dmap.clone(),
            dmap: self.qmap.clone(),
        }
    }

    /// Re-runs (Q1)–(Q5); always passes for values built through
    /// [`QEffectAlgebra::new`].
    pub fn validate(&self) -> ValidationReport {
        check_q_axioms(self)
    }
}

impl FinitePoset for QEffectAlgebra {
    fn size(&self) -> usize {
        self.base.size()
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        self.base.leq(a, b)
    }
    fn element_name(&self, a: usize) -> String {
        self.base.element_name(a)
    }
}

impl EffectOps for QEffectAlgebra {
    fn zero(&self) -> usize {
        self.base.zero
    }
    fn one(&self) -> usize {
        self.base.one
    }
    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.base.sum(a, b)
    }
    fn supplement(&self, a: usize) -> usize {
        self.base.supp[a]
    }
}

impl QEffect for QEffectAlgebra {
    fn q(&self, a: usize) -> usize {
        self.qmap[a]
    }
    fn d(&self, a: usize) -> usize {
        self.dmap[a]
    }
}

impl fmt::Debug for QEffectAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QEffectAlgebra")
            .field("elements", &self.base.names)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::library;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn one_plus_one_violates_e4() {
        let mut raw = RawEffectTable::new(names(&["0", "1"]), "0", "1").unwrap();
        raw.define_named("0", "0", "0").unwrap();
        raw.define_named("0", "1", "1").unwrap();
        raw.define_named("1", "1", "1").unwrap();
        raw.close_commutative();
        let report = raw.validate().unwrap();
        assert!(!report.passed());
        let e4: Vec<_> = report.by_axiom(Axiom::E4).collect();
        assert_eq!(e4.len(), 1);
        assert_eq!(e4[0].witness, vec!["1".to_string()]);
    }

    #[test]
    fn three_chain_passes() {
        let mut raw = RawEffectTable::new(names(&["0", "1/2", "1"]), "0", "1").unwrap();
        for (x, y, z) in [("0", "0", "0"), ("0", "1/2", "1/2"), ("0", "1", "1"), ("1/2", "1/2", "1")] {
            raw.define_named(x, y, z).unwrap();
        }
        raw.close_commutative();
        assert!(raw.validate().unwrap().passed());
    }

    #[test]
    fn structural_errors_come_before_axioms() {
        assert_eq!(
            RawEffectTable::new(names(&["0", "0"]), "0", "0").unwrap_err(),
            Error::DuplicateElement("0".into())
        );
        assert_eq!(
            RawEffectTable::new(names(&["0", "1"]), "0", "0").unwrap_err(),
            Error::ZeroEqualsOne
        );
        assert!(matches!(
            RawEffectTable::new(names(&["0", "1"]), "0", "2"),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn non_commutative_table_reports_e1() {
        let mut raw = RawEffectTable::new(names(&["0", "a", "1"]), "0", "1").unwrap();
        raw.define_named("0", "a", "a").unwrap();
        raw.define_named("a", "0", "1").unwrap();
        raw.close_commutative();
        let report = raw.validate().unwrap();
        assert!(report.by_axiom(Axiom::E1).count() > 0);
    }

    #[test]
    fn validation_cap_is_enforced() {
        let raw = library::lukasiewicz_chain(5).unwrap().base().to_raw();
        assert!(matches!(
            raw.validate_with_cap(4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn dual_is_an_involution() {
        let fig1 = library::fig1();
        assert!(fig1.dual().dual() == fig1);
        let l3 = library::lukasiewicz_chain(3).unwrap();
        let dual = l3.dual();
        assert!(dual.validate().passed());
        for x in 0..3 {
            assert_eq!(dual.q(x), l3.d(x));
            for y in 0..3 {
                assert_eq!(dual.leq(x, y), l3.leq(y, x));
            }
        }
    }

    #[test]
    fn dual_of_two_chain_swaps_bounds() {
        let b = library::lukasiewicz_chain(2).unwrap();
        let dual = b.dual();
        assert_eq!(dual.zero(), b.one());
        assert_eq!(dual.one(), b.zero());
        assert!(dual.validate().passed());
    }
}
