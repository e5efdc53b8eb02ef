use std::collections::HashMap;
use std::fmt::Write as _;

use super::lexer::{arrow, check_name, name_list, sections, Section};
use crate::algebra::{
    lattice_q_maps, validate_q_axioms, AlgebraMap, EffectAlgebra, EffectOps, QEffect, QEffectAlgebra, RawEffectTable,
    ValidationReport,
};
use crate::error::{Error, Result};
use crate::rational::UnitRational;
use crate::states::{Provenance, StateSet, StateVector};
use crate::tense::Frame;

fn unique_keys<'a>(secs: &'a [Section], allowed: &[&str]) -> Result<HashMap<&'a str, &'a Section>> {
    let mut out = HashMap::new();
    for s in secs {
        if !allowed.contains(&s.key.as_str()) {
            return Err(Error::parse(s.line, format!("unknown key `{}`", s.key)));
        }
        if out.insert(s.key.as_str(), s).is_some() {
            return Err(Error::parse(s.line, format!("key `{}` given twice", s.key)));
        }
    }
    Ok(out)
}

fn lookup(names: &[String], line: usize, name: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::parse(line, format!("undeclared element `{name}`")))
}

/// Resolves `x->y` entries into a total map `dom -> cod`.
fn resolve_arrows(label: &str, section_line: usize, entries: &[(usize, String, String)], dom: &[String], cod: &[String]) -> Result<Vec<usize>> {
    let mut table = vec![None; dom.len()];
    for (line, x, y) in entries {
        let (xi, yi) = (lookup(dom, *line, x)?, lookup(cod, *line, y)?);
        if table[xi].is_some_and(|old| old != yi) {
            return Err(Error::parse(*line, format!("`{label}` maps `{x}` twice")));
        }
        table[xi] = Some(yi);
    }
    table
        .iter()
        .zip(dom)
        .map(|(v, name)| v.ok_or_else(|| Error::parse(section_line, format!("`{label}` has no image for `{name}`"))))
        .collect()
}

fn arrow_entries(sec: &Section) -> Result<Vec<(usize, String, String)>> {
    sec.entries(&[',', ';'])
        .into_iter()
        .map(|(line, e)| arrow(line, &e).map(|(a, b)| (line, a, b)))
        .collect()
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).map_or(t, str::trim)
}

/// Splits `x+y=z`, where operands containing `+` are parenthesized.
fn sum_entry(line: usize, entry: &str) -> Result<(String, String, String)> {
    let bad = || Error::parse(line, format!("expected `x+y=z`, found `{entry}`"));
    let (lhs, rhs) = entry.rsplit_once('=').ok_or_else(bad)?;
    let lhs = lhs.trim();
    let (x, rest) = if let Some(inner) = lhs.strip_prefix('(') {
        let close = inner.find(')').ok_or_else(bad)?;
        (inner[..close].trim(), inner[close + 1..].trim_start())
    } else {
        let plus = lhs.find('+').ok_or_else(bad)?;
        (lhs[..plus].trim(), &lhs[plus..])
    };
    let y = rest.strip_prefix('+').ok_or_else(bad)?;
    let (x, y, z) = (x.to_string(), strip_parens(y).to_string(), strip_parens(rhs).to_string());
    if x.is_empty() || y.is_empty() || z.is_empty() {
        return Err(bad());
    }
    Ok((x, y, z))
}

/// A parsed `.alg` file before any axiom is checked.
#[derive(Clone, Debug)]
pub struct AlgebraDocument {
    pub raw: RawEffectTable,
    /// `q` and `d` as given; `None` when the file leaves them to the lattice.
    pub qd: Option<(Vec<usize>, Vec<usize>)>,
}

impl AlgebraDocument {
    /// (E1)–(E4) on the sum table.
    pub fn effect_report(&self) -> Result<ValidationReport> {
        self.raw.validate()
    }

    /// Builds the algebra without enforcing (Q1)–(Q5) and returns their
    /// report alongside. The effect axioms must hold.
    pub fn load(&self) -> Result<(QEffectAlgebra, ValidationReport)> {
        let effect = self.effect_report()?;
        if !effect.passed() {
            return Err(Error::InvalidAlgebra(effect.summary()));
        }
        let base = EffectAlgebra::from_raw(self.raw.clone())?;
        let (q, d) = match &self.qd {
            Some(qd) => qd.clone(),
            None => lattice_q_maps(&base).ok_or_else(|| {
                Error::Precondition("no q/d given and the algebra is not lattice ordered".into())
            })?,
        };
        let report = validate_q_axioms(&base, &q, &d)?;
        Ok((QEffectAlgebra::new_unchecked(base, q, d), report))
    }

    /// Builds the algebra and fails unless every axiom holds.
    pub fn build(&self) -> Result<QEffectAlgebra> {
        let (alg, report) = self.load()?;
        if !report.passed() {
            return Err(Error::InvalidAlgebra(report.summary()));
        }
        Ok(alg)
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraDocument> {
    let secs = sections(text)?;
    if secs.is_empty() {
        return Err(Error::parse(1, "no algebra defined"));
    }
    let keys = unique_keys(&secs, &["elements", "zero", "one", "sum", "q", "d"])?;
    let first = secs[0].line;
    let need = |k: &str| keys.get(k).copied().ok_or_else(|| Error::parse(first, format!("missing `{k}:`")));
    let elements = need("elements")?;
    let names = name_list(elements)?;
    if names.is_empty() {
        return Err(Error::parse(elements.line, "no algebra defined"));
    }
    let (zero, one) = (need("zero")?, need("one")?);
    for s in [zero, one] {
        lookup(&names, s.line, &s.value())?;
    }
    let mut raw = RawEffectTable::new(names.clone(), &zero.value(), &one.value())
        .map_err(|e| Error::parse(zero.line, e.to_string()))?;
    if let Some(sum) = keys.get("sum") {
        for (line, entry) in sum.entries(&[';']) {
            let (x, y, z) = sum_entry(line, &entry)?;
            let (x, y, z) = (lookup(&names, line, &x)?, lookup(&names, line, &y)?, lookup(&names, line, &z)?);
            raw.define(x, y, z).map_err(|e| Error::parse(line, e.to_string()))?;
        }
    }
    raw.close_commutative();
    let qd = match (keys.get("q"), keys.get("d")) {
        (None, None) => None,
        (Some(q), Some(d)) => Some((
            resolve_arrows("q", q.line, &arrow_entries(q)?, &names, &names)?,
            resolve_arrows("d", d.line, &arrow_entries(d)?, &names, &names)?,
        )),
        (Some(s), None) | (None, Some(s)) => {
            return Err(Error::parse(s.line, "`q:` and `d:` must be given together"));
        }
    };
    Ok(AlgebraDocument { raw, qd })
}

fn operand(name: &str) -> String {
    if name.contains('+') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

fn write_arrows(out: &mut String, label: &str, names: &[String], table: &[usize]) {
    let body: Vec<String> = table.iter().enumerate().map(|(x, &y)| format!("{}->{}", names[x], names[y])).collect();
    let _ = writeln!(out, "{label}: {}", body.join(", "));
}

/// Serializes in declaration order, one sum per line with `x <= y` by index.
pub fn write_algebra(alg: &QEffectAlgebra) -> String {
    let names = alg.names();
    let base = alg.base();
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", names.join(", "));
    let _ = writeln!(out, "zero: {}", names[base.zero()]);
    let _ = writeln!(out, "one: {}", names[base.one()]);
    out.push_str("sum:\n");
    for (x, y, z) in base.sum_entries() {
        let _ = writeln!(out, "  {}+{}={};", operand(&names[x]), operand(&names[y]), names[z]);
    }
    write_arrows(&mut out, "q", names, alg.qmap());
    write_arrows(&mut out, "d", names, alg.dmap());
    out
}

/// `S:`, optional `T:` (defaults to `S`), `R:` pairs `s~t`.
pub fn parse_frame(text: &str) -> Result<Frame> {
    let secs = sections(text)?;
    let keys = unique_keys(&secs, &["S", "T", "R"])?;
    let s_sec = keys.get("S").ok_or_else(|| Error::parse(1, "missing `S:`"))?;
    let s = name_list(s_sec)?;
    let t = match keys.get("T") {
        Some(sec) => name_list(sec)?,
        None => s.clone(),
    };
    let mut r = vec![vec![false; t.len()]; s.len()];
    if let Some(sec) = keys.get("R") {
        for (line, pair) in sec.entries(&[',', ';']) {
            let (a, b) = pair
                .split_once('~')
                .ok_or_else(|| Error::parse(line, format!("expected `s~t`, found `{pair}`")))?;
            let a = s.iter().position(|n| n == a.trim()).ok_or_else(|| Error::parse(line, format!("unknown index `{}`", a.trim())))?;
            let b = t.iter().position(|n| n == b.trim()).ok_or_else(|| Error::parse(line, format!("unknown index `{}`", b.trim())))?;
            r[a][b] = true;
        }
    }
    Frame::new(s, t, r).map_err(|e| Error::parse(s_sec.line, e.to_string()))
}

pub fn write_frame(frame: &Frame) -> String {
    let mut out = format!("S: {}\n", frame.s.join(", "));
    if frame.s != frame.t {
        let _ = writeln!(out, "T: {}", frame.t.join(", "));
    }
    let pairs: Vec<String> = frame.pairs().into_iter().map(|(a, b)| format!("{}~{}", frame.s[a], frame.t[b])).collect();
    let _ = writeln!(out, "R: {}", pairs.join(", "));
    out
}

/// One labelled `x->y` list of a `.map` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub label: String,
    pub line: usize,
    pub arrows: Vec<(usize, String, String)>,
}

/// A `.map` file: `algebra:` (or `source:` and `target:`) and labelled maps.
///
/// Every map runs from source to target except `g`, which runs back.
/// Tense structures use labels `G` and `H` on a single algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDocument {
    pub source: String,
    pub target: String,
    pub maps: Vec<NamedMap>,
}

impl MapDocument {
    pub fn get(&self, label: &str) -> Option<&NamedMap> {
        self.maps.iter().find(|m| m.label == label)
    }

    /// `true` for a map running from target back to source.
    pub fn is_reverse(label: &str) -> bool {
        label == "g"
    }

    /// Resolves `label` against the element names of its domain and codomain.
    pub fn resolve(&self, label: &str, source: &[String], target: &[String]) -> Result<AlgebraMap> {
        let m = self.get(label).ok_or_else(|| Error::Precondition(format!("map file has no `{label}:`")))?;
        let (dom, cod) = if Self::is_reverse(label) { (target, source) } else { (source, target) };
        Ok(AlgebraMap::new(resolve_arrows(label, m.line, &m.arrows, dom, cod)?))
    }
}

pub fn parse_maps(text: &str) -> Result<MapDocument> {
    let secs = sections(text)?;
    let mut header: HashMap<&str, (usize, String)> = HashMap::new();
    let mut maps: Vec<NamedMap> = Vec::new();
    for s in &secs {
        match s.key.as_str() {
            "algebra" | "source" | "target" => {
                let v = s.value();
                check_name(s.line, &v)?;
                if header.insert(s.key.as_str(), (s.line, v)).is_some() {
                    return Err(Error::parse(s.line, format!("key `{}` given twice", s.key)));
                }
            }
            label => {
                if maps.iter().any(|m| m.label == label) {
                    return Err(Error::parse(s.line, format!("map `{label}` given twice")));
                }
                maps.push(NamedMap {
                    label: label.to_string(),
                    line: s.line,
                    arrows: arrow_entries(s)?,
                });
            }
        }
    }
    let (source, target) = match (header.get("algebra"), header.get("source"), header.get("target")) {
        (Some((_, a)), None, None) => (a.clone(), a.clone()),
        (None, Some((_, s)), Some((_, t))) => (s.clone(), t.clone()),
        (Some((line, _)), _, _) => return Err(Error::parse(*line, "`algebra:` excludes `source:`/`target:`")),
        _ => return Err(Error::parse(1, "missing `algebra:` (or `source:` and `target:`)")),
    };
    if maps.is_empty() {
        return Err(Error::parse(1, "no maps defined"));
    }
    Ok(MapDocument { source, target, maps })
}

/// Serializes maps given as tables over the named algebras.
pub fn write_maps(source: (&str, &[String]), target: (&str, &[String]), maps: &[(&str, &AlgebraMap)]) -> String {
    let mut out = if source.0 == target.0 {
        format!("algebra: {}\n", source.0)
    } else {
        format!("source: {}\ntarget: {}\n", source.0, target.0)
    };
    for (label, m) in maps {
        let (dom, cod) = if MapDocument::is_reverse(label) { (target.1, source.1) } else { (source.1, target.1) };
        let body: Vec<String> = (0..m.len()).map(|x| format!("{}->{}", dom[x], cod[m.apply(x)])).collect();
        let _ = writeln!(out, "{label}: {}", body.join(", "));
    }
    out
}

/// A `.states` file: `algebra:`, optional `elements:` column order, then
/// one labelled row of rationals per state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatesDocument {
    pub algebra: String,
    pub columns: Option<(usize, Vec<String>)>,
    pub rows: Vec<(usize, String, Vec<UnitRational>)>,
}

impl StatesDocument {
    /// Reorders columns to the algebra's element order and classifies rows.
    pub fn resolve<A: QEffect + ?Sized>(&self, alg: &A) -> Result<StateSet> {
        let names: Vec<String> = (0..alg.size()).map(|x| alg.element_name(x)).collect();
        let perm: Vec<usize> = match &self.columns {
            None => (0..names.len()).collect(),
            Some((line, cols)) => {
                if cols.len() != names.len() {
                    return Err(Error::parse(*line, format!("{} columns for {} elements", cols.len(), names.len())));
                }
                // perm[x] = column holding element x
                let mut perm = vec![usize::MAX; names.len()];
                for (c, name) in cols.iter().enumerate() {
                    perm[lookup(&names, *line, name)?] = c;
                }
                perm
            }
        };
        let mut members = Vec::new();
        for (line, label, row) in &self.rows {
            if row.len() != names.len() {
                return Err(Error::parse(*line, format!("state `{label}` has {} values, expected {}", row.len(), names.len())));
            }
            members.push(StateVector::classified(alg, perm.iter().map(|&c| row[c].clone()).collect()));
        }
        Ok(StateSet::new(members, Provenance::User))
    }
}

pub fn parse_states(text: &str) -> Result<StatesDocument> {
    let secs = sections(text)?;
    let mut algebra = None;
    let mut columns = None;
    let mut rows: Vec<(usize, String, Vec<UnitRational>)> = Vec::new();
    for s in &secs {
        match s.key.as_str() {
            "algebra" if algebra.is_none() => {
                let v = s.value();
                check_name(s.line, &v)?;
                algebra = Some(v);
            }
            "elements" if columns.is_none() => columns = Some((s.line, name_list(s)?)),
            "algebra" | "elements" => return Err(Error::parse(s.line, format!("key `{}` given twice", s.key))),
            label => {
                if rows.iter().any(|(_, l, _)| l == label) {
                    return Err(Error::parse(s.line, format!("state `{label}` given twice")));
                }
                let values = s
                    .entries(&[',', ' ', '\t'])
                    .into_iter()
                    .map(|(line, v)| v.parse::<UnitRational>().map_err(|e| Error::parse(line, e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                rows.push((s.line, label.to_string(), values));
            }
        }
    }
    let algebra = algebra.ok_or_else(|| Error::parse(1, "missing `algebra:`"))?;
    Ok(StatesDocument { algebra, columns, rows })
}

pub fn write_states<A: QEffect + ?Sized>(algebra: &str, alg: &A, set: &StateSet) -> String {
    let names: Vec<String> = (0..alg.size()).map(|x| alg.element_name(x)).collect();
    let mut out = format!("algebra: {algebra}\nelements: {}\n", names.join(", "));
    for (i, s) in set.iter().enumerate() {
        let vals: Vec<String> = s.values.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "s{i}: {}", vals.join(", "));
    }
    out
}
