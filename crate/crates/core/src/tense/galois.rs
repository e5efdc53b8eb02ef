use serde::Serialize;

use crate::algebra::{join, meet, AlgebraMap, FinitePoset, QEffect};
use crate::report::Verdict;
use crate::states::Tri;

/// Witness lists are truncated to this many entries.
const MAX_WITNESSES: usize = 16;

/// Which elements a certification scan quantifies over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    Exhaustive,
    /// Elements of the source and target carriers to quantify over.
    Sampled { left: Vec<usize>, right: Vec<usize> },
}

impl Scope {
    pub fn is_sampled(&self) -> bool {
        matches!(self, Scope::Sampled { .. })
    }

    pub(crate) fn left(&self, n: usize) -> Vec<usize> {
        match self {
            Scope::Exhaustive => (0..n).collect(),
            Scope::Sampled { left, .. } => left.clone(),
        }
    }

    pub(crate) fn right(&self, n: usize) -> Vec<usize> {
        match self {
            Scope::Exhaustive => (0..n).collect(),
            Scope::Sampled { right, .. } => right.clone(),
        }
    }

    /// The same sample on both sides, for endomaps.
    pub fn sampled_endo(elements: Vec<usize>) -> Self {
        Scope::Sampled {
            left: elements.clone(),
            right: elements,
        }
    }
}

/// `f: E₁ → E₂` left adjoint to `g: E₂ → E₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisPair {
    pub f: AlgebraMap,
    pub g: AlgebraMap,
    pub connection: Tri,
    pub q_connection: Tri,
}

impl GaloisPair {
    pub fn new(f: AlgebraMap, g: AlgebraMap) -> Self {
        GaloisPair {
            f,
            g,
            connection: Tri::Unchecked,
            q_connection: Tri::Unchecked,
        }
    }

    pub fn identity(n: usize) -> Self {
        GaloisPair::new(AlgebraMap::identity(n), AlgebraMap::identity(n))
    }
}

/// Verdicts of the three equivalent characterizations of a Galois connection.
#[derive(Clone, Debug, Serialize)]
pub struct GaloisReport {
    /// `f(a) <= b` iff `a <= g(b)`.
    pub adjunction: Verdict,
    /// Both maps monotone, `id <= g∘f`, `f∘g <= id`.
    pub unit_counit: Verdict,
    /// `g(b) = max{x | f(x) <= b}` and `f(a) = min{y | a <= g(y)}`.
    pub extremal: Verdict,
    pub sampled: bool,
}

impl GaloisReport {
    /// Whether the three conditions returned the same pass/fail answer.
    pub fn agree(&self) -> bool {
        let a = self.adjunction.is_certified();
        a == self.unit_counit.is_certified() && a == self.extremal.is_certified()
    }

    pub fn is_connection(&self) -> bool {
        self.adjunction.is_certified() && self.unit_counit.is_certified() && self.extremal.is_certified()
    }

    /// Combined verdict; a clean sampled run is only `Partial`.
    pub fn verdict(&self) -> Verdict {
        let v = self
            .adjunction
            .clone()
            .combine(self.unit_counit.clone())
            .combine(self.extremal.clone());
        if v.is_certified() && self.sampled {
            Verdict::Partial("sampled elements only".into())
        } else {
            v
        }
    }
}

fn push(w: &mut Vec<String>, msg: impl FnOnce() -> String) {
    if w.len() < MAX_WITNESSES {
        w.push(msg());
    }
}

/// Checks all three conditions independently over the given scope.
pub fn check_galois_connection<P1, P2>(p1: &P1, p2: &P2, f: &AlgebraMap, g: &AlgebraMap, scope: &Scope) -> GaloisReport
where
    P1: FinitePoset + ?Sized,
    P2: FinitePoset + ?Sized,
{
    let xs = scope.left(p1.size());
    let ys = scope.right(p2.size());
    let (n1, n2) = (|a: usize| p1.element_name(a), |b: usize| p2.element_name(b));

    let mut w1 = Vec::new();
    for &a in &xs {
        for &b in &ys {
            let lhs = p2.leq(f.apply(a), b);
            let rhs = p1.leq(a, g.apply(b));
            if lhs != rhs {
                push(&mut w1, || format!("f({}) <= {} is {lhs} but {} <= g({}) is {rhs}", n1(a), n2(b), n1(a), n2(b)));
            }
        }
    }

    let mut w2 = Vec::new();
    for &a in &xs {
        for &c in &xs {
            if p1.leq(a, c) && !p2.leq(f.apply(a), f.apply(c)) {
                push(&mut w2, || format!("f not monotone at ({}, {})", n1(a), n1(c)));
            }
        }
        if !p1.leq(a, g.apply(f.apply(a))) {
            push(&mut w2, || format!("{} is not below g(f({}))", n1(a), n1(a)));
        }
    }
    for &b in &ys {
        for &c in &ys {
            if p2.leq(b, c) && !p1.leq(g.apply(b), g.apply(c)) {
                push(&mut w2, || format!("g not monotone at ({}, {})", n2(b), n2(c)));
            }
        }
        if !p2.leq(f.apply(g.apply(b)), b) {
            push(&mut w2, || format!("f(g({})) is not below {}", n2(b), n2(b)));
        }
    }

    let mut w3 = Vec::new();
    for &b in &ys {
        let gb = g.apply(b);
        let below: Vec<usize> = xs.iter().copied().filter(|&x| p2.leq(f.apply(x), b)).collect();
        let is_max = p2.leq(f.apply(gb), b) && below.iter().all(|&x| p1.leq(x, gb));
        if !is_max {
            let actual = below.iter().copied().find(|&m| below.iter().all(|&x| p1.leq(x, m)));
            push(&mut w3, || match actual {
                Some(m) => format!("max{{x | f(x) <= {}}} = {} but g({}) = {}", n2(b), n1(m), n2(b), n1(gb)),
                None => format!("{{x | f(x) <= {}}} has no maximum", n2(b)),
            });
        }
    }
    for &a in &xs {
        let fa = f.apply(a);
        let above: Vec<usize> = ys.iter().copied().filter(|&y| p1.leq(a, g.apply(y))).collect();
        let is_min = p1.leq(a, g.apply(fa)) && above.iter().all(|&y| p2.leq(fa, y));
        if !is_min {
            let actual = above.iter().copied().find(|&m| above.iter().all(|&y| p2.leq(m, y)));
            push(&mut w3, || match actual {
                Some(m) => format!("min{{y | {} <= g(y)}} = {} but f({}) = {}", n1(a), n2(m), n1(a), n2(fa)),
                None => format!("{{y | {} <= g(y)}} has no minimum", n1(a)),
            });
        }
    }

    GaloisReport {
        adjunction: Verdict::from_witnesses(w1),
        unit_counit: Verdict::from_witnesses(w2),
        extremal: Verdict::from_witnesses(w3),
        sampled: scope.is_sampled(),
    }
}

/// `f` preserves every existing binary join, `g` every existing binary meet,
/// and `g∘f∘g = g`, `f∘g∘f = f`. Cubic in the carrier size.
pub fn check_adjoint_identities<P1, P2>(p1: &P1, p2: &P2, f: &AlgebraMap, g: &AlgebraMap) -> Verdict
where
    P1: FinitePoset + ?Sized,
    P2: FinitePoset + ?Sized,
{
    let mut w = Vec::new();
    let (s1, s2) = (p1.size(), p2.size());
    for a in 0..s1 {
        for c in a + 1..s1 {
            if let Some(j) = join(p1, a, c) {
                if join(p2, f.apply(a), f.apply(c)) != Some(f.apply(j)) {
                    push(&mut w, || format!("f does not preserve {} ∨ {}", p1.element_name(a), p1.element_name(c)));
                }
            }
        }
        if f.apply(g.apply(f.apply(a))) != f.apply(a) {
            push(&mut w, || format!("f∘g∘f differs from f at {}", p1.element_name(a)));
        }
    }
    for b in 0..s2 {
        for c in b + 1..s2 {
            if let Some(m) = meet(p2, b, c) {
                if meet(p1, g.apply(b), g.apply(c)) != Some(g.apply(m)) {
                    push(&mut w, || format!("g does not preserve {} ∧ {}", p2.element_name(b), p2.element_name(c)));
                }
            }
        }
        if g.apply(f.apply(g.apply(b))) != g.apply(b) {
            push(&mut w, || format!("g∘f∘g differs from g at {}", p2.element_name(b)));
        }
    }
    Verdict::from_witnesses(w)
}

/// The unique right adjoint of `f`, when it exists: `g(b) = max{x | f(x) <= b}`.
pub fn right_adjoint<P1, P2>(p1: &P1, p2: &P2, f: &AlgebraMap) -> Option<AlgebraMap>
where
    P1: FinitePoset + ?Sized,
    P2: FinitePoset + ?Sized,
{
    let mut table = Vec::with_capacity(p2.size());
    for b in 0..p2.size() {
        let below: Vec<usize> = (0..p1.size()).filter(|&x| p2.leq(f.apply(x), b)).collect();
        let m = below.iter().copied().find(|&m| below.iter().all(|&x| p1.leq(x, m)))?;
        // the preimage must be the whole principal down-set of m
        if (0..p1.size()).any(|x| p1.leq(x, m) && !p2.leq(f.apply(x), b)) {
            return None;
        }
        table.push(m);
    }
    Some(AlgebraMap::new(table))
}

/// (GQ1) on `f` over `E₁` and (GQ2) on `g` over `E₂`, restricted to the scope.
pub fn check_q_transport<A, B>(e1: &A, e2: &B, f: &AlgebraMap, g: &AlgebraMap, scope: &Scope) -> (Verdict, Verdict)
where
    A: QEffect + ?Sized,
    B: QEffect + ?Sized,
{
    let mut w1 = Vec::new();
    for x in scope.left(e1.size()) {
        if f.apply(e1.q(x)) != e2.q(f.apply(x)) {
            push(&mut w1, || format!("f(q({0})) != q(f({0}))", e1.element_name(x)));
        }
        if f.apply(e1.d(x)) != e2.d(f.apply(x)) {
            push(&mut w1, || format!("f(d({0})) != d(f({0}))", e1.element_name(x)));
        }
    }
    let mut w2 = Vec::new();
    for y in scope.right(e2.size()) {
        if g.apply(e2.q(y)) != e1.q(g.apply(y)) {
            push(&mut w2, || format!("g(q({0})) != q(g({0}))", e2.element_name(y)));
        }
        if g.apply(e2.d(y)) != e1.d(g.apply(y)) {
            push(&mut w2, || format!("g(d({0})) != d(g({0}))", e2.element_name(y)));
        }
    }
    (Verdict::from_witnesses(w1), Verdict::from_witnesses(w2))
}

#[derive(Clone, Debug, Serialize)]
pub struct QConnectionReport {
    pub galois: GaloisReport,
    pub gq1: Verdict,
    pub gq2: Verdict,
}

impl QConnectionReport {
    pub fn verdict(&self) -> Verdict {
        self.galois.verdict().combine(self.gq1.clone()).combine(self.gq2.clone())
    }

    pub fn is_q_connection(&self) -> bool {
        self.galois.is_connection() && self.gq1.is_certified() && self.gq2.is_certified()
    }
}

/// Certifies `pair` as a Galois q-connection and records the flags on it.
pub fn check_galois_q_connection<A, B>(e1: &A, e2: &B, pair: &mut GaloisPair, scope: &Scope) -> QConnectionReport
where
    A: QEffect + ?Sized,
    B: QEffect + ?Sized,
{
    let galois = check_galois_connection(e1, e2, &pair.f, &pair.g, scope);
    let (gq1, gq2) = check_q_transport(e1, e2, &pair.f, &pair.g, scope);
    let report = QConnectionReport { galois, gq1, gq2 };
    pair.connection = report.galois.is_connection().into();
    pair.q_connection = report.is_q_connection().into();
    report
}

/// `' ∘ m ∘ '` for a map `m: A → B`.
pub fn conjugate<A, B>(a: &A, b: &B, m: &AlgebraMap) -> AlgebraMap
where
    A: QEffect + ?Sized,
    B: QEffect + ?Sized,
{
    AlgebraMap::from_fn(a.size(), |x| b.supplement(m.apply(a.supplement(x))))
}

/// `(ḡ, f̄)` with `ḡ = '∘g∘'` as the left adjoint from `E₂` to `E₁`, re-certified.
pub fn bar_maps<A, B>(e1: &A, e2: &B, pair: &GaloisPair) -> (GaloisPair, QConnectionReport)
where
    A: QEffect + ?Sized,
    B: QEffect + ?Sized,
{
    let mut bar = GaloisPair::new(conjugate(e2, e1, &pair.g), conjugate(e1, e2, &pair.f));
    let report = check_galois_q_connection(e2, e1, &mut bar, &Scope::Exhaustive);
    (bar, report)
}

/// The powerset lattice of an `n`-element set, elements as bitmasks.
#[derive(Clone, Debug)]
pub struct PowersetPoset {
    names: Vec<String>,
}

/// Largest base set accepted by [`PowersetPoset`].
pub const MAX_POWERSET_BASE: usize = 16;

impl PowersetPoset {
    pub fn new(names: Vec<String>) -> crate::Result<Self> {
        if names.len() > MAX_POWERSET_BASE {
            return Err(crate::Error::CapExceeded {
                what: "powerset base".into(),
                needed: names.len() as u128,
                cap: MAX_POWERSET_BASE as u128,
            });
        }
        Ok(PowersetPoset { names })
    }

    pub fn with_size(n: usize) -> crate::Result<Self> {
        PowersetPoset::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn base_size(&self) -> usize {
        self.names.len()
    }
}

impl FinitePoset for PowersetPoset {
    fn size(&self) -> usize {
        1 << self.names.len()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        a & !b == 0
    }

    fn element_name(&self, a: usize) -> String {
        let parts: Vec<&str> = (0..self.names.len())
            .filter(|i| a >> i & 1 == 1)
            .map(|i| self.names[i].as_str())
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// `f_R(X) = {b | ∃x∈X, xRb}` and `g_R(Y) = {a | ∀b, aRb ⇒ b∈Y}`, certified
/// exhaustively. `r[a][b]` is `aRb`.
pub fn powerset_galois(a: &PowersetPoset, b: &PowersetPoset, r: &[Vec<bool>]) -> (GaloisPair, GaloisReport) {
    let image: Vec<usize> = (0..a.base_size())
        .map(|x| (0..b.base_size()).filter(|&y| r[x][y]).fold(0, |m, y| m | 1 << y))
        .collect();
    let f = AlgebraMap::from_fn(a.size(), |set| {
        (0..a.base_size())
            .filter(|x| set >> x & 1 == 1)
            .fold(0, |m, x| m | image[x])
    });
    let g = AlgebraMap::from_fn(b.size(), |set| {
        (0..a.base_size())
            .filter(|&x| image[x] & !set == 0)
            .fold(0, |m, x| m | 1 << x)
    });
    let mut pair = GaloisPair::new(f, g);
    let report = check_galois_connection(a, b, &pair.f, &pair.g, &Scope::Exhaustive);
    pair.connection = report.is_connection().into();
    (pair, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{library, EffectOps};

    #[test]
    fn identity_pair_passes_everywhere() {
        let f = library::fig1();
        let mut pair = GaloisPair::identity(f.size());
        let r = check_galois_q_connection(&f, &f, &mut pair, &Scope::Exhaustive);
        assert!(r.is_q_connection() && r.galois.agree());
        assert_eq!(pair.q_connection, Tri::Yes);
        assert!(check_adjoint_identities(&f, &f, &pair.f, &pair.g).is_certified());
    }

    #[test]
    fn constant_zero_pair_fails_all_three() {
        let l3 = library::lukasiewicz_chain(3).unwrap();
        let z = AlgebraMap::constant(3, l3.zero());
        let r = check_galois_connection(&l3, &l3, &z, &z, &Scope::Exhaustive);
        assert!(r.agree());
        assert!(!r.adjunction.is_certified());
        assert!(!r.unit_counit.is_certified());
        assert!(!r.extremal.is_certified());
    }

    #[test]
    fn powerset_trivial_relations() {
        let a = PowersetPoset::with_size(3).unwrap();
        let empty = vec![vec![false; 3]; 3];
        let (p, r) = powerset_galois(&a, &a, &empty);
        assert!(r.is_connection());
        assert!(p.f.table().iter().all(|&v| v == 0));
        assert!(p.g.table().iter().all(|&v| v == 0b111));
        let id: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i == j).collect()).collect();
        let (p, _) = powerset_galois(&a, &a, &id);
        assert_eq!(p.f, AlgebraMap::identity(8));
        assert_eq!(p.g, AlgebraMap::identity(8));
        assert_eq!(a.element_name(0b101), "{0,2}");
    }

    #[test]
    fn fig1_g_halving_2b_breaks_gq2() {
        let fig = library::fig1();
        let i = |n: &str| fig.index_of(n).unwrap();
        let mut g = AlgebraMap::identity(fig.size()).table().to_vec();
        g[i("2b")] = i("b");
        let (_, gq2) = check_q_transport(&fig, &fig, &AlgebraMap::identity(fig.size()), &AlgebraMap::new(g), &Scope::Exhaustive);
        match gq2 {
            Verdict::Violated(w) => assert!(w.iter().any(|s| s.contains("2b") || s.contains("b"))),
            other => panic!("expected violation, got {other}"),
        }
    }

    #[test]
    fn right_adjoint_is_recovered() {
        let p = PowersetPoset::with_size(2).unwrap();
        let r = vec![vec![true, false], vec![true, true]];
        let (pair, _) = powerset_galois(&p, &p, &r);
        assert_eq!(right_adjoint(&p, &p, &pair.f).unwrap(), pair.g);
        // a non-monotone map whose preimages still have maxima
        let l3 = crate::algebra::library::lukasiewicz_chain(3).unwrap();
        assert_eq!(right_adjoint(&l3, &l3, &AlgebraMap::new(vec![1, 0, 2])), None);
    }
}
