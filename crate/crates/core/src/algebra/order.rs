use serde::Serialize;

use super::{EffectOps, FinitePoset};

/// The induced order `x <= y iff x + z = y for some z`, as a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderRelation {
    size: usize,
    matrix: Vec<bool>,
}

impl OrderRelation {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.matrix[x * self.size + y]
    }

    pub fn converse(&self) -> OrderRelation {
        let n = self.size;
        OrderRelation {
            size: n,
            matrix: (0..n * n).map(|i| self.matrix[(i % n) * n + i / n]).collect(),
        }
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| self.get(x, x))
            && (0..n).all(|x| (0..n).all(|y| x == y || !(self.get(x, y) && self.get(y, x))))
            && (0..n).all(|x| {
                (0..n).all(|y| !self.get(x, y) || (0..n).all(|z| !self.get(y, z) || self.get(x, z)))
            })
    }

    /// `Some(b)` when `b` lies below every element.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.size).find(|&b| (0..self.size).all(|x| self.get(b, x)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.size).find(|&t| (0..self.size).all(|x| self.get(x, t)))
    }

    pub fn is_total(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.get(x, y) || self.get(y, x)))
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y
                    && self.get(x, y)
                    && !(0..n).any(|z| z != x && z != y && self.get(x, z) && self.get(z, y))
                {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

impl FinitePoset for OrderRelation {
    fn size(&self) -> usize {
        self.size
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        self.get(a, b)
    }
    fn element_name(&self, a: usize) -> String {
        a.to_string()
    }
}

/// Derives the order from the partial sum alone (not from a cached matrix).
pub fn derive_order<A: EffectOps>(alg: &A) -> OrderRelation {
    let n = alg.size();
    let mut matrix = vec![false; n * n];
    for x in 0..n {
        for z in 0..n {
            if let Some(y) = alg.sum(x, z) {
                matrix[x * n + y] = true;
            }
        }
    }
    OrderRelation { size: n, matrix }
}

/// The greatest common lower bound, if the lower-bound set has a maximum.
pub fn meet<P: FinitePoset + ?Sized>(p: &P, a: usize, b: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..p.size()).filter(|&z| p.leq(z, a) && p.leq(z, b)).collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&z| p.leq(z, m)))
}

/// The least common upper bound, if the upper-bound set has a minimum.
pub fn join<P: FinitePoset + ?Sized>(p: &P, a: usize, b: usize) -> Option<usize> {
    let upper: Vec<usize> = (0..p.size()).filter(|&z| p.leq(a, z) && p.leq(b, z)).collect();
    upper
        .iter()
        .copied()
        .find(|&m| upper.iter().all(|&z| p.leq(m, z)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::library;

    #[test]
    fn fig1_order_examples() {
        let fig1 = library::fig1();
        let ord = derive_order(&fig1);
        let i = |s: &str| fig1.index_of(s).unwrap();
        assert!(ord.get(i("b"), i("a+b")));
        assert!(!ord.get(i("a"), i("c")));
        assert!(ord.is_partial_order());
        assert_eq!(ord.bottom(), Some(i("0")));
        assert_eq!(ord.top(), Some(i("1")));
        for x in 0..fig1.size() {
            assert!(ord.get(i("0"), x) && ord.get(x, i("1")));
        }
        assert_eq!(join(&fig1, i("a"), i("b")), None);
        assert_eq!(meet(&fig1, i("a"), i("b")), Some(i("0")));
    }

    #[test]
    fn fig1_hasse_diagram_matches_figure() {
        let fig1 = library::fig1();
        let ord = derive_order(&fig1);
        let mut edges: Vec<(String, String)> = ord
            .covers()
            .into_iter()
            .map(|(x, y)| (fig1.name(x).to_string(), fig1.name(y).to_string()))
            .collect();
        edges.sort();
        let mut expected: Vec<(String, String)> = [
            ("0", "a"), ("0", "c"), ("0", "b"), ("5b", "1"), ("a+b", "1"), ("b+c", "1"),
            ("a", "5b"), ("c", "5b"), ("a", "a+b"), ("c", "b+c"), ("b", "2b"), ("b", "a+b"),
            ("b", "b+c"), ("2b", "3b"), ("3b", "4b"), ("4b", "5b"),
        ]
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
        expected.sort();
        assert_eq!(edges, expected);
    }

    #[test]
    fn dual_order_is_converse() {
        let fig1 = library::fig1();
        assert_eq!(derive_order(&fig1.dual()), derive_order(&fig1).converse());
    }
}
