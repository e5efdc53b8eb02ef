//! Exact vertex enumeration for small rational polytopes.

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// `a · x = b` or `a · x <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl Row {
    pub fn new(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        Row { coeffs, rhs }
    }
}

/// `{x | E x = e, A x <= a}` over the rationals.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    pub nvars: usize,
    pub equalities: Vec<Row>,
    pub inequalities: Vec<Row>,
}

/// Default bound on the number of candidate bases tried per system.
pub const DEFAULT_BASIS_CAP: u128 = 5_000_000;

/// Reduced row echelon form in place; returns the pivot columns, or `None`
/// if the augmented system is inconsistent.
fn rref(rows: &mut Vec<Row>, nvars: usize) -> Option<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].coeffs[c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r].coeffs[c];
        for v in rows[r].coeffs.iter_mut() {
            *v *= &inv;
        }
        rows[r].rhs *= &inv;
        for i in 0..rows.len() {
            if i == r || rows[i].coeffs[c].is_zero() {
                continue;
            }
            let factor = rows[i].coeffs[c].clone();
            for j in 0..nvars {
                let delta = &factor * &rows[r].coeffs[j];
                rows[i].coeffs[j] -= delta;
            }
            let delta = &factor * &rows[r].rhs;
            rows[i].rhs -= delta;
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row.rhs.is_zero()) {
        return None;
    }
    rows.truncate(r);
    Some(pivots)
}

/// Solves a square system; `None` when singular.
fn solve_square(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        let inv = BigRational::one() / &a[c][c];
        for j in c..n {
            a[c][j] *= &inv;
        }
        b[c] *= &inv;
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..n {
                let delta = &f * &a[c][j];
                a[i][j] -= delta;
            }
            let delta = &f * &b[c];
            b[i] -= delta;
        }
    }
    Some(b)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Advances `idx` to the next `k`-subset of `0..m` in lexicographic order.
fn next_subset(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        LinearSystem {
            nvars,
            equalities: Vec::new(),
            inequalities: Vec::new(),
        }
    }

    /// All vertices of a bounded system, sorted and deduplicated. An
    /// infeasible system has none.
    pub fn vertices(&self, basis_cap: u128) -> Result<Vec<Vec<BigRational>>> {
        let n = self.nvars;
        let mut eqs = self.equalities.clone();
        let Some(pivots) = (if eqs.is_empty() { Some(Vec::new()) } else { rref(&mut eqs, n) }) else {
            return Ok(Vec::new());
        };
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let f = free.len();

        // x_{pivot_i} = rhs_i - Σ_j coeff_{i, free_j} y_j
        let substitute = |row: &Row| -> Row {
            let mut coeffs: Vec<BigRational> = free.iter().map(|&c| row.coeffs[c].clone()).collect();
            let mut rhs = row.rhs.clone();
            for (i, &p) in pivots.iter().enumerate() {
                let a = &row.coeffs[p];
                if a.is_zero() {
                    continue;
                }
                rhs -= a * &eqs[i].rhs;
                for (j, &c) in free.iter().enumerate() {
                    coeffs[j] -= a * &eqs[i].coeffs[c];
                }
            }
            Row { coeffs, rhs }
        };

        let mut rows: Vec<Row> = Vec::new();
        for ineq in &self.inequalities {
            let mut row = substitute(ineq);
            match row.coeffs.iter().find(|c| !c.is_zero()).cloned() {
                None => {
                    if row.rhs.is_negative() {
                        return Ok(Vec::new());
                    }
                }
                Some(lead) => {
                    let scale = lead.abs();
                    for c in row.coeffs.iter_mut() {
                        *c /= &scale;
                    }
                    row.rhs /= &scale;
                    rows.push(row);
                }
            }
        }
        rows.sort_by(|a, b| (&a.coeffs, &a.rhs).cmp(&(&b.coeffs, &b.rhs)));
        // keep only the tightest bound per direction
        rows.dedup_by(|later, earlier| later.coeffs == earlier.coeffs);

        let feasible = |y: &[BigRational]| {
            rows.iter().all(|r| {
                let lhs: BigRational = r.coeffs.iter().zip(y).map(|(a, v)| a * v).sum();
                lhs <= r.rhs
            })
        };
        let lift = |y: &[BigRational]| -> Vec<BigRational> {
            let mut x = vec![BigRational::zero(); n];
            for (j, &c) in free.iter().enumerate() {
                x[c] = y[j].clone();
            }
            for (i, &p) in pivots.iter().enumerate() {
                let mut v = eqs[i].rhs.clone();
                for (j, &c) in free.iter().enumerate() {
                    v -= &eqs[i].coeffs[c] * &y[j];
                }
                x[p] = v;
            }
            x
        };

        let mut out: Vec<Vec<BigRational>> = Vec::new();
        if f == 0 {
            if feasible(&[]) {
                out.push(lift(&[]));
            }
            return Ok(out);
        }
        let m = rows.len();
        if m < f {
            return Err(Error::Precondition("polytope is unbounded".into()));
        }
        let needed = binomial(m, f);
        if needed > basis_cap {
            return Err(Error::CapExceeded {
                what: format!("candidate bases ({m} choose {f})"),
                needed,
                cap: basis_cap,
            });
        }
        let mut idx: Vec<usize> = (0..f).collect();
        loop {
            let a = idx.iter().map(|&i| rows[i].coeffs.clone()).collect();
            let b = idx.iter().map(|&i| rows[i].rhs.clone()).collect();
            if let Some(y) = solve_square(a, b) {
                if feasible(&y) {
                    out.push(lift(&y));
                }
            }
            if !next_subset(&mut idx, m) {
                break;
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn row(c: &[i64], r: i64) -> Row {
        Row::new(c.iter().map(|&v| q(v, 1)).collect(), q(r, 1))
    }

    #[test]
    fn unit_square_has_four_vertices() {
        let mut s = LinearSystem::new(2);
        s.inequalities = vec![row(&[-1, 0], 0), row(&[0, -1], 0), row(&[1, 0], 1), row(&[0, 1], 1)];
        let v = s.vertices(DEFAULT_BASIS_CAP).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.contains(&vec![q(1, 1), q(0, 1)]));
    }

    #[test]
    fn simplex_with_equality() {
        // x + y + z = 1, all nonnegative: three unit vectors
        let mut s = LinearSystem::new(3);
        s.equalities = vec![row(&[1, 1, 1], 1)];
        s.inequalities = vec![row(&[-1, 0, 0], 0), row(&[0, -1, 0], 0), row(&[0, 0, -1], 0)];
        let v = s.vertices(DEFAULT_BASIS_CAP).unwrap();
        assert_eq!(v.len(), 3);
        for p in &v {
            assert_eq!(p.iter().cloned().sum::<BigRational>(), q(1, 1));
        }
    }

    #[test]
    fn inconsistent_equalities_are_empty() {
        let mut s = LinearSystem::new(1);
        s.equalities = vec![row(&[1], 0), row(&[2], 1)];
        assert!(s.vertices(DEFAULT_BASIS_CAP).unwrap().is_empty());
    }

    #[test]
    fn fully_determined_point() {
        let mut s = LinearSystem::new(2);
        s.equalities = vec![row(&[1, 1], 1), row(&[1, -1], 0)];
        s.inequalities = vec![row(&[-1, 0], 0)];
        assert_eq!(s.vertices(DEFAULT_BASIS_CAP).unwrap(), vec![vec![q(1, 2), q(1, 2)]]);
        s.inequalities = vec![row(&[1, 0], 0)];
        assert!(s.vertices(DEFAULT_BASIS_CAP).unwrap().is_empty());
    }

    #[test]
    fn subsets_and_binomials() {
        let mut idx = vec![0, 1];
        let mut count = 1;
        while next_subset(&mut idx, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(32, 4), 35960);
    }
}
