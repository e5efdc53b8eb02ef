use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// A frame `(S, T, R)` with `R ⊆ S × T`; `r[s][t]` is `sRt`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Frame {
    pub s: Vec<String>,
    pub t: Vec<String>,
    pub r: Vec<Vec<bool>>,
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl Frame {
    pub fn new(s: Vec<String>, t: Vec<String>, r: Vec<Vec<bool>>) -> Result<Self> {
        if s.is_empty() || t.is_empty() {
            return Err(Error::Precondition("frame index sets must be non-empty".into()));
        }
        if r.len() != s.len() || r.iter().any(|row| row.len() != t.len()) {
            return Err(Error::Precondition(format!(
                "relation matrix must be {} x {}",
                s.len(),
                t.len()
            )));
        }
        Ok(Frame { s, t, r })
    }

    /// A time frame `(T, R)` on `1..=n`.
    pub fn time(r: Vec<Vec<bool>>) -> Result<Self> {
        let names = default_names(r.len());
        Frame::new(names.clone(), names, r)
    }

    /// A frame on `1..=|S|`, `1..=|T|` from 0-based pairs.
    pub fn from_pairs(s_len: usize, t_len: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut r = vec![vec![false; t_len]; s_len];
        for &(a, b) in pairs {
            if a >= s_len || b >= t_len {
                return Err(Error::Precondition(format!("pair ({a}, {b}) out of range")));
            }
            r[a][b] = true;
        }
        Frame::new(default_names(s_len), default_names(t_len), r)
    }

    /// A random time frame where each pair is related with probability `density`.
    pub fn random_time<R: Rng>(rng: &mut R, n: usize, density: f64) -> Result<Self> {
        let r = (0..n).map(|_| (0..n).map(|_| rng.gen_bool(density)).collect()).collect();
        Frame::time(r)
    }

    pub fn s_len(&self) -> usize {
        self.s.len()
    }

    pub fn t_len(&self) -> usize {
        self.t.len()
    }

    pub fn related(&self, s: usize, t: usize) -> bool {
        self.r[s][t]
    }

    pub fn is_time_frame(&self) -> bool {
        self.s == self.t
    }

    pub fn converse(&self) -> Frame {
        let r = (0..self.t_len())
            .map(|t| (0..self.s_len()).map(|s| self.r[s][t]).collect())
            .collect();
        Frame {
            s: self.t.clone(),
            t: self.s.clone(),
            r,
        }
    }

    /// Related pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.s_len())
            .flat_map(|s| (0..self.t_len()).filter(move |&t| self.r[s][t]).map(move |t| (s, t)))
            .collect()
    }

    pub fn is_reflexive(&self) -> bool {
        self.is_time_frame() && (0..self.s_len()).all(|i| self.r[i][i])
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_time_frame() && self.r == self.converse().r
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.s_len();
        self.is_time_frame()
            && (0..n).all(|a| {
                (0..n).all(|b| !self.r[a][b] || (0..n).all(|c| !self.r[b][c] || self.r[a][c]))
            })
    }

    /// Rows of `0`/`1`, one per element of `S`.
    pub fn matrix_lines(&self) -> Vec<String> {
        let width = self.s.iter().map(|n| n.len()).max().unwrap_or(1);
        let mut out = vec![format!("{:width$}  {}", "R", self.t.join(" "))];
        for (i, row) in self.r.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .zip(&self.t)
                .map(|(&b, name)| format!("{:>w$}", if b { "1" } else { "0" }, w = name.len()))
                .collect();
            out.push(format!("{:width$}  {}", self.s[i], cells.join(" ")));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn properties_of_small_relations() {
        let f = Frame::from_pairs(2, 2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(f.is_reflexive() && f.is_transitive() && !f.is_symmetric());
        assert_eq!(f.converse().pairs(), vec![(0, 0), (1, 0), (1, 1)]);
        assert_eq!(f.matrix_lines(), vec!["R  1 2", "1  1 1", "2  0 1"]);
    }

    #[test]
    fn empty_index_sets_are_rejected() {
        assert!(Frame::new(vec![], vec!["1".into()], vec![]).is_err());
        assert!(Frame::from_pairs(1, 1, &[(0, 1)]).is_err());
    }

    #[test]
    fn random_frames_are_reproducible() {
        let a = Frame::random_time(&mut ChaCha8Rng::seed_from_u64(7), 4, 0.5).unwrap();
        let b = Frame::random_time(&mut ChaCha8Rng::seed_from_u64(7), 4, 0.5).unwrap();
        assert_eq!(a, b);
        assert!(a.is_time_frame());
    }
}
