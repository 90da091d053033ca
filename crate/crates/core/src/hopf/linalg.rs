//! Exact Gaussian elimination over Q(q).
//!
//! Everything here is dense and exact. Pivots are chosen by lowest
//! denominator degree (then lowest numerator degree) to keep coefficient
//! growth down, and all orders are fixed so results are deterministic.

use crate::ncalg::Word;
use crate::qfield::Scalar;
use std::collections::BTreeMap;

/// A row space maintained in reduced echelon form; supports incremental
/// rank, membership, and residual computation.
#[derive(Debug, Clone)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<(usize, Vec<Scalar>)>, // (pivot column, normalized row), sorted by pivot
}

impl RowSpace {
    pub fn new(ncols: usize) -> RowSpace {
        RowSpace {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Residual of `v` after reduction by the stored rows.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ncols);
        for (piv, row) in &self.rows {
            let c = v[*piv].clone();
            if c.is_zero() {
                continue;
            }
            for (i, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    v[i] = &v[i] - &(&c * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Insert `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let piv = match v.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = v[piv].inv().expect("pivot nonzero");
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        // back-substitute into existing rows
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv].clone();
            if c.is_zero() {
                continue;
            }
            for (i, r) in v.iter().enumerate() {
                if !r.is_zero() {
                    row[i] = &row[i] - &(&c * r);
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < piv);
        self.rows.insert(at, (piv, v));
        true
    }

    pub fn insert_all<I: IntoIterator<Item = Vec<Scalar>>>(&mut self, rows: I) {
        for r in rows {
            self.insert(r);
        }
    }
}

/// Dense matrix for kernel and solve computations.
#[derive(Debug, Clone)]
pub struct Matrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Matrix {
        Matrix {
            nrows,
            ncols,
            rows: vec![vec![Scalar::zero(); ncols]; nrows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix {
            nrows,
            ncols,
            rows,
        }
    }

    /// In-place reduced row echelon form; returns pivot columns. Within a
    /// column, the surviving row with the simplest pivot entry wins.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.ncols {
            let candidate = (next_row..self.nrows)
                .filter(|&r| !self.rows[r][col].is_zero())
                .min_by_key(|&r| (self.rows[r][col].complexity(), r));
            let r0 = match candidate {
                Some(r) => r,
                None => continue,
            };
            self.rows.swap(next_row, r0);
            let inv = self.rows[next_row][col].inv().expect("pivot nonzero");
            for c in self.rows[next_row].iter_mut() {
                if !c.is_zero() {
                    *c = &*c * &inv;
                }
            }
            for r in 0..self.nrows {
                if r == next_row || self.rows[r][col].is_zero() {
                    continue;
                }
                let factor = self.rows[r][col].clone();
                for c in 0..self.ncols {
                    if !self.rows[next_row][c].is_zero() {
                        self.rows[r][c] =
                            &self.rows[r][c] - &(&factor * &self.rows[next_row][c]);
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.nrows {
                break;
            }
        }
        pivots
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.ncols];
            v[free] = Scalar::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m.rows[ri][free];
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `A x = b` (free variables set to zero), if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.nrows);
        let mut aug = Matrix {
            nrows: self.nrows,
            ncols: self.ncols + 1,
            rows: self
                .rows
                .iter()
                .zip(b)
                .map(|(r, v)| {
                    let mut row = r.clone();
                    row.push(v.clone());
                    row
                })
                .collect(),
        };
        let pivots = aug.rref();
        if pivots.contains(&self.ncols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(); self.ncols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.rows[ri][self.ncols].clone();
        }
        Some(x)
    }
}

/// Assigns stable column indices to words so polynomial families can be
/// turned into coefficient vectors.
#[derive(Debug, Clone, Default)]
pub struct WordIndex {
    map: BTreeMap<Word, usize>,
}

impl WordIndex {
    pub fn new() -> WordIndex {
        WordIndex::default()
    }

    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> WordIndex {
        let mut ix = WordIndex::new();
        for w in words {
            ix.intern(&w);
        }
        ix
    }

    pub fn intern(&mut self, w: &Word) -> usize {
        let next = self.map.len();
        *self.map.entry(w.clone()).or_insert(next)
    }

    pub fn get(&self, w: &Word) -> Option<usize> {
        self.map.get(w).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn vector_of(&self, p: &crate::ncalg::NCPoly) -> Option<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.map.len()];
        for (w, c) in p.terms() {
            let i = self.get(w)?;
            v[i] = c.clone();
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rowspace_rank_and_membership() {
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(vec![s(1), s(2), s(0)]));
        assert!(rs.insert(vec![s(0), s(1), s(1)]));
        assert!(!rs.insert(vec![s(1), s(3), s(1)])); // dependent
        assert_eq!(rs.rank(), 2);
        assert!(rs.contains(&[s(2), s(5), s(1)]));
        assert!(!rs.contains(&[s(0), s(0), s(1)]));
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = Matrix::from_rows(vec![vec![s(1), s(2), s(3)]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = v
                .iter()
                .zip(&m.rows[0])
                .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(0), s(1)]]);
        let x = m.solve(&[s(3), s(1)]).unwrap();
        assert_eq!(x, vec![s(2), s(1)]);
        let bad = Matrix::from_rows(vec![vec![s(1), s(1)], vec![s(2), s(2)]]);
        assert!(bad.solve(&[s(0), s(1)]).is_none());
    }
}
