//! Row-reduced subspaces of `F_q^n`.

use crate::gf::{Fe, GaloisField};

/// An `F_q`-subspace of `F_q^n` held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    len: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(len: usize) -> Self {
        Subspace { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &GaloisField, len: usize) -> Self {
        let rows = (0..len)
            .map(|i| {
                let mut r = vec![Fe::default(); len];
                r[i] = field.from_int(1);
                r
            })
            .collect();
        Subspace { len, rows, pivots: (0..len).collect() }
    }

    pub fn span<I>(field: &GaloisField, len: usize, vectors: I) -> Self
    where
        I: IntoIterator,
        I::Item: AsRef<[Fe]>,
    {
        let mut s = Subspace::zero(len);
        for v in vectors {
            s.insert(field, v.as_ref());
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, field: &GaloisField, v: &mut [Fe]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c.value() != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = field.sub(*x, field.mul(c, r));
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, field: &GaloisField, v: &[Fe]) -> bool {
        assert_eq!(v.len(), self.len, "vector length");
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        let Some(p) = w.iter().position(|x| x.value() != 0) else {
            return false;
        };
        let inv = field.inv(w[p]).expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = field.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c.value() != 0 {
                for (x, &r) in row.iter_mut().zip(&w) {
                    *x = field.sub(*x, field.mul(c, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn contains(&self, field: &GaloisField, v: &[Fe]) -> bool {
        if v.len() != self.len {
            return false;
        }
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|x| x.value() == 0)
    }

    pub fn contains_all(&self, field: &GaloisField, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(field, r))
    }

    pub fn same_as(&self, field: &GaloisField, other: &Subspace) -> bool {
        self.len == other.len && self.dim() == other.dim() && self.contains_all(field, other)
    }

    /// Orthogonal complement under the standard bilinear form `Σ x_i y_i`.
    pub fn dual(&self, field: &GaloisField) -> Subspace {
        let free: Vec<usize> = (0..self.len).filter(|c| !self.pivots.contains(c)).collect();
        let mut out = Subspace::zero(self.len);
        for &f in &free {
            let mut v = vec![Fe::default(); self.len];
            v[f] = field.from_int(1);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = field.neg(row[f]);
            }
            out.insert(field, &v);
        }
        out
    }

    /// Parity-check rows: a basis of the dual.
    pub fn parity_check(&self, field: &GaloisField) -> Vec<Vec<Fe>> {
        self.dual(field).rows
    }
}

pub fn dot(field: &GaloisField, x: &[Fe], y: &[Fe]) -> Fe {
    x.iter()
        .zip(y)
        .fold(Fe::default(), |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}
