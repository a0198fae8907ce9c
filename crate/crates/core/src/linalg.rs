//! Small exact linear algebra helpers: dense rational matrices for the
//! rank-4/5 coordinate work and an incremental sparse row space for
//! exact-rank computations.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{EngineError, Result};
use crate::weight::Rat;

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    acc += self.at(r, c) * &v[c];
                }
                acc
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination. Errors on non-square or
    /// singular input.
    pub fn inverse(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(EngineError::InvalidArgument(
                "inverse of non-square matrix".to_string(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::zero(n, n);
        for i in 0..n {
            inv.set(i, i, Rat::one());
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .ok_or_else(|| EngineError::InvalidArgument("singular matrix".to_string()))?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a.at(col, col).clone();
            for c in 0..n {
                let v = a.at(col, c) / &p;
                a.set(col, c, v);
                let w = inv.at(col, c) / &p;
                inv.set(col, c, w);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for c in 0..n {
                    let v = a.at(r, c) - &factor * a.at(col, c);
                    a.set(r, c, v);
                    let w = inv.at(r, c) - &factor * inv.at(col, c);
                    inv.set(r, c, w);
                }
            }
        }
        Ok(inv)
    }
}

/// Sparse rational vector: index -> nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rat>;

/// Adds `coeff * other` into `target`, dropping entries that cancel.
pub fn sparse_axpy(target: &mut SparseVec, coeff: &Rat, other: &SparseVec) {
    if coeff.is_zero() {
        return;
    }
    for (&i, v) in other {
        let entry = target.entry(i).or_insert_with(Rat::zero);
        *entry += coeff * v;
        if entry.is_zero() {
            target.remove(&i);
        }
    }
}

/// Incrementally built row space over the rationals.
///
/// Rows are kept in reduced form, keyed by pivot index with pivot coefficient
/// one; `insert` reduces the candidate against the basis and reports whether
/// it enlarged the span. Exact arithmetic makes the final rank independent of
/// insertion order.
#[derive(Debug, Default, Clone)]
pub struct RowSpace {
    rows: BTreeMap<usize, SparseVec>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis; if a nonzero remainder is left
    /// it becomes a new basis row and `true` is returned.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        loop {
            let Some((&pivot, _)) = v.first_key_value() else {
                return false;
            };
            match self.rows.get(&pivot) {
                Some(row) => {
                    let coeff = -v[&pivot].clone();
                    sparse_axpy(&mut v, &coeff, row);
                    debug_assert!(!v.contains_key(&pivot));
                }
                None => {
                    let lead = v[&pivot].clone();
                    for coeff in v.values_mut() {
                        *coeff /= &lead;
                    }
                    self.rows.insert(pivot, v);
                    return true;
                }
            }
        }
    }
}
