//! Sparse exact-rational matrices with deterministic elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

/// A sparse matrix over Q. Stored entries are always nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set_int(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn set_int(&mut self, r: usize, c: usize, v: i64) {
        self.set(r, c, BigRational::from_integer(BigInt::from(v)));
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigRational) {
        let sum = self.get(r, c) + v;
        self.set(r, c, sum);
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    /// Matrix product self · rhs.
    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = RationalMatrix::zero(self.rows, rhs.cols);
        // Group rhs entries by row so each left entry scans one short list.
        let mut rhs_rows: Vec<Vec<(usize, &BigRational)>> = vec![Vec::new(); rhs.rows];
        for (&(r, c), v) in &rhs.entries {
            rhs_rows[r].push((c, v));
        }
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &rhs_rows[k] {
                out.add_to(i, j, &(a * b));
            }
        }
        out
    }

    /// Stacks other below self (same column count).
    pub fn vstack(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.cols, "column counts must agree");
        let mut out = RationalMatrix::zero(self.rows + other.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.clone());
        }
        for (&(r, c), v) in &other.entries {
            out.set(self.rows + r, c, v.clone());
        }
        out
    }

    fn to_dense_rows(&self) -> Vec<Vec<BigRational>> {
        let mut rows = vec![vec![BigRational::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r][c] = v.clone();
        }
        rows
    }

    /// Exact rank over Q by Gaussian elimination. Deterministic pivoting:
    /// in each column, the candidate row with the fewest nonzero entries
    /// wins, ties broken by the lowest row index.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_dense_rows();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let mut pivot: Option<(usize, usize)> = None;
            for (idx, row) in rows.iter().enumerate().skip(rank) {
                if row[col].is_zero() {
                    continue;
                }
                let weight = row.iter().filter(|v| !v.is_zero()).count();
                match pivot {
                    Some((_, best)) if best <= weight => {}
                    _ => pivot = Some((idx, weight)),
                }
            }
            let Some((pivot_row, _)) = pivot else {
                continue;
            };
            rows.swap(rank, pivot_row);
            let inv = rows[rank][col].recip();
            for v in rows[rank].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            let pivot_vals = rows[rank].clone();
            for (idx, row) in rows.iter_mut().enumerate() {
                if idx == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (j, pv) in pivot_vals.iter().enumerate() {
                    if !pv.is_zero() {
                        row[j] = &row[j] - &(&factor * pv);
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// A basis of the right null space {x | self·x = 0}, as the columns of
    /// the returned matrix. The canonical reduced-echelon construction: one
    /// basis vector per free column, with a 1 in that position.
    pub fn null_space(&self) -> RationalMatrix {
        let mut rows = self.to_dense_rows();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let mut pivot: Option<(usize, usize)> = None;
            for (idx, row) in rows.iter().enumerate().skip(rank) {
                if row[col].is_zero() {
                    continue;
                }
                let weight = row.iter().filter(|v| !v.is_zero()).count();
                match pivot {
                    Some((_, best)) if best <= weight => {}
                    _ => pivot = Some((idx, weight)),
                }
            }
            let Some((pivot_row, _)) = pivot else {
                continue;
            };
            rows.swap(rank, pivot_row);
            let inv = rows[rank][col].recip();
            for v in rows[rank].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            let pivot_vals = rows[rank].clone();
            for (idx, row) in rows.iter_mut().enumerate() {
                if idx == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (j, pv) in pivot_vals.iter().enumerate() {
                    if !pv.is_zero() {
                        row[j] = &row[j] - &(&factor * pv);
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == self.rows {
                // Remaining columns are all free.
                break;
            }
        }
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = RationalMatrix::zero(self.cols, free_cols.len());
        for (j, &free) in free_cols.iter().enumerate() {
            basis.set(free, j, BigRational::one());
            for (i, &pc) in pivot_cols.iter().enumerate() {
                let v = -rows[i][free].clone();
                basis.set(pc, j, v);
            }
        }
        basis
    }

    /// Dump in the canonical JSON matrix form
    /// {"rows":…,"cols":…,"entries":[[r,c,"p/q"]…]} (serialize-only).
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Dump {
            rows: usize,
            cols: usize,
            entries: Vec<(usize, usize, String)>,
        }
        let dump = Dump {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| (r, c, v.to_string()))
                .collect(),
        };
        serde_json::to_string(&dump).expect("matrix JSON serialization cannot fail")
    }
}
