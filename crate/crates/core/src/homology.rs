//! Smith normal form over the integers and abelian group orders.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        IntMatrix {
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    // row[dst] -= f * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * f;
            let d = &mut self.data[dst * self.cols + j];
            *d -= v;
        }
    }

    fn col_sub(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * f;
            let d = &mut self.data[i * self.cols + dst];
            *d -= v;
        }
    }
}

/// Nonzero invariant factors d1 | d2 | ... (all positive) of the Smith
/// normal form.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let mut out = Vec::new();
    let mut t = 0;
    while t < a.rows.min(a.cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..a.rows {
            for j in t..a.cols {
                let v = a.get(i, j);
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..a.rows {
                let f = a.get(i, t).div_floor(&p);
                if !f.is_zero() {
                    a.row_sub(i, t, &f);
                }
                if !a.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..a.cols {
                let f = a.get(t, j).div_floor(&p);
                if !f.is_zero() {
                    a.col_sub(j, t, &f);
                }
                if !a.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility of the rest by the pivot
                let mut bad = None;
                'scan: for i in t + 1..a.rows {
                    for j in t + 1..a.cols {
                        if !a.get(i, j).is_multiple_of(&p) {
                            bad = Some(i);
                            break 'scan;
                        }
                    }
                }
                match bad {
                    None => break,
                    Some(i) => {
                        let one = BigInt::one();
                        a.row_sub(t, i, &-one);
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row t / column t to the pivot
            let mut best = (t, t);
            for i in t..a.rows {
                let v = a.get(i, t);
                if !v.is_zero() && v.abs() < a.get(best.0, best.1).abs() {
                    best = (i, t);
                }
            }
            for j in t..a.cols {
                let v = a.get(t, j);
                if !v.is_zero() && v.abs() < a.get(best.0, best.1).abs() {
                    best = (t, j);
                }
            }
            a.swap_rows(t, best.0);
            a.swap_cols(t, best.1);
        }
        out.push(a.get(t, t).abs());
        t += 1;
    }
    out
}

/// Order of the cokernel of `m` viewed as relations on `m.cols()` generators;
/// `None` when the group is infinite.
pub fn cokernel_order(m: &IntMatrix) -> Option<BigInt> {
    let f = invariant_factors(m);
    if f.len() < m.cols() {
        None
    } else {
        Some(f.iter().product())
    }
}
