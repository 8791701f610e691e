//! Dense matrices of polynomials, and the rational linear algebra the rest of
//! the crate leans on (determinants, solves, kernels).

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatR {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl MatR {
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        Ok(MatR { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_rat_rows(rows: &[Vec<Rat>]) -> Result<Self> {
        MatR::from_rows(
            rows.iter()
                .map(|r| r.iter().cloned().map(Poly::constant).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Poly::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Poly::one();
        }
        MatR { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn mul(&self, other: &MatR) -> Result<MatR> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(i, k) * other.get(k, j);
                }
                data.push(acc);
            }
        }
        Ok(MatR { rows: self.rows, cols: other.cols, data })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Every
    /// intermediate division is exact in the polynomial ring.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut m: Vec<Vec<Poly>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = !sign;
                    }
                    None => return Ok(Poly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign { -d } else { d })
    }
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn det_rat(m: &[Vec<Rat>]) -> Result<Rat> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::one();
    for k in 0..n {
        let p = match (k..n).find(|&r| !a[r][k].is_zero()) {
            Some(p) => p,
            None => return Ok(Rat::zero()),
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    Ok(det)
}

/// Solves the square system `m x = b`; errors when `m` is singular.
pub fn solve_rat(m: &[Vec<Rat>], b: &[Rat]) -> Result<Vec<Rat>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) || b.len() != n {
        return Err(Error::Shape("solve needs a square system".into()));
    }
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or_else(|| Error::SingularSystem(format!("no pivot in column {k}")))?;
        a.swap(p, k);
        let piv = a[k][k].clone();
        for j in k..=n {
            a[k][j] = &a[k][j] / &piv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in k..=n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n].clone()).collect())
}

/// A basis of the right kernel `{x : m x = 0}` from the reduced row echelon form.
pub fn kernel_rat(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let p = match (r..rows).find(|&i| !a[i][c].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(p, r);
        let piv = a[r][c].clone();
        for j in c..cols {
            a[r][j] = &a[r][j] / &piv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

pub fn mat_mul_rat(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let inner = b.len();
    let cols = b.first().map(|r| r.len()).unwrap_or(0);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rat::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn mat_vec_rat(a: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(x).fold(Rat::zero(), |acc, (p, q)| acc + p * q))
        .collect()
}
