//! Exact dense linear algebra over the rationals.
//!
//! Only determinants, linear solves and ranks are exposed; there is no
//! matrix inverse.

use num::{BigInt, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::rational::{dot, RVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    rows: Vec<RVector>,
    cols: usize,
}

impl RMatrix {
    pub fn new(rows: Vec<RVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(RMatrix { rows, cols })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| crate::rational::unit(n, i)).collect();
        RMatrix { rows, cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[RVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<RVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok(self.rows.iter().map(|r| dot(r, x)).collect())
    }

    pub fn mul(&self, other: &RMatrix) -> Result<RMatrix> {
        if other.nrows() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.cols)
                    .map(|j| {
                        r.iter()
                            .zip(&other.rows)
                            .fold(Rational::zero(), |acc, (a, row)| acc + a * &row[j])
                    })
                    .collect()
            })
            .collect();
        Ok(RMatrix {
            rows,
            cols: other.cols,
        })
    }

    fn check_square(&self) -> Result<usize> {
        if self.nrows() != self.cols {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.cols,
            });
        }
        Ok(self.cols)
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// row-wise integer scaling of `m`.
pub fn determinant(m: &RMatrix) -> Result<Rational> {
    m.check_square()?;
    Ok(det_rows(m.rows()))
}

/// Determinant of a square list of rows; the caller guarantees squareness.
pub(crate) fn det_rows(rows: &[RVector]) -> Rational {
    let mut scale = BigInt::one();
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let (v, s) = integer_row(r);
            scale *= s;
            v
        })
        .collect();
    Rational::new(bareiss_det(ints), scale)
}

/// Scales a rational row by the lcm of its denominators.
/// Returns the integer row and the multiplier used.
pub(crate) fn integer_row(r: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let v = r.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    (v, l)
}

/// Divides an integer vector by the gcd of its entries.
pub(crate) fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let v = (&row[j] * &pivot_row[k] - &row[k] * &pivot_row[j]) / &prev;
                row[j] = v;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Solves `m x = b` exactly. `Ok(None)` signals a singular matrix.
pub fn solve_linear(m: &RMatrix, b: &[Rational]) -> Result<Option<RVector>> {
    let n = m.check_square()?;
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let mut aug: Vec<RVector> = m
        .rows()
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !aug[i][col].is_zero()) else {
            return Ok(None);
        };
        aug.swap(p, col);
        let inv = aug[col][col].recip();
        for x in aug[col][col..].iter_mut() {
            *x *= &inv;
        }
        let pivot = aug[col].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x -= &f * p;
            }
        }
    }
    Ok(Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect()))
}

/// Rank of a list of rational rows.
pub fn rank(rows: &[RVector]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r).0).collect();
    int_rank(ints)
}

pub(crate) fn int_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let a = pivot[col].clone();
            let b = row[col].clone();
            for j in col..cols {
                row[j] = &row[j] * &a - &pivot[j] * &b;
            }
            make_primitive(row);
        }
        r += 1;
    }
    r
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily
/// in order.
pub(crate) fn independent_subset(rows: &[RVector]) -> Vec<usize> {
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v = integer_row(row).0;
        reduce_against(&mut v, &basis);
        if v.iter().any(|x| !x.is_zero()) {
            make_primitive(&mut v);
            basis.push(v);
            chosen.push(idx);
        }
    }
    chosen
}

// Each basis vector is stored with a distinct leading column.
fn reduce_against(v: &mut [BigInt], basis: &[Vec<BigInt>]) {
    for b in basis {
        let lead = b.iter().position(|x| !x.is_zero()).unwrap();
        if v[lead].is_zero() {
            continue;
        }
        let a = b[lead].clone();
        let c = v[lead].clone();
        for (x, y) in v.iter_mut().zip(b) {
            *x = &*x * &a - y * &c;
        }
    }
}
