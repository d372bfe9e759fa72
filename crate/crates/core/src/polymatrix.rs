//! Square matrices over `Z[t, t^-1]` and their exact determinants.
//!
//! Two independent routes are provided. [`PolyMatrix::det_bareiss`] is the
//! production path; [`PolyMatrix::det_cofactor`] is a Laplace expansion kept
//! as an oracle for small sizes.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::laurent::{LaurentPoly, Unit};

/// Largest dimension accepted by the cofactor expansion.
pub const COFACTOR_MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("matrix must have at least one row")]
    Empty,
    #[error("cofactor expansion is limited to dimension {max}, got {dim}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("block dimensions disagree: {0:?}")]
    DimensionMismatch([usize; 4]),
}

/// An `n x n` matrix of integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, MatrixError> {
        let n = check_square(rows.iter().map(Vec::len), rows.len())?;
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(IntMatrix { n, entries })
    }

    /// Builds the matrix whose `(i, j)` entry is `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        IntMatrix { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Entrywise `self - other`; both must have the same dimension.
    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn to_poly(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.n, |i, j| LaurentPoly::constant(self.get(i, j).clone()))
    }

    /// Integer determinant, computed through the polynomial Bareiss path.
    pub fn det(&self) -> BigInt {
        self.to_poly().det_bareiss().coeff(0)
    }
}

/// Assembles `[[top_left, top_right], [bottom_left, bottom_right]]`.
pub fn block_compose(
    top_left: &IntMatrix,
    top_right: &IntMatrix,
    bottom_left: &IntMatrix,
    bottom_right: &IntMatrix,
) -> Result<IntMatrix, MatrixError> {
    let dims = [top_left.n, top_right.n, bottom_left.n, bottom_right.n];
    if dims.iter().any(|&d| d != dims[0]) {
        return Err(MatrixError::DimensionMismatch(dims));
    }
    let n = dims[0];
    Ok(IntMatrix::from_fn(2 * n, |i, j| {
        let block = match (i < n, j < n) {
            (true, true) => top_left,
            (true, false) => top_right,
            (false, true) => bottom_left,
            (false, false) => bottom_right,
        };
        block.get(i % n, j % n).clone()
    }))
}

/// `t * S - S^T`; entry `(i, j)` is `t * s_ij - s_ji`.
pub fn alexander_matrix(s: &IntMatrix) -> PolyMatrix {
    PolyMatrix::from_fn(s.dim(), |i, j| {
        LaurentPoly::linear(s.get(i, j).clone(), -s.get(j, i))
    })
}

fn check_square(lens: impl Iterator<Item = usize>, rows: usize) -> Result<usize, MatrixError> {
    if rows == 0 {
        return Err(MatrixError::Empty);
    }
    for (row, len) in lens.enumerate() {
        if len != rows {
            return Err(MatrixError::NotSquare { rows, row, len });
        }
    }
    Ok(rows)
}

/// An `n x n` matrix over `Z[t, t^-1]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, MatrixError> {
        let n = check_square(rows.iter().map(Vec::len), rows.len())?;
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        PolyMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<LaurentPoly, MatrixError> {
        if self.n > COFACTOR_MAX_DIM {
            return Err(MatrixError::DimensionTooLarge {
                dim: self.n,
                max: COFACTOR_MAX_DIM,
            });
        }
        let cols: Vec<usize> = (0..self.n).collect();
        Ok(self.minor_det(0, &cols))
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> LaurentPoly {
        match cols {
            [] => LaurentPoly::one(),
            [c] => self.get(row, *c).clone(),
            _ => {
                let mut acc = LaurentPoly::zero();
                for (k, &c) in cols.iter().enumerate() {
                    let entry = self.get(row, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = entry * &self.minor_det(row + 1, &rest);
                    acc = if k % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                acc
            }
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first multiplied by the power of `t` that makes its
    /// lowest exponent zero, so elimination runs over `Z[t]`; the collected
    /// unit is reapplied to the result.
    pub fn det_bareiss(&self) -> LaurentPoly {
        let n = self.n;
        let mut m = self.clone();
        let mut total_shift = 0i64;
        for i in 0..n {
            let row = &mut m.entries[i * n..(i + 1) * n];
            let Some(low) = row
                .iter()
                .filter(|p| !p.is_zero())
                .map(LaurentPoly::min_exp)
                .min()
            else {
                return LaurentPoly::zero();
            };
            if low != 0 {
                for p in row.iter_mut() {
                    *p = p.shift(-low);
                }
            }
            total_shift += low;
        }

        let mut sign = 1i8;
        let mut prev = LaurentPoly::one();
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&i| !m.get(i, k).is_zero()) else {
                return LaurentPoly::zero();
            };
            if pivot != k {
                m.swap_rows(pivot, k);
                sign = -sign;
            }
            let pkk = m.get(k, k).clone();
            for i in k + 1..n {
                let pik = m.get(i, k).clone();
                for j in k + 1..n {
                    let num = &(&m.entries[i * n + j] * &pkk) - &(&pik * m.get(k, j));
                    m.entries[i * n + j] = num
                        .div_exact(&prev)
                        .expect("Bareiss quotient must be exact");
                }
                m.entries[i * n + k] = LaurentPoly::zero();
            }
            prev = pkk;
        }
        Unit::new(sign, total_shift).apply(m.get(n - 1, n - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn pm(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| p(s)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn cofactor_examples() {
        let alpha2 = pm(&[&["2*t - 1", "2*t - 2"], &["t - 1", "2*t - 1"]]);
        assert_eq!(alpha2.det_cofactor().unwrap(), p("2*t^2 - 1"));
        assert_eq!(
            PolyMatrix::identity(3).det_cofactor().unwrap(),
            LaurentPoly::one()
        );
        let beta2 = pm(&[&["2*t - 2", "2*t - 2"], &["t - 1", "2*t - 1"]]);
        assert_eq!(beta2.det_cofactor().unwrap(), p("2*t^2 - 2*t"));
    }

    #[test]
    fn cofactor_guard() {
        assert_eq!(
            PolyMatrix::identity(9).det_cofactor(),
            Err(MatrixError::DimensionTooLarge { dim: 9, max: 8 })
        );
        assert!(PolyMatrix::identity(8).det_cofactor().is_ok());
    }

    #[test]
    fn bareiss_examples() {
        // tS - S^T for S = [[0, 2], [1, 0]]
        let m = pm(&[&["0", "2*t - 1"], &["t - 2", "0"]]);
        assert_eq!(m.det_bareiss(), p("-2*t^2 + 5*t - 2"));
        assert_eq!(m.det_bareiss(), m.det_cofactor().unwrap());

        let zero_row = pm(&[&["t", "3"], &["0", "0"]]);
        assert!(zero_row.det_bareiss().is_zero());
        let zero_row3 = pm(&[&["t", "3", "1"], &["t^-2", "0", "5"], &["0", "0", "0"]]);
        assert!(zero_row3.det_bareiss().is_zero());
    }

    #[test]
    fn bareiss_needs_pivot_swap() {
        let m = pm(&[&["0", "1", "t"], &["1", "0", "0"], &["t^-1", "2", "1"]]);
        assert_eq!(m.det_bareiss(), m.det_cofactor().unwrap());
        // row swaps push a zero pivot down the diagonal
        let m = pm(&[&["1", "1", "0"], &["1", "1", "1"], &["0", "t", "1"]]);
        assert_eq!(m.det_bareiss(), m.det_cofactor().unwrap());
        assert_eq!(m.det_bareiss(), p("-t"));
    }

    #[test]
    fn block_compose_examples() {
        let a1 = IntMatrix::from_rows(&[vec![2]]).unwrap();
        let b1 = IntMatrix::from_rows(&[vec![1]]).unwrap();
        let o1 = IntMatrix::zeros(1);
        let s = block_compose(&o1, &a1, &b1, &o1).unwrap();
        assert_eq!(s, IntMatrix::from_rows(&[vec![0, 2], vec![1, 0]]).unwrap());
        assert_eq!(
            block_compose(&o1, &o1, &o1, &o1).unwrap(),
            IntMatrix::zeros(2)
        );

        let a2 = IntMatrix::from_rows(&[vec![2, 2], vec![1, 2]]).unwrap();
        let b2 = IntMatrix::from_rows(&[vec![1, 1], vec![2, 1]]).unwrap();
        let o2 = IntMatrix::zeros(2);
        let s = block_compose(&o2, &a2, &b2, &o2).unwrap();
        let expected = IntMatrix::from_rows(&[
            vec![0, 0, 2, 2],
            vec![0, 0, 1, 2],
            vec![1, 1, 0, 0],
            vec![2, 1, 0, 0],
        ])
        .unwrap();
        assert_eq!(s, expected);

        assert_eq!(
            block_compose(&o1, &a2, &b1, &o1),
            Err(MatrixError::DimensionMismatch([1, 2, 1, 1]))
        );
    }

    #[test]
    fn alexander_matrix_examples() {
        let s = IntMatrix::from_rows(&[vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(
            alexander_matrix(&s),
            pm(&[&["0", "2*t - 1"], &["t - 2", "0"]])
        );
        let z = alexander_matrix(&IntMatrix::zeros(3));
        assert!((0..3).all(|i| (0..3).all(|j| z.get(i, j).is_zero())));
        let e = IntMatrix::from_rows(&[vec![0, -2], vec![-3, 0]]).unwrap();
        assert_eq!(
            alexander_matrix(&e),
            pm(&[&["0", "-2*t + 3"], &["-3*t + 2", "0"]])
        );
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(matches!(
            IntMatrix::from_rows(&[vec![1, 2], vec![3]]),
            Err(MatrixError::NotSquare { .. })
        ));
        assert_eq!(PolyMatrix::from_rows(Vec::new()), Err(MatrixError::Empty));
    }

    #[test]
    fn integer_det() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap();
        assert_eq!(m.det(), BigInt::from(1));
        let m = IntMatrix::from_rows(&[vec![2, 7, 1], vec![3, -1, 4], vec![0, 5, 6]]).unwrap();
        // 2(-6-20) - 7(18-0) + 1(15-0) = -52 - 126 + 15
        assert_eq!(m.det(), BigInt::from(-163));
    }
}
