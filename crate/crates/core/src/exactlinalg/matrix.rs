use std::fmt;

use num_traits::{One, Zero};

use super::{Int, Rat};
use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

macro_rules! dense_impl {
    ($ty:ident, $elem:ty) => {
        impl $ty {
            pub fn new(rows: usize, cols: usize, data: Vec<$elem>) -> Result<Self> {
                if data.len() != rows * cols {
                    return Err(Error::DimensionMismatch(format!(
                        "{} entries for a {}x{} matrix",
                        data.len(),
                        rows,
                        cols
                    )));
                }
                Ok(Self { rows, cols, data })
            }

            /// Builds a matrix from row vectors. An empty row list gives a `0 x cols` matrix.
            pub fn from_rows(cols: usize, rows: &[Vec<$elem>]) -> Result<Self> {
                let mut data = Vec::with_capacity(rows.len() * cols);
                for (i, r) in rows.iter().enumerate() {
                    if r.len() != cols {
                        return Err(Error::DimensionMismatch(format!(
                            "row {} has {} entries, expected {}",
                            i,
                            r.len(),
                            cols
                        )));
                    }
                    data.extend(r.iter().cloned());
                }
                Ok(Self { rows: rows.len(), cols, data })
            }

            pub fn zeros(rows: usize, cols: usize) -> Self {
                Self { rows, cols, data: vec![<$elem>::zero(); rows * cols] }
            }

            pub fn identity(n: usize) -> Self {
                let mut m = Self::zeros(n, n);
                for i in 0..n {
                    m.data[i * n + i] = <$elem>::one();
                }
                m
            }

            pub fn rows(&self) -> usize {
                self.rows
            }

            pub fn cols(&self) -> usize {
                self.cols
            }

            pub fn get(&self, i: usize, j: usize) -> &$elem {
                &self.data[i * self.cols + j]
            }

            pub fn row(&self, i: usize) -> &[$elem] {
                &self.data[i * self.cols..(i + 1) * self.cols]
            }

            pub fn row_vecs(&self) -> Vec<Vec<$elem>> {
                (0..self.rows).map(|i| self.row(i).to_vec()).collect()
            }

            pub fn column(&self, j: usize) -> Vec<$elem> {
                (0..self.rows).map(|i| self.get(i, j).clone()).collect()
            }

            pub fn transpose(&self) -> Self {
                let mut data = Vec::with_capacity(self.data.len());
                for j in 0..self.cols {
                    for i in 0..self.rows {
                        data.push(self.get(i, j).clone());
                    }
                }
                Self { rows: self.cols, cols: self.rows, data }
            }

            pub fn mul(&self, other: &Self) -> Result<Self> {
                if self.cols != other.rows {
                    return Err(Error::DimensionMismatch(format!(
                        "cannot multiply {}x{} by {}x{}",
                        self.rows, self.cols, other.rows, other.cols
                    )));
                }
                let mut data = Vec::with_capacity(self.rows * other.cols);
                for i in 0..self.rows {
                    for j in 0..other.cols {
                        let mut acc = <$elem>::zero();
                        for k in 0..self.cols {
                            let a = self.get(i, k);
                            if !a.is_zero() {
                                acc += a * other.get(k, j);
                            }
                        }
                        data.push(acc);
                    }
                }
                Ok(Self { rows: self.rows, cols: other.cols, data })
            }

            pub fn mul_vec(&self, v: &[$elem]) -> Result<Vec<$elem>> {
                if v.len() != self.cols {
                    return Err(Error::DimensionMismatch(format!(
                        "vector of length {} against {} columns",
                        v.len(),
                        self.cols
                    )));
                }
                Ok((0..self.rows)
                    .map(|i| {
                        self.row(i)
                            .iter()
                            .zip(v)
                            .filter(|(a, _)| !a.is_zero())
                            .fold(<$elem>::zero(), |acc, (a, b)| acc + a * b)
                    })
                    .collect())
            }

            /// Stacks `other` below `self`.
            pub fn stack(&self, other: &Self) -> Result<Self> {
                if self.cols != other.cols {
                    return Err(Error::DimensionMismatch(format!(
                        "cannot stack {} columns on {} columns",
                        other.cols, self.cols
                    )));
                }
                let mut data = self.data.clone();
                data.extend(other.data.iter().cloned());
                Ok(Self { rows: self.rows + other.rows, cols: self.cols, data })
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                writeln!(f, "{}x{} [", self.rows, self.cols)?;
                for i in 0..self.rows {
                    let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
                    writeln!(f, "  {}", cells.join(" "))?;
                }
                write!(f, "]")
            }
        }
    };
}

dense_impl!(IntMatrix, Int);
dense_impl!(RatMatrix, Rat);

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        Self::from_rows(cols, &rows).expect("ragged rows")
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }
}

impl RatMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_i64_rows(rows).to_rat()
    }
}

impl From<&IntMatrix> for RatMatrix {
    fn from(m: &IntMatrix) -> Self {
        m.to_rat()
    }
}
