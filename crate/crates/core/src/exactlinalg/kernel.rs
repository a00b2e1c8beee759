//! Rational row reduction, null spaces and subspace utilities.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, Rat, RatMatrix};
use crate::error::{Error, Result};

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<Rat>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

/// Gauss-Jordan elimination; the pivot for each column is the first nonzero row.
pub fn rref(a: &RatMatrix) -> Echelon {
    rref_rows(a.cols(), a.row_vecs())
}

pub(crate) fn rref_rows(cols: usize, mut g: Vec<Vec<Rat>>) -> Echelon {
    let m = g.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !g[i][c].is_zero()) else {
            continue;
        };
        g.swap(r, p);
        let inv = g[r][c].recip();
        for x in g[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = g[r].clone();
        for (i, row) in g.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    g.truncate(r);
    Echelon { rows: g, pivots, cols }
}

pub fn rank(a: &RatMatrix) -> usize {
    rref(a).pivots.len()
}

/// Scales a rational vector to integer entries with gcd 1 and positive first
/// nonzero entry. Zero vectors are returned unchanged.
pub fn normalize_direction(v: &[Rat]) -> Vec<Rat> {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return v.to_vec();
    };
    let lcm = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = ints.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if first.is_negative() {
        g = -g;
    }
    ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect()
}

fn kernel_from_echelon(e: &Echelon) -> Vec<Vec<Rat>> {
    let free: Vec<usize> = (0..e.cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); e.cols];
            v[f] = Rat::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -row[f].clone();
            }
            normalize_direction(&v)
        })
        .collect()
}

/// Canonical basis of the right null space: one vector per free column of the
/// reduced echelon form, scaled to coprime integers with positive leading entry.
pub fn kernel_basis(a: &RatMatrix) -> Vec<Vec<Rat>> {
    kernel_from_echelon(&rref(a))
}

/// Solution space `{x in Q^vars : constraints * x = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub vars: usize,
    pub constraint_count: usize,
    pub constraint_rank: usize,
    pub basis: Vec<Vec<Rat>>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn solve_constrained(vars: usize, constraints: &RatMatrix) -> Result<SolutionSpace> {
    if constraints.cols() != vars {
        return Err(Error::DimensionMismatch(format!(
            "{} constraint columns for {} variables",
            constraints.cols(),
            vars
        )));
    }
    let e = rref(constraints);
    Ok(SolutionSpace {
        vars,
        constraint_count: constraints.rows(),
        constraint_rank: e.pivots.len(),
        basis: kernel_from_echelon(&e),
    })
}

/// The canonical basis of `span(vectors)`, equal for any two spanning sets of
/// the same subspace. Computed as the null space of a null space.
pub fn canonical_span(len: usize, vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let rows = RatMatrix::from_rows(len, vectors).expect("vectors of equal length");
    let complement = kernel_basis(&rows);
    let comp = RatMatrix::from_rows(len, &complement).expect("kernel vectors have the row length");
    kernel_basis(&comp)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(len: usize, basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    let base = RatMatrix::from_rows(len, basis).expect("equal lengths");
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    let ext = RatMatrix::from_rows(len, &with).expect("equal lengths");
    rank(&base) == rank(&ext)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&RatMatrix::identity(2)).is_empty());
    }

    #[test]
    fn single_row_symmetry() {
        let a = RatMatrix::from_i64_rows(&[&[1, -1]]);
        assert_eq!(kernel_basis(&a), vec![rats(&[1, 1])]);
    }

    #[test]
    fn leading_entry_positive() {
        // kernel of (1, 1) is spanned by (1, -1), not (-1, 1)
        let a = RatMatrix::from_i64_rows(&[&[1, 1]]);
        assert_eq!(kernel_basis(&a), vec![rats(&[1, -1])]);
    }

    #[test]
    fn constrained_edge_cases() {
        let full = solve_constrained(3, &RatMatrix::zeros(0, 3)).unwrap();
        assert_eq!(full.dim(), 3);
        let none = solve_constrained(3, &RatMatrix::identity(3)).unwrap();
        assert_eq!(none.dim(), 0);
        assert!(solve_constrained(2, &RatMatrix::identity(3)).is_err());
    }

    #[test]
    fn canonical_span_ignores_spanning_set() {
        let a = vec![rats(&[1, 2, 3]), rats(&[0, 1, 1])];
        let b = vec![rats(&[2, 5, 7]), rats(&[-1, -1, -2])];
        assert_eq!(canonical_span(3, &a), canonical_span(3, &b));
        assert!(in_span(3, &a, &rats(&[1, 3, 4])));
        assert!(!in_span(3, &a, &rats(&[0, 0, 1])));
    }
}
