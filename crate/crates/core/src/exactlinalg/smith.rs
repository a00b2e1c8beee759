//! Integer normal forms: Smith, row Hermite, and Bareiss determinants.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, IntMatrix};
use crate::error::{Error, Result};

/// `left * a * right = diag(diagonal, 0, ...)` with `left`, `right` unimodular.
#[derive(Debug, Clone)]
pub struct SmithForm {
    /// Nonzero invariant factors, positive, each dividing the next.
    pub diagonal: Vec<Int>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

type Grid = Vec<Vec<Int>>;

fn to_grid(a: &IntMatrix) -> Grid {
    a.row_vecs()
}

fn from_grid(cols: usize, g: &Grid) -> IntMatrix {
    IntMatrix::from_rows(cols, g).expect("grid is rectangular")
}

fn identity_grid(n: usize) -> Grid {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

fn row_axpy(g: &mut Grid, target: usize, source: usize, factor: &Int) {
    if factor.is_zero() {
        return;
    }
    let src = g[source].clone();
    for (t, s) in g[target].iter_mut().zip(src.iter()) {
        *t -= factor * s;
    }
}

fn col_axpy(g: &mut Grid, target: usize, source: usize, factor: &Int) {
    if factor.is_zero() {
        return;
    }
    for row in g.iter_mut() {
        let s = row[source].clone();
        row[target] -= factor * s;
    }
}

fn swap_cols(g: &mut Grid, a: usize, b: usize) {
    if a != b {
        for row in g.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Smallest nonzero absolute value in `g[t.., t..]`, first in row-major order on ties.
fn smallest_pivot(g: &Grid, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, Int)> = None;
    for (i, row) in g.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smith normal form by fraction-free elimination, pivoting on the smallest
/// nonzero entry of the remaining block.
pub fn smith_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut g = to_grid(a);
    let mut u = identity_grid(m);
    let mut v = identity_grid(n);
    let mut diagonal = Vec::new();

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_pivot(&g, t) else {
            break;
        };
        g.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut g, t, pj);
        swap_cols(&mut v, t, pj);

        let mut clean = true;
        for i in t + 1..m {
            if g[i][t].is_zero() {
                continue;
            }
            let q = g[i][t].div_floor(&g[t][t]);
            row_axpy(&mut g, i, t, &q);
            row_axpy(&mut u, i, t, &q);
            clean &= g[i][t].is_zero();
        }
        for j in t + 1..n {
            if g[t][j].is_zero() {
                continue;
            }
            let q = g[t][j].div_floor(&g[t][t]);
            col_axpy(&mut g, j, t, &q);
            col_axpy(&mut v, j, t, &q);
            clean &= g[t][j].is_zero();
        }
        if !clean {
            continue;
        }

        // divisibility chain: fold an offending row into the pivot row and redo
        let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !g[i][j].is_multiple_of(&g[t][t])));
        if let Some(i) = offending {
            let minus_one = -Int::one();
            row_axpy(&mut g, t, i, &minus_one);
            row_axpy(&mut u, t, i, &minus_one);
            continue;
        }

        if g[t][t].is_negative() {
            for x in g[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
        diagonal.push(g[t][t].clone());
        t += 1;
    }

    SmithForm { diagonal, left: from_grid(m, &u), right: from_grid(n, &v) }
}

/// Nonzero invariant factors `d1 | d2 | ...` of `a`, all positive.
pub fn elementary_divisors(a: &IntMatrix) -> Vec<Int> {
    smith_form(a).diagonal
}

/// Index of the lattice spanned by `rows` inside the saturation of its span.
pub fn lattice_index(rows: &IntMatrix) -> Result<Int> {
    let d = elementary_divisors(rows);
    if d.len() != rows.rows() {
        return Err(Error::DependentRays);
    }
    Ok(d.into_iter().fold(Int::one(), |acc, x| acc * x))
}

/// Row-style Hermite normal form: echelon rows, positive pivots, entries above
/// each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(a: &IntMatrix) -> IntMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut g = to_grid(a);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m)
                .filter(|&i| !g[i][c].is_zero())
                .min_by(|&i, &j| g[i][c].abs().cmp(&g[j][c].abs()).then(i.cmp(&j)));
            let Some(p) = pivot else { break };
            g.swap(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if !g[i][c].is_zero() {
                    let q = g[i][c].div_floor(&g[r][c]);
                    row_axpy(&mut g, i, r, &q);
                    clean &= g[i][c].is_zero();
                }
            }
            if clean {
                break;
            }
        }
        if g[r][c].is_zero() {
            continue;
        }
        if g[r][c].is_negative() {
            for x in g[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = g[i][c].div_floor(&g[r][c]);
            row_axpy(&mut g, i, r, &q);
        }
        r += 1;
    }
    g.truncate(r);
    from_grid(n, &g)
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(a: &IntMatrix) -> Result<Int> {
    let n = a.rows();
    if n != a.cols() {
        return Err(Error::DimensionMismatch(format!("determinant of {}x{}", n, a.cols())));
    }
    if n == 0 {
        return Ok(Int::one());
    }
    let mut g = to_grid(a);
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if g[k][k].is_zero() {
            match (k + 1..n).find(|&i| !g[i][k].is_zero()) {
                Some(i) => {
                    g.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &g[i][j] * &g[k][k] - &g[i][k] * &g[k][j];
                g[i][j] = num / &prev;
            }
        }
        prev = g[k][k].clone();
    }
    Ok(sign * g[n - 1][n - 1].clone())
}
