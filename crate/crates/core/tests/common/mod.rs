#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use toric_tensegrity::exactlinalg::{kernel_basis, lattice_index, rank, smith_form, IntMatrix, Rat};

pub const PROPERTY_SEED: [u8; 32] = *b"exact-lattice-properties-seed-01";

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, rng_algorithm: RngAlgorithm::ChaCha, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &PROPERTY_SEED))
}

/// Small integer matrices: 1 to 4 rows and columns, entries in [-6, 6].
pub fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| proptest::collection::vec(-6i64..=6, r * c).prop_map(move |d| (r, c, d)))
        .prop_map(|(r, c, d)| IntMatrix::new(r, c, d.into_iter().map(BigInt::from).collect()).unwrap())
}

/// Laplace expansion; independent of the library's elimination.
pub fn laplace(m: &[Vec<BigInt>]) -> BigInt {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<BigInt>> = m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][j] * laplace(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all k x k minors.
pub fn minors_gcd(a: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in subsets(a.rows(), k) {
        for cols in subsets(a.cols(), k) {
            let m: Vec<Vec<BigInt>> = rows.iter().map(|&i| cols.iter().map(|&j| a.get(i, j).clone()).collect()).collect();
            g = g.gcd(&laplace(&m));
        }
    }
    g
}

/// Divisibility chain, transforms, and agreement with minors gcds.
pub fn check_smith(a: &IntMatrix) -> Result<(), String> {
    let s = smith_form(a);
    let d = &s.diagonal;
    if d.iter().any(|x| !x.is_positive()) {
        return Err(format!("non-positive divisor in {d:?}"));
    }
    for w in d.windows(2) {
        if !(&w[1] % &w[0]).is_zero() {
            return Err(format!("{} does not divide {}", w[0], w[1]));
        }
    }
    let prod = s.left.mul(a).unwrap().mul(&s.right).unwrap();
    for i in 0..prod.rows() {
        for j in 0..prod.cols() {
            let want = if i == j && i < d.len() { d[i].clone() } else { BigInt::zero() };
            if prod.get(i, j) != &want {
                return Err(format!("left * a * right differs at ({i}, {j})"));
            }
        }
    }
    for det in [laplace(&s.left.row_vecs()), laplace(&s.right.row_vecs())] {
        if det.abs() != BigInt::from(1) {
            return Err("transform is not unimodular".into());
        }
    }
    let mut prefix = BigInt::from(1);
    for k in 1..=a.rows().min(a.cols()) {
        let g = minors_gcd(a, k);
        if k <= d.len() {
            prefix *= &d[k - 1];
            if g != prefix {
                return Err(format!("gcd of {k}-minors is {g}, divisor product is {prefix}"));
            }
        } else if !g.is_zero() {
            return Err(format!("nonzero {k}-minor beyond rank {}", d.len()));
        }
    }
    Ok(())
}

pub fn check_kernel(a: &IntMatrix) -> Result<(), String> {
    let r = a.to_rat();
    let ker = kernel_basis(&r);
    if ker.len() + rank(&r) != a.cols() {
        return Err("rank-nullity fails".into());
    }
    for v in &ker {
        if r.mul_vec(v).unwrap().iter().any(|x: &Rat| !x.is_zero()) {
            return Err(format!("kernel vector {v:?} does not solve the system"));
        }
    }
    Ok(())
}

/// For square nonsingular matrices the lattice index is |det|.
pub fn check_index(a: &IntMatrix) -> Result<(), String> {
    if a.rows() != a.cols() {
        return Ok(());
    }
    let det = laplace(&a.row_vecs());
    match lattice_index(a) {
        Ok(idx) if idx == det.abs() => Ok(()),
        Ok(idx) => Err(format!("index {idx} but |det| = {}", det.abs())),
        Err(_) if det.is_zero() => Ok(()),
        Err(e) => Err(format!("index failed on nonsingular matrix: {e}")),
    }
}
