//! Exact integer and rational linear algebra.
//!
//! Everything downstream (balancing systems, lattice indices, intersection
//! numbers) is computed with arbitrary-precision integers and rationals; there
//! is no floating point anywhere in the crate.

mod kernel;
mod matrix;
mod smith;

use num_integer::Integer;
use num_traits::{Signed, Zero};

pub use kernel::{
    canonical_span, in_span, kernel_basis, normalize_direction, rank, rref, solve_constrained, Echelon,
    SolutionSpace,
};
pub use matrix::{IntMatrix, RatMatrix};
pub use smith::{determinant, elementary_divisors, hermite_rows, lattice_index, smith_form, SmithForm};

use crate::error::{Error, Result};

pub type Int = num_bigint::BigInt;
/// Always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub type IntVector = Vec<Int>;
pub type RatVector = Vec<Rat>;

pub fn int(x: i64) -> Int {
    Int::from(x)
}

pub fn ints(xs: &[i64]) -> IntVector {
    xs.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rats(xs: &[i64]) -> RatVector {
    xs.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
}

pub fn to_rat_vec(v: &[Int]) -> RatVector {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `v / gcd(v)`: the primitive lattice vector on the ray through `v`.
pub fn primitive(v: &[Int]) -> Result<IntVector> {
    let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Clears denominators of a rational vector and returns the primitive integer
/// vector pointing the same way.
pub fn primitive_of_rational(v: &[Rat]) -> Result<IntVector> {
    let lcm = v.iter().fold(Int::from(1), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<Int> = v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    primitive(&scaled)
}

/// Formats a rational as `p/q`, or `p` when integral.
pub fn format_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p` or `p/q` with `q > 0`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<Int>().ok().map(Rat::from_integer),
        Some((p, q)) => {
            let p: Int = p.trim().parse().ok()?;
            let q: Int = q.trim().parse().ok()?;
            if !q.is_positive() {
                return None;
            }
            Some(Rat::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&ints(&[2, 4, 6])).unwrap(), ints(&[1, 2, 3]));
        assert_eq!(primitive(&ints(&[-1, -1, -5])).unwrap(), ints(&[-1, -1, -5]));
        assert_eq!(primitive(&ints(&[0, -3, 0])).unwrap(), ints(&[0, -1, 0]));
        assert_eq!(primitive(&ints(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn rational_primitive_clears_denominators() {
        let v = vec![rat(1, 2), rat(-1, 3)];
        assert_eq!(primitive_of_rational(&v).unwrap(), ints(&[3, -2]));
    }

    #[test]
    fn rat_text_round_trip() {
        for s in ["0", "-7/15", "1/42", "12"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(parse_rat("2/4"), Some(rat(1, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("1/-2"), None);
        assert_eq!(parse_rat("1.5"), None);
    }
}
