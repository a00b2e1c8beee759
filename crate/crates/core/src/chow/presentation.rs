use num_traits::Zero;
use serde::Serialize;

use super::intersect::{wall_mult, IntersectionTable};
use crate::error::{Error, Result};
use crate::exactlinalg::{format_rat, kernel_basis, rref, Int, Rat, RatMatrix};
use crate::fanbuild::Fan;

/// `sum_rho c_rho D_rho`, dense over the fan's rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    pub coeffs: Vec<Rat>,
}

impl Divisor {
    pub fn zero(rays: usize) -> Self {
        Self { coeffs: vec![Rat::zero(); rays] }
    }

    pub fn ray(rays: usize, r: usize) -> Self {
        let mut d = Self::zero(rays);
        d.coeffs[r] = Rat::from_integer(1.into());
        d
    }

    /// Nonzero terms as `(ray, coefficient)`.
    pub fn support(&self) -> Vec<(usize, &Rat)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// `-6D0 + 3D1 + 2D2` style rendering.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (r, c) in self.support() {
            let neg = c < &Rat::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            let coef = if a == Rat::from_integer(1.into()) { String::new() } else { format_rat(&a) };
            if s.is_empty() {
                s.push_str(if neg { "-" } else { "" });
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&format!("{coef}D{r}"));
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

/// A rational function on the walls of a fan, indexed like `fan.walls`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkowskiWeight {
    pub values: Vec<Rat>,
}

/// `c(tau) = D . V(tau)` for every wall.
pub fn weight_of(d: &Divisor, table: &IntersectionTable) -> MinkowskiWeight {
    let walls = table.wall_names.len();
    let values = (0..walls)
        .map(|w| d.coeffs.iter().enumerate().fold(Rat::zero(), |acc, (r, c)| acc + c * table.get(r, w)))
        .collect();
    MinkowskiWeight { values }
}

/// `sum_rho <e_k, v_rho> z_rho = 0` for each standard dual basis vector `e_k`.
pub fn linear_relations(fan: &Fan) -> Vec<Vec<Int>> {
    let dim = fan.rays.first().map_or(0, |r| r.generator.len());
    (0..dim).map(|k| fan.rays.iter().map(|r| r.generator[k].clone()).collect()).collect()
}

/// Representatives of `A^1` modulo the linear relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorBasis {
    /// Rays whose divisors form the basis, ascending.
    pub kept: Vec<usize>,
    /// Eliminated rays, ascending.
    pub eliminated: Vec<usize>,
    /// `D_e = sum_k reduction[i][j] D_{kept[j]}` for `e = eliminated[i]`.
    pub reduction: Vec<Vec<Rat>>,
}

impl DivisorBasis {
    /// Coordinates of a divisor class in the kept basis.
    pub fn coordinates(&self, d: &Divisor) -> Vec<Rat> {
        let mut out: Vec<Rat> = self.kept.iter().map(|&r| d.coeffs[r].clone()).collect();
        for (i, &e) in self.eliminated.iter().enumerate() {
            for (j, x) in out.iter_mut().enumerate() {
                *x += &d.coeffs[e] * &self.reduction[i][j];
            }
        }
        out
    }

    pub fn divisor(&self, rays: usize, coords: &[Rat]) -> Divisor {
        let mut d = Divisor::zero(rays);
        for (&r, c) in self.kept.iter().zip(coords) {
            d.coeffs[r] = c.clone();
        }
        d
    }
}

/// Eliminates the highest-index rays the relations allow (pivoting in reverse
/// ray order); the remaining divisors span `A^1`.
pub fn divisor_basis(fan: &Fan) -> Result<DivisorBasis> {
    let lr = linear_relations(fan);
    let n = fan.rays.len();
    let dim = lr.len();
    let reversed: Vec<Vec<Rat>> = lr.iter().map(|row| row.iter().rev().map(|x| Rat::from_integer(x.clone())).collect()).collect();
    let e = rref(&RatMatrix::from_rows(n, &reversed)?);
    if e.pivots.len() != dim {
        return Err(Error::DegenerateFan);
    }
    let ray_of = |c: usize| n - 1 - c;
    let mut eliminated: Vec<usize> = e.pivots.iter().map(|&c| ray_of(c)).collect();
    let kept: Vec<usize> = (0..n).filter(|r| !eliminated.contains(r)).collect();
    // row for pivot ray p: z_p + sum_f R[f] z_f = 0, so D_p = -sum_f R[f] D_f
    let mut rows: Vec<(usize, Vec<Rat>)> = e
        .pivots
        .iter()
        .zip(&e.rows)
        .map(|(&c, row)| (ray_of(c), kept.iter().map(|&f| -row[n - 1 - f].clone()).collect()))
        .collect();
    rows.sort_by_key(|(r, _)| *r);
    eliminated.sort_unstable();
    Ok(DivisorBasis { kept, eliminated, reduction: rows.into_iter().map(|(_, v)| v).collect() })
}

/// Minimal subsets of rays not contained in a common maximal cone.
pub fn sr_minimal_nonfaces(fan: &Fan) -> Vec<Vec<usize>> {
    let n = fan.rays.len();
    let is_face = |s: &[usize]| fan.max_cones.iter().any(|c| s.iter().all(|r| c.contains_ray(*r)));
    let mut out = Vec::new();
    let mut subset = Vec::new();
    fn rec(start: usize, n: usize, size: usize, subset: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if subset.len() == size {
            f(subset);
            return;
        }
        for i in start..n {
            subset.push(i);
            rec(i + 1, n, size, subset, f);
            subset.pop();
        }
    }
    // maximal cones have three rays, so every minimal non-face has at most four
    for size in 2..=4 {
        rec(0, n, size, &mut subset, &mut |s: &[usize]| {
            if is_face(s) {
                return;
            }
            let minimal = (0..s.len()).all(|skip| {
                let sub: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &r)| r).collect();
                is_face(&sub)
            });
            if minimal {
                out.push(s.to_vec());
            }
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RayBalance {
    pub ray: usize,
    /// One residue per basis vector of `ray^perp`, formatted.
    pub residues: Vec<String>,
    pub balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinkowskiReport {
    pub rays: Vec<RayBalance>,
}

impl MinkowskiReport {
    pub fn is_balanced(&self) -> bool {
        self.rays.iter().all(|r| r.balanced)
    }

    pub fn unbalanced(&self) -> Vec<usize> {
        self.rays.iter().filter(|r| !r.balanced).map(|r| r.ray).collect()
    }
}

/// Balancing at every ray `rho`: `sum_{walls s > rho} <m, n_{s,rho}> w(s) = 0` for
/// `m` in a basis of `rho^perp`, where `n_{s,rho}` is the other ray of `s`
/// divided by `mult(s)` (its primitive image in `N_s / N_rho`).
pub fn check_minkowski(fan: &Fan, w: &MinkowskiWeight) -> Result<MinkowskiReport> {
    let dim = fan.rays.first().map_or(0, |r| r.generator.len());
    let mut rays = Vec::new();
    for rho in 0..fan.rays.len() {
        let g: Vec<Rat> = fan.generator(rho).iter().map(|x| Rat::from_integer(x.clone())).collect();
        let perp = kernel_basis(&RatMatrix::from_rows(dim, &[g])?);
        let mut residues = vec![Rat::zero(); perp.len()];
        for (s, wall) in fan.walls.iter().enumerate() {
            if !wall.rays.contains(&rho) || w.values[s].is_zero() {
                continue;
            }
            let other = if wall.rays[0] == rho { wall.rays[1] } else { wall.rays[0] };
            let scale = Rat::from_integer(wall_mult(fan, s)?);
            for (res, m) in residues.iter_mut().zip(&perp) {
                let pairing = m.iter().zip(fan.generator(other)).fold(Rat::zero(), |acc, (a, b)| acc + a * Rat::from_integer(b.clone()));
                *res += pairing / &scale * &w.values[s];
            }
        }
        let balanced = residues.iter().all(Zero::is_zero);
        rays.push(RayBalance { ray: rho, residues: residues.iter().map(format_rat).collect(), balanced });
    }
    Ok(MinkowskiReport { rays })
}
