use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlinalg::{format_rat, kernel_basis, lattice_index, Int, IntMatrix, Rat, RatMatrix};
use crate::fanbuild::{Fan, WallKind};

/// Lattice multiplicity `[N_sigma : Z v_1 + ... + Z v_l]` of the cone spanned by the given rays.
pub fn mult(fan: &Fan, rays: &[usize]) -> Result<Int> {
    let rows: Vec<Vec<Int>> = rays.iter().map(|&r| fan.generator(r).to_vec()).collect();
    let dim = fan.rays.first().map_or(0, |r| r.generator.len());
    lattice_index(&IntMatrix::from_rows(dim, &rows)?)
}

pub fn cone_mult(fan: &Fan, cone: usize) -> Result<Int> {
    mult(fan, &fan.max_cones[cone].rays)
}

pub fn wall_mult(fan: &Fan, wall: usize) -> Result<Int> {
    mult(fan, &fan.walls[wall].rays)
}

/// `alpha u' + lambda_1 r_1 + lambda_2 r_2 + beta u'' = 0` for a wall `{r_1, r_2}`
/// between `sigma` (containing `u'`) and `sigma_prime` (containing `u''`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallRelation {
    pub wall: usize,
    pub sigma: usize,
    pub sigma_prime: usize,
    pub u_prime: usize,
    pub u_second: usize,
    pub alpha: Int,
    /// Coefficients of the wall's rays, in the wall's display order.
    pub lambda: [(usize, Int); 2],
    pub beta: Int,
}

/// Integral relation among four rays in a rank-3 lattice, primitive, with the
/// first coefficient positive.
fn relation4(fan: &Fan, rays: [usize; 4]) -> Result<[Int; 4]> {
    let g: Vec<&[Int]> = rays.iter().map(|&r| fan.generator(r)).collect();
    let dim = g[0].len();
    let rows: Vec<Vec<Rat>> = (0..dim).map(|k| g.iter().map(|v| Rat::from_integer(v[k].clone())).collect()).collect();
    let ker = kernel_basis(&RatMatrix::from_rows(4, &rows)?);
    if ker.len() != 1 {
        return Err(Error::DependentRays);
    }
    let mut c: Vec<Int> = ker[0].iter().map(|x| x.to_integer()).collect();
    if c[0].is_negative() {
        c.iter_mut().for_each(|x| *x = -x.clone());
    }
    Ok([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
}

/// Relation seen from the given side (0 or 1) of the wall: `sigma` is that adjacent cone.
pub fn wall_relation_from_side(fan: &Fan, wall: usize, side: usize) -> Result<WallRelation> {
    let w = &fan.walls[wall];
    if w.cones.len() != 2 || side > 1 {
        return Err(Error::NotAWall(w.rays.to_vec()));
    }
    let (sigma, sigma_prime) = (w.cones[side], w.cones[1 - side]);
    let (u_prime, u_second) = (fan.opposite_ray(sigma, wall), fan.opposite_ray(sigma_prime, wall));
    let [alpha, l1, l2, beta] = relation4(fan, [u_prime, w.rays[0], w.rays[1], u_second])?;
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::FanInvalid(format!("cones on both sides of wall {:?} lie on the same side", w.rays)));
    }
    Ok(WallRelation { wall, sigma, sigma_prime, u_prime, u_second, alpha, lambda: [(w.rays[0], l1), (w.rays[1], l2)], beta })
}

pub fn wall_relation(fan: &Fan, wall: usize) -> Result<WallRelation> {
    wall_relation_from_side(fan, wall, 0)
}

/// `D_ray . V(wall)` using the relation seen from the given side.
pub fn intersect_from_side(fan: &Fan, ray: usize, wall: usize, side: usize) -> Result<Rat> {
    let rel = wall_relation_from_side(fan, wall, side)?;
    let m_tau = wall_mult(fan, wall)?;
    let ratio = |num: Int, den: Int| Rat::new(num, den);
    if ray == rel.u_prime {
        return Ok(ratio(m_tau, cone_mult(fan, rel.sigma)?));
    }
    if ray == rel.u_second {
        return Ok(ratio(m_tau, cone_mult(fan, rel.sigma_prime)?));
    }
    match rel.lambda.iter().find(|(r, _)| *r == ray) {
        Some((_, l)) => Ok(ratio(l * m_tau, &rel.alpha * cone_mult(fan, rel.sigma)?)),
        None => Ok(Rat::zero()),
    }
}

pub fn intersect(fan: &Fan, ray: usize, wall: usize) -> Result<Rat> {
    intersect_from_side(fan, ray, wall, 0)
}

/// Specialized formula on an assistant wall `t0i`, written in terms of the hull
/// neighbours `v_{i-1}`, `v_{i+1}` of `v_i` and the cone `s_{0,i,i-1}` only.
pub fn assistant_wall_intersection(fan: &Fan, ray: usize, wall: usize) -> Result<Rat> {
    let w = &fan.walls[wall];
    let WallKind::Assistant(_) = w.kind else {
        return Err(Error::NotAWall(w.rays.to_vec()));
    };
    let v0 = fan.assistant().ok_or(Error::NotAWall(w.rays.to_vec()))?;
    let i = if w.rays[0] == v0 { w.rays[1] } else { w.rays[0] };
    let h = fan.hull.len();
    let k = fan.hull.iter().position(|&r| r == i).ok_or(Error::NotAWall(w.rays.to_vec()))?;
    let (prev, next) = (fan.hull[(k + h - 1) % h], fan.hull[(k + 1) % h]);
    let m_tau = wall_mult(fan, wall)?;
    let m_prev = mult(fan, &[v0, i, prev])?;
    if ray == prev {
        return Ok(Rat::new(m_tau, m_prev));
    }
    if ray == next {
        return Ok(Rat::new(m_tau, mult(fan, &[v0, i, next])?));
    }
    let [alpha, l0, li, _beta] = relation4(fan, [prev, v0, i, next])?;
    if ray == v0 {
        Ok(Rat::new(l0 * m_tau, alpha * m_prev))
    } else if ray == i {
        Ok(Rat::new(li * m_tau, alpha * m_prev))
    } else {
        Ok(Rat::zero())
    }
}

/// `D_rho . V(tau)` for every ray (rows, by ray index) and wall (columns, in fan order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTable {
    pub ray_names: Vec<String>,
    pub wall_names: Vec<String>,
    pub entries: Vec<Vec<Rat>>,
}

impl IntersectionTable {
    pub fn get(&self, ray: usize, wall: usize) -> &Rat {
        &self.entries[ray][wall]
    }

    /// Strings for display: `p/q` or integers.
    pub fn formatted(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|row| row.iter().map(format_rat).collect()).collect()
    }
}

pub fn ray_name(ray: usize) -> String {
    format!("D{ray}")
}

pub fn intersection_table(fan: &Fan) -> Result<IntersectionTable> {
    let mut entries = vec![vec![Rat::zero(); fan.walls.len()]; fan.rays.len()];
    for (w, _) in fan.walls.iter().enumerate() {
        let rel = wall_relation(fan, w)?;
        for r in [rel.u_prime, rel.u_second, rel.lambda[0].0, rel.lambda[1].0] {
            entries[r][w] = intersect(fan, r, w)?;
        }
    }
    Ok(IntersectionTable {
        ray_names: (0..fan.rays.len()).map(ray_name).collect(),
        wall_names: (0..fan.walls.len()).map(|w| fan.wall_name(w)).collect(),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityRow {
    pub cone: String,
    pub rays: Vec<usize>,
    pub mult: String,
}

/// Multiplicities of every wall (fan order) followed by every maximal cone.
pub fn multiplicity_table(fan: &Fan) -> Result<Vec<MultiplicityRow>> {
    let mut out = Vec::new();
    for w in 0..fan.walls.len() {
        out.push(MultiplicityRow { cone: fan.wall_name(w), rays: fan.walls[w].rays.to_vec(), mult: wall_mult(fan, w)?.to_string() });
    }
    for c in 0..fan.max_cones.len() {
        out.push(MultiplicityRow { cone: fan.cone_name(c), rays: fan.max_cones[c].rays.clone(), mult: cone_mult(fan, c)?.to_string() });
    }
    Ok(out)
}
