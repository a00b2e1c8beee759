//! Per-edge local fans with assistant rays and the glued balancing system for
//! codimension-one frameworks (quotient rank 2).

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlinalg::{canonical_span, format_rat, kernel_basis, primitive, Int, Rat, RatMatrix};
use crate::framework::{normal_with_map, quotient_map, same_ray, self_stress_basis, Balancing, KFramework, StressBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalRayLabel {
    /// Normal of the face with this index.
    Face(usize),
    Assistant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalRay {
    pub vector: [Int; 2],
    pub label: LocalRayLabel,
}

/// Complete fan in the rank-2 quotient at one edge. Rays are in counterclockwise
/// order starting from the first ray on or after the positive x-axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFan {
    pub edge: usize,
    pub rays: Vec<LocalRay>,
    /// Consecutive ray index pairs; each spans a cone of angle at most pi.
    pub cones: Vec<[usize; 2]>,
}

impl LocalFan {
    pub fn assistant(&self) -> Option<usize> {
        self.rays.iter().position(|r| r.label == LocalRayLabel::Assistant)
    }
}

fn cross(a: &[Int; 2], b: &[Int; 2]) -> Int {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// 0 for angles in [0, pi), 1 for [pi, 2 pi).
fn half(v: &[Int; 2]) -> u8 {
    if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: &[Int; 2], b: &[Int; 2]) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| Int::zero().cmp(&cross(a, b)))
}

/// Whether all vectors lie in a closed half-plane: some circular gap is at least pi.
fn in_closed_half_plane(sorted: &[[Int; 2]]) -> bool {
    match sorted.len() {
        0 | 1 => true,
        n => (0..n).any(|i| !cross(&sorted[i], &sorted[(i + 1) % n]).is_positive()),
    }
}

/// Local fan at an edge with at least one incidence. The face rays are the
/// quotient images of the incidence normals; an assistant ray
/// `primitive(-sum)` is added when they lie in a closed half-plane and do not
/// cancel.
pub fn local_fan(fw: &KFramework, edge: usize) -> Result<LocalFan> {
    let id = fw.edges()[edge].id.clone();
    let q = quotient_map(fw, edge)?;
    if q.rank != 2 {
        return Err(Error::UnsupportedCodim { edge: id, rank: q.rank });
    }
    let mut rays: Vec<LocalRay> = Vec::new();
    for (_, inc) in fw.incidences_at(edge) {
        let n = normal_with_map(fw, &q, inc)?;
        let vector = [n[0].clone(), n[1].clone()];
        if let Some(other) = rays.iter().find(|r| same_ray(&r.vector, &vector)) {
            let LocalRayLabel::Face(f) = other.label else { unreachable!() };
            return Err(Error::GenericityViolation(
                id,
                format!("faces {} and {} have the same normal ray", fw.faces()[f].id, fw.faces()[inc.face].id),
            ));
        }
        rays.push(LocalRay { vector, label: LocalRayLabel::Face(inc.face) });
    }
    if rays.is_empty() {
        return Err(Error::InvalidFramework(format!("edge {id} has no incident faces")));
    }
    rays.sort_by(|a, b| angle_cmp(&a.vector, &b.vector));
    let vecs: Vec<[Int; 2]> = rays.iter().map(|r| r.vector.clone()).collect();
    let sum = [vecs.iter().map(|v| v[0].clone()).sum::<Int>(), vecs.iter().map(|v| v[1].clone()).sum::<Int>()];
    if in_closed_half_plane(&vecs) && !(sum[0].is_zero() && sum[1].is_zero()) {
        let p = primitive(&[-sum[0].clone(), -sum[1].clone()])?;
        rays.push(LocalRay { vector: [p[0].clone(), p[1].clone()], label: LocalRayLabel::Assistant });
        rays.sort_by(|a, b| angle_cmp(&a.vector, &b.vector));
    }
    let n = rays.len();
    let cones = if n == 1 { vec![] } else { (0..n).map(|i| [i, (i + 1) % n]).collect() };
    Ok(LocalFan { edge, rays, cones })
}

/// Every nonzero direction lies in some cone: consecutive rays are at most pi apart.
pub fn is_complete(fan: &LocalFan) -> bool {
    let n = fan.rays.len();
    if n < 2 {
        return false;
    }
    (0..n).all(|i| {
        let (a, b) = (&fan.rays[i].vector, &fan.rays[(i + 1) % n].vector);
        let c = cross(a, b);
        c.is_positive() || (c.is_zero() && (&a[0] * &b[0] + &a[1] * &b[1]).is_negative())
    })
}

/// Identification of one face across all local fans it appears in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluedIncidence {
    pub face: usize,
    /// `(edge, ray index in that edge's local fan)`.
    pub appearances: Vec<(usize, usize)>,
}

/// Unknowns are the faces followed by one assistant unknown per local fan that has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedSystem {
    pub local_fans: Vec<LocalFan>,
    pub glued: Vec<GluedIncidence>,
    pub faces: usize,
    /// Local fan index for each assistant unknown.
    pub assistants: Vec<usize>,
    /// Two balancing rows per local fan.
    pub equations: RatMatrix,
    /// Rows pinning each assistant unknown to zero.
    pub constraints: RatMatrix,
}

impl GluedSystem {
    pub fn unknowns(&self) -> usize {
        self.faces + self.assistants.len()
    }
}

pub fn glued_system(fw: &KFramework) -> Result<GluedSystem> {
    let mut local_fans = Vec::new();
    for e in 0..fw.edges().len() {
        if fw.incidences_at(e).next().is_some() {
            local_fans.push(local_fan(fw, e)?);
        }
    }
    let faces = fw.faces().len();
    let assistants: Vec<usize> = (0..local_fans.len()).filter(|&i| local_fans[i].assistant().is_some()).collect();
    let unknowns = faces + assistants.len();
    let mut rows = Vec::new();
    let mut glued: Vec<GluedIncidence> = (0..faces).map(|face| GluedIncidence { face, appearances: vec![] }).collect();
    for (li, lf) in local_fans.iter().enumerate() {
        let mut block = vec![vec![Rat::zero(); unknowns]; 2];
        for (ri, ray) in lf.rays.iter().enumerate() {
            let col = match ray.label {
                LocalRayLabel::Face(f) => {
                    glued[f].appearances.push((lf.edge, ri));
                    f
                }
                LocalRayLabel::Assistant => faces + assistants.iter().position(|&a| a == li).expect("assistant registered"),
            };
            for (row, x) in block.iter_mut().zip(&ray.vector) {
                row[col] += Rat::from_integer(x.clone());
            }
        }
        rows.extend(block);
    }
    let pins: Vec<Vec<Rat>> = (0..assistants.len())
        .map(|a| {
            let mut r = vec![Rat::zero(); unknowns];
            r[faces + a] = Rat::from_integer(1.into());
            r
        })
        .collect();
    Ok(GluedSystem {
        local_fans,
        glued,
        faces,
        assistants,
        equations: RatMatrix::from_rows(unknowns, &rows)?,
        constraints: RatMatrix::from_rows(unknowns, &pins)?,
    })
}

/// Stress space from the glued system with assistant unknowns pinned to zero,
/// checked against the direct balancing kernel.
pub fn glued_stress_space(fw: &KFramework) -> Result<StressBasis> {
    let sys = glued_system(fw)?;
    let kernel = kernel_basis(&sys.equations.stack(&sys.constraints)?);
    let faces: Vec<Vec<Rat>> = kernel.iter().map(|v| v[..sys.faces].to_vec()).collect();
    let glued = StressBasis { labels: fw.stress_labels(), vectors: canonical_span(sys.faces, &faces) };
    let direct = self_stress_basis(fw)?;
    let direct_span = canonical_span(sys.faces, &direct.vectors);
    if glued.vectors != direct_span {
        return Err(Error::Theorem1Mismatch(format!(
            "glued system has dimension {}, balancing kernel has dimension {}",
            glued.dim(),
            direct.dim()
        )));
    }
    Ok(glued)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeBalance {
    pub edge: String,
    pub residual: [String; 2],
    pub balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    /// One entry per weight vector, one balance per local fan.
    pub vectors: Vec<Vec<EdgeBalance>>,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.vectors.iter().flatten().all(|b| b.balanced)
    }
}

/// Treats each face-weight vector as a weight on local fan rays (zero on
/// assistant rays) and checks rank-2 balancing at every local fan.
pub fn theorem1_check(fw: &KFramework, weights: &[Vec<Rat>]) -> Result<Theorem1Report> {
    let sys = glued_system(fw)?;
    let mut vectors = Vec::new();
    for w in weights {
        let mut out = Vec::new();
        for lf in &sys.local_fans {
            let mut res = [Rat::zero(), Rat::zero()];
            for ray in &lf.rays {
                if let LocalRayLabel::Face(f) = ray.label {
                    for (r, x) in res.iter_mut().zip(&ray.vector) {
                        *r += &w[f] * Rat::from_integer(x.clone());
                    }
                }
            }
            let balanced = res.iter().all(Zero::is_zero);
            out.push(EdgeBalance { edge: fw.edges()[lf.edge].id.clone(), residual: [format_rat(&res[0]), format_rat(&res[1])], balanced });
        }
        vectors.push(out);
    }
    Ok(Theorem1Report { vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> [Int; 2] {
        [Int::from(x), Int::from(y)]
    }

    #[test]
    fn circular_order() {
        let mut vs = vec![v(0, -1), v(-1, 0), v(1, 1), v(1, 0), v(1, -1), v(-1, 1)];
        vs.sort_by(angle_cmp);
        assert_eq!(vs, vec![v(1, 0), v(1, 1), v(-1, 1), v(-1, 0), v(0, -1), v(1, -1)]);
    }

    #[test]
    fn half_plane_detection() {
        assert!(in_closed_half_plane(&[v(1, 0), v(1, 1), v(0, 1)]));
        assert!(in_closed_half_plane(&[v(1, 0), v(0, 1), v(-1, 0)]));
        assert!(!in_closed_half_plane(&[v(1, 0), v(-1, 1), v(-1, -1)]));
        assert!(in_closed_half_plane(&[v(1, 0), v(-1, 0)]));
    }
}
