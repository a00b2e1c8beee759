use std::collections::{HashMap, HashSet};

use num_traits::{Signed, Zero};

use super::{Balancing, Issue, ValidationReport};
use crate::error::{Error, Result};
use crate::exactlinalg::{
    hermite_rows, in_span, primitive_of_rational, rank, smith_form, to_rat_vec, Int, IntMatrix, Rat, RatMatrix,
};

/// An affine flat `point + span(dirs)` with rational base point and integer directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    pub id: String,
    pub point: Vec<Rat>,
    pub dirs: Vec<Vec<Int>>,
}

impl Flat {
    fn dir_matrix(&self, dim: usize) -> Result<IntMatrix> {
        IntMatrix::from_rows(dim, &self.dirs)
    }

    fn rat_dirs(&self) -> Vec<Vec<Rat>> {
        self.dirs.iter().map(|d| to_rat_vec(d)).collect()
    }

    /// Whether the affine point `x` lies on the flat.
    pub fn contains_point(&self, x: &[Rat]) -> bool {
        let offset: Vec<Rat> = x.iter().zip(&self.point).map(|(a, b)| a - b).collect();
        in_span(self.point.len(), &self.rat_dirs(), &offset)
    }

    pub fn contains_direction(&self, d: &[Int]) -> bool {
        in_span(self.point.len(), &self.rat_dirs(), &to_rat_vec(d))
    }
}

/// One incidence: a face through an edge, with a sample point on the face off
/// the edge that fixes which side of the edge the face extends to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incidence {
    pub edge: usize,
    pub face: usize,
    pub sample: Vec<Rat>,
    /// Optional explicit ambient normal; checked against the sample.
    pub normal: Option<Vec<Int>>,
}

/// A k-framework in dimension `dim`: (k-1)-dimensional edges, k-dimensional faces,
/// and edge-in-face incidences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KFramework {
    dim: usize,
    k: usize,
    edges: Vec<Flat>,
    faces: Vec<Flat>,
    incidences: Vec<Incidence>,
}

/// Incidence given by ids, as it appears in input documents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceSpec {
    pub edge: String,
    pub face: String,
    pub sample: Vec<Rat>,
    pub normal: Option<Vec<Int>>,
}

impl KFramework {
    pub fn new(dim: usize, k: usize, edges: Vec<Flat>, faces: Vec<Flat>, incidences: Vec<IncidenceSpec>) -> Result<Self> {
        let index = |flats: &[Flat]| -> Result<HashMap<String, usize>> {
            let mut m = HashMap::new();
            for (i, f) in flats.iter().enumerate() {
                if m.insert(f.id.clone(), i).is_some() {
                    return Err(Error::DuplicateId(f.id.clone()));
                }
            }
            Ok(m)
        };
        let (ei, fi) = (index(&edges)?, index(&faces)?);
        let incidences = incidences
            .into_iter()
            .map(|s| {
                let edge = *ei.get(&s.edge).ok_or_else(|| Error::UnknownId(s.edge.clone()))?;
                let face = *fi.get(&s.face).ok_or_else(|| Error::UnknownId(s.face.clone()))?;
                Ok(Incidence { edge, face, sample: s.sample, normal: s.normal })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dim, k, edges, faces, incidences })
    }

    pub(crate) fn from_parts(dim: usize, k: usize, edges: Vec<Flat>, faces: Vec<Flat>, incidences: Vec<Incidence>) -> Self {
        Self { dim, k, edges, faces, incidences }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Flat] {
        &self.edges
    }

    pub fn faces(&self) -> &[Flat] {
        &self.faces
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn incidences_at(&self, edge: usize) -> impl Iterator<Item = (usize, &Incidence)> {
        self.incidences.iter().enumerate().filter(move |(_, i)| i.edge == edge)
    }

    pub fn incidence_specs(&self) -> Vec<IncidenceSpec> {
        self.incidences
            .iter()
            .map(|i| IncidenceSpec {
                edge: self.edges[i.edge].id.clone(),
                face: self.faces[i.face].id.clone(),
                sample: i.sample.clone(),
                normal: i.normal.clone(),
            })
            .collect()
    }
}

/// Projection of the ambient lattice onto `N / (N ∩ span(e))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMap {
    /// `rank x dim`, surjective onto `Z^rank`, kernel = saturated span of the edge directions.
    pub matrix: IntMatrix,
    pub rank: usize,
}

impl QuotientMap {
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        self.matrix.to_rat().mul_vec(v).expect("vector has ambient dimension")
    }

    pub fn apply_int(&self, v: &[Int]) -> Vec<Int> {
        self.matrix.mul_vec(v).expect("vector has ambient dimension")
    }
}

/// Quotient lattice presentation for an edge. The complement is read off the
/// right Smith transform of the direction matrix and then put into row Hermite
/// form, so the result depends only on the edge's direction lattice.
pub fn quotient_map(fw: &KFramework, edge: usize) -> Result<QuotientMap> {
    let e = &fw.edges[edge];
    let dirs = e.dir_matrix(fw.dim).map_err(|_| Error::DegenerateEdge(e.id.clone()))?;
    let s = smith_form(&dirs);
    if s.rank() != dirs.rows() {
        return Err(Error::DegenerateEdge(e.id.clone()));
    }
    let r = s.rank();
    let d = fw.dim;
    // x = c * right^{-1}, so the quotient coordinates are the trailing entries of x * right
    let rows: Vec<Vec<Int>> = (r..d).map(|j| s.right.column(j)).collect();
    let proj = IntMatrix::from_rows(d, &rows)?;
    let matrix = hermite_rows(&proj);
    Ok(QuotientMap { rank: matrix.rows(), matrix })
}

/// The primitive normal of a face at an edge, expressed in quotient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceNormal {
    pub edge: usize,
    pub face: usize,
    pub vector: Vec<Int>,
}

pub(crate) fn normal_with_map(fw: &KFramework, q: &QuotientMap, inc: &Incidence) -> Result<Vec<Int>> {
    let e = &fw.edges[inc.edge];
    let offset: Vec<Rat> = inc.sample.iter().zip(&e.point).map(|(a, b)| a - b).collect();
    primitive_of_rational(&q.apply(&offset)).map_err(|_| Error::SampleOnEdge {
        edge: e.id.clone(),
        face: fw.faces[inc.face].id.clone(),
    })
}

pub fn incidence_normal(fw: &KFramework, incidence: usize) -> Result<IncidenceNormal> {
    let inc = &fw.incidences[incidence];
    let q = quotient_map(fw, inc.edge)?;
    let vector = normal_with_map(fw, &q, inc)?;
    Ok(IncidenceNormal { edge: inc.edge, face: inc.face, vector })
}

fn check_flat(report: &mut ValidationReport, f: &Flat, dim: usize, want_dirs: usize, kind: &str) -> bool {
    let item = format!("{kind} {}", f.id);
    if f.point.len() != dim {
        report.failures.push(Issue::Shape { item, detail: format!("point has {} coordinates, expected {dim}", f.point.len()) });
        return false;
    }
    if f.dirs.len() != want_dirs {
        report.failures.push(Issue::Shape { item, detail: format!("{} directions, expected {want_dirs}", f.dirs.len()) });
        return false;
    }
    if f.dirs.iter().any(|d| d.len() != dim) {
        report.failures.push(Issue::Shape { item, detail: format!("direction without {dim} coordinates") });
        return false;
    }
    let m = RatMatrix::from_rows(dim, &f.rat_dirs()).expect("checked lengths");
    if rank(&m) != want_dirs {
        report.failures.push(Issue::DegenerateFlat { item });
        return false;
    }
    true
}

/// Checks shapes, independence of directions, edge-in-face containment, sample
/// placement, repeated incidences, and any supplied normals. Edges with one or
/// two incident faces are warnings.
pub fn validate_general(fw: &KFramework) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (d, k) = (fw.dim, fw.k);
    if k == 0 || k > d {
        report.failures.push(Issue::Shape { item: "framework".into(), detail: format!("k = {k} must satisfy 1 <= k <= dim = {d}") });
        return report;
    }
    let edge_ok: Vec<bool> = fw.edges.iter().map(|e| check_flat(&mut report, e, d, k - 1, "edge")).collect();
    let face_ok: Vec<bool> = fw.faces.iter().map(|f| check_flat(&mut report, f, d, k, "face")).collect();

    let mut seen = HashSet::new();
    let mut counts = vec![0usize; fw.edges.len()];
    for inc in &fw.incidences {
        let (e, f) = (&fw.edges[inc.edge], &fw.faces[inc.face]);
        let (edge, face) = (e.id.clone(), f.id.clone());
        if !seen.insert((inc.edge, inc.face)) {
            report.failures.push(Issue::RepeatedIncidence { edge, face });
            continue;
        }
        counts[inc.edge] += 1;
        if !edge_ok[inc.edge] || !face_ok[inc.face] {
            continue;
        }
        if inc.sample.len() != d {
            report.failures.push(Issue::Shape { item: format!("incidence ({edge}, {face})"), detail: "sample dimension".into() });
            continue;
        }
        if !f.contains_point(&e.point) || !e.dirs.iter().all(|dir| f.contains_direction(dir)) {
            report.failures.push(Issue::EdgeNotInFace { edge, face });
            continue;
        }
        if !f.contains_point(&inc.sample) {
            report.failures.push(Issue::SampleNotOnFace { edge, face });
            continue;
        }
        if e.contains_point(&inc.sample) {
            report.failures.push(Issue::SampleOnEdge { edge, face });
            continue;
        }
        if let Some(n) = &inc.normal {
            if let Some(detail) = normal_problem(fw, inc, n) {
                report.failures.push(Issue::BadNormal { edge, face, detail });
            }
        }
    }
    for (i, &c) in counts.iter().enumerate() {
        if c == 1 || c == 2 {
            report.warnings.push(Issue::FewIncidences { edge: fw.edges[i].id.clone(), count: c });
        }
    }
    report
}

fn normal_problem(fw: &KFramework, inc: &Incidence, n: &[Int]) -> Option<String> {
    if n.len() != fw.dim {
        return Some("wrong dimension".into());
    }
    if !fw.faces[inc.face].contains_direction(n) {
        return Some("not parallel to the face".into());
    }
    let q = quotient_map(fw, inc.edge).ok()?;
    let image = q.apply_int(n);
    let from_sample = normal_with_map(fw, &q, inc).ok()?;
    let g = image.iter().fold(Int::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    if g != Int::from(1) {
        return Some("image in the quotient lattice is not primitive".into());
    }
    if image != from_sample {
        return Some("points to the other side of the edge than the sample".into());
    }
    None
}

impl Balancing for KFramework {
    fn stress_labels(&self) -> Vec<String> {
        self.faces.iter().map(|f| f.id.clone()).collect()
    }

    /// Rows per incident edge and quotient coordinate; columns per face.
    /// Edges without incidences contribute nothing.
    fn balancing_matrix(&self) -> Result<RatMatrix> {
        let m = self.faces.len();
        let mut rows = Vec::new();
        for e in 0..self.edges.len() {
            if self.incidences_at(e).next().is_none() {
                continue;
            }
            let q = quotient_map(self, e)?;
            let mut block = vec![vec![Rat::zero(); m]; q.rank];
            for (_, inc) in self.incidences_at(e) {
                let n = normal_with_map(self, &q, inc)?;
                for (r, x) in n.iter().enumerate() {
                    block[r][inc.face] += Rat::from_integer(x.clone());
                }
            }
            rows.extend(block);
        }
        RatMatrix::from_rows(m, &rows)
    }
}

/// Whether `a` is a positive rational multiple of `b`.
pub(crate) fn same_ray(a: &[Int], b: &[Int]) -> bool {
    let Some(i) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if a[i].is_zero() || a[i].is_positive() != b[i].is_positive() {
        return false;
    }
    (0..a.len()).all(|j| &a[j] * &b[i] == &b[j] * &a[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::{ints, rats};

    fn flat(id: &str, point: &[i64], dirs: &[&[i64]]) -> Flat {
        Flat { id: id.into(), point: rats(point), dirs: dirs.iter().map(|d| ints(d)).collect() }
    }

    fn single_edge(dir: &[i64]) -> KFramework {
        KFramework::from_parts(3, 2, vec![flat("e", &[0, 0, 0], &[dir])], vec![], vec![])
    }

    #[test]
    fn point_edge_quotient_is_identity() {
        let fw = KFramework::from_parts(2, 1, vec![flat("v", &[0, 0], &[])], vec![], vec![]);
        let q = quotient_map(&fw, 0).unwrap();
        assert_eq!(q.matrix, IntMatrix::identity(2));
    }

    #[test]
    fn axis_edge_projects_to_remaining_coordinates() {
        let q = quotient_map(&single_edge(&[1, 0, 0]), 0).unwrap();
        assert_eq!(q.matrix, IntMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn diagonal_edge_quotient_surjective_with_right_kernel() {
        let q = quotient_map(&single_edge(&[1, 1, 0]), 0).unwrap();
        assert_eq!(q.rank, 2);
        assert_eq!(q.apply_int(&ints(&[1, 1, 0])), ints(&[0, 0]));
        // brute force: every target in a small box is hit, and the kernel in the box is Z(1,1,0)
        let mut hit = HashSet::new();
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                for z in -3i64..=3 {
                    let img = q.apply_int(&ints(&[x, y, z]));
                    if img.iter().all(|c| c.is_zero()) {
                        assert!(x == y && z == 0, "({x},{y},{z}) in kernel");
                    }
                    hit.insert(img);
                }
            }
        }
        for a in -1i64..=1 {
            for b in -1i64..=1 {
                assert!(hit.contains(&ints(&[a, b])));
            }
        }
    }

    #[test]
    fn degenerate_edge_rejected() {
        let fw = KFramework::from_parts(3, 3, vec![flat("e", &[0, 0, 0], &[&[1, 0, 0], &[2, 0, 0]])], vec![], vec![]);
        assert_eq!(quotient_map(&fw, 0), Err(Error::DegenerateEdge("e".into())));
    }

    #[test]
    fn same_ray_cases() {
        assert!(same_ray(&ints(&[2, 4]), &ints(&[1, 2])));
        assert!(!same_ray(&ints(&[-1, -2]), &ints(&[1, 2])));
        assert!(!same_ray(&ints(&[1, 3]), &ints(&[1, 2])));
    }
}
