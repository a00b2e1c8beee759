use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use num_traits::Zero;

use super::general::{Flat, Incidence, KFramework};
use super::{Balancing, Issue, ValidationReport};
use crate::error::{Error, Result};
use crate::exactlinalg::{primitive, Int, Rat, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarVertex {
    pub id: String,
    pub point: [Int; 2],
}

/// An embedded graph with integer vertex coordinates. Edges are stored as
/// vertex index pairs in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarFramework {
    vertices: Vec<PlanarVertex>,
    edges: Vec<(usize, usize)>,
}

impl PlanarFramework {
    pub fn new(vertices: Vec<PlanarVertex>, edges: Vec<(String, String)>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::DuplicateId(v.id.clone()));
            }
        }
        let lookup = |id: &String| index.get(id).copied().ok_or_else(|| Error::UnknownId(id.clone()));
        let edges = edges
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { vertices, edges })
    }

    /// Convenience constructor for small literal frameworks.
    pub fn from_points(points: &[(&str, i64, i64)], edges: &[(&str, &str)]) -> Result<Self> {
        let vertices = points
            .iter()
            .map(|&(id, x, y)| PlanarVertex { id: id.to_string(), point: [Int::from(x), Int::from(y)] })
            .collect();
        let edges = edges.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect();
        Self::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[PlanarVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn point(&self, i: usize) -> &[Int; 2] {
        &self.vertices[i].point
    }

    pub fn edge_label(&self, e: usize) -> String {
        let (a, b) = self.edges[e];
        format!("{}-{}", self.vertices[a].id, self.vertices[b].id)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Index of the edge joining `a` and `b`, in either orientation.
    pub fn find_edge(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.iter().position(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    /// Same framework with every coordinate mapped through `f`.
    pub fn map_points(&self, f: impl Fn(&[Int; 2]) -> [Int; 2]) -> Self {
        let vertices = self
            .vertices
            .iter()
            .map(|v| PlanarVertex { id: v.id.clone(), point: f(&v.point) })
            .collect();
        Self { vertices, edges: self.edges.clone() }
    }

    /// Primitive direction from vertex `from` towards vertex `to`.
    pub fn primitive_direction(&self, from: usize, to: usize) -> Result<Vec<Int>> {
        let (p, q) = (self.point(from), self.point(to));
        primitive(&[&q[0] - &p[0], &q[1] - &p[1]])
    }

    /// The same data as a general framework in dimension 2 with k = 1: each
    /// vertex is a point edge, each graph edge a line face, and the sample for
    /// (vertex, edge) is the opposite endpoint.
    pub fn to_general(&self) -> KFramework {
        let to_rat = |p: &[Int; 2]| p.iter().map(|x| Rat::from_integer(x.clone())).collect::<Vec<_>>();
        let edges = self
            .vertices
            .iter()
            .map(|v| Flat { id: v.id.clone(), point: to_rat(&v.point), dirs: vec![] })
            .collect();
        let mut faces = Vec::new();
        let mut incidences = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            let dir = self.primitive_direction(a, b).unwrap_or_else(|_| vec![Int::zero(), Int::zero()]);
            faces.push(Flat { id: self.edge_label(e), point: to_rat(self.point(a)), dirs: vec![dir] });
            incidences.push(Incidence { edge: a, face: e, sample: to_rat(self.point(b)), normal: None });
            incidences.push(Incidence { edge: b, face: e, sample: to_rat(self.point(a)), normal: None });
        }
        incidences.sort_by_key(|i| (i.edge, i.face));
        KFramework::from_parts(2, 1, edges, faces, incidences)
    }
}

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orient(a: &[Int; 2], b: &[Int; 2], c: &[Int; 2]) -> Ordering {
    let det = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
    det.cmp(&Int::zero())
}

/// `p` on the closed segment `[a, b]`, given that the three are collinear.
fn within_box(a: &[Int; 2], b: &[Int; 2], p: &[Int; 2]) -> bool {
    (0..2).all(|k| a[k].clone().min(b[k].clone()) <= p[k] && p[k] <= a[k].clone().max(b[k].clone()))
}

pub(crate) fn on_open_segment(a: &[Int; 2], b: &[Int; 2], p: &[Int; 2]) -> bool {
    p != a && p != b && orient(a, b, p) == Ordering::Equal && within_box(a, b, p)
}

pub(crate) fn segments_intersect(a: &[Int; 2], b: &[Int; 2], c: &[Int; 2], d: &[Int; 2]) -> bool {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal && o3 != Ordering::Equal && o4 != Ordering::Equal {
        return true;
    }
    (o1 == Ordering::Equal && within_box(a, b, c))
        || (o2 == Ordering::Equal && within_box(a, b, d))
        || (o3 == Ordering::Equal && within_box(c, d, a))
        || (o4 == Ordering::Equal && within_box(c, d, b))
}

/// Checks the embedded-graph conditions: distinct points, no loops or repeated
/// edges, and edges meeting only at shared endpoints. Vertices of degree below
/// three are reported as warnings.
pub fn validate_planar(fw: &PlanarFramework) -> ValidationReport {
    let mut report = ValidationReport::default();
    let vs = &fw.vertices;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if vs[i].point == vs[j].point {
                report.failures.push(Issue::DuplicatePoint { a: vs[i].id.clone(), b: vs[j].id.clone() });
            }
        }
    }

    let mut seen = HashSet::new();
    let mut proper = Vec::new();
    for (e, &(a, b)) in fw.edges.iter().enumerate() {
        if a == b {
            report.failures.push(Issue::Loop { vertex: vs[a].id.clone() });
            continue;
        }
        if !seen.insert((a.min(b), a.max(b))) {
            report.failures.push(Issue::RepeatedEdge { edge: fw.edge_label(e) });
            continue;
        }
        proper.push(e);
    }

    for (x, &e) in proper.iter().enumerate() {
        let (a, b) = fw.edges[e];
        let (pa, pb) = (fw.point(a), fw.point(b));
        if pa == pb {
            continue;
        }
        for (v, vert) in vs.iter().enumerate() {
            if v != a && v != b && on_open_segment(pa, pb, &vert.point) {
                report.failures.push(Issue::VertexOnEdge { vertex: vert.id.clone(), edge: fw.edge_label(e) });
            }
        }
        for &f in &proper[x + 1..] {
            let (c, d) = fw.edges[f];
            let (pc, pd) = (fw.point(c), fw.point(d));
            let shared: Vec<usize> = [a, b].into_iter().filter(|u| *u == c || *u == d).collect();
            let bad = match shared.len() {
                0 => segments_intersect(pa, pb, pc, pd),
                1 => {
                    let s = shared[0];
                    let other1 = if s == a { pb } else { pa };
                    let other2 = if s == c { pd } else { pc };
                    let ps = fw.point(s);
                    // collinear and on the same side of the shared endpoint means overlap
                    orient(ps, other1, other2) == Ordering::Equal
                        && (0..2).all(|k| {
                            let u = &other1[k] - &ps[k];
                            let w = &other2[k] - &ps[k];
                            &u * &w >= Int::zero()
                        })
                }
                _ => false,
            };
            if bad {
                report.failures.push(Issue::SegmentsCross { first: fw.edge_label(e), second: fw.edge_label(f) });
            }
        }
    }

    for (v, vert) in vs.iter().enumerate() {
        let degree = fw.degree(v);
        if degree < 3 {
            report.warnings.push(Issue::LowDegree { vertex: vert.id.clone(), degree });
        }
    }
    report
}

impl Balancing for PlanarFramework {
    fn stress_labels(&self) -> Vec<String> {
        (0..self.edges.len()).map(|e| self.edge_label(e)).collect()
    }

    /// Two rows per vertex of positive degree; the entry for edge `ij` at
    /// vertex `i` is the primitive direction from `p_i` to `p_j`.
    fn balancing_matrix(&self) -> Result<RatMatrix> {
        let m = self.edges.len();
        let mut rows = Vec::new();
        for v in 0..self.vertices.len() {
            if self.degree(v) == 0 {
                continue;
            }
            let mut block = vec![vec![Rat::zero(); m]; 2];
            for (e, &(a, b)) in self.edges.iter().enumerate() {
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                let dir = self.primitive_direction(v, other)?;
                for k in 0..2 {
                    block[k][e] = Rat::from_integer(dir[k].clone());
                }
            }
            rows.extend(block);
        }
        RatMatrix::from_rows(m, &rows)
    }
}
