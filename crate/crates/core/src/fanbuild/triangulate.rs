use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactlinalg::Int;
use crate::framework::{on_open_segment, orient, segments_intersect, PlanarFramework};

/// Order in which candidate segments are offered to the greedy completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TriangulationOrder {
    #[default]
    Lex,
    RevLex,
}

/// A triangulation of the convex hull of the framework's points that contains
/// every framework edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    /// Vertex index triples, each sorted ascending; list sorted.
    pub triangles: Vec<[usize; 3]>,
    /// All edges `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Edges of the triangulation that are not framework edges.
    pub added_edges: Vec<(usize, usize)>,
    /// Hull boundary cycle, counterclockwise from the lexicographically smallest
    /// point; collinear boundary points included.
    pub hull: Vec<usize>,
}

impl Triangulation {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

fn key(e: (usize, usize)) -> (usize, usize) {
    (e.0.min(e.1), e.0.max(e.1))
}

/// Constrained triangulation by greedy maximal segment insertion: framework
/// edges first, then every other admissible segment in lexicographic (or
/// reverse) order of its endpoint pair, skipping segments that would cross an
/// accepted one or pass through a point.
pub fn triangulate(fw: &PlanarFramework, order: TriangulationOrder) -> Result<Triangulation> {
    complete(fw, &[], order)
}

/// Same as [`triangulate`] but forces the given extra segments in before the
/// greedy completion, e.g. to reproduce a specific published triangulation.
pub fn triangulate_with(fw: &PlanarFramework, forced: &[(usize, usize)]) -> Result<Triangulation> {
    complete(fw, forced, TriangulationOrder::Lex)
}

fn point_cmp(fw: &PlanarFramework, a: usize, b: usize) -> Ordering {
    fw.point(a).cmp(fw.point(b))
}

fn complete(fw: &PlanarFramework, forced: &[(usize, usize)], order: TriangulationOrder) -> Result<Triangulation> {
    let n = fw.vertices().len();
    let noncollinear = (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| orient(fw.point(a), fw.point(b), fw.point(c)) != Ordering::Equal)));
    if !noncollinear {
        return Err(Error::DegenerateHull);
    }

    let framework: BTreeSet<(usize, usize)> = fw.edges().iter().map(|&e| key(e)).collect();
    let mut accepted: Vec<(usize, usize)> = framework.iter().copied().collect();
    let crosses = |accepted: &[(usize, usize)], a: usize, b: usize| {
        accepted.iter().any(|&(c, d)| {
            if c == a || c == b || d == a || d == b {
                return false;
            }
            segments_intersect(fw.point(a), fw.point(b), fw.point(c), fw.point(d))
        })
    };
    let blocked = |a: usize, b: usize| (0..n).any(|v| on_open_segment(fw.point(a), fw.point(b), fw.point(v)));

    for &(a, b) in forced {
        let e = key((a, b));
        if a == b || a >= n || b >= n || blocked(a, b) || crosses(&accepted, a, b) {
            return Err(Error::InvalidFramework(format!("forced segment ({a}, {b}) is not admissible")));
        }
        if !accepted.contains(&e) {
            accepted.push(e);
        }
    }

    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !accepted.contains(&(a, b)) && !blocked(a, b) {
                candidates.push((a, b));
            }
        }
    }
    let sorted_pair = |(a, b): (usize, usize)| {
        if point_cmp(fw, a, b) == Ordering::Greater {
            (b, a)
        } else {
            (a, b)
        }
    };
    candidates.sort_by(|&x, &y| {
        let (x0, x1) = sorted_pair(x);
        let (y0, y1) = sorted_pair(y);
        let c = point_cmp(fw, x0, y0).then(point_cmp(fw, x1, y1));
        match order {
            TriangulationOrder::Lex => c,
            TriangulationOrder::RevLex => c.reverse(),
        }
    });
    for (a, b) in candidates {
        if !crosses(&accepted, a, b) {
            accepted.push((a, b));
        }
    }
    accepted.sort();

    let mut adj = vec![BTreeSet::new(); n];
    for &(a, b) in &accepted {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut triangles = Vec::new();
    for &(a, b) in &accepted {
        for &c in adj[a].intersection(&adj[b]) {
            if c <= b {
                continue;
            }
            let (pa, pb, pc) = (fw.point(a), fw.point(b), fw.point(c));
            let o = orient(pa, pb, pc);
            if o == Ordering::Equal {
                continue;
            }
            let empty = (0..n).filter(|&v| v != a && v != b && v != c).all(|v| {
                let p = fw.point(v);
                !(orient(pa, pb, p) == o && orient(pb, pc, p) == o && orient(pc, pa, p) == o)
            });
            if empty {
                triangles.push([a, b, c]);
            }
        }
    }
    triangles.sort();

    let hull = hull_cycle(fw, &triangles)?;
    let h = hull.len();
    if triangles.len() != 2 * n - h - 2 || accepted.len() != 3 * n - h - 3 {
        return Err(Error::FanInvalid(format!(
            "triangulation has {} triangles and {} edges for {n} points with {h} on the hull",
            triangles.len(),
            accepted.len()
        )));
    }
    let added_edges = accepted.iter().copied().filter(|e| !framework.contains(e)).collect();
    Ok(Triangulation { triangles, edges: accepted, added_edges, hull })
}

fn hull_cycle(fw: &PlanarFramework, triangles: &[[usize; 3]]) -> Result<Vec<usize>> {
    let mut count = std::collections::BTreeMap::new();
    for t in triangles {
        for (x, y, z) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[0], t[2], t[1])] {
            count.entry(key((x, y))).or_insert_with(Vec::new).push(z);
        }
    }
    let n = fw.vertices().len();
    let mut next = vec![None; n];
    for (&(a, b), opp) in &count {
        if opp.len() != 1 {
            continue;
        }
        if orient(fw.point(a), fw.point(b), fw.point(opp[0])) == Ordering::Greater {
            next[a] = Some(b);
        } else {
            next[b] = Some(a);
        }
    }
    let start = (0..n).min_by(|&a, &b| point_cmp(fw, a, b)).ok_or(Error::DegenerateHull)?;
    let mut cycle = vec![start];
    let mut cur = start;
    loop {
        let nx = next[cur].ok_or_else(|| Error::FanInvalid("broken hull boundary".into()))?;
        if nx == start {
            break;
        }
        if cycle.len() > n {
            return Err(Error::FanInvalid("hull boundary does not close".into()));
        }
        cycle.push(nx);
        cur = nx;
    }
    Ok(cycle)
}

/// Lifted point `(p, 1)`.
pub(crate) fn lifted(p: &[Int; 2]) -> Vec<Int> {
    vec![p[0].clone(), p[1].clone(), Int::from(1)]
}
