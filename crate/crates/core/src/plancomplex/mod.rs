//! Weighted one-dimensional polyhedral complexes in the plane.
//!
//! A cell's weight and direction travel together as one exact vector: the
//! weight is its Euclidean length. Segments store the vector pointing from
//! `start` to `end`; rays store it pointing away from `start`. This keeps
//! balancing checks free of square roots.

mod curve;
mod fan;
mod refine;
mod regions;
pub mod svg;

use std::collections::BTreeMap;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactgeom::Vec2;

pub use curve::tropical_curve;
pub use fan::WeightedFan;
pub use refine::{
    corner_locus, dominates, factorization_curve, intersection_all, intersection_complex, overlay,
    overlay_all,
};
pub use regions::region_count_oracle;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub start: usize,
    /// `None` for a ray.
    pub end: Option<usize>,
    pub weight: Vec2,
}

impl Edge {
    pub fn is_ray(&self) -> bool {
        self.end.is_none()
    }
}

/// Planar complex made of vertices, segments and rays. Isolated vertices are
/// allowed so that intersections of curves can be represented.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PlanarComplex {
    vertices: Vec<Vec2>,
    edges: Vec<Edge>,
}

impl PlanarComplex {
    pub fn empty() -> Self {
        PlanarComplex::default()
    }

    /// Validates and canonicalizes an explicit vertex/edge list.
    pub fn new(vertices: Vec<Vec2>, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            let bad = |m: &str| Error::Invalid(format!("edge from vertex {}: {m}", e.start));
            if e.start >= vertices.len() || e.end.is_some_and(|j| j >= vertices.len()) {
                return Err(bad("vertex index out of range"));
            }
            if e.weight.is_zero() {
                return Err(bad("zero weighted vector"));
            }
            if let Some(j) = e.end {
                let d = &vertices[j] - &vertices[e.start];
                if !d.same_direction(&e.weight) {
                    return Err(bad("weighted vector must point along the segment"));
                }
            }
        }
        Ok(PlanarComplex { vertices, edges }.canonical())
    }

    /// Builds a complex from loose geometric pieces. Segment vectors may point
    /// either way along the segment; ray vectors give the ray direction.
    pub fn from_parts(points: Vec<Vec2>, segments: Vec<(Vec2, Vec2, Vec2)>, rays: Vec<(Vec2, Vec2)>) -> Result<Self> {
        let mut b = Builder::default();
        for p in points {
            b.vertex(p);
        }
        for (a, c, w) in segments {
            let d = &c - &a;
            if d.is_zero() || w.is_zero() || !d.is_parallel(&w) {
                return Err(Error::Invalid(format!("segment {a} -> {c} with vector {w}")));
            }
            let w = if d.dot(&w).is_positive() { w } else { -&w };
            b.segment(a, c, w);
        }
        for (p, w) in rays {
            if w.is_zero() {
                return Err(Error::Invalid(format!("ray at {p} with zero vector")));
            }
            b.ray(p, w);
        }
        Ok(b.finish())
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    pub fn segments(&self) -> impl Iterator<Item = (&Vec2, &Vec2, &Vec2)> {
        self.edges
            .iter()
            .filter_map(|e| e.end.map(|j| (&self.vertices[e.start], &self.vertices[j], &e.weight)))
    }

    pub fn rays(&self) -> impl Iterator<Item = (&Vec2, &Vec2)> {
        self.edges
            .iter()
            .filter(|e| e.is_ray())
            .map(|e| (&self.vertices[e.start], &e.weight))
    }

    /// Number of vertices minus number of edges, rays counted as open cells.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    /// Outgoing weighted vectors summed at each vertex.
    fn outgoing_sums(&self) -> Vec<Vec2> {
        let mut sums = vec![Vec2::zero(); self.vertices.len()];
        for e in &self.edges {
            sums[e.start] = &sums[e.start] + &e.weight;
            if let Some(j) = e.end {
                sums[j] = &sums[j] - &e.weight;
            }
        }
        sums
    }

    /// Vertices where the complex actually bends or branches. The anchor
    /// vertex of a full line is not one of them.
    pub fn corner_vertices(&self) -> Vec<Vec2> {
        let mut out: Vec<Vec<Vec2>> = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            out[e.start].push(e.weight.clone());
            if let Some(j) = e.end {
                out[j].push(-&e.weight);
            }
        }
        self.vertices
            .iter()
            .zip(out)
            .filter(|(_, o)| !(o.len() == 2 && o[0] == -&o[1]))
            .map(|(v, _)| v.clone())
            .collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.outgoing_sums().iter().all(Vec2::is_zero)
    }

    /// Unbounded directions, parallel rays merged by adding their vectors.
    pub fn recession_fan(&self) -> WeightedFan {
        WeightedFan::new(Vec2::zero(), self.rays().map(|(_, w)| w.clone()).collect())
            .expect("ray vectors are nonzero")
    }

    /// Drops vertices that carry no edge.
    pub fn pure_part(&self) -> PlanarComplex {
        let mut b = Builder::default();
        for (a, c, w) in self.segments() {
            b.segment(a.clone(), c.clone(), w.clone());
        }
        for (p, w) in self.rays() {
            b.ray(p.clone(), w.clone());
        }
        b.finish()
    }

    pub fn isolated_vertices(&self) -> Vec<Vec2> {
        let mut used = vec![false; self.vertices.len()];
        for e in &self.edges {
            used[e.start] = true;
            if let Some(j) = e.end {
                used[j] = true;
            }
        }
        self.vertices
            .iter()
            .zip(used)
            .filter(|(_, u)| !u)
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// Canonical form: vertices sorted, segments oriented from the smaller
    /// vertex, edges sorted, and superfluous vertices removed. A vertex is
    /// superfluous when exactly two edges meet there in opposite directions
    /// with equal vectors. A full line keeps one vertex, at the point of the
    /// line closest to the origin.
    pub fn canonical(&self) -> PlanarComplex {
        let mut vertices = self.vertices.clone();
        let mut edges: Vec<Option<Edge>> = self.edges.iter().cloned().map(Some).collect();
        let mut alive = vec![true; vertices.len()];
        let mut changed = true;
        while changed {
            changed = false;
            let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
            for (i, e) in edges.iter().enumerate() {
                if let Some(e) = e {
                    incident[e.start].push(i);
                    if let Some(j) = e.end {
                        incident[j].push(i);
                    }
                }
            }
            for v in 0..vertices.len() {
                if !alive[v] || incident[v].len() != 2 {
                    continue;
                }
                let (i, j) = (incident[v][0], incident[v][1]);
                let (ei, ej) = (edges[i].clone().unwrap(), edges[j].clone().unwrap());
                let out = |e: &Edge| if e.start == v { e.weight.clone() } else { -&e.weight };
                let far = |e: &Edge| if e.start == v { e.end } else { Some(e.start) };
                let (oi, oj) = (out(&ei), out(&ej));
                if oi != -&oj {
                    continue;
                }
                match (far(&ei), far(&ej)) {
                    (None, None) => {
                        let p = &vertices[v];
                        let d = &oi;
                        let q = p - &d.scale(&(d.dot(p) / d.norm_sq()));
                        if q != *p {
                            vertices[v] = q;
                            changed = true;
                        }
                    }
                    (Some(a), Some(b)) => {
                        edges[i] = Some(Edge { start: a, end: Some(b), weight: oj });
                        edges[j] = None;
                        alive[v] = false;
                        changed = true;
                    }
                    (Some(a), None) => {
                        edges[i] = Some(Edge { start: a, end: None, weight: oj });
                        edges[j] = None;
                        alive[v] = false;
                        changed = true;
                    }
                    (None, Some(b)) => {
                        edges[j] = Some(Edge { start: b, end: None, weight: oi });
                        edges[i] = None;
                        alive[v] = false;
                        changed = true;
                    }
                }
                if changed {
                    break;
                }
            }
        }
        let mut b = Builder::default();
        for (v, p) in vertices.iter().enumerate() {
            if alive[v] {
                b.vertex(p.clone());
            }
        }
        for e in edges.into_iter().flatten() {
            match e.end {
                Some(j) => b.segment(vertices[e.start].clone(), vertices[j].clone(), e.weight),
                None => b.ray(vertices[e.start].clone(), e.weight),
            }
        }
        b.sorted()
    }

    /// Axis-aligned box around the vertices, `None` for the empty complex.
    pub fn bounding_box(&self) -> Option<(Vec2, Vec2)> {
        let first = self.vertices.first()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for v in &self.vertices {
            lo.x = lo.x.clone().min(v.x.clone());
            lo.y = lo.y.clone().min(v.y.clone());
            hi.x = hi.x.clone().max(v.x.clone());
            hi.y = hi.y.clone().max(v.y.clone());
        }
        Some((lo, hi))
    }
}

/// Collects cells keyed by their endpoint coordinates.
#[derive(Default)]
pub(crate) struct Builder {
    index: BTreeMap<Vec2, usize>,
    vertices: Vec<Vec2>,
    edges: Vec<Edge>,
}

impl Builder {
    pub(crate) fn vertex(&mut self, p: Vec2) -> usize {
        if let Some(&i) = self.index.get(&p) {
            return i;
        }
        self.vertices.push(p.clone());
        self.index.insert(p, self.vertices.len() - 1);
        self.vertices.len() - 1
    }

    pub(crate) fn segment(&mut self, a: Vec2, b: Vec2, w: Vec2) {
        let (i, j) = (self.vertex(a), self.vertex(b));
        self.edges.push(Edge { start: i, end: Some(j), weight: w });
    }

    pub(crate) fn ray(&mut self, p: Vec2, w: Vec2) {
        let i = self.vertex(p);
        self.edges.push(Edge { start: i, end: None, weight: w });
    }

    /// Sorted vertex and edge order without merging vertices.
    fn sorted(self) -> PlanarComplex {
        let order: Vec<usize> = self.index.values().copied().collect();
        let mut remap = vec![0; self.vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let vertices: Vec<Vec2> = order.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut edges: Vec<Edge> = self
            .edges
            .into_iter()
            .map(|e| {
                let s = remap[e.start];
                match e.end.map(|j| remap[j]) {
                    Some(t) if t < s => Edge { start: t, end: Some(s), weight: -&e.weight },
                    end => Edge { start: s, end, weight: e.weight },
                }
            })
            .collect();
        edges.sort();
        PlanarComplex { vertices, edges }
    }

    pub(crate) fn finish(self) -> PlanarComplex {
        self.sorted().canonical()
    }
}

/// Corner locus of a quotient: cells of positive weight (where the
/// function is convex) and of negative weight (concave), after cancellation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SignedComplex {
    pub positive: PlanarComplex,
    pub negative: PlanarComplex,
}

impl SignedComplex {
    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    /// Support of both parts as one unsigned complex.
    pub fn support(&self) -> PlanarComplex {
        overlay(&self.positive, &self.negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> Vec2 {
        Vec2::int(x, y)
    }

    fn tripod() -> PlanarComplex {
        PlanarComplex::from_parts(vec![], vec![], vec![(v(0, 0), v(1, 1)), (v(0, 0), v(-1, 0)), (v(0, 0), v(0, -1))]).unwrap()
    }

    #[test]
    fn euler_characteristic_counts_cells() {
        assert_eq!(tripod().euler_characteristic(), -2);
        assert_eq!(PlanarComplex::empty().euler_characteristic(), 0);
        let point = PlanarComplex::from_parts(vec![v(1, 2)], vec![], vec![]).unwrap();
        assert_eq!(point.euler_characteristic(), 1);
    }

    #[test]
    fn balance_at_vertices() {
        assert!(tripod().is_balanced());
        let bent = PlanarComplex::from_parts(vec![], vec![], vec![(v(0, 0), v(1, 0)), (v(0, 0), v(0, 1))]).unwrap();
        assert!(!bent.is_balanced());
    }

    #[test]
    fn canonical_merges_straight_vertices() {
        let pieces = PlanarComplex::from_parts(
            vec![],
            vec![(v(0, 0), v(1, 0), v(2, 0)), (v(1, 0), v(3, 0), v(2, 0))],
            vec![(v(3, 0), v(2, 0))],
        )
        .unwrap();
        let whole = PlanarComplex::from_parts(vec![], vec![], vec![(v(0, 0), v(2, 0))]).unwrap();
        assert_eq!(pieces, whole);
    }

    #[test]
    fn lines_sit_at_the_closest_point_to_the_origin() {
        let line = PlanarComplex::from_parts(vec![], vec![], vec![(v(3, 1), v(1, 1)), (v(3, 1), v(-1, -1))]).unwrap();
        assert_eq!(line.vertices(), &[v(1, -1)]);
        assert_eq!(line.euler_characteristic(), -1);
    }

    #[test]
    fn unequal_weights_keep_the_vertex() {
        let c = PlanarComplex::from_parts(vec![], vec![], vec![(v(0, 0), v(1, 0)), (v(0, 0), v(-2, 0))]).unwrap();
        assert_eq!(c.vertices().len(), 1);
        assert!(!c.is_balanced());
    }
}
