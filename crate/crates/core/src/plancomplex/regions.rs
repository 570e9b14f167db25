use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;

use super::refine::refine;
use super::{overlay_all, PlanarComplex};
use crate::exactgeom::Vec2;
use crate::rational::{self, Rational};

/// Number of connected components of the complement of the support.
///
/// Independent of any counting formula: the complex is clipped to a box one
/// unit larger than its vertex bounding box, and the faces of the resulting
/// plane graph are traced. Every complementary region of an arrangement of
/// tropical curves is convex, so each meets the box in exactly one face.
pub fn region_count_oracle(x: &PlanarComplex) -> usize {
    let x = overlay_all(&[x]);
    debug_assert!(refine(&[&x]).pieces.len() == x.edges().len());
    if x.edges().is_empty() {
        return 1;
    }
    let (mut lo, mut hi) = x.bounding_box().expect("edges have vertices");
    let one = rational::one();
    lo = Vec2::new(&lo.x - &one, &lo.y - &one);
    hi = Vec2::new(&hi.x + &one, &hi.y + &one);

    let mut graph = Graph::default();
    for (a, b, _) in x.segments() {
        graph.link(a.clone(), b.clone());
    }
    let mut on_boundary: BTreeSet<Vec2> = [
        lo.clone(),
        hi.clone(),
        Vec2::new(lo.x.clone(), hi.y.clone()),
        Vec2::new(hi.x.clone(), lo.y.clone()),
    ]
    .into_iter()
    .collect();
    for (p, d) in x.rays() {
        let exit = exit_point(p, d, &lo, &hi);
        graph.link(p.clone(), exit.clone());
        on_boundary.insert(exit);
    }
    // Walk the box counterclockwise: bottom, right, top, left.
    let side = |q: &Vec2, k: usize| match k {
        0 => q.y == lo.y,
        1 => q.x == hi.x,
        2 => q.y == hi.y,
        _ => q.x == lo.x,
    };
    for k in 0..4 {
        let mut pts: Vec<Vec2> = on_boundary.iter().filter(|q| side(q, k)).cloned().collect();
        pts.sort_by(|a, b| if k % 2 == 0 { a.x.cmp(&b.x) } else { a.y.cmp(&b.y) });
        for w in pts.windows(2) {
            graph.link(w[0].clone(), w[1].clone());
        }
    }
    graph.face_cycles() - graph.components()
}

fn exit_point(p: &Vec2, d: &Vec2, lo: &Vec2, hi: &Vec2) -> Vec2 {
    let mut ts: Vec<Rational> = Vec::new();
    if d.x.is_positive() {
        ts.push((&hi.x - &p.x) / &d.x);
    } else if d.x.is_negative() {
        ts.push((&lo.x - &p.x) / &d.x);
    }
    if d.y.is_positive() {
        ts.push((&hi.y - &p.y) / &d.y);
    } else if d.y.is_negative() {
        ts.push((&lo.y - &p.y) / &d.y);
    }
    let t = ts.into_iter().min().expect("nonzero direction");
    p + &d.scale(&t)
}

#[derive(Default)]
struct Graph {
    adjacency: BTreeMap<Vec2, BTreeSet<Vec2>>,
}

impl Graph {
    fn link(&mut self, a: Vec2, b: Vec2) {
        if a == b {
            return;
        }
        self.adjacency.entry(a.clone()).or_default().insert(b.clone());
        self.adjacency.entry(b).or_default().insert(a);
    }

    /// Number of boundary cycles traced by the half-edge rule "turn to the
    /// next edge clockwise".
    fn face_cycles(&self) -> usize {
        let sorted: BTreeMap<&Vec2, Vec<&Vec2>> = self
            .adjacency
            .iter()
            .map(|(v, nbrs)| {
                let mut n: Vec<&Vec2> = nbrs.iter().collect();
                n.sort_by(|a, b| (*a - v).cmp_angle(&(*b - v)));
                (v, n)
            })
            .collect();
        let mut seen: BTreeSet<(&Vec2, &Vec2)> = BTreeSet::new();
        let mut cycles = 0;
        for (&u, nbrs) in &sorted {
            for &v in nbrs {
                if seen.contains(&(u, v)) {
                    continue;
                }
                cycles += 1;
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    let around = &sorted[b];
                    let back = around.iter().position(|&w| w == a).expect("symmetric adjacency");
                    let next = around[(back + around.len() - 1) % around.len()];
                    a = b;
                    b = next;
                }
            }
        }
        cycles
    }

    fn components(&self) -> usize {
        let mut seen: BTreeSet<&Vec2> = BTreeSet::new();
        let mut count = 0;
        for start in self.adjacency.keys() {
            if !seen.insert(start) {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in &self.adjacency[v] {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
        count
    }
}
