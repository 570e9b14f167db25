//! Common refinement of several complexes.
//!
//! Every edge of every input is cut at all vertices and all pairwise edge
//! intersections (brute force over pairs). The resulting pieces are keyed by
//! geometry, so a piece shared by several inputs is recognized exactly, and
//! each input's weighted vector on that piece is recorded.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use super::{curve::tropical_curve, Builder, PlanarComplex, SignedComplex};
use crate::error::{Error, Result};
use crate::exactgeom::Vec2;
use crate::rational::Rational;
use crate::signomial::{Factorization, RationalRep};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Piece {
    /// Endpoints in increasing order.
    Segment(Vec2, Vec2),
    /// Start point and primitive direction.
    Ray(Vec2, Vec2),
}

impl Piece {
    fn direction(&self) -> Vec2 {
        match self {
            Piece::Segment(a, b) => b - a,
            Piece::Ray(_, d) => d.clone(),
        }
    }

    fn add_to(&self, b: &mut Builder, w: Vec2) {
        match self {
            Piece::Segment(p, q) => b.segment(p.clone(), q.clone(), w),
            Piece::Ray(p, _) => b.ray(p.clone(), w),
        }
    }
}

pub(crate) struct Refinement {
    /// Weighted vector of each input on each piece, oriented along the piece.
    pub pieces: BTreeMap<Piece, Vec<Vec2>>,
    /// Points of each input's support that are not interior to a piece.
    pub points: Vec<BTreeSet<Vec2>>,
}

struct Line {
    source: usize,
    origin: Vec2,
    dir: Vec2,
    bounded: bool,
    weight: Vec2,
}

impl Line {
    fn admits(&self, t: &Rational) -> bool {
        !t.is_negative() && (!self.bounded || *t <= Rational::from_integer(1.into()))
    }

    /// Parameter of `q` if it lies on the edge.
    fn locate(&self, q: &Vec2) -> Option<Rational> {
        let rel = q - &self.origin;
        if !self.dir.cross(&rel).is_zero() {
            return None;
        }
        let t = self.dir.dot(&rel) / self.dir.norm_sq();
        self.admits(&t).then_some(t)
    }

    fn at(&self, t: &Rational) -> Vec2 {
        &self.origin + &self.dir.scale(t)
    }
}

fn crossing(a: &Line, b: &Line) -> Option<Vec2> {
    let denom = a.dir.cross(&b.dir);
    if denom.is_zero() {
        return None;
    }
    let rel = &b.origin - &a.origin;
    let t = rel.cross(&b.dir) / &denom;
    let s = rel.cross(&a.dir) / &denom;
    (a.admits(&t) && b.admits(&s)).then(|| a.at(&t))
}

pub(crate) fn refine(sources: &[&PlanarComplex]) -> Refinement {
    let n = sources.len();
    let mut lines = Vec::new();
    let mut cut_points: BTreeSet<Vec2> = BTreeSet::new();
    for (k, c) in sources.iter().enumerate() {
        cut_points.extend(c.vertices().iter().cloned());
        for e in c.edges() {
            let origin = c.vertices()[e.start].clone();
            let (dir, bounded) = match e.end {
                Some(j) => (&c.vertices()[j] - &origin, true),
                None => (e.weight.clone(), false),
            };
            lines.push(Line {
                source: k,
                origin,
                dir,
                bounded,
                weight: e.weight.clone(),
            });
        }
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = crossing(&lines[i], &lines[j]) {
                cut_points.insert(p);
            }
        }
    }

    let mut pieces: BTreeMap<Piece, Vec<Vec2>> = BTreeMap::new();
    let mut points: Vec<BTreeSet<Vec2>> = vec![BTreeSet::new(); n];
    for (k, c) in sources.iter().enumerate() {
        points[k].extend(c.isolated_vertices());
    }
    for line in &lines {
        let mut stops: Vec<(Rational, Vec2)> = cut_points
            .iter()
            .filter_map(|q| line.locate(q).map(|t| (t, q.clone())))
            .collect();
        stops.sort();
        stops.dedup();
        let mut record = |piece: Piece, w: Vec2| {
            let slot = pieces.entry(piece).or_insert_with(|| vec![Vec2::zero(); n]);
            slot[line.source] = &slot[line.source] + &w;
        };
        for pair in stops.windows(2) {
            let (a, b) = (&pair[0].1, &pair[1].1);
            if a < b {
                record(Piece::Segment(a.clone(), b.clone()), line.weight.clone());
            } else {
                record(Piece::Segment(b.clone(), a.clone()), -&line.weight);
            }
        }
        if !line.bounded {
            let last = stops.last().expect("ray start is a cut point").1.clone();
            record(Piece::Ray(last, line.dir.primitive()), line.weight.clone());
        }
        points[line.source].extend(stops.into_iter().map(|(_, q)| q));
    }
    Refinement { pieces, points }
}

fn build(pieces: impl IntoIterator<Item = (Piece, Vec2)>, extra: impl IntoIterator<Item = Vec2>) -> PlanarComplex {
    let mut b = Builder::default();
    for p in extra {
        b.vertex(p);
    }
    for (piece, w) in pieces {
        piece.add_to(&mut b, w);
    }
    b.finish()
}

/// Common refinement with weighted vectors added on shared pieces.
pub fn overlay(a: &PlanarComplex, b: &PlanarComplex) -> PlanarComplex {
    overlay_all(&[a, b])
}

pub fn overlay_all(complexes: &[&PlanarComplex]) -> PlanarComplex {
    let r = refine(complexes);
    let isolated: BTreeSet<Vec2> = complexes.iter().flat_map(|c| c.isolated_vertices()).collect();
    build(
        r.pieces
            .into_iter()
            .map(|(p, ws)| (p, ws.iter().sum::<Vec2>()))
            .filter(|(_, w)| !w.is_zero()),
        isolated,
    )
}

/// Intersection of supports. Shared pieces carry the smaller of the two
/// weighted vectors; isolated common points are kept as vertices.
pub fn intersection_complex(a: &PlanarComplex, b: &PlanarComplex) -> PlanarComplex {
    let r = refine(&[a, b]);
    let common: Vec<Vec2> = r.points[0].intersection(&r.points[1]).cloned().collect();
    let shared = r.pieces.into_iter().filter_map(|(p, ws)| {
        if ws[0].is_zero() || ws[1].is_zero() {
            return None;
        }
        let w = if ws[0].norm_sq() <= ws[1].norm_sq() { ws[0].clone() } else { ws[1].clone() };
        Some((p, w))
    });
    build(shared, common)
}

pub fn intersection_all(complexes: &[&PlanarComplex]) -> PlanarComplex {
    match complexes.split_first() {
        None => PlanarComplex::empty(),
        Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, c| intersection_complex(&acc, c)),
    }
}

/// Whether `y` covers every cell of `x` with at least `x`'s weight.
pub fn dominates(y: &PlanarComplex, x: &PlanarComplex) -> bool {
    let r = refine(&[x, y]);
    r.pieces.values().all(|ws| {
        ws[0].is_zero() || (ws[0].same_direction(&ws[1]) && ws[1].norm_sq() >= ws[0].norm_sq())
    })
}

/// Tropical curve of a product: the sum of the factor curves.
pub fn factorization_curve(f: &Factorization) -> Result<PlanarComplex> {
    let curves = f.factors().iter().map(tropical_curve).collect::<Result<Vec<_>>>()?;
    Ok(overlay_all(&curves.iter().collect::<Vec<_>>()))
}

/// Signed corner locus of `numerator ⊘ denominator` in the plane.
pub fn corner_locus(r: &RationalRep) -> Result<SignedComplex> {
    if r.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            found: r.dim(),
            min: 2,
            max: 2,
        });
    }
    let g = factorization_curve(&r.numerator)?;
    let h = factorization_curve(&r.denominator)?;
    let refined = refine(&[&g, &h]);
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for (piece, ws) in refined.pieces {
        let w = &ws[0] - &ws[1];
        let s = w.dot(&piece.direction());
        if s.is_positive() {
            pos.push((piece, w));
        } else if s.is_negative() {
            neg.push((piece, -&w));
        }
    }
    Ok(SignedComplex {
        positive: build(pos, []),
        negative: build(neg, []),
    })
}
