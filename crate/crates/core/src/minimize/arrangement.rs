//! Canonical arrangements: every maximal cell extended to a full line.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactgeom::Vec2;
use crate::plancomplex::{dominates, factorization_curve, overlay_all, PlanarComplex};
use crate::rational::Rational;
use crate::signomial::{Factorization, Monomial, Signomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    /// Point of the line closest to the origin.
    pub point: Vec2,
    /// Primitive direction with its first nonzero coordinate positive.
    pub direction: Vec2,
    /// Weighted vector, a positive multiple of `direction`.
    pub weight: Vec2,
}

impl Line {
    /// Balanced binomial whose tropical curve is this line.
    pub fn binomial(&self) -> Signomial {
        let e = self.weight.rot90();
        Signomial::new(
            2,
            [
                Monomial::new(Rational::zero(), vec![Rational::zero(), Rational::zero()]),
                Monomial::new(-e.dot(&self.point), e.to_vec()),
            ],
        )
        .expect("two monomials in the plane")
    }

    fn complex(&self) -> PlanarComplex {
        PlanarComplex::from_parts(
            vec![],
            vec![],
            vec![(self.point.clone(), self.weight.clone()), (self.point.clone(), -&self.weight)],
        )
        .expect("nonzero weight")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    pub lines: Vec<Line>,
}

impl Arrangement {
    /// Factorization length of the product of the line binomials.
    pub fn flen(&self) -> usize {
        self.lines.len() + 1
    }

    pub fn factorization(&self) -> Option<Factorization> {
        if self.lines.is_empty() {
            return None;
        }
        Some(Factorization::new(self.lines.iter().map(Line::binomial).collect()).expect("same dimension"))
    }

    pub fn to_complex(&self) -> PlanarComplex {
        let parts: Vec<PlanarComplex> = self.lines.iter().map(Line::complex).collect();
        overlay_all(&parts.iter().collect::<Vec<_>>())
    }
}

fn normalized(v: &Vec2) -> Vec2 {
    let p = v.primitive();
    if p.x.is_negative() || (p.x.is_zero() && p.y.is_negative()) {
        -&p
    } else {
        p
    }
}

/// One line per distinct affine span of a maximal cell of `x`, carrying the
/// heaviest weight found along it. Isolated vertices are ignored.
pub fn canonical_arrangement(x: &PlanarComplex) -> Arrangement {
    let mut spans: BTreeMap<(Vec2, Rational), Vec2> = BTreeMap::new();
    let cells = x
        .segments()
        .map(|(a, _, w)| (a, w))
        .chain(x.rays());
    for (p, w) in cells {
        let dir = normalized(w);
        let offset = dir.cross(p);
        let weight = if w.dot(&dir).is_positive() { w.clone() } else { -w };
        spans
            .entry((dir, offset))
            .and_modify(|best| {
                if weight.norm_sq() > best.norm_sq() {
                    *best = weight.clone();
                }
            })
            .or_insert(weight);
    }
    let lines = spans
        .into_iter()
        .map(|((direction, offset), weight)| {
            // Nearest point to the origin on {q : cross(direction, q) = offset}.
            let n = direction.rot90();
            let point = n.scale(&(offset / n.norm_sq()));
            Line { point, direction, weight }
        })
        .collect();
    Arrangement { lines }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlenBoundReport {
    pub arrangement_flen: usize,
    pub balancing_flen: usize,
    pub bound: usize,
    pub holds: bool,
    /// The supplied balancing covers `x` with at least its weights.
    pub balances: bool,
}

/// Compares the canonical arrangement of `x` with three times the
/// factorization length of a known minimal balancing `v`.
pub fn verify_flen_bound(x: &PlanarComplex, v: &Factorization) -> Result<FlenBoundReport> {
    let arrangement_flen = canonical_arrangement(x).flen();
    let balancing_flen = v.flen()?;
    let bound = 3 * balancing_flen;
    Ok(FlenBoundReport {
        arrangement_flen,
        balancing_flen,
        bound,
        holds: arrangement_flen <= bound,
        balances: dominates(&factorization_curve(v)?, x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plancomplex::tropical_curve;

    #[test]
    fn single_segment() {
        let x = PlanarComplex::from_parts(vec![], vec![(Vec2::int(1, 1), Vec2::int(3, 2), Vec2::int(2, 1))], vec![]).unwrap();
        let a = canonical_arrangement(&x);
        assert_eq!(a.lines.len(), 1);
        assert_eq!(a.flen(), 2);
        assert_eq!(a.lines[0].direction, Vec2::int(2, 1));
        // cross((2,1),(1,1)) = 1, nearest point (-1,2)/5.
        assert_eq!(a.lines[0].point, Vec2::new(Rational::new((-1).into(), 5.into()), Rational::new(2.into(), 5.into())));
        assert!(dominates(&a.to_complex(), &x));
        assert!(dominates(&tropical_curve(&a.lines[0].binomial()).unwrap(), &x));
    }

    #[test]
    fn tropical_line_spans_three_lines() {
        let s = Signomial::from_ints(2, &[(0, &[0, 0]), (0, &[1, 0]), (0, &[0, 1])]).unwrap();
        let x = tropical_curve(&s).unwrap();
        let a = canonical_arrangement(&x);
        assert_eq!(a.flen(), 4);
        let r = verify_flen_bound(&x, &Factorization::single(s)).unwrap();
        assert_eq!((r.arrangement_flen, r.balancing_flen, r.bound), (4, 3, 9));
        assert!(r.holds && r.balances);
    }

    #[test]
    fn heavier_cell_sets_the_line_weight() {
        let x = PlanarComplex::from_parts(
            vec![],
            vec![(Vec2::int(0, 0), Vec2::int(1, 0), Vec2::int(1, 0)), (Vec2::int(2, 0), Vec2::int(3, 0), Vec2::int(-3, 0))],
            vec![],
        )
        .unwrap();
        let a = canonical_arrangement(&x);
        assert_eq!(a.lines.len(), 1);
        assert_eq!(a.lines[0].weight, Vec2::int(3, 0));
    }

    #[test]
    fn empty_complex_has_empty_arrangement() {
        let a = canonical_arrangement(&PlanarComplex::empty());
        assert_eq!(a.flen(), 1);
        assert!(a.factorization().is_none());
    }
}
