use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Builder, PlanarComplex};
use crate::error::{Error, Result};
use crate::exactgeom::{Point, Vec2};
use crate::rational::Rational;
use crate::signomial::{regular_subdivision, Signomial};

fn v2(p: &Point) -> Vec2 {
    Vec2::from_slice(p).expect("planar exponent")
}

/// Point where the monomials of a two-dimensional cell all attain the max.
fn dual_point(cell: &[Point], s: &Signomial) -> Vec2 {
    let coeff = |p: &Point| s.coefficient(p).expect("cell vertex is a monomial").clone();
    let a0 = v2(&cell[0]);
    let c0 = coeff(&cell[0]);
    let (i, j) = (1..cell.len())
        .flat_map(|i| (i + 1..cell.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !(&v2(&cell[i]) - &a0).cross(&(&v2(&cell[j]) - &a0)).is_zero())
        .expect("two-dimensional cell");
    // (a_i - a_0) . x = c_0 - c_i for both picked vertices.
    let (u, w) = (&v2(&cell[i]) - &a0, &v2(&cell[j]) - &a0);
    let (bu, bw) = (&c0 - coeff(&cell[i]), &c0 - coeff(&cell[j]));
    let det = u.cross(&w);
    Vec2::new((&bu * &w.y - &bw * &u.y) / &det, (&u.x * &bw - &w.x * &bu) / &det)
}

/// Tropical curve of a signomial in two variables, dual to its regular
/// subdivision.
///
/// An interior edge `e` of the subdivision (counterclockwise in one of its
/// cells) gives a segment between the two cells' dual points whose weighted
/// vector is `e` turned a quarter clockwise; a boundary edge gives a ray with
/// that vector. If the Newton polygon is a segment the curve is a family of
/// parallel lines.
pub fn tropical_curve(s: &Signomial) -> Result<PlanarComplex> {
    if s.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            found: s.dim(),
            min: 2,
            max: 2,
        });
    }
    let r = s.reduce()?;
    if r.len() < 2 {
        return Ok(PlanarComplex::empty());
    }
    let sub = regular_subdivision(&r)?;
    let mut b = Builder::default();
    if sub.base.affine_dim() == 1 {
        for cell in &sub.cells {
            let (a0, a1) = (v2(&cell[0]), v2(&cell[1]));
            let e = &a1 - &a0;
            let gap: Rational = r.coefficient(&cell[0]).unwrap() - r.coefficient(&cell[1]).unwrap();
            // The line e . x = c_0 - c_1, anchored at its point nearest the origin.
            let anchor = e.scale(&(gap / e.norm_sq()));
            let w = e.rot_neg90();
            b.ray(anchor.clone(), w.clone());
            b.ray(anchor, -&w);
        }
        return Ok(b.finish());
    }

    let duals: Vec<Vec2> = sub.cells.iter().map(|c| dual_point(c, &r)).collect();
    let mut sides: BTreeMap<(Point, Point), Vec<(usize, Vec2)>> = BTreeMap::new();
    for (k, cell) in sub.cells.iter().enumerate() {
        for i in 0..cell.len() {
            let (p, q) = (&cell[i], &cell[(i + 1) % cell.len()]);
            let key = if p < q { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) };
            sides.entry(key).or_default().push((k, &v2(q) - &v2(p)));
        }
    }
    for uses in sides.values() {
        let (k, e) = &uses[0];
        let w = e.rot_neg90();
        match uses.get(1) {
            Some((other, _)) => {
                debug_assert!((&duals[*other] - &duals[*k]).same_direction(&w));
                b.segment(duals[*k].clone(), duals[*other].clone(), w);
            }
            None => b.ray(duals[*k].clone(), w),
        }
    }
    Ok(b.finish())
}
