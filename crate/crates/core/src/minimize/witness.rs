//! A complex whose two natural minimal balancings disagree: one has fewer
//! monomials, the other fewer factors.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::plancomplex::{dominates, factorization_curve, intersection_complex, tropical_curve, PlanarComplex};
use crate::signomial::{parse_factorization, parse_signomial, Factorization, Signomial};

pub const WITNESS_G: &str = "1*x*y^-1 + 1*y^-2 + 1*x^-1*y^-1 + 1 + y";
pub const WITNESS_H: &str = "(x^-1*y^-1 + 0)*(-2*x*y^-1 + 0)*(y + 0)";
/// Monomial length of the product `h` as originally reported; the upper
/// vertex count disagrees and is kept alongside it.
pub const REPORTED_MLEN_Y2: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Common cells of both curves at the smaller weights.
    pub x: PlanarComplex,
    pub y1: Signomial,
    pub y2: Factorization,
    pub mlen_y1: usize,
    pub flen_y1: usize,
    pub mlen_y2: usize,
    pub reported_mlen_y2: usize,
    pub flen_y2: usize,
    pub y1_balances: bool,
    pub y2_balances: bool,
    /// `mlen(y1) < mlen(y2)` and `flen(y1) > flen(y2)`.
    pub lengths_cross: bool,
}

pub fn witness_pair() -> (Signomial, Factorization) {
    (
        parse_signomial(WITNESS_G, Some(2)).expect("fixed input"),
        parse_factorization(WITNESS_H, Some(2)).expect("fixed input"),
    )
}

pub fn balancing_not_unique_witness() -> Result<Witness> {
    let (g, h) = witness_pair();
    let curve_g = tropical_curve(&g)?;
    let curve_h = factorization_curve(&h)?;
    let x = intersection_complex(&curve_g, &curve_h).pure_part();
    let y1 = Factorization::single(g.clone());
    let (mlen_y1, flen_y1) = (y1.mlen()?, y1.flen()?);
    let (mlen_y2, flen_y2) = (h.mlen()?, h.flen()?);
    Ok(Witness {
        y1_balances: dominates(&curve_g, &x),
        y2_balances: dominates(&curve_h, &x),
        lengths_cross: mlen_y1 < mlen_y2 && flen_y1 > flen_y2,
        x,
        y1: g,
        y2: h,
        mlen_y1,
        flen_y1,
        mlen_y2,
        reported_mlen_y2: REPORTED_MLEN_Y2,
        flen_y2,
    })
}

/// The bounded triangle of the three lines of `h`, with `h` as a balancing.
///
/// No balancing of factorization length at most 3 contains a bounded
/// triangle: one factor gives a curve with at most three monomials (a
/// tropical line or a line), two binomial factors give two lines.
pub fn middle_triangle() -> Result<(PlanarComplex, Factorization)> {
    let (_, h) = witness_pair();
    let curve = factorization_curve(&h)?;
    let segments = curve.segments().map(|(a, b, w)| (a.clone(), b.clone(), w.clone())).collect();
    Ok((PlanarComplex::from_parts(vec![], segments, vec![])?, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::Vec2;

    #[test]
    fn lengths_cross() {
        let w = balancing_not_unique_witness().unwrap();
        assert_eq!((w.mlen_y1, w.flen_y1, w.flen_y2), (5, 5, 4));
        assert_eq!(w.mlen_y2, 7);
        assert!(w.lengths_cross && w.y1_balances && w.y2_balances);
        assert!(!w.x.is_empty());
    }

    #[test]
    fn triangle_vertices() {
        let (t, h) = middle_triangle().unwrap();
        let mut vs = t.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, vec![Vec2::int(0, 0), Vec2::int(1, -1), Vec2::int(2, 0)]);
        assert_eq!(t.segments().count(), 3);
        assert_eq!(h.flen().unwrap(), 4);
    }
}
