use num_traits::Signed;

use super::Signomial;
use crate::error::{Error, Result};
use crate::exactgeom::{convex_hull, Point, Polytope, Vec2};
use crate::rational::Rational;

/// Convex hull of the exponent vectors.
pub fn newton_polytope(s: &Signomial) -> Result<Polytope> {
    check_lift_fits(s)?;
    convex_hull(&s.exponents(), s.dim())
}

/// Convex hull of the points `(exponent, coefficient)`, coefficient as height.
pub fn lifted_newton(s: &Signomial) -> Result<Polytope> {
    check_lift_fits(s)?;
    convex_hull(&s.lifted_points(), s.dim() + 1)
}

fn check_lift_fits(s: &Signomial) -> Result<()> {
    if s.dim() > 3 {
        return Err(Error::UnsupportedDimension {
            found: s.dim(),
            min: 1,
            max: 3,
        });
    }
    Ok(())
}

/// Regular subdivision of a planar Newton polygon induced by the lift.
///
/// Two-dimensional cells list their vertices counterclockwise. When the
/// Newton polygon is a segment the cells are the consecutive pieces of that
/// segment; when it is a point there is a single one-point cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub base: Polytope,
    pub cells: Vec<Vec<Point>>,
    pub vertices: Vec<Point>,
}

pub fn regular_subdivision(s: &Signomial) -> Result<Subdivision> {
    if s.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            found: s.dim(),
            min: 2,
            max: 2,
        });
    }
    let r = s.reduce()?;
    let base = newton_polytope(&r)?;
    let vertices = r.exponents();
    let cells = match base.affine_dim() {
        2 => {
            let lifted = lifted_newton(&r)?;
            if lifted.is_full_dimensional() {
                lifted
                    .facets()
                    .iter()
                    .filter(|f| f.normal[2].is_positive())
                    .map(|f| {
                        let pts: Vec<Point> = f.vertices.iter().map(|&i| lifted.vertices()[i][..2].to_vec()).collect();
                        counterclockwise(pts)
                    })
                    .collect()
            } else {
                vec![counterclockwise(vertices.clone())]
            }
        }
        // Lexicographic order runs along the line.
        1 => vertices.windows(2).map(|w| w.to_vec()).collect(),
        _ => vec![vertices.clone()],
    };
    Ok(Subdivision { base, cells, vertices })
}

/// Orders the vertices of a convex polygon counterclockwise, starting from
/// the lexicographically smallest.
pub(crate) fn counterclockwise(points: Vec<Point>) -> Vec<Point> {
    let n = Rational::from_integer((points.len() as i64).into());
    let to_v = |p: &Point| Vec2::from_slice(p).expect("planar point");
    let centroid = points.iter().map(to_v).sum::<Vec2>().scale(&(Rational::from_integer(1.into()) / n));
    let mut pts: Vec<(Vec2, Point)> = points.into_iter().map(|p| (&to_v(&p) - &centroid, p)).collect();
    pts.sort_by(|a, b| a.0.cmp_angle(&b.0));
    let start = (0..pts.len()).min_by(|&a, &b| pts[a].1.cmp(&pts[b].1)).unwrap_or(0);
    pts.rotate_left(start);
    pts.into_iter().map(|(_, p)| p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signomial::Factorization;

    #[test]
    fn triangle_is_a_single_cell() {
        let s = Signomial::from_ints(2, &[(0, &[1, 0]), (0, &[0, 1]), (0, &[0, 0])]).unwrap();
        let sub = regular_subdivision(&s).unwrap();
        assert_eq!(sub.cells.len(), 1);
        assert_eq!(sub.vertices.len(), 3);
    }

    #[test]
    fn product_of_three_lines_is_a_zonotopal_tiling() {
        let f = Factorization::new(vec![
            Signomial::from_ints(2, &[(0, &[-1, -1]), (0, &[0, 0])]).unwrap(),
            Signomial::from_ints(2, &[(-2, &[1, -1]), (0, &[0, 0])]).unwrap(),
            Signomial::from_ints(2, &[(0, &[0, 1]), (0, &[0, 0])]).unwrap(),
        ])
        .unwrap();
        let sub = regular_subdivision(&f.expand()).unwrap();
        assert_eq!(sub.cells.len(), 3);
        assert!(sub.cells.iter().all(|c| c.len() == 4));
        assert_eq!(sub.base.vertex_count(), 6);
    }

    #[test]
    fn collinear_exponents_give_segment_cells() {
        let s = Signomial::from_ints(2, &[(0, &[0, 0]), (1, &[1, 1]), (0, &[2, 2])]).unwrap();
        let sub = regular_subdivision(&s).unwrap();
        assert_eq!(sub.cells.len(), 2);
    }

    #[test]
    fn dimension_limit() {
        let s = Signomial::from_ints(4, &[(0, &[1, 0, 0, 0])]).unwrap();
        assert!(newton_polytope(&s).is_err());
        let s3 = Signomial::from_ints(3, &[(0, &[1, 0, 0])]).unwrap();
        assert!(regular_subdivision(&s3).is_err());
    }
}
