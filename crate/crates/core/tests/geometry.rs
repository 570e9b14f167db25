use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use tropic_core::exactgeom::{convex_hull, linalg, minkowski_sum, upper_vertices, Point, Vec2};
use tropic_core::rational::{int, Rational};

fn pt(c: &[i64]) -> Point {
    c.iter().map(|&x| int(x)).collect()
}

/// Supporting planes through three affinely independent input points with
/// every point on one side, as normalized `(normal, offset)` pairs.
fn brute_force_facets_3d(points: &[Point]) -> BTreeSet<(Vec<Rational>, Rational)> {
    let mut out = BTreeSet::new();
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (u, v) = (linalg::sub(&points[j], &points[i]), linalg::sub(&points[k], &points[i]));
                let normal = vec![
                    &u[1] * &v[2] - &u[2] * &v[1],
                    &u[2] * &v[0] - &u[0] * &v[2],
                    &u[0] * &v[1] - &u[1] * &v[0],
                ];
                if normal.iter().all(Zero::is_zero) {
                    continue;
                }
                let offset = linalg::dot(&normal, &points[i]);
                let sides: Vec<Rational> = points.iter().map(|p| linalg::dot(&normal, p) - &offset).collect();
                let (normal, offset) = if sides.iter().all(|s| !s.is_positive()) {
                    (normal, offset)
                } else if sides.iter().all(|s| !s.is_negative()) {
                    (normal.iter().map(|c| -c).collect(), -offset)
                } else {
                    continue;
                };
                let scale = normal.iter().find(|c| !c.is_zero()).unwrap().abs();
                out.insert((normal.iter().map(|c| c / &scale).collect(), offset / &scale));
            }
        }
    }
    out
}

#[test]
fn cube_facets_match_brute_force() {
    let mut points = Vec::new();
    for x in [0, 2] {
        for y in [0, 2] {
            for z in [0, 2] {
                points.push(pt(&[x, y, z]));
            }
        }
    }
    points.extend([pt(&[1, 1, 1]), pt(&[1, 0, 1]), pt(&[2, 1, 1]), pt(&[1, 1, 0])]);
    let hull = convex_hull(&points, 3).unwrap();
    assert_eq!(hull.vertex_count(), 8);
    let oracle = brute_force_facets_3d(&points);
    assert_eq!(oracle.len(), 6);
    let found: BTreeSet<_> = hull
        .facets()
        .iter()
        .map(|f| {
            let scale = f.normal.iter().find(|c| !c.is_zero()).unwrap().abs();
            (f.normal.iter().map(|c| c / &scale).collect::<Vec<_>>(), &f.offset / &scale)
        })
        .collect();
    assert_eq!(found, oracle);
    for f in hull.facets() {
        assert_eq!(f.vertices.len(), 4);
    }
}

#[test]
fn hexagon_from_two_triangles() {
    let p = convex_hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])], 2).unwrap();
    let q = convex_hull(&[pt(&[0, 0]), pt(&[-1, 0]), pt(&[0, -1])], 2).unwrap();
    assert_eq!(minkowski_sum(&p, &q).unwrap().vertex_count(), 6);
}

#[test]
fn triangles_with_parallel_edges_give_a_four_gon() {
    // Newton polygons of x ⊕ y ⊕ 0 and x^2 ⊕ y ⊕ 0.
    let p = convex_hull(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])], 2).unwrap();
    let q = convex_hull(&[pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 1])], 2).unwrap();
    assert_eq!(minkowski_sum(&p, &q).unwrap().vertex_count(), 4);
}

#[test]
fn upper_hull_of_lifted_square() {
    let lifted = vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, -5]), pt(&[0, 0, -3])];
    let p = convex_hull(&lifted, 3).unwrap();
    let ups = upper_vertices(&p).unwrap();
    // Every corner of the square is upper; only the lower copy of (0,0) drops.
    assert_eq!(ups.len(), 4);
    assert!(!ups.contains(&pt(&[0, 0, -3])));
}

/// A point is extreme iff it lies in no triangle or segment spanned by the
/// other points.
fn brute_force_vertices_2d(points: &[Vec2]) -> BTreeSet<Vec2> {
    let distinct: Vec<Vec2> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let on_segment = |p: &Vec2, a: &Vec2, b: &Vec2| {
        (b - a).cross(&(p - a)).is_zero() && !(p - a).dot(&(p - b)).is_positive()
    };
    let inside_triangle = |p: &Vec2, a: &Vec2, b: &Vec2, c: &Vec2| {
        if (b - a).cross(&(c - a)).is_zero() {
            return on_segment(p, a, b) || on_segment(p, b, c) || on_segment(p, a, c);
        }
        let s = [(b - a).cross(&(p - a)), (c - b).cross(&(p - b)), (a - c).cross(&(p - c))];
        s.iter().all(|x| !x.is_negative()) || s.iter().all(|x| !x.is_positive())
    };
    distinct
        .iter()
        .filter(|p| {
            let others: Vec<&Vec2> = distinct.iter().filter(|q| q != p).collect();
            let n = others.len();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j..n {
                        if inside_triangle(p, others[i], others[j], others[k]) {
                            return false;
                        }
                    }
                }
            }
            true
        })
        .cloned()
        .collect()
}

fn points_2d() -> impl Strategy<Value = Vec<Vec2>> {
    prop::collection::vec((-6i64..=6, -6i64..=6), 3..9)
        .prop_map(|v| v.into_iter().map(|(x, y)| Vec2::int(x, y)).collect())
}

fn edge_normal_directions(p: &tropic_core::exactgeom::Polytope) -> BTreeSet<Vec2> {
    p.facets()
        .iter()
        .map(|f| Vec2::from_slice(&f.normal).unwrap().primitive())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn planar_hull_vertices_are_extreme_points(pts in points_2d()) {
        let points: Vec<Point> = pts.iter().map(Vec2::to_vec).collect();
        let hull = convex_hull(&points, 2).unwrap();
        let found: BTreeSet<Vec2> = hull.vertices().iter().map(|v| Vec2::from_slice(v).unwrap()).collect();
        prop_assert_eq!(found, brute_force_vertices_2d(&pts));
        for p in &points {
            prop_assert!(hull.contains(p));
        }
    }

    // For two polygons the sum has one edge per distinct outer normal.
    #[test]
    fn minkowski_vertex_count_from_normals(a in points_2d(), b in points_2d()) {
        let p = convex_hull(&a.iter().map(Vec2::to_vec).collect::<Vec<_>>(), 2).unwrap();
        let q = convex_hull(&b.iter().map(Vec2::to_vec).collect::<Vec<_>>(), 2).unwrap();
        prop_assume!(p.is_full_dimensional() && q.is_full_dimensional());
        let mut normals = edge_normal_directions(&p);
        normals.extend(edge_normal_directions(&q));
        prop_assert_eq!(minkowski_sum(&p, &q).unwrap().vertex_count(), normals.len());
    }

    #[test]
    fn hull_is_idempotent(pts in prop::collection::vec((-4i64..=4, -4i64..=4, -4i64..=4), 4..10)) {
        let points: Vec<Point> = pts.iter().map(|&(x, y, z)| pt(&[x, y, z])).collect();
        let hull = convex_hull(&points, 3).unwrap();
        let again = convex_hull(hull.vertices(), 3).unwrap();
        prop_assert_eq!(hull.vertices(), again.vertices());
        prop_assert_eq!(hull.facets().len(), again.facets().len());
        if hull.is_full_dimensional() {
            prop_assert_eq!(hull.facets().len(), brute_force_facets_3d(&points).len());
        }
    }
}
