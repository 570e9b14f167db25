use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::{self, dot, row_reduce, sub};
use super::Point;
use crate::error::{Error, Result};
use crate::rational::{serde_str, Rational};

pub const MAX_DIM: usize = 4;

/// Supporting hyperplane `normal · x = offset` with `normal · x <= offset` on
/// the whole polytope. `vertices` index into [`Polytope::vertices`].
///
/// For a polytope of lower affine dimension the normal is a relative facet
/// normal, zero outside the coordinates that parametrize the affine hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    #[serde(with = "serde_str::vec")]
    pub normal: Vec<Rational>,
    #[serde(with = "serde_str")]
    pub offset: Rational,
    pub vertices: Vec<usize>,
}

/// Convex polytope given by its extreme points and facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    affine_dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    /// Extreme points in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Whether `p` lies in the polytope (boundary included).
    pub fn contains(&self, p: &[Rational]) -> bool {
        if p.len() != self.dim {
            return false;
        }
        let base = &self.vertices[0];
        let mut rows: Vec<Vec<Rational>> =
            self.vertices[1..].iter().map(|v| sub(v, base)).collect();
        rows.push(sub(p, base));
        if linalg::rank(&rows) > self.affine_dim {
            return false;
        }
        if self.affine_dim == 0 {
            return p == base.as_slice();
        }
        self.facets.iter().all(|f| dot(&f.normal, p) <= f.offset)
    }

    /// Basis of the direction space of the affine hull.
    fn direction_basis(&self) -> Vec<Vec<Rational>> {
        let base = &self.vertices[0];
        let diffs: Vec<Vec<Rational>> = self.vertices[1..].iter().map(|v| sub(v, base)).collect();
        row_reduce(&diffs)
    }
}

/// Exact convex hull of `points` in ambient dimension `dim` (1 to 4).
///
/// Duplicate points are merged. Degenerate input is not an error: the result
/// records its affine dimension and carries relative facets.
pub fn convex_hull(points: &[Point], dim: usize) -> Result<Polytope> {
    if !(1..=MAX_DIM).contains(&dim) {
        return Err(Error::UnsupportedDimension {
            found: dim,
            min: 1,
            max: MAX_DIM,
        });
    }
    if points.is_empty() {
        return Err(Error::Invalid("convex hull of an empty point set".into()));
    }
    for p in points {
        Error::check_dim(dim, p.len())?;
    }
    let pts: Vec<Point> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();

    let base = &pts[0];
    let diffs: Vec<Vec<Rational>> = pts[1..].iter().map(|p| sub(p, base)).collect();
    let basis = row_reduce(&diffs);
    let k = basis.len();
    if k == 0 {
        return Ok(Polytope {
            dim,
            affine_dim: 0,
            vertices: vec![base.clone()],
            facets: Vec::new(),
        });
    }

    let coords = chart_coordinates(&basis, dim);
    let projected: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| coords.iter().map(|&c| p[c].clone()).collect())
        .collect();
    let (vertex_ids, local_facets) = if k == 1 {
        hull_1d(&projected)
    } else {
        hull_full(&projected, k)
    };

    let position: HashMap<usize, usize> =
        vertex_ids.iter().enumerate().map(|(pos, &id)| (id, pos)).collect();
    let facets = local_facets
        .into_iter()
        .map(|(normal, offset, incident)| {
            let mut lifted = vec![Rational::zero(); dim];
            for (c, v) in coords.iter().zip(normal) {
                lifted[*c] = v;
            }
            let mut vertices: Vec<usize> = incident.iter().filter_map(|i| position.get(i).copied()).collect();
            vertices.sort_unstable();
            Facet {
                normal: lifted,
                offset,
                vertices,
            }
        })
        .collect();
    Ok(Polytope {
        dim,
        affine_dim: k,
        vertices: vertex_ids.iter().map(|&i| pts[i].clone()).collect(),
        facets,
    })
}

/// Picks `k` coordinate axes on which the affine hull projects injectively,
/// preferring later axes so that a height coordinate is kept whenever the
/// hull is not a graph over the others.
fn chart_coordinates(basis: &[Vec<Rational>], dim: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for c in (0..dim).rev() {
        let mut trial = chosen.clone();
        trial.push(c);
        let cols: Vec<Vec<Rational>> = trial
            .iter()
            .map(|&col| basis.iter().map(|row| row[col].clone()).collect())
            .collect();
        if linalg::rank(&cols) == trial.len() {
            chosen = trial;
        }
        if chosen.len() == basis.len() {
            break;
        }
    }
    chosen.sort_unstable();
    chosen
}

type LocalFacet = (Vec<Rational>, Rational, Vec<usize>);

fn hull_1d(points: &[Vec<Rational>]) -> (Vec<usize>, Vec<LocalFacet>) {
    let lo = (0..points.len()).min_by(|&a, &b| points[a][0].cmp(&points[b][0])).unwrap();
    let hi = (0..points.len()).max_by(|&a, &b| points[a][0].cmp(&points[b][0])).unwrap();
    let one = crate::rational::one();
    let facets = vec![
        (vec![-one.clone()], -points[lo][0].clone(), vec![lo]),
        (vec![one], points[hi][0].clone(), vec![hi]),
    ];
    let mut ids = vec![lo, hi];
    ids.sort_unstable();
    (ids, facets)
}

struct Simplex {
    verts: Vec<usize>,
    normal: Vec<Rational>,
    offset: Rational,
    alive: bool,
}

/// Beneath-beyond hull of full-dimensional points in `k >= 2` dimensions.
///
/// Builds a triangulated boundary, merges coplanar simplices into true facets,
/// then keeps the points whose incident facet normals span the space.
fn hull_full(points: &[Vec<Rational>], k: usize) -> (Vec<usize>, Vec<LocalFacet>) {
    let mut start = vec![0usize];
    let mut diffs: Vec<Vec<Rational>> = Vec::new();
    for i in 1..points.len() {
        if start.len() == k + 1 {
            break;
        }
        let mut trial = diffs.clone();
        trial.push(sub(&points[i], &points[0]));
        if linalg::rank(&trial) == trial.len() {
            diffs = trial;
            start.push(i);
        }
    }
    debug_assert_eq!(start.len(), k + 1);

    let scale = Rational::from_integer((k as i64 + 1).into());
    let interior: Vec<Rational> = (0..k)
        .map(|c| start.iter().map(|&i| points[i][c].clone()).sum::<Rational>() / &scale)
        .collect();

    let make = |verts: Vec<usize>| -> Simplex {
        let d: Vec<Vec<Rational>> = verts[1..].iter().map(|&i| sub(&points[i], &points[verts[0]])).collect();
        let mut normal = linalg::normal(&d);
        let mut offset = dot(&normal, &points[verts[0]]);
        if dot(&normal, &interior) > offset {
            normal.iter_mut().for_each(|v| *v = -v.clone());
            offset = -offset;
        }
        Simplex {
            verts,
            normal,
            offset,
            alive: true,
        }
    };

    let mut simplices: Vec<Simplex> = (0..=k)
        .map(|skip| start.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &i)| i).collect())
        .map(|v: Vec<usize>| make(v))
        .collect();

    let in_start: BTreeSet<usize> = start.iter().copied().collect();
    for (i, p) in points.iter().enumerate() {
        if in_start.contains(&i) {
            continue;
        }
        let visible: Vec<usize> = simplices
            .iter()
            .enumerate()
            .filter(|(_, s)| s.alive && dot(&s.normal, p) > s.offset)
            .map(|(idx, _)| idx)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for &f in &visible {
            let verts = &simplices[f].verts;
            for skip in 0..verts.len() {
                let ridge: Vec<usize> =
                    verts.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                *ridges.entry(ridge).or_default() += 1;
            }
            simplices[f].alive = false;
        }
        let mut horizon: Vec<Vec<usize>> =
            ridges.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r).collect();
        horizon.sort();
        for mut ridge in horizon {
            ridge.push(i);
            ridge.sort_unstable();
            simplices.push(make(ridge));
        }
    }

    // Merge coplanar simplices into facets keyed by a normalized hyperplane.
    let mut planes: BTreeMap<(Vec<Rational>, Rational), ()> = BTreeMap::new();
    for s in simplices.iter().filter(|s| s.alive) {
        let lead = s.normal.iter().find(|v| !v.is_zero()).expect("nonzero normal").abs();
        let n: Vec<Rational> = s.normal.iter().map(|v| v / &lead).collect();
        planes.insert((n, &s.offset / &lead), ());
    }
    let planes: Vec<(Vec<Rational>, Rational)> = planes.into_keys().collect();

    let incidence: Vec<Vec<usize>> = planes
        .iter()
        .map(|(n, b)| (0..points.len()).filter(|&i| dot(n, &points[i]) == *b).collect())
        .collect();
    let mut on_planes: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (f, inc) in incidence.iter().enumerate() {
        for &i in inc {
            on_planes[i].push(f);
        }
    }
    let vertices: Vec<usize> = (0..points.len())
        .filter(|&i| {
            let normals: Vec<Vec<Rational>> = on_planes[i].iter().map(|&f| planes[f].0.clone()).collect();
            normals.len() >= k && linalg::rank(&normals) == k
        })
        .collect();
    let facets = planes.into_iter().zip(incidence).map(|((n, b), inc)| (n, b, inc)).collect();
    (vertices, facets)
}

/// Vertex set of `P + Q`.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    Error::check_dim(p.dim, q.dim)?;
    let sums: Vec<Point> = p
        .vertices
        .iter()
        .flat_map(|a| q.vertices.iter().map(move |b| linalg::add(a, b)))
        .collect();
    convex_hull(&sums, p.dim)
}

pub fn minkowski_sum_all(polys: &[Polytope]) -> Result<Polytope> {
    let (first, rest) = polys
        .split_first()
        .ok_or_else(|| Error::Invalid("Minkowski sum of no polytopes".into()))?;
    rest.iter().try_fold(first.clone(), |acc, p| minkowski_sum(&acc, p))
}

/// Vertices visible from above, treating the last coordinate as height.
///
/// A vertex is upper when it is the unique maximizer of height minus some
/// linear functional of the remaining coordinates. If the polytope is not
/// full-dimensional and its affine hull is not vertical, every vertex is
/// upper.
pub fn upper_vertices(p: &Polytope) -> Result<Vec<Point>> {
    if p.dim < 2 {
        return Err(Error::UnsupportedDimension {
            found: p.dim,
            min: 2,
            max: MAX_DIM,
        });
    }
    if p.affine_dim == 0 {
        return Ok(p.vertices.clone());
    }
    if !p.is_full_dimensional() {
        let mut basis = p.direction_basis();
        let mut up = vec![Rational::zero(); p.dim];
        up[p.dim - 1] = crate::rational::one();
        basis.push(up);
        let vertical = linalg::rank(&basis) == p.affine_dim;
        if !vertical {
            return Ok(p.vertices.clone());
        }
    }
    let mut upper: BTreeSet<usize> = BTreeSet::new();
    for f in &p.facets {
        if f.normal[p.dim - 1].is_positive() {
            upper.extend(f.vertices.iter().copied());
        }
    }
    Ok(upper.into_iter().map(|i| p.vertices[i].clone()).collect())
}
