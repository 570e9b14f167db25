//! Region counts of curve arrangements and the lower bounds they imply.
//!
//! The number of regions cut out by curves `V(g_1), ..., V(g_m)` in the
//! plane equals the factorization length plus an inclusion-exclusion sum of
//! Euler characteristics of their intersections. Here that sum is computed
//! from exact intersection complexes and, on request, checked against the
//! face-tracing oracle of [`crate::plancomplex::region_count_oracle`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::{minkowski_sum_all, Polytope};
use crate::plancomplex::{
    corner_locus, intersection_complex, overlay_all, region_count_oracle, tropical_curve, PlanarComplex,
};
use crate::signomial::{RationalRep, Signomial};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correction {
    pub subset: Vec<usize>,
    pub chi: i64,
    /// `(-1)^{|S|} χ`, the contribution in the plane.
    pub term: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub formula: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<usize>,
    pub flen: usize,
    pub corrections: Vec<Correction>,
    /// Whether the count meets the lower bound `flen + C(m, 2)` with equality.
    pub tight: bool,
}

impl CountReport {
    pub fn agrees(&self) -> bool {
        self.oracle.is_none_or(|o| o == self.formula)
    }
}

fn curves(gs: &[Signomial]) -> Result<Vec<PlanarComplex>> {
    if gs.is_empty() {
        return Err(Error::Invalid("need at least one signomial".into()));
    }
    gs.iter().map(tropical_curve).collect()
}

/// Intersection complex for every index subset (bitmask), built by adding
/// one curve at a time.
fn subset_intersections(cs: &[PlanarComplex]) -> Vec<Option<PlanarComplex>> {
    let m = cs.len();
    let mut table: Vec<Option<PlanarComplex>> = vec![None; 1 << m];
    for mask in 1usize..(1 << m) {
        let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let rest = mask & !(1 << top);
        table[mask] = Some(match &table[rest] {
            None => cs[top].clone(),
            Some(prev) if prev.is_empty() => PlanarComplex::empty(),
            Some(prev) => intersection_complex(prev, &cs[top]),
        });
    }
    table
}

fn members(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|i| mask >> i & 1 == 1).collect()
}

/// Region count of the arrangement of the curves of `gs`, all in two variables.
pub fn region_count_formula(gs: &[Signomial], with_oracle: bool) -> Result<CountReport> {
    let cs = curves(gs)?;
    let m = cs.len();
    let flen = gs.iter().map(|g| g.mlen()).sum::<Result<usize>>()? + 1 - m;
    let table = subset_intersections(&cs);
    let mut masks: Vec<usize> = (1usize..(1 << m)).filter(|s| s.count_ones() >= 2).collect();
    masks.sort_by_key(|&s| (s.count_ones(), members(s)));
    let corrections: Vec<Correction> = masks
        .into_iter()
        .map(|s| {
            let chi = table[s].as_ref().map_or(0, |c| c.euler_characteristic());
            let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
            Correction {
                subset: members(s),
                chi,
                term: sign * chi,
            }
        })
        .collect();
    let total = flen as i64 + corrections.iter().map(|c| c.term).sum::<i64>();
    let formula = usize::try_from(total).map_err(|_| Error::Invalid(format!("negative region count {total}")))?;
    let oracle = with_oracle.then(|| region_count_oracle(&overlay_all(&cs.iter().collect::<Vec<_>>())));
    Ok(CountReport {
        formula,
        oracle,
        flen,
        corrections,
        tight: formula == lower_bound_rhs(m, 2, flen),
    })
}

/// `flen + Σ_{k=2}^{d} C(m, k)`.
pub fn lower_bound_rhs(m: usize, d: usize, flen: usize) -> usize {
    flen + (2..=d).map(|k| binomial(m, k)).sum::<usize>()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairIntersection {
    pub pair: [usize; 2],
    pub points: usize,
    pub cells: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBoundReport {
    pub mlen: usize,
    pub flen: usize,
    pub rhs: usize,
    pub holds: bool,
    /// Every pairwise intersection is a single point.
    pub tight: bool,
    pub generic: bool,
    /// Why the family is not generic, if it is not.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub pairs: Vec<PairIntersection>,
}

/// Compares the region count with `flen + C(m, 2)`.
///
/// The inequality is only claimed for generic families. Genericity is
/// checked directly: every two curves meet in finitely many points, at
/// least one, none of them a vertex of either curve, and no three curves
/// share a point.
pub fn check_lower_bound(gs: &[Signomial]) -> Result<LowerBoundReport> {
    let report = region_count_formula(gs, false)?;
    let cs = curves(gs)?;
    let m = cs.len();
    let table = subset_intersections(&cs);
    let corners: Vec<Vec<_>> = cs.iter().map(PlanarComplex::corner_vertices).collect();
    let mut witness = None;
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let x = table[(1 << i) | (1 << j)].as_ref().expect("filled");
            let points = x.vertices().len();
            pairs.push(PairIntersection {
                pair: [i, j],
                points,
                cells: x.edges().len(),
            });
            if witness.is_some() {
                continue;
            }
            if !x.edges().is_empty() {
                witness = Some(format!("curves {i} and {j} share {} one-dimensional cells", x.edges().len()));
            } else if points == 0 {
                witness = Some(format!("curves {i} and {j} do not meet"));
            } else if let Some(v) = x
                .vertices()
                .iter()
                .find(|v| corners[i].contains(v) || corners[j].contains(v))
            {
                witness = Some(format!("curves {i} and {j} meet at {v}, a vertex of one of them"));
            }
        }
    }
    if witness.is_none() {
        for s in (1usize..(1 << m)).filter(|s| s.count_ones() == 3) {
            if table[s].as_ref().is_some_and(|x| !x.is_empty()) {
                witness = Some(format!("curves {:?} share a point", members(s)));
                break;
            }
        }
    }
    let rhs = lower_bound_rhs(m, 2, report.flen);
    let generic = witness.is_none();
    Ok(LowerBoundReport {
        mlen: report.formula,
        flen: report.flen,
        rhs,
        holds: report.formula >= rhs,
        tight: generic && pairs.iter().all(|p| p.points == 1 && p.cells == 0),
        generic,
        witness,
        pairs,
    })
}

/// `Σ|P_i| + 2 Σ_{k=0}^{d-1} C(m-1, k) - 2m`.
pub fn minkowski_lower_bound_rhs(vertex_counts: &[usize], d: usize) -> i64 {
    let m = vertex_counts.len();
    if m == 0 {
        return 0;
    }
    let zonotope: usize = (0..d).map(|k| binomial(m - 1, k)).sum();
    vertex_counts.iter().sum::<usize>() as i64 + 2 * zonotope as i64 - 2 * m as i64
}

/// Vertex count of a sum of `m` generic segments in dimension `d`.
pub fn zonotope_bound(m: usize, d: usize) -> usize {
    if m == 0 {
        return 1;
    }
    2 * (0..d).map(|k| binomial(m - 1, k)).sum::<usize>()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinkowskiReport {
    pub dim: usize,
    pub vertex_counts: Vec<usize>,
    pub sum_vertices: usize,
    pub rhs: i64,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zonotope_bound: Option<usize>,
    /// The sum is not full-dimensional, so the bound makes no claim.
    pub degenerate: bool,
}

pub fn check_minkowski_bound(polys: &[Polytope]) -> Result<MinkowskiReport> {
    let first = polys
        .first()
        .ok_or_else(|| Error::Invalid("need at least one polytope".into()))?;
    let d = first.dim();
    if !(2..=3).contains(&d) {
        return Err(Error::UnsupportedDimension { found: d, min: 2, max: 3 });
    }
    let sum = minkowski_sum_all(polys)?;
    let vertex_counts: Vec<usize> = polys.iter().map(Polytope::vertex_count).collect();
    let rhs = minkowski_lower_bound_rhs(&vertex_counts, d);
    let sum_vertices = sum.vertex_count();
    Ok(MinkowskiReport {
        dim: d,
        sum_vertices,
        rhs,
        holds: sum_vertices as i64 >= rhs,
        zonotope_bound: polys
            .iter()
            .all(|p| p.affine_dim() > 0)
            .then(|| zonotope_bound(polys.len(), d)),
        degenerate: !sum.is_full_dimensional(),
        vertex_counts,
    })
}

/// `mlen(g) + mlen(h) + χ(V(g) ∩ V(h))` for `φ = g ⊘ h` in the plane, an
/// upper bound on the number of linear regions of `φ`.
pub fn linear_region_bound(r: &RationalRep) -> Result<i64> {
    let g = r.numerator.expand_reduced()?;
    let h = r.denominator.expand_reduced()?;
    let chi = intersection_complex(&tropical_curve(&g)?, &tropical_curve(&h)?).euler_characteristic();
    Ok(g.len() as i64 + h.len() as i64 + chi)
}

/// Number of linear regions of `φ`, by the oracle on the support of its
/// corner locus.
pub fn linear_region_count(r: &RationalRep) -> Result<usize> {
    Ok(region_count_oracle(&corner_locus(r)?.support()))
}
