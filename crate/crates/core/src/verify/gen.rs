//! Seeded random instances for the verification suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use num_traits::Zero;

use crate::exactgeom::{convex_hull, Polytope, Vec2};
use crate::minimize::{Breakpoint, Curvature, SignedFan, PL1D};
use crate::plancomplex::WeightedFan;
use crate::rational::{frac, int, Rational};
use crate::signomial::{Monomial, Signomial};

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(rng: &mut Rng8, range: i64, max_den: i64) -> Rational {
    let q = rng.gen_range(1..=max_den);
    frac(rng.gen_range(-range * q..=range * q), q)
}

/// Signomial in two variables with up to `max_terms` monomials, exponents in
/// `[-2, 2]` and half-integer coefficients, reduced.
pub fn signomial(rng: &mut Rng8, max_terms: usize) -> Signomial {
    let n = rng.gen_range(1..=max_terms);
    let monomials = (0..n).map(|_| {
        let exp = vec![int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2))];
        Monomial::new(small_rational(rng, 3, 2), exp)
    });
    Signomial::new(2, monomials).expect("two variables").reduce().expect("planar")
}

/// Like [`signomial`] but with at least two monomials, so the curve is not
/// empty.
pub fn curve_signomial(rng: &mut Rng8, max_terms: usize) -> Signomial {
    loop {
        let s = signomial(rng, max_terms);
        if s.len() >= 2 {
            return s;
        }
    }
}

fn primitive_direction(rng: &mut Rng8, range: i64) -> Vec2 {
    loop {
        let v = Vec2::int(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
        if !v.is_zero() && v.primitive() == v {
            return v;
        }
    }
}

/// Binomial `0 ⊕ c ⊙ x^e` whose curve is a line with normal `e`.
pub fn binomial_line(rng: &mut Rng8, normal: &Vec2) -> Signomial {
    Signomial::new(
        2,
        [
            Monomial::new(Rational::zero(), vec![Rational::zero(), Rational::zero()]),
            Monomial::new(small_rational(rng, 5, 3), normal.to_vec()),
        ],
    )
    .expect("two variables")
}

/// `m` binomial lines with pairwise non-parallel normals. Concurrency is not
/// excluded here.
pub fn lines(rng: &mut Rng8, m: usize) -> Vec<Signomial> {
    let mut normals: Vec<Vec2> = Vec::new();
    while normals.len() < m {
        let n = primitive_direction(rng, 4);
        if normals.iter().all(|o| !o.is_parallel(&n)) {
            normals.push(n);
        }
    }
    normals.iter().map(|n| binomial_line(rng, n)).collect()
}

/// Subset sums of `rays` indexed by bitmask.
fn subset_sums(rays: &[Vec2]) -> Vec<Vec2> {
    let mut sums = vec![Vec2::zero(); 1 << rays.len()];
    for mask in 1usize..sums.len() {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = &sums[mask & (mask - 1)] + &rays[low];
    }
    sums
}

/// Every set partition of these rays balances into fans that only share
/// the base: no added ray `-Σ S` points along an input ray, and added rays
/// of disjoint subsets point different ways. This also makes the fan
/// completely unbalanced.
pub fn is_generic_fan(rays: &[Vec2]) -> bool {
    let sums = subset_sums(rays);
    let full = sums.len() - 1;
    for s in 1..=full {
        let added = -&sums[s];
        if added.is_zero() || rays.iter().any(|r| r.same_direction(&added)) {
            return false;
        }
        let rest = full & !s;
        let mut t = rest;
        while t > 0 {
            if sums[s].same_direction(&sums[t]) {
                return false;
            }
            t = (t - 1) & rest;
        }
    }
    for (i, a) in rays.iter().enumerate() {
        if rays[..i].iter().any(|b| a.is_parallel(b)) {
            return false;
        }
    }
    true
}

pub fn generic_fan(rng: &mut Rng8, m: usize, base: Vec2) -> WeightedFan {
    loop {
        let rays: Vec<Vec2> = (0..m)
            .map(|_| Vec2::int(rng.gen_range(-9..=9), rng.gen_range(-9..=9)))
            .collect();
        if rays.iter().all(|r| !r.is_zero()) && is_generic_fan(&rays) {
            return WeightedFan::new(base, rays).expect("nonzero rays");
        }
    }
}

pub fn point(rng: &mut Rng8, range: i64) -> Vec2 {
    Vec2::new(small_rational(rng, range, 2), small_rational(rng, range, 2))
}

/// Sign-balanced fan with `m1` positive and `m2 >= 1` negative rays at the
/// origin, no two rays parallel. The last negative ray closes the balance.
pub fn signed_fan(rng: &mut Rng8, m1: usize, m2: usize) -> Option<SignedFan> {
    let positive: Vec<Vec2> = (0..m1)
        .map(|_| Vec2::int(rng.gen_range(-6..=6), rng.gen_range(-6..=6)))
        .collect();
    let mut negative: Vec<Vec2> = (0..m2 - 1)
        .map(|_| Vec2::int(rng.gen_range(-6..=6), rng.gen_range(-6..=6)))
        .collect();
    let closing = &positive.iter().sum::<Vec2>() - &negative.iter().sum::<Vec2>();
    negative.push(closing);
    let all: Vec<&Vec2> = positive.iter().chain(&negative).collect();
    for (i, a) in all.iter().enumerate() {
        if a.is_zero() || all[..i].iter().any(|b| a.is_parallel(b)) {
            return None;
        }
    }
    SignedFan::new(Vec2::zero(), positive, negative).ok()
}

/// Convex, concave and mixed breakpoints at distinct locations in
/// `[-10, 10]` with denominators up to 4.
pub fn pl1d(rng: &mut Rng8, max_breakpoints: usize) -> PL1D {
    let n = rng.gen_range(0..=max_breakpoints);
    let mut locations: Vec<Rational> = Vec::new();
    while locations.len() < n {
        let x = small_rational(rng, 10, 4);
        if !locations.contains(&x) {
            locations.push(x);
        }
    }
    let breakpoints = locations
        .into_iter()
        .map(|location| Breakpoint {
            location,
            magnitude: frac(rng.gen_range(1..=6), rng.gen_range(1..=2)),
            kind: *[Curvature::Convex, Curvature::Concave].choose(rng).expect("nonempty"),
        })
        .collect();
    PL1D::new(
        breakpoints,
        small_rational(rng, 10, 2),
        small_rational(rng, 10, 2),
        small_rational(rng, 3, 2),
    )
    .expect("distinct locations, positive magnitudes")
}

fn lattice_point(rng: &mut Rng8, dim: usize, range: i64) -> Vec<Rational> {
    (0..dim).map(|_| int(rng.gen_range(-range..=range))).collect()
}

/// Full-dimensional simplex with integer vertices.
pub fn simplex(rng: &mut Rng8, dim: usize) -> Polytope {
    loop {
        let pts: Vec<Vec<Rational>> = (0..=dim).map(|_| lattice_point(rng, dim, 5)).collect();
        if let Ok(p) = convex_hull(&pts, dim) {
            if p.is_full_dimensional() && p.vertex_count() == dim + 1 {
                return p;
            }
        }
    }
}

/// Segment from the origin in a random lattice direction.
pub fn segment(rng: &mut Rng8, dim: usize) -> Polytope {
    loop {
        let v = lattice_point(rng, dim, 5);
        if v.iter().any(|c| !c.is_zero()) {
            let origin = vec![Rational::zero(); dim];
            return convex_hull(&[origin, v], dim).expect("two points");
        }
    }
}

/// Uniform integer in `lo..=hi`.
pub fn rng_range(rng: &mut Rng8, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}
