use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, serde_str, Rational};
use crate::signomial::{Factorization, Monomial, RationalRep, Signomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Curvature {
    Convex,
    Concave,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakpoint {
    #[serde(with = "serde_str")]
    pub location: Rational,
    /// Absolute change of slope across the breakpoint.
    #[serde(with = "serde_str")]
    pub magnitude: Rational,
    pub kind: Curvature,
}

impl Breakpoint {
    fn signed_change(&self) -> Rational {
        match self.kind {
            Curvature::Convex => self.magnitude.clone(),
            Curvature::Concave => -&self.magnitude,
        }
    }
}

/// Continuous piecewise-linear function of one variable: its breakpoints
/// plus one value and the slope just right of `anchor_x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Pl1dJson")]
pub struct PL1D {
    breakpoints: Vec<Breakpoint>,
    #[serde(with = "serde_str")]
    anchor_x: Rational,
    #[serde(with = "serde_str")]
    anchor_value: Rational,
    #[serde(with = "serde_str")]
    anchor_slope: Rational,
}

#[derive(Deserialize)]
struct Pl1dJson {
    breakpoints: Vec<Breakpoint>,
    #[serde(with = "serde_str")]
    anchor_x: Rational,
    #[serde(with = "serde_str")]
    anchor_value: Rational,
    #[serde(with = "serde_str")]
    anchor_slope: Rational,
}

impl TryFrom<Pl1dJson> for PL1D {
    type Error = Error;
    fn try_from(j: Pl1dJson) -> Result<Self> {
        PL1D::new(j.breakpoints, j.anchor_x, j.anchor_value, j.anchor_slope)
    }
}

impl PL1D {
    pub fn new(mut breakpoints: Vec<Breakpoint>, anchor_x: Rational, anchor_value: Rational, anchor_slope: Rational) -> Result<Self> {
        breakpoints.sort_by(|a, b| a.location.cmp(&b.location));
        if breakpoints.windows(2).any(|w| w[0].location == w[1].location) {
            return Err(Error::Invalid("breakpoint locations must be distinct".into()));
        }
        if breakpoints.iter().any(|b| !b.magnitude.is_positive()) {
            return Err(Error::Invalid("slope changes must be positive".into()));
        }
        Ok(PL1D {
            breakpoints,
            anchor_x,
            anchor_value,
            anchor_slope,
        })
    }

    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.breakpoints
    }

    pub fn count(&self, kind: Curvature) -> usize {
        self.breakpoints.iter().filter(|b| b.kind == kind).count()
    }

    /// Slope left of every breakpoint.
    pub fn leftmost_slope(&self) -> Rational {
        self.breakpoints
            .iter()
            .filter(|b| b.location <= self.anchor_x)
            .fold(self.anchor_slope.clone(), |s, b| s - b.signed_change())
    }

    fn ramps(&self, x: &Rational) -> Rational {
        self.breakpoints
            .iter()
            .filter(|b| b.location < *x)
            .map(|b| b.signed_change() * (x - &b.location))
            .sum()
    }

    /// Constant term of the leftmost affine piece.
    fn intercept(&self) -> Rational {
        &self.anchor_value - self.leftmost_slope() * &self.anchor_x - self.ramps(&self.anchor_x)
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.leftmost_slope() * x + self.intercept() + self.ramps(x)
    }

    /// Recovers breakpoints and slopes of a one-variable quotient.
    pub fn from_rational(r: &RationalRep) -> Result<PL1D> {
        Error::check_dim(1, r.dim())?;
        let mut candidates: Vec<Rational> = Vec::new();
        for s in r.numerator.factors().iter().chain(r.denominator.factors()) {
            let m = s.monomials();
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    candidates.push((&m[i].coeff - &m[j].coeff) / (&m[j].exp[0] - &m[i].exp[0]));
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        let f = |x: &Rational| r.evaluate(std::slice::from_ref(x));
        let one = rational::one();
        let slope_between = |a: &Rational, b: &Rational| -> Result<Rational> { Ok((f(b)? - f(a)?) / (b - a)) };
        let Some(first) = candidates.first().cloned() else {
            let z = Rational::zero();
            return PL1D::new(Vec::new(), z.clone(), f(&z)?, slope_between(&z, &one)?);
        };
        let last = candidates.last().cloned().expect("nonempty");
        let mut slopes = vec![slope_between(&(&first - &one), &first)?];
        for w in candidates.windows(2) {
            slopes.push(slope_between(&w[0], &w[1])?);
        }
        slopes.push(slope_between(&last, &(&last + &one))?);
        let mut breakpoints = Vec::new();
        for (k, x) in candidates.iter().enumerate() {
            let change = &slopes[k + 1] - &slopes[k];
            if !change.is_zero() {
                breakpoints.push(Breakpoint {
                    location: x.clone(),
                    magnitude: change.abs(),
                    kind: if change.is_positive() { Curvature::Convex } else { Curvature::Concave },
                });
            }
        }
        PL1D::new(breakpoints, first.clone(), f(&first)?, slopes[1].clone())
    }
}

/// Minimal representation of a one-variable function: one factor
/// `(x ⊕ x_i)^{a_i}` per convex breakpoint in the numerator, one per concave
/// breakpoint in the denominator, and the remaining affine part folded into
/// the numerator (nonnegative slope) or the denominator (negative slope).
pub fn minimal_representation_1d(f: &PL1D) -> Result<RationalRep> {
    let zero = Rational::zero();
    let factor = |b: &Breakpoint| {
        Signomial::new(
            1,
            vec![
                Monomial::new(zero.clone(), vec![b.magnitude.clone()]),
                Monomial::new(&b.magnitude * &b.location, vec![zero.clone()]),
            ],
        )
    };
    let mut num = Vec::new();
    let mut den = Vec::new();
    // max(x - l, 0) = max(x, l) - l, so each factor overshoots by a * l.
    let mut constant = f.intercept();
    for b in f.breakpoints() {
        constant -= b.signed_change() * &b.location;
        match b.kind {
            Curvature::Convex => num.push(factor(b)?),
            Curvature::Concave => den.push(factor(b)?),
        }
    }
    let slope = f.leftmost_slope();
    let (target, c, a) = if slope.is_negative() { (&mut den, -constant, -slope) } else { (&mut num, constant, slope) };
    match target.first_mut() {
        Some(first) => *first = first.shift(&c, &[a])?,
        None => target.push(Signomial::monomial(c, vec![a])),
    }
    let fill = |v: Vec<Signomial>| -> Result<Factorization> {
        if v.is_empty() {
            Ok(Factorization::single(Signomial::constant(1, Rational::zero())))
        } else {
            Factorization::new(v)
        }
    };
    RationalRep::new(fill(num)?, fill(den)?)
}
