//! Max-plus signomials, their products and quotients.
//!
//! A signomial `⊕ c_i ⊙ x^{a_i}` is the function `max_i (c_i + <a_i, x>)`.
//! Exponents and coefficients are arbitrary rationals. Products of
//! signomials are kept as [`Factorization`]s, quotients as [`RationalRep`]s.

mod newton;
pub mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactgeom::{linalg, Point};
use crate::rational::{self, Rational};

pub use newton::{lifted_newton, newton_polytope, regular_subdivision, Subdivision};
pub use parse::{parse_factorization, parse_rational_rep, parse_signomial, parse_signomial_list};

/// `coeff ⊙ x^exp`, i.e. the affine function `coeff + <exp, x>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub coeff: Rational,
    pub exp: Point,
}

impl Monomial {
    pub fn new(coeff: Rational, exp: Point) -> Self {
        Monomial { coeff, exp }
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        &self.coeff + linalg::dot(&self.exp, x)
    }

    /// The lifted point `(exp, coeff)`.
    pub fn lifted(&self) -> Point {
        let mut p = self.exp.clone();
        p.push(self.coeff.clone());
        p
    }
}

/// Nonempty tropical sum of monomials with pairwise distinct exponents,
/// stored sorted by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signomial {
    dim: usize,
    monomials: Vec<Monomial>,
}

impl Signomial {
    /// Builds a signomial, merging repeated exponents by the larger coefficient.
    pub fn new(dim: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut merged: BTreeMap<Point, Rational> = BTreeMap::new();
        for m in monomials {
            Error::check_dim(dim, m.exp.len())?;
            match merged.get_mut(&m.exp) {
                Some(c) if *c >= m.coeff => {}
                Some(c) => *c = m.coeff,
                None => {
                    merged.insert(m.exp, m.coeff);
                }
            }
        }
        if merged.is_empty() {
            return Err(Error::Invalid("a signomial needs at least one monomial".into()));
        }
        Ok(Signomial {
            dim,
            monomials: merged.into_iter().map(|(exp, coeff)| Monomial { coeff, exp }).collect(),
        })
    }

    /// Convenience constructor from integer `(coeff, exponents)` pairs.
    pub fn from_ints(dim: usize, terms: &[(i64, &[i64])]) -> Result<Self> {
        Signomial::new(
            dim,
            terms
                .iter()
                .map(|(c, e)| Monomial::new(rational::int(*c), e.iter().map(|&v| rational::int(v)).collect())),
        )
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Signomial {
            dim,
            monomials: vec![Monomial::new(c, vec![Rational::zero(); dim])],
        }
    }

    pub fn monomial(coeff: Rational, exp: Point) -> Self {
        Signomial {
            dim: exp.len(),
            monomials: vec![Monomial::new(coeff, exp)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn coefficient(&self, exp: &[Rational]) -> Option<&Rational> {
        self.monomials
            .binary_search_by(|m| m.exp.as_slice().cmp(exp))
            .ok()
            .map(|i| &self.monomials[i].coeff)
    }

    pub fn exponents(&self) -> Vec<Point> {
        self.monomials.iter().map(|m| m.exp.clone()).collect()
    }

    pub fn lifted_points(&self) -> Vec<Point> {
        self.monomials.iter().map(Monomial::lifted).collect()
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        Error::check_dim(self.dim, x.len())?;
        Ok(self.monomials.iter().map(|m| m.evaluate(x)).max().expect("nonempty"))
    }

    /// Tropical product: every pairwise sum of monomials.
    pub fn mul(&self, other: &Signomial) -> Result<Signomial> {
        Error::check_dim(self.dim, other.dim)?;
        Signomial::new(
            self.dim,
            self.monomials.iter().flat_map(|a| {
                other
                    .monomials
                    .iter()
                    .map(move |b| Monomial::new(&a.coeff + &b.coeff, linalg::add(&a.exp, &b.exp)))
            }),
        )
    }

    /// Tropical sum (pointwise max).
    pub fn add(&self, other: &Signomial) -> Result<Signomial> {
        Error::check_dim(self.dim, other.dim)?;
        Signomial::new(self.dim, self.monomials.iter().chain(&other.monomials).cloned())
    }

    /// Multiplies by the monomial `coeff ⊙ x^exp`, i.e. adds an affine function.
    pub fn shift(&self, coeff: &Rational, exp: &[Rational]) -> Result<Signomial> {
        Error::check_dim(self.dim, exp.len())?;
        Ok(Signomial {
            dim: self.dim,
            monomials: self
                .monomials
                .iter()
                .map(|m| Monomial::new(&m.coeff + coeff, linalg::add(&m.exp, exp)))
                .collect(),
        })
    }

    /// Drops every monomial whose lifted point is not an upper vertex of the
    /// lifted Newton polytope. The function is unchanged.
    pub fn reduce(&self) -> Result<Signomial> {
        if self.monomials.len() == 1 {
            return Ok(self.clone());
        }
        let lifted = lifted_newton(self)?;
        let upper = crate::exactgeom::upper_vertices(&lifted)?;
        let monomials: Vec<Monomial> = upper
            .into_iter()
            .map(|mut p| {
                let coeff = p.pop().expect("lifted point");
                Monomial::new(coeff, p)
            })
            .collect();
        Signomial::new(self.dim, monomials)
    }

    /// Number of monomials after reduction.
    pub fn mlen(&self) -> Result<usize> {
        Ok(self.reduce()?.len())
    }
}

impl fmt::Display for Signomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.monomials.iter().map(|m| format_monomial(m, self.dim)).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

pub(crate) fn variable_name(i: usize, dim: usize) -> String {
    if dim <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn format_monomial(m: &Monomial, dim: usize) -> String {
    let mut parts = Vec::new();
    let has_vars = m.exp.iter().any(|e| !e.is_zero());
    if !m.coeff.is_zero() || !has_vars {
        parts.push(rational::format(&m.coeff));
    }
    for (i, e) in m.exp.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let name = variable_name(i, dim);
        if *e == rational::one() {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{}", rational::format(e)));
        }
    }
    parts.join("*")
}

/// Ordered tropical product of signomials, kept unexpanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<Signomial>,
}

impl Factorization {
    pub fn new(factors: Vec<Signomial>) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::Invalid("a factorization needs at least one factor".into()))?;
        for f in &factors {
            Error::check_dim(first.dim, f.dim)?;
        }
        Ok(Factorization { factors })
    }

    pub fn single(s: Signomial) -> Self {
        Factorization { factors: vec![s] }
    }

    pub fn dim(&self) -> usize {
        self.factors[0].dim
    }

    pub fn factors(&self) -> &[Signomial] {
        &self.factors
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        self.factors.iter().map(|f| f.evaluate(x)).sum()
    }

    /// Multiplies out the product, keeping every exponent sum.
    pub fn expand(&self) -> Signomial {
        let (first, rest) = self.factors.split_first().expect("nonempty");
        rest.iter()
            .fold(first.clone(), |acc, f| acc.mul(f).expect("dimensions checked at construction"))
    }

    /// Reduced form of the product. Reducing after every multiplication keeps
    /// intermediate sizes down: upper vertices of a Minkowski sum are sums of
    /// upper vertices of the summands.
    pub fn expand_reduced(&self) -> Result<Signomial> {
        let (first, rest) = self.factors.split_first().expect("nonempty");
        let mut acc = first.reduce()?;
        for f in rest {
            acc = acc.mul(&f.reduce()?)?.reduce()?;
        }
        Ok(acc)
    }

    /// Monomial length of the expanded product.
    pub fn mlen(&self) -> Result<usize> {
        Ok(self.expand_reduced()?.len())
    }

    /// `Σ mlen(factor) - (m - 1)`.
    pub fn flen(&self) -> Result<usize> {
        let total: usize = self.factors.iter().map(|f| f.mlen()).sum::<Result<usize>>()?;
        Ok(total + 1 - self.factors.len())
    }

    pub fn concat(&self, other: &Factorization) -> Result<Factorization> {
        Factorization::new(self.factors.iter().chain(&other.factors).cloned().collect())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.len() == 1 {
            return write!(f, "{}", self.factors[0]);
        }
        let parts: Vec<String> = self.factors.iter().map(|s| format!("({s})")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `numerator ⊘ denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRep {
    pub numerator: Factorization,
    pub denominator: Factorization,
}

impl RationalRep {
    pub fn new(numerator: Factorization, denominator: Factorization) -> Result<Self> {
        Error::check_dim(numerator.dim(), denominator.dim())?;
        Ok(RationalRep { numerator, denominator })
    }

    pub fn dim(&self) -> usize {
        self.numerator.dim()
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        Ok(self.numerator.evaluate(x)? - self.denominator.evaluate(x)?)
    }

    /// `(mlen(numerator), mlen(denominator))`.
    pub fn mlen(&self) -> Result<(usize, usize)> {
        Ok((self.numerator.mlen()?, self.denominator.mlen()?))
    }

    pub fn flen(&self) -> Result<(usize, usize)> {
        Ok((self.numerator.flen()?, self.denominator.flen()?))
    }
}

impl fmt::Display for RationalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", wrap(&self.numerator), wrap(&self.denominator))
    }
}

fn wrap(f: &Factorization) -> String {
    if f.factors.len() == 1 {
        format!("({})", f.factors[0])
    } else {
        f.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(v: &[i64]) -> Point {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn evaluate_takes_the_max() {
        let s = Signomial::from_ints(1, &[(0, &[1]), (0, &[0])]).unwrap();
        assert_eq!(s.evaluate(&p(&[3])).unwrap(), int(3));
        assert_eq!(s.evaluate(&p(&[-2])).unwrap(), int(0));
        assert!(s.evaluate(&p(&[1, 2])).is_err());
    }

    #[test]
    fn duplicates_keep_the_larger_coefficient() {
        let s = Signomial::from_ints(1, &[(0, &[1]), (3, &[1])]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.coefficient(&p(&[1])), Some(&int(3)));
    }

    #[test]
    fn reduce_drops_points_below_and_on_the_hull() {
        let below = Signomial::from_ints(1, &[(0, &[0]), (-1, &[1]), (0, &[2])]).unwrap();
        assert_eq!(below.reduce().unwrap().exponents(), vec![p(&[0]), p(&[2])]);
        let on_chord = Signomial::from_ints(1, &[(0, &[0]), (0, &[1]), (0, &[2])]).unwrap();
        assert_eq!(on_chord.mlen().unwrap(), 2);
    }

    #[test]
    fn expand_of_two_binomials() {
        let f = Factorization::new(vec![
            Signomial::from_ints(2, &[(0, &[1, 0]), (0, &[0, 0])]).unwrap(),
            Signomial::from_ints(2, &[(0, &[0, 1]), (0, &[0, 0])]).unwrap(),
        ])
        .unwrap();
        assert_eq!(f.expand().len(), 4);
        assert_eq!(f.mlen().unwrap(), 4);
        assert_eq!(f.flen().unwrap(), 3);
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        let s = Signomial::new(
            2,
            vec![
                Monomial::new(rational::frac(-3, 2), p(&[1, -1])),
                Monomial::new(int(0), vec![rational::frac(1, 2), int(0)]),
                Monomial::new(int(2), p(&[0, 0])),
            ],
        )
        .unwrap();
        let text = s.to_string();
        assert_eq!(parse_signomial(&text, Some(2)).unwrap(), s);
    }
}
