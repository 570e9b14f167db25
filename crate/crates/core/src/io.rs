//! JSON forms of the core types. Rationals are written as `"p/q"` strings.

use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::exactgeom::{convex_hull, Point, Polytope, Vec2};
use crate::plancomplex::{Edge, PlanarComplex, SignedComplex, WeightedFan};
use crate::rational::{serde_str, Rational};
use crate::signomial::{Factorization, Monomial, RationalRep, Signomial};

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("core types serialize")
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    dim: usize,
    #[serde(with = "serde_str::vec2")]
    vertices: Vec<Point>,
}

impl Serialize for Polytope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson { dim: self.dim(), vertices: self.vertices().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolytopeJson::deserialize(d)?;
        convex_hull(&j.vertices, j.dim).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    #[serde(with = "serde_str")]
    coeff: Rational,
    #[serde(with = "serde_str::vec")]
    exp: Point,
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialJson { coeff: self.coeff.clone(), exp: self.exp.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MonomialJson::deserialize(d)?;
        Ok(Monomial::new(j.coeff, j.exp))
    }
}

#[derive(Serialize, Deserialize)]
struct SignomialJson {
    dim: usize,
    monomials: Vec<Monomial>,
}

impl Serialize for Signomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignomialJson { dim: self.dim(), monomials: self.monomials().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Signomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SignomialJson::deserialize(d)?;
        Signomial::new(j.dim, j.monomials).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct FactorizationJson {
    dim: usize,
    factors: Vec<Vec<Monomial>>,
}

impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FactorizationJson {
            dim: self.dim(),
            factors: self.factors().iter().map(|f| f.monomials().to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Factorization {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FactorizationJson::deserialize(d)?;
        let factors = j
            .factors
            .into_iter()
            .map(|f| Signomial::new(j.dim, f))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Factorization::new(factors).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepJson {
    numerator: Factorization,
    denominator: Factorization,
}

impl Serialize for RationalRep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepJson { numerator: self.numerator.clone(), denominator: self.denominator.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RationalRepJson::deserialize(d)?;
        RationalRep::new(j.numerator, j.denominator).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum EdgeKind {
    Segment,
    Ray,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EdgeEnd {
    Vertex(usize),
    Direction(Vec2),
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    kind: EdgeKind,
    a: usize,
    b: EdgeEnd,
    w: Vec2,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<Vec2>,
    edges: Vec<EdgeJson>,
}

impl Serialize for PlanarComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges = self
            .edges()
            .iter()
            .map(|e| match e.end {
                Some(j) => EdgeJson { kind: EdgeKind::Segment, a: e.start, b: EdgeEnd::Vertex(j), w: e.weight.clone() },
                None => EdgeJson {
                    kind: EdgeKind::Ray,
                    a: e.start,
                    b: EdgeEnd::Direction(e.weight.primitive()),
                    w: e.weight.clone(),
                },
            })
            .collect();
        ComplexJson { vertices: self.vertices().to_vec(), edges }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanarComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ComplexJson::deserialize(d)?;
        let mut edges = Vec::new();
        for (i, e) in j.edges.into_iter().enumerate() {
            let end = match (e.kind, e.b) {
                (EdgeKind::Segment, EdgeEnd::Vertex(b)) => Some(b),
                (EdgeKind::Ray, EdgeEnd::Direction(dir)) => {
                    if !dir.same_direction(&e.w) {
                        return Err(D::Error::custom(format!("edge {i}: ray direction and vector disagree")));
                    }
                    None
                }
                _ => return Err(D::Error::custom(format!("edge {i}: \"b\" does not match the edge kind"))),
            };
            edges.push(Edge { start: e.a, end, weight: e.w });
        }
        PlanarComplex::new(j.vertices, edges).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct SignedComplexJson {
    positive: PlanarComplex,
    negative: PlanarComplex,
}

impl Serialize for SignedComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignedComplexJson { positive: self.positive.clone(), negative: self.negative.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SignedComplexJson::deserialize(d)?;
        Ok(SignedComplex { positive: j.positive, negative: j.negative })
    }
}

#[derive(Serialize, Deserialize)]
struct FanJson {
    base: Vec2,
    rays: Vec<Vec2>,
}

impl Serialize for WeightedFan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FanJson { base: self.base().clone(), rays: self.rays().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedFan {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FanJson::deserialize(d)?;
        WeightedFan::new(j.base, j.rays).map_err(D::Error::custom)
    }
}
