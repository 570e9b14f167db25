use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{self, Rational};

/// A point or vector in the plane with exact coordinates.
///
/// Ordering is lexicographic on `(x, y)`; complexes use it for canonical
/// vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vec2 {
    pub x: Rational,
    pub y: Rational,
}

impl Vec2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vec2 { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Vec2::new(rational::int(x), rational::int(y))
    }

    pub fn zero() -> Self {
        Vec2::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Vec2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the 3d cross product; positive when `other` is
    /// counterclockwise from `self`.
    pub fn cross(&self, other: &Vec2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, k: &Rational) -> Vec2 {
        Vec2::new(&self.x * k, &self.y * k)
    }

    /// Counterclockwise quarter turn.
    pub fn rot90(&self) -> Vec2 {
        Vec2::new(-&self.y, self.x.clone())
    }

    /// Clockwise quarter turn.
    pub fn rot_neg90(&self) -> Vec2 {
        Vec2::new(self.y.clone(), -&self.x)
    }

    pub fn is_parallel(&self, other: &Vec2) -> bool {
        self.cross(other).is_zero()
    }

    /// Parallel and pointing the same way (both nonzero).
    pub fn same_direction(&self, other: &Vec2) -> bool {
        !self.is_zero() && !other.is_zero() && self.is_parallel(other) && self.dot(other).is_positive()
    }

    /// Smallest integer vector with the same direction, e.g. `(2/3, -4/3) -> (1, -2)`.
    pub fn primitive(&self) -> Vec2 {
        if self.is_zero() {
            return Vec2::zero();
        }
        let l = self.x.denom().lcm(self.y.denom());
        let xs = (&self.x * Rational::from_integer(l.clone())).to_integer();
        let ys = (&self.y * Rational::from_integer(l)).to_integer();
        let g = xs.gcd(&ys);
        let g = if g.is_zero() { BigInt::one() } else { g };
        Vec2::new(Rational::from_integer(xs / &g), Rational::from_integer(ys / &g))
    }

    /// `true` for directions in the half-open upper half plane `[0, π)`.
    fn upper_half(&self) -> bool {
        self.y.is_positive() || (self.y.is_zero() && self.x.is_positive())
    }

    /// Compares directions by counterclockwise angle from the positive x axis.
    pub fn cmp_angle(&self, other: &Vec2) -> Ordering {
        match (self.upper_half(), other.upper_half()) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => {
                let c = self.cross(other);
                if c.is_positive() {
                    Ordering::Less
                } else if c.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            }
        }
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        vec![self.x.clone(), self.y.clone()]
    }

    pub fn from_slice(v: &[Rational]) -> Option<Vec2> {
        match v {
            [x, y] => Some(Vec2::new(x.clone(), y.clone())),
            _ => None,
        }
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<'a> Add<&'a Vec2> for &'a Vec2 {
    type Output = Vec2;
    fn add(self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        &self + &o
    }
}

impl<'a> Sub<&'a Vec2> for &'a Vec2 {
    type Output = Vec2;
    fn sub(self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        &self - &o
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        -&self
    }
}

impl<'a> std::iter::Sum<&'a Vec2> for Vec2 {
    fn sum<I: Iterator<Item = &'a Vec2>>(iter: I) -> Vec2 {
        iter.fold(Vec2::zero(), |acc, v| &acc + v)
    }
}

impl std::iter::Sum for Vec2 {
    fn sum<I: Iterator<Item = Vec2>>(iter: I) -> Vec2 {
        iter.fold(Vec2::zero(), |acc, v| &acc + &v)
    }
}

impl Serialize for Vec2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Vec2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let x = rational::parse(&x).map_err(serde::de::Error::custom)?;
        let y = rational::parse(&y).map_err(serde::de::Error::custom)?;
        Ok(Vec2::new(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn angle_order_runs_counterclockwise() {
        let mut dirs = vec![
            Vec2::int(0, -1),
            Vec2::int(-1, 0),
            Vec2::int(1, 1),
            Vec2::int(1, 0),
            Vec2::int(1, -1),
            Vec2::int(-1, 1),
        ];
        dirs.sort_by(|a, b| a.cmp_angle(b));
        assert_eq!(
            dirs,
            vec![
                Vec2::int(1, 0),
                Vec2::int(1, 1),
                Vec2::int(-1, 1),
                Vec2::int(-1, 0),
                Vec2::int(0, -1),
                Vec2::int(1, -1),
            ]
        );
    }

    #[test]
    fn primitive_clears_denominators() {
        let v = Vec2::new(frac(2, 3), frac(-4, 3));
        assert_eq!(v.primitive(), Vec2::int(1, -2));
        assert_eq!(Vec2::int(0, -5).primitive(), Vec2::int(0, -1));
    }

    #[test]
    fn rotations_are_inverse() {
        let v = Vec2::int(3, -2);
        assert_eq!(v.rot90().rot_neg90(), v);
        assert_eq!(v.rot90(), Vec2::int(2, 3));
    }
}
