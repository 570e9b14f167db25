use crate::error::{Error, Result};
use crate::exactgeom::Vec2;

use super::PlanarComplex;

/// Rays from a common base point. Rays pointing the same way are merged by
/// adding their vectors; the rays are kept in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedFan {
    base: Vec2,
    rays: Vec<Vec2>,
}

impl WeightedFan {
    pub fn new(base: Vec2, rays: Vec<Vec2>) -> Result<Self> {
        let mut merged: Vec<Vec2> = Vec::new();
        for r in rays {
            if r.is_zero() {
                return Err(Error::Invalid("a fan ray needs a nonzero vector".into()));
            }
            match merged.iter_mut().find(|m| m.same_direction(&r)) {
                Some(m) => *m = &*m + &r,
                None => merged.push(r),
            }
        }
        merged.sort_by(|a, b| a.cmp_angle(b));
        Ok(WeightedFan { base, rays: merged })
    }

    pub fn base(&self) -> &Vec2 {
        &self.base
    }

    pub fn rays(&self) -> &[Vec2] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn ray_sum(&self) -> Vec2 {
        self.rays.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.ray_sum().is_zero()
    }

    pub fn with_ray(&self, r: Vec2) -> Result<WeightedFan> {
        let mut rays = self.rays.clone();
        rays.push(r);
        WeightedFan::new(self.base.clone(), rays)
    }

    pub fn translated_to_origin(&self) -> WeightedFan {
        WeightedFan {
            base: Vec2::zero(),
            rays: self.rays.clone(),
        }
    }

    pub fn to_complex(&self) -> PlanarComplex {
        PlanarComplex::from_parts(
            vec![self.base.clone()],
            vec![],
            self.rays.iter().map(|r| (self.base.clone(), r.clone())).collect(),
        )
        .expect("fan rays are nonzero")
    }
}
