//! Exact low-dimensional convex geometry.
//!
//! Everything tropical in this crate eventually asks a convex-hull question:
//! Newton polytopes, lifted Newton polytopes and their Minkowski sums. Hulls
//! are computed exactly in ambient dimension at most four; lower-dimensional
//! point sets are handled inside their affine hull and reported with their
//! affine dimension instead of being rejected.

mod hull;
pub mod linalg;
mod vec2;

pub use hull::{convex_hull, minkowski_sum, minkowski_sum_all, upper_vertices, Facet, Polytope};
pub use vec2::Vec2;

/// Exact point in ambient dimension up to four.
pub type Point = Vec<crate::Rational>;
