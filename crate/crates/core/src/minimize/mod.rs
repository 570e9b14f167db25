//! Minimal representations and minimal balancings.

mod arrangement;
mod fans;
mod pl1d;
mod witness;

pub use arrangement::{canonical_arrangement, verify_flen_bound, Arrangement, FlenBoundReport, Line};
pub use fans::{
    bell_number, enumerate_flen_minimal_balancings, fan_to_signomial, is_completely_unbalanced, is_irreducible_fan,
    minimal_balancing_fan_mlen, minimal_balancing_union, minimal_representation_fan, set_partitions, BalancingResult,
    SignedFan, UnionBalancing, PARTITION_LIMIT, SUBSET_LIMIT,
};
pub use pl1d::{minimal_representation_1d, Breakpoint, Curvature, PL1D};
pub use witness::{
    balancing_not_unique_witness, middle_triangle, witness_pair, Witness, REPORTED_MLEN_Y2, WITNESS_G, WITNESS_H,
};
