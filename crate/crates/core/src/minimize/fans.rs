//! Minimal balancings of planar fans and minimal representations of
//! functions whose corner locus is a fan.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactgeom::Vec2;
use crate::plancomplex::WeightedFan;
use crate::rational::Rational;
use crate::signomial::{Factorization, Monomial, RationalRep, Signomial};

/// Largest ray count for which subsets are enumerated.
pub const SUBSET_LIMIT: usize = 20;
/// Largest ray count for which set partitions are enumerated.
pub const PARTITION_LIMIT: usize = 10;

/// Whether some nonempty subset of `vectors` sums to zero, visiting subsets
/// in Gray-code order so each step adds or removes one vector.
fn has_zero_subset(vectors: &[Vec2], proper: bool) -> Result<bool> {
    let m = vectors.len();
    if m > SUBSET_LIMIT {
        return Err(Error::TooManyRays { count: m, limit: SUBSET_LIMIT });
    }
    let full = (1u64 << m) - 1;
    let mut sum = Vec2::zero();
    let mut mask = 0u64;
    for step in 1..(1u64 << m) {
        let bit = step.trailing_zeros() as usize;
        mask ^= 1 << bit;
        sum = if mask >> bit & 1 == 1 { &sum + &vectors[bit] } else { &sum - &vectors[bit] };
        if sum.is_zero() && !(proper && mask == full) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// No nonempty set of rays, at full weight, is balanced.
pub fn is_completely_unbalanced(f: &WeightedFan) -> Result<bool> {
    Ok(!has_zero_subset(f.rays(), false)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancingResult {
    /// Blocks of indices into the input fan's rays.
    pub partition: Vec<Vec<usize>>,
    /// One balanced fan per block.
    pub balancings: Vec<WeightedFan>,
    /// The ray added to each block, `-Σ block`.
    pub added: Vec<Vec2>,
    pub mlen: usize,
    pub flen: usize,
    /// Some added ray points the same way as a ray of its own block.
    pub degenerate: bool,
}

fn balance_partition(f: &WeightedFan, partition: Vec<Vec<usize>>) -> Result<BalancingResult> {
    let mut balancings = Vec::new();
    let mut added = Vec::new();
    let mut degenerate = false;
    for block in &partition {
        let rays: Vec<Vec2> = block.iter().map(|&i| f.rays()[i].clone()).collect();
        let extra = -&rays.iter().sum::<Vec2>();
        degenerate |= rays.iter().any(|r| r.same_direction(&extra));
        let mut all = rays;
        all.push(extra.clone());
        balancings.push(WeightedFan::new(f.base().clone(), all)?);
        added.push(extra);
    }
    let union = WeightedFan::new(
        f.base().clone(),
        balancings.iter().flat_map(|b| b.rays().iter().cloned()).collect(),
    )?;
    let flen = balancings.iter().map(|b| b.len()).sum::<usize>() + 1 - balancings.len();
    Ok(BalancingResult {
        partition,
        balancings,
        added,
        mlen: union.len(),
        flen,
        degenerate,
    })
}

fn require_unbalanced(f: &WeightedFan) -> Result<()> {
    if f.is_empty() {
        return Err(Error::Invalid("the fan has no rays".into()));
    }
    if !is_completely_unbalanced(f)? {
        return Err(Error::NotCompletelyUnbalanced);
    }
    Ok(())
}

/// The unique balancing with fewest monomials: add the ray `-Σ v_i`.
pub fn minimal_balancing_fan_mlen(f: &WeightedFan) -> Result<BalancingResult> {
    require_unbalanced(f)?;
    balance_partition(f, vec![(0..f.len()).collect()])
}

/// Set partitions of `0..m` as restricted growth strings, in lexicographic
/// order of the strings.
pub fn set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    fn grow(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if prefix.len() == m {
            let blocks = prefix.iter().max().map_or(0, |b| b + 1);
            let mut p = vec![Vec::new(); blocks];
            for (i, &b) in prefix.iter().enumerate() {
                p[b].push(i);
            }
            out.push(p);
            return;
        }
        let limit = prefix.iter().max().map_or(0, |b| b + 1);
        for b in 0..=limit {
            prefix.push(b);
            grow(prefix, m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), m, &mut out);
    out
}

pub fn bell_number(m: usize) -> u64 {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![*row.last().expect("nonempty")];
        for v in &row {
            next.push(next.last().expect("nonempty") + v);
        }
        row = next;
    }
    row[0]
}

/// Every balancing of minimal factorization length: one per set partition of
/// the rays, each block balanced by its own added ray.
pub fn enumerate_flen_minimal_balancings(f: &WeightedFan) -> Result<Vec<BalancingResult>> {
    if f.len() > PARTITION_LIMIT {
        return Err(Error::TooManyRays {
            count: f.len(),
            limit: PARTITION_LIMIT,
        });
    }
    require_unbalanced(f)?;
    set_partitions(f.len())
        .into_iter()
        .map(|p| balance_partition(f, p))
        .collect()
}

/// Signomial whose tropical curve is the balanced fan `f`.
///
/// Each ray vector turned a quarter counterclockwise is an edge of the dual
/// polygon; sorted by angle and chained from the origin they close up
/// because the fan is balanced. Coefficients make every monomial equal at
/// the base point.
pub fn fan_to_signomial(f: &WeightedFan) -> Result<Signomial> {
    if !f.is_balanced() {
        return Err(Error::NotAFan("the fan is not balanced".into()));
    }
    let mut edges: Vec<Vec2> = f.rays().iter().map(Vec2::rot90).collect();
    edges.sort_by(|a, b| a.cmp_angle(b));
    let mut corner = Vec2::zero();
    let mut monomials = Vec::new();
    for e in &edges {
        monomials.push(Monomial::new(-corner.dot(f.base()), corner.to_vec()));
        corner = &corner + e;
    }
    if monomials.is_empty() {
        return Ok(Signomial::constant(2, Rational::zero()));
    }
    Signomial::new(2, monomials)
}

/// Fan with positive and negative weights at one base point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SignedFanJson")]
pub struct SignedFan {
    base: Vec2,
    positive: Vec<Vec2>,
    negative: Vec<Vec2>,
}

#[derive(Deserialize)]
struct SignedFanJson {
    base: Vec2,
    positive: Vec<Vec2>,
    negative: Vec<Vec2>,
}

impl TryFrom<SignedFanJson> for SignedFan {
    type Error = Error;
    fn try_from(j: SignedFanJson) -> Result<Self> {
        SignedFan::new(j.base, j.positive, j.negative)
    }
}

impl SignedFan {
    /// Rays pointing the same way are combined with their signs, so the
    /// positive and negative parts end up without common directions.
    pub fn new(base: Vec2, positive: Vec<Vec2>, negative: Vec<Vec2>) -> Result<Self> {
        let mut net: Vec<(Vec2, Vec2)> = Vec::new();
        let signed = positive.into_iter().map(|v| (v, true)).chain(negative.into_iter().map(|v| (v, false)));
        for (v, plus) in signed {
            if v.is_zero() {
                return Err(Error::Invalid("a fan ray needs a nonzero vector".into()));
            }
            let contribution = if plus { v.clone() } else { -&v };
            match net.iter_mut().find(|(d, _)| d.same_direction(&v)) {
                Some((_, total)) => *total = &*total + &contribution,
                None => net.push((v, contribution)),
            }
        }
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (d, total) in net {
            let s = total.dot(&d);
            if s.is_positive() {
                pos.push(total);
            } else if s.is_negative() {
                neg.push(-&total);
            }
        }
        let positive = WeightedFan::new(base.clone(), pos)?.rays().to_vec();
        let negative = WeightedFan::new(base.clone(), neg)?.rays().to_vec();
        Ok(SignedFan { base, positive, negative })
    }

    pub fn base(&self) -> &Vec2 {
        &self.base
    }

    pub fn positive(&self) -> WeightedFan {
        WeightedFan::new(self.base.clone(), self.positive.clone()).expect("validated")
    }

    pub fn negative(&self) -> WeightedFan {
        WeightedFan::new(self.base.clone(), self.negative.clone()).expect("validated")
    }

    fn signed_vectors(&self) -> Vec<Vec2> {
        self.positive.iter().cloned().chain(self.negative.iter().map(|v| -v)).collect()
    }

    /// Positive rays minus negative rays sum to zero.
    pub fn is_sign_balanced(&self) -> bool {
        self.signed_vectors().iter().sum::<Vec2>().is_zero()
    }
}

/// No proper nonempty set of whole rays is sign-balanced on its own.
pub fn is_irreducible_fan(s: &SignedFan) -> Result<bool> {
    Ok(!has_zero_subset(&s.signed_vectors(), true)?)
}

/// The unique minimal representation of a function whose corner locus is an
/// irreducible fan: both parts are balanced by the same added ray `-Σ V₊`
/// and turned into signomials by polygon duality.
pub fn minimal_representation_fan(s: &SignedFan) -> Result<RationalRep> {
    if !s.is_sign_balanced() {
        return Err(Error::NotAFan("positive and negative rays do not balance".into()));
    }
    if !is_irreducible_fan(s)? {
        return Err(Error::Reducible);
    }
    let extra = -&s.positive.iter().sum::<Vec2>();
    let complete = |part: WeightedFan| if extra.is_zero() { Ok(part) } else { part.with_ray(extra.clone()) };
    let g = fan_to_signomial(&complete(s.positive())?)?;
    let h = fan_to_signomial(&complete(s.negative())?)?;
    RationalRep::new(Factorization::single(g), Factorization::single(h))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionBalancing {
    pub balancings: Vec<WeightedFan>,
    pub flen: usize,
}

/// Balances fans in general position one at a time; the union is minimal
/// for the factorization length.
pub fn minimal_balancing_union(fans: &[WeightedFan]) -> Result<UnionBalancing> {
    let mut balancings = Vec::new();
    for f in fans {
        let mut result = minimal_balancing_fan_mlen(f)?;
        balancings.push(result.balancings.remove(0));
    }
    for (i, a) in balancings.iter().enumerate() {
        for (j, b) in balancings.iter().enumerate() {
            if i == j {
                continue;
            }
            if a.base() == b.base() {
                return Err(Error::NotGeneric(format!("fans {i} and {j} share the base {}", a.base())));
            }
            let to_other = b.base() - a.base();
            if let Some(r) = a.rays().iter().find(|r| r.same_direction(&to_other)) {
                return Err(Error::NotGeneric(format!("ray {r} of fan {i} passes through the base of fan {j}")));
            }
            if i < j && a.rays().iter().any(|r| b.rays().iter().any(|q| r.is_parallel(q))) {
                return Err(Error::NotGeneric(format!("fans {i} and {j} have parallel rays")));
            }
        }
    }
    let flen = fans.iter().map(WeightedFan::len).sum::<usize>() + 1;
    Ok(UnionBalancing { balancings, flen })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(rays: &[(i64, i64)]) -> WeightedFan {
        WeightedFan::new(Vec2::zero(), rays.iter().map(|&(x, y)| Vec2::int(x, y)).collect()).unwrap()
    }

    #[test]
    fn complete_unbalance() {
        assert!(is_completely_unbalanced(&fan(&[(1, 0), (0, 1)])).unwrap());
        assert!(!is_completely_unbalanced(&fan(&[(1, 0), (-1, 0)])).unwrap());
        assert!(!is_completely_unbalanced(&fan(&[(1, 0), (0, 1), (-1, -1), (2, 3)])).unwrap());
    }

    #[test]
    fn two_rays_become_a_tropical_line() {
        let r = minimal_balancing_fan_mlen(&fan(&[(1, 0), (0, 1)])).unwrap();
        assert_eq!(r.added, vec![Vec2::int(-1, -1)]);
        assert_eq!((r.mlen, r.flen), (3, 3));
        assert!(r.balancings[0].is_balanced());
        assert!(matches!(
            minimal_balancing_fan_mlen(&fan(&[(1, 1), (-1, -1)])),
            Err(Error::NotCompletelyUnbalanced)
        ));
    }

    #[test]
    fn bell_numbers_and_partitions() {
        let bells: Vec<u64> = (0..7).map(bell_number).collect();
        assert_eq!(bells, vec![1, 1, 2, 5, 15, 52, 203]);
        for m in 0..7 {
            assert_eq!(set_partitions(m).len() as u64, bell_number(m));
        }
    }

    #[test]
    fn single_ray_balances_to_a_line() {
        let all = enumerate_flen_minimal_balancings(&fan(&[(2, 1)])).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].balancings[0].rays().len(), 2);
        assert_eq!(all[0].flen, 2);
    }

    #[test]
    fn fan_duality_recovers_the_tropical_line() {
        let s = fan_to_signomial(&fan(&[(1, 1), (-1, 0), (0, -1)])).unwrap();
        assert_eq!(s, Signomial::from_ints(2, &[(0, &[0, 0]), (0, &[1, 0]), (0, &[0, 1])]).unwrap());
    }

    #[test]
    fn max_three_minus_max_two() {
        let s = SignedFan::new(Vec2::zero(), vec![Vec2::int(0, -1), Vec2::int(-1, 0)], vec![Vec2::int(-1, -1)]).unwrap();
        assert!(is_irreducible_fan(&s).unwrap());
        let rep = minimal_representation_fan(&s).unwrap();
        assert_eq!(rep.mlen().unwrap(), (3, 2));
    }

    #[test]
    fn opposite_signs_cancel_on_construction() {
        let s = SignedFan::new(Vec2::zero(), vec![Vec2::int(2, 0)], vec![Vec2::int(1, 0)]).unwrap();
        assert_eq!(s.positive().rays(), &[Vec2::int(1, 0)]);
        assert!(s.negative().is_empty());
    }
}
