use std::collections::BTreeSet;

use proptest::prelude::*;

use tropic_core::exactgeom::Vec2;
use tropic_core::minimize::{
    balancing_not_unique_witness, bell_number, canonical_arrangement, enumerate_flen_minimal_balancings,
    is_completely_unbalanced, is_irreducible_fan, middle_triangle, minimal_balancing_fan_mlen,
    minimal_balancing_union, minimal_representation_1d, minimal_representation_fan, set_partitions, Breakpoint,
    Curvature, SignedFan, PL1D,
};
use tropic_core::plancomplex::{corner_locus, tropical_curve, PlanarComplex, WeightedFan};
use tropic_core::rational::{frac, int};
use tropic_core::signomial::parse_signomial;
use tropic_core::Error;

fn fan_at(base: Vec2, rays: &[(i64, i64)]) -> WeightedFan {
    WeightedFan::new(base, rays.iter().map(|&(x, y)| Vec2::int(x, y)).collect()).unwrap()
}

fn fan(rays: &[(i64, i64)]) -> WeightedFan {
    fan_at(Vec2::zero(), rays)
}

/// Partitions as block-label assignments, normalized by sorting blocks.
fn brute_force_partitions(m: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let mut out = BTreeSet::new();
    let total = (m as u32).checked_pow(m as u32).unwrap_or(1).max(1);
    for code in 0..total {
        let mut blocks = vec![Vec::new(); m];
        let mut c = code;
        for i in 0..m {
            blocks[(c % m as u32) as usize].push(i);
            c /= m as u32;
        }
        let mut p: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        p.sort();
        out.insert(p);
    }
    out
}

#[test]
fn partitions_match_brute_force() {
    for m in 1..=6 {
        let ours: Vec<Vec<Vec<usize>>> = set_partitions(m)
            .into_iter()
            .map(|mut p| {
                p.sort();
                p
            })
            .collect();
        let distinct: BTreeSet<_> = ours.iter().cloned().collect();
        assert_eq!(distinct.len(), ours.len());
        assert_eq!(distinct, brute_force_partitions(m));
        assert_eq!(ours.len() as u64, bell_number(m));
    }
}

#[test]
fn completely_unbalanced_examples() {
    assert!(is_completely_unbalanced(&fan(&[(1, 0), (0, 1)])).unwrap());
    assert!(!is_completely_unbalanced(&fan(&[(1, 0), (-1, 0)])).unwrap());
    assert!(!is_completely_unbalanced(&fan(&[(1, 0), (0, 1), (-1, -1), (2, 3)])).unwrap());
    let many: Vec<(i64, i64)> = (1..=21).map(|i| (i, 1)).collect();
    assert!(matches!(is_completely_unbalanced(&fan(&many)), Err(Error::TooManyRays { .. })));
}

#[test]
fn four_generic_rays() {
    let f = fan(&[(2, 1), (-1, 2), (-3, -1), (1, -3)]);
    let r = minimal_balancing_fan_mlen(&f).unwrap();
    assert_eq!(r.balancings[0].len(), 5);
    assert_eq!(r.added, vec![Vec2::int(1, 1)]);
    let all = enumerate_flen_minimal_balancings(&f).unwrap();
    assert_eq!(all.len(), 15);
    assert!(all.iter().all(|b| b.flen == 5));
    assert_eq!(all[0].partition, vec![vec![0, 1, 2, 3]]);
}

#[test]
fn three_rays_have_five_balancings() {
    let all = enumerate_flen_minimal_balancings(&fan(&[(1, 0), (0, 1), (-2, 3)])).unwrap();
    assert_eq!(all.len(), 5);
}

#[test]
fn blocks_are_minimal_on_their_own() {
    let f = fan(&[(2, 1), (-1, 2), (-3, -1), (1, -3)]);
    for b in enumerate_flen_minimal_balancings(&f).unwrap() {
        for (block, balanced) in b.partition.iter().zip(&b.balancings) {
            let sub = WeightedFan::new(Vec2::zero(), block.iter().map(|&i| f.rays()[i].clone()).collect()).unwrap();
            assert_eq!(&minimal_balancing_fan_mlen(&sub).unwrap().balancings[0], balanced);
            assert_eq!(balanced.len(), block.len() + 1);
        }
    }
}

#[test]
fn parallel_added_ray_is_flagged() {
    // The three rays sum to (-2,0), so the single block adds (2,0) along (1,0).
    let f = fan(&[(1, 0), (-3, 1), (0, -1)]);
    let all = enumerate_flen_minimal_balancings(&f).unwrap();
    assert!(all[0].degenerate);
    assert_eq!(all[0].mlen, 3);
    assert!(all[1..].iter().all(|b| !b.degenerate));
}

#[test]
fn union_of_generic_fans() {
    let a = fan_at(Vec2::int(0, 0), &[(1, 0), (0, 1)]);
    let b = fan_at(Vec2::int(5, -3), &[(2, 1), (-1, 3)]);
    let u = minimal_balancing_union(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(u.flen, 5);
    // One more generic ray raises the minimal length by exactly one.
    let c = fan_at(Vec2::int(-4, 7), &[(3, -1)]);
    assert_eq!(minimal_balancing_union(&[a.clone(), b, c]).unwrap().flen, 6);
    assert!(matches!(
        minimal_balancing_union(&[a.clone(), fan_at(Vec2::int(3, 0), &[(1, 2)])]),
        Err(Error::NotGeneric(_))
    ));
    let single = minimal_balancing_union(std::slice::from_ref(&a)).unwrap();
    assert_eq!(single.balancings[0], minimal_balancing_fan_mlen(&a).unwrap().balancings[0]);
}

#[test]
fn one_ray_fans_become_lines() {
    let fans: Vec<WeightedFan> = [((0, 0), (1, 0)), ((1, 3), (0, 1)), ((-2, 5), (1, 1))]
        .iter()
        .map(|&((bx, by), r)| fan_at(Vec2::int(bx, by), &[r]))
        .collect();
    let u = minimal_balancing_union(&fans).unwrap();
    assert_eq!(u.flen, 4);
    assert!(u.balancings.iter().all(|b| b.len() == 2));
}

#[test]
fn fan_representation_examples() {
    let s = SignedFan::new(Vec2::zero(), vec![Vec2::int(0, -1), Vec2::int(-1, 0)], vec![Vec2::int(-1, -1)]).unwrap();
    let rep = minimal_representation_fan(&s).unwrap();
    assert_eq!(rep.mlen().unwrap(), (3, 2));
    let locus = corner_locus(&rep).unwrap();
    assert_eq!(locus.positive.pure_part(), s.positive().to_complex().pure_part());
    assert_eq!(locus.negative.pure_part(), s.negative().to_complex().pure_part());

    // Contains the balanced line through (1,0) on the positive side.
    let r = SignedFan::new(
        Vec2::zero(),
        vec![Vec2::int(1, 0), Vec2::int(-1, 0), Vec2::int(0, 1), Vec2::int(0, -2)],
        vec![Vec2::int(1, -3), Vec2::int(-1, 2)],
    )
    .unwrap();
    assert!(!is_irreducible_fan(&r).unwrap());
    assert!(matches!(minimal_representation_fan(&r), Err(Error::Reducible)));
}

#[test]
fn canonical_arrangement_examples() {
    let tripod = tropical_curve(&parse_signomial("x + y + 0", Some(2)).unwrap()).unwrap();
    assert_eq!(canonical_arrangement(&tripod).flen(), 4);
    let (triangle, h) = middle_triangle().unwrap();
    assert_eq!(canonical_arrangement(&triangle).lines.len(), 3);
    assert_eq!(h.flen().unwrap(), 4);
    let segment =
        PlanarComplex::from_parts(vec![], vec![(Vec2::int(0, 0), Vec2::int(1, 1), Vec2::int(1, 1))], vec![]).unwrap();
    assert_eq!(canonical_arrangement(&segment).flen(), 2);
}

#[test]
fn witness_lengths_cross() {
    let w = balancing_not_unique_witness().unwrap();
    assert!(w.mlen_y1 < w.mlen_y2 && w.flen_y1 > w.flen_y2);
    assert_eq!(w.reported_mlen_y2, 6);
    assert!(w.y1_balances && w.y2_balances);
}

#[test]
fn quotient_of_shifted_binomials() {
    let f = PL1D::new(
        vec![
            Breakpoint { location: int(0), magnitude: int(1), kind: Curvature::Convex },
            Breakpoint { location: int(1), magnitude: int(1), kind: Curvature::Concave },
        ],
        int(-5),
        int(0),
        int(0),
    )
    .unwrap();
    let rep = minimal_representation_1d(&f).unwrap();
    assert_eq!(rep.mlen().unwrap(), (2, 2));
    for i in -20..=20 {
        let x = frac(i, 4);
        let direct = x.clone().max(int(0)) - (x.clone().max(int(1)) - int(1));
        assert_eq!(rep.evaluate(std::slice::from_ref(&x)).unwrap(), f.evaluate(&x));
        assert_eq!(f.evaluate(&x), direct);
    }
}

fn pl1d() -> impl Strategy<Value = PL1D> {
    (
        prop::collection::btree_map(-20i64..=20, (1i64..=4, any::<bool>()), 0..7),
        -10i64..=10,
        -10i64..=10,
        -3i64..=3,
    )
        .prop_map(|(bps, ax, av, slope)| {
            let breakpoints = bps
                .into_iter()
                .map(|(loc, (mag, convex))| Breakpoint {
                    location: frac(loc, 2),
                    magnitude: int(mag),
                    kind: if convex { Curvature::Convex } else { Curvature::Concave },
                })
                .collect();
            PL1D::new(breakpoints, int(ax), int(av), int(slope)).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn one_dimensional_representation_is_exact_and_short(f in pl1d()) {
        let rep = minimal_representation_1d(&f).unwrap();
        prop_assert_eq!(
            rep.mlen().unwrap(),
            (f.count(Curvature::Convex) + 1, f.count(Curvature::Concave) + 1)
        );
        for i in -48..=48 {
            let x = frac(i, 4);
            prop_assert_eq!(rep.evaluate(std::slice::from_ref(&x)).unwrap(), f.evaluate(&x));
        }
        // Reading the function back from the representation gives it again.
        let back = PL1D::from_rational(&rep).unwrap();
        prop_assert_eq!(back.breakpoints(), f.breakpoints());
    }
}
