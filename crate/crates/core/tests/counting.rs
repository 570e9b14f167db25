use proptest::prelude::*;

use tropic_core::counting::{
    binomial, check_lower_bound, check_minkowski_bound, linear_region_bound, linear_region_count,
    minkowski_lower_bound_rhs, region_count_formula, zonotope_bound,
};
use tropic_core::exactgeom::convex_hull;
use tropic_core::rational::int;
use tropic_core::signomial::{parse_rational_rep, parse_signomial, Signomial};

fn sigs(texts: &[&str]) -> Vec<Signomial> {
    texts.iter().map(|t| parse_signomial(t, Some(2)).unwrap()).collect()
}

fn signomial() -> impl Strategy<Value = Signomial> {
    prop::collection::vec((-3i64..=3, -2i64..=2, -2i64..=2), 1..6).prop_map(|terms| {
        let exps: Vec<[i64; 2]> = terms.iter().map(|&(_, a, b)| [a, b]).collect();
        let borrowed: Vec<(i64, &[i64])> = terms.iter().zip(&exps).map(|(t, e)| (t.0, &e[..])).collect();
        Signomial::from_ints(2, &borrowed).unwrap()
    })
}

#[test]
fn two_curves_meeting_three_times() {
    let r = region_count_formula(&sigs(&["x + y + 0", "0 + 1*x*y + -1*x*y^2"]), true).unwrap();
    assert_eq!((r.formula, r.oracle, r.flen), (8, Some(8), 5));
    assert_eq!(r.corrections[0].chi, 3);
}

#[test]
fn classic_line_arrangement() {
    let lines = sigs(&["x + 0", "y + 0", "-5*x*y + 0", "-7*x*y^-1 + 0"]);
    let r = region_count_formula(&lines, true).unwrap();
    assert_eq!(r.formula, 1 + 4 + binomial(4, 2));
    assert_eq!(r.oracle, Some(r.formula));
    assert!(check_lower_bound(&lines).unwrap().tight);
}

#[test]
fn concurrent_lines_are_not_generic() {
    let r = check_lower_bound(&sigs(&["x + 0", "y + 0", "x*y + 0"])).unwrap();
    assert!(!r.generic);
    assert_eq!(r.mlen, 6);
}

#[test]
fn parallel_edges_break_the_bound() {
    let r = check_lower_bound(&sigs(&["x + y + 0", "x^2 + y + 0"])).unwrap();
    assert!(!r.generic && !r.holds);
    assert_eq!((r.mlen, r.flen, r.rhs), (4, 5, 6));
}

#[test]
fn zonotope_counts() {
    assert_eq!(zonotope_bound(4, 3), 14);
    assert_eq!(zonotope_bound(3, 2), 6);
    let segs: Vec<_> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        .iter()
        .map(|d| convex_hull(&[vec![int(0); 3], d.iter().map(|&c| int(c)).collect()], 3).unwrap())
        .collect();
    let r = check_minkowski_bound(&segs).unwrap();
    assert_eq!(r.sum_vertices, 14);
    assert_eq!(r.rhs, minkowski_lower_bound_rhs(&[2, 2, 2, 2], 3));
    assert!(r.holds);
}

#[test]
fn linear_regions_of_the_rational_example() {
    let r = parse_rational_rep("(x + 0)*(y + 0) / (x + y + 0)", Some(2)).unwrap();
    assert_eq!(linear_region_count(&r).unwrap(), 3);
    assert!(linear_region_bound(&r).unwrap() >= 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn formula_matches_oracle(gs in prop::collection::vec(signomial(), 1..4)) {
        let r = region_count_formula(&gs, true).unwrap();
        prop_assert!(r.agrees());
        let product = tropic_core::signomial::Factorization::new(gs).unwrap();
        prop_assert_eq!(r.formula, product.mlen().unwrap());
    }

    #[test]
    fn generic_families_satisfy_the_bound(gs in prop::collection::vec(signomial(), 2..4)) {
        let r = check_lower_bound(&gs).unwrap();
        if r.generic {
            prop_assert!(r.holds);
            prop_assert_eq!(r.tight, r.mlen == r.rhs);
        }
    }
}
