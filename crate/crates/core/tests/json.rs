use proptest::prelude::*;

use tropic_core::io::{from_json, to_json};
use tropic_core::minimize::{balancing_not_unique_witness, SignedFan, Witness};
use tropic_core::plancomplex::{corner_locus, tropical_curve, PlanarComplex, SignedComplex};
use tropic_core::signomial::{parse_rational_rep, Factorization, Signomial};

fn signomial() -> impl Strategy<Value = Signomial> {
    prop::collection::vec((-3i64..=3, -2i64..=2, -2i64..=2), 1..6).prop_map(|terms| {
        let exps: Vec<[i64; 2]> = terms.iter().map(|&(_, a, b)| [a, b]).collect();
        let borrowed: Vec<(i64, &[i64])> = terms.iter().zip(&exps).map(|(t, e)| (t.0, &e[..])).collect();
        Signomial::from_ints(2, &borrowed).unwrap()
    })
}

#[test]
fn factorization_layout() {
    let f: Factorization =
        from_json(r#"{"dim":2,"factors":[[{"coeff":"0","exp":["1","0"]},{"coeff":"-1/2","exp":["0","0"]}]]}"#).unwrap();
    assert_eq!(f.to_string(), "-1/2 + x");
    assert!(from_json::<Factorization>(r#"{"dim":2,"factors":[[{"coeff":"0","exp":["1"]}]]}"#).is_err());
}

#[test]
fn signed_outputs_reparse() {
    let r = parse_rational_rep("(x + 0)*(y + 0) / (x + y + 0)", Some(2)).unwrap();
    let locus = corner_locus(&r).unwrap();
    assert_eq!(from_json::<SignedComplex>(&to_json(&locus)).unwrap(), locus);
    let w = balancing_not_unique_witness().unwrap();
    assert_eq!(from_json::<Witness>(&to_json(&w)).unwrap(), w);
}

#[test]
fn signed_fan_input_is_normalized() {
    let s: SignedFan = from_json(r#"{"base":["0","0"],"positive":[["2","0"],["0","1"]],"negative":[["1","0"]]}"#).unwrap();
    assert_eq!(s.positive().rays().len(), 2);
    assert!(s.negative().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn curves_reparse(s in signomial()) {
        let c = tropical_curve(&s).unwrap();
        prop_assert_eq!(from_json::<PlanarComplex>(&to_json(&c)).unwrap(), c);
        prop_assert_eq!(from_json::<Signomial>(&to_json(&s)).unwrap(), s);
    }
}
