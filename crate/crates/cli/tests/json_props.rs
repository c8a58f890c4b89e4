use kwbn::{BnElement, GammaScalar, Twist};
use kwbn_cli::json::{bn_from_json, bn_from_str, bn_to_json};
use num_bigint::BigInt;
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        (-50i64..50).prop_map(BigInt::from),
        // far beyond 64 bits
        proptest::collection::vec(any::<u32>(), 3..6).prop_map(|ds| BigInt::from_slice(num_bigint::Sign::Minus, &ds)),
    ]
}

fn element() -> impl Strategy<Value = BnElement> {
    (any::<bool>(), 0u32..20).prop_flat_map(|(tw, cap)| {
        let twist = if tw { Twist::Twisted } else { Twist::Untwisted };
        let term = (0..=cap, proptest::collection::vec((-4i64..5, coefficient()), 0..4));
        proptest::collection::vec(term, 0..6).prop_map(move |ts| {
            BnElement::from_terms(twist, cap, ts.into_iter().map(|(e, cs)| (e, GammaScalar::from_terms(cs))))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn round_trip(x in element()) {
        let v = bn_to_json(&x);
        prop_assert_eq!(bn_from_json(&v).unwrap(), x.clone());
        prop_assert_eq!(bn_from_str(&v.to_string()).unwrap(), x);
    }
}

#[test]
fn rejects_non_canonical() {
    for bad in [
        r#"{"twist":2,"cap":4,"terms":[]}"#,
        r#"{"twist":0,"cap":4,"terms":[{"e":5,"gamma":[[0,1]]}]}"#,
        r#"{"twist":0,"cap":4,"terms":[{"e":2,"gamma":[[0,1]]},{"e":1,"gamma":[[0,1]]}]}"#,
        r#"{"twist":0,"cap":4,"terms":[{"e":1,"gamma":[[0,0]]}]}"#,
        r#"{"twist":0,"cap":4,"terms":[{"e":1,"gamma":[[0,1.5]]}]}"#,
        r#"{"twist":0,"terms":[]}"#,
        "[1,2",
    ] {
        assert!(bn_from_str(bad).is_err(), "{bad}");
    }
}
