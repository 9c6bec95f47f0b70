//! Randomized invariants complementing the exhaustive acceptance sweep.

use proptest::prelude::*;

use vactab::di_map::{di_forward, di_inverse, limiting_vt, IntegerSequence};
use vactab::vacillating::{validate_limiting, validate_n_vacillating};

fn arb_seq(max_entry: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=max_entry, 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn di_roundtrips(values in arb_seq(9, 5), extra in 0usize..4) {
        let s = IntegerSequence::new(values.clone()).unwrap();
        let n = s.max().max(1) as usize + extra;
        let img = di_forward(&s, n).unwrap();
        prop_assert!(validate_n_vacillating(img.vt.steps(), n).is_ok());
        prop_assert_eq!(di_inverse(&img, n).unwrap(), s);
    }

    #[test]
    fn limiting_is_limiting_and_stable(values in arb_seq(7, 5)) {
        let s = IntegerSequence::new(values).unwrap();
        let v = limiting_vt(&s);
        prop_assert!(validate_limiting(v.steps()).is_ok());
        // one size past the certified alphabet gives the same answer
        let n = s.max().max(1) as usize + 2 * s.len() + 2;
        let again = di_forward(&s, n).unwrap().vt.simplify().unwrap();
        prop_assert_eq!(again, v);
    }

    #[test]
    fn image_serde_roundtrips(values in arb_seq(6, 4)) {
        let s = IntegerSequence::new(values).unwrap();
        let n = s.max().max(1) as usize + 1;
        let img = di_forward(&s, n).unwrap();
        let json = serde_json::to_string(&img).unwrap();
        let back: vactab::DiImage = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, img);
    }
}
