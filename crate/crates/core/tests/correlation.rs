use octal_gbent::classify::is_bent;
use octal_gbent::correlation::{
    autocorr_bool, bent_by_autocorr, bool_corr_identity_check, corr_identity_check, gbent_by_autocorr,
};
use octal_gbent::function::{BooleanFunction, OctalFunction};
use octal_gbent::sweep::octal_function_at;
use octal_gbent::is_gbent_direct;
use proptest::prelude::*;

fn octal_pair() -> impl Strategy<Value = (OctalFunction, OctalFunction)> {
    (1u32..=5).prop_flat_map(|n| {
        let f = prop::collection::vec(0u8..8, 1 << n);
        (f.clone(), f).prop_map(move |(a, b)| {
            (
                OctalFunction::from_octal_values(n, &a).unwrap(),
                OctalFunction::from_octal_values(n, &b).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn generalized_identities_hold((f, g) in octal_pair()) {
        let r = corr_identity_check(&f, &g).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
    }
}

#[test]
fn gbent_iff_delta_autocorrelation_on_all_of_gb2() {
    let mut gbent = 0;
    for k in 0..4096 {
        let f = octal_function_at(2, k);
        let direct = is_gbent_direct(&f).is_gbent();
        assert_eq!(gbent_by_autocorr(&f), direct, "{f}");
        gbent += u32::from(direct);
    }
    assert_eq!(gbent, 320);
}

#[test]
fn boolean_identities_and_bentness_on_small_spaces() {
    for n in [2u32, 4] {
        let len = 1u64 << n;
        let step = if n == 2 { 1 } else { 37 };
        for t in (0..1u64 << len).step_by(step) {
            let f = BooleanFunction::from_u64(n, t).unwrap();
            assert_eq!(bent_by_autocorr(&f), is_bent(&f).unwrap(), "{f}");
            let g = BooleanFunction::from_u64(n, t.rotate_left(3) & ((1 << len) - 1)).unwrap();
            assert!(bool_corr_identity_check(&f, &g).unwrap().passed());
        }
    }
}

#[test]
fn autocorrelation_at_zero_is_the_length() {
    let f: BooleanFunction = "01101001".parse().unwrap();
    assert_eq!(autocorr_bool(&f)[0], 8);
}
