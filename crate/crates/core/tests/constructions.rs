use octal_gbent::classify::{is_bent, is_gbent_direct};
use octal_gbent::construct::{
    build_one_var, build_two_var_signed, check_one_var, check_two_var_signed, find_twisted_triple_exhaustive,
    find_twisted_triple_mm, mm_bent, random_mm_bent,
};
use octal_gbent::function::BooleanFunction;
use octal_gbent::random::seeded;
use octal_gbent::{Epsilon, Kind};

fn all_two_var() -> Vec<BooleanFunction> {
    (0..16).map(|t| BooleanFunction::from_u64(2, t).unwrap()).collect()
}

fn bent(f: &BooleanFunction) -> bool {
    is_bent(f).unwrap()
}

#[test]
fn full_and_plain_variants_are_biconditionals_on_two_variables() {
    let fs = all_two_var();
    for a in &fs {
        for c in &fs {
            for e in [Epsilon::Plus, Epsilon::Minus] {
                let full = is_gbent_direct(&build_one_var(Kind::OneVarFull, a, c, e).unwrap()).is_gbent();
                assert_eq!(full, bent(a) && bent(c), "a={a} c={c}");
                assert_eq!(check_one_var(Kind::OneVarFull, a, c).is_ok(), full);

                let plain = is_gbent_direct(&build_one_var(Kind::OneVarPlain, a, c, e).unwrap()).is_gbent();
                assert_eq!(plain, bent(c) && bent(&a.xor(c).unwrap()), "a={a} c={c}");
                assert_eq!(check_one_var(Kind::OneVarPlain, a, c).is_ok(), plain);
            }
        }
    }
}

#[test]
fn half_variant_never_gbent_under_its_bentness_hypotheses() {
    let mut rng = seeded(8);
    let mut seen = 0;
    for _ in 0..3000 {
        let a = random_mm_bent(4, &mut rng).unwrap();
        let c = random_mm_bent(4, &mut rng).unwrap();
        if !bent(&a.xor(&c).unwrap()) {
            continue;
        }
        seen += 1;
        for e in [Epsilon::Plus, Epsilon::Minus] {
            assert!(!is_gbent_direct(&build_one_var(Kind::OneVarHalf, &a, &c, e).unwrap()).is_gbent());
        }
        assert!(check_one_var(Kind::OneVarHalf, &a, &c).is_err());
    }
    assert!(seen > 0);
}

#[test]
fn signed_with_equal_affine_ingredients() {
    for n in [2u32, 4] {
        let mut rng = seeded(u64::from(n));
        let c = random_mm_bent(n, &mut rng).unwrap();
        for u in 0..1usize << n {
            for k in [false, true] {
                let a = BooleanFunction::linear(n, u, k).unwrap();
                let plus = build_two_var_signed(&a, &a, &c, Epsilon::Plus).unwrap();
                assert!(is_gbent_direct(&plus).is_gbent());
                assert!(check_two_var_signed(&a, &a, &c, Epsilon::Plus).is_ok());
                let minus = build_two_var_signed(&a, &a, &c, Epsilon::Minus).unwrap();
                assert!(!is_gbent_direct(&minus).is_gbent());
                assert!(check_two_var_signed(&a, &a, &c, Epsilon::Minus).is_err());
            }
        }
    }
}

#[test]
fn no_twisted_triples_on_four_variables() {
    let out = find_twisted_triple_exhaustive(4).unwrap();
    assert_eq!(out.triple, None);
    assert_eq!(out.examined, 896u64.pow(3));
    assert_eq!(out.near_misses, 66_060_288);
    let mm = find_twisted_triple_mm(4, 500, &mut seeded(1)).unwrap();
    assert_eq!(mm.triple, None);
}

#[test]
fn maiorana_mcfarland_functions_are_bent() {
    let mut rng = seeded(4);
    for n in [2u32, 4, 6, 8] {
        for _ in 0..5 {
            assert!(bent(&random_mm_bent(n, &mut rng).unwrap()));
        }
    }
    let g = BooleanFunction::zero(1).unwrap();
    assert_eq!(mm_bent(&[1, 0], &g).unwrap().to_string(), "0100");
}
