use proptest::prelude::*;

use yhlink::braid::{parse_braid, BraidWord};
use yhlink::exactnum::LaurentU;
use yhlink::sample::{random_element, rng};
use yhlink::yokonuma::{idempotent_e, power_formula, represent_braid, AlgebraElement, BasisWord};

fn braid(n: usize, len: usize) -> impl Strategy<Value = BraidWord> {
    let gens = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
    proptest::collection::vec(gens, 0..=len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

#[test]
fn basis_has_d_pow_n_times_n_factorial_words() {
    assert_eq!(BasisWord::all(3, 3).len(), 27 * 6);
    assert_eq!(BasisWord::all(2, 4).len(), 16 * 24);
}

#[test]
fn t_slides_through_g() {
    let (d, n) = (3, 3);
    let t1 = AlgebraElement::t(d, n, 1, 1).unwrap();
    let t2 = AlgebraElement::t(d, n, 2, 1).unwrap();
    let g1 = AlgebraElement::g(d, n, 1).unwrap();
    assert_eq!(&t1 * &g1, &g1 * &t2);
    assert_eq!((&t1 * &g1).len(), 1);
}

#[test]
fn e_is_average_of_t_pairs() {
    let (d, n) = (4, 2);
    let mut sum = AlgebraElement::zero(d, n);
    for s in 0..d as i64 {
        let a = AlgebraElement::t(d, n, 1, s).unwrap();
        let b = AlgebraElement::t(d, n, 2, -s).unwrap();
        sum = &sum + &(&a * &b);
    }
    assert_eq!(sum.scale(&LaurentU::from_terms(&[(0, 1, 4)])), idempotent_e(d, n, 1).unwrap());
}

#[test]
fn inverse_letters_cancel() {
    for d in 1..=3 {
        let b = parse_braid("1 -2 3 2 -1").unwrap();
        let a = represent_braid(d, &b).unwrap();
        let ai = represent_braid(d, &b.inverse()).unwrap();
        assert_eq!(&a * &ai, AlgebraElement::one(d, 4));
    }
}

#[test]
fn power_formula_is_multiplicative() {
    for m in -3..=3 {
        for k in -3..=3 {
            let a = power_formula(2, 2, 1, m).unwrap();
            let b = power_formula(2, 2, 1, k).unwrap();
            assert_eq!(&a * &b, power_formula(2, 2, 1, m + k).unwrap());
        }
    }
}

#[test]
fn multiplication_is_associative_on_samples() {
    let mut g = rng(11);
    for _ in 0..30 {
        let a = random_element(&mut g, 3, 3, 3);
        let b = random_element(&mut g, 3, 3, 3);
        let c = random_element(&mut g, 3, 3, 3);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn representation_is_a_homomorphism(x in braid(3, 5), y in braid(3, 5)) {
        let d = 2;
        let xy = represent_braid(d, &x.concat(&y).unwrap()).unwrap();
        prop_assert_eq!(xy, &represent_braid(d, &x).unwrap() * &represent_braid(d, &y).unwrap());
    }

    #[test]
    fn braid_relation_words_agree(k in 0usize..4) {
        let d = k as u32 + 1;
        let lhs = represent_braid(d, &parse_braid("1 2 1").unwrap()).unwrap();
        let rhs = represent_braid(d, &parse_braid("2 1 2").unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
