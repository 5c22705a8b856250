use proptest::prelude::*;

use yhlink::braid::{parse_braid, BraidWord};
use yhlink::esystem::{solution_from_subset, ESolution};
use yhlink::invariant::{delta_invariant, homflypt_skein_check, normalization, skein_check};

fn sol(d: u32, s: &[u32]) -> ESolution {
    solution_from_subset(d, s).unwrap()
}

fn braid(n: usize, len: usize) -> impl Strategy<Value = BraidWord> {
    let gens = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
    proptest::collection::vec(gens, 1..=len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

#[test]
fn unlinks_give_powers_of_normalization() {
    let s = sol(3, &[0, 2]);
    let d = normalization(&s);
    for n in 1..=4 {
        let v = delta_invariant(&s, &BraidWord::identity(n)).unwrap();
        assert_eq!(v, d.pow(n as i32 - 1).unwrap());
    }
}

#[test]
fn split_union_multiplies() {
    let s = sol(2, &[0, 1]);
    let t = delta_invariant(&s, &parse_braid("1 1 1").unwrap()).unwrap();
    let two = delta_invariant(&s, &parse_braid("4: 1 1 1 3 3 3").unwrap()).unwrap();
    let expected = t.checked_mul(&t).unwrap().checked_mul(&normalization(&s)).unwrap();
    assert_eq!(two, expected);
}

#[test]
fn figure_eight_is_amphichiral_at_d1() {
    let s = sol(1, &[0]);
    let a = delta_invariant(&s, &parse_braid("1 -2 1 -2").unwrap()).unwrap();
    let b = delta_invariant(&s, &parse_braid("-1 2 -1 2").unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn subset_symmetry() {
    // S and -S give the same lambda and D, and conjugate x_m values.
    for w in ["1 1 1", "1 -2 1 -2", "1 1 2 -1 2"] {
        let b = parse_braid(w).unwrap();
        let a = delta_invariant(&sol(5, &[1, 2]), &b).unwrap();
        let c = delta_invariant(&sol(5, &[3, 4]), &b).unwrap();
        assert_eq!(a.half(), c.half());
        assert_eq!(a.zeta(), c.zeta());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conjugation_invariance(b in braid(3, 6), w in braid(3, 3)) {
        let s = sol(2, &[0]);
        let c = b.markov_conjugate(&w).unwrap();
        prop_assert_eq!(delta_invariant(&s, &b).unwrap(), delta_invariant(&s, &c).unwrap());
    }

    #[test]
    fn stabilization_invariance(b in braid(3, 6), positive in any::<bool>()) {
        let s = sol(3, &[0, 1]);
        let st = b.markov_stabilize(if positive { 1 } else { -1 }).unwrap();
        prop_assert_eq!(delta_invariant(&s, &b).unwrap(), delta_invariant(&s, &st).unwrap());
    }

    #[test]
    fn skein(b in braid(3, 5), k in 0usize..5) {
        let i = k % b.len();
        prop_assert!(skein_check(&sol(4, &[0, 2]), &b, i).unwrap());
        prop_assert!(homflypt_skein_check(&b, i).unwrap());
    }
}
