mod common;

use linrec::{LinRecSeq, Poly, RingSpec};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn poly_strategy(ring: RingSpec, max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-50i64..=50, 0..=max_len).prop_map(move |c| Poly::from_i64s(&ring, &c))
}

fn div_case() -> impl Strategy<Value = (Poly, Poly)> {
    common::ring_strategy().prop_flat_map(|r| (poly_strategy(r.clone(), 12), common::monic_strategy(r, 6, 20)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn division_reconstructs((a, f) in div_case()) {
        let (h, r) = a.div_rem_monic(&f).unwrap();
        prop_assert!(r.is_zero() || r.deg() < f.deg());
        prop_assert_eq!(h.mul(&f).unwrap().add(&r).unwrap(), a.clone());
        prop_assert_eq!(a.rem_by_monic(&f).unwrap(), r);
    }

    #[test]
    fn x_power_rem_matches_long_division(f in common::ring_strategy().prop_flat_map(|r| common::monic_strategy(r, 5, 9))) {
        let ring = f.ring().clone();
        let mut by_iteration = Poly::one(&ring).rem_by_monic(&f).unwrap();
        for n in 0..=512u64 {
            if n % 37 == 0 || n < 16 {
                prop_assert_eq!(Poly::x_power_rem(n, &f).unwrap(), Poly::x_pow(&ring, n as usize).rem_by_monic(&f).unwrap());
            }
            prop_assert_eq!(Poly::x_power_rem(n, &f).unwrap(), by_iteration.clone());
            by_iteration = by_iteration.shift_up(1).rem_by_monic(&f).unwrap();
        }
    }

    #[test]
    fn multiplication_is_commutative_and_distributes(
        (a, b, c) in common::ring_strategy().prop_flat_map(|r| (poly_strategy(r.clone(), 6), poly_strategy(r.clone(), 6), poly_strategy(r, 6)))
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        let x = BigInt::from(3);
        let r = a.ring().clone();
        prop_assert_eq!(a.mul(&b).unwrap().eval(&x), r.mul(&a.eval(&x), &b.eval(&x)));
    }

    #[test]
    fn split_annihilates(u in common::any_finite_seq(5, 20)) {
        let f = u.charpoly();
        let s = f.split_x_part().unwrap();
        prop_assert!(s.q.is_monic() && s.q.is_reversible());
        let g = Poly::x_pow(f.ring(), s.d).mul(&s.q).unwrap();
        let shifted = u.shift_action(&g).unwrap();
        prop_assert!(shifted.terms(f.deg() + s.d + 8).iter().all(|v| v[0].is_zero()));
    }

    #[test]
    fn split_over_integers_strips_trailing_zeros(c in prop::collection::vec(-9i64..=9, 1..6), d in 0usize..4) {
        let r = RingSpec::integers();
        let mut coeffs = vec![0; d];
        coeffs.extend(c.iter().copied().filter(|&v| v != 0).chain([1]));
        let f = Poly::from_i64s(&r, &coeffs);
        let s = f.split_x_part().unwrap();
        prop_assert_eq!(s.d, d);
        prop_assert_eq!(Poly::x_pow(&r, d).mul(&s.q).unwrap(), f);
        prop_assert_eq!(s.unit_constant, s.q.constant_term() == BigInt::from(1) || s.q.constant_term() == BigInt::from(-1));
    }

    #[test]
    fn reciprocal_and_negation_involutions(f in common::ring_strategy().prop_flat_map(|r| common::monic_strategy(r, 6, 9))) {
        prop_assert_eq!(f.negate_var().unwrap().negate_var().unwrap(), f.clone());
        if f.is_reversible() {
            let rec = f.reciprocal().unwrap();
            prop_assert!(rec.is_monic() && rec.is_reversible());
            prop_assert_eq!(rec.reciprocal().unwrap(), f.clone());
        } else {
            prop_assert!(f.reciprocal().is_err());
        }
    }

    #[test]
    fn laurent_remainders_invert(q in common::finite_ring_strategy().prop_flat_map(|r| common::monic_strategy(r, 5, 20)), z in 1i64..200) {
        prop_assume!(q.is_reversible());
        let pos = Poly::x_laurent_power_rem(z, &q).unwrap();
        let neg = Poly::x_laurent_power_rem(-z, &q).unwrap();
        let one = pos.mul(&neg).unwrap().rem_by_monic(&q).unwrap();
        prop_assert_eq!(one, Poly::one(q.ring()).rem_by_monic(&q).unwrap());
    }

    #[test]
    fn parse_display_round_trip(f in common::ring_strategy().prop_flat_map(|r| poly_strategy(r, 8))) {
        prop_assert_eq!(Poly::parse(&f.to_string(), f.ring()).unwrap(), f);
    }
}

#[test]
fn negation_annihilates_alternating_sequence() {
    let r = RingSpec::integers();
    let u = LinRecSeq::scalar(Poly::from_i64s(&r, &[-1, 1, -1, 1]), &[0, 1, 2]).unwrap();
    let g = u.charpoly().negate_var().unwrap();
    let alt: Vec<i64> = (0..20)
        .map(|n| {
            let v = i64::try_from(&u.term(n)[0]).unwrap();
            if n % 2 == 0 { v } else { -v }
        })
        .collect();
    let w = LinRecSeq::scalar(g, &alt[..3]).unwrap();
    let got: Vec<i64> = (0..20).map(|n| i64::try_from(&w.term(n)[0]).unwrap()).collect();
    assert_eq!(got, alt);
}
