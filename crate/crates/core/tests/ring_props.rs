mod common;

use linrec::RingSpec;
use num_bigint::BigInt;
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = (RingSpec, i64, i64, i64)> {
    (common::ring_strategy(), any::<i64>(), any::<i64>(), any::<i64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_axioms((r, a, b, c) in triple()) {
        let (a, b, c) = (r.from_i64(a), r.from_i64(b), r.from_i64(c));
        prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.add(&a, &r.neg(&a)), r.zero());
        prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
        prop_assert_eq!(r.sub(&a, &b), r.add(&a, &r.neg(&b)));
    }

    #[test]
    fn canonical_form((r, a, b, _c) in triple()) {
        let (a, b) = (r.from_i64(a), r.from_i64(b));
        if let Some(m) = r.modulus() {
            for v in [r.add(&a, &b), r.sub(&a, &b), r.mul(&a, &b), r.neg(&a)] {
                prop_assert!(v >= BigInt::from(0) && &v < m);
            }
        }
    }

    #[test]
    fn element_wrapper_matches_ring((r, a, b, _c) in triple()) {
        let (x, y) = (r.elem(a), r.elem(b));
        prop_assert_eq!(x.add(&y).unwrap().into_value(), r.add(&r.from_i64(a), &r.from_i64(b)));
        prop_assert_eq!(x.mul(&y).unwrap().into_value(), r.mul(&r.from_i64(a), &r.from_i64(b)));
        if x.is_unit() {
            prop_assert_eq!(x.mul(&x.inv_unit().unwrap()).unwrap().into_value(), r.one());
        } else {
            prop_assert!(x.inv_unit().is_err());
        }
    }

    #[test]
    fn factorization_multiplies_back(m in 2u64..2_000_000) {
        let r = RingSpec::modulo(m).unwrap();
        let parts = r.factor_modulus().unwrap();
        let mut prod = BigInt::from(1);
        for (p, e) in &parts {
            let p64 = u64::try_from(p).unwrap();
            prop_assert!(p64 >= 2 && (2..p64).take_while(|d| d * d <= p64).all(|d| p64 % d != 0));
            prod *= p.pow(*e);
        }
        prop_assert_eq!(prod, BigInt::from(m));
        prop_assert!(parts.windows(2).all(|w| w[0].0 < w[1].0));
    }
}
