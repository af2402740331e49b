use num_traits::Zero;
use proptest::prelude::*;

use podium_core::{pochhammer, BigInt, Modulus, Series, Sign};

const MAX_ORDER: usize = 64;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

fn series_of(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-1_000_000i64..=1_000_000, order + 1).prop_map(Series::from_coeffs)
}

fn unit_series_of(order: usize) -> impl Strategy<Value = Series> {
    (series_of(order), prop::bool::ANY).prop_map(|(s, neg)| {
        let mut c = s.into_coeffs();
        c[0] = BigInt::from(if neg { -1 } else { 1 });
        Series::from_coeffs(c)
    })
}

fn pair() -> impl Strategy<Value = (Series, Series)> {
    (0..=MAX_ORDER).prop_flat_map(|n| (series_of(n), series_of(n)))
}

fn triple() -> impl Strategy<Value = (Series, Series, Series)> {
    (0..=MAX_ORDER).prop_flat_map(|n| (series_of(n), series_of(n), series_of(n)))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

/// Schoolbook product without any of the library's shortcuts.
fn naive_mul(a: &Series, b: &Series) -> Vec<BigInt> {
    let n = a.order().min(b.order());
    (0..=n)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, i| {
                acc + a.coeff(i).unwrap() * b.coeff(k - i).unwrap()
            })
        })
        .collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn product_matches_schoolbook((a, b) in pair()) {
        prop_assert_eq!(a.mul(&b).into_coeffs(), naive_mul(&a, &b));
    }

    #[test]
    fn multiplication_commutes((a, b) in pair()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_associates((a, b, c) in triple()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes((a, b, c) in triple()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn addition_inverse((a, b) in pair()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert!(a.add(&a.negate()).is_zero());
    }

    #[test]
    fn inverse_is_two_sided(a in (0..=MAX_ORDER).prop_flat_map(unit_series_of)) {
        let inv = a.inverse().unwrap();
        let one = Series::one(a.order());
        prop_assert_eq!(a.mul(&inv), one.clone());
        prop_assert_eq!(inv.mul(&a), one);
        prop_assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn negative_power_is_inverse_power(a in (0..=24usize).prop_flat_map(unit_series_of), k in 0i64..5) {
        let pos = a.power(k).unwrap();
        let neg = a.power(-k).unwrap();
        prop_assert_eq!(pos.mul(&neg), Series::one(a.order()));
    }

    #[test]
    fn substitution_spreads_coefficients(a in (0..=MAX_ORDER).prop_flat_map(series_of), k in 1usize..=6, s in sign()) {
        let b = a.substitute(k, s);
        prop_assert_eq!(b.order(), a.order());
        for n in 0..=a.order() {
            let c = b.coeff(n).unwrap();
            if n % k == 0 {
                let m = n / k;
                let mut want = a.coeff(m).unwrap().clone();
                if s == Sign::Minus && m % 2 == 1 {
                    want = -want;
                }
                prop_assert_eq!(c, &want);
            } else {
                prop_assert!(c.is_zero());
            }
        }
    }

    #[test]
    fn substitution_is_a_ring_map((a, b) in pair(), k in 1usize..=4, s in sign()) {
        prop_assert_eq!(a.mul(&b).substitute(k, s), a.substitute(k, s).mul(&b.substitute(k, s)));
    }

    #[test]
    fn pochhammer_truncations_agree(a in 1usize..=8, b in 1usize..=8, s in sign(), n in 0..=MAX_ORDER, m in 0..=MAX_ORDER) {
        let (lo, hi) = (n.min(m), n.max(m));
        prop_assert_eq!(pochhammer(s, a, b, hi).truncate(lo), pochhammer(s, a, b, lo));
    }

    #[test]
    fn pochhammer_matches_factor_product(a in 1usize..=8, b in 1usize..=8, s in sign(), n in 0..=MAX_ORDER) {
        let mut acc = Series::one(n);
        let mut e = a;
        while e <= n {
            let c = if s == Sign::Minus { 1 } else { -1 };
            acc = acc.mul(&Series::one(n).add(&Series::monomial(e, c, n)));
            e += b;
        }
        prop_assert_eq!(pochhammer(s, a, b, n), acc);
    }

    #[test]
    fn reduction_commutes_with_product((a, b) in pair(), m in 2i64..50) {
        let m = Modulus::new(BigInt::from(m)).unwrap();
        let lhs = a.mul(&b).reduce_mod(&m);
        let rhs = a.reduce_mod(&m).mul(&b.reduce_mod(&m)).reduce_mod(&m);
        prop_assert_eq!(lhs, rhs);
    }
}
