use proptest::prelude::*;
use rug::Rational;

use outerplanar::series::{PowerSeries, Series};

fn series(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-20i64..=20, 1u64..=6), order + 1)
        .prop_map(|v| Series::from_coeffs(v.into_iter().map(|(n, d)| Rational::from((n, d))).collect()))
}

fn unit_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    series(order).prop_map(|mut s| {
        s.set_coeff(0, Rational::from(1));
        s
    })
}

fn nonconstant(order: usize) -> impl Strategy<Value = PowerSeries> {
    series(order).prop_map(|mut s| {
        s.set_coeff(0, Rational::new());
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_identities(a in series(8), b in series(8), c in series(8)) {
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.checked_mul(&a).unwrap());
        prop_assert_eq!(ab.checked_mul(&c).unwrap(), a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap());
        let left = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let right = ab.checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(a.checked_sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.checked_mul(&PowerSeries::one(8)).unwrap(), a);
    }

    #[test]
    fn reciprocal_and_exact_division(u in unit_series(9), a in series(9)) {
        let r = u.recip().unwrap();
        prop_assert_eq!(u.checked_mul(&r).unwrap(), PowerSeries::one(9));
        let prod = a.checked_mul(&u).unwrap();
        prop_assert_eq!(prod.div_exact(&u).unwrap(), a);
    }

    #[test]
    fn division_by_shifted_divisor(u in unit_series(9), a in series(9), k in 1usize..4) {
        // (a x^k u) / (x^k u) drops k orders of precision.
        let b = u.shift_up(k);
        let num = a.checked_mul(&b).unwrap();
        let q = num.div_exact(&b).unwrap();
        prop_assert_eq!(q.order(), 9 - k);
        prop_assert_eq!(q, a.truncate(9 - k));
    }

    #[test]
    fn square_root_squares_back(u in unit_series(10)) {
        let r = u.sqrt1().unwrap();
        prop_assert_eq!(r.checked_mul(&r).unwrap(), u);
    }

    #[test]
    fn exp_and_log_are_inverse(u in unit_series(8), f in nonconstant(8)) {
        prop_assert_eq!(u.log1().unwrap().exp0().unwrap(), u);
        prop_assert_eq!(f.exp0().unwrap().log1().unwrap(), f);
    }

    #[test]
    fn log_turns_products_into_sums(u in unit_series(8), v in unit_series(8)) {
        let lhs = u.checked_mul(&v).unwrap().log1().unwrap();
        let rhs = u.log1().unwrap().checked_add(&v.log1().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncation_commutes_with_operations(a in series(12), b in series(12), k in 0usize..=12) {
        prop_assert_eq!(a.checked_mul(&b).unwrap().truncate(k), a.truncate(k).checked_mul(&b.truncate(k)).unwrap());
        prop_assert_eq!(a.checked_add(&b).unwrap().truncate(k), a.truncate(k).checked_add(&b.truncate(k)).unwrap());
        prop_assert_eq!(a.truncate(k).truncate(20).order(), k);
    }

    #[test]
    fn substitution_is_a_ring_map(a in series(12), b in series(12), k in 1usize..4) {
        let lhs = a.checked_mul(&b).unwrap().substitute_power(k);
        let rhs = a.substitute_power(k).checked_mul(&b.substitute_power(k)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_associative(a in series(7), f in nonconstant(7), g in nonconstant(7)) {
        let lhs = PowerSeries::compose(&PowerSeries::compose(&a, &f).unwrap(), &g).unwrap();
        let rhs = PowerSeries::compose(&a, &PowerSeries::compose(&f, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiset_exp_is_multiplicative(f in nonconstant(8), g in nonconstant(8)) {
        let lhs = f.checked_add(&g).unwrap().multiset_exp().unwrap();
        let rhs = f.multiset_exp().unwrap().checked_mul(&g.multiset_exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_obeys_leibniz(a in series(9), b in series(9)) {
        // The derivative of an order-9 series is known through x^8.
        let d = |s: &PowerSeries| s.derivative().truncate(8);
        let lhs = d(&a.checked_mul(&b).unwrap());
        let rhs = d(&a).checked_mul(&b.truncate(8)).unwrap()
            .checked_add(&a.truncate(8).checked_mul(&d(&b)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn mismatched_orders_are_rejected() {
    let a = PowerSeries::x(3);
    let b = PowerSeries::x(5);
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_mul(&b).is_err());
    assert!(a.checked_sub(&b).is_err());
}

#[test]
fn multiset_of_a_point_counts_integer_sequences() {
    // MSET(x + x^2) counts partitions into parts 1 and 2.
    let f = PowerSeries::from_ints(8, &[0, 1, 1]);
    let g = f.multiset_exp().unwrap();
    let want: Vec<i64> = (0..=8).map(|n| n / 2 + 1).collect();
    assert_eq!(g, PowerSeries::from_ints(8, &want));
}
