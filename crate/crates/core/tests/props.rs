//! Property tests for the exact layers: ring axioms of the polynomial
//! arithmetic, the evaluation homomorphism, and the series-transform
//! identities in numeric (rational) mode.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use meanforge_core::arith::{rational, Poly, Rational, SymbolTable};
use meanforge_core::series::PlainSeries;
use meanforge_core::{MeanSeries, SymbolId};

fn table() -> &'static Arc<SymbolTable> {
    static TABLE: OnceLock<Arc<SymbolTable>> = OnceLock::new();
    TABLE.get_or_init(|| SymbolTable::new(["x", "y", "z"]).unwrap())
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rational(n, d))
}

prop_compose! {
    fn arb_poly()(terms in prop::collection::vec(((0u32..=2, 0u32..=2, 0u32..=2), -9i64..=9), 0..5)) -> Poly {
        let t = table();
        let ids: Vec<SymbolId> = t.symbols().collect();
        let mut p = Poly::zero(t);
        for ((ex, ey, ez), coeff) in terms {
            let mono = Poly::symbol_pow(t, ids[0], ex)
                .checked_mul(&Poly::symbol_pow(t, ids[1], ey)).unwrap()
                .checked_mul(&Poly::symbol_pow(t, ids[2], ez)).unwrap();
            p = p.checked_add(&mono.scale(&rational(coeff, 1))).unwrap();
        }
        p
    }
}

fn assignment(vals: &[Rational; 3]) -> HashMap<SymbolId, Rational> {
    table().symbols().zip(vals.iter().cloned()).collect()
}

proptest! {
    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        let assoc_l = p.checked_add(&q).unwrap().checked_add(&r).unwrap();
        let assoc_r = p.checked_add(&q.checked_add(&r).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);

        let dist_l = p.checked_mul(&q.checked_add(&r).unwrap()).unwrap();
        let dist_r = p.checked_mul(&q).unwrap().checked_add(&p.checked_mul(&r).unwrap()).unwrap();
        prop_assert_eq!(dist_l, dist_r);

        prop_assert_eq!(p.checked_mul(&q).unwrap(), q.checked_mul(&p).unwrap());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(), q in arb_poly()) {
        prop_assume!(!q.is_zero());
        let product = p.checked_mul(&q).unwrap();
        prop_assert_eq!(product.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in arb_poly(),
        q in arb_poly(),
        vals in [arb_rational(), arb_rational(), arb_rational()],
    ) {
        let at = assignment(&vals);
        let lhs = p.checked_mul(&q).unwrap().eval(&at).unwrap();
        let rhs = p.eval(&at).unwrap() * q.eval(&at).unwrap();
        prop_assert_eq!(lhs, rhs);

        let lhs = p.checked_add(&q).unwrap().eval(&at).unwrap();
        let rhs = p.eval(&at).unwrap() + q.eval(&at).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_canonical_form(a in arb_rational(), b in arb_rational()) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{Signed, Zero};
        for v in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(v.denom() > &BigInt::zero());
            if !v.is_zero() {
                prop_assert_eq!(v.numer().abs().gcd(&v.denom().abs()), BigInt::from(1));
            } else {
                prop_assert_eq!(v.denom(), &BigInt::from(1));
            }
        }
    }
}

prop_compose! {
    fn arb_unit_series(max_order: usize)(tail in prop::collection::vec((-9i64..=9, 1i64..=6), 1..=max_order)) -> PlainSeries<Rational> {
        let mut coeffs = vec![rational(1, 1)];
        coeffs.extend(tail.into_iter().map(|(n, d)| rational(n, d)));
        PlainSeries::new(coeffs)
    }
}

proptest! {
    #[test]
    fn quotient_inverts_product(f in arb_unit_series(8), g in arb_unit_series(8)) {
        let order = f.order().min(g.order());
        let q = f.quotient(&g, order).unwrap();
        let back = q.mul(&g, order).unwrap();
        prop_assert_eq!(back.coeffs(), &f.coeffs()[..=order]);
    }

    #[test]
    fn power_exponents_add(s in arb_unit_series(6), r1 in -3i64..=3, r2 in -3i64..=3) {
        let order = s.order();
        let (r1, r2) = (rational(r1, 1), rational(r2, 1));
        let lhs = s.power(&r1, order).unwrap().mul(&s.power(&r2, order).unwrap(), order).unwrap();
        let rhs = s.power(&(&r1 + &r2), order).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zeroth_power_is_unit(s in arb_unit_series(6)) {
        let p = s.power(&rational(0, 1), s.order()).unwrap();
        prop_assert!(p.coeff(0).eq(&rational(1, 1)));
        prop_assert!(p.coeffs()[1..].iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn mean_series_json_round_trip(tail in prop::collection::vec((-99i64..=99, 1i64..=40), 0..7)) {
        let mut coeffs = vec![rational(1, 1)];
        coeffs.extend(tail.into_iter().map(|(n, d)| rational(n, d)));
        let series = MeanSeries::new(coeffs).unwrap();
        let back = MeanSeries::from_json(&series.json()).unwrap();
        prop_assert_eq!(back, series);
    }
}
