use proptest::prelude::*;

use hurwitz_core::algebra::{rat, residue, series_expand, MobiusMap, Polynomial, Rational, RationalFunction};
use hurwitz_core::cutjoin::{cutjoin_hurwitz, HurwitzTable};
use hurwitz_core::partition::{partitions, PartitionTuple};
use hurwitz_core::perm::{census, oracle_hurwitz, Ordering};

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| Polynomial::from_ints(&c))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RationalFunction::new(n, d).ok())
}

fn center() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=3).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn expand(f: &RationalFunction, c: &Rational, hi: i64) -> hurwitz_core::algebra::LaurentSeries {
    let lo = f.valuation(c).unwrap_or(0).min(-1);
    series_expand(f, c, (lo, hi)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_is_multiplicative(f in ratfunc(), g in ratfunc(), c in center()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let hi = 6;
        let fg = &f * &g;
        let lhs = expand(&fg, &c, hi);
        let rhs = expand(&f, &c, hi + 8).mul(&expand(&g, &c, hi + 8)).unwrap();
        for j in lhs.valid_lo()..=hi {
            prop_assert_eq!(lhs.coeff(j).unwrap(), rhs.coeff(j).unwrap(), "exponent {}", j);
        }
    }

    #[test]
    fn exact_differentials_have_no_residue(f in ratfunc(), c in center()) {
        let df = f.derivative();
        prop_assume!(!df.is_zero());
        prop_assert_eq!(residue(&expand(&df, &c, 2)).unwrap(), rat(0));
    }

    #[test]
    fn deck_maps_square_to_identity(f in ratfunc(), z in center()) {
        for m in [MobiusMap::monotone_involution(), MobiusMap::negation()] {
            if let Some(w) = m.apply(&z) {
                prop_assert_eq!(m.apply(&w), Some(z.clone()));
            }
            prop_assert_eq!(f.compose_mobius(&m).compose_mobius(&m), f.clone());
        }
    }

    #[test]
    fn oracle_ignores_part_order(parts in prop::collection::vec(1u32..=3, 1..=3), g in 0u32..=1, seed in any::<u64>()) {
        prop_assume!(parts.iter().sum::<u32>() <= 5);
        let mut shuffled = parts.clone();
        shuffled.rotate_left((seed % parts.len() as u64) as usize);
        let a = oracle_hurwitz(g, &PartitionTuple::new(parts.clone()));
        let b = oracle_hurwitz(g, &PartitionTuple::new(shuffled.clone()));
        prop_assert_eq!(&a, &b);
        let table = HurwitzTable::new();
        prop_assert_eq!(cutjoin_hurwitz(g, &PartitionTuple::new(shuffled), &table), a);
    }

    #[test]
    fn census_splits_by_cycle_type(d in 1usize..=5, m in 0usize..=6) {
        let c = census(d, m, Ordering::Monotone);
        for transitive in [false, true] {
            let by_type: u64 = partitions(d as u32)
                .into_iter()
                .map(|p| c.count(transitive, Some(&PartitionTuple::new(p))))
                .sum();
            prop_assert_eq!(by_type, c.count(transitive, None));
        }
    }
}
