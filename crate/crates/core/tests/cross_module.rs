use proptest::prelude::*;

use progsums::exact::{big, binomial, int, integer_power};
use progsums::powersum::{ps_direct, PowerSumQuery};
use progsums::symfunc::{complete_h, elementary_sigma, Alphabet};
use progsums::{family_triangle, ExactRational, Family, ProgressionParams};

fn params() -> impl Strategy<Value = ProgressionParams> {
    (1u32..=4, 0u32..=4).prop_filter("a <= d", |(d, a)| a <= d).prop_map(|(d, a)| ProgressionParams::new(d, a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn binomial_splitting(q in params(), n in 0usize..=8, m in 0usize..=12) {
        let (d, a): (ExactRational, ExactRational) = (q.d_scalar(), q.a_scalar());
        let split = (0..=n).fold(int(0), |acc, k| {
            acc + big(binomial(n, k)) * integer_power(&a, n - k) * integer_power(&d, k)
                * ps_direct(PowerSumQuery::new(ProgressionParams::ordinary(), k, m))
        });
        prop_assert_eq!(ps_direct(PowerSumQuery::new(q, n, m)), split);
    }

    #[test]
    fn lah_is_the_product_of_the_scaled_stirling_triangles(q in params(), size in 0usize..=10) {
        let s1 = family_triangle(Family::S1pHat, q, size).unwrap();
        let s2 = family_triangle(Family::S2Hat, q, size).unwrap();
        let lah = family_triangle(Family::Lah, q, size).unwrap();
        prop_assert!(s1.multiply(&s2).unwrap().same_entries(&lah));
        prop_assert!(lah.all_integer());
    }

    #[test]
    fn triangle_entries_are_symmetric_functions(q in params(), n in 0usize..=9) {
        let s2 = family_triangle(Family::S2Hat, q, n).unwrap();
        let s1 = family_triangle(Family::S1pHat, q, n).unwrap();
        for m in 0..=n {
            prop_assert_eq!(s2.get(n, m), complete_h(&Alphabet::progression(q, m + 1), n - m));
            prop_assert_eq!(s1.get(n, m), elementary_sigma(&Alphabet::progression(q, n), n - m).unwrap());
        }
    }
}
