use howe_core::characters::{dim_mod_ell_unitary, dim_v_isotypic, dim_w_isotypic, IsotypicLabel};
use howe_core::cyclotomic::CentralCharacter;
use howe_core::howe::{compare_semisimplifications, theta_mod_ell, theta_ordinary};
use proptest::prelude::*;
use proptest::sample::select;

const QS: [u32; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];
const ELLS: [u32; 5] = [3, 5, 7, 11, 13];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn isotypic_parts_add_up(q in select(&QS[..]), n in 2u32..=8) {
        let total_v: u128 = (0..=q)
            .map(|k| dim_v_isotypic(q, n, &CentralCharacter::new(k as i64, q + 1)).unwrap())
            .sum();
        prop_assert_eq!(total_v, (q as u128).pow(n));
        let total_w: u128 = IsotypicLabel::all(q)
            .iter()
            .map(|l| dim_w_isotypic(q, n, l).unwrap())
            .sum();
        prop_assert_eq!(total_w, (q as u128).pow(2 * n));
    }

    #[test]
    fn mod_ell_dims_never_drop(q in select(&QS[..]), ell in select(&ELLS[..]), n in 2u32..=8) {
        prop_assume!(q % ell != 0);
        for k in 0..=q {
            let chi = CentralCharacter::new(k as i64, q + 1);
            let ordinary = dim_v_isotypic(q, n, &chi).unwrap();
            let reduced = dim_mod_ell_unitary(q, n, &chi, ell).unwrap();
            prop_assert!(reduced >= ordinary && reduced <= ordinary + 1);
            if (q + 1) % ell != 0 {
                prop_assert_eq!(reduced, ordinary);
            }
        }
    }

    #[test]
    fn theta_tables_are_consistent(q in select(&QS[..]), ell in select(&ELLS[..]), n in 2u32..=5) {
        prop_assume!(q % ell != 0);
        prop_assert!(theta_ordinary(n, q).unwrap().passed());
        prop_assert!(theta_mod_ell(n, q, ell).unwrap().passed());
        let report = compare_semisimplifications(n, q, ell).unwrap();
        prop_assert!(report.checks.iter().all(|c| c.pass));
        for row in &report.rows {
            prop_assert_eq!(row.deficit > 0, row.exceptional);
        }
    }
}
