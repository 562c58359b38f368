mod common;

use proptest::prelude::*;
use pwlab_core::chevrep::restrict_to_levi;
use pwlab_core::coordring::{
    check_ideal_property, check_multiplication, graded_component, phi_check, psi_check, Side,
};
use pwlab_core::peterson::{find_general_translate, GroupWord};
use pwlab_core::principal::regular_element;
use pwlab_core::rootdata::TypeLetter;
use pwlab_core::{Error, Lab};

use common::{dominant_below_by_box, sl_centralizer_entry_span, WeightOracle};

#[test]
fn oracle_spans_for_sl2_and_sl3() {
    assert_eq!((1..=3).map(|n| sl_centralizer_entry_span(2, n)).collect::<Vec<_>>(), [3, 5, 7]);
    assert_eq!(sl_centralizer_entry_span(3, 1), 7);
}

#[test]
fn wonderful_component_dimensions() {
    let lab = Lab::new(TypeLetter::A, 2).unwrap();
    let oracle = WeightOracle::new('A', 2);
    for n in 0..=2 {
        let lam = [n, n];
        let want: u64 = dominant_below_by_box(&oracle.cartan, &lam, 2 * n + 2)
            .iter()
            .map(|mu| oracle.weyl_dimension(mu).pow(2))
            .sum();
        let c = graded_component(&lab, &lab.root_system().weight(vec![1, 1]), n, Side::Wonderful).unwrap();
        assert_eq!(c.dim as u64, want);
        let f = graded_component(&lab, &lab.root_system().weight(vec![1, 1]), n, Side::Flag).unwrap();
        assert_eq!(f.dim as u64, oracle.weyl_dimension(&lam));
    }
}

#[test]
fn a1_phi_degrees_one_to_three() {
    let lab = Lab::new(TypeLetter::A, 1).unwrap();
    let lam = lab.lambda_from_root_coords(&[1]).unwrap();
    for n in 1..=3 {
        let r = phi_check(&lab, &lam, n).unwrap();
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.flag_quotient, 2 * n as usize + 1);
        assert_eq!(r.wonderful_quotient, sl_centralizer_entry_span(2, n as usize));
    }
}

#[test]
fn a2_phi_degree_one() {
    let lab = Lab::new(TypeLetter::A, 2).unwrap();
    let lam = lab.lambda_from_root_coords(&[1, 1]).unwrap();
    let r = phi_check(&lab, &lam, 1).unwrap();
    assert!(r.passes() && r.injective && r.surjective);
    assert_eq!(r.flag_quotient, sl_centralizer_entry_span(3, 1));
    assert_eq!(r.wonderful_quotient, r.flag_quotient);
}

#[test]
fn a2_phi_degree_two() {
    let lab = Lab::new(TypeLetter::A, 2).unwrap();
    let lam = lab.lambda_from_root_coords(&[1, 1]).unwrap();
    let r = phi_check(&lab, &lam, 2).unwrap();
    assert!(r.passes());
    assert_eq!(r.flag_quotient, sl_centralizer_entry_span(3, 2));
}

#[test]
fn b2_phi_degree_one() {
    let lab = Lab::new(TypeLetter::B, 2).unwrap();
    // ω1 + 2ω2, the smallest regular weight in the root lattice
    let lam = lab.lambda_from_root_coords(&[2, 3]).unwrap();
    assert_eq!(lam.coords, vec![1, 2]);
    assert!(phi_check(&lab, &lam, 1).unwrap().passes());
}

#[test]
fn lambda_validation() {
    let lab = Lab::new(TypeLetter::A, 3).unwrap();
    let e = lab.lambda_from_root_coords(&[1, 0, 1]).unwrap_err();
    assert!(matches!(e, Error::InvalidWeight { .. }));
    assert!(e.to_string().contains("regular"));
    let a2 = Lab::new(TypeLetter::A, 2).unwrap();
    // ω1 is outside the root lattice
    assert!(a2.check_lambda(&a2.root_system().weight(vec![1, 0])).is_err());
}

fn psi(letter: TypeLetter, rank: usize, lam: &[i64], subset: &[usize], n: i64) -> pwlab_core::coordring::IsoReport {
    let lab = Lab::new(letter, rank).unwrap();
    let (g, rs) = (lab.algebra(), lab.root_system());
    let w = lab.lambda_from_root_coords(lam).unwrap();
    let re = regular_element(g, subset, None).unwrap();
    let v = lab.rep(&w).unwrap();
    let blocks = restrict_to_levi(rs, &v, &re.subset);
    let h = find_general_translate(g, &v, &blocks, 0, 200).unwrap();
    psi_check(&lab, &w, n, &re, &h).unwrap()
}

#[test]
fn a2_general_degree_one() {
    let r = psi(TypeLetter::A, 2, &[1, 1], &[0], 1);
    assert!(r.passes(), "{r:?}");
    assert_eq!(r.flag_quotient, 7);
}

#[test]
fn a1_torus_case() {
    for n in 1..=2 {
        let r = psi(TypeLetter::A, 1, &[1], &[], n);
        assert!(r.passes(), "{r:?}");
        assert_eq!(r.flag_quotient, 2 * n as usize + 1);
    }
}

#[test]
fn full_subset_recovers_principal_dimensions() {
    let r = psi(TypeLetter::A, 2, &[1, 1], &[0, 1], 1);
    assert!(r.passes());
    assert_eq!(r.flag_quotient, 7);
}

#[test]
fn psi_rejects_a_special_translate() {
    let lab = Lab::new(TypeLetter::A, 2).unwrap();
    let w = lab.lambda_from_root_coords(&[1, 1]).unwrap();
    let re = regular_element(lab.algebra(), &[0], None).unwrap();
    let e = psi_check(&lab, &w, 1, &re, &GroupWord::identity(0)).unwrap_err();
    assert!(matches!(e, Error::Precondition(_)));
}

#[test]
fn multiplication_law() {
    for (t, l, pairs) in [
        (TypeLetter::A, 1, vec![(vec![1], vec![1]), (vec![2], vec![2]), (vec![0], vec![2])]),
        (TypeLetter::A, 2, vec![(vec![1, 0], vec![0, 1]), (vec![1, 1], vec![1, 1])]),
    ] {
        let lab = Lab::new(t, l).unwrap();
        let rs = lab.root_system();
        for (a, b) in pairs {
            let r = check_multiplication(&lab, &rs.weight(a), &rs.weight(b), 20, 7).unwrap();
            assert!(r.passes(), "{r:?}");
            assert!(r.sampled_words >= 20);
        }
    }
}

#[test]
fn ideal_property_a2() {
    let lab = Lab::new(TypeLetter::A, 2).unwrap();
    let r = check_ideal_property(&lab, &lab.root_system().weight(vec![1, 1])).unwrap();
    assert!(r.holds);
    assert_eq!((r.degree1_ideal_dim, r.degree2_ideal_dim), (1, 8));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn multiplication_holds_for_any_seed(seed in 0u64..10_000, a in 0i64..3, b in 0i64..3) {
        let lab = Lab::new(TypeLetter::A, 1).unwrap();
        let rs = lab.root_system();
        let r = check_multiplication(&lab, &rs.weight(vec![a]), &rs.weight(vec![b]), 20, seed).unwrap();
        prop_assert!(r.passes());
    }

    #[test]
    fn torus_case_for_any_s(s in prop::sample::select(vec![1i64, 2, 3, -5, 7])) {
        let lab = Lab::new(TypeLetter::A, 1).unwrap();
        let (g, rs) = (lab.algebra(), lab.root_system());
        let w = lab.lambda_from_root_coords(&[1]).unwrap();
        let re = regular_element(g, &[], Some(&[s])).unwrap();
        let v = lab.rep(&w).unwrap();
        let blocks = restrict_to_levi(rs, &v, &re.subset);
        let h = find_general_translate(g, &v, &blocks, 3, 200).unwrap();
        prop_assert!(psi_check(&lab, &w, 1, &re, &h).unwrap().passes());
    }
}
