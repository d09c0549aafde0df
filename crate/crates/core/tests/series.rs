use mmp_core::genfun::{
    catalan_series, closed_form_series, constant_term_series, recursion_poly, recursion_series, verify_quadratic,
    x_slice_series, FamilyId,
};
use mmp_core::mesh::dist_poly;
use mmp_core::series::{ints, t_poly};
use mmp_core::{Error, TSeries, XPoly};
use proptest::prelude::*;

fn arb_xpoly() -> impl Strategy<Value = XPoly> {
    proptest::collection::vec(-1000i64..1000, 0..6).prop_map(XPoly::from_coeffs)
}

fn arb_series() -> impl Strategy<Value = TSeries> {
    (proptest::collection::vec(arb_xpoly(), 1..6), 0usize..8).prop_map(|(c, o)| TSeries::new(c, o))
}

proptest! {
    #[test]
    fn xpoly_text_and_json_round_trip(p in arb_xpoly()) {
        prop_assert_eq!(p.to_string().parse::<XPoly>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<XPoly>(&json).unwrap(), p);
    }

    #[test]
    fn series_json_round_trip(s in arb_series()) {
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<TSeries>(&json).unwrap(), s);
    }

    #[test]
    fn unit_series_has_inverse(s in arb_series()) {
        let mut c = s.coeffs().to_vec();
        if c.is_empty() {
            c.push(XPoly::one());
        }
        c[0] = XPoly::one();
        let u = TSeries::new(c, s.order());
        let prod = u.mul(&u.recip().unwrap());
        prop_assert_eq!(prod, TSeries::one(s.order()));
    }

    #[test]
    fn product_is_commutative(a in arb_series(), b in arb_series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }
}

#[test]
fn huge_coefficients_survive_json() {
    let big = XPoly::constant(num_bigint::BigInt::from(10u8).pow(40));
    let json = serde_json::to_string(&big).unwrap();
    assert!(json.contains("10000000000000000000000000000000000000000"));
    assert_eq!(serde_json::from_str::<XPoly>(&json).unwrap(), big);
}

#[test]
fn non_unit_recip_is_a_domain_error() {
    assert!(matches!(t_poly(&[2, 1], 4).recip(), Err(Error::Domain(_))));
}

#[test]
fn recursion_agrees_with_enumeration_for_every_family() {
    let ids = [
        FamilyId::k000(1),
        FamilyId::k000(3),
        FamilyId::ook0(2),
        FamilyId::ok00(3),
        FamilyId::k0e0(2),
        FamilyId::e0k0(3),
        FamilyId::e000(),
        FamilyId::ooe0(),
        FamilyId::e0e0(),
    ];
    for id in ids {
        for n in 0..=9 {
            assert_eq!(recursion_poly(id, n), dist_poly(n, id.to_spec()).unwrap(), "{id} n={n}");
        }
    }
}

#[test]
fn closed_forms_agree_with_recursion_beyond_printed_range() {
    let order = 16;
    for id in [FamilyId::k000(2), FamilyId::ok00(4), FamilyId::k0e0(3), FamilyId::e0k0(2), FamilyId::e000(), FamilyId::e0e0()] {
        assert_eq!(closed_form_series(id, order).unwrap(), recursion_series(id, order), "{id}");
    }
    for id in [FamilyId::ook0(1), FamilyId::ook0(3), FamilyId::ooe0()] {
        assert!(closed_form_series(id, order).is_err());
        assert!(verify_quadratic(id, order).unwrap().is_zero(), "{id}");
    }
}

#[test]
fn zero_parameter_is_plain_catalan_in_tx() {
    // k = 0 imposes no condition, so every point matches
    let s = recursion_series(FamilyId::k000(0), 8);
    let c = catalan_series(8);
    for n in 0..=8 {
        assert_eq!(s.coeff(n), c.coeff(n).shift(n), "n={n}");
    }
}

#[test]
fn slices_and_constants() {
    let order = 14;
    for id in [FamilyId::k000(2), FamilyId::k000(4), FamilyId::k0e0(1), FamilyId::k0e0(4), FamilyId::ooe0()] {
        assert_eq!(x_slice_series(id, order).unwrap(), recursion_series(id, order).x_slice(1), "{id}");
    }
    assert!(x_slice_series(FamilyId::ok00(2), order).is_err());
    for id in [FamilyId::k000(5), FamilyId::ook0(4), FamilyId::ok00(5), FamilyId::e0e0()] {
        assert_eq!(constant_term_series(id, order).unwrap(), recursion_series(id, order).at_x0(), "{id}");
    }
    assert_eq!(recursion_series(FamilyId::ooe0(), 5).at_x0().int_coeffs(), ints(&[1, 0, 0, 0, 0, 0]));
}
