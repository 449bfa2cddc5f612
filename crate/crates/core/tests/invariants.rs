//! Property tests for algebraic invariants across modules.

use monres::certify::{certify_ideal, find_certificate};
use monres::complex::{compose_zero, scarf_complex, taylor_complex, ComplexKind};
use monres::io::{parse_report, emit_json, ReportDocument};
use monres::newton::{ideal_order, integral_closure, is_integrally_closed, ord, rees_valuations};
use monres::residue::{annihilator, residue_current};
use monres::{Exponent, MonIdeal, Ray};
use proptest::prelude::*;

fn exponent(n: usize, max: u64) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0..=max, n).prop_map(Exponent::from)
}

fn ideal(n: usize, max: u64) -> impl Strategy<Value = MonIdeal> {
    prop::collection::vec(exponent(n, max), 1..6)
        .prop_filter_map("unit ideal", move |g| {
            let i = MonIdeal::new(n, g).ok()?;
            (!i.is_unit()).then_some(i)
        })
}

/// Artinian: pure powers are always among the raw generators.
fn artinian(n: usize, max: u64) -> impl Strategy<Value = MonIdeal> {
    (prop::collection::vec(1..=max, n), prop::collection::vec(exponent(n, max), 0..4)).prop_map(move |(p, extra)| {
        let pure = (0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = p[i];
            Exponent::from(e)
        });
        MonIdeal::new(n, pure.chain(extra)).unwrap()
    })
    .prop_filter("unit ideal", |i| !i.is_unit())
}

fn ray(n: usize) -> impl Strategy<Value = Ray> {
    prop::collection::vec(1u64..=7, n).prop_map(|c| Ray::from_u64s(&c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn minimalize_is_idempotent(i in ideal(3, 4)) {
        prop_assert_eq!(MonIdeal::new(3, i.gens().iter().cloned()).unwrap(), i.clone());
        // no generator divides another
        for (a, g) in i.gens().iter().enumerate() {
            for (b, h) in i.gens().iter().enumerate() {
                prop_assert!(a == b || !g.divides(h));
            }
        }
    }

    #[test]
    fn intersection_laws(i in ideal(2, 5), j in ideal(2, 5), m in exponent(2, 7)) {
        let ij = i.intersect(&j).unwrap();
        prop_assert_eq!(&ij, &j.intersect(&i).unwrap());
        prop_assert!(i.contains_ideal(&ij).unwrap() && j.contains_ideal(&ij).unwrap());
        prop_assert_eq!(ij.contains(&m).unwrap(), i.contains(&m).unwrap() && j.contains(&m).unwrap());
        prop_assert_eq!(i.intersect(&i).unwrap(), i);
    }

    #[test]
    fn power_law(i in ideal(2, 3), a in 1u32..3, b in 1u32..3) {
        prop_assert_eq!(
            i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap(),
            i.power(a + b).unwrap()
        );
    }

    #[test]
    fn closure_is_extensive_and_idempotent(i in artinian(2, 5)) {
        let c = integral_closure(&i).unwrap();
        prop_assert!(c.contains_ideal(&i).unwrap());
        prop_assert_eq!(integral_closure(&c).unwrap(), c.clone());
        prop_assert!(is_integrally_closed(&c).unwrap());
        // closure does not change any Rees order
        for (rho, r) in rees_valuations(&i).unwrap() {
            prop_assert_eq!(ideal_order(&rho, &c).unwrap(), r);
        }
    }

    #[test]
    fn valuations_are_additive(rho in ray(3), a in exponent(3, 9), b in exponent(3, 9), i in ideal(3, 3), j in ideal(3, 3)) {
        prop_assert_eq!(ord(&rho, &a.add(&b)).unwrap(), ord(&rho, &a).unwrap() + ord(&rho, &b).unwrap());
        prop_assert_eq!(
            ideal_order(&rho, &i.product(&j).unwrap()).unwrap(),
            ideal_order(&rho, &i).unwrap() + ideal_order(&rho, &j).unwrap()
        );
    }

    #[test]
    fn scarf_faces_are_taylor_faces(i in ideal(2, 5)) {
        let t = taylor_complex(&i).unwrap();
        let s = scarf_complex(&i).unwrap();
        for k in 0..=s.top_degree() {
            for f in s.faces(k) {
                prop_assert!(t.faces(k).contains(f));
            }
        }
        prop_assert!(compose_zero(&t));
        prop_assert!(compose_zero(&s));
    }

    #[test]
    fn residue_sandwich(i in artinian(2, 5)) {
        let r = residue_current(&taylor_complex(&i).unwrap(), &i).unwrap();
        let ones = Exponent::ones(2);
        for c in r.candidates() {
            let below = c.alpha.checked_sub(&ones).unwrap();
            prop_assert!(!i.contains(&below).unwrap());
            prop_assert!(i.contains(&c.alpha).unwrap());
        }
        prop_assert_eq!(annihilator(&r).unwrap(), i);
    }

    #[test]
    fn certificates_verify_and_decide(i in artinian(2, 5)) {
        let report = certify_ideal(&i, ComplexKind::Taylor).unwrap();
        for cert in report.certificates() {
            cert.verify().unwrap();
            let again = find_certificate(&cert.alpha, &i).unwrap();
            prop_assert_eq!(again.as_ref(), Some(cert));
        }
        prop_assert_eq!(report.closed, is_integrally_closed(&i).unwrap());
    }

    #[test]
    fn scarf_and_taylor_decide_alike(i in artinian(2, 4)) {
        let s = certify_ideal(&i, ComplexKind::Scarf);
        if let Ok(s) = s {
            prop_assert_eq!(s.closed, certify_ideal(&i, ComplexKind::Taylor).unwrap().closed);
        }
    }

    #[test]
    fn reports_round_trip(i in artinian(2, 4)) {
        let doc = ReportDocument::Certify(certify_ideal(&i, ComplexKind::Taylor).unwrap());
        let text = emit_json(&doc);
        let back = parse_report(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(emit_json(&back), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn three_variable_decision(i in artinian(3, 3)) {
        let report = certify_ideal(&i, ComplexKind::Taylor).unwrap();
        prop_assert_eq!(report.closed, is_integrally_closed(&i).unwrap());
    }
}
