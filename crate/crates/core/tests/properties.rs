use proptest::prelude::*;

use octoverify::actions::{GroupWord, OctonionMap, SandwichMap};
use octoverify::check::{CheckResult, Witness};
use octoverify::clifford::{Blade, Multivector, Signature};
use octoverify::exact::{gram, Vector};
use octoverify::octonion::{apply_matrix, associator, moufang_residuals, Octonion};
use octoverify::suite::{Report, Suite};
use octoverify::{Rational, Status};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn octonion() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(rational()).prop_map(Octonion::new)
}

fn imaginary_unit_index() -> impl Strategy<Value = usize> {
    1usize..=7
}

fn sandwich() -> impl Strategy<Value = SandwichMap> {
    prop_oneof![
        (1usize..=6).prop_map(|k| SandwichMap::action_a(k).unwrap()),
        (1usize..=6).prop_map(|k| SandwichMap::action_b(k).unwrap()),
        imaginary_unit_index().prop_map(|k| SandwichMap::reflect_basis(k).unwrap()),
        (1usize..=6, 0usize..6).prop_map(|(j, d)| {
            let k = j + 1 + d % (7 - j);
            SandwichMap::action_c(j, k).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn norm_is_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!((&x * &y).norm_sq(), &x.norm_sq() * &y.norm_sq());
    }

    #[test]
    fn octonions_are_alternative(x in octonion(), y in octonion()) {
        prop_assert!(associator(&x, &x, &y).is_zero());
        prop_assert!(associator(&y, &x, &x).is_zero());
        prop_assert_eq!(&(&x * &y) * &x, &x * &(&y * &x));
    }

    #[test]
    fn moufang_residuals_vanish(x in octonion(), y in octonion(), z in octonion()) {
        for r in moufang_residuals(&x, &y, &z).unwrap() {
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn conjugation_reverses_products(x in octonion(), y in octonion()) {
        prop_assert_eq!((&x * &y).conjugate(), &y.conjugate() * &x.conjugate());
    }

    #[test]
    fn gram_is_symmetric(xs in proptest::collection::vec(octonion(), 1..5)) {
        let vs: Vec<Vector> = xs.iter().map(Octonion::to_vector).collect();
        prop_assert!(gram(&vs).unwrap().is_symmetric());
    }

    #[test]
    fn sandwich_matrix_agrees_with_evaluation(m in sandwich(), x in octonion()) {
        prop_assert_eq!(apply_matrix(m.basis_table(), &x), m.apply(&x).unwrap());
    }

    #[test]
    fn sandwich_maps_preserve_norm(m in sandwich(), x in octonion()) {
        prop_assert_eq!(m.apply(&x).unwrap().norm_sq(), x.norm_sq());
        prop_assert!(m.basis_table().transpose().mat_mul(m.basis_table()).unwrap().is_identity());
    }

    #[test]
    fn composition_applies_last_letter_first(a in sandwich(), b in sandwich(), x in octonion()) {
        let word = GroupWord::pair(a.clone(), b.clone());
        let direct = a.apply(&b.apply(&x).unwrap()).unwrap();
        prop_assert_eq!(word.apply(&x).unwrap(), direct.clone());
        prop_assert_eq!(apply_matrix(word.basis_table(), &x), direct);
        let composed = GroupWord::from(a).compose(&GroupWord::from(b));
        prop_assert_eq!(composed.basis_table(), word.basis_table());
    }

    #[test]
    fn geometric_product_is_associative(
        (p, q) in (0usize..=3, 0usize..=3),
        bits in proptest::array::uniform3(0u16..64),
        coeffs in proptest::array::uniform3(rational()),
    ) {
        let sig = Signature::new(p, q).unwrap();
        let mask = (1u16 << sig.dim()) - 1;
        let mv: Vec<Multivector> = bits
            .iter()
            .zip(coeffs)
            .map(|(b, c)| Multivector::from_terms(sig, [(Blade::from_bits(b & mask), c)]).unwrap())
            .collect();
        let lhs = mv[0].geo_mul(&mv[1]).unwrap().geo_mul(&mv[2]).unwrap();
        let rhs = mv[0].geo_mul(&mv[1].geo_mul(&mv[2]).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exit_code_is_one_iff_some_check_fails(statuses in proptest::collection::vec(0u8..3, 0..12)) {
        let checks: Vec<CheckResult> = statuses
            .iter()
            .enumerate()
            .map(|(n, s)| {
                let w = Witness::new("x", "1", "0");
                match s {
                    0 => CheckResult::pass(format!("c{n}"), "r"),
                    1 => CheckResult::fail(format!("c{n}"), "r", w),
                    _ => CheckResult::finding(format!("c{n}"), "r", w),
                }
            })
            .collect();
        let any_fail = checks.iter().any(|c| c.status == Status::Fail);
        let report = Report::new(Suite::Table, 0, checks);
        prop_assert_eq!(report.exit_code(), i32::from(any_fail));
        prop_assert_eq!(report.summary.pass + report.summary.fail + report.summary.finding, statuses.len());
    }
}
