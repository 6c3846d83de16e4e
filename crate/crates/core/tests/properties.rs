use greend4_core::linalg::rat;
use greend4_core::presentation::{
    from_green, nf_mul, to_green, PresBase, PresElement, PresMonomial,
};
use greend4_core::rep_lab::{
    build, cosyzygy, decompose, dual, loewy_length, recover_eta, socle, syzygy, tensor,
    top_dimension,
};
use greend4_core::{mul_labels, EtaParam, GreenElement, ModuleLabel, RatMatrix, Z2};
use proptest::prelude::*;

fn eta() -> impl Strategy<Value = EtaParam> {
    prop_oneof![
        4 => (-9i64..=9, 1i64..=9).prop_map(|(n, d)| EtaParam::finite(n, d)),
        1 => Just(EtaParam::Infinity),
    ]
}

fn r() -> impl Strategy<Value = Z2> {
    prop_oneof![Just(Z2::ZERO), Just(Z2::ONE)]
}

fn label(max_s: u32) -> impl Strategy<Value = ModuleLabel> {
    prop_oneof![
        r().prop_map(|r| ModuleLabel::SimpleOne { r }),
        r().prop_map(|r| ModuleLabel::SimpleTwo { r }),
        r().prop_map(|r| ModuleLabel::Projective { r }),
        (1..=max_s, r()).prop_map(|(s, r)| ModuleLabel::Syzygy { s, r }),
        (1..=max_s, r()).prop_map(|(s, r)| ModuleLabel::Cosyzygy { s, r }),
        (1..=max_s, r(), eta()).prop_map(|(s, r, eta)| ModuleLabel::Band { s, r, eta }),
    ]
}

fn element() -> impl Strategy<Value = GreenElement> {
    prop::collection::vec((label(6), -5i64..=5), 0..5).prop_map(|terms| {
        let mut e = GreenElement::zero();
        for (l, c) in terms {
            e.add_term(c, l);
        }
        e
    })
}

fn pres_base() -> impl Strategy<Value = PresBase> {
    prop_oneof![
        Just(PresBase::One),
        Just(PresBase::X),
        Just(PresBase::X2),
        (1u32..=8).prop_map(PresBase::Y),
        (1u32..=8).prop_map(PresBase::Z),
        (1u32..=8, eta()).prop_map(|(n, eta)| PresBase::Band { n, eta }),
    ]
}

fn pres_element() -> impl Strategy<Value = PresElement> {
    prop::collection::vec((any::<bool>(), pres_base(), -4i64..=4), 0..4).prop_map(|terms| {
        let mut p = PresElement::zero();
        for (g, b, c) in terms {
            p.add_term(c, PresMonomial::new(g, b));
        }
        p
    })
}

fn matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| RatMatrix::from_fn(n, n, |i, j| rat(v[i * n + j])))
}

proptest! {
    #[test]
    fn mul_is_commutative(a in element(), b in element()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn mul_is_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_distributes(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn dual_is_involutive_and_multiplicative(a in element(), b in element()) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!((&a * &b).dual(), &a.dual() * &b.dual());
    }

    #[test]
    fn dimension_is_multiplicative(a in element(), b in element()) {
        prop_assert_eq!((&a * &b).dimension(), a.dimension() * b.dimension());
    }

    #[test]
    fn products_of_labels_are_effective(a in label(8), b in label(8)) {
        prop_assert!(mul_labels(&a, &b).is_effective());
    }

    #[test]
    fn presentation_round_trip(p in pres_element(), e in element()) {
        prop_assert_eq!(from_green(&to_green(&p)), p);
        prop_assert_eq!(to_green(&from_green(&e)), e);
    }

    #[test]
    fn normal_form_is_a_homomorphism(p in pres_element(), q in pres_element()) {
        prop_assert_eq!(to_green(&nf_mul(&p, &q)), &to_green(&p) * &to_green(&q));
    }

    #[test]
    fn rank_nullity(m in matrix(4)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), 4);
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn inverse_when_invertible(m in matrix(3)) {
        if m.is_invertible() {
            let inv = m.inverse().unwrap();
            prop_assert_eq!(&m * &inv, RatMatrix::identity(3));
        } else {
            prop_assert!(m.inverse().is_err());
        }
    }

    #[test]
    fn transpose_reverses_products(a in matrix(3), b in matrix(3)) {
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tensor_matches_table(a in label(2), b in label(2)) {
        let found = decompose(&tensor(&build(&a), &build(&b))).map(|ls| GreenElement::from_multiset(&ls));
        prop_assert_eq!(found, Ok(mul_labels(&a, &b)));
    }

    #[test]
    fn band_parameter_is_recovered(s in 1u32..=4, r in r(), eta in eta()) {
        let m = build(&ModuleLabel::Band { s, r, eta: eta.clone() });
        prop_assert_eq!(recover_eta(&m), Ok(eta));
    }

    #[test]
    fn dual_matches_label_dual(l in label(4)) {
        let found = decompose(&dual(&build(&l)));
        prop_assert_eq!(found, Ok(vec![greend4_core::dual_label(&l)]));
    }
}

#[test]
fn syzygy_steps_through_the_series() {
    for s in 0..=4i64 {
        for r in [Z2::ZERO, Z2::ONE] {
            let m = build(&ModuleLabel::omega(s, r));
            assert_eq!(
                decompose(&syzygy(&m)),
                Ok(vec![ModuleLabel::omega(s + 1, r)])
            );
            assert_eq!(
                decompose(&cosyzygy(&m)),
                Ok(vec![ModuleLabel::omega(s - 1, r)])
            );
            if s > 0 {
                assert_eq!(top_dimension(&m), s as usize + 1);
                assert_eq!(socle(&m).len(), s as usize);
                assert_eq!(loewy_length(&m), 2);
            }
        }
    }
}

#[test]
fn cosyzygy_undoes_syzygy_on_non_projectives() {
    let etas = [
        EtaParam::integer(0),
        EtaParam::finite(5, 7),
        EtaParam::Infinity,
    ];
    let mut labels = vec![ModuleLabel::v(0), ModuleLabel::v(1)];
    for s in 1..=3u32 {
        for r in [Z2::ZERO, Z2::ONE] {
            labels.push(ModuleLabel::Syzygy { s, r });
            labels.push(ModuleLabel::Cosyzygy { s, r });
            for eta in &etas {
                labels.push(ModuleLabel::Band {
                    s,
                    r,
                    eta: eta.clone(),
                });
            }
        }
    }
    for l in labels {
        assert_eq!(
            decompose(&cosyzygy(&syzygy(&build(&l)))),
            Ok(vec![l.clone()]),
            "{l}"
        );
    }
}

#[test]
fn band_twist_under_syzygy() {
    for s in 1..=3u32 {
        for eta in [EtaParam::integer(1), EtaParam::Infinity] {
            let m = build(&ModuleLabel::Band {
                s,
                r: Z2::ONE,
                eta: eta.clone(),
            });
            let want = vec![ModuleLabel::Band {
                s,
                r: Z2::ZERO,
                eta,
            }];
            assert_eq!(decompose(&syzygy(&m)), Ok(want.clone()));
            assert_eq!(decompose(&cosyzygy(&m)), Ok(want));
        }
    }
}
