use jumploci::cvmodel::{
    classify_straightness, model_tau1, omega_member, plucker2, plucker2_dual, schubert_codim,
    sigma_member, strictness_witness, CvModel, TranslatedTorus,
};
use jumploci::qlinalg::{int, rat, QMatrix, Rational, RationalSubspace, SubspaceArrangement};
use proptest::prelude::*;

fn subspace(n: usize, max_gens: usize) -> impl Strategy<Value = RationalSubspace> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 1..=max_gens)
        .prop_map(move |gens| {
            let gens: Vec<Vec<Rational>> = gens.iter().map(|g| g.iter().map(|&x| int(x)).collect()).collect();
            RationalSubspace::span(n, &gens).unwrap()
        })
}

fn nonzero_subspace(n: usize, max_gens: usize) -> impl Strategy<Value = RationalSubspace> {
    subspace(n, max_gens).prop_filter("nonzero", |s| s.dim() > 0)
}

/// `dim(P + L) < dim P + dim L`, computed from stacked bases.
fn meets_by_rank(p: &RationalSubspace, l: &RationalSubspace) -> bool {
    let mut rows = p.basis().to_vec();
    rows.extend(l.basis().iter().cloned());
    QMatrix::from_rows(p.ambient_dim(), &rows).rank() < p.dim() + l.dim()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn untranslated_models_are_straight(
        dirs in (2usize..=4).prop_flat_map(|n| prop::collection::vec(subspace(n, 2), 0..=3)),
    ) {
        let n = dirs.first().map_or(2, RationalSubspace::ambient_dim);
        let comps = dirs.into_iter().map(TranslatedTorus::subtorus).collect();
        let m = CvModel::new(n, comps, vec![]).unwrap();
        let r = classify_straightness(std::slice::from_ref(&m), &[model_tau1(&m)]).unwrap();
        prop_assert!(r.straight);
    }

    #[test]
    fn dimension_count_forces_incidence(
        (l, p) in (3usize..=5).prop_flat_map(|n| (nonzero_subspace(n, 3), nonzero_subspace(n, 4))),
    ) {
        prop_assume!(!l.is_full());
        if p.dim() > l.codim() {
            prop_assert!(sigma_member(&SubspaceArrangement::single(l.clone()), &p).unwrap());
        }
        prop_assert_eq!(schubert_codim(&l, p.dim()).unwrap() == 0, p.dim() > l.codim());
    }

    #[test]
    fn plucker_relation_holds(p in subspace(4, 2).prop_filter("plane", |s| s.dim() == 2)) {
        for c in [plucker2(&p).unwrap(), plucker2_dual(&p).unwrap()] {
            prop_assert_eq!(&c[0] * &c[5] - &c[1] * &c[4] + &c[3] * &c[2], int(0));
        }
    }

    #[test]
    fn witness_is_sound(
        ell in prop::collection::vec(-2i64..=2, 3).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0)),
        q in prop::collection::vec(0i64..4, 3),
        res in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..=2),
    ) {
        let n = 3;
        let ell_space = RationalSubspace::span(n, &[ell.iter().map(|&x| int(x)).collect()]).unwrap();
        let q: Vec<Rational> = q.iter().map(|&x| rat(x, 4)).collect();
        let c = TranslatedTorus::new(ell_space, q).unwrap();
        let lines: Vec<RationalSubspace> = res
            .iter()
            .filter(|v| v.iter().any(|&x| x != 0))
            .map(|v| RationalSubspace::span(n, &[v.iter().map(|&x| int(x)).collect()]).unwrap())
            .collect();
        let r = SubspaceArrangement::new(n, lines).unwrap();
        if let Ok(w) = strictness_witness(&c, &r, 3) {
            let model = CvModel::new(n, vec![c], vec![]).unwrap();
            prop_assert!(!omega_member(&model, &w.plane).unwrap());
            prop_assert!(!sigma_member(&r, &w.plane).unwrap());
            prop_assert!(r.components().iter().all(|l| !meets_by_rank(&w.plane, l)));
        }
    }
}
