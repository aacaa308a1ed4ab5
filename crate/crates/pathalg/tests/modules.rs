use std::sync::Arc;

use pathalg::highest::{self, listing_order, order_from_labels};
use pathalg::hom::{hom_dim, rep_isomorphic};
use pathalg::{Algebra, Error, Fp, Presentation, Quiver, Rep, Scalar, Q};
use proptest::prelude::*;

fn algebra<F: Scalar>(name: &str) -> Algebra<F> {
    Algebra::build(&Presentation::named(name).unwrap()).unwrap()
}

#[test]
fn subalgebra_b() {
    let b: Algebra<Q> = algebra("B-subalgebra");
    assert_eq!(b.dim(), 9);
    assert_eq!(b.strata(), vec![3, 4, 2]);
    let dims: Vec<usize> = (0..3).map(|v| b.projective(v).dim()).collect();
    assert_eq!(dims, vec![5, 2, 2]);
}

#[test]
fn single_vertex() {
    let p = Presentation::from_json(r#"{"vertices":["x"],"arrows":[],"relations":[]}"#).unwrap();
    let a: Algebra<Q> = Algebra::build(&p).unwrap();
    assert_eq!(a.dim(), 1);
    assert_eq!(
        a.projective(0).radical_layers().layers,
        vec![vec!["x".to_string()]]
    );
}

#[test]
fn free_loop_does_not_terminate() {
    let p =
        Presentation::from_json(r#"{"vertices":["x"],"arrows":[["a","x","x"]],"relations":[]}"#)
            .unwrap();
    assert!(matches!(
        Algebra::<Q>::build(&p),
        Err(Error::NonTerminating(12))
    ));
}

#[test]
fn asymmetric_relations_have_no_dual() {
    let p = Presentation::from_json(
        r#"{"vertices":["x","y"],
            "arrows":[["a","x","y"],["a'","y","x"]],
            "relations":[[{"coeff":1,"path":["a","a'","a"]}]]}"#,
    )
    .unwrap();
    let a: Algebra<Q> = Algebra::build(&p).unwrap();
    assert!(!a.self_dual);
    assert!(matches!(
        a.dual(&a.projective(0)),
        Err(Error::PresentationNotSelfDual)
    ));
}

#[test]
fn presentation_json_round_trip() {
    for name in Presentation::NAMES {
        let p = Presentation::named(name).unwrap();
        assert_eq!(Presentation::from_json(&p.to_json()).unwrap(), p);
    }
    let f = Presentation::from_json(
        r#"{"vertices":["x"],"arrows":[],"relations":[],"field":{"prime":3}}"#,
    )
    .unwrap();
    assert_eq!(f.field, pathalg::FieldSpec::Prime(3));
}

#[test]
fn malformed_presentations() {
    let multi = r#"{"vertices":["x","y"],"arrows":[["a","x","y"],["b","x","y"]],"relations":[]}"#;
    assert!(Algebra::<Q>::build(&Presentation::from_json(multi).unwrap()).is_err());
    let mixed = r#"{"vertices":["x","y"],"arrows":[["a","x","y"],["b","y","x"]],
        "relations":[[{"coeff":1,"path":["a"]},{"coeff":1,"path":["a","b"]}]]}"#;
    assert!(Algebra::<Q>::build(&Presentation::from_json(mixed).unwrap()).is_err());
}

#[test]
fn quotients_of_p10() {
    let a: Algebra<Q> = algebra("A-appendix");
    let names = |n: &[&str]| a.path_by_names(n).unwrap();
    let top = a.projective_mod_paths(0, &[names(&["α"]), names(&["β"]), names(&["γ"])]);
    assert_eq!(top.dim(), 1);
    let p = a.projective(0);
    assert_eq!(a.quotient_by_right_ideal(&p, &[]), p);
}

#[test]
fn socle_of_p10_has_length_two() {
    let a: Algebra<Q> = algebra("A-appendix");
    assert_eq!(a.projective(0).socle().len(), 2);
}

#[test]
fn radical_of_delta43() {
    let a: Algebra<Q> = algebra("A-appendix");
    let order = listing_order(&a);
    let d = highest::delta_module(&a, &order, 3);
    let n = highest::nabla_module(&a, &order, 3).unwrap();
    let (rad_d, _) = d.restrict(&d.rad_of(&d.full()));
    let n_mod_soc = n.quotient(&n.soc_over(&n.zero_sub())).0;
    assert!(rep_isomorphic(&rad_d, &n_mod_soc));
    assert!(rep_isomorphic(&a.dual(&d).unwrap(), &n));

    let b: Algebra<Q> = algebra("B-subalgebra");
    let as_b = rad_d.restrict_to_quiver(b.quiver.clone()).unwrap();
    assert!(as_b.satisfies(&b.relations));
    assert_eq!(as_b.dim(), 4);
    let l = as_b.radical_layers().layers;
    assert_eq!(
        l,
        vec![
            vec!["10".to_string()],
            vec!["05".into(), "51".into()],
            vec!["10".into()]
        ]
    );
    assert_eq!(as_b.socle_layers().layers, l);
}

#[test]
fn t43_witnesses() {
    let a: Algebra<Q> = algebra("A-appendix");
    let t = a.projective_mod_paths(0, &[a.path_by_names(&["γ"]).unwrap()]);
    let rad = t.radical_layers().layers;
    let soc = t.socle_layers().layers;
    let i = rad
        .iter()
        .position(|l| l.contains(&"43".to_string()))
        .unwrap();
    let j = soc
        .iter()
        .position(|l| l.contains(&"43".to_string()))
        .unwrap();
    let twice = |l: &Vec<String>| l.iter().filter(|x| *x == "10").count() == 2;
    assert!(twice(&rad[i - 1]));
    assert!(twice(&soc[j - 1]));
    let comp = t.composition();
    let want: Vec<(String, usize)> = vec![
        ("10".into(), 5),
        ("05".into(), 2),
        ("51".into(), 2),
        ("43".into(), 1),
    ];
    assert_eq!(comp, want);
    assert_eq!(t.loewy_length(), 7);
}

#[test]
fn tilting_is_order_insensitive() {
    let a: Algebra<Q> = algebra("A-appendix");
    let o1 = listing_order(&a);
    let o2 = order_from_labels(&a, &["10", "51", "05", "43"]).unwrap();
    let t1 = highest::build_tilting(&a, &o1, 3).unwrap();
    let t2 = highest::build_tilting(&a, &o2, 3).unwrap();
    assert!(rep_isomorphic(&t1, &t2));
    let low = highest::build_tilting(&a, &o1, 0).unwrap();
    assert_eq!(low.dim(), 1);
    for v in 0..4 {
        let t = highest::build_tilting(&a, &o1, v).unwrap();
        assert!(rep_isomorphic(&t, &a.dual(&t).unwrap()), "T({v}) self-dual");
        assert_eq!(t.top().len(), 1);
        for w in 0..4 {
            assert_eq!(highest::ext1_dim(&a, &o1, w, &t), 0);
        }
    }
}

#[test]
fn delta_filtration_of_t43() {
    let a: Algebra<Fp<3>> = algebra("A-appendix");
    let order = listing_order(&a);
    let t = highest::build_tilting(&a, &order, 3).unwrap();
    let d: Vec<usize> = highest::delta_multiplicities(&a, &order, &t)
        .unwrap()
        .into_iter()
        .map(|x| x.1)
        .collect();
    let n: Vec<usize> = highest::nabla_multiplicities(&a, &order, &t)
        .into_iter()
        .map(|x| x.1)
        .collect();
    assert_eq!(d, vec![1, 1, 1, 1]);
    assert_eq!(d, n);
}

#[test]
fn different_supports_are_not_isomorphic() {
    let q = Arc::new(Quiver::new(vec!["x".into(), "y".into()], &[]).unwrap());
    let sx: Rep<Q> = Rep::simple(q.clone(), 0);
    let sy: Rep<Q> = Rep::simple(q, 1);
    assert!(!rep_isomorphic(&sx, &sy));
    assert!(rep_isomorphic(&sx, &sx));
    assert!(sx.is_rigid());
    assert_eq!(hom_dim(&sx, &sy), 0);
}

fn any_paths(a: &Algebra<Q>, v: usize, picks: &[usize]) -> Vec<pathalg::Path> {
    let from_v: Vec<&pathalg::Path> = a
        .basis
        .iter()
        .filter(|p| p.src == v && !p.is_empty())
        .collect();
    picks
        .iter()
        .map(|&i| from_v[i % from_v.len()].clone())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotient_modules_are_well_behaved(v in 0usize..4, picks in proptest::collection::vec(0usize..40, 0..3)) {
        let a: Algebra<Q> = algebra("A-appendix");
        let m = a.projective_mod_paths(v, &any_paths(&a, v, &picks));
        prop_assert!(m.satisfies(&a.relations));
        let d = a.dual(&m).unwrap();
        prop_assert!(d.satisfies(&a.relations));
        prop_assert_eq!(&a.dual(&d).unwrap(), &m);
        prop_assert_eq!(m.radical_layers().total(), m.dim());
        prop_assert_eq!(m.socle_layers().total(), m.dim());
        prop_assert_eq!(m.radical_layers().len(), m.socle_layers().len());
        prop_assert_eq!(d.radical_layers(), m.socle_layers());
        prop_assert_eq!(m.is_rigid(), d.is_rigid());
    }

    #[test]
    fn structure_agrees_over_q_and_f3(v in 0usize..4, picks in proptest::collection::vec(0usize..40, 0..3)) {
        let a: Algebra<Q> = algebra("A-appendix");
        let b: Algebra<Fp<3>> = algebra("A-appendix");
        let paths = any_paths(&a, v, &picks);
        let m = a.projective_mod_paths(v, &paths);
        let n = b.projective_mod_paths(v, &paths);
        prop_assert_eq!(&m.dims, &n.dims);
        prop_assert_eq!(m.radical_layers(), n.radical_layers());
        prop_assert_eq!(m.socle_layers(), n.socle_layers());
        prop_assert_eq!(m.is_rigid(), n.is_rigid());
    }
}
