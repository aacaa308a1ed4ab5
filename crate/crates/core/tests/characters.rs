mod common;

use common::*;
use proptest::prelude::*;
use sl3tensor::characters::{self, Character, Provenance, WeylExpr};
use sl3tensor::weights::{Flip, ZERO};
use sl3tensor::{Error, Prime};

const PRIMES: [Prime; 2] = [Prime::TWO, Prime::THREE];

#[test]
fn weyl_multiplicities_match_kostant() {
    for lambda in all_weights(9) {
        let c = characters::weyl_character(lambda).unwrap();
        assert_eq!(naive(&c), naive_weyl(lambda), "χ{lambda}");
    }
}

#[test]
fn weyl_dimension_formula() {
    for l in all_weights(20) {
        let want = (l.a + 1) * (l.b + 1) * (l.a + l.b + 2) / 2;
        assert_eq!(characters::weyl_character(l).unwrap().dim(), want, "{l}");
        assert_eq!(characters::weyl_dimension(l), want);
    }
}

#[test]
fn simple_characters_match_digit_loop() {
    for p in PRIMES {
        for l in all_weights(12) {
            assert_eq!(
                naive(&characters::simple_character(p, l).unwrap()),
                naive_simple(p, l),
                "p={p:?} {l}"
            );
        }
    }
}

#[test]
fn weyl_module_tables_match_characters() {
    for p in PRIMES {
        let tab = characters::tabulated_weyl_modules(p);
        assert!(!tab.is_empty());
        for lambda in tab {
            for l in [lambda, lambda.flip()] {
                let (factors, socle) = characters::weyl_module_factors(p, l).unwrap();
                assert_eq!(factors[0], l);
                assert!(factors.contains(&socle));
                let got = characters::into_simple_basis(p, &characters::weyl_character(l).unwrap())
                    .unwrap();
                let mut want = WeylExpr::default();
                for f in &factors {
                    want.add_term(*f, 1);
                }
                assert_eq!(got, want, "Δ{l} at p={}", p.get());
                for f in &factors {
                    assert!(naive_linked(p, l, *f), "{f} in Δ{l} not linked");
                }
            }
        }
    }
}

#[test]
fn base_tilting_entries_are_well_formed() {
    for p in PRIMES {
        for nu in characters::base_tilting_weights(p) {
            let (c, prov) = characters::tilting_character_with_provenance(p, nu).unwrap();
            assert_eq!(prov, Provenance::BaseTable);
            let e = characters::into_weyl_basis(&c).unwrap();
            assert_eq!(e.get(nu), 1, "T{nu}");
            assert!(e.is_nonnegative());
            assert_eq!(e.iter().next_back().unwrap().0, nu);
            assert!(c.is_weyl_invariant());
        }
    }
}

#[test]
fn tilting_characters_are_flip_symmetric_and_invariant() {
    for p in PRIMES {
        for nu in all_weights(14) {
            let t = match characters::tilting_character(p, nu) {
                Ok(t) => t,
                Err(Error::UnknownTiltingCharacter { .. }) => continue,
                Err(e) => panic!("{e}"),
            };
            assert!(t.is_weyl_invariant(), "T{nu}");
            let f = characters::tilting_character(p, nu.flip()).unwrap();
            assert_eq!(*f, t.flip(), "T{nu} at p={}", p.get());
            let e = characters::into_weyl_basis(&t).unwrap();
            assert!(e.is_nonnegative());
            assert_eq!(e.get(nu), 1);
        }
    }
}

#[test]
fn tilting_digit_products() {
    // T((p-1)ρ + λ0 + pλ1) = T((p-1)ρ+λ0) ⊗ T(λ1)^[1] when λ1 is known
    let p = Prime::THREE;
    let (c, prov) = characters::tilting_character_with_provenance(p, w(7, 4)).unwrap();
    assert_eq!(prov, Provenance::Digits);
    let want = naive_product(
        &naive(&characters::tilting_character(p, w(4, 4)).unwrap()),
        &naive_twist(
            &naive(&characters::tilting_character(p, w(1, 0)).unwrap()),
            3,
        ),
    );
    assert_eq!(naive(&c), want);
    assert_eq!(
        characters::tilting_character(p, w(7, 7)).unwrap().dim(),
        2916
    );
}

#[test]
fn convention_characters_are_recorded() {
    let p = Prime::THREE;
    for nu in characters::convention_weights(p) {
        let (c, prov) = characters::tilting_character_with_provenance(p, nu).unwrap();
        assert_eq!(prov, Provenance::Convention);
        assert!(c.is_weyl_invariant());
    }
    assert_eq!(
        characters::tilting_weyl_expr(p, w(6, 0)).unwrap(),
        WeylExpr::from_terms([(w(6, 0), 1), (w(4, 1), 1)])
    );
    assert_eq!(
        characters::tilting_weyl_expr(p, w(5, 1)).unwrap(),
        WeylExpr::from_terms([(w(5, 1), 1), (w(1, 0), 1)])
    );
    let records = characters::derived_tilting_records().unwrap();
    assert!(records
        .iter()
        .any(|r| r.weight == w(6, 0) && r.provenance == Provenance::Convention));
    characters::check_tilting_records(&records).unwrap();
    let mut bad = records.clone();
    bad[0].weyl_multiplicities[0].1 += 1;
    assert!(matches!(
        characters::check_tilting_records(&bad),
        Err(Error::Cache(_))
    ));
}

#[test]
fn unknown_tilting_characters_are_errors() {
    assert!(matches!(
        characters::tilting_character(Prime::THREE, w(7, 0)),
        Err(Error::UnknownTiltingCharacter { p: 3, .. })
    ));
    assert!(matches!(
        characters::tilting_character(Prime::THREE, w(-1, 2)),
        Err(Error::NotDominant(_))
    ));
}

#[test]
fn donkin_restricted_formula_matches_tables() {
    let cases = [
        (
            Prime::THREE,
            [
                (0, 0),
                (1, 0),
                (0, 1),
                (1, 1),
                (2, 0),
                (0, 2),
                (2, 1),
                (1, 2),
            ]
            .as_slice(),
        ),
        (
            Prime::TWO,
            [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2)].as_slice(),
        ),
    ];
    for (p, lams) in cases {
        let st = p.steinberg();
        for &(a, b) in lams {
            let got = characters::donkin_restricted_tilting_char(p, w(a, b)).unwrap();
            let want = characters::tilting_character(p, st + w(a, b)).unwrap();
            assert_eq!(got, *want, "T{} at p={}", st + w(a, b), p.get());
        }
    }
    assert!(matches!(
        characters::donkin_restricted_tilting_char(Prime::TWO, w(2, 1)),
        Err(Error::DonkinPrecondition { .. })
    ));
}

#[test]
fn donkin_delta_multiplicities_match_factorizations() {
    let p = Prime::THREE;
    // (lambda, mu) with T((p-1)ρ + λ + pμ)
    for (lam, mu) in [
        (w(0, 2), w(1, 0)),
        (w(1, 1), ZERO),
        (w(2, 1), ZERO),
        (w(1, 0), w(1, 1)),
    ] {
        let top = p.steinberg() + lam + mu.scale(3);
        let e =
            characters::into_weyl_basis(&characters::tilting_character(p, top).unwrap()).unwrap();
        for nu in characters::dominant_weights_below(top) {
            let k = characters::donkin_delta_multiplicities(p, lam, mu, nu).unwrap();
            assert_eq!(k, e.get(nu), "(T{top}:∇{nu})");
        }
    }
    // T(5,4) = T(2,4) ⊗ T(1,0)^[1]
    let t54 = naive(&characters::tilting_character(p, w(5, 4)).unwrap());
    let t24 = naive(&characters::tilting_character(p, w(2, 4)).unwrap());
    let t10 = naive(&characters::tilting_character(p, w(1, 0)).unwrap());
    assert_eq!(t54, naive_product(&t24, &naive_twist(&t10, 3)));
}

#[test]
fn family_characters_are_invariant() {
    for p in PRIMES {
        for a in sl3tensor::family::family_atoms(p) {
            let c = characters::family_character(p, &a).unwrap();
            assert!(c.is_weyl_invariant(), "{a}");
            assert!(c.dim() > 0);
        }
    }
}

fn weyl_expr() -> impl Strategy<Value = WeylExpr> {
    proptest::collection::vec(((0i64..=10, 0i64..=10), -3i64..=3), 0..6)
        .prop_map(|v| WeylExpr::from_terms(v.into_iter().map(|((a, b), k)| (w(a, b), k))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weyl_basis_round_trip(e in weyl_expr()) {
        let c: Character = e.character().unwrap();
        prop_assert!(c.is_weyl_invariant());
        prop_assert_eq!(characters::into_weyl_basis(&c).unwrap(), e);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn simple_character_multiplicativity(a in 0i64..=40, b in 0i64..=40, three in any::<bool>()) {
        let p = if three { Prime::THREE } else { Prime::TWO };
        let c = characters::simple_character(p, w(a, b)).unwrap();
        prop_assert!(c.is_weyl_invariant());
        prop_assert_eq!(naive(&c), naive_simple(p, w(a, b)));
    }
}
