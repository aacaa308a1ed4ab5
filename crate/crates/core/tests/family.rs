mod common;

use common::*;
use sl3tensor::characters::{self, Character};
use sl3tensor::family::{self, Atom, Product};
use sl3tensor::weights::Flip;
use sl3tensor::{verify, Error, Prime};

const T10: Atom = Atom::T(sl3tensor::Weight { a: 1, b: 0 });
const T01: Atom = Atom::T(sl3tensor::Weight { a: 0, b: 1 });

fn ch(p: Prime, a: Atom) -> Character {
    (*characters::family_character(p, &a).unwrap()).clone()
}

#[test]
fn atom_metadata() {
    let p = Prime::THREE;
    let m = family::atom_metadata(p, Atom::M).unwrap();
    assert!(!m.is_tilting && m.simple_restricted_socle && m.in_f && m.in_fprime);
    let l11 = family::atom_metadata(p, Atom::L(w(1, 1))).unwrap();
    assert!(!l11.is_tilting && l11.in_fprime);
    let t52 = family::atom_metadata(p, Atom::T(w(5, 2))).unwrap();
    assert!(t52.is_tilting && !t52.simple_restricted_socle && t52.in_f && !t52.in_fprime);
    let t60 = family::atom_metadata(p, Atom::T(w(6, 0))).unwrap();
    assert!(!t60.in_f && t60.in_fprime);
    assert!(family::atom_metadata(p, Atom::T(w(7, 0))).is_err());
    assert!(family::atom_metadata(Prime::TWO, Atom::M).is_err());
    // restricted simples that are tilting collapse onto T
    assert_eq!(Atom::L(w(2, 1)).normalized(p), Atom::T(w(2, 1)));
    assert_eq!(Atom::L(w(1, 1)).normalized(p), Atom::L(w(1, 1)));
    for q in [Prime::TWO, p] {
        let atoms = family::family_atoms(q);
        for a in &atoms {
            assert!(atoms.contains(&a.flip()), "{a}");
            let meta = family::atom_metadata(q, *a).unwrap();
            assert_eq!(meta.is_tilting, matches!(a, Atom::T(_)));
        }
    }
    assert_eq!(family::family_atoms(Prime::TWO).len(), 9);
}

#[test]
fn atom_parsing() {
    assert_eq!("M".parse::<Atom>().unwrap(), Atom::M);
    assert_eq!("T(2,1)".parse::<Atom>().unwrap(), Atom::T(w(2, 1)));
    assert_eq!("L1,1".parse::<Atom>().unwrap(), Atom::L(w(1, 1)));
    assert!("X(1,0)".parse::<Atom>().is_err());
}

#[test]
fn restricted_tables_match_characters() {
    for p in [Prime::TWO, Prime::THREE] {
        let r: Vec<_> = p.restricted_weights().collect();
        for l in &r {
            for m in &r {
                let atoms = family::restricted_decompose(p, *l, *m).unwrap();
                assert!(verify::check_atoms(p, *l, *m, &atoms).unwrap(), "{l} {m}");
                for (_, a) in &atoms {
                    assert!(family::atom_metadata(p, *a).is_ok(), "{a}");
                }
            }
        }
        assert!(matches!(
            family::restricted_decompose(p, w(p.as_i64(), 0), w(0, 0)),
            Err(Error::NotRestricted { .. })
        ));
    }
}

#[test]
fn multiplier_products_match_characters() {
    let p = Prime::THREE;
    for m in [T10, T01] {
        for a in family::family_atoms(p) {
            let Ok(prods) = family::multiplier_product(p, m, a) else {
                continue;
            };
            let mut got = Naive::new();
            for (k, prod) in prods {
                let c = match prod {
                    Product::Atom(x) => naive(&ch(p, x)),
                    Product::Factored { base, push } => {
                        naive_product(&naive(&ch(p, base)), &naive_twist(&naive(&ch(p, push)), 3))
                    }
                };
                for (x, v) in c {
                    *got.entry(x).or_insert(0) += k as i64 * v;
                }
            }
            got.retain(|_, v| *v != 0);
            let want = naive_product(&naive(&ch(p, m)), &naive(&ch(p, a)));
            assert_eq!(got, want, "{m} ⊗ {a}");
        }
    }
    let m = family::multiplier_product(p, T10, Atom::M).unwrap();
    let atoms: Vec<Product> = m.into_iter().map(|x| x.1).collect();
    assert!(atoms.contains(&Product::Atom(Atom::T(w(1, 3)))));
    assert!(family::multiplier_product(p, Atom::M, T10).is_err());
    assert!(family::multiplier_product(Prime::TWO, T10, T10).is_err());
}

#[test]
fn multiplier_covers_resplit_targets() {
    // a pushed multiplier only ever meets a table atom
    let p = Prime::THREE;
    for a in family::family_atoms(p) {
        if family::atom_metadata(p, a).unwrap().in_f {
            family::multiplier_product(p, T10, a).unwrap();
            family::multiplier_product(p, T01, a).unwrap();
        }
    }
}

#[test]
fn table_lines_are_numbered_and_restricted() {
    for p in [Prime::TWO, Prime::THREE] {
        for (i, line) in family::restricted_table(p).iter().enumerate() {
            assert_eq!(line.number, i + 1);
            assert!(line.lambda.is_restricted(p) && line.mu.is_restricted(p));
            let total = family::atoms_character(p, &line.atoms).unwrap().dim();
            let want = characters::simple_character(p, line.lambda).unwrap().dim()
                * characters::simple_character(p, line.mu).unwrap().dim();
            assert_eq!(total, want, "({})", line.number);
        }
    }
}
