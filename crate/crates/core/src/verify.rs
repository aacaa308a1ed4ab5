//! Character oracle: recomputes tables, identity lists and decompositions
//! from simple characters and convolution.

use serde::Serialize;

use crate::characters::{self, Character, WeylExpr};
use crate::decompose::{Decomposition, Summand};
use crate::error::Result;
use crate::family::{self, Atom};
use crate::weights::{Prime, Weight, ZERO};

/// `L(λ)⊗L(μ)` on the character level.
pub fn product_character(p: Prime, lambda: Weight, mu: Weight) -> Result<Character> {
    Ok(characters::multiply(
        &*characters::simple_character(p, lambda)?,
        &*characters::simple_character(p, mu)?,
    ))
}

pub fn summand_character(p: Prime, s: &Summand) -> Result<Character> {
    let mut c = Character::monomial(ZERO);
    for f in &s.factors {
        let a = characters::family_character(p, &f.atom)?;
        c = characters::multiply(&c, &characters::frobenius_twist(&a, f.twist, p));
    }
    Ok(c.scaled(s.mult as i64))
}

pub fn decomposition_character(d: &Decomposition) -> Result<Character> {
    let mut c = Character::zero();
    for s in &d.summands {
        c.add_scaled(&summand_character(d.p, s)?, 1);
    }
    Ok(c)
}

/// Exact character identity for a decomposition.
pub fn check_decomposition(d: &Decomposition) -> Result<bool> {
    Ok(decomposition_character(d)? == product_character(d.p, d.lambda, d.mu)?)
}

/// One identity `χ_p(λ)·χ_p(μ) = Σ c_ν χ_p(ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub number: usize,
    pub lambda: Weight,
    pub mu: Weight,
    pub rhs: WeylExpr,
}

type RawIdentity = ((i64, i64), (i64, i64), &'static [(i64, i64, i64)]);

fn identity_data(p: Prime) -> &'static [RawIdentity] {
    match p.get() {
        2 => &[
            ((1, 0), (1, 0), &[(2, 0, 1), (0, 1, 2)]),
            ((1, 0), (0, 1), &[(1, 1, 1), (0, 0, 1)]),
            ((1, 0), (1, 1), &[(2, 1, 1), (0, 2, 2), (1, 0, 3)]),
            ((0, 1), (0, 1), &[(0, 2, 1), (1, 0, 2)]),
            ((0, 1), (1, 1), &[(1, 2, 1), (2, 0, 2), (0, 1, 3)]),
            (
                (1, 1),
                (1, 1),
                &[(2, 2, 1), (0, 3, 2), (3, 0, 2), (1, 1, 2), (0, 0, 4)],
            ),
        ],
        _ => &[
            ((1, 0), (1, 0), &[(2, 0, 1), (0, 1, 1)]),
            ((1, 0), (0, 1), &[(1, 1, 1), (0, 0, 2)]),
            ((1, 0), (2, 0), &[(3, 0, 1), (1, 1, 2), (0, 0, 1)]),
            ((1, 0), (1, 1), &[(2, 1, 1), (0, 2, 1)]),
            ((1, 0), (0, 2), &[(1, 2, 1), (0, 1, 1)]),
            ((1, 0), (2, 1), &[(3, 1, 1), (1, 2, 2), (2, 0, 1)]),
            (
                (1, 0),
                (1, 2),
                &[(2, 2, 1), (0, 3, 1), (1, 1, 2), (0, 0, 1)],
            ),
            ((1, 0), (2, 2), &[(3, 2, 1), (1, 3, 2), (2, 1, 3)]),
            ((2, 0), (2, 0), &[(4, 0, 1), (2, 1, 1), (0, 2, 2)]),
            ((2, 0), (1, 1), &[(3, 1, 1), (1, 2, 2), (0, 1, 1)]),
            ((2, 0), (0, 2), &[(2, 2, 1), (1, 1, 1), (0, 0, 2)]),
            (
                (2, 0),
                (2, 1),
                &[
                    (4, 1, 1),
                    (2, 2, 1),
                    (0, 3, 2),
                    (3, 0, 2),
                    (1, 1, 4),
                    (0, 0, 2),
                ],
            ),
            (
                (2, 0),
                (1, 2),
                &[(3, 2, 1), (1, 3, 2), (2, 1, 3), (0, 2, 1), (1, 0, 1)],
            ),
            (
                (2, 0),
                (2, 2),
                &[
                    (4, 2, 1),
                    (2, 3, 1),
                    (0, 4, 2),
                    (3, 1, 2),
                    (1, 2, 3),
                    (2, 0, 3),
                ],
            ),
            (
                (1, 1),
                (1, 1),
                &[(2, 2, 1), (0, 3, 1), (3, 0, 1), (1, 1, 2), (0, 0, 2)],
            ),
            (
                (1, 1),
                (2, 1),
                &[
                    (3, 2, 1),
                    (1, 3, 2),
                    (4, 0, 1),
                    (2, 1, 3),
                    (0, 2, 2),
                    (1, 0, 1),
                ],
            ),
            (
                (1, 1),
                (2, 2),
                &[
                    (3, 3, 1),
                    (1, 4, 2),
                    (4, 1, 2),
                    (2, 2, 1),
                    (0, 3, 4),
                    (3, 0, 4),
                    (1, 1, 6),
                    (0, 0, 5),
                ],
            ),
            (
                (2, 1),
                (2, 1),
                &[
                    (4, 2, 1),
                    (2, 3, 1),
                    (0, 4, 2),
                    (5, 0, 1),
                    (3, 1, 3),
                    (1, 2, 5),
                    (2, 0, 3),
                    (0, 1, 2),
                ],
            ),
            (
                (2, 1),
                (1, 2),
                &[
                    (3, 3, 1),
                    (1, 4, 2),
                    (4, 1, 2),
                    (2, 2, 2),
                    (0, 3, 4),
                    (3, 0, 4),
                    (1, 1, 7),
                    (0, 0, 7),
                ],
            ),
            (
                (2, 1),
                (2, 2),
                &[
                    (4, 3, 1),
                    (2, 4, 1),
                    (0, 5, 2),
                    (5, 1, 2),
                    (3, 2, 2),
                    (1, 3, 4),
                    (4, 0, 2),
                    (2, 1, 6),
                    (0, 2, 3),
                    (1, 0, 5),
                ],
            ),
            (
                (2, 2),
                (2, 2),
                &[
                    (4, 4, 1),
                    (2, 5, 1),
                    (0, 6, 2),
                    (5, 2, 1),
                    (3, 3, 3),
                    (1, 4, 6),
                    (6, 0, 2),
                    (4, 1, 6),
                    (2, 2, 3),
                    (0, 3, 8),
                    (3, 0, 8),
                    (1, 1, 11),
                    (0, 0, 15),
                ],
            ),
        ],
    }
}

/// The identity lists in the simple-character basis, numbered from 1.
pub fn identities(p: Prime) -> Vec<Identity> {
    identity_data(p)
        .iter()
        .enumerate()
        .map(|(i, ((a, b), (c, d), rhs))| Identity {
            number: i + 1,
            lambda: Weight::new(*a, *b),
            mu: Weight::new(*c, *d),
            rhs: WeylExpr::from_terms(rhs.iter().map(|(x, y, k)| (Weight::new(*x, *y), *k))),
        })
        .collect()
}

/// Pass/fail for one checked line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineReport {
    pub kind: String,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

pub fn check_identity(p: Prime, id: &Identity) -> Result<LineReport> {
    let lhs = product_character(p, id.lambda, id.mu)?;
    let got = characters::into_simple_basis(p, &lhs)?;
    Ok(LineReport {
        kind: "identity".into(),
        label: format!("({}) χ_p{}·χ_p{}", id.number, id.lambda, id.mu),
        passed: got == id.rhs,
        detail: format!("{}", SimpleExpr(&got)),
    })
}

struct SimpleExpr<'a>(&'a WeylExpr);

impl std::fmt::Display for SimpleExpr<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        characters::write_combination(f, self.0.iter().rev(), "χ_p")
    }
}

/// Checks `ch L(λ)·ch L(μ) = Σ k·ch(atom)`.
pub fn check_atoms(p: Prime, lambda: Weight, mu: Weight, atoms: &[(u64, Atom)]) -> Result<bool> {
    Ok(family::atoms_character(p, atoms)? == product_character(p, lambda, mu)?)
}

/// Every table line, its mate, and every pair containing `(0,0)`.
pub fn table_pairs(p: Prime) -> Vec<(String, Weight, Weight)> {
    let mut out = Vec::new();
    for line in family::restricted_table(p) {
        out.push((format!("({})", line.number), line.lambda, line.mu));
        let (x, y) = (line.lambda.flip(), line.mu.flip());
        if (x, y) != (line.lambda, line.mu) && (y, x) != (line.lambda, line.mu) {
            out.push((format!("({})'", line.number), x, y));
        }
    }
    for w in p.restricted_weights() {
        out.push(("(0,0)-pair".to_string(), ZERO, w));
    }
    out
}

pub fn check_table_pair(
    p: Prime,
    label: &str,
    lambda: Weight,
    mu: Weight,
    corrupt: bool,
) -> Result<LineReport> {
    let mut atoms = family::restricted_decompose(p, lambda, mu)?;
    if corrupt {
        atoms[0].0 += 1;
    }
    let passed = check_atoms(p, lambda, mu, &atoms)?;
    let rhs: Vec<String> = atoms
        .iter()
        .map(|(k, a)| {
            if *k == 1 {
                a.to_string()
            } else {
                format!("{k}{a}")
            }
        })
        .collect();
    Ok(LineReport {
        kind: "table".into(),
        label: format!("{label} L{lambda}⊗L{mu}"),
        passed,
        detail: rhs.join(" ⊕ "),
    })
}

/// Runs every table line and identity. With `corrupt`, the first table
/// line is deliberately damaged.
pub fn verify_tables(p: Prime, corrupt: bool) -> Result<Vec<LineReport>> {
    let mut out = Vec::new();
    for (i, (label, l, m)) in table_pairs(p).into_iter().enumerate() {
        out.push(check_table_pair(p, &label, l, m, corrupt && i == 0)?);
    }
    for id in identities(p) {
        out.push(check_identity(p, &id)?);
    }
    Ok(out)
}
