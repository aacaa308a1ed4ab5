//! The finite families of indecomposable summands, the restricted tensor
//! product tables, and the multiplier rule used when resplitting at p=3.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characters::{self, Character};
use crate::error::{Error, Result};
use crate::weights::{self, Flip, Prime, Weight, ZERO};

/// An indecomposable building block.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    T(Weight),
    L(Weight),
    M,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::T(w) => write!(f, "T{w}"),
            Atom::L(w) => write!(f, "L{w}"),
            Atom::M => write!(f, "M"),
        }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Atom {
    type Err = String;

    /// Accepts `M`, `T(a,b)`, `Ta,b`, `L(a,b)`, `La,b`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s == "M" {
            return Ok(Atom::M);
        }
        let (head, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let w: Weight = rest.parse()?;
        match head {
            "T" => Ok(Atom::T(w)),
            "L" => Ok(Atom::L(w)),
            _ => Err(format!("unrecognised atom {s:?}")),
        }
    }
}

impl Flip for Atom {
    fn flip(&self) -> Self {
        match self {
            Atom::T(w) => Atom::T(w.flip()),
            Atom::L(w) => Atom::L(w.flip()),
            Atom::M => Atom::M,
        }
    }
}

impl Atom {
    pub fn weight(&self) -> Option<Weight> {
        match self {
            Atom::T(w) | Atom::L(w) => Some(*w),
            Atom::M => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Atom::T(_) => "T",
            Atom::L(_) => "L",
            Atom::M => "M",
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Atom::T(w) | Atom::L(w) if *w == ZERO)
    }

    /// `L(ν)` rewritten as `T(ν)` whenever the two coincide.
    pub fn normalized(&self, p: Prime) -> Atom {
        match self {
            Atom::L(w) if simple_is_tilting(p, *w) => Atom::T(*w),
            a => *a,
        }
    }
}

fn simple_is_tilting(p: Prime, w: Weight) -> bool {
    w.is_restricted(p) && !(p == Prime::THREE && w == Weight::new(1, 1))
        || (p == Prime::THREE && (w == Weight::new(5, 2) || w == Weight::new(2, 5)))
}

/// A product `m ⊗ a` either stays at the current twist or splits as a base
/// atom at the current twist with a multiplier pushed to the next one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Atom(Atom),
    Factored { base: Atom, push: Atom },
}

impl Flip for Product {
    fn flip(&self) -> Self {
        match self {
            Product::Atom(a) => Product::Atom(a.flip()),
            Product::Factored { base, push } => Product::Factored {
                base: base.flip(),
                push: push.flip(),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomMetadata {
    pub is_tilting: bool,
    pub simple_restricted_socle: bool,
    pub in_f: bool,
    pub in_fprime: bool,
}

type Line = ((i64, i64), (i64, i64), &'static [(u64, Atom)]);

const M: Atom = Atom::M;

/// One entry per table line; mates are generated.
fn table_lines(p: Prime) -> Vec<Line> {
    match p.get() {
        2 => vec![
            ((1, 0), (1, 0), &[(1, T20)]),
            ((1, 0), (0, 1), &[(1, T11), (1, T00)]),
            ((1, 0), (1, 1), &[(1, T21)]),
            ((1, 1), (1, 1), &[(1, T22), (2, T11)]),
        ],
        _ => {
            vec![
                ((1, 0), (1, 0), &[(1, T20), (1, T01)]),
                ((1, 0), (0, 1), &[(1, T11)]),
                ((1, 0), (2, 0), &[(1, T30)]),
                ((1, 0), (1, 1), &[(1, T21), (1, T02)]),
                ((1, 0), (0, 2), &[(1, T12), (1, T01)]),
                ((1, 0), (2, 1), &[(1, T31), (1, T20)]),
                ((1, 0), (1, 2), &[(1, T22), (1, T03)]),
                ((1, 0), (2, 2), &[(1, T32)]),
                ((2, 0), (2, 0), &[(1, T40), (1, T21)]),
                ((2, 0), (1, 1), &[(1, T31), (1, T01)]),
                ((2, 0), (0, 2), &[(1, T22), (1, T11)]),
                ((2, 0), (2, 1), &[(1, T41), (1, T22)]),
                ((2, 0), (1, 2), &[(1, T32), (1, T02), (1, T10)]),
                ((2, 0), (2, 2), &[(1, T42), (1, T23)]),
                ((1, 1), (1, 1), &[(1, T22), (1, T00), (1, M)]),
                ((1, 1), (2, 1), &[(1, T32), (1, T40), (1, T10)]),
                ((1, 1), (2, 2), &[(1, T33), (1, T22)]),
                ((2, 1), (2, 1), &[(1, T42), (1, T50), (1, T23), (1, T31)]),
                ((2, 1), (1, 2), &[(1, T33), (2, T22), (1, T11)]),
                ((2, 1), (2, 2), &[(1, T43), (2, T32), (1, T24)]),
                (
                    (2, 2),
                    (2, 2),
                    &[(1, T44), (1, T33), (1, T52), (1, T25), (3, T22)],
                ),
            ]
        }
    }
}

macro_rules! tconst {
    ($($name:ident = ($a:expr, $b:expr);)*) => {
        $(const $name: Atom = Atom::T(Weight::new($a, $b));)*
    };
}

tconst! {
    T00 = (0, 0); T10 = (1, 0); T01 = (0, 1); T20 = (2, 0); T02 = (0, 2);
    T11 = (1, 1); T30 = (3, 0); T03 = (0, 3); T21 = (2, 1); T12 = (1, 2);
    T31 = (3, 1); T22 = (2, 2); T32 = (3, 2); T23 = (2, 3); T40 = (4, 0);
    T41 = (4, 1); T42 = (4, 2); T24 = (2, 4); T50 = (5, 0); T33 = (3, 3);
    T43 = (4, 3); T44 = (4, 4); T52 = (5, 2); T25 = (2, 5); T13 = (1, 3);
}

/// A table line as stored: the pair and its right-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableLine {
    pub number: usize,
    pub lambda: Weight,
    pub mu: Weight,
    pub atoms: Vec<(u64, Atom)>,
}

/// The literal table lines, numbered from 1, without mates.
pub fn restricted_table(p: Prime) -> Vec<TableLine> {
    table_lines(p)
        .into_iter()
        .enumerate()
        .map(|(i, ((a, b), (c, d), atoms))| TableLine {
            number: i + 1,
            lambda: Weight::new(a, b),
            mu: Weight::new(c, d),
            atoms: atoms.to_vec(),
        })
        .collect()
}

/// `L(λ)⊗L(μ)` for restricted `λ, μ` as a multiset of atoms, in table
/// order.
pub fn restricted_decompose(p: Prime, lambda: Weight, mu: Weight) -> Result<Vec<(u64, Atom)>> {
    for w in [lambda, mu] {
        if !w.is_restricted(p) {
            return Err(Error::NotRestricted {
                p: p.get(),
                weight: w,
            });
        }
    }
    let (lo, hi) = if (lambda.a + lambda.b, lambda.a) <= (mu.a + mu.b, mu.a) {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    if lo == ZERO {
        let atom = if p == Prime::THREE && hi == Weight::new(1, 1) {
            Atom::L(hi)
        } else {
            Atom::T(hi)
        };
        return Ok(vec![(1, atom)]);
    }
    for line in restricted_table(p) {
        let (x, y) = (line.lambda, line.mu);
        if (x, y) == (lambda, mu) || (y, x) == (lambda, mu) {
            return Ok(line.atoms);
        }
        if (x.flip(), y.flip()) == (lambda, mu) || (y.flip(), x.flip()) == (lambda, mu) {
            return Ok(line.atoms.iter().map(|(k, a)| (*k, a.flip())).collect());
        }
    }
    unreachable!("restricted table covers every pair")
}

fn extra_tiltings() -> [Weight; 4] {
    [
        Weight::new(6, 0),
        Weight::new(0, 6),
        Weight::new(5, 1),
        Weight::new(1, 5),
    ]
}

/// Members of the resplit family at p=3 that are tilting.
fn in_fprime_tilting(w: Weight) -> bool {
    (0..=4).contains(&w.a) && (0..=4).contains(&w.b)
        || [Weight::new(5, 0), Weight::new(0, 5)].contains(&w)
        || extra_tiltings().contains(&w)
}

/// `m ⊗ a` for a multiplier `m ∈ {T(1,0), T(0,1)}` at p=3. The `T(0,1)`
/// case is the mirror image of the `T(1,0)` one, order included.
pub fn multiplier_product(p: Prime, m: Atom, a: Atom) -> Result<Vec<(u64, Product)>> {
    if p != Prime::THREE {
        return Err(Error::UnsupportedPrime(p.get()));
    }
    if m == T01 {
        let v = multiplier_product(p, T10, a.flip())?;
        return Ok(v.into_iter().map(|(k, x)| (k, x.flip())).collect());
    }
    if m != T10 {
        return Err(Error::InvalidMultiplier(m.to_string()));
    }
    let atoms = |v: Vec<(u64, Atom)>| v.into_iter().map(|(k, x)| (k, Product::Atom(x))).collect();
    let a = a.normalized(p);
    match a {
        Atom::M => return Ok(atoms(vec![(1, T40), (1, T13), (1, T10)])),
        Atom::L(w) if w == Weight::new(1, 1) => return Ok(atoms(vec![(1, T21), (1, T02)])),
        Atom::L(w) => return Err(Error::UnknownAtom(Atom::L(w).to_string(), p.get())),
        Atom::T(w) if w == ZERO => return Ok(vec![(1, Product::Atom(m))]),
        Atom::T(_) => {}
    }
    let Atom::T(aw) = a else { unreachable!() };
    let c = characters::multiply(
        &*characters::tilting_character(p, m.weight().unwrap())?,
        &*characters::tilting_character(p, aw)?,
    );
    let mut out = Vec::new();
    for (k, nu) in characters::split_tilting(p, &c)? {
        let prod = if in_fprime_tilting(nu) {
            Product::Atom(Atom::T(nu))
        } else {
            let d = weights::tilting_digits(p, nu)?;
            match d.as_slice() {
                [base, push] if [Weight::new(1, 0), Weight::new(0, 1)].contains(push) => {
                    let base = if *base == Weight::new(2, 2) {
                        Atom::L(*base)
                    } else {
                        Atom::T(*base)
                    };
                    Product::Factored {
                        base,
                        push: Atom::T(*push),
                    }
                }
                _ => {
                    return Err(Error::UnknownTiltingCharacter {
                        p: p.get(),
                        weight: nu,
                    })
                }
            }
        };
        out.push((k as u64, prod));
    }
    Ok(out)
}

/// Membership and socle data for an atom.
pub fn atom_metadata(p: Prime, a: Atom) -> Result<AtomMetadata> {
    let unknown = || Error::UnknownAtom(a.to_string(), p.get());
    let a = a.normalized(p);
    match (p.get(), a) {
        (2, Atom::T(w)) if (0..=2).contains(&w.a) && (0..=2).contains(&w.b) => Ok(AtomMetadata {
            is_tilting: true,
            simple_restricted_socle: true,
            in_f: true,
            in_fprime: true,
        }),
        (3, Atom::M) => Ok(AtomMetadata {
            is_tilting: false,
            simple_restricted_socle: true,
            in_f: true,
            in_fprime: true,
        }),
        (3, Atom::L(w)) if w == Weight::new(1, 1) => Ok(AtomMetadata {
            is_tilting: false,
            simple_restricted_socle: true,
            in_f: true,
            in_fprime: true,
        }),
        (3, Atom::T(w)) if w == Weight::new(5, 2) || w == Weight::new(2, 5) => Ok(AtomMetadata {
            is_tilting: true,
            simple_restricted_socle: false,
            in_f: true,
            in_fprime: false,
        }),
        (3, Atom::T(w)) if in_fprime_tilting(w) => Ok(AtomMetadata {
            is_tilting: true,
            simple_restricted_socle: true,
            in_f: !extra_tiltings().contains(&w),
            in_fprime: true,
        }),
        _ => Err(unknown()),
    }
}

/// Every atom of the family for `p`.
pub fn family_atoms(p: Prime) -> Vec<Atom> {
    let mut out = Vec::new();
    let n = if p == Prime::TWO { 2 } else { 5 };
    for a in 0..=n {
        for b in 0..=n {
            let x = Atom::T(Weight::new(a, b));
            if atom_metadata(p, x).is_ok() {
                out.push(x);
            }
        }
    }
    if p == Prime::THREE {
        out.extend([Atom::L(Weight::new(1, 1)), Atom::M]);
        out.extend(extra_tiltings().map(Atom::T));
    }
    out.sort();
    out.dedup();
    out
}

/// Σ multiplicity · character.
pub fn atoms_character(p: Prime, atoms: &[(u64, Atom)]) -> Result<Character> {
    let mut c = Character::zero();
    for (k, a) in atoms {
        c.add_scaled(&*characters::family_character(p, a)?, *k as i64);
    }
    Ok(c)
}
