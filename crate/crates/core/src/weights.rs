//! SL3 weights in the fundamental-weight basis, Weyl group action,
//! p-adic digit expansions and the linkage principle.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weight `a·ϖ1 + b·ϖ2`.
///
/// Ordered by `(a+b, a)`, a linear extension of the dominance order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl From<[i64; 2]> for Weight {
    fn from(v: [i64; 2]) -> Self {
        Weight::new(v[0], v[1])
    }
}

impl From<Weight> for [i64; 2] {
    fn from(w: Weight) -> Self {
        [w.a, w.b]
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a + self.b, self.a).cmp(&(other.a + other.b, other.a))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl std::str::FromStr for Weight {
    type Err = String;

    /// Parses `"a,b"`, optionally wrapped in parentheses.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut it = t.split(',');
        let (Some(x), Some(y), None) = (it.next(), it.next(), it.next()) else {
            return Err(format!("expected a weight of the form a,b, got {s:?}"));
        };
        let a = x.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"))?;
        let b = y.trim().parse::<i64>().map_err(|e| format!("{s:?}: {e}"))?;
        Ok(Weight::new(a, b))
    }
}

pub const ZERO: Weight = Weight { a: 0, b: 0 };
pub const RHO: Weight = Weight { a: 1, b: 1 };
pub const ALPHA1: Weight = Weight { a: 2, b: -1 };
pub const ALPHA2: Weight = Weight { a: -1, b: 2 };

impl Weight {
    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    pub fn is_dominant(&self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight::new(self.a * k, self.b * k)
    }

    pub fn flip(&self) -> Weight {
        Weight::new(self.b, self.a)
    }

    pub fn is_restricted(&self, p: Prime) -> bool {
        let m = p.get() as i64 - 1;
        (0..=m).contains(&self.a) && (0..=m).contains(&self.b)
    }

    pub fn check_dominant(self) -> Result<Weight> {
        if self.is_dominant() {
            Ok(self)
        } else {
            Err(Error::NotDominant(self))
        }
    }

    /// Membership in the root lattice `Zα1 + Zα2`.
    pub fn in_root_lattice(&self) -> bool {
        (self.a - self.b).rem_euclid(3) == 0
    }

    /// The dominant representative of the Weyl orbit.
    pub fn dominant_conjugate(&self) -> Weight {
        let mut w = *self;
        loop {
            if w.a < 0 {
                w = reflect(1, w);
            } else if w.b < 0 {
                w = reflect(2, w);
            } else {
                return w;
            }
        }
    }
}

/// The two primes this crate handles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);

    pub fn new(p: u32) -> Result<Prime> {
        match p {
            2 | 3 => Ok(Prime(p)),
            _ => Err(Error::UnsupportedPrime(p)),
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn as_i64(self) -> i64 {
        self.0 as i64
    }

    /// `(p-1)ρ`.
    pub fn steinberg(self) -> Weight {
        RHO.scale(self.as_i64() - 1)
    }

    pub fn restricted_weights(self) -> impl Iterator<Item = Weight> {
        let m = self.as_i64();
        (0..m).flat_map(move |a| (0..m).map(move |b| Weight::new(a, b)))
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Prime> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Simple reflection `s_i` for `i ∈ {1, 2}`.
pub fn reflect(i: u8, w: Weight) -> Weight {
    match i {
        1 => Weight::new(-w.a, w.a + w.b),
        2 => Weight::new(w.a + w.b, -w.b),
        _ => panic!("simple root index must be 1 or 2, got {i}"),
    }
}

/// The six Weyl group elements applied to `w`, with their signs.
pub fn weyl_images(w: Weight) -> [(Weight, i64); 6] {
    let s1 = reflect(1, w);
    let s2 = reflect(2, w);
    let s12 = reflect(1, s2);
    let s21 = reflect(2, s1);
    let w0 = reflect(1, s21);
    [(w, 1), (s1, -1), (s2, -1), (s12, 1), (s21, 1), (w0, -1)]
}

pub fn weyl_orbit(w: Weight) -> BTreeSet<Weight> {
    weyl_images(w).iter().map(|(x, _)| *x).collect()
}

/// The diagram automorphism `(a,b) ↦ (b,a)`, lifted to composite values.
pub trait Flip {
    fn flip(&self) -> Self;
}

impl Flip for Weight {
    fn flip(&self) -> Self {
        Weight::flip(self)
    }
}

impl<T: Flip> Flip for Vec<T> {
    fn flip(&self) -> Self {
        self.iter().map(Flip::flip).collect()
    }
}

fn digits_base(p: i64, mut n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Restricted base-p digits `λ = Σ λ^j p^j`; `(0,0)` gives the empty vector.
pub fn steinberg_digits(p: Prime, lambda: Weight) -> Result<Vec<Weight>> {
    let lambda = lambda.check_dominant()?;
    let da = digits_base(p.as_i64(), lambda.a);
    let db = digits_base(p.as_i64(), lambda.b);
    let n = da.len().max(db.len());
    Ok((0..n)
        .map(|j| Weight::new(*da.get(j).unwrap_or(&0), *db.get(j).unwrap_or(&0)))
        .collect())
}

/// Digits for the twisted tensor product theorem for tilting modules.
///
/// Every digit but the last lies in `(p-1)ρ + X1`; the last fails
/// `⟨·,α∨⟩ ≥ p-1` for some simple root. A trailing `(0,0)` is dropped,
/// so `(0,0)` itself gives the empty vector.
pub fn tilting_digits(p: Prime, lambda: Weight) -> Result<Vec<Weight>> {
    let mut rest = lambda.check_dominant()?;
    let q = p.as_i64();
    let mut out = Vec::new();
    while rest.a >= q - 1 && rest.b >= q - 1 {
        let (xa, xb) = (rest.a - (q - 1), rest.b - (q - 1));
        out.push(Weight::new(q - 1 + xa % q, q - 1 + xb % q));
        rest = Weight::new(xa / q, xb / q);
    }
    if rest != ZERO {
        out.push(rest);
    }
    Ok(out)
}

/// `Σ d_j p^j`.
pub fn reconstruct(p: Prime, digits: &[Weight]) -> Weight {
    digits
        .iter()
        .rev()
        .fold(ZERO, |acc, d| acc.scale(p.as_i64()) + *d)
}

/// `μ ∈ W_p · λ`, the affine Weyl group acting by the dot action.
pub fn dot_linked(p: Prime, lambda: Weight, mu: Weight) -> Result<bool> {
    let lambda = lambda.check_dominant()?;
    let mu = mu.check_dominant()?;
    let q = p.as_i64();
    Ok(weyl_images(lambda + RHO).iter().any(|(w, _)| {
        let d = mu + RHO - *w;
        d.a % q == 0 && d.b % q == 0 && Weight::new(d.a / q, d.b / q).in_root_lattice()
    }))
}

/// Partition of `set` into linkage classes, each sorted ascending, classes
/// ordered by their largest element (descending).
pub fn linkage_classes(p: Prime, set: &BTreeSet<Weight>) -> Result<Vec<Vec<Weight>>> {
    let mut classes: Vec<Vec<Weight>> = Vec::new();
    for &w in set.iter().rev() {
        let mut home = None;
        for (i, c) in classes.iter().enumerate() {
            if dot_linked(p, c[0], w)? {
                home = Some(i);
                break;
            }
        }
        match home {
            Some(i) => classes[i].push(w),
            None => classes.push(vec![w]),
        }
    }
    for c in &mut classes {
        c.sort();
    }
    Ok(classes)
}
