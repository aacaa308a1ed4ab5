//! Formal characters: Weyl characters by Freudenthal's recursion, simple
//! characters by Steinberg's tensor product theorem, tilting characters
//! from base tables and the twisted tensor product theorem.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::Atom;
use crate::weights::{self, Flip, Prime, Weight, ALPHA1, ALPHA2, RHO, ZERO};

/// A finite `Z`-combination of formal exponentials `e(μ)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl Character {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(w: Weight) -> Self {
        Self::from_terms([(w, 1)])
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut c = Character::zero();
        for (w, k) in it {
            c.add_term(w, k);
        }
        c
    }

    pub fn add_term(&mut self, w: Weight, k: i64) {
        if k == 0 {
            return;
        }
        let e = self.terms.entry(w).or_insert(0);
        *e += k;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    /// `self += k·other`.
    pub fn add_scaled(&mut self, other: &Character, k: i64) {
        for (w, m) in &other.terms {
            self.add_term(*w, k * m);
        }
    }

    pub fn scaled(&self, k: i64) -> Character {
        let mut c = Character::zero();
        c.add_scaled(self, k);
        c
    }

    pub fn get(&self, w: Weight) -> i64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(|(w, k)| (*w, *k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Value at `e(μ) = 1`.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn highest(&self) -> Option<Weight> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_weyl_invariant(&self) -> bool {
        self.terms.iter().all(|(w, k)| {
            self.get(weights::reflect(1, *w)) == *k && self.get(weights::reflect(2, *w)) == *k
        })
    }

    pub fn dominant_part(&self) -> BTreeMap<Weight, i64> {
        self.iter().filter(|(w, _)| w.is_dominant()).collect()
    }

    pub fn map_weights(&self, f: impl Fn(Weight) -> Weight) -> Character {
        Character::from_terms(self.iter().map(|(w, k)| (f(w), k)))
    }
}

impl Flip for Character {
    fn flip(&self) -> Self {
        self.map_weights(|w| w.flip())
    }
}

impl std::ops::Add for &Character {
    type Output = Character;
    fn add(self, o: &Character) -> Character {
        let mut c = self.clone();
        c.add_scaled(o, 1);
        c
    }
}

impl std::ops::Sub for &Character {
    type Output = Character;
    fn sub(self, o: &Character) -> Character {
        let mut c = self.clone();
        c.add_scaled(o, -1);
        c
    }
}

impl std::ops::Mul for &Character {
    type Output = Character;
    fn mul(self, o: &Character) -> Character {
        multiply(self, o)
    }
}

fn bounds(c: &Character) -> (i64, i64, i64, i64) {
    let mut b = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for (w, _) in c.iter() {
        b.0 = b.0.min(w.a);
        b.1 = b.1.max(w.a);
        b.2 = b.2.min(w.b);
        b.3 = b.3.max(w.b);
    }
    b
}

/// Convolution product.
pub fn multiply(c1: &Character, c2: &Character) -> Character {
    if c1.is_zero() || c2.is_zero() {
        return Character::zero();
    }
    let (a0, a1, b0, b1) = bounds(c1);
    let (x0, x1, y0, y1) = bounds(c2);
    let width = (a1 - a0 + x1 - x0 + 1) as usize;
    let height = (b1 - b0 + y1 - y0 + 1) as usize;
    let mut grid = vec![0i64; width * height];
    let left: Vec<(usize, i64)> = c1
        .iter()
        .map(|(w, k)| (((w.b - b0) as usize) * width + (w.a - a0) as usize, k))
        .collect();
    for (w, k) in c2.iter() {
        let off = ((w.b - y0) as usize) * width + (w.a - x0) as usize;
        for &(i, m) in &left {
            grid[i + off] += k * m;
        }
    }
    let mut out = BTreeMap::new();
    for (i, &k) in grid.iter().enumerate() {
        if k != 0 {
            let a = (i % width) as i64 + a0 + x0;
            let b = (i / width) as i64 + b0 + y0;
            out.insert(Weight::new(a, b), k);
        }
    }
    Character { terms: out }
}

/// `c^[j]`: every weight scaled by `p^j`.
pub fn frobenius_twist(c: &Character, j: u32, p: Prime) -> Character {
    let s = p.as_i64().pow(j);
    c.map_weights(|w| w.scale(s))
}

/// Three times the W-invariant form in the ϖ basis.
fn form3(x: Weight, y: Weight) -> i64 {
    2 * x.a * y.a + x.a * y.b + x.b * y.a + 2 * x.b * y.b
}

/// Dominant weights `μ ≤ λ`.
pub fn dominant_weights_below(lambda: Weight) -> Vec<Weight> {
    let n = lambda.a + lambda.b;
    let mut out = Vec::new();
    for x in 0..=n {
        for y in 0..=n {
            let mu = lambda - ALPHA1.scale(x) - ALPHA2.scale(y);
            if mu.is_dominant() {
                out.push(mu);
            }
        }
    }
    out.sort();
    out
}

fn freudenthal(lambda: Weight) -> BTreeMap<Weight, i64> {
    let positive = [ALPHA1, ALPHA2, ALPHA1 + ALPHA2];
    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    let top = form3(lambda + RHO, lambda + RHO);
    for mu in dominant_weights_below(lambda).into_iter().rev() {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut rhs = 0;
        for alpha in positive {
            let mut k = 1;
            loop {
                let nu = mu + alpha.scale(k);
                let Some(m) = mult.get(&nu.dominant_conjugate()) else {
                    break;
                };
                rhs += 2 * m * form3(nu, alpha);
                k += 1;
            }
        }
        let denom = top - form3(mu + RHO, mu + RHO);
        debug_assert!(denom > 0 && rhs % denom == 0);
        mult.insert(mu, rhs / denom);
    }
    mult
}

fn weyl_cache() -> &'static RwLock<HashMap<Weight, Arc<Character>>> {
    static CACHE: OnceLock<RwLock<HashMap<Weight, Arc<Character>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ(λ) = ch Δ(λ)`.
pub fn weyl_character(lambda: Weight) -> Result<Arc<Character>> {
    let lambda = lambda.check_dominant()?;
    if let Some(c) = weyl_cache().read().unwrap().get(&lambda) {
        return Ok(c.clone());
    }
    let mut c = Character::zero();
    for (mu, m) in freudenthal(lambda) {
        for w in weights::weyl_orbit(mu) {
            c.add_term(w, m);
        }
    }
    let c = Arc::new(c);
    weyl_cache().write().unwrap().insert(lambda, c.clone());
    Ok(c)
}

pub fn weyl_dimension(lambda: Weight) -> i64 {
    (lambda.a + 1) * (lambda.b + 1) * (lambda.a + lambda.b + 2) / 2
}

/// An integer combination of Weyl characters, keyed by highest weight.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylExpr(pub BTreeMap<Weight, i64>);

impl WeylExpr {
    pub fn from_terms(it: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut e = WeylExpr::default();
        for (w, k) in it {
            e.add_term(w, k);
        }
        e
    }

    pub fn add_term(&mut self, w: Weight, k: i64) {
        if k == 0 {
            return;
        }
        let e = self.0.entry(w).or_insert(0);
        *e += k;
        if *e == 0 {
            self.0.remove(&w);
        }
    }

    pub fn get(&self, w: Weight) -> i64 {
        self.0.get(&w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (Weight, i64)> + '_ {
        self.0.iter().map(|(w, k)| (*w, *k))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i64 {
        self.iter().map(|(w, k)| k * weyl_dimension(w)).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|k| *k >= 0)
    }

    pub fn character(&self) -> Result<Character> {
        let mut c = Character::zero();
        for (w, k) in self.iter() {
            c.add_scaled(&*weyl_character(w)?, k);
        }
        Ok(c)
    }
}

impl Flip for WeylExpr {
    fn flip(&self) -> Self {
        WeylExpr::from_terms(self.iter().map(|(w, k)| (w.flip(), k)))
    }
}

impl fmt::Display for WeylExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.iter().rev(), "χ")
    }
}

impl fmt::Debug for WeylExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn write_combination(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Weight, i64)>,
    symbol: &str,
) -> fmt::Result {
    let mut first = true;
    for (w, k) in terms {
        let sign = if k < 0 {
            "-"
        } else if first {
            ""
        } else {
            "+"
        };
        let mag = k.abs();
        if !first {
            write!(f, " ")?;
        }
        write!(f, "{sign}")?;
        if !first {
            write!(f, " ")?;
        }
        if mag != 1 {
            write!(f, "{mag}")?;
        }
        write!(f, "{symbol}{w}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Greedy expansion in the Weyl basis, peeling off the largest weight in
/// the `(a+b, a)` order.
pub fn into_weyl_basis(c: &Character) -> Result<WeylExpr> {
    let mut rest = c.clone();
    let mut out = WeylExpr::default();
    while let Some(top) = rest.highest() {
        if !top.is_dominant() {
            return Err(Error::NonInvariantInput(top));
        }
        let k = rest.get(top);
        out.add_term(top, k);
        rest.add_scaled(&*weyl_character(top)?, -k);
    }
    Ok(out)
}

fn restricted_simple_expr(p: Prime, lambda: Weight) -> WeylExpr {
    if p == Prime::THREE && lambda == Weight::new(1, 1) {
        WeylExpr::from_terms([(lambda, 1), (ZERO, -1)])
    } else {
        WeylExpr::from_terms([(lambda, 1)])
    }
}

type ByWeight<V> = HashMap<(Prime, Weight), V>;

fn simple_cache() -> &'static RwLock<ByWeight<Arc<Character>>> {
    static CACHE: OnceLock<RwLock<ByWeight<Arc<Character>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ_p(λ) = ch L(λ)` as the product of twisted restricted simple characters.
pub fn simple_character(p: Prime, lambda: Weight) -> Result<Arc<Character>> {
    let digits = weights::steinberg_digits(p, lambda)?;
    if let Some(c) = simple_cache().read().unwrap().get(&(p, lambda)) {
        return Ok(c.clone());
    }
    let mut c = Character::monomial(ZERO);
    for (j, d) in digits.iter().enumerate() {
        let r = restricted_simple_expr(p, *d).character()?;
        c = multiply(&c, &frobenius_twist(&r, j as u32, p));
    }
    let c = Arc::new(c);
    simple_cache()
        .write()
        .unwrap()
        .insert((p, lambda), c.clone());
    Ok(c)
}

/// Expansion of a character in the basis of simple characters.
pub fn into_simple_basis(p: Prime, c: &Character) -> Result<WeylExpr> {
    let mut rest = c.clone();
    let mut out = WeylExpr::default();
    while let Some(top) = rest.highest() {
        if !top.is_dominant() {
            return Err(Error::NonInvariantInput(top));
        }
        let k = rest.get(top);
        out.add_term(top, k);
        rest.add_scaled(&*simple_character(p, top)?, -k);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Weyl module structure

/// Composition factors of a Weyl module, top first, together with its
/// simple socle. Restricted weights with `Δ = L` are omitted.
pub fn weyl_module_factors(p: Prime, lambda: Weight) -> Option<(Vec<Weight>, Weight)> {
    type Row = (&'static [(i64, i64)], (i64, i64));
    let raw: &[Row] = match p.get() {
        2 => &[
            (&[(2, 0), (0, 1)], (0, 1)),
            (&[(3, 0), (0, 0)], (0, 0)),
            (&[(2, 1), (0, 2), (1, 0)], (1, 0)),
            (&[(2, 2), (0, 3), (3, 0), (0, 0)], (0, 0)),
        ],
        _ => &[
            (&[(1, 1), (0, 0)], (0, 0)),
            (&[(3, 0), (1, 1)], (1, 1)),
            (&[(4, 0), (0, 2)], (0, 2)),
            (&[(3, 1), (1, 2)], (1, 2)),
            (&[(5, 0), (0, 1)], (0, 1)),
            (&[(5, 1), (1, 0)], (1, 0)),
            (&[(3, 2), (1, 3), (2, 1)], (2, 1)),
            (&[(6, 0), (4, 1), (0, 0)], (0, 0)),
            (&[(4, 2), (0, 4), (2, 0)], (2, 0)),
            (&[(6, 2), (4, 3), (1, 0), (5, 1)], (5, 1)),
            (&[(4, 1), (0, 3), (0, 0), (3, 0), (1, 1)], (1, 1)),
            (&[(4, 3), (1, 0), (0, 5), (5, 1), (1, 0)], (1, 0)),
            (
                &[
                    (3, 3),
                    (0, 0),
                    (1, 4),
                    (4, 1),
                    (0, 3),
                    (0, 0),
                    (3, 0),
                    (1, 1),
                ],
                (1, 1),
            ),
            (
                &[
                    (4, 4),
                    (3, 3),
                    (1, 1),
                    (0, 6),
                    (0, 3),
                    (0, 0),
                    (3, 0),
                    (6, 0),
                    (1, 4),
                    (4, 1),
                    (0, 0),
                ],
                (0, 0),
            ),
        ],
    };
    let w = |(a, b): (i64, i64)| Weight::new(a, b);
    for (factors, socle) in raw {
        let head = w(factors[0]);
        let fs: Vec<Weight> = factors.iter().map(|x| w(*x)).collect();
        if head == lambda {
            return Some((fs, w(*socle)));
        }
        if head.flip() == lambda {
            return Some((fs.flip(), w(*socle).flip()));
        }
    }
    None
}

/// Weights whose Weyl module structure is tabulated (one per mate pair).
pub fn tabulated_weyl_modules(p: Prime) -> Vec<Weight> {
    let mut out = BTreeSet::new();
    for a in 0..8 {
        for b in 0..8 {
            let w = Weight::new(a, b);
            if weyl_module_factors(p, w).is_some() {
                out.insert(w);
            }
        }
    }
    out.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Tilting characters

/// Where a tilting character came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "paper-table")]
    BaseTable,
    #[serde(rename = "donkin-digits")]
    Digits,
    #[serde(rename = "derived-by-convention")]
    Convention,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::BaseTable => "paper-table",
            Provenance::Digits => "donkin-digits",
            Provenance::Convention => "derived-by-convention",
        })
    }
}

type RawExpr = &'static [(i64, i64, i64)];

fn base_table_raw(p: Prime) -> &'static [((i64, i64), RawExpr)] {
    match p.get() {
        2 => &[
            ((0, 0), &[(0, 0, 1)]),
            ((1, 0), &[(1, 0, 1)]),
            ((1, 1), &[(1, 1, 1)]),
            ((2, 0), &[(2, 0, 1), (0, 1, 1)]),
            ((2, 1), &[(2, 1, 1), (0, 2, 1), (1, 0, 1)]),
            ((2, 2), &[(2, 2, 1), (3, 0, 1), (0, 3, 1), (0, 0, 1)]),
        ],
        _ => &[
            ((0, 0), &[(0, 0, 1)]),
            ((1, 0), &[(1, 0, 1)]),
            ((2, 0), &[(2, 0, 1)]),
            ((2, 1), &[(2, 1, 1)]),
            ((2, 2), &[(2, 2, 1)]),
            ((5, 2), &[(5, 2, 1)]),
            ((1, 1), &[(1, 1, 1), (0, 0, 1)]),
            ((3, 0), &[(3, 0, 1), (1, 1, 1)]),
            ((4, 0), &[(4, 0, 1), (0, 2, 1)]),
            ((3, 1), &[(3, 1, 1), (1, 2, 1)]),
            ((5, 0), &[(5, 0, 1), (0, 1, 1)]),
            ((3, 2), &[(3, 2, 1), (1, 3, 1), (2, 1, 1)]),
            ((4, 1), &[(4, 1, 1), (3, 0, 1), (0, 3, 1), (1, 1, 1)]),
            ((4, 2), &[(4, 2, 1), (0, 4, 1), (2, 0, 1)]),
            (
                (3, 3),
                &[
                    (3, 3, 1),
                    (4, 1, 1),
                    (1, 4, 1),
                    (3, 0, 1),
                    (0, 3, 1),
                    (1, 1, 1),
                ],
            ),
            ((4, 3), &[(4, 3, 1), (5, 1, 1), (0, 5, 1), (1, 0, 1)]),
            (
                (4, 4),
                &[
                    (4, 4, 1),
                    (6, 0, 1),
                    (0, 6, 1),
                    (3, 3, 1),
                    (4, 1, 1),
                    (1, 4, 1),
                    (1, 1, 1),
                    (0, 0, 1),
                ],
            ),
        ],
    }
}

/// The base table entry for `T(ν)`, symmetric mates included.
pub fn base_tilting_expr(p: Prime, nu: Weight) -> Option<WeylExpr> {
    for ((a, b), raw) in base_table_raw(p) {
        let head = Weight::new(*a, *b);
        let e = WeylExpr::from_terms(raw.iter().map(|(x, y, k)| (Weight::new(*x, *y), *k)));
        if head == nu {
            return Some(e);
        }
        if head.flip() == nu {
            return Some(e.flip());
        }
    }
    None
}

/// All highest weights in the base table, mates included.
pub fn base_tilting_weights(p: Prime) -> Vec<Weight> {
    let mut s = BTreeSet::new();
    for ((a, b), _) in base_table_raw(p) {
        s.insert(Weight::new(*a, *b));
        s.insert(Weight::new(*b, *a));
    }
    s.into_iter().collect()
}

/// Weights whose tilting character is fixed by convention rather than
/// tabulated: `(6,0)`, `(5,1)` and their mates at p=3.
pub fn convention_weights(p: Prime) -> Vec<Weight> {
    if p == Prime::THREE {
        vec![
            Weight::new(6, 0),
            Weight::new(0, 6),
            Weight::new(5, 1),
            Weight::new(1, 5),
        ]
    } else {
        Vec::new()
    }
}

/// `T(1,0)⊗T(5,0)` seeds `T(6,0)`; `T(1,0)⊗T(4,1)` seeds `T(5,1)`.
/// Known tilting characters are peeled off largest dimension first,
/// skipping the one headed by the socle of `Δ(ν)`, which must stay inside
/// `T(ν)` by self-duality.
fn convention_expr(p: Prime, nu: Weight) -> Option<WeylExpr> {
    if p != Prime::THREE {
        return None;
    }
    let (seed, flipped) = match (nu.a, nu.b) {
        (6, 0) => (Weight::new(5, 0), false),
        (5, 1) => (Weight::new(4, 1), false),
        (0, 6) => (Weight::new(5, 0), true),
        (1, 5) => (Weight::new(4, 1), true),
        _ => return None,
    };
    let target = if flipped { nu.flip() } else { nu };
    let x = base_tilting_expr(p, Weight::new(1, 0))?.character().ok()?;
    let y = base_tilting_expr(p, seed)?.character().ok()?;
    let mut rest = into_weyl_basis(&multiply(&x, &y)).ok()?;
    let socle = weyl_module_factors(p, target).map(|(_, s)| s);
    let mut candidates: Vec<(i64, Weight, WeylExpr)> = base_tilting_weights(p)
        .into_iter()
        .filter(|w| *w != target && Some(*w) != socle)
        .filter_map(|w| base_tilting_expr(p, w).map(|e| (e.dim(), w, e)))
        .collect();
    candidates.sort_by_key(|c| std::cmp::Reverse((c.0, c.1)));
    for (_, _, e) in &candidates {
        loop {
            let mut trial = rest.clone();
            for (w, k) in e.iter() {
                trial.add_term(w, -k);
            }
            if trial.is_nonnegative() && trial.get(target) == 1 {
                rest = trial;
            } else {
                break;
            }
        }
    }
    Some(if flipped { rest.flip() } else { rest })
}

/// One entry of the derived-tilting-character cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingRecord {
    pub p: Prime,
    pub weight: Weight,
    pub weyl_multiplicities: Vec<(Weight, i64)>,
    pub provenance: Provenance,
}

#[derive(Default)]
struct TiltingStore {
    chars: RwLock<ByWeight<(Arc<Character>, Provenance)>>,
    log: Mutex<Vec<(Prime, Weight)>>,
}

fn tilting_store() -> &'static TiltingStore {
    static STORE: OnceLock<TiltingStore> = OnceLock::new();
    STORE.get_or_init(Default::default)
}

/// `ch T(ν)` with its provenance.
pub fn tilting_character_with_provenance(
    p: Prime,
    nu: Weight,
) -> Result<(Arc<Character>, Provenance)> {
    let nu = nu.check_dominant()?;
    let store = tilting_store();
    if let Some(hit) = store.chars.read().unwrap().get(&(p, nu)) {
        return Ok(hit.clone());
    }
    let (c, prov) = if let Some(e) = base_tilting_expr(p, nu) {
        (e.character()?, Provenance::BaseTable)
    } else if let Some(e) = convention_expr(p, nu) {
        (e.character()?, Provenance::Convention)
    } else {
        let digits = weights::tilting_digits(p, nu)?;
        if digits.len() < 2 {
            return Err(Error::UnknownTiltingCharacter {
                p: p.get(),
                weight: nu,
            });
        }
        let mut c = Character::monomial(ZERO);
        for (j, d) in digits.iter().enumerate() {
            let (t, _) = tilting_character_with_provenance(p, *d)?;
            c = multiply(&c, &frobenius_twist(&t, j as u32, p));
        }
        (c, Provenance::Digits)
    };
    let entry = (Arc::new(c), prov);
    let mut map = store.chars.write().unwrap();
    if let std::collections::hash_map::Entry::Vacant(v) = map.entry((p, nu)) {
        v.insert(entry.clone());
        store.log.lock().unwrap().push((p, nu));
    }
    Ok(entry)
}

pub fn tilting_character(p: Prime, nu: Weight) -> Result<Arc<Character>> {
    tilting_character_with_provenance(p, nu).map(|(c, _)| c)
}

pub fn tilting_weyl_expr(p: Prime, nu: Weight) -> Result<WeylExpr> {
    match base_tilting_expr(p, nu).or_else(|| convention_expr(p, nu)) {
        Some(e) => Ok(e),
        None => into_weyl_basis(&*tilting_character(p, nu)?),
    }
}

/// Records for every non-table tilting character computed so far, in
/// order of first computation.
pub fn derived_tilting_records() -> Result<Vec<TiltingRecord>> {
    let keys: Vec<(Prime, Weight)> = tilting_store().log.lock().unwrap().clone();
    let mut out = Vec::new();
    for (p, w) in keys {
        let (_, prov) = tilting_character_with_provenance(p, w)?;
        if prov == Provenance::BaseTable {
            continue;
        }
        out.push(TiltingRecord {
            p,
            weight: w,
            weyl_multiplicities: tilting_weyl_expr(p, w)?.iter().collect(),
            provenance: prov,
        });
    }
    Ok(out)
}

/// Checks cached records against fresh computation.
pub fn check_tilting_records(records: &[TiltingRecord]) -> Result<()> {
    for r in records {
        let (_, prov) = tilting_character_with_provenance(r.p, r.weight)?;
        let expr = tilting_weyl_expr(r.p, r.weight)?;
        let stored = WeylExpr::from_terms(r.weyl_multiplicities.iter().copied());
        if prov != r.provenance || expr != stored {
            return Err(Error::Cache(format!(
                "stale entry for T{} at p={}",
                r.weight, r.p
            )));
        }
    }
    Ok(())
}

/// Character of a family atom.
pub fn family_character(p: Prime, a: &Atom) -> Result<Arc<Character>> {
    match a {
        Atom::T(w) => tilting_character(p, *w),
        Atom::L(w) => simple_character(p, *w),
        Atom::M => {
            if p != Prime::THREE {
                return Err(Error::UnknownAtom("M".into(), p.get()));
            }
            static M: OnceLock<Arc<Character>> = OnceLock::new();
            Ok(M.get_or_init(|| {
                let e = WeylExpr::from_terms([
                    (Weight::new(3, 0), 1),
                    (Weight::new(0, 3), 1),
                    (ZERO, 1),
                ]);
                Arc::new(e.character().expect("dominant"))
            })
            .clone())
        }
    }
}

/// `ch T((p-1)ρ + λ) = ch St · Σ_{ν ∈ Wλ} e(ν)` for `a+b ≤ p`.
pub fn donkin_restricted_tilting_char(p: Prime, lambda: Weight) -> Result<Character> {
    let lambda = lambda.check_dominant()?;
    if lambda.a + lambda.b > p.as_i64() {
        return Err(Error::DonkinPrecondition {
            p: p.get(),
            weight: lambda,
        });
    }
    let orbit = Character::from_terms(weights::weyl_orbit(lambda).into_iter().map(|w| (w, 1)));
    Ok(multiply(&*simple_character(p, p.steinberg())?, &orbit))
}

/// `(T((p-1)ρ+λ+pμ) : ∇(ν)) = Σ_{ξ ∈ N(ν)} (T(μ) : ∇(ξ))` where
/// `N(ν) = {ξ dominant : ν+ρ-p(ξ+ρ) ∈ Wλ}`.
pub fn donkin_delta_multiplicities(
    p: Prime,
    lambda: Weight,
    mu: Weight,
    nu: Weight,
) -> Result<i64> {
    let lambda = lambda.check_dominant()?;
    let mu = mu.check_dominant()?;
    let nu = nu.check_dominant()?;
    if lambda.a + lambda.b > p.as_i64() {
        return Err(Error::DonkinPrecondition {
            p: p.get(),
            weight: lambda,
        });
    }
    let q = p.as_i64();
    let mut xis = BTreeSet::new();
    for o in weights::weyl_orbit(lambda) {
        let d = nu + RHO - o;
        if d.a % q == 0 && d.b % q == 0 {
            let xi = Weight::new(d.a / q, d.b / q) - RHO;
            if xi.is_dominant() {
                xis.insert(xi);
            }
        }
    }
    let t = tilting_weyl_expr(p, mu)?;
    Ok(xis.into_iter().map(|xi| t.get(xi)).sum())
}

/// Splits a tilting character into indecomposable tilting characters by
/// peeling off the highest Weyl term.
pub fn split_tilting(p: Prime, c: &Character) -> Result<Vec<(i64, Weight)>> {
    let mut rest = into_weyl_basis(c)?;
    let mut out = Vec::new();
    while let Some((&top, &k)) = rest.0.iter().next_back() {
        if k < 0 {
            return Err(Error::TiltingSplit(format!(
                "negative coefficient at χ{top}"
            )));
        }
        let t = tilting_weyl_expr(p, top)?;
        for (w, m) in t.iter() {
            rest.add_term(w, -k * m);
        }
        out.push((k, top));
    }
    Ok(out)
}
