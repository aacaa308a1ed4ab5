//! Finite-dimensional quotients `kQ / I` of path algebras.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::quiver::{Path, Presentation, Quiver, Relation};
use crate::rep::{Rep, Sub};

/// Path length at which the reduction gives up.
pub const LENGTH_BOUND: usize = 12;

type Sparse<F> = BTreeMap<usize, F>;

#[derive(Clone, Debug)]
pub struct Algebra<F> {
    pub quiver: Arc<Quiver>,
    pub relations: Vec<Relation>,
    /// Surviving paths, by length and then lexicographically.
    pub basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Normal forms of the eliminated paths shorter than `nilpotency`.
    reductions: HashMap<Path, Vec<(usize, F)>>,
    /// Least `L` with `J^L = 0`.
    pub nilpotency: usize,
    partners: Option<Vec<usize>>,
    pub self_dual: bool,
}

/// Ideal closure inside `kQ / J^(trunc+1)`.
///
/// Paths are ranked shortest first and, within a length, lexicographically
/// larger first; the pivot of a vector is its lowest-ranked path, so the
/// surviving paths of length `i` span `J^i / J^(i+1)`.
struct Closure<'q, F> {
    quiver: &'q Quiver,
    trunc: usize,
    paths: Vec<Path>,
    rank: HashMap<Path, usize>,
    rows: BTreeMap<usize, Sparse<F>>,
}

impl<'q, F: Scalar> Closure<'q, F> {
    fn new(quiver: &'q Quiver, trunc: usize) -> Self {
        let mut paths = quiver.paths_up_to(trunc);
        paths.sort_by(|p, q| {
            (p.len(), Reverse(&p.arrows), p.src).cmp(&(q.len(), Reverse(&q.arrows), q.src))
        });
        let rank = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Closure {
            quiver,
            trunc,
            paths,
            rank,
            rows: BTreeMap::new(),
        }
    }

    fn vector(&self, terms: &[(F, Path)]) -> Sparse<F> {
        let mut v = Sparse::new();
        for (c, p) in terms {
            if p.len() <= self.trunc {
                add_to(&mut v, self.rank[p], c.clone());
            }
        }
        v
    }

    fn reduce(&self, mut v: Sparse<F>) -> Sparse<F> {
        let mut cursor = 0;
        loop {
            let hit = v.range(cursor..).find(|(k, _)| self.rows.contains_key(k));
            let Some((&k, c)) = hit else { break };
            let c = c.clone();
            for (j, x) in &self.rows[&k] {
                add_to(&mut v, *j, -(c.clone() * x.clone()));
            }
            cursor = k + 1;
        }
        v
    }

    /// Adds `v` to the span; returns whether it was new.
    fn insert(&mut self, v: Sparse<F>) -> bool {
        let mut v = self.reduce(v);
        let Some((&p, c)) = v.iter().next() else {
            return false;
        };
        let inv = c.inv();
        for x in v.values_mut() {
            *x = x.clone() * inv.clone();
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                for (j, x) in &v {
                    add_to(row, *j, -(c.clone() * x.clone()));
                }
            }
        }
        self.rows.insert(p, v);
        true
    }

    fn shift(&self, v: &Sparse<F>, a: usize, left: bool) -> Sparse<F> {
        let arrow = self.quiver.arrows[a].clone();
        let mut out = Sparse::new();
        for (k, c) in v {
            let p = &self.paths[*k];
            if p.len() + 1 > self.trunc {
                continue;
            }
            let q = if left {
                if arrow.tgt != p.src {
                    continue;
                }
                let mut arrows = vec![a];
                arrows.extend(&p.arrows);
                Path {
                    src: arrow.src,
                    tgt: p.tgt,
                    arrows,
                }
            } else {
                if arrow.src != p.tgt {
                    continue;
                }
                p.then(self.quiver, a)
            };
            add_to(&mut out, self.rank[&q], c.clone());
        }
        out
    }

    fn close(&mut self, relations: &[Relation]) {
        let mut queue = VecDeque::new();
        for r in relations {
            let terms: Vec<(F, Path)> = r
                .iter()
                .map(|(c, p)| (F::from_i64(*c), p.clone()))
                .collect();
            queue.push_back(self.vector(&terms));
        }
        while let Some(v) = queue.pop_front() {
            let kept = v.clone();
            if self.insert(v) {
                for a in 0..self.quiver.arrows.len() {
                    for left in [false, true] {
                        let w = self.shift(&kept, a, left);
                        if !w.is_empty() {
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
    }

    fn survivors(&self, len: usize) -> impl Iterator<Item = &Path> {
        self.paths
            .iter()
            .enumerate()
            .filter(move |(i, p)| p.len() == len && !self.rows.contains_key(i))
            .map(|(_, p)| p)
    }
}

fn add_to<F: Scalar>(v: &mut Sparse<F>, k: usize, c: F) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k).or_insert_with(F::zero);
    *e = e.clone() + c;
    if e.is_zero() {
        v.remove(&k);
    }
}

impl<F: Scalar> Algebra<F> {
    pub fn build(pres: &Presentation) -> Result<Self> {
        Self::build_with_bound(pres, LENGTH_BOUND)
    }

    pub fn build_with_bound(pres: &Presentation, bound: usize) -> Result<Self> {
        let quiver = pres.quiver()?;
        let relations = pres.checked_relations(&quiver)?;
        for trunc in 1..=bound {
            let mut cl = Closure::<F>::new(&quiver, trunc);
            cl.close(&relations);
            if cl.survivors(trunc).next().is_some() {
                continue;
            }
            return Ok(Self::assemble(Arc::new(quiver.clone()), relations, &cl));
        }
        Err(Error::NonTerminating(bound))
    }

    fn assemble(quiver: Arc<Quiver>, relations: Vec<Relation>, cl: &Closure<F>) -> Self {
        let nilpotency = cl.trunc;
        let mut basis: Vec<Path> = (0..nilpotency)
            .flat_map(|l| cl.survivors(l).cloned())
            .collect();
        basis.sort_by(|p, q| (p.len(), &p.arrows, p.src).cmp(&(q.len(), &q.arrows, q.src)));
        let index: HashMap<Path, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut reductions = HashMap::new();
        for (&k, row) in &cl.rows {
            let p = &cl.paths[k];
            if p.len() >= nilpotency {
                continue;
            }
            let nf: Vec<(usize, F)> = row
                .iter()
                .filter(|(j, _)| **j != k)
                .map(|(j, c)| (index[&cl.paths[*j]], -c.clone()))
                .collect();
            reductions.insert(p.clone(), nf);
        }
        let partners = quiver.partners();
        let mut alg = Algebra {
            quiver,
            relations,
            basis,
            index,
            reductions,
            nilpotency,
            partners,
            self_dual: false,
        };
        alg.self_dual = alg.check_self_dual();
        alg
    }

    fn check_self_dual(&self) -> bool {
        let Some(partner) = &self.partners else {
            return false;
        };
        self.relations.iter().all(|r| {
            let mut acc: Sparse<F> = Sparse::new();
            for (c, p) in r {
                let arrows: Vec<usize> = p.arrows.iter().rev().map(|&a| partner[a]).collect();
                let q = Path {
                    src: p.tgt,
                    tgt: p.src,
                    arrows,
                };
                for (i, x) in self.normal_form(&q) {
                    add_to(&mut acc, i, F::from_i64(*c) * x);
                }
            }
            acc.is_empty()
        })
    }

    pub fn partners(&self) -> Option<&[usize]> {
        self.partners.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Number of basis paths of each length `0..nilpotency`.
    pub fn strata(&self) -> Vec<usize> {
        let mut s = vec![0; self.nilpotency];
        for p in &self.basis {
            s[p.len()] += 1;
        }
        s
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `p` as a combination of basis paths.
    pub fn normal_form(&self, p: &Path) -> Vec<(usize, F)> {
        if p.len() >= self.nilpotency {
            return Vec::new();
        }
        if let Some(&i) = self.index.get(p) {
            return vec![(i, F::one())];
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    /// Product of two basis elements.
    pub fn multiply(&self, i: usize, j: usize) -> Vec<(usize, F)> {
        match self.basis[i].concat(&self.basis[j]) {
            Some(p) => self.normal_form(&p),
            None => Vec::new(),
        }
    }

    pub fn show(&self, i: usize) -> String {
        self.quiver.show(&self.basis[i])
    }

    /// Basis indices of `e_v A e_x`, for each `x`.
    pub fn projective_basis(&self, v: usize) -> Vec<Vec<usize>> {
        let mut by_tgt = vec![Vec::new(); self.quiver.num_vertices()];
        for (i, p) in self.basis.iter().enumerate() {
            if p.src == v {
                by_tgt[p.tgt].push(i);
            }
        }
        by_tgt
    }

    /// The indecomposable projective right module `P(v) = e_v A`.
    pub fn projective(&self, v: usize) -> Rep<F> {
        let by_tgt = self.projective_basis(v);
        let pos: HashMap<usize, usize> = by_tgt
            .iter()
            .flat_map(|l| l.iter().enumerate().map(|(k, &i)| (i, k)))
            .collect();
        let dims: Vec<usize> = by_tgt.iter().map(Vec::len).collect();
        let maps = self
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let mut m = Matrix::zeros(dims[arrow.tgt], dims[arrow.src]);
                for (col, &i) in by_tgt[arrow.src].iter().enumerate() {
                    let p = self.basis[i].then(&self.quiver, a);
                    for (j, c) in self.normal_form(&p) {
                        m[(pos[&j], col)] = c;
                    }
                }
                m
            })
            .collect();
        Rep::new(self.quiver.clone(), dims, maps)
    }

    /// The element of `P(p.src)` given by the path `p`, as a vector in the
    /// component at `p.tgt`.
    pub fn path_element(&self, p: &Path) -> (usize, Vec<F>) {
        let by_tgt = self.projective_basis(p.src);
        let slot = &by_tgt[p.tgt];
        let mut v = vec![F::zero(); slot.len()];
        for (j, c) in self.normal_form(p) {
            let k = slot
                .iter()
                .position(|&i| i == j)
                .expect("normal form stays parallel");
            v[k] = c;
        }
        (p.tgt, v)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.quiver.vertex(label)
    }

    pub fn path_by_names(&self, names: &[&str]) -> Result<Path> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        self.quiver.path_from_names(&owned)
    }

    /// The contravariant dual, available when the relations are invariant
    /// under reversing paths and swapping each arrow with its partner.
    pub fn dual(&self, m: &Rep<F>) -> Result<Rep<F>> {
        match (&self.partners, self.self_dual) {
            (Some(p), true) => Ok(m.dual(p)),
            _ => Err(Error::PresentationNotSelfDual),
        }
    }

    /// `M / (g_1 A + … + g_k A)`.
    pub fn quotient_by_right_ideal(&self, m: &Rep<F>, gens: &[(usize, Vec<F>)]) -> Rep<F> {
        let s: Sub<F> = m.generate(gens);
        m.quotient(&s).0
    }

    /// `P(p.src) / Σ pA` for paths `p` starting at a common vertex.
    pub fn projective_mod_paths(&self, v: usize, paths: &[Path]) -> Rep<F> {
        let gens: Vec<(usize, Vec<F>)> = paths.iter().map(|p| self.path_element(p)).collect();
        self.quotient_by_right_ideal(&self.projective(v), &gens)
    }
}
