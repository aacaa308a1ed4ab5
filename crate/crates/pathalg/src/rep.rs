//! Representations of a quiver (right modules over the path algebra),
//! submodules, quotients, Loewy series and contravariant duality.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Matrix, Splitting};
use crate::quiver::{Path, Quiver, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep<F> {
    pub quiver: Arc<Quiver>,
    pub dims: Vec<usize>,
    /// One `dims[tgt] × dims[src]` matrix per arrow.
    pub maps: Vec<Matrix<F>>,
}

/// A family of subspaces `S_x ⊆ M_x`, each an echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sub<F> {
    pub spaces: Vec<Vec<Vec<F>>>,
}

impl<F: Scalar> Sub<F> {
    pub fn dim(&self) -> usize {
        self.spaces.iter().map(Vec::len).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Vec::len).collect()
    }
}

/// Loewy layers as multisets of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub layers: Vec<Vec<String>>,
}

impl FiltrationReport {
    pub fn total(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }
}

impl fmt::Display for FiltrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self
            .layers
            .iter()
            .map(|l| format!("{{{}}}", l.join(",")))
            .collect();
        write!(f, "[{}]", ls.join(","))
    }
}

impl<F: Scalar> Rep<F> {
    pub fn new(quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        assert_eq!(dims.len(), quiver.num_vertices());
        assert_eq!(maps.len(), quiver.arrows.len());
        for (m, a) in maps.iter().zip(&quiver.arrows) {
            assert_eq!(
                (m.rows(), m.cols()),
                (dims[a.tgt], dims[a.src]),
                "arrow {}",
                a.name
            );
        }
        Rep { quiver, dims, maps }
    }

    /// The simple module at `v`.
    pub fn simple(quiver: Arc<Quiver>, v: usize) -> Self {
        let dims: Vec<usize> = (0..quiver.num_vertices())
            .map(|x| usize::from(x == v))
            .collect();
        let maps = quiver
            .arrows
            .iter()
            .map(|a| Matrix::zeros(dims[a.tgt], dims[a.src]))
            .collect();
        Rep::new(quiver, dims, maps)
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn arrow_map(&self, name: &str) -> Result<&Matrix<F>> {
        Ok(&self.maps[self.quiver.arrow(name)?])
    }

    /// Action of a path: the product of arrow matrices, last arrow leftmost.
    pub fn path_matrix(&self, p: &Path) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[p.src]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    pub fn satisfies(&self, relations: &[Relation]) -> bool {
        relations.iter().all(|r| {
            let Some((_, p0)) = r.first() else {
                return true;
            };
            let mut acc = Matrix::zeros(self.dims[p0.tgt], self.dims[p0.src]);
            for (c, p) in r {
                acc = acc.add(&self.path_matrix(p).scale(&F::from_i64(*c)));
            }
            acc.is_zero()
        })
    }

    pub fn full(&self) -> Sub<F> {
        Sub {
            spaces: self
                .dims
                .iter()
                .map(|&d| (0..d).map(|i| linalg::unit(d, i)).collect())
                .collect(),
        }
    }

    pub fn zero_sub(&self) -> Sub<F> {
        Sub {
            spaces: vec![Vec::new(); self.dims.len()],
        }
    }

    /// Smallest submodule containing the homogeneous elements `gens`.
    pub fn generate(&self, gens: &[(usize, Vec<F>)]) -> Sub<F> {
        let mut spaces: Vec<Vec<Vec<F>>> = vec![Vec::new(); self.dims.len()];
        let mut stack: Vec<(usize, Vec<F>)> = gens.to_vec();
        while let Some((x, v)) = stack.pop() {
            if v.iter().all(Scalar::is_zero) || linalg::contains(&spaces[x], &v, self.dims[x]) {
                continue;
            }
            spaces[x].push(v.clone());
            for a in self.quiver.out_arrows(x) {
                stack.push((self.quiver.arrows[a].tgt, self.maps[a].apply(&v)));
            }
        }
        let spaces = spaces
            .into_iter()
            .zip(&self.dims)
            .map(|(s, &d)| linalg::span(s, d))
            .collect();
        Sub { spaces }
    }

    pub fn is_submodule(&self, s: &Sub<F>) -> bool {
        self.quiver.arrows.iter().enumerate().all(|(a, arrow)| {
            s.spaces[arrow.src].iter().all(|v| {
                linalg::contains(
                    &s.spaces[arrow.tgt],
                    &self.maps[a].apply(v),
                    self.dims[arrow.tgt],
                )
            })
        })
    }

    pub fn sub_sum(&self, s: &Sub<F>, t: &Sub<F>) -> Sub<F> {
        Sub {
            spaces: (0..self.dims.len())
                .map(|x| linalg::sum(&s.spaces[x], &t.spaces[x], self.dims[x]))
                .collect(),
        }
    }

    pub fn sub_eq(&self, s: &Sub<F>, t: &Sub<F>) -> bool {
        (0..self.dims.len()).all(|x| linalg::same_space(&s.spaces[x], &t.spaces[x], self.dims[x]))
    }

    pub fn sub_le(&self, s: &Sub<F>, t: &Sub<F>) -> bool {
        (0..self.dims.len()).all(|x| linalg::is_subspace(&s.spaces[x], &t.spaces[x], self.dims[x]))
    }

    /// `S·J`, the sum of the images of `S` under all arrows.
    pub fn rad_of(&self, s: &Sub<F>) -> Sub<F> {
        let mut spaces: Vec<Vec<Vec<F>>> = vec![Vec::new(); self.dims.len()];
        for (a, arrow) in self.quiver.arrows.iter().enumerate() {
            for v in &s.spaces[arrow.src] {
                spaces[arrow.tgt].push(self.maps[a].apply(v));
            }
        }
        Sub {
            spaces: spaces
                .into_iter()
                .zip(&self.dims)
                .map(|(s, &d)| linalg::span(s, d))
                .collect(),
        }
    }

    /// `{m : m·J ⊆ S}`.
    pub fn soc_over(&self, s: &Sub<F>) -> Sub<F> {
        let splits: Vec<Splitting<F>> = (0..self.dims.len())
            .map(|y| Splitting::new(&s.spaces[y], self.dims[y]))
            .collect();
        let spaces = (0..self.dims.len())
            .map(|x| {
                let d = self.dims[x];
                let mut cond = Matrix::zeros(0, d);
                for a in self.quiver.out_arrows(x) {
                    let t = self.quiver.arrows[a].tgt;
                    cond = cond.vstack(&splits[t].projection().mul(&self.maps[a]));
                }
                linalg::span(cond.kernel(), d)
            })
            .collect();
        Sub { spaces }
    }

    /// `M ⊋ rad M ⊋ … ⊋ 0`, ending with the zero submodule.
    pub fn radical_series(&self) -> Vec<Sub<F>> {
        let mut out = vec![self.full()];
        while out.last().unwrap().dim() > 0 {
            let next = self.rad_of(out.last().unwrap());
            out.push(next);
        }
        out
    }

    /// `0 ⊊ soc M ⊊ … ⊊ M`, starting with the zero submodule.
    pub fn socle_series(&self) -> Vec<Sub<F>> {
        let mut out = vec![self.zero_sub()];
        while out.last().unwrap().dim() < self.dim() {
            let next = self.soc_over(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_series().len() - 1
    }

    fn layer_labels(&self, upper: &Sub<F>, lower: &Sub<F>) -> Vec<String> {
        let mut out = Vec::new();
        for x in 0..self.dims.len() {
            for _ in 0..upper.spaces[x].len() - lower.spaces[x].len() {
                out.push(self.quiver.vertices[x].clone());
            }
        }
        out
    }

    /// Radical layers, top first.
    pub fn radical_layers(&self) -> FiltrationReport {
        let s = self.radical_series();
        FiltrationReport {
            layers: s
                .windows(2)
                .map(|w| self.layer_labels(&w[0], &w[1]))
                .collect(),
        }
    }

    /// Socle layers, bottom first.
    pub fn socle_layers(&self) -> FiltrationReport {
        let s = self.socle_series();
        FiltrationReport {
            layers: s
                .windows(2)
                .map(|w| self.layer_labels(&w[1], &w[0]))
                .collect(),
        }
    }

    pub fn top(&self) -> Vec<String> {
        self.layer_labels(&self.full(), &self.rad_of(&self.full()))
    }

    pub fn socle(&self) -> Vec<String> {
        self.layer_labels(&self.soc_over(&self.zero_sub()), &self.zero_sub())
    }

    /// Composition factors as labels with multiplicity, in vertex order.
    pub fn composition(&self) -> Vec<(String, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(x, &d)| (self.quiver.vertices[x].clone(), d))
            .collect()
    }

    /// Radical and socle series agree term by term.
    pub fn is_rigid(&self) -> bool {
        let rad = self.radical_series();
        let soc = self.socle_series();
        let l = rad.len() - 1;
        soc.len() - 1 == l && (0..=l).all(|i| self.sub_eq(&rad[i], &soc[l - i]))
    }

    /// `S` as a module in its own right, with the inclusion maps.
    pub fn restrict(&self, s: &Sub<F>) -> (Rep<F>, Vec<Matrix<F>>) {
        let splits: Vec<Splitting<F>> = (0..self.dims.len())
            .map(|x| Splitting::new(&s.spaces[x], self.dims[x]))
            .collect();
        let dims: Vec<usize> = splits.iter().map(Splitting::sub_dim).collect();
        let maps = self
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let cols: Vec<Vec<F>> = splits[arrow.src]
                    .sub
                    .iter()
                    .map(|v| splits[arrow.tgt].sub_coords(&self.maps[a].apply(v)))
                    .collect();
                Matrix::from_cols(dims[arrow.tgt], &cols)
            })
            .collect();
        let incl = splits.iter().map(Splitting::inclusion).collect();
        (Rep::new(self.quiver.clone(), dims, maps), incl)
    }

    /// `M / S`, with the projection maps.
    pub fn quotient(&self, s: &Sub<F>) -> (Rep<F>, Vec<Matrix<F>>) {
        let splits: Vec<Splitting<F>> = (0..self.dims.len())
            .map(|x| Splitting::new(&s.spaces[x], self.dims[x]))
            .collect();
        let dims: Vec<usize> = splits.iter().map(Splitting::quot_dim).collect();
        let maps = self
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                splits[arrow.tgt]
                    .projection()
                    .mul(&self.maps[a])
                    .mul(&splits[arrow.src].section())
            })
            .collect();
        let proj = splits.iter().map(Splitting::projection).collect();
        (Rep::new(self.quiver.clone(), dims, maps), proj)
    }

    /// `upper / lower` for submodules `lower ⊆ upper`.
    pub fn subquotient(&self, upper: &Sub<F>, lower: &Sub<F>) -> Result<Rep<F>> {
        if !self.sub_le(lower, upper) {
            return Err(Error::ShapeMismatch(
                "lower term is not contained in upper term".into(),
            ));
        }
        let (u, _) = self.restrict(upper);
        let splits: Vec<Splitting<F>> = (0..self.dims.len())
            .map(|x| Splitting::new(&upper.spaces[x], self.dims[x]))
            .collect();
        let inner = Sub {
            spaces: (0..self.dims.len())
                .map(|x| {
                    lower.spaces[x]
                        .iter()
                        .map(|v| splits[x].sub_coords(v))
                        .collect()
                })
                .collect(),
        };
        Ok(u.quotient(&inner).0)
    }

    /// Image of a homomorphism `N → self` given by per-vertex matrices.
    pub fn image_of(&self, hom: &[Matrix<F>]) -> Sub<F> {
        Sub {
            spaces: hom
                .iter()
                .zip(&self.dims)
                .map(|(m, &d)| linalg::span(m.image(), d))
                .collect(),
        }
    }

    /// The contravariant dual: transpose and swap each arrow with its
    /// dashed partner.
    pub fn dual(&self, partners: &[usize]) -> Rep<F> {
        let maps = (0..self.maps.len())
            .map(|a| self.maps[partners[a]].transpose())
            .collect();
        Rep::new(self.quiver.clone(), self.dims.clone(), maps)
    }

    pub fn direct_sum(parts: &[&Rep<F>]) -> Rep<F> {
        let quiver = parts[0].quiver.clone();
        let dims: Vec<usize> = (0..quiver.num_vertices())
            .map(|x| parts.iter().map(|m| m.dims[x]).sum())
            .collect();
        let maps = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let mut m = Matrix::zeros(dims[arrow.tgt], dims[arrow.src]);
                let (mut r0, mut c0) = (0, 0);
                for part in parts {
                    let b = &part.maps[a];
                    for i in 0..b.rows() {
                        for j in 0..b.cols() {
                            m[(r0 + i, c0 + j)] = b[(i, j)].clone();
                        }
                    }
                    r0 += b.rows();
                    c0 += b.cols();
                }
                m
            })
            .collect();
        Rep::new(quiver, dims, maps)
    }

    /// Restriction to a full subquiver given by another quiver whose
    /// vertices and arrows are matched by name.
    pub fn restrict_to_quiver(&self, target: Arc<Quiver>) -> Result<Rep<F>> {
        for (x, &d) in self.dims.iter().enumerate() {
            if d > 0 && target.vertex(&self.quiver.vertices[x]).is_err() {
                return Err(Error::ShapeMismatch(format!(
                    "support meets vertex {} outside the subquiver",
                    self.quiver.vertices[x]
                )));
            }
        }
        let dims = target
            .vertices
            .iter()
            .map(|v| self.quiver.vertex(v).map(|x| self.dims[x]))
            .collect::<Result<Vec<_>>>()?;
        let maps = target
            .arrows
            .iter()
            .map(|a| self.quiver.arrow(&a.name).map(|i| self.maps[i].clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Rep::new(target, dims, maps))
    }
}
