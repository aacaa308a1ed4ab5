//! Standard and costandard modules for a total order on the vertices, first
//! extension groups, and the universal-extension construction of tilting
//! modules.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hom::{self, Hom};
use crate::linalg::{self, Matrix};
use crate::rep::{Rep, Sub};

const MAX_PASSES: usize = 16;

/// `0 → Ω → P(v) → Δ(v) → 0`.
#[derive(Clone, Debug)]
pub struct StandardCover<F> {
    pub vertex: usize,
    pub projective: Rep<F>,
    pub kernel: Rep<F>,
    pub inclusion: Hom<F>,
    pub delta: Rep<F>,
}

/// The vertices in listing order, smallest first.
pub fn listing_order<F: Scalar>(alg: &Algebra<F>) -> Vec<usize> {
    (0..alg.quiver.num_vertices()).collect()
}

/// Parses an order given as vertex labels, smallest first.
pub fn order_from_labels<F: Scalar>(alg: &Algebra<F>, labels: &[&str]) -> Result<Vec<usize>> {
    let order = labels
        .iter()
        .map(|l| alg.vertex(l))
        .collect::<Result<Vec<_>>>()?;
    let mut sorted = order.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != alg.quiver.num_vertices() || order.len() != sorted.len() {
        return Err(Error::InvalidPresentation(
            "order must list every vertex once".into(),
        ));
    }
    Ok(order)
}

fn above(order: &[usize], v: usize) -> &[usize] {
    let i = order.iter().position(|&x| x == v).expect("vertex in order");
    &order[i + 1..]
}

/// `P(v)` modulo the trace of all `P(w)` with `w > v`, which is the
/// submodule generated by the components at those `w`.
pub fn standard_cover<F: Scalar>(alg: &Algebra<F>, order: &[usize], v: usize) -> StandardCover<F> {
    let p = alg.projective(v);
    let gens: Vec<(usize, Vec<F>)> = above(order, v)
        .iter()
        .flat_map(|&w| (0..p.dims[w]).map(move |i| (w, i)))
        .map(|(w, i)| (w, linalg::unit(p.dims[w], i)))
        .collect();
    let u: Sub<F> = p.generate(&gens);
    let (kernel, inclusion) = p.restrict(&u);
    let (delta, _) = p.quotient(&u);
    StandardCover {
        vertex: v,
        projective: p,
        kernel,
        inclusion,
        delta,
    }
}

pub fn delta_module<F: Scalar>(alg: &Algebra<F>, order: &[usize], v: usize) -> Rep<F> {
    standard_cover(alg, order, v).delta
}

pub fn nabla_module<F: Scalar>(alg: &Algebra<F>, order: &[usize], v: usize) -> Result<Rep<F>> {
    alg.dual(&delta_module(alg, order, v))
}

/// `Ext¹(Δ(w), X)` as `Hom(Ω, X)` modulo restrictions from `Hom(P(w), X)`.
/// Returns representatives of a basis.
pub fn ext1<F: Scalar>(alg: &Algebra<F>, cover: &StandardCover<F>, x: &Rep<F>) -> Vec<Hom<F>> {
    let w = cover.vertex;
    let homs = hom::hom_space(&cover.kernel, x);
    let by_tgt = alg.projective_basis(w);
    let mut span: Vec<Vec<F>> = Vec::new();
    for j in 0..x.dims[w] {
        let e = linalg::unit(x.dims[w], j);
        let phi: Hom<F> = by_tgt
            .iter()
            .enumerate()
            .map(|(y, ids)| {
                let cols: Vec<Vec<F>> = ids
                    .iter()
                    .map(|&i| x.path_matrix(&alg.basis[i]).apply(&e))
                    .collect();
                Matrix::from_cols(x.dims[y], &cols)
            })
            .collect();
        span.push(hom::flatten(&hom::compose(&phi, &cover.inclusion)));
    }
    let n: usize = (0..x.dims.len())
        .map(|y| x.dims[y] * cover.kernel.dims[y])
        .sum();
    let mut rank = linalg::dim_span(&span, n);
    let mut reps = Vec::new();
    for h in homs {
        span.push(hom::flatten(&h));
        let r = linalg::dim_span(&span, n);
        if r > rank {
            rank = r;
            reps.push(h);
        } else {
            span.pop();
        }
    }
    reps
}

pub fn ext1_dim<F: Scalar>(alg: &Algebra<F>, order: &[usize], w: usize, x: &Rep<F>) -> usize {
    ext1(alg, &standard_cover(alg, order, w), x).len()
}

/// The extension `0 → X → E → Δ(w)^e → 0` classified by `classes`, built
/// as the pushout of `Ω^e → P(w)^e` along `Ω^e → X`.
pub fn universal_extension<F: Scalar>(
    cover: &StandardCover<F>,
    x: &Rep<F>,
    classes: &[Hom<F>],
) -> Rep<F> {
    let mut parts = vec![x];
    parts.extend(std::iter::repeat_n(&cover.projective, classes.len()));
    let sum = Rep::direct_sum(&parts);
    let spaces = (0..sum.dims.len())
        .map(|y| {
            let mut vs = Vec::new();
            let k = cover.kernel.dims[y];
            for (i, g) in classes.iter().enumerate() {
                for c in 0..k {
                    let e = linalg::unit(k, c);
                    let mut v = g[y].apply(&e);
                    for slot in 0..classes.len() {
                        let block = if slot == i {
                            cover.inclusion[y]
                                .apply(&e)
                                .into_iter()
                                .map(|t| -t)
                                .collect()
                        } else {
                            vec![F::zero(); cover.projective.dims[y]]
                        };
                        v.extend(block);
                    }
                    vs.push(v);
                }
            }
            linalg::span(vs, sum.dims[y])
        })
        .collect();
    sum.quotient(&Sub { spaces }).0
}

/// Ringel's construction: start from `Δ(v)` and, for `w` in decreasing
/// order, replace `X` by its universal extension by `Δ(w)`, until a full
/// pass finds every `Ext¹(Δ(w), X)` zero.
pub fn build_tilting<F: Scalar>(alg: &Algebra<F>, order: &[usize], v: usize) -> Result<Rep<F>> {
    let covers: Vec<StandardCover<F>> = order
        .iter()
        .rev()
        .map(|&w| standard_cover(alg, order, w))
        .collect();
    let mut x = delta_module(alg, order, v);
    for _ in 0..MAX_PASSES {
        let mut changed = false;
        for cover in &covers {
            let classes = ext1(alg, cover, &x);
            if !classes.is_empty() {
                x = universal_extension(cover, &x, &classes);
                changed = true;
            }
        }
        if !changed {
            return Ok(x);
        }
    }
    Err(Error::NonConvergence(MAX_PASSES))
}

/// `(M : Δ(w)) = dim Hom(M, ∇(w))`, for each vertex in `order`.
pub fn delta_multiplicities<F: Scalar>(
    alg: &Algebra<F>,
    order: &[usize],
    m: &Rep<F>,
) -> Result<Vec<(String, usize)>> {
    order
        .iter()
        .map(|&w| {
            let nabla = nabla_module(alg, order, w)?;
            Ok((alg.quiver.vertices[w].clone(), hom::hom_dim(m, &nabla)))
        })
        .collect()
}

/// `(M : ∇(w)) = dim Hom(Δ(w), M)`.
pub fn nabla_multiplicities<F: Scalar>(
    alg: &Algebra<F>,
    order: &[usize],
    m: &Rep<F>,
) -> Vec<(String, usize)> {
    order
        .iter()
        .map(|&w| {
            let delta = delta_module(alg, order, w);
            (alg.quiver.vertices[w].clone(), hom::hom_dim(&delta, m))
        })
        .collect()
}
