//! The four-subspace picture of the middle of a self-dual tilting module,
//! and coefficient quivers rendered as DOT.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Matrix};
use crate::rep::Rep;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourSubspaceReport {
    pub dim_v: usize,
    /// `dim U1 … dim U4`.
    pub dims: [usize; 4],
    pub meet12_dim: usize,
    /// `U1 ∩ U2 = Im(γγ')`.
    pub meet12_is_image: bool,
    pub join34_dim: usize,
    /// `U3 + U4 = Ker(γγ')`.
    pub join34_is_kernel: bool,
    /// `U1 ∩ U2 ⊆ U3 + U4`.
    pub meet_below_join: bool,
    /// `Ui ∩ Uj = 0` for `i ∈ {1,2}`, `j ∈ {3,4}`.
    pub cross_meets_zero: bool,
    pub join12_is_v: bool,
    pub all_distinct: bool,
    /// `γγ'` maps `V` onto `U1 ∩ U2` with kernel `U3 + U4`.
    pub gamma_rank: usize,
}

/// Builds the report on `V = (rad M / soc M)` at vertex `10`.
///
/// `U1 = Im α' + Im γγ'`, `U2 = Im β' + Im γγ'`, `U3 = Ker α ∩ Ker γγ'`,
/// `U4 = Ker β ∩ Ker γγ'`, with the maps induced on the subquotient.
pub fn four_subspace_report<F: Scalar>(m: &Rep<F>) -> Result<FourSubspaceReport> {
    let q = &m.quiver;
    let v10 = q.vertex("10")?;
    if m.socle().len() != 1 || m.top().len() != 1 {
        return Err(Error::ShapeMismatch(
            "expected simple top and simple socle".into(),
        ));
    }
    let full = m.full();
    let rad = m.rad_of(&full);
    let soc = m.soc_over(&m.zero_sub());
    let r = m.subquotient(&rad, &soc)?;
    let n = r.dims[v10];
    let a = r.arrow_map("α")?;
    let a2 = r.arrow_map("α'")?;
    let b = r.arrow_map("β")?;
    let b2 = r.arrow_map("β'")?;
    let g = r.arrow_map("γ")?.clone();
    let g2 = r.arrow_map("γ'")?;
    for (name, mat) in [("α", a), ("β", b)] {
        if mat.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "arrow {name} does not start at 10"
            )));
        }
    }
    let gg = g2.mul(&g);
    let im_gg = gg.image();
    let ker_gg = linalg::span(gg.kernel(), n);
    let u1 = linalg::sum(&a2.image(), &im_gg, n);
    let u2 = linalg::sum(&b2.image(), &im_gg, n);
    let u3 = linalg::intersect(&linalg::span(a.kernel(), n), &ker_gg, n);
    let u4 = linalg::intersect(&linalg::span(b.kernel(), n), &ker_gg, n);
    let meet12 = linalg::intersect(&u1, &u2, n);
    let join34 = linalg::sum(&u3, &u4, n);
    let us = [&u1, &u2, &u3, &u4];
    let all_distinct = (0..4).all(|i| (i + 1..4).all(|j| !linalg::same_space(us[i], us[j], n)));
    let cross_meets_zero = [&u1, &u2].iter().all(|x| {
        [&u3, &u4]
            .iter()
            .all(|y| linalg::intersect(x, y, n).is_empty())
    });
    Ok(FourSubspaceReport {
        dim_v: n,
        dims: [u1.len(), u2.len(), u3.len(), u4.len()],
        meet12_dim: meet12.len(),
        meet12_is_image: linalg::same_space(&meet12, &im_gg, n),
        join34_dim: join34.len(),
        join34_is_kernel: linalg::same_space(&join34, &ker_gg, n),
        meet_below_join: linalg::is_subspace(&meet12, &join34, n),
        cross_meets_zero,
        join12_is_v: linalg::sum(&u1, &u2, n).len() == n,
        all_distinct,
        gamma_rank: gg.rank(),
    })
}

/// A basis adapted to the radical series, with the arrow action in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientQuiver {
    /// `(vertex label, radical layer)` for each basis vector.
    pub nodes: Vec<(String, usize)>,
    /// `(from, to, arrow name, coefficient)`.
    pub edges: Vec<(usize, usize, String, String)>,
}

/// Chooses a basis layer by layer: top vectors are unit vectors
/// complementing the radical; each further layer keeps, in order, the
/// images of the previous layer under the arrows that are independent
/// modulo the next radical power.
pub fn coefficient_quiver<F: Scalar>(m: &Rep<F>) -> CoefficientQuiver {
    let series = m.radical_series();
    let nv = m.dims.len();
    // chosen[x] = list of (vector, layer)
    let mut chosen: Vec<Vec<(Vec<F>, usize)>> = vec![Vec::new(); nv];
    let mut layer: Vec<(usize, Vec<F>)> = Vec::new();
    for x in 0..nv {
        let d = m.dims[x];
        let mut acc = series[1].spaces[x].clone();
        for i in 0..d {
            let e = linalg::unit(d, i);
            if !linalg::contains(&acc, &e, d) {
                acc.push(e.clone());
                layer.push((x, e));
            }
        }
    }
    let mut depth = 0;
    while !layer.is_empty() {
        for (x, v) in &layer {
            chosen[*x].push((v.clone(), depth));
        }
        depth += 1;
        let Some(below) = series.get(depth + 1) else {
            break;
        };
        let mut acc: Vec<Vec<Vec<F>>> = below.spaces.clone();
        let mut next = Vec::new();
        for (x, v) in &layer {
            for a in m.quiver.out_arrows(*x) {
                let y = m.quiver.arrows[a].tgt;
                let w = m.maps[a].apply(v);
                if !linalg::contains(&acc[y], &w, m.dims[y]) {
                    acc[y].push(w.clone());
                    next.push((y, w));
                }
            }
        }
        layer = next;
    }
    let mut nodes = Vec::new();
    let mut ids: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut order: Vec<(usize, usize, usize)> = Vec::new();
    for (x, vs) in chosen.iter().enumerate() {
        for (k, (_, l)) in vs.iter().enumerate() {
            order.push((*l, x, k));
        }
    }
    order.sort();
    for x in 0..nv {
        ids[x] = vec![0; chosen[x].len()];
    }
    for (id, &(l, x, k)) in order.iter().enumerate() {
        ids[x][k] = id;
        nodes.push((m.quiver.vertices[x].clone(), l));
    }
    let inverses: Vec<Option<Matrix<F>>> = chosen
        .iter()
        .zip(&m.dims)
        .map(|(vs, &d)| {
            let cols: Vec<Vec<F>> = vs.iter().map(|(v, _)| v.clone()).collect();
            (d > 0).then(|| {
                Matrix::from_cols(d, &cols)
                    .inverse()
                    .expect("adapted basis")
            })
        })
        .collect();
    let mut edges = Vec::new();
    for &(_, x, k) in &order {
        for a in m.quiver.out_arrows(x) {
            let y = m.quiver.arrows[a].tgt;
            let Some(inv) = &inverses[y] else { continue };
            let coords = inv.apply(&m.maps[a].apply(&chosen[x][k].0));
            for (j, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    edges.push((
                        ids[x][k],
                        ids[y][j],
                        m.quiver.arrows[a].name.clone(),
                        c.to_string(),
                    ));
                }
            }
        }
    }
    CoefficientQuiver { nodes, edges }
}

impl CoefficientQuiver {
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        let _ = writeln!(s, "  rankdir=TB;");
        for (i, (label, _)) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{label}\"];");
        }
        for (a, b, arrow, c) in &self.edges {
            let label = if c == "1" {
                arrow.clone()
            } else {
                format!("{arrow} ({c})")
            };
            let _ = writeln!(s, "  n{a} -> n{b} [label=\"{label}\"];");
        }
        s.push_str("}\n");
        s
    }
}
