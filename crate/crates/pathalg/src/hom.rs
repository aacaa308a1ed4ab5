//! Homomorphism spaces and isomorphism tests.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::rep::Rep;

/// A homomorphism as one matrix per vertex.
pub type Hom<F> = Vec<Matrix<F>>;

/// Fixed seed for the generic-combination search.
const SEED: u64 = 0x005e_ed43;
const RANDOM_TRIALS: usize = 64;
/// Exhaustive search over a finite field when `q^dim` is at most this.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Offsets of each vertex block in the flattened unknown vector.
fn offsets(m: &Rep<impl Scalar>, n: &Rep<impl Scalar>) -> Vec<usize> {
    let mut off = vec![0];
    for x in 0..m.dims.len() {
        off.push(off[x] + n.dims[x] * m.dims[x]);
    }
    off
}

/// Flattens a homomorphism into the coordinates used by [`hom_space`].
pub fn flatten<F: Scalar>(h: &[Matrix<F>]) -> Vec<F> {
    h.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

fn unflatten<F: Scalar>(m: &Rep<F>, n: &Rep<F>, v: &[F]) -> Hom<F> {
    let off = offsets(m, n);
    (0..m.dims.len())
        .map(|x| {
            let (r, c) = (n.dims[x], m.dims[x]);
            let mut f = Matrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    f[(i, j)] = v[off[x] + i * c + j].clone();
                }
            }
            f
        })
        .collect()
}

/// Basis of `Hom(M, N)`: solutions of `N_a f_x = f_y M_a` for every arrow
/// `a: x → y`.
pub fn hom_space<F: Scalar>(m: &Rep<F>, n: &Rep<F>) -> Vec<Hom<F>> {
    let off = offsets(m, n);
    let unknowns = *off.last().unwrap();
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (a, arrow) in m.quiver.arrows.iter().enumerate() {
        let (x, y) = (arrow.src, arrow.tgt);
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        let fx = |i: usize, j: usize| off[x] + i * m.dims[x] + j;
        let fy = |i: usize, j: usize| off[y] + i * m.dims[y] + j;
        for i in 0..n.dims[y] {
            for j in 0..m.dims[x] {
                let mut row = vec![F::zero(); unknowns];
                for k in 0..n.dims[x] {
                    let c = na[(i, k)].clone();
                    if !c.is_zero() {
                        row[fx(k, j)] = row[fx(k, j)].clone() + c;
                    }
                }
                for l in 0..m.dims[y] {
                    let c = ma[(l, j)].clone();
                    if !c.is_zero() {
                        row[fy(i, l)] = row[fy(i, l)].clone() - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(rows.len(), unknowns, &rows);
    sys.kernel().iter().map(|v| unflatten(m, n, v)).collect()
}

pub fn hom_dim<F: Scalar>(m: &Rep<F>, n: &Rep<F>) -> usize {
    hom_space(m, n).len()
}

fn combine<F: Scalar>(basis: &[Hom<F>], coeffs: &[F]) -> Hom<F> {
    let mut out: Hom<F> = basis[0]
        .iter()
        .map(|f| Matrix::zeros(f.rows(), f.cols()))
        .collect();
    for (h, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, f) in out.iter_mut().zip(h) {
            *o = o.add(&f.scale(c));
        }
    }
    out
}

fn is_iso<F: Scalar>(h: &Hom<F>) -> bool {
    h.iter().all(Matrix::is_invertible)
}

/// Decides `M ≅ N` by looking for an invertible element of `Hom(M, N)`.
///
/// Over a small finite field every combination is tried. Otherwise seeded
/// random combinations are tested; over the rationals the coefficients are
/// drawn from a range far larger than the degree of the determinant, so a
/// miss on every trial is vanishingly unlikely when an isomorphism exists.
pub fn rep_isomorphic<F: Scalar>(m: &Rep<F>, n: &Rep<F>) -> bool {
    if m.dims != n.dims {
        return false;
    }
    if m.dim() == 0 {
        return true;
    }
    let basis = hom_space(m, n);
    if basis.is_empty() {
        return false;
    }
    let d = basis.len();
    if let Some(q) = F::order() {
        if let Some(total) = q.checked_pow(d as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT) {
            let elems = F::elements();
            let mut coeffs = vec![F::zero(); d];
            for mut k in 0..total {
                for c in coeffs.iter_mut() {
                    *c = elems[(k % q) as usize].clone();
                    k /= q;
                }
                if is_iso(&combine(&basis, &coeffs)) {
                    return true;
                }
            }
            return false;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..RANDOM_TRIALS).any(|_| {
        let coeffs: Vec<F> = (0..d).map(|_| F::sample(&mut rng)).collect();
        is_iso(&combine(&basis, &coeffs))
    })
}

/// Composes per-vertex maps: `g ∘ f`.
pub fn compose<F: Scalar>(g: &[Matrix<F>], f: &[Matrix<F>]) -> Hom<F> {
    g.iter().zip(f).map(|(a, b)| a.mul(b)).collect()
}
