//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use sl3tensor::characters::Character;
use sl3tensor::{Prime, Weight};

pub fn w(a: i64, b: i64) -> Weight {
    Weight::new(a, b)
}

/// The six Weyl group elements as maps on the ϖ basis, with signs.
pub fn weyl_group(x: Weight) -> [(Weight, i64); 6] {
    let s1 = |v: Weight| w(-v.a, v.a + v.b);
    let s2 = |v: Weight| w(v.a + v.b, -v.b);
    [
        (x, 1),
        (s1(x), -1),
        (s2(x), -1),
        (s1(s2(x)), 1),
        (s2(s1(x)), 1),
        (s1(s2(s1(x))), -1),
    ]
}

/// `γ = m·α1 + n·α2` in simple-root coordinates, if integral.
pub fn root_coords(g: Weight) -> Option<(i64, i64)> {
    let (m3, n3) = (2 * g.a + g.b, g.a + 2 * g.b);
    (m3 % 3 == 0 && n3 % 3 == 0).then_some((m3 / 3, n3 / 3))
}

/// Kostant partition function of A2: ways to write `γ` as a sum of
/// α1, α2, α1+α2.
pub fn kostant(g: Weight) -> i64 {
    match root_coords(g) {
        // the number of α1+α2 summands fixes the rest
        Some((m, n)) if m >= 0 && n >= 0 => m.min(n) + 1,
        _ => 0,
    }
}

/// Weyl character multiplicity by Kostant's formula.
pub fn kostant_multiplicity(lambda: Weight, mu: Weight) -> i64 {
    let rho = w(1, 1);
    weyl_group(lambda + rho)
        .iter()
        .map(|(x, s)| s * kostant(*x - (mu + rho)))
        .sum()
}

pub type Naive = BTreeMap<(i64, i64), i64>;

pub fn naive(c: &Character) -> Naive {
    c.iter().map(|(x, k)| ((x.a, x.b), k)).collect()
}

/// Plain double-loop convolution.
pub fn naive_product(x: &Naive, y: &Naive) -> Naive {
    let mut out = Naive::new();
    for (&(a, b), &k) in x {
        for (&(c, d), &m) in y {
            *out.entry((a + c, b + d)).or_insert(0) += k * m;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn naive_twist(x: &Naive, s: i64) -> Naive {
    x.iter().map(|(&(a, b), &k)| ((a * s, b * s), k)).collect()
}

/// Weyl character from Kostant multiplicities over the whole orbit box.
pub fn naive_weyl(lambda: Weight) -> Naive {
    let n = lambda.a + lambda.b;
    let mut out = Naive::new();
    for a in -n..=n {
        for b in -n..=n {
            let k = kostant_multiplicity(lambda, w(a, b));
            if k != 0 {
                out.insert((a, b), k);
            }
        }
    }
    out
}

/// Restricted simple characters: every restricted Weyl module is simple
/// except `Δ(1,1)` at p=3, which has the trivial module as a second factor.
pub fn naive_restricted_simple(p: Prime, lambda: Weight) -> Naive {
    let mut c = naive_weyl(lambda);
    if p == Prime::THREE && lambda == w(1, 1) {
        *c.get_mut(&(0, 0)).unwrap() -= 1;
        c.retain(|_, v| *v != 0);
    }
    c
}

/// Simple character by an explicit loop over base-p digits.
pub fn naive_simple(p: Prime, lambda: Weight) -> Naive {
    let q = p.as_i64();
    let (mut a, mut b) = (lambda.a, lambda.b);
    let mut out: Naive = [((0, 0), 1)].into_iter().collect();
    let mut scale = 1;
    while a > 0 || b > 0 {
        let d = w(a % q, b % q);
        out = naive_product(&out, &naive_twist(&naive_restricted_simple(p, d), scale));
        a /= q;
        b /= q;
        scale *= q;
    }
    out
}

pub fn flip_naive(x: &Naive) -> Naive {
    x.iter().map(|(&(a, b), &k)| ((b, a), k)).collect()
}

/// `λ ~ μ` under the dot action of the affine Weyl group, tested from the
/// definition: some `w(λ+ρ) - (μ+ρ)` lies in `p` times the root lattice.
pub fn naive_linked(p: Prime, lambda: Weight, mu: Weight) -> bool {
    let rho = w(1, 1);
    weyl_group(lambda + rho)
        .iter()
        .any(|(x, _)| match root_coords(*x - (mu + rho)) {
            Some((m, n)) => m % p.as_i64() == 0 && n % p.as_i64() == 0,
            None => false,
        })
}

pub fn all_weights(max: i64) -> impl Iterator<Item = Weight> {
    (0..=max).flat_map(move |a| (0..=max).map(move |b| w(a, b)))
}
