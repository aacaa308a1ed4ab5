//! Exact scalar fields: the rationals and prime fields `F_q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;

pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    /// Number of elements, `None` for characteristic zero.
    fn order() -> Option<u64>;
    /// All elements of a finite field (empty otherwise).
    fn elements() -> Vec<Self>;
    /// A random element; for the rationals, a small integer.
    fn sample<R: Rng>(rng: &mut R) -> Self;
    fn name() -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn order() -> Option<u64> {
        None
    }
    fn elements() -> Vec<Self> {
        Vec::new()
    }
    fn sample<R: Rng>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-1000..=1000))
    }
    fn name() -> String {
        "rationals".into()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// The prime field `Z/Q`. `Q` must be prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const Q: u32>(u32);

impl<const Q: u32> Fp<Q> {
    pub fn new(n: i64) -> Self {
        Fp(n.rem_euclid(Q as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const Q: u32> fmt::Debug for Fp<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const Q: u32> fmt::Display for Fp<Q> {
    /// Symmetric representative, so `-1` prints as `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0 as i64;
        if 2 * v > Q as i64 {
            write!(f, "{}", v - Q as i64)
        } else {
            write!(f, "{v}")
        }
    }
}

impl<const Q: u32> Add for Fp<Q> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % Q)
    }
}

impl<const Q: u32> Sub for Fp<Q> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + Q - o.0) % Q)
    }
}

impl<const Q: u32> Mul for Fp<Q> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % Q as u64) as u32)
    }
}

impl<const Q: u32> Neg for Fp<Q> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((Q - self.0) % Q)
    }
}

impl<const Q: u32> Scalar for Fp<Q> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % Q)
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat: x^(Q-2)
        let (mut base, mut e, mut acc) = (*self, Q - 2, Fp::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
    fn order() -> Option<u64> {
        Some(Q as u64)
    }
    fn elements() -> Vec<Self> {
        (0..Q).map(Fp).collect()
    }
    fn sample<R: Rng>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..Q))
    }
    fn name() -> String {
        format!("F{Q}")
    }
}
