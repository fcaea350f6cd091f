//! Arithmetic in the binary fields GF(2^e), e ∈ {1, 2, 4, 8}.
//!
//! Elements are bit patterns in the polynomial basis. The reduction
//! polynomial for each degree is the lexicographically smallest primitive
//! polynomial of that degree:
//!
//! | e | polynomial            | hex   |
//! |---|-----------------------|-------|
//! | 1 | x + 1 (no reduction)  | 0x3   |
//! | 2 | x² + x + 1            | 0x7   |
//! | 4 | x⁴ + x + 1            | 0x13  |
//! | 8 | x⁸ + x⁴ + x³ + x² + 1 | 0x11d |
//!
//! Serialized field elements are lowercase hex strings of the bit pattern.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rand::Rng;

use crate::error::{Error, Result};

/// Common interface of the supported fields of characteristic 2.
pub trait Field:
    Copy
    + Eq
    + Ord
    + Hash
    + Default
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + AddAssign
    + Sub<Output = Self>
    + SubAssign
    + Mul<Output = Self>
    + MulAssign
    + Neg<Output = Self>
    + 'static
{
    /// Extension degree e over GF(2).
    const DEGREE: u32;
    /// Number of elements, 2^e.
    const ORDER: usize;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_bits(bits: u8) -> Option<Self>;
    fn bits(self) -> u8;

    fn is_zero(self) -> bool {
        self.bits() == 0
    }

    fn inv(self) -> Option<Self>;

    /// x ↦ x².
    fn frobenius(self) -> Self {
        self * self
    }

    /// Inverse of the Frobenius map: x^(2^(e-1)).
    fn sqrt(self) -> Self {
        let mut r = self;
        for _ in 1..Self::DEGREE {
            r = r.frobenius();
        }
        r
    }

    fn pow(self, mut n: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base *= base;
            n >>= 1;
        }
        acc
    }

    fn elements() -> Box<dyn Iterator<Item = Self>> {
        Box::new((0..Self::ORDER).map(|b| Self::from_bits(b as u8).expect("in range")))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_bits(rng.gen_range(0..Self::ORDER) as u8).expect("in range")
    }

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_bits(rng.gen_range(1..Self::ORDER) as u8).expect("in range")
    }

    fn to_hex(self) -> String {
        format!("{:x}", self.bits())
    }

    fn from_hex(s: &str) -> Result<Self> {
        let bits = u8::from_str_radix(s, 16)
            .map_err(|_| Error::Parse(format!("invalid field element {s:?}")))?;
        Self::from_bits(bits).ok_or_else(|| {
            Error::Parse(format!(
                "field element {s:?} out of range for GF(2^{})",
                Self::DEGREE
            ))
        })
    }
}

/// Element of GF(2^E).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf2e<const E: u32>(u8);

pub type Gf2 = Gf2e<1>;
pub type Gf4 = Gf2e<2>;
pub type Gf16 = Gf2e<4>;
pub type Gf256 = Gf2e<8>;

/// Reduction polynomial for GF(2^e), including the leading term.
pub const fn modulus(e: u32) -> u16 {
    match e {
        1 => 0x3,
        2 => 0x7,
        4 => 0x13,
        8 => 0x11d,
        _ => 0,
    }
}

/// Returns an error unless `e` is a supported extension degree.
pub fn check_degree(e: u32) -> Result<()> {
    match e {
        1 | 2 | 4 | 8 => Ok(()),
        _ => Err(Error::UnsupportedFieldDegree(e)),
    }
}

#[inline]
fn clmul_reduce(a: u8, b: u8, e: u32) -> u8 {
    let m = modulus(e);
    let mut acc: u16 = 0;
    let mut a = a as u16;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & (1 << e) != 0 {
            a ^= m;
        }
    }
    acc as u8
}

impl<const E: u32> Gf2e<E> {
    pub const ZERO: Self = Gf2e(0);
    pub const ONE: Self = Gf2e(1);

    /// The class of x in the polynomial basis (a multiplicative generator
    /// for e > 1).
    pub fn generator() -> Self {
        if E == 1 {
            Gf2e(1)
        } else {
            Gf2e(2)
        }
    }
}

impl<const E: u32> Field for Gf2e<E> {
    const DEGREE: u32 = E;
    const ORDER: usize = 1 << E;

    fn zero() -> Self {
        Gf2e(0)
    }

    fn one() -> Self {
        Gf2e(1)
    }

    fn from_bits(bits: u8) -> Option<Self> {
        if (bits as usize) < Self::ORDER {
            Some(Gf2e(bits))
        } else {
            None
        }
    }

    fn bits(self) -> u8 {
        self.0
    }

    fn inv(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // x^(2^e - 2)
            Some(self.pow(Self::ORDER as u64 - 2))
        }
    }
}

impl<const E: u32> Add for Gf2e<E> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Gf2e(self.0 ^ rhs.0)
    }
}

impl<const E: u32> AddAssign for Gf2e<E> {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl<const E: u32> Sub for Gf2e<E> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Gf2e(self.0 ^ rhs.0)
    }
}

impl<const E: u32> SubAssign for Gf2e<E> {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl<const E: u32> Neg for Gf2e<E> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        self
    }
}

impl<const E: u32> Mul for Gf2e<E> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        if E == 1 {
            Gf2e(self.0 & rhs.0)
        } else {
            Gf2e(clmul_reduce(self.0, rhs.0, E))
        }
    }
}

impl<const E: u32> MulAssign for Gf2e<E> {
    #[inline]
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const E: u32> fmt::Debug for Gf2e<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl<const E: u32> fmt::Display for Gf2e<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}
