//! Arithmetic in the prime field F_p.

use core::fmt;

/// The prime field F_p for a prime `p < 2^16`.
///
/// Elements are plain `u32` residues in `0..p`; the field value only carries
/// the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("{0} is not a prime below 2^16")]
pub struct NotPrime(pub u64);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, NotPrime> {
        if p >= 1 << 16 || !is_prime(p) {
            return Err(NotPrime(p));
        }
        Ok(Fp { p: p as u32 })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `0..p`.
    #[inline]
    pub fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}
