use core::cmp::Ordering;

/// Maximum number of variables a [`Monomial`] can carry.
pub const MAX_VARS: usize = 16;

/// An exponent vector. Slots beyond the ring's variable count stay zero, so
/// comparisons never need to know the variable count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial([u16; MAX_VARS]);

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize, e: u16) -> Self {
        let mut m = Self::one();
        m.0[i] = e;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        m.0[..exps.len()].copy_from_slice(exps);
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    #[inline]
    pub fn set_exp(&mut self, i: usize, e: u16) {
        self.0[i] = e;
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut r = *other;
        for (a, b) in r.0.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        r
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut r = *self;
        for a in r.0.iter_mut() {
            let v = (*a as u32).checked_mul(e).expect("exponent overflow");
            *a = u16::try_from(v).expect("exponent overflow");
        }
        r
    }

    /// Variable index if this is a pure power `x_i^e` with `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Admissible monomial orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic, variable 0 largest.
    #[default]
    Grevlex,
    /// Pure lexicographic, variable 0 largest.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => {
                let da = a.total_degree();
                let db = b.total_degree();
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..MAX_VARS).rev() {
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}
