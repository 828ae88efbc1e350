//! Sparse multivariate polynomials over F_p with an integer grading.

mod fixed_point;
mod groebner;
mod monomial;
mod ring;

use alloc::string::String;

pub use fixed_point::{solve_fixed_point, FixedPoint};
pub use groebner::{
    buchberger, s_polynomial, AuditFailure, GroebnerBasis, GroebnerConfig, GroebnerStats,
    QuotientDimension,
};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use ring::{DegreeMismatch, DisplayPoly, Homogeneity, PolyRing, Polynomial, Substituted, Variable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("at most 16 variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("variable {0:?} declared twice")]
    DuplicateVariable(String),
    #[error("variable {0:?} has no image in the target ring")]
    UnmappedVariable(String),
    #[error("{what} exceeded the configured cap of {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },
    #[error("fixed-point iteration for {var} did not stabilize within {iterations} steps")]
    NoStabilization { var: String, iterations: usize },
}

/// The coefficient data of K(s)^*: the prime `p`, the height `s >= 2`, and the
/// degree `-2(p^s - 1)` of the periodicity generator `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientSpec {
    field: crate::field::Fp,
    s: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum CoefficientError {
    #[error(transparent)]
    NotPrime(#[from] crate::field::NotPrime),
    #[error("height s must be at least 2, got {0}")]
    HeightTooSmall(u32),
    #[error("p^s overflows for p = {p}, s = {s}")]
    Overflow { p: u32, s: u32 },
}

impl CoefficientSpec {
    pub fn new(p: u64, s: u32) -> Result<Self, CoefficientError> {
        let field = crate::field::Fp::new(p)?;
        if s < 2 {
            return Err(CoefficientError::HeightTooSmall(s));
        }
        let ps = (p as i64).checked_pow(s);
        if ps.is_none_or(|x| x > i64::MAX / 4) {
            return Err(CoefficientError::Overflow { p: p as u32, s });
        }
        Ok(CoefficientSpec { field, s })
    }

    pub fn field(&self) -> crate::field::Fp {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `deg(v) = -2(p^s - 1)`.
    pub fn v_degree(&self) -> i64 {
        -2 * ((self.p() as i64).pow(self.s) - 1)
    }
}

#[cfg(test)]
mod coefficient_tests {
    use super::*;

    #[test]
    fn v_degree() {
        assert_eq!(CoefficientSpec::new(2, 2).unwrap().v_degree(), -6);
        assert_eq!(CoefficientSpec::new(2, 3).unwrap().v_degree(), -14);
        assert_eq!(CoefficientSpec::new(3, 2).unwrap().v_degree(), -16);
        assert!(matches!(CoefficientSpec::new(2, 1), Err(CoefficientError::HeightTooSmall(1))));
        assert!(CoefficientSpec::new(6, 2).is_err());
    }
}
