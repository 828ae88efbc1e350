//! End-to-end checks of ring presentations against group-theoretic counts.
//!
//! A [`RingPresentation`] lists graded generators, relation templates,
//! implicitly defined auxiliary generators, and the group it describes. The
//! pipeline instantiates everything at a height `s`, eliminates the
//! auxiliary generators by fixed-point iteration, sets `v = 1`, computes a
//! Gröbner basis, and compares the quotient dimension with the number of
//! conjugation orbits of commuting s-tuples in the group.

mod family;
mod pipeline;
mod presentations;

use alloc::string::String;
use alloc::vec::Vec;

pub use family::{classify_family, FamilyClass, FamilyClassification};
pub use pipeline::{
    build_ideal, verify_extra_relations, verify_rank, EliminatedIdeal, ExtraRelation, FixedPointReport,
    HomogeneityEntry, VerificationReport, VerifyOptions,
};
pub use presentations::{abelian_presentation, g36_presentation};

use crate::dsl::DslError;
use crate::group::{GroupError, GroupSource};
use crate::poly::{CoefficientError, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Coefficient(#[from] CoefficientError),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVariable {
    pub name: String,
    pub degree: i64,
}

/// `var = equation`, where `equation` may itself involve `var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitDefinition {
    pub var: String,
    pub equation: String,
}

/// A graded ring presentation over K(s)^*, parameterized by `s`.
///
/// The periodicity generator is always called `v` and is not listed among
/// the variables. Variables named in `implicit` are eliminated before the
/// quotient is formed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub name: String,
    pub p: u32,
    pub variables: Vec<GradedVariable>,
    pub relations: Vec<String>,
    pub implicit: Vec<ImplicitDefinition>,
    /// Indices of the relations used to reduce fixed-point iterates. When
    /// absent, every relation not involving an implicit variable is used.
    pub reducers: Option<Vec<usize>>,
    /// Further elements expected to lie in the ideal.
    pub extra_relations: Vec<String>,
    pub group: Option<GroupSource>,
}

impl RingPresentation {
    /// Checks that templates parse, names are declared, and indices are in
    /// range.
    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |m: String| Err(VerifyError::InvalidPresentation(m));
        for (i, v) in self.variables.iter().enumerate() {
            if v.name == "v" || v.name == "s" || v.name == "p" {
                return bad(alloc::format!("variable name {:?} is reserved", v.name));
            }
            if self.variables[..i].iter().any(|w| w.name == v.name) {
                return bad(alloc::format!("variable {:?} declared twice", v.name));
            }
        }
        for d in &self.implicit {
            if !self.variables.iter().any(|v| v.name == d.var) {
                return bad(alloc::format!("implicit variable {:?} is not declared", d.var));
            }
        }
        if let Some(r) = &self.reducers {
            if let Some(&i) = r.iter().find(|&&i| i >= self.relations.len()) {
                return bad(alloc::format!("reducer index {i} out of range"));
            }
        }
        for t in self.relations.iter().chain(&self.extra_relations).chain(self.implicit.iter().map(|d| &d.equation)) {
            crate::dsl::RelationTemplate::parse(t)?;
        }
        Ok(())
    }
}
