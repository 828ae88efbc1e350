//! The relation language: parameterized polynomial expressions such as
//! `c*(c + x1 + v*sum(i=1..s-1, c^(2^s-2^i)*x2^(2^(i-1))))`, parsed into an
//! AST and instantiated as concrete polynomials for given `(p, s)`.

mod ast;
mod instantiate;
mod parser;

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

pub use ast::{ExpoExpr, Expr, Param};
pub use parser::parse_expr;

use crate::poly::{CoefficientSpec, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("summation index {0:?} shadows a variable, parameter, or enclosing index")]
    ShadowedName(String),
    #[error("exponent {expr} evaluates to {value}")]
    NegativeExponent { expr: String, value: i64 },
    #[error("exponent {0} is too large")]
    ExponentOverflow(String),
    #[error("ring characteristic {ring} does not match p = {spec}")]
    CharacteristicMismatch { ring: u32, spec: u32 },
}

/// A parsed relation template.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationTemplate {
    ast: Expr,
}

impl RelationTemplate {
    pub fn parse(text: &str) -> Result<Self, DslError> {
        Ok(RelationTemplate {
            ast: parse_expr(text)?,
        })
    }

    pub fn from_ast(ast: Expr) -> Self {
        RelationTemplate { ast }
    }

    pub fn ast(&self) -> &Expr {
        &self.ast
    }

    /// Evaluates exponents at `spec`, expands sums, and reduces coefficients
    /// mod p, producing a polynomial in `ring`.
    pub fn instantiate(&self, spec: &CoefficientSpec, ring: &PolyRing) -> Result<Polynomial, DslError> {
        instantiate::instantiate(&self.ast, spec, ring)
    }
}

impl FromStr for RelationTemplate {
    type Err = DslError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for RelationTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ast.fmt(f)
    }
}
