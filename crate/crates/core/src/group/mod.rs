//! Finite groups as Cayley tables.
//!
//! Groups are built from polycyclic presentations ([`GroupSpec`]) and then
//! analysed purely through the multiplication table: subgroups and cosets,
//! conjugacy classes, centres and quotients, commuting-tuple orbit counts,
//! characters induced from subgroups, invariants, and isomorphism search.

mod build;
mod character;
mod commuting;
mod fingerprint;
mod iso;
mod spec;
mod structure;

use alloc::string::String;

pub use build::{build_group, build_source, direct_product, verify_relations, Group};
pub use character::{induce_character, Character, ClassFunction, CyclotomicSum};
pub use commuting::{
    commuting_tuple_class_count, commuting_tuple_class_count_chained, commuting_tuple_class_count_naive,
    ChiStrategy,
};
pub use fingerprint::{fingerprint, Fingerprint};
pub use iso::{find_isomorphism, is_isomorphic};
pub use spec::{
    family_matrices, family_spec, is_prime_power, ConjugationRule, GeneratorDecl, GroupSource,
    GroupSpec, PowerRule, Word,
};
pub use structure::{
    abelian_invariants, abelian_type, center, centralizer, conjugacy_classes, derived_subgroup, quotient,
    subgroup_generated, Subgroup,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid group presentation: {0}")]
    InvalidSpec(String),
    #[error("unsupported rule: {0}")]
    UnsupportedRule(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),
    #[error("group order {order} exceeds the configured limit {limit}")]
    SizeLimit { order: u64, limit: u64 },
    #[error("enumeration of {attempted} tuples exceeds the budget of {limit}")]
    BudgetExceeded { attempted: u128, limit: u64 },
    #[error("not a character: {0}")]
    NotACharacter(String),
}

/// Size limits and budgets for group computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupConfig {
    /// Largest group order that may be built.
    pub max_order: usize,
    /// Largest order handled by [`is_isomorphic`].
    pub iso_max_order: usize,
    /// Associativity is checked on all triples up to this order.
    pub exhaustive_check_limit: usize,
    /// Random triples tested above `exhaustive_check_limit`.
    pub random_associativity_triples: u64,
    /// Tuples (or search nodes) allowed in commuting-tuple counts.
    pub tuple_budget: u64,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig {
            max_order: 1 << 13,
            iso_max_order: 256,
            exhaustive_check_limit: 512,
            random_associativity_triples: 1_000_000,
            tuple_budget: 100_000_000,
        }
    }
}

/// The order-32 group with `b, a` of order 4 and `c` of order 2, where
/// `a^-1 b a = b^3`, `c^-1 a c = a^3`, and `b` commutes with `c`.
pub fn g36_spec() -> GroupSpec {
    GroupSpec::new()
        .generator("b", 4)
        .generator("a", 4)
        .generator("c", 2)
        .conjugation("b", "a", "b^3")
        .and_then(|s| s.conjugation("a", "c", "a^3"))
        .and_then(|s| s.conjugation("b", "c", "b"))
        .expect("static presentation")
}
