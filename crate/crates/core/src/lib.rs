//! Computational algebra for checking Morava K-theory ring presentations of
//! classifying spaces of small 2-groups.
//!
//! The crate is `no_std` (with `alloc`) and purely computational:
//!
//! * [`poly`]: sparse polynomials over F_p with a grading, Buchberger Gröbner
//!   bases, normal forms, quotient dimensions, and fixed-point elimination.
//! * [`dsl`]: the parameterized relation language and its instantiation.
//! * [`group`]: finite groups from polycyclic presentations, conjugacy
//!   classes, commuting-tuple counts, induced characters, and isomorphism.
//! * [`cp_module`]: Jordan structure, cohomology, and tensor products of
//!   F_p[C_p]-modules.
//! * [`verifier`]: the G36 presentation as data and the end-to-end checks.
#![no_std]

extern crate alloc;

pub mod cp_module;
pub mod dsl;
pub mod field;
pub mod group;
pub mod poly;
pub mod verifier;
