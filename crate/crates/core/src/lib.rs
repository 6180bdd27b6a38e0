//! Finite ordered semigroups: validation, ideals, Green's relations,
//! class membership tests, Rees factors and nil extensions, together
//! with exhaustive enumeration of all small instances.
//!
//! The [`theorems`] module pairs four element-wise characterizations of
//! nil extensions with a structural oracle that searches for the base
//! ideal directly, and [`enumerate::census`] runs both over every
//! ordered semigroup of a given order.

pub mod classes;
pub mod enumerate;
pub mod extension;
pub mod fixtures;
pub mod ideals;
pub mod relations;
pub mod report;
pub mod semigroup;
pub mod subset;
pub mod theorems;

pub use extension::BaseClass;
pub use semigroup::{
    CanonicalForm, Instance, OrderedSemigroup, PowerOrbit, ValidationError, Violation,
};
pub use subset::Subset;
pub use theorems::{Theorem, VerificationReport};
