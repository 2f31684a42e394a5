//! Presentations, reversing, divisibility and normal forms for Garside-type
//! monoids and categories.

pub mod artin;
pub mod error;
pub mod families;
pub mod germ;
pub mod monoid;
pub mod normal;
pub mod presentation;
pub mod rc;
pub mod reversing;
pub mod rewriting;
pub mod weights;

pub use error::{Error, Result};
pub use monoid::{BackendKind, Element, McmSet, Monoid, MonoidOptions};
pub use presentation::{Classification, Letter, Presentation, SignedWord};
