//! Computational order theory for finite Heyting algebras and the Bousfield
//! lattices of monoid-graded tensor triangulated categories.
//!
//! Everything here is finite and table-driven. Elements of a carrier are
//! addressed by their index in the carrier's declared order; subsets of a
//! carrier are [`ElemSet`] bitmasks, which caps carriers at
//! [`MAX_CARRIER`] elements.
//!
//! Objects of the category `T_M` graded by a finite commutative monoid `M`
//! with zero are modeled by their *support*: the set of nonzero degrees in
//! which they are nonzero. Suspensions, multiplicities and the ground field
//! carry no information about Bousfield classes or localizing ideals, so
//! they are erased. See [`support`] for the details.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod bousfield;
pub mod builtin;
pub mod enumerate;
pub mod heyting;
pub mod ideal;
pub mod monoid;
pub mod oracle;
pub mod order;
mod set;
pub mod support;

pub use bousfield::{BousfieldClass, BousfieldLattice, MainTheoremReport, PhiReport};
pub use heyting::{Booleanization, HeytingAlgebra, HeytingError, MorphismViolation};
pub use ideal::IdealSet;
pub use monoid::{CMonoid0, MonoidError};
pub use order::{Lattice, OrderError, Poset};
pub use set::{ElemSet, Submasks, MAX_CARRIER};
pub use support::SupportObject;
