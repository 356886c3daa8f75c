//! Exact enumeration of regions of deformed braid arrangements of Catalan
//! and semiorder type, organised by level (recession-cone dimension).
//!
//! Regions are encoded combinatorially by tuples of labeled Dyck paths,
//! the level of a region is read off from the first Dyck path, and the
//! resulting counts are checked against closed forms and generating
//! function identities in [`verify`].
//!
//! Permutations and labels are 0-based index vectors throughout: the word
//! `w` lists `w[0], w[1], ...`, so the one-line word `45312` of the
//! documentation is `[3, 4, 2, 0, 1]`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arrangement;
pub mod bijection;
pub mod dyck;
pub mod exactnum;
pub mod mcatalan;
pub mod verify;

pub use exactnum::{EpsRational, Rational};
