//! Exhaustive, finite-scale verification of comonads on G-sets, their
//! distributive law, coalgebras over them, and the duplicial operator on the
//! bar construction of a finite group.
//!
//! Everything is computed by enumeration over explicit tables. Failures are
//! values ([`verdict::Verdict`]) carrying the first counterexample found.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod coeff;
pub mod comonad;
pub mod duplicial;
pub mod emcat;
pub mod fingroup;
pub mod gset;
pub mod homology;
pub mod triangle;
pub mod verdict;

pub use fingroup::{standard_group, Group, GroupError, GroupKind};
pub use gset::{CrossedGSet, EquivariantMap, GSet, GSetError, OrbitSet};
pub use verdict::{Counterexample, Verdict};
