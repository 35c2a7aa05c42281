//! Modified difference ascent sequences, d-Fishburn permutations and the
//! maps between them.
//!
//! Words are 1-based: positions and values start at 1. The crate is
//! `no_std` and needs only `alloc`.

#![no_std]
extern crate alloc;

pub mod burge;
pub mod dyck;
pub mod error;
pub mod fishburn;
pub mod hat;
pub mod perm;
pub mod seq;
pub mod series;
pub mod tree;

pub use error::{Error, Result};
pub use perm::Perm;
pub use seq::{IndexSet, MinPairs, Seq};
