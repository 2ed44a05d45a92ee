//! Self-dual code construction and analysis over small characteristic-2
//! alphabets.
//!
//! The crate builds generator matrices of the bordered four-block form
//! `[I | A B; B^T A^T]` from pairs of group-ring elements, verifies
//! self-duality over the coefficient ring, maps the result to a binary
//! code through Gray maps, and computes exact minimum weights and
//! low-weight coefficient counts with a bit-packed two-information-set
//! enumerator. Codes can be further derived by a length-(n+2) extension
//! and by the neighbor construction.
//!
//! Modules:
//!
//! - [`rings`]: arithmetic and text codecs for F2, F2+uF2, F4, F4+uF4.
//! - [`groupring`]: group labelings, group-ring arithmetic, the
//!   involution and the sigma matrix map.
//! - [`construct`]: the bordered four-block generator and its
//!   self-duality conditions.
//! - [`gray`]: the Gray maps between the alphabets and down to F2.
//! - [`bincode`]: bit-packed binary linear code engine (reduction,
//!   duality, exact weight counts, enumerator classification).
//! - [`derive`]: the extension and neighbor derivations.

pub mod bincode;
pub mod construct;
pub mod derive;
mod error;
pub mod gray;
pub mod groupring;
pub mod rings;

pub use error::{Error, Result};
