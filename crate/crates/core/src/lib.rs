//! Finite groups, naturally edge-colored Cayley graphs, and the machinery
//! for deciding whether every color-preserving automorphism of such a graph
//! is affine.

pub mod blocks;
pub mod cartesian;
pub mod cayley;
pub mod cca;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod perm;
pub mod permgroup;
pub mod search;
pub mod verify;

pub use blocks::BlockSystem;
pub use cayley::{ColoredCayleyGraph, ConnectionSet};
pub use error::{Error, Result};
pub use group::{ElementSet, GroupTable};
pub use perm::Perm;
pub use permgroup::PermGroup;
