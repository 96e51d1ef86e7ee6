//! Irreducible Specht module labels in blocks of the symmetric groups.
//!
//! A Specht module `S^λ` of `S_n` that stays irreducible modulo a prime `p`
//! is labelled by a partition `λ` satisfying Fayers' criterion. This crate
//! decomposes such partitions, constructs every one of them inside a given
//! p-block from a pair of smaller partitions, counts them, and checks the
//! constructions against an exhaustive search.

pub mod block;
pub mod cli;
pub mod cores;
pub mod error;
pub mod irreducible;
pub mod oracle;
pub mod partition;
pub mod verify;

pub use block::{
    construct_from_pair, count_block, count_regular_and_restricted, enumerate_block,
    enumerate_label_pairs, regular_irreducibles, BlockEnumeration, LabelPair, LabeledPartition,
    RegularRestricted,
};
pub use cores::{p_core, p_residual, p_weight, residual_bound, BlockId, PResidual, ResidualBound};
pub use error::{Error, Result};
pub use irreducible::{
    decompose, expand_top, glue_oplus, glue_oplus_hat, is_p_bottom, is_p_irreducible,
    is_p_top, is_specht_irreducible, shrink_top, Decomposition,
};
pub use partition::{valuation, HookTable, Node, Partition, Prime};
