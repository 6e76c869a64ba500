//! Executable semantics for deriving quicksort in a monadic calculus.
//!
//! Nondeterministic computations are denoted by canonical finite sets of
//! outcomes ([`Outcomes`]); stateful ones by sets of `(value, final state)`
//! pairs over an integer-indexed array ([`ArrayState`]). On top of that the
//! crate provides the list-level sorting specification (`perm`, `slowsort`),
//! the derived list quicksort and its accumulating partitions, the derived
//! in-place Lomuto partition and array quicksort, and a registry of
//! obligations that checks every law and refinement step by exhaustive
//! enumeration over small inputs.

pub mod array_model;
pub mod effects;
mod error;
pub mod listspec;
pub mod quicksort_array;
pub mod quicksort_list;
pub mod refinement;

pub use array_model::{ArrayState, DenseArray, Index, MonadArr, StateStep};
pub use effects::{KleisliTable, Outcomes, StateOutcomes};
pub use error::{Error, Result};
pub use listspec::{Elm, ElmList};
pub use quicksort_list::{PartitionPair, PartitionTriple};
pub use refinement::{Obligation, Report, Verdict};
