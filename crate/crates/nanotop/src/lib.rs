//! Nano topological spaces from rough-set approximations.
//!
//! A nano topology τ_ℛ(ℳ) on a finite universe is built from the lower
//! approximation, upper approximation and boundary of a target set ℳ
//! under an equivalence relation ℛ; it has at most five open sets. This
//! crate constructs such spaces, classifies subsets into the five weak
//! open-set classes (N, Np, Ns, Nα, NSα) with their closed duals,
//! evaluates the derived interior/closure operators two independent
//! ways, and exhaustively verifies the catalogued laws relating all of
//! these over small finite spaces, including counterexample mining.
//!
//! Everything is exact bit-level set algebra (universes are capped at 64
//! elements, exhaustive walks at 24) and every value is immutable after
//! construction, so spaces and subsets can be shared freely across
//! threads.

pub mod classes;
pub mod operators;
pub mod partitions;
pub mod rough;
pub mod sets;
pub mod verifier;

pub use classes::{
    enumerate_family, is_closed, is_nowhere_dense, is_open, semi_alpha_witness, ClassKind, Side,
};
pub use operators::{
    class_closure, class_interior, semi_alpha_closure_formula, semi_alpha_interior_formula,
};
pub use partitions::partitions_of;
pub use rough::{NanoSpace, Partition, PartitionError};
pub use sets::{
    enumerate_subsets, FoldMode, SetError, SetFamily, Subset, Universe, ENUMERATION_CAP,
    UNIVERSE_CAP,
};
pub use verifier::{
    check_all, check_theorem, enumerate_spaces, mine, ClassSpec, MineFind, MineGoal, StrictLaw,
    TheoremId, VerdictReport, VerdictStatus, SPACE_CAP, THEOREM_CAP,
};
