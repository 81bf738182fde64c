//! Exact query-complexity engine for oracle problems whose oracles form a
//! finite group.
//!
//! Two problems are covered. *Symmetric oracle discrimination* asks for the
//! hidden group element `a` given black-box access to a unitary `pi(a)`;
//! *coset identification* only asks which coset of a fixed subgroup `H <= G`
//! the element lies in. For both, the optimal `t`-query success probability
//! is a character-theoretic quantity, and this crate computes it exactly
//! (as a rational number) from irreducible character tables built in exact
//! cyclotomic arithmetic.
//!
//! The crate is organised bottom-up:
//!
//! - [`cyclotomic`]: exact arithmetic in Q(zeta_m).
//! - [`group`]: concrete finite groups (permutation, abelian, dihedral,
//!   Heisenberg, function groups, explicit tables), conjugacy classes,
//!   subgroup embeddings and class fusion, permutation actions.
//! - [`partitions`]: integer partitions, hooks, and symmetric-group
//!   character values by border-strip recursion.
//! - [`chartab`]: irreducible character tables per family, exact validation,
//!   and a versioned JSON interchange format.
//! - [`repcalc`]: class-function calculus — permutation characters, inner
//!   products, tensor products, restriction, induced multiplicities, irrep
//!   supports and tensor-power support iteration.
//! - [`engine`]: the success-probability formulas, exact and bounded-error
//!   query complexities, the alternating-group and sign special paths, the
//!   classical base size, and JSON problem/report types.
//! - [`families`]: closed forms and combinatorial brute-force oracles for
//!   the worked example families (binomial-sum identification, group
//!   summation, Heisenberg, polynomial-curve sumsets, longest increasing
//!   subsequence counts).
//! - [`verify`]: an independent dense-matrix simulation that builds the
//!   optimal protocol explicitly and validates the exact formulas
//!   numerically on small instances.

pub mod caps;
pub mod chartab;
pub mod cli;
pub mod cyclotomic;
pub mod engine;
pub mod error;
pub mod families;
pub mod group;
pub mod partitions;
pub mod repcalc;
pub mod verify;

pub use error::{Error, Result};
