//! Computational algebra for the inverse monoid of order isomorphisms
//! between principal filters of `ℕⁿ` under the product order.
//!
//! Elements are stored in canonical form `(σ, x, y)`, meaning the map
//! `↑x → ↑y`, `z ↦ (z − x)σ + y`. Maps compose left to right: `a.compose(&b)`
//! applies `a` first. The [`grid`] module is an independent brute-force
//! oracle that works with explicit finite tables, and [`suites`] holds the
//! property checks that tie the two together.

pub mod congruence;
pub mod element;
pub mod equations;
pub mod error;
pub mod grid;
pub mod lattice;
pub mod perm;
pub mod quotient;
pub mod suites;
pub mod universe;
pub mod words;

pub use congruence::{
    congruence_from_pair, congruence_relates, normal_closure, subgroup_contains,
    CongruenceDescriptor, NormalSubgroupRep,
};
pub use element::{enumerate_units, GreenFlags, IpfElement, Point, DEFAULT_MAX_DIM};
pub use equations::{shift_element, solve_left, solve_right, up_set};
pub use error::{IpfError, Result};
pub use grid::{grid_compose, grid_recognize, is_order_iso, realize, witness_leq, witness_mg, GridMap};
pub use lattice::{hnf_basis, lattice_contains, LatticeBasis};
pub use perm::{perm_apply, Permutation};
pub use quotient::{
    mg_related, psi, quotient_inv, quotient_mul, sd_mul, top_of_class, upsilon, QuotientElement,
    SemidirectPair,
};
pub use words::{bicyclic_word, evaluate, format_element, parse, Expr};
