//! The free algebra on letters `u_i` and its quotients.
//!
//! * [`element`]: finite sums of words with Laurent-polynomial coefficients.
//! * [`lam`]: Lam's quotient, decided by canonical forms (lexicographically least word
//!   of a commutation class together with a power of `q`).
//! * [`action`]: the actions on `k`-tuples of partitions and on single partitions.
//! * [`relations`]: weaker presentations decided by exact span membership.

pub mod action;
pub mod element;
pub mod lam;
pub mod relations;

pub use action::{act_on_partition_spin, act_on_tuple};
pub use element::{pairing, AlgebraElement};
pub use lam::{canonical_form, equivalence_class, CanonicalForm, LamElement, DEFAULT_CLASS_CAP};
pub use relations::{equal_in_quotient, RelationSystem, TripleChoice, DEFAULT_SPAN_CAP};
