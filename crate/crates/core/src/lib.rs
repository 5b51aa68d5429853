//! Exact computations in Lam's algebra of ribbon Schur operators.
//!
//! The crate covers partitions with their cores and quotients, word statistics,
//! canonical forms and span-membership tests in several quotients of the free
//! algebra on letters `u_i`, restricted square strict tableaux (RSST) with their
//! reading words, noncommutative flagged Schur functions, and the Schur expansion
//! of inversion-statistic LLT polynomials, both via RSST and via an independent
//! quasisymmetric solver.
//!
//! All arithmetic is exact; coefficients are Laurent polynomials in `q` over the
//! rationals.

pub mod algebra;
pub mod error;
pub mod golden;
pub mod laurent;
pub mod llt;
pub mod ncsf;
pub mod rsst;
pub mod shapes;
pub mod words;

pub use algebra::{
    act_on_partition_spin, act_on_tuple, canonical_form, equal_in_quotient, equivalence_class,
    AlgebraElement, CanonicalForm, LamElement, RelationSystem, TripleChoice,
};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use llt::{SkewTuple, SymFunc};
pub use rsst::{Arrow, ArrowKind, RestrictedShape, Rsst};
pub use shapes::{Cell, CellOrder, Order, Partition, SkewShape};
pub use words::Word;
