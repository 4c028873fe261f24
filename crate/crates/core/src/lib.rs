//! Matroids, finitely presented abelian groups, and three presentations of
//! the inner Tutte group of a matroid.

pub mod catalog;
pub mod element_set;
pub mod error;
pub mod io;
pub mod lattice;
pub mod matroid;
pub mod scalar;
pub mod symbol;
pub mod tutte;

pub use element_set::ElementSet;
pub use error::{Axiom, InputError, LatticeError, MatroidError, TutteError};
pub use matroid::Matroid;
pub use symbol::{GeneratorSymbol, QuadKind, RelationTag};

/// Scalar used by the library-level aliases below.
pub type Int = num_bigint::BigInt;
pub type Presentation = lattice::Presentation<Int>;
pub type GroupInvariants = lattice::GroupInvariants<Int>;
pub type SparseVector = lattice::SparseVector<Int>;
