//! Exact combinatorics in extended affine Weyl groups with diagram twists:
//! root-system data, integer-matrix element arithmetic, Iwahori-Matsumoto
//! lengths, descent closures and conjugacy-class minima, Kottwitz invariants
//! over coweight-lattice quotients, and the parabolic Coxeter case tables.
//!
//! All arithmetic is integer-exact; there is no floating point anywhere.

mod error;

pub mod affine_weyl;
pub mod case_tables;
pub mod classification;
pub mod conjugacy;
pub mod finite_weyl;
pub mod lattice;
pub mod matrix;
pub mod root_system;

pub use affine_weyl::{context_for, AffineElement, AffineWeyl, OmegaElement, OrderReport};
pub use case_tables::{derive_entry, table_entries, verify_entry, CaseEntry, EntryReport};
pub use classification::{
    classify_representative, kottwitz, lattice_identity_check, CoinvariantElt, Coinvariants,
    LatticeIdentityReport,
};
pub use conjugacy::{
    descent_closure, has_finite_coxeter_part, omega_translate_class, parabolic_coxeter_elements,
    random_conjugates, verify_main_theorem, ClassChecks, ClassReport, ClosureOptions,
    DescentClosure,
};
pub use error::Error;
pub use finite_weyl::{FiniteWeyl, FiniteWeylElement, Twist};
pub use matrix::IntMat;
pub use root_system::{build_root_system, minuscule_coweights, RootSystem, TypeLetter, MAX_RANK};

pub type Result<T> = std::result::Result<T, Error>;
