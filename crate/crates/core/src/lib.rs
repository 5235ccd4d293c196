//! Fusion rings, modular data and condensable algebras as finite exact data.
//!
//! The crate is organised bottom-up:
//!
//! * [`cyclotomic`] and [`scalar`]: exact elements of `Q(zeta_N)` with a float fallback.
//! * [`basering`]: fusion (Z+-based) rings, Frobenius-Perron dimensions, subring lattices.
//! * [`groups`]: finite groups and their group rings, used as test corpora and as the
//!   pointed parts of the built-in families.
//! * [`modulardata`]: (S, T) data, Verlinde fusion, characters and S-matrix idempotents.
//! * [`semisimple`]: Wedderburn block decomposition of a complexified fusion algebra.
//! * [`condensation`]: condensable algebras, the fusion action at character level,
//!   Schur-Weyl block matching, indicators and formal codegrees.
//! * [`galois`]: the lattice of fusion subrings containing the local part, invariant
//!   subalgebras and the order-reversing correspondence.
//! * [`builtin`]: generators for the lattice-VOA families and small oracle MTCs.
//! * [`schema`]: the `ring.v1`, `mtc.v1` and `bundle.v1` JSON formats.
//! * [`cli`]: the `fuscond` command-line front end.

pub mod basering;
pub mod builtin;
pub mod cli;
pub mod condensation;
pub mod cyclotomic;
pub mod error;
pub mod galois;
pub mod groups;
pub mod linalg;
pub mod modulardata;
pub mod report;
pub mod scalar;
pub mod schema;
pub mod semisimple;

pub use basering::{BasedRing, DimSource, DimVector, Label, Subring};
pub use builtin::ExampleSpec;
pub use condensation::{
    codegree_check, indicator, indicator_row, schur_weyl, schur_weyl_seeded, Ambient, CodegreeReport,
    CondensableAlgebra, CondensationBundle, MatchedBlock, SchurWeylReport,
};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use galois::{group_quotient, invariant_subalgebra, lattice, verify_correspondence, GaloisReport, GroupQuotient};
pub use groups::FiniteGroup;
pub use modulardata::ModularData;
pub use report::{Check, ValidationReport, Violation};
pub use scalar::Scalar;
pub use semisimple::{AssocAlgebra, Block, BlockProfile};

/// Default residual tolerance for float checks.
pub const DEFAULT_TOL: f64 = 1e-9;
