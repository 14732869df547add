//! Codimension-two subvarieties of projective space from syzygies.
//!
//! The crate builds finite-length graded modules, resolves them, assembles
//! bundle maps `F -> G` whose degeneracy loci are codimension-two schemes,
//! links those schemes by complete intersections and checks their numerical
//! invariants. Everything runs over a prime field `F_p` (default 31991).
//!
//! Layers, bottom up:
//!
//! * [`field`], [`monomial`], [`poly`], [`module`], [`parse`]: arithmetic,
//!   polynomials, graded free modules and polynomial matrices, text formats.
//! * [`groebner`]: Buchberger for submodules of free modules, normal forms,
//!   quotients, saturation, Hilbert functions.
//! * [`resolution`]: minimal free resolutions, Betti tables, Ext modules,
//!   cohomology tables of ideal sheaves, mapping cones.
//! * [`factory`]: Koszul complexes and generic finite-length modules.
//! * [`determinantal`]: bundle maps and their degeneracy loci.
//! * [`liaison`]: linkage by complete intersections.
//! * [`invariants`]: double-point numerology and the families catalog.
//! * [`smoothness`]: Jacobian criterion.
//! * [`cli`]: run configuration and the verbs of the `codim2` binary.
//!
//! See `examples/` for one runnable program per capability.

pub mod cli;
pub mod determinantal;
pub mod error;
pub mod factory;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod liaison;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod rng;
pub mod smoothness;

pub use error::{Error, Result};
pub use field::Fp;
pub use module::{FreeModule, PolyMatrix, Vector};
pub use monomial::Mono;
pub use poly::{Poly, Ring};
