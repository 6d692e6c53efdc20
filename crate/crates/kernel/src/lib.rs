//! Commutative algebra over weighted polynomial rings with rational
//! coefficients: Gröbner bases for graded modules, kernels, colons,
//! subquotients, free resolutions, Hilbert series and Hom/Ext.

pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod homological;
pub mod module;
pub mod ops;
pub mod parse;
pub mod poly;
pub mod presented;
pub mod resolution;
pub mod ring;

pub use error::{KernelError, Result};
pub use groebner::{GroebnerBasis, GroebnerEngine, ModuleOrder};
pub use hilbert::HilbertSeries;
pub use module::{FreeModule, Vector};
pub use parse::parse_polynomial;
pub use poly::{Coeff, Polynomial};
pub use presented::{Ideal, ModuleMap, Presentation, PresentedModule, Submodule};
pub use resolution::{minimal_resolution, BettiTable, Resolution};
pub use ring::{Monomial, Ring, RingContext, MAX_VARS};
