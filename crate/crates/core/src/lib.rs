//! Multi-logarithmic forms and vector fields along Cohen–Macaulay
//! subspaces of weighted affine space, with the `I`-duality machinery
//! that certifies freeness.

pub mod approximation;
pub mod blocks;
pub mod error;
pub mod forms;
pub mod freeness;
pub mod logforms;

pub use approximation::{IContext, IFreeApproximation};
pub use error::{CoreError, Result};
pub use forms::Exterior;
pub use logforms::LogGeometry;
