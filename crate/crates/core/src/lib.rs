//! Triangles sharing a circumcircle and an Euler (nine-point) circle.
//!
//! The inverse `E'` of the Euler circle in the circumcircle `C` forms a
//! poristic pair `(E', C)`; the triangles with circumcircle `C` and Euler
//! circle `E` are the contact triangles of that pair. The same family is
//! inscribed in `C` and circumscribed about the i-conic, the negative pedal
//! of `E` with respect to the circumcenter.
//!
//! - [`kernel`]: points, circles, lines, inversion, poles and polars.
//! - [`triangle`]: circumcircle, orthocenter, nine-point circle, tangential
//!   triangle, angle classification.
//! - [`porism`]: pair compatibility, `E'`, tangent-chasing construction,
//!   fertile arcs, family sweeps.
//! - [`iconic`]: negative pedal conics, tangency tests, polar duality.

pub mod error;
pub mod iconic;
pub mod kernel;
pub mod porism;
pub mod triangle;

pub use error::{GeomError, Result};
pub use iconic::{CentralConic, ConicKind};
pub use kernel::{Circle, GeneralizedCircle, Line, Point};
pub use porism::{ArcSet, PairClassification, PoristicPair};
pub use triangle::{AngleKind, Triangle};
