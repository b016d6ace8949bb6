//! Exact-arithmetic toolkit for elliptically fibered Calabi-Yau fourfolds of
//! Borcea-Voisin type.
//!
//! The library builds elliptic K3 surfaces in Weierstrass form over ℙ¹ with
//! prescribed I₅ fibers, classifies their singular fibers by exact vanishing
//! orders, assembles the fourfold fibration data over ℙ²×ℙ¹ from a nodal plane
//! sextic and a K3 model, and computes Hodge diamonds, Néron-Severi
//! bookkeeping and projective-model dimensions. Every computation runs over
//! the rationals with arbitrary precision; there is no floating point
//! anywhere.

pub mod error;
pub mod exactmath;
pub mod families;
pub mod fourfold;
pub mod hodge;
pub mod lattice;
pub mod linsys;
pub mod report;
pub mod sextic;
pub mod weierstrass;

pub use error::Error;
pub use exactmath::{BiForm, BinaryForm, ProjPoint1, ProjPoint2, Rational, TernaryForm};
pub use fourfold::FourfoldModel;
pub use hodge::HodgeDiamond4;
pub use sextic::NodalSextic;
pub use weierstrass::{FiberInventory, KodairaType, WeierstrassK3};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
