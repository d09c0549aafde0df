//! Distributions of quadrant marked mesh patterns over 132-avoiding
//! permutations.
//!
//! Every distribution polynomial `Q_n(x)` is available along three routes:
//! exhaustive enumeration ([`mesh::dist_poly`]), the coefficient recursions
//! ([`genfun::recursion_poly`]) and truncated generating-function algebra
//! ([`genfun::closed_form_series`], [`genfun::verify_quadratic`]). The
//! [`harness`] module cross-checks all of them, together with the Dyck path
//! and binary tree bijections in [`bijections`].

pub mod bijections;
pub mod error;
pub mod genfun;
pub mod harness;
pub mod mesh;
pub mod perm;
pub mod printed;
pub mod series;
pub mod xpoly;

pub use error::{Error, Result};
pub use mesh::{QuadCond, QuadSpec};
pub use perm::Permutation;
pub use series::TSeries;
pub use xpoly::XPoly;
