//! Exact computations with queer Lie superalgebras, their map superalgebras
//! over finitely generated commutative coefficient algebras, and finite
//! dimensional irreducible modules of those.

pub mod assoc;
pub mod cartan;
pub mod coeff;
pub mod error;
pub mod graded;
pub mod hw;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod mapsuper;
pub mod products;
pub mod queer;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
