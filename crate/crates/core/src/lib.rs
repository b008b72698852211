//! Geometric algebra G(3,0) organised around the geometric byte: eight
//! structure elements sitting on the vertices of a cube.

pub mod algebra;
pub mod clusters;
pub mod error;
pub mod frontend;
pub mod hilbert;
pub mod oracle;
pub mod transforms;

pub use algebra::{Blade, Multivector};
pub use clusters::{Label, StructureCoords};
pub use error::{Error, Result};
pub use transforms::Quaternion;
