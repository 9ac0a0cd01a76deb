//! Simplicial complexes, simplicial posets, subdivisions and nerves.

pub mod enumerate;
pub mod nerve;
pub mod poset;
pub mod simplicial;
pub mod subdivision;

pub use enumerate::all_complexes;
pub use nerve::nerve;
pub use poset::SimplicialPoset;
pub use simplicial::{BuildWarning, Label, SimplicialComplex, Subcomplex};
pub use subdivision::{barycentric_subdivision, face_cells, face_subcomplex};
