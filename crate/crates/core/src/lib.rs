pub mod cli;
pub mod complexes;
pub mod constructions;
pub mod cupring;
pub mod decomp;
pub mod error;
pub mod facering;
pub mod homology;
pub mod io;
pub mod oracle;
pub mod report;
mod ser;
pub mod spheres;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
