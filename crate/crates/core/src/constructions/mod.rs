//! Panel structures: generic panels, the cone constructions over complexes
//! and simplicial posets, and partition coarsenings.

mod cone;
mod panel;

pub use cone::{panelize_partition, panelize_poset, panelize_simplicial, partition_vertices};
pub use panel::{panelize_from_simplices, panelize_generic, Face, Origin, PanelComplex};

#[cfg(test)]
mod tests;
