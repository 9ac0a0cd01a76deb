//! Cup products on simplicial cochains and the ring structure on the
//! cohomology of polyhedral products of sphere pairs.

pub mod cochain;
pub mod ring;

pub use cochain::{simplicial_cup, Cochain};
pub use ring::{ds_ring, BasisClass, Product, RingModel};
