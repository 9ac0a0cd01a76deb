//! Face rings: Stanley–Reisner rings, face rings of simplicial posets and
//! topological face rings of panel structures, with Hilbert series and
//! isomorphism certificates.

pub mod block;
pub mod hilbert;
pub mod iso;
pub mod poset_ring;

pub use block::{stanley_reisner, topological_face_ring, BlockElement, CoefficientClass, Monomial, MonomialBlockRing};
pub use hilbert::{exact_support_count, HilbertSeries};
pub use iso::{iso_check, FaceRing, IsoVerdict, Mismatch, Stage};
pub use poset_ring::{ChainMonomial, PosetElement, PosetFaceRing, Selector, DEFAULT_STEP_LIMIT};
