//! Orbit combinatorics for a family of double flag varieties: marked
//! matching graphs parametrize the orbits; the crate computes their
//! invariants, the closure order with its cover moves, the symmetrized and
//! exotic Steinberg maps, and a generalized Robinson-Schensted bijection,
//! together with an independent exact-rational linear-algebra oracle that
//! verifies the Steinberg maps on sampled conormal elements.

pub mod error;
pub mod grs;
pub mod oracle;
pub mod orbit;
pub mod partition;
pub mod poset;
pub mod ratmat;
pub mod report;
pub mod signed;
pub mod steinberg;
pub mod tableau;

pub use error::{Error, Result};
pub use grs::GrsTuple;
pub use orbit::{DerivedData, OrbitGraph, RankMatrix};
pub use partition::Partition;
pub use poset::HasseDiagram;
pub use signed::{Sign, SignedYoungDiagram};
pub use steinberg::KTypePair;
pub use tableau::{BijectionWord, StandardTableau};
