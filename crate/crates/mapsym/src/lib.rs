//! mapsym — an exact combinatorial engine for polyhedral maps on orientable
//! surfaces.
//!
//! The crate represents a map by its flags and three involutions (a graph
//! encoded map), applies local symmetry-preserving operations (dual, ambo,
//! truncation, Goldberg-Coxeter patches, ...) by gluing a 3-coloured patch
//! into every chamber of the barycentric subdivision, and analyses the
//! symmetry of the results: automorphism groups, chamber orbits,
//! self-duality, and whether an operation strictly increases the symmetry of
//! a given map.
//!
//! Everything is exact; there is no floating point anywhere in the engine.
//! See the `examples/` directory for runnable tours of each capability and
//! the `mapsym` binary for the command-line surface.

pub mod analysis;
pub mod builtin;
pub mod chambers;
pub mod complex;
pub mod enumerate;
pub mod families;
pub mod flagmap;
pub mod goldberg;
pub mod patch;
mod util;

pub use flagmap::{FlagSystem, MapError, MapSummary, RotationSystem};
pub use patch::{AppliedMap, ClassLabeling, OperationPatch};
