//! The four packing families: configurations, generators, modular types,
//! tangent forms, Ford circles, simultaneous tangency and colorings.

pub mod coloring;
mod config;
pub mod cube;
pub mod ford;
pub mod forms;
pub mod grid;
mod kind;
pub mod modular;
pub mod oct;
pub mod simultaneous;

pub use coloring::{coloring, Coloring};
pub use config::{apply_generator, complete_from_minimal, validate_config, CircleId, Config, FaceId};
pub use cube::CubeConfig;
pub use ford::{dual_circles, ford_circle, ford_circles, ford_params, FordCircle};
pub use forms::{tangent_forms, Form, FormClass, TangentForms};
pub use grid::{Grid, GridFace, Lattice, Poly};
pub use kind::{parse_seed, Kind, Sign};
pub use modular::{modular_type, ModularType};
pub use oct::OctConfig;
pub use simultaneous::{coprime_insert, simultaneous_tangent, Insertion, PairFamily};

#[cfg(test)]
mod tests;
