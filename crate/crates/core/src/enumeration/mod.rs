//! Enumeration of the curvatures of a packing, an unpruned oracle and coprime chains.

mod oracle;
mod path;
mod presence;
mod tree;

pub use oracle::{oracle_enumerate, oracle_stabilized, oracle_with, OracleLimits};
pub use path::{coprime_path, coprime_path_between, Chain, ChainStep};
pub use presence::{CurvaturePresence, PresenceStats};
pub use tree::{enumerate_curvatures, for_each_child, reduce_to_root, walk_states, EnumOptions};

#[cfg(test)]
mod tests;
