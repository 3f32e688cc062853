//! Weight combinatorics: compositions, the order on weights, diagrams and
//! the q,t-numbers attached to them.

mod composition;
mod diagram;
mod numerology;
mod order;
mod spectral;

pub use composition::{compositions, orbit_data, partitions, Composition, OrbitData, Permutation};
pub use diagram::{box_stats, norm_factor, BoxStats, NormKind};
pub use numerology::{b_factor, phi, t_factorial, u_factor};
pub use order::{compare, dominance, linear_key, LinearKey, Relation};
pub use spectral::{spectral_vector, SpectralVector};
