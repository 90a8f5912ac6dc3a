//! Exact dimension bookkeeping for unipotent orbits of split classical
//! groups and the dimension equations of Rankin-Selberg integrals, doubling
//! integrals and integral-kernel liftings.
//!
//! All arithmetic is on unsigned/signed 64-bit integers; half-dimensions are
//! exact by construction.

pub mod catalog;
pub mod equation;
pub mod error;
pub mod expr;
pub mod functional;
pub mod group;
pub mod orbit;
pub mod partition;
pub mod roots;
pub mod search;

pub use equation::{
    cfgk_check, check_equation, doubling_condition, lemma71_check, theta_lift_predict, BalanceReport,
    IntegralDescriptor, Mode, ThetaPrediction,
};
pub use error::{Error, Result};
pub use expr::Bindings;
pub use functional::{eisenstein_dim, functional_value, EisensteinSeries, FunctionalDim};
pub use group::{group_dimension, unipotent_radical_dim, GroupDescriptor, LeviComposition, Modifiers};
pub use orbit::{
    filtration_profile, fourier_jacobi_dim, gk_dimension, orbit_dimension, weight_vector, FiltrationProfile, Orbit,
};
pub use partition::{dominance_leq, enumerate_partitions, GroupFamily, Partition};
pub use roots::{positive_roots, CartanType, RootSystem};
pub use search::{search, verify_solution, Constraint, Filter, SearchQuery, SearchResult};
