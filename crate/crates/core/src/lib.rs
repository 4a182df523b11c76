//! Robinson–Schensted shapes of conjugacy-invariant random permutations.
//!
//! The crate covers exact permutation arithmetic ([`perm`]), the shape map
//! ([`rsk`]), height profiles and limit-shape distances ([`geom`]),
//! brute-force oracles ([`oracles`]), seeded samplers ([`samplers`], [`rng`])
//! and a Monte Carlo harness ([`experiments`]).

pub mod error;
pub mod experiments;
pub mod geom;
pub mod oracles;
pub mod perm;
pub mod rng;
pub mod rsk;
pub mod samplers;

pub use error::{Error, Result};
pub use perm::{CycleStats, FixedPointSplit, Permutation};
pub use rsk::{lds, lis, schensted_shape, YoungDiagram};
pub use samplers::{CoreKind, CycleType, FixCountRule, RegimeSpec};
