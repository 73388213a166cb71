//! Augmented Sombor index engine.
//!
//! Computes the ASO index Σ√((dᵢ²+dⱼ²)/(dᵢ+dⱼ−2)) and related
//! degree-based invariants over small simple graphs, constructs the
//! extremal families (S'_n, (K_1 ∪ K_{n−k−1}) ∨ K_k), enumerates graph
//! classes isomorph-free, and exhaustively verifies the extremal
//! statements about ASO at desk scale: the unicyclic maximum, the
//! edge-deletion monotonicity, the fixed-connectivity maxima, and the
//! supporting analytic inequalities. Verification emits reproducible
//! certificates keyed by graph6 strings.
//!
//! Floating-point computation is generic over the scalar (see
//! [`scalar::Real`]); the crate-root alias [`IndexValue`] pins the
//! default `f64` used by the verification layer. The h-function itself
//! is exact integer arithmetic — one of the degree-pair orderings
//! contains a true equality that floats would misread.

pub mod canon;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod index;
pub mod scalar;
pub mod verify;

/// Default floating scalar for index values.
pub type IndexValue = f64;

pub use canon::{are_isomorphic, canonical_code, canonical_form, Canonical, CanonicalCode};
pub use connectivity::{edge_connectivity, vertex_connectivity, ConnectivityMode};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, MAX_ORDER};
pub use scalar::Real;
