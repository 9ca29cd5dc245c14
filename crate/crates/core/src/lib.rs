//! Equal-frequency transitions of the Bohr hydrogen atom.
//!
//! Two transitions `N₁ → n₁` and `N₂ → n₂` emit the same frequency exactly
//! when `1/n₁² − 1/N₁² = 1/n₂² − 1/N₂²`. Clearing denominators turns this
//! into an equality of two sums of two squares, and every such equality is a
//! product of Gaussian integers. The modules follow that chain:
//!
//! - [`gaussian`]: exact `Z[i]` arithmetic, Euclidean division and gcd.
//! - [`identities`]: `A² + B² = C² + D²`, its four-parameter expansion and
//!   witness recovery.
//! - [`transitions`]: the pair ⇄ identity correspondence and brute-force
//!   enumeration.
//! - [`cascades`]: two-step cascades, three squares in arithmetic
//!   progression and the unit-circle group.
//! - [`physics`]: wavelengths and frequencies for display.

pub mod cascades;
pub mod gaussian;
pub mod identities;
pub mod physics;
pub mod transitions;

pub use cascades::{
    ap_triple, assert_no_four_term, cascade_to_triple, circle_from_triple, compose, find_cascades,
    triple_from_circle, triple_to_cascade, APParams, CascadeError, CascadeLevels, CirclePoint,
    NoFourTermReport, SquareTriple,
};
pub use gaussian::{canonical_associate, euclid_divmod, GaussianError, GaussianInt, Unit};
pub use identities::{
    bf_expand, enumerate_identities, primitive_normalize, recover_params, BFParams, IdentityError,
    SquareIdentity,
};
pub use physics::{photon_observables, Observables, PhysicalConstants, PhysicsError};
pub use transitions::{
    canonicalize_pair, enumerate_pairs, identity_to_pairs, pair_to_identity, verify_pair,
    ClearingWitness, PairCheck, Transition, TransitionError, TransitionPair,
};
