//! 1234-avoiding permutations encoded as admissible pairs of Dyck paths.
//!
//! A permutation `σ` is sent to `ν(σ) = (λ(σ), μ(σ))`, where `λ` records its
//! left-to-right minima and `μ` its right-to-left maxima as Dyck paths.
//! Restricted to 1234-avoiders, `ν` is injective; its image is the set of
//! pairs `(P, Q)` with `P ≥ L′(Q)` and `Q ≥ L′(P)`, where `L′` is a variant
//! of the Kreweras involution and `≤` is an order on Dyck paths.

pub mod bijection;
pub mod corpus;
pub mod dyckpath;
mod error;
pub mod involution;
pub mod permutation;
pub mod poset;

pub use bijection::{
    is_admissible, lambda_inv_123, lambda_map, mu_inv_123, mu_map, nu, nu_inv, PathPair,
};
pub use corpus::{catalan, Corpus, Pattern};
pub use dyckpath::{AscentDescentCode, DyckPath, Step};
pub use error::{Error, Result};
pub use involution::{kreweras, lprime};
pub use permutation::{MaxProfile, MinProfile, Permutation};
pub use poset::leq;
