//! Simple hypersurface singularities: A/D/E normal forms, weights,
//! Hessian corank, classification, versal families, the strata of their
//! deformation spaces and a few explicit one-parameter adjacencies.

mod adjacency;
mod class;
mod classify;
mod hessian;
mod strata;
mod versal;
mod weights;

use localstd_core::CoreError;
use localstd_expr::ParseError;
use localstd_invariants::InvariantError;
use thiserror::Error;

pub use adjacency::{special_adjacency_family, AdjacencyFamily, AdjacencyKind};
pub use class::{curve_names, normal_form, Family, SingularityClass};
pub use classify::{binary_cubic_roots, classify_simple, classify_with_mu, CubicRoots};
pub use hessian::{determinant, hessian_at_origin, hessian_corank, hessian_rank};
pub use strata::{
    local_family, sample_witness, stratum_catalog, verify_stratum, verify_with_seed, EquationVariant,
    LocalFamily, Stratum, StratumRecord, Witness,
};
pub use versal::{build_versal_family, DeformationFamily};
pub use weights::{milnor_orlik, weight_vector, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("{0} is not a valid singularity class")]
    InvalidClass(String),
    #[error("{class} needs at least {min} variables")]
    AmbientTooSmall { class: SingularityClass, min: usize },
    #[error("the polynomial must not involve parameters")]
    HasParameters,
    #[error("weight {index} is not in (0, 1)")]
    WeightOutOfRange { index: usize },
    #[error("no stratum catalog for {0}")]
    Unsupported(SingularityClass),
    #[error("no stratum named `{0}`")]
    UnknownStratum(String),
    #[error("witness is off the stratum {stratum}: {equation} does not vanish")]
    OffStratum { stratum: String, equation: String },
    #[error("witness is not generic on {stratum}: {condition} vanishes")]
    NotGeneric { stratum: String, condition: String },
    #[error("witness gives no value for `{0}`")]
    MissingValue(String),
    #[error("no generic witness found on {0} after 20 attempts")]
    NoWitness(String),
    #[error("unknown adjacency `{0}`")]
    UnknownAdjacency(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
