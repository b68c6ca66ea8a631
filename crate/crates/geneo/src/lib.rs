//! Observer-oriented shape comparison on the sampled circle.
//!
//! The crate compares functions on the circle modulo a group of grid-aligned
//! symmetries, through three nested quantities:
//!
//! * [`sup_distance`] — the raw sup-norm distance between two functions;
//! * [`natural_pseudo_distance`] — the minimum sup distance over a finite
//!   group of rotations/reflections acting on one argument;
//! * [`family_matching_distance`] — the maximum, over a family of certified
//!   equivariant non-expansive operators, of the matching distance between
//!   the sublevel-set persistence diagrams of the transformed functions.
//!
//! The last quantity is cheap to compute (no optimization over the group),
//! invariant under the group action, and never exceeds the natural
//! pseudo-distance; [`verify_inequalities`] measures the whole chain for a
//! pair of functions and reports whether it holds at a given tolerance.
//!
//! Supporting pieces: a declarative operator algebra with randomized axiom
//! certification ([`validate_geneo`]), sublevel-set persistence on the cycle
//! graph ([`sublevel_diagram`]) with an independent persistent-Betti oracle,
//! an exact bottleneck matcher ([`bottleneck`]) with an exhaustive
//! small-instance twin, and deterministic file/report formats for the `geneo`
//! command-line tool.

mod error;
mod function;
mod group;
mod matching;
mod metrics;
mod operators;
mod persistence;
mod rng;

pub mod io;
pub mod report;
pub mod svg;

pub use error::{Error, Result};
pub use function::{sup_distance, CircularFunction};
pub use group::{act, ElementKind, GroupElement, GroupPreset, TransformGroup};
pub use matching::{
    bottleneck, bottleneck_bruteforce, MatchingResult, PairingEnd, BRUTEFORCE_CAP,
};
pub use metrics::{
    family_matching_distance, natural_pseudo_distance, verify_inequalities, VerificationReport,
};
pub use operators::{
    apply_operator, validate_geneo, AxiomReport, EquivarianceWitness, ExpansivenessWitness,
    OperatorFamily, OperatorSpec, ShiftTerm, WeightedPart, EQUIVARIANCE_TOL, EXPANSIVENESS_TOL,
    WEIGHT_SUM_SLACK,
};
pub use persistence::{persistent_betti, sublevel_diagram, PersistenceDiagram};
pub use rng::{generate_random_function, SplitMix64};
