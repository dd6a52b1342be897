//! Distance and similarity measures that compare labeled fuzzy patterns
//! through the spatial arrangement of their element sequences rather than
//! element by element.
//!
//! Each pattern is a sequence of membership/non-membership pairs over a
//! shared feature universe. The spatial measures difference each sequence
//! against an implicit origin and score the step sizes along three
//! branches: membership, non-membership, and the two jointly. On top of
//! that sit a catalog of classical scalar similarity measures, an argmax
//! classifier with explicit tie handling, bundled reference problems with
//! their published tables, dataset loading from JSON and CSV, and seeded
//! property checks over the whole family.

pub mod aifs;
pub mod axioms;
pub mod baseline;
pub mod benchmarks;
pub mod classify;
pub mod dataset;
pub mod error;
pub mod ops;
pub mod round;
pub mod spatial;

pub use aifs::{AifsElement, AifsPattern, RealSequence, ELEMENT_TOLERANCE};
pub use error::Error;
pub use spatial::{
    fuzzy_reduced_distance, real_reduced_distance, spatial_distance, spatial_distance_raw,
    spatial_norm, spatial_similarity, spatial_similarity_raw, SpatialValue, FUZZY_TOLERANCE,
};
