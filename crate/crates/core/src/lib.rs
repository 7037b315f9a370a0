//! Landau and Bloch type radii for planar harmonic mappings `f = h + conj(g)`:
//! closed-form radius and coefficient estimates, extremal maps, and sampling
//! oracles that check them numerically.

#![allow(clippy::excessive_precision)]

pub mod error;
pub mod extremal;
pub mod map;
pub mod mapfile;
pub mod oracle;
pub mod quadrature;
pub mod radii;
pub mod report;
mod roots;
pub mod series;

pub use error::{Error, Result};
pub use extremal::{
    build_extremal, critical_radius, extremal_closed_eval, ExtremalKind, ExtremalSpec,
};
pub use map::{check_class_membership, ClassReport, DistortionSample, GridSpec, HarmonicMap};
pub use mapfile::{parse_map, write_map};
pub use radii::{BoundVariant, ClassParams, Lemma, RadiusPair, Theorem};
pub use series::PowerSeries;

/// Complex scalar used throughout.
pub type ComplexValue = num_complex::Complex64;
