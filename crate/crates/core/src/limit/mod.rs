//! Direct limits of stationary systems of finitely generated abelian groups.

mod result;
mod stationary;
mod torsion;

pub use result::{ClassifiedLimit, DirectLimit};
pub use stationary::{
    analyze_stationary, eigen_extend, same_limit_class, scaled_power, stationary_limit,
    triangular_limit, triangularize, unimodular_completion, Conjugator, LimitElement,
    StationaryAnalysis, Triangularization,
};
pub use torsion::{free_block_after_killing, torsion_killing_limit};
