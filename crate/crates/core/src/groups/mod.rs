//! Finitely generated abelian groups presented as cokernels and subquotients.

mod chart;
mod endo;
mod group;
mod image;

pub use chart::{cokernel, kernel_group, kernel_mod_image, GroupChart};
pub use endo::{induced_endo, CanonicalEndo};
pub use group::AbelianGroup;
pub(crate) use group::{fmt_free, invariant_factors};
pub use image::{image_reduction, ImageReduction};
