//! Cohomology and K-theory of the inverse limit of a complex under its
//! substitution map: each `H^i` of the limit space is the direct limit of
//! `H^i(complex)` under the induced map, and
//! `K^0 = H^0 + H^2`, `K^1 = H^1`.

use crate::complex::CohomologyReport;
use crate::error::{Error, Result};
use crate::limit::{torsion_killing_limit, ClassifiedLimit, DirectLimit};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullReport<T> {
    pub h0: DirectLimit<T>,
    pub h1: DirectLimit<T>,
    pub h2: DirectLimit<T>,
    pub k0: DirectLimit<T>,
    pub k1: DirectLimit<T>,
}

pub fn hull_cohomology<T: Scalar>(report: &CohomologyReport<T>) -> Result<HullReport<T>> {
    let maps = report
        .maps
        .as_ref()
        .ok_or(Error::MissingSubstitution("induced maps"))?;
    let h0 = torsion_killing_limit(&report.h0.group, &maps.g0)?;
    let h1 = torsion_killing_limit(&report.h1.group, &maps.g1)?;
    let h2 = torsion_killing_limit(&report.h2.group, &maps.g2)?;
    let (k0, k1) = k_theory(&h0, &h1, &h2)?;
    Ok(HullReport { h0, h1, h2, k0, k1 })
}

fn require<'a, T: Scalar>(
    l: &'a DirectLimit<T>,
    name: &'static str,
) -> Result<&'a ClassifiedLimit<T>> {
    l.classified().ok_or(Error::UnclassifiedInput(name))
}

/// `(K^0, K^1) = (H^0 + H^2, H^1)` as formal direct sums.
pub fn k_theory<T: Scalar>(
    h0: &DirectLimit<T>,
    h1: &DirectLimit<T>,
    h2: &DirectLimit<T>,
) -> Result<(DirectLimit<T>, DirectLimit<T>)> {
    let c0 = require(h0, "H0")?;
    let c1 = require(h1, "H1")?;
    let c2 = require(h2, "H2")?;
    Ok((c0.direct_sum(c2).into(), c1.clone().into()))
}
