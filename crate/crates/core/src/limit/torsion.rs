use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, CanonicalEndo};
use crate::limit::{stationary_limit, DirectLimit};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `lim(G, E)` for `G = T + Z^f` when some power of `E` kills the torsion part.
///
/// In canonical coordinates `E = [[E_tt, M_1], [0, M_2]]`. If `E^k` kills `T`,
/// then `lim(G, E) = lim(G, E^k) = lim(Z^f, M_2^k) = lim(Z^f, M_2)`, the middle
/// step via the projection onto `Z^f` and the map `z -> E^k (0, z)`.
///
/// Only `k <= t + 1` is tried, `t` being the number of torsion coordinates.
pub fn torsion_killing_limit<T: Scalar>(
    group: &AbelianGroup<T>,
    endo: &CanonicalEndo<T>,
) -> Result<DirectLimit<T>> {
    let n = group.rank();
    if endo.group != *group {
        return Err(Error::Shape {
            op: "torsion_killing_limit",
            left: (n, n),
            right: endo.matrix.shape(),
        });
    }
    free_block_after_killing(endo).and_then(|m| stationary_limit(&m))
}

/// The free block `M_2` once torsion has been shown to die out.
pub fn free_block_after_killing<T: Scalar>(endo: &CanonicalEndo<T>) -> Result<Matrix<T>> {
    let t = endo.group.torsion().len();
    let bound = t + 1;
    let mut power = endo.clone();
    for _ in 0..bound {
        if power.kills_torsion() {
            return Ok(endo.free_block());
        }
        power = endo.compose(&power);
    }
    Err(Error::TorsionNotAnnihilated { iterations: bound })
}
