use std::fmt;

use crate::linalg::{smith_normal_form, Matrix};
use crate::scalar::Scalar;

/// Finitely generated abelian group `Z/n_1 + ... + Z/n_t + Z^f` in invariant
/// factor form: every `n_i >= 2` and `n_i | n_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup<T> {
    torsion: Vec<T>,
    free_rank: usize,
}

/// Rewrites any list of cyclic orders as invariant factors, dropping units.
pub(crate) fn invariant_factors<T: Scalar>(orders: &[T]) -> Vec<T> {
    let nontrivial: Vec<T> = orders
        .iter()
        .map(|v| v.abs())
        .filter(|v| !v.is_zero() && !v.is_one())
        .collect();
    if nontrivial.is_empty() {
        return nontrivial;
    }
    let s = smith_normal_form(&Matrix::diagonal(&nontrivial));
    s.invariant_factors()
        .into_iter()
        .filter(|v| !v.is_one())
        .collect()
}

impl<T: Scalar> AbelianGroup<T> {
    pub fn trivial() -> Self {
        AbelianGroup {
            torsion: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            torsion: Vec::new(),
            free_rank: rank,
        }
    }

    /// `Z/o_1 + Z/o_2 + ... + Z^free_rank` for arbitrary orders `o_i`.
    /// An order of 0 contributes a free summand, an order of 1 nothing.
    pub fn new(orders: &[T], free_rank: usize) -> Self {
        let zeros = orders.iter().filter(|v| v.is_zero()).count();
        AbelianGroup {
            torsion: invariant_factors(orders),
            free_rank: free_rank + zeros,
        }
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Number of nontrivial cyclic summands.
    pub fn rank(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> T {
        self.torsion.iter().fold(T::one(), |acc, n| acc * n.clone())
    }

    /// Canonical coordinate factors: torsion orders, then 0 per free coordinate.
    pub fn factors(&self) -> Vec<T> {
        let mut f = self.torsion.clone();
        f.extend(std::iter::repeat_n(T::zero(), self.free_rank));
        f
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        AbelianGroup::new(&orders, self.free_rank + other.free_rank)
    }
}

pub(crate) fn fmt_free(f: &mut fmt::Formatter<'_>, rank: usize) -> fmt::Result {
    if rank == 1 {
        write!(f, "Z")
    } else {
        write!(f, "Z^{rank}")
    }
}

/// `Z/2 ⊕ Z/2 ⊕ Z^5`; `0` for the trivial group.
impl<T: Scalar> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        for n in &self.torsion {
            if !first {
                write!(f, " ⊕ ")?;
            }
            write!(f, "Z/{n}")?;
            first = false;
        }
        if self.free_rank > 0 {
            if !first {
                write!(f, " ⊕ ")?;
            }
            fmt_free(f, self.free_rank)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = AbelianGroup<i64>;

    #[test]
    fn normalizes_orders() {
        let g = G::new(&[6, 1, 4, 0], 1);
        assert_eq!(g.torsion(), &[2, 12]);
        assert_eq!(g.free_rank(), 2);
        assert_eq!(G::new(&[1, 1, -3], 0).torsion(), &[3]);
        assert_eq!(G::new(&[2, 3], 0).torsion(), &[6]);
    }

    #[test]
    fn rendering() {
        assert_eq!(G::trivial().to_string(), "0");
        assert_eq!(G::free(1).to_string(), "Z");
        assert_eq!(
            G::new(&[2; 5], 5).to_string(),
            "Z/2 ⊕ Z/2 ⊕ Z/2 ⊕ Z/2 ⊕ Z/2 ⊕ Z^5"
        );
        assert_eq!(G::new(&[4], 0).to_string(), "Z/4");
    }

    #[test]
    fn sums() {
        let a = G::new(&[2], 1);
        let b = G::new(&[3, 4], 2);
        let s = a.direct_sum(&b);
        assert_eq!(s.torsion(), &[2, 12]);
        assert_eq!(s.free_rank(), 3);
        assert_eq!(s.torsion_order(), 24);
    }
}
