//! Test-only oracles and fixtures.
//!
//! Nothing here touches the library: matrices are plain `Vec<Vec<i64>>`, and
//! every oracle does its own arithmetic (rational elimination, brute-force
//! minors, coset enumeration, union-find) so that agreement with the library
//! is meaningful evidence rather than a tautology.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use num_bigint::BigInt as OracleInt;
pub use num_rational::BigRational;

pub type Mat = Vec<Vec<i64>>;

pub mod fixtures;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Mat {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose(a: &Mat, rows: usize, cols: usize) -> Mat {
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j]).collect())
        .collect()
}

/// Product with overflow checks; the oracles only ever see small entries.
pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    (0..inner).fold(0i64, |acc, k| {
                        acc.checked_add(row[k].checked_mul(b[k][j]).expect("overflow"))
                            .expect("overflow")
                    })
                })
                .collect()
        })
        .collect()
}

/// A random unimodular matrix and its inverse, built from `steps` random
/// elementary row operations applied to both in lockstep.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> (Mat, Mat) {
    let mut g = identity(n);
    let mut inv = identity(n);
    if n == 0 {
        return (g, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..4) {
            0 if i != j => {
                g.swap(i, j);
                // (E g)^{-1} = g^{-1} E^{-1}; swapping rows of g swaps columns of inv
                for row in inv.iter_mut() {
                    row.swap(i, j);
                }
            }
            1 => {
                for x in g[i].iter_mut() {
                    *x = -*x;
                }
                for row in inv.iter_mut() {
                    row[i] = -row[i];
                }
            }
            _ if i != j => {
                let c = *[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap();
                let src = g[j].clone();
                for (x, s) in g[i].iter_mut().zip(src) {
                    *x += c * s;
                }
                // column j of inv loses c times column i
                for row in inv.iter_mut() {
                    row[j] -= c * row[i];
                }
            }
            _ => {}
        }
    }
    (g, inv)
}

fn to_q(a: &Mat) -> Vec<Vec<BigRational>> {
    a.iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

/// Gaussian elimination over Q. Returns (rank, determinant when square).
fn eliminate(mut m: Vec<Vec<BigRational>>) -> (usize, BigRational) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut det = BigRational::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            det = BigRational::zero();
            continue;
        };
        if p != r {
            m.swap(p, r);
            det = -det;
        }
        let piv = m[r][c].clone();
        det *= &piv;
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &piv;
            let (top, bottom) = m.split_at_mut(i);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[r][c..]) {
                *x -= &f * y;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    if rows != cols || r < rows {
        det = BigRational::zero();
    }
    (r, det)
}

pub fn rank(a: &Mat) -> usize {
    eliminate(to_q(a)).0
}

pub fn det(a: &Mat) -> BigInt {
    if a.is_empty() {
        return BigInt::one();
    }
    let d = eliminate(to_q(a)).1;
    assert!(d.is_integer());
    d.to_integer()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `d_k` = gcd of all k×k minors, for k = 1..=min(rows, cols).
pub fn determinantal_divisors(a: &Mat, rows: usize, cols: usize) -> Vec<BigInt> {
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = BigInt::zero();
            for rs in combinations(rows, k) {
                for cs in combinations(cols, k) {
                    let minor: Mat = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| a[i][j]).collect())
                        .collect();
                    g = g.gcd(&det(&minor));
                }
            }
            g
        })
        .collect()
}

/// Invariant factors `d_k / d_{k-1}`, stopping at the first vanishing divisor.
pub fn invariant_factors_from_divisors(ds: &[BigInt]) -> Vec<BigInt> {
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for d in ds {
        if d.is_zero() {
            break;
        }
        out.push(d / &prev);
        prev = d.clone();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCensus {
    pub free_rank: usize,
    pub torsion_order: u64,
    /// `order_counts[k]` = number of torsion elements of order exactly k, k ≤ 12.
    pub order_counts: [u64; 13],
}

type Q = Ratio<i128>;

/// Echelon basis of the row lattice of `gens` (all rows of length `dim`):
/// pivots strictly increase and are positive, entries below pivots vanish.
fn row_echelon(mut gens: Vec<Vec<i128>>, dim: usize) -> Vec<(usize, Vec<i128>)> {
    let mut basis = Vec::new();
    for c in 0..dim {
        loop {
            let live: Vec<usize> = (0..gens.len()).filter(|&i| gens[i][c] != 0).collect();
            if live.len() <= 1 {
                break;
            }
            let p = *live.iter().min_by_key(|&&i| gens[i][c].abs()).unwrap();
            for &i in &live {
                if i != p {
                    let q = gens[i][c].div_euclid(gens[p][c]);
                    let src = gens[p].clone();
                    for (x, s) in gens[i].iter_mut().zip(src) {
                        *x -= q * s;
                    }
                }
            }
        }
        if let Some(i) = gens.iter().position(|g| g[c] != 0) {
            let mut row = gens.swap_remove(i);
            if row[c] < 0 {
                row.iter_mut().for_each(|x| *x = -*x);
            }
            basis.push((c, row));
        }
    }
    basis
}

/// Census of `Z^rows / (column span of a)` by enumerating a fundamental
/// domain of the image lattice inside its rational span.
pub fn coset_census(a: &Mat, rows: usize, cols: usize) -> CosetCensus {
    let gens: Vec<Vec<i128>> = (0..cols)
        .map(|j| (0..rows).map(|i| i128::from(a[i][j])).collect())
        .collect();
    let basis = row_echelon(gens, rows);
    let r = basis.len();
    let sizes: Vec<i128> = basis.iter().map(|(p, h)| h[*p]).collect();
    let mut counts = [0u64; 13];
    let mut total = 0u64;
    let mut t = vec![0i128; r];
    'outer: loop {
        // solve for coefficients c with (sum c_j h_j)[p_i] = t_i
        let mut c: Vec<Q> = Vec::with_capacity(r);
        for i in 0..r {
            let p = basis[i].0;
            let mut rhs = Q::from_integer(t[i]);
            for (j, cj) in c.iter().enumerate() {
                rhs -= *cj * Q::from_integer(basis[j].1[p]);
            }
            c.push(rhs / Q::from_integer(sizes[i]));
        }
        let integral = (0..rows).all(|k| {
            let x: Q = c
                .iter()
                .zip(&basis)
                .map(|(cj, (_, h))| *cj * Q::from_integer(h[k]))
                .fold(Q::zero(), |s, v| s + v);
            x.is_integer()
        });
        if integral {
            total += 1;
            let order = c.iter().fold(1i128, |l, q| l.lcm(q.denom()));
            if order <= 12 {
                counts[order as usize] += 1;
            }
        }
        for i in (0..r).rev() {
            t[i] += 1;
            if t[i] < sizes[i] {
                continue 'outer;
            }
            t[i] = 0;
        }
        break;
    }
    CosetCensus {
        free_rank: rows - r,
        torsion_order: total,
        order_counts: counts,
    }
}

/// The same census computed by brute force over `Z/n_1 ⊕ ... ⊕ Z/n_s`.
pub fn census_of_factors(factors: &[u64], free_rank: usize) -> CosetCensus {
    let total: u64 = factors.iter().product();
    let mut counts = [0u64; 13];
    let mut digits = vec![0u64; factors.len()];
    for _ in 0..total {
        let order = digits
            .iter()
            .zip(factors)
            .fold(1u64, |l, (&a, &n)| l.lcm(&(n / a.gcd(&n))));
        if order <= 12 {
            counts[order as usize] += 1;
        }
        for (d, &n) in digits.iter_mut().zip(factors) {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
    CosetCensus {
        free_rank,
        torsion_order: total,
        order_counts: counts,
    }
}

/// Number of connected components of a graph on `vertices` nodes.
pub fn components(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = vertices;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

/// Inverse over Q via Gauss-Jordan, or `None` when singular.
pub fn rational_inverse(a: &Mat) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m = to_q(a);
    let mut inv: Vec<Vec<BigRational>> = to_q(&identity(n));
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(p, c);
        inv.swap(p, c);
        let piv = m[c][c].clone();
        for k in 0..n {
            m[c][k] = &m[c][k] / &piv;
            inv[c][k] = &inv[c][k] / &piv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..n {
                    let (t, u) = (&f * &m[c][k], &f * &inv[c][k]);
                    m[i][k] -= t;
                    inv[i][k] -= u;
                }
            }
        }
    }
    Some(inv)
}

pub fn rational_apply(m: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn is_integral(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Largest absolute entry, as a cheap growth check.
pub fn max_abs(v: &[BigRational]) -> BigRational {
    v.iter()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigRational::zero)
}

pub fn to_u64(x: &BigInt) -> u64 {
    x.to_u64().expect("factor fits in u64")
}

/// A random 2-complex satisfying `d1 d2 = 0`. The 1-skeleton is a random
/// multigraph (loops allowed); every face boundary is a random small integer
/// combination of fundamental cycles of a spanning forest.
pub struct RandomComplex {
    pub vertices: usize,
    pub faces: usize,
    pub edge_ends: Vec<(usize, usize)>,
    pub d1: Mat,
    pub d2: Mat,
}

pub fn random_complex(
    rng: &mut impl Rng,
    max_v: usize,
    max_e: usize,
    max_f: usize,
) -> RandomComplex {
    let v = rng.gen_range(1..=max_v);
    let e = rng.gen_range(0..=max_e);
    let f = rng.gen_range(0..=max_f);
    let edge_ends: Vec<(usize, usize)> = (0..e)
        .map(|_| (rng.gen_range(0..v), rng.gen_range(0..v)))
        .collect();
    let mut d1 = vec![vec![0i64; e]; v];
    for (j, &(s, t)) in edge_ends.iter().enumerate() {
        d1[t][j] += 1;
        d1[s][j] -= 1;
    }
    let cycles = fundamental_cycles(v, &edge_ends);
    let mut d2 = vec![vec![0i64; f]; e];
    for k in 0..f {
        for cyc in &cycles {
            let c = rng.gen_range(-2i64..=2);
            for (row, x) in d2.iter_mut().zip(cyc) {
                row[k] += c * x;
            }
        }
    }
    RandomComplex {
        vertices: v,
        faces: f,
        edge_ends,
        d1,
        d2,
    }
}

/// One signed cycle vector per non-forest edge.
pub fn fundamental_cycles(v: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    // adjacency of the spanning forest, grown edge by edge
    let mut adj: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); v];
    let mut comp: Vec<usize> = (0..v).collect();
    let mut out = Vec::new();
    for (j, &(s, t)) in edges.iter().enumerate() {
        if comp[s] != comp[t] {
            let (old, new) = (comp[s], comp[t]);
            comp.iter_mut()
                .filter(|c| **c == old)
                .for_each(|c| *c = new);
            adj[s].push((t, j, 1));
            adj[t].push((s, j, -1));
            continue;
        }
        // path t -> s in the forest, then edge j from s to t closes the loop
        let mut cyc = vec![0i64; edges.len()];
        cyc[j] = 1;
        let mut prev: Vec<Option<(usize, usize, i64)>> = vec![None; v];
        let mut seen = vec![false; v];
        let mut stack = vec![t];
        seen[t] = true;
        while let Some(x) = stack.pop() {
            for &(y, e, sgn) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, e, sgn));
                    stack.push(y);
                }
            }
        }
        let mut x = s;
        while x != t {
            let (p, e, sgn) = prev[x].unwrap();
            cyc[e] += sgn;
            x = p;
        }
        out.push(cyc);
    }
    out
}
