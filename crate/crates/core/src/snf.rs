//! Integer normal forms: Smith, Hermite, kernel bases and linear solving.
//!
//! Pivot selection is deterministic everywhere: the candidate with the
//! smallest nonzero magnitude wins, ties broken by lowest (row, column)
//! index. That makes every downstream canonical coordinate reproducible
//! across runs and platforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// P * a * Q = d with P, Q unimodular and d diagonal, each diagonal entry
/// nonnegative and dividing the next.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

fn find_pivot(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in from..m.rows() {
        for j in from..m.cols() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            match &best {
                Some((mag, _, _)) if *mag <= a => {}
                _ => best = Some((a, i, j)),
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut p = IntMatrix::identity(m);
    let mut q = IntMatrix::identity(n);
    let mut t = 0;

    while t < m.min(n) {
        let Some((pi, pj)) = find_pivot(&d, t) else { break };
        d.swap_rows(t, pi);
        p.swap_rows(t, pi);
        d.swap_cols(t, pj);
        q.swap_cols(t, pj);

        let mut dirty = false;
        for i in t + 1..m {
            if !d.get(i, t).is_zero() {
                let k = d.get(i, t) / d.get(t, t);
                d.row_sub(i, t, &k);
                p.row_sub(i, t, &k);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
        }
        for j in t + 1..n {
            if !d.get(t, j).is_zero() {
                let k = d.get(t, j) / d.get(t, t);
                d.col_sub(j, t, &k);
                q.col_sub(j, t, &k);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }

        // The pivot must divide every remaining entry for the divisor chain;
        // fold an offending row in and re-reduce.
        let offender = (t + 1..m)
            .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !(d.get(i, j) % d.get(t, t)).is_zero());
        if let Some((i, _)) = offender {
            let one = BigInt::one();
            let negone = -&one;
            d.row_sub(t, i, &negone);
            p.row_sub(t, i, &negone);
            let _ = one;
            continue;
        }

        if d.get(t, t).is_negative() {
            d.negate_row(t);
            p.negate_row(t);
        }
        t += 1;
    }

    let rank = (0..m.min(n)).take_while(|&i| !d.get(i, i).is_zero()).count();
    SmithDecomposition { d, p, q, rank }
}

/// Row-style Hermite normal form: u * a = h with u unimodular, h in row
/// echelon form, pivots positive, and entries above each pivot reduced into
/// `[0, pivot)`.
#[derive(Clone, Debug)]
pub struct HermiteDecomposition {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub pivots: Vec<(usize, usize)>,
}

pub fn hermite_normal_form(a: &IntMatrix) -> HermiteDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    let mut pivots = Vec::new();

    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by_key(|&i| (h.get(i, c).abs(), i));
            let Some(i) = best else { break };
            h.swap_rows(r, i);
            u.swap_rows(r, i);
            let mut all_clear = true;
            for i2 in r + 1..m {
                if !h.get(i2, c).is_zero() {
                    let k = h.get(i2, c) / h.get(r, c);
                    h.row_sub(i2, r, &k);
                    u.row_sub(i2, r, &k);
                    if !h.get(i2, c).is_zero() {
                        all_clear = false;
                    }
                }
            }
            if all_clear {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let k = h.get(i, c).div_floor(h.get(r, c));
            h.row_sub(i, r, &k);
            u.row_sub(i, r, &k);
        }
        pivots.push((r, c));
        r += 1;
    }

    HermiteDecomposition { h, u, pivots }
}

/// Basis of the integer null space `{x : a.x = 0}`, returned as the columns
/// of a matrix in a canonical (column-Hermite) form. The basis spans a
/// saturated sublattice: any rational kernel vector with integer entries is
/// an integer combination of the columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let hd = hermite_normal_form(&a.transpose());
    let rank = hd.pivots.len();
    let n = a.cols();
    let cols: Vec<Vec<BigInt>> = (rank..n).map(|i| hd.u.row_slice(i).to_vec()).collect();
    let raw = IntMatrix::from_columns(n, cols);
    column_hermite(&raw)
}

/// Column-style Hermite canonicalization: returns a matrix with the same
/// column lattice, in the transpose of row HNF.
pub fn column_hermite(a: &IntMatrix) -> IntMatrix {
    let hd = hermite_normal_form(&a.transpose());
    let nonzero = hd.pivots.len();
    hd.h.submatrix(0..nonzero, 0..hd.h.cols()).transpose()
}

/// Lattice spanned by the columns of a matrix, with membership testing and
/// canonical reduction of vectors modulo the lattice.
#[derive(Clone, Debug)]
pub struct ColumnLattice {
    basis: IntMatrix,
    pivots: Vec<(usize, usize)>,
}

impl ColumnLattice {
    pub fn from_columns(a: &IntMatrix) -> Self {
        let basis = column_hermite(a);
        // pivot row of each column: first nonzero entry from the top
        let pivots = (0..basis.cols())
            .map(|j| {
                let i = (0..basis.rows())
                    .find(|&i| !basis.get(i, j).is_zero())
                    .expect("zero column in hermite basis");
                (i, j)
            })
            .collect();
        ColumnLattice { basis, pivots }
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Reduce `v` modulo the lattice; remainder is canonical (floor-reduced
    /// against each pivot). Also returns the coefficients used.
    pub fn reduce(&self, v: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut rem = v.to_vec();
        let mut coeff = vec![BigInt::zero(); self.basis.cols()];
        for &(pi, pj) in &self.pivots {
            let q = rem[pi].div_floor(self.basis.get(pi, pj));
            if !q.is_zero() {
                for i in 0..self.basis.rows() {
                    rem[i] -= &q * self.basis.get(i, pj);
                }
            }
            coeff[pj] = q;
        }
        (rem, coeff)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut rem = v.to_vec();
        for &(pi, pj) in &self.pivots {
            if rem[pi].is_zero() {
                continue;
            }
            let (q, r) = rem[pi].div_rem(self.basis.get(pi, pj));
            if !r.is_zero() {
                return false;
            }
            for i in 0..self.basis.rows() {
                rem[i] -= &q * self.basis.get(i, pj);
            }
        }
        rem.iter().all(|x| x.is_zero())
    }

    /// Solve `basis * x = v` exactly if possible.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rem = v.to_vec();
        let mut coeff = vec![BigInt::zero(); self.basis.cols()];
        for &(pi, pj) in &self.pivots {
            if rem[pi].is_zero() {
                continue;
            }
            let (q, r) = rem[pi].div_rem(self.basis.get(pi, pj));
            if !r.is_zero() {
                return None;
            }
            for i in 0..self.basis.rows() {
                rem[i] -= &q * self.basis.get(i, pj);
            }
            coeff[pj] = q;
        }
        if rem.iter().all(|x| x.is_zero()) { Some(coeff) } else { None }
    }
}

/// Deterministic mixer used to derive alternate (but reproducible) solution
/// representatives from a pivot seed.
pub(crate) fn mix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// A linear system `a·x = b` prepared for many right-hand sides: the Smith
/// form and kernel lattice are computed once.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    a: IntMatrix,
    snf: SmithDecomposition,
    kernel: IntMatrix,
    lattice: Option<ColumnLattice>,
}

impl LinearSystem {
    pub fn new(a: IntMatrix) -> LinearSystem {
        let snf = smith_normal_form(&a);
        let kernel = kernel_basis(&a);
        let lattice = if kernel.cols() > 0 { Some(ColumnLattice::from_columns(&kernel)) } else { None };
        LinearSystem { a, snf, kernel, lattice }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn kernel(&self) -> &IntMatrix {
        &self.kernel
    }

    /// One integer solution, or None. The representative is canonical for
    /// seed 0 (reduced modulo the kernel lattice); a nonzero seed shifts it
    /// by a deterministic kernel element, which is how callers probe that
    /// downstream answers do not depend on the choice of lift.
    pub fn solve(&self, b: &[BigInt], seed: u64) -> Option<Vec<BigInt>> {
        assert_eq!(self.a.rows(), b.len(), "solve shape");
        let c = self.snf.p.mul_vec(b);
        let mut y = vec![BigInt::zero(); self.a.cols()];
        for i in 0..self.a.rows() {
            if i < self.snf.rank {
                let d = self.snf.d.get(i, i);
                let (q, r) = c[i].div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            } else if !c[i].is_zero() {
                return None;
            }
        }
        let mut x = self.snf.q.mul_vec(&y);

        if let Some(lat) = &self.lattice {
            let (reduced, _) = lat.reduce(&x);
            x = reduced;
            if seed != 0 {
                for j in 0..self.kernel.cols() {
                    let t = (mix64(seed ^ (j as u64).wrapping_mul(0x9e3779b9)) % 5) as i64 - 2;
                    if t != 0 {
                        let t = BigInt::from(t);
                        for i in 0..x.len() {
                            x[i] += &t * self.kernel.get(i, j);
                        }
                    }
                }
            }
        }
        debug_assert_eq!(self.a.mul_vec(&x), b.to_vec());
        Some(x)
    }

    /// Solve `a·X = B` column by column; None if any column is unsolvable.
    pub fn solve_matrix(&self, b: &IntMatrix, seed: u64) -> Option<IntMatrix> {
        assert_eq!(self.a.rows(), b.rows(), "solve shape");
        let mut cols = Vec::with_capacity(b.cols());
        for j in 0..b.cols() {
            cols.push(self.solve(&b.column(j), seed)?);
        }
        Some(IntMatrix::from_columns(self.a.cols(), cols))
    }
}

/// One integer solution of `a.x = b`, or None. See [`LinearSystem::solve`].
pub fn solve_integer(a: &IntMatrix, b: &[BigInt], seed: u64) -> Option<Vec<BigInt>> {
    LinearSystem::new(a.clone()).solve(b, seed)
}

/// Invariant factors (each > 1), free rank, and coordinate maps of the
/// quotient `Z^ambient / column-span(relations)`.
///
/// `projection * x` gives canonical coordinates of the coset of `x`:
/// torsion coordinates first (mod the matching factor), then free ones.
/// `lift` is a section: `projection * lift = identity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianPresentation {
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
    pub projection: IntMatrix,
    pub lift: IntMatrix,
}

impl AbelianPresentation {
    pub fn dim(&self) -> usize {
        self.invariant_factors.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    /// Reduce coordinate vector: torsion entries into `[0, factor)`.
    pub fn reduce(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let mut out = coords.to_vec();
        for (i, f) in self.invariant_factors.iter().enumerate() {
            out[i] = out[i].mod_floor(f);
        }
        out
    }

    pub fn coords_of(&self, ambient: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&self.projection.mul_vec(ambient))
    }

    pub fn is_zero_class(&self, coords: &[BigInt]) -> bool {
        self.reduce(coords).iter().all(|x| x.is_zero())
    }

    /// All elements, as reduced coordinate vectors. Panics on free rank.
    pub fn elements(&self) -> Vec<Vec<BigInt>> {
        assert_eq!(self.free_rank, 0, "cannot enumerate infinite group");
        let mut acc = vec![vec![]];
        for f in &self.invariant_factors {
            let mut next = Vec::new();
            let bound = u64::try_from(f).expect("factor fits u64");
            for prefix in &acc {
                for v in 0..bound {
                    let mut p = prefix.clone();
                    p.push(BigInt::from(v));
                    next.push(p);
                }
            }
            acc = next;
        }
        acc
    }

    /// Structure string like "Z^2 + Z/2 + Z/4", or "0".
    pub fn structure(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for f in &self.invariant_factors {
            parts.push(format!("Z/{f}"));
        }
        if parts.is_empty() { "0".to_string() } else { parts.join(" + ") }
    }

    pub fn same_structure(&self, other: &Self) -> bool {
        self.invariant_factors == other.invariant_factors && self.free_rank == other.free_rank
    }
}

/// Present the cokernel `Z^ambient_rank / im(relations)`.
pub fn cokernel_presentation(ambient_rank: usize, relations: &IntMatrix) -> Result<AbelianPresentation> {
    if relations.rows() != ambient_rank {
        return Err(Error::Dimension(format!(
            "relations have {} rows, ambient rank is {ambient_rank}",
            relations.rows()
        )));
    }
    let snf = smith_normal_form(relations);
    let mut torsion_idx = Vec::new();
    let mut free_idx = Vec::new();
    for i in 0..ambient_rank {
        if i < snf.rank {
            let d = snf.d.get(i, i);
            if !d.is_one() {
                torsion_idx.push(i);
            }
        } else {
            free_idx.push(i);
        }
    }
    let factors: Vec<BigInt> = torsion_idx.iter().map(|&i| snf.d.get(i, i).clone()).collect();
    let keep: Vec<usize> = torsion_idx.iter().chain(free_idx.iter()).copied().collect();

    let projection = IntMatrix::from_fn(keep.len(), ambient_rank, |r, c| snf.p.get(keep[r], c).clone());
    // columns of P^{-1} at the kept indices; P^{-1} computed by solving P X = I
    let p_inv = invert_unimodular(&snf.p)?;
    let lift = IntMatrix::from_fn(ambient_rank, keep.len(), |r, c| p_inv.get(r, keep[c]).clone());

    Ok(AbelianPresentation { invariant_factors: factors, free_rank: free_idx.len(), projection, lift })
}

/// Inverse of a unimodular matrix, exact.
pub fn invert_unimodular(u: &IntMatrix) -> Result<IntMatrix> {
    let n = u.rows();
    if u.cols() != n {
        return Err(Error::Dimension("inverse of non-square".into()));
    }
    let hd = hermite_normal_form(u);
    if !hd.h.is_identity() {
        return Err(Error::Unsolvable("matrix is not unimodular".into()));
    }
    Ok(hd.u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Independent oracle: invariant factors from determinantal divisors.
    /// d_k = gcd of all k x k minors divided by gcd of (k-1) x (k-1) minors.
    fn minor_gcd_factors(a: &IntMatrix) -> Vec<BigInt> {
        fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if k > n {
                return vec![];
            }
            let mut out = Vec::new();
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                out.push(idx.clone());
                let mut i = k;
                loop {
                    if i == 0 {
                        return out;
                    }
                    i -= 1;
                    if idx[i] != i + n - k {
                        break;
                    }
                    if i == 0 {
                        return out;
                    }
                }
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }

        let mut factors = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=a.rows().min(a.cols()) {
            let mut g = BigInt::zero();
            for rs in combinations(a.rows(), k) {
                for cs in combinations(a.cols(), k) {
                    let sub = IntMatrix::from_fn(k, k, |i, j| a.get(rs[i], cs[j]).clone());
                    g = g.gcd(&sub.det().unwrap());
                }
            }
            if g.is_zero() {
                break;
            }
            factors.push(&g / &prev);
            prev = g;
        }
        factors
    }

    #[test]
    fn smith_identity_and_zero() {
        let i3 = IntMatrix::identity(3);
        let s = smith_normal_form(&i3);
        assert_eq!(s.rank, 3);
        assert_eq!(s.invariant_factors(), vec![big(1), big(1), big(1)]);

        let z = IntMatrix::zeros(2, 3);
        let s = smith_normal_form(&z);
        assert_eq!(s.rank, 0);
        assert!(s.p.is_unimodular() && s.q.is_unimodular());
    }

    #[test]
    fn smith_worked_example() {
        let a = IntMatrix::from_rows(vec![vec![2, 4], vec![-2, 6]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors(), vec![big(2), big(10)]);
        assert_eq!(s.p.mul(&a).mul(&s.q), s.d);
        assert!(s.p.is_unimodular() && s.q.is_unimodular());
        assert_eq!(minor_gcd_factors(&a), vec![big(2), big(10)]);
    }

    #[test]
    fn smith_matches_minor_gcd_oracle_on_fixed_cases() {
        let cases = vec![
            IntMatrix::from_rows(vec![vec![6, 4, 2], vec![4, 8, 0], vec![2, 0, 10]]),
            IntMatrix::from_rows(vec![vec![0, 0], vec![0, 5]]),
            IntMatrix::from_rows(vec![vec![3, 1, 4], vec![1, 5, 9]]),
            IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3], vec![0, 0]]),
            IntMatrix::from_rows(vec![vec![-7]]),
        ];
        for a in cases {
            let s = smith_normal_form(&a);
            assert_eq!(s.invariant_factors(), minor_gcd_factors(&a), "matrix:\n{a}");
            assert_eq!(s.p.mul(&a).mul(&s.q), s.d);
        }
    }

    #[test]
    fn smith_divisibility_chain() {
        let a = IntMatrix::from_rows(vec![vec![4, 6, 1], vec![2, 2, 2], vec![8, 4, 10]]);
        let s = smith_normal_form(&a);
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "chain broken: {f:?}");
        }
    }

    #[test]
    fn hermite_worked_examples() {
        let a = IntMatrix::from_rows(vec![vec![2, 1], vec![4, 4]]);
        let hd = hermite_normal_form(&a);
        assert_eq!(hd.h, IntMatrix::from_rows(vec![vec![2, 1], vec![0, 2]]));
        assert_eq!(hd.u.mul(&a), hd.h);
        assert!(hd.u.is_unimodular());

        let b = IntMatrix::from_rows(vec![vec![0, 0], vec![3, 0]]);
        let hd = hermite_normal_form(&b);
        assert_eq!(hd.h, IntMatrix::from_rows(vec![vec![3, 0], vec![0, 0]]));
    }

    #[test]
    fn hermite_oracle_gcd_first_column() {
        // first pivot of HNF of a single column is the gcd of the entries
        let a = IntMatrix::from_rows(vec![vec![12], vec![18], vec![30]]);
        let hd = hermite_normal_form(&a);
        assert_eq!(*hd.h.get(0, 0), big(6));
    }

    #[test]
    fn kernel_of_example_row() {
        let a = IntMatrix::from_rows(vec![vec![1, 2, 3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        for j in 0..k.cols() {
            assert!(a.mul_vec(&k.column(j)).iter().all(|x| x.is_zero()));
        }
        // saturation: SNF of the basis has unit invariant factors
        let s = smith_normal_form(&k);
        assert!(s.invariant_factors().iter().all(|f| f.is_one()));
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        let a = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3], vec![1, 1]]);
        assert_eq!(kernel_basis(&a).cols(), 0);
    }

    #[test]
    fn solve_examples() {
        let i2 = IntMatrix::identity(2);
        let b = vec![big(5), big(-3)];
        assert_eq!(solve_integer(&i2, &b, 0).unwrap(), b);

        let a = IntMatrix::from_rows(vec![vec![2]]);
        assert!(solve_integer(&a, &[big(1)], 0).is_none());

        let a = IntMatrix::from_rows(vec![vec![2, 3]]);
        let x = solve_integer(&a, &[big(1)], 0).unwrap();
        assert_eq!(a.mul_vec(&x), vec![big(1)]);
    }

    #[test]
    fn solve_seed_changes_representative_not_validity() {
        let a = IntMatrix::from_rows(vec![vec![1, 2, 3]]);
        let b = vec![big(6)];
        let x0 = solve_integer(&a, &b, 0).unwrap();
        let x1 = solve_integer(&a, &b, 1).unwrap();
        assert_eq!(a.mul_vec(&x0), b);
        assert_eq!(a.mul_vec(&x1), b);
        assert_ne!(x0, x1, "seed should move the representative");
        // seed 0 twice is identical
        assert_eq!(solve_integer(&a, &b, 0).unwrap(), x0);
    }

    #[test]
    fn cokernel_examples() {
        // Z^1 / (4) = Z/4
        let p = cokernel_presentation(1, &IntMatrix::from_rows(vec![vec![4]])).unwrap();
        assert_eq!(p.invariant_factors, vec![big(4)]);
        assert_eq!(p.free_rank, 0);
        assert_eq!(p.structure(), "Z/4");

        // Z^2 / (nothing) = Z^2
        let p = cokernel_presentation(2, &IntMatrix::zeros(2, 0)).unwrap();
        assert_eq!(p.free_rank, 2);
        assert!(p.invariant_factors.is_empty());

        // Z^2 / im [[2,0],[0,1]] = Z/2
        let p = cokernel_presentation(2, &IntMatrix::from_rows(vec![vec![2, 0], vec![0, 1]])).unwrap();
        assert_eq!(p.invariant_factors, vec![big(2)]);
        assert_eq!(p.free_rank, 0);
    }

    #[test]
    fn cokernel_projection_lift_contract() {
        let rel = IntMatrix::from_rows(vec![vec![2, 4], vec![-2, 6], vec![0, 0]]);
        let p = cokernel_presentation(3, &rel).unwrap();
        let pl = p.projection.mul(&p.lift);
        assert!(pl.is_identity(), "projection*lift:\n{pl}");
        // every relation column maps to zero coordinates
        for j in 0..rel.cols() {
            assert!(p.is_zero_class(&p.coords_of(&rel.column(j))));
        }
    }

    #[test]
    fn column_lattice_membership() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let lat = ColumnLattice::from_columns(&m);
        assert!(lat.contains(&[big(2), big(3)]));
        assert!(lat.contains(&[big(-4), big(9)]));
        assert!(!lat.contains(&[big(1), big(0)]));
        let c = lat.coordinates(&[big(6), big(-3)]).unwrap();
        assert_eq!(lat.basis().mul_vec(&c), vec![big(6), big(-3)]);
    }
}
