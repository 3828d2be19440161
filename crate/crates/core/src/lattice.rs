//! Exact integer lattice geometry.
//!
//! This module provides the lattice `M` generated by a set of integer
//! vectors, the pairing between `M` and its dual, polyhedral cones with their
//! primitive facet normals, strong convexity, and the enumeration of Demazure
//! roots inside a finite box.
//!
//! All cone computations expect generators expressed in full-rank lattice
//! coordinates (pass through [`LatticeBasis::to_basis_coords`] first). The
//! facet scan is combinatorial in the rank, which is capped at
//! [`MAX_RANK`].

use std::fmt;

use num_rational::Ratio;


use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{int, rat_zero, Scalar};

/// Largest supported lattice rank. The facet scan enumerates
/// `(rank - 1)`-subsets of the generators, which is only sensible for small
/// ranks.
pub const MAX_RANK: usize = 6;

/// A point of the lattice `Z^n`, used both for `M` and for the dual `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector<I: Scalar> {
    coords: Vec<I>,
}

impl<I: Scalar> LatticeVector<I> {
    pub fn new(coords: Vec<I>) -> Self {
        Self { coords }
    }

    /// Build a vector from `i64` literals.
    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![I::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[I] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(I::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.iter().map(|a| -a.clone()).collect())
    }

    pub fn scale(&self, k: &I) -> Self {
        Self::new(self.coords.iter().map(|a| a.clone() * k.clone()).collect())
    }

    /// Exact dot product; panics on rank mismatch (use [`pairing`] for the
    /// checked variant).
    pub fn dot(&self, other: &Self) -> I {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        let mut acc = I::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc = acc + a.clone() * b.clone();
        }
        acc
    }

    /// Largest absolute coordinate.
    pub fn max_norm(&self) -> I {
        let mut m = I::zero();
        for c in &self.coords {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    /// Greatest common divisor of the coordinates (zero for the zero vector).
    pub fn content(&self) -> I {
        let mut g = I::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        g
    }

    /// A vector is primitive when its coordinates have gcd one; the zero
    /// vector is never primitive.
    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divide by the content, keeping the direction. `None` for zero.
    pub fn primitive_part(&self) -> Option<Self> {
        let g = self.content();
        if g.is_zero() {
            return None;
        }
        Some(Self::new(
            self.coords.iter().map(|c| c.clone() / g.clone()).collect(),
        ))
    }

    pub(crate) fn to_rationals(&self) -> Vec<Ratio<I>> {
        self.coords
            .iter()
            .map(|c| Ratio::from_integer(c.clone()))
            .collect()
    }
}

impl<I: Scalar> fmt::Display for LatticeVector<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The bilinear pairing `M x N -> Z`, checked for compatible ranks.
pub fn pairing<I: Scalar>(m: &LatticeVector<I>, u: &LatticeVector<I>) -> Result<I> {
    if m.rank() != u.rank() {
        return Err(Error::DimensionMismatch {
            expected: m.rank(),
            got: u.rank(),
        });
    }
    Ok(m.dot(u))
}

/// A basis of the subgroup of `Z^n` generated by a list of vectors, kept in
/// row echelon form with positive pivots and strictly increasing pivot
/// columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis<I: Scalar> {
    ambient_rank: usize,
    rows: Vec<LatticeVector<I>>,
    pivots: Vec<usize>,
}

/// Compute a basis of the subgroup of `Z^n` generated by `generators`,
/// by integer row reduction (repeated gcd elimination per column).
pub fn lattice_basis<I: Scalar>(generators: &[LatticeVector<I>]) -> Result<LatticeBasis<I>> {
    let ambient_rank = generators
        .first()
        .map(LatticeVector::rank)
        .ok_or(Error::EmptyGenerators)?;
    for g in generators {
        if g.rank() != ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: ambient_rank,
                got: g.rank(),
            });
        }
    }
    let mut rows: Vec<Vec<I>> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.coords().to_vec())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ambient_rank {
        loop {
            // pick the row with smallest nonzero |entry| in this column
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        if rows[i][col].abs() < rows[b][col].abs() {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut reduced_all = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].clone() / rows[r][col].clone();
                if !q.is_zero() {
                    for j in 0..ambient_rank {
                        let delta = q.clone() * rows[r][j].clone();
                        rows[i][j] = rows[i][j].clone() - delta;
                    }
                }
                if !rows[i][col].is_zero() {
                    reduced_all = false;
                }
            }
            if reduced_all {
                if rows[r][col].is_negative() {
                    for x in rows[r].iter_mut() {
                        *x = -x.clone();
                    }
                }
                pivots.push(col);
                r += 1;
                break;
            }
        }
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    if rows.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(LatticeBasis {
        ambient_rank,
        rows: rows.into_iter().map(LatticeVector::new).collect(),
        pivots,
    })
}

impl<I: Scalar> LatticeBasis<I> {
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Rank of the lattice spanned by the basis.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis_vectors(&self) -> &[LatticeVector<I>] {
        &self.rows
    }

    /// Integer coordinates of `a` with respect to the basis, or `None` when
    /// `a` is not in the lattice.
    pub fn to_basis_coords(&self, a: &LatticeVector<I>) -> Result<Option<LatticeVector<I>>> {
        if a.rank() != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                got: a.rank(),
            });
        }
        let mut residual = a.coords().to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let (q, rem) = residual[col].div_rem(&row.coords()[col]);
            if !rem.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for j in 0..self.ambient_rank {
                    let delta = q.clone() * row.coords()[j].clone();
                    residual[j] = residual[j].clone() - delta;
                }
            }
            coords.push(q);
        }
        if residual.iter().all(I::is_zero) {
            Ok(Some(LatticeVector::new(coords)))
        } else {
            Ok(None)
        }
    }

    /// True when `a` is an integer combination of the basis vectors.
    pub fn contains(&self, a: &LatticeVector<I>) -> Result<bool> {
        Ok(self.to_basis_coords(a)?.is_some())
    }

    /// Map basis coordinates back to the ambient lattice.
    pub fn from_basis_coords(&self, x: &LatticeVector<I>) -> LatticeVector<I> {
        assert_eq!(x.rank(), self.rows.len(), "rank mismatch");
        let mut acc = LatticeVector::zero(self.ambient_rank);
        for (c, row) in x.coords().iter().zip(&self.rows) {
            acc = acc.add(&row.scale(c));
        }
        acc
    }
}

/// A polyhedral cone spanned by lattice vectors in full-rank coordinates,
/// together with the primitive generators of the rays of its dual cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone<I: Scalar> {
    generators: Vec<LatticeVector<I>>,
    dual_rays: Vec<LatticeVector<I>>,
    dim: usize,
}

impl<I: Scalar> Cone<I> {
    /// Build the cone spanned by `generators`, which must span the full
    /// ambient space over the rationals (convert to lattice coordinates
    /// first).
    pub fn new(generators: Vec<LatticeVector<I>>) -> Result<Self> {
        let generators: Vec<LatticeVector<I>> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        let dim = generators
            .first()
            .map(LatticeVector::rank)
            .ok_or(Error::EmptyGenerators)?;
        if dim > MAX_RANK {
            return Err(Error::RankTooLarge {
                rank: dim,
                max: MAX_RANK,
            });
        }
        for g in &generators {
            if g.rank() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.rank(),
                });
            }
        }
        let coord_rows: Vec<Vec<I>> = generators.iter().map(|g| g.coords().to_vec()).collect();
        if linalg::rank(&coord_rows) != dim {
            return Err(Error::RankDeficient);
        }
        let dual_rays = facet_normals(&generators, dim);
        Ok(Self {
            generators,
            dual_rays,
            dim,
        })
    }

    pub fn generators(&self) -> &[LatticeVector<I>] {
        &self.generators
    }

    /// Primitive facet normals of the cone, i.e. the primitive generators of
    /// the rays of the dual cone. Empty exactly when the cone is the whole
    /// space.
    pub fn dual_rays(&self) -> &[LatticeVector<I>] {
        &self.dual_rays
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Strong convexity, decided by exact rational feasibility: the cone
    /// fails to be strongly convex iff some nontrivial nonnegative
    /// combination of the generators vanishes.
    pub fn is_strongly_convex(&self) -> bool {
        !nonneg_combination_of_zero(&self.generators)
    }

    /// Membership via the dual description: `a` lies in the cone iff it
    /// pairs nonnegatively with every dual ray.
    pub fn contains(&self, a: &LatticeVector<I>) -> bool {
        assert_eq!(a.rank(), self.dim, "rank mismatch");
        self.dual_rays
            .iter()
            .all(|u| !a.dot(u).is_negative())
    }

    /// All Demazure roots for the dual ray `ray_index` with max-norm at most
    /// `box_bound`: vectors pairing to `-1` with the distinguished ray and
    /// nonnegatively with every other ray. The full root set is infinite in
    /// general; the box is an explicit, monotone truncation. Results are
    /// sorted lexicographically.
    pub fn demazure_roots(
        &self,
        ray_index: usize,
        box_bound: u64,
    ) -> Result<Vec<LatticeVector<I>>> {
        if !self.is_strongly_convex() {
            return Err(Error::NotPointed);
        }
        if ray_index >= self.dual_rays.len() {
            return Err(Error::RayIndexOutOfRange {
                index: ray_index,
                count: self.dual_rays.len(),
            });
        }
        let rho = &self.dual_rays[ray_index];
        let minus_one = -I::one();
        let mut roots = Vec::new();
        let mut current = vec![-int::<I>(box_bound as i64); self.dim];
        loop {
            let e = LatticeVector::new(current.clone());
            if e.dot(rho) == minus_one {
                let ok = self
                    .dual_rays
                    .iter()
                    .enumerate()
                    .all(|(k, u)| k == ray_index || !e.dot(u).is_negative());
                if ok {
                    roots.push(e);
                }
            }
            // odometer over the box [-B, B]^dim
            let mut pos = self.dim;
            loop {
                if pos == 0 {
                    return Ok(roots);
                }
                pos -= 1;
                current[pos] = current[pos].clone() + I::one();
                if current[pos] <= int(box_bound as i64) {
                    break;
                }
                current[pos] = -int::<I>(box_bound as i64);
            }
        }
    }
}

/// Scan `(dim - 1)`-subsets of the generators for facet normals: solve for a
/// primitive integer vector orthogonal to the subset, orient it nonnegatively
/// on all generators, and keep it when its zero set spans a hyperplane.
fn facet_normals<I: Scalar>(
    generators: &[LatticeVector<I>],
    dim: usize,
) -> Vec<LatticeVector<I>> {
    let mut found: Vec<LatticeVector<I>> = Vec::new();
    let mut subset = Vec::new();
    subsets(generators.len(), dim - 1, 0, &mut subset, &mut |idx| {
        let rows: Vec<Vec<Ratio<I>>> = idx
            .iter()
            .map(|&i| generators[i].to_rationals())
            .collect();
        let Some(normal) = linalg::kernel_line(&rows, dim) else {
            return;
        };
        let normal = LatticeVector::new(normal);
        for candidate in [normal.neg(), normal] {
            if generators.iter().all(|g| !g.dot(&candidate).is_negative()) {
                // facet condition: the generators annihilated by the normal
                // must span a (dim-1)-dimensional space
                let on_face: Vec<Vec<I>> = generators
                    .iter()
                    .filter(|g| g.dot(&candidate).is_zero())
                    .map(|g| g.coords().to_vec())
                    .collect();
                if dim == 1 || linalg::rank(&on_face) == dim - 1 {
                    if !found.contains(&candidate) {
                        found.push(candidate);
                    }
                }
                break;
            }
        }
    });
    found.sort();
    found
}

fn subsets(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        visit(acc);
        return;
    }
    for i in start..n {
        acc.push(i);
        subsets(n, k, i + 1, acc, visit);
        acc.pop();
    }
}

/// Does `sum alpha_k v_k = 0` admit a rational solution with `alpha >= 0` and
/// some `alpha_k > 0`? Decided by Fourier-Motzkin elimination on the system
/// with the normalisation `sum alpha_k = 1`.
pub fn nonneg_combination_of_zero<I: Scalar>(vectors: &[LatticeVector<I>]) -> bool {
    let vectors: Vec<&LatticeVector<I>> = vectors.iter().filter(|v| !v.is_zero()).collect();
    if vectors.is_empty() {
        return false;
    }
    let dim = vectors[0].rank();
    let m = vectors.len();
    let mut rows: Vec<(Vec<Ratio<I>>, Ratio<I>)> = Vec::new();
    for j in 0..dim {
        let coeffs: Vec<Ratio<I>> = vectors
            .iter()
            .map(|v| Ratio::from_integer(v.coords()[j].clone()))
            .collect();
        let negated: Vec<Ratio<I>> = coeffs.iter().map(|c| -c.clone()).collect();
        rows.push((coeffs, rat_zero()));
        rows.push((negated, rat_zero()));
    }
    let ones: Vec<Ratio<I>> = vec![Ratio::from_integer(I::one()); m];
    let neg_ones: Vec<Ratio<I>> = ones.iter().map(|c| -c.clone()).collect();
    rows.push((ones, Ratio::from_integer(I::one())));
    rows.push((neg_ones, -Ratio::from_integer(I::one())));
    for k in 0..m {
        let mut coeffs = vec![rat_zero::<I>(); m];
        coeffs[k] = -Ratio::from_integer(I::one());
        rows.push((coeffs, rat_zero()));
    }
    linalg::fourier_motzkin_feasible(rows, m)
}

/// Direct membership test `target in cone(vectors)` by Fourier-Motzkin
/// feasibility of `sum alpha_k v_k = target, alpha >= 0`. Independent of the
/// dual-ray description; quadratic-to-exponential, for cross-checks only.
pub fn cone_membership_by_elimination<I: Scalar>(
    vectors: &[LatticeVector<I>],
    target: &LatticeVector<I>,
) -> bool {
    let vectors: Vec<&LatticeVector<I>> = vectors.iter().filter(|v| !v.is_zero()).collect();
    if vectors.is_empty() {
        return target.is_zero();
    }
    let dim = vectors[0].rank();
    assert_eq!(target.rank(), dim, "rank mismatch");
    let m = vectors.len();
    let mut rows: Vec<(Vec<Ratio<I>>, Ratio<I>)> = Vec::new();
    for j in 0..dim {
        let coeffs: Vec<Ratio<I>> = vectors
            .iter()
            .map(|v| Ratio::from_integer(v.coords()[j].clone()))
            .collect();
        let negated: Vec<Ratio<I>> = coeffs.iter().map(|c| -c.clone()).collect();
        let t = Ratio::from_integer(target.coords()[j].clone());
        rows.push((coeffs, t.clone()));
        rows.push((negated, -t));
    }
    for k in 0..m {
        let mut coeffs = vec![rat_zero::<I>(); m];
        coeffs[k] = -Ratio::from_integer(I::one());
        rows.push((coeffs, rat_zero()));
    }
    linalg::fourier_motzkin_feasible(rows, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    fn v(coords: &[i64]) -> LatticeVector<BigInt> {
        LatticeVector::from_i64(coords)
    }

    #[test]
    fn basis_of_two_and_three_is_unit() {
        // gcd(2,3) = 1 by the extended Euclidean algorithm
        let b = lattice_basis(&[v(&[2]), v(&[3])]).unwrap();
        assert_eq!(b.rank(), 1);
        assert_eq!(b.basis_vectors(), &[v(&[1])]);
    }

    #[test]
    fn basis_of_standard_generators() {
        let b = lattice_basis(&[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(b.rank(), 2);
        assert_eq!(b.basis_vectors(), &[v(&[1, 0]), v(&[0, 1])]);
    }

    #[test]
    fn basis_of_even_sublattice() {
        // elementary divisors of the generator matrix are 2, 2
        let b = lattice_basis(&[v(&[2, 0]), v(&[0, 2])]).unwrap();
        assert_eq!(b.rank(), 2);
        assert_eq!(b.basis_vectors(), &[v(&[2, 0]), v(&[0, 2])]);
    }

    #[test]
    fn basis_dimension_mismatch() {
        assert_eq!(
            lattice_basis(&[v(&[1, 0]), v(&[1])]).unwrap_err(),
            Error::DimensionMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn membership_in_generated_lattice() {
        let b = lattice_basis(&[v(&[2]), v(&[3])]).unwrap();
        // 1 = 3 - 2
        assert!(b.contains(&v(&[1])).unwrap());
        let even = lattice_basis(&[v(&[2, 0]), v(&[0, 2])]).unwrap();
        assert!(!even.contains(&v(&[1, 0])).unwrap());
        assert!(even.contains(&v(&[0, 0])).unwrap());
        let coords = even.to_basis_coords(&v(&[4, -6])).unwrap().unwrap();
        assert_eq!(coords, v(&[2, -3]));
        assert_eq!(even.from_basis_coords(&coords), v(&[4, -6]));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&v(&[1, 2]), &v(&[3, 1])).unwrap(), BigInt::from(5));
        assert_eq!(pairing(&v(&[0, 0]), &v(&[7, -9])).unwrap(), BigInt::from(0));
        for k in -3..=3 {
            assert_eq!(
                pairing(&v(&[-1, k]), &v(&[1, 0])).unwrap(),
                BigInt::from(-1)
            );
        }
        assert!(pairing(&v(&[1]), &v(&[1, 2])).is_err());
    }

    #[test]
    fn first_quadrant_is_self_dual() {
        let c = Cone::new(vec![v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(c.dual_rays(), &[v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn half_line_dual() {
        let c = Cone::new(vec![v(&[1])]).unwrap();
        assert_eq!(c.dual_rays(), &[v(&[1])]);
    }

    #[test]
    fn slanted_cone_dual() {
        // solve <(1,0),u> = 0 and <(1,2),u> = 0 and check signs
        let c = Cone::new(vec![v(&[1, 0]), v(&[1, 2])]).unwrap();
        assert_eq!(c.dual_rays(), &[v(&[0, 1]), v(&[2, -1])]);
    }

    #[test]
    fn full_plane_has_no_dual_rays() {
        let c = Cone::new(vec![v(&[1, 0]), v(&[0, 1]), v(&[-1, -1])]).unwrap();
        assert!(c.dual_rays().is_empty());
        assert!(!c.is_strongly_convex());
        assert!(c.contains(&v(&[-5, 7])));
    }

    #[test]
    fn strong_convexity() {
        assert!(Cone::new(vec![v(&[1, 0]), v(&[0, 1])])
            .unwrap()
            .is_strongly_convex());
        assert!(!Cone::new(vec![v(&[1]), v(&[-1])])
            .unwrap()
            .is_strongly_convex());
        // 3*2 + 2*(-3) = 0
        assert!(!Cone::new(vec![v(&[2]), v(&[-3])])
            .unwrap()
            .is_strongly_convex());
    }

    #[test]
    fn cone_membership() {
        let c = Cone::new(vec![v(&[1, 0]), v(&[1, 2])]).unwrap();
        // <(5,1),(0,1)> = 1 >= 0 and <(5,1),(2,-1)> = 9 >= 0
        assert!(c.contains(&v(&[5, 1])));
        assert!(c.contains(&v(&[0, 0])));
        assert!(!c.contains(&v(&[0, 1])));
        let half = Cone::new(vec![v(&[1])]).unwrap();
        assert!(!half.contains(&v(&[-1])));
    }

    #[test]
    fn rank_deficient_cone_rejected() {
        assert_eq!(
            Cone::new(vec![v(&[1, 1])]).unwrap_err(),
            Error::RankDeficient
        );
    }

    #[test]
    fn demazure_roots_on_the_line() {
        let c = Cone::new(vec![v(&[1])]).unwrap();
        // e * 1 = -1 forces e = -1
        assert_eq!(c.demazure_roots(0, 3).unwrap(), vec![v(&[-1])]);
        assert!(c.demazure_roots(0, 0).unwrap().is_empty());
        assert!(c.demazure_roots(1, 3).is_err());
    }

    #[test]
    fn demazure_roots_in_the_quadrant() {
        let c = Cone::new(vec![v(&[1, 0]), v(&[0, 1])]).unwrap();
        // dual rays sort as [(0,1), (1,0)]; pick rho = (1,0)
        let roots = c.demazure_roots(1, 2).unwrap();
        assert_eq!(roots, vec![v(&[-1, 0]), v(&[-1, 1]), v(&[-1, 2])]);
        let roots = c.demazure_roots(1, 1).unwrap();
        assert_eq!(roots, vec![v(&[-1, 0]), v(&[-1, 1])]);
    }

    #[test]
    fn demazure_roots_need_pointedness() {
        let c = Cone::new(vec![v(&[1]), v(&[-1])]).unwrap();
        assert_eq!(c.demazure_roots(0, 1).unwrap_err(), Error::NotPointed);
    }

    #[test]
    fn demazure_enumeration_is_monotone_in_the_box() {
        let c = Cone::new(vec![v(&[1, 0]), v(&[1, 2])]).unwrap();
        for ray in 0..c.dual_rays().len() {
            let mut previous: Vec<LatticeVector<BigInt>> = Vec::new();
            for b in 0..=4 {
                let roots = c.demazure_roots(ray, b).unwrap();
                for e in &roots {
                    // the defining inequalities hold exactly
                    assert_eq!(e.dot(&c.dual_rays()[ray]), BigInt::from(-1));
                    for (k, u) in c.dual_rays().iter().enumerate() {
                        if k != ray {
                            assert!(!e.dot(u).is_negative());
                        }
                    }
                }
                for e in &previous {
                    assert!(roots.contains(e), "box {b} lost root {e}");
                }
                previous = roots;
            }
        }
    }

    #[test]
    fn duality_and_facet_conditions_hold_on_sample_cones() {
        let cones = vec![
            Cone::new(vec![v(&[1, 0]), v(&[0, 1])]).unwrap(),
            Cone::new(vec![v(&[1, 0]), v(&[1, 2])]).unwrap(),
            Cone::new(vec![v(&[1, 0]), v(&[1, 1]), v(&[1, 2])]).unwrap(),
            Cone::new(vec![v(&[2]), v(&[3])]).unwrap(),
            Cone::new(vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap(),
        ];
        for c in &cones {
            for u in c.dual_rays() {
                assert!(u.is_primitive());
                for g in c.generators() {
                    assert!(!g.dot(u).is_negative());
                }
                let on_face: Vec<Vec<BigInt>> = c
                    .generators()
                    .iter()
                    .filter(|g| g.dot(u).is_zero())
                    .map(|g| g.coords().to_vec())
                    .collect();
                if c.dim() > 1 {
                    assert_eq!(linalg::rank(&on_face), c.dim() - 1);
                }
            }
            // second route to strong convexity: dual rays span the space and
            // their sum is strictly positive on every generator
            let ray_rows: Vec<Vec<BigInt>> = c
                .dual_rays()
                .iter()
                .map(|u| u.coords().to_vec())
                .collect();
            let mut sum = LatticeVector::zero(c.dim());
            for u in c.dual_rays() {
                sum = sum.add(u);
            }
            let by_rays = linalg::rank(&ray_rows) == c.dim()
                && c.generators().iter().all(|g| g.dot(&sum).is_positive());
            assert_eq!(c.is_strongly_convex(), by_rays);
        }
    }

    #[test]
    fn membership_agrees_with_direct_feasibility() {
        let cones = vec![
            Cone::new(vec![v(&[1, 0]), v(&[0, 1])]).unwrap(),
            Cone::new(vec![v(&[1, 0]), v(&[1, 2])]).unwrap(),
            Cone::new(vec![v(&[2]), v(&[-3])]).unwrap(),
            Cone::new(vec![v(&[2]), v(&[3])]).unwrap(),
        ];
        for c in &cones {
            if c.dim() == 1 {
                for x in -4i64..=4 {
                    let t = v(&[x]);
                    assert_eq!(
                        c.contains(&t),
                        cone_membership_by_elimination(c.generators(), &t),
                        "cone {:?} target {t}",
                        c.generators()
                    );
                }
            } else {
                for x in -4i64..=4 {
                    for y in -4i64..=4 {
                        let t = v(&[x, y]);
                        assert_eq!(
                            c.contains(&t),
                            cone_membership_by_elimination(c.generators(), &t),
                            "cone {:?} target {t}",
                            c.generators()
                        );
                    }
                }
            }
        }
    }
}
