//! Finitely generated affine semigroups.
//!
//! An [`AffineSemigroup`] is built from a generator list in `Z^n`. The
//! constructor eagerly computes the lattice it spans, the associated cone in
//! full-rank lattice coordinates together with its dual rays, pointedness,
//! a positivity functional and the Hilbert basis. Membership, the maximal
//! summand count `s`, finite decompositions and Demazure roots are decided by
//! exhaustive bounded searches whose completeness certificates come from the
//! positivity functional: every nonzero element pairs to at least one with
//! it, so all searches terminate.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Mutex;


use crate::error::{Error, Result};
use crate::lattice::{lattice_basis, Cone, LatticeBasis, LatticeVector, MAX_RANK};
use crate::linalg;
use crate::scalar::Scalar;

/// A representation of a semigroup element as a nonnegative integer
/// combination of Hilbert basis elements, keyed by Hilbert basis index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Representation {
    multiplicities: BTreeMap<usize, u64>,
}

impl Representation {
    pub fn multiplicities(&self) -> &BTreeMap<usize, u64> {
        &self.multiplicities
    }

    /// Total number of summands.
    pub fn total(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    fn bump(&mut self, index: usize) {
        *self.multiplicities.entry(index).or_insert(0) += 1;
    }

    /// Evaluate the combination against a basis list.
    pub fn evaluate<I: Scalar>(&self, basis: &[LatticeVector<I>]) -> LatticeVector<I> {
        let rank = basis.first().map_or(0, LatticeVector::rank);
        let mut acc = LatticeVector::zero(rank);
        for (&k, &m) in &self.multiplicities {
            acc = acc.add(&basis[k].scale(&crate::scalar::int(m as i64)));
        }
        acc
    }
}

/// A Demazure root of the semigroup: the degree vector (in ambient
/// coordinates) together with the index of its distinguished dual ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root<I: Scalar> {
    pub degree: LatticeVector<I>,
    pub ray_index: usize,
}

/// A finitely generated subsemigroup of `Z^n`, with its lattice, cone and
/// Hilbert basis cached at construction. Immutable afterwards; the internal
/// memo tables are transparent caches guarded by mutexes, so shared
/// references are safe to use from several threads.
#[derive(Debug)]
pub struct AffineSemigroup<I: Scalar> {
    ambient_rank: usize,
    generators: Vec<LatticeVector<I>>,
    m_basis: LatticeBasis<I>,
    cone: Cone<I>,
    pointed: bool,
    positivity: Option<LatticeVector<I>>,
    hilbert: Vec<LatticeVector<I>>,
    hilbert_m: Vec<LatticeVector<I>>,
    hilbert_values: Vec<u64>,
    member_memo: Mutex<HashMap<Vec<I>, Option<Representation>>>,
    s_memo: Mutex<HashMap<Vec<I>, Option<u64>>>,
}

impl<I: Scalar> PartialEq for AffineSemigroup<I> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank && self.generators == other.generators
    }
}

impl<I: Scalar> Eq for AffineSemigroup<I> {}

impl<I: Scalar> AffineSemigroup<I> {
    /// Build the semigroup generated by `generators` inside `Z^ambient_rank`.
    ///
    /// Duplicates and zero vectors are dropped. Non-pointed semigroups are
    /// constructed but flagged; the length-based operations on them return
    /// [`Error::NotPointed`].
    pub fn build(ambient_rank: usize, generators: Vec<LatticeVector<I>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &generators {
            if g.rank() != ambient_rank {
                return Err(Error::DimensionMismatch {
                    expected: ambient_rank,
                    got: g.rank(),
                });
            }
        }
        let mut generators: Vec<LatticeVector<I>> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        generators.sort();
        generators.dedup();
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let m_basis = lattice_basis(&generators)?;
        if m_basis.rank() > MAX_RANK {
            return Err(Error::RankTooLarge {
                rank: m_basis.rank(),
                max: MAX_RANK,
            });
        }
        let gens_m: Vec<LatticeVector<I>> = generators
            .iter()
            .map(|g| {
                m_basis
                    .to_basis_coords(g)
                    .expect("rank checked")
                    .expect("generators lie in their own lattice")
            })
            .collect();
        let cone = Cone::new(gens_m.clone())?;
        let pointed = cone.is_strongly_convex();

        let mut positivity = None;
        let mut hilbert = Vec::new();
        let mut hilbert_m = Vec::new();
        let mut hilbert_values = Vec::new();
        if pointed {
            let mut u = LatticeVector::zero(cone.dim());
            for ray in cone.dual_rays() {
                u = u.add(ray);
            }
            for (g, g_m) in generators.iter().zip(&gens_m) {
                if !g_m.dot(&u).is_positive() {
                    return Err(Error::PositivityGuard {
                        generator: g.to_string(),
                    });
                }
            }
            // Hilbert basis: a generator g is reducible iff g - g' lands back
            // in S \ {0} for some generator g'; by pointedness it suffices to
            // subtract generators.
            let gen_values: Vec<u64> = gens_m.iter().map(|g| value_of(&g.dot(&u))).collect();
            for (k, g_m) in gens_m.iter().enumerate() {
                let reducible = gens_m.iter().any(|sub| {
                    let res = g_m.sub(sub);
                    !res.is_zero()
                        && cone.contains(&res)
                        && generated_member(&gens_m, &cone, &res)
                });
                if !reducible {
                    hilbert.push(generators[k].clone());
                    hilbert_m.push(g_m.clone());
                    hilbert_values.push(gen_values[k]);
                }
            }
            // every generator must decompose over the irreducible ones
            for g_m in &gens_m {
                assert!(
                    generated_member(&hilbert_m, &cone, g_m),
                    "generator escapes the span of the Hilbert basis"
                );
            }
            positivity = Some(u);
        }
        Ok(Self {
            ambient_rank,
            generators,
            m_basis,
            cone,
            pointed,
            positivity,
            hilbert,
            hilbert_m,
            hilbert_values,
            member_memo: Mutex::new(HashMap::new()),
            s_memo: Mutex::new(HashMap::new()),
        })
    }

    /// Build and wrap in an `Arc` for sharing with algebra elements.
    pub fn shared(
        ambient_rank: usize,
        generators: Vec<LatticeVector<I>>,
    ) -> Result<std::sync::Arc<Self>> {
        Ok(std::sync::Arc::new(Self::build(ambient_rank, generators)?))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Rank of the lattice `M` spanned by the generators.
    pub fn lattice_rank(&self) -> usize {
        self.m_basis.rank()
    }

    pub fn generators(&self) -> &[LatticeVector<I>] {
        &self.generators
    }

    pub fn m_basis(&self) -> &LatticeBasis<I> {
        &self.m_basis
    }

    /// The cone spanned by the generators, in lattice coordinates.
    pub fn cone(&self) -> &Cone<I> {
        &self.cone
    }

    /// `{0}` is a face of the semigroup iff its cone is strongly convex.
    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    /// The positivity functional (sum of the dual rays, in lattice-dual
    /// coordinates); pairs to at least one with every nonzero element.
    pub fn positivity(&self) -> Result<&LatticeVector<I>> {
        self.positivity.as_ref().ok_or(Error::NotPointed)
    }

    /// The irreducible elements, sorted; the unique minimal generating set.
    pub fn hilbert_basis(&self) -> Result<&[LatticeVector<I>]> {
        if !self.pointed {
            return Err(Error::NotPointed);
        }
        Ok(&self.hilbert)
    }

    /// Largest pairing of a Hilbert basis element with the positivity
    /// functional.
    pub fn max_hilbert_value(&self) -> Result<u64> {
        if !self.pointed {
            return Err(Error::NotPointed);
        }
        Ok(self.hilbert_values.iter().copied().max().unwrap_or(0))
    }

    /// Lattice coordinates of `a`, or `None` when `a` is outside `M`.
    pub fn lattice_coordinates(&self, a: &LatticeVector<I>) -> Result<Option<LatticeVector<I>>> {
        self.m_basis.to_basis_coords(a)
    }

    /// Inverse of [`Self::lattice_coordinates`].
    pub fn from_lattice_coordinates(&self, x: &LatticeVector<I>) -> LatticeVector<I> {
        self.m_basis.from_basis_coords(x)
    }

    /// Saturation membership: `a` lies in `M` and in the cone.
    pub fn sat_member(&self, a: &LatticeVector<I>) -> Result<bool> {
        match self.lattice_coordinates(a)? {
            Some(a_m) => Ok(self.cone.contains(&a_m)),
            None => Ok(false),
        }
    }

    /// Some representation of `a` as a nonnegative combination of the
    /// Hilbert basis, or `None` when `a` is not in the semigroup. The search
    /// is exhaustive and bounded by the positivity functional.
    pub fn member(&self, a: &LatticeVector<I>) -> Result<Option<Representation>> {
        if !self.pointed {
            return Err(Error::NotPointed);
        }
        let Some(a_m) = self.lattice_coordinates(a)? else {
            return Ok(None);
        };
        if !self.cone.contains(&a_m) {
            return Ok(None);
        }
        Ok(self.member_m(&a_m))
    }

    /// Convenience wrapper for [`Self::member`].
    pub fn contains(&self, a: &LatticeVector<I>) -> Result<bool> {
        Ok(self.member(a)?.is_some())
    }

    pub(crate) fn member_m(&self, a_m: &LatticeVector<I>) -> Option<Representation> {
        if a_m.is_zero() {
            return Some(Representation::default());
        }
        if let Some(hit) = self.member_memo.lock().unwrap().get(a_m.coords()) {
            return hit.clone();
        }
        let mut answer = None;
        for (k, h) in self.hilbert_m.iter().enumerate() {
            let res = a_m.sub(h);
            if !self.cone.contains(&res) {
                continue;
            }
            if let Some(mut rep) = self.member_m(&res) {
                rep.bump(k);
                answer = Some(rep);
                break;
            }
        }
        self.member_memo
            .lock()
            .unwrap()
            .insert(a_m.coords().to_vec(), answer.clone());
        answer
    }

    /// The maximal number of Hilbert basis summands over all representations
    /// of `a`.
    pub fn s_value(&self, a: &LatticeVector<I>) -> Result<u64> {
        if !self.pointed {
            return Err(Error::NotPointed);
        }
        let found = self
            .lattice_coordinates(a)?
            .filter(|a_m| self.cone.contains(a_m))
            .and_then(|a_m| self.s_m(&a_m));
        match found {
            Some(s) => Ok(s),
            None => Err(Error::NotInSemigroup {
                element: a.to_string(),
            }),
        }
    }

    pub(crate) fn s_m(&self, a_m: &LatticeVector<I>) -> Option<u64> {
        if a_m.is_zero() {
            return Some(0);
        }
        if let Some(hit) = self.s_memo.lock().unwrap().get(a_m.coords()) {
            return *hit;
        }
        let mut best: Option<u64> = None;
        for h in &self.hilbert_m {
            let res = a_m.sub(h);
            if !self.cone.contains(&res) {
                continue;
            }
            if let Some(s) = self.s_m(&res) {
                best = Some(best.map_or(s + 1, |b| b.max(s + 1)));
            }
        }
        self.s_memo
            .lock()
            .unwrap()
            .insert(a_m.coords().to_vec(), best);
        best
    }

    /// The complete, finite list of ordered pairs `(b, c)` in `S x S` with
    /// `b + c = a`, sorted by the first component.
    pub fn decompositions(
        &self,
        a: &LatticeVector<I>,
    ) -> Result<Vec<(LatticeVector<I>, LatticeVector<I>)>> {
        if !self.pointed {
            return Err(Error::NotPointed);
        }
        let a_m = self
            .lattice_coordinates(a)?
            .filter(|a_m| self.cone.contains(a_m))
            .filter(|a_m| self.member_m(a_m).is_some())
            .ok_or_else(|| Error::NotInSemigroup {
                element: a.to_string(),
            })?;
        let u = self.positivity.as_ref().expect("pointed");
        let bound = value_of(&a_m.dot(u));
        let mut pairs = Vec::new();
        for b_m in self.elements_with_value_at_most(bound) {
            let c_m = a_m.sub(&b_m);
            if self.cone.contains(&c_m) && self.member_m(&c_m).is_some() {
                pairs.push((
                    self.from_lattice_coordinates(&b_m),
                    self.from_lattice_coordinates(&c_m),
                ));
            }
        }
        pairs.sort();
        Ok(pairs)
    }

    /// All semigroup elements whose positivity value is at most `bound`, in
    /// lattice coordinates. Complete because the value is additive and at
    /// least one on every Hilbert basis element.
    fn elements_with_value_at_most(&self, bound: u64) -> Vec<LatticeVector<I>> {
        let u = self.positivity.as_ref().expect("pointed");
        let mut seen: HashSet<Vec<I>> = HashSet::new();
        let mut queue: VecDeque<LatticeVector<I>> = VecDeque::new();
        let zero = LatticeVector::zero(self.cone.dim());
        seen.insert(zero.coords().to_vec());
        queue.push_back(zero);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            out.push(x.clone());
            for h in &self.hilbert_m {
                let y = x.add(h);
                if value_of(&y.dot(u)) <= bound && seen.insert(y.coords().to_vec()) {
                    queue.push_back(y);
                }
            }
        }
        out.sort();
        out
    }

    /// All semigroup elements `a` with `s(a) <= level`, paired with their `s`
    /// values and sorted by `(s, lexicographic)`. Every such element is a sum
    /// of at most `level` Hilbert basis elements, so enumerating bounded sums
    /// and filtering by the exact `s` value is exhaustive.
    pub fn sublevel(&self, level: u64) -> Result<Vec<(LatticeVector<I>, u64)>> {
        if !self.pointed {
            return Err(Error::NotPointed);
        }
        let mut seen: HashSet<Vec<I>> = HashSet::new();
        let zero = LatticeVector::zero(self.cone.dim());
        seen.insert(zero.coords().to_vec());
        let mut frontier = vec![zero];
        let mut all = frontier.clone();
        for _ in 0..level {
            let mut next = Vec::new();
            for x in &frontier {
                for h in &self.hilbert_m {
                    let y = x.add(h);
                    if seen.insert(y.coords().to_vec()) {
                        next.push(y.clone());
                        all.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<(LatticeVector<I>, u64)> = all
            .into_iter()
            .filter_map(|a_m| {
                let s = self.s_m(&a_m).expect("enumerated elements lie in S");
                (s <= level).then(|| (self.from_lattice_coordinates(&a_m), s))
            })
            .collect();
        out.sort_by(|(a, sa), (b, sb)| sa.cmp(sb).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Demazure roots of the semigroup within the given box (max-norm in
    /// lattice coordinates): roots of the cone filtered by stabilisation —
    /// every Hilbert basis element pairing nonzero with the distinguished ray
    /// must stay in `S` after adding the root.
    pub fn roots(&self, box_bound: u64) -> Result<Vec<Root<I>>> {
        if !self.pointed {
            return Err(Error::NotPointed);
        }
        let mut out = Vec::new();
        for ray_index in 0..self.cone.dual_rays().len() {
            let rho = &self.cone.dual_rays()[ray_index];
            for e_m in self.cone.demazure_roots(ray_index, box_bound)? {
                let stabilizes = self.hilbert_m.iter().all(|h| {
                    if h.dot(rho).is_zero() {
                        return true;
                    }
                    let shifted = h.add(&e_m);
                    self.cone.contains(&shifted) && self.member_m(&shifted).is_some()
                });
                if stabilizes {
                    out.push(Root {
                        degree: self.from_lattice_coordinates(&e_m),
                        ray_index,
                    });
                }
            }
        }
        out.sort_by(|a, b| {
            a.ray_index
                .cmp(&b.ray_index)
                .then_with(|| a.degree.cmp(&b.degree))
        });
        Ok(out)
    }

    /// A root `e` is reducible when `e = e' + a` for another root `e'` and
    /// some nonzero `a` in `S`; the search runs over the roots found within
    /// the same box.
    pub fn is_root_reducible(&self, e: &LatticeVector<I>, box_bound: u64) -> Result<bool> {
        let roots = self.roots(box_bound)?;
        if !roots.iter().any(|r| &r.degree == e) {
            return Err(Error::NotARoot {
                degree: e.to_string(),
                box_bound,
            });
        }
        for other in &roots {
            if &other.degree == e {
                continue;
            }
            let a = e.sub(&other.degree);
            if !a.is_zero() && self.contains(&a)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The dual rays of the cone, in lattice-dual coordinates.
    pub fn dual_rays(&self) -> &[LatticeVector<I>] {
        self.cone.dual_rays()
    }

    /// The linear form `a -> <a, rho>` of the dual ray `ray_index`, expressed
    /// as a rational covector on the ambient space.
    pub fn ray_form(&self, ray_index: usize) -> Result<Vec<num_rational::Ratio<I>>> {
        let rays = self.cone.dual_rays();
        if ray_index >= rays.len() {
            return Err(Error::RayIndexOutOfRange {
                index: ray_index,
                count: rays.len(),
            });
        }
        let rows: Vec<Vec<num_rational::Ratio<I>>> = self
            .m_basis
            .basis_vectors()
            .iter()
            .map(LatticeVector::to_rationals)
            .collect();
        let rhs = rays[ray_index].to_rationals();
        linalg::solve(&rows, &rhs).ok_or(Error::RankDeficient)
    }
}

fn value_of<I: Scalar>(x: &I) -> u64 {
    x.to_u64().expect("positivity values stay small")
}

/// Bounded-complete membership in the semigroup generated by `basis`
/// (lattice coordinates); used during construction before the Hilbert basis
/// exists.
fn generated_member<I: Scalar>(
    basis: &[LatticeVector<I>],
    cone: &Cone<I>,
    target: &LatticeVector<I>,
) -> bool {
    fn go<I: Scalar>(
        basis: &[LatticeVector<I>],
        cone: &Cone<I>,
        target: &LatticeVector<I>,
        memo: &mut HashMap<Vec<I>, bool>,
    ) -> bool {
        if target.is_zero() {
            return true;
        }
        if let Some(&hit) = memo.get(target.coords()) {
            return hit;
        }
        let mut found = false;
        for h in basis {
            let res = target.sub(h);
            if cone.contains(&res) && go(basis, cone, &res, memo) {
                found = true;
                break;
            }
        }
        memo.insert(target.coords().to_vec(), found);
        found
    }
    let mut memo = HashMap::new();
    go(basis, cone, target, &mut memo)
}
