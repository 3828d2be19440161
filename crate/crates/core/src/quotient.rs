//! Finite quotients of the compactified semigroup and their inverse limit.
//!
//! Level `i` consists of the elements with `s` value at most `i` plus an
//! absorbing infinity; two elements add to infinity as soon as their true sum
//! leaves the level set. The bonding map to the next-coarser level collapses
//! everything that drops out. [`check_tower`] verifies, exhaustively on the
//! materialised tables, that each level is a commutative semigroup, that the
//! bonding maps are surjective homomorphisms, and that every compatible
//! thread through the truncated tower is all-infinity or eventually constant
//! starting exactly at its `s` level.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::scalar::Scalar;
use crate::semigroup::AffineSemigroup;

/// A slot of a finite quotient: a genuine semigroup element or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Element(usize),
    Infinity,
}

/// The finite quotient at one level of the filtration, with a fully
/// materialised addition table.
#[derive(Debug, Clone)]
pub struct FiniteQuotient<I: Scalar> {
    semigroup: Arc<AffineSemigroup<I>>,
    level: u64,
    elements: Vec<LatticeVector<I>>,
    s_values: Vec<u64>,
    /// `table[i][j]` holds the index of the sum, with `elements.len()`
    /// standing for infinity; the table includes the infinity row and column.
    table: Vec<Vec<usize>>,
}

impl<I: Scalar> FiniteQuotient<I> {
    /// Build the level-`level` quotient of a pointed semigroup.
    pub fn build(semigroup: &Arc<AffineSemigroup<I>>, level: u64) -> Result<Self> {
        let sub = semigroup.sublevel(level)?;
        let elements: Vec<LatticeVector<I>> = sub.iter().map(|(a, _)| a.clone()).collect();
        let s_values: Vec<u64> = sub.iter().map(|(_, s)| *s).collect();
        let n = elements.len();
        let inf = n;
        let mut table = vec![vec![inf; n + 1]; n + 1];
        for i in 0..n {
            for j in 0..n {
                let sum = elements[i].add(&elements[j]);
                let s = semigroup.s_value(&sum)?;
                table[i][j] = if s <= level {
                    elements
                        .iter()
                        .position(|e| e == &sum)
                        .expect("sum with small s value is listed")
                } else {
                    inf
                };
            }
        }
        // infinity row and column are absorbing by construction
        Ok(Self {
            semigroup: Arc::clone(semigroup),
            level,
            elements,
            s_values,
            table,
        })
    }

    /// Assemble a quotient from raw parts (used to exercise the checker on
    /// corrupted tables). Shapes are validated, semantics are not.
    pub fn from_parts(
        semigroup: Arc<AffineSemigroup<I>>,
        level: u64,
        elements: Vec<LatticeVector<I>>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = elements.len();
        if table.len() != n + 1 || table.iter().any(|row| row.len() != n + 1) {
            return Err(Error::InvalidTable {
                message: format!("table must be {}x{}", n + 1, n + 1),
            });
        }
        if table.iter().flatten().any(|&x| x > n) {
            return Err(Error::InvalidTable {
                message: "entry out of range".into(),
            });
        }
        let s_values = elements
            .iter()
            .map(|a| semigroup.s_value(a))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            semigroup,
            level,
            elements,
            s_values,
            table,
        })
    }

    pub fn semigroup(&self) -> &Arc<AffineSemigroup<I>> {
        &self.semigroup
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// The finite elements, sorted by `(s, lexicographic)`.
    pub fn elements(&self) -> &[LatticeVector<I>] {
        &self.elements
    }

    pub fn s_values(&self) -> &[u64] {
        &self.s_values
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn slot_count(&self) -> usize {
        self.elements.len() + 1
    }

    fn slot(&self, index: usize) -> Slot {
        if index == self.elements.len() {
            Slot::Infinity
        } else {
            Slot::Element(index)
        }
    }

    fn slot_name(&self, index: usize) -> String {
        match self.slot(index) {
            Slot::Infinity => "inf".to_string(),
            Slot::Element(k) => self.elements[k].to_string(),
        }
    }

    /// Index of a finite element, if it lives at this level.
    pub fn index_of(&self, a: &LatticeVector<I>) -> Option<usize> {
        self.elements.iter().position(|e| e == a)
    }

    /// Add two slots through the table.
    pub fn add(&self, x: Slot, y: Slot) -> Slot {
        let i = match x {
            Slot::Element(i) => i,
            Slot::Infinity => self.elements.len(),
        };
        let j = match y {
            Slot::Element(j) => j,
            Slot::Infinity => self.elements.len(),
        };
        self.slot(self.table[i][j])
    }

    /// The bonding map onto a coarser level: index map sending each slot of
    /// `self` to a slot of `coarser` (`coarser.elements.len()` is infinity).
    pub fn collapse_map(&self, coarser: &Self) -> Result<Vec<usize>> {
        if coarser.level > self.level {
            return Err(Error::TowerLevelMismatch {
                expected: self.level as usize,
                found: coarser.level as usize,
            });
        }
        let inf_coarse = coarser.elements.len();
        let mut map = Vec::with_capacity(self.slot_count());
        for a in &self.elements {
            map.push(coarser.index_of(a).unwrap_or(inf_coarse));
        }
        map.push(inf_coarse);
        Ok(map)
    }
}

/// A defect found by the tower checker, with pre-rendered witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerIssue {
    NotCommutative { level: u64, a: String, b: String },
    NotAssociative { level: u64, a: String, b: String, c: String },
    InfinityNotAbsorbing { level: u64, a: String },
    IdentityBroken { level: u64, a: String },
    NotHomomorphism { coarser_level: u64, a: String, b: String },
    NotSurjective { coarser_level: u64, missing: String },
    SectionBroken { coarser_level: u64, a: String },
    NotNested { coarser_level: u64, element: String },
    BadThread { top: String, level: u64 },
}

impl std::fmt::Display for TowerIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TowerIssue::NotCommutative { level, a, b } => {
                write!(f, "level {level}: {a} + {b} != {b} + {a}")
            }
            TowerIssue::NotAssociative { level, a, b, c } => {
                write!(f, "level {level}: ({a} + {b}) + {c} != {a} + ({b} + {c})")
            }
            TowerIssue::InfinityNotAbsorbing { level, a } => {
                write!(f, "level {level}: inf + {a} != inf")
            }
            TowerIssue::IdentityBroken { level, a } => {
                write!(f, "level {level}: 0 + {a} != {a}")
            }
            TowerIssue::NotHomomorphism { coarser_level, a, b } => {
                write!(f, "map onto level {coarser_level} is not additive at ({a}, {b})")
            }
            TowerIssue::NotSurjective { coarser_level, missing } => {
                write!(f, "map onto level {coarser_level} misses {missing}")
            }
            TowerIssue::SectionBroken { coarser_level, a } => {
                write!(f, "section of level {coarser_level} fails at {a}")
            }
            TowerIssue::NotNested { coarser_level, element } => {
                write!(f, "level {coarser_level} element {element} missing above")
            }
            TowerIssue::BadThread { top, level } => {
                write!(f, "thread below {top} breaks the constant-tail pattern at level {level}")
            }
        }
    }
}

/// Outcome of a tower verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerReport {
    pub levels: usize,
    pub issues: Vec<TowerIssue>,
}

impl TowerReport {
    pub fn passed(&self) -> bool {
        self.issues.is_empty()
    }
}

/// The bonding map from level `level + 1` onto level `level`: an index map
/// over the finer quotient's slots, with the coarser element count standing
/// for infinity. It is the identity on surviving elements and collapses the
/// rest.
pub fn bonding_map<I: Scalar>(
    semigroup: &Arc<AffineSemigroup<I>>,
    level: u64,
) -> Result<Vec<usize>> {
    let fine = FiniteQuotient::build(semigroup, level + 1)?;
    let coarse = FiniteQuotient::build(semigroup, level)?;
    fine.collapse_map(&coarse)
}

/// Build levels `0..=max_level` for a pointed semigroup and verify the whole
/// truncated tower.
pub fn check_tower<I: Scalar>(
    semigroup: &Arc<AffineSemigroup<I>>,
    max_level: u64,
) -> Result<TowerReport> {
    let mut quotients = Vec::with_capacity(max_level as usize + 1);
    for i in 0..=max_level {
        quotients.push(FiniteQuotient::build(semigroup, i)?);
    }
    Ok(check_quotients(&quotients))
}

/// Verify an explicit list of consecutive quotients. Runs every check to the
/// end and returns all defects found.
pub fn check_quotients<I: Scalar>(quotients: &[FiniteQuotient<I>]) -> TowerReport {
    let mut issues = Vec::new();
    for q in quotients {
        check_single_level(q, &mut issues);
    }
    for pair in quotients.windows(2) {
        check_bonding(&pair[1], &pair[0], &mut issues);
    }
    check_threads(quotients, &mut issues);
    TowerReport {
        levels: quotients.len(),
        issues,
    }
}

fn check_single_level<I: Scalar>(q: &FiniteQuotient<I>, issues: &mut Vec<TowerIssue>) {
    let n = q.slot_count();
    let inf = n - 1;
    let zero = q
        .elements()
        .iter()
        .position(LatticeVector::is_zero)
        .expect("zero has s value 0 and is present at every level");
    for a in 0..n {
        if q.table[inf][a] != inf || q.table[a][inf] != inf {
            issues.push(TowerIssue::InfinityNotAbsorbing {
                level: q.level,
                a: q.slot_name(a),
            });
        }
        if q.table[zero][a] != a || q.table[a][zero] != a {
            issues.push(TowerIssue::IdentityBroken {
                level: q.level,
                a: q.slot_name(a),
            });
        }
        for b in 0..n {
            if q.table[a][b] != q.table[b][a] {
                issues.push(TowerIssue::NotCommutative {
                    level: q.level,
                    a: q.slot_name(a),
                    b: q.slot_name(b),
                });
            }
            for c in 0..n {
                if q.table[q.table[a][b]][c] != q.table[a][q.table[b][c]] {
                    issues.push(TowerIssue::NotAssociative {
                        level: q.level,
                        a: q.slot_name(a),
                        b: q.slot_name(b),
                        c: q.slot_name(c),
                    });
                }
            }
        }
    }
}

fn check_bonding<I: Scalar>(
    fine: &FiniteQuotient<I>,
    coarse: &FiniteQuotient<I>,
    issues: &mut Vec<TowerIssue>,
) {
    let map = fine
        .collapse_map(coarse)
        .expect("levels are consecutive by construction");
    // nesting of the level sets
    for a in coarse.elements() {
        if fine.index_of(a).is_none() {
            issues.push(TowerIssue::NotNested {
                coarser_level: coarse.level,
                element: a.to_string(),
            });
        }
    }
    let nf = fine.slot_count();
    for a in 0..nf {
        for b in 0..nf {
            let lhs = map[fine.table[a][b]];
            let rhs = coarse.table[map[a]][map[b]];
            if lhs != rhs {
                issues.push(TowerIssue::NotHomomorphism {
                    coarser_level: coarse.level,
                    a: fine.slot_name(a),
                    b: fine.slot_name(b),
                });
            }
        }
    }
    for target in 0..coarse.slot_count() {
        if !(0..nf).any(|a| map[a] == target) {
            issues.push(TowerIssue::NotSurjective {
                coarser_level: coarse.level,
                missing: coarse.slot_name(target),
            });
        }
    }
    // the inclusion-induced section composed with the map is the identity on
    // the finite part
    for (k, a) in coarse.elements().iter().enumerate() {
        match fine.index_of(a) {
            Some(idx) if map[idx] == k => {}
            _ => issues.push(TowerIssue::SectionBroken {
                coarser_level: coarse.level,
                a: a.to_string(),
            }),
        }
    }
}

/// Compatible threads through the truncated tower are determined by their
/// top slot; each must be all-infinity or infinity up to exactly the `s`
/// level of its element and constant afterwards.
fn check_threads<I: Scalar>(quotients: &[FiniteQuotient<I>], issues: &mut Vec<TowerIssue>) {
    let Some(top) = quotients.last() else {
        return;
    };
    let maps: Vec<Vec<usize>> = quotients
        .windows(2)
        .map(|pair| {
            pair[1]
                .collapse_map(&pair[0])
                .expect("levels are consecutive")
        })
        .collect();
    for start in 0..top.slot_count() {
        // walk the thread downwards
        let mut thread = vec![start];
        for level in (0..quotients.len() - 1).rev() {
            let here = *thread.last().unwrap();
            thread.push(maps[level][here]);
        }
        thread.reverse(); // thread[i] is the slot at level i
        let expected_switch = match top.slot(start) {
            Slot::Infinity => None, // all-infinity thread
            Slot::Element(k) => Some(top.s_values()[k]),
        };
        for (i, (&slot, q)) in thread.iter().zip(quotients).enumerate() {
            let ok = match expected_switch {
                None => slot == q.elements.len(),
                Some(switch) => {
                    if (i as u64) < switch {
                        slot == q.elements.len()
                    } else {
                        q.slot(slot) != Slot::Infinity
                            && q.elements[slot] == top.elements[match top.slot(start) {
                                Slot::Element(k) => k,
                                Slot::Infinity => unreachable!(),
                            }]
                    }
                }
            };
            if !ok {
                issues.push(TowerIssue::BadThread {
                    top: top.slot_name(start),
                    level: i as u64,
                });
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(coords: &[i64]) -> LatticeVector<BigInt> {
        LatticeVector::from_i64(coords)
    }

    fn sg(rank: usize, gens: &[&[i64]]) -> Arc<AffineSemigroup<BigInt>> {
        AffineSemigroup::shared(rank, gens.iter().map(|g| v(g)).collect()).unwrap()
    }

    #[test]
    fn natural_level_three() {
        let n = sg(1, &[&[1]]);
        let q = FiniteQuotient::build(&n, 3).unwrap();
        assert_eq!(q.elements(), &[v(&[0]), v(&[1]), v(&[2]), v(&[3])]);
        // 2 + 2 = 4 leaves the level set
        let two = q.index_of(&v(&[2])).unwrap();
        assert_eq!(q.add(Slot::Element(two), Slot::Element(two)), Slot::Infinity);
        let one = q.index_of(&v(&[1])).unwrap();
        assert_eq!(
            q.add(Slot::Element(one), Slot::Element(two)),
            Slot::Element(q.index_of(&v(&[3])).unwrap())
        );
    }

    #[test]
    fn numerical_semigroup_level_two() {
        let s = sg(1, &[&[2], &[3]]);
        let q = FiniteQuotient::build(&s, 2).unwrap();
        // s(6) = 3, so 6 is not in the level set and 3 + 3 = inf
        assert_eq!(
            q.elements(),
            &[v(&[0]), v(&[2]), v(&[3]), v(&[4]), v(&[5])]
        );
        let three = q.index_of(&v(&[3])).unwrap();
        assert_eq!(
            q.add(Slot::Element(three), Slot::Element(three)),
            Slot::Infinity
        );
    }

    #[test]
    fn level_zero_is_zero_and_infinity() {
        let s = sg(2, &[&[1, 0], &[0, 1]]);
        let q = FiniteQuotient::build(&s, 0).unwrap();
        assert_eq!(q.elements(), &[v(&[0, 0])]);
        assert_eq!(q.slot_count(), 2);
    }

    #[test]
    fn bonding_map_collapses_new_elements() {
        let n = sg(1, &[&[1]]);
        let q2 = FiniteQuotient::build(&n, 2).unwrap();
        let q3 = FiniteQuotient::build(&n, 3).unwrap();
        let map = q3.collapse_map(&q2).unwrap();
        let three = q3.index_of(&v(&[3])).unwrap();
        assert_eq!(map[three], q2.elements().len()); // 3 -> inf
        let two = q3.index_of(&v(&[2])).unwrap();
        assert_eq!(map[two], q2.index_of(&v(&[2])).unwrap());
        assert_eq!(map[q3.elements().len()], q2.elements().len()); // inf -> inf
        let zero = q3.index_of(&v(&[0])).unwrap();
        assert_eq!(map[zero], q2.index_of(&v(&[0])).unwrap()); // 0 -> 0
    }

    #[test]
    fn bonding_map_examples() {
        let n = sg(1, &[&[1]]);
        let q2 = FiniteQuotient::build(&n, 2).unwrap();
        let q3 = FiniteQuotient::build(&n, 3).unwrap();
        let map = bonding_map(&n, 2).unwrap();
        let inf_coarse = q2.elements().len();
        assert_eq!(map[q3.index_of(&v(&[3])).unwrap()], inf_coarse);
        assert_eq!(
            map[q3.index_of(&v(&[2])).unwrap()],
            q2.index_of(&v(&[2])).unwrap()
        );
        assert_eq!(map[q3.elements().len()], inf_coarse);
        assert_eq!(
            map[q3.index_of(&v(&[0])).unwrap()],
            q2.index_of(&v(&[0])).unwrap()
        );
        // surjectivity onto the coarser level
        for target in 0..=inf_coarse {
            assert!(map.iter().any(|&m| m == target));
        }
    }

    #[test]
    fn towers_over_the_catalog_pass() {
        assert!(check_tower(&sg(1, &[&[1]]), 5).unwrap().passed());
        assert!(check_tower(&sg(2, &[&[1, 0], &[0, 1]]), 4).unwrap().passed());
        assert!(check_tower(&sg(1, &[&[2], &[3]]), 4).unwrap().passed());
    }

    #[test]
    fn corrupted_table_is_detected() {
        let n = sg(1, &[&[1]]);
        let good = FiniteQuotient::build(&n, 2).unwrap();
        let mut table = good.table().to_vec();
        // break 1 + 1: redirect it to 0
        let one = good.index_of(&v(&[1])).unwrap();
        let zero = good.index_of(&v(&[0])).unwrap();
        table[one][one] = zero;
        let bad = FiniteQuotient::from_parts(
            Arc::clone(&n),
            2,
            good.elements().to_vec(),
            table,
        )
        .unwrap();
        let quotients = vec![
            FiniteQuotient::build(&n, 0).unwrap(),
            FiniteQuotient::build(&n, 1).unwrap(),
            bad,
        ];
        let report = check_quotients(&quotients);
        assert!(!report.passed());
        assert!(!report.issues.is_empty());
    }

    #[test]
    fn level_sets_are_nested_and_grow() {
        let s = sg(1, &[&[2], &[3]]);
        let mut previous = 0;
        let mut prior_elements: Vec<LatticeVector<BigInt>> = Vec::new();
        for i in 0..=5 {
            let q = FiniteQuotient::build(&s, i).unwrap();
            assert!(q.elements().len() >= previous);
            for a in &prior_elements {
                assert!(q.index_of(a).is_some());
            }
            previous = q.elements().len();
            prior_elements = q.elements().to_vec();
        }
    }

    #[test]
    fn threads_have_unique_constant_tail() {
        let s = sg(2, &[&[1, 0], &[0, 1]]);
        let quotients: Vec<_> = (0..=3)
            .map(|i| FiniteQuotient::build(&s, i).unwrap())
            .collect();
        let top = quotients.last().unwrap();
        for (k, a) in top.elements().iter().enumerate() {
            let s_val = top.s_values()[k];
            // the element first appears exactly at its s level
            for q in &quotients {
                assert_eq!(q.index_of(a).is_some(), q.level() >= s_val);
            }
        }
    }

    #[test]
    fn non_pointed_quotient_errors() {
        let z = sg(1, &[&[1], &[-1]]);
        assert!(matches!(
            FiniteQuotient::build(&z, 1),
            Err(Error::NotPointed)
        ));
    }
}
