//! Worked example semigroups and derivations shared by the test suites, the
//! acceptance run and the documentation. Everything here is concrete over
//! the default arbitrary-precision scalar.

use std::sync::Arc;

use num_rational::Ratio;

use crate::algebra::{AlgebraElement, Carrier, CompletionTower};
use crate::derivation::Derivation;
use crate::error::Result;
use crate::lattice::LatticeVector;
use crate::scalar::rat;
use crate::semigroup::{AffineSemigroup, Root};
use crate::{Int, Rat, Tower, Vector};

fn build(rank: usize, gens: &[&[i64]]) -> Arc<AffineSemigroup<Int>> {
    AffineSemigroup::shared(rank, gens.iter().map(|g| LatticeVector::from_i64(g)).collect())
        .expect("catalog semigroups are well formed")
}

/// The natural numbers inside `Z`.
pub fn naturals() -> Arc<AffineSemigroup<Int>> {
    build(1, &[&[1]])
}

/// The first quadrant `N^2`.
pub fn quadrant() -> Arc<AffineSemigroup<Int>> {
    build(2, &[&[1, 0], &[0, 1]])
}

/// The numerical semigroup generated by 2 and 3 (not saturated).
pub fn numerical_23() -> Arc<AffineSemigroup<Int>> {
    build(1, &[&[2], &[3]])
}

/// The saturated plane sector spanned by `(1,0)`, `(1,1)` and `(1,2)`; all
/// three generators are irreducible.
pub fn slanted_sector() -> Arc<AffineSemigroup<Int>> {
    build(2, &[&[1, 0], &[1, 1], &[1, 2]])
}

/// The integers, generated as `{1, -1}`; not pointed.
pub fn integers_pair() -> Arc<AffineSemigroup<Int>> {
    build(1, &[&[1], &[-1]])
}

/// The non-pointed pair `{2, -3}` (a nontrivial vanishing combination).
pub fn opposite_pair() -> Arc<AffineSemigroup<Int>> {
    build(1, &[&[2], &[-3]])
}

/// The pointed catalog entries with readable names.
pub fn pointed_catalog() -> Vec<(&'static str, Arc<AffineSemigroup<Int>>)> {
    vec![
        ("naturals", naturals()),
        ("quadrant", quadrant()),
        ("numerical<2,3>", numerical_23()),
        ("slanted-sector", slanted_sector()),
    ]
}

/// All catalog entries, with the expected pointedness flag.
pub fn full_catalog() -> Vec<(&'static str, Arc<AffineSemigroup<Int>>, bool)> {
    vec![
        ("naturals", naturals(), true),
        ("quadrant", quadrant(), true),
        ("numerical<2,3>", numerical_23(), true),
        ("slanted-sector", slanted_sector(), true),
        ("integers", integers_pair(), false),
        ("opposite-pair", opposite_pair(), false),
    ]
}

/// The derivation `1 * d_e` attached to a Demazure root: the form is the
/// pairing with the distinguished ray. Locally nilpotent by construction.
pub fn ray_derivation(
    semigroup: &Arc<AffineSemigroup<Int>>,
    root: &Root<Int>,
) -> Result<Derivation<Int>> {
    let form = semigroup.ray_form(root.ray_index)?;
    Derivation::homogeneous(semigroup, root.degree.clone(), form)
}

/// A homogeneous derivation whose form is the sum of all ray forms (the
/// positivity functional); nonzero on every generator, hence well defined
/// whenever the degree keeps all generators inside the semigroup.
pub fn positivity_derivation(
    semigroup: &Arc<AffineSemigroup<Int>>,
    degree: &Vector,
) -> Result<Derivation<Int>> {
    let rank = semigroup.ambient_rank();
    let mut form: Vec<Rat> = vec![Ratio::from_integer(Int::from(0)); rank];
    for k in 0..semigroup.dual_rays().len() {
        for (acc, w) in form.iter_mut().zip(semigroup.ray_form(k)?) {
            *acc = acc.clone() + w;
        }
    }
    Derivation::homogeneous(semigroup, degree.clone(), form)
}

/// The lift of `x^l d/dx` to the compactified algebra over the naturals:
/// degree `l - 1`, form the identity.
pub fn power_derivative(l: u64) -> Derivation<Int> {
    let n = naturals();
    Derivation::homogeneous(&n, LatticeVector::from_i64(&[l as i64 - 1]), vec![rat(1, 1)])
        .expect("closure holds for degrees at least -1")
        .lift()
}

/// The quasi-homogeneous sweep used to pit the classifier against the
/// oracle: named lifted derivations over the pointed catalog.
pub fn classification_catalog() -> Vec<(String, Derivation<Int>)> {
    let mut out = Vec::new();
    let n = naturals();
    for e in [-1i64, 0, 1, 2] {
        let d = positivity_derivation(&n, &LatticeVector::from_i64(&[e]))
            .expect("closure holds over the naturals");
        out.push((format!("naturals, degree [{e}]"), d.lift()));
    }
    let q = quadrant();
    let root = q
        .roots(1)
        .expect("pointed")
        .into_iter()
        .find(|r| r.degree == LatticeVector::from_i64(&[-1, 0]))
        .expect("(-1,0) is a root of the quadrant");
    out.push((
        "quadrant, degree [-1,0]".to_string(),
        ray_derivation(&q, &root).expect("ray derivations are closed").lift(),
    ));
    for e in [[1i64, 0], [1, 1]] {
        let d = positivity_derivation(&q, &LatticeVector::from_i64(&e))
            .expect("interior degrees are closed");
        out.push((format!("quadrant, degree [{},{}]", e[0], e[1]), d.lift()));
    }
    let s = numerical_23();
    for e in [2i64, 3] {
        let d = positivity_derivation(&s, &LatticeVector::from_i64(&[e]))
            .expect("semigroup degrees are closed");
        out.push((format!("numerical<2,3>, degree [{e}]"), d.lift()));
    }
    out
}

/// The level-`l` component of the halving tower: `sum_{k<=l} 2^-k x^k`
/// plus `2^-l x^inf`. Compatible at every truncation but never algebraic,
/// because each level contributes a fresh finite term.
pub fn geometric_half_tower(max_level: u64) -> Tower {
    let n = naturals();
    CompletionTower::from_rule(max_level, |l| {
        let mut f = AlgebraElement::chi_infinity(&n, Carrier::Quotient(l))?
            .scale(&rat(1, 1i64 << l));
        for k in 0..=l {
            f = f.add(&AlgebraElement::monomial(
                &n,
                Carrier::Quotient(l),
                rat(1, 1i64 << k),
                &LatticeVector::from_i64(&[k as i64]),
            )?);
        }
        Ok(f)
    })
    .expect("levels are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_integrable, Verdict};

    #[test]
    fn catalog_pointedness_matches() {
        for (name, semigroup, pointed) in full_catalog() {
            assert_eq!(semigroup.is_pointed(), pointed, "{name}");
        }
    }

    #[test]
    fn classification_catalog_is_quasi_homogeneous() {
        for (name, d) in classification_catalog() {
            assert_eq!(d.components().len(), 1, "{name}");
            let verdict = classify_integrable(&d).unwrap();
            assert_ne!(verdict.verdict, Verdict::OutOfScope, "{name}");
        }
    }

    #[test]
    fn half_tower_never_stabilises() {
        let tower = geometric_half_tower(4);
        assert!(tower.is_compatible());
        assert!(!tower.is_algebraic());
    }
}
