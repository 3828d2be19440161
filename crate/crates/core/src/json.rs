//! JSON-facing data-transfer types.
//!
//! These mirror the wire formats of the command-line interface: semigroup
//! and derivation input specs, element terms, quotient tables (with the
//! literal string `"inf"` for the absorbing element), roots, verdicts and
//! oracle reports. Conversions are concrete over the default
//! arbitrary-precision scalar; coordinates are exchanged as `i64` and exact
//! rational coefficients as strings.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::{parse_element, AlgebraElement, Carrier, CompletionTower, ExpKey};
use crate::classify::{
    Agreement, Branch, FailureWitness, IntegrabilityVerdict, OracleBounds, OracleOutcome,
    OracleReport, Verdict,
};
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::quotient::{FiniteQuotient, TowerReport};
use crate::semigroup::AffineSemigroup;
use crate::{Int, Rat, Vector};

fn vector_to_i64(v: &Vector) -> Result<Vec<i64>> {
    v.coords()
        .iter()
        .map(|c| c.to_i64().ok_or(Error::NumericOverflow))
        .collect()
}

fn vector_from_i64(coords: &[i64]) -> Vector {
    LatticeVector::from_i64(coords)
}

fn parse_ratio(text: &str) -> Result<Rat> {
    let mut parts = text.splitn(2, '/');
    let numer: Int = parts
        .next()
        .unwrap_or("")
        .trim()
        .parse()
        .map_err(|_| Error::Parse {
            position: 0,
            message: format!("invalid rational '{text}'"),
        })?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(den) => {
            let denom: Int = den.trim().parse().map_err(|_| Error::Parse {
                position: 0,
                message: format!("invalid rational '{text}'"),
            })?;
            if denom == Int::from(0) {
                return Err(Error::Parse {
                    position: 0,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// Input description of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSpec {
    pub ambient_rank: usize,
    pub generators: Vec<Vec<i64>>,
}

impl SemigroupSpec {
    pub fn build(&self) -> Result<Arc<AffineSemigroup<Int>>> {
        AffineSemigroup::shared(
            self.ambient_rank,
            self.generators.iter().map(|g| vector_from_i64(g)).collect(),
        )
    }
}

/// A rational number on the wire: a JSON integer or a string like `"3/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalSpec {
    Integer(i64),
    Text(String),
}

impl RationalSpec {
    pub fn to_ratio(&self) -> Result<Rat> {
        match self {
            RationalSpec::Integer(n) => Ok(Rat::from_integer(Int::from(*n))),
            RationalSpec::Text(t) => parse_ratio(t),
        }
    }
}

/// One homogeneous component on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub degree: Vec<i64>,
    pub phi: Vec<RationalSpec>,
}

/// Input description of a derivation: either explicit homogeneous
/// components, or images of the Hilbert basis elements in the element
/// syntax, keyed by the rendered exponent (for example `"[2]"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DerivationSpec {
    Components { components: Vec<ComponentSpec> },
    Images { images: BTreeMap<String, String> },
}

impl DerivationSpec {
    /// Build the derivation on the base carrier.
    pub fn build(&self, semigroup: &Arc<AffineSemigroup<Int>>) -> Result<Derivation<Int>> {
        match self {
            DerivationSpec::Components { components } => {
                let mut parts = Vec::new();
                for c in components {
                    let degree = vector_from_i64(&c.degree);
                    let form = c
                        .phi
                        .iter()
                        .map(RationalSpec::to_ratio)
                        .collect::<Result<Vec<_>>>()?;
                    parts.push((degree, form));
                }
                Derivation::from_components(semigroup, parts)
            }
            DerivationSpec::Images { images } => {
                let mut map = BTreeMap::new();
                for (key, value) in images {
                    let exponent = parse_exponent_key(key)?;
                    let image = parse_element(semigroup, Carrier::Base, value)?;
                    map.insert(exponent, image);
                }
                Derivation::from_generator_images(semigroup, &map)
            }
        }
    }
}

/// Parse an exponent key of the form `[a1,a2]`.
fn parse_exponent_key(key: &str) -> Result<Vector> {
    let trimmed = key.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("exponent key '{key}' must look like [a1,a2]"),
        })?;
    let coords = inner
        .split(',')
        .map(|part| {
            part.trim().parse::<i64>().map_err(|_| Error::Parse {
                position: 0,
                message: format!("invalid coordinate in '{key}'"),
            })
        })
        .collect::<Result<Vec<i64>>>()?;
    Ok(vector_from_i64(&coords))
}

/// An exponent on the wire: a coordinate array or the literal `"inf"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpJson {
    Finite(Vec<i64>),
    Infinity(String),
}

impl ExpJson {
    pub fn infinity() -> Self {
        ExpJson::Infinity("inf".into())
    }

    fn validate(&self) -> Result<()> {
        match self {
            ExpJson::Infinity(tag) if tag != "inf" => Err(Error::Parse {
                position: 0,
                message: format!("unknown exponent tag '{tag}'"),
            }),
            _ => Ok(()),
        }
    }
}

/// One term of an element on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exp: ExpJson,
}

/// An algebra element on the wire: carrier tag, terms sorted by
/// `(s, lexicographic)` with infinity last, and the rendered text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub carrier: String,
    pub terms: Vec<TermJson>,
    pub rendered: String,
}

pub fn carrier_tag(carrier: Carrier) -> String {
    match carrier {
        Carrier::Base => "base".into(),
        Carrier::Compactified => "compactified".into(),
        Carrier::Quotient(l) => format!("quotient:{l}"),
    }
}

pub fn carrier_from_tag(tag: &str) -> Result<Carrier> {
    match tag {
        "base" => Ok(Carrier::Base),
        "compactified" => Ok(Carrier::Compactified),
        other => match other.strip_prefix("quotient:") {
            Some(level) => level
                .parse::<u64>()
                .map(Carrier::Quotient)
                .map_err(|_| Error::Parse {
                    position: 0,
                    message: format!("unknown carrier '{other}'"),
                }),
            None => Err(Error::Parse {
                position: 0,
                message: format!("unknown carrier '{other}'"),
            }),
        },
    }
}

pub fn element_to_json(element: &AlgebraElement<Int>) -> Result<ElementJson> {
    let semigroup = element.semigroup();
    let mut keyed: Vec<(u64, ExpKey<Int>, Rat)> = Vec::new();
    for (key, coeff) in element.terms() {
        let order = match key {
            ExpKey::Infinity => u64::MAX,
            ExpKey::Finite(a) => semigroup.s_value(a)?,
        };
        keyed.push((order, key.clone(), coeff.clone()));
    }
    keyed.sort_by(|(sa, ka, _), (sb, kb, _)| sa.cmp(sb).then_with(|| ka.cmp(kb)));
    let terms = keyed
        .into_iter()
        .map(|(_, key, coeff)| {
            let exp = match key {
                ExpKey::Infinity => ExpJson::infinity(),
                ExpKey::Finite(a) => ExpJson::Finite(vector_to_i64(&a)?),
            };
            Ok(TermJson {
                coeff: coeff.to_string(),
                exp,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ElementJson {
        carrier: carrier_tag(element.carrier()),
        terms,
        rendered: element.to_string(),
    })
}

pub fn element_from_json(
    semigroup: &Arc<AffineSemigroup<Int>>,
    json: &ElementJson,
) -> Result<AlgebraElement<Int>> {
    let carrier = carrier_from_tag(&json.carrier)?;
    let mut terms = Vec::new();
    for term in &json.terms {
        term.exp.validate()?;
        let key = match &term.exp {
            ExpJson::Infinity(_) => ExpKey::Infinity,
            ExpJson::Finite(coords) => ExpKey::Finite(vector_from_i64(coords)),
        };
        terms.push((key, parse_ratio(&term.coeff)?));
    }
    AlgebraElement::from_terms(semigroup, carrier, terms)
}

/// Semigroup analysis report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeJson {
    pub pointed: bool,
    pub ambient_rank: usize,
    pub lattice_rank: usize,
    pub generators: Vec<Vec<i64>>,
    /// Present only for pointed semigroups.
    pub hilbert_basis: Option<Vec<Vec<i64>>>,
    /// Primitive facet normals in lattice-dual coordinates.
    pub dual_rays: Vec<Vec<i64>>,
    /// Elements with `s` value up to the requested bound.
    pub s_table: Option<Vec<STableEntry>>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct STableEntry {
    pub element: Vec<i64>,
    pub s: u64,
}

pub fn analyze_to_json(
    semigroup: &Arc<AffineSemigroup<Int>>,
    s_bound: Option<u64>,
) -> Result<AnalyzeJson> {
    let pointed = semigroup.is_pointed();
    let hilbert_basis = if pointed {
        Some(
            semigroup
                .hilbert_basis()?
                .iter()
                .map(vector_to_i64)
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let s_table = match (pointed, s_bound) {
        (true, Some(bound)) => Some(
            semigroup
                .sublevel(bound)?
                .into_iter()
                .map(|(a, s)| {
                    Ok(STableEntry {
                        element: vector_to_i64(&a)?,
                        s,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        ),
        _ => None,
    };
    Ok(AnalyzeJson {
        pointed,
        ambient_rank: semigroup.ambient_rank(),
        lattice_rank: semigroup.lattice_rank(),
        generators: semigroup
            .generators()
            .iter()
            .map(vector_to_i64)
            .collect::<Result<Vec<_>>>()?,
        hilbert_basis,
        dual_rays: semigroup
            .dual_rays()
            .iter()
            .map(vector_to_i64)
            .collect::<Result<Vec<_>>>()?,
        s_table,
        note: (!pointed)
            .then(|| "not pointed: the compactified semigroup is not a topological semigroup".into()),
    })
}

/// One Demazure root with its reducibility flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootJson {
    pub degree: Vec<i64>,
    pub ray_index: usize,
    pub ray: Vec<i64>,
    pub reducible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsJson {
    pub box_bound: u64,
    pub roots: Vec<RootJson>,
}

pub fn roots_to_json(semigroup: &Arc<AffineSemigroup<Int>>, box_bound: u64) -> Result<RootsJson> {
    let mut roots = Vec::new();
    for root in semigroup.roots(box_bound)? {
        roots.push(RootJson {
            degree: vector_to_i64(&root.degree)?,
            ray_index: root.ray_index,
            ray: vector_to_i64(&semigroup.dual_rays()[root.ray_index])?,
            reducible: semigroup.is_root_reducible(&root.degree, box_bound)?,
        });
    }
    Ok(RootsJson { box_bound, roots })
}

/// Quotient addition table with the literal `"inf"` slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub level: u64,
    pub elements: Vec<ExpJson>,
    pub table: Vec<Vec<ExpJson>>,
}

pub fn quotient_to_json(quotient: &FiniteQuotient<Int>) -> Result<QuotientJson> {
    let mut elements: Vec<ExpJson> = quotient
        .elements()
        .iter()
        .map(|a| Ok(ExpJson::Finite(vector_to_i64(a)?)))
        .collect::<Result<Vec<_>>>()?;
    elements.push(ExpJson::infinity());
    let table = quotient
        .table()
        .iter()
        .map(|row| row.iter().map(|&idx| elements[idx].clone()).collect())
        .collect();
    Ok(QuotientJson {
        level: quotient.level(),
        elements,
        table,
    })
}

/// Oracle bounds on the wire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub i_max: u64,
    pub j_max: u64,
    pub n_max: usize,
    pub gen_span: u64,
}

impl From<OracleBounds> for BoundsJson {
    fn from(b: OracleBounds) -> Self {
        Self {
            i_max: b.i_max,
            j_max: b.j_max,
            n_max: b.n_max,
            gen_span: b.gen_span,
        }
    }
}

impl From<BoundsJson> for OracleBounds {
    fn from(b: BoundsJson) -> Self {
        Self {
            i_max: b.i_max,
            j_max: b.j_max,
            n_max: b.n_max,
            gen_span: b.gen_span,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub element: ElementJson,
    pub iterations: usize,
    pub target_level: u64,
    pub source_level: Option<u64>,
}

pub fn witness_to_json(witness: &FailureWitness<Int>) -> Result<WitnessJson> {
    Ok(WitnessJson {
        element: element_to_json(&witness.element)?,
        iterations: witness.iterations,
        target_level: witness.target_level,
        source_level: witness.source_level,
    })
}

pub fn verdict_tag(verdict: Verdict) -> &'static str {
    match verdict {
        Verdict::Integrable => "integrable",
        Verdict::NotIntegrable => "not-integrable",
        Verdict::OutOfScope => "out-of-scope",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub verdict: String,
    pub branch: Option<String>,
    pub degree: Option<Vec<i64>>,
    pub witness: Option<WitnessJson>,
    pub bounds: Option<BoundsJson>,
    pub notes: Vec<String>,
}

pub fn verdict_to_json(
    verdict: &IntegrabilityVerdict<Int>,
    bounds: Option<OracleBounds>,
) -> Result<VerdictJson> {
    Ok(VerdictJson {
        verdict: verdict_tag(verdict.verdict).to_string(),
        branch: verdict.branch.map(|b| {
            match b {
                Branch::Lnd => "lnd",
                Branch::NonLnd => "non-lnd",
            }
            .to_string()
        }),
        degree: match &verdict.degree {
            Some(d) => Some(vector_to_i64(d)?),
            None => None,
        },
        witness: match &verdict.witness {
            Some(w) => Some(witness_to_json(w)?),
            None => None,
        },
        bounds: bounds.map(BoundsJson::from),
        notes: verdict.notes.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeJson {
    pub pass: bool,
    pub witness: Option<WitnessJson>,
    pub detail: String,
}

pub fn outcome_to_json(outcome: &OracleOutcome<Int>) -> Result<OutcomeJson> {
    Ok(OutcomeJson {
        pass: outcome.pass,
        witness: match &outcome.witness {
            Some(w) => Some(witness_to_json(w)?),
            None => None,
        },
        detail: outcome.detail.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReportJson {
    pub closed_form: VerdictJson,
    pub continuity: OutcomeJson,
    pub p1: OutcomeJson,
    pub p2: OutcomeJson,
    pub oracle_integrable: bool,
    pub agreement: String,
    pub bounds: BoundsJson,
}

pub fn oracle_report_to_json(report: &OracleReport<Int>) -> Result<OracleReportJson> {
    Ok(OracleReportJson {
        closed_form: verdict_to_json(&report.closed_form, Some(report.bounds))?,
        continuity: outcome_to_json(&report.continuity)?,
        p1: outcome_to_json(&report.p1)?,
        p2: outcome_to_json(&report.p2)?,
        oracle_integrable: report.oracle_integrable,
        agreement: match report.agreement {
            Agreement::Agree => "agree",
            Agreement::Disagree => "disagree",
            Agreement::OutOfScopeByConvention => "out-of-scope-by-convention",
        }
        .to_string(),
        bounds: report.bounds.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReportJson {
    pub levels: usize,
    pub passed: bool,
    pub issues: Vec<String>,
}

pub fn tower_report_to_json(report: &TowerReport) -> TowerReportJson {
    TowerReportJson {
        levels: report.levels,
        passed: report.passed(),
        issues: report.issues.iter().map(ToString::to_string).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerJson {
    pub levels: Vec<ElementJson>,
    pub compatible: bool,
    pub algebraic: bool,
    pub witness_level: Option<usize>,
}

pub fn tower_to_json(tower: &CompletionTower<Int>) -> Result<TowerJson> {
    Ok(TowerJson {
        levels: tower
            .levels()
            .iter()
            .map(element_to_json)
            .collect::<Result<Vec<_>>>()?,
        compatible: tower.is_compatible(),
        algebraic: tower.is_algebraic(),
        witness_level: tower.compatibility_witness(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn semigroup_spec_round_trip() {
        let spec = SemigroupSpec {
            ambient_rank: 2,
            generators: vec![vec![1, 0], vec![0, 1]],
        };
        let text = serde_json::to_string(&spec).unwrap();
        let parsed: SemigroupSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(spec, parsed);
        assert!(spec.build().unwrap().is_pointed());
    }

    #[test]
    fn derivation_spec_components_and_images() {
        let n = catalog::naturals();
        let spec: DerivationSpec = serde_json::from_str(
            r#"{"components":[{"degree":[-1],"phi":["1"]}]}"#,
        )
        .unwrap();
        let d = spec.build(&n).unwrap();
        assert_eq!(d.components().len(), 1);

        let spec: DerivationSpec =
            serde_json::from_str(r#"{"images":{"[1]":"x^[2] + 3"}}"#).unwrap();
        let d = spec.build(&n).unwrap();
        assert_eq!(d.components().len(), 2);

        // rational entries may be numbers or strings
        let spec: DerivationSpec = serde_json::from_str(
            r#"{"components":[{"degree":[1],"phi":[1]},{"degree":[2],"phi":["3/2"]}]}"#,
        )
        .unwrap();
        assert!(spec.build(&n).is_ok());
    }

    #[test]
    fn element_json_round_trip() {
        let n = catalog::naturals();
        let f = parse_element(&n, Carrier::Compactified, "1 - 2/3*x^[4] + x^inf").unwrap();
        let json = element_to_json(&f).unwrap();
        let text = serde_json::to_string(&json).unwrap();
        let parsed: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(json, parsed);
        let back = element_from_json(&n, &parsed).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn quotient_json_uses_inf_literal() {
        let n = catalog::naturals();
        let q = FiniteQuotient::build(&n, 2).unwrap();
        let json = quotient_to_json(&q).unwrap();
        assert_eq!(json.elements.last(), Some(&ExpJson::infinity()));
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"inf\""));
        let parsed: QuotientJson = serde_json::from_str(&text).unwrap();
        assert_eq!(json, parsed);
    }

    #[test]
    fn verdict_json_round_trip() {
        let d = catalog::power_derivative(0);
        let verdict = crate::classify::classify_integrable(&d).unwrap();
        let json = verdict_to_json(&verdict, Some(OracleBounds::default())).unwrap();
        assert_eq!(json.verdict, "not-integrable");
        assert_eq!(json.branch.as_deref(), Some("lnd"));
        let text = serde_json::to_string(&json).unwrap();
        let parsed: VerdictJson = serde_json::from_str(&text).unwrap();
        assert_eq!(json, parsed);
    }

    #[test]
    fn analyze_json_flags_non_pointed() {
        let z = catalog::integers_pair();
        let json = analyze_to_json(&z, None).unwrap();
        assert!(!json.pointed);
        assert!(json.hilbert_basis.is_none());
        assert!(json.note.as_deref().unwrap().contains("not pointed"));
    }
}
