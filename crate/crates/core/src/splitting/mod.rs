//! Executable retractions `σ: S -> R` of ring maps `φ: R -> S`, a registry of
//! strategies selectable by name, and bounded verification of R-linearity.
//!
//! A strategy evaluates `σ` on ambient target polynomials and returns the
//! normal form of the result modulo the source ideal.

mod compose;
mod monomial;
mod rewrite;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use compose::{compose_splittings, descend_splitting, Composite, Descended};
pub use monomial::{make_semigroup_projection, make_trace_split, SemigroupProjection, TraceCertificate, TraceSplit};
pub use rewrite::{make_subalgebra_rewrite, make_weight_projection, weight_projection_on, SubalgebraRewrite, WeightProjection};

use crate::graded::{GradedError, MultiGrading};
use crate::groebner::GroebnerError;
use crate::poly::{monomials_up_to, PolyError, Polynomial, Scalar};
use crate::ringmap::{RingMap, RingMapError};

pub const DEGREE_BOUND_ENV: &str = "SUMMANDLAB_DEGREE_BOUND";

/// `SUMMANDLAB_DEGREE_BOUND` if set, else 8.
pub fn default_degree_bound() -> u32 {
    std::env::var(DEGREE_BOUND_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(8)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplittingError {
    #[error("not a monomial map: image {image}")]
    NotMonomialMap { image: String },
    #[error("semigroup is not saturated: exponent {exponent:?} lies in the lattice but is not a nonnegative combination")]
    FullnessFailure { exponent: Vec<u32> },
    #[error("generator {generator} is not invariant (weight {weight:?})")]
    GeneratorNotInvariant { generator: String, weight: Vec<i64> },
    #[error("cannot rewrite {element} in the invariant generators")]
    RewritingFailure { element: String },
    #[error("{element} is not in the image subalgebra; the retraction is only known there")]
    NotInImage { element: String },
    #[error("no finite coset basis: {0}")]
    InfiniteBasis(String),
    #[error("rank is zero")]
    RankZero,
    #[error("map is not injective")]
    NotInjective,
    #[error("cannot compose: {0}")]
    CompositionMismatch(String),
    #[error("contraction hypothesis fails: {witness}")]
    ContractionHypothesisFails { witness: String },
    #[error("descended retraction is not well defined: σ({element}) is not in the ideal")]
    DescentInconsistent { element: String },
    #[error("strategy `{0}` needs a torus action")]
    MissingAction(String),
    #[error("unknown splitting strategy `{name}`; known: {}", known.join(", "))]
    UnknownStrategy { name: String, known: Vec<String> },
    #[error("the splitting retracts a different map")]
    MapMismatch,
    #[error(transparent)]
    RingMap(#[from] RingMapError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

impl From<SplittingError> for RingMapError {
    fn from(e: SplittingError) -> Self {
        match e {
            SplittingError::RingMap(r) => r,
            SplittingError::Groebner(g) => RingMapError::Groebner(g),
            SplittingError::Poly(p) => RingMapError::Poly(p),
            other => RingMapError::Graded(other.to_string()),
        }
    }
}

/// A retraction of [`Splitting::map`].
pub trait Splitting: Send + Sync {
    fn kind(&self) -> &str;

    /// The map `φ: R -> S` this retracts.
    fn map(&self) -> &RingMap;

    /// `σ(f)` for `f` in the target ambient ring, reduced modulo the source
    /// ideal.
    fn apply(&self, f: &Polynomial) -> Result<Polynomial, SplittingError>;
}

pub type SplittingSpec = Arc<dyn Splitting>;

/// Extra inputs for constructing a strategy from a map.
#[derive(Debug, Clone)]
pub struct SplittingOptions {
    /// Bound for precondition checks such as semigroup fullness.
    pub degree_bound: u32,
    pub action: Option<MultiGrading>,
}

impl Default for SplittingOptions {
    fn default() -> Self {
        SplittingOptions { degree_bound: default_degree_bound(), action: None }
    }
}

pub type Constructor = fn(&RingMap, &SplittingOptions) -> Result<SplittingSpec, SplittingError>;

struct Entry {
    description: &'static str,
    build: Constructor,
}

/// Name -> constructor table for strategies built from a single map.
pub struct SplittingRegistry {
    entries: BTreeMap<String, Entry>,
}

impl SplittingRegistry {
    pub fn empty() -> Self {
        SplittingRegistry { entries: BTreeMap::new() }
    }

    pub fn builtin() -> Self {
        let mut r = SplittingRegistry::empty();
        r.register("semigroup", "monomial maps: keep monomials of the image semigroup, drop the rest", |m, o| {
            make_semigroup_projection(m, o.degree_bound).map(|s| s as SplittingSpec)
        });
        r.register("trace", "monomial module-finite maps: normalized trace over lattice cosets", |m, o| {
            make_trace_split(m, o.degree_bound).map(|s| s as SplittingSpec)
        });
        r.register("weight", "torus invariants: weight-zero projection, then rewriting in the images", |m, o| {
            let action = o.action.clone().ok_or_else(|| SplittingError::MissingAction("weight".into()))?;
            weight_projection_on(m, action)
        });
        r.register("subalgebra", "assumed retraction, evaluated only on the image subalgebra", |m, _| {
            make_subalgebra_rewrite(m)
        });
        r
    }

    pub fn register(&mut self, name: &str, description: &'static str, build: Constructor) {
        self.entries.insert(name.to_string(), Entry { description, build });
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.keys().cloned().collect()
    }

    pub fn description(&self, name: &str) -> Option<&'static str> {
        self.entries.get(name).map(|e| e.description)
    }

    pub fn build(&self, name: &str, map: &RingMap, options: &SplittingOptions) -> Result<SplittingSpec, SplittingError> {
        let entry = self
            .entries
            .get(name)
            .ok_or_else(|| SplittingError::UnknownStrategy { name: name.to_string(), known: self.names() })?;
        (entry.build)(map, options)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub variable: String,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub monomial: Polynomial,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub lhs: Polynomial,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub rhs: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationFailure {
    pub element: String,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    VerifiedToBound,
    Refuted,
    /// No violation found, but σ could not be evaluated everywhere.
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplittingReport {
    pub kind: String,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub sigma_of_one: Polynomial,
    pub degree_bound: u32,
    pub checks: usize,
    pub violations: Vec<Violation>,
    pub evaluation_failures: Vec<EvaluationFailure>,
    pub verdict: Verdict,
}

impl SplittingReport {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::VerifiedToBound
    }
}

enum Outcome {
    Ok,
    Violation(Violation),
    Failure(EvaluationFailure),
}

/// Checks `σ(1) = 1` and `σ(φ(r) m) = r σ(m)` modulo the source ideal for every
/// source variable `r` and target monomial `m` of total degree at most `bound`.
pub fn verify_splitting(map: &RingMap, spec: &dyn Splitting, bound: u32) -> Result<SplittingReport, SplittingError> {
    if spec.map() != map {
        return Err(SplittingError::MapMismatch);
    }
    let source = map.source();
    let target = map.target().ambient();
    let one = target.one();
    let sigma_of_one = match spec.apply(&one) {
        Ok(p) => p,
        Err(e) => {
            return Ok(SplittingReport {
                kind: spec.kind().to_string(),
                sigma_of_one: source.ambient().zero(),
                degree_bound: bound,
                checks: 0,
                violations: Vec::new(),
                evaluation_failures: vec![EvaluationFailure { element: "1".into(), reason: e.to_string() }],
                verdict: Verdict::Refuted,
            })
        }
    };
    // warm the source basis cache before fanning out
    source.reduce(&source.ambient().one())?;

    let monomials = monomials_up_to(target.arity(), bound);
    let vars = source.ambient().arity();
    let jobs: Vec<(usize, usize)> = (0..monomials.len()).flat_map(|m| (0..vars).map(move |r| (m, r))).collect();
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(mi, r)| {
            let m = Polynomial::monomial(target, monomials[mi].clone(), Scalar::one());
            let label = m.to_string();
            let lhs = match spec.apply(&(&map.images()[r] * &m)) {
                Ok(v) => v,
                Err(e) => {
                    return Outcome::Failure(EvaluationFailure {
                        element: format!("{} * {}", map.images()[r], label),
                        reason: e.to_string(),
                    })
                }
            };
            let sm = match spec.apply(&m) {
                Ok(v) => v,
                Err(e) => return Outcome::Failure(EvaluationFailure { element: label, reason: e.to_string() }),
            };
            let rhs = match source.reduce(&(&source.ambient().var(r) * &sm)) {
                Ok(v) => v,
                Err(e) => return Outcome::Failure(EvaluationFailure { element: label, reason: e.to_string() }),
            };
            if lhs == rhs {
                Outcome::Ok
            } else {
                Outcome::Violation(Violation { variable: source.ambient().variables()[r].clone(), monomial: m, lhs, rhs })
            }
        })
        .collect();

    let mut violations = Vec::new();
    let mut evaluation_failures = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Ok => {}
            Outcome::Violation(v) => violations.push(v),
            Outcome::Failure(f) => evaluation_failures.push(f),
        }
    }
    let verdict = if !violations.is_empty() || !sigma_of_one.is_one() {
        Verdict::Refuted
    } else if !evaluation_failures.is_empty() {
        Verdict::Incomplete
    } else {
        Verdict::VerifiedToBound
    };
    Ok(SplittingReport {
        kind: spec.kind().to_string(),
        sigma_of_one,
        degree_bound: bound,
        checks: jobs.len(),
        violations,
        evaluation_failures,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::PolyRing;
    use crate::ringmap::QuotientRing;

    fn veronese() -> RingMap {
        let src = QuotientRing::new(Ideal::parse(&PolyRing::parse_list("x,y,z").unwrap(), &["x*z - y^2"]).unwrap());
        let tgt = QuotientRing::polynomial(&PolyRing::parse_list("u,v").unwrap());
        let ims = ["u^2", "u*v", "v^2"].iter().map(|t| tgt.ambient().parse(t).unwrap()).collect();
        RingMap::new(src, tgt, ims).unwrap()
    }

    struct Zero(RingMap);

    impl Splitting for Zero {
        fn kind(&self) -> &str {
            "zero"
        }
        fn map(&self) -> &RingMap {
            &self.0
        }
        fn apply(&self, _: &Polynomial) -> Result<Polynomial, SplittingError> {
            Ok(self.0.source().ambient().zero())
        }
    }

    #[test]
    fn registry_lists_and_rejects() {
        let reg = SplittingRegistry::builtin();
        assert_eq!(reg.names(), vec!["semigroup", "subalgebra", "trace", "weight"]);
        let err = reg.build("nope", &veronese(), &SplittingOptions::default()).err().unwrap();
        assert!(matches!(err, SplittingError::UnknownStrategy { .. }));
        let err = reg.build("weight", &veronese(), &SplittingOptions::default()).err().unwrap();
        assert_eq!(err, SplittingError::MissingAction("weight".into()));
    }

    #[test]
    fn zero_map_is_refuted() {
        let phi = veronese();
        let report = verify_splitting(&phi, &Zero(phi.clone()), 3).unwrap();
        assert_eq!(report.verdict, Verdict::Refuted);
        assert!(report.sigma_of_one.is_zero());
    }

    #[test]
    fn registry_strategies_verify_veronese() {
        let phi = veronese();
        let reg = SplittingRegistry::builtin();
        for name in ["semigroup", "trace"] {
            let s = reg.build(name, &phi, &SplittingOptions { degree_bound: 8, action: None }).unwrap();
            let report = verify_splitting(&phi, s.as_ref(), 8).unwrap();
            assert!(report.is_verified(), "{name}: {report:?}");
            assert_eq!(report.checks, 45 * 3);
        }
    }

    #[test]
    fn mismatched_map_is_an_error() {
        let phi = veronese();
        let other = RingMap::identity(phi.target());
        assert_eq!(verify_splitting(&other, &Zero(phi), 2).unwrap_err(), SplittingError::MapMismatch);
    }
}
