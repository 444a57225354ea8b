use std::sync::Arc;

use num_traits::One;

use super::{Splitting, SplittingError, SplittingSpec};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::poly::{monomials_up_to, Polynomial, Scalar};
use crate::ringmap::{descend_to_quotient, RingMap, RingMapError};

/// `inner ∘ outer` for `R -> S` (inner) and `S -> T` (outer).
pub struct Composite {
    map: RingMap,
    inner: SplittingSpec,
    outer: SplittingSpec,
    kind: String,
}

pub fn compose_splittings(inner: SplittingSpec, outer: SplittingSpec) -> Result<SplittingSpec, SplittingError> {
    let mid_in = inner.map().target();
    let mid_out = outer.map().source();
    if mid_in.ambient() != mid_out.ambient() {
        return Err(SplittingError::CompositionMismatch(format!(
            "inner target ring {} differs from outer source ring {}",
            mid_in.ambient(),
            mid_out.ambient()
        )));
    }
    if !mid_in.ideal().same_ideal(mid_out.ideal())? {
        return Err(SplittingError::CompositionMismatch("inner target ideal differs from outer source ideal".into()));
    }
    let map = inner.map().then(outer.map())?;
    let kind = format!("compose({},{})", inner.kind(), outer.kind());
    Ok(Arc::new(Composite { map, inner, outer, kind }))
}

impl Splitting for Composite {
    fn kind(&self) -> &str {
        &self.kind
    }

    fn map(&self) -> &RingMap {
        &self.map
    }

    fn apply(&self, f: &Polynomial) -> Result<Polynomial, SplittingError> {
        self.inner.apply(&self.outer.apply(f)?)
    }
}

/// `σ̄(f̄) = σ(f)` modulo the source ideal plus `I`.
pub struct Descended {
    map: RingMap,
    parent: SplittingSpec,
    quotient: Arc<GroebnerBasis>,
    kind: String,
}

impl Descended {
    pub fn parent(&self) -> &SplittingSpec {
        &self.parent
    }
}

/// Descends along `I` after checking `IS ∩ R = I`, then re-checks
/// `σ(φ(g) m) ∈ I` for generators `g` of `I` and target monomials `m` up to
/// `bound` wherever the parent can be evaluated.
pub fn descend_splitting(spec: SplittingSpec, i: &Ideal, bound: u32) -> Result<SplittingSpec, SplittingError> {
    let map = descend_to_quotient(spec.map(), i).map_err(|e| match e {
        RingMapError::ContractionHypothesisFails { witness } => SplittingError::ContractionHypothesisFails { witness },
        other => SplittingError::RingMap(other),
    })?;
    let quotient = map.source().ideal().default_basis()?;
    let target = spec.map().target().ambient();
    for g in i.generators() {
        let image = spec.map().apply(g)?;
        for m in monomials_up_to(target.arity(), bound) {
            let probe = &image * &Polynomial::monomial(target, m, Scalar::one());
            match spec.apply(&probe) {
                Ok(v) => {
                    if !quotient.normal_form(&v)?.is_zero() {
                        return Err(SplittingError::DescentInconsistent { element: probe.to_string() });
                    }
                }
                Err(SplittingError::NotInImage { .. }) | Err(SplittingError::RewritingFailure { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let kind = format!("descend({})", spec.kind());
    Ok(Arc::new(Descended { map, parent: spec, quotient, kind }))
}

impl Splitting for Descended {
    fn kind(&self) -> &str {
        &self.kind
    }

    fn map(&self) -> &RingMap {
        &self.map
    }

    fn apply(&self, f: &Polynomial) -> Result<Polynomial, SplittingError> {
        Ok(self.quotient.normal_form(&self.parent.apply(f)?)?)
    }
}
