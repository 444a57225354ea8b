use std::sync::Arc;

use super::{Splitting, SplittingError, SplittingSpec};
use crate::graded::{check_homogeneous, homogeneous_degree, MultiGrading};
use crate::groebner::{GroebnerBasis, Ideal, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::ringmap::{kernel, QuotientRing, RingMap};

/// Subalgebra membership and rewriting: `f ∈ Q[φ(x)] + J` iff its normal
/// form modulo `J + (s_i - φ(x_i))`, under an order eliminating the target
/// variables, involves only the tags `s_i`.
struct SubalgebraRewriter {
    combined: PolyRing,
    target_arity: usize,
    gb: Arc<GroebnerBasis>,
}

impl SubalgebraRewriter {
    fn new(map: &RingMap) -> Result<Self, SplittingError> {
        let t = map.target().ambient();
        let (m, n) = (t.arity(), map.source().ambient().arity());
        let combined = PolyRing::new((0..m).map(|i| format!("_t{i}")).chain((0..n).map(|i| format!("_s{i}"))))?;
        let t_map: Vec<usize> = (0..m).collect();
        let mut gens: Vec<Polynomial> = map.target().ideal().generators().iter().map(|g| g.relabel(&combined, &t_map)).collect();
        for (i, im) in map.images().iter().enumerate() {
            gens.push(&combined.var(m + i) - &im.relabel(&combined, &t_map));
        }
        let gb = Ideal::new(&combined, gens)?.groebner(&MonomialOrder::BlockElimination { first_block: m })?;
        Ok(SubalgebraRewriter { combined, target_arity: m, gb })
    }

    /// `r` with `φ(r) ≡ f` modulo the target ideal, if one exists.
    fn rewrite(&self, f: &Polynomial, source: &PolyRing) -> Result<Option<Polynomial>, SplittingError> {
        let m = self.target_arity;
        let lifted = f.relabel(&self.combined, &(0..m).collect::<Vec<_>>());
        let nf = self.gb.normal_form(&lifted)?;
        if nf.terms().iter().any(|(mono, _)| mono.exponents()[..m].iter().any(|&e| e > 0)) {
            return Ok(None);
        }
        let back: Vec<usize> = (0..self.combined.arity()).map(|i| i.saturating_sub(m)).collect();
        Ok(Some(nf.relabel(source, &back)))
    }
}

/// A retraction known only on the image subalgebra, where `σ(φ(r)) = r` forces
/// its value. Elsewhere evaluation fails with [`SplittingError::NotInImage`].
pub struct SubalgebraRewrite {
    map: RingMap,
    rewriter: SubalgebraRewriter,
}

pub fn make_subalgebra_rewrite(map: &RingMap) -> Result<SplittingSpec, SplittingError> {
    Ok(Arc::new(SubalgebraRewrite { map: map.clone(), rewriter: SubalgebraRewriter::new(map)? }))
}

impl Splitting for SubalgebraRewrite {
    fn kind(&self) -> &str {
        "subalgebra"
    }

    fn map(&self) -> &RingMap {
        &self.map
    }

    fn apply(&self, f: &Polynomial) -> Result<Polynomial, SplittingError> {
        let source = self.map.source();
        match self.rewriter.rewrite(f, source.ambient())? {
            Some(r) => Ok(source.reduce(&r)?),
            None => Err(SplittingError::NotInImage { element: f.to_string() }),
        }
    }
}

/// Projection onto weight zero followed by rewriting in the invariant
/// generators (the images of the source variables).
pub struct WeightProjection {
    map: RingMap,
    action: MultiGrading,
    rewriter: SubalgebraRewriter,
}

impl WeightProjection {
    pub fn action(&self) -> &MultiGrading {
        &self.action
    }

    /// Weight-zero part of `f`.
    pub fn project(&self, f: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            f.ring(),
            f.terms().iter().filter(|(m, _)| self.action.degree_of(m).0.iter().all(|&w| w == 0)).cloned(),
        )
    }
}

/// Builds the presentation `Q[y]/ker -> Q` from the invariant generators.
pub fn make_weight_projection(
    q: &QuotientRing,
    action: MultiGrading,
    invariant_generators: &[Polynomial],
) -> Result<SplittingSpec, SplittingError> {
    let ys = PolyRing::indexed("y", 0, invariant_generators.len());
    let free = RingMap::new(QuotientRing::polynomial(&ys), q.clone(), invariant_generators.to_vec())?;
    let presented = QuotientRing::new(kernel(&free)?);
    weight_projection_on(&free.with_source(presented)?, action)
}

/// Weight projection retracting an existing map whose images are invariants.
pub fn weight_projection_on(map: &RingMap, action: MultiGrading) -> Result<SplittingSpec, SplittingError> {
    check_homogeneous(map.target().ideal(), &action)?;
    for g in map.images() {
        let w = homogeneous_degree(g, &action).map_err(|_| SplittingError::GeneratorNotInvariant {
            generator: g.to_string(),
            weight: g.leading_term().map(|(m, _)| action.degree_of(m).0).unwrap_or_default(),
        })?;
        if w.0.iter().any(|&x| x != 0) {
            return Err(SplittingError::GeneratorNotInvariant { generator: g.to_string(), weight: w.0 });
        }
    }
    Ok(Arc::new(WeightProjection { map: map.clone(), action, rewriter: SubalgebraRewriter::new(map)? }))
}

impl Splitting for WeightProjection {
    fn kind(&self) -> &str {
        "weight"
    }

    fn map(&self) -> &RingMap {
        &self.map
    }

    fn apply(&self, f: &Polynomial) -> Result<Polynomial, SplittingError> {
        let target = self.map.target();
        let zero_part = self.project(&target.reduce(f)?);
        let source = self.map.source();
        match self.rewriter.rewrite(&zero_part, source.ambient())? {
            Some(r) => Ok(source.reduce(&r)?),
            None => Err(SplittingError::RewritingFailure { element: zero_part.to_string() }),
        }
    }
}
