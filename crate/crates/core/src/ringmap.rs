//! Maps between presented rings `Q[x]/I -> Q[y]/J`.

use serde::Serialize;
use thiserror::Error;

use crate::graded::{homogeneous_degree, GradedError, MultiGrading};
use crate::groebner::{eliminate, standard_monomials, GroebnerError, Ideal};
use crate::poly::{Monomial, PolyError, PolyRing, Polynomial, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingMapError {
    #[error("expected {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("map is not well defined: {generator} maps to {image}, which is not in the target ideal")]
    NotWellDefined { generator: String, image: String },
    #[error("not positively graded: {0}")]
    NotPositivelyGraded(String),
    #[error("contraction hypothesis fails: {witness} lies in the contraction of the expanded ideal but not in the ideal")]
    ContractionHypothesisFails { witness: String },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0}")]
    Graded(String),
}

impl From<GradedError> for RingMapError {
    fn from(e: GradedError) -> Self {
        match e {
            GradedError::Groebner(g) => RingMapError::Groebner(g),
            GradedError::Poly(p) => RingMapError::Poly(p),
            other => RingMapError::Graded(other.to_string()),
        }
    }
}

/// `ambient / ideal`, optionally with a grading making the ideal homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRing {
    ambient: PolyRing,
    ideal: Ideal,
    grading: Option<MultiGrading>,
}

impl QuotientRing {
    pub fn new(ideal: Ideal) -> Self {
        QuotientRing { ambient: ideal.ring().clone(), ideal, grading: None }
    }

    pub fn polynomial(ring: &PolyRing) -> Self {
        QuotientRing::new(Ideal::zero(ring))
    }

    pub fn with_grading(mut self, grading: MultiGrading) -> Result<Self, GradedError> {
        crate::graded::check_homogeneous(&self.ideal, &grading)?;
        if grading.arity() != self.ambient.arity() {
            return Err(GradedError::ArityMismatch { expected: self.ambient.arity(), got: grading.arity() });
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn grading(&self) -> Option<&MultiGrading> {
        self.grading.as_ref()
    }

    /// The grading if present, else total degree.
    pub fn grading_or_standard(&self) -> MultiGrading {
        self.grading.clone().unwrap_or_else(|| MultiGrading::standard(self.ambient.arity()))
    }

    /// Canonical representative modulo the ideal.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial, GroebnerError> {
        if self.ideal.is_zero_ideal() {
            self.ambient.check_same(p.ring())?;
            return Ok(p.clone());
        }
        self.ideal.default_basis()?.normal_form(p)
    }

    pub fn is_zero(&self, p: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Adds generators to the ideal, dropping the grading if it no longer applies.
    pub fn quotient_by(&self, extra: &[Polynomial]) -> Result<QuotientRing, PolyError> {
        let ideal = self.ideal.with_generators(extra)?;
        let grading = self.grading.clone().filter(|w| crate::graded::check_homogeneous(&ideal, w).is_ok());
        Ok(QuotientRing { ambient: self.ambient.clone(), ideal, grading })
    }
}

/// A homomorphism given by one target polynomial per source variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    source: QuotientRing,
    target: QuotientRing,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: QuotientRing, target: QuotientRing, images: Vec<Polynomial>) -> Result<Self, RingMapError> {
        if images.len() != source.ambient.arity() {
            return Err(RingMapError::ImageCount { expected: source.ambient.arity(), got: images.len() });
        }
        for im in &images {
            target.ambient.check_same(im.ring())?;
        }
        Ok(RingMap { source, target, images })
    }

    pub fn identity(q: &QuotientRing) -> Self {
        RingMap { source: q.clone(), target: q.clone(), images: q.ambient.gens() }
    }

    pub fn source(&self) -> &QuotientRing {
        &self.source
    }

    pub fn target(&self) -> &QuotientRing {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of a source polynomial, as an ambient target polynomial.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        self.source.ambient.check_same(p.ring())?;
        p.substitute(&self.images)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &RingMap) -> Result<RingMap, RingMapError> {
        self.target.ambient.check_same(&next.source.ambient)?;
        let images = self.images.iter().map(|g| next.apply(g)).collect::<Result<Vec<_>, _>>()?;
        RingMap::new(self.source.clone(), next.target.clone(), images)
    }

    pub fn with_source(&self, source: QuotientRing) -> Result<RingMap, RingMapError> {
        RingMap::new(source, self.target.clone(), self.images.clone())
    }

    pub fn with_target(&self, target: QuotientRing) -> Result<RingMap, RingMapError> {
        RingMap::new(self.source.clone(), target, self.images.clone())
    }
}

/// One checked membership `φ(g) ∈ J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipWitness {
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub generator: Polynomial,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub image: Polynomial,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub normal_form: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WellDefinedness {
    Certified { witnesses: Vec<MembershipWitness> },
    Counterexample { witness: MembershipWitness },
}

impl WellDefinedness {
    pub fn is_certified(&self) -> bool {
        matches!(self, WellDefinedness::Certified { .. })
    }
}

pub fn check_well_defined(map: &RingMap) -> Result<WellDefinedness, RingMapError> {
    let mut witnesses = Vec::new();
    for g in map.source.ideal.generators() {
        let image = map.apply(g)?;
        let normal_form = map.target.reduce(&image)?;
        let w = MembershipWitness { generator: g.clone(), image, normal_form };
        if !w.normal_form.is_zero() {
            return Ok(WellDefinedness::Counterexample { witness: w });
        }
        witnesses.push(w);
    }
    Ok(WellDefinedness::Certified { witnesses })
}

/// `φ⁻¹(J)` for an ideal `J` of the target ambient ring; the target ideal is
/// added to `J` first. The result contains the source ideal and is returned
/// as its reduced degrevlex basis.
pub fn preimage_ideal(map: &RingMap, j: &Ideal) -> Result<Ideal, RingMapError> {
    let s = &map.source.ambient;
    let t = &map.target.ambient;
    t.check_same(j.ring())?;
    let (n, m) = (s.arity(), t.arity());
    // target variables first so the block order eliminates them
    let graph = PolyRing::new((0..m).map(|i| format!("_t{i}")).chain((0..n).map(|i| format!("_s{i}"))))?;
    let t_map: Vec<usize> = (0..m).collect();
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in map.target.ideal.generators().iter().chain(j.generators()) {
        gens.push(g.relabel(&graph, &t_map));
    }
    for (i, im) in map.images.iter().enumerate() {
        gens.push(&graph.var(m + i) - &im.relabel(&graph, &t_map));
    }
    let drop: Vec<usize> = (0..m).collect();
    let elim = eliminate(&Ideal::new(&graph, gens)?, &drop)?;
    let back: Vec<usize> = (0..n).collect();
    let mut out: Vec<Polynomial> = elim.generators().iter().map(|g| g.relabel(s, &back)).collect();
    out.extend(map.source.ideal.generators().iter().cloned());
    let ideal = Ideal::new(s, out)?;
    let basis = ideal.default_basis()?.basis().to_vec();
    Ok(Ideal::new(s, basis)?)
}

/// Preimage of the target ideal.
pub fn kernel(map: &RingMap) -> Result<Ideal, RingMapError> {
    preimage_ideal(map, &Ideal::zero(&map.target.ambient))
}

/// Injective iff the kernel adds nothing to the source ideal.
pub fn is_injective(map: &RingMap) -> Result<bool, RingMapError> {
    let k = kernel(map)?;
    Ok(map.source.ideal.contains_ideal(&k)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModuleFiniteness {
    pub finite: bool,
    /// `dim_Q S / (φ(x) S)` when finite.
    pub dimension: Option<usize>,
    #[serde(serialize_with = "crate::report::ser_polys")]
    pub basis: Vec<Polynomial>,
}

/// Graded module-finiteness: `S` is finite over the image iff
/// `S / (images of the source variables)` is finite dimensional.
pub fn is_module_finite_graded(map: &RingMap) -> Result<ModuleFiniteness, RingMapError> {
    let w = map.target.grading_or_standard();
    if !w.is_positive() {
        return Err(RingMapError::NotPositivelyGraded("target grading is not positive on every variable".into()));
    }
    for im in &map.images {
        if im.is_zero() {
            continue;
        }
        if !im.constant_term().eq(&Scalar::from_integer(0.into())) {
            return Err(RingMapError::NotPositivelyGraded(format!("image {im} has a constant term")));
        }
        homogeneous_degree(im, &w).map_err(|e| RingMapError::NotPositivelyGraded(e.to_string()))?;
    }
    let fibre = map.target.ideal.with_generators(&map.images)?;
    match standard_monomials(&*fibre.default_basis()?) {
        Ok(std) => {
            let t = &map.target.ambient;
            let basis = std.into_iter().map(|m: Monomial| Polynomial::monomial(t, m, Scalar::from_integer(1.into()))).collect::<Vec<_>>();
            Ok(ModuleFiniteness { finite: true, dimension: Some(basis.len()), basis })
        }
        Err(GroebnerError::NotZeroDimensional { .. }) => Ok(ModuleFiniteness { finite: false, dimension: None, basis: vec![] }),
        Err(e) => Err(e.into()),
    }
}

/// The induced map `R/I -> S/IS`, after checking `IS ∩ R = I`.
pub fn descend_to_quotient(map: &RingMap, i: &Ideal) -> Result<RingMap, RingMapError> {
    map.source.ambient.check_same(i.ring())?;
    let expanded: Vec<Polynomial> = i.generators().iter().map(|g| map.apply(g)).collect::<Result<_, _>>()?;
    let expanded = Ideal::new(&map.target.ambient, expanded)?;
    let contraction = preimage_ideal(map, &expanded)?;
    let base = map.source.ideal.sum(i)?;
    let gb = base.default_basis()?;
    for g in contraction.generators() {
        if !gb.normal_form(g)?.is_zero() {
            return Err(RingMapError::ContractionHypothesisFails { witness: g.to_string() });
        }
    }
    let source = map.source.quotient_by(i.generators())?;
    let target = map.target.quotient_by(expanded.generators())?;
    RingMap::new(source, target, map.images.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> PolyRing {
        PolyRing::parse_list(s).unwrap()
    }

    fn map(src: &QuotientRing, tgt: &QuotientRing, images: &[&str]) -> RingMap {
        let ims = images.iter().map(|t| tgt.ambient().parse(t).unwrap()).collect();
        RingMap::new(src.clone(), tgt.clone(), ims).unwrap()
    }

    #[test]
    fn toric_cubic_map_is_well_defined() {
        // n = 3: x0 -> a0*a1*a2, xi -> a_{i-1}^3
        let src = QuotientRing::new(Ideal::parse(&ring("x0,x1,x2,x3"), &["x0^3 - x1*x2*x3"]).unwrap());
        let tgt = QuotientRing::polynomial(&ring("a0,a1,a2"));
        let phi = map(&src, &tgt, &["a0*a1*a2", "a0^3", "a1^3", "a2^3"]);
        assert!(check_well_defined(&phi).unwrap().is_certified());
        let fin = is_module_finite_graded(&phi).unwrap();
        assert!(fin.finite);
    }

    #[test]
    fn counterexample_is_reported() {
        let src = QuotientRing::new(Ideal::parse(&ring("x,y"), &["x - y^2"]).unwrap());
        let tgt = QuotientRing::polynomial(&ring("u"));
        let phi = map(&src, &tgt, &["u", "u"]);
        match check_well_defined(&phi).unwrap() {
            WellDefinedness::Counterexample { witness } => {
                assert_eq!(witness.normal_form, tgt.ambient().parse("u - u^2").unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(check_well_defined(&RingMap::identity(&src)).unwrap().is_certified());
    }

    #[test]
    fn kernels() {
        let src = QuotientRing::polynomial(&ring("x,y,z,w"));
        let tgt = QuotientRing::polynomial(&ring("u,v,s,t"));
        let segre = map(&src, &tgt, &["u*s", "u*t", "v*s", "v*t"]);
        let k = kernel(&segre).unwrap();
        assert!(k.same_ideal(&Ideal::parse(src.ambient(), &["x*w - y*z"]).unwrap()).unwrap());

        let src = QuotientRing::polynomial(&ring("x,y"));
        let cusp = map(&src, &QuotientRing::polynomial(&ring("u")), &["u^2", "u^3"]);
        let k = kernel(&cusp).unwrap();
        assert!(k.same_ideal(&Ideal::parse(src.ambient(), &["x^3 - y^2"]).unwrap()).unwrap());

        let q = QuotientRing::new(Ideal::parse(&ring("x,y"), &["x*y"]).unwrap());
        assert!(kernel(&RingMap::identity(&q)).unwrap().same_ideal(q.ideal()).unwrap());
        assert!(is_injective(&RingMap::identity(&q)).unwrap());
    }

    #[test]
    fn injectivity() {
        let src = QuotientRing::new(Ideal::parse(&ring("x,y,z"), &["x*z - y^2"]).unwrap());
        let tgt = QuotientRing::polynomial(&ring("u,v"));
        assert!(is_injective(&map(&src, &tgt, &["u^2", "u*v", "v^2"])).unwrap());
        assert!(!is_injective(&map(&src, &tgt, &["0", "0", "0"])).unwrap());
    }

    #[test]
    fn contraction_along_veronese() {
        let src = QuotientRing::new(Ideal::parse(&ring("x,y,z"), &["x*z - y^2"]).unwrap());
        let tgt = QuotientRing::polynomial(&ring("u,v"));
        let phi = map(&src, &tgt, &["u^2", "u*v", "v^2"]);
        let c = preimage_ideal(&phi, &Ideal::parse(tgt.ambient(), &["u"]).unwrap()).unwrap();
        // u divides u^2 and u v only: contraction is (x, y) (which contains y^2 = xz)
        assert!(c.same_ideal(&Ideal::parse(src.ambient(), &["x", "y"]).unwrap()).unwrap());
        let unit = preimage_ideal(&phi, &Ideal::unit(tgt.ambient())).unwrap();
        assert!(unit.is_unit().unwrap());
    }

    #[test]
    fn module_finiteness() {
        let src = QuotientRing::new(Ideal::parse(&ring("x,y,z"), &["x*z - y^2"]).unwrap());
        let tgt = QuotientRing::polynomial(&ring("u,v"));
        let fin = is_module_finite_graded(&map(&src, &tgt, &["u^2", "u*v", "v^2"])).unwrap();
        assert_eq!(fin.dimension, Some(3));
        let line = map(&QuotientRing::polynomial(&ring("x")), &QuotientRing::polynomial(&ring("x,y")), &["x"]);
        assert!(!is_module_finite_graded(&line).unwrap().finite);
    }

    #[test]
    fn descent() {
        let src = QuotientRing::new(Ideal::parse(&ring("x,y,z"), &["x*z - y^2"]).unwrap());
        let tgt = QuotientRing::polynomial(&ring("u,v"));
        let phi = map(&src, &tgt, &["u^2", "u*v", "v^2"]);
        let same = descend_to_quotient(&phi, &Ideal::zero(src.ambient())).unwrap();
        assert!(same.source().ideal().same_ideal(src.ideal()).unwrap());
        let zero = descend_to_quotient(&phi, &Ideal::unit(src.ambient())).unwrap();
        assert!(zero.source().ideal().is_unit().unwrap());
        assert!(zero.target().ideal().is_unit().unwrap());
        // direct summand, so (x) contracts back to (x, xz - y^2)
        assert!(descend_to_quotient(&phi, &Ideal::parse(src.ambient(), &["x"]).unwrap()).is_ok());
        // the cusp ring is not a summand of Q[u]: (u^2) contracts to (x, y)
        let cusp = QuotientRing::new(Ideal::parse(&ring("x,y"), &["x^3 - y^2"]).unwrap());
        let psi = map(&cusp, &QuotientRing::polynomial(&ring("u")), &["u^2", "u^3"]);
        let err = descend_to_quotient(&psi, &Ideal::parse(cusp.ambient(), &["x"]).unwrap()).unwrap_err();
        assert_eq!(err, RingMapError::ContractionHypothesisFails { witness: "y".into() });
    }
}
