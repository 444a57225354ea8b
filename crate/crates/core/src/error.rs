//! One error type for callers that mix modules, with stable machine-readable codes.

use thiserror::Error;

use crate::catalog::CatalogError;
use crate::graded::GradedError;
use crate::groebner::GroebnerError;
use crate::poly::PolyError;
use crate::ringmap::RingMapError;
use crate::splitting::SplittingError;
use crate::surface::SurfaceError;
use crate::torus::TorusError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    RingMap(#[from] RingMapError),
    #[error(transparent)]
    Splitting(#[from] SplittingError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}")]
    Input(String),
}

impl Error {
    /// Snake-case identifier of the innermost cause.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Poly(e) => poly_code(e),
            Error::Groebner(e) => groebner_code(e),
            Error::Graded(e) => graded_code(e),
            Error::RingMap(e) => ringmap_code(e),
            Error::Splitting(e) => splitting_code(e),
            Error::Torus(e) => match e {
                TorusError::BadIndex { .. } => "bad_index",
                TorusError::Shape(_) => "bad_shape",
                TorusError::Graded(g) => graded_code(g),
                TorusError::Poly(p) => poly_code(p),
            },
            Error::Surface(e) => surface_code(e),
            Error::Catalog(e) => match e {
                CatalogError::UnknownKey { .. } => "unknown_example",
                CatalogError::BadParams { .. } => "bad_params",
                CatalogError::NotQuadratic => "not_quadratic",
                CatalogError::Poly(p) => poly_code(p),
                CatalogError::Groebner(g) => groebner_code(g),
                CatalogError::RingMap(r) => ringmap_code(r),
                CatalogError::Torus(_) => "bad_shape",
                CatalogError::Graded(g) => graded_code(g),
            },
            Error::Input(_) => "malformed_input",
        }
    }
}

fn poly_code(e: &PolyError) -> &'static str {
    match e {
        PolyError::Syntax { .. } => "syntax_error",
        PolyError::UnknownVariable { .. } => "unknown_variable",
        PolyError::RingMismatch { .. } => "ring_mismatch",
        PolyError::ArityMismatch { .. } => "arity_mismatch",
        PolyError::InvalidRing(_) => "invalid_ring",
        PolyError::PointNotOnChart { .. } => "point_not_on_chart",
        PolyError::NotHomogeneous => "not_homogeneous",
    }
}

fn groebner_code(e: &GroebnerError) -> &'static str {
    match e {
        GroebnerError::BudgetExceeded { .. } => "budget_exceeded",
        GroebnerError::NotZeroDimensional { .. } => "not_zero_dimensional",
        GroebnerError::Poly(p) => poly_code(p),
    }
}

fn graded_code(e: &GradedError) -> &'static str {
    match e {
        GradedError::ArityMismatch { .. } | GradedError::RankMismatch { .. } => "grading_shape",
        GradedError::NotHomogeneous { .. } => "not_homogeneous",
        GradedError::NonPositiveWeights(_) => "non_positive_weights",
        GradedError::Groebner(g) => groebner_code(g),
        GradedError::Poly(p) => poly_code(p),
        GradedError::RingMap(_) => "ring_map",
    }
}

fn ringmap_code(e: &RingMapError) -> &'static str {
    match e {
        RingMapError::ImageCount { .. } => "image_count",
        RingMapError::NotWellDefined { .. } => "not_well_defined",
        RingMapError::NotPositivelyGraded(_) => "not_positively_graded",
        RingMapError::ContractionHypothesisFails { .. } => "contraction_hypothesis_fails",
        RingMapError::Groebner(g) => groebner_code(g),
        RingMapError::Poly(p) => poly_code(p),
        RingMapError::Graded(_) => "grading",
    }
}

fn splitting_code(e: &SplittingError) -> &'static str {
    match e {
        SplittingError::NotMonomialMap { .. } => "not_monomial_map",
        SplittingError::FullnessFailure { .. } => "fullness_failure",
        SplittingError::GeneratorNotInvariant { .. } => "generator_not_invariant",
        SplittingError::RewritingFailure { .. } => "rewriting_failure",
        SplittingError::NotInImage { .. } => "not_in_image",
        SplittingError::InfiniteBasis(_) => "infinite_basis",
        SplittingError::RankZero => "rank_zero",
        SplittingError::NotInjective => "not_injective",
        SplittingError::CompositionMismatch(_) => "composition_mismatch",
        SplittingError::ContractionHypothesisFails { .. } => "contraction_hypothesis_fails",
        SplittingError::DescentInconsistent { .. } => "descent_inconsistent",
        SplittingError::MissingAction(_) => "missing_action",
        SplittingError::UnknownStrategy { .. } => "unknown_strategy",
        SplittingError::MapMismatch => "map_mismatch",
        SplittingError::RingMap(r) => ringmap_code(r),
        SplittingError::Groebner(g) => groebner_code(g),
        SplittingError::Poly(p) => poly_code(p),
        SplittingError::Graded(g) => graded_code(g),
    }
}

fn surface_code(e: &SurfaceError) -> &'static str {
    match e {
        SurfaceError::NotASurface(_) => "not_a_surface",
        SurfaceError::NotHomogeneous => "not_homogeneous",
        SurfaceError::NonIsolated { .. } => "non_isolated",
        SurfaceError::NonRationalPoints => "non_rational_points",
        SurfaceError::JacobianNotZeroDimensional { .. } => "jacobian_not_zero_dimensional",
        SurfaceError::PointNotSingular { .. } => "point_not_singular",
        SurfaceError::NotDuVal { .. } => "not_du_val",
        SurfaceError::NotACubic { .. } => "not_a_cubic",
        SurfaceError::Reducible { .. } => "reducible",
        SurfaceError::UnlistedConfiguration { .. } => "unlisted_configuration",
        SurfaceError::Groebner(g) => groebner_code(g),
        SurfaceError::Poly(p) => poly_code(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_codes() {
        let budget = GroebnerError::BudgetExceeded { what: "S-pair", limit: 3 };
        assert_eq!(Error::from(SplittingError::RingMap(RingMapError::Groebner(budget.clone()))).code(), "budget_exceeded");
        assert_eq!(Error::from(SurfaceError::Groebner(budget)).code(), "budget_exceeded");
        assert_eq!(Error::Input("x".into()).code(), "malformed_input");
    }
}
