use std::sync::Arc;

use proptest::prelude::*;
use summand_lab::catalog::{segre, veronese2, xnd};
use summand_lab::graded::{veronese_presentation, MultiGrading};
use summand_lab::poly::{monomials_up_to, scalar, Monomial, PolyRing, Polynomial};
use summand_lab::ringmap::{QuotientRing, RingMap};
use summand_lab::splitting::{
    compose_splittings, make_semigroup_projection, make_trace_split, make_weight_projection, verify_splitting, Splitting,
    SplittingSpec, Verdict,
};
use summand_lab::torus::{monoid_minimal_generators, TorusAction};

#[test]
fn every_constructed_splitting_fixes_one() {
    let maps = [veronese2().unwrap(), segre().unwrap(), xnd(3, 2).unwrap(), xnd(3, 3).unwrap()];
    for map in &maps {
        let one = map.target().ambient().one();
        let s = make_semigroup_projection(map, 6).unwrap();
        assert!(s.apply(&one).unwrap().is_one(), "semigroup on {:?}", map.images());
    }
    // the Segre inclusion is not module-finite, so it has no trace splitting
    for map in [&maps[0], &maps[2], &maps[3]] {
        let t = make_trace_split(map, 6).unwrap();
        assert!(t.apply(&map.target().ambient().one()).unwrap().is_one(), "trace on {:?}", map.images());
    }
}

#[test]
fn semigroup_projection_passes_below_its_fullness_bound() {
    let map = segre().unwrap();
    let s = make_semigroup_projection(&map, 6).unwrap();
    for bound in 0..=6 {
        assert_eq!(verify_splitting(&map, s.as_ref(), bound).unwrap().verdict, Verdict::VerifiedToBound, "bound {bound}");
    }
}

#[test]
fn trace_agrees_with_semigroup_projection() {
    for map in [veronese2().unwrap(), xnd(3, 3).unwrap()] {
        let s = make_semigroup_projection(&map, 8).unwrap();
        let t = make_trace_split(&map, 8).unwrap();
        let target = map.target().ambient();
        for m in monomials_up_to(target.arity(), 8) {
            let f = Polynomial::monomial(target, m, scalar(1));
            assert_eq!(s.apply(&f).unwrap(), t.apply(&f).unwrap(), "at {f}");
        }
    }
}

fn target_poly(ring: PolyRing) -> impl Strategy<Value = Polynomial> {
    let n = ring.arity();
    prop::collection::vec((prop::collection::vec(0u32..=4, n), -3i64..=3), 0..=4).prop_map(move |terms| {
        Polynomial::from_terms(&ring, terms.into_iter().map(|(e, c)| (Monomial::new(e), scalar(c))))
    })
}

fn two_stage() -> (SplittingSpec, SplittingSpec, SplittingSpec) {
    let (_, inner_map) = veronese_presentation(2, &[1, 1], 2).unwrap();
    let mid = inner_map.target().clone();
    let last = PolyRing::parse_list("s,t").unwrap();
    let outer_map = RingMap::new(mid, QuotientRing::polynomial(&last), vec![last.parse("s^2").unwrap(), last.parse("t^2").unwrap()])
        .unwrap();
    let inner: SplittingSpec = make_semigroup_projection(&inner_map, 8).unwrap();
    let outer: SplittingSpec = make_semigroup_projection(&outer_map, 8).unwrap();
    let both = compose_splittings(Arc::clone(&inner), Arc::clone(&outer)).unwrap();
    (inner, outer, both)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn composite_evaluates_inner_after_outer(f in target_poly(PolyRing::parse_list("s,t").unwrap())) {
        let (inner, outer, both) = two_stage();
        prop_assert_eq!(both.apply(&f).unwrap(), inner.apply(&outer.apply(&f).unwrap()).unwrap());
    }
}

fn uvw() -> PolyRing {
    PolyRing::parse_list("u,v,w").unwrap()
}

/// Weight projection for the invariants of `rows` on Q[u,v,w].
fn weight_split(rows: Vec<Vec<i64>>) -> Option<SplittingSpec> {
    let action = TorusAction::new(rows.clone(), 3).unwrap();
    let gens = monoid_minimal_generators(&action, 4).generators;
    if gens.is_empty() {
        return None;
    }
    let r = uvw();
    let gens: Vec<Polynomial> = gens.into_iter().map(|m| Polynomial::monomial(&r, m, scalar(1))).collect();
    Some(make_weight_projection(&QuotientRing::polynomial(&r), MultiGrading::new(rows, 3).unwrap(), &gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn scaling_weight_rows_changes_nothing(
        row in prop::collection::vec(-2i64..=2, 3),
        factor in prop_oneof![-3i64..=-1, 1i64..=3],
        f in target_poly(uvw()),
    ) {
        let base = weight_split(vec![row.clone()]);
        prop_assume!(base.is_some());
        let scaled = weight_split(vec![row.iter().map(|w| w * factor).collect()]).unwrap();
        let base = base.unwrap();
        let show = |s: &SplittingSpec| s.apply(&f).map(|p| p.to_string()).map_err(|e| e.to_string());
        prop_assert_eq!(show(&base), show(&scaled));
    }
}
