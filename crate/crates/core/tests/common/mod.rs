#![allow(dead_code)]

use proptest::prelude::*;
use summand_lab::poly::{scalar, scalar_frac, Monomial, PolyRing, Polynomial};

pub fn ring3() -> PolyRing {
    PolyRing::parse_list("x,y,z").unwrap()
}

/// Up to `max_terms` terms in three variables, exponents below `max_exp`,
/// small rational coefficients.
pub fn poly3(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..max_exp, 3), -4i64..=4, 1i64..=3),
        0..=max_terms,
    )
    .prop_map(|terms| {
        let r = ring3();
        Polynomial::from_terms(&r, terms.into_iter().map(|(e, n, d)| (Monomial::new(e), scalar_frac(n, d))))
    })
}

/// Like [`poly3`] with integer coefficients and at least one nonzero term.
pub fn nonzero_poly3(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..max_exp, 3), 1i64..=3, any::<bool>()), 1..=max_terms)
        .prop_map(|terms| {
            let r = ring3();
            Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(e, c, neg)| (Monomial::new(e), scalar(if neg { -c } else { c }))),
            )
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}
