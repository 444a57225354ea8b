use std::collections::HashSet;

use proptest::prelude::*;
use summand_lab::poly::{scalar, Monomial, PolyRing, Polynomial, Scalar};
use summand_lab::surface::{ade_classify, local_milnor, singularity_configuration, AdeType, SurfaceError, CUBIC_CONFIGURATIONS};
use summand_lab::torus::{
    determinant, invariant_monomials, monoid_minimal_generators, pfaffian_full, SkewMatrix, TorusAction,
};

fn action() -> impl Strategy<Value = TorusAction> {
    (1usize..=2, 2usize..=4).prop_flat_map(|(rank, n)| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, n), rank).prop_map(move |w| TorusAction::new(w, n).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn invariants_are_closed_under_products(a in action()) {
        let bound = 6;
        let inv = invariant_monomials(&a, bound);
        let set: HashSet<&Monomial> = inv.monomials.iter().collect();
        for p in &inv.monomials {
            prop_assert!(a.is_invariant(p));
            for q in &inv.monomials {
                let pq = p.mul(q);
                if pq.degree() <= bound {
                    prop_assert!(set.contains(&pq), "{:?} * {:?}", p, q);
                }
            }
        }
    }

    #[test]
    fn generators_regenerate_every_invariant(a in action()) {
        let bound = 6;
        let inv = invariant_monomials(&a, bound);
        let gens = monoid_minimal_generators(&a, bound);
        prop_assert!(gens.complete_to_bound);
        // reachable by dynamic programming in increasing degree
        let mut reached: HashSet<Monomial> = HashSet::new();
        let mut by_degree = inv.monomials.clone();
        by_degree.sort_by_key(|m| m.degree());
        for m in by_degree {
            let ok = m.is_one()
                || gens.generators.iter().any(|g| g.quotient_of(&m).is_some_and(|rest| reached.contains(&rest)));
            prop_assert!(ok, "{:?} not generated", m);
            reached.insert(m);
        }
    }

    #[test]
    fn pfaffian_squares_to_determinant(entries in prop::collection::vec(-5i64..=5, 6)) {
        let r = PolyRing::parse_list("x").unwrap();
        let c = |k: usize| r.constant(scalar(entries[k]));
        let m = SkewMatrix::from_upper_rows(&r, vec![vec![c(0), c(1), c(2)], vec![c(3), c(4)], vec![c(5)], vec![]]).unwrap();
        let pf = pfaffian_full(&m).unwrap();
        prop_assert_eq!(&pf * &pf, determinant(&r, &m.restricted(&[0, 1, 2, 3])).unwrap());
    }
}

#[test]
fn generic_pfaffians_square_to_determinants() {
    for size in [2, 4, 6] {
        let m = SkewMatrix::generic(size);
        let pf = pfaffian_full(&m).unwrap();
        let all: Vec<usize> = (0..size).collect();
        assert_eq!(&pf * &pf, determinant(m.ring(), &m.restricted(&all)).unwrap(), "size {size}");
    }
}

fn xyzw() -> PolyRing {
    PolyRing::parse_list("x,y,z,w").unwrap()
}

fn origin() -> Vec<Scalar> {
    vec![scalar(0), scalar(0), scalar(0), scalar(1)]
}

/// Homogenizes a local germ in x, y, z with w.
fn germ(text: &str) -> Polynomial {
    let r = xyzw();
    let f = r.parse(text).unwrap();
    let d = f.total_degree().unwrap();
    Polynomial::from_terms(
        &r,
        f.terms().iter().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e[3] = d - m.degree();
            (Monomial::new(e), c.clone())
        }),
    )
}

#[test]
fn normal_forms_have_matching_milnor_numbers() {
    let mut cases: Vec<(String, AdeType)> = (1..=6).map(|k| (format!("x^2 + y^2 + z^{}", k + 1), AdeType::A(k))).collect();
    for k in 4..=7 {
        cases.push((format!("x^2 + y^2*z + z^{}", k - 1), AdeType::D(k)));
    }
    cases.push(("x^2 + y^3 + z^4".into(), AdeType::E(6)));
    cases.push(("x^2 + y^3 + y*z^3".into(), AdeType::E(7)));
    cases.push(("x^2 + y^3 + z^5".into(), AdeType::E(8)));
    for (text, expected) in cases {
        let f = germ(&text);
        let mu = local_milnor(&f, &origin(), "w").unwrap();
        assert_eq!(Some(mu as u32), expected.milnor(), "{text}");
        assert_eq!(ade_classify(&f, &origin(), "w").unwrap(), expected, "{text}");
    }
}

#[test]
fn milnor_numbers_do_not_depend_on_the_chart() {
    let r = xyzw();
    for text in ["x*y*z + x*y*w + x*z*w + y*z*w", "x^3 - y*z*w", "y^3 + w*(x^2 + y*z)", "w*x*z + y^2*z + x^3 - z^3"] {
        let f = r.parse(text).unwrap();
        let config = singularity_configuration(&f).unwrap();
        for p in &config.points {
            for (i, name) in ["x", "y", "z", "w"].iter().enumerate() {
                if p.point[i] != scalar(0) {
                    assert_eq!(local_milnor(&f, &p.point, name).unwrap(), p.milnor, "{text} at {:?} in chart {name}", p.point);
                }
            }
        }
    }
}

fn cubic() -> impl Strategy<Value = Polynomial> {
    let monos = summand_lab::poly::monomials_of_degree(4, 3);
    prop::collection::vec((0..monos.len(), -2i64..=2), 3..=6).prop_map(move |terms| {
        Polynomial::from_terms(&xyzw(), terms.into_iter().map(|(i, c)| (monos[i].clone(), scalar(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn configurations_are_listed_or_rejected(f in cubic()) {
        prop_assume!(f.total_degree() == Some(3));
        match singularity_configuration(&f) {
            Ok(c) => {
                let listed = c.types.is_empty() || CUBIC_CONFIGURATIONS.iter().any(|(_, t)| {
                    let mut a = t.to_vec();
                    let mut b = c.types.clone();
                    a.sort();
                    b.sort();
                    a == b
                });
                prop_assert!(listed, "{} gave {}", f, c.label);
            }
            Err(SurfaceError::Groebner(e)) => prop_assert!(false, "{}: {}", f, e),
            Err(_) => {}
        }
    }
}
