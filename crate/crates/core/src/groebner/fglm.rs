//! Basis conversion for zero-dimensional ideals: walk monomials upward in the
//! target order and detect linear dependencies among their normal forms.

use std::collections::{BTreeMap, HashSet};
use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::{sort_terms, MonomialOrder};
use super::{GroebnerBasis, GroebnerError, Term};
use crate::poly::{Monomial, Polynomial, Scalar};

/// Quotients larger than this are left to Buchberger.
pub(crate) const MAX_QUOTIENT_DIMENSION: usize = 4000;

type Vector = BTreeMap<Monomial, Scalar>;

struct Row {
    pivot: Monomial,
    vector: Vector,
    /// `vector = Σ combo[k] · NF(staircase[k])`.
    combo: Vec<Scalar>,
}

/// `true` when every variable has a pure power among the leading monomials.
pub(crate) fn is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    let n = gb.ring().arity();
    gb.is_unit() || (0..n).all(|i| {
        gb.leading_monomials().iter().any(|m| m.exponents().iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)))
    })
}

fn to_vector(p: &Polynomial) -> Vector {
    p.terms().iter().cloned().collect()
}

fn axpy(target: &mut Vector, c: &Scalar, x: &Vector) {
    for (m, v) in x {
        let e = target.entry(m.clone()).or_insert_with(Scalar::zero);
        *e -= c * v;
        if e.is_zero() {
            target.remove(m);
        }
    }
}

/// Reduced basis of the ideal of `source` under `target`, or `None` when the
/// quotient is too large.
pub(crate) fn convert(source: &GroebnerBasis, target: &MonomialOrder) -> Result<Option<Vec<Vec<Term>>>, GroebnerError> {
    let ring = source.ring();
    let n = ring.arity();
    if source.is_unit() {
        return Ok(Some(vec![vec![(Monomial::one(n), Scalar::one())]]));
    }
    let mut staircase: Vec<(Monomial, Polynomial)> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut basis: Vec<Vec<Term>> = Vec::new();
    let mut seen: HashSet<Monomial> = HashSet::new();
    // candidates with the normal form of a known factorization
    let mut queue: Vec<(Monomial, Polynomial)> = vec![(Monomial::one(n), source.normal_form(&ring.one())?)];
    seen.insert(Monomial::one(n));
    while !queue.is_empty() {
        let mut best = 0;
        for k in 1..queue.len() {
            if target.cmp(&queue[k].0, &queue[best].0) == Ordering::Less {
                best = k;
            }
        }
        let (m, nf) = queue.swap_remove(best);
        if leads.iter().any(|l| l.divides(&m)) {
            continue;
        }
        let mut w = to_vector(&nf);
        let mut combo = vec![Scalar::zero(); staircase.len()];
        for r in &rows {
            if let Some(c) = w.get(&r.pivot).cloned() {
                axpy(&mut w, &c, &r.vector);
                for (k, a) in r.combo.iter().enumerate() {
                    combo[k] += &c * a;
                }
            }
        }
        if w.is_empty() {
            // NF(m) = Σ combo[k] NF(b_k)
            let mut terms: Vec<Term> = vec![(m.clone(), Scalar::one())];
            for (k, c) in combo.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((staircase[k].0.clone(), -c.clone()));
                }
            }
            basis.push(sort_terms(terms, target));
            leads.push(m);
            continue;
        }
        if staircase.len() >= MAX_QUOTIENT_DIMENSION {
            return Ok(None);
        }
        let pivot = w.keys().next().expect("nonzero vector").clone();
        let inv = w[&pivot].recip();
        for v in w.values_mut() {
            *v *= &inv;
        }
        let mut row_combo: Vec<Scalar> = combo.iter().map(|c| -c * &inv).collect();
        row_combo.push(inv.clone());
        for r in rows.iter_mut() {
            r.combo.push(Scalar::zero());
        }
        rows.push(Row { pivot, vector: w, combo: row_combo });
        for i in 0..n {
            let mut e = m.exponents().to_vec();
            e[i] += 1;
            let next = Monomial::new(e);
            if seen.insert(next.clone()) {
                let shifted = &ring.var(i) * &nf;
                queue.push((next, source.normal_form(&shifted)?));
            }
        }
        staircase.push((m, nf));
    }
    basis.sort_by(|a, b| target.cmp(&b[0].0, &a[0].0));
    Ok(Some(basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, reduced_groebner_with_budget, Budget, Ideal};
    use crate::poly::PolyRing;

    fn direct(ideal: &Ideal, order: &MonomialOrder) -> Vec<Vec<Term>> {
        let inputs = ideal.generators().iter().map(|g| sort_terms(g.monic().terms().to_vec(), order)).collect();
        buchberger::buchberger(inputs, order, Budget::default()).unwrap().basis
    }

    #[test]
    fn conversion_matches_direct_buchberger() {
        let r = PolyRing::parse_list("x,y,z").unwrap();
        let cases: [&[&str]; 4] = [
            &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"],
            &["x^2 + y^2 + z^2 - 1", "x - y", "z^2 - x*y"],
            &["x^3 - y", "y^2 - z", "z^3 - x*z"],
            &["x^2 - 1", "x*y", "y^2 - y", "z^2 - x*z"],
        ];
        for gens in cases {
            let i = Ideal::parse(&r, gens).unwrap();
            let start = reduced_groebner_with_budget(&i, &MonomialOrder::DegRevLex, Budget::default()).unwrap();
            assert!(is_zero_dimensional(&start), "{gens:?}");
            for order in [MonomialOrder::Lex, MonomialOrder::BlockElimination { first_block: 1 }] {
                let got = convert(&start, &order).unwrap().unwrap();
                assert_eq!(got, direct(&i, &order), "{gens:?} under {order:?}");
            }
        }
    }

    #[test]
    fn positive_dimensional_is_detected() {
        let r = PolyRing::parse_list("x,y").unwrap();
        let i = Ideal::parse(&r, &["x*y - 1"]).unwrap();
        let gb = reduced_groebner_with_budget(&i, &MonomialOrder::DegRevLex, Budget::default()).unwrap();
        assert!(!is_zero_dimensional(&gb));
    }
}
