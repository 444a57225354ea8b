//! Reduced Gröbner bases by Buchberger's algorithm, and the ideal-theoretic
//! operations built on them.
//!
//! The engine uses the Gebauer–Möller pair update, which implements both the
//! coprime-leading-monomial criterion and the chain criterion. Pairs are
//! selected by sugar degree under degrevlex and by smallest lcm otherwise.
//! For other orders a degrevlex basis is computed first, and zero-dimensional
//! ideals are converted to the target order by linear algebra on normal forms.
//! Results are cached per process, keyed by the ring, the order and the
//! normalized generator list.

mod buchberger;
mod fglm;
mod ops;
mod order;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;
use thiserror::Error;

pub use ops::{
    colon_ideal, eliminate, eliminate_named, intersect, local_length, rational_points_zero_dim, saturate, standard_monomials,
    zero_dim_vector_dimension, RationalPoint, RationalPoints,
};
pub use order::MonomialOrder;

use crate::poly::{Monomial, PolyError, PolyRing, Polynomial, Scalar};

pub(crate) type Term = (Monomial, Scalar);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("Gröbner budget exceeded: {what} limit {limit}")]
    BudgetExceeded { what: &'static str, limit: usize },
    #[error("ideal is not zero-dimensional: no pure power of `{variable}` among leading monomials")]
    NotZeroDimensional { variable: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Resource caps for a single Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Budget {
    pub max_spairs: usize,
    pub max_terms: usize,
}

pub const BUDGET_ENV: &str = "SUMMANDLAB_GB_BUDGET";

impl Default for Budget {
    fn default() -> Self {
        Budget { max_spairs: 200_000, max_terms: 500_000 }
    }
}

impl Budget {
    /// Default budget, with the S-pair cap overridden by `SUMMANDLAB_GB_BUDGET`.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(cap) = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            b.max_spairs = cap;
        }
        b
    }
}

/// A finite generating set in a fixed ring. Zero generators are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &PolyRing, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        for g in &generators {
            ring.check_same(g.ring())?;
        }
        Ok(Ideal { ring: ring.clone(), generators: generators.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    /// Parses each generator with the ring's variable names.
    pub fn parse(ring: &PolyRing, generators: &[&str]) -> Result<Self, PolyError> {
        let gens = generators.iter().map(|t| ring.parse(t)).collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new() }
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Ideal { ring: ring.clone(), generators: vec![ring.one()] }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        self.ring.check_same(&other.ring)?;
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal, PolyError> {
        let mut g = self.generators.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        reduced_groebner(self, order)
    }

    /// Reduced basis under degrevlex, the default for membership questions.
    pub fn default_basis(&self) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        reduced_groebner(self, &MonomialOrder::DegRevLex)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, GroebnerError> {
        contains(p, self)
    }

    pub fn is_unit(&self) -> Result<bool, GroebnerError> {
        Ok(self.default_basis()?.is_unit())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        let gb = self.default_basis()?;
        for g in &other.generators {
            if !gb.normal_form(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality, by comparing reduced degrevlex bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        self.ring.check_same(&other.ring)?;
        Ok(self.default_basis()?.basis() == other.default_basis()?.basis())
    }

    pub fn display_generators(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

/// A reduced Gröbner basis: monic, with no term of any element divisible by
/// another element's leading monomial. Elements are sorted descending by
/// leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ideal: Ideal,
    order: MonomialOrder,
    elements: Vec<Vec<Term>>,
    polys: Vec<Polynomial>,
    spairs: usize,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ideal.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Number of S-pairs reduced while computing the basis.
    pub fn spairs_reduced(&self) -> usize {
        self.spairs
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements.iter().map(|e| &e[0].0).collect()
    }

    /// Leading term of each element under the basis order.
    pub fn leading_terms(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| Polynomial::monomial(self.ring(), e[0].0.clone(), e[0].1.clone())).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].len() == 1 && self.elements[0][0].0.is_one()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, GroebnerError> {
        self.ring().check_same(p.ring())?;
        if self.elements.is_empty() || p.is_zero() {
            return Ok(p.clone());
        }
        let terms = order::sort_terms(p.terms().to_vec(), &self.order);
        let refs: Vec<&[Term]> = self.elements.iter().map(|e| e.as_slice()).collect();
        let rem = buchberger::reduce(terms, &refs, &self.order, true, usize::MAX)?;
        Ok(Polynomial::from_terms(self.ring(), rem))
    }

    /// The leading monomial of `p` under this basis's order.
    pub fn leading_monomial_of(&self, p: &Polynomial) -> Option<Monomial> {
        p.terms().iter().map(|(m, _)| m).max_by(|a, b| self.order.cmp(a, b)).cloned()
    }

    /// The S-polynomial of elements `i` and `j`, for certificate checks.
    pub fn s_polynomial(&self, i: usize, j: usize) -> Polynomial {
        let s = buchberger::s_polynomial(&self.elements[i], &self.elements[j], &self.order);
        Polynomial::from_terms(self.ring(), s)
    }
}

type CacheKey = (PolyRing, MonomialOrder, Vec<Polynomial>);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<GroebnerBasis>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<GroebnerBasis>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cache_key(ideal: &Ideal, order: &MonomialOrder) -> CacheKey {
    let mut gens: Vec<Polynomial> = ideal.generators.iter().map(|g| g.monic()).collect();
    gens.sort_by_key(|g| g.to_string());
    gens.dedup();
    (ideal.ring.clone(), order.clone(), gens)
}

/// Reduced Gröbner basis with the environment budget.
pub fn reduced_groebner(ideal: &Ideal, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
    reduced_groebner_with_budget(ideal, order, Budget::from_env())
}

pub fn reduced_groebner_with_budget(
    ideal: &Ideal,
    order: &MonomialOrder,
    budget: Budget,
) -> Result<Arc<GroebnerBasis>, GroebnerError> {
    order.validate(ideal.ring.arity())?;
    let key = cache_key(ideal, order);
    if let Some(hit) = cache().read().expect("basis cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let (elements, spairs) = match converted(ideal, order, budget)? {
        Some(found) => found,
        None => {
            let inputs: Vec<Vec<Term>> = key.2.iter().map(|g| order::sort_terms(g.terms().to_vec(), order)).collect();
            let result = buchberger::buchberger(inputs, order, budget)?;
            (result.basis, result.spairs)
        }
    };
    let polys = elements.iter().map(|e| Polynomial::from_terms(&ideal.ring, e.clone())).collect();
    let gb = Arc::new(GroebnerBasis { ideal: ideal.clone(), order: order.clone(), elements, polys, spairs });
    cache().write().expect("basis cache poisoned").insert(key, Arc::clone(&gb));
    Ok(gb)
}

/// Basis elements and the S-pair count of the degrevlex run.
type Converted = (Vec<Vec<Term>>, usize);

/// The basis under `order` by conversion from degrevlex, when the ideal is
/// zero-dimensional with a small enough quotient.
fn converted(ideal: &Ideal, order: &MonomialOrder, budget: Budget) -> Result<Option<Converted>, GroebnerError> {
    if matches!(order, MonomialOrder::DegRevLex) || ideal.is_zero_ideal() {
        return Ok(None);
    }
    let start = match reduced_groebner_with_budget(ideal, &MonomialOrder::DegRevLex, budget) {
        Ok(gb) => gb,
        Err(GroebnerError::BudgetExceeded { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    if !fglm::is_zero_dimensional(&start) {
        return Ok(None);
    }
    Ok(fglm::convert(&start, order)?.map(|basis| (basis, start.spairs)))
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, GroebnerError> {
    gb.normal_form(p)
}

/// Ideal membership via the reduced degrevlex basis.
pub fn contains(p: &Polynomial, ideal: &Ideal) -> Result<bool, GroebnerError> {
    ideal.ring.check_same(p.ring())?;
    if p.is_zero() {
        return Ok(true);
    }
    Ok(ideal.default_basis()?.normal_form(p)?.is_zero())
}


#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ring(s: &str) -> PolyRing {
        PolyRing::parse_list(s).unwrap()
    }

    // Every S-polynomial of the basis reduces to zero, and the basis is reduced.
    fn assert_certificate(gb: &GroebnerBasis) {
        let n = gb.basis().len();
        for i in 0..n {
            for j in i + 1..n {
                let s = gb.s_polynomial(i, j);
                assert!(gb.normal_form(&s).unwrap().is_zero(), "S({i},{j}) does not reduce to zero");
            }
        }
        let lms = gb.leading_monomials();
        for (i, e) in gb.basis().iter().enumerate() {
            assert_eq!(gb.leading_terms()[i].terms()[0].1, Scalar::one());
            for (m, _) in e.terms() {
                for (j, lm) in lms.iter().enumerate() {
                    if i != j {
                        assert!(!lm.divides(m), "term {m:?} of element {i} divisible by lm {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = ring("x,y");
        let gb = Ideal::zero(&r).default_basis().unwrap();
        assert!(gb.basis().is_empty());
        assert_eq!(gb.normal_form(&r.var(0)).unwrap(), r.var(0));
    }

    #[test]
    fn monomial_ideal_already_reduced() {
        let r = ring("x,y");
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let gb = i.groebner(&MonomialOrder::Lex).unwrap();
        // hand run: S(x^2, xy) = y*x^2 - x*xy = 0, nothing is added
        let expect = vec![r.parse("x^2").unwrap(), r.parse("x*y").unwrap()];
        assert_eq!(gb.basis(), expect.as_slice());
        assert_certificate(&gb);
    }

    #[test]
    fn veronese_elimination_contains_conic() {
        let r = ring("u,v,x,y,z");
        let i = Ideal::parse(&r, &["x - u^2", "y - u*v", "z - v^2"]).unwrap();
        let gb = i.groebner(&MonomialOrder::BlockElimination { first_block: 2 }).unwrap();
        assert_certificate(&gb);
        let conic = r.parse("x*z - y^2").unwrap();
        assert!(gb.basis().iter().any(|g| g == &conic || g == &-&conic));
        // the degrevlex basis of the same ideal also contains it as a member
        assert!(i.contains(&conic).unwrap());
    }

    #[test]
    fn membership_examples() {
        let r = ring("x,y");
        assert!(!Ideal::parse(&r, &["x^2"]).unwrap().contains(&r.var(0)).unwrap());
        let i = Ideal::parse(&r, &["x", "y^2 - x"]).unwrap();
        assert!(i.contains(&r.parse("y^2").unwrap()).unwrap());
        assert!(Ideal::zero(&r).contains(&r.zero()).unwrap());
    }

    #[test]
    fn normal_form_of_one_in_proper_ideal() {
        let r = ring("x,y,z");
        let i = Ideal::parse(&r, &["x*z - y^2", "x^3 - y*z"]).unwrap();
        let gb = i.default_basis().unwrap();
        // the ideal vanishes at the origin, so 1 is not a member
        assert!(i.generators().iter().all(|g| g.constant_term() == Scalar::from_integer(0.into())));
        assert!(gb.normal_form(&r.one()).unwrap().is_one());
        for g in i.generators() {
            assert!(gb.normal_form(g).unwrap().is_zero());
        }
        assert_certificate(&gb);
    }

    #[test]
    fn normal_form_depends_on_order() {
        let r = ring("x,y,z");
        let i = Ideal::parse(&r, &["x*z - y^2"]).unwrap();
        let p = r.parse("x^2*z").unwrap();
        // degrevlex: lm is y^2, which does not divide x^2 z
        let nf = i.groebner(&MonomialOrder::DegRevLex).unwrap().normal_form(&p).unwrap();
        assert_eq!(nf, p);
        // lex x > y > z: lm is xz, and x^2 z -> x y^2
        let nf = i.groebner(&MonomialOrder::Lex).unwrap().normal_form(&p).unwrap();
        assert_eq!(nf, r.parse("x*y^2").unwrap());
    }

    #[test]
    fn cyclic_three_certificate() {
        let r = ring("x,y,z");
        let i = Ideal::parse(&r, &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]).unwrap();
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let gb = i.groebner(&order).unwrap();
            assert_certificate(&gb);
        }
        let lex = i.groebner(&MonomialOrder::Lex).unwrap();
        assert!(lex.basis().contains(&r.parse("z^3 - 1").unwrap()));
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring("x,y,z");
        let i = Ideal::parse(&r, &["x^3 - y*z^2 + 1", "y^3 - x*z + 2", "z^3 - x*y^2 + 3"]).unwrap();
        let tiny = Budget { max_spairs: 1, max_terms: 1_000 };
        let err = reduced_groebner_with_budget(&i, &MonomialOrder::Lex, tiny).unwrap_err();
        assert!(matches!(err, GroebnerError::BudgetExceeded { what: "S-pair", limit: 1 }));
    }
}
