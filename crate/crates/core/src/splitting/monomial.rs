use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::{Splitting, SplittingError};
use crate::groebner::GroebnerBasis;
use crate::linalg::Lattice;
use crate::poly::{monomials_up_to, Monomial, Polynomial, Scalar};
use crate::ringmap::{is_injective, is_module_finite_graded, kernel, RingMap};

/// Exponent data of a monomial map `x_i -> c_i u^{a_i}`, with a canonical
/// rewriting of semigroup elements.
struct MonomialData {
    exps: Vec<Vec<u32>>,
    coeffs: Vec<Scalar>,
    lattice: Lattice,
    kernel: Arc<GroebnerBasis>,
}

impl MonomialData {
    fn new(map: &RingMap) -> Result<Self, SplittingError> {
        if !map.target().ideal().is_zero_ideal() {
            return Err(SplittingError::NotMonomialMap { image: "target ring is not a polynomial ring".into() });
        }
        let mut exps = Vec::new();
        let mut coeffs = Vec::new();
        for im in map.images() {
            match im.terms() {
                [(m, c)] if !m.is_one() => {
                    exps.push(m.exponents().to_vec());
                    coeffs.push(c.clone());
                }
                _ => return Err(SplittingError::NotMonomialMap { image: im.to_string() }),
            }
        }
        let m = map.target().ambient().arity();
        let gens: Vec<Vec<i64>> = exps.iter().map(|e| e.iter().map(|&x| x as i64).collect()).collect();
        let lattice = Lattice::spanned_by(&gens, m);
        let kernel = kernel(map)?.default_basis()?;
        Ok(MonomialData { exps, coeffs, lattice, kernel })
    }

    /// Lexicographically smallest `k` with `Σ k_i a_i = e`.
    fn factor(&self, e: &[u32]) -> Option<Vec<u32>> {
        let signed: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        if !self.lattice.contains(&signed) {
            return None;
        }
        let mut rem = e.to_vec();
        let mut k = vec![0u32; self.exps.len()];
        let mut dead = HashSet::new();
        search(&self.exps, 0, &mut rem, &mut k, &mut dead).then_some(k)
    }

    /// The source monomial mapping to `u^e` (with its scalar), if `e` is in the semigroup.
    fn rewrite(&self, source: &crate::poly::PolyRing, e: &[u32]) -> Option<Polynomial> {
        let k = self.factor(e)?;
        let mut c = Scalar::one();
        for (ki, ci) in k.iter().zip(&self.coeffs) {
            for _ in 0..*ki {
                c /= ci;
            }
        }
        Some(Polynomial::monomial(source, Monomial::new(k), c))
    }

    fn check_fullness(&self, arity: usize, bound: u32) -> Result<(), SplittingError> {
        for m in monomials_up_to(arity, bound) {
            let signed: Vec<i64> = m.exponents().iter().map(|&x| x as i64).collect();
            if self.lattice.contains(&signed) && self.factor(m.exponents()).is_none() {
                return Err(SplittingError::FullnessFailure { exponent: m.exponents().to_vec() });
            }
        }
        Ok(())
    }
}

fn search(gens: &[Vec<u32>], i: usize, rem: &mut Vec<u32>, k: &mut Vec<u32>, dead: &mut HashSet<(usize, Vec<u32>)>) -> bool {
    if rem.iter().all(|&x| x == 0) {
        return true;
    }
    if i == gens.len() || dead.contains(&(i, rem.clone())) {
        return false;
    }
    let g = &gens[i];
    let max = g.iter().zip(rem.iter()).filter(|(a, _)| **a > 0).map(|(a, r)| r / a).min().unwrap_or(0);
    for t in 0..=max {
        if t > 0 {
            for (r, a) in rem.iter_mut().zip(g) {
                *r -= a;
            }
        }
        k[i] = t;
        if search(gens, i + 1, rem, k, dead) {
            return true;
        }
    }
    for (r, a) in rem.iter_mut().zip(g) {
        *r += a * max;
    }
    k[i] = 0;
    dead.insert((i, rem.clone()));
    false
}

/// Keeps the monomials of the image semigroup, rewritten in source variables,
/// and sends every other monomial to zero.
pub struct SemigroupProjection {
    map: RingMap,
    data: MonomialData,
}

/// Requires the semigroup to be saturated in its lattice up to `bound`.
pub fn make_semigroup_projection(map: &RingMap, bound: u32) -> Result<Arc<SemigroupProjection>, SplittingError> {
    let data = MonomialData::new(map)?;
    data.check_fullness(map.target().ambient().arity(), bound)?;
    Ok(Arc::new(SemigroupProjection { map: map.clone(), data }))
}

impl Splitting for SemigroupProjection {
    fn kind(&self) -> &str {
        "semigroup"
    }

    fn map(&self) -> &RingMap {
        &self.map
    }

    fn apply(&self, f: &Polynomial) -> Result<Polynomial, SplittingError> {
        let source = self.map.source().ambient();
        let mut acc = source.zero();
        for (m, c) in f.terms() {
            if let Some(r) = self.data.rewrite(source, m.exponents()) {
                acc = &acc + &r.scale(c);
            }
        }
        let nf = self.data.kernel.normal_form(&acc)?;
        Ok(self.map.source().reduce(&nf)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceCertificate {
    /// Index of the image lattice, the generic rank of the target over the source.
    pub rank: u64,
    /// One exponent per coset of the image lattice.
    pub coset_representatives: Vec<Vec<i64>>,
    /// Trace of the identity, which must equal `rank`.
    pub trace_of_one: u64,
}

/// `σ = trace / rank`, where the trace of multiplication by `u^e` is computed
/// on the coset monomial basis.
pub struct TraceSplit {
    map: RingMap,
    data: MonomialData,
    certificate: TraceCertificate,
}

impl TraceSplit {
    pub fn certificate(&self) -> &TraceCertificate {
        &self.certificate
    }

    /// Multiplication by `u^e` moves the coset of `r` to the coset of `r + e`;
    /// the diagonal entries that survive are the cosets it fixes.
    fn fixed_cosets(&self, e: &[u32]) -> u64 {
        let signed: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        if self.data.lattice.contains(&signed) {
            self.certificate.coset_representatives.len() as u64
        } else {
            0
        }
    }

    /// Trace of multiplication by `u^e`, before normalization.
    pub fn trace_of_monomial(&self, e: &[u32]) -> Result<Polynomial, SplittingError> {
        let fixed = self.fixed_cosets(e);
        let source = self.map.source().ambient();
        if fixed == 0 {
            return Ok(source.zero());
        }
        let r = self.data.rewrite(source, e).ok_or_else(|| SplittingError::RewritingFailure {
            element: Monomial::new(e.to_vec()).render(self.map.target().ambient()),
        })?;
        Ok(r.scale(&Scalar::from_integer(BigInt::from(fixed))))
    }
}

/// Requires an injective, module-finite monomial map with a saturated semigroup.
pub fn make_trace_split(map: &RingMap, bound: u32) -> Result<Arc<TraceSplit>, SplittingError> {
    let data = MonomialData::new(map)?;
    let m = map.target().ambient().arity();
    if data.lattice.rank() < m {
        return Err(SplittingError::InfiniteBasis(format!("image lattice has rank {} < {m}", data.lattice.rank())));
    }
    if !is_module_finite_graded(map)?.finite {
        return Err(SplittingError::InfiniteBasis("target is not module-finite over the image".into()));
    }
    if !is_injective(map)? {
        return Err(SplittingError::NotInjective);
    }
    data.check_fullness(m, bound)?;
    let index = data.lattice.index().ok_or(SplittingError::RankZero)?;
    let rank = index.to_u64().filter(|r| *r > 0).ok_or(SplittingError::RankZero)?;
    let reps = data
        .lattice
        .coset_representatives()
        .ok_or_else(|| SplittingError::InfiniteBasis("lattice is not of full rank".into()))?;
    let mut split = TraceSplit {
        map: map.clone(),
        data,
        certificate: TraceCertificate { rank, coset_representatives: reps, trace_of_one: 0 },
    };
    split.certificate.trace_of_one = split.fixed_cosets(&vec![0; m]);
    if split.certificate.trace_of_one != rank {
        return Err(SplittingError::InfiniteBasis(format!(
            "coset count {} differs from lattice index {rank}",
            split.certificate.trace_of_one
        )));
    }
    Ok(Arc::new(split))
}

impl Splitting for TraceSplit {
    fn kind(&self) -> &str {
        "trace"
    }

    fn map(&self) -> &RingMap {
        &self.map
    }

    fn apply(&self, f: &Polynomial) -> Result<Polynomial, SplittingError> {
        let source = self.map.source().ambient();
        let inv_rank = Scalar::from_integer(BigInt::from(self.certificate.rank)).recip();
        let mut acc = source.zero();
        for (m, c) in f.terms() {
            let t = self.trace_of_monomial(m.exponents())?;
            if !t.is_zero() {
                acc = &acc + &t.scale(&(c * &inv_rank));
            }
        }
        let nf = self.data.kernel.normal_form(&acc)?;
        if nf.is_zero() {
            return Ok(nf);
        }
        Ok(self.map.source().reduce(&nf)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::PolyRing;
    use crate::ringmap::QuotientRing;
    use crate::splitting::verify_splitting;

    fn build(src_vars: &str, rel: &[&str], tgt_vars: &str, images: &[&str]) -> RingMap {
        let s = PolyRing::parse_list(src_vars).unwrap();
        let src = QuotientRing::new(Ideal::parse(&s, rel).unwrap());
        let tgt = QuotientRing::polynomial(&PolyRing::parse_list(tgt_vars).unwrap());
        let ims = images.iter().map(|t| tgt.ambient().parse(t).unwrap()).collect();
        RingMap::new(src, tgt, ims).unwrap()
    }

    fn veronese() -> RingMap {
        build("x,y,z", &["x*z - y^2"], "u,v", &["u^2", "u*v", "v^2"])
    }

    fn x33() -> RingMap {
        build("x0,x1,x2,x3", &["x0^3 - x1*x2*x3"], "a0,a1,a2", &["a0*a1*a2", "a0^3", "a1^3", "a2^3"])
    }

    #[test]
    fn veronese_semigroup_values() {
        let phi = veronese();
        let s = make_semigroup_projection(&phi, 8).unwrap();
        let t = phi.target().ambient();
        let r = phi.source().ambient();
        assert!(s.apply(&t.parse("u").unwrap()).unwrap().is_zero());
        assert_eq!(s.apply(&t.parse("u^2").unwrap()).unwrap(), r.parse("x").unwrap());
        assert!(s.apply(&t.one()).unwrap().is_one());
        // u^2 v^2 = y^2 = x z; degrevlex puts y^2 above x z, so the normal form is x z
        assert_eq!(s.apply(&t.parse("u^2*v^2").unwrap()).unwrap(), r.parse("x*z").unwrap());
    }

    #[test]
    fn x33_semigroup_values() {
        let phi = x33();
        let s = make_semigroup_projection(&phi, 8).unwrap();
        let t = phi.target().ambient();
        assert_eq!(s.apply(&t.parse("a0*a1*a2").unwrap()).unwrap(), phi.source().ambient().parse("x0").unwrap());
        assert!(s.apply(&t.parse("a0").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn trace_ranks() {
        let tv = make_trace_split(&veronese(), 8).unwrap();
        assert_eq!(tv.certificate().rank, 2);
        assert_eq!(tv.certificate().trace_of_one, 2);
        let t3 = make_trace_split(&x33(), 8).unwrap();
        assert_eq!(t3.certificate().rank, 9);
        assert_eq!(t3.certificate().coset_representatives.len(), 9);
    }

    #[test]
    fn trace_and_semigroup_agree() {
        for phi in [veronese(), x33()] {
            let s = make_semigroup_projection(&phi, 8).unwrap();
            let t = make_trace_split(&phi, 8).unwrap();
            for m in monomials_up_to(phi.target().ambient().arity(), 8) {
                let p = Polynomial::monomial(phi.target().ambient(), m, Scalar::one());
                assert_eq!(s.apply(&p).unwrap(), t.apply(&p).unwrap(), "{p}");
            }
        }
    }

    #[test]
    fn non_saturated_semigroup_is_rejected() {
        // Q[u^2, u^3] ⊂ Q[u]: u lies in the lattice Z but not in the semigroup
        let phi = build("x,y", &["x^3 - y^2"], "u", &["u^2", "u^3"]);
        let err = make_semigroup_projection(&phi, 4).err().unwrap();
        assert_eq!(err, SplittingError::FullnessFailure { exponent: vec![1] });
    }

    #[test]
    fn non_monomial_maps_are_rejected() {
        let phi = build("x", &[], "u", &["u + u^2"]);
        assert!(matches!(make_semigroup_projection(&phi, 4).err().unwrap(), SplittingError::NotMonomialMap { .. }));
    }

    struct DropOne(Arc<SemigroupProjection>, Monomial);

    impl Splitting for DropOne {
        fn kind(&self) -> &str {
            "broken"
        }
        fn map(&self) -> &RingMap {
            self.0.map()
        }
        fn apply(&self, f: &Polynomial) -> Result<Polynomial, SplittingError> {
            let kept = Polynomial::from_terms(f.ring(), f.terms().iter().filter(|(m, _)| *m != self.1).cloned());
            self.0.apply(&kept)
        }
    }

    #[test]
    fn dropping_a_semigroup_element_is_refuted() {
        let phi = veronese();
        let s = make_semigroup_projection(&phi, 8).unwrap();
        let broken = DropOne(s, Monomial::new(vec![2, 2]));
        let report = verify_splitting(&phi, &broken, 8).unwrap();
        assert_eq!(report.verdict, crate::splitting::Verdict::Refuted);
        // hand check: σ(φ(x) * v^2) = σ(u^2 v^2) = 0, but x σ(v^2) = x z
        let hit = report.violations.iter().find(|v| v.variable == "x" && v.monomial.to_string() == "v^2").unwrap();
        assert!(hit.lhs.is_zero());
        assert_eq!(hit.rhs, phi.source().ambient().parse("x*z").unwrap());
    }
}
