//! Integer multigradings: homogeneity, grading discovery, dimensions of graded
//! pieces, and Veronese presentations.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::groebner::{GroebnerError, Ideal};
use crate::linalg;
use crate::poly::{Monomial, PolyError, PolyRing, Polynomial, Scalar};
use crate::ringmap::{QuotientRing, RingMap, RingMapError};

pub const DEFAULT_PIECE_BOUND: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("grading has {got} columns but the ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("degree vector has length {got}, grading rank is {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("not homogeneous: {first} has degree {first_degree:?} but {second} has degree {second_degree:?}")]
    NotHomogeneous { first: String, first_degree: Vec<i64>, second: String, second_degree: Vec<i64> },
    #[error("variable weights must be positive, got {0:?}")]
    NonPositiveWeights(Vec<i64>),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0}")]
    RingMap(String),
}

impl From<RingMapError> for GradedError {
    fn from(e: RingMapError) -> Self {
        GradedError::RingMap(e.to_string())
    }
}

/// An `r × n` integer weight matrix; column `j` is the degree of variable `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiGrading {
    weights: Vec<Vec<i64>>,
    arity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn zero(rank: usize) -> Self {
        DegreeVector(vec![0; rank])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl MultiGrading {
    pub fn new(weights: Vec<Vec<i64>>, arity: usize) -> Result<Self, GradedError> {
        if let Some(row) = weights.iter().find(|r| r.len() != arity) {
            return Err(GradedError::ArityMismatch { expected: arity, got: row.len() });
        }
        Ok(MultiGrading { weights, arity })
    }

    /// Total degree.
    pub fn standard(arity: usize) -> Self {
        MultiGrading { weights: vec![vec![1; arity]], arity }
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// Weight vector of variable `j`.
    pub fn column(&self, j: usize) -> Vec<i64> {
        self.weights.iter().map(|r| r[j]).collect()
    }

    pub fn degree_of(&self, m: &Monomial) -> DegreeVector {
        DegreeVector(
            self.weights
                .iter()
                .map(|row| row.iter().zip(m.exponents()).map(|(w, &e)| w * e as i64).sum())
                .collect(),
        )
    }

    /// Appends one variable with the given column and, optionally, a new row
    /// that is 1 on that variable and 0 elsewhere.
    pub fn extend(&self, column: &[i64], counting_row: bool) -> Result<MultiGrading, GradedError> {
        if column.len() != self.rank() {
            return Err(GradedError::RankMismatch { expected: self.rank(), got: column.len() });
        }
        let mut weights: Vec<Vec<i64>> =
            self.weights.iter().zip(column).map(|(r, &c)| r.iter().copied().chain([c]).collect()).collect();
        if counting_row {
            let mut row = vec![0; self.arity];
            row.push(1);
            weights.push(row);
        }
        Ok(MultiGrading { weights, arity: self.arity + 1 })
    }

    /// True if some nonnegative combination of rows is positive on every variable;
    /// checked on the rows themselves and on their sum.
    pub fn is_positive(&self) -> bool {
        if self.arity == 0 {
            return true;
        }
        let sum: Vec<i64> = (0..self.arity).map(|j| self.weights.iter().map(|r| r[j]).sum()).collect();
        self.weights.iter().chain(std::iter::once(&sum)).any(|r| r.iter().all(|&w| w > 0))
    }
}

/// The common degree of all terms; the zero polynomial gets the zero vector.
pub fn homogeneous_degree(p: &Polynomial, w: &MultiGrading) -> Result<DegreeVector, GradedError> {
    if p.ring().arity() != w.arity() {
        return Err(GradedError::ArityMismatch { expected: p.ring().arity(), got: w.arity() });
    }
    let mut terms = p.terms().iter();
    let Some((m0, _)) = terms.next() else {
        return Ok(DegreeVector::zero(w.rank()));
    };
    let d0 = w.degree_of(m0);
    for (m, _) in terms {
        let d = w.degree_of(m);
        if d != d0 {
            return Err(GradedError::NotHomogeneous {
                first: m0.render(p.ring()),
                first_degree: d0.0,
                second: m.render(p.ring()),
                second_degree: d.0,
            });
        }
    }
    Ok(d0)
}

/// Checks that every generator is homogeneous.
pub fn check_homogeneous(ideal: &Ideal, w: &MultiGrading) -> Result<Vec<DegreeVector>, GradedError> {
    ideal.generators().iter().map(|g| homogeneous_degree(g, w)).collect()
}

/// A basis, in Hermite form, of all weight rows making every generator
/// homogeneous, truncated to `max_rank` rows.
pub fn discover_grading(ideal: &Ideal, max_rank: usize) -> MultiGrading {
    let n = ideal.ring().arity();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in ideal.generators() {
        let mut terms = g.terms().iter();
        if let Some((m0, _)) = terms.next() {
            for (m, _) in terms {
                rows.push(
                    m.exponents().iter().zip(m0.exponents()).map(|(&a, &b)| BigInt::from(a as i64 - b as i64)).collect(),
                );
            }
        }
    }
    let kernel = linalg::integer_kernel(&rows, n);
    let weights = kernel
        .into_iter()
        .take(max_rank)
        .map(|r| r.iter().map(|x| x.to_i64().expect("weight fits in i64")).collect())
        .collect();
    MultiGrading { weights, arity: n }
}

/// Number of standard monomials of degree exactly `d` and total degree at most
/// `degree_bound`, with respect to the reduced degrevlex basis.
pub fn graded_piece_dimension(
    q: &QuotientRing,
    w: &MultiGrading,
    d: &DegreeVector,
    degree_bound: u32,
) -> Result<usize, GradedError> {
    Ok(graded_piece_basis(q, w, d, degree_bound)?.len())
}

/// The standard monomials counted by [`graded_piece_dimension`].
pub fn graded_piece_basis(
    q: &QuotientRing,
    w: &MultiGrading,
    d: &DegreeVector,
    degree_bound: u32,
) -> Result<Vec<Monomial>, GradedError> {
    let n = q.ambient().arity();
    if w.arity() != n {
        return Err(GradedError::ArityMismatch { expected: n, got: w.arity() });
    }
    if d.0.len() != w.rank() {
        return Err(GradedError::RankMismatch { expected: w.rank(), got: d.0.len() });
    }
    check_homogeneous(q.ideal(), w)?;
    let gb = q.ideal().default_basis()?;
    let lms: Vec<Monomial> = gb.leading_monomials().into_iter().cloned().collect();
    Ok(monomials_avoiding(w, d, degree_bound, &lms))
}

/// Monomials of degree `d` and total degree at most `degree_bound`, in
/// descending degrevlex order.
pub fn monomials_of_degree_vector(w: &MultiGrading, d: &DegreeVector, degree_bound: u32) -> Vec<Monomial> {
    monomials_avoiding(w, d, degree_bound, &[])
}

fn monomials_avoiding(w: &MultiGrading, d: &DegreeVector, degree_bound: u32, lms: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; w.arity()];
    let cur = vec![0i64; w.rank()];
    let ranges = suffix_ranges(w);
    enumerate_degree(w, &d.0, &ranges, lms, 0, degree_bound, &cur, &mut exps, &mut out);
    out.sort_by(|a, b| b.cmp_grevlex(a));
    out
}

/// `ranges[v][r] = (min, max)` weight of row `r` over variables `v..`.
fn suffix_ranges(w: &MultiGrading) -> Vec<Vec<(i64, i64)>> {
    let n = w.arity();
    let mut out = vec![vec![(0i64, 0i64); w.rank()]; n + 1];
    for v in (0..n).rev() {
        for r in 0..w.rank() {
            let x = w.weights[r][v];
            let (lo, hi) = out[v + 1][r];
            out[v][r] = (lo.min(x), hi.max(x));
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_degree(
    w: &MultiGrading,
    target: &[i64],
    ranges: &[Vec<(i64, i64)>],
    lms: &[Monomial],
    v: usize,
    budget: u32,
    cur: &[i64],
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    let n = w.arity();
    // reachable: target - cur must lie in [budget*min(0,lo), budget*max(0,hi)] per row
    for (r, &t) in target.iter().enumerate() {
        let (lo, hi) = ranges[v][r];
        let gap = t - cur[r];
        let b = budget as i64;
        if gap < b * lo.min(0) || gap > b * hi.max(0) {
            return;
        }
    }
    if v == n {
        if cur == target {
            out.push(Monomial::new(exps.clone()));
        }
        return;
    }
    for e in 0..=budget {
        exps[v] = e;
        if e > 0 {
            let probe = Monomial::new(exps.iter().enumerate().map(|(k, &x)| if k <= v { x } else { 0 }).collect());
            if lms.iter().any(|l| l.divides(&probe)) {
                break;
            }
        }
        let next: Vec<i64> = cur.iter().enumerate().map(|(r, c)| c + w.weights[r][v] * e as i64).collect();
        enumerate_degree(w, target, ranges, lms, v + 1, budget - e, &next, exps, out);
    }
    exps[v] = 0;
}

/// All exponent vectors with `sum weights[i] * e[i] == d`, descending lex.
pub fn weighted_monomials(weights: &[i64], d: u32) -> Vec<Monomial> {
    fn go(weights: &[i64], v: usize, left: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v == weights.len() {
            if left == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let mut e = left / weights[v];
        loop {
            exps[v] = e as u32;
            go(weights, v + 1, left - e * weights[v], exps, out);
            if e == 0 {
                break;
            }
            e -= 1;
        }
        exps[v] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0; weights.len()];
    go(weights, 0, d as i64, &mut exps, &mut out);
    out
}

/// Presents the degree-`d` Veronese subring of `Q[u_0..u_{n-1}]` (variable
/// weights `var_weights`). Generators `x_0, x_1, ...` map to the monomials of
/// weighted degree exactly `d`, in descending lex order.
pub fn veronese_presentation(
    n_vars: usize,
    var_weights: &[i64],
    d: u32,
) -> Result<(QuotientRing, RingMap), GradedError> {
    if var_weights.len() != n_vars {
        return Err(GradedError::ArityMismatch { expected: n_vars, got: var_weights.len() });
    }
    if var_weights.iter().any(|&w| w <= 0) || d == 0 {
        return Err(GradedError::NonPositiveWeights(var_weights.to_vec()));
    }
    let ambient = PolyRing::indexed("u", 0, n_vars);
    let monomials = weighted_monomials(var_weights, d);
    let gens = PolyRing::indexed("x", 0, monomials.len());
    let images: Vec<Polynomial> =
        monomials.into_iter().map(|m| Polynomial::monomial(&ambient, m, Scalar::from_integer(1.into()))).collect();
    let target = QuotientRing::new(Ideal::zero(&ambient));
    let free = RingMap::new(QuotientRing::new(Ideal::zero(&gens)), target.clone(), images.clone())?;
    let relations = crate::ringmap::kernel(&free)?;
    let presented = QuotientRing::new(relations).with_grading(MultiGrading::standard(gens.arity()))?;
    let map = RingMap::new(presented.clone(), target, images)?;
    Ok((presented, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomials_of_degree;

    fn ring(s: &str) -> PolyRing {
        PolyRing::parse_list(s).unwrap()
    }

    #[test]
    fn degrees_and_witnesses() {
        let r = ring("x,y");
        let w = MultiGrading::standard(2);
        assert_eq!(homogeneous_degree(&r.one(), &w).unwrap(), DegreeVector(vec![0]));
        let err = homogeneous_degree(&r.parse("x + y^2").unwrap(), &w).unwrap_err();
        match err {
            GradedError::NotHomogeneous { first, second, .. } => {
                let mut pair = [first, second];
                pair.sort();
                assert_eq!(pair, ["x".to_string(), "y^2".to_string()]);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn discovered_gradings() {
        let r = ring("x,y,z,w");
        let i = Ideal::parse(&r, &["x*w - y*z"]).unwrap();
        let g = discover_grading(&i, 10);
        assert_eq!(g.rank(), 3);
        let lat = linalg::Lattice::spanned_by(g.weights(), 4);
        assert!(lat.contains(&[1, 1, 1, 1]));
        assert!(lat.contains(&[1, 0, 1, 0]));
        for row in g.weights() {
            let one = MultiGrading::new(vec![row.clone()], 4).unwrap();
            assert!(check_homogeneous(&i, &one).is_ok());
        }

        let r2 = ring("x,y");
        let g = discover_grading(&Ideal::parse(&r2, &["x^2 - y^3"]).unwrap(), 5);
        assert_eq!(g.weights(), &[vec![3, 2]]);
        assert_eq!(discover_grading(&Ideal::zero(&ring("a,b,c")), 5).rank(), 3);
    }

    #[test]
    fn piece_dimensions() {
        let r = ring("x,y");
        let q = QuotientRing::new(Ideal::zero(&r));
        let w = MultiGrading::standard(2);
        assert_eq!(graded_piece_dimension(&q, &w, &DegreeVector(vec![3]), 12).unwrap(), 4);

        let r = ring("x,y,z");
        let q = QuotientRing::new(Ideal::parse(&r, &["x*z - y^2"]).unwrap());
        let w = MultiGrading::standard(3);
        // brute-force oracle: degree-2 monomials that are not the leading monomial y^2
        let lm = q.ideal().default_basis().unwrap().leading_monomials()[0].clone();
        let oracle = monomials_of_degree(3, 2).iter().filter(|m| !lm.divides(m)).count();
        assert_eq!(oracle, 5);
        assert_eq!(graded_piece_dimension(&q, &w, &DegreeVector(vec![2]), 12).unwrap(), oracle);
    }

    #[test]
    fn inhomogeneous_quotient_is_rejected() {
        let r = ring("x,y");
        let q = QuotientRing::new(Ideal::parse(&r, &["x - y^2"]).unwrap());
        let w = MultiGrading::standard(2);
        assert!(matches!(
            graded_piece_dimension(&q, &w, &DegreeVector(vec![1]), 12),
            Err(GradedError::NotHomogeneous { .. })
        ));
    }

    #[test]
    fn veronese_conic() {
        let (q, map) = veronese_presentation(2, &[1, 1], 2).unwrap();
        let x = q.ambient();
        assert!(q.ideal().same_ideal(&Ideal::parse(x, &["x0*x2 - x1^2"]).unwrap()).unwrap());
        assert_eq!(map.images()[1], map.target().ambient().parse("u0*u1").unwrap());
    }

    #[test]
    fn veronese_degree_one_is_identity() {
        let (q, map) = veronese_presentation(3, &[1, 1, 1], 1).unwrap();
        assert!(q.ideal().is_zero_ideal() || q.ideal().default_basis().unwrap().basis().is_empty());
        assert_eq!(map.images(), map.target().ambient().gens().as_slice());
    }

    #[test]
    fn weighted_veronese_generator_count() {
        // brute-force oracle: all exponent vectors with entries up to 2 having weighted degree 2
        let weights = [1i64, 1, 1, 2];
        let mut count = 0;
        for a in 0..=2u32 {
            for b in 0..=2u32 {
                for c in 0..=2u32 {
                    for d in 0..=2u32 {
                        if a as i64 + b as i64 + c as i64 + 2 * d as i64 == 2 {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 7);
        assert_eq!(weighted_monomials(&weights, 2).len(), count);
    }
}
