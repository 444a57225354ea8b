//! Diagonal torus actions on polynomial rings, their invariant monomials, and
//! Pfaffians of skew-symmetric matrices.

use serde::Serialize;
use thiserror::Error;

use crate::graded::{monomials_of_degree_vector, DegreeVector, GradedError, MultiGrading};
use crate::poly::{Monomial, PolyError, PolyRing, Polynomial};

pub const DEFAULT_INVARIANT_BOUND: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("index {index} is outside 1..={size}")]
    BadIndex { index: usize, size: usize },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Column `j` of the grading is the character by which the torus scales
/// variable `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TorusAction {
    grading: MultiGrading,
}

impl TorusAction {
    pub fn new(weights: Vec<Vec<i64>>, arity: usize) -> Result<Self, TorusError> {
        Ok(TorusAction { grading: MultiGrading::new(weights, arity)? })
    }

    pub fn from_grading(grading: MultiGrading) -> Self {
        TorusAction { grading }
    }

    pub fn grading(&self) -> &MultiGrading {
        &self.grading
    }

    pub fn rank(&self) -> usize {
        self.grading.rank()
    }

    pub fn arity(&self) -> usize {
        self.grading.arity()
    }

    pub fn weight_of(&self, m: &Monomial) -> DegreeVector {
        self.grading.degree_of(m)
    }

    pub fn is_invariant(&self, m: &Monomial) -> bool {
        self.weight_of(m).0.iter().all(|&w| w == 0)
    }

    /// True if every monomial term of `p` is invariant.
    pub fn is_invariant_polynomial(&self, p: &Polynomial) -> bool {
        p.terms().iter().all(|(m, _)| self.is_invariant(m))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantMonomials {
    pub degree_bound: u32,
    pub monomials: Vec<Monomial>,
}

impl InvariantMonomials {
    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// Every weight-zero monomial of total degree at most `degree_bound`,
/// including 1, sorted by degree and then descending degrevlex.
pub fn invariant_monomials(action: &TorusAction, degree_bound: u32) -> InvariantMonomials {
    let zero = DegreeVector::zero(action.rank());
    let mut monomials = monomials_of_degree_vector(&action.grading, &zero, degree_bound);
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp_grevlex(a)));
    InvariantMonomials { degree_bound, monomials }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidGenerators {
    pub degree_bound: u32,
    pub generators: Vec<Monomial>,
    /// The generators span every invariant monomial of degree at most the bound.
    pub complete_to_bound: bool,
    /// Only set when no invariant can exceed the bound: all weights vanish or
    /// the action admits no cancellation at all.
    pub complete: bool,
}

/// Nonunit invariant monomials up to the bound not divisible by a smaller
/// nonunit invariant monomial. The quotient of two invariants is invariant, so
/// divisibility is the same as factoring within the monoid.
pub fn monoid_minimal_generators(action: &TorusAction, degree_bound: u32) -> MonoidGenerators {
    let all = invariant_monomials(action, degree_bound);
    let mut generators: Vec<Monomial> = Vec::new();
    for m in all.monomials.iter().filter(|m| !m.is_one()) {
        if !generators.iter().any(|g| g.divides(m)) {
            generators.push(m.clone());
        }
    }
    let n = action.arity();
    let invariant_vars = (0..n).filter(|&j| action.grading.column(j).iter().all(|&w| w == 0)).count();
    let complete = invariant_vars == n || (invariant_vars == 0 && action.grading.is_positive());
    MonoidGenerators { degree_bound, generators, complete_to_bound: true, complete }
}

/// The action on `R[t]` where `t` is scaled by the inverse of the given
/// character, so invariants of `t`-degree `k` are the elements of degree `k`
/// times the class.
pub fn extend_action_section_variable(action: &TorusAction, divisor_class: &DegreeVector) -> Result<TorusAction, TorusError> {
    let column: Vec<i64> = divisor_class.0.iter().map(|b| -b).collect();
    Ok(TorusAction { grading: action.grading.extend(&column, false)? })
}

/// Skew-symmetric matrix stored by its strictly upper triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    ring: PolyRing,
    size: usize,
    upper: Vec<Vec<Polynomial>>,
}

impl SkewMatrix {
    /// Row `i` (0-based) lists the entries in columns `i+1..size`.
    pub fn from_upper_rows(ring: &PolyRing, rows: Vec<Vec<Polynomial>>) -> Result<Self, TorusError> {
        let size = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size - 1 - i {
                return Err(TorusError::Shape(format!("row {} has {} entries, expected {}", i + 1, row.len(), size - 1 - i)));
            }
            for p in row {
                ring.check_same(p.ring())?;
            }
        }
        Ok(SkewMatrix { ring: ring.clone(), size, upper: rows })
    }

    pub fn parse(ring: &PolyRing, rows: &[&[&str]]) -> Result<Self, TorusError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_upper_rows(ring, rows)
    }

    /// The matrix with independent entries `a{i}{j}` (1-based), over a fresh ring.
    pub fn generic(size: usize) -> Self {
        let names: Vec<String> =
            (1..=size).flat_map(|i| (i + 1..=size).map(move |j| format!("a{i}_{j}"))).collect();
        let ring = PolyRing::new(names).expect("distinct names");
        let mut k = 0;
        let upper = (0..size)
            .map(|i| {
                (i + 1..size)
                    .map(|_| {
                        k += 1;
                        ring.var(k - 1)
                    })
                    .collect()
            })
            .collect();
        SkewMatrix { ring, size, upper }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[i][j - i - 1].clone(),
            std::cmp::Ordering::Equal => self.ring.zero(),
            std::cmp::Ordering::Greater => -&self.upper[j][i - j - 1],
        }
    }

    /// The full square matrix on the given 0-based indices.
    pub fn restricted(&self, indices: &[usize]) -> Vec<Vec<Polynomial>> {
        indices.iter().map(|&i| indices.iter().map(|&j| self.entry(i, j)).collect()).collect()
    }

    fn remaining(&self, omit_index: usize) -> Result<Vec<usize>, TorusError> {
        if omit_index == 0 || omit_index > self.size {
            return Err(TorusError::BadIndex { index: omit_index, size: self.size });
        }
        Ok((0..self.size).filter(|&i| i != omit_index - 1).collect())
    }

    /// The square submatrix with row and column `omit_index` (1-based) removed.
    pub fn submatrix_omitting(&self, omit_index: usize) -> Result<Vec<Vec<Polynomial>>, TorusError> {
        Ok(self.restricted(&self.remaining(omit_index)?))
    }
}

/// Pfaffian of the principal submatrix omitting row and column `omit_index`
/// (1-based). The matrix must have odd size.
pub fn pfaffian(m: &SkewMatrix, omit_index: usize) -> Result<Polynomial, TorusError> {
    if m.size.is_multiple_of(2) {
        return Err(TorusError::Shape(format!("omitting one index of a size-{} matrix leaves odd size", m.size)));
    }
    let idx = m.remaining(omit_index)?;
    Ok(pfaffian_on(m, &idx))
}

/// Pfaffian of a matrix of even size.
pub fn pfaffian_full(m: &SkewMatrix) -> Result<Polynomial, TorusError> {
    if m.size % 2 == 1 {
        return Err(TorusError::Shape(format!("size {} is odd", m.size)));
    }
    Ok(pfaffian_on(m, &(0..m.size).collect::<Vec<_>>()))
}

/// Expansion along the first index.
fn pfaffian_on(m: &SkewMatrix, idx: &[usize]) -> Polynomial {
    if idx.is_empty() {
        return m.ring.one();
    }
    let mut acc = m.ring.zero();
    for k in 1..idx.len() {
        let entry = m.entry(idx[0], idx[k]);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().enumerate().filter(|&(p, _)| p + 1 != k).map(|(_, &i)| i).collect();
        let term = &entry * &pfaffian_on(m, &rest);
        acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(ring: &PolyRing, rows: &[Vec<Polynomial>]) -> Result<Polynomial, TorusError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(TorusError::Shape("matrix is not square".into()));
    }
    Ok(det_on(ring, rows, &(0..n).collect::<Vec<_>>(), 0))
}

fn det_on(ring: &PolyRing, rows: &[Vec<Polynomial>], cols: &[usize], row: usize) -> Polynomial {
    if cols.is_empty() {
        return ring.one();
    }
    let mut acc = ring.zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &rows[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &det_on(ring, rows, &rest, row + 1);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn balanced_exponents() {
        let a = TorusAction::new(vec![vec![1, -1]], 2).unwrap();
        let inv = invariant_monomials(&a, 4);
        assert_eq!(inv.monomials, vec![mono(&[0, 0]), mono(&[1, 1]), mono(&[2, 2])]);
        assert_eq!(inv.degree_bound, 4);
        let pos = TorusAction::new(vec![vec![1, 1]], 2).unwrap();
        assert_eq!(invariant_monomials(&pos, 7).monomials, vec![mono(&[0, 0])]);
    }

    #[test]
    fn minimal_generators() {
        let a = TorusAction::new(vec![vec![1, -1]], 2).unwrap();
        let g = monoid_minimal_generators(&a, 8);
        assert_eq!(g.generators, vec![mono(&[1, 1])]);
        assert!(g.complete_to_bound && !g.complete);
        let b = TorusAction::new(vec![vec![2, -3]], 2).unwrap();
        assert_eq!(monoid_minimal_generators(&b, 12).generators, vec![mono(&[3, 2])]);
        let segre = TorusAction::new(vec![vec![1, 1, -1, -1]], 4).unwrap();
        let mut gens = monoid_minimal_generators(&segre, 6).generators;
        gens.sort();
        let mut expected = vec![mono(&[1, 0, 1, 0]), mono(&[1, 0, 0, 1]), mono(&[0, 1, 1, 0]), mono(&[0, 1, 0, 1])];
        expected.sort();
        assert_eq!(gens, expected);
        assert!(monoid_minimal_generators(&TorusAction::new(vec![vec![1, 2]], 2).unwrap(), 5).complete);
    }

    #[test]
    fn section_variable() {
        let a = TorusAction::new(vec![vec![1, 0], vec![0, 1]], 2).unwrap();
        let e = extend_action_section_variable(&a, &DegreeVector(vec![3, -1])).unwrap();
        assert_eq!(e.grading().column(2), vec![-3, 1]);
        let z = extend_action_section_variable(&a, &DegreeVector(vec![0, 0])).unwrap();
        assert!(z.is_invariant(&mono(&[0, 0, 5])));
        assert!(extend_action_section_variable(&a, &DegreeVector(vec![1])).is_err());
    }

    #[test]
    fn generic_pfaffian_squares_to_determinant() {
        let m = SkewMatrix::generic(4);
        let pf = pfaffian_full(&m).unwrap();
        assert_eq!(pf, m.ring().parse("a1_2*a3_4 - a1_3*a2_4 + a1_4*a2_3").unwrap());
        let det = determinant(m.ring(), &m.restricted(&[0, 1, 2, 3])).unwrap();
        assert_eq!(&pf * &pf, det);
        let m6 = SkewMatrix::generic(6);
        let pf6 = pfaffian_full(&m6).unwrap();
        assert_eq!(pf6.terms().len(), 15);
        assert_eq!(&pf6 * &pf6, determinant(m6.ring(), &m6.restricted(&(0..6).collect::<Vec<_>>())).unwrap());
    }

    #[test]
    fn pfaffians_of_a_five_by_five() {
        let m = SkewMatrix::generic(5);
        for k in 1..=5 {
            let pf = pfaffian(&m, k).unwrap();
            let sub = m.submatrix_omitting(k).unwrap();
            assert_eq!(&pf * &pf, determinant(m.ring(), &sub).unwrap());
            // no variable involving index k survives
            let tag = k.to_string();
            for (mono, _) in pf.terms() {
                for (v, &e) in m.ring().variables().iter().zip(mono.exponents()) {
                    if e > 0 {
                        assert!(!v[1..].split('_').any(|s| s == tag));
                    }
                }
            }
        }
        assert_eq!(pfaffian(&m, 0).unwrap_err(), TorusError::BadIndex { index: 0, size: 5 });
        assert_eq!(pfaffian(&m, 6).unwrap_err(), TorusError::BadIndex { index: 6, size: 5 });
    }

    #[test]
    fn zero_row_drops_out() {
        let ring = PolyRing::parse_list("a,b,c,d,e,f").unwrap();
        // index 3 is a zero row and column
        let m = SkewMatrix::parse(&ring, &[&["a", "0", "b", "c"], &["0", "d", "e"], &["0", "0"], &["f"], &[]]).unwrap();
        assert_eq!(pfaffian(&m, 3).unwrap(), ring.parse("a*f - b*e + c*d").unwrap());
        for k in [1, 2, 4, 5] {
            assert!(pfaffian(&m, k).unwrap().is_zero());
        }
    }

    #[test]
    fn shape_errors() {
        let ring = PolyRing::parse_list("a").unwrap();
        assert!(SkewMatrix::parse(&ring, &[&["a", "a"], &[]]).is_err());
        let m = SkewMatrix::generic(4);
        assert!(pfaffian(&m, 1).is_err());
    }
}
