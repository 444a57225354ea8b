use std::cmp::Ordering;

use serde::Serialize;

use super::{GroebnerError, Term};
use crate::poly::{Monomial, PolyError};

/// Global monomial orders on `Q[x_0..x_{n-1}]`, with `x_0 > x_1 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Degrevlex on the first `first_block` variables, then degrevlex on the
    /// rest. Any monomial involving the first block beats every monomial that
    /// does not.
    BlockElimination { first_block: usize },
    /// Compare the weight first, then fall back to `tiebreak`. Weights must be
    /// nonnegative.
    WeightRefined { weights: Vec<i64>, tiebreak: Box<MonomialOrder> },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub(crate) fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => grevlex(a, b),
            MonomialOrder::BlockElimination { first_block } => {
                let k = (*first_block).min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
            MonomialOrder::WeightRefined { weights, tiebreak } => {
                let w = |e: &[u32]| -> i128 { e.iter().zip(weights).map(|(&x, &w)| x as i128 * w as i128).sum() };
                w(a).cmp(&w(b)).then_with(|| tiebreak.cmp_exps(a, b))
            }
        }
    }

    pub(crate) fn validate(&self, arity: usize) -> Result<(), GroebnerError> {
        match self {
            MonomialOrder::BlockElimination { first_block } if *first_block > arity => {
                Err(PolyError::InvalidRing(format!("block of size {first_block} exceeds {arity} variables")).into())
            }
            MonomialOrder::WeightRefined { weights, tiebreak } => {
                if weights.len() != arity {
                    return Err(PolyError::ArityMismatch { expected: arity, got: weights.len() }.into());
                }
                if weights.iter().any(|&w| w < 0) {
                    return Err(PolyError::InvalidRing("order weights must be nonnegative".into()).into());
                }
                tiebreak.validate(arity)
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::BlockElimination { first_block } => format!("block({first_block})"),
            MonomialOrder::WeightRefined { weights, tiebreak } => format!("weight({weights:?};{})", tiebreak.name()),
        }
    }
}

/// Sorts terms descending under `order`. Terms must have distinct monomials.
pub(crate) fn sort_terms(mut terms: Vec<Term>, order: &MonomialOrder) -> Vec<Term> {
    if *order != MonomialOrder::DegRevLex {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    terms
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn orders_on_small_monomials() {
        // x*z vs y^2 in (x,y,z)
        let (xz, yy) = (m(&[1, 0, 1]), m(&[0, 2, 0]));
        assert_eq!(MonomialOrder::Lex.cmp(&xz, &yy), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&xz, &yy), Ordering::Less);
        // x vs y^5: lex prefers x, degrevlex prefers y^5
        let (x, y5) = (m(&[1, 0, 0]), m(&[0, 5, 0]));
        assert_eq!(MonomialOrder::Lex.cmp(&x, &y5), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&x, &y5), Ordering::Less);
        let block = MonomialOrder::BlockElimination { first_block: 1 };
        assert_eq!(block.cmp(&x, &y5), Ordering::Greater);
        let w = MonomialOrder::WeightRefined { weights: vec![0, 0, 1], tiebreak: Box::new(MonomialOrder::Lex) };
        assert_eq!(w.cmp(&m(&[0, 0, 1]), &m(&[9, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_matches_polynomial_storage_order() {
        let mons = crate::poly::monomials_up_to(3, 3);
        for a in &mons {
            for b in &mons {
                assert_eq!(MonomialOrder::DegRevLex.cmp(a, b), a.cmp_grevlex(b));
            }
        }
    }
}
