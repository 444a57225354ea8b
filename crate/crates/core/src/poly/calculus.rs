use num_traits::Zero;
use serde::Serialize;

use super::{Monomial, PolyError, PolyRing, Polynomial, Scalar};
use crate::linalg;

impl Polynomial {
    /// Partial derivative in variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        Polynomial::from_terms(
            self.ring(),
            self.terms().iter().filter(|(m, _)| m.exponents()[var] > 0).map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                let k = e[var];
                e[var] -= 1;
                (Monomial::new(e), c * Scalar::from_integer(k.into()))
            }),
        )
    }
}

/// One partial per variable, in ring order.
pub fn partial_derivatives(p: &Polynomial) -> Vec<Polynomial> {
    (0..p.ring().arity()).map(|i| p.derivative(i)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HessianInfo {
    #[serde(serialize_with = "crate::report::ser_matrix")]
    pub matrix: Vec<Vec<Scalar>>,
    pub rank: usize,
    pub corank: usize,
}

/// Matrix of second partials at the origin, with its rank and corank.
pub fn hessian_at_origin(p: &Polynomial) -> HessianInfo {
    let n = p.ring().arity();
    let mut matrix = vec![vec![Scalar::zero(); n]; n];
    for (m, c) in p.terms() {
        if m.degree() != 2 {
            continue;
        }
        let e = m.exponents();
        let support: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
        match support.as_slice() {
            [i] => matrix[*i][*i] = c * Scalar::from_integer(2.into()),
            [i, j] => {
                matrix[*i][*j] = c.clone();
                matrix[*j][*i] = c.clone();
            }
            _ => unreachable!("degree-2 monomial"),
        }
    }
    let rank = linalg::rank(&matrix);
    HessianInfo { matrix, rank, corank: n - rank }
}

/// Dehomogenizes `form` at `chart_var = 1` and translates `point` to the origin.
///
/// `point` holds projective coordinates for every variable of the ring; it is
/// rescaled so the chart coordinate is one. The result lives in the ring of
/// the remaining variables.
pub fn chart_localize(form: &Polynomial, chart_var: &str, point: &[Scalar]) -> Result<Polynomial, PolyError> {
    let ring = form.ring();
    if !form.is_homogeneous() {
        return Err(PolyError::NotHomogeneous);
    }
    let chart = ring.var_index(chart_var).ok_or_else(|| PolyError::UnknownVariable {
        name: chart_var.to_string(),
        position: 0,
    })?;
    if point.len() != ring.arity() {
        return Err(PolyError::ArityMismatch { expected: ring.arity(), got: point.len() });
    }
    if point[chart].is_zero() {
        return Err(PolyError::PointNotOnChart { chart: chart_var.to_string(), point: render_point(point) });
    }
    let scale = point[chart].recip();
    let affine = PolyRing::new(
        ring.variables().iter().enumerate().filter(|(i, _)| *i != chart).map(|(_, v)| v.clone()),
    )?;
    let mut images = Vec::with_capacity(ring.arity());
    let mut k = 0;
    for i in 0..ring.arity() {
        if i == chart {
            images.push(affine.one());
        } else {
            let shift = affine.constant(&point[i] * &scale);
            images.push(&affine.var(k) + &shift);
            k += 1;
        }
    }
    form.substitute(&images)
}

pub(crate) fn render_point(point: &[Scalar]) -> String {
    let parts: Vec<String> = point.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(":"))
}
