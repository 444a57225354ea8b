//! Singular points of surfaces in projective 3-space: Milnor numbers, ADE
//! types, singularity configurations, and the verdict for cubic surfaces.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::groebner::{
    local_length, rational_points_zero_dim, zero_dim_vector_dimension, GroebnerError, Ideal,
};
use crate::linalg;
use crate::poly::{
    chart_localize, hessian_at_origin, monomials_of_degree, partial_derivatives, Monomial, PolyError, PolyRing,
    Polynomial, Scalar,
};
use crate::univariate::UniPoly;

/// Largest power of the maximal ideal tried when the Jacobian ideal has
/// components away from the point.
const MAX_JET_ORDER: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("expected a nonzero form in 4 variables, got {0}")]
    NotASurface(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("singular locus is positive-dimensional in the chart {chart} = 1")]
    NonIsolated { chart: String },
    #[error("some singular points have irrational coordinates")]
    NonRationalPoints,
    #[error("Jacobian ideal is not zero-dimensional at {point}")]
    JacobianNotZeroDimensional { point: String },
    #[error("{point} is not a singular point of the chart {chart} = 1")]
    PointNotSingular { point: String, chart: String },
    #[error("{point} is not a Du Val singularity")]
    NotDuVal { point: String },
    #[error("expected a cubic form, got degree {degree}")]
    NotACubic { degree: u32 },
    #[error("cubic is reducible: it has the linear factor {factor}")]
    Reducible { factor: String },
    #[error("configuration {label} is not a configuration of a cubic surface")]
    UnlistedConfiguration { label: String },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(u32),
    D(u32),
    E(u32),
    NotDuVal,
}

impl AdeType {
    /// Milnor number, which for ADE types equals the index.
    pub fn milnor(&self) -> Option<u32> {
        match *self {
            AdeType::A(k) | AdeType::D(k) | AdeType::E(k) => Some(k),
            AdeType::NotDuVal => None,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(k) => write!(f, "A{k}"),
            AdeType::D(k) => write!(f, "D{k}"),
            AdeType::E(k) => write!(f, "E{k}"),
            AdeType::NotDuVal => write!(f, "not-du-val"),
        }
    }
}

impl Serialize for AdeType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Multiset label such as `3A2` or `A1+A5`.
pub fn configuration_label(types: &[AdeType]) -> String {
    if types.is_empty() {
        return "smooth".into();
    }
    let mut counts: BTreeMap<AdeType, usize> = BTreeMap::new();
    for t in types {
        *counts.entry(*t).or_default() += 1;
    }
    counts
        .iter()
        .map(|(t, &c)| if c == 1 { t.to_string() } else { format!("{c}{t}") })
        .collect::<Vec<_>>()
        .join("+")
}

/// The singularity configurations of cubic surfaces with quotient
/// singularities. The two D4 deformation classes share one multiset.
pub const CUBIC_CONFIGURATIONS: [(&str, &[AdeType]); 21] = {
    use AdeType::{A, D, E};
    [
        ("A1", &[A(1)]),
        ("2A1", &[A(1), A(1)]),
        ("A1A2", &[A(1), A(2)]),
        ("3A1", &[A(1), A(1), A(1)]),
        ("A1A3", &[A(1), A(3)]),
        ("2A1A2", &[A(1), A(1), A(2)]),
        ("4A1", &[A(1), A(1), A(1), A(1)]),
        ("A1A4", &[A(1), A(4)]),
        ("2A1A3", &[A(1), A(1), A(3)]),
        ("A1 2A2", &[A(1), A(2), A(2)]),
        ("A1A5", &[A(1), A(5)]),
        ("A2", &[A(2)]),
        ("2A2", &[A(2), A(2)]),
        ("3A2", &[A(2), A(2), A(2)]),
        ("A3", &[A(3)]),
        ("A4", &[A(4)]),
        ("A5", &[A(5)]),
        ("D4(1)", &[D(4)]),
        ("D4(2)", &[D(4)]),
        ("D5", &[D(5)]),
        ("E6", &[E(6)]),
    ]
};

/// Names of the cubic configurations with this multiset of types.
pub fn cubic_configuration_names(types: &[AdeType]) -> Vec<&'static str> {
    let mut sorted = types.to_vec();
    sorted.sort();
    CUBIC_CONFIGURATIONS.iter().filter(|(_, t)| t == &sorted.as_slice()).map(|(n, _)| *n).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularLocus {
    #[serde(serialize_with = "ser_points")]
    pub points: Vec<Vec<Scalar>>,
    /// False if some chart has singular points with irrational coordinates.
    pub complete: bool,
}

fn ser_points<S: Serializer>(pts: &[Vec<Scalar>], s: S) -> Result<S::Ok, S::Error> {
    let rendered: Vec<String> = pts.iter().map(|p| render_projective(p)).collect();
    rendered.serialize(s)
}

pub fn render_projective(p: &[Scalar]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(":"))
}

fn check_surface(f: &Polynomial) -> Result<(), SurfaceError> {
    if f.ring().arity() != 4 || f.is_zero() {
        return Err(SurfaceError::NotASurface(f.to_string()));
    }
    if !f.is_homogeneous() {
        return Err(SurfaceError::NotHomogeneous);
    }
    Ok(())
}

fn unit_point(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|j| if j == i { Scalar::one() } else { Scalar::zero() }).collect()
}

/// Scales so the first nonzero coordinate is 1.
fn normalize(p: &[Scalar]) -> Vec<Scalar> {
    let lead = p.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(Scalar::one);
    p.iter().map(|c| c / &lead).collect()
}

/// Singular points of `V(F)`, chart by chart, up to projective equivalence.
/// Points are listed in order of their first nonzero coordinate and then by
/// the order found in that chart.
pub fn projective_singular_points(f: &Polynomial) -> Result<SingularLocus, SurfaceError> {
    check_surface(f)?;
    let ring = f.ring();
    let n = ring.arity();
    let partials = partial_derivatives(f);
    let mut points: Vec<Vec<Scalar>> = Vec::new();
    let mut complete = true;
    for chart in 0..n {
        let name = &ring.variables()[chart];
        let origin = unit_point(n, chart);
        let mut gens = vec![chart_localize(f, name, &origin)?];
        for p in partials.iter().filter(|p| !p.is_zero()) {
            gens.push(chart_localize(p, name, &origin)?);
        }
        let affine = gens[0].ring().clone();
        let sols = match rational_points_zero_dim(&Ideal::new(&affine, gens)?) {
            Ok(s) => s,
            Err(GroebnerError::NotZeroDimensional { .. }) => {
                return Err(SurfaceError::NonIsolated { chart: name.clone() })
            }
            Err(e) => return Err(e.into()),
        };
        complete &= sols.all_rational;
        for a in sols.coordinates() {
            let mut p = a;
            p.insert(chart, Scalar::one());
            let p = normalize(&p);
            if !points.contains(&p) {
                points.push(p);
            }
        }
    }
    Ok(SingularLocus { points, complete })
}

/// Name of the first variable with a nonzero coordinate.
pub fn default_chart(f: &Polynomial, point: &[Scalar]) -> String {
    let i = point.iter().position(|c| !c.is_zero()).unwrap_or(0);
    f.ring().variables()[i].clone()
}

fn jacobian(local: &Polynomial) -> Result<Ideal, SurfaceError> {
    Ok(Ideal::new(local.ring(), partial_derivatives(local))?)
}

fn maximal_power(ring: &PolyRing, k: u32) -> Result<Ideal, SurfaceError> {
    let gens = monomials_of_degree(ring.arity(), k)
        .into_iter()
        .map(|m| Polynomial::monomial(ring, m, Scalar::one()))
        .collect();
    Ok(Ideal::new(ring, gens)?)
}

fn check_singular(local: &Polynomial, point: &[Scalar], chart: &str) -> Result<(), SurfaceError> {
    if local.jet(1).is_zero() {
        Ok(())
    } else {
        Err(SurfaceError::PointNotSingular { point: render_projective(point), chart: chart.into() })
    }
}

/// Milnor number of `local` at the origin. When the Jacobian ideal is not
/// zero-dimensional globally, `dim A/(J + m^k)` is computed for increasing
/// `k` until it stabilizes.
fn milnor_at_origin(local: &Polynomial, point_label: &str) -> Result<usize, SurfaceError> {
    let ring = local.ring();
    let j = jacobian(local)?;
    let origin = vec![Scalar::zero(); ring.arity()];
    match local_length(&j, &origin) {
        Ok(mu) => return Ok(mu),
        Err(GroebnerError::NotZeroDimensional { .. }) => {}
        Err(e) => return Err(e.into()),
    }
    let mut previous = None;
    for k in 1..=MAX_JET_ORDER {
        let d = zero_dim_vector_dimension(&j.sum(&maximal_power(ring, k)?)?)?;
        if previous == Some(d) {
            return Ok(d);
        }
        previous = Some(d);
    }
    Err(SurfaceError::JacobianNotZeroDimensional { point: point_label.into() })
}

/// Milnor number of the chart equation at `point`.
pub fn local_milnor(f: &Polynomial, point: &[Scalar], chart: &str) -> Result<usize, SurfaceError> {
    check_surface(f)?;
    let local = chart_localize(f, chart, point)?;
    check_singular(&local, point, chart)?;
    milnor_at_origin(&local, &render_projective(point))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularPointReport {
    #[serde(serialize_with = "crate::report::ser_scalars")]
    pub point: Vec<Scalar>,
    pub chart: String,
    pub milnor: usize,
    pub hessian_corank: usize,
    pub ade_type: AdeType,
}

/// Root multiplicities over the algebraic closure of a binary form of degree
/// 3 given by its coefficients `c[a]` of `s^a t^(3-a)`, sorted descending.
fn binary_cubic_multiplicities(c: &[Scalar; 4]) -> Vec<usize> {
    let g = UniPoly::new(c.to_vec());
    let Some(deg) = g.degree() else { return Vec::new() };
    let mut mults: Vec<usize> = Vec::new();
    if deg < 3 {
        mults.push(3 - deg);
    }
    for (factor, m) in g.squarefree_decomposition() {
        for _ in 0..factor.degree().unwrap_or(0) {
            mults.push(m);
        }
    }
    mults.sort_unstable_by(|a, b| b.cmp(a));
    mults
}

/// The cubic part of `local` restricted to the kernel of its Hessian, after a
/// rational congruence diagonalization. Returns the coefficients of
/// `s^a t^(3-a)`.
fn restricted_cubic(local: &Polynomial, matrix: &[Vec<Scalar>]) -> Result<[Scalar; 4], SurfaceError> {
    let (diag, cols) = linalg::symmetric_diagonalize(matrix);
    let kernel: Vec<&Vec<Scalar>> = diag.iter().zip(&cols).filter(|(d, _)| d.is_zero()).map(|(_, c)| c).collect();
    let plane = PolyRing::parse_list("s,t")?;
    let (s, t) = (plane.var(0), plane.var(1));
    let images: Vec<Polynomial> = (0..local.ring().arity())
        .map(|i| &s.scale(&kernel[0][i]) + &t.scale(&kernel[1][i]))
        .collect();
    let cubic = local.homogeneous_part(3).substitute(&images)?;
    let mut c: [Scalar; 4] = Default::default();
    for (m, coeff) in cubic.terms() {
        c[m.exponents()[0] as usize] = coeff.clone();
    }
    Ok(c)
}

fn classify_local(local: &Polynomial, mu: usize) -> Result<(usize, AdeType), SurfaceError> {
    let hess = hessian_at_origin(local);
    let mu32 = mu as u32;
    let ty = match hess.corank {
        0 => {
            if mu == 1 {
                AdeType::A(1)
            } else {
                AdeType::NotDuVal
            }
        }
        1 => AdeType::A(mu32),
        2 => {
            let c = restricted_cubic(local, &hess.matrix)?;
            match binary_cubic_multiplicities(&c).as_slice() {
                [1, 1, 1] if mu == 4 => AdeType::D(4),
                [2, 1] if mu >= 5 => AdeType::D(mu32),
                [3] if (6..=8).contains(&mu) => AdeType::E(mu32),
                _ => AdeType::NotDuVal,
            }
        }
        _ => AdeType::NotDuVal,
    };
    Ok((hess.corank, ty))
}

/// ADE type of the singular point `point` in the given chart.
pub fn ade_classify(f: &Polynomial, point: &[Scalar], chart: &str) -> Result<AdeType, SurfaceError> {
    Ok(analyze_point(f, point, chart)?.ade_type)
}

/// Milnor number, Hessian corank, and type of one singular point.
pub fn analyze_point(f: &Polynomial, point: &[Scalar], chart: &str) -> Result<SingularPointReport, SurfaceError> {
    check_surface(f)?;
    let local = chart_localize(f, chart, point)?;
    check_singular(&local, point, chart)?;
    let mu = milnor_at_origin(&local, &render_projective(point))?;
    let (corank, ade_type) = classify_local(&local, mu)?;
    Ok(SingularPointReport { point: point.to_vec(), chart: chart.into(), milnor: mu, hessian_corank: corank, ade_type })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Configuration {
    pub points: Vec<SingularPointReport>,
    pub types: Vec<AdeType>,
    pub label: String,
    pub mu_sum: usize,
    /// Matching names from the cubic list; only filled for cubics.
    pub cubic_names: Vec<&'static str>,
}

fn analyze_all(f: &Polynomial, locus: &SingularLocus) -> Result<Vec<SingularPointReport>, SurfaceError> {
    locus.points.par_iter().map(|p| analyze_point(f, p, &default_chart(f, p))).collect()
}

fn assemble(f: &Polynomial, points: Vec<SingularPointReport>) -> Result<Configuration, SurfaceError> {
    let mut types: Vec<AdeType> = points.iter().map(|p| p.ade_type).collect();
    types.sort();
    let label = configuration_label(&types);
    let mu_sum = points.iter().map(|p| p.milnor).sum();
    let cubic_names = if f.total_degree() == Some(3) && !types.is_empty() {
        let names = cubic_configuration_names(&types);
        if names.is_empty() {
            return Err(SurfaceError::UnlistedConfiguration { label });
        }
        names
    } else {
        Vec::new()
    };
    Ok(Configuration { points, types, label, mu_sum, cubic_names })
}

/// Types and Milnor numbers of every singular point. Requires isolated,
/// rational, Du Val singularities.
pub fn singularity_configuration(f: &Polynomial) -> Result<Configuration, SurfaceError> {
    let locus = projective_singular_points(f)?;
    if !locus.complete {
        return Err(SurfaceError::NonRationalPoints);
    }
    let points = analyze_all(f, &locus)?;
    if let Some(bad) = points.iter().find(|p| p.ade_type == AdeType::NotDuVal) {
        return Err(SurfaceError::NotDuVal { point: render_projective(&bad.point) });
    }
    assemble(f, points)
}

/// A rational linear form dividing `f`, if any. For each `i`, a factor with
/// leading variable `x_i` is `x_i + Σ_{j>i} c_j x_j`, and `f` must vanish after
/// substituting `x_i = -Σ c_j x_j`; the coefficients of that substitution cut
/// out the possible `c`.
pub fn linear_factor(f: &Polynomial) -> Result<Option<Polynomial>, SurfaceError> {
    let ring = f.ring();
    let n = ring.arity();
    for i in 0..n {
        let later: Vec<usize> = (i + 1..n).collect();
        let others: Vec<usize> = (0..n).filter(|&k| k != i).collect();
        let names = later
            .iter()
            .map(|j| format!("_c{j}"))
            .chain(others.iter().map(|&k| ring.variables()[k].clone()));
        let combined = PolyRing::new(names)?;
        let m = later.len();
        let mut images = vec![combined.zero(); n];
        for (pos, &k) in others.iter().enumerate() {
            images[k] = combined.var(m + pos);
        }
        let mut xi = combined.zero();
        for (pos, &j) in later.iter().enumerate() {
            xi = &xi - &(&combined.var(pos) * &images[j]);
        }
        images[i] = xi;
        let restricted = f.substitute(&images)?;
        let coeff_ring = PolyRing::indexed("c", 0, m);
        let mut groups: BTreeMap<Vec<u32>, Vec<(Monomial, Scalar)>> = BTreeMap::new();
        for (mono, c) in restricted.terms() {
            let (cpart, xpart) = mono.exponents().split_at(m);
            groups.entry(xpart.to_vec()).or_default().push((Monomial::new(cpart.to_vec()), c.clone()));
        }
        if groups.is_empty() {
            return Ok(Some(leading_form(ring, i, &later, &vec![Scalar::zero(); m])));
        }
        if m == 0 {
            continue;
        }
        let eqs: Vec<Polynomial> =
            groups.into_values().map(|ts| Polynomial::from_terms(&coeff_ring, ts)).collect();
        let pts = rational_points_zero_dim(&Ideal::new(&coeff_ring, eqs)?)?;
        if let Some(p) = pts.points.first() {
            return Ok(Some(leading_form(ring, i, &later, &p.coordinates)));
        }
    }
    Ok(None)
}

fn leading_form(ring: &PolyRing, i: usize, later: &[usize], c: &[Scalar]) -> Polynomial {
    let mut l = ring.var(i);
    for (j, cj) in later.iter().zip(c) {
        l = &l + &ring.var(*j).scale(cj);
    }
    l
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    SummandToric3A2,
    RuledOutGurjar,
    RuledOutCohomology,
    RuledOutSmooth,
    NotQuotientSingularities,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurfaceVerdict {
    pub configuration: Vec<AdeType>,
    pub label: String,
    pub mu_sum: usize,
    pub points: Vec<SingularPointReport>,
    pub verdict: VerdictKind,
    pub justification: String,
}

/// Whether the cubic surface `V(F)` can be a finite direct summand of a
/// polynomial ring, decided from its singularities.
pub fn cubic_verdict(f: &Polynomial) -> Result<SurfaceVerdict, SurfaceError> {
    check_surface(f)?;
    let degree = f.total_degree().unwrap_or(0);
    if degree != 3 {
        return Err(SurfaceError::NotACubic { degree });
    }
    if let Some(l) = linear_factor(f)? {
        return Err(SurfaceError::Reducible { factor: l.to_string() });
    }
    let verdict = |points: Vec<SingularPointReport>, kind: VerdictKind, why: String| {
        let mut configuration: Vec<AdeType> = points.iter().map(|p| p.ade_type).collect();
        configuration.sort();
        SurfaceVerdict {
            label: configuration_label(&configuration),
            mu_sum: points.iter().map(|p| p.milnor).sum(),
            configuration,
            points,
            verdict: kind,
            justification: why,
        }
    };
    let locus = match projective_singular_points(f) {
        Ok(l) => l,
        Err(SurfaceError::NonIsolated { chart }) => {
            return Ok(verdict(
                Vec::new(),
                VerdictKind::NotQuotientSingularities,
                format!(
                    "the singular locus is a curve (chart {chart} = 1), so the surface is not normal; \
                     a direct summand of a regular ring is normal with klt singularities"
                ),
            ))
        }
        Err(e) => return Err(e),
    };
    if locus.points.is_empty() {
        return Ok(verdict(
            Vec::new(),
            VerdictKind::RuledOutSmooth,
            "smooth cubic surface: a smooth del Pezzo surface is a direct summand of a polynomial ring \
             only in degree at least 5"
                .into(),
        ));
    }
    if !locus.complete {
        return Ok(verdict(
            Vec::new(),
            VerdictKind::Inconclusive,
            "some singular points are not defined over the rationals and were not analyzed".into(),
        ));
    }
    let points = match analyze_all(f, &locus) {
        Ok(p) => p,
        Err(SurfaceError::JacobianNotZeroDimensional { point }) => {
            return Ok(verdict(
                Vec::new(),
                VerdictKind::NotQuotientSingularities,
                format!("the singularity at {point} is not isolated"),
            ))
        }
        Err(e) => return Err(e),
    };
    if let Some(bad) = points.iter().find(|p| p.ade_type == AdeType::NotDuVal) {
        let why = format!(
            "the singularity at {} is not Du Val; a Gorenstein surface singularity is klt only if it is Du Val, \
             and direct summands of regular rings have klt singularities",
            render_projective(&bad.point)
        );
        return Ok(verdict(points, VerdictKind::NotQuotientSingularities, why));
    }
    let config = assemble(f, points)?;
    let points = config.points;
    let label = config.label;
    let mu_sum = config.mu_sum;
    let out = if mu_sum != 6 {
        verdict(
            points,
            VerdictKind::RuledOutCohomology,
            format!(
                "Milnor numbers sum to {mu_sum}; a finite direct summand of a polynomial ring needs the number of \
                 exceptional curves of the minimal resolution to be dim H^2 - 1 = 6, since H^2 of the resolution \
                 of a cubic surface is C^7"
            ),
        )
    } else {
        match label.as_str() {
            "3A2" => verdict(
                points,
                VerdictKind::SummandToric3A2,
                "3A2 cubic: projectively equivalent to x^3 - yzw, the toric quotient of C^2 by Z/3 x Z/3, \
                 which is a direct summand of a polynomial ring"
                    .into(),
            ),
            "A1+A5" | "E6" => verdict(
                points,
                VerdictKind::RuledOutGurjar,
                format!("{label} cubic: Gurjar's classification shows it admits no finite morphism from P^2"),
            ),
            _ => verdict(
                points,
                VerdictKind::Inconclusive,
                format!("{label} has Milnor sum 6 but is not one of 3A2, A1A5, E6"),
            ),
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::scalar;

    fn xyzw() -> PolyRing {
        PolyRing::parse_list("x,y,z,w").unwrap()
    }

    fn form(s: &str) -> Polynomial {
        xyzw().parse(s).unwrap()
    }

    fn pt(c: [i64; 4]) -> Vec<Scalar> {
        c.iter().map(|&v| scalar(v)).collect()
    }

    fn affine(vars: &str, s: &str) -> Polynomial {
        PolyRing::parse_list(vars).unwrap().parse(s).unwrap()
    }

    #[test]
    fn singular_points() {
        let mut p = projective_singular_points(&form("x^3 - y*z*w")).unwrap();
        p.points.sort();
        assert_eq!(p.points, vec![pt([0, 0, 0, 1]), pt([0, 0, 1, 0]), pt([0, 1, 0, 0])]);
        assert!(p.complete);
        assert!(projective_singular_points(&form("x*w - y*z")).unwrap().points.is_empty());
        let mut q = projective_singular_points(&form("y^3 + w*(x^2 + y*z)")).unwrap();
        q.points.sort();
        assert_eq!(q.points, vec![pt([0, 0, 0, 1]), pt([0, 0, 1, 0])]);
        assert_eq!(
            projective_singular_points(&form("x^2*y")).unwrap_err(),
            SurfaceError::NonIsolated { chart: "y".into() }
        );
    }

    #[test]
    fn irrational_points_are_flagged() {
        // singular at [0:0:0:1] and at [±√2:1:0:0]
        let p = projective_singular_points(&form("(x^2 - 2*y^2)*w + z^3")).unwrap();
        assert!(!p.complete);
        assert_eq!(p.points, vec![pt([0, 0, 0, 1])]);
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(milnor_at_origin(&affine("x,y,z", "x^3 - y*z"), "").unwrap(), 2);
        assert_eq!(milnor_at_origin(&affine("x,y,z", "x^2 + y^2 + z^2"), "").unwrap(), 1);
        assert_eq!(milnor_at_origin(&affine("x,y,w", "y^3 + w*x^2 + w^2"), "").unwrap(), 6);
        for k in 1..=6 {
            let f = affine("x,y,z", &format!("x^2 + y^2 + z^{}", k + 1));
            assert_eq!(milnor_at_origin(&f, "").unwrap(), k as usize);
        }
        let e = local_milnor(&form("x^3 - y*z*w"), &pt([1, 1, 1, 1]), "x").unwrap_err();
        assert!(matches!(e, SurfaceError::PointNotSingular { .. }));
    }

    #[test]
    fn milnor_ignores_critical_points_elsewhere() {
        // f = x^2 + y^2 + z^2 - z^3 also has a critical point at z = 2/3
        let f = affine("x,y,z", "x^2 + y^2 + z^2 - z^3");
        assert_eq!(milnor_at_origin(&f, "").unwrap(), 1);
        // every point of the plane z = 1 is critical
        let g = affine("x,y,z", "(x^2 + y^2 + z^2)*(1 - z)^2");
        assert_eq!(milnor_at_origin(&g, "").unwrap(), 1);
        let h = affine("x,y,z", "(x^2 + y^2 + z^3)*(1 - z)^2");
        assert_eq!(milnor_at_origin(&h, "").unwrap(), 2);
    }

    #[test]
    fn types() {
        assert_eq!(ade_classify(&form("x^3 - y*z*w"), &pt([0, 0, 0, 1]), "w").unwrap(), AdeType::A(2));
        let a5 = analyze_point(&form("y^3 + w*(x^2 + y*z)"), &pt([0, 0, 1, 0]), "z").unwrap();
        assert_eq!((a5.hessian_corank, a5.milnor, a5.ade_type), (1, 5, AdeType::A(5)));
        let e6 = analyze_point(&form("y^3 + w*(x^2 + z*w)"), &pt([0, 0, 1, 0]), "z").unwrap();
        assert_eq!((e6.hessian_corank, e6.milnor, e6.ade_type), (2, 6, AdeType::E(6)));
        // kernel-plane cubic y^3 + z^3 has three distinct roots
        let d4 = analyze_point(&form("w*x^2 + y^3 + z^3"), &pt([0, 0, 0, 1]), "w");
        assert_eq!(d4.unwrap().ade_type, AdeType::D(4));
        let d5 = analyze_point(&form("w*x^2 + x*z^2 + y^2*z"), &pt([0, 0, 0, 1]), "w").unwrap();
        assert_eq!((d5.hessian_corank, d5.ade_type), (2, AdeType::D(5)));
        // cone over a smooth plane cubic: corank 3
        let cone = analyze_point(&form("x^3 + y^3 + z^3"), &pt([0, 0, 0, 1]), "w").unwrap();
        assert_eq!((cone.hessian_corank, cone.ade_type), (3, AdeType::NotDuVal));
    }

    #[test]
    fn chart_independence() {
        // x^3 - yzw after w -> w + z; the A2 point moves to [0:0:1:-1]
        let f = form("x^3 - y*z*(w + z)");
        let p = pt([0, 0, 1, -1]);
        assert_eq!(local_milnor(&f, &p, "z").unwrap(), 2);
        assert_eq!(local_milnor(&f, &p, "w").unwrap(), 2);
        assert_eq!(ade_classify(&f, &p, "w").unwrap(), AdeType::A(2));
        assert_eq!(local_milnor(&f, &pt([0, 0, 2, -2]), "z").unwrap(), 2);
    }

    #[test]
    fn configurations() {
        let c = singularity_configuration(&form("x^3 - y*z*w")).unwrap();
        assert_eq!((c.label.as_str(), c.mu_sum), ("3A2", 6));
        assert_eq!(c.cubic_names, vec!["3A2"]);
        let c = singularity_configuration(&form("y^3 + w*(x^2 + y*z)")).unwrap();
        assert_eq!((c.label.as_str(), c.mu_sum), ("A1+A5", 6));
        let c = singularity_configuration(&form("x*y*z + x*y*w + x*z*w + y*z*w")).unwrap();
        assert_eq!((c.label.as_str(), c.mu_sum), ("4A1", 4));
        assert_eq!(
            singularity_configuration(&form("x^3 + y^3 + z^3")).unwrap_err(),
            SurfaceError::NotDuVal { point: "[0:0:0:1]".into() }
        );
        assert_eq!(cubic_configuration_names(&[AdeType::D(4)]), vec!["D4(1)", "D4(2)"]);
        assert_eq!(CUBIC_CONFIGURATIONS.len(), 21);
    }

    #[test]
    fn linear_factors() {
        assert_eq!(linear_factor(&form("(x + 2*z)*(y^2 - z*w)")).unwrap(), Some(form("x + 2*z")));
        assert_eq!(linear_factor(&form("w*(x^2 + y*z)")).unwrap(), Some(form("w")));
        assert_eq!(linear_factor(&form("x^3 - y*z*w")).unwrap(), None);
        assert_eq!(linear_factor(&form("x^3 - 2*y^3 + z*w^2 - z^2*w")).unwrap(), None);
    }

    #[test]
    fn verdicts() {
        let v = cubic_verdict(&form("x^3 - y*z*w")).unwrap();
        assert_eq!(v.verdict, VerdictKind::SummandToric3A2);
        let v = cubic_verdict(&form("y^3 + w*(x^2 + z*w)")).unwrap();
        assert_eq!((v.verdict, v.label.as_str()), (VerdictKind::RuledOutGurjar, "E6"));
        let v = cubic_verdict(&form("y^3 + w*(x^2 + y*z)")).unwrap();
        assert_eq!(v.verdict, VerdictKind::RuledOutGurjar);
        let v = cubic_verdict(&form("x*y*z + x*y*w + x*z*w + y*z*w")).unwrap();
        assert_eq!((v.verdict, v.mu_sum), (VerdictKind::RuledOutCohomology, 4));
        let v = cubic_verdict(&form("x^3 + y^3 + z^3 + w^3")).unwrap();
        assert_eq!(v.verdict, VerdictKind::RuledOutSmooth);
        let v = cubic_verdict(&form("x^3 + y^3 + z^3")).unwrap();
        assert_eq!(v.verdict, VerdictKind::NotQuotientSingularities);
        assert_eq!(cubic_verdict(&form("x*w - y*z")).unwrap_err(), SurfaceError::NotACubic { degree: 2 });
        assert!(matches!(cubic_verdict(&form("x*(y^2 - z*w)")), Err(SurfaceError::Reducible { .. })));
    }

    #[test]
    fn binary_cubic_roots() {
        let c = |a: [i64; 4]| binary_cubic_multiplicities(&[scalar(a[0]), scalar(a[1]), scalar(a[2]), scalar(a[3])]);
        assert_eq!(c([0, 0, 0, 1]), vec![3]);
        assert_eq!(c([1, 0, 0, 0]), vec![3]);
        assert_eq!(c([0, 1, 0, 0]), vec![2, 1]);
        assert_eq!(c([1, 0, 0, 1]), vec![1, 1, 1]);
        assert_eq!(c([-2, 0, 0, 1]), vec![1, 1, 1]);
        assert!(c([0, 0, 0, 0]).is_empty());
    }
}
