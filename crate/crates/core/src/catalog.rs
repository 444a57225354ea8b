//! Named rings, maps, and matrices: quadrics and their invariant-theoretic
//! presentations, monomial hypersurfaces, the quintic del Pezzo Cox ring,
//! quartic del Pezzo surfaces, and singular cubic surfaces.

use serde::Serialize;
use thiserror::Error;

use crate::graded::{DegreeVector, GradedError, MultiGrading};
use crate::groebner::{GroebnerError, Ideal};
use crate::poly::{hessian_at_origin, PolyError, PolyRing, Polynomial};
use crate::ringmap::{QuotientRing, RingMap, RingMapError};
use crate::torus::{determinant, extend_action_section_variable, pfaffian, SkewMatrix, TorusAction, TorusError};

pub const EXAMPLE_KEYS: [&str; 11] = [
    "quadric", "segre", "veronese2", "xnd", "weyl", "dp5cox", "dp4a", "dp4b", "cubic3A2", "cubicA1A5", "cubicE6",
];

/// Largest `c` accepted by `weyl`; the target has `c(c+2)` variables.
pub const MAX_WEYL_RANK: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown example {key:?}; known: {}", known.join(", "))]
    UnknownKey { key: String, known: Vec<String> },
    #[error("bad parameters for {key}: {reason}")]
    BadParams { key: String, reason: String },
    #[error("polynomial must be a nonzero quadratic form")]
    NotQuadratic,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    RingMap(#[from] RingMapError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

#[derive(Debug, Clone)]
pub struct NamedExample {
    pub key: String,
    pub params: Vec<i64>,
    pub description: String,
    pub object: ExampleObject,
}

#[derive(Debug, Clone)]
pub enum ExampleObject {
    Ring { ring: QuotientRing, expected_configuration: Option<String> },
    Map(RingMap),
    Weyl(WeylData),
    QuinticCox(Box<QuinticCox>),
    Surface { form: Polynomial, expected_configuration: String },
}

impl ExampleObject {
    /// The ring map carried by the example, if any.
    pub fn map(&self) -> Option<&RingMap> {
        match self {
            ExampleObject::Map(m) => Some(m),
            ExampleObject::Weyl(w) => Some(&w.map),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeylData {
    pub c: usize,
    /// `(c+1) × c` matrix of variables `u{i}_{j}`.
    pub u: Vec<Vec<Polynomial>>,
    pub v: Vec<Polynomial>,
    /// `minors[i]` is the determinant with row `i` removed.
    pub minors: Vec<Polynomial>,
    /// `products[i] = Σ_j u{i}_{j} v{j}`.
    pub products: Vec<Polynomial>,
    /// From `quadric(2c+2)`: `x_{2i-1} -> (-1)^{i+1} minors[i]`, `x_{2i} -> products[i]`.
    pub map: RingMap,
}

#[derive(Debug, Clone)]
pub struct QuinticCox {
    /// `f12, f13, f14, f23, f24, f34, e1, e2, e3, e4`.
    pub ring: PolyRing,
    pub matrix: SkewMatrix,
    /// Pfaffians omitting indices 1 through 5.
    pub pfaffians: Vec<Polynomial>,
    /// Rows `H, E1, .., E4`: `f_ij -> H - E_i - E_j`, `e_i -> E_i`.
    pub naive_grading: MultiGrading,
    pub anticanonical_class: DegreeVector,
    pub anticanonical_elements: Vec<Polynomial>,
    /// The Cox ring with the section variable `t` appended.
    pub extended_ring: PolyRing,
    pub extended_action: TorusAction,
}

impl QuinticCox {
    pub fn pfaffian_ideal(&self) -> Result<Ideal, CatalogError> {
        Ok(Ideal::new(&self.ring, self.pfaffians.clone())?)
    }

    /// Each anticanonical element times `t`, in the extended ring.
    pub fn elements_times_t(&self) -> Vec<Polynomial> {
        let t = self.extended_ring.var(10);
        let index: Vec<usize> = (0..10).collect();
        self.anticanonical_elements.iter().map(|g| &g.relabel(&self.extended_ring, &index) * &t).collect()
    }
}

fn bad(key: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::BadParams { key: key.into(), reason: reason.into() }
}

fn param(key: &str, params: &[i64], i: usize, min: i64) -> Result<usize, CatalogError> {
    match params.get(i) {
        Some(&p) if p >= min => Ok(p as usize),
        Some(&p) => Err(bad(key, format!("parameter {} is {p}, must be at least {min}", i + 1))),
        None => Err(bad(key, format!("expected {} parameters", i + 1))),
    }
}

fn expect_arity(key: &str, params: &[i64], n: usize) -> Result<(), CatalogError> {
    if params.len() != n {
        return Err(bad(key, format!("expected {n} parameters, got {}", params.len())));
    }
    Ok(())
}

/// Splits `name(a,b)` into the key and its parameters.
pub fn parse_example_spec(spec: &str) -> Result<(String, Vec<i64>), CatalogError> {
    let spec = spec.trim();
    let Some(open) = spec.find('(') else { return Ok((spec.to_string(), Vec::new())) };
    let key = spec[..open].trim().to_string();
    let inner = spec[open + 1..].strip_suffix(')').ok_or_else(|| bad(&key, "missing closing parenthesis"))?;
    let params = inner
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<i64>().map_err(|_| bad(&key, format!("{s:?} is not an integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((key, params))
}

pub fn build_named_example(key: &str, params: &[i64]) -> Result<NamedExample, CatalogError> {
    let (description, object) = match key {
        "quadric" => {
            expect_arity(key, params, 1)?;
            let n = param(key, params, 0, 2)?;
            (format!("Q[x1..x{n}] modulo x1*x2 + x3*x4 + ..., ending in +x{n}^2 when {n} is odd"), ExampleObject::Ring {
                ring: quadric(n)?,
                expected_configuration: None,
            })
        }
        "segre" => {
            expect_arity(key, params, 0)?;
            ("Q[x,y,z,w]/(xw - yz) -> Q[u,v,s,t]: x -> us, y -> ut, z -> vs, w -> vt".into(), ExampleObject::Map(segre()?))
        }
        "veronese2" => {
            expect_arity(key, params, 0)?;
            ("Q[x,y,z]/(xz - y^2) -> Q[u,v]: u^2, uv, v^2".into(), ExampleObject::Map(veronese2()?))
        }
        "xnd" => {
            expect_arity(key, params, 2)?;
            let n = param(key, params, 0, 1)?;
            let d = param(key, params, 1, 1)?;
            if d > n {
                return Err(bad(key, format!("need d <= n, got n = {n}, d = {d}")));
            }
            (
                format!("Q[x0..x{n}]/(x0^{d} - x1*..*x{d}) -> Q[a0..a{}]: x0 -> a0*..*a{}, xi -> a(i-1)^{d}", n - 1, d - 1),
                ExampleObject::Map(xnd(n, d)?),
            )
        }
        "weyl" => {
            expect_arity(key, params, 1)?;
            let c = param(key, params, 0, 1)?;
            if c > MAX_WEYL_RANK {
                return Err(bad(key, format!("c = {c} exceeds {MAX_WEYL_RANK}")));
            }
            (
                format!(
                    "quadric({}) onto the maximal minors and inner products of a {} x {c} matrix with a vector",
                    2 * c + 2,
                    c + 1
                ),
                ExampleObject::Weyl(weyl(c)?),
            )
        }
        "dp5cox" => {
            expect_arity(key, params, 0)?;
            (
                "Cox ring of the quintic del Pezzo surface: the 5x5 skew matrix in f_ij and e_i, its five Pfaffians, the naive \
                 Picard grading, and six anticanonical sections"
                    .into(),
                ExampleObject::QuinticCox(Box::new(quintic_cox()?)),
            )
        }
        "dp4a" => {
            expect_arity(key, params, 0)?;
            let ring = PolyRing::parse_list("x,y,z,w,u")?;
            let ideal = Ideal::parse(&ring, &["w^2 - y*u", "x^2 - z*w"])?;
            ("toric quartic del Pezzo surface, a finite summand".into(), ExampleObject::Ring {
                ring: QuotientRing::new(ideal),
                expected_configuration: Some("A3+2A1".into()),
            })
        }
        "dp4b" => {
            expect_arity(key, params, 0)?;
            let ring = PolyRing::parse_list("x,y,z,w,u")?;
            let ideal = Ideal::parse(&ring, &["y*z - w*u", "x^2 - w*u"])?;
            ("toric quartic del Pezzo surface that is not a finite summand".into(), ExampleObject::Ring {
                ring: QuotientRing::new(ideal),
                expected_configuration: Some("4A1".into()),
            })
        }
        "cubic3A2" | "cubicA1A5" | "cubicE6" => {
            expect_arity(key, params, 0)?;
            let (text, config) = match key {
                "cubic3A2" => ("x^3 - y*z*w", "3A2"),
                "cubicA1A5" => ("y^3 + w*(x^2 + y*z)", "A1+A5"),
                _ => ("y^3 + w*(x^2 + z*w)", "E6"),
            };
            let form = PolyRing::parse_list("x,y,z,w")?.parse(text)?;
            (format!("cubic surface {text} = 0"), ExampleObject::Surface { form, expected_configuration: config.into() })
        }
        _ => {
            return Err(CatalogError::UnknownKey {
                key: key.into(),
                known: EXAMPLE_KEYS.iter().map(|s| s.to_string()).collect(),
            })
        }
    };
    Ok(NamedExample { key: key.into(), params: params.to_vec(), description, object })
}

/// `Q[x1..xn]/(x1 x2 + x3 x4 + ...)`, with `+ xn^2` closing the sum for odd `n`.
pub fn quadric(n: usize) -> Result<QuotientRing, CatalogError> {
    let ring = PolyRing::indexed("x", 1, n);
    let mut q = ring.zero();
    for i in (0..n - 1).step_by(2) {
        q = &q + &(&ring.var(i) * &ring.var(i + 1));
    }
    if n % 2 == 1 {
        q = &q + &ring.var(n - 1).pow(2);
    }
    Ok(QuotientRing::new(Ideal::new(&ring, vec![q])?))
}

fn map_from(source: &str, relations: &[&str], target: &str, images: &[&str]) -> Result<RingMap, CatalogError> {
    let src = QuotientRing::new(Ideal::parse(&PolyRing::parse_list(source)?, relations)?);
    let tgt = QuotientRing::polynomial(&PolyRing::parse_list(target)?);
    let ims = images.iter().map(|s| tgt.ambient().parse(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(RingMap::new(src, tgt, ims)?)
}

pub fn segre() -> Result<RingMap, CatalogError> {
    map_from("x,y,z,w", &["x*w - y*z"], "u,v,s,t", &["u*s", "u*t", "v*s", "v*t"])
}

pub fn veronese2() -> Result<RingMap, CatalogError> {
    map_from("x,y,z", &["x*z - y^2"], "u,v", &["u^2", "u*v", "v^2"])
}

/// `Q[x0..xn]/(x0^d - x1..xd) -> Q[a0..a(n-1)]`.
pub fn xnd(n: usize, d: usize) -> Result<RingMap, CatalogError> {
    let src_ring = PolyRing::indexed("x", 0, n + 1);
    let tgt_ring = PolyRing::indexed("a", 0, n);
    let mut product = src_ring.one();
    for i in 1..=d {
        product = &product * &src_ring.var(i);
    }
    let relation = &src_ring.var(0).pow(d as u32) - &product;
    let src = QuotientRing::new(Ideal::new(&src_ring, vec![relation])?);
    let mut images = Vec::with_capacity(n + 1);
    let mut first = tgt_ring.one();
    for j in 0..d {
        first = &first * &tgt_ring.var(j);
    }
    images.push(first);
    for j in 0..n {
        images.push(tgt_ring.var(j).pow(d as u32));
    }
    Ok(RingMap::new(src, QuotientRing::polynomial(&tgt_ring), images)?)
}

fn weyl_target(c: usize) -> Result<PolyRing, CatalogError> {
    let names = (1..=c + 1).flat_map(|i| (1..=c).map(move |j| format!("u{i}_{j}"))).chain((1..=c).map(|j| format!("v{j}")));
    Ok(PolyRing::new(names)?)
}

pub fn weyl(c: usize) -> Result<WeylData, CatalogError> {
    let ring = weyl_target(c)?;
    let u: Vec<Vec<Polynomial>> = (0..=c).map(|i| (0..c).map(|j| ring.var(i * c + j)).collect()).collect();
    let v: Vec<Polynomial> = (0..c).map(|j| ring.var((c + 1) * c + j)).collect();
    let mut minors = Vec::with_capacity(c + 1);
    let mut products = Vec::with_capacity(c + 1);
    for i in 0..=c {
        let rows: Vec<Vec<Polynomial>> = (0..=c).filter(|&r| r != i).map(|r| u[r].clone()).collect();
        minors.push(determinant(&ring, &rows)?);
        let mut p = ring.zero();
        for j in 0..c {
            p = &p + &(&u[i][j] * &v[j]);
        }
        products.push(p);
    }
    let mut images = Vec::with_capacity(2 * c + 2);
    for i in 0..=c {
        images.push(if i % 2 == 0 { minors[i].clone() } else { -&minors[i] });
        images.push(products[i].clone());
    }
    let map = RingMap::new(quadric(2 * c + 2)?, QuotientRing::polynomial(&ring), images)?;
    Ok(WeylData { c, u, v, minors, products, map })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylRelationCertificate {
    pub c: usize,
    /// Terms of `Σ (-1)^{i+1} Δ_i p_i` before collecting.
    pub expanded_terms: usize,
    pub cancels: bool,
}

/// Expands the alternating sum of minors times inner products and checks that
/// it vanishes.
pub fn verify_weyl_relation(c: usize) -> Result<WeylRelationCertificate, CatalogError> {
    if c == 0 {
        return Err(bad("weyl", "c must be at least 1"));
    }
    let w = weyl(c)?;
    let ring = w.map.target().ambient().clone();
    let mut sum = ring.zero();
    let mut expanded_terms = 0;
    for i in 0..=c {
        expanded_terms += w.minors[i].terms().len() * w.products[i].terms().len();
        let term = &w.minors[i] * &w.products[i];
        sum = if i % 2 == 0 { &sum + &term } else { &sum - &term };
    }
    Ok(WeylRelationCertificate { c, expanded_terms, cancels: sum.is_zero() })
}

/// Rank of the symmetric coefficient matrix of a quadratic form.
pub fn quadric_rank(q: &Polynomial) -> Result<usize, CatalogError> {
    if q.is_zero() || q.terms().iter().any(|(m, _)| m.degree() != 2) {
        return Err(CatalogError::NotQuadratic);
    }
    Ok(hessian_at_origin(q).rank)
}

const QUINTIC_VARIABLES: &str = "f12,f13,f14,f23,f24,f34,e1,e2,e3,e4";

/// Upper triangle of the displayed matrix, row by row.
pub const QUINTIC_MATRIX: [&[&str]; 5] =
    [&["f12", "f13", "f14", "f23"], &["f24", "f34", "e1"], &["e2", "e3"], &["e4"], &[]];

pub const QUINTIC_ANTICANONICAL: [&str; 6] = [
    "f12*f34^2*e3*e4",
    "f13*f23*f24*e2*e3",
    "f13*f23*f34*e3^2",
    "f13*f24^2*e2*e4",
    "f13*f24*f34*e3*e4",
    "f14*f24*f34*e4^2",
];

/// Pic-degrees `H - E_i - E_j` for `f_ij` and `E_i` for `e_i`, in the basis
/// `H, E1, .., E4`.
pub fn quintic_naive_grading() -> MultiGrading {
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let mut rows = vec![vec![0i64; 10]; 5];
    for (col, (i, j)) in pairs.iter().enumerate() {
        rows[0][col] = 1;
        rows[*i][col] = -1;
        rows[*j][col] = -1;
    }
    for i in 1..=4 {
        rows[i][5 + i] = 1;
    }
    MultiGrading::new(rows, 10).expect("10 columns")
}

pub fn quintic_cox() -> Result<QuinticCox, CatalogError> {
    let ring = PolyRing::parse_list(QUINTIC_VARIABLES)?;
    let matrix = SkewMatrix::parse(&ring, &QUINTIC_MATRIX)?;
    let pfaffians = (1..=5).map(|k| pfaffian(&matrix, k)).collect::<Result<Vec<_>, _>>()?;
    let naive_grading = quintic_naive_grading();
    let anticanonical_class = DegreeVector(vec![3, -1, -1, -1, -1]);
    let anticanonical_elements = QUINTIC_ANTICANONICAL.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>, _>>()?;
    let extended_ring = PolyRing::parse_list(&format!("{QUINTIC_VARIABLES},t"))?;
    let extended_action =
        extend_action_section_variable(&TorusAction::from_grading(naive_grading.clone()), &anticanonical_class)?;
    Ok(QuinticCox {
        ring,
        matrix,
        pfaffians,
        naive_grading,
        anticanonical_class,
        anticanonical_elements,
        extended_ring,
        extended_action,
    })
}

/// Index quadruples `(a, b, c, d)` of the three products in the Pfaffian
/// omitting `k` (0-based): `ab·cd`, `ac·bd`, `ad·bc`.
fn pfaffian_pairings(size: usize, k: usize) -> [[(usize, usize); 2]; 3] {
    let r: Vec<usize> = (0..size).filter(|&i| i != k).collect();
    let (a, b, c, d) = (r[0], r[1], r[2], r[3]);
    [[(a, b), (c, d)], [(a, c), (b, d)], [(a, d), (b, c)]]
}

/// A placement of the variables of a 5×5 skew matrix of distinct variables
/// into its upper-triangular positions under which every 4×4 Pfaffian is
/// homogeneous for `grading`, found by backtracking. Placements are tried in
/// lexicographic order of variable indices, so the result is deterministic.
pub fn homogeneous_relabeling(
    ring: &PolyRing,
    grading: &MultiGrading,
    variables: &[usize],
) -> Result<Option<SkewMatrix>, CatalogError> {
    let size = 5;
    let positions: Vec<(usize, usize)> = (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).collect();
    if variables.len() != positions.len() {
        return Err(CatalogError::Torus(TorusError::Shape(format!(
            "need {} variables, got {}",
            positions.len(),
            variables.len()
        ))));
    }
    let degrees: Vec<Vec<i64>> = variables.iter().map(|&v| grading.column(v)).collect();
    let pairings: Vec<[[(usize, usize); 2]; 3]> = (0..size).map(|k| pfaffian_pairings(size, k)).collect();
    let mut placed: Vec<Option<usize>> = vec![None; positions.len()];
    let mut used = vec![false; variables.len()];
    let slot = |p: (usize, usize)| positions.iter().position(|&q| q == p).expect("upper position");
    let consistent = |placed: &[Option<usize>]| -> bool {
        pairings.iter().all(|prods| {
            let sums: Vec<Vec<i64>> = prods
                .iter()
                .filter_map(|pair| {
                    let x = placed[slot(pair[0])]?;
                    let y = placed[slot(pair[1])]?;
                    Some(degrees[x].iter().zip(&degrees[y]).map(|(a, b)| a + b).collect())
                })
                .collect();
            sums.windows(2).all(|w| w[0] == w[1])
        })
    };
    fn search(
        pos: usize,
        placed: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        consistent: &dyn Fn(&[Option<usize>]) -> bool,
    ) -> bool {
        if pos == placed.len() {
            return true;
        }
        for v in 0..used.len() {
            if used[v] {
                continue;
            }
            placed[pos] = Some(v);
            used[v] = true;
            if consistent(placed) && search(pos + 1, placed, used, consistent) {
                return true;
            }
            used[v] = false;
            placed[pos] = None;
        }
        false
    }
    if !search(0, &mut placed, &mut used, &consistent) {
        return Ok(None);
    }
    let mut rows: Vec<Vec<Polynomial>> = vec![Vec::new(); size];
    for (p, v) in positions.iter().zip(&placed) {
        rows[p.0].push(ring.var(variables[v.expect("filled")]));
    }
    Ok(Some(SkewMatrix::from_upper_rows(ring, rows)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuinticGradingReport {
    pub pfaffians: Vec<String>,
    pub squares_match_determinants: bool,
    /// Per Pfaffian, whether it is homogeneous for the naive grading.
    pub naive_homogeneous: Vec<bool>,
    pub naive_violation: Option<String>,
    pub discovered_weights: Vec<Vec<i64>>,
    pub rank5_grading_exists: bool,
    pub naive_rows_in_discovered_span: bool,
    pub anticanonical_times_t_invariant: Vec<bool>,
    pub invariant_monomials_bound6: usize,
    pub anticanonical_times_t_listed: bool,
    /// Upper rows of a matrix whose Pfaffians are homogeneous for the naive
    /// grading, if a placement exists.
    pub relabeled_matrix: Option<Vec<Vec<String>>>,
    pub relabeled_anticanonical_dimension: Option<usize>,
    pub relabeled_anticanonical_rank: Option<usize>,
}

/// Checks the displayed Pfaffians against the naive grading and recovers
/// a grading and a relabeling that are consistent.
pub fn quintic_grading_report(q: &QuinticCox) -> Result<QuinticGradingReport, CatalogError> {
    use crate::graded::{check_homogeneous, discover_grading, graded_piece_basis, homogeneous_degree};
    use crate::linalg;
    use crate::poly::Scalar;
    use crate::torus::invariant_monomials;

    let mut squares = true;
    for (k, pf) in q.pfaffians.iter().enumerate() {
        squares &= pf * pf == determinant(&q.ring, &q.matrix.submatrix_omitting(k + 1)?)?;
    }
    let checks: Vec<Result<DegreeVector, GradedError>> =
        q.pfaffians.iter().map(|p| homogeneous_degree(p, &q.naive_grading)).collect();
    let naive_violation = checks.iter().find_map(|c| c.as_ref().err().map(|e| e.to_string()));
    let discovered = discover_grading(&q.pfaffian_ideal()?, 10);
    let to_q = |rows: &[Vec<i64>]| -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect()).collect()
    };
    let base = linalg::rank(&to_q(discovered.weights()));
    let mut all_rows = discovered.weights().to_vec();
    all_rows.extend(q.naive_grading.weights().iter().cloned());
    let in_span = linalg::rank(&to_q(&all_rows)) == base;

    let times_t = q.elements_times_t();
    let invariants = invariant_monomials(&q.extended_action, 6);
    let listed = times_t.iter().all(|g| g.terms().iter().all(|(m, _)| invariants.contains(m)));

    let relabeled = homogeneous_relabeling(&q.ring, &q.naive_grading, &(0..10).collect::<Vec<_>>())?;
    let (mut dimension, mut rank, mut rows) = (None, None, None);
    if let Some(m) = &relabeled {
        let pfs = (1..=5).map(|k| pfaffian(m, k)).collect::<Result<Vec<_>, _>>()?;
        let ideal = Ideal::new(&q.ring, pfs)?;
        check_homogeneous(&ideal, &q.naive_grading)?;
        let cox = QuotientRing::new(ideal);
        let basis = graded_piece_basis(&cox, &q.naive_grading, &q.anticanonical_class, 6)?;
        let coords: Vec<Vec<Scalar>> = q
            .anticanonical_elements
            .iter()
            .map(|g| {
                let nf = cox.reduce(g)?;
                Ok(basis
                    .iter()
                    .map(|b| nf.terms().iter().find(|(m, _)| m == b).map(|(_, c)| c.clone()).unwrap_or_default())
                    .collect())
            })
            .collect::<Result<_, CatalogError>>()?;
        dimension = Some(basis.len());
        rank = Some(linalg::rank(&coords));
        rows = Some((0..5).map(|i| (i + 1..5).map(|j| m.entry(i, j).to_string()).collect()).collect());
    }
    Ok(QuinticGradingReport {
        pfaffians: q.pfaffians.iter().map(|p| p.to_string()).collect(),
        squares_match_determinants: squares,
        naive_homogeneous: checks.iter().map(|c| c.is_ok()).collect(),
        naive_violation,
        rank5_grading_exists: discovered.rank() >= 5,
        discovered_weights: discovered.weights().to_vec(),
        naive_rows_in_discovered_span: in_span,
        anticanonical_times_t_invariant: times_t.iter().map(|g| q.extended_action.is_invariant_polynomial(g)).collect(),
        invariant_monomials_bound6: invariants.len(),
        anticanonical_times_t_listed: listed,
        relabeled_matrix: rows,
        relabeled_anticanonical_dimension: dimension,
        relabeled_anticanonical_rank: rank,
    })
}
