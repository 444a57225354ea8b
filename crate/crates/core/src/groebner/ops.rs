use num_traits::Zero;
use serde::Serialize;

use super::{GroebnerBasis, GroebnerError, Ideal, MonomialOrder};
use crate::poly::{Monomial, PolyError, PolyRing, Polynomial, Scalar};
use crate::univariate::UniPoly;

/// A variable name not present in `ring`.
pub(crate) fn fresh_name(ring: &PolyRing, stem: &str) -> String {
    let mut k = 0;
    loop {
        let name = if k == 0 { stem.to_string() } else { format!("{stem}{k}") };
        if ring.var_index(&name).is_none() {
            return name;
        }
        k += 1;
    }
}

/// `I ∩ Q[kept variables]`, returned in the ring of the kept variables.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.arity();
    if let Some(&bad) = drop.iter().find(|&&i| i >= n) {
        return Err(PolyError::ArityMismatch { expected: n, got: bad + 1 }.into());
    }
    let kept: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let dropped: Vec<usize> = (0..n).filter(|i| drop.contains(i)).collect();
    let names = ring.variables();
    let perm_ring = PolyRing::new(dropped.iter().chain(kept.iter()).map(|&i| names[i].clone()))?;
    let mut index_map = vec![0; n];
    for (pos, &i) in dropped.iter().chain(kept.iter()).enumerate() {
        index_map[i] = pos;
    }
    let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.relabel(&perm_ring, &index_map)).collect();
    let k = dropped.len();
    let gb = Ideal::new(&perm_ring, gens)?.groebner(&MonomialOrder::BlockElimination { first_block: k })?;
    let kept_ring = PolyRing::new(kept.iter().map(|&i| names[i].clone()))?;
    let back: Vec<usize> = (0..n).map(|p| p.saturating_sub(k)).collect();
    let out = gb
        .basis()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| g.relabel(&kept_ring, &back))
        .collect();
    Ok(Ideal::new(&kept_ring, out)?)
}

/// Elimination by variable name.
pub fn eliminate_named(ideal: &Ideal, drop: &[&str]) -> Result<Ideal, GroebnerError> {
    let mut idx = Vec::with_capacity(drop.len());
    for name in drop {
        idx.push(
            ideal
                .ring()
                .var_index(name)
                .ok_or_else(|| PolyError::UnknownVariable { name: name.to_string(), position: 0 })?,
        );
    }
    eliminate(ideal, &idx)
}

/// `I ∩ J` via `t I + (1 - t) J` with `t` eliminated.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal, GroebnerError> {
    a.ring().check_same(b.ring())?;
    let ring = a.ring();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let t = fresh_name(ring, "t_");
    let ext = PolyRing::new(std::iter::once(t).chain(ring.variables().iter().cloned()))?;
    let shift: Vec<usize> = (1..=ring.arity()).collect();
    let tv = ext.var(0);
    let one_minus_t = &ext.one() - &tv;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(&tv * &g.relabel(&ext, &shift));
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.relabel(&ext, &shift));
    }
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[0])?;
    // same variable names as `ring`, so rebuild in the caller's ring value
    let gens = elim.generators().iter().map(|g| g.relabel(ring, &(0..ring.arity()).collect::<Vec<_>>())).collect();
    Ok(Ideal::new(ring, gens)?)
}

/// `I : J = { f : f J ⊆ I }`.
pub fn colon_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal, GroebnerError> {
    i.ring().check_same(j.ring())?;
    let ring = i.ring();
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let principal = Ideal::new(ring, vec![g.clone()])?;
        let meet = intersect(i, &principal)?;
        let quotients = meet
            .generators()
            .iter()
            .map(|h| h.div_exact(g).expect("element of (g) is divisible by g"))
            .collect();
        let part = Ideal::new(ring, quotients)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ring)))
}

/// `I : J^∞`, iterating colons until the chain stabilizes.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal, GroebnerError> {
    let mut cur = Ideal::new(i.ring(), i.default_basis()?.basis().to_vec())?;
    loop {
        let next = colon_ideal(&cur, j)?;
        if cur.contains_ideal(&next)? {
            return Ok(cur);
        }
        cur = Ideal::new(i.ring(), next.default_basis()?.basis().to_vec())?;
    }
}

/// Monomials outside the leading-monomial ideal; errors unless finitely many.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>, GroebnerError> {
    let ring = gb.ring();
    let n = ring.arity();
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let lms = gb.leading_monomials();
    let mut caps = vec![0u32; n];
    for (v, cap) in caps.iter_mut().enumerate() {
        let pure = lms
            .iter()
            .filter(|m| m.exponents().iter().enumerate().all(|(k, &e)| k == v || e == 0))
            .map(|m| m.exponents()[v])
            .min();
        *cap = pure.ok_or_else(|| GroebnerError::NotZeroDimensional { variable: ring.variables()[v].clone() })?;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    collect_standard(&lms, &caps, 0, &mut exps, &mut out);
    out.sort_by(|a, b| b.cmp_grevlex(a));
    Ok(out)
}

fn collect_standard(lms: &[&Monomial], caps: &[u32], v: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if v == caps.len() {
        let m = Monomial::new(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..caps[v] {
        exps[v] = e;
        // prune: if already divisible with the remaining exponents at zero, larger ones are too
        let probe = Monomial::new(exps.iter().enumerate().map(|(k, &x)| if k <= v { x } else { 0 }).collect());
        if lms.iter().any(|l| l.divides(&probe)) {
            break;
        }
        collect_standard(lms, caps, v + 1, exps, out);
    }
    exps[v] = 0;
}

/// `dim_Q Q[x]/I`, for zero-dimensional `I`.
pub fn zero_dim_vector_dimension(ideal: &Ideal) -> Result<usize, GroebnerError> {
    Ok(standard_monomials(&*ideal.default_basis()?)?.len())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalPoint {
    #[serde(serialize_with = "crate::report::ser_scalars")]
    pub coordinates: Vec<Scalar>,
    pub multiplicity: usize,
}

/// The rational points of a zero-dimensional scheme with their local lengths.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RationalPoints {
    pub points: Vec<RationalPoint>,
    pub total_length: usize,
    /// True when the local lengths at rational points add up to the total,
    /// i.e. there are no points with irrational coordinates.
    pub all_rational: bool,
}

impl RationalPoints {
    pub fn coordinates(&self) -> Vec<Vec<Scalar>> {
        self.points.iter().map(|p| p.coordinates.clone()).collect()
    }
}

/// Local length of `Q[x]/I` at `point`: `dim Q[x]/I - dim Q[x]/(I : m^∞)`.
pub fn local_length(ideal: &Ideal, point: &[Scalar]) -> Result<usize, GroebnerError> {
    let ring = ideal.ring();
    let maximal = Ideal::new(
        ring,
        (0..ring.arity()).map(|i| &ring.var(i) - &ring.constant(point[i].clone())).collect(),
    )?;
    let total = zero_dim_vector_dimension(ideal)?;
    let away = saturate(ideal, &maximal)?;
    Ok(total - zero_dim_vector_dimension(&away)?)
}

/// Every point of `V(I)` with rational coordinates, by back-substitution in a
/// lexicographic basis.
pub fn rational_points_zero_dim(ideal: &Ideal) -> Result<RationalPoints, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.arity();
    let total_length = zero_dim_vector_dimension(ideal)?;
    let lex = ideal.groebner(&MonomialOrder::Lex)?;
    let mut found = Vec::new();
    if !lex.is_unit() {
        // levels[k]: basis elements involving only x_k..x_{n-1} and x_k itself
        let mut levels: Vec<Vec<&Polynomial>> = vec![Vec::new(); n];
        for g in lex.basis() {
            if let Some(k) = (0..n).find(|&k| g.degree_in(k) > 0) {
                levels[k].push(g);
            }
        }
        let mut partial = vec![Scalar::zero(); n];
        back_substitute(&levels, n, &mut partial, &mut found);
    }
    found.sort();
    let mut points = Vec::with_capacity(found.len());
    let mut sum = 0;
    for p in found {
        let multiplicity = local_length(ideal, &p)?;
        sum += multiplicity;
        points.push(RationalPoint { coordinates: p, multiplicity });
    }
    Ok(RationalPoints { points, total_length, all_rational: sum == total_length })
}

fn back_substitute(levels: &[Vec<&Polynomial>], k: usize, partial: &mut Vec<Scalar>, out: &mut Vec<Vec<Scalar>>) {
    if k == 0 {
        out.push(partial.clone());
        return;
    }
    let v = k - 1;
    let mut g: Option<UniPoly> = None;
    for f in &levels[v] {
        let u = specialize(f, v, partial);
        g = Some(match g {
            None => u,
            Some(prev) => prev.gcd(&u),
        });
    }
    let Some(g) = g else {
        unreachable!("zero-dimensional lex basis has an element with leading power in every variable")
    };
    for root in g.rational_roots() {
        partial[v] = root;
        back_substitute(levels, v, partial, out);
    }
    partial[v] = Scalar::zero();
}

/// `f(x_v, partial[v+1..])` as a univariate polynomial in `x_v`.
fn specialize(f: &Polynomial, v: usize, partial: &[Scalar]) -> UniPoly {
    let mut coeffs = vec![Scalar::zero(); f.degree_in(v) as usize + 1];
    for (m, c) in f.terms() {
        let mut val = c.clone();
        for (k, &e) in m.exponents().iter().enumerate().skip(v + 1) {
            for _ in 0..e {
                val *= &partial[k];
            }
        }
        coeffs[m.exponents()[v] as usize] += val;
    }
    UniPoly::new(coeffs)
}
