//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] always lives in a named [`PolyRing`]. Terms are stored
//! without zero coefficients, sorted descending in graded reverse
//! lexicographic order, so structural equality is mathematical equality.

mod calculus;
mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use calculus::{chart_localize, hessian_at_origin, partial_derivatives, HessianInfo};
pub use parse::parse_polynomial;

/// Exact rational coefficient. Always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn scalar(value: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(value))
}

pub fn scalar_frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("arity mismatch: expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid variable list: {0}")]
    InvalidRing(String),
    #[error("point {point} is not on chart `{chart}`")]
    PointNotOnChart { chart: String, point: String },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
}

/// An ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Arc<[String]>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::InvalidRing(format!("`{v}` is not an identifier")));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(PolyRing { vars: vars.into() })
    }

    /// Parses a comma and/or whitespace separated variable list.
    pub fn parse_list(list: &str) -> Result<Self, PolyError> {
        Self::new(list.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()))
    }

    /// Ring with variables `prefix0 .. prefix{n-1}` (or starting at `start`).
    pub fn indexed(prefix: &str, start: usize, n: usize) -> Self {
        Self::new((start..start + n).map(|i| format!("{prefix}{i}"))).expect("valid generated names")
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        let mut e = vec![0; self.arity()];
        e[i] = 1;
        Polynomial::monomial(self, Monomial::new(e), Scalar::one())
    }

    /// The variable with the given name, if present.
    pub fn var_named(&self, name: &str) -> Option<Polynomial> {
        self.var_index(name).map(|i| self.var(i))
    }

    pub fn gens(&self) -> Vec<Polynomial> {
        (0..self.arity()).map(|i| self.var(i)).collect()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Scalar::one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        Polynomial::monomial(self, Monomial::one(self.arity()), c)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, PolyError> {
        parse_polynomial(text, self)
    }

    pub(crate) fn check_same(&self, other: &PolyRing) -> Result<(), PolyError> {
        if self == other {
            Ok(())
        } else {
            Err(PolyError::RingMismatch { left: self.to_string(), right: other.to_string() })
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vars.join(","))
    }
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyRing[{}]", self.vars.join(","))
    }
}

/// Exponent vector. Its length always equals the arity of the owning ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Monomial {
    #[serde(rename = "exponents")]
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps: exps.into_boxed_slice() }
    }

    pub fn one(arity: usize) -> Self {
        Monomial::new(vec![0; arity])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::new(other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison, the canonical display order.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }

    pub fn render(&self, ring: &PolyRing) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { ring.vars[i].clone() } else { format!("{}^{}", ring.vars[i], e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn monomial(ring: &PolyRing, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.arity(), ring.arity(), "monomial arity must match ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(ring: &PolyRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity must match ring");
            *acc.entry(m).or_insert_with(Scalar::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_grevlex(&a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.ring.arity()))
    }

    /// Leading term in grevlex.
    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.arity()).filter(|&i| self.terms.iter().any(|(m, _)| m.exps[i] > 0)).collect()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exps[var]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        // multiplication by a monomial preserves grevlex order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Scales to integer coefficients with content one and positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        use num_integer::Integer;
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.terms.iter().map(|(_, c)| (c * &lcm).to_integer()).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .zip(ints)
                .map(|((m, _), v)| (m.clone(), BigRational::from_integer(v / &g)))
                .collect(),
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check_same(&other.ring)?;
        Ok(self.combine(other, &Scalar::one()))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check_same(&other.ring)?;
        Ok(self.combine(other, &-Scalar::one()))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.ring.check_same(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + factor * other`, by sorted merge.
    fn combine(&self, other: &Polynomial, factor: &Scalar) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_grevlex(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), &b[j].1 * factor));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1 * factor;
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), c * factor)));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_grevlex(&a.0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Evaluates the polynomial at `images` (one per variable), all in one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch { expected: self.ring.arity(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => self.ring.clone(),
        };
        for img in images {
            target.check_same(&img.ring)?;
        }
        if images.is_empty() {
            return Ok(self.clone());
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = target.constant(c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                prod = prod.mul_unchecked(&powers[i][e as usize]);
            }
            for (tm, tc) in prod.terms {
                *acc.entry(tm).or_insert_with(Scalar::zero) += tc;
            }
        }
        Ok(Polynomial::from_terms(&target, acc))
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.arity());
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps.iter()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable `index_map[i]`.
    pub fn relabel(&self, target: &PolyRing, index_map: &[usize]) -> Polynomial {
        assert_eq!(index_map.len(), self.ring.arity());
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; target.arity()];
                for (i, &x) in m.exps.iter().enumerate() {
                    e[index_map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Moves into a ring that contains all of this polynomial's variables by name.
    pub fn embed_by_name(&self, target: &PolyRing) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.ring.arity());
        for (i, name) in self.ring.vars.iter().enumerate() {
            match target.var_index(name) {
                Some(j) => map.push(j),
                None if self.degree_in(i) == 0 => map.push(usize::MAX),
                None => {
                    return Err(PolyError::RingMismatch { left: self.ring.to_string(), right: target.to_string() })
                }
            }
        }
        Ok(Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; target.arity()];
                for (i, &x) in m.exps.iter().enumerate() {
                    if x > 0 {
                        e[map[i]] += x;
                    }
                }
                (Monomial::new(e), c.clone())
            }),
        ))
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = lm.quotient_of(&m)?;
            let qc = c / lc;
            rem = rem.combine(&divisor.mul_monomial(&q, &qc), &-Scalar::one());
            quotient.push((q, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quotient))
    }

    /// Terms of total degree at most `k`.
    pub fn jet(&self, k: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= k).cloned().collect(),
        }
    }

    /// Terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).cloned().collect(),
        }
    }

    /// Integer coefficients as i64 when they fit; used for compact reporting.
    pub fn integer_coefficients(&self) -> Option<Vec<i64>> {
        self.terms.iter().map(|(_, c)| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }
}

fn fmt_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_scalar(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m.render(&self.ring))?;
            } else {
                write!(f, "{}*{}", fmt_scalar(&abs), m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Operator impls panic on ring mismatch; the checked_* methods return errors.
impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials in different rings")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials in different rings")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials in different rings")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Enumerates all exponent vectors of length `n` with total degree exactly `d`,
/// in descending lexicographic order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// All monomials of total degree at most `bound`, by increasing degree.
pub fn monomials_up_to(n: usize, bound: u32) -> Vec<Monomial> {
    (0..=bound).flat_map(|d| monomials_of_degree(n, d)).collect()
}
