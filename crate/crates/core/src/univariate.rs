//! Dense univariate polynomials over the rationals: gcd, square-free
//! decomposition, and rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Scalar;

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &Scalar {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Scalar::from_integer(i.into())).collect(),
        )
    }

    pub fn evaluate(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        if rem.len() <= dd {
            return (UniPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        let lead_inv = d.lead().recip();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let v = &c * dc;
                    rem[k + j] -= v;
                }
            }
            quot[k] = c;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: `[(factor, multiplicity)]`, factors monic
    /// and of positive degree.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = sub(&c, &b.derivative());
        let mut i = 1;
        loop {
            let g = b.gcd(&d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            b = b.div_rem(&g).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&g).0;
            d = sub(&c, &b.derivative());
            i += 1;
        }
        out
    }

    /// All rational roots, ascending and without repetition, by the rational
    /// root theorem on the primitive integer form.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        // strip x^k
        let shift = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(Scalar::zero());
        }
        let reduced = UniPoly::new(self.coeffs[shift..].to_vec());
        if reduced.degree().unwrap_or(0) > 0 {
            let ints = primitive_integers(&reduced.coeffs);
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            let ps = divisors(&a0);
            let qs = divisors(&an);
            let mut cands: Vec<Scalar> = Vec::new();
            for p in &ps {
                for q in &qs {
                    let r = BigRational::new(p.clone(), q.clone());
                    cands.push(r.clone());
                    cands.push(-r);
                }
            }
            cands.sort();
            cands.dedup();
            for r in cands {
                if reduced.evaluate(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

fn sub(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    UniPoly::new(
        (0..n)
            .map(|i| {
                a.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero) - b.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
            })
            .collect(),
    )
}

fn primitive_integers(coeffs: &[Scalar]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in coeffs {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &l).to_integer()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    ints.into_iter().map(|v| v / &g).collect()
}

/// Positive divisors by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    // factor
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
        if p.to_u64().is_none_or(|x| x > 10_000_000) {
            break;
        }
    }
    if m > BigInt::one() {
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}
