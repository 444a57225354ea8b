use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use super::{Budget, GroebnerError, Term};
use crate::poly::{Monomial, Scalar};

pub(crate) struct Output {
    pub basis: Vec<Vec<Term>>,
    pub spairs: usize,
}

struct Element {
    terms: Vec<Term>,
    sugar: u32,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// `a - c * q * b`, all inputs sorted descending under `order`.
fn sub_scaled(a: &[Term], c: &Scalar, q: &Monomial, b: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ai = a.iter().peekable();
    let mut bi = b.iter().map(|(m, k)| (q.mul(m), k * c)).peekable();
    loop {
        let step = match (ai.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
        };
        match step {
            Ordering::Greater => out.push(ai.next().unwrap().clone()),
            Ordering::Less => {
                let (m, k) = bi.next().unwrap();
                out.push((m, -k));
            }
            Ordering::Equal => {
                let (m, x) = ai.next().unwrap();
                let (_, y) = bi.next().unwrap();
                let v = x - y;
                if !v.is_zero() {
                    out.push((m.clone(), v));
                }
            }
        }
    }
    out
}

fn make_monic(mut f: Vec<Term>) -> Vec<Term> {
    let lc = f[0].1.clone();
    if !lc.is_one() {
        let inv = lc.recip();
        for (_, c) in f.iter_mut() {
            *c *= &inv;
        }
    }
    f
}

/// Division by monic `basis` elements. With `full == false` only the leading
/// term is reduced.
pub(crate) fn reduce(
    mut h: Vec<Term>,
    basis: &[&[Term]],
    order: &MonomialOrder,
    full: bool,
    max_terms: usize,
) -> Result<Vec<Term>, GroebnerError> {
    let mut rem: Vec<Term> = Vec::new();
    let mut pos = 0;
    while pos < h.len() {
        let m = &h[pos].0;
        let deg = m.degree();
        let reducer = basis.iter().find(|g| g[0].0.degree() <= deg && g[0].0.divides(m));
        match reducer {
            Some(g) => {
                let q = g[0].0.quotient_of(m).expect("divisibility checked");
                let c = h[pos].1.clone();
                h = sub_scaled(&h[pos + 1..], &c, &q, &g[1..], order);
                pos = 0;
                if h.len() > max_terms {
                    return Err(GroebnerError::BudgetExceeded { what: "term", limit: max_terms });
                }
            }
            None if !full => break,
            None => {
                rem.push(h[pos].clone());
                pos += 1;
            }
        }
    }
    rem.extend(h.drain(pos..));
    Ok(rem)
}

/// S-polynomial of two monic polynomials.
pub(crate) fn s_polynomial(f: &[Term], g: &[Term], order: &MonomialOrder) -> Vec<Term> {
    let lcm = f[0].0.lcm(&g[0].0);
    let qf = f[0].0.quotient_of(&lcm).unwrap();
    let qg = g[0].0.quotient_of(&lcm).unwrap();
    let ft: Vec<Term> = f[1..].iter().map(|(m, c)| (qf.mul(m), c / &f[0].1)).collect();
    let inv = g[0].1.recip();
    sub_scaled(&ft, &inv, &qg, &g[1..], order)
}

fn pair_sugar(store: &[Element], i: usize, j: usize, lcm: &Monomial) -> u32 {
    let side = |k: usize| store[k].sugar + lcm.degree() - store[k].terms[0].0.degree();
    side(i).max(side(j))
}

/// Gebauer–Möller update after adding element `h`.
fn update(store: &[Element], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lm_h = &store[h].terms[0].0;
    let mut cands: Vec<(usize, Monomial, bool)> = active
        .iter()
        .map(|&g| {
            let lm_g = &store[g].terms[0].0;
            (g, lm_h.lcm(lm_g), lm_h.is_coprime(lm_g))
        })
        .collect();
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while let Some((g, lcm, coprime)) = cands.pop() {
        let dominated = cands.iter().chain(kept.iter()).any(|(_, other, _)| other.divides(&lcm));
        if coprime || !dominated {
            kept.push((g, lcm, coprime));
        }
    }
    pairs.retain(|p| {
        let li = store[p.i].terms[0].0.lcm(lm_h);
        let lj = store[p.j].terms[0].0.lcm(lm_h);
        !lm_h.divides(&p.lcm) || li == p.lcm || lj == p.lcm
    });
    for (g, lcm, coprime) in kept {
        if !coprime {
            let sugar = pair_sugar(store, g, h, &lcm);
            pairs.push(Pair { i: g, j: h, lcm, sugar });
        }
    }
    active.retain(|&g| !lm_h.divides(&store[g].terms[0].0));
    active.push(h);
}

fn unit_output(arity: usize, spairs: usize) -> Output {
    Output { basis: vec![vec![(Monomial::one(arity), Scalar::one())]], spairs }
}

pub(crate) fn buchberger(inputs: Vec<Vec<Term>>, order: &MonomialOrder, budget: Budget) -> Result<Output, GroebnerError> {
    let mut inputs: Vec<Vec<Term>> = inputs.into_iter().filter(|f| !f.is_empty()).collect();
    let Some(arity) = inputs.first().map(|f| f[0].0.arity()) else {
        return Ok(Output { basis: Vec::new(), spairs: 0 });
    };
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));

    let mut store: Vec<Element> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for f in inputs {
        let f = make_monic(f);
        if f[0].0.is_one() {
            return Ok(unit_output(arity, 0));
        }
        let sugar = f.iter().map(|(m, _)| m.degree()).max().unwrap();
        store.push(Element { terms: f, sugar });
        update(&store, &mut active, &mut pairs, store.len() - 1);
    }

    // sugar degrees only pay off when the order refines total degree
    let by_sugar = matches!(order, MonomialOrder::DegRevLex);
    let mut spairs = 0;
    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let better = if by_sugar {
                (a.sugar, a.lcm.degree()) < (b.sugar, b.lcm.degree())
                    || ((a.sugar, a.lcm.degree()) == (b.sugar, b.lcm.degree()) && order.cmp(&a.lcm, &b.lcm) == Ordering::Less)
            } else {
                order.cmp(&a.lcm, &b.lcm) == Ordering::Less
            };
            if better {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        spairs += 1;
        if spairs > budget.max_spairs {
            return Err(GroebnerError::BudgetExceeded { what: "S-pair", limit: budget.max_spairs });
        }
        let s = s_polynomial(&store[pair.i].terms, &store[pair.j].terms, order);
        let refs: Vec<&[Term]> = active.iter().map(|&a| store[a].terms.as_slice()).collect();
        let h = reduce(s, &refs, order, true, budget.max_terms)?;
        if h.is_empty() {
            continue;
        }
        let h = make_monic(h);
        if h[0].0.is_one() {
            return Ok(unit_output(arity, spairs));
        }
        let deg = h.iter().map(|(m, _)| m.degree()).max().unwrap();
        store.push(Element { terms: h, sugar: pair.sugar.max(deg) });
        update(&store, &mut active, &mut pairs, store.len() - 1);
    }

    // minimalize, then interreduce tails
    let mut elems: Vec<&Vec<Term>> = active.iter().map(|&a| &store[a].terms).collect();
    elems.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<&Vec<Term>> = Vec::new();
    for e in elems {
        if !minimal.iter().any(|k| k[0].0.divides(&e[0].0)) {
            minimal.push(e);
        }
    }
    let mut basis = Vec::with_capacity(minimal.len());
    for (i, e) in minimal.iter().enumerate() {
        let others: Vec<&[Term]> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, k)| k.as_slice()).collect();
        let head = vec![e[0].clone()];
        let tail = reduce(e[1..].to_vec(), &others, order, true, budget.max_terms)?;
        let mut full = head;
        full.extend(tail);
        basis.push(make_monic(full));
    }
    basis.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    Ok(Output { basis, spairs })
}
