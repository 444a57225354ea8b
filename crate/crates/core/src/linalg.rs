//! Exact linear algebra over the rationals and the integers.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Scalar;

/// Row echelon form in place; returns the pivot columns.
fn echelon(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[r][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let mut a = m.to_vec();
    echelon(&mut a).len()
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel(m: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut a = m.to_vec();
    let pivots = echelon(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = b`, returning one solution if any exists.
pub fn solve(m: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Scalar>> = m.iter().zip(b).map(|(r, x)| {
        let mut row = r.clone();
        row.push(x.clone());
        row
    }).collect();
    let pivots = echelon(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

/// Congruence diagonalization of a symmetric matrix: returns `(d, p)` with
/// `p^T a p = diag(d)`, columns of `p` being the new coordinate directions.
pub fn symmetric_diagonalize(a: &[Vec<Scalar>]) -> (Vec<Scalar>, Vec<Vec<Scalar>>) {
    let n = a.len();
    let mut m = a.to_vec();
    // p stored as columns: p[col][row]
    let mut p: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect();
    let add_col = |m: &mut Vec<Vec<Scalar>>, p: &mut Vec<Vec<Scalar>>, dst: usize, src: usize, f: &Scalar| {
        // column and row operation: e_dst += f * e_src
        for r in 0..n {
            let v = &m[r][src] * f;
            m[r][dst] += v;
        }
        for c in 0..n {
            let v = &m[src][c] * f;
            m[dst][c] += v;
        }
        for r in 0..n {
            let v = &p[src][r] * f;
            p[dst][r] += v;
        }
    };
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
                p.swap(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // e_k += e_j makes the diagonal entry 2 m_kj (diagonal m_jj is zero here)
                add_col(&mut m, &mut p, k, j, &Scalar::one());
            }
        }
        if m[k][k].is_zero() {
            continue;
        }
        for j in k + 1..n {
            if !m[k][j].is_zero() {
                let f = -(&m[k][j] / &m[k][k]);
                add_col(&mut m, &mut p, j, k, &f);
            }
        }
    }
    let d = (0..n).map(|i| m[i][i].clone()).collect();
    (d, p)
}

pub fn to_int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Row-style Hermite normal form of an integer matrix. Zero rows are dropped,
/// pivots are positive and entries above each pivot are reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r >= m.len() {
            break;
        }
        // Euclid on column c among rows r..
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let piv = *nz.iter().min_by(|&&a, &&b| m[a][c].abs().cmp(&m[b][c].abs())).unwrap();
            m.swap(r, piv);
            let mut done = true;
            for i in r + 1..m.len() {
                if !m[i][c].is_zero() {
                    let q = m[i][c].div_floor(&m[r][c]);
                    for j in 0..cols {
                        let v = &m[r][j] * &q;
                        m[i][j] -= v;
                    }
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < m.len() && !m[r][c].is_zero() {
            if m[r][c].is_negative() {
                for x in m[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            for i in 0..r {
                let q = m[i][c].div_floor(&m[r][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let v = &m[r][j] * &q;
                        m[i][j] -= v;
                    }
                }
            }
            r += 1;
        }
    }
    m.truncate(r);
    m.retain(|row| row.iter().any(|x| !x.is_zero()));
    m
}

/// Hermite basis of the integer kernel `{w in Z^n : rows . w = 0}`.
pub fn integer_kernel(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    // Unimodular row reduction of [rows^T | I]; rows whose left part vanishes span the kernel.
    let m = rows.len();
    let aug: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigInt> = rows.iter().map(|r| r[i].clone()).collect();
            row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let reduced = full_hnf_keep_zero(aug, m);
    let basis: Vec<Vec<BigInt>> = reduced.into_iter().filter(|r| r[..m].iter().all(|x| x.is_zero())).map(|r| r[m..].to_vec()).collect();
    hermite_normal_form(&basis)
}

/// Echelonizes the first `left` columns by unimodular row operations, keeping all rows.
fn full_hnf_keep_zero(mut m: Vec<Vec<BigInt>>, left: usize) -> Vec<Vec<BigInt>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..left {
        if r >= m.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let piv = *nz.iter().min_by(|&&a, &&b| m[a][c].abs().cmp(&m[b][c].abs())).unwrap();
            m.swap(r, piv);
            let mut done = true;
            for i in r + 1..m.len() {
                if !m[i][c].is_zero() {
                    let q = m[i][c].div_floor(&m[r][c]);
                    for j in 0..cols {
                        let v = &m[r][j] * &q;
                        m[i][j] -= v;
                    }
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if !m[r][c].is_zero() {
            r += 1;
        }
    }
    m
}

/// A sublattice of `Z^n` in Hermite form, with membership testing.
#[derive(Debug, Clone, PartialEq)]
pub struct Lattice {
    pub dim: usize,
    pub basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn spanned_by(gens: &[Vec<i64>], dim: usize) -> Lattice {
        let rows: Vec<Vec<BigInt>> = gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Lattice { dim, basis: hermite_normal_form(&rows) }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut rem: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for row in &self.basis {
            let c = row.iter().position(|x| !x.is_zero()).expect("nonzero HNF row");
            if rem[c].is_zero() {
                continue;
            }
            let (q, r) = rem[c].div_rem(&row[c]);
            if !r.is_zero() {
                return false;
            }
            for j in 0..self.dim {
                let t = &row[j] * &q;
                rem[j] -= t;
            }
        }
        rem.iter().all(|x| x.is_zero())
    }

    /// Index `[Z^n : L]`, or `None` when the lattice is not of full rank.
    pub fn index(&self) -> Option<BigInt> {
        if self.rank() != self.dim {
            return None;
        }
        let mut det = BigInt::one();
        for row in &self.basis {
            let c = row.iter().position(|x| !x.is_zero()).unwrap();
            det *= &row[c];
        }
        Some(det.abs())
    }

    /// Diagonal of the Smith normal form (the elementary divisors).
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        smith_diagonal(&self.basis)
    }

    /// Canonical coset representatives of `Z^n / L` from the Hermite diagonal,
    /// for a full-rank lattice.
    pub fn coset_representatives(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        if self.rank() != self.dim {
            return None;
        }
        let diag: Vec<i64> = self
            .basis
            .iter()
            .map(|row| row.iter().find(|x| !x.is_zero()).unwrap().to_i64().expect("small lattice"))
            .collect();
        let mut reps = vec![vec![]];
        for &d in &diag {
            reps = reps
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..d).map(move |k| {
                        let mut p = prefix.clone();
                        p.push(k);
                        p
                    })
                })
                .collect();
        }
        Some(reps)
    }
}

fn smith_diagonal(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nr = m.len();
    let nc = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // find smallest nonzero in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..nr {
            let q = m[i][t].div_floor(&m[t][t]);
            for j in t..nc {
                let v = &m[t][j] * &q;
                m[i][j] -= v;
            }
            if !m[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..nc {
            let q = m[t][j].div_floor(&m[t][t]);
            for i in t..nr {
                let v = &m[i][t] * &q;
                m[i][j] -= v;
            }
            if !m[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility condition
        let mut fixed = false;
        'outer: for i in t + 1..nr {
            for j in t + 1..nc {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    for k in t..nc {
                        let v = m[i][k].clone();
                        m[t][k] += v;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue;
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::scalar;

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| scalar(x)).collect()).collect()
    }

    fn zm(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&qm(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&qm(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&qm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), 3);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = qm(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let dot: Scalar = row.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn diagonalization_is_congruence() {
        // x*y has a zero diagonal and needs the off-diagonal fix-up
        let a = qm(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let (d, p) = symmetric_diagonalize(&a);
        let n = 3;
        for i in 0..n {
            for j in 0..n {
                let mut s = Scalar::zero();
                for r in 0..n {
                    for c in 0..n {
                        s += &p[i][r] * &a[r][c] * &p[j][c];
                    }
                }
                let expect = if i == j { d[i].clone() } else { Scalar::zero() };
                assert_eq!(s, expect, "entry {i},{j}");
            }
        }
        assert_eq!(d.iter().filter(|x| !x.is_zero()).count(), 2);
    }

    #[test]
    fn integer_kernel_of_single_difference() {
        let k = integer_kernel(&zm(&[&[1, -1, -1, 1]]), 4);
        assert_eq!(k.len(), 3);
        let k = integer_kernel(&zm(&[&[2, -3]]), 2);
        assert_eq!(k, zm(&[&[3, 2]]));
        let k = integer_kernel(&[], 3);
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn lattice_index_and_membership() {
        let veronese = Lattice::spanned_by(&[vec![2, 0], vec![1, 1], vec![0, 2]], 2);
        assert_eq!(veronese.index(), Some(BigInt::from(2)));
        assert!(veronese.contains(&[3, 1]));
        assert!(!veronese.contains(&[1, 0]));
        let x33 = Lattice::spanned_by(&[vec![1, 1, 1], vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 3]], 3);
        assert_eq!(x33.index(), Some(BigInt::from(9)));
        assert_eq!(x33.elementary_divisors().iter().product::<BigInt>(), BigInt::from(9));
        assert_eq!(x33.coset_representatives().unwrap().len(), 9);
        let line = Lattice::spanned_by(&[vec![1, 0]], 2);
        assert_eq!(line.index(), None);
    }
}
