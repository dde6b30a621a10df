//! Independent oracles shared by the integration tests.
//!
//! Lie elements are checked by expanding brackets into the tensor algebra,
//! where `[a, b] = (-1)^{|a|} (ab - (-1)^{|a||b|} ba)` in reduced degrees.
//! Signs are checked against explicit bubble sorts. Ranks of small matrices
//! use a dense rational elimination written here.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hhop::lie::{Letter, LieElement, LieMonomial, Scalar};
use hhop::linalg::{SparseMatrix, SparseVector};
use num_traits::{One, Zero};

pub type Word = Vec<Letter>;
pub type Tensor = BTreeMap<Word, Scalar>;

fn add_into(out: &mut Tensor, w: Word, c: Scalar) {
    *out.entry(w).or_insert_with(Scalar::zero) += c;
}

fn prune(mut t: Tensor) -> Tensor {
    t.retain(|_, c| !c.is_zero());
    t
}

fn expand_monomial(m: &LieMonomial) -> (Tensor, u32) {
    match m {
        LieMonomial::Leaf(l) => {
            let mut t = Tensor::new();
            t.insert(vec![l.clone()], Scalar::one());
            (t, l.degree())
        }
        LieMonomial::Bracket { left, right, .. } => {
            let (a, p) = expand_monomial(left);
            let (b, q) = expand_monomial(right);
            let outer = if p % 2 == 1 {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            let swap = if (p * q) % 2 == 1 {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            let mut out = Tensor::new();
            for (wa, ca) in &a {
                for (wb, cb) in &b {
                    let c = ca * cb * &outer;
                    let mut ab = wa.clone();
                    ab.extend(wb.iter().cloned());
                    add_into(&mut out, ab, c.clone());
                    let mut ba = wb.clone();
                    ba.extend(wa.iter().cloned());
                    add_into(&mut out, ba, -(c * &swap));
                }
            }
            (prune(out), p + q)
        }
    }
}

/// The image of a Lie element in the tensor algebra on its letters.
pub fn expand(e: &LieElement) -> Tensor {
    let mut out = Tensor::new();
    for (m, c) in e.terms() {
        for (w, d) in expand_monomial(m).0 {
            add_into(&mut out, w, d * c);
        }
    }
    prune(out)
}

/// Rank of a family of tensors, via the crate's sparse echelon over a
/// coordinate system built here.
pub fn tensor_rank(family: &[Tensor]) -> usize {
    let mut index: BTreeMap<&Word, usize> = BTreeMap::new();
    for t in family {
        for w in t.keys() {
            let n = index.len();
            index.entry(w).or_insert(n);
        }
    }
    let columns: Vec<SparseVector> = family
        .iter()
        .map(|t| t.iter().map(|(w, c)| (index[w], c.clone())).collect())
        .collect();
    SparseMatrix::new(index.len(), columns).rank()
}

/// Dense Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn dense_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for k in c..cols {
                    let v = &rows[rank][k] * &f;
                    rows[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn dense(m: &SparseMatrix) -> Vec<Vec<Scalar>> {
    let mut out = vec![vec![Scalar::zero(); m.cols()]; m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for (&i, c) in col {
            out[i][j] = c.clone();
        }
    }
    out
}

pub fn dense_product(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Scalar::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Sign of the permutation sorting `seq`, by counting bubble-sort swaps.
pub fn bubble_sign(seq: &[usize]) -> i32 {
    let mut v = seq.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

/// `sgn(I, J)` after discarding common elements.
pub fn oracle_sgn(first: &[usize], second: &[usize]) -> i32 {
    let a: Vec<usize> = first
        .iter()
        .copied()
        .filter(|x| !second.contains(x))
        .collect();
    let b: Vec<usize> = second
        .iter()
        .copied()
        .filter(|x| !first.contains(x))
        .collect();
    bubble_sign(&[a, b].concat())
}

/// Graded sign of sorting the concatenated blocks: every adjacent swap of
/// positions `a, b` contributes `(-1)^{p_a p_b + 1}`. Positions are 1-based.
pub fn oracle_gsn(degrees: &[u32], blocks: &[Vec<usize>]) -> i32 {
    let mut v: Vec<usize> = blocks.concat();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len().saturating_sub(1 + i) {
            if v[j] > v[j + 1] {
                if (degrees[v[j] - 1] * degrees[v[j + 1] - 1] + 1) % 2 == 1 {
                    sign = -sign;
                }
                v.swap(j, j + 1);
            }
        }
    }
    sign
}

/// Elements of `{0..n-1}` selected by `mask`.
pub fn subset(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}
