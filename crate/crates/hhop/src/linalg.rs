//! Exact linear algebra over the rationals and the integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lie::Scalar;

/// Sparse vector keyed by coordinate index.
pub type SparseVector = BTreeMap<usize, Scalar>;

/// A matrix stored by sparse columns.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub columns: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn new(rows: usize, columns: Vec<SparseVector>) -> Self {
        debug_assert!(columns.iter().all(|c| c.keys().all(|&r| r < rows)));
        SparseMatrix { rows, columns }
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// `self * v` for a vector in column coordinates.
    pub fn apply(&self, v: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (&j, c) in v {
            axpy(&mut out, c, &self.columns[j]);
        }
        out
    }

    /// `self * other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        SparseMatrix::new(
            self.rows,
            other.columns.iter().map(|c| self.apply(c)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![Scalar::zero(); self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (&i, c) in col {
                d[i][j] = c.clone();
            }
        }
        d
    }

    pub fn rank(&self) -> usize {
        ColumnEchelon::build(self).rank()
    }
}

/// `y += c * x`, dropping zeros.
pub fn axpy(y: &mut SparseVector, c: &Scalar, x: &SparseVector) {
    if c.is_zero() {
        return;
    }
    for (&i, v) in x {
        let add = c * v;
        match y.get_mut(&i) {
            Some(e) => {
                *e += add;
                if e.is_zero() {
                    y.remove(&i);
                }
            }
            None => {
                y.insert(i, add);
            }
        }
    }
}

struct Pivot {
    vector: SparseVector,
    combination: SparseVector,
}

/// Gaussian elimination on the columns of a matrix, recording for every
/// pivot the combination of original columns that produced it.
pub struct ColumnEchelon {
    pivots: BTreeMap<usize, Pivot>,
    kernel: Vec<SparseVector>,
}

impl ColumnEchelon {
    pub fn build(m: &SparseMatrix) -> Self {
        let mut e = ColumnEchelon {
            pivots: BTreeMap::new(),
            kernel: Vec::new(),
        };
        for (j, col) in m.columns.iter().enumerate() {
            let mut combo = SparseVector::new();
            combo.insert(j, Scalar::one());
            let (rest, combo) = e.reduce(col.clone(), combo);
            match rest.first_key_value() {
                Some((&lead, _)) => {
                    e.pivots.insert(
                        lead,
                        Pivot {
                            vector: rest,
                            combination: combo,
                        },
                    );
                }
                None => e.kernel.push(combo),
            }
        }
        e
    }

    fn reduce(&self, mut v: SparseVector, mut combo: SparseVector) -> (SparseVector, SparseVector) {
        let mut floor = 0usize;
        loop {
            let Some((&lead, c)) = v.range(floor..).next() else {
                return (v, combo);
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let factor = -(c / &p.vector[&lead]);
                    axpy(&mut v, &factor, &p.vector);
                    axpy(&mut combo, &factor, &p.combination);
                }
                // Pivot vectors start at their lead, so earlier entries stay put.
                None => floor = lead + 1,
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space in column coordinates.
    pub fn kernel(&self) -> &[SparseVector] {
        &self.kernel
    }

    /// Some `x` with `M x = target`, if one exists.
    pub fn solve(&self, target: &SparseVector) -> Option<SparseVector> {
        let (rest, combo) = self.reduce(target.clone(), SparseVector::new());
        if !rest.is_empty() {
            return None;
        }
        // target + M·combo = 0
        Some(combo.into_iter().map(|(k, v)| (k, -v)).collect())
    }

    /// Whether `target` lies in the column span.
    pub fn contains(&self, target: &SparseVector) -> bool {
        self.reduce(target.clone(), SparseVector::new())
            .0
            .is_empty()
    }
}

/// Entries as integers, if all are integral.
pub fn integer_matrix(m: &SparseMatrix) -> Option<Vec<Vec<BigInt>>> {
    let mut d = vec![vec![BigInt::zero(); m.cols()]; m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for (&i, c) in col {
            if !c.is_integer() {
                return None;
            }
            d[i][j] = c.to_integer();
        }
    }
    Some(d)
}

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
#[allow(clippy::needless_range_loop)] // row and column operations read two rows at once
pub fn elementary_divisors(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the remaining block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t].div_floor(&a[t][t]);
            if !q.is_zero() {
                for j in t..cols {
                    let sub = &q * &a[t][j];
                    a[i][j] -= sub;
                }
            }
            if !a[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            let q = a[t][j].div_floor(&a[t][t]);
            if !q.is_zero() {
                for i in t..rows {
                    let sub = &q * &a[i][t];
                    a[i][j] -= sub;
                }
            }
            if !a[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Enforce divisibility against the rest of the block.
        let p = a[t][t].clone();
        let offender = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !(&a[i][j] % &p).is_zero());
        if let Some((i, _)) = offender {
            for j in t..cols {
                let add = a[i][j].clone();
                a[t][j] += add;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_integer(n.into())
    }

    fn col(entries: &[(usize, i64)]) -> SparseVector {
        entries.iter().map(|&(i, v)| (i, q(v))).collect()
    }

    #[test]
    fn rank_kernel_solve() {
        let m = SparseMatrix::new(
            3,
            vec![
                col(&[(0, 1), (1, 2)]),
                col(&[(0, 2), (1, 4)]),
                col(&[(2, 1)]),
            ],
        );
        let e = ColumnEchelon::build(&m);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.kernel().len(), 1);
        assert!(m.apply(&e.kernel()[0]).is_empty());
        let target = col(&[(0, 3), (1, 6), (2, -1)]);
        let x = e.solve(&target).unwrap();
        assert_eq!(m.apply(&x), target);
        assert!(e.solve(&col(&[(0, 1)])).is_none());
    }

    #[test]
    fn smith_normal_form() {
        let a = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(4)],
            vec![BigInt::from(-6), BigInt::from(6), BigInt::from(12)],
            vec![BigInt::from(10), BigInt::from(-4), BigInt::from(-16)],
        ];
        let d = elementary_divisors(a);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let b = vec![
            vec![BigInt::from(2), BigInt::zero()],
            vec![BigInt::zero(), BigInt::from(3)],
        ];
        assert_eq!(
            elementary_divisors(b),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }
}
