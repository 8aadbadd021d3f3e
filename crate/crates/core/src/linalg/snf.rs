use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, One};

use super::matrix::Matrix;
use super::ring::{EuclideanDomain, Integers, IntegersMod, Rationals, Ring};

/// Invariant factors `d₁ | d₂ | … | d_r` and the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors that are not units (the torsion coefficients over ℤ).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|f| !f.magnitude().is_one())
            .cloned()
            .collect()
    }
}

struct Work<'a, D: EuclideanDomain> {
    domain: &'a D,
    rows: Vec<BTreeMap<usize, D::Elem>>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl<D: EuclideanDomain> Work<'_, D> {
    fn set(&mut self, r: usize, c: usize, v: D::Elem) {
        if self.domain.is_zero(&v) {
            self.rows[r].remove(&c);
            self.col_rows[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.col_rows[c].insert(r);
        }
    }

    /// row[target] -= q * row[source]
    fn row_axpy(&mut self, target: usize, source: usize, q: &D::Elem) {
        let src: Vec<(usize, D::Elem)> = self.rows[source]
            .iter()
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        for (c, v) in src {
            let cur = self.rows[target]
                .get(&c)
                .cloned()
                .unwrap_or_else(|| self.domain.zero());
            let next = self.domain.sub(&cur, &self.domain.mul(q, &v));
            self.set(target, c, next);
        }
    }

    fn best_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), D::Size)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                if self.domain.is_unit(v) {
                    return Some((r, c));
                }
                let s = self.domain.size(v);
                if best.as_ref().is_none_or(|(_, bs)| s < *bs) {
                    best = Some(((r, c), s));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    fn remove_row_and_col(&mut self, r: usize, c: usize) {
        let cols: Vec<usize> = self.rows[r].keys().copied().collect();
        for col in cols {
            self.col_rows[col].remove(&r);
        }
        self.rows[r].clear();
        let rows: Vec<usize> = self.col_rows[c].iter().copied().collect();
        for row in rows {
            self.rows[row].remove(&c);
        }
        self.col_rows[c].clear();
    }
}

/// Smith normal form over any of the supported Euclidean domains.
///
/// Sparse pivoting elimination: a pivot of minimal Euclidean size clears its
/// column with row operations and its row with column operations; a nonzero
/// remainder becomes the next pivot, so sizes strictly decrease.
pub fn smith_normal_form<D: EuclideanDomain>(domain: &D, m: &Matrix<D::Elem>) -> Vec<D::Elem> {
    let mut work = Work {
        domain,
        rows: vec![BTreeMap::new(); m.rows()],
        col_rows: vec![BTreeSet::new(); m.cols()],
    };
    for (r, c, v) in m.iter() {
        work.set(r, c, v.clone());
    }

    let mut diagonal = Vec::new();
    while let Some(mut pivot) = work.best_pivot() {
        'reduce: loop {
            let (i, j) = pivot;
            let a = work.rows[i][&j].clone();
            let others: Vec<usize> = work.col_rows[j].iter().copied().filter(|&k| k != i).collect();
            for k in others {
                let b = work.rows[k][&j].clone();
                let (q, r) = domain.div_rem(&b, &a);
                work.row_axpy(k, i, &q);
                if !domain.is_zero(&r) {
                    pivot = (k, j);
                    continue 'reduce;
                }
            }
            // Column j now meets only row i, so column operations touch row i alone.
            let rest: Vec<(usize, D::Elem)> = work.rows[i]
                .iter()
                .filter(|(&c, _)| c != j)
                .map(|(&c, v)| (c, v.clone()))
                .collect();
            for (l, b) in rest {
                let (_, r) = domain.div_rem(&b, &a);
                work.set(i, l, r.clone());
                if !domain.is_zero(&r) {
                    pivot = (i, l);
                    continue 'reduce;
                }
            }
            diagonal.push(a);
            work.remove_row_and_col(i, j);
            break;
        }
    }

    // Diagonal to divisibility chain: (a, b) -> (gcd, lcm) over all pairs.
    let n = diagonal.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = domain.gcd(&diagonal[i], &diagonal[j]);
            let prod = domain.mul(&diagonal[i], &diagonal[j]);
            let (l, _) = domain.div_rem(&prod, &g);
            diagonal[i] = g;
            diagonal[j] = l;
        }
    }
    diagonal.iter().map(|d| domain.normalize(d)).collect()
}

impl Ring {
    /// Smith normal form of an integer matrix after base change to this ring.
    pub fn smith_normal_form(&self, m: &Matrix) -> SmithForm {
        let factors: Vec<BigInt> = match *self {
            Ring::Integers => smith_normal_form(&Integers, &m.map(|&v| BigInt::from(v))),
            Ring::Rationals => {
                let q = Rationals;
                smith_normal_form(&q, &m.map(|&v| q.from_int(v)))
                    .into_iter()
                    .map(|f| f.to_integer())
                    .collect()
            }
            Ring::IntegersMod(p) => {
                let f = IntegersMod::new(p).expect("ring constructed with a prime modulus");
                smith_normal_form(&f, &m.map(|&v| f.from_int(v)))
                    .into_iter()
                    .map(BigInt::from)
                    .collect()
            }
        };
        SmithForm {
            rank: factors.len(),
            factors,
        }
    }

    pub fn rank(&self, m: &Matrix) -> usize {
        self.smith_normal_form(m).rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn empty_matrix() {
        let m = Matrix::zeros(0, 0);
        assert_eq!(
            Ring::Integers.smith_normal_form(&m),
            SmithForm { factors: vec![], rank: 0 }
        );
    }

    #[test]
    fn already_diagonal() {
        let m = Matrix::from_dense(&[vec![2, 0], vec![0, 6]]).unwrap();
        assert_eq!(Ring::Integers.smith_normal_form(&m).factors, ints(&[2, 6]));
    }

    #[test]
    fn non_divisible_diagonal_is_repaired() {
        let m = Matrix::from_dense(&[vec![4, 0], vec![0, 6]]).unwrap();
        assert_eq!(Ring::Integers.smith_normal_form(&m).factors, ints(&[2, 12]));
        let m = Matrix::from_dense(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
        assert_eq!(Ring::Integers.smith_normal_form(&m).factors, ints(&[2, 6, 12]));
    }

    #[test]
    fn circle_boundary() {
        // ∂₁ of the triangle circle, columns ab, ac, bc.
        let m = Matrix::from_dense(&[vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]).unwrap();
        let snf = Ring::Integers.smith_normal_form(&m);
        assert_eq!(snf.factors, ints(&[1, 1]));
        assert_eq!(snf.rank, 2);
    }

    #[test]
    fn fields_have_unit_factors() {
        let m = Matrix::from_dense(&[vec![2, 0], vec![0, 6]]).unwrap();
        assert_eq!(Ring::Rationals.smith_normal_form(&m).factors, ints(&[1, 1]));
        assert_eq!(Ring::IntegersMod(2).smith_normal_form(&m).rank, 0);
        assert_eq!(Ring::IntegersMod(3).smith_normal_form(&m).rank, 1);
        assert_eq!(Ring::IntegersMod(5).smith_normal_form(&m).rank, 2);
    }
}
