//! Exact elimination over an integral domain.
//!
//! Over `ℚ[q, q⁻¹]` the rank is taken over the fraction field without ever
//! forming fractions: Bareiss elimination divides only by the previous pivot,
//! and that division is always exact. Field scalars (rationals, cyclotomic
//! residues) use ordinary Gaussian elimination with unit inverses.

use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<S>>,
}

/// Result of elimination: the echelon form and its pivot positions.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    pub matrix: DomainMatrix<S>,
    /// `(row, column)` of each pivot, rows increasing.
    pub pivots: Vec<(usize, usize)>,
}

impl<S: Scalar> DomainMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DomainMatrix { rows, cols, entries: vec![vec![S::zero(); cols]; rows] }
    }

    /// Panics when rows have different lengths.
    pub fn from_rows(entries: Vec<Vec<S>>) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        assert!(entries.iter().all(|r| r.len() == cols), "ragged matrix");
        DomainMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.entries[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.entries[r]
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.entries[r][c].clone()).collect())
            .collect();
        DomainMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DomainMatrix<T> {
        DomainMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    /// Rank over the fraction field of the scalar domain.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn echelon(&self) -> Echelon<S> {
        if S::IS_FIELD {
            self.gauss()
        } else {
            self.bareiss()
        }
    }

    fn find_pivot(m: &[Vec<S>], from: usize, col: usize) -> Option<usize> {
        (from..m.len()).find(|&r| !m[r][col].is_zero())
    }

    /// Fraction-free elimination. After step `k` every live entry is a
    /// `(k+1)`-minor of the input, so dividing by the previous pivot is exact.
    pub fn bareiss(&self) -> Echelon<S> {
        let mut m = self.entries.clone();
        let mut pivots = Vec::new();
        let mut prev = S::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = Self::find_pivot(&m, r, c) else { continue };
            m.swap(r, p);
            let (top, rest) = m.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pivot = pivot_row[c].clone();
            for row in rest.iter_mut() {
                let lead = row[c].clone();
                for j in c + 1..self.cols {
                    let num = pivot.mul_ref(&row[j]).sub_ref(&lead.mul_ref(&pivot_row[j]));
                    row[j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                row[c] = S::zero();
            }
            // Rows above the pivot row stay untouched; entries left of the
            // pivot in the pivot row are already zero.
            prev = pivot;
            pivots.push((r, c));
            r += 1;
        }
        Echelon { matrix: DomainMatrix { rows: self.rows, cols: self.cols, entries: m }, pivots }
    }

    /// Gaussian elimination with unit inverses; requires a field.
    pub fn gauss(&self) -> Echelon<S> {
        let mut m = self.entries.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = Self::find_pivot(&m, r, c) else { continue };
            m.swap(r, p);
            let inv = m[r][c].inverse().expect("nonzero field element is a unit");
            let (top, rest) = m.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let factor = row[c].mul_ref(&inv);
                for j in c..self.cols {
                    row[j] = row[j].sub_ref(&factor.mul_ref(&pivot_row[j]));
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        Echelon { matrix: DomainMatrix { rows: self.rows, cols: self.cols, entries: m }, pivots }
    }

    /// A basis of `{x : M x = 0}`, one vector per free column, with entries in
    /// the scalar domain (no fractions).
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let ech = self.echelon();
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let m = &ech.matrix.entries;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut x = vec![S::zero(); self.cols];
            x[free] = S::one();
            // Back substitution, clearing each pivot denominator by scaling the
            // partial solution.
            for &(r, c) in ech.pivots.iter().rev() {
                let mut acc = S::zero();
                for j in c + 1..self.cols {
                    if !m[r][j].is_zero() && !x[j].is_zero() {
                        acc = acc.add_ref(&m[r][j].mul_ref(&x[j]));
                    }
                }
                let p = &m[r][c];
                for v in x.iter_mut() {
                    *v = v.mul_ref(p);
                }
                x[c] = acc.neg_ref();
            }
            basis.push(x);
        }
        basis
    }

    /// A basis of `{y : yᵀ M = 0}`: linear relations among the rows.
    pub fn left_kernel(&self) -> Vec<Vec<S>> {
        self.transpose().kernel()
    }

    pub fn mul_vec(&self, x: &[S]) -> Vec<S> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(x).fold(S::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b))))
            .collect()
    }
}

/// Rank of `m` over the fraction field of its entries.
pub fn rank_fraction_free<S: Scalar>(m: &DomainMatrix<S>) -> usize {
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{CycloRes, LaurentPoly, Rational};

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    fn lp(n: i64) -> LaurentPoly {
        LaurentPoly::from_int(n)
    }

    #[test]
    fn identity_rank() {
        let m = DomainMatrix::from_rows(vec![vec![lp(1), lp(0)], vec![lp(0), lp(1)]]);
        assert_eq!(rank_fraction_free(&m), 2);
    }

    #[test]
    fn dependent_rows_over_laurent() {
        let m = DomainMatrix::from_rows(vec![vec![lp(1), q()], vec![q(), &q() * &q()]]);
        assert_eq!(m.rank(), 1);
        let with_zero = DomainMatrix::from_rows(vec![
            vec![lp(1), q()],
            vec![q(), &q() * &q()],
            vec![lp(0), lp(0)],
        ]);
        assert_eq!(with_zero.rank(), 1);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = DomainMatrix::from_rows(vec![
            vec![lp(1), q(), lp(2), lp(0)],
            vec![q(), lp(1), lp(0), q()],
            vec![&lp(1) + &q(), &lp(1) + &q(), lp(2), q()],
        ]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn cyclotomic_rank_uses_field_elimination() {
        // 1 + q + q^2 vanishes at level 3, making the rows dependent there only.
        let s = &(&lp(1) + &q()) + &(&q() * &q());
        let rows = vec![vec![lp(1), lp(1)], vec![lp(1), &lp(1) + &s]];
        let generic = DomainMatrix::from_rows(rows.clone());
        assert_eq!(generic.rank(), 2);
        let cyc = generic.map(|e| CycloRes::new(3, e).unwrap());
        assert_eq!(cyc.rank(), 1);
    }

    #[test]
    fn rational_left_kernel() {
        let r = |n: i64| Rational::from_integer(n.into());
        let m = DomainMatrix::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(4)], vec![r(0), r(1)]]);
        let lk = m.left_kernel();
        assert_eq!(lk.len(), 1);
        let t = m.transpose();
        assert!(t.mul_vec(&lk[0]).iter().all(num_traits::Zero::is_zero));
    }
}
