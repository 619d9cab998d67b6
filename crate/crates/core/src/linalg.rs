//! Exact row reduction over a [`Field`].

use crate::field::Field;

/// A subspace of `Fⁿ` held in reduced row echelon form.
///
/// Rows are sorted by pivot column and every pivot is 1 with zeros above and
/// below it, so two spaces are equal iff their `RowSpace`s compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct RowSpace<F> {
    ncols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole space `Fⁿ`.
    pub fn full(ncols: usize) -> Self {
        let rows = (0..ncols)
            .map(|i| {
                let mut r = vec![F::zero(); ncols];
                r[i] = F::one();
                r
            })
            .collect();
        RowSpace {
            ncols,
            rows,
            pivots: (0..ncols).collect(),
        }
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut space = Self::new(ncols);
        for r in rows {
            space.insert(r);
        }
        space
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ncols, "vector length does not match row space");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (o, r) in out.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *o = o.clone() - factor.clone() * r.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Adds `v` to the space. Returns the new normalized row when `v` was
    /// independent of the existing rows.
    pub fn insert(&mut self, v: Vec<F>) -> Option<Vec<F>> {
        let mut r = self.reduce(&v);
        let pivot = r.iter().position(|c| !c.is_zero())?;
        let lead = r[pivot].clone();
        for c in r.iter_mut().skip(pivot) {
            *c = c.clone() / lead.clone();
        }
        for row in &mut self.rows {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (x, y) in row.iter_mut().zip(&r).skip(pivot) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, r.clone());
        self.pivots.insert(at, pivot);
        Some(r)
    }

    pub fn is_subspace_of(&self, other: &RowSpace<F>) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

/// Kernel of the linear map whose `j`-th column is `columns[j]`, each of
/// length `target_dim`. The result lives in `F^{columns.len()}`.
pub fn kernel_of_columns<F: Field>(target_dim: usize, columns: &[Vec<F>]) -> RowSpace<F> {
    let n = columns.len();
    let image = RowSpace::from_rows(
        n,
        (0..target_dim).map(|i| columns.iter().map(|c| c[i].clone()).collect::<Vec<_>>()),
    );
    let mut kernel = RowSpace::new(n);
    let pivots = image.pivots();
    for free in (0..n).filter(|j| !pivots.contains(j)) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (row, &p) in image.rows().iter().zip(pivots) {
            v[p] = -row[free].clone();
        }
        kernel.insert(v);
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = RowSpace::from_rows(3, [qs(&[1, 2, 3]), qs(&[2, 4, 7])]);
        let b = RowSpace::from_rows(3, [qs(&[0, 0, 1]), qs(&[3, 6, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.rows(), &[qs(&[1, 2, 0]), qs(&[0, 0, 1])]);
        assert_eq!(a.pivots(), &[0, 2]);
        assert!(a.contains(&qs(&[2, 4, 5])));
        assert!(!a.contains(&qs(&[0, 1, 0])));
    }

    #[test]
    fn dependent_insert_returns_none() {
        let mut s = RowSpace::from_rows(2, [qs(&[1, 1])]);
        assert!(s.insert(qs(&[2, 2])).is_none());
        assert_eq!(s.insert(qs(&[0, 3])), Some(qs(&[0, 1])));
        assert!(s.is_full());
        assert_eq!(s, RowSpace::full(2));
    }

    #[test]
    fn kernel_examples() {
        // columns (1,1), (2,2), (0,1) → kernel spanned by (-2, 1, 0)
        let k = kernel_of_columns(2, &[qs(&[1, 1]), qs(&[2, 2]), qs(&[0, 1])]);
        assert_eq!(k.rank(), 1);
        assert!(k.contains(&qs(&[-2, 1, 0])));
        let all = kernel_of_columns::<Rational>(0, &[vec![], vec![]]);
        assert!(all.is_full());
    }
}
