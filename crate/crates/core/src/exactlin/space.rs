use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};

/// A subspace of k^n kept in semi-reduced echelon form, grown one vector at a time.
///
/// Row `r` has a unit at `pivots[r]`, and every later row vanishes there, so
/// reducing against the rows in insertion order is exact.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub field: FieldSpec,
    pub ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<'a>(
        field: FieldSpec,
        ambient: usize,
        vs: impl IntoIterator<Item = &'a Vec<Scalar>>,
    ) -> Subspace {
        let mut s = Subspace::new(field, ambient);
        for v in vs {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Residue of `v` after reduction; zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.sub_mul(&f, y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns true when the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// Basis vectors as the columns of a matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_cols(self.field, self.ambient, &self.rows)
    }

    /// Standard basis indices completing this subspace to the whole space.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|i| !self.pivots.contains(i))
            .collect()
    }
}

/// Coordinates with respect to a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinates {
    pub field: FieldSpec,
    vectors: Vec<Vec<Scalar>>,
    rows: Vec<usize>,
    inv: Matrix,
}

impl Coordinates {
    /// Panics if the vectors are dependent.
    pub fn new(field: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Coordinates {
        let r = vectors.len();
        let bt = Matrix::from_rows(field, vectors, ambient);
        let (_, rows) = bt.rref();
        assert_eq!(rows.len(), r, "coordinate family is linearly dependent");
        let sq = Matrix::from_cols(field, ambient, vectors).select_rows(&rows);
        let inv = sq.inverse().expect("pivot rows are independent");
        Coordinates {
            field,
            vectors: vectors.to_vec(),
            rows,
            inv,
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Coefficients expressing `w`, or None when `w` is outside the span.
    pub fn coords(&self, w: &[Scalar]) -> Option<Vec<Scalar>> {
        let picked: Vec<Scalar> = self.rows.iter().map(|&i| w[i].clone()).collect();
        let x = self.inv.mul_vec(&picked);
        let mut back = vec![self.field.zero(); w.len()];
        for (c, v) in x.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (b, y) in back.iter_mut().zip(v) {
                if !y.is_zero() {
                    b.add_mul(c, y);
                }
            }
        }
        (back.as_slice() == w).then_some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insertion_and_membership() {
        let f = FieldSpec::Rationals;
        let v = |xs: &[i64]| xs.iter().map(|&x| f.int(x)).collect::<Vec<_>>();
        let mut s = Subspace::new(f, 3);
        assert!(s.insert(v(&[1, 2, 0])));
        assert!(s.insert(v(&[0, 1, 1])));
        assert!(!s.insert(v(&[1, 3, 1])));
        assert!(s.contains(&v(&[2, 5, 1])));
        assert!(!s.contains(&v(&[0, 0, 1])));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.complement_indices().len(), 1);
    }
}
