//! Dense matrices over the rationals with exact row reduction.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_i, Rat};

/// Row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from integer literals (tests, builders).
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_i(x)).collect()).collect())
            .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self[(i, j)].is_zero() {
                    t[(j, i)] = self[(i, j)].clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product (column-vector convention).
    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimMismatch(self.cols, v.len()));
        }
        let mut out = vec![Rat::zero(); self.rows];
        for j in 0..self.cols {
            if v[j].is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= c;
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("add".into()));
        }
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        Ok(out)
    }

    /// Unique reduced row-echelon form; keeps the shape (zero rows at the
    /// bottom). The row space is preserved.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let s = &m[(r, j)] * &f;
                        m[(i, j)] -= s;
                    }
                }
            }
            r += 1;
            if r == m.rows {
                break;
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        let r = self.rref();
        (0..r.rows).filter(|&i| r.row(i).iter().any(|x| !x.is_zero())).count()
    }

    /// Basis of the null space `{v : M v = 0}` (not canonicalized).
    pub fn kernel_rows(&self) -> Vec<Vec<Rat>> {
        let r = self.rref();
        let mut pivot_of_row = Vec::new();
        for i in 0..r.rows {
            if let Some(c) = (0..r.cols).find(|&c| !r[(i, c)].is_zero()) {
                pivot_of_row.push((i, c));
            }
        }
        let pivot_cols: Vec<usize> = pivot_of_row.iter().map(|&(_, c)| c).collect();
        let mut out = Vec::new();
        for f in 0..self.cols {
            if pivot_cols.contains(&f) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for &(i, c) in &pivot_of_row {
                if !r[(i, f)].is_zero() {
                    v[c] = -r[(i, f)].clone();
                }
            }
            out.push(v);
        }
        out
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rat::zero();
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = -det;
            }
            det *= &m[(c, c)];
            let inv = m[(c, c)].recip();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() * &inv;
                for j in c..n {
                    let s = &m[(c, j)] * &f;
                    m[(i, j)] -= s;
                }
            }
        }
        det
    }

    /// Kronecker product; block (i,j) of the result is `self[i][j] * other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = &other[(p, q)];
                        if !b.is_zero() {
                            out[(i * other.rows + p, j * other.cols + q)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Basis of the space of linear maps `F` with `F A_x = B_x F` for all paired
/// operators. `a_mats` act on the domain (d_a square), `b_mats` on the
/// codomain (d_b square); the result consists of d_b x d_a matrices.
pub fn intertwiner_space(a_mats: &[Matrix], b_mats: &[Matrix]) -> Vec<Matrix> {
    assert_eq!(a_mats.len(), b_mats.len());
    let da = a_mats.first().map_or(0, Matrix::rows);
    let db = b_mats.first().map_or(0, Matrix::rows);
    if da == 0 || db == 0 {
        return Vec::new();
    }
    let unknowns = db * da;
    let mut rows = Vec::new();
    for (a, b) in a_mats.iter().zip(b_mats) {
        for r in 0..db {
            for c in 0..da {
                // entry (r,c) of F*A - B*F
                let mut row = vec![Rat::zero(); unknowns];
                for k in 0..da {
                    if !a[(k, c)].is_zero() {
                        row[r * da + k] += &a[(k, c)];
                    }
                }
                for k in 0..db {
                    if !b[(r, k)].is_zero() {
                        row[k * da + c] -= &b[(r, k)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zero(1, unknowns)
    } else {
        Matrix::from_rows(rows).expect("rectangular system")
    };
    system
        .kernel_rows()
        .into_iter()
        .map(|flat| {
            let mut f = Matrix::zero(db, da);
            for r in 0..db {
                for c in 0..da {
                    f[(r, c)] = flat[r * da + c].clone();
                }
            }
            f
        })
        .collect()
}

/// Searches the span of `basis` for an invertible matrix by evaluating the
/// determinant along the moment curve (1, t, t^2, ...). A nonzero polynomial
/// of the known degree bound cannot vanish at every sample point, so for
/// solution spaces where every nonzero map is invertible (the Schur
/// situation this is used in) the test is exact.
pub fn invertible_in_span(basis: &[Matrix]) -> Option<Matrix> {
    let m = basis.len();
    if m == 0 {
        return None;
    }
    let d = basis[0].rows();
    if d != basis[0].cols() {
        return None;
    }
    let points = d * (m - 1) + 1;
    for t in 0..points as i64 {
        let tv = rat_i(t);
        let mut g = Matrix::zero(d, d);
        let mut coef = Rat::one();
        for f in basis {
            g = g.add(&f.scale(&coef)).expect("same shape");
            coef *= &tv;
        }
        if !g.det().is_zero() {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn rref_examples() {
        // zero matrix is its own rref
        let z = Matrix::zero(2, 2);
        assert_eq!(z.rref(), z);
        // [[2,4],[1,2]] row-reduces to [[1,2],[0,0]]
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(m.rank(), 1);
        // identity is fixed
        let id = Matrix::identity(3);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(3, 1), rat(0, 1)],
            vec![rat(2, 3), rat(4, 1), rat(1, 5)],
            vec![rat(7, 6), rat(7, 1), rat(1, 5)],
        ])
        .unwrap();
        let r = m.rref();
        assert_eq!(r.rref(), r);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(2).kernel_rows().is_empty());
        let k = Matrix::from_i64(&[&[1, 1]]).kernel_rows();
        assert_eq!(k, vec![vec![rat_i(-1), rat_i(1)]]);
        assert_eq!(Matrix::zero(2, 2).kernel_rows().len(), 2);
    }

    #[test]
    fn det_and_trace() {
        let m = Matrix::from_i64(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, 8]]);
        assert_eq!(m.det(), rat_i(-128));
        assert_eq!(m.trace(), rat_i(8));
        assert_eq!(Matrix::zero(0, 0).det(), rat_i(1));
        assert_eq!(Matrix::from_i64(&[&[2, 4], &[1, 2]]).det(), rat_i(0));
    }

    #[test]
    fn intertwiners_of_distinct_scalars_vanish() {
        // a acts as 1 on the domain and 2 on the codomain: only F = 0 commutes
        let a = vec![Matrix::identity(1)];
        let b = vec![Matrix::identity(1).scale(&rat_i(2))];
        assert!(intertwiner_space(&a, &b).is_empty());
        // identical actions: every map commutes
        let s = intertwiner_space(&a, &a);
        assert_eq!(s.len(), 1);
        assert!(invertible_in_span(&s).is_some());
    }
}
