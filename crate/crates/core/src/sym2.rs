//! Closed-form algebra of real 2x2 matrices.

use nalgebra::{Matrix2, Vector2};

/// Spectral decomposition of a symmetric 2x2 matrix.
///
/// Eigenvalues are ordered descending. When they coincide the eigenbasis is
/// the identity basis, so the first eigenvector has zero angle to `e1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymEigen2 {
    pub values: [f64; 2],
    pub vectors: [Vector2<f64>; 2],
}

impl SymEigen2 {
    /// Decomposes the symmetric part of `m` using the discriminant formula.
    pub fn new(m: &Matrix2<f64>) -> Self {
        let a = m[(0, 0)];
        let c = m[(1, 1)];
        let b = 0.5 * (m[(0, 1)] + m[(1, 0)]);
        let mean = 0.5 * (a + c);
        let half_diff = 0.5 * (a - c);
        let radius = half_diff.hypot(b);
        let angle = 0.5 * b.atan2(half_diff);
        let (s, co) = angle.sin_cos();
        Self {
            values: [mean + radius, mean - radius],
            vectors: [Vector2::new(co, s), Vector2::new(-s, co)],
        }
    }

    pub fn gap(&self) -> f64 {
        self.values[0] - self.values[1]
    }
}

pub fn symmetrize(m: &Matrix2<f64>) -> Matrix2<f64> {
    0.5 * (m + m.transpose())
}

pub fn commutator(a: &Matrix2<f64>, b: &Matrix2<f64>) -> Matrix2<f64> {
    a * b - b * a
}

pub fn anticommutator(a: &Matrix2<f64>, b: &Matrix2<f64>) -> Matrix2<f64> {
    a * b + b * a
}

/// `(tr m)^2 - 4 det m`, the squared eigenvalue gap of a symmetric matrix.
pub fn shear_squared(m: &Matrix2<f64>) -> f64 {
    let tr = m.trace();
    tr * tr - 4.0 * m.determinant()
}

/// Frobenius norm of the trace-free part.
pub fn trace_free_norm(m: &Matrix2<f64>) -> f64 {
    let half = 0.5 * m.trace();
    (m - Matrix2::identity() * half).norm()
}

/// Rotation taking `e1, e2` to the given orthonormal pair.
pub fn rotation(angle: f64) -> Matrix2<f64> {
    let (s, c) = angle.sin_cos();
    Matrix2::new(c, -s, s, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix_keeps_identity_basis() {
        let e = SymEigen2::new(&Matrix2::new(3.0, 0.0, 0.0, 1.0));
        assert_eq!(e.values, [3.0, 1.0]);
        assert_eq!(e.vectors[0], Vector2::new(1.0, 0.0));
    }

    #[test]
    fn tie_breaks_on_e1() {
        let e = SymEigen2::new(&Matrix2::new(2.0, 0.0, 0.0, 2.0));
        assert_eq!(e.gap(), 0.0);
        assert_eq!(e.vectors[0], Vector2::new(1.0, 0.0));
    }

    #[test]
    fn descending_order_when_second_entry_dominates() {
        let e = SymEigen2::new(&Matrix2::new(1.0, 0.0, 0.0, 5.0));
        assert_eq!(e.values, [5.0, 1.0]);
        assert!((e.vectors[0].y.abs() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eigenpairs_satisfy_definition() {
        let m = Matrix2::new(0.3, -1.2, -1.2, 2.5);
        let e = SymEigen2::new(&m);
        for i in 0..2 {
            let r = m * e.vectors[i] - e.vectors[i] * e.values[i];
            assert!(r.norm() < 1e-14);
        }
        assert!(e.vectors[0].dot(&e.vectors[1]).abs() < 1e-15);
    }

    #[test]
    fn diagonal_pairs_commute() {
        let a = Matrix2::new(1.0, 0.0, 0.0, 2.0);
        let b = Matrix2::new(3.0, 0.0, 0.0, 5.0);
        assert_eq!(commutator(&a, &b).norm(), 0.0);
    }
}
