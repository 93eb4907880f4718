//! Algebra of the normal plane in null coordinates `N = a ℓ + b k`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Components of a normal vector on the null basis `{ℓ, k}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct NullCoords {
    pub ell: f64,
    pub k: f64,
}

impl NullCoords {
    pub const fn new(ell: f64, k: f64) -> Self {
        Self { ell, k }
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0)
    }

    /// From orthonormal components `N = a u + b n`.
    pub fn from_orthonormal(a: f64, b: f64) -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self::new(s * (a + b), s * (a - b))
    }

    /// The `u` and `n` components.
    pub fn to_orthonormal(self) -> (f64, f64) {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        (s * (self.ell + self.k), s * (self.ell - self.k))
    }

    /// `g(N, M)` with `g(ℓ,ℓ) = g(k,k) = 0`, `g(ℓ,k) = -1`.
    pub fn dot(self, other: Self) -> f64 {
        -(self.ell * other.k + self.k * other.ell)
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    /// `⋆⊥`: `ℓ → ℓ`, `k → -k`.
    pub fn star(self) -> Self {
        Self::new(self.ell, -self.k)
    }

    /// Components on the frame boosted by `-beta`, i.e. the canonical frame
    /// when `self` is expressed in a frame with boost `beta`.
    pub fn to_reference(self, beta: f64) -> Self {
        Self::new(self.ell * beta.exp(), self.k * (-beta).exp())
    }

    /// Inverse of [`NullCoords::to_reference`].
    pub fn from_reference(self, beta: f64) -> Self {
        self.to_reference(-beta)
    }

    /// Euclidean norm of the components.
    pub fn coordinate_norm(self) -> f64 {
        self.ell.hypot(self.k)
    }

    /// The normal-plane bivector component `a₁ b₂ - b₁ a₂`.
    pub fn wedge(self, other: Self) -> f64 {
        self.ell * other.k - self.k * other.ell
    }

    /// `|sin|` of the angle between two directions, measured in components.
    pub fn direction_gap(self, other: Self) -> f64 {
        let d = self.coordinate_norm() * other.coordinate_norm();
        if d == 0.0 {
            return 0.0;
        }
        (self.wedge(other) / d).abs()
    }

    pub fn normalized(self) -> Self {
        let n = self.coordinate_norm();
        if n == 0.0 {
            self
        } else {
            self * (1.0 / n)
        }
    }

    pub fn max_abs_diff(self, other: Self) -> f64 {
        (self.ell - other.ell).abs().max((self.k - other.k).abs())
    }
}

impl Add for NullCoords {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.ell + o.ell, self.k + o.k)
    }
}

impl Sub for NullCoords {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.ell - o.ell, self.k - o.k)
    }
}

impl Neg for NullCoords {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.ell, -self.k)
    }
}

impl Mul<f64> for NullCoords {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.ell * s, self.k * s)
    }
}
