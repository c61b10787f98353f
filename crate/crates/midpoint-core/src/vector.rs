//! Points and functionals: small dense vectors of mode-uniform scalars.

use core::ops::Index;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{Mode, Scalar, ToleranceBudget};

#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    /// All coordinates must share one scalar mode and dim must be ≥ 1.
    pub fn new(coords: Vec<Scalar>) -> Result<Vector> {
        if coords.is_empty() {
            return Err(Error::EmptyInput("vector needs at least one coordinate"));
        }
        let mode = coords[0].mode();
        if coords.iter().any(|c| c.mode() != mode) {
            return Err(Error::MixedMode);
        }
        Ok(Vector { coords })
    }

    pub fn from_f64s(coords: &[f64]) -> Vector {
        Vector { coords: coords.iter().map(|&v| Scalar::Float(v)).collect() }
    }

    pub fn from_ints(coords: &[i64]) -> Vector {
        Vector { coords: coords.iter().map(|&n| Scalar::from_int(n, Mode::Exact)).collect() }
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Vector {
        Vector { coords: coords.iter().map(|&(p, q)| Scalar::ratio(p, q)).collect() }
    }

    pub fn zero(dim: usize, mode: Mode) -> Vector {
        Vector { coords: vec![Scalar::zero(mode); dim] }
    }

    /// Standard basis vector `e_i`, 0-indexed.
    pub fn unit(dim: usize, i: usize, mode: Mode) -> Vector {
        let mut v = Vector::zero(dim, mode);
        v.coords[i] = Scalar::one(mode);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn mode(&self) -> Mode {
        self.coords[0].mode()
    }

    pub fn is_exact(&self) -> bool {
        self.mode() == Mode::Exact
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        self.coords.iter().map(|c| c.to_f64()).collect()
    }

    pub fn to_float_vector(&self) -> Vector {
        Vector { coords: self.coords.iter().map(|c| c.to_float_scalar()).collect() }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        Vector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        Vector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Vector {
        Vector { coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector { coords: self.coords.iter().map(|a| a * s).collect() }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        let mut acc = Scalar::zero(self.mode());
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc = &acc + &(a * b);
        }
        acc
    }

    pub fn midpoint(&self, other: &Vector) -> Vector {
        let half = match self.mode() {
            Mode::Exact => Scalar::ratio(1, 2),
            Mode::Float => Scalar::Float(0.5),
        };
        self.add(other).scale(&half)
    }

    pub fn approx_eq(&self, other: &Vector, tol: &ToleranceBudget) -> Result<bool> {
        if self.dim() != other.dim() {
            return Ok(false);
        }
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !crate::scalar::approx_eq(a, b, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Euclidean norm, always as a float.
    pub fn norm2_f64(&self) -> f64 {
        let mut acc = 0.0;
        for c in &self.coords {
            let v = c.to_f64();
            acc += v * v;
        }
        crate::math::sqrt(acc)
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_uniformity_enforced() {
        let v = Vector::new(vec![Scalar::Float(1.0), Scalar::from_int(2, Mode::Exact)]);
        assert!(matches!(v, Err(Error::MixedMode)));
    }

    #[test]
    fn midpoint_exact() {
        let a = Vector::from_ints(&[2, 1]);
        let b = Vector::from_ints(&[-2, 1]);
        let m = a.midpoint(&b);
        assert_eq!(m, Vector::from_ints(&[0, 1]));
    }
}
