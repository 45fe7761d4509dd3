//! Periodic computational grids.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("box length along x1 must be a positive integer multiple of 2*pi, got periods = {0}")]
    IncommensurateBox(usize),
    #[error("grid dimensions must be positive powers of two, got {0}x{1}")]
    BadDimensions(usize, usize),
}

/// Fully periodic 2D grid, centered at the origin.
///
/// The x1-extent is an exact integer number of stripe periods so that the
/// unperturbed stripe is exactly periodic on the box. Points are
/// `x_j = -L/2 + j*dx`, so the origin is a grid point (at index n/2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid2 {
    pub nx: usize,
    pub ny: usize,
    /// Number of 2*pi stripe periods along x1; `lx = 2*pi*periods_x`.
    pub periods_x: usize,
    pub periods_y: usize,
}

impl Grid2 {
    pub fn new(nx: usize, ny: usize, periods_x: usize, periods_y: usize) -> Result<Self, GridError> {
        if periods_x == 0 || periods_y == 0 {
            return Err(GridError::IncommensurateBox(periods_x));
        }
        if nx == 0 || ny == 0 || !nx.is_power_of_two() || !ny.is_power_of_two() {
            return Err(GridError::BadDimensions(nx, ny));
        }
        Ok(Self { nx, ny, periods_x, periods_y })
    }

    pub fn lx(&self) -> f64 {
        2.0 * PI * self.periods_x as f64
    }

    pub fn ly(&self) -> f64 {
        2.0 * PI * self.periods_y as f64
    }

    pub fn dx(&self) -> f64 {
        self.lx() / self.nx as f64
    }

    pub fn dy(&self) -> f64 {
        self.ly() / self.ny as f64
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn x(&self, i: usize) -> f64 {
        -0.5 * self.lx() + i as f64 * self.dx()
    }

    pub fn y(&self, j: usize) -> f64 {
        -0.5 * self.ly() + j as f64 * self.dy()
    }

    /// Row-major index: row j (y), column i (x).
    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    /// Fourier wavenumber for DFT index `i` along x1 (signed, balanced).
    pub fn kx(&self, i: usize) -> f64 {
        let m = signed_index(i, self.nx);
        m as f64 * 2.0 * PI / self.lx()
    }

    pub fn ky(&self, j: usize) -> f64 {
        let m = signed_index(j, self.ny);
        m as f64 * 2.0 * PI / self.ly()
    }

    /// Samples a scalar closure on the grid, row-major.
    pub fn sample(&self, f: impl Fn(f64, f64) -> f64 + Sync) -> Vec<f64> {
        let mut out = vec![0.0; self.len()];
        for j in 0..self.ny {
            let y = self.y(j);
            for i in 0..self.nx {
                out[self.idx(i, j)] = f(self.x(i), y);
            }
        }
        out
    }

    /// Trapezoid (= midpoint on a periodic grid) quadrature of a sampled field.
    pub fn integrate(&self, field: &[f64]) -> f64 {
        debug_assert_eq!(field.len(), self.len());
        field.iter().sum::<f64>() * self.dx() * self.dy()
    }
}

/// Maps DFT index `i in 0..n` to the balanced signed index in `[-n/2, n/2)`.
pub fn signed_index(i: usize, n: usize) -> i64 {
    let i = i as i64;
    let n = n as i64;
    if i < n / 2 {
        i
    } else {
        i - n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_center_origin() {
        let g = Grid2::new(64, 32, 4, 2).unwrap();
        assert_eq!(g.x(32), 0.0);
        assert_eq!(g.y(16), 0.0);
        assert!((g.lx() - 8.0 * PI).abs() < 1e-14);
    }

    #[test]
    fn signed_indices_balanced() {
        assert_eq!(signed_index(0, 8), 0);
        assert_eq!(signed_index(3, 8), 3);
        assert_eq!(signed_index(4, 8), -4);
        assert_eq!(signed_index(7, 8), -1);
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(Grid2::new(100, 64, 4, 4).is_err());
        assert!(Grid2::new(64, 64, 0, 4).is_err());
    }
}
