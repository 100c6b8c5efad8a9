use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// The K x N DFT matrix `W[k, n] = exp(-j 2 pi k n / K)`, applied through a
/// zero-padded length-K FFT. The matrix itself is never formed.
#[derive(Clone)]
pub struct DftOperator {
    grid_size: usize,
    num_samples: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for DftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DftOperator")
            .field("grid_size", &self.grid_size)
            .field("num_samples", &self.num_samples)
            .finish()
    }
}

impl DftOperator {
    pub fn new(grid_size: usize, num_samples: usize) -> Result<Self> {
        if num_samples == 0 {
            return Err(Error::param("DFT operator needs at least one column"));
        }
        if grid_size < num_samples {
            return Err(Error::Dimension {
                expected: num_samples,
                found: grid_size,
            });
        }
        let mut planner = FftPlanner::new();
        Ok(DftOperator {
            grid_size,
            num_samples,
            forward: planner.plan_fft_forward(grid_size),
            inverse: planner.plan_fft_inverse(grid_size),
        })
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn num_samples(&self) -> usize {
        self.num_samples
    }

    /// `W x`: length-N samples to length-K spectrum.
    pub fn forward(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.num_samples {
            return Err(Error::Dimension {
                expected: self.num_samples,
                found: x.len(),
            });
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); self.grid_size];
        buf[..x.len()].copy_from_slice(x);
        self.forward.process(&mut buf);
        Ok(buf)
    }

    /// `W^H y`: length-K spectrum to length-N samples.
    pub fn adjoint(&self, y: &[Complex64]) -> Result<Vec<Complex64>> {
        if y.len() != self.grid_size {
            return Err(Error::Dimension {
                expected: self.grid_size,
                found: y.len(),
            });
        }
        let mut buf = y.to_vec();
        // rustfft's inverse is unnormalized: sum_k y(k) exp(+j 2 pi k n / K)
        self.inverse.process(&mut buf);
        buf.truncate(self.num_samples);
        Ok(buf)
    }
}

/// `X(k) = sum_n x(n) exp(-j 2 pi k n / K)` for `k = 0..K`.
pub fn forward_transform(x: &[Complex64], grid_size: usize) -> Result<Vec<Complex64>> {
    DftOperator::new(grid_size, x.len())?.forward(x)
}

/// `(W^H y)(n) = sum_k y(k) exp(+j 2 pi k n / K)` for `n = 0..N`.
pub fn adjoint_transform(y: &[Complex64], num_samples: usize) -> Result<Vec<Complex64>> {
    DftOperator::new(y.len(), num_samples)?.adjoint(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn single_sample_spectrum_is_flat() {
        assert_eq!(
            forward_transform(&[c(1.0, 0.0)], 4).unwrap(),
            vec![c(1.0, 0.0); 4]
        );
    }

    #[test]
    fn two_point_dft() {
        assert_eq!(
            forward_transform(&[c(1.0, 0.0); 2], 2).unwrap(),
            vec![c(2.0, 0.0), c(0.0, 0.0)]
        );
    }

    // Direct sum of W(4,3) against [1+j, 2, -j].
    #[test]
    fn forward_matches_direct_sum_oracle() {
        let got = forward_transform(&[c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0)], 4).unwrap();
        let want = [c(3.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(1.0, 4.0)];
        assert!(close(&got, &want, 1e-12), "{got:?}");
    }

    #[test]
    fn adjoint_of_basis_spectrum() {
        let y = forward_transform(&[c(1.0, 0.0)], 4).unwrap();
        assert_eq!(adjoint_transform(&y, 1).unwrap(), vec![c(4.0, 0.0)]);
        let y = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert_eq!(adjoint_transform(&y, 2).unwrap(), vec![c(1.0, 0.0); 2]);
    }

    // Direct sum of W(8,3)^H against a fixed spectrum.
    #[test]
    fn adjoint_matches_direct_sum_oracle() {
        let y = [
            c(0.5, -0.25),
            c(-1.0, 0.75),
            c(0.0, 0.125),
            c(2.0, -1.0),
            c(-0.5, -0.5),
            c(0.3, 0.1),
            c(-0.2, 1.5),
            c(1.0, 0.0),
        ];
        let got = adjoint_transform(&y, 3).unwrap();
        let want = [
            c(2.1, 0.725),
            c(0.9961417766862323, 1.404594154601839),
            c(-1.6500000000000012, -6.075),
        ];
        assert!(close(&got, &want, 1e-12), "{got:?}");
    }

    #[test]
    fn undersized_grid_is_rejected() {
        assert!(matches!(
            forward_transform(&[c(1.0, 0.0); 3], 2),
            Err(Error::Dimension { .. })
        ));
        assert!(adjoint_transform(&[c(1.0, 0.0); 2], 3).is_err());
        let op = DftOperator::new(8, 3).unwrap();
        assert!(op.forward(&[c(1.0, 0.0); 4]).is_err());
        assert!(op.adjoint(&[c(1.0, 0.0); 7]).is_err());
    }
}
