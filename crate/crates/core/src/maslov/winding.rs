use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Steps at least this large are treated as aliasing.
pub const MAX_STEP: f64 = PI - 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindingResult {
    pub raw: f64,
    pub n: i64,
    pub residual: f64,
}

impl WindingResult {
    fn from_raw(raw: f64) -> Self {
        let n = raw.round() as i64;
        WindingResult {
            raw,
            n,
            residual: (raw - n as f64).abs(),
        }
    }
}

/// Sum of principal argument steps along `samples`, closing the loop if asked.
pub fn argument_increment(samples: &[Complex64], closed: bool) -> Result<f64> {
    if let Some(i) = samples
        .iter()
        .position(|z| z.norm() == 0.0 || !z.is_finite())
    {
        return Err(Error::ZeroSample(i));
    }
    let n = samples.len();
    let steps = if closed { n } else { n.saturating_sub(1) };
    let mut total = 0.0;
    for i in 0..steps {
        let step = (samples[(i + 1) % n] / samples[i]).arg();
        if step.abs() >= MAX_STEP {
            return Err(Error::Undersampled { at: i, jump: step });
        }
        total += step;
    }
    Ok(total)
}

/// Degree of a closed loop `z₀, …, z_{N−1}` (the step back to `z₀` included).
pub fn winding_number(samples: &[Complex64]) -> Result<WindingResult> {
    Ok(WindingResult::from_raw(
        argument_increment(samples, true)? / (2.0 * PI),
    ))
}

/// Argument increment over an open path in units of `π`. For a path ending
/// at minus its starting value this is an odd integer.
pub fn half_winding(samples: &[Complex64]) -> Result<WindingResult> {
    Ok(WindingResult::from_raw(
        argument_increment(samples, false)? / PI,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle(k: i64, n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|j| Complex64::from_polar(1.0, k as f64 * 2.0 * PI * j as f64 / n as f64))
            .collect()
    }

    #[test]
    fn unit_circle() {
        let w = winding_number(&circle(1, 128)).unwrap();
        assert_eq!(w.n, 1);
        assert!(w.residual < 1e-9);
    }

    #[test]
    fn constant_and_triple() {
        assert_eq!(
            winding_number(&[Complex64::new(2.0, -1.0); 10])
                .unwrap()
                .n,
            0
        );
        assert_eq!(winding_number(&circle(3, 128)).unwrap().n, 3);
        assert_eq!(winding_number(&circle(-5, 256)).unwrap().n, -5);
    }

    #[test]
    fn rejects_bad_loops() {
        let mut z = circle(1, 16);
        z[3] = Complex64::new(0.0, 0.0);
        assert_eq!(winding_number(&z), Err(Error::ZeroSample(3)));
        // two samples per turn put every step at ±π
        assert!(matches!(
            winding_number(&circle(8, 16)),
            Err(Error::Undersampled { .. })
        ));
    }

    #[test]
    fn half_turns() {
        let path: Vec<Complex64> = (0..=64)
            .map(|j| Complex64::from_polar(1.0, 3.0 * PI * j as f64 / 64.0))
            .collect();
        let w = half_winding(&path).unwrap();
        assert_eq!(w.n, 3);
        assert!(w.residual < 1e-9);
    }
}
