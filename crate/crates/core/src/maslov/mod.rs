//! Maslov indices of explicit totally real tori and Klein bottles in `C²`.
//!
//! For `f = (x, u)` the surface is totally real exactly where
//! `J(x, u) = x_s u_t − x_t u_s` is nonzero, and the Maslov index of a loop is
//! twice the winding number of `J` along it. With `u = y + a·h` and `a`
//! large, `J` is dominated by `a·J(x, h)`, which gives the limit integrand.

pub mod immersion;
pub mod sl2;
pub mod winding;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use immersion::{Immersion, Jet, Reparametrized, SampledGrid, TrigFamily};
pub use sl2::sl2_realizer;
pub use winding::{half_winding, winding_number, WindingResult};

use crate::cyclic::Modulus;
use crate::error::{Error, Result};
use crate::surface::IndexClass;

pub const RESIDUAL_TOLERANCE: f64 = 1e-6;
/// `|J|` below this fraction of its grid maximum counts as vanishing.
pub const RELATIVE_J_TOLERANCE: f64 = 1e-9;
pub const MIN_GRID: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Torus,
    Klein,
}

/// Which function's winding numbers define the index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Integrand {
    /// `J(x, y + a·h)` at the given amplitude.
    Finite,
    /// `J(x, h)`, the `a → ∞` limit after dividing by `a`.
    Limit,
}

impl Integrand {
    pub fn eval(self, imm: &dyn Immersion, t: f64, s: f64) -> Complex64 {
        let jet = imm.jet(t, s);
        match self {
            Integrand::Finite => jet.jacobian(imm.amplitude()),
            Integrand::Limit => jet.j_xh(),
        }
    }
}

pub fn jacobian(imm: &dyn Immersion, t: f64, s: f64) -> Complex64 {
    Integrand::Finite.eval(imm, t, s)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TotalReality {
    pub ok: bool,
    pub min_j: f64,
    pub max_j: f64,
}

/// `|J| > RELATIVE_J_TOLERANCE · max |J|` at every point of the `n × n` grid.
pub fn total_reality_check(imm: &dyn Immersion, n: usize) -> Result<TotalReality> {
    if n < MIN_GRID {
        return Err(Error::InvalidArgument(format!(
            "grid must be at least {MIN_GRID}, got {n}"
        )));
    }
    let step = 2.0 * PI / n as f64;
    let mut min_j = f64::INFINITY;
    let mut max_j: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let v = jacobian(imm, i as f64 * step, j as f64 * step).norm();
            min_j = min_j.min(v);
            max_j = max_j.max(v);
        }
    }
    Ok(TotalReality {
        ok: max_j > 0.0 && min_j > RELATIVE_J_TOLERANCE * max_j,
        min_j,
        max_j,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaslovResult {
    pub index: IndexClass,
    pub windings: Vec<WindingResult>,
    pub min_j: f64,
}

impl MaslovResult {
    pub fn index_values(&self) -> Vec<i64> {
        self.index.to_i64s()
    }

    pub fn residuals(&self) -> Vec<f64> {
        self.windings.iter().map(|w| w.residual).collect()
    }
}

fn loop_samples(n: usize, f: impl Fn(f64) -> Complex64) -> Vec<Complex64> {
    (0..n).map(|j| f(2.0 * PI * j as f64 / n as f64)).collect()
}

fn accept(w: WindingResult) -> Result<WindingResult> {
    if w.residual >= RESIDUAL_TOLERANCE {
        return Err(Error::Residual {
            residual: w.residual,
            tolerance: RESIDUAL_TOLERANCE,
        });
    }
    Ok(w)
}

/// Index from the finite-amplitude integrand.
pub fn maslov_index(imm: &dyn Immersion, mode: Mode, n: usize) -> Result<MaslovResult> {
    maslov_index_with(imm, mode, n, Integrand::Finite)
}

/// Torus: `(2·wind_s, 2·wind_t)` along the loops `t = 0` and `s = 0`.
/// Klein bottle: `(m, 0)`, `m` the increment of `arg J` over `t ∈ [0, π]`
/// at `s = 0`, in units of `π`.
pub fn maslov_index_with(
    imm: &dyn Immersion,
    mode: Mode,
    n: usize,
    integrand: Integrand,
) -> Result<MaslovResult> {
    let tr = total_reality_check(imm, n)?;
    if !tr.ok {
        return Err(Error::NotTotallyReal { min_j: tr.min_j });
    }
    let phi = |t: f64, s: f64| integrand.eval(imm, t, s);
    let (coords, windings) = match mode {
        Mode::Torus => {
            let ws = accept(winding_number(&loop_samples(n, |s| phi(0.0, s)))?)?;
            let wt = accept(winding_number(&loop_samples(n, |t| phi(t, 0.0)))?)?;
            (vec![2 * ws.n, 2 * wt.n], vec![ws, wt])
        }
        Mode::Klein => {
            if !imm.klein_symmetric() {
                return Err(Error::InvalidArgument(format!(
                    "{} does not descend to a Klein bottle",
                    imm.name()
                )));
            }
            let half = n / 2;
            let path: Vec<Complex64> = (0..=half)
                .map(|i| phi(PI * i as f64 / half as f64, 0.0))
                .collect();
            let w = accept(half_winding(&path)?)?;
            (vec![w.n, 0], vec![w])
        }
    };
    Ok(MaslovResult {
        index: IndexClass::from_ints(Modulus::Infinite, &coords),
        windings,
        min_j: tr.min_j,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(k: i64, l: i64, a: f64) -> TrigFamily {
        TrigFamily::new(k, l, a).unwrap()
    }

    #[test]
    fn jacobian_matches_closed_form() {
        // a = 0: e^{i(k+l)t}[il cos²s − 2l cos s cos 2s + ik sin²s − k sin s sin 2s]
        for (k, l) in [(0, 1), (1, 1), (3, 2), (-2, 1)] {
            let f = fam(k, l, 0.0);
            for (t, s) in [(0.0, PI / 2.0), (0.3, 1.1), (2.0, -0.7)] {
                let (kf, lf) = (k as f64, l as f64);
                let inner = Complex64::new(
                    -2.0 * lf * s.cos() * (2.0 * s).cos() - kf * s.sin() * (2.0 * s).sin(),
                    lf * s.cos().powi(2) + kf * s.sin().powi(2),
                );
                let expected = Complex64::from_polar(1.0, (kf + lf) * t) * inner;
                assert!((jacobian(&f, t, s) - expected).norm() < 1e-12);
            }
        }
        assert!(jacobian(&fam(0, 1, 0.0), 0.0, PI / 2.0).norm() < 1e-12);
    }

    #[test]
    fn linear_in_amplitude() {
        for i in 0..100 {
            let t = 0.061 * i as f64;
            let s = 0.137 * i as f64;
            let a = 0.5 + i as f64 / 7.0;
            let jet = fam(2, 1, 0.0).jet(t, s);
            let diff = jacobian(&fam(2, 1, a), t, s) - jacobian(&fam(2, 1, 0.0), t, s);
            assert!((diff - a * jet.x_s * jet.h_t).norm() < 1e-9 * (1.0 + a));
        }
    }

    #[test]
    fn total_reality_examples() {
        let r = total_reality_check(&fam(1, 1, 10.0), 256).unwrap();
        assert!(r.ok);
        assert!(total_reality_check(&fam(1, 1, 10.0), 512).unwrap().ok);
        assert!(!total_reality_check(&fam(0, 1, 0.0), 256).unwrap().ok);
        assert!(total_reality_check(&fam(1, 1, 10.0), 32).is_err());
    }

    #[test]
    fn minimum_grows_with_amplitude() {
        let mins: Vec<f64> = [10.0, 20.0, 40.0, 80.0]
            .iter()
            .map(|&a| total_reality_check(&fam(1, 1, a), 64).unwrap().min_j)
            .collect();
        assert!(mins.windows(2).all(|w| w[1] > w[0]), "{mins:?}");
    }

    #[test]
    fn torus_and_klein_indices() {
        let r = maslov_index(&fam(0, 1, 10.0), Mode::Torus, 256).unwrap();
        assert_eq!(r.index_values(), vec![0, 2]);
        let r = maslov_index(&fam(1, 2, 10.0), Mode::Klein, 256).unwrap();
        assert_eq!(r.index_values(), vec![3, 0]);
        assert!(maslov_index(&fam(2, 2, 10.0), Mode::Klein, 256).is_err());
        assert!(matches!(
            maslov_index(&fam(0, 1, 0.0), Mode::Torus, 256),
            Err(Error::NotTotallyReal { .. })
        ));
    }
}
