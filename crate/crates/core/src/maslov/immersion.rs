use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Values and first partials of `(x, y, h)` at one point of the parameter
/// square. The immersion is `(t, s) ↦ (x, y + a·h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub x: Complex64,
    pub y: Complex64,
    pub h: Complex64,
    pub x_t: Complex64,
    pub x_s: Complex64,
    pub y_t: Complex64,
    pub y_s: Complex64,
    pub h_t: Complex64,
    pub h_s: Complex64,
}

/// `J(f, g) = f_s g_t − f_t g_s`.
fn j(f_s: Complex64, f_t: Complex64, g_s: Complex64, g_t: Complex64) -> Complex64 {
    f_s * g_t - f_t * g_s
}

impl Jet {
    pub fn j_xy(&self) -> Complex64 {
        j(self.x_s, self.x_t, self.y_s, self.y_t)
    }

    pub fn j_xh(&self) -> Complex64 {
        j(self.x_s, self.x_t, self.h_s, self.h_t)
    }

    /// `J(x, y + a·h) = J(x, y) + a·J(x, h)`.
    pub fn jacobian(&self, a: f64) -> Complex64 {
        self.j_xy() + a * self.j_xh()
    }

    /// Partials along `b∂s + p∂t` and `c∂s + r∂t`, reported as new `s` and `t`.
    pub fn reparametrize(&self, b: f64, c: f64, p: f64, r: f64) -> Jet {
        let along = |fs: Complex64, ft: Complex64| (b * fs + p * ft, c * fs + r * ft);
        let (x_s, x_t) = along(self.x_s, self.x_t);
        let (y_s, y_t) = along(self.y_s, self.y_t);
        let (h_s, h_t) = along(self.h_s, self.h_t);
        Jet {
            x_t,
            x_s,
            y_t,
            y_s,
            h_t,
            h_s,
            ..*self
        }
    }
}

/// A doubly periodic map of the parameter square into `C²`.
pub trait Immersion: Send + Sync {
    fn name(&self) -> String;

    fn jet(&self, t: f64, s: f64) -> Jet;

    /// The coefficient `a` of `h`.
    fn amplitude(&self) -> f64;

    /// Whether `(t, s) ↦ (t + π, −s)` preserves the map.
    fn klein_symmetric(&self) -> bool {
        false
    }
}

/// `x = e^{ikt}(sin s + i sin 2s)`, `y = e^{ilt} cos s`, `h = e^{ilt}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigFamily {
    pub k: i64,
    pub l: i64,
    pub a: f64,
}

impl TrigFamily {
    pub fn new(k: i64, l: i64, a: f64) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidArgument("l must be nonzero".into()));
        }
        if !a.is_finite() {
            return Err(Error::InvalidArgument("a must be finite".into()));
        }
        Ok(TrigFamily { k, l, a })
    }
}

impl Immersion for TrigFamily {
    fn name(&self) -> String {
        format!("trig(k={}, l={}, a={})", self.k, self.l, self.a)
    }

    fn jet(&self, t: f64, s: f64) -> Jet {
        let (k, l) = (self.k as f64, self.l as f64);
        let ekt = Complex64::from_polar(1.0, k * t);
        let elt = Complex64::from_polar(1.0, l * t);
        let x = ekt * Complex64::new(s.sin(), (2.0 * s).sin());
        let x_s = ekt * Complex64::new(s.cos(), 2.0 * (2.0 * s).cos());
        let y = elt * s.cos();
        Jet {
            x,
            y,
            h: elt,
            x_t: I * k * x,
            x_s,
            y_t: I * l * y,
            y_s: -elt * s.sin(),
            h_t: I * l * elt,
            h_s: Complex64::new(0.0, 0.0),
        }
    }

    fn amplitude(&self) -> f64 {
        self.a
    }

    fn klein_symmetric(&self) -> bool {
        self.k.rem_euclid(2) == 1 && self.l.rem_euclid(2) == 0
    }
}

/// Values of `(x, y, h)` on the grid `(2πi/n, 2πj/n)`, indexed `[i * n + j]`
/// with `i` the `t` index. Partials come from central differences.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledGrid {
    pub n: usize,
    pub a: f64,
    pub x: Vec<Complex64>,
    pub y: Vec<Complex64>,
    pub h: Vec<Complex64>,
    pub klein: bool,
}

impl SampledGrid {
    pub fn new(
        n: usize,
        a: f64,
        x: Vec<Complex64>,
        y: Vec<Complex64>,
        h: Vec<Complex64>,
    ) -> Result<Self> {
        if n < 4 || [&x, &y, &h].iter().any(|v| v.len() != n * n) {
            return Err(Error::InvalidArgument(format!(
                "sampled grid needs n >= 4 and n*n values per function (n = {n})"
            )));
        }
        Ok(SampledGrid {
            n,
            a,
            x,
            y,
            h,
            klein: false,
        })
    }

    /// Samples any immersion on the `n × n` grid.
    pub fn sample(source: &dyn Immersion, n: usize) -> Result<Self> {
        let step = 2.0 * PI / n as f64;
        let mut x = Vec::with_capacity(n * n);
        let mut y = Vec::with_capacity(n * n);
        let mut h = Vec::with_capacity(n * n);
        for i in 0..n {
            for jdx in 0..n {
                let (t, s) = (i as f64 * step, jdx as f64 * step);
                let jet = source.jet(t, s);
                x.push(jet.x);
                y.push(jet.y);
                h.push(jet.h);
            }
        }
        let mut g = SampledGrid::new(n, source.amplitude(), x, y, h)?;
        g.klein = source.klein_symmetric();
        Ok(g)
    }

    fn index(&self, t: f64, s: f64) -> (usize, usize) {
        let n = self.n as f64;
        let to = |u: f64| ((u / (2.0 * PI) * n).round().rem_euclid(n)) as usize;
        (to(t), to(s))
    }

    fn at(&self, f: &[Complex64], i: isize, jdx: isize) -> Complex64 {
        let n = self.n as isize;
        f[(i.rem_euclid(n) * n + jdx.rem_euclid(n)) as usize]
    }

    fn partials(&self, f: &[Complex64], i: usize, jdx: usize) -> (Complex64, Complex64) {
        let (i, jdx) = (i as isize, jdx as isize);
        let h2 = 2.0 * (2.0 * PI / self.n as f64);
        let d_t = (self.at(f, i + 1, jdx) - self.at(f, i - 1, jdx)) / h2;
        let d_s = (self.at(f, i, jdx + 1) - self.at(f, i, jdx - 1)) / h2;
        (d_t, d_s)
    }
}

impl Immersion for SampledGrid {
    fn name(&self) -> String {
        format!("grid(n={})", self.n)
    }

    /// Evaluated at the nearest grid point.
    fn jet(&self, t: f64, s: f64) -> Jet {
        let (i, jdx) = self.index(t, s);
        let (x_t, x_s) = self.partials(&self.x, i, jdx);
        let (y_t, y_s) = self.partials(&self.y, i, jdx);
        let (h_t, h_s) = self.partials(&self.h, i, jdx);
        let k = i * self.n + jdx;
        Jet {
            x: self.x[k],
            y: self.y[k],
            h: self.h[k],
            x_t,
            x_s,
            y_t,
            y_s,
            h_t,
            h_s,
        }
    }

    fn amplitude(&self) -> f64 {
        self.a
    }

    fn klein_symmetric(&self) -> bool {
        self.klein
    }
}

/// An immersion precomposed with the torus automorphism
/// `(σ, τ) ↦ (s, t) = (bσ + cτ, pσ + rτ)`, where `[[b, c], [p, r]]` has
/// determinant one.
pub struct Reparametrized<M: Immersion> {
    pub base: M,
    pub matrix: [[i64; 2]; 2],
}

impl<M: Immersion> Reparametrized<M> {
    pub fn new(base: M, matrix: [[i64; 2]; 2]) -> Result<Self> {
        let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
        if det != 1 {
            return Err(Error::InvalidArgument(format!(
                "matrix has determinant {det}, expected 1"
            )));
        }
        Ok(Reparametrized { base, matrix })
    }
}

impl<M: Immersion> Immersion for Reparametrized<M> {
    fn name(&self) -> String {
        format!("{} * {:?}", self.base.name(), self.matrix)
    }

    fn jet(&self, tau: f64, sigma: f64) -> Jet {
        let [[b, c], [p, r]] = self.matrix.map(|row| row.map(|v| v as f64));
        let s = b * sigma + c * tau;
        let t = p * sigma + r * tau;
        self.base.jet(t, s).reparametrize(b, c, p, r)
    }

    fn amplitude(&self) -> f64 {
        self.base.amplitude()
    }
}
