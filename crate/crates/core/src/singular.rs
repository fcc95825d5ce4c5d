//! Differential-difference operators on the circle and the singular kernel of
//! the generalized Hilbert transform.
//!
//! * `𝒯_k f = f' + 2ki (f(x) - f(-x)) / (1 - e^{-2ix}) - ki f`, with
//!   `𝒯_k E_n(ix) = i n_k E_n(ix)`;
//! * `Δ_k f = f'' + 2k cot x f' - k² f` on even functions, with
//!   `Δ_k P_n = -(n+k)² P_n`;
//! * `ℋ_k(x, y) = -i (k 2^{-k} / 2π) (1 - e^{i(x-y)}) ∫ (1+u)(1-u²)^{k-1} (1 - t)^{-(k+1)} du`,
//!   `t = cos x cos y + u sin x sin y`, the kernel of `H_k` off the diagonal.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::chord::{Chord, LayerQuadrature};
use crate::error::{Error, Result};
use crate::quadrature::QuadratureRule;
use crate::special_fn::{Jet, Multiplicity, REMOVABLE_EPS};

/// Distance to the diagonal below which [`HilbertKernel::eval`] refuses a query.
pub const DIAGONAL_EPS: f64 = 1e-12;

/// Nearest of `0, ±π` to `x`.
fn nearest_pole(x: f64) -> f64 {
    if x.abs() <= 0.5 * PI {
        0.0
    } else {
        PI.copysign(x)
    }
}

/// `𝒯_k f(x)` from the jets of `f` at `x` and `-x`.
///
/// Within [`REMOVABLE_EPS`] of `0, ±π` the difference quotient is replaced by
/// its limit `(f'(x) + f'(-x)) / (2i) · (1 + i(x - x_0))`.
pub fn apply_tcal<F: Fn(f64) -> Jet>(f: F, x: f64, k: Multiplicity) -> Complex64 {
    let kv = k.get();
    let at = f(x);
    let refl = f(-x);
    let i = Complex64::i();
    let quotient = if x.sin().abs() < REMOVABLE_EPS {
        let h = x - nearest_pole(x);
        (at.d1 + refl.d1) / (2.0 * i) * (1.0 + i * h)
    } else {
        let denom = 1.0 - Complex64::from_polar(1.0, -2.0 * x);
        (at.value - refl.value) / denom
    };
    at.d1 + quotient * (2.0 * kv * i) - at.value * (kv * i)
}

/// `Δ_k f(x) = f'' + 2k cot x f' - k² f` for even `f`.
///
/// At `sin x ≈ 0` the term `cot x f'` is replaced by its limit `f''`.
pub fn apply_delta_even<F: Fn(f64) -> Jet>(f: F, x: f64, k: Multiplicity) -> Complex64 {
    let kv = k.get();
    let j = f(x);
    let drift = if x.sin().abs() < REMOVABLE_EPS {
        j.d2
    } else {
        j.d1 * (x.cos() / x.sin())
    };
    j.d2 + drift * (2.0 * kv) - j.value * (kv * kv)
}

/// Both sides of `min(sin(|x-y|/2), sin(|x+y|/2)) = sin(||x| - |y||/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinSin {
    pub lhs: f64,
    pub rhs: f64,
}

impl MinSin {
    pub fn holds(&self, tol: f64) -> bool {
        (self.lhs - self.rhs).abs() <= tol
    }
}

pub fn min_sin_identity(x: f64, y: f64) -> MinSin {
    let lhs = (0.5 * (x - y).abs()).sin().min((0.5 * (x + y).abs()).sin());
    let rhs = (0.5 * (x.abs() - y.abs()).abs()).sin();
    MinSin { lhs, rhs }
}

/// Evaluator for `ℋ_k(x, y)`; the `u`-integral uses graded panels at the
/// endpoint where `1 - t` vanishes on the diagonal.
#[derive(Debug)]
pub struct HilbertKernel {
    k: Multiplicity,
    layer: LayerQuadrature,
    prefactor: f64,
}

impl HilbertKernel {
    pub fn new(k: Multiplicity) -> Result<Self> {
        if k.is_classical() {
            return Err(Error::RequiresPositiveMultiplicity {
                what: "the Hilbert kernel integral",
                k: 0.0,
            });
        }
        let kv = k.get();
        Ok(HilbertKernel {
            k,
            layer: LayerQuadrature::new(kv)?,
            prefactor: kv * (-kv * 2f64.ln()).exp() / (2.0 * PI),
        })
    }

    pub fn k(&self) -> Multiplicity {
        self.k
    }

    /// `ℋ_k(x, y)`; rejects `x = ±y`.
    pub fn eval(&self, x: f64, y: f64) -> Result<Complex64> {
        if (0.5 * (x - y)).sin().abs() < DIAGONAL_EPS || (0.5 * (x + y)).sin().abs() < DIAGONAL_EPS {
            return Err(Error::DiagonalQuery { x, y });
        }
        let kv = self.k.get();
        let chord = Chord::new(x, y);
        let integral = self.layer.integrate(&chord, 0.0, 1.0, kv + 1.0);
        let phase = 1.0 - Complex64::from_polar(1.0, x - y);
        Ok(phase * Complex64::new(0.0, -self.prefactor * integral))
    }
}

/// Closed interval `[a, b]` declared to contain the support of a function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub a: f64,
    pub b: f64,
}

impl Support {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a < b) || a < -PI || b > PI {
            return Err(Error::Parse(format!("support [{a}, {b}] must satisfy -pi <= a < b <= pi")));
        }
        Ok(Support { a, b })
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a <= x && x <= self.b
    }

    /// Distance from the support to the nearer of `±x`.
    pub fn separation(&self, x: f64) -> f64 {
        [x, -x]
            .iter()
            .map(|&p| {
                if self.contains(p) {
                    0.0
                } else {
                    (self.a - p).abs().min((p - self.b).abs())
                }
            })
            .fold(f64::INFINITY, f64::min)
    }
}

/// Panels and points per panel of the composite Gauss-Legendre rule used by
/// [`hilbert_via_kernel`].
pub const SUPPORT_PANELS: usize = 16;
pub const SUPPORT_POINTS: usize = 24;

/// `H_k f(x) = ∫ ℋ_k(x, y) f(y) dm_k(y)` for `f` supported in `support`,
/// which must not contain `±x`.
pub fn hilbert_via_kernel<F>(f: F, x: f64, support: Support, kernel: &HilbertKernel) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    if support.contains(x) || support.contains(-x) {
        return Err(Error::SupportViolation {
            x,
            a: support.a,
            b: support.b,
        });
    }
    let kv = kernel.k().get();
    let h = (support.b - support.a) / SUPPORT_PANELS as f64;
    let panels: Vec<QuadratureRule> = (0..SUPPORT_PANELS)
        .map(|p| {
            let a = support.a + p as f64 * h;
            QuadratureRule::legendre(a, a + h, SUPPORT_POINTS)
        })
        .collect::<Result<_>>()?;
    let nodes: Vec<(f64, f64)> = panels
        .iter()
        .flat_map(|r| r.nodes().iter().copied().zip(r.weights().iter().copied()).collect::<Vec<_>>())
        .collect();
    let terms: Vec<Result<Complex64>> = nodes
        .par_iter()
        .map(|&(y, w)| {
            let fy = f(y);
            if fy == Complex64::new(0.0, 0.0) {
                return Ok(fy);
            }
            Ok(kernel.eval(x, y)? * fy * (w * y.sin().abs().powf(2.0 * kv)))
        })
        .collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for t in terms {
        acc += t?;
    }
    Ok(acc)
}

/// Sup of `|ℋ_k(x, y)| · ||x| - |y||^{2k+1}` over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelBoundReport {
    pub k: f64,
    pub grid: usize,
    pub min_separation: f64,
    pub points: usize,
    pub max_product: f64,
    pub argmax: (f64, f64),
}

/// Evaluates the size bound on a `grid × grid` lattice (offset to avoid
/// `x = ±y` exactly), keeping pairs with `||x| - |y|| >= min_separation`.
pub fn kernel_bound_report(kernel: &HilbertKernel, grid: usize, min_separation: f64) -> Result<KernelBoundReport> {
    let kv = kernel.k().get();
    let xs: Vec<f64> = (0..grid)
        .map(|i| -PI + (i as f64 + 0.5) * 2.0 * PI / grid as f64)
        .collect();
    let ys: Vec<f64> = (0..grid)
        .map(|i| -PI + (i as f64 + 0.25) * 2.0 * PI / grid as f64)
        .collect();
    let pairs: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| (x.abs() - y.abs()).abs() >= min_separation)
        .collect();
    let values: Vec<Result<(f64, (f64, f64))>> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let d = (x.abs() - y.abs()).abs();
            Ok((kernel.eval(x, y)?.norm() * d.powf(2.0 * kv + 1.0), (x, y)))
        })
        .collect();
    let mut best = (0.0, (f64::NAN, f64::NAN));
    for v in values {
        let v = v?;
        if v.0 > best.0 {
            best = v;
        }
    }
    Ok(KernelBoundReport {
        k: kv,
        grid,
        min_separation,
        points: pairs.len(),
        max_product: best.0,
        argmax: best.1,
    })
}

/// Least-squares slope of `log |ℋ_k(y + h, y)|` against `log h` over `hs`.
pub fn diagonal_growth_slope(kernel: &HilbertKernel, y: f64, hs: &[f64]) -> Result<f64> {
    let pts: Vec<(f64, f64)> = hs
        .iter()
        .map(|&h| Ok((h.ln(), kernel.eval(y + h, y)?.norm().ln())))
        .collect::<Result<_>>()?;
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// Points per panel and grading depth of the Hörmander integration.
pub const HORMANDER_POINTS: usize = 16;
pub const HORMANDER_LEVELS: usize = 24;

/// `∫_{||x| - |y|| > 2|y - y'|} |ℋ_k(x, y) - ℋ_k(x, y')| dm_k(x)`.
///
/// The region is split into up to four intervals, each integrated with a
/// composite Gauss-Legendre rule graded geometrically toward the end that
/// borders the excluded neighbourhood of `±y`.
pub fn hormander_experiment(y: f64, y_prime: f64, kernel: &HilbertKernel) -> Result<f64> {
    let delta = (y - y_prime).abs();
    if delta == 0.0 {
        return Ok(0.0);
    }
    let kv = kernel.k().get();
    let ay = y.abs();
    let gap = 2.0 * delta;
    // (start, end) with the graded end first
    let mut intervals = Vec::new();
    if ay + gap < PI {
        intervals.push((ay + gap, PI));
        intervals.push((-(ay + gap), -PI));
    }
    if ay - gap > 0.0 {
        intervals.push((ay - gap, 0.0));
        intervals.push((-(ay - gap), 0.0));
    }
    let base = QuadratureRule::legendre(0.0, 1.0, HORMANDER_POINTS)?;
    let mut nodes: Vec<(f64, f64)> = Vec::new();
    for &(s, e) in &intervals {
        let len = e - s;
        let mut lo = 0.0;
        for level in (0..=HORMANDER_LEVELS).rev() {
            let hi = if level == 0 { 1.0 } else { 0.5f64.powi(level as i32) };
            for (&u, &w) in base.nodes().iter().zip(base.weights()) {
                let t = lo + (hi - lo) * u;
                nodes.push((s + len * t, (len * (hi - lo) * w).abs()));
            }
            lo = hi;
        }
    }
    let terms: Vec<Result<f64>> = nodes
        .par_iter()
        .map(|&(x, w)| {
            let d = (kernel.eval(x, y)? - kernel.eval(x, y_prime)?).norm();
            Ok(d * w * x.sin().abs().powf(2.0 * kv))
        })
        .collect();
    let mut acc = 0.0;
    for t in terms {
        acc += t?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_fn::{e_eval, e_jet, extended_eigenvalue, p_jet, Domain};
    use approx::assert_relative_eq;

    fn k(v: f64) -> Multiplicity {
        Multiplicity::new(v).unwrap()
    }

    #[test]
    fn tcal_eigen_equation_including_poles() {
        let kk = k(1.3);
        for n in [-3i64, -1, 0, 1, 2] {
            for &x in &[0.7, -2.2, 0.0, 3e-8, PI, -PI + 1e-9] {
                let out = apply_tcal(|t| e_jet(n, kk, t, Domain::Circle), x, kk);
                let expect = e_eval(n, kk, x) * Complex64::new(0.0, extended_eigenvalue(n, kk));
                assert!((out - expect).norm() < 1e-8 * (1.0 + expect.norm()), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn tcal_on_first_exponential_and_even_function() {
        let kk = k(0.6);
        let out = apply_tcal(|t| e_jet(1, kk, t, Domain::Circle), 0.9, kk);
        let expect = Complex64::new(0.0, 1.6) * Complex64::from_polar(1.0, 0.9);
        assert!((out - expect).norm() < 1e-13);
        let even = |t: f64| Jet {
            value: t.cos().into(),
            d1: (-t.sin()).into(),
            d2: (-t.cos()).into(),
        };
        let out = apply_tcal(even, 0.9, kk);
        let expect = Complex64::new(-(0.9f64).sin(), -0.6 * 0.9f64.cos());
        assert!((out - expect).norm() < 1e-14);
    }

    #[test]
    fn delta_even_on_symmetric_polynomials() {
        let kk = k(1.0);
        for &x in &[1.0, 0.0, PI, 2.5] {
            let out = apply_delta_even(|t| p_jet(2, kk, t, Domain::Circle), x, kk);
            let p = p_jet(2, kk, x, Domain::Circle).value;
            assert!((out + p * 9.0).norm() < 1e-12);
        }
        let one = apply_delta_even(|_| Jet::constant(1.0.into()), 0.4, k(0.7));
        assert_relative_eq!(one.re, -0.49, epsilon = 1e-15);
    }

    #[test]
    fn min_sin_examples() {
        assert!(min_sin_identity(1.2, -0.4).holds(1e-14));
        let m = min_sin_identity(0.0, 2.0);
        assert_relative_eq!(m.lhs, 1.0f64.sin());
        assert!(min_sin_identity(PI, -PI).holds(1e-14));
    }

    #[test]
    fn kernel_rejects_diagonal_and_classical() {
        assert!(HilbertKernel::new(k(0.0)).is_err());
        let h = HilbertKernel::new(k(1.0)).unwrap();
        assert!(matches!(h.eval(0.4, 0.4), Err(Error::DiagonalQuery { .. })));
        assert!(matches!(h.eval(0.4, -0.4), Err(Error::DiagonalQuery { .. })));
        let v = h.eval(0.4, 1.5).unwrap();
        let w = h.eval(1.5, 0.4).unwrap();
        assert!((v + w.conj()).norm() < 1e-12 * v.norm());
    }

    #[test]
    fn support_checks() {
        let h = HilbertKernel::new(k(1.0)).unwrap();
        let s = Support::new(PI / 3.0, 2.0 * PI / 3.0).unwrap();
        assert!(matches!(
            hilbert_via_kernel(|_| Complex64::new(1.0, 0.0), -1.5, s, &h),
            Err(Error::SupportViolation { .. })
        ));
        let zero = hilbert_via_kernel(|_| Complex64::new(0.0, 0.0), 0.1, s, &h).unwrap();
        assert_eq!(zero, Complex64::new(0.0, 0.0));
        assert_relative_eq!(s.separation(0.1), PI / 3.0 - 0.1, epsilon = 1e-15);
        assert_eq!(hormander_experiment(0.5, 0.5, &h).unwrap(), 0.0);
    }
}
