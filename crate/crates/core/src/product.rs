//! Product formula kernels `W_k` and `𝒲_k`, the generalized translation
//! `τ_x`, the convolution `⋆_k`, and the radial representation of the
//! fractional-integral kernel.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::chord::Chord;
use crate::error::{Error, Result};
use crate::poisson::poisson_at_origin;
use crate::quadrature::QuadratureRule;
use crate::spectral::{translate_spectral, SpectralExpansion};
use crate::special_fn::{basis_row, e_at_zero, e_norm_sq, ln_gamma, Multiplicity};

/// `|sin x| < DIRAC_EPS` selects the Dirac branches of the translation.
pub const DIRAC_EPS: f64 = 1e-14;

/// Tolerance used to compare the two sides of the arccos lemma at boundaries.
pub const RANGE_EPS: f64 = 1e-12;

/// Default order of the `(1-u²)^{k-1}` rule behind the kernel path.
pub const DEFAULT_KERNEL_ORDER: usize = 128;

/// Default order of the generalized Laguerre rule for the fractional kernel.
pub const DEFAULT_RADIAL_ORDER: usize = 200;

/// `c_k = Γ(k + 1/2) / (Γ(k) √π)`, the normalizing constant of the product formula.
pub fn product_constant(k: Multiplicity) -> f64 {
    let kv = k.get();
    (ln_gamma(kv + 0.5) - ln_gamma(kv) - 0.5 * PI.ln()).exp()
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle(x: f64) -> f64 {
    let y = x - 2.0 * PI * (x / (2.0 * PI)).round();
    if y <= -PI {
        y + 2.0 * PI
    } else {
        y
    }
}

/// `cos(|x| + |y|) < cos z < cos(|x| - |y|)`.
pub fn in_support(x: f64, y: f64, z: f64) -> bool {
    let c = z.cos();
    (x.abs() + y.abs()).cos() < c && c < (x.abs() - y.abs()).cos()
}

fn require_density(x: f64, y: f64, z: f64, k: Multiplicity) -> Result<()> {
    if k.is_classical() {
        return Err(Error::RequiresPositiveMultiplicity {
            what: "the product-formula density",
            k: 0.0,
        });
    }
    if x.sin() * y.sin() * z.sin() == 0.0 {
        return Err(Error::DegenerateTriple { x, y, z });
    }
    Ok(())
}

/// `W_k(x, y, z)` in its four-sine form; zero off the support.
pub fn w_eval(x: f64, y: f64, z: f64, k: Multiplicity) -> Result<f64> {
    require_density(x, y, z, k)?;
    if !in_support(x, y, z) {
        return Ok(0.0);
    }
    let kv = k.get();
    // (cos z - cos(x+y))(cos(x-y) - cos z) = 4 Π sin(...)
    let prod = 4.0
        * (0.5 * (x + y + z)).sin()
        * (0.5 * (x + y - z)).sin()
        * (0.5 * (x - y + z)).sin()
        * (0.5 * (-x + y + z)).sin();
    if prod <= 0.0 {
        return Ok(0.0);
    }
    let denom = (x.sin() * y.sin() * z.sin()).abs();
    Ok(0.5 * product_constant(k) * prod.powf(kv - 1.0) / denom.powf(2.0 * kv - 1.0))
}

/// `𝒲_k / W_k = 4 e^{i(x+y-z)/2} sin((x+y+z)/2) sin((-x+y+z)/2) sin((x-y+z)/2) / (sin x sin y sin z)`.
pub fn wcal_factor(x: f64, y: f64, z: f64) -> Complex64 {
    let s = 4.0 * (0.5 * (x + y + z)).sin() * (0.5 * (-x + y + z)).sin() * (0.5 * (x - y + z)).sin()
        / (x.sin() * y.sin() * z.sin());
    Complex64::from_polar(s, 0.5 * (x + y - z))
}

/// `𝒲_k(x, y, z)`, the complex density of the product formula for `ℰ_n`.
pub fn wcal_eval(x: f64, y: f64, z: f64, k: Multiplicity) -> Result<Complex64> {
    let w = w_eval(x, y, z, k)?;
    if w == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(wcal_factor(x, y, z) * w)
}

/// Both sides of the arccos lemma for `x, y, z ∈ [0, π]`:
/// `(cos(x+y) <= cos z <= cos(x-y), cos(z+y) <= cos x <= cos(z-y))`,
/// with boundary comparisons made to [`RANGE_EPS`].
pub fn arccos_range_equiv(x: f64, y: f64, z: f64) -> (bool, bool) {
    let le = |a: f64, b: f64| a <= b + RANGE_EPS;
    let left = le((x + y).cos(), z.cos()) && le(z.cos(), (x - y).cos());
    let right = le((z + y).cos(), x.cos()) && le(x.cos(), (z - y).cos());
    (left, right)
}

/// `ℰ_n(ix) = E_n(ix) / E_n(0)`.
pub fn normalized_e(n: i64, k: Multiplicity, x: f64) -> Complex64 {
    crate::special_fn::e_eval(n, k, x) / e_at_zero(n, k)
}

/// `‖ℰ_n‖²_{2,k} = ‖E_n‖² / E_n(0)²`.
pub fn normalized_norm_sq(n: i64, k: Multiplicity) -> f64 {
    let e0 = e_at_zero(n, k);
    e_norm_sq(n, k) / (e0 * e0)
}

/// Kernel-path evaluator: integrals against `𝒲_k(x, y, ·) dm_k` in the
/// `u`-variable, `z = arccos(cos x cos y + u sin x sin y)`.
#[derive(Debug, Clone)]
pub struct ProductKernel {
    k: Multiplicity,
    rule: Option<QuadratureRule>,
    c_k: f64,
}

/// How a translation was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationBranch {
    Density,
    /// Atom at the given point.
    Dirac,
    /// `k = 0`: `τ_x f(y) = f(x + y)`.
    Classical,
}

impl ProductKernel {
    pub fn new(k: Multiplicity) -> Result<Self> {
        Self::with_order(k, DEFAULT_KERNEL_ORDER)
    }

    pub fn with_order(k: Multiplicity, m: usize) -> Result<Self> {
        let rule = if k.is_classical() {
            None
        } else {
            Some(QuadratureRule::interior_km1(k, m)?)
        };
        Ok(ProductKernel {
            k,
            rule,
            c_k: if k.is_classical() { 0.0 } else { product_constant(k) },
        })
    }

    pub fn k(&self) -> Multiplicity {
        self.k
    }

    /// `∫ g(z) W_k(x, y, z) dm_k(z)`; needs `k > 0` and `sin x sin y ≠ 0`.
    pub fn integrate_w<G: Fn(f64) -> Complex64>(&self, g: G, x: f64, y: f64) -> Result<Complex64> {
        let rule = self.density_rule(x, y)?;
        let chord = Chord::new(x, y);
        let s = rule.integrate_complex(|u| {
            let z = chord.angle(u);
            (g(z) + g(-z)) * 0.5
        });
        Ok(s * self.c_k)
    }

    /// `∫ g(z) 𝒲_k(x, y, z) dm_k(z)`; needs `k > 0` and `sin x sin y ≠ 0`.
    pub fn integrate_wcal<G: Fn(f64) -> Complex64>(&self, g: G, x: f64, y: f64) -> Result<Complex64> {
        let rule = self.density_rule(x, y)?;
        let chord = Chord::new(x, y);
        let s = rule.integrate_complex(|u| {
            let z = chord.angle(u);
            (g(z) * wcal_factor(x, y, z) + g(-z) * wcal_factor(x, y, -z)) * 0.5
        });
        Ok(s * self.c_k)
    }

    fn density_rule(&self, x: f64, y: f64) -> Result<&QuadratureRule> {
        let rule = self.rule.as_ref().ok_or(Error::RequiresPositiveMultiplicity {
            what: "the product-formula density",
            k: 0.0,
        })?;
        if x.sin().abs() < DIRAC_EPS || y.sin().abs() < DIRAC_EPS {
            return Err(Error::DegenerateTriple { x, y, z: f64::NAN });
        }
        Ok(rule)
    }

    /// `τ_x f(y) = ∫ f dμ_k^{(x,y)}` with the Dirac cases dispatched exactly.
    pub fn translate<F: Fn(f64) -> Complex64>(&self, f: F, x: f64, y: f64) -> (Complex64, TranslationBranch) {
        if self.k.is_classical() {
            return (f(wrap_angle(x + y)), TranslationBranch::Classical);
        }
        let (sx, sy) = (x.sin(), y.sin());
        if sy.abs() < DIRAC_EPS {
            let at = if y.cos() > 0.0 { x } else { wrap_angle(x + PI) };
            return (f(at), TranslationBranch::Dirac);
        }
        if sx.abs() < DIRAC_EPS {
            let at = if x.cos() > 0.0 { y } else { wrap_angle(y + PI) };
            return (f(at), TranslationBranch::Dirac);
        }
        let v = self.integrate_wcal(f, x, y).expect("density case checked above");
        (v, TranslationBranch::Density)
    }

    /// `f ⋆_k g(x) = ∫ τ_x f(-y) g(y) dm_k(y)` with the circle rule `rule`.
    pub fn convolve<F, G>(&self, f: F, g: G, x: f64, rule: &QuadratureRule) -> Result<Complex64>
    where
        F: Fn(f64) -> Complex64 + Sync,
        G: Fn(f64) -> Complex64 + Sync,
    {
        if !rule.is_circle() {
            return Err(Error::NotACircleRule);
        }
        if rule.k() != self.k.get() {
            return Err(Error::MismatchedMultiplicity(rule.k(), self.k.get()));
        }
        let terms: Vec<Complex64> = rule
            .nodes()
            .par_iter()
            .zip(rule.weights())
            .map(|(&y, &w)| self.translate(&f, x, -y).0 * g(y) * w)
            .collect();
        Ok(terms.into_iter().sum())
    }
}

/// Spectral-path translation `τ_x f(y)` of an expansion.
pub fn translate_expansion(exp: &SpectralExpansion, x: f64, y: f64) -> Complex64 {
    translate_spectral(exp, x).synthesize(y)
}

/// Which power of `1 - 2r cos x + r²` the radial fractional kernel uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialExponent {
    /// `k + 1`, as in the Poisson kernel at `y = 0`.
    PoissonKernel,
    /// `1`, as printed in the final integral representation.
    AsPrinted,
}

/// Spectral definition of the fractional-integral kernel,
/// `Σ_{0 < |n| <= N} |n|^{-α} ρ_n ℰ_n(ix)` with `ρ_n = ‖ℰ_n‖^{-2}`.
pub fn fractional_kernel_spectral(x: f64, k: Multiplicity, alpha: f64, n_max: usize) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidAlpha(alpha));
    }
    let row = basis_row(k, n_max, x);
    let nn = n_max as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in (1..=nn).rev() {
        for j in [n, -n] {
            let e = row[(j + nn) as usize] / e_at_zero(j, k);
            acc += e * ((n as f64).powf(-alpha) / normalized_norm_sq(j, k));
        }
    }
    Ok(acc.re)
}

/// Order of the Riesz means used by [`fractional_kernel_riesz`].
pub const RIESZ_ORDER: f64 = 6.0;

/// Riesz means of the spectral series,
/// `Σ_{0 < |n| <= N} (1 - |n|/(N+1))^δ |n|^{-α} ρ_n ℰ_n(ix)` with `δ =` [`RIESZ_ORDER`].
///
/// The plain partial sums grow like `N^{2k+1-α}` when `α < 2k + 1`; the
/// smoothed sums still converge away from `x = 0`.
pub fn fractional_kernel_riesz(x: f64, k: Multiplicity, alpha: f64, n_max: usize) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidAlpha(alpha));
    }
    let row = basis_row(k, n_max, x);
    let nn = n_max as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for n in (1..=nn).rev() {
        let damp = (1.0 - n as f64 / (n_max + 1) as f64).powf(RIESZ_ORDER);
        for j in [n, -n] {
            let e = row[(j + nn) as usize] / e_at_zero(j, k);
            acc += e * (damp * (n as f64).powf(-alpha) / normalized_norm_sq(j, k));
        }
    }
    Ok(acc.re)
}

/// Radial representation
/// `(1/Γ(α)) ∫_0^1 [r^{-k} P(r, x) - γ_0] ln(1/r)^{α-1} dr/r`,
/// evaluated with `t = ln(1/r)` and a generalized Gauss-Laguerre rule.
pub fn fractional_kernel(x: f64, k: Multiplicity, alpha: f64, exponent: RadialExponent, m: usize) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidAlpha(alpha));
    }
    let rule = QuadratureRule::laguerre(alpha - 1.0, m)?;
    let gamma0 = 1.0 / e_norm_sq(0, k);
    let kv = k.get();
    let power = match exponent {
        RadialExponent::PoissonKernel => kv + 1.0,
        RadialExponent::AsPrinted => 1.0,
    };
    let c = x.cos();
    // e^t [γ_0 (1 - r²)/D^p - γ_0] with r = e^{-t}, D = 1 - 2r cos x + r²,
    // written as γ_0 (-r - expm1(p ln D) / r) / D^p so that it stays finite as r -> 0
    let weighted = |t: f64| -> f64 {
        let r = (-t).exp();
        let q = r * (r - 2.0 * c);
        let log_d = q.ln_1p();
        let expm1_over_r = if r < 1e-8 {
            power * (r - 2.0 * c)
        } else {
            (power * log_d).exp_m1() / r
        };
        gamma0 * (-r - expm1_over_r) / (power * log_d).exp()
    };
    let s = rule.integrate(weighted);
    Ok(s / libm::lgamma(alpha).exp())
}

/// Side-by-side values of the fractional kernel at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalKernelReport {
    pub x: f64,
    pub k: f64,
    pub alpha: f64,
    pub spectral_terms: usize,
    pub spectral: f64,
    /// Riesz means of the same series, see [`fractional_kernel_riesz`].
    pub spectral_riesz: f64,
    /// `R(N) + (R(N) - R(N/4)) / 3` with `R` the Riesz means; cancels the `1/N` bias.
    pub spectral_extrapolated: f64,
    pub radial_poisson_exponent: f64,
    pub radial_printed_exponent: f64,
    /// Smallest value of `r^{-k} P(r, x) - γ_0` over a sample of `r ∈ (0, 1)`.
    pub bracket_min: f64,
}

pub fn fractional_kernel_report(x: f64, k: Multiplicity, alpha: f64, n_max: usize) -> Result<FractionalKernelReport> {
    let gamma0 = 1.0 / e_norm_sq(0, k);
    let bracket_min = (1..200)
        .map(|i| {
            let r = i as f64 / 200.0;
            let p = poisson_at_origin(r, x, k).expect("r < 1");
            let scaled = if k.is_classical() { p } else { p / r.powf(k.get()) };
            scaled - gamma0
        })
        .fold(f64::INFINITY, f64::min);
    let riesz = fractional_kernel_riesz(x, k, alpha, n_max)?;
    let riesz_quarter = fractional_kernel_riesz(x, k, alpha, (n_max / 4).max(1))?;
    Ok(FractionalKernelReport {
        x,
        k: k.get(),
        alpha,
        spectral_terms: n_max,
        spectral: fractional_kernel_spectral(x, k, alpha, n_max)?,
        spectral_riesz: riesz,
        spectral_extrapolated: riesz + (riesz - riesz_quarter) / 3.0,
        radial_poisson_exponent: fractional_kernel(x, k, alpha, RadialExponent::PoissonKernel, DEFAULT_RADIAL_ORDER)?,
        radial_printed_exponent: fractional_kernel(x, k, alpha, RadialExponent::AsPrinted, DEFAULT_RADIAL_ORDER)?,
        bracket_min,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn k(v: f64) -> Multiplicity {
        Multiplicity::new(v).unwrap()
    }

    #[test]
    fn w_vanishes_off_support_and_is_symmetric() {
        let kk = k(1.0);
        assert_eq!(w_eval(0.3, 0.2, 2.0, kk).unwrap(), 0.0);
        let (x, y, z) = (0.9, -1.3, 1.1);
        let w = w_eval(x, y, z, kk).unwrap();
        assert!(w > 0.0);
        assert_relative_eq!(w, w_eval(y, x, z, kk).unwrap(), max_relative = 1e-13);
        assert_relative_eq!(w, w_eval(x, z, y, kk).unwrap(), max_relative = 1e-13);
        assert!(w_eval(0.3, 0.2, 0.2, k(0.0)).is_err());
        assert!(w_eval(0.0, 0.2, 0.2, kk).is_err());
    }

    #[test]
    fn arccos_lemma_examples() {
        assert_eq!(arccos_range_equiv(1.0, 0.5, 1.2), (true, true));
        assert_eq!(arccos_range_equiv(0.2, 0.1, 2.8), (false, false));
        assert_eq!(arccos_range_equiv(0.4, 0.7, 1.1), (true, true));
    }

    #[test]
    fn translation_dirac_cases() {
        let kk = k(1.5);
        let pk = ProductKernel::new(kk).unwrap();
        let f = |z: f64| Complex64::new(z.cos() + 0.3 * (2.0 * z).sin(), z);
        assert_eq!(pk.translate(f, 0.7, 0.0), (f(0.7), TranslationBranch::Dirac));
        assert_eq!(pk.translate(f, 0.0, -0.4), (f(-0.4), TranslationBranch::Dirac));
        let (v, b) = pk.translate(f, 0.7, PI);
        assert_eq!(b, TranslationBranch::Dirac);
        assert_eq!(v, f(wrap_angle(0.7 + PI)));
        let c = ProductKernel::new(k(0.0)).unwrap();
        assert_eq!(c.translate(f, 2.0, 2.0).0, f(4.0 - 2.0 * PI));
    }

    #[test]
    fn product_formula_low_degrees() {
        let kk = k(1.0);
        let pk = ProductKernel::new(kk).unwrap();
        let (x, y) = (0.9, -1.3);
        for n in -3..=3 {
            let lhs = normalized_e(n, kk, x) * normalized_e(n, kk, y);
            let rhs = pk.integrate_wcal(|z| normalized_e(n, kk, z), x, y).unwrap();
            assert!((lhs - rhs).norm() < 1e-12, "n = {n}: {lhs} vs {rhs}");
        }
        let mass = pk.integrate_w(|_| Complex64::new(1.0, 0.0), x, y).unwrap();
        assert_relative_eq!(mass.re, 1.0, max_relative = 1e-13);
    }

    #[test]
    fn radial_kernel_matches_classical_sum() {
        // α = 2 at k = 0: (1/π) Σ cos(nx)/n² = (π² - 3πx + 1.5x²)/(6π) on [0, 2π]
        let x: f64 = 1.0;
        let exact = (PI * PI - 3.0 * PI * x + 1.5 * x * x) / (6.0 * PI);
        let v = fractional_kernel(x, k(0.0), 2.0, RadialExponent::PoissonKernel, 200).unwrap();
        assert_relative_eq!(v, exact, max_relative = 1e-9);
        assert!(fractional_kernel(x, k(0.0), 0.0, RadialExponent::PoissonKernel, 20).is_err());
    }
}
