//! Numerical verification suites, one per acceptance criterion, plus the
//! Poisson-mass side-by-side report.
//!
//! Every check carries the tolerance it was judged against; reporting-only
//! checks pass as long as they complete with finite values.

use std::f64::consts::PI;
use std::time::Instant;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poisson::{poisson_apply, poisson_at_origin, poisson_closed_form, poisson_mass, poisson_series_auto, PoissonKernel};
use crate::product::{
    arccos_range_equiv, fractional_kernel, fractional_kernel_report, normalized_e, normalized_norm_sq, translate_expansion, w_eval,
    wcal_eval, ProductKernel, RadialExponent, TranslationBranch, DEFAULT_RADIAL_ORDER,
};
use crate::quadrature::{circle_mass, QuadratureRule};
use crate::singular::{
    apply_delta_even, apply_tcal, diagonal_growth_slope, hilbert_via_kernel, hormander_experiment, kernel_bound_report,
    min_sin_identity, HilbertKernel, Support,
};
use crate::special_fn::{
    apply_l_real, apply_t_real_fn, basis_row, e_at_zero, e_deriv, e_eval, e_eval_real, e_jet, e_norm_sq, extended_eigenvalue,
    p_at_zero, p_eval, p_jet, Domain, Jet, Multiplicity,
};
use crate::spectral::{
    analyze, analyze_default, cherednik_spectral, convolve_spectral, exp_fourier_support, fractional_spectral, hilbert_spectral,
    poisson_extend, required_order, translate_spectral, SpectralExpansion, DEFAULT_TRUNCATION,
};

/// Pinned tolerances.
pub mod tol {
    pub const ORTHO_OFFDIAG: f64 = 1e-8;
    pub const ORTHO_DIAG_REL: f64 = 1e-9;
    pub const ORTHO_RUNTIME_S: f64 = 10.0;
    pub const ORDER_DOUBLING_REL: f64 = 1e-12;
    pub const IDENTITY_REL: f64 = 1e-10;
    pub const HYPERGEOMETRIC_REL: f64 = 1e-10;
    pub const NORM_RATIO_REL: f64 = 1e-12;
    pub const FINITE_DIFFERENCE_REL: f64 = 1e-6;
    pub const EIGEN_REL: f64 = 1e-8;
    pub const CHEREDNIK_SPECTRAL_REL: f64 = 1e-8;
    pub const SUPPORT_COEFF: f64 = 1e-10;
    pub const LEADING_COEFF: f64 = 1e-10;
    pub const NONNEGATIVE_COEFF: f64 = 1e-10;
    pub const FOURIER_ORTHO: f64 = 1e-8;
    pub const POISSON_SERIES_VS_INTEGRAL: f64 = 1e-8;
    pub const POISSON_CLASSICAL: f64 = 1e-12;
    pub const POISSON_IMAG: f64 = 1e-10;
    pub const POISSON_SYMMETRY_REL: f64 = 1e-10;
    pub const POISSON_ORIGIN_REL: f64 = 1e-10;
    pub const POISSON_MASS: f64 = 1e-8;
    pub const SEMIGROUP_SLACK: f64 = 1e-8;
    pub const POISSON_APPLY: f64 = 1e-8;
    pub const W_NORMALIZATION: f64 = 1e-8;
    pub const PRODUCT_FORMULA: f64 = 1e-7;
    pub const WCAL_BOUND: f64 = 16.0;
    pub const TRANSLATION: f64 = 1e-8;
    pub const TRANSLATION_PATHS: f64 = 1e-7;
    pub const CONVOLUTION_RULE: f64 = 1e-9;
    pub const CONVOLUTION_PATHS: f64 = 1e-7;
    pub const YOUNG_CONSTANT: f64 = 16.0;
    pub const MULTIPLIER_EXACT: f64 = 0.0;
    pub const FRACTIONAL_CLASSICAL: f64 = 1e-10;
    pub const HILBERT_CONTRACTION: f64 = 1e-10;
    pub const HILBERT_SQUARE: f64 = 0.0;
    pub const SKEW_ADJOINT: f64 = 1e-9;
    pub const KERNEL_VS_SPECTRAL: f64 = 1e-6;
    pub const KERNEL_ANTISYMMETRY_REL: f64 = 1e-9;
    pub const HORMANDER_FACTOR: f64 = 3.0;
    /// Spread of `|ℋ(s, 2s)| s^{2k+1}` as `s → 0`.
    pub const RAY_GROWTH_FACTOR: f64 = 10.0;
    pub const MIN_SIN: f64 = 1e-14;
    pub const CLASSICAL: f64 = 1e-10;
}

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: &'static str,
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub observed: f64,
    pub tolerance: f64,
    pub reporting_only: bool,
    pub detail: String,
}

impl CheckReport {
    /// `observed <= tolerance`.
    fn bound(suite: &'static str, criterion: u8, name: impl Into<String>, observed: f64, tolerance: f64) -> Self {
        CheckReport {
            suite,
            criterion,
            name: name.into(),
            passed: observed <= tolerance,
            observed,
            tolerance,
            reporting_only: false,
            detail: String::new(),
        }
    }

    fn report(suite: &'static str, criterion: u8, name: impl Into<String>, observed: f64, detail: String) -> Self {
        CheckReport {
            suite,
            criterion,
            name: name.into(),
            passed: observed.is_finite(),
            observed,
            tolerance: f64::NAN,
            reporting_only: true,
            detail,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn line(&self) -> String {
        let status = match (self.passed, self.reporting_only) {
            (true, false) => "PASS",
            (false, _) => "FAIL",
            (true, true) => "INFO",
        };
        let mut s = format!(
            "[{status}] C{:<2} {}/{} observed={:.3e}",
            self.criterion, self.suite, self.name, self.observed
        );
        if !self.reporting_only {
            s.push_str(&format!(" tol={:.1e}", self.tolerance));
        }
        if !self.detail.is_empty() {
            s.push_str("  ");
            s.push_str(&self.detail);
        }
        s
    }
}

/// Overrides for the suites.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    /// Replaces every suite's own list of multiplicities.
    pub ks: Option<Vec<f64>>,
    /// Circle-rule order.
    pub order: usize,
    /// Truncation for analysis round trips.
    pub n_trunc: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            ks: None,
            order: crate::quadrature::DEFAULT_ORDER,
            n_trunc: DEFAULT_TRUNCATION,
            seed: 0x0bda_a1,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(ks) = &self.ks {
            for &k in ks {
                Multiplicity::new(k)?;
            }
        }
        if self.order < 2 {
            return Err(Error::InvalidOrder { min: 2, got: self.order });
        }
        if self.order < required_order(self.n_trunc) {
            return Err(Error::UnderResolvedRule {
                order: self.order,
                degree: self.n_trunc,
                required: required_order(self.n_trunc),
            });
        }
        Ok(())
    }

    fn ks(&self, default: &[f64]) -> Vec<Multiplicity> {
        self.ks
            .as_deref()
            .unwrap_or(default)
            .iter()
            .map(|&k| Multiplicity::new(k).expect("validated"))
            .collect()
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// Suite names in run order.
pub const SUITES: [&str; 11] = [
    "orthogonality",
    "identities",
    "eigen",
    "basis",
    "poisson",
    "semigroup",
    "product",
    "fractional",
    "hilbert",
    "classical",
    "poisson-mass",
];

/// Runs one suite by name.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    cfg.validate()?;
    match name {
        "orthogonality" => orthogonality(cfg),
        "identities" => identities(cfg),
        "eigen" => eigen(cfg),
        "basis" => basis(cfg),
        "poisson" => poisson(cfg),
        "semigroup" => semigroup(cfg),
        "product" => product(cfg),
        "fractional" => fractional(cfg),
        "hilbert" => hilbert(cfg),
        "classical" => classical(cfg),
        "poisson-mass" => poisson_mass_suite(cfg),
        other => Err(Error::Parse(format!("unknown suite '{other}'"))),
    }
}

/// Runs every suite in [`SUITES`] order.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for s in SUITES {
        out.extend(run_suite(s, cfg)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------- helpers

fn k_of(v: f64) -> Multiplicity {
    Multiplicity::new(v).expect("literal multiplicity")
}

/// Midpoint grid of `n` points on `(-π, π)`, offset by `shift` cells.
fn grid(n: usize, shift: f64) -> Vec<f64> {
    (0..n).map(|i| -PI + (i as f64 + shift) * 2.0 * PI / n as f64).collect()
}

fn rel(diff: f64, scale: f64) -> f64 {
    diff / scale.max(1.0)
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Random expansion over `E_n`, `|n| <= degree`.
fn random_expansion(k: Multiplicity, degree: usize, rng: &mut ChaCha8Rng) -> SpectralExpansion {
    let coeffs = (0..2 * degree + 1).map(|_| random_complex(rng)).collect();
    SpectralExpansion::from_coeffs(k, degree, coeffs).expect("length matches")
}

fn expansion_jet(exp: &SpectralExpansion, x: f64) -> Jet {
    let k = exp.k();
    exp.indices()
        .map(|n| {
            if k.is_classical() {
                let e = Complex64::from_polar(1.0, n as f64 * x);
                let i_n = Complex64::new(0.0, n as f64);
                Jet {
                    value: e,
                    d1: e * i_n,
                    d2: e * i_n * i_n,
                }
            } else {
                e_jet(n, k, x, Domain::Circle)
            }
            .scale(exp.coeff(n))
        })
        .fold(Jet::constant(Complex64::new(0.0, 0.0)), |a, b| a + b)
}

/// `sup |f|` by a dense grid refined with golden-section search around the
/// largest samples.
fn sup_norm<F: Fn(f64) -> f64>(f: F) -> f64 {
    const DENSE: usize = 4096;
    let h = 2.0 * PI / DENSE as f64;
    let xs: Vec<f64> = (0..DENSE).map(|i| -PI + i as f64 * h).collect();
    let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut order: Vec<usize> = (0..DENSE).collect();
    order.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]));
    let mut best = vals[order[0]];
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    for &i in order.iter().take(8) {
        let (mut a, mut b) = (xs[i] - h, xs[i] + h);
        for _ in 0..60 {
            let c = b - ratio * (b - a);
            let d = a + ratio * (b - a);
            if f(c) > f(d) {
                b = d;
            } else {
                a = c;
            }
        }
        best = best.max(f(0.5 * (a + b)));
    }
    best
}

/// Terminating `₂F₁(a, -n; c; z)` by its defining series, summed exactly in
/// rational arithmetic (every `f64` is a dyadic rational) and rounded once.
fn hyp2f1_terminating(a: f64, n: usize, c: f64, z: f64) -> f64 {
    let exact = |v: f64| BigRational::from_float(v).expect("finite");
    let (a, c, z) = (exact(a), exact(c), exact(z));
    let b = -BigRational::from_integer(BigInt::from(n));
    let one = BigRational::one();
    let mut term = one.clone();
    let mut sum = one.clone();
    for j in 0..n {
        let jr = BigRational::from_integer(BigInt::from(j));
        term = term * (&a + &jr) * (&b + &jr) / ((&c + &jr) * (&jr + &one)) * &z;
        sum += &term;
    }
    sum.to_f64().expect("representable")
}

/// `Γ(κ+1) Γ(m+2κ) / (Γ(2κ+1) Γ(m+κ))` (the Gamma expression, with no `m = 0` convention).
fn p_zero_gamma(m: usize, kappa: f64) -> f64 {
    let m = m as f64;
    (libm::lgamma(kappa + 1.0) + libm::lgamma(m + 2.0 * kappa) - libm::lgamma(2.0 * kappa + 1.0) - libm::lgamma(m + kappa)).exp()
}

/// `P_m^κ(ix)` through the hypergeometric representation, `-sinh²(ix/2) = sin²(x/2)`.
fn p_hypergeometric(m: usize, kappa: f64, x: f64) -> f64 {
    let s = (0.5 * x).sin();
    p_zero_gamma(m, kappa) * hyp2f1_terminating(m as f64 + 2.0 * kappa, m, kappa + 0.5, s * s)
}

/// `E_{±n}^k(ix)`, `n >= 1`, from the explicit formulas with `sinh(ix) = i sin x`.
fn e_hypergeometric(n: i64, k: f64, x: f64) -> Complex64 {
    let m = n.unsigned_abs() as usize;
    let mf = m as f64;
    let even = p_hypergeometric(m, k, x);
    let odd = x.sin() * p_hypergeometric(m - 1, k + 1.0, x);
    if n > 0 {
        Complex64::new(even, 2.0 * odd)
    } else {
        Complex64::new((mf + 2.0 * k) / (mf + k) * even, -2.0 * mf / (mf + k) * odd)
    }
}

/// `‖E_{n+1}‖² = ‖E_{-n}‖² = π 2^{1-2k} n! Γ(n+2k+1) / Γ(n+k+1)²`.
fn norm_closed_form(n: i64, k: f64) -> f64 {
    let m = if n > 0 { (n - 1) as f64 } else { (-n) as f64 };
    (PI.ln() + (1.0 - 2.0 * k) * std::f64::consts::LN_2 + libm::lgamma(m + 1.0) + libm::lgamma(m + 2.0 * k + 1.0)
        - 2.0 * libm::lgamma(m + k + 1.0))
    .exp()
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

// ------------------------------------------------------------ criterion 1

const ORTHO_KS: [f64; 5] = [0.0, 0.3, 0.5, 1.0, 2.5];
const ORTHO_DEGREE: usize = 12;

fn orthogonality(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "orthogonality";
    let mut out = Vec::new();
    let start = Instant::now();
    for k in cfg.ks(&ORTHO_KS) {
        let rule = QuadratureRule::circle(k, cfg.order)?;
        let d = ORTHO_DEGREE as i64;
        let rows: Vec<Vec<Complex64>> = rule.nodes().par_iter().map(|&x| basis_row(k, ORTHO_DEGREE, x)).collect();
        let width = 2 * ORTHO_DEGREE + 1;
        let mut gram = vec![Complex64::new(0.0, 0.0); width * width];
        for (row, &w) in rows.iter().zip(rule.weights()) {
            for a in 0..width {
                for b in 0..width {
                    gram[a * width + b] += row[a] * row[b].conj() * w;
                }
            }
        }
        let norm = |i: usize| norm_closed_form(i as i64 - d, k.get());
        let mut off: f64 = 0.0;
        let mut diag: f64 = 0.0;
        for a in 0..width {
            for b in 0..width {
                let g = gram[a * width + b];
                if a == b {
                    diag = diag.max((g.re - norm(a)).abs().max(g.im.abs()) / norm(a));
                } else {
                    off = off.max(g.norm() / (norm(a) * norm(b)).sqrt());
                }
            }
        }
        let kv = k.get();
        out.push(CheckReport::bound(S, 1, format!("off-diagonal k={kv}"), off, tol::ORTHO_OFFDIAG));
        out.push(CheckReport::bound(S, 1, format!("diagonal-vs-closed-form k={kv}"), diag, tol::ORTHO_DIAG_REL));
        let library = max_of((-d..=d).map(|n| (e_norm_sq(n, k) / norm_closed_form(n, kv) - 1.0).abs()));
        out.push(CheckReport::bound(S, 1, format!("e_norm_sq-vs-closed-form k={kv}"), library, tol::ORTHO_DIAG_REL));

        // doubling the order leaves a degree-100 integrand unchanged
        let mut rng = cfg.rng(1 + (kv * 1000.0) as u64);
        let c: Vec<Complex64> = (0..101).map(|_| random_complex(&mut rng)).collect();
        let f = |x: f64| -> f64 {
            let v: Complex64 = c.iter().enumerate().map(|(j, &a)| a * Complex64::from_polar(1.0, (j as f64 - 50.0) * x)).sum();
            v.norm_sqr()
        };
        let a = QuadratureRule::circle(k, 200)?.integrate(f);
        let b = QuadratureRule::circle(k, 400)?.integrate(f);
        out.push(CheckReport::bound(S, 1, format!("order-doubling k={kv}"), (a - b).abs() / b.abs(), tol::ORDER_DOUBLING_REL));
    }
    let elapsed = start.elapsed().as_secs_f64();
    out.push(CheckReport::bound(S, 1, "runtime-seconds", elapsed, tol::ORTHO_RUNTIME_S));
    Ok(out)
}

// ------------------------------------------------------------ criterion 2

const IDENTITY_DEGREE: i64 = 20;
const HYPERGEOMETRIC_DEGREE: i64 = 15;
const FD_DEGREE: i64 = 12;

fn identities(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "identities";
    let mut out = Vec::new();
    let xs = grid(64, 0.5);
    for k in cfg.ks(&ORTHO_KS) {
        let kv = k.get();
        let mut shift: f64 = 0.0;
        let mut reflect: f64 = 0.0;
        for n in -IDENTITY_DEGREE..=IDENTITY_DEGREE {
            for &x in &xs {
                let lhs = e_eval(n + 1, k, x);
                let rhs = Complex64::from_polar(1.0, x) * e_eval(-n, k, x).conj();
                shift = shift.max(rel((lhs - rhs).norm(), lhs.norm()));
                if n >= 1 {
                    let en = e_eval(n, k, x);
                    let lhs = e_eval(-n, k, x);
                    let rhs = en.conj() + en * (kv / (n as f64 + kv));
                    reflect = reflect.max(rel((lhs - rhs).norm(), lhs.norm()));
                }
            }
        }
        out.push(CheckReport::bound(S, 2, format!("shift-identity k={kv}"), shift, tol::IDENTITY_REL));
        out.push(CheckReport::bound(S, 2, format!("reflection-identity k={kv}"), reflect, tol::IDENTITY_REL));

        let mut hyp_e: f64 = 0.0;
        let mut hyp_p: f64 = 0.0;
        for n in 1..=HYPERGEOMETRIC_DEGREE {
            for &x in &xs {
                for m in [n, -n] {
                    let want = e_hypergeometric(m, kv, x);
                    hyp_e = hyp_e.max(rel((e_eval(m, k, x) - want).norm(), want.norm()));
                }
                let want = p_hypergeometric(n as usize, kv, x);
                hyp_p = hyp_p.max(rel((p_eval(n, k, x)? - want).abs(), want.abs()));
            }
        }
        out.push(CheckReport::bound(S, 2, format!("explicit-E-vs-2F1 k={kv}"), hyp_e, tol::HYPERGEOMETRIC_REL));
        out.push(CheckReport::bound(S, 2, format!("P-vs-2F1 k={kv}"), hyp_p, tol::HYPERGEOMETRIC_REL));

        let ratio = max_of((1..=40).map(|n| {
            let nf = n as f64;
            let want = nf * (nf + 2.0 * kv) / (nf + kv).powi(2);
            let got = e_norm_sq(n + 1, k) / e_norm_sq(n, k);
            let pair = (e_norm_sq(-n, k) / e_norm_sq(n + 1, k) - 1.0).abs();
            (got / want - 1.0).abs().max(pair)
        }));
        out.push(CheckReport::bound(S, 2, format!("norm-recurrence k={kv}"), ratio, tol::NORM_RATIO_REL));

        let table = max_of((-100i64..=100).map(|n| {
            let want = if n > 0 { n as f64 + kv } else { n as f64 - kv };
            (extended_eigenvalue(n, k) - want).abs()
        }));
        out.push(CheckReport::bound(S, 2, format!("eigenvalue-table k={kv}"), table, 0.0));

        let h = 1e-4;
        let fd = max_of((-FD_DEGREE..=FD_DEGREE).flat_map(|n| {
            xs.iter().step_by(4).map(move |&x| {
                let exact = e_deriv(n, k, x);
                let approx = (e_eval(n, k, x + h) - e_eval(n, k, x - h)) / (2.0 * h);
                rel((exact - approx).norm(), exact.norm())
            })
        }));
        out.push(CheckReport::bound(S, 2, format!("derivative-finite-difference k={kv}"), fd, tol::FINITE_DIFFERENCE_REL));
    }
    Ok(out)
}

// ------------------------------------------------------------ criterion 3

const EIGEN_KS: [f64; 3] = [0.3, 1.0, 2.5];
const EIGEN_DEGREE: i64 = 16;

fn eigen(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "eigen";
    let mut out = Vec::new();
    let mut xs = grid(64, 0.5);
    // points on and next to the removable singularities
    xs.extend([0.0, 3e-7, PI, -PI + 2e-7]);
    for k in cfg.ks(&EIGEN_KS) {
        let kv = k.get();
        let jet = |n: i64, x: f64| -> Jet {
            if k.is_classical() {
                let e = Complex64::from_polar(1.0, n as f64 * x);
                let i_n = Complex64::new(0.0, n as f64);
                Jet {
                    value: e,
                    d1: e * i_n,
                    d2: e * i_n * i_n,
                }
            } else {
                e_jet(n, k, x, Domain::Circle)
            }
        };
        let tcal = max_of((-EIGEN_DEGREE..=EIGEN_DEGREE).flat_map(|n| {
            let jet = &jet;
            xs.iter().map(move |&x| {
                let e = jet(n, x).value;
                let want = e * Complex64::new(0.0, extended_eigenvalue(n, k));
                let got = apply_tcal(|y| jet(n, y), x, k);
                rel((got - want).norm(), want.norm())
            })
        }));
        out.push(CheckReport::bound(S, 3, format!("circle-cherednik k={kv}"), tcal, tol::EIGEN_REL));

        let delta = max_of((0..=EIGEN_DEGREE as usize).flat_map(|n| {
            xs.iter().map(move |&x| {
                let p = p_jet(n, k, x, Domain::Circle).value;
                let lam = (n as f64 + kv).powi(2);
                let got = apply_delta_even(|y| p_jet(n, k, y, Domain::Circle), x, k);
                rel((got + p * lam).norm(), lam * p.norm())
            })
        }));
        out.push(CheckReport::bound(S, 3, format!("even-laplacian k={kv}"), delta, tol::EIGEN_REL));

        let real_xs = [-1.0, -0.6, -0.2, -4e-7, 0.0, 5e-7, 0.3, 0.8, 1.0];
        let t_real = max_of((-8i64..=8).flat_map(|n| {
            real_xs.iter().map(move |&x| {
                let want = extended_eigenvalue(n, k) * e_eval_real(n, k, x);
                let got = apply_t_real_fn(|y| e_jet(n, k, y, Domain::Real), x, k);
                rel((got - want).norm(), want.abs())
            })
        }));
        out.push(CheckReport::bound(S, 3, format!("real-axis-cherednik k={kv}"), t_real, tol::EIGEN_REL));

        let l_real = max_of((0usize..=8).flat_map(|n| {
            real_xs.iter().map(move |&x| {
                let p = p_jet(n, k, x, Domain::Real).value;
                let want = p * (n as f64 + kv).powi(2);
                let got = apply_l_real(|y| p_jet(n, k, y, Domain::Real), x, k);
                rel((got - want).norm(), want.norm())
            })
        }));
        out.push(CheckReport::bound(S, 3, format!("real-axis-laplacian k={kv}"), l_real, tol::EIGEN_REL));

        let mut rng = cfg.rng(3 + (kv * 1000.0) as u64);
        let exp = random_expansion(k, 8, &mut rng);
        let spectral = cherednik_spectral(&exp);
        let agree = max_of(xs.iter().map(|&x| {
            let want = spectral.synthesize(x);
            let got = apply_tcal(|y| expansion_jet(&exp, y), x, k);
            rel((got - want).norm(), want.norm())
        }));
        out.push(CheckReport::bound(S, 3, format!("cherednik-spectral-vs-pointwise k={kv}"), agree, tol::CHEREDNIK_SPECTRAL_REL));
    }
    Ok(out)
}

// ------------------------------------------------------------ criterion 4

const BASIS_DEGREE: i64 = 12;

fn basis(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "basis";
    let mut out = Vec::new();
    for k in cfg.ks(&ORTHO_KS) {
        let kv = k.get();
        let rule = QuadratureRule::circle(k, cfg.order)?;
        let mut violations = 0usize;
        let mut lead: f64 = 0.0;
        let mut min_re = f64::INFINITY;
        let mut max_im: f64 = 0.0;
        let mut ortho: f64 = 0.0;
        let exp_norm = circle_mass(k).sqrt();
        for n in -BASIS_DEGREE..=BASIS_DEGREE {
            let fs = exp_fourier_support(n, k, BASIS_DEGREE as usize)?;
            violations += fs.support_violations(tol::SUPPORT_COEFF).len();
            lead = lead.max((fs.coeff(n) - 1.0).norm());
            let (re, im) = fs.sign_report();
            min_re = min_re.min(re);
            max_im = max_im.max(im);
            for j in -BASIS_DEGREE..=BASIS_DEGREE {
                if crate::special_fn::triangleleft(j, n) {
                    let ip = rule.inner_product(|x| e_eval(n, k, x), |x| Complex64::from_polar(1.0, j as f64 * x))?;
                    ortho = ortho.max(ip.norm() / (e_norm_sq(n, k).sqrt() * exp_norm));
                }
            }
        }
        out.push(
            CheckReport::bound(S, 4, format!("support-violations k={kv}"), violations as f64, 0.0)
                .with_detail("count of coefficients outside {n} and the lower set"),
        );
        out.push(CheckReport::bound(S, 4, format!("leading-coefficient k={kv}"), lead, tol::LEADING_COEFF));
        out.push(CheckReport::bound(S, 4, format!("nonnegative-coefficients k={kv}"), (-min_re).max(0.0), tol::NONNEGATIVE_COEFF));
        out.push(CheckReport::bound(S, 4, format!("real-coefficients k={kv}"), max_im, tol::NONNEGATIVE_COEFF));
        out.push(CheckReport::bound(S, 4, format!("orthogonal-to-lower-exponentials k={kv}"), ortho, tol::FOURIER_ORTHO));
    }
    Ok(out)
}

// ------------------------------------------------------------ criterion 5

const POISSON_KS: [f64; 3] = [0.5, 1.0, 2.0];
const POISSON_RS: [f64; 3] = [0.3, 0.6, 0.8];
const SERIES_TOL: f64 = 1e-15;

fn poisson(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "poisson";
    let mut out = Vec::new();
    let xs = grid(16, 0.5);
    let ys = grid(16, 0.25);
    let pairs: Vec<(f64, f64)> = xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect();
    for k in cfg.ks(&POISSON_KS) {
        let kv = k.get();
        let kernel = PoissonKernel::new(k)?;
        for r in POISSON_RS {
            let rows: Vec<Result<(f64, f64, f64, f64, f64)>> = pairs
                .par_iter()
                .map(|&(x, y)| {
                    let s = poisson_series_auto(r, x, y, k, SERIES_TOL)?;
                    let i = kernel.eval(r, x, y)?;
                    let swapped = kernel.eval(r, y, x)?;
                    Ok((s.value, s.imag_residual, i, swapped, (s.value - i).abs()))
                })
                .collect();
            let rows: Vec<_> = rows.into_iter().collect::<Result<_>>()?;
            let diff = max_of(rows.iter().map(|r| r.4));
            let imag = max_of(rows.iter().map(|r| r.1));
            let min_integral = rows.iter().map(|r| r.2).fold(f64::INFINITY, f64::min);
            let min_series = rows.iter().map(|r| r.0).fold(f64::INFINITY, f64::min);
            let sym = max_of(rows.iter().map(|r| rel((r.2 - r.3).abs(), r.2.abs())));
            let tag = format!("k={kv} r={r}");
            out.push(CheckReport::bound(S, 5, format!("series-vs-integral {tag}"), diff, tol::POISSON_SERIES_VS_INTEGRAL));
            out.push(CheckReport::bound(S, 5, format!("realness {tag}"), imag, tol::POISSON_IMAG));
            out.push(
                CheckReport::bound(S, 5, format!("positivity {tag}"), (-min_integral).max(-min_series).max(0.0), 0.0)
                    .with_detail(format!("min integral form {min_integral:.3e}, min series {min_series:.3e}")),
            );
            out.push(CheckReport::bound(S, 5, format!("symmetry {tag}"), sym, tol::POISSON_SYMMETRY_REL));

            let origin = max_of(xs.iter().map(|&x| {
                let a = poisson_at_origin(r, x, k).expect("r < 1");
                let b = kernel.eval(r, x, 0.0).expect("r < 1");
                (a - b).abs() / a.abs()
            }));
            out.push(CheckReport::bound(S, 5, format!("origin-closed-form {tag}"), origin, tol::POISSON_ORIGIN_REL));
        }
        out.extend(mass_checks(S, k, cfg)?);
    }
    // classical case always runs
    let k0 = k_of(0.0);
    for r in POISSON_RS {
        let d = max_of(pairs.iter().map(|&(x, y)| {
            let s = poisson_series_auto(r, x, y, k0, SERIES_TOL).expect("r < 1");
            (s.value - poisson_closed_form(r, x, y).expect("r < 1")).abs()
        }));
        out.push(CheckReport::bound(S, 5, format!("classical-series-vs-closed-form r={r}"), d, tol::POISSON_CLASSICAL));
    }
    Ok(out)
}

fn mass_checks(suite: &'static str, k: Multiplicity, cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let kernel = PoissonKernel::new(k)?;
    let rule = QuadratureRule::circle(k, cfg.order)?;
    let mut out = Vec::new();
    for r in POISSON_RS {
        let m = poisson_mass(r, 0.7, &kernel, &rule)?;
        out.push(
            CheckReport::bound(suite, 5, format!("mass k={} r={r}", k.get()), m.abs_error(), tol::POISSON_MASS).with_detail(format!(
                "computed={:.12} r^k={:.12} stated-constant={:.12}",
                m.computed, m.expected, m.stated_constant
            )),
        );
    }
    Ok(out)
}

fn poisson_mass_suite(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for k in cfg.ks(&[0.0, 0.5, 1.0, 2.0]) {
        out.extend(mass_checks("poisson-mass", k, cfg)?);
    }
    Ok(out)
}

// ------------------------------------------------------------ criterion 6

const SEMIGROUP_KS: [f64; 4] = [0.0, 0.5, 1.0, 2.0];
const SEMIGROUP_DEGREE: usize = 8;
const SEMIGROUP_SAMPLES: usize = 3;
const L1_ORDER: usize = 1024;

fn semigroup(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "semigroup";
    let mut out = Vec::new();
    for k in cfg.ks(&SEMIGROUP_KS) {
        let kv = k.get();
        let rule = QuadratureRule::circle(k, cfg.order.max(L1_ORDER))?;
        let mut rng = cfg.rng(6 + (kv * 1000.0) as u64);
        let mut worst: [f64; 3] = [f64::NEG_INFINITY; 3];
        let mut monotone = true;
        let mut conv_detail = String::new();
        for sample in 0..SEMIGROUP_SAMPLES {
            let f = random_expansion(k, SEMIGROUP_DEGREE, &mut rng);
            let norms = |e: &SpectralExpansion| -> Result<[f64; 3]> {
                let l1 = rule.lp_norm(|x| e.synthesize(x), 1.0)?;
                let l2 = rule.lp_norm(|x| e.synthesize(x), 2.0)?;
                let linf = sup_norm(|x| e.synthesize(x).norm());
                Ok([l1, l2, linf])
            };
            let base = norms(&f)?;
            for r in [0.3, 0.6, 0.9, 0.99, 0.999] {
                let fr = norms(&poisson_extend(&f, r)?)?;
                for p in 0..3 {
                    worst[p] = worst[p].max(fr[p] - base[p]);
                }
            }
            let dists: Vec<f64> = [0.9, 0.99, 0.999]
                .iter()
                .map(|&r| {
                    let fr = poisson_extend(&f, r).expect("r < 1");
                    fr.add(&f.scale(Complex64::new(-1.0, 0.0))).expect("same k").l2_norm_sq().sqrt()
                })
                .collect();
            monotone &= dists.windows(2).all(|w| w[1] < w[0]);
            if sample == 0 {
                conv_detail = format!("||f_r - f||_2 at r=0.9,0.99,0.999: {:.3e}, {:.3e}, {:.3e}", dists[0], dists[1], dists[2]);
            }
        }
        for (p, name) in ["L1", "L2", "Linf"].iter().enumerate() {
            out.push(
                CheckReport::bound(S, 6, format!("contraction-{name} k={kv}"), worst[p], tol::SEMIGROUP_SLACK)
                    .with_detail("max of ||P_r f|| - ||f|| over samples and r"),
            );
        }
        out.push(
            CheckReport::bound(S, 6, format!("L2-convergence k={kv}"), if monotone { 0.0 } else { 1.0 }, 0.0)
                .with_detail(conv_detail),
        );

        // kernel path against the multiplier
        let f = random_expansion(k, 4, &mut rng);
        let kernel = PoissonKernel::new(k)?;
        let small = QuadratureRule::circle(k, 32)?;
        let r = 0.6;
        let fr = poisson_extend(&f, r)?;
        let mut diff: f64 = 0.0;
        for x in [-2.5, -0.4, 0.0, 1.1, 3.0] {
            let got = poisson_apply(|y| f.synthesize(y), r, x, &kernel, &small)?;
            diff = diff.max((got - fr.synthesize(x)).norm());
        }
        out.push(CheckReport::bound(S, 6, format!("kernel-vs-multiplier k={kv} r={r}"), diff, tol::POISSON_APPLY));
    }
    Ok(out)
}

// ------------------------------------------------------------ criterion 7

const PRODUCT_KS: [f64; 3] = [0.5, 1.0, 2.0];
const PRODUCT_DEGREE: i64 = 10;
const Z_FORM_ORDER: usize = 128;

/// `∫ W_k(x, y, z) dm_k(z)` in the `z` variable, by Gauss-Jacobi on the support.
fn w_mass_z_form(x: f64, y: f64, k: Multiplicity) -> Result<f64> {
    let kv = k.get();
    let a = (x.abs() - y.abs()).abs();
    let s = x.abs() + y.abs();
    let b = s.min(2.0 * PI - s);
    let rule = QuadratureRule::interior(k, kv - 1.0, Z_FORM_ORDER)?;
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    let mut acc = 0.0;
    for (&u, &w) in rule.nodes().iter().zip(rule.weights()) {
        let z = c + h * u;
        let weight = (1.0 - u * u).powf(kv - 1.0);
        acc += w * w_eval(x, y, z, k)? * z.sin().abs().powf(2.0 * kv) / weight;
    }
    // W is even in z
    Ok(2.0 * h * acc)
}

fn random_angle(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let x: f64 = rng.gen_range(-PI..PI);
        if x.sin().abs() > 0.05 {
            return x;
        }
    }
}

fn product(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "product";
    let mut out = Vec::new();
    for k in cfg.ks(&PRODUCT_KS) {
        let kv = k.get();
        let mut rng = cfg.rng(7 + (kv * 1000.0) as u64);
        let pk = ProductKernel::new(k)?;
        if !k.is_classical() {
            out.extend(product_density_checks(k, &pk, &mut rng)?);
        }
        out.extend(translation_checks(k, &pk, cfg, &mut rng)?);
        out.extend(convolution_checks(k, &pk, cfg, &mut rng)?);
    }
    let mut rng = cfg.rng(71);
    let mismatches = (0..10_000)
        .filter(|_| {
            let (x, y, z) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI), rng.gen_range(0.0..PI));
            let (l, r) = arccos_range_equiv(x, y, z);
            l != r
        })
        .count();
    out.push(CheckReport::bound(S, 7, "arccos-lemma mismatches", mismatches as f64, 0.0));
    Ok(out)
}

fn product_density_checks(k: Multiplicity, pk: &ProductKernel, rng: &mut ChaCha8Rng) -> Result<Vec<CheckReport>> {
    const S: &str = "product";
    let kv = k.get();
    let mut out = Vec::new();
    let pairs: Vec<(f64, f64)> = (0..20).map(|_| (random_angle(rng), random_angle(rng))).collect();
    let mut z_form: f64 = 0.0;
    let mut u_form: f64 = 0.0;
    let mut wcal_mass: f64 = 0.0;
    for &(x, y) in &pairs {
        z_form = z_form.max((w_mass_z_form(x, y, k)? - 1.0).abs());
        u_form = u_form.max((pk.integrate_w(|_| Complex64::new(1.0, 0.0), x, y)? - 1.0).norm());
        wcal_mass = wcal_mass.max((pk.integrate_wcal(|_| Complex64::new(1.0, 0.0), x, y)? - 1.0).norm());
    }
    out.push(CheckReport::bound(S, 7, format!("W-normalization-z-form k={kv}"), z_form, tol::W_NORMALIZATION));
    out.push(CheckReport::bound(S, 7, format!("W-normalization-u-form k={kv}"), u_form, tol::W_NORMALIZATION));
    out.push(CheckReport::bound(S, 7, format!("Wcal-mass k={kv}"), wcal_mass, tol::W_NORMALIZATION));

    let mut sample: Vec<(f64, f64)> = pairs.iter().take(6).copied().collect();
    sample.extend([(0.01, 2.0), (1.3, 1.3), (0.9, -1.3), (-2.9, 3.1)]);
    let mut nonsym: f64 = 0.0;
    let mut sym: f64 = 0.0;
    for &(x, y) in &sample {
        for n in -PRODUCT_DEGREE..=PRODUCT_DEGREE {
            let want = normalized_e(n, k, x) * normalized_e(n, k, y);
            let got = pk.integrate_wcal(|z| normalized_e(n, k, z), x, y)?;
            nonsym = nonsym.max((got - want).norm());
            if n >= 0 {
                let p = |t: f64| p_eval(n, k, t).expect("n >= 0") / p_at_zero(n as usize, k);
                let got = pk.integrate_w(|z| p(z).into(), x, y)?;
                sym = sym.max((got.re - p(x) * p(y)).abs().max(got.im.abs()));
            }
        }
    }
    out.push(CheckReport::bound(S, 7, format!("product-formula k={kv}"), nonsym, tol::PRODUCT_FORMULA));
    out.push(CheckReport::bound(S, 7, format!("symmetric-product-formula k={kv}"), sym, tol::PRODUCT_FORMULA));

    let g = grid(16, 0.5);
    let mut ratio: f64 = 0.0;
    let mut support_leak: f64 = 0.0;
    for &x in &g {
        for &y in &g {
            for &z in &g {
                let w = w_eval(x, y, z, k)?;
                let wc = wcal_eval(x, y, z, k)?;
                if w > 0.0 {
                    ratio = ratio.max(wc.norm() / w);
                } else {
                    support_leak = support_leak.max(wc.norm());
                }
            }
        }
    }
    out.push(CheckReport::bound(S, 7, format!("Wcal-bound |Wcal|/W k={kv}"), ratio, tol::WCAL_BOUND));
    out.push(CheckReport::bound(S, 7, format!("Wcal-vanishes-off-support k={kv}"), support_leak, 0.0));
    Ok(out)
}

fn translation_checks(k: Multiplicity, pk: &ProductKernel, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<CheckReport>> {
    const S: &str = "product";
    let kv = k.get();
    let mut out = Vec::new();
    let f = random_expansion(k, 6, rng);
    let fx = |z: f64| f.synthesize(z);
    let pts = [-2.7, -1.2, -0.3, 0.4, 1.9, 2.8];

    // (i) on the basis, through the kernel path
    let mut basis_err: f64 = 0.0;
    for n in -6i64..=6 {
        for &x in &pts[..3] {
            for &y in &pts[3..] {
                let (got, _) = pk.translate(|z| normalized_e(n, k, z), x, y);
                basis_err = basis_err.max((got - normalized_e(n, k, x) * normalized_e(n, k, y)).norm());
            }
        }
    }
    out.push(CheckReport::bound(S, 7, format!("translation-of-basis k={kv}"), basis_err, tol::TRANSLATION));

    // (ii) symmetry, and kernel path against the spectral path
    let mut symmetry: f64 = 0.0;
    let mut paths: f64 = 0.0;
    for &x in &pts {
        for &y in &pts {
            let (a, _) = pk.translate(fx, x, y);
            let (b, _) = pk.translate(fx, y, x);
            symmetry = symmetry.max((a - b).norm());
            paths = paths.max((a - translate_expansion(&f, x, y)).norm());
        }
    }
    out.push(CheckReport::bound(S, 7, format!("translation-symmetry k={kv}"), symmetry, tol::TRANSLATION));
    out.push(CheckReport::bound(S, 7, format!("translation-kernel-vs-spectral k={kv}"), paths, tol::TRANSLATION_PATHS));

    // Dirac cases
    let mut dirac: f64 = 0.0;
    for &x in &pts {
        for y in [0.0, PI, -PI] {
            let (a, branch) = pk.translate(fx, x, y);
            let ok = matches!(branch, TranslationBranch::Dirac | TranslationBranch::Classical);
            let d = (a - translate_expansion(&f, x, y)).norm();
            dirac = dirac.max(if ok { d } else { f64::INFINITY });
            let (b, _) = pk.translate(fx, y, x);
            dirac = dirac.max((b - translate_expansion(&f, y, x)).norm());
        }
    }
    out.push(CheckReport::bound(S, 7, format!("translation-dirac-cases k={kv}"), dirac, tol::TRANSLATION));

    // (iii) L2 contraction and the factor-16 bounds for p = 1, ∞
    let rule = QuadratureRule::circle(k, cfg.order)?;
    let base2 = f.l2_norm_sq();
    let base1 = rule.lp_norm(fx, 1.0)?;
    let base_inf = sup_norm(|z| fx(z).norm());
    let mut l2_excess = f64::NEG_INFINITY;
    let mut lp_ratio: f64 = 0.0;
    for x in grid(16, 0.5) {
        let t = translate_spectral(&f, x);
        l2_excess = l2_excess.max(t.l2_norm_sq().sqrt() - base2.sqrt());
        let r1 = rule.lp_norm(|z| t.synthesize(z), 1.0)? / base1;
        let rinf = sup_norm(|z| t.synthesize(z).norm()) / base_inf;
        lp_ratio = lp_ratio.max(r1).max(rinf);
    }
    out.push(CheckReport::bound(S, 7, format!("translation-L2-contraction k={kv}"), l2_excess, tol::TRANSLATION));
    out.push(CheckReport::bound(S, 7, format!("translation-Lp-factor k={kv}"), lp_ratio, tol::YOUNG_CONSTANT).with_detail("max ratio over p=1,inf"));

    // (iv) mass preservation through the kernel path
    let small = QuadratureRule::circle(k, 16)?;
    let total = small.integrate_complex(fx);
    let mut mass: f64 = 0.0;
    for &x in &pts {
        let t = small.integrate_complex(|y| pk.translate(fx, x, y).0);
        mass = mass.max((t - total).norm());
    }
    out.push(CheckReport::bound(S, 7, format!("translation-mass k={kv}"), mass, tol::TRANSLATION));
    Ok(out)
}

fn convolution_checks(k: Multiplicity, pk: &ProductKernel, cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<CheckReport>> {
    const S: &str = "product";
    let kv = k.get();
    let mut out = Vec::new();
    let d = 6usize;
    let normalized_unit = |n: i64| SpectralExpansion::unit(k, d, n).scale(Complex64::new(1.0 / e_at_zero(n, k), 0.0));
    let mut rule_err: f64 = 0.0;
    for n in -(d as i64)..=d as i64 {
        for m in -(d as i64)..=d as i64 {
            let c = convolve_spectral(&normalized_unit(n), &normalized_unit(m))?;
            let want = if n == m {
                normalized_unit(n).scale(Complex64::new(normalized_norm_sq(n, k), 0.0))
            } else {
                SpectralExpansion::zeros(k, d)
            };
            let scale = (normalized_norm_sq(n, k) / e_at_zero(n, k)).max(1.0);
            rule_err = rule_err.max(c.max_abs_diff(&want) / scale);
        }
    }
    out.push(CheckReport::bound(S, 7, format!("basis-convolution-rule k={kv}"), rule_err, tol::CONVOLUTION_RULE));

    let f = random_expansion(k, 4, rng);
    let g = random_expansion(k, 4, rng);
    let fg = convolve_spectral(&f, &g)?;
    let small = QuadratureRule::circle(k, 32)?;
    let mut paths: f64 = 0.0;
    for x in [-2.2, 0.0, 0.8, PI] {
        let got = pk.convolve(|z| f.synthesize(z), |z| g.synthesize(z), x, &small)?;
        paths = paths.max((got - fg.synthesize(x)).norm());
    }
    out.push(CheckReport::bound(S, 7, format!("convolution-kernel-vs-spectral k={kv}"), paths, tol::CONVOLUTION_PATHS));

    // Young-type bounds with constant 16
    let rule = QuadratureRule::circle(k, cfg.order)?;
    let norm = |e: &SpectralExpansion, p: f64| rule.lp_norm(|z| e.synthesize(z), p);
    let fg_inf = sup_norm(|z| fg.synthesize(z).norm());
    let young_a = fg_inf / (norm(&f, 2.0)? * norm(&g, 2.0)?);
    let young_b = norm(&fg, 2.0)? / (norm(&f, 1.0)? * norm(&g, 2.0)?);
    let young_c = norm(&fg, 1.0)? / (norm(&f, 1.0)? * norm(&g, 1.0)?);
    out.push(CheckReport::bound(S, 7, format!("young (2,2,inf) k={kv}"), young_a, tol::YOUNG_CONSTANT));
    out.push(CheckReport::bound(S, 7, format!("young (1,2,2) k={kv}"), young_b, tol::YOUNG_CONSTANT));
    out.push(CheckReport::bound(S, 7, format!("young (1,1,1) k={kv}"), young_c, tol::YOUNG_CONSTANT));

    // |f ⋆ g| against |f| ⋆ |g|; the density is complex, so this is observed only
    let mid = QuadratureRule::circle(k, 64)?;
    let mut excess = f64::NEG_INFINITY;
    for x in grid(8, 0.5) {
        let lhs = fg.synthesize(x).norm();
        let rhs = pk.convolve(|z| f.synthesize(z).norm().into(), |z| g.synthesize(z).norm().into(), x, &mid)?;
        excess = excess.max(lhs - rhs.re);
    }
    out.push(CheckReport::report(
        S,
        7,
        format!("pointwise |f*g| - Re(|f|*|g|) max k={kv}"),
        excess,
        "positive values mean the pointwise bound fails on this sample".into(),
    ));
    Ok(out)
}

// ------------------------------------------------------------ criterion 8

const FRACTIONAL_KS: [f64; 4] = [0.0, 0.5, 1.0, 2.0];
const FRACTIONAL_ALPHAS: [f64; 4] = [0.5, 1.0, 2.0, 5.0];
const FRACTIONAL_TERMS: usize = 1600;

fn fractional(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "fractional";
    let mut out = Vec::new();
    let ks = cfg.ks(&FRACTIONAL_KS);
    for &k in &ks {
        let kv = k.get();
        let mut rng = cfg.rng(8 + (kv * 1000.0) as u64);
        let f = random_expansion(k, 10, &mut rng);
        let mut err: f64 = 0.0;
        for alpha in FRACTIONAL_ALPHAS {
            let g = fractional_spectral(&f, alpha)?;
            for n in f.indices() {
                let want = if n == 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    f.coeff(n) * (n.unsigned_abs() as f64).powf(-alpha)
                };
                err = err.max((g.coeff(n) - want).norm());
            }
        }
        out.push(CheckReport::bound(S, 8, format!("multiplier k={kv}"), err, tol::MULTIPLIER_EXACT));
    }

    // classical closed form Σ_{n≥1} cos(nx)/(π n²) = (π² - 3πx + 1.5x²)/(6π)
    let x = 1.0;
    let want = (PI * PI - 3.0 * PI * x + 1.5 * x * x) / (6.0 * PI);
    let got = fractional_kernel(x, k_of(0.0), 2.0, RadialExponent::PoissonKernel, DEFAULT_RADIAL_ORDER)?;
    out.push(CheckReport::bound(S, 8, "classical-alpha-2-closed-form", (got - want).abs(), tol::FRACTIONAL_CLASSICAL));

    for &k in &ks {
        for alpha in FRACTIONAL_ALPHAS {
            for x in [1.0, 2.5] {
                let r = fractional_kernel_report(x, k, alpha, FRACTIONAL_TERMS)?;
                let gap = (r.spectral_extrapolated - r.radial_poisson_exponent).abs() / r.radial_poisson_exponent.abs();
                let printed_gap = (r.spectral_extrapolated - r.radial_printed_exponent).abs() / r.radial_printed_exponent.abs();
                let detail = format!(
                    "partial-sum={:.6e} riesz={:.6e} extrapolated={:.6e} radial(k+1)={:.6e} radial(printed)={:.6e} rel-gap(printed)={:.2e} bracket-min={:.3e}",
                    r.spectral, r.spectral_riesz, r.spectral_extrapolated, r.radial_poisson_exponent, r.radial_printed_exponent, printed_gap, r.bracket_min
                );
                let finite = [r.spectral, r.spectral_riesz, r.radial_poisson_exponent, r.radial_printed_exponent].iter().all(|v| v.is_finite());
                let mut c = CheckReport::report(S, 8, format!("kernel k={} alpha={alpha} x={x} rel-gap(k+1)", k.get()), gap, detail);
                c.passed &= finite;
                out.push(c);
            }
        }
    }
    Ok(out)
}

// ------------------------------------------------------------ criterion 9

const HILBERT_KS: [f64; 3] = [0.5, 1.0, 2.0];
const BUMP: (f64, f64) = (PI / 3.0, 2.0 * PI / 3.0);
const HILBERT_XS: [f64; 5] = [0.1, -0.3, 0.0, 2.9, -2.7];
const BOUND_GRID: usize = 48;
const BOUND_SEPARATION: f64 = 0.05;

/// Spectral truncation for the bump oracle; `E_n(0)` grows like `n^{2k}`.
fn bump_truncation(k: f64) -> usize {
    if k > 1.0 {
        768
    } else {
        512
    }
}

fn bump(x: f64) -> Complex64 {
    crate::expr::Atom::Bump(BUMP.0, BUMP.1).jet(x, k_of(0.0)).value
}

fn hilbert(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "hilbert";
    let mut out = Vec::new();
    let ks = cfg.ks(&HILBERT_KS);
    for &k in &ks {
        let kv = k.get();
        let mut rng = cfg.rng(9 + (kv * 1000.0) as u64);
        let f = random_expansion(k, 12, &mut rng);
        let g = random_expansion(k, 12, &mut rng);
        let hf = hilbert_spectral(&f);
        out.push(CheckReport::bound(
            S,
            9,
            format!("L2-contraction k={kv}"),
            hf.l2_norm_sq().sqrt() - f.l2_norm_sq().sqrt(),
            tol::HILBERT_CONTRACTION,
        ));
        let square = hilbert_spectral(&hf).add(&f)?;
        out.push(CheckReport::bound(S, 9, format!("H^2=-I k={kv}"), square.max_abs_diff(&SpectralExpansion::zeros(k, 12)), tol::HILBERT_SQUARE));

        let rule = QuadratureRule::circle(k, cfg.order)?;
        let hg = hilbert_spectral(&g);
        let a = rule.inner_product(|x| hf.synthesize(x), |x| g.synthesize(x))?;
        let b = rule.inner_product(|x| f.synthesize(x), |x| hg.synthesize(x))?;
        let skew = (a + b).norm() / (f.l2_norm_sq() * g.l2_norm_sq()).sqrt();
        out.push(CheckReport::bound(S, 9, format!("skew-adjoint k={kv}"), skew, tol::SKEW_ADJOINT));

        // analysis round trip at the configured truncation
        let round = analyze(|x| f.synthesize(x), k, cfg.n_trunc, &rule)?;
        out.push(CheckReport::bound(
            S,
            9,
            format!("analysis-round-trip N={} k={kv}", cfg.n_trunc),
            round.retruncate(12).max_abs_diff(&f),
            tol::HILBERT_CONTRACTION,
        ));

        if k.is_classical() {
            out.push(CheckReport::report(S, 9, "kernel checks skipped at k=0", 0.0, "the integral kernel needs k > 0".into()));
            continue;
        }
        let kernel = HilbertKernel::new(k)?;
        let support = Support::new(BUMP.0, BUMP.1)?;
        let spectral = hilbert_spectral(&analyze_default(bump, k, bump_truncation(kv))?);
        let mut agree: f64 = 0.0;
        for x in HILBERT_XS {
            let via_kernel = hilbert_via_kernel(bump, x, support, &kernel)?;
            agree = agree.max((via_kernel - spectral.synthesize(x)).norm());
        }
        out.push(
            CheckReport::bound(S, 9, format!("kernel-vs-spectral k={kv}"), agree, tol::KERNEL_VS_SPECTRAL)
                .with_detail(format!("bump on [pi/3, 2pi/3], spectral N={}", bump_truncation(kv))),
        );

        let bound = kernel_bound_report(&kernel, BOUND_GRID, BOUND_SEPARATION)?;
        out.push(CheckReport::report(
            S,
            9,
            format!("kernel-bound sup |H| ||x|-|y||^(2k+1) k={kv}"),
            bound.max_product,
            format!("{} points, separation >= {}, argmax ({:.3}, {:.3})", bound.points, bound.min_separation, bound.argmax.0, bound.argmax.1),
        ));

        let hs: Vec<f64> = (0..6).map(|i| 1e-2 * 0.4f64.powi(i)).collect();
        let slope = diagonal_growth_slope(&kernel, 1.0, &hs)?;
        out.push(CheckReport::report(
            S,
            9,
            format!("diagonal-growth-slope k={kv}"),
            slope,
            "log-log slope of |H(1+h,1)|; ball volume near y=1 scales like h".to_string(),
        ));

        // toward the pole along x = s, y = 2s, where ||x| - |y|| = s
        let ray: Vec<(f64, f64)> = (0..8)
            .map(|i| {
                let s = 0.2 * 0.5f64.powi(i);
                Ok((s, kernel.eval(s, 2.0 * s)?.norm()))
            })
            .collect::<Result<_>>()?;
        let scaled: Vec<f64> = ray.iter().map(|&(s, h)| h * s.powf(2.0 * kv + 1.0)).collect();
        let (lo, hi) = scaled.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &v| (l.min(v), h.max(v)));
        let (first, last) = (ray[0], ray[ray.len() - 1]);
        let ray_slope = (last.1 / first.1).ln() / (last.0 / first.0).ln();
        out.push(
            CheckReport::bound(S, 9, format!("ray-growth spread k={kv}"), hi / lo, tol::RAY_GROWTH_FACTOR).with_detail(
                format!("|H(s,2s)| s^(2k+1) for s = 0.2 / 2^i, i < 8; slope {ray_slope:.3} vs {:.1}", -(2.0 * kv + 1.0)),
            ),
        );

        let g12 = grid(12, 0.5);
        let mut anti: f64 = 0.0;
        for &x in &g12 {
            for &y in grid(12, 0.2).iter() {
                let a = kernel.eval(x, y)?;
                let b = kernel.eval(y, x)?;
                anti = anti.max((a + b.conj()).norm() / a.norm().max(1.0));
            }
        }
        out.push(CheckReport::bound(S, 9, format!("kernel-antisymmetry k={kv}"), anti, tol::KERNEL_ANTISYMMETRY_REL));

        let values: Vec<f64> = (0..5)
            .map(|i| hormander_experiment(1.0, 1.0 + 0.2 * 0.5f64.powi(i), &kernel))
            .collect::<Result<_>>()?;
        let (lo, hi) = values.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &v| (l.min(v), h.max(v)));
        let detail = format!("values {:?}", values.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>());
        if (kv - 1.0).abs() < 1e-12 || ks.len() == 1 {
            out.push(CheckReport::bound(S, 9, format!("hormander-spread k={kv}"), hi / lo, tol::HORMANDER_FACTOR).with_detail(detail));
        } else {
            out.push(CheckReport::report(S, 9, format!("hormander-spread k={kv}"), hi / lo, detail));
        }
    }

    let mut rng = cfg.rng(99);
    let worst = max_of((0..10_000).map(|_| {
        let m = min_sin_identity(rng.gen_range(-PI..=PI), rng.gen_range(-PI..=PI));
        (m.lhs - m.rhs).abs()
    }));
    out.push(CheckReport::bound(S, 9, "min-sin-identity", worst, tol::MIN_SIN));
    Ok(out)
}

// ----------------------------------------------------------- criterion 10

fn classical(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    const S: &str = "classical";
    let k = k_of(0.0);
    let mut out = Vec::new();
    let xs = grid(64, 0.5);

    let basis = max_of((-20i64..=20).flat_map(|n| xs.iter().map(move |&x| (e_eval(n, k, x) - Complex64::from_polar(1.0, n as f64 * x)).norm())));
    out.push(CheckReport::bound(S, 10, "basis-is-exponential", basis, tol::CLASSICAL));

    let rule = QuadratureRule::circle(k, cfg.order)?;
    let mut gram: f64 = 0.0;
    for n in -8i64..=8 {
        for m in -8i64..=8 {
            let ip = rule.inner_product(|x| e_eval(n, k, x), |x| e_eval(m, k, x))?;
            let want = if n == m { 2.0 * PI } else { 0.0 };
            gram = gram.max((ip - want).norm());
        }
    }
    out.push(CheckReport::bound(S, 10, "orthogonality-2pi", gram, tol::CLASSICAL));

    let kernel = PoissonKernel::new(k)?;
    let mut pk: f64 = 0.0;
    for &x in xs.iter().step_by(4) {
        for &y in xs.iter().step_by(5) {
            for r in [0.0, 0.3, 0.8] {
                let c = poisson_closed_form(r, x, y)?;
                pk = pk.max((kernel.eval(r, x, y)? - c).abs());
                pk = pk.max((poisson_series_auto(r, x, y, k, SERIES_TOL)?.value - c).abs());
            }
        }
    }
    out.push(CheckReport::bound(S, 10, "classical-poisson-kernel", pk, tol::CLASSICAL));
    let mass = max_of(POISSON_RS.iter().map(|&r| poisson_mass(r, 0.4, &kernel, &rule).map(|m| (m.computed - 1.0).abs()).unwrap_or(f64::INFINITY)));
    out.push(CheckReport::bound(S, 10, "classical-poisson-mass-one", mass, tol::CLASSICAL));

    let mut hilbert_err: f64 = 0.0;
    for n in 1..=8i64 {
        let nf = n as f64;
        let c = hilbert_spectral(&analyze(|x| (nf * x).cos().into(), k, 16, &rule)?);
        let s = hilbert_spectral(&analyze(|x| (nf * x).sin().into(), k, 16, &rule)?);
        for &x in &xs {
            hilbert_err = hilbert_err.max((c.synthesize(x) + (nf * x).sin()).norm());
            hilbert_err = hilbert_err.max((s.synthesize(x) - (nf * x).cos()).norm());
        }
    }
    out.push(CheckReport::bound(S, 10, "hilbert(cos nx)=-sin nx, hilbert(sin nx)=cos nx", hilbert_err, tol::CLASSICAL));

    let mut rng = cfg.rng(10);
    let f = random_expansion(k, 6, &mut rng);
    let pk = ProductKernel::new(k)?;
    let mut shift: f64 = 0.0;
    for &x in xs.iter().step_by(8) {
        for &y in xs.iter().step_by(7) {
            let want = f.synthesize(x + y);
            shift = shift.max((pk.translate(|z| f.synthesize(z), x, y).0 - want).norm());
            shift = shift.max((translate_expansion(&f, x, y) - want).norm());
        }
    }
    out.push(CheckReport::bound(S, 10, "translation-is-shift", shift, tol::CLASSICAL));

    let mut conv: f64 = 0.0;
    for n in -5i64..=5 {
        for m in -5i64..=5 {
            let c = convolve_spectral(&SpectralExpansion::unit(k, 5, n), &SpectralExpansion::unit(k, 5, m))?;
            let want = if n == m { SpectralExpansion::unit(k, 5, n).scale((2.0 * PI).into()) } else { SpectralExpansion::zeros(k, 5) };
            conv = conv.max(c.max_abs_diff(&want));
        }
    }
    out.push(CheckReport::bound(S, 10, "convolution-of-exponentials", conv, tol::CLASSICAL));

    let mut tcal: f64 = 0.0;
    for n in -10i64..=10 {
        for &x in &xs {
            let e = Complex64::from_polar(1.0, n as f64 * x);
            let jet = |y: f64| {
                let v = Complex64::from_polar(1.0, n as f64 * y);
                let i_n = Complex64::new(0.0, n as f64);
                Jet {
                    value: v,
                    d1: v * i_n,
                    d2: v * i_n * i_n,
                }
            };
            tcal = tcal.max((apply_tcal(jet, x, k) - e * Complex64::new(0.0, n as f64)).norm());
        }
    }
    out.push(CheckReport::bound(S, 10, "cherednik-is-derivative", tcal, tol::CLASSICAL));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergeometric_oracle_matches_classical_cases() {
        // k = 0: P_n = cos(nx)
        for n in 1..6 {
            for &x in &[0.3, 1.7, -2.2] {
                assert!((p_hypergeometric(n, 0.0, x) - (n as f64 * x).cos()).abs() < 1e-12);
                let e = e_hypergeometric(n as i64, 0.0, x);
                assert!((e - Complex64::from_polar(1.0, n as f64 * x)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn sup_norm_finds_interior_maximum() {
        let s = sup_norm(|x| (1.0 - (x - 0.123_456).powi(2)).max(0.0));
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn z_form_normalization() {
        let m = w_mass_z_form(0.9, -1.3, k_of(1.0)).unwrap();
        assert!((m - 1.0).abs() < 1e-10);
    }

    #[test]
    fn config_validation() {
        let cfg = VerifyConfig {
            order: 10,
            ..VerifyConfig::default()
        };
        assert!(cfg.validate().is_err());
        assert!(run_suite("nope", &VerifyConfig::default()).is_err());
    }
}
