//! Fixed values checked against oracles computed independently in this file:
//! contour integrals of generating functions, hand-summed hypergeometric
//! series, trapezoid sums of periodic integrands and closed forms.

use std::f64::consts::PI;

use libm::tgamma;
use num_complex::Complex64;
use opdam_a1::expr::Expr;
use opdam_a1::poisson::{poisson_closed_form, poisson_integral_form, poisson_series, PoissonKernel};
use opdam_a1::product::{
    arccos_range_equiv, fractional_kernel, normalized_e, normalized_norm_sq, w_eval, ProductKernel, RadialExponent,
};
use opdam_a1::quadrature::QuadratureRule;
use opdam_a1::singular::{apply_delta_even, apply_tcal, hilbert_via_kernel, min_sin_identity, HilbertKernel, Support};
use opdam_a1::special_fn::{
    apply_l_real, apply_t_real_fn, e_at_zero, e_deriv, e_eval, e_jet, e_norm_sq, gegenbauer_at_one, gegenbauer_eval,
    gegenbauer_norm_sq, p_eval, p_jet, triangleleft, Domain,
};
use opdam_a1::spectral::{analyze_default, exp_fourier_support, hilbert_spectral};
use opdam_a1::Multiplicity;

fn k(v: f64) -> Multiplicity {
    Multiplicity::new(v).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

/// Periodic trapezoid rule on [-π, π); spectrally accurate for smooth periodic integrands.
fn trapezoid<F: Fn(f64) -> f64>(f: F, n: usize) -> f64 {
    let h = 2.0 * PI / n as f64;
    (0..n).map(|j| f(-PI + h * j as f64)).sum::<f64>() * h
}

/// Coefficient of `r^n` in `(1 - 2rt + r²)^{-k}` by a contour integral on `|r| = 1/2`.
fn generating_coefficient(n: usize, kv: f64, t: f64) -> f64 {
    let m = 512;
    let rho: f64 = 0.5;
    let sum: Complex64 = (0..m)
        .map(|j| {
            let r = Complex64::from_polar(rho, 2.0 * PI * j as f64 / m as f64);
            (1.0 - 2.0 * t * r + r * r).powf(-kv) / r.powu(n as u32)
        })
        .sum();
    sum.re / m as f64
}

#[test]
fn gegenbauer_values_match_generating_function() {
    assert!(close(gegenbauer_eval(2, 1.0, 1.0).unwrap(), 3.0, 1e-14));
    assert!(close(generating_coefficient(2, 1.0, 1.0), 3.0, 1e-12));
    let want = tgamma(6.4) / (120.0 * tgamma(1.4));
    assert!(close(gegenbauer_eval(5, 0.7, 1.0).unwrap(), want, 1e-13));
    assert!(close(gegenbauer_at_one(5, 0.7).unwrap(), want, 1e-13));
    for &(n, kv, t) in &[(3, 0.25, 0.3), (7, 1.5, -0.8), (10, 2.5, 0.95), (4, 0.5, 0.0)] {
        let got = gegenbauer_eval(n, kv, t).unwrap();
        assert!(close(got, generating_coefficient(n, kv, t), 1e-11), "n={n} k={kv} t={t}");
    }
}

#[test]
fn gegenbauer_norms_by_quadrature() {
    // ∫ C_n(t)² (1-t²)^{k-1/2} dt = ∫_0^π C_n(cos θ)² sin^{2k} θ dθ, half of a periodic integral
    let oracle = |n: usize, kv: f64| {
        0.5 * trapezoid(|th| gegenbauer_eval(n, kv, th.cos()).unwrap().powi(2) * th.sin().abs().powf(2.0 * kv), 4096)
    };
    assert!(close(gegenbauer_norm_sq(0, 1.0).unwrap(), PI / 2.0, 1e-14));
    assert!(close(oracle(0, 1.0), PI / 2.0, 1e-12));
    // C_1^1 = 2t: ∫ 4t² (1-t²)^{1/2} dt = π/2
    assert!(close(gegenbauer_norm_sq(1, 1.0).unwrap(), PI / 2.0, 1e-14));
    assert!(close(oracle(1, 1.0), PI / 2.0, 1e-12));
    // k = 1/2 is Legendre: ∫ 1 dt = 2
    assert!(close(gegenbauer_norm_sq(0, 0.5).unwrap(), 2.0, 1e-14));
    for &(n, kv) in &[(3, 1.0), (5, 2.0), (6, 3.0)] {
        assert!(close(gegenbauer_norm_sq(n, kv).unwrap(), oracle(n, kv), 1e-10), "n={n} k={kv}");
    }
}

#[test]
fn jacobi_polynomial_at_origin_and_hypergeometric_value() {
    for &kv in &[0.3, 1.0, 2.5] {
        for n in 1..8usize {
            let nf = n as f64;
            let want = tgamma(kv + 1.0) * tgamma(nf + 2.0 * kv) / (tgamma(2.0 * kv + 1.0) * tgamma(nf + kv));
            assert!(close(p_eval(n as i64, k(kv), 0.0).unwrap(), want, 1e-12));
            assert!(close(e_at_zero(n as i64, k(kv)), want, 1e-12));
        }
    }
    // P_3^1(π/4) = P_3^1(0) ₂F₁(5, -3; 3/2; sin²(π/8)), four terms
    let z = (PI / 8.0).sin().powi(2);
    let mut term = 1.0;
    let mut f = 1.0;
    for j in 0..3 {
        let jf = j as f64;
        term *= (5.0 + jf) * (-3.0 + jf) / ((1.5 + jf) * (jf + 1.0)) * z;
        f += term;
    }
    let p0 = tgamma(2.0) * tgamma(5.0) / (tgamma(3.0) * tgamma(4.0));
    assert!(close(p_eval(3, k(1.0), PI / 4.0).unwrap(), p0 * f, 1e-13));
}

#[test]
fn basis_values() {
    let e = e_eval(1, k(2.3), 0.4);
    assert!((e - Complex64::from_polar(1.0, 0.4)).norm() < 1e-15);
    for &kv in &[0.0, 0.4, 3.0] {
        assert_eq!(e_eval(0, k(kv), 1.234), Complex64::new(1.0, 0.0));
    }
    assert!((e_eval(-3, k(0.0), 0.7) - Complex64::from_polar(1.0, -2.1)).norm() < 1e-15);
    // E_{-n}(0) = (n + 2k)/(n + k) P_n(0)
    assert!(close(e_eval(-2, k(1.0), 0.0).re, 2.0, 1e-14));
}

#[test]
fn derivative_matches_five_point_stencil() {
    let (n, kk, x, h) = (4, k(0.8), 1.1, 1e-4);
    let f = |t: f64| e_eval(n, kk, t);
    let fd = (f(x - 2.0 * h) - f(x - h) * 8.0 + f(x + h) * 8.0 - f(x + 2.0 * h)) / (12.0 * h);
    let d = e_deriv(n, kk, x);
    assert!((d - fd).norm() < 1e-9 * d.norm());
}

#[test]
fn norms_against_trapezoid_quadrature() {
    for &kv in &[0.5, 1.0, 2.0] {
        let want = 2.0 * PI.sqrt() * tgamma(kv + 0.5) / tgamma(kv + 1.0);
        assert!(close(e_norm_sq(0, k(kv)), want, 1e-13));
        assert!(close(e_norm_sq(1, k(kv)), want, 1e-13));
    }
    // |E_2^1|² sin² x is a trigonometric polynomial: 64 points integrate it exactly
    let got = trapezoid(|x| e_eval(2, k(1.0), x).norm_sqr() * x.sin().powi(2), 64);
    assert!(close(got, 3.0 * PI / 4.0, 1e-14));
    assert!(close(e_norm_sq(2, k(1.0)), 3.0 * PI / 4.0, 1e-14));
    // on (0, π), sin^{2k} x = (x(π - x))^{2k} s(x) with s smooth, and x(π - x) = (π/2)²(1 - u²)
    // for x = (π/2)(1 + u): a Gauss-Jacobi rule in u absorbs the endpoint behaviour
    for &(n, kv) in &[(-4, 0.5), (5, 2.0), (-7, 1.0), (3, 0.3)] {
        let rule = QuadratureRule::jacobi(2.0 * kv, 2.0 * kv, 60).unwrap();
        let half = |sign: f64| {
            rule.integrate(|u| {
                let x = 0.5 * PI * (1.0 + u);
                let s = (x.sin() / (x * (PI - x))).powf(2.0 * kv);
                e_eval(n, k(kv), sign * x).norm_sqr() * s
            }) * (0.5 * PI).powf(4.0 * kv + 1.0)
        };
        let got = half(1.0) + half(-1.0);
        assert!(close(e_norm_sq(n, k(kv)), got, 1e-12), "n={n} k={kv}: {got}");
    }
}

#[test]
fn partial_order_examples() {
    assert!(triangleleft(1, 3));
    assert!(triangleleft(3, -3));
    assert!(!triangleleft(-3, 3));
    assert!(!triangleleft(2, 3));
    let s = exp_fourier_support(1, k(1.3), 4).unwrap();
    assert_eq!(s.support(1e-12), vec![1]);
    let s = exp_fourier_support(-2, k(1.0), 4).unwrap();
    assert!(s.support(1e-12).iter().all(|j| [-2, 0, 2].contains(j)));
}

#[test]
fn cherednik_eigenvalues() {
    for &kv in &[0.5, 1.0, 2.5] {
        let kk = k(kv);
        // real axis: E_1(x) = e^x
        let t = apply_t_real_fn(|x| e_jet(1, kk, x, Domain::Real), 0.5, kk);
        assert!((t - Complex64::new((1.0 + kv) * 0.5f64.exp(), 0.0)).norm() < 1e-12);
        let t = apply_t_real_fn(|x| e_jet(-2, kk, x, Domain::Real), 0.3, kk);
        let want = e_jet(-2, kk, 0.3, Domain::Real).value * (-2.0 - kv);
        assert!((t - want).norm() < 1e-10 * want.norm());
        let l = apply_l_real(|x| p_jet(1, kk, x, Domain::Real), 0.5, kk);
        let want = p_jet(1, kk, 0.5, Domain::Real).value * (1.0 + kv).powi(2);
        assert!((l - want).norm() < 1e-10 * want.norm());
        // circle
        let t = apply_tcal(|x| e_jet(1, kk, x, Domain::Circle), 0.9, kk);
        assert!((t - Complex64::new(0.0, 1.0 + kv) * Complex64::from_polar(1.0, 0.9)).norm() < 1e-12);
        let t = apply_tcal(|x| e_jet(-2, kk, x, Domain::Circle), 0.7, kk);
        let want = Complex64::new(0.0, -2.0 - kv) * e_eval(-2, kk, 0.7);
        assert!((t - want).norm() < 1e-10 * want.norm());
    }
    let d = apply_delta_even(|x| p_jet(2, k(1.0), x, Domain::Circle), 1.0, k(1.0));
    let want = -9.0 * p_eval(2, k(1.0), 1.0).unwrap();
    assert!((d - Complex64::new(want, 0.0)).norm() < 1e-10 * want.abs());
}

#[test]
fn poisson_values() {
    // series with N = 200 against the integral form
    let series = poisson_series(0.5, 0.3, -1.1, k(1.0), 200).unwrap();
    let integral = poisson_integral_form(0.5, 0.3, -1.1, k(1.0)).unwrap();
    assert!((series.value - integral).abs() < 1e-8);
    assert!(series.imag_residual < 1e-12);
    // classical kernel
    for &(r, x, y) in &[(0.3f64, 0.2f64, -2.0f64), (0.9, 1.0, 1.1), (0.0, 0.5, 0.5)] {
        let want = (1.0 - r * r) / (2.0 * PI * (1.0 - 2.0 * r * (x - y).cos() + r * r));
        assert!(close(poisson_closed_form(r, x, y).unwrap(), want, 1e-14));
        let s = poisson_series(r, x, y, k(0.0), 400).unwrap();
        assert!((s.value - want).abs() < 1e-12);
    }
    // mass r^k by trapezoid in y
    let kernel = PoissonKernel::new(k(1.0)).unwrap();
    let mass = trapezoid(|y| kernel.eval(0.5, 0.7, y).unwrap() * y.sin().powi(2), 512);
    assert!((mass - 0.5).abs() < 1e-12);
    let kernel = PoissonKernel::new(k(0.0)).unwrap();
    let mass = trapezoid(|y| kernel.eval(0.8, -1.2, y).unwrap(), 512);
    assert!((mass - 1.0).abs() < 1e-12);
}

#[test]
fn poisson_integral_form_near_the_diagonal() {
    // r close to 1 at x = y: the series needs many terms but converges geometrically
    for &kv in &[0.5, 1.0, 2.0] {
        let r = 0.99;
        let series = poisson_series(r, 0.8, 0.8 + 1e-3, k(kv), 4000).unwrap();
        let integral = poisson_integral_form(r, 0.8, 0.8 + 1e-3, k(kv)).unwrap();
        assert!(close(integral, series.value, 1e-9), "k={kv}: {integral} vs {}", series.value);
    }
}

#[test]
fn product_density_normalization() {
    // k = 1: W dm(z) = (1/2)|sin z| / |sin x sin y| dz on cos(|x|+|y|) < cos z < cos(|x|-|y|),
    // and cos(a - b) - cos(a + b) = 2 sin a sin b makes the mass exactly 1
    let (x, y) = (0.9f64, -1.3f64);
    let (lo, hi) = ((x.abs() - y.abs()).abs(), x.abs() + y.abs());
    let closed = 2.0 * 0.5 * 0.5 * (lo.cos() - hi.cos()) / (x.sin() * y.sin()).abs();
    assert!(close(closed, 1.0, 1e-15));
    for &kv in &[1.0, 2.0, 3.0] {
        let panels = 64;
        let h = (hi - lo) / panels as f64;
        let mass: f64 = (0..panels)
            .map(|p| {
                let rule = QuadratureRule::legendre(lo + p as f64 * h, lo + (p + 1) as f64 * h, 16).unwrap();
                rule.integrate(|z| w_eval(x, y, z, k(kv)).unwrap() * z.sin().abs().powf(2.0 * kv))
            })
            .sum();
        // z and -z both lie in the support
        assert!((2.0 * mass - 1.0).abs() < 1e-10, "k={kv}: {}", 2.0 * mass);
    }
}

#[test]
fn arccos_lemma_and_min_sin_examples() {
    assert_eq!(arccos_range_equiv(1.0, 0.5, 1.2), (true, true));
    assert_eq!(arccos_range_equiv(0.2, 0.1, 2.8), (false, false));
    let m = min_sin_identity(1.2, -0.4);
    assert!((m.lhs - m.rhs).abs() < 1e-15);
    assert!((m.lhs - 0.4f64.sin()).abs() < 1e-15);
}

#[test]
fn basis_convolution_rule() {
    let kk = k(1.0);
    let pk = ProductKernel::new(kk).unwrap();
    let rule = QuadratureRule::circle(kk, 48).unwrap();
    let e = |n: i64| move |x: f64| normalized_e(n, kk, x);
    for &x in &[0.4, -1.7, 2.9] {
        let zero = pk.convolve(e(2), e(3), x, &rule).unwrap();
        assert!(zero.norm() < 1e-9);
        let same = pk.convolve(e(2), e(2), x, &rule).unwrap();
        let want = normalized_e(2, kk, x) * normalized_norm_sq(2, kk);
        assert!((same - want).norm() < 1e-9 * want.norm().max(1.0));
    }
}

#[test]
fn classical_fractional_kernel_against_smoothed_sums() {
    // (1/π) Σ n^{-1/2} cos n at x = 1 by Riesz means of order 6 and Richardson on N, N/2
    let riesz = |n_max: usize| -> f64 {
        let mut s = 0.0;
        for n in (1..=n_max).rev() {
            let damp = (1.0 - n as f64 / (n_max + 1) as f64).powi(6);
            s += damp * (n as f64).powf(-0.5) * (n as f64).cos();
        }
        s / PI
    };
    let (a, b) = (riesz(200_000), riesz(100_000));
    let oracle = 2.0 * a - b;
    let got = fractional_kernel(1.0, k(0.0), 0.5, RadialExponent::PoissonKernel, 200).unwrap();
    assert!((got - oracle).abs() < 1e-6, "{got} vs {oracle}");
    // α = 5: the n = ±1 terms dominate, with remainder (1/π) Σ_{n>=2} n^{-5}
    let got = fractional_kernel(1.0, k(0.0), 5.0, RadialExponent::PoissonKernel, 200).unwrap();
    let two_terms = 1.0f64.cos() / PI;
    let tail: f64 = (2..10_000).map(|n| (n as f64).powi(-5)).sum::<f64>() / PI;
    assert!((got - two_terms).abs() <= tail);
}

#[test]
fn hilbert_kernel_on_a_bump() {
    let kk = k(1.0);
    let f: Expr = format!("bump({},{})", PI / 3.0, 2.0 * PI / 3.0).parse().unwrap();
    // the bump's coefficients decay like exp(-c sqrt(n)); N = 128 leaves about 1e-5
    let exp = analyze_default(|x| f.eval(x, kk), kk, 384).unwrap();
    let spectral = hilbert_spectral(&exp).synthesize(0.1);
    let kernel = HilbertKernel::new(kk).unwrap();
    let support = Support::new(PI / 3.0, 2.0 * PI / 3.0).unwrap();
    let via_kernel = hilbert_via_kernel(|y| f.eval(y, kk), 0.1, support, &kernel).unwrap();
    assert!((via_kernel - spectral).norm() < 1e-6);
    assert_eq!(hilbert_via_kernel(|_| Complex64::new(0.0, 0.0), 0.1, support, &kernel).unwrap(), Complex64::new(0.0, 0.0));
}

#[test]
fn hilbert_kernel_grows_like_inverse_distance_off_the_poles() {
    // away from x, y ∈ {0, π} the singularity is 1/|x - y|
    let kernel = HilbertKernel::new(k(1.0)).unwrap();
    let h1 = kernel.eval(1.0 + 1e-6, 1.0).unwrap().norm();
    let h2 = kernel.eval(1.0 + 1e-8, 1.0).unwrap().norm();
    assert!(close(h2 / h1, 100.0, 1e-3), "{}", h2 / h1);
}
