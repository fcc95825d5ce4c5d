//! Expansions in the basis `E_n^k(ix)` and the diagonal multipliers acting on
//! them (Poisson damping, Hilbert transform, fractional integral, Cherednik
//! operator, translation and convolution).

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::QuadratureRule;
use crate::special_fn::{
    basis_row_cs, e_at_zero, e_eval, e_norm_sq, extended_eigenvalue, triangleleft, Multiplicity,
};

/// Default truncation degree.
pub const DEFAULT_TRUNCATION: usize = 64;

/// JSON schema tag written into every serialized expansion.
pub const SCHEMA: &str = "opdam-a1/v1";

/// Sign convention of the Hilbert multiplier at `n = 0`: `-i`, the sign of
/// `n_k = -k`.
pub const HILBERT_ZERO_SIGN: f64 = -1.0;

/// Order of the analysis rule used when none is supplied: `4N`, at least 8.
pub fn default_order(n_max: usize) -> usize {
    (4 * n_max).max(8)
}

/// Smallest circle-rule order accepted by [`analyze`] for truncation `N`.
pub fn required_order(n_max: usize) -> usize {
    2 * n_max + 2
}

/// Truncated table `{a_n : |n| <= N}` of `f = Σ a_n E_n^k(ix)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralExpansion {
    k: Multiplicity,
    n_max: usize,
    coeffs: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    n: i64,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    schema: String,
    k: f64,
    #[serde(rename = "N")]
    n_max: usize,
    entries: Vec<Entry>,
}

impl SpectralExpansion {
    pub fn zeros(k: Multiplicity, n_max: usize) -> Self {
        SpectralExpansion {
            k,
            n_max,
            coeffs: vec![Complex64::new(0.0, 0.0); 2 * n_max + 1],
        }
    }

    /// `coeffs[n + N]` holds `a_n`.
    pub fn from_coeffs(k: Multiplicity, n_max: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != 2 * n_max + 1 {
            return Err(Error::Parse(format!(
                "expected {} coefficients, got {}",
                2 * n_max + 1,
                coeffs.len()
            )));
        }
        Ok(SpectralExpansion { k, n_max, coeffs })
    }

    /// Expansion of the single basis function `E_n`.
    pub fn unit(k: Multiplicity, n_max: usize, n: i64) -> Self {
        let mut e = Self::zeros(k, n_max);
        e.set(n, Complex64::new(1.0, 0.0));
        e
    }

    pub fn k(&self) -> Multiplicity {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.n_max
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> {
        let n = self.n_max as i64;
        -n..=n
    }

    /// `a_n`, zero beyond the truncation.
    pub fn coeff(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.n_max {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[(n + self.n_max as i64) as usize]
    }

    /// Sets `a_n`; indices beyond the truncation are ignored.
    pub fn set(&mut self, n: i64, value: Complex64) {
        if n.unsigned_abs() as usize <= self.n_max {
            self.coeffs[(n + self.n_max as i64) as usize] = value;
        }
    }

    /// Applies the diagonal multiplier `a_n -> m(n) a_n`.
    pub fn multiply<M: Fn(i64) -> Complex64>(&self, m: M) -> Self {
        let coeffs = self
            .indices()
            .zip(&self.coeffs)
            .map(|(n, &a)| a * m(n))
            .collect();
        SpectralExpansion {
            k: self.k,
            n_max: self.n_max,
            coeffs,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.multiply(|_| c)
    }

    /// Coefficientwise sum; the result has the larger truncation.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_k(self, other)?;
        let n_max = self.n_max.max(other.n_max);
        let mut out = Self::zeros(self.k, n_max);
        for n in out.indices().collect::<Vec<_>>() {
            out.set(n, self.coeff(n) + other.coeff(n));
        }
        Ok(out)
    }

    /// Same coefficients, truncation changed to `n_max` (dropping or zero-padding).
    pub fn retruncate(&self, n_max: usize) -> Self {
        let mut out = Self::zeros(self.k, n_max);
        for n in out.indices().collect::<Vec<_>>() {
            out.set(n, self.coeff(n));
        }
        out
    }

    /// `Σ a_n E_n^k(ix)`.
    pub fn synthesize(&self, x: f64) -> Complex64 {
        let row = basis_row_cs(self.k, self.n_max, x.cos(), x.sin());
        self.coeffs.iter().zip(&row).map(|(a, e)| a * e).sum()
    }

    /// [`Self::synthesize`] at many points, in input order.
    pub fn synthesize_many(&self, xs: &[f64]) -> Vec<Complex64> {
        xs.par_iter().map(|&x| self.synthesize(x)).collect()
    }

    /// `Σ |a_n|² ‖E_n‖²`, i.e. `‖f‖²_{2,k}` by Parseval.
    pub fn l2_norm_sq(&self) -> f64 {
        self.indices()
            .zip(&self.coeffs)
            .map(|(n, a)| a.norm_sqr() * e_norm_sq(n, self.k))
            .sum()
    }

    /// `(f, g)_k = Σ a_n conj(b_n) ‖E_n‖²`.
    pub fn inner_product(&self, other: &Self) -> Result<Complex64> {
        check_same_k(self, other)?;
        let n = self.n_max.min(other.n_max) as i64;
        Ok((-n..=n)
            .map(|j| self.coeff(j) * other.coeff(j).conj() * e_norm_sq(j, self.k))
            .sum())
    }

    /// Largest coefficient difference `max_n |a_n - b_n|` over both supports.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.n_max.max(other.n_max) as i64;
        (-n..=n)
            .map(|j| (self.coeff(j) - other.coeff(j)).norm())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> String {
        let doc = ExpansionJson {
            schema: SCHEMA.to_string(),
            k: self.k.get(),
            n_max: self.n_max,
            entries: self
                .indices()
                .zip(&self.coeffs)
                .map(|(n, a)| Entry {
                    n,
                    re: a.re,
                    im: a.im,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: ExpansionJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema != SCHEMA {
            return Err(Error::Parse(format!("unknown schema {:?}", doc.schema)));
        }
        let k = Multiplicity::new(doc.k)?;
        let mut out = Self::zeros(k, doc.n_max);
        for e in doc.entries {
            if e.n.unsigned_abs() as usize > doc.n_max {
                return Err(Error::Parse(format!("entry n = {} exceeds N = {}", e.n, doc.n_max)));
            }
            out.set(e.n, Complex64::new(e.re, e.im));
        }
        Ok(out)
    }
}

fn check_same_k(a: &SpectralExpansion, b: &SpectralExpansion) -> Result<()> {
    if a.k != b.k {
        return Err(Error::MismatchedMultiplicity(a.k.get(), b.k.get()));
    }
    Ok(())
}

/// `a_n = (f, E_n)_k / ‖E_n‖²` by the circle rule `rule`.
///
/// Exact for trigonometric polynomials of degree `<= N`. The rule must have
/// order at least `2N + 2` and the same multiplicity.
pub fn analyze<F>(f: F, k: Multiplicity, n_max: usize, rule: &QuadratureRule) -> Result<SpectralExpansion>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    if !rule.is_circle() {
        return Err(Error::NotACircleRule);
    }
    if rule.k() != k.get() {
        return Err(Error::MismatchedMultiplicity(rule.k(), k.get()));
    }
    let required = required_order(n_max);
    if rule.order() < required {
        return Err(Error::UnderResolvedRule {
            order: rule.order(),
            degree: n_max,
            required,
        });
    }
    let width = 2 * n_max + 1;
    let contributions: Vec<Vec<Complex64>> = rule
        .nodes()
        .par_iter()
        .zip(rule.weights())
        .map(|(&x, &w)| {
            let fx = f(x) * w;
            basis_row_cs(k, n_max, x.cos(), x.sin())
                .into_iter()
                .map(|e| fx * e.conj())
                .collect()
        })
        .collect();
    let mut acc = vec![Complex64::new(0.0, 0.0); width];
    for row in &contributions {
        for (a, c) in acc.iter_mut().zip(row) {
            *a += c;
        }
    }
    let n = n_max as i64;
    for (j, a) in (-n..=n).zip(acc.iter_mut()) {
        *a /= e_norm_sq(j, k);
    }
    SpectralExpansion::from_coeffs(k, n_max, acc)
}

/// [`analyze`] with a freshly built rule of the default order `4N`.
pub fn analyze_default<F>(f: F, k: Multiplicity, n_max: usize) -> Result<SpectralExpansion>
where
    F: Fn(f64) -> Complex64 + Sync,
{
    let rule = QuadratureRule::circle(k, default_order(n_max))?;
    analyze(f, k, n_max, &rule)
}

/// Poisson integral: `a_n -> r^{|n| + k} a_n`.
pub fn poisson_extend(exp: &SpectralExpansion, r: f64) -> Result<SpectralExpansion> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::InvalidRadius(r));
    }
    let k = exp.k().get();
    Ok(exp.multiply(|n| Complex64::new(r.powf(n.unsigned_abs() as f64 + k), 0.0)))
}

/// Hilbert transform: `+i` for `n >= 1`, `-i` for `n <= 0`.
pub fn hilbert_spectral(exp: &SpectralExpansion) -> SpectralExpansion {
    exp.multiply(|n| {
        if n >= 1 {
            Complex64::new(0.0, 1.0)
        } else {
            Complex64::new(0.0, HILBERT_ZERO_SIGN)
        }
    })
}

/// Fractional integral: `a_n -> |n|^{-α} a_n`, `a_0 -> 0`.
pub fn fractional_spectral(exp: &SpectralExpansion, alpha: f64) -> Result<SpectralExpansion> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidAlpha(alpha));
    }
    Ok(exp.multiply(|n| {
        if n == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new((n.unsigned_abs() as f64).powf(-alpha), 0.0)
        }
    }))
}

/// Circle Cherednik operator: `a_n -> i n_k a_n`.
pub fn cherednik_spectral(exp: &SpectralExpansion) -> SpectralExpansion {
    let k = exp.k();
    exp.multiply(|n| Complex64::new(0.0, extended_eigenvalue(n, k)))
}

/// Expansion in `y` of `τ_x f(y) = Σ a_n E_n(ix) E_n(iy) / E_n(0)`.
pub fn translate_spectral(exp: &SpectralExpansion, x: f64) -> SpectralExpansion {
    let k = exp.k();
    exp.multiply(|n| e_eval(n, k, x) / e_at_zero(n, k))
}

/// `f ⋆_k g`: coefficient `a_n b_n ‖E_n‖² / E_n(0)` on the common truncation.
pub fn convolve_spectral(f: &SpectralExpansion, g: &SpectralExpansion) -> Result<SpectralExpansion> {
    check_same_k(f, g)?;
    let k = f.k();
    let n_max = f.degree().min(g.degree());
    let f = f.retruncate(n_max);
    Ok(f.multiply(|n| g.coeff(n) * (e_norm_sq(n, k) / e_at_zero(n, k))))
}

/// Classical Fourier coefficients `c_j` of `E_n^k(ix) = Σ c_j e^{ijx}`, `|j| <= N`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSupport {
    pub n: i64,
    pub n_max: usize,
    /// `coeffs[j + N]` holds `c_j`.
    pub coeffs: Vec<Complex64>,
}

impl FourierSupport {
    pub fn coeff(&self, j: i64) -> Complex64 {
        if j.unsigned_abs() as usize > self.n_max {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[(j + self.n_max as i64) as usize]
    }

    /// Indices with `|c_j| > tol`.
    pub fn support(&self, tol: f64) -> Vec<i64> {
        let n = self.n_max as i64;
        (-n..=n).filter(|&j| self.coeff(j).norm() > tol).collect()
    }

    /// Indices with `|c_j| > tol` that are neither `n` nor below it in `◁`.
    pub fn support_violations(&self, tol: f64) -> Vec<i64> {
        self.support(tol)
            .into_iter()
            .filter(|&j| j != self.n && !triangleleft(j, self.n))
            .collect()
    }

    /// Most negative real part and largest imaginary part among the coefficients.
    pub fn sign_report(&self) -> (f64, f64) {
        let min_re = self.coeffs.iter().map(|c| c.re).fold(f64::INFINITY, f64::min);
        let max_im = self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
        (min_re, max_im)
    }
}

/// Classical Fourier coefficients of `E_n^k(ix)` by an exact equispaced DFT.
pub fn exp_fourier_support(n: i64, k: Multiplicity, n_max: usize) -> Result<FourierSupport> {
    if (n.unsigned_abs() as usize) > n_max {
        return Err(Error::UnderResolvedRule {
            order: n_max,
            degree: n.unsigned_abs() as usize,
            required: n.unsigned_abs() as usize,
        });
    }
    // E_n is a trigonometric polynomial of degree |n|; M > |n| + N points are exact.
    let m = 2 * n_max + 2;
    let samples: Vec<Complex64> = (0..m)
        .map(|i| e_eval(n, k, 2.0 * std::f64::consts::PI * i as f64 / m as f64))
        .collect();
    let nn = n_max as i64;
    let coeffs = (-nn..=nn)
        .map(|j| {
            let s: Complex64 = samples
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let phase = -2.0 * std::f64::consts::PI * ((j * i as i64).rem_euclid(m as i64)) as f64
                        / m as f64;
                    v * Complex64::from_polar(1.0, phase)
                })
                .sum();
            s / m as f64
        })
        .collect();
    Ok(FourierSupport { n, n_max, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn k(v: f64) -> Multiplicity {
        Multiplicity::new(v).unwrap()
    }

    #[test]
    fn analyze_basis_function_is_unit_vector() {
        for &kv in &[0.0, 0.5, 1.7] {
            let kk = k(kv);
            let a = analyze_default(|x| e_eval(3, kk, x), kk, 8).unwrap();
            assert!(a.max_abs_diff(&SpectralExpansion::unit(kk, 8, 3)) < 1e-12);
            let c = analyze_default(|_| Complex64::new(1.0, 0.0), kk, 8).unwrap();
            assert!(c.max_abs_diff(&SpectralExpansion::unit(kk, 8, 0)) < 1e-12);
            let e1 = analyze_default(|x| Complex64::from_polar(1.0, x), kk, 8).unwrap();
            assert!(e1.max_abs_diff(&SpectralExpansion::unit(kk, 8, 1)) < 1e-12);
        }
    }

    #[test]
    fn analyze_rejects_under_resolved_rule() {
        let kk = k(1.0);
        let rule = QuadratureRule::circle(kk, 20).unwrap();
        let err = analyze(|_| Complex64::new(1.0, 0.0), kk, 10, &rule).unwrap_err();
        assert!(matches!(err, Error::UnderResolvedRule { required: 22, .. }));
        let other = QuadratureRule::circle(k(0.5), 64).unwrap();
        assert!(analyze(|_| Complex64::new(1.0, 0.0), kk, 10, &other).is_err());
    }

    #[test]
    fn round_trip_sin_2x_classical() {
        let kk = k(0.0);
        let a = analyze_default(|x| Complex64::new((2.0 * x).sin(), 0.0), kk, 6).unwrap();
        for &x in &[-2.0, 0.3, 1.1] {
            assert!((a.synthesize(x) - (2.0 * x).sin()).norm() < 1e-13);
        }
        assert_eq!(SpectralExpansion::zeros(kk, 4).synthesize(0.7), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn multipliers() {
        let kk = k(0.8);
        let mut e = SpectralExpansion::zeros(kk, 3);
        for n in -3..=3 {
            e.set(n, Complex64::new(1.0, 0.0));
        }
        let h = hilbert_spectral(&e);
        assert_eq!(h.coeff(0), Complex64::new(0.0, -1.0));
        assert_eq!(h.coeff(1), Complex64::new(0.0, 1.0));
        let hh = hilbert_spectral(&h);
        assert!(hh.max_abs_diff(&e.scale(Complex64::new(-1.0, 0.0))) == 0.0);
        let c = cherednik_spectral(&e);
        assert_relative_eq!(c.coeff(1).im, 1.8, epsilon = 1e-15);
        assert_relative_eq!(c.coeff(0).im, -0.8, epsilon = 1e-15);
        let f = fractional_spectral(&e, 1.0).unwrap();
        assert_eq!(f.coeff(0), Complex64::new(0.0, 0.0));
        assert_relative_eq!(f.coeff(-2).re, 0.5);
        assert!(fractional_spectral(&e, 0.0).is_err());
        assert!(poisson_extend(&e, 1.0).is_err());
        let p0 = poisson_extend(&SpectralExpansion::unit(k(0.0), 3, 0), 0.0).unwrap();
        assert_eq!(p0.coeff(0), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn json_round_trip() {
        let kk = k(1.25);
        let mut e = SpectralExpansion::zeros(kk, 2);
        e.set(-1, Complex64::new(0.5, -0.25));
        e.set(2, Complex64::new(-3.0, 1e-14));
        let s = e.to_json();
        assert!(s.contains("\"schema\": \"opdam-a1/v1\""));
        assert!(s.contains("\"N\": 2"));
        assert_eq!(SpectralExpansion::from_json(&s).unwrap(), e);
        assert!(SpectralExpansion::from_json("{\"schema\":\"x\",\"k\":1,\"N\":0,\"entries\":[]}").is_err());
    }

    #[test]
    fn fourier_support_examples() {
        let s = exp_fourier_support(1, k(2.0), 6).unwrap();
        assert_eq!(s.support(1e-12), vec![1]);
        let s = exp_fourier_support(-3, k(0.0), 6).unwrap();
        assert_eq!(s.support(1e-12), vec![-3]);
        // E_{-2}^1 = e^{-2ix} + e^{2ix}/3 + 2/3
        let s = exp_fourier_support(-2, k(1.0), 6).unwrap();
        assert_eq!(s.support(1e-12), vec![-2, 0, 2]);
        assert_relative_eq!(s.coeff(2).re, 1.0 / 3.0, epsilon = 1e-14);
        assert_relative_eq!(s.coeff(0).re, 2.0 / 3.0, epsilon = 1e-14);
        assert!(s.support_violations(1e-12).is_empty());
    }
}
