//! Gauss rules for the weights used throughout the crate.
//!
//! * circle rule: `∫_{-π}^{π} f(x) |sin x|^{2k} dx`, built from the Gauss-Jacobi
//!   rule for `(1 - u²)^{k - 1/2}` under `u = cos x` on both half-periods;
//! * interior rules: `∫_{-1}^{1} g(u) (1 - u²)^a du` for `a ∈ {k - 1, k}`;
//! * Gauss-Legendre on an interval and generalized Gauss-Laguerre on `[0, ∞)`.
//!
//! Nodes and weights come from the Golub-Welsch eigenvalue problem for the
//! Jacobi matrix of the weight's three-term recurrence, solved by implicit QL
//! iterations that only track the first component of each eigenvector.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special_fn::{ln_gamma, Multiplicity};

/// Default order `m` of circle and interior rules.
pub const DEFAULT_ORDER: usize = 256;

/// What a rule integrates against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RuleKind {
    /// `|sin x|^{2k} dx` on `[-π, π]`; `2m` nodes.
    Circle,
    /// `(1 - u²)^exponent du` on `[-1, 1]`.
    Interior { exponent: f64 },
    /// `(1 - u)^alpha (1 + u)^beta du` on `[-1, 1]`.
    Jacobi { alpha: f64, beta: f64 },
    /// `dx` on `[a, b]`.
    Legendre { a: f64, b: f64 },
    /// `t^alpha e^{-t} dt` on `[0, ∞)`.
    Laguerre { alpha: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    kind: RuleKind,
    k: f64,
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Nodes and weights of the Gauss rule with Jacobi matrix `(diag, offdiag)`,
/// `offdiag[i]` coupling `i` and `i + 1`, and zeroth moment `mu0`.
pub fn golub_welsch(diag: &[f64], offdiag: &[f64], mu0: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = vec![0.0; n];
    e[..n.saturating_sub(1)].copy_from_slice(&offdiag[..n.saturating_sub(1)]);
    let mut z = vec![0.0; n];
    if n > 0 {
        z[0] = 1.0;
    }
    tridiagonal_ql(&mut d, &mut e, &mut z)?;
    let mut pairs: Vec<(f64, f64)> = d
        .into_iter()
        .zip(z)
        .map(|(x, v)| (x, mu0 * v * v))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pairs.into_iter().unzip())
}

/// Implicit QL with Wilkinson shifts; `z` carries the first row of the
/// accumulated eigenvector matrix.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 100 {
                return Err(Error::NoConvergence);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let fz = z[i + 1];
                z[i + 1] = s * z[i] + c * fz;
                z[i] = c * z[i] - s * fz;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// `∫_{-1}^{1} (1 - u²)^a du = √π Γ(a + 1) / Γ(a + 3/2)`.
pub fn symmetric_jacobi_mass(a: f64) -> f64 {
    (0.5 * std::f64::consts::PI.ln() + ln_gamma(a + 1.0) - ln_gamma(a + 1.5)).exp()
}

/// Gauss rule for `(1 - u²)^a` on `[-1, 1]`.
fn symmetric_jacobi(m: usize, a: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(a > -1.0) {
        return Err(Error::InvalidExponent(a));
    }
    // Monic recurrence: p_{j+1} = u p_j - b_j p_{j-1},
    // b_1 = 1/(2a+3), b_j = j(j+2a) / ((2j+2a+1)(2j+2a-1)) for j >= 2.
    let offdiag: Vec<f64> = (1..m)
        .map(|j| {
            let jf = j as f64;
            let b = if j == 1 {
                1.0 / (2.0 * a + 3.0)
            } else {
                jf * (jf + 2.0 * a) / ((2.0 * jf + 2.0 * a + 1.0) * (2.0 * jf + 2.0 * a - 1.0))
            };
            b.sqrt()
        })
        .collect();
    let diag = vec![0.0; m];
    let (mut nodes, weights) = golub_welsch(&diag, &offdiag, symmetric_jacobi_mass(a))?;
    // restore exact antisymmetry of the nodes
    for i in 0..m / 2 {
        let v = 0.5 * (nodes[m - 1 - i] - nodes[i]);
        nodes[i] = -v;
        nodes[m - 1 - i] = v;
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    Ok((nodes, weights))
}

/// Gauss rule for `(1 - u)^alpha (1 + u)^beta` on `[-1, 1]`.
fn general_jacobi(m: usize, alpha: f64, beta: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    for e in [alpha, beta] {
        if !(e > -1.0) {
            return Err(Error::InvalidExponent(e));
        }
    }
    let s = alpha + beta;
    let diag: Vec<f64> = (0..m)
        .map(|j| {
            if j == 0 {
                (beta - alpha) / (s + 2.0)
            } else {
                let t = 2.0 * j as f64 + s;
                (beta * beta - alpha * alpha) / (t * (t + 2.0))
            }
        })
        .collect();
    let offdiag: Vec<f64> = (1..m)
        .map(|j| {
            let jf = j as f64;
            let t = 2.0 * jf + s;
            if j == 1 {
                (4.0 * (1.0 + alpha) * (1.0 + beta) / (t * t * (t + 1.0))).sqrt()
            } else {
                (4.0 * jf * (jf + alpha) * (jf + beta) * (jf + s) / (t * t * (t + 1.0) * (t - 1.0))).sqrt()
            }
        })
        .collect();
    let mu0 = ((s + 1.0) * 2f64.ln() + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0) - ln_gamma(s + 2.0)).exp();
    golub_welsch(&diag, &offdiag, mu0)
}

impl QuadratureRule {
    /// Rule for `∫_{-π}^{π} f dm_k` with `2m` nodes `±arccos(u_i)`.
    ///
    /// Integrates trigonometric polynomials of degree `<= 2m - 1` exactly.
    pub fn circle(k: Multiplicity, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidOrder { min: 2, got: m });
        }
        let (u, w) = symmetric_jacobi(m, k.get() - 0.5)?;
        // u ascending => arccos(u) descending in (0, π)
        let half: Vec<(f64, f64)> = u.iter().zip(&w).map(|(&u, &w)| (u.acos(), w)).collect();
        let mut nodes = Vec::with_capacity(2 * m);
        let mut weights = Vec::with_capacity(2 * m);
        for &(x, w) in &half {
            nodes.push(-x);
            weights.push(w);
        }
        for &(x, w) in half.iter().rev() {
            nodes.push(x);
            weights.push(w);
        }
        Ok(QuadratureRule {
            kind: RuleKind::Circle,
            k: k.get(),
            order: m,
            nodes,
            weights,
        })
    }

    /// Gauss-Jacobi rule for `∫_{-1}^{1} g(u) (1 - u²)^exponent du`.
    ///
    /// `k` is recorded for bookkeeping (the rule is usually `k - 1` or `k`).
    pub fn interior(k: Multiplicity, exponent: f64, m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidOrder { min: 1, got: m });
        }
        let (nodes, weights) = symmetric_jacobi(m, exponent)?;
        Ok(QuadratureRule {
            kind: RuleKind::Interior { exponent },
            k: k.get(),
            order: m,
            nodes,
            weights,
        })
    }

    /// Gauss-Jacobi rule for `∫_{-1}^{1} g(u) (1 - u)^alpha (1 + u)^beta du`.
    pub fn jacobi(alpha: f64, beta: f64, m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidOrder { min: 1, got: m });
        }
        let (nodes, weights) = general_jacobi(m, alpha, beta)?;
        Ok(QuadratureRule {
            kind: RuleKind::Jacobi { alpha, beta },
            k: 0.0,
            order: m,
            nodes,
            weights,
        })
    }

    /// Rule for `(1 - u²)^{k-1}`; needs `k > 0`.
    pub fn interior_km1(k: Multiplicity, m: usize) -> Result<Self> {
        if k.is_classical() {
            return Err(Error::RequiresPositiveMultiplicity {
                what: "the (1-u^2)^(k-1) rule",
                k: 0.0,
            });
        }
        Self::interior(k, k.get() - 1.0, m)
    }

    /// Gauss-Legendre on `[a, b]`.
    pub fn legendre(a: f64, b: f64, m: usize) -> Result<Self> {
        let base = Self::interior(Multiplicity::CLASSICAL, 0.0, m)?;
        let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
        Ok(QuadratureRule {
            kind: RuleKind::Legendre { a, b },
            k: 0.0,
            order: m,
            nodes: base.nodes.iter().map(|u| c + h * u).collect(),
            weights: base.weights.iter().map(|w| h * w).collect(),
        })
    }

    /// Generalized Gauss-Laguerre rule for `t^alpha e^{-t}` on `[0, ∞)`.
    pub fn laguerre(alpha: f64, m: usize) -> Result<Self> {
        if !(alpha > -1.0) {
            return Err(Error::InvalidExponent(alpha));
        }
        if m < 1 {
            return Err(Error::InvalidOrder { min: 1, got: m });
        }
        let diag: Vec<f64> = (0..m).map(|j| 2.0 * j as f64 + 1.0 + alpha).collect();
        let offdiag: Vec<f64> = (1..m).map(|j| (j as f64 * (j as f64 + alpha)).sqrt()).collect();
        let (nodes, weights) = golub_welsch(&diag, &offdiag, libm::lgamma(alpha + 1.0).exp())?;
        Ok(QuadratureRule {
            kind: RuleKind::Laguerre { alpha },
            k: 0.0,
            order: m,
            nodes,
            weights,
        })
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn is_circle(&self) -> bool {
        self.kind == RuleKind::Circle
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    pub fn integrate_complex<F: Fn(f64) -> Complex64>(&self, f: F) -> Complex64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| f(x) * w).sum()
    }

    /// `(f, g)_k = ∫ f conj(g) dm_k` for callables; circle rules only.
    pub fn inner_product<F, G>(&self, f: F, g: G) -> Result<Complex64>
    where
        F: Fn(f64) -> Complex64,
        G: Fn(f64) -> Complex64,
    {
        if !self.is_circle() {
            return Err(Error::NotACircleRule);
        }
        Ok(self.integrate_complex(|x| f(x) * g(x).conj()))
    }

    /// `‖f‖_{p,k}` estimated with this circle rule (`p` finite).
    pub fn lp_norm<F: Fn(f64) -> Complex64>(&self, f: F, p: f64) -> Result<f64> {
        if !self.is_circle() {
            return Err(Error::NotACircleRule);
        }
        Ok(self.integrate(|x| f(x).norm().powf(p)).powf(p.recip()))
    }
}

/// `∫_{-π}^{π} dm_k = 2√π Γ(k + 1/2) / Γ(k + 1)`.
pub fn circle_mass(k: Multiplicity) -> f64 {
    2.0 * symmetric_jacobi_mass(k.get() - 0.5)
}

/// Complex samples of a function on the nodes of a circle rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    nodes: Arc<[f64]>,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn sample<F: Fn(f64) -> Complex64>(rule: &QuadratureRule, f: F) -> Result<Self> {
        if !rule.is_circle() {
            return Err(Error::NotACircleRule);
        }
        Ok(GridFunction {
            nodes: rule.nodes().into(),
            values: rule.nodes().iter().map(|&x| f(x)).collect(),
        })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Values at `-x`; the grid is symmetric so this is a reversal.
    pub fn reflected(&self) -> GridFunction {
        let mut values = self.values.clone();
        values.reverse();
        GridFunction {
            nodes: self.nodes.clone(),
            values,
        }
    }

    /// `(f, g)_k` against the rule the samples were taken on.
    pub fn inner_product(&self, other: &GridFunction, rule: &QuadratureRule) -> Result<Complex64> {
        if !rule.is_circle() {
            return Err(Error::NotACircleRule);
        }
        if self.nodes.len() != rule.len()
            || other.nodes.len() != rule.len()
            || *self.nodes != *rule.nodes()
            || *other.nodes != *rule.nodes()
        {
            return Err(Error::MismatchedGrid);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .zip(rule.weights())
            .map(|((a, b), &w)| a * b.conj() * w)
            .sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn k(v: f64) -> Multiplicity {
        Multiplicity::new(v).unwrap()
    }

    #[test]
    fn circle_rule_masses() {
        let r0 = QuadratureRule::circle(k(0.0), 64).unwrap();
        assert_relative_eq!(r0.total_mass(), 2.0 * PI, max_relative = 1e-13);
        let r1 = QuadratureRule::circle(k(1.0), 64).unwrap();
        assert_relative_eq!(r1.total_mass(), PI, max_relative = 1e-13);
        for &kv in &[0.3, 0.5, 2.5] {
            let r = QuadratureRule::circle(k(kv), DEFAULT_ORDER).unwrap();
            let expect = 2.0 * PI.sqrt() * libm::tgamma(kv + 0.5) / libm::tgamma(kv + 1.0);
            assert_relative_eq!(r.total_mass(), expect, max_relative = 1e-12);
            assert_relative_eq!(circle_mass(k(kv)), expect, max_relative = 1e-13);
        }
    }

    #[test]
    fn circle_rule_structure() {
        let r = QuadratureRule::circle(k(0.7), 40).unwrap();
        assert_eq!(r.len(), 80);
        assert!(r.weights().iter().all(|&w| w > 0.0));
        assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
        assert!(r.nodes()[0] > -PI && r.nodes()[79] < PI);
        for i in 0..40 {
            assert_eq!(r.nodes()[i], -r.nodes()[79 - i]);
        }
        assert!(matches!(QuadratureRule::circle(k(1.0), 1), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn classical_circle_rule_is_trapezoid_like() {
        // k = 0: Gauss-Chebyshev nodes map to equispaced angles
        let r = QuadratureRule::circle(k(0.0), 8).unwrap();
        let gaps: Vec<f64> = r.nodes().windows(2).map(|w| w[1] - w[0]).collect();
        for g in &gaps {
            assert_relative_eq!(*g, gaps[0], epsilon = 1e-13);
        }
    }

    #[test]
    fn circle_rule_exact_for_trig_polynomials() {
        // ∫ cos(2jx) sin^2 x dx over a period: π for j=0, -π/2 for j=1, else 0
        let r = QuadratureRule::circle(k(1.0), 10).unwrap();
        assert_relative_eq!(r.integrate(|x| (2.0 * x).cos()), -PI / 2.0, epsilon = 1e-13);
        assert!(r.integrate(|x| (8.0 * x).cos()).abs() < 1e-13);
        assert!(r.integrate(|x| (3.0 * x).sin() * (x).cos()).abs() < 1e-13);
    }

    #[test]
    fn general_jacobi_moments() {
        // ∫ (1-u)^a (1+u)^b du = 2^{a+b+1} B(a+1, b+1)
        for &(a, b) in &[(0.0, -0.5), (1.5, 0.0), (0.0, 2.0), (-0.7, 0.3)] {
            let r = QuadratureRule::jacobi(a, b, 20).unwrap();
            let beta = libm::tgamma(a + 1.0) * libm::tgamma(b + 1.0) / libm::tgamma(a + b + 2.0);
            assert_relative_eq!(r.total_mass(), 2f64.powf(a + b + 1.0) * beta, max_relative = 1e-13);
            // ∫ (1+u) (1-u)^a (1+u)^b = 2^{a+b+2} B(a+1, b+2)
            let beta1 = libm::tgamma(a + 1.0) * libm::tgamma(b + 2.0) / libm::tgamma(a + b + 3.0);
            assert_relative_eq!(r.integrate(|u| 1.0 + u), 2f64.powf(a + b + 2.0) * beta1, max_relative = 1e-13);
        }
        let sym = QuadratureRule::interior(k(0.0), 0.5, 12).unwrap();
        let gen = QuadratureRule::jacobi(0.5, 0.5, 12).unwrap();
        for (x, y) in sym.nodes().iter().zip(gen.nodes()) {
            assert!((x - y).abs() < 1e-14);
        }
    }

    #[test]
    fn interior_rule_beta_values() {
        for &kv in &[0.3, 1.0, 2.5] {
            let r = QuadratureRule::interior_km1(k(kv), 30).unwrap();
            let beta = PI.sqrt() * libm::tgamma(kv) / libm::tgamma(kv + 0.5);
            assert_relative_eq!(r.total_mass(), beta, max_relative = 1e-13);
            assert!(r.integrate(|u| u).abs() < 1e-14);
            assert_relative_eq!(r.integrate(|u| 1.0 + u), beta, max_relative = 1e-13);
            // degree 2m-1 = 59 exactness: ∫ u^58 against the weight
            let moment = libm::tgamma(29.5) * libm::tgamma(kv) / libm::tgamma(kv + 29.5);
            assert_relative_eq!(r.integrate(|u| u.powi(58)), moment, max_relative = 1e-11);
        }
        assert!(matches!(QuadratureRule::interior(k(1.0), -1.0, 8), Err(Error::InvalidExponent(_))));
        assert!(QuadratureRule::interior_km1(k(0.0), 8).is_err());
    }

    #[test]
    fn legendre_and_laguerre() {
        let r = QuadratureRule::legendre(0.0, 2.0, 12).unwrap();
        assert_relative_eq!(r.integrate(|x| x.powi(7)), 32.0, max_relative = 1e-13);
        let l = QuadratureRule::laguerre(-0.5, 40).unwrap();
        // ∫ t^{-1/2} e^{-t} t^3 dt = Γ(3.5)
        assert_relative_eq!(l.integrate(|t| t.powi(3)), libm::tgamma(3.5), max_relative = 1e-12);
    }

    #[test]
    fn grid_inner_product_checks_grids() {
        let r = QuadratureRule::circle(k(1.0), 16).unwrap();
        let other = QuadratureRule::circle(k(1.0), 17).unwrap();
        let f = GridFunction::sample(&r, |x| Complex64::from_polar(1.0, 2.0 * x)).unwrap();
        let g = GridFunction::sample(&other, |_| Complex64::new(1.0, 0.0)).unwrap();
        assert_eq!(f.inner_product(&g, &r), Err(Error::MismatchedGrid));
        let ff = f.inner_product(&f, &r).unwrap();
        assert_relative_eq!(ff.re, PI, max_relative = 1e-13);
        assert!(ff.im.abs() < 1e-14);
        let refl = f.reflected();
        for (i, &x) in r.nodes().iter().enumerate() {
            assert!((refl.values()[i] - Complex64::from_polar(1.0, -2.0 * x)).norm() < 1e-14);
        }
    }
}
