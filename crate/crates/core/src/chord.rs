//! The substitution `t(u) = cos x cos y + u sin x sin y`, `u ∈ [-1, 1]`,
//! with `1 - t` and `1 + t` computed without cancellation, and a quadrature
//! for kernels of the form `(1+u)^k (1-u)^{k-1} (c + s(1 - t))^{-p}`.
//!
//! Near the diagonal `1 - t` is `a + |B| w` with `w` the distance from the
//! endpoint where `1 - t` is smallest and `a` tiny, so the integrand has a
//! layer of width `a / |B|` there. [`LayerQuadrature`] integrates in `w`
//! over panels graded geometrically from that width.

use crate::error::Result;
use crate::quadrature::QuadratureRule;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Chord {
    a: f64,
    b: f64,
    // 2 sin²((x∓y)/2) and 2 cos²((x∓y)/2)
    one_minus_at_plus: f64,
    one_minus_at_minus: f64,
    one_plus_at_plus: f64,
    one_plus_at_minus: f64,
}

impl Chord {
    pub(crate) fn new(x: f64, y: f64) -> Self {
        let sd = (0.5 * (x - y)).sin();
        let ss = (0.5 * (x + y)).sin();
        let cd = (0.5 * (x - y)).cos();
        let cs = (0.5 * (x + y)).cos();
        Chord {
            a: x.cos() * y.cos(),
            b: x.sin() * y.sin(),
            // t(1) = cos(x - y), t(-1) = cos(x + y)
            one_minus_at_plus: 2.0 * sd * sd,
            one_minus_at_minus: 2.0 * ss * ss,
            one_plus_at_plus: 2.0 * cd * cd,
            one_plus_at_minus: 2.0 * cs * cs,
        }
    }

    pub(crate) fn t(&self, u: f64) -> f64 {
        self.a + u * self.b
    }

    /// `1 - t(u)`, anchored at whichever endpoint keeps every term non-negative.
    pub(crate) fn one_minus_t(&self, u: f64) -> f64 {
        if self.b >= 0.0 {
            self.one_minus_at_plus + self.b * (1.0 - u)
        } else {
            self.one_minus_at_minus - self.b * (1.0 + u)
        }
    }

    pub(crate) fn one_plus_t(&self, u: f64) -> f64 {
        if self.b >= 0.0 {
            self.one_plus_at_minus + self.b * (1.0 + u)
        } else {
            self.one_plus_at_plus - self.b * (1.0 - u)
        }
    }

    /// `(1 - t, |B|, peak at u = 1)` at the endpoint minimizing `1 - t`.
    pub(crate) fn layer(&self) -> (f64, f64, bool) {
        if self.b >= 0.0 {
            (self.one_minus_at_plus, self.b, true)
        } else {
            (self.one_minus_at_minus, -self.b, false)
        }
    }

    /// `arccos t(u) ∈ [0, π]`.
    pub(crate) fn angle(&self, u: f64) -> f64 {
        let s = (self.one_minus_t(u) * self.one_plus_t(u)).sqrt();
        s.atan2(self.t(u))
    }
}

/// Nodes per panel of [`LayerQuadrature`].
pub(crate) const LAYER_NODES: usize = 24;

/// Smallest layer width resolved; only reached on the diagonal itself.
const MIN_LAYER: f64 = 1e-200;

/// Composite rule for `∫_{-1}^{1} (1+u)^k (1-u)^{k-1} (c + s(1 - t(u)))^{-p} du`, `k > 0`.
#[derive(Debug, Clone)]
pub(crate) struct LayerQuadrature {
    k: f64,
    // weights w^{k-1}, w^k at w = 0 and (2-w)^k, (2-w)^{k-1} at w = 2
    near_km1: QuadratureRule,
    near_k: QuadratureRule,
    far_k: QuadratureRule,
    far_km1: QuadratureRule,
    plain: QuadratureRule,
}

impl LayerQuadrature {
    pub(crate) fn new(k: f64) -> Result<Self> {
        let m = LAYER_NODES;
        Ok(LayerQuadrature {
            k,
            near_km1: QuadratureRule::jacobi(0.0, k - 1.0, m)?,
            near_k: QuadratureRule::jacobi(0.0, k, m)?,
            far_k: QuadratureRule::jacobi(k, 0.0, m)?,
            far_km1: QuadratureRule::jacobi(k - 1.0, 0.0, m)?,
            plain: QuadratureRule::legendre(-1.0, 1.0, m)?,
        })
    }

    pub(crate) fn integrate(&self, chord: &Chord, offset: f64, scale: f64, power: f64) -> f64 {
        let k = self.k;
        let (a, b, plus) = chord.layer();
        let (c0, c1) = (offset + scale * a, scale * b);
        // with w = distance from the peak: w^p (2 - w)^q (c0 + c1 w)^{-power}
        let (p, q, near, far) = if plus {
            (k - 1.0, k, &self.near_km1, &self.far_k)
        } else {
            (k, k - 1.0, &self.near_k, &self.far_km1)
        };
        let d = |w: f64| (c0 + c1 * w).powf(-power);
        // [1, 2] with (2 - w)^q in the weight
        let mut total = 0.5f64.powf(q + 1.0) * far.integrate(|u| (1.5 + 0.5 * u).powf(p) * d(1.5 + 0.5 * u));
        let eps = if c1 > 0.0 { (c0 / c1).max(MIN_LAYER) } else { f64::INFINITY };
        // first panel [0, L] with w^p in the weight
        let first = eps.min(1.0);
        let h = 0.5 * first;
        total += h.powf(p + 1.0)
            * near.integrate(|u| {
                let w = h * (1.0 + u);
                (2.0 - w).powf(q) * d(w)
            });
        let mut lo = first;
        while lo < 1.0 {
            let hi = (2.0 * lo).min(1.0);
            let (c, h) = (0.5 * (lo + hi), 0.5 * (hi - lo));
            total += h * self.plain.integrate(|u| {
                let w = c + h * u;
                w.powf(p) * (2.0 - w).powf(q) * d(w)
            });
            lo = hi;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2 as PI_2;

    #[test]
    fn stable_forms_agree_with_direct() {
        for &(x, y) in &[(0.3, 1.2), (-2.0, 0.7), (1.0, 1.0 + 1e-9), (3.0, -3.1)] {
            let c = Chord::new(x, y);
            for &u in &[-1.0, -0.4, 0.0, 0.9, 1.0] {
                let t = c.t(u);
                assert!((c.one_minus_t(u) - (1.0 - t)).abs() < 1e-14);
                assert!((c.one_plus_t(u) - (1.0 + t)).abs() < 1e-14);
                assert!((c.angle(u).cos() - t).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn layer_quadrature_matches_single_jacobi_rule_away_from_layers() {
        // x = y = π/2: 1 - t = 1 - u, so the integrand is
        // (1+u)^k (1-u)^{k-1} (c + s(1-u))^{-p}, smooth apart from the weight when c = 1
        let chord = Chord::new(PI_2, PI_2);
        for &k in &[0.3, 0.5, 1.0, 2.5] {
            let lq = LayerQuadrature::new(k).unwrap();
            for &(s, p) in &[(0.5, k + 1.0), (2.0, 0.7), (1.0, 3.0)] {
                let got = lq.integrate(&chord, 1.0, s, p);
                let reference = QuadratureRule::jacobi(k - 1.0, k, 400)
                    .unwrap()
                    .integrate(|u| (1.0 + s * (1.0 - u)).powf(-p));
                assert!((got - reference).abs() < 1e-13 * reference, "k={k}: {got} vs {reference}");
            }
        }
    }

    #[test]
    fn layer_quadrature_resolves_thin_layers() {
        // k = 1: ∫_0^2 (2 - w) (c + w)^{-2} dw = 2/c - ln(1 + 2/c)
        let chord = Chord::new(PI_2, PI_2);
        let lq = LayerQuadrature::new(1.0).unwrap();
        for &c in &[1e-1, 1e-4, 1e-8, 1e-14, 1e-20] {
            let got = lq.integrate(&chord, c, 1.0, 2.0);
            let want = 2.0 / c - (2.0 / c).ln_1p();
            assert!((got - want).abs() < 1e-13 * want, "c={c}: {got} vs {want}");
        }
        // peak at u = -1: x = π/2, y = -π/2 gives 1 - t = 1 + u
        let mirrored = Chord::new(PI_2, -PI_2);
        let got = lq.integrate(&mirrored, 1e-8, 1.0, 2.0);
        // ∫_0^2 w (c + w)^{-2} dw = ln(1 + 2/c) - 2/(2 + c)
        let want = (2e8f64).ln_1p() - 2.0 / (2.0 + 1e-8);
        assert!((got - want).abs() < 1e-13 * want, "{got} vs {want}");
    }
}
