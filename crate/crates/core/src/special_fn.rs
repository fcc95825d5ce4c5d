//! Gegenbauer, Heckman-Opdam-Jacobi and non-symmetric Heckman-Opdam
//! polynomials of type A1.
//!
//! Notation used throughout the crate:
//!
//! * `E_n^k(ix)` is the non-symmetric polynomial on the circle, `n` any integer.
//! * `P_n^k(ix) = (E_n^k(ix) + E_n^k(-ix)) / 2` is its symmetrization, `n >= 0`.
//! * `Q_n^k(t) = Gamma(k) n! / (2 Gamma(n + k)) C_n^k(t)` is the rescaled
//!   ultraspherical polynomial. It coincides with `P_n^k` for `n >= 1` but
//!   `Q_0^k = 1/2`, and it is this normalization that appears in the odd part of
//!   the explicit formulas:
//!
//! ```text
//! E_n^k(ix)    = Q_n^k(cos x) + 2 i sin x Q_{n-1}^{k+1}(cos x)                     n >= 1
//! E_{-n}^k(ix) = (n+2k)/(n+k) Q_n^k(cos x) - 2n/(n+k) i sin x Q_{n-1}^{k+1}(cos x)  n >= 1
//! ```
//!
//! `Q` obeys `Q_n = 2t Q_{n-1} - (n-1)(n+2k-2) / ((n+k-1)(n+k-2)) Q_{n-2}` with
//! `Q_0 = 1/2`, `Q_1 = t`, which stays finite at `k = 0` (where `Q_n^0 = T_n`)
//! and avoids the Gamma-function constants altogether. The Gamma-normalized
//! route is kept as an independent evaluation path.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Practical degree bound; beyond it the Gegenbauer values leave the range
/// where the forward recurrence has been checked.
pub const MAX_PRACTICAL_DEGREE: usize = 500;

/// Distance from a singular point below which difference quotients switch to
/// their limit branch.
pub const REMOVABLE_EPS: f64 = 1e-6;

/// The multiplicity parameter `k >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Multiplicity(f64);

impl Multiplicity {
    pub const CLASSICAL: Multiplicity = Multiplicity(0.0);

    pub fn new(k: f64) -> Result<Self> {
        if k.is_finite() && k >= 0.0 {
            Ok(Multiplicity(k))
        } else {
            Err(Error::InvalidMultiplicity(k))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `k = 0`: every object reduces to its classical Fourier counterpart.
    #[inline]
    pub fn is_classical(self) -> bool {
        self.0 == 0.0
    }

    /// `k + 1`, used by the odd parts of the polynomials.
    pub fn shifted(self, by: f64) -> Multiplicity {
        Multiplicity(self.0 + by)
    }
}

impl TryFrom<f64> for Multiplicity {
    type Error = Error;
    fn try_from(k: f64) -> Result<Self> {
        Multiplicity::new(k)
    }
}

impl From<Multiplicity> for f64 {
    fn from(k: Multiplicity) -> f64 {
        k.0
    }
}

impl std::fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[inline]
pub(crate) fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Extended eigenvalue `n_k`: `n + k` for `n > 0`, `n - k` for `n <= 0`.
pub fn extended_eigenvalue(n: i64, k: Multiplicity) -> f64 {
    if n > 0 {
        n as f64 + k.get()
    } else {
        n as f64 - k.get()
    }
}

/// The partial order used to describe the support of `E_n^k`: `j ◁ n`.
pub fn triangleleft(j: i64, n: i64) -> bool {
    let (aj, an) = (j.abs(), n.abs());
    (aj < an && (an - aj) % 2 == 0) || (aj == an && n < j)
}

/// `C_n^k(t)` by the forward three-term recurrence.
pub fn gegenbauer_eval(n: usize, k: f64, t: f64) -> Result<f64> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::RequiresPositiveMultiplicity {
            what: "Gegenbauer polynomial",
            k,
        });
    }
    let (mut prev, mut cur) = (1.0, 2.0 * k * t);
    if n == 0 {
        return Ok(prev);
    }
    for j in 2..=n {
        let jf = j as f64;
        let next = (2.0 * t * (jf + k - 1.0) * cur - (jf + 2.0 * k - 2.0) * prev) / jf;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `C_n^k(1) = Gamma(n + 2k) / (n! Gamma(2k))`.
pub fn gegenbauer_at_one(n: usize, k: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::RequiresPositiveMultiplicity {
            what: "Gegenbauer polynomial",
            k,
        });
    }
    let nf = n as f64;
    Ok((ln_gamma(nf + 2.0 * k) - ln_gamma(nf + 1.0) - ln_gamma(2.0 * k)).exp())
}

/// `∫_{-1}^{1} C_n^k(t)^2 (1 - t^2)^{k - 1/2} dt = π 2^{1-2k} Γ(n+2k) / (n! (n+k) Γ(k)^2)`.
pub fn gegenbauer_norm_sq(n: usize, k: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::RequiresPositiveMultiplicity {
            what: "Gegenbauer norm",
            k,
        });
    }
    let nf = n as f64;
    let log = (1.0 - 2.0 * k) * std::f64::consts::LN_2 + ln_gamma(nf + 2.0 * k)
        - ln_gamma(nf + 1.0)
        - (nf + k).ln()
        - 2.0 * ln_gamma(k);
    Ok(std::f64::consts::PI * log.exp())
}

/// `Γ(κ) n! / (2 Γ(n + κ))`, the factor turning `C_n^κ` into `Q_n^κ`.
fn ultraspherical_scale(n: usize, kappa: f64) -> f64 {
    let nf = n as f64;
    0.5 * (ln_gamma(kappa) + ln_gamma(nf + 1.0) - ln_gamma(nf + kappa)).exp()
}

/// `Q_n^κ(t)` through the Gamma-normalized Gegenbauer polynomial (`κ > 0`).
fn q_via_gegenbauer(n: usize, kappa: f64, t: f64) -> f64 {
    ultraspherical_scale(n, kappa) * gegenbauer_eval(n, kappa, t).expect("kappa > 0")
}

/// `Q_j^κ(t)` for `j = 0..=n_max` by the normalized recurrence.
pub fn q_sequence(kappa: f64, n_max: usize, t: f64) -> Vec<f64> {
    let mut q = Vec::with_capacity(n_max + 1);
    q.push(0.5);
    if n_max >= 1 {
        q.push(t);
    }
    for j in 2..=n_max {
        let jf = j as f64;
        let c = if j == 2 {
            2.0 / (1.0 + kappa)
        } else {
            (jf - 1.0) * (jf + 2.0 * kappa - 2.0) / ((jf + kappa - 1.0) * (jf + kappa - 2.0))
        };
        q.push(2.0 * t * q[j - 1] - c * q[j - 2]);
    }
    q
}

fn q_at(j: i64, kappa: f64, t: f64) -> f64 {
    if j < 0 {
        0.0
    } else {
        q_sequence(kappa, j as usize, t)[j as usize]
    }
}

/// `P_n^k(0) = E_n^k(0) = Γ(k+1) Γ(n+2k) / (Γ(2k+1) Γ(n+k))` for `n >= 1`, and 1 for `n = 0`.
pub fn p_at_zero(n: usize, k: Multiplicity) -> f64 {
    if n == 0 || k.is_classical() {
        return 1.0;
    }
    let (nf, k) = (n as f64, k.get());
    (ln_gamma(k + 1.0) + ln_gamma(nf + 2.0 * k) - ln_gamma(2.0 * k + 1.0) - ln_gamma(nf + k)).exp()
}

/// `E_n^k(0)`; strictly positive for every `n`.
pub fn e_at_zero(n: i64, k: Multiplicity) -> f64 {
    match n {
        0 => 1.0,
        n if n > 0 => p_at_zero(n as usize, k),
        n => {
            let m = (-n) as f64;
            (m + 2.0 * k.get()) / (m + k.get()) * p_at_zero((-n) as usize, k)
        }
    }
}

/// `P_n^k(ix)`; `cos(nx)` at `k = 0`.
pub fn p_eval(n: i64, k: Multiplicity, x: f64) -> Result<f64> {
    if n < 0 {
        return Err(Error::NegativeDegree(n));
    }
    if n == 0 {
        return Ok(1.0);
    }
    if k.is_classical() {
        return Ok((n as f64 * x).cos());
    }
    Ok(q_via_gegenbauer(n as usize, k.get(), x.cos()))
}

/// Even and odd weights `(α, β)` with `E_n = α Q_n^k + β ι sin Q_{n-1}^{k+1}`, `n != 0`.
fn explicit_weights(n: i64, k: f64) -> (f64, f64) {
    if n > 0 {
        (1.0, 2.0)
    } else {
        let m = (-n) as f64;
        ((m + 2.0 * k) / (m + k), -2.0 * m / (m + k))
    }
}

/// `E_n^k(ix)`.
///
/// Classical branch `e^{inx}` at `k = 0`; otherwise the explicit formulas with
/// Gamma-normalized Gegenbauer polynomials. Degrees up to
/// [`MAX_PRACTICAL_DEGREE`] are supported.
pub fn e_eval(n: i64, k: Multiplicity, x: f64) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if k.is_classical() {
        return Complex64::from_polar(1.0, n as f64 * x);
    }
    let m = n.unsigned_abs() as usize;
    let t = x.cos();
    let even = q_via_gegenbauer(m, k.get(), t);
    let odd = x.sin() * q_via_gegenbauer(m - 1, k.get() + 1.0, t);
    let (alpha, beta) = explicit_weights(n, k.get());
    Complex64::new(alpha * even, beta * odd)
}

/// Squared norm `‖E_n^k‖²_{2,k}`:
/// `‖E_{n+1}‖² = ‖E_{-n}‖² = π 2^{1-2k} n! Γ(n+2k+1) / Γ(n+k+1)²`, `n >= 0`.
pub fn e_norm_sq(n: i64, k: Multiplicity) -> f64 {
    let m = if n > 0 { (n - 1) as f64 } else { (-n) as f64 };
    let k = k.get();
    let log = (1.0 - 2.0 * k) * std::f64::consts::LN_2 + ln_gamma(m + 1.0)
        + ln_gamma(m + 2.0 * k + 1.0)
        - 2.0 * ln_gamma(m + k + 1.0);
    std::f64::consts::PI * log.exp()
}

/// `γ_n^k = ‖E_n^k‖^{-2}`.
pub fn gamma_coeff(n: i64, k: Multiplicity) -> f64 {
    e_norm_sq(n, k).recip()
}

/// Value and first two derivatives of a function of one real variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

impl Jet {
    pub fn constant(c: Complex64) -> Self {
        Jet {
            value: c,
            d1: Complex64::new(0.0, 0.0),
            d2: Complex64::new(0.0, 0.0),
        }
    }

    pub fn scale(self, c: Complex64) -> Self {
        Jet {
            value: self.value * c,
            d1: self.d1 * c,
            d2: self.d2 * c,
        }
    }
}

impl std::ops::Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet {
            value: self.value + o.value,
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
        }
    }
}

/// Where a polynomial is evaluated: on the circle (`E_n^k(ix)`) or on the
/// real axis (`E_n^k(x)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Circle,
    Real,
}

impl Domain {
    /// `(t, s, σ, ι)` with `t' = σ s`, `s' = t` and ι the factor on the odd part.
    fn frame(self, x: f64) -> (f64, f64, f64, Complex64) {
        match self {
            Domain::Circle => (x.cos(), x.sin(), -1.0, Complex64::i()),
            Domain::Real => (x.cosh(), x.sinh(), 1.0, Complex64::new(1.0, 0.0)),
        }
    }
}

/// Real jet `(v, v', v'')` of `x ↦ Q_j^κ(t(x))`.
fn q_jet(j: i64, kappa: f64, t: f64, s: f64, sigma: f64) -> [f64; 3] {
    let jf = j as f64;
    let q0 = q_at(j, kappa, t);
    let q1 = q_at(j - 1, kappa + 1.0, t);
    let q2 = q_at(j - 2, kappa + 2.0, t);
    [
        q0,
        sigma * s * 2.0 * jf * q1,
        sigma * t * 2.0 * jf * q1 + s * s * 4.0 * jf * (jf - 1.0) * q2,
    ]
}

/// Real jet of `x ↦ s(x) Q_j^κ(t(x))`.
fn sq_jet(j: i64, kappa: f64, t: f64, s: f64, sigma: f64) -> [f64; 3] {
    let jf = j as f64;
    let q0 = q_at(j, kappa, t);
    let q1 = q_at(j - 1, kappa + 1.0, t);
    let q2 = q_at(j - 2, kappa + 2.0, t);
    [
        s * q0,
        t * q0 + sigma * s * s * 2.0 * jf * q1,
        sigma * s * q0 + 3.0 * sigma * s * t * 2.0 * jf * q1 + 4.0 * s.powi(3) * jf * (jf - 1.0) * q2,
    ]
}

fn real_jet(v: [f64; 3]) -> Jet {
    Jet {
        value: v[0].into(),
        d1: v[1].into(),
        d2: v[2].into(),
    }
}

/// Jet of `x ↦ E_n^k(ix)` (circle) or `x ↦ E_n^k(x)` (real axis), analytic.
pub fn e_jet(n: i64, k: Multiplicity, x: f64, domain: Domain) -> Jet {
    if n == 0 {
        return Jet::constant(Complex64::new(1.0, 0.0));
    }
    let (t, s, sigma, iota) = domain.frame(x);
    let m = n.abs();
    let (alpha, beta) = explicit_weights(n, k.get());
    let even = real_jet(q_jet(m, k.get(), t, s, sigma));
    let odd = real_jet(sq_jet(m - 1, k.get() + 1.0, t, s, sigma));
    even.scale(alpha.into()) + odd.scale(iota * beta)
}

/// Jet of the symmetric polynomial `P_n^k`, `n >= 0`.
pub fn p_jet(n: usize, k: Multiplicity, x: f64, domain: Domain) -> Jet {
    if n == 0 {
        return Jet::constant(Complex64::new(1.0, 0.0));
    }
    let (t, s, sigma, _) = domain.frame(x);
    real_jet(q_jet(n as i64, k.get(), t, s, sigma))
}

/// `d/dx E_n^k(ix)`, analytic; `i n e^{inx}` at `k = 0`.
pub fn e_deriv(n: i64, k: Multiplicity, x: f64) -> Complex64 {
    if k.is_classical() {
        return Complex64::new(0.0, n as f64) * Complex64::from_polar(1.0, n as f64 * x);
    }
    e_jet(n, k, x, Domain::Circle).d1
}

/// `E_n^k(x)` for real `x` (the polynomial in `e^x`).
pub fn e_eval_real(n: i64, k: Multiplicity, x: f64) -> f64 {
    if k.is_classical() {
        return (n as f64 * x).exp();
    }
    e_jet(n, k, x, Domain::Real).value.re
}

/// `E_n^k(ix)` for every `|n| <= n_max`, indexed by `n + n_max`.
///
/// One pass of the normalized recurrence per multiplicity, so the cost is
/// linear in `n_max`. Takes `(cos x, sin x)` directly so that callers holding
/// an exact cosine (e.g. `cos x cos y + u sin x sin y`) need not go through
/// `arccos`.
pub fn basis_row_cs(k: Multiplicity, n_max: usize, cos_x: f64, sin_x: f64) -> Vec<Complex64> {
    let mut row = vec![Complex64::new(0.0, 0.0); 2 * n_max + 1];
    row[n_max] = Complex64::new(1.0, 0.0);
    if n_max == 0 {
        return row;
    }
    let kv = k.get();
    let even = q_sequence(kv, n_max, cos_x);
    let odd = q_sequence(kv + 1.0, n_max - 1, cos_x);
    for m in 1..=n_max {
        let mf = m as f64;
        let e = even[m];
        let o = sin_x * odd[m - 1];
        row[n_max + m] = Complex64::new(e, 2.0 * o);
        row[n_max - m] = Complex64::new((mf + 2.0 * kv) / (mf + kv) * e, -2.0 * mf / (mf + kv) * o);
    }
    row
}

/// [`basis_row_cs`] at angle `x`.
pub fn basis_row(k: Multiplicity, n_max: usize, x: f64) -> Vec<Complex64> {
    basis_row_cs(k, n_max, x.cos(), x.sin())
}

/// Samples `(f(x), f(-x), f'(x))` supplied to the real-axis Cherednik operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionBundle {
    pub value: Complex64,
    pub reflected: Complex64,
    pub deriv: Complex64,
}

/// Real-axis Cherednik operator
/// `T^k f(x) = f'(x) + 2k (f(x) - f(-x)) / (1 - e^{-2x}) - k f(x)`.
///
/// Fails with [`Error::RemovableSingularity`] for `|x| < REMOVABLE_EPS`; use
/// [`apply_t_real_fn`] there.
pub fn apply_t_real(f: ReflectionBundle, x: f64, k: Multiplicity) -> Result<Complex64> {
    if x.abs() < REMOVABLE_EPS {
        return Err(Error::RemovableSingularity(x));
    }
    let k = k.get();
    let denom = -(-2.0 * x).exp_m1();
    Ok(f.deriv + (f.value - f.reflected) * (2.0 * k / denom) - f.value * k)
}

/// [`apply_t_real`] for a function given with its derivative, with the limit
/// branch `(f(x) - f(-x)) / (1 - e^{-2x}) -> (f'(x) + f'(-x)) (1 + x) / 2` near 0.
pub fn apply_t_real_fn<F: Fn(f64) -> Jet>(f: F, x: f64, k: Multiplicity) -> Complex64 {
    let at = f(x);
    let refl = f(-x);
    if x.abs() >= REMOVABLE_EPS {
        let bundle = ReflectionBundle {
            value: at.value,
            reflected: refl.value,
            deriv: at.d1,
        };
        return apply_t_real(bundle, x, k).expect("x away from 0");
    }
    let kv = k.get();
    let quotient = (at.d1 + refl.d1) * (0.5 * (1.0 + x));
    at.d1 + quotient * (2.0 * kv) - at.value * kv
}

/// Real-axis operator `L_k f = f'' + 2k coth(x) f' + k² f` (even part of `(T^k)²`).
///
/// Near `x = 0` the term `coth(x) f'(x)` is replaced by its limit `f''(0)`
/// (valid for even `f`).
pub fn apply_l_real<F: Fn(f64) -> Jet>(f: F, x: f64, k: Multiplicity) -> Complex64 {
    let j = f(x);
    let kv = k.get();
    let drift = if x.abs() < REMOVABLE_EPS {
        j.d2
    } else {
        j.d1 / x.tanh()
    };
    j.d2 + drift * (2.0 * kv) + j.value * (kv * kv)
}
