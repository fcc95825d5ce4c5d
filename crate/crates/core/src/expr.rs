//! A small language for test functions: linear combinations of
//! `exp(inx)`, `cos(nx)`, `sin(nx)`, `E(n)` (the basis polynomial `E_n^k(ix)`),
//! `bump(a,b)` and constants, with real, imaginary or complex coefficients.
//!
//! ```text
//! cos(3x)
//! 2*sin(x) - 0.5i*exp(-2ix) + E(-3)
//! (1+2i)*bump(1.0,2.0) + 0.25
//! ```

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::singular::Support;
use crate::special_fn::{e_jet, Domain, Jet, Multiplicity};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Atom {
    One,
    Exp(i64),
    Cos(i64),
    Sin(i64),
    Basis(i64),
    /// `exp(-1/(1 - s²))` with `s = (2x - a - b)/(b - a)` on `(a, b)`, zero elsewhere.
    Bump(f64, f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    terms: Vec<(Complex64, Atom)>,
}

fn wrap(x: f64) -> f64 {
    let y = x - 2.0 * PI * (x / (2.0 * PI)).round();
    if y <= -PI {
        y + 2.0 * PI
    } else {
        y
    }
}

fn bump_jet(a: f64, b: f64, x: f64) -> Jet {
    let x = wrap(x);
    if x <= a || x >= b {
        return Jet::constant(Complex64::new(0.0, 0.0));
    }
    let ds = 2.0 / (b - a);
    let s = (2.0 * x - a - b) / (b - a);
    let q = 1.0 - s * s;
    let v = (-1.0 / q).exp();
    let g1 = -2.0 * s / (q * q) * ds;
    let g2 = (-2.0 / (q * q) - 8.0 * s * s / (q * q * q)) * ds * ds;
    Jet {
        value: v.into(),
        d1: (g1 * v).into(),
        d2: ((g2 + g1 * g1) * v).into(),
    }
}

impl Atom {
    pub fn jet(&self, x: f64, k: Multiplicity) -> Jet {
        let i = Complex64::i();
        match *self {
            Atom::One => Jet::constant(Complex64::new(1.0, 0.0)),
            Atom::Exp(n) => {
                let nf = n as f64;
                let e = Complex64::from_polar(1.0, nf * x);
                Jet {
                    value: e,
                    d1: e * i * nf,
                    d2: e * (-nf * nf),
                }
            }
            Atom::Cos(n) => {
                let nf = n as f64;
                Jet {
                    value: (nf * x).cos().into(),
                    d1: (-nf * (nf * x).sin()).into(),
                    d2: (-nf * nf * (nf * x).cos()).into(),
                }
            }
            Atom::Sin(n) => {
                let nf = n as f64;
                Jet {
                    value: (nf * x).sin().into(),
                    d1: (nf * (nf * x).cos()).into(),
                    d2: (-nf * nf * (nf * x).sin()).into(),
                }
            }
            Atom::Basis(n) => e_jet(n, k, x, Domain::Circle),
            Atom::Bump(a, b) => bump_jet(a, b, x),
        }
    }

    /// Trigonometric degree, or `None` for a bump.
    pub fn degree(&self) -> Option<usize> {
        match *self {
            Atom::One => Some(0),
            Atom::Exp(n) | Atom::Cos(n) | Atom::Sin(n) | Atom::Basis(n) => Some(n.unsigned_abs() as usize),
            Atom::Bump(..) => None,
        }
    }
}

impl Expr {
    pub fn new(terms: Vec<(Complex64, Atom)>) -> Self {
        Expr { terms }
    }

    pub fn atom(atom: Atom) -> Self {
        Expr::new(vec![(Complex64::new(1.0, 0.0), atom)])
    }

    pub fn terms(&self) -> &[(Complex64, Atom)] {
        &self.terms
    }

    pub fn eval(&self, x: f64, k: Multiplicity) -> Complex64 {
        self.jet(x, k).value
    }

    pub fn jet(&self, x: f64, k: Multiplicity) -> Jet {
        self.terms
            .iter()
            .fold(Jet::constant(Complex64::new(0.0, 0.0)), |acc, (c, a)| acc + a.jet(x, k).scale(*c))
    }

    /// Trigonometric degree when the expression is band-limited.
    pub fn degree(&self) -> Option<usize> {
        self.terms
            .iter()
            .map(|(_, a)| a.degree())
            .try_fold(0, |m, d| d.map(|d| m.max(d)))
    }

    /// Smallest interval containing the supports when every term is a bump.
    pub fn support(&self) -> Option<Support> {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (_, a) in &self.terms {
            match *a {
                Atom::Bump(a, b) => {
                    lo = lo.min(a);
                    hi = hi.max(b);
                }
                _ => return None,
            }
        }
        Support::new(lo, hi).ok()
    }

    /// Whether the function is even (`f(-x) = f(x)` term by term).
    pub fn is_even(&self) -> bool {
        self.terms.iter().all(|(_, a)| match *a {
            Atom::One | Atom::Cos(_) => true,
            Atom::Exp(0) | Atom::Sin(0) | Atom::Basis(0) => true,
            Atom::Bump(a, b) => a == -b,
            _ => false,
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::One => write!(f, "1"),
            Atom::Exp(n) => write!(f, "exp({n}ix)"),
            Atom::Cos(n) => write!(f, "cos({n}x)"),
            Atom::Sin(n) => write!(f, "sin({n}x)"),
            Atom::Basis(n) => write!(f, "E({n})"),
            Atom::Bump(a, b) => write!(f, "bump({a},{b})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, a)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i)*{}", c.re, c.im, a)?;
        }
        Ok(())
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            err(format!("expected '{c}' at position {} in {:?}", self.pos, self.src))
        }
    }

    fn rest_starts_with(&self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        self.chars[self.pos..].starts_with(&w)
    }

    fn parse(mut self) -> Result<Expr> {
        if self.chars.is_empty() {
            return err("empty expression");
        }
        let mut terms = Vec::new();
        let mut first = true;
        while self.pos < self.chars.len() {
            let sign = if self.eat('-') {
                -1.0
            } else if self.eat('+') || first {
                1.0
            } else {
                return err(format!("expected '+' or '-' at position {} in {:?}", self.pos, self.src));
            };
            first = false;
            let (c, a) = self.term()?;
            terms.push((c * sign, a));
        }
        Ok(Expr::new(terms))
    }

    /// `[coefficient ['*']] atom` or a bare coefficient.
    fn term(&mut self) -> Result<(Complex64, Atom)> {
        let coeff = self.coefficient()?;
        match coeff {
            Some(c) => {
                let explicit = self.eat('*');
                if self.pos >= self.chars.len() || matches!(self.peek(), Some('+') | Some('-')) {
                    if explicit {
                        return err("dangling '*'");
                    }
                    return Ok((c, Atom::One));
                }
                Ok((c, self.atom()?))
            }
            None => Ok((Complex64::new(1.0, 0.0), self.atom()?)),
        }
    }

    fn number(&mut self) -> Result<Option<f64>> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            let exp_sign = matches!(c, '+' | '-')
                && self.pos > start
                && matches!(self.chars[self.pos - 1], 'e' | 'E');
            if c.is_ascii_digit() || c == '.' || exp_sign {
                self.pos += 1;
            } else if (c == 'e' || c == 'E')
                && self.pos > start
                && self.chars.get(self.pos + 1).is_some_and(|d| d.is_ascii_digit() || *d == '-' || *d == '+')
            {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Ok(None);
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<f64>()
            .map(Some)
            .map_err(|_| Error::Parse(format!("bad number {text:?}")))
    }

    fn signed_number(&mut self) -> Result<f64> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        // [number]['pi']['/' number]
        let mut v = self.number()?;
        if self.rest_starts_with("pi") {
            self.pos += 2;
            v = Some(v.unwrap_or(1.0) * PI);
        }
        let mut v = v.ok_or_else(|| Error::Parse(format!("expected a number at position {} in {:?}", self.pos, self.src)))?;
        if self.eat('/') {
            let d = self.number()?.ok_or_else(|| Error::Parse("expected a divisor".into()))?;
            v /= d;
        }
        Ok(if neg { -v } else { v })
    }

    fn coefficient(&mut self) -> Result<Option<Complex64>> {
        if self.peek() == Some('(') {
            // complex literal (a+bi)
            self.pos += 1;
            let re = self.signed_number()?;
            let im = if matches!(self.peek(), Some('+') | Some('-')) {
                let v = self.signed_number()?;
                self.expect('i')?;
                v
            } else {
                0.0
            };
            self.expect(')')?;
            return Ok(Some(Complex64::new(re, im)));
        }
        let v = self.number()?;
        // a trailing 'i' makes the coefficient imaginary ("2i", "i*...")
        let unit_follows = self.peek() == Some('i')
            && self.chars.get(self.pos + 1).is_none_or(|c| matches!(c, '*' | '+' | '-'));
        match (v, unit_follows) {
            (Some(v), true) => {
                self.pos += 1;
                Ok(Some(Complex64::new(0.0, v)))
            }
            (None, true) => {
                self.pos += 1;
                Ok(Some(Complex64::new(0.0, 1.0)))
            }
            (v, false) => Ok(v.map(|v| Complex64::new(v, 0.0))),
        }
    }

    /// Integer frequency followed by `x` (as in `3x`, `-2x`, `x`).
    fn frequency(&mut self, imaginary: bool) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let n: i64 = if self.pos == start {
            1
        } else {
            let t: String = self.chars[start..self.pos].iter().collect();
            t.parse().map_err(|_| Error::Parse(format!("bad frequency {t:?}")))?
        };
        if imaginary {
            self.expect('i')?;
        }
        self.expect('x')?;
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<Atom> {
        for (name, kind) in [("exp(", 0), ("cos(", 1), ("sin(", 2)] {
            if self.rest_starts_with(name) {
                self.pos += name.len();
                // exp(2ix), exp(-ix); cos(3x), sin(-x)
                let n = self.frequency(kind == 0)?;
                self.expect(')')?;
                return Ok(match kind {
                    0 => Atom::Exp(n),
                    1 => Atom::Cos(n),
                    _ => Atom::Sin(n),
                });
            }
        }
        if self.rest_starts_with("E(") {
            self.pos += 2;
            let n = self.signed_number()?;
            self.expect(')')?;
            if n.fract() != 0.0 {
                return err(format!("E(n) needs an integer degree, got {n}"));
            }
            return Ok(Atom::Basis(n as i64));
        }
        if self.rest_starts_with("bump(") {
            self.pos += 5;
            let a = self.signed_number()?;
            self.expect(',')?;
            let b = self.signed_number()?;
            self.expect(')')?;
            if !(a < b) || a < -PI || b > PI {
                return err(format!("bump({a},{b}) needs -pi <= a < b <= pi"));
            }
            return Ok(Atom::Bump(a, b));
        }
        if self.peek() == Some('1') && !self.chars.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit() || *c == '.') {
            self.pos += 1;
            return Ok(Atom::One);
        }
        err(format!("unrecognized term at position {} in {:?}", self.pos, self.src))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn k(v: f64) -> Multiplicity {
        Multiplicity::new(v).unwrap()
    }

    #[test]
    fn parses_basic_terms() {
        let e: Expr = "cos(3x)".parse().unwrap();
        assert_eq!(e.terms(), &[(Complex64::new(1.0, 0.0), Atom::Cos(3))]);
        let e: Expr = "2*sin(x) - 0.5i*exp(-2ix) + E(-3)".parse().unwrap();
        assert_eq!(
            e.terms(),
            &[
                (Complex64::new(2.0, 0.0), Atom::Sin(1)),
                (Complex64::new(-0.0, -0.5), Atom::Exp(-2)),
                (Complex64::new(1.0, 0.0), Atom::Basis(-3)),
            ]
        );
        let e: Expr = "(1+2i)*bump(1.0,2.0) + 0.25".parse().unwrap();
        assert_eq!(e.terms()[0], (Complex64::new(1.0, 2.0), Atom::Bump(1.0, 2.0)));
        assert_eq!(e.terms()[1], (Complex64::new(0.25, 0.0), Atom::One));
        let e: Expr = "exp(ix) + i*cos(2x) + 3i".parse().unwrap();
        assert_eq!(e.terms()[0].1, Atom::Exp(1));
        assert_eq!(e.terms()[1].0, Complex64::new(0.0, 1.0));
        assert_eq!(e.terms()[2], (Complex64::new(0.0, 3.0), Atom::One));
        let e: Expr = "bump(pi/3, 2pi/3)".parse().unwrap();
        assert_eq!(e.terms()[0].1, Atom::Bump(PI / 3.0, 2.0 * PI / 3.0));
        let e: Expr = "1e-3*cos(x)".parse().unwrap();
        assert_eq!(e.terms()[0].0, Complex64::new(1e-3, 0.0));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "cos(3y)", "foo", "2*", "bump(2,1)", "E(1.5)", "cos(x) sin(x)"] {
            assert!(s.parse::<Expr>().is_err(), "{s:?}");
        }
    }

    #[test]
    fn jets_are_consistent() {
        let e: Expr = "cos(2x) + 0.3*sin(3x) - 2i*exp(-ix) + E(2) + bump(-1,1.5)".parse().unwrap();
        let kk = k(0.7);
        let h = 1e-4;
        for &x in &[0.2, -0.9, 1.3] {
            let j = e.jet(x, kk);
            let fd1 = (e.eval(x + h, kk) - e.eval(x - h, kk)) / (2.0 * h);
            let fd2 = (e.eval(x + h, kk) - 2.0 * e.eval(x, kk) + e.eval(x - h, kk)) / (h * h);
            assert!((j.d1 - fd1).norm() < 1e-6);
            assert!((j.d2 - fd2).norm() < 1e-5);
        }
        assert_eq!(e.degree(), None);
        let s: Expr = "bump(0.5,1) + 2*bump(1.2,2)".parse().unwrap();
        assert_eq!(s.support(), Some(Support::new(0.5, 2.0).unwrap()));
        assert_relative_eq!(s.eval(0.75, kk).re, (-1.0f64).exp());
    }
}
