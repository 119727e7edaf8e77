use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// `c3·x³ + c2·x² + c1·x + c0` with exact rational coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cubic {
    pub c3: Rational,
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
}

/// Bracket width at which bisection stops, relative to `max(1, |x|)`.
const ROOT_TOL: f64 = 1e-12;
/// Width below which Newton steps are attempted inside the bracket.
const NEWTON_WINDOW: f64 = 1e-3;

impl Cubic {
    pub fn new(c3: Rational, c2: Rational, c1: Rational, c0: Rational) -> Self {
        Cubic { c3, c2, c1, c0 }
    }

    /// Monic cubic `x³ + c2·x² + c1·x + c0` with integer coefficients.
    pub fn monic(c2: i64, c1: i64, c0: i64) -> Self {
        Cubic::new(Rational::from(1), c2.into(), c1.into(), c0.into())
    }

    pub fn coefficients(&self) -> [Rational; 4] {
        [self.c3, self.c2, self.c1, self.c0]
    }

    /// Integer coefficients `[c3, c2, c1, c0]`, when all are integral.
    pub fn integer_coefficients(&self) -> Option<[i64; 4]> {
        let c = self.coefficients();
        c.iter().all(|r| r.is_integer()).then(|| c.map(|r| r.to_integer()))
    }

    fn float_coefficients(&self) -> [f64; 4] {
        self.coefficients().map(|r| r.to_f64().expect("finite coefficient"))
    }

    pub fn eval(&self, x: f64) -> f64 {
        let [a, b, c, d] = self.float_coefficients();
        ((a * x + b) * x + c) * x + d
    }

    pub fn eval_exact(&self, x: Rational) -> Rational {
        ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn derivative_at(&self, x: f64) -> f64 {
        let [a, b, c, _] = self.float_coefficients();
        (3.0 * a * x + 2.0 * b) * x + c
    }

    /// Sign of the cubic at `x`, exact even when the floating-point value
    /// is swamped by rounding (multiple roots, cancellation).
    pub fn sign_at(&self, x: f64) -> Ordering {
        let [a, b, c, d] = self.float_coefficients();
        let value = self.eval(x);
        let ax = x.abs();
        let magnitude = ((a.abs() * ax + b.abs()) * ax + c.abs()) * ax + d.abs();
        if value.abs() > 8.0 * f64::EPSILON * magnitude {
            return value.partial_cmp(&0.0).expect("finite value");
        }
        let xr = BigRational::from_float(x).expect("finite evaluation point");
        let big = |r: Rational| BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
        let exact = ((big(self.c3) * &xr + big(self.c2)) * &xr + big(self.c1)) * &xr + big(self.c0);
        if exact.is_zero() {
            Ordering::Equal
        } else if exact.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Cauchy bound: every real root lies in `[-bound, bound]`.
    pub fn root_bound(&self) -> f64 {
        let [a, b, c, d] = self.float_coefficients();
        1.0 + [b, c, d].iter().map(|x| (x / a).abs()).fold(0.0, f64::max)
    }

    /// A root in `[lo, hi]`, found by sign-certified bisection refined with
    /// Newton steps. The endpoints must carry opposite signs (or one must be
    /// a root). When the bracket lies above every other real root the
    /// result is the largest real root.
    pub fn root_in(&self, lo: f64, hi: f64) -> Result<f64> {
        if lo > hi || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::NoSignChange { lo, hi });
        }
        let (slo, shi) = (self.sign_at(lo), self.sign_at(hi));
        if slo == Ordering::Equal {
            return Ok(lo);
        }
        if shi == Ordering::Equal {
            return Ok(hi);
        }
        if slo == shi {
            return Err(Error::NoSignChange { lo, hi });
        }
        let (mut a, mut b) = (lo, hi);
        loop {
            if b - a <= ROOT_TOL * a.abs().max(b.abs()).max(1.0) {
                return Ok(a + (b - a) / 2.0);
            }
            let mut probe = a + (b - a) / 2.0;
            if probe <= a || probe >= b {
                return Ok(probe);
            }
            if b - a < NEWTON_WINDOW {
                let d = self.derivative_at(probe);
                if d != 0.0 {
                    let newton = probe - self.eval(probe) / d;
                    if newton > a && newton < b {
                        probe = newton;
                    }
                }
            }
            match self.sign_at(probe) {
                Ordering::Equal => return Ok(probe),
                s if s == slo => a = probe,
                _ => b = probe,
            }
        }
    }

    /// Largest real root, bracketed using the critical points: a monic
    /// cubic is increasing to the right of its larger critical point.
    pub fn largest_real_root(&self) -> f64 {
        let cubic = if self.c3 < Rational::zero() { self.negated() } else { *self };
        let bound = cubic.root_bound();
        let [a, b, c, _] = cubic.float_coefficients();
        // critical points of 3a x² + 2b x + c
        let disc = 4.0 * b * b - 12.0 * a * c;
        let (lo, hi) = if disc <= 0.0 {
            (-bound, bound)
        } else {
            let sq = disc.sqrt();
            let p1 = (-2.0 * b - sq) / (6.0 * a);
            let p2 = (-2.0 * b + sq) / (6.0 * a);
            if cubic.sign_at(p2) != Ordering::Greater {
                (p2, bound)
            } else {
                (-bound, p1)
            }
        };
        cubic
            .root_in(lo.min(hi), hi.max(lo))
            .expect("a real cubic changes sign between its bracket endpoints")
    }

    fn negated(&self) -> Cubic {
        Cubic::new(-self.c3, -self.c2, -self.c1, -self.c0)
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, power) in self.coefficients().iter().zip([3, 2, 1, 0]) {
            if coef.is_zero() {
                continue;
            }
            let sign = if coef.is_negative() { "-" } else { "+" };
            let abs = coef.abs();
            if first {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coef = power == 0 || abs != Rational::from(1);
            if show_coef {
                write!(f, "{abs}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Cubic {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Root of `cubic` in `[lo, hi]`.
pub fn largest_root(cubic: &Cubic, lo: f64, hi: f64) -> Result<f64> {
    cubic.root_in(lo, hi)
}

/// Like [`largest_root`], but if `[lo, hi]` shows no sign change the upper
/// end is pushed up by doubling the width until `limit`. Returns the root
/// and the bracket that was used.
pub fn largest_root_widening(cubic: &Cubic, lo: f64, hi: f64, limit: f64) -> Result<(f64, (f64, f64))> {
    let mut hi = hi.min(limit);
    loop {
        match cubic.root_in(lo, hi) {
            Ok(root) => return Ok((root, (lo, hi))),
            Err(_) if hi < limit => hi = (lo + 2.0 * (hi - lo)).min(limit),
            Err(e) => return Err(e),
        }
    }
}
