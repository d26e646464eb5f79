// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact algebra over expressions `p(t)·sin(φ+t) + q(t)·cos(φ+t)` with
//! rational polynomials `p`, `q`.
//!
//! Every curve of the involute tower has both coordinates in this class, and
//! the class is closed under the involute map: a tower curve's velocity
//! collapses to `c·t^d` times a rotating unit frame, so its arc length is the
//! exact monomial `|c|·t^{d+1}/(d+1)` and the involute subtracts
//! `c·t^{d+1}/(d+1)` times that frame.

mod induction;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub use induction::{
    verify_induction, verify_step, CoefficientDiff, InductionReport, InductionStep,
};
pub use poly::{inverse_factorial, rational, RationalPoly};

use crate::curve::Point2;
use crate::error::{Error, Result};

/// `p(t)·sin(φ+t) + q(t)·cos(φ+t)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TrigPolyExpr {
    /// Coefficient of `sin(φ+t)`.
    pub p: RationalPoly,
    /// Coefficient of `cos(φ+t)`.
    pub q: RationalPoly,
}

impl TrigPolyExpr {
    pub fn new(p: RationalPoly, q: RationalPoly) -> Self {
        TrigPolyExpr { p, q }
    }

    pub fn sin() -> Self {
        TrigPolyExpr::new(RationalPoly::one(), RationalPoly::zero())
    }

    pub fn cos() -> Self {
        TrigPolyExpr::new(RationalPoly::zero(), RationalPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Highest power of `t` appearing in either coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.p.degree().max(self.q.degree())
    }

    /// `(p′ − q)·sin(φ+t) + (q′ + p)·cos(φ+t)`.
    pub fn differentiate(&self) -> Self {
        TrigPolyExpr {
            p: &self.p.derivative() - &self.q,
            q: &self.q.derivative() + &self.p,
        }
    }

    pub fn eval(&self, phi: f64, t: f64) -> f64 {
        let (s, c) = (phi + t).sin_cos();
        self.p.eval(t) * s + self.q.eval(t) * c
    }

    fn scaled_trig(trig: SignedTrig, m: &RationalPoly) -> Self {
        let m = if trig.negative { -m } else { m.clone() };
        match trig.func {
            Trig::Sin => TrigPolyExpr::new(m, RationalPoly::zero()),
            Trig::Cos => TrigPolyExpr::new(RationalPoly::zero(), m),
        }
    }

    /// `Some((func, degree, coeff))` when the expression is a single
    /// monomial times `sin` or `cos`.
    fn as_single_term(&self) -> Option<(Trig, usize, BigRational)> {
        match (self.p.is_zero(), self.q.is_zero()) {
            (false, true) => self.p.as_monomial().map(|(d, c)| (Trig::Sin, d, c)),
            (true, false) => self.q.as_monomial().map(|(d, c)| (Trig::Cos, d, c)),
            _ => None,
        }
    }
}

impl std::ops::Sub for &TrigPolyExpr {
    type Output = TrigPolyExpr;
    fn sub(self, rhs: &TrigPolyExpr) -> TrigPolyExpr {
        TrigPolyExpr::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl fmt::Display for TrigPolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.p.coeffs().len().max(self.q.coeffs().len());
        let mut first = true;
        for i in 0..len {
            for (c, factor) in [
                (self.p.coeff(i), "sin(phi+t)"),
                (self.q.coeff(i), "cos(phi+t)"),
            ] {
                if c.is_zero() {
                    continue;
                }
                let body = poly::fmt_term(&c, i, Some(factor));
                match (first, c.is_negative()) {
                    (true, false) => write!(f, "{body}")?,
                    (true, true) => write!(f, "-{body}")?,
                    (false, false) => write!(f, " + {body}")?,
                    (false, true) => write!(f, " - {body}")?,
                }
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A plane curve with both coordinates in the trig-polynomial class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TrigPolyCurve {
    pub x: TrigPolyExpr,
    pub y: TrigPolyExpr,
}

impl TrigPolyCurve {
    pub fn new(x: TrigPolyExpr, y: TrigPolyExpr) -> Self {
        TrigPolyCurve { x, y }
    }

    /// The base arc `x = sin(φ+t)`, `y = cos(φ+t)`.
    pub fn base_arc() -> Self {
        TrigPolyCurve::new(TrigPolyExpr::sin(), TrigPolyExpr::cos())
    }

    /// `x = sin(φ+t)`, `y = −cos(φ+t)`: with `φ = π/2` this is the unit
    /// circle `(cos t, sin t)`.
    pub fn unit_circle() -> Self {
        TrigPolyCurve::new(
            TrigPolyExpr::sin(),
            TrigPolyExpr::new(RationalPoly::zero(), -RationalPoly::one()),
        )
    }

    pub fn degree(&self) -> Option<usize> {
        self.x.degree().max(self.y.degree())
    }

    pub fn differentiate(&self) -> Self {
        TrigPolyCurve::new(self.x.differentiate(), self.y.differentiate())
    }

    pub fn eval(&self, phi: f64, t: f64) -> Point2 {
        Point2::new(self.x.eval(phi, t), self.y.eval(phi, t))
    }

    /// The four coefficient polynomials, labelled, in a fixed order.
    pub fn components(&self) -> [(&'static str, &RationalPoly); 4] {
        [
            ("x.sin", &self.x.p),
            ("x.cos", &self.x.q),
            ("y.sin", &self.y.p),
            ("y.cos", &self.y.q),
        ]
    }
}

impl fmt::Display for TrigPolyCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "x(t) = {}", self.x)?;
        write!(f, "y(t) = {}", self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Trig {
    Sin,
    Cos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedTrig {
    pub negative: bool,
    pub func: Trig,
}

/// A rotating unit vector built from `±sin(φ+t)` and `±cos(φ+t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Frame {
    pub x: SignedTrig,
    pub y: SignedTrig,
}

impl Frame {
    /// `(sin, cos)`: odd tower levels.
    pub const SINE: Frame = Frame {
        x: SignedTrig {
            negative: false,
            func: Trig::Sin,
        },
        y: SignedTrig {
            negative: false,
            func: Trig::Cos,
        },
    };
    /// `(cos, −sin)`: even tower levels.
    pub const COSINE: Frame = Frame {
        x: SignedTrig {
            negative: false,
            func: Trig::Cos,
        },
        y: SignedTrig {
            negative: true,
            func: Trig::Sin,
        },
    };
}

/// A velocity `c·t^d·frame`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSpeed {
    pub degree: usize,
    /// Signed; the speed is `|coeff|·t^degree`.
    pub coeff: BigRational,
    pub frame: Frame,
}

impl MonomialSpeed {
    /// Exact arc length from `t = 0`: `(degree + 1, |coeff|/(degree + 1))`.
    pub fn arc_length(&self) -> (usize, BigRational) {
        let d = self.degree + 1;
        (
            d,
            self.coeff.abs() / BigRational::from_integer(BigInt::from(d)),
        )
    }
}

/// `d/dt` of a single expression.
pub fn differentiate(e: &TrigPolyExpr) -> TrigPolyExpr {
    e.differentiate()
}

/// Reads off `(d, c, frame)` from a curve whose velocity is `c·t^d` times a
/// rotating unit frame.
pub fn monomial_speed(curve: &TrigPolyCurve) -> Result<MonomialSpeed> {
    let v = curve.differentiate();
    let not_closed =
        |why: &str| Error::NotInClosure(format!("{why}; velocity is x' = {}, y' = {}", v.x, v.y));
    let (fx, dx, cx) =
        v.x.as_single_term()
            .ok_or_else(|| not_closed("x' is not a single monomial times sin or cos"))?;
    let (fy, dy, cy) =
        v.y.as_single_term()
            .ok_or_else(|| not_closed("y' is not a single monomial times sin or cos"))?;
    if fx == fy {
        return Err(not_closed("x' and y' use the same trig function"));
    }
    if dx != dy || cx.abs() != cy.abs() {
        return Err(not_closed("x' and y' carry different monomials"));
    }
    let frame = Frame {
        x: SignedTrig {
            negative: false,
            func: fx,
        },
        y: SignedTrig {
            negative: cx.is_negative() != cy.is_negative(),
            func: fy,
        },
    };
    Ok(MonomialSpeed {
        degree: dx,
        coeff: cx,
        frame,
    })
}

/// Involute of a closed-class curve, string attached at `t = 0`, together
/// with the velocity data it was built from.
pub fn symbolic_involute_with_speed(
    curve: &TrigPolyCurve,
) -> Result<(TrigPolyCurve, MonomialSpeed)> {
    let speed = monomial_speed(curve)?;
    // s·T = |c|t^{d+1}/(d+1) · sign(c)·frame = c·t^{d+1}/(d+1) · frame
    let d = speed.degree + 1;
    let m = RationalPoly::monomial(&speed.coeff / BigRational::from_integer(BigInt::from(d)), d);
    let x = &curve.x - &TrigPolyExpr::scaled_trig(speed.frame.x, &m);
    let y = &curve.y - &TrigPolyExpr::scaled_trig(speed.frame.y, &m);
    Ok((TrigPolyCurve::new(x, y), speed))
}

pub fn symbolic_involute(curve: &TrigPolyCurve) -> Result<TrigPolyCurve> {
    symbolic_involute_with_speed(curve).map(|(c, _)| c)
}

/// `Cₙ(t)` with exact coefficients.
pub fn exact_partial_cos(n: u32) -> RationalPoly {
    let mut coeffs = vec![BigRational::zero(); 2 * n as usize + 1];
    for i in 0..=n {
        let c = inverse_factorial(2 * i);
        coeffs[2 * i as usize] = if i % 2 == 0 { c } else { -c };
    }
    RationalPoly::from_coeffs(coeffs)
}

/// `Sₙ(t)` with exact coefficients; `S₀ = 0`.
pub fn exact_partial_sin(n: u32) -> RationalPoly {
    if n == 0 {
        return RationalPoly::zero();
    }
    let mut coeffs = vec![BigRational::zero(); 2 * n as usize];
    for i in 0..n {
        let c = inverse_factorial(2 * i + 1);
        coeffs[2 * i as usize + 1] = if i % 2 == 0 { c } else { -c };
    }
    RationalPoly::from_coeffs(coeffs)
}

/// Closed form of tower level `k` (level 0 is the base arc):
/// `x = C_a·sin − S_b·cos`, `y = C_a·cos + S_b·sin` with `a = ⌊k/2⌋`,
/// `b = ⌈k/2⌉`.
pub fn tower_level(k: u32) -> TrigPolyCurve {
    let c = exact_partial_cos(k / 2);
    let s = exact_partial_sin(k.div_ceil(2));
    TrigPolyCurve::new(TrigPolyExpr::new(c.clone(), -&s), TrigPolyExpr::new(s, c))
}
