use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::is_squarefree;
use crate::error::{invalid, Result};
use crate::{Integer, Rational};

/// The field `Q(sqrt m)` with integral basis `1, omega`,
/// `omega = (delta + sqrt disc) / 2` and `delta = disc mod 4 in {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticField {
    m: i128,
    disc: i128,
}

/// Build `Q(sqrt m)` for squarefree `m` not in `{0, 1}`.
pub fn build_field(m: i128) -> Result<QuadraticField> {
    if m == 0 || m == 1 {
        return invalid(format!("m = {m} does not define a quadratic field"));
    }
    if !is_squarefree(m)? {
        return invalid(format!("{m} is not squarefree"));
    }
    let disc = if m.rem_euclid(4) == 1 { m } else { 4 * m };
    Ok(QuadraticField { m, disc })
}

impl QuadraticField {
    pub fn m(&self) -> i128 {
        self.m
    }

    pub fn disc(&self) -> i128 {
        self.disc
    }

    pub fn is_real(&self) -> bool {
        self.m > 0
    }

    pub(crate) fn delta(&self) -> i128 {
        self.disc.rem_euclid(4)
    }

    /// `N(omega)`.
    pub(crate) fn omega_norm(&self) -> i128 {
        (self.delta() - self.disc) / 4
    }

    /// Number of roots of unity.
    pub fn roots_of_unity(&self) -> u64 {
        match self.disc {
            -4 => 4,
            -3 => 6,
            _ => 2,
        }
    }

    pub fn one(&self) -> FieldElement {
        self.rational(Rational::one())
    }

    pub fn rational(&self, x: Rational) -> FieldElement {
        FieldElement {
            field: *self,
            x,
            y: Rational::zero(),
        }
    }

    pub fn int(&self, x: i128) -> FieldElement {
        self.rational(Rational::from_integer(x.into()))
    }

    pub fn omega(&self) -> FieldElement {
        self.element(Rational::zero(), Rational::one())
    }

    /// `x + y omega`.
    pub fn element(&self, x: Rational, y: Rational) -> FieldElement {
        FieldElement { field: *self, x, y }
    }

    pub fn int_element(&self, x: i128, y: i128) -> FieldElement {
        self.element(Rational::from_integer(x.into()), Rational::from_integer(y.into()))
    }

    /// `a + b sqrt m`.
    pub fn from_sqrt_coords(&self, a: Rational, b: Rational) -> FieldElement {
        // sqrt m = omega (delta = 0) or 2 omega - 1 (delta = 1)
        if self.delta() == 0 {
            self.element(a, b)
        } else {
            let y = &b * Rational::from_integer(2.into());
            self.element(a - b, y)
        }
    }

    pub fn sqrt_m(&self) -> FieldElement {
        self.from_sqrt_coords(Rational::zero(), Rational::one())
    }
}

impl fmt::Display for QuadraticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.m)
    }
}

/// An element `x + y omega` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: QuadraticField,
    x: Rational,
    y: Rational,
}

impl FieldElement {
    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    /// Coordinates `(a, b)` with `self = a + b sqrt m`.
    pub fn sqrt_coords(&self) -> (Rational, Rational) {
        if self.field.delta() == 0 {
            (self.x.clone(), self.y.clone())
        } else {
            let half = Rational::new(1.into(), 2.into());
            (&self.x + &self.y * &half, &self.y * half)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.field.element(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.field.element(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn neg(&self) -> FieldElement {
        self.field.element(-self.x.clone(), -self.y.clone())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        debug_assert_eq!(self.field, other.field);
        // omega^2 = delta omega - N(omega)
        let delta = Rational::from_integer(self.field.delta().into());
        let nw = Rational::from_integer(self.field.omega_norm().into());
        let yy = &self.y * &other.y;
        let x = &self.x * &other.x - &yy * &nw;
        let y = &self.x * &other.y + &self.y * &other.x + yy * delta;
        self.field.element(x, y)
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        self.field.element(&self.x * r, &self.y * r)
    }

    pub fn conj(&self) -> FieldElement {
        let delta = Rational::from_integer(self.field.delta().into());
        self.field
            .element(&self.x + &self.y * delta, -self.y.clone())
    }

    pub fn norm(&self) -> Rational {
        let delta = Rational::from_integer(self.field.delta().into());
        let nw = Rational::from_integer(self.field.omega_norm().into());
        &self.x * &self.x + &self.x * &self.y * delta + &self.y * &self.y * nw
    }

    pub fn trace(&self) -> Rational {
        let delta = Rational::from_integer(self.field.delta().into());
        &self.x * Rational::from_integer(2.into()) + &self.y * delta
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let n = self.norm();
        if n.is_zero() {
            return invalid("zero has no inverse");
        }
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<FieldElement> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// `self / conj(self)`.
    pub fn over_conjugate(&self) -> Result<FieldElement> {
        self.div(&self.conj())
    }

    /// Whether both coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// Sign under the real embedding `sqrt m -> +sqrt m` (`plus`) or
    /// `-sqrt m`. Real fields only.
    pub fn sign_at(&self, plus: bool) -> i32 {
        assert!(self.field.is_real(), "sign at a real place of an imaginary field");
        let (a, b) = self.sqrt_coords();
        let b = if plus { b } else { -b };
        sign_of_surd(&a, &b, self.field.m)
    }

    pub fn is_totally_positive(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if !self.field.is_real() {
            return true;
        }
        self.sign_at(true) > 0 && self.sign_at(false) > 0
    }

    /// Common denominator of the coordinates.
    pub fn denominator(&self) -> Integer {
        num_integer::Integer::lcm(self.x.denom(), self.y.denom())
    }

    /// Approximate value under the `+` embedding, for diagnostics and
    /// floating-point oracles.
    pub fn approx(&self, plus: bool) -> f64 {
        let (a, b) = self.sqrt_coords();
        let r = (self.field.m as f64).sqrt();
        let s = if plus { r } else { -r };
        ratio_f64(&a) + ratio_f64(&b) * s
    }
}

fn ratio_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Sign of `a + b sqrt m` for `m > 0` non-square.
fn sign_of_surd(a: &Rational, b: &Rational, m: i128) -> i32 {
    let sa = sign(a);
    let sb = sign(b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // opposite signs: compare a^2 with m b^2
    let lhs = a * a;
    let rhs = b * b * Rational::from_integer(m.into());
    if lhs > rhs {
        sa
    } else {
        sb
    }
}

fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.sqrt_coords();
        if b.is_zero() {
            return write!(f, "{a}");
        }
        let m = self.field.m;
        if a.is_zero() {
            return write!(f, "{b}*sqrt({m})");
        }
        if b.is_negative() {
            write!(f, "{a} - {}*sqrt({m})", -b)
        } else {
            write!(f, "{a} + {b}*sqrt({m})")
        }
    }
}
