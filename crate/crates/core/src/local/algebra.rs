use num_traits::{One, Zero};

use num_integer::Integer as _;

use super::{rational_valuation, split_rational, Place};
use crate::arith::{mod_inv, sqrt_mod_prime_power};
use crate::error::{invalid, Error, Result};
use crate::{Integer, Rational};

/// A `p`-adic number `p^v * u` known modulo `p^{v + prec}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Padic {
    p: u64,
    prec: u32,
    valuation: i64,
    unit: i128,
}

impl Padic {
    pub fn from_rational(x: &Rational, p: u64, prec: u32) -> Result<Self> {
        if x.is_zero() {
            return invalid("p-adic zero has no unit part");
        }
        let (valuation, unit) = split_rational(x, p, prec);
        Ok(Padic {
            p,
            prec,
            valuation,
            unit,
        })
    }

    fn modulus(&self) -> i128 {
        (self.p as i128).pow(self.prec)
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn unit(&self) -> i128 {
        self.unit
    }

    pub fn mul(&self, other: &Padic) -> Padic {
        assert_eq!((self.p, self.prec), (other.p, other.prec));
        Padic {
            p: self.p,
            prec: self.prec,
            valuation: self.valuation + other.valuation,
            unit: self.unit * other.unit % self.modulus(),
        }
    }

    pub fn inv(&self) -> Padic {
        Padic {
            p: self.p,
            prec: self.prec,
            valuation: -self.valuation,
            unit: mod_inv(self.unit, self.modulus()).expect("unit part"),
        }
    }

    pub fn is_one(&self) -> bool {
        self.valuation == 0 && self.unit == 1
    }
}

/// An element of `L_w = Q_v (x) Q(sqrt d)`.
///
/// `Algebra` keeps exact rational coordinates `a + b sqrt d`, valid at
/// every place. `Split` is the decomposed view `Q_p x Q_p` at a prime
/// where `d` is a square, first factor sending `sqrt d` to the
/// `sqrt_mod_prime_power` root; conjugation swaps the factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LocalQuadElement {
    Algebra { a: Rational, b: Rational },
    Split(Padic, Padic),
}

impl LocalQuadElement {
    pub fn algebra(a: Rational, b: Rational) -> Self {
        LocalQuadElement::Algebra { a, b }
    }

    pub fn one() -> Self {
        Self::algebra(Rational::one(), Rational::zero())
    }

    pub fn conj(&self) -> Self {
        match self {
            LocalQuadElement::Algebra { a, b } => Self::algebra(a.clone(), -b.clone()),
            LocalQuadElement::Split(x, y) => LocalQuadElement::Split(y.clone(), x.clone()),
        }
    }

    pub fn mul(&self, other: &Self, d: i128) -> Result<Self> {
        let dq = Rational::from_integer(d.into());
        match (self, other) {
            (LocalQuadElement::Algebra { a, b }, LocalQuadElement::Algebra { a: c, b: e }) => Ok(
                Self::algebra(a * c + &dq * b * e, a * e + b * c),
            ),
            (LocalQuadElement::Split(x, y), LocalQuadElement::Split(u, v)) => {
                Ok(LocalQuadElement::Split(x.mul(u), y.mul(v)))
            }
            _ => invalid("mixed algebra and split representations"),
        }
    }

    pub fn inv(&self, d: i128) -> Result<Self> {
        match self {
            LocalQuadElement::Algebra { a, b } => {
                let n = self.norm_algebra(d);
                if n.is_zero() {
                    return invalid("zero divisor has no inverse");
                }
                Ok(Self::algebra(a / &n, -b / &n))
            }
            LocalQuadElement::Split(x, y) => Ok(LocalQuadElement::Split(x.inv(), y.inv())),
        }
    }

    fn norm_algebra(&self, d: i128) -> Rational {
        match self {
            LocalQuadElement::Algebra { a, b } => {
                a * a - Rational::from_integer(d.into()) * b * b
            }
            LocalQuadElement::Split(..) => unreachable!(),
        }
    }

    /// `self / conj(self)`.
    pub fn over_conjugate(&self, d: i128) -> Result<Self> {
        self.mul(&self.conj().inv(d)?, d)
    }

    /// The split view at a prime where `d` is a `p`-adic square.
    pub fn split_view(&self, d: i128, p: u64, prec: u32) -> Result<Self> {
        match self {
            LocalQuadElement::Split(..) => Ok(self.clone()),
            LocalQuadElement::Algebra { a, b } => {
                if d.rem_euclid(p as i128) == 0 {
                    return invalid(format!("{d} is not a unit at {p}"));
                }
                let den = a.denom().lcm(b.denom());
                let x = (a * Rational::from_integer(den.clone())).to_integer();
                let y = (b * Rational::from_integer(den.clone())).to_integer();
                let norm = &x * &x - Integer::from(d) * &y * &y;
                if norm.is_zero() {
                    return invalid("zero divisor in split algebra");
                }
                // each factor has valuation at most v_p(norm)
                let extra = rational_valuation(&Rational::from_integer(norm), p) as u32;
                let s = sqrt_mod_prime_power(d, p as i128, prec + extra)
                    .ok_or_else(|| Error::InvalidInput(format!("{d} is not a square at {p}")))?;
                let s = Integer::from(s);
                let den = Rational::from_integer(den);
                let first = Rational::from_integer(&x + &y * &s) / &den;
                let second = Rational::from_integer(&x - &y * &s) / &den;
                Ok(LocalQuadElement::Split(
                    Padic::from_rational(&first, p, prec)?,
                    Padic::from_rational(&second, p, prec)?,
                ))
            }
        }
    }
}

/// Solve `c = beta / sigma(beta)` in `L_w` for `c` of norm one.
///
/// Algebra form: `beta = 1 + c`, or `sqrt d` when `c = -1`. Split form:
/// `c = (u, u^{-1})` gives `beta = (u, 1)`.
pub fn local_hilbert90(c: &LocalQuadElement, d: i128, place: Place) -> Result<LocalQuadElement> {
    local_hilbert90_with(c, d, place, &LocalQuadElement::one())
}

/// As [`local_hilbert90`], using `beta = theta + c * sigma(theta)` for
/// the algebra form; falls back to the canonical choice when that
/// vanishes.
pub fn local_hilbert90_with(
    c: &LocalQuadElement,
    d: i128,
    place: Place,
    theta: &LocalQuadElement,
) -> Result<LocalQuadElement> {
    let _ = place;
    match c {
        LocalQuadElement::Algebra { a, b } => {
            let norm = c.norm_algebra(d);
            if !norm.is_one() {
                return Err(Error::NotInKernel(format!("norm of {a} + {b} sqrt({d}) is {norm}")));
            }
            let candidate = match theta {
                LocalQuadElement::Algebra { .. } => {
                    let t = c.mul(&theta.conj(), d)?;
                    match (theta, &t) {
                        (
                            LocalQuadElement::Algebra { a: x, b: y },
                            LocalQuadElement::Algebra { a: u, b: v },
                        ) => LocalQuadElement::algebra(x + u, y + v),
                        _ => unreachable!(),
                    }
                }
                LocalQuadElement::Split(..) => return invalid("theta must be in algebra form"),
            };
            if candidate.norm_algebra(d).is_zero() {
                if theta != &LocalQuadElement::one() {
                    return local_hilbert90_with(c, d, place, &LocalQuadElement::one());
                }
                // c = -1 and theta = 1
                return Ok(LocalQuadElement::algebra(Rational::zero(), Rational::one()));
            }
            Ok(candidate)
        }
        LocalQuadElement::Split(x, y) => {
            if !x.mul(y).is_one() {
                return Err(Error::NotInKernel("split components are not inverse".into()));
            }
            let one = Padic {
                p: x.p,
                prec: x.prec,
                valuation: 0,
                unit: 1,
            };
            Ok(LocalQuadElement::Split(x.clone(), one))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn trivial_and_minus_one() {
        let one = LocalQuadElement::one();
        let beta = local_hilbert90(&one, 5, Place::Finite(5)).unwrap();
        assert_eq!(beta.over_conjugate(5).unwrap(), one);
        // sqrt p / sigma(sqrt p) = -1
        let minus = LocalQuadElement::algebra(q(-1), q(0));
        let beta = local_hilbert90(&minus, 5, Place::Finite(5)).unwrap();
        assert_eq!(beta, LocalQuadElement::algebra(q(0), q(1)));
        assert_eq!(beta.over_conjugate(5).unwrap(), minus);
    }

    #[test]
    fn split_identity() {
        let u = Padic::from_rational(&q(7), 29, 3).unwrap();
        let c = LocalQuadElement::Split(u.clone(), u.inv());
        let beta = local_hilbert90(&c, 5, Place::Finite(29)).unwrap();
        match &beta {
            LocalQuadElement::Split(x, y) => {
                assert_eq!(x, &u);
                assert!(y.is_one());
            }
            _ => panic!("expected split form"),
        }
        assert_eq!(beta.over_conjugate(5).unwrap(), c);
    }

    #[test]
    fn norm_one_elements_and_split_view() {
        // (3 + 2i)/(3 - 2i) has norm one in Q(i)
        let x = LocalQuadElement::algebra(q(3), q(2));
        let c = x.over_conjugate(-1).unwrap();
        for theta in [LocalQuadElement::one(), LocalQuadElement::algebra(q(2), q(-7))] {
            let beta = local_hilbert90_with(&c, -1, Place::Finite(13), &theta).unwrap();
            assert_eq!(beta.over_conjugate(-1).unwrap(), c);
            // -1 is a square mod 13: the split view satisfies the same identity
            let split = beta.split_view(-1, 13, 4).unwrap();
            let c_split = c.split_view(-1, 13, 4).unwrap();
            assert_eq!(split.over_conjugate(-1).unwrap(), c_split);
        }
        let not_kernel = LocalQuadElement::algebra(q(2), q(0));
        assert!(matches!(
            local_hilbert90(&not_kernel, -1, Place::Real),
            Err(Error::NotInKernel(_))
        ));
    }
}
