use num_traits::{One, Signed, Zero};

use super::{split_rational, v_p, Place};
use crate::abelian::gcd_u64;
use crate::arith::{mod_inv, mod_pow, primitive_root};
use crate::error::{invalid, Result};
use crate::Rational;

/// Working `p`-adic precision for classes modulo `n`-th powers.
pub fn precision_exponent(p: u64, n: u64) -> u32 {
    2 * v_p(n, p) + 3
}

/// Moduli of the unit coordinates of `Q_v^x/(Q_v^x)^n`.
///
/// Odd `p`: `Z/gcd(n, p-1) x Z/p^{v_p(n)}` (Teichmuller part, one-units
/// generated by `1 + p`). `p = 2`: `Z/gcd(n, 2) x Z/2^{v_2(n)}` (sign
/// part, one-units `1 + 4Z_2` generated by 5). Real: `Z/gcd(n, 2)`.
pub fn unit_moduli(place: Place, n: u64) -> Vec<u64> {
    match place {
        Place::Real => vec![gcd_u64(n, 2)],
        Place::Finite(2) => vec![gcd_u64(n, 2), 1 << v_p(n, 2)],
        Place::Finite(p) => vec![gcd_u64(n, p - 1), p.pow(v_p(n, p))],
    }
}

/// A class in `Q_v^x/(Q_v^x)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalClass {
    place: Place,
    modulus: u64,
    valuation: u64,
    unit: Vec<u64>,
}

impl LocalClass {
    pub fn identity(place: Place, n: u64) -> Self {
        LocalClass {
            place,
            modulus: n,
            valuation: 0,
            unit: vec![0; unit_moduli(place, n).len()],
        }
    }

    /// Class with the given raw coordinates (reduced modulo their moduli).
    pub fn from_coords(place: Place, n: u64, valuation: i64, unit: &[i64]) -> Self {
        let moduli = unit_moduli(place, n);
        assert_eq!(moduli.len(), unit.len());
        let valuation = if place.is_real() {
            0
        } else {
            valuation.rem_euclid(n as i64) as u64
        };
        LocalClass {
            place,
            modulus: n,
            valuation,
            unit: unit
                .iter()
                .zip(&moduli)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
                .collect(),
        }
    }

    pub fn place(&self) -> Place {
        self.place
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn valuation(&self) -> u64 {
        self.valuation
    }

    pub fn unit_coords(&self) -> &[u64] {
        &self.unit
    }

    pub fn is_trivial(&self) -> bool {
        self.valuation == 0 && self.unit.iter().all(|&c| c == 0)
    }

    /// Coordinates in the ambient lattice: valuation (finite places only)
    /// followed by unit coordinates.
    pub fn coords(&self) -> Vec<i128> {
        let mut out = Vec::with_capacity(3);
        if !self.place.is_real() {
            out.push(self.valuation as i128);
        }
        out.extend(self.unit.iter().map(|&c| c as i128));
        out
    }

    /// Moduli matching [`LocalClass::coords`].
    pub fn coord_moduli(place: Place, n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        if !place.is_real() {
            out.push(n);
        }
        out.extend(unit_moduli(place, n));
        out
    }

    pub fn add(&self, other: &LocalClass) -> LocalClass {
        assert_eq!(self.place, other.place);
        assert_eq!(self.modulus, other.modulus);
        let moduli = unit_moduli(self.place, self.modulus);
        LocalClass {
            place: self.place,
            modulus: self.modulus,
            valuation: (self.valuation + other.valuation) % self.modulus.max(1),
            unit: self
                .unit
                .iter()
                .zip(&other.unit)
                .zip(&moduli)
                .map(|((a, b), m)| (a + b) % m)
                .collect(),
        }
        .normalized()
    }

    pub fn scale(&self, k: i64) -> LocalClass {
        let moduli = unit_moduli(self.place, self.modulus);
        let n = self.modulus as i128;
        LocalClass {
            place: self.place,
            modulus: self.modulus,
            valuation: (self.valuation as i128 * k as i128).rem_euclid(n) as u64,
            unit: self
                .unit
                .iter()
                .zip(&moduli)
                .map(|(&a, &m)| (a as i128 * k as i128).rem_euclid(m as i128) as u64)
                .collect(),
        }
        .normalized()
    }

    pub fn neg(&self) -> LocalClass {
        self.scale(-1)
    }

    fn normalized(mut self) -> Self {
        if self.place.is_real() {
            self.valuation = 0;
        }
        self
    }

    /// Reduce to a class modulo `m`-th powers for `m | n`.
    pub fn reduce(&self, m: u64) -> Result<LocalClass> {
        if m == 0 || self.modulus % m != 0 {
            return invalid(format!("{m} does not divide {}", self.modulus));
        }
        let moduli = unit_moduli(self.place, m);
        // One-unit coordinates: Z/p^{v(n)} -> Z/p^{v(m)} is reduction; the
        // Teichmuller/sign part Z/gcd(n, .) -> Z/gcd(m, .) likewise.
        Ok(LocalClass {
            place: self.place,
            modulus: m,
            valuation: self.valuation % m,
            unit: self
                .unit
                .iter()
                .zip(&moduli)
                .map(|(&c, &md)| c % md)
                .collect(),
        }
        .normalized())
    }

    /// A rational in this square class (modulus must be even).
    pub fn square_class_representative(&self) -> Result<Rational> {
        let sq = self.reduce(2)?;
        let r = |x: i64| Rational::from_integer(x.into());
        Ok(match self.place {
            Place::Real => {
                if sq.unit[0] == 1 {
                    r(-1)
                } else {
                    r(1)
                }
            }
            Place::Finite(2) => {
                let mut x = r(1);
                if sq.valuation == 1 {
                    x *= r(2);
                }
                if sq.unit[0] == 1 {
                    x = -x;
                }
                if sq.unit[1] == 1 {
                    x *= r(5);
                }
                x
            }
            Place::Finite(p) => {
                let mut x = r(1);
                if sq.valuation == 1 {
                    x *= r(p as i64);
                }
                if sq.unit[0] == 1 {
                    x *= r(primitive_root(p as i128) as i64);
                }
                x
            }
        })
    }
}

/// Discrete log in a cyclic group of order `q^e` (`q` prime) inside
/// `(Z/m)^x`, by extracting one base-`q` digit at a time.
fn prime_power_dlog(target: i128, gen: i128, q: i128, e: u32, m: i128) -> i128 {
    let order = q.pow(e);
    let top = mod_pow(gen, q.pow(e - 1) as u128, m);
    let gen_inv = mod_inv(gen, m).expect("generator is a unit");
    let mut log = 0i128;
    for i in 0..e {
        let shifted = target * mod_pow(gen_inv, log as u128, m) % m;
        let probe = mod_pow(shifted, q.pow(e - 1 - i) as u128, m);
        let digit = (0..q)
            .find(|&d| mod_pow(top, d as u128, m) == probe)
            .expect("element lies in the cyclic subgroup");
        log += digit * q.pow(i);
    }
    log % order
}

/// Coordinates of a `p`-adic unit `u mod p^k` in `Z_p^x/(Z_p^x)^n`.
fn unit_coords(p: u64, n: u64, u: i128) -> Vec<u64> {
    let moduli = unit_moduli(Place::Finite(p), n);
    let v = v_p(n, p);
    if p == 2 {
        let m = 1i128 << (v + 2);
        let u = u.rem_euclid(m);
        let sign = u64::from(u % 4 == 3);
        let one_unit = if sign == 1 { (m - u) % m } else { u };
        let log = if v == 0 {
            0
        } else {
            prime_power_dlog(one_unit, 5, 2, v, m)
        };
        return vec![sign % moduli[0], (log as u64) % moduli[1]];
    }
    let pi = p as i128;
    let g = primitive_root(pi);
    let t = moduli[0];
    // Teichmuller coordinate: dlog of u^{(p-1)/t} in mu_t of F_p
    let first = if t == 1 {
        0
    } else {
        let x = mod_pow(u, ((pi - 1) / t as i128) as u128, pi);
        let zeta = mod_pow(g, ((pi - 1) / t as i128) as u128, pi);
        (0..t)
            .find(|&j| mod_pow(zeta, j as u128, pi) == x)
            .expect("power lands in mu_t")
    };
    let second = if v == 0 {
        0
    } else {
        let m = pi.pow(v + 1);
        // u^{p-1} is a one-unit; divide its log by p - 1
        let w = mod_pow(u, (pi - 1) as u128, m);
        let log = prime_power_dlog(w, 1 + pi, pi, v, m);
        let order = pi.pow(v);
        let inv = mod_inv(pi - 1, order).expect("p - 1 is prime to p");
        (log * inv).rem_euclid(order) as u64
    };
    vec![first, second]
}

/// The class of a nonzero rational in `Q_v^x / (Q_v^x)^n`.
pub fn local_class(x: &Rational, place: Place, n: u64) -> Result<LocalClass> {
    if x.is_zero() {
        return invalid("local class of zero");
    }
    if n == 0 {
        return invalid("modulus must be positive");
    }
    match place {
        Place::Real => Ok(LocalClass::from_coords(
            place,
            n,
            0,
            &[i64::from(x.is_negative())],
        )),
        Place::Finite(p) => {
            let k = precision_exponent(p, n);
            let (val, unit) = split_rational(x, p, k);
            let coords: Vec<i64> = unit_coords(p, n, unit).iter().map(|&c| c as i64).collect();
            Ok(LocalClass::from_coords(place, n, val, &coords))
        }
    }
}

/// An element `zeta_v^k * r` of `Q_v^x`, with `zeta_v` a fixed generator
/// of the roots of unity of `Q_v` (Teichmuller lift of the least
/// primitive root for odd `p`, `-1` for `p = 2` and the real place) and
/// `r` rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalElement {
    place: Place,
    root: u64,
    value: Rational,
}

impl LocalElement {
    pub fn new(place: Place, root: i64, value: Rational) -> Result<Self> {
        if value.is_zero() {
            return invalid("local element must be nonzero");
        }
        let w = place.roots_of_unity() as i64;
        Ok(LocalElement {
            place,
            root: root.rem_euclid(w) as u64,
            value,
        })
    }

    pub fn rational(place: Place, value: Rational) -> Result<Self> {
        Self::new(place, 0, value)
    }

    pub fn one(place: Place) -> Self {
        LocalElement {
            place,
            root: 0,
            value: Rational::one(),
        }
    }

    pub fn place(&self) -> Place {
        self.place
    }

    pub fn root_exponent(&self) -> u64 {
        self.root
    }

    pub fn rational_part(&self) -> &Rational {
        &self.value
    }

    pub fn mul(&self, other: &LocalElement) -> LocalElement {
        assert_eq!(self.place, other.place);
        let w = self.place.roots_of_unity();
        LocalElement {
            place: self.place,
            root: (self.root + other.root) % w,
            value: &self.value * &other.value,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> LocalElement {
        LocalElement {
            place: self.place,
            root: self.root,
            value: &self.value * r,
        }
    }

    pub fn pow(&self, k: i64) -> LocalElement {
        let w = self.place.roots_of_unity() as i128;
        let value = if k >= 0 {
            num_traits::pow(self.value.clone(), k as usize)
        } else {
            num_traits::pow(self.value.recip(), k.unsigned_abs() as usize)
        };
        LocalElement {
            place: self.place,
            root: (self.root as i128 * k as i128).rem_euclid(w) as u64,
            value,
        }
    }

    /// The element as a rational when its root-of-unity part is `±1`.
    pub fn to_rational(&self) -> Option<Rational> {
        let w = self.place.roots_of_unity();
        if self.root == 0 {
            Some(self.value.clone())
        } else if 2 * self.root == w {
            Some(-self.value.clone())
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_one())
    }

    pub fn class(&self, n: u64) -> Result<LocalClass> {
        let rational = local_class(&self.value, self.place, n)?;
        Ok(rational.add(&root_class(self.place, n, self.root as i64)))
    }
}

/// Class of `zeta_v^k`.
pub fn root_class(place: Place, n: u64, k: i64) -> LocalClass {
    let mut unit = vec![0i64; unit_moduli(place, n).len()];
    unit[0] = k;
    LocalClass::from_coords(place, n, 0, &unit)
}
