use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{FieldElement, QuadraticField};
use crate::arith::{factor_integer, kronecker_symbol, sqrt_mod_prime_power};
use crate::error::{invalid, Error, Result};
use crate::{Integer, Rational};

/// The fractional ideal `scale * (a Z + (b + omega) Z)` with `a > 0`,
/// `0 <= b < a` and `a | N(b + omega)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldIdeal {
    field: QuadraticField,
    scale: Rational,
    a: Integer,
    b: Integer,
}

impl FieldIdeal {
    pub fn unit(field: QuadraticField) -> Self {
        FieldIdeal {
            field,
            scale: Rational::one(),
            a: Integer::one(),
            b: Integer::zero(),
        }
    }

    /// The ideal generated by `g` over the ring of integers.
    pub fn principal(g: &FieldElement) -> Result<Self> {
        if g.is_zero() {
            return invalid("zero ideal");
        }
        let f = g.field();
        Self::from_lattice(f, &[g.clone(), g.mul(&f.omega())])
    }

    /// The ideal with `Z`-basis spanned by `gens`; the caller guarantees
    /// the span is an `O`-module of rank two.
    pub fn from_lattice(field: QuadraticField, gens: &[FieldElement]) -> Result<Self> {
        let den = gens
            .iter()
            .fold(Integer::one(), |acc, g| acc.lcm(&g.denominator()));
        let dq = Rational::from_integer(den.clone());
        let rows: Vec<(Integer, Integer)> = gens
            .iter()
            .map(|g| ((g.x() * &dq).to_integer(), (g.y() * &dq).to_integer()))
            .collect();
        let mut pivot: Option<(Integer, Integer)> = None;
        let mut flat = Integer::zero();
        for (x, y) in rows {
            if y.is_zero() {
                flat = flat.gcd(&x);
                continue;
            }
            match pivot.take() {
                None => pivot = Some((x, y)),
                Some((px, py)) => {
                    let eg = py.extended_gcd(&y);
                    let g = eg.gcd;
                    let nx = &eg.x * &px + &eg.y * &x;
                    let ny = &eg.x * &py + &eg.y * &y;
                    let kx = (&y / &g) * &px - (&py / &g) * &x;
                    flat = flat.gcd(&kx);
                    pivot = Some((nx, ny));
                }
            }
        }
        let (px, py) = pivot.ok_or_else(|| Error::InvalidInput("lattice has rank below two".into()))?;
        if flat.is_zero() {
            return invalid("lattice has rank below two");
        }
        let (px, py) = if py.is_negative() { (-px, -py) } else { (px, py) };
        let c = py;
        if !(flat.is_multiple_of(&c) && px.is_multiple_of(&c)) {
            return invalid("lattice is not an ideal");
        }
        let a = &flat / &c;
        let b = (&px / &c).mod_floor(&a);
        let ideal = FieldIdeal {
            field,
            scale: Rational::new(c, den),
            a,
            b,
        };
        let nb = ideal.primitive_generator().norm();
        if !(nb / Rational::from_integer(ideal.a.clone())).is_integer() {
            return invalid("lattice is not an ideal");
        }
        Ok(ideal)
    }

    /// `b + omega`.
    fn primitive_generator(&self) -> FieldElement {
        self.field
            .element(Rational::from_integer(self.b.clone()), Rational::one())
    }

    /// A `Z`-basis.
    pub fn basis(&self) -> [FieldElement; 2] {
        [
            self.field
                .rational(Rational::from_integer(self.a.clone()) * &self.scale),
            self.primitive_generator().scale(&self.scale),
        ]
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }

    pub fn b(&self) -> &Integer {
        &self.b
    }

    pub fn norm(&self) -> Rational {
        &self.scale * &self.scale * Rational::from_integer(self.a.clone())
    }

    pub fn is_unit(&self) -> bool {
        self.scale.is_one() && self.a.is_one()
    }

    pub fn is_integral(&self) -> bool {
        self.scale.is_integer()
    }

    pub fn mul(&self, other: &FieldIdeal) -> FieldIdeal {
        let [u1, u2] = self.basis();
        let [v1, v2] = other.basis();
        Self::from_lattice(self.field, &[u1.mul(&v1), u1.mul(&v2), u2.mul(&v1), u2.mul(&v2)])
            .expect("product of ideals is an ideal")
    }

    pub fn mul_element(&self, g: &FieldElement) -> Result<FieldIdeal> {
        if g.is_zero() {
            return invalid("zero multiplier");
        }
        let [u1, u2] = self.basis();
        Self::from_lattice(self.field, &[u1.mul(g), u2.mul(g)])
    }

    pub fn conj(&self) -> FieldIdeal {
        let [u1, u2] = self.basis();
        Self::from_lattice(self.field, &[u1, u2.conj()]).expect("conjugate is an ideal")
    }

    pub fn inv(&self) -> FieldIdeal {
        let n = self.norm();
        let c = self.conj();
        FieldIdeal {
            scale: c.scale.clone() / n,
            ..c
        }
    }

    pub fn pow(&self, k: i64) -> FieldIdeal {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = FieldIdeal::unit(self.field);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn contains(&self, g: &FieldElement) -> bool {
        let x = g.x() / &self.scale;
        let y = g.y() / &self.scale;
        if !(x.is_integer() && y.is_integer()) {
            return false;
        }
        let r = x.to_integer() - y.to_integer() * &self.b;
        r.is_multiple_of(&self.a)
    }

    /// The binary form `(a, B, c)` of the primitive part, with
    /// `b + omega = (-B + sqrt disc) / 2`.
    pub fn form_coefficients(&self) -> (Integer, Integer, Integer) {
        let big_b = -(Integer::from(2) * &self.b + Integer::from(self.field.delta()));
        let c = (&big_b * &big_b - Integer::from(self.field.disc())) / (Integer::from(4) * &self.a);
        (self.a.clone(), big_b, c)
    }

    /// The primitive integral ideal `a Z + ((-B + sqrt disc)/2) Z`.
    pub fn from_form(field: QuadraticField, a: &Integer, big_b: &Integer) -> Result<FieldIdeal> {
        if !a.is_positive() {
            return invalid("ideal from form needs a > 0");
        }
        let delta = Integer::from(field.delta());
        let twice = -big_b - &delta;
        if twice.is_odd() {
            return invalid("B has the wrong parity");
        }
        let b = (twice / Integer::from(2)).mod_floor(a);
        let ideal = FieldIdeal {
            field,
            scale: Rational::one(),
            a: a.clone(),
            b,
        };
        if !(ideal.primitive_generator().norm() / Rational::from_integer(a.clone())).is_integer() {
            return invalid("form does not define an ideal");
        }
        Ok(ideal)
    }

    /// Valuation at a prime of the field.
    pub fn valuation(&self, prime: &FieldPrime) -> i64 {
        self.basis()
            .iter()
            .map(|g| element_valuation(g, prime))
            .min()
            .expect("two generators")
    }

    /// Prime factorization as a divisor.
    pub fn divisor(&self) -> Divisor {
        let mut primes = BTreeSet::new();
        let n = self.norm();
        for part in [n.numer(), n.denom()] {
            collect_primes(part, &mut primes);
        }
        let mut out = Divisor::zero(self.field);
        for p in primes {
            for prime in primes_above(self.field, p) {
                out.add_at(prime, self.valuation(&prime));
            }
        }
        out
    }
}

impl fmt::Display for FieldIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.primitive_generator();
        if self.scale.is_one() {
            write!(f, "({}, {})", self.a, g)
        } else {
            write!(f, "{} * ({}, {})", self.scale, self.a, g)
        }
    }
}

fn collect_primes(n: &Integer, out: &mut BTreeSet<u64>) {
    let v = n.abs().to_i128().expect("desk-scale integer");
    if v > 1 {
        for (p, _) in factor_integer(v).expect("nonzero").factors {
            out.insert(p as u64);
        }
    }
}

/// How a rational prime decomposes in the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitType {
    Split,
    Inert,
    Ramified,
}

pub fn split_type(field: QuadraticField, p: u64) -> SplitType {
    match kronecker_symbol(field.disc(), p as i128) {
        1 => SplitType::Split,
        -1 => SplitType::Inert,
        _ => SplitType::Ramified,
    }
}

/// Which prime above `p`: for split `p`, `First` is the kernel of the
/// embedding sending `sqrt m` to the `p`-adic root fixed by
/// [`first_root`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeKind {
    First,
    Second,
    Inert,
    Ramified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPrime {
    pub p: u64,
    pub kind: PrimeKind,
}

impl FieldPrime {
    pub fn conj(&self) -> FieldPrime {
        let kind = match self.kind {
            PrimeKind::First => PrimeKind::Second,
            PrimeKind::Second => PrimeKind::First,
            k => k,
        };
        FieldPrime { p: self.p, kind }
    }

    /// Exponent of `p` in the norm of this prime.
    pub fn degree(&self) -> i64 {
        if self.kind == PrimeKind::Inert {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for FieldPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            PrimeKind::First => "+",
            PrimeKind::Second => "-",
            PrimeKind::Inert => "i",
            PrimeKind::Ramified => "r",
        };
        write!(f, "{}{}", self.p, tag)
    }
}

pub fn primes_above(field: QuadraticField, p: u64) -> Vec<FieldPrime> {
    let kinds: &[PrimeKind] = match split_type(field, p) {
        SplitType::Split => &[PrimeKind::First, PrimeKind::Second],
        SplitType::Inert => &[PrimeKind::Inert],
        SplitType::Ramified => &[PrimeKind::Ramified],
    };
    kinds.iter().map(|&kind| FieldPrime { p, kind }).collect()
}

/// The `p`-adic square root of `m` used for the first embedding, correct
/// modulo `p^k`. For `p = 2` it is the root congruent to 1 mod 4.
pub fn first_root(m: i128, p: u64, k: u32) -> Integer {
    let pi = Integer::from(p);
    if p == 2 {
        assert_eq!(m.rem_euclid(8), 1, "m is not a 2-adic unit square");
        let m = Integer::from(m);
        let mut r = Integer::one();
        for j in 3..=k.max(3) + 1 {
            let modulus = Integer::one() << (j + 1);
            if !(&r * &r - &m).is_multiple_of(&modulus) {
                r += Integer::one() << (j - 1);
            }
        }
        return r.mod_floor(&(Integer::one() << k));
    }
    let r0 = sqrt_mod_prime_power(m, p as i128, 1).expect("m is a square mod p");
    let m = Integer::from(m);
    let mut r = Integer::from(r0);
    let mut pk = pi.clone();
    for _ in 1..k {
        pk *= &pi;
        let inv = mod_inverse(&(Integer::from(2) * &r), &pk);
        r = (&r - (&r * &r - &m) * inv).mod_floor(&pk);
    }
    r
}

fn mod_inverse(a: &Integer, m: &Integer) -> Integer {
    let eg = a.mod_floor(m).extended_gcd(m);
    assert!(eg.gcd.is_one(), "not invertible");
    eg.x.mod_floor(m)
}

fn int_valuation(x: &Integer, p: &Integer) -> i64 {
    if x.is_zero() {
        return i64::MAX;
    }
    let mut v = 0;
    let mut x = x.clone();
    loop {
        let (q, r) = x.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

fn rational_valuation(x: &Rational, p: &Integer) -> i64 {
    int_valuation(x.numer(), p) - int_valuation(x.denom(), p)
}

/// Valuation of a nonzero element at a prime of the field.
pub fn element_valuation(g: &FieldElement, prime: &FieldPrime) -> i64 {
    assert!(!g.is_zero(), "valuation of zero");
    let p = Integer::from(prime.p);
    match prime.kind {
        PrimeKind::Ramified => rational_valuation(&g.norm(), &p),
        PrimeKind::Inert => rational_valuation(g.x(), &p).min(rational_valuation(g.y(), &p)),
        PrimeKind::First | PrimeKind::Second => {
            let field = g.field();
            let (a, b) = g.sqrt_coords();
            let den = a.denom().lcm(b.denom());
            let dq = Rational::from_integer(den.clone());
            let x = (&a * &dq).to_integer();
            let y = (&b * &dq).to_integer();
            let n = &x * &x - Integer::from(field.m()) * &y * &y;
            let k = int_valuation(&n, &p) as u32 + 1;
            let s = first_root(field.m(), prime.p, k);
            let s = if prime.kind == PrimeKind::First { s } else { -s };
            let pk = p.pow(k);
            let v = int_valuation(&(&x + &y * s).mod_floor(&pk), &p).min(k as i64);
            v - int_valuation(&den, &p)
        }
    }
}

/// The prime ideal of the field corresponding to `prime`.
pub fn prime_ideal(field: QuadraticField, prime: &FieldPrime) -> FieldIdeal {
    let p = prime.p as i128;
    let pi = Integer::from(p);
    match prime.kind {
        PrimeKind::Inert => FieldIdeal {
            field,
            scale: Rational::from_integer(pi),
            a: Integer::one(),
            b: Integer::zero(),
        },
        PrimeKind::Ramified => {
            let b = (0..p)
                .find(|&b| {
                    let g = field.int_element(b, 1);
                    (g.norm() / Rational::from_integer(pi.clone())).is_integer()
                })
                .expect("ramified prime has a root");
            FieldIdeal {
                field,
                scale: Rational::one(),
                a: pi,
                b: Integer::from(b),
            }
        }
        PrimeKind::First | PrimeKind::Second => {
            // image w0 of omega modulo the prime; the ideal is (p, omega - w0)
            let s = first_root(field.m(), prime.p, 3);
            let s = if prime.kind == PrimeKind::First { s } else { -s };
            let w0 = if field.delta() == 0 {
                s.mod_floor(&pi)
            } else if p == 2 {
                ((Integer::one() + s) / Integer::from(2)).mod_floor(&pi)
            } else {
                ((Integer::one() + s) * mod_inverse(&Integer::from(2), &pi)).mod_floor(&pi)
            };
            FieldIdeal {
                field,
                scale: Rational::one(),
                a: pi.clone(),
                b: (-w0).mod_floor(&pi),
            }
        }
    }
}

/// Decomposition of a rational prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealFactorization {
    Split(FieldIdeal, FieldIdeal),
    Inert(FieldIdeal),
    Ramified(FieldIdeal),
}

pub fn ideal_factor(field: QuadraticField, p: u64) -> IdealFactorization {
    let make = |kind| prime_ideal(field, &FieldPrime { p, kind });
    match split_type(field, p) {
        SplitType::Split => IdealFactorization::Split(make(PrimeKind::First), make(PrimeKind::Second)),
        SplitType::Inert => IdealFactorization::Inert(make(PrimeKind::Inert)),
        SplitType::Ramified => IdealFactorization::Ramified(make(PrimeKind::Ramified)),
    }
}

/// A divisor on the field: finitely many primes with integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Divisor {
    field: QuadraticField,
    terms: BTreeMap<FieldPrime, i64>,
}

impl Divisor {
    pub fn zero(field: QuadraticField) -> Self {
        Divisor {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<FieldPrime, i64> {
        &self.terms
    }

    pub fn get(&self, prime: &FieldPrime) -> i64 {
        self.terms.get(prime).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_at(&mut self, prime: FieldPrime, k: i64) {
        let e = self.terms.entry(prime).or_insert(0);
        *e += k;
        if *e == 0 {
            self.terms.remove(&prime);
        }
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (&prime, &k) in &other.terms {
            out.add_at(prime, k);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Divisor {
        let mut out = Divisor::zero(self.field);
        if k != 0 {
            for (&prime, &e) in &self.terms {
                out.add_at(prime, e * k);
            }
        }
        out
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        self.add(&other.scale(-1))
    }

    pub fn conj(&self) -> Divisor {
        let mut out = Divisor::zero(self.field);
        for (prime, &e) in &self.terms {
            out.add_at(prime.conj(), e);
        }
        out
    }

    /// Drop the primes lying over `primes`.
    pub fn away_from(&self, primes: &[u64]) -> Divisor {
        Divisor {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(q, _)| !primes.contains(&q.p))
                .map(|(&q, &e)| (q, e))
                .collect(),
        }
    }

    /// Norm to `Q` as a map from rational primes to exponents.
    pub fn norm(&self) -> BTreeMap<u64, i64> {
        let mut out = BTreeMap::new();
        for (prime, &e) in &self.terms {
            *out.entry(prime.p).or_insert(0) += e * prime.degree();
        }
        out.retain(|_, e| *e != 0);
        out
    }

    pub fn ideal(&self) -> FieldIdeal {
        self.terms
            .iter()
            .fold(FieldIdeal::unit(self.field), |acc, (prime, &e)| {
                acc.mul(&prime_ideal(self.field, prime).pow(e))
            })
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(q, e)| format!("{e}*[{q}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The divisor of a nonzero element.
pub fn div(g: &FieldElement) -> Divisor {
    let mut primes = BTreeSet::new();
    let n = g.norm();
    for part in [n.numer(), n.denom(), &g.denominator()] {
        collect_primes(part, &mut primes);
    }
    let mut out = Divisor::zero(g.field());
    for p in primes {
        for prime in primes_above(g.field(), p) {
            out.add_at(prime, element_valuation(g, &prime));
        }
    }
    out
}

/// `I` with `e = I - sigma(I)`, for a divisor of norm zero: the
/// effective part of `e`.
pub fn divisor_hilbert90(e: &Divisor) -> Result<Divisor> {
    if !e.norm().is_empty() {
        return Err(Error::NotInKernel(format!("divisor {e} has nonzero norm")));
    }
    let mut out = Divisor::zero(e.field());
    for (prime, &k) in e.terms() {
        if matches!(prime.kind, PrimeKind::First | PrimeKind::Second) && k > 0 {
            out.add_at(*prime, k);
        }
    }
    debug_assert_eq!(&out.sub(&out.conj()), e);
    Ok(out)
}

/// `J` with `(v) = J / sigma(J)`, for `v` whose divisor has trivial norm.
pub fn ideal_hilbert90(v: &FieldElement) -> Result<FieldIdeal> {
    let j = divisor_hilbert90(&div(v))?.ideal();
    let check = j.mul(&j.conj().inv());
    if check != FieldIdeal::principal(v)? {
        return Err(Error::DescentFailure(format!("ideal identity failed for {v}")));
    }
    Ok(j)
}
