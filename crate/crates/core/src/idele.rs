//! Finite presentations of `C_S(Q)/n` and `C_S(Q)[n]`.
//!
//! `C_S(Q) = I_Q / Q^x U_{Q,S}` with the real place always in `S`, so
//! `C_S(Q) = (R^x x prod_{p in S} Q_p^x) / {±1} p^Z`. Both finite
//! quotients are computed from that description.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::abelian::{gcd_u64, normalize_invariants, FiniteAbelianGroup, Presentation};
use crate::arith::{factor_integer, is_prime};
use crate::error::{invalid, Error, Result};
use crate::local::{local_class, root_class, LocalClass, LocalElement, Place};
use crate::{Integer, Rational};

/// Validated, sorted, deduplicated set of finite primes.
pub fn prime_set(primes: &[u64]) -> Result<Vec<u64>> {
    let set: BTreeSet<u64> = primes.iter().copied().collect();
    for &p in &set {
        if !is_prime(p as u128) {
            return invalid(format!("{p} is not prime"));
        }
    }
    Ok(set.into_iter().collect())
}

fn check_modulus(n: u64) -> Result<()> {
    if n < 2 {
        return invalid(format!("coefficient modulus must be at least 2, got {n}"));
    }
    Ok(())
}

/// Places `inf, p_1, ..., p_k` of `S`.
pub fn s_places(s: &[u64]) -> Vec<Place> {
    std::iter::once(Place::Real)
        .chain(s.iter().map(|&p| Place::Finite(p)))
        .collect()
}

/// Prime factorization of a nonzero rational as `p -> v_p`.
pub fn rational_divisor(x: &Rational) -> Result<BTreeMap<u64, i64>> {
    if x.is_zero() {
        return invalid("divisor of zero");
    }
    let mut out = BTreeMap::new();
    for (part, sign) in [(x.numer(), 1i64), (x.denom(), -1)] {
        let v = part
            .abs()
            .to_u128()
            .ok_or_else(|| Error::Unsupported(format!("{x} too large to factor")))?;
        if v > 1 {
            for (p, e) in factor_integer(v as i128)?.factors {
                *out.entry(p as u64).or_insert(0) += sign * e as i64;
            }
        }
    }
    Ok(out)
}

fn rational_from_divisor(div: &BTreeMap<u64, i64>) -> Rational {
    let mut out = Rational::one();
    for (&p, &e) in div {
        let pe = Rational::from_integer(Integer::from(p).pow(e.unsigned_abs() as u32));
        out = if e >= 0 { out * pe } else { out / pe };
    }
    out
}

/// `x = rest * prod p^{v_p}` over the given primes, with `rest` prime to
/// them.
pub fn strip_primes(x: &Rational, primes: &[u64]) -> (Rational, BTreeMap<u64, i64>) {
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let mut vals = BTreeMap::new();
    for &p in primes {
        let pb = Integer::from(p);
        let mut v = 0i64;
        while !num.is_zero() && (&num % &pb).is_zero() {
            num /= &pb;
            v += 1;
        }
        while (&den % &pb).is_zero() {
            den /= &pb;
            v -= 1;
        }
        if v != 0 {
            vals.insert(p, v);
        }
    }
    (Rational::new(num, den), vals)
}

/// A finitely supported idele modulo `n`-th powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdeleRep {
    n: u64,
    components: BTreeMap<Place, LocalClass>,
}

impl IdeleRep {
    pub fn trivial(n: u64) -> Self {
        IdeleRep {
            n,
            components: BTreeMap::new(),
        }
    }

    pub fn from_components(n: u64, classes: impl IntoIterator<Item = LocalClass>) -> Result<Self> {
        let mut out = IdeleRep::trivial(n);
        for c in classes {
            if c.modulus() != n {
                return invalid(format!("component at {} has modulus {}", c.place(), c.modulus()));
            }
            out.insert(c);
        }
        Ok(out)
    }

    /// The principal idele of `q`, up to `U_{Q,S}`: `q` at the places of
    /// `S`, `l^{v_l(q)}` at the other primes dividing `q`.
    pub fn principal(q: &Rational, s: &[u64], n: u64) -> Result<Self> {
        let mut out = IdeleRep::trivial(n);
        for v in s_places(s) {
            out.insert(local_class(q, v, n)?);
        }
        for (l, e) in rational_divisor(q)? {
            if s.binary_search(&l).is_err() {
                out.insert(LocalClass::from_coords(Place::Finite(l), n, e, &[0, 0]));
            }
        }
        Ok(out)
    }

    /// `x` at the single place `v`, trivial elsewhere.
    pub fn at_place(x: &Rational, v: Place, n: u64) -> Result<Self> {
        Self::from_components(n, [local_class(x, v, n)?])
    }

    fn insert(&mut self, c: LocalClass) {
        let v = c.place();
        let merged = match self.components.remove(&v) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !merged.is_trivial() {
            self.components.insert(v, merged);
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn component(&self, v: Place) -> LocalClass {
        self.components
            .get(&v)
            .cloned()
            .unwrap_or_else(|| LocalClass::identity(v, self.n))
    }

    pub fn support(&self) -> impl Iterator<Item = Place> + '_ {
        self.components.keys().copied()
    }

    pub fn mul(&self, other: &IdeleRep) -> IdeleRep {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for c in other.components.values() {
            out.insert(c.clone());
        }
        out
    }

    pub fn pow(&self, k: i64) -> IdeleRep {
        let mut out = IdeleRep::trivial(self.n);
        for c in self.components.values() {
            out.insert(c.scale(k));
        }
        out
    }

    /// Move the finite support into `S` by principal ideles `l^{-v}`.
    pub fn normalize(&self, s: &[u64]) -> Result<IdeleRep> {
        let mut out = IdeleRep::trivial(self.n);
        let places = s_places(s);
        for (&v, c) in &self.components {
            match v {
                Place::Finite(l) if s.binary_search(&l).is_err() => {
                    if c.valuation() == 0 {
                        continue;
                    }
                    let shift = Rational::from_integer(Integer::from(l)).recip();
                    for &w in &places {
                        out.insert(local_class(&shift, w, self.n)?.scale(c.valuation() as i64));
                    }
                }
                _ => out.insert(c.clone()),
            }
        }
        Ok(out)
    }
}

impl fmt::Display for IdeleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(v, c)| format!("{v}:{:?}", c.coords()))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `C_S(Q)/n` with its presentation on the sign and `S`-components.
#[derive(Debug, Clone)]
pub struct IdeleClassGroup {
    s: Vec<u64>,
    n: u64,
    places: Vec<Place>,
    group: FiniteAbelianGroup<IdeleRep>,
}

impl IdeleClassGroup {
    pub fn primes(&self) -> &[u64] {
        &self.s
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn group(&self) -> &FiniteAbelianGroup<IdeleRep> {
        &self.group
    }

    pub fn invariants(&self) -> &[u64] {
        self.group.invariants()
    }

    pub fn generators(&self) -> &[IdeleRep] {
        self.group.generators()
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    fn ambient(&self, x: &IdeleRep) -> Vec<i128> {
        self.places
            .iter()
            .flat_map(|&v| x.component(v).coords())
            .collect()
    }

    fn from_ambient(&self, vec: &[i128]) -> IdeleRep {
        let mut out = IdeleRep::trivial(self.n);
        let mut i = 0;
        for &v in &self.places {
            let len = LocalClass::coord_moduli(v, self.n).len();
            let chunk: Vec<i64> = vec[i..i + len].iter().map(|&c| c as i64).collect();
            i += len;
            let c = match v {
                Place::Real => LocalClass::from_coords(v, self.n, 0, &chunk),
                Place::Finite(_) => LocalClass::from_coords(v, self.n, chunk[0], &chunk[1..]),
            };
            out.insert(c);
        }
        out
    }

    /// Coordinates of the class of `x`.
    pub fn dlog(&self, x: &IdeleRep) -> Result<Vec<u64>> {
        idele_reduce(x, self)
    }

    /// Representative of a coordinate vector.
    pub fn element(&self, coords: &[u64]) -> IdeleRep {
        match self.group.presentation() {
            Some(p) => self.from_ambient(&p.element(coords)),
            None => IdeleRep::trivial(self.n),
        }
    }
}

/// `C_S(Q)/n`. Ambient lattice: sign at `inf`, then valuation and unit
/// coordinates at each `p in S`; relations: the images of `-1` and of
/// each `p in S`.
pub fn cs_mod_n(s: &[u64], n: u64) -> Result<IdeleClassGroup> {
    check_modulus(n)?;
    if s.is_empty() {
        return Err(Error::Unsupported("C_S(Q)/n needs a nonempty S".into()));
    }
    let s = prime_set(s)?;
    let places = s_places(&s);
    let moduli: Vec<i128> = places
        .iter()
        .flat_map(|&v| LocalClass::coord_moduli(v, n))
        .map(|m| m as i128)
        .collect();
    let mut shell = IdeleClassGroup {
        s: s.clone(),
        n,
        places: places.clone(),
        group: FiniteAbelianGroup::trivial(),
    };
    let mut relations = Vec::new();
    let globals = std::iter::once(-1i64).chain(s.iter().map(|&p| p as i64));
    for g in globals {
        let x = IdeleRep::principal(&Rational::from_integer(g.into()), &s, n)?;
        relations.push(shell.ambient(&x));
    }
    let pres = Presentation::with_moduli(&moduli, &relations);
    let gens = (0..pres.invariants().len())
        .map(|k| shell.from_ambient(&pres.generator(k)))
        .collect();
    shell.group = FiniteAbelianGroup::from_presentation(pres, gens);
    Ok(shell)
}

/// Coordinates of `x` in `G`: normalize the support into `S`, then solve
/// in the presentation.
pub fn idele_reduce(x: &IdeleRep, g: &IdeleClassGroup) -> Result<Vec<u64>> {
    if x.modulus() != g.n {
        return invalid(format!("idele modulus {} does not match {}", x.modulus(), g.n));
    }
    let y = x.normalize(&g.s)?;
    Ok(g.group.dlog_ambient(&g.ambient(&y)))
}

/// An exact idele `zeta_v^k r_v`, up to `U_{Q,S}`: entries at places of
/// `S` and `inf`, plus integral valuations at other primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Idele {
    local: BTreeMap<Place, LocalElement>,
    outside: BTreeMap<u64, i64>,
}

impl Idele {
    pub fn one() -> Self {
        Idele {
            local: BTreeMap::new(),
            outside: BTreeMap::new(),
        }
    }

    /// `(1, ..., x at v, ..., 1)`.
    pub fn at_place(x: LocalElement) -> Self {
        let mut out = Idele::one();
        out.local.insert(x.place(), x);
        out
    }

    /// `l^{v_l}` at primes outside `S`, trivial at `S` and `inf`.
    pub fn from_valuations(valuations: BTreeMap<u64, i64>) -> Self {
        Idele {
            local: BTreeMap::new(),
            outside: valuations.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    /// The principal idele of `q` relative to `S`.
    pub fn principal(q: &Rational, s: &[u64]) -> Result<Self> {
        let mut out = Idele::one();
        for v in s_places(s) {
            out.local.insert(v, LocalElement::rational(v, q.clone())?);
        }
        for (l, e) in rational_divisor(q)? {
            if s.binary_search(&l).is_err() {
                out.outside.insert(l, e);
            }
        }
        Ok(out)
    }

    pub fn component(&self, v: Place) -> LocalElement {
        self.local.get(&v).cloned().unwrap_or_else(|| LocalElement::one(v))
    }

    pub fn mul(&self, other: &Idele) -> Idele {
        let mut out = self.clone();
        for (&v, x) in &other.local {
            let y = out.component(v).mul(x);
            out.local.insert(v, y);
        }
        for (&l, &e) in &other.outside {
            *out.outside.entry(l).or_insert(0) += e;
        }
        out.outside.retain(|_, e| *e != 0);
        out
    }

    pub fn pow(&self, k: i64) -> Idele {
        Idele {
            local: self.local.iter().map(|(&v, x)| (v, x.pow(k))).collect(),
            outside: self
                .outside
                .iter()
                .filter(|_| k != 0)
                .map(|(&l, &e)| (l, e * k))
                .collect(),
        }
    }

    /// Class modulo `n`-th powers. Components at finite places outside
    /// `S` must be given through `outside`.
    pub fn class(&self, n: u64) -> Result<IdeleRep> {
        let mut out = IdeleRep::trivial(n);
        for x in self.local.values() {
            out.insert(x.class(n)?);
        }
        for (&l, &e) in &self.outside {
            let v = Place::Finite(l);
            let unit = vec![0i64; LocalClass::coord_moduli(v, n).len() - 1];
            out.insert(LocalClass::from_coords(v, n, e, &unit));
        }
        Ok(out)
    }
}

/// The triple `(b, B, alpha_S)` with `div(b) + n B = 0` on `U` and
/// `b alpha_v^n = 1` at every place of `S` and `inf`; it stands for the
/// class of `(alpha_S, l^{B_l})` in `C_S(Q)[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionTriple {
    s: Vec<u64>,
    n: u64,
    b: Rational,
    divisor: BTreeMap<u64, i64>,
    alpha: BTreeMap<Place, LocalElement>,
}

impl TorsionTriple {
    /// Build and check both invariants exactly.
    pub fn new(
        s: &[u64],
        n: u64,
        b: Rational,
        divisor: BTreeMap<u64, i64>,
        alpha: BTreeMap<Place, LocalElement>,
    ) -> Result<Self> {
        check_modulus(n)?;
        let s = prime_set(s)?;
        let mut alpha = alpha;
        for v in s_places(&s) {
            alpha.entry(v).or_insert_with(|| LocalElement::one(v));
        }
        let t = TorsionTriple {
            s,
            n,
            b,
            divisor: divisor.into_iter().filter(|&(_, e)| e != 0).collect(),
            alpha,
        };
        t.verify()?;
        Ok(t)
    }

    pub fn identity(s: &[u64], n: u64) -> Result<Self> {
        Self::new(s, n, Rational::one(), BTreeMap::new(), BTreeMap::new())
    }

    /// Exact check of `div(b) + n B = 0` on `U` and `b alpha_v^n = 1`.
    pub fn verify(&self) -> Result<()> {
        if self.b.is_zero() {
            return Err(Error::NotTorsion("b = 0".into()));
        }
        for v in self.alpha.keys() {
            if let Place::Finite(p) = v {
                if self.s.binary_search(p).is_err() {
                    return Err(Error::NotTorsion(format!("alpha has a component at {p} outside S")));
                }
            }
        }
        for &l in self.divisor.keys() {
            if self.s.binary_search(&l).is_ok() {
                return Err(Error::NotTorsion(format!("divisor is supported at {l} in S")));
            }
        }
        // b * prod l^{n B_l} must be a +-S-unit
        let scaled = &self.b * num_traits::pow(rational_from_divisor(&self.divisor), self.n as usize);
        let (rest, _) = strip_primes(&scaled, &self.s);
        if !rest.abs().is_one() {
            return Err(Error::NotTorsion(format!("div(b) + nB is nonzero outside S ({rest} remains)")));
        }
        for (v, a) in &self.alpha {
            let x = a.pow(self.n as i64).mul_rational(&self.b);
            if !x.is_one() {
                return Err(Error::NotTorsion(format!("b alpha^n != 1 at {v}")));
            }
        }
        Ok(())
    }

    pub fn primes(&self) -> &[u64] {
        &self.s
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn divisor(&self) -> &BTreeMap<u64, i64> {
        &self.divisor
    }

    pub fn alpha(&self, v: Place) -> LocalElement {
        self.alpha.get(&v).cloned().unwrap_or_else(|| LocalElement::one(v))
    }

    pub fn alpha_components(&self) -> &BTreeMap<Place, LocalElement> {
        &self.alpha
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_one() && self.divisor.is_empty() && self.alpha.values().all(|a| a.is_one())
    }

    /// The idele `(alpha_S, l^{B_l})` the triple describes.
    pub fn to_idele(&self) -> Idele {
        Idele {
            local: self.alpha.clone(),
            outside: self.divisor.clone(),
        }
    }

    /// The same class after multiplying by the principal idele of `c`:
    /// `(b c^{-n}, B + div_U(c), alpha_S c)`.
    pub fn coboundary(&self, c: &Rational) -> Result<TorsionTriple> {
        let b = &self.b / num_traits::pow(c.clone(), self.n as usize);
        let mut divisor = self.divisor.clone();
        for (l, e) in rational_divisor(c)? {
            if self.s.binary_search(&l).is_err() {
                *divisor.entry(l).or_insert(0) += e;
            }
        }
        let alpha = self
            .alpha
            .iter()
            .map(|(&v, a)| (v, a.mul_rational(c)))
            .collect();
        TorsionTriple::new(&self.s, self.n, b, divisor, alpha)
    }

    /// Normal form `(1, 0, zeta^{k_p})` with `+1` at `inf`.
    pub fn normalize(&self) -> Result<TorsionTriple> {
        let c = rational_from_divisor(&self.divisor).recip();
        let mut t = self.coboundary(&c)?;
        let mut c = Rational::one();
        for (p, e) in strip_primes(&t.b, &self.s).1 {
            debug_assert_eq!(e % self.n as i64, 0);
            let q = Rational::from_integer(Integer::from(p).pow((e.unsigned_abs() / self.n) as u32));
            c = if e >= 0 { c * q } else { c / q };
        }
        t = t.coboundary(&c)?;
        if t.b.is_negative() {
            t = t.coboundary(&-Rational::one())?;
        }
        if t.alpha(Place::Real).to_rational().is_some_and(|r| r.is_negative()) {
            t = t.coboundary(&-Rational::one())?;
        }
        debug_assert!(t.b.is_one() && t.divisor.is_empty());
        // fold the signs +-1 into the root exponents
        let alpha = t
            .alpha
            .iter()
            .map(|(&v, a)| {
                let w = v.roots_of_unity() as i64;
                let r = a.rational_part();
                let k = a.root_exponent() as i64 + if r.is_negative() { w / 2 } else { 0 };
                debug_assert!(r.abs().is_one());
                LocalElement::new(v, k, Rational::one()).map(|e| (v, e))
            })
            .collect::<Result<_>>()?;
        TorsionTriple::new(&self.s, self.n, Rational::one(), BTreeMap::new(), alpha)
    }

    /// Coordinates `k_p / (w_p / g_p) mod g_p`, `g_p = gcd(n, w_p)`, in
    /// `prod_{p in S} mu_n(Q_p)`.
    pub fn root_coordinates(&self) -> Result<Vec<u64>> {
        let t = self.normalize()?;
        Ok(self
            .s
            .iter()
            .map(|&p| {
                let v = Place::Finite(p);
                let w = v.roots_of_unity();
                let g = gcd_u64(self.n, w);
                (t.alpha(v).root_exponent() / (w / g)) % g
            })
            .collect())
    }
}

impl fmt::Display for TorsionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let div: Vec<String> = self.divisor.iter().map(|(l, e)| format!("{l}^{e}")).collect();
        let alpha: Vec<String> = self
            .alpha
            .iter()
            .filter(|(_, a)| !a.is_one())
            .map(|(v, a)| format!("{v}:z^{}*{}", a.root_exponent(), a.rational_part()))
            .collect();
        write!(f, "(b={}, B=[{}], alpha=[{}])", self.b, div.join(" "), alpha.join(", "))
    }
}

/// `C_S(Q)[n] = prod_{p in S} mu_n(Q_p)` with triple carriers.
#[derive(Debug, Clone)]
pub struct TorsionGroup {
    s: Vec<u64>,
    n: u64,
    presentation: Presentation,
    group: FiniteAbelianGroup<TorsionTriple>,
}

impl TorsionGroup {
    pub fn primes(&self) -> &[u64] {
        &self.s
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn group(&self) -> &FiniteAbelianGroup<TorsionTriple> {
        &self.group
    }

    pub fn invariants(&self) -> &[u64] {
        self.group.invariants()
    }

    pub fn generators(&self) -> &[TorsionTriple] {
        self.group.generators()
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn dlog(&self, t: &TorsionTriple) -> Result<Vec<u64>> {
        if t.s != self.s || t.n != self.n {
            return invalid("triple built for a different (S, n)");
        }
        let k: Vec<i128> = t.root_coordinates()?.iter().map(|&c| c as i128).collect();
        Ok(self.presentation.dlog(&k))
    }

    /// Triple with root coordinates `k_p`.
    pub fn from_root_coordinates(&self, k: &[i128]) -> Result<TorsionTriple> {
        triple_from_roots(&self.s, self.n, k)
    }

    pub fn element(&self, coords: &[u64]) -> Result<TorsionTriple> {
        self.from_root_coordinates(&self.presentation.element(coords))
    }
}

fn triple_from_roots(s: &[u64], n: u64, k: &[i128]) -> Result<TorsionTriple> {
    let mut alpha = BTreeMap::new();
    for (&p, &c) in s.iter().zip(k) {
        let v = Place::Finite(p);
        let w = v.roots_of_unity();
        let step = (w / gcd_u64(n, w)) as i128;
        alpha.insert(v, LocalElement::new(v, ((c * step) % w as i128) as i64, Rational::one())?);
    }
    TorsionTriple::new(s, n, Rational::one(), BTreeMap::new(), alpha)
}

/// `C_S(Q)[n]`.
pub fn cs_torsion_n(s: &[u64], n: u64) -> Result<TorsionGroup> {
    check_modulus(n)?;
    if s.is_empty() {
        return Err(Error::Unsupported("C_S(Q)[n] needs a nonempty S".into()));
    }
    let s = prime_set(s)?;
    let moduli: Vec<i128> = s
        .iter()
        .map(|&p| gcd_u64(n, Place::Finite(p).roots_of_unity()) as i128)
        .collect();
    let presentation = Presentation::with_moduli(&moduli, &[]);
    debug_assert_eq!(
        presentation.invariants(),
        normalize_invariants(moduli.iter().map(|&m| m as u64).collect())
    );
    let gens = (0..presentation.invariants().len())
        .map(|k| triple_from_roots(&s, n, &presentation.generator(k)))
        .collect::<Result<Vec<_>>>()?;
    let group = FiniteAbelianGroup::from_presentation(presentation.clone(), gens);
    Ok(TorsionGroup {
        s,
        n,
        presentation,
        group,
    })
}

/// The triple of an `n`-torsion idele class: `alpha^n = b^{-1}` at
/// `S` and `inf`, and `B` the valuations of `alpha` outside `S`.
pub fn torsion_triple(alpha: &Idele, s: &[u64], n: u64) -> Result<TorsionTriple> {
    check_modulus(n)?;
    let s = prime_set(s)?;
    for v in alpha.local.keys() {
        if let Place::Finite(p) = v {
            if s.binary_search(p).is_err() {
                return invalid(format!("component at {p} outside S must be a valuation"));
            }
        }
    }
    let power = alpha.pow(n as i64);
    let mut q: Option<Rational> = None;
    for v in s_places(&s) {
        let x = power
            .component(v)
            .to_rational()
            .ok_or_else(|| Error::NotTorsion(format!("alpha^n is not rational at {v}")))?;
        match &q {
            None => q = Some(x),
            Some(prev) if *prev != x => {
                return Err(Error::NotTorsion(format!("alpha^n differs between places: {prev} vs {x}")))
            }
            _ => {}
        }
    }
    let q = q.expect("real place is always present");
    let b = q.recip();
    let alpha_s = s_places(&s).into_iter().map(|v| (v, alpha.component(v))).collect();
    TorsionTriple::new(&s, n, b, alpha.outside.clone(), alpha_s).map_err(|e| match e {
        Error::NotTorsion(msg) => Error::NotTorsion(format!("alpha is not n-torsion: {msg}")),
        other => other,
    })?
    .normalize_if_principal()
}

impl TorsionTriple {
    /// Principal classes come back as the identity triple.
    fn normalize_if_principal(self) -> Result<TorsionTriple> {
        let nf = self.normalize()?;
        if nf.is_identity() {
            Ok(nf)
        } else {
            Ok(self)
        }
    }
}

/// The class of `zeta_v^k` at the place `v` alone, modulo `n`.
pub fn root_idele(v: Place, n: u64, k: i64) -> IdeleRep {
    let mut out = IdeleRep::trivial(n);
    out.insert(root_class(v, n, k));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::legendre_symbol;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    #[test]
    fn examples() {
        assert_eq!(cs_mod_n(&[5], 2).unwrap().invariants(), &[2]);
        assert_eq!(cs_mod_n(&[5, 29], 2).unwrap().invariants(), &[2, 2]);
        // (Z/9)^x / cubes survives: the prime 3 only moves the valuation
        assert_eq!(cs_mod_n(&[3], 3).unwrap().invariants(), &[3]);
        assert!(matches!(cs_mod_n(&[], 2), Err(Error::Unsupported(_))));
        assert_eq!(cs_torsion_n(&[5, 13], 2).unwrap().invariants(), &[2, 2]);
        assert_eq!(cs_torsion_n(&[5], 2).unwrap().invariants(), &[2]);
        assert_eq!(cs_torsion_n(&[3], 2).unwrap().invariants(), &[2]);
        assert_eq!(cs_torsion_n(&[7], 3).unwrap().invariants(), &[3]);
        assert!(cs_torsion_n(&[5], 3).unwrap().invariants().is_empty());
    }

    #[test]
    fn principal_ideles_vanish() {
        let g = cs_mod_n(&[5], 2).unwrap();
        let x = IdeleRep::principal(&q(7), &[5], 2).unwrap();
        assert!(g.dlog(&x).unwrap().iter().all(|&c| c == 0));
        assert!(g.dlog(&IdeleRep::trivial(2)).unwrap().iter().all(|&c| c == 0));
        for r in [q(-12), q(35) / q(4), q(-1), q(625) / q(11)] {
            for (s, n) in [(vec![3u64, 5], 4u64), (vec![2], 6), (vec![7, 13], 3)] {
                let g = cs_mod_n(&s, n).unwrap();
                let x = IdeleRep::principal(&r, &s, n).unwrap();
                assert!(g.dlog(&x).unwrap().iter().all(|&c| c == 0), "{r} {s:?} {n}");
            }
        }
    }

    #[test]
    fn prime_at_its_own_place() {
        // p at the p-component equals p^{-1} at the other places
        for (p, l) in [(5u64, 13u64), (5, 7), (13, 17), (3, 11), (7, 29)] {
            let g = cs_mod_n(&[p, l], 2).unwrap();
            let x = IdeleRep::at_place(&q(p as i64), Place::Finite(p), 2).unwrap();
            let zero = g.dlog(&x).unwrap().iter().all(|&c| c == 0);
            let sign_free = (p - 1) % 4 == 0 || (l - 1) % 4 == 0;
            if sign_free {
                assert_eq!(zero, legendre_symbol(p as i128, l as i128) == 1, "{p} {l}");
            }
        }
    }

    #[test]
    fn dlog_is_additive_on_generators() {
        for (s, n) in [(vec![2u64, 3], 6u64), (vec![5, 29], 2), (vec![7], 9), (vec![2], 8)] {
            let g = cs_mod_n(&s, n).unwrap();
            let gens = g.generators().to_vec();
            for (i, x) in gens.iter().enumerate() {
                let mut unit = vec![0u64; gens.len()];
                unit[i] = 1;
                assert_eq!(g.dlog(x).unwrap(), unit);
                for y in &gens {
                    let sum = g.dlog(&x.mul(y)).unwrap();
                    let expect = g.group().add(&g.dlog(x).unwrap(), &g.dlog(y).unwrap());
                    assert_eq!(sum, expect);
                }
            }
        }
    }

    #[test]
    fn torsion_generators_are_valid_triples() {
        for (s, n) in [(vec![5u64, 13], 2u64), (vec![2, 7], 6), (vec![13], 12), (vec![3], 3)] {
            let t = cs_torsion_n(&s, n).unwrap();
            for (i, gen) in t.generators().iter().enumerate() {
                gen.verify().unwrap();
                let mut unit = vec![0u64; t.invariants().len()];
                unit[i] = 1;
                assert_eq!(t.dlog(gen).unwrap(), unit);
                let moved = gen.coboundary(&q(-45)).unwrap().coboundary(&(q(2) / q(77))).unwrap();
                assert_eq!(t.dlog(&moved).unwrap(), unit);
            }
        }
    }

    #[test]
    fn triples_of_ideles() {
        let s = [5u64, 13];
        let one = torsion_triple(&Idele::one(), &s, 2).unwrap();
        assert!(one.is_identity());
        let minus = Idele::at_place(LocalElement::rational(Place::Finite(5), q(-1)).unwrap());
        let t = torsion_triple(&minus, &s, 2).unwrap();
        assert_eq!(t.b(), &q(1));
        assert!(t.divisor().is_empty());
        assert_eq!(t.alpha(Place::Finite(5)).to_rational(), Some(q(-1)));
        assert!(t.alpha(Place::Finite(13)).is_one());
        let diag = Idele::principal(&q(-1), &s).unwrap();
        assert!(torsion_triple(&diag, &s, 2).unwrap().is_identity());
        let diag = Idele::principal(&(q(-3) / q(10)), &s).unwrap();
        assert!(torsion_triple(&diag, &s, 2).unwrap().is_identity());
        let bad = Idele::at_place(LocalElement::rational(Place::Finite(5), q(5)).unwrap());
        assert!(matches!(torsion_triple(&bad, &s, 2), Err(Error::NotTorsion(_))));
    }
}
