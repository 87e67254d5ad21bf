//! Cup products `H^1 x H^1 -> H^2` on `Spec Z \ S` by descent through a
//! quadratic torsor, products in higher degrees through the real place,
//! and the reciprocity check.
//!
//! For `y` of degree `d = 2` with field `L` and a triple
//! `alpha = (b, B, alpha_S)`, the descent finds `t` in `L` with
//! `N(t) = b^{-1}`, a divisor `I` with `(n/2) B - div(t) = I - sigma(I)`
//! away from `S`, and `beta_v` with `alpha_v^{n/2} = t beta_v / sigma(beta_v)`
//! at the places of `S` and `inf`. Then
//! `<y cup z, alpha> = <z, alpha^e N(beta)^{n/d}>` with
//! `e = (n/d) n (d+1)/2`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{jacobi_symbol, primes_below};
use crate::cohomology::{induce_torsor, torsor_basis, torsor_character, torsor_sign, torsor_supported_on, TorsorClass};
use crate::error::{invalid, Error, Result};
use crate::idele::{cs_torsion_n, prime_set, s_places, torsion_triple, Idele, TorsionTriple};
use crate::local::{LocalElement, Place};
use crate::quadratic::{div, divisor_hilbert90, solve_norm_equation, Divisor, FieldElement, QuadraticField};
use crate::{Integer, Rational};

/// Solver choices that must not change the result.
#[derive(Debug, Clone, Default)]
pub struct DescentChoices {
    /// replaces `t` by `t x / sigma(x)`
    pub t_twist: Option<FieldElement>,
    /// seed element `theta` for `beta = theta + c sigma(theta)`
    pub theta: Option<FieldElement>,
    /// rescales `beta_v` by a rational
    pub beta_scale: BTreeMap<Place, Rational>,
    /// replaces the triple by its coboundary under this rational
    pub coboundary: Option<Rational>,
}

impl DescentChoices {
    /// Random choices drawn from `seed`.
    pub fn random(field: QuadraticField, s: &[u64], seed: u64) -> DescentChoices {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let small = |rng: &mut ChaCha8Rng| rng.gen_range(-6i128..=6);
        let element = |rng: &mut ChaCha8Rng| loop {
            let x = field.int_element(small(rng), small(rng));
            if !x.is_zero() && !x.is_rational() {
                return x;
            }
        };
        let t_twist = Some(element(&mut rng));
        let theta = Some(element(&mut rng));
        let mut beta_scale = BTreeMap::new();
        for v in s_places(s) {
            let num = rng.gen_range(1i64..=9) * if rng.gen_bool(0.5) { -1 } else { 1 };
            let den = rng.gen_range(1i64..=9);
            beta_scale.insert(v, Rational::new(num.into(), den.into()));
        }
        let num: i64 = rng.gen_range(1..=15) * if rng.gen_bool(0.5) { -1 } else { 1 };
        let den: i64 = rng.gen_range(1..=15);
        DescentChoices {
            t_twist,
            theta,
            beta_scale,
            coboundary: Some(Rational::new(num.into(), den.into())),
        }
    }
}

/// `t`, `I` and `beta` for one triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentData {
    pub triple: TorsionTriple,
    pub t: FieldElement,
    pub ideal: Divisor,
    pub beta: BTreeMap<Place, FieldElement>,
}

fn rational_of_divisor(div: &BTreeMap<u64, i64>) -> Rational {
    let mut out = Rational::one();
    for (&p, &e) in div {
        let pe = Rational::from_integer(Integer::from(p).pow(e.unsigned_abs() as u32));
        out = if e >= 0 { out * pe } else { out / pe };
    }
    out
}

impl DescentData {
    /// Exact check of the three descent identities.
    pub fn verify(&self, field: QuadraticField) -> Result<()> {
        let alpha = &self.triple;
        let n = alpha.modulus();
        let half = (n / 2) as i64;
        if self.t.norm() != alpha.b().recip() {
            return Err(Error::DescentFailure(format!("N({}) != b^-1", self.t)));
        }
        let target = divisor_target(field, alpha, &self.t)?;
        if self.ideal.sub(&self.ideal.conj()) != target {
            return Err(Error::DescentFailure("ideal identity fails".into()));
        }
        for v in s_places(alpha.primes()) {
            let lhs = alpha
                .alpha(v)
                .pow(half)
                .to_rational()
                .ok_or_else(|| Error::DescentFailure(format!("alpha^(n/2) not rational at {v}")))?;
            let beta = &self.beta[&v];
            let rhs = self.t.mul(&beta.over_conjugate()?);
            if rhs != field.rational(lhs) {
                return Err(Error::DescentFailure(format!("local identity fails at {v}")));
            }
        }
        Ok(())
    }

    /// The idele `alpha^e N(beta)^{n/2}` with `e = 3 n^2 / 4`.
    pub fn image(&self) -> Result<Idele> {
        let alpha = &self.triple;
        let n = alpha.modulus() as i64;
        let e = exponent(n as u64, 2)? as i64;
        let mut out = Idele::one();
        for v in s_places(alpha.primes()) {
            let nb = num_traits::pow(self.beta[&v].norm(), (n / 2) as usize);
            let x = alpha.alpha(v).pow(e).mul_rational(&nb);
            out = out.mul(&Idele::at_place(x));
        }
        let mut outside: BTreeMap<u64, i64> = alpha.divisor().iter().map(|(&l, &k)| (l, e * k)).collect();
        for (l, k) in self.ideal.norm() {
            *outside.entry(l).or_insert(0) += (n / 2) * k;
        }
        Ok(out.mul(&Idele::from_valuations(outside)))
    }
}

/// `(n/2) B - div(t)` away from the primes of `S`.
fn divisor_target(field: QuadraticField, alpha: &TorsionTriple, t: &FieldElement) -> Result<Divisor> {
    let half = (alpha.modulus() / 2) as i64;
    let r = field.rational(rational_of_divisor(alpha.divisor()));
    let lhs = div(&r.pow(half)?.div(t)?);
    Ok(lhs.away_from(alpha.primes()))
}

fn quadratic_part(y: &TorsorClass, n: u64) -> Result<QuadraticField> {
    let field = y
        .field()
        .ok_or_else(|| Error::InvalidInput("descent needs a nontrivial torsor".into()))?;
    if n % 2 != 0 {
        return invalid(format!("degree 2 does not divide {n}"));
    }
    Ok(field)
}

/// Exact square root of a nonnegative rational square.
fn rational_sqrt(x: &Rational) -> Option<Rational> {
    use num_traits::Signed;
    if x.is_negative() {
        return None;
    }
    let (a, b) = (x.numer().sqrt(), x.denom().sqrt());
    let r = Rational::new(a, b);
    (&r * &r == *x).then_some(r)
}

/// `beta` with `beta / sigma(beta) = c` for `N(c) = 1`.
fn global_hilbert90(c: &FieldElement, theta: Option<&FieldElement>) -> Result<FieldElement> {
    let field = c.field();
    if !c.norm().is_one() {
        return Err(Error::NotInKernel(format!("N({c}) != 1")));
    }
    let mut seeds: Vec<FieldElement> = theta.into_iter().cloned().collect();
    seeds.extend([field.one(), field.sqrt_m(), field.int_element(1, 1), field.int_element(2, 1)]);
    for th in seeds {
        let beta = th.add(&c.mul(&th.conj()));
        if !beta.is_zero() {
            debug_assert_eq!(beta.over_conjugate()?, *c);
            return Ok(beta);
        }
    }
    Err(Error::DescentFailure(format!("no Hilbert 90 seed for {c}")))
}

/// The descent for a nontrivial quadratic torsor `y` and a triple.
pub fn solve_descent(y: &TorsorClass, alpha: &TorsionTriple, n: u64) -> Result<DescentData> {
    solve_descent_with(y, alpha, n, &DescentChoices::default())
}

pub fn solve_descent_with(
    y: &TorsorClass,
    alpha: &TorsionTriple,
    n: u64,
    choices: &DescentChoices,
) -> Result<DescentData> {
    let field = quadratic_part(y, n)?;
    if alpha.modulus() != n {
        return invalid("triple modulus does not match");
    }
    alpha.verify()?;
    let alpha = match &choices.coboundary {
        Some(c) if !c.is_zero() => alpha.coboundary(c)?,
        _ => alpha.clone(),
    };
    let target = alpha.b().recip();
    let mut t = match rational_sqrt(&target) {
        Some(r) => field.rational(r),
        None => solve_norm_equation(field, &target, &[])?,
    };
    if let Some(x) = &choices.t_twist {
        if !x.is_zero() {
            t = t.mul(&x.over_conjugate()?);
        }
    }
    let e = divisor_target(field, &alpha, &t)?;
    let ideal = divisor_hilbert90(&e)?;
    let half = (n / 2) as i64;
    let mut beta = BTreeMap::new();
    for v in s_places(alpha.primes()) {
        let a = alpha
            .alpha(v)
            .pow(half)
            .to_rational()
            .ok_or_else(|| Error::DescentFailure(format!("alpha^(n/2) not rational at {v}")))?;
        let c = field.rational(a).div(&t)?;
        let mut b = global_hilbert90(&c, choices.theta.as_ref())?;
        if let Some(r) = choices.beta_scale.get(&v) {
            if !r.is_zero() {
                b = b.scale(r);
            }
        }
        beta.insert(v, b);
    }
    let data = DescentData {
        triple: alpha,
        t,
        ideal,
        beta,
    };
    data.verify(field)?;
    Ok(data)
}

fn check_supported(y: &TorsorClass, s: &[u64]) -> Result<()> {
    if !torsor_supported_on(y, s) {
        return invalid(format!("{y} ramifies outside S"));
    }
    Ok(())
}

/// `<y cup z, alpha>` for one triple.
pub fn cup_value(
    y: &TorsorClass,
    z: &TorsorClass,
    alpha: &TorsionTriple,
    choices: &DescentChoices,
) -> Result<u64> {
    let n = alpha.modulus();
    if y.is_trivial() || z.is_trivial() {
        return Ok(0);
    }
    let data = solve_descent_with(y, alpha, n, choices)?;
    let image = data.image()?.class(n)?.normalize(alpha.primes())?;
    torsor_character(&induce_torsor(z, n)?, &image)
}

/// Values of `y cup z` on the generators of `C_S[n]`.
pub fn cup_h1_h1(y: &TorsorClass, z: &TorsorClass, s: &[u64], n: u64) -> Result<Vec<u64>> {
    let s = prime_set(s)?;
    check_supported(y, &s)?;
    check_supported(z, &s)?;
    let tor = cs_torsion_n(&s, n)?;
    tor.generators()
        .iter()
        .map(|alpha| cup_value(y, z, alpha, &DescentChoices::default()))
        .collect()
}

/// `y cup z` over the torsor basis, with values on `C_S[n]` generators.
#[derive(Debug, Clone)]
pub struct PairingTable {
    pub primes: Vec<u64>,
    pub n: u64,
    pub basis: Vec<TorsorClass>,
    pub torsion_generators: Vec<TorsionTriple>,
    /// `entries[i][j]` = values of `basis[i] cup basis[j]`
    pub entries: Vec<Vec<Vec<u64>>>,
}

impl PairingTable {
    pub fn entry(&self, y: &TorsorClass, z: &TorsorClass) -> Option<&[u64]> {
        let i = self.basis.iter().position(|b| b == y)?;
        let j = self.basis.iter().position(|b| b == z)?;
        Some(&self.entries[i][j])
    }
}

/// The full pairing table at `n = 2`.
pub fn pairing_table(s: &[u64], n: u64) -> Result<PairingTable> {
    if n != 2 {
        return Err(Error::Unsupported("pairing tables are built at n = 2".into()));
    }
    let s = prime_set(s)?;
    let basis = torsor_basis(&s)?;
    let tor = cs_torsion_n(&s, n)?;
    let mut entries = Vec::new();
    for y in &basis {
        let mut row = Vec::new();
        for z in &basis {
            row.push(cup_h1_h1(y, z, &s, n)?);
        }
        entries.push(row);
    }
    Ok(PairingTable {
        primes: s,
        n,
        basis,
        torsion_generators: tor.generators().to_vec(),
        entries,
    })
}

/// `y cup z` on `Spec Z`: always zero, since `H^1(Spec Z, Z/n) = 0`.
pub fn cup_unpunctured(y: &TorsorClass, z: &TorsorClass, n: u64) -> Result<u64> {
    for x in [y, z] {
        if !x.is_trivial() {
            return invalid(format!("{x} ramifies at a finite prime"));
        }
    }
    if n < 2 {
        return invalid("modulus must be at least 2");
    }
    Ok(0)
}

/// A class of `H^i(Spec Z \ S, Z/n)` in the form the products use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyClass {
    Degree1(TorsorClass),
    /// values on the generators of `C_S[n]`
    Degree2(Vec<u64>),
    /// a class in degree `>= 3`, given by its restriction to `inf`
    High { degree: usize, value: u64 },
}

impl CohomologyClass {
    pub fn degree(&self) -> usize {
        match self {
            CohomologyClass::Degree1(_) => 1,
            CohomologyClass::Degree2(_) => 2,
            CohomologyClass::High { degree, .. } => *degree,
        }
    }
}

/// Restriction to `H^i(R, Z/n)`, as an element of `Z/gcd(2, n)`.
pub fn restrict_to_real(x: &CohomologyClass, s: &[u64], n: u64) -> Result<u64> {
    if n % 2 == 1 {
        return Ok(0);
    }
    match x {
        CohomologyClass::Degree1(y) => Ok(torsor_sign(&induce_torsor(y, n)?) / (n / 2)),
        CohomologyClass::Degree2(values) => {
            let s = prime_set(s)?;
            let tor = cs_torsion_n(&s, n)?;
            if values.len() != tor.invariants().len() {
                return invalid("degree-2 class has the wrong number of values");
            }
            let sign = Idele::at_place(LocalElement::rational(Place::Real, -Rational::one())?);
            let coords = tor.dlog(&torsion_triple(&sign, &s, n)?)?;
            let total: u64 = coords.iter().zip(values).map(|(c, v)| c * v).sum::<u64>() % n;
            Ok(total / (n / 2))
        }
        CohomologyClass::High { degree, value } => {
            if *degree < 3 {
                return invalid("high class must have degree at least 3");
            }
            Ok(value % 2)
        }
    }
}

/// `x cup y` for `deg x + deg y >= 3` at `n = 2`, computed in
/// `H^*(Gal(C/R), Z/2) = F_2[w]`.
pub fn cup_high(x: &CohomologyClass, y: &CohomologyClass, s: &[u64], n: u64) -> Result<CohomologyClass> {
    if n != 2 {
        return Err(Error::Unsupported("high-degree products are implemented at n = 2".into()));
    }
    let degree = x.degree() + y.degree();
    if degree < 3 {
        return invalid("total degree must be at least 3");
    }
    let value = restrict_to_real(x, s, n)? * restrict_to_real(y, s, n)?;
    Ok(CohomologyClass::High { degree, value })
}

/// One pair `p < q` of primes `1 mod 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub p: u64,
    pub q: u64,
    pub legendre_pq: i32,
    pub legendre_qp: i32,
    pub cup_pq: Vec<u64>,
    pub cup_qp: Vec<u64>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct ReciprocityReport {
    pub bound: u64,
    pub pairs: Vec<PairCheck>,
}

impl ReciprocityReport {
    pub fn all_pass(&self) -> bool {
        self.pairs.iter().all(|p| p.pass)
    }

    pub fn failures(&self) -> Vec<&PairCheck> {
        self.pairs.iter().filter(|p| !p.pass).collect()
    }
}

/// Check one pair: symmetric off-diagonal entries that vanish exactly
/// when `(p/q) = 1`.
pub fn check_pair(p: u64, q: u64) -> Result<PairCheck> {
    let table = pairing_table(&[p, q], 2)?;
    let xp = TorsorClass::quadratic(p as i128)?;
    let xq = TorsorClass::quadratic(q as i128)?;
    let cup_pq = table.entry(&xp, &xq).expect("basis contains x_p").to_vec();
    let cup_qp = table.entry(&xq, &xp).expect("basis contains x_q").to_vec();
    let legendre_pq = jacobi_symbol(p as i128, q as i128)?;
    let legendre_qp = jacobi_symbol(q as i128, p as i128)?;
    let vanishes = cup_pq.iter().all(|&c| c == 0);
    let pass = cup_pq == cup_qp && legendre_pq == legendre_qp && vanishes == (legendre_pq == 1);
    Ok(PairCheck {
        p,
        q,
        legendre_pq,
        legendre_qp,
        cup_pq,
        cup_qp,
        pass,
    })
}

/// All pairs `p < q < bound` with `p = q = 1 mod 4`.
pub fn verify_reciprocity(bound: u64) -> Result<ReciprocityReport> {
    let primes: Vec<u64> = primes_below(bound).into_iter().filter(|p| p % 4 == 1).collect();
    let mut pairs = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            pairs.push(check_pair(p, q)?);
        }
    }
    Ok(ReciprocityReport { bound, pairs })
}

/// The exponent `e = (n/d) n (d+1)/2` applied to `alpha`.
pub fn exponent(n: u64, d: u64) -> Result<u64> {
    if d == 0 || n % d != 0 {
        return invalid(format!("{d} does not divide {n}"));
    }
    Ok((n / d) * n * (d + 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::legendre_symbol;

    fn quad(d: i128) -> TorsorClass {
        TorsorClass::quadratic(d).unwrap()
    }

    fn minus_one_at(s: &[u64], p: u64, n: u64) -> TorsionTriple {
        let a = Idele::at_place(LocalElement::rational(Place::Finite(p), -Rational::one()).unwrap());
        torsion_triple(&a, s, n).unwrap()
    }

    #[test]
    fn descent_examples() {
        let s = [5u64, 29];
        let one = TorsionTriple::identity(&s, 2).unwrap();
        let d = solve_descent(&quad(5), &one, 2).unwrap();
        assert!(d.t.is_one());
        assert!(d.ideal.is_zero());
        let alpha = minus_one_at(&[5, 13], 5, 2);
        let d = solve_descent(&quad(5), &alpha, 2).unwrap();
        assert!(d.t.is_one());
        let k = quad(5).field().unwrap();
        // sqrt 5 up to a rational at the place above 5
        let b5 = &d.beta[&Place::Finite(5)];
        assert!(b5.mul(&k.sqrt_m()).is_rational());
        let alpha = minus_one_at(&s, 29, 2);
        let d = solve_descent(&quad(5), &alpha, 2).unwrap();
        d.verify(k).unwrap();
    }

    #[test]
    fn cup_examples() {
        assert_eq!(cup_h1_h1(&TorsorClass::trivial(2), &quad(5), &[5], 2).unwrap(), vec![0]);
        assert!(cup_h1_h1(&quad(5), &quad(29), &[5, 29], 2).unwrap().iter().all(|&c| c == 0));
        assert!(cup_h1_h1(&quad(5), &quad(13), &[5, 13], 2).unwrap().iter().any(|&c| c != 0));
        assert!(cup_h1_h1(&quad(5), &quad(13), &[5], 2).is_err());
    }

    #[test]
    fn tables_match_legendre() {
        let t = pairing_table(&[5, 29], 2).unwrap();
        assert!(t.entries[0][1].iter().all(|&c| c == 0));
        let t = pairing_table(&[5, 13], 2).unwrap();
        assert_eq!(t.entries[0][1], t.entries[1][0]);
        assert!(t.entries[0][1].iter().any(|&c| c != 0));
        let r = verify_reciprocity(30).unwrap();
        let got: Vec<(u64, u64)> = r.pairs.iter().map(|c| (c.p, c.q)).collect();
        assert_eq!(got, vec![(5, 13), (5, 17), (5, 29), (13, 17), (13, 29), (17, 29)]);
        assert!(r.all_pass());
        assert!(verify_reciprocity(6).unwrap().pairs.is_empty());
    }

    #[test]
    fn choices_do_not_matter() {
        for (s, n) in [(vec![5u64, 13], 2u64), (vec![2, 3], 2), (vec![3, 7], 4), (vec![5, 17], 4), (vec![2, 13], 6)] {
            let tor = cs_torsion_n(&s, n).unwrap();
            let torsors: Vec<TorsorClass> = torsor_basis(&s).unwrap();
            for y in &torsors {
                for z in &torsors {
                    for alpha in tor.generators() {
                        let base = cup_value(y, z, alpha, &DescentChoices::default()).unwrap();
                        for seed in 0..5 {
                            let ch = DescentChoices::random(y.field().unwrap(), &s, seed);
                            let v = cup_value(y, z, alpha, &ch).unwrap();
                            assert_eq!(v, base, "{y} {z} {alpha} seed {seed}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bilinear_and_symmetric() {
        for s in [vec![3u64, 5], vec![2, 7], vec![13, 17], vec![2, 5]] {
            let n = 2;
            let basis = torsor_basis(&s).unwrap();
            for y in &basis {
                for y2 in &basis {
                    let yy = y.mul(y2).unwrap();
                    for z in &basis {
                        let lhs = cup_h1_h1(&yy, z, &s, n).unwrap();
                        let a = cup_h1_h1(y, z, &s, n).unwrap();
                        let b = cup_h1_h1(y2, z, &s, n).unwrap();
                        let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % 2).collect();
                        assert_eq!(lhs, sum, "S={s:?} {y}*{y2}, {z}");
                        assert_eq!(cup_h1_h1(z, y, &s, n).unwrap(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn real_restriction_is_multiplicative() {
        for s in [vec![2u64], vec![3], vec![7, 11], vec![2, 5], vec![5]] {
            for y in torsor_basis(&s).unwrap() {
                for z in torsor_basis(&s).unwrap() {
                    let prod = CohomologyClass::Degree2(cup_h1_h1(&y, &z, &s, 2).unwrap());
                    let lhs = restrict_to_real(&prod, &s, 2).unwrap();
                    let ry = restrict_to_real(&CohomologyClass::Degree1(y), &s, 2).unwrap();
                    let rz = restrict_to_real(&CohomologyClass::Degree1(z), &s, 2).unwrap();
                    assert_eq!(lhs, ry * rz, "S={s:?} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn high_products() {
        let w = CohomologyClass::Degree1(quad(-4));
        assert_eq!(restrict_to_real(&w, &[2], 2).unwrap(), 1);
        assert_eq!(restrict_to_real(&CohomologyClass::Degree1(quad(5)), &[5], 2).unwrap(), 0);
        assert_eq!(restrict_to_real(&CohomologyClass::Degree1(quad(-8)), &[2], 2).unwrap(), 1);
        let w2 = CohomologyClass::Degree2(cup_h1_h1(&quad(-4), &quad(-4), &[2], 2).unwrap());
        let w3 = cup_high(&w2, &w, &[2], 2).unwrap();
        assert_eq!(w3, CohomologyClass::High { degree: 3, value: 1 });
        let x5 = CohomologyClass::Degree1(quad(5));
        let z = cup_high(&w3, &x5, &[2, 5], 2).unwrap();
        assert_eq!(z, CohomologyClass::High { degree: 4, value: 0 });
        assert!(cup_high(&w, &w, &[2], 2).is_err());
    }

    #[test]
    fn unpunctured_products_vanish() {
        let t = TorsorClass::trivial(2);
        assert_eq!(cup_unpunctured(&t, &t, 2).unwrap(), 0);
        assert!(cup_unpunctured(&quad(5), &t, 2).is_err());
    }

    #[test]
    fn legendre_from_idele_of_p() {
        // <x_q, p at p> = 0 iff p splits in Q(sqrt q), the input of the table
        for (p, q) in [(5u64, 13u64), (5, 29), (13, 53)] {
            let split = legendre_symbol(q as i128, p as i128) == 1;
            let alpha = minus_one_at(&[p, q], p, 2);
            let v = cup_value(&quad(p as i128), &quad(q as i128), &alpha, &DescentChoices::default()).unwrap();
            assert_eq!(v == 0, split);
        }
        assert_eq!(exponent(2, 2).unwrap(), 3);
        assert_eq!(exponent(4, 2).unwrap(), 12);
    }
}
