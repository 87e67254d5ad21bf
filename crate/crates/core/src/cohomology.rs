//! The groups `H^i(U, Z/n)` for `U = Spec O_K \ S`, quadratic torsors and
//! their characters on idele classes.
//!
//! Groups are reported through their Pontryagin duals: the dual of a
//! finite group has the same invariants, and the `k`-th dual generator is
//! the character taking the value `1/d_k` on the `k`-th generator of the
//! underlying group and `0` on the others.

use std::fmt;

use crate::abelian::{gcd_u64, normalize_invariants, quotient_invariants, FiniteAbelianGroup, Presentation};
use crate::error::{invalid, Error, Result};
use crate::idele::{cs_mod_n, cs_torsion_n, prime_set, Idele, IdeleClassGroup, IdeleRep, TorsionGroup};
use crate::local::hilbert_symbol;
use crate::quadratic::{
    build_field, class_group, div, fundamental_unit, fundamental_unit_norm, narrow_class_group,
    principal_generator, totally_positive_generator, ClassGroup, Divisor, FieldElement, FieldIdeal,
    QuadraticField,
};
use crate::Rational;

/// `Q` or a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseField {
    Rationals,
    Quadratic(QuadraticField),
}

impl BaseField {
    /// Parse `Q` or a squarefree integer `m` for `Q(sqrt m)`.
    pub fn parse(s: &str) -> Result<BaseField> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t == "1" {
            return Ok(BaseField::Rationals);
        }
        let m: i128 = t
            .parse()
            .map_err(|_| Error::InvalidInput(format!("cannot parse field '{s}'")))?;
        Ok(BaseField::Quadratic(build_field(m)?))
    }

    /// Number of real places.
    pub fn real_places(&self) -> usize {
        match self {
            BaseField::Rationals => 1,
            BaseField::Quadratic(k) if k.is_real() => 2,
            BaseField::Quadratic(_) => 0,
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Quadratic(k) => write!(f, "{k}"),
        }
    }
}

/// The group a dual generator is a character of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// `H^0 = Z/n`, generated by the constant `1`.
    Constants,
    IdeleClassesModN,
    IdeleClassTorsion,
    NarrowClassesModN,
    Z1B1,
    /// `mu_n(K_+) + (R^x/n)^r`.
    RootsAndSigns,
    /// `(R^x/n)^r`.
    Signs,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Source::Constants => "Z/n",
            Source::IdeleClassesModN => "(C_S/n)~",
            Source::IdeleClassTorsion => "(C_S[n])~",
            Source::NarrowClassesModN => "(Cl+/n)~",
            Source::Z1B1 => "(Z1/B1)~",
            Source::RootsAndSigns => "(mu_n(K+) + (R^x/n)^r)~",
            Source::Signs => "((R^x/n)^r)~",
        };
        f.write_str(s)
    }
}

/// Dual generator number `index` of a [`Source`] group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DualGenerator {
    pub source: Source,
    pub index: usize,
}

fn dual_group(source: Source, invariants: Vec<u64>) -> FiniteAbelianGroup<DualGenerator> {
    let gens = (0..invariants.len())
        .map(|index| DualGenerator { source, index })
        .collect();
    FiniteAbelianGroup::from_invariants(invariants, gens)
}

/// `H^0, ..., H^4` and the stable tail `H^i = H^4` for `i >= 4`.
#[derive(Debug, Clone)]
pub struct CohomologyProfile {
    pub base: BaseField,
    pub primes: Vec<u64>,
    pub n: u64,
    groups: Vec<FiniteAbelianGroup<DualGenerator>>,
    cs_mod_n: Option<IdeleClassGroup>,
    cs_torsion: Option<TorsionGroup>,
    narrow: Option<ClassGroup>,
    z1b1: Option<Z1B1Group>,
}

impl CohomologyProfile {
    pub fn group(&self, i: usize) -> &FiniteAbelianGroup<DualGenerator> {
        &self.groups[i.min(self.groups.len() - 1)]
    }

    /// `H^0 .. H^4`.
    pub fn groups(&self) -> &[FiniteAbelianGroup<DualGenerator>] {
        &self.groups
    }

    pub fn stable_tail(&self) -> &FiniteAbelianGroup<DualGenerator> {
        self.groups.last().expect("profile has groups")
    }

    pub fn is_punctured(&self) -> bool {
        !self.primes.is_empty()
    }

    pub fn idele_classes(&self) -> Option<&IdeleClassGroup> {
        self.cs_mod_n.as_ref()
    }

    pub fn idele_torsion(&self) -> Option<&TorsionGroup> {
        self.cs_torsion.as_ref()
    }

    pub fn narrow_class_group(&self) -> Option<&ClassGroup> {
        self.narrow.as_ref()
    }

    pub fn z1_mod_b1(&self) -> Option<&Z1B1Group> {
        self.z1b1.as_ref()
    }
}

fn check_modulus(n: u64) -> Result<()> {
    if n < 2 {
        return invalid(format!("coefficient modulus must be at least 2, got {n}"));
    }
    Ok(())
}

fn signs(n: u64, r: usize) -> Vec<u64> {
    normalize_invariants(vec![gcd_u64(n, 2); r])
}

/// `H^i(Spec Z \ S, Z/n)` for nonempty `S`.
pub fn cohomology_punctured(s: &[u64], n: u64) -> Result<CohomologyProfile> {
    check_modulus(n)?;
    let s = prime_set(s)?;
    if s.is_empty() {
        return invalid("punctured case needs a nonempty set of primes");
    }
    let cs = cs_mod_n(&s, n)?;
    let tor = cs_torsion_n(&s, n)?;
    let groups = vec![
        dual_group(Source::Constants, vec![n]),
        dual_group(Source::IdeleClassesModN, cs.invariants().to_vec()),
        dual_group(Source::IdeleClassTorsion, tor.invariants().to_vec()),
        dual_group(Source::Signs, signs(n, 1)),
        dual_group(Source::Signs, signs(n, 1)),
    ];
    Ok(CohomologyProfile {
        base: BaseField::Rationals,
        primes: s,
        n,
        groups,
        cs_mod_n: Some(cs),
        cs_torsion: Some(tor),
        narrow: None,
        z1b1: None,
    })
}

/// `H^i(Spec O_K, Z/n)` for `K = Q` or a quadratic field.
pub fn cohomology_unpunctured(base: BaseField, n: u64) -> Result<CohomologyProfile> {
    check_modulus(n)?;
    let r = base.real_places();
    let (narrow, h1, roots) = match base {
        BaseField::Rationals => (None, Vec::new(), 1),
        BaseField::Quadratic(k) => {
            let cl = narrow_class_group(k)?;
            let inv = quotient_invariants(cl.invariants(), n);
            let roots = if k.is_real() { 1 } else { gcd_u64(n, k.roots_of_unity()) };
            (Some(cl), inv, roots)
        }
    };
    let z1b1 = z1_mod_b1(base, n)?;
    let mut h3 = vec![roots];
    h3.extend(vec![gcd_u64(n, 2); r]);
    let groups = vec![
        dual_group(Source::Constants, vec![n]),
        dual_group(Source::NarrowClassesModN, h1),
        dual_group(Source::Z1B1, z1b1.invariants().to_vec()),
        dual_group(Source::RootsAndSigns, normalize_invariants(h3)),
        dual_group(Source::Signs, signs(n, r)),
    ];
    Ok(CohomologyProfile {
        base,
        primes: Vec::new(),
        n,
        groups,
        cs_mod_n: None,
        cs_torsion: None,
        narrow,
        z1b1: Some(z1b1),
    })
}

/// A pair `(a, I)` with `a` totally positive and `div(a) + n I = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z1B1Element {
    pub a: FieldElement,
    pub divisor: Divisor,
}

impl Z1B1Element {
    pub fn verify(&self, n: u64) -> Result<()> {
        if !self.a.is_totally_positive() {
            return Err(Error::InvalidInput(format!("{} is not totally positive", self.a)));
        }
        if !div(&self.a).add(&self.divisor.scale(n as i64)).is_zero() {
            return Err(Error::InvalidInput(format!("div({}) + nI is not zero", self.a)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Z1B1Element) -> Z1B1Element {
        Z1B1Element {
            a: self.a.mul(&other.a),
            divisor: self.divisor.add(&other.divisor),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Z1B1Element> {
        Ok(Z1B1Element {
            a: self.a.pow(k)?,
            divisor: self.divisor.scale(k),
        })
    }

    /// The coboundary `(b^{-n}, div b)`.
    pub fn coboundary(b: &FieldElement, n: u64) -> Result<Z1B1Element> {
        Ok(Z1B1Element {
            a: b.pow(-(n as i64))?,
            divisor: div(b),
        })
    }
}

impl fmt::Display for Z1B1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.divisor)
    }
}

/// `Z^1/B^1`: an extension of the image of `Cl^+[n]` in `Cl` by the
/// totally positive units modulo `n`-th powers.
#[derive(Debug, Clone)]
pub struct Z1B1Group {
    n: u64,
    data: Option<Z1B1Data>,
    group: FiniteAbelianGroup<Z1B1Element>,
}

#[derive(Debug, Clone)]
struct Z1B1Data {
    field: QuadraticField,
    wide: ClassGroup,
    /// generator of the unit part and its order
    unit: FieldElement,
    unit_order: u64,
    /// `(I_j, c_j)` with `I_j^n = (c_j)`, `c_j` totally positive
    lifts: Vec<(FieldIdeal, FieldElement)>,
    lift_orders: Vec<u64>,
    lift_images: Vec<Vec<u64>>,
    presentation: Presentation,
}

impl Z1B1Group {
    pub fn invariants(&self) -> &[u64] {
        self.group.invariants()
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn generators(&self) -> &[Z1B1Element] {
        self.group.generators()
    }

    pub fn group(&self) -> &FiniteAbelianGroup<Z1B1Element> {
        &self.group
    }

    pub fn dlog(&self, x: &Z1B1Element) -> Result<Vec<u64>> {
        x.verify(self.n)?;
        match &self.data {
            None => Ok(Vec::new()),
            Some(d) => Ok(d.presentation.dlog(&d.ambient(x, self.n)?)),
        }
    }
}

impl Z1B1Data {
    fn lift_element(&self, j: usize) -> Result<Z1B1Element> {
        let (ideal, c) = &self.lifts[j];
        Ok(Z1B1Element {
            a: c.inv()?,
            divisor: ideal.divisor(),
        })
    }

    /// Exponent `k` with `u = unit^k` modulo `n`-th powers.
    fn unit_dlog(&self, u: &FieldElement) -> Result<u64> {
        if self.unit_order == 1 {
            return Ok(0);
        }
        if self.field.is_real() {
            let base = self.unit.approx(true).abs().ln();
            let k = (u.approx(true).abs().ln() / base).round() as i64;
            if self.unit.pow(k)? != *u {
                return Err(Error::DescentFailure(format!("{u} is not a power of {}", self.unit)));
            }
            return Ok(k.rem_euclid(self.unit_order as i64) as u64);
        }
        let w = self.field.roots_of_unity();
        let mut x = self.field.one();
        for k in 0..w {
            if x == *u {
                return Ok(k % self.unit_order);
            }
            x = x.mul(&self.unit);
        }
        Err(Error::DescentFailure(format!("{u} is not a root of unity")))
    }

    /// Box search for `x` with `sum x_j [I_j] = target` in `Cl`.
    fn solve_image(&self, target: &[u64]) -> Option<Vec<u64>> {
        let mut x = vec![0u64; self.lifts.len()];
        loop {
            let mut acc = vec![0u64; target.len()];
            for (xj, img) in x.iter().zip(&self.lift_images) {
                acc = self.wide.group().add(&acc, &self.wide.group().scale(img, *xj as i128));
            }
            if acc == target {
                return Some(x);
            }
            let mut i = 0;
            loop {
                if i == x.len() {
                    return None;
                }
                x[i] += 1;
                if x[i] < self.lift_orders[i] {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
        }
    }

    /// Kernel coordinate of an element whose ideal is principal.
    fn kernel_part(&self, e: &Z1B1Element, n: u64) -> Result<u64> {
        let ideal = e.divisor.ideal();
        let b = if n % 2 == 1 {
            totally_positive_generator(&ideal)?
        } else {
            principal_generator(&ideal)?
        }
        .ok_or_else(|| Error::DescentFailure(format!("{ideal} is not principal")))?;
        let u = e.a.mul(&b.pow(n as i64)?);
        self.unit_dlog(&u)
    }

    fn ambient(&self, x: &Z1B1Element, n: u64) -> Result<Vec<i128>> {
        let target = self.wide.dlog_ideal(&x.divisor.ideal())?;
        let coeffs = self
            .solve_image(&target)
            .ok_or_else(|| Error::InvalidInput(format!("{x} does not lie in Z^1")))?;
        let mut rest = x.clone();
        for (j, &c) in coeffs.iter().enumerate() {
            rest = rest.mul(&self.lift_element(j)?.pow(-(c as i64))?);
        }
        let k = self.kernel_part(&rest, n)?;
        let mut out = vec![k as i128];
        out.extend(coeffs.iter().map(|&c| c as i128));
        Ok(out)
    }
}

/// `Z^1/B^1` of `Q` or a quadratic field.
pub fn z1_mod_b1(base: BaseField, n: u64) -> Result<Z1B1Group> {
    check_modulus(n)?;
    let field = match base {
        BaseField::Rationals => {
            return Ok(Z1B1Group {
                n,
                data: None,
                group: FiniteAbelianGroup::trivial(),
            })
        }
        BaseField::Quadratic(k) => k,
    };
    let narrow = narrow_class_group(field)?;
    let wide = class_group(field)?;
    let (unit, unit_order) = if field.is_real() {
        let eps = fundamental_unit(field)?;
        if fundamental_unit_norm(field)? == 1 {
            (eps, n)
        } else {
            let order = if n % 2 == 0 { n / 2 } else { n };
            (eps.pow(2)?, order)
        }
    } else {
        let zeta = match field.roots_of_unity() {
            4 => field.sqrt_m(),
            6 => field.omega(),
            _ => field.int(-1),
        };
        (zeta, gcd_u64(n, field.roots_of_unity()))
    };
    let mut lifts = Vec::new();
    let mut lift_orders = Vec::new();
    for (g, &d) in narrow.group().generators().iter().zip(narrow.invariants()) {
        let order = gcd_u64(d, n);
        if order == 1 {
            continue;
        }
        let ideal = g.pow((d / order) as i64);
        let c = totally_positive_generator(&ideal.pow(n as i64))?
            .ok_or_else(|| Error::DescentFailure(format!("{ideal}^{n} is not narrowly principal")))?;
        lifts.push((ideal, c));
        lift_orders.push(order);
    }
    let lift_images = lifts
        .iter()
        .map(|(i, _)| wide.dlog_ideal(i))
        .collect::<Result<Vec<_>>>()?;
    let mut data = Z1B1Data {
        field,
        wide,
        unit,
        unit_order,
        lifts,
        lift_orders,
        lift_images,
        presentation: Presentation::new(1, &[vec![1]]),
    };
    // relations: the unit order, then every combination of lifts that is
    // trivial in Cl, rewritten in the unit coordinate
    let dim = 1 + data.lifts.len();
    let mut moduli = vec![unit_order as i128];
    moduli.extend(vec![0i128; data.lifts.len()]);
    let mut relations: Vec<Vec<i128>> = Vec::new();
    let mut x = vec![0u64; data.lifts.len()];
    let zero_image = vec![0u64; data.wide.invariants().len()];
    let mut candidates: Vec<Vec<u64>> = Vec::new();
    for j in 0..x.len() {
        let mut v = vec![0u64; x.len()];
        v[j] = data.lift_orders[j];
        candidates.push(v);
    }
    'outer: loop {
        let mut i = 0;
        loop {
            if i == x.len() {
                break 'outer;
            }
            x[i] += 1;
            if x[i] < data.lift_orders[i] {
                break;
            }
            x[i] = 0;
            i += 1;
        }
        let mut acc = zero_image.clone();
        for (xj, img) in x.iter().zip(&data.lift_images) {
            acc = data.wide.group().add(&acc, &data.wide.group().scale(img, *xj as i128));
        }
        if acc == zero_image {
            candidates.push(x.clone());
        }
    }
    for cand in candidates {
        let mut e = Z1B1Element {
            a: field.one(),
            divisor: Divisor::zero(field),
        };
        for (j, &c) in cand.iter().enumerate() {
            e = e.mul(&data.lift_element(j)?.pow(c as i64)?);
        }
        let k = data.kernel_part(&e, n)?;
        let mut row = vec![-(k as i128)];
        row.extend(cand.iter().map(|&c| c as i128));
        relations.push(row);
    }
    let presentation = Presentation::with_moduli(&moduli, &relations);
    debug_assert_eq!(presentation.ambient_dim(), dim);
    data.presentation = presentation.clone();
    let mut gens = Vec::new();
    for k in 0..presentation.invariants().len() {
        let v = presentation.generator(k);
        let mut e = Z1B1Element {
            a: data.unit.pow(v[0].rem_euclid(unit_order.max(1) as i128) as i64)?,
            divisor: Divisor::zero(field),
        };
        for (j, &c) in v[1..].iter().enumerate() {
            let c = c.rem_euclid(n as i128 * data.lift_orders[j] as i128) as i64;
            e = e.mul(&data.lift_element(j)?.pow(c)?);
        }
        e.verify(n)?;
        gens.push(e);
    }
    Ok(Z1B1Group {
        n,
        group: FiniteAbelianGroup::from_presentation(presentation, gens),
        data: Some(data),
    })
}

/// A cyclic torsor of degree `1` or `2` over `Q`: the trivial torsor or
/// `Q(sqrt D)` for a fundamental discriminant `D`, viewed in
/// `H^1(U, Z/n)` through `Z/2 -> Z/n`, `1 -> n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsorClass {
    disc: i128,
    n: u64,
}

impl TorsorClass {
    pub fn trivial(n: u64) -> Self {
        TorsorClass { disc: 1, n }
    }

    /// The torsor of `Q(sqrt D)` at modulus 2.
    pub fn quadratic(disc: i128) -> Result<Self> {
        if disc == 1 {
            return Ok(Self::trivial(2));
        }
        let field = build_field(crate::arith::squarefree_part(disc)?)?;
        if field.disc() != disc {
            return invalid(format!("{disc} is not a fundamental discriminant"));
        }
        Ok(TorsorClass { disc, n: 2 })
    }

    pub fn disc(&self) -> i128 {
        self.disc
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> u64 {
        if self.disc == 1 {
            1
        } else {
            2
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.disc == 1
    }

    pub fn field(&self) -> Option<QuadraticField> {
        if self.is_trivial() {
            None
        } else {
            Some(build_field(crate::arith::squarefree_part(self.disc).ok()?).ok()?)
        }
    }

    /// Squarefree `m` with `L = Q(sqrt m)`.
    pub fn radicand(&self) -> i128 {
        crate::arith::squarefree_part(self.disc).unwrap_or(1)
    }

    /// Odd primes and `2` dividing the discriminant.
    pub fn ramified_primes(&self) -> Vec<u64> {
        if self.is_trivial() {
            return Vec::new();
        }
        crate::arith::factor_integer(self.disc.abs())
            .map(|f| f.factors.iter().map(|&(p, _)| p as u64).collect())
            .unwrap_or_default()
    }

    /// Product of torsors: `Q(sqrt D1 D2)` up to squares.
    pub fn mul(&self, other: &TorsorClass) -> Result<TorsorClass> {
        if self.n != other.n {
            return invalid("torsors at different moduli");
        }
        let m = crate::arith::squarefree_part(self.radicand() * other.radicand())?;
        let t = if m == 1 {
            TorsorClass::trivial(2)
        } else {
            TorsorClass::quadratic(build_field(m)?.disc())?
        };
        induce_torsor(&t, self.n)
    }
}

impl fmt::Display for TorsorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            write!(f, "trivial")
        } else {
            write!(f, "Q(sqrt({}))", self.radicand())
        }
    }
}

/// The same torsor at modulus `n`, `d | n`.
pub fn induce_torsor(z: &TorsorClass, n: u64) -> Result<TorsorClass> {
    if n == 0 || n % z.degree() != 0 {
        return invalid(format!("degree {} does not divide {n}", z.degree()));
    }
    Ok(TorsorClass { disc: z.disc, n })
}

/// Prime discriminants `p*` for odd `p`, and `-4, 8, -8` for `2`.
fn prime_discriminants(p: u64) -> Vec<i128> {
    if p == 2 {
        vec![-4, 8, -8]
    } else if p % 4 == 1 {
        vec![p as i128]
    } else {
        vec![-(p as i128)]
    }
}

/// Quadratic torsors of `Spec Z \ S`: the trivial torsor and every
/// `Q(sqrt D)` with `D` a fundamental discriminant supported on `S`.
pub fn enumerate_torsors(s: &[u64], n: u64) -> Result<Vec<TorsorClass>> {
    if n != 2 {
        return Err(Error::Unsupported("torsor enumeration is implemented for n = 2".into()));
    }
    let s = prime_set(s)?;
    let mut discs = vec![1i128];
    for &p in &s {
        let mut next = discs.clone();
        for &d in &discs {
            for q in prime_discriminants(p) {
                next.push(d * q);
            }
        }
        discs = next;
    }
    discs.sort_by_key(|d| (d.abs(), *d));
    discs.into_iter().map(TorsorClass::quadratic).collect()
}

/// A basis of the quadratic torsors over `S`: `p*` for odd `p`, and
/// `Q(i)`, `Q(sqrt 2)` when `2 in S`.
pub fn torsor_basis(s: &[u64]) -> Result<Vec<TorsorClass>> {
    let s = prime_set(s)?;
    let mut out = Vec::new();
    for &p in &s {
        let discs = prime_discriminants(p);
        let take = if p == 2 { 2 } else { 1 };
        for &d in &discs[..take] {
            out.push(TorsorClass::quadratic(d)?);
        }
    }
    Ok(out)
}

/// `<y, alpha> = sum_v [(alpha_v, D)_v = -1]`, scaled into `Z/n`.
pub fn torsor_character(y: &TorsorClass, alpha: &IdeleRep) -> Result<u64> {
    if alpha.modulus() != y.n {
        return invalid(format!(
            "idele at modulus {} paired with torsor at modulus {}",
            alpha.modulus(),
            y.n
        ));
    }
    if y.is_trivial() {
        return Ok(0);
    }
    if y.n % 2 != 0 {
        return invalid("quadratic torsor at odd modulus");
    }
    let m = Rational::from_integer(y.radicand().into());
    let mut bit = 0u64;
    for v in alpha.support() {
        let x = alpha.component(v).square_class_representative()?;
        if hilbert_symbol(&x, &m, v)? == -1 {
            bit ^= 1;
        }
    }
    Ok(bit * (y.n / 2))
}

/// [`torsor_character`] on an exact idele.
pub fn torsor_character_exact(y: &TorsorClass, alpha: &Idele) -> Result<u64> {
    torsor_character(y, &alpha.class(y.n)?)
}

/// Value of `y` on the class of `-1` at the real place.
pub fn torsor_sign(y: &TorsorClass) -> u64 {
    if !y.is_trivial() && y.disc < 0 {
        y.n / 2
    } else {
        0
    }
}

/// Whether the torsor is unramified outside `S`.
pub fn torsor_supported_on(y: &TorsorClass, s: &[u64]) -> bool {
    y.ramified_primes().iter().all(|p| s.contains(p))
}

/// Values of `y` on the generators of `C_S/n`.
pub fn character_vector(y: &TorsorClass, g: &IdeleClassGroup) -> Result<Vec<u64>> {
    g.generators().iter().map(|x| torsor_character(y, x)).collect()
}
