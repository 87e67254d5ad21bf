use std::collections::HashMap;
use std::fmt;

use super::field::QuadraticField;
use super::ideal::{prime_ideal, split_type, FieldIdeal, FieldPrime, PrimeKind, SplitType};
use crate::abelian::{FiniteAbelianGroup, Presentation};
use crate::arith::{ext_gcd, gcd, isqrt, primes_below};
use crate::error::{Error, Result};
use crate::Integer;

use num_traits::ToPrimitive;

/// Largest absolute discriminant handled by the form machinery.
pub const MAX_DISC: i128 = 10_000_000;

/// Primitive binary quadratic form `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryForm {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

impl BinaryForm {
    pub fn new(a: i128, b: i128, c: i128) -> Self {
        BinaryForm { a, b, c }
    }

    /// Form with leading coefficient `a` and middle `b`; `c` from `disc`.
    pub fn from_ab(a: i128, b: i128, disc: i128) -> Self {
        debug_assert_eq!((b * b - disc) % (4 * a), 0);
        BinaryForm::new(a, b, (b * b - disc) / (4 * a))
    }

    pub fn disc(&self) -> i128 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn principal(disc: i128) -> Self {
        let d = disc.rem_euclid(2);
        BinaryForm::from_ab(1, d, disc)
    }

    pub fn inverse(&self) -> Self {
        BinaryForm::new(self.a, -self.b, self.c)
    }

    /// `(-a, b, -c)`; for indefinite forms its class is the product with
    /// the class of the form representing `-1`.
    pub fn negate(&self) -> Self {
        BinaryForm::new(-self.a, self.b, -self.c)
    }

    /// Dirichlet composition; the result is not reduced.
    pub fn compose(&self, other: &BinaryForm) -> BinaryForm {
        let disc = self.disc();
        debug_assert_eq!(disc, other.disc());
        let (a1, b1) = (self.a, self.b);
        let (a2, b2) = (other.a, other.b);
        let beta = (b1 + b2) / 2;
        let (g1, u1, v1) = ext_gcd(a1, a2);
        let (e, s, w) = ext_gcd(g1, beta);
        let (u, v) = (s * u1, s * v1);
        let a3 = a1 * a2 / (e * e);
        let num = u * a1 * b2 + v * a2 * b1 + w * (b1 * b2 + disc) / 2;
        let m = 2 * a3.abs();
        let b3 = (num / e).rem_euclid(m);
        BinaryForm::from_ab(a3, b3, disc)
    }

    pub(crate) fn normalize(&self) -> BinaryForm {
        let disc = self.disc();
        let aa = self.a.abs();
        let b = if disc < 0 || aa * aa > disc {
            // -|a| < b <= |a|
            let m = 2 * aa;
            let mut b = self.b.rem_euclid(m);
            if b > aa {
                b -= m;
            }
            b
        } else {
            // sqrt(D) - 2|a| < b < sqrt(D)
            let r = isqrt(disc as u128) as i128;
            let m = 2 * aa;
            r - (r - self.b).rem_euclid(m)
        };
        BinaryForm::from_ab(self.a, b, disc)
    }

    /// `(a, b, c) -> (c, b', c')` with `b' = -b mod 2c`, normalized.
    pub fn rho(&self) -> BinaryForm {
        let disc = self.disc();
        BinaryForm::from_ab(self.c, -self.b, disc).normalize()
    }

    pub fn is_reduced(&self) -> bool {
        let disc = self.disc();
        if disc < 0 {
            let b_ok = -self.a < self.b && self.b <= self.a;
            b_ok && (self.a < self.c || (self.a == self.c && self.b >= 0))
        } else {
            let r = isqrt(disc as u128) as i128;
            let aa = self.a.abs();
            0 < self.b && self.b <= r && self.b + 2 * aa > r && 2 * aa - self.b <= r
        }
    }

    /// A reduced form in the same proper class.
    pub fn reduce(&self) -> BinaryForm {
        let disc = self.disc();
        let mut f = self.normalize();
        if disc < 0 {
            assert!(f.a > 0, "negative definite form");
            loop {
                if f.a > f.c || (f.a == f.c && f.b < 0) {
                    f = BinaryForm::new(f.c, -f.b, f.a).normalize();
                } else {
                    return f;
                }
            }
        }
        while !f.is_reduced() {
            f = f.rho();
        }
        f
    }

    /// The reduced cycle of an indefinite form.
    pub fn cycle(&self) -> Vec<BinaryForm> {
        let start = self.reduce();
        let mut out = vec![start];
        let mut f = start.rho();
        while f != start {
            out.push(f);
            f = f.rho();
        }
        out
    }

    /// Canonical representative of the proper class: the reduced form
    /// (definite), or the least reduced form with `a > 0` in the cycle.
    pub fn canonical(&self) -> BinaryForm {
        if self.disc() < 0 {
            return self.reduce();
        }
        self.cycle()
            .into_iter()
            .filter(|f| f.a > 0)
            .min_by_key(|f| (f.a, f.b))
            .expect("cycle contains a positive form")
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Form of an ideal (narrow class correspondence).
pub fn ideal_form(ideal: &FieldIdeal) -> Result<BinaryForm> {
    let (a, b, c) = ideal.form_coefficients();
    let conv = |x: &Integer| {
        x.to_i128()
            .ok_or_else(|| Error::Unsupported("ideal too large for form arithmetic".into()))
    };
    Ok(BinaryForm::new(conv(&a)?, conv(&b)?, conv(&c)?))
}

/// Class group or narrow class group with ideal carriers and a
/// discrete-log routine.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    field: QuadraticField,
    narrow: bool,
    group: FiniteAbelianGroup<FieldIdeal>,
    forms: Vec<BinaryForm>,
    table: HashMap<BinaryForm, Vec<i128>>,
}

impl ClassGroup {
    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn is_narrow(&self) -> bool {
        self.narrow
    }

    pub fn group(&self) -> &FiniteAbelianGroup<FieldIdeal> {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn invariants(&self) -> &[u64] {
        self.group.invariants()
    }

    /// Canonical forms of the invariant generators.
    pub fn generator_forms(&self) -> &[BinaryForm] {
        &self.forms
    }

    pub fn dlog_form(&self, f: &BinaryForm) -> Result<Vec<u64>> {
        let coords = self
            .table
            .get(&f.canonical())
            .ok_or_else(|| Error::InvalidInput(format!("form {f} is not in the class table")))?;
        Ok(self.group.dlog_ambient(coords))
    }

    pub fn dlog_ideal(&self, ideal: &FieldIdeal) -> Result<Vec<u64>> {
        self.dlog_form(&ideal_form(ideal)?)
    }
}

fn form_power(f: &BinaryForm, k: i128) -> BinaryForm {
    let disc = f.disc();
    let base = if k < 0 { f.inverse() } else { *f };
    let mut acc = BinaryForm::principal(disc);
    for _ in 0..k.unsigned_abs() {
        acc = acc.compose(&base).canonical();
    }
    acc
}

struct Table {
    raw: Vec<BinaryForm>,
    table: HashMap<BinaryForm, Vec<i128>>,
    relations: Vec<Vec<i128>>,
}

/// Enumerate the proper form classes reachable from `gens`.
fn build_table(disc: i128, gens: &[BinaryForm]) -> Table {
    let id = BinaryForm::principal(disc).canonical();
    let mut elems: Vec<(BinaryForm, Vec<i128>)> = vec![(id, Vec::new())];
    let mut table: HashMap<BinaryForm, Vec<i128>> = HashMap::from([(id, Vec::new())]);
    let mut raw = Vec::new();
    let mut relations: Vec<Vec<i128>> = Vec::new();
    for g in gens {
        let g = g.canonical();
        if table.contains_key(&g) {
            continue;
        }
        let k = raw.len();
        raw.push(g);
        for v in table.values_mut() {
            v.push(0);
        }
        for (_, v) in elems.iter_mut() {
            v.push(0);
        }
        for r in relations.iter_mut() {
            r.push(0);
        }
        // order of g modulo the current subgroup
        let mut power = g;
        let mut e = 1i128;
        while !table.contains_key(&power) {
            power = power.compose(&g).canonical();
            e += 1;
        }
        let mut rel: Vec<i128> = table[&power].iter().map(|x| -x).collect();
        rel[k] += e;
        relations.push(rel);
        let base = elems.clone();
        let mut shift = id;
        for i in 1..e {
            shift = shift.compose(&g).canonical();
            for (h, coords) in &base {
                let f = shift.compose(h).canonical();
                let mut c = coords.clone();
                c[k] = i;
                table.insert(f, c.clone());
                elems.push((f, c));
            }
        }
    }
    Table {
        raw,
        table,
        relations,
    }
}

fn minkowski_bound(field: &QuadraticField) -> u64 {
    let d = field.disc().unsigned_abs() as f64;
    let bound = if field.is_real() {
        d.sqrt() / 2.0
    } else {
        2.0 * d.sqrt() / std::f64::consts::PI
    };
    bound.floor() as u64 + 1
}

fn prime_forms(field: &QuadraticField) -> Result<Vec<BinaryForm>> {
    let mut out = Vec::new();
    for p in primes_below(minkowski_bound(field) + 1) {
        let kind = match split_type(*field, p) {
            SplitType::Inert => continue,
            SplitType::Split => PrimeKind::First,
            SplitType::Ramified => PrimeKind::Ramified,
        };
        out.push(ideal_form(&prime_ideal(*field, &FieldPrime { p, kind }))?);
    }
    Ok(out)
}

fn assemble(field: QuadraticField, narrow: bool, t: &Table, extra: &[Vec<i128>]) -> ClassGroup {
    let dim = t.raw.len();
    let mut rels = t.relations.clone();
    rels.extend(extra.iter().cloned());
    let pres = Presentation::new(dim, &rels);
    let disc = field.disc();
    let forms: Vec<BinaryForm> = (0..pres.invariants().len())
        .map(|k| {
            let v = pres.generator(k);
            v.iter()
                .zip(&t.raw)
                .fold(BinaryForm::principal(disc), |acc, (&e, f)| {
                    acc.compose(&form_power(f, e.rem_euclid(t.table.len() as i128))).canonical()
                })
        })
        .collect();
    let carriers = forms
        .iter()
        .map(|f| FieldIdeal::from_form(field, &f.a.into(), &f.b.into()).expect("positive canonical form"))
        .collect();
    ClassGroup {
        field,
        narrow,
        group: FiniteAbelianGroup::from_presentation(pres, carriers),
        forms,
        table: t.table.clone(),
    }
}

fn check_size(field: &QuadraticField) -> Result<()> {
    if field.disc().abs() >= MAX_DISC {
        return Err(Error::Unsupported(format!(
            "discriminant {} exceeds the supported range",
            field.disc()
        )));
    }
    Ok(())
}

fn narrow_table(field: &QuadraticField) -> Result<Table> {
    check_size(field)?;
    let disc = field.disc();
    let mut gens = Vec::new();
    if field.is_real() {
        gens.push(BinaryForm::principal(disc).negate());
    }
    gens.extend(prime_forms(field)?);
    Ok(build_table(disc, &gens))
}

/// The narrow class group, as proper classes of forms.
pub fn narrow_class_group(field: QuadraticField) -> Result<ClassGroup> {
    let t = narrow_table(&field)?;
    Ok(assemble(field, true, &t, &[]))
}

/// The class group: the narrow group modulo the class of principal
/// ideals with a generator of negative norm.
pub fn class_group(field: QuadraticField) -> Result<ClassGroup> {
    let t = narrow_table(&field)?;
    let mut extra = Vec::new();
    if field.is_real() {
        let minus = BinaryForm::principal(field.disc()).negate().canonical();
        extra.push(t.table[&minus].clone());
    }
    Ok(assemble(field, false, &t, &extra))
}

/// Number of reduced forms of a negative discriminant, counted directly.
pub fn count_reduced_definite(disc: i128) -> u64 {
    assert!(disc < 0);
    let mut count = 0;
    let mut a = 1;
    while 3 * a * a <= -disc {
        for b in -a + 1..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if gcd(gcd(a, b), c) == 1 {
                count += 1;
            }
        }
        a += 1;
    }
    count
}
