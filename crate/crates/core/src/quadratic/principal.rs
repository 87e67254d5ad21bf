use num_traits::Signed;

use super::field::FieldElement;
use super::forms::{ideal_form, BinaryForm};
use super::ideal::FieldIdeal;
use super::unit::fundamental_unit;
use crate::error::{Error, Result};
use crate::Rational;

const MAX_STEPS: usize = 1_000_000;

/// `(-B + sqrt disc) / 2`.
fn beta(field: super::QuadraticField, b: i128) -> FieldElement {
    let c = if field.delta() == 0 { 2 } else { 1 };
    field.from_sqrt_coords(Rational::new((-b).into(), 2.into()), Rational::new(c.into(), 2.into()))
}

/// `(a Z + beta(B) Z) = gamma * (|c| Z + beta(-B) Z)`; returns the new
/// lattice and `gamma`.
fn flip(field: super::QuadraticField, f: &BinaryForm) -> (BinaryForm, FieldElement) {
    let gamma = beta(field, f.b).scale(&Rational::new(1.into(), f.c.abs().into()));
    let g = BinaryForm::from_ab(f.c.abs(), -f.b, f.disc()).normalize();
    (g, gamma)
}

/// A generator of `ideal`, or `None` when it is not principal.
pub fn principal_generator(ideal: &FieldIdeal) -> Result<Option<FieldElement>> {
    let field = ideal.field();
    let mut gamma = field.rational(ideal.scale().clone());
    let mut f = ideal_form(ideal)?.normalize();
    let mut steps = 0;
    let mut bump = || {
        steps += 1;
        if steps > MAX_STEPS {
            Err(Error::DescentFailure("ideal reduction did not terminate".into()))
        } else {
            Ok(())
        }
    };
    if !field.is_real() {
        while f.a > f.c || (f.a == f.c && f.b < 0) {
            bump()?;
            let (g, step) = flip(field, &f);
            gamma = gamma.mul(&step);
            f = g;
        }
        if f.a != 1 {
            return Ok(None);
        }
    } else {
        while !f.is_reduced() {
            bump()?;
            let (g, step) = flip(field, &f);
            gamma = gamma.mul(&step);
            f = g;
        }
        let start = f;
        while f.a != 1 {
            bump()?;
            let (g, step) = flip(field, &f);
            gamma = gamma.mul(&step);
            f = g;
            if f == start {
                return Ok(None);
            }
        }
    }
    if FieldIdeal::principal(&gamma)? != *ideal {
        return Err(Error::DescentFailure(format!("generator check failed for {ideal}")));
    }
    Ok(Some(gamma))
}

/// A totally positive generator, or `None` when the ideal is not
/// principal in the narrow sense.
pub fn totally_positive_generator(ideal: &FieldIdeal) -> Result<Option<FieldElement>> {
    let Some(g) = principal_generator(ideal)? else {
        return Ok(None);
    };
    let field = ideal.field();
    if !field.is_real() {
        return Ok(Some(g));
    }
    let eps = fundamental_unit(field)?;
    for u in [field.one(), eps.clone()] {
        for s in [1, -1] {
            let cand = g.mul(&u).scale(&Rational::from_integer(s.into()));
            if cand.is_totally_positive() {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

/// Whether `x` is a unit (norm +-1 and integral).
pub fn is_unit(x: &FieldElement) -> bool {
    x.is_integral() && x.norm().abs() == Rational::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::{build_field, class_group, narrow_class_group};

    #[test]
    fn generators_of_principal_ideals() {
        for m in [-1i128, -5, -23, 2, 3, 10, 79, 94] {
            let k = build_field(m).unwrap();
            for (x, y) in [(3, 2), (7, -1), (1, 5), (11, 4), (2, 0)] {
                let g = k.int_element(x, y).scale(&Rational::new(2.into(), 3.into()));
                let i = FieldIdeal::principal(&g).unwrap();
                let h = principal_generator(&i).unwrap().unwrap();
                assert!(is_unit(&h.div(&g).unwrap()), "m={m} g={g} h={h}");
            }
        }
    }

    #[test]
    fn principality_matches_class_group() {
        for m in [-5i128, -23, -65, 10, 15, 34, 3] {
            let k = build_field(m).unwrap();
            let cl = class_group(k).unwrap();
            let ncl = narrow_class_group(k).unwrap();
            for p in [2u64, 3, 5, 7, 11, 13] {
                for q in crate::quadratic::primes_above(k, p) {
                    let i = crate::quadratic::prime_ideal(k, &q);
                    let wide = cl.dlog_ideal(&i).unwrap().iter().all(|&c| c == 0);
                    assert_eq!(principal_generator(&i).unwrap().is_some(), wide, "m={m} {i}");
                    let narrow = ncl.dlog_ideal(&i).unwrap().iter().all(|&c| c == 0);
                    assert_eq!(totally_positive_generator(&i).unwrap().is_some(), narrow, "m={m} {i}");
                }
            }
        }
    }
}
