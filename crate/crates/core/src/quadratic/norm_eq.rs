use std::collections::BTreeSet;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{FieldElement, QuadraticField};
use crate::arith::{factor_integer, is_square, isqrt, squarefree_part, sqrt_mod_squarefree};
use crate::error::{invalid, Error, Result};
use crate::local::{hilbert_symbol, Place};
use crate::{Integer, Rational};

/// Required sign of a solution under one real embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignCondition {
    /// `true` for the embedding `sqrt m -> +sqrt m`.
    pub plus: bool,
    pub positive: bool,
}

/// Places where `c` might fail to be a local norm from `Q(sqrt m)`.
fn relevant_places(c: &Rational, m: i128) -> Result<Vec<Place>> {
    let mut primes = BTreeSet::from([2u64]);
    for part in [c.numer(), c.denom(), &Integer::from(m)] {
        let v = part
            .abs()
            .to_i128()
            .ok_or_else(|| Error::Unsupported("norm target too large".into()))?;
        if v > 1 {
            for (p, _) in factor_integer(v)?.factors {
                primes.insert(p as u64);
            }
        }
    }
    let mut places = vec![Place::Real];
    places.extend(primes.into_iter().map(Place::Finite));
    Ok(places)
}

/// Whether `c` is a norm from the field at every place.
pub fn is_local_norm_everywhere(field: QuadraticField, c: &Rational) -> Result<bool> {
    let m = Rational::from_integer(field.m().into());
    for v in relevant_places(c, field.m())? {
        if hilbert_symbol(c, &m, v)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x + y omega` of norm `c`, with `0 <= y <= y_max`, smallest `y` first.
fn integral_search(field: QuadraticField, c: i128, y_max: i128) -> Option<FieldElement> {
    let d = field.disc();
    let delta = field.delta();
    for y in 0..=y_max {
        let t = d.checked_mul(y * y)?.checked_add(4 * c)?;
        if t < 0 {
            if d < 0 {
                return None;
            }
            continue;
        }
        if !is_square(t) {
            continue;
        }
        let s = isqrt(t as u128) as i128;
        for root in [s, -s] {
            if (root - delta * y) % 2 == 0 {
                return Some(field.int_element((root - delta * y) / 2, y));
            }
        }
    }
    None
}

/// Nontrivial `(x, y, z)` with `z^2 = a x^2 + b y^2`, for squarefree
/// nonzero `a`, `b`; `None` when the conic has no rational point.
pub fn solve_conic(a: i128, b: i128) -> Result<Option<(Integer, Integer, Integer)>> {
    let one = Integer::one;
    let zero = Integer::zero;
    if a < 0 && b < 0 {
        return Ok(None);
    }
    if a == 1 {
        return Ok(Some((one(), zero(), one())));
    }
    if b == 1 {
        return Ok(Some((zero(), one(), one())));
    }
    if a.abs() > b.abs() {
        return Ok(solve_conic(b, a)?.map(|(x, y, z)| (y, x, z)));
    }
    let bb = b.abs();
    let Some(r) = sqrt_mod_squarefree(a.rem_euclid(bb), bb) else {
        return Ok(None);
    };
    let r = if 2 * r > bb { r - bb } else { r };
    let k = (r * r - a) / b;
    if k == 0 {
        return invalid(format!("{a} is a square"));
    }
    let k0 = squarefree_part(k)?;
    let t = isqrt((k / k0) as u128) as i128;
    let Some((x1, y1, z1)) = solve_conic(a, k0)? else {
        return Ok(None);
    };
    // (z1 + x1 sqrt a)(r + sqrt a) has norm b (k0 y1 t)^2
    let (ab, rb) = (Integer::from(a), Integer::from(r));
    let z = &z1 * &rb + &ab * &x1;
    let x = &z1 + &rb * &x1;
    let y = Integer::from(k0) * y1 * Integer::from(t);
    debug_assert_eq!(&z * &z, &ab * &x * &x + Integer::from(b) * &y * &y);
    Ok(Some((x, y, z)))
}

/// `t` with `N(t) = c`, meeting the sign conditions.
///
/// Tries a bounded integral search first, then a descent on the conic
/// `z^2 = m x^2 + c y^2`. `NoSolution` exactly when `c` fails to be a
/// local norm somewhere, or the sign conditions cannot be met.
pub fn solve_norm_equation(
    field: QuadraticField,
    c: &Rational,
    conditions: &[SignCondition],
) -> Result<FieldElement> {
    if c.is_zero() {
        return invalid("norm target is zero");
    }
    if !is_local_norm_everywhere(field, c)? {
        return Err(Error::NoSolution(format!("{c} is not a local norm from {field}")));
    }
    let big = c.numer() * c.denom();
    let big = big
        .to_i128()
        .ok_or_else(|| Error::Unsupported("norm target too large".into()))?;
    let c0 = squarefree_part(big)?;
    let k = isqrt((big / c0) as u128) as i128;
    let y_max = if field.is_real() { 200 } else { i128::MAX };
    let t0 = match integral_search(field, c0, y_max) {
        Some(t) => t,
        None => {
            let (x, y, z) = solve_conic(field.m(), c0)?.ok_or_else(|| {
                Error::DescentFailure(format!("conic for {c0} over {field} has no point"))
            })?;
            let y = Rational::from_integer(y);
            field.from_sqrt_coords(Rational::from_integer(z) / &y, Rational::from_integer(x) / y)
        }
    };
    let mut t = t0.scale(&(Rational::from_integer(k.into()) / Rational::from_integer(c.denom().clone())));
    if t.norm() != *c {
        return Err(Error::DescentFailure(format!("norm check failed for {t}")));
    }
    if !conditions.is_empty() && field.is_real() {
        let ok = |t: &FieldElement| {
            conditions
                .iter()
                .all(|cond| (t.sign_at(cond.plus) > 0) == cond.positive)
        };
        if !ok(&t) {
            t = t.neg();
            if !ok(&t) {
                return Err(Error::NoSolution("sign conditions cannot be met".into()));
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::build_field;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn examples() {
        let k5 = build_field(5).unwrap();
        assert_eq!(solve_norm_equation(k5, &q(-1, 1), &[]).unwrap(), k5.omega());
        let ki = build_field(-1).unwrap();
        assert_eq!(solve_norm_equation(ki, &q(13, 1), &[]).unwrap(), ki.int_element(3, 2));
        assert!(solve_norm_equation(k5, &q(1, 1), &[]).unwrap().is_one());
        assert!(matches!(solve_norm_equation(ki, &q(3, 1), &[]), Err(Error::NoSolution(_))));
        assert!(matches!(solve_norm_equation(ki, &q(-1, 1), &[]), Err(Error::NoSolution(_))));
    }

    #[test]
    fn conic_solutions() {
        for (a, b) in [(2, 7), (5, 29), (-1, 13), (3, -11), (13, 17), (-5, 41), (17, 19)] {
            match solve_conic(a, b).unwrap() {
                Some((x, y, z)) => {
                    assert_eq!(&z * &z, Integer::from(a) * &x * &x + Integer::from(b) * &y * &y);
                    assert!(!(x.is_zero() && y.is_zero() && z.is_zero()));
                }
                None => {
                    let places = relevant_places(&q(b as i64, 1), a).unwrap();
                    let ra = q(a as i64, 1);
                    let rb = q(b as i64, 1);
                    assert!(places.iter().any(|&v| hilbert_symbol(&ra, &rb, v).unwrap() == -1));
                }
            }
        }
    }

    #[test]
    fn rational_targets_and_descent() {
        // every Hasse-solvable target gets an exact solution
        for m in [-5i128, -1, 2, 3, 6, 10, 15, 34, 101] {
            let k = build_field(m).unwrap();
            for num in -30i64..30 {
                if num == 0 {
                    continue;
                }
                for den in [1i64, 2, 9] {
                    let c = q(num, den);
                    match solve_norm_equation(k, &c, &[]) {
                        Ok(t) => assert_eq!(t.norm(), c),
                        Err(Error::NoSolution(_)) => {
                            assert!(!is_local_norm_everywhere(k, &c).unwrap())
                        }
                        Err(e) => panic!("m={m} c={c}: {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn sign_conditions() {
        let k = build_field(3).unwrap();
        let want = [SignCondition { plus: true, positive: false }];
        let t = solve_norm_equation(k, &q(1, 1), &want).unwrap();
        assert_eq!(t.norm(), q(1, 1));
        assert!(t.sign_at(true) < 0);
        let impossible = [
            SignCondition { plus: true, positive: true },
            SignCondition { plus: false, positive: false },
        ];
        assert!(matches!(
            solve_norm_equation(k, &q(1, 1), &impossible),
            Err(Error::NoSolution(_))
        ));
    }
}
