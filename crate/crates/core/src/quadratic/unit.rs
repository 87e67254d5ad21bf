use num_traits::{One, Signed};

use super::field::{FieldElement, QuadraticField};
use crate::arith::isqrt;
use crate::error::{invalid, Result};
use crate::Rational;

/// Fundamental unit `eps > 1` of a real quadratic field.
///
/// Product of the complete quotients over one period of the continued
/// fraction of `omega`.
pub fn fundamental_unit(field: QuadraticField) -> Result<FieldElement> {
    if !field.is_real() {
        return invalid(format!("{field} is imaginary"));
    }
    let d = field.disc();
    let r = isqrt(d as u128) as i128;
    let (mut p, mut q) = (field.delta(), 2i128);
    let step = |p: i128, q: i128| {
        let a = (p + r).div_euclid(q);
        let p1 = a * q - p;
        let q1 = (d - p1 * p1) / q;
        (p1, q1)
    };
    (p, q) = step(p, q);
    let start = (p, q);
    // sqrt(disc) = c * sqrt(m)
    let c = if field.delta() == 0 { 2 } else { 1 };
    let mut eps = field.one();
    loop {
        let x = field.from_sqrt_coords(Rational::new(p.into(), q.into()), Rational::new(c.into(), q.into()));
        eps = eps.mul(&x);
        (p, q) = step(p, q);
        if (p, q) == start {
            break;
        }
    }
    debug_assert!(eps.norm().abs().is_one());
    Ok(eps)
}

/// `N(eps)` for a real field.
pub fn fundamental_unit_norm(field: QuadraticField) -> Result<i32> {
    let eps = fundamental_unit(field)?;
    Ok(if eps.norm().is_one() { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::build_field;
    use crate::arith::is_square;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    #[test]
    fn examples() {
        let e = fundamental_unit(build_field(2).unwrap()).unwrap();
        assert_eq!(e.sqrt_coords(), (q(1), q(1)));
        assert_eq!(e.norm(), q(-1));
        let e = fundamental_unit(build_field(5).unwrap()).unwrap();
        assert_eq!(e, build_field(5).unwrap().omega());
        let e = fundamental_unit(build_field(3).unwrap()).unwrap();
        assert_eq!(e.sqrt_coords(), (q(2), q(1)));
        assert_eq!(e.norm(), q(1));
        assert!(fundamental_unit(build_field(-3).unwrap()).is_err());
    }

    /// Smallest unit above 1 by direct search: it has the least positive
    /// omega-coordinate, so scan `y = 1, 2, ...` and solve for `x`.
    fn search_unit(field: QuadraticField) -> FieldElement {
        let d = field.disc();
        let delta = field.delta();
        for y in 1i128.. {
            let mut found: Vec<FieldElement> = Vec::new();
            for sign in [1i128, -1] {
                let t = d * y * y + 4 * sign;
                if t >= 0 && is_square(t) {
                    let s = isqrt(t as u128) as i128;
                    if (s - delta * y) % 2 == 0 {
                        found.push(field.int_element((s - delta * y) / 2, y));
                    }
                }
            }
            if let Some(best) = found
                .into_iter()
                .filter(|g| g.approx(true) > 1.0)
                .min_by(|a, b| a.approx(true).total_cmp(&b.approx(true)))
            {
                return best;
            }
        }
        unreachable!()
    }

    #[test]
    fn matches_direct_search() {
        for m in [2i128, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 21, 29, 33, 37, 41] {
            let k = build_field(m).unwrap();
            let e = fundamental_unit(k).unwrap();
            let s = search_unit(k);
            assert_eq!(e, s, "m={m}");
        }
    }
}
