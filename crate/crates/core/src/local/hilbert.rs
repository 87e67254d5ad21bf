use num_traits::{Signed, Zero};

use super::{split_rational, LocalClass, Place};
use crate::arith::legendre_symbol;
use crate::error::{invalid, Result};
use crate::Rational;

/// Hilbert symbol `(a, b)_v`: `+1` iff `z^2 = a x^2 + b y^2` has a
/// nontrivial solution over `Q_v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return invalid("Hilbert symbol of zero");
    }
    Ok(match place {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let (alpha, u) = split_rational(a, 2, 3);
            let (beta, v) = split_rational(b, 2, 3);
            let eps = |x: i128| ((x - 1) / 2) & 1;
            let omega = |x: i128| ((x * x - 1) / 8) & 1;
            let e = eps(u) * eps(v) + alpha as i128 * omega(v) + beta as i128 * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            let (alpha, u) = split_rational(a, p, 1);
            let (beta, v) = split_rational(b, p, 1);
            let pi = p as i128;
            let mut s = 1;
            if (alpha * beta).rem_euclid(2) == 1 && pi % 4 == 3 {
                s = -s;
            }
            if beta.rem_euclid(2) == 1 {
                s *= legendre_symbol(u, pi);
            }
            if alpha.rem_euclid(2) == 1 {
                s *= legendre_symbol(v, pi);
            }
            s
        }
    })
}

/// Hilbert symbol on square classes (both classes must have even modulus).
pub fn hilbert_symbol_classes(a: &LocalClass, b: &LocalClass) -> Result<i32> {
    if a.place() != b.place() {
        return invalid("classes live at different places");
    }
    hilbert_symbol(
        &a.square_class_representative()?,
        &b.square_class_representative()?,
        a.place(),
    )
}

/// Whether `a` is a norm from `Q_v(sqrt d)` (or from `Q_v x Q_v` when `d`
/// is a local square).
pub fn local_norm_test(a: &Rational, place: Place, d: i128) -> Result<bool> {
    let d = Rational::from_integer(d.into());
    Ok(hilbert_symbol(a, &d, place)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn examples() {
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), Place::Real).unwrap(), -1);
        assert_eq!(hilbert_symbol(&q(2), &q(5), Place::Finite(5)).unwrap(), -1);
        assert_eq!(hilbert_symbol(&q(3), &q(7), Place::Finite(2)).unwrap(), -1);
        assert!(local_norm_test(&q(5), Place::Finite(5), 29).unwrap());
        assert!(!local_norm_test(&q(-1), Place::Real, -1).unwrap());
        assert!(local_norm_test(&q(-1), Place::Real, 2).unwrap());
    }

    #[test]
    fn brute_force_small_examples() {
        // z^2 = 2 x^2 + 5 y^2 with x a unit has no solution mod 25
        let found = (1..25)
            .filter(|x| x % 5 != 0)
            .any(|x| (0..25).any(|y| (0..25).any(|z| (z * z - 2 * x * x - 5 * y * y) % 25 == 0)));
        assert!(!found);
        // z^2 = 3 x^2 + 7 y^2: no primitive solution mod 64
        let found = (0..64).any(|x: i64| {
            (0..64).any(|y: i64| {
                (0..64).any(|z: i64| {
                    (x % 2 != 0 || y % 2 != 0 || z % 2 != 0)
                        && (z * z - 3 * x * x - 7 * y * y).rem_euclid(64) == 0
                })
            })
        });
        assert!(!found);
    }

    #[test]
    fn units_are_norms_from_unramified_extensions() {
        // Q_5(sqrt 2) is unramified: every 5-adic unit is a norm
        for u in [1, 2, 3, 4, 7, 11, 13] {
            assert!(local_norm_test(&q(u), Place::Finite(5), 2).unwrap());
        }
        // Q_2(sqrt 5) is unramified
        for u in [1, 3, 5, 7, -1] {
            assert!(local_norm_test(&q(u), Place::Finite(2), 5).unwrap());
        }
    }

    #[test]
    fn rational_arguments() {
        // (a/c^2, b) = (a, b)
        let a = q(3) / q(49);
        assert_eq!(
            hilbert_symbol(&a, &q(7), Place::Finite(7)).unwrap(),
            hilbert_symbol(&q(3), &q(7), Place::Finite(7)).unwrap()
        );
    }
}
