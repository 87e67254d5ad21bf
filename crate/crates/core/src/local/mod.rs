//! Local multiplicative groups `Q_v^x / (Q_v^x)^n`, Hilbert symbols and
//! Hilbert 90 in quadratic extensions of `Q_v`.

mod algebra;
mod class;
mod hilbert;
mod place;

pub use algebra::{local_hilbert90, local_hilbert90_with, LocalQuadElement, Padic};
pub use class::{local_class, precision_exponent, root_class, unit_moduli, LocalClass, LocalElement};
pub use hilbert::{hilbert_symbol, hilbert_symbol_classes, local_norm_test};
pub use place::Place;

use crate::arith::{mod_inv, valuation};
use crate::{Integer, Rational};
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

/// `x = p^v * u` with `u` a `p`-adic unit: returns `(v, u mod p^k)`.
pub(crate) fn split_rational(x: &Rational, p: u64, k: u32) -> (i64, i128) {
    assert!(!x.is_zero());
    let p_big = Integer::from(p);
    let (vn, num) = strip(x.numer(), &p_big);
    let (vd, den) = strip(x.denom(), &p_big);
    let m = (p as i128).pow(k);
    let m_big = Integer::from(m);
    let num = num.mod_floor(&m_big).to_i128().unwrap();
    let den = den.mod_floor(&m_big).to_i128().unwrap();
    let mut unit = num * mod_inv(den, m).expect("denominator is a unit") % m;
    if x.is_negative() {
        unit = (m - unit) % m;
    }
    (vn - vd, unit)
}

fn strip(x: &Integer, p: &Integer) -> (i64, Integer) {
    let mut v = 0;
    let mut x = x.abs();
    loop {
        let (q, r) = x.div_rem(p);
        if !r.is_zero() {
            break;
        }
        x = q;
        v += 1;
    }
    (v, x)
}

/// `p`-adic valuation of a nonzero rational.
pub fn rational_valuation(x: &Rational, p: u64) -> i64 {
    let p_big = Integer::from(p);
    strip(x.numer(), &p_big).0 - strip(x.denom(), &p_big).0
}

pub(crate) fn v_p(n: u64, p: u64) -> u32 {
    valuation(n as i128, p as i128)
}
