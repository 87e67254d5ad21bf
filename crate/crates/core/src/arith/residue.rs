use super::{crt_combine, factor_integer, mod_inv, mod_pow, valuation};
use crate::error::{invalid, Result};

/// Jacobi symbol `(a/m)` for odd positive `m`.
pub fn jacobi_symbol(a: i128, m: i128) -> Result<i32> {
    if m < 1 || m % 2 == 0 {
        return invalid(format!("Jacobi symbol needs an odd positive modulus, got {m}"));
    }
    let mut a = a.rem_euclid(m);
    let mut n = m;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    Ok(if n == 1 { result } else { 0 })
}

/// Legendre symbol for an odd prime `p`.
pub fn legendre_symbol(a: i128, p: i128) -> i32 {
    jacobi_symbol(a, p).expect("odd prime modulus")
}

/// Kronecker symbol `(d/n)` for `n >= 1`, extending Jacobi to even `n`.
pub fn kronecker_symbol(d: i128, n: i128) -> i32 {
    assert!(n >= 1, "Kronecker symbol needs a positive lower argument");
    let v = valuation(n, 2);
    let odd = n >> v;
    let mut out = jacobi_symbol(d, odd).expect("odd part");
    if v > 0 {
        let at_two: i32 = if d % 2 == 0 {
            0
        } else if matches!(d.rem_euclid(8), 1 | 7) {
            1
        } else {
            -1
        };
        out *= at_two.pow(v);
    }
    out
}

fn tonelli_shanks(a: i128, p: i128) -> Option<i128> {
    let a = a.rem_euclid(p);
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if mod_pow(a, ((p - 1) / 2) as u128, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(a, ((p + 1) / 4) as u128, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&z| mod_pow(z, ((p - 1) / 2) as u128, p) == p - 1)
        .expect("nonresidue exists");
    let mut m = s;
    let mut c = mod_pow(z, q as u128, p);
    let mut t = mod_pow(a, q as u128, p);
    let mut r = mod_pow(a, ((q + 1) / 2) as u128, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = t2 * t2 % p;
            i += 1;
        }
        let b = mod_pow(c, 1u128 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r)
}

/// Square root of a unit modulo `2^k`.
fn sqrt_unit_mod_two_power(a: i128, k: u32) -> Option<i128> {
    let m = 1i128 << k;
    let a = a.rem_euclid(m);
    match k {
        1 => return Some(1),
        2 => return (a % 4 == 1).then_some(1),
        _ => {}
    }
    if a % 8 != 1 {
        return None;
    }
    let mut r = 1i128;
    for j in 3..k {
        // r^2 = a mod 2^j; fix the next bit
        let modulus = 1i128 << (j + 1);
        if (r * r - a).rem_euclid(modulus) != 0 {
            r += 1 << (j - 1);
        }
    }
    Some(r.rem_euclid(m))
}

/// `r` with `r^2 = a (mod p^k)`, or `None` when no root exists.
///
/// Odd primes use Tonelli-Shanks followed by Hensel lifting; `p = 2`
/// lifts bit by bit. Non-unit `a` is handled by pulling out even powers
/// of `p`.
pub fn sqrt_mod_prime_power(a: i128, p: i128, k: u32) -> Option<i128> {
    assert!(k >= 1);
    let m = p.pow(k);
    let a = a.rem_euclid(m);
    if a == 0 {
        return Some(0);
    }
    let v = valuation(a, p);
    if v > 0 {
        if v % 2 == 1 {
            return None;
        }
        let half = p.pow(v / 2);
        let rest = sqrt_mod_prime_power(a / p.pow(v), p, k - v)?;
        return Some((rest * half).rem_euclid(m));
    }
    if p == 2 {
        return sqrt_unit_mod_two_power(a, k);
    }
    let mut r = tonelli_shanks(a, p)?;
    let mut pk = p;
    for _ in 1..k {
        // r <- r - (r^2 - a) / (2r)  mod p^{j+1}
        pk *= p;
        let inv = mod_inv(2 * r, pk).expect("2r is a unit");
        r = (r - (r * r - a).rem_euclid(pk) * inv % pk).rem_euclid(pk);
    }
    Some(r.rem_euclid(m))
}

/// Square root modulo a squarefree positive `m`, via CRT.
pub fn sqrt_mod_squarefree(a: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let f = factor_integer(m).ok()?;
    let mut parts = Vec::with_capacity(f.factors.len());
    for &(p, e) in &f.factors {
        debug_assert_eq!(e, 1);
        let p = p as i128;
        parts.push((sqrt_mod_prime_power(a, p, 1)?, p));
    }
    crt_combine(&parts).ok().map(|(r, _)| r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler(a: i128, p: i128) -> i32 {
        match mod_pow(a, ((p - 1) / 2) as u128, p) {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_symbol(5, 13).unwrap(), -1);
        assert_eq!(euler(5, 13), -1);
        assert_eq!(jacobi_symbol(5, 29).unwrap(), 1);
        assert_eq!((11 * 11) % 29, 5);
        assert_eq!(jacobi_symbol(0, 5).unwrap(), 0);
        assert!(jacobi_symbol(3, 8).is_err());
        assert!(jacobi_symbol(3, -3).is_err());
    }

    #[test]
    fn kronecker_at_two() {
        assert_eq!(kronecker_symbol(5, 2), -1);
        assert_eq!(kronecker_symbol(17, 2), 1);
        assert_eq!(kronecker_symbol(-4, 2), 0);
        assert_eq!(kronecker_symbol(29, 5), 1);
    }

    #[test]
    fn sqrt_examples() {
        let r = sqrt_mod_prime_power(4, 5, 1).unwrap();
        assert!(r == 2 || r == 3);
        let r = sqrt_mod_prime_power(2, 7, 3).unwrap();
        assert_eq!((r * r - 2).rem_euclid(343), 0);
        // exhaustive confirmation that a root exists mod 343
        assert!((0..343).any(|x: i128| (x * x - 2) % 343 == 0));
        assert_eq!(sqrt_mod_prime_power(2, 5, 1), None);
    }

    #[test]
    fn sqrt_two_powers_exhaustive() {
        for k in 1..=7 {
            let m = 1i128 << k;
            for a in (1..m).step_by(2) {
                let brute = (0..m).any(|x| (x * x - a) % m == 0);
                match sqrt_mod_prime_power(a, 2, k) {
                    Some(r) => assert_eq!((r * r - a).rem_euclid(m), 0, "a={a} k={k}"),
                    None => assert!(!brute, "missed root a={a} k={k}"),
                }
            }
        }
    }

    #[test]
    fn sqrt_non_units() {
        let r = sqrt_mod_prime_power(9 * 2, 3, 4);
        assert_eq!(r, None);
        let r = sqrt_mod_prime_power(9 * 4, 3, 4).unwrap();
        assert_eq!((r * r - 36).rem_euclid(81), 0);
        let r = sqrt_mod_squarefree(-1, 5 * 13).unwrap();
        assert_eq!((r * r + 1).rem_euclid(65), 0);
    }
}
