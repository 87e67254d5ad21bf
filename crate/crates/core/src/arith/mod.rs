//! Exact integer primitives: gcds, modular powers, residue symbols,
//! modular square roots, CRT and factorization.
//!
//! Everything here works on machine integers (`i128`/`u128`); moduli are
//! kept below 2^63 so that products of two residues never overflow.

mod factor;
mod residue;

pub use factor::{factor_integer, is_prime, Factorization, Sign};
pub use residue::{
    jacobi_symbol, kronecker_symbol, legendre_symbol, sqrt_mod_prime_power, sqrt_mod_squarefree,
};

use crate::error::{invalid, Result};

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    ext_gcd(a, b).0
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inv(a: i128, m: i128) -> Option<i128> {
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

pub fn mod_pow(base: i128, mut exp: u128, m: i128) -> i128 {
    if m == 1 {
        return 0;
    }
    let mut b = base.rem_euclid(m);
    let mut acc = 1i128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}

/// Largest `k` with `p^k | m`; `m` must be nonzero.
pub fn valuation(mut m: i128, p: i128) -> u32 {
    debug_assert!(m != 0 && p > 1);
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    k
}

pub fn ipow(base: i128, exp: u32) -> i128 {
    base.pow(exp)
}

/// Integer square root (floor) of a nonnegative value.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn is_square(n: i128) -> bool {
    n >= 0 && {
        let r = isqrt(n as u128);
        r * r == n as u128
    }
}

/// Squarefree kernel of a nonzero integer, sign preserved.
pub fn squarefree_part(m: i128) -> Result<i128> {
    let f = factor_integer(m)?;
    let mut out = if f.sign == Sign::Negative { -1 } else { 1 };
    for &(p, e) in &f.factors {
        if e % 2 == 1 {
            out *= p as i128;
        }
    }
    Ok(out)
}

pub fn is_squarefree(m: i128) -> Result<bool> {
    Ok(factor_integer(m)?.factors.iter().all(|&(_, e)| e == 1))
}

/// Combine `x = r_i mod m_i` for pairwise coprime moduli. Returns the
/// residue in `[0, M)` together with `M = prod m_i`.
pub fn crt_combine(residues: &[(i128, i128)]) -> Result<(i128, i128)> {
    let mut acc = 0i128;
    let mut modulus = 1i128;
    for &(r, m) in residues {
        if m <= 0 {
            return invalid(format!("modulus {m} must be positive"));
        }
        let (g, inv, _) = ext_gcd(modulus.rem_euclid(m), m);
        if g != 1 {
            return invalid(format!("moduli {modulus} and {m} are not coprime"));
        }
        // acc + modulus * k = r (mod m)
        let k = ((r - acc).rem_euclid(m) * inv.rem_euclid(m)).rem_euclid(m);
        acc += modulus * k;
        modulus *= m;
        acc = acc.rem_euclid(modulus);
    }
    Ok((acc, modulus))
}

/// Smallest primitive root modulo an odd prime `p` (or 1 for `p = 2`).
pub fn primitive_root(p: i128) -> i128 {
    if p == 2 {
        return 1;
    }
    let order = p - 1;
    let primes: Vec<i128> = factor_integer(order)
        .expect("p - 1 is nonzero")
        .factors
        .iter()
        .map(|&(q, _)| q as i128)
        .collect();
    (2..p)
        .find(|&g| primes.iter().all(|&q| mod_pow(g, (order / q) as u128, p) != 1))
        .expect("every prime has a primitive root")
}

/// Primes below `bound`, by a plain sieve.
pub fn primes_below(bound: u64) -> Vec<u64> {
    if bound < 3 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for i in 2..n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_examples() {
        assert_eq!(crt_combine(&[(1, 3), (2, 5)]).unwrap(), (7, 15));
        assert_eq!(crt_combine(&[(0, 7)]).unwrap(), (0, 7));
        assert_eq!(crt_combine(&[(3, 4), (4, 9), (1, 5)]).unwrap(), (31, 180));
        assert!(crt_combine(&[(1, 4), (1, 6)]).is_err());
    }

    #[test]
    fn crt_matches_scan() {
        // 0..179 direct scan for the three-modulus example
        let hit = (0..180).find(|x| x % 4 == 3 && x % 9 == 4 && x % 5 == 1);
        assert_eq!(hit, Some(31));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(5), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(41), 6);
    }

    #[test]
    fn squarefree_kernels() {
        assert_eq!(squarefree_part(-20).unwrap(), -5);
        assert_eq!(squarefree_part(72).unwrap(), 2);
        assert!(!is_squarefree(12).unwrap());
        assert!(is_squarefree(-30).unwrap());
    }

    #[test]
    fn ext_gcd_identity() {
        for (a, b) in [(240, 46), (-7, 3), (0, 5), (12, 0)] {
            let (g, x, y) = ext_gcd(a, b);
            assert_eq!(a * x + b * y, g);
            assert_eq!(g, gcd(a.abs(), b.abs()));
        }
    }
}
