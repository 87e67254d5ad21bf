use super::{gcd, isqrt};
use crate::error::{invalid, Result};

const TRIAL_BOUND: u128 = 1_000_000;
const MAX_INPUT: u128 = 1 << 96;
/// Bases making Miller-Rabin deterministic below 3.3e24.
const MR_BASES: [u128; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const MR_DETERMINISTIC_BELOW: u128 = 3_317_044_064_679_887_385_961_981;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// `|value| = prod p^e` with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: Sign,
    pub value: u128,
    pub factors: Vec<(u128, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn expand(&self) -> u128 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// `a*b mod m` for `m < 2^96` without overflowing `u128`.
fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return (a % m) * (b % m) % m;
    }
    let a = a % m;
    let b = b % m;
    let mut acc = 0u128;
    for shift in [64u32, 32, 0] {
        let limb = (b >> shift) & 0xffff_ffff;
        acc = (acc << 32) % m;
        acc = (acc + a * limb % m) % m;
    }
    acc
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn miller_rabin(n: u128, bases: &[u128]) -> bool {
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in bases {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn jacobi_u(mut a: i128, mut n: u128) -> i32 {
    a = a.rem_euclid(n as i128);
    let mut a = a as u128;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: u128) -> bool {
    if isqrt(n).pow(2) == n {
        return false;
    }
    let mut d: i128 = 5;
    loop {
        match jacobi_u(d, n) {
            -1 => break,
            0 if d.unsigned_abs() != n => return false,
            _ => {}
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
    }
    let p: u128 = 1;
    let q: i128 = (1 - d) / 4;
    let q_mod = q.rem_euclid(n as i128) as u128;
    let d_mod = d.rem_euclid(n as i128) as u128;
    let mut k = n + 1;
    let mut s = 0;
    while k % 2 == 0 {
        k /= 2;
        s += 1;
    }
    let half = |x: u128| -> u128 {
        if x % 2 == 0 {
            x / 2
        } else {
            // (x + n) / 2 without overflow
            x / 2 + n / 2 + 1
        }
    };
    let sub = |a: u128, b: u128| (a + n - b) % n;
    // binary Lucas chain for U_k, V_k
    let (mut u, mut v, mut qk) = (0u128, 2u128 % n, 1u128);
    let bits = 128 - k.leading_zeros();
    for i in (0..bits).rev() {
        // doubling
        u = mul_mod(u, v, n);
        v = sub(mul_mod(v, v, n), mul_mod(2, qk, n));
        qk = mul_mod(qk, qk, n);
        if (k >> i) & 1 == 1 {
            let nu = half((mul_mod(p, u, n) + v) % n);
            let nv = half((mul_mod(d_mod, u, n) + mul_mod(p, v, n)) % n);
            u = nu;
            v = nv;
            qk = mul_mod(qk, q_mod, n);
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    for _ in 1..s {
        v = sub(mul_mod(v, v, n), mul_mod(2, qk, n));
        qk = mul_mod(qk, qk, n);
        if v == 0 {
            return true;
        }
    }
    false
}

/// Deterministic for `n < 3.3e24`; BPSW above.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < MR_DETERMINISTIC_BELOW {
        miller_rabin(n, &MR_BASES)
    } else {
        miller_rabin(n, &[2]) && strong_lucas(n)
    }
}

/// Brent's variant of Pollard rho; the polynomial constant walks a fixed
/// sequence so output never depends on external randomness.
fn pollard_brent(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c: u128 = 1;
    loop {
        let f = |x: u128| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut q) = (2u128, 2u128, 1u128);
        let mut g = 1u128;
        let mut r = 1u64;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q as i128, n as i128) as u128;
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys) as i128, n as i128) as u128;
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_into(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Factor a nonzero integer with `|m| < 2^96`.
pub fn factor_integer(m: i128) -> Result<Factorization> {
    if m == 0 {
        return invalid("cannot factor zero");
    }
    let value = m.unsigned_abs();
    if value >= MAX_INPUT {
        return invalid(format!("{m} exceeds the supported 96-bit range"));
    }
    let sign = if m < 0 { Sign::Negative } else { Sign::Positive };
    let mut rest = value;
    let mut primes = Vec::new();
    let mut p = 2u128;
    while p < TRIAL_BOUND && p * p <= rest {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        split_into(rest, &mut primes);
    }
    primes.sort_unstable();
    let mut factors: Vec<(u128, u32)> = Vec::new();
    for q in primes {
        match factors.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => factors.push((q, 1)),
        }
    }
    Ok(Factorization {
        sign,
        value,
        factors,
    })
}
