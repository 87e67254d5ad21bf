//! Acceptance suite. Every criterion is checked against an oracle written
//! here, independent of the library code paths it exercises.
//!
//! Runs without the libtest harness so the per-criterion lines always show.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use etalecup::cohomology::{
    cohomology_punctured, cohomology_unpunctured, enumerate_torsors, torsor_basis, z1_mod_b1, BaseField, TorsorClass,
};
use etalecup::cup::{cup_h1_h1, cup_value, solve_descent_with, DescentChoices};
use etalecup::idele::cs_torsion_n;
use etalecup::local::{hilbert_symbol, Place};
use etalecup::quadratic::{build_field, class_group, fundamental_unit, narrow_class_group};
use etalecup::{Integer, Rational, DEFAULT_SEED};

type Outcome = Result<String, String>;

fn sieve(bound: u64) -> Vec<u64> {
    let mut composite = vec![false; bound as usize];
    let mut out = Vec::new();
    for i in 2..bound as usize {
        if !composite[i] {
            out.push(i as u64);
            for j in (i * i..bound as usize).step_by(i) {
                composite[j] = true;
            }
        }
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Euler's criterion.
fn euler(a: u64, p: u64) -> i32 {
    match pow_mod(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn quadratic_pairs() -> Vec<(u64, u64)> {
    let primes: Vec<u64> = sieve(200).into_iter().filter(|p| p % 4 == 1).collect();
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            out.push((p, q));
        }
    }
    out
}

fn vanishes(v: &[u64]) -> bool {
    v.iter().all(|&x| x == 0)
}

fn cup_pair(p: u64, q: u64) -> Result<(bool, bool), String> {
    let s = [p, q];
    let xp = TorsorClass::quadratic(p as i128).map_err(|e| e.to_string())?;
    let xq = TorsorClass::quadratic(q as i128).map_err(|e| e.to_string())?;
    let pq = cup_h1_h1(&xp, &xq, &s, 2).map_err(|e| e.to_string())?;
    let qp = cup_h1_h1(&xq, &xp, &s, 2).map_err(|e| e.to_string())?;
    Ok((vanishes(&pq), vanishes(&qp)))
}

fn legendre_correspondence(cups: &[((u64, u64), (bool, bool))]) -> Outcome {
    let bad: Vec<_> = cups
        .iter()
        .filter(|((p, q), (pq, _))| *pq != (euler(*p, *q) == 1))
        .map(|(pair, _)| format!("{pair:?}"))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} pairs p < q < 200", cups.len()))
    } else {
        Err(format!("mismatches {}", bad.join(" ")))
    }
}

fn reciprocity(cups: &[((u64, u64), (bool, bool))]) -> Outcome {
    let bad: Vec<_> = cups
        .iter()
        .filter(|((p, q), (pq, qp))| pq != qp || *qp != (euler(*q, *p) == 1))
        .map(|(pair, _)| format!("{pair:?}"))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} pairs, x_p.x_q and x_q.x_p agree with (q/p)", cups.len()))
    } else {
        Err(format!("mismatches {}", bad.join(" ")))
    }
}

fn small_sets() -> Vec<Vec<u64>> {
    let base = [2u64, 3, 5, 7, 11, 13];
    let mut out = Vec::new();
    for (i, &p) in base.iter().enumerate() {
        out.push(vec![p]);
        for &q in &base[i + 1..] {
            out.push(vec![p, q]);
        }
    }
    out
}

/// Homomorphisms `(Z/M)^x -> Z/n`, counted as `x` with `x^n = 1`, where `M`
/// is deep enough at each prime of `S` for every character of order `n`.
fn kronecker_weber_count(s: &[u64], n: u64) -> u64 {
    let mut m = 1u64;
    for &p in s {
        let mut v = 0;
        let mut k = n;
        while k % p == 0 {
            k /= p;
            v += 1;
        }
        m *= p.pow(if p == 2 { v + 2 } else { v + 1 });
    }
    (1..m).filter(|&x| gcd(x, m) == 1 && pow_mod(x, n, m) == 1).count() as u64
}

fn group_orders() -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for s in small_sets() {
        for n in [2u64, 3, 4, 6] {
            cases += 1;
            let h1 = cohomology_punctured(&s, n).map_err(|e| e.to_string())?.group(1).order();
            let oracle = kronecker_weber_count(&s, n) as u128;
            if h1 != oracle {
                bad.push(format!("S={s:?} n={n}: {h1} vs {oracle}"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{cases} (S, n) cases"))
    } else {
        Err(bad.join("; "))
    }
}

fn torsor_census() -> Outcome {
    let mut bad = Vec::new();
    for s in small_sets() {
        let nontrivial = enumerate_torsors(&s, 2)
            .map_err(|e| e.to_string())?
            .iter()
            .filter(|t| !t.is_trivial())
            .count() as u128;
        let h1 = cohomology_punctured(&s, 2).map_err(|e| e.to_string())?.group(1).order();
        if nontrivial + 1 != h1 {
            bad.push(format!("S={s:?}: {nontrivial} + 1 vs {h1}"));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} sets", small_sets().len()))
    } else {
        Err(bad.join("; "))
    }
}

fn trial_primes(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Representative of the square class of `a` in `Q_p^x`: `u p^e`, `e` in
/// {0, 1}, with `u` the least positive unit in its class.
fn square_class(a: i64, p: u64) -> (u64, u32) {
    let mut u = a;
    let mut v = 0;
    while u % p as i64 == 0 {
        u /= p as i64;
        v += 1;
    }
    let modulus = if p == 2 { 8 } else { p } as i64;
    let r = u.rem_euclid(modulus) as u64;
    let unit = if p == 2 {
        r
    } else if euler(r, p) == 1 {
        1
    } else {
        (2..p).find(|&c| euler(c, p) == -1).unwrap()
    };
    (unit, v % 2)
}

/// Whether `z^2 = a x^2 + b y^2` has a primitive solution modulo `p^k`,
/// with `k` large enough for Hensel lifting (3 for odd `p`, 5 for 2).
fn conic_solvable(a: (u64, u32), b: (u64, u32), p: u64) -> bool {
    let m = p.pow(if p == 2 { 5 } else { 3 });
    let ca = a.0 * p.pow(a.1) % m;
    let cb = b.0 * p.pow(b.1) % m;
    let mut squares = vec![false; m as usize];
    for z in 0..m {
        squares[(z * z % m) as usize] = true;
    }
    // A primitive solution has x or y a unit; scale that coordinate to 1.
    let with_x_one = (0..m).any(|y| squares[((ca + cb * (y * y % m)) % m) as usize]);
    let with_y_one = (0..m).step_by(p as usize).any(|x| squares[((ca * (x * x % m) + cb) % m) as usize]);
    with_x_one || with_y_one
}

fn product_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut cache: HashMap<(u64, (u64, u32), (u64, u32)), i32> = HashMap::new();
    let mut bad = Vec::new();
    let mut local_checks = 0;
    for _ in 0..500 {
        let mut pick = || loop {
            let x: i64 = rng.gen_range(-100_000..=100_000);
            if x != 0 {
                return x;
            }
        };
        let (a, b) = (pick(), pick());
        let (ra, rb) = (Rational::from_integer(a.into()), Rational::from_integer(b.into()));
        let mut primes = trial_primes(a.unsigned_abs() * 2);
        primes.extend(trial_primes(b.unsigned_abs()));
        primes.extend([3, 5, 7, 11, 13]);
        primes.sort_unstable();
        primes.dedup();
        let mut product = hilbert_symbol(&ra, &rb, Place::Real).map_err(|e| e.to_string())?;
        for &p in &primes {
            let h = hilbert_symbol(&ra, &rb, Place::Finite(p)).map_err(|e| e.to_string())?;
            product *= h;
            if p <= 13 {
                local_checks += 1;
                let key = (p, square_class(a, p), square_class(b, p));
                let oracle = *cache
                    .entry(key)
                    .or_insert_with(|| if conic_solvable(key.1, key.2, p) { 1 } else { -1 });
                if oracle != h {
                    bad.push(format!("({a},{b})_{p} = {h}, conic says {oracle}"));
                }
            }
        }
        if product != 1 {
            bad.push(format!("product for ({a},{b}) is {product}"));
        }
    }
    if bad.is_empty() {
        Ok(format!("500 pairs, {local_checks} local symbols checked by conic search"))
    } else {
        Err(bad.join("; "))
    }
}

fn spec_z_profile() -> Outcome {
    let p = cohomology_unpunctured(BaseField::Rationals, 2).map_err(|e| e.to_string())?;
    let shape: Vec<Vec<u64>> = (0..6).map(|i| p.group(i).invariants().to_vec()).collect();
    let z1 = z1_mod_b1(BaseField::Rationals, 2).map_err(|e| e.to_string())?;
    // H^3 is dual to mu_2(Q_+) + (R^x/2)^1 = 1 + Z/2.
    let expected = vec![vec![2], vec![], vec![], vec![2], vec![2], vec![2]];
    if shape == expected && z1.order() == 1 {
        Ok(format!("{shape:?}, |Z1/B1| = 1"))
    } else {
        Err(format!("{shape:?}, |Z1/B1| = {}", z1.order()))
    }
}

fn is_squarefree(m: u64) -> bool {
    (2..).take_while(|d| d * d <= m).all(|d| m % (d * d) != 0)
}

fn isqrt(x: u128) -> Option<u128> {
    let r = (x as f64).sqrt() as u128;
    (r.saturating_sub(2)..=r + 2).find(|c| c * c == x)
}

/// Least `y > 0` with `x^2 - D y^2 = +-4`; the fundamental unit is
/// `(x + y sqrt D) / 2`.
fn pell_y(disc: u128) -> u128 {
    (1u128..)
        .find(|&y| {
            let t = disc * y * y;
            isqrt(t + 4).is_some() || isqrt(t - 4).is_some()
        })
        .unwrap()
}

fn to_u128(x: &Rational) -> Option<u128> {
    if !x.is_integer() {
        return None;
    }
    x.to_integer().abs().to_u128()
}

fn narrow_table() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for m in (2u64..100).filter(|&m| is_squarefree(m)) {
        count += 1;
        let k = build_field(m as i128).map_err(|e| e.to_string())?;
        let eps = fundamental_unit(k).map_err(|e| e.to_string())?;
        let norm = eps.norm();
        let minus_one = -Rational::one();
        if !(norm.is_one() || norm == minus_one) {
            bad.push(format!("m={m}: N(eps) = {norm}"));
            continue;
        }
        // eps = u + v sqrt m; compare with the least Pell solution.
        let (_, v) = eps.sqrt_coords();
        let disc = if m % 4 == 1 { m } else { 4 * m } as u128;
        let y = if m % 4 == 1 { (v.clone() * Rational::from_integer(Integer::from(2))).abs() } else { v.abs() };
        if to_u128(&y) != Some(pell_y(disc)) {
            bad.push(format!("m={m}: eps = {eps} is not fundamental"));
        }
        let factor = if norm == minus_one { 1 } else { 2 };
        let h_plus = narrow_class_group(k).map_err(|e| e.to_string())?.order();
        let h = class_group(k).map_err(|e| e.to_string())?.order();
        if h_plus != h * factor {
            bad.push(format!("m={m}: h+ = {h_plus}, h = {h}, N(eps) = {norm}"));
        }
    }
    let q2 = narrow_class_group(build_field(2).unwrap()).unwrap();
    let q3 = narrow_class_group(build_field(3).unwrap()).unwrap();
    if q2.order() != 1 {
        bad.push(format!("Q(sqrt 2): {:?}", q2.invariants()));
    }
    if q3.invariants() != [2] {
        bad.push(format!("Q(sqrt 3): {:?}", q3.invariants()));
    }
    if bad.is_empty() {
        Ok(format!("{count} real fields, anchors sqrt2 -> 1, sqrt3 -> Z/2"))
    } else {
        Err(bad.join("; "))
    }
}

fn well_definedness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 0x8);
    let pool = sieve(30);
    let mut bad = Vec::new();
    let mut solves = 0;
    let mut instances = 0;
    while instances < 50 {
        let mut s = vec![pool[rng.gen_range(0..pool.len())]];
        if rng.gen_bool(0.7) {
            let q = pool[rng.gen_range(0..pool.len())];
            if q != s[0] {
                s.push(q);
                s.sort_unstable();
            }
        }
        let n = [2u64, 4, 6][rng.gen_range(0..3)];
        let tor = cs_torsion_n(&s, n).map_err(|e| e.to_string())?;
        if tor.order() == 1 {
            continue;
        }
        let coords: Vec<u64> = tor.invariants().iter().map(|&d| rng.gen_range(0..d)).collect();
        let alpha = tor.element(&coords).map_err(|e| e.to_string())?;
        let basis = torsor_basis(&s).map_err(|e| e.to_string())?;
        let y = basis[rng.gen_range(0..basis.len())];
        let z = basis[rng.gen_range(0..basis.len())];
        let field = y.field().expect("basis torsors are quadratic");
        instances += 1;
        let base = cup_value(&y, &z, &alpha, &DescentChoices::default()).map_err(|e| e.to_string())?;
        for _ in 0..5 {
            let choices = DescentChoices::random(field, &s, rng.gen());
            let data = match solve_descent_with(&y, &alpha, n, &choices) {
                Ok(d) => d,
                Err(e) => {
                    bad.push(format!("S={s:?} n={n} {y}: {e}"));
                    continue;
                }
            };
            solves += 1;
            if let Err(e) = data.verify(field) {
                bad.push(format!("S={s:?} n={n} {y}: re-verify {e}"));
            }
            let v = cup_value(&y, &z, &alpha, &choices).map_err(|e| e.to_string())?;
            if v != base {
                bad.push(format!("S={s:?} n={n} {y} {z} {alpha}: {v} vs {base}"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{instances} instances, {solves} perturbed solves"))
    } else {
        Err(bad.join("; "))
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cups: Result<Vec<_>, String> = quadratic_pairs()
        .into_iter()
        .map(|(p, q)| cup_pair(p, q).map(|c| ((p, q), c)))
        .collect();
    let (c1, c2) = match &cups {
        Ok(cups) => (legendre_correspondence(cups), reciprocity(cups)),
        Err(e) => (Err(e.clone()), Err(e.clone())),
    };
    let mut results = vec![("Legendre correspondence", c1), ("reciprocity by commutativity", c2)];
    let rest: [(&str, fn() -> Outcome); 6] = [
        ("H^1 order vs Kronecker-Weber count", group_orders),
        ("torsor census", torsor_census),
        ("Hilbert product formula", product_formula),
        ("Spec Z profile", spec_z_profile),
        ("narrow class group table", narrow_table),
        ("descent well-definedness", well_definedness),
    ];
    for (name, check) in rest {
        results.push((name, check()));
    }
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {} {name} ... PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name} ... FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed in {:.1?}", results.len() - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
