//! The invariant suite behind `etalecup verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use etalecup::arith::{is_squarefree, primes_below};
use etalecup::cohomology::{cohomology_punctured, cohomology_unpunctured, enumerate_torsors, torsor_basis, BaseField};
use etalecup::cup::{cup_value, solve_descent_with, verify_reciprocity, DescentChoices};
use etalecup::idele::cs_torsion_n;
use etalecup::local::{hilbert_symbol, Place};
use etalecup::quadratic::{build_field, class_group, fundamental_unit, narrow_class_group};
use etalecup::{Rational, Result};

use crate::report::Record;

fn record(name: &str, pass: bool, detail: String) -> Record {
    Record {
        name: name.to_string(),
        pass,
        detail,
    }
}

fn subsets_up_to_two(primes: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        out.push(vec![p]);
        for &q in &primes[i + 1..] {
            out.push(vec![p, q]);
        }
    }
    out
}

/// `#{x in (Z/M)^x : x^n = 1}`, the number of characters of order
/// dividing `n` of `(Z/M)^x`.
fn count_n_torsion(m: u64, n: u64) -> u64 {
    let mut count = 0;
    for x in 1..m {
        if gcd(x, m) != 1 {
            continue;
        }
        let mut acc = 1u64;
        for _ in 0..n {
            acc = acc * x % m;
        }
        count += u64::from(acc == 1);
    }
    count
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Conductor exponent large enough for characters of order dividing `n`.
fn conductor(s: &[u64], n: u64) -> u64 {
    s.iter()
        .map(|&p| {
            let mut v = 0;
            let mut k = n;
            while k % p == 0 {
                k /= p;
                v += 1;
            }
            p.pow(if p == 2 { v + 2 } else { v + 1 })
        })
        .product()
}

fn run_reciprocity(max: u64) -> Result<Vec<Record>> {
    let report = verify_reciprocity(max)?;
    let euler = |a: u64, p: u64| -> i32 {
        let mut acc = 1u64;
        for _ in 0..(p - 1) / 2 {
            acc = acc * (a % p) % p;
        }
        if acc == 1 {
            1
        } else {
            -1
        }
    };
    let mut legendre_bad = Vec::new();
    let mut symmetry_bad = Vec::new();
    for c in &report.pairs {
        let vanish = c.cup_pq.iter().all(|&x| x == 0);
        let vanish_qp = c.cup_qp.iter().all(|&x| x == 0);
        if vanish != (euler(c.p, c.q) == 1) {
            legendre_bad.push(format!("({},{})", c.p, c.q));
        }
        if vanish != vanish_qp || vanish_qp != (euler(c.q, c.p) == 1) {
            symmetry_bad.push(format!("({},{})", c.p, c.q));
        }
    }
    let n = report.pairs.len();
    Ok(vec![
        record(
            "legendre_correspondence",
            legendre_bad.is_empty(),
            format!("{n} pairs below {max}; mismatches: [{}]", legendre_bad.join(" ")),
        ),
        record(
            "reciprocity_symmetry",
            symmetry_bad.is_empty(),
            format!("{n} pairs below {max}; mismatches: [{}]", symmetry_bad.join(" ")),
        ),
    ])
}

fn run_group_orders() -> Result<Record> {
    let mut bad = Vec::new();
    let mut cases = 0;
    for s in subsets_up_to_two(&[2, 3, 5, 7, 11, 13]) {
        for n in [2u64, 3, 4, 6] {
            cases += 1;
            let h1 = cohomology_punctured(&s, n)?.group(1).order();
            let oracle = count_n_torsion(conductor(&s, n), n) as u128;
            if h1 != oracle {
                bad.push(format!("S={s:?} n={n}: {h1} vs {oracle}"));
            }
        }
    }
    Ok(record(
        "h1_order_vs_character_count",
        bad.is_empty(),
        format!("{cases} cases; mismatches: [{}]", bad.join("; ")),
    ))
}

fn run_torsor_census() -> Result<Record> {
    let mut bad = Vec::new();
    for s in subsets_up_to_two(&[2, 3, 5, 7, 11, 13]) {
        let count = enumerate_torsors(&s, 2)?.len() as u128;
        let h1 = cohomology_punctured(&s, 2)?.group(1).order();
        if count != h1 {
            bad.push(format!("S={s:?}: {count} vs {h1}"));
        }
    }
    Ok(record("torsor_census", bad.is_empty(), format!("mismatches: [{}]", bad.join("; "))))
}

fn run_product_formula(seed: u64, pairs: usize) -> Result<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..pairs {
        let mut pick = || loop {
            let x: i64 = rng.gen_range(-2000..=2000);
            if x != 0 {
                return Rational::from_integer(x.into());
            }
        };
        let (a, b) = (pick(), pick());
        let mut places = vec![Place::Real];
        places.extend(primes_below(2001).into_iter().map(Place::Finite));
        let mut product = 1;
        for v in places {
            product *= hilbert_symbol(&a, &b, v)?;
        }
        if product != 1 {
            bad.push(format!("({a},{b})"));
        }
    }
    Ok(record(
        "hilbert_product_formula",
        bad.is_empty(),
        format!("{pairs} seeded pairs; failures: [{}]", bad.join(" ")),
    ))
}

fn run_spec_z() -> Result<Record> {
    let p = cohomology_unpunctured(BaseField::Rationals, 2)?;
    let shape: Vec<Vec<u64>> = (0..6).map(|i| p.group(i).invariants().to_vec()).collect();
    let expect = vec![vec![2], vec![], vec![], vec![2], vec![2], vec![2]];
    Ok(record("spec_z_profile", shape == expect, format!("{shape:?}")))
}

fn run_narrow_table() -> Result<Record> {
    let mut bad = Vec::new();
    let mut count = 0;
    for m in 2i128..100 {
        if !is_squarefree(m)? {
            continue;
        }
        count += 1;
        let k = build_field(m)?;
        let eps = fundamental_unit(k)?;
        let norm = eps.norm();
        let factor = if norm == Rational::from_integer((-1).into()) { 1 } else { 2 };
        let (h_plus, h) = (narrow_class_group(k)?.order(), class_group(k)?.order());
        if h_plus != h * factor {
            bad.push(format!("m={m}: h+={h_plus} h={h} N(eps)={norm}"));
        }
    }
    let anchors = narrow_class_group(build_field(2)?)?.order() == 1
        && narrow_class_group(build_field(3)?)?.invariants() == [2];
    Ok(record(
        "narrow_class_table",
        bad.is_empty() && anchors,
        format!("{count} fields; anchors ok: {anchors}; mismatches: [{}]", bad.join("; ")),
    ))
}

fn run_well_definedness(seed: u64, instances: usize) -> Result<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = primes_below(40);
    let mut bad = Vec::new();
    for _ in 0..instances {
        let p = pool[rng.gen_range(0..pool.len())];
        let q = loop {
            let q = pool[rng.gen_range(0..pool.len())];
            if q != p {
                break q;
            }
        };
        let s = if p < q { vec![p, q] } else { vec![q, p] };
        let n = [2u64, 4, 6][rng.gen_range(0..3)];
        let basis = torsor_basis(&s)?;
        let y = basis[rng.gen_range(0..basis.len())];
        let z = basis[rng.gen_range(0..basis.len())];
        let tor = cs_torsion_n(&s, n)?;
        if tor.generators().is_empty() {
            continue;
        }
        let alpha = &tor.generators()[rng.gen_range(0..tor.generators().len())];
        let base = cup_value(&y, &z, alpha, &DescentChoices::default())?;
        for _ in 0..5 {
            let choices = DescentChoices::random(y.field().expect("basis torsors are quadratic"), &s, rng.gen());
            solve_descent_with(&y, alpha, n, &choices)?;
            let v = cup_value(&y, &z, alpha, &choices)?;
            if v != base {
                bad.push(format!("S={s:?} n={n} {y} {z}: {v} vs {base}"));
            }
        }
    }
    Ok(record(
        "descent_well_definedness",
        bad.is_empty(),
        format!("{instances} instances x 5 re-solves; failures: [{}]", bad.join("; ")),
    ))
}

/// Every check, in a fixed order.
pub fn run_all(max: u64, seed: u64) -> Result<Vec<Record>> {
    let mut out = run_reciprocity(max)?;
    out.push(run_group_orders()?);
    out.push(run_torsor_census()?);
    out.push(run_product_formula(seed, 100)?);
    out.push(run_spec_z()?);
    out.push(run_narrow_table()?);
    out.push(run_well_definedness(seed, 20)?);
    Ok(out)
}
