//! Finite abelian groups given by generators and relations, reduced to
//! invariant-factor form with a Smith normal form over `Z`.

use std::fmt;

/// Smith normal form of an integer matrix, keeping the column transform.
///
/// For relation rows `A` this finds unimodular `U`, `V` with `U A V = D`.
/// Only `V` and `V^{-1}` are retained: a row vector `x` in the ambient
/// lattice has coordinates `x V` in the diagonal basis.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<i128>,
    pub col_transform: Vec<Vec<i128>>,
    pub col_transform_inv: Vec<Vec<i128>>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

impl SmithForm {
    pub fn compute(relations: &[Vec<i128>], dim: usize) -> Self {
        let mut a: Vec<Vec<i128>> = relations.to_vec();
        for row in &a {
            assert_eq!(row.len(), dim, "relation has wrong length");
        }
        let rows = a.len();
        let mut v = identity(dim);
        let mut v_inv = identity(dim);

        // column op: col_j += k * col_i  (V gets the same; V^{-1} row_i -= k row_j)
        let add_col = |a: &mut Vec<Vec<i128>>,
                       v: &mut Vec<Vec<i128>>,
                       v_inv: &mut Vec<Vec<i128>>,
                       i: usize,
                       j: usize,
                       k: i128| {
            if k == 0 {
                return;
            }
            for row in a.iter_mut() {
                row[j] += k * row[i];
            }
            for row in v.iter_mut() {
                row[j] += k * row[i];
            }
            let rj = v_inv[j].clone();
            for (x, y) in v_inv[i].iter_mut().zip(rj.iter()) {
                *x -= k * y;
            }
        };
        let swap_col = |a: &mut Vec<Vec<i128>>,
                        v: &mut Vec<Vec<i128>>,
                        v_inv: &mut Vec<Vec<i128>>,
                        i: usize,
                        j: usize| {
            if i == j {
                return;
            }
            for row in a.iter_mut() {
                row.swap(i, j);
            }
            for row in v.iter_mut() {
                row.swap(i, j);
            }
            v_inv.swap(i, j);
        };
        let negate_col = |a: &mut Vec<Vec<i128>>,
                          v: &mut Vec<Vec<i128>>,
                          v_inv: &mut Vec<Vec<i128>>,
                          i: usize| {
            for row in a.iter_mut() {
                row[i] = -row[i];
            }
            for row in v.iter_mut() {
                row[i] = -row[i];
            }
            for x in v_inv[i].iter_mut() {
                *x = -*x;
            }
        };

        let steps = rows.min(dim);
        let mut t = 0;
        while t < steps {
            // pivot: smallest nonzero |entry| in the trailing block, first in
            // row-major order on ties
            let mut pivot: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && pivot.is_none_or(|(pi, pj)| x.abs() < a[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            swap_col(&mut a, &mut v, &mut v_inv, t, pj);
            loop {
                let p = a[t][t];
                let mut dirty = false;
                for i in t + 1..rows {
                    let q = a[i][t].div_euclid(p);
                    if q != 0 {
                        let pivot_row = a[t].clone();
                        for (x, y) in a[i].iter_mut().zip(pivot_row.iter()) {
                            *x -= q * y;
                        }
                    }
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
                for j in t + 1..dim {
                    let q = a[t][j].div_euclid(p);
                    add_col(&mut a, &mut v, &mut v_inv, t, j, -q);
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
                if !dirty {
                    // divisibility of the trailing block
                    let bad = (t + 1..rows)
                        .flat_map(|i| (t + 1..dim).map(move |j| (i, j)))
                        .find(|&(i, j)| a[i][j] % p != 0);
                    match bad {
                        None => break,
                        Some((i, _)) => {
                            let src = a[i].clone();
                            for (x, y) in a[t].iter_mut().zip(src.iter()) {
                                *x += y;
                            }
                            continue;
                        }
                    }
                }
                // move the smallest remaining entry of row/col t to the pivot
                let mut best = (t, t);
                for i in t..rows {
                    if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..dim {
                    if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.1 == t {
                    a.swap(t, best.0);
                } else {
                    swap_col(&mut a, &mut v, &mut v_inv, t, best.1);
                }
            }
            if a[t][t] < 0 {
                negate_col(&mut a, &mut v, &mut v_inv, t);
            }
            t += 1;
        }
        let diagonal = (0..dim)
            .map(|i| if i < rows { a[i][i] } else { 0 })
            .collect();
        SmithForm {
            diagonal,
            col_transform: v,
            col_transform_inv: v_inv,
        }
    }
}

/// Finite quotient `Z^dim / <relations>` in invariant-factor coordinates.
#[derive(Debug, Clone)]
pub struct Presentation {
    dim: usize,
    smith: SmithForm,
    /// diagonal positions with factor > 1, in increasing order of factor
    kept: Vec<usize>,
}

impl Presentation {
    /// Build from relation rows; the quotient must be finite.
    pub fn new(dim: usize, relations: &[Vec<i128>]) -> Self {
        let smith = SmithForm::compute(relations, dim);
        assert!(
            smith.diagonal.iter().all(|&d| d != 0),
            "presentation has a free part"
        );
        let mut kept: Vec<usize> = (0..dim).filter(|&i| smith.diagonal[i] > 1).collect();
        kept.sort_by_key(|&i| (smith.diagonal[i], i));
        Presentation { dim, smith, kept }
    }

    /// Ambient coordinates given by per-coordinate moduli plus extra
    /// relations.
    pub fn with_moduli(moduli: &[i128], relations: &[Vec<i128>]) -> Self {
        let dim = moduli.len();
        let mut rows: Vec<Vec<i128>> = moduli
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let mut r = vec![0; dim];
                r[i] = m;
                r
            })
            .collect();
        rows.extend(relations.iter().cloned());
        Self::new(dim, &rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn invariants(&self) -> Vec<u64> {
        self.kept
            .iter()
            .map(|&i| self.smith.diagonal[i] as u64)
            .collect()
    }

    /// Coordinates of an ambient vector in the invariant basis.
    pub fn dlog(&self, x: &[i128]) -> Vec<u64> {
        assert_eq!(x.len(), self.dim);
        self.kept
            .iter()
            .map(|&j| {
                let d = self.smith.diagonal[j];
                let y: i128 = x
                    .iter()
                    .zip(self.smith.col_transform.iter())
                    .map(|(xi, row)| (xi * row[j]).rem_euclid(d))
                    .sum();
                y.rem_euclid(d) as u64
            })
            .collect()
    }

    /// Ambient representative of the `k`-th invariant generator.
    pub fn generator(&self, k: usize) -> Vec<i128> {
        self.smith.col_transform_inv[self.kept[k]].clone()
    }

    /// Ambient representative of a coordinate vector.
    pub fn element(&self, coords: &[u64]) -> Vec<i128> {
        let mut out = vec![0i128; self.dim];
        for (k, &c) in coords.iter().enumerate() {
            for (o, g) in out.iter_mut().zip(self.generator(k)) {
                *o += c as i128 * g;
            }
        }
        out
    }
}

/// A finite abelian group `Z/d_1 x ... x Z/d_k` (`d_i | d_{i+1}`, all
/// `d_i > 1`) with one carrier object per invariant generator.
#[derive(Debug, Clone)]
pub struct FiniteAbelianGroup<C> {
    invariants: Vec<u64>,
    generators: Vec<C>,
    presentation: Option<Presentation>,
}

impl<C> FiniteAbelianGroup<C> {
    pub fn from_presentation(presentation: Presentation, generators: Vec<C>) -> Self {
        let invariants = presentation.invariants();
        assert_eq!(invariants.len(), generators.len());
        FiniteAbelianGroup {
            invariants,
            generators,
            presentation: Some(presentation),
        }
    }

    /// Group given directly in invariant-factor form; `dlog` is the
    /// identity on coordinate vectors.
    pub fn from_invariants(invariants: Vec<u64>, generators: Vec<C>) -> Self {
        assert_eq!(invariants.len(), generators.len());
        assert!(invariants.iter().all(|&d| d > 1));
        assert!(invariants.windows(2).all(|w| w[1] % w[0] == 0));
        FiniteAbelianGroup {
            invariants,
            generators,
            presentation: None,
        }
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            invariants: Vec::new(),
            generators: Vec::new(),
            presentation: None,
        }
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn generators(&self) -> &[C] {
        &self.generators
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    pub fn order(&self) -> u128 {
        self.invariants.iter().map(|&d| d as u128).product()
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn exponent(&self) -> u64 {
        self.invariants.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Discrete log of an ambient vector (for groups built from a
    /// presentation) or reduction of a coordinate vector (otherwise).
    pub fn dlog_ambient(&self, x: &[i128]) -> Vec<u64> {
        match &self.presentation {
            Some(p) => p.dlog(x),
            None => x
                .iter()
                .zip(&self.invariants)
                .map(|(&c, &d)| c.rem_euclid(d as i128) as u64)
                .collect(),
        }
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.invariants)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    pub fn scale(&self, x: &[u64], k: i128) -> Vec<u64> {
        x.iter()
            .zip(&self.invariants)
            .map(|(&a, &d)| (a as i128 * k).rem_euclid(d as i128) as u64)
            .collect()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.invariants.len()]
    }

    /// Every element as a coordinate vector, in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.invariants {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..d).map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// Same invariants, new carriers.
    pub fn map_generators<D>(self, f: impl FnMut(C) -> D) -> FiniteAbelianGroup<D> {
        FiniteAbelianGroup {
            invariants: self.invariants,
            generators: self.generators.into_iter().map(f).collect(),
            presentation: self.presentation,
        }
    }
}

/// Invariants of `A/nA` for `A` with the given invariants.
pub fn quotient_invariants(invariants: &[u64], n: u64) -> Vec<u64> {
    normalize_invariants(invariants.iter().map(|&d| gcd_u64(d, n)).collect())
}

/// Invariant-factor form of a list of cyclic orders (drops 1s, fixes the
/// divisibility chain).
pub fn normalize_invariants(orders: Vec<u64>) -> Vec<u64> {
    let moduli: Vec<i128> = orders.iter().map(|&d| d.max(1) as i128).collect();
    if moduli.is_empty() {
        return Vec::new();
    }
    Presentation::with_moduli(&moduli, &[]).invariants()
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

impl<C> fmt::Display for FiniteAbelianGroup<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.invariants.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclic_products_normalize() {
        assert_eq!(normalize_invariants(vec![2, 3]), vec![6]);
        assert_eq!(normalize_invariants(vec![4, 6]), vec![2, 12]);
        assert_eq!(normalize_invariants(vec![1, 1]), Vec::<u64>::new());
        assert_eq!(quotient_invariants(&[2, 12], 4), vec![2, 4]);
    }

    #[test]
    fn quotient_by_relation() {
        // Z/2 x Z/4 modulo (1, 2)
        let p = Presentation::with_moduli(&[2, 4], &[vec![1, 2]]);
        assert_eq!(p.invariants(), vec![4]);
        assert_eq!(p.dlog(&[1, 2]), vec![0]);
        let g = p.generator(0);
        assert_eq!(p.dlog(&g), vec![1]);
    }

    proptest! {
        #[test]
        fn dlog_is_a_homomorphism(
            moduli in prop::collection::vec(1i128..12, 1..4),
            rel in prop::collection::vec(-6i128..6, 4),
            x in prop::collection::vec(-20i128..20, 4),
            y in prop::collection::vec(-20i128..20, 4),
        ) {
            let dim = moduli.len();
            let rel: Vec<i128> = rel[..dim].to_vec();
            let p = Presentation::with_moduli(&moduli, std::slice::from_ref(&rel));
            let g = FiniteAbelianGroup::from_presentation(p.clone(), vec![(); p.invariants().len()]);
            let (x, y) = (&x[..dim], &y[..dim]);
            let sum: Vec<i128> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            prop_assert_eq!(g.dlog_ambient(&sum), g.add(&g.dlog_ambient(x), &g.dlog_ambient(y)));
            prop_assert!(g.dlog_ambient(&rel).iter().all(|&c| c == 0));
            for k in 0..g.rank() {
                let mut unit = vec![0u64; g.rank()];
                unit[k] = 1;
                prop_assert_eq!(g.dlog_ambient(&p.generator(k)), unit);
            }
            // order equals |det| of the full relation lattice
            let brute: u128 = {
                let mut seen = std::collections::BTreeSet::new();
                let total: i128 = moduli.iter().product();
                for idx in 0..total {
                    let mut v = Vec::new();
                    let mut r = idx;
                    for &m in &moduli { v.push(r % m); r /= m; }
                    seen.insert(g.dlog_ambient(&v));
                }
                seen.len() as u128
            };
            prop_assert_eq!(g.order(), brute);
        }
    }
}
