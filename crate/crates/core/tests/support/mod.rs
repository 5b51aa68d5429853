//! Shared generators and the Littlewood-Richardson oracle for integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use llt_core::shapes::partitions_of;
use llt_core::{Partition, RestrictedShape, SkewShape, SkewTuple};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of LR tableaux of shape `λ/μ` and content `ν`: semistandard fillings whose
/// reverse row reading word (top to bottom, right to left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let rows = lambda.len();
    let mut cells = Vec::new();
    for r in 1..=rows {
        for c in (mu.part(r) + 1..=lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut counts = vec![0usize; nu.len() + 2];
    fn rec(
        i: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        nu: &Partition,
        filling: &mut BTreeMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let hi = filling.get(&(r, c + 1)).copied().unwrap_or(usize::MAX);
        let lo = if r > 1 && c > mu.part(r - 1) { filling[&(r - 1, c)] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi.min(nu.len()) {
            if counts[v] >= nu.part(v) || (v > 1 && counts[v] + 1 > counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            filling.insert((r, c), v);
            total += rec(i + 1, cells, mu, nu, filling, counts);
            filling.remove(&(r, c));
            counts[v] -= 1;
        }
        total
    }
    rec(0, &cells, mu, nu, &mut filling, &mut counts)
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`.
pub fn skew_schur(outer: &Partition, inner: &Partition) -> BTreeMap<Partition, u64> {
    let n = outer.size() - inner.size();
    partitions_of(n)
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(outer, inner, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// Product of two Schur expansions.
pub fn schur_product(a: &BTreeMap<Partition, u64>, b: &BTreeMap<Partition, u64>) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            for lambda in partitions_of(la.size() + lb.size()) {
                let c = lr_coefficient(&lambda, la, lb);
                if c > 0 {
                    *out.entry(lambda).or_insert(0) += c * ca * cb;
                }
            }
        }
    }
    out
}

/// `Π_i s_{β^(i)}` expanded in Schur functions.
pub fn tuple_schur_product(beta: &SkewTuple) -> BTreeMap<Partition, u64> {
    let mut acc = BTreeMap::from([(Partition::empty(), 1u64)]);
    for comp in beta.components() {
        let (outer, inner) = comp.realize().unwrap();
        acc = schur_product(&acc, &skew_schur(&outer, &inner));
    }
    acc
}

/// A random partition inside an `rows × cols` box.
fn random_partition(r: &mut impl Rng, rows: usize, cols: usize) -> Partition {
    let mut parts = Vec::new();
    let mut max = cols;
    for _ in 0..rows {
        let x = r.random_range(0..=max);
        if x == 0 {
            break;
        }
        parts.push(x);
        max = x;
    }
    Partition::new(parts).unwrap()
}

/// A random 3-tuple of skew shapes with `1 ≤ |β| ≤ max_size`, components in a 3×3
/// box and translated by up to two diagonals.
pub fn random_tuple(r: &mut impl Rng, max_size: usize) -> SkewTuple {
    loop {
        let comps: Vec<SkewShape> = (0..3)
            .map(|_| {
                let outer = random_partition(r, 3, 3);
                let inner_parts: Vec<usize> = {
                    let mut v = Vec::new();
                    let mut max = usize::MAX;
                    for i in 1..=outer.len() {
                        let x = r.random_range(0..=outer.part(i).min(max));
                        v.push(x);
                        max = x;
                    }
                    while v.last() == Some(&0) {
                        v.pop();
                    }
                    v
                };
                let inner = Partition::new(inner_parts).unwrap();
                SkewShape::from_partitions(&outer, &inner, r.random_range(-2..=2)).unwrap()
            })
            .collect();
        let size: usize = comps.iter().map(SkewShape::size).sum();
        if (1..=max_size).contains(&size) {
            return SkewTuple::new(comps).unwrap();
        }
    }
}

/// Restricted shapes (as column lengths and carving) with at most `max_cells` cells,
/// no empty columns, and top row occupied.
pub fn restricted_shapes(max_cells: usize) -> Vec<RestrictedShape> {
    let mut out = Vec::new();
    for outer_size in 1..=3 * max_cells {
        for outer in partitions_of(outer_size) {
            if outer.len() > max_cells || outer.part(1) > max_cells {
                continue;
            }
            let cols = outer.parts().to_vec();
            let mut alpha = Vec::new();
            carvings(&cols, max_cells, &mut alpha, &mut |a| {
                out.push(RestrictedShape::new(outer.clone(), a.to_vec()).unwrap());
            });
        }
    }
    out
}

fn carvings(cols: &[usize], budget: usize, alpha: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let c = alpha.len();
    if c == cols.len() {
        let size: usize = cols.iter().zip(alpha.iter()).map(|(l, a)| l - a).sum();
        if size <= budget && alpha.first() == Some(&0) {
            f(alpha);
        }
        return;
    }
    let lo = alpha.last().copied().unwrap_or(0);
    for a in lo..cols[c] {
        alpha.push(a);
        let used: usize = cols.iter().zip(alpha.iter()).map(|(l, a)| l - a).sum();
        if used <= budget {
            carvings(cols, budget, alpha, f);
        }
        alpha.pop();
    }
}

/// Distinct ribbon-tileable `(μ, ν)` with `|μ/ν| ≤ max_cells`, built by adding random
/// ribbons to random small `ν`.
pub fn ribbon_pairs(r: &mut impl Rng, k: usize, max_cells: usize, want: usize) -> Vec<(Partition, Partition)> {
    let mut seen = BTreeSet::new();
    let mut attempts = 0;
    while seen.len() < want && attempts < 100 * want {
        attempts += 1;
        let nu = random_partition(r, 3, 3);
        let ribbons = r.random_range(1..=max_cells / k);
        let mut mu = nu.clone();
        let mut added = 0;
        for _ in 0..8 * ribbons {
            if added == ribbons {
                break;
            }
            let x = r.random_range(-5..=6);
            if let Some((next, _)) = mu.add_ribbon(k, x) {
                mu = next;
                added += 1;
            }
        }
        if added > 0 {
            seen.insert((mu, nu));
        }
    }
    seen.into_iter().collect()
}
