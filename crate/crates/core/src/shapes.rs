//! Partitions, cells, skew shapes with contents, ribbons, cores and quotients.
//!
//! Cells are 1-based in matrix (English) convention: rows grow southward, columns
//! eastward, and the content of `(r, c)` is `c - r`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub fn content(&self) -> i32 {
        self.col - self.row
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The two partial orders on cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    /// `(r,c) ≤ (r',c')` iff `r ≤ r'` and `c ≤ c'`.
    SouthEast,
    /// `(r,c) ≤ (r',c')` iff `r ≥ r'` and `c ≤ c'`.
    NorthEast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

pub fn cell_order(a: Cell, b: Cell, which: Order) -> CellOrder {
    if a == b {
        return CellOrder::Equal;
    }
    let le = |x: Cell, y: Cell| match which {
        Order::SouthEast => x.row <= y.row && x.col <= y.col,
        Order::NorthEast => x.row >= y.row && x.col <= y.col,
    };
    if le(a, b) {
        CellOrder::Less
    } else if le(b, a) {
        CellOrder::Greater
    } else {
        CellOrder::Incomparable
    }
}

/// Strict `a < b` in the given order.
pub fn cell_less(a: Cell, b: Cell, which: Order) -> bool {
    cell_order(a, b, which) == CellOrder::Less
}

/// An integer partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Strips zeros and checks that the parts are weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for c in 1..=p {
                out.push(Cell::new(i as i32 + 1, c as i32));
            }
        }
        out
    }

    pub fn contains_cell(&self, z: Cell) -> bool {
        z.row >= 1 && z.col >= 1 && (z.col as usize) <= self.part(z.row as usize)
    }

    /// `other ⊆ self` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Adds the unique addable cell of the given content, if there is one.
    pub fn add_cell(&self, content: i32) -> Option<Partition> {
        let len = self.len() as i64;
        for r in 1..=len + 1 {
            let p = self.part(r as usize) as i64;
            if p + 1 - r == content as i64 {
                let above = if r == 1 { i64::MAX } else { self.part(r as usize - 1) as i64 };
                if p < above {
                    let mut parts = self.parts.clone();
                    if r == len + 1 {
                        parts.push(1);
                    } else {
                        parts[r as usize - 1] += 1;
                    }
                    return Some(Partition { parts });
                }
                return None;
            }
        }
        None
    }

    /// Removes the unique removable cell of the given content, if there is one.
    pub fn remove_cell(&self, content: i32) -> Option<Partition> {
        for r in 1..=self.len() {
            let p = self.part(r);
            if p as i64 - r as i64 == content as i64 {
                if self.part(r + 1) < p {
                    let mut parts = self.parts.clone();
                    parts[r - 1] -= 1;
                    return Some(Partition::from_sorted(parts));
                }
                return None;
            }
        }
        None
    }

    /// The first `n` beta numbers `p_j - j` (requires `n ≥ len`), strictly decreasing.
    pub fn beta_numbers(&self, n: usize) -> Vec<i64> {
        (1..=n.max(self.len()))
            .map(|j| self.part(j) as i64 - j as i64)
            .collect()
    }

    fn from_beta_numbers(beads: &[i64]) -> Partition {
        let mut sorted = beads.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let parts = sorted
            .iter()
            .enumerate()
            .map(|(j, &b)| (b + j as i64 + 1) as usize)
            .collect();
        Partition::from_sorted(parts)
    }

    /// Adds the unique `k`-ribbon whose maximal content is `content`.
    ///
    /// On the bead model this moves the bead at `content - k` to `content`; the spin is
    /// the number of beads strictly in between.
    pub fn add_ribbon(&self, k: usize, content: i32) -> Option<(Partition, usize)> {
        assert!(k >= 1, "ribbon size must be positive");
        let (from, to) = (content as i64 - k as i64, content as i64);
        let n = self.bead_window(from.min(to));
        let mut beads = self.beta_numbers(n);
        let has = |x: i64, beads: &[i64]| x < -(n as i64) || beads.contains(&x);
        if !has(from, &beads) || has(to, &beads) {
            return None;
        }
        let spin = (from + 1..to).filter(|&x| has(x, &beads)).count();
        let pos = beads.iter().position(|&b| b == from)?;
        beads[pos] = to;
        Some((Partition::from_beta_numbers(&beads), spin))
    }

    /// Removes the unique `k`-ribbon whose maximal content is `content`.
    pub fn remove_ribbon(&self, k: usize, content: i32) -> Option<(Partition, usize)> {
        assert!(k >= 1, "ribbon size must be positive");
        let (from, to) = (content as i64, content as i64 - k as i64);
        let n = self.bead_window(to);
        let mut beads = self.beta_numbers(n);
        let has = |x: i64, beads: &[i64]| x < -(n as i64) || beads.contains(&x);
        if !has(from, &beads) || has(to, &beads) {
            return None;
        }
        let spin = (to + 1..from).filter(|&x| has(x, &beads)).count();
        let pos = beads.iter().position(|&b| b == from)?;
        beads[pos] = to;
        Some((Partition::from_beta_numbers(&beads), spin))
    }

    /// All removable `k`-ribbons as `(content, remaining partition, spin)`, by content.
    pub fn removable_ribbons(&self, k: usize) -> Vec<(i32, Partition, usize)> {
        let n = self.len();
        self.beta_numbers(n)
            .into_iter()
            .filter_map(|b| {
                let c = b as i32;
                self.remove_ribbon(k, c).map(|(p, s)| (c, p, s))
            })
            .collect()
    }

    /// Number of beta numbers needed so that every position `≥ lowest` is represented.
    fn bead_window(&self, lowest: i64) -> usize {
        self.len().max((-lowest).max(0) as usize + 1)
    }

    /// Per-runner bead data: runner `ρ` holds positions `≡ ρ (mod k)`.
    /// Returns, for each runner, the bead levels (descending) and the charge.
    fn abacus(&self, k: usize) -> Vec<(Vec<i64>, i64)> {
        let k_i = k as i64;
        let n = self.len().div_ceil(k) * k;
        let beads = self.beta_numbers(n);
        let base = (n / k) as i64;
        (0..k_i)
            .map(|rho| {
                let mut levels: Vec<i64> = beads
                    .iter()
                    .filter(|&&b| b.rem_euclid(k_i) == rho)
                    .map(|&b| b.div_euclid(k_i))
                    .collect();
                levels.sort_unstable_by(|a, b| b.cmp(a));
                let charge = levels.len() as i64 - base;
                (levels, charge)
            })
            .collect()
    }

    /// The `k`-core and `k`-quotient. Component `i` of the quotient lives on the runner
    /// of positions congruent to `i` mod `k`.
    pub fn core_and_quotient(&self, k: usize) -> (Partition, Vec<Partition>) {
        assert!(k >= 1, "k must be positive");
        let k_i = k as i64;
        let n = self.len().div_ceil(k) * k;
        let base = (n / k) as i64;
        let mut core_beads = Vec::with_capacity(n);
        let mut quotient = Vec::with_capacity(k);
        for (rho, (levels, charge)) in self.abacus(k).into_iter().enumerate() {
            let count = levels.len() as i64;
            for t in 0..count {
                core_beads.push(rho as i64 + k_i * (t - base));
            }
            let parts = levels
                .iter()
                .enumerate()
                .map(|(j, &lev)| (lev - charge + j as i64 + 1) as usize)
                .collect();
            quotient.push(Partition::from_sorted(parts));
        }
        (Partition::from_beta_numbers(&core_beads), quotient)
    }

    pub fn core(&self, k: usize) -> Partition {
        self.core_and_quotient(k).0
    }

    /// Charges `d_i` of the runners; the unique `k`-ribbon addable to the core on runner
    /// `i` has content `c_i = i + k·d_i`.
    pub fn runner_charges(&self, k: usize) -> Vec<i64> {
        self.abacus(k).into_iter().map(|(_, c)| c).collect()
    }

    pub fn is_core(&self, k: usize) -> bool {
        self.removable_ribbons(k).is_empty()
    }

    /// Inverse of [`Partition::core_and_quotient`].
    pub fn from_core_and_quotient(core: &Partition, quotient: &[Partition], k: usize) -> Result<Partition> {
        if quotient.len() != k {
            return Err(Error::invalid(format!("expected {k} quotient components, got {}", quotient.len())));
        }
        if !core.is_core(k) {
            return Err(Error::invalid(format!("{core} is not a {k}-core")));
        }
        let k_i = k as i64;
        let charges = core.runner_charges(k);
        // Give every runner `base + charge` beads, enough to hold its quotient component.
        let base = quotient
            .iter()
            .zip(&charges)
            .map(|(q, &c)| q.len() as i64 - c)
            .max()
            .unwrap_or(0)
            .max(0)
            + 1;
        let mut beads = Vec::new();
        for (rho, (q, &charge)) in quotient.iter().zip(&charges).enumerate() {
            for j in 1..=base + charge {
                let level = q.part(j as usize) as i64 - j + charge;
                beads.push(rho as i64 + k_i * level);
            }
        }
        Ok(Partition::from_beta_numbers(&beads))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A connected skew shape without 2×2 squares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    pub cells: Vec<Cell>,
    pub content: i32,
    pub spin: usize,
}

impl Ribbon {
    /// Interprets `outer / inner` as a ribbon, if it is one.
    pub fn from_skew(outer: &Partition, inner: &Partition) -> Option<Ribbon> {
        if !outer.contains(inner) {
            return None;
        }
        let cells: Vec<Cell> = outer.cells().into_iter().filter(|z| !inner.contains_cell(*z)).collect();
        if cells.is_empty() {
            return None;
        }
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        let has_square = cells.iter().any(|z| {
            set.contains(&Cell::new(z.row + 1, z.col))
                && set.contains(&Cell::new(z.row, z.col + 1))
                && set.contains(&Cell::new(z.row + 1, z.col + 1))
        });
        if has_square || !is_connected(&set) {
            return None;
        }
        let rows: BTreeSet<i32> = cells.iter().map(|z| z.row).collect();
        let content = cells.iter().map(|z| z.content()).max()?;
        Some(Ribbon {
            spin: rows.len() - 1,
            content,
            cells,
        })
    }
}

fn is_connected(set: &BTreeSet<Cell>) -> bool {
    let Some(&start) = set.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(z) = stack.pop() {
        for (dr, dc) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let y = Cell::new(z.row + dr, z.col + dc);
            if set.contains(&y) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == set.len()
}

/// A skew shape up to diagonal translation. The stored cells are normalised so that
/// the minimum row is 1 (contents are unchanged by this).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    cells: BTreeSet<Cell>,
}

impl SkewShape {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `outer / inner` with every content increased by `shift`.
    pub fn from_partitions(outer: &Partition, inner: &Partition, shift: i32) -> Result<Self> {
        if !outer.contains(inner) {
            return Err(Error::invalid(format!("{inner} is not contained in {outer}")));
        }
        let cells = outer
            .cells()
            .into_iter()
            .filter(|z| !inner.contains_cell(*z))
            .map(|z| Cell::new(z.row, z.col + shift));
        Ok(Self::normalized(cells.collect()))
    }

    /// Builds a shape from arbitrary cells, checking that they form a skew diagram.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let shape = Self::normalized(cells.into_iter().collect());
        shape.realize()?;
        Ok(shape)
    }

    fn normalized(cells: BTreeSet<Cell>) -> Self {
        let Some(min_row) = cells.iter().map(|z| z.row).min() else {
            return Self::empty();
        };
        let t = 1 - min_row;
        SkewShape {
            cells: cells.into_iter().map(|z| Cell::new(z.row + t, z.col + t)).collect(),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, z: Cell) -> bool {
        self.cells.contains(&z)
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Contents in row-major cell order (a valid order in which to add the cells).
    pub fn content_word(&self) -> Vec<i32> {
        self.cells.iter().map(|z| z.content()).collect()
    }

    /// Realises the shape as `outer / inner` with all cells at positive coordinates and
    /// contents unchanged. Fails if the cells do not form a skew diagram.
    pub fn realize(&self) -> Result<(Partition, Partition)> {
        if self.cells.is_empty() {
            return Ok((Partition::empty(), Partition::empty()));
        }
        let min_col = self.cells.iter().map(|z| z.col).min().unwrap_or(1);
        let t = (1 - min_col).max(0);
        let cells: Vec<Cell> = self.cells.iter().map(|z| Cell::new(z.row + t, z.col + t)).collect();
        let max_row = cells.iter().map(|z| z.row).max().unwrap_or(0) as usize;
        let mut outer = vec![0usize; max_row + 1];
        let mut inner = vec![0usize; max_row + 1];
        for r in (1..=max_row).rev() {
            let row: Vec<i32> = cells.iter().filter(|z| z.row as usize == r).map(|z| z.col).collect();
            let below = if r == max_row { 0 } else { outer[r + 1] };
            if row.is_empty() {
                outer[r] = below;
                inner[r] = below;
                continue;
            }
            let (lo, hi) = (*row.iter().min().unwrap() as usize, *row.iter().max().unwrap() as usize);
            if hi - lo + 1 != row.len() {
                return Err(Error::invalid("row of a skew shape is not contiguous"));
            }
            outer[r] = hi.max(below);
            inner[r] = lo - 1;
            if outer[r] != hi {
                return Err(Error::invalid("cells do not form a skew shape"));
            }
        }
        let outer = &outer[1..];
        let inner = &inner[1..];
        if inner.windows(2).any(|w| w[0] < w[1]) || outer.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("cells do not form a skew shape"));
        }
        Ok((Partition::from_sorted(outer.to_vec()), Partition::from_sorted(inner.to_vec())))
    }

    /// Equivalence as skew shapes with contents: a content- and `≤↘`-preserving bijection.
    pub fn is_equivalent(&self, other: &SkewShape) -> bool {
        crate::algebra::canonical_form(&self.content_word(), 1)
            == crate::algebra::canonical_form(&other.content_word(), 1)
    }
}

/// JSON form `{"outer": [...], "inner": [...], "shift": s}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewShapeJson {
    pub outer: Partition,
    #[serde(default)]
    pub inner: Partition,
    #[serde(default)]
    pub shift: i32,
}

impl TryFrom<SkewShapeJson> for SkewShape {
    type Error = Error;
    fn try_from(j: SkewShapeJson) -> Result<Self> {
        SkewShape::from_partitions(&j.outer, &j.inner, j.shift)
    }
}

impl From<&SkewShape> for SkewShapeJson {
    fn from(s: &SkewShape) -> Self {
        let (outer, inner) = s.realize().expect("stored shapes are valid");
        SkewShapeJson { outer, inner, shift: 0 }
    }
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SkewShapeJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SkewShapeJson::deserialize(d)?;
        SkewShape::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn zeros_are_stripped_and_order_checked() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn add_ribbon_examples() {
        assert_eq!(p(&[]).add_ribbon(3, 2), Some((p(&[3]), 0)));
        assert_eq!(p(&[]).add_ribbon(3, 1), Some((p(&[2, 1]), 1)));
        assert_eq!(p(&[]).add_ribbon(3, 0), Some((p(&[1, 1, 1]), 2)));
        assert_eq!(p(&[3]).add_ribbon(3, 2), None);
    }

    #[test]
    fn ribbon_removal_undoes_addition() {
        let base = p(&[4, 2, 2, 1]);
        for c in -8..8 {
            if let Some((bigger, spin)) = base.add_ribbon(3, c) {
                assert_eq!(bigger.remove_ribbon(3, c), Some((base.clone(), spin)));
                let r = Ribbon::from_skew(&bigger, &base).unwrap();
                assert_eq!(r.content, c);
                assert_eq!(r.spin, spin);
            }
        }
    }

    #[test]
    fn core_and_quotient_small_cases() {
        let lam = p(&[5, 3, 3, 1]);
        assert_eq!(lam.core_and_quotient(1), (p(&[]), vec![lam.clone()]));
        // (2,1) is itself a 3-ribbon, so its 3-core is empty.
        assert_eq!(p(&[2, 1]).core_and_quotient(3), (p(&[]), vec![p(&[]), p(&[1]), p(&[])]));
        // ... while it is a 2-core.
        assert_eq!(p(&[2, 1]).core_and_quotient(2), (p(&[2, 1]), vec![p(&[]), p(&[])]));
        assert_eq!(p(&[3]).core_and_quotient(3), (p(&[]), vec![p(&[]), p(&[]), p(&[1])]));
    }

    #[test]
    fn core_quotient_roundtrip() {
        for n in 0..=10 {
            for lam in partitions_of(n) {
                for k in 1..=4 {
                    let (core, quot) = lam.core_and_quotient(k);
                    let q_size: usize = quot.iter().map(|q| q.size()).sum();
                    assert_eq!(core.size() + k * q_size, lam.size());
                    assert!(core.is_core(k));
                    assert_eq!(Partition::from_core_and_quotient(&core, &quot, k).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn cell_order_examples() {
        use CellOrder::*;
        assert_eq!(cell_order(Cell::new(1, 1), Cell::new(2, 2), Order::SouthEast), Less);
        assert_eq!(cell_order(Cell::new(2, 1), Cell::new(1, 2), Order::NorthEast), Less);
        assert_eq!(cell_order(Cell::new(1, 2), Cell::new(2, 1), Order::SouthEast), Incomparable);
        assert_eq!(cell_order(Cell::new(3, 3), Cell::new(3, 3), Order::NorthEast), Equal);
    }

    #[test]
    fn skew_shape_realization_keeps_contents() {
        let s = SkewShape::from_partitions(&p(&[3, 3]), &p(&[2, 1]), 0).unwrap();
        let contents: Vec<i32> = s.cells().map(|z| z.content()).collect();
        assert_eq!(contents, vec![2, 0, 1]);
        let (o, i) = s.realize().unwrap();
        let again = SkewShape::from_partitions(&o, &i, 0).unwrap();
        assert_eq!(again, s);

        let shifted = SkewShape::from_partitions(&p(&[1]), &p(&[]), -3).unwrap();
        assert_eq!(shifted.content_word(), vec![-3]);
        let (o, i) = shifted.realize().unwrap();
        assert_eq!(SkewShape::from_partitions(&o, &i, 0).unwrap(), shifted);

        assert!(SkewShape::from_cells([Cell::new(1, 1), Cell::new(1, 3)]).is_err());
        assert!(SkewShape::from_cells([Cell::new(1, 3), Cell::new(3, 1)]).is_ok());
    }

    #[test]
    fn equivalent_realizations_of_disconnected_shape() {
        let a = SkewShape::from_cells([Cell::new(1, 3), Cell::new(3, 1)]).unwrap();
        let b = SkewShape::from_cells([Cell::new(1, 3), Cell::new(4, 2)]).unwrap();
        assert_ne!(a, b);
        assert!(a.is_equivalent(&b));
        let c = SkewShape::from_cells([Cell::new(1, 1), Cell::new(2, 1)]).unwrap();
        assert!(!a.is_equivalent(&c));
    }

    #[test]
    fn partitions_of_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
