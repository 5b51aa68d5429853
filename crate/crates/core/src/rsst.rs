//! Restricted square strict tableaux (RSST): validity, arrows, square respecting
//! reading words, `sqread`, statistics and enumeration.
//!
//! A restricted shape is written `λ' \ α'`: column `c` holds rows `α_c+1 ..= λ_c`.
//! Cells are 1-based `(row, col)`; `z <↗ z'` means `z` is weakly south and weakly west
//! of `z'`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{cell_less, Cell, Order, Partition};
use crate::words::{is_nonzero_word, Letter, Word};

/// Cap on the number of reading words produced by [`Rsst::reading_orders`].
pub const DEFAULT_READING_CAP: usize = 2_000_000;

/// A lower order ideal for `<↗` of a partition diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShapeJson", into = "ShapeJson")]
pub struct RestrictedShape {
    outer: Partition,
    carved: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ShapeJson {
    outer: Vec<usize>,
    #[serde(default)]
    carved: Vec<usize>,
}

impl TryFrom<ShapeJson> for RestrictedShape {
    type Error = Error;
    fn try_from(j: ShapeJson) -> Result<Self> {
        RestrictedShape::new(Partition::new(j.outer)?, j.carved)
    }
}

impl From<RestrictedShape> for ShapeJson {
    fn from(s: RestrictedShape) -> Self {
        ShapeJson {
            outer: s.outer.parts().to_vec(),
            carved: s.carved,
        }
    }
}

impl RestrictedShape {
    /// `outer` lists column lengths `λ_c`; `carved` lists the number `α_c` of cells
    /// removed from the top of column `c` (missing entries are zero).
    pub fn new(outer: Partition, mut carved: Vec<usize>) -> Result<Self> {
        if carved.len() > outer.len() {
            if carved[outer.len()..].iter().any(|&a| a != 0) {
                return Err(Error::invalid("carved composition is longer than the outer shape"));
            }
            carved.truncate(outer.len());
        }
        carved.resize(outer.len(), 0);
        for (c, &a) in carved.iter().enumerate() {
            if a > outer.parts()[c] {
                return Err(Error::invalid(format!("column {} carves more cells than it has", c + 1)));
            }
        }
        for c in 0..carved.len() {
            if carved[c] < outer.parts()[c] && carved[..c].iter().any(|&a| a > carved[c]) {
                return Err(Error::invalid(format!(
                    "not a restricted shape: column {} is carved less than a column to its west",
                    c + 1
                )));
            }
        }
        Ok(RestrictedShape { outer, carved })
    }

    /// The ordinary shape with row lengths `rows`.
    pub fn from_rows(rows: &Partition) -> Self {
        let outer = rows.conjugate();
        let carved = vec![0; outer.len()];
        RestrictedShape { outer, carved }
    }

    /// Column lengths `λ_c`.
    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn carved(&self) -> &[usize] {
        &self.carved
    }

    pub fn num_columns(&self) -> usize {
        self.outer.len()
    }

    pub fn contains(&self, z: Cell) -> bool {
        if z.col < 1 || z.row < 1 || z.col as usize > self.outer.len() {
            return false;
        }
        let c = z.col as usize - 1;
        (z.row as usize) > self.carved[c] && (z.row as usize) <= self.outer.parts()[c]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = Vec::new();
        for c in 0..self.outer.len() {
            for r in self.carved[c] + 1..=self.outer.parts()[c] {
                out.push(Cell::new(r as i32, c as i32 + 1));
            }
        }
        out.sort();
        out
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.carved.iter().sum::<usize>()
    }

    /// Whether every column is uncarved, i.e. an ordinary partition shape.
    pub fn is_ordinary(&self) -> bool {
        self.carved.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for RestrictedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}' \\ (", self.outer)?;
        for (i, a) in self.carved.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")'")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArrowKind {
    /// From the southeast cell `a+3` to the northwest cell `a`; southwest holds `a+2`.
    NorthWest,
    /// From the northwest cell `a` to the southeast cell `a+3`; southwest holds `a+1`.
    SouthEast,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub tail: Cell,
    pub head: Cell,
    pub kind: ArrowKind,
}

/// A filled restricted shape. Construction does not check the RSST conditions; see
/// [`Rsst::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rsst {
    shape: RestrictedShape,
    entries: BTreeMap<Cell, Letter>,
}

#[derive(Serialize, Deserialize)]
struct RsstJson {
    shape: RestrictedShape,
    rows: Vec<Vec<Option<Letter>>>,
}

impl Serialize for Rsst {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RsstJson {
            shape: self.shape.clone(),
            rows: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rsst {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RsstJson::deserialize(d)?;
        Rsst::from_rows(j.shape, &j.rows).map_err(serde::de::Error::custom)
    }
}

impl Rsst {
    pub fn new(shape: RestrictedShape, entries: BTreeMap<Cell, Letter>) -> Result<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() || cells.iter().any(|z| !entries.contains_key(z)) {
            return Err(Error::invalid("entries do not match the cells of the shape"));
        }
        Ok(Rsst { shape, entries })
    }

    /// Rows listed north to south, `None` for cells outside the shape.
    pub fn from_rows(shape: RestrictedShape, rows: &[Vec<Option<Letter>>]) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                let z = Cell::new(r as i32 + 1, c as i32 + 1);
                match (*v, shape.contains(z)) {
                    (Some(x), true) => {
                        entries.insert(z, x);
                    }
                    (None, false) => {}
                    (Some(_), false) => return Err(Error::invalid(format!("entry at {z} outside the shape"))),
                    (None, true) => return Err(Error::invalid(format!("missing entry at {z}"))),
                }
            }
        }
        Rsst::new(shape, entries)
    }

    /// A tableau given by left-justified rows, north to south. Row lengths need not
    /// decrease; the restricted shape is read off from which rows reach each column.
    pub fn from_partition_rows(rows: &[Vec<Letter>]) -> Result<Self> {
        let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut outer = Vec::with_capacity(ncols);
        let mut carved = Vec::with_capacity(ncols);
        for c in 0..ncols {
            let present: Vec<usize> = (0..rows.len()).filter(|&r| rows[r].len() > c).collect();
            let (first, last) = (present[0], *present.last().expect("nonempty"));
            if last - first + 1 != present.len() {
                return Err(Error::invalid(format!("column {} is not contiguous", c + 1)));
            }
            outer.push(last + 1);
            carved.push(first);
        }
        let shape = RestrictedShape::new(Partition::new(outer)?, carved)?;
        let rows: Vec<Vec<Option<Letter>>> = rows.iter().map(|r| r.iter().map(|&x| Some(x)).collect()).collect();
        Rsst::from_rows(shape, &rows)
    }

    pub fn shape(&self) -> &RestrictedShape {
        &self.shape
    }

    pub fn entries(&self) -> &BTreeMap<Cell, Letter> {
        &self.entries
    }

    pub fn entry(&self, z: Cell) -> Option<Letter> {
        self.entries.get(&z).copied()
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Rows north to south, padded with `None` on the west where columns are carved.
    pub fn rows(&self) -> Vec<Vec<Option<Letter>>> {
        let nrows = self.entries.keys().map(|z| z.row).max().unwrap_or(0);
        (1..=nrows)
            .map(|r| {
                let last = self.entries.keys().filter(|z| z.row == r).map(|z| z.col).max().unwrap_or(0);
                (1..=last).map(|c| self.entry(Cell::new(r, c))).collect()
            })
            .collect()
    }

    /// Sorted entries.
    pub fn sorted_entries(&self) -> Word {
        let mut v: Word = self.entries.values().copied().collect();
        v.sort_unstable();
        v
    }

    /// Whether rows and columns strictly increase and `R_z + 3 ≤ R_z'` for `z <↘ z'`
    /// in different rows and columns.
    pub fn validate(&self) -> bool {
        let cells: Vec<(Cell, Letter)> = self.entries.iter().map(|(z, v)| (*z, *v)).collect();
        cells.iter().all(|&(z, a)| cells.iter().all(|&(w, b)| pair_ok(z, a, w, b)))
    }

    /// All arrows, sorted.
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::new();
        for (&nw, &a) in &self.entries {
            let sw = Cell::new(nw.row + 1, nw.col);
            let se = Cell::new(nw.row + 1, nw.col + 1);
            let (Some(s), Some(e)) = (self.entry(sw), self.entry(se)) else {
                continue;
            };
            if e != a + 3 {
                continue;
            }
            if let Some(b) = self.entry(Cell::new(nw.row, nw.col + 1)) {
                if b != a + 1 && b != a + 2 {
                    continue;
                }
            }
            if s == a + 2 {
                out.push(Arrow {
                    tail: se,
                    head: nw,
                    kind: ArrowKind::NorthWest,
                });
            } else if s == a + 1 {
                out.push(Arrow {
                    tail: nw,
                    head: se,
                    kind: ArrowKind::SouthEast,
                });
            }
        }
        out.sort();
        out
    }

    /// Cells of `sqread`, in reading order.
    pub fn sqread_cells(&self) -> Vec<Cell> {
        let nw_tails: BTreeSet<Cell> = self
            .arrows()
            .into_iter()
            .filter(|a| a.kind == ArrowKind::NorthWest)
            .map(|a| a.tail)
            .collect();
        let mut diagonals: BTreeMap<i32, Vec<Cell>> = BTreeMap::new();
        for &z in self.entries.keys() {
            diagonals.entry(z.content()).or_default().push(z);
        }
        let mut out = Vec::with_capacity(self.entries.len());
        for cells in diagonals.values() {
            // `cells` is sorted by row.
            out.extend(cells.iter().rev().filter(|z| nw_tails.contains(z)));
            out.extend(cells.iter().filter(|z| !nw_tails.contains(z)));
        }
        out
    }

    /// The square respecting reading word read diagonal by diagonal from the southwest.
    pub fn sqread(&self) -> Word {
        self.sqread_cells().iter().map(|z| self.entries[z]).collect()
    }

    /// Cell orders of all reading words (square respecting ones if requested), each a
    /// linear extension of `<↗` plus the arrow edges. Fails when more than `cap`
    /// orders exist.
    pub fn reading_orders(&self, square_respecting: bool, cap: usize) -> Result<Vec<Vec<Cell>>> {
        let cells: Vec<Cell> = self.entries.keys().copied().collect();
        let n = cells.len();
        if n > 64 {
            return Err(Error::guard("cells in a tableau for reading-word enumeration", 64));
        }
        let pos: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, z)| (*z, i)).collect();
        let mut preds = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if cell_less(cells[i], cells[j], Order::NorthEast) {
                    preds[j] |= 1 << i;
                }
            }
        }
        if square_respecting {
            for a in self.arrows() {
                preds[pos[&a.head]] |= 1 << pos[&a.tail];
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        extend_orders(&cells, &preds, 0, &mut cur, &mut out, cap)?;
        Ok(out)
    }

    pub fn reading_words(&self, square_respecting: bool, cap: usize) -> Result<Vec<Word>> {
        Ok(self
            .reading_orders(square_respecting, cap)?
            .into_iter()
            .map(|o| o.iter().map(|z| self.entries[z]).collect())
            .collect())
    }

    /// Whether `w`, read with the given cell order, is a square respecting reading word.
    pub fn is_square_respecting_order(&self, order: &[Cell]) -> bool {
        if order.len() != self.entries.len() {
            return false;
        }
        let pos: BTreeMap<Cell, usize> = order.iter().enumerate().map(|(i, z)| (*z, i)).collect();
        if pos.len() != order.len() || order.iter().any(|z| !self.entries.contains_key(z)) {
            return false;
        }
        let cells: Vec<Cell> = order.to_vec();
        for &a in &cells {
            for &b in &cells {
                if cell_less(a, b, Order::NorthEast) && pos[&a] > pos[&b] {
                    return false;
                }
            }
        }
        self.arrows().iter().all(|a| pos[&a.tail] < pos[&a.head])
    }

    /// Whether some assignment of this tableau's cells to the letters of `w` is a
    /// square respecting reading word.
    pub fn has_square_respecting_reading(&self, w: &[Letter], cap: usize) -> Result<bool> {
        Ok(self.reading_words(true, cap)?.iter().any(|v| v == w))
    }

    /// `↗`-maximal cells.
    pub fn ne_maximal_cells(&self) -> Vec<Cell> {
        self.entries
            .keys()
            .copied()
            .filter(|&z| !self.entries.keys().any(|&w| cell_less(z, w, Order::NorthEast)))
            .collect()
    }

    /// `↗`-maximal cells that are not arrow tails.
    pub fn nontail_removable_cells(&self) -> Vec<Cell> {
        let tails: BTreeSet<Cell> = self.arrows().iter().map(|a| a.tail).collect();
        self.ne_maximal_cells().into_iter().filter(|z| !tails.contains(z)).collect()
    }

    /// The 3-descent multiset: pairs `(T_z, T_z')` with `T_z - T_z' = 3` and either
    /// `z <↗ z'` or a `↖` arrow from `z` to `z'`; sorted.
    pub fn desi3(&self) -> Vec<(Letter, Letter)> {
        let nw: BTreeSet<(Cell, Cell)> = self
            .arrows()
            .into_iter()
            .filter(|a| a.kind == ArrowKind::NorthWest)
            .map(|a| (a.tail, a.head))
            .collect();
        let mut out = Vec::new();
        for (&z, &a) in &self.entries {
            for (&w, &b) in &self.entries {
                if a - b == 3 && (cell_less(z, w, Order::NorthEast) || nw.contains(&(z, w))) {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The 3-inversion number: pairs `z <↗ z'` with `0 < T_z - T_z' < 3`.
    pub fn invi3(&self) -> usize {
        let mut n = 0;
        for (&z, &a) in &self.entries {
            for (&w, &b) in &self.entries {
                let d = a - b;
                if 0 < d && d < 3 && cell_less(z, w, Order::NorthEast) {
                    n += 1;
                }
            }
        }
        n
    }

    /// Whether the square respecting reading words survive in Lam's quotient for `k = 3`.
    pub fn is_nonzero(&self) -> bool {
        is_nonzero_word(&self.sqread(), 3)
    }

    /// The tableau with entries replaced by `1..n` in increasing order, ties broken by
    /// [`sqread`](Rsst::sqread) position.
    pub fn standardized(&self) -> Rsst {
        let order = self.sqread_cells();
        let mut idx: Vec<usize> = (0..order.len()).collect();
        idx.sort_by_key(|&i| (self.entries[&order[i]], i));
        let mut entries = BTreeMap::new();
        for (rank, &i) in idx.iter().enumerate() {
            entries.insert(order[i], rank as Letter + 1);
        }
        Rsst {
            shape: self.shape.clone(),
            entries,
        }
    }
}

impl fmt::Display for Rsst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|v| v.map_or_else(|| ".".to_string(), |x| x.to_string()))
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn pair_ok(z: Cell, a: Letter, w: Cell, b: Letter) -> bool {
    if z == w {
        return true;
    }
    if z.col == w.col && z.row < w.row {
        return a < b;
    }
    if z.row == w.row && z.col < w.col {
        return a < b;
    }
    if z.row < w.row && z.col < w.col {
        return a + 3 <= b;
    }
    true
}

fn extend_orders(
    cells: &[Cell],
    preds: &[u64],
    used: u64,
    cur: &mut Vec<Cell>,
    out: &mut Vec<Vec<Cell>>,
    cap: usize,
) -> Result<()> {
    if cur.len() == cells.len() {
        if out.len() >= cap {
            return Err(Error::guard("number of reading words", cap));
        }
        out.push(cur.clone());
        return Ok(());
    }
    for i in 0..cells.len() {
        if used & (1 << i) == 0 && preds[i] & !used == 0 {
            cur.push(cells[i]);
            extend_orders(cells, preds, used | (1 << i), cur, out, cap)?;
            cur.pop();
        }
    }
    Ok(())
}

/// What to enumerate: every RSST of `shape` agreeing with `fixed`, whose other cells
/// take values in `[1, n_c]` (column `c`) when `column_bounds` is given, and whose
/// sorted entries equal `content` when given.
#[derive(Clone, Debug)]
pub struct EnumerationSpec {
    pub shape: RestrictedShape,
    pub fixed: BTreeMap<Cell, Letter>,
    pub column_bounds: Option<Vec<i64>>,
    pub content: Option<Word>,
}

impl EnumerationSpec {
    /// Ordinary shape with row lengths `rows` and column flags `n_1, n_2, …`.
    pub fn flagged(rows: &Partition, flags: &[i64]) -> Self {
        EnumerationSpec {
            shape: RestrictedShape::from_rows(rows),
            fixed: BTreeMap::new(),
            column_bounds: Some(flags.to_vec()),
            content: None,
        }
    }

    /// Ordinary shape with row lengths `rows` and sorted entries `content`.
    pub fn with_content(rows: &Partition, content: &[Letter]) -> Self {
        let mut c = content.to_vec();
        c.sort_unstable();
        EnumerationSpec {
            shape: RestrictedShape::from_rows(rows),
            fixed: BTreeMap::new(),
            column_bounds: None,
            content: Some(c),
        }
    }
}

/// All RSST satisfying `spec`, in lexicographic order of their row-major fillings.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<Rsst>> {
    let cells = spec.shape.cells();
    for z in spec.fixed.keys() {
        if !spec.shape.contains(*z) {
            return Err(Error::invalid(format!("fixed cell {z} outside the shape")));
        }
    }
    if let Some(b) = &spec.column_bounds {
        if b.len() < spec.shape.num_columns() {
            return Err(Error::invalid(format!(
                "need {} column bounds, got {}",
                spec.shape.num_columns(),
                b.len()
            )));
        }
    }
    let free: Vec<Cell> = cells.iter().copied().filter(|z| !spec.fixed.contains_key(z)).collect();
    if spec.column_bounds.is_none() && spec.content.is_none() && !free.is_empty() {
        return Err(Error::invalid("need column bounds or a content vector"));
    }
    let fixed: Vec<(Cell, Letter)> = spec.fixed.iter().map(|(z, v)| (*z, *v)).collect();
    if !fixed.iter().all(|&(z, a)| fixed.iter().all(|&(w, b)| pair_ok(z, a, w, b))) {
        return Ok(Vec::new());
    }
    // Remaining multiplicities of each content value once the fixed cells are used.
    let mut remaining: Option<BTreeMap<Letter, usize>> = None;
    if let Some(content) = &spec.content {
        if content.len() != cells.len() {
            return Ok(Vec::new());
        }
        let mut counts: BTreeMap<Letter, usize> = BTreeMap::new();
        for &x in content {
            *counts.entry(x).or_default() += 1;
        }
        for &(_, v) in &fixed {
            match counts.get_mut(&v) {
                Some(n) if *n > 0 => *n -= 1,
                _ => return Ok(Vec::new()),
            }
        }
        remaining = Some(counts);
    }
    let mut filler = Filler {
        spec,
        free: &free,
        assigned: spec.fixed.clone(),
        remaining,
        out: Vec::new(),
    };
    filler.fill(0);
    Ok(filler.out)
}

struct Filler<'a> {
    spec: &'a EnumerationSpec,
    free: &'a [Cell],
    assigned: BTreeMap<Cell, Letter>,
    remaining: Option<BTreeMap<Letter, usize>>,
    out: Vec<Rsst>,
}

impl Filler<'_> {
    fn fill(&mut self, i: usize) {
        if i == self.free.len() {
            self.out.push(Rsst {
                shape: self.spec.shape.clone(),
                entries: self.assigned.clone(),
            });
            return;
        }
        let z = self.free[i];
        let mut lo = Letter::MIN;
        let mut hi = Letter::MAX;
        for (&w, &b) in &self.assigned {
            if (w.col == z.col && w.row < z.row) || (w.row == z.row && w.col < z.col) {
                lo = lo.max(b + 1);
            } else if w.row < z.row && w.col < z.col {
                lo = lo.max(b + 3);
            } else if (w.col == z.col && w.row > z.row) || (w.row == z.row && w.col > z.col) {
                hi = hi.min(b - 1);
            } else if w.row > z.row && w.col > z.col {
                hi = hi.min(b - 3);
            }
        }
        if let Some(bounds) = &self.spec.column_bounds {
            lo = lo.max(1);
            hi = hi.min(bounds[z.col as usize - 1].clamp(Letter::MIN as i64, Letter::MAX as i64) as Letter);
        }
        if lo > hi {
            return;
        }
        let candidates: Vec<Letter> = match &self.remaining {
            Some(counts) => counts.range(lo..=hi).filter(|(_, &n)| n > 0).map(|(&v, _)| v).collect(),
            None => (lo..=hi).collect(),
        };
        for v in candidates {
            if let Some(counts) = &mut self.remaining {
                *counts.get_mut(&v).expect("candidate") -= 1;
            }
            self.assigned.insert(z, v);
            self.fill(i + 1);
            self.assigned.remove(&z);
            if let Some(counts) = &mut self.remaining {
                *counts.get_mut(&v).expect("candidate") += 1;
            }
        }
    }
}

/// RSST of ordinary shape `rows` whose column `c` entries lie in `[n_c]`.
pub fn enumerate_flagged(rows: &Partition, flags: &[i64]) -> Result<Vec<Rsst>> {
    enumerate(&EnumerationSpec::flagged(rows, flags))
}

/// Nonzero RSST of ordinary shape `rows` with sorted entries `content` and 3-descent
/// multiset `desi` (any order).
pub fn enumerate_by_statistics(rows: &Partition, content: &[Letter], desi: &[(Letter, Letter)]) -> Result<Vec<Rsst>> {
    let mut d = desi.to_vec();
    d.sort_unstable();
    Ok(enumerate(&EnumerationSpec::with_content(rows, content))?
        .into_iter()
        .filter(|t| t.is_nonzero() && t.desi3() == d)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{desi, digits, invi};

    fn t(rows: &[&[Letter]]) -> Rsst {
        Rsst::from_partition_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn worked_example() -> Rsst {
        t(&[
            &[1],
            &[3, 4],
            &[5, 6, 16, 17, 25, 31, 33],
            &[10, 11, 18, 19, 26, 32, 34, 36],
            &[12, 13, 20],
            &[15],
        ])
    }

    fn carved_example() -> Rsst {
        let shape = RestrictedShape::new(
            Partition::new(vec![6, 5, 5, 4, 4, 4, 4]).unwrap(),
            vec![0, 1, 2, 2, 2, 2, 3],
        )
        .unwrap();
        let rows: Vec<Vec<Option<Letter>>> = [
            vec![Some(1)],
            vec![Some(3), Some(4)],
            vec![Some(5), Some(6), Some(7), Some(8), Some(9), Some(10)],
            vec![Some(7), Some(8), Some(9), Some(10), Some(11), Some(12), Some(13)],
            vec![Some(8), Some(10), Some(12)],
            vec![Some(11)],
        ]
        .into_iter()
        .collect();
        Rsst::from_rows(shape, &rows).unwrap()
    }

    #[test]
    fn restricted_shape_validation() {
        let outer = Partition::new(vec![3, 2]).unwrap();
        assert!(RestrictedShape::new(outer.clone(), vec![1, 0]).is_err());
        assert!(RestrictedShape::new(outer.clone(), vec![0, 1]).is_ok());
        // A fully carved column may sit east of a more carved one.
        assert!(RestrictedShape::new(outer, vec![2, 2]).is_ok());
        assert_eq!(carved_example().size(), 20);
    }

    #[test]
    fn validity() {
        assert!(carved_example().validate());
        assert!(worked_example().validate());
        assert!(t(&[&[5]]).validate());
        assert!(t(&[&[1, 2], &[2, 4]]).validate());
        assert!(!t(&[&[1, 2], &[2, 3]]).validate());
        assert!(t(&[&[1, 2], &[3, 4]]).validate());
        assert!(!t(&[&[1, 2], &[1, 4]]).validate());
    }

    #[test]
    fn arrows_of_worked_example() {
        let arrows = worked_example().arrows();
        let heads_nw: Vec<Letter> = arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::NorthWest)
            .map(|a| worked_example().entry(a.head).unwrap())
            .collect();
        let tails_se: Vec<Letter> = arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::SouthEast)
            .map(|a| worked_example().entry(a.tail).unwrap())
            .collect();
        let mut heads_nw = heads_nw;
        heads_nw.sort();
        assert_eq!(heads_nw, vec![1, 3, 10, 16]);
        assert_eq!(tails_se, vec![31, 33]);
    }

    #[test]
    fn arrow_forms() {
        let nw = t(&[&[1, 2], &[3, 4]]).arrows();
        assert_eq!(nw.len(), 1);
        assert_eq!(nw[0].kind, ArrowKind::NorthWest);
        assert_eq!(nw[0].tail, Cell::new(2, 2));
        let se = t(&[&[1], &[2, 4]]).arrows();
        assert_eq!(se[0].kind, ArrowKind::SouthEast);
        assert_eq!(se[0].tail, Cell::new(1, 1));
        assert!(t(&[&[1, 5], &[5, 9]]).arrows().is_empty());
    }

    #[test]
    fn sqread_examples() {
        let intro = t(&[&[1, 2, 4, 6], &[3, 4, 5, 7], &[8]]);
        assert_eq!(intro.sqread(), digits("834152476"));
        let expected = vec![
            15, 12, 13, 10, 5, 11, 20, 6, 3, 18, 19, 4, 1, 16, 17, 26, 25, 32, 31, 34, 33, 36,
        ];
        assert_eq!(worked_example().sqread(), expected);
        assert_eq!(t(&[&[1, 2, 3]]).sqread(), vec![1, 2, 3]);
    }

    #[test]
    fn displayed_reading_words_of_worked_example() {
        let r = worked_example();
        let good = [
            vec![15, 12, 13, 10, 5, 11, 20, 6, 3, 4, 1, 18, 19, 16, 17, 26, 25, 32, 31, 34, 33, 36],
            vec![15, 12, 13, 10, 5, 11, 20, 6, 3, 18, 19, 4, 1, 16, 17, 26, 25, 32, 31, 34, 33, 36],
        ];
        let bad = vec![15, 12, 10, 13, 11, 20, 18, 19, 26, 5, 6, 3, 4, 1, 16, 17, 25, 32, 34, 36, 31, 33];
        // Entries are distinct, so the cell order is determined by the word.
        let order_of = |w: &[Letter]| -> Vec<Cell> {
            w.iter()
                .map(|x| *r.entries().iter().find(|(_, v)| *v == x).unwrap().0)
                .collect()
        };
        for w in &good {
            assert!(r.is_square_respecting_order(&order_of(w)));
        }
        assert!(!r.is_square_respecting_order(&order_of(&bad)));
    }

    #[test]
    fn reading_orders_match_brute_force() {
        let r = t(&[&[1, 2, 4], &[3, 5], &[4]]);
        let orders = r.reading_orders(true, DEFAULT_READING_CAP).unwrap();
        let cells: Vec<Cell> = r.entries().keys().copied().collect();
        let mut brute = 0;
        let mut perm = cells.clone();
        permute(&mut perm, 0, &mut |p| {
            if r.is_square_respecting_order(p) {
                brute += 1;
            }
        });
        assert_eq!(orders.len(), brute);
        assert!(r.reading_words(true, 100).unwrap().contains(&r.sqread()));
    }

    fn permute(v: &mut Vec<Cell>, i: usize, f: &mut impl FnMut(&[Cell])) {
        if i == v.len() {
            f(v);
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            permute(v, i + 1, f);
            v.swap(i, j);
        }
    }

    #[test]
    fn single_column_has_one_reading() {
        let r = t(&[&[1], &[2], &[3]]);
        assert_eq!(r.reading_words(false, 10).unwrap(), vec![vec![3, 2, 1]]);
    }

    #[test]
    fn statistics_agree_with_words() {
        let cases = [
            (t(&[&[1, 3, 4, 5], &[2, 7, 8], &[4]]), "42173845", 4),
            (t(&[&[1, 2, 4, 5], &[3, 7, 8], &[4]]), "43172845", 5),
            (t(&[&[1, 2, 4, 5], &[3, 4, 7], &[8]]), "83412745", 5),
        ];
        for (r, word, inv) in cases {
            assert_eq!(r.sqread(), digits(word));
            assert_eq!(r.invi3(), inv);
            assert_eq!(r.desi3(), vec![(4, 1), (7, 4), (8, 5)]);
            for v in r.reading_words(true, 1000).unwrap() {
                assert_eq!(invi(&v, 3), inv);
                assert_eq!(desi(&v, 3), r.desi3());
            }
        }
        let gapped = t(&[&[1, 5], &[9]]);
        assert_eq!((gapped.desi3(), gapped.invi3()), (vec![], 0));
    }

    #[test]
    fn worked_coefficient_tableaux() {
        let lambda = Partition::new(vec![4, 3, 1]).unwrap();
        let found = enumerate_by_statistics(&lambda, &digits("12344578"), &[(4, 1), (7, 4), (8, 5)]).unwrap();
        let words: BTreeSet<Word> = found.iter().map(Rsst::sqread).collect();
        let expected: BTreeSet<Word> = ["42173845", "43172845", "83412745"].iter().map(|s| digits(s)).collect();
        assert_eq!(words, expected);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=4 {
            for lambda in crate::shapes::partitions_of(n) {
                let cols = lambda.part(1);
                let flags: Vec<i64> = (0..cols).map(|c| 3 + c as i64).collect();
                let found = enumerate_flagged(&lambda, &flags).unwrap();
                let shape = RestrictedShape::from_rows(&lambda);
                let cells = shape.cells();
                let mut brute = 0;
                let mut vals = vec![1; cells.len()];
                loop {
                    let entries: BTreeMap<Cell, Letter> = cells.iter().copied().zip(vals.iter().copied()).collect();
                    let r = Rsst::new(shape.clone(), entries).unwrap();
                    if r.validate() {
                        brute += 1;
                    }
                    // odometer over column-bounded values
                    let mut i = 0;
                    loop {
                        if i == cells.len() {
                            break;
                        }
                        let bound = flags[cells[i].col as usize - 1] as Letter;
                        if vals[i] < bound {
                            vals[i] += 1;
                            break;
                        }
                        vals[i] = 1;
                        i += 1;
                    }
                    if i == cells.len() {
                        break;
                    }
                }
                assert_eq!(found.len(), brute, "shape {lambda}");
                assert!(found.iter().all(Rsst::validate));
            }
        }
    }

    #[test]
    fn nontail_removable_cells_exist() {
        let r = worked_example();
        let cells = r.nontail_removable_cells();
        assert!(!cells.is_empty());
        assert!(cells.iter().any(|z| r.entry(*z) == Some(36)));
    }

    #[test]
    fn json_roundtrip() {
        let r = carved_example();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"carved\""));
        let back: Rsst = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
