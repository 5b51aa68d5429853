//! Relation systems weaker than Lam's quotient, decided by exact span membership.
//!
//! Every relation is homogeneous in the letter multiset and free of `q`, so equality
//! is checked one multiset (and one power of `q`) at a time: the words of that
//! multiset are the basis, monomial and binomial relations are folded in with a
//! union-find, and the remaining four-term relations are put in row echelon form over
//! the rationals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::element::AlgebraElement;
use crate::algebra::lam::equal_in_lam;
use crate::error::{Error, Result};
use crate::words::{is_nonzero_word, Letter, Word};

/// Largest number of letters a single homogeneous component may have.
pub const DEFAULT_SPAN_CAP: usize = 8;

/// Per-triple choice used by a bijectivization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripleChoice {
    /// `acb = cab` and `bac = bca`.
    Knuth,
    /// `acb = bac` and `cab = bca`.
    Rotation,
}

impl FromStr for TripleChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "knuth" => Ok(TripleChoice::Knuth),
            "rotation" => Ok(TripleChoice::Rotation),
            other => Err(Error::invalid(format!("unknown triple choice {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RelationSystem {
    /// Lam's quotient.
    Lam { k: i32 },
    /// Lam's zero words, far commutation, and `(ac-ca)b = b(ac-ca)` for `c-a ≤ k`.
    LamLe { k: i32 },
    /// Repeated letters vanish, `acb = cab` and `bac = bca` for `c-a > k`, and
    /// `(ac-ca)b = b(ac-ca)` for `c-a ≤ k`.
    RotLe { k: i32 },
    /// `RotLe` plus, for every triple with `c-a ≤ k`, the Knuth or rotation pair.
    /// Triples missing from `choices` use `default`.
    Bijectivization {
        k: i32,
        choices: BTreeMap<(Letter, Letter, Letter), TripleChoice>,
        default: TripleChoice,
    },
}

impl RelationSystem {
    pub fn k(&self) -> i32 {
        match self {
            RelationSystem::Lam { k }
            | RelationSystem::LamLe { k }
            | RelationSystem::RotLe { k }
            | RelationSystem::Bijectivization { k, .. } => *k,
        }
    }

    /// The bijectivization using rotation relations for every triple.
    pub fn all_rotation(k: i32) -> Self {
        RelationSystem::Bijectivization {
            k,
            choices: BTreeMap::new(),
            default: TripleChoice::Rotation,
        }
    }

    /// Parses a CLI selector (`lam`, `lam-le`, `rot-le`, `bij`).
    pub fn from_name(name: &str, k: i32) -> Result<Self> {
        if k < 1 {
            return Err(Error::invalid("k must be positive"));
        }
        match name {
            "lam" => Ok(RelationSystem::Lam { k }),
            "lam-le" => Ok(RelationSystem::LamLe { k }),
            "rot-le" => Ok(RelationSystem::RotLe { k }),
            "bij" => Ok(RelationSystem::all_rotation(k)),
            other => Err(Error::invalid(format!("unknown algebra {other:?}"))),
        }
    }

    /// Parses bijectivization choices from a JSON object `{"a,b,c": "knuth"|"rotation"}`.
    pub fn bijectivization_from_json(k: i32, json: &str) -> Result<Self> {
        let raw: BTreeMap<String, String> =
            serde_json::from_str(json).map_err(|e| Error::invalid(format!("bad choice map: {e}")))?;
        let mut choices = BTreeMap::new();
        for (key, val) in raw {
            let letters: Vec<Letter> = key
                .split(',')
                .map(|t| t.trim().parse::<Letter>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::invalid(format!("bad triple {key:?}: {e}")))?;
            let [a, b, c] = letters[..] else {
                return Err(Error::invalid(format!("triple {key:?} must have three letters")));
            };
            if !(a < b && b < c && c - a <= k) {
                return Err(Error::invalid(format!("triple {key:?} must satisfy a<b<c, c-a ≤ k")));
            }
            choices.insert((a, b, c), val.parse()?);
        }
        Ok(RelationSystem::Bijectivization {
            k,
            choices,
            default: TripleChoice::Rotation,
        })
    }

    fn kills(&self, w: &[Letter]) -> bool {
        match self {
            RelationSystem::Lam { k } | RelationSystem::LamLe { k } => !is_nonzero_word(w, *k),
            RelationSystem::RotLe { .. } | RelationSystem::Bijectivization { .. } => has_repeat(w),
        }
    }

    fn choice(&self, t: (Letter, Letter, Letter)) -> Option<TripleChoice> {
        match self {
            RelationSystem::Bijectivization { choices, default, .. } => {
                Some(choices.get(&t).copied().unwrap_or(*default))
            }
            _ => None,
        }
    }
}

impl fmt::Display for RelationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationSystem::Lam { k } => write!(f, "lam(k={k})"),
            RelationSystem::LamLe { k } => write!(f, "lam-le(k={k})"),
            RelationSystem::RotLe { k } => write!(f, "rot-le(k={k})"),
            RelationSystem::Bijectivization { k, choices, default } => {
                write!(f, "bij(k={k}, default={default:?}, overrides={})", choices.len())
            }
        }
    }
}

fn has_repeat(w: &[Letter]) -> bool {
    let mut s = w.to_vec();
    s.sort_unstable();
    s.windows(2).any(|p| p[0] == p[1])
}

/// All distinct arrangements of a sorted multiset, in lexicographic order.
fn arrangements(sorted: &[Letter]) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = sorted.to_vec();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let n = cur.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("pivot exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
    zero: Vec<bool>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            zero: vec![false; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.zero[rb] = self.zero[rb] || self.zero[ra];
        }
    }
}

type SparseRow = Vec<(usize, BigRational)>;

/// Row echelon form over the rationals; every stored row has leading coefficient 1
/// at its pivot and no entries left of it.
#[derive(Default)]
struct Echelon {
    rows: HashMap<usize, SparseRow>,
}

impl Echelon {
    /// Reduces `row` (sorted by column) against the stored rows. Returns the reduced
    /// row, empty iff `row` lies in the span.
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some(&(lead, _)) = row.first() else {
                return row;
            };
            let Some(piv) = self.rows.get(&lead) else {
                return row;
            };
            let factor = row[0].1.clone();
            row = axpy(&row, piv, &factor);
        }
    }

    fn insert(&mut self, row: SparseRow) {
        let row = self.reduce(row);
        if let Some((lead, c)) = row.first().cloned() {
            let inv = BigRational::one() / c;
            let row = row.into_iter().map(|(i, v)| (i, v * &inv)).collect();
            self.rows.insert(lead, row);
        }
    }
}

/// `a - f·b` for sorted sparse rows.
fn axpy(a: &SparseRow, b: &SparseRow, f: &BigRational) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// The quotient of the span of one letter multiset by all relation instances.
struct SpanSpace {
    index: HashMap<Word, usize>,
    /// Class of each word, `None` if the word is zero in the quotient.
    class: Vec<Option<usize>>,
    echelon: Echelon,
}

impl SpanSpace {
    fn build(system: &RelationSystem, sorted: &[Letter]) -> SpanSpace {
        let k = system.k();
        let words = arrangements(sorted);
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut uf = UnionFind::new(words.len());
        for (i, w) in words.iter().enumerate() {
            if system.kills(w) {
                uf.zero[i] = true;
            }
        }
        let swap_window = |w: &Word, p: usize, pattern: [Letter; 3]| {
            let mut n = w.clone();
            n[p..p + 3].copy_from_slice(&pattern);
            index[&n]
        };
        for (i, w) in words.iter().enumerate() {
            if let RelationSystem::LamLe { .. } = system {
                for p in 0..w.len().saturating_sub(1) {
                    if (w[p] - w[p + 1]).abs() > k {
                        let mut n = w.clone();
                        n.swap(p, p + 1);
                        uf.union(i, index[&n]);
                    }
                }
            }
            if matches!(system, RelationSystem::RotLe { .. } | RelationSystem::Bijectivization { .. }) {
                for p in 0..w.len().saturating_sub(2) {
                    let Some((a, b, c)) = distinct_triple(&w[p..p + 3]) else {
                        continue;
                    };
                    let win = [w[p], w[p + 1], w[p + 2]];
                    if c - a > k {
                        if win == [a, c, b] {
                            uf.union(i, swap_window(w, p, [c, a, b]));
                        }
                        if win == [b, a, c] {
                            uf.union(i, swap_window(w, p, [b, c, a]));
                        }
                    } else if let Some(choice) = system.choice((a, b, c)) {
                        let pairs = match choice {
                            TripleChoice::Knuth => [([a, c, b], [c, a, b]), ([b, a, c], [b, c, a])],
                            TripleChoice::Rotation => [([a, c, b], [b, a, c]), ([c, a, b], [b, c, a])],
                        };
                        for (from, to) in pairs {
                            if win == from {
                                uf.union(i, swap_window(w, p, to));
                            }
                        }
                    }
                }
            }
        }
        let mut class = vec![None; words.len()];
        let mut root_class: HashMap<usize, usize> = HashMap::new();
        for i in 0..words.len() {
            let r = uf.find(i);
            if uf.zero[r] {
                continue;
            }
            let next = root_class.len();
            class[i] = Some(*root_class.entry(r).or_insert(next));
        }
        let mut echelon = Echelon::default();
        if !matches!(system, RelationSystem::Lam { .. }) {
            for w in &words {
                for p in 0..w.len().saturating_sub(2) {
                    let Some((a, b, c)) = distinct_triple(&w[p..p + 3]) else {
                        continue;
                    };
                    if c - a > k || [w[p], w[p + 1], w[p + 2]] != [a, c, b] {
                        continue;
                    }
                    // (ac - ca)b - b(ac - ca) = acb - cab - bac + bca
                    let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
                    for (pat, sign) in [([a, c, b], 1), ([c, a, b], -1), ([b, a, c], -1), ([b, c, a], 1)] {
                        if let Some(cl) = class[swap_window(w, p, pat)] {
                            *acc.entry(cl).or_insert_with(BigRational::zero) += BigRational::from_integer(sign.into());
                        }
                    }
                    let row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                    if !row.is_empty() {
                        echelon.insert(row);
                    }
                }
            }
        }
        SpanSpace { index, class, echelon }
    }

    /// Whether `Σ coeffs[w]·w` lies in the relation subspace.
    fn contains(&self, coeffs: &BTreeMap<Word, BigRational>) -> bool {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (w, c) in coeffs {
            if let Some(cl) = self.class[self.index[w]] {
                *acc.entry(cl).or_insert_with(BigRational::zero) += c;
            }
        }
        let row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        self.echelon.reduce(row).is_empty()
    }
}

fn distinct_triple(win: &[Letter]) -> Option<(Letter, Letter, Letter)> {
    let mut t = [win[0], win[1], win[2]];
    t.sort_unstable();
    if t[0] < t[1] && t[1] < t[2] {
        Some((t[0], t[1], t[2]))
    } else {
        None
    }
}

type CacheKey = (RelationSystem, Word);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<SpanSpace>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<SpanSpace>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn span_space(system: &RelationSystem, sorted: &[Letter]) -> Arc<SpanSpace> {
    let key = (system.clone(), sorted.to_vec());
    if let Some(s) = cache().lock().expect("cache lock").get(&key) {
        return Arc::clone(s);
    }
    // Built outside the lock; a concurrent builder produces an identical space, so
    // whichever insert lands first wins.
    let built = Arc::new(SpanSpace::build(system, sorted));
    let mut guard = cache().lock().expect("cache lock");
    Arc::clone(guard.entry(key).or_insert(built))
}

/// Whether `f` is zero in the quotient.
pub fn is_zero_in_quotient(f: &AlgebraElement, system: &RelationSystem, cap: usize) -> Result<bool> {
    if let RelationSystem::Lam { k } = system {
        return Ok(equal_in_lam(f, &AlgebraElement::zero(), *k));
    }
    for (multiset, piece) in f.by_multiset() {
        if multiset.len() > cap {
            return Err(Error::guard("letters in a homogeneous component", cap));
        }
        let space = span_space(system, &multiset);
        let mut by_power: BTreeMap<i32, BTreeMap<Word, BigRational>> = BTreeMap::new();
        for (w, c) in piece.terms() {
            for (e, v) in c.terms() {
                by_power.entry(e).or_default().insert(w.clone(), v.clone());
            }
        }
        for coeffs in by_power.values() {
            if !space.contains(coeffs) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `f = g` in the quotient selected by `system`, using [`DEFAULT_SPAN_CAP`].
pub fn equal_in_quotient(f: &AlgebraElement, g: &AlgebraElement, system: &RelationSystem) -> Result<bool> {
    equal_in_quotient_capped(f, g, system, DEFAULT_SPAN_CAP)
}

pub fn equal_in_quotient_capped(
    f: &AlgebraElement,
    g: &AlgebraElement,
    system: &RelationSystem,
    cap: usize,
) -> Result<bool> {
    is_zero_in_quotient(&(f - g), system, cap)
}
