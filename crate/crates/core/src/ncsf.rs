//! Noncommutative elementary symmetric functions and column-flagged Schur functions
//! `J_α(S_1 ⌊w^1⌋ S_2 ⋯ S_l)`, together with the harnesses comparing them to sums of
//! RSST reading words.
//!
//! Augmentation slots are numbered `0..=l`: slot `0` is a prefix multiplied on the
//! left, slot `i` sits between `S_i` and `S_{i+1}`, slot `l` is a suffix.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::element::AlgebraElement;
use crate::algebra::lam::LamElement;
use crate::algebra::relations::{equal_in_quotient, RelationSystem};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rsst::{enumerate, EnumerationSpec, RestrictedShape, Rsst};
use crate::shapes::{Cell, Partition};
use crate::words::{Letter, Word};

/// Largest number of columns for the explicit permutation expansion.
pub const DEFAULT_PERMUTATION_CAP: usize = 8;

/// `[m] = {1, …, m}` (empty for `m ≤ 0`).
pub fn interval(m: i64) -> Vec<Letter> {
    (1..=m.max(0) as Letter).collect()
}

fn normalized_set(s: &[Letter]) -> Vec<Letter> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Strictly decreasing `d`-letter words from `s`, in lexicographic order.
fn decreasing_words(d: i64, s: &[Letter]) -> Vec<Word> {
    let set = normalized_set(s);
    if d < 0 || d as usize > set.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d as usize);
    fn rec(set: &[Letter], d: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        let below = cur.last().copied().unwrap_or(Letter::MAX);
        for &x in set.iter().rev() {
            if x < below && set.iter().filter(|&&y| y < x).count() >= d - cur.len() - 1 {
                cur.push(x);
                rec(set, d, cur, out);
                cur.pop();
            }
        }
    }
    rec(&set, d as usize, &mut cur, &mut out);
    out.sort();
    out
}

/// `e_d(S)`: the sum of strictly decreasing `d`-letter words from `S`; `e_0 = 1` and
/// `e_d = 0` for `d < 0` or `d > |S|`.
pub fn elem_sym(d: i64, s: &[Letter]) -> AlgebraElement {
    AlgebraElement::sum_of_words(decreasing_words(d, s))
}

/// The data of an augmented column-flagged Schur function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagSpec {
    alpha: Vec<i64>,
    supports: Vec<Vec<Letter>>,
    slots: Vec<Word>,
}

impl FlagSpec {
    pub fn new(alpha: Vec<i64>, supports: Vec<Vec<Letter>>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::invalid("need at least one column"));
        }
        if alpha.len() != supports.len() {
            return Err(Error::invalid(format!(
                "{} parts but {} supports",
                alpha.len(),
                supports.len()
            )));
        }
        let l = alpha.len();
        Ok(FlagSpec {
            alpha,
            supports: supports.iter().map(|s| normalized_set(s)).collect(),
            slots: vec![Vec::new(); l + 1],
        })
    }

    /// `J_α^n`, supports `[n_1], …, [n_l]`.
    pub fn flagged(alpha: &[i64], n: &[i64]) -> Result<Self> {
        if n.iter().any(|&x| x < 0) {
            return Err(Error::invalid("flags must be nonnegative"));
        }
        FlagSpec::new(alpha.to_vec(), n.iter().map(|&m| interval(m)).collect())
    }

    /// Appends `w` to slot `slot` (see the module docs for numbering).
    pub fn with_slot(mut self, slot: usize, w: &[Letter]) -> Result<Self> {
        if slot > self.len() {
            return Err(Error::invalid(format!("slot {slot} out of range 0..={}", self.len())));
        }
        self.slots[slot].extend_from_slice(w);
        Ok(self)
    }

    /// Prepends `v` to the prefix.
    pub fn with_prefix(mut self, v: &[Letter]) -> Self {
        let mut p = v.to_vec();
        p.extend_from_slice(&self.slots[0]);
        self.slots[0] = p;
        self
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn supports(&self) -> &[Vec<Letter>] {
        &self.supports
    }

    pub fn slots(&self) -> &[Word] {
        &self.slots
    }

    /// Degree of `e` in column `i` (0-based) when `π(i) = p` (0-based).
    fn degree(&self, i: usize, p: usize) -> i64 {
        self.alpha[i] + p as i64 - i as i64
    }

    /// Coefficient of the word `v` in the free expansion.
    pub fn coefficient_of(&self, v: &[Letter]) -> i64 {
        let l = self.len();
        let mut total = 0i64;
        let mut perm: Vec<usize> = (0..l).collect();
        for_each_permutation(&mut perm, 0, &mut |p, sign| {
            let mut pos = 0usize;
            for i in 0..=l {
                let s = &self.slots[i];
                if v.len() < pos + s.len() || &v[pos..pos + s.len()] != s.as_slice() {
                    return;
                }
                pos += s.len();
                if i == l {
                    break;
                }
                let d = self.degree(i, p[i]);
                if d < 0 {
                    return;
                }
                let d = d as usize;
                if v.len() < pos + d {
                    return;
                }
                let seg = &v[pos..pos + d];
                if seg.windows(2).any(|w| w[0] <= w[1]) || seg.iter().any(|x| self.supports[i].binary_search(x).is_err()) {
                    return;
                }
                pos += d;
            }
            if pos == v.len() {
                total += sign;
            }
        });
        total
    }
}

/// Visits every permutation of `perm[start..]` with its sign.
fn for_each_permutation(perm: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize], i64)) {
    fn rec(perm: &mut Vec<usize>, start: usize, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
        if start == perm.len() {
            f(perm, sign);
            return;
        }
        for j in start..perm.len() {
            perm.swap(start, j);
            rec(perm, start + 1, if j == start { sign } else { -sign }, f);
            perm.swap(start, j);
        }
    }
    rec(perm, start, 1, f);
}

/// Free-algebra expansion by the explicit signed sum over `S_l`.
pub fn flagged_schur_by_permutations(spec: &FlagSpec, cap: usize) -> Result<AlgebraElement> {
    let l = spec.len();
    if l > cap {
        return Err(Error::guard("columns for the permutation expansion", cap));
    }
    let mut total = AlgebraElement::zero();
    let mut perm: Vec<usize> = (0..l).collect();
    for_each_permutation(&mut perm, 0, &mut |p, sign| {
        let mut term = AlgebraElement::from_word(spec.slots[0].clone());
        for i in 0..l {
            let e = elem_sym(spec.degree(i, p[i]), &spec.supports[i]);
            if e.is_zero() {
                return;
            }
            term = &term * &e;
            term = term.mul_word(&spec.slots[i + 1]);
        }
        if sign < 0 {
            total -= &term;
        } else {
            total += &term;
        }
    });
    Ok(total)
}

/// Signed sum over permutations organised column by column: the state is the set of
/// values of `π` already used, and the sign of `π` is the parity of the number of
/// earlier columns holding larger values.
fn expand_by_columns<T: Clone>(
    spec: &FlagSpec,
    start: T,
    mut step: impl FnMut(&T, &AlgebraElement, &[Letter]) -> T,
    mut add: impl FnMut(&mut T, &T, bool),
    is_zero: impl Fn(&T) -> bool,
    zero: T,
) -> T {
    let l = spec.len();
    let mut states: HashMap<u32, T> = HashMap::from([(0u32, start)]);
    for i in 0..l {
        let mut next: HashMap<u32, T> = HashMap::new();
        let mut sorted: Vec<(&u32, &T)> = states.iter().collect();
        sorted.sort_by_key(|(m, _)| **m);
        for (&mask, cur) in sorted {
            for p in 0..l {
                if mask & (1 << p) != 0 {
                    continue;
                }
                let e = elem_sym(spec.degree(i, p), &spec.supports[i]);
                if e.is_zero() {
                    continue;
                }
                let negative = (mask >> (p + 1)).count_ones() % 2 == 1;
                let prod = step(cur, &e, &spec.slots[i + 1]);
                let slot = next.entry(mask | (1 << p)).or_insert_with(|| zero.clone());
                add(slot, &prod, negative);
            }
        }
        next.retain(|_, v| !is_zero(v));
        states = next;
    }
    states.remove(&((1u32 << l) - 1)).unwrap_or(zero)
}

/// Free-algebra expansion of `J`.
pub fn flagged_schur(spec: &FlagSpec) -> AlgebraElement {
    expand_by_columns(
        spec,
        AlgebraElement::from_word(spec.slots[0].clone()),
        |cur, e, slot| (cur * e).mul_word(slot),
        |acc, x, neg| {
            if neg {
                *acc -= x
            } else {
                *acc += x
            }
        },
        AlgebraElement::is_zero,
        AlgebraElement::zero(),
    )
}

/// `J` reduced in Lam's quotient, reducing after every column.
pub fn flagged_schur_lam(spec: &FlagSpec, k: i32) -> LamElement {
    expand_by_columns(
        spec,
        LamElement::from_word(&spec.slots[0], k),
        |cur, e, slot| cur.mul_element(e).mul_word(slot),
        |acc, x, neg| acc.add_assign_scaled(x, neg),
        LamElement::is_zero,
        LamElement::zero(k),
    )
}

/// A `j`-expansion (1-based `j`) of column `j` with `S_j = [m]`, `m > 0`:
/// `J = J(α_j - 1, S_j = [m-1], m appended to slot j-1) + J(S_j = [m-1])`.
pub fn j_expand(spec: &FlagSpec, j: usize) -> Result<(FlagSpec, FlagSpec)> {
    if j == 0 || j > spec.len() {
        return Err(Error::invalid(format!("column {j} out of range")));
    }
    let s = &spec.supports[j - 1];
    let m = s.len() as Letter;
    if m == 0 || *s != interval(m as i64) {
        return Err(Error::invalid(format!("column {j} support is not [m] with m > 0")));
    }
    let mut peeled = spec.clone();
    peeled.alpha[j - 1] -= 1;
    peeled.supports[j - 1] = interval(m as i64 - 1);
    peeled.slots[j - 1].push(m);
    let mut rest = spec.clone();
    rest.supports[j - 1] = interval(m as i64 - 1);
    Ok((peeled, rest))
}

/// `Σ sqread(T)` over `tableaux`, reduced in Lam's quotient for `k = 3`.
pub fn sqread_sum_lam(tableaux: &[Rsst]) -> LamElement {
    let mut out = LamElement::zero(3);
    for t in tableaux {
        out.add_word(&t.sqread(), &LaurentPoly::one());
    }
    out
}

/// Outcome of comparing a flagged Schur function with a sum of reading words.
#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub equal: bool,
    pub tableaux: usize,
    pub lhs: BTreeMap<String, LaurentPoly>,
    pub rhs: BTreeMap<String, LaurentPoly>,
    pub diff: BTreeMap<String, LaurentPoly>,
}

fn render_terms(e: &LamElement) -> BTreeMap<String, LaurentPoly> {
    e.sorted_terms()
        .into_iter()
        .map(|(w, c)| (w.iter().map(ToString::to_string).collect::<Vec<_>>().join(","), c))
        .collect()
}

impl Comparison {
    fn new(lhs: &LamElement, rhs: &LamElement, tableaux: usize) -> Self {
        let diff = lhs.difference(rhs);
        Comparison {
            equal: diff.is_zero(),
            tableaux,
            lhs: render_terms(lhs),
            rhs: render_terms(rhs),
            diff: render_terms(&diff),
        }
    }
}

fn check_flags(flags: &[i64]) -> Result<()> {
    if flags.iter().any(|&n| n < 0) {
        return Err(Error::precondition("flags must be nonnegative"));
    }
    if flags.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::precondition("flags must be weakly increasing"));
    }
    Ok(())
}

/// Compares `J_{λ'}^{n}` with `Σ sqread(T)` over RSST of shape `λ` with column-`c`
/// entries in `[n_c]`, both reduced in Lam's quotient for `k = 3`.
pub fn verify_main(lambda: &Partition, flags: &[i64]) -> Result<Comparison> {
    check_flags(flags)?;
    let l = lambda.part(1);
    if flags.len() != l {
        return Err(Error::invalid(format!("shape has {l} columns but {} flags were given", flags.len())));
    }
    if l == 0 {
        let one = LamElement::one(3);
        return Ok(Comparison::new(&one, &one, 1));
    }
    let alpha: Vec<i64> = lambda.conjugate().parts().iter().map(|&p| p as i64).collect();
    let lhs = flagged_schur_lam(&FlagSpec::flagged(&alpha, flags)?, 3);
    let tableaux = crate::rsst::enumerate_flagged(lambda, flags)?;
    let rhs = sqread_sum_lam(&tableaux);
    Ok(Comparison::new(&lhs, &rhs, tableaux.len()))
}

/// `J_α^n(⌊x⌋_j) = J_α^n(⌊x⌋_{j-1})` in Lam's quotient, for `α_j = α_{j+1}`,
/// `n_j = n_{j+1} < x` (1-based `j`). With `α = (a,a)`, `n = (m,m)`, `j = 1` this is
/// `J_{(a,a)}([m]⌊x⌋[m]) = x·J_{(a,a)}([m],[m])`.
pub fn check_augmented_commutation(alpha: &[i64], n: &[i64], j: usize, x: Letter, k: i32) -> Result<bool> {
    if j == 0 || j >= alpha.len() || alpha.len() != n.len() {
        return Err(Error::invalid("need 1 ≤ j < l and matching lengths"));
    }
    if alpha[j - 1] != alpha[j] {
        return Err(Error::precondition("α_j ≠ α_{j+1}"));
    }
    if n[j - 1] != n[j] {
        return Err(Error::precondition("n_j ≠ n_{j+1}"));
    }
    if (x as i64) <= n[j - 1] {
        return Err(Error::precondition("x must exceed n_j"));
    }
    let base = FlagSpec::flagged(alpha, n)?;
    let lhs = flagged_schur_lam(&base.clone().with_slot(j, &[x])?, k);
    let rhs = flagged_schur_lam(&base.with_slot(j - 1, &[x])?, k);
    Ok(lhs == rhs)
}

/// Parameters of the shifted-augmentation identity
/// `v·J_α(n_1..n_j ⌊w⌋ n_{j+1}..) = v·J_α(n_1..n_{j-1} ⌊x⌋ n_j ⌊w^R⌋ n_{j+1}..)`.
#[derive(Clone, Debug)]
pub struct ShiftInstance {
    pub alpha: Vec<i64>,
    pub n: Vec<i64>,
    /// 1-based column; the augmentation sits after column `j`.
    pub j: usize,
    pub v: Word,
    pub w: Word,
    pub k: i32,
}

impl ShiftInstance {
    /// Checks every hypothesis, reporting the first failure.
    pub fn validate(&self) -> Result<()> {
        let (l, j, k) = (self.alpha.len(), self.j, self.k as i64);
        if self.n.len() != l || j == 0 || j >= l {
            return Err(Error::invalid("need 1 ≤ j < l and matching lengths"));
        }
        if self.alpha[j - 1] != self.alpha[j] {
            return Err(Error::precondition("(a) α_j = α_{j+1} fails"));
        }
        check_flags(&self.n)?;
        let (nj, nj1) = (self.n[j - 1], self.n[j]);
        if j > 1 && self.n[j - 2] >= nj1 - 3 {
            return Err(Error::precondition("(b) n_{j-1} < n_{j+1} - 3 fails"));
        }
        if nj1 != nj + 1 {
            return Err(Error::precondition("(b) n_{j+1} = n_j + 1 fails"));
        }
        let Some(&x) = self.w.first() else {
            return Err(Error::precondition("(e) w must start with x"));
        };
        let x = x as i64;
        if x <= nj1 || x == nj1 + k {
            return Err(Error::precondition("(c) x > n_{j+1}, x ≠ n_{j+1} + k fails"));
        }
        let mut vn = self.v.clone();
        vn.push(nj1 as Letter);
        if !LamElement::from_word(&vn, self.k).is_zero() {
            return Err(Error::precondition("(d) v·n_{j+1} ≡ 0 fails"));
        }
        if self.w[1..].iter().any(|&y| (y as i64) <= nj1 + k) {
            return Err(Error::precondition("(e) letters of w^R must exceed n_{j+1} + k"));
        }
        Ok(())
    }

    pub fn check(&self) -> Result<bool> {
        self.validate()?;
        let base = FlagSpec::flagged(&self.alpha, &self.n)?;
        let lhs = base.clone().with_slot(self.j, &self.w)?.with_prefix(&self.v);
        let rhs = base
            .with_slot(self.j - 1, &self.w[..1])?
            .with_slot(self.j, &self.w[1..])?
            .with_prefix(&self.v);
        Ok(flagged_schur_lam(&lhs, self.k) == flagged_schur_lam(&rhs, self.k))
    }
}

/// An instance of the column-peeling identity used to prove `verify_main` by induction:
/// `v·J_α^n(⌊w⌋_j) = Σ sqread(T)` over RSST `T` of shape `λ'` agreeing with `R` on
/// `λ' \ α'` whose column-`c` entries on `α'` lie in `[n_c]`.
#[derive(Clone, Debug)]
pub struct TechnicalInstance {
    /// Partial filling `R` on the restricted shape `λ' \ α'`.
    pub r: Rsst,
    /// Cells of `R` read by `v`, in order.
    pub v_cells: Vec<Cell>,
    /// Columns (1-based, increasing) whose northern-border cells are read by `w`.
    pub w_columns: Vec<usize>,
    pub n: Vec<i64>,
}

/// `j = min{i : α_i > 0, α_i ≥ α_{i+1}} ∪ {l+1}` (1-based, `α_{l+1} = 0`).
pub fn peel_column(alpha: &[usize]) -> usize {
    let l = alpha.len();
    (0..l)
        .find(|&i| alpha[i] > 0 && alpha[i] >= alpha.get(i + 1).copied().unwrap_or(0))
        .map_or(l + 1, |i| i + 1)
}

/// `j' = max{i : α_i < λ_i} ∪ {0}`.
pub fn last_open_column(lambda: &[usize], alpha: &[usize]) -> usize {
    (0..lambda.len()).rev().find(|&i| alpha[i] < lambda[i]).map_or(0, |i| i + 1)
}

/// Whether `α_1..α_{j'}` has the admissible form: zeros, then a run increasing by
/// one, with at most one repeated positive value. Returns the position (1-based) of
/// the first copy of the repeated value.
fn carved_form(prefix: &[usize]) -> Option<Option<usize>> {
    let mut repeat = None;
    for i in 1..prefix.len() {
        let (a, b) = (prefix[i - 1], prefix[i]);
        if a == 0 && b == 0 {
            continue;
        }
        if b == a + 1 {
            continue;
        }
        if b == a && a > 0 && repeat.is_none() {
            repeat = Some(i);
            continue;
        }
        return None;
    }
    Some(repeat)
}

impl TechnicalInstance {
    fn lambda(&self) -> Vec<usize> {
        self.r.shape().outer().parts().to_vec()
    }

    fn alpha(&self) -> Vec<usize> {
        self.r.shape().carved().to_vec()
    }

    /// Northern-border entry `r_c` (1-based column).
    fn border(&self, c: usize) -> Option<Letter> {
        let a = *self.r.shape().carved().get(c - 1)?;
        self.r.entry(Cell::new(a as i32 + 1, c as i32))
    }

    pub fn j(&self) -> usize {
        peel_column(&self.alpha())
    }

    pub fn j_prime(&self) -> usize {
        last_open_column(&self.lambda(), &self.alpha())
    }

    pub fn v(&self) -> Word {
        self.v_cells.iter().map(|z| self.r.entry(*z).expect("cell of R")).collect()
    }

    pub fn w(&self) -> Word {
        self.w_columns.iter().map(|&c| self.border(c).expect("border cell")).collect()
    }

    /// Checks hypotheses (i)–(v), reporting the first failure.
    pub fn validate(&self) -> Result<()> {
        let lambda = self.lambda();
        let alpha = self.alpha();
        let l = lambda.len();
        let (j, jp) = (self.j(), self.j_prime());
        // (i)
        let Some(repeat) = carved_form(&alpha[..jp]) else {
            return Err(Error::precondition("(i) α_1..α_{j'} is not zeros followed by a +1 run"));
        };
        match repeat {
            Some(p) if !(p == j && j < jp) => {
                return Err(Error::precondition("(i) the repeated value must sit at j < j'"));
            }
            None if !(j == jp || j == jp + 1) => {
                return Err(Error::precondition("(i) j must be j' or j'+1"));
            }
            _ => {}
        }
        if jp >= 1 && jp < l && alpha[jp - 1] + 1 < lambda[jp] {
            return Err(Error::precondition("(i) α_{j'} ≥ λ_{j'+1} - 1 fails"));
        }
        // (ii)
        if !self.r.validate() {
            return Err(Error::precondition("(ii) R is not an RSST"));
        }
        // (iii)
        if self.w_columns.windows(2).any(|p| p[0] >= p[1])
            || self.w_columns.iter().any(|&c| c <= j || c > jp)
        {
            return Err(Error::precondition("(iii) w must read border cells of columns j+1..j' in order"));
        }
        if j < jp {
            let (rj, rj1) = (self.border(j), self.border(j + 1));
            if let (Some(rj), Some(rj1)) = (rj, rj1) {
                if rj1 > rj + 1 && self.w_columns.first() != Some(&(j + 1)) {
                    return Err(Error::precondition("(iii) w must contain r_{j+1} when r_{j+1} > r_j + 1"));
                }
            }
        }
        let mut order = self.v_cells.clone();
        order.extend(
            self.w_columns
                .iter()
                .map(|&c| Cell::new(alpha[c - 1] as i32 + 1, c as i32)),
        );
        if !self.r.is_square_respecting_order(&order) {
            return Err(Error::precondition("(iii) vw is not a square respecting reading word of R"));
        }
        // (iv)
        if self.n.len() != l {
            return Err(Error::invalid(format!("need {l} flags")));
        }
        check_flags(&self.n)?;
        // (v)
        let w = self.w();
        for c in 1..=jp {
            let rc = self.border(c).expect("border cell") as i64;
            let exempt = c == j && (w.is_empty() || w[0] as i64 != rc + 1);
            let ok = if exempt { self.n[c - 1] <= rc - 1 } else { self.n[c - 1] == rc - 1 };
            if !ok {
                return Err(Error::precondition(format!("(v) n_{c} does not match r_{c} - 1")));
            }
        }
        Ok(())
    }

    /// Left side `v·J_α^n(⌊w⌋_j)` in Lam's quotient (`k = 3`).
    pub fn lhs(&self) -> Result<LamElement> {
        let alpha: Vec<i64> = self.alpha().iter().map(|&a| a as i64).collect();
        let j = self.j();
        let w = self.w();
        let mut spec = FlagSpec::flagged(&alpha, &self.n)?.with_prefix(&self.v());
        if !w.is_empty() {
            spec = spec.with_slot(j, &w)?;
        }
        Ok(flagged_schur_lam(&spec, 3))
    }

    /// Completions of `R` counted on the right side.
    pub fn completions(&self) -> Result<Vec<Rsst>> {
        let shape = RestrictedShape::new(self.r.shape().outer().clone(), Vec::new())?;
        enumerate(&EnumerationSpec {
            shape,
            fixed: self.r.entries().clone(),
            column_bounds: Some(self.n.clone()),
            content: None,
        })
    }

    pub fn check(&self) -> Result<Comparison> {
        self.validate()?;
        let lhs = self.lhs()?;
        let completions = self.completions()?;
        let rhs = sqread_sum_lam(&completions);
        Ok(Comparison::new(&lhs, &rhs, completions.len()))
    }
}

/// All instances of the inductive statement whose outer shape has column lengths
/// `lambda`, with `R` filled from `[max_entry]` and `n_c ≤ max_flag` on the free
/// columns. `v` is taken as `sqread` order restricted to the cells not read by `w`
/// whenever that is square respecting, so each `(R, w, n)` yields one instance.
pub fn technical_instances(lambda: &Partition, max_entry: i64, max_flag: i64) -> Result<Vec<TechnicalInstance>> {
    let l = lambda.len();
    let lam = lambda.parts().to_vec();
    let mut out = Vec::new();
    for alpha in carved_compositions(&lam) {
        let shape = RestrictedShape::new(lambda.clone(), alpha.clone())?;
        let (j, jp) = (peel_column(&alpha), last_open_column(&lam, &alpha));
        if carved_form(&alpha[..jp]).is_none() {
            continue;
        }
        let fills = enumerate(&EnumerationSpec {
            shape: shape.clone(),
            fixed: BTreeMap::new(),
            column_bounds: Some(vec![max_entry; l]),
            content: None,
        })?;
        for r in fills {
            let w_choices: Vec<Vec<usize>> = if j < jp { subsets((j + 1..=jp).collect()) } else { vec![Vec::new()] };
            for w_columns in w_choices {
                let w_cells: Vec<Cell> = w_columns
                    .iter()
                    .map(|&c| Cell::new(alpha[c - 1] as i32 + 1, c as i32))
                    .collect();
                let v_cells: Vec<Cell> = r.sqread_cells().into_iter().filter(|z| !w_cells.contains(z)).collect();
                for n in flag_choices(&r, &alpha, j, jp, l, max_flag) {
                    let inst = TechnicalInstance {
                        r: r.clone(),
                        v_cells: v_cells.clone(),
                        w_columns: w_columns.clone(),
                        n,
                    };
                    if inst.validate().is_ok() {
                        out.push(inst);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn subsets(items: Vec<usize>) -> Vec<Vec<usize>> {
    (0..1u32 << items.len())
        .map(|m| items.iter().enumerate().filter(|(i, _)| m & (1 << i) != 0).map(|(_, &x)| x).collect())
        .collect()
}

/// Weak compositions `α` with `α_c ≤ λ_c` giving a restricted shape.
fn carved_compositions(lambda: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(lambda.len());
    fn rec(lambda: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == lambda.len() {
            out.push(cur.clone());
            return;
        }
        let c = cur.len();
        for a in 0..=lambda[c] {
            let open = a < lambda[c];
            if open && cur.iter().any(|&b| b > a) {
                continue;
            }
            cur.push(a);
            rec(lambda, cur, out);
            cur.pop();
        }
    }
    rec(lambda, &mut cur, &mut out);
    out
}

fn flag_choices(r: &Rsst, alpha: &[usize], j: usize, jp: usize, l: usize, max_flag: i64) -> Vec<Vec<i64>> {
    let border = |c: usize| r.entry(Cell::new(alpha[c - 1] as i32 + 1, c as i32)).map(|x| x as i64);
    let mut base: Vec<Option<i64>> = vec![None; l];
    for c in 1..=jp {
        base[c - 1] = border(c).map(|x| x - 1);
    }
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::with_capacity(l);
    fn rec(base: &[Option<i64>], j: usize, max_flag: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let c = cur.len();
        if c == base.len() {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        let choices: Vec<i64> = match base[c] {
            Some(b) if c + 1 == j => (lo..=b).collect(),
            Some(b) => vec![b],
            None => (lo..=max_flag.max(lo)).collect(),
        };
        for x in choices {
            if x < lo {
                continue;
            }
            cur.push(x);
            rec(base, j, max_flag, cur, out);
            cur.pop();
        }
    }
    rec(&base, j, max_flag, &mut cur, &mut out);
    out
}

/// The commuting identity conjectured for the rotation quotient:
/// `J_α([m]⌊x y_1⋯y_t⌋[m], [n_1], …, [n_t]) = x·J_α([m]⌊y_1⋯y_t⌋[m], [n_1], …, [n_t])`
/// with `α = (a, a, a+1, …, a+t)`.
#[derive(Clone, Debug)]
pub struct CommutationConjecture {
    pub a: i64,
    pub m: i64,
    pub x: Letter,
    pub ys: Word,
    pub ns: Vec<i64>,
}

impl CommutationConjecture {
    pub fn validate(&self) -> Result<()> {
        let t = self.ys.len();
        if self.ns.len() != t {
            return Err(Error::invalid("need one flag per y"));
        }
        if self.a < 0 || self.m < 0 {
            return Err(Error::invalid("a and m must be nonnegative"));
        }
        let mut chain = vec![self.m];
        chain.extend_from_slice(&self.ns);
        if chain.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::precondition("need m ≤ n_1 ≤ … ≤ n_t"));
        }
        if self.ns.iter().zip(&self.ys).any(|(&n, &y)| n >= y as i64) {
            return Err(Error::precondition("need n_i < y_i"));
        }
        if self.m >= self.x as i64 {
            return Err(Error::precondition("need m < x"));
        }
        if let Some(&y1) = self.ys.first() {
            if y1 - self.x < 3 {
                return Err(Error::precondition("need y_1 - x ≥ 3"));
            }
        }
        if self.ys.windows(2).any(|p| p[1] - p[0] < 3) {
            return Err(Error::precondition("need y_{i+1} - y_i ≥ 3"));
        }
        Ok(())
    }

    fn base(&self) -> Result<FlagSpec> {
        let t = self.ys.len() as i64;
        let mut alpha = vec![self.a, self.a];
        alpha.extend((1..=t).map(|i| self.a + i));
        let mut n = vec![self.m, self.m];
        n.extend_from_slice(&self.ns);
        FlagSpec::flagged(&alpha, &n)
    }

    pub fn sides(&self) -> Result<(AlgebraElement, AlgebraElement)> {
        self.validate()?;
        let mut xy = vec![self.x];
        xy.extend_from_slice(&self.ys);
        let lhs = flagged_schur(&self.base()?.with_slot(1, &xy)?);
        let rhs = flagged_schur(&self.base()?.with_slot(1, &self.ys)?.with_prefix(&[self.x]));
        Ok((lhs, rhs))
    }

    /// Whether the identity holds in the rotation quotient for `k = 3`.
    pub fn check(&self) -> Result<bool> {
        let (lhs, rhs) = self.sides()?;
        equal_in_quotient(&lhs, &rhs, &RelationSystem::RotLe { k: 3 })
    }
}


#[cfg(test)]
mod technical_tests {
    use super::*;

    #[test]
    fn technical_instances_hold() {
        let (mut total, mut with_w, mut paired) = (0, 0, 0);
        for (cols, max_entry, max_flag) in [(vec![2, 2], 7, 6), (vec![3, 3], 7, 6), (vec![2, 1], 6, 6), (vec![3, 2, 1], 6, 5)] {
            let lambda = Partition::new(cols).unwrap();
            for inst in technical_instances(&lambda, max_entry, max_flag).unwrap() {
                let cmp = inst.check().unwrap();
                assert!(cmp.equal, "{:?} v={:?} w={:?} n={:?}", inst.r.rows(), inst.v(), inst.w(), inst.n);
                total += 1;
                with_w += usize::from(!inst.w().is_empty());
                paired += usize::from(matches!(carved_form(&inst.alpha()[..inst.j_prime()]), Some(Some(_))));
            }
        }
        assert!(total > 100 && with_w > 10 && paired > 10, "{total} {with_w} {paired}");
    }
}
