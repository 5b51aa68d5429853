//! Inversion-statistic LLT polynomials of `k`-tuples of skew shapes, spin LLT
//! polynomials via ribbon additions, and their Schur expansions.
//!
//! [`qlr_coefficients`] counts restricted square strict tableaux (the positive formula
//! for `k = 3`); [`SymFunc::schur_expand`] of [`llt_polynomial`] is the independent
//! quasisymmetric route to the same numbers.

pub mod symfunc;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::action::act_on_tuple;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rsst::{enumerate_by_statistics, enumerate, EnumerationSpec, Rsst};
use crate::shapes::{cell_less, partitions_of, Cell, Order, Partition, SkewShape, SkewShapeJson};
use crate::words::{invi, Letter, Word};

pub use symfunc::{standard_tableaux, syt_descent_counts, word_descents, DescentSet, SymFunc};

/// Largest number of words visited when enumerating `W_k(β)`.
pub const DEFAULT_WORD_CAP: usize = 5_000_000;

/// A `k`-tuple of skew shapes with contents; component `i` has shifted contents
/// `k·c(z) + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTuple {
    components: Vec<SkewShape>,
}

/// A cell of a tuple with its component and shifted content.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TupleCell {
    pub component: usize,
    pub cell: Cell,
    pub shifted: Letter,
}

/// Content vector `c`, `k`-descent set `D` (1-based positions into `c^stand`) and the
/// letter multiset `D'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentData {
    pub content: Word,
    pub descents: Vec<(usize, usize)>,
    pub letter_descents: Vec<(Letter, Letter)>,
}

impl SkewTuple {
    pub fn new(components: Vec<SkewShape>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("a tuple needs at least one component"));
        }
        Ok(SkewTuple { components })
    }

    /// `(γ^(0)/δ^(0), …)` with every component translated east by `shifts[i]`.
    pub fn from_partitions(pairs: &[(Partition, Partition)], shifts: &[i32]) -> Result<Self> {
        if shifts.len() != pairs.len() {
            return Err(Error::invalid("need one shift per component"));
        }
        let comps = pairs
            .iter()
            .zip(shifts)
            .map(|((o, i), &s)| SkewShape::from_partitions(o, i, s))
            .collect::<Result<Vec<_>>>()?;
        SkewTuple::new(comps)
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[SkewShape] {
        &self.components
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(SkewShape::size).sum()
    }

    pub fn cells(&self) -> Vec<TupleCell> {
        let k = self.k() as Letter;
        let mut out = Vec::new();
        for (i, comp) in self.components.iter().enumerate() {
            for z in comp.cells() {
                out.push(TupleCell {
                    component: i,
                    cell: z,
                    shifted: k * z.content() + i as Letter,
                });
            }
        }
        out
    }

    /// Weakly increasing shifted contents.
    pub fn content_vector(&self) -> Word {
        let mut c: Word = self.cells().iter().map(|z| z.shifted).collect();
        c.sort_unstable();
        c
    }

    /// Pairs of cells `z <↘ z'` of one component with `c̃(z) = c̃(z') + k`.
    fn descent_pairs(&self) -> Vec<(TupleCell, TupleCell)> {
        let k = self.k() as Letter;
        let cells = self.cells();
        let mut out = Vec::new();
        for a in &cells {
            for b in &cells {
                if a.component == b.component && a.shifted == b.shifted + k && cell_less(a.cell, b.cell, Order::SouthEast) {
                    out.push((*a, *b));
                }
            }
        }
        out
    }

    /// `c̃^stand`: cells of equal shifted content are numbered along the `↘`
    /// direction, after all cells of smaller shifted content.
    pub fn standardized_contents(&self) -> BTreeMap<(usize, Cell), usize> {
        let mut cells = self.cells();
        cells.sort_by_key(|z| (z.shifted, z.cell.row, z.cell.col));
        cells.iter().enumerate().map(|(i, z)| ((z.component, z.cell), i + 1)).collect()
    }

    pub fn descent_data(&self) -> DescentData {
        let stand = self.standardized_contents();
        let pairs = self.descent_pairs();
        let mut descents: Vec<(usize, usize)> = pairs
            .iter()
            .map(|(z, zp)| (stand[&(zp.component, zp.cell)], stand[&(z.component, z.cell)]))
            .collect();
        descents.sort_unstable();
        let mut letter_descents: Vec<(Letter, Letter)> = pairs.iter().map(|(z, zp)| (z.shifted, zp.shifted)).collect();
        letter_descents.sort_unstable();
        DescentData {
            content: self.content_vector(),
            descents,
            letter_descents,
        }
    }

    /// `(δ, γ)` with contents preserved, so that `W_k(β) = {v : δ ∘_0 v = γ}`.
    pub fn realize(&self) -> Result<(Vec<Partition>, Vec<Partition>)> {
        let mut inner = Vec::new();
        let mut outer = Vec::new();
        for comp in &self.components {
            let (o, i) = comp.realize()?;
            outer.push(o);
            inner.push(i);
        }
        Ok((inner, outer))
    }

    /// Whether `δ ∘_0 v = γ`.
    pub fn contains_word(&self, v: &[Letter]) -> bool {
        let Ok((inner, outer)) = self.realize() else {
            return false;
        };
        act_on_tuple(&inner, v, self.k(), &vec![0; self.k()]).as_deref() == Some(outer.as_slice())
    }

    /// Calls `visit(word)` on every element of `W_k(β)`, in lexicographic order.
    fn visit_words(&self, cap: usize, mut visit: impl FnMut(&[Letter])) -> Result<()> {
        let (inner, outer) = self.realize()?;
        let k = self.k() as Letter;
        let n = self.size();
        let mut word = Vec::with_capacity(n);
        let mut count = 0usize;
        fn rec(
            cur: &mut Vec<Partition>,
            outer: &[Partition],
            k: Letter,
            n: usize,
            word: &mut Word,
            count: &mut usize,
            cap: usize,
            visit: &mut impl FnMut(&[Letter]),
        ) -> Result<()> {
            if word.len() == n {
                *count += 1;
                if *count > cap {
                    return Err(Error::guard("words in W_k(β)", cap));
                }
                visit(word);
                return Ok(());
            }
            let mut moves: Vec<(Letter, usize, Partition)> = Vec::new();
            for i in 0..cur.len() {
                let p = &cur[i];
                for r in 1..=p.len() + 1 {
                    let col = p.part(r) + 1;
                    let addable = r == 1 || p.part(r - 1) >= col;
                    if addable && outer[i].part(r) >= col {
                        let content = col as Letter - r as Letter;
                        let next = p.add_cell(content).expect("addable cell");
                        moves.push((k * content + i as Letter, i, next));
                    }
                }
            }
            moves.sort_by_key(|m| m.0);
            for (letter, i, next) in moves {
                let prev = std::mem::replace(&mut cur[i], next);
                word.push(letter);
                rec(cur, outer, k, n, word, count, cap, visit)?;
                word.pop();
                cur[i] = prev;
            }
            Ok(())
        }
        let mut cur = inner;
        rec(&mut cur, &outer, k, n, &mut word, &mut count, cap, &mut visit)
    }

    /// `W_k(β)`, sorted.
    pub fn words(&self, cap: usize) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        self.visit_words(cap, |w| out.push(w.to_vec()))?;
        Ok(out)
    }
}

/// JSON form: a list of `{"outer", "inner", "shift"}` components.
impl Serialize for SkewTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.components.iter().map(SkewShapeJson::from).collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let comps = Vec::<SkewShapeJson>::deserialize(d)?;
        let comps = comps
            .into_iter()
            .map(SkewShape::try_from)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        SkewTuple::new(comps).map_err(serde::de::Error::custom)
    }
}

/// `W_k(β)` for the tuple's own `k`.
pub fn enumerate_w(beta: &SkewTuple, cap: usize) -> Result<Vec<Word>> {
    beta.words(cap)
}

/// `𝒢_β(x; q) = Σ_{v ∈ W_k(β)} q^{invi_k(v)} Q_{Des(v)}`.
pub fn llt_polynomial(beta: &SkewTuple, cap: usize) -> Result<SymFunc> {
    let k = beta.k() as Letter;
    let mut f = SymFunc::zero(beta.size());
    beta.visit_words(cap, |v| f.add_monomial(word_descents(v), invi(v, k) as i32))?;
    Ok(f)
}

/// Spin LLT `G^{(k)}_{μ/ν}(x; t) = Σ_v t^{spin} Q_{Des(v)}` over words of ribbon
/// contents taking `ν` to `μ`.
pub fn spin_llt(mu: &Partition, nu: &Partition, k: usize, cap: usize) -> Result<SymFunc> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    if !mu.contains(nu) {
        return Err(Error::invalid(format!("{nu} is not contained in {mu}")));
    }
    let cells = mu.size() - nu.size();
    if cells % k != 0 || mu.core(k) != nu.core(k) {
        return Err(Error::invalid(format!("{mu}/{nu} cannot be tiled by {k}-ribbons")));
    }
    let n = cells / k;
    let contents: Vec<i32> = mu.cells().into_iter().filter(|z| !nu.contains_cell(*z)).map(|z| z.content()).collect();
    let lo = contents.iter().copied().min().unwrap_or(0);
    let hi = contents.iter().copied().max().unwrap_or(0);
    let mut f = SymFunc::zero(n);
    let mut word = Vec::with_capacity(n);
    let mut count = 0usize;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        cur: &Partition,
        mu: &Partition,
        k: usize,
        range: (i32, i32),
        spin: usize,
        word: &mut Word,
        f: &mut SymFunc,
        count: &mut usize,
        cap: usize,
    ) -> Result<()> {
        if cur == mu {
            *count += 1;
            if *count > cap {
                return Err(Error::guard("ribbon words", cap));
            }
            f.add_monomial(word_descents(word), spin as i32);
            return Ok(());
        }
        for x in range.0..=range.1 {
            if let Some((next, s)) = cur.add_ribbon(k, x) {
                if mu.contains(&next) {
                    word.push(x);
                    rec(&next, mu, k, range, spin + s, word, f, count, cap)?;
                    word.pop();
                }
            }
        }
        Ok(())
    }
    rec(nu, mu, k, (lo, hi), 0, &mut word, &mut f, &mut count, cap)?;
    if f.is_zero() {
        return Err(Error::invalid(format!("{mu}/{nu} cannot be tiled by {k}-ribbons")));
    }
    Ok(f)
}

/// The `k`-tuple matched with a ribbon-tileable `μ/ν`: `quot_k(μ)/quot_k(ν)` with
/// component `i` translated east by the runner charge `(c_i - i)/k`.
pub fn tuple_from_ribbon_shape(mu: &Partition, nu: &Partition, k: usize) -> Result<SkewTuple> {
    let (core, qmu) = mu.core_and_quotient(k);
    let (core_nu, qnu) = nu.core_and_quotient(k);
    if core != core_nu || !mu.contains(nu) {
        return Err(Error::invalid(format!("{mu}/{nu} cannot be tiled by {k}-ribbons")));
    }
    let shifts: Vec<i32> = core.runner_charges(k).iter().map(|&d| d as i32).collect();
    let pairs: Vec<(Partition, Partition)> = qmu.into_iter().zip(qnu).collect();
    if pairs.iter().any(|(o, i)| !o.contains(i)) {
        return Err(Error::invalid(format!("{mu}/{nu} cannot be tiled by {k}-ribbons")));
    }
    SkewTuple::from_partitions(&pairs, &shifts)
}

/// `𝔠^λ_β(q)` for a 3-tuple, summing `q^{invi_3(T)}` over nonzero RSST of shape `λ`
/// with sorted entries `c` and 3-descent multiset `D'`. Zero coefficients are omitted.
pub fn qlr_coefficients(beta: &SkewTuple) -> Result<BTreeMap<Partition, LaurentPoly>> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(beta.size()) {
        let c = qlr_coefficient(beta, &lambda)?;
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

/// A single coefficient `𝔠^λ_β(q)` (zero when `|λ| ≠ |β|`).
pub fn qlr_coefficient(beta: &SkewTuple, lambda: &Partition) -> Result<LaurentPoly> {
    Ok(qlr_tableaux(beta, lambda)?
        .iter()
        .fold(LaurentPoly::zero(), |acc, t| acc + LaurentPoly::monomial(t.invi3() as i32, 1)))
}

/// The tableaux counted by [`qlr_coefficient`].
pub fn qlr_tableaux(beta: &SkewTuple, lambda: &Partition) -> Result<Vec<Rsst>> {
    if beta.k() != 3 {
        return Err(Error::precondition("the tableau formula needs a 3-tuple"));
    }
    if lambda.size() != beta.size() {
        return Ok(Vec::new());
    }
    let data = beta.descent_data();
    enumerate_by_statistics(lambda, &data.content, &data.letter_descents)
}

/// The same coefficients from reading words: `Σ q^{invi_3(v)}` over `sqread(T) ∈ W_3(β)`
/// with `T` an RSST of shape `λ` and content `c`.
pub fn qlr_by_reading_words(beta: &SkewTuple) -> Result<BTreeMap<Partition, LaurentPoly>> {
    if beta.k() != 3 {
        return Err(Error::precondition("the tableau formula needs a 3-tuple"));
    }
    let content = beta.content_vector();
    let mut out = BTreeMap::new();
    for lambda in partitions_of(beta.size()) {
        let mut c = LaurentPoly::zero();
        for t in enumerate(&EnumerationSpec::with_content(&lambda, &content))? {
            let v = t.sqread();
            if beta.contains_word(&v) {
                c += &LaurentPoly::monomial(invi(&v, 3) as i32, 1);
            }
        }
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::digits;
    use num_traits::Zero;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tuple(pairs: &[(&[usize], &[usize])]) -> SkewTuple {
        let pairs: Vec<_> = pairs.iter().map(|(o, i)| (p(o), p(i))).collect();
        SkewTuple::from_partitions(&pairs, &vec![0; pairs.len()]).unwrap()
    }

    fn example_tuple() -> SkewTuple {
        tuple(&[(&[2], &[1]), (&[3, 3], &[1, 1]), (&[3, 3], &[2, 1])])
    }

    #[test]
    fn descent_data_of_worked_example() {
        let d = example_tuple().descent_data();
        assert_eq!(d.content, digits("12344578"));
        assert_eq!(d.descents, vec![(1, 4), (5, 7), (6, 8)]);
        assert_eq!(d.letter_descents, vec![(4, 1), (7, 4), (8, 5)]);
        let stand = example_tuple().standardized_contents();
        assert_eq!(stand[&(1, Cell::new(1, 2))], 4);
        assert_eq!(stand[&(1, Cell::new(2, 3))], 5);
        assert_eq!(stand[&(2, Cell::new(2, 3))], 6);
    }

    #[test]
    fn word_membership() {
        let intro = tuple(&[(&[2], &[1]), (&[3, 2], &[1, 1]), (&[3, 3], &[2, 1])]);
        let w = intro.words(DEFAULT_WORD_CAP).unwrap();
        assert!(w.contains(&digits("8341275")));
        assert!(intro.contains_word(&digits("8341275")));
        let ex = example_tuple().words(DEFAULT_WORD_CAP).unwrap();
        assert!(ex.contains(&digits("48714235")));
        assert!(ex.iter().all(|v| crate::words::desi(v, 3) == vec![(4, 1), (7, 4), (8, 5)]));
        let single = tuple(&[(&[], &[]), (&[1], &[]), (&[], &[])]);
        assert_eq!(single.words(10).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn empty_tuple_is_one() {
        let t = tuple(&[(&[], &[]), (&[], &[]), (&[], &[])]);
        assert_eq!(llt_polynomial(&t, 10).unwrap(), SymFunc::one());
    }

    #[test]
    fn worked_example_coefficient() {
        let beta = example_tuple();
        let f = llt_polynomial(&beta, DEFAULT_WORD_CAP).unwrap();
        assert!(!f.coeff(&word_descents(&digits("48714235"))).coeff(6).is_zero());
        let oracle = f.schur_expand().unwrap();
        let want = LaurentPoly::from_terms([(4, 1), (5, 2)]);
        assert_eq!(oracle[&p(&[4, 3, 1])], want);
        assert_eq!(qlr_coefficient(&beta, &p(&[4, 3, 1])).unwrap(), want);
        let mut words: Vec<Word> = qlr_tableaux(&beta, &p(&[4, 3, 1])).unwrap().iter().map(Rsst::sqread).collect();
        words.sort();
        assert_eq!(words, vec![digits("42173845"), digits("43172845"), digits("83412745")]);
        assert_eq!(qlr_coefficients(&beta).unwrap(), oracle);
        assert_eq!(qlr_by_reading_words(&beta).unwrap(), oracle);
        assert!(qlr_coefficient(&beta, &p(&[4, 3])).unwrap().is_zero());
    }

    #[test]
    fn spin_single_ribbon() {
        let f = spin_llt(&p(&[3]), &p(&[]), 3, 10).unwrap();
        let mut want = SymFunc::zero(1);
        want.add_monomial(vec![], 0);
        assert_eq!(f, want);
        assert_eq!(spin_llt(&p(&[2, 1]), &p(&[2, 1]), 3, 10).unwrap(), SymFunc::one());
        assert!(spin_llt(&p(&[2]), &p(&[]), 3, 10).is_err());
    }

    #[test]
    fn spin_and_inversion_versions_agree_up_to_power() {
        for (nu, contents, k) in [(vec![], vec![2, 0], 3), (vec![], vec![1, 3, -1], 2), (vec![2, 1], vec![3, -2, 1], 2), (vec![1], vec![3, -1, 0], 3)] {
            let nu = p(&nu);
            let mut mu = nu.clone();
            for x in contents {
                mu = mu.add_ribbon(k, x).unwrap().0;
            }
            let g = spin_llt(&mu, &nu, k, DEFAULT_WORD_CAP).unwrap();
            let beta = tuple_from_ribbon_shape(&mu, &nu, k).unwrap();
            let inv = llt_polynomial(&beta, DEFAULT_WORD_CAP).unwrap().substitute_power(-2);
            assert!(inv.monomial_ratio(&g).is_some(), "{mu}/{nu} k={k}");
        }
    }
}
