//! Lam's quotient `U/I_k`: `u_i² = 0`, `u_{i+k}u_iu_{i+k} = u_iu_{i+k}u_i = 0`,
//! `u_iu_j = u_ju_i` for `|i-j| > k`, and `u_iu_j = q^{-1}u_ju_i` for `0 < j-i < k`.
//!
//! At `q = 1` two letters commute unless they are equal or differ by exactly `k`, so the
//! nonzero words of a class are the linear extensions of one heap. The representative
//! is the lexicographically least of them and each word `v` of the class equals
//! `q^{invi_k(v) - invi_k(rep)} · rep`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::algebra::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::words::{invi, is_nonzero_word, Letter, Word};

/// Default cap on the number of words visited when enumerating a class.
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalForm {
    Zero,
    Term { rep: Word, power: i32 },
}

impl CanonicalForm {
    pub fn rep(&self) -> Option<&Word> {
        match self {
            CanonicalForm::Zero => None,
            CanonicalForm::Term { rep, .. } => Some(rep),
        }
    }

    pub fn power(&self) -> Option<i32> {
        match self {
            CanonicalForm::Zero => None,
            CanonicalForm::Term { power, .. } => Some(*power),
        }
    }
}

fn commute_at_q1(a: Letter, b: Letter, k: i32) -> bool {
    a != b && (a - b).abs() != k
}

/// Power of `q` picked up when `x` moves left across `y` (from `yx` to `xy`).
fn swap_power(y: Letter, x: Letter, k: i32) -> i32 {
    let d = y - x;
    if 0 < d && d < k {
        1
    } else if 0 < -d && -d < k {
        -1
    } else {
        0
    }
}

/// Given a canonical representative `rep` of a nonzero class, returns the canonical
/// representative of `rep · x` and the power of `q` relating them, or `None` if the
/// product vanishes.
///
/// Appending a maximal element to a heap leaves the greedy order of the other letters
/// unchanged, so `x` lands at the first position after its last non-commuting letter
/// where the next letter is larger.
pub fn append_letter(rep: &[Letter], x: Letter, k: i32) -> Option<(Word, i32)> {
    if let Some(i) = rep.iter().rposition(|&y| y == x) {
        let tail = &rep[i + 1..];
        if !(tail.contains(&(x - k)) && tail.contains(&(x + k))) {
            return None;
        }
    }
    let start = rep
        .iter()
        .rposition(|&y| !commute_at_q1(x, y, k))
        .map_or(0, |i| i + 1);
    let mut p = start;
    while p < rep.len() && rep[p] < x {
        p += 1;
    }
    let power = rep[p..].iter().map(|&y| swap_power(y, x, k)).sum();
    let mut out = Vec::with_capacity(rep.len() + 1);
    out.extend_from_slice(&rep[..p]);
    out.push(x);
    out.extend_from_slice(&rep[p..]);
    Some((out, power))
}

/// Canonical form of a word in Lam's quotient.
pub fn canonical_form(v: &[Letter], k: i32) -> CanonicalForm {
    if !is_nonzero_word(v, k) {
        return CanonicalForm::Zero;
    }
    let mut rep: Word = Vec::with_capacity(v.len());
    let mut power = 0;
    for &x in v {
        let (next, p) = append_letter(&rep, x, k).expect("nonzero words have nonzero prefixes");
        rep = next;
        power += p;
    }
    CanonicalForm::Term { rep, power }
}

/// All words reachable from `v` by commutations (far swaps and `q`-swaps), sorted.
pub fn equivalence_class(v: &[Letter], k: i32, cap: usize) -> Result<Vec<Word>> {
    if !is_nonzero_word(v, k) {
        return Err(Error::precondition("the word is zero in the quotient"));
    }
    let mut seen: HashSet<Word> = HashSet::from([v.to_vec()]);
    let mut queue: VecDeque<Word> = VecDeque::from([v.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if commute_at_q1(w[i], w[i + 1], k) {
                let mut n = w.clone();
                n.swap(i, i + 1);
                if seen.insert(n.clone()) {
                    if seen.len() > cap {
                        return Err(Error::guard("equivalence class size", cap));
                    }
                    queue.push_back(n);
                }
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Canonical form computed by exhausting the class; slow, used as a cross-check.
pub fn canonical_form_by_search(v: &[Letter], k: i32, cap: usize) -> Result<CanonicalForm> {
    if !is_nonzero_word(v, k) {
        return Ok(CanonicalForm::Zero);
    }
    let class = equivalence_class(v, k, cap)?;
    let rep = class.into_iter().next().expect("class contains v");
    let power = invi(v, k) as i32 - invi(&rep, k) as i32;
    Ok(CanonicalForm::Term { rep, power })
}

/// An element of Lam's quotient, stored on the basis of canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LamElement {
    k: i32,
    terms: HashMap<Word, LaurentPoly>,
}

impl LamElement {
    pub fn zero(k: i32) -> Self {
        LamElement { k, terms: HashMap::new() }
    }

    pub fn one(k: i32) -> Self {
        let mut e = Self::zero(k);
        e.terms.insert(Vec::new(), LaurentPoly::one());
        e
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn from_word(w: &[Letter], k: i32) -> Self {
        let mut e = Self::zero(k);
        e.add_word(w, &LaurentPoly::one());
        e
    }

    pub fn reduce(f: &AlgebraElement, k: i32) -> Self {
        let mut e = Self::zero(k);
        for (w, c) in f.terms() {
            e.add_word(w, c);
        }
        e
    }

    /// Adds `coeff · w` after reducing `w`.
    pub fn add_word(&mut self, w: &[Letter], coeff: &LaurentPoly) {
        if let CanonicalForm::Term { rep, power } = canonical_form(w, self.k) {
            self.add_rep(rep, &coeff.shifted(power));
        }
    }

    fn add_rep(&mut self, rep: Word, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&rep) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&rep);
                }
            }
            None => {
                self.terms.insert(rep, coeff.clone());
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &LamElement, sign_negative: bool) {
        assert_eq!(self.k, other.k, "mixing different k");
        for (rep, c) in &other.terms {
            if sign_negative {
                self.add_rep(rep.clone(), &(-c.clone()));
            } else {
                self.add_rep(rep.clone(), c);
            }
        }
    }

    /// `self · w`, reduced letter by letter.
    pub fn mul_word(&self, w: &[Letter]) -> LamElement {
        let mut cur = self.clone();
        for &x in w {
            cur = cur.mul_letter(x);
        }
        cur
    }

    pub fn mul_letter(&self, x: Letter) -> LamElement {
        let mut out = LamElement::zero(self.k);
        for (rep, c) in &self.terms {
            if let Some((next, p)) = append_letter(rep, x, self.k) {
                out.add_rep(next, &c.shifted(p));
            }
        }
        out
    }

    /// `self · f` for a free-algebra element `f`.
    pub fn mul_element(&self, f: &AlgebraElement) -> LamElement {
        let mut out = LamElement::zero(self.k);
        for (rep, c) in &self.terms {
            for (w, g) in f.terms() {
                let mut cur = Some((rep.clone(), 0));
                for &x in w {
                    cur = cur.and_then(|(r, p)| append_letter(&r, x, self.k).map(|(r2, p2)| (r2, p + p2)));
                }
                if let Some((r, p)) = cur {
                    out.add_rep(r, &(c * g).shifted(p));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, rep: &[Letter]) -> LaurentPoly {
        self.terms.get(rep).cloned().unwrap_or_default()
    }

    /// Terms sorted by representative.
    pub fn sorted_terms(&self) -> BTreeMap<Word, LaurentPoly> {
        self.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect()
    }

    /// The element as a free-algebra sum of representatives.
    pub fn to_element(&self) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        for (w, c) in &self.terms {
            e.add_term(w.clone(), c);
        }
        e
    }

    pub fn difference(&self, other: &LamElement) -> LamElement {
        let mut d = self.clone();
        d.add_assign_scaled(other, true);
        d
    }
}

/// Equality in Lam's quotient.
pub fn equal_in_lam(f: &AlgebraElement, g: &AlgebraElement, k: i32) -> bool {
    LamElement::reduce(f, k) == LamElement::reduce(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::digits;

    #[test]
    fn q_commutation_example() {
        assert_eq!(canonical_form(&[2, 1], 3), CanonicalForm::Term { rep: vec![1, 2], power: 1 });
        assert_eq!(canonical_form(&[1, 1], 3), CanonicalForm::Zero);
        let t = CanonicalForm::Term { rep: vec![1, 5], power: 0 };
        assert_eq!(canonical_form(&[1, 5], 3), t);
        assert_eq!(canonical_form(&[5, 1], 3), t);
        // Letters at distance exactly k do not commute.
        assert_eq!(canonical_form(&[4, 1], 3), CanonicalForm::Term { rep: vec![4, 1], power: 0 });
    }

    #[test]
    fn greedy_matches_class_search() {
        let words = [digits("48714235"), digits("8341275"), digits("563412"), vec![3, -1, 6, 2, 0, 3]];
        for v in &words {
            for k in 1..=4 {
                assert_eq!(canonical_form(v, k), canonical_form_by_search(v, k, DEFAULT_CLASS_CAP).unwrap());
            }
        }
    }

    #[test]
    fn class_guard_trips() {
        let v: Word = (0..9).map(|i| i * 10).collect();
        assert!(equivalence_class(&v, 3, 100).unwrap_err().is_guard());
    }

    #[test]
    fn reduced_elements_cancel() {
        let mut f = AlgebraElement::from_word(vec![2, 1]);
        f.add_term(vec![1, 2], &LaurentPoly::monomial(1, -1));
        assert!(LamElement::reduce(&f, 3).is_zero());
        let x = LamElement::from_word(&[2], 3).mul_word(&[1]);
        assert_eq!(x, LamElement::reduce(&AlgebraElement::from_word(vec![2, 1]), 3));
    }
}
