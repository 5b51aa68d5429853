use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::laurent::LaurentPoly;
use crate::words::{sorted_letters, Letter, Word};

/// A finite sum `Σ f_w · w` of words with Laurent-polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty word.
    pub fn one() -> Self {
        Self::from_word(Vec::new())
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, LaurentPoly::one())
    }

    pub fn monomial(w: Word, coeff: LaurentPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &coeff);
        e
    }

    /// Sum of the given words, each with coefficient 1.
    pub fn sum_of_words<I: IntoIterator<Item = Word>>(words: I) -> Self {
        let mut e = Self::zero();
        for w in words {
            e.add_term(w, &LaurentPoly::one());
        }
        e
    }

    pub fn add_term(&mut self, w: Word, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, coeff.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[Letter]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, f) in &self.terms {
            out.add_term(w.clone(), &(f * c));
        }
        out
    }

    /// `self · w`.
    pub fn mul_word(&self, w: &[Letter]) -> Self {
        let mut out = Self::zero();
        for (v, f) in &self.terms {
            let mut vw = v.clone();
            vw.extend_from_slice(w);
            out.add_term(vw, f);
        }
        out
    }

    /// `w · self`.
    pub fn left_mul_word(&self, w: &[Letter]) -> Self {
        let mut out = Self::zero();
        for (v, f) in &self.terms {
            let mut wv = w.to_vec();
            wv.extend_from_slice(v);
            out.add_term(wv, f);
        }
        out
    }

    /// Splits into homogeneous pieces keyed by the sorted letter multiset.
    pub fn by_multiset(&self) -> BTreeMap<Word, AlgebraElement> {
        let mut out: BTreeMap<Word, AlgebraElement> = BTreeMap::new();
        for (w, f) in &self.terms {
            out.entry(sorted_letters(w)).or_default().add_term(w.clone(), f);
        }
        out
    }
}

/// The bilinear form in which words are orthonormal.
pub fn pairing(f: &AlgebraElement, g: &AlgebraElement) -> LaurentPoly {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut out = LaurentPoly::zero();
    for (w, a) in small.terms() {
        if let Some(b) = large.terms.get(w) {
            out += &(a * b);
        }
    }
    out
}

impl AddAssign<&AlgebraElement> for AlgebraElement {
    fn add_assign(&mut self, rhs: &AlgebraElement) {
        for (w, f) in &rhs.terms {
            self.add_term(w.clone(), f);
        }
    }
}

impl SubAssign<&AlgebraElement> for AlgebraElement {
    fn sub_assign(&mut self, rhs: &AlgebraElement) {
        for (w, f) in &rhs.terms {
            self.add_term(w.clone(), &(-f.clone()));
        }
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.into_iter().map(|(w, f)| (w, -f)).collect(),
        }
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (v, f) in &self.terms {
            for (w, g) in &rhs.terms {
                let mut vw = v.clone();
                vw.extend_from_slice(w);
                out.add_term(vw, &(f * g));
            }
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    /// Renders as `(coeff)*[w] + ...`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let letters: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            if *c == LaurentPoly::one() {
                write!(f, "[{}]", letters.join(","))?;
            } else {
                write!(f, "({c})*[{}]", letters.join(","))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_is_orthonormal_on_words() {
        let a = AlgebraElement::from_word(vec![1, 2]);
        let b = AlgebraElement::from_word(vec![2, 1]);
        assert_eq!(pairing(&a, &a), LaurentPoly::one());
        assert_eq!(pairing(&a, &b), LaurentPoly::zero());
    }

    #[test]
    fn products_concatenate() {
        let a = &AlgebraElement::from_word(vec![1]) + &AlgebraElement::from_word(vec![2]);
        let sq = &a * &a;
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.coeff(&[2, 1]), LaurentPoly::one());
        let diff = &sq - &sq;
        assert!(diff.is_zero());
    }

    #[test]
    fn multiset_split() {
        let e = AlgebraElement::sum_of_words([vec![1, 2], vec![2, 1], vec![3]]);
        let parts = e.by_multiset();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&vec![1, 2]].len(), 2);
    }
}
