//! Laurent polynomials in a single indeterminate with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A finite sum `Σ c_e q^e` with `e ∈ ℤ`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · q^exp`
    pub fn monomial(exp: i32, c: i64) -> Self {
        Self::monomial_rational(exp, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial_rational(exp: i32, c: BigRational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.coeffs.insert(exp, c);
        }
        p
    }

    /// Builds a polynomial from `(exponent, integer coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&exp);
                }
            }
            None => {
                self.coeffs.insert(exp, c.clone());
            }
        }
    }

    /// Adds `sign · q^shift · other` in place.
    pub fn add_shifted(&mut self, other: &LaurentPoly, shift: i32, negate: bool) {
        for (e, c) in &other.coeffs {
            if negate {
                self.add_term(e + shift, &(-c));
            } else {
                self.add_term(e + shift, c);
            }
        }
    }

    /// Multiplication by `q^shift`.
    pub fn shifted(&self, shift: i32) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Substitutes `q ↦ t^factor` (e.g. `factor = -2` for `q = t^{-2}`).
    pub fn substitute_power(&self, factor: i32) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.coeffs {
            p.add_term(e * factor, c);
        }
        p
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// True for polynomials in `q` (no negative exponents) with nonnegative integer coefficients.
    pub fn is_in_natural_polynomials(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(e, c)| *e >= 0 && c.is_integer() && !c.is_negative())
    }

    /// If `self = q^e · other` for a single integer `e`, returns `e`.
    pub fn monomial_ratio(&self, other: &LaurentPoly) -> Option<i32> {
        if self.is_zero() || other.is_zero() || self.len() != other.len() {
            return None;
        }
        let e = self.min_exp()? - other.min_exp()?;
        if other.shifted(e) == *self {
            Some(e)
        } else {
            None
        }
    }

    /// `[exponent, numerator, denominator]` triples in increasing exponent order.
    pub fn to_triples(&self) -> Vec<(i32, BigInt, BigInt)> {
        self.coeffs
            .iter()
            .map(|(e, c)| (*e, c.numer().clone(), c.denom().clone()))
            .collect()
    }

    pub fn from_triples<I: IntoIterator<Item = (i32, BigInt, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, n, d) in it {
            p.add_term(e, &BigRational::new(n, d));
        }
        p
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(0, c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_shifted(rhs, 0, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_shifted(rhs, 0, true);
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders as e.g. `q^4 + 2*q^5`, `-q^-1 + 1/2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let var = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{abs}*{var}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(i32, String, String)> = self
            .to_triples()
            .into_iter()
            .map(|(e, n, d)| (e, n.to_string(), d.to_string()))
            .collect();
        // Small values serialize as plain JSON integers; big ones fall back to strings.
        let values: Vec<serde_json::Value> = triples
            .into_iter()
            .map(|(e, n, d)| {
                let num = n
                    .parse::<i64>()
                    .map(serde_json::Value::from)
                    .unwrap_or(serde_json::Value::String(n));
                let den = d
                    .parse::<i64>()
                    .map(serde_json::Value::from)
                    .unwrap_or(serde_json::Value::String(d));
                serde_json::Value::Array(vec![e.into(), num, den])
            })
            .collect();
        values.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw: Vec<(i32, serde_json::Value, serde_json::Value)> = Vec::deserialize(d)?;
        let parse = |v: &serde_json::Value| -> Result<BigInt, D::Error> {
            match v {
                serde_json::Value::Number(n) => n
                    .to_string()
                    .parse::<BigInt>()
                    .map_err(|e| D::Error::custom(e.to_string())),
                serde_json::Value::String(s) => {
                    s.parse::<BigInt>().map_err(|e| D::Error::custom(e.to_string()))
                }
                _ => Err(D::Error::custom("coefficient must be an integer")),
            }
        };
        let mut out = LaurentPoly::zero();
        for (e, n, den) in raw {
            let den = parse(&den)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            out.add_term(e, &BigRational::new(parse(&n)?, den));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_expected_rendering() {
        let p = LaurentPoly::from_terms([(4, 1), (5, 2)]);
        assert_eq!(p.to_string(), "q^4 + 2*q^5");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_terms([(-1, -1), (0, 3)]).to_string(), "-q^-1 + 3");
        assert_eq!(LaurentPoly::monomial(1, 1).to_string(), "q");
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = LaurentPoly::from_terms([(2, 3), (1, 1)]);
        p -= &LaurentPoly::monomial(2, 3);
        assert_eq!(p, LaurentPoly::monomial(1, 1));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn multiplication_and_substitution() {
        let a = LaurentPoly::from_terms([(0, 1), (1, 1)]);
        let b = LaurentPoly::from_terms([(-1, 1), (0, -1)]);
        // (1 + q)(q^-1 - 1) = q^-1 - q
        assert_eq!(&a * &b, LaurentPoly::from_terms([(-1, 1), (1, -1)]));
        assert_eq!(a.substitute_power(-2), LaurentPoly::from_terms([(0, 1), (-2, 1)]));
    }

    #[test]
    fn monomial_ratio_detects_single_power() {
        let a = LaurentPoly::from_terms([(3, 1), (5, 2)]);
        let b = LaurentPoly::from_terms([(-1, 1), (1, 2)]);
        assert_eq!(a.monomial_ratio(&b), Some(4));
        assert_eq!(a.monomial_ratio(&LaurentPoly::from_terms([(0, 1), (1, 2)])), None);
    }

    #[test]
    fn serde_triples_roundtrip() {
        let p = LaurentPoly::from_triples([(4, 1.into(), 1.into()), (5, 2.into(), 3.into())]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[[4,1,1],[5,2,3]]");
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
