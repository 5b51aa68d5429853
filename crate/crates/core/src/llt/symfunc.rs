//! Symmetric functions of a fixed degree held in fundamental quasisymmetric
//! coordinates, with an exact Schur-expansion solver.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::shapes::{partitions_of, Partition};
use crate::words::Letter;

/// A descent set: sorted positions in `[n-1]`.
pub type DescentSet = Vec<usize>;

/// `Σ_D coeff_D · Q_D` in degree `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    coeffs: BTreeMap<DescentSet, LaurentPoly>,
}

/// `Des(v) = {i : v_i > v_{i+1}}`.
pub fn word_descents(v: &[Letter]) -> DescentSet {
    (1..v.len()).filter(|&i| v[i - 1] > v[i]).collect()
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc { degree, coeffs: BTreeMap::new() }
    }

    /// The constant `1` (degree 0).
    pub fn one() -> Self {
        let mut f = SymFunc::zero(0);
        f.add(Vec::new(), &LaurentPoly::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<DescentSet, LaurentPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, d: &[usize]) -> LaurentPoly {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&mut self, d: DescentSet, c: &LaurentPoly) {
        debug_assert!(d.iter().all(|&i| i >= 1 && i < self.degree.max(1)));
        let e = self.coeffs.entry(d.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    /// Adds `q^exp · Q_D`.
    pub fn add_monomial(&mut self, d: DescentSet, exp: i32) {
        self.add(d, &LaurentPoly::monomial(exp, 1));
    }

    /// `s_λ = Σ_{T ∈ SYT(λ)} Q_{Des(T)}`.
    pub fn schur(lambda: &Partition) -> Self {
        let mut f = SymFunc::zero(lambda.size());
        for (d, m) in syt_descent_counts(lambda) {
            f.add(d, &LaurentPoly::from(m));
        }
        f
    }

    /// Applies `q ↦ t^factor` to every coefficient.
    pub fn substitute_power(&self, factor: i32) -> Self {
        SymFunc {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(d, c)| (d.clone(), c.substitute_power(factor))).collect(),
        }
    }

    /// Specialises `q = 1`.
    pub fn at_q_one(&self) -> BTreeMap<DescentSet, BigRational> {
        self.coeffs
            .iter()
            .map(|(d, c)| (d.clone(), c.eval_at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// If `self = q^e · other` for a single `e`, returns `e`.
    pub fn monomial_ratio(&self, other: &SymFunc) -> Option<i32> {
        if self.degree != other.degree || self.coeffs.len() != other.coeffs.len() || self.is_zero() {
            return None;
        }
        let mut ratio = None;
        for (d, c) in &self.coeffs {
            let e = c.monomial_ratio(other.coeffs.get(d)?)?;
            if *ratio.get_or_insert(e) != e {
                return None;
            }
        }
        ratio
    }

    /// Schur expansion, exact. Fails if the function is not symmetric.
    pub fn schur_expand(&self) -> Result<BTreeMap<Partition, LaurentPoly>> {
        let basis = schur_basis(self.degree);
        let mut exps: Vec<i32> = self.coeffs.values().flat_map(|c| c.terms().map(|(e, _)| e)).collect();
        exps.sort_unstable();
        exps.dedup();
        let mut out: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
        for e in exps {
            let rhs: Vec<BigRational> = basis.pivot_rows.iter().map(|d| self.coeff(d).coeff(e)).collect();
            for (col, lambda) in basis.partitions.iter().enumerate() {
                let x: BigRational = basis.inverse[col]
                    .iter()
                    .zip(&rhs)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .fold(BigRational::zero(), |acc, t| acc + t);
                if !x.is_zero() {
                    out.entry(lambda.clone()).or_default().add_term(e, &x);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        let mut rebuilt = SymFunc::zero(self.degree);
        for (lambda, c) in &out {
            for (d, m) in &basis.columns[basis.index[lambda]] {
                rebuilt.add(d.clone(), &c.scaled(&BigRational::from_integer((*m).into())));
            }
        }
        if rebuilt != *self {
            return Err(Error::invalid("function is not symmetric: nonzero residual after Schur solve"));
        }
        Ok(out)
    }

    /// Expansion in monomials `x^a` of `nvars` variables (exponent vectors).
    pub fn to_monomials(&self, nvars: usize) -> BTreeMap<Vec<usize>, LaurentPoly> {
        let mut out: BTreeMap<Vec<usize>, LaurentPoly> = BTreeMap::new();
        for (d, c) in &self.coeffs {
            for a in fundamental_monomials(self.degree, d, nvars) {
                *out.entry(a).or_default() += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Exponent vectors of the monomials of `Q_D` in `nvars` variables (each with
/// coefficient 1).
fn fundamental_monomials(n: usize, d: &[usize], nvars: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx = Vec::with_capacity(n);
    fn rec(n: usize, d: &[usize], nvars: usize, idx: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if idx.len() == n {
            let mut a = vec![0; nvars];
            for &i in idx.iter() {
                a[i] += 1;
            }
            out.push(a);
            return;
        }
        let pos = idx.len();
        let lo = match idx.last() {
            None => 0,
            Some(&prev) if d.contains(&pos) => prev + 1,
            Some(&prev) => prev,
        };
        for i in lo..nvars {
            idx.push(i);
            rec(n, d, nvars, idx, out);
            idx.pop();
        }
    }
    rec(n, d, nvars, &mut idx, &mut out);
    out
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let set: Vec<String> = d.iter().map(ToString::to_string).collect();
            write!(f, "({c})·Q{{{}}}", set.join(","))?;
        }
        Ok(())
    }
}

/// `{"degree": n, "terms": [{"descents": [...], "coeff": [[exp, num, den], ...]}]}`.
impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            descents: &'a DescentSet,
            coeff: &'a LaurentPoly,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            degree: usize,
            terms: Vec<Term<'a>>,
        }
        Repr {
            degree: self.degree,
            terms: self.coeffs.iter().map(|(d, c)| Term { descents: d, coeff: c }).collect(),
        }
        .serialize(s)
    }
}

/// All standard Young tableaux of shape `λ`, as row index (1-based) of each entry.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<usize>> {
    let n = lambda.size();
    let mut out = Vec::new();
    let mut rows = vec![0usize; lambda.len()];
    let mut placed = Vec::with_capacity(n);
    fn rec(lambda: &Partition, rows: &mut Vec<usize>, placed: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if placed.len() == lambda.size() {
            out.push(placed.clone());
            return;
        }
        for r in 0..rows.len() {
            let fits = rows[r] < lambda.part(r + 1) && (r == 0 || rows[r - 1] > rows[r]);
            if fits {
                rows[r] += 1;
                placed.push(r + 1);
                rec(lambda, rows, placed, out);
                placed.pop();
                rows[r] -= 1;
            }
        }
    }
    rec(lambda, &mut rows, &mut placed, &mut out);
    out
}

/// Number of SYT of shape `λ` with each descent set (`i` is a descent when `i+1` lies
/// in a strictly lower row).
pub fn syt_descent_counts(lambda: &Partition) -> BTreeMap<DescentSet, i64> {
    let mut out = BTreeMap::new();
    for t in standard_tableaux(lambda) {
        let d: DescentSet = (1..t.len()).filter(|&i| t[i] > t[i - 1]).collect();
        *out.entry(d).or_insert(0) += 1;
    }
    out
}

struct SchurBasis {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    columns: Vec<BTreeMap<DescentSet, i64>>,
    /// Descent sets whose rows of `M` are independent.
    pivot_rows: Vec<DescentSet>,
    /// `inverse[λ][r]`: inverse of `M` restricted to the pivot rows.
    inverse: Vec<Vec<BigRational>>,
}

fn schur_basis(n: usize) -> Arc<SchurBasis> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SchurBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("cache poisoned").get(&n) {
        return b.clone();
    }
    let b = Arc::new(build_schur_basis(n));
    cache.lock().expect("cache poisoned").insert(n, b.clone());
    b
}

fn build_schur_basis(n: usize) -> SchurBasis {
    let partitions = partitions_of(n);
    let p = partitions.len();
    let columns: Vec<BTreeMap<DescentSet, i64>> = partitions.iter().map(syt_descent_counts).collect();
    let mut all_rows: Vec<DescentSet> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
    all_rows.sort();
    all_rows.dedup();
    let row_of = |d: &DescentSet| -> Vec<BigRational> {
        columns
            .iter()
            .map(|c| BigRational::from_integer(c.get(d).copied().unwrap_or(0).into()))
            .collect()
    };
    // Greedy choice of independent rows by incremental elimination.
    let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut pivot_rows = Vec::new();
    for d in &all_rows {
        if pivot_rows.len() == p {
            break;
        }
        let mut v = row_of(d);
        for (col, row) in &echelon {
            if !v[*col].is_zero() {
                let f = v[*col].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(col) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[col].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            echelon.push((col, v));
            pivot_rows.push(d.clone());
        }
    }
    assert_eq!(pivot_rows.len(), p, "Schur functions are linearly independent");
    // Invert the square matrix A[r][λ] = M[pivot_r, λ] by Gauss-Jordan.
    let mut a: Vec<Vec<BigRational>> = pivot_rows.iter().map(row_of).collect();
    let mut inv: Vec<Vec<BigRational>> = (0..p)
        .map(|i| (0..p).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..p {
        let piv = (col..p).find(|&r| !a[r][col].is_zero()).expect("square submatrix is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let f = a[col][col].recip();
        for j in 0..p {
            a[col][j] *= &f;
            inv[col][j] *= &f;
        }
        for r in 0..p {
            if r != col && !a[r][col].is_zero() {
                let g = a[r][col].clone();
                for j in 0..p {
                    let (ac, ic) = (a[col][j].clone(), inv[col][j].clone());
                    a[r][j] -= &g * ac;
                    inv[r][j] -= &g * ic;
                }
            }
        }
    }
    // `inv` maps pivot-row values to λ-coordinates: x = inv · b.
    SchurBasis {
        index: partitions.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect(),
        partitions,
        columns,
        pivot_rows,
        inverse: inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn syt_counts() {
        assert_eq!(standard_tableaux(&p(&[3, 2])).len(), 5);
        assert_eq!(standard_tableaux(&p(&[4, 3, 1])).len(), 70);
        assert_eq!(standard_tableaux(&p(&[])).len(), 1);
        let h = syt_descent_counts(&p(&[2, 1]));
        assert_eq!(h, BTreeMap::from([(vec![1], 1), (vec![2], 1)]));
    }

    #[test]
    fn descents_of_words() {
        assert_eq!(word_descents(&[4, 8, 7, 1, 4, 2, 3, 5]), vec![2, 3, 5]);
        assert!(word_descents(&[]).is_empty());
    }

    #[test]
    fn schur_round_trip() {
        for n in 0..=7 {
            for lambda in partitions_of(n) {
                let e = SymFunc::schur(&lambda).schur_expand().unwrap();
                assert_eq!(e, BTreeMap::from([(lambda.clone(), LaurentPoly::one())]));
            }
        }
    }

    #[test]
    fn combination_recovered() {
        let mut f = SymFunc::zero(5);
        let want = BTreeMap::from([
            (p(&[3, 2]), LaurentPoly::from_terms([(-1, 2), (3, 1)])),
            (p(&[5]), LaurentPoly::monomial(0, 7)),
            (p(&[2, 2, 1]), LaurentPoly::monomial(4, 1)),
        ]);
        for (lambda, c) in &want {
            for (d, m) in syt_descent_counts(lambda) {
                f.add(d, &c.scaled(&BigRational::from_integer(m.into())));
            }
        }
        assert_eq!(f.schur_expand().unwrap(), want);
    }

    #[test]
    fn nonsymmetric_input_rejected() {
        let mut f = SymFunc::zero(3);
        f.add_monomial(vec![1], 0);
        assert!(f.schur_expand().is_err());
    }

    #[test]
    fn monomial_view() {
        // s_{(1,1)} = e_2 in three variables.
        let m = SymFunc::schur(&p(&[1, 1])).to_monomials(3);
        assert_eq!(m.len(), 3);
        assert!(m.keys().all(|a| a.iter().all(|&x| x <= 1)));
        let h2 = SymFunc::schur(&p(&[2])).to_monomials(2);
        assert_eq!(h2.len(), 3);
    }
}
