//! Words over the integer alphabet and their statistics.
//!
//! A word `v` stands for the monomial `u_{v_1} u_{v_2} ⋯` of the free algebra. Pairs
//! `(w, c)` pair a permutation-like word with a weakly increasing content sequence.
//! Index pairs are reported 1-based.

use crate::error::{Error, Result};

pub type Letter = i32;
pub type Word = Vec<Letter>;

fn check_pair(w: &[Letter], c: &[Letter]) -> Result<()> {
    if w.len() != c.len() {
        return Err(Error::invalid(format!("length mismatch: |w| = {}, |c| = {}", w.len(), c.len())));
    }
    if c.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::invalid("content sequence is not weakly increasing"));
    }
    Ok(())
}

/// `Des_k(w,c) = {(i,j) : i<j, w_i>w_j, c_j-c_i = k}` (1-based, sorted).
pub fn des_pair(w: &[Letter], c: &[Letter], k: i32) -> Result<Vec<(usize, usize)>> {
    check_pair(w, c)?;
    let mut out = Vec::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] && c[j] - c[i] == k {
                out.push((i + 1, j + 1));
            }
        }
    }
    Ok(out)
}

/// `inv_k(w,c) = #{(i,j) : i<j, w_i>w_j, 0 < c_j-c_i < k}`.
pub fn inv_pair(w: &[Letter], c: &[Letter], k: i32) -> Result<usize> {
    check_pair(w, c)?;
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let d = c[j] - c[i];
            if w[i] > w[j] && 0 < d && d < k {
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `Desi_k(v)`: the multiset of letter pairs `(v_i, v_j)`, `i<j`, with `v_i - v_j = k`,
/// as a sorted list with repetition.
pub fn desi(v: &[Letter], k: i32) -> Vec<(Letter, Letter)> {
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] - v[j] == k {
                out.push((v[i], v[j]));
            }
        }
    }
    out.sort_unstable();
    out
}

/// `invi_k(v) = #{(i,j) : i<j, 0 < v_i - v_j < k}`.
pub fn invi(v: &[Letter], k: i32) -> usize {
    let mut n = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = v[i] - v[j];
            if 0 < d && d < k {
                n += 1;
            }
        }
    }
    n
}

/// Positions `i` (1-based) with `v_i > v_{i+1}`.
pub fn descent_set(v: &[Letter]) -> Vec<usize> {
    v.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// Relabels the smallest letter's occurrences `1..t` left to right, then the next
/// smallest, and so on.
pub fn standardize(v: &[Letter]) -> Word {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by_key(|&i| (v[i], i));
    let mut out = vec![0; v.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as Letter + 1;
    }
    out
}

pub fn is_permutation(w: &[Letter]) -> bool {
    let n = w.len();
    let mut seen = vec![false; n];
    w.iter().all(|&x| {
        if x < 1 || x as usize > n || seen[x as usize - 1] {
            false
        } else {
            seen[x as usize - 1] = true;
            true
        }
    })
}

pub fn inverse_permutation(w: &[Letter]) -> Result<Word> {
    if !is_permutation(w) {
        return Err(Error::invalid(format!("{w:?} is not a permutation")));
    }
    let mut out = vec![0; w.len()];
    for (j, &x) in w.iter().enumerate() {
        out[x as usize - 1] = j as Letter + 1;
    }
    Ok(out)
}

/// `v = (w,c)^{-1}`: `v_i = c_j` where `w_j = i`.
pub fn pair_inverse(w: &[Letter], c: &[Letter]) -> Result<Word> {
    if w.len() != c.len() {
        return Err(Error::invalid("length mismatch"));
    }
    let winv = inverse_permutation(w)?;
    Ok(winv.iter().map(|&j| c[j as usize - 1]).collect())
}

/// `v ↦ ((v^stand)^{-1}, sorted v)`.
pub fn word_to_pair(v: &[Letter]) -> (Word, Word) {
    let w = inverse_permutation(&standardize(v)).expect("standardization is a permutation");
    let mut c = v.to_vec();
    c.sort_unstable();
    (w, c)
}

/// The multiset `(c,D)^{-1} = {(c_j, c_i) : (i,j) ∈ D}`, sorted.
pub fn invert_descents(c: &[Letter], d: &[(usize, usize)]) -> Vec<(Letter, Letter)> {
    let mut out: Vec<(Letter, Letter)> = d.iter().map(|&(i, j)| (c[j - 1], c[i - 1])).collect();
    out.sort_unstable();
    out
}

/// Whether `(w,c)` is a `k`-ribbon word: whenever `c_i = c_{i+1}` there are positions
/// `h`, `j` with `c_h = c_i - k`, `w_i < w_h ≤ w_{i+1}` and `c_j = c_i + k`,
/// `w_i ≤ w_j < w_{i+1}`.
pub fn is_ribbon_word(w: &[Letter], c: &[Letter], k: i32) -> Result<bool> {
    check_pair(w, c)?;
    for i in 0..w.len().saturating_sub(1) {
        if c[i] != c[i + 1] {
            continue;
        }
        let has_h = (0..w.len()).any(|h| c[h] == c[i] - k && w[i] < w[h] && w[h] <= w[i + 1]);
        let has_j = (0..w.len()).any(|j| c[j] == c[i] + k && w[i] <= w[j] && w[j] < w[i + 1]);
        if !(has_h && has_j) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The interleaving criterion for a word to survive in Lam's quotient: between any two
/// equal letters `x` there must be an occurrence of `x-k` and one of `x+k`, in either
/// order. Checking consecutive equal letters suffices.
pub fn is_nonzero_word(v: &[Letter], k: i32) -> bool {
    for i in 0..v.len() {
        let x = v[i];
        let Some(j) = (i + 1..v.len()).find(|&j| v[j] == x) else {
            continue;
        };
        let between = &v[i + 1..j];
        if !(between.contains(&(x - k)) && between.contains(&(x + k))) {
            return false;
        }
    }
    true
}

/// Sorted letter multiset of a word.
pub fn sorted_letters(v: &[Letter]) -> Word {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

/// Parses `"2,1,-3"` (commas and/or whitespace) into a word.
pub fn parse_word(s: &str) -> Result<Word> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Letter>().map_err(|e| Error::invalid(format!("bad letter {t:?}: {e}"))))
        .collect()
}

/// Parses a string of single digits and the hex-like letters used for compact words,
/// e.g. `"48714235"`.
pub fn digits(s: &str) -> Word {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| c.to_digit(36).expect("digit") as Letter)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics_of_worked_pair() {
        let w = digits("46715832");
        let c = digits("12344578");
        assert_eq!(des_pair(&w, &c, 3).unwrap(), vec![(1, 4), (5, 7), (6, 8)]);
        assert_eq!(inv_pair(&w, &c, 3).unwrap(), 6);
        let v = pair_inverse(&w, &c).unwrap();
        assert_eq!(v, digits("48714235"));
        assert_eq!(desi(&v, 3), vec![(4, 1), (7, 4), (8, 5)]);
        assert_eq!(invi(&v, 3), 6);
        assert!(is_ribbon_word(&w, &c, 3).unwrap());
        assert!(is_nonzero_word(&v, 3));
        assert_eq!(word_to_pair(&v), (w, c));
    }

    #[test]
    fn intro_word_inversions() {
        assert_eq!(invi(&digits("8341275"), 3), 5);
    }

    #[test]
    fn small_pair_cases() {
        assert_eq!(des_pair(&[2, 1], &[1, 2], 3).unwrap(), vec![]);
        assert_eq!(inv_pair(&[2, 1], &[1, 2], 3).unwrap(), 1);
        assert_eq!(inv_pair(&[3, 1, 2], &[5, 5, 5], 1).unwrap(), 0);
        assert!(des_pair(&[1], &[1, 2], 3).is_err());
        assert!(inv_pair(&[1, 2], &[2, 1], 3).is_err());
        assert!(!is_ribbon_word(&[1, 2], &[1, 1], 3).unwrap());
        assert!(is_ribbon_word(&[2, 1, 3], &[1, 2, 3], 3).unwrap());
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&[1, 1, 2, 1]), vec![1, 2, 4, 3]);
        assert_eq!(standardize(&[3, 1, 2]), vec![3, 1, 2]);
        let v = digits("48714235");
        assert_eq!(descent_set(&standardize(&v)), descent_set(&v));
        assert_eq!(standardize(&sorted_letters(&v)), digits("12345678"));
    }

    #[test]
    fn nonzero_words() {
        assert!(!is_nonzero_word(&[1, 1], 3));
        assert!(!is_nonzero_word(&[1, 4, 1], 3));
        assert!(is_nonzero_word(&[1, 4, -2, 1], 3));
        assert!(is_nonzero_word(&[1, -2, 4, 1], 3));
        assert!(is_nonzero_word(&[], 3));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_word("2, 1,-3").unwrap(), vec![2, 1, -3]);
        assert!(parse_word("2,x").is_err());
        assert_eq!(digits("78563F"), vec![7, 8, 5, 6, 3, 15]);
    }
}
