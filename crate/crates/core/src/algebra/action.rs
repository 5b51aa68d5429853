//! Actions of words on `k`-tuples of partitions (at `q = 1`) and on single partitions
//! by adding ribbons.

use crate::shapes::Partition;
use crate::words::Letter;

/// `δ ∘_d v`: letter `i` adds the cell of content `(i - ī)/k - d_ī` to component
/// `ī = i mod k`. Returns `None` as soon as a step has no such addable cell.
pub fn act_on_tuple(delta: &[Partition], v: &[Letter], k: usize, d: &[i64]) -> Option<Vec<Partition>> {
    assert_eq!(delta.len(), k, "tuple must have k components");
    assert_eq!(d.len(), k, "offset vector must have k entries");
    let k_i = k as i64;
    let mut cur = delta.to_vec();
    for &i in v {
        let i = i as i64;
        let r = i.rem_euclid(k_i);
        let content = (i - r) / k_i - d[r as usize];
        cur[r as usize] = cur[r as usize].add_cell(content as i32)?;
    }
    Some(cur)
}

/// `ν · v` by successive ribbon additions; returns the result and the total spin.
pub fn act_on_partition_spin(nu: &Partition, v: &[Letter], k: usize) -> Option<(Partition, usize)> {
    let mut cur = nu.clone();
    let mut spin = 0;
    for &i in v {
        let (next, s) = cur.add_ribbon(k, i)?;
        cur = next;
        spin += s;
    }
    Some((cur, spin))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::digits;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_letter_on_empty_tuple() {
        let empty = vec![p(&[]), p(&[]), p(&[])];
        assert_eq!(act_on_tuple(&empty, &[], 3, &[0, 0, 0]), Some(empty.clone()));
        assert_eq!(act_on_tuple(&empty, &[1], 3, &[0, 0, 0]), Some(vec![p(&[]), p(&[1]), p(&[])]));
    }

    #[test]
    fn intro_tuple_is_reached() {
        let delta = vec![p(&[1]), p(&[1, 1]), p(&[2, 1])];
        let gamma = vec![p(&[2]), p(&[3, 2]), p(&[3, 3])];
        assert_eq!(act_on_tuple(&delta, &digits("8341275"), 3, &[0, 0, 0]), Some(gamma));
    }

    #[test]
    fn spin_action() {
        assert_eq!(act_on_partition_spin(&p(&[]), &[], 3), Some((p(&[]), 0)));
        assert_eq!(act_on_partition_spin(&p(&[]), &[2], 3), Some((p(&[3]), 0)));
        assert_eq!(act_on_partition_spin(&p(&[]), &[2, 2], 3), None);
    }
}
