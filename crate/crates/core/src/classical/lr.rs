//! Littlewood-Richardson coefficients by enumerating LR fillings.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::ClassicalWeight;
use crate::error::{validation, Result};

/// `L(λ) ⊗ L(μ) = ⊕ c^ν L(ν)` for GL(r); negative entries are handled by a
/// determinant twist.
pub fn lr_coefficients(
    l: &ClassicalWeight,
    m: &ClassicalWeight,
) -> Result<BTreeMap<ClassicalWeight, u64>> {
    let r = l.rank();
    if m.rank() != r {
        return validation(format!("ranks differ: {} vs {}", r, m.rank()));
    }
    if r == 0 {
        return Ok(BTreeMap::from([(ClassicalWeight(vec![]), 1)]));
    }
    let (a, b) = (l.0[r - 1], m.0[r - 1]);
    let out = lr_partitions(&l.shifted(-a).0, &m.shifted(-b).0, r);
    Ok(out.into_iter().map(|(nu, c)| (ClassicalWeight(nu).shifted(a + b), c)).collect())
}

/// LR product of two partitions keeping only `ν` with at most `rows` parts.
/// Output vectors have length `rows`.
pub fn lr_partitions(lam: &[i64], mu: &[i64], rows: usize) -> BTreeMap<Vec<i64>, u64> {
    let mu: Vec<i64> = mu.iter().copied().filter(|&x| x > 0).collect();
    let mut lam: Vec<i64> = lam.iter().copied().filter(|&x| x > 0).collect();
    if lam.len() > rows || mu.len() > rows {
        return BTreeMap::new();
    }
    lam.resize(rows, 0);
    let mut st = State { lam: &lam, mu: &mu, memo: HashMap::new() };
    let k = mu.len();
    let tails = st.rows(0, vec![0; k], vec![0; k]);
    tails.iter().map(|(nu, c)| (nu.iter().rev().copied().collect(), *c)).collect()
}

// Row suffixes of ν, stored reversed, with the number of fillings producing each.
type Tails = Rc<HashMap<Vec<i64>, u64>>;

struct State<'a> {
    lam: &'a [i64],
    mu: &'a [i64],
    /// Keyed by (row, label counts in rows above, label counts of the row above).
    memo: HashMap<(usize, Vec<i64>, Vec<i64>), Tails>,
}

impl State<'_> {
    fn rows(&mut self, j: usize, used: Vec<i64>, prev: Vec<i64>) -> Tails {
        if j == self.lam.len() {
            let done = used == self.mu;
            return Rc::new(if done { HashMap::from([(vec![], 1)]) } else { HashMap::new() });
        }
        let key = (j, used, prev);
        if let Some(t) = self.memo.get(&key) {
            return t.clone();
        }
        let (_, used, prev) = &key;
        let mut choices = vec![];
        let mut cur = vec![0; self.mu.len()];
        self.label(j, 0, used, prev, &mut cur, &mut choices);
        let mut out: HashMap<Vec<i64>, u64> = HashMap::new();
        for cur in choices {
            let placed: i64 = cur.iter().sum();
            let next: Vec<i64> = used.iter().zip(&cur).map(|(a, b)| a + b).collect();
            let tails = self.rows(j + 1, next, cur);
            for (tail, c) in tails.iter() {
                let mut nu = tail.clone();
                nu.push(self.lam[j] + placed);
                *out.entry(nu).or_insert(0) += c;
            }
        }
        let out = Rc::new(out);
        self.memo.insert(key, out.clone());
        out
    }

    // Choose how many boxes labelled `i+1` go into row `j`.
    fn label(&self, j: usize, i: usize, used: &[i64], prev: &[i64], cur: &mut Vec<i64>, acc: &mut Vec<Vec<i64>>) {
        if i == self.mu.len() {
            acc.push(cur.clone());
            return;
        }
        let placed: i64 = cur[..i].iter().sum();
        let mut hi = self.mu[i] - used[i];
        if i > 0 {
            hi = hi.min(used[i - 1] - used[i]);
        }
        if j > 0 {
            // boxes labelled <= i+1 must sit below λ or below labels <= i
            let above = self.lam[j - 1] + prev[..i].iter().sum::<i64>();
            hi = hi.min(above - self.lam[j] - placed);
        }
        for x in 0..=hi.max(-1) {
            cur[i] = x;
            self.label(j, i + 1, used, prev, cur, acc);
        }
        cur[i] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> ClassicalWeight {
        ClassicalWeight(v.to_vec())
    }

    #[test]
    fn worked_example() {
        let out = lr_coefficients(&cw(&[4, 2, 1]), &cw(&[3, 2, 1])).unwrap();
        let expect = BTreeMap::from([
            (cw(&[7, 4, 2]), 1),
            (cw(&[7, 3, 3]), 1),
            (cw(&[6, 5, 2]), 1),
            (cw(&[6, 4, 3]), 2),
            (cw(&[5, 5, 3]), 1),
            (cw(&[5, 4, 4]), 1),
        ]);
        assert_eq!(out, expect);
    }

    #[test]
    fn std_squared() {
        let out = lr_partitions(&[1], &[1], 2);
        assert_eq!(out, BTreeMap::from([(vec![2, 0], 1), (vec![1, 1], 1)]));
        assert_eq!(lr_partitions(&[1], &[1], 1), BTreeMap::from([(vec![2], 1)]));
    }

    #[test]
    fn negative_entries() {
        // V ⊗ V* = adjoint ⊕ trivial in GL(2)
        let out = lr_coefficients(&cw(&[1, 0]), &cw(&[0, -1])).unwrap();
        assert_eq!(out, BTreeMap::from([(cw(&[1, -1]), 1), (cw(&[0, 0]), 1)]));
    }

    #[test]
    fn rank_mismatch() {
        assert!(lr_coefficients(&cw(&[1]), &cw(&[1, 0])).is_err());
    }
}
