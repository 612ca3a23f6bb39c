use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `sum` into positive parts listed in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntegerPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// All partitions of `n` into exactly `k` positive parts, in lexicographically
/// descending order.
pub fn integer_partitions(n: usize, k: usize) -> Result<Vec<IntegerPartition>> {
    if k == 0 || n < k {
        return Err(Error::InvalidArgument(format!("cannot split {n} into {k} positive parts")));
    }
    fn rec(remaining: usize, slots: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(IntegerPartition { parts: cur.clone() });
            }
            return;
        }
        // Each later slot needs at least one.
        let hi = max.min(remaining - (slots - 1));
        let lo = remaining.div_ceil(slots);
        for p in (lo..=hi).rev() {
            cur.push(p);
            rec(remaining - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, n, &mut Vec::with_capacity(k), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> IntegerPartition {
        IntegerPartition::new(v.to_vec()).unwrap()
    }

    /// p(n, k) by the recurrence p(n, k) = p(n-1, k-1) + p(n-k, k).
    fn count_dp(n: usize, k: usize) -> usize {
        let mut t = vec![vec![0usize; k + 1]; n + 1];
        t[0][0] = 1;
        for i in 1..=n {
            for j in 1..=k.min(i) {
                t[i][j] = t[i - 1][j - 1] + t[i - j][j];
            }
        }
        t[n][k]
    }

    #[test]
    fn examples() {
        assert_eq!(integer_partitions(3, 3).unwrap(), vec![p(&[1, 1, 1])]);
        assert_eq!(integer_partitions(6, 3).unwrap(), vec![p(&[4, 1, 1]), p(&[3, 2, 1]), p(&[2, 2, 2])]);
        let nine: Vec<Vec<usize>> = integer_partitions(9, 3).unwrap().iter().map(|q| q.parts().to_vec()).collect();
        assert_eq!(
            nine,
            vec![vec![7, 1, 1], vec![6, 2, 1], vec![5, 3, 1], vec![5, 2, 2], vec![4, 4, 1], vec![4, 3, 2], vec![3, 3, 3]]
        );
    }

    #[test]
    fn rejects_too_few() {
        assert!(integer_partitions(2, 3).is_err());
        assert!(integer_partitions(2, 0).is_err());
    }

    #[test]
    fn counts_match_recurrence() {
        for n in 1..=24 {
            for k in 1..=n {
                let parts = integer_partitions(n, k).unwrap();
                assert_eq!(parts.len(), count_dp(n, k), "p({n},{k})");
                for w in parts.windows(2) {
                    assert!(w[0].parts() > w[1].parts());
                }
                assert!(parts.iter().all(|q| q.sum() == n && q.len() == k));
            }
        }
    }
}
