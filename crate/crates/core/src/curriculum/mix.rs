use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::seed::rng;

/// Largest-remainder apportionment of `total` by `weights`. Ties in the
/// remainder go to the earlier dataset.
pub fn quotas(weights: &[u32], total: usize) -> Result<Vec<usize>> {
    if weights.is_empty() || weights.contains(&0) {
        return Err(Error::invalid("mix weights must be positive"));
    }
    let sum: u128 = weights.iter().map(|&w| u128::from(w)).sum();
    let mut q: Vec<usize> = Vec::with_capacity(weights.len());
    let mut rems: Vec<(u128, usize)> = Vec::with_capacity(weights.len());
    for (i, &w) in weights.iter().enumerate() {
        let num = u128::from(w) * total as u128;
        q.push((num / sum) as usize);
        rems.push((num % sum, i));
    }
    let short = total - q.iter().sum::<usize>();
    rems.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for &(_, i) in rems.iter().take(short) {
        q[i] += 1;
    }
    Ok(q)
}

/// Draws each dataset's quota (without replacement unless
/// `with_replacement`), then shuffles the union. Deterministic per seed.
pub fn mix<T: Clone>(datasets: &[(&[T], u32)], total: usize, seed: u64, with_replacement: bool) -> Result<Vec<T>> {
    let weights: Vec<u32> = datasets.iter().map(|(_, w)| *w).collect();
    let q = quotas(&weights, total)?;
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(total);
    for (i, ((data, _), &n)) in datasets.iter().zip(&q).enumerate() {
        if n == 0 {
            continue;
        }
        if data.is_empty() {
            return Err(Error::invalid(format!("dataset {i} is empty but needs {n} examples")));
        }
        if with_replacement {
            out.extend((0..n).map(|_| data[r.gen_range(0..data.len())].clone()));
        } else {
            if n > data.len() {
                return Err(Error::invalid(format!(
                    "dataset {i} has {} examples, quota is {n}; allow replacement or lower the total",
                    data.len()
                )));
            }
            let mut idx: Vec<usize> = (0..data.len()).collect();
            let (picked, _) = idx.partial_shuffle(&mut r, n);
            out.extend(picked.iter().map(|&j| data[j].clone()));
        }
    }
    out.shuffle(&mut r);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn seven_to_six() {
        assert_eq!(quotas(&[7, 6], 13).unwrap(), [7, 6]);
        assert_eq!(quotas(&[7, 6], 13_000).unwrap(), [7_000, 6_000]);
        assert_eq!(quotas(&[1, 1], 9_600_000).unwrap(), [4_800_000, 4_800_000]);
        assert_eq!(quotas(&[1, 1, 1], 10).unwrap(), [4, 3, 3]);
        assert!(quotas(&[1, 0], 10).is_err());
    }

    #[test]
    fn counts_and_determinism() {
        let a: Vec<(u8, usize)> = (0..20).map(|i| (0, i)).collect();
        let b: Vec<(u8, usize)> = (0..20).map(|i| (1, i)).collect();
        let m = mix(&[(&a, 7), (&b, 6)], 13, 4, false).unwrap();
        assert_eq!(m.iter().filter(|x| x.0 == 0).count(), 7);
        assert_eq!(m.iter().filter(|x| x.0 == 1).count(), 6);
        assert_eq!(m, mix(&[(&a, 7), (&b, 6)], 13, 4, false).unwrap());
        assert!(mix(&[(&a, 1)], 21, 0, false).is_err());
        assert_eq!(mix(&[(&a, 1)], 50, 0, true).unwrap().len(), 50);
        // single dataset: a permutation of a sample
        let mut one = mix(&[(&a, 1)], 20, 9, false).unwrap();
        one.sort();
        assert_eq!(one, a);
    }

    proptest! {
        #[test]
        fn quotas_are_largest_remainder(weights in prop::collection::vec(1u32..50, 1..6), total in 0usize..10_000) {
            let q = quotas(&weights, total).unwrap();
            prop_assert_eq!(q.iter().sum::<usize>(), total);
            let sum: f64 = weights.iter().map(|&w| f64::from(w)).sum();
            for (qi, &w) in q.iter().zip(&weights) {
                let exact = f64::from(w) * total as f64 / sum;
                prop_assert!((*qi as f64 - exact).abs() < 1.0);
            }
        }
    }
}
