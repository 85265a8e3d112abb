//! Seeded random partitions and random rim-hook stripping.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::partition::{Cell, Partition};

/// Seed used by the verification sweeps unless one is given explicitly.
pub const DEFAULT_SEED: u64 = 20150401;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform sampler over partitions of `n <= max_n`.
pub struct PartitionSampler {
    /// `counts[n][m]` = partitions of `n` with largest part at most `m`
    counts: Vec<Vec<u128>>,
}

impl PartitionSampler {
    pub fn new(max_n: usize) -> Self {
        let mut counts = vec![vec![0u128; max_n + 1]; max_n + 1];
        for m in 0..=max_n {
            counts[0][m] = 1;
        }
        for n in 1..=max_n {
            for m in 1..=max_n {
                counts[n][m] = counts[n][m - 1] + if m <= n { counts[n - m][m] } else { 0 };
            }
        }
        PartitionSampler { counts }
    }

    pub fn max_n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Number of partitions of `n`.
    pub fn count(&self, n: usize) -> u128 {
        self.counts[n][n]
    }

    /// A uniformly random partition of `n`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Partition {
        assert!(n <= self.max_n(), "n={n} beyond sampler range");
        let mut parts = Vec::new();
        let (mut rest, mut cap) = (n, n);
        while rest > 0 {
            let mut pick = rng.gen_range(0..self.counts[rest][cap]);
            let mut first = cap;
            // partitions of `rest` with largest part exactly `a` number counts[rest-a][a]
            loop {
                let with_first = self.counts[rest - first][first];
                if pick < with_first {
                    break;
                }
                pick -= with_first;
                first -= 1;
            }
            parts.push(first);
            rest -= first;
            cap = first.min(rest);
        }
        Partition::new(parts).expect("sampled parts are weakly decreasing")
    }

    /// A random size in `0..=max_size`, then a uniform partition of it.
    pub fn sample_up_to<R: Rng + ?Sized>(&self, rng: &mut R, max_size: usize) -> Partition {
        let n = rng.gen_range(0..=max_size);
        self.sample(rng, n)
    }
}

/// Strips uniformly chosen rim hooks of length `t` until none is left.
pub fn strip_random_hooks<R: Rng + ?Sized>(rng: &mut R, lambda: &Partition, t: usize) -> Partition {
    let mut current = lambda.clone();
    loop {
        let hooks = current.hook_lengths();
        let candidates: Vec<Cell> = hooks
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, &h)| h == t).map(move |(j, _)| Cell::new(i, j)))
            .collect();
        if candidates.is_empty() {
            return current;
        }
        let cell = candidates[rng.gen_range(0..candidates.len())];
        current = current.remove_rim_hook(cell).expect("candidate cell is in the diagram");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn counts_match_partition_numbers() {
        let s = PartitionSampler::new(200);
        assert_eq!(s.count(10), 42);
        assert_eq!(s.count(100), 190_569_292);
        assert_eq!(s.count(200), 3_972_999_029_388);
    }

    #[test]
    fn sampling_is_roughly_uniform() {
        let s = PartitionSampler::new(6);
        let mut rng = seeded_rng(7);
        let mut seen: HashMap<Partition, usize> = HashMap::new();
        for _ in 0..11_000 {
            *seen.entry(s.sample(&mut rng, 6)).or_default() += 1;
        }
        assert_eq!(seen.len(), 11);
        assert!(seen.values().all(|&c| (800..1200).contains(&c)), "{seen:?}");
    }

    #[test]
    fn stripping_reaches_a_core() {
        let mut rng = seeded_rng(1);
        let lam = Partition::new(vec![5, 4, 4, 2, 1]).unwrap();
        let core = strip_random_hooks(&mut rng, &lam, 3);
        assert!(!core.has_hook_of_length(3));
        assert_eq!((lam.size() - core.size()) % 3, 0);
    }
}
