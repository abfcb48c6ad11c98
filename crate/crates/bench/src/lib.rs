//! Benchmark inputs: seeded ρ-samples of the fully connected base graphs.

use pathhom_core::linalg::ratio;
use pathhom_core::sampling::{base_sizes, rng_for, sample_subgraph};
use pathhom_core::StratifiedDigraph;

/// `count` samples of base graph `which` keeping `num/den` of the edges.
pub fn base_samples(which: usize, num: i64, den: i64, count: usize) -> Vec<StratifiedDigraph> {
    sized_samples(&base_sizes(which).expect("base 1 to 5"), num, den, count)
}

pub fn sized_samples(sizes: &[usize], num: i64, den: i64, count: usize) -> Vec<StratifiedDigraph> {
    let rho = ratio(num, den);
    (0..count)
        .map(|i| sample_subgraph(sizes, &rho, &mut rng_for(7, i as u64)).expect("valid sizes"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_deterministic() {
        let a = base_samples(2, 1, 2, 3);
        assert_eq!(a, base_samples(2, 1, 2, 3));
        assert_eq!(a[0].layer_sizes(), [10, 10, 10]);
        assert_eq!(a[0].graph().edge_count(), 100);
    }
}
