//! Random subgraphs of fully connected stratified digraphs.
//!
//! Every draw comes from a ChaCha8 generator seeded with the run seed, on a
//! stream chosen by the caller, so sample `i` of a batch does not depend on
//! how many other samples are drawn or in which order.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Digraph, StratifiedDigraph, Vertex};
use crate::linalg::Rational;

/// Name recorded next to the seed in experiment metadata.
pub const RNG_NAME: &str = "chacha8";

/// Grid of the sampled weights: `k / WEIGHT_DENOMINATOR` with
/// `0 < k < WEIGHT_DENOMINATOR`.
pub const WEIGHT_DENOMINATOR: u32 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamplingError {
    #[error("rho must lie in (0, 1], got {0}")]
    BadRho(String),
    #[error("layer sizes must be nonempty and positive")]
    BadSizes,
}

/// Layer sizes of the benchmark base graphs `Γ1..Γ5`.
pub fn base_sizes(which: usize) -> Option<Vec<usize>> {
    Some(match which {
        1 => vec![10, 10],
        2 => vec![10, 10, 10],
        3 => vec![4, 10, 10, 10],
        4 => vec![4, 10, 10, 10, 10],
        5 => vec![4, 10, 10, 10, 10, 5],
        _ => return None,
    })
}

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `⌈ρ · |K_i| |K_{i+1}|⌉` for each adjacent pair.
pub fn edges_per_pair(sizes: &[usize], rho: &Rational) -> Result<Vec<usize>, SamplingError> {
    check_rho(rho)?;
    Ok(sizes
        .windows(2)
        .map(|w| {
            let total = Rational::from_integer(BigInt::from(w[0] * w[1]));
            let want = (rho * total).ceil().to_integer();
            usize::try_from(want).expect("at most the pair size")
        })
        .collect())
}

fn check_rho(rho: &Rational) -> Result<(), SamplingError> {
    if *rho <= Rational::zero() || *rho > Rational::one() {
        return Err(SamplingError::BadRho(rho.to_string()));
    }
    Ok(())
}

/// Samples without replacement `⌈ρ · |K_i| |K_{i+1}|⌉` edges between each
/// pair of adjacent layers of the fully connected graph with the given
/// layer sizes. Vertices are numbered layer by layer.
pub fn sample_subgraph(
    sizes: &[usize],
    rho: &Rational,
    rng: &mut impl Rng,
) -> Result<StratifiedDigraph, SamplingError> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(SamplingError::BadSizes);
    }
    let counts = edges_per_pair(sizes, rho)?;
    let mut starts = Vec::with_capacity(sizes.len());
    let mut next = 0u32;
    for &s in sizes {
        starts.push(next);
        next += s as u32;
    }
    let mut edges = Vec::new();
    for (i, &count) in counts.iter().enumerate() {
        let width = sizes[i + 1];
        let mut chosen = index::sample(rng, sizes[i] * width, count).into_vec();
        chosen.sort_unstable();
        edges.extend(chosen.into_iter().map(|k| {
            (
                starts[i] + (k / width) as u32,
                starts[i + 1] + (k % width) as u32,
            )
        }));
    }
    let graph = Digraph::from_edges(next as usize, &edges).expect("valid sampled edges");
    let layers = sizes
        .iter()
        .zip(&starts)
        .map(|(&s, &start)| (start..start + s as u32).map(Vertex).collect())
        .collect();
    Ok(StratifiedDigraph::new(graph, layers).expect("sampled graph is stratified"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightDistribution {
    Uniform,
    /// Density `6x(1-x)`, drawn as the median of three uniforms.
    Beta22,
}

/// One weight in `(0, 1)` per edge, in edge order.
pub fn random_weights(
    g: &StratifiedDigraph,
    dist: WeightDistribution,
    rng: &mut impl Rng,
) -> StratifiedDigraph {
    let mut draw = || rng.gen_range(1..WEIGHT_DENOMINATOR);
    let weights = (0..g.graph().edge_count())
        .map(|_| {
            let k = match dist {
                WeightDistribution::Uniform => draw(),
                WeightDistribution::Beta22 => {
                    let mut three = [draw(), draw(), draw()];
                    three.sort_unstable();
                    three[1]
                }
            };
            Rational::new(BigInt::from(k), BigInt::from(WEIGHT_DENOMINATOR))
        })
        .collect();
    g.with_weights(weights)
}
