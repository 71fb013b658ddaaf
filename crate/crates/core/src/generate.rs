//! Seeded random instance families. A seed fully determines the instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{Cost, Instance, Interval};
use crate::shortest_path::{SpGraph, Variant};

fn random_interval(rng: &mut impl Rng, max_cost: Cost) -> Interval {
    let a = rng.gen_range(0..=max_cost);
    let b = rng.gen_range(0..=max_cost);
    Interval {
        lo: a.min(b),
        hi: a.max(b),
    }
}

/// `n` items with `C_i`, `lo_i <= hi_i` uniform in `0..=max_cost`.
pub fn random_selection(n: usize, p: usize, max_cost: Cost, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = (0..n).map(|_| rng.gen_range(0..=max_cost)).collect();
    let intervals = (0..n)
        .map(|_| random_interval(&mut rng, max_cost))
        .collect();
    Instance::selection(first, intervals, p)
}

/// A random directed graph on `nodes` nodes with `arcs` arcs, `s = 0` and
/// `t = nodes - 1`. The first arcs form an `s`-`t` path through a random
/// subset of nodes, so `t` is always reachable; the rest are uniform
/// non-loop arcs.
pub fn random_sp(
    nodes: usize,
    arcs: usize,
    max_cost: Cost,
    variant: Variant,
    seed: u64,
) -> Result<Instance> {
    if nodes < 2 {
        return Err(Error::input("need at least two nodes"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inner: Vec<usize> = (1..nodes - 1).collect();
    inner.shuffle(&mut rng);
    let len = rng.gen_range(0..=inner.len().min(arcs.saturating_sub(1)));
    let route: Vec<usize> = std::iter::once(0)
        .chain(inner[..len].iter().copied())
        .chain(std::iter::once(nodes - 1))
        .collect();
    if route.len() - 1 > arcs {
        return Err(Error::input(format!("{arcs} arcs cannot connect s to t")));
    }
    let mut list: Vec<(usize, usize)> = route.windows(2).map(|w| (w[0], w[1])).collect();
    while list.len() < arcs {
        let a = rng.gen_range(0..nodes);
        let b = rng.gen_range(0..nodes);
        if a != b {
            list.push((a, b));
        }
    }
    let first = (0..arcs).map(|_| rng.gen_range(0..=max_cost)).collect();
    let intervals = (0..arcs)
        .map(|_| random_interval(&mut rng, max_cost))
        .collect();
    let g = SpGraph::new(nodes, list, 0, nodes - 1, variant)?;
    Instance::shortest_path(first, intervals, g)
}
