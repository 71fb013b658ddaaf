//! Instance generators behind the hardness results, plus the small example
//! separating the two variants.

use super::graph::{SpGraph, Variant};
use crate::error::{Error, Result};
use crate::instance::{BinaryVector, Cost, Instance, Interval};

/// The large constant of [`two_route_instance`].
pub const TWO_ROUTE_BIG: Cost = 1000;

/// Two parallel two-arc routes `s -> 1 -> t` and `s -> 2 -> t`. The entry
/// arcs are free now and expensive later; the exit arcs are expensive now
/// and uncertain later. Arc order: `(s,1), (s,2), (1,t), (2,t)` with nodes
/// `s = 0`, `t = 3`.
///
/// With simple paths every first-stage solution has regret `TWO_ROUTE_BIG`;
/// with relaxed solutions buying both entry arcs has regret 0.
pub fn two_route_instance(variant: Variant) -> Instance {
    let m = TWO_ROUTE_BIG;
    let g =
        SpGraph::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3, variant).expect("valid graph");
    let intervals = vec![
        Interval::fixed(m),
        Interval::fixed(m),
        Interval { lo: 0, hi: m },
        Interval { lo: 0, hi: m },
    ];
    Instance::shortest_path(vec![0, 0, m, m], intervals, g).expect("valid instance")
}

fn half_sum(a: &[Cost]) -> Result<Cost> {
    if a.is_empty() || a.contains(&0) {
        return Err(Error::input(
            "partition items must be positive and nonempty",
        ));
    }
    let total: Cost = a.iter().sum();
    if total % 2 == 1 {
        return Err(Error::input(format!("item sum {total} is odd")));
    }
    Ok(total / 2)
}

/// Minmax regret gadget for a partition instance `a` with `sum a = 2b`,
/// all values doubled:
///
/// * a chain `s = v_0, ..., v_n = t`; between `v_{i-1}` and `v_i` two routes
///   `p_i p'_i` and `q_i q'_i` through their own middle nodes;
/// * `p_i`, `q_i`: `C = 4b`, interval `[2M, 2M]`;
/// * `p'_i`: `C = 2M`, interval `[0, 3 a_i]`;
/// * `q'_i`: `C = 2M`, interval `[2 a_i, 2 a_i]`;
/// * a bypass `r = (s, t)`: `C = 2M`, interval `[4nb + 2b, 2M]`;
///
/// with `M = 2nb + 2b + 1`. Arc order is `p_i, p'_i, q_i, q'_i` per gadget,
/// then `r`. The optimum is at most `3b` exactly when `a` splits evenly.
pub fn gen_partition_tstr(a: &[Cost], variant: Variant) -> Result<Instance> {
    let b = half_sum(a)?;
    let n = a.len();
    let nb = n as Cost * b;
    let m = 2 * nb + 2 * b + 1;
    let mut arcs = Vec::with_capacity(4 * n + 1);
    let mut first = Vec::with_capacity(4 * n + 1);
    let mut intervals = Vec::with_capacity(4 * n + 1);
    for (i, &ai) in a.iter().enumerate() {
        let (from, to) = (i, i + 1);
        let (mp, mq) = (n + 1 + 2 * i, n + 2 + 2 * i);
        arcs.extend([(from, mp), (mp, to), (from, mq), (mq, to)]);
        first.extend([4 * b, 2 * m, 4 * b, 2 * m]);
        intervals.extend([
            Interval::fixed(2 * m),
            Interval::new(0, 3 * ai)?,
            Interval::fixed(2 * m),
            Interval::fixed(2 * ai),
        ]);
    }
    arcs.push((0, n));
    first.push(2 * m);
    intervals.push(Interval::new(4 * nb + 2 * b, 2 * m)?);
    let g = SpGraph::new(3 * n + 1, arcs, 0, n, variant)?;
    Instance::shortest_path(first, intervals, g)
}

/// Maximum regret gadget: two disjoint `s`-`t` paths of `n` arcs each.
/// Arc `i` of the first path has `C = a_i` and interval `[0, 2 a_i]`; arc
/// `i` of the second has `C = 4 sum a` and the fixed cost `a_i`. Arcs of the
/// first path come first. For `x = 0`, `Z(x) >= b` exactly when `a` splits
/// evenly.
pub fn gen_partition_regret(a: &[Cost], variant: Variant) -> Result<(Instance, BinaryVector)> {
    half_sum(a)?;
    let n = a.len();
    let big = 4 * a.iter().sum::<Cost>();
    // Nodes: s = 0, t = 1, inner nodes of the first path 2..n+1, of the second n+1..2n.
    let inner = |path: usize, j: usize| 2 + path * (n - 1) + j;
    let node = |path: usize, j: usize| match j {
        0 => 0,
        j if j == n => 1,
        j => inner(path, j - 1),
    };
    let mut arcs = Vec::with_capacity(2 * n);
    let mut first = Vec::with_capacity(2 * n);
    let mut intervals = Vec::with_capacity(2 * n);
    for (i, &ai) in a.iter().enumerate() {
        arcs.push((node(0, i), node(0, i + 1)));
        first.push(ai);
        intervals.push(Interval::new(0, 2 * ai)?);
    }
    for (i, &ai) in a.iter().enumerate() {
        arcs.push((node(1, i), node(1, i + 1)));
        first.push(big);
        intervals.push(Interval::fixed(ai));
    }
    let g = SpGraph::new(2 * n, arcs, 0, 1, variant)?;
    Ok((
        Instance::shortest_path(first, intervals, g)?,
        BinaryVector::zeros(2 * n),
    ))
}

/// Incremental-problem gadget for a directed graph on `nodes` vertices.
/// Vertex `i` becomes nodes `2i` and `2i + 1` joined by a forward arc;
/// every arc `(i, j)` becomes a backward arc `(2i + 1, 2j)`; dummy arcs link
/// consecutive vertices of the order `v1`, the others ascending, `vn`.
/// All first-stage costs are 0, forward and backward arcs cost 0 later and
/// dummy arcs cost 1. The returned `x` buys every forward arc, and
/// `Inc(x, c) = 0` exactly when a Hamiltonian `v1`-`vn` path exists.
pub fn gen_hamiltonian_inc(
    nodes: usize,
    arcs: &[(usize, usize)],
    v1: usize,
    vn: usize,
) -> Result<(Instance, BinaryVector)> {
    if nodes < 2 || v1 >= nodes || vn >= nodes || v1 == vn {
        return Err(Error::input(
            "need at least two vertices and distinct terminals in range",
        ));
    }
    if let Some(&(i, j)) = arcs
        .iter()
        .find(|&&(i, j)| i >= nodes || j >= nodes || i == j)
    {
        return Err(Error::input(format!("bad arc ({i}, {j})")));
    }
    let mut g_arcs: Vec<(usize, usize)> = (0..nodes).map(|i| (2 * i, 2 * i + 1)).collect();
    g_arcs.extend(arcs.iter().map(|&(i, j)| (2 * i + 1, 2 * j)));
    let order: Vec<usize> = std::iter::once(v1)
        .chain((0..nodes).filter(|&v| v != v1 && v != vn))
        .chain(std::iter::once(vn))
        .collect();
    let dummies: Vec<(usize, usize)> = order.windows(2).map(|w| (2 * w[0] + 1, 2 * w[1])).collect();
    let zero_cost = g_arcs.len();
    g_arcs.extend(dummies);
    let n = g_arcs.len();
    let intervals = (0..n)
        .map(|k| Interval::fixed(if k < zero_cost { 0 } else { 1 }))
        .collect();
    let g = SpGraph::new(2 * nodes, g_arcs, 2 * v1, 2 * vn + 1, Variant::Simple)?;
    let inst = Instance::shortest_path(vec![0; n], intervals, g)?;
    Ok((inst, BinaryVector::from_indices(n, 0..nodes)))
}
