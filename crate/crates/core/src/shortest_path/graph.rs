use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::BinaryVector;

/// Default limit on the number of simple `s`-`t` paths a catalog may hold.
pub const DEFAULT_CATALOG_CAP: usize = 100_000;

/// Which arc sets count as feasible solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Characteristic vectors of simple `s`-`t` paths.
    Simple,
    /// Arc sets in which `t` is reachable from `s`.
    Relaxed,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Simple => "simple",
            Variant::Relaxed => "relaxed",
        })
    }
}

/// A directed multigraph whose arc `k` is ground element `k`.
#[derive(Debug, Clone)]
pub struct SpGraph {
    nodes: usize,
    arcs: Vec<(usize, usize)>,
    s: usize,
    t: usize,
    variant: Variant,
    out: Vec<Vec<usize>>,
    catalog: OnceLock<Result<Arc<PathCatalog>, usize>>,
}

impl PartialEq for SpGraph {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes
            && self.arcs == other.arcs
            && self.s == other.s
            && self.t == other.t
            && self.variant == other.variant
    }
}

impl SpGraph {
    pub fn new(
        nodes: usize,
        arcs: Vec<(usize, usize)>,
        s: usize,
        t: usize,
        variant: Variant,
    ) -> Result<Self> {
        if s >= nodes || t >= nodes {
            return Err(Error::input(format!(
                "terminal out of range for {nodes} nodes"
            )));
        }
        if s == t {
            return Err(Error::input("source and target coincide"));
        }
        let mut out = vec![Vec::new(); nodes];
        for (k, &(a, b)) in arcs.iter().enumerate() {
            if a >= nodes || b >= nodes {
                return Err(Error::input(format!(
                    "arc {k} has an endpoint out of range"
                )));
            }
            if a == b {
                return Err(Error::input(format!("arc {k} is a self-loop")));
            }
            out[a].push(k);
        }
        Ok(SpGraph {
            nodes,
            arcs,
            s,
            t,
            variant,
            out,
            catalog: OnceLock::new(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn source(&self) -> usize {
        self.s
    }

    pub fn target(&self) -> usize {
        self.t
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Same graph under the other feasibility notion.
    pub fn with_variant(&self, variant: Variant) -> SpGraph {
        SpGraph::new(self.nodes, self.arcs.clone(), self.s, self.t, variant)
            .expect("already validated")
    }

    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Whether `t` is reachable from `s` using only arcs with `allowed(k)`.
    pub fn connects(&self, allowed: impl Fn(usize) -> bool) -> bool {
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![self.s];
        seen[self.s] = true;
        while let Some(v) = stack.pop() {
            if v == self.t {
                return true;
            }
            for &k in &self.out[v] {
                let w = self.arcs[k].1;
                if allowed(k) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Whether `set` is exactly one simple `s`-`t` path.
    pub fn is_simple_path(&self, set: &BinaryVector) -> bool {
        let mut visited = vec![false; self.nodes];
        let mut v = self.s;
        let mut used = 0;
        visited[v] = true;
        while v != self.t {
            let mut next = self.out[v].iter().filter(|&&k| set.get(k));
            let (Some(&k), None) = (next.next(), next.next()) else {
                return false;
            };
            v = self.arcs[k].1;
            if visited[v] {
                return false;
            }
            visited[v] = true;
            used += 1;
        }
        used == set.count_ones()
    }

    /// Shortest `s`-`t` path under nonnegative arc costs, as ascending arc
    /// indices, with its length. `None` if `t` is unreachable.
    pub fn shortest_path(&self, cost: impl Fn(usize) -> i64) -> Option<(Vec<usize>, i64)> {
        let mut dist = vec![i64::MAX; self.nodes];
        let mut pred: Vec<Option<usize>> = vec![None; self.nodes];
        let mut heap = BinaryHeap::new();
        dist[self.s] = 0;
        heap.push(Reverse((0, self.s)));
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dist[v] {
                continue;
            }
            if v == self.t {
                break;
            }
            for &k in &self.out[v] {
                let w = self.arcs[k].1;
                let c = cost(k);
                debug_assert!(c >= 0);
                let nd = d + c;
                if nd < dist[w] {
                    dist[w] = nd;
                    pred[w] = Some(k);
                    heap.push(Reverse((nd, w)));
                }
            }
        }
        if dist[self.t] == i64::MAX {
            return None;
        }
        let mut path = Vec::new();
        let mut v = self.t;
        while let Some(k) = pred[v] {
            path.push(k);
            v = self.arcs[k].0;
        }
        path.sort_unstable();
        Some((path, dist[self.t]))
    }

    /// The catalog of simple paths under [`DEFAULT_CATALOG_CAP`], built once.
    pub fn catalog(&self) -> Result<Arc<PathCatalog>> {
        self.catalog
            .get_or_init(|| {
                PathCatalog::build(self, DEFAULT_CATALOG_CAP)
                    .map(Arc::new)
                    .map_err(|_| DEFAULT_CATALOG_CAP)
            })
            .clone()
            .map_err(|cap| Error::budget("simple path catalog", cap as u64))
    }
}

/// Every simple `s`-`t` path, in depth-first order over ascending arc
/// indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCatalog {
    paths: Vec<Vec<usize>>,
    sets: Vec<BinaryVector>,
    cap: usize,
}

impl PathCatalog {
    pub fn build(graph: &SpGraph, cap: usize) -> Result<Self> {
        struct Dfs<'a> {
            g: &'a SpGraph,
            on_path: Vec<bool>,
            stack: Vec<usize>,
            paths: Vec<Vec<usize>>,
            cap: usize,
        }
        impl Dfs<'_> {
            fn go(&mut self, v: usize) -> Result<()> {
                if v == self.g.t {
                    if self.paths.len() == self.cap {
                        return Err(Error::budget("simple path catalog", self.cap as u64));
                    }
                    let mut p = self.stack.clone();
                    p.sort_unstable();
                    self.paths.push(p);
                    return Ok(());
                }
                for &k in &self.g.out[v] {
                    let w = self.g.arcs[k].1;
                    if !self.on_path[w] {
                        self.on_path[w] = true;
                        self.stack.push(k);
                        let res = self.go(w);
                        self.stack.pop();
                        self.on_path[w] = false;
                        res?;
                    }
                }
                Ok(())
            }
        }
        let mut dfs = Dfs {
            g: graph,
            on_path: vec![false; graph.nodes],
            stack: Vec::new(),
            paths: Vec::new(),
            cap,
        };
        dfs.on_path[graph.s] = true;
        dfs.go(graph.s)?;
        let n = graph.arcs.len();
        let sets = dfs
            .paths
            .iter()
            .map(|p| BinaryVector::from_indices(n, p.iter().copied()))
            .collect();
        Ok(PathCatalog {
            paths: dfs.paths,
            sets,
            cap,
        })
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Arc indices of path `k`, ascending.
    pub fn path(&self, k: usize) -> &[usize] {
        &self.paths[k]
    }

    pub fn sets(&self) -> &[BinaryVector] {
        &self.sets
    }

    /// Paths containing every arc of `x`.
    pub fn supersets_of<'a>(
        &'a self,
        x: &'a BinaryVector,
    ) -> impl Iterator<Item = &'a BinaryVector> + 'a {
        self.sets.iter().filter(move |p| x.is_subset_of(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> SpGraph {
        SpGraph::new(
            4,
            vec![(0, 1), (0, 2), (1, 3), (2, 3), (1, 2)],
            0,
            3,
            Variant::Simple,
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(SpGraph::new(2, vec![(0, 0)], 0, 1, Variant::Simple).is_err());
        assert!(SpGraph::new(2, vec![(0, 1)], 0, 0, Variant::Simple).is_err());
        assert!(SpGraph::new(2, vec![(0, 2)], 0, 1, Variant::Simple).is_err());
    }

    #[test]
    fn catalog_lists_simple_paths() {
        let g = diamond();
        let cat = g.catalog().unwrap();
        assert_eq!(cat.len(), 3);
        assert!(cat.sets().iter().all(|p| g.is_simple_path(p)));
        assert!(matches!(
            PathCatalog::build(&g, 2),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn simple_path_check() {
        let g = diamond();
        let bv = |s: &str| BinaryVector::parse(s).unwrap();
        assert!(g.is_simple_path(&bv("10100")));
        assert!(g.is_simple_path(&bv("10011")));
        assert!(!g.is_simple_path(&bv("11110")));
        assert!(!g.is_simple_path(&bv("10000")));
        assert!(!g.is_simple_path(&bv("00000")));
    }

    #[test]
    fn dijkstra_matches_catalog_minimum() {
        let g = diamond();
        let w = [4, 1, 1, 5, 1];
        let (path, d) = g.shortest_path(|k| w[k]).unwrap();
        let best = g
            .catalog()
            .unwrap()
            .sets()
            .iter()
            .map(|p| p.support().map(|k| w[k]).sum::<i64>())
            .min()
            .unwrap();
        assert_eq!(d, best);
        assert_eq!(path.iter().map(|&k| w[k]).sum::<i64>(), d);
        let cut = SpGraph::new(3, vec![(0, 1)], 0, 2, Variant::Relaxed).unwrap();
        assert!(cut.shortest_path(|_| 0).is_none());
        assert!(!cut.connects(|_| true));
    }
}
