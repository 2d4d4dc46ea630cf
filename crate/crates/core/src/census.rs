//! Per-edge counts of cycles of a fixed length, and the egr verdict.
//!
//! A cycle is a set of edges: counts are free of direction and rotation.
//! For an edge `{u, v}` the cycles of length `g` through it correspond one to
//! one with simple paths of length `g - 1` from `v` to `u`, so the census runs
//! a depth-first search over such paths, pruned by the breadth-first distance
//! to `u`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{bail, Result};
use crate::graph::{Girth, Graph};

pub mod oracle;

/// Reusable buffers for [`census_block`].
#[derive(Debug, Default)]
pub struct Scratch {
    dist: Vec<u32>,
    on_path: Vec<bool>,
}

impl Scratch {
    pub fn new(n: usize) -> Scratch {
        Scratch {
            dist: vec![u32::MAX; n],
            on_path: vec![false; n],
        }
    }
}

/// Number of cycles of length `len` through each edge, in canonical edge
/// order. Lengths below 3 give all zeros.
pub fn cycle_census(g: &Graph, len: u32) -> Vec<u64> {
    let mut out = vec![0u64; g.size()];
    let mut scratch = Scratch::new(g.order());
    census_block(g, len, 0..g.order(), &mut scratch, &mut out);
    out
}

/// Census restricted to edges whose lower endpoint lies in `lower`.
///
/// `out` receives the counts for [`Graph::edge_range`] of the same vertex
/// range, so disjoint ranges can be processed independently and concatenated.
pub fn census_block(
    g: &Graph,
    len: u32,
    lower: core::ops::Range<usize>,
    scratch: &mut Scratch,
    out: &mut [u64],
) {
    let range = g.edge_range(lower.start, lower.end);
    assert_eq!(out.len(), range.len(), "output block does not match edge range");
    if len < 3 {
        out.fill(0);
        return;
    }
    if scratch.dist.len() != g.order() {
        *scratch = Scratch::new(g.order());
    }
    let mut k = 0;
    for u in lower {
        let u = u as u32;
        if g.upper_neighbors(u).is_empty() {
            continue;
        }
        g.bfs_into(u, len, &mut scratch.dist);
        scratch.on_path[u as usize] = true;
        for &v in g.upper_neighbors(u) {
            scratch.on_path[v as usize] = true;
            out[k] = paths_to_target(g, v, u, len - 1, scratch);
            scratch.on_path[v as usize] = false;
            k += 1;
        }
        scratch.on_path[u as usize] = false;
    }
}

/// Simple paths of exactly `remaining` edges from `x` to `target`, avoiding
/// vertices already on the path. `target` itself is marked on the path so it
/// is only reachable by the closing step.
fn paths_to_target(g: &Graph, x: u32, target: u32, remaining: u32, s: &mut Scratch) -> u64 {
    if remaining == 1 {
        return u64::from(g.has_edge(x, target));
    }
    let mut total = 0;
    for &w in g.neighbors(x) {
        let wi = w as usize;
        if s.on_path[wi] || s.dist[wi] > remaining - 1 {
            continue;
        }
        s.on_path[wi] = true;
        total += paths_to_target(g, w, target, remaining - 1, s);
        s.on_path[wi] = false;
    }
    total
}

/// Order, degrees, girth and per-edge girth-cycle counts of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgrReport {
    pub order: usize,
    /// degree → number of vertices
    pub degrees: BTreeMap<usize, usize>,
    pub girth: u32,
    /// per-edge count → number of edges
    pub lambda_multiset: BTreeMap<u64, usize>,
    pub is_egr: bool,
    pub lambda: Option<u64>,
    /// total number of girth cycles
    pub cycles: u64,
}

impl EgrReport {
    /// Assembles the report from a census already computed at the girth.
    pub fn from_counts(g: &Graph, girth: u32, counts: &[u64]) -> Result<EgrReport> {
        if counts.len() != g.size() {
            bail!(Invariant, "census has {} entries for {} edges", counts.len(), g.size());
        }
        let degrees = g.degree_multiset();
        let mut lambda_multiset = BTreeMap::new();
        for &c in counts {
            *lambda_multiset.entry(c).or_insert(0) += 1;
        }
        let sum: u64 = counts.iter().sum();
        if !sum.is_multiple_of(u64::from(girth)) {
            bail!(Invariant, "edge-cycle incidences {sum} not divisible by girth {girth}");
        }
        let is_egr = degrees.len() == 1 && lambda_multiset.len() == 1;
        let lambda = is_egr.then(|| *lambda_multiset.keys().next().unwrap());
        Ok(EgrReport {
            order: g.order(),
            degrees,
            girth,
            lambda_multiset,
            is_egr,
            lambda,
            cycles: sum / u64::from(girth),
        })
    }

    /// The common degree, if regular.
    pub fn degree(&self) -> Option<usize> {
        (self.degrees.len() == 1).then(|| *self.degrees.keys().next().unwrap())
    }

    /// `(v, k, g, λ)` when the graph is edge-girth-regular.
    pub fn parameters(&self) -> Option<(usize, usize, u32, u64)> {
        Some((self.order, self.degree()?, self.girth, self.lambda?))
    }

    /// Distinct per-edge counts in increasing order.
    pub fn lambda_values(&self) -> Vec<u64> {
        self.lambda_multiset.keys().copied().collect()
    }
}

/// Girth check and census at the girth.
///
/// Edgeless and acyclic graphs are domain errors.
pub fn is_egr(g: &Graph) -> Result<EgrReport> {
    let girth = require_girth(g)?;
    EgrReport::from_counts(g, girth, &cycle_census(g, girth))
}

/// The girth of a graph that must contain a cycle.
pub fn require_girth(g: &Graph) -> Result<u32> {
    if g.size() == 0 {
        bail!(Domain, "graph has no edges");
    }
    match g.girth() {
        Girth::Finite(girth) => Ok(girth),
        Girth::Acyclic => bail!(Domain, "graph is acyclic"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn single_value(counts: &[u64]) -> Option<u64> {
        let first = *counts.first()?;
        counts.iter().all(|&c| c == first).then_some(first)
    }

    #[test]
    fn triangle_and_small_complete_graphs() {
        assert_eq!(cycle_census(&complete(3), 3), vec![1, 1, 1]);
        assert_eq!(single_value(&cycle_census(&complete(4), 3)), Some(2));
        assert_eq!(single_value(&cycle_census(&complete_bipartite(3, 3), 4)), Some(4));
    }

    #[test]
    fn cubic_egr_graphs() {
        let cases = [
            (petersen(), 5, 4),
            (heawood(), 6, 8),
            (mobius_kantor(), 6, 6),
            (pappus(), 6, 4),
            (desargues(), 6, 4),
            (dodecahedron(), 5, 2),
            (cube(), 4, 2),
        ];
        for (g, girth, lambda) in cases {
            let r = is_egr(&g).unwrap();
            assert_eq!(r.girth, girth);
            assert_eq!(r.lambda, Some(lambda), "order {}", g.order());
            assert!(r.is_egr);
        }
    }

    #[test]
    fn q3_census_gives_order_eight() {
        let r = is_egr(&cube()).unwrap();
        assert_eq!(r.parameters(), Some((8, 3, 4, 2)));
    }

    #[test]
    fn below_girth_census_is_zero() {
        let g = petersen();
        assert!(cycle_census(&g, 3).iter().all(|&c| c == 0));
        assert!(cycle_census(&g, 4).iter().all(|&c| c == 0));
        assert!(cycle_census(&g, 2).iter().all(|&c| c == 0));
    }

    #[test]
    fn subdivided_petersen_is_not_egr() {
        let p = petersen();
        let (a, b) = p.edges().next().unwrap();
        let mut edges: Vec<_> = p.edges().filter(|&e| e != (a, b)).collect();
        edges.push((a, 10));
        edges.push((10, b));
        let g = Graph::from_edges(11, edges).unwrap();
        let r = is_egr(&g).unwrap();
        assert!(!r.is_egr);
        assert_eq!(r.degrees.len(), 2);
        assert_eq!(r.lambda, None);
    }

    #[test]
    fn acyclic_and_edgeless_are_domain_errors() {
        assert!(matches!(is_egr(&path(5)), Err(crate::Error::Domain(_))));
        let empty = Graph::from_edges(3, []).unwrap();
        assert!(matches!(is_egr(&empty), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn incidence_sum_is_multiple_of_length() {
        for g in [petersen(), heawood(), cube(), complete(6)] {
            for len in 3..=8 {
                let s: u64 = cycle_census(&g, len).iter().sum();
                assert_eq!(s % len as u64, 0);
            }
        }
    }

    #[test]
    fn blocks_concatenate_to_full_census() {
        let g = desargues();
        let full = cycle_census(&g, 6);
        let mut scratch = Scratch::new(g.order());
        let mut joined = Vec::new();
        for (a, b) in [(0, 3), (3, 11), (11, 20)] {
            let mut block = vec![0; g.edge_range(a, b).len()];
            census_block(&g, 6, a..b, &mut scratch, &mut block);
            joined.extend(block);
        }
        assert_eq!(joined, full);
    }

    #[test]
    fn report_is_label_invariant() {
        let mut rng = StdRng::seed_from_u64(7);
        for g in [pappus(), mobius_kantor(), dodecahedron()] {
            let base = is_egr(&g).unwrap();
            let mut perm: Vec<u32> = (0..g.order() as u32).collect();
            perm.shuffle(&mut rng);
            let r = is_egr(&g.permuted(&perm).unwrap()).unwrap();
            assert_eq!(r, base);
        }
    }
}
