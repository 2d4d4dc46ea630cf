//! Simple undirected graphs with sorted adjacency lists.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{bail, Result};

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(u32),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<u32> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl core::fmt::Display for Girth {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted. Edges are indexed `0..m` in lexicographic
/// order of `(u, v)` with `u < v`, so the edges whose lower endpoint lies in
/// a vertex range form a contiguous block of indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    // index of the first neighbour greater than the vertex itself
    upper_start: Vec<u32>,
    // edge index of the first edge with this lower endpoint; length n + 1
    edge_offset: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, repeated edges and
    /// out-of-range endpoints are parameter errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if n > u32::MAX as usize {
            bail!(Resource, "vertex count {n} does not fit in u32");
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                bail!(Parameter, "edge ({u}, {v}) out of range for {n} vertices");
            }
            if u == v {
                bail!(Parameter, "self-loop at vertex {u}");
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                bail!(Parameter, "repeated edge ({v}, {})", w[0]);
            }
        }
        Ok(Graph::from_sorted_adjacency(adj))
    }

    /// Builds a graph from adjacency lists that must already be symmetric.
    /// Lists are sorted here; asymmetry, loops and repeats are parameter errors.
    pub fn from_adjacency(mut adj: Vec<Vec<u32>>) -> Result<Graph> {
        let n = adj.len();
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                bail!(Parameter, "vertex {v} lists neighbour {} twice", w[0]);
            }
            if let Some(&w) = list.iter().find(|&&w| w as usize >= n) {
                bail!(Parameter, "vertex {v} lists out-of-range neighbour {w}");
            }
            if list.binary_search(&(v as u32)).is_ok() {
                bail!(Parameter, "self-loop at vertex {v}");
            }
        }
        for (v, list) in adj.iter().enumerate() {
            for &w in list {
                if adj[w as usize].binary_search(&(v as u32)).is_err() {
                    bail!(Parameter, "asymmetric adjacency: {v} lists {w} but not conversely");
                }
            }
        }
        Ok(Graph::from_sorted_adjacency(adj))
    }

    fn from_sorted_adjacency(adj: Vec<Vec<u32>>) -> Graph {
        let n = adj.len();
        let mut upper_start = Vec::with_capacity(n);
        let mut edge_offset = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        for (v, list) in adj.iter().enumerate() {
            let start = list.partition_point(|&w| (w as usize) < v);
            upper_start.push(start as u32);
            edge_offset.push(acc);
            acc += list.len() - start;
        }
        edge_offset.push(acc);
        Graph {
            adj,
            upper_start,
            edge_offset,
            labels: None,
        }
    }

    /// Attaches per-vertex display labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.order() {
            bail!(
                Parameter,
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            );
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edge_offset[self.order()]
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Neighbours of `v` with a larger index.
    #[inline]
    pub fn upper_neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize][self.upper_start[v as usize] as usize..]
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.order() && self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in the canonical edge order.
    pub fn edge_index(&self, u: u32, v: u32) -> Option<usize> {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if b as usize >= self.order() {
            return None;
        }
        let pos = self.upper_neighbors(a).binary_search(&b).ok()?;
        Some(self.edge_offset[a as usize] + pos)
    }

    /// Edge indices owned by lower endpoints in `start..end`.
    pub fn edge_range(&self, start: usize, end: usize) -> core::ops::Range<usize> {
        self.edge_offset[start]..self.edge_offset[end]
    }

    /// Edges `(u, v)`, `u < v`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.order() as u32)
            .flat_map(move |u| self.upper_neighbors(u).iter().map(move |&v| (u, v)))
    }

    /// Degree value → number of vertices with that degree.
    pub fn degree_multiset(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for list in &self.adj {
            *m.entry(list.len()).or_insert(0) += 1;
        }
        m
    }

    /// The common degree, if the graph is regular and nonempty.
    pub fn regular_degree(&self) -> Option<usize> {
        let m = self.degree_multiset();
        (m.len() == 1).then(|| *m.keys().next().unwrap())
    }

    /// Breadth-first distances from `source`; `u32::MAX` marks unreachable.
    pub fn distances_from(&self, source: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.order()];
        self.bfs_into(source, u32::MAX, &mut dist);
        dist
    }

    /// BFS from `source` stopping after depth `limit`. Vertices beyond the
    /// limit keep `u32::MAX`.
    pub(crate) fn bfs_into(&self, source: u32, limit: u32, dist: &mut [u32]) {
        dist.fill(u32::MAX);
        let mut queue = VecDeque::new();
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if du >= limit {
                continue;
            }
            for &w in self.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(|&d| d != u32::MAX)
    }

    /// A proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut colour = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s as u32);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    let c = 1 - colour[u as usize];
                    if colour[w as usize] == u8::MAX {
                        colour[w as usize] = c;
                        queue.push_back(w);
                    } else if colour[w as usize] != c {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a bijection.
    pub fn permuted(&self, perm: &[u32]) -> Result<Graph> {
        crate::symmetry::check_bijection(self.order(), perm)?;
        let edges = self.edges().map(|(u, v)| (perm[u as usize], perm[v as usize]));
        Graph::from_edges(self.order(), edges)
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = u32::MAX;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n as u32 {
            dist.fill(u32::MAX);
            queue.clear();
            dist[root as usize] = 0;
            parent[root as usize] = u32::MAX;
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                if 2 * du + 1 >= best {
                    break;
                }
                for &w in self.neighbors(u) {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = du + 1;
                        parent[w as usize] = u;
                        queue.push_back(w);
                    } else if w != parent[u as usize] {
                        best = best.min(du + dist[w as usize] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == u32::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }
}

/// Named small graphs used throughout the tests and examples.
pub mod named {
    use super::*;

    pub fn cycle(n: u32) -> Graph {
        Graph::from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: u32) -> Graph {
        Graph::from_edges(n as usize, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: u32) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n as usize, edges).unwrap()
    }

    pub fn complete_bipartite(a: u32, b: u32) -> Graph {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
        Graph::from_edges((a + b) as usize, edges).unwrap()
    }

    /// Generalized Petersen graph `GP(n, k)`: outer cycle `0..n`, spokes,
    /// inner star polygon on `n..2n`.
    pub fn generalized_petersen(n: u32, k: u32) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((i, n + i));
            edges.push((n + i, n + (i + k) % n));
        }
        Graph::from_edges(2 * n as usize, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        generalized_petersen(5, 2)
    }

    pub fn mobius_kantor() -> Graph {
        generalized_petersen(8, 3)
    }

    pub fn desargues() -> Graph {
        generalized_petersen(10, 3)
    }

    pub fn dodecahedron() -> Graph {
        generalized_petersen(10, 2)
    }

    /// LCF notation `[shifts]^reps` on `n` vertices of a Hamiltonian cycle.
    pub fn lcf(n: u32, shifts: &[i32], reps: u32) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
        }
        let mut i = 0u32;
        for _ in 0..reps {
            for &s in shifts {
                let j = (i as i64 + s as i64).rem_euclid(n as i64) as u32;
                if i < j {
                    edges.push((i, j));
                }
                i += 1;
            }
        }
        Graph::from_edges(n as usize, edges).unwrap()
    }

    pub fn heawood() -> Graph {
        lcf(14, &[5, -5], 7)
    }

    pub fn pappus() -> Graph {
        lcf(18, &[5, 7, -7, 7, -7, -5], 3)
    }

    /// The 3-cube `Q_3`.
    pub fn cube() -> Graph {
        let edges = (0u32..8).flat_map(|v| {
            [1u32, 2, 4]
                .into_iter()
                .filter(move |b| v & b == 0)
                .map(move |b| (v, v | b))
        });
        Graph::from_edges(8, edges).unwrap()
    }
}
