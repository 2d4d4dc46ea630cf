//! Vertex permutations, orbits, automorphism group orders and isomorphism.
//!
//! Searches use individualisation and colour refinement. Vertices start
//! coloured by degree and distance profile; a colouring is refined by
//! splitting on the multiset of neighbour colours until stable. Two graphs
//! are refined jointly so that colour names agree, and any mismatch in
//! colour class sizes prunes the branch. Leaves are checked edge by edge,
//! so refinement only ever prunes and never decides.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{bail, Result};
use crate::graph::Graph;

/// A permutation of `0..n`: vertex `v` maps to `perm[v]`.
pub type Perm = Vec<u32>;

/// Largest order accepted by the default searches.
pub const SEARCH_LIMIT: usize = 64;

pub fn check_bijection(n: usize, perm: &[u32]) -> Result<()> {
    if perm.len() != n {
        bail!(Parameter, "permutation has length {} for {n} vertices", perm.len());
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p as usize >= n || core::mem::replace(&mut seen[p as usize], true) {
            bail!(Parameter, "not a bijection on 0..{n}");
        }
    }
    Ok(())
}

/// Whether `perm` maps edges onto edges.
pub fn is_automorphism(g: &Graph, perm: &[u32]) -> Result<bool> {
    check_bijection(g.order(), perm)?;
    Ok(g
        .edges()
        .all(|(u, v)| g.has_edge(perm[u as usize], perm[v as usize])))
}

/// Orbits of the group generated by `gens` on `0..n`, each sorted, listed by
/// smallest element.
pub fn vertex_orbits(n: usize, gens: &[Perm]) -> Result<Vec<Vec<u32>>> {
    let mut uf = UnionFind::new(n);
    for g in gens {
        check_bijection(n, g)?;
        for (v, &w) in g.iter().enumerate() {
            uf.union(v as u32, w);
        }
    }
    Ok(uf.classes())
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let p = self.parent[v as usize];
            self.parent[v as usize] = self.parent[p as usize];
            v = p;
        }
        v
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }

    pub(crate) fn classes(&mut self) -> Vec<Vec<u32>> {
        let mut by_root: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for v in 0..self.parent.len() as u32 {
            let r = self.find(v);
            by_root.entry(r).or_default().push(v);
        }
        by_root.into_values().collect()
    }
}

/// Degree followed by `(distance, count)` pairs of the BFS layer sizes.
fn initial_signatures(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.order() as u32)
        .map(|v| {
            let mut layers: BTreeMap<u32, u32> = BTreeMap::new();
            for d in g.distances_from(v) {
                *layers.entry(d).or_insert(0) += 1;
            }
            let mut sig = vec![g.degree(v) as u32];
            for (d, c) in layers {
                sig.push(d);
                sig.push(c);
            }
            sig
        })
        .collect()
}

/// Joint colouring of two graphs of equal order.
#[derive(Debug, Clone)]
struct Colouring {
    a: Vec<u32>,
    b: Vec<u32>,
    classes: u32,
}

/// Names signatures by their rank among all signatures of both sides.
/// Returns `None` when the class sizes differ between the sides.
fn name_jointly(sa: &[Vec<u32>], sb: &[Vec<u32>]) -> Option<Colouring> {
    let mut all: Vec<&Vec<u32>> = sa.iter().chain(sb.iter()).collect();
    all.sort_unstable();
    all.dedup();
    let id = |s: &Vec<u32>| all.binary_search(&s).unwrap() as u32;
    let a: Vec<u32> = sa.iter().map(id).collect();
    let b: Vec<u32> = sb.iter().map(id).collect();
    let classes = all.len() as u32;
    let mut count = vec![0i64; classes as usize];
    for &c in &a {
        count[c as usize] += 1;
    }
    for &c in &b {
        count[c as usize] -= 1;
    }
    count.iter().all(|&c| c == 0).then_some(Colouring { a, b, classes })
}

struct Search<'g> {
    ga: &'g Graph,
    gb: &'g Graph,
}

impl Search<'_> {
    fn start(&self) -> Option<Colouring> {
        let c = name_jointly(&initial_signatures(self.ga), &initial_signatures(self.gb))?;
        self.refine(c)
    }

    fn refine(&self, mut c: Colouring) -> Option<Colouring> {
        loop {
            let sig = |g: &Graph, col: &[u32]| -> Vec<Vec<u32>> {
                (0..g.order() as u32)
                    .map(|v| {
                        let mut s = Vec::with_capacity(g.degree(v) + 1);
                        s.push(col[v as usize]);
                        let start = s.len();
                        s.extend(g.neighbors(v).iter().map(|&w| col[w as usize]));
                        s[start..].sort_unstable();
                        s
                    })
                    .collect()
            };
            let next = name_jointly(&sig(self.ga, &c.a), &sig(self.gb, &c.b))?;
            if next.classes == c.classes {
                return Some(next);
            }
            c = next;
        }
    }

    fn individualise(&self, c: &Colouring, x: u32, y: u32) -> Option<Colouring> {
        let mut next = c.clone();
        next.a[x as usize] = c.classes;
        next.b[y as usize] = c.classes;
        next.classes += 1;
        self.refine(next)
    }

    /// Smallest non-singleton colour class, ties broken by colour name.
    fn target_cell(&self, c: &Colouring) -> Option<u32> {
        let mut size = vec![0u32; c.classes as usize];
        for &col in &c.a {
            size[col as usize] += 1;
        }
        (0..c.classes)
            .filter(|&col| size[col as usize] > 1)
            .min_by_key(|&col| (size[col as usize], col))
    }

    /// An isomorphism respecting the (already refined) colouring, if any.
    fn extend(&self, c: &Colouring) -> Option<Perm> {
        let Some(cell) = self.target_cell(c) else {
            return self.leaf(c);
        };
        let x = c.a.iter().position(|&col| col == cell).unwrap() as u32;
        for y in 0..self.gb.order() as u32 {
            if c.b[y as usize] != cell {
                continue;
            }
            if let Some(m) = self.individualise(c, x, y).and_then(|next| self.extend(&next)) {
                return Some(m);
            }
        }
        None
    }

    fn leaf(&self, c: &Colouring) -> Option<Perm> {
        let mut by_colour = vec![0u32; c.classes as usize];
        for (v, &col) in c.b.iter().enumerate() {
            by_colour[col as usize] = v as u32;
        }
        let map: Perm = c.a.iter().map(|&col| by_colour[col as usize]).collect();
        self.ga
            .edges()
            .all(|(u, v)| self.gb.has_edge(map[u as usize], map[v as usize]))
            .then_some(map)
    }
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        bail!(
            Resource,
            "graph of order {} exceeds the search limit {limit}",
            g.order()
        );
    }
    Ok(())
}

/// An isomorphism from `a` to `b` (`b` has an edge `{m[u], m[v]}` for every
/// edge `{u, v}` of `a`), if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph, limit: usize) -> Result<Option<Perm>> {
    check_limit(a, limit)?;
    check_limit(b, limit)?;
    if a.order() != b.order() || a.size() != b.size() || a.degree_multiset() != b.degree_multiset()
    {
        return Ok(None);
    }
    let search = Search { ga: a, gb: b };
    Ok(search.start().and_then(|c| search.extend(&c)))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    are_isomorphic_with_limit(a, b, SEARCH_LIMIT)
}

/// [`are_isomorphic`] with a caller-chosen order limit.
pub fn are_isomorphic_with_limit(a: &Graph, b: &Graph, limit: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, limit)?.is_some())
}

/// Exact order of the automorphism group, for graphs up to [`SEARCH_LIMIT`]
/// vertices.
///
/// Works down a base `b_1, b_2, ...` of refined individualisations and
/// multiplies the orbit lengths of each `b_i` under the pointwise stabiliser
/// of its predecessors. Automorphisms found at a level are used to close
/// orbits without further search. Orders beyond `u128` are a resource error.
pub fn automorphism_group_order(g: &Graph) -> Result<u128> {
    check_limit(g, SEARCH_LIMIT)?;
    let search = Search { ga: g, gb: g };
    let mut c = search.start().expect("a graph refines consistently against itself");
    let mut order: u128 = 1;
    while let Some(cell) = search.target_cell(&c) {
        let x = c.a.iter().position(|&col| col == cell).unwrap() as u32;
        let mut uf = UnionFind::new(g.order());
        let mut rejected: Vec<u32> = Vec::new();
        let mut orbit = 0u128;
        for y in 0..g.order() as u32 {
            if c.a[y as usize] != cell {
                continue;
            }
            if uf.find(y) == uf.find(x) {
                orbit += 1;
                continue;
            }
            let ry = uf.find(y);
            if rejected.iter().any(|&r| uf.find(r) == ry) {
                continue;
            }
            match search.individualise(&c, x, y).and_then(|n| search.extend(&n)) {
                Some(m) => {
                    for (v, &w) in m.iter().enumerate() {
                        uf.union(v as u32, w);
                    }
                    orbit += 1;
                }
                None => rejected.push(y),
            }
        }
        let Some(next) = order.checked_mul(orbit) else {
            bail!(Resource, "automorphism group order overflows u128");
        };
        order = next;
        c = search
            .individualise(&c, x, x)
            .expect("individualising the same vertex on both sides refines consistently");
    }
    Ok(order)
}
