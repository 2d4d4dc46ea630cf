//! Reference cycle census by global enumeration.
//!
//! Every cycle of the requested length is listed once through its canonical
//! representative: it starts at its smallest vertex, and of the two
//! directions the one whose second vertex is smaller than its last is kept.
//! Per-edge counts are then accumulated from the list. This shares no code
//! path with [`super::cycle_census`] and is meant for small graphs only.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// All cycles of length `len` as canonical vertex sequences.
pub fn enumerate_cycles(g: &Graph, len: u32) -> Vec<Vec<u32>> {
    let mut cycles = Vec::new();
    if len < 3 {
        return cycles;
    }
    let len = len as usize;
    let mut path = Vec::with_capacity(len);
    let mut used = vec![false; g.order()];
    for s in 0..g.order() as u32 {
        path.push(s);
        used[s as usize] = true;
        extend(g, len, &mut path, &mut used, &mut cycles);
        used[s as usize] = false;
        path.pop();
    }
    cycles
}

fn extend(g: &Graph, len: usize, path: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == len {
        if path[1] < last && g.has_edge(last, s) {
            out.push(path.clone());
        }
        return;
    }
    for &w in g.neighbors(last) {
        if w <= s || used[w as usize] {
            continue;
        }
        used[w as usize] = true;
        path.push(w);
        extend(g, len, path, used, out);
        path.pop();
        used[w as usize] = false;
    }
}

/// Per-edge cycle counts in canonical edge order, from [`enumerate_cycles`].
pub fn cycle_census_oracle(g: &Graph, len: u32) -> Vec<u64> {
    let mut counts = vec![0u64; g.size()];
    for cycle in enumerate_cycles(g, len) {
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let e = g.edge_index(a, b).expect("cycle edges are graph edges");
            counts[e] += 1;
        }
    }
    counts
}
