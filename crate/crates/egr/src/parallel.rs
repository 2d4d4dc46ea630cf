//! Cycle census split over worker threads.
//!
//! Vertices are cut into contiguous ranges of roughly equal edge count. Each
//! range owns a disjoint slice of the output, so the result is identical for
//! every thread count.

use std::ops::Range;
use std::thread;

use egr_core::census::{census_block, require_girth, Scratch};
use egr_core::{EgrReport, Graph};

fn vertex_ranges(g: &Graph, parts: usize) -> Vec<Range<usize>> {
    let n = g.order();
    let m = g.size().max(1);
    let mut ranges = Vec::new();
    let mut start = 0;
    for k in 1..=parts {
        let target = m * k / parts;
        let mut end = start;
        while end < n && (k == parts || g.edge_range(0, end).len() < target) {
            end += 1;
        }
        if end > start {
            ranges.push(start..end);
        }
        start = end;
    }
    ranges
}

/// Same result as [`egr_core::cycle_census`] for every `threads ≥ 1`.
pub fn cycle_census(g: &Graph, len: u32, threads: usize) -> Vec<u64> {
    let threads = threads.max(1);
    if threads == 1 {
        return egr_core::cycle_census(g, len);
    }
    let mut out = vec![0u64; g.size()];
    thread::scope(|s| {
        let mut rest: &mut [u64] = &mut out;
        for range in vertex_ranges(g, threads) {
            let (block, tail) = rest.split_at_mut(g.edge_range(range.start, range.end).len());
            rest = tail;
            s.spawn(move || {
                let mut scratch = Scratch::new(g.order());
                census_block(g, len, range, &mut scratch, block);
            });
        }
    });
    out
}

/// Threaded counterpart of [`egr_core::is_egr`].
pub fn is_egr(g: &Graph, threads: usize) -> egr_core::Result<EgrReport> {
    let girth = require_girth(g)?;
    let counts = cycle_census(g, girth, threads);
    EgrReport::from_counts(g, girth, &counts)
}
