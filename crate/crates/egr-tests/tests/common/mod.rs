use egr_core::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub const DEFAULT_SEED: u64 = 0x5eed_e9a1;

/// Seed from `EGR_TEST_SEED`, else the fixed default.
pub fn rng() -> StdRng {
    let seed = std::env::var("EGR_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n as u32 {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_regular(n: usize, k: usize, rng: &mut StdRng) -> Graph {
    loop {
        let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        stubs.shuffle(rng);
        let edges: Vec<(u32, u32)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::from_edges(n, edges) {
            return g;
        }
    }
}

/// Runs the command line in-process; returns the exit code and stdout.
pub fn cli(args: &[&str], stdin: &[u8]) -> (u8, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("egr").chain(args.iter().copied());
    let code = egr::cli::run(argv, &mut &stdin[..], &mut out, &mut err);
    (code, out)
}
