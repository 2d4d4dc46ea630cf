//! File formats, corpus audits, threaded census and the `egr` command line
//! on top of [`egr_core`].

pub mod cli;
pub mod ingest;
pub mod parallel;
pub mod report;

use std::path::PathBuf;

/// Adjacency listing of the 32-vertex quintic reference graph, 1-based.
pub const SPECIAL32_FIXTURE: &str = include_str!("../assets/special32_appendix.txt");

/// Expected properties of the four (5,5)-cages.
pub const CAGES55_MANIFEST: &str = include_str!("../data/cages55.manifest.json");

/// Environment variable naming the default corpus directory.
pub const CORPUS_ENV: &str = "EGR_CORPUS_DIR";

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] egr_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{context}: {source}")]
    Graph6 {
        context: String,
        source: ingest::graph6::Graph6Error,
    },
    #[error("{context}: {source}")]
    Adjlist {
        context: String,
        source: ingest::adjlist::AdjlistError,
    },
    #[error("{0}")]
    Manifest(String),
    #[error("{0}")]
    Mismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// 1 parameter, 2 I/O or parse, 3 verification mismatch, 4 resource refusal.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Core(e) => match e {
                egr_core::Error::Parameter(_) | egr_core::Error::Domain(_) => 1,
                egr_core::Error::Resource(_) => 4,
                egr_core::Error::Inconsistent(_) | egr_core::Error::Invariant(_) => 3,
            },
            Error::Io { .. } | Error::Graph6 { .. } | Error::Adjlist { .. } | Error::Manifest(_) => 2,
            Error::Mismatch(_) => 3,
        }
    }
}

/// The embedded fixture as a graph.
pub fn special32_fixture() -> egr_core::Graph {
    ingest::adjlist::parse_adjlist(SPECIAL32_FIXTURE).expect("embedded fixture parses")
}
