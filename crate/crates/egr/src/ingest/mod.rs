//! Graph file formats and corpus audits.

pub mod adjlist;
pub mod audit;
pub mod graph6;

use std::path::Path;

use egr_core::Graph;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Adjlist,
}

/// Picks a format from the extension, then from the content: adjacency
/// listings start with a digit or a `Graph<` header, graph6 bytes never do.
pub fn sniff(path: Option<&Path>, text: &str) -> Format {
    match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("g6") => return Format::Graph6,
        Some("adj" | "txt") => return Format::Adjlist,
        _ => {}
    }
    let t = text.trim_start();
    if t.starts_with(|c: char| c.is_ascii_digit()) || t.contains("Graph<") {
        Format::Adjlist
    } else {
        Format::Graph6
    }
}

/// Every graph in `text`; graph6 input may hold one graph per line.
pub fn parse_graphs(text: &str, format: Format, context: &str) -> Result<Vec<Graph>> {
    match format {
        Format::Graph6 => graph6::parse_graph6_lines(text.as_bytes()).map_err(|source| Error::Graph6 {
            context: context.to_string(),
            source,
        }),
        Format::Adjlist => adjlist::parse_adjlist(text)
            .map(|g| vec![g])
            .map_err(|source| Error::Adjlist {
                context: context.to_string(),
                source,
            }),
    }
}
