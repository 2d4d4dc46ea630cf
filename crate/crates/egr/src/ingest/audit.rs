//! Audit of an external graph corpus against a manifest of expected
//! properties.
//!
//! The manifest fixes order, degree and girth for every graph, whether the
//! graphs are expected to be egr, and the expected collection of per-graph
//! λ value sets. Value sets are compared as a multiset, so neither file
//! names nor their order matter. Files that fail to parse are reported and
//! the audit continues.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::thread;

use serde::{Deserialize, Serialize};

use crate::ingest::{parse_graphs, sniff};
use crate::{parallel, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub girth: u32,
    pub egr: bool,
    /// Distinct λ values of each graph, one entry per graph.
    pub expected_value_sets: Vec<Vec<u64>>,
}

impl Manifest {
    pub fn from_json(text: &str) -> Result<Manifest> {
        let mut m: Manifest =
            serde_json::from_str(text).map_err(|e| Error::Manifest(format!("manifest: {e}")))?;
        for set in &mut m.expected_value_sets {
            set.sort_unstable();
            set.dedup();
        }
        m.expected_value_sets.sort();
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Manifest> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Manifest::from_json(&text)
    }

    pub fn builtin_cages55() -> Manifest {
        Manifest::from_json(crate::CAGES55_MANIFEST).expect("embedded manifest parses")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphAudit {
    /// File name, with `#k` for the k-th graph of a multi-graph file.
    pub source: String,
    pub order: usize,
    pub degrees: BTreeMap<usize, usize>,
    /// `None` for an acyclic graph.
    pub girth: Option<u32>,
    pub lambda_multiset: BTreeMap<u64, usize>,
    pub lambda_values: Vec<u64>,
    pub is_egr: bool,
    pub meets_manifest: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FileError {
    pub file: String,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditStatus {
    DataMissing,
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusAudit {
    pub manifest: String,
    pub status: AuditStatus,
    pub graphs: Vec<GraphAudit>,
    pub errors: Vec<FileError>,
    /// Observed value sets, sorted.
    pub value_sets: Vec<Vec<u64>>,
    pub expected_value_sets: Vec<Vec<u64>>,
    pub notes: Vec<String>,
}

impl CorpusAudit {
    fn missing(manifest: &Manifest, note: String) -> CorpusAudit {
        CorpusAudit {
            manifest: manifest.name.clone(),
            status: AuditStatus::DataMissing,
            graphs: Vec::new(),
            errors: Vec::new(),
            value_sets: Vec::new(),
            expected_value_sets: manifest.expected_value_sets.clone(),
            notes: vec![note],
        }
    }
}

/// Graph files in `dir`: every `.g6` file, sorted by name.
pub fn corpus_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "g6"))
        .collect();
    files.sort();
    Ok(files)
}

/// Audits the `.g6` files of `dir`. A missing directory or an empty one
/// yields [`AuditStatus::DataMissing`].
pub fn audit_dir(dir: Option<&Path>, manifest: &Manifest, threads: usize) -> CorpusAudit {
    let Some(dir) = dir else {
        return CorpusAudit::missing(
            manifest,
            format!("data missing: no corpus directory given and {} is unset", crate::CORPUS_ENV),
        );
    };
    match corpus_files(dir) {
        Ok(files) if !files.is_empty() => audit_files(&files, manifest, threads),
        Ok(_) => CorpusAudit::missing(
            manifest,
            format!("data missing: no .g6 files in {}", dir.display()),
        ),
        Err(e) => CorpusAudit::missing(manifest, format!("data missing: {}: {e}", dir.display())),
    }
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn audit_file(path: &Path, manifest: &Manifest) -> Result<Vec<GraphAudit>, FileError> {
    let file = file_label(path);
    let fail = |message: String| FileError {
        file: file.clone(),
        message,
    };
    let text = fs::read_to_string(path).map_err(|e| fail(e.to_string()))?;
    let graphs = parse_graphs(&text, sniff(Some(path), &text), &file).map_err(|e| fail(e.to_string()))?;
    let multi = graphs.len() > 1;
    let mut out = Vec::new();
    for (k, g) in graphs.iter().enumerate() {
        let girth = g.girth().finite();
        let (lambda_multiset, is_egr) = match girth {
            Some(_) => {
                let r = parallel::is_egr(g, 1).map_err(|e| fail(e.to_string()))?;
                (r.lambda_multiset, r.is_egr)
            }
            None => (BTreeMap::new(), false),
        };
        let degrees = g.degree_multiset();
        let meets_manifest = g.order() == manifest.order
            && g.regular_degree() == Some(manifest.degree)
            && girth == Some(manifest.girth)
            && is_egr == manifest.egr;
        out.push(GraphAudit {
            source: if multi { format!("{file}#{}", k + 1) } else { file.clone() },
            order: g.order(),
            degrees,
            girth,
            lambda_values: lambda_multiset.keys().copied().collect(),
            lambda_multiset,
            is_egr,
            meets_manifest,
        });
    }
    Ok(out)
}

/// Audits the given files, one worker per file up to `threads`. The result
/// does not depend on the order of `files` or on `threads`.
pub fn audit_files(files: &[PathBuf], manifest: &Manifest, threads: usize) -> CorpusAudit {
    let threads = threads.max(1);
    let mut results: Vec<Option<Result<Vec<GraphAudit>, FileError>>> = vec![None; files.len()];
    for (chunk_files, chunk_out) in files.chunks(threads).zip(results.chunks_mut(threads)) {
        thread::scope(|s| {
            for (path, slot) in chunk_files.iter().zip(chunk_out.iter_mut()) {
                s.spawn(move || *slot = Some(audit_file(path, manifest)));
            }
        });
    }
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for r in results.into_iter().flatten() {
        match r {
            Ok(g) => graphs.extend(g),
            Err(e) => errors.push(e),
        }
    }
    graphs.sort_by(|a, b| a.source.cmp(&b.source));
    errors.sort_by(|a, b| a.file.cmp(&b.file));

    let mut value_sets: Vec<Vec<u64>> = graphs.iter().map(|g| g.lambda_values.clone()).collect();
    value_sets.sort();
    let mut notes = Vec::new();
    for g in graphs.iter().filter(|g| !g.meets_manifest) {
        notes.push(format!(
            "{}: expected order {}, {}-regular, girth {}, egr {}",
            g.source, manifest.order, manifest.degree, manifest.girth, manifest.egr
        ));
    }
    if value_sets != manifest.expected_value_sets {
        notes.push(format!(
            "lambda value sets {:?} differ from expected {:?}",
            value_sets, manifest.expected_value_sets
        ));
    }
    let status = if errors.is_empty()
        && graphs.iter().all(|g| g.meets_manifest)
        && value_sets == manifest.expected_value_sets
    {
        AuditStatus::Pass
    } else {
        AuditStatus::Fail
    };
    CorpusAudit {
        manifest: manifest.name.clone(),
        status,
        graphs,
        errors,
        value_sets,
        expected_value_sets: manifest.expected_value_sets.clone(),
        notes,
    }
}
