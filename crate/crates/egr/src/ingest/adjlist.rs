//! Adjacency listings with 1-based, brace-delimited neighbour sets.
//!
//! Two layouts are read: a bare vertex count followed by the sets,
//!
//! ```text
//! 2
//! {2}
//! {1}
//! ```
//!
//! and the Magma form `gr:=Graph<n|[{…},{…},…]>;`. Sets may be separated by
//! commas, brackets and whitespace. The listing must be symmetric.

use egr_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct AdjlistError {
    pub line: usize,
    pub kind: AdjlistErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdjlistErrorKind {
    #[error("missing or malformed vertex count")]
    BadHeader,
    #[error("unexpected character {0:?}")]
    Unexpected(char),
    #[error("unterminated neighbour set")]
    Unterminated,
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: u64, n: usize },
    #[error("vertex {0} lists itself")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists {neighbor} twice")]
    Repeated { vertex: usize, neighbor: usize },
    #[error("expected {expected} neighbour sets, found {found}")]
    SetCount { expected: usize, found: usize },
    #[error("vertex {vertex} lists {neighbor} but {neighbor} does not list {vertex}")]
    Asymmetric { vertex: usize, neighbor: usize },
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn error(&self, kind: AdjlistErrorKind) -> AdjlistError {
        AdjlistError { line: self.line, kind }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        self.text[start..self.pos].parse().ok()
    }
}

pub fn parse_adjlist(text: &str) -> Result<Graph, AdjlistError> {
    let mut cur = Cursor { text, pos: 0, line: 1 };
    let n = header(&mut cur)?;
    let mut sets: Vec<(usize, Vec<u64>)> = Vec::new();
    loop {
        match cur.peek() {
            None => break,
            Some('{') => {
                cur.bump();
                let line = cur.line;
                sets.push((line, set_body(&mut cur)?));
            }
            Some(c) if c.is_whitespace() || matches!(c, ',' | '[' | ']' | '>' | ';') => {
                cur.bump();
            }
            Some(c) => return Err(cur.error(AdjlistErrorKind::Unexpected(c))),
        }
    }
    if sets.len() != n {
        return Err(cur.error(AdjlistErrorKind::SetCount {
            expected: n,
            found: sets.len(),
        }));
    }
    let mut adj = vec![Vec::new(); n];
    for (v, (line, set)) in sets.iter().enumerate() {
        let error = |kind| AdjlistError { line: *line, kind };
        for &w in set {
            if w == 0 || w > n as u64 {
                return Err(error(AdjlistErrorKind::OutOfRange { vertex: w, n }));
            }
            let w = w as usize - 1;
            if w == v {
                return Err(error(AdjlistErrorKind::SelfLoop(v + 1)));
            }
            if adj[v].contains(&(w as u32)) {
                return Err(error(AdjlistErrorKind::Repeated {
                    vertex: v + 1,
                    neighbor: w + 1,
                }));
            }
            adj[v].push(w as u32);
        }
    }
    for (v, (line, _)) in sets.iter().enumerate() {
        for &w in &adj[v] {
            if !adj[w as usize].contains(&(v as u32)) {
                return Err(AdjlistError {
                    line: *line,
                    kind: AdjlistErrorKind::Asymmetric {
                        vertex: v + 1,
                        neighbor: w as usize + 1,
                    },
                });
            }
        }
    }
    Ok(Graph::from_adjacency(adj).expect("listing validated"))
}

fn header(cur: &mut Cursor<'_>) -> Result<usize, AdjlistError> {
    if let Some(at) = cur.text.find("Graph<") {
        while cur.pos < at + "Graph<".len() {
            cur.bump();
        }
        cur.skip_ws();
        let n = cur.number().ok_or_else(|| cur.error(AdjlistErrorKind::BadHeader))?;
        cur.skip_ws();
        if cur.bump() != Some('|') {
            return Err(cur.error(AdjlistErrorKind::BadHeader));
        }
        return Ok(n as usize);
    }
    cur.skip_ws();
    let n = cur.number().ok_or_else(|| cur.error(AdjlistErrorKind::BadHeader))?;
    Ok(n as usize)
}

fn set_body(cur: &mut Cursor<'_>) -> Result<Vec<u64>, AdjlistError> {
    let mut set = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => return Err(cur.error(AdjlistErrorKind::Unterminated)),
            Some('}') => {
                cur.bump();
                return Ok(set);
            }
            Some(',') => {
                cur.bump();
            }
            Some(c) if c.is_ascii_digit() => set.push(
                cur.number()
                    .ok_or_else(|| cur.error(AdjlistErrorKind::OutOfRange { vertex: u64::MAX, n: 0 }))?,
            ),
            Some(c) => return Err(cur.error(AdjlistErrorKind::Unexpected(c))),
        }
    }
}

/// Writes the bare layout: the vertex count, then one set per line.
pub fn write_adjlist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for v in 0..g.order() as u32 {
        let items: Vec<String> = g.neighbors(v).iter().map(|w| (w + 1).to_string()).collect();
        out.push('{');
        out.push_str(&items.join(", "));
        out.push_str("}\n");
    }
    out
}
