//! Text formats: group tables, edge lists, graph6 files, and the data
//! directory holding them.

use std::cell::Cell;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use drg_cayley_core::graph::Graph;
use drg_cayley_core::groups::Group;
use drg_cayley_core::{graph6, Budget, Error, Result};

/// Wall-clock budget. Polls the clock every 256 calls.
#[derive(Debug)]
pub struct Deadline {
    end: Option<Instant>,
    polls: Cell<u32>,
    hit: Cell<bool>,
}

impl Deadline {
    pub fn after(d: Duration) -> Self {
        Deadline { end: Instant::now().checked_add(d), polls: Cell::new(0), hit: Cell::new(false) }
    }

    pub fn seconds(s: f64) -> Self {
        Self::after(Duration::from_secs_f64(s.max(0.0)))
    }
}

impl Budget for Deadline {
    fn exhausted(&self) -> bool {
        if self.hit.get() {
            return true;
        }
        let p = self.polls.get().wrapping_add(1);
        self.polls.set(p);
        if p % 256 == 1 {
            if let Some(end) = self.end {
                if Instant::now() >= end {
                    self.hit.set(true);
                }
            }
        }
        self.hit.get()
    }
}

/// Parses a group table: a line with `n`, `n` rows of `n` 0-based indices,
/// then optionally `n` label lines.
pub fn parse_group_table(text: &str) -> Result<Group> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let bad = |m: String| Error::InvalidParameter(format!("group table: {m}"));
    let n: usize = lines
        .next()
        .ok_or_else(|| bad("empty file".into()))?
        .parse()
        .map_err(|_| bad("first line must be the order".into()))?;
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let row = lines.next().ok_or_else(|| bad(format!("missing row {i}")))?;
        let row: std::result::Result<Vec<usize>, _> = row.split_whitespace().map(str::parse).collect();
        table.push(row.map_err(|_| bad(format!("row {i} is not a list of indices")))?);
    }
    let labels: Vec<String> = lines.map(str::to_string).collect();
    let labels = match labels.len() {
        0 => None,
        l if l == n => Some(labels),
        l => return Err(bad(format!("{l} label lines for {n} elements"))),
    };
    Group::from_table(table, labels)
}

pub fn write_group_table(g: &Group) -> String {
    let mut out = format!("{}\n", g.order());
    for row in g.table_rows() {
        let row: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    for l in g.labels() {
        out.push_str(l);
        out.push('\n');
    }
    out
}

/// Edge list: one `u v` pair per line, 0-based. An optional first line
/// holding a single integer fixes the vertex count.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().map(str::trim).enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: std::result::Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        match nums.as_deref() {
            Ok([k]) if edges.is_empty() && n.is_none() => n = Some(*k),
            Ok([u, v]) => edges.push((*u, *v)),
            _ => return Err(Error::InvalidParameter(format!("edge list line {}: expected \"u v\"", i + 1))),
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads a graph from graph6 (first non-empty line) or edge-list text.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.split_whitespace().count() == 2 || first.chars().all(|c| c.is_ascii_digit()) && !first.is_empty() {
        parse_edge_list(text)
    } else {
        graph6::decode(first)
    }
}

/// Where assets and group tables are looked up.
#[derive(Debug, Clone)]
pub struct DataDir(pub PathBuf);

impl DataDir {
    /// Explicit path, else `DRG_DATA`, else `./data`.
    pub fn resolve(explicit: Option<&Path>) -> Self {
        let p = explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os("DRG_DATA").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("data"));
        DataDir(p)
    }

    /// graph6 text of `<dir>/<name>.g6`, if that file exists.
    pub fn asset(&self, name: &str) -> Option<String> {
        std::fs::read_to_string(self.0.join(format!("{name}.g6"))).ok()
    }

    /// Resolves a path relative to the data directory when it is not found
    /// as given.
    pub fn locate(&self, path: &str) -> PathBuf {
        let p = PathBuf::from(path);
        if p.exists() {
            p
        } else {
            self.0.join(path)
        }
    }
}
