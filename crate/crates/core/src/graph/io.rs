use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format:
///
/// ```text
/// # comment
/// n 3
/// e 0 1
/// e 1 2
/// ```
///
/// The `n` header must precede every `e` line. Repeated edges are merged.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut adj: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let parse_err = |message: &str| Error::Parse {
            line,
            message: message.to_string(),
        };
        let mut fields = trimmed.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let numbers: Vec<usize> = fields
            .map(|f| f.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err("expected non-negative integers"))?;
        match (tag, numbers.as_slice()) {
            ("n", &[count]) => {
                if n.is_some() {
                    return Err(parse_err("duplicate `n` header"));
                }
                n = Some(count);
                adj = vec![Vec::new(); count];
            }
            ("n", _) => return Err(parse_err("expected `n <count>`")),
            ("e", &[u, v]) => {
                let count = n.ok_or_else(|| parse_err("edge before `n` header"))?;
                for x in [u, v] {
                    if x >= count {
                        return Err(Error::VertexOutOfRange {
                            vertex: x,
                            n: count,
                        });
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop { line, vertex: u });
                }
                adj[u].push(v);
                adj[v].push(u);
            }
            ("e", _) => return Err(parse_err("expected `e <u> <v>`")),
            _ => return Err(parse_err(&format!("unknown record `{tag}`"))),
        }
    }
    match n {
        Some(_) => Ok(Graph::from_raw_adjacency(adj)),
        None => Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing `n <count>` header".to_string(),
        }),
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Writes the canonical edge-list form, edges in lexicographic order.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n())?;
        for (u, v) in self.edges() {
            writeln!(f, "e {u} {v}")?;
        }
        Ok(())
    }
}
