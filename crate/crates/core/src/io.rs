//! Plain-text formats.
//!
//! Graph file: `p mgraph <n> <m>`, then `m` lines `e <u> <v>` with 0-based
//! vertices; the `i`-th edge line is edge `i`.
//!
//! Subgraph file: `s <k>`, then one line with the `k` member edge ids in
//! ascending order.
//!
//! Report: one `k <i> <m(H,i)>` line per degree, then
//! `anorm <max |ã_i|> scale <d+1>`.
//!
//! Empty lines and lines starting with `c` are ignored when parsing.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::irregularity::a_scaled;
use crate::multigraph::{EdgeId, Multigraph, SpanningSubgraph, VertexId};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

/// Non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

fn num(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = match header[..] {
        ["p", "mgraph", n, m] => (num(hl, n, "vertex count")?, num(hl, m, "edge count")?),
        _ => return Err(parse_err(hl, "expected `p mgraph <n> <m>`")),
    };
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    for (ln, toks) in lines {
        let (u, v) = match toks[..] {
            ["e", u, v] => (num(ln, u, "vertex")?, num(ln, v, "vertex")?),
            _ => return Err(parse_err(ln, "expected `e <u> <v>`")),
        };
        if u == v {
            return Err(parse_err(ln, format!("loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::InconsistentHeader { declared: m, found: edges.len() });
    }
    Multigraph::build(n, &edges)
}

pub fn serialize_graph(g: &Multigraph) -> Result<String> {
    if g.num_edges() != g.edge_bound() || g.num_vertices() != g.vertex_bound() {
        return Err(Error::PreconditionViolated("graph has removed edges or vertices".into()));
    }
    let mut out = String::with_capacity(16 + 12 * g.num_edges());
    let _ = writeln!(out, "p mgraph {} {}", g.num_vertices(), g.num_edges());
    for e in 0..g.edge_bound() {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(out, "e {u} {v}");
    }
    Ok(out)
}

/// Parses a subgraph file against its host graph.
pub fn parse_subgraph(text: &str, g: &Multigraph) -> Result<SpanningSubgraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let k = match header[..] {
        ["s", k] => num(hl, k, "member count")?,
        _ => return Err(parse_err(hl, "expected `s <k>`")),
    };
    let mut members: Vec<EdgeId> = Vec::with_capacity(k);
    for (ln, toks) in lines {
        for t in toks {
            let e = num(ln, t, "edge id")?;
            if e >= g.edge_bound() || !g.is_live(e) {
                return Err(parse_err(ln, format!("edge {e} is not in the graph")));
            }
            if members.last().is_some_and(|&p| p >= e) {
                return Err(parse_err(ln, "edge ids must be strictly ascending"));
            }
            members.push(e);
        }
    }
    if members.len() != k {
        return Err(Error::InconsistentHeader { declared: k, found: members.len() });
    }
    SpanningSubgraph::from_edges(g, &members)
}

pub fn serialize_subgraph(g: &Multigraph, h: &SpanningSubgraph) -> String {
    let members = h.members(g);
    let ids: Vec<String> = members.iter().map(|e| e.to_string()).collect();
    format!("s {}\n{}\n", members.len(), ids.join(" "))
}

pub fn report(g: &Multigraph, h: &SpanningSubgraph) -> Result<String> {
    let a = a_scaled::<i64>(g, h)?;
    let mut out = String::new();
    for (i, m) in a.counts().iter().enumerate() {
        let _ = writeln!(out, "k {i} {m}");
    }
    let _ = writeln!(out, "anorm {} scale {}", a.max_abs(), a.d + 1);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k23_text() {
        let g = Multigraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let text = serialize_graph(&g).unwrap();
        assert_eq!(text, "p mgraph 2 3\ne 0 1\ne 0 1\ne 0 1\n");
        assert_eq!(serialize_graph(&parse_graph(&text).unwrap()).unwrap(), text);
    }

    #[test]
    fn graph_errors() {
        assert_eq!(
            parse_graph("p mgraph 2 1\ne 0 0\n").err(),
            Some(Error::Parse { line: 2, reason: "loop at vertex 0".into() })
        );
        assert_eq!(
            parse_graph("p mgraph 2 2\ne 0 1\n").err(),
            Some(Error::InconsistentHeader { declared: 2, found: 1 })
        );
        assert!(matches!(parse_graph("p mgraph 2 1\ne 0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("q 2 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn subgraph_round_trip() {
        let g = Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let h = SpanningSubgraph::from_edges(&g, &[0, 3, 5]).unwrap();
        let text = serialize_subgraph(&g, &h);
        assert_eq!(text, "s 3\n0 3 5\n");
        assert_eq!(parse_subgraph(&text, &g).unwrap().members(&g), vec![0, 3, 5]);
        assert_eq!(serialize_subgraph(&g, &SpanningSubgraph::empty(&g)), "s 0\n\n");
        assert!(parse_subgraph("s 0\n\n", &g).unwrap().members(&g).is_empty());
        assert!(matches!(parse_subgraph("s 2\n3 1\n", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse_subgraph("s 1\n9\n", &g), Err(Error::Parse { .. })));
    }

    #[test]
    fn report_text() {
        let g = Multigraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let h = SpanningSubgraph::from_edges(&g, &[0, 3, 5]).unwrap();
        assert_eq!(report(&g, &h).unwrap(), "k 0 0\nk 1 2\nk 2 2\nk 3 0\nanorm 4 scale 4\n");
    }
}
