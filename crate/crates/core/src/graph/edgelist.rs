//! Plain-text edge lists: first line is the order, then one `u v` per line.
//! Lines starting with `#` and blank lines are skipped.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::MalformedEdgeList {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::MalformedEdgeList {
        line,
        reason: format!("expected a vertex count, found {header:?}"),
    })?;

    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut fields = l.split_whitespace().map(str::parse::<usize>);
        match (fields.next(), fields.next(), fields.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => {
                return Err(Error::MalformedEdgeList {
                    line,
                    reason: format!("expected two vertex indices, found {l:?}"),
                })
            }
        }
    }
    Graph::from_edge_list(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let g = parse_edge_list("# a path\n3\n0 1\n\n# tail\n1 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn bad_lines() {
        assert!(matches!(
            parse_edge_list("3\n0 1 2\n"),
            Err(Error::MalformedEdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("x\n"),
            Err(Error::MalformedEdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(Error::MalformedEdgeList { .. })
        ));
        assert_eq!(parse_edge_list("2\n0 0\n").unwrap_err(), Error::SelfLoop(0));
    }
}
