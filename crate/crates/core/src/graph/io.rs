//! Plain-text edge lists: one `u v [w]` edge per line.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write;

use super::Graph;
use crate::error::{Error, ParseErrorKind, Result};

/// Parses an edge list.
///
/// Lines hold `u v` or `u v w`, whitespace separated. Blank lines and lines
/// starting with `#` are skipped; CRLF endings are accepted. Input ids may be
/// any non-negative integers and are remapped to `0..n` in ascending order, the
/// original ids being kept as node labels. A missing weight means `1.0`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut raw = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let fail = |kind| Error::Parse {
            line: line_no,
            kind,
        };
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(fail(ParseErrorKind::Malformed));
        }
        let u: u64 = fields[0]
            .parse()
            .map_err(|_| fail(ParseErrorKind::Malformed))?;
        let v: u64 = fields[1]
            .parse()
            .map_err(|_| fail(ParseErrorKind::Malformed))?;
        let w = match fields.get(2) {
            Some(s) => {
                let w: f64 = s.parse().map_err(|_| fail(ParseErrorKind::Malformed))?;
                if !(w.is_finite() && w > 0.0) {
                    return Err(fail(ParseErrorKind::InvalidWeight));
                }
                w
            }
            None => 1.0,
        };
        if u == v {
            return Err(fail(ParseErrorKind::SelfLoop));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(ParseErrorKind::DuplicateEdge));
        }
        raw.push((u, v, w));
    }

    let labels: Vec<u64> = raw
        .iter()
        .flat_map(|&(u, v, _)| [u, v])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index = |label: u64| labels.binary_search(&label).expect("label collected above");
    let edges: Vec<_> = raw
        .iter()
        .map(|&(u, v, w)| (index(u), index(v), w))
        .collect();
    Graph::with_labels(labels, &edges)
}

/// Writes `g` as an edge list using its contiguous ids, one `u v w` line per
/// edge with `u < v`, in lexicographic order.
///
/// Isolated nodes have no line, so they do not survive a round trip.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v, w) in g.edges() {
        writeln!(out, "{u} {v} {w}").expect("writing to a String");
    }
    out
}
