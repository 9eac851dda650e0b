//! Graph file formats.
//!
//! Edge-list text: first meaningful line `n m`, then `m` lines `u v` with
//! 0-based indices. Blank lines and `#` comments are ignored.
//!
//! JSON: `{"n": 3, "edges": [[0,1],[1,2]], "orientation": [[0,1],[2,1]]}`,
//! where `orientation` is optional and lists one `[tail, head]` per edge.

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Orientation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<[usize; 2]>>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, orientation: Option<&Orientation>) -> Self {
        Self {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            orientation: orientation.map(|o| o.arcs().iter().map(|&(t, h)| [t, h]).collect()),
        }
    }

    pub fn to_graph(&self) -> Result<(Graph, Option<Orientation>), GraphError> {
        let g = Graph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])))?;
        if g.m() != self.edges.len() {
            return Err(GraphError::InvalidArgument("edge list contains duplicates".into()));
        }
        let o = match &self.orientation {
            Some(arcs) => {
                let arcs: Vec<(usize, usize)> = arcs.iter().map(|a| (a[0], a[1])).collect();
                Some(Orientation::from_arcs(&g, &arcs)?)
            }
            None => None,
        };
        Ok((g, o))
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(GraphError::Parse { line, message: format!("expected two integers, found {l:?}") });
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| GraphError::Parse { line, message: format!("not a non-negative integer: {s:?}") })
        };
        Ok((num(parts[0])?, num(parts[1])?))
    };
    let (line, header) =
        lines.next().ok_or(GraphError::Parse { line: 1, message: "missing header line \"n m\"".into() })?;
    let (n, m) = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, l) in lines {
        last_line = line;
        let (u, v) = parse_pair(line, l)?;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::Parse { line, message: format!("vertex {w} out of range 0..{n}") });
            }
        }
        if u == v {
            return Err(GraphError::Parse { line, message: format!("loop at vertex {u}") });
        }
        if edges.contains(&(u.min(v), u.max(v))) {
            return Err(GraphError::Parse { line, message: format!("duplicate edge {u} {v}") });
        }
        edges.push((u.min(v), u.max(v)));
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: last_line,
            message: format!("header declares {m} edges but {} were listed", edges.len()),
        });
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph_json(text: &str) -> Result<(Graph, Option<Orientation>), GraphError> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| GraphError::Parse { line: e.line(), message: e.to_string() })?;
    doc.to_graph()
}

/// Detects the format: JSON when the first non-blank character is `{`.
pub fn parse_graph(text: &str) -> Result<(Graph, Option<Orientation>), GraphError> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text).map(|g| (g, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2 # rim\n2 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = parse_edge_list("2 1\n0 x\n").unwrap_err();
        assert_eq!(err, GraphError::Parse { line: 2, message: "not a non-negative integer: \"x\"".into() });
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("2 1\n0 5\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list(""), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n1 0\n"), Err(GraphError::Parse { line: 3, .. })));
    }

    #[test]
    fn json_round_trip_with_orientation() {
        let text = r#"{"edges": [[1,0],[1,2]], "n": 3, "orientation": [[2,1],[1,0]]}"#;
        let (g, o) = parse_graph(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let o = o.unwrap();
        assert_eq!(o.arcs(), &[(1, 0), (2, 1)]);
        let doc = GraphDocument::from_graph(&g, Some(&o));
        let back = serde_json::to_string(&doc).unwrap();
        assert_eq!(parse_graph(&back).unwrap(), (g, Some(o)));
    }

    #[test]
    fn json_orientation_must_cover_edges() {
        let text = r#"{"n": 3, "edges": [[0,1],[1,2]], "orientation": [[0,1]]}"#;
        assert!(parse_graph(text).is_err());
    }
}
