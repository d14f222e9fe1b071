use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{GraphError, PlaneGraph, VertexId};

/// JSON mirror of the rotation text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationDoc {
    pub n: usize,
    pub m: usize,
    pub rotations: Vec<Vec<VertexId>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(tok: &str, line: usize) -> Result<usize, GraphError> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("expected a nonnegative integer, found {tok:?}")))
}

impl PlaneGraph {
    /// Parses the line-oriented rotation format:
    ///
    /// ```text
    /// # triangle
    /// 3 3
    /// 0: 1 2
    /// 1: 2 0
    /// 2: 0 1
    /// ```
    pub fn from_rotation_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(hline, "header must be `n m`"));
        }
        let n = parse_index(toks[0], hline)?;
        let m = parse_index(toks[1], hline)?;

        let mut rotations: Vec<Option<Vec<VertexId>>> = vec![None; n];
        for (lineno, line) in lines {
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| parse_err(lineno, "expected `<v>: <neighbours>`"))?;
            let v = parse_index(head.trim(), lineno)?;
            if v >= n {
                return Err(parse_err(lineno, format!("vertex {v} out of range 0..{n}")));
            }
            if rotations[v].is_some() {
                return Err(parse_err(lineno, format!("vertex {v} listed twice")));
            }
            let rot = tail
                .split_whitespace()
                .map(|t| parse_index(t, lineno))
                .collect::<Result<Vec<_>, _>>()?;
            rotations[v] = Some(rot);
        }
        let rotations = rotations
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| parse_err(0, format!("no rotation line for vertex {v}"))))
            .collect::<Result<Vec<_>, _>>()?;

        let actual = rotations.iter().map(Vec::len).sum::<usize>();
        let graph = Self::from_rotations(rotations)?;
        if actual % 2 != 0 || graph.edge_count() != m {
            return Err(GraphError::EdgeCountMismatch {
                declared: m,
                actual: graph.edge_count(),
            });
        }
        Ok(graph)
    }

    pub fn to_rotation_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (v, rot) in self.rotations.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for u in rot {
                let _ = write!(out, " {u}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_doc(&self) -> RotationDoc {
        RotationDoc {
            n: self.vertex_count(),
            m: self.edge_count(),
            rotations: self.rotations.clone(),
        }
    }

    pub fn from_doc(doc: RotationDoc) -> Result<Self, GraphError> {
        if doc.rotations.len() != doc.n {
            return Err(parse_err(
                0,
                format!("n = {} but {} rotations given", doc.n, doc.rotations.len()),
            ));
        }
        let graph = Self::from_rotations(doc.rotations)?;
        if graph.edge_count() != doc.m {
            return Err(GraphError::EdgeCountMismatch {
                declared: doc.m,
                actual: graph.edge_count(),
            });
        }
        Ok(graph)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("rotation docs serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let doc: RotationDoc = serde_json::from_str(text).map_err(|e| GraphError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Self::from_doc(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "# tetrahedron\n4 6\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n";

    #[test]
    fn parses_and_round_trips_text() {
        let g = PlaneGraph::from_rotation_text(K4).unwrap();
        assert_eq!(g.face_count(), 4);
        let again = PlaneGraph::from_rotation_text(&g.to_rotation_text()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn round_trips_json() {
        let g = PlaneGraph::from_rotation_text(K4).unwrap();
        let json = g.to_json();
        assert_eq!(
            json,
            r#"{"n":4,"m":6,"rotations":[[1,2,3],[0,3,2],[0,1,3],[0,2,1]]}"#
        );
        assert_eq!(PlaneGraph::from_json(&json).unwrap(), g);
    }

    #[test]
    fn reports_parse_errors_with_line_numbers() {
        let err = PlaneGraph::from_rotation_text("2 1\n0: 1\n1 0\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 3,
                message: "expected `<v>: <neighbours>`".into()
            }
        );
        let err = PlaneGraph::from_rotation_text("2 1\n0: x\n1: 0\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        let err = PlaneGraph::from_rotation_text("2 1\n0: 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { .. }));
    }

    #[test]
    fn rejects_wrong_edge_count() {
        let err = PlaneGraph::from_rotation_text("2 2\n0: 1\n1: 0\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::EdgeCountMismatch {
                declared: 2,
                actual: 1
            }
        );
    }

    #[test]
    fn rejects_asymmetric_text() {
        let err = PlaneGraph::from_rotation_text("3 2\n0: 1 2\n1: 0\n2:\n").unwrap_err();
        assert_eq!(err, GraphError::AsymmetricRotation { u: 0, v: 2 });
    }
}
