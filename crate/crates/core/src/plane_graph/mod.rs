//! Connected plane graphs stored as rotation systems.
//!
//! A [`PlaneGraph`] keeps, for every vertex, the clockwise cyclic order of its
//! neighbours. Faces are traced once at construction: the successor of the
//! dart `u -> v` is `v -> w`, where `w` immediately follows `u` in the rotation
//! at `v`. A face is an orbit of that permutation. Construction rejects any
//! rotation system that is asymmetric, non-simple, disconnected, or whose
//! traced faces violate Euler's formula for the sphere.

mod io;

pub use io::RotationDoc;

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;
/// Dense face index in `0..f`, in tracing order.
pub type FaceId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {u} lists {v} but {v} does not list {u}")]
    AsymmetricRotation { u: VertexId, v: VertexId },
    #[error("vertex {0} lists itself")]
    SelfLoop(VertexId),
    #[error("vertex {v} lists {u} more than once")]
    DuplicateNeighbour { v: VertexId, u: VertexId },
    #[error("header declares {declared} edges but the rotations contain {actual}")]
    EdgeCountMismatch { declared: usize, actual: usize },
    #[error("not a sphere embedding: V - E + F = {vertices} - {edges} + {faces} != 2")]
    NotPlanarEmbedding {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// A face as a closed walk of darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    boundary: Vec<(VertexId, VertexId)>,
}

impl Face {
    /// Number of darts on the boundary walk, i.e. the face length.
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    /// Only the single face of `K1` has an empty boundary.
    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn boundary(&self) -> &[(VertexId, VertexId)] {
        &self.boundary
    }

    /// Vertices in walk order; a vertex repeats if the walk revisits it.
    pub fn walk(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.boundary.iter().map(|&(u, _)| u)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.walk().any(|u| u == v)
    }
}

/// Per-vertex quantities read by the configuration predicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexMetrics {
    pub degree: usize,
    /// Number of neighbours of degree 3, 4 and 5.
    pub n3: usize,
    pub n4: usize,
    pub n5: usize,
    /// Number of distinct incident faces of length 3, 4 and at least 5.
    pub m3: usize,
    pub m4: usize,
    pub m5_plus: usize,
    /// Vertices at distance 1 or 2, ascending.
    pub second_neighbourhood: Vec<VertexId>,
    pub d2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<VertexId>>,
    dart_start: Vec<usize>,
    dart_face: Vec<FaceId>,
    faces: Vec<Face>,
    edge_count: usize,
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise rotations and certifies it.
    pub fn from_rotations(rotations: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::UnknownVertex(u));
                }
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if rot[..i].contains(&u) {
                    return Err(GraphError::DuplicateNeighbour { v, u });
                }
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if !rotations[u].contains(&v) {
                    return Err(GraphError::AsymmetricRotation { u: v, v: u });
                }
            }
        }

        let mut dart_start = Vec::with_capacity(n + 1);
        let mut total = 0;
        for rot in &rotations {
            dart_start.push(total);
            total += rot.len();
        }
        dart_start.push(total);
        let edge_count = total / 2;

        let mut graph = PlaneGraph {
            rotations,
            dart_start,
            dart_face: vec![usize::MAX; total],
            faces: Vec::new(),
            edge_count,
        };
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        graph.trace_faces();

        let (v, e, f) = (n, edge_count, graph.faces.len());
        if v + f != e + 2 {
            return Err(GraphError::NotPlanarEmbedding {
                vertices: v,
                edges: e,
                faces: f,
            });
        }
        debug_assert_eq!(graph.faces.iter().map(Face::len).sum::<usize>(), 2 * e);
        Ok(graph)
    }

    fn is_connected(&self) -> bool {
        let n = self.rotations.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.rotations[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    fn trace_faces(&mut self) {
        if self.edge_count == 0 {
            // K1: one face with an empty boundary.
            self.faces.push(Face { boundary: Vec::new() });
            return;
        }
        for v in 0..self.rotations.len() {
            for i in 0..self.rotations[v].len() {
                if self.dart_face[self.dart_start[v] + i] != usize::MAX {
                    continue;
                }
                let id = self.faces.len();
                let mut boundary = Vec::new();
                let (mut a, mut b) = (v, self.rotations[v][i]);
                loop {
                    let d = self.dart_index(a, b).expect("dart of a traced edge");
                    if self.dart_face[d] != usize::MAX {
                        break;
                    }
                    self.dart_face[d] = id;
                    boundary.push((a, b));
                    let w = self.next_clockwise(b, a);
                    a = b;
                    b = w;
                }
                self.faces.push(Face { boundary });
            }
        }
    }

    fn dart_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.slot(u, v).map(|i| self.dart_start[u] + i)
    }

    /// Position of `u` in the rotation at `v`.
    pub fn slot(&self, v: VertexId, u: VertexId) -> Option<usize> {
        self.rotations[v].iter().position(|&x| x == u)
    }

    /// The neighbour that follows `u` clockwise around `v`.
    pub fn next_clockwise(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.rotations[v];
        let i = self.slot(v, u).expect("u is a neighbour of v");
        rot[(i + 1) % rot.len()]
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rotations
    }

    /// Clockwise neighbour order of `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rotations[u].contains(&v)
    }

    /// Edges as `(u, v)` with `u < v`, in vertex then rotation order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.rotations
            .iter()
            .enumerate()
            .flat_map(|(u, rot)| rot.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    /// Face to the left of the dart `u -> v` under the tracing convention.
    pub fn dart_face(&self, u: VertexId, v: VertexId) -> Option<FaceId> {
        self.dart_index(u, v).map(|d| self.dart_face[d])
    }

    /// Face in the angle at `v` between rotation entries `i` and `i + 1`.
    pub fn corner_face(&self, v: VertexId, i: usize) -> FaceId {
        let d = self.rotations[v].len();
        self.dart_face[self.dart_start[v] + (i + 1) % d]
    }

    /// Distinct faces incident to `v`, ascending.
    pub fn faces_at(&self, v: VertexId) -> Vec<FaceId> {
        let d = self.degree(v);
        let mut out: Vec<FaceId> = (0..d).map(|i| self.corner_face(v, i)).collect();
        if d == 0 {
            out.push(0);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// True if both sides of the edge `uv` are distinct faces of length 3.
    pub fn edge_in_two_triangles(&self, u: VertexId, v: VertexId) -> bool {
        match (self.dart_face(u, v), self.dart_face(v, u)) {
            (Some(a), Some(b)) => a != b && self.faces[a].len() == 3 && self.faces[b].len() == 3,
            _ => false,
        }
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Breadth-first distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[v] = Some(0);
        queue.push_back(v);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or(0);
            for &y in &self.rotations[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        // Connected by construction.
        Ok(self.distances_from(u)[v].expect("plane graphs are connected"))
    }

    /// N2(v): vertices at distance 1 or 2 from `v`, ascending.
    pub fn second_neighbourhood(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = Vec::with_capacity(self.degree(v) * 5);
        for &u in &self.rotations[v] {
            out.push(u);
            out.extend(self.rotations[u].iter().copied().filter(|&w| w != v));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn d2(&self, v: VertexId) -> usize {
        self.second_neighbourhood(v).len()
    }

    pub fn metrics(&self, v: VertexId) -> Result<VertexMetrics, GraphError> {
        self.check_vertex(v)?;
        let count_nb = |k| self.rotations[v].iter().filter(|&&u| self.degree(u) == k).count();
        let faces = self.faces_at(v);
        let count_faces = |pred: &dyn Fn(usize) -> bool| {
            faces.iter().filter(|&&f| pred(self.faces[f].len())).count()
        };
        let second_neighbourhood = self.second_neighbourhood(v);
        Ok(VertexMetrics {
            degree: self.degree(v),
            n3: count_nb(3),
            n4: count_nb(4),
            n5: count_nb(5),
            m3: count_faces(&|l| l == 3),
            m4: count_faces(&|l| l == 4),
            m5_plus: count_faces(&|l| l >= 5),
            d2: second_neighbourhood.len(),
            second_neighbourhood,
        })
    }

    /// Length of a shortest cycle, or `None` for a tree. Informational only.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut queue = VecDeque::from([s]);
            dist[s] = 0;
            while let Some(x) = queue.pop_front() {
                for &y in &self.rotations[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Restricts rotations to the vertices with `keep[v]`, relabelled in
    /// ascending order. Also returns the old-to-new map.
    pub(crate) fn induced_rotations(
        rotations: &[Vec<VertexId>],
        keep: &[bool],
    ) -> (Vec<Vec<VertexId>>, Vec<Option<VertexId>>) {
        let mut map = vec![None; rotations.len()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                map[v] = Some(next);
                next += 1;
            }
        }
        let rots = rotations
            .iter()
            .enumerate()
            .filter(|(v, _)| keep[*v])
            .map(|(_, rot)| rot.iter().filter_map(|&u| map[u]).collect())
            .collect();
        (rots, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        PlaneGraph::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn triangle_has_two_triangular_faces() {
        let g = triangle();
        assert_eq!(g.face_count(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 3));
        assert_eq!(g.distance(0, 2).unwrap(), 1);
    }

    #[test]
    fn single_vertex_has_one_empty_face() {
        let g = PlaneGraph::from_rotations(vec![vec![]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.faces_at(0), vec![0]);
        assert_eq!(g.d2(0), 0);
    }

    #[test]
    fn path_is_one_face_walk() {
        let g = PlaneGraph::from_rotations(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face(0).len(), 4);
        let m = g.metrics(1).unwrap();
        assert_eq!((m.degree, m.d2), (2, 2));
        // one face incident twice counts once
        assert_eq!(m.m4, 1);
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn rejects_bad_rotations() {
        assert_eq!(
            PlaneGraph::from_rotations(vec![vec![1], vec![]]),
            Err(GraphError::AsymmetricRotation { u: 0, v: 1 })
        );
        assert_eq!(
            PlaneGraph::from_rotations(vec![vec![0]]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            PlaneGraph::from_rotations(vec![vec![1, 1], vec![0]]),
            Err(GraphError::DuplicateNeighbour { v: 0, u: 1 })
        );
        assert_eq!(
            PlaneGraph::from_rotations(vec![vec![1], vec![0], vec![3], vec![2]]),
            Err(GraphError::Disconnected)
        );
        assert_eq!(PlaneGraph::from_rotations(vec![]), Err(GraphError::Empty));
    }

    #[test]
    fn rejects_toroidal_rotation_of_k4() {
        // Rotation at vertex 0 reversed relative to a sphere embedding.
        let err = PlaneGraph::from_rotations(vec![
            vec![3, 2, 1],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap_err();
        assert!(matches!(err, GraphError::NotPlanarEmbedding { .. }), "{err:?}");
    }

    #[test]
    fn unknown_vertex_queries_fail() {
        let g = triangle();
        assert_eq!(g.metrics(7), Err(GraphError::UnknownVertex(7)));
        assert_eq!(g.distance(0, 9), Err(GraphError::UnknownVertex(9)));
    }
}
