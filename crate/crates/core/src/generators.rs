//! Named corpus graphs and seeded random plane graphs with maximum degree five.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::plane_graph::{PlaneGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("random generation failed for n = {n}, seed = {seed}")]
    GenerationFailed { n: usize, seed: u64 },
}

pub const NAMES: [&str; 15] = [
    "k1",
    "k2",
    "k4",
    "c5",
    "c6",
    "cube",
    "dodecahedron",
    "icosahedron",
    "pentagonal_prism",
    "star5",
    "fig1a",
    "fig1b",
    "fig2a",
    "fig2b",
    "fig2c",
];

/// Shipped rotation text for a named graph.
pub fn named_text(name: &str) -> Result<&'static str, GenError> {
    Ok(match name {
        "k1" => include_str!("../corpus/k1.rot"),
        "k2" => include_str!("../corpus/k2.rot"),
        "k4" => include_str!("../corpus/k4.rot"),
        "c5" => include_str!("../corpus/c5.rot"),
        "c6" => include_str!("../corpus/c6.rot"),
        "cube" => include_str!("../corpus/cube.rot"),
        "dodecahedron" => include_str!("../corpus/dodecahedron.rot"),
        "icosahedron" => include_str!("../corpus/icosahedron.rot"),
        "pentagonal_prism" => include_str!("../corpus/pentagonal_prism.rot"),
        "star5" => include_str!("../corpus/star5.rot"),
        "fig1a" => include_str!("../corpus/fig1a.rot"),
        "fig1b" => include_str!("../corpus/fig1b.rot"),
        "fig2a" => include_str!("../corpus/fig2a.rot"),
        "fig2b" => include_str!("../corpus/fig2b.rot"),
        "fig2c" => include_str!("../corpus/fig2c.rot"),
        _ => return Err(GenError::UnknownName(name.to_string())),
    })
}

/// The canonical embedding of a named graph. In the `fig*` graphs the
/// classified vertex is 0.
pub fn named(name: &str) -> Result<PlaneGraph, GenError> {
    let text = named_text(name)?;
    Ok(PlaneGraph::from_rotation_text(text).expect("shipped corpus files are valid"))
}

const ATTEMPTS: u64 = 16;

/// A connected plane graph with maximum degree five and between `n / 2` and
/// `n` vertices, determined by `(n, seed)`.
///
/// Grows a triangulation by inserting each new vertex into a random face,
/// then repeatedly removes, at the lowest-numbered vertex of degree six or
/// more, the edge to its highest-degree neighbour, and keeps the largest
/// component.
pub fn random_plane(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    assert!(n >= 3, "random_plane needs n >= 3");
    for attempt in 0..ATTEMPTS {
        let s = seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let g = attempt_once(n, s);
        if 2 * g.vertex_count() >= n {
            return Ok(g);
        }
    }
    Err(GenError::GenerationFailed { n, seed })
}

fn attempt_once(n: usize, seed: u64) -> PlaneGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rots: Vec<Vec<VertexId>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // Triangular faces as boundary walks a -> b -> c.
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for w in 3..n {
        let k = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[k];
        for (x, y) in [(a, b), (b, c), (c, a)] {
            let i = rots[y].iter().position(|&z| z == x).expect("face edge");
            rots[y].insert(i + 1, w);
        }
        rots.push(vec![a, c, b]);
        faces[k] = [a, b, w];
        faces.push([b, c, w]);
        faces.push([c, a, w]);
    }

    while let Some(v) = (0..n).find(|&v| rots[v].len() > 5) {
        let u = *rots[v]
            .iter()
            .max_by(|&&x, &&y| rots[x].len().cmp(&rots[y].len()).then(y.cmp(&x)))
            .expect("nonempty rotation");
        rots[v].retain(|&x| x != u);
        rots[u].retain(|&x| x != v);
    }

    let comp = largest_component(&rots);
    let keep: Vec<bool> = (0..n).map(|v| comp[v]).collect();
    let (rots, _) = PlaneGraph::induced_rotations(&rots, &keep);
    PlaneGraph::from_rotations(rots).expect("restriction of a plane embedding")
}

fn largest_component(rots: &[Vec<VertexId>]) -> Vec<bool> {
    let n = rots.len();
    let mut label = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut stack = vec![s];
        label[s] = id;
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &u in &rots[v] {
                if label[u] == usize::MAX {
                    label[u] = id;
                    stack.push(u);
                }
            }
        }
        sizes.push(size);
    }
    // First component of maximum size, i.e. the one holding the lowest vertex.
    let best = (0..sizes.len())
        .max_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(b.cmp(&a)))
        .expect("at least one vertex");
    label.iter().map(|&l| l == best).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_sizes() {
        let ico = named("icosahedron").unwrap();
        assert_eq!(
            (ico.vertex_count(), ico.edge_count(), ico.face_count()),
            (12, 30, 20)
        );
        let c5 = named("c5").unwrap();
        assert_eq!(c5.vertex_count(), 5);
        assert_eq!(c5.face_count(), 2);
        assert!(c5.faces().iter().all(|f| f.len() == 5));
        assert_eq!(named("nope"), Err(GenError::UnknownName("nope".into())));
    }

    #[test]
    fn every_name_loads() {
        for name in NAMES {
            let g = named(name).unwrap();
            assert!(g.max_degree() <= 5, "{name}");
        }
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        let a = random_plane(50, 1).unwrap();
        let b = random_plane(50, 1).unwrap();
        assert_eq!(a.to_rotation_text(), b.to_rotation_text());
        assert!(a.max_degree() <= 5);
        assert!(a.vertex_count() >= 25 && a.vertex_count() <= 50);
        assert_ne!(a, random_plane(50, 2).unwrap());
    }

    #[test]
    fn smallest_random_graph() {
        let g = random_plane(3, 0).unwrap();
        assert_eq!(g.vertex_count(), 3);
    }
}
