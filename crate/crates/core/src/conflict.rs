//! 2-distance conflict sets and coloring validation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::plane_graph::{PlaneGraph, VertexId};

pub const DEFAULT_PALETTE: u32 = 16;

/// A partial vertex coloring with colors drawn from `1..=palette`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub palette: u32,
    pub colors: BTreeMap<VertexId, u32>,
}

impl Coloring {
    pub fn empty(palette: u32) -> Self {
        Coloring {
            palette,
            colors: BTreeMap::new(),
        }
    }

    /// Total coloring from a dense slice, vertex `i` getting `colors[i]`.
    pub fn from_slice(palette: u32, colors: &[u32]) -> Self {
        Coloring {
            palette,
            colors: colors.iter().copied().enumerate().collect(),
        }
    }

    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.colors.get(&v).copied()
    }

    pub fn set(&mut self, v: VertexId, c: u32) {
        self.colors.insert(v, c);
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.values().copied().max().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("colorings serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub color: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictReport {
    pub valid: bool,
    /// Every same-colored pair `u < v` at distance at most two.
    pub violations: Vec<Violation>,
    pub uncolored: Vec<VertexId>,
    /// Vertices whose color lies outside `1..=palette`.
    pub out_of_palette: Vec<VertexId>,
}

/// `result[v]` is the set of vertices at distance 1 or 2 from `v`, ascending.
pub fn conflict_sets(g: &PlaneGraph) -> Vec<Vec<VertexId>> {
    (0..g.vertex_count())
        .map(|v| g.second_neighbourhood(v))
        .collect()
}

pub fn validate(g: &PlaneGraph, c: &Coloring) -> ConflictReport {
    let n = g.vertex_count();
    let mut violations = Vec::new();
    let mut uncolored = Vec::new();
    let mut out_of_palette = Vec::new();
    for v in 0..n {
        let Some(cv) = c.get(v) else {
            uncolored.push(v);
            continue;
        };
        if cv == 0 || cv > c.palette {
            out_of_palette.push(v);
        }
        for u in g.second_neighbourhood(v) {
            if u > v && c.get(u) == Some(cv) {
                violations.push(Violation { u: v, v: u, color: cv });
            }
        }
    }
    // Keys naming vertices outside the graph are also out of palette range.
    out_of_palette.extend(c.colors.keys().copied().filter(|&v| v >= n));
    ConflictReport {
        valid: violations.is_empty() && uncolored.is_empty() && out_of_palette.is_empty(),
        violations,
        uncolored,
        out_of_palette,
    }
}
