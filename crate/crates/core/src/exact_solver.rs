//! Exact 2-distance coloring by backtracking with forward checking.

use serde::Serialize;

use crate::conflict::{conflict_sets, Coloring};
use crate::plane_graph::PlaneGraph;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Limit on the number of search-tree nodes. Exhausting it yields
/// [`Outcome::Unknown`], never a chromatic value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: DEFAULT_BUDGET,
        }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Colored(Coloring),
    Infeasible,
    Unknown,
}

/// Serializes as the bare number or the string `"unknown"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chi2 {
    Exact(u32),
    Unknown,
}

impl Serialize for Chi2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Chi2::Exact(k) => s.serialize_u32(*k),
            Chi2::Unknown => s.serialize_str("unknown"),
        }
    }
}

struct Search<'a> {
    order: Vec<usize>,
    conflicts: &'a [Vec<usize>],
    k: usize,
    color: Vec<u32>,
    // blocked[v * k + c] counts colored conflicts of v holding color c + 1.
    blocked: Vec<u32>,
    nodes: u64,
    max_nodes: u64,
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: u32, delta: i32) -> bool {
        let mut wiped = false;
        for &u in &self.conflicts[v] {
            let slot = &mut self.blocked[u * self.k + (c as usize - 1)];
            *slot = (*slot as i32 + delta) as u32;
            if delta > 0 && self.color[u] == 0 && !wiped {
                let base = u * self.k;
                wiped = self.blocked[base..base + self.k].iter().all(|&b| b > 0);
            }
        }
        !wiped
    }

    fn run(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        // The first vertex is pinned to color 1; later ones never exceed
        // one more than the largest color used so far.
        let ceiling = if depth == 0 {
            1
        } else {
            let used = self.order[..depth]
                .iter()
                .map(|&u| self.color[u])
                .max()
                .unwrap_or(0);
            (used as usize + 1).min(self.k)
        };
        for c in 1..=ceiling as u32 {
            if self.blocked[v * self.k + (c as usize - 1)] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Step::Aborted;
            }
            self.color[v] = c;
            let ok = self.assign(v, c, 1);
            if ok {
                match self.run(depth + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.assign(v, c, -1);
            self.color[v] = 0;
        }
        Step::Exhausted
    }
}

/// Decides whether `g` admits a 2-distance coloring with `k` colors.
pub fn color_with_k(g: &PlaneGraph, k: u32, budget: SearchBudget) -> Outcome {
    assert!(k >= 1, "palette must be nonempty");
    let n = g.vertex_count();
    let conflicts = conflict_sets(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| conflicts[b].len().cmp(&conflicts[a].len()).then(a.cmp(&b)));

    let mut search = Search {
        order,
        conflicts: &conflicts,
        k: k as usize,
        color: vec![0; n],
        blocked: vec![0; n * k as usize],
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    match search.run(0) {
        Step::Found => Outcome::Colored(Coloring::from_slice(k, &search.color)),
        Step::Exhausted => Outcome::Infeasible,
        Step::Aborted => Outcome::Unknown,
    }
}

/// Smallest `k` for which [`color_with_k`] succeeds, searching upward from
/// `Δ + 1`.
pub fn chi2_exact(g: &PlaneGraph, budget: SearchBudget) -> Chi2 {
    let lower = (g.max_degree() + 1) as u32;
    let upper = g.vertex_count() as u32;
    for k in lower..=upper.max(lower) {
        match color_with_k(g, k, budget) {
            Outcome::Colored(_) => return Chi2::Exact(k),
            Outcome::Infeasible => continue,
            Outcome::Unknown => return Chi2::Unknown,
        }
    }
    Chi2::Unknown
}
