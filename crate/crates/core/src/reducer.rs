//! Applying reductions and the recursive 16-coloring.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conflict::{Coloring, DEFAULT_PALETTE};
use crate::configurations::{self, check_degree, ConfigMatch, DetectError, MAX_DEGREE};
use crate::exact_solver::{color_with_k, Outcome, SearchBudget};
use crate::plane_graph::{GraphError, PlaneGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("match does not name a known rule with a complete binding")]
    BadMatch,
    #[error("chord {0}-{1} cannot be drawn without crossing")]
    EmbeddingBroken(VertexId, VertexId),
    #[error("reduced graph is not a valid plane graph: {0}")]
    InvalidResult(GraphError),
    #[error("vertex {vertex} would have degree {degree}")]
    DegreeOverflow { vertex: VertexId, degree: usize },
    #[error("|V|+|E| does not decrease ({before} -> {after})")]
    NoDescent { before: usize, after: usize },
    #[error("reduced graph is not proper with respect to the input")]
    NotProper,
    #[error("no color left for vertex {vertex}: {used} colors used at distance two")]
    NoAvailableColor { vertex: VertexId, used: usize },
    #[error(transparent)]
    Detect(#[from] DetectError),
    #[error("no configuration found on a {vertices}-vertex graph and the exact fallback failed")]
    AnomalyNoConfiguration { vertices: usize, graph: String },
}

/// Record of one reduction `G -> G'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub step: usize,
    pub rule: String,
    /// Deleted vertex, as an id of `G`.
    pub deleted: VertexId,
    /// Chords actually inserted, as ids of `G`.
    pub added_edges: Vec<(VertexId, VertexId)>,
    /// `renumbering[u]` is the id of `u` in `G'`; `None` only for the deleted vertex.
    pub renumbering: Vec<Option<VertexId>>,
    pub v_plus_e_before: usize,
    pub v_plus_e_after: usize,
    pub observed_d2: usize,
    pub claimed_bound: usize,
    /// Distinct colors seen in N2 of the deleted vertex when it was recolored.
    pub colors_seen: Option<usize>,
}

#[derive(Serialize)]
struct TraceLine<'a> {
    step: usize,
    rule: &'a str,
    deleted: VertexId,
    added_edges: &'a [(VertexId, VertexId)],
    v_plus_e_before: usize,
    v_plus_e_after: usize,
    observed_d2: usize,
}

impl ReductionTrace {
    /// One JSON log line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&TraceLine {
            step: self.step,
            rule: &self.rule,
            deleted: self.deleted,
            added_edges: &self.added_edges,
            v_plus_e_before: self.v_plus_e_before,
            v_plus_e_after: self.v_plus_e_after,
            observed_d2: self.observed_d2,
        })
        .expect("trace lines serialize")
    }
}

/// Applies `m` to `g`: deletes the bound vertex, inserts the chords inside the
/// face left behind, renumbers, and checks the result.
pub fn apply(g: &PlaneGraph, m: &ConfigMatch) -> Result<(PlaneGraph, ReductionTrace), ReduceError> {
    let rule = m.rule().ok_or(ReduceError::BadMatch)?;
    let deleted = m.deleted().ok_or(ReduceError::BadMatch)?;
    let chords = m.chords().ok_or(ReduceError::BadMatch)?;
    if deleted >= g.vertex_count() {
        return Err(ReduceError::BadMatch);
    }
    let (h, mut t) = reduce(g, deleted, &chords)?;
    t.rule = rule.id.to_string();
    t.claimed_bound = rule.claimed_d2_bound;
    t.observed_d2 = g.d2(deleted);
    Ok((h, t))
}

/// Angle at a vertex, named by the rotation entry it follows; `None` for an
/// isolated vertex.
type Angle = (VertexId, Option<VertexId>);

fn reduce(
    g: &PlaneGraph,
    deleted: VertexId,
    chords: &[(VertexId, VertexId)],
) -> Result<(PlaneGraph, ReductionTrace), ReduceError> {
    let n = g.vertex_count();
    let mut rots: Vec<Vec<VertexId>> = g.rotations().to_vec();
    let mut region: BTreeSet<Angle> = BTreeSet::new();
    for &u in g.rotation(deleted) {
        let p = g.slot(u, deleted).expect("symmetric rotation");
        let d = rots[u].len();
        let prev = rots[u][(p + d - 1) % d];
        rots[u].remove(p);
        region.insert((u, (!rots[u].is_empty()).then_some(prev)));
    }
    rots[deleted].clear();

    let mut added = Vec::new();
    for &(a, b) in chords {
        if a == b || a == deleted || b == deleted {
            return Err(ReduceError::EmbeddingBroken(a, b));
        }
        if rots[a].contains(&b) {
            continue;
        }
        insert_chord(&mut rots, &mut region, a, b)?;
        added.push((a, b));
    }

    let keep: Vec<bool> = (0..n).map(|v| v != deleted).collect();
    let (new_rots, renumbering) = PlaneGraph::induced_rotations(&rots, &keep);
    let h = PlaneGraph::from_rotations(new_rots).map_err(|e| match e {
        GraphError::NotPlanarEmbedding { .. } if !added.is_empty() => {
            ReduceError::EmbeddingBroken(added[0].0, added[0].1)
        }
        e => ReduceError::InvalidResult(e),
    })?;
    if let Some(v) = (0..h.vertex_count()).find(|&v| h.degree(v) > MAX_DEGREE) {
        return Err(ReduceError::DegreeOverflow {
            vertex: v,
            degree: h.degree(v),
        });
    }
    let before = g.vertex_count() + g.edge_count();
    let after = h.vertex_count() + h.edge_count();
    if after >= before {
        return Err(ReduceError::NoDescent { before, after });
    }
    let trace = ReductionTrace {
        step: 0,
        rule: String::new(),
        deleted,
        added_edges: added,
        renumbering,
        v_plus_e_before: before,
        v_plus_e_after: after,
        observed_d2: 0,
        claimed_bound: 0,
        colors_seen: None,
    };
    if !is_proper_wrt(g, &h, &trace) {
        return Err(ReduceError::NotProper);
    }
    Ok((h, trace))
}

/// Face walks of a rotation system, each a list of `(tail, predecessor)`:
/// the dart `pred -> tail` is followed by `tail -> next`, so the walk uses
/// the angle at `tail` that follows `pred`.
fn walks(rots: &[Vec<VertexId>]) -> Vec<Vec<(VertexId, VertexId)>> {
    let mut seen: Vec<Vec<bool>> = rots.iter().map(|r| vec![false; r.len()]).collect();
    let slot = |v: VertexId, u: VertexId| rots[v].iter().position(|&x| x == u).expect("symmetric");
    let mut out = Vec::new();
    for v in 0..rots.len() {
        for i in 0..rots[v].len() {
            if seen[v][i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut j) = (v, i);
            while !seen[a][j] {
                seen[a][j] = true;
                let b = rots[a][j];
                let k = slot(b, a);
                walk.push((b, a));
                j = (k + 1) % rots[b].len();
                a = b;
            }
            out.push(walk);
        }
    }
    out
}

fn insert_chord(
    rots: &mut [Vec<VertexId>],
    region: &mut BTreeSet<Angle>,
    a: VertexId,
    b: VertexId,
) -> Result<(), ReduceError> {
    let place = |rots: &mut [Vec<VertexId>], region: &mut BTreeSet<Angle>, x: VertexId, after: Option<VertexId>, y: VertexId| {
        match after {
            None => {
                rots[x].push(y);
                region.remove(&(x, None));
            }
            Some(p) => {
                let i = rots[x].iter().position(|&w| w == p).expect("angle neighbour");
                rots[x].insert(i + 1, y);
            }
        }
        region.insert((x, Some(y)));
    };

    let a_iso = rots[a].is_empty();
    let b_iso = rots[b].is_empty();
    if a_iso && b_iso {
        if !(region.contains(&(a, None)) && region.contains(&(b, None))) {
            return Err(ReduceError::EmbeddingBroken(a, b));
        }
        place(rots, region, a, None, b);
        place(rots, region, b, None, a);
        return Ok(());
    }
    if a_iso || b_iso {
        let (iso, other) = if a_iso { (a, b) } else { (b, a) };
        if !region.contains(&(iso, None)) {
            return Err(ReduceError::EmbeddingBroken(a, b));
        }
        let angle = region
            .iter()
            .find(|&&(x, p)| x == other && p.is_some())
            .copied()
            .ok_or(ReduceError::EmbeddingBroken(a, b))?;
        place(rots, region, other, angle.1, iso);
        place(rots, region, iso, None, other);
        return Ok(());
    }
    for walk in walks(rots) {
        let find = |x: VertexId| {
            walk.iter()
                .find(|&&(t, p)| t == x && region.contains(&(x, Some(p))))
                .map(|&(_, p)| p)
        };
        if let (Some(pa), Some(pb)) = (find(a), find(b)) {
            place(rots, region, a, Some(pa), b);
            place(rots, region, b, Some(pb), a);
            return Ok(());
        }
    }
    Err(ReduceError::EmbeddingBroken(a, b))
}

/// True iff every pair of surviving vertices at distance at most two in `g`
/// is at distance at most two in `h`, under `t.renumbering`.
pub fn is_proper_wrt(g: &PlaneGraph, h: &PlaneGraph, t: &ReductionTrace) -> bool {
    let map = |v: VertexId| t.renumbering.get(v).copied().flatten();
    let close_in_h = |x: VertexId, y: VertexId| {
        h.has_edge(x, y) || h.rotation(x).iter().any(|&w| h.has_edge(w, y))
    };
    // A pair can only lose every short path if one of its ends was adjacent to
    // a removed vertex or lies on a removed edge.
    let mut touched: BTreeSet<VertexId> = BTreeSet::new();
    for v in 0..g.vertex_count() {
        match map(v) {
            None => touched.extend(g.rotation(v).iter().copied()),
            Some(hv) => {
                for &u in g.rotation(v) {
                    if let Some(hu) = map(u) {
                        if hu >= h.vertex_count() || !h.has_edge(hv, hu) {
                            touched.insert(v);
                            touched.insert(u);
                        }
                    }
                }
            }
        }
    }
    touched.into_iter().all(|x| {
        let Some(hx) = map(x) else { return true };
        g.second_neighbourhood(x)
            .into_iter()
            .all(|y| match map(y) {
                Some(hy) => close_in_h(hx, hy),
                None => true,
            })
    })
}

/// Lifts a coloring of `G'` to `G`, giving the deleted vertex the lowest color
/// absent from its distance-two neighbourhood.
pub fn extend(g: &PlaneGraph, t: &ReductionTrace, c_prime: &Coloring) -> Result<Coloring, ReduceError> {
    let mut c = Coloring::empty(c_prime.palette);
    for v in 0..g.vertex_count() {
        if let Some(hv) = t.renumbering[v] {
            if let Some(col) = c_prime.get(hv) {
                c.set(v, col);
            }
        }
    }
    let used = forbidden(g, t.deleted, &c);
    let col = (1..=c.palette)
        .find(|x| !used.contains(x))
        .ok_or(ReduceError::NoAvailableColor {
            vertex: t.deleted,
            used: used.len(),
        })?;
    c.set(t.deleted, col);
    Ok(c)
}

fn forbidden(g: &PlaneGraph, v: VertexId, c: &Coloring) -> BTreeSet<u32> {
    g.second_neighbourhood(v)
        .into_iter()
        .filter_map(|u| c.get(u))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Color16Options {
    /// Graphs with at most this many vertices get distinct colors directly.
    pub base_limit: usize,
    /// Node budget for the exact fallback when no configuration is found.
    pub fallback_budget: SearchBudget,
}

impl Default for Color16Options {
    fn default() -> Self {
        Color16Options {
            base_limit: DEFAULT_PALETTE as usize,
            fallback_budget: SearchBudget::nodes(100_000_000),
        }
    }
}

/// A reduced graph on which no configuration was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    pub step: usize,
    pub vertices: usize,
    pub edges: usize,
    pub graph: String,
}

#[derive(Debug, Clone)]
pub struct Color16 {
    pub coloring: Coloring,
    pub traces: Vec<ReductionTrace>,
    pub anomalies: Vec<Anomaly>,
}

pub fn color16(g: &PlaneGraph) -> Result<Color16, ReduceError> {
    color16_with(g, Color16Options::default())
}

pub fn color16_with(g: &PlaneGraph, opts: Color16Options) -> Result<Color16, ReduceError> {
    check_degree(g)?;
    let base_limit = opts.base_limit.min(DEFAULT_PALETTE as usize);
    let mut graphs = vec![g.clone()];
    let mut traces: Vec<ReductionTrace> = Vec::new();
    let mut anomalies = Vec::new();
    let mut base: Option<Coloring> = None;

    loop {
        let cur = graphs.last().expect("nonempty");
        if cur.vertex_count() <= base_limit {
            break;
        }
        match configurations::detect_with_reduction(cur)? {
            Some((_, h, mut t)) => {
                t.step = traces.len();
                traces.push(t);
                graphs.push(h);
            }
            None => {
                anomalies.push(Anomaly {
                    step: traces.len(),
                    vertices: cur.vertex_count(),
                    edges: cur.edge_count(),
                    graph: cur.to_rotation_text(),
                });
                match color_with_k(cur, DEFAULT_PALETTE, opts.fallback_budget) {
                    Outcome::Colored(c) => base = Some(c),
                    _ => {
                        return Err(ReduceError::AnomalyNoConfiguration {
                            vertices: cur.vertex_count(),
                            graph: cur.to_rotation_text(),
                        })
                    }
                }
                break;
            }
        }
    }

    let last = graphs.last().expect("nonempty");
    let mut coloring = base.unwrap_or_else(|| {
        Coloring::from_slice(
            DEFAULT_PALETTE,
            &(1..=last.vertex_count() as u32).collect::<Vec<_>>(),
        )
    });
    for (t, gi) in traces.iter_mut().zip(graphs.iter()).rev() {
        let next = extend(gi, t, &coloring)?;
        t.colors_seen = Some(forbidden(gi, t.deleted, &next).len());
        coloring = next;
    }
    Ok(Color16 {
        coloring,
        traces,
        anomalies,
    })
}
