//! Reducible configurations: the rule table, the detector and the
//! special-vertex classifier.
//!
//! A rule names a centre degree, a face/degree pattern over a labelled frame
//! `v, v1..vd` (see [`Frame`](frame::Frame)), a vertex to delete, and chords
//! between former neighbours of that vertex. Every chord is skipped when the
//! edge is already present. A match is accepted only if the deleted vertex's
//! d2 is within the rule's bound and the reduction yields a plane graph with
//! maximum degree five that is proper with respect to the input.

mod frame;
mod rules;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{PlaneGraph, VertexId};
use crate::reducer::{self, ReductionTrace};

pub(crate) use frame::{Context, Frame, Labelings};

pub const MAX_DEGREE: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    V,
    /// Neighbour `vi`, 1-based.
    N(usize),
    X,
    Y,
}

impl Role {
    pub fn name(self) -> String {
        match self {
            Role::V => "v".into(),
            Role::N(i) => format!("v{i}"),
            Role::X => "x".into(),
            Role::Y => "y".into(),
        }
    }
}

/// How auxiliary roles `x` and `y` are bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aux {
    None,
    /// `x` is the neighbour of the degree-4 vertex `vi` outside `{v, v(i-1), v(i+1)}`.
    FourthOf(usize),
    /// `x, y` follow `v, v2` around `v3`.
    FanAtV3,
}

pub struct ReductionRule {
    pub id: &'static str,
    pub claim: &'static str,
    pub centre_degree: usize,
    pub claimed_d2_bound: usize,
    pub delete: Role,
    pub add_edges: &'static [(Role, Role)],
    pub aux: Aux,
    pattern: fn(&Frame) -> bool,
}

impl std::fmt::Debug for ReductionRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ReductionRule")
            .field("id", &self.id)
            .field("centre_degree", &self.centre_degree)
            .field("claimed_d2_bound", &self.claimed_d2_bound)
            .field("delete", &self.delete)
            .field("add_edges", &self.add_edges)
            .finish()
    }
}

/// All rules in priority order: ascending claimed bound, ties by table position.
pub fn rule_table() -> &'static [&'static ReductionRule] {
    static ORDER: OnceLock<Vec<&'static ReductionRule>> = OnceLock::new();
    ORDER.get_or_init(|| {
        let mut v: Vec<&'static ReductionRule> = rules::TABLE.iter().collect();
        v.sort_by_key(|r| r.claimed_d2_bound);
        v
    })
}

pub fn rule(id: &str) -> Option<&'static ReductionRule> {
    rules::TABLE.iter().find(|r| r.id == id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Bad,
    SemiBad,
    Strong,
    Good,
    Support,
}

/// A classified 5-vertex with the labelling that witnesses it. For bad and
/// semi-bad vertices the 3-faces sit at corners 1..4; for strong ones at
/// 1, 2, 4; for good ones at 1, 2, 3; for support ones at 1, 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialKind {
    pub kind: Kind,
    pub v: VertexId,
    pub neighbours: [VertexId; 5],
}

impl SpecialKind {
    /// `vi`, 1-based.
    pub fn nb(&self, i: usize) -> VertexId {
        self.neighbours[(i + 4) % 5]
    }
}

pub fn classify_special(g: &PlaneGraph, v: VertexId) -> Option<SpecialKind> {
    classify_in(&Context::new(g), v)
}

pub(crate) fn classify_in(ctx: &Context<'_>, v: VertexId) -> Option<SpecialKind> {
    let kind = ctx.kind.get(v).copied().flatten()?;
    Labelings::new(5).find_map(|(s, m)| {
        let f = Frame::new(ctx, v, s, m);
        let hit = match kind {
            Kind::Bad => f.bad(),
            Kind::SemiBad => f.semibad(),
            Kind::Strong => f.strong(),
            Kind::Good => f.good(),
            Kind::Support => f.support(),
        };
        hit.then(|| SpecialKind {
            kind,
            v,
            neighbours: [f.nb(1), f.nb(2), f.nb(3), f.nb(4), f.nb(5)],
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigMatch {
    pub rule: String,
    /// Role name (`v`, `v1`..`v5`, `x`, `y`) to vertex.
    pub binding: BTreeMap<String, VertexId>,
    pub claimed_bound: usize,
    pub observed_d2: usize,
}

impl ConfigMatch {
    pub fn rule(&self) -> Option<&'static ReductionRule> {
        rule(&self.rule)
    }

    fn role(&self, r: Role) -> Option<VertexId> {
        self.binding.get(&r.name()).copied()
    }

    pub fn deleted(&self) -> Option<VertexId> {
        self.role(self.rule()?.delete)
    }

    /// Chords named by the rule, resolved to vertices, before skipping present edges.
    pub fn chords(&self) -> Option<Vec<(VertexId, VertexId)>> {
        self.rule()?
            .add_edges
            .iter()
            .map(|&(a, b)| Some((self.role(a)?, self.role(b)?)))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matches serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("vertex {vertex} has degree {degree} > 5")]
    DegreeTooHigh { vertex: VertexId, degree: usize },
}

pub(crate) fn check_degree(g: &PlaneGraph) -> Result<(), DetectError> {
    match (0..g.vertex_count()).find(|&v| g.degree(v) > MAX_DEGREE) {
        Some(v) => Err(DetectError::DegreeTooHigh {
            vertex: v,
            degree: g.degree(v),
        }),
        None => Ok(()),
    }
}

fn bind(f: &Frame, rule: &ReductionRule) -> Option<BTreeMap<String, VertexId>> {
    let mut b = BTreeMap::new();
    b.insert(Role::V.name(), f.v);
    for i in 1..=f.d() {
        b.insert(Role::N(i).name(), f.nb(i));
    }
    match rule.aux {
        Aux::None => {}
        Aux::FourthOf(i) => {
            b.insert(Role::X.name(), f.fourth_of(i)?);
        }
        Aux::FanAtV3 => {
            let (x, y) = f.fan_at_v3()?;
            b.insert(Role::X.name(), x);
            b.insert(Role::Y.name(), y);
        }
    }
    Some(b)
}

/// Result of trying one rule at one labelled centre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attempt {
    Reduced(ConfigMatch),
    /// The deleted vertex has a larger d2 than the rule claims.
    BoundExceeded(ConfigMatch),
    /// The pattern holds but the reduction was rejected.
    Rejected(ConfigMatch, String),
}

fn attempt(
    g: &PlaneGraph,
    ctx: &Context<'_>,
    rule: &ReductionRule,
    v: VertexId,
    s: usize,
    m: bool,
) -> Option<Result<(ConfigMatch, PlaneGraph, ReductionTrace), Attempt>> {
    let f = Frame::new(ctx, v, s, m);
    if !(rule.pattern)(&f) {
        return None;
    }
    let binding = bind(&f, rule)?;
    let mut cm = ConfigMatch {
        rule: rule.id.to_string(),
        binding,
        claimed_bound: rule.claimed_d2_bound,
        observed_d2: 0,
    };
    let deleted = cm.deleted().expect("delete role is bound");
    cm.observed_d2 = g.d2(deleted);
    if cm.observed_d2 > rule.claimed_d2_bound {
        return Some(Err(Attempt::BoundExceeded(cm)));
    }
    Some(match reducer::apply(g, &cm) {
        Ok((h, t)) => Ok((cm, h, t)),
        Err(e) => Err(Attempt::Rejected(cm, e.to_string())),
    })
}

/// Every match of a single rule, ignoring priority, with its outcome.
pub fn attempts(g: &PlaneGraph, rule: &ReductionRule) -> Result<Vec<Attempt>, DetectError> {
    check_degree(g)?;
    let ctx = Context::new(g);
    let mut out = Vec::new();
    for v in (0..g.vertex_count()).filter(|&v| g.degree(v) == rule.centre_degree) {
        for (s, m) in Labelings::new(rule.centre_degree) {
            match attempt(g, &ctx, rule, v, s, m) {
                None => {}
                Some(Ok((cm, _, _))) => out.push(Attempt::Reduced(cm)),
                Some(Err(a)) => out.push(a),
            }
        }
    }
    Ok(out)
}

/// First valid match in priority order, with the reduction it produces.
pub(crate) fn detect_with_reduction(
    g: &PlaneGraph,
) -> Result<Option<(ConfigMatch, PlaneGraph, ReductionTrace)>, DetectError> {
    check_degree(g)?;
    let ctx = Context::new(g);
    let mut by_degree: Vec<Vec<VertexId>> = vec![Vec::new(); MAX_DEGREE + 1];
    for v in 0..g.vertex_count() {
        by_degree[g.degree(v)].push(v);
    }
    for rule in rule_table() {
        for &v in &by_degree[rule.centre_degree] {
            for (s, m) in Labelings::new(rule.centre_degree) {
                if let Some(Ok(found)) = attempt(g, &ctx, rule, v, s, m) {
                    return Ok(Some(found));
                }
            }
        }
    }
    Ok(None)
}

/// First rule in priority order, scanning centres by ascending id and
/// labellings in rotation order, whose pattern holds, whose bound is met and
/// whose reduction succeeds. `None` means no rule applies.
pub fn detect(g: &PlaneGraph) -> Result<Option<ConfigMatch>, DetectError> {
    Ok(detect_with_reduction(g)?.map(|(m, _, _)| m))
}

/// True if the deleted vertex of `m` has d2 at most the rule's bound.
pub fn verify_claimed_bound(g: &PlaneGraph, m: &ConfigMatch) -> bool {
    match (m.rule(), m.deleted()) {
        (Some(rule), Some(v)) if v < g.vertex_count() => g.d2(v) <= rule.claimed_d2_bound,
        _ => false,
    }
}

/// Per-vertex kinds for the whole graph.
pub fn special_kinds(g: &PlaneGraph) -> Vec<Option<Kind>> {
    Context::new(g).kind
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn table_is_sorted_and_bounded() {
        let t = rule_table();
        assert_eq!(t.len(), rules::TABLE.len());
        assert!(t.windows(2).all(|w| w[0].claimed_d2_bound <= w[1].claimed_d2_bound));
        assert!(t.iter().all(|r| r.claimed_d2_bound <= 15));
        assert_eq!(t[0].id, "R-δ2");
        let mut ids: Vec<_> = t.iter().map(|r| r.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), t.len());
    }

    #[test]
    fn documented_bounds() {
        assert_eq!(rule("R-δ2").unwrap().claimed_d2_bound, 10);
        assert_eq!(rule("R-3in3f").unwrap().claimed_d2_bound, 13);
        assert_eq!(rule("R-4three3f").unwrap().claimed_d2_bound, 14);
        assert_eq!(rule("R-3adj4").unwrap().add_edges, &[(Role::N(1), Role::N(2)), (Role::N(1), Role::N(3))]);
    }

    #[test]
    fn chords_join_former_neighbours_only() {
        for r in rule_table() {
            let nbs = |x: Role| match (r.delete, x) {
                (Role::V, Role::N(_)) => true,
                (Role::N(i), Role::N(j)) => (j % 5 + 1 == i) || (i % 5 + 1 == j),
                (Role::N(_), Role::X | Role::Y) => true,
                _ => false,
            };
            for &(a, b) in r.add_edges {
                assert!(nbs(a) && nbs(b), "{} adds {a:?}{b:?}", r.id);
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn detect_examples() {
        let m = detect(&named("k2").unwrap()).unwrap().unwrap();
        assert_eq!(m.rule, "R-δ1");
        let m = detect(&named("c5").unwrap()).unwrap().unwrap();
        assert_eq!((m.rule.as_str(), m.observed_d2), ("R-δ2", 4));
        let ico = named("icosahedron").unwrap();
        let m = detect(&ico).unwrap().unwrap();
        assert_eq!((m.rule.as_str(), m.observed_d2), ("R-5m5", 10));
        assert!(verify_claimed_bound(&ico, &m));
        assert_eq!(detect(&named("k1").unwrap()).unwrap(), None);
    }

    #[test]
    fn detect_rejects_high_degree() {
        let g = PlaneGraph::from_rotations(vec![
            vec![1, 2, 3, 4, 5, 6],
            vec![0],
            vec![0],
            vec![0],
            vec![0],
            vec![0],
            vec![0],
        ])
        .unwrap();
        assert_eq!(
            detect(&g),
            Err(DetectError::DegreeTooHigh {
                vertex: 0,
                degree: 6
            })
        );
    }

    #[test]
    fn match_json_shape() {
        let m = detect(&named("c5").unwrap()).unwrap().unwrap();
        assert_eq!(
            m.to_json(),
            r#"{"rule":"R-δ2","binding":{"v":0,"v1":1,"v2":4},"claimed_bound":10,"observed_d2":4}"#
        );
    }

    #[test]
    fn icosahedron_has_no_special_vertex() {
        let g = named("icosahedron").unwrap();
        assert!((0..12).all(|v| classify_special(&g, v).is_none()));
    }

    #[test]
    fn fixtures_classify() {
        for (name, kind) in [
            ("fig1a", Kind::Bad),
            ("fig1b", Kind::SemiBad),
            ("fig2a", Kind::Strong),
            ("fig2b", Kind::Good),
            ("fig2c", Kind::Support),
        ] {
            let g = named(name).unwrap();
            let s = classify_special(&g, 0).unwrap_or_else(|| panic!("{name}"));
            assert_eq!(s.kind, kind, "{name}");
        }
    }
}
