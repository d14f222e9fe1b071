//! Discharging with exact charges.
//!
//! Every vertex starts at `d(v) - 4` and every face at `l(f) - 4`; on a
//! connected plane graph these sum to -8. Rules R1..R10 then move fixed
//! amounts between vertices and faces in one pass over the unchanged graph.

mod scalar;

pub use scalar::{reduced, ExactScalar, Fixed45};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::configurations::{self, classify_in, ConfigMatch, Context, DetectError, Kind};
use crate::plane_graph::{FaceId, PlaneGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "lowercase")]
pub enum Element {
    Vertex(VertexId),
    Face(FaceId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7a,
    R7b,
    R8a,
    R8b,
    R9,
    R10,
}

impl RuleId {
    pub const ALL: [RuleId; 12] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7a,
        RuleId::R7b,
        RuleId::R8a,
        RuleId::R8b,
        RuleId::R9,
        RuleId::R10,
    ];

    /// Amount moved by one application, as `(numerator, denominator)`.
    pub fn amount(self) -> (i64, i64) {
        match self {
            RuleId::R1 | RuleId::R3 | RuleId::R10 => (1, 3),
            RuleId::R2 | RuleId::R6 => (1, 9),
            RuleId::R4 | RuleId::R5 | RuleId::R8b | RuleId::R9 => (1, 5),
            RuleId::R7a => (1, 15),
            RuleId::R7b | RuleId::R8a => (2, 15),
        }
    }
}

fn as_string<T: std::fmt::Display, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct TransferRecord<S: ExactScalar> {
    pub rule: RuleId,
    pub source: Element,
    pub sink: Element,
    #[serde(serialize_with = "as_string")]
    pub amount: S,
}

fn as_strings<T: std::fmt::Display, S: Serializer>(xs: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct Ledger<S: ExactScalar> {
    #[serde(serialize_with = "as_strings")]
    pub vertex_charges: Vec<S>,
    #[serde(serialize_with = "as_strings")]
    pub face_charges: Vec<S>,
    pub transfers: Vec<TransferRecord<S>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("initial charges sum to {0}, not -8")]
    EulerIdentityViolated(String),
}

impl<S: ExactScalar> Ledger<S> {
    pub fn charge(&self, e: Element) -> &S {
        match e {
            Element::Vertex(v) => &self.vertex_charges[v],
            Element::Face(f) => &self.face_charges[f],
        }
    }

    fn charge_mut(&mut self, e: Element) -> &mut S {
        match e {
            Element::Vertex(v) => &mut self.vertex_charges[v],
            Element::Face(f) => &mut self.face_charges[f],
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ledgers serialize")
    }

    pub fn total(&self) -> S {
        self.vertex_charges
            .iter()
            .chain(&self.face_charges)
            .cloned()
            .fold(S::zero(), |a, b| a + b)
    }

    /// Debits `source` and credits `sink` by the rule's amount, and logs it.
    pub fn transfer(&mut self, rule: RuleId, source: Element, sink: Element) {
        let (p, q) = rule.amount();
        let amount = S::ratio(p, q);
        let s = self.charge_mut(source);
        *s = s.clone() - amount.clone();
        let t = self.charge_mut(sink);
        *t = t.clone() + amount.clone();
        self.transfers.push(TransferRecord {
            rule,
            source,
            sink,
            amount,
        });
    }

    /// Elements with negative charge, vertices first, each ascending.
    pub fn negatives(&self) -> Vec<(Element, S)> {
        let vs = self
            .vertex_charges
            .iter()
            .enumerate()
            .map(|(v, c)| (Element::Vertex(v), c));
        let fs = self
            .face_charges
            .iter()
            .enumerate()
            .map(|(f, c)| (Element::Face(f), c));
        vs.chain(fs)
            .filter(|(_, c)| **c < S::zero())
            .map(|(e, c)| (e, c.clone()))
            .collect()
    }
}

/// `mu(v) = d(v) - 4`, `mu(f) = l(f) - 4`, checked to total -8.
pub fn initial_charges<S: ExactScalar>(g: &PlaneGraph) -> Result<Ledger<S>, DischargeError> {
    let ledger = Ledger {
        vertex_charges: (0..g.vertex_count())
            .map(|v| S::integer(g.degree(v) as i64 - 4))
            .collect(),
        face_charges: g
            .faces()
            .iter()
            .map(|f| S::integer(f.len() as i64 - 4))
            .collect(),
        transfers: Vec::new(),
    };
    let total = ledger.total();
    if total != S::integer(-8) {
        return Err(DischargeError::EulerIdentityViolated(total.to_string()));
    }
    Ok(ledger)
}

/// Applies every rule whose hypothesis holds in `g`, once each, reading only
/// the structure of `g` (never intermediate charges).
pub fn apply_rules<S: ExactScalar>(g: &PlaneGraph, mut ledger: Ledger<S>) -> Ledger<S> {
    let ctx = Context::new(g);
    let flen = |f: FaceId| g.face(f).len();
    let n = g.vertex_count();

    // R1
    for (f, face) in g.faces().iter().enumerate() {
        if face.len() == 3 {
            for v in face.walk() {
                ledger.transfer(RuleId::R1, Element::Vertex(v), Element::Face(f));
            }
        }
    }
    for v in 0..n {
        let d = g.degree(v);
        let big_faces: Vec<FaceId> = g.faces_at(v).into_iter().filter(|&f| flen(f) >= 5).collect();
        match d {
            3 => {
                // R2
                for &u in g.rotation(v) {
                    if g.degree(u) == 5 {
                        ledger.transfer(RuleId::R2, Element::Vertex(u), Element::Vertex(v));
                    }
                }
                // R3
                for &f in &big_faces {
                    ledger.transfer(RuleId::R3, Element::Face(f), Element::Vertex(v));
                }
            }
            4 => {
                // R4
                for &f in &big_faces {
                    ledger.transfer(RuleId::R4, Element::Face(f), Element::Vertex(v));
                }
            }
            5 => {
                // R5, R6
                for &f in &big_faces {
                    let has_3nb = g
                        .face(f)
                        .walk()
                        .any(|u| g.degree(u) == 3 && g.has_edge(u, v));
                    let rule = if has_3nb { RuleId::R6 } else { RuleId::R5 };
                    ledger.transfer(rule, Element::Face(f), Element::Vertex(v));
                }
                // R7
                let m3 = g.faces_at(v).into_iter().filter(|&f| flen(f) == 3).count();
                if m3 <= 3 {
                    for &u in g.rotation(v) {
                        if g.degree(u) != 4 {
                            continue;
                        }
                        let mut fs = [g.dart_face(v, u), g.dart_face(u, v)]
                            .into_iter()
                            .flatten()
                            .filter(|&f| flen(f) >= 5)
                            .collect::<Vec<_>>();
                        fs.dedup();
                        match fs.len() {
                            1 => ledger.transfer(RuleId::R7a, Element::Vertex(v), Element::Vertex(u)),
                            2 => ledger.transfer(RuleId::R7b, Element::Vertex(v), Element::Vertex(u)),
                            _ => {}
                        }
                    }
                }
                special_rules(&ctx, v, &mut ledger);
            }
            _ => {}
        }
    }
    ledger
}

fn special_rules<S: ExactScalar>(ctx: &Context<'_>, v: VertexId, ledger: &mut Ledger<S>) {
    let Some(sk) = classify_in(ctx, v) else {
        return;
    };
    let g = ctx.g;
    let src = Element::Vertex(v);
    match sk.kind {
        Kind::Strong => {
            // R8
            let (v1, v2, v3) = (sk.nb(1), sk.nb(2), sk.nb(3));
            let doubled = [g.edge_in_two_triangles(v1, v2), g.edge_in_two_triangles(v2, v3)]
                .iter()
                .filter(|&&b| b)
                .count();
            match doubled {
                1 => ledger.transfer(RuleId::R8a, src, Element::Vertex(v2)),
                2 => ledger.transfer(RuleId::R8b, src, Element::Vertex(v2)),
                _ => {}
            }
        }
        Kind::Good => {
            // R9
            for u in [sk.nb(2), sk.nb(3)] {
                if ctx.kind[u] == Some(Kind::SemiBad) {
                    ledger.transfer(RuleId::R9, src, Element::Vertex(u));
                }
            }
        }
        Kind::Support => {
            // R10: the shared edge of the two 3-faces is v v2.
            let u = sk.nb(2);
            if g.edge_in_two_triangles(v, u) {
                ledger.transfer(RuleId::R10, src, Element::Vertex(u));
            }
        }
        Kind::Bad | Kind::SemiBad => {}
    }
}

/// Charge rendered as `p/45`.
fn p45<S: ExactScalar>(c: &S) -> String {
    format!("{}/45", c.to_45ths().expect("charges are multiples of 1/45"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeCharge {
    pub kind: &'static str,
    pub id: usize,
    pub charge: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub conservation: String,
    pub negatives: Vec<NegativeCharge>,
    pub transfers: usize,
    pub configuration: Option<ConfigMatch>,
    pub falsification: bool,
}

impl AuditReport {
    pub fn conserved(&self) -> bool {
        self.conservation == "-8"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("audits serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error(transparent)]
    Detect(#[from] DetectError),
    #[error(transparent)]
    Discharge(#[from] DischargeError),
}

/// Final charges, detected configuration and the verdict. `falsification`
/// is set when no configuration exists and every final charge is
/// nonnegative.
pub fn audit(g: &PlaneGraph) -> Result<AuditReport, AuditError> {
    let configuration = configurations::detect(g)?;
    let ledger = apply_rules(g, initial_charges::<Fixed45>(g)?);
    let negatives: Vec<NegativeCharge> = ledger
        .negatives()
        .into_iter()
        .map(|(e, c)| {
            let (kind, id) = match e {
                Element::Vertex(v) => ("vertex", v),
                Element::Face(f) => ("face", f),
            };
            NegativeCharge {
                kind,
                id,
                charge: p45(&c),
            }
        })
        .collect();
    let falsification = configuration.is_none() && negatives.is_empty();
    Ok(AuditReport {
        conservation: reduced(ledger.total().0),
        negatives,
        transfers: ledger.transfers.len(),
        configuration,
        falsification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use num_rational::Ratio;
    use num_traits::Zero;

    fn run<S: ExactScalar>(name: &str) -> Ledger<S> {
        let g = named(name).unwrap();
        apply_rules(&g, initial_charges::<S>(&g).unwrap())
    }

    #[test]
    fn icosahedron_charges() {
        let g = named("icosahedron").unwrap();
        let l0 = initial_charges::<Fixed45>(&g).unwrap();
        assert!(l0.vertex_charges.iter().all(|&c| c == Fixed45::integer(1)));
        assert!(l0.face_charges.iter().all(|&c| c == Fixed45::integer(-1)));
        let l = apply_rules(&g, l0);
        assert!(l.transfers.iter().all(|t| t.rule == RuleId::R1));
        assert_eq!(l.transfers.len(), 60);
        assert!(l.vertex_charges.iter().all(|&c| c == Fixed45::ratio(-2, 3)));
        assert!(l.face_charges.iter().all(|c| c.is_zero()));
        assert_eq!(l.total(), Fixed45::integer(-8));
    }

    #[test]
    fn cube_is_untouched() {
        let l = run::<Fixed45>("cube");
        assert!(l.transfers.is_empty());
        assert!(l.vertex_charges.iter().all(|&c| c == Fixed45::integer(-1)));
        assert!(l.face_charges.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn scalars_agree_on_fixtures() {
        for name in ["fig1a", "fig1b", "fig2a", "fig2b", "fig2c", "dodecahedron"] {
            let a = run::<Fixed45>(name);
            let b = run::<Ratio<i64>>(name);
            let a45: Vec<_> = a.vertex_charges.iter().chain(&a.face_charges).map(|c| c.to_45ths()).collect();
            let b45: Vec<_> = b.vertex_charges.iter().chain(&b.face_charges).map(|c| c.to_45ths()).collect();
            assert_eq!(a45, b45, "{name}");
            assert_eq!(a.total(), Fixed45::integer(-8));
        }
    }

    #[test]
    fn transfer_json() {
        let l = run::<Fixed45>("k4");
        assert_eq!(
            serde_json::to_string(&l.transfers[0]).unwrap(),
            r#"{"rule":"R1","source":{"kind":"vertex","id":0},"sink":{"kind":"face","id":0},"amount":"15/45"}"#
        );
    }

    #[test]
    fn audit_examples() {
        let a = audit(&named("icosahedron").unwrap()).unwrap();
        assert_eq!(a.conservation, "-8");
        assert_eq!(a.negatives.len(), 12);
        assert_eq!(a.negatives[0].charge, "-30/45");
        assert_eq!(a.configuration.unwrap().rule, "R-5m5");
        assert!(!a.falsification);

        let a = audit(&named("cube").unwrap()).unwrap();
        assert_eq!(a.negatives.len(), 8);
        assert!(a.negatives.iter().all(|n| n.kind == "vertex" && n.charge == "-45/45"));
        assert_eq!(a.configuration.unwrap().rule, "R-3two4f");

        let a = audit(&named("c5").unwrap()).unwrap();
        assert_eq!(a.configuration.as_ref().unwrap().rule, "R-δ2");
        assert!(a.conserved());
    }
}
