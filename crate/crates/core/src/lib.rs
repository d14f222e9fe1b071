//! Constructive 2-distance coloring of plane graphs with maximum degree five
//! using at most 16 colors, by repeated reducible-configuration reductions,
//! together with an exact audit of the matching discharging rules.
//!
//! ```
//! use d2color::{color16, generators::named, validate};
//!
//! let g = named("icosahedron").unwrap();
//! let out = color16(&g).unwrap();
//! assert!(validate(&g, &out.coloring).valid);
//! ```

pub mod configurations;
pub mod conflict;
pub mod discharging;
pub mod exact_solver;
pub mod generators;
pub mod plane_graph;
pub mod reducer;

pub use configurations::{classify_special, detect, rule_table, verify_claimed_bound, ConfigMatch, Kind, SpecialKind};
pub use conflict::{conflict_sets, validate, Coloring, ConflictReport};
pub use discharging::{apply_rules, audit, initial_charges, AuditReport, Fixed45, Ledger};
pub use exact_solver::{chi2_exact, color_with_k, Chi2, Outcome, SearchBudget};
pub use plane_graph::{GraphError, PlaneGraph, VertexId};
pub use reducer::{apply, color16, color16_with, extend, is_proper_wrt, Color16Options, ReductionTrace};

/// Exact charge used by default: numerator over 45.
pub type Charge = Fixed45;
/// Charge ledger over [`Charge`].
pub type ChargeLedger = Ledger<Charge>;
