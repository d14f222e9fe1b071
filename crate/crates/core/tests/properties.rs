use d2color::generators::random_plane;
use d2color::{
    apply, apply_rules, color16, color16_with, detect, extend, initial_charges, is_proper_wrt, validate, Charge,
    Color16Options, PlaneGraph,
};
use d2color::discharging::ExactScalar;
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = PlaneGraph> {
    (3usize..120, any::<u64>()).prop_map(|(n, seed)| random_plane(n, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn color16_is_valid(g in graph()) {
        let out = color16(&g).unwrap();
        prop_assert!(validate(&g, &out.coloring).valid);
        prop_assert!(out.coloring.max_color() <= 16);
        prop_assert!(out.anomalies.is_empty());
    }

    #[test]
    fn full_reduction_is_valid(g in graph()) {
        let out = color16_with(&g, Color16Options { base_limit: 1, ..Default::default() }).unwrap();
        prop_assert!(validate(&g, &out.coloring).valid);
        for w in out.traces.windows(2) {
            prop_assert_eq!(w[0].v_plus_e_after, w[1].v_plus_e_before);
            prop_assert_eq!(w[0].step + 1, w[1].step);
        }
        prop_assert_eq!(out.traces.last().map(|t| t.v_plus_e_after), Some(1));
    }

    #[test]
    fn one_step_invariants(g in graph()) {
        let m = detect(&g).unwrap().expect("configuration");
        let (h, t) = apply(&g, &m).unwrap();
        prop_assert!(h.max_degree() <= 5);
        prop_assert!(t.v_plus_e_after < t.v_plus_e_before);
        prop_assert_eq!(t.v_plus_e_after, h.vertex_count() + h.edge_count());
        prop_assert!(is_proper_wrt(&g, &h, &t));
        let c = color16(&h).unwrap().coloring;
        prop_assert!(validate(&g, &extend(&g, &t, &c).unwrap()).valid);
    }

    #[test]
    fn charges_are_conserved(g in graph()) {
        let l = apply_rules(&g, initial_charges::<Charge>(&g).unwrap());
        prop_assert_eq!(l.total(), Charge::integer(-8));
    }

    #[test]
    fn formats_round_trip(g in graph()) {
        prop_assert_eq!(&PlaneGraph::from_rotation_text(&g.to_rotation_text()).unwrap(), &g);
        prop_assert_eq!(&PlaneGraph::from_json(&g.to_json()).unwrap(), &g);
    }
}
