//! Cross-checks against brute-force reference computations.

use std::collections::BTreeSet;

use d2color::discharging::{ExactScalar, Ledger};
use d2color::generators::{named, random_plane, NAMES};
use d2color::{
    apply_rules, chi2_exact, color_with_k, conflict_sets, initial_charges, validate, Charge, Chi2, Coloring,
    Outcome, PlaneGraph, SearchBudget,
};
use num_rational::Ratio;

fn adjacency(g: &PlaneGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Pairs at distance one or two, from the adjacency matrix alone.
fn square(g: &PlaneGraph) -> Vec<Vec<bool>> {
    let a = adjacency(g);
    let n = a.len();
    let mut s = a.clone();
    for u in 0..n {
        for (w, row) in a.iter().enumerate() {
            if a[u][w] {
                for v in (0..n).filter(|&v| row[v] && v != u) {
                    s[u][v] = true;
                }
            }
        }
    }
    s
}

fn test_graphs() -> Vec<PlaneGraph> {
    let mut gs: Vec<_> = NAMES.iter().map(|n| named(n).unwrap()).collect();
    gs.extend((0..40).map(|s| random_plane(5 + s as usize * 3, s).unwrap()));
    gs
}

#[test]
fn second_neighbourhoods_match_matrix_square() {
    for g in test_graphs() {
        let s = square(&g);
        let sets = conflict_sets(&g);
        for v in 0..g.vertex_count() {
            let want: Vec<usize> = (0..g.vertex_count()).filter(|&u| s[v][u]).collect();
            assert_eq!(sets[v], want);
            assert_eq!(g.d2(v), want.len());
        }
    }
}

#[test]
fn icosahedron_faces_are_its_triangles() {
    let g = named("icosahedron").unwrap();
    let a = adjacency(&g);
    let mut triangles = BTreeSet::new();
    for x in 0..12 {
        for y in x + 1..12 {
            for z in y + 1..12 {
                if a[x][y] && a[y][z] && a[x][z] {
                    triangles.insert([x, y, z]);
                }
            }
        }
    }
    let faces: BTreeSet<[usize; 3]> = g
        .faces()
        .iter()
        .map(|f| {
            let mut t: Vec<usize> = f.walk().collect();
            t.sort_unstable();
            [t[0], t[1], t[2]]
        })
        .collect();
    assert_eq!(triangles.len(), 20);
    assert_eq!(faces, triangles);
    assert!(triangles.contains(&[0, 1, 5]));
    assert!(triangles.contains(&[7, 10, 11]));
}

/// Tries every assignment of `k` colours.
fn brute_colourable(s: &[Vec<bool>], k: u32) -> bool {
    fn go(s: &[Vec<bool>], k: u32, c: &mut Vec<u32>) -> bool {
        let v = c.len();
        if v == s.len() {
            return true;
        }
        for col in 1..=k {
            if (0..v).all(|u| !s[u][v] || c[u] != col) {
                c.push(col);
                if go(s, k, c) {
                    return true;
                }
                c.pop();
            }
        }
        false
    }
    go(s, k, &mut Vec::new())
}

#[test]
fn exact_solver_agrees_with_brute_force() {
    let mut graphs: Vec<PlaneGraph> = ["k2", "k4", "c5", "c6", "cube", "star5", "pentagonal_prism"]
        .iter()
        .map(|n| named(n).unwrap())
        .collect();
    graphs.extend((0..30).map(|s| random_plane(4 + s as usize % 6, s).unwrap()));
    for g in graphs {
        let s = square(&g);
        let brute = (1..=g.vertex_count() as u32).find(|&k| brute_colourable(&s, k)).unwrap();
        assert_eq!(chi2_exact(&g, SearchBudget::default()), Chi2::Exact(brute));
        match color_with_k(&g, brute, SearchBudget::default()) {
            Outcome::Colored(c) => assert!(validate(&g, &c).valid),
            other => panic!("{other:?}"),
        }
        if brute > 1 {
            assert_eq!(color_with_k(&g, brute - 1, SearchBudget::default()), Outcome::Infeasible);
        }
    }
}

#[test]
fn validate_agrees_with_pairwise_scan() {
    let g = random_plane(30, 9).unwrap();
    let s = square(&g);
    for shift in 0..5u32 {
        let colors: Vec<u32> = (0..g.vertex_count() as u32).map(|v| 1 + (v * 7 + shift) % 9).collect();
        let c = Coloring::from_slice(16, &colors);
        let clashes = (0..colors.len())
            .flat_map(|u| (u + 1..colors.len()).map(move |v| (u, v)))
            .filter(|&(u, v)| s[u][v] && colors[u] == colors[v])
            .count();
        let r = validate(&g, &c);
        assert_eq!(r.violations.len(), clashes);
        assert_eq!(r.valid, clashes == 0);
    }
}

fn in_45ths<S: ExactScalar>(l: &Ledger<S>) -> Vec<Option<i64>> {
    l.vertex_charges.iter().chain(&l.face_charges).map(|c| c.to_45ths()).collect()
}

#[test]
fn fixed_point_charges_match_rationals() {
    for g in test_graphs() {
        let a = apply_rules(&g, initial_charges::<Charge>(&g).unwrap());
        let b = apply_rules(&g, initial_charges::<Ratio<i64>>(&g).unwrap());
        assert_eq!(in_45ths(&a), in_45ths(&b));
        assert_eq!(b.total(), Ratio::from_integer(-8));
        assert_eq!(a.transfers.len(), b.transfers.len());
    }
}
