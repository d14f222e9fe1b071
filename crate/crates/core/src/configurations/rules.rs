use super::frame::Frame;
use super::{Aux, ReductionRule, Role};

use Role::{N, V, X, Y};

const fn r(
    id: &'static str,
    claim: &'static str,
    centre_degree: usize,
    bound: usize,
    add_edges: &'static [(Role, Role)],
    pattern: fn(&Frame) -> bool,
) -> ReductionRule {
    ReductionRule {
        id,
        claim,
        centre_degree,
        claimed_d2_bound: bound,
        delete: V,
        add_edges,
        aux: Aux::None,
        pattern,
    }
}

const fn on(rule: ReductionRule, delete: Role, aux: Aux) -> ReductionRule {
    ReductionRule {
        delete,
        aux,
        ..rule
    }
}

const CYCLE5: &[(Role, Role)] = &[
    (N(1), N(2)),
    (N(2), N(3)),
    (N(3), N(4)),
    (N(4), N(5)),
    (N(5), N(1)),
];
const CLOSE_51: &[(Role, Role)] = &[(N(5), N(1))];
const PATH_3451: &[(Role, Role)] = &[(N(3), N(4)), (N(4), N(5)), (N(5), N(1))];
const PATH_23_451: &[(Role, Role)] = &[(N(2), N(3)), (N(4), N(5)), (N(5), N(1))];
const PATH_451: &[(Role, Role)] = &[(N(4), N(5)), (N(5), N(1))];
const JOIN_34_15: &[(Role, Role)] = &[(N(3), N(4)), (N(1), N(5))];
const FAN5_124: &[(Role, Role)] = &[(N(5), N(1)), (N(5), N(2)), (N(5), N(4))];
const CROSS_14_25: &[(Role, Role)] = &[(N(1), N(4)), (N(2), N(5))];
const CROSS_14_23: &[(Role, Role)] = &[(N(1), N(4)), (N(2), N(3))];

fn m34(f: &Frame) -> bool {
    f.n3() == 0 && f.bad_or_semibad_centre()
}

fn five_n3_1_deg5(f: &Frame) -> bool {
    f.n3() == 1 && f.deg(5) == 3
}

pub(super) static TABLE: &[ReductionRule] = &[
    r("R-δ1", "a vertex of degree one", 1, 15, &[], |_| true),
    r("R-δ2", "a vertex of degree two", 2, 10, &[(N(1), N(2))], |_| true),
    r(
        "R-3adj4",
        "a 3-vertex next to a vertex of degree at most four",
        3,
        14,
        &[(N(1), N(2)), (N(1), N(3))],
        |f| f.deg(1) <= 4,
    ),
    r("R-3in3f", "a 3-vertex on a 3-face", 3, 13, &[(N(2), N(3))], |f| f.tri(1)),
    r(
        "R-3two4f",
        "a 3-vertex on two 4-faces",
        3,
        13,
        &[(N(1), N(3))],
        |f| f.quad(1) && f.quad(2),
    ),
    r(
        "R-4three3f",
        "a 4-vertex on three 3-faces",
        4,
        14,
        &[(N(1), N(4))],
        |f| f.tri(1) && f.tri(2) && f.tri(3),
    ),
    r(
        "R-4three3f-quad-adj",
        "a 4-vertex on two adjacent 3-faces and a 4-face",
        4,
        15,
        &[(N(1), N(4))],
        |f| f.m3() == 2 && f.quad(1) && f.tri(2) && f.tri(3),
    ),
    r(
        "R-4three3f-quad-sep",
        "a 4-vertex on two opposite 3-faces and a 4-face",
        4,
        15,
        &[(N(3), N(4))],
        |f| f.m3() == 2 && f.quad(1) && f.tri(2) && f.tri(4),
    ),
    r(
        "R-4three3f-n4-adj",
        "a 4-vertex on two adjacent 3-faces with a neighbour of degree at most four",
        4,
        15,
        &[(N(2), N(4))],
        |f| f.m3() == 2 && f.tri(1) && f.tri(2) && f.small_nbs() > 0,
    ),
    r(
        "R-4three3f-n4-sep",
        "a 4-vertex on two opposite 3-faces with a neighbour of degree at most four",
        4,
        15,
        CROSS_14_23,
        |f| f.m3() == 2 && f.tri(1) && f.tri(3) && f.small_nbs() > 0,
    ),
    r(
        "R-4comm-m1",
        "a 4-vertex on a 3-face next to a 5+-face whose outer edge is on two 3-faces",
        4,
        15,
        CROSS_14_23,
        |f| {
            f.n5() == 4
                && f.m4() == 2
                && f.tri(1)
                && f.quad(3)
                && ((f.quad(2) && f.big(4)) || (f.big(2) && f.quad(4)))
                && f.nb2(1)
        },
    ),
    r(
        "R-4comm-adj",
        "a 4-vertex on two adjacent 3-faces with an outer edge on two 3-faces",
        4,
        15,
        &[(N(2), N(4))],
        |f| f.m3() == 2 && f.tri(1) && f.tri(2) && (f.nb2(1) || f.nb2(2)),
    ),
    r(
        "R-4comm-sep",
        "a 4-vertex on two opposite 3-faces with an outer edge on two 3-faces",
        4,
        15,
        CROSS_14_23,
        |f| f.m3() == 2 && f.tri(1) && f.tri(3) && (f.nb2(1) || f.nb2(3)),
    ),
    r(
        "R-444",
        "a 4-vertex on a (4,4,4+)-face and at most one 5+-face",
        4,
        15,
        &[(N(1), N(3)), (N(1), N(4))],
        |f| f.tri(1) && f.deg(1) == 4 && f.deg(2) >= 4 && f.bigs() <= 1,
    ),
    r(
        "R-455",
        "a 4-vertex on a (4,5,5)-face and no 5+-face",
        4,
        15,
        CROSS_14_23,
        |f| f.tri(1) && f.deg(1) == 5 && f.deg(2) == 5 && f.bigs() == 0,
    ),
    r(
        "R-455n4-adj",
        "a 4-vertex on a (4,5,5)-face, two adjacent 4-faces and a 4-neighbour",
        4,
        15,
        &[(N(2), N(3)), (N(1), N(4))],
        |f| {
            f.m3() == 1
                && f.tri(1)
                && f.deg(1) == 5
                && f.deg(2) == 5
                && f.bigs() <= 1
                && f.deg(3) == 4
                && f.quad(3)
                && (f.quad(2) || f.quad(4))
        },
    ),
    r(
        "R-455n4-sep",
        "a 4-vertex on a (4,5,5)-face, two opposite 4-faces and a 4-neighbour",
        4,
        15,
        &[(N(2), N(3)), (N(3), N(4))],
        |f| {
            f.m3() == 1
                && f.tri(1)
                && f.deg(1) == 5
                && f.deg(2) == 5
                && f.bigs() <= 1
                && f.deg(3) == 4
                && f.quad(2)
                && f.quad(4)
                && !f.quad(3)
        },
    ),
    r("R-5m5", "a 5-vertex on five 3-faces", 5, 15, &[], |f| f.m3() == 5),
    r("R-5n5", "a 5-vertex with five 3-neighbours", 5, 15, CYCLE5, |f| {
        f.n3() == 5
    }),
    r(
        "R-5two4",
        "a 5-vertex on two 3-faces with two 3-neighbours and two 4-neighbours",
        5,
        15,
        PATH_3451,
        |f| f.m3() == 2 && f.n3() == 2 && f.tri(1) && f.tri(2) && f.n4() >= 2,
    ),
    r(
        "R-5t4n-a-adj",
        "a 5-vertex on two adjacent 3-faces with a 3-neighbour and four 4-neighbours",
        5,
        15,
        PATH_3451,
        |f| f.n3() == 1 && f.m3() == 2 && f.tri(1) && f.tri(2) && f.n4() == 4,
    ),
    r(
        "R-5t4n-a-sep",
        "a 5-vertex on two separated 3-faces with a 3-neighbour and four 4-neighbours",
        5,
        15,
        PATH_23_451,
        |f| f.n3() == 1 && f.m3() == 2 && f.tri(1) && f.tri(3) && f.n4() == 4,
    ),
    r(
        "R-5t4n-b-adj",
        "a 5-vertex on two adjacent 3-faces and three 4-faces with 3- and 4-neighbours",
        5,
        15,
        &[(N(5), N(2)), (N(5), N(3)), (N(1), N(4))],
        t4n_b_adj,
    ),
    r(
        "R-5t4n-b-adj-planar",
        "a 5-vertex on two adjacent 3-faces and three 4-faces with 3- and 4-neighbours",
        5,
        15,
        FAN5_124,
        t4n_b_adj,
    ),
    r(
        "R-5t4n-b-sep",
        "a 5-vertex on two separated 3-faces and three 4-faces with 3- and 4-neighbours",
        5,
        15,
        PATH_23_451,
        |f| {
            f.n3() == 1
                && f.m3() == 2
                && f.tri(1)
                && f.tri(3)
                && f.n4() >= 1
                && f.bigs() == 0
        },
    ),
    r(
        "R-5t4n-c",
        "a 5-vertex on three 3-faces with a 3-neighbour and two 4-neighbours or no 5+-face",
        5,
        15,
        PATH_451,
        |f| {
            five_n3_1_deg5(f)
                && f.tris(&[1, 2, 3])
                && (f.n4() >= 2 || f.bigs() == 0)
        },
    ),
    r(
        "R-5t4n-d",
        "a 5-vertex on three 3-faces and at most one 5+-face with 3- and 4-neighbours",
        5,
        15,
        PATH_451,
        |f| five_n3_1_deg5(f) && f.tris(&[1, 2, 3]) && f.n4() >= 1 && f.bigs() <= 1,
    ),
    r(
        "R-5n30-a-adj",
        "a 5-vertex with five 4-neighbours on two adjacent 3-faces and a 4-face",
        5,
        15,
        PATH_3451,
        |f| f.n4() == 5 && f.m3() == 2 && f.bigs() <= 2 && f.tri(1) && f.tri(2),
    ),
    r(
        "R-5n30-a-sep",
        "a 5-vertex with five 4-neighbours on two separated 3-faces and a 4-face",
        5,
        15,
        PATH_23_451,
        |f| f.n4() == 5 && f.m3() == 2 && f.bigs() <= 2 && f.tri(1) && f.tri(3),
    ),
    r(
        "R-5n30-b-split",
        "a 5-vertex on three 3-faces, two adjacent, with four 4-neighbours",
        5,
        15,
        JOIN_34_15,
        |f| f.n3() == 0 && f.tris(&[1, 2, 4]) && f.n4() >= 4,
    ),
    r(
        "R-5n30-b-run",
        "a 5-vertex on three consecutive 3-faces with four 4-neighbours",
        5,
        15,
        &[(N(2), N(5)), (N(2), N(4))],
        |f| f.n3() == 0 && f.tris(&[1, 2, 3]) && f.n4() >= 4 && f.deg(2) == 4,
    ),
    r(
        "R-5m34-a",
        "a 5-vertex on four 3-faces with two 4-neighbours",
        5,
        15,
        CLOSE_51,
        |f| m34(f) && f.n4() >= 2,
    ),
    r(
        "R-5m34-b",
        "a 5-vertex on four 3-faces and a 4-face with a 4-neighbour",
        5,
        15,
        CLOSE_51,
        |f| m34(f) && f.n4() >= 1 && f.quad(5),
    ),
    r(
        "R-5m34-c",
        "a 5-vertex on four 3-faces and a 4-face with a rim edge on two 3-faces",
        5,
        15,
        CLOSE_51,
        |f| m34(f) && f.quad(5) && f.nb2_count(1..=4) >= 1,
    ),
    r(
        "R-5m34-d",
        "a 5-vertex on four 3-faces and a 5+-face with two rim edges on two 3-faces",
        5,
        15,
        CLOSE_51,
        |f| m34(f) && f.big(5) && f.nb2_count(1..=4) >= 2,
    ),
    r(
        "R-5m34-e",
        "a 5-vertex on four 3-faces and a 5+-face with a doubled rim edge and a 4-neighbour",
        5,
        15,
        CLOSE_51,
        |f| m34(f) && f.big(5) && f.nb2_count(1..=4) >= 1 && f.n4() >= 1,
    ),
    r(
        "R-sb-a",
        "a bad vertex with a neighbour of degree at most four or a rim edge on two 3-faces",
        5,
        15,
        CLOSE_51,
        |f| f.bad() && (f.n5() < 5 || f.nb2_count(1..=4) >= 1),
    ),
    r(
        "R-sb-b",
        "a semi-bad vertex with a 3-neighbour or two 4-neighbours",
        5,
        15,
        CLOSE_51,
        |f| f.semibad() && (f.n3() >= 1 || f.n4() >= 2),
    ),
    on(
        r(
            "R-deg-a2",
            "a bad or semi-bad vertex whose v2 has degree four",
            5,
            15,
            &[(N(1), X), (X, N(3))],
            |f| f.bad_or_semibad_centre() && f.deg(2) == 4,
        ),
        N(2),
        Aux::FourthOf(2),
    ),
    on(
        r(
            "R-deg-a3",
            "a bad or semi-bad vertex whose v3 has degree four",
            5,
            15,
            &[(N(2), X), (X, N(4))],
            |f| f.bad_or_semibad_centre() && f.deg(3) == 4,
        ),
        N(3),
        Aux::FourthOf(3),
    ),
    on(
        r(
            "R-deg-b",
            "a bad or semi-bad vertex whose v3 is on three 3-faces and no 5+-face",
            5,
            15,
            &[(N(2), X), (Y, N(4))],
            |f| f.bad_or_semibad_centre(),
        ),
        N(3),
        Aux::FanAtV3,
    ),
    r(
        "R-strong-a",
        "a strong vertex with two 4-neighbours and at most one 5+-face",
        5,
        15,
        JOIN_34_15,
        |f| f.strong_core() && f.n4() >= 2 && f.bigs() <= 1,
    ),
    r(
        "R-strong-b",
        "a strong vertex with doubled edges at v2, a 4-neighbour and a 4-face",
        5,
        15,
        JOIN_34_15,
        |f| {
            f.strong_core()
                && f.nb2(1)
                && f.nb2(2)
                && f.n4() >= 1
                && (f.quad(3) || f.quad(5))
        },
    ),
    r(
        "R-goodtwo",
        "a good vertex with one 4-neighbour, two 5+-faces and semi-bad v2 and v3",
        5,
        15,
        &[(N(1), N(5)), (N(4), N(5))],
        |f| {
            f.good()
                && f.n4() == 1
                && f.bigs() == 2
                && f.kind(3) == Some(super::Kind::SemiBad)
        },
    ),
    r(
        "R-good-a",
        "a good vertex with a 3-neighbour",
        5,
        15,
        PATH_451,
        |f| f.good() && f.n3() >= 1,
    ),
    r(
        "R-good-b",
        "a good vertex with two 4-neighbours",
        5,
        15,
        &[(N(1), N(5)), (N(4), N(5))],
        |f| f.good() && f.n4() >= 2,
    ),
    r(
        "R-good-c",
        "a good vertex on no 5+-face",
        5,
        15,
        &[(N(1), N(4)), (N(3), N(5))],
        |f| f.good() && f.bigs() == 0,
    ),
    r(
        "R-good-c-planar",
        "a good vertex on no 5+-face",
        5,
        15,
        &[(N(1), N(5)), (N(4), N(5))],
        |f| f.good() && f.bigs() == 0,
    ),
    r(
        "R-good-d",
        "a good vertex with a 4-neighbour and at most one 5+-face",
        5,
        15,
        CROSS_14_25,
        |f| f.good() && f.n4() >= 1 && f.bigs() <= 1 && f.quad(4),
    ),
    r(
        "R-good-d-planar",
        "a good vertex with a 4-neighbour and at most one 5+-face",
        5,
        15,
        &[(N(1), N(5)), (N(4), N(5))],
        |f| f.good() && f.n4() >= 1 && f.bigs() <= 1,
    ),
    r(
        "R-good-e",
        "a good vertex with semi-bad v3 and at most one 5+-face",
        5,
        15,
        CROSS_14_25,
        |f| f.good() && f.kind(3) == Some(super::Kind::SemiBad) && f.bigs() <= 1 && f.quad(4),
    ),
    r(
        "R-good-e-planar",
        "a good vertex with semi-bad v3 and at most one 5+-face",
        5,
        15,
        &[(N(1), N(5)), (N(4), N(5))],
        |f| f.good() && f.kind(3) == Some(super::Kind::SemiBad) && f.bigs() <= 1,
    ),
    r(
        "R-supp-a",
        "a support vertex with a 3-neighbour and no 5+-face",
        5,
        15,
        &[(N(3), N(5)), (N(2), N(4))],
        |f| f.support() && f.n3() == 1 && f.bigs() == 0,
    ),
    r(
        "R-supp-a-planar",
        "a support vertex with a 3-neighbour and no 5+-face",
        5,
        15,
        FAN5_124,
        |f| f.support() && five_n3_1_deg5(f) && f.bigs() == 0,
    ),
    r(
        "R-supp-b-f3",
        "a support vertex with 3- and 4-neighbours and one 5+-face next to v3",
        5,
        15,
        &[(N(2), N(4)), (N(3), N(5)), (N(1), N(5))],
        supp_b_f3,
    ),
    r(
        "R-supp-b-f3-planar",
        "a support vertex with 3- and 4-neighbours and one 5+-face next to v3",
        5,
        15,
        PATH_3451,
        supp_b_f3,
    ),
    r(
        "R-supp-b-f45",
        "a support vertex with 3- and 4-neighbours and one 5+-face away from v3",
        5,
        15,
        &[(N(1), N(5)), (N(2), N(5)), (N(4), N(5))],
        |f| {
            f.support()
                && five_n3_1_deg5(f)
                && f.n4() == 1
                && ((f.big(4) && f.quad(3) && f.quad(5)) || (f.big(5) && f.quad(3) && f.quad(4)))
        },
    ),
    r(
        "R-supp-c",
        "a support vertex with a 3-neighbour, two 4-neighbours and a 4-face",
        5,
        15,
        PATH_3451,
        |f| f.support() && five_n3_1_deg5(f) && f.n4() == 2 && f.bigs() <= 2,
    ),
    r(
        "R-supp-d",
        "a support vertex with two 3-neighbours and a 4-face",
        5,
        15,
        PATH_3451,
        |f| {
            f.support()
                && f.deg(4) == 3
                && f.deg(5) == 3
                && (f.quad(3) || f.quad(4) || f.quad(5))
        },
    ),
];

fn t4n_b_adj(f: &Frame) -> bool {
    five_n3_1_deg5(f) && f.m3() == 2 && f.tri(1) && f.tri(2) && f.n4() >= 1 && f.bigs() == 0
}

fn supp_b_f3(f: &Frame) -> bool {
    f.support()
        && five_n3_1_deg5(f)
        && f.n4() == 1
        && f.big(3)
        && f.quad(4)
        && f.quad(5)
}
