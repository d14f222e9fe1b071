use crate::plane_graph::{PlaneGraph, VertexId};

use super::Kind;

/// Precomputed local data shared by every frame over one graph.
pub(crate) struct Context<'g> {
    pub g: &'g PlaneGraph,
    /// `corner_len[v][i]`: length of the face between rotation entries `i` and `i + 1`.
    corner_len: Vec<Vec<usize>>,
    /// `corner_nb2[v][i]`: the edge between rotation entries `i` and `i + 1`
    /// exists and lies on two 3-faces.
    corner_nb2: Vec<Vec<bool>>,
    pub kind: Vec<Option<Kind>>,
}

impl<'g> Context<'g> {
    pub fn new(g: &'g PlaneGraph) -> Self {
        let n = g.vertex_count();
        let mut corner_len = Vec::with_capacity(n);
        let mut corner_nb2 = Vec::with_capacity(n);
        for v in 0..n {
            let rot = g.rotation(v);
            let d = rot.len();
            corner_len.push((0..d).map(|i| g.face(g.corner_face(v, i)).len()).collect());
            corner_nb2.push(
                (0..d)
                    .map(|i| {
                        let (a, b) = (rot[i], rot[(i + 1) % d]);
                        d > 1 && g.has_edge(a, b) && g.edge_in_two_triangles(a, b)
                    })
                    .collect(),
            );
        }
        let mut ctx = Context {
            g,
            corner_len,
            corner_nb2,
            kind: vec![None; n],
        };
        for v in 0..n {
            ctx.kind[v] = ctx.basic_kind(v);
        }
        let derived: Vec<Option<Kind>> = (0..n)
            .map(|v| ctx.kind[v].or_else(|| ctx.derived_kind(v)))
            .collect();
        ctx.kind = derived;
        ctx
    }

    fn basic_kind(&self, v: VertexId) -> Option<Kind> {
        if self.g.degree(v) != 5 {
            return None;
        }
        Labelings::new(5).find_map(|(s, dir)| {
            let f = Frame::new(self, v, s, dir);
            if f.bad() {
                Some(Kind::Bad)
            } else if f.semibad() {
                Some(Kind::SemiBad)
            } else {
                None
            }
        })
    }

    fn derived_kind(&self, v: VertexId) -> Option<Kind> {
        if self.g.degree(v) != 5 {
            return None;
        }
        Labelings::new(5).find_map(|(s, dir)| Frame::new(self, v, s, dir).derived_kind())
    }
}

/// Start index and direction pairs naming every labelling of a rotation.
pub(crate) struct Labelings {
    d: usize,
    next: usize,
}

impl Labelings {
    pub fn new(d: usize) -> Self {
        Labelings { d, next: 0 }
    }
}

impl Iterator for Labelings {
    type Item = (usize, bool);

    fn next(&mut self) -> Option<(usize, bool)> {
        // Degrees 1 and 2 have only one labelling up to reflection.
        let count = match self.d {
            0 => 0,
            1 | 2 => 1,
            d => 2 * d,
        };
        if self.next >= count {
            return None;
        }
        let k = self.next;
        self.next += 1;
        Some((k % self.d.max(1), k >= self.d))
    }
}

/// A centre vertex with its neighbours labelled `v1..vd`, either clockwise
/// from rotation entry `start` or, when `mirrored`, counter-clockwise.
/// Corner `i` is the angle between `vi` and `v(i+1)`, indices taken mod `d`.
pub(crate) struct Frame<'a, 'g> {
    ctx: &'a Context<'g>,
    pub v: VertexId,
    start: usize,
    mirrored: bool,
    d: usize,
}

impl<'a, 'g> Frame<'a, 'g> {
    pub fn new(ctx: &'a Context<'g>, v: VertexId, start: usize, mirrored: bool) -> Self {
        Frame {
            ctx,
            v,
            start,
            mirrored,
            d: ctx.g.degree(v),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    fn pos(&self, i: usize) -> usize {
        let d = self.d;
        let k = (i + d - 1) % d;
        if self.mirrored {
            (self.start + d - k) % d
        } else {
            (self.start + k) % d
        }
    }

    fn corner_pos(&self, i: usize) -> usize {
        if self.mirrored {
            self.pos(i + 1)
        } else {
            self.pos(i)
        }
    }

    /// Neighbour `vi`, 1-based.
    pub fn nb(&self, i: usize) -> VertexId {
        self.ctx.g.rotation(self.v)[self.pos(i)]
    }

    pub fn deg(&self, i: usize) -> usize {
        self.ctx.g.degree(self.nb(i))
    }

    pub fn len(&self, i: usize) -> usize {
        self.ctx.corner_len[self.v][self.corner_pos(i)]
    }

    pub fn tri(&self, i: usize) -> bool {
        self.len(i) == 3
    }

    pub fn quad(&self, i: usize) -> bool {
        self.len(i) == 4
    }

    pub fn big(&self, i: usize) -> bool {
        self.len(i) >= 5
    }

    /// The edge `vi v(i+1)` lies on two 3-faces.
    pub fn nb2(&self, i: usize) -> bool {
        self.ctx.corner_nb2[self.v][self.corner_pos(i)]
    }

    pub fn kind(&self, i: usize) -> Option<Kind> {
        self.ctx.kind[self.nb(i)]
    }

    pub fn bad_or_semibad(&self, i: usize) -> bool {
        matches!(self.kind(i), Some(Kind::Bad | Kind::SemiBad))
    }

    fn count_nb(&self, pred: impl Fn(usize) -> bool) -> usize {
        (1..=self.d).filter(|&i| pred(self.deg(i))).count()
    }

    pub fn n3(&self) -> usize {
        self.count_nb(|k| k == 3)
    }

    pub fn n4(&self) -> usize {
        self.count_nb(|k| k == 4)
    }

    pub fn n5(&self) -> usize {
        self.count_nb(|k| k == 5)
    }

    /// Neighbours of degree at most four.
    pub fn small_nbs(&self) -> usize {
        self.count_nb(|k| k <= 4)
    }

    pub fn m3(&self) -> usize {
        (1..=self.d).filter(|&i| self.tri(i)).count()
    }

    pub fn m4(&self) -> usize {
        (1..=self.d).filter(|&i| self.quad(i)).count()
    }

    pub fn bigs(&self) -> usize {
        (1..=self.d).filter(|&i| self.big(i)).count()
    }

    /// Number of `i` in `range` with `vi v(i+1)` on two 3-faces.
    pub fn nb2_count(&self, range: std::ops::RangeInclusive<usize>) -> usize {
        range.filter(|&i| self.nb2(i)).count()
    }

    pub fn tris(&self, set: &[usize]) -> bool {
        (1..=self.d).all(|i| self.tri(i) == set.contains(&i))
    }

    pub fn bad(&self) -> bool {
        self.d == 5 && self.tris(&[1, 2, 3, 4]) && self.quad(5)
    }

    pub fn semibad(&self) -> bool {
        self.d == 5 && self.tris(&[1, 2, 3, 4]) && self.big(5)
    }

    pub fn bad_or_semibad_centre(&self) -> bool {
        self.d == 5 && self.tris(&[1, 2, 3, 4])
    }

    /// Face pattern of a strong vertex plus its bad or semi-bad `v2`.
    pub fn strong_core(&self) -> bool {
        self.d == 5 && self.tris(&[1, 2, 4]) && self.bad_or_semibad(2)
    }

    pub fn strong(&self) -> bool {
        self.strong_core() && (self.big(3) || self.big(5))
    }

    pub fn good(&self) -> bool {
        self.d == 5
            && self.tris(&[1, 2, 3])
            && self.kind(2) == Some(Kind::SemiBad)
            && self.nb2(1)
            && self.nb2(2)
    }

    pub fn support(&self) -> bool {
        self.d == 5 && self.tris(&[1, 2]) && self.bad_or_semibad(2)
    }

    fn derived_kind(&self) -> Option<Kind> {
        if self.strong() {
            Some(Kind::Strong)
        } else if self.good() {
            Some(Kind::Good)
        } else if self.support() {
            Some(Kind::Support)
        } else {
            None
        }
    }

    /// The neighbour of `vi` outside `{v, v(i-1), v(i+1)}` when `vi` has degree four.
    pub fn fourth_of(&self, i: usize) -> Option<VertexId> {
        let u = self.nb(i);
        let skip = [self.v, self.nb(i + self.d - 1), self.nb(i + 1)];
        let rest: Vec<VertexId> = self
            .ctx
            .g
            .rotation(u)
            .iter()
            .copied()
            .filter(|w| !skip.contains(w))
            .collect();
        match rest.as_slice() {
            [x] if self.ctx.g.degree(u) == 4 => Some(*x),
            _ => None,
        }
    }

    /// Around the 5-vertex `v3`, walking from `v` towards `v2`, the sequence
    /// `v, v2, x, y, v4`. Returns `(x, y)` when `x y` is a 3-face corner at
    /// `v3`, neither `v2 x` nor `y v4` is, and no corner at `v3` is a 5+-face.
    pub fn fan_at_v3(&self) -> Option<(VertexId, VertexId)> {
        let g = self.ctx.g;
        let w = self.nb(3);
        if g.degree(w) != 5 {
            return None;
        }
        let rot = g.rotation(w);
        let p = g.slot(w, self.v)?;
        let (v2, v4) = (self.nb(2), self.nb(4));
        let step: isize = if rot[(p + 1) % 5] == v2 {
            1
        } else if rot[(p + 4) % 5] == v2 {
            -1
        } else {
            return None;
        };
        let at = |k: isize| rot[((p as isize + step * k).rem_euclid(5)) as usize];
        if at(4) != v4 {
            return None;
        }
        let (x, y) = (at(2), at(3));
        // Corner between walk positions k and k + 1 at w.
        let corner = |k: isize| {
            let a = (p as isize + step * k).rem_euclid(5) as usize;
            let i = if step > 0 { a } else { (a + 4) % 5 };
            self.ctx.corner_len[w][i]
        };
        let lens: Vec<usize> = (0..5).map(corner).collect();
        let ok = lens[0] == 3
            && lens[1] != 3
            && lens[2] == 3
            && lens[3] != 3
            && lens[4] == 3
            && lens.iter().all(|&l| l <= 4);
        ok.then_some((x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelings_cover_both_orientations() {
        assert_eq!(Labelings::new(1).count(), 1);
        assert_eq!(Labelings::new(2).count(), 1);
        assert_eq!(Labelings::new(5).count(), 10);
        assert_eq!(Labelings::new(0).count(), 0);
    }

    #[test]
    fn mirrored_frame_reverses_neighbours_and_corners() {
        let g = crate::generators::named("icosahedron").unwrap();
        let ctx = Context::new(&g);
        let f = Frame::new(&ctx, 0, 0, false);
        let m = Frame::new(&ctx, 0, 0, true);
        let rot = g.rotation(0);
        assert_eq!(f.nb(1), rot[0]);
        assert_eq!(f.nb(2), rot[1]);
        assert_eq!(m.nb(1), rot[0]);
        assert_eq!(m.nb(2), rot[4]);
        for i in 1..=5 {
            assert!(f.tri(i) && m.tri(i));
            assert!(g.has_edge(m.nb(i), m.nb(i + 1)));
        }
    }
}
