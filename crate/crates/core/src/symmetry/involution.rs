//! Orientation-reversing involutions of a labeled map.

use crate::base::LabelId;
use crate::graph::{Check, GraphItem, SpeiserGraph, Witness};

/// A reflection of the graph. Vertex `v` goes to `vertices[v]`; rotation
/// item `k` of `v` goes to item `offset[v] - k` of the image, so corner `k`
/// goes to corner `offset[v] - k - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    pub vertices: Vec<usize>,
    pub offset: Vec<usize>,
    pub halves: Vec<usize>,
    pub ends: Vec<usize>,
}

impl Involution {
    pub fn corner_image(&self, g: &SpeiserGraph, v: usize, k: usize) -> (usize, usize) {
        let d = g.rotation(v).len();
        let w = self.vertices[v];
        (w, (self.offset[v] + 2 * d - k - 1) % d)
    }

    pub fn item_image(&self, g: &SpeiserGraph, v: usize, k: usize) -> (usize, usize) {
        let d = g.rotation(v).len();
        (self.vertices[v], (self.offset[v] + d - k % d) % d)
    }

    /// Image of face `f`.
    pub fn face_image(&self, g: &SpeiserGraph, f: usize) -> usize {
        let (v, k) = g.faces()[f].corners[0];
        let (w, c) = self.corner_image(g, v, k);
        g.corner_face(w, c)
    }

    pub fn fixes_face(&self, g: &SpeiserGraph, f: usize) -> bool {
        self.face_image(g, f) == f
    }

    /// Whether the rotation item at `(v, k)` lies on the axis.
    pub fn fixes_item(&self, g: &SpeiserGraph, v: usize, k: usize) -> bool {
        self.item_image(g, v, k) == (v, k)
    }

    pub fn fixes_end(&self, id: usize) -> bool {
        self.ends.get(id).is_some_and(|&e| e == id)
    }
}

fn conj_label(g: &SpeiserGraph, l: LabelId) -> Option<LabelId> {
    g.base().conj(l)
}

/// Try the reflection sending vertex `v0` to `w0` with item 0 going to
/// item `j`, propagating along edges.
#[allow(clippy::needless_range_loop)]
fn propagate(g: &SpeiserGraph, v0: usize, w0: usize, j: usize) -> Option<Involution> {
    let n = g.vertex_count();
    let mut vertices = vec![usize::MAX; n];
    let mut offset = vec![0usize; n];
    let mut halves = vec![usize::MAX; g.half_edge_count()];
    let mut ends = vec![usize::MAX; g.ends().iter().map(|e| e.id + 1).max().unwrap_or(0)];
    let mut stack = vec![(v0, w0, j)];
    while let Some((v, w, c)) = stack.pop() {
        if vertices[v] != usize::MAX {
            if vertices[v] != w || offset[v] != c {
                return None;
            }
            continue;
        }
        let rv = g.rotation(v);
        let rw = g.rotation(w);
        let d = rv.len();
        if rw.len() != d || g.vertices()[v].parity != g.vertices()[w].parity {
            return None;
        }
        vertices[v] = w;
        offset[v] = c % d;
        for k in 0..d {
            let kk = (c + d - k) % d;
            let corner_img = (c + 2 * d - k - 1) % d;
            let lv = g.corner_label(v, k);
            if conj_label(g, lv) != Some(g.corner_label(w, corner_img)) {
                return None;
            }
            match (rv[k], rw[kk]) {
                (GraphItem::Open(x), GraphItem::Open(y)) => {
                    if ends[x] != usize::MAX && ends[x] != y {
                        return None;
                    }
                    ends[x] = y;
                }
                (GraphItem::Half(h), GraphItem::Half(h2)) => {
                    if halves[h] != usize::MAX && halves[h] != h2 {
                        return None;
                    }
                    halves[h] = h2;
                    let m = g.mate(h);
                    let m2 = g.mate(h2);
                    let u = g.half_vertex(m);
                    let u2 = g.half_vertex(m2);
                    let du = g.rotation(u).len();
                    let cu = (g.half_pos(m) + g.half_pos(m2)) % du;
                    stack.push((u, u2, cu));
                }
                _ => return None,
            }
        }
    }
    if vertices.contains(&usize::MAX) {
        return None;
    }
    // every end attached to a mapped vertex got an image
    for e in g.ends() {
        if ends[e.id] == usize::MAX {
            return None;
        }
    }
    Some(Involution {
        vertices,
        offset,
        halves,
        ends,
    })
}

/// Per-invariant outcome of [`check_symmetry`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    /// s∘s is the identity on vertices, half-edges and ends.
    pub involutive: Check,
    /// Parity kept, rotations reversed, pairing respected.
    pub orientation_reversing: Check,
    /// Corner labels go to conjugate labels.
    pub labels_conjugated: Check,
    /// Fixed vertices are exactly the on-axis vertices.
    pub fixed_locus: Check,
    /// An end meeting the axis lies in it.
    pub ends_in_axis: Check,
    /// No edge crosses the axis.
    pub edges_off_axis: Check,
}

impl SymmetryReport {
    pub fn all_pass(&self) -> bool {
        [
            &self.involutive,
            &self.orientation_reversing,
            &self.labels_conjugated,
            &self.fixed_locus,
            &self.ends_in_axis,
            &self.edges_off_axis,
        ]
        .iter()
        .all(|c| c.passed())
    }
}

fn check(w: Vec<Witness>) -> Check {
    if w.is_empty() {
        Check::Pass
    } else {
        Check::Fail(w)
    }
}

/// Check each involution invariant separately.
pub fn check_symmetry(g: &SpeiserGraph, s: &Involution) -> SymmetryReport {
    let n = g.vertex_count();
    let nh = g.half_edge_count();
    let shape_ok = s.vertices.len() == n
        && s.offset.len() == n
        && s.halves.len() == nh
        && s.vertices.iter().all(|&w| w < n)
        && s.halves.iter().all(|&h| h < nh)
        && g.ends().iter().all(|e| s.ends.get(e.id).is_some());
    if !shape_ok {
        let all = Check::Fail(vec![Witness::Vertex(0)]);
        return SymmetryReport {
            involutive: all.clone(),
            orientation_reversing: all.clone(),
            labels_conjugated: all.clone(),
            fixed_locus: all.clone(),
            ends_in_axis: all.clone(),
            edges_off_axis: all,
        };
    }

    let mut inv = Vec::new();
    for v in 0..n {
        if s.vertices[s.vertices[v]] != v {
            inv.push(Witness::Vertex(v));
        }
    }
    for h in 0..nh {
        if s.halves[s.halves[h]] != h {
            inv.push(Witness::HalfEdge(h));
        }
    }
    for e in g.ends() {
        let img = s.ends[e.id];
        if s.ends.get(img) != Some(&e.id) {
            inv.push(Witness::End(e.id));
        }
    }

    let mut orient = Vec::new();
    let mut labels = Vec::new();
    for v in 0..n {
        let w = s.vertices[v];
        let d = g.rotation(v).len();
        if g.rotation(w).len() != d || g.vertices()[v].parity != g.vertices()[w].parity {
            orient.push(Witness::Vertex(v));
            continue;
        }
        for k in 0..d {
            let (_, kk) = s.item_image(g, v, k);
            let ok = match (g.rotation(v)[k], g.rotation(w)[kk]) {
                (GraphItem::Half(h), GraphItem::Half(h2)) => s.halves[h] == h2,
                (GraphItem::Open(x), GraphItem::Open(y)) => s.ends[x] == y,
                _ => false,
            };
            if !ok {
                orient.push(Witness::Vertex(v));
                break;
            }
            let (_, c) = s.corner_image(g, v, k);
            if g.base().conj(g.corner_label(v, k)) != Some(g.corner_label(w, c)) {
                labels.push(Witness::Vertex(v));
            }
        }
    }
    for h in 0..nh {
        if s.halves[g.mate(h)] != g.mate(s.halves[h]) {
            orient.push(Witness::HalfEdge(h));
        }
    }
    labels.dedup();

    let mut fixed = Vec::new();
    for v in 0..n {
        if (s.vertices[v] == v) != g.vertices()[v].on_axis {
            fixed.push(Witness::Vertex(v));
        }
    }

    let mut ends_axis = Vec::new();
    for e in g.ends() {
        let fixed_end = s.ends[e.id] == e.id;
        let chain_on = e.chain.iter().filter(|&&c| g.vertices()[c].on_axis).count();
        let meets = fixed_end || chain_on > 0;
        let inside = fixed_end && chain_on == e.chain.len() && g.vertices()[e.attach].on_axis;
        if meets && !inside {
            ends_axis.push(Witness::End(e.id));
        }
    }

    let mut crossing = Vec::new();
    for h in 0..nh {
        if s.halves[h] == g.mate(h) && h < g.mate(h) {
            crossing.push(Witness::HalfEdge(h));
        }
    }

    SymmetryReport {
        involutive: check(inv),
        orientation_reversing: check(orient),
        labels_conjugated: check(labels),
        fixed_locus: check(fixed),
        ends_in_axis: check(ends_axis),
        edges_off_axis: check(crossing),
    }
}

/// First reflection, in canonical anchor order, satisfying every involution
/// invariant. Requires a symmetric base point set.
pub fn find_involution(g: &SpeiserGraph) -> Option<Involution> {
    if !g.base().symmetric() || g.vertex_count() == 0 {
        return None;
    }
    let v0 = 0;
    let d0 = g.rotation(v0).len();
    for w0 in 0..g.vertex_count() {
        if g.vertices()[w0].parity != g.vertices()[v0].parity || g.rotation(w0).len() != d0 {
            continue;
        }
        for j in 0..d0 {
            if let Some(s) = propagate(g, v0, w0, j) {
                if check_symmetry(g, &s).all_pass() {
                    return Some(s);
                }
            }
        }
    }
    None
}
