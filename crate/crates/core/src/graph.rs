//! Truncated line complexes as combinatorial maps.
//!
//! A vertex rotation lists half-edges anticlockwise; `Open` markers stand for
//! the part of a logarithmic end cut off by the truncation. Corner `k` of a
//! vertex lies between rotation items `k` and `k + 1`. Faces are traced with
//! the face on the right of the direction of travel: from corner `(v, k)` the
//! walk leaves along item `k + 1` and arrives in the corner just after the
//! paired half-edge.

use std::collections::VecDeque;

use crate::base::{BasePointSet, LabelId};
use crate::error::LineComplexError;
use crate::tree::{Parity, TreeInvolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphItem {
    Half(usize),
    /// Cut-off continuation of end `id`.
    Open(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphVertex {
    pub parity: Parity,
    pub on_axis: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKind {
    TwoGon,
    /// Bounded face with the given number of sides, other than two.
    Bounded(usize),
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<(usize, usize)>,
    /// `None` when the corners of the face disagree.
    pub label: Option<LabelId>,
    pub kind: FaceKind,
}

/// Periodic description of a logarithmic end beyond the core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndDescriptor {
    pub id: usize,
    pub attach: usize,
    /// Materialized vertices of the end, outward.
    pub chain: Vec<usize>,
    pub left: LabelId,
    pub right: LabelId,
    pub axial: bool,
    /// Bundle sizes repeating along the end, starting with the bundle
    /// leaving a cross vertex.
    pub period: [usize; 2],
}

/// Everything needed to assemble a graph; faces are derived.
#[derive(Debug, Clone)]
pub struct GraphParts {
    pub base: BasePointSet,
    pub depth: usize,
    pub vertices: Vec<GraphVertex>,
    pub rotation: Vec<Vec<GraphItem>>,
    pub mate: Vec<usize>,
    pub corner_labels: Vec<Vec<LabelId>>,
    pub ends: Vec<EndDescriptor>,
    pub outer: Option<(usize, usize)>,
    pub core_vertices: usize,
    pub axis_orientation: Option<(usize, usize)>,
    pub tree_involution: Option<TreeInvolution>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpeiserGraph {
    base: BasePointSet,
    depth: usize,
    vertices: Vec<GraphVertex>,
    rotation: Vec<Vec<GraphItem>>,
    mate: Vec<usize>,
    half_vertex: Vec<usize>,
    half_pos: Vec<usize>,
    corner_labels: Vec<Vec<LabelId>>,
    corner_face: Vec<Vec<usize>>,
    faces: Vec<Face>,
    ends: Vec<EndDescriptor>,
    outer: Option<(usize, usize)>,
    core_vertices: usize,
    axis_orientation: Option<(usize, usize)>,
    tree_involution: Option<TreeInvolution>,
}

/// Input for [`build_graph`]: labels are given on a few corners and
/// propagated through the cyclic order.
#[derive(Debug, Clone)]
pub struct GraphInput {
    pub base: BasePointSet,
    pub vertices: Vec<GraphVertex>,
    pub rotation: Vec<Vec<GraphItem>>,
    /// Pairs of half-edges forming edges.
    pub pairs: Vec<(usize, usize)>,
    /// `(vertex, corner, label)` seeds.
    pub seeds: Vec<(usize, usize, LabelId)>,
    /// A corner of the outer face of a finite map, if any.
    pub outer: Option<(usize, usize)>,
}

impl SpeiserGraph {
    pub fn from_parts(parts: GraphParts) -> Result<Self, LineComplexError> {
        let GraphParts {
            base,
            depth,
            vertices,
            rotation,
            mate,
            corner_labels,
            ends,
            outer,
            core_vertices,
            axis_orientation,
            tree_involution,
        } = parts;
        let nh = mate.len();
        if rotation.len() != vertices.len() || corner_labels.len() != vertices.len() {
            return Err(LineComplexError::InvalidGraph(
                "rotation and labels must cover every vertex".into(),
            ));
        }
        let (half_vertex, half_pos) = locate_halves(&rotation, nh)?;
        for h in 0..nh {
            let m = mate[h];
            if m >= nh || m == h || mate[m] != h {
                return Err(LineComplexError::DanglingHalfEdge(h));
            }
        }
        for (v, rot) in rotation.iter().enumerate() {
            if corner_labels[v].len() != rot.len() {
                return Err(LineComplexError::InvalidGraph(format!(
                    "vertex {v} has {} corners but {} labels",
                    rot.len(),
                    corner_labels[v].len()
                )));
            }
            if corner_labels[v].iter().any(|&l| l >= base.len()) {
                return Err(LineComplexError::InvalidGraph(format!(
                    "vertex {v} carries an unknown label"
                )));
            }
        }
        let mut g = SpeiserGraph {
            base,
            depth,
            vertices,
            rotation,
            mate,
            half_vertex,
            half_pos,
            corner_labels,
            corner_face: Vec::new(),
            faces: Vec::new(),
            ends,
            outer,
            core_vertices,
            axis_orientation,
            tree_involution,
        };
        g.trace_faces()?;
        Ok(g)
    }

    pub fn to_parts(&self) -> GraphParts {
        GraphParts {
            base: self.base.clone(),
            depth: self.depth,
            vertices: self.vertices.clone(),
            rotation: self.rotation.clone(),
            mate: self.mate.clone(),
            corner_labels: self.corner_labels.clone(),
            ends: self.ends.clone(),
            outer: self.outer,
            core_vertices: self.core_vertices,
            axis_orientation: self.axis_orientation,
            tree_involution: self.tree_involution.clone(),
        }
    }

    /// Next corner on the same face, or `None` when the walk leaves through
    /// an open end.
    pub fn next_corner(&self, v: usize, k: usize) -> Option<(usize, usize)> {
        let d = self.rotation[v].len();
        match self.rotation[v][(k + 1) % d] {
            GraphItem::Open(_) => None,
            GraphItem::Half(h) => {
                let m = self.mate[h];
                Some((self.half_vertex[m], self.half_pos[m]))
            }
        }
    }

    fn trace_faces(&mut self) -> Result<(), LineComplexError> {
        let mut corner_face: Vec<Vec<usize>> = self
            .rotation
            .iter()
            .map(|r| vec![usize::MAX; r.len()])
            .collect();
        let mut faces = Vec::new();
        let mut starts = Vec::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (p, item) in rot.iter().enumerate() {
                if matches!(item, GraphItem::Open(_)) {
                    starts.push((v, p));
                }
            }
        }
        for (v0, k0) in starts {
            let id = faces.len();
            let mut corners = Vec::new();
            let mut cur = Some((v0, k0));
            while let Some((v, k)) = cur {
                if corner_face[v][k] != usize::MAX {
                    return Err(LineComplexError::InvalidGraph(
                        "open face walk revisits a corner".into(),
                    ));
                }
                corner_face[v][k] = id;
                corners.push((v, k));
                cur = self.next_corner(v, k);
            }
            faces.push(self.make_face(corners, FaceKind::Unbounded));
        }
        for v0 in 0..self.rotation.len() {
            for k0 in 0..self.rotation[v0].len() {
                if corner_face[v0][k0] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut corners = Vec::new();
                let (mut v, mut k) = (v0, k0);
                loop {
                    corner_face[v][k] = id;
                    corners.push((v, k));
                    match self.next_corner(v, k) {
                        Some((w, m)) if (w, m) == (v0, k0) => break,
                        Some((w, m)) => {
                            if corner_face[w][m] != usize::MAX {
                                return Err(LineComplexError::InvalidGraph(
                                    "closed face walk merges into another face".into(),
                                ));
                            }
                            v = w;
                            k = m;
                        }
                        None => {
                            return Err(LineComplexError::InvalidGraph(
                                "closed face walk reaches an open end".into(),
                            ))
                        }
                    }
                }
                let outer = self.outer.map(|c| corners.contains(&c)).unwrap_or(false);
                let kind = if outer {
                    FaceKind::Unbounded
                } else if corners.len() == 2 {
                    FaceKind::TwoGon
                } else {
                    FaceKind::Bounded(corners.len())
                };
                faces.push(self.make_face(corners, kind));
            }
        }
        self.corner_face = corner_face;
        self.faces = faces;
        Ok(())
    }

    fn make_face(&self, corners: Vec<(usize, usize)>, kind: FaceKind) -> Face {
        let first = self.corner_labels[corners[0].0][corners[0].1];
        let consistent = corners
            .iter()
            .all(|&(v, k)| self.corner_labels[v][k] == first);
        Face {
            corners,
            label: consistent.then_some(first),
            kind,
        }
    }

    pub fn base(&self) -> &BasePointSet {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn vertices(&self) -> &[GraphVertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn rotation(&self, v: usize) -> &[GraphItem] {
        &self.rotation[v]
    }

    pub fn half_edge_count(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, h: usize) -> usize {
        self.mate[h]
    }

    pub fn half_vertex(&self, h: usize) -> usize {
        self.half_vertex[h]
    }

    pub fn half_pos(&self, h: usize) -> usize {
        self.half_pos[h]
    }

    pub fn corner_label(&self, v: usize, k: usize) -> LabelId {
        self.corner_labels[v][k]
    }

    pub fn corner_face(&self, v: usize, k: usize) -> usize {
        self.corner_face[v][k]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn ends(&self) -> &[EndDescriptor] {
        &self.ends
    }

    pub fn outer(&self) -> Option<(usize, usize)> {
        self.outer
    }

    pub fn core_vertices(&self) -> usize {
        self.core_vertices
    }

    pub fn axis_orientation(&self) -> Option<(usize, usize)> {
        self.axis_orientation
    }

    pub fn tree_involution(&self) -> Option<&TreeInvolution> {
        self.tree_involution.as_ref()
    }

    /// Vertices without an open marker, where the local star is complete.
    pub fn is_interior(&self, v: usize) -> bool {
        !self.rotation[v]
            .iter()
            .any(|i| matches!(i, GraphItem::Open(_)))
    }

    pub fn unbounded_faces(&self) -> impl Iterator<Item = (usize, &Face)> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.kind == FaceKind::Unbounded)
    }

    /// The two distinct vertices of a face, in order of first appearance.
    pub fn face_vertices(&self, face: usize) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for &(v, _) in &self.faces[face].corners {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Copy of the graph with both half-edges of the edge through `h`
    /// removed. The corner after the removed half-edge merges into the one
    /// before it and keeps that label.
    pub fn without_edge(&self, h: usize) -> Result<SpeiserGraph, LineComplexError> {
        let m = self.mate[h];
        let mut parts = self.to_parts();
        for x in [h, m] {
            let v = self.half_vertex[x];
            let pos = parts.rotation[v]
                .iter()
                .position(|&i| i == GraphItem::Half(x))
                .expect("half-edge present");
            parts.rotation[v].remove(pos);
            let d = parts.corner_labels[v].len();
            parts.corner_labels[v].remove(pos % d);
            // corner index pos now holds what used to be pos+1
            if pos == 0 && !parts.corner_labels[v].is_empty() {
                // removed corner 0 merged with the last one; keep "before" label
                let last = self.corner_labels[v][d - 1];
                let n = parts.corner_labels[v].len();
                parts.corner_labels[v][n - 1] = last;
            }
        }
        let renumber = |x: usize| -> usize {
            let lo = h.min(m);
            let hi = h.max(m);
            x - (x > lo) as usize - (x > hi) as usize
        };
        for rot in parts.rotation.iter_mut() {
            for item in rot.iter_mut() {
                if let GraphItem::Half(x) = item {
                    *x = renumber(*x);
                }
            }
        }
        let mate: Vec<usize> = (0..self.mate.len())
            .filter(|&x| x != h && x != m)
            .map(|x| renumber(self.mate[x]))
            .collect();
        parts.mate = mate;
        SpeiserGraph::from_parts(parts)
    }

    /// Copy with the labels of two faces exchanged.
    pub fn with_swapped_face_labels(&self, f1: usize, f2: usize) -> SpeiserGraph {
        let mut g = self.clone();
        let l1 = self.corner_labels_of(f1);
        let l2 = self.corner_labels_of(f2);
        for &(v, k) in &self.faces[f1].corners {
            g.corner_labels[v][k] = l2;
        }
        for &(v, k) in &self.faces[f2].corners {
            g.corner_labels[v][k] = l1;
        }
        g.faces[f1] = g.make_face(self.faces[f1].corners.clone(), self.faces[f1].kind);
        g.faces[f2] = g.make_face(self.faces[f2].corners.clone(), self.faces[f2].kind);
        g
    }

    /// Copy with the face through `face` relabeled.
    pub fn with_face_label(&self, face: usize, label: LabelId) -> SpeiserGraph {
        let mut g = self.clone();
        for &(v, k) in &self.faces[face].corners {
            g.corner_labels[v][k] = label;
        }
        g.faces[face] = g.make_face(self.faces[face].corners.clone(), self.faces[face].kind);
        g
    }

    /// Copy with rotation items `k` and `k + 1` at `v` exchanged; corner
    /// labels stay attached to their indices.
    pub fn with_swapped_items(&self, v: usize, k: usize) -> Result<SpeiserGraph, LineComplexError> {
        let mut parts = self.to_parts();
        let d = parts.rotation[v].len();
        parts.rotation[v].swap(k % d, (k + 1) % d);
        SpeiserGraph::from_parts(parts)
    }

    /// Copy over a new base set, with corner `(v, k)` relabeled to
    /// `relabel(v, k, old)`.
    pub fn with_labels(
        &self,
        base: BasePointSet,
        relabel: impl Fn(usize, usize, LabelId) -> LabelId,
    ) -> Result<SpeiserGraph, LineComplexError> {
        let mut parts = self.to_parts();
        for v in 0..parts.corner_labels.len() {
            for k in 0..parts.corner_labels[v].len() {
                parts.corner_labels[v][k] = relabel(v, k, self.corner_labels[v][k]);
            }
        }
        parts.base = base;
        let mut g = SpeiserGraph::from_parts(parts)?;
        // end flanks follow the faces they border
        for i in 0..g.ends.len() {
            let lf = self.corner_face_of_end_left(&self.ends[i]);
            let rf = self.corner_face_of_end_right(&self.ends[i]);
            let (lv, lk) = self.faces[lf].corners[0];
            let (rv, rk) = self.faces[rf].corners[0];
            g.ends[i].left = g.corner_labels[lv][lk];
            g.ends[i].right = g.corner_labels[rv][rk];
        }
        Ok(g)
    }

    fn corner_labels_of(&self, face: usize) -> LabelId {
        let (v, k) = self.faces[face].corners[0];
        self.corner_labels[v][k]
    }

    /// Face on the left of an end looking outward.
    pub fn corner_face_of_end_left(&self, end: &EndDescriptor) -> usize {
        let (v, k) = self.open_position(end.id).unwrap_or((end.attach, 0));
        self.corner_face[v][k]
    }

    /// Face on the right of an end looking outward.
    pub fn corner_face_of_end_right(&self, end: &EndDescriptor) -> usize {
        let (v, k) = self.open_position(end.id).unwrap_or((end.attach, 0));
        let d = self.rotation[v].len();
        self.corner_face[v][(k + d - 1) % d]
    }

    /// Vertex and rotation position of the open marker of end `id`.
    pub fn open_position(&self, id: usize) -> Option<(usize, usize)> {
        for (v, rot) in self.rotation.iter().enumerate() {
            if let Some(p) = rot.iter().position(|&i| i == GraphItem::Open(id)) {
                return Some((v, p));
            }
        }
        None
    }

    /// Corner labels for a face, as stored (one per corner).
    pub fn face_label(&self, face: usize) -> Option<LabelId> {
        self.faces[face].label
    }
}

fn locate_halves(
    rotation: &[Vec<GraphItem>],
    nh: usize,
) -> Result<(Vec<usize>, Vec<usize>), LineComplexError> {
    let mut half_vertex = vec![usize::MAX; nh];
    let mut half_pos = vec![usize::MAX; nh];
    for (v, rot) in rotation.iter().enumerate() {
        for (p, item) in rot.iter().enumerate() {
            if let GraphItem::Half(h) = *item {
                if h >= nh {
                    return Err(LineComplexError::DanglingHalfEdge(h));
                }
                if half_vertex[h] != usize::MAX {
                    return Err(LineComplexError::InvalidGraph(format!(
                        "half-edge {h} appears twice"
                    )));
                }
                half_vertex[h] = v;
                half_pos[h] = p;
            }
        }
    }
    if let Some(h) = half_vertex.iter().position(|&v| v == usize::MAX) {
        return Err(LineComplexError::DanglingHalfEdge(h));
    }
    Ok((half_vertex, half_pos))
}

/// Assemble a graph from rotations and pairings, propagating seed labels
/// through the cyclic order of the base points.
pub fn build_graph(input: GraphInput) -> Result<SpeiserGraph, LineComplexError> {
    let GraphInput {
        base,
        vertices,
        rotation,
        pairs,
        seeds,
        outer,
    } = input;
    let nh: usize = rotation
        .iter()
        .flatten()
        .filter(|i| matches!(i, GraphItem::Half(_)))
        .count();
    let mut mate = vec![usize::MAX; nh];
    for &(a, b) in &pairs {
        if a >= nh || b >= nh || a == b || mate[a] != usize::MAX || mate[b] != usize::MAX {
            return Err(LineComplexError::InvalidGraph(format!(
                "bad pairing ({a}, {b})"
            )));
        }
        mate[a] = b;
        mate[b] = a;
    }
    if let Some(h) = mate.iter().position(|&m| m == usize::MAX) {
        return Err(LineComplexError::DanglingHalfEdge(h));
    }
    // trace faces with placeholder labels, then fill them in
    let placeholder: Vec<Vec<LabelId>> = rotation.iter().map(|r| vec![0; r.len()]).collect();
    let mut ends = Vec::new();
    for (v, rot) in rotation.iter().enumerate() {
        for item in rot {
            if let GraphItem::Open(id) = *item {
                ends.push(EndDescriptor {
                    id,
                    attach: v,
                    chain: Vec::new(),
                    left: 0,
                    right: 0,
                    axial: vertices[v].on_axis,
                    period: [0, 0],
                });
            }
        }
    }
    ends.sort_by_key(|e| e.id);
    let skeleton = SpeiserGraph::from_parts(GraphParts {
        base: base.clone(),
        depth: 0,
        vertices: vertices.clone(),
        rotation: rotation.clone(),
        mate: mate.clone(),
        corner_labels: placeholder,
        ends,
        outer,
        core_vertices: vertices.len(),
        axis_orientation: None,
        tree_involution: None,
    })?;
    let labels = propagate_labels(&skeleton, &seeds)?;
    let mut parts = skeleton.to_parts();
    parts.corner_labels = labels;
    let mut g = SpeiserGraph::from_parts(parts)?;
    for i in 0..g.ends.len() {
        let end = g.ends[i].clone();
        let lf = g.corner_face_of_end_left(&end);
        let rf = g.corner_face_of_end_right(&end);
        g.ends[i].left = g.corner_labels_of(lf);
        g.ends[i].right = g.corner_labels_of(rf);
        let q = g.base.q();
        let step = g.base.gap(g.ends[i].right, g.ends[i].left);
        g.ends[i].period = [step, q - step];
    }
    Ok(g)
}

fn propagate_labels(
    g: &SpeiserGraph,
    seeds: &[(usize, usize, LabelId)],
) -> Result<Vec<Vec<LabelId>>, LineComplexError> {
    let q = g.base.q();
    let nf = g.faces.len();
    let mut face_slot: Vec<Option<usize>> = vec![None; nf];
    let mut face_label: Vec<Option<LabelId>> = vec![None; nf];
    let mut queue = VecDeque::new();
    for &(v, k, l) in seeds {
        if v >= g.rotation.len() || k >= g.rotation[v].len() || l >= g.base.len() {
            return Err(LineComplexError::InvalidGraph(format!(
                "seed ({v}, {k}) is out of range"
            )));
        }
        let f = g.corner_face[v][k];
        let s = g.base.slot(l);
        if face_slot[f].is_some_and(|x| x != s) || face_label[f].is_some_and(|x| x != l) {
            return Err(LineComplexError::UnlabelableFace {
                vertex: v,
                corner: k,
            });
        }
        face_slot[f] = Some(s);
        face_label[f] = Some(l);
        queue.push_back(f);
    }
    while let Some(f) = queue.pop_front() {
        let s = face_slot[f].expect("queued faces carry a slot");
        for &(v, k) in &g.faces[f].corners {
            let d = g.rotation[v].len();
            let step = match g.vertices[v].parity {
                Parity::Cross => 1,
                Parity::Circle => q - 1,
            };
            // across item k+1 the next corner is k+1; across item k the previous is k-1
            let neighbors = [
                ((k + 1) % d, (k + 1) % d, (s + step) % q),
                ((k + d - 1) % d, k, (s + q - step) % q),
            ];
            for (corner, item, slot) in neighbors {
                if matches!(g.rotation[v][item], GraphItem::Open(_)) {
                    continue;
                }
                let nf2 = g.corner_face[v][corner];
                match face_slot[nf2] {
                    Some(x) if x != slot => {
                        return Err(LineComplexError::UnlabelableFace { vertex: v, corner })
                    }
                    Some(_) => {}
                    None => {
                        face_slot[nf2] = Some(slot);
                        queue.push_back(nf2);
                    }
                }
            }
        }
    }
    let mut labels: Vec<Vec<LabelId>> = g.rotation.iter().map(|r| vec![0; r.len()]).collect();
    for f in 0..nf {
        let (v0, k0) = g.faces[f].corners[0];
        let label = match (face_label[f], face_slot[f]) {
            (Some(l), _) => l,
            (None, Some(s)) => {
                let mut it = g.base.labels_in_slot(s);
                match (it.next(), it.next()) {
                    (Some(l), None) => l,
                    _ => {
                        return Err(LineComplexError::UnlabelableFace {
                            vertex: v0,
                            corner: k0,
                        })
                    }
                }
            }
            (None, None) => {
                return Err(LineComplexError::UnlabelableFace {
                    vertex: v0,
                    corner: k0,
                })
            }
        };
        for &(v, k) in &g.faces[f].corners {
            labels[v][k] = label;
        }
    }
    Ok(labels)
}

/// Outcome of one property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(Vec<Witness>),
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }

    fn from_witnesses(w: Vec<Witness>) -> Self {
        if w.is_empty() {
            Check::Pass
        } else {
            Check::Fail(w)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    Vertex(usize),
    HalfEdge(usize),
    Face(usize),
    End(usize),
}

/// Per-property result of [`validate_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Every edge joins a cross to a circle.
    pub bipartite: Check,
    /// Each interior vertex sees all q labels once.
    pub full_star: Check,
    /// Labels run in base order around crosses, reversed around circles.
    pub cyclic_order: Check,
    /// Every bounded face is a 2-gon.
    pub two_gons: Check,
    /// Unbounded faces are exactly the ends.
    pub finite_unbounded: Check,
    /// Boundary vertices, where the star checks do not apply.
    pub unchecked: Vec<usize>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.passed())
    }

    pub fn checks(&self) -> [(u8, &Check); 5] {
        [
            (1, &self.bipartite),
            (2, &self.full_star),
            (3, &self.cyclic_order),
            (4, &self.two_gons),
            (5, &self.finite_unbounded),
        ]
    }
}

/// Check the five line-complex properties on a truncation.
pub fn validate_axioms(g: &SpeiserGraph) -> AxiomReport {
    let q = g.base.q();
    let mut bip = Vec::new();
    for h in 0..g.mate.len() {
        let m = g.mate[h];
        if h < m && g.vertices[g.half_vertex[h]].parity == g.vertices[g.half_vertex[m]].parity {
            bip.push(Witness::HalfEdge(h));
        }
    }

    let mut star = Vec::new();
    let mut order = Vec::new();
    let mut unchecked = Vec::new();
    for v in 0..g.vertices.len() {
        if !g.is_interior(v) {
            unchecked.push(v);
            continue;
        }
        let slots: Vec<usize> = g.corner_labels[v].iter().map(|&l| g.base.slot(l)).collect();
        let mut seen = vec![false; q];
        let mut distinct = slots.len() == q;
        for &s in &slots {
            if seen[s] {
                distinct = false;
            }
            seen[s] = true;
        }
        let faces_distinct = {
            let mut fs: Vec<usize> = g.corner_face[v].clone();
            fs.sort_unstable();
            fs.dedup();
            fs.len() == slots.len()
        };
        if !distinct || !faces_distinct {
            star.push(Witness::Vertex(v));
        }
        let step = match g.vertices[v].parity {
            Parity::Cross => 1,
            Parity::Circle => q - 1,
        };
        let d = slots.len();
        let ordered = (0..d).all(|k| slots[(k + 1) % d] == (slots[k] + step) % q);
        if !ordered {
            order.push(Witness::Vertex(v));
        }
    }
    for (f, face) in g.faces.iter().enumerate() {
        if face.label.is_none() {
            order.push(Witness::Face(f));
        }
    }

    let mut gons = Vec::new();
    for (f, face) in g.faces.iter().enumerate() {
        if let FaceKind::Bounded(_) = face.kind {
            gons.push(Witness::Face(f));
        } else if face.kind == FaceKind::TwoGon && g.face_vertices(f).len() != 2 {
            gons.push(Witness::Face(f));
        }
    }

    let unbounded = g.unbounded_faces().count();
    let expected = g.ends.len() + usize::from(g.outer.is_some());
    let mut fin = Vec::new();
    if unbounded != expected {
        fin.extend(g.unbounded_faces().map(|(f, _)| Witness::Face(f)));
        if fin.is_empty() {
            fin.extend(g.ends.iter().map(|e| Witness::End(e.id)));
        }
    }

    AxiomReport {
        bipartite: Check::from_witnesses(bip),
        full_star: Check::from_witnesses(star),
        cyclic_order: Check::from_witnesses(order),
        two_gons: Check::from_witnesses(gons),
        finite_unbounded: Check::from_witnesses(fin),
        unchecked,
    }
}

/// Faces that are 2-gons labeled `0`, with whether both vertices lie on the
/// axis.
pub fn zero_faces(g: &SpeiserGraph) -> Result<Vec<(usize, bool)>, LineComplexError> {
    let zero = g.base.zero().ok_or(LineComplexError::NoZeroLabel)?;
    Ok(g.faces
        .iter()
        .enumerate()
        .filter(|(_, f)| f.kind == FaceKind::TwoGon && f.label == Some(zero))
        .map(|(i, _)| {
            let on_axis = g.face_vertices(i).iter().all(|&v| g.vertices[v].on_axis);
            (i, on_axis)
        })
        .collect())
}
