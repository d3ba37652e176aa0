//! The compact form of a line complex: the tree left after dropping multiple
//! edges, with logarithmic ends kept as stubs.

use std::collections::VecDeque;

use crate::base::{BasePointSet, LabelId};
use crate::error::LineComplexError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Cross,
    Circle,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Cross => Parity::Circle,
            Parity::Circle => Parity::Cross,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Parity::Cross => 'x',
            Parity::Circle => 'o',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeVertex {
    pub parity: Parity,
    pub on_axis: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
}

impl TreeEdge {
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeItem {
    Edge(usize),
    End(usize),
}

/// A logarithmic end stub. Flanks are the unbounded faces on the left and on
/// the right when looking outward along the end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEnd {
    pub at: usize,
    pub left: LabelId,
    pub right: LabelId,
    pub axial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeInvolution {
    pub vertices: Vec<usize>,
    pub ends: Vec<usize>,
}

/// Unbounded face of the tree, running from one end to the next one around
/// infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeFace {
    pub label: LabelId,
    pub from_end: usize,
    pub to_end: usize,
    pub corners: Vec<(usize, usize)>,
}

/// Raw parts of a tree before validation.
#[derive(Debug, Clone)]
pub struct TreeParts {
    pub base: BasePointSet,
    pub vertices: Vec<TreeVertex>,
    pub edges: Vec<TreeEdge>,
    pub rotation: Vec<Vec<TreeItem>>,
    pub ends: Vec<TreeEnd>,
    pub axis_orientation: Option<(usize, usize)>,
    pub involution: Option<TreeInvolution>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpeiserTree {
    base: BasePointSet,
    vertices: Vec<TreeVertex>,
    edges: Vec<TreeEdge>,
    rotation: Vec<Vec<TreeItem>>,
    ends: Vec<TreeEnd>,
    axis_orientation: Option<(usize, usize)>,
    involution: Option<TreeInvolution>,
    corners: Vec<Vec<LabelId>>,
    faces: Vec<TreeFace>,
}

/// Summary of one logarithmic end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndSummary {
    pub id: usize,
    pub at: usize,
    pub left: LabelId,
    pub right: LabelId,
    pub axial: bool,
}

fn invalid(msg: impl Into<String>) -> LineComplexError {
    LineComplexError::InvalidTree(msg.into())
}

impl SpeiserTree {
    /// Validates all tree invariants. Edge ids are renumbered in order of
    /// their sorted endpoint pairs.
    pub fn new(parts: TreeParts) -> Result<Self, LineComplexError> {
        let TreeParts {
            base,
            vertices,
            mut edges,
            mut rotation,
            ends,
            axis_orientation,
            involution,
        } = parts;
        let nv = vertices.len();
        if nv == 0 {
            return Err(invalid("tree has no vertices"));
        }
        if rotation.len() != nv {
            return Err(invalid("one rotation per vertex required"));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.a >= nv || e.b >= nv || e.a == e.b {
                return Err(invalid(format!("edge {i} has bad endpoints")));
            }
            if vertices[e.a].parity == vertices[e.b].parity {
                return Err(invalid(format!("edge {i} joins vertices of equal parity")));
            }
        }
        for (i, end) in ends.iter().enumerate() {
            if end.at >= nv {
                return Err(invalid(format!("end {i} attached to unknown vertex")));
            }
            if end.left >= base.len() || end.right >= base.len() {
                return Err(invalid(format!("end {i} has an unknown flank label")));
            }
        }

        // canonical edge numbering
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by_key(|&i| (edges[i].a.min(edges[i].b), edges[i].a.max(edges[i].b)));
        let mut renumber = vec![0; edges.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        edges = order.iter().map(|&i| edges[i]).collect();
        for rot in rotation.iter_mut() {
            for item in rot.iter_mut() {
                if let TreeItem::Edge(e) = item {
                    if *e >= renumber.len() {
                        return Err(invalid(format!("rotation references unknown edge {e}")));
                    }
                    *e = renumber[*e];
                }
            }
        }

        // every item exactly once, at the right vertex
        let mut edge_seen = vec![0u8; edges.len()];
        let mut end_seen = vec![false; ends.len()];
        for (v, rot) in rotation.iter().enumerate() {
            for item in rot {
                match *item {
                    TreeItem::Edge(e) => {
                        if edges[e].a != v && edges[e].b != v {
                            return Err(invalid(format!(
                                "edge {e} listed at non-incident vertex {v}"
                            )));
                        }
                        edge_seen[e] += 1;
                    }
                    TreeItem::End(x) => {
                        if x >= ends.len() || ends[x].at != v || end_seen[x] {
                            return Err(invalid(format!(
                                "end {x} misplaced in rotation of vertex {v}"
                            )));
                        }
                        end_seen[x] = true;
                    }
                }
            }
        }
        if edge_seen.iter().any(|&c| c != 2) {
            return Err(invalid("every edge must appear once at each endpoint"));
        }
        if end_seen.iter().any(|s| !s) {
            return Err(invalid("every end must appear in its vertex rotation"));
        }

        if edges.len() + 1 != nv || !connected(nv, &edges) {
            return Err(invalid("edges must form a spanning tree"));
        }
        if ends.len() < 2 {
            return Err(LineComplexError::TooFewEnds(ends.len()));
        }
        if ends.iter().filter(|e| e.axial).count() > 2 {
            return Err(invalid("more than two axial ends"));
        }
        let q = base.q();
        for (v, rot) in rotation.iter().enumerate() {
            if rot.len() < 2 || rot.len() > q {
                return Err(invalid(format!(
                    "vertex {v} has degree {} outside [2, {q}]",
                    rot.len()
                )));
            }
        }
        if let Some((a, b)) = axis_orientation {
            if a >= nv || b >= nv || !vertices[a].on_axis || !vertices[b].on_axis {
                return Err(invalid("axis orientation must name two axis vertices"));
            }
        }
        if let Some(inv) = &involution {
            if inv.vertices.len() != nv || inv.ends.len() != ends.len() {
                return Err(invalid("involution does not cover all vertices and ends"));
            }
            if inv.vertices.iter().any(|&w| w >= nv) || inv.ends.iter().any(|&w| w >= ends.len()) {
                return Err(invalid("involution maps outside the tree"));
            }
        }

        let mut tree = SpeiserTree {
            base,
            vertices,
            edges,
            rotation,
            ends,
            axis_orientation,
            involution,
            corners: Vec::new(),
            faces: Vec::new(),
        };
        tree.trace_faces()?;
        Ok(tree)
    }

    fn trace_faces(&mut self) -> Result<(), LineComplexError> {
        let total: usize = self.rotation.iter().map(Vec::len).sum();
        let mut corners: Vec<Vec<Option<LabelId>>> =
            self.rotation.iter().map(|r| vec![None; r.len()]).collect();
        let mut faces = Vec::new();
        let mut visited = 0usize;
        // start at the corner just after each end stub, in end order
        for (e_in, end) in self.ends.iter().enumerate() {
            let v0 = end.at;
            let p = self.position(v0, TreeItem::End(e_in));
            let label = end.left;
            let (mut v, mut k) = (v0, p);
            let mut walk = Vec::new();
            loop {
                if corners[v][k].is_some() {
                    return Err(invalid("face walk revisits a corner"));
                }
                corners[v][k] = Some(label);
                walk.push((v, k));
                visited += 1;
                if visited > total {
                    return Err(invalid("face walk does not terminate"));
                }
                let d = self.rotation[v].len();
                match self.rotation[v][(k + 1) % d] {
                    TreeItem::End(e_out) => {
                        if self.ends[e_out].right != label {
                            return Err(invalid(format!(
                                "circular consistency: end {e_out} right flank `{}` differs from end {e_in} left flank `{}`",
                                self.base.name(self.ends[e_out].right),
                                self.base.name(label)
                            )));
                        }
                        faces.push(TreeFace {
                            label,
                            from_end: e_in,
                            to_end: e_out,
                            corners: walk,
                        });
                        break;
                    }
                    TreeItem::Edge(e) => {
                        let w = self.edges[e].other(v);
                        k = self.position(w, TreeItem::Edge(e));
                        v = w;
                    }
                }
            }
        }
        if visited != total {
            return Err(invalid("some corners lie on no unbounded face"));
        }
        self.corners = corners
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|l| l.expect("all corners visited"))
                    .collect()
            })
            .collect();
        self.faces = faces;
        Ok(())
    }

    pub fn position(&self, v: usize, item: TreeItem) -> usize {
        self.rotation[v]
            .iter()
            .position(|&i| i == item)
            .expect("item present in rotation")
    }

    pub fn base(&self) -> &BasePointSet {
        &self.base
    }

    pub fn vertices(&self) -> &[TreeVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn rotation(&self, v: usize) -> &[TreeItem] {
        &self.rotation[v]
    }

    pub fn ends(&self) -> &[TreeEnd] {
        &self.ends
    }

    pub fn faces(&self) -> &[TreeFace] {
        &self.faces
    }

    pub fn axis_orientation(&self) -> Option<(usize, usize)> {
        self.axis_orientation
    }

    pub fn involution(&self) -> Option<&TreeInvolution> {
        self.involution.as_ref()
    }

    /// Label of the corner between items `k` and `k + 1` at `v`.
    pub fn corner_label(&self, v: usize, k: usize) -> LabelId {
        self.corners[v][k]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Bundle size each rotation item expands to: the cyclic gap between the
    /// corner labels on either side (anticlockwise at crosses, clockwise at
    /// circles). Fails unless the labels wind exactly once around the base
    /// order.
    pub fn gaps(&self, v: usize) -> Result<Vec<usize>, LineComplexError> {
        let d = self.rotation[v].len();
        let parity = self.vertices[v].parity;
        let mut gaps = Vec::with_capacity(d);
        for k in 0..d {
            let before = self.corners[v][(k + d - 1) % d];
            let after = self.corners[v][k];
            let g = match parity {
                Parity::Cross => self.base.gap(before, after),
                Parity::Circle => self.base.gap(after, before),
            };
            if g == 0 {
                return Err(LineComplexError::ZeroGap { vertex: v });
            }
            gaps.push(g);
        }
        let winding: usize = gaps.iter().sum();
        if winding != self.base.q() {
            return Err(LineComplexError::WindingMismatch {
                vertex: v,
                winding,
                q: self.base.q(),
            });
        }
        Ok(gaps)
    }

    pub fn into_parts(self) -> TreeParts {
        TreeParts {
            base: self.base,
            vertices: self.vertices,
            edges: self.edges,
            rotation: self.rotation,
            ends: self.ends,
            axis_orientation: self.axis_orientation,
            involution: self.involution,
        }
    }

    pub fn to_parts(&self) -> TreeParts {
        self.clone().into_parts()
    }
}

fn connected(nv: usize, edges: &[TreeEdge]) -> bool {
    let mut adj = vec![Vec::new(); nv];
    for e in edges {
        adj[e.a].push(e.b);
        adj[e.b].push(e.a);
    }
    let mut seen = vec![false; nv];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == nv
}

/// Number and description of the logarithmic ends.
pub fn logarithmic_ends(tree: &SpeiserTree) -> (usize, Vec<EndSummary>) {
    let ends: Vec<EndSummary> = tree
        .ends()
        .iter()
        .enumerate()
        .map(|(id, e)| EndSummary {
            id,
            at: e.at,
            left: e.left,
            right: e.right,
            axial: e.axial,
        })
        .collect();
    debug_assert_eq!(ends.len(), tree.faces().len());
    (ends.len(), ends)
}

/// Degree of the polynomial whose Schwarzian equation the tree encodes.
pub fn infer_degree(tree: &SpeiserTree) -> Result<usize, LineComplexError> {
    let n = tree.ends().len();
    if n < 2 {
        return Err(LineComplexError::TooFewEnds(n));
    }
    Ok(n - 2)
}
