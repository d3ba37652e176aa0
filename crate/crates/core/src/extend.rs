//! Passing between a tree and its line complex: every tree edge becomes a
//! bundle of parallel edges whose size is the gap between the flanking
//! labels, and every end grows a periodic chain of vertices.

use std::collections::HashMap;

use crate::base::LabelId;
use crate::error::LineComplexError;
use crate::graph::{EndDescriptor, GraphItem, GraphParts, GraphVertex, SpeiserGraph};
use crate::tree::{
    Parity, SpeiserTree, TreeEdge, TreeEnd, TreeInvolution, TreeItem, TreeParts, TreeVertex,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Link {
    Edge(usize),
    /// Step `t` of the chain of end `x`; step 0 leaves the attachment vertex.
    Chain(usize, usize),
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Link(Link),
    Open(usize),
}

/// Expanded vertex before half-edges are allocated: items with corner
/// labels, corner `k` after item `k`.
struct Star {
    parity: Parity,
    on_axis: bool,
    items: Vec<Slot>,
    corners: Vec<LabelId>,
}

/// Extend a tree to its line complex, materializing `depth` periods (two
/// vertices each) of every logarithmic end.
pub fn extend_tree(tree: &SpeiserTree, depth: usize) -> Result<SpeiserGraph, LineComplexError> {
    let base = tree.base();
    let nv = tree.vertices().len();
    for v in 0..nv {
        tree.gaps(v)?;
    }

    let mut stars: Vec<Star> = Vec::with_capacity(nv + 2 * depth * tree.ends().len());
    for (v, tv) in tree.vertices().iter().enumerate() {
        let items = tree
            .rotation(v)
            .iter()
            .map(|item| match *item {
                TreeItem::Edge(e) => Slot::Link(Link::Edge(e)),
                TreeItem::End(x) if depth > 0 => Slot::Link(Link::Chain(x, 0)),
                TreeItem::End(x) => Slot::Open(x),
            })
            .collect();
        stars.push(Star {
            parity: tv.parity,
            on_axis: tv.on_axis,
            items,
            corners: (0..tree.degree(v))
                .map(|k| tree.corner_label(v, k))
                .collect(),
        });
    }
    let mut descriptors = Vec::with_capacity(tree.ends().len());
    for (x, end) in tree.ends().iter().enumerate() {
        let mut chain = Vec::with_capacity(2 * depth);
        let mut parity = tree.vertices()[end.at].parity;
        for t in 0..2 * depth {
            parity = parity.flip();
            let forward = if t + 1 == 2 * depth {
                Slot::Open(x)
            } else {
                Slot::Link(Link::Chain(x, t + 1))
            };
            chain.push(stars.len());
            stars.push(Star {
                parity,
                on_axis: end.axial,
                items: vec![Slot::Link(Link::Chain(x, t)), forward],
                corners: vec![end.right, end.left],
            });
        }
        descriptors.push(EndDescriptor {
            id: x,
            attach: end.at,
            chain,
            left: end.left,
            right: end.right,
            axial: end.axial,
            period: [base.gap(end.right, end.left), base.gap(end.left, end.right)],
        });
    }

    // allocate half-edges bundle by bundle, recording each side in rotation order
    let q = base.q();
    let mut sides: HashMap<Link, Vec<Vec<usize>>> = HashMap::new();
    let mut rotation = Vec::with_capacity(stars.len());
    let mut corner_labels = Vec::with_capacity(stars.len());
    let mut next_half = 0usize;
    for (v, star) in stars.iter().enumerate() {
        let d = star.items.len();
        let mut rot = Vec::new();
        let mut labels = Vec::new();
        for k in 0..d {
            let before = star.corners[(k + d - 1) % d];
            let after = star.corners[k];
            match star.items[k] {
                Slot::Open(x) => {
                    rot.push(GraphItem::Open(x));
                    labels.push(after);
                }
                Slot::Link(link) => {
                    let (g, step) = match star.parity {
                        Parity::Cross => (base.gap(before, after), 1),
                        Parity::Circle => (base.gap(after, before), q - 1),
                    };
                    if g == 0 {
                        return Err(LineComplexError::ZeroGap { vertex: v });
                    }
                    let halves: Vec<usize> = (next_half..next_half + g).collect();
                    next_half += g;
                    let s0 = base.slot(before);
                    for (t, &h) in halves.iter().enumerate() {
                        rot.push(GraphItem::Half(h));
                        if t + 1 < g {
                            let slot = (s0 + (t + 1) * step) % q;
                            labels.push(slot_label(tree, slot));
                        } else {
                            labels.push(after);
                        }
                    }
                    sides.entry(link).or_default().push(halves);
                }
            }
        }
        rotation.push(rot);
        corner_labels.push(labels);
    }

    let mut mate = vec![usize::MAX; next_half];
    for (link, both) in &sides {
        let [a, b] = both.as_slice() else {
            return Err(LineComplexError::InvalidTree(format!(
                "bundle {link:?} does not have two sides"
            )));
        };
        if a.len() != b.len() {
            return Err(LineComplexError::InvalidTree(format!(
                "bundle {link:?} has {} edges at one end and {} at the other",
                a.len(),
                b.len()
            )));
        }
        let g = a.len();
        for t in 0..g {
            mate[a[t]] = b[g - 1 - t];
            mate[b[g - 1 - t]] = a[t];
        }
    }

    let vertices = stars
        .iter()
        .map(|s| GraphVertex {
            parity: s.parity,
            on_axis: s.on_axis,
        })
        .collect();
    SpeiserGraph::from_parts(GraphParts {
        base: base.clone(),
        depth,
        vertices,
        rotation,
        mate,
        corner_labels,
        ends: descriptors,
        outer: None,
        core_vertices: nv,
        axis_orientation: tree.axis_orientation(),
        tree_involution: tree.involution().cloned(),
    })
}

fn slot_label(tree: &SpeiserTree, slot: usize) -> LabelId {
    tree.base()
        .labels_in_slot(slot)
        .next()
        .expect("every slot carries a label")
}

/// Collapse parallel bundles and contract end chains back to stubs.
pub fn skeleton_tree(g: &SpeiserGraph) -> Result<SpeiserTree, LineComplexError> {
    let n = g.vertex_count();
    let mut chain_of = vec![None; n];
    for end in g.ends() {
        for &c in &end.chain {
            chain_of[c] = Some(end.id);
        }
    }
    let mut new_id = vec![usize::MAX; n];
    let mut core = Vec::new();
    for v in 0..n {
        if chain_of[v].is_none() {
            new_id[v] = core.len();
            core.push(v);
        }
    }

    #[derive(Clone, Copy, PartialEq, Eq)]
    enum Target {
        Vertex(usize),
        End(usize),
    }
    let target = |item: GraphItem| -> Target {
        match item {
            GraphItem::Open(x) => Target::End(x),
            GraphItem::Half(h) => {
                let w = g.half_vertex(g.mate(h));
                match chain_of[w] {
                    Some(x) => Target::End(x),
                    None => Target::Vertex(w),
                }
            }
        }
    };

    let mut edge_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut rotation = Vec::with_capacity(core.len());
    for &v in &core {
        let rot = g.rotation(v);
        let d = rot.len();
        let targets: Vec<Target> = rot.iter().map(|&i| target(i)).collect();
        let start = if d > 1 && targets[0] == targets[d - 1] {
            (0..d)
                .find(|&k| targets[k] != targets[(k + d - 1) % d])
                .ok_or_else(|| {
                    LineComplexError::NotATree(format!("vertex {v} sees a single neighbor"))
                })?
        } else {
            0
        };
        let mut items = Vec::new();
        let mut seen = Vec::new();
        for j in 0..d {
            let k = (start + j) % d;
            if j > 0 && targets[k] == targets[(k + d - 1) % d] {
                continue;
            }
            if seen.contains(&targets[k]) {
                return Err(LineComplexError::NotATree(format!(
                    "vertex {v} meets the same neighbor in two separate bundles"
                )));
            }
            seen.push(targets[k]);
            items.push(match targets[k] {
                Target::End(x) => TreeItem::End(x),
                Target::Vertex(w) => {
                    let key = (new_id[v].min(new_id[w]), new_id[v].max(new_id[w]));
                    let e = *edge_index.entry(key).or_insert_with(|| {
                        edges.push(TreeEdge { a: key.0, b: key.1 });
                        edges.len() - 1
                    });
                    TreeItem::Edge(e)
                }
            });
        }
        rotation.push(items);
    }
    if edges.len() + 1 != core.len() {
        return Err(LineComplexError::NotATree(format!(
            "{} vertices joined by {} bundles",
            core.len(),
            edges.len()
        )));
    }

    let vertices = core
        .iter()
        .map(|&v| TreeVertex {
            parity: g.vertices()[v].parity,
            on_axis: g.vertices()[v].on_axis,
        })
        .collect();
    let ends = g
        .ends()
        .iter()
        .map(|e| TreeEnd {
            at: new_id[e.attach],
            left: e.left,
            right: e.right,
            axial: e.axial,
        })
        .collect();
    let remap = |v: usize| (v < n && new_id[v] != usize::MAX).then(|| new_id[v]);
    let axis_orientation = g
        .axis_orientation()
        .and_then(|(a, b)| Some((remap(a)?, remap(b)?)));
    let involution = g.tree_involution().and_then(|inv| {
        let vertices: Option<Vec<usize>> = inv.vertices.iter().map(|&v| remap(v)).collect();
        Some(TreeInvolution {
            vertices: vertices?,
            ends: inv.ends.clone(),
        })
    });
    SpeiserTree::new(TreeParts {
        base: g.base().clone(),
        vertices,
        edges,
        rotation,
        ends,
        axis_orientation,
        involution,
    })
}
