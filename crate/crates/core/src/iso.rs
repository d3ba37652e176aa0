//! Isomorphism of labeled maps by canonical traversal codes.

use std::collections::VecDeque;

use crate::base::LabelId;
use crate::graph::{GraphItem, SpeiserGraph};
use crate::tree::Parity;

const OPEN: u64 = u64::MAX;

/// Traversal code from the dart at position `p0` of `v0`, reading every
/// rotation forward (`reverse == false`) or backward.
fn code(
    g: &SpeiserGraph,
    v0: usize,
    p0: usize,
    reverse: bool,
    label: &dyn Fn(LabelId) -> u64,
) -> Vec<u64> {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut start = vec![0usize; n];
    let mut queue = VecDeque::new();
    index[v0] = 0;
    start[v0] = p0;
    queue.push_back(v0);
    let mut next = 1usize;
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        let rot = g.rotation(v);
        let d = rot.len();
        let vert = g.vertices()[v];
        out.push(match vert.parity {
            Parity::Cross => 0,
            Parity::Circle => 1,
        });
        out.push(vert.on_axis as u64);
        out.push(d as u64);
        for i in 0..d {
            let p = if reverse {
                (start[v] + d - i) % d
            } else {
                (start[v] + i) % d
            };
            // corner following item p in the reading direction
            let corner = if reverse { (p + d - 1) % d } else { p };
            out.push(label(g.corner_label(v, corner)));
            match rot[p] {
                GraphItem::Open(_) => {
                    out.push(OPEN);
                    out.push(OPEN);
                }
                GraphItem::Half(h) => {
                    let m = g.mate(h);
                    let w = g.half_vertex(m);
                    let pm = g.half_pos(m);
                    if index[w] == usize::MAX {
                        index[w] = next;
                        start[w] = pm;
                        next += 1;
                        queue.push_back(w);
                    }
                    let dw = g.rotation(w).len();
                    let offset = if reverse {
                        (start[w] + dw - pm) % dw
                    } else {
                        (pm + dw - start[w]) % dw
                    };
                    out.push(index[w] as u64);
                    out.push(offset as u64);
                }
            }
        }
    }
    out.push(next as u64);
    out
}

/// True when a bijection of vertices and half-edges preserves parity, axis
/// flags, rotations (possibly all reversed), pairing and face labels. Labels
/// are matched by name.
pub fn is_isomorphic(g1: &SpeiserGraph, g2: &SpeiserGraph) -> bool {
    let names = |g: &SpeiserGraph| -> Vec<String> {
        (0..g.base().len())
            .map(|l| g.base().name(l).to_string())
            .collect()
    };
    let n1 = names(g1);
    let n2 = names(g2);
    let map2: Vec<Option<u64>> = n2
        .iter()
        .map(|name| n1.iter().position(|x| x == name).map(|i| i as u64))
        .collect();
    if map2.iter().any(Option::is_none) {
        return false;
    }
    is_isomorphic_with(g1, g2, &|l| map2[l].expect("checked above") as LabelId)
}

/// As [`is_isomorphic`] with a caller-supplied map from labels of `g2` to
/// labels of `g1`.
pub fn is_isomorphic_with(
    g1: &SpeiserGraph,
    g2: &SpeiserGraph,
    relabel: &dyn Fn(LabelId) -> LabelId,
) -> bool {
    if g1.vertex_count() != g2.vertex_count()
        || g1.half_edge_count() != g2.half_edge_count()
        || g1.faces().len() != g2.faces().len()
    {
        return false;
    }
    if g1.vertex_count() == 0 {
        return true;
    }
    let id = |l: LabelId| l as u64;
    let mapped = |l: LabelId| relabel(l) as u64;
    let target = code(g1, 0, 0, false, &id);
    if target.last() != Some(&(g1.vertex_count() as u64)) {
        // only connected maps are compared
        return false;
    }
    let v0 = g1.vertices()[0];
    let d0 = g1.rotation(0).len();
    for v in 0..g2.vertex_count() {
        if g2.vertices()[v] != v0 || g2.rotation(v).len() != d0 {
            continue;
        }
        for p in 0..d0 {
            for reverse in [false, true] {
                if code(g2, v, p, reverse, &mapped) == target {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{BasePoint, BasePointSet};
    use crate::graph::{build_graph, GraphInput, GraphVertex};

    fn bundle(size: usize) -> SpeiserGraph {
        let base = BasePointSet::new(
            (0..=size)
                .map(|i| BasePoint::finite(i.to_string(), i as f64, 0.0))
                .collect(),
            false,
        )
        .unwrap();
        let mut ru = Vec::new();
        let mut rw = Vec::new();
        let mut pairs = Vec::new();
        for t in 0..size {
            ru.push(GraphItem::Half(t));
            rw.push(GraphItem::Half(size + t));
            pairs.push((t, 2 * size - 1 - t));
        }
        ru.push(GraphItem::Open(0));
        rw.push(GraphItem::Open(1));
        build_graph(GraphInput {
            base,
            vertices: vec![
                GraphVertex {
                    parity: Parity::Cross,
                    on_axis: false,
                },
                GraphVertex {
                    parity: Parity::Circle,
                    on_axis: false,
                },
            ],
            rotation: vec![ru, rw],
            pairs,
            seeds: vec![(0, size, 0)],
            outer: None,
        })
        .unwrap()
    }

    #[test]
    fn graph_is_isomorphic_to_itself() {
        let g = bundle(3);
        assert!(is_isomorphic(&g, &g));
    }

    #[test]
    fn bundle_size_matters() {
        assert!(!is_isomorphic(&bundle(3), &bundle(2)));
    }

    #[test]
    fn relabeled_rotation_start_is_isomorphic() {
        let g = bundle(3);
        let mut parts = g.to_parts();
        parts.rotation[0].rotate_left(1);
        parts.corner_labels[0].rotate_left(1);
        let h = SpeiserGraph::from_parts(parts).unwrap();
        assert!(is_isomorphic(&g, &h));
    }
}
