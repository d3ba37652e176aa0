//! Pushing a real base point off the axis: faces labeled `a` become `a+` or
//! `a-` according to their side.

use crate::base::LabelId;
use crate::error::SymmetryError;
use crate::graph::{GraphItem, SpeiserGraph};

use super::classify::real_singularities;
use super::involution::{find_involution, Involution};

/// Which side of the axis receives the `+` label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SideAssignment {
    /// The side holding the first face labeled `a` in face order.
    #[default]
    FirstFace,
    /// The side holding this corner.
    Corner(usize, usize),
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Component of every corner in the graph with the axis removed; corners of
/// faces fixed by `s` get no meaningful side.
#[allow(clippy::needless_range_loop)]
pub(crate) fn side_components(g: &SpeiserGraph, s: &Involution) -> (Vec<Vec<usize>>, Vec<bool>) {
    let mut index = Vec::with_capacity(g.vertex_count());
    let mut total = 0;
    for v in 0..g.vertex_count() {
        index.push(total);
        total += g.rotation(v).len();
    }
    let fixed_face: Vec<bool> = (0..g.faces().len()).map(|f| s.fixes_face(g, f)).collect();
    let mut uf = UnionFind((0..total).collect());
    for (f, face) in g.faces().iter().enumerate() {
        if fixed_face[f] {
            continue;
        }
        let (v0, k0) = face.corners[0];
        for &(v, k) in &face.corners[1..] {
            uf.union(index[v0] + k0, index[v] + k);
        }
    }
    for v in 0..g.vertex_count() {
        let d = g.rotation(v).len();
        for k in 0..d {
            // corners k-1 and k are separated by item k
            let prev = (k + d - 1) % d;
            if s.fixes_item(g, v, k) {
                continue;
            }
            if let GraphItem::Open(x) = g.rotation(v)[k] {
                if s.fixes_end(x) && s.vertices[v] == v {
                    continue;
                }
            }
            let fp = g.corner_face(v, prev);
            let fk = g.corner_face(v, k);
            if fixed_face[fp] || fixed_face[fk] {
                continue;
            }
            uf.union(index[v] + prev, index[v] + k);
        }
    }
    let comp = (0..g.vertex_count())
        .map(|v| {
            (0..g.rotation(v).len())
                .map(|k| uf.find(index[v] + k))
                .collect()
        })
        .collect();
    (comp, fixed_face)
}

/// Relabel every face labeled `label` as `label+` or `label-` by side of
/// the axis. The split is symbolic: both halves share the cyclic slot of
/// the original point.
pub fn split_real_label(
    g: &SpeiserGraph,
    label: &str,
    side: SideAssignment,
) -> Result<SpeiserGraph, SymmetryError> {
    let base = g.base();
    let a = base
        .index_of(label)
        .filter(|&a| base.is_real(a) && !base.label(a).is_split())
        .ok_or_else(|| SymmetryError::InvalidLabel(label.to_string()))?;
    if label == "0" {
        return Err(SymmetryError::InvalidLabel(label.to_string()));
    }
    let s = find_involution(g).ok_or(SymmetryError::NoInvolution)?;
    if real_singularities(g, &s)
        .iter()
        .any(|(name, _)| name == label)
    {
        return Err(SymmetryError::RealSingularityOverLabel(label.to_string()));
    }
    let (comp, fixed_face) = side_components(g, &s);
    let faces_a: Vec<usize> = (0..g.faces().len())
        .filter(|&f| g.faces()[f].label == Some(a))
        .collect();
    if let Some(&f) = faces_a.iter().find(|&&f| fixed_face[f]) {
        return Err(SymmetryError::FaceOnAxis(f));
    }
    let comp_of_face = |f: usize| {
        let (v, k) = g.faces()[f].corners[0];
        comp[v][k]
    };
    let reference = match side {
        SideAssignment::Corner(v, k) => {
            if v >= g.vertex_count() || k >= g.rotation(v).len() {
                return Err(SymmetryError::InvalidLabel(label.to_string()));
            }
            Some(comp[v][k])
        }
        SideAssignment::FirstFace => faces_a.first().map(|&f| comp_of_face(f)),
    };
    // a face is on the + side when its component is the reference one or
    // precedes its mirror component
    let plus_face = |f: usize| -> bool {
        let c = comp_of_face(f);
        let mirror = {
            let (v, k) = g.faces()[f].corners[0];
            let (w, m) = s.corner_image(g, v, k);
            comp[w][m]
        };
        match reference {
            Some(r) if c == r => true,
            Some(r) if mirror == r => false,
            _ => c < mirror,
        }
    };
    let (new_base, plus, minus) = base.with_split(a)?;
    let shift = |l: LabelId| if l > a { l + 1 } else { l };
    let mut face_sign = vec![None; g.faces().len()];
    for &f in &faces_a {
        face_sign[f] = Some(plus_face(f));
    }
    let out = g.with_labels(new_base, |v, k, l| {
        if l == a {
            match face_sign[g.corner_face(v, k)] {
                Some(true) => plus,
                _ => minus,
            }
        } else {
            shift(l)
        }
    })?;
    Ok(out)
}

/// Inverse of [`split_real_label`]: `label+` and `label-` become `label`.
pub fn merge_split_label(g: &SpeiserGraph, label: &str) -> Result<SpeiserGraph, SymmetryError> {
    let (new_base, map) = g
        .base()
        .with_merged(label)
        .map_err(|_| SymmetryError::InvalidLabel(label.to_string()))?;
    Ok(g.with_labels(new_base, |_, _, l| map[l])?)
}
