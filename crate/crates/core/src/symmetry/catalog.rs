//! Symmetric trees with all zeros real, one per degree and zero-set shape.
//!
//! Every tree is a caterpillar: a path on the axis, with gadgets hanging
//! off axis vertices above and mirrored below. A fork is an off-axis hub
//! carrying two ends with an unbounded `0` face between them; a single is
//! one end attached straight to an axis vertex next to an unbounded `0`
//! face. Unbounded faces above the axis are listed west to east; the ones
//! at the two tips of the axis are bisected by it unless an axial end
//! leaves there.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

use crate::base::{BasePoint, BasePointSet, ExtendedComplex, LabelId};
use crate::error::{LineComplexError, SymmetryError};
use crate::extend::extend_tree;
use crate::graph::validate_axioms;
use crate::tree::{
    Parity, SpeiserTree, TreeEdge, TreeEnd, TreeInvolution, TreeItem, TreeParts, TreeVertex,
};

use super::classify::{all_zeros_real, classify_zero_set, ZeroSetClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogVariant {
    /// Infinitely many zeros, all real.
    Infinite,
    /// Exactly `k` zeros, all real.
    FiniteZeros(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FaceClass {
    Zero,
    /// The `i`-th non-real class above the axis.
    Upper(usize),
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Gadget {
    Fork,
    Single,
}

#[derive(Debug, Clone)]
struct Layout {
    faces: Vec<FaceClass>,
    gadgets: Vec<Gadget>,
    left_stub: bool,
    right_stub: bool,
    classes: usize,
    has_real: bool,
}

fn alternating(first: usize, count: usize, tail: FaceClass) -> Vec<FaceClass> {
    // Upper(first), 0, Upper(first + 1), 0, ..., then `tail`
    let mut faces = Vec::new();
    for i in 0..count {
        faces.push(FaceClass::Upper(first + i));
        faces.push(FaceClass::Zero);
    }
    faces.push(tail);
    faces
}

/// Candidate layouts in order of preference.
fn layouts(d: usize, variant: CatalogVariant) -> Result<Vec<Layout>, SymmetryError> {
    use FaceClass::*;
    let forks = |f: usize| vec![Gadget::Fork; f];
    let out = match variant {
        CatalogVariant::Infinite => match d % 4 {
            0 => {
                let f = d / 4;
                vec![Layout {
                    faces: alternating(0, f, Upper(f)),
                    gadgets: forks(f),
                    left_stub: true,
                    right_stub: true,
                    classes: f + 1,
                    has_real: false,
                }]
            }
            1 => {
                let f = (d - 1) / 4;
                let mut faces = alternating(0, f, Upper(f));
                faces.push(Zero);
                let mut gadgets = forks(f);
                gadgets.push(Gadget::Single);
                vec![Layout {
                    faces,
                    gadgets,
                    left_stub: true,
                    right_stub: false,
                    classes: f + 1,
                    has_real: false,
                }]
            }
            3 => {
                let f = (d + 1) / 4;
                vec![Layout {
                    faces: alternating(0, f, Real),
                    gadgets: forks(f),
                    left_stub: true,
                    right_stub: false,
                    classes: f,
                    has_real: true,
                }]
            }
            _ => return Err(SymmetryError::VariantUnavailable { d }),
        },
        CatalogVariant::FiniteZeros(_) if d % 2 == 1 => {
            return Err(SymmetryError::OddFiniteVariant { d })
        }
        CatalogVariant::FiniteZeros(_) if d % 4 == 2 => {
            let mut out = Vec::new();
            let f = (d + 2) / 4;
            if f >= 2 {
                // both tips bisected by faces over the same non-zero real point
                let mut faces = vec![Real, Zero];
                faces.extend(alternating(0, f - 1, Real));
                out.push(Layout {
                    faces,
                    gadgets: forks(f),
                    left_stub: false,
                    right_stub: false,
                    classes: f - 1,
                    has_real: true,
                });
            }
            // both tips bisected by 0 faces, singles beside them
            let g = f - 1;
            let mut faces = vec![Zero];
            faces.extend(alternating(0, g, Upper(g)));
            faces.push(Zero);
            let mut gadgets = vec![Gadget::Single];
            gadgets.extend(forks(g));
            gadgets.push(Gadget::Single);
            out.push(Layout {
                faces,
                gadgets,
                left_stub: false,
                right_stub: false,
                classes: g + 1,
                has_real: false,
            });
            out
        }
        CatalogVariant::FiniteZeros(_) => {
            let f = d / 4;
            let mut faces = vec![Zero];
            faces.extend(alternating(0, f, Real));
            let mut gadgets = vec![Gadget::Single];
            gadgets.extend(forks(f));
            vec![Layout {
                faces,
                gadgets,
                left_stub: false,
                right_stub: false,
                classes: f,
                has_real: true,
            }]
        }
    };
    Ok(out)
}

/// Choices that turn a layout into a concrete tree.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Config {
    /// Number of consecutive gadgets hosted by each gadget-carrying axis
    /// vertex, west to east.
    groups: Vec<usize>,
    /// Plain axis vertices before each group and after the last one.
    pads: Vec<usize>,
    first: Parity,
    /// Cyclic position (1-based) of each non-real class.
    position: Vec<usize>,
    /// Whether the class takes the conjugate of the label at its position.
    flipped: Vec<bool>,
}

fn base_set(l: &Layout) -> BasePointSet {
    let m = l.classes;
    let mut labels = vec![BasePoint::finite("0", 0.0, 0.0)];
    // points on the upper unit half-circle, with round-off at pi/2 removed
    let unit = |p: usize| {
        let (s, c) = (PI * p as f64 / (m + 1) as f64).sin_cos();
        (if c.abs() < 1e-15 { 0.0 } else { c }, s)
    };
    for p in 1..=m {
        let (c, s) = unit(p);
        labels.push(BasePoint::finite(format!("a{p}"), c, s));
    }
    if l.has_real {
        labels.push(BasePoint::finite("r", -1.0, 0.0));
    }
    for p in (1..=m).rev() {
        let (c, s) = unit(p);
        labels.push(BasePoint::finite(format!("a{p}~"), c, -s));
    }
    BasePointSet::new(labels, true).expect("catalog base points are valid")
}

fn build(l: &Layout, c: &Config, base: &BasePointSet) -> Result<SpeiserTree, LineComplexError> {
    let zero = base.zero().expect("catalog base has 0");
    let real = base.index_of("r");
    let label = |f: FaceClass| -> LabelId {
        match f {
            FaceClass::Zero => zero,
            FaceClass::Real => real.expect("layout with a real face has r"),
            FaceClass::Upper(i) => {
                let id = base
                    .index_of(&format!("a{}", c.position[i]))
                    .expect("class position");
                if c.flipped[i] {
                    base.conj(id).expect("symmetric base")
                } else {
                    id
                }
            }
        }
    };
    let conj = |x: LabelId| base.conj(x).expect("symmetric base");

    // axis vertices west to east: (hosted gadgets, west face of each one)
    let steps: Vec<usize> = l
        .gadgets
        .iter()
        .map(|g| if *g == Gadget::Fork { 2 } else { 1 })
        .collect();
    let mut axis: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut face = 0usize;
    let mut next_gadget = 0usize;
    for (gi, &size) in c.groups.iter().enumerate() {
        for _ in 0..c.pads[gi] {
            axis.push((Vec::new(), face));
        }
        let hosted: Vec<usize> = (next_gadget..next_gadget + size).collect();
        axis.push((hosted, face));
        for _ in 0..size {
            face += steps[next_gadget];
            next_gadget += 1;
        }
    }
    for _ in 0..c.pads[c.groups.len()] {
        axis.push((Vec::new(), face));
    }
    debug_assert_eq!(face + 1, l.faces.len());
    let m = axis.len();
    if m == 0 {
        return Err(LineComplexError::InvalidTree("empty axis".into()));
    }

    let mut vertices = Vec::new();
    let mut parity = c.first;
    for _ in 0..m {
        vertices.push(TreeVertex {
            parity,
            on_axis: true,
        });
        parity = parity.flip();
    }
    let mut edges: Vec<TreeEdge> = (0..m.saturating_sub(1))
        .map(|i| TreeEdge { a: i, b: i + 1 })
        .collect();
    let mut ends: Vec<TreeEnd> = Vec::new();
    let mut inv_ends: Vec<(usize, usize)> = Vec::new();
    let mut inv_vertices: Vec<(usize, usize)> = Vec::new();
    let mut rotation: Vec<Vec<TreeItem>> = vec![Vec::new(); m];

    let push_end = |ends: &mut Vec<TreeEnd>, at, left, right, axial| {
        ends.push(TreeEnd {
            at,
            left,
            right,
            axial,
        });
        ends.len() - 1
    };

    let left_stub = l.left_stub.then(|| {
        let f0 = label(l.faces[0]);
        let id = push_end(&mut ends, 0, conj(f0), f0, true);
        inv_ends.push((id, id));
        id
    });
    let right_stub = l.right_stub.then(|| {
        let fl = label(l.faces[l.faces.len() - 1]);
        let id = push_end(&mut ends, m - 1, fl, conj(fl), true);
        inv_ends.push((id, id));
        id
    });

    for (i, (hosted, first_face)) in axis.iter().enumerate() {
        // gadgets west to east; upper items are listed east to west
        let mut ups = Vec::new();
        let mut downs = Vec::new();
        let mut west = *first_face;
        for &gi in hosted {
            let east = west + steps[gi];
            let fw = label(l.faces[west]);
            let fe = label(l.faces[east]);
            match l.gadgets[gi] {
                Gadget::Single => {
                    let u = push_end(&mut ends, i, fw, fe, false);
                    let d = push_end(&mut ends, i, conj(fe), conj(fw), false);
                    inv_ends.push((u, d));
                    ups.push(TreeItem::End(u));
                    downs.push(TreeItem::End(d));
                }
                Gadget::Fork => {
                    let hub_parity = vertices[i].parity.flip();
                    let hu = vertices.len();
                    vertices.push(TreeVertex {
                        parity: hub_parity,
                        on_axis: false,
                    });
                    let hd = vertices.len();
                    vertices.push(TreeVertex {
                        parity: hub_parity,
                        on_axis: false,
                    });
                    inv_vertices.push((hu, hd));
                    let eu = edges.len();
                    edges.push(TreeEdge { a: i, b: hu });
                    let ed = edges.len();
                    edges.push(TreeEdge { a: i, b: hd });
                    let ur = push_end(&mut ends, hu, zero, fe, false);
                    let ul = push_end(&mut ends, hu, fw, zero, false);
                    let dl = push_end(&mut ends, hd, zero, conj(fw), false);
                    let dr = push_end(&mut ends, hd, conj(fe), zero, false);
                    inv_ends.push((ur, dr));
                    inv_ends.push((ul, dl));
                    rotation.push(vec![
                        TreeItem::Edge(eu),
                        TreeItem::End(ur),
                        TreeItem::End(ul),
                    ]);
                    rotation.push(vec![
                        TreeItem::Edge(ed),
                        TreeItem::End(dl),
                        TreeItem::End(dr),
                    ]);
                    ups.push(TreeItem::Edge(eu));
                    downs.push(TreeItem::Edge(ed));
                }
            }
            west = east;
        }
        ups.reverse();
        let right = if i + 1 < m {
            Some(TreeItem::Edge(i))
        } else {
            right_stub.map(TreeItem::End)
        };
        let left = if i > 0 {
            Some(TreeItem::Edge(i - 1))
        } else {
            left_stub.map(TreeItem::End)
        };
        let mut rot: Vec<TreeItem> = right.into_iter().collect();
        rot.extend(ups);
        rot.extend(left);
        rot.extend(downs);
        rotation[i] = rot;
    }

    let mut vmap: Vec<usize> = (0..vertices.len()).collect();
    for (a, b) in inv_vertices {
        vmap[a] = b;
        vmap[b] = a;
    }
    let mut emap: Vec<usize> = (0..ends.len()).collect();
    for (a, b) in inv_ends {
        emap[a] = b;
        emap[b] = a;
    }
    SpeiserTree::new(TreeParts {
        base: base.clone(),
        vertices,
        edges,
        rotation,
        ends,
        axis_orientation: (m >= 2).then_some((0, 1)),
        involution: Some(TreeInvolution {
            vertices: vmap,
            ends: emap,
        }),
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Pad vectors with entries at most `cap`, in order of total size.
fn pad_vectors(slots: usize, max_total: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut all = vec![Vec::new()];
    for _ in 0..slots {
        let mut next = Vec::new();
        for v in &all {
            for x in 0..=cap {
                let mut w: Vec<usize> = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        all = next;
    }
    all.retain(|v| v.iter().sum::<usize>() <= max_total);
    all.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    all
}

fn expected(d: usize, variant: CatalogVariant, class: ZeroSetClass) -> bool {
    match variant {
        CatalogVariant::Infinite if d.is_multiple_of(4) => {
            class == ZeroSetClass::UnboundedBothDirections
        }
        // the axial end leaves to the west, against the axis orientation
        CatalogVariant::Infinite => class == ZeroSetClass::RayNegative,
        CatalogVariant::FiniteZeros(_) => matches!(class, ZeroSetClass::FiniteCount(_)),
    }
}

/// Run the checks a catalog tree must pass; returns its class.
fn accept(tree: &SpeiserTree) -> Option<ZeroSetClass> {
    let g = extend_tree(tree, 1).ok()?;
    if !validate_axioms(&g).all_pass() {
        return None;
    }
    if !all_zeros_real(&g).ok()?.0 {
        return None;
    }
    classify_zero_set(&g).ok()
}

const MAX_PAD: usize = 4;

/// Compositions of `n` into positive parts, most parts first.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out.sort_by_key(|c| std::cmp::Reverse(c.len()));
    out
}

/// First pad slot between two groups whose face above the axis is
/// non-real; two plain vertices there add one zero.
fn insertion_slot(l: &Layout, groups: &[usize]) -> Option<usize> {
    let steps: Vec<usize> = l
        .gadgets
        .iter()
        .map(|g| if *g == Gadget::Fork { 2 } else { 1 })
        .collect();
    let mut face = 0;
    let mut gadget = 0;
    for (i, &size) in groups.iter().enumerate() {
        if i > 0 && matches!(l.faces[face], FaceClass::Upper(_)) {
            return Some(i);
        }
        for _ in 0..size {
            face += steps[gadget];
            gadget += 1;
        }
    }
    None
}

#[derive(Debug, Clone)]
struct Found {
    /// Configuration with no zeros at all (finite variants only).
    zero: Option<Config>,
    /// Configuration with an insertion slot, its zero count, and the slot.
    padded: Option<(Config, usize, usize)>,
}

fn search(d: usize, variant: CatalogVariant, l: &Layout) -> Found {
    let base = base_set(l);
    let perms = permutations(l.classes);
    let finite = matches!(variant, CatalogVariant::FiniteZeros(_));
    let mut found = Found {
        zero: None,
        padded: None,
    };
    for groups in compositions(l.gadgets.len()) {
        let slot = insertion_slot(l, &groups);
        for pads in pad_vectors(groups.len() + 1, MAX_PAD, 2) {
            for first in [Parity::Cross, Parity::Circle] {
                for perm in &perms {
                    for mask in 0..(1usize << l.classes) {
                        let wants_zero = finite && found.zero.is_none();
                        let wants_padded = finite
                            && slot.is_some()
                            && found.padded.as_ref().is_none_or(|p| p.1 > 0);
                        if finite && !wants_zero && !wants_padded {
                            return found;
                        }
                        let config = Config {
                            groups: groups.clone(),
                            pads: pads.clone(),
                            first,
                            position: perm.iter().map(|&p| p + 1).collect(),
                            flipped: (0..l.classes).map(|i| mask >> i & 1 == 1).collect(),
                        };
                        let Ok(tree) = build(l, &config, &base) else {
                            continue;
                        };
                        if (0..tree.vertices().len()).any(|v| tree.gaps(v).is_err()) {
                            continue;
                        }
                        let Some(class) = accept(&tree) else { continue };
                        if !expected(d, variant, class) {
                            continue;
                        }
                        if !finite {
                            return Found {
                                zero: None,
                                padded: Some((config, 0, 0)),
                            };
                        }
                        let ZeroSetClass::FiniteCount(k0) = class else {
                            continue;
                        };
                        if k0 == 0 && found.zero.is_none() {
                            found.zero = Some(config.clone());
                        }
                        if let Some(slot) = slot {
                            if found.padded.as_ref().is_none_or(|p| k0 < p.1) {
                                found.padded = Some((config, k0, slot));
                            }
                        }
                    }
                }
            }
        }
    }
    found
}

type CacheKey = (usize, bool, usize);
type Cache = Mutex<HashMap<CacheKey, Found>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// A symmetric tree with `d + 2` ends whose line complex has only real
/// zeros, of the requested kind. Search results are cached per degree.
pub fn catalog_tree(d: usize, variant: CatalogVariant) -> Result<SpeiserTree, SymmetryError> {
    let finite = matches!(variant, CatalogVariant::FiniteZeros(_));
    for (index, l) in layouts(d, variant)?.iter().enumerate() {
        let found = {
            let mut map = cache().lock().unwrap_or_else(|e| e.into_inner());
            map.entry((d, finite, index))
                .or_insert_with(|| search(d, variant, l))
                .clone()
        };
        let config = match variant {
            CatalogVariant::Infinite => found.padded.map(|p| p.0),
            CatalogVariant::FiniteZeros(k) => match (k, found.zero, found.padded) {
                (0, Some(zero), _) => Some(zero),
                (k, _, Some((mut config, k0, slot))) if k >= k0 => {
                    config.pads[slot] += 2 * (k - k0);
                    Some(config)
                }
                _ => None,
            },
        };
        if let Some(config) = config {
            return Ok(build(l, &config, &base_set(l))?);
        }
    }
    Err(SymmetryError::CatalogSearchExhausted { d })
}

/// One vertex with two axial ends over `{0, inf}`: the line complex of
/// `exp`, a path without 2-gons.
pub fn exp_ladder_tree() -> SpeiserTree {
    let base = BasePointSet::new(
        vec![
            BasePoint::finite("0", 0.0, 0.0),
            BasePoint::point("inf", ExtendedComplex::Infinity),
        ],
        true,
    )
    .expect("valid base");
    two_stub_tree(base, "0", "inf")
}

/// One vertex with two axial ends flanked by `i` and `-i` over
/// `{0, i, inf, -i}`: a ladder with one `0` 2-gon per period along each end.
pub fn trig_ladder_tree() -> SpeiserTree {
    let base = BasePointSet::new(
        vec![
            BasePoint::finite("0", 0.0, 0.0),
            BasePoint::finite("i", 0.0, 1.0),
            BasePoint::point("inf", ExtendedComplex::Infinity),
            BasePoint::finite("-i", 0.0, -1.0),
        ],
        true,
    )
    .expect("valid base");
    two_stub_tree(base, "i", "-i")
}

fn two_stub_tree(base: BasePointSet, left0: &str, left1: &str) -> SpeiserTree {
    let l0 = base.index_of(left0).expect("label present");
    let l1 = base.index_of(left1).expect("label present");
    SpeiserTree::new(TreeParts {
        base,
        vertices: vec![TreeVertex {
            parity: Parity::Cross,
            on_axis: true,
        }],
        edges: vec![],
        rotation: vec![vec![TreeItem::End(0), TreeItem::End(1)]],
        ends: vec![
            TreeEnd {
                at: 0,
                left: l0,
                right: l1,
                axial: true,
            },
            TreeEnd {
                at: 0,
                left: l1,
                right: l0,
                axial: true,
            },
        ],
        axis_orientation: None,
        involution: Some(TreeInvolution {
            vertices: vec![0],
            ends: vec![0, 1],
        }),
    })
    .expect("two-stub tree is valid")
}
