//! Real-zero criterion and the shape of the zero set.

use std::fmt;

use crate::base::{LabelId, LabelValue};
use crate::error::SymmetryError;
use crate::extend::{extend_tree, skeleton_tree};
use crate::graph::{EndDescriptor, FaceKind, GraphItem, SpeiserGraph};

use super::involution::{find_involution, Involution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityKind {
    /// The two flanks of an axial end are the halves of a split real label.
    AxialEndFlanks,
    /// An unbounded face mapped to itself by the reflection.
    BisectedFace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssumptionsReport {
    pub ends_at_least_three: bool,
    pub zero_is_base_point: bool,
    pub real_log_singularities: Vec<(String, SingularityKind)>,
    pub no_split_zero_labels: bool,
    pub two_nonzero_real_singularities: bool,
}

impl AssumptionsReport {
    /// All assumptions hold: at least three ends, `0` a base point, no
    /// split zero, and at most one real singularity away from zero.
    pub fn passes(&self) -> bool {
        self.ends_at_least_three
            && self.zero_is_base_point
            && self.no_split_zero_labels
            && self.nonzero_real_singularities() <= 1
    }

    pub fn nonzero_real_singularities(&self) -> usize {
        self.real_log_singularities
            .iter()
            .filter(|(name, _)| name != "0")
            .count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSetClass {
    FiniteCount(usize),
    UnboundedBothDirections,
    RayPositive,
    RayNegative,
    NotAllReal,
}

impl fmt::Display for ZeroSetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroSetClass::FiniteCount(k) => write!(f, "FiniteCount({k})"),
            ZeroSetClass::UnboundedBothDirections => write!(f, "UnboundedBothDirections"),
            ZeroSetClass::RayPositive => write!(f, "RayPositive"),
            ZeroSetClass::RayNegative => write!(f, "RayNegative"),
            ZeroSetClass::NotAllReal => write!(f, "NotAllReal"),
        }
    }
}

fn split_base_of(g: &SpeiserGraph, l: LabelId) -> Option<&str> {
    match &g.base().label(l).value {
        LabelValue::Split { base, .. } => Some(base.as_str()),
        LabelValue::Point(_) => None,
    }
}

/// Real logarithmic singularities: split pairs flanking an axial end, and
/// labels of unbounded faces the reflection maps to themselves. Ordered by
/// end id, then by face id.
pub fn real_singularities(g: &SpeiserGraph, s: &Involution) -> Vec<(String, SingularityKind)> {
    let mut out = Vec::new();
    for e in g.ends() {
        if !e.axial {
            continue;
        }
        if let (Some(a), Some(b)) = (split_base_of(g, e.left), split_base_of(g, e.right)) {
            if a == b {
                out.push((a.to_string(), SingularityKind::AxialEndFlanks));
            }
        }
    }
    for (f, face) in g.unbounded_faces() {
        if s.fixes_face(g, f) {
            if let Some(l) = face.label {
                out.push((g.base().name(l).to_string(), SingularityKind::BisectedFace));
            }
        }
    }
    out
}

fn has_split_zero(g: &SpeiserGraph) -> bool {
    g.base().index_of("0+").is_some() || g.base().index_of("0-").is_some()
}

/// Evaluate the assumptions. Without a reflection no real singularities
/// can be identified and the list stays empty.
pub fn check_assumptions(g: &SpeiserGraph) -> AssumptionsReport {
    let real = find_involution(g)
        .map(|s| real_singularities(g, &s))
        .unwrap_or_default();
    let nonzero = real.iter().filter(|(name, _)| name != "0").count();
    AssumptionsReport {
        ends_at_least_three: g.ends().len() >= 3,
        zero_is_base_point: g.base().zero().is_some(),
        real_log_singularities: real,
        no_split_zero_labels: !has_split_zero(g),
        two_nonzero_real_singularities: nonzero >= 2,
    }
}

/// Every vertex lies on the axis or on the boundary of an unbounded face
/// labeled `0`. Ends are checked through their flanks as well, so the
/// answer covers the full periodic graph. Returns the first failing vertex,
/// end vertices first.
pub fn all_zeros_real(g: &SpeiserGraph) -> Result<(bool, Option<usize>), SymmetryError> {
    if has_split_zero(g) {
        return Err(SymmetryError::SplitZeroLabel);
    }
    let zero = g.base().zero().ok_or(SymmetryError::NoZeroLabel)?;
    let touches_zero = |v: usize| {
        (0..g.rotation(v).len()).any(|k| {
            let face = &g.faces()[g.corner_face(v, k)];
            face.kind == FaceKind::Unbounded && face.label == Some(zero)
        })
    };
    let ok = |v: usize| g.vertices()[v].on_axis || touches_zero(v);
    for e in g.ends() {
        if e.axial || e.left == zero || e.right == zero {
            continue;
        }
        let witness = e
            .chain
            .iter()
            .copied()
            .find(|&c| !ok(c))
            .unwrap_or(e.attach);
        return Ok((false, Some(witness)));
    }
    for v in 0..g.vertex_count() {
        if !ok(v) {
            return Ok((false, Some(v)));
        }
    }
    Ok((true, None))
}

/// On-axis vertices of the core in axis order, starting from the end of the
/// axis that the declared orientation points away from.
fn axis_order(g: &SpeiserGraph) -> Vec<usize> {
    let core = g.core_vertices();
    let on: Vec<usize> = (0..core).filter(|&v| g.vertices()[v].on_axis).collect();
    if on.is_empty() {
        return on;
    }
    let neighbors = |v: usize| -> Vec<usize> {
        let mut out = Vec::new();
        for item in g.rotation(v) {
            if let GraphItem::Half(h) = *item {
                let w = g.half_vertex(g.mate(h));
                if w < core && g.vertices()[w].on_axis && !out.contains(&w) {
                    out.push(w);
                }
            }
        }
        out
    };
    let start = on
        .iter()
        .copied()
        .find(|&v| neighbors(v).len() <= 1)
        .unwrap_or(on[0]);
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = neighbors(cur)
            .into_iter()
            .find(|&w| w != prev && !path.contains(&w));
        match next {
            Some(w) => {
                path.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    if let Some((a, b)) = g.axis_orientation() {
        let pa = path.iter().position(|&v| v == a);
        let pb = path.iter().position(|&v| v == b);
        if let (Some(pa), Some(pb)) = (pa, pb) {
            if pa > pb {
                path.reverse();
            }
        }
    }
    path
}

/// Shape of the zero set of a solution whose line complex is `g`.
pub fn classify_zero_set(g: &SpeiserGraph) -> Result<ZeroSetClass, SymmetryError> {
    let zero = g.base().zero().ok_or(SymmetryError::NoZeroLabel)?;
    let assumptions = check_assumptions(g);
    let zero_two_gons = g
        .faces()
        .iter()
        .filter(|f| f.kind == FaceKind::TwoGon && f.label == Some(zero))
        .count();
    if assumptions.two_nonzero_real_singularities {
        return Ok(ZeroSetClass::FiniteCount(zero_two_gons));
    }
    let (criterion, _) = all_zeros_real(g)?;
    if !criterion {
        return Ok(ZeroSetClass::NotAllReal);
    }
    let axial: Vec<usize> = g
        .ends()
        .iter()
        .filter(|e| e.axial)
        .map(|e| e.attach)
        .collect();
    Ok(match axial.len() {
        0 => ZeroSetClass::FiniteCount(zero_two_gons),
        1 => {
            let path = axis_order(g);
            let at = axial[0];
            // a one-vertex axis counts its end as pointing forward
            let positive = path.last() == Some(&at) && (path.len() == 1 || path[0] != at);
            if positive {
                ZeroSetClass::RayPositive
            } else {
                ZeroSetClass::RayNegative
            }
        }
        _ => ZeroSetClass::UnboundedBothDirections,
    })
}

/// Zero count in the depth-`depth` truncation and the axis positions of the
/// on-axis zeros, measured in edges from the first axis vertex of the core
/// along the declared orientation (half-integers sit between vertices).
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroCensus {
    pub count: usize,
    pub positions: Vec<f64>,
}

pub fn zero_census(g: &SpeiserGraph, depth: usize) -> Result<ZeroCensus, SymmetryError> {
    let (criterion, witness) = all_zeros_real(g)?;
    if !criterion {
        return Err(SymmetryError::CriterionFailed {
            witness: witness.unwrap_or(0),
        });
    }
    let tree = skeleton_tree(g)?;
    let h = extend_tree(&tree, depth)?;
    let zero = h.base().zero().ok_or(SymmetryError::NoZeroLabel)?;

    // full axis: core path plus axial chains on either side
    let core_path = axis_order(&h);
    let mut axial: Vec<&EndDescriptor> = h.ends().iter().filter(|e| e.axial).collect();
    let mut take_chain = |v: Option<&usize>| -> Vec<usize> {
        let Some(&v) = v else { return Vec::new() };
        match axial.iter().position(|e| e.attach == v) {
            Some(i) => axial.remove(i).chain.clone(),
            None => Vec::new(),
        }
    };
    let mut axis: Vec<usize> = take_chain(core_path.first());
    axis.reverse();
    let origin = axis.len();
    axis.extend(core_path.iter().copied());
    axis.extend(take_chain(core_path.last()));
    let pos = |v: usize| axis.iter().position(|&x| x == v);

    let mut count = 0;
    let mut positions = Vec::new();
    for (f, face) in h.faces().iter().enumerate() {
        if face.kind != FaceKind::TwoGon || face.label != Some(zero) {
            continue;
        }
        count += 1;
        let vs = h.face_vertices(f);
        if let [u, w] = vs[..] {
            if let (Some(pu), Some(pw)) = (pos(u), pos(w)) {
                positions.push((pu + pw) as f64 / 2.0 - origin as f64);
            }
        }
    }
    positions.sort_by(|a, b| a.partial_cmp(b).expect("finite positions"));
    Ok(ZeroCensus { count, positions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{BasePoint, BasePointSet};
    use crate::symmetry::{catalog_tree, exp_ladder_tree, CatalogVariant};

    fn catalog_graph(d: usize, variant: CatalogVariant, depth: usize) -> SpeiserGraph {
        extend_tree(&catalog_tree(d, variant).unwrap(), depth).unwrap()
    }

    /// Relabel face `f` and its mirror with a fresh conjugate pair.
    fn with_fresh_pair(g: &SpeiserGraph, f: usize) -> SpeiserGraph {
        let s = find_involution(g).unwrap();
        let mirror = s.face_image(g, f);
        let mut labels = g.base().labels().to_vec();
        labels.push(BasePoint::finite("z", 3.0, 2.0));
        labels.push(BasePoint::finite("z~", 3.0, -2.0));
        let n = g.base().len();
        let base = BasePointSet::new(labels, true).unwrap();
        g.with_labels(base, |v, k, l| {
            let face = g.corner_face(v, k);
            if face == f {
                n
            } else if face == mirror {
                n + 1
            } else {
                l
            }
        })
        .unwrap()
    }

    #[test]
    fn airy_type_tree_has_one_real_singularity_over_zero() {
        let g = catalog_graph(1, CatalogVariant::Infinite, 2);
        let a = check_assumptions(&g);
        assert!(a.ends_at_least_three && a.zero_is_base_point && a.no_split_zero_labels);
        assert_eq!(
            a.real_log_singularities,
            vec![("0".to_string(), SingularityKind::BisectedFace)]
        );
        assert!(a.passes());
    }

    #[test]
    fn exp_ladder_has_two_ends_and_real_zeros() {
        let g = extend_tree(&exp_ladder_tree(), 3).unwrap();
        assert!(!check_assumptions(&g).ends_at_least_three);
        assert_eq!(all_zeros_real(&g).unwrap(), (true, None));
        let census = zero_census(&g, 3).unwrap();
        assert_eq!(
            census,
            ZeroCensus {
                count: 0,
                positions: Vec::new()
            }
        );
    }

    #[test]
    fn two_nonzero_real_singularities_short_circuit() {
        let g = catalog_graph(6, CatalogVariant::FiniteZeros(1), 2);
        let a = check_assumptions(&g);
        assert!(a.two_nonzero_real_singularities);
        assert!(!a.passes());
        assert_eq!(classify_zero_set(&g).unwrap(), ZeroSetClass::FiniteCount(1));
    }

    #[test]
    fn removing_an_upper_zero_face_breaks_the_criterion() {
        let g = catalog_graph(4, CatalogVariant::Infinite, 2);
        let zero = g.base().zero().unwrap();
        let s = find_involution(&g).unwrap();
        let (f, _) = g
            .unbounded_faces()
            .find(|&(f, face)| face.label == Some(zero) && !s.fixes_face(&g, f))
            .unwrap();
        let h = with_fresh_pair(&g, f);
        let (ok, witness) = all_zeros_real(&h).unwrap();
        assert!(!ok);
        let w = witness.unwrap();
        let in_end = h
            .ends()
            .iter()
            .any(|e| !e.axial && (e.attach == w || e.chain.contains(&w)));
        assert!(in_end, "witness {w} is not on a non-axial end");
        assert_eq!(classify_zero_set(&h).unwrap(), ZeroSetClass::NotAllReal);
    }

    #[test]
    fn catalog_classes() {
        assert_eq!(
            classify_zero_set(&catalog_graph(4, CatalogVariant::Infinite, 2)).unwrap(),
            ZeroSetClass::UnboundedBothDirections
        );
        assert_eq!(
            classify_zero_set(&catalog_graph(5, CatalogVariant::Infinite, 2)).unwrap(),
            ZeroSetClass::RayNegative
        );
        assert_eq!(
            classify_zero_set(&catalog_graph(4, CatalogVariant::FiniteZeros(3), 2)).unwrap(),
            ZeroSetClass::FiniteCount(3)
        );
    }

    #[test]
    fn finite_census_is_stable_in_depth() {
        let g = catalog_graph(4, CatalogVariant::FiniteZeros(2), 1);
        let c2 = zero_census(&g, 2).unwrap();
        let c6 = zero_census(&g, 6).unwrap();
        assert_eq!(c2.count, 2);
        assert_eq!(c6, c2);
        assert_eq!(c2.positions.len(), 2);
    }

    #[test]
    fn ray_census_grows_by_a_fixed_period() {
        let g = catalog_graph(1, CatalogVariant::Infinite, 1);
        let counts: Vec<usize> = (1..=5).map(|k| zero_census(&g, k).unwrap().count).collect();
        let step = counts[1] - counts[0];
        assert!(step > 0);
        for w in counts.windows(2) {
            assert_eq!(w[1] - w[0], step);
        }
        let positions = zero_census(&g, 4).unwrap().positions;
        assert!(positions.iter().all(|&p| p <= 0.0), "{positions:?}");
    }
}
