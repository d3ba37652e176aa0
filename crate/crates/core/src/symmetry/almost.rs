//! Trees symmetric under a reflection that swaps the two vertex kinds.

use crate::error::SymmetryError;
use crate::tree::SpeiserTree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostSymmetricReport {
    /// The tree edge whose endpoints the reflection exchanges.
    pub crossing_edge: usize,
    /// Upper bound on the number of real zeros.
    pub real_zero_bound: usize,
}

fn fail(msg: impl Into<String>) -> SymmetryError {
    SymmetryError::NotAlmostSymmetric(msg.into())
}

/// Check that the stored involution of `tree` exchanges crosses and circles,
/// fixes no vertex, and maps exactly one edge onto itself.
pub fn almost_symmetric_audit(tree: &SpeiserTree) -> Result<AlmostSymmetricReport, SymmetryError> {
    let base = tree.base();
    if let Some(l) = (0..base.len()).find(|&l| !base.is_real(l)) {
        return Err(fail(format!("base point `{}` is not real", base.name(l))));
    }
    if tree.ends().len() < 3 {
        return Err(fail(format!("{} ends, need at least 3", tree.ends().len())));
    }
    let s = tree
        .involution()
        .ok_or_else(|| fail("no involution recorded"))?;
    let n = tree.vertices().len();
    for v in 0..n {
        let w = s.vertices[v];
        if tree.vertices()[v].on_axis || w == v {
            return Err(fail(format!("vertex {v} lies on the axis")));
        }
        if s.vertices[w] != v {
            return Err(fail(format!(
                "involution is not of order two at vertex {v}"
            )));
        }
        if tree.vertices()[w].parity == tree.vertices()[v].parity {
            return Err(fail(format!("vertices {v} and {w} have the same parity")));
        }
    }
    let mut crossing = Vec::new();
    for (i, e) in tree.edges().iter().enumerate() {
        let (a, b) = (s.vertices[e.a], s.vertices[e.b]);
        if (a, b) == (e.b, e.a) {
            crossing.push(i);
        } else if !tree
            .edges()
            .iter()
            .any(|f| (f.a, f.b) == (a, b) || (f.a, f.b) == (b, a))
        {
            return Err(fail(format!("edge {i} has no mirror edge")));
        }
    }
    if crossing.len() != 1 {
        return Err(fail(format!(
            "{} edges cross the axis, expected 1",
            crossing.len()
        )));
    }
    for v in 0..n {
        let w = s.vertices[v];
        // real labels are their own conjugates, so the cyclic label
        // sequence at the image is the reversed sequence at v
        let d = tree.degree(v);
        if tree.degree(w) != d {
            return Err(fail(format!("vertices {v} and {w} differ in degree")));
        }
        let here: Vec<_> = (0..d).map(|k| tree.corner_label(v, k)).collect();
        let mut there: Vec<_> = (0..d).map(|k| tree.corner_label(w, k)).collect();
        there.reverse();
        if !(0..d).any(|r| (0..d).all(|k| here[k] == there[(k + r) % d])) {
            return Err(fail(format!("labels at {v} and {w} are not mirrored")));
        }
    }
    for (i, e) in tree.ends().iter().enumerate() {
        let j = s.ends[i];
        let image = &tree.ends()[j];
        if s.ends[j] != i || image.at != s.vertices[e.at] {
            return Err(fail(format!("end {i} is not mapped to a mirror end")));
        }
        if image.left != e.right || image.right != e.left {
            return Err(fail(format!("flanks of end {i} are not mirrored")));
        }
    }
    Ok(AlmostSymmetricReport {
        crossing_edge: crossing[0],
        real_zero_bound: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{BasePoint, BasePointSet, ExtendedComplex};
    use crate::symmetry::{catalog_tree, CatalogVariant};
    use crate::tree::{Parity, TreeEdge, TreeEnd, TreeInvolution, TreeItem, TreeParts, TreeVertex};

    fn real_base() -> BasePointSet {
        BasePointSet::new(
            vec![
                BasePoint::finite("0", 0.0, 0.0),
                BasePoint::finite("1", 1.0, 0.0),
                BasePoint::point("inf", ExtendedComplex::Infinity),
                BasePoint::finite("-1", -1.0, 0.0),
            ],
            true,
        )
        .unwrap()
    }

    fn vertex(parity: Parity) -> TreeVertex {
        TreeVertex {
            parity,
            on_axis: false,
        }
    }

    fn end(at: usize, left: usize, right: usize) -> TreeEnd {
        TreeEnd {
            at,
            left,
            right,
            axial: false,
        }
    }

    /// A cross above the axis joined to a circle below it, two ends each.
    fn crossing_pair() -> SpeiserTree {
        SpeiserTree::new(TreeParts {
            base: real_base(),
            vertices: vec![vertex(Parity::Cross), vertex(Parity::Circle)],
            edges: vec![TreeEdge { a: 0, b: 1 }],
            rotation: vec![
                vec![TreeItem::Edge(0), TreeItem::End(0), TreeItem::End(1)],
                vec![TreeItem::Edge(0), TreeItem::End(2), TreeItem::End(3)],
            ],
            ends: vec![end(0, 1, 0), end(0, 2, 1), end(1, 1, 2), end(1, 0, 1)],
            axis_orientation: None,
            involution: Some(TreeInvolution {
                vertices: vec![1, 0],
                ends: vec![3, 2, 1, 0],
            }),
        })
        .unwrap()
    }

    #[test]
    fn single_crossing_edge_bounds_real_zeros_by_one() {
        let report = almost_symmetric_audit(&crossing_pair()).unwrap();
        assert_eq!(
            report,
            AlmostSymmetricReport {
                crossing_edge: 0,
                real_zero_bound: 1
            }
        );
    }

    #[test]
    fn symmetric_catalog_tree_is_rejected() {
        let tree = catalog_tree(1, CatalogVariant::Infinite).unwrap();
        assert!(matches!(
            almost_symmetric_audit(&tree),
            Err(SymmetryError::NotAlmostSymmetric(_))
        ));
    }

    #[test]
    fn pairing_that_is_not_a_tree_map_is_rejected() {
        // path cross-circle-cross-circle with the outer and inner pairs swapped
        let tree = SpeiserTree::new(TreeParts {
            base: real_base(),
            vertices: vec![
                vertex(Parity::Cross),
                vertex(Parity::Circle),
                vertex(Parity::Cross),
                vertex(Parity::Circle),
            ],
            edges: vec![
                TreeEdge { a: 0, b: 1 },
                TreeEdge { a: 1, b: 2 },
                TreeEdge { a: 2, b: 3 },
            ],
            rotation: vec![
                vec![TreeItem::Edge(0), TreeItem::End(0)],
                vec![TreeItem::Edge(0), TreeItem::Edge(1), TreeItem::End(1)],
                vec![TreeItem::Edge(1), TreeItem::End(2), TreeItem::Edge(2)],
                vec![TreeItem::Edge(2), TreeItem::End(3)],
            ],
            ends: vec![end(0, 3, 0), end(1, 0, 1), end(2, 2, 3), end(3, 1, 2)],
            axis_orientation: None,
            involution: Some(TreeInvolution {
                vertices: vec![1, 0, 3, 2],
                ends: vec![1, 0, 3, 2],
            }),
        })
        .unwrap();
        let err = almost_symmetric_audit(&tree).unwrap_err();
        assert!(matches!(err, SymmetryError::NotAlmostSymmetric(_)), "{err}");
    }
}
