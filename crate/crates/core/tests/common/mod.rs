#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use speiser_core::{
    catalog_tree, extend_tree, find_involution, validate_axioms, CatalogVariant, GraphItem,
    SpeiserGraph, SpeiserTree,
};

pub const INFINITE_DEGREES: [usize; 7] = [1, 3, 4, 5, 7, 8, 9];
pub const FINITE_DEGREES: [usize; 4] = [2, 4, 6, 8];
pub const FINITE_COUNTS: [usize; 4] = [0, 1, 2, 3];

/// Every catalog case named in the acceptance list, in a fixed order.
pub fn catalog_cases() -> Vec<(usize, CatalogVariant)> {
    let mut cases: Vec<(usize, CatalogVariant)> = INFINITE_DEGREES
        .iter()
        .map(|&d| (d, CatalogVariant::Infinite))
        .collect();
    for d in FINITE_DEGREES {
        for k in FINITE_COUNTS {
            cases.push((d, CatalogVariant::FiniteZeros(k)));
        }
    }
    cases
}

pub fn catalog_trees() -> Vec<((usize, CatalogVariant), SpeiserTree)> {
    catalog_cases()
        .into_iter()
        .map(|(d, v)| {
            (
                (d, v),
                catalog_tree(d, v).unwrap_or_else(|e| panic!("catalog({d}, {v:?}): {e}")),
            )
        })
        .collect()
}

pub fn catalog_graph(d: usize, v: CatalogVariant, depth: usize) -> SpeiserGraph {
    extend_tree(&catalog_tree(d, v).unwrap(), depth).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    SwapFaceLabels,
    DeleteBundleEdge,
    FlipRotation,
}

/// One random single mutation of `g`, or `None` when the chosen kind has no
/// effect on this graph. An `Err` means the mutated map could not even be
/// assembled.
pub fn mutate(
    g: &SpeiserGraph,
    kind: Kind,
    rng: &mut ChaCha8Rng,
) -> Option<Result<SpeiserGraph, String>> {
    match kind {
        Kind::SwapFaceLabels => {
            let n = g.faces().len();
            let (f1, f2) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let (l1, l2) = (g.faces()[f1].label, g.faces()[f2].label);
            (l1 != l2).then(|| Ok(g.with_swapped_face_labels(f1, f2)))
        }
        Kind::DeleteBundleEdge => {
            // half-edges whose edge has a parallel twin
            let bundled: Vec<usize> = (0..g.half_edge_count())
                .filter(|&h| h < g.mate(h))
                .filter(|&h| {
                    let (a, b) = (g.half_vertex(h), g.half_vertex(g.mate(h)));
                    (0..g.half_edge_count())
                        .filter(|&x| x != h && x < g.mate(x))
                        .any(|x| {
                            let (c, d) = (g.half_vertex(x), g.half_vertex(g.mate(x)));
                            (c, d) == (a, b) || (c, d) == (b, a)
                        })
                })
                .collect();
            if bundled.is_empty() {
                return None;
            }
            let h = bundled[rng.gen_range(0..bundled.len())];
            Some(g.without_edge(h).map_err(|e| e.to_string()))
        }
        Kind::FlipRotation => {
            let candidates: Vec<usize> = (0..g.vertex_count())
                .filter(|&v| {
                    let r = g.rotation(v);
                    r.len() >= 3
                        && r.iter().filter(|i| matches!(i, GraphItem::Half(_))).count() >= 2
                })
                .collect();
            if candidates.is_empty() {
                return None;
            }
            let v = candidates[rng.gen_range(0..candidates.len())];
            let k = rng.gen_range(0..g.rotation(v).len());
            Some(g.with_swapped_items(v, k).map_err(|e| e.to_string()))
        }
    }
}

pub fn rejected(m: &SpeiserGraph) -> bool {
    !validate_axioms(m).all_pass() || find_involution(m).is_none()
}

#[derive(Debug, Default)]
pub struct Campaign {
    pub mutations: usize,
    pub per_kind: [usize; 3],
    /// Mutated maps that could not be assembled at all.
    pub unassembled: usize,
    /// Mutations caught by the axiom or symmetry checks.
    pub caught: usize,
    pub escapes: Vec<((usize, CatalogVariant), Kind)>,
}

/// Apply `count` seeded random single mutations to depth-2 catalog graphs.
pub fn mutation_campaign(seed: u64, count: usize) -> Campaign {
    let graphs: Vec<_> = catalog_cases()
        .into_iter()
        .map(|(d, v)| ((d, v), catalog_graph(d, v, 2)))
        .collect();
    let kinds = [
        Kind::SwapFaceLabels,
        Kind::DeleteBundleEdge,
        Kind::FlipRotation,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Campaign::default();
    while c.mutations < count {
        let (case, g) = &graphs[rng.gen_range(0..graphs.len())];
        let which = rng.gen_range(0..kinds.len());
        let Some(result) = mutate(g, kinds[which], &mut rng) else {
            continue;
        };
        c.mutations += 1;
        c.per_kind[which] += 1;
        match result {
            Err(_) => c.unassembled += 1,
            Ok(m) if rejected(&m) => c.caught += 1,
            Ok(_) => c.escapes.push((*case, kinds[which])),
        }
    }
    c
}
