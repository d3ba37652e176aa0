mod common;

use speiser_core::{
    exp_ladder_tree, extend_tree, is_isomorphic, skeleton_tree, trig_ladder_tree, validate_axioms,
};

#[test]
fn skeleton_inverts_extension_for_every_catalog_tree() {
    let mut trees = common::catalog_trees();
    trees.push((
        (0, speiser_core::CatalogVariant::Infinite),
        exp_ladder_tree(),
    ));
    trees.push((
        (0, speiser_core::CatalogVariant::Infinite),
        trig_ladder_tree(),
    ));
    for ((d, v), tree) in &trees {
        for depth in 1..=6 {
            let g = extend_tree(tree, depth).unwrap();
            let back = skeleton_tree(&g).unwrap();
            assert_eq!(&back, tree, "catalog({d}, {v:?}) at depth {depth}");
            let again = extend_tree(&back, depth).unwrap();
            assert!(
                is_isomorphic(&g, &again),
                "catalog({d}, {v:?}) at depth {depth}"
            );
        }
    }
}

#[test]
fn extensions_satisfy_the_axioms_at_every_depth() {
    for ((d, v), tree) in common::catalog_trees() {
        for depth in 1..=6 {
            let report = validate_axioms(&extend_tree(&tree, depth).unwrap());
            assert!(
                report.all_pass(),
                "catalog({d}, {v:?}) at depth {depth}: {report:?}"
            );
        }
    }
}

#[test]
fn different_depths_are_not_isomorphic() {
    for ((d, v), tree) in common::catalog_trees().into_iter().take(4) {
        let a = extend_tree(&tree, 2).unwrap();
        let b = extend_tree(&tree, 3).unwrap();
        assert!(!is_isomorphic(&a, &b), "catalog({d}, {v:?})");
    }
}
