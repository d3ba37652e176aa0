use speiser_cli::{parse_tree_file, serialize_tree};
use speiser_core::{
    catalog_tree, exp_ladder_tree, trig_ladder_tree, CatalogVariant, TreeFileError,
};

const GOLDEN_D1: &str = include_str!("golden/catalog_d1_infinite.tree");
const GOLDEN_D4: &str = include_str!("golden/catalog_d4_finite2.tree");

#[test]
fn catalog_serialization_matches_golden_files() {
    let d1 = catalog_tree(1, CatalogVariant::Infinite).unwrap();
    assert_eq!(serialize_tree(&d1), GOLDEN_D1);
    let d4 = catalog_tree(4, CatalogVariant::FiniteZeros(2)).unwrap();
    assert_eq!(serialize_tree(&d4), GOLDEN_D4);
}

#[test]
fn parse_then_serialize_is_byte_identical() {
    let mut trees = vec![exp_ladder_tree(), trig_ladder_tree()];
    for d in [1, 3, 4, 5, 7, 8] {
        trees.push(catalog_tree(d, CatalogVariant::Infinite).unwrap());
    }
    for (d, k) in [(2, 0), (4, 1), (6, 2), (8, 3)] {
        trees.push(catalog_tree(d, CatalogVariant::FiniteZeros(k)).unwrap());
    }
    for tree in &trees {
        let text = serialize_tree(tree);
        let parsed = parse_tree_file(&text).unwrap();
        assert_eq!(serialize_tree(&parsed), text);
        assert_eq!(parsed.to_parts().vertices, tree.to_parts().vertices);
        assert_eq!(parsed.to_parts().rotation, tree.to_parts().rotation);
        assert_eq!(parsed.ends(), tree.ends());
        assert_eq!(parsed.involution(), tree.involution());
        assert_eq!(parsed.base(), tree.base());
    }
}

#[test]
fn comments_blank_lines_and_section_order_are_ignored() {
    let mut lines: Vec<&str> = GOLDEN_D1.lines().collect();
    let header = lines.remove(0);
    lines.reverse();
    let shuffled = format!(
        "# a comment\n\n{header}  # trailing\n{}\n",
        lines.join("\n")
    );
    let tree = parse_tree_file(&shuffled).unwrap();
    assert_eq!(serialize_tree(&tree), GOLDEN_D1);
}

#[test]
fn missing_basepoints_is_a_syntax_error() {
    let text: String = GOLDEN_D1
        .lines()
        .filter(|l| !l.starts_with("basepoints"))
        .map(|l| format!("{l}\n"))
        .collect();
    assert!(matches!(
        parse_tree_file(&text),
        Err(TreeFileError::Syntax { .. })
    ));
}

#[test]
fn missing_header_is_a_syntax_error() {
    let text = GOLDEN_D1.replacen("speiser-tree v1", "speiser-tree v2", 1);
    assert_eq!(
        parse_tree_file(&text).map(|_| ()),
        Err(TreeFileError::Syntax {
            line: 1,
            message: "expected header `speiser-tree v1`".into()
        })
    );
}

#[test]
fn unknown_edge_in_rotation_is_an_invariant_violation() {
    let text = GOLDEN_D1.replace("rotation: v0: e0,end0", "rotation: v0: e7,end0");
    let line = text
        .lines()
        .position(|l| l.starts_with("rotation: v0"))
        .unwrap()
        + 1;
    match parse_tree_file(&text) {
        Err(TreeFileError::InvariantViolation { line: l, rule }) => {
            assert_eq!(l, line);
            assert!(rule.contains("e7"), "{rule}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_flank_name_is_an_invariant_violation() {
    let text = GOLDEN_D1.replace("flank(a1,a1~)", "flank(a1,b)");
    assert!(matches!(
        parse_tree_file(&text),
        Err(TreeFileError::InvariantViolation { .. })
    ));
}

#[test]
fn duplicate_vertex_id_is_an_invariant_violation() {
    let text = GOLDEN_D1.replace("vertex: 1 o 1", "vertex: 0 o 1");
    assert!(matches!(
        parse_tree_file(&text),
        Err(TreeFileError::InvariantViolation { line: 5, .. })
    ));
}

#[test]
fn empty_tree_is_rejected() {
    let text = "speiser-tree v1\nbasepoints: 0=0+0i,inf=inf\n";
    assert!(matches!(
        parse_tree_file(text),
        Err(TreeFileError::InvariantViolation { .. })
    ));
}

#[test]
fn broken_tree_structure_is_reported_against_the_header() {
    // v1 loses an end, so its labels no longer wind once around the base curve
    let text = GOLDEN_D1.replace("rotation: v1: end1,e0,end2", "rotation: v1: end1,e0");
    assert!(matches!(
        parse_tree_file(&text),
        Err(TreeFileError::InvariantViolation { line: 1, .. })
    ));
}
