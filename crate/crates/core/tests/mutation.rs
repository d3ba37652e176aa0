mod common;

use speiser_core::{find_involution, validate_axioms};

const SEED: u64 = 0x5eed_0001;

#[test]
fn catalog_graphs_start_valid() {
    for (d, v) in common::catalog_cases() {
        let g = common::catalog_graph(d, v, 2);
        assert!(
            validate_axioms(&g).all_pass() && find_involution(&g).is_some(),
            "catalog({d}, {v:?})"
        );
    }
}

#[test]
fn seeded_single_mutations_are_all_rejected() {
    let c = common::mutation_campaign(SEED, 100);
    assert_eq!(c.mutations, 100);
    assert!(c.per_kind.iter().all(|&n| n > 0), "{:?}", c.per_kind);
    assert!(c.escapes.is_empty(), "escaped: {:?}", c.escapes);
    assert_eq!(c.unassembled + c.caught, 100);
}

#[test]
fn other_seeds_also_have_no_escapes() {
    for seed in 1..=5 {
        let c = common::mutation_campaign(seed, 100);
        assert!(c.escapes.is_empty(), "seed {seed}: {:?}", c.escapes);
    }
}
