mod common;

use rand::Rng;
use ubv_core::graph::{generate, GraphKind};
use ubv_core::layout::verify_representation;
use ubv_core::oracle::{brute_ub_tree, enumerate_trees, BRUTE_TREE_MAX_EDGES};
use ubv_core::tree::{is_ubvt, is_unit_rectangle_tree, tree_layout, ubvt_layout, unit_bar_tree, DecompositionSource};
use ubv_core::{Error, Graph};

fn check_against_brute(tree: &Graph) {
    let res = unit_bar_tree(tree, None).unwrap();
    assert_eq!(res.ub, brute_ub_tree(tree).unwrap(), "{:?}", tree.edges());
    res.decomposition.validate(tree).unwrap();
    assert_eq!(res.decomposition.width, res.ub);
    assert!(res.lower_bound() <= res.ub && res.ub <= res.upper_bound());
}

#[test]
fn every_labeled_tree_up_to_seven_vertices() {
    for n in 1..=7 {
        let mut count = 0usize;
        for tree in enumerate_trees(n, true).unwrap() {
            check_against_brute(&tree);
            count += 1;
        }
        assert_eq!(count, n.pow(n.saturating_sub(2) as u32));
    }
}

#[test]
fn random_trees_up_to_the_brute_force_cap() {
    let mut rng = common::rng(10);
    for _ in 0..300 {
        let n = rng.gen_range(2..=BRUTE_TREE_MAX_EDGES + 1);
        check_against_brute(&common::random_tree(&mut rng, n));
    }
}

#[test]
fn high_degree_trees_against_brute_force() {
    let mut rng = common::rng(11);
    for _ in 0..200 {
        let n = rng.gen_range(8..=BRUTE_TREE_MAX_EDGES + 1);
        let hubs = rng.gen_range(1..=3);
        let tree = Graph::new(n, (1..n).map(|i| (if i <= hubs { 0 } else { rng.gen_range(0..=hubs) }, i))).unwrap();
        check_against_brute(&tree);
    }
}

#[test]
fn value_does_not_depend_on_the_root() {
    let mut rng = common::rng(12);
    for _ in 0..100 {
        let n = rng.gen_range(1..=40);
        let tree = common::random_tree(&mut rng, n);
        let ub = unit_bar_tree(&tree, None).unwrap().ub;
        for root in 0..n {
            let res = unit_bar_tree(&tree, Some(root)).unwrap();
            assert_eq!(res.ub, ub, "root {root} of {:?}", tree.edges());
            res.decomposition.validate(&tree).unwrap();
        }
    }
}

#[test]
fn recognition_agrees_with_value_one() {
    for n in 1..=10 {
        for tree in enumerate_trees(n, false).unwrap() {
            let ub = unit_bar_tree(&tree, None).unwrap().ub;
            assert_eq!(is_ubvt(&tree).unwrap(), ub == 1, "{:?}", tree.edges());
            assert_eq!(is_unit_rectangle_tree(&tree).unwrap(), ub <= 2);
        }
    }
}

#[test]
fn named_trees() {
    let y = generate(GraphKind::YTree).unwrap();
    assert_eq!(unit_bar_tree(&y, None).unwrap().ub, 2);
    assert!(!is_ubvt(&y).unwrap());
    let star4 = generate(GraphKind::Star(4)).unwrap();
    assert_eq!(unit_bar_tree(&star4, None).unwrap().ub, 2);
    for legs in 1..=12 {
        let spider = generate(GraphKind::Spider { legs, leg_len: 3 }).unwrap();
        let res = unit_bar_tree(&spider, None).unwrap();
        assert_eq!(res.ub, legs.div_ceil(3).max(1), "{legs} legs");
        res.decomposition.validate(&spider).unwrap();
    }
}

#[test]
fn widened_pass_is_used_when_needed() {
    let mut rng = common::rng(13);
    let mut widened = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=BRUTE_TREE_MAX_EDGES + 1);
        let tree = common::random_tree(&mut rng, n);
        let res = unit_bar_tree(&tree, None).unwrap();
        if res.source != DecompositionSource::Greedy {
            widened += 1;
            assert_eq!(res.ub, res.upper_bound());
            assert_eq!(brute_ub_tree(&tree).unwrap(), res.ub);
        }
    }
    assert!(widened > 0, "no sampled tree needed the second pass");
}

#[test]
fn layouts_of_random_trees() {
    let mut rng = common::rng(14);
    for _ in 0..300 {
        let cat = common::random_subdivided_caterpillar(&mut rng, 60);
        let report = verify_representation(&ubvt_layout(&cat).unwrap(), &cat);
        assert!(report.represents_target && report.max_multiplicity == 1, "{:?}", cat.edges());

        let n = rng.gen_range(1..=60);
        let tree = common::random_tree(&mut rng, n);
        let report = verify_representation(&tree_layout(&tree).unwrap(), &tree);
        assert!(report.represents_target, "{:?}", tree.edges());
        assert_eq!(report.max_multiplicity, unit_bar_tree(&tree, None).unwrap().ub);
    }
}

#[test]
fn non_trees_are_rejected() {
    let cycle = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(unit_bar_tree(&cycle, None).unwrap_err(), Error::NotATree);
    let forest = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(unit_bar_tree(&forest, None).unwrap_err(), Error::NotATree);
    assert_eq!(ubvt_layout(&generate(GraphKind::Star(4)).unwrap()).unwrap_err(), Error::NotUbvt);
}

#[test]
fn large_trees_finish() {
    let mut rng = common::rng(15);
    let tree = common::random_recursive_tree(&mut rng, 200_000);
    let res = unit_bar_tree(&tree, None).unwrap();
    assert_eq!(res.decomposition.width, res.ub);
    let edges: usize = res.decomposition.parts.iter().map(|p| p.edges.len()).sum();
    assert_eq!(edges, tree.edge_count());
}
