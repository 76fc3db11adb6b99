use khds_core::oracles::brute_force_khds;
use khds_core::{gen_tree, solve_tree, verify_khds, GenSpec, Graph};
use proptest::prelude::*;

fn tree() -> impl Strategy<Value = (Graph, usize)> {
    (1usize..=18, any::<u64>(), 1usize..=4)
        .prop_map(|(n, seed, k)| (gen_tree(&GenSpec::new(n, seed)).unwrap(), k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn matches_brute_force((g, k) in tree()) {
        let d = solve_tree(&g, 0, k).unwrap().dom;
        prop_assert!(verify_khds(&g, &d).unwrap().covered);
        prop_assert_eq!(d.len(), brute_force_khds(&g, k).unwrap().len());
    }

    #[test]
    fn size_does_not_depend_on_root((g, k) in tree(), pick in any::<usize>()) {
        let root = pick % g.n();
        let a = solve_tree(&g, 0, k).unwrap().dom.len();
        let b = solve_tree(&g, root, k).unwrap().dom.len();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn only_the_root_may_be_a_leaf((g, k) in tree(), pick in any::<usize>()) {
        prop_assume!(g.n() >= 2);
        let root = pick % g.n();
        let d = solve_tree(&g, root, k).unwrap().dom;
        for &v in &d.members {
            prop_assert!(v == root || g.neighbors(v).len() > 1, "leaf {} chosen", v);
        }
    }
}
