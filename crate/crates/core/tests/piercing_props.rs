use khds_core::oracles::{all_minimum_piercings, brute_force_piercing, quadratic_piercing};
use khds_core::piercing::{compute_next, far_reaching};
use khds_core::{
    hits_every_arc, normalize_arcs, pierce_arcs, pierce_arcs_anchored, pierce_arcs_reduced, Arc,
    CircularDomain,
};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (3usize..16).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 1..=12)))
}

fn raw(arcs: &[(usize, usize)]) -> Vec<Arc> {
    arcs.iter()
        .enumerate()
        .map(|(i, &(s, e))| Arc::new(s, e, i))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn linear_matches_brute_force_and_quadratic((n, arcs) in family()) {
        let dom = CircularDomain { positions: n };
        let raw = raw(&arcs);
        let inst = normalize_arcs(dom, &raw).unwrap();
        let lin = pierce_arcs(&inst);
        let brute = brute_force_piercing(dom, &raw).unwrap();
        let quad = quadratic_piercing(&inst).unwrap();
        prop_assert_eq!(lin.len(), brute.len());
        prop_assert_eq!(quad.len(), brute.len());
        for a in &raw {
            prop_assert!(lin.points.iter().any(|&p| a.contains(dom, p)), "arc {:?} missed by {:?}", a, lin.points);
        }
        prop_assert!(inst.pierced_by(&lin.points));
    }

    #[test]
    fn normalized_family_is_containment_free((n, arcs) in family()) {
        let dom = CircularDomain { positions: n };
        let inst = normalize_arcs(dom, &raw(&arcs)).unwrap();
        for (i, a) in inst.arcs.iter().enumerate() {
            prop_assert!(!a.is_full_circle(dom));
            for (j, b) in inst.arcs.iter().enumerate() {
                if i != j {
                    let inside = dom.cw(b.s, a.s) + a.len(dom) <= b.len(dom);
                    prop_assert!(!inside, "{:?} inside {:?}", a, b);
                }
            }
            if i > 0 {
                prop_assert!(inst.arcs[i - 1].e < a.e);
            }
        }
    }

    #[test]
    fn next_is_first_arc_starting_after((n, arcs) in family()) {
        let dom = CircularDomain { positions: n };
        let inst = normalize_arcs(dom, &raw(&arcs)).unwrap();
        let map = compute_next(&inst);
        for p in 0..n {
            let want = inst.arcs.iter()
                .min_by_key(|a| match dom.cw(p, a.s) { 0 => n, d => d })
                .map(|a| a.e);
            if inst.in_f(p) {
                prop_assert_eq!(map.get(p), want, "p={}", p);
            }
        }
    }

    #[test]
    fn anchored_minimizes_distance((n, arcs) in family(), rho_seed in 0usize..1000) {
        let dom = CircularDomain { positions: n };
        let inst = normalize_arcs(dom, &raw(&arcs)).unwrap();
        prop_assume!(!inst.arcs.is_empty());
        let rho = rho_seed % n;
        let got = pierce_arcs_anchored(&inst, rho).unwrap();
        let all = all_minimum_piercings(dom, &inst.arcs).unwrap();
        prop_assert_eq!(got.len(), all[0].len());
        prop_assert!(inst.pierced_by(&got.points));
        let best = all.iter().map(|s| s.iter().map(|&p| dom.dist(rho, p)).min().unwrap()).min();
        prop_assert_eq!(got.anchored_distance, best);
    }

    #[test]
    fn reduced_is_largest_feasible((n, arcs) in family(), rho_seed in 0usize..1000, k in 2usize..6) {
        let dom = CircularDomain { positions: n };
        let raw = raw(&arcs);
        let inst = normalize_arcs(dom, &raw).unwrap();
        let rho = rho_seed % n;
        let m = pierce_arcs(&inst).len();
        let got = pierce_arcs_reduced(&inst, rho, k, m).unwrap();
        // the definition applied to the raw family, containing arcs included
        let feasible = |i: usize| {
            let rest: Vec<Arc> = raw.iter().copied().filter(|a| !far_reaching(&inst, rho, i)(a)).collect();
            brute_force_piercing(dom, &rest).unwrap().len() < m
        };
        let want = if m == 0 { None } else { (1..k).rev().find(|&i| feasible(i)) };
        prop_assert_eq!(got.as_ref().map(|g| g.0), want);
        if let Some((i, set)) = got {
            prop_assert_eq!(set.len(), m - 1);
            let rest = inst.retain(|a| !far_reaching(&inst, rho, i)(a));
            prop_assert!(rest.pierced_by(&set.points));
        }
    }

    #[test]
    fn hit_check_matches_naive((n, arcs) in family(), pts in proptest::collection::vec(0usize..64, 0..5)) {
        let dom = CircularDomain { positions: n };
        let raw = raw(&arcs);
        let pts: Vec<usize> = pts.into_iter().map(|p| p % n).collect();
        let naive = raw.iter().all(|a| pts.iter().any(|&p| a.contains(dom, p)));
        prop_assert_eq!(hits_every_arc(dom, &raw, &pts), naive);
    }
}
