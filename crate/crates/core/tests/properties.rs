use proptest::prelude::*;

use pwtree_core::constants::{parse_expr, to_text, ConstExpr};
use pwtree_core::containment::{
    parse_branch_sets, parse_embedding, serialize_branch_sets, serialize_embedding, Embedding,
};
use pwtree_core::extraction::{
    digraph_fan_extraction, digraph_stable_set, parse_seedlings, product_ramsey_search, ramsey_stable_or_clique,
    serialize_seedling, verify_fan_selection, verify_grid, FnColoring, Ramsey,
};
use pwtree_core::generators::{
    parse_constellation_spec, random_constellation_spec, random_digraph, random_graph, random_seedling,
    serialize_constellation_spec, RandomSeedlingParams,
};
use pwtree_core::graph::{parse_digraph, parse_graph, serialize_digraph, serialize_graph};
use pwtree_core::width::{check_path_decomposition, parse_decomposition, serialize_decomposition, PathDecomposition};
use pwtree_core::{Budget, Outcome, VertexSet};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ramsey_never_fails_at_the_bound(seed in any::<u64>(), st in prop::sample::select(vec![(2usize, 2usize), (3, 2), (2, 3), (4, 2), (2, 4)]), p in 0.0f64..1.0) {
        let (s, t) = st;
        let g = random_graph(s.pow(t as u32), p, seed);
        prop_assert!(!matches!(ramsey_stable_or_clique(&g, s, t), Ramsey::Fail));
    }

    #[test]
    fn digraph_threshold(seed in any::<u64>(), r in 1usize..3, s in 1usize..4, p in 0.0f64..0.6) {
        let d = random_digraph(14, p, seed);
        let low: Vec<usize> = (0..d.n()).filter(|&v| d.out_degree(v) <= r).collect();
        let got = digraph_stable_set(&d, r, s);
        if low.len() >= (2 * r + 1) * s {
            let set = got.expect("threshold guarantees a stable set");
            prop_assert_eq!(set.len(), s);
            prop_assert!(d.is_stable(&set));
            prop_assert!(set.iter().all(|v| d.out_degree(v) <= r));
        }
    }

    #[test]
    fn fan_selections_verify(seed in any::<u64>(), q in 1usize..3, r in 1usize..3, p in 0.2f64..0.9) {
        let d = random_digraph(16, p, seed);
        if let Some(fan) = digraph_fan_extraction(&d, q, r, 1) {
            for v in &fan.s {
                let sel = fan.select(&[*v]);
                prop_assert!(verify_fan_selection(&d, &fan.s, &[*v], &sel, r));
            }
            if fan.s.len() >= q {
                let members = fan.s[..q].to_vec();
                let sel = fan.select(&members);
                prop_assert!(verify_fan_selection(&d, &fan.s, &members, &sel, r));
            }
        }
    }

    #[test]
    fn product_grids_verify(sizes in prop::collection::vec(2usize..5, 1..4), q in 1usize..3, salt in any::<u64>()) {
        let phi = FnColoring(|z: &[usize]| {
            z.iter().fold(salt, |h, &x| h.rotate_left(7) ^ (x as u64).wrapping_mul(0x9e37_79b9)) % 2
        });
        match product_ramsey_search(&sizes, q, &phi, &mut Budget::unlimited()) {
            Outcome::Found(grid) => prop_assert!(verify_grid(&sizes, q, &phi, &grid)),
            Outcome::Absent => prop_assert!(q > 1),
            Outcome::Exhausted => prop_assert!(false, "unlimited budget"),
        }
    }

    #[test]
    fn graph_and_digraph_round_trip(seed in any::<u64>(), n in 0usize..20, p in 0.0f64..1.0) {
        let g = random_graph(n, p, seed);
        prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
        let d = random_digraph(n, p, seed);
        prop_assert_eq!(parse_digraph(&serialize_digraph(&d)).unwrap(), d);
    }

    #[test]
    fn seedling_round_trip(seed in any::<u64>(), lambda in 1usize..5) {
        let params = RandomSeedlingParams { lambda, max_path_len: 4, cross_p: 0.2, triangle_free_ends: false, extra_y: 1 };
        let (g, sd) = random_seedling(&params, seed);
        let back = parse_seedlings(&g, &serialize_seedling(&sd)).unwrap();
        prop_assert_eq!(back, vec![sd]);
    }

    #[test]
    fn constellation_spec_round_trip(seed in any::<u64>()) {
        let spec = random_constellation_spec(20, seed);
        prop_assert_eq!(parse_constellation_spec(&serialize_constellation_spec(&spec)).unwrap(), spec);
    }

    #[test]
    fn certificate_round_trips(seed in any::<u64>(), n in 1usize..12) {
        let g = random_graph(n, 0.4, seed);
        let mut order: Vec<usize> = (0..n).collect();
        order.rotate_left(seed as usize % n);
        let dec = PathDecomposition::from_ordering(&g, &order);
        prop_assert!(check_path_decomposition(&g, &dec).is_ok());
        prop_assert_eq!(parse_decomposition(&serialize_decomposition(&dec)).unwrap(), dec);

        let parts: Vec<VertexSet> = (0..3).map(|k| VertexSet::from_iter_in(n, (0..n).filter(|v| v % 3 == k))).filter(|s| !s.is_empty()).collect();
        prop_assert_eq!(parse_branch_sets(n, &serialize_branch_sets(&parts)).unwrap(), parts);

        let e = Embedding { map: order.clone() };
        prop_assert_eq!(parse_embedding(n, &serialize_embedding(&e)).unwrap(), e);
    }

    #[test]
    fn expression_round_trip(a in 1u64..50, b in 1u64..6, name in "[a-z]{1,3}") {
        let e = ConstExpr::pow(
            ConstExpr::add(vec![ConstExpr::var(&name), ConstExpr::Lit(a.into())]),
            ConstExpr::max(vec![ConstExpr::Lit(b.into()), ConstExpr::binom(ConstExpr::var(&name), ConstExpr::Lit(2u64.into()))]),
        );
        prop_assert_eq!(parse_expr(&to_text(&e)).unwrap(), e);
    }
}
