mod suites;

use suites::oracles;

#[test]
fn induced_minor_search_matches_partition_enumeration() {
    oracles::induced_minor_search_matches_partition_enumeration();
}

#[test]
fn induced_subgraph_search_matches_permutations() {
    oracles::induced_subgraph_search_matches_permutations();
}

#[test]
fn routes_match_induced_path_filter() {
    oracles::routes_match_induced_path_filter();
}

#[test]
fn rigidity_matches_exhaustive_packing() {
    oracles::rigidity_matches_exhaustive_packing();
}

#[test]
fn packing_and_disjoint_paths_match_brute_force() {
    oracles::packing_and_disjoint_paths_match_brute_force();
}

#[test]
fn exact_pathwidth_matches_orderings() {
    oracles::exact_pathwidth_matches_orderings();
}
