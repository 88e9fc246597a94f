//! Constructive extraction procedures. Every success value is re-checked
//! against its defining predicates before it is returned.

mod bigramsey;
mod block;
mod digraph;
mod driver;
mod grow;
mod io;
mod magic;
mod product;
mod ramsey;
mod rigid;
mod seedling;
mod tree;

pub use bigramsey::{bigramsey_extract, verify_bigramsey, Bigramsey, BigramseyGroups};
pub use block::{block_to_anticomplete_paths, verify_anticomplete_paths, AnticompletePaths, StrongBlock};
pub use digraph::{
    digraph_fan_extraction, digraph_stable_greedy, digraph_stable_set, fan_greedy, verify_fan_selection, Fan,
};
pub use driver::{
    apex_tree, clean_report, embed_apex_tree, h_model_from_tree, main_driver, tidy_report, ApexEmbedding, CleanReport,
    DriverBudgets, DriverCertificate, DriverReport, TidyReport,
};
pub use grow::{grow_seedling, verify_children, GrowParams, GrowReport};
pub use io::{
    parse_anticomplete_paths, parse_block, parse_groups, parse_magic, parse_paths, parse_set_families,
    serialize_anticomplete_paths, serialize_block, serialize_groups, serialize_magic, serialize_paths,
    serialize_set_families, SetFamilies,
};
pub use magic::{magic_extract, verify_magic, Magic, MagicBranch};
pub use product::{product_ramsey_search, verify_grid, FnColoring, Grid, ProductColoring};
pub use ramsey::{ramsey_stable_or_clique, ramsey_within, Ramsey};
pub use rigid::{is_rigid, verify_not_rigid, Rigidity};
pub use seedling::{parse_seedlings, serialize_seedling, Seedling};
pub use tree::{seedling_to_tree, verify_seedling_tree, SeedlingTree, TreeParams};
