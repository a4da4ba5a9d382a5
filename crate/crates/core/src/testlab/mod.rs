//! Reference oracles, instance generators and small-graph enumeration used
//! by the tests and the experiment runner.

pub mod generators;
pub mod iso;
pub mod oracle;
pub mod rng;

pub use generators::{
    gen_case1, gen_case2, gen_case2_r2, gen_complete, gen_complete_bipartite, gen_cycle,
    gen_dirac_random, gen_extremal_degree, gen_extremal_order, gen_gnp, gen_ore_random, gen_path,
    gen_split_case, generate, Generated, InstanceSpec, Params, RandomInstance, Staged, FAMILIES,
};
pub use iso::{canonical_code, nonisomorphic_graphs};
pub use oracle::{
    oracle_limit, oracle_packing, oracle_partition, DEFAULT_ORACLE_LIMIT, MAX_ORACLE_LIMIT,
};
pub use rng::{rng_for, Phase};
