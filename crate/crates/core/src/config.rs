/// Global knobs.  Every cap is a hard resource limit: hitting one produces a
/// resource error (or an UNDECIDED verdict), never a wrong answer.
#[derive(Debug, Clone)]
pub struct Config {
    /// Largest permutation group the closure routine will materialize.
    pub group_order_cap: usize,
    /// Largest splitting field degree `splitting_data` will build.
    pub splitting_degree_cap: usize,
    /// Largest group order for full subgroup-lattice enumeration.
    pub subgroup_enum_cap: usize,
    /// Node budget for the p-adic lifting tree.
    pub padic_node_cap: usize,
    /// How many primes the NO-witness sampler may try.
    pub prime_sample_count: usize,
    /// Bound for the "root mod n for all n" brute-force oracle.
    pub oracle_scan_bound: u64,
    /// Degree cap for factorization over Q of user-supplied input.
    pub factor_degree_cap: usize,
    /// Seed for every randomized step; recorded verbatim in reports.
    pub prng_seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            group_order_cap: 10080,
            splitting_degree_cap: 24,
            subgroup_enum_cap: 1000,
            padic_node_cap: 1_000_000,
            prime_sample_count: 200,
            oracle_scan_bound: 100_000,
            factor_degree_cap: 24,
            prng_seed: 0x5eed_0001,
        }
    }
}

impl Config {
    /// Apply `QPROOTS_*` environment overrides.  Command line flags are
    /// applied afterwards by the CLI and win over the environment.
    pub fn from_env() -> Self {
        let mut c = Config::default();
        let get = |name: &str| std::env::var(name).ok().and_then(|v| v.parse::<u64>().ok());
        if let Some(v) = get("QPROOTS_GROUP_ORDER_CAP") {
            c.group_order_cap = v as usize;
        }
        if let Some(v) = get("QPROOTS_SPLITTING_DEGREE_CAP") {
            c.splitting_degree_cap = v as usize;
        }
        if let Some(v) = get("QPROOTS_SUBGROUP_ENUM_CAP") {
            c.subgroup_enum_cap = v as usize;
        }
        if let Some(v) = get("QPROOTS_PADIC_NODE_CAP") {
            c.padic_node_cap = v as usize;
        }
        if let Some(v) = get("QPROOTS_PRIME_SAMPLE_COUNT") {
            c.prime_sample_count = v as usize;
        }
        if let Some(v) = get("QPROOTS_ORACLE_SCAN_BOUND") {
            c.oracle_scan_bound = v;
        }
        if let Some(v) = get("QPROOTS_FACTOR_DEGREE_CAP") {
            c.factor_degree_cap = v as usize;
        }
        if let Some(v) = get("QPROOTS_SEED") {
            c.prng_seed = v;
        }
        c
    }
}
