//! Decision engine for the two headline predicates: a root mod p for all
//! primes p (weak) and a root in Q_p for all p (strong), plus example
//! families, witness sampling, brute-force oracles, and subset search.

pub mod checks;
pub mod families;
pub mod instance;
pub mod oracle;
pub mod search;

pub use checks::{
    check, strong_check, weak_check, ExceptionalReport, GroupInfo, InstanceReport, Predicate,
    Verdict,
};
pub use families::{gen_brandl, gen_quadratic_triple};
pub use instance::{verify_instance, verify_instance_str, GroupSpec, Instance, SuppliedGroup};
pub use oracle::{sample_no_witness, strong_scan, weak_scan};
pub use search::{search, SearchHit, SearchOutcome};
