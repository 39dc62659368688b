//! The decision engine for the weak predicate (root mod p for all p) and
//! the strong predicate (root in Q_p for all p).
//!
//! With splitting field Galois group G and root stabilizers A_i, both
//! predicates require G to be covered by the conjugates of the A_i; for
//! primes away from disc f this is also sufficient (Chebotarev plus Hensel).
//! Primes dividing disc f are checked directly: a root mod p for the weak
//! predicate, a full p-adic decision per factor for the strong one.

use crate::decide::instance::{GroupSpec, Instance, SuppliedGroup};
use crate::decide::oracle::sample_no_witness;
use crate::error::{Error, Result};
use crate::groups::cover::{covers_sets, joint_core_trivial_sets, CoverReport};
use crate::groups::PermGroup;
use crate::modpoly::{factor_mod_p, int_roots_mod_p, ModPoly};
use crate::padic::{has_qp_root, PadicReport};
use crate::primes;
use crate::{Config, IntPoly};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub const DEDEKIND_SAMPLES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    Weak,
    Strong,
}

impl Predicate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Predicate::Weak => "weak",
            Predicate::Strong => "strong",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Undecided(String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        *self == Verdict::Yes
    }

    pub fn is_no(&self) -> bool {
        *self == Verdict::No
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Verdict::Undecided(_))
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verdict::Yes => s.serialize_str("YES"),
            Verdict::No => s.serialize_str("NO"),
            Verdict::Undecided(reason) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("UNDECIDED", reason)?;
                m.end()
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub order: usize,
    pub source: String,
}

/// Local evidence at one exceptional prime: roots of each factor mod p,
/// and for the strong predicate one PadicReport per factor.
#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalReport {
    pub p: u64,
    pub mod_p_roots: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub padic: Vec<PadicReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub predicate: String,
    pub verdict: Verdict,
    /// Group source actually used: computed, supplied, or sampled-only.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covering: Option<CoverReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub joint_core_trivial: Option<bool>,
    pub exceptional: Vec<ExceptionalReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_prime: Option<u64>,
    pub real_root_sanity: bool,
    pub seed: u64,
}

impl InstanceReport {
    /// Every report passes here; a strong YES must also satisfy the weak
    /// conditions, since a Z_p root reduces to a root mod p.
    fn finish(self) -> InstanceReport {
        if self.predicate == "strong" && self.verdict.is_yes() {
            assert!(self.covering.as_ref().is_some_and(|c| c.covered));
            assert!(self
                .exceptional
                .iter()
                .all(|e| e.mod_p_roots.iter().any(|r| !r.is_empty())));
        }
        if self.verdict.is_yes() {
            assert!(self.real_root_sanity);
        }
        self
    }
}

/// Group actually in hand when a check runs.
enum ResolvedGroup {
    Exact {
        source: &'static str,
        group: PermGroup,
        stabilizers: Vec<Vec<u32>>,
    },
    Missing(String),
}

fn resolve_group(inst: &Instance, cfg: &Config) -> Result<ResolvedGroup> {
    match &inst.group {
        GroupSpec::Auto => {
            match crate::splitting::splitting_data(
                &inst.factors,
                cfg.splitting_degree_cap,
                cfg.group_order_cap,
                cfg.prng_seed,
            ) {
                Ok(data) => Ok(ResolvedGroup::Exact {
                    source: "computed",
                    group: data.group,
                    stabilizers: data.stabilizers,
                }),
                Err(Error::Resource(msg)) => {
                    Ok(ResolvedGroup::Missing(format!("group not computed: {msg}")))
                }
                Err(e) => Err(e),
            }
        }
        GroupSpec::Supplied(sg) => {
            if let Some(msg) = supplied_group_mismatch(inst, sg, cfg)? {
                return Ok(ResolvedGroup::Missing(format!(
                    "supplied group rejected: {msg}"
                )));
            }
            let stabilizers = sg
                .blocks
                .iter()
                .map(|b| sg.group.point_stabilizer(b[0]))
                .collect();
            Ok(ResolvedGroup::Exact {
                source: "supplied",
                group: sg.group.clone(),
                stabilizers,
            })
        }
        GroupSpec::SampledOnly => Ok(ResolvedGroup::Missing("sampled-only mode".into())),
    }
}

/// Consistency screen for a supplied group: block sizes must match factor
/// degrees, each block must be a single orbit, and for sampled good primes
/// the factor degree patterns mod p must match the per-block cycle type of
/// some single group element (Dedekind).
fn supplied_group_mismatch(
    inst: &Instance,
    sg: &SuppliedGroup,
    cfg: &Config,
) -> Result<Option<String>> {
    if sg.blocks.len() != inst.factors.len() {
        return Ok(Some("block count differs from factor count".into()));
    }
    let total: usize = sg.blocks.iter().map(|b| b.len()).sum();
    if total != sg.group.degree() {
        return Ok(Some("blocks do not partition the points".into()));
    }
    for (g, block) in inst.factors.iter().zip(&sg.blocks) {
        if g.deg() != block.len() {
            return Ok(Some(format!("block size mismatch for factor {g}")));
        }
    }
    let orbits = sg.group.orbits();
    for block in &sg.blocks {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        if !orbits.iter().any(|o| {
            let mut o = o.clone();
            o.sort_unstable();
            o == sorted
        }) {
            return Ok(Some("a block is not an orbit".into()));
        }
    }
    let mut sampled = 0usize;
    for p in primes::primes() {
        if sampled == DEDEKIND_SAMPLES {
            break;
        }
        if (&inst.disc % BigInt::from(p)).is_zero() {
            continue;
        }
        sampled += 1;
        let mut patterns: Vec<Vec<usize>> = Vec::with_capacity(inst.factors.len());
        for g in &inst.factors {
            let mut degs: Vec<usize> = factor_mod_p(&ModPoly::from_int_poly(g, p), cfg.prng_seed)?
                .iter()
                .map(|(h, _)| h.deg())
                .collect();
            degs.sort_unstable();
            patterns.push(degs);
        }
        let matched = sg.group.elements().iter().any(|sigma| {
            sg.blocks
                .iter()
                .zip(&patterns)
                .all(|(block, pat)| block_cycle_type(sigma.images(), block) == *pat)
        });
        if !matched {
            return Ok(Some(format!(
                "factorization pattern mod {p} matches no group element"
            )));
        }
    }
    Ok(None)
}

/// Ascending cycle lengths of a permutation restricted to a block (blocks
/// are unions of cycles whenever they are orbits).
fn block_cycle_type(images: &[usize], block: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for &start in block {
        if seen.contains(&start) {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        loop {
            seen.push(cur);
            len += 1;
            cur = images[cur];
            if cur == start {
                break;
            }
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

/// At least one factor has a real root; covering forces this (complex
/// conjugation is an element of G and must fix a root), so every YES
/// report carries the bit as an archimedean sanity check.
fn real_root_sanity(factors: &[IntPoly]) -> bool {
    factors.iter().any(|g| crate::real_root_count(g) > 0)
}

fn exceptional_weak(inst: &Instance) -> Vec<ExceptionalReport> {
    inst.exceptional_primes
        .iter()
        .map(|&p| ExceptionalReport {
            p,
            mod_p_roots: inst.factors.iter().map(|g| int_roots_mod_p(g, p)).collect(),
            padic: Vec::new(),
        })
        .collect()
}

pub fn weak_check(inst: &Instance, cfg: &Config) -> Result<InstanceReport> {
    let exceptional = exceptional_weak(inst);
    let mut report = InstanceReport {
        predicate: Predicate::Weak.as_str().into(),
        verdict: Verdict::Yes,
        mode: String::new(),
        group: None,
        covering: None,
        joint_core_trivial: None,
        exceptional,
        witness_prime: None,
        real_root_sanity: real_root_sanity(&inst.factors),
        seed: cfg.prng_seed,
    };
    // mod p is a field, so f has a root mod p iff some factor does
    let bad_exceptional = report
        .exceptional
        .iter()
        .find(|e| e.mod_p_roots.iter().all(|r| r.is_empty()))
        .map(|e| e.p);
    match resolve_group(inst, cfg)? {
        ResolvedGroup::Exact {
            source,
            group,
            stabilizers,
        } => {
            let covering = covers_sets(&group, &stabilizers)?;
            report.joint_core_trivial = Some(joint_core_trivial_sets(&group, &stabilizers)?);
            report.mode = source.into();
            report.group = Some(GroupInfo {
                order: group.order(),
                source: source.into(),
            });
            if !covering.covered {
                // infinitely many witness primes exist; hunt a concrete one
                report.witness_prime =
                    sample_no_witness(&inst.factors, cfg.prime_sample_count)?;
                if report.witness_prime.is_none() {
                    report.witness_prime = bad_exceptional;
                }
                report.verdict = Verdict::No;
            } else if let Some(p) = bad_exceptional {
                report.witness_prime = Some(p);
                report.verdict = Verdict::No;
            }
            report.covering = Some(covering);
        }
        ResolvedGroup::Missing(reason) => {
            report.mode = match inst.group {
                GroupSpec::Supplied(_) => "supplied".into(),
                _ => "sampled-only".into(),
            };
            let sampled = sample_no_witness(&inst.factors, cfg.prime_sample_count)?;
            match bad_exceptional.into_iter().chain(sampled).min() {
                Some(p) => {
                    report.witness_prime = Some(p);
                    report.verdict = Verdict::No;
                }
                None => report.verdict = Verdict::Undecided(reason),
            }
        }
    }
    Ok(report.finish())
}

pub fn strong_check(inst: &Instance, cfg: &Config) -> Result<InstanceReport> {
    let mut report = weak_check(inst, cfg)?;
    report.predicate = Predicate::Strong.as_str().into();
    if report.verdict.is_no() {
        // no root mod p already rules out a Q_p root
        return Ok(report.finish());
    }
    // Per exceptional prime, decide Z_p roots factor by factor; f has a
    // Q_p root iff some factor does.
    let mut failing: Option<u64> = None;
    let mut undecided: Option<String> = None;
    for entry in report.exceptional.iter_mut() {
        let mut any_yes = false;
        let mut capped = false;
        for g in &inst.factors {
            match has_qp_root(g, entry.p, cfg.padic_node_cap) {
                Ok(r) => {
                    any_yes |= r.has_root;
                    entry.padic.push(r);
                }
                Err(Error::Resource(msg)) => {
                    capped = true;
                    if undecided.is_none() {
                        undecided = Some(format!("p-adic cap at p = {}: {msg}", entry.p));
                    }
                }
                Err(e) => return Err(e),
            }
        }
        if !any_yes && !capped && failing.is_none() {
            failing = Some(entry.p);
        }
    }
    if report.verdict.is_yes() {
        if let Some(p) = failing {
            report.witness_prime = Some(p);
            report.verdict = Verdict::No;
        } else if let Some(reason) = undecided {
            report.verdict = Verdict::Undecided(reason);
        }
    } else if report.verdict.is_undecided() {
        // weak UNDECIDED can still harden to NO via a local failure
        if let Some(p) = failing {
            report.witness_prime = Some(p);
            report.verdict = Verdict::No;
        }
    }
    Ok(report.finish())
}

pub fn check(inst: &Instance, predicate: Predicate, cfg: &Config) -> Result<InstanceReport> {
    match predicate {
        Predicate::Weak => weak_check(inst, cfg),
        Predicate::Strong => strong_check(inst, cfg),
    }
}
