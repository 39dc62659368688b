//! Instance validation: a product of monic irreducible factors of degree
//! at least 2, pairwise coprime, with its exceptional primes.

use crate::error::{Error, Result};
use crate::groups::PermGroup;
use crate::parse::{parse_poly_input, PolyInput};
use crate::zfactor::{factor_over_rationals, is_irreducible_over_q};
use crate::{Config, IntPoly};
use num_bigint::BigInt;
use num_traits::Zero;

/// Family-supplied Galois group acting on labeled roots.  `blocks[i]` lists
/// the points carrying the roots of factor i; stabilizers are re-derived,
/// never trusted.
#[derive(Debug, Clone)]
pub struct SuppliedGroup {
    pub group: PermGroup,
    pub blocks: Vec<Vec<usize>>,
}

/// Where the Galois group comes from, in decreasing order of trust.
#[derive(Debug, Clone)]
pub enum GroupSpec {
    /// Compute the splitting field exactly (preferred).
    Auto,
    /// Use a supplied group after Dedekind consistency sampling; verdicts
    /// are conditional on it.
    Supplied(SuppliedGroup),
    /// No group: only NO (by witness prime) or UNDECIDED are possible.
    SampledOnly,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub factors: Vec<IntPoly>,
    pub disc: BigInt,
    /// Primes dividing disc, ascending.
    pub exceptional_primes: Vec<u64>,
    pub group: GroupSpec,
}

impl Instance {
    pub fn m(&self) -> usize {
        self.factors.len()
    }

    pub fn product(&self) -> IntPoly {
        let mut f = IntPoly::one();
        for g in &self.factors {
            f = f.mul(g);
        }
        f
    }

    pub fn with_group(mut self, group: GroupSpec) -> Instance {
        self.group = group;
        self
    }
}

/// Validate stated factors: monic, irreducible, degree >= 2, pairwise
/// coprime.  The returned instance uses the Auto group source.
pub fn verify_instance(factors: &[IntPoly], cfg: &Config) -> Result<Instance> {
    if factors.is_empty() {
        return Err(Error::invalid("at least one factor required"));
    }
    for g in factors {
        if g.deg() < 1 || !g.is_monic() {
            return Err(Error::invalid(format!(
                "factor {g} must be monic and nonconstant"
            )));
        }
        if g.deg() == 1 {
            return Err(Error::invalid(format!(
                "factor {g} has a rational root"
            )));
        }
        if !is_irreducible_over_q(g, cfg.factor_degree_cap, cfg.prng_seed)? {
            return Err(Error::invalid(format!("factor {g} is reducible over Q")));
        }
    }
    for (i, g) in factors.iter().enumerate() {
        for h in &factors[i + 1..] {
            if g.resultant(h)?.is_zero() {
                return Err(Error::invalid(format!(
                    "factors {g} and {h} share a root"
                )));
            }
        }
    }
    let mut inst = Instance {
        factors: factors.to_vec(),
        disc: BigInt::from(0),
        exceptional_primes: Vec::new(),
        group: GroupSpec::Auto,
    };
    let disc = inst.product().discriminant()?;
    inst.exceptional_primes = crate::primes::prime_support(&disc).map_err(Error::resource)?;
    inst.disc = disc;
    Ok(inst)
}

/// Parse and validate an instance from text.  Stated factors must each be
/// irreducible; an expanded polynomial is factored over Q first.
pub fn verify_instance_str(input: &str, cfg: &Config) -> Result<Instance> {
    match parse_poly_input(input)? {
        PolyInput::Factored(fs) => verify_instance(&fs, cfg),
        PolyInput::Expanded(f) => {
            if !f.is_monic() || f.deg() < 1 {
                return Err(Error::invalid("polynomial must be monic and nonconstant"));
            }
            let fac = factor_over_rationals(&f, cfg.factor_degree_cap, cfg.prng_seed)?;
            for (g, mult) in &fac.factors {
                if *mult > 1 {
                    return Err(Error::invalid(format!("repeated factor {g}")));
                }
                if g.deg() == 1 {
                    return Err(Error::invalid(format!(
                        "factor {g} has a rational root"
                    )));
                }
            }
            let factors: Vec<IntPoly> = fac.factors.iter().map(|(g, _)| g.clone()).collect();
            verify_instance(&factors, cfg)
        }
    }
}
