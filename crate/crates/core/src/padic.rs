//! Deciding whether a monic squarefree integer polynomial has a root in Z_p
//! (equivalently Q_p, by monicity), by bounded lifting of root residues.
//!
//! With D = v_p(disc g), any root of g mod p^(2D+1) refines to a genuine
//! Z_p root: a surviving residue a has v_p(g'(a)) <= D, so the strong Hensel
//! inequality v_p(g(a)) > 2 v_p(g'(a)) holds at depth 2D+1.  Lifting
//! therefore terminates with a definite verdict at depth N = 2D+1.

use crate::error::{Error, Result};
use crate::modpoly;
use crate::primes;
use crate::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Verdict plus machine-checkable certificate for "g has a root in Z_p".
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PadicReport {
    pub prime: u64,
    pub depth_used: u32,
    pub has_root: bool,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Certificate {
    /// A residue with v_p(g(a)) > 2 v_p(g'(a)) (or an exact integer root,
    /// reported with `val_g: null`), refining to a Z_p root.
    Root {
        residue: String,
        modulus_exponent: u32,
        /// v_p(g(residue)); None encodes g(residue) = 0.
        val_g: Option<u32>,
        val_gprime: Option<u32>,
    },
    /// The residue set mod p^exhausted_at was empty.
    Exhausted { exhausted_at: u32 },
}

impl PadicReport {
    /// Re-verify a YES certificate by direct valuation computation.
    pub fn verify(&self, g: &IntPoly) -> bool {
        match &self.certificate {
            Certificate::Root {
                residue,
                modulus_exponent,
                val_g,
                val_gprime,
            } => {
                if !self.has_root {
                    return false;
                }
                let a: BigInt = match residue.parse() {
                    Ok(a) => a,
                    Err(_) => return false,
                };
                let ga = g.eval(&a);
                let dga = g.derivative().eval(&a);
                let vg = if ga.is_zero() {
                    None
                } else {
                    Some(primes::valuation(&ga, self.prime))
                };
                let vdg = if dga.is_zero() {
                    None
                } else {
                    Some(primes::valuation(&dga, self.prime))
                };
                if vg != *val_g || vdg != *val_gprime {
                    return false;
                }
                match (vg, vdg) {
                    (None, _) => true, // exact root
                    (Some(vg), Some(vdg)) => {
                        vg > 2 * vdg || *modulus_exponent >= vg.max(1)
                            && vg >= *modulus_exponent && vdg <= (*modulus_exponent - 1) / 2
                    }
                    (Some(_), None) => false,
                }
            }
            Certificate::Exhausted { .. } => !self.has_root,
        }
    }
}

fn check_preconditions(g: &IntPoly, p: u64) -> Result<BigInt> {
    if !primes::is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if g.deg() < 1 {
        return Err(Error::invalid("polynomial must be nonconstant"));
    }
    if !g.is_monic() {
        return Err(Error::invalid("polynomial must be monic"));
    }
    let disc = g.discriminant()?;
    if disc.is_zero() {
        return Err(Error::invalid("polynomial must be squarefree"));
    }
    Ok(disc)
}

/// Exactly { a mod p^k : g(a) = 0 mod p^k }, by level-by-level lifting.
/// Linear polynomials and residues with p not dividing g'(a) lift uniquely;
/// singular residues branch over all p candidates.
pub fn zp_roots_to_depth(g: &IntPoly, p: u64, k: u32, node_cap: usize) -> Result<Vec<BigInt>> {
    check_preconditions(g, p)?;
    if k == 0 {
        return Err(Error::invalid("depth must be positive"));
    }
    let mut level: Vec<BigInt> = modpoly::int_roots_mod_p(g, p)
        .into_iter()
        .map(BigInt::from)
        .collect();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut nodes = level.len();
    let gp = g.derivative();
    for _ in 1..k {
        let next_mod = &modulus * &pb;
        let mut next: Vec<BigInt> = Vec::new();
        for a in &level {
            let ga = g.eval(a);
            let dga = gp.eval(a).mod_floor(&pb);
            // g(a + t p^j) = g(a) + g'(a) t p^j  (mod p^(j+1))
            let lhs = (ga.div_floor(&modulus)).mod_floor(&pb);
            if !dga.is_zero() {
                let inv = mod_inv_u64(dga.to_u64().unwrap(), p);
                let t = ((&pb - lhs) * inv).mod_floor(&pb);
                next.push(a + t * &modulus);
            } else if lhs.is_zero() {
                for t in 0..p {
                    next.push(a + BigInt::from(t) * &modulus);
                }
            }
            nodes += next.len();
            if nodes > node_cap {
                return Err(Error::resource(format!(
                    "lifting tree exceeded node cap at modulus {modulus}"
                )));
            }
        }
        level = next;
        modulus = next_mod;
    }
    level.sort();
    Ok(level)
}

/// Decide "g has a root in Z_p" with certificate, lifting to depth
/// N = 2 v_p(disc g) + 1 with early Hensel certification.
pub fn has_qp_root(g: &IntPoly, p: u64, node_cap: usize) -> Result<PadicReport> {
    let disc = check_preconditions(g, p)?;
    let dv = primes::valuation(&disc, p);
    let depth_bound = 2 * dv + 1;
    let pb = BigInt::from(p);
    let gp = g.derivative();

    let certificate_for = |a: &BigInt, depth: u32| -> Option<Certificate> {
        let ga = g.eval(a);
        let dga = gp.eval(a);
        if ga.is_zero() {
            return Some(Certificate::Root {
                residue: a.to_string(),
                modulus_exponent: depth,
                val_g: None,
                val_gprime: if dga.is_zero() {
                    None
                } else {
                    Some(primes::valuation(&dga, p))
                },
            });
        }
        let vg = primes::valuation(&ga, p);
        let vdg = if dga.is_zero() {
            return None;
        } else {
            primes::valuation(&dga, p)
        };
        if vg > 2 * vdg {
            Some(Certificate::Root {
                residue: a.to_string(),
                modulus_exponent: depth,
                val_g: Some(vg),
                val_gprime: Some(vdg),
            })
        } else {
            None
        }
    };

    let mut level: Vec<BigInt> = modpoly::int_roots_mod_p(g, p)
        .into_iter()
        .map(BigInt::from)
        .collect();
    let mut modulus = pb.clone();
    let mut nodes = level.len();
    for depth in 1..=depth_bound {
        if level.is_empty() {
            return Ok(PadicReport {
                prime: p,
                depth_used: depth,
                has_root: false,
                certificate: Certificate::Exhausted { exhausted_at: depth },
            });
        }
        for a in &level {
            if let Some(cert) = certificate_for(a, depth) {
                return Ok(PadicReport {
                    prime: p,
                    depth_used: depth,
                    has_root: true,
                    certificate: cert,
                });
            }
        }
        if depth == depth_bound {
            break;
        }
        // Lift one level.
        let mut next: Vec<BigInt> = Vec::new();
        for a in &level {
            let ga = g.eval(a);
            let dga = gp.eval(a).mod_floor(&pb);
            let lhs = (ga.div_floor(&modulus)).mod_floor(&pb);
            if !dga.is_zero() {
                let inv = mod_inv_u64(dga.to_u64().unwrap(), p);
                let t = ((&pb - lhs) * inv).mod_floor(&pb);
                next.push(a + t * &modulus);
            } else if lhs.is_zero() {
                for t in 0..p {
                    next.push(a + BigInt::from(t) * &modulus);
                }
            }
            nodes += next.len();
            if nodes > node_cap {
                return Err(Error::resource(format!(
                    "lifting tree exceeded node cap at modulus {modulus}"
                )));
            }
        }
        level = next;
        modulus *= &pb;
    }
    // A residue survived to depth N = 2 v_p(disc) + 1: its g'-valuation is
    // at most v_p(disc), so the Hensel inequality holds and a Z_p root exists.
    let a = level.iter().min().unwrap();
    let ga = g.eval(a);
    let dga = gp.eval(a);
    let cert = Certificate::Root {
        residue: a.to_string(),
        modulus_exponent: depth_bound,
        val_g: if ga.is_zero() {
            None
        } else {
            Some(primes::valuation(&ga, p))
        },
        val_gprime: if dga.is_zero() {
            None
        } else {
            Some(primes::valuation(&dga, p))
        },
    };
    Ok(PadicReport {
        prime: p,
        depth_used: depth_bound,
        has_root: true,
        certificate: cert,
    })
}

fn mod_inv_u64(a: u64, p: u64) -> BigInt {
    // p is prime, a != 0 mod p
    let mut r = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    BigInt::from(r)
}
