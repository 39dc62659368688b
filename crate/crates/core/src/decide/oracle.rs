//! Group-free brute-force evidence: witness-prime sampling and the
//! "root mod n for all n" scan used to cross-check strong verdicts.

use crate::error::{Error, Result};
use crate::modpoly::int_roots_mod_p;
use crate::primes;
use crate::IntPoly;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Smallest prime p among the first `prime_budget` primes with p not
/// dividing disc f and no factor having a root mod p; None when every
/// sampled prime admits a root.
pub fn sample_no_witness(factors: &[IntPoly], prime_budget: usize) -> Result<Option<u64>> {
    let mut f = IntPoly::one();
    for g in factors {
        f = f.mul(g);
    }
    let disc = f.discriminant()?;
    for p in primes::primes().take(prime_budget) {
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        if factors.iter().all(|g| int_roots_mod_p(g, p).is_empty()) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Smallest prime p <= bound such that no factor has a root mod p,
/// exceptional primes included; None when the scan is clean.
pub fn weak_scan(factors: &[IntPoly], bound: u64) -> Option<u64> {
    primes::primes_upto(bound)
        .into_iter()
        .find(|&p| factors.iter().all(|g| int_roots_mod_p(g, p).is_empty()))
}

/// Smallest n <= bound with no root of f mod n, or None.  By CRT a minimal
/// failure is a prime power, so only prime powers are scanned; roots mod
/// p^(k+1) are lifted from roots mod p^k by testing all p refinements.
pub fn strong_scan(f: &IntPoly, bound: u64) -> Result<Option<u64>> {
    const NODE_CAP: usize = 1 << 22;
    let mut best: Option<u64> = None;
    for p in primes::primes_upto(bound) {
        let mut modulus = p;
        let mut roots: Vec<u64> = (0..p).filter(|&a| eval_mod(f, a, p) == 0).collect();
        loop {
            if roots.is_empty() {
                best = Some(best.map_or(modulus, |b| b.min(modulus)));
                break;
            }
            let next = match modulus.checked_mul(p) {
                Some(m) if m <= bound => m,
                _ => break,
            };
            if roots.len().saturating_mul(p as usize) > NODE_CAP {
                return Err(Error::resource(format!(
                    "root lifting mod {p}^k exceeded the node cap"
                )));
            }
            let mut lifted = Vec::new();
            for &a in &roots {
                for t in 0..p {
                    let b = a + t * modulus;
                    if eval_mod(f, b, next) == 0 {
                        lifted.push(b);
                    }
                }
            }
            roots = lifted;
            modulus = next;
        }
    }
    Ok(best)
}

fn eval_mod(f: &IntPoly, a: u64, m: u64) -> u64 {
    let mut acc: u128 = 0;
    let mb = BigInt::from(m);
    for c in f.coeffs().iter().rev() {
        let c = ((c % &mb + &mb) % &mb).to_u128().unwrap();
        acc = (acc * a as u128 + c) % m as u128;
    }
    acc as u64
}
