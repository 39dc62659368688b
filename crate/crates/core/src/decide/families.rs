//! Example-instance generators: the (x^r - 2)·Φ_r family with its known
//! Frobenius group, and the classical three-quadratics construction.

use crate::cyclotomic_prime;
use crate::decide::instance::{verify_instance, GroupSpec, Instance, SuppliedGroup};
use crate::error::{Error, Result};
use crate::groups::{Perm, PermGroup};
use crate::primes;
use crate::{Config, IntPoly};
use num_bigint::BigInt;
use num_traits::Signed;

/// (x^r - 2)·Φ_r for prime r >= 3, with the supplied Galois group of order
/// r(r-1): x -> a·x + b over F_r, acting on the r roots of x^r - 2 (points
/// 0..r-1, root i standing for 2^(1/r)·ζ^i) and the r-1 roots of Φ_r
/// (point r-1+j standing for ζ^j, 1 <= j <= r-1).
pub fn gen_brandl(r: u64, cfg: &Config) -> Result<Instance> {
    if r < 3 || !primes::is_prime(r) {
        return Err(Error::invalid("r must be a prime >= 3"));
    }
    let ru = r as usize;
    let mut xr2 = vec![0i64; ru + 1];
    xr2[0] = -2;
    xr2[ru] = 1;
    let factors = vec![IntPoly::from_i64(&xr2), cyclotomic_prime(r)];
    let inst = verify_instance(&factors, cfg)?;

    let n = 2 * ru - 1;
    let pt2 = |j: u64| ru - 1 + j as usize;
    // translation a = 1, b = 1: 2^(1/r) -> 2^(1/r)·ζ, ζ fixed
    let mut t: Vec<usize> = (0..n).collect();
    for i in 0..r {
        t[i as usize] = ((i + 1) % r) as usize;
    }
    // multiplier a = g (primitive root mod r), b = 0: ζ -> ζ^g
    let g = primitive_root(r);
    let mut mu: Vec<usize> = (0..n).collect();
    for i in 0..r {
        mu[i as usize] = ((g * i) % r) as usize;
    }
    for j in 1..r {
        mu[pt2(j)] = pt2((g * j) % r);
    }
    let group = PermGroup::closure(&[Perm::new(t)?, Perm::new(mu)?], cfg.group_order_cap)?;
    debug_assert_eq!(group.order() as u64, r * (r - 1));
    let blocks = vec![(0..ru).collect(), (ru..n).collect()];
    Ok(inst.with_group(GroupSpec::Supplied(SuppliedGroup { group, blocks })))
}

fn primitive_root(r: u64) -> u64 {
    let fs = primes::prime_support(&BigInt::from(r - 1)).unwrap();
    'cand: for g in 2..r {
        for &q in &fs {
            if powmod(g, (r - 1) / q, r) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("prime moduli have primitive roots");
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * a as u128 % m as u128) as u64;
        }
        a = (a as u128 * a as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// (x²-a)(x²-b)(x²-ab) with the supplied group C₂×C₂ on six points; needs
/// a, b, ab nonsquare, which for nonzero a, b reduces to: neither a square,
/// distinct squarefree parts.
pub fn gen_quadratic_triple(a: i64, b: i64, cfg: &Config) -> Result<Instance> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("a and b must be nonzero"));
    }
    if is_square(a) || is_square(b) {
        return Err(Error::invalid("a and b must be nonsquares"));
    }
    if squarefree_part(a) == squarefree_part(b) {
        return Err(Error::invalid(
            "a and b must have distinct squarefree parts (else ab is a square)",
        ));
    }
    let factors = vec![
        IntPoly::from_i64(&[-a, 0, 1]),
        IntPoly::from_i64(&[-b, 0, 1]),
        IntPoly::from_i64(&[-(a * b), 0, 1]),
    ];
    let inst = verify_instance(&factors, cfg)?;
    // points 2i, 2i+1 are ±the roots; negating √a also negates √(ab)
    let sa = Perm::parse_cycles("(1 2)(5 6)", 6)?;
    let sb = Perm::parse_cycles("(3 4)(5 6)", 6)?;
    let group = PermGroup::closure(&[sa, sb], cfg.group_order_cap)?;
    debug_assert_eq!(group.order(), 4);
    let blocks = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
    Ok(inst.with_group(GroupSpec::Supplied(SuppliedGroup { group, blocks })))
}

fn is_square(a: i64) -> bool {
    if a < 0 {
        return false;
    }
    let s = (a as f64).sqrt().round() as i64;
    (s - 1..=s + 1).any(|t| t >= 0 && t * t == a)
}

fn squarefree_part(a: i64) -> i64 {
    let n = BigInt::from(a).abs();
    let mut out: i64 = a.signum();
    for p in primes::prime_support(&n).unwrap() {
        if primes::valuation(&BigInt::from(a).abs(), p) % 2 == 1 {
            out *= p as i64;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::GroupSpec;

    fn supplied_order(inst: &Instance) -> usize {
        match &inst.group {
            GroupSpec::Supplied(sg) => sg.group.order(),
            _ => panic!("expected supplied group"),
        }
    }

    #[test]
    fn brandl_group_orders() {
        let cfg = Config::default();
        assert_eq!(supplied_order(&gen_brandl(3, &cfg).unwrap()), 6);
        let b5 = gen_brandl(5, &cfg).unwrap();
        assert_eq!(supplied_order(&b5), 20);
        assert_eq!(supplied_order(&gen_brandl(7, &cfg).unwrap()), 42);
        assert!(gen_brandl(4, &cfg).is_err());

        // the order-20 group is Frobenius with kernel C5
        if let GroupSpec::Supplied(sg) = &b5.group {
            let fs = crate::groups::frobenius_structure(
                &sg.group
                    .restrict_to_orbit(&(0..5).collect::<Vec<_>>(), 10080)
                    .unwrap(),
            )
            .unwrap()
            .unwrap();
            assert_eq!(fs.kernel_order, 5);
            assert_eq!(fs.complement_order, 4);
        }
    }

    #[test]
    fn quadratic_triple_validation() {
        let cfg = Config::default();
        let inst = gen_quadratic_triple(2, 17, &cfg).unwrap();
        assert_eq!(inst.m(), 3);
        assert_eq!(supplied_order(&inst), 4);
        assert!(gen_quadratic_triple(4, 3, &cfg).is_err());
        assert!(gen_quadratic_triple(2, 8, &cfg).is_err());
        assert!(gen_quadratic_triple(0, 3, &cfg).is_err());
        // negative radicands are fine
        assert!(gen_quadratic_triple(-1, 2, &cfg).is_ok());
    }
}
