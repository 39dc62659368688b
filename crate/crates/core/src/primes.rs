//! Prime utilities: deterministic Miller-Rabin for u64, prime iteration,
//! and integer factorization (trial division plus Pollard rho) sized for
//! discriminants at desk scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set is deterministic for all u64.
    'outer: for &a in &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn next_prime(n: u64) -> u64 {
    let mut k = n + 1;
    while !is_prime(k) {
        k += 1;
    }
    k
}

/// Iterator over primes 2, 3, 5, ...
pub fn primes() -> impl Iterator<Item = u64> {
    let mut p = 1u64;
    std::iter::from_fn(move || {
        p = next_prime(p);
        Some(p)
    })
}

/// All primes up to and including `bound` (simple sieve).
pub fn primes_upto(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

fn pollard_rho(n: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    let mut c = 1u64;
    while c < 64 {
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let mut steps = 0u64;
        while d == 1 {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = x.abs_diff(y).gcd(&n);
            steps += 1;
            if steps > 1 << 22 {
                break;
            }
        }
        if d != 1 && d != n {
            return Some(d);
        }
        c += 1;
    }
    None
}

fn factor_u64_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    match pollard_rho(n) {
        Some(d) => {
            factor_u64_into(d, out);
            factor_u64_into(n / d, out);
        }
        None => out.push(n), // give up; caller checks primality
    }
}

/// Distinct prime factors of |n|, ascending.  Fails if a composite cofactor
/// larger than u64 (or one rho cannot crack) remains.
pub fn prime_support(n: &BigInt) -> Result<Vec<u64>, String> {
    let mut n = n.abs();
    if n.is_zero() {
        return Err("zero has no prime support".into());
    }
    let mut out: Vec<u64> = Vec::new();
    for p in primes_upto(100_000) {
        let pb = BigInt::from(p);
        if (&n % &pb).is_zero() {
            out.push(p);
            while (&n % &pb).is_zero() {
                n /= &pb;
            }
        }
        if n.is_one() {
            break;
        }
    }
    if !n.is_one() {
        match n.to_u64() {
            Some(rest) => {
                let mut fs = Vec::new();
                factor_u64_into(rest, &mut fs);
                for f in fs {
                    if !is_prime(f) {
                        return Err(format!("could not factor cofactor {f}"));
                    }
                    if !out.contains(&f) {
                        out.push(f);
                    }
                }
            }
            None => {
                // Large cofactor: accept it only if it is a (probable) prime
                // that fits; otherwise report failure.
                return Err(format!("discriminant cofactor too large to factor: {n}"));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// v_p(n) for nonzero n.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    v
}
