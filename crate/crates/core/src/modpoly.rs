//! Dense polynomials over F_p (p a u64 prime): arithmetic, gcd, modular
//! exponentiation, squarefree / distinct-degree / equal-degree (Cantor-
//! Zassenhaus) factorization, root extraction and Dedekind cycle types.

use crate::error::{Error, Result};
use crate::IntPoly;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>, // ascending, reduced mod p, no trailing zeros
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod_u(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod_u(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<i64>) -> ModPoly {
        let pc = p as i64;
        let v = coeffs
            .into_iter()
            .map(|c| (((c % pc) + pc) % pc) as u64)
            .collect();
        ModPoly::from_raw(p, v)
    }

    pub fn from_raw(p: u64, mut coeffs: Vec<u64>) -> ModPoly {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> ModPoly {
        let pb = BigInt::from(p);
        let v = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        ModPoly::from_raw(p, v)
    }

    pub fn zero(p: u64) -> ModPoly {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> ModPoly {
        ModPoly::from_raw(p, vec![1])
    }

    pub fn x(p: u64) -> ModPoly {
        ModPoly::from_raw(p, vec![0, 1])
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|k| (self.coeff(k) + other.coeff(k)) % self.p)
            .collect();
        ModPoly::from_raw(self.p, v)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n)
            .map(|k| (self.coeff(k) + self.p - other.coeff(k)) % self.p)
            .collect();
        ModPoly::from_raw(self.p, v)
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::from_raw(self.p, out)
    }

    pub fn scale(&self, c: u64) -> ModPoly {
        let v = self.coeffs.iter().map(|&a| mulmod(a, c, self.p)).collect();
        ModPoly::from_raw(self.p, v)
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(invmod(self.lc(), self.p))
    }

    pub fn divrem(&self, div: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!div.is_zero());
        let dd = div.degree().unwrap();
        let inv = invmod(div.lc(), self.p);
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (ModPoly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let q = mulmod(rem[i], inv, self.p);
            quot[i - dd] = q;
            for (j, &c) in div.coeffs.iter().enumerate() {
                let t = mulmod(q, c, self.p);
                rem[i - dd + j] = (rem[i - dd + j] + self.p - t) % self.p;
            }
        }
        (ModPoly::from_raw(self.p, quot), ModPoly::from_raw(self.p, rem))
    }

    pub fn rem(&self, div: &ModPoly) -> ModPoly {
        self.divrem(div).1
    }

    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) monic with s*self + t*other = g.
    pub fn ext_gcd(&self, other: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = invmod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// self^e mod m, with a big exponent.
    pub fn powmod_big(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut base = self.rem(m);
        let mut acc = ModPoly::one(self.p);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < e.bits() {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn powmod(&self, e: u64, m: &ModPoly) -> ModPoly {
        self.powmod_big(&BigUint::from(e), m)
    }

    pub fn derivative(&self) -> ModPoly {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mulmod(c, (k as u64) % self.p, self.p))
            .collect();
        ModPoly::from_raw(self.p, v)
    }

    /// p-th root of a polynomial with zero derivative: g(x^p) -> g(x).
    fn pth_root(&self) -> ModPoly {
        let p = self.p as usize;
        let mut v = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if k % p == 0 {
                v.push(c); // a^(1/p) = a in F_p
            } else {
                debug_assert_eq!(c, 0);
            }
        }
        ModPoly::from_raw(self.p, v)
    }

    fn canonical_cmp(&self, other: &ModPoly) -> std::cmp::Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl std::fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModPoly(p={}, {:?})", self.p, self.coeffs)
    }
}

/// Squarefree decomposition mod p: list of (squarefree monic part, multiplicity).
fn squarefree_decomposition_mod_p(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.prime();
    let f = f.monic();
    if f.deg() == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    if df.is_zero() {
        // f = g(x^p): recurse and multiply multiplicities by p.
        let root = f.pth_root();
        return squarefree_decomposition_mod_p(&root)
            .into_iter()
            .map(|(g, m)| (g, m * p as usize))
            .collect();
    }
    let mut out: Vec<(ModPoly, usize)> = Vec::new();
    let a0 = f.gcd(&df);
    let mut b = f.divrem(&a0).0;
    let mut c = df.divrem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1usize;
    loop {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.divrem(&a).0;
        if b.deg() == 0 {
            break;
        }
        c = d.divrem(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    // Whatever is left of a0 after removing the found parts is a p-th power.
    let mut rest = a0;
    for (g, m) in &out {
        for _ in 1..*m {
            let (q, r) = rest.divrem(g);
            debug_assert!(r.is_zero());
            rest = q;
        }
    }
    if rest.deg() > 0 {
        for (g, m) in squarefree_decomposition_mod_p(&rest) {
            match out.iter_mut().find(|(h, _)| *h == g) {
                Some(entry) => entry.1 += m,
                None => out.push((g, m)),
            }
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic f:
/// returns (product of irreducible factors of degree d, d) pairs.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.prime();
    let mut f = f.monic();
    let mut out = Vec::new();
    let mut h = ModPoly::x(p);
    let mut d = 0usize;
    while f.deg() > 0 {
        d += 1;
        if 2 * d > f.deg() {
            out.push((f.clone(), f.deg()));
            break;
        }
        h = h.powmod(p, &f);
        let g = h.sub(&ModPoly::x(p)).gcd(&f);
        if g.deg() > 0 {
            out.push((g.clone(), d));
            f = f.divrem(&g).0;
            h = h.rem(&f);
        }
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace maps for p = 2).
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let p = f.prime();
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    loop {
        let n = f.deg();
        let a = ModPoly::from_raw(
            p,
            (0..n).map(|_| rng.gen_range(0..p)).collect::<Vec<_>>(),
        );
        if a.deg() == 0 && a.is_zero() {
            continue;
        }
        let g1 = a.gcd(f);
        if g1.deg() > 0 && g1.deg() < n {
            equal_degree(&g1, d, rng, out);
            equal_degree(&f.divrem(&g1).0, d, rng, out);
            return;
        }
        let b = if p == 2 {
            // Trace map over F_{2^d}: a + a^2 + ... + a^(2^(d-1)).
            let mut acc = ModPoly::zero(p);
            let mut t = a.rem(f);
            for _ in 0..d {
                acc = acc.add(&t);
                t = t.mul(&t).rem(f);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            a.powmod_big(&e, f).sub(&ModPoly::one(p))
        };
        let g = b.gcd(f);
        if g.deg() > 0 && g.deg() < n {
            equal_degree(&g, d, rng, out);
            equal_degree(&f.divrem(&g).0, d, rng, out);
            return;
        }
    }
}

/// Complete monic factorization mod p with multiplicities, canonically sorted.
/// The randomized equal-degree step is seeded; output is seed-independent.
pub fn factor_mod_p(f: &ModPoly, seed: u64) -> Result<Vec<(ModPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::invalid("factor_mod_p: zero polynomial"));
    }
    if f.deg() == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ f.prime().wrapping_mul(0x9e3779b97f4a7c15));
    let mut out: Vec<(ModPoly, usize)> = Vec::new();
    for (sf, mult) in squarefree_decomposition_mod_p(f) {
        for (prod, d) in distinct_degree(&sf) {
            let mut irr = Vec::new();
            equal_degree(&prod, d, &mut rng, &mut irr);
            for g in irr {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    // Product check (exact): rebuild and compare with the monic input.
    let mut check = ModPoly::one(f.prime());
    for (g, m) in &out {
        for _ in 0..*m {
            check = check.mul(g);
        }
    }
    if check != f.monic() {
        return Err(Error::internal("factor_mod_p product check failed"));
    }
    Ok(out)
}

/// All residues a with f(a) = 0 mod p, ascending.
pub fn roots_mod_p(f: &ModPoly) -> Vec<u64> {
    let p = f.prime();
    if f.is_zero() {
        return (0..p).collect();
    }
    if p < 512 {
        return (0..p).filter(|&a| f.eval(a) == 0).collect();
    }
    // gcd with x^p - x isolates the linear part.
    let xp = ModPoly::x(p).powmod(p, f);
    let lin = xp.sub(&ModPoly::x(p)).gcd(f);
    let mut roots = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xabcd ^ p);
    extract_roots(&lin, &mut rng, &mut roots);
    roots.sort_unstable();
    roots
}

fn extract_roots(g: &ModPoly, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let p = g.prime();
    match g.deg() {
        0 => {}
        1 => {
            // c1 x + c0 = 0  ->  x = -c0/c1
            let r = mulmod(p - g.coeff(0) % p, invmod(g.coeff(1), p), p) % p;
            out.push(r);
        }
        _ => loop {
            let t = rng.gen_range(0..p);
            let shifted = ModPoly::from_raw(p, vec![t, 1]);
            let b = shifted
                .powmod((p - 1) / 2, g)
                .sub(&ModPoly::one(p));
            let h = b.gcd(g);
            if h.deg() > 0 && h.deg() < g.deg() {
                extract_roots(&h, rng, out);
                extract_roots(&g.divrem(&h).0, rng, out);
                return;
            }
        },
    }
}

/// Convenience: roots of an integer polynomial mod p.
pub fn int_roots_mod_p(f: &IntPoly, p: u64) -> Vec<u64> {
    roots_mod_p(&ModPoly::from_int_poly(f, p))
}

/// Degree multiset of the factorization of f mod p, for p not dividing
/// disc(f).  Under that precondition all multiplicities are 1 and the
/// multiset is the cycle type of the Frobenius element on the roots.
pub fn cycle_type(f: &IntPoly, p: u64, seed: u64) -> Result<Vec<usize>> {
    let disc = f.discriminant()?;
    if (disc % BigInt::from(p)).is_zero() {
        return Err(Error::invalid(format!("p = {p} divides disc(f)")));
    }
    let fp = ModPoly::from_int_poly(f, p);
    let factors = factor_mod_p(&fp, seed)?;
    let mut degrees = Vec::new();
    for (g, m) in factors {
        debug_assert_eq!(m, 1);
        for _ in 0..m {
            degrees.push(g.deg());
        }
    }
    degrees.sort_unstable();
    Ok(degrees)
}

impl ModPoly {
    /// Balanced integer lift: coefficients in (-p/2, p/2].
    pub fn lift_balanced(&self) -> IntPoly {
        let p = BigInt::from(self.p);
        let half = &p / 2;
        crate::poly::Poly::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    let c = BigInt::from(c);
                    if c > half {
                        c - &p
                    } else {
                        c
                    }
                })
                .collect(),
        )
    }

    /// Plain lift with coefficients in [0, p).
    pub fn lift(&self) -> IntPoly {
        crate::poly::Poly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn ip(v: &[i64]) -> IntPoly {
        Poly::from_i64(v)
    }

    #[test]
    fn factor_examples() {
        // x^2+1 mod 5 = (x-2)(x-3) = (x+3)(x+2)
        let f = ModPoly::new(5, vec![1, 0, 1]);
        let fs = factor_mod_p(&f, 1).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, ModPoly::new(5, vec![2, 1]));
        assert_eq!(fs[1].0, ModPoly::new(5, vec![3, 1]));

        // x^2+x+1 irreducible mod 2
        let f = ModPoly::new(2, vec![1, 1, 1]);
        let fs = factor_mod_p(&f, 1).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0.deg(), 2);

        // x^3-2 irreducible mod 7 (2 is not a cube mod 7)
        let f = ModPoly::new(7, vec![-2, 0, 0, 1]);
        let fs = factor_mod_p(&f, 1).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0.deg(), 3);
    }

    #[test]
    fn factor_with_multiplicity_and_p2() {
        // (x+1)^2 * (x^2+x+1) mod 2
        let f = ModPoly::new(2, vec![1, 1]);
        let g = ModPoly::new(2, vec![1, 1, 1]);
        let prod = f.mul(&f).mul(&g);
        let fs = factor_mod_p(&prod, 7).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], (ModPoly::new(2, vec![1, 1]), 2));
        assert_eq!(fs[1], (ModPoly::new(2, vec![1, 1, 1]), 1));
    }

    #[test]
    fn seed_independence() {
        let f = ModPoly::new(13, vec![3, 1, 4, 1, 5, 9, 2, 1]);
        let a = factor_mod_p(&f, 1).unwrap();
        let b = factor_mod_p(&f, 999).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn roots_examples() {
        assert_eq!(int_roots_mod_p(&ip(&[-2, 0, 0, 1]), 2), vec![0]);
        assert_eq!(int_roots_mod_p(&ip(&[-2, 0, 0, 1]), 3), vec![2]);
        assert!(int_roots_mod_p(&ip(&[1, 1, 1]), 2).is_empty());
        // large prime path (gcd with x^p - x)
        let r = int_roots_mod_p(&ip(&[-4, 0, 1]), 10007); // x^2 - 4
        assert_eq!(r, vec![2, 10005]);
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(cycle_type(&ip(&[1, 0, 1]), 5, 1).unwrap(), vec![1, 1]);
        assert_eq!(cycle_type(&ip(&[1, 0, 1]), 3, 1).unwrap(), vec![2]);
        let f = ip(&[-2, 0, 0, 1]).mul(&ip(&[1, 1, 1]));
        let ct = cycle_type(&f, 5, 1).unwrap();
        // must be the cycle type of an element of S_3 acting on the 5 roots
        let allowed: Vec<Vec<usize>> =
            vec![vec![1, 1, 1, 1, 1], vec![1, 2, 2], vec![2, 3]];
        assert!(allowed.contains(&ct), "unexpected cycle type {:?}", ct);
        assert!(cycle_type(&f, 2, 1).is_err()); // 2 | disc
    }
}
