//! Catalog of Frobenius groups built as affine actions x ↦ a·x + b on
//! finite fields, plus the order-72 example with quaternion complement.

use crate::error::{Error, Result};
use crate::groups::group::PermGroup;
use crate::groups::perm::Perm;
use crate::modpoly::ModPoly;
use crate::primes;

/// GF(p^k) with elements encoded as 0..q−1 in base p (digit i = coefficient
/// of the generator's i-th power).
struct Gf {
    p: u64,
    k: usize,
    q: u64,
    modulus: ModPoly,
}

impl Gf {
    fn new(p: u64, k: usize) -> Gf {
        let modulus = irreducible_poly(p, k);
        Gf {
            p,
            k,
            q: p.pow(k as u32),
            modulus,
        }
    }

    fn decode(&self, mut e: u64) -> ModPoly {
        let mut coeffs = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            coeffs.push(e % self.p);
            e /= self.p;
        }
        ModPoly::from_raw(self.p, coeffs)
    }

    fn encode(&self, f: &ModPoly) -> u64 {
        let mut e = 0u64;
        for i in (0..self.k).rev() {
            e = e * self.p + f.coeff(i);
        }
        e
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        self.encode(&self.decode(a).add(&self.decode(b)))
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.encode(&self.decode(a).mul(&self.decode(b)).rem(&self.modulus))
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    fn multiplicative_generator(&self) -> u64 {
        let factors = primes::prime_support(&num_bigint::BigInt::from(self.q - 1)).unwrap();
        'cand: for c in 1..self.q {
            for &f in &factors {
                if self.pow(c, (self.q - 1) / f) == 1 {
                    continue 'cand;
                }
            }
            return c;
        }
        unreachable!("a finite field has a multiplicative generator");
    }
}

fn irreducible_poly(p: u64, k: usize) -> ModPoly {
    if k == 1 {
        return ModPoly::x(p);
    }
    // Scan monic polynomials of degree k by their coefficient encoding.
    let total = p.pow(k as u32);
    for enc in 0..total {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut e = enc;
        for _ in 0..k {
            coeffs.push(e % p);
            e /= p;
        }
        coeffs.push(1);
        let f = ModPoly::from_raw(p, coeffs);
        if is_irreducible(&f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

fn is_irreducible(f: &ModPoly) -> bool {
    let p = f.prime();
    let k = f.deg();
    let x = ModPoly::x(p);
    // x^(p^k) ≡ x mod f, and x^(p^(k/r)) ≠ x for prime divisors r of k
    let mut xp = x.clone();
    let mut powers = vec![x.clone()];
    for _ in 0..k {
        xp = xp.powmod(p, f);
        powers.push(xp.clone());
    }
    if !powers[k].sub(&x).is_zero() {
        return false;
    }
    for r in 2..=k {
        if k % r == 0 && primes::is_prime(r as u64) {
            let d = k / r;
            if powers[d].sub(&x).is_zero() {
                return false;
            }
        }
    }
    true
}

/// F_q ⋊ C_d acting on the q field elements: translations by a basis plus
/// multiplication by an element of multiplicative order d.
pub fn affine_frobenius(p: u64, k: usize, d: u64, cap: usize) -> Result<PermGroup> {
    let gf = Gf::new(p, k);
    let q = gf.q;
    if d < 2 || (q - 1) % d != 0 {
        return Err(Error::invalid(format!("d = {d} must divide q - 1 = {}", q - 1)));
    }
    let c = gf.pow(gf.multiplicative_generator(), (q - 1) / d);
    let mut gens: Vec<Perm> = Vec::new();
    for i in 0..k {
        let e_i = gf.p.pow(i as u32);
        let images = (0..q).map(|v| gf.add(v, e_i) as usize).collect();
        gens.push(Perm::new(images)?);
    }
    let images = (0..q).map(|v| gf.mul(c, v) as usize).collect();
    gens.push(Perm::new(images)?);
    let g = PermGroup::closure(&gens, cap)?;
    debug_assert_eq!(g.order() as u64, q * d);
    Ok(g)
}

/// C₃² ⋊ Q₈ of order 72 on 9 points: Q₈ embedded in GL(2,3) acts without
/// nonzero fixed vectors.
pub fn c3c3_q8(cap: usize) -> Result<PermGroup> {
    let enc = |x: u64, y: u64| (x + 3 * y) as usize;
    let dec = |v: usize| ((v as u64) % 3, (v as u64) / 3);
    let apply_mat = |m: [[u64; 2]; 2]| {
        let images = (0..9)
            .map(|v| {
                let (x, y) = dec(v);
                enc(
                    (m[0][0] * x + m[0][1] * y) % 3,
                    (m[1][0] * x + m[1][1] * y) % 3,
                )
            })
            .collect();
        Perm::new(images)
    };
    let t1 = Perm::new((0..9).map(|v| {
        let (x, y) = dec(v);
        enc((x + 1) % 3, y)
    }).collect())?;
    let t2 = Perm::new((0..9).map(|v| {
        let (x, y) = dec(v);
        enc(x, (y + 1) % 3)
    }).collect())?;
    // i = [[0,-1],[1,0]], j = [[1,1],[1,-1]]: i² = j² = -1, ij = -ji
    let mi = apply_mat([[0, 2], [1, 0]])?;
    let mj = apply_mat([[1, 1], [1, 2]])?;
    let g = PermGroup::closure(&[t1, t2, mi, mj], cap)?;
    debug_assert_eq!(g.order(), 72);
    Ok(g)
}

/// All catalog Frobenius groups of order ≤ max_order: affine F_q ⋊ C_d for
/// prime powers q and divisors d > 1 of q − 1, plus C₃² ⋊ Q₈; deduplicated
/// by (order, degree, kernel order).
pub fn frobenius_catalog(max_order: usize, group_cap: usize) -> Result<Vec<PermGroup>> {
    let mut out: Vec<(u64, PermGroup)> = Vec::new();
    for p in primes::primes_upto(max_order as u64) {
        let mut k = 1usize;
        loop {
            let q = match p.checked_pow(k as u32) {
                Some(q) if (q as usize) * 2 <= max_order => q,
                _ => break,
            };
            for d in 2..q {
                if (q - 1) % d == 0 && (q * d) as usize <= max_order {
                    out.push((q, affine_frobenius(p, k, d, group_cap)?));
                }
            }
            k += 1;
        }
    }
    if max_order >= 72 {
        out.push((9, c3c3_q8(group_cap)?));
    }
    let mut keys: Vec<(usize, usize, u64)> = Vec::new();
    let mut dedup: Vec<PermGroup> = Vec::new();
    out.sort_by_key(|(_, g)| (g.order(), g.degree()));
    for (kernel_order, g) in out {
        let key = (g.order(), g.degree(), kernel_order);
        if !keys.contains(&key) {
            keys.push(key);
            dedup.push(g);
        }
    }
    Ok(dedup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::frobenius::frobenius_structure;

    #[test]
    fn agl_examples() {
        let g = affine_frobenius(5, 1, 4, 10080).unwrap();
        assert_eq!(g.order(), 20);
        let fs = frobenius_structure(&g).unwrap().unwrap();
        assert_eq!(fs.kernel_order, 5);

        let g = affine_frobenius(3, 2, 8, 10080).unwrap();
        assert_eq!(g.order(), 72);
        let fs = frobenius_structure(&g).unwrap().unwrap();
        assert_eq!(fs.kernel_order, 9);
        assert!(fs.checks.kernel_abelian);
    }

    #[test]
    fn q8_complement_group() {
        let g = c3c3_q8(10080).unwrap();
        assert_eq!(g.order(), 72);
        let fs = frobenius_structure(&g).unwrap().unwrap();
        assert_eq!(fs.kernel_order, 9);
        assert_eq!(fs.complement_order, 8);
        assert!(fs.checks.all_pass() || !fs.checks.kernel_abelian);
        // complement Q8 is nonabelian but the kernel is abelian
        assert!(fs.checks.kernel_abelian);
        assert!(fs.checks.complement_malnormal);
    }

    #[test]
    fn catalog_orders_up_to_21() {
        let cat = frobenius_catalog(21, 10080).unwrap();
        let mut orders: Vec<usize> = cat.iter().map(|g| g.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![6, 10, 12, 14, 18, 20, 21]);
    }

    #[test]
    fn catalog_all_frobenius() {
        for g in frobenius_catalog(60, 10080).unwrap() {
            let fs = frobenius_structure(&g).unwrap();
            assert!(fs.is_some(), "order {} not Frobenius", g.order());
        }
    }
}
