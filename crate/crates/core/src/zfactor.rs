//! Factorization over Q: squarefree decomposition, factorization mod a good
//! prime, Hensel lifting to a Mignotte-style bound, and subset recombination
//! with degree-sum and trailing-coefficient pruning.

use crate::error::{Error, Result};
use crate::modpoly::{factor_mod_p, ModPoly};
use crate::poly::Poly;
use crate::primes;
use crate::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Complete factorization over Q: constant * prod factor_i^mult_i, with each
/// factor primitive, irreducible, positive leading coefficient, and the list
/// canonically sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct QFactorization {
    pub constant: BigRational,
    pub factors: Vec<(IntPoly, usize)>,
}

impl QFactorization {
    /// Exact product of all parts.
    pub fn expand(&self) -> IntPoly {
        let mut acc = Poly::one();
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        debug_assert!(self.constant.denom().is_one());
        acc.scale(self.constant.numer())
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factor a nonzero integer polynomial over Q.
pub fn factor_over_rationals(f: &IntPoly, degree_cap: usize, seed: u64) -> Result<QFactorization> {
    if f.is_zero() {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    }
    if f.deg() > degree_cap {
        return Err(Error::resource(format!(
            "degree {} exceeds factorization cap {}",
            f.deg(),
            degree_cap
        )));
    }
    if f.degree() == Some(0) {
        return Ok(QFactorization {
            constant: BigRational::from_integer(f.lc()),
            factors: vec![],
        });
    }
    let mut content = f.content();
    if f.lc().is_negative() {
        content = -content;
    }
    let prim = f.primitive_part();
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    for (part, mult) in prim.squarefree_decomposition() {
        for g in factor_squarefree(&part, seed)? {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    let out = QFactorization {
        constant: BigRational::from_integer(content),
        factors,
    };
    if out.expand() != *f {
        return Err(Error::internal("factorization roundtrip failed"));
    }
    Ok(out)
}

pub fn is_irreducible_over_q(f: &IntPoly, degree_cap: usize, seed: u64) -> Result<bool> {
    if f.deg() < 1 {
        return Ok(false);
    }
    Ok(factor_over_rationals(f, degree_cap, seed)?.is_irreducible())
}

/// Zassenhaus on a primitive squarefree polynomial with positive lc.
fn factor_squarefree(f: &IntPoly, seed: u64) -> Result<Vec<IntPoly>> {
    debug_assert!(f.is_squarefree());
    if f.deg() == 1 {
        return Ok(vec![f.clone()]);
    }
    // Pick a good prime: p doesn't divide lc(f), f stays squarefree mod p.
    // Among the first few good primes, keep the one with fewest factors.
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for p in primes::primes() {
        if (f.lc() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = ModPoly::from_int_poly(f, p);
        if fp.deg() != f.deg() {
            continue;
        }
        if fp.gcd(&fp.derivative()).deg() != 0 {
            continue;
        }
        let fs = factor_mod_p(&fp, seed)?;
        let mods: Vec<ModPoly> = fs.into_iter().map(|(g, _)| g).collect();
        if mods.len() == 1 {
            return Ok(vec![f.clone()]); // irreducible mod p certifies over Q
        }
        if best.as_ref().map_or(true, |(_, b)| mods.len() < b.len()) {
            best = Some((p, mods));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, local) = best.ok_or_else(|| Error::internal("no good prime found"))?;

    // Lift to p^k >= 2 * bound + 1.
    let bound = f.factor_coeff_bound();
    let target = &bound * 2 + 1;
    let mut k = 1u32;
    let mut pk = BigInt::from(p);
    while pk < target {
        pk *= p;
        k += 1;
    }
    let lifted = hensel_lift_tree(f, &local, p, k)?;
    Ok(recombine(f, lifted, &pk))
}

/// Lift the monic factorization of f/lc(f) mod p to mod p^k (linear lifting
/// along a balanced factor tree).
fn hensel_lift_tree(f: &IntPoly, local: &[ModPoly], p: u64, k: u32) -> Result<Vec<IntPoly>> {
    let pk = BigInt::from(p).pow(k);
    // Make f monic mod p^k.
    let lc_inv = mod_inverse(&f.lc(), &pk)?;
    let fmon = f.scale(&lc_inv).reduce_mod(&pk);
    let mut out = Vec::with_capacity(local.len());
    lift_node(&fmon, local, p, k, &pk, &mut out)?;
    Ok(out)
}

fn lift_node(
    f: &IntPoly,
    local: &[ModPoly],
    p: u64,
    k: u32,
    pk: &BigInt,
    out: &mut Vec<IntPoly>,
) -> Result<()> {
    if local.len() == 1 {
        out.push(f.reduce_mod(pk));
        return Ok(());
    }
    let mid = local.len() / 2;
    let (left, right) = local.split_at(mid);
    let mut g0 = ModPoly::one(p);
    for m in left {
        g0 = g0.mul(m);
    }
    let mut h0 = ModPoly::one(p);
    for m in right {
        h0 = h0.mul(m);
    }
    let (g, h) = lift_pair(f, &g0, &h0, p, k)?;
    lift_node(&g, left, p, k, pk, out)?;
    lift_node(&h, right, p, k, pk, out)?;
    Ok(())
}

/// Lift f = g*h from mod p to mod p^k (f, g, h monic).  Linear steps: at
/// modulus p^j the correction solves u*h + v*g = e over F_p via the Bezout
/// identity s*g + t*h = 1.
fn lift_pair(f: &IntPoly, g0: &ModPoly, h0: &ModPoly, p: u64, k: u32) -> Result<(IntPoly, IntPoly)> {
    let (d, _s, t) = g0.ext_gcd(h0);
    if d.deg() != 0 || d.is_zero() {
        return Err(Error::internal("modular factors not coprime in lift"));
    }
    let pb = BigInt::from(p);
    let mut g = g0.lift();
    let mut h = h0.lift();
    let mut modulus = pb.clone();
    for _ in 1..k {
        // e = (f - g h) / p^j  mod p
        let next = &modulus * &pb;
        let diff = f.sub(&g.mul(&h)).reduce_mod(&next);
        let e_int = Poly::new(
            diff.coeffs()
                .iter()
                .map(|c| c / &modulus)
                .collect::<Vec<_>>(),
        );
        let e = ModPoly::from_int_poly(&e_int, p);
        if !e.is_zero() {
            let gm = ModPoly::from_int_poly(&g, p);
            let hm = ModPoly::from_int_poly(&h, p);
            // u = (e*t) mod g ; v = (e - u*h)/g, all over F_p.
            let u = e.mul(&t).rem(&gm);
            let num = e.sub(&u.mul(&hm));
            let (v, r) = num.divrem(&gm);
            if !r.is_zero() {
                return Err(Error::internal("hensel correction not divisible"));
            }
            g = g.add(&u.lift().scale(&modulus)).reduce_mod(&next);
            h = h.add(&v.lift().scale(&modulus)).reduce_mod(&next);
        }
        modulus = next;
    }
    Ok((g, h))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return Err(Error::internal("element not invertible"));
    }
    Ok(e.x.mod_floor(m))
}

/// Subset recombination.  `lifted` are monic factors of f/lc(f) mod p^k.
fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, pk: &BigInt) -> Vec<IntPoly> {
    let mut remaining = f.clone();
    let mut out: Vec<IntPoly> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= lifted.len() {
        let total_deg = remaining.deg();
        let indices: Vec<usize> = (0..lifted.len()).collect();
        for combo in combinations(&indices, size) {
            let deg_sum: usize = combo.iter().map(|&i| lifted[i].deg()).sum();
            if deg_sum == 0 || deg_sum >= total_deg {
                continue;
            }
            // Cheap test first: the trailing coefficient of the candidate
            // must divide lc(f) * f(0) (up to the modulus).
            if !trailing_ok(&remaining, &lifted, &combo, pk) {
                continue;
            }
            let mut prod = Poly::constant(remaining.lc());
            for &i in &combo {
                prod = mul_mod_big(&prod, &lifted[i], pk);
            }
            let cand = balance(&prod, pk).primitive_part();
            if cand.deg() != deg_sum {
                continue;
            }
            if let Some(quot) = remaining.div_exact(&cand) {
                out.push(cand);
                remaining = quot;
                let keep: Vec<IntPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                lifted = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if remaining.deg() > 0 {
        out.push(remaining.primitive_part());
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn trailing_ok(remaining: &IntPoly, lifted: &[IntPoly], combo: &[usize], pk: &BigInt) -> bool {
    let mut t = remaining.lc();
    for &i in combo {
        t = (t * lifted[i].coeff(0)).mod_floor(pk);
    }
    let half = pk / 2;
    if &t > &half {
        t -= pk;
    }
    if t.is_zero() {
        return remaining.coeff(0).is_zero();
    }
    let target = remaining.lc() * remaining.coeff(0);
    (&target % &t).is_zero()
}

fn mul_mod_big(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    a.mul(b).reduce_mod(m)
}

/// Symmetric representative mod m, coefficients in (-m/2, m/2].
fn balance(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    Poly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// All `size`-subsets of `items`, in lexicographic order.
fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(items: &[usize], size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - current.len() {
                break;
            }
            current.push(items[i]);
            rec(items, size, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, size, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    fn factor(f: &IntPoly) -> QFactorization {
        factor_over_rationals(f, 24, 42).unwrap()
    }

    #[test]
    fn simple_splits() {
        let q = factor(&ip(&[-1, 0, 1])); // x^2-1
        assert_eq!(q.constant, BigRational::one());
        assert_eq!(q.factors, vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]);
    }

    #[test]
    fn brandl3_expanded_recovers_both_factors() {
        let f = ip(&[-2, 0, 0, 1]).mul(&ip(&[1, 1, 1]));
        let q = factor(&f);
        assert_eq!(q.factors.len(), 2);
        assert_eq!(q.factors[0].0, ip(&[1, 1, 1]));
        assert_eq!(q.factors[1].0, ip(&[-2, 0, 0, 1]));
    }

    #[test]
    fn x4_plus_1_irreducible() {
        let q = factor(&ip(&[1, 0, 0, 0, 1]));
        assert!(q.is_irreducible());
    }

    #[test]
    fn multiplicities_and_constants() {
        let f = ip(&[1, 1]).pow(2).mul(&ip(&[-3, 3])); // 3 (x+1)^2 (x-1)
        let q = factor(&f);
        assert_eq!(q.constant, BigRational::from_integer(3.into()));
        assert_eq!(q.factors, vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 2)]);
        assert_eq!(q.expand(), f);
    }

    #[test]
    fn non_monic() {
        let f = ip(&[1, 2]).mul(&ip(&[-3, 2])); // (2x+1)(2x-3)
        let q = factor(&f);
        assert_eq!(q.factors, vec![(ip(&[-3, 2]), 1), (ip(&[1, 2]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_like_no_split() {
        // minimal polynomial of sqrt(2)+sqrt(3): reducible mod every prime,
        // irreducible over Q — recombination must reject all proper subsets.
        let f = ip(&[1, 0, -10, 0, 1]);
        assert!(factor(&f).is_irreducible());
    }

    #[test]
    fn degree_cap() {
        let f = ip(&[1, 1]).pow(30);
        assert!(matches!(
            factor_over_rationals(&f, 24, 1),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn bigger_hensel_case() {
        // product of two quartics with larger coefficients
        let a = ip(&[13, -7, 0, 5, 1]);
        let b = ip(&[-11, 3, 2, 0, 1]);
        let q = factor(&a.mul(&b));
        assert_eq!(q.factors.len(), 2);
        assert_eq!(q.expand(), a.mul(&b));
    }
}
