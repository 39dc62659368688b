//! Factoring integer polynomials over a number field (Trager's method:
//! norms via resultants, factored over Q, pulled back by gcd), and simple
//! extensions re-collapsed to primitive elements by linear algebra.

use crate::error::{Error, Result};
use crate::numfield::{KPoly, NumberField};
use crate::poly::Poly;
use crate::{IntPoly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Lagrange interpolation through exact integer points, via the master
/// polynomial M = Π(x − xi): basis_i = M/(x − xi) by synthetic division
/// and the weight denominator is M'(xi).
fn interpolate(points: &[(BigInt, BigInt)]) -> RatPoly {
    let mut master = IntPoly::one();
    for (xi, _) in points {
        master = master.mul(&IntPoly::new(vec![-xi.clone(), BigInt::one()]));
    }
    let dmaster = master.derivative();
    let mut acc = vec![BigRational::zero(); points.len()];
    for (xi, yi) in points {
        if yi.is_zero() {
            continue;
        }
        let w = BigRational::new(yi.clone(), dmaster.eval(xi));
        // synthetic division of M by (x - xi), highest coefficient first
        let mc = master.coeffs();
        let mut carry = BigInt::zero();
        for t in (0..points.len()).rev() {
            carry = &mc[t + 1] + xi * &carry;
            acc[t] += &w * BigRational::from_integer(carry.clone());
        }
    }
    Poly::new(acc)
}

/// Res_x(m(x), g(y − s·x)) by interpolation at deg(m)·deg(g) + 1 points.
fn shifted_norm(m: &IntPoly, g: &IntPoly, s: i64) -> Result<IntPoly> {
    let n = m.deg();
    let d = g.deg();
    let npoints = n * d + 1;
    let mut points = Vec::with_capacity(npoints);
    for t in 0..npoints {
        // 0, 1, -1, 2, -2, ...
        let y0: i64 = if t % 2 == 1 { (t as i64 + 1) / 2 } else { -(t as i64) / 2 };
        let sub = IntPoly::new(vec![BigInt::from(y0), BigInt::from(-s)]);
        let p = g.compose(&sub);
        let v = m.resultant(&p)?;
        points.push((BigInt::from(y0), v));
    }
    let norm = interpolate(&points);
    norm.to_integer()
        .ok_or_else(|| Error::internal("norm interpolation produced non-integer coefficients"))
}

pub fn rat_poly_cmp(a: &RatPoly, b: &RatPoly) -> std::cmp::Ordering {
    let da = a.coeffs().len();
    let db = b.coeffs().len();
    da.cmp(&db).then_with(|| a.coeffs().cmp(b.coeffs()))
}

fn kpoly_cmp(a: &KPoly, b: &KPoly) -> std::cmp::Ordering {
    let mut ord = a.deg().cmp(&b.deg());
    if ord != std::cmp::Ordering::Equal {
        return ord;
    }
    for i in 0..=a.deg() {
        ord = rat_poly_cmp(&a.coeff(i), &b.coeff(i));
        if ord != std::cmp::Ordering::Equal {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

/// Complete irreducible factorization over K of a squarefree integer
/// polynomial, sorted canonically; the product re-verifies.
pub fn factor_over_field(
    g: &IntPoly,
    k: &NumberField,
    qfactor_cap: usize,
    seed: u64,
) -> Result<Vec<KPoly>> {
    if g.deg() < 1 || !g.is_monic() {
        return Err(Error::invalid("factor_over_field needs a monic nonconstant input"));
    }
    if !g.is_squarefree() {
        return Err(Error::invalid("factor_over_field needs squarefree input"));
    }
    let f = KPoly::from_int_poly(g);
    if k.is_rationals() {
        let qf = crate::zfactor::factor_over_rationals(g, qfactor_cap, seed)?;
        let mut out: Vec<KPoly> = qf
            .factors
            .iter()
            .map(|(p, _)| KPoly::from_int_poly(p))
            .collect();
        out.sort_by(kpoly_cmp);
        return Ok(out);
    }
    let m = k.minpoly();
    let n = m.deg();
    let d = g.deg();
    let max_shift = (2 * n * d + 1) as i64;
    for s in 1..=max_shift {
        let norm = shifted_norm(m, g, s)?;
        if norm.deg() != n * d || !norm.is_squarefree() {
            continue;
        }
        let qf = crate::zfactor::factor_over_rationals(&norm, qfactor_cap, seed)?;
        let shift = KPoly::new(vec![
            k.generator().scale(&BigRational::from_integer(BigInt::from(s))),
            RatPoly::one(),
        ]);
        let mut out: Vec<KPoly> = Vec::new();
        for (nj, mult) in &qf.factors {
            if *mult != 1 {
                return Err(Error::internal("squarefree norm factored with multiplicity"));
            }
            // N_j(y + s·α)
            let mut sub = KPoly::zero();
            for c in nj.coeffs().iter().rev() {
                sub = sub.mul(&shift, k);
                sub = sub.add(&KPoly::constant(Poly::constant(
                    BigRational::from_integer(c.clone()),
                )));
            }
            let fj = f.gcd(&sub, k)?;
            if fj.deg() >= 1 {
                out.push(fj);
            }
        }
        let total: usize = out.iter().map(|p| p.deg()).sum();
        if total != d {
            return Err(Error::internal("norm pullback lost a factor"));
        }
        let mut prod = KPoly::constant(RatPoly::one());
        for p in &out {
            prod = prod.mul(p, k);
        }
        if prod != f {
            return Err(Error::internal("factor product check failed over field"));
        }
        out.sort_by(kpoly_cmp);
        return Ok(out);
    }
    Err(Error::internal(
        "no squarefree shifted norm found for squarefree input",
    ))
}

/// Roots of g in K: negated constant terms of the linear factors.
pub fn roots_in_field(
    g: &IntPoly,
    k: &NumberField,
    qfactor_cap: usize,
    seed: u64,
) -> Result<Vec<RatPoly>> {
    let mut roots: Vec<RatPoly> = factor_over_field(g, k, qfactor_cap, seed)?
        .into_iter()
        .filter(|p| p.deg() == 1)
        .map(|p| p.coeff(0).neg())
        .collect();
    roots.sort_by(rat_poly_cmp);
    Ok(roots)
}

/// L = Q(γ) with γ = β + k·α for the smallest non-negative integer k such
/// that γ generates; α the generator of K, β a root of h over K.
#[derive(Debug, Clone)]
pub struct Extension {
    pub field: NumberField,
    /// Image of the old generator α in L.
    pub alpha: RatPoly,
    /// Image of the adjoined root β in L.
    pub beta: RatPoly,
    pub multiplier: i64,
}

/// Evaluate an element of K (a polynomial in α) in L via α's image.
pub fn map_up(l: &NumberField, alpha: &RatPoly, elem: &RatPoly) -> RatPoly {
    let mut acc = RatPoly::zero();
    for c in elem.coeffs().iter().rev() {
        acc = l.mul(&acc, alpha);
        acc = acc.add(&Poly::constant(c.clone()));
    }
    acc
}

/// Adjoin a root of `h` (monic irreducible over K) and re-collapse to a
/// simple extension.  Powers of γ are expanded in the basis α^i β^j of
/// K[y]/(h); γ is primitive exactly when those powers span, and the same
/// linear system yields the minimal polynomial and the images of α and β.
pub fn primitive_element(k: &NumberField, h: &KPoly, degree_cap: usize) -> Result<Extension> {
    let n = k.degree();
    let d = h.deg();
    if d < 1 || !h.is_monic() {
        return Err(Error::invalid("adjoined polynomial must be monic nonconstant"));
    }
    let total = n * d;
    if total > degree_cap {
        return Err(Error::resource(format!(
            "splitting degree {total} exceeds cap {degree_cap}"
        )));
    }
    let alpha = k.generator();
    for mult in 0..=(2 * total as i64) {
        // γ = β + mult·α inside K[y]/(h)
        let gamma = KPoly::new(vec![
            alpha.scale(&BigRational::from_integer(BigInt::from(mult))),
            RatPoly::one(),
        ]);
        let coords = |e: &KPoly| -> Vec<BigRational> {
            let mut v = vec![BigRational::zero(); total];
            for j in 0..d {
                let c = e.coeff(j);
                for i in 0..n {
                    v[i + n * j] = c.coeff(i);
                }
            }
            v
        };
        let mut powers = Vec::with_capacity(total + 1);
        let mut cur = KPoly::constant(RatPoly::one());
        for _ in 0..=total {
            powers.push(coords(&cur));
            cur = cur.mul(&gamma, k).rem(h, k)?;
        }
        let mut rhs: Vec<Vec<BigRational>> = vec![powers[total].clone()];
        // α = basis vector (i=1, j=0) unless K = Q, where α = 0.
        let mut av = vec![BigRational::zero(); total];
        if n > 1 {
            av[1] = BigRational::one();
        }
        rhs.push(av);
        let mut bv = vec![BigRational::zero(); total];
        if d > 1 {
            bv[n] = BigRational::one();
        } else {
            // h linear: β = -h(0) is already an element of K.
            let b = h.coeff(0).neg();
            for i in 0..n {
                bv[i] = b.coeff(i);
            }
        }
        rhs.push(bv);
        let sols = match solve(&powers[..total], &rhs, total) {
            Some(s) => s,
            None => continue,
        };
        // γ^total = Σ c_t γ^t  ⇒  minpoly = z^total − Σ c_t z^t
        let mut mp: Vec<BigRational> = sols[0].iter().map(|c| -c.clone()).collect();
        mp.push(BigRational::one());
        let mp = RatPoly::new(mp);
        let minpoly = mp
            .to_integer()
            .ok_or_else(|| Error::invalid("adjoined root is not an algebraic integer"))?;
        let field = NumberField::new(minpoly.clone());
        let alpha_img = RatPoly::new(sols[1].clone());
        let beta_img = RatPoly::new(sols[2].clone());
        // Embedding checks: minpoly_K(α) = 0 and h(β) = 0 in L.
        if !field.eval_int_poly(k.minpoly(), &alpha_img).is_zero() {
            return Err(Error::internal("embedding check failed for old generator"));
        }
        let mut acc = RatPoly::zero();
        for c in (0..=d).rev().map(|j| h.coeff(j)) {
            acc = field.mul(&acc, &beta_img);
            acc = acc.add(&map_up(&field, &alpha_img, &c));
        }
        if !field.reduce(&acc).is_zero() {
            return Err(Error::internal("embedding check failed for adjoined root"));
        }
        return Ok(Extension {
            field,
            alpha: alpha_img,
            beta: beta_img,
            multiplier: mult,
        });
    }
    Err(Error::internal("no primitive element multiplier found"))
}

/// Solve A·x = b for each b in rhs, where column t of A is `cols[t]`.
/// Returns None when A is singular.
fn solve(cols: &[Vec<BigRational>], rhs: &[Vec<BigRational>], nn: usize) -> Option<Vec<Vec<BigRational>>> {
    let m = rhs.len();
    // Augmented rows: A | rhs
    let mut a = vec![vec![BigRational::zero(); nn + m]; nn];
    for (t, col) in cols.iter().enumerate() {
        for i in 0..nn {
            a[i][t] = col[i].clone();
        }
    }
    for (s, b) in rhs.iter().enumerate() {
        for i in 0..nn {
            a[i][nn + s] = b[i].clone();
        }
    }
    for col in 0..nn {
        let pivot = (col..nn).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = BigRational::one() / a[col][col].clone();
        for c in col..nn + m {
            a[col][c] = &a[col][c] * &inv;
        }
        for r in 0..nn {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..nn + m {
                    let sub = &a[col][c] * &f;
                    a[r][c] = &a[r][c] - &sub;
                }
            }
        }
    }
    Some((0..m)
        .map(|s| (0..nn).map(|i| a[i][nn + s].clone()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const QCAP: usize = 64;
    const SEED: u64 = 7;

    fn c(n: i64) -> RatPoly {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    #[test]
    fn factor_over_gaussian_field() {
        let k = NumberField::new(IntPoly::from_i64(&[1, 0, 1]));
        let fs = factor_over_field(&IntPoly::from_i64(&[1, 0, 1]), &k, QCAP, SEED).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|f| f.deg() == 1));
        let roots = roots_in_field(&IntPoly::from_i64(&[1, 0, 1]), &k, QCAP, SEED).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], roots[1].neg());
    }

    #[test]
    fn factor_cube_root_field() {
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 0, 1]));
        let fs = factor_over_field(&IntPoly::from_i64(&[-2, 0, 0, 1]), &k, QCAP, SEED).unwrap();
        let degs: Vec<usize> = fs.iter().map(|f| f.deg()).collect();
        assert_eq!(degs, vec![1, 2]);
        // the linear factor's root is the generator itself
        let root = fs[0].coeff(0).neg();
        assert_eq!(root, k.generator());
        // x^2 + x + 1 stays irreducible over the real field
        let fs = factor_over_field(&IntPoly::from_i64(&[1, 1, 1]), &k, QCAP, SEED).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].deg(), 2);
    }

    #[test]
    fn primitive_element_sqrt2_sqrt3() {
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1]));
        let h = KPoly::from_int_poly(&IntPoly::from_i64(&[-3, 0, 1]));
        let ext = primitive_element(&k, &h, 24).unwrap();
        assert_eq!(ext.field.degree(), 4);
        assert_eq!(ext.field.minpoly(), &IntPoly::from_i64(&[1, 0, -10, 0, 1]));
        assert_eq!(ext.multiplier, 1);
        // α² = 2 and β² = 3 in L
        let a2 = ext.field.mul(&ext.alpha, &ext.alpha);
        assert_eq!(a2, c(2));
        let b2 = ext.field.mul(&ext.beta, &ext.beta);
        assert_eq!(b2, c(3));
    }

    #[test]
    fn primitive_element_from_rationals() {
        let q = NumberField::rationals();
        let h = KPoly::from_int_poly(&IntPoly::from_i64(&[1, 0, 1]));
        let ext = primitive_element(&q, &h, 24).unwrap();
        assert_eq!(ext.field.degree(), 2);
        assert_eq!(ext.multiplier, 0);
        assert_eq!(ext.field.minpoly(), &IntPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn degree_six_tower_step() {
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 0, 1]));
        let h = KPoly::from_int_poly(&IntPoly::from_i64(&[1, 1, 1]));
        let ext = primitive_element(&k, &h, 24).unwrap();
        assert_eq!(ext.field.degree(), 6);
    }
}
