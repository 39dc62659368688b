//! Number fields Q(α) as quotient rings Q[x]/(m), with exact rational
//! arithmetic, and polynomials over such fields.
//!
//! Q itself is the degree-1 field with minimal polynomial x (α = 0), so all
//! tower code runs uniformly from the base case up.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::{IntPoly, RatPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct NumberField {
    minpoly: IntPoly,
    minpoly_rat: RatPoly,
    degree: usize,
}

impl NumberField {
    /// Q represented as Q[x]/(x).
    pub fn rationals() -> NumberField {
        NumberField::new(Poly::new(vec![BigInt::zero(), BigInt::one()]))
    }

    /// Callers certify irreducibility; the minimal polynomial must be monic
    /// and nonconstant.
    pub fn new(minpoly: IntPoly) -> NumberField {
        assert!(minpoly.is_monic() && minpoly.deg() >= 1);
        let degree = minpoly.deg();
        let minpoly_rat = minpoly.to_rational();
        NumberField {
            minpoly,
            minpoly_rat,
            degree,
        }
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    /// The generator α as an element (the zero constant when K = Q with
    /// minpoly x; x otherwise).
    pub fn generator(&self) -> RatPoly {
        self.reduce(&RatPoly::x())
    }

    pub fn from_rational(&self, c: BigRational) -> RatPoly {
        Poly::constant(c)
    }

    pub fn reduce(&self, a: &RatPoly) -> RatPoly {
        if a.deg() < self.degree || a.is_zero() {
            a.clone()
        } else {
            a.rem(&self.minpoly_rat)
        }
    }

    pub fn add(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        a.add(b)
    }

    pub fn sub(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        a.sub(b)
    }

    pub fn mul(&self, a: &RatPoly, b: &RatPoly) -> RatPoly {
        self.reduce(&a.mul(b))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm; errors
    /// on zero.  A nonzero non-unit would contradict irreducibility of the
    /// minimal polynomial.  Remainders are rescaled to primitive integer
    /// polynomials each step so coefficients stay polynomially bounded.
    pub fn inv(&self, a: &RatPoly) -> Result<RatPoly> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Err(Error::invalid("division by zero field element"));
        }
        if a.deg() == 0 {
            return Ok(Poly::constant(BigRational::one() / a.coeff(0)));
        }
        // Invariant: s_i * a = r_i (mod minpoly).
        let mut r0 = self.minpoly_rat.clone();
        let mut s0 = RatPoly::zero();
        let (mut r1, lam) = primitive_scaled(&a);
        let mut s1 = Poly::constant(lam);
        loop {
            if r1.is_zero() {
                return Err(Error::internal(
                    "non-invertible element: minimal polynomial not irreducible",
                ));
            }
            if r1.deg() == 0 {
                let c = r1.coeff(0).clone();
                return Ok(self.reduce(&s1.scale(&(BigRational::one() / c))));
            }
            let (q, r) = r0.divrem(&r1);
            let (rp, lam) = primitive_scaled(&r);
            let sp = s0.sub(&q.mul(&s1)).scale(&lam);
            r0 = r1;
            s0 = s1;
            r1 = rp;
            s1 = sp;
        }
    }

    pub fn div(&self, a: &RatPoly, b: &RatPoly) -> Result<RatPoly> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Evaluate an integer polynomial at a field element.
    pub fn eval_int_poly(&self, f: &IntPoly, at: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, at);
            acc = acc.add(&Poly::constant(BigRational::from_integer(c.clone())));
        }
        acc
    }
}

/// Rescale to a primitive integer polynomial: returns (λ·p, λ) with λ > 0.
fn primitive_scaled(p: &RatPoly) -> (RatPoly, BigRational) {
    if p.is_zero() {
        return (p.clone(), BigRational::one());
    }
    let (g, d) = p.clear_denominators();
    let mut content = BigInt::zero();
    for c in g.coeffs() {
        content = content.gcd(c);
    }
    let lam = BigRational::new(d, content);
    (p.scale(&lam), lam)
}

/// Polynomial in y with coefficients in a number field, ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct KPoly {
    coeffs: Vec<RatPoly>,
}

impl KPoly {
    pub fn new(mut coeffs: Vec<RatPoly>) -> KPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn zero() -> KPoly {
        KPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RatPoly) -> KPoly {
        KPoly::new(vec![c])
    }

    pub fn from_int_poly(f: &IntPoly) -> KPoly {
        KPoly::new(
            f.coeffs()
                .iter()
                .map(|c| Poly::constant(BigRational::from_integer(c.clone())))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(RatPoly::zero)
    }

    pub fn lc(&self) -> RatPoly {
        self.coeffs.last().cloned().unwrap_or_else(RatPoly::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == RatPoly::one()
    }

    pub fn add(&self, other: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        KPoly::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        KPoly::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &KPoly, k: &NumberField) -> KPoly {
        if self.is_zero() || other.is_zero() {
            return KPoly::zero();
        }
        let mut out = vec![RatPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        KPoly::new(out.into_iter().map(|c| k.reduce(&c)).collect())
    }

    pub fn scale(&self, c: &RatPoly, k: &NumberField) -> KPoly {
        KPoly::new(self.coeffs.iter().map(|a| k.mul(a, c)).collect())
    }

    pub fn monic(&self, k: &NumberField) -> Result<KPoly> {
        if self.is_zero() {
            return Ok(KPoly::zero());
        }
        Ok(self.scale(&k.inv(&self.lc())?, k))
    }

    pub fn divrem(&self, div: &KPoly, k: &NumberField) -> Result<(KPoly, KPoly)> {
        if div.is_zero() {
            return Err(Error::invalid("division by zero polynomial"));
        }
        let dd = div.deg();
        let lc_inv = k.inv(&div.lc())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RatPoly::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let da = rem.len() - 1;
            let q = k.mul(rem.last().unwrap(), &lc_inv);
            if !q.is_zero() {
                quot[da - dd] = q.clone();
                for i in 0..=dd {
                    let t = k.mul(&q, &div.coeff(i));
                    rem[da - dd + i] = k.sub(&rem[da - dd + i], &t);
                }
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((KPoly::new(quot), KPoly::new(rem)))
    }

    pub fn rem(&self, div: &KPoly, k: &NumberField) -> Result<KPoly> {
        Ok(self.divrem(div, k)?.1)
    }

    /// Rescale by a rational so every coefficient is an integer polynomial
    /// in the generator and the overall integer content is 1.  Scaling by
    /// a nonzero rational preserves divisibility in K[y]; without it the
    /// Euclidean remainders blow up in high-degree fields.
    pub fn normalize_content(&self) -> KPoly {
        let mut denom = BigInt::one();
        for c in &self.coeffs {
            for r in c.coeffs() {
                denom = denom.lcm(r.denom());
            }
        }
        let mut content = BigInt::zero();
        for c in &self.coeffs {
            for r in c.coeffs() {
                content = content.gcd(&(r.numer() * &denom / r.denom()));
            }
        }
        if content.is_zero() {
            return self.clone();
        }
        let s = BigRational::new(denom, content);
        KPoly {
            coeffs: self.coeffs.iter().map(|c| c.scale(&s)).collect(),
        }
    }

    /// Pseudo-remainder lc(div)^e · self mod div, computed without field
    /// inversions so intermediate coefficients stay integral.
    fn prem(&self, div: &KPoly, k: &NumberField) -> KPoly {
        let dd = div.deg();
        let d = div.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let lr = r.lc();
            let mut out = Vec::with_capacity(r.deg());
            for i in 0..r.deg() {
                let mut c = k.mul(&r.coeff(i), &d);
                if i >= shift {
                    c = k.sub(&c, &k.mul(&lr, &div.coeff(i - shift)));
                }
                out.push(c);
            }
            r = KPoly::new(out);
        }
        r
    }

    /// Monic gcd over K[y] via a primitive pseudo-remainder sequence: no
    /// inversions until the final monic rescale, content stripped between
    /// steps to keep coefficient growth polynomial.
    pub fn gcd(&self, other: &KPoly, k: &NumberField) -> Result<KPoly> {
        let mut a = self.normalize_content();
        let mut b = other.normalize_content();
        while !b.is_zero() {
            let r = a.prem(&b, k).normalize_content();
            a = b;
            b = r;
        }
        a.monic(k)
    }

    pub fn eval(&self, at: &RatPoly, k: &NumberField) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = k.mul(&acc, at);
            acc = acc.add(c);
        }
        k.reduce(&acc)
    }

    pub fn derivative(&self, k: &NumberField) -> KPoly {
        let _ = k;
        KPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&BigRational::from_integer(BigInt::from(i))))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi() -> NumberField {
        NumberField::new(IntPoly::from_i64(&[1, 0, 1]))
    }

    fn c(n: i64) -> RatPoly {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    #[test]
    fn gaussian_arithmetic() {
        let k = qi();
        let i = k.generator();
        let i2 = k.mul(&i, &i);
        assert_eq!(i2, c(-1));
        let inv = k.inv(&i).unwrap();
        assert_eq!(k.mul(&i, &inv), RatPoly::one());
        // (1+i)(1-i) = 2
        let a = RatPoly::one().add(&i);
        let b = RatPoly::one().sub(&i);
        assert_eq!(k.mul(&a, &b), c(2));
    }

    #[test]
    fn rationals_base_case() {
        let q = NumberField::rationals();
        assert!(q.is_rationals());
        assert!(q.generator().is_zero());
        assert_eq!(
            q.inv(&c(2)).unwrap().coeff(0),
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
    }

    #[test]
    fn kpoly_division() {
        let k = qi();
        // y^2 + 1 = (y - i)(y + i) over Q(i)
        let f = KPoly::from_int_poly(&IntPoly::from_i64(&[1, 0, 1]));
        let i = k.generator();
        let lin = KPoly::new(vec![i.neg(), RatPoly::one()]);
        let (q, r) = f.divrem(&lin, &k).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.coeff(0), i);
        let g = f.gcd(&lin, &k).unwrap();
        assert_eq!(g.deg(), 1);
    }

    #[test]
    fn eval_int_poly_at_root() {
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 0, 1]));
        let a = k.generator();
        let v = k.eval_int_poly(&IntPoly::from_i64(&[-2, 0, 0, 1]), &a);
        assert!(v.is_zero());
    }
}
