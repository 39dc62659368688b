//! Exact operations specific to integer and rational polynomials:
//! content/primitive part, subresultant resultant, discriminant, gcd,
//! squarefree decomposition, cyclotomic polynomials, coefficient bounds
//! and Sturm real-root counting.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::{IntPoly, RatPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

impl Poly<BigInt> {
    pub fn from_i64(v: &[i64]) -> IntPoly {
        Poly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.coeffs() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Poly::new(self.coeffs().iter().map(|c| c / &g).collect())
    }

    /// Exact division; `None` if `div` does not divide `self` over Z.
    pub fn div_exact(&self, div: &IntPoly) -> Option<IntPoly> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dd = div.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lc = div.lc();
        let mut rem = self.coeffs().to_vec();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            quot[i - dd] = q.clone();
            for (j, c) in div.coeffs().iter().enumerate() {
                rem[i - dd + j] -= &q * c;
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Poly::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: lc(div)^(deg a - deg div + 1) * a  mod  div.
    pub fn pseudo_rem(&self, div: &IntPoly) -> IntPoly {
        let da = self.degree().expect("pseudo_rem: zero dividend");
        let dd = div.degree().expect("pseudo_rem: zero divisor");
        assert!(da >= dd);
        let lc = div.lc();
        let mut rem = self.clone();
        let mut steps = da - dd + 1;
        while !rem.is_zero() && rem.degree().unwrap() >= dd {
            let dr = rem.degree().unwrap();
            let t = Poly::monomial(rem.lc(), dr - dd);
            rem = rem.scale(&lc).sub(&t.mul(div));
            steps -= 1;
            if rem.is_zero() || rem.degree().unwrap() < dd {
                break;
            }
        }
        // Pad the scaling so the exponent is exactly da - dd + 1.
        for _ in 0..steps {
            rem = rem.scale(&lc);
        }
        rem
    }

    /// Polynomial gcd over Z (primitive, positive leading coefficient),
    /// by the primitive pseudo-remainder sequence.
    pub fn gcd_int(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        let content = self.content().gcd(&other.content());
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::constant(content);
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.scale(&content)
    }

    /// Resultant by the subresultant PRS (Sylvester determinant convention,
    /// sign included).
    pub fn resultant(&self, other: &IntPoly) -> Result<BigInt> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::invalid("resultant of a zero polynomial"));
        }
        if self.degree() == Some(0) {
            return Ok(self.lc().pow(other.deg() as u32));
        }
        if other.degree() == Some(0) {
            return Ok(other.lc().pow(self.deg() as u32));
        }
        let ca = self.content();
        let cb = other.content();
        let mut a = Poly::new(self.coeffs().iter().map(|c| c / &ca).collect());
        let mut b = Poly::new(other.coeffs().iter().map(|c| c / &cb).collect());
        let mut s = BigInt::one();
        let t = ca.pow(b.deg() as u32) * cb.pow(a.deg() as u32);
        if a.deg() < b.deg() {
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                s = -s;
            }
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if db == 0 {
                // Res = s*t * lc(b)^da / h^(da-1)
                let num = b.lc().pow(da as u32);
                let den = h.pow((da as u32).saturating_sub(1));
                let val = exact_div_bigint(&num, &den)?;
                return Ok(s * t * val);
            }
            let delta = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                s = -s;
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return Ok(BigInt::zero());
            }
            a = b;
            let div = &g * h.pow(delta as u32);
            b = Poly::new(
                r.coeffs()
                    .iter()
                    .map(|c| exact_div_bigint(c, &div))
                    .collect::<Result<Vec<_>>>()?,
            );
            g = a.lc();
            // h = g^delta * h^(1-delta), exact in Z.
            h = if delta == 0 {
                h
            } else {
                exact_div_bigint(&g.pow(delta as u32), &h.pow(delta as u32 - 1))?
            };
        }
    }

    /// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::invalid("discriminant of a constant polynomial"))?;
        let d = self.derivative();
        if d.is_zero() {
            return Ok(BigInt::zero());
        }
        let res = self.resultant(&d)?;
        let val = exact_div_bigint(&res, &self.lc())?;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -val } else { val })
    }

    pub fn is_squarefree(&self) -> bool {
        if self.deg() < 1 {
            return !self.is_zero();
        }
        self.gcd_int(&self.derivative()).deg() == 0
    }

    /// f / gcd(f, f'), primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.deg() < 1 {
            return self.primitive_part();
        }
        let g = self.gcd_int(&self.derivative());
        self.div_exact(&g)
            .expect("gcd divides")
            .primitive_part()
    }

    /// Yun squarefree decomposition of a primitive polynomial:
    /// f = prod part_i^i over the returned (part, i) with part_i squarefree.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let f = self.primitive_part();
        if f.deg() < 1 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd_int(&df);
        if a0.deg() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.div_exact(&a0).unwrap();
        let mut c = df.div_exact(&a0).unwrap();
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd_int(&d);
            if a.deg() > 0 {
                out.push((a.primitive_part(), i));
            }
            b = b.div_exact(&a).unwrap();
            if b.deg() == 0 {
                break;
            }
            c = d.div_exact(&a).unwrap();
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Largest absolute coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Landau–Mignotte style bound on coefficients of any integer factor:
    /// 2^n * sqrt(sum c_i^2) * |lc| with n = deg f (generous, safe).
    pub fn factor_coeff_bound(&self) -> BigInt {
        let n = self.deg() as u32;
        let sum: BigInt = self.coeffs().iter().map(|c| c * c).sum();
        let root = sum.sqrt() + 1;
        (BigInt::one() << n) * root * self.lc().abs()
    }

    pub fn to_rational(&self) -> RatPoly {
        Poly::new(
            self.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Reduce mod m into representatives in [0, m).
    pub fn reduce_mod(&self, m: &BigInt) -> IntPoly {
        Poly::new(self.coeffs().iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Canonical ordering used everywhere factors are sorted:
    /// by degree, then by the ascending coefficient sequence.
    pub fn canonical_cmp(&self, other: &IntPoly) -> std::cmp::Ordering {
        self.deg()
            .cmp(&other.deg())
            .then_with(|| self.coeffs().cmp(other.coeffs()))
    }
}

fn exact_div_bigint(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::internal("exact division by zero"));
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::internal(format!("non-exact division {a}/{b}")))
    }
}

/// The r-th cyclotomic polynomial for prime r: 1 + x + ... + x^(r-1).
pub fn cyclotomic_prime(r: u64) -> IntPoly {
    assert!(crate::primes::is_prime(r), "cyclotomic_prime wants a prime");
    Poly::new(vec![BigInt::one(); r as usize])
}

impl Poly<BigRational> {
    /// Clear denominators: returns (g, d) with d*self = g, g integral primitive-scaled.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let mut d = BigInt::one();
        for c in self.coeffs() {
            d = d.lcm(c.denom());
        }
        let g = Poly::new(
            self.coeffs()
                .iter()
                .map(|c| c.numer() * (&d / c.denom()))
                .collect(),
        );
        (g, d)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(|c| c.denom().is_one())
    }

    pub fn to_integer(&self) -> Option<IntPoly> {
        if !self.is_integral() {
            return None;
        }
        Some(Poly::new(self.coeffs().iter().map(|c| c.numer().clone()).collect()))
    }
}

/// Number of distinct real roots, by Sturm's theorem (exact).
pub fn real_root_count(f: &IntPoly) -> usize {
    let f = f.squarefree_part();
    if f.deg() == 0 {
        return 0;
    }
    let mut chain: Vec<RatPoly> = vec![f.to_rational(), f.derivative().to_rational()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        chain.push(r);
    }
    chain.pop();
    let sign_at_inf = |p: &RatPoly, positive: bool| -> i32 {
        if p.is_zero() {
            return 0;
        }
        let d = p.degree().unwrap();
        let lc = p.lc();
        let mut s = if lc.is_positive() { 1 } else { -1 };
        if !positive && d % 2 == 1 {
            s = -s;
        }
        s
    };
    let variations = |positive: bool| -> usize {
        let mut count = 0;
        let mut prev = 0;
        for p in &chain {
            let s = sign_at_inf(p, positive);
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    };
    variations(false) - variations(true)
}
