//! Splitting field of a squarefree product of irreducibles, its Galois
//! group as a permutation group on labeled roots, and the root stabilizers.
//!
//! Strategy: iteratively adjoin a root of the lowest-degree nonlinear
//! irreducible factor over the current field, re-collapsing to a simple
//! extension Q(γ) each time.  With γ = Σ c_t·β_t over the adjoined roots
//! β_t, every automorphism sends γ to Σ c_t·r_t for some choice of roots
//! r_t of the corresponding input factors, so the automorphisms are found
//! by filtering those finitely many candidates through minpoly(γ') = 0.

use crate::error::{Error, Result};
use crate::groups::{Perm, PermGroup};
use crate::numfield::{KPoly, NumberField};
use crate::trager::{factor_over_field, map_up, primitive_element, rat_poly_cmp};
use crate::{IntPoly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub struct SplittingData {
    pub field: NumberField,
    /// Roots per input factor, reduced representations in the field,
    /// sorted canonically within each factor.
    pub roots: Vec<Vec<RatPoly>>,
    /// Galois group acting on root labels; labels list the roots of factor
    /// 0 first, then factor 1, and so on.
    pub group: PermGroup,
    /// Element index sets of the stabilizers A_i of the first root of each
    /// factor.
    pub stabilizers: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SplittingSummary {
    pub field_degree: usize,
    pub group: GroupSummary,
    pub blocks: Vec<BlockSummary>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: usize,
    pub degree: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockSummary {
    pub factor: String,
    pub root_count: usize,
    pub stabilizer_order: usize,
}

impl SplittingData {
    pub fn summary(&self, factors: &[IntPoly]) -> SplittingSummary {
        SplittingSummary {
            field_degree: self.field.degree(),
            group: GroupSummary {
                order: self.group.order(),
                degree: self.group.degree(),
                generators: self.group.generators().iter().map(|g| g.to_string()).collect(),
            },
            blocks: factors
                .iter()
                .enumerate()
                .map(|(i, f)| BlockSummary {
                    factor: f.to_string(),
                    root_count: self.roots[i].len(),
                    stabilizer_order: self.stabilizers[i].len(),
                })
                .collect(),
        }
    }
}

/// Exact splitting field and Galois action for a product of pairwise
/// coprime irreducible monic factors.  `degree_cap` bounds [K : Q].
pub fn splitting_data(
    factors: &[IntPoly],
    degree_cap: usize,
    group_cap: usize,
    seed: u64,
) -> Result<SplittingData> {
    if factors.is_empty() {
        return Err(Error::invalid("at least one factor required"));
    }
    let mut max_d = 1;
    for (i, f) in factors.iter().enumerate() {
        if !f.is_monic() || f.deg() < 1 {
            return Err(Error::invalid("factors must be monic and nonconstant"));
        }
        max_d = max_d.max(f.deg());
        for g in &factors[i + 1..] {
            if f.resultant(g)?.is_zero() {
                return Err(Error::invalid("factors must be pairwise coprime"));
            }
        }
    }
    // Norms inside the tower have degree up to [K:Q]·deg(g); the rational
    // factorization cap is raised accordingly for internal calls only.
    let qcap = (degree_cap * max_d).max(64);

    let mut field = NumberField::rationals();
    let mut roots: Vec<Option<Vec<RatPoly>>> = vec![None; factors.len()];
    // γ = Σ coeff_t · β_t; entry (factor index, coefficient).
    let mut tower: Vec<(usize, BigInt)> = Vec::new();

    loop {
        let mut pending: Vec<(usize, KPoly)> = Vec::new();
        for (i, g) in factors.iter().enumerate() {
            if roots[i].is_some() {
                continue;
            }
            if g.deg() == 1 {
                roots[i] = Some(vec![field.from_rational(BigRational::from_integer(
                    -g.coeff(0),
                ))]);
                continue;
            }
            let parts = factor_over_field(g, &field, qcap, seed)?;
            if parts.iter().all(|p| p.deg() == 1) {
                let mut rs: Vec<RatPoly> =
                    parts.iter().map(|p| p.coeff(0).neg()).collect();
                rs.sort_by(rat_poly_cmp);
                roots[i] = Some(rs);
            } else {
                for p in parts {
                    if p.deg() >= 2 {
                        pending.push((i, p));
                    }
                }
            }
        }
        if pending.is_empty() {
            break;
        }
        pending.sort_by(|a, b| {
            a.1.deg()
                .cmp(&b.1.deg())
                .then_with(|| kpoly_key(&a.1).cmp(&kpoly_key(&b.1)))
                .then_with(|| a.0.cmp(&b.0))
        });
        let (idx, h) = pending.swap_remove(0);
        let ext = primitive_element(&field, &h, degree_cap)?;
        let mult = BigInt::from(ext.multiplier);
        for (_, c) in tower.iter_mut() {
            *c *= &mult;
        }
        tower.push((idx, BigInt::from(1)));
        for r in roots.iter_mut().flatten() {
            for rep in r.iter_mut() {
                *rep = ext.field.reduce(&map_up(&ext.field, &ext.alpha, rep));
            }
            r.sort_by(rat_poly_cmp);
        }
        field = ext.field;
    }

    let roots: Vec<Vec<RatPoly>> = roots.into_iter().map(|r| r.unwrap()).collect();
    build_galois_action(factors, field, roots, &tower, group_cap)
}

fn kpoly_key(p: &KPoly) -> Vec<Vec<BigRational>> {
    p.coeffs().iter().map(|c| c.coeffs().to_vec()).collect()
}

fn build_galois_action(
    factors: &[IntPoly],
    field: NumberField,
    roots: Vec<Vec<RatPoly>>,
    tower: &[(usize, BigInt)],
    group_cap: usize,
) -> Result<SplittingData> {
    let n = field.degree();
    // Candidate images of γ: Σ c_t · r_t over roots r_t of factor i_t.
    let mut candidates: Vec<RatPoly> = vec![RatPoly::zero()];
    for (idx, c) in tower {
        let c_rat = BigRational::from_integer(c.clone());
        let mut next = Vec::with_capacity(candidates.len() * roots[*idx].len());
        for base in &candidates {
            if c.is_zero() {
                next.push(base.clone());
                continue;
            }
            for r in &roots[*idx] {
                next.push(base.add(&r.scale(&c_rat)));
            }
        }
        next.sort_by(rat_poly_cmp);
        next.dedup();
        candidates = next;
    }
    let mut gamma_images: Vec<RatPoly> = candidates
        .into_iter()
        .filter(|g| field.eval_int_poly(field.minpoly(), g).is_zero())
        .collect();
    gamma_images.sort_by(rat_poly_cmp);
    gamma_images.dedup();
    if gamma_images.len() != n {
        return Err(Error::internal(format!(
            "found {} automorphisms in a field of degree {n}",
            gamma_images.len()
        )));
    }

    // Labels: roots of factor 0, then factor 1, ...
    let offsets: Vec<usize> = {
        let mut o = vec![0usize];
        for r in &roots {
            o.push(o.last().unwrap() + r.len());
        }
        o
    };
    let total: usize = roots.iter().map(|r| r.len()).sum();
    let mut perms: Vec<Perm> = Vec::with_capacity(n);
    for gi in &gamma_images {
        let mut images = vec![0usize; total];
        for (fi, rs) in roots.iter().enumerate() {
            for (j, rep) in rs.iter().enumerate() {
                // σ(p(γ)) = p(σ(γ)), and it must be a root of the same factor
                let image = field.reduce(&map_up(&field, gi, rep));
                let pos = rs
                    .iter()
                    .position(|r| *r == image)
                    .ok_or_else(|| Error::internal("automorphism left the root set"))?;
                images[offsets[fi] + j] = offsets[fi] + pos;
            }
        }
        perms.push(Perm::new(images)?);
    }
    let group = PermGroup::closure(&perms, group_cap)?;
    if group.order() != n {
        return Err(Error::internal(format!(
            "automorphisms did not close at the field degree: {} vs {n}",
            group.order()
        )));
    }
    let stabilizers: Vec<Vec<u32>> = factors
        .iter()
        .enumerate()
        .map(|(i, _)| group.point_stabilizer(offsets[i]))
        .collect();
    Ok(SplittingData {
        field,
        roots,
        group,
        stabilizers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn quadratic_field() {
        let d = splitting_data(&[ip(&[1, 0, 1])], 24, 10080, 7).unwrap();
        assert_eq!(d.field.degree(), 2);
        assert_eq!(d.group.order(), 2);
        assert_eq!(d.stabilizers[0].len(), 1);
    }

    #[test]
    fn s3_splitting_field() {
        let factors = vec![ip(&[-2, 0, 0, 1]), ip(&[1, 1, 1])];
        let d = splitting_data(&factors, 24, 10080, 7).unwrap();
        assert_eq!(d.field.degree(), 6);
        assert_eq!(d.group.order(), 6);
        assert!(!d.group.is_cyclic());
        // stabilizer orders 2 (cube-root block) and 3 (cyclotomic block)
        assert_eq!(d.stabilizers[0].len(), 2);
        assert_eq!(d.stabilizers[1].len(), 3);
        // orbit sizes match factor degrees
        let orbits = d.group.orbits();
        let mut sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn biquadratic() {
        let factors = vec![ip(&[-2, 0, 1]), ip(&[-17, 0, 1]), ip(&[-34, 0, 1])];
        let d = splitting_data(&factors, 24, 10080, 7).unwrap();
        assert_eq!(d.field.degree(), 4);
        assert_eq!(d.group.order(), 4);
        assert!(!d.group.is_cyclic());
        for s in &d.stabilizers {
            assert_eq!(s.len(), 2);
        }
    }

    #[test]
    fn summary_schema() {
        let factors = vec![ip(&[1, 0, 1])];
        let d = splitting_data(&factors, 24, 10080, 7).unwrap();
        let s = d.summary(&factors);
        assert_eq!(s.field_degree, 2);
        assert_eq!(s.blocks.len(), 1);
        assert_eq!(s.blocks[0].root_count, 2);
        let js = serde_json::to_string(&s).unwrap();
        assert!(js.contains("\"field_degree\":2"));
    }
}
