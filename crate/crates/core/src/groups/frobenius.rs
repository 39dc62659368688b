//! Frobenius structure of a transitive permutation group: kernel,
//! complement, malnormality and nilpotency flags, and the check that every
//! subgroup meeting the kernel trivially lies in a conjugate of the
//! complement.

use crate::error::{Error, Result};
use crate::groups::group::PermGroup;
use crate::groups::subgroups::subgroup_classes_avoiding;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrobeniusStructure {
    pub kernel_order: usize,
    pub complement_order: usize,
    pub checks: FrobeniusChecks,
    /// Element indices of kernel and complement in the parent group.
    #[serde(skip)]
    pub kernel: Vec<u32>,
    #[serde(skip)]
    pub complement: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrobeniusChecks {
    pub kernel_normal: bool,
    pub order_product: bool,
    pub complement_malnormal: bool,
    pub kernel_nilpotent: bool,
    pub kernel_abelian: bool,
}

impl FrobeniusChecks {
    pub fn all_pass(&self) -> bool {
        self.kernel_normal
            && self.order_product
            && self.complement_malnormal
            && self.kernel_nilpotent
            && self.kernel_abelian
    }
}

/// None unless G is Frobenius: transitive, no nonidentity element fixes two
/// points, some nonidentity element fixes exactly one.  Kernel = identity
/// plus the fixed-point-free elements; complement = a point stabilizer.
pub fn frobenius_structure(g: &PermGroup) -> Result<Option<FrobeniusStructure>> {
    if !g.is_transitive() {
        return Err(Error::invalid("group must be transitive on its points"));
    }
    let n = g.order();
    let mut kernel: Vec<u32> = Vec::new();
    let mut some_one_fixer = false;
    for i in 0..n as u32 {
        let e = g.element(i);
        if e.is_identity() {
            kernel.push(i);
            continue;
        }
        match e.fixed_points().len() {
            0 => kernel.push(i),
            1 => some_one_fixer = true,
            _ => return Ok(None),
        }
    }
    if !some_one_fixer {
        return Ok(None);
    }
    let complement = g.point_stabilizer(0);
    if !g.is_subgroup_set(&kernel) {
        return Err(Error::internal(
            "fixed-point-free elements do not form a subgroup",
        ));
    }
    let checks = FrobeniusChecks {
        kernel_normal: g.is_normal_set(&kernel),
        order_product: kernel.len() * complement.len() == n,
        complement_malnormal: malnormal(g, &complement),
        kernel_nilpotent: nilpotent_set(g, &kernel),
        kernel_abelian: g.is_abelian_set(&kernel),
    };
    Ok(Some(FrobeniusStructure {
        kernel_order: kernel.len(),
        complement_order: complement.len(),
        checks,
        kernel,
        complement,
    }))
}

/// H ∩ H^g = {1} for all g ∉ H.
fn malnormal(g: &PermGroup, h: &[u32]) -> bool {
    let id = g.identity_index();
    for x in 0..g.order() as u32 {
        if h.binary_search(&x).is_ok() {
            continue;
        }
        let conj = g.conjugate_set(h, x);
        let meet = conj
            .iter()
            .filter(|a| h.binary_search(a).is_ok())
            .count();
        let id_in = conj.binary_search(&id).is_ok();
        if meet != 1 || !id_in {
            return false;
        }
    }
    true
}

/// Nilpotency of a subgroup set: it is the direct product of its Sylow
/// subgroups iff for each prime p the p-elements form a subgroup of full
/// Sylow order.
fn nilpotent_set(g: &PermGroup, sub: &[u32]) -> bool {
    let order = sub.len();
    let mut rest = order;
    let mut p = 2usize;
    while rest > 1 {
        if rest % p == 0 {
            let mut sylow_order = 1;
            while rest % p == 0 {
                rest /= p;
                sylow_order *= p;
            }
            let p_elems: Vec<u32> = sub
                .iter()
                .copied()
                .filter(|&a| {
                    let o = g.element(a).order();
                    o == 1 || is_power_of(o, p)
                })
                .collect();
            if p_elems.len() != sylow_order || !g.is_subgroup_set(&p_elems) {
                return false;
            }
        }
        p += 1;
    }
    true
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Lemma24Report {
    pub passed: bool,
    pub classes_checked: usize,
    /// Representatives (as element cycle lists) of classes violating the
    /// containment; a nonempty list falsifies the implementation.
    pub violations: Vec<Vec<String>>,
}

/// For Frobenius G with kernel Q and complement H: every subgroup D with
/// D ∩ Q = {1} lies in a conjugate of H.
pub fn lemma24_check(
    g: &PermGroup,
    fs: &FrobeniusStructure,
    enum_cap: usize,
) -> Result<Lemma24Report> {
    let classes = subgroup_classes_avoiding(g, &fs.kernel, enum_cap)?;
    let mut violations = Vec::new();
    for c in &classes {
        let contained = (0..g.order() as u32).any(|x| {
            let conj = g.conjugate_set(&fs.complement, x);
            c.rep.iter().all(|a| conj.binary_search(a).is_ok())
        });
        if !contained {
            violations.push(
                c.rep
                    .iter()
                    .map(|&a| g.element(a).to_string())
                    .collect(),
            );
        }
    }
    Ok(Lemma24Report {
        passed: violations.is_empty(),
        classes_checked: classes.len(),
        violations,
    })
}
