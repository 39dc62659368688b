//! Covering a group by conjugates of subgroups, and the joint core.

use crate::error::{Error, Result};
use crate::groups::group::PermGroup;
use serde::{Deserialize, Serialize};

/// Result of testing G = ∪_{i,x} A_i^x.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverReport {
    pub covered: bool,
    /// Least element of G lying in no conjugate of any A_i, in cycle
    /// notation; absent when covered.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Count of elements of G covered by each A_i's conjugates.
    pub per_subgroup: Vec<usize>,
}

fn validate_proper_subgroup(g: &PermGroup, sub: &[u32], order: usize) -> Result<()> {
    if sub.len() >= order {
        return Err(Error::invalid("subgroup must be proper"));
    }
    if !g.is_subgroup_set(sub) {
        return Err(Error::invalid("input set is not a subgroup"));
    }
    Ok(())
}

/// Marks ∪_{i,x} A_i^x and reports coverage with per-subgroup counts.
pub fn covers_sets(g: &PermGroup, subs: &[Vec<u32>]) -> Result<CoverReport> {
    let n = g.order();
    for sub in subs {
        validate_proper_subgroup(g, sub, n)?;
    }
    let t = g.tables();
    let mut global = vec![false; n];
    let mut per_subgroup = Vec::with_capacity(subs.len());
    for sub in subs {
        let mut local = vec![false; n];
        for x in 0..n as u32 {
            for &a in sub {
                local[t.conj(a, x) as usize] = true;
            }
        }
        per_subgroup.push(local.iter().filter(|&&b| b).count());
        for (m, l) in global.iter_mut().zip(&local) {
            *m |= l;
        }
    }
    let witness_idx = global.iter().position(|&b| !b);
    Ok(CoverReport {
        covered: witness_idx.is_none(),
        witness: witness_idx.map(|i| g.element(i as u32).to_string()),
        per_subgroup,
    })
}

pub fn covers(g: &PermGroup, subs: &[PermGroup]) -> Result<CoverReport> {
    let sets = subs
        .iter()
        .map(|h| g.subgroup_indices(h))
        .collect::<Result<Vec<_>>>()?;
    covers_sets(g, &sets)
}

/// true iff ∩_{i,x} A_i^x = {identity}.
pub fn joint_core_trivial_sets(g: &PermGroup, subs: &[Vec<u32>]) -> Result<bool> {
    let n = g.order();
    if subs.is_empty() {
        return Err(Error::invalid("at least one subgroup required"));
    }
    for sub in subs {
        if !g.is_subgroup_set(sub) {
            return Err(Error::invalid("input set is not a subgroup"));
        }
    }
    let mut core: Vec<u32> = subs[0].clone();
    for sub in subs {
        for x in 0..n as u32 {
            let conj = g.conjugate_set(sub, x);
            core.retain(|a| conj.binary_search(a).is_ok());
            if core.len() == 1 {
                return Ok(true);
            }
        }
    }
    Ok(core.len() == 1)
}

pub fn joint_core_trivial(g: &PermGroup, subs: &[PermGroup]) -> Result<bool> {
    let sets = subs
        .iter()
        .map(|h| g.subgroup_indices(h))
        .collect::<Result<Vec<_>>>()?;
    joint_core_trivial_sets(g, &sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::from_cycles(&["(1 2 3)", "(1 2)"], 3, 100).unwrap()
    }

    #[test]
    fn s3_covered_by_c2_and_a3() {
        let g = s3();
        let c2 = PermGroup::from_cycles(&["(1 2)"], 3, 100).unwrap();
        let a3 = PermGroup::from_cycles(&["(1 2 3)"], 3, 100).unwrap();
        let r = covers(&g, &[c2.clone(), a3.clone()]).unwrap();
        assert!(r.covered);
        // 3 transpositions + id; 3-cycles + id
        assert_eq!(r.per_subgroup, vec![4, 3]);
        assert!(joint_core_trivial(&g, &[c2, a3]).unwrap());
    }

    #[test]
    fn cyclic_not_covered() {
        let c4 = PermGroup::from_cycles(&["(1 2 3 4)"], 4, 100).unwrap();
        let c2 = PermGroup::from_cycles(&["(1 3)(2 4)"], 4, 100).unwrap();
        let r = covers(&c4, &[c2]).unwrap();
        assert!(!r.covered);
        assert_eq!(r.witness.as_deref(), Some("(1 2 3 4)"));
    }

    #[test]
    fn agl15_covered_by_stabilizer_and_kernel() {
        let g = PermGroup::from_cycles(&["(1 2 3 4 5)", "(2 3 5 4)"], 5, 10080).unwrap();
        let stab = g.set_to_group(&g.point_stabilizer(0));
        let c5 = PermGroup::from_cycles(&["(1 2 3 4 5)"], 5, 100).unwrap();
        let r = covers(&g, &[stab, c5]).unwrap();
        assert!(r.covered);
    }

    #[test]
    fn nontrivial_core_detected() {
        let v4 = PermGroup::from_cycles(&["(1 2)(3 4)", "(1 3)(2 4)"], 4, 100).unwrap();
        let c2 = PermGroup::from_cycles(&["(1 2)(3 4)"], 4, 100).unwrap();
        assert!(!joint_core_trivial(&v4, &[c2.clone()]).unwrap());
        let r = covers(&v4, &[c2]).unwrap();
        assert!(!r.covered);
    }

    #[test]
    fn rejects_non_subgroup_and_improper() {
        let g = s3();
        assert!(covers(&g, std::slice::from_ref(&g)).is_err());
    }
}
