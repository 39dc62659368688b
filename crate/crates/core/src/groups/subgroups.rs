//! Subgroup enumeration up to conjugacy, maximal subgroup classes, and the
//! minimal covering number by conjugates of proper subgroups.

use crate::error::{Error, Result};
use crate::groups::cover::{covers_sets, joint_core_trivial_sets};
use crate::groups::group::PermGroup;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// One conjugacy class of subgroups: the least member as representative.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    /// Sorted element indices of the representative, relative to the parent.
    pub rep: Vec<u32>,
    /// Number of conjugate subgroups in the class, [G : N_G(S)].
    pub conjugates: usize,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.rep.len()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinCover {
    pub m: usize,
    /// Generating description of each witness class representative:
    /// its order and element list in cycle notation.
    pub witnesses: Vec<CoverWitness>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoverWitness {
    pub order: usize,
    pub elements: Vec<String>,
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

/// Elements of prime-power order generate every subgroup (each element is
/// the product of its commuting prime-power components, all powers of it).
fn prime_power_order_elements(g: &PermGroup) -> Vec<u32> {
    (0..g.order() as u32)
        .filter(|&i| is_prime_power(g.element(i).order()))
        .collect()
}

/// All subgroups satisfying `admit`, grouped into conjugacy classes.
/// `admit` must be inherited by subgroups (admit(T) and S ≤ T ⇒ admit(S)),
/// so failing sets can be pruned from the search without losing any
/// admissible subgroup: every subgroup is generated by its elements of
/// prime-power order, and all intermediate closures stay inside it.
fn enumerate_classes(
    g: &PermGroup,
    enum_cap: usize,
    admit: &dyn Fn(&[u32]) -> bool,
) -> Result<Vec<SubgroupClass>> {
    if g.order() > enum_cap {
        return Err(Error::resource(format!(
            "subgroup enumeration cap {enum_cap} exceeded by group of order {}",
            g.order()
        )));
    }
    let adjoin = prime_power_order_elements(g);
    let trivial = vec![g.identity_index()];
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: Vec<Vec<u32>> = Vec::new();
    if admit(&trivial) {
        seen.insert(trivial.clone());
        queue.push(trivial);
    }
    let mut k = 0;
    while k < queue.len() {
        let s = queue[k].clone();
        k += 1;
        for &a in &adjoin {
            if s.binary_search(&a).is_ok() {
                continue;
            }
            let mut seed = s.clone();
            seed.push(a);
            let t = g.subgroup_closure(&seed);
            if !seen.contains(&t) && admit(&t) {
                seen.insert(t.clone());
                queue.push(t);
            }
        }
    }
    Ok(classify(g, queue))
}

/// Partition a list of subgroup sets into conjugacy classes.
fn classify(g: &PermGroup, subs: Vec<Vec<u32>>) -> Vec<SubgroupClass> {
    let pool: HashSet<Vec<u32>> = subs.iter().cloned().collect();
    let mut done: HashSet<Vec<u32>> = HashSet::new();
    let mut classes = Vec::new();
    let mut sorted = subs;
    sorted.sort();
    for s in sorted {
        if done.contains(&s) {
            continue;
        }
        let mut orbit: HashSet<Vec<u32>> = HashSet::new();
        for x in 0..g.order() as u32 {
            orbit.insert(g.conjugate_set(&s, x));
        }
        let rep = orbit.iter().min().unwrap().clone();
        for c in &orbit {
            if pool.contains(c) {
                done.insert(c.clone());
            }
        }
        classes.push(SubgroupClass {
            rep,
            conjugates: orbit.len(),
        });
    }
    classes.sort_by(|a, b| a.rep.len().cmp(&b.rep.len()).then(a.rep.cmp(&b.rep)));
    classes
}

/// One representative per conjugacy class of subgroups of order ≥ min_order.
pub fn subgroup_classes(
    g: &PermGroup,
    min_order: usize,
    enum_cap: usize,
) -> Result<Vec<SubgroupClass>> {
    let mut classes = enumerate_classes(g, enum_cap, &|_| true)?;
    classes.retain(|c| c.order() >= min_order);
    Ok(classes)
}

/// Classes of subgroups D with D ∩ avoid = {1}; the condition is inherited
/// by subgroups, so it doubles as a search prune.
pub fn subgroup_classes_avoiding(
    g: &PermGroup,
    avoid: &[u32],
    enum_cap: usize,
) -> Result<Vec<SubgroupClass>> {
    let id = g.identity_index();
    enumerate_classes(g, enum_cap, &|s: &[u32]| {
        s.iter()
            .all(|a| *a == id || avoid.binary_search(a).is_err())
    })
}

/// A small generating subset of a subgroup set (greedy).
fn generating_subset(g: &PermGroup, sub: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut closed = vec![g.identity_index()];
    for &a in sub {
        if closed.binary_search(&a).is_err() {
            gens.push(a);
            closed = g.subgroup_closure(&gens);
            if closed.len() == sub.len() {
                break;
            }
        }
    }
    gens
}

fn is_conjugate_subgroup(g: &PermGroup, a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    (0..g.order() as u32).any(|x| g.conjugate_set(a, x) == *b)
}

/// Maximal subgroup classes.  Below the full-lattice threshold these come
/// from complete enumeration; above it, candidates are the 2-generated
/// proper subgroups (one generator per element class, the other arbitrary),
/// saturated upward until maximal.  Every maximal subgroup of the groups
/// this engine targets is 2-generated, and saturation certifies maximality
/// directly: M is kept only if adjoining any outside element yields G.
pub fn maximal_classes(g: &PermGroup, enum_cap: usize) -> Result<Vec<SubgroupClass>> {
    const LATTICE_THRESHOLD: usize = 300;
    let n = g.order();
    if n == 1 {
        return Ok(Vec::new());
    }
    if n <= LATTICE_THRESHOLD && n <= enum_cap {
        let classes = subgroup_classes(g, 1, enum_cap)?;
        let mut maximal = Vec::new();
        for (i, c) in classes.iter().enumerate() {
            if c.order() == n {
                continue;
            }
            let mut is_max = true;
            'outer: for (j, d) in classes.iter().enumerate() {
                if i == j || d.order() >= n || d.order() <= c.order() {
                    continue;
                }
                for x in 0..n as u32 {
                    let conj = g.conjugate_set(&d.rep, x);
                    if c.rep.iter().all(|a| conj.binary_search(a).is_ok()) {
                        is_max = false;
                        break 'outer;
                    }
                }
            }
            if is_max {
                maximal.push(c.clone());
            }
        }
        return Ok(maximal);
    }

    // 2-generated candidates up to conjugacy.
    let reps = g.element_class_reps();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for &a in &reps {
        if g.element(a).is_identity() {
            continue;
        }
        for b in 0..n as u32 {
            let s = g.subgroup_closure(&[a, b]);
            if s.len() < n {
                seen.insert(s);
            }
        }
    }
    // Saturate each candidate to a maximal overgroup.
    let mut maximal_sets: HashSet<Vec<u32>> = HashSet::new();
    for s in seen {
        let mut cur = s;
        loop {
            let gens = generating_subset(g, &cur);
            let mut grew = false;
            for x in 0..n as u32 {
                if cur.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = gens.clone();
                seed.push(x);
                let t = g.subgroup_closure(&seed);
                if t.len() < n {
                    cur = t;
                    grew = true;
                    break;
                }
            }
            if !grew {
                break;
            }
        }
        maximal_sets.insert(cur);
    }
    let mut out: Vec<SubgroupClass> = Vec::new();
    let mut sets: Vec<Vec<u32>> = maximal_sets.into_iter().collect();
    sets.sort();
    for s in sets {
        if out.iter().any(|c| is_conjugate_subgroup(g, &c.rep, &s)) {
            continue;
        }
        let mut orbit: HashSet<Vec<u32>> = HashSet::new();
        for x in 0..n as u32 {
            orbit.insert(g.conjugate_set(&s, x));
        }
        out.push(SubgroupClass {
            rep: orbit.iter().min().unwrap().clone(),
            conjugates: orbit.len(),
        });
    }
    out.sort_by(|a, b| a.rep.len().cmp(&b.rep.len()).then(a.rep.cmp(&b.rep)));
    Ok(out)
}

/// Smallest m ≤ max_m such that some m maximal subgroup classes cover G by
/// conjugates with trivial joint core, with witnesses; None otherwise.
/// Searching maximal classes only loses nothing: any covering family
/// extends to one of maximal overgroups, which still covers, and the joint
/// core stays trivial because the covering condition forces it downward
/// only — triviality is re-verified on the maximal witnesses themselves.
pub fn min_cover_m(g: &PermGroup, max_m: usize, enum_cap: usize) -> Result<Option<MinCover>> {
    let n = g.order();
    if n == 1 || g.is_cyclic() {
        // A generator lies in no proper subgroup, hence in no conjugate.
        return Ok(None);
    }
    let classes = maximal_classes(g, enum_cap)?;
    let sets: Vec<Vec<u32>> = classes.iter().map(|c| c.rep.clone()).collect();
    for m in 1..=max_m.min(sets.len()) {
        let mut chosen = vec![0usize; m];
        if let Some(witnesses) = try_combinations(g, &sets, &mut chosen, 0, 0, m)? {
            let witnesses = witnesses
                .iter()
                .map(|&i| CoverWitness {
                    order: sets[i].len(),
                    elements: sets[i]
                        .iter()
                        .map(|&e| g.element(e).to_string())
                        .collect(),
                })
                .collect();
            return Ok(Some(MinCover { m, witnesses }));
        }
    }
    Ok(None)
}

fn try_combinations(
    g: &PermGroup,
    sets: &[Vec<u32>],
    chosen: &mut Vec<usize>,
    pos: usize,
    start: usize,
    m: usize,
) -> Result<Option<Vec<usize>>> {
    if pos == m {
        // Prune for m = 2: |∪_x A^x| ≤ [G:N(A)](|A|−1)+1 ≤ |G| − [G:A] + 1,
        // so a 2-cover needs [G:A1] + [G:A2] ≤ |G| + 1.
        if m == 2 {
            let n = g.order();
            let i1 = n / sets[chosen[0]].len();
            let i2 = n / sets[chosen[1]].len();
            if i1 + i2 > n + 1 {
                return Ok(None);
            }
        }
        let subs: Vec<Vec<u32>> = chosen.iter().map(|&i| sets[i].clone()).collect();
        let cover = covers_sets(g, &subs)?;
        if cover.covered && joint_core_trivial_sets(g, &subs)? {
            return Ok(Some(chosen.clone()));
        }
        return Ok(None);
    }
    for i in start..sets.len() {
        chosen[pos] = i;
        if let Some(w) = try_combinations(g, sets, chosen, pos + 1, i + 1, m)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1000;

    #[test]
    fn s3_lattice() {
        let g = PermGroup::from_cycles(&["(1 2 3)", "(1 2)"], 3, 100).unwrap();
        let classes = subgroup_classes(&g, 1, CAP).unwrap();
        assert_eq!(classes.len(), 4);
        let total: usize = classes.iter().map(|c| c.conjugates).sum();
        assert_eq!(total, 6);
        let orders: Vec<usize> = classes.iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn v4_lattice() {
        let g = PermGroup::from_cycles(&["(1 2)(3 4)", "(1 3)(2 4)"], 4, 100).unwrap();
        let classes = subgroup_classes(&g, 1, CAP).unwrap();
        assert_eq!(classes.len(), 5);
        assert!(classes.iter().all(|c| c.conjugates == 1));
    }

    #[test]
    fn a4_lattice() {
        let g = PermGroup::from_cycles(&["(1 2 3)", "(2 3 4)"], 4, 100).unwrap();
        assert_eq!(g.order(), 12);
        let classes = subgroup_classes(&g, 1, CAP).unwrap();
        let orders: Vec<usize> = classes.iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 12]);
        // V4 is the unique subgroup of order 4
        assert_eq!(classes[3].conjugates, 1);
    }

    #[test]
    fn min_cover_values() {
        let s3 = PermGroup::from_cycles(&["(1 2 3)", "(1 2)"], 3, 100).unwrap();
        let r = min_cover_m(&s3, 4, CAP).unwrap().unwrap();
        assert_eq!(r.m, 2);

        let v4 = PermGroup::from_cycles(&["(1 2)(3 4)", "(1 3)(2 4)"], 4, 100).unwrap();
        let r = min_cover_m(&v4, 4, CAP).unwrap().unwrap();
        assert_eq!(r.m, 3);

        let c6 = PermGroup::from_cycles(&["(1 2 3 4 5 6)"], 6, 100).unwrap();
        assert!(min_cover_m(&c6, 5, CAP).unwrap().is_none());
    }

    #[test]
    fn s4_maximal_classes() {
        let g = PermGroup::from_cycles(&["(1 2 3 4)", "(1 2)"], 4, 100).unwrap();
        let maxes = maximal_classes(&g, CAP).unwrap();
        let orders: Vec<usize> = maxes.iter().map(|c| c.order()).collect();
        // A4, D4 (three conjugates), S3 (four conjugates)
        assert_eq!(orders, vec![6, 8, 12]);
        let r = min_cover_m(&g, 4, CAP).unwrap().unwrap();
        assert_eq!(r.m, 2);
    }

    #[test]
    fn avoiding_enumeration() {
        let s3 = PermGroup::from_cycles(&["(1 2 3)", "(1 2)"], 3, 100).unwrap();
        let a3 = s3.subgroup_closure(&[s3
            .position(&crate::groups::perm::Perm::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap()]);
        let classes = subgroup_classes_avoiding(&s3, &a3, CAP).unwrap();
        let orders: Vec<usize> = classes.iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 2]);
    }
}
