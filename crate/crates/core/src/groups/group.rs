//! Finite permutation groups with full element lists under an order cap.
//! Every check in scope is set-theoretic over elements, so subgroups are
//! handled as sorted index sets into the parent's element list.

use crate::error::{Error, Result};
use crate::groups::perm::Perm;
use std::collections::HashMap;
use std::sync::OnceLock;

#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    tables: OnceLock<Tables>,
}

/// Multiplication and inverse over element indices.
#[derive(Debug)]
pub struct Tables {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Tables {
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// x a x⁻¹
    #[inline]
    pub fn conj(&self, a: u32, x: u32) -> u32 {
        self.mul(self.mul(x, a), self.inv(x))
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            tables: OnceLock::new(),
        }
    }
}

impl PermGroup {
    /// Full element list by breadth-first closure; errors if the order
    /// would exceed `cap`.
    pub fn closure(generators: &[Perm], cap: usize) -> Result<PermGroup> {
        if generators.is_empty() {
            return Err(Error::invalid("at least one generator required"));
        }
        let degree = generators[0].degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::invalid("generators must have equal degree"));
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, u32> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            let e = elements[i].clone();
            for g in generators {
                let h = g.compose(&e);
                if !index.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(Error::resource(format!(
                            "group order exceeds cap {cap}"
                        )));
                    }
                    index.insert(h.clone(), elements.len() as u32);
                    frontier.push(elements.len());
                    elements.push(h);
                }
            }
        }
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        Ok(PermGroup {
            degree,
            generators: generators.to_vec(),
            elements,
            index,
            tables: OnceLock::new(),
        })
    }

    pub fn from_cycles(gens: &[&str], degree: usize, cap: usize) -> Result<PermGroup> {
        let perms = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::closure(&perms, cap)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn position(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn identity_index(&self) -> u32 {
        self.position(&Perm::identity(self.degree)).unwrap()
    }

    pub fn tables(&self) -> &Tables {
        self.tables.get_or_init(|| {
            let n = self.elements.len();
            let mut mul = vec![0u32; n * n];
            let mut inv = vec![0u32; n];
            for (a, pa) in self.elements.iter().enumerate() {
                for (b, pb) in self.elements.iter().enumerate() {
                    mul[a * n + b] = self.index[&pa.compose(pb)];
                }
                inv[a] = self.index[&pa.inverse()];
            }
            Tables { n, mul, inv }
        })
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < orbit.len() {
                let pt = orbit[k];
                for g in &self.generators {
                    let im = g.apply(pt);
                    if !seen[im] {
                        seen[im] = true;
                        orbit.push(im);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Indices of elements fixing the 0-based point.
    pub fn point_stabilizer(&self, point: usize) -> Vec<u32> {
        (0..self.elements.len() as u32)
            .filter(|&i| self.elements[i as usize].apply(point) == point)
            .collect()
    }

    /// Restrict the action to one orbit (0-based points), renumbering the
    /// points; the homomorphic image is returned together with nothing else
    /// (callers needing the kernel test faithfulness via the order).
    pub fn restrict_to_orbit(&self, orbit: &[usize], cap: usize) -> Result<PermGroup> {
        let mut pos = HashMap::new();
        for (k, &pt) in orbit.iter().enumerate() {
            pos.insert(pt, k);
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let images = orbit
                    .iter()
                    .map(|&pt| {
                        pos.get(&g.apply(pt))
                            .copied()
                            .ok_or_else(|| Error::invalid("set is not an orbit"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Perm::new(images)
            })
            .collect::<Result<Vec<_>>>()?;
        PermGroup::closure(&gens, cap)
    }

    /// Closure of a set of element indices inside this group.
    pub fn subgroup_closure(&self, seed: &[u32]) -> Vec<u32> {
        let t = self.tables();
        let n = self.elements.len();
        let mut in_set = vec![false; n];
        let id = self.identity_index();
        in_set[id as usize] = true;
        let mut elems = vec![id];
        let mut frontier: Vec<u32> = Vec::new();
        for &s in seed {
            if !in_set[s as usize] {
                in_set[s as usize] = true;
                elems.push(s);
                frontier.push(s);
            }
        }
        let gens: Vec<u32> = frontier.clone();
        while let Some(a) = frontier.pop() {
            for &g in &gens {
                for prod in [t.mul(g, a), t.mul(a, g)] {
                    if !in_set[prod as usize] {
                        in_set[prod as usize] = true;
                        elems.push(prod);
                        frontier.push(prod);
                    }
                }
            }
            let ia = t.inv(a);
            if !in_set[ia as usize] {
                in_set[ia as usize] = true;
                elems.push(ia);
                frontier.push(ia);
            }
        }
        elems.sort_unstable();
        elems
    }

    /// x · sub · x⁻¹ as a sorted index set.
    pub fn conjugate_set(&self, sub: &[u32], x: u32) -> Vec<u32> {
        let t = self.tables();
        let mut out: Vec<u32> = sub.iter().map(|&a| t.conj(a, x)).collect();
        out.sort_unstable();
        out
    }

    /// Verify that a sorted index set is closed (hence a subgroup).
    pub fn is_subgroup_set(&self, sub: &[u32]) -> bool {
        if sub.binary_search(&self.identity_index()).is_err() {
            return false;
        }
        let t = self.tables();
        for &a in sub {
            for &b in sub {
                if sub.binary_search(&t.mul(a, b)).is_err() {
                    return false;
                }
            }
        }
        true
    }

    /// Sorted index set of a subgroup given as its own PermGroup.
    pub fn subgroup_indices(&self, h: &PermGroup) -> Result<Vec<u32>> {
        if h.degree != self.degree {
            return Err(Error::invalid("subgroup degree mismatch"));
        }
        let mut out = Vec::with_capacity(h.order());
        for e in &h.elements {
            match self.position(e) {
                Some(i) => out.push(i),
                None => return Err(Error::invalid("element not in parent group")),
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Standalone group from a sorted index set (must be a subgroup).
    pub fn set_to_group(&self, sub: &[u32]) -> PermGroup {
        let elements: Vec<Perm> = sub.iter().map(|&i| self.elements[i as usize].clone()).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        let mut generators: Vec<Perm> = elements
            .iter()
            .filter(|e| !e.is_identity())
            .cloned()
            .collect();
        if generators.is_empty() {
            generators.push(Perm::identity(self.degree));
        }
        PermGroup {
            degree: self.degree,
            generators,
            elements,
            index,
            tables: OnceLock::new(),
        }
    }

    /// One index per conjugacy class of elements, each the least in its class.
    pub fn element_class_reps(&self) -> Vec<u32> {
        let t = self.tables();
        let n = self.elements.len();
        let mut seen = vec![false; n];
        let mut reps = Vec::new();
        for a in 0..n as u32 {
            if seen[a as usize] {
                continue;
            }
            reps.push(a);
            for x in 0..n as u32 {
                seen[t.conj(a, x) as usize] = true;
            }
        }
        reps
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements.iter().any(|e| e.order() == n)
    }

    pub fn is_abelian_set(&self, sub: &[u32]) -> bool {
        let t = self.tables();
        for &a in sub {
            for &b in sub {
                if t.mul(a, b) != t.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Normality of a sorted index set in the whole group.
    pub fn is_normal_set(&self, sub: &[u32]) -> bool {
        let t = self.tables();
        for x in 0..self.order() as u32 {
            for &a in sub {
                if sub.binary_search(&t.conj(a, x)).is_err() {
                    return false;
                }
            }
        }
        true
    }
}
