//! Permutations on points 1..n, stored 0-based as image vectors.

use crate::error::{Error, Result};
use std::fmt;

/// A permutation of {0, .., n-1}; `images[i]` is the image of point i.
/// Displayed and parsed in 1-based cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(Error::invalid("image vector is not a bijection"));
            }
            seen[im] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// self ∘ other: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Perm { images: inv }
    }

    /// x · self · x⁻¹.
    pub fn conjugate_by(&self, x: &Perm) -> Perm {
        x.compose(self).compose(&x.inverse())
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&i| self.images[i] == i)
            .collect()
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num_integer::lcm)
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Parse 1-based cycle notation like `(1 2 3)(4 5)` on declared degree n.
    /// The empty string and `()` both denote the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let s = s.trim();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::parse("expected '(' in cycle notation"))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::parse("unexpected text between cycles"));
            }
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| Error::parse("missing ')' in cycle notation"))?
                + open;
            let body = &rest[open + 1..close];
            let pts: Vec<usize> = body
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(format!("bad point '{t}'")))
                })
                .collect::<Result<_>>()?;
            for &p in &pts {
                if p == 0 || p > n {
                    return Err(Error::parse(format!("point {p} out of range 1..{n}")));
                }
                if moved[p - 1] {
                    return Err(Error::parse(format!("point {p} appears twice")));
                }
                moved[p - 1] = true;
            }
            for w in 0..pts.len() {
                let from = pts[w] - 1;
                let to = pts[(w + 1) % pts.len()] - 1;
                images[from] = to;
            }
            rest = &rest[close + 1..];
        }
        Perm::new(images)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let n = self.images.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        let p = Perm::parse_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 4);
        assert_eq!(Perm::parse_cycles("", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::parse_cycles("()", 4).unwrap(), Perm::identity(4));
    }

    #[test]
    fn algebra() {
        let a = Perm::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
        // (1 2 3)(1 2) applied right-to-left: 1 -> 2 -> 3
        assert_eq!(a.compose(&b).apply(0), 2);
        assert_eq!(a.order(), 3);
        assert_eq!(b.conjugate_by(&a).to_string(), "(2 3)");
        assert_eq!(
            Perm::parse_cycles("(1 2)(3 4 5 6)", 6).unwrap().cycle_type(),
            vec![4, 2]
        );
    }

    #[test]
    fn parse_errors() {
        assert!(Perm::parse_cycles("(1 2", 3).is_err());
        assert!(Perm::parse_cycles("(1 4)", 3).is_err());
        assert!(Perm::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse_cycles("(0 1)", 3).is_err());
    }
}
