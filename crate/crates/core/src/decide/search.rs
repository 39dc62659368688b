//! Search for passing instances among m-subsets of a candidate pool.

use crate::decide::checks::{check, InstanceReport, Predicate};
use crate::decide::instance::verify_instance;
use crate::error::{Error, Result};
use crate::{Config, IntPoly};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct SearchHit {
    /// Indices into the pool, ascending.
    pub indices: Vec<usize>,
    pub factors: Vec<String>,
    pub report: InstanceReport,
}

#[derive(Debug, Serialize)]
pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    pub examined: usize,
    /// true when the budget ran out before all subsets were tried.
    pub exhausted: bool,
}

/// Try every m-subset of the pool in lexicographic index order, keep those
/// that validate and pass the chosen predicate with a computed group.
/// `budget` caps the number of subsets examined.
pub fn search(
    pool: &[IntPoly],
    m: usize,
    predicate: Predicate,
    budget: usize,
    cfg: &Config,
) -> Result<SearchOutcome> {
    if pool.is_empty() {
        return Err(Error::invalid("empty candidate pool"));
    }
    if m == 0 || m > pool.len() {
        return Err(Error::invalid(format!(
            "subset size {m} out of range for a pool of {}",
            pool.len()
        )));
    }
    let mut outcome = SearchOutcome {
        hits: Vec::new(),
        examined: 0,
        exhausted: false,
    };
    let mut indices: Vec<usize> = (0..m).collect();
    loop {
        if outcome.examined == budget {
            outcome.exhausted = true;
            return Ok(outcome);
        }
        outcome.examined += 1;
        let factors: Vec<IntPoly> = indices.iter().map(|&i| pool[i].clone()).collect();
        if let Ok(inst) = verify_instance(&factors, cfg) {
            match check(&inst, predicate, cfg) {
                Ok(report) if report.verdict.is_yes() => outcome.hits.push(SearchHit {
                    indices: indices.clone(),
                    factors: factors.iter().map(|f| f.to_string()).collect(),
                    report,
                }),
                Ok(_) => {}
                // resource caps on one subset do not abort the search
                Err(Error::Resource(_)) => {}
                Err(e) => return Err(e),
            }
        }
        // next lexicographic combination
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(outcome);
            }
            i -= 1;
            if indices[i] != i + pool.len() - m {
                break;
            }
        }
        indices[i] += 1;
        for j in i + 1..m {
            indices[j] = indices[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn brandl_pair_found() {
        let cfg = Config::default();
        let pool = vec![ip(&[-2, 0, 0, 1]), ip(&[1, 1, 1])];
        let out = search(&pool, 2, Predicate::Weak, 100, &cfg).unwrap();
        assert_eq!(out.hits.len(), 1);
        assert_eq!(out.hits[0].indices, vec![0, 1]);
        assert!(!out.exhausted);
    }

    #[test]
    fn quadratic_triple_found() {
        let cfg = Config::default();
        let pool = vec![ip(&[-2, 0, 1]), ip(&[-17, 0, 1]), ip(&[-34, 0, 1])];
        let out = search(&pool, 3, Predicate::Strong, 100, &cfg).unwrap();
        assert_eq!(out.hits.len(), 1);
    }

    #[test]
    fn two_quadratics_no_hit() {
        // frozen against the mod-p scan: p = 7 kills both x^2+1 and x^2+2
        let cfg = Config::default();
        let pool = vec![ip(&[1, 0, 1]), ip(&[2, 0, 1])];
        let out = search(&pool, 2, Predicate::Weak, 100, &cfg).unwrap();
        assert!(out.hits.is_empty());
        assert_eq!(out.examined, 1);
    }

    #[test]
    fn budget_and_usage_errors() {
        let cfg = Config::default();
        assert!(search(&[], 1, Predicate::Weak, 10, &cfg).is_err());
        let pool = vec![ip(&[1, 0, 1]), ip(&[2, 0, 1]), ip(&[3, 0, 1])];
        assert!(search(&pool, 4, Predicate::Weak, 10, &cfg).is_err());
        let out = search(&pool, 2, Predicate::Weak, 1, &cfg).unwrap();
        assert!(out.exhausted);
        assert_eq!(out.examined, 1);
    }
}
