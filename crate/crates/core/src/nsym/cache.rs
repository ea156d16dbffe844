//! Per-degree change-of-basis matrices between the ribbon and noncommutative
//! Schur bases, computed once and shared.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::tableaux::{d_matrix, DMatrix};

/// The inverse of a d-matrix: `columns[a]` is the ribbon expansion of
/// `s_{compositions[a]}`, keyed by composition index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseMatrix {
    pub degree: usize,
    pub compositions: Vec<Composition>,
    pub columns: Vec<BTreeMap<usize, BigInt>>,
}

type Cache<T> = OnceLock<RwLock<HashMap<usize, Arc<T>>>>;

static D_CACHE: Cache<DMatrix> = OnceLock::new();
static INV_CACHE: Cache<InverseMatrix> = OnceLock::new();

fn cached<T>(cache: &'static Cache<T>, n: usize, build: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
    let lock = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = lock.read().expect("cache lock poisoned").get(&n) {
        return Ok(Arc::clone(hit));
    }
    let built = Arc::new(build()?);
    let mut w = lock.write().expect("cache lock poisoned");
    // a concurrent builder may have won; its contents are identical
    Ok(Arc::clone(w.entry(n).or_insert(built)))
}

pub fn d_matrix_cached(n: usize) -> Arc<DMatrix> {
    cached(&D_CACHE, n, || Ok(d_matrix(n))).expect("d_matrix is infallible")
}

pub fn schur_to_ribbon_matrix(n: usize) -> Result<Arc<InverseMatrix>> {
    cached(&INV_CACHE, n, || invert(&d_matrix_cached(n)))
}

type SparseRow = BTreeMap<usize, BigRational>;

fn axpy(target: &mut SparseRow, f: &BigRational, source: &SparseRow) {
    for (&k, v) in source {
        let slot = target.entry(k).or_insert_with(BigRational::zero);
        *slot -= f * v;
        if slot.is_zero() {
            target.remove(&k);
        }
    }
}

/// Sparse Gauss-Jordan elimination over the rationals. The result must be
/// an integer matrix; anything else is reported as an internal failure.
fn invert(d: &DMatrix) -> Result<InverseMatrix> {
    let m = d.compositions.len();
    let mut rows: Vec<SparseRow> = d
        .sparse_rows()
        .iter()
        .map(|r| r.iter().map(|(&k, &v)| (k, BigRational::from_integer(v.into()))).collect())
        .collect();
    let mut aug: Vec<SparseRow> = (0..m).map(|a| BTreeMap::from([(a, BigRational::one())])).collect();
    let mut pivoted = vec![false; m];
    let mut pivot_of_col = vec![0; m];

    for j in 0..m {
        let r = (0..m)
            .filter(|&r| !pivoted[r] && rows[r].contains_key(&j))
            .min_by_key(|&r| rows[r].len())
            .ok_or_else(|| Error::Internal(format!("d_matrix({}) is singular", d.degree)))?;
        pivoted[r] = true;
        pivot_of_col[j] = r;
        let p = rows[r][&j].clone();
        if !p.is_one() {
            let inv = p.recip();
            rows[r].values_mut().for_each(|v| *v *= &inv);
            aug[r].values_mut().for_each(|v| *v *= &inv);
        }
        let pivot_row = rows[r].clone();
        let pivot_aug = aug[r].clone();
        for other in 0..m {
            if other == r {
                continue;
            }
            let Some(f) = rows[other].get(&j).cloned() else { continue };
            axpy(&mut rows[other], &f, &pivot_row);
            axpy(&mut aug[other], &f, &pivot_aug);
        }
    }

    // row j of the inverse is aug[pivot_of_col[j]]; transpose into columns
    let mut columns = vec![BTreeMap::new(); m];
    for (j, &r) in pivot_of_col.iter().enumerate() {
        for (&a, v) in &aug[r] {
            if !v.is_integer() {
                return Err(Error::Internal(format!(
                    "inverse of d_matrix({}) has non-integral entry {v}",
                    d.degree
                )));
            }
            columns[a].insert(j, v.to_integer());
        }
    }
    Ok(InverseMatrix { degree: d.degree, compositions: d.compositions.clone(), columns })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_times_matrix_is_identity() {
        for n in 0..=6 {
            let d = d_matrix_cached(n);
            let inv = schur_to_ribbon_matrix(n).unwrap();
            let dense = d.to_dense();
            let m = dense.len();
            for a in 0..m {
                for b in 0..m {
                    // (D * D^-1)[a][b] = sum_k D[a][k] * Dinv[k][b]
                    let s: BigInt = inv.columns[b]
                        .iter()
                        .map(|(&k, v)| BigInt::from(dense[a][k]) * v)
                        .sum();
                    assert_eq!(s, BigInt::from(u8::from(a == b)), "degree {n}");
                }
            }
        }
    }

    #[test]
    fn cache_returns_shared_matrix() {
        let a = d_matrix_cached(4);
        let b = d_matrix_cached(4);
        assert!(Arc::ptr_eq(&a, &b));
    }
}
