//! Compositions, their diagrams, the subset bijection and the refinement order.
//!
//! Diagrams use the English convention: row `i` (1-based) is drawn `i`-th from
//! the top and holds `parts[i - 1]` left-justified boxes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite ordered list of positive integers. The empty composition is a
/// regular value.
///
/// The derived ordering is lexicographic on the part lists, which is the
/// canonical order used for term listings and matrix indexing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain(format!(
                "composition parts must be positive, got {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    /// Builds a composition from parts known to be positive.
    ///
    /// # Panics
    /// Panics if any part is zero.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("composition parts must be positive")
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The composition `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    /// The one-part composition `(n)`, or the empty composition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// The hook `(1^k, n - k)`.
    pub fn hook(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::domain(format!("hook (1^{k}, {n}-{k}) needs 0 <= k < n")));
        }
        let mut parts = vec![1; k];
        parts.push(n - k);
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Does the diagram contain box `(row, col)` (both 1-based)?
    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && row <= self.0.len() && col <= self.0[row - 1]
    }

    /// The partial sums `{a1, a1+a2, ..., a1+...+a(k-1)}`.
    pub fn set_of(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`Composition::set_of`]: the composition of `n` whose partial
    /// sums are the elements of `set`.
    pub fn comp_of(set: &BTreeSet<usize>, n: usize) -> Result<Self> {
        if let Some(&bad) = set.iter().find(|&&s| s == 0 || s >= n) {
            return Err(Error::domain(format!("{bad} is not in [1, {}]", n.saturating_sub(1))));
        }
        if n == 0 {
            return Ok(Self::empty());
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    /// `self ≽ finer` in the refinement order: the parts of `self` are sums of
    /// consecutive parts of `finer`.
    pub fn is_coarsening_of(&self, finer: &Composition) -> bool {
        if self.size() != finer.size() {
            return false;
        }
        let mut it = finer.0.iter();
        for &p in &self.0 {
            let mut acc = 0;
            while acc < p {
                match it.next() {
                    Some(&q) => acc += q,
                    None => return false,
                }
            }
            if acc != p {
                return false;
            }
        }
        it.next().is_none()
    }

    /// All coarsenings of `self` (including itself), in canonical order.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        let set: Vec<usize> = self.set_of().into_iter().collect();
        let mut out: Vec<Composition> = (0u64..1 << set.len())
            .map(|mask| {
                let sub: BTreeSet<usize> = set
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect();
                Composition::comp_of(&sub, n).expect("subset of a valid descent set")
            })
            .collect();
        out.sort();
        out
    }

    /// Concatenation `(a1, ..., ak, b1, ..., bl)`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Near-concatenation `(a1, ..., ak + b1, ..., bl)`; `None` when either
    /// side is empty.
    pub fn near_concat(&self, other: &Composition) -> Option<Composition> {
        let (last, first) = (self.0.last()?, other.0.first()?);
        let mut parts = self.0[..self.0.len() - 1].to_vec();
        parts.push(last + first);
        parts.extend_from_slice(&other.0[1..]);
        Some(Composition(parts))
    }

    /// Whether `self` fits inside `outer` once both diagrams are aligned at
    /// the bottom row. Every composition below `outer` in the reverse
    /// composition poset has this property.
    pub fn fits_bottom_aligned(&self, outer: &Composition) -> bool {
        if self.len() > outer.len() {
            return false;
        }
        let offset = outer.len() - self.len();
        self.0.iter().zip(&outer.0[offset..]).all(|(a, b)| a <= b)
    }
}

/// All `2^(n-1)` compositions of `n` in canonical (lexicographic) order. For
/// `n = 0` this is the single empty composition.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut current = Vec::new();
    fill_compositions(n, &mut current, &mut out);
    out
}

fn fill_compositions(rest: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if rest == 0 {
        out.push(Composition(current.clone()));
        return;
    }
    // smallest first part first gives lexicographic order
    for first in 1..=rest {
        current.push(first);
        fill_compositions(rest - first, current, out);
        current.pop();
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses the command-line form: comma-separated positive integers, or the
/// literal `empty`.
impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "empty" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::from_parts(p)
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn set_of_examples() {
        assert_eq!(c(&[4, 2, 3]).set_of(), set(&[4, 6]));
        assert_eq!(c(&[7]).set_of(), set(&[]));
        assert_eq!(c(&[1, 1, 1]).set_of(), set(&[1, 2]));
        assert_eq!(Composition::empty().set_of(), set(&[]));
    }

    #[test]
    fn comp_of_examples() {
        assert_eq!(Composition::comp_of(&set(&[4, 6]), 9).unwrap(), c(&[4, 2, 3]));
        assert_eq!(Composition::comp_of(&set(&[]), 5).unwrap(), c(&[5]));
        assert_eq!(Composition::comp_of(&set(&[1, 2, 3, 4]), 5).unwrap(), Composition::ones(5));
        assert_eq!(Composition::comp_of(&set(&[]), 0).unwrap(), Composition::empty());
    }

    #[test]
    fn comp_of_rejects_out_of_range() {
        assert!(matches!(Composition::comp_of(&set(&[5]), 5), Err(Error::Domain(_))));
        assert!(matches!(Composition::comp_of(&set(&[0]), 5), Err(Error::Domain(_))));
        assert!(Composition::comp_of(&set(&[1]), 0).is_err());
    }

    #[test]
    fn coarsening_examples() {
        assert!(c(&[4, 2, 3]).is_coarsening_of(&c(&[3, 1, 2, 1, 2])));
        assert!(c(&[4, 2, 3]).is_coarsening_of(&c(&[4, 2, 3])));
        assert!(!c(&[3, 1, 2, 1, 2]).is_coarsening_of(&c(&[4, 2, 3])));
        assert!(!c(&[4, 2, 3]).is_coarsening_of(&c(&[2, 3, 4])));
    }

    #[test]
    fn compositions_of_small() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        assert_eq!(
            compositions_of(3),
            vec![c(&[1, 1, 1]), c(&[1, 2]), c(&[2, 1]), c(&[3])]
        );
        assert_eq!(compositions_of(6).len(), 32);
        let ten = compositions_of(10);
        assert_eq!(ten.len(), 512);
        assert!(ten.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn coarsenings_match_refinement_predicate() {
        let beta = c(&[1, 2, 1, 1]);
        let expected: Vec<_> = compositions_of(5)
            .into_iter()
            .filter(|a| a.is_coarsening_of(&beta))
            .collect();
        assert_eq!(beta.coarsenings(), expected);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,1,3".parse::<Composition>().unwrap(), c(&[2, 1, 3]));
        assert_eq!("empty".parse::<Composition>().unwrap(), Composition::empty());
        assert!("2,0".parse::<Composition>().is_err());
        assert!("a".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
        assert_eq!(c(&[2, 1, 3]).to_string(), "(2,1,3)");
    }

    #[test]
    fn json_form() {
        assert_eq!(serde_json::to_string(&c(&[2, 1, 3])).unwrap(), "[2,1,3]");
        assert_eq!(serde_json::to_string(&Composition::empty()).unwrap(), "[]");
        assert!(serde_json::from_str::<Composition>("[1,0]").is_err());
    }

    #[test]
    fn near_concat_and_concat() {
        assert_eq!(c(&[2, 1]).concat(&c(&[3])), c(&[2, 1, 3]));
        assert_eq!(c(&[2, 1]).near_concat(&c(&[3])), Some(c(&[2, 4])));
        assert_eq!(Composition::empty().near_concat(&c(&[3])), None);
    }
}
