//! Partitions, classical border strips and the classical
//! Murnaghan-Nakayama rule, used to cross-check the noncommutative rule
//! through the forgetful map `s_alpha -> s_{sort(alpha)}`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::nsym::{mn_rule, Basis, Element};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
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

    fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.0[i] <= self.0[i])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn sort_to_partition(alpha: &Composition) -> Partition {
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

/// Partitions of `n` in lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in 1..=rest.min(max) {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cells `(row, col)` of `mu / lambda`, 1-based.
fn skew_cells(mu: &Partition, lambda: &Partition) -> Result<BTreeSet<(usize, usize)>> {
    if !mu.contains(lambda) {
        return Err(Error::domain(format!("{lambda} is not contained in {mu}")));
    }
    Ok((0..mu.len())
        .flat_map(|i| (lambda.part(i) + 1..=mu.part(i)).map(move |j| (i + 1, j)))
        .collect())
}

fn is_connected(cells: &BTreeSet<(usize, usize)>) -> bool {
    let Some(&start) = cells.iter().next() else { return false };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((r, c)) = queue.pop_front() {
        let nbrs = [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))];
        for nb in nbrs {
            if cells.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == cells.len()
}

/// Whether `mu / lambda` is nonempty, connected and free of 2x2 blocks.
pub fn is_border_strip(mu: &Partition, lambda: &Partition) -> Result<bool> {
    let cells = skew_cells(mu, lambda)?;
    let has_block = cells.iter().any(|&(r, c)| {
        cells.contains(&(r + 1, c)) && cells.contains(&(r, c + 1)) && cells.contains(&(r + 1, c + 1))
    });
    Ok(is_connected(&cells) && !has_block)
}

/// Rows occupied minus one; only defined on border strips.
pub fn strip_height(mu: &Partition, lambda: &Partition) -> Result<usize> {
    if !is_border_strip(mu, lambda)? {
        return Err(Error::domain(format!("{mu}/{lambda} is not a border strip")));
    }
    let rows: BTreeSet<usize> = skew_cells(mu, lambda)?.into_iter().map(|c| c.0).collect();
    Ok(rows.len() - 1)
}

/// Coefficients of `p_k * s_lambda` in the Schur basis.
pub fn classical_mn(k: usize, lambda: &Partition) -> Result<BTreeMap<Partition, i64>> {
    if k == 0 {
        return Err(Error::domain("p_k needs k >= 1"));
    }
    let mut out = BTreeMap::new();
    for mu in partitions_of(lambda.size() + k) {
        if mu.contains(lambda) && is_border_strip(&mu, lambda)? {
            let ht = strip_height(&mu, lambda)?;
            out.insert(mu, if ht % 2 == 0 { 1 } else { -1 });
        }
    }
    Ok(out)
}

/// Image of an S-basis element under the forgetful map, zeros dropped.
pub fn chi_project(e: &Element) -> Result<BTreeMap<Partition, BigInt>> {
    if e.basis() != Basis::S {
        return Err(Error::Basis { expected: Basis::S.to_string(), found: e.basis() });
    }
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (alpha, c) in e.terms() {
        *out.entry(sort_to_partition(alpha)).or_default() += c;
    }
    out.retain(|_, v| *v != BigInt::ZERO);
    Ok(out)
}

/// Whether the forgetful image of `Psi_n * s_alpha` equals
/// `p_n * s_{sort(alpha)}`.
pub fn chi_consistency(n: usize, alpha: &Composition) -> Result<bool> {
    let projected = chi_project(&mn_rule(n, alpha)?)?;
    let classical: BTreeMap<Partition, BigInt> = classical_mn(n, &sort_to_partition(alpha))?
        .into_iter()
        .map(|(mu, c)| (mu, BigInt::from(c)))
        .collect();
    Ok(projected == classical)
}
