//! The reverse composition poset, skew reverse composition shapes and nc
//! border strips.
//!
//! `beta <_c alpha` is decided by searching cover chains, one box-adding
//! operator at a time. Candidates that do not fit bottom-aligned inside the
//! target are pruned: operators never remove boxes and new rows only appear
//! at the top.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::box_ops::{self, apply_at, apply_word_tracked, Word};
use crate::composition::Composition;
use crate::error::{Error, Result};

/// A skew reverse composition shape `outer // inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Composition,
    pub inner: Composition,
    /// `(row, column)` pairs in outer coordinates, 1-based.
    pub boxes: BTreeSet<(usize, usize)>,
}

impl SkewShape {
    /// The straight shape `alpha // ∅`.
    pub fn straight(alpha: &Composition) -> Self {
        let boxes = alpha
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
            .collect();
        SkewShape { outer: alpha.clone(), inner: Composition::empty(), boxes }
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Whether `(row, col)` belongs to the inner shape, in outer coordinates.
    /// The inner diagram occupies the bottom rows of the outer one.
    pub fn is_inner_box(&self, row: usize, col: usize) -> bool {
        let offset = self.outer.len() - self.inner.len();
        row > offset && self.inner.contains_box(row - offset, col)
    }

    /// Boxes of column `col`, top to bottom.
    pub fn column(&self, col: usize) -> Vec<(usize, usize)> {
        self.boxes.iter().filter(|b| b.1 == col).copied().collect()
    }

    pub fn rows_occupied(&self) -> BTreeSet<usize> {
        self.boxes.iter().map(|b| b.0).collect()
    }
}

/// Finds a word `w` with `w(inner) = outer`, if one exists.
pub fn find_chain(inner: &Composition, outer: &Composition) -> Option<Word> {
    if !inner.fits_bottom_aligned(outer) {
        return None;
    }
    let steps = outer.size() - inner.size();
    let max_index = outer.max_part();
    // composition -> indices in application order
    let mut frontier: HashMap<Composition, Vec<usize>> = HashMap::from([(inner.clone(), vec![])]);
    for _ in 0..steps {
        let mut next: HashMap<Composition, Vec<usize>> = HashMap::new();
        for (comp, path) in &frontier {
            for i in 1..=max_index {
                let Some(grown) = box_ops::apply(i, comp) else { continue };
                if !grown.fits_bottom_aligned(outer) || next.contains_key(&grown) {
                    continue;
                }
                let mut p = path.clone();
                p.push(i);
                next.insert(grown, p);
            }
        }
        frontier = next;
    }
    frontier.remove(outer).map(|mut applied| {
        applied.reverse();
        Word::new(applied).expect("indices are positive")
    })
}

/// Strict order of the reverse composition poset: `beta <_c alpha`.
pub fn less_c(beta: &Composition, alpha: &Composition) -> bool {
    beta != alpha && find_chain(beta, alpha).is_some()
}

/// The skew shape `outer // inner`, read off a cover chain.
pub fn skew(outer: &Composition, inner: &Composition) -> Result<SkewShape> {
    let chain = find_chain(inner, outer).ok_or_else(|| Error::Order {
        inner: inner.to_string(),
        outer: outer.to_string(),
    })?;
    let tracked = apply_word_tracked(&chain, inner)
        .ok_or_else(|| Error::Internal(format!("chain {chain} does not apply to {inner}")))?;
    Ok(SkewShape {
        outer: outer.clone(),
        inner: inner.clone(),
        boxes: tracked.added_boxes.into_iter().collect(),
    })
}

/// Column statistics of a skew shape. `e`, `se`, `ne` are only present for
/// interval shapes and `height` only for nc border strips.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeStats {
    pub support: BTreeSet<usize>,
    pub is_interval: bool,
    pub is_horizontal_strip: bool,
    pub is_vertical_strip: bool,
    pub is_nc_border_strip: bool,
    pub e: Option<BTreeSet<usize>>,
    pub se: Option<BTreeSet<usize>>,
    pub ne: Option<BTreeSet<usize>>,
    pub height: Option<usize>,
}

pub fn classify(s: &SkewShape) -> ShapeStats {
    let support: BTreeSet<usize> = s.boxes.iter().map(|b| b.1).collect();
    let is_interval = match (support.first(), support.last()) {
        (Some(lo), Some(hi)) => hi - lo + 1 == support.len(),
        _ => false,
    };
    let is_horizontal_strip = support.len() == s.boxes.len();
    let is_vertical_strip = s.rows_occupied().len() == s.boxes.len();

    let columns: BTreeMap<usize, Vec<usize>> = support
        .iter()
        .map(|&c| (c, s.column(c).into_iter().map(|b| b.0).collect()))
        .collect();

    let horizontal_pairs_ok = s.boxes.iter().all(|&(i, j)| {
        if !s.boxes.contains(&(i, j + 1)) {
            return true;
        }
        let rows = &columns[&j];
        if j == 1 {
            rows.last() == Some(&i)
        } else {
            rows.first() == Some(&i)
        }
    });
    let is_nc_border_strip = is_interval && horizontal_pairs_ok;

    let (mut e, mut se, mut ne) = (None, None, None);
    if is_interval {
        let (mut ev, mut sev, mut nev) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
        let last = *support.last().expect("interval shapes are nonempty");
        for &j in support.iter().filter(|&&j| j < last) {
            let here = &columns[&j];
            let right = &columns[&(j + 1)];
            if here.iter().any(|r| right.contains(r)) {
                ev.insert(j);
            } else if right.iter().any(|&r1| here.iter().any(|&r2| r1 > r2)) {
                sev.insert(j);
            }
            if right.iter().all(|&r1| here.iter().all(|&r2| r1 < r2)) {
                nev.insert(j);
            }
        }
        e = Some(ev);
        se = Some(sev);
        ne = Some(nev);
    }
    ShapeStats {
        support,
        is_interval,
        is_horizontal_strip,
        is_vertical_strip,
        is_nc_border_strip,
        e,
        se,
        ne,
        height: is_nc_border_strip.then(|| s.rows_occupied().len() - 1),
    }
}

/// Every `beta` reachable from `alpha` by a word of length `n`, with its skew
/// shape, in canonical order of `beta`.
///
/// Each `beta` is usually reached along several chains; the box sets of all
/// of them are compared and a disagreement is reported as an internal error.
pub fn enumerate_outers(alpha: &Composition, n: usize) -> Result<Vec<(Composition, SkewShape)>> {
    let max_index = box_ops::index_bound(alpha, n);
    let mut frontier: BTreeMap<Composition, BTreeSet<(usize, usize)>> =
        BTreeMap::from([(alpha.clone(), BTreeSet::new())]);
    for _ in 0..n {
        let mut next: BTreeMap<Composition, BTreeSet<(usize, usize)>> = BTreeMap::new();
        for (comp, boxes) in &frontier {
            for i in 1..=max_index {
                let Some((grown, row)) = apply_at(i, comp) else { continue };
                let mut new_boxes: BTreeSet<(usize, usize)> = if i == 1 {
                    boxes.iter().map(|&(r, c)| (r + 1, c)).collect()
                } else {
                    boxes.clone()
                };
                new_boxes.insert((row + 1, i));
                match next.get(&grown) {
                    Some(existing) if *existing != new_boxes => {
                        return Err(Error::Internal(format!(
                            "two chains from {alpha} to {grown} give different skew shapes"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        next.insert(grown, new_boxes);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(frontier
        .into_iter()
        .map(|(beta, boxes)| {
            let shape = SkewShape { outer: beta.clone(), inner: alpha.clone(), boxes };
            (beta, shape)
        })
        .collect())
}

/// Outers `beta` for which `beta // alpha` is an nc border strip of size `n`.
pub fn enumerate_b(alpha: &Composition, n: usize) -> Result<Vec<(Composition, SkewShape)>> {
    if n == 0 {
        return Err(Error::domain("border strips have at least one box"));
    }
    let mut out = enumerate_outers(alpha, n)?;
    out.retain(|(_, s)| classify(s).is_nc_border_strip);
    Ok(out)
}

/// The members of [`enumerate_b`] with no north-east column pair.
pub fn enumerate_p(alpha: &Composition, n: usize) -> Result<Vec<(Composition, SkewShape)>> {
    let mut out = enumerate_b(alpha, n)?;
    out.retain(|(_, s)| classify(s).ne.as_ref().is_some_and(BTreeSet::is_empty));
    Ok(out)
}
