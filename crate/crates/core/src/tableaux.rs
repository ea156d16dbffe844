//! Standard reverse composition tableaux (SRCTs) on skew shapes.
//!
//! An SRCT of shape `outer // inner` with `n` boxes corresponds to exactly one
//! word `w` with `w(inner) = outer`: the `s`-th box added receives `n - s + 1`.
//! Equivalently, letter `i_m` of the word is the column holding entry `m`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::box_ops::{self, apply_word_tracked, Word};
use crate::composition::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::skew::{classify, SkewShape};

/// A filling of a skew shape by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    pub shape: SkewShape,
    pub entries: BTreeMap<(usize, usize), usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    Inner,
    Entry(usize),
    /// Outside the outer diagram; reads as 0.
    Zero,
}

impl Filling {
    pub fn new(shape: SkewShape, entries: BTreeMap<(usize, usize), usize>) -> Result<Self> {
        let keys: BTreeSet<(usize, usize)> = entries.keys().copied().collect();
        if keys != shape.boxes {
            return Err(Error::domain("entries must cover exactly the boxes of the shape"));
        }
        if entries.values().any(|&v| v == 0) {
            return Err(Error::domain("entries must be positive"));
        }
        Ok(Filling { shape, entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    fn cell(&self, row: usize, col: usize) -> Cell {
        if let Some(&v) = self.entries.get(&(row, col)) {
            Cell::Entry(v)
        } else if self.shape.is_inner_box(row, col) {
            Cell::Inner
        } else {
            Cell::Zero
        }
    }

    /// `(row, column)` of each entry `1..=n`, if the entries are exactly `[n]`.
    fn positions(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.size();
        let mut pos = vec![None; n];
        for (&b, &v) in &self.entries {
            if v == 0 || v > n || pos[v - 1].is_some() {
                return None;
            }
            pos[v - 1] = Some(b);
        }
        pos.into_iter().collect()
    }

    /// Entries of column `col`, top to bottom.
    pub fn column_entries(&self, col: usize) -> Vec<usize> {
        self.entries.iter().filter(|(b, _)| b.1 == col).map(|(_, &v)| v).collect()
    }

    /// Triple rule: for `i < j` and a box `(j, k+1)` with entry `z`, if `(i, k)`
    /// is inner or holds an entry `>= z`, then `(i, k+1)` must be inner or
    /// hold an entry `> z`.
    fn satisfies_triple_rule(&self) -> bool {
        self.entries.iter().all(|(&(j, col), &z)| {
            if col < 2 {
                return true;
            }
            let k = col - 1;
            (1..j).all(|i| {
                let triggered = match self.cell(i, k) {
                    Cell::Inner => true,
                    Cell::Entry(x) => x >= z,
                    Cell::Zero => false,
                };
                !triggered
                    || match self.cell(i, k + 1) {
                        Cell::Inner => true,
                        Cell::Entry(y) => y > z,
                        Cell::Zero => false,
                    }
            })
        })
    }

    /// Whether this filling is an SRCT.
    pub fn is_srct(&self) -> bool {
        if self.positions().is_none() {
            return false;
        }
        let rows_ok = self.entries.iter().all(|(&(r, c), &v)| match self.entries.get(&(r, c + 1)) {
            Some(&right) => v >= right,
            None => true,
        });
        let first_column = self.column_entries(1);
        let column_ok = first_column.windows(2).all(|w| w[0] < w[1]);
        rows_ok && column_ok && self.satisfies_triple_rule()
    }

    /// Descent composition: `i` is a descent when `i + 1` sits weakly right
    /// of `i`.
    pub fn descent_composition(&self) -> Result<Composition> {
        if !self.is_srct() {
            return Err(Error::domain("descent composition needs an SRCT"));
        }
        let pos = self.positions().expect("SRCT entries form [n]");
        let des: BTreeSet<usize> = (1..pos.len()).filter(|&i| pos[i].1 >= pos[i - 1].1).collect();
        Composition::comp_of(&des, pos.len())
    }

    /// Row-major rendering: `.` for inner boxes, entries otherwise.
    pub fn render(&self) -> String {
        let width = self.size().to_string().len();
        let mut out = String::new();
        for (r, &p) in self.shape.outer.parts().iter().enumerate() {
            let cells: Vec<String> = (1..=p)
                .map(|c| match self.cell(r + 1, c) {
                    Cell::Entry(v) => format!("{v:>width$}"),
                    _ => format!("{:>width$}", "."),
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The SRCT of shape `w(alpha) // alpha` attached to the chain of `w`.
pub fn srct_from_word(w: &Word, alpha: &Composition) -> Option<Filling> {
    let tracked = apply_word_tracked(w, alpha)?;
    let n = w.len();
    let entries: BTreeMap<_, _> = tracked
        .added_boxes
        .iter()
        .enumerate()
        .map(|(s, &b)| (b, n - s))
        .collect();
    let shape = SkewShape {
        outer: tracked.result,
        inner: alpha.clone(),
        boxes: tracked.added_boxes.into_iter().collect(),
    };
    Some(Filling { shape, entries })
}

/// Inverse of [`srct_from_word`].
pub fn word_from_srct(f: &Filling) -> Result<Word> {
    if !f.is_srct() {
        return Err(Error::domain("word_from_srct needs an SRCT"));
    }
    let pos = f.positions().expect("SRCT entries form [n]");
    Word::new(pos.into_iter().map(|(_, col)| col).collect())
}

/// All words `w` (as application-order index lists) with `w(from) = to`.
fn chains_between(from: &Composition, to: &Composition) -> Vec<Vec<usize>> {
    fn rec(cur: &Composition, to: &Composition, max: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.size() == to.size() {
            if cur == to {
                out.push(path.clone());
            }
            return;
        }
        for i in 1..=max {
            let Some(next) = box_ops::apply(i, cur) else { continue };
            if !next.fits_bottom_aligned(to) {
                continue;
            }
            path.push(i);
            rec(&next, to, max, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if from.fits_bottom_aligned(to) {
        rec(from, to, to.max_part(), &mut Vec::new(), &mut out);
    }
    out
}

/// All words `w` with `w(inner) = outer`, sorted.
pub fn words_between(inner: &Composition, outer: &Composition) -> Vec<Word> {
    let mut out: Vec<Word> = chains_between(inner, outer)
        .into_iter()
        .map(|mut applied| {
            applied.reverse();
            Word::new(applied).expect("positive indices")
        })
        .collect();
    out.sort();
    out
}

/// All SRCTs of straight shape `alpha`.
pub fn enumerate_srct(alpha: &Composition) -> Vec<Filling> {
    words_between(&Composition::empty(), alpha)
        .iter()
        .map(|w| srct_from_word(w, &Composition::empty()).expect("chain applies"))
        .collect()
}

/// `d[alpha][beta]`: the number of SRCTs of shape `alpha` with descent
/// composition `beta`, rows and columns indexed by `compositions_of(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DMatrix {
    pub degree: usize,
    pub compositions: Vec<Composition>,
    index: HashMap<Composition, usize>,
    /// Sparse rows: `rows[a]` maps column index to count.
    rows: Vec<BTreeMap<usize, u64>>,
    /// The same entries by column.
    cols: Vec<BTreeMap<usize, u64>>,
}

impl DMatrix {
    pub fn index_of(&self, c: &Composition) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn get(&self, alpha: &Composition, beta: &Composition) -> u64 {
        match (self.index_of(alpha), self.index_of(beta)) {
            (Some(a), Some(b)) => self.rows[a].get(&b).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// Nonzero entries of row `alpha`, as `(beta, count)`.
    pub fn row(&self, alpha: &Composition) -> Vec<(Composition, u64)> {
        self.index_of(alpha)
            .map(|a| self.rows[a].iter().map(|(&b, &v)| (self.compositions[b].clone(), v)).collect())
            .unwrap_or_default()
    }

    /// Nonzero entries of column `beta`, as `(alpha, count)`.
    pub fn column(&self, beta: &Composition) -> Vec<(Composition, u64)> {
        let Some(b) = self.index_of(beta) else { return Vec::new() };
        self.cols[b].iter().map(|(&a, &v)| (self.compositions[a].clone(), v)).collect()
    }

    pub fn sparse_rows(&self) -> &[BTreeMap<usize, u64>] {
        &self.rows
    }

    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        let m = self.compositions.len();
        self.rows
            .iter()
            .map(|row| (0..m).map(|b| row.get(&b).copied().unwrap_or(0)).collect())
            .collect()
    }
}

pub fn d_coeff(alpha: &Composition, beta: &Composition) -> Result<u64> {
    if alpha.size() != beta.size() {
        return Err(Error::domain(format!("{alpha} and {beta} have different sizes")));
    }
    let mut count = 0;
    for f in enumerate_srct(alpha) {
        if f.descent_composition()? == *beta {
            count += 1;
        }
    }
    Ok(count)
}

/// Builds `d_matrix(n)` by enumerating every SRCT of size `n`.
pub fn d_matrix(n: usize) -> DMatrix {
    let compositions = compositions_of(n);
    let index: HashMap<Composition, usize> =
        compositions.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut rows = vec![BTreeMap::new(); compositions.len()];
    for (a, alpha) in compositions.iter().enumerate() {
        for f in enumerate_srct(alpha) {
            let beta = f.descent_composition().expect("enumerated fillings are SRCTs");
            *rows[a].entry(index[&beta]).or_insert(0) += 1;
        }
    }
    let mut cols = vec![BTreeMap::new(); compositions.len()];
    for (a, row) in rows.iter().enumerate() {
        for (&b, &v) in row {
            cols[b].insert(a, v);
        }
    }
    DMatrix { degree: n, compositions, index, rows, cols }
}

/// The filling built for an nc border strip: entries `n, n-1, ...` go to the
/// columns of `E` in increasing order (topmost box, or bottommost in column
/// 1); the rest count down column by column from the right, top to bottom
/// (bottom to top in column 1).
pub fn canonical_strip_filling(s: &SkewShape) -> Result<Filling> {
    let stats = classify(s);
    if !stats.is_nc_border_strip {
        return Err(Error::domain("canonical filling needs an nc border strip"));
    }
    let e = stats.e.expect("nc border strips are interval shapes");
    let n = s.size();
    let mut entries = BTreeMap::new();
    let mut next = n;
    for &col in &e {
        let column = s.column(col);
        let b = if col == 1 { *column.last().expect("E columns are nonempty") } else { column[0] };
        entries.insert(b, next);
        next -= 1;
    }
    for &col in stats.support.iter().rev() {
        let mut column = s.column(col);
        if col == 1 {
            column.reverse();
        }
        for b in column {
            if let std::collections::btree_map::Entry::Vacant(v) = entries.entry(b) {
                v.insert(next);
                next -= 1;
            }
        }
    }
    Filling::new(s.clone(), entries)
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    shape: SkewShapeJson,
    entries: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
struct SkewShapeJson {
    outer: Composition,
    inner: Composition,
    boxes: Vec<[usize; 2]>,
}

impl From<&SkewShape> for SkewShapeJson {
    fn from(s: &SkewShape) -> Self {
        SkewShapeJson {
            outer: s.outer.clone(),
            inner: s.inner.clone(),
            boxes: s.boxes.iter().map(|&(r, c)| [r, c]).collect(),
        }
    }
}

impl SkewShape {
    /// `{"outer":[..],"inner":[..],"boxes":[[r,c],..]}`, boxes sorted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SkewShapeJson::from(self)).expect("plain data serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: SkewShapeJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(SkewShape {
            outer: raw.outer,
            inner: raw.inner,
            boxes: raw.boxes.into_iter().map(|[r, c]| (r, c)).collect(),
        })
    }
}

impl Filling {
    /// `{"shape":..,"entries":[[r,c,v],..]}`, entries sorted by position.
    pub fn to_json(&self) -> serde_json::Value {
        let raw = FillingJson {
            shape: SkewShapeJson::from(&self.shape),
            entries: self.entries.iter().map(|(&(r, c), &v)| [r, c, v]).collect(),
        };
        serde_json::to_value(raw).expect("plain data serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: FillingJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let shape = SkewShape::from_json(&serde_json::to_value(raw.shape).expect("plain data"))?;
        Filling::new(shape, raw.entries.into_iter().map(|[r, c, v]| ((r, c), v)).collect())
    }
}
