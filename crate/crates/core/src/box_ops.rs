//! Box-adding operators on compositions and words in them.
//!
//! `t_1` prepends a part equal to 1; `t_i` for `i >= 2` grows the leftmost
//! part equal to `i - 1`, adding a box in column `i`. When no such part
//! exists the operator annihilates the composition, modelled here as `None`.
//!
//! A [`Word`] `t_{i1} t_{i2} ... t_{in}` is stored in display order and acts
//! right to left, so `t_{in}` is applied first.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// Applies `t_i` to `alpha`. Returns `None` for the zero result.
pub fn apply(i: usize, alpha: &Composition) -> Option<Composition> {
    apply_at(i, alpha).map(|(c, _)| c)
}

/// Like [`apply`], also returning the 0-based row that received the box
/// (always row 0 for `t_1`).
pub(crate) fn apply_at(i: usize, alpha: &Composition) -> Option<(Composition, usize)> {
    match i {
        0 => None,
        1 => {
            let mut parts = Vec::with_capacity(alpha.len() + 1);
            parts.push(1);
            parts.extend_from_slice(alpha.parts());
            Some((Composition::new(parts).expect("positive parts"), 0))
        }
        _ => {
            let row = alpha.parts().iter().position(|&p| p == i - 1)?;
            let mut parts = alpha.parts().to_vec();
            parts[row] += 1;
            Some((Composition::new(parts).expect("positive parts"), row))
        }
    }
}

/// A word in the box-adding operators, in display order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::domain("operator indices must be at least 1"));
        }
        Ok(Word(indices))
    }

    /// # Panics
    /// Panics if an index is zero.
    pub fn from_indices(indices: &[usize]) -> Self {
        Self::new(indices.to_vec()).expect("operator indices must be at least 1")
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices in the order they act on a composition.
    pub fn application_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().rev().copied()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0.iter().copied().collect()
    }

    /// Whether the support is a nonempty interval of integers.
    pub fn is_connected(&self) -> bool {
        let supp = self.support();
        match (supp.first(), supp.last()) {
            (Some(&lo), Some(&hi)) => hi - lo + 1 == supp.len(),
            _ => false,
        }
    }

    /// Entry `i - 1` counts the occurrences of `t_i`; the vector stops at the
    /// largest index used.
    pub fn content(&self) -> Vec<usize> {
        let mut out = vec![0; self.0.iter().copied().max().unwrap_or(0)];
        for &i in &self.0 {
            out[i - 1] += 1;
        }
        out
    }

    /// The unique `k` for which this word is a reverse `k`-hookword:
    /// `i1 <= ... <= i(k+1) > i(k+2) > ... > in`.
    pub fn hook_k(&self) -> Option<usize> {
        if self.0.is_empty() {
            return None;
        }
        let rise = 1 + self.0.windows(2).take_while(|w| w[0] <= w[1]).count();
        let falls = self.0[rise - 1..].windows(2).all(|w| w[0] > w[1]);
        falls.then_some(rise - 1)
    }

    /// The distinct letters of the leg (peak included), for a hookword.
    pub fn leg_set(&self) -> Option<BTreeSet<usize>> {
        let k = self.hook_k()?;
        Some(self.0[k..].iter().copied().collect())
    }

    /// Rebuilds the reverse hookword with the given content whose leg has the
    /// given letters. The leg must contain the largest letter of the content
    /// and only letters that occur in it.
    pub fn hookword_from_content_and_leg(content: &[usize], leg: &BTreeSet<usize>) -> Result<Word> {
        let peak = content
            .iter()
            .rposition(|&c| c > 0)
            .map(|p| p + 1)
            .ok_or_else(|| Error::domain("empty content"))?;
        if leg.last() != Some(&peak) {
            return Err(Error::domain(format!("leg must contain the peak letter {peak}")));
        }
        if let Some(&j) = leg.iter().find(|&&j| j == 0 || j > content.len() || content[j - 1] == 0) {
            return Err(Error::domain(format!("leg letter {j} does not occur in the content")));
        }
        let mut arm = Vec::new();
        for (i, &c) in content.iter().enumerate() {
            let letter = i + 1;
            let in_leg = leg.contains(&letter) && letter != peak;
            arm.extend(std::iter::repeat_n(letter, c - usize::from(in_leg)));
        }
        let mut word = arm;
        word.extend(leg.iter().rev().skip(1));
        Ok(Word(word))
    }
}

impl TryFrom<Vec<usize>> for Word {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Word::new(v)
    }
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for i in &self.0 {
            write!(f, "t{i}")?;
        }
        Ok(())
    }
}

/// Applies a word right to left. `None` is absorbing.
pub fn apply_word(w: &Word, alpha: &Composition) -> Option<Composition> {
    w.application_order()
        .try_fold(alpha.clone(), |acc, i| apply(i, &acc))
}

/// Result of a tracked word application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedResult {
    pub result: Composition,
    /// `(row, column)` of each added box in the result's coordinates, in
    /// application order.
    pub added_boxes: Vec<(usize, usize)>,
}

/// Applies `w` to `alpha`, recording where every added box ends up in the
/// final diagram. Rows shift down each time `t_1` prepends a part.
pub fn apply_word_tracked(w: &Word, alpha: &Composition) -> Option<TrackedResult> {
    // rows[r] = stable id of the row currently at index r
    let mut rows: Vec<usize> = (0..alpha.len()).collect();
    let mut next_id = alpha.len();
    let mut current = alpha.clone();
    let mut added = Vec::with_capacity(w.len());
    for i in w.application_order() {
        let (next, row) = apply_at(i, &current)?;
        if i == 1 {
            rows.insert(0, next_id);
            next_id += 1;
        }
        added.push((rows[row], i));
        current = next;
    }
    let mut final_row = vec![0; next_id];
    for (idx, &id) in rows.iter().enumerate() {
        final_row[id] = idx + 1;
    }
    Some(TrackedResult {
        result: current,
        added_boxes: added.into_iter().map(|(id, col)| (final_row[id], col)).collect(),
    })
}

/// Statistics of a word. The hookword-specific fields are `None` when the
/// word is not a reverse hookword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordStats {
    pub support: BTreeSet<usize>,
    pub is_connected: bool,
    pub content: Vec<usize>,
    pub hook_k: Option<usize>,
    /// Multiset, sorted ascending.
    pub arm: Option<Vec<usize>>,
    /// Multiset, sorted ascending.
    pub leg: Option<Vec<usize>>,
    pub asc: Option<usize>,
}

pub fn word_stats(w: &Word) -> WordStats {
    let hook_k = w.hook_k();
    let sorted = |s: &[usize]| {
        let mut v = s.to_vec();
        v.sort_unstable();
        v
    };
    let arm = hook_k.map(|k| sorted(&w.0[..=k]));
    let leg = hook_k.map(|k| sorted(&w.0[k..]));
    WordStats {
        support: w.support(),
        is_connected: w.is_connected(),
        content: w.content(),
        hook_k,
        asc: arm.as_ref().map(|a| a.len() - 1),
        arm,
        leg,
    }
}

/// All reverse `k`-hookwords of length `n` on letters `1..=max_index`, in
/// lexicographic order of their index lists.
pub fn enumerate_rhw(n: usize, k: usize, max_index: usize) -> Result<Vec<Word>> {
    if n == 0 || k >= n {
        return Err(Error::domain(format!("need 0 <= k <= n-1, got n={n}, k={k}")));
    }
    if max_index == 0 {
        return Err(Error::domain("max_index must be at least 1"));
    }
    let mut out = Vec::new();
    for arm in weakly_increasing_words(k + 1, max_index) {
        let peak = *arm.0.last().expect("arm has k+1 >= 1 letters");
        for tail in strictly_decreasing_words(n - k - 1, peak - 1) {
            let mut word = arm.0.clone();
            word.extend_from_slice(&tail.0);
            out.push(Word(word));
        }
    }
    out.sort();
    Ok(out)
}

/// All reverse hookwords of length `n` (every `k`), sorted.
pub fn enumerate_all_rhw(n: usize, max_index: usize) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for k in 0..n {
        out.extend(enumerate_rhw(n, k, max_index)?);
    }
    out.sort();
    Ok(out)
}

/// Connected reverse hookwords of length `n` on letters `1..=max_index`.
pub fn enumerate_crhw(n: usize, max_index: usize) -> Result<Vec<Word>> {
    if n == 0 {
        return Err(Error::domain("hookwords have length at least 1"));
    }
    let mut out = enumerate_all_rhw(n, max_index)?;
    out.retain(Word::is_connected);
    Ok(out)
}

/// Words `t_{i1} ... t_{in}` with `i1 > ... > in` (boxes added left to right
/// when applied). Letters lie in `1..=max_index`.
pub fn strictly_decreasing_words(n: usize, max_index: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, below: usize, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        if cur.len() == n {
            out.push(Word(cur.clone()));
            return;
        }
        let remaining = n - cur.len();
        for i in (remaining..below).rev() {
            cur.push(i);
            rec(n, i, cur, out);
            cur.pop();
        }
    }
    rec(n, max_index + 1, &mut cur, &mut out);
    out
}

/// Words `t_{i1} ... t_{in}` with `i1 <= ... <= in`. Letters lie in
/// `1..=max_index`.
pub fn weakly_increasing_words(n: usize, max_index: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, max: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
        if cur.len() == n {
            out.push(Word(cur.clone()));
            return;
        }
        for i in from..=max {
            cur.push(i);
            rec(n, max, i, cur, out);
            cur.pop();
        }
    }
    if max_index > 0 || n == 0 {
        rec(n, max_index, 1, &mut cur, &mut out);
    }
    out
}

/// Largest operator index that a word of length `n` can use nontrivially on
/// `alpha`: each step raises the largest part by at most one.
pub fn index_bound(alpha: &Composition, n: usize) -> usize {
    alpha.max_part() + n
}
