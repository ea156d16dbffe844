//! Exhaustive and randomized checks of the identities behind the
//! noncommutative Murnaghan-Nakayama rule.
//!
//! Cells `(alpha, n)` are checked in parallel; the report lists checks in a
//! fixed order and, for each failing check, the first failing cell in
//! canonical order (by size of `alpha`, then `alpha`, then `n`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::box_ops::{self, apply_word, apply_word_tracked, Word};
use crate::classical::{chi_project, classical_mn, sort_to_partition};
use crate::composition::{compositions_of, Composition};
use crate::error::Result;
use crate::nsym::{
    h_to_ribbon, mn_connected, mn_primordial, mn_ribbon_route, mn_rule, ribbon_to_h, ribbon_to_schur,
    schur_to_ribbon, Basis, Element,
};
use crate::skew::{classify, enumerate_b, enumerate_outers, skew};
use crate::tableaux::{canonical_strip_filling, word_from_srct};

/// A deliberate corruption used to confirm that the suite catches errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negates every coefficient produced by the cancellation-free rule.
    FlipRuleSign,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_size: usize,
    pub max_n: usize,
    pub seed: u64,
    pub trials: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_size: 6, max_n: 5, seed: 0, trials: 10_000, fault: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_size: usize,
    pub max_n: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:<width$}  {:>7} cases", c.name, c.cases)?;
            if let Some(ce) = &c.counterexample {
                writeln!(f, "      counterexample: {ce}")?;
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict}: {} checks, |alpha| <= {}, n <= {}, seed {}", self.checks.len(), self.max_size, self.max_n, self.seed)
    }
}

const CELL_CHECKS: [&str; 8] = [
    "three-way Murnaghan-Nakayama equality",
    "A = B: connected hookword images are nc border strips",
    "2^|NE| connected hookwords per strip",
    "k_beta coefficient law",
    "height = n - 1 - |E|",
    "chain independence of skew shapes",
    "canonical strip filling is an SRCT of a connected hookword",
    "forgetful map consistency",
];

/// Per check: number of cases and the first failure message.
type Outcome = (usize, Option<String>);

fn outcome(cases: usize, failure: Option<String>) -> Outcome {
    (cases, failure)
}

fn sign(exp: usize) -> BigInt {
    if exp.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn check_cell(alpha: &Composition, n: usize, fault: Option<Fault>) -> Result<Vec<Outcome>> {
    let cell = format!("alpha = {alpha}, n = {n}");
    let mut out = Vec::with_capacity(CELL_CHECKS.len());

    let mut rule = mn_rule(n, alpha)?;
    if fault == Some(Fault::FlipRuleSign) {
        rule = -rule;
    }
    let connected = mn_connected(n, alpha)?;
    let full = mn_primordial(n, alpha)?;
    let ribbon = mn_ribbon_route(n, alpha)?;
    let all_equal = rule == connected && rule == full && rule == ribbon;
    out.push(outcome(
        1,
        (!all_equal).then(|| {
            format!("{cell}: rule {rule} | connected {connected} | full {full} | ribbon {ribbon}")
        }),
    ));

    // connected hookwords grouped by image
    let mut by_image: BTreeMap<Composition, Vec<Word>> = BTreeMap::new();
    for w in box_ops::enumerate_crhw(n, box_ops::index_bound(alpha, n))? {
        if let Some(beta) = apply_word(&w, alpha) {
            by_image.entry(beta).or_default().push(w);
        }
    }
    let strips = enumerate_b(alpha, n)?;
    let a: BTreeSet<&Composition> = by_image.keys().collect();
    let b: BTreeSet<&Composition> = strips.iter().map(|(beta, _)| beta).collect();
    out.push(outcome(
        1,
        (a != b).then(|| {
            let only_a: Vec<String> = a.difference(&b).map(|c| c.to_string()).collect();
            let only_b: Vec<String> = b.difference(&a).map(|c| c.to_string()).collect();
            format!("{cell}: only in A {only_a:?}, only in B {only_b:?}")
        }),
    ));

    let mut count_fail = None;
    let mut law_fail = None;
    let mut height_fail = None;
    let mut filling_fail = None;
    for (beta, shape) in &strips {
        let stats = classify(shape);
        let e = stats.e.as_ref().map_or(0, BTreeSet::len);
        let ne = stats.ne.as_ref().map_or(0, BTreeSet::len);
        let words = by_image.get(beta).map(Vec::as_slice).unwrap_or_default();
        if count_fail.is_none() && words.len() != 1 << ne {
            count_fail = Some(format!("{cell}, beta = {beta}: {} words, |NE| = {ne}", words.len()));
        }
        let k_beta: BigInt = words.iter().map(|w| sign(w.hook_k().unwrap_or(0))).sum();
        let law = if ne >= 1 { BigInt::from(0) } else { sign(n - 1 - e) };
        if law_fail.is_none() && k_beta != law {
            law_fail = Some(format!("{cell}, beta = {beta}: signed sum {k_beta}, expected {law}"));
        }
        if height_fail.is_none() && stats.height.map(|h| h + 1 + e) != Some(n) {
            height_fail = Some(format!("{cell}, beta = {beta}: height {:?}, |E| = {e}", stats.height));
        }
        if filling_fail.is_none() {
            let ok = canonical_strip_filling(shape).ok().filter(|f| f.is_srct()).and_then(|f| word_from_srct(&f).ok()).is_some_and(
                |w| w.len() == n && w.is_connected() && w.hook_k().is_some() && apply_word(&w, alpha).as_ref() == Some(beta),
            );
            if !ok {
                filling_fail = Some(format!("{cell}, beta = {beta}"));
            }
        }
    }
    out.push(outcome(strips.len(), count_fail));
    out.push(outcome(strips.len(), law_fail));
    out.push(outcome(strips.len(), height_fail));

    let outers = enumerate_outers(alpha, n)?;
    let mut chain_fail = None;
    for (beta, shape) in &outers {
        let offset = beta.len() - alpha.len();
        let difference: BTreeSet<(usize, usize)> = beta
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
            .filter(|&(r, c)| !(r > offset && alpha.contains_box(r - offset, c)))
            .collect();
        let searched = skew(beta, alpha).map(|s| s.boxes).ok();
        let tracked_ok = by_image.get(beta).into_iter().flatten().all(|w| {
            apply_word_tracked(w, alpha).is_some_and(|t| t.added_boxes.into_iter().collect::<BTreeSet<_>>() == shape.boxes)
        });
        if chain_fail.is_none() && (shape.boxes != difference || searched.as_ref() != Some(&shape.boxes) || !tracked_ok) {
            chain_fail = Some(format!("{cell}, beta = {beta}"));
        }
    }
    out.push(outcome(outers.len(), chain_fail));
    out.push(outcome(strips.len(), filling_fail));

    let projected = chi_project(&rule)?;
    let classical: BTreeMap<_, _> = classical_mn(n, &sort_to_partition(alpha))?
        .into_iter()
        .map(|(mu, c)| (mu, BigInt::from(c)))
        .collect();
    out.push(outcome(
        1,
        (projected != classical).then(|| format!("{cell}: projected {projected:?} vs classical {classical:?}")),
    ));
    Ok(out)
}

fn random_composition(rng: &mut ChaCha8Rng, max_size: usize) -> Composition {
    let size = rng.random_range(0..=max_size);
    let cuts: std::collections::BTreeSet<usize> = (1..size).filter(|_| rng.random_bool(0.5)).collect();
    Composition::comp_of(&cuts, size).expect("cuts lie inside [1, size-1]")
}

/// `t_i t_j = t_j t_i` on random compositions, `|i - j| >= 2`.
fn far_commutation(rng: &mut ChaCha8Rng, trials: usize, max_size: usize) -> Outcome {
    for _ in 0..trials {
        let alpha = random_composition(rng, max_size);
        let top = alpha.max_part() + 4;
        let i = rng.random_range(1..=top);
        let j = loop {
            let j = rng.random_range(1..=top);
            if i.abs_diff(j) >= 2 {
                break j;
            }
        };
        let ij = apply_word(&Word::from_indices(&[i, j]), &alpha);
        let ji = apply_word(&Word::from_indices(&[j, i]), &alpha);
        if ij != ji {
            return outcome(trials, Some(format!("alpha = {alpha}, i = {i}, j = {j}: {ij:?} vs {ji:?}")));
        }
    }
    outcome(trials, None)
}

/// If `mu` has parts `j` and `j-1`, with `m` parts equal to `j` left of the
/// leftmost `j-1`, then `t_j t_{j+1}^k (mu) = t_{j+1}^k t_j (mu)` for
/// `0 <= k <= m`.
fn consecutive_commutation(rng: &mut ChaCha8Rng, trials: usize) -> Outcome {
    let mut done = 0;
    while done < trials {
        let len = rng.random_range(2..=8);
        let parts: Vec<usize> = (0..len).map(|_| rng.random_range(1..=4)).collect();
        let candidates: Vec<usize> = (2..=4).filter(|j| parts.contains(j) && parts.contains(&(j - 1))).collect();
        if candidates.is_empty() {
            continue;
        }
        done += 1;
        let j = candidates[rng.random_range(0..candidates.len())];
        let first_lower = parts.iter().position(|&p| p == j - 1).expect("j - 1 is a part");
        let m = parts[..first_lower].iter().filter(|&&p| p == j).count();
        let k = rng.random_range(0..=m);
        let mu = Composition::from_parts(&parts);
        let mut left = vec![j];
        left.extend(std::iter::repeat_n(j + 1, k));
        let mut right = vec![j + 1; k];
        right.push(j);
        let l = apply_word(&Word::from_indices(&left), &mu);
        let r = apply_word(&Word::from_indices(&right), &mu);
        if l != r || l.is_none() {
            return outcome(trials, Some(format!("mu = {mu}, j = {j}, k = {k}: {l:?} vs {r:?}")));
        }
    }
    outcome(trials, None)
}

fn round_trips(max_size: usize) -> Result<(Outcome, Outcome)> {
    let mut cases = 0;
    let mut hr = None;
    let mut rs = None;
    for size in 0..=max_size {
        for alpha in compositions_of(size) {
            cases += 1;
            let r = Element::basis_vector(Basis::R, alpha.clone());
            let h = Element::basis_vector(Basis::H, alpha.clone());
            let s = Element::basis_vector(Basis::S, alpha.clone());
            if hr.is_none() && (h_to_ribbon(&ribbon_to_h(&r)?)? != r || ribbon_to_h(&h_to_ribbon(&h)?)? != h) {
                hr = Some(format!("basis vector {alpha}"));
            }
            if rs.is_none() && (schur_to_ribbon(&ribbon_to_schur(&r)?)? != r || ribbon_to_schur(&schur_to_ribbon(&s)?)? != s)
            {
                rs = Some(format!("basis vector {alpha}"));
            }
        }
    }
    Ok(((cases, hr), (cases, rs)))
}

/// Runs the whole suite. Errors from the library itself (rather than
/// identity failures) are propagated.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let cells: Vec<(Composition, usize)> = (0..=config.max_size)
        .flat_map(compositions_of)
        .flat_map(|alpha| (1..=config.max_n).map(move |n| (alpha.clone(), n)))
        .collect();
    let per_cell: Vec<Vec<Outcome>> =
        cells.par_iter().map(|(alpha, n)| check_cell(alpha, *n, config.fault)).collect::<Result<_>>()?;

    let mut checks: Vec<CheckResult> = CELL_CHECKS
        .iter()
        .enumerate()
        .map(|(i, &name)| {
            let cases = per_cell.iter().map(|o| o[i].0).sum();
            let counterexample = per_cell.iter().find_map(|o| o[i].1.clone());
            CheckResult { name, cases, passed: counterexample.is_none(), counterexample }
        })
        .collect();

    let (hr, rs) = round_trips(config.max_size)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let far = far_commutation(&mut rng, config.trials, config.max_size.max(1));
    let near = consecutive_commutation(&mut rng, config.trials);
    for (name, (cases, counterexample)) in [
        ("H <-> R round trip", hr),
        ("R <-> S round trip with integral inverse", rs),
        ("t_i t_j = t_j t_i for |i - j| >= 2", far),
        ("t_j t_{j+1}^k = t_{j+1}^k t_j under the part condition", near),
    ] {
        checks.push(CheckResult { name, cases, passed: counterexample.is_none(), counterexample });
    }
    Ok(VerifyReport { max_size: config.max_size, max_n: config.max_n, seed: config.seed, checks })
}
