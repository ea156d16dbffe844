use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::Index;

use nsymkit_core::box_ops::{apply, apply_word, apply_word_tracked, enumerate_crhw, index_bound, Word};
use nsymkit_core::classical::{classical_mn, is_border_strip, partitions_of, Partition};
use nsymkit_core::nsym::{h_to_ribbon, mn_rule, mul, ribbon_to_h, ribbon_to_schur, schur_to_ribbon};
use nsymkit_core::skew::{classify, enumerate_b, enumerate_outers, enumerate_p, SkewShape};
use nsymkit_core::tableaux::{enumerate_srct, srct_from_word, word_from_srct, Filling};
use nsymkit_core::{compositions_of, Basis, Composition, Element};

fn comp(max_len: usize, max_part: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|v| Composition::from_parts(&v))
}

fn word(max_len: usize, max_index: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=max_index, 0..=max_len).prop_map(|v| Word::from_indices(&v))
}

fn element(basis: Basis, max_size: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((0..=max_size, any::<Index>(), -5i64..=5), 0..6).prop_map(move |terms| {
        Element::from_terms(
            basis,
            terms.into_iter().map(|(size, idx, c)| {
                let all = compositions_of(size);
                (all[idx.index(all.len())].clone(), c)
            }),
        )
    })
}

/// A connected hookword of length `n` that acts on `alpha`, with its SRCT.
fn crhw_on(alpha: &Composition, n: usize, pick: Index) -> Option<(Word, Filling)> {
    let acting: Vec<Word> = enumerate_crhw(n, index_bound(alpha, n))
        .unwrap()
        .into_iter()
        .filter(|w| apply_word(w, alpha).is_some())
        .collect();
    if acting.is_empty() {
        return None;
    }
    let w = acting[pick.index(acting.len())].clone();
    let f = srct_from_word(&w, alpha).unwrap();
    Some((w, f))
}

fn column(f: &Filling, j: usize) -> Vec<usize> {
    f.column_entries(j)
}

fn bottom_aligned_difference(outer: &Composition, inner: &Composition) -> BTreeSet<(usize, usize)> {
    let offset = outer.len() - inner.len();
    SkewShape::straight(outer)
        .boxes
        .into_iter()
        .filter(|&(r, c)| !(r > offset && inner.contains_box(r - offset, c)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn set_and_composition_are_inverse(alpha in comp(6, 4)) {
        let n = alpha.size();
        prop_assert_eq!(Composition::comp_of(&alpha.set_of(), n).unwrap(), alpha);
    }

    #[test]
    fn operator_domain(alpha in comp(6, 4), i in 1usize..7) {
        let result = apply(i, &alpha);
        prop_assert_eq!(result.is_some(), i == 1 || alpha.parts().contains(&(i - 1)));
        if let Some(beta) = result {
            prop_assert_eq!(beta.size(), alpha.size() + 1);
        }
    }

    #[test]
    fn distant_operators_commute(alpha in comp(6, 4), i in 1usize..8, j in 1usize..8) {
        prop_assume!(i.abs_diff(j) >= 2);
        prop_assert_eq!(
            apply_word(&Word::from_indices(&[i, j]), &alpha),
            apply_word(&Word::from_indices(&[j, i]), &alpha)
        );
    }

    #[test]
    fn tracked_boxes(alpha in comp(5, 4), w in word(6, 6)) {
        if let Some(t) = apply_word_tracked(&w, &alpha) {
            prop_assert_eq!(Some(t.result.clone()), apply_word(&w, &alpha));
            prop_assert_eq!(t.result.size(), alpha.size() + w.len());
            let applied: Vec<usize> = w.application_order().collect();
            let cols: Vec<usize> = t.added_boxes.iter().map(|b| b.1).collect();
            prop_assert_eq!(cols, applied);
            let boxes: BTreeSet<_> = t.added_boxes.iter().copied().collect();
            prop_assert_eq!(boxes.len(), w.len());
            prop_assert_eq!(boxes, bottom_aligned_difference(&t.result, &alpha));
        }
    }

    #[test]
    fn word_tableau_bijection(alpha in comp(4, 3), w in word(6, 6)) {
        if let Some(f) = srct_from_word(&w, &alpha) {
            prop_assert!(f.is_srct());
            prop_assert_eq!(word_from_srct(&f).unwrap(), w.clone());
            // i is a descent iff letter i+1 is weakly larger than letter i
            let letters = w.indices();
            let des: BTreeSet<usize> = (1..letters.len()).filter(|&i| letters[i] >= letters[i - 1]).collect();
            prop_assert_eq!(
                f.descent_composition().unwrap(),
                Composition::comp_of(&des, letters.len()).unwrap()
            );
        }
    }

    #[test]
    fn connected_hookword_tableaux(alpha in comp(4, 3), n in 1usize..=4, pick in any::<Index>()) {
        let Some((w, f)) = crhw_on(&alpha, n, pick) else { return Ok(()) };
        let support = w.support();
        let top = *support.last().unwrap();
        let leg = w.leg_set().unwrap();
        for &j in &support {
            if j >= 2 {
                let col = column(&f, j);
                prop_assert!(col.windows(2).all(|p| p[0] > p[1]), "column {} of {:?}", j, f.entries);
            }
            if j == top {
                continue;
            }
            let here = column(&f, j);
            let right = column(&f, j + 1);
            let min_right = *right.iter().min().unwrap();
            let max_here = *here.iter().max().unwrap();
            if leg.contains(&j) {
                prop_assert!(right.iter().all(|&r| r < max_here));
                prop_assert!(here.iter().filter(|&&x| x != max_here).all(|&x| x < min_right));
            } else {
                prop_assert!(max_here < min_right);
            }
        }
    }

    #[test]
    fn legs_against_strip_statistics(alpha in comp(4, 3), n in 1usize..=4) {
        let mut by_image: BTreeMap<Composition, Vec<Word>> = BTreeMap::new();
        for w in enumerate_crhw(n, index_bound(&alpha, n)).unwrap() {
            if let Some(beta) = apply_word(&w, &alpha) {
                by_image.entry(beta).or_default().push(w);
            }
        }
        for (beta, shape) in enumerate_b(&alpha, n).unwrap() {
            let st = classify(&shape);
            let (e, se, ne) = (st.e.unwrap(), st.se.unwrap(), st.ne.unwrap());
            prop_assert!(ne.iter().all(|&j| j >= 2));
            for w in &by_image[&beta] {
                let leg = w.leg_set().unwrap();
                prop_assert!(e.is_subset(&leg));
                prop_assert!(se.is_disjoint(&leg));
                for &j in &ne {
                    let mut toggled = leg.clone();
                    if !toggled.remove(&j) {
                        toggled.insert(j);
                    }
                    let w2 = Word::hookword_from_content_and_leg(&w.content(), &toggled).unwrap();
                    prop_assert!(w2.is_connected() && w2.hook_k().is_some());
                    prop_assert_eq!(apply_word(&w2, &alpha), Some(beta.clone()));
                }
            }
        }
    }

    #[test]
    fn interval_support_splits(alpha in comp(4, 3), n in 1usize..=4) {
        for (beta, shape) in enumerate_outers(&alpha, n).unwrap() {
            prop_assert_eq!(&shape.boxes, &bottom_aligned_difference(&beta, &alpha));
            let st = classify(&shape);
            if !st.is_interval {
                prop_assert!(st.e.is_none() && st.height.is_none());
                continue;
            }
            let (e, se, ne) = (st.e.unwrap(), st.se.unwrap(), st.ne.unwrap());
            let top = *st.support.last().unwrap();
            let mut union: Vec<usize> = e.iter().chain(&se).chain(&ne).copied().collect();
            union.push(top);
            let as_set: BTreeSet<usize> = union.iter().copied().collect();
            prop_assert_eq!(union.len(), as_set.len());
            prop_assert_eq!(as_set, st.support);
        }
    }

    #[test]
    fn rule_is_cancellation_free(alpha in comp(4, 3), n in 1usize..=4) {
        let rule = mn_rule(n, &alpha).unwrap();
        let one = BigInt::from(1);
        prop_assert!(rule.terms().values().all(|v| *v == one || *v == -&one));
        let outers: BTreeSet<Composition> = enumerate_p(&alpha, n).unwrap().into_iter().map(|x| x.0).collect();
        prop_assert_eq!(rule.terms().keys().cloned().collect::<BTreeSet<_>>(), outers);
    }

    #[test]
    fn json_round_trip(e in element(Basis::S, 5)) {
        let text = e.to_json().to_string();
        prop_assert_eq!(Element::from_json_str(&text).unwrap(), e);
    }

    #[test]
    fn conversions_invert(r in element(Basis::R, 6), h in element(Basis::H, 6)) {
        prop_assert_eq!(schur_to_ribbon(&ribbon_to_schur(&r).unwrap()).unwrap(), r.clone());
        prop_assert_eq!(h_to_ribbon(&ribbon_to_h(&r).unwrap()).unwrap(), r);
        prop_assert_eq!(ribbon_to_h(&h_to_ribbon(&h).unwrap()).unwrap(), h);
    }

    #[test]
    fn product_laws(
        a in element(Basis::S, 4),
        b in element(Basis::H, 4),
        c in element(Basis::R, 4),
        i in 1usize..=3,
        j in 1usize..=3,
    ) {
        let left = mul(&mul(&a, &b, Basis::R).unwrap(), &c, Basis::S).unwrap();
        let right = mul(&a, &mul(&b, &c, Basis::R).unwrap(), Basis::S).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(mul(&Element::unit(Basis::H), &a, Basis::S).unwrap(), a.clone());
        prop_assert_eq!(mul(&a, &Element::unit(Basis::R), Basis::S).unwrap(), a);
        let x = Element::basis_vector(Basis::S, Composition::row(i));
        let y = Element::basis_vector(Basis::R, Composition::ones(j));
        let p = mul(&x, &y, Basis::H).unwrap();
        prop_assert!(p.degrees().iter().all(|&d| d == i + j));
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// Every bijective filling of every straight shape of size <= 6, filtered by
/// the SRCT predicate, against enumeration through box-adding words.
#[test]
fn tableaux_by_entry_placement() {
    for n in 0..=6 {
        let perms = permutations(n);
        let mut total = 0;
        for alpha in compositions_of(n) {
            let shape = SkewShape::straight(&alpha);
            let cells: Vec<(usize, usize)> = shape.boxes.iter().copied().collect();
            let mut placed: BTreeSet<Filling> = BTreeSet::new();
            for p in &perms {
                let entries = cells.iter().copied().zip(p.iter().copied()).collect();
                let f = Filling::new(shape.clone(), entries).unwrap();
                if f.is_srct() {
                    placed.insert(f);
                }
            }
            let via_words: BTreeSet<Filling> = enumerate_srct(&alpha).into_iter().collect();
            assert_eq!(placed, via_words, "shape {alpha}");
            total += placed.len();
        }
        // involutions of [n]
        assert_eq!(total, [1, 1, 2, 4, 10, 26, 76][n]);
    }
}

#[test]
fn classical_rule_support() {
    for size in 0..=5 {
        for lambda in partitions_of(size) {
            for k in 1..=4 {
                let got = classical_mn(k, &lambda).unwrap();
                assert!(got.values().all(|&v| v == 1 || v == -1));
                let strips: BTreeSet<Partition> = partitions_of(size + k)
                    .into_iter()
                    .filter(|mu| mu.contains(&lambda) && is_border_strip(mu, &lambda).unwrap())
                    .collect();
                assert_eq!(got.keys().cloned().collect::<BTreeSet<_>>(), strips);
            }
        }
    }
}
