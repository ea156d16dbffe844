use super::convert::{from_ribbon, to_ribbon};
use super::element::{Basis, Element};
use crate::box_ops::{self, apply_word, Word};
use crate::composition::Composition;
use crate::error::{Error, Result};

/// `R_alpha * R_beta = R_(alpha.beta) + R_(alpha⊙beta)`, extended bilinearly.
pub fn mul_ribbon(a: &Element, b: &Element) -> Result<Element> {
    a.expect_basis(Basis::R)?;
    b.expect_basis(Basis::R)?;
    let mut out = Element::zero(Basis::R);
    for (alpha, x) in a.terms() {
        for (beta, y) in b.terms() {
            let c = x * y;
            if let Some(near) = alpha.near_concat(beta) {
                out.add_term(near, c.clone());
            }
            out.add_term(alpha.concat(beta), c);
        }
    }
    Ok(out)
}

fn psi_n(n: usize) -> Element {
    Element::from_terms(
        Basis::R,
        (0..n).map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (Composition::hook(n, k).expect("k < n"), sign)
        }),
    )
}

/// `Psi_alpha = Psi_{alpha_1} ... Psi_{alpha_k}` in the ribbon basis, where
/// `Psi_n` is the alternating sum of the hook ribbons `R_(1^k, n-k)`.
pub fn psi_expand(alpha: &Composition) -> Element {
    alpha.parts().iter().fold(Element::unit(Basis::R), |acc, &n| {
        mul_ribbon(&acc, &psi_n(n)).expect("both factors are ribbons")
    })
}

/// `sum over terms c s_alpha of e, and words w, of +-c s_{w(alpha)}`, the
/// sign being negative where `negative(w)` holds.
pub(crate) fn act_by_words<F>(e: &Element, words: F, negative: impl Fn(&Word) -> bool) -> Result<Element>
where
    F: Fn(&Composition) -> Result<Vec<Word>>,
{
    e.expect_basis(Basis::S)?;
    let mut out = Element::zero(Basis::S);
    for (alpha, c) in e.terms() {
        for w in words(alpha)? {
            if let Some(beta) = apply_word(&w, alpha) {
                out.add_term(beta, if negative(&w) { -c } else { c.clone() });
            }
        }
    }
    Ok(out)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("n must be at least 1"))
    } else {
        Ok(())
    }
}

/// `s_(n) * e`, summing strictly decreasing words.
pub fn mul_row_schur(n: usize, e: &Element) -> Result<Element> {
    check_n(n)?;
    act_by_words(e, |a| Ok(box_ops::strictly_decreasing_words(n, box_ops::index_bound(a, n))), |_| false)
}

/// `s_(1^n) * e`, summing weakly increasing words.
pub fn mul_col_schur(n: usize, e: &Element) -> Result<Element> {
    check_n(n)?;
    act_by_words(e, |a| Ok(box_ops::weakly_increasing_words(n, box_ops::index_bound(a, n))), |_| false)
}

/// `R_(1^k, n-k) * e`, summing reverse `k`-hookwords of length `n`.
pub fn mul_hook_ribbon_schur(n: usize, k: usize, e: &Element) -> Result<Element> {
    check_n(n)?;
    if k >= n {
        return Err(Error::domain(format!("hook index k = {k} must be below n = {n}")));
    }
    act_by_words(e, |a| box_ops::enumerate_rhw(n, k, box_ops::index_bound(a, n)), |_| false)
}

/// The product in any input bases, computed in the ribbon basis and
/// returned in `out`.
pub fn mul(a: &Element, b: &Element, out: Basis) -> Result<Element> {
    let product = mul_ribbon(&to_ribbon(a)?, &to_ribbon(b)?)?;
    from_ribbon(&product, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_of;
    use crate::nsym::convert::{ribbon_to_schur, schur_to_ribbon};

    fn c(p: &[usize]) -> Composition {
        Composition::from_parts(p)
    }

    fn el(basis: Basis, terms: &[(&[usize], i64)]) -> Element {
        Element::from_terms(basis, terms.iter().map(|&(p, k)| (c(p), k)))
    }

    fn s(p: &[usize]) -> Element {
        Element::basis_vector(Basis::S, c(p))
    }

    fn ribbon_route(multiplier: &Element, e: &Element) -> Element {
        let r = mul_ribbon(multiplier, &schur_to_ribbon(e).unwrap()).unwrap();
        ribbon_to_schur(&r).unwrap()
    }

    #[test]
    fn ribbon_products() {
        let a = el(Basis::R, &[(&[2, 1], 1)]);
        let b = el(Basis::R, &[(&[3], 1)]);
        assert_eq!(mul_ribbon(&a, &b).unwrap(), el(Basis::R, &[(&[2, 1, 3], 1), (&[2, 4], 1)]));
        let one = el(Basis::R, &[(&[1], 1)]);
        assert_eq!(mul_ribbon(&one, &one).unwrap(), el(Basis::R, &[(&[1, 1], 1), (&[2], 1)]));
        assert_eq!(mul_ribbon(&Element::unit(Basis::R), &a).unwrap(), a);
        assert_eq!(mul_ribbon(&a, &Element::unit(Basis::R)).unwrap(), a);
        assert!(mul_ribbon(&a, &s(&[1])).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_expand(&c(&[1])), el(Basis::R, &[(&[1], 1)]));
        assert_eq!(psi_expand(&c(&[2])), el(Basis::R, &[(&[2], 1), (&[1, 1], -1)]));
        assert_eq!(
            psi_expand(&c(&[4])),
            el(Basis::R, &[(&[4], 1), (&[1, 3], -1), (&[1, 1, 2], 1), (&[1, 1, 1, 1], -1)])
        );
        assert_eq!(psi_expand(&Composition::empty()), Element::unit(Basis::R));
        let p21 = mul_ribbon(&psi_expand(&c(&[2])), &psi_expand(&c(&[1]))).unwrap();
        assert_eq!(psi_expand(&c(&[2, 1])), p21);
    }

    #[test]
    fn pieri_small() {
        assert_eq!(mul_row_schur(1, &s(&[1])).unwrap(), el(Basis::S, &[(&[1, 1], 1), (&[2], 1)]));
        assert_eq!(mul_col_schur(1, &s(&[1])).unwrap(), el(Basis::S, &[(&[1, 1], 1), (&[2], 1)]));
        assert_eq!(mul_row_schur(2, &s(&[1])).unwrap(), el(Basis::S, &[(&[2, 1], 1), (&[3], 1)]));
        assert!(mul_row_schur(0, &s(&[1])).is_err());
        assert!(mul_hook_ribbon_schur(3, 3, &s(&[1])).is_err());
    }

    #[test]
    fn pieri_matches_ribbon_route() {
        for size in 0..=4 {
            for alpha in compositions_of(size) {
                let e = s(alpha.parts());
                for n in 1..=3 {
                    let row = Element::basis_vector(Basis::R, Composition::row(n));
                    let col = Element::basis_vector(Basis::R, Composition::ones(n));
                    assert_eq!(mul_row_schur(n, &e).unwrap(), ribbon_route(&row, &e));
                    assert_eq!(mul_col_schur(n, &e).unwrap(), ribbon_route(&col, &e));
                    for k in 0..n {
                        let hook = Element::basis_vector(Basis::R, Composition::hook(n, k).unwrap());
                        assert_eq!(mul_hook_ribbon_schur(n, k, &e).unwrap(), ribbon_route(&hook, &e));
                    }
                }
            }
        }
    }

    #[test]
    fn general_product() {
        let sn = s(&[2]);
        let sb = s(&[1, 2]);
        assert_eq!(mul(&sn, &sb, Basis::S).unwrap(), mul_row_schur(2, &sb).unwrap());
        assert_eq!(mul(&Element::unit(Basis::S), &sb, Basis::S).unwrap(), sb);
        assert!(mul(&sn, &sb, Basis::Psi).is_err());
    }
}
