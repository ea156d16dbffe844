use num_bigint::BigInt;

use super::cache::{d_matrix_cached, schur_to_ribbon_matrix};
use super::element::{Basis, Element};
use super::product::psi_expand;
use crate::error::{Error, Result};

/// `R_beta = sum over coarsenings alpha of (-1)^(l(beta) - l(alpha)) h_alpha`.
pub fn ribbon_to_h(e: &Element) -> Result<Element> {
    e.expect_basis(Basis::R)?;
    let mut out = Element::zero(Basis::H);
    for (beta, c) in e.terms() {
        for alpha in beta.coarsenings() {
            let sign = if (beta.len() - alpha.len()) % 2 == 0 { c.clone() } else { -c };
            out.add_term(alpha, sign);
        }
    }
    Ok(out)
}

/// `h_beta = sum over coarsenings alpha of R_alpha`.
pub fn h_to_ribbon(e: &Element) -> Result<Element> {
    e.expect_basis(Basis::H)?;
    let mut out = Element::zero(Basis::R);
    for (beta, c) in e.terms() {
        for alpha in beta.coarsenings() {
            out.add_term(alpha, c.clone());
        }
    }
    Ok(out)
}

/// `R_beta = sum_alpha d_{alpha,beta} s_alpha`.
pub fn ribbon_to_schur(e: &Element) -> Result<Element> {
    e.expect_basis(Basis::R)?;
    let mut out = Element::zero(Basis::S);
    for (beta, c) in e.terms() {
        let d = d_matrix_cached(beta.size());
        for (alpha, count) in d.column(beta) {
            out.add_term(alpha, c * BigInt::from(count));
        }
    }
    Ok(out)
}

/// Inverse of [`ribbon_to_schur`], through the cached inverse d-matrix.
pub fn schur_to_ribbon(e: &Element) -> Result<Element> {
    e.expect_basis(Basis::S)?;
    let mut out = Element::zero(Basis::R);
    for (alpha, c) in e.terms() {
        let inv = schur_to_ribbon_matrix(alpha.size())?;
        let a = inv
            .compositions
            .binary_search(alpha)
            .map_err(|_| Error::Internal(format!("{alpha} missing from its degree")))?;
        for (&b, v) in &inv.columns[a] {
            out.add_term(inv.compositions[b].clone(), c * v);
        }
    }
    Ok(out)
}

/// Rewrites any element in the ribbon basis.
pub fn to_ribbon(e: &Element) -> Result<Element> {
    match e.basis() {
        Basis::R => Ok(e.clone()),
        Basis::H => h_to_ribbon(e),
        Basis::S => schur_to_ribbon(e),
        Basis::Psi => {
            let mut out = Element::zero(Basis::R);
            for (alpha, c) in e.terms() {
                out.add_scaled(&psi_expand(alpha), c)?;
            }
            Ok(out)
        }
    }
}

/// Rewrites a ribbon-basis element in `target`, which may not be PSI.
pub fn from_ribbon(e: &Element, target: Basis) -> Result<Element> {
    e.expect_basis(Basis::R)?;
    match target {
        Basis::R => Ok(e.clone()),
        Basis::H => ribbon_to_h(e),
        Basis::S => ribbon_to_schur(e),
        Basis::Psi => Err(Error::Basis { expected: "H, R or S as output".into(), found: Basis::Psi }),
    }
}

pub fn convert(e: &Element, target: Basis) -> Result<Element> {
    if e.basis() == target && target != Basis::Psi {
        return Ok(e.clone());
    }
    from_ribbon(&to_ribbon(e)?, target)
}
