//! Four independent evaluations of `Psi_n * s_alpha` in the S basis.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::convert::{ribbon_to_schur, schur_to_ribbon};
use super::element::{Basis, Element};
use super::product::{act_by_words, mul_ribbon, psi_expand};
use crate::box_ops::{self, Word};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::skew::{classify, enumerate_p};

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("Psi_n needs n >= 1"))
    } else {
        Ok(())
    }
}

fn odd_asc(w: &Word) -> bool {
    w.hook_k().expect("enumerated words are hookwords") % 2 == 1
}

/// Signed sum over all reverse hookwords of length `n`, sign `(-1)^asc`.
pub fn mn_primordial(n: usize, alpha: &Composition) -> Result<Element> {
    check_n(n)?;
    let s = Element::basis_vector(Basis::S, alpha.clone());
    act_by_words(&s, |a| box_ops::enumerate_all_rhw(n, box_ops::index_bound(a, n)), odd_asc)
}

/// As [`mn_primordial`], restricted to connected hookwords.
pub fn mn_connected(n: usize, alpha: &Composition) -> Result<Element> {
    check_n(n)?;
    let s = Element::basis_vector(Basis::S, alpha.clone());
    act_by_words(&s, |a| box_ops::enumerate_crhw(n, box_ops::index_bound(a, n)), odd_asc)
}

/// Cancellation-free form: one term `(-1)^ht s_beta` per nc border strip
/// `beta // alpha` of size `n` with no north-east column pair.
pub fn mn_rule(n: usize, alpha: &Composition) -> Result<Element> {
    check_n(n)?;
    let mut out = Element::zero(Basis::S);
    for (beta, shape) in enumerate_p(alpha, n)? {
        let ht = classify(&shape).height.expect("members of P are nc border strips");
        out.add_term(beta, if ht.is_multiple_of(2) { 1.into() } else { (-1).into() });
    }
    Ok(out)
}

/// `Psi_n` expanded in ribbons, multiplied on the left of `s_alpha` in the
/// ribbon basis, and converted back.
pub fn mn_ribbon_route(n: usize, alpha: &Composition) -> Result<Element> {
    check_n(n)?;
    let s = Element::basis_vector(Basis::S, alpha.clone());
    let product = mul_ribbon(&psi_expand(&Composition::row(n)), &schur_to_ribbon(&s)?)?;
    ribbon_to_schur(&product)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MnMethod {
    Rule,
    Connected,
    Full,
    Ribbon,
}

impl MnMethod {
    pub const ALL: [MnMethod; 4] = [MnMethod::Rule, MnMethod::Connected, MnMethod::Full, MnMethod::Ribbon];
}

impl fmt::Display for MnMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MnMethod::Rule => "rule",
            MnMethod::Connected => "connected",
            MnMethod::Full => "full",
            MnMethod::Ribbon => "ribbon",
        })
    }
}

impl FromStr for MnMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MnMethod::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

pub fn mn(method: MnMethod, n: usize, alpha: &Composition) -> Result<Element> {
    match method {
        MnMethod::Rule => mn_rule(n, alpha),
        MnMethod::Connected => mn_connected(n, alpha),
        MnMethod::Full => mn_primordial(n, alpha),
        MnMethod::Ribbon => mn_ribbon_route(n, alpha),
    }
}
