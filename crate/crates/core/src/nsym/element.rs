use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Number, Value};

use crate::composition::Composition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    H,
    R,
    S,
    #[serde(rename = "PSI")]
    Psi,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::H => "h",
            Basis::R => "R",
            Basis::S => "s",
            Basis::Psi => "Psi",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::H => "H",
            Basis::R => "R",
            Basis::S => "S",
            Basis::Psi => "PSI",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "H" => Ok(Basis::H),
            "R" => Ok(Basis::R),
            "S" => Ok(Basis::S),
            "PSI" => Ok(Basis::Psi),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// A finite integer combination of basis elements indexed by compositions.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    basis: Basis,
    terms: BTreeMap<Composition, BigInt>,
}

impl Element {
    pub fn zero(basis: Basis) -> Self {
        Element { basis, terms: BTreeMap::new() }
    }

    /// The multiplicative identity, indexed by the empty composition.
    pub fn unit(basis: Basis) -> Self {
        Self::basis_vector(basis, Composition::empty())
    }

    pub fn basis_vector(basis: Basis, alpha: Composition) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(alpha, BigInt::one());
        e
    }

    /// Sums repeated compositions and drops zeros.
    pub fn from_terms<I, C>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        let mut e = Self::zero(basis);
        for (alpha, c) in terms {
            e.add_term(alpha, c.into());
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Composition, BigInt> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Composition, BigInt> {
        self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> BigInt {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    /// `self += c * other`; the bases must agree.
    pub fn add_scaled(&mut self, other: &Element, c: &BigInt) -> Result<()> {
        self.expect_same_basis(other)?;
        for (alpha, d) in &other.terms {
            self.add_term(alpha.clone(), c * d);
        }
        Ok(())
    }

    pub fn scaled(&self, c: &BigInt) -> Element {
        let mut out = Element::zero(self.basis);
        for (alpha, d) in &self.terms {
            out.add_term(alpha.clone(), c * d);
        }
        out
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one())?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one())?;
        Ok(out)
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Composition::size).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Composition::size).max().unwrap_or(0)
    }

    pub(crate) fn expect_basis(&self, expected: Basis) -> Result<()> {
        if self.basis == expected {
            Ok(())
        } else {
            Err(Error::Basis { expected: expected.to_string(), found: self.basis })
        }
    }

    fn expect_same_basis(&self, other: &Element) -> Result<()> {
        other.expect_basis(self.basis)
    }

    /// `{"basis":"S","terms":[{"comp":[2,1],"coeff":-1},..]}` in canonical
    /// composition order. Coefficients are exact JSON integers of any size.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(alpha, c)| {
                let n = Number::from_str(&c.to_string()).expect("integers are valid JSON numbers");
                json!({ "comp": alpha.parts(), "coeff": Value::Number(n) })
            })
            .collect();
        json!({ "basis": self.basis.to_string(), "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("element must be a JSON object".into()))?;
        let basis = obj
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing string field \"basis\"".into()))?
            .parse::<Basis>()?;
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"terms\"".into()))?;
        let mut e = Element::zero(basis);
        for t in terms {
            let comp: Composition = serde_json::from_value(
                t.get("comp").cloned().ok_or_else(|| Error::Parse("term without \"comp\"".into()))?,
            )
            .map_err(|err| Error::Parse(format!("bad composition: {err}")))?;
            let coeff = match t.get("coeff") {
                Some(Value::Number(n)) => n.to_string(),
                Some(Value::String(s)) => s.clone(),
                _ => return Err(Error::Parse("term without integer \"coeff\"".into())),
            };
            let coeff = BigInt::from_str(&coeff)
                .map_err(|_| Error::Parse(format!("coefficient {coeff} is not an integer")))?;
            e.add_term(comp, coeff);
        }
        Ok(e)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }
}

impl fmt::Display for Element {
    /// `-s_(1,2) + 2 s_(3)`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (alpha, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let sign = match (i, negative) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let mag = c.magnitude();
            let coeff = if mag.is_one() { String::new() } else { format!("{mag} ") };
            write!(f, "{sign}{coeff}{}_{alpha}", self.basis.symbol())?;
        }
        Ok(())
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scaled(&-BigInt::one())
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

/// Panics when the bases differ; use [`Element::checked_add`] otherwise.
impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("adding elements of different bases")
    }
}

/// Panics when the bases differ; use [`Element::checked_sub`] otherwise.
impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("subtracting elements of different bases")
    }
}
