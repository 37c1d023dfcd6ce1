//! Text form `2*[B D4] + 1*[B Z4] - 1/2*[B Z3]` and the JSON term list.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{KGpdElement, KGpdError};
use crate::group::resolve_label;

impl fmt::Display for KGpdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            write!(f, "{}*[B {}]", c.abs(), key)?;
        }
        Ok(())
    }
}

fn parse_err(input: &str, reason: impl Into<String>) -> KGpdError {
    KGpdError::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_coeff(input: &str, s: &str) -> Result<BigRational, KGpdError> {
    let s = s.trim().trim_end_matches('*').trim();
    if s.is_empty() {
        return Ok(BigRational::one());
    }
    let bad = || parse_err(input, format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(parse_err(input, "zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parse a signed combination of `[B label]` terms. Coefficients default to 1;
/// labels are anything the group registry resolves, e.g. `Z2 x Z2` or `D2`.
pub fn parse_element(input: &str) -> Result<KGpdElement, KGpdError> {
    let mut rest = input.trim();
    let mut out = KGpdElement::zero();
    if rest == "0" {
        return Ok(out);
    }
    if rest.is_empty() {
        return Err(parse_err(input, "empty input"));
    }
    let mut first = true;
    while !rest.is_empty() {
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix(['-', '−']) {
            negative = true;
            rest = r.trim_start();
        } else if !first {
            return Err(parse_err(input, "expected '+' or '-' between terms"));
        }
        first = false;
        let open = rest
            .find('[')
            .ok_or_else(|| parse_err(input, "expected '[B ...]'"))?;
        let mut c = parse_coeff(input, &rest[..open])?;
        if negative {
            c = -c;
        }
        let close = rest[open..]
            .find(']')
            .map(|i| i + open)
            .ok_or_else(|| parse_err(input, "unclosed '['"))?;
        let inner = rest[open + 1..close].trim();
        let label = inner
            .strip_prefix('B')
            .ok_or_else(|| parse_err(input, format!("expected 'B' in [{inner}]")))?
            .trim();
        let key = resolve_label(label).map_err(|_| KGpdError::UnknownClass(label.to_string()))?;
        out.add_term(key, c);
        rest = rest[close + 1..].trim_start();
    }
    Ok(out)
}

impl FromStr for KGpdElement {
    type Err = KGpdError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_element(s)
    }
}

/// One coefficient of an element in JSON. Integers are decimal strings so
/// large values survive any JSON reader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub label: String,
    pub numerator: String,
    pub denominator: String,
}

impl KGpdElement {
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .map(|(k, c)| JsonTerm {
                label: k.label().to_string(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self, KGpdError> {
        let mut out = KGpdElement::zero();
        for t in terms {
            let key =
                resolve_label(&t.label).map_err(|_| KGpdError::UnknownClass(t.label.clone()))?;
            let s = format!("{}/{}", t.numerator, t.denominator);
            out.add_term(key, parse_coeff(&s, &s)?);
        }
        Ok(out)
    }
}
