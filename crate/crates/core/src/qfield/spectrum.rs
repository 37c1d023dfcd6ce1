//! Recognition of the eigenvalue families `n·q^u·∏(q^{r_i} − 1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{PolynomialQ, QFieldError};

/// Which eigenvalue family to test membership in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumFamily {
    /// `n·q^u·∏(q^{r_i} − 1)`.
    Full,
    /// `n·∏(q^{r_i} − 1)`.
    Semisimple,
    /// `q^u`.
    Unipotent,
}

impl FromStr for SpectrumFamily {
    type Err = QFieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(Self::Full),
            "semisimple" | "ss" => Ok(Self::Semisimple),
            "unipotent" | "u" => Ok(Self::Unipotent),
            other => Err(QFieldError::Parse {
                input: other.into(),
                reason: "family must be one of full, semisimple, unipotent".into(),
            }),
        }
    }
}

impl fmt::Display for SpectrumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Full => "full",
            Self::Semisimple => "semisimple",
            Self::Unipotent => "unipotent",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDecomposition {
    /// Positive integer content.
    #[serde(with = "bigint_string")]
    pub n: BigInt,
    pub u: usize,
    /// Exponents `r_i`, sorted descending.
    pub r_list: Vec<usize>,
}

impl SpectrumDecomposition {
    pub fn reconstruct(&self) -> PolynomialQ {
        let base = PolynomialQ::monomial(BigRational::from_integer(self.n.clone()), self.u);
        self.r_list
            .iter()
            .fold(base, |acc, &r| &acc * &PolynomialQ::q_pow_minus_one(r))
    }

    /// Factored form such as `2*q^2*(q^2 - 1)*(q - 1)^2`.
    pub fn factored(&self) -> String {
        let mut parts = Vec::new();
        if !self.n.is_one() {
            parts.push(self.n.to_string());
        }
        match self.u {
            0 => {}
            1 => parts.push("q".into()),
            u => parts.push(format!("q^{u}")),
        }
        let mut i = 0;
        while i < self.r_list.len() {
            let r = self.r_list[i];
            let k = self.r_list[i..].iter().take_while(|&&x| x == r).count();
            let base = if r == 1 {
                "(q - 1)".to_string()
            } else {
                format!("(q^{r} - 1)")
            };
            parts.push(if k == 1 { base } else { format!("{base}^{k}") });
            i += k;
        }
        match parts.as_slice() {
            [] => "1".into(),
            [only] => only
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .unwrap_or(only)
                .to_string(),
            _ => parts.join("*"),
        }
    }
}

impl fmt::Display for SpectrumDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rs: Vec<String> = self.r_list.iter().map(ToString::to_string).collect();
        write!(f, "n={}, u={}, r={{{}}}", self.n, self.u, rs.join(","))
    }
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Decompose `p` as a member of `family`, or return `None` when it is not one.
///
/// Strips `q^u`, takes the positive integer content, then divides out
/// `q^r − 1` greedily from the largest admissible `r` downward. The greedy
/// order is sound because `Φ_d | q^r − 1` exactly when `d | r`, so the largest
/// remaining exponent is always forced.
pub fn spectrum_decompose(
    p: &PolynomialQ,
    family: SpectrumFamily,
) -> Result<Option<SpectrumDecomposition>, QFieldError> {
    let u = p.q_valuation().ok_or(QFieldError::ZeroPolynomial)?;
    if !p.is_integral() {
        return Err(QFieldError::NonIntegral(p.to_string()));
    }
    let mut rest = p.shift_down(u);
    if rest.leading().expect("nonzero").is_negative() {
        return Ok(None);
    }
    let n = rest.integer_content().expect("integral and nonzero");
    rest = rest.scale(&BigRational::from_integer(n.clone()).recip());

    let mut r_list = Vec::new();
    let mut r = rest.degree().expect("nonzero");
    while r >= 1 {
        match rest.exact_div(&PolynomialQ::q_pow_minus_one(r)) {
            Some(quot) => {
                r_list.push(r);
                rest = quot;
                r = r.min(rest.degree().expect("nonzero"));
            }
            None => r -= 1,
        }
    }
    if !rest.is_one() {
        return Ok(None);
    }
    let dec = SpectrumDecomposition { n, u, r_list };
    let accepted = match family {
        SpectrumFamily::Full => true,
        SpectrumFamily::Semisimple => dec.u == 0,
        SpectrumFamily::Unipotent => dec.n.is_one() && dec.r_list.is_empty(),
    };
    Ok(accepted.then_some(dec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::parse_polynomial;

    fn dec(src: &str, family: SpectrumFamily) -> Option<SpectrumDecomposition> {
        spectrum_decompose(&parse_polynomial(src).unwrap(), family).unwrap()
    }

    #[test]
    fn factored_forms() {
        let cases = [
            ("2*q - 2", "2*(q - 1)"),
            ("q^3 - q^2", "q^2*(q - 1)"),
            ("q^2 - 2*q + 1", "(q - 1)^2"),
            ("q^3 - q^2 - q + 1", "(q^2 - 1)*(q - 1)"),
            ("1", "1"),
            ("q", "q"),
            ("q - 1", "q - 1"),
            ("q^3 - 1", "q^3 - 1"),
        ];
        for (p, want) in cases {
            let p = parse_polynomial(p).unwrap();
            let d = spectrum_decompose(&p, SpectrumFamily::Full)
                .unwrap()
                .unwrap();
            assert_eq!(d.factored(), want);
            assert_eq!(parse_polynomial(want).unwrap(), p);
        }
    }

    #[test]
    fn non_monic_eigenvalue() {
        let d = dec("2(q-1)", SpectrumFamily::Full).unwrap();
        assert_eq!((d.n, d.u, d.r_list), (BigInt::from(2), 0, vec![1]));
    }

    #[test]
    fn q_power_factor() {
        let d = dec("q^2(q-1)", SpectrumFamily::Full).unwrap();
        assert_eq!((d.n, d.u, d.r_list), (BigInt::from(1), 2, vec![1]));
    }

    #[test]
    fn semisimple_rejects_q_factor() {
        assert_eq!(dec("q(q-1)", SpectrumFamily::Semisimple), None);
        assert!(dec("(q^2-1)(q-1)", SpectrumFamily::Semisimple).is_some());
    }

    #[test]
    fn unipotent_is_monomials() {
        assert_eq!(dec("q^3", SpectrumFamily::Unipotent).unwrap().u, 3);
        assert_eq!(dec("1", SpectrumFamily::Unipotent).unwrap().u, 0);
        assert_eq!(dec("2q", SpectrumFamily::Unipotent), None);
        assert_eq!(dec("q-1", SpectrumFamily::Unipotent), None);
    }

    #[test]
    fn non_members() {
        for src in ["q+1", "2q-1", "(q-1)(q+2)", "q^2+q+1", "-(q-1)", "1-q"] {
            assert_eq!(dec(src, SpectrumFamily::Full), None, "{src}");
        }
    }

    #[test]
    fn invalid_inputs() {
        assert_eq!(
            spectrum_decompose(&PolynomialQ::zero(), SpectrumFamily::Full),
            Err(QFieldError::ZeroPolynomial)
        );
        assert!(
            spectrum_decompose(&parse_polynomial("q/2").unwrap(), SpectrumFamily::Full).is_err()
        );
    }
}
