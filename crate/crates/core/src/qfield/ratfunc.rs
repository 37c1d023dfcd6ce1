//! Elements of the field `Q(q)`, kept in lowest terms with a monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{PolynomialQ, QFieldError};

/// A reduced ratio of polynomials. Equality is structural because every value
/// is normalized on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunctionQ {
    numer: PolynomialQ,
    denom: PolynomialQ,
}

impl RationalFunctionQ {
    pub fn new(numer: PolynomialQ, denom: PolynomialQ) -> Result<Self, QFieldError> {
        if denom.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(Self::zero());
        }
        let g = numer.gcd(&denom);
        let numer = numer.exact_div(&g).expect("gcd divides");
        let denom = denom.exact_div(&g).expect("gcd divides");
        let lc = denom.leading().expect("nonzero").recip();
        Ok(Self {
            numer: numer.scale(&lc),
            denom: denom.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        Self {
            numer: PolynomialQ::zero(),
            denom: PolynomialQ::one(),
        }
    }

    pub fn one() -> Self {
        PolynomialQ::one().into()
    }

    pub fn from_int(c: i64) -> Self {
        PolynomialQ::from_int(c).into()
    }

    pub fn from_rational(c: BigRational) -> Self {
        PolynomialQ::constant(c).into()
    }

    pub fn numer(&self) -> &PolynomialQ {
        &self.numer
    }

    pub fn denom(&self) -> &PolynomialQ {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    /// The polynomial this value equals, if its denominator is one.
    pub fn as_polynomial(&self) -> Option<&PolynomialQ> {
        self.denom.is_one().then_some(&self.numer)
    }

    pub fn recip(&self) -> Result<Self, QFieldError> {
        Self::new(self.denom.clone(), self.numer.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QFieldError> {
        if rhs.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        Self::new(&self.numer * &rhs.denom, &self.denom * &rhs.numer)
    }

    pub fn pow(&self, exp: usize) -> Self {
        // Powers of a reduced fraction stay reduced.
        Self {
            numer: self.numer.pow(exp),
            denom: self.denom.pow(exp),
        }
    }

    /// Value at a rational point; `None` at a pole.
    pub fn evaluate(&self, at: &BigRational) -> Option<BigRational> {
        let d = self.denom.evaluate(at);
        (!d.is_zero()).then(|| self.numer.evaluate(at) / d)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }
}

impl From<PolynomialQ> for RationalFunctionQ {
    fn from(numer: PolynomialQ) -> Self {
        Self {
            numer,
            denom: PolynomialQ::one(),
        }
    }
}

impl Default for RationalFunctionQ {
    fn default() -> Self {
        Self::zero()
    }
}

fn needs_parens(p: &PolynomialQ) -> bool {
    p.term_count() > 1
        || p.leading()
            .is_some_and(|c| !c.is_one() && p.degree() != Some(0))
}

impl fmt::Display for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            return write!(f, "{}", self.numer);
        }
        // Clear fractions out of the numerator so `1/(2*q)` prints instead of `1/2/q`.
        let scale = self
            .numer
            .coeffs()
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scale = BigRational::from_integer(scale);
        let numer = self.numer.scale(&scale);
        let denom = self.denom.scale(&scale);
        if numer.term_count() > 1 {
            write!(f, "({numer})")?;
        } else {
            write!(f, "{numer}")?;
        }
        if needs_parens(&denom) {
            write!(f, "/({denom})")
        } else {
            write!(f, "/{denom}")
        }
    }
}

impl<'a> Add<&'a RationalFunctionQ> for &'a RationalFunctionQ {
    type Output = RationalFunctionQ;

    fn add(self, rhs: &'a RationalFunctionQ) -> RationalFunctionQ {
        if self.denom == rhs.denom {
            return RationalFunctionQ::new(&self.numer + &rhs.numer, self.denom.clone())
                .expect("nonzero denominator");
        }
        RationalFunctionQ::new(
            &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom),
            &self.denom * &rhs.denom,
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RationalFunctionQ> for &'a RationalFunctionQ {
    type Output = RationalFunctionQ;

    fn sub(self, rhs: &'a RationalFunctionQ) -> RationalFunctionQ {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunctionQ> for &'a RationalFunctionQ {
    type Output = RationalFunctionQ;

    fn mul(self, rhs: &'a RationalFunctionQ) -> RationalFunctionQ {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunctionQ::zero();
        }
        if self.denom.is_one() && rhs.denom.is_one() {
            return (&self.numer * &rhs.numer).into();
        }
        RationalFunctionQ::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
            .expect("nonzero denominator")
    }
}

impl Neg for &RationalFunctionQ {
    type Output = RationalFunctionQ;

    fn neg(self) -> RationalFunctionQ {
        RationalFunctionQ {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Neg for RationalFunctionQ {
    type Output = RationalFunctionQ;

    fn neg(self) -> RationalFunctionQ {
        -&self
    }
}

impl Add for RationalFunctionQ {
    type Output = RationalFunctionQ;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RationalFunctionQ {
    type Output = RationalFunctionQ;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RationalFunctionQ {
    type Output = RationalFunctionQ;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Zero for RationalFunctionQ {
    fn zero() -> Self {
        RationalFunctionQ::zero()
    }

    fn is_zero(&self) -> bool {
        RationalFunctionQ::is_zero(self)
    }
}

impl One for RationalFunctionQ {
    fn one() -> Self {
        RationalFunctionQ::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> PolynomialQ {
        PolynomialQ::from_int_coeffs(c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        let f = RationalFunctionQ::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f, p(&[1, 1]).into());
        assert!(f.as_polynomial().is_some());
    }

    #[test]
    fn denominator_is_monic() {
        let f = RationalFunctionQ::new(p(&[1]), p(&[0, 2])).unwrap();
        assert_eq!(f.denom(), &p(&[0, 1]));
        assert_eq!(f.to_string(), "1/(2*q)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunctionQ::new(p(&[1]), PolynomialQ::zero()),
            Err(QFieldError::DivisionByZero)
        );
        assert!(RationalFunctionQ::one()
            .checked_div(&RationalFunctionQ::zero())
            .is_err());
    }

    #[test]
    fn field_arithmetic() {
        let a = RationalFunctionQ::new(p(&[1]), p(&[-1, 1])).unwrap(); // 1/(q-1)
        let b = RationalFunctionQ::new(p(&[1]), p(&[1, 1])).unwrap(); // 1/(q+1)
        let sum = &a + &b;
        assert_eq!(
            sum,
            RationalFunctionQ::new(p(&[0, 2]), p(&[-1, 0, 1])).unwrap()
        );
        assert_eq!(
            &(&sum * &a.recip().unwrap()) - &RationalFunctionQ::one(),
            b.checked_div(&a).unwrap()
        );
    }
}
