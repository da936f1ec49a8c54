//! Polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate_subpartitions, Partition};

/// Dense ascending coefficient vector with no trailing zeros; the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^e`.
    pub fn monomial(e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::one();
        QPolynomial { coeffs }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = QPolynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Adds `c * q^e` in place.
    pub fn add_term(&mut self, e: usize, c: impl Into<BigInt>) {
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, BigInt::zero());
        }
        self.coeffs[e] += c.into();
        self.normalize();
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// `q^d P(1/q)`; fails when `d` is below the degree.
    pub fn reverse_with_offset(&self, d: usize) -> Result<Self> {
        let Some(degree) = self.degree() else {
            return Ok(Self::zero());
        };
        if d < degree {
            return Err(Error::NegativeExponent { degree, offset: d });
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs[d - e] = c.clone();
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    /// Sum of the coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(mut self, rhs: QPolynomial) -> QPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for QPolynomial {
    fn sum<I: Iterator<Item = QPolynomial>>(iter: I) -> Self {
        iter.fold(QPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

// JSON form: dense ascending coefficient array of exact integers.
impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let numbers: Vec<serde_json::Number> = self
            .coeffs
            .iter()
            .map(|c| serde_json::Number::from_str(&c.to_string()).expect("integer literal"))
            .collect();
        numbers.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(deserializer)?;
        let coeffs = numbers
            .iter()
            .map(|n| BigInt::from_str(&n.to_string()).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}

/// Gaussian binomial `(q)_{m+p} / ((q)_m (q)_p)`; zero when either argument
/// is negative.
///
/// Uses `[m,p] = [m-1,p] + q^m [m,p-1]` so everything stays in integer
/// arithmetic.
pub fn qbinomial(m: i64, p: i64) -> QPolynomial {
    if m < 0 || p < 0 {
        return QPolynomial::zero();
    }
    let (m, p) = (m as usize, p as usize);
    // row[j] holds [i, j] for the current i
    let mut row: Vec<QPolynomial> = vec![QPolynomial::one(); p + 1];
    for i in 1..=m {
        let mut next = Vec::with_capacity(p + 1);
        next.push(QPolynomial::one());
        for j in 1..=p {
            let v = &row[j] + &next[j - 1].shift(i);
            next.push(v);
        }
        row = next;
    }
    row.pop().expect("p + 1 entries")
}

/// `sum q^{|lambda|}` over partitions inside an `m`-wide, `p`-tall box,
/// by direct enumeration.
pub fn box_partitions_gf(m: usize, p: usize) -> QPolynomial {
    let bound = Partition::from_parts_unchecked(vec![m; p]);
    let mut out = QPolynomial::zero();
    for size in 0..=m * p {
        let count = enumerate_subpartitions(&bound, size).count();
        if count > 0 {
            out.add_term(size, count);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&poly(&[1, 1]) + &poly(&[0, 1]), poly(&[1, 2]));
        assert_eq!(&poly(&[3, 0, 1]) + &QPolynomial::zero(), poly(&[3, 0, 1]));
        assert_eq!(&poly(&[1, 1]) * &poly(&[1, 1]), poly(&[1, 2, 1]));
        assert_eq!(&poly(&[2, 5]) * &QPolynomial::one(), poly(&[2, 5]));
        assert_eq!(&poly(&[1, -1]) + &poly(&[-1, 1]), QPolynomial::zero());
        let terms = [
            poly(&[0, 0, 1]),
            poly(&[1, 1, 0, 0]),
            poly(&[0, 1, 1]),
            poly(&[0, 0, 2, 3, 1]),
        ];
        assert_eq!(
            terms.into_iter().sum::<QPolynomial>(),
            poly(&[1, 2, 4, 3, 1])
        );
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(2, 1), poly(&[1, 1, 1]));
        assert_eq!(qbinomial(1, 1), poly(&[1, 1]));
        assert_eq!(qbinomial(3, -1), QPolynomial::zero());
        assert_eq!(qbinomial(-2, 3), QPolynomial::zero());
        assert_eq!(qbinomial(5, 0), QPolynomial::one());
        assert_eq!(qbinomial(0, 0), QPolynomial::one());
        assert_eq!(&qbinomial(1, 1) * &qbinomial(1, 1), poly(&[1, 2, 1]));
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(box_partitions_gf(2, 1), poly(&[1, 1, 1]));
        assert_eq!(box_partitions_gf(0, 4), QPolynomial::one());
        assert_eq!(box_partitions_gf(2, 2), poly(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn reversal() {
        assert_eq!(poly(&[1, 1]).reverse_with_offset(1).unwrap(), poly(&[1, 1]));
        assert_eq!(
            poly(&[1, 2]).reverse_with_offset(2).unwrap(),
            poly(&[0, 2, 1])
        );
        assert_eq!(
            poly(&[1, 2, 1]).reverse_with_offset(1),
            Err(Error::NegativeExponent {
                degree: 2,
                offset: 1
            })
        );
        let s = poly(&[1, 2, 4, 3, 1]);
        let back = s
            .reverse_with_offset(4)
            .unwrap()
            .reverse_with_offset(4)
            .unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn evaluation_and_display() {
        assert_eq!(poly(&[1, 2, 4, 3, 1]).evaluate_at_one(), BigInt::from(11));
        assert_eq!(QPolynomial::zero().evaluate_at_one(), BigInt::from(0));
        assert_eq!(poly(&[2, 2, 1]).evaluate_at_one(), BigInt::from(5));
        assert_eq!(
            poly(&[1, 2, 4, 3, 1]).to_string(),
            "1 + 2q + 4q^2 + 3q^3 + q^4"
        );
        assert_eq!(poly(&[0, -1]).to_string(), "-q");
    }

    #[test]
    fn json_round_trip_keeps_big_coefficients() {
        let big: BigInt = BigInt::from(u64::MAX) * BigInt::from(1_000_000u64);
        let p = QPolynomial::from_coeffs(vec![BigInt::one(), big]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, "[1,18446744073709551615000000]");
        let back: QPolynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            serde_json::to_string(&poly(&[1, 2, 4, 3, 1])).unwrap(),
            "[1,2,4,3,1]"
        );
    }
}
