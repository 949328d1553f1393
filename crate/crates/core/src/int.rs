use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer that is always at least 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosInt(BigUint);

impl PosInt {
    pub fn new(value: BigUint) -> Result<Self> {
        if value.is_zero() {
            Err(Error::Zero)
        } else {
            Ok(PosInt(value))
        }
    }

    pub fn one() -> Self {
        PosInt(BigUint::one())
    }

    pub fn from_u64(value: u64) -> Result<Self> {
        PosInt::new(BigUint::from(value))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn gcd(&self, other: &PosInt) -> PosInt {
        // Most values met in practice fit a machine word.
        if let (Some(a), Some(b)) = (self.to_u64(), other.to_u64()) {
            return PosInt(BigUint::from(a.gcd(&b)));
        }
        PosInt(self.0.gcd(&other.0))
    }

    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &PosInt) -> Option<PosInt> {
        if divisor.is_one() {
            return Some(self.clone());
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        if r.is_zero() {
            Some(PosInt(q))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &PosInt) -> bool {
        self.is_one() || other.0.is_multiple_of(&self.0)
    }

    pub fn pow(&self, exp: u32) -> PosInt {
        PosInt(self.0.pow(exp))
    }
}

/// Greatest common divisor of two positive integers.
pub fn gcd(a: &PosInt, b: &PosInt) -> PosInt {
    a.gcd(b)
}

impl Mul<&PosInt> for &PosInt {
    type Output = PosInt;

    fn mul(self, rhs: &PosInt) -> PosInt {
        PosInt(&self.0 * &rhs.0)
    }
}

impl Mul for PosInt {
    type Output = PosInt;

    fn mul(self, rhs: PosInt) -> PosInt {
        PosInt(self.0 * rhs.0)
    }
}

impl std::ops::MulAssign<&PosInt> for PosInt {
    fn mul_assign(&mut self, rhs: &PosInt) {
        if !rhs.is_one() {
            self.0 *= &rhs.0;
        }
    }
}

impl TryFrom<u64> for PosInt {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        PosInt::from_u64(value)
    }
}

impl TryFrom<BigUint> for PosInt {
    type Error = Error;

    fn try_from(value: BigUint) -> Result<Self> {
        PosInt::new(value)
    }
}

impl From<PosInt> for BigUint {
    fn from(value: PosInt) -> BigUint {
        value.0
    }
}

/// Parses a plain decimal literal. Signs, whitespace and other radices are
/// rejected.
impl FromStr for PosInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Malformed(s.to_string()));
        }
        let value = BigUint::parse_bytes(s.as_bytes(), 10).ok_or_else(|| Error::Malformed(s.to_string()))?;
        PosInt::new(value)
    }
}

impl fmt::Display for PosInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for PosInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}
