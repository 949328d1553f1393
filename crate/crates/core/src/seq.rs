//! Finite, 1-indexed prefixes of integer sequences and primary sequences.

use std::fmt;
use std::ops::Index;

use crate::divisors::divides;
use crate::error::{Error, Result};
use crate::int::PosInt;

macro_rules! prefix_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name(Vec<PosInt>);

        impl $name {
            pub fn new(terms: Vec<PosInt>) -> Result<Self> {
                if terms.is_empty() {
                    return Err(Error::EmptyPrefix);
                }
                Ok($name(terms))
            }

            pub fn from_u64s(values: &[u64]) -> Result<Self> {
                let terms = values
                    .iter()
                    .map(|&v| PosInt::from_u64(v))
                    .collect::<Result<Vec<_>>>()?;
                $name::new(terms)
            }

            /// Prefix of `len` ones.
            pub fn ones(len: usize) -> Result<Self> {
                $name::new(vec![PosInt::one(); len])
            }

            #[allow(clippy::len_without_is_empty)]
            pub fn len(&self) -> usize {
                self.0.len()
            }

            /// Term at 1-based index `n`, if inside the prefix.
            pub fn get(&self, n: usize) -> Option<&PosInt> {
                n.checked_sub(1).and_then(|i| self.0.get(i))
            }

            pub fn as_slice(&self) -> &[PosInt] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<PosInt> {
                self.0
            }

            /// `(n, term)` pairs with `n` starting at 1.
            pub fn indexed(&self) -> impl Iterator<Item = (usize, &PosInt)> {
                self.0.iter().enumerate().map(|(i, t)| (i + 1, t))
            }

            /// The first `len` terms.
            pub fn truncated(&self, len: usize) -> Result<Self> {
                if len == 0 {
                    return Err(Error::EmptyPrefix);
                }
                if len > self.len() {
                    return Err(Error::PrefixTooShort { len: self.len(), index: len });
                }
                Ok($name(self.0[..len].to_vec()))
            }

            pub(crate) fn from_vec_unchecked(terms: Vec<PosInt>) -> Self {
                debug_assert!(!terms.is_empty());
                $name(terms)
            }
        }

        /// 1-based indexing; panics on 0 or past the end.
        impl Index<usize> for $name {
            type Output = PosInt;

            fn index(&self, n: usize) -> &PosInt {
                match self.get(n) {
                    Some(t) => t,
                    None => panic!("index {n} outside 1..={}", self.len()),
                }
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(concat!(stringify!($name), "("))?;
                for (i, t) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str(")")
            }
        }
    };
}

prefix_type! {
    /// `F_1, …, F_L`: the first `L` terms of a sequence of positive integers.
    SeqPrefix
}

prefix_type! {
    /// `c_1, …, c_L`: the first `L` terms of a code, where the encoded
    /// sequence is `F_n = ∏_{j|n} c_j`.
    CodePrefix
}

/// Parameters of the primary sequence that equals `value` on multiples of
/// `period` and 1 everywhere else.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimarySpec {
    pub value: PosInt,
    pub period: usize,
}

impl PrimarySpec {
    pub fn new(value: PosInt, period: usize) -> Result<Self> {
        if period == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(PrimarySpec { value, period })
    }
}

pub fn primary_term(spec: &PrimarySpec, n: usize) -> PosInt {
    if divides(spec.period, n) {
        spec.value.clone()
    } else {
        PosInt::one()
    }
}

pub fn primary_prefix(spec: &PrimarySpec, len: usize) -> Result<SeqPrefix> {
    SeqPrefix::new((1..=len).map(|n| primary_term(spec, n)).collect())
}

/// Index-wise product of two equal-length prefixes.
pub fn pointwise_product(a: &SeqPrefix, b: &SeqPrefix) -> Result<SeqPrefix> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let terms = a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| x * y).collect();
    Ok(SeqPrefix::from_vec_unchecked(terms))
}
