//! Named reference sequences.
//!
//! Names are stable identifiers used by the command-line tool. Two entries
//! are parameterized: `primary:<c>:<N>` and `constant:<c>`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::divisors::radical;
use crate::error::{Error, Result};
use crate::int::PosInt;
use crate::seq::{primary_prefix, PrimarySpec, SeqPrefix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Named {
    Ones,
    Naturals,
    Fibonacci,
    Mersenne,
    Radical,
    Primary(PrimarySpec),
    Constant(PosInt),
    Factorial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Name as accepted by [`emit`]; parameterized entries show their
    /// placeholders.
    pub name: &'static str,
    pub description: &'static str,
    pub expected_morphic: bool,
    /// A concrete instance of the entry.
    pub sample: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "ones", description: "F_n = 1", expected_morphic: true, sample: "ones" },
    CatalogEntry { name: "naturals", description: "F_n = n", expected_morphic: true, sample: "naturals" },
    CatalogEntry {
        name: "fibonacci",
        description: "F_1 = F_2 = 1, F_n = F_(n-1) + F_(n-2)",
        expected_morphic: true,
        sample: "fibonacci",
    },
    CatalogEntry { name: "mersenne", description: "F_n = 2^n - 1", expected_morphic: true, sample: "mersenne" },
    CatalogEntry {
        name: "radical",
        description: "F_n = product of the distinct primes dividing n",
        expected_morphic: true,
        sample: "radical",
    },
    CatalogEntry {
        name: "primary:<c>:<N>",
        description: "F_n = c if N | n, else 1",
        expected_morphic: true,
        sample: "primary:6:3",
    },
    CatalogEntry { name: "constant:<c>", description: "F_n = c", expected_morphic: true, sample: "constant:5" },
    CatalogEntry {
        name: "factorial",
        description: "F_n = n! (encodes, yet is not GCD-morphic)",
        expected_morphic: false,
        sample: "factorial",
    },
];

/// All entries in a fixed order.
pub fn list() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn emit(name: &str, len: usize) -> Result<SeqPrefix> {
    name.parse::<Named>()?.emit(len)
}

impl Named {
    pub fn expected_morphic(&self) -> bool {
        !matches!(self, Named::Factorial)
    }

    pub fn emit(&self, len: usize) -> Result<SeqPrefix> {
        let big = |v: BigUint| PosInt::new(v).expect("catalog terms are positive");
        let terms: Vec<PosInt> = match self {
            Named::Ones => vec![PosInt::one(); len],
            Named::Naturals => (1..=len as u64).map(|n| PosInt::from_u64(n).unwrap()).collect(),
            Named::Fibonacci => {
                let (mut a, mut b) = (BigUint::one(), BigUint::one());
                (0..len)
                    .map(|_| {
                        let next = &a + &b;
                        big(std::mem::replace(&mut a, std::mem::replace(&mut b, next)))
                    })
                    .collect()
            }
            Named::Mersenne => (1..=len).map(|n| big((BigUint::one() << n) - 1u32)).collect(),
            Named::Radical => (1..=len as u64).map(|n| PosInt::from_u64(radical(n)).unwrap()).collect(),
            Named::Primary(spec) => return primary_prefix(spec, len),
            Named::Constant(c) => vec![c.clone(); len],
            Named::Factorial => {
                let mut acc = BigUint::one();
                (1..=len as u64)
                    .map(|n| {
                        acc *= n;
                        big(acc.clone())
                    })
                    .collect()
            }
        };
        SeqPrefix::new(terms)
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let named = match parts.as_slice() {
            ["ones"] => Named::Ones,
            ["naturals"] => Named::Naturals,
            ["fibonacci"] => Named::Fibonacci,
            ["mersenne"] => Named::Mersenne,
            ["radical"] => Named::Radical,
            ["factorial"] => Named::Factorial,
            ["constant", c] => Named::Constant(c.parse().map_err(|_| unknown())?),
            ["primary", c, period] => {
                let value = c.parse().map_err(|_| unknown())?;
                let period = period.parse::<usize>().map_err(|_| unknown())?;
                Named::Primary(PrimarySpec::new(value, period).map_err(|_| unknown())?)
            }
            _ => return Err(unknown()),
        };
        Ok(named)
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Ones => f.write_str("ones"),
            Named::Naturals => f.write_str("naturals"),
            Named::Fibonacci => f.write_str("fibonacci"),
            Named::Mersenne => f.write_str("mersenne"),
            Named::Radical => f.write_str("radical"),
            Named::Primary(spec) => write!(f, "primary:{}:{}", spec.value, spec.period),
            Named::Constant(c) => write!(f, "constant:{c}"),
            Named::Factorial => f.write_str("factorial"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::encode;
    use crate::divisors::is_prime;
    use crate::validator::{check_gcd_morphic, Verdict};
    use std::collections::HashSet;

    fn seq(v: &[u64]) -> SeqPrefix {
        SeqPrefix::from_u64s(v).unwrap()
    }

    #[test]
    fn emit_examples() {
        assert_eq!(emit("naturals", 5).unwrap(), seq(&[1, 2, 3, 4, 5]));
        assert_eq!(emit("fibonacci", 12).unwrap(), seq(&[1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]));
        assert_eq!(emit("radical", 12).unwrap(), seq(&[1, 2, 3, 2, 5, 6, 7, 2, 3, 10, 11, 6]));
        assert_eq!(emit("mersenne", 6).unwrap(), seq(&[1, 3, 7, 15, 31, 63]));
        assert_eq!(emit("factorial", 6).unwrap(), seq(&[1, 2, 6, 24, 120, 720]));
        assert_eq!(emit("ones", 3).unwrap(), seq(&[1, 1, 1]));
        assert_eq!(emit("constant:9", 3).unwrap(), seq(&[9, 9, 9]));
        assert_eq!(emit("primary:3:2", 6).unwrap(), seq(&[1, 3, 1, 3, 1, 3]));
    }

    #[test]
    fn big_terms_are_exact() {
        let fib = emit("fibonacci", 100).unwrap();
        assert_eq!(fib[93].to_string(), "12200160415121876738");
        assert_eq!(fib[100].to_string(), "354224848179261915075");
        let m = emit("mersenne", 128).unwrap();
        assert_eq!(m[128].to_string(), "340282366920938463463374607431768211455");
    }

    #[test]
    fn unknown_names() {
        for name in ["", "fib", "primary:3", "primary:0:2", "primary:3:0", "constant:-1", "constant:", "naturals:1"] {
            assert_eq!(emit(name, 4), Err(Error::UnknownName(name.to_string())), "{name}");
        }
        assert_eq!(emit("naturals", 0), Err(Error::EmptyPrefix));
    }

    #[test]
    fn names_round_trip() {
        for entry in list() {
            let named: Named = entry.sample.parse().unwrap();
            assert_eq!(named.to_string(), entry.sample);
            assert_eq!(named.expected_morphic(), entry.expected_morphic);
        }
    }

    #[test]
    fn listing() {
        let names: HashSet<_> = list().iter().map(|e| e.name).collect();
        assert_eq!(names.len(), list().len());
        assert!(list().iter().any(|e| e.name == "fibonacci" && e.expected_morphic));
        assert!(list().iter().any(|e| e.name == "factorial" && !e.expected_morphic));
    }

    #[test]
    fn flags_match_oracle() {
        for entry in list() {
            let f = emit(entry.sample, 128).unwrap();
            let verdict = check_gcd_morphic(&f);
            assert_eq!(verdict.is_pass(), entry.expected_morphic, "{}", entry.name);
            if let Verdict::Fail(w) = verdict {
                assert_eq!((w.n, w.m), (3, 2));
            }
        }
    }

    #[test]
    fn radical_code_is_primes() {
        let code = encode(&emit("radical", 200).unwrap()).unwrap();
        for (n, c) in code.indexed() {
            let want = if is_prime(n as u64) { n as u64 } else { 1 };
            assert_eq!(c.to_u64(), Some(want), "n = {n}");
        }
    }
}
