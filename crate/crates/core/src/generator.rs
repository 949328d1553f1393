//! Seeded construction of codes that satisfy (C1) by design, plus a
//! corruption step that breaks it.
//!
//! Each round picks an unused prime `q` and a divisibility chain
//! `d_1 | d_2 | … ≤ L`, then multiplies `q^e` into every `c_{d_i}`. A prime
//! whose support is a chain never lands on two incomparable indices, so the
//! result always passes [`crate::validator::check_c1`].

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::divisors::{first_primes, incomparable, is_prime};
use crate::error::{Error, Result};
use crate::int::PosInt;
use crate::seq::CodePrefix;

/// Identifier of the PRNG behind [`generate`] and [`corrupt`]: ChaCha with
/// 8 rounds, seeded through `SeedableRng::seed_from_u64`.
pub const RNG_ALGORITHM: &str = "chacha8";

const GENERATE_STREAM: u64 = 0;
const CORRUPT_STREAM: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub length: usize,
    pub seed: u64,
    pub prime_pool: Vec<u64>,
    pub chains: usize,
    pub max_exponent: u32,
}

impl GenParams {
    /// Pool of the first `primes` primes.
    pub fn with_first_primes(length: usize, seed: u64, primes: usize, chains: usize, max_exponent: u32) -> Self {
        GenParams { length, seed, prime_pool: first_primes(primes), chains, max_exponent }
    }

    pub fn validate(&self) -> Result<()> {
        if self.length == 0 {
            return Err(Error::InvalidParams("length must be at least 1".into()));
        }
        if self.max_exponent == 0 {
            return Err(Error::InvalidParams("max exponent must be at least 1".into()));
        }
        if self.prime_pool.is_empty() {
            return Err(Error::InvalidParams("prime pool is empty".into()));
        }
        if let Some(q) = self.prime_pool.iter().find(|&&q| !is_prime(q)) {
            return Err(Error::InvalidParams(format!("{q} in the prime pool is not prime")));
        }
        let mut sorted = self.prime_pool.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams("prime pool has duplicates".into()));
        }
        if self.chains > self.prime_pool.len() {
            return Err(Error::PoolExhausted { chains: self.chains, pool: self.prime_pool.len() });
        }
        Ok(())
    }
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams::with_first_primes(64, 0, 20, 10, 2)
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn generate(params: &GenParams) -> Result<CodePrefix> {
    params.validate()?;
    let len = params.length;
    let mut rng = rng(params.seed, GENERATE_STREAM);
    let mut codes = vec![PosInt::one(); len];
    for slot in index::sample(&mut rng, params.prime_pool.len(), params.chains) {
        let q = PosInt::from_u64(params.prime_pool[slot])?;
        let mut d = rng.gen_range(1..=len);
        while d <= len {
            let e = rng.gen_range(1..=params.max_exponent);
            codes[d - 1] *= &q.pow(e);
            d *= rng.gen_range(2..=4);
        }
    }
    CodePrefix::new(codes)
}

/// Bound for trial division when looking for a prime already present in a
/// code.
const FACTOR_BOUND: u64 = 1 << 12;

fn small_prime_factor(value: &PosInt) -> Option<u64> {
    if value.is_one() {
        return None;
    }
    if let Some(v) = value.to_u64() {
        let mut d = 2;
        while d <= FACTOR_BOUND && d * d <= v {
            if v % d == 0 {
                return Some(d);
            }
            d += 1;
        }
        // no factor up to sqrt(v) means v is prime
        return (d * d > v).then_some(v);
    }
    (2..=FACTOR_BOUND).find(|&d| is_prime(d) && (value.as_biguint() % d) == 0u64.into())
}

/// Copy of `c` in which some `c_k` (`k ≥ 2`) gains a prime that already
/// divides a code at an index incomparable with `k`. When no such prime is
/// available, 2 is planted at both indices. The result always fails
/// [`crate::validator::check_c1`].
pub fn corrupt(c: &CodePrefix, seed: u64) -> Result<CodePrefix> {
    let len = c.len();
    if len < 3 {
        return Err(Error::PrefixTooShort { len, index: 3 });
    }
    let mut rng = rng(seed, CORRUPT_STREAM);
    let k = rng.gen_range(2..=len);
    // non-empty: k-1 for k ≥ 3, index 3 for k = 2
    let partners: Vec<usize> = (1..=len).filter(|&n| incomparable(n, k)).collect();
    let carriers: Vec<(usize, u64)> =
        partners.iter().filter_map(|&n| small_prime_factor(&c[n]).map(|q| (n, q))).collect();
    let mut codes = c.as_slice().to_vec();
    if carriers.is_empty() {
        let n = partners[rng.gen_range(0..partners.len())];
        let two = PosInt::from_u64(2)?;
        codes[n - 1] *= &two;
        codes[k - 1] *= &two;
    } else {
        let (_, q) = carriers[rng.gen_range(0..carriers.len())];
        codes[k - 1] *= &PosInt::from_u64(q)?;
    }
    CodePrefix::new(codes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::decode;
    use crate::validator::{check_c1, check_gcd_morphic};

    fn params(length: usize, seed: u64) -> GenParams {
        GenParams::with_first_primes(length, seed, 20, 10, 2)
    }

    #[test]
    fn single_term() {
        for seed in 0..20 {
            let c = generate(&params(1, seed)).unwrap();
            assert_eq!(c.len(), 1);
            assert!(check_c1(&c).is_pass());
        }
    }

    #[test]
    fn seed_42_is_valid_and_morphic() {
        let c = generate(&params(64, 42)).unwrap();
        assert_eq!(c.len(), 64);
        assert!(check_c1(&c).is_pass());
        assert!(check_gcd_morphic(&decode(&c)).is_pass());
        assert!(c.as_slice().iter().any(|t| !t.is_one()));
    }

    #[test]
    fn deterministic() {
        let p = params(100, 7);
        assert_eq!(generate(&p).unwrap(), generate(&p).unwrap());
        assert_ne!(generate(&p).unwrap(), generate(&params(100, 8)).unwrap());
        let c = generate(&p).unwrap();
        assert_eq!(corrupt(&c, 3).unwrap(), corrupt(&c, 3).unwrap());
    }

    #[test]
    fn supports_are_chains() {
        for seed in 0..200 {
            let p = params(128, seed);
            let c = generate(&p).unwrap();
            for &q in &p.prime_pool {
                let support: Vec<usize> =
                    c.indexed().filter(|(_, t)| t.as_biguint() % q == 0u64.into()).map(|(n, _)| n).collect();
                for (i, &a) in support.iter().enumerate() {
                    for &b in &support[i + 1..] {
                        assert_eq!(b % a, 0, "seed {seed}: prime {q} on {a} and {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn exponent_cap_respected() {
        let p = GenParams::with_first_primes(128, 5, 20, 20, 1);
        let c = generate(&p).unwrap();
        // every code is squarefree when the cap is 1
        for (_, t) in c.indexed() {
            for &q in &p.prime_pool {
                assert!(t.as_biguint() % (q * q) != 0u64.into());
            }
        }
    }

    #[test]
    fn invalid_params() {
        let mut p = params(10, 0);
        p.chains = 21;
        assert_eq!(generate(&p), Err(Error::PoolExhausted { chains: 21, pool: 20 }));
        let mut p = params(10, 0);
        p.prime_pool = vec![2, 3, 3];
        p.chains = 1;
        assert!(matches!(generate(&p), Err(Error::InvalidParams(_))));
        p.prime_pool = vec![2, 4];
        assert!(matches!(generate(&p), Err(Error::InvalidParams(_))));
        assert!(matches!(generate(&params(0, 0)), Err(Error::InvalidParams(_))));
        let mut p = params(10, 0);
        p.max_exponent = 0;
        assert!(matches!(generate(&p), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn corrupt_all_ones_plants_two() {
        let ones = CodePrefix::ones(6).unwrap();
        for seed in 0..50 {
            let bad = corrupt(&ones, seed).unwrap();
            let w = check_c1(&bad).witness().cloned().expect("corrupted code must fail");
            assert_eq!(w.g.to_u64(), Some(2));
            assert_eq!(bad.as_slice().iter().filter(|t| !t.is_one()).count(), 2);
        }
    }

    #[test]
    fn corrupt_naturals_code() {
        let naturals = CodePrefix::from_u64s(&[1, 2, 3, 2, 5, 1, 7, 2, 3, 1, 11, 1, 13, 1, 1, 2, 17]).unwrap();
        for seed in 0..100 {
            let bad = corrupt(&naturals, seed).unwrap();
            assert!(!check_c1(&bad).is_pass());
            assert!(!check_gcd_morphic(&decode(&bad)).is_pass());
        }
    }

    #[test]
    fn corrupt_needs_three_terms() {
        assert_eq!(corrupt(&CodePrefix::ones(2).unwrap(), 0), Err(Error::PrefixTooShort { len: 2, index: 3 }));
    }

    #[test]
    fn factor_search() {
        let p = |v| PosInt::from_u64(v).unwrap();
        assert_eq!(small_prime_factor(&p(1)), None);
        assert_eq!(small_prime_factor(&p(91)), Some(7));
        assert_eq!(small_prime_factor(&p(97)), Some(97));
        // large prime beyond the trial bound squared
        assert_eq!(small_prime_factor(&p(1_000_000_007)), None);
        let big: PosInt = "340282366920938463463374607431768211456".parse().unwrap(); // 2^128
        assert_eq!(small_prime_factor(&(&big * &p(3))), Some(2));
    }
}
