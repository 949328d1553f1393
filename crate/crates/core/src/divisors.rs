//! Divisor machinery on sequence indices.
//!
//! Indices are machine words; prefixes never grow anywhere near the range
//! where trial division up to the square root stops being cheap.

/// All divisors of `n` in ascending order, `1` and `n` included.
///
/// # Panics
///
/// If `n == 0`.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1, "divisors of zero are undefined");
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            low.push(d);
            if d * d != n {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Divisors of `n` strictly below `n`.
pub fn proper_divisors(n: usize) -> Vec<usize> {
    let mut ds = divisors(n);
    ds.pop();
    ds
}

/// `a | b` for positive indices.
#[inline]
pub fn divides(a: usize, b: usize) -> bool {
    b.is_multiple_of(a)
}

/// Neither index divides the other.
#[inline]
pub fn incomparable(a: usize, b: usize) -> bool {
    !divides(a, b) && !divides(b, a)
}

/// Product of the distinct primes dividing `n`; `radical(1) = 1`.
pub fn radical(mut n: u64) -> u64 {
    assert!(n >= 1);
    let mut rad = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            rad *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        rad *= n;
    }
    rad
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `count` primes in ascending order.
pub fn first_primes(count: usize) -> Vec<u64> {
    (2..).filter(|&n| is_prime(n)).take(count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(7), vec![1, 7]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(proper_divisors(12), vec![1, 2, 3, 4, 6]);
        assert!(proper_divisors(1).is_empty());
    }

    #[test]
    fn divisors_match_brute_force() {
        for n in 1..=2000 {
            let brute: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n), brute, "n = {n}");
        }
    }

    #[test]
    fn divisors_pair_up_to_square() {
        for n in 1..=1000 {
            let ds = divisors(n);
            assert!(ds.windows(2).all(|w| w[0] < w[1]));
            for &d in &ds {
                assert!(ds.contains(&(n / d)));
                assert_eq!(d * (n / d), n);
                // closed under the divisor relation
                for e in divisors(d) {
                    assert!(ds.contains(&e));
                }
            }
        }
    }

    #[test]
    fn radical_values() {
        let got: Vec<u64> = (1..=12).map(radical).collect();
        assert_eq!(got, vec![1, 2, 3, 2, 5, 6, 7, 2, 3, 10, 11, 6]);
        assert_eq!(radical(1 << 40), 2);
        assert_eq!(radical(2 * 2 * 3 * 3 * 3 * 97), 2 * 3 * 97);
    }

    #[test]
    fn primes() {
        assert_eq!(first_primes(10), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(first_primes(0).is_empty());
        assert!(incomparable(2, 3));
        assert!(!incomparable(2, 6));
        assert!(!incomparable(4, 4));
    }
}
