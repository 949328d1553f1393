//! The correspondence between sequences and their codes.
//!
//! Every prefix `F` factors uniquely as `F_n = ∏_{j|n} c_j` over rationals;
//! [`encode`] recovers `c` when all the divisions are exact and [`decode`]
//! rebuilds `F` from any code. A successful encode does **not** certify
//! that `F` is GCD-morphic: the code must also satisfy the coprimality
//! condition checked by [`crate::validator::check_c1`]. Use
//! [`crate::validator::certify`] for the full decision.

use std::fmt;

use crate::divisors::divides;
use crate::error::{Error, Result};
use crate::int::PosInt;
use crate::seq::{CodePrefix, PrimarySpec, SeqPrefix};

/// The first index at which `F_n / ∏_{k|n,k<n} c_k` is not an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeFailure {
    pub index: usize,
    pub numerator: PosInt,
    pub denominator: PosInt,
}

impl fmt::Display for EncodeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "term {} = {} is not divisible by the product of earlier divisor codes {}",
            self.index, self.numerator, self.denominator
        )
    }
}

impl std::error::Error for EncodeFailure {}

/// Computes `c_n = F_n / ∏_{k|n,k<n} c_k` for `n = 1, 2, …` and stops at
/// the first inexact division.
pub fn encode(f: &SeqPrefix) -> Result<CodePrefix, EncodeFailure> {
    let len = f.len();
    // denominators[n-1] accumulates the codes of the proper divisors of n;
    // all of them are final by the time n is reached.
    let mut denominators = vec![PosInt::one(); len];
    let mut codes = Vec::with_capacity(len);
    for (n, term) in f.indexed() {
        let denominator = &denominators[n - 1];
        let code = term.div_exact(denominator).ok_or_else(|| EncodeFailure {
            index: n,
            numerator: term.clone(),
            denominator: denominator.clone(),
        })?;
        if !code.is_one() {
            for m in (2 * n..=len).step_by(n) {
                denominators[m - 1] *= &code;
            }
        }
        codes.push(code);
    }
    Ok(CodePrefix::from_vec_unchecked(codes))
}

/// `F_n = ∏_{j|n} c_j`, i.e. the pointwise product of the primary
/// sequences `G_{c_j, j}` restricted to the prefix.
pub fn decode(c: &CodePrefix) -> SeqPrefix {
    let len = c.len();
    let mut terms = vec![PosInt::one(); len];
    for (j, code) in c.indexed() {
        if code.is_one() {
            continue;
        }
        for m in (j..=len).step_by(j) {
            terms[m - 1] *= code;
        }
    }
    SeqPrefix::from_vec_unchecked(terms)
}

/// Splits off the primary factor at index `n` from a prefix whose terms
/// before `n` are all 1.
///
/// Returns `(F_n, n)` and the remainder `R` with `R_k = 1` for `k ≤ n`,
/// `R_k = F_k / F_n` for `n | k` and `R_k = F_k` otherwise, so that
/// `F = G_{F_n, n} · R` termwise. Applying this at `n = 1, 2, …, L` in
/// turn yields the code of `F` one term at a time.
pub fn peel_primary(f: &SeqPrefix, n: usize) -> Result<(PrimarySpec, SeqPrefix)> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    if n > f.len() {
        return Err(Error::PrefixTooShort { len: f.len(), index: n });
    }
    if let Some((k, _)) = f.indexed().take(n - 1).find(|(_, t)| !t.is_one()) {
        return Err(Error::HypothesisViolated { index: k });
    }
    let head = f[n].clone();
    let mut rest = Vec::with_capacity(f.len());
    for (k, term) in f.indexed() {
        let value = if k <= n {
            PosInt::one()
        } else if divides(n, k) {
            term.div_exact(&head).ok_or(Error::NotDivisible { index: k })?
        } else {
            term.clone()
        };
        rest.push(value);
    }
    Ok((PrimarySpec { value: head, period: n }, SeqPrefix::from_vec_unchecked(rest)))
}
