//! Two independent decisions of GCD-morphicity.
//!
//! [`check_gcd_morphic`] tests `gcd(F_n, F_m) = F_gcd(n,m)` on every pair of
//! the prefix and uses no encoding machinery. [`check_c1`] tests pairwise
//! coprimality of codes at incomparable indices. The two agree on every
//! prefix; [`certify`] runs both and records whether they did.
//!
//! Witnesses are the lexicographically smallest failing pair, scanning the
//! larger index first in ascending order, then the smaller one.

use num_integer::Integer;

use crate::codec::{encode, EncodeFailure};
use crate::divisors::divides;
use crate::int::PosInt;
use crate::seq::{CodePrefix, SeqPrefix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Pass,
    Fail(W),
}

impl<W> Verdict<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }
}

impl<W> From<Option<W>> for Verdict<W> {
    fn from(w: Option<W>) -> Self {
        w.map_or(Verdict::Pass, Verdict::Fail)
    }
}

/// Codes `c_n`, `c_k` with `k < n`, `k ∤ n` sharing the factor `g > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C1Witness {
    pub n: usize,
    pub k: usize,
    pub g: PosInt,
}

/// A pair `m ≤ n` with `gcd(F_n, F_m) = got ≠ expected = F_gcd(n,m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphicWitness {
    pub n: usize,
    pub m: usize,
    pub got: PosInt,
    pub expected: PosInt,
}

pub fn check_c1(c: &CodePrefix) -> Verdict<C1Witness> {
    let codes = c.as_slice();
    let witness = (2..=codes.len()).find_map(|n| {
        let cn = &codes[n - 1];
        if cn.is_one() {
            return None;
        }
        (1..n).filter(|&k| !divides(k, n)).find_map(|k| {
            let ck = &codes[k - 1];
            if ck.is_one() {
                return None;
            }
            let g = cn.gcd(ck);
            (!g.is_one()).then_some(C1Witness { n, k, g })
        })
    });
    witness.into()
}

/// Every `(n, m)` with `1 ≤ m ≤ n ≤ len`, in witness order.
pub(crate) fn morphic_pairs(len: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=len).flat_map(|n| (1..=n).map(move |m| (n, m)))
}

pub fn check_gcd_morphic(f: &SeqPrefix) -> Verdict<MorphicWitness> {
    let witness = morphic_pairs(f.len()).find_map(|(n, m)| {
        let expected = &f[n.gcd(&m)];
        let got = f[n].gcd(&f[m]);
        (&got != expected).then(|| MorphicWitness { n, m, got, expected: expected.clone() })
    });
    witness.into()
}

/// Outcome of running both decision procedures on one prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub encoding: Result<CodePrefix, EncodeFailure>,
    /// `None` when encoding failed.
    pub c1: Option<Verdict<C1Witness>>,
    pub morphic: Verdict<MorphicWitness>,
    /// `(encode succeeded ∧ c1 passed) ⇔ morphic passed`. A `false` here is
    /// an implementation bug, never a property of the input.
    pub consistent: bool,
}

impl Certificate {
    pub fn is_gcd_morphic(&self) -> bool {
        self.consistent && self.morphic.is_pass()
    }
}

pub fn certify(f: &SeqPrefix) -> Certificate {
    let encoding = encode(f);
    let c1 = encoding.as_ref().ok().map(check_c1);
    let morphic = check_gcd_morphic(f);
    let code_valid = matches!(c1, Some(Verdict::Pass));
    Certificate { consistent: code_valid == morphic.is_pass(), encoding, c1, morphic }
}
