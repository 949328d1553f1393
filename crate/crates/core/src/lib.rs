//! GCD-morphic sequences: sequences with `gcd(F_n, F_m) = F_gcd(n,m)`.
//!
//! Every such sequence is a pointwise product of primary sequences
//! `G_{c,N}` (equal to `c` on multiples of `N`, 1 elsewhere), so it is
//! determined by its code `c_1, c_2, …` via `F_n = ∏_{j|n} c_j`. A code
//! yields a GCD-morphic sequence exactly when codes at indices that do not
//! divide one another are coprime.
//!
//! - [`codec`]: [`encode`], [`decode`] and the one-step [`peel_primary`].
//! - [`validator`]: [`check_c1`] on codes, the brute-force
//!   [`check_gcd_morphic`] on values, and [`certify`] combining both.
//! - [`generator`]: seeded valid codes and their deliberate corruption.
//! - [`catalog`]: named reference sequences.
//!
//! Encoding alone is not a certificate: `n!` encodes to
//! `(1, 2, 6, 12, 120, 60, …)` but is not GCD-morphic.

pub mod catalog;
pub mod codec;
pub mod divisors;
pub mod error;
pub mod generator;
pub mod int;
pub mod seq;
pub mod validator;

pub use codec::{decode, encode, peel_primary, EncodeFailure};
pub use divisors::divisors;
pub use error::{Error, Result};
pub use generator::{corrupt, generate, GenParams, RNG_ALGORITHM};
pub use int::{gcd, PosInt};
pub use seq::{pointwise_product, primary_prefix, primary_term, CodePrefix, PrimarySpec, SeqPrefix};
pub use validator::{certify, check_c1, check_gcd_morphic, C1Witness, Certificate, MorphicWitness, Verdict};
