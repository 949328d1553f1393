//! Shared inputs for the criterion benches.

use gcdmorph::catalog;
use gcdmorph::{decode, generate, CodePrefix, GenParams, SeqPrefix};

pub const LENGTHS: &[usize] = &[128, 512, 2048];

pub fn generated_code(len: usize) -> CodePrefix {
    generate(&GenParams::with_first_primes(len, 0xbe7c4, 40, 30, 3)).expect("valid parameters")
}

pub fn generated_sequence(len: usize) -> SeqPrefix {
    decode(&generated_code(len))
}

pub fn fibonacci(len: usize) -> SeqPrefix {
    catalog::emit("fibonacci", len).expect("catalog entry")
}
