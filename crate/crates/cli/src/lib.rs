//! `gcdm`: line-oriented front end for the `gcdmorph` library.
//!
//! Input is UTF-8 text with one positive decimal integer per line; blank
//! lines and lines starting with `#` are skipped. A document starting with
//! `{` is read as `{"role": …, "values": […]}` instead.

mod io;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use gcdmorph::catalog::{self, Named};
use gcdmorph::{certify, check_c1, check_gcd_morphic, corrupt, decode, encode, generate, GenParams, RNG_ALGORITHM};

use crate::io::{EncodeFailureJson, Failure, Output, Role, Witness};

pub mod exit {
    pub const OK: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const ENCODE_FAILED: u8 = 2;
    pub const USAGE: u8 = 64;
    pub const DATA: u8 = 65;
    pub const SOFTWARE: u8 = 70;
    pub const IO: u8 = 74;
}

#[derive(Debug, Parser)]
#[command(name = "gcdm", version, about = "Encode, decode, check and generate GCD-morphic sequences")]
struct Cli {
    /// Write sequences as {"role":…,"values":[…]} instead of one value per line.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Read a sequence, write its code. Success does not imply the sequence is GCD-morphic; use `check certify`.
    Encode,
    /// Read a code, write the sequence it encodes.
    Decode,
    #[command(subcommand)]
    Check(Check),
    /// Write a pseudo-random code that satisfies (C1).
    Gen(GenArgs),
    /// Read a code, write a copy that violates (C1).
    Corrupt {
        #[arg(long)]
        seed: u64,
    },
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Read a code; pass when codes at mutually non-dividing indices are coprime.
    C1,
    /// Read a sequence; pass when gcd(F_n, F_m) = F_gcd(n,m) on every pair.
    Morphic,
    /// Read a sequence; encode it, check the code and brute-force the sequence.
    Certify,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    length: u64,
    #[arg(long)]
    seed: u64,
    /// Size of the prime pool (the first K primes).
    #[arg(long, default_value_t = 20, value_name = "K")]
    primes: usize,
    /// Number of prime chains planted.
    #[arg(long, default_value_t = 10, value_name = "C")]
    chains: usize,
    /// Largest exponent of a prime in a single code.
    #[arg(long = "max-exp", default_value_t = 2, value_name = "E")]
    max_exp: u32,
}

#[derive(Debug, Subcommand)]
enum CatalogCmd {
    /// List catalog entries.
    List,
    /// Write a prefix of a named sequence.
    Emit {
        name: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        length: u64,
    },
}

/// Runs the tool and returns its exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut out = Output::new(stdout, cli.json);
    match execute(cli.command, stdin, &mut out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "{}", failure.render());
            failure.exit_code()
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut Output<'_>) -> Result<u8, Failure> {
    match command {
        Command::Encode => {
            let f = io::read_sequence(stdin)?;
            match encode(&f) {
                Ok(c) => out.prefix(Role::Code, c.as_slice(), None)?,
                Err(e) => {
                    return Err(Failure::Encode(EncodeFailureJson::from(&e)));
                }
            }
        }
        Command::Decode => {
            let c = io::read_code(stdin)?;
            out.prefix(Role::Sequence, decode(&c).as_slice(), None)?;
        }
        Command::Check(Check::C1) => {
            let c = io::read_code(stdin)?;
            return out.verdict(check_c1(&c).witness().map(Witness::from));
        }
        Command::Check(Check::Morphic) => {
            let f = io::read_sequence(stdin)?;
            return out.verdict(check_gcd_morphic(&f).witness().map(Witness::from));
        }
        Command::Check(Check::Certify) => {
            let f = io::read_sequence(stdin)?;
            let cert = certify(&f);
            if !cert.consistent {
                out.line(&io::certificate_json(&cert))?;
                return Ok(exit::SOFTWARE);
            }
            if cert.morphic.is_pass() {
                return out.verdict(None);
            }
            out.line(&io::certificate_json(&cert))?;
            return Ok(exit::CHECK_FAILED);
        }
        Command::Gen(args) => {
            let length = usize::try_from(args.length).map_err(|_| Failure::Usage("length too large".into()))?;
            let params = GenParams::with_first_primes(length, args.seed, args.primes, args.chains, args.max_exp);
            let c = generate(&params).map_err(|e| Failure::Usage(e.to_string()))?;
            let meta = io::GenMeta {
                rng: RNG_ALGORITHM,
                seed: args.seed.to_string(),
                length: args.length.to_string(),
                primes: args.primes.to_string(),
                chains: args.chains.to_string(),
                max_exp: args.max_exp.to_string(),
            };
            out.prefix(Role::Code, c.as_slice(), Some(&meta))?;
        }
        Command::Corrupt { seed } => {
            let c = io::read_code(stdin)?;
            let bad = corrupt(&c, seed).map_err(|e| Failure::Data(e.to_string()))?;
            out.prefix(Role::Code, bad.as_slice(), None)?;
        }
        Command::Catalog(CatalogCmd::List) => out.catalog(catalog::list())?,
        Command::Catalog(CatalogCmd::Emit { name, length }) => {
            let named: Named = name.parse().map_err(|e: gcdmorph::Error| Failure::Usage(e.to_string()))?;
            let length = usize::try_from(length).map_err(|_| Failure::Usage("length too large".into()))?;
            let f = named.emit(length).map_err(|e| Failure::Usage(e.to_string()))?;
            out.prefix(Role::Sequence, f.as_slice(), None)?;
        }
    }
    Ok(exit::OK)
}
