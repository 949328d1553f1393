use std::fmt;
use std::io::{self, Read, Write};

use gcdmorph::catalog::CatalogEntry;
use gcdmorph::validator::{C1Witness, Certificate, MorphicWitness, Verdict};
use gcdmorph::{CodePrefix, EncodeFailure, PosInt, SeqPrefix};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Sequence,
    Code,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Sequence => "sequence",
            Role::Code => "code",
        })
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
    Io(io::Error),
    Encode(EncodeFailureJson),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => exit::USAGE,
            Failure::Data(_) => exit::DATA,
            Failure::Io(_) => exit::IO,
            Failure::Encode(_) => exit::ENCODE_FAILED,
        }
    }

    /// Text written to stderr. Encode failures are a single JSON line.
    pub fn render(&self) -> String {
        match self {
            Failure::Usage(msg) => format!("gcdm: usage: {msg}"),
            Failure::Data(msg) => format!("gcdm: malformed input: {msg}"),
            Failure::Io(e) => format!("gcdm: i/o error: {e}"),
            Failure::Encode(e) => to_json(e),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("JSON views serialize")
}

#[derive(Debug, Serialize)]
pub struct EncodeFailureJson {
    kind: &'static str,
    n: usize,
    numerator: String,
    denominator: String,
}

impl From<&EncodeFailure> for EncodeFailureJson {
    fn from(e: &EncodeFailure) -> Self {
        EncodeFailureJson {
            kind: "encode",
            n: e.index,
            numerator: e.numerator.to_string(),
            denominator: e.denominator.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    C1 { n: usize, k: usize, g: String },
    Morphic { n: usize, m: usize, got: String, expected: String },
}

impl From<&C1Witness> for Witness {
    fn from(w: &C1Witness) -> Self {
        Witness::C1 { n: w.n, k: w.k, g: w.g.to_string() }
    }
}

impl From<&MorphicWitness> for Witness {
    fn from(w: &MorphicWitness) -> Self {
        Witness::Morphic { n: w.n, m: w.m, got: w.got.to_string(), expected: w.expected.to_string() }
    }
}

#[derive(Serialize)]
struct Ok {
    ok: bool,
}

const PASS: Ok = Ok { ok: true };

#[derive(Serialize)]
#[serde(untagged)]
enum Step {
    Pass(Ok),
    Encode(EncodeFailureJson),
    Witness(Witness),
}

#[derive(Serialize)]
struct CertificateJson {
    kind: &'static str,
    ok: bool,
    encode: Step,
    c1: Option<Step>,
    morphic: Step,
    consistent: bool,
}

pub fn certificate_json(cert: &Certificate) -> String {
    fn step<W>(v: &Verdict<W>) -> Step
    where
        for<'w> Witness: From<&'w W>,
    {
        match v {
            Verdict::Pass => Step::Pass(PASS),
            Verdict::Fail(w) => Step::Witness(Witness::from(w)),
        }
    }
    to_json(&CertificateJson {
        kind: "certify",
        ok: cert.is_gcd_morphic(),
        encode: match &cert.encoding {
            Result::Ok(_) => Step::Pass(PASS),
            Err(e) => Step::Encode(e.into()),
        },
        c1: cert.c1.as_ref().map(step),
        morphic: step(&cert.morphic),
        consistent: cert.consistent,
    })
}

#[derive(Debug, Serialize)]
pub struct GenMeta {
    pub rng: &'static str,
    pub seed: String,
    pub length: String,
    pub primes: String,
    pub chains: String,
    #[serde(rename = "max-exp")]
    pub max_exp: String,
}

#[derive(Serialize)]
struct PrefixJson<'a> {
    role: Role,
    values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<&'a GenMeta>,
}

#[derive(Serialize)]
struct EntryJson<'a> {
    name: &'a str,
    description: &'a str,
    expected_morphic: bool,
    sample: &'a str,
}

pub struct Output<'a> {
    sink: &'a mut dyn Write,
    json: bool,
}

impl<'a> Output<'a> {
    pub fn new(sink: &'a mut dyn Write, json: bool) -> Self {
        Output { sink, json }
    }

    pub fn line(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.sink, "{text}")
    }

    pub fn prefix(&mut self, role: Role, values: &[PosInt], meta: Option<&GenMeta>) -> io::Result<()> {
        if self.json {
            let values = values.iter().map(|v| v.to_string()).collect();
            return self.line(&to_json(&PrefixJson { role, values, meta }));
        }
        let mut w = io::BufWriter::new(&mut *self.sink);
        if let Some(m) = meta {
            writeln!(
                w,
                "# rng={} seed={} length={} primes={} chains={} max-exp={}",
                m.rng, m.seed, m.length, m.primes, m.chains, m.max_exp
            )?;
        }
        for v in values {
            writeln!(w, "{v}")?;
        }
        w.flush()
    }

    /// Writes `{"ok":true}` or the witness and returns the matching exit code.
    pub fn verdict(&mut self, witness: Option<Witness>) -> Result<u8, Failure> {
        match witness {
            None => {
                self.line(&to_json(&PASS))?;
                Result::Ok(exit::OK)
            }
            Some(w) => {
                self.line(&to_json(&w))?;
                Result::Ok(exit::CHECK_FAILED)
            }
        }
    }

    pub fn catalog(&mut self, entries: &[CatalogEntry]) -> io::Result<()> {
        if self.json {
            let list: Vec<EntryJson<'_>> = entries
                .iter()
                .map(|e| EntryJson {
                    name: e.name,
                    description: e.description,
                    expected_morphic: e.expected_morphic,
                    sample: e.sample,
                })
                .collect();
            return self.line(&to_json(&list));
        }
        for e in entries {
            let flag = if e.expected_morphic { "morphic" } else { "not-morphic" };
            writeln!(self.sink, "{}\t{}\t{}", e.name, flag, e.description)?;
        }
        Result::Ok(())
    }
}

#[derive(Deserialize)]
struct PrefixInput {
    role: Option<Role>,
    values: Vec<Value>,
}

fn parse_values(text: &str, expected: Role) -> Result<Vec<PosInt>, Failure> {
    if text.trim_start().starts_with('{') {
        let doc: PrefixInput = serde_json::from_str(text).map_err(|e| Failure::Data(format!("JSON input: {e}")))?;
        if let Some(role) = doc.role {
            if role != expected {
                return Err(Failure::Data(format!("expected a {expected}, got a {role}")));
            }
        }
        return doc
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let token = match v {
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.to_string(),
                    other => other.to_string(),
                };
                token.parse::<PosInt>().map_err(|e| Failure::Data(format!("value {}: {e}", i + 1)))
            })
            .collect();
    }
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(lineno, token)| token.parse::<PosInt>().map_err(|e| Failure::Data(format!("line {lineno}: {e}"))))
        .collect()
}

fn read_values(stdin: &mut dyn Read, role: Role) -> Result<Vec<PosInt>, Failure> {
    let mut bytes = Vec::new();
    stdin.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes).map_err(|_| Failure::Data("input is not UTF-8".into()))?;
    let values = parse_values(&text, role)?;
    if values.is_empty() {
        return Err(Failure::Data(format!("empty {role}")));
    }
    Result::Ok(values)
}

pub fn read_sequence(stdin: &mut dyn Read) -> Result<SeqPrefix, Failure> {
    SeqPrefix::new(read_values(stdin, Role::Sequence)?).map_err(|e| Failure::Data(e.to_string()))
}

pub fn read_code(stdin: &mut dyn Read) -> Result<CodePrefix, Failure> {
    CodePrefix::new(read_values(stdin, Role::Code)?).map_err(|e| Failure::Data(e.to_string()))
}
