//! Verification reports: one entry per law, with the first counterexample.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::downset::DEFAULT_MAX_EXPANSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawEntry {
    pub law: String,
    pub mode: Mode,
    pub seed: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Number of instances evaluated.
    pub checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub seed: u64,
    pub entries: Vec<LawEntry>,
}

/// Accumulates instances of one law; keeps the first failure.
#[derive(Debug)]
pub struct Law {
    name: String,
    mode: Mode,
    checked: u64,
    witness: Option<String>,
}

impl Law {
    pub fn new(name: impl Into<String>, mode: Mode) -> Self {
        Law {
            name: name.into(),
            mode,
            checked: 0,
            witness: None,
        }
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }
}

impl Report {
    pub fn new(subject: impl Into<String>, seed: u64) -> Self {
        Report {
            subject: subject.into(),
            seed,
            entries: Vec::new(),
        }
    }

    pub fn add(&mut self, law: Law) {
        self.entries.push(LawEntry {
            law: law.name,
            mode: law.mode,
            seed: self.seed,
            pass: law.witness.is_none(),
            witness: law.witness,
            checked: law.checked,
        });
    }

    /// Records a single yes/no fact.
    pub fn fact(&mut self, law: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let mut l = Law::new(law, Mode::Exhaustive);
        l.check(ok, witness);
        self.add(l);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn entry(&self, law: &str) -> Option<&LawEntry> {
        self.entries.iter().find(|e| e.law == law)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (seed {})", self.subject, self.seed)?;
        for e in &self.entries {
            write!(
                f,
                "  [{}] {} ({}, {} checked)",
                if e.pass { "pass" } else { "FAIL" },
                e.law,
                e.mode,
                e.checked
            )?;
            if let Some(w) = &e.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random instances per sampled law.
    pub samples: usize,
    /// Largest carrier checked exhaustively.
    pub exhaustive_limit: usize,
    pub max_expansion: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            samples: 200,
            exhaustive_limit: 512,
            max_expansion: DEFAULT_MAX_EXPANSION,
        }
    }
}

impl VerifyOptions {
    pub fn with_seed(seed: u64) -> Self {
        VerifyOptions {
            seed,
            ..Default::default()
        }
    }

    /// Independent stream per law, so adding a law does not perturb others.
    pub fn rng(&self, law: &str) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(law.as_bytes()))
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}
