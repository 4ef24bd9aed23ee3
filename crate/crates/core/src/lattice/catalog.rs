//! Built-in lattices: Boolean algebras, the modular ortholattices MO_n, the
//! benzene ring O6, and the two-element chain.

use super::OrthoLattice;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_BOOLEAN: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    Boolean,
    Mo,
    Benzene,
    Chain2,
}

impl std::str::FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boolean" => Ok(LatticeKind::Boolean),
            "mo" => Ok(LatticeKind::Mo),
            "benzene" => Ok(LatticeKind::Benzene),
            "chain2" => Ok(LatticeKind::Chain2),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

pub fn catalog(kind: LatticeKind, param: usize) -> Result<OrthoLattice> {
    catalog_with_limit(kind, param, DEFAULT_MAX_BOOLEAN)
}

pub fn catalog_with_limit(kind: LatticeKind, param: usize, max_boolean: usize) -> Result<OrthoLattice> {
    match kind {
        LatticeKind::Boolean => {
            if param == 0 || param > max_boolean {
                return Err(Error::ParamTooLarge {
                    kind: "boolean",
                    param,
                    allowed: format!("1..={max_boolean}"),
                });
            }
            boolean_unchecked(param)
        }
        LatticeKind::Mo => mo(param),
        LatticeKind::Benzene => Ok(benzene()),
        LatticeKind::Chain2 => Ok(chain2()),
    }
}

/// The power set of an `n`-element set. Element `i` is the subset with bit
/// mask `i`, so index 0 is the empty set and `2^n - 1` the whole set.
///
/// Labels: `0` and `1` for the bounds; `a`/`a'` when `n = 2`; otherwise the
/// letters of the atoms contained (`a`, `bc`, ...).
pub fn boolean(n: usize) -> Result<OrthoLattice> {
    catalog(LatticeKind::Boolean, n)
}

fn boolean_unchecked(n: usize) -> Result<OrthoLattice> {
    let size = 1usize << n;
    let full = size - 1;
    let labels = (0..size)
        .map(|mask| match mask {
            0 => "0".to_string(),
            m if m == full => "1".to_string(),
            1 if n == 2 => "a".to_string(),
            2 if n == 2 => "a'".to_string(),
            m => (0..n)
                .filter(|b| m >> b & 1 == 1)
                .map(|b| (b'a' + b as u8) as char)
                .collect(),
        })
        .collect();
    let mut pairs = Vec::new();
    for x in 0..size {
        for b in 0..n {
            if x >> b & 1 == 0 {
                pairs.push((x, x | 1 << b));
            }
        }
    }
    let ortho = (0..size).map(|x| full ^ x).collect();
    OrthoLattice::from_relation(format!("B{n}"), labels, &pairs, ortho)
}

/// MO_n: bottom, `n` pairs of incomparable atoms `x`/`x'`, top.
pub fn mo(n: usize) -> Result<OrthoLattice> {
    if n == 0 {
        return Err(Error::ParamTooLarge {
            kind: "mo",
            param: 0,
            allowed: ">= 1".into(),
        });
    }
    const NAMES: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];
    let top = 2 * n + 1;
    let mut labels = vec!["0".to_string()];
    for k in 0..n {
        let base = NAMES.get(k).map(|s| s.to_string()).unwrap_or_else(|| format!("x{k}"));
        labels.push(base.clone());
        labels.push(format!("{base}'"));
    }
    labels.push("1".to_string());
    let mut pairs = Vec::new();
    let mut ortho = vec![0; top + 1];
    ortho[0] = top;
    ortho[top] = 0;
    for atom in 1..top {
        pairs.push((0, atom));
        pairs.push((atom, top));
        ortho[atom] = if atom % 2 == 1 { atom + 1 } else { atom - 1 };
    }
    OrthoLattice::from_relation(format!("MO{n}"), labels, &pairs, ortho)
}

/// The benzene ring O6: `0 < a < b < 1`, `0 < b' < a' < 1`.
pub fn benzene() -> OrthoLattice {
    let labels = ["0", "a", "b", "b'", "a'", "1"].iter().map(|s| s.to_string()).collect();
    let pairs = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)];
    OrthoLattice::from_relation("O6", labels, &pairs, vec![5, 4, 3, 2, 1, 0])
        .expect("benzene ring is an ortholattice")
}

pub fn chain2() -> OrthoLattice {
    boolean_unchecked(1).expect("two-element chain")
}
