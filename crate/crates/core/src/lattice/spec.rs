//! JSON lattice-spec files.
//!
//! ```json
//! {
//!   "name": "MO2",
//!   "elements": ["0", "p", "p'", "q", "q'", "1"],
//!   "covers": [["0","p"], ["0","p'"], ["0","q"], ["0","q'"],
//!              ["p","1"], ["p'","1"], ["q","1"], ["q'","1"]],
//!   "ortho": {"0": "1", "p": "p'", "q": "q'"}
//! }
//! ```
//!
//! `leq` may be given instead of (or together with) `covers`; either way the
//! order is the reflexive-transitive closure of all listed pairs. `ortho`
//! entries are symmetric: listing `p -> p'` implies `p' -> p`. Unknown keys
//! are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::OrthoLattice;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ELEMENTS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub name: String,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
    pub ortho: BTreeMap<String, String>,
}

impl LatticeSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Spec(msg) => Error::Spec(format!("{}: {msg}", path.display())),
            other => other,
        })
    }
}

pub fn validate(spec: &LatticeSpec) -> Result<OrthoLattice> {
    validate_with_limit(spec, DEFAULT_MAX_ELEMENTS)
}

pub fn validate_with_limit(spec: &LatticeSpec, max_elements: usize) -> Result<OrthoLattice> {
    let n = spec.elements.len();
    if n > max_elements {
        return Err(Error::LatticeTooLarge {
            size: n,
            limit: max_elements,
        });
    }
    let mut index = BTreeMap::new();
    for (i, l) in spec.elements.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    let lookup = |l: &str| {
        index
            .get(l)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(l.to_string()))
    };

    let mut pairs = Vec::new();
    for (x, y) in spec.leq.iter().flatten().chain(spec.covers.iter().flatten()) {
        pairs.push((lookup(x)?, lookup(y)?));
    }

    let mut ortho: Vec<Option<usize>> = vec![None; n];
    for (x, y) in &spec.ortho {
        let (ix, iy) = (lookup(x)?, lookup(y)?);
        for (from, to) in [(ix, iy), (iy, ix)] {
            match ortho[from] {
                Some(prev) if prev != to => {
                    return Err(Error::BadOrtho(format!(
                        "conflicting ortho for {}: {} and {}",
                        spec.elements[from], spec.elements[prev], spec.elements[to]
                    )))
                }
                _ => ortho[from] = Some(to),
            }
        }
    }
    let ortho = ortho
        .into_iter()
        .enumerate()
        .map(|(i, o)| {
            o.ok_or_else(|| Error::BadOrtho(format!("no ortho given for {}", spec.elements[i])))
        })
        .collect::<Result<Vec<_>>>()?;

    OrthoLattice::from_relation(spec.name.clone(), spec.elements.clone(), &pairs, ortho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{benzene, boolean, mo};

    fn spec(json: &str) -> LatticeSpec {
        LatticeSpec::from_json(json).unwrap()
    }

    #[test]
    fn two_chain_is_b1() {
        let l = validate(&spec(
            r#"{"name":"B1","elements":["0","1"],"covers":[["0","1"]],"ortho":{"0":"1"}}"#,
        ))
        .unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.ortho(l.bottom()), l.top());
        assert!(l.is_distributive());
    }

    #[test]
    fn mo2_from_covers() {
        let l = validate(&spec(
            r#"{"name":"MO2","elements":["0","p","p'","q","q'","1"],
                "covers":[["0","p"],["0","p'"],["0","q"],["0","q'"],
                          ["p","1"],["p'","1"],["q","1"],["q'","1"]],
                "ortho":{"0":"1","p":"p'","q":"q'"}}"#,
        ))
        .unwrap();
        assert_eq!(l.len(), 6);
        assert!(!l.is_distributive());
        assert_eq!(l, mo(2).unwrap().with_name("MO2"));
    }

    #[test]
    fn unknown_keys_rejected() {
        let err = LatticeSpec::from_json(
            r#"{"name":"x","elements":["0"],"ortho":{"0":"0"},"extra":1}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Spec(_)));
    }

    #[test]
    fn unknown_label_rejected() {
        let err = validate(&spec(
            r#"{"name":"x","elements":["0","1"],"leq":[["0","2"]],"ortho":{"0":"1"}}"#,
        ))
        .unwrap_err();
        assert_eq!(err, Error::UnknownLabel("2".into()));
    }

    #[test]
    fn missing_ortho_rejected() {
        let err = validate(&spec(
            r#"{"name":"x","elements":["0","a","1"],"leq":[["0","a"],["a","1"]],"ortho":{"0":"1"}}"#,
        ))
        .unwrap_err();
        assert!(matches!(err, Error::BadOrtho(_)));
    }

    #[test]
    fn limit_is_enforced() {
        let b3 = boolean(3).unwrap();
        let err = validate_with_limit(&b3.to_spec(), 7).unwrap_err();
        assert_eq!(err, Error::LatticeTooLarge { size: 8, limit: 7 });
    }

    /// Every involution on the five elements of N5 fails validation, so no
    /// orthocomplementation exists.
    #[test]
    fn pentagon_admits_no_orthocomplement() {
        let labels = ["0", "a", "b", "c", "1"];
        let covers = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")];
        let mut involutions = Vec::new();
        // all maps f with f∘f = id, by brute force over 5^5 functions
        for code in 0..5usize.pow(5) {
            let f: Vec<usize> = (0..5).map(|i| code / 5usize.pow(i as u32) % 5).collect();
            if (0..5).all(|i| f[f[i]] == i) {
                involutions.push(f);
            }
        }
        assert_eq!(involutions.len(), 26);
        for f in involutions {
            let s = LatticeSpec {
                name: "N5".into(),
                elements: labels.iter().map(|s| s.to_string()).collect(),
                leq: None,
                covers: Some(covers.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()),
                ortho: (0..5).map(|i| (labels[i].to_string(), labels[f[i]].to_string())).collect(),
            };
            let err = validate(&s).unwrap_err();
            assert!(matches!(err, Error::BadOrtho(_)), "{f:?}: {err}");
        }
    }

    #[test]
    fn export_reimport_round_trip() {
        for l in [boolean(1).unwrap(), boolean(3).unwrap(), mo(3).unwrap(), benzene()] {
            let json = l.to_spec().to_json();
            let back = validate(&LatticeSpec::from_json(&json).unwrap()).unwrap();
            assert_eq!(back, l);
            let again = validate(&back.to_spec()).unwrap();
            assert_eq!(again, back);
        }
    }
}
