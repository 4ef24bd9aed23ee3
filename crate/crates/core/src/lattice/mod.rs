//! Finite orthocomplemented lattices.
//!
//! An [`OrthoLattice`] is immutable once validated. The order is kept as two
//! bit matrices (up-sets and down-sets per element); binary meet and join are
//! computed once during validation, since that pass has to establish their
//! existence anyway.

mod catalog;
mod dot;
mod iso;
mod spec;

pub use catalog::{benzene, boolean, catalog, catalog_with_limit, chain2, mo, LatticeKind};
pub use dot::export_dot;
pub use iso::find_iso;
pub use spec::{validate, validate_with_limit, LatticeSpec, DEFAULT_MAX_ELEMENTS};

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A triple `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistributivityWitness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug)]
pub struct OrthoLattice {
    name: String,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    /// `up[x]` = { y : x ≤ y }
    up: Vec<BitSet>,
    /// `down[x]` = { y : y ≤ x }
    down: Vec<BitSet>,
    ortho: Vec<usize>,
    bottom: usize,
    top: usize,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl PartialEq for OrthoLattice {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up && self.ortho == other.ortho
    }
}

impl Eq for OrthoLattice {}

impl OrthoLattice {
    /// Builds and validates a lattice from element labels, a generating
    /// relation (pairs `x ≤ y`, closed reflexively and transitively) and an
    /// orthocomplement table.
    pub fn from_relation(
        name: impl Into<String>,
        labels: Vec<String>,
        pairs: &[(usize, usize)],
        ortho: Vec<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Spec("a lattice needs at least one element".into()));
        }
        let mut label_index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }

        let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::Spec(format!("relation pair ({x}, {y}) out of range")));
            }
            up[x].insert(y);
        }
        // Warshall on rows: if i ≤ k then everything above k is above i.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAPoset(format!(
                        "{} ≤ {} and {} ≤ {} with {} ≠ {}",
                        labels[i], labels[j], labels[j], labels[i], labels[i], labels[j]
                    )));
                }
            }
        }
        let mut down = vec![BitSet::new(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }

        let up_count: Vec<usize> = up.iter().map(BitSet::count).collect();
        let down_count: Vec<usize> = down.iter().map(BitSet::count).collect();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let j = least_of(&up[x].intersection(&up[y]), &up, &up_count).ok_or_else(|| {
                    Error::NotALattice {
                        kind: "join",
                        x: labels[x].clone(),
                        y: labels[y].clone(),
                    }
                })?;
                let m = least_of(&down[x].intersection(&down[y]), &down, &down_count)
                    .ok_or_else(|| Error::NotALattice {
                        kind: "meet",
                        x: labels[x].clone(),
                        y: labels[y].clone(),
                    })?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        let bottom = (0..n).find(|&i| up_count[i] == n).ok_or_else(|| {
            Error::NotALattice {
                kind: "bottom",
                x: "-".into(),
                y: "-".into(),
            }
        })?;
        let top = (0..n).find(|&i| down_count[i] == n).ok_or_else(|| {
            Error::NotALattice {
                kind: "top",
                x: "-".into(),
                y: "-".into(),
            }
        })?;

        if ortho.len() != n {
            return Err(Error::BadOrtho(format!(
                "ortho table has {} entries for {n} elements",
                ortho.len()
            )));
        }
        for (x, &ox) in ortho.iter().enumerate() {
            if ox >= n {
                return Err(Error::BadOrtho(format!("ortho({}) out of range", labels[x])));
            }
        }
        for x in 0..n {
            let ox = ortho[x];
            if ortho[ox] != x {
                return Err(Error::BadOrtho(format!(
                    "not an involution: ortho(ortho({})) = {}",
                    labels[x], labels[ortho[ox]]
                )));
            }
        }
        for x in 0..n {
            for y in up[x].iter() {
                if !up[ortho[y]].contains(ortho[x]) {
                    return Err(Error::BadOrtho(format!(
                        "not order-reversing: {} ≤ {} but ortho({}) = {} is not ≤ ortho({}) = {}",
                        labels[x], labels[y], labels[y], labels[ortho[y]], labels[x], labels[ortho[x]]
                    )));
                }
            }
        }
        for x in 0..n {
            let ox = ortho[x];
            if meet[x * n + ox] != bottom || join[x * n + ox] != top {
                return Err(Error::BadOrtho(format!(
                    "complement law fails at {}: meet with {} is {}, join is {}",
                    labels[x], labels[ox], labels[meet[x * n + ox]], labels[join[x * n + ox]]
                )));
            }
        }

        Ok(OrthoLattice {
            name: name.into(),
            labels,
            label_index,
            up,
            down,
            ortho,
            bottom,
            top,
            join,
            meet,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.label_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn ortho(&self, x: usize) -> usize {
        self.ortho[x]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    /// Join of any finite family; the empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of any finite family; the empty meet is top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    /// Cover pairs `(x, y)` with `x ⋖ y`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = self.up[x]
                    .intersection(&self.down[y])
                    .iter()
                    .any(|z| z != x && z != y);
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Length of the longest chain from bottom to `x`.
    pub fn rank(&self, x: usize) -> usize {
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&i| self.down[i].count());
        let mut rank = vec![0usize; self.len()];
        for &i in &order {
            rank[i] = self.down[i]
                .iter()
                .filter(|&j| j != i)
                .map(|j| rank[j] + 1)
                .max()
                .unwrap_or(0);
        }
        rank[x]
    }

    pub fn distributivity_witness(&self) -> Option<DistributivityWitness> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some(DistributivityWitness { a, b, c, lhs, rhs });
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// A pair `a ≤ b` violating `b = a ∨ (a' ∧ b)`, if any.
    pub fn orthomodularity_witness(&self) -> Option<(usize, usize)> {
        for a in self.elements() {
            for b in self.up[a].iter() {
                if self.join(a, self.meet(self.ortho(a), b)) != b {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_orthomodular(&self) -> bool {
        self.orthomodularity_witness().is_none()
    }

    pub fn to_spec(&self) -> LatticeSpec {
        LatticeSpec {
            name: self.name.clone(),
            elements: self.labels.clone(),
            leq: None,
            covers: Some(
                self.covers()
                    .into_iter()
                    .map(|(x, y)| (self.labels[x].clone(), self.labels[y].clone()))
                    .collect(),
            ),
            ortho: self
                .elements()
                .map(|x| (self.labels[x].clone(), self.labels[self.ortho[x]].clone()))
                .collect(),
        }
    }
}

/// The member `u` of `set` whose own row contains all of `set`, if any.
/// Only the member with the largest row can qualify.
fn least_of(set: &BitSet, rows: &[BitSet], counts: &[usize]) -> Option<usize> {
    let cand = set.iter().max_by_key(|&u| (counts[u], std::cmp::Reverse(u)))?;
    set.is_subset(&rows[cand]).then_some(cand)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_complement_laws() {
        let b2 = boolean(2).unwrap();
        let a = b2.index_of("a").unwrap();
        let a_ = b2.index_of("a'").unwrap();
        assert_eq!(b2.join(a, a_), b2.top());
        assert_eq!(b2.meet(a, a_), b2.bottom());
    }

    #[test]
    fn mo2_atoms() {
        let l = mo(2).unwrap();
        let p = l.index_of("p").unwrap();
        let q = l.index_of("q").unwrap();
        assert_eq!(l.meet(p, q), l.bottom());
        assert_eq!(l.join(p, q), l.top());
    }

    #[test]
    fn join_with_bottom_is_identity() {
        for l in [boolean(3).unwrap(), mo(3).unwrap(), benzene()] {
            for x in l.elements() {
                assert_eq!(l.join(x, l.bottom()), x);
                assert_eq!(l.meet(x, l.top()), x);
            }
        }
    }

    #[test]
    fn lattice_laws_hold_exhaustively() {
        for l in [boolean(3).unwrap(), mo(3).unwrap(), benzene(), chain2()] {
            for x in l.elements() {
                assert_eq!(l.join(x, x), x);
                for y in l.elements() {
                    assert_eq!(l.join(x, y), l.join(y, x));
                    assert_eq!(l.join(x, l.meet(x, y)), x, "absorption");
                    assert_eq!(l.ortho(l.join(x, y)), l.meet(l.ortho(x), l.ortho(y)), "De Morgan");
                    for z in l.elements() {
                        assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
                        assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn distributivity() {
        for n in 1..=4 {
            assert!(boolean(n).unwrap().is_distributive(), "B{n}");
        }
        for n in 2..=5 {
            assert!(!mo(n).unwrap().is_distributive(), "MO{n}");
        }
        assert!(mo(1).unwrap().is_distributive());
        let o6 = benzene();
        let w = o6.distributivity_witness().expect("O6 is not distributive");
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn mo2_named_witness() {
        let l = mo(2).unwrap();
        let (p, p_, q) = (
            l.index_of("p").unwrap(),
            l.index_of("p'").unwrap(),
            l.index_of("q").unwrap(),
        );
        // q ∧ (p ∨ p') = q, (q ∧ p) ∨ (q ∧ p') = 0
        assert_eq!(l.meet(q, l.join(p, p_)), q);
        assert_eq!(l.join(l.meet(q, p), l.meet(q, p_)), l.bottom());
        let w = l.distributivity_witness().unwrap();
        assert_eq!(l.meet(w.a, l.join(w.b, w.c)), w.lhs);
        assert_eq!(l.join(l.meet(w.a, w.b), l.meet(w.a, w.c)), w.rhs);
    }

    #[test]
    fn benzene_is_not_orthomodular() {
        let o6 = benzene();
        // brute-force scan of a ≤ b ⇒ b = a ∨ (a' ∧ b)
        let mut failures = 0;
        for a in o6.elements() {
            for b in o6.elements() {
                if o6.leq(a, b) && o6.join(a, o6.meet(o6.ortho(a), b)) != b {
                    failures += 1;
                }
            }
        }
        assert!(failures > 0);
        assert!(!o6.is_orthomodular());
        assert!(mo(2).unwrap().is_orthomodular());
        assert!(boolean(3).unwrap().is_orthomodular());
    }

    #[test]
    fn covers_counts() {
        assert_eq!(boolean(1).unwrap().covers().len(), 1);
        assert_eq!(boolean(2).unwrap().covers().len(), 4);
        assert_eq!(mo(2).unwrap().covers().len(), 8);
        assert_eq!(boolean(3).unwrap().covers().len(), 12);
    }

    #[test]
    fn antisymmetry_failure_is_reported() {
        let labels = vec!["0".to_string(), "x".to_string(), "1".to_string()];
        let err = OrthoLattice::from_relation("bad", labels, &[(0, 1), (1, 0), (1, 2)], vec![2, 1, 0])
            .unwrap_err();
        assert!(matches!(err, Error::NotAPoset(_)));
    }

    #[test]
    fn missing_join_is_reported() {
        // two maximal elements: no top
        let labels: Vec<String> = ["0", "x", "y"].iter().map(|s| s.to_string()).collect();
        let err =
            OrthoLattice::from_relation("v", labels, &[(0, 1), (0, 2)], vec![0, 2, 1]).unwrap_err();
        assert!(matches!(err, Error::NotALattice { kind: "join", .. }));
    }

    #[test]
    fn rank_of_boolean_elements() {
        let b3 = boolean(3).unwrap();
        for x in b3.elements() {
            assert_eq!(b3.rank(x), (x as u32).count_ones() as usize);
        }
    }
}
