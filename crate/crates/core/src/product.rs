//! Products of finite logics with all tuples having a zero component
//! identified to a single bottom.
//!
//! The same type covers the repeated product `E × … × E` and heterogeneous
//! families `E_0 × … × E_{κ-1}`; the repeated case is just a list of equal
//! factors.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::bitset::BitSet;
use crate::downset::DownSet;
use crate::error::{Error, Result};
use crate::lattice::OrthoLattice;

pub const DEFAULT_MAX_POSET: usize = 4096;

/// An element of the product after zero-identification.
///
/// `Vector` never holds a factor bottom; such tuples are collapsed to
/// `Bottom` by [`ProductPoset::tuple`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PTuple {
    Bottom,
    Vector(Vec<usize>),
}

#[derive(Debug)]
pub struct ProductPoset {
    factors: Vec<OrthoLattice>,
    tuples: Vec<PTuple>,
    index: HashMap<PTuple, usize>,
    /// `down[i]` = { j : tuples[j] ≤ tuples[i] }
    down: Vec<BitSet>,
    /// `up[i]` = { j : tuples[i] ≤ tuples[j] }
    up: Vec<BitSet>,
    top: usize,
    pub(crate) star_singletons: OnceLock<Vec<DownSet>>,
}

impl Clone for ProductPoset {
    fn clone(&self) -> Self {
        ProductPoset {
            factors: self.factors.clone(),
            tuples: self.tuples.clone(),
            index: self.index.clone(),
            down: self.down.clone(),
            up: self.up.clone(),
            top: self.top,
            star_singletons: self.star_singletons.clone(),
        }
    }
}

impl PartialEq for ProductPoset {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

/// `1 + Π (|E_α| - 1)`, saturating.
pub fn projected_size(factors: &[OrthoLattice]) -> u128 {
    factors
        .iter()
        .fold(1u128, |acc, f| acc.saturating_mul(f.len().saturating_sub(1) as u128))
        .saturating_add(1)
}

pub fn build_product(factors: Vec<OrthoLattice>) -> Result<ProductPoset> {
    build_product_with_limit(factors, DEFAULT_MAX_POSET)
}

pub fn build_product_with_limit(factors: Vec<OrthoLattice>, limit: usize) -> Result<ProductPoset> {
    if factors.is_empty() {
        return Err(Error::MismatchedInputs("a product needs at least one factor".into()));
    }
    let projected = projected_size(&factors);
    if projected > limit as u128 {
        return Err(Error::CarrierTooLarge { projected, limit });
    }

    // lexicographic enumeration of nonzero vectors, bottom first
    let nonzero: Vec<Vec<usize>> = factors
        .iter()
        .map(|f| f.elements().filter(|&x| x != f.bottom()).collect())
        .collect();
    let mut tuples = vec![PTuple::Bottom];
    if nonzero.iter().all(|v| !v.is_empty()) {
        let mut digits = vec![0usize; factors.len()];
        loop {
            tuples.push(PTuple::Vector(
                digits.iter().zip(&nonzero).map(|(&d, v)| v[d]).collect(),
            ));
            let mut pos = factors.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < nonzero[pos].len() {
                    break;
                }
                digits[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }

    let n = tuples.len();
    let index: HashMap<PTuple, usize> =
        tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let leq = |a: &PTuple, b: &PTuple| match (a, b) {
        (PTuple::Bottom, _) => true,
        (_, PTuple::Bottom) => false,
        (PTuple::Vector(x), PTuple::Vector(y)) => {
            x.iter().zip(y).zip(&factors).all(|((&xi, &yi), f)| f.leq(xi, yi))
        }
    };
    let mut down = vec![BitSet::new(n); n];
    let mut up = vec![BitSet::new(n); n];
    for i in 0..n {
        for j in 0..n {
            if leq(&tuples[j], &tuples[i]) {
                down[i].insert(j);
                up[j].insert(i);
            }
        }
    }
    let top_vec = PTuple::Vector(factors.iter().map(|f| f.top()).collect());
    let top = index.get(&top_vec).copied().unwrap_or(0);

    Ok(ProductPoset {
        factors,
        tuples,
        index,
        down,
        up,
        top,
        star_singletons: OnceLock::new(),
    })
}

impl ProductPoset {
    pub fn factors(&self) -> &[OrthoLattice] {
        &self.factors
    }

    /// The number of factors (κ).
    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[PTuple] {
        &self.tuples
    }

    pub fn get(&self, i: usize) -> &PTuple {
        &self.tuples[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn index_of(&self, t: &PTuple) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Builds a canonical tuple from raw components, collapsing to `Bottom`
    /// when any component is its factor's bottom.
    pub fn tuple(&self, components: &[usize]) -> Result<PTuple> {
        if components.len() != self.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                found: components.len(),
            });
        }
        for (&c, f) in components.iter().zip(&self.factors) {
            if c >= f.len() {
                return Err(Error::UnknownLabel(format!("element #{c} of {}", f.name())));
            }
        }
        if components.iter().zip(&self.factors).any(|(&c, f)| c == f.bottom()) {
            Ok(PTuple::Bottom)
        } else {
            Ok(PTuple::Vector(components.to_vec()))
        }
    }

    /// Index of the tuple with the given raw components.
    pub fn tuple_index(&self, components: &[usize]) -> Result<usize> {
        let t = self.tuple(components)?;
        Ok(self.index[&t])
    }

    /// Components of a tuple; `Bottom` reads as all factor bottoms.
    pub fn components(&self, i: usize) -> Vec<usize> {
        match &self.tuples[i] {
            PTuple::Bottom => self.factors.iter().map(|f| f.bottom()).collect(),
            PTuple::Vector(v) => v.clone(),
        }
    }

    pub fn component(&self, i: usize, alpha: usize) -> usize {
        match &self.tuples[i] {
            PTuple::Bottom => self.factors[alpha].bottom(),
            PTuple::Vector(v) => v[alpha],
        }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn down(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    pub fn up(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    /// Componentwise meet, collapsing to bottom on any zero component.
    pub fn meet_tuple(&self, x: &PTuple, y: &PTuple) -> PTuple {
        match (x, y) {
            (PTuple::Vector(a), PTuple::Vector(b)) => {
                let comps: Vec<usize> = a
                    .iter()
                    .zip(b)
                    .zip(&self.factors)
                    .map(|((&ai, &bi), f)| f.meet(ai, bi))
                    .collect();
                self.tuple(&comps).expect("components in range")
            }
            _ => PTuple::Bottom,
        }
    }

    pub fn meet_index(&self, x: usize, y: usize) -> usize {
        self.index[&self.meet_tuple(&self.tuples[x], &self.tuples[y])]
    }

    /// The tuple with `a` at coordinate `alpha` and the factor tops
    /// elsewhere; a factor bottom yields `Bottom`.
    pub fn embed_i_alpha(&self, alpha: usize, a: usize) -> Result<PTuple> {
        if alpha >= self.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                found: alpha + 1,
            });
        }
        let comps: Vec<usize> = self
            .factors
            .iter()
            .enumerate()
            .map(|(b, f)| if b == alpha { a } else { f.top() })
            .collect();
        self.tuple(&comps)
    }

    pub fn embed_index(&self, alpha: usize, a: usize) -> Result<usize> {
        let t = self.embed_i_alpha(alpha, a)?;
        Ok(self.index[&t])
    }

    /// `"(a,1)"` style label; the bottom tuple is `"bottom"`.
    pub fn label(&self, i: usize) -> String {
        TupleDisplay { poset: self, index: i }.to_string()
    }

    /// Parses a label produced by [`label`](Self::label).
    pub fn parse_label(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        if text == "bottom" {
            return Ok(0);
        }
        let inner = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::UnknownLabel(text.to_string()))?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != self.arity() {
            return Err(Error::Arity {
                expected: self.arity(),
                found: parts.len(),
            });
        }
        let comps = parts
            .iter()
            .zip(&self.factors)
            .map(|(p, f)| f.index_of(p))
            .collect::<Result<Vec<_>>>()?;
        self.tuple_index(&comps)
    }
}

struct TupleDisplay<'a> {
    poset: &'a ProductPoset,
    index: usize,
}

impl fmt::Display for TupleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.poset.tuples[self.index] {
            PTuple::Bottom => write!(f, "bottom"),
            PTuple::Vector(v) => {
                write!(f, "(")?;
                for (k, (&c, fac)) in v.iter().zip(&self.poset.factors).enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", fac.label(c))?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean, chain2, mo};

    fn b2sq() -> ProductPoset {
        build_product(vec![boolean(2).unwrap(), boolean(2).unwrap()]).unwrap()
    }

    #[test]
    fn carrier_sizes() {
        assert_eq!(b2sq().len(), 10);
        assert_eq!(build_product(vec![chain2()]).unwrap().len(), 2);
        assert_eq!(build_product(vec![boolean(2).unwrap(), mo(2).unwrap()]).unwrap().len(), 16);
        let p = build_product(vec![mo(2).unwrap(); 3]).unwrap();
        assert_eq!(p.len(), 1 + 125);
    }

    #[test]
    fn carrier_limit() {
        let err = build_product(vec![boolean(2).unwrap(); 9]).unwrap_err();
        assert_eq!(
            err,
            Error::CarrierTooLarge {
                projected: 1 + 3u128.pow(9),
                limit: DEFAULT_MAX_POSET
            }
        );
    }

    #[test]
    fn bottom_first_and_top_above_all() {
        let p = b2sq();
        assert_eq!(p.get(0), &PTuple::Bottom);
        for i in 0..p.len() {
            assert!(p.leq(0, i));
            assert!(p.leq(i, p.top()));
        }
        assert_eq!(p.label(p.top()), "(1,1)");
    }

    #[test]
    fn meet_examples() {
        let p = b2sq();
        let a1 = p.parse_label("(a,1)").unwrap();
        let a_1 = p.parse_label("(a',1)").unwrap();
        let one_a = p.parse_label("(1,a)").unwrap();
        assert_eq!(p.meet_index(a1, a_1), 0);
        assert_eq!(p.meet_index(a1, p.top()), a1);
        assert_eq!(p.label(p.meet_index(a1, one_a)), "(a,a)");
    }

    #[test]
    fn embeddings() {
        let p = b2sq();
        let b2 = boolean(2).unwrap();
        let a = b2.index_of("a").unwrap();
        assert_eq!(p.label(p.embed_index(0, a).unwrap()), "(a,1)");
        assert_eq!(p.embed_index(1, b2.top()).unwrap(), p.top());
        assert_eq!(p.embed_index(0, b2.bottom()).unwrap(), 0);
    }

    #[test]
    fn zero_component_collapses() {
        let p = b2sq();
        assert_eq!(p.tuple(&[0, 3]).unwrap(), PTuple::Bottom);
        assert!(matches!(p.tuple(&[1]), Err(Error::Arity { .. })));
    }

    #[test]
    fn order_matches_brute_force_componentwise() {
        let p = build_product(vec![boolean(2).unwrap(), mo(2).unwrap()]).unwrap();
        for x in 0..p.len() {
            for y in 0..p.len() {
                let cx = p.components(x);
                let cy = p.components(y);
                let brute = x == 0
                    || (y != 0
                        && cx.iter().zip(&cy).zip(p.factors()).all(|((&a, &b), f)| f.leq(a, b)));
                assert_eq!(p.leq(x, y), brute);
            }
        }
    }

    #[test]
    fn meet_is_glb() {
        let p = build_product(vec![mo(2).unwrap(), boolean(2).unwrap()]).unwrap();
        for x in 0..p.len() {
            for y in 0..p.len() {
                let m = p.meet_index(x, y);
                let lower: Vec<usize> = (0..p.len()).filter(|&z| p.leq(z, x) && p.leq(z, y)).collect();
                assert!(lower.contains(&m));
                assert!(lower.iter().all(|&z| p.leq(z, m)));
            }
        }
    }

    #[test]
    fn every_tuple_is_meet_of_its_coordinate_embeddings() {
        for p in [b2sq(), build_product(vec![boolean(2).unwrap(), mo(2).unwrap(), chain2()]).unwrap()] {
            for i in 0..p.len() {
                let m = (0..p.arity()).fold(p.top(), |acc, alpha| {
                    p.meet_index(acc, p.embed_index(alpha, p.component(i, alpha)).unwrap())
                });
                assert_eq!(m, i);
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        let p = build_product(vec![boolean(2).unwrap(), mo(2).unwrap()]).unwrap();
        for i in 0..p.len() {
            assert_eq!(p.parse_label(&p.label(i)).unwrap(), i);
        }
    }
}
